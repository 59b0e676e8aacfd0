//! Exact enumeration of genus-three plane curves with a fixed generic
//! complex structure.
//!
//! The engine computes, in arbitrary-precision rational arithmetic, the
//! number of irreducible genus-three degree-`d` plane curves through
//! `3d - 4` general points whose normalization carries a fixed generic
//! complex structure, as the symplectic invariant of the plane minus the
//! contribution of degenerate maps. Every intermediate enumerative quantity
//! is exposed: rational curve counts, one-descendant invariants, modified
//! psi-class numbers over one-, two-, and three-component configuration
//! spaces, cuspidal and tacnodal counts, the (3,4)-cusp count by two
//! independent routes, and the symplectic invariants themselves via the
//! composition laws.
//!
//! All operations are pure given the shared [`store::MemoStore`]; results
//! are deterministic regardless of evaluation order, and the store may be
//! persisted to a line-based cache file.

pub mod comb;
pub mod descendant;
pub mod error;
pub mod gw;
pub mod key;
pub mod pipeline;
pub mod rt;
pub mod scalar;
pub mod singular;
pub mod store;
pub mod taut;

pub use error::{Error, Result};
pub use key::{InvariantKey, KeyKind};
pub use scalar::ExactScalar;
pub use store::MemoStore;

/// Re-derives the value of any memoized key from scratch. Used to audit
/// cache reloads: a reloaded store must agree bit-for-bit with recomputation.
pub fn recompute_key(store: &MemoStore, key: &InvariantKey) -> Result<ExactScalar> {
    let params = key.params();
    let p = |idx: usize| -> Result<u32> {
        params
            .get(idx)
            .copied()
            .and_then(|v| u32::try_from(v).ok())
            .ok_or_else(|| Error::Validation(format!("malformed key {key}")))
    };
    match key.kind() {
        KeyKind::Primary => Ok(gw::primary(store, p(0)?, p(1)?, p(2)?)),
        KeyKind::Desc => Ok(descendant::desc_padded(
            store,
            p(0)?,
            p(1)?,
            p(2)?,
            p(3)?,
            p(4)?,
        )),
        KeyKind::Mpsi => Ok(taut::mpsi(store, p(0)?, p(1)?, p(2)?, p(3)?, p(4)?)),
        KeyKind::Rt => {
            let genus = p(0)?;
            let degree = p(1)?;
            let n_free = p(2)?;
            let classes: Vec<u32> = (3..params.len()).map(p).collect::<Result<_>>()?;
            if genus == 0 {
                rt::rigid0(store, degree, &classes, n_free)
            } else {
                let query = rt::RtQuery::new(genus, degree, classes, n_free)?;
                rt::rt(store, &rt::RtOverrides::empty(), &query)
            }
        }
    }
}
