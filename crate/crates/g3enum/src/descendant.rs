//! One-descendant gravitational invariants of the plane.
//!
//! `desc(d, n, i, m)` is the genus-zero invariant with `n` fixed general
//! point constraints and a single free marked point carrying `H^i` times the
//! `m`-th power of the cotangent (psi) class. Evaluation runs the genus-zero
//! topological recursion relation against two reference insertions, after
//! raising the insertion count by inverse-divisor padding when fewer than two
//! non-descendant slots exist:
//!
//! ```text
//! G(d,n,h,i,m) = (1/d) * (G(d,n,h+1,i,m) - G(d,n,h,i+1,m-1))
//! ```
//!
//! Each recursion step trades one psi power for a boundary splitting over
//! degree splits, constraint splits, and the diagonal basis pairs
//! `(1,pt), (H,H), (pt,1)`; the psi exponent strictly decreases, so the
//! recursion terminates. Degree-zero factors evaluate through
//! [`crate::gw::deg0_integral`]; splitting pieces with fewer than three
//! marked points are unstable and count as zero.
//!
//! Only one descendant point is ever carried: the splitting never creates a
//! second psi-carrying point, and every invariant upstream sits at the single
//! evaluation point.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::gw;
use crate::key::InvariantKey;
use crate::scalar::ExactScalar;
use crate::store::MemoStore;

/// Evaluation route through the recursion. All strategies compute the same
/// values; route independence is asserted by tests rather than assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrrStrategy {
    /// Point slots are preferred as reference insertions and padding stops
    /// as soon as two non-descendant slots exist. This is the production
    /// route; its results are memoized in the shared store.
    Canonical,
    /// Divisor slots are preferred as reference insertions.
    DivisorRefs,
    /// Pads one extra divisor slot before applying the recursion.
    DeepPadding,
}

/// `<tau_m(H^i), pt^n>_d`. Zero on dimension mismatch (`i + m != 3d - n`).
pub fn desc(store: &MemoStore, d: u32, n: u32, i: u32, m: u32) -> Result<ExactScalar> {
    if d == 0 {
        return Err(Error::Domain("desc requires d >= 1".into()));
    }
    Ok(desc_padded(store, d, n, 0, i, m))
}

/// Same invariant evaluated along a chosen route, memoized locally so that
/// alternative routes never share intermediate results with the canonical
/// one.
pub fn desc_with_strategy(
    store: &MemoStore,
    d: u32,
    n: u32,
    i: u32,
    m: u32,
    strategy: TrrStrategy,
) -> Result<ExactScalar> {
    if d == 0 {
        return Err(Error::Domain("desc requires d >= 1".into()));
    }
    let eval = Evaluator {
        store,
        strategy,
        local: Some(RefCell::new(HashMap::new())),
    };
    Ok(eval.eval(d, n, 0, i, m))
}

/// Canonical evaluation of the divisor-padded family, shared-store memoized.
pub(crate) fn desc_padded(
    store: &MemoStore,
    d: u32,
    n: u32,
    h: u32,
    i: u32,
    m: u32,
) -> ExactScalar {
    let eval = Evaluator {
        store,
        strategy: TrrStrategy::Canonical,
        local: None,
    };
    eval.eval(d, n, h, i, m)
}

type LocalMemo = RefCell<HashMap<(u32, u32, u32, u32, u32), ExactScalar>>;

struct Evaluator<'a> {
    store: &'a MemoStore,
    strategy: TrrStrategy,
    /// `None` routes memoization to the shared store under `DESC` keys.
    local: Option<LocalMemo>,
}

impl Evaluator<'_> {
    fn eval(&self, d: u32, n: u32, h: u32, i: u32, m: u32) -> ExactScalar {
        if i > 2 {
            return ExactScalar::zero();
        }
        // Divisor insertions are dimension-neutral, so the balance does not
        // involve h.
        if i64::from(i) + i64::from(m) + i64::from(n) != 3 * i64::from(d) {
            return ExactScalar::zero();
        }
        if d == 0 {
            let mut codims = vec![i];
            codims.extend(std::iter::repeat_n(2, n as usize));
            codims.extend(std::iter::repeat_n(1, h as usize));
            return gw::deg0_integral(&codims, m);
        }
        if m == 0 {
            let divisor_factor = ExactScalar::from_bigint(BigInt::from(d).pow(h));
            return gw::primary(self.store, d, n, i) * divisor_factor;
        }

        if let Some(v) = self.lookup(d, n, h, i, m) {
            return v;
        }
        let pad_target = match self.strategy {
            TrrStrategy::DeepPadding => 3,
            _ => 2,
        };
        let value = if n + h < pad_target {
            let raised = self.eval(d, n, h + 1, i, m);
            let shifted = if i < 2 {
                self.eval(d, n, h, i + 1, m - 1)
            } else {
                ExactScalar::zero()
            };
            (raised - shifted) / ExactScalar::from_int(i64::from(d))
        } else {
            self.split(d, n, h, i, m)
        };
        self.insert(d, n, h, i, m, value)
    }

    /// One application of the topological recursion relation.
    fn split(&self, d: u32, n: u32, h: u32, i: u32, m: u32) -> ExactScalar {
        // Two reference insertions; the rest is the splitting pool.
        let (ref_pts, ref_divs) = match self.strategy {
            TrrStrategy::DivisorRefs => {
                let rd = h.min(2);
                (2 - rd, rd)
            }
            _ => {
                let rp = n.min(2);
                (rp, 2 - rp)
            }
        };
        let (pool_pts, pool_divs) = (n - ref_pts, h - ref_divs);

        let mut acc = ExactScalar::zero();
        for d1 in 0..=d {
            let d2 = d - d1;
            for n1 in 0..=pool_pts {
                let n2 = pool_pts - n1;
                let c_pts = binomial(i64::from(pool_pts), i64::from(n1));
                for h1 in 0..=pool_divs {
                    let h2 = pool_divs - h1;
                    let mult = &c_pts * binomial(i64::from(pool_divs), i64::from(h1));
                    for e in 0..=2u32 {
                        let side1 = if d1 == 0 {
                            deg0_descendant_side(i, n1, h1, e, m - 1)
                        } else if e == 0 {
                            // String equation removes the fundamental class.
                            if m >= 2 {
                                self.eval(d1, n1, h1, i, m - 2)
                            } else {
                                ExactScalar::zero()
                            }
                        } else if e == 1 {
                            self.eval(d1, n1, h1 + 1, i, m - 1)
                        } else {
                            self.eval(d1, n1 + 1, h1, i, m - 1)
                        };
                        if side1.is_zero() {
                            continue;
                        }
                        let zeros = u32::from(e == 2);
                        let ones = h2 + ref_divs + u32::from(e == 1);
                        let twos = n2 + ref_pts + u32::from(e == 0);
                        let side2 = gw::plain(self.store, d2, zeros, ones, twos);
                        if side2.is_zero() {
                            continue;
                        }
                        acc += ExactScalar::from_bigint(mult.clone()) * side1 * side2;
                    }
                }
            }
        }
        acc
    }

    fn lookup(&self, d: u32, n: u32, h: u32, i: u32, m: u32) -> Option<ExactScalar> {
        match &self.local {
            Some(local) => local.borrow().get(&(d, n, h, i, m)).cloned(),
            None => self.store.get(&InvariantKey::desc(d, n, h, i, m)),
        }
    }

    fn insert(&self, d: u32, n: u32, h: u32, i: u32, m: u32, value: ExactScalar) -> ExactScalar {
        match &self.local {
            Some(local) => {
                local.borrow_mut().insert((d, n, h, i, m), value.clone());
                value
            }
            None => self.store.bind(InvariantKey::desc(d, n, h, i, m), value),
        }
    }
}

/// Degree-zero side of a splitting: the descendant, `n1` points, `h1`
/// divisors and the diagonal half `H^e` on one unstable-checked component.
fn deg0_descendant_side(i: u32, n1: u32, h1: u32, e: u32, m: u32) -> ExactScalar {
    let k = 2 + n1 + h1;
    if k < 3 || m != k - 3 {
        return ExactScalar::zero();
    }
    if i + 2 * n1 + h1 + e == 2 {
        ExactScalar::one()
    } else {
        ExactScalar::zero()
    }
}
