//! Symplectic invariants of the plane for genus up to three.
//!
//! A query carries classes `H^c` at fixed domain points plus free point
//! constraints. Genus is reduced by handle trading: pinching one handle
//! replaces it by two fixed points carrying the diagonal of the plane,
//! summed over the Kunneth basis `(1,pt), (H,H), (pt,1)`. The resulting
//! genus-zero invariant with `k >= 3` fixed points is evaluated by
//! degenerating the domain onto a caterpillar of three-pointed components:
//! the first component carries fixed points 1 and 2, each middle component
//! one fixed point, the last the final two; every node inserts a diagonal
//! basis pair. Each component then holds exactly three special points, so
//! its factor is a plain genus-zero invariant reduced by string and divisor,
//! with degree-zero components evaluated as classical triple integrals.
//!
//! Fixed points carrying the fundamental class are retained in the domain
//! tree (they rigidify) and vanish inside component invariants except in
//! three-pointed degree-zero integrals.
//!
//! An override table keyed by `(genus, degree)` may supply externally
//! computed values for the canonical queries (no fixed classes, the full
//! complement of free points); it is consulted before computing.

use std::collections::HashMap;
use std::path::Path;

use crate::comb::multinomial;
use crate::error::{Error, Result};
use crate::gw;
use crate::key::InvariantKey;
use crate::scalar::ExactScalar;
use crate::store::MemoStore;

/// One symplectic-invariant query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RtQuery {
    pub genus: u32,
    pub degree: u32,
    /// Codimensions of the classes at fixed domain points, each 0..=2.
    pub fixed_classes: Vec<u32>,
    /// Count of free point constraints.
    pub n_free: u32,
}

impl RtQuery {
    pub fn new(genus: u32, degree: u32, fixed_classes: Vec<u32>, n_free: u32) -> Result<Self> {
        if genus > 3 {
            return Err(Error::Validation(format!(
                "genus {genus} out of range 0..=3"
            )));
        }
        if degree == 0 {
            return Err(Error::Validation("degree must be >= 1".into()));
        }
        if let Some(&c) = fixed_classes.iter().find(|&&c| c > 2) {
            return Err(Error::Validation(format!(
                "fixed class codimension {c} out of range 0..=2"
            )));
        }
        Ok(RtQuery {
            genus,
            degree,
            fixed_classes,
            n_free,
        })
    }

    /// Dimension balance: the fixed codimensions plus the free-point count
    /// must equal `3d + 2(1 - g)`.
    pub fn balanced(&self) -> bool {
        let lhs = self
            .fixed_classes
            .iter()
            .map(|&c| i64::from(c))
            .sum::<i64>()
            + i64::from(self.n_free);
        lhs == 3 * i64::from(self.degree) + 2 * (1 - i64::from(self.genus))
    }
}

/// Free-point count of the canonical genus-`g` degree-`d` query, when it is
/// representable.
pub fn canonical_free_points(genus: u32, degree: u32) -> Option<u32> {
    let n = 3 * i64::from(degree) + 2 * (1 - i64::from(genus));
    u32::try_from(n).ok()
}

/// Externally supplied values for canonical queries, keyed `(genus, degree)`.
#[derive(Clone, Debug, Default)]
pub struct RtOverrides {
    map: HashMap<(u32, u32), ExactScalar>,
}

impl RtOverrides {
    pub fn empty() -> Self {
        RtOverrides::default()
    }

    /// Loads lines of the form `g d value`, where `value` is an exact
    /// integer or rational. Blank lines and `#` comments are skipped.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut map = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("override line {}: {what}", lineno + 1));
            let mut fields = line.split_whitespace();
            let g: u32 = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("missing or invalid genus"))?;
            let d: u32 = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("missing or invalid degree"))?;
            let value: ExactScalar = fields.next().ok_or_else(|| bad("missing value"))?.parse()?;
            if fields.next().is_some() {
                return Err(bad("trailing fields"));
            }
            map.insert((g, d), value);
        }
        Ok(RtOverrides { map })
    }

    pub fn insert(&mut self, genus: u32, degree: u32, value: ExactScalar) {
        self.map.insert((genus, degree), value);
    }

    pub fn get(&self, genus: u32, degree: u32) -> Option<&ExactScalar> {
        self.map.get(&(genus, degree))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Evaluates a symplectic-invariant query. Unbalanced queries give zero.
pub fn rt(store: &MemoStore, overrides: &RtOverrides, query: &RtQuery) -> Result<ExactScalar> {
    RtQuery::new(
        query.genus,
        query.degree,
        query.fixed_classes.clone(),
        query.n_free,
    )?;
    if !query.balanced() {
        return Ok(ExactScalar::zero());
    }
    // Only exactly-canonical queries can be overridden; handle expansions
    // always carry fixed classes and so are always computed.
    if query.fixed_classes.is_empty() {
        if let Some(v) = overrides.get(query.genus, query.degree) {
            return Ok(v.clone());
        }
    }
    if query.genus == 0 {
        return rigid0(store, query.degree, &query.fixed_classes, query.n_free);
    }
    let key = InvariantKey::rt(
        query.genus,
        query.degree,
        &query.fixed_classes,
        query.n_free,
    );
    if let Some(v) = store.get(&key) {
        return Ok(v);
    }
    let mut acc = ExactScalar::zero();
    for e in 0..=2u32 {
        let mut classes = query.fixed_classes.clone();
        classes.push(e);
        classes.push(2 - e);
        let sub = RtQuery {
            genus: query.genus - 1,
            degree: query.degree,
            fixed_classes: classes,
            n_free: query.n_free,
        };
        acc += rt(store, overrides, &sub)?;
    }
    Ok(store.bind(key, acc))
}

/// Convenience for the canonical genus-`g` query with no fixed classes.
pub fn rt_canonical(
    store: &MemoStore,
    overrides: &RtOverrides,
    genus: u32,
    degree: u32,
) -> Result<ExactScalar> {
    let n_free = canonical_free_points(genus, degree).ok_or_else(|| {
        Error::Domain(format!(
            "canonical genus-{genus} query needs 3d + 2(1-g) >= 0, impossible at d = {degree}"
        ))
    })?;
    let query = RtQuery::new(genus, degree, Vec::new(), n_free)?;
    rt(store, overrides, &query)
}

/// Genus-zero invariant with `k >= 3` fixed domain points, degenerated onto
/// the canonical caterpillar in the given class order.
pub fn rigid0(
    store: &MemoStore,
    d: u32,
    fixed_classes: &[u32],
    n_free: u32,
) -> Result<ExactScalar> {
    let k = fixed_classes.len();
    if k < 3 {
        return Err(Error::Domain(format!(
            "rigid genus-zero evaluation needs at least 3 fixed points, got {k}"
        )));
    }
    if d == 0 {
        return Err(Error::Domain("rigid0 requires d >= 1".into()));
    }
    if let Some(&c) = fixed_classes.iter().find(|&&c| c > 2) {
        return Err(Error::Validation(format!(
            "fixed class codimension {c} out of range 0..=2"
        )));
    }
    let key = InvariantKey::rt(0, d, fixed_classes, n_free);
    if let Some(v) = store.get(&key) {
        return Ok(v);
    }

    let value = if k == 3 {
        let mut zeros = 0;
        let mut ones = 0;
        let mut twos = n_free;
        for &c in fixed_classes {
            match c {
                0 => zeros += 1,
                1 => ones += 1,
                _ => twos += 1,
            }
        }
        gw::plain(store, d, zeros, ones, twos)
    } else {
        caterpillar(store, d, fixed_classes, n_free)
    };
    Ok(store.bind(key, value))
}

/// Sums over degree assignments, node diagonal pairs, and free-point
/// distributions for the caterpillar domain tree.
fn caterpillar(store: &MemoStore, d: u32, fixed_classes: &[u32], n_free: u32) -> ExactScalar {
    let k = fixed_classes.len();
    let comps = k - 2;
    let nodes = comps - 1;

    // Fixed classes per component: (0,1 | 2 | ... | k-3 | k-2,k-1).
    let mut fixed: Vec<Vec<u32>> = Vec::with_capacity(comps);
    fixed.push(vec![fixed_classes[0], fixed_classes[1]]);
    for t in 1..comps - 1 {
        fixed.push(vec![fixed_classes[t + 1]]);
    }
    fixed.push(vec![fixed_classes[k - 2], fixed_classes[k - 1]]);

    let mut total = ExactScalar::zero();
    let mut degrees = vec![0u32; comps];
    let mut node_classes = vec![0u32; nodes];
    sum_degree_assignments(
        store,
        d,
        n_free,
        &fixed,
        &mut degrees,
        0,
        d,
        &mut node_classes,
        &mut total,
    );
    total
}

#[allow(clippy::too_many_arguments)]
fn sum_degree_assignments(
    store: &MemoStore,
    d: u32,
    n_free: u32,
    fixed: &[Vec<u32>],
    degrees: &mut Vec<u32>,
    idx: usize,
    remaining: u32,
    node_classes: &mut Vec<u32>,
    total: &mut ExactScalar,
) {
    let comps = fixed.len();
    if idx == comps - 1 {
        degrees[idx] = remaining;
        sum_node_classes(store, d, n_free, fixed, degrees, node_classes, 0, total);
        return;
    }
    for dt in 0..=remaining {
        degrees[idx] = dt;
        sum_degree_assignments(
            store,
            d,
            n_free,
            fixed,
            degrees,
            idx + 1,
            remaining - dt,
            node_classes,
            total,
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn sum_node_classes(
    store: &MemoStore,
    d: u32,
    n_free: u32,
    fixed: &[Vec<u32>],
    degrees: &[u32],
    node_classes: &mut Vec<u32>,
    node_idx: usize,
    total: &mut ExactScalar,
) {
    let nodes = node_classes.len();
    if node_idx == nodes {
        if let Some(term) = caterpillar_term(store, d, n_free, fixed, degrees, node_classes) {
            *total += term;
        }
        return;
    }
    for f in 0..=2u32 {
        node_classes[node_idx] = f;
        sum_node_classes(
            store,
            d,
            n_free,
            fixed,
            degrees,
            node_classes,
            node_idx + 1,
            total,
        );
    }
}

/// One product term: the free-point counts per component are forced by the
/// dimension balance, so a term contributes only if the forced counts are
/// admissible and exhaust the free constraints.
fn caterpillar_term(
    store: &MemoStore,
    _d: u32,
    n_free: u32,
    fixed: &[Vec<u32>],
    degrees: &[u32],
    node_classes: &[u32],
) -> Option<ExactScalar> {
    let comps = fixed.len();
    let mut forced = Vec::with_capacity(comps);
    let mut insertions: Vec<(u32, u32, u32)> = Vec::with_capacity(comps);
    for t in 0..comps {
        let mut codims: Vec<u32> = fixed[t].clone();
        if t > 0 {
            // Right half of the node to the left of component t.
            codims.push(2 - node_classes[t - 1]);
        }
        if t < comps - 1 {
            codims.push(node_classes[t]);
        }
        let codim_sum: i64 = codims.iter().map(|&c| i64::from(c)).sum();
        let n_t = 3 * i64::from(degrees[t]) + 2 - codim_sum;
        if n_t < 0 {
            return None;
        }
        forced.push(n_t as u32);
        let zeros = codims.iter().filter(|&&c| c == 0).count() as u32;
        let ones = codims.iter().filter(|&&c| c == 1).count() as u32;
        let twos = codims.iter().filter(|&&c| c == 2).count() as u32;
        insertions.push((zeros, ones, twos));
    }
    if forced.iter().sum::<u32>() != n_free {
        return None;
    }
    let mut term = ExactScalar::from_bigint(multinomial(n_free, &forced));
    for (t, &(zeros, ones, twos)) in insertions.iter().enumerate() {
        if term.is_zero() {
            return Some(term);
        }
        term = term * gw::plain(store, degrees[t], zeros, ones, twos + forced[t]);
    }
    Some(term)
}
