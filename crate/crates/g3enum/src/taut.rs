//! Modified psi-class numbers and the intersection pairings over the spaces
//! of one-, two-, and three-component rational map configurations through
//! general points that share one evaluation point.
//!
//! The modified psi class differs from the ordinary one by the strata where a
//! constraint point collides with the evaluation point. Expanding one factor
//! gives the recursion implemented by [`mpsi`]: on a collision stratum the
//! evaluation map is constant, so any positive power of the evaluation class
//! restricts to zero and the stratum acquires a fixed evaluation-point
//! constraint (encoded `i = 2` on the smaller space); the ordinary psi class
//! restricts to zero on the rigid three-pointed ghost; remaining modified-psi
//! powers restrict to modified psi of the stratum space. Hence a correction
//! term appears only when no evaluation-class or ordinary-psi factor is left,
//! one stratum per constraint point. With the constraints disjoint, no
//! multi-point collision stratum exists.

use crate::comb::{binomial, multinomial};
use crate::descendant::desc_padded;
use crate::error::{Error, Result};
use crate::gw;
use crate::key::InvariantKey;
use crate::scalar::ExactScalar;
use crate::store::MemoStore;

/// `<a^i psi^m mpsi^j>` over degree-`d` maps through `n` general points with
/// one free evaluation point. Total: dimension mismatches, `i > 2`, and
/// degree zero all give zero.
///
/// `i = 2` also encodes "evaluation point constrained to a fixed general
/// point", which is Poincare dual to the square of the evaluation class.
pub fn mpsi(store: &MemoStore, d: u32, n: u32, i: u32, m: u32, j: u32) -> ExactScalar {
    if d == 0 || i > 2 {
        return ExactScalar::zero();
    }
    if i64::from(i) + i64::from(m) + i64::from(j) != 3 * i64::from(d) - i64::from(n) {
        return ExactScalar::zero();
    }
    if j == 0 {
        return desc_padded(store, d, n, 0, i, m);
    }
    let key = InvariantKey::mpsi(d, n, i, m, j);
    if let Some(v) = store.get(&key) {
        return v;
    }
    let mut value = mpsi(store, d, n, i, m + 1, j - 1);
    if i == 0 && m == 0 && n > 0 {
        let stratum = mpsi(store, d, n - 1, 2, 0, j - 1);
        value -= stratum * i64::from(n);
    }
    store.bind(key, value)
}

/// Pairing `<a^i psi^m mpsi^j>` over the space of irreducible degree-`d`
/// configurations through `3d - 4` points; zero unless `i + m + j = 4`.
pub fn v1_number(store: &MemoStore, d: u32, i: u32, m: u32, j: u32) -> Result<ExactScalar> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "v1_number requires d >= 2 (3d - 4 constraints), got {d}"
        )));
    }
    Ok(mpsi(store, d, 3 * d - 4, i, m, j))
}

/// Psi exponents carried by one component of a two-component configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SlotExp {
    /// Ordinary psi power.
    pub psi: u32,
    /// Modified psi power.
    pub mpsi: u32,
}

impl SlotExp {
    pub fn new(psi: u32, mpsi: u32) -> Self {
        SlotExp { psi, mpsi }
    }

    fn degree(self) -> u32 {
        self.psi + self.mpsi
    }
}

/// Exponent record of one component inside a multi-component pairing term:
/// degree, evaluation-class power, the two psi powers, and the
/// constrained-point count the dimension balance forces on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentSpec {
    pub degree: u32,
    pub eval_pow: u32,
    pub psi: u32,
    pub mpsi: u32,
    pub points: u32,
}

impl ComponentSpec {
    /// Builds the record with `points = 3 degree - eval_pow - psi - mpsi`,
    /// or `None` when the component cannot contribute: constant components
    /// are excluded (a degree-zero component cannot meet general point
    /// constraints and stay stable), as are negative forced counts.
    pub fn contributing(degree: u32, eval_pow: u32, psi: u32, mpsi: u32) -> Option<Self> {
        if degree == 0 {
            return None;
        }
        let points = 3 * i64::from(degree) - i64::from(eval_pow) - i64::from(psi) - i64::from(mpsi);
        let points = u32::try_from(points).ok()?;
        Some(ComponentSpec {
            degree,
            eval_pow,
            psi,
            mpsi,
            points,
        })
    }

    /// The component's own pairing.
    pub fn pairing(&self, store: &MemoStore) -> ExactScalar {
        mpsi(
            store,
            self.degree,
            self.points,
            self.eval_pow,
            self.psi,
            self.mpsi,
        )
    }
}

/// Pairing over two-component configurations: `a^p` at the shared evaluation
/// point times per-component psi exponents.
///
/// The shared-point condition splits through the diagonal of the plane, so
/// the sum runs over ordered degree splits, diagonal exponents `e + f = 2 + p`,
/// and distributions of the `3d - 4` constraint points; the unordered count
/// is the ordered total halved. With `symmetrize` on, the slot-swapped
/// assignment is added before halving, which evaluates the symmetrized class
/// `slotA (x) slotB + slotB (x) slotA`; product classes with equal slots want
/// it off.
pub fn v2_number(
    store: &MemoStore,
    d: u32,
    p: u32,
    slot_a: SlotExp,
    slot_b: SlotExp,
    symmetrize: bool,
) -> Result<ExactScalar> {
    if d < 2 {
        return Err(Error::Domain(format!("v2_number requires d >= 2, got {d}")));
    }
    let constraints = 3 * d - 4;
    let mut ordered = ExactScalar::zero();
    let assignments: &[(SlotExp, SlotExp)] = if symmetrize {
        &[(slot_a, slot_b), (slot_b, slot_a)]
    } else {
        &[(slot_a, slot_b)]
    };
    for &(first, second) in assignments {
        for d1 in 1..d {
            let d2 = d - d1;
            for e in 0..=2u32 {
                let f_total = 2 + p;
                if e > f_total {
                    continue;
                }
                let f = f_total - e;
                if f > 2 {
                    continue;
                }
                let Some(left) = ComponentSpec::contributing(d1, e, first.psi, first.mpsi) else {
                    continue;
                };
                if left.points > constraints {
                    continue;
                }
                let Some(right) = ComponentSpec::contributing(d2, f, second.psi, second.mpsi)
                else {
                    continue;
                };
                if right.points != constraints - left.points {
                    continue;
                }
                let left_value = left.pairing(store);
                if left_value.is_zero() {
                    continue;
                }
                let right_value = right.pairing(store);
                if right_value.is_zero() {
                    continue;
                }
                let ways = ExactScalar::from_bigint(binomial(
                    i64::from(constraints),
                    i64::from(left.points),
                ));
                ordered += ways * left_value * right_value;
            }
        }
    }
    Ok(ordered / ExactScalar::from_int(2))
}

/// Number of three-component configurations through `3d - 4` points.
///
/// The small-diagonal class of the triple product of planes has all unit
/// coefficients, forced by Poincare duality, so the sum runs over ordered
/// degree triples and evaluation-class exponents summing to four, divided by
/// the six orderings.
pub fn tau3(store: &MemoStore, d: u32) -> Result<ExactScalar> {
    if d < 2 {
        return Err(Error::Domain(format!("tau3 requires d >= 2, got {d}")));
    }
    let constraints = 3 * d - 4;
    let mut ordered = ExactScalar::zero();
    for d1 in 1..=d.saturating_sub(2) {
        for d2 in 1..=(d - d1).saturating_sub(1) {
            let d3 = d - d1 - d2;
            for e1 in 0..=2u32 {
                for e2 in 0..=2u32 {
                    if e1 + e2 > 4 {
                        continue;
                    }
                    let e3 = 4 - e1 - e2;
                    if e3 > 2 {
                        continue;
                    }
                    let specs = [(d1, e1), (d2, e2), (d3, e3)]
                        .map(|(dt, et)| ComponentSpec::contributing(dt, et, 0, 0));
                    let [Some(a), Some(b), Some(c)] = specs else {
                        continue;
                    };
                    let parts = [a.points, b.points, c.points];
                    let mut term = ExactScalar::from_bigint(multinomial(constraints, &parts));
                    for spec in [a, b, c] {
                        if term.is_zero() {
                            break;
                        }
                        term = term * gw::primary(store, spec.degree, spec.points, spec.eval_pow);
                    }
                    ordered += term;
                }
            }
        }
    }
    Ok(ordered / ExactScalar::from_int(6))
}

/// Which psi flavor a symmetric two-component monomial uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiKind {
    Ordinary,
    Modified,
}

impl PsiKind {
    fn slot(self, power: u32) -> SlotExp {
        match self {
            PsiKind::Ordinary => SlotExp::new(power, 0),
            PsiKind::Modified => SlotExp::new(0, power),
        }
    }
}

/// `<a^2>` over two-component configurations.
pub fn v2_point_sq(store: &MemoStore, d: u32) -> Result<ExactScalar> {
    v2_number(store, d, 2, SlotExp::default(), SlotExp::default(), false)
}

/// `<a (psi_1 + psi_2)>` over two-component configurations.
pub fn v2_point_psi_sum(store: &MemoStore, d: u32, kind: PsiKind) -> Result<ExactScalar> {
    v2_number(store, d, 1, kind.slot(1), SlotExp::default(), true)
}

/// `<psi_1^2 + psi_2^2>` over two-component configurations.
pub fn v2_psi_sq_sum(store: &MemoStore, d: u32, kind: PsiKind) -> Result<ExactScalar> {
    v2_number(store, d, 0, kind.slot(2), SlotExp::default(), true)
}

/// `<psi_1 psi_2>` over two-component configurations.
pub fn v2_psi_prod(store: &MemoStore, d: u32, kind: PsiKind) -> Result<ExactScalar> {
    v2_number(store, d, 0, kind.slot(1), kind.slot(1), false)
}

/// Pairing `<a^i mpsi^j>` over the closure of the cuspidal locus, rewritten
/// into one- and two-component numbers. Supported `(i, j)`:
/// `(2,0)`, `(1,1)`, `(0,2)`.
pub fn s1_pairing(store: &MemoStore, d: u32, a_pow: u32, mpsi_pow: u32) -> Result<ExactScalar> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "cuspidal-locus pairing requires d >= 2, got {d}"
        )));
    }
    match (a_pow, mpsi_pow) {
        (2, 0) => Ok(v1_number(store, d, 2, 0, 2)? - v2_point_sq(store, d)?),
        (1, 1) => Ok(v1_number(store, d, 2, 0, 2)? * 3 + v1_number(store, d, 1, 0, 3)?),
        (0, 2) => Ok(v1_number(store, d, 2, 0, 2)? * 3
            + v1_number(store, d, 1, 0, 3)? * 3
            + v1_number(store, d, 0, 0, 4)?),
        _ => Err(Error::Domain(format!(
            "unsupported cuspidal-locus pairing a^{a_pow} mpsi^{mpsi_pow}"
        ))),
    }
}

/// The space a class polynomial is paired against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    V1,
    V2,
    V3,
    S1,
}

/// One integer-weighted monomial of a [`SpaceQuery`].
#[derive(Clone, Debug)]
pub enum QueryMonomial {
    /// `coeff * a^a_pow psi^psi mpsi^mpsi` on the one-component space.
    V1 {
        coeff: i64,
        a_pow: u32,
        psi: u32,
        mpsi: u32,
    },
    /// `coeff * a^a_pow slot_a (x) slot_b` on the two-component space.
    V2 {
        coeff: i64,
        a_pow: u32,
        slot_a: SlotExp,
        slot_b: SlotExp,
        symmetrize: bool,
    },
    /// `coeff * 1` on the zero-dimensional three-component space.
    V3 { coeff: i64 },
    /// `coeff * a^a_pow mpsi^mpsi` on the cuspidal locus.
    S1 { coeff: i64, a_pow: u32, mpsi: u32 },
}

/// A class polynomial on one of the supported spaces, expressed as
/// integer-weighted monomials in the evaluation class and the two psi
/// flavors.
#[derive(Clone, Debug)]
pub struct SpaceQuery {
    pub space: Space,
    pub monomials: Vec<QueryMonomial>,
}

impl SpaceQuery {
    /// Checks monomial shapes against the space and each monomial's total
    /// complex degree against the space dimension (4, 2, 0, 2 for the
    /// one-, two-, three-component spaces and the cuspidal locus).
    pub fn validate(&self) -> Result<()> {
        for mono in &self.monomials {
            match (self.space, mono) {
                (
                    Space::V1,
                    QueryMonomial::V1 {
                        a_pow, psi, mpsi, ..
                    },
                ) => {
                    if *a_pow > 2 {
                        return Err(Error::Validation("evaluation-class power exceeds 2".into()));
                    }
                    if a_pow + psi + mpsi != 4 {
                        return Err(Error::Validation(format!(
                            "one-component monomial has degree {} != 4",
                            a_pow + psi + mpsi
                        )));
                    }
                }
                (
                    Space::V2,
                    QueryMonomial::V2 {
                        a_pow,
                        slot_a,
                        slot_b,
                        ..
                    },
                ) => {
                    if *a_pow > 2 {
                        return Err(Error::Validation("evaluation-class power exceeds 2".into()));
                    }
                    let degree = a_pow + slot_a.degree() + slot_b.degree();
                    if degree != 2 {
                        return Err(Error::Validation(format!(
                            "two-component monomial has degree {degree} != 2"
                        )));
                    }
                }
                (Space::V3, QueryMonomial::V3 { .. }) => {}
                (Space::S1, QueryMonomial::S1 { a_pow, mpsi, .. }) => {
                    if !matches!((a_pow, mpsi), (2, 0) | (1, 1) | (0, 2)) {
                        return Err(Error::Validation(format!(
                            "unsupported cuspidal-locus monomial a^{a_pow} mpsi^{mpsi}"
                        )));
                    }
                }
                _ => {
                    return Err(Error::Validation(
                        "monomial shape does not match the query space".into(),
                    ))
                }
            }
        }
        Ok(())
    }
}

/// Evaluates a validated [`SpaceQuery`] at degree `d` as a linear combination
/// of one-, two-, and three-component numbers; cuspidal-locus monomials are
/// rewritten first.
pub fn evaluate(store: &MemoStore, d: u32, query: &SpaceQuery) -> Result<ExactScalar> {
    query.validate()?;
    let mut acc = ExactScalar::zero();
    for mono in &query.monomials {
        let term = match *mono {
            QueryMonomial::V1 {
                coeff,
                a_pow,
                psi,
                mpsi,
            } => v1_number(store, d, a_pow, psi, mpsi)? * coeff,
            QueryMonomial::V2 {
                coeff,
                a_pow,
                slot_a,
                slot_b,
                symmetrize,
            } => v2_number(store, d, a_pow, slot_a, slot_b, symmetrize)? * coeff,
            QueryMonomial::V3 { coeff } => tau3(store, d)? * coeff,
            QueryMonomial::S1 { coeff, a_pow, mpsi } => s1_pairing(store, d, a_pow, mpsi)? * coeff,
        };
        acc += term;
    }
    Ok(acc)
}
