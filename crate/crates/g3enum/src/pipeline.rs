//! The degenerate-contribution total, the per-stratum component counts, and
//! the final genus-three curve count.
//!
//! The total is computed by two independent routes that must agree exactly:
//! once as twelve times a fixed polynomial in one- and two-component numbers
//! plus the triple count, and once as the weighted sum of the six component
//! counts with the (3,4)-cusp count entering with weight `96 + 2n` when the
//! domain carries `n` hyperflexes. Each hyperflex shifts the weight by two,
//! so the genus-three count acquires `-2n` times the (3,4)-cusp count; the
//! division by domain automorphisms is the caller's concern.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rt::{rt_canonical, RtOverrides};
use crate::scalar::ExactScalar;
use crate::singular::{s12, s21, S12Route};
use crate::store::MemoStore;
use crate::taut::{
    s1_pairing, tau3, v1_number, v2_point_psi_sum, v2_point_sq, v2_psi_prod, v2_psi_sq_sum, PsiKind,
};

/// Which derivation of the degenerate-contribution total to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cr3Route {
    /// The closed-form polynomial.
    Theorem,
    /// The sum of weighted component counts.
    Corollary,
    /// Both, asserting exact agreement.
    Both,
}

/// Every intermediate entering the degenerate-contribution total at one
/// degree, at zero hyperflexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cr3Breakdown {
    pub degree: u32,
    pub n1_1: ExactScalar,
    pub n1_2: ExactScalar,
    pub n1_3: ExactScalar,
    pub n2_1: ExactScalar,
    pub n2_2: ExactScalar,
    pub n3_1: ExactScalar,
    pub s12: ExactScalar,
    pub s21: ExactScalar,
    pub tau3: ExactScalar,
    pub cr3_theorem: ExactScalar,
    pub cr3_corollary: ExactScalar,
}

impl Cr3Breakdown {
    /// Field names paired with values, in reporting order.
    pub fn fields(&self) -> Vec<(&'static str, &ExactScalar)> {
        vec![
            ("n1_1", &self.n1_1),
            ("n1_2", &self.n1_2),
            ("n1_3", &self.n1_3),
            ("n2_1", &self.n2_1),
            ("n2_2", &self.n2_2),
            ("n3_1", &self.n3_1),
            ("s12", &self.s12),
            ("s21", &self.s21),
            ("tau3", &self.tau3),
            ("cr3_theorem", &self.cr3_theorem),
            ("cr3_corollary", &self.cr3_corollary),
        ]
    }
}

fn check_degree(op: &str, d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::Domain(format!("{op} requires d >= 2, got {d}")));
    }
    Ok(())
}

fn cr3_theorem_route(store: &MemoStore, d: u32, hyperflexes: u32) -> Result<ExactScalar> {
    let polynomial = v1_number(store, d, 2, 0, 2)? * 413
        + v1_number(store, d, 1, 0, 3)? * 210
        + v1_number(store, d, 0, 0, 4)? * 44
        - (v2_point_sq(store, d)? * 217
            + v2_point_psi_sum(store, d, PsiKind::Modified)? * 84
            + v2_psi_sq_sum(store, d, PsiKind::Modified)? * 16
            + v2_psi_prod(store, d, PsiKind::Modified)? * 10)
        + tau3(store, d)? * 18;
    let mut total = polynomial * 12;
    if hyperflexes > 0 {
        total += s12(store, d, S12Route::Corollary)? * (2 * i64::from(hyperflexes));
    }
    Ok(total)
}

/// The six per-stratum component counts and both route totals at zero
/// hyperflexes. Asserts that every count is an integer and that the two
/// routes agree exactly.
pub fn component_counts(store: &MemoStore, d: u32) -> Result<Cr3Breakdown> {
    check_degree("component_counts", d)?;
    let s12_count = s12(store, d, S12Route::Corollary)?;
    let s21_count = s21(store, d)?;
    let tau = tau3(store, d)?;

    let n1_1 = ExactScalar::zero();
    let n1_2 = (s1_pairing(store, d, 2, 0)? * 7 + s1_pairing(store, d, 1, 1)? * 6) * 12
        - (v2_point_sq(store, d)? * 9 + v2_point_psi_sum(store, d, PsiKind::Modified)? * 3) * 12;
    let n1_3 = &s12_count * 12;
    let n2_1 = (v2_point_sq(store, d)? * 10
        + v2_point_psi_sum(store, d, PsiKind::Modified)? * 3
        + v2_psi_prod(store, d, PsiKind::Modified)?)
        * 12;
    let n2_2 = &s21_count * 36;
    let n3_1 = &tau * 36;

    for (name, value) in [
        ("n1_2", &n1_2),
        ("n2_1", &n2_1),
        ("n1_3", &n1_3),
        ("n2_2", &n2_2),
        ("n3_1", &n3_1),
    ] {
        if !value.is_integer() {
            return Err(Error::Consistency(format!(
                "component count {name}({d}) = {value} is not an integer"
            )));
        }
    }

    let cr3_corollary = &n1_1 + &n1_2 * 2 + &n1_3 * 3 + &s12_count * 96 + &n2_1 + &n2_2 * 2 + &n3_1;
    let cr3_theorem = cr3_theorem_route(store, d, 0)?;
    if cr3_theorem != cr3_corollary {
        return Err(Error::Consistency(format!(
            "degenerate-contribution routes disagree at d = {d}: \
             theorem {cr3_theorem} vs corollary {cr3_corollary}"
        )));
    }

    Ok(Cr3Breakdown {
        degree: d,
        n1_1,
        n1_2,
        n1_3,
        n2_1,
        n2_2,
        n3_1,
        s12: s12_count,
        s21: s21_count,
        tau3: tau,
        cr3_theorem,
        cr3_corollary,
    })
}

/// The degenerate-contribution total at degree `d` with `hyperflexes`
/// hyperflexes on the domain.
pub fn cr3(store: &MemoStore, d: u32, hyperflexes: u32, route: Cr3Route) -> Result<ExactScalar> {
    check_degree("cr3", d)?;
    let corollary = |store: &MemoStore| -> Result<ExactScalar> {
        let b = component_counts(store, d)?;
        let weight = 96 + 2 * i64::from(hyperflexes);
        Ok(&b.n1_1 + &b.n1_2 * 2 + &b.n1_3 * 3 + &b.s12 * weight + &b.n2_1 + &b.n2_2 * 2 + &b.n3_1)
    };
    match route {
        Cr3Route::Theorem => cr3_theorem_route(store, d, hyperflexes),
        Cr3Route::Corollary => corollary(store),
        Cr3Route::Both => {
            let theorem = cr3_theorem_route(store, d, hyperflexes)?;
            let coro = corollary(store)?;
            if theorem != coro {
                return Err(Error::Consistency(format!(
                    "degenerate-contribution routes disagree at d = {d}, \
                     hyperflexes = {hyperflexes}: {theorem} vs {coro}"
                )));
            }
            Ok(theorem)
        }
    }
}

/// The number of genus-three degree-`d` plane curves through `3d - 4`
/// general points with a fixed generic complex structure; with hyperflexes,
/// the count before dividing by domain automorphisms.
pub fn n3d(
    store: &MemoStore,
    overrides: &RtOverrides,
    d: u32,
    hyperflexes: u32,
) -> Result<ExactScalar> {
    check_degree("n3d", d)?;
    let symplectic = rt_canonical(store, overrides, 3, d)?;
    let correction = cr3(store, d, hyperflexes, Cr3Route::Corollary)?;
    let value = symplectic - correction;
    if !value.is_integer() {
        return Err(Error::Consistency(format!(
            "n3d({d}) = {value} is not an integer"
        )));
    }
    if value.is_negative() {
        return Err(Error::Consistency(format!(
            "n3d({d}) = {value} is negative"
        )));
    }
    Ok(value)
}

/// One reported quantity: value plus the derivation route used.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub quantity: String,
    pub degree: u32,
    /// Exact value rendered as a decimal string (or `p/q` when fractional).
    pub value: String,
    pub route: String,
    pub cache_hits: u64,
}

impl Report {
    pub fn new(quantity: &str, degree: u32, value: &ExactScalar, route: &str, hits: u64) -> Self {
        Report {
            quantity: quantity.to_string(),
            degree,
            value: value.to_string(),
            route: route.to_string(),
            cache_hits: hits,
        }
    }

    pub fn csv_row(&self) -> String {
        format!("{},{},{}", self.quantity, self.degree, self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_guard() {
        let store = MemoStore::new();
        let ov = RtOverrides::empty();
        assert!(component_counts(&store, 1).is_err());
        assert!(cr3(&store, 0, 0, Cr3Route::Both).is_err());
        assert!(n3d(&store, &ov, 1, 0).is_err());
    }

    #[test]
    fn component_counts_small_degrees() {
        let store = MemoStore::new();
        for d in 2..=4u32 {
            let b = component_counts(&store, d).unwrap();
            assert_eq!(b.n1_1, ExactScalar::zero());
            assert_eq!(b.cr3_theorem, b.cr3_corollary);
            for (name, value) in b.fields() {
                assert!(value.is_integer(), "{name}({d}) = {value}");
            }
        }
        let b = component_counts(&store, 3).unwrap();
        // 36 * tau3(3) = 36 * 15.
        assert_eq!(b.n3_1, ExactScalar::from_int(540));
        let b = component_counts(&store, 4).unwrap();
        // 36 * 528.
        assert_eq!(b.n2_2, ExactScalar::from_int(19008));
    }

    #[test]
    fn routes_agree_with_hyperflexes() {
        let store = MemoStore::new();
        for n in 0..=2u32 {
            assert_eq!(
                cr3(&store, 3, n, Cr3Route::Theorem).unwrap(),
                cr3(&store, 3, n, Cr3Route::Corollary).unwrap()
            );
            assert!(cr3(&store, 3, n, Cr3Route::Both).is_ok());
        }
    }

    #[test]
    fn genus_three_table_low_degrees() {
        let store = MemoStore::new();
        let ov = RtOverrides::empty();
        assert_eq!(n3d(&store, &ov, 2, 0).unwrap(), ExactScalar::zero());
        assert_eq!(n3d(&store, &ov, 3, 0).unwrap(), ExactScalar::zero());
        assert_eq!(
            n3d(&store, &ov, 4, 0).unwrap(),
            ExactScalar::from_int(14280)
        );
    }

    #[test]
    fn degenerate_total_equals_symplectic_invariant_when_count_vanishes() {
        let store = MemoStore::new();
        let ov = RtOverrides::empty();
        // No genus-three conics exist, so the whole symplectic invariant is
        // degenerate contribution.
        assert_eq!(
            cr3(&store, 2, 0, Cr3Route::Theorem).unwrap(),
            rt_canonical(&store, &ov, 3, 2).unwrap()
        );
    }

    #[test]
    fn hyperflex_correction_at_degree_four() {
        let store = MemoStore::new();
        let ov = RtOverrides::empty();
        let base = n3d(&store, &ov, 4, 0).unwrap();
        for n in 1..=2u32 {
            let adjusted = n3d(&store, &ov, 4, n).unwrap();
            let shift = ExactScalar::from_int(2 * i64::from(n) * 147);
            assert_eq!(adjusted, base.clone() - shift.clone());
            assert_eq!(
                cr3(&store, 4, n, Cr3Route::Corollary).unwrap(),
                cr3(&store, 4, 0, Cr3Route::Corollary).unwrap() + shift,
            );
        }
    }

    #[test]
    fn report_serialization() {
        let r = Report::new("n3d", 4, &ExactScalar::from_int(14280), "corollary", 7);
        assert_eq!(r.csv_row(), "n3d,4,14280");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["value"], "14280");
        assert_eq!(json["cache_hits"], 7);
    }
}
