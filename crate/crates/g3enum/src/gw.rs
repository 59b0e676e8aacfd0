//! Genus-zero primary invariants of the plane.
//!
//! `kontsevich` is the degree-splitting recursion for the number `N_d` of
//! irreducible rational degree-`d` plane curves through `3d - 1` general
//! points. `primary` is the dimension-guarded evaluator for invariants with
//! one extra evaluation class, and `deg0_integral` handles the degree-zero
//! boundary terms of all splitting recursions. Dimension mismatches return
//! zero rather than erroring, so splitting sums need no per-term guards.

use num_bigint::BigInt;
use num_traits::Pow;

use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::key::InvariantKey;
use crate::scalar::ExactScalar;
use crate::store::MemoStore;

/// The number of irreducible rational degree-`d` plane curves through
/// `3d - 1` general points.
///
/// `N_1 = 1` seeds the recursion
/// `N_d = sum N_{d1} N_{d2} d1^2 d2 (d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1))`
/// over splits `d1 + d2 = d` with both parts positive.
pub fn kontsevich(store: &MemoStore, d: u32) -> Result<ExactScalar> {
    if d == 0 {
        return Err(Error::Domain("kontsevich requires d >= 1".into()));
    }
    let key = InvariantKey::primary(d, 3 * d - 2, 2);
    if let Some(v) = store.get(&key) {
        return Ok(v);
    }
    let value = if d == 1 {
        ExactScalar::one()
    } else {
        let mut acc = ExactScalar::zero();
        for d1 in 1..d {
            let d2 = d - d1;
            let n1 = kontsevich(store, d1)?;
            let n2 = kontsevich(store, d2)?;
            let (d1, d2, dd) = (i64::from(d1), i64::from(d2), i64::from(d));
            let weight = BigInt::from(d1 * d1 * d2)
                * (BigInt::from(d2) * binomial(3 * dd - 4, 3 * d1 - 2)
                    - BigInt::from(d1) * binomial(3 * dd - 4, 3 * d1 - 1));
            acc += n1 * n2 * ExactScalar::from_bigint(weight);
        }
        acc
    };
    Ok(store.bind(key, value))
}

/// Genus-zero invariant with `n` fixed general point constraints and one
/// `H^e` insertion. Total: dimension mismatches and `e > 2` give zero.
pub fn primary(store: &MemoStore, d: u32, n: u32, e: u32) -> ExactScalar {
    if e > 2 {
        return ExactScalar::zero();
    }
    if d == 0 {
        let mut codims = vec![e];
        codims.extend(std::iter::repeat_n(2, n as usize));
        return deg0_integral(&codims, 0);
    }
    // d >= 1, so the kontsevich call below cannot fail.
    match e {
        2 if n == 3 * d - 2 => kontsevich(store, d).unwrap(),
        // Divisor equation.
        1 if n == 3 * d - 1 => kontsevich(store, d).unwrap() * i64::from(d),
        // String equation for e = 0, dimension guard otherwise.
        _ => ExactScalar::zero(),
    }
}

/// Degree-zero integral: the classical multi-point integral on the plane
/// tensored with the psi-power integral over the `k`-pointed genus-zero
/// Deligne-Mumford space. Nonzero (and equal to one) exactly when `k >= 3`,
/// `m = k - 3`, and the codimensions sum to two.
pub fn deg0_integral(codims: &[u32], m: u32) -> ExactScalar {
    let k = codims.len() as u32;
    if k < 3 || m != k - 3 {
        return ExactScalar::zero();
    }
    if codims.iter().any(|&c| c > 2) {
        return ExactScalar::zero();
    }
    if codims.iter().sum::<u32>() == 2 {
        ExactScalar::one()
    } else {
        ExactScalar::zero()
    }
}

/// Plain genus-zero invariant with `zeros`/`ones`/`twos` insertions of the
/// fundamental, hyperplane and point class. Reduces by string and divisor to
/// `N_d`; degree zero goes through `deg0_integral`.
pub(crate) fn plain(store: &MemoStore, d: u32, zeros: u32, ones: u32, twos: u32) -> ExactScalar {
    if d == 0 {
        let mut codims = Vec::with_capacity((zeros + ones + twos) as usize);
        codims.extend(std::iter::repeat_n(0, zeros as usize));
        codims.extend(std::iter::repeat_n(1, ones as usize));
        codims.extend(std::iter::repeat_n(2, twos as usize));
        return deg0_integral(&codims, 0);
    }
    if zeros > 0 {
        return ExactScalar::zero();
    }
    if twos != 3 * d - 1 {
        return ExactScalar::zero();
    }
    let n_d = kontsevich(store, d).unwrap();
    n_d * ExactScalar::from_bigint(BigInt::from(d).pow(ones))
}
