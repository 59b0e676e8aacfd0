//! Cross-module properties and serialization round-trips over the public
//! API. Module-local invariants live next to their modules; the acceptance
//! gate has the spec-level sweeps.

use proptest::prelude::*;

use g3enum::descendant::desc;
use g3enum::gw::{deg0_integral, kontsevich, primary};
use g3enum::key::KeyKind;
use g3enum::singular::{s1_class, s21};
use g3enum::taut::{mpsi, s1_pairing, tau3};
use g3enum::{recompute_key, ExactScalar, InvariantKey, MemoStore};

#[test]
fn kontsevich_values_are_positive_integers() {
    let store = MemoStore::new();
    for d in 1..=7u32 {
        let n = kontsevich(&store, d).unwrap();
        assert!(n.is_integer(), "N_{d} = {n}");
        assert!(!n.is_negative() && !n.is_zero(), "N_{d} = {n}");
    }
}

#[test]
fn primary_agrees_with_descendant_engine_at_psi_zero() {
    let store = MemoStore::new();
    for d in 1..=3u32 {
        for n in 0..=(3 * d + 1) {
            for e in 0..=2u32 {
                assert_eq!(
                    primary(&store, d, n, e),
                    desc(&store, d, n, e, 0).unwrap(),
                    "d={d} n={n} e={e}"
                );
            }
        }
    }
}

#[test]
fn mpsi_reduces_to_descendants_without_modified_powers() {
    let store = MemoStore::new();
    for d in 1..=3u32 {
        for i in 0..=2u32 {
            for m in 0..=(3 * d - i) {
                let n = 3 * d - i - m;
                assert_eq!(
                    mpsi(&store, d, n, i, m, 0),
                    desc(&store, d, n, i, m).unwrap()
                );
            }
        }
    }
}

#[test]
fn cusp_locus_pairings_delegate() {
    let store = MemoStore::new();
    for d in 2..=4u32 {
        for (i, j) in [(2u32, 0u32), (1, 1), (0, 2)] {
            assert_eq!(
                s1_class(&store, d, i, j).unwrap(),
                s1_pairing(&store, d, i, j).unwrap()
            );
        }
    }
    assert!(s1_class(&store, 3, 2, 2).is_err());
}

#[test]
fn deg0_multipoint_psi_normalization() {
    // One psi power per extra marked point keeps the integral at one.
    for extra in 0..=4u32 {
        let mut codims = vec![1, 1, 0];
        codims.extend(std::iter::repeat_n(0, extra as usize));
        assert_eq!(deg0_integral(&codims, extra), ExactScalar::one());
    }
}

#[test]
fn store_roundtrip_recomputes_from_scratch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.tsv");

    let store = MemoStore::with_path(&path).unwrap();
    s21(&store, 4).unwrap();
    tau3(&store, 5).unwrap();
    store.dump().unwrap();

    let reloaded = MemoStore::with_path(&path).unwrap();
    assert_eq!(reloaded.len(), store.len());
    let fresh = MemoStore::new();
    for key in reloaded.keys() {
        assert_eq!(
            reloaded.get(&key).unwrap(),
            recompute_key(&fresh, &key).unwrap(),
            "reloaded value for {key} does not recompute"
        );
    }
}

proptest! {
    #[test]
    fn scalar_cache_repr_roundtrips(numer in -1_000_000_000i64..1_000_000_000, denom in 1i64..1_000_000) {
        let v = ExactScalar::ratio(numer, denom);
        let parsed: ExactScalar = v.cache_repr().parse().unwrap();
        prop_assert_eq!(&parsed, &v);
        let display: ExactScalar = v.to_string().parse().unwrap();
        prop_assert_eq!(&display, &v);
    }

    #[test]
    fn key_string_roundtrips(kind in 0..4usize, params in proptest::collection::vec(0i64..64, 0..8)) {
        let kind = [KeyKind::Primary, KeyKind::Desc, KeyKind::Mpsi, KeyKind::Rt][kind];
        let key = InvariantKey::new(kind, params);
        let parsed: InvariantKey = key.to_string().parse().unwrap();
        prop_assert_eq!(parsed, key);
    }

    #[test]
    fn unbalanced_descendants_vanish(d in 1u32..4, n in 0u32..12, i in 0u32..3, m in 0u32..9) {
        prop_assume!(i + m + n != 3 * d);
        let store = MemoStore::new();
        prop_assert!(desc(&store, d, n, i, m).unwrap().is_zero());
    }
}
