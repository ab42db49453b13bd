//! Randomized invariants of the linear algebra, the module machinery and the
//! classification.

use std::sync::{Arc, OnceLock};

use cmpreproj::certify::sample_corpus;
use cmpreproj::hom::hom_dim;
use cmpreproj::linalg::{kernel_rows, rref};
use cmpreproj::resolve::ext_dim;
use cmpreproj::*;
use proptest::prelude::*;

fn matrix<F: Field>(rows: usize, cols: usize, entries: &[i64]) -> Matrix<F> {
    Matrix::from_vec(rows, cols, entries.iter().take(rows * cols).map(|&x| F::from_i64(x)).collect())
}

fn matrix_strategy(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..7, 1usize..7).prop_flat_map(move |(r, c)| {
        // sparse-ish entries so that rank drops happen often
        let entry = prop_oneof![3 => Just(0i64), 2 => range.clone()];
        (Just(r), Just(c), prop::collection::vec(entry, r * c))
    })
}

fn linear_algebra_laws<F: Field>(m: &Matrix<F>) -> std::result::Result<(), TestCaseError> {
    let r = m.rank();
    prop_assert_eq!(r, m.transpose().rank());
    prop_assert_eq!(r + kernel_rows(m).rows(), m.cols());
    let k = kernel_rows(m);
    for i in 0..k.rows() {
        prop_assert!(m.mul_vec(k.row(i)).iter().all(|x| x.is_zero()));
    }
    let (once, rank, _) = rref(m);
    prop_assert_eq!(rank, r);
    prop_assert_eq!(rref(&once).0, once);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_laws_mod_p((r, c, e) in matrix_strategy(-200..=200)) {
        linear_algebra_laws(&matrix::<F101>(r, c, &e))?;
    }

    #[test]
    fn rank_laws_rational((r, c, e) in matrix_strategy(-5..=5)) {
        linear_algebra_laws(&matrix::<Rational>(r, c, &e))?;
    }

    #[test]
    fn inverse_is_two_sided((n, e) in (1usize..6).prop_flat_map(|n| (Just(n), prop::collection::vec(-9i64..=9, n * n)))) {
        let m = matrix::<Rational>(n, n, &e);
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn field_laws_mod_p(a in 0i64..101, b in 0i64..101, c in 0i64..101) {
        let (a, b, c) = (F101::from_i64(a), F101::from_i64(b), F101::from_i64(c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv()).is_one());
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn field_laws_rational(p in -50i64..50, q in 1i64..20, s in -50i64..50, t in 1i64..20) {
        let (x, y) = (Rational::new(p, q), Rational::new(s, t));
        prop_assert_eq!(x.add(&y), Rational::new(p * t + s * q, q * t));
        prop_assert_eq!(x.mul(&y), Rational::new(p * s, q * t));
        if p != 0 {
            prop_assert!(x.mul(&x.inv()).is_one());
        }
    }
}

fn spec_strategy() -> impl Strategy<Value = DynkinSpec> {
    prop_oneof![
        (1usize..=6).prop_map(|n| DynkinSpec::new(Family::A, n).unwrap()),
        (4usize..=6).prop_map(|n| DynkinSpec::new(Family::D, n).unwrap()),
        Just(DynkinSpec::new(Family::E, 6).unwrap()),
    ]
}

fn spec_and_subset() -> impl Strategy<Value = (DynkinSpec, Vec<usize>)> {
    spec_strategy().prop_flat_map(|s| {
        let n = s.rank;
        (Just(s), 1u32..(1u32 << n)).prop_map(|(s, mask)| {
            let j = (1..=s.rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            (s, j)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frozen_split_partitions_j((spec, j) in spec_and_subset()) {
        let split = frozen_split(&spec, &j).unwrap();
        let mut both: Vec<usize> = split.frozen.iter().chain(&split.mutable).copied().collect();
        both.sort_unstable();
        prop_assert_eq!(&both, &split.j);
        // J meets iota(J) only in frozen vertices
        for v in spec.iota_set(&j) {
            if j.contains(&v) {
                prop_assert!(split.frozen.contains(&v));
            }
        }
        prop_assert!(!split.frozen.is_empty());
    }

    #[test]
    fn symmetry_classes_counted((spec, _j) in spec_and_subset()) {
        let n = spec.rank;
        let all = (1u32 << n) - 1;
        let fixed = (1u32..=all)
            .filter(|&m| {
                let j: Vec<usize> = (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect();
                spec.iota_set(&j) == j
            })
            .count() as u32;
        prop_assert_eq!(spec.subsets_up_to_symmetry().len() as u32, (all + fixed) / 2);
    }

    #[test]
    fn contraction_dim_is_cartan_block_sum((spec, j) in spec_and_subset()) {
        let pi = Preprojective::<F101>::new(&spec).unwrap();
        let c = pi.algebra.cartan_matrix();
        let a = pi.contract(&j).unwrap();
        let want: usize = j.iter().flat_map(|&x| j.iter().map(move |&y| (x, y))).map(|(x, y)| c[x - 1][y - 1]).sum();
        prop_assert_eq!(a.dim(), want);
        prop_assert_eq!(pi.algebra.dim(), spec.preprojective_dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn computed_triple_matches_prediction((spec, j) in spec_and_subset().prop_filter("small", |(s, _)| s.rank <= 5)) {
        let c = classify_dynkin::<F101>(&spec, &j, &Config::default()).unwrap();
        prop_assert!(c.certification.passed(), "{} {:?}", spec, j);
        prop_assert!(c.agrees(), "{} {:?}: {} vs {}", spec, j, c.computed, c.predicted);
    }
}

/// A few contractions with their sample corpora, built once.
fn corpora() -> &'static Vec<(Arc<FDAlgebra<F101>>, Vec<FDModule<F101>>)> {
    static C: OnceLock<Vec<(Arc<FDAlgebra<F101>>, Vec<FDModule<F101>>)>> = OnceLock::new();
    C.get_or_init(|| {
        let cfg = Config::default();
        [("A5", vec![1, 2, 5]), ("A6", vec![1, 2, 3, 6]), ("D5", vec![1, 3, 4]), ("E6", vec![1, 2])]
            .iter()
            .map(|(s, j)| {
                let cand = dualizing_candidate::<F101>(&s.parse().unwrap(), j, &cfg).unwrap();
                let corpus = sample_corpus(&cand.algebra, &cand.parts, &cfg).into_iter().map(|(_, m)| m).collect();
                (cand.algebra, corpus)
            })
            .collect()
    })
}

fn pick() -> impl Strategy<Value = (usize, prop::sample::Index, prop::sample::Index)> {
    (0usize..4, any::<prop::sample::Index>(), any::<prop::sample::Index>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hom_and_ext_duality((k, a, b) in pick(), i in 0usize..=3) {
        let (_, corpus) = &corpora()[k];
        let (m, n) = (a.get(corpus), b.get(corpus));
        prop_assert_eq!(hom_dim(m, n).unwrap(), hom_dim(&n.dual(), &m.dual()).unwrap());
        prop_assert_eq!(ext_dim(m, n, i).unwrap(), ext_dim(&n.dual(), &m.dual(), i).unwrap());
    }

    #[test]
    fn direct_sums_decompose((k, a, b) in pick()) {
        let cfg = Config::default();
        let (alg, corpus) = &corpora()[k];
        let (m, n) = (a.get(corpus), b.get(corpus));
        let mn = FDModule::direct_sum(alg, &[m.clone(), n.clone()]);
        let nm = FDModule::direct_sum(alg, &[n.clone(), m.clone()]);
        prop_assert!(is_isomorphic(&mn, &nm, &cfg).unwrap());
        let d = decompose(&mn, &cfg).unwrap();
        let dm = decompose(m, &cfg).unwrap();
        let dn = decompose(n, &cfg).unwrap();
        prop_assert_eq!(d.summand_count(), dm.summand_count() + dn.summand_count());
        let total: Vec<usize> = (0..alg.vertex_count()).map(|v| m.dims()[v] + n.dims()[v]).collect();
        prop_assert_eq!(mn.dims(), &total[..]);
    }

    #[test]
    fn module_text_round_trip((k, a, _b) in pick()) {
        let (alg, corpus) = &corpora()[k];
        let m = a.get(corpus);
        let back = parse_module(alg, &module_to_text(m)).unwrap();
        prop_assert!(back.same_representation(m));
    }
}
