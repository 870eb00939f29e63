use std::sync::{Arc, LazyLock};

use proptest::prelude::*;
use sumrank::block_codes::{export_generator_matrix, import_generator_matrix, reed_solomon};
use sumrank::gf::{Embedding, Field, FieldTower};
use sumrank::linearized::LinearizedPoly;
use sumrank::sumrank::{
    export_sumrank_code, import_sumrank_code, singleton_bound, sr_weight, SumRankCodeword, SumRankSpace,
};

static FIELDS: LazyLock<Vec<Arc<Field>>> = LazyLock::new(|| {
    [(2u64, 8u32), (3, 3), (5, 2), (7, 1), (2, 20)]
        .into_iter()
        .map(|(p, e)| {
            let f = Field::prime(p).unwrap();
            if e == 1 {
                f
            } else {
                f.extend(e).unwrap()
            }
        })
        .collect()
});

fn field_and_elems() -> impl Strategy<Value = (Arc<Field>, u64, u64, u64)> {
    (0..FIELDS.len()).prop_flat_map(|i| {
        let f = Arc::clone(&FIELDS[i]);
        let n = f.size();
        (Just(f), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms((f, a, b, c) in field_and_elems()) {
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        prop_assert_eq!(f.pow(a, f.size() as u128), a);
    }

    #[test]
    fn q_polynomials_are_ground_linear(
        coeffs in prop::collection::vec(0u64..16, 1..=2),
        x in 0u64..16,
        y in 0u64..16,
        c in 0u64..4,
    ) {
        let tower = FieldTower::new(2, 2, 2).unwrap();
        let top = tower.top();
        let poly = LinearizedPoly::new(&tower, coeffs).unwrap();
        prop_assert_eq!(poly.apply(&tower, top.add(x, y)), top.add(poly.apply(&tower, x), poly.apply(&tower, y)));
        prop_assert_eq!(poly.apply(&tower, top.mul(c, x)), top.mul(c, poly.apply(&tower, x)));
        prop_assert!(poly.rank(&tower) <= 2);
    }

    #[test]
    fn embeddings_are_homomorphisms(a in 0u64..64, b in 0u64..64) {
        let f2 = Field::prime(2).unwrap();
        let src = Field::with_modulus(&f2, vec![1, 0, 0, 0, 0, 1, 1]).unwrap();
        let dst = f2.extend(6).unwrap();
        let emb = Embedding::new(&src, &dst, 1 << 16).unwrap();
        prop_assert_eq!(emb.apply(src.add(a, b)), dst.add(emb.apply(a), emb.apply(b)));
        prop_assert_eq!(emb.apply(src.mul(a, b)), dst.mul(emb.apply(a), emb.apply(b)));
    }

    #[test]
    fn singleton_matches_equal_size_formula(t in 1usize..40, n in 1usize..5, extra in 0usize..3, d in 1usize..200) {
        let m = n + extra;
        let space = SumRankSpace::uniform(&Field::prime(2).unwrap(), t, n, m).unwrap();
        let total = t * n;
        prop_assume!(d <= total);
        prop_assert_eq!(singleton_bound(&space, d).unwrap(), m * (total - d + 1));
    }

    #[test]
    fn weight_is_bounded_by_rows_and_support(data in prop::collection::vec(0u64..3, 12)) {
        let space = SumRankSpace::new(&Field::prime(3).unwrap(), vec![(2, 3), (2, 2), (1, 1), (1, 1)]).unwrap();
        let w = SumRankCodeword::from_flat(&space, data.clone()).unwrap();
        let weight = sr_weight(&space, &w);
        prop_assert!(weight <= space.total_rows());
        prop_assert!(weight <= data.iter().filter(|&&x| x != 0).count());
        prop_assert_eq!(weight == 0, w.is_zero());
    }

    #[test]
    fn generator_files_round_trip(k in 1usize..5, points in Just(vec![0u64, 1, 2, 3, 4, 5, 6, 7])) {
        let tower = FieldTower::new(2, 1, 3).unwrap();
        let code = reed_solomon(tower.top(), &points, k).unwrap();
        let text = export_generator_matrix(&code, 1).unwrap();
        let (t2, back) = import_generator_matrix(&text).unwrap();
        prop_assert_eq!(t2.n(), 3);
        prop_assert_eq!(back.generator(), code.generator());
        prop_assert_eq!(back.distance().lower_bound(), code.distance().lower_bound());
    }

    #[test]
    fn sumrank_files_round_trip(t in 2usize..5, k in 1usize..3) {
        prop_assume!(k < t && (t - k) % 2 == 1);
        let code = sumrank::constructions::rs_pair(2, t, k).unwrap();
        let back = import_sumrank_code(&export_sumrank_code(&code)).unwrap();
        prop_assert_eq!(back, code);
    }
}
