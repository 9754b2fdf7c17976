//! Randomized checks of the algebraic invariants.

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sl3ido::algebra::sl3::{self, root_algebra, verma_order, K_MINUS, K_PLUS, K_ZERO};
use sl3ido::algebra::{BasisOrder, UeaElement};
use sl3ido::kflat::{flatten, flatten_residual, to_sl2};
use sl3ido::linalg::Matrix;
use sl3ido::qmchar::{CharacterTable, MIrrep, Q8Element};
use sl3ido::su2model::{dpi_matrix, group_action_matrix, group_apply, PolyVector};
use sl3ido::verma::{classify_targets, linked, reachable, singular_vectors};
use sl3ido::{GaussRational, Weight};

fn gauss() -> impl Strategy<Value = GaussRational> {
    (-6i64..=6, 1i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| GaussRational::complex((a, b), (c, d)))
}

fn element(gens: u8, max_len: usize, max_terms: usize) -> impl Strategy<Value = UeaElement> {
    prop::collection::vec((prop::collection::vec(0..gens, 0..=max_len), gauss()), 1..=max_terms)
        .prop_map(UeaElement::from_terms)
}

fn defining(u: &UeaElement) -> Matrix {
    let alg = root_algebra();
    let gens: Vec<Matrix> = (0..8u8).map(|i| alg.basis_matrix(i).clone()).collect();
    sl3::represent(u, &gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pbw_normal_form_is_confluent(u in element(8, 5, 3)) {
        let alg = root_algebra();
        let order = verma_order();
        let reversed = BasisOrder::from_sequence(&[7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        let shuffled = BasisOrder::from_sequence(&[3, 0, 7, 5, 1, 6, 4, 2]).unwrap();
        let n = alg.normalize(&u, &order);
        prop_assert!(n.terms().all(|(w, _)| order.is_normal(w)));
        prop_assert_eq!(alg.normalize(&n, &order), n.clone());
        prop_assert_eq!(alg.normalize(&alg.normalize(&u, &reversed), &order), n.clone());
        prop_assert_eq!(alg.normalize(&alg.normalize(&u, &shuffled), &order), n.clone());
        prop_assert_eq!(defining(&n), defining(&u));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_action_is_multiplicative(n in 0usize..=20, i in 0usize..8, j in 0usize..8) {
        let (g, h) = (Q8Element::ALL[i], Q8Element::ALL[j]);
        let lhs = group_action_matrix(g, n).compose(&group_action_matrix(h, n));
        prop_assert_eq!(lhs, group_action_matrix(g * h, n));
    }

    #[test]
    fn group_apply_matches_matrix(n in 0usize..=16, i in 0usize..8, c in prop::collection::vec(-5i64..=5, 17)) {
        let g = Q8Element::ALL[i];
        let p = PolyVector::from_ints(&c[..=n], n).unwrap();
        prop_assert_eq!(group_apply(g, &p), group_action_matrix(g, n).apply(&p));
    }

    #[test]
    fn infinitesimal_action_is_multiplicative(n in 0usize..=12, u in element(3, 3, 2), v in element(3, 3, 2)) {
        let product = &u * &v;
        prop_assert_eq!(dpi_matrix(&product, n), dpi_matrix(&u, n).compose(&dpi_matrix(&v, n)));
    }

    #[test]
    fn sl2_relations(n in 0usize..=30) {
        let e = |g| dpi_matrix(&UeaElement::generator(g), n);
        let (p, m, z) = (e(K_PLUS), e(K_MINUS), e(K_ZERO));
        let two = GaussRational::from_int(2);
        prop_assert_eq!(p.commutator(&m), z.clone());
        prop_assert_eq!(z.commutator(&p), p.scale(&two));
        prop_assert_eq!(z.commutator(&m), m.scale(&-two));
    }

    #[test]
    fn character_of_a_product_of_signs(i in 0usize..8, j in 0usize..8, s in 0usize..4) {
        let sigma = MIrrep::SIGNS[s];
        let (g, h) = (Q8Element::ALL[i], Q8Element::ALL[j]);
        prop_assert_eq!(sigma.character(g * h), &sigma.character(g) * &sigma.character(h));
    }

    #[test]
    fn weight_wire_round_trip(a in -20i64..=20, b in 1i64..=9, c in -20i64..=20, d in 1i64..=9) {
        let w = Weight::from_ratios((a, b), (c, d));
        prop_assert_eq!(Weight::parse(&w.to_wire()).unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Weight>(&json).unwrap(), w);
    }

    #[test]
    fn gauss_rational_json_round_trip(z in gauss()) {
        let json = serde_json::to_string(&z).unwrap();
        prop_assert_eq!(serde_json::from_str::<GaussRational>(&json).unwrap(), z);
    }
}

#[test]
fn character_table_orthogonality() {
    let t = CharacterTable::standard();
    t.check().unwrap();
    for g in Q8Element::ALL {
        for h in Q8Element::ALL {
            let s: GaussRational = MIrrep::ALL.iter().map(|&x| t.value(x, g) * &t.value(x, h).conj()).sum();
            let conjugate = h == g || h == g.inverse();
            let class_size = if g.index() % 4 == 0 { 1 } else { 2 };
            let want = if conjugate { GaussRational::from_int(8 / class_size) } else { GaussRational::zero() };
            assert_eq!(s, want, "columns {g} and {h}");
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> (i64, i64) {
    (rng.gen_range(-7..=7), rng.gen_range(1..=6))
}

fn random_nbar(rng: &mut ChaCha8Rng) -> UeaElement {
    let terms = rng.gen_range(1..=3);
    UeaElement::from_terms((0..terms).map(|_| {
        let len = rng.gen_range(0..=4);
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..3u8)).collect();
        let re = random_rational(rng);
        let im = random_rational(rng);
        (word, GaussRational::complex(re, (im.0 / 2, im.1)))
    }))
}

/// Re-expanding `u♭` in the root basis must agree with `u` modulo the
/// induced-module relations, for random `u` and `λ`.
#[test]
fn flattening_re_expands_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f1a7);
    for case in 0..100 {
        let u = random_nbar(&mut rng);
        let lambda = Weight::from_ratios(random_rational(&mut rng), random_rational(&mut rng));
        let residual = flatten_residual(&u, &lambda);
        assert!(residual.is_zero(), "case {case}: {u:?} at {lambda} leaves {residual:?}");
    }
}

#[test]
fn flattening_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let (u, v) = (random_nbar(&mut rng), random_nbar(&mut rng));
        let lambda = Weight::from_ratios(random_rational(&mut rng), random_rational(&mut rng));
        let c = GaussRational::complex(random_rational(&mut rng), random_rational(&mut rng));
        let lhs = to_sl2(&flatten(&(&u + &v.scale(&c)), &lambda));
        let rhs = &to_sl2(&flatten(&u, &lambda)) + &to_sl2(&flatten(&v, &lambda)).scale(&c);
        assert_eq!(lhs, rhs);
    }
}

fn grid() -> Vec<Weight> {
    let mut out = Vec::new();
    for a in -3..=3 {
        for b in -3..=3 {
            out.push(Weight::from_ratios((a, 2), (b, 2)));
        }
    }
    out
}

#[test]
fn singular_vectors_are_unique_up_to_scalar() {
    for lambda in grid() {
        for nu in classify_targets(&lambda) {
            let v = singular_vectors(&lambda, &nu);
            assert_eq!(v.len(), 1, "{lambda} -> {nu}");
        }
    }
}

#[test]
fn targets_are_linked_and_chains_are_valid() {
    for lambda in grid() {
        for chain in reachable(&lambda) {
            assert!(chain.is_valid(), "{chain:?}");
            assert!(chain.steps.len() <= sl3ido::verma::LINKAGE_DEPTH);
        }
        for nu in classify_targets(&lambda) {
            assert!(linked(&lambda, &nu).is_some(), "{lambda} -> {nu} is not linked");
        }
    }
}
