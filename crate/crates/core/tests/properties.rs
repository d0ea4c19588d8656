mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

use triaut::analysis::{self, Diagonalization, ElementOrder};
use triaut::group_word::{Generator, GroupWord};
use triaut::presentation::{evaluate_b_word, to_b_generators};
use triaut::structure::{express_as_single_commutator, factorize_unitriangular, solve_difference};
use triaut::{parse_polynomial, AlgebraMode, Elementary, Endomorphism, Polynomial};

const P: AlgebraMode = AlgebraMode::Commutative;
const F: AlgebraMode = AlgebraMode::Free;

fn space() -> impl Strategy<Value = (AlgebraMode, usize)> {
    (mode(), 1usize..=3)
}

fn point(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(small_q(), n)
}

fn mats(n: usize) -> impl Strategy<Value = Vec<Mat>> {
    prop::collection::vec(
        prop::array::uniform2(prop::array::uniform2(small_q())).prop_map(Mat),
        n,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((m, n) in space(), seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let vars: Vec<usize> = (1..=n).collect();
        let mut r = || triaut::random::polynomial(&mut rng, m, n, &vars, 3, 4);
        let (a, b, c) = (r(), r(), r());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(m, n), a.clone());
        if m == P {
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }

    #[test]
    fn display_parse_round_trip(p in space().prop_flat_map(|(m, n)| poly(m, n, 4, 5))) {
        let text = p.to_string();
        prop_assert_eq!(parse_polynomial(&text, p.mode(), p.n()).unwrap(), p);
    }

    #[test]
    fn commutative_arithmetic_matches_point_evaluation(
        (a, b, x) in (1usize..=3).prop_flat_map(|n| (poly(P, n, 3, 4), poly(P, n, 3, 4), point(n)))
    ) {
        prop_assert_eq!(eval_at(&(&a * &b), &x), eval_at(&a, &x) * eval_at(&b, &x));
        prop_assert_eq!(eval_at(&(&a - &b), &x), eval_at(&a, &x) - eval_at(&b, &x));
    }

    #[test]
    fn free_arithmetic_matches_matrix_evaluation(
        (a, b, x) in (1usize..=3).prop_flat_map(|n| (poly(F, n, 3, 4), poly(F, n, 3, 4), mats(n)))
    ) {
        prop_assert_eq!(eval_free(&(&a * &b), &x), eval_free(&a, &x).mul(&eval_free(&b, &x)));
    }

    #[test]
    fn commutative_substitution_matches_evaluation(
        (p, images, x) in (1usize..=3).prop_flat_map(|n| (
            poly(P, n, 3, 4),
            prop::collection::vec(poly(P, n, 2, 3), n),
            point(n),
        ))
    ) {
        let inner: Vec<Q> = images.iter().map(|g| eval_at(g, &x)).collect();
        prop_assert_eq!(eval_at(&p.substitute(&images).unwrap(), &x), eval_at(&p, &inner));
    }

    #[test]
    fn free_substitution_matches_evaluation(
        (p, images, x) in (1usize..=3).prop_flat_map(|n| (
            poly(F, n, 3, 3),
            prop::collection::vec(poly(F, n, 2, 3), n),
            mats(n),
        ))
    ) {
        let inner: Vec<Mat> = images.iter().map(|g| eval_free(g, &x)).collect();
        prop_assert_eq!(eval_free(&p.substitute(&images).unwrap(), &x), eval_free(&p, &inner));
    }

    #[test]
    fn abelianize_is_a_homomorphism(
        (a, b, images) in (1usize..=3).prop_flat_map(|n| (
            poly(F, n, 3, 4),
            poly(F, n, 3, 4),
            prop::collection::vec(poly(F, n, 2, 3), n),
        ))
    ) {
        let ab = |p: &Polynomial| p.abelianize().unwrap();
        prop_assert_eq!(ab(&(&a * &b)), &ab(&a) * &ab(&b));
        prop_assert_eq!(ab(&(&a + &b)), &ab(&a) + &ab(&b));
        let ab_images: Vec<Polynomial> = images.iter().map(ab).collect();
        prop_assert_eq!(ab(&a.substitute(&images).unwrap()), ab(&a).substitute(&ab_images).unwrap());
    }

    #[test]
    fn composition_is_associative(
        (a, b, c) in (mode(), 1usize..=3).prop_flat_map(|(m, n)| (
            triangular(m, n, 2), triangular(m, n, 2), triangular(m, n, 2)
        ))
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverses((a, b) in (mode(), 1usize..=4).prop_flat_map(|(m, n)| (triangular(m, n, 3), triangular(m, n, 3)))) {
        let ai = a.inverse().unwrap();
        prop_assert!(a.compose(&ai).unwrap().is_identity());
        prop_assert!(ai.compose(&a).unwrap().is_identity());
        prop_assert_eq!(ai.clone(), a.invert_triangular().unwrap());
        let ab_inv = a.compose(&b).unwrap().inverse().unwrap();
        prop_assert_eq!(ab_inv, b.inverse().unwrap().compose(&ai).unwrap());
    }

    #[test]
    fn elementary_closed_forms(e in (mode(), 1usize..=4).prop_flat_map(|(m, n)| elementary(m, n, 3)), k in 0u32..5) {
        let phi = e.to_endomorphism();
        prop_assert_eq!(e.inverse().to_endomorphism(), phi.inverse().unwrap());
        prop_assert_eq!(Endomorphism::elementary_power(&e, k).unwrap(), phi.power(k as i64).unwrap());
    }

    #[test]
    fn split_triangular_recomposes(phi in (mode(), 1usize..=3).prop_flat_map(|(m, n)| triangular(m, n, 3))) {
        let (u, d) = phi.split_triangular().unwrap();
        prop_assert!(u.is_unitriangular());
        prop_assert_eq!(u.compose(&d).unwrap(), phi);
    }

    #[test]
    fn antidifference_solves(
        (g, i) in (mode(), 1usize..=3).prop_flat_map(|(m, n)| (poly(m, n, 5, 4), 1..=n)),
        a in nonzero_q(),
    ) {
        let f = solve_difference(&g, i, &a).unwrap();
        let n = g.n();
        let mut images: Vec<Polynomial> = (1..=n).map(|v| Polynomial::var(g.mode(), n, v).unwrap()).collect();
        images[i - 1] = &images[i - 1] + &Polynomial::constant(g.mode(), n, a.clone());
        prop_assert_eq!(&f.substitute(&images).unwrap() - &f, g);
    }

    #[test]
    fn factorization_round_trip(phi in (mode(), 1usize..=4).prop_flat_map(|(m, n)| unitriangular(m, n, 3))) {
        let fac = factorize_unitriangular(&phi).unwrap();
        prop_assert_eq!(fac.recompose().unwrap(), phi.clone());
        let mut last = usize::MAX;
        for factor in &fac.factors {
            prop_assert!(factor.is_in_layer(factor.index()));
            prop_assert!(factor.index() < last);
            last = factor.index();
        }
    }

    #[test]
    fn single_commutator(omega in (mode(), 2usize..=3).prop_flat_map(|(m, n)| unitriangular(m, n, 3))) {
        let n = omega.n();
        let mut images = omega.images().to_vec();
        images[n - 1] = Polynomial::var(omega.mode(), n, n).unwrap();
        let omega = Endomorphism::new(images).unwrap();
        let expr = express_as_single_commutator(&omega).unwrap();
        prop_assert!(expr.parts_in_layers());
        prop_assert_eq!(expr.evaluate().unwrap(), omega);
    }

    #[test]
    fn b_word_translation(e in (mode(), 1usize..=4).prop_flat_map(|(m, n)| elementary(m, n, 4))) {
        let w = to_b_generators(&e).unwrap();
        prop_assert!(w.len() <= 3);
        prop_assert_eq!(evaluate_b_word(&w, e.mode(), e.n()).unwrap(), e.to_endomorphism());
    }

    #[test]
    fn same_index_pairs_are_metabelian(
        (a, b, f, g) in (mode(), 2usize..=3).prop_flat_map(|(m, n)| {
            let vars: Vec<usize> = (2..=n).collect();
            (nonzero_q(), nonzero_q(), poly_in(m, n, vars.clone(), 3, 3), poly_in(m, n, vars, 3, 3))
        })
    ) {
        prop_assume!(!a.is_one() || !b.is_one());
        let x = Elementary::new(1, a.clone(), f.clone()).unwrap().to_endomorphism();
        let y = Elementary::new(1, b.clone(), g.clone()).unwrap().to_endomorphism();
        let c = x.commutator(&y).unwrap();
        let one = Q::one();
        let expected_f = &g.scale(&((&one - a.recip()) / &b)) - &f.scale(&((&one - b.recip()) / &a));
        prop_assert_eq!(c.clone(), Elementary::unipotent(1, expected_f).unwrap().to_endomorphism());
        let z = x.commutator(&c).unwrap();
        prop_assert!(c.commutator(&y.commutator(&z).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn constant_shift_pairs_land_in_first_layer(
        (a, b, f, c0) in (mode(), 2usize..=3).prop_flat_map(|(m, n)| {
            (nonzero_q(), nonzero_q(), poly_in(m, n, (2..=n).collect(), 3, 3), small_q().prop_map(move |c| Polynomial::constant(m, n, c)))
        })
    ) {
        let x = Elementary::new(1, a, f).unwrap().to_endomorphism();
        let y = Elementary::new(2, b, c0).unwrap().to_endomorphism();
        let c = x.commutator(&y).unwrap();
        let e = Elementary::from_endomorphism(&c).unwrap();
        prop_assert!(e.is_identity() || e.is_in_layer(1));
        let d = c.conjugate(&x).unwrap();
        prop_assert!(c.commutator(&d).unwrap().is_identity());
    }

    #[test]
    fn order_cross_check(e in (mode(), 1usize..=3).prop_flat_map(|(m, n)| elementary(m, n, 2))) {
        let phi = e.to_endomorphism();
        match analysis::element_order(&e) {
            ElementOrder::Finite(k) => {
                prop_assert!(phi.power(k as i64).unwrap().is_identity());
                for d in 1..k {
                    if k % d == 0 {
                        prop_assert!(!phi.power(d as i64).unwrap().is_identity());
                    }
                }
            }
            ElementOrder::Infinite => {
                for d in 1..=6 {
                    prop_assert!(!phi.power(d).unwrap().is_identity());
                }
            }
        }
    }

    #[test]
    fn diagonalization(e in (mode(), 1usize..=3).prop_flat_map(|(m, n)| elementary(m, n, 3))) {
        match analysis::diagonalize_elementary(&e) {
            Ok(Diagonalization::Conjugator { c, d }) => {
                prop_assert_eq!(e.to_endomorphism().conjugate(&c.to_endomorphism()).unwrap(), d.clone());
                prop_assert!(d.images().iter().enumerate().all(|(k, img)| img.num_terms() == 1 && img.total_degree().finite() == Some(1) && img.involves(k + 1)));
            }
            Ok(Diagonalization::NotDiagonalizable) => prop_assert!(e.alpha().is_one()),
            Err(_) => prop_assert!(e.is_identity()),
        }
    }

    #[test]
    fn free_pair_growth(
        (p, qd) in prop_oneof![Just((2u32, 1u32)), Just((1, 2)), Just((2, 2)), Just((3, 1)), Just((1, 3))],
        lower_f in poly_in(P, 2, vec![2], 1, 2),
        lower_g in poly_in(P, 2, vec![1], 1, 2),
        exps in prop::collection::vec(prop_oneof![-2i64..=-1, 1i64..=2], 2..=6),
        alpha in prop_oneof![Just(q(1, 1)), Just(q(-1, 1)), Just(q(2, 1))],
    ) {
        let f = &parse_polynomial(&format!("x2^{p}"), P, 2).unwrap() + &lower_f;
        let g = &parse_polynomial(&format!("x1^{qd}"), P, 2).unwrap() + &lower_g;
        prop_assume!(f.degree_in_var(2).unwrap().finite() == Some(p));
        prop_assume!(g.degree_in_var(1).unwrap().finite() == Some(qd));
        let phi = Elementary::new(1, alpha.clone(), f).unwrap();
        let psi = Elementary::new(2, q(1, 1), g).unwrap();
        let syllables: Vec<(Generator, i64)> = exps
            .iter()
            .enumerate()
            .map(|(k, &e)| {
                let gen = if k % 2 == 0 { Generator::A } else { Generator::B };
                let e = if gen == Generator::A && alpha == q(-1, 1) { 1 } else { e };
                (gen, e)
            })
            .collect();
        let word = GroupWord::new(syllables).unwrap();
        match analysis::free_pair_check(&phi, &psi, &word) {
            Ok(c) => {
                prop_assert!(c.valid, "{:?}", c);
                prop_assert_eq!(c.observed_degree, ((p * qd) as u64).pow(c.m));
            }
            Err(triaut::Error::WordInCyclicFactor) => {}
            Err(e) => prop_assert!(false, "unexpected {e:?}"),
        }
    }
}

#[test]
fn transposition_words_follow_symmetric_group() {
    for n in 2..=4usize {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|k| (k + 1..=n).map(move |s| (k, s))).collect();
        // every word of length <= 3 in the transpositions
        let mut words: Vec<Vec<(usize, usize)>> = vec![vec![]];
        for _ in 0..3 {
            let next: Vec<_> = words
                .iter()
                .flat_map(|w| pairs.iter().map(move |&t| [w.clone(), vec![t]].concat()))
                .collect();
            words.extend(next);
        }
        for w in &words {
            let maps: Vec<Endomorphism> = w.iter().map(|&(k, s)| Endomorphism::transposition(P, n, k, s).unwrap()).collect();
            let phi = Endomorphism::compose_all(P, n, &maps).unwrap();
            // x_i^(t1 t2 ...) = x_(pi(i)) with pi applied left to right on indices
            let mut perm: Vec<usize> = (1..=n).collect();
            for &(k, s) in w {
                for v in perm.iter_mut() {
                    if *v == k {
                        *v = s;
                    } else if *v == s {
                        *v = k;
                    }
                }
            }
            for i in 1..=n {
                assert!(phi.image(i).is_var(perm[i - 1]), "word {w:?}");
            }
        }
    }
}

#[test]
fn empty_and_degenerate_inputs() {
    let z = Polynomial::zero(P, 2);
    assert!(z.substitute(&[z.clone(), z.clone()]).unwrap().is_zero());
    assert!(solve_difference(&z, 1, &q(1, 1)).unwrap().is_zero());
    let id = Endomorphism::identity(F, 3);
    assert!(factorize_unitriangular(&id).unwrap().factors.is_empty());
    assert!(express_as_single_commutator(&id).unwrap().evaluate().unwrap().is_identity());
    assert!(matches!(
        solve_difference(&z, 1, &Q::zero()),
        Err(triaut::Error::ZeroShift)
    ));
}
