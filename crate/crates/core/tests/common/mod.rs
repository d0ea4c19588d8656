//! Oracles and generators shared by the integration tests. The oracles do
//! not call back into the library's arithmetic: they read terms and
//! evaluate with plain rationals.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use triaut::{AlgebraMode, Elementary, Endomorphism, Monomial, Polynomial};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Value of a commutative polynomial at a point.
pub fn eval_at(p: &Polynomial, point: &[Q]) -> Q {
    let mut total = Q::zero();
    for (m, c) in p.terms() {
        let Monomial::Commutative(exps) = m else { panic!("commutative input expected") };
        let mut v = c.clone();
        for (x, &e) in point.iter().zip(exps) {
            for _ in 0..e {
                v *= x;
            }
        }
        total += v;
    }
    total
}

/// 2x2 rational matrices, a faithful enough target for free-mode identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat(pub [[Q; 2]; 2]);

impl Mat {
    pub fn scalar(c: Q) -> Mat {
        Mat([[c.clone(), Q::zero()], [Q::zero(), c]])
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn add(&self, o: &Mat) -> Mat {
        let e = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Mat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, c: &Q) -> Mat {
        let e = |i: usize, j: usize| &self.0[i][j] * c;
        Mat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

/// Value of a free polynomial at a tuple of matrices.
pub fn eval_free(p: &Polynomial, mats: &[Mat]) -> Mat {
    let mut total = Mat::scalar(Q::zero());
    for (m, c) in p.terms() {
        let Monomial::Free(letters) = m else { panic!("free input expected") };
        let mut v = Mat::scalar(Q::one());
        for &l in letters {
            v = v.mul(&mats[l as usize]);
        }
        total = total.add(&v.scale(c));
    }
    total
}

pub fn small_q() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=3).prop_map(|(a, b)| q(a, b))
}

pub fn nonzero_q() -> impl Strategy<Value = Q> {
    small_q().prop_filter("nonzero", |c| !c.is_zero())
}

pub fn mode() -> impl Strategy<Value = AlgebraMode> {
    prop_oneof![Just(AlgebraMode::Commutative), Just(AlgebraMode::Free)]
}

fn build(mode: AlgebraMode, n: usize, terms: Vec<(Q, Vec<usize>)>) -> Polynomial {
    let terms = terms.into_iter().map(|(c, letters)| {
        let m = match mode {
            AlgebraMode::Free => Monomial::Free(letters.iter().map(|&v| (v - 1) as u32).collect()),
            AlgebraMode::Commutative => {
                let mut e = vec![0u32; n];
                for v in letters {
                    e[v - 1] += 1;
                }
                Monomial::Commutative(e)
            }
        };
        (m, c)
    });
    Polynomial::from_terms(mode, n, terms)
}

/// Polynomial in the 1-based variables `vars`.
pub fn poly_in(
    mode: AlgebraMode,
    n: usize,
    vars: Vec<usize>,
    max_degree: usize,
    max_terms: usize,
) -> BoxedStrategy<Polynomial> {
    if vars.is_empty() {
        return small_q()
            .prop_map(move |c| Polynomial::constant(mode, n, c))
            .boxed();
    }
    let letters = prop::collection::vec(prop::sample::select(vars), 0..=max_degree);
    prop::collection::vec((small_q(), letters), 0..=max_terms)
        .prop_map(move |terms| build(mode, n, terms))
        .boxed()
}

pub fn poly(mode: AlgebraMode, n: usize, max_degree: usize, max_terms: usize) -> BoxedStrategy<Polynomial> {
    poly_in(mode, n, (1..=n).collect(), max_degree, max_terms)
}

/// A unitriangular automorphism `x_i -> x_i + f_i(x_{i+1}, ..., x_n)`.
pub fn unitriangular(mode: AlgebraMode, n: usize, max_degree: usize) -> BoxedStrategy<Endomorphism> {
    let tails: Vec<_> = (1..=n).map(|i| poly_in(mode, n, (i + 1..=n).collect(), max_degree, 3)).collect();
    tails
        .prop_map(move |tails| {
            let images = tails
                .into_iter()
                .enumerate()
                .map(|(k, t)| &Polynomial::var(mode, n, k + 1).unwrap() + &t)
                .collect();
            Endomorphism::new(images).unwrap()
        })
        .boxed()
}

/// A triangular automorphism with nonzero diagonal coefficients.
pub fn triangular(mode: AlgebraMode, n: usize, max_degree: usize) -> BoxedStrategy<Endomorphism> {
    (unitriangular(mode, n, max_degree), prop::collection::vec(nonzero_q(), n))
        .prop_map(move |(u, alphas)| {
            let images = u
                .images()
                .iter()
                .zip(&alphas)
                .enumerate()
                .map(|(k, (img, a))| {
                    let x = Polynomial::var(mode, n, k + 1).unwrap();
                    &(img - &x) + &x.scale(a)
                })
                .collect();
            Endomorphism::new(images).unwrap()
        })
        .boxed()
}

pub fn elementary(mode: AlgebraMode, n: usize, max_degree: usize) -> BoxedStrategy<Elementary> {
    (1..=n)
        .prop_flat_map(move |i| {
            let vars: Vec<usize> = (1..=n).filter(|&v| v != i).collect();
            (Just(i), nonzero_q(), poly_in(mode, n, vars, max_degree, 4))
        })
        .prop_map(|(i, a, f)| Elementary::new(i, a, f).unwrap())
        .boxed()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

/// Coefficients in `x2` of `sum_k C(m,k) (-1)^k l (x2 + l^2 (m - k))^p`,
/// lowest degree first.
pub fn witness_closed_form(p: u32, l: u32, m: u32) -> Vec<Q> {
    let l_big = BigInt::from(l);
    let mut coeffs = vec![Q::zero(); p as usize + 1];
    for k in 0..=m {
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let shift = &l_big * &l_big * BigInt::from(m - k);
        for j in 0..=p {
            let term = binomial(m as u64, k as u64)
                * &sign
                * &l_big
                * binomial(p as u64, j as u64)
                * num_traits::pow(shift.clone(), (p - j) as usize);
            coeffs[j as usize] += Q::from_integer(term);
        }
    }
    coeffs
}

/// Coefficients of a polynomial in `x2` alone (`P_3`), lowest degree first.
pub fn x2_coefficients(w: &Polynomial, len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (m, c) in w.terms() {
        let Monomial::Commutative(e) = m else { panic!("commutative witness expected") };
        assert!(e[0] == 0 && e[2] == 0, "witness involves x1 or x3");
        let d = e[1] as usize;
        if d >= out.len() {
            out.resize(d + 1, Q::zero());
        }
        out[d] = c.clone();
    }
    out
}

pub fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
