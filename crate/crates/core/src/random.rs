//! Seeded random instances, shared by the verifiers and the test suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::endomorphism::{Elementary, Endomorphism};
use crate::monomial::Monomial;
use crate::polynomial::{AlgebraMode, Polynomial};
use crate::scalar::{ratio, Scalar};

/// A small rational, possibly zero.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let num = rng.gen_range(-4..=4);
    let den = *[1, 1, 1, 2, 3].choose(rng).expect("nonempty");
    ratio(num, den)
}

pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let c = scalar(rng);
        if c != ratio(0, 1) {
            return c;
        }
    }
}

/// Random polynomial in the given 1-based variables with total degree at
/// most `max_degree` and at most `max_terms` terms. An empty variable list
/// yields a constant.
pub fn polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    mode: AlgebraMode,
    n: usize,
    vars: &[usize],
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Monomial, Scalar)> = (0..count)
        .map(|_| {
            let degree = if vars.is_empty() { 0 } else { rng.gen_range(0..=max_degree) };
            let letters: Vec<u32> = (0..degree)
                .map(|_| (*vars.choose(rng).expect("nonempty") - 1) as u32)
                .collect();
            let m = match mode {
                AlgebraMode::Free => Monomial::Free(letters),
                AlgebraMode::Commutative => {
                    let mut e = vec![0; n];
                    for l in letters {
                        e[l as usize] += 1;
                    }
                    Monomial::Commutative(e)
                }
            };
            (m, nonzero_scalar(rng))
        })
        .collect();
    Polynomial::from_terms(mode, n, terms)
}

/// `sigma(i, alpha, f)` with random `i`, `alpha` and `f` free of `x_i`.
pub fn elementary<R: Rng + ?Sized>(rng: &mut R, mode: AlgebraMode, n: usize, max_degree: u32) -> Elementary {
    let i = rng.gen_range(1..=n);
    elementary_at(rng, mode, n, i, max_degree)
}

pub fn elementary_at<R: Rng + ?Sized>(
    rng: &mut R,
    mode: AlgebraMode,
    n: usize,
    i: usize,
    max_degree: u32,
) -> Elementary {
    let vars: Vec<usize> = (1..=n).filter(|&v| v != i).collect();
    let f = polynomial(rng, mode, n, &vars, max_degree, 4);
    Elementary::new(i, nonzero_scalar(rng), f).expect("valid elementary")
}

/// A random element `sigma(i, 1, g)` of the layer `G_i`.
pub fn layer_element<R: Rng + ?Sized>(rng: &mut R, mode: AlgebraMode, n: usize, i: usize, max_degree: u32) -> Elementary {
    let vars: Vec<usize> = (i + 1..=n).collect();
    let g = polynomial(rng, mode, n, &vars, max_degree, 4);
    Elementary::unipotent(i, g).expect("valid layer element")
}

/// `x_i -> alpha_i x_i + f_i(x_{i+1}, ..., x_n)`; unitriangular when `unit`.
pub fn triangular<R: Rng + ?Sized>(rng: &mut R, mode: AlgebraMode, n: usize, max_degree: u32, unit: bool) -> Endomorphism {
    let images = (1..=n)
        .map(|i| {
            let vars: Vec<usize> = (i + 1..=n).collect();
            let f = if rng.gen_bool(0.2) {
                Polynomial::zero(mode, n)
            } else {
                polynomial(rng, mode, n, &vars, max_degree, 3)
            };
            let alpha = if unit { ratio(1, 1) } else { nonzero_scalar(rng) };
            &Polynomial::var(mode, n, i).expect("index in range").scale(&alpha) + &f
        })
        .collect();
    Endomorphism::new(images).expect("consistent images")
}

/// Element of the derived subgroup: unitriangular and fixing `x_n`.
pub fn derived_element<R: Rng + ?Sized>(rng: &mut R, mode: AlgebraMode, n: usize, max_degree: u32) -> Endomorphism {
    let mut images = triangular(rng, mode, n, max_degree, true).images().to_vec();
    images[n - 1] = Polynomial::var(mode, n, n).expect("index in range");
    Endomorphism::new(images).expect("consistent images")
}
