#![allow(dead_code)]

use holext::boundary::monomial_basis;
use holext::slicer::{monomial_basis_n, MonoN};
use holext::{BPoly2, BPolyN, GComplex, Mono2};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Small nonzero Gaussian rational.
pub fn gaussian<R: Rng>(rng: &mut R) -> GComplex {
    loop {
        let c = GComplex::from_parts(
            (rng.gen_range(-4..=4), rng.gen_range(1..=3)),
            (rng.gen_range(-4..=4), rng.gen_range(1..=3)),
        );
        if c != GComplex::from_int(0) {
            return c;
        }
    }
}

/// Random rational in `[-bound, bound]` with small denominator.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    let d = rng.gen_range(1..=7);
    q(rng.gen_range(-bound * d..=bound * d), d)
}

/// Random normal-form polynomial with up to `max_terms` terms of weighted
/// degree at most `max_degree`.
pub fn normal_poly<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize) -> BPoly2 {
    let basis = monomial_basis(max_degree, true);
    let count = rng.gen_range(1..=max_terms);
    BPoly2::from_terms(
        basis
            .choose_multiple(rng, count)
            .map(|m| (*m, gaussian(rng))),
    )
}

pub fn normal_poly_n<R: Rng>(rng: &mut R, n: usize, max_degree: u32, max_terms: usize) -> BPolyN {
    let basis = monomial_basis_n(n, max_degree, true);
    let count = rng.gen_range(1..=max_terms);
    let mut f = BPolyN::zero(n);
    for m in basis.choose_multiple(rng, count) {
        f.add_term(m.clone(), gaussian(rng));
    }
    f
}

pub fn mono(h: u32, k: u32, m: u32, p: u32) -> BPoly2 {
    BPoly2::monomial(Mono2::new(h, k, m, p), GComplex::from_int(1))
}

pub fn mono_n(m: &MonoN) -> BPolyN {
    BPolyN::monomial(m.clone(), GComplex::from_int(1))
}

/// Random expression text over `z1..zn`, with nesting, powers and
/// Gaussian literals.
pub fn expression<R: Rng>(rng: &mut R, n: usize, depth: u32) -> String {
    let leaf = |rng: &mut R| -> String {
        match rng.gen_range(0..5) {
            0 => format!("{}", rng.gen_range(0..9)),
            1 => format!("{}/{}", rng.gen_range(0..9), rng.gen_range(1..9)),
            2 => format!("({}/{}{:+}i)", rng.gen_range(-5..6), rng.gen_range(1..5), rng.gen_range(-5..6)),
            3 => format!("z{}", rng.gen_range(1..=n)),
            _ => format!("~z{}", rng.gen_range(1..=n)),
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..5) {
        0 => leaf(rng),
        1 => format!("{} + {}", expression(rng, n, depth - 1), expression(rng, n, depth - 1)),
        2 => format!("{} - {}", expression(rng, n, depth - 1), expression(rng, n, depth - 1)),
        3 => format!("{}*{}", expression(rng, n, depth - 1), expression(rng, n, depth - 1)),
        _ => format!("({})^{}", expression(rng, n, depth - 1), rng.gen_range(0..3)),
    }
}
