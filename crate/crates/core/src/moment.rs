//! Moments `G(a, N) = ∮ τ^N f(D_a(τ)) dτ` over |τ| = 1.
//!
//! Every value here is the exact `μ` in `G = 2πi·μ`.
//!
//! For a single monomial the core integral has a closed form. On the circle
//! `(τ̄ − 1)^k = (−1)^k (τ − 1)^k τ^(−k)`, hence
//!
//! ```text
//! (1/2πi) ∮ τ^N (τ − 1)^(h+m) (τ̄ − 1)^k dτ
//!     = (−1)^(h+k+m+N+1) · C(h+k+m, k−N−1)      (0 when k ≤ N)
//! ```
//!
//! The sign is the one produced by direct expansion
//! ([`monomial_moment_by_expansion`]); the two routes are checked against
//! each other exhaustively in the tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{binomial, circ_reduce, residue, GComplex, ParamPoly};
use crate::boundary::BPoly2;
use crate::disc::{disc_pullback, disc_pullback_symbolic, DiscParam};

/// `μ` with `G(a, N) = 2πi·μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentValue {
    pub mu: GComplex,
}

impl MomentValue {
    pub fn is_zero(&self) -> bool {
        self.mu.is_zero()
    }
}

/// Exact moment of `f` on the disc `D_a`.
pub fn moment(f: &BPoly2, a: &GComplex, n: u32) -> MomentValue {
    let pullback = disc_pullback(f, &DiscParam::new(a.clone()));
    MomentValue {
        mu: residue(&pullback.shift(n as i64)),
    }
}

/// Closed-form core integral for `τ^N (τ − 1)^(h+m) (τ̄ − 1)^k`.
pub fn monomial_moment(h: u32, k: u32, m: u32, n: u32) -> GComplex {
    if k <= n {
        return GComplex::zero();
    }
    let total = h + k + m;
    let magnitude = binomial(total, k - n - 1);
    let signed = if (total + n + 1).is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    };
    GComplex::real(BigRational::from_integer(signed))
}

/// The same core integral by brute-force binomial expansion of both
/// factors, reduction with `τ̄ = τ⁻¹`, and reading off the residue.
pub fn monomial_moment_by_expansion(h: u32, k: u32, m: u32, n: u32) -> GComplex {
    let hol = h + m;
    let mut terms = Vec::new();
    for i in 0..=hol {
        let ci = signed_binomial(hol, i);
        for j in 0..=k {
            let cj = signed_binomial(k, j);
            let c = GComplex::real(BigRational::from_integer(&ci * &cj));
            terms.push((i as i64 + n as i64, j as i64, c));
        }
    }
    residue(&circ_reduce(terms))
}

/// Coefficient of `x^i` in `(x − 1)^n`.
fn signed_binomial(n: u32, i: u32) -> BigInt {
    let b = binomial(n, i);
    if (n - i).is_multiple_of(2) {
        b
    } else {
        -b
    }
}

/// Moment with `a` formal, cleared of `(1 + αᾱ)^cleared_power`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicMoment {
    pub poly: ParamPoly,
    pub cleared_power: u32,
}

impl SymbolicMoment {
    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    /// `μ(a, N)` at a concrete `a`.
    pub fn eval(&self, a: &GComplex) -> GComplex {
        let s = GComplex::real(BigRational::from_integer(1.into()) + a.norm_sqr());
        let denom = s.pow(self.cleared_power);
        self.poly.eval(a).checked_div(&denom).expect("1 + |a|^2 > 0")
    }
}

pub fn moment_symbolic(f: &BPoly2, n: u32) -> SymbolicMoment {
    let pullback = disc_pullback_symbolic(f);
    SymbolicMoment {
        poly: pullback.numerator.coeff(-(n as i64) - 1),
        cleared_power: pullback.cleared_power,
    }
}

/// Number of moments that can be nonzero: `max(k + p)` over the monomials.
/// A monomial with `k + p ≤ N` pulls back to nonnegative powers only after
/// multiplication by `τ^N`, so larger `N` contribute nothing.
pub fn moment_cutoff(f: &BPoly2) -> u32 {
    f.max_antiholomorphic_degree()
}

/// Decides whether `G(a, N) = 0` for every `a` and every `N ≥ 0`.
pub fn moments_vanish(f: &BPoly2) -> bool {
    first_nonvanishing_moment(f).is_none()
}

/// Smallest `N` with a nonzero symbolic moment, with that moment.
pub fn first_nonvanishing_moment(f: &BPoly2) -> Option<(u32, SymbolicMoment)> {
    if f.is_zero() {
        return None;
    }
    let pullback = disc_pullback_symbolic(f);
    (0..moment_cutoff(f)).find_map(|n| {
        let poly = pullback.numerator.coeff(-(n as i64) - 1);
        (!poly.is_empty()).then_some({
            (
                n,
                SymbolicMoment {
                    poly,
                    cleared_power: pullback.cleared_power,
                },
            )
        })
    })
}
