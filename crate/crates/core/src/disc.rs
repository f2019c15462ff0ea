//! Straight analytic discs through the pole `z_o = (0, 1)`.
//!
//! For a parameter `a ∈ ℂ` and `s = 1 + |a|²` the disc is
//!
//! ```text
//! D_a(τ) = ( (τ − 1)·a / s ,  (τ − 1)/s + 1 ),   |τ| ≤ 1
//! ```
//!
//! Its boundary circle lies on the unit sphere and `D_a(1) = z_o`. As
//! `|a| → ∞` the disc shrinks towards the complex tangent line at `z_o`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{CircPoly, GComplex, Laurent, ParamPoly};
use crate::boundary::BPoly2;
use crate::error::{Error, Result};

/// A concrete disc parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscParam {
    pub a: GComplex,
}

impl DiscParam {
    pub fn new(a: GComplex) -> Self {
        DiscParam { a }
    }

    /// `1 + |a|²`, a positive rational.
    pub fn scale(&self) -> BigRational {
        BigRational::one() + self.a.norm_sqr()
    }
}

/// Exact rational point `((1 − t²) + 2t·i) / (1 + t²)` of the unit circle.
pub fn circle_point(t: &BigRational) -> GComplex {
    let t2 = t * t;
    let den = BigRational::one() + &t2;
    GComplex::new(
        (BigRational::one() - &t2) / &den,
        (BigRational::from_integer(BigInt::from(2)) * t) / &den,
    )
}

/// Exact point of the unit sphere in ℂ²: `(c·τ₁, s·τ₂)` where `c + s·i` is
/// the circle point for `t_mix`.
pub fn sphere_point(t1: &BigRational, t2: &BigRational, t_mix: &BigRational) -> (GComplex, GComplex) {
    let mix = circle_point(t_mix);
    (
        circle_point(t1).scale(&mix.re),
        circle_point(t2).scale(&mix.im),
    )
}

/// Point `D_a(τ)` for `τ` exactly on the unit circle.
pub fn disc_eval(d: &DiscParam, tau: &GComplex) -> Result<(GComplex, GComplex)> {
    let n = tau.norm_sqr();
    if !n.is_one() {
        return Err(Error::NotOnCircle(n.to_string()));
    }
    let inv_s = GComplex::real(d.scale().recip());
    let lead = (tau - &GComplex::one()) * &inv_s;
    let z1 = &lead * &d.a;
    let z2 = lead + GComplex::one();
    Ok((z1, z2))
}

/// Pullback `f ∘ D_a` restricted to |τ| = 1, as a Laurent polynomial in τ.
pub fn disc_pullback(f: &BPoly2, d: &DiscParam) -> CircPoly {
    let inv_s = GComplex::real(d.scale().recip());
    let a_over_s = &d.a * &inv_s;
    let z1 = CircPoly::tau_minus_one().scale(&a_over_s);
    let z1_bar = CircPoly::taubar_minus_one().scale(&a_over_s.conj());
    let one = CircPoly::constant(GComplex::one());
    let z2 = CircPoly::tau_minus_one().scale(&inv_s).add(&one);
    let z2_bar = CircPoly::taubar_minus_one().scale(&inv_s).add(&one);

    let mut powers = PowerCache::new([z1, z1_bar, z2, z2_bar]);
    let mut out = CircPoly::zero();
    for (mono, c) in f.terms() {
        let term = powers
            .get(0, mono.h)
            .mul(&powers.get(1, mono.k))
            .mul(&powers.get(2, mono.m))
            .mul(&powers.get(3, mono.p));
        out = out.add(&term.scale(c));
    }
    out
}

/// Pullback with `a` kept formal, cleared of its denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicPullback {
    /// `(1 + αᾱ)^cleared_power · (f ∘ D_a)` as a Laurent polynomial in τ
    /// with coefficients in (α, ᾱ).
    pub numerator: Laurent<ParamPoly>,
    pub cleared_power: u32,
}

impl SymbolicPullback {
    /// Value at a concrete `a` after dividing out `(1 + |a|²)^L`.
    pub fn eval(&self, a: &GComplex) -> CircPoly {
        let s = BigRational::one() + a.norm_sqr();
        let inv = GComplex::real(s.recip()).pow(self.cleared_power);
        self.numerator.map_coeffs(|q| &q.eval(a) * &inv)
    }
}

/// The four disc coordinates `s·z₁, s·z̄₁, s·z₂, s·z̄₂` on |τ| = 1, with
/// `s = 1 + αᾱ`.
pub fn disc_coordinates_symbolic() -> [Laurent<ParamPoly>; 4] {
    let s = Laurent::constant(ParamPoly::disc_scale());
    [
        Laurent::tau_minus_one().scale(&ParamPoly::alpha()),
        Laurent::taubar_minus_one().scale(&ParamPoly::alpha_bar()),
        Laurent::tau_minus_one().add(&s),
        Laurent::taubar_minus_one().add(&s),
    ]
}

/// Pullback with `a` formal; the cleared power is `weighted_degree(f)`
/// (0 for the zero polynomial).
pub fn disc_pullback_symbolic(f: &BPoly2) -> SymbolicPullback {
    let cleared_power = f.weighted_degree().unwrap_or(0);
    let s = Laurent::constant(ParamPoly::disc_scale());
    let mut powers = PowerCache::new(disc_coordinates_symbolic());
    let mut scale_powers = PowerCache::new([s]);
    let mut numerator = Laurent::zero();
    for (mono, c) in f.terms() {
        let used = mono.h + mono.k + mono.m + mono.p;
        let term = powers
            .get(0, mono.h)
            .mul(&powers.get(1, mono.k))
            .mul(&powers.get(2, mono.m))
            .mul(&powers.get(3, mono.p))
            .mul(&scale_powers.get(0, cleared_power - used));
        numerator = numerator.add(&term.scale(&ParamPoly::constant(c.clone())));
    }
    SymbolicPullback {
        numerator,
        cleared_power,
    }
}

/// Memoized powers of a fixed set of Laurent polynomials.
struct PowerCache<R: crate::algebra::Ring, const K: usize> {
    powers: [Vec<Laurent<R>>; K],
}

impl<R: crate::algebra::Ring, const K: usize> PowerCache<R, K> {
    fn new(bases: [Laurent<R>; K]) -> Self {
        PowerCache {
            powers: bases.map(|b| vec![Laurent::constant(R::ring_one()), b]),
        }
    }

    fn get(&mut self, which: usize, exp: u32) -> Laurent<R> {
        let list = &mut self.powers[which];
        while list.len() <= exp as usize {
            let next = list[list.len() - 1].mul(&list[1]);
            list.push(next);
        }
        list[exp as usize].clone()
    }
}
