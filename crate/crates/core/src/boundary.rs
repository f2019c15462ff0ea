//! Polynomial boundary data on the sphere |z₁|² + |z₂|² = 1 in ℂ².

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{binomial, GComplex};
use crate::error::{Error, Result};

/// Monomial `z₁^h z̄₁^k z₂^m z̄₂^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono2 {
    pub h: u32,
    pub k: u32,
    pub m: u32,
    pub p: u32,
}

impl Mono2 {
    pub const fn new(h: u32, k: u32, m: u32, p: u32) -> Self {
        Mono2 { h, k, m, p }
    }

    /// `h + k + 2m + 2p`: the second variable and its conjugate weigh 2.
    pub fn weighted_degree(&self) -> u32 {
        self.h + self.k + 2 * self.m + 2 * self.p
    }

    /// Total power of conjugated variables.
    pub fn antiholomorphic_degree(&self) -> u32 {
        self.k + self.p
    }

    pub fn is_holomorphic(&self) -> bool {
        self.k == 0 && self.p == 0
    }

    pub fn is_normal(&self) -> bool {
        self.m == 0 || self.p == 0
    }

    pub fn mul(&self, rhs: &Mono2) -> Mono2 {
        Mono2::new(self.h + rhs.h, self.k + rhs.k, self.m + rhs.m, self.p + rhs.p)
    }
}

/// Finite sum `Σ b · z₁^h z̄₁^k z₂^m z̄₂^p` with exact coefficients and no
/// stored zeros. The empty map is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BPoly2 {
    coeffs: BTreeMap<Mono2, GComplex>,
}

impl BPoly2 {
    pub fn zero() -> Self {
        BPoly2::default()
    }

    pub fn constant(c: GComplex) -> Self {
        Self::monomial(Mono2::default(), c)
    }

    pub fn one() -> Self {
        Self::constant(GComplex::one())
    }

    pub fn monomial(mono: Mono2, c: GComplex) -> Self {
        let mut f = Self::zero();
        f.add_term(mono, c);
        f
    }

    pub fn z1() -> Self {
        Self::monomial(Mono2::new(1, 0, 0, 0), GComplex::one())
    }

    pub fn z1_bar() -> Self {
        Self::monomial(Mono2::new(0, 1, 0, 0), GComplex::one())
    }

    pub fn z2() -> Self {
        Self::monomial(Mono2::new(0, 0, 1, 0), GComplex::one())
    }

    pub fn z2_bar() -> Self {
        Self::monomial(Mono2::new(0, 0, 0, 1), GComplex::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono2, GComplex)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (mono, c) in terms {
            f.add_term(mono, c);
        }
        f
    }

    pub fn add_term(&mut self, mono: Mono2, c: GComplex) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&mono) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.coeffs.remove(&mono);
                }
            }
            None => {
                self.coeffs.insert(mono, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono2, &GComplex)> + '_ {
        self.coeffs.iter()
    }

    pub fn coeff(&self, mono: &Mono2) -> GComplex {
        self.coeffs.get(mono).cloned().unwrap_or_else(GComplex::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mono, c) in &rhs.coeffs {
            out.add_term(*mono, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mono, c) in &rhs.coeffs {
            out.add_term(*mono, -c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &rhs.coeffs {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &GComplex) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(m, x)| (*m, x * c)))
    }

    /// Maximum weighted degree over the monomials.
    pub fn weighted_degree(&self) -> Result<u32> {
        self.coeffs
            .keys()
            .map(Mono2::weighted_degree)
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    /// Largest `k + p` over the monomials, 0 for the zero polynomial.
    pub fn max_antiholomorphic_degree(&self) -> u32 {
        self.coeffs
            .keys()
            .map(Mono2::antiholomorphic_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn is_normal(&self) -> bool {
        self.coeffs.keys().all(Mono2::is_normal)
    }

    pub fn is_z2bar_free(&self) -> bool {
        self.coeffs.keys().all(|m| m.p == 0)
    }

    /// Rewrites `z₂z̄₂ → 1 − z₁z̄₁` until no monomial carries both `z₂` and
    /// `z̄₂`. The rewrite for `(z₂z̄₂)^r` is applied in one binomial step.
    pub fn normal_form(&self) -> BPoly2 {
        let mut out = BPoly2::zero();
        for (mono, c) in &self.coeffs {
            let r = mono.m.min(mono.p);
            if r == 0 {
                out.add_term(*mono, c.clone());
                continue;
            }
            for j in 0..=r {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let b = GComplex::real(num_rational::BigRational::from_integer(
                    binomial(r, j) * BigInt::from(sign),
                ));
                let target = Mono2::new(mono.h + j, mono.k + j, mono.m - r, mono.p - r);
                out.add_term(target, c * &b);
            }
        }
        out
    }

    /// Coefficient criterion: no monomial carries a conjugated variable.
    pub fn is_holomorphic(&self) -> Result<bool> {
        self.require_normal()?;
        Ok(self.coeffs.keys().all(Mono2::is_holomorphic))
    }

    /// Drops every monomial with `k > 0` or `p > 0`.
    pub fn holomorphic_part(&self) -> Result<BPoly2> {
        self.require_normal()?;
        Ok(self.filter(|m| m.is_holomorphic()))
    }

    pub fn antiholomorphic_part(&self) -> BPoly2 {
        self.filter(|m| !m.is_holomorphic())
    }

    pub fn filter(&self, keep: impl Fn(&Mono2) -> bool) -> BPoly2 {
        BPoly2 {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    fn require_normal(&self) -> Result<()> {
        if self.is_normal() {
            Ok(())
        } else {
            Err(Error::NotNormalForm)
        }
    }

    /// Exact value at `(z₁, z₂)`; conjugates are taken from the point.
    pub fn eval(&self, z1: &GComplex, z2: &GComplex) -> GComplex {
        let (z1b, z2b) = (z1.conj(), z2.conj());
        self.coeffs
            .iter()
            .map(|(m, c)| c * &(z1.pow(m.h) * z1b.pow(m.k) * z2.pow(m.m) * z2b.pow(m.p)))
            .sum()
    }

    pub fn eval_f64(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let (z1b, z2b) = (z1.conj(), z2.conj());
        self.coeffs
            .iter()
            .map(|(m, c)| {
                c.to_complex64()
                    * z1.powu(m.h)
                    * z1b.powu(m.k)
                    * z2.powu(m.m)
                    * z2b.powu(m.p)
            })
            .sum()
    }

    /// Substitutes `z₂ = 1 + w` (and `z̄₂ = 1 + w̄`) and returns the
    /// expansion in `(z₁, z̄₁, w, w̄)`, reusing the `Mono2` slots for `w`.
    pub fn expand_at_pole(&self) -> BPoly2 {
        let shift = BPoly2::one().add(&BPoly2::z2());
        let shift_bar = BPoly2::one().add(&BPoly2::z2_bar());
        let mut out = BPoly2::zero();
        for (mono, c) in &self.coeffs {
            let head = BPoly2::monomial(Mono2::new(mono.h, mono.k, 0, 0), c.clone());
            let term = head.mul(&shift.pow(mono.m)).mul(&shift_bar.pow(mono.p));
            out = out.add(&term);
        }
        out
    }

    /// Inverse of [`BPoly2::expand_at_pole`]: substitutes `w = z₂ − 1`.
    pub fn collapse_from_pole(&self) -> BPoly2 {
        let minus_one = BPoly2::constant(-GComplex::one());
        let shift = BPoly2::z2().add(&minus_one);
        let shift_bar = BPoly2::z2_bar().add(&minus_one);
        let mut out = BPoly2::zero();
        for (mono, c) in &self.coeffs {
            let head = BPoly2::monomial(Mono2::new(mono.h, mono.k, 0, 0), c.clone());
            let term = head.mul(&shift.pow(mono.m)).mul(&shift_bar.pow(mono.p));
            out = out.add(&term);
        }
        out
    }
}

/// The monomials of weighted degree at most `max_degree`, optionally only
/// those in normal form (`min(m, p) = 0`), in ascending order.
pub fn monomial_basis(max_degree: u32, normal_only: bool) -> Vec<Mono2> {
    let mut out = Vec::new();
    for m in 0..=max_degree / 2 {
        for p in 0..=(max_degree / 2 - m) {
            if normal_only && m > 0 && p > 0 {
                continue;
            }
            let rest = max_degree - 2 * (m + p);
            for h in 0..=rest {
                for k in 0..=(rest - h) {
                    out.push(Mono2::new(h, k, m, p));
                }
            }
        }
    }
    out.sort();
    out
}
