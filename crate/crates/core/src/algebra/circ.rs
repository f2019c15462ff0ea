//! Laurent polynomials in the circle variable τ.
//!
//! On |τ| = 1 the conjugate τ̄ equals τ⁻¹, so every expression in τ and τ̄
//! collapses to a Laurent polynomial in τ alone.

use std::collections::BTreeMap;
use std::fmt;

use super::{GComplex, Ring};

/// Sparse Laurent polynomial `Σ c_e τ^e` with coefficients in `R`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent<R> {
    terms: BTreeMap<i64, R>,
}

/// Laurent polynomial on the unit circle with exact Gaussian-rational
/// coefficients.
pub type CircPoly = Laurent<GComplex>;

impl<R: Ring> Default for Laurent<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Ring> Laurent<R> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `τ - 1`
    pub fn tau_minus_one() -> Self {
        let mut p = Self::monomial(1, R::ring_one());
        p.add_term(0, R::ring_one().neg_ref());
        p
    }

    /// `τ̄ - 1 = τ⁻¹ - 1` on the circle.
    pub fn taubar_minus_one() -> Self {
        let mut p = Self::monomial(-1, R::ring_one());
        p.add_term(0, R::ring_one().neg_ref());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: R) {
        if c.is_ring_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                existing.add_assign_ref(&c);
                if existing.is_ring_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::ring_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(R::ring_one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.mul_ref(c))))
    }

    /// Multiplies by `τ^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl CircPoly {
    /// Evaluates at a point τ₀ ≠ 0 (typically on the unit circle).
    pub fn eval(&self, tau: &GComplex) -> GComplex {
        let inv = tau.inv().expect("evaluation at tau = 0");
        self.terms
            .iter()
            .map(|(e, c)| {
                let p = if *e >= 0 {
                    tau.pow(*e as u32)
                } else {
                    inv.pow((-*e) as u32)
                };
                c * &p
            })
            .sum()
    }
}

impl fmt::Display for CircPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*tau^{e}")?;
        }
        Ok(())
    }
}

/// Rewrites `Σ c·τ^j τ̄^k` as the Laurent polynomial `Σ c·τ^(j-k)`.
pub fn circ_reduce<I>(terms: I) -> CircPoly
where
    I: IntoIterator<Item = (i64, i64, GComplex)>,
{
    CircPoly::from_terms(terms.into_iter().map(|(j, k, c)| (j - k, c)))
}

/// Coefficient of τ⁻¹; the contour integral over |τ| = 1 is 2πi times this.
pub fn residue(p: &CircPoly) -> GComplex {
    p.coeff(-1)
}
