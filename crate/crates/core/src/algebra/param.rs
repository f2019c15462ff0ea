//! Polynomials in the formal disc-parameter pair (α, ᾱ).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{GComplex, Ring};

/// `Σ c_pq α^p ᾱ^q` with α and ᾱ treated as independent commuting
/// variables. Evaluation at a concrete `a` substitutes `α ← a`, `ᾱ ← conj(a)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<(u32, u32), GComplex>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn constant(c: GComplex) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(p: u32, q: u32, c: GComplex) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c);
        out
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 0, GComplex::one())
    }

    pub fn alpha_bar() -> Self {
        Self::monomial(0, 1, GComplex::one())
    }

    /// The formal scalar `s = 1 + αᾱ`, i.e. `1 + |a|²`.
    pub fn disc_scale() -> Self {
        let mut s = Self::constant(GComplex::one());
        s.add_term(1, 1, GComplex::one());
        s
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), GComplex)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for ((p, q), c) in terms {
            out.add_term(p, q, c);
        }
        out
    }

    pub fn add_term(&mut self, p: u32, q: u32, c: GComplex) {
        if c.is_zero() {
            return;
        }
        let key = (p, q);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &GComplex)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, p: u32, q: u32) -> GComplex {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(GComplex::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((p, q), c) in &rhs.terms {
            out.add_term(*p, *q, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((p, q), c) in &rhs.terms {
            out.add_term(*p, *q, -c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((pa, qa), ca) in &self.terms {
            for ((pb, qb), cb) in &rhs.terms {
                out.add_term(pa + pb, qa + qb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(GComplex::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &GComplex) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (*k, x * c)))
    }

    /// Exact value at `α = a`, `ᾱ = conj(a)`.
    pub fn eval(&self, a: &GComplex) -> GComplex {
        let ab = a.conj();
        self.terms
            .iter()
            .map(|((p, q), c)| c * &(a.pow(*p) * ab.pow(*q)))
            .sum()
    }

    /// Total degree `max(p + q)`, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(p, q)| p + q).max()
    }
}

/// True iff `q` is the zero polynomial; by polarization this is the same as
/// `q(a, ā)` vanishing for every `a ∈ ℂ`.
pub fn param_is_zero(q: &ParamPoly) -> bool {
    q.is_empty()
}

impl Ring for ParamPoly {
    fn ring_zero() -> Self {
        ParamPoly::zero()
    }
    fn ring_one() -> Self {
        ParamPoly::constant(GComplex::one())
    }
    fn is_ring_zero(&self) -> bool {
        self.is_empty()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for ((p, q), c) in &rhs.terms {
            self.add_term(*p, *q, c.clone());
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.scale(&-GComplex::one())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((p, q), c)) in self.terms.iter().enumerate() {
            let negative = c.is_real() && c.re.is_negative();
            let shown = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !shown.is_one() || (*p == 0 && *q == 0) {
                if shown.is_real() && shown.re.is_integer() {
                    factors.push(shown.to_string());
                } else {
                    factors.push(format!("({shown})"));
                }
            }
            for (exp, name) in [(*p, "alpha"), (*q, "~alpha")] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
