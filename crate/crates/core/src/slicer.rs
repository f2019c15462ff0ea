//! Boundary data on the sphere in ℂⁿ, cut into 2-planes through the origin
//! and the pole `z_o = e_n`.
//!
//! A plane is `span{v, z_o}` with `v_n = 0` and `|v| = 1`; slice coordinates
//! `(ζ₁, ζ₂)` map to `z = ζ₁·v + ζ₂·z_o`, so the plane meets the sphere in
//! `|ζ₁|² + |ζ₂|² = 1` and every slice is handled by the ℂ² engine. All
//! slices share the complex line `L = {ζ₁ = 0}`.
//!
//! Radial holomorphy (Forelli) and continuation from the boundary (Hartogs)
//! are not re-implemented: for polynomials the global coefficient criterion
//! of [`certify_nd`] stands in for both.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::GComplex;
use crate::boundary::{BPoly2, Mono2};
use crate::certifier::{certify, Certificate};
use crate::disc::circle_point;
use crate::error::{Error, Result};

/// Monomial `z^hol · z̄^anti` with multi-indices of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoN {
    pub hol: Vec<u32>,
    pub anti: Vec<u32>,
}

impl MonoN {
    pub fn one(n: usize) -> Self {
        MonoN {
            hol: vec![0; n],
            anti: vec![0; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.hol.len()
    }

    /// Degree with weight 2 on the last variable and its conjugate.
    pub fn weighted_degree(&self) -> u32 {
        let n = self.dim();
        let plain: u32 = self.hol.iter().chain(self.anti.iter()).sum();
        plain + self.hol[n - 1] + self.anti[n - 1]
    }

    pub fn is_holomorphic(&self) -> bool {
        self.anti.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &MonoN) -> MonoN {
        MonoN {
            hol: self.hol.iter().zip(&rhs.hol).map(|(a, b)| a + b).collect(),
            anti: self.anti.iter().zip(&rhs.anti).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Every monomial in dimension `n` with weighted degree at most
/// `max_degree`, optionally only those in normal form (`z_n z̄_n` absent).
pub fn monomial_basis_n(n: usize, max_degree: u32, normal_only: bool) -> Vec<MonoN> {
    fn fill(exps: &mut Vec<u32>, weights: &[u32], budget: u32, out: &mut Vec<Vec<u32>>) {
        if exps.len() == weights.len() {
            out.push(exps.clone());
            return;
        }
        let w = weights[exps.len()];
        for e in 0..=budget / w {
            exps.push(e);
            fill(exps, weights, budget - e * w, out);
            exps.pop();
        }
    }
    assert!(n >= 1, "dimension must be at least 1");
    // layout: z_1..z_n then z̄_1..z̄_n
    let weights: Vec<u32> = (0..2 * n).map(|i| if i % n == n - 1 { 2 } else { 1 }).collect();
    let mut raw = Vec::new();
    fill(&mut Vec::with_capacity(2 * n), &weights, max_degree, &mut raw);
    let mut out: Vec<MonoN> = raw
        .into_iter()
        .map(|e| MonoN {
            hol: e[..n].to_vec(),
            anti: e[n..].to_vec(),
        })
        .filter(|m| !normal_only || m.hol[n - 1] == 0 || m.anti[n - 1] == 0)
        .collect();
    out.sort();
    out
}

/// Polynomial in `z₁..z_n, z̄₁..z̄_n` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPolyN {
    n: usize,
    coeffs: BTreeMap<MonoN, GComplex>,
}

impl BPolyN {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "dimension must be positive");
        BPolyN {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: GComplex) -> Self {
        Self::monomial(MonoN::one(n), c)
    }

    pub fn monomial(mono: MonoN, c: GComplex) -> Self {
        let mut f = Self::zero(mono.dim());
        f.add_term(mono, c);
        f
    }

    /// `z_i` (1-based index).
    pub fn var(n: usize, i: usize) -> Self {
        let mut mono = MonoN::one(n);
        mono.hol[i - 1] = 1;
        Self::monomial(mono, GComplex::one())
    }

    /// `z̄_i` (1-based index).
    pub fn conj_var(n: usize, i: usize) -> Self {
        let mut mono = MonoN::one(n);
        mono.anti[i - 1] = 1;
        Self::monomial(mono, GComplex::one())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, mono: MonoN, c: GComplex) {
        assert_eq!(mono.dim(), self.n, "monomial dimension mismatch");
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MonoN, &GComplex)> + '_ {
        self.coeffs.iter()
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
        for (m, c) in &rhs.coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.coeffs {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &rhs.coeffs {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(self.n, GComplex::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &GComplex) -> Self {
        let mut out = Self::zero(self.n);
        for (m, x) in &self.coeffs {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn weighted_degree(&self) -> Result<u32> {
        self.coeffs
            .keys()
            .map(MonoN::weighted_degree)
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    pub fn is_normal(&self) -> bool {
        let last = self.n - 1;
        self.coeffs
            .keys()
            .all(|m| m.hol[last] == 0 || m.anti[last] == 0)
    }

    /// Rewrites `z_n z̄_n → 1 − Σ_{i<n} z_i z̄_i` until no monomial carries
    /// both `z_n` and `z̄_n`.
    pub fn normal_form(&self) -> BPolyN {
        let n = self.n;
        let last = n - 1;
        let mut relation = Self::constant(n, GComplex::one());
        for i in 1..n {
            relation = relation.sub(&Self::var(n, i).mul(&Self::conj_var(n, i)));
        }
        let mut out = Self::zero(n);
        for (mono, c) in &self.coeffs {
            let r = mono.hol[last].min(mono.anti[last]);
            if r == 0 {
                out.add_term(mono.clone(), c.clone());
                continue;
            }
            let mut rest = mono.clone();
            rest.hol[last] -= r;
            rest.anti[last] -= r;
            let term = Self::monomial(rest, c.clone()).mul(&relation.pow(r));
            out = out.add(&term);
        }
        out
    }

    pub fn is_holomorphic(&self) -> Result<bool> {
        if !self.is_normal() {
            return Err(Error::NotNormalForm);
        }
        Ok(self.coeffs.keys().all(MonoN::is_holomorphic))
    }

    pub fn holomorphic_part(&self) -> Result<BPolyN> {
        if !self.is_normal() {
            return Err(Error::NotNormalForm);
        }
        let mut out = Self::zero(self.n);
        for (m, c) in self.coeffs.iter().filter(|(m, _)| m.is_holomorphic()) {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn eval(&self, z: &[GComplex]) -> Result<GComplex> {
        if z.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: z.len(),
            });
        }
        let zb: Vec<GComplex> = z.iter().map(GComplex::conj).collect();
        Ok(self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let mut v = c.clone();
                for i in 0..self.n {
                    v = v * z[i].pow(m.hol[i]) * zb[i].pow(m.anti[i]);
                }
                v
            })
            .sum())
    }

    pub fn from_bpoly2(f: &BPoly2) -> Self {
        let mut out = Self::zero(2);
        for (m, c) in f.terms() {
            out.add_term(
                MonoN {
                    hol: vec![m.h, m.m],
                    anti: vec![m.k, m.p],
                },
                c.clone(),
            );
        }
        out
    }

    pub fn to_bpoly2(&self) -> Result<BPoly2> {
        if self.n != 2 {
            return Err(Error::Dimension {
                expected: 2,
                got: self.n,
            });
        }
        Ok(BPoly2::from_terms(self.coeffs.iter().map(|(m, c)| {
            (Mono2::new(m.hol[0], m.anti[0], m.hol[1], m.anti[1]), c.clone())
        })))
    }
}

/// The plane `span{v, z_o}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePlane {
    v: Vec<GComplex>,
}

impl SlicePlane {
    pub fn new(v: Vec<GComplex>) -> Result<Self> {
        let n = v.len();
        if n < 2 {
            return Err(Error::BadSlicePlane(format!("dimension {n} < 2")));
        }
        if !v[n - 1].is_zero() {
            return Err(Error::BadSlicePlane(format!("v_n = {}", v[n - 1])));
        }
        let norm: BigRational = v.iter().map(GComplex::norm_sqr).sum();
        if !norm.is_one() {
            return Err(Error::BadSlicePlane(format!("|v|^2 = {norm}")));
        }
        Ok(SlicePlane { v })
    }

    /// `e_i` (1-based, `i < n`).
    pub fn basis(n: usize, i: usize) -> Result<Self> {
        let mut v = vec![GComplex::zero(); n];
        v[i - 1] = GComplex::one();
        Self::new(v)
    }

    pub fn direction(&self) -> &[GComplex] {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// The point `ζ₁·v + ζ₂·z_o`.
    pub fn embed(&self, zeta1: &GComplex, zeta2: &GComplex) -> Vec<GComplex> {
        let n = self.v.len();
        let mut z: Vec<GComplex> = self.v.iter().map(|vi| vi * zeta1).collect();
        z[n - 1] = zeta2.clone();
        z
    }
}

/// Exact unit vector in ℂ^d built from nested circle points:
/// `(c₁τ₁, s₁c₂τ₂, …, s₁⋯s_{d−1}τ_d)`.
pub fn unit_vector(phases: &[BigRational], mixes: &[BigRational]) -> Vec<GComplex> {
    assert_eq!(mixes.len() + 1, phases.len(), "need d phases and d-1 mixes");
    let mut out = Vec::with_capacity(phases.len());
    let mut carry = BigRational::one();
    for (i, t) in phases.iter().enumerate() {
        let tau = circle_point(t);
        match mixes.get(i) {
            Some(mix) => {
                let cs = circle_point(mix);
                out.push(tau.scale(&(&carry * &cs.re)));
                carry *= cs.im;
            }
            None => out.push(tau.scale(&carry)),
        }
    }
    out
}

/// Deterministic family of 12 exact planes in ℂⁿ: the coordinate directions
/// `e_1..e_{n−1}` first, then generic directions with distinct phases.
pub fn default_planes(n: usize) -> Vec<SlicePlane> {
    const COUNT: usize = 12;
    assert!(n >= 2, "slices need n >= 2");
    let d = n - 1;
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let seeds = [
        q(1, 2),
        q(-1, 3),
        q(2, 5),
        q(3, 7),
        q(-5, 4),
        q(7, 3),
        q(-2, 9),
        q(4, 11),
        q(-7, 6),
        q(5, 13),
        q(8, 5),
        q(-3, 10),
        q(9, 7),
        q(-11, 8),
    ];
    let mut planes: Vec<SlicePlane> = (1..=d.min(COUNT))
        .map(|i| SlicePlane::basis(n, i).expect("basis vector is a unit"))
        .collect();
    let mut j = 0;
    while planes.len() < COUNT {
        let phases: Vec<BigRational> = (0..d).map(|i| seeds[(j + 3 * i) % seeds.len()].clone()).collect();
        let mixes: Vec<BigRational> = (0..d.saturating_sub(1))
            .map(|i| seeds[(5 * j + 2 * i + 1) % seeds.len()].clone())
            .collect();
        let mut v = unit_vector(&phases, &mixes);
        v.push(GComplex::zero());
        planes.push(SlicePlane::new(v).expect("nested circle points give a unit vector"));
        j += 1;
    }
    planes
}

/// Restriction of `f` to the plane, in slice coordinates `(ζ₁, ζ₂)`.
pub fn slice_restrict(f: &BPolyN, plane: &SlicePlane) -> Result<BPoly2> {
    let n = f.dim();
    if plane.dim() != n {
        return Err(Error::Dimension {
            expected: n,
            got: plane.dim(),
        });
    }
    let v = plane.direction();
    let vb: Vec<GComplex> = v.iter().map(GComplex::conj).collect();
    let mut out = BPoly2::zero();
    for (m, c) in f.terms() {
        let mut coeff = c.clone();
        let (mut h, mut k) = (0, 0);
        for i in 0..n - 1 {
            coeff = coeff * v[i].pow(m.hol[i]) * vb[i].pow(m.anti[i]);
            h += m.hol[i];
            k += m.anti[i];
        }
        out.add_term(Mono2::new(h, k, m.hol[n - 1], m.anti[n - 1]), coeff);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gluing {
    /// Every slice extends and the extensions agree on `L`; `common` is the
    /// shared restriction as a polynomial in `ζ₂`.
    Agrees { common: BPoly2 },
    /// Two slice extensions differ on `L` (plane indices).
    Disagrees { first: usize, second: usize },
    /// At least one slice is obstructed.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceReport {
    /// One certificate per plane, in input order.
    pub certificates: Vec<Certificate>,
    pub gluing: Gluing,
}

impl SliceReport {
    pub fn all_extend(&self) -> bool {
        self.certificates.iter().all(Certificate::extends)
    }

    pub fn first_obstruction(&self) -> Option<(usize, &Certificate)> {
        self.certificates.iter().enumerate().find(|(_, c)| !c.extends())
    }
}

/// Restriction of a slice extension to `L = {ζ₁ = 0}`.
fn restrict_to_line(extension: &BPoly2) -> BPoly2 {
    extension.filter(|m| m.h == 0 && m.k == 0)
}

/// Certifies every slice (concurrently; output keeps plane order) and
/// checks that the slice extensions glue along `L`.
pub fn slice_certify_all(f: &BPolyN, planes: &[SlicePlane]) -> Result<SliceReport> {
    let certificates = planes
        .par_iter()
        .map(|plane| slice_restrict(f, plane).and_then(|s| certify(&s)))
        .collect::<Result<Vec<_>>>()?;
    let gluing = if certificates.iter().all(Certificate::extends) {
        let lines: Vec<BPoly2> = certificates
            .iter()
            .filter_map(Certificate::extension)
            .map(restrict_to_line)
            .collect();
        match lines.iter().position(|l| *l != lines[0]) {
            Some(second) => Gluing::Disagrees { first: 0, second },
            None => Gluing::Agrees {
                common: lines.into_iter().next().unwrap_or_default(),
            },
        }
    } else {
        Gluing::NotApplicable
    };
    Ok(SliceReport {
        certificates,
        gluing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum NdVerdict {
    Extends { extension: BPolyN },
    /// `monomial` is a conjugated term of the normal form; `slice` is the
    /// first obstructed plane of the sample, if any.
    Obstructed {
        monomial: MonoN,
        coefficient: GComplex,
        slice: Option<(usize, Certificate)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdCertificate {
    pub verdict: NdVerdict,
    /// Slice check over [`default_planes`].
    pub slices: SliceReport,
}

impl NdCertificate {
    pub fn extends(&self) -> bool {
        matches!(self.verdict, NdVerdict::Extends { .. })
    }

    /// Whether the slice sample reaches the same verdict as the global
    /// coefficient criterion.
    pub fn slices_agree(&self) -> bool {
        let slices_extend =
            self.slices.all_extend() && matches!(self.slices.gluing, Gluing::Agrees { .. });
        slices_extend == self.extends()
    }
}

/// Extension verdict on the sphere in ℂⁿ from the normal form, cross-checked
/// against the slice family.
pub fn certify_nd(f: &BPolyN) -> Result<NdCertificate> {
    let planes = if f.dim() >= 2 {
        default_planes(f.dim())
    } else {
        Vec::new()
    };
    certify_nd_with(f, &planes)
}

/// [`certify_nd`] with a caller-chosen plane family for the cross-check.
pub fn certify_nd_with(f: &BPolyN, planes: &[SlicePlane]) -> Result<NdCertificate> {
    let nf = f.normal_form();
    let slices = if planes.is_empty() {
        SliceReport {
            certificates: Vec::new(),
            gluing: Gluing::NotApplicable,
        }
    } else {
        slice_certify_all(&nf, planes)?
    };
    let verdict = match nf.terms().find(|(m, _)| !m.is_holomorphic()) {
        None => NdVerdict::Extends { extension: nf.clone() },
        Some((monomial, coefficient)) => NdVerdict::Obstructed {
            monomial: monomial.clone(),
            coefficient: coefficient.clone(),
            slice: slices.first_obstruction().map(|(i, c)| (i, c.clone())),
        },
    };
    Ok(NdCertificate { verdict, slices })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GComplex {
        GComplex::ratio(a, b)
    }

    #[test]
    fn basis_n_matches_two_dimensional_basis() {
        let two: Vec<MonoN> = crate::boundary::monomial_basis(5, true)
            .into_iter()
            .map(|m| MonoN { hol: vec![m.h, m.m], anti: vec![m.k, m.p] })
            .collect();
        let mut two = two;
        two.sort();
        assert_eq!(monomial_basis_n(2, 5, true), two);
        let b3 = monomial_basis_n(3, 4, true);
        assert!(b3.iter().all(|m| m.weighted_degree() <= 4));
        assert!(b3.contains(&MonoN { hol: vec![1, 0, 0], anti: vec![0, 1, 0] }));
        assert!(!b3.contains(&MonoN { hol: vec![0, 0, 1], anti: vec![0, 0, 1] }));
    }

    #[test]
    fn restrict_examples() {
        let planes = default_planes(3);
        for p in &planes {
            assert_eq!(slice_restrict(&BPolyN::var(3, 3), p).unwrap(), BPoly2::z2());
        }
        let v = SlicePlane::new(vec![g(3, 5), GComplex::from_parts((0, 1), (4, 5)), GComplex::zero()]).unwrap();
        assert_eq!(
            slice_restrict(&BPolyN::var(3, 1), &v).unwrap(),
            BPoly2::z1().scale(&g(3, 5))
        );
        let abs = BPolyN::var(3, 1).mul(&BPolyN::conj_var(3, 1));
        let e1 = SlicePlane::basis(3, 1).unwrap();
        assert_eq!(
            slice_restrict(&abs, &e1).unwrap(),
            BPoly2::z1().mul(&BPoly2::z1_bar())
        );
    }

    #[test]
    fn plane_validation() {
        assert!(SlicePlane::new(vec![g(1, 2), GComplex::zero(), GComplex::zero()]).is_err());
        assert!(SlicePlane::new(vec![GComplex::zero(), GComplex::one()]).is_err());
        assert_eq!(default_planes(3).len(), 12);
        assert_eq!(default_planes(5).len(), 12);
        assert_eq!(default_planes(2).len(), 12);
    }

    #[test]
    fn gluing_examples() {
        let f = BPolyN::var(3, 1)
            .mul(&BPolyN::var(3, 2))
            .add(&BPolyN::var(3, 3).pow(3));
        let report = slice_certify_all(&f, &default_planes(3)).unwrap();
        assert!(report.all_extend());
        let cube = BPoly2::z2().pow(3);
        assert_eq!(report.gluing, Gluing::Agrees { common: cube });

        let abs = BPolyN::var(3, 1).mul(&BPolyN::conj_var(3, 1));
        let report = slice_certify_all(&abs, &default_planes(3)).unwrap();
        assert!(!report.certificates[0].extends());
        assert_eq!(report.gluing, Gluing::NotApplicable);
    }

    #[test]
    fn certify_nd_examples() {
        let mut sphere = BPolyN::zero(3);
        for i in 1..=3 {
            sphere = sphere.add(&BPolyN::var(3, i).mul(&BPolyN::conj_var(3, i)));
        }
        let c = certify_nd(&sphere).unwrap();
        assert_eq!(
            c.verdict,
            NdVerdict::Extends { extension: BPolyN::constant(3, GComplex::one()) }
        );
        assert!(c.slices_agree());

        let c = certify_nd(&BPolyN::conj_var(3, 1)).unwrap();
        assert!(!c.extends());
        assert!(c.slices_agree());

        let f = BPolyN::var(3, 1).mul(&BPolyN::var(3, 2)).mul(&BPolyN::var(3, 3));
        assert!(certify_nd(&f).unwrap().extends());
    }

    #[test]
    fn two_dimensional_round_trip() {
        let f = BPoly2::z1()
            .mul(&BPoly2::z2_bar())
            .add(&BPoly2::constant(g(-2, 3)));
        assert_eq!(BPolyN::from_bpoly2(&f).to_bpoly2().unwrap(), f);
        assert_eq!(
            BPolyN::from_bpoly2(&f).normal_form().to_bpoly2().unwrap(),
            f.normal_form()
        );
    }
}
