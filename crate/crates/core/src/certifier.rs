//! The coefficient-killing cascade and the top-level extension verdict.
//!
//! Boundary data is expanded at the pole `z_o = (0, 1)`, i.e. in
//! `(z₁, z̄₁, w)` with `z₂ = 1 + w`, graded by `l = h + k + 2m`. A monomial
//! of level `l` pulled back to the disc `D_{ta}` with `|a| = 1` decays like
//! `t^(−l)`, so `t^(l_o)·G(ta, N)` converges as `t → ∞` to a trigonometric
//! polynomial in `θ = arg a` whose modes are the level-`l_o` coefficients
//! times closed-form monomial moments.
//!
//! Order of elimination: lowest level `l_o` carrying a conjugated `z̄₁`,
//! then the highest `z̄₁` power `k_o` at that level, with `N = k_o − 1`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::GComplex;
use crate::boundary::{BPoly2, Mono2};
use crate::error::{Error, Result};
use crate::moment::{first_nonvanishing_moment, moment_symbolic, monomial_moment, moments_vanish};

/// Obstruction read off the leading asymptotic of one moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeWitness {
    pub l_o: u32,
    pub k_o: u32,
    pub n: u32,
    pub frequency: i64,
    pub coefficient: GComplex,
}

/// Why a boundary function does not extend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Cascade(CascadeWitness),
    /// A nonzero symbolic moment, used when `z̄₂` survives the normal form
    /// and the cascade does not apply. `frequency` is `p − q` of the
    /// reported term `α^p ᾱ^q`.
    Moment {
        n: u32,
        exponent: (u32, u32),
        frequency: i64,
        coefficient: GComplex,
        cleared_power: u32,
    },
}

impl Witness {
    pub fn n(&self) -> u32 {
        match self {
            Witness::Cascade(w) => w.n,
            Witness::Moment { n, .. } => *n,
        }
    }

    pub fn frequency(&self) -> i64 {
        match self {
            Witness::Cascade(w) => w.frequency,
            Witness::Moment { frequency, .. } => *frequency,
        }
    }

    pub fn coefficient(&self) -> &GComplex {
        match self {
            Witness::Cascade(w) => &w.coefficient,
            Witness::Moment { coefficient, .. } => coefficient,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `extension` is holomorphic and equals the input on the sphere.
    Extends { extension: BPoly2 },
    Obstructed(Witness),
}

impl Certificate {
    pub fn extends(&self) -> bool {
        matches!(self, Certificate::Extends { .. })
    }

    pub fn extension(&self) -> Option<&BPoly2> {
        match self {
            Certificate::Extends { extension } => Some(extension),
            Certificate::Obstructed(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Certificate::Extends { .. } => None,
            Certificate::Obstructed(w) => Some(w),
        }
    }
}

/// `lim_{t→∞} t^(l_o)·μ(t·e^{iθ}, N) = Σ_d modes[d]·e^{iθd}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LeadingAsymptotic {
    pub modes: BTreeMap<i64, GComplex>,
}

impl LeadingAsymptotic {
    fn add(&mut self, frequency: i64, c: GComplex) {
        let slot = self.modes.entry(frequency).or_insert_with(GComplex::zero);
        *slot += &c;
        if slot.is_zero() {
            self.modes.remove(&frequency);
        }
    }

    pub fn first_nonzero(&self) -> Option<(i64, &GComplex)> {
        self.modes.iter().next().map(|(d, c)| (*d, c))
    }
}

fn level(m: &Mono2) -> u32 {
    m.weighted_degree()
}

fn require_z2bar_free(f: &BPoly2) -> Result<()> {
    if f.is_z2bar_free() {
        Ok(())
    } else {
        Err(Error::ConjugateSecondVariable)
    }
}

/// Lowest level `l_o` among pole-expansion monomials with `k > N`, and the
/// leading asymptotic of `t^(l_o)·G(ta, N)` built from the closed-form
/// monomial moments at that level.
pub fn leading_asymptotic(f: &BPoly2, n: u32) -> Result<(u32, LeadingAsymptotic)> {
    require_z2bar_free(f)?;
    let local = f.expand_at_pole();
    leading_asymptotic_local(&local, n)
}

fn leading_asymptotic_local(local: &BPoly2, n: u32) -> Result<(u32, LeadingAsymptotic)> {
    let l_o = local
        .terms()
        .filter(|(m, _)| m.k > n)
        .map(|(m, _)| level(m))
        .min()
        .ok_or(Error::NoAntiholomorphicContent(n))?;
    let mut asym = LeadingAsymptotic::default();
    for (mono, b) in local.terms().filter(|(m, _)| m.k > n && level(m) == l_o) {
        let frequency = mono.h as i64 - mono.k as i64;
        asym.add(frequency, b * &monomial_moment(mono.h, mono.k, mono.m, n));
    }
    Ok((l_o, asym))
}

/// `(l_o, k_o)` for a pole expansion with conjugated content.
fn lowest_obstruction_level(local: &BPoly2) -> Option<(u32, u32)> {
    let l_o = local
        .terms()
        .filter(|(m, _)| m.k > 0)
        .map(|(m, _)| level(m))
        .min()?;
    let k_o = local
        .terms()
        .filter(|(m, _)| m.k > 0 && level(m) == l_o)
        .map(|(m, _)| m.k)
        .max()?;
    Some((l_o, k_o))
}

/// At fixed `(l_o, k_o)` the frequency `h − k_o` pins down `h`, and with it
/// `m = (l_o − k_o − h)/2`; this returns the monomials and fails if two of
/// them share a frequency.
fn isolated_monomials(local: &BPoly2, l_o: u32, k_o: u32) -> Result<BTreeMap<i64, (Mono2, GComplex)>> {
    let mut out = BTreeMap::new();
    for (mono, b) in local.terms().filter(|(m, _)| m.k == k_o && level(m) == l_o) {
        let frequency = mono.h as i64 - k_o as i64;
        if out.insert(frequency, (*mono, b.clone())).is_some() {
            return Err(Error::Invariant(format!(
                "frequency {frequency} is not injective at l_o = {l_o}, k_o = {k_o}"
            )));
        }
    }
    Ok(out)
}

/// One step of the replayed proof: at `(l_o, k_o)` with `N = k_o − 1` the
/// vanishing moment forces every isolated coefficient to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeStep {
    pub l_o: u32,
    pub k_o: u32,
    pub n: u32,
    /// `(frequency, monomial in the pole expansion, coefficient removed)`.
    pub killed: Vec<(i64, Mono2, GComplex)>,
}

/// Replays the elimination: repeatedly picks `(l_o, k_o)`, removes the
/// isolated coefficients, and continues until no `z̄₁` remains.
pub fn replay(f: &BPoly2) -> Result<Vec<CascadeStep>> {
    require_z2bar_free(f)?;
    let mut local = f.expand_at_pole();
    let mut steps = Vec::new();
    while let Some((l_o, k_o)) = lowest_obstruction_level(&local) {
        let before = local.terms().filter(|(m, _)| m.k > 0).count();
        let isolated = isolated_monomials(&local, l_o, k_o)?;
        let killed: Vec<_> = isolated
            .into_iter()
            .map(|(d, (mono, b))| (d, mono, b))
            .collect();
        for (_, mono, b) in &killed {
            local.add_term(*mono, -b);
        }
        let after = local.terms().filter(|(m, _)| m.k > 0).count();
        if after >= before {
            return Err(Error::Invariant("cascade step removed nothing".into()));
        }
        steps.push(CascadeStep {
            l_o,
            k_o,
            n: k_o - 1,
            killed,
        });
    }
    Ok(steps)
}

/// Runs the cascade on `z̄₂`-free data in normal form.
///
/// Without `assume_moments_vanish`, the first level with conjugated content
/// yields an obstruction. With it, the proof is replayed under the
/// hypothesis that every moment vanishes: each isolated coefficient is
/// declared zero and removed, and the holomorphic part is returned.
pub fn cascade(f: &BPoly2, assume_moments_vanish: bool) -> Result<Certificate> {
    require_z2bar_free(f)?;
    if !f.is_normal() {
        return Err(Error::NotNormalForm);
    }
    if assume_moments_vanish {
        replay(f)?;
        return Ok(Certificate::Extends {
            extension: f.holomorphic_part()?,
        });
    }
    let local = f.expand_at_pole();
    let Some((l_o, k_o)) = lowest_obstruction_level(&local) else {
        return Ok(Certificate::Extends { extension: f.clone() });
    };
    let n = k_o - 1;
    isolated_monomials(&local, l_o, k_o)?;
    let (level_found, asym) = leading_asymptotic_local(&local, n)?;
    if level_found != l_o {
        return Err(Error::Invariant(format!(
            "leading level {level_found} differs from l_o = {l_o}"
        )));
    }
    let (frequency, coefficient) = asym
        .first_nonzero()
        .ok_or_else(|| Error::Invariant("all isolated modes vanished".into()))?;
    Ok(Certificate::Obstructed(Witness::Cascade(CascadeWitness {
        l_o,
        k_o,
        n,
        frequency,
        coefficient: coefficient.clone(),
    })))
}

/// Top-level verdict for boundary data on the sphere in ℂ².
///
/// Fails only on an internal invariant violation.
pub fn certify(f: &BPoly2) -> Result<Certificate> {
    let nf = f.normal_form();
    if moments_vanish(&nf) {
        let extension = nf.holomorphic_part()?;
        if extension != nf {
            return Err(Error::Invariant(
                "all moments vanish but the normal form has conjugated terms".into(),
            ));
        }
        return Ok(Certificate::Extends { extension });
    }
    if nf.is_z2bar_free() {
        return cascade(&nf, false);
    }
    let (n, sm) = first_nonvanishing_moment(&nf)
        .ok_or_else(|| Error::Invariant("nonvanishing moment disappeared".into()))?;
    let ((p, q), c) = sm
        .poly
        .terms()
        .next()
        .ok_or_else(|| Error::Invariant("empty nonzero moment".into()))?;
    Ok(Certificate::Obstructed(Witness::Moment {
        n,
        exponent: (p, q),
        frequency: p as i64 - q as i64,
        coefficient: c.clone(),
        cleared_power: sm.cleared_power,
    }))
}

/// Leading asymptotic computed the other way round: take the symbolic
/// moment `(1 + αᾱ)^L·μ(a, N)`, substitute `α = t·e^{iθ}`, `ᾱ = t·e^{−iθ}`,
/// and read off `lim t^(l_o)·μ` per frequency as a leading-coefficient
/// ratio in `t`. Returns `None` if the limit diverges.
pub fn asymptotic_from_symbolic(f: &BPoly2, n: u32, l_o: u32) -> Option<LeadingAsymptotic> {
    let sm = moment_symbolic(&f.normal_form(), n);
    let target = 2 * sm.cleared_power as i64 - l_o as i64;
    let mut asym = LeadingAsymptotic::default();
    for ((p, q), c) in sm.poly.terms() {
        let t_power = (p + q) as i64;
        if t_power > target {
            return None;
        }
        if t_power == target {
            asym.add(p as i64 - q as i64, c.clone());
        }
    }
    Some(asym)
}

/// Checks a cascade witness against [`asymptotic_from_symbolic`].
pub fn verify_witness(f: &BPoly2, w: &CascadeWitness) -> bool {
    if w.coefficient.is_zero() || w.k_o == 0 || w.n + 1 != w.k_o {
        return false;
    }
    match asymptotic_from_symbolic(f, w.n, w.l_o) {
        Some(asym) => asym.modes.get(&w.frequency) == Some(&w.coefficient),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn mono(h: u32, k: u32, m: u32, p: u32) -> BPoly2 {
        BPoly2::monomial(Mono2::new(h, k, m, p), GComplex::one())
    }

    fn cascade_witness(c: &Certificate) -> &CascadeWitness {
        match c {
            Certificate::Obstructed(Witness::Cascade(w)) => w,
            other => panic!("expected cascade obstruction, got {other:?}"),
        }
    }

    #[test]
    fn leading_asymptotic_examples() {
        let (l_o, asym) = leading_asymptotic(&mono(1, 1, 0, 0), 0).unwrap();
        assert_eq!(l_o, 2);
        assert_eq!(asym.modes, BTreeMap::from([(0, GComplex::from_int(-1))]));

        let (l_o, asym) = leading_asymptotic(&mono(0, 2, 0, 0), 1).unwrap();
        assert_eq!(l_o, 2);
        assert_eq!(asym.modes, BTreeMap::from([(-2, GComplex::from_int(1))]));

        let f = mono(1, 1, 0, 0).add(&mono(3, 0, 0, 0));
        assert_eq!(leading_asymptotic(&f, 0).unwrap(), leading_asymptotic(&mono(1, 1, 0, 0), 0).unwrap());

        assert_eq!(
            leading_asymptotic(&mono(3, 0, 1, 0), 0),
            Err(Error::NoAntiholomorphicContent(0))
        );
        assert_eq!(leading_asymptotic(&BPoly2::z2_bar(), 0), Err(Error::ConjugateSecondVariable));
    }

    #[test]
    fn pole_expansion_sets_the_level() {
        // z̄1·z2 = z̄1 + z̄1·w: the leading term sits at level 1
        let f = mono(0, 1, 1, 0);
        let (l_o, asym) = leading_asymptotic(&f, 0).unwrap();
        assert_eq!(l_o, 1);
        assert_eq!(asym.modes, BTreeMap::from([(-1, GComplex::one())]));
        assert_eq!(asymptotic_from_symbolic(&f, 0, 1).unwrap(), asym);
    }

    #[test]
    fn cascade_examples() {
        let f = mono(2, 0, 0, 0).add(&mono(0, 0, 1, 0));
        assert_eq!(cascade(&f, false).unwrap(), Certificate::Extends { extension: f.clone() });

        let c = cascade(&mono(1, 1, 0, 0), false).unwrap();
        let w = cascade_witness(&c);
        assert_eq!((w.l_o, w.k_o, w.n, w.frequency), (2, 1, 0, 0));
        assert_eq!(w.coefficient, GComplex::from_int(-1));

        let g = mono(0, 3, 0, 0).add(&mono(1, 1, 0, 0));
        let c = cascade(&g, false).unwrap();
        let w = cascade_witness(&c);
        assert_eq!((w.l_o, w.k_o), (2, 1));
        assert_eq!(w.coefficient, GComplex::from_int(-1));

        assert_eq!(cascade(&BPoly2::z2_bar(), false), Err(Error::ConjugateSecondVariable));
    }

    #[test]
    fn replay_terminates_and_returns_holomorphic_part() {
        let f = mono(0, 3, 0, 0)
            .add(&mono(1, 1, 0, 0))
            .add(&mono(2, 2, 1, 0).scale(&GComplex::ratio(3, 2)))
            .add(&mono(4, 0, 0, 0));
        let steps = replay(&f).unwrap();
        assert!(!steps.is_empty());
        assert!(steps.iter().all(|s| s.n + 1 == s.k_o && !s.killed.is_empty()));
        // levels never decrease along the replay
        assert!(steps.windows(2).all(|w| w[0].l_o <= w[1].l_o));
        assert_eq!(
            cascade(&f, true).unwrap(),
            Certificate::Extends { extension: mono(4, 0, 0, 0) }
        );
    }

    #[test]
    fn certify_examples() {
        let sphere = mono(0, 0, 1, 1).add(&mono(1, 1, 0, 0));
        assert_eq!(certify(&sphere).unwrap(), Certificate::Extends { extension: BPoly2::one() });

        let c = certify(&mono(1, 1, 0, 0)).unwrap();
        assert!(verify_witness(&mono(1, 1, 0, 0), cascade_witness(&c)));

        match certify(&BPoly2::z2_bar()).unwrap() {
            Certificate::Obstructed(Witness::Moment { n, .. }) => assert_eq!(n, 0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let f = mono(1, 1, 0, 0);
        let c = certify(&f).unwrap();
        let mut w = cascade_witness(&c).clone();
        assert!(verify_witness(&f, &w));
        w.coefficient = GComplex::one();
        assert!(!verify_witness(&f, &w));
    }
}
