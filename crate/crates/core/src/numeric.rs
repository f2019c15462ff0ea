//! Floating-point cross-checks: trapezoid moments on the circle and
//! per-disc Fourier tests.
//!
//! All integrands are trigonometric polynomials, for which the equispaced
//! trapezoid rule is exact (up to rounding) once the node count exceeds the
//! bandwidth.

use std::f64::consts::PI;

use num_bigint::BigInt;
pub use num_complex::Complex64;
use num_rational::BigRational;

use crate::algebra::GComplex;
use crate::boundary::BPoly2;
use crate::certifier::{certify, Certificate};
use crate::error::{Error, Result};
use crate::moment::moment;
use crate::slicer::unit_vector;

pub const DEFAULT_NODES: usize = 257;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadConfig {
    pub nodes: usize,
    pub tolerance: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            nodes: DEFAULT_NODES,
            tolerance: 1e-10,
        }
    }
}

impl QuadConfig {
    pub fn new(nodes: usize, tolerance: f64) -> Self {
        QuadConfig { nodes, tolerance }
    }

    fn require(&self, required: usize) -> Result<()> {
        if self.nodes < required {
            Err(Error::InsufficientNodes {
                required,
                given: self.nodes,
            })
        } else {
            Ok(())
        }
    }
}

/// Minimum node count for `moment_quad(f, _, n, _)`.
pub fn required_nodes(f: &BPoly2, n: u32) -> usize {
    let degree = f.weighted_degree().unwrap_or(0) as usize;
    2 * (degree + n as usize) + 3
}

fn nodes(count: usize) -> impl Iterator<Item = Complex64> {
    (0..count).map(move |j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / count as f64))
}

fn disc_point(a: Complex64, tau: Complex64) -> (Complex64, Complex64) {
    let lead = (tau - 1.0) / (1.0 + a.norm_sqr());
    (lead * a, lead + 1.0)
}

/// Trapezoid value of `(1/2πi) ∮ τ^N f(D_a(τ)) dτ`.
pub fn moment_quad(f: &BPoly2, a: Complex64, n: u32, cfg: &QuadConfig) -> Result<Complex64> {
    cfg.require(required_nodes(f, n))?;
    // dτ = iτ dθ, so the integral is the mean of τ^(N+1)·f(D_a(τ))
    let sum: Complex64 = nodes(cfg.nodes)
        .map(|tau| {
            let (z1, z2) = disc_point(a, tau);
            tau.powu(n + 1) * f.eval_f64(z1, z2)
        })
        .sum();
    Ok(sum / cfg.nodes as f64)
}

/// Largest `|c_{−j}|`, `j ≥ 1`, of `θ ↦ g(e^{iθ})` sampled on the nodes.
fn max_negative_mode(samples: &[Complex64], bandwidth: usize) -> f64 {
    let count = samples.len();
    (1..=bandwidth.max(1))
        .map(|j| {
            let c: Complex64 = nodes(count)
                .zip(samples)
                .map(|(tau, g)| tau.powu(j as u32) * g)
                .sum();
            (c / count as f64).norm()
        })
        .fold(0.0, f64::max)
}

/// Largest negative Fourier mode of the boundary values of `f` on `D_a`;
/// zero (up to rounding) iff `f` extends holomorphically along that disc.
pub fn disc_fourier_test(f: &BPoly2, a: Complex64, cfg: &QuadConfig) -> Result<f64> {
    cfg.require(required_nodes(f, 0))?;
    let samples: Vec<Complex64> = nodes(cfg.nodes)
        .map(|tau| {
            let (z1, z2) = disc_point(a, tau);
            f.eval_f64(z1, z2)
        })
        .collect();
    Ok(max_negative_mode(&samples, f.weighted_degree().unwrap_or(0) as usize))
}

/// Same test on the complex line through the origin in direction `v`
/// (`|v| = 1`), i.e. on `θ ↦ f(e^{iθ}·v)`.
pub fn line_fourier_test(f: &BPoly2, v: (Complex64, Complex64), cfg: &QuadConfig) -> Result<f64> {
    cfg.require(required_nodes(f, 0))?;
    let samples: Vec<Complex64> = nodes(cfg.nodes)
        .map(|tau| f.eval_f64(tau * v.0, tau * v.1))
        .collect();
    Ok(max_negative_mode(&samples, f.weighted_degree().unwrap_or(0) as usize))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineCheck {
    pub direction: (GComplex, GComplex),
    /// Exact value of `|v₁|²`, which `|z₁|²` takes all along the line.
    pub restriction: GComplex,
    pub max_negative_mode: f64,
}

/// `|z₁|²` extends along every line through the origin, yet not from the
/// sphere: lines through one interior point do not detect holomorphy.
#[derive(Clone, Debug, PartialEq)]
pub struct InteriorCenterDemo {
    pub lines: Vec<LineCheck>,
    pub certificate: Certificate,
    /// Exact moment at `a = 1`, `N = 0` of the disc through `z_o`.
    pub disc_moment: GComplex,
    pub disc_moment_quad: Complex64,
    pub nodes: usize,
}

impl InteriorCenterDemo {
    pub fn lines_extend(&self, tolerance: f64) -> bool {
        self.lines.iter().all(|l| l.max_negative_mode <= tolerance)
    }
}

/// Exact unit directions in ℂ²: `(1, 0)`, `(3/5, 4/5)`, then generic ones.
pub fn sample_lines(count: usize) -> Vec<(GComplex, GComplex)> {
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let mut out = vec![
        (GComplex::from_int(1), GComplex::from_int(0)),
        (GComplex::ratio(3, 5), GComplex::ratio(4, 5)),
    ];
    let mut j: i64 = 1;
    while out.len() < count {
        let v = unit_vector(&[q(j, 7), q(-2 * j - 1, 5)], &[q(j + 1, 3 * j + 4)]);
        out.push((v[0].clone(), v[1].clone()));
        j += 1;
    }
    out.truncate(count);
    out
}

pub fn interior_center_demo() -> Result<InteriorCenterDemo> {
    interior_center_demo_with(20, &QuadConfig::new(64, 1e-12))
}

pub fn interior_center_demo_with(line_count: usize, cfg: &QuadConfig) -> Result<InteriorCenterDemo> {
    let f = BPoly2::z1().mul(&BPoly2::z1_bar());
    let lines = sample_lines(line_count)
        .into_iter()
        .map(|(v1, v2)| {
            let mode = line_fourier_test(&f, (v1.to_complex64(), v2.to_complex64()), cfg)?;
            Ok(LineCheck {
                restriction: GComplex::real(v1.norm_sqr()),
                direction: (v1, v2),
                max_negative_mode: mode,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let one = GComplex::from_int(1);
    Ok(InteriorCenterDemo {
        lines,
        certificate: certify(&f)?,
        disc_moment: moment(&f, &one, 0).mu,
        disc_moment_quad: moment_quad(&f, Complex64::new(1.0, 0.0), 0, cfg)?,
        nodes: cfg.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::Mono2;

    fn abs_z1() -> BPoly2 {
        BPoly2::z1().mul(&BPoly2::z1_bar())
    }

    #[test]
    fn moment_quad_examples() {
        let cfg = QuadConfig::new(64, 1e-12);
        let one = Complex64::new(1.0, 0.0);
        let mu = moment_quad(&abs_z1(), one, 0, &cfg).unwrap();
        assert!((mu - Complex64::new(-0.25, 0.0)).norm() <= 1e-12);

        let z1sq = BPoly2::monomial(Mono2::new(2, 0, 0, 0), GComplex::from_int(1));
        let mu = moment_quad(&z1sq, Complex64::new(-0.7, 1.3), 0, &cfg).unwrap();
        assert!(mu.norm() <= 1e-12);

        let mu = moment_quad(&BPoly2::z2_bar(), one, 0, &cfg).unwrap();
        assert!((mu - Complex64::new(0.5, 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn insufficient_nodes() {
        let cfg = QuadConfig::new(5, 1e-12);
        assert_eq!(
            moment_quad(&abs_z1(), Complex64::new(1.0, 0.0), 1, &cfg),
            Err(Error::InsufficientNodes { required: 9, given: 5 })
        );
        assert!(disc_fourier_test(&abs_z1(), Complex64::new(1.0, 0.0), &cfg).is_err());
    }

    #[test]
    fn fourier_test_examples() {
        let cfg = QuadConfig::new(64, 1e-12);
        let one = Complex64::new(1.0, 0.0);
        let hol = BPoly2::z1().pow(3).add(&BPoly2::z2().scale(&GComplex::from_parts((1, 2), (3, 1))));
        for a in [one, Complex64::new(-2.0, 0.5), Complex64::new(0.0, 3.0)] {
            assert!(disc_fourier_test(&hol, a, &cfg).unwrap() <= 1e-12);
        }
        assert!((disc_fourier_test(&abs_z1(), one, &cfg).unwrap() - 0.25).abs() <= 1e-12);
        let f = BPoly2::z1().add(&BPoly2::z1_bar());
        assert!((disc_fourier_test(&f, one, &cfg).unwrap() - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn demo_contrast() {
        let demo = interior_center_demo().unwrap();
        assert_eq!(demo.lines.len(), 20);
        assert!(demo.lines_extend(1e-12));
        assert_eq!(demo.lines[0].restriction, GComplex::from_int(1));
        assert_eq!(demo.lines[1].restriction, GComplex::ratio(9, 25));
        assert!(!demo.certificate.extends());
        assert_eq!(demo.disc_moment, GComplex::ratio(-1, 4));
        for l in &demo.lines {
            let n = &l.direction.0.norm_sqr() + &l.direction.1.norm_sqr();
            assert_eq!(n, BigRational::from_integer(1.into()));
        }
    }
}
