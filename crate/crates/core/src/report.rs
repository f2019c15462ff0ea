//! JSON report schema shared by the CLI and the C ABI.
//!
//! Exact values are always strings (`"-3/4"`, `"1/2+2/3i"`); floats only
//! appear inside the `numeric` and `demo` sections.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::GComplex;
use crate::boundary::BPoly2;
use crate::certifier::{Certificate, Witness};
use crate::numeric::InteriorCenterDemo;
use crate::slicer::{BPolyN, Gluing, NdCertificate, NdVerdict, SlicePlane, SliceReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Extends,
    Obstructed,
    /// A value was computed (moments, quadrature, tables); no verdict.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    /// `"cascade"`, `"moment"` or `"coefficient"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_o: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_o: Option<u32>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequency: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moments: Option<Vec<MomentEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slices: Option<SliceSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub demo: Option<DemoSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<IdentityRow>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentEntry {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    /// Exact `μ` with `G = 2πi·μ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    /// `(1 + αᾱ)^L·μ` as a polynomial in α, ᾱ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<String>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub cleared_power: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceEntry {
    pub direction: Vec<String>,
    pub restriction: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceSection {
    pub dimension: usize,
    pub planes: Vec<SliceEntry>,
    /// `"agrees"`, `"disagrees"` or `"not_applicable"`.
    pub gluing: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub common_restriction: Option<String>,
    pub consistent_with_global: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericSection {
    pub nodes: usize,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<[f64; 2]>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_quad: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_exact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_error: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_negative_mode: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub within_tolerance: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineEntry {
    pub direction: [String; 2],
    pub restriction: String,
    pub max_negative_mode: f64,
    pub extends: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DemoSection {
    pub name: String,
    pub lines: Vec<LineEntry>,
    pub lines_extend: bool,
    pub disc_a: String,
    pub disc_moment: String,
    pub disc_moment_quad: [f64; 2],
    pub nodes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub h: u32,
    pub k: u32,
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub closed_form: String,
    pub oracle: String,
    pub agree: bool,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl Report {
    pub fn new(status: Status) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            status,
            input: None,
            witness: None,
            l_o: None,
            k_o: None,
            n: None,
            frequency: None,
            coefficient: None,
            exponent: None,
            monomial: None,
            extension: None,
            moments: None,
            slices: None,
            numeric: None,
            demo: None,
            table: None,
        }
    }

    pub fn with_input(mut self, input: impl Into<String>) -> Self {
        self.input = Some(input.into());
        self
    }

    pub fn from_certificate(c: &Certificate) -> Self {
        match c {
            Certificate::Extends { extension } => {
                let mut r = Report::new(Status::Extends);
                r.extension = Some(extension.to_string());
                r
            }
            Certificate::Obstructed(w) => {
                let mut r = Report::new(Status::Obstructed);
                r.set_witness(w);
                r
            }
        }
    }

    fn set_witness(&mut self, w: &Witness) {
        match w {
            Witness::Cascade(cw) => {
                self.witness = Some("cascade".into());
                self.l_o = Some(cw.l_o);
                self.k_o = Some(cw.k_o);
            }
            Witness::Moment { exponent, .. } => {
                self.witness = Some("moment".into());
                self.exponent = Some([exponent.0, exponent.1]);
            }
        }
        self.n = Some(w.n());
        self.frequency = Some(w.frequency());
        self.coefficient = Some(w.coefficient().to_string());
    }

    pub fn from_nd_certificate(c: &NdCertificate, planes: &[SlicePlane], f: &BPolyN) -> Self {
        let mut r = match &c.verdict {
            NdVerdict::Extends { extension } => {
                let mut r = Report::new(Status::Extends);
                r.extension = Some(extension.to_string());
                r
            }
            NdVerdict::Obstructed {
                monomial,
                coefficient,
                ..
            } => {
                let mut r = Report::new(Status::Obstructed);
                r.witness = Some("coefficient".into());
                r.monomial = Some(BPolyN::monomial(monomial.clone(), GComplex::from_int(1)).to_string());
                r.coefficient = Some(coefficient.to_string());
                r
            }
        };
        r.slices = Some(SliceSection::new(f, planes, &c.slices, c.slices_agree()));
        r
    }

    pub fn from_demo(demo: &InteriorCenterDemo, tolerance: f64) -> Self {
        let mut r = Report::from_certificate(&demo.certificate).with_input("z1*~z1");
        r.demo = Some(DemoSection {
            name: "interior-center".into(),
            lines: demo
                .lines
                .iter()
                .map(|l| LineEntry {
                    direction: [l.direction.0.to_string(), l.direction.1.to_string()],
                    restriction: l.restriction.to_string(),
                    max_negative_mode: l.max_negative_mode,
                    extends: l.max_negative_mode <= tolerance,
                })
                .collect(),
            lines_extend: demo.lines_extend(tolerance),
            disc_a: "1".into(),
            disc_moment: demo.disc_moment.to_string(),
            disc_moment_quad: pair(demo.disc_moment_quad),
            nodes: demo.nodes,
        });
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl SliceSection {
    pub fn new(f: &BPolyN, planes: &[SlicePlane], report: &SliceReport, consistent: bool) -> Self {
        let entries = planes
            .iter()
            .zip(&report.certificates)
            .map(|(plane, cert)| {
                let restriction = crate::slicer::slice_restrict(f, plane)
                    .map(|s| s.to_string())
                    .unwrap_or_default();
                let mut entry = SliceEntry {
                    direction: plane.direction().iter().map(|x| x.to_string()).collect(),
                    restriction,
                    status: if cert.extends() {
                        Status::Extends
                    } else {
                        Status::Obstructed
                    },
                    extension: cert.extension().map(BPoly2::to_string),
                    n: None,
                    coefficient: None,
                };
                if let Some(w) = cert.witness() {
                    entry.n = Some(w.n());
                    entry.coefficient = Some(w.coefficient().to_string());
                }
                entry
            })
            .collect();
        let (gluing, common) = match &report.gluing {
            Gluing::Agrees { common } => ("agrees", Some(common.to_string())),
            Gluing::Disagrees { .. } => ("disagrees", None),
            Gluing::NotApplicable => ("not_applicable", None),
        };
        SliceSection {
            dimension: f.dim(),
            planes: entries,
            gluing: gluing.into(),
            common_restriction: common,
            consistent_with_global: consistent,
        }
    }
}
