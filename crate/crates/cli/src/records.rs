//! Serializable output records. Every integer is emitted as a decimal
//! string so consumers never truncate big values.

use ci_invariants::ci_topology::CIType;
use ci_invariants::classification::{ParityOutcome, ScanRecord, ScanReport, Verdict};
use ci_invariants::lines_fibers::LineGeometry;
use ci_invariants::{GaussianInteger, IntPolynomial, InvariantReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussianRecord {
    pub re: String,
    pub im: String,
}

impl From<&GaussianInteger> for GaussianRecord {
    fn from(z: &GaussianInteger) -> Self {
        Self {
            re: z.re.to_string(),
            im: z.im.to_string(),
        }
    }
}

fn degree_strings(ci: &CIType) -> Vec<String> {
    ci.degrees().iter().map(u32::to_string).collect()
}

fn coefficient_strings(p: &IntPolynomial) -> Vec<String> {
    p.coefficients().iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRecord {
    pub ambient_dim: String,
    pub degrees: Vec<String>,
    pub dimension_k: String,
    pub euler_char: String,
    pub middle_betti: String,
    pub betti_sum: String,
    /// Ascending powers of `t`.
    pub poincare_coefficients: Vec<String>,
    pub poincare: String,
    pub value_at_i: GaussianRecord,
}

impl From<&InvariantReport> for InvariantsRecord {
    fn from(r: &InvariantReport) -> Self {
        Self {
            ambient_dim: r.ci.ambient_dim().to_string(),
            degrees: degree_strings(&r.ci),
            dimension_k: r.dimension_k.to_string(),
            euler_char: r.euler_char.to_string(),
            middle_betti: r.middle_betti.to_string(),
            betti_sum: r.betti_sum().to_string(),
            poincare_coefficients: coefficient_strings(&r.poincare),
            poincare: r.poincare.to_string(),
            value_at_i: (&r.value_at_i).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityRecord {
    pub x_vanishes: bool,
    pub f_vanishes: bool,
}

impl From<ParityOutcome> for ParityRecord {
    fn from(p: ParityOutcome) -> Self {
        Self {
            x_vanishes: p.x_vanishes,
            f_vanishes: p.f_vanishes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub ambient_dim: String,
    pub degrees: Vec<String>,
    pub verdict: String,
    pub route: Option<String>,
    pub explanation: String,
    pub dimension: String,
    pub total_degree: String,
    pub normal_degree: String,
    pub p_x_at_i: GaussianRecord,
    pub p_f_at_i: Option<GaussianRecord>,
    pub lemma_case: String,
    pub parity: Option<ParityRecord>,
}

impl ClassifyRecord {
    pub fn new(verdict: &Verdict, lemma_case: &str, parity: Option<ParityOutcome>) -> Self {
        let r = &verdict.reason;
        Self {
            ambient_dim: verdict.ci.ambient_dim().to_string(),
            degrees: degree_strings(&verdict.ci),
            verdict: verdict.kind.name().to_string(),
            route: r.route.map(|route| route.name().to_string()),
            explanation: verdict.explanation(),
            dimension: r.dimension.to_string(),
            total_degree: r.total_degree.to_string(),
            normal_degree: r.normal_degree.to_string(),
            p_x_at_i: (&r.x_at_i).into(),
            p_f_at_i: r.f_at_i.as_ref().map(Into::into),
            lemma_case: lemma_case.to_string(),
            parity: parity.map(Into::into),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRecord {
    pub ambient_dim: String,
    pub degrees: Vec<String>,
    pub moduli_dim: String,
    pub fiber_dim: String,
    pub normal_degree: String,
    pub rationally_connected: bool,
    /// `ok` or `negative_fiber_dimension`.
    pub status: String,
    pub fiber: Option<InvariantsRecord>,
}

impl FiberRecord {
    pub fn new(geometry: &LineGeometry, fiber: Option<&InvariantReport>) -> Self {
        Self {
            ambient_dim: geometry.ci.ambient_dim().to_string(),
            degrees: degree_strings(&geometry.ci),
            moduli_dim: geometry.moduli_dim.to_string(),
            fiber_dim: geometry.fiber_dim.to_string(),
            normal_degree: geometry.normal_degree.to_string(),
            rationally_connected: geometry.rationally_connected,
            status: if fiber.is_some() {
                "ok"
            } else {
                "negative_fiber_dimension"
            }
            .to_string(),
            fiber: fiber.map(Into::into),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRowRecord {
    pub scan: String,
    pub n: String,
    pub degrees: String,
    pub k: String,
    pub d: String,
    pub b_k: String,
    pub p_x_at_i: String,
    pub p_f_at_i: String,
    pub outcome: String,
}

impl ScanRowRecord {
    pub fn new(kind: &str, r: &ScanRecord) -> Self {
        Self {
            scan: kind.to_string(),
            n: r.ci.ambient_dim().to_string(),
            degrees: ci_invariants::ci_topology::join_degrees(r.ci.degrees()),
            k: r.dimension.to_string(),
            d: r.total_degree.to_string(),
            b_k: r.middle_betti.to_string(),
            p_x_at_i: r.x_at_i.to_string(),
            p_f_at_i: r
                .f_at_i
                .as_ref()
                .map_or_else(String::new, ToString::to_string),
            outcome: r.outcome.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummaryRecord {
    pub kind: String,
    pub max_n: String,
    pub max_degree: String,
    pub types: String,
    pub counts: std::collections::BTreeMap<String, String>,
    pub violations: Vec<String>,
    pub records: Vec<ScanRowRecord>,
}

impl From<&ScanReport> for ScanSummaryRecord {
    fn from(report: &ScanReport) -> Self {
        let kind = report.kind.name();
        Self {
            kind: kind.to_string(),
            max_n: report.max_n.to_string(),
            max_degree: report.max_degree.to_string(),
            types: report.records.len().to_string(),
            counts: report
                .counts()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            violations: report.violations.clone(),
            records: report
                .records
                .iter()
                .map(|r| ScanRowRecord::new(kind, r))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub k: String,
    pub expansion_holds: bool,
    pub chi22_sum: String,
    pub chi22_closed_form: String,
    pub chi22_agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitiesRecord {
    pub max_k: String,
    pub all_hold: bool,
    pub results: Vec<IdentityRow>,
}
