//! The Lemma's case analysis, the Theorem's verdict pipeline, and the
//! parity bookkeeping for the homogeneous types.

mod scan;

pub use scan::{
    enumerate_types, scan_lemma, scan_lemma_with, scan_theorem, scan_theorem_with, ScanKind,
    ScanOptions, ScanRecord, ScanReport,
};

use std::fmt;

use thiserror::Error;

use crate::ci_topology::{value_at_i, vanishes_at_i, CIType, TopologyError};
use crate::exact_arith::GaussianInteger;
use crate::lines_fibers::{line_geometry, product_obstruction, LinesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassificationError {
    #[error("the verdict needs an ambient P^n with n >= 1")]
    NoAmbient,
    #[error("{0} passed every obstruction but is not of type (1,...,1) or (1,...,1,2)")]
    TheoremViolation(CIType),
    #[error("case shape and vanishing at i disagree for {0}")]
    LemmaViolation(CIType),
    #[error("{0} is not of type (1,...,1) or (1,...,1,2)")]
    NotHomogeneous(CIType),
    #[error("parity analysis of p_X(i), p_F(i) fails for {0}")]
    ParityViolation(CIType),
    #[error("rationally connected low-dimensional type {0} is neither linear nor a conic")]
    CatalogViolation(CIType),
    #[error("could not start scan workers: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Lines(#[from] LinesError),
}

/// Which of the three vanishing shapes a type falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaCase {
    /// `(1, …, 1)`, `k` odd
    CaseI,
    /// `(1, …, 1, 2)`, `k` odd
    CaseII,
    /// `(1, …, 1, 2)`, `k ≡ 2 (mod 4)`
    CaseIII,
    NonVanishing,
}

impl LemmaCase {
    pub fn name(self) -> &'static str {
        match self {
            LemmaCase::CaseI => "CaseI",
            LemmaCase::CaseII => "CaseII",
            LemmaCase::CaseIII => "CaseIII",
            LemmaCase::NonVanishing => "NonVanishing",
        }
    }

    fn shape_of(ci: &CIType) -> Option<LemmaCase> {
        let k = ci.dimension();
        if ci.is_linear() && k % 2 == 1 {
            Some(LemmaCase::CaseI)
        } else if ci.is_quadric() && k % 2 == 1 {
            Some(LemmaCase::CaseII)
        } else if ci.is_quadric() && k % 4 == 2 {
            Some(LemmaCase::CaseIII)
        } else {
            None
        }
    }
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies `ci` and checks that `p(i) = 0` happens exactly on the three
/// case shapes.
pub fn lemma_classify(ci: &CIType) -> Result<LemmaCase, ClassificationError> {
    let shape = LemmaCase::shape_of(ci);
    if shape.is_some() != vanishes_at_i(ci)? {
        return Err(ClassificationError::LemmaViolation(ci.clone()));
    }
    Ok(shape.unwrap_or(LemmaCase::NonVanishing))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    HomogeneousLinear,
    HomogeneousQuadric,
    NotRationallyConnected,
    NormalBundleObstruction,
    PoincareObstruction,
}

impl VerdictKind {
    pub const ALL: [VerdictKind; 5] = [
        VerdictKind::HomogeneousLinear,
        VerdictKind::HomogeneousQuadric,
        VerdictKind::NotRationallyConnected,
        VerdictKind::NormalBundleObstruction,
        VerdictKind::PoincareObstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::HomogeneousLinear => "HomogeneousLinear",
            VerdictKind::HomogeneousQuadric => "HomogeneousQuadric",
            VerdictKind::NotRationallyConnected => "NotRationallyConnected",
            VerdictKind::NormalBundleObstruction => "NormalBundleObstruction",
            VerdictKind::PoincareObstruction => "PoincareObstruction",
        }
    }

    pub fn is_homogeneous(self) -> bool {
        matches!(
            self,
            VerdictKind::HomogeneousLinear | VerdictKind::HomogeneousQuadric
        )
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a homogeneous verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomogeneousRoute {
    /// `k ≤ 1`: rationally connected points, lines and conics.
    LowDimension,
    /// Passed the normal-bundle and Poincaré-polynomial gates.
    LineFibration,
}

impl HomogeneousRoute {
    pub fn name(self) -> &'static str {
        match self {
            HomogeneousRoute::LowDimension => "LowDimension",
            HomogeneousRoute::LineFibration => "LineFibration",
        }
    }
}

/// Witness numbers behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReason {
    pub ambient_dim: u32,
    pub total_degree: u64,
    pub dimension: u32,
    pub normal_degree: i64,
    pub route: Option<HomogeneousRoute>,
    pub x_at_i: GaussianInteger,
    /// Present once the fiber of lines has been formed.
    pub f_at_i: Option<GaussianInteger>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ci: CIType,
    pub kind: VerdictKind,
    pub reason: VerdictReason,
}

impl Verdict {
    /// One-line human explanation of the reason record.
    pub fn explanation(&self) -> String {
        let r = &self.reason;
        match self.kind {
            VerdictKind::NotRationallyConnected => format!(
                "d = {} > n = {}: not rationally connected",
                r.total_degree, r.ambient_dim
            ),
            VerdictKind::NormalBundleObstruction => format!(
                "deg N_L = n - d - 1 = {} < 0: a line has a negative normal summand, so its double covers are obstructed (not convex)",
                r.normal_degree
            ),
            VerdictKind::PoincareObstruction => format!(
                "p_X(i) = {} and p_F(i) = {} are both nonzero, so 1+t^2 cannot divide p_F*p_X",
                r.x_at_i,
                r.f_at_i.as_ref().map_or("?".to_string(), ToString::to_string)
            ),
            VerdictKind::HomogeneousLinear | VerdictKind::HomogeneousQuadric => match r.route {
                Some(HomogeneousRoute::LowDimension) => format!(
                    "dimension {} <= 1 and rationally connected: a point, line or conic",
                    r.dimension
                ),
                _ => format!(
                    "p_X(i) = {}, p_F(i) = {}: 1+t^2 divides p_F*p_X",
                    r.x_at_i,
                    r.f_at_i.as_ref().map_or("?".to_string(), ToString::to_string)
                ),
            },
        }
    }
}

fn homogeneous_kind(ci: &CIType) -> Option<VerdictKind> {
    if ci.is_linear() {
        Some(VerdictKind::HomogeneousLinear)
    } else if ci.is_quadric() {
        Some(VerdictKind::HomogeneousQuadric)
    } else {
        None
    }
}

/// Runs the obstruction pipeline in order: rational connectedness, the
/// low-dimensional cases, normal-bundle degree, then `p_F(i)·p_X(i)`.
/// Reaching the end with a non-homogeneous type is an error.
pub fn theorem_verdict(ci: &CIType) -> Result<Verdict, ClassificationError> {
    if ci.ambient_dim() == 0 {
        return Err(ClassificationError::NoAmbient);
    }
    let geometry = line_geometry(ci)?;
    let mut reason = VerdictReason {
        ambient_dim: ci.ambient_dim(),
        total_degree: ci.total_degree(),
        dimension: ci.dimension(),
        normal_degree: geometry.normal_degree,
        route: None,
        x_at_i: value_at_i(ci),
        f_at_i: None,
    };
    let verdict = |kind, reason| Verdict {
        ci: ci.clone(),
        kind,
        reason,
    };

    if !geometry.rationally_connected {
        return Ok(verdict(VerdictKind::NotRationallyConnected, reason));
    }
    if ci.dimension() <= 1 {
        let kind = homogeneous_kind(ci)
            .ok_or_else(|| ClassificationError::TheoremViolation(ci.clone()))?;
        reason.route = Some(HomogeneousRoute::LowDimension);
        return Ok(verdict(kind, reason));
    }
    if geometry.normal_degree < 0 {
        return Ok(verdict(VerdictKind::NormalBundleObstruction, reason));
    }
    let obstruction = product_obstruction(ci)?;
    reason.f_at_i = Some(obstruction.f_at_i);
    if !obstruction.passes {
        return Ok(verdict(VerdictKind::PoincareObstruction, reason));
    }
    let kind =
        homogeneous_kind(ci).ok_or_else(|| ClassificationError::TheoremViolation(ci.clone()))?;
    reason.route = Some(HomogeneousRoute::LineFibration);
    Ok(verdict(kind, reason))
}

/// Which of `p_X(i)`, `p_F(i)` vanish for a homogeneous type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityOutcome {
    pub x_vanishes: bool,
    pub f_vanishes: bool,
}

impl ParityOutcome {
    pub fn exactly_one(self) -> bool {
        self.x_vanishes != self.f_vanishes
    }

    pub fn both(self) -> bool {
        self.x_vanishes && self.f_vanishes
    }
}

/// For `(1,…,1)` exactly one side vanishes; for `(1,…,1,2)` both vanish
/// when `n − l` is odd and exactly one does when it is even.
pub fn homogeneous_parity_report(ci: &CIType) -> Result<ParityOutcome, ClassificationError> {
    let kind =
        homogeneous_kind(ci).ok_or_else(|| ClassificationError::NotHomogeneous(ci.clone()))?;
    let obstruction = product_obstruction(ci)?;
    let outcome = ParityOutcome {
        x_vanishes: obstruction.x_at_i.is_zero(),
        f_vanishes: obstruction.f_at_i.is_zero(),
    };
    let expected_both = kind == VerdictKind::HomogeneousQuadric && ci.dimension() % 2 == 1;
    let ok = if expected_both {
        outcome.both()
    } else {
        outcome.exactly_one()
    };
    if !ok {
        return Err(ClassificationError::ParityViolation(ci.clone()));
    }
    Ok(outcome)
}

/// All rationally connected types of dimension at most 1 in `P^n` for
/// `1 ≤ n ≤ max_n`, each checked to be a point, a line or a conic.
pub fn dimension_leq1_catalog(max_n: u32) -> Result<Vec<CIType>, ClassificationError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for l in (n.saturating_sub(1))..=n {
            for degrees in scan::multisets(l as usize, n.max(1)) {
                if degrees.iter().map(|&d| d as u64).sum::<u64>() > n as u64 {
                    continue;
                }
                let ci = CIType::new(n, degrees)?;
                if !(ci.is_linear() || ci.is_quadric()) {
                    return Err(ClassificationError::CatalogViolation(ci));
                }
                out.push(ci);
            }
        }
    }
    Ok(out)
}
