//! Topological invariants of a smooth complete intersection computed from
//! its type alone.
//!
//! Away from the middle dimension `k` the cohomology is that of `P^k`
//! (Lefschetz), so everything follows from the Euler characteristic:
//! `χ = (k+1) − b_k` for odd `k` and `χ = k + b_k` for even `k`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact_arith::{binomial, series_coefficient, GaussianInteger, IntPolynomial, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("degree 0 is not allowed in a complete intersection type")]
    ZeroDegree,
    #[error("{codim} equations in P^{ambient} leave negative dimension")]
    NegativeDimension { ambient: u32, codim: usize },
    #[error("cannot parse degree list {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("hypersurface closed form for e={e}, k={k} is not divisible by e")]
    InexactDivision { e: u32, k: u32 },
    #[error("evaluation at i disagrees with the parity/Betti characterization for {0}")]
    CharacterizationMismatch(CIType),
    #[error("binomial sum {sum} differs from closed form {closed} for the (2,2) Euler characteristic at k={k}")]
    Chi22Mismatch {
        k: u32,
        sum: Integer,
        closed: Integer,
    },
}

/// Type of a complete intersection: ambient `P^n` and the degrees of the
/// cutting hypersurfaces, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CIType {
    ambient_dim: u32,
    degrees: Vec<u32>,
}

impl CIType {
    pub fn new(ambient_dim: u32, mut degrees: Vec<u32>) -> Result<Self, TopologyError> {
        if degrees.contains(&0) {
            return Err(TopologyError::ZeroDegree);
        }
        if degrees.len() > ambient_dim as usize {
            return Err(TopologyError::NegativeDimension {
                ambient: ambient_dim,
                codim: degrees.len(),
            });
        }
        degrees.sort_unstable();
        Ok(Self {
            ambient_dim,
            degrees,
        })
    }

    /// `P^n` itself.
    pub fn projective_space(n: u32) -> Self {
        Self {
            ambient_dim: n,
            degrees: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codimension(&self) -> usize {
        self.degrees.len()
    }

    /// `k = n − l`
    pub fn dimension(&self) -> u32 {
        self.ambient_dim - self.degrees.len() as u32
    }

    /// `d = Σ dᵢ`
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    /// Degrees other than 1.
    pub fn essential_degrees(&self) -> &[u32] {
        let ones = self.degrees.iter().take_while(|&&d| d == 1).count();
        &self.degrees[ones..]
    }

    /// The same variety with every linear equation used to drop the ambient
    /// dimension.
    pub fn reduced(&self) -> CIType {
        let essential = self.essential_degrees().to_vec();
        let ones = self.degrees.len() - essential.len();
        CIType {
            ambient_dim: self.ambient_dim - ones as u32,
            degrees: essential,
        }
    }

    /// Type `(1, …, 1)`.
    pub fn is_linear(&self) -> bool {
        self.essential_degrees().is_empty()
    }

    /// Type `(1, …, 1, 2)`.
    pub fn is_quadric(&self) -> bool {
        self.essential_degrees() == [2]
    }
}

impl fmt::Display for CIType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) in P^{}",
            join_degrees(&self.degrees),
            self.ambient_dim
        )
    }
}

/// Comma-separated degree list, `""` for the empty type.
pub fn join_degrees(degrees: &[u32]) -> String {
    degrees
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a comma-separated list of positive integers. The empty string
/// (or only whitespace, or `()`) is the empty type.
pub fn parse_degrees(input: &str) -> Result<Vec<u32>, TopologyError> {
    let trimmed = input.trim();
    let trimmed = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            let part = part.trim();
            let d = u32::from_str(part).map_err(|e| TopologyError::Parse {
                input: input.to_string(),
                reason: format!("{part:?}: {e}"),
            })?;
            if d == 0 {
                return Err(TopologyError::Parse {
                    input: input.to_string(),
                    reason: "degrees must be positive".to_string(),
                });
            }
            Ok(d)
        })
        .collect()
}

/// Everything computed for one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub ci: CIType,
    pub dimension_k: u32,
    pub euler_char: Integer,
    pub middle_betti: Integer,
    pub poincare: IntPolynomial,
    pub value_at_i: GaussianInteger,
}

impl InvariantReport {
    pub fn compute(ci: &CIType) -> Self {
        let euler_char = euler_characteristic(ci);
        let middle_betti = betti_from_euler(ci, euler_char.clone());
        let poincare = poincare_from_betti(ci.dimension(), &middle_betti);
        Self {
            ci: ci.clone(),
            dimension_k: ci.dimension(),
            euler_char,
            middle_betti,
            value_at_i: poincare.eval_at_i(),
            poincare,
        }
    }

    /// `p(1)`
    pub fn betti_sum(&self) -> Integer {
        self.poincare.eval(&Integer::one())
    }
}

pub fn euler_characteristic(ci: &CIType) -> Integer {
    series_coefficient(ci.degrees(), ci.ambient_dim() as usize)
}

pub fn middle_betti(ci: &CIType) -> Integer {
    if ci.dimension() == 0 {
        return ci.degrees().iter().map(|&d| Integer::from(d)).product();
    }
    betti_from_euler(ci, euler_characteristic(ci))
}

fn betti_from_euler(ci: &CIType, chi: Integer) -> Integer {
    let k = ci.dimension();
    if k == 0 {
        return chi;
    }
    let b = if k % 2 == 1 {
        Integer::from(k + 1) - chi
    } else {
        chi - Integer::from(k)
    };
    debug_assert!(!b.is_negative(), "negative middle Betti number for {ci}");
    b
}

fn delta(k: u32) -> u32 {
    u32::from(k.is_multiple_of(2))
}

/// `Σ_{q=0}^{k} t^{2q} + (b_k − δ_k)·t^k`
pub fn poincare_polynomial(ci: &CIType) -> IntPolynomial {
    poincare_from_betti(ci.dimension(), &middle_betti(ci))
}

fn poincare_from_betti(k: u32, middle_betti: &Integer) -> IntPolynomial {
    let k = k as usize;
    let mut coeffs = vec![Integer::zero(); 2 * k + 1];
    for q in 0..=k {
        coeffs[2 * q] = Integer::one();
    }
    coeffs[k] += middle_betti - Integer::from(delta(k as u32));
    IntPolynomial::new(coeffs)
}

pub fn value_at_i(ci: &CIType) -> GaussianInteger {
    poincare_polynomial(ci).eval_at_i()
}

/// Whether `p(i) = 0`, cross-checked against the characterization
/// `k odd ∧ b_k = 0` or `k ≡ 2 (mod 4) ∧ b_k = 2`.
pub fn vanishes_at_i(ci: &CIType) -> Result<bool, TopologyError> {
    let k = ci.dimension();
    let b = middle_betti(ci);
    let direct = poincare_from_betti(k, &b).eval_at_i().is_zero();
    let predicted = (k % 2 == 1 && b.is_zero()) || (k % 4 == 2 && b == Integer::from(2));
    if direct != predicted {
        return Err(TopologyError::CharacterizationMismatch(ci.clone()));
    }
    Ok(direct)
}

/// Middle Betti number of a degree-`e` hypersurface in `P^{k+1}` from
/// `b − δ_k = (e−1)/e · ((e−1)^{k+1} − (−1)^{k+1})`.
pub fn hypersurface_middle_betti(e: u32, k: u32) -> Result<Integer, TopologyError> {
    assert!(e >= 1, "hypersurface degree must be positive");
    let em1: Integer = Integer::from(e) - 1;
    let sign = if k.is_multiple_of(2) {
        -Integer::one()
    } else {
        Integer::one()
    };
    let numerator = &em1 * (num_traits::pow(em1.clone(), k as usize + 1) - sign);
    let e_big = Integer::from(e);
    if !(&numerator % &e_big).is_zero() {
        return Err(TopologyError::InexactDivision { e, k });
    }
    Ok(numerator / e_big + delta(k))
}

/// `Σ_{i=0}^{k} 2^{k+2−i} (−1)^{k−i} (k+1−i) C(k+3, i)`
pub fn chi22_sum(k: u32) -> Integer {
    let k = k as i64;
    (0..=k)
        .map(|i| {
            let term = num_traits::pow(Integer::from(2), (k + 2 - i) as usize)
                * Integer::from(k + 1 - i)
                * binomial(k as u64 + 3, i);
            if (k - i) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `(k+2)(1 + (−1)^k)`
pub fn chi22_closed_form(k: u32) -> Integer {
    if k.is_multiple_of(2) {
        Integer::from(2 * (k as u64 + 2))
    } else {
        Integer::zero()
    }
}

/// Euler characteristic of a `(2,2)` complete intersection in `P^{k+2}`,
/// with the binomial sum checked against the closed form.
pub fn chi22(k: u32) -> Result<Integer, TopologyError> {
    let sum = chi22_sum(k);
    let closed = chi22_closed_form(k);
    if sum != closed {
        return Err(TopologyError::Chi22Mismatch { k, sum, closed });
    }
    Ok(sum)
}

/// Both sides of
/// `(k+3)(t−1)^{k+2} − (t−1)^{k+3} + (−1)^{k+3}
///   = Σ_{i=0}^{k+2} t^{k+2−i} (−1)^i (k+3−i−t) C(k+3, i)`.
pub fn expansion_identity_sides(k: u32) -> (IntPolynomial, IntPolynomial) {
    let tm1 = IntPolynomial::linear(-1);
    let low = tm1.pow(k + 2);
    let high = &low * &tm1;
    let parity = if (k + 3).is_multiple_of(2) { 1 } else { -1 };
    let lhs = &(&low.scale(&Integer::from(k + 3)) - &high) + &IntPolynomial::constant(parity);

    let mut rhs = IntPolynomial::zero();
    for i in 0..=(k + 2) {
        // (k+3−i) − t
        let factor = IntPolynomial::new(vec![Integer::from(k + 3 - i), -Integer::one()]);
        let mut c = binomial(k as u64 + 3, i as i64);
        if i % 2 == 1 {
            c = -c;
        }
        rhs = &rhs + &factor.scale(&c).shift((k + 2 - i) as usize);
    }
    (lhs, rhs)
}

pub fn verify_expansion_identity(k: u32) -> bool {
    let (lhs, rhs) = expansion_identity_sides(k);
    lhs == rhs
}
