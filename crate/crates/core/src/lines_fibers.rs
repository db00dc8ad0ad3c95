//! Numerical line geometry of a generic complete intersection `X ⊂ P^n`.

use thiserror::Error;

use crate::ci_topology::{poincare_polynomial, CIType};
use crate::exact_arith::{ArithError, GaussianInteger, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinesError {
    #[error("P^0 contains no lines")]
    NoLines,
    #[error("fiber of lines through a point would have dimension {fiber_dim} < 0")]
    NegativeFiberDimension { fiber_dim: i64 },
    #[error("divisibility of p_F·p_X by 1+t^2 disagrees with its factors for {0}")]
    FactorizationMismatch(CIType),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGeometry {
    pub ci: CIType,
    /// `dim M = 2n − 2 − d − l`
    pub moduli_dim: i64,
    /// `dim F = n − 1 − d`
    pub fiber_dim: i64,
    /// `deg N_L = n − d − 1`
    pub normal_degree: i64,
    /// `d ≤ n`
    pub rationally_connected: bool,
}

pub fn line_geometry(ci: &CIType) -> Result<LineGeometry, LinesError> {
    let n = ci.ambient_dim() as i64;
    if n == 0 {
        return Err(LinesError::NoLines);
    }
    let d = ci.total_degree() as i64;
    let l = ci.codimension() as i64;
    Ok(LineGeometry {
        ci: ci.clone(),
        moduli_dim: 2 * n - 2 - d - l,
        fiber_dim: n - 1 - d,
        normal_degree: n - d - 1,
        rationally_connected: d <= n,
    })
}

/// The variety of lines through a general point: type
/// `(1, 2, …, d₁, 1, 2, …, d₂, …)` in `P^{n−1}`.
pub fn fiber_type(ci: &CIType) -> Result<CIType, LinesError> {
    let geometry = line_geometry(ci)?;
    if geometry.fiber_dim < 0 {
        return Err(LinesError::NegativeFiberDimension {
            fiber_dim: geometry.fiber_dim,
        });
    }
    let degrees = ci.degrees().iter().flat_map(|&d| 1..=d).collect();
    let fiber = CIType::new(ci.ambient_dim() - 1, degrees)
        .expect("nonnegative fiber dimension gives a valid type");
    debug_assert_eq!(fiber.dimension() as i64, geometry.fiber_dim);
    Ok(fiber)
}

/// Values of `p_X` and `p_F` at `i` and whether one of them vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductObstruction {
    pub fiber: CIType,
    pub x_at_i: GaussianInteger,
    pub f_at_i: GaussianInteger,
    pub passes: bool,
}

/// `1 + t²` must divide `p_U = p_F · p_X`; since it is irreducible it must
/// divide a factor, i.e. `p_F(i) = 0` or `p_X(i) = 0`.
pub fn product_obstruction(ci: &CIType) -> Result<ProductObstruction, LinesError> {
    let fiber = fiber_type(ci)?;
    let p_x = poincare_polynomial(ci);
    let p_f = poincare_polynomial(&fiber);
    let x_at_i = p_x.eval_at_i();
    let f_at_i = p_f.eval_at_i();
    let passes = x_at_i.is_zero() || f_at_i.is_zero();

    let q = IntPolynomial::one_plus_t_squared();
    let product_divisible = (&p_f * &p_x).is_divisible_by(&q)?;
    let factor_divisible = p_f.is_divisible_by(&q)? || p_x.is_divisible_by(&q)?;
    if product_divisible != factor_divisible || product_divisible != passes {
        return Err(LinesError::FactorizationMismatch(ci.clone()));
    }
    Ok(ProductObstruction {
        fiber,
        x_at_i,
        f_at_i,
        passes,
    })
}
