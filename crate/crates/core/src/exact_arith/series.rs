use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use super::{binomial, ArithError, IntPolynomial, Integer};

/// Power series in one variable truncated after `H^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Integer>,
    order: usize,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(mut coeffs: Vec<Integer>, order: usize) -> Self {
        coeffs.resize(order + 1, Integer::zero());
        Self { coeffs, order }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Integer::one()], order)
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        Self::new(p.coefficients().to_vec(), order)
    }

    /// `(1 + H)^exp`, truncated.
    pub fn binomial_power(exp: u64, order: usize) -> Self {
        Self::new(
            (0..=order).map(|j| binomial(exp, j as i64)).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, j: usize) -> &Integer {
        &self.coeffs[j]
    }

    pub fn coefficients(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Multiplies by `c·H^shift`.
    pub fn shift_scale(&self, shift: usize, c: &Integer) -> Self {
        let mut coeffs = vec![Integer::zero(); self.order + 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if j + shift > self.order {
                break;
            }
            coeffs[j + shift] = a * c;
        }
        Self {
            coeffs,
            order: self.order,
        }
    }

    /// Multiplies by `1 / (1 + c·H) = Σ (−c)^j H^j`, via the recurrence
    /// `out_j = a_j − c·out_{j−1}`.
    pub fn mul_geometric(&self, c: &Integer) -> Self {
        let mut coeffs: Vec<Integer> = Vec::with_capacity(self.order + 1);
        for (j, a) in self.coeffs.iter().enumerate() {
            let next = if j == 0 {
                a.clone()
            } else {
                a - c * &coeffs[j - 1]
            };
            coeffs.push(next);
        }
        Self {
            coeffs,
            order: self.order,
        }
    }

    /// Multiplicative inverse; the constant term must be ±1.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(ArithError::NonUnitConstant(c0.clone()));
        }
        let mut inv = vec![Integer::zero(); self.order + 1];
        inv[0] = c0.clone();
        for j in 1..=self.order {
            let mut acc = Integer::zero();
            for m in 1..=j {
                acc += &self.coeffs[m] * &inv[j - m];
            }
            // c0 is its own inverse
            inv[j] = -(acc * c0);
        }
        Ok(Self {
            coeffs: inv,
            order: self.order,
        })
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    /// The product is truncated at the smaller of the two orders.
    fn mul(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![Integer::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out, order }
    }
}

/// Coefficient of `H^n` in `(1+H)^(n+1) · ∏ dᵢH / (1 + dᵢH)`.
///
/// This is the degree-`n` part of the total Chern class of a complete
/// intersection of the given degrees in `P^n`, capped with its fundamental
/// class: the Euler characteristic.
pub fn series_coefficient(degrees: &[u32], n: usize) -> Integer {
    if degrees.len() > n {
        return Integer::zero();
    }
    let mut acc = TruncatedSeries::binomial_power(n as u64 + 1, n);
    for &d in degrees {
        let d = Integer::from(d);
        acc = acc.shift_scale(1, &d).mul_geometric(&d);
    }
    acc.coefficient(n).clone()
}
