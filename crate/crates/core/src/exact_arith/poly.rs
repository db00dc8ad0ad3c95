use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ArithError, GaussianInteger, Integer};

/// Dense univariate polynomial with integer coefficients.
///
/// `coeffs[j]` is the coefficient of `t^j`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c·t^degree`
    pub fn monomial(c: impl Into<Integer>, degree: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    /// `t + c`
    pub fn linear(c: impl Into<Integer>) -> Self {
        Self::new(vec![c.into(), Integer::one()])
    }

    /// The Poincaré polynomial of the projective line.
    pub fn one_plus_t_squared() -> Self {
        Self::from_i64s(&[1, 0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Integer {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(1);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a Gaussian integer.
    pub fn eval_gaussian(&self, z: &GaussianInteger) -> GaussianInteger {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianInteger::zero(), |acc, c| {
                let mut next = &acc * z;
                next.re += c;
                next
            })
    }

    /// Value at `t = i`.
    pub fn eval_at_i(&self) -> GaussianInteger {
        self.eval_gaussian(&GaussianInteger::i())
    }

    /// Schoolbook long division by a divisor whose leading coefficient is ±1.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        let lead = divisor
            .leading_coefficient()
            .ok_or(ArithError::ZeroDivisor)?;
        if !lead.abs().is_one() {
            return Err(ArithError::NonMonicDivisor(lead.clone()));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Integer::zero(); rem.len() - dd];
        for j in (0..quot.len()).rev() {
            // lead is ±1, so dividing is multiplying by lead
            let q = &rem[j + dd] * lead;
            if q.is_zero() {
                continue;
            }
            for (m, dc) in divisor.coeffs.iter().enumerate() {
                rem[j + m] -= &q * dc;
            }
            quot[j] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// True iff `divisor` divides `self` exactly over the integers.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool, ArithError> {
        Ok(self.div_rem(divisor)?.1.is_zero())
    }
}

/// Ascending powers of `t`, e.g. `1 + 2t^2 - t^3`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if j == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match j {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{j}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &'a IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &'a IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &'a IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a_deg, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_deg, b) in rhs.coeffs.iter().enumerate() {
                out[a_deg + b_deg] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}
