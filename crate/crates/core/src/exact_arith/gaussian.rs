use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Integer;

/// An element `re + im·i` of the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInteger {
    pub re: Integer,
    pub im: Integer,
}

impl GaussianInteger {
    pub fn new(re: impl Into<Integer>, im: impl Into<Integer>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn from_real(re: impl Into<Integer>) -> Self {
        Self::new(re, 0)
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

/// Formats as `a+bi` with an explicit sign on the imaginary part.
impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

impl<'a> Add<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: &'a GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, rhs: &'a GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: &'a GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for GaussianInteger {
            type Output = GaussianInteger;
            fn $m(self, rhs: GaussianInteger) -> GaussianInteger {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        -&self
    }
}

impl From<Integer> for GaussianInteger {
    fn from(re: Integer) -> Self {
        Self {
            re,
            im: Integer::zero(),
        }
    }
}

impl GaussianInteger {
    /// True when this is one of the four units `±1`, `±i`.
    pub fn is_unit(&self) -> bool {
        (self.re.abs().is_one() && self.im.is_zero())
            || (self.re.is_zero() && self.im.abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gauss() -> impl Strategy<Value = GaussianInteger> {
        (any::<i64>(), any::<i64>()).prop_map(|(a, b)| GaussianInteger::new(a, b))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianInteger::i();
        assert_eq!(&i * &i, GaussianInteger::from_real(-1));
        assert_eq!(i.pow(4), GaussianInteger::one());
        assert!(i.is_unit());
    }

    #[test]
    fn display_uses_explicit_sign() {
        assert_eq!(GaussianInteger::new(0, -10).to_string(), "0-10i");
        assert_eq!(GaussianInteger::new(6, 0).to_string(), "6+0i");
        assert_eq!(GaussianInteger::new(-3, 4).to_string(), "-3+4i");
    }

    proptest! {
        #[test]
        fn ring_laws(a in gauss(), b in gauss(), c in gauss()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
        }
    }
}
