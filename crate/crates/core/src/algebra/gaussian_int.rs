use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::GaussianRational;

/// Element of `Z[i]`; the working ring of fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn one() -> Self {
        Self::new(1.into(), 0.into())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Bit length of the larger part; the pivot size measure.
    pub fn bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }

    /// Exact quotient, or `None` if `other` does not divide `self` in `Z[i]`.
    pub fn exact_div(&self, other: &GaussianInt) -> Option<GaussianInt> {
        let n = &other.re * &other.re + &other.im * &other.im;
        if n.is_zero() {
            return None;
        }
        let re = &self.re * &other.re + &self.im * &other.im;
        let im = &self.im * &other.re - &self.re * &other.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GaussianInt::new(qr, qi))
    }

    /// `z * scale` for a Gaussian rational whose denominators divide `scale`.
    pub fn scaled_from(z: &GaussianRational, scale: &BigInt) -> GaussianInt {
        let part = |r: &BigRational| -> BigInt { r.numer() * (scale / r.denom()) };
        GaussianInt::new(part(&z.re), part(&z.im))
    }

    pub fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }

    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianInt::new(&self.re * &o.re, BigInt::zero());
        }
        GaussianInt::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl<'a> Sub<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &o.re, &self.im - &o.im)
    }
}
