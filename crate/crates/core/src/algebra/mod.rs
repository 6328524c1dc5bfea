//! Scalar and polynomial arithmetic.

mod biform;
mod binary_form;
mod fp;
mod gaussian;
mod gaussian_int;
pub mod matrix;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use biform::{exponent_triples, BiForm, Monomial};
pub use binary_form::BinaryForm;
pub use fp::{is_odd_prime, Fp};
pub use gaussian::GaussianRational;
pub use gaussian_int::GaussianInt;

/// Commutative ring with unit. Operators consume their operands.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring + Eq {
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|v| self.clone() * v)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}
