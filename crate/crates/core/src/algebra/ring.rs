use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative Euclidean domain with exact arithmetic.
///
/// Everything the normal-form algorithms need: ring operations, a Euclidean
/// division whose remainder is strictly smaller than the divisor (or zero),
/// and a canonical representative of each associate class.
pub trait EuclideanRing: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_unit(&self) -> bool;

    /// Inverse of a unit. Callers must check `is_unit` first.
    fn unit_inverse(&self) -> Self;

    /// Compares Euclidean sizes of two nonzero elements.
    fn size_cmp(&self, other: &Self) -> Ordering;

    /// `(q, r)` with `self = q * divisor + r` and `r` zero or of smaller size.
    fn div_rem(&self, divisor: &Self) -> (Self, Self);

    /// Returns a unit `u` such that `u * self` is the canonical associate.
    /// For zero the unit is one.
    fn normalizing_unit(&self) -> Self;

    fn normalized(&self) -> Self {
        self.normalizing_unit().mul(self)
    }

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Exact quotient, `None` when `divisor` does not divide `self`.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn from_i64(v: i64) -> Self;
}

impl EuclideanRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn unit_inverse(&self) -> Self {
        self.clone()
    }
    fn size_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        Integer::div_rem(self, divisor)
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -<BigInt as One>::one()
        } else {
            <BigInt as One>::one()
        }
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl EuclideanRing for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn unit_inverse(&self) -> Self {
        self.recip()
    }
    fn size_cmp(&self, _other: &Self) -> Ordering {
        Ordering::Equal
    }
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        (self / divisor, Zero::zero())
    }
    fn normalizing_unit(&self) -> Self {
        if Zero::is_zero(self) {
            One::one()
        } else {
            self.recip()
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Normalized greatest common divisor by the Euclidean algorithm.
pub fn gcd<R: EuclideanRing>(a: &R, b: &R) -> R {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r;
    }
    a.normalized()
}
