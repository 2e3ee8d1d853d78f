//! Laurent polynomials `Q[t, t^-1]`.
//!
//! This is the PID over which twisted chain complexes are presented. Units
//! are exactly the monomials `c * t^k` with `c != 0`. Euclidean division is
//! done after shifting both operands so that their lowest exponent is zero;
//! the Euclidean size of a nonzero element is its exponent span.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: BigRational, exponent: i64) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.coeffs.insert(exponent, c);
        }
        p
    }

    /// `sign * t^exponent` with an integer coefficient.
    pub fn signed_power(sign: i64, exponent: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(sign)), exponent)
    }

    pub fn t() -> Self {
        Self::signed_power(1, 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, integer coefficient)` pairs.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::default();
        for &(e, c) in terms {
            p.add_term(e, &BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(exponent)
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigRational {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max exponent - min exponent`; zero for monomials, `None` for zero.
    pub fn span(&self) -> Option<u64> {
        Some((self.max_exponent()? - self.min_exponent()?) as u64)
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            acc += c * pow(t, *e);
        }
        acc
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigRational {
        self.coeffs
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    fn leading(&self) -> Option<(i64, &BigRational)> {
        self.coeffs.iter().next_back().map(|(e, c)| (*e, c))
    }
}

fn pow(t: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { t.recip() } else { t.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl super::ring::EuclideanRing for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::signed_power(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c);
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, &-c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }
    fn unit_inverse(&self) -> Self {
        let (e, c) = self.leading().expect("unit_inverse of zero");
        Self::monomial(c.recip(), -e)
    }
    fn size_cmp(&self, other: &Self) -> Ordering {
        self.span().cmp(&other.span())
    }
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_min = divisor.min_exponent().expect("division by zero polynomial");
        let Some(a_min) = self.min_exponent() else {
            return (Self::default(), Self::default());
        };
        // Work with honest polynomials having nonzero constant terms.
        let d = divisor.shift(-d_min);
        let mut r = self.shift(-a_min);
        let (d_deg, d_lead) = d.leading().map(|(e, c)| (e, c.clone())).unwrap();
        let mut q = Self::default();
        while let Some((r_deg, r_lead)) = r.leading() {
            if r_deg < d_deg {
                break;
            }
            let factor = Self::monomial(r_lead / &d_lead, r_deg - d_deg);
            r = r.sub(&factor.mul(&d));
            q = q.add(&factor);
        }
        // self = t^a_min * (q * d + r) = (t^(a_min - d_min) q) * divisor + t^a_min r
        (q.shift(a_min - d_min), r.shift(a_min))
    }
    fn normalizing_unit(&self) -> Self {
        match (self.min_exponent(), self.leading()) {
            (Some(lo), Some((_, lead))) => Self::monomial(lead.recip(), -lo),
            _ => Self::one(),
        }
    }
    fn from_i64(v: i64) -> Self {
        Self::signed_power(v, 0)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `t^2 - 2*t + 1` or `-1/2*t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
