//! Integer coefficients that start as machine words and promote to bignums
//! on overflow.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(BigInt),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0);
    pub const ONE: Coeff = Coeff::Small(1);

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(s) => Coeff::Small(s),
            None => Coeff::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(s) => BigInt::from(*s),
            Coeff::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(s) => Some(*s),
            Coeff::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(s) => *s < 0,
            Coeff::Big(b) => b.sign() == num_bigint::Sign::Minus,
        }
    }

    pub fn mul_i64(&self, k: i64) -> Coeff {
        match self {
            Coeff::Small(s) => match s.checked_mul(k) {
                Some(v) => Coeff::Small(v),
                None => Coeff::Big(BigInt::from(*s) * k),
            },
            Coeff::Big(b) => Coeff::from_big(b * k),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<BigInt> for Coeff {
    fn from(b: BigInt) -> Self {
        Coeff::from_big(b)
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        if let (Coeff::Small(a), Coeff::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                *self = Coeff::Small(v);
                return;
            }
        }
        let sum = self.to_bigint() + rhs.to_bigint();
        *self = Coeff::from_big(sum);
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self + &-rhs
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Small(a), b) => b.mul_i64(*a),
            (a, Coeff::Small(b)) => a.mul_i64(*b),
            (Coeff::Big(a), Coeff::Big(b)) => Coeff::from_big(a * b),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(s) => match s.checked_neg() {
                Some(v) => Coeff::Small(v),
                None => Coeff::Big(-BigInt::from(*s)),
            },
            Coeff::Big(b) => Coeff::from_big(-b),
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(s) => write!(f, "{s}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::iter::Sum for Coeff {
    fn sum<I: Iterator<Item = Coeff>>(iter: I) -> Coeff {
        let mut acc = Coeff::ZERO;
        for c in iter {
            acc += &c;
        }
        acc
    }
}

impl<'a> std::iter::Sum<&'a Coeff> for Coeff {
    fn sum<I: Iterator<Item = &'a Coeff>>(iter: I) -> Coeff {
        let mut acc = Coeff::ZERO;
        for c in iter {
            acc += c;
        }
        acc
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::ZERO
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let mut c = Coeff::from(i64::MAX);
        c += &Coeff::ONE;
        assert!(matches!(c, Coeff::Big(_)));
        assert_eq!(c.to_bigint(), BigInt::from(i64::MAX) + 1);
        c += &Coeff::from(-1);
        assert_eq!(c, Coeff::Small(i64::MAX));
    }

    #[test]
    fn products_promote() {
        let big = &Coeff::from(1i64 << 40) * &Coeff::from(1i64 << 40);
        assert_eq!(big.to_bigint(), BigInt::from(1u8) << 80);
        assert!((&big - &big).is_zero());
        assert_eq!(-&Coeff::from(i64::MIN), Coeff::Big(BigInt::from(1u8) << 63));
    }
}
