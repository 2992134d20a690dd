use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact dyadic rational `num / 2^shift`, kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    num: BigInt,
    shift: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, shift: u32) -> Dyadic {
        let mut d = Dyadic { num, shift };
        d.reduce();
        d
    }

    pub fn zero() -> Dyadic {
        Dyadic { num: BigInt::zero(), shift: 0 }
    }

    pub fn one() -> Dyadic {
        Dyadic { num: BigInt::one(), shift: 0 }
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic { num: BigInt::from(v), shift: 0 }
    }

    /// `2^{-k}`.
    pub fn half_pow(k: u32) -> Dyadic {
        Dyadic { num: BigInt::one(), shift: k }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.shift = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.shift as u64) as u32;
        if tz > 0 {
            self.num >>= tz as usize;
            self.shift -= tz;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.shift == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.shift == 0 {
            self.num.to_i64()
        } else {
            None
        }
    }

    /// Multiply by `2^{-k}`.
    pub fn halve(&self, k: u32) -> Dyadic {
        Dyadic::new(self.num.clone(), self.shift + k)
    }

    /// Multiply by `2^k`.
    pub fn double(&self, k: u32) -> Dyadic {
        if k <= self.shift {
            Dyadic { num: self.num.clone(), shift: self.shift - k }
        } else {
            Dyadic { num: &self.num << (k - self.shift) as usize, shift: 0 }
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::one() << self.shift as usize)
    }

    /// Exact conversion of a rational with power-of-two denominator.
    pub fn from_rational(r: &BigRational) -> Option<Dyadic> {
        let d = r.denom();
        let tz = d.trailing_zeros().unwrap_or(0);
        if (d >> tz as usize).is_one() {
            Some(Dyadic::new(r.numer().clone(), tz as u32))
        } else {
            None
        }
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        match self.shift.cmp(&other.shift) {
            Ordering::Equal => (self.num.clone(), other.num.clone(), self.shift),
            Ordering::Less => {
                (&self.num << (other.shift - self.shift) as usize, other.num.clone(), other.shift)
            }
            Ordering::Greater => {
                (self.num.clone(), &other.num << (self.shift - other.shift) as usize, self.shift)
            }
        }
    }

    /// JSON spelling `"<int>/2^<k>"`.
    pub fn to_json_string(&self) -> String {
        format!("{}/2^{}", self.num, self.shift)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Dyadic {
        Dyadic::from_i64(v)
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.shift == rhs.shift {
            return Dyadic::new(&self.num + &rhs.num, self.shift);
        }
        let (a, b, s) = self.aligned(rhs);
        Dyadic::new(a + b, s)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, s) = self.aligned(rhs);
        Dyadic::new(a - b, s)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        let num = &self.num * &rhs.num;
        if self.shift == 0 && rhs.shift == 0 {
            return Dyadic { num, shift: 0 };
        }
        Dyadic::new(num, self.shift + rhs.shift)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, shift: self.shift }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, shift: self.shift }
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        if self.shift == rhs.shift {
            self.num += &rhs.num;
            self.reduce();
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Dyadic> for Dyadic {
    fn sub_assign(&mut self, rhs: &Dyadic) {
        if self.shift == rhs.shift {
            self.num -= &rhs.num;
            self.reduce();
        } else {
            *self = &*self - rhs;
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.shift as usize)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;
    /// Accepts `"n"`, `"n/2^k"` and `"n/d"` with `d` a power of two.
    fn from_str(s: &str) -> Result<Dyadic> {
        let bad = || Error::Parse(format!("bad dyadic {s:?}"));
        let s = s.trim();
        let (n, rest) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: BigInt = n.trim().parse().map_err(|_| bad())?;
        let shift = match rest {
            None => 0,
            Some(d) => {
                if let Some(k) = d.trim().strip_prefix("2^") {
                    k.parse::<u32>().map_err(|_| bad())?
                } else {
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    let tz = d.trailing_zeros().ok_or_else(bad)?;
                    if !(&d >> tz as usize).is_one() || d.is_negative() {
                        return Err(bad());
                    }
                    tz as u32
                }
            }
        };
        Ok(Dyadic::new(num, shift))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_stays_reduced() {
        let a = Dyadic::half_pow(1);
        let b = &a + &a;
        assert!(b.is_one());
        assert_eq!((&b - &a).to_json_string(), "1/2^1");
        assert_eq!(&a * &Dyadic::from_i64(4), Dyadic::from_i64(2));
        assert_eq!(Dyadic::from_i64(6).halve(2).to_string(), "3/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0/2^0", "-3/2^2", "5/2^0", "7/2^5"] {
            let d: Dyadic = s.parse().unwrap();
            assert_eq!(d.to_json_string(), s);
        }
        assert_eq!("6/4".parse::<Dyadic>().unwrap().to_string(), "3/2");
        assert!("1/3".parse::<Dyadic>().is_err());
    }

    #[test]
    fn rational_conversion() {
        let r = BigRational::new(BigInt::from(-5), BigInt::from(8));
        let d = Dyadic::from_rational(&r).unwrap();
        assert_eq!(d.to_rational(), r);
        assert!(Dyadic::from_rational(&BigRational::new(1.into(), 6.into())).is_none());
    }
}
