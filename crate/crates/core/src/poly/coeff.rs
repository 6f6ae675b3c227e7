//! Coefficient fields.
//!
//! [`Rational`] is the authoritative arithmetic. It keeps numerator and
//! denominator in machine words while they fit and promotes to
//! [`BigRational`] otherwise, so results are always exact. [`Fp`] is the
//! prime field of order 32003, used only as a fast cross-check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// True when the printed form starts with a minus sign.
    fn is_negative(&self) -> bool;
}

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::Small { num: 0, den: 1 };
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs());
        let mut n = num / g as i128;
        let mut d = den / g as i128;
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic already normalizes.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn numer_denom_strings(&self) -> (String, String) {
        match self {
            Rational::Small { num, den } => (num.to_string(), den.to_string()),
            Rational::Big(b) => (b.numer().to_string(), b.denom().to_string()),
        }
    }

    fn binop(
        &self,
        other: &Self,
        small: impl Fn(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) =
            (self, other)
        {
            if let Some((n, dd)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Self::from_i128(n, dd);
            }
        }
        Self::from_big(big(self.to_big(), other.to_big()))
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::Small { num: 0, den: 1 }
    }

    fn one() -> Self {
        Rational::Small { num: 1, den: 1 }
    }

    fn from_i64(v: i64) -> Self {
        Rational::Small { num: v, den: 1 }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    fn add(&self, other: &Self) -> Self {
        self.binop(
            other,
            |a, b, c, d| {
                if b == d {
                    return Some((a + c, b));
                }
                let n = a.checked_mul(d)?.checked_add(c.checked_mul(b)?)?;
                Some((n, b.checked_mul(d)?))
            },
            |x, y| x + y,
        )
    }

    fn sub(&self, other: &Self) -> Self {
        self.binop(
            other,
            |a, b, c, d| {
                if b == d {
                    return Some((a - c, b));
                }
                let n = a.checked_mul(d)?.checked_sub(c.checked_mul(b)?)?;
                Some((n, b.checked_mul(d)?))
            },
            |x, y| x - y,
        )
    }

    fn mul(&self, other: &Self) -> Self {
        self.binop(
            other,
            |a, b, c, d| Some((a.checked_mul(c)?, b.checked_mul(d)?)),
            |x, y| x * y,
        )
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small { num, den } if *num != i64::MIN => Rational::Small {
                num: -num,
                den: *den,
            },
            _ => Self::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Rational::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Rational::Small { num, .. } => *num < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.numer_denom_strings();
        if d == "1" {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        };
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                BigRational::new(parse_int(n)?, d)
            }
            None => BigRational::from_integer(parse_int(s)?),
        };
        Ok(Self::from_big(r))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_i64(v)
    }
}

pub const FP_MODULUS: u32 = 32003;

/// Element of the prime field with 32003 elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u32);

impl Fp {
    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Fp {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let p = FP_MODULUS as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }

    /// Reduces a rational modulo 32003; `None` when the denominator vanishes.
    pub fn from_rational(r: &Rational) -> Option<Fp> {
        let big = r.to_big();
        let p = BigInt::from(FP_MODULUS);
        let n = big.numer().mod_floor(&p).to_u32().unwrap();
        let d = big.denom().mod_floor(&p).to_u32().unwrap();
        if d == 0 {
            return None;
        }
        Some(Fp(n).mul(&Fp(d).inv()))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(FP_MODULUS as i64) as u32)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % FP_MODULUS)
    }

    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + FP_MODULUS - other.0) % FP_MODULUS)
    }

    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 * other.0 as u64) % FP_MODULUS as u64) as u32)
    }

    fn neg(&self) -> Self {
        Fp((FP_MODULUS - self.0) % FP_MODULUS)
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(FP_MODULUS - 2)
    }

    fn is_negative(&self) -> bool {
        false
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}mod{}", self.0, FP_MODULUS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn promotes_on_overflow() {
        let a = Rational::from_i64(i64::MAX);
        let b = a.add(&a);
        assert!(matches!(b, Rational::Big(_)));
        let c = b.sub(&a);
        assert_eq!(c, a);
        assert!(matches!(c, Rational::Small { .. }));
        assert_eq!(Rational::from_i64(i64::MIN).neg().to_big(), -big(i64::MIN, 1));
    }

    #[test]
    fn parse_and_print() {
        let r: Rational = "-6/4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("7".parse::<Rational>().unwrap().to_string(), "7");
        assert!("1/0".parse::<Rational>().is_err());
        let huge: Rational = "123456789012345678901234567891/7".parse().unwrap();
        assert_eq!(huge.to_string(), "123456789012345678901234567891/7");
    }

    #[test]
    fn prime_field() {
        let a = Fp::from_i64(-1);
        assert_eq!(a.value(), FP_MODULUS - 1);
        assert!(a.mul(&a).is_one());
        let b = Fp::from_i64(12345);
        assert!(b.mul(&b.inv()).is_one());
        assert_eq!(Fp::from_rational(&Rational::new(1, 2)).unwrap().add(&Fp::from_rational(&Rational::new(1, 2)).unwrap()), Fp::one());
        assert_eq!(Fp::from_rational(&Rational::new(1, FP_MODULUS as i64)), None);
    }

    proptest! {
        #[test]
        fn matches_bigrational(a in -1i64<<40..1i64<<40, b in 1i64..1<<30, c in i64::MIN/2..i64::MAX/2, d in 1i64..i64::MAX) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.add(&y).to_big(), big(a, b) + big(c, d));
            prop_assert_eq!(x.sub(&y).to_big(), big(a, b) - big(c, d));
            prop_assert_eq!(x.mul(&y).to_big(), big(a, b) * big(c, d));
            if c != 0 {
                prop_assert_eq!(x.div(&y).to_big(), big(a, b) / big(c, d));
            }
        }
    }
}
