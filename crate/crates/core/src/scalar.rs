//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact element of ℚ(i).
///
/// Both parts are kept as reduced fractions with positive denominators, so
/// structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Returns the value as an integer if it is a real integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        let n = self.norm_sqr();
        Scalar::new(&self.re / &n, -&self.im / &n)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::new(&self.re * &rhs.re, BigRational::zero());
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        if rhs.im.is_zero() {
            assert!(!rhs.re.is_zero(), "division by zero scalar");
            return Scalar::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        self * &rhs.inv()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Text form: `a`, `a/b`, `a/b+c/d*i`, `c/d*i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_abs = fmt_rational(&self.im.abs());
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_abs}*i");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{im_abs}*i", fmt_rational(&self.re))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let valid = |t: &str| {
        let t = t.strip_prefix(['-', '+']).unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) {
        return None;
    }
    let n: BigInt = num.trim_start_matches('+').parse().ok()?;
    let d: BigInt = match den {
        Some(d) if valid(d) => d.trim_start_matches('+').parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            input: s.to_string(),
            position: 0,
            message: "expected a Gaussian rational such as 1/2, -3, or 1/2+3/4*i".into(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        // Split off an imaginary term at the last sign that is not leading.
        if let Some(body) = t.strip_suffix("*i").or_else(|| t.strip_suffix('i')) {
            let split = body
                .char_indices()
                .skip(1)
                .filter(|&(_, c)| c == '+' || c == '-')
                .map(|(k, _)| k)
                .last();
            let (re_part, im_part) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im_part = match im_part {
                "" | "+" => "1",
                "-" => "-1",
                other => other,
            };
            let re = parse_rational(re_part).ok_or_else(err)?;
            let im = parse_rational(im_part).ok_or_else(err)?;
            return Ok(Scalar::new(re, im));
        }
        let re = parse_rational(&t).ok_or_else(err)?;
        Ok(Scalar::new(re, BigRational::zero()))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Scalar::from_int)
                .ok_or_else(|| serde::de::Error::custom("scalars must be integers or strings")),
            _ => Err(serde::de::Error::custom("expected scalar string")),
        }
    }
}

/// Rescales `v` by a positive rational so that every real and imaginary part
/// is an integer and together they have no common factor.
pub fn make_primitive(v: &mut [Scalar]) {
    let parts = || v.iter().flat_map(|x| [x.re(), x.im()]).filter(|q| !q.is_zero());
    let den = parts().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let num = parts().fold(BigInt::zero(), |acc, q| acc.gcd(&(q.numer() * &den / q.denom())));
    if num.is_zero() || (den.is_one() && num.is_one()) {
        return;
    }
    let c = Scalar::new(BigRational::new(den, num), BigRational::zero());
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x * &c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_vectors() {
        let mut v = vec![Scalar::from_frac(2, 3), Scalar::from_parts((0, 1), (4, 9)), Scalar::zero()];
        make_primitive(&mut v);
        assert_eq!(v, vec![Scalar::from_int(3), Scalar::from_parts((0, 1), (2, 1)), Scalar::zero()]);
    }

    #[test]
    fn parses_text_forms() {
        assert_eq!("1/2".parse::<Scalar>().unwrap(), Scalar::from_frac(1, 2));
        assert_eq!("-3".parse::<Scalar>().unwrap(), Scalar::from_int(-3));
        assert_eq!(
            "1/2+3/4*i".parse::<Scalar>().unwrap(),
            Scalar::from_parts((1, 2), (3, 4))
        );
        assert_eq!("-1/2-1*i".parse::<Scalar>().unwrap(), Scalar::from_parts((-1, 2), (-1, 1)));
        assert_eq!("0+1*i".parse::<Scalar>().unwrap(), Scalar::i());
        assert_eq!("-2*i".parse::<Scalar>().unwrap(), Scalar::from_parts((0, 1), (-2, 1)));
        assert_eq!("i".parse::<Scalar>().unwrap(), Scalar::i());
        assert_eq!("4/8".parse::<Scalar>().unwrap().to_string(), "1/2");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "x", "sqrt(2)", "1.5", "1/2+"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn field_operations() {
        let a = Scalar::from_parts((1, 2), (-1, 3));
        let b = Scalar::from_parts((2, 1), (5, 7));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(&a * &a.inv(), Scalar::one());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "-7", "3/5", "1/2+3/4*i", "-1*i", "2-1/3*i"] {
            let x: Scalar = s.parse().unwrap();
            assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
}
