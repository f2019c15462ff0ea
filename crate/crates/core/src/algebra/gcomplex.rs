//! Gaussian rationals: complex numbers with exact rational parts.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

/// Exact complex number `re + im·i` over the rationals.
///
/// Both parts are `BigRational`, which keeps them in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl GComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GComplex { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GComplex {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a real Gaussian rational. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        GComplex {
            re: BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            im: BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        }
    }

    pub fn i() -> Self {
        GComplex {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GComplex {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, rhs: &GComplex) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = GComplex::one();
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

    pub fn scale(&self, r: &BigRational) -> Self {
        GComplex {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn to_complex64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GComplex {
    fn zero() -> Self {
        GComplex {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GComplex {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl From<BigRational> for GComplex {
    fn from(r: BigRational) -> Self {
        GComplex::real(r)
    }
}

impl From<i64> for GComplex {
    fn from(n: i64) -> Self {
        GComplex::from_int(n)
    }
}

impl<'a> Add<&'a GComplex> for &'a GComplex {
    type Output = GComplex;
    fn add(self, rhs: &GComplex) -> GComplex {
        GComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GComplex> for &'a GComplex {
    type Output = GComplex;
    fn sub(self, rhs: &GComplex) -> GComplex {
        GComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GComplex> for &'a GComplex {
    type Output = GComplex;
    fn mul(self, rhs: &GComplex) -> GComplex {
        GComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GComplex {
    type Output = GComplex;
    fn neg(self) -> GComplex {
        GComplex {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl $imp<GComplex> for GComplex {
            type Output = GComplex;
            fn $method(self, rhs: GComplex) -> GComplex {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a GComplex> for GComplex {
            type Output = GComplex;
            fn $method(self, rhs: &GComplex) -> GComplex {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GComplex {
    type Output = GComplex;
    fn neg(self) -> GComplex {
        GComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Panics on division by zero, like the integer operators; use
/// [`GComplex::checked_div`] where the divisor may vanish.
impl Div<GComplex> for GComplex {
    type Output = GComplex;
    fn div(self, rhs: GComplex) -> GComplex {
        self.checked_div(&rhs).expect("division by zero Gaussian rational")
    }
}

impl AddAssign<&GComplex> for GComplex {
    fn add_assign(&mut self, rhs: &GComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GComplex> for GComplex {
    fn sub_assign(&mut self, rhs: &GComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GComplex> for GComplex {
    fn mul_assign(&mut self, rhs: &GComplex) {
        *self = &*self * rhs;
    }
}

impl Sum for GComplex {
    fn sum<I: Iterator<Item = GComplex>>(iter: I) -> Self {
        iter.fold(GComplex::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for GComplex {
    fn product<I: Iterator<Item = GComplex>>(iter: I) -> Self {
        iter.fold(GComplex::one(), |acc, x| acc * x)
    }
}

/// Formats as `"-3/4"`, `"2/3i"`, `"1/2+2/3i"` or `"1-1i"`.
impl fmt::Display for GComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("not a rational literal: {s:?}"))?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(format!("signed denominator in {s:?}"));
            }
            d.parse()
                .map_err(|_| format!("not a rational literal: {s:?}"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// Parses the `Display` form back, plus the loose forms `"1+0i"`, `"i"` and
/// an optional pair of enclosing parentheses.
impl FromStr for GComplex {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |msg: String| ParseError::new(0, msg);
        let mut s = text.trim();
        if s.starts_with('(') && s.ends_with(')') {
            s = s[1..s.len() - 1].trim();
        }
        if s.is_empty() {
            return Err(err("empty Gaussian rational".into()));
        }
        if !s.ends_with('i') {
            return parse_rational(s).map(GComplex::real).map_err(err);
        }
        let body = &s[..s.len() - 1];
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i]).map_err(err)?, &body[i..]),
            None => (BigRational::zero(), body),
        };
        let im = match im.trim() {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other)).map_err(err)?,
        };
        Ok(GComplex { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(GComplex::ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(GComplex::from_parts((1, 2), (2, 3)).to_string(), "1/2+2/3i");
        assert_eq!(GComplex::from_parts((1, 1), (-1, 1)).to_string(), "1-1i");
        assert_eq!(GComplex::i().to_string(), "1i");
        assert_eq!(GComplex::zero().to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        let p = |s: &str| s.parse::<GComplex>().unwrap();
        assert_eq!(p("1+0i"), GComplex::one());
        assert_eq!(p("(0+1i)"), GComplex::i());
        assert_eq!(p("i"), GComplex::i());
        assert_eq!(p("-i"), -GComplex::i());
        assert_eq!(p("-3/4"), GComplex::ratio(-3, 4));
        assert_eq!(p("1/2-2/3i"), GComplex::from_parts((1, 2), (-2, 3)));
        assert_eq!(p("-1/2-2/3i"), GComplex::from_parts((-1, 2), (-2, 3)));
        assert!("1/0".parse::<GComplex>().is_err());
        assert!("1.5".parse::<GComplex>().is_err());
        assert!("".parse::<GComplex>().is_err());
    }

    #[test]
    fn division_and_inverse() {
        let z = GComplex::from_parts((3, 1), (4, 1));
        let inv = z.inv().unwrap();
        assert_eq!(&z * &inv, GComplex::one());
        assert_eq!(inv, GComplex::from_parts((3, 25), (-4, 25)));
        assert!(GComplex::zero().inv().is_none());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let z = GComplex::from_parts((1, 2), (-1, 3));
        let mut acc = GComplex::one();
        for e in 0..7 {
            assert_eq!(z.pow(e), acc);
            acc = &acc * &z;
        }
    }
}
