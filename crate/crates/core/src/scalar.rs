//! Exact arithmetic in the quadratic field Q(sqrt(d)).
//!
//! Every coefficient in the kernel is a `Scalar`, a pair of arbitrary-precision
//! rationals `rat + irr*sqrt(d)` for a fixed positive square-free `d` (3 by
//! default, which is where the su(3) example lives; the other examples stay in
//! the rational part). Values are canonical: `num-rational` keeps fractions
//! reduced with positive denominators, so equality is field-wise comparison.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Default discriminant; sqrt(3) is needed by the su(3) example.
pub const DEFAULT_D: u32 = 3;

/// The ambient quadratic field, fixed once per computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadField {
    pub d: u32,
}

impl QuadField {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Invalid("field parameter d must be positive".into()));
        }
        if !is_square_free(d) {
            return Err(Error::Invalid(format!(
                "field parameter d = {d} must be square-free"
            )));
        }
        Ok(QuadField { d })
    }

    pub fn rational(&self, num: i64, den: i64) -> Scalar {
        Scalar::rational(num, den).with_d(self.d)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        Scalar::from_int(n).with_d(self.d)
    }

    /// sqrt(d) itself.
    pub fn root(&self) -> Scalar {
        Scalar {
            rat: BigRational::zero(),
            irr: BigRational::one(),
            d: self.d,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }
}

fn is_square_free(mut n: u32) -> bool {
    let mut p = 2u32;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

/// An element `rat + irr*sqrt(d)` of Q(sqrt(d)).
///
/// `d = 0` marks a purely rational value with no field attached yet; binary
/// operations unify the discriminants and panic on a genuine mismatch, which
/// would mean two different fields leaked into one computation.
#[derive(Debug, Clone)]
pub struct Scalar {
    rat: BigRational,
    irr: BigRational,
    d: u32,
}

impl Scalar {
    pub fn new(rat: BigRational, irr: BigRational, d: u32) -> Self {
        debug_assert!(irr.is_zero() || d > 0, "irrational part requires a field");
        Scalar { rat, irr, d }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            rat: BigRational::from_integer(BigInt::from(n)),
            irr: BigRational::zero(),
            d: 0,
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            rat: BigRational::new(BigInt::from(num), BigInt::from(den)),
            irr: BigRational::zero(),
            d: 0,
        }
    }

    fn with_d(mut self, d: u32) -> Self {
        self.d = d;
        self
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr(&self) -> &BigRational {
        &self.irr
    }

    pub fn discriminant(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.irr.is_zero()
    }

    fn join_d(&self, other: &Scalar) -> u32 {
        match (self.d, other.d) {
            (a, b) if a == b => a,
            (0, b) => b,
            (a, 0) => a,
            (a, b) => panic!("mixed quadratic fields: sqrt({a}) vs sqrt({b})"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.irr.is_zero() {
            return Ok(Scalar {
                rat: self.rat.recip(),
                irr: BigRational::zero(),
                d: self.d,
            });
        }
        // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - d b^2); the norm is
        // nonzero because d is not a perfect square.
        let d_rat = BigRational::from_integer(BigInt::from(self.d));
        let norm = &self.rat * &self.rat - &d_rat * &self.irr * &self.irr;
        debug_assert!(!norm.is_zero());
        Ok(Scalar {
            rat: &self.rat / &norm,
            irr: -(&self.irr / &norm),
            d: self.d,
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Absolute height used only to steer pivot choice diagnostics and tests.
    pub fn is_negative_rational(&self) -> bool {
        self.irr.is_zero() && self.rat.is_negative()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.rat == other.rat && self.irr == other.irr
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
            d: self.join_d(rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
            d: self.join_d(rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let d = self.join_d(rhs);
        if self.irr.is_zero() && rhs.irr.is_zero() {
            return Scalar {
                rat: &self.rat * &rhs.rat,
                irr: BigRational::zero(),
                d,
            };
        }
        let d_rat = BigRational::from_integer(BigInt::from(d));
        Scalar {
            rat: &self.rat * &rhs.rat + &d_rat * &self.irr * &rhs.irr,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
            d,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rat: -&self.rat,
            irr: -&self.irr,
            d: self.d,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// The interchange grammar: `RAT`, `RAT r` or `RAT +/- RAT r`, where `r`
    /// stands for sqrt(d).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", fmt_rational(&self.rat));
        }
        if self.rat.is_zero() {
            return write!(f, "{}r", fmt_rational(&self.irr));
        }
        if self.irr.is_negative() {
            write!(
                f,
                "{}-{}r",
                fmt_rational(&self.rat),
                fmt_rational(&(-&self.irr))
            )
        } else {
            write!(
                f,
                "{}+{}r",
                fmt_rational(&self.rat),
                fmt_rational(&self.irr)
            )
        }
    }
}

/// Parses the scalar grammar `RAT | RAT "r" | RAT ("+"|"-") RAT "r"` with
/// `RAT ::= ["-"] int ["/" posint]`.
pub fn parse_scalar(text: &str, d: u32) -> Result<Scalar> {
    let s = text.trim();
    let bytes = s.as_bytes();
    let mut pos = 0usize;

    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };

    fn parse_rat(bytes: &[u8], pos: &mut usize, signed: bool) -> Result<BigRational> {
        let start = *pos;
        let mut negative = false;
        if signed && *pos < bytes.len() && bytes[*pos] == b'-' {
            negative = true;
            *pos += 1;
        }
        let num_start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == num_start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected integer".into(),
            });
        }
        let numer: BigInt = std::str::from_utf8(&bytes[num_start..*pos])
            .unwrap()
            .parse()
            .unwrap();
        let mut denom = BigInt::one();
        if *pos < bytes.len() && bytes[*pos] == b'/' {
            *pos += 1;
            let den_start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == den_start {
                return Err(Error::Parse {
                    pos: den_start,
                    msg: "expected positive denominator".into(),
                });
            }
            denom = std::str::from_utf8(&bytes[den_start..*pos])
                .unwrap()
                .parse()
                .unwrap();
            if denom.is_zero() {
                return Err(Error::Parse {
                    pos: den_start,
                    msg: "zero denominator".into(),
                });
            }
        }
        let mut value = BigRational::new(numer, denom);
        if negative {
            value = -value;
        }
        Ok(value)
    }

    let first = parse_rat(bytes, &mut pos, true)?;

    if pos == bytes.len() {
        return Ok(Scalar::new(first, BigRational::zero(), 0).with_d(if d > 0 { d } else { 0 }));
    }

    match bytes[pos] {
        b'r' => {
            pos += 1;
            if pos != bytes.len() {
                return Err(err(pos, "trailing input after r"));
            }
            Ok(Scalar::new(BigRational::zero(), first, d))
        }
        b'+' | b'-' => {
            let negative = bytes[pos] == b'-';
            pos += 1;
            let mut second = parse_rat(bytes, &mut pos, true)?;
            if negative {
                second = -second;
            }
            if pos >= bytes.len() || bytes[pos] != b'r' {
                return Err(err(pos, "expected r after irrational part"));
            }
            pos += 1;
            if pos != bytes.len() {
                return Err(err(pos, "trailing input after r"));
            }
            Ok(Scalar::new(first, second, d))
        }
        _ => Err(err(pos, "unexpected character")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> QuadField {
        QuadField::new(3).unwrap()
    }

    #[test]
    fn conjugate_product_is_norm() {
        // (1/2 + (1/2)sqrt3)(1/2 - (1/2)sqrt3) = 1/4 - 3/4 = -1/2
        let field = f();
        let a = &field.rational(1, 2) + &(&field.rational(1, 2) * &field.root());
        let b = &field.rational(1, 2) - &(&field.rational(1, 2) * &field.root());
        assert_eq!(&a * &b, field.rational(-1, 2));
    }

    #[test]
    fn inverse_of_root() {
        // sqrt(3)^-1 = (1/3) sqrt(3)
        let field = f();
        let inv = field.root().inv().unwrap();
        assert_eq!(inv, &field.rational(1, 3) * &field.root());
        assert!((&inv * &field.root()).is_one());
    }

    #[test]
    fn su3_transition_entries_square_to_one() {
        // (sqrt3/2)^2 + (1/2)^2 = 1, the identity behind N_i^2 = -id on su(3)
        let field = f();
        let s = &field.rational(1, 2) * &field.root();
        let h = field.rational(1, 2);
        assert!((&(&s * &s) + &(&h * &h)).is_one());
    }

    #[test]
    fn zero_inverse_rejected() {
        assert_eq!(f().zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_scalar("-1/2", 3).unwrap(), Scalar::rational(-1, 2));
        let half_root = &f().rational(1, 2) * &f().root();
        assert_eq!(parse_scalar("1/2r", 3).unwrap(), half_root);
        assert!(parse_scalar("0", 3).unwrap().is_zero());
        assert_eq!(
            parse_scalar("1/2-1/3r", 3).unwrap(),
            &f().rational(1, 2) - &(&f().rational(1, 3) * &f().root())
        );
        assert!(parse_scalar("1//2", 3).is_err());
        assert!(parse_scalar("1/2x", 3).is_err());
        assert!(parse_scalar("1/0", 3).is_err());
    }

    #[test]
    fn format_then_parse_round_trips() {
        let field = f();
        let vals = [
            field.zero(),
            field.integer(7),
            field.rational(-3, 4),
            field.root(),
            -&field.root(),
            &field.rational(5, 6) + &(&field.rational(-2, 7) * &field.root()),
        ];
        for v in vals {
            let text = v.to_string();
            assert_eq!(parse_scalar(&text, 3).unwrap(), v, "round trip of {text}");
        }
    }

    #[test]
    fn square_free_check() {
        assert!(QuadField::new(3).is_ok());
        assert!(QuadField::new(5).is_ok());
        assert!(QuadField::new(4).is_err());
        assert!(QuadField::new(12).is_err());
        assert!(QuadField::new(0).is_err());
    }
}
