use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::{FieldContext, ScalarError};

/// An element of the Gaussian rationals `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussRat { re: BigRational::from_integer(n.into()), im: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussRat { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a ratio of shifted integers for huge numerators/denominators.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn rat_from_f64_decimal(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    // Shortest round-trip representation, read back exactly.
    parse_real(&format!("{x:e}")).ok()
}

/// A field element tagged with the backend it lives on.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(GaussRat),
    Approx(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(GaussRat::from_integer(0))
    }

    pub fn one() -> Self {
        Scalar::Exact(GaussRat::from_integer(1))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::Exact(GaussRat::new(BigRational::zero(), BigRational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(GaussRat::from_integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(GaussRat::new(BigRational::new(num.into(), den.into()), BigRational::zero()))
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact(GaussRat::new(re, im))
    }

    pub fn approx(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Self {
        Scalar::Approx(z)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_exact_zero(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Approx(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.re.is_one() && g.im.is_zero(),
            Scalar::Approx(z) => z.re == 1.0 && z.im == 0.0,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(g) => g.to_complex(),
            Scalar::Approx(z) => *z,
        }
    }

    /// Exact view of the value. Approximate values are read back from their
    /// shortest decimal representation.
    pub fn to_exact(&self) -> Option<GaussRat> {
        match self {
            Scalar::Exact(g) => Some(g.clone()),
            Scalar::Approx(z) => Some(GaussRat::new(rat_from_f64_decimal(z.re)?, rat_from_f64_decimal(z.im)?)),
        }
    }

    /// `|s|` as a float.
    pub fn modulus(&self) -> f64 {
        self.to_complex().norm()
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact(g) => Scalar::Exact(g.conj()),
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    /// `s · conj(s)`.
    pub fn norm(&self) -> Self {
        match self {
            Scalar::Exact(g) => Scalar::Exact(GaussRat::new(g.norm(), BigRational::zero())),
            Scalar::Approx(z) => Scalar::approx(z.norm_sqr(), 0.0),
        }
    }

    /// Multiplicative inverse; zero is decided by `ctx`.
    pub fn inv(&self, ctx: &FieldContext) -> Result<Self, ScalarError> {
        if ctx.is_zero(self) {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            Scalar::Exact(g) => g.inv().map(Scalar::Exact).ok_or(ScalarError::DivisionByZero),
            Scalar::Approx(z) => Ok(Scalar::Approx(z.inv())),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar, ctx: &FieldContext) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv(ctx)?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Principal square root; always lands on the approximate backend unless
    /// the value is an exact perfect square of a non-negative rational.
    pub fn sqrt_approx(&self) -> Self {
        Scalar::Approx(self.to_complex().sqrt())
    }
}

fn combine<F, G>(a: &Scalar, b: &Scalar, exact: F, approx: G) -> Scalar
where
    F: Fn(&GaussRat, &GaussRat) -> GaussRat,
    G: Fn(Complex64, Complex64) -> Complex64,
{
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => Scalar::Exact(exact(x, y)),
        _ => Scalar::Approx(approx(a.to_complex(), b.to_complex())),
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        combine(self, rhs, |x, y| GaussRat::new(&x.re + &y.re, &x.im + &y.im), |x, y| x + y)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        combine(self, rhs, |x, y| GaussRat::new(&x.re - &y.re, &x.im - &y.im), |x, y| x - y)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        combine(
            self,
            rhs,
            |x, y| GaussRat::new(&x.re * &y.re - &x.im * &y.im, &x.re * &y.im + &x.im * &y.re),
            |x, y| x * y,
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(g) => Scalar::Exact(GaussRat::new(-g.re.clone(), -g.im.clone())),
            Scalar::Approx(z) => Scalar::Approx(-z),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

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

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => self.to_complex() == other.to_complex(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Approx(z)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rounds to 12 significant digits for display.
fn round_display(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let digits = 11 - x.abs().log10().floor() as i32;
    if !(0..=300).contains(&digits) {
        return x;
    }
    let scale = 10f64.powi(digits);
    let r = (x * scale).round() / scale;
    if r == 0.0 { 0.0 } else { r }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) => {
                let (re, im) = (&g.re, &g.im);
                if im.is_zero() {
                    return f.write_str(&fmt_rat(re));
                }
                let im_abs = im.abs();
                let im_txt = if im_abs.is_one() { "i".to_string() } else { format!("{}i", fmt_rat(&im_abs)) };
                if re.is_zero() {
                    if im.is_negative() {
                        write!(f, "-{im_txt}")
                    } else {
                        f.write_str(&im_txt)
                    }
                } else {
                    let sign = if im.is_negative() { '-' } else { '+' };
                    write!(f, "{} {sign} {im_txt}", fmt_rat(re))
                }
            }
            Scalar::Approx(z) => {
                // Parts below 1e-12 of the larger one are print noise.
                let cut = 1e-12 * z.re.abs().max(z.im.abs());
                let re = if z.re.abs() <= cut { 0.0 } else { round_display(z.re) };
                let im = if z.im.abs() <= cut { 0.0 } else { round_display(z.im) };
                if im == 0.0 {
                    write!(f, "{}", re)
                } else if re == 0.0 {
                    write!(f, "{}i", im)
                } else {
                    let sign = if im < 0.0 { '-' } else { '+' };
                    write!(f, "{} {sign} {}i", re, im.abs())
                }
            }
        }
    }
}

/// Parses a real rational: integer, `p/q`, or a decimal with optional exponent.
pub(crate) fn parse_real(s: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::Parse(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigRational = parse_real(n)?;
        let d: BigRational = parse_real(d)?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        return Ok(n / d);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(numer);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts forms such as `3`, `-1/2`, `0.25`, `i`, `-2i`, `1/2 - 3/4i`,
    /// `(1+i)`, `2*i`. Always produces an exact value.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        while body.starts_with('(') && body.ends_with(')') {
            body = body[1..body.len() - 1].to_string();
        }
        if body.is_empty() {
            return Err(ScalarError::Parse(s.to_string()));
        }
        // Split on + / - that are not leading and not part of an exponent.
        let bytes: Vec<char> = body.chars().collect();
        let mut terms = Vec::new();
        let mut start = 0;
        for idx in 1..bytes.len() {
            let c = bytes[idx];
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1], 'e' | 'E' | '/' | '*') {
                terms.push(bytes[start..idx].iter().collect::<String>());
                start = idx;
            }
        }
        terms.push(bytes[start..].iter().collect::<String>());

        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, term.strip_prefix('+').unwrap_or(&term).to_string()),
            };
            let (imag, real_txt) = if let Some(r) = body.strip_suffix('i') {
                (true, r.strip_suffix('*').unwrap_or(r).to_string())
            } else if let Some(r) = body.strip_prefix("i*") {
                (true, r.to_string())
            } else {
                (false, body.clone())
            };
            let mut value = if imag && real_txt.is_empty() { BigRational::one() } else { parse_real(&real_txt)? };
            if neg {
                value = -value;
            }
            if imag {
                im += value;
            } else {
                re += value;
            }
        }
        Ok(Scalar::Exact(GaussRat::new(re, im)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        match self {
            Scalar::Exact(g) => {
                map.serialize_entry("re", &fmt_rat(&g.re))?;
                map.serialize_entry("im", &fmt_rat(&g.im))?;
            }
            Scalar::Approx(z) => {
                map.serialize_entry("re", &z.re)?;
                map.serialize_entry("im", &z.im)?;
            }
        }
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Part {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Part {
    fn into_scalar<E: de::Error>(self) -> Result<Scalar, E> {
        match self {
            Part::Int(n) => Ok(Scalar::from_int(n)),
            Part::Float(x) => Ok(Scalar::approx(x, 0.0)),
            Part::Text(s) => s.parse().map_err(|e: ScalarError| E::custom(e.to_string())),
        }
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a number, a scalar string, or an object {\"re\": .., \"im\": ..}")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        i64::try_from(v).map(Scalar::from_int).map_err(|_| E::custom("integer out of range"))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
        Ok(Scalar::approx(v, 0.0))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        v.parse().map_err(|e: ScalarError| E::custom(e.to_string()))
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Scalar, A::Error> {
        let mut re = None;
        let mut im = None;
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "re" => re = Some(map.next_value::<Part>()?.into_scalar()?),
                "im" => im = Some(map.next_value::<Part>()?.into_scalar()?),
                other => return Err(de::Error::unknown_field(other, &["re", "im"])),
            }
        }
        let re = re.unwrap_or_else(Scalar::zero);
        let im = im.unwrap_or_else(Scalar::zero);
        Ok(&re + &(&im * &Scalar::i()))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}
