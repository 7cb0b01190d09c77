use std::fmt;

use serde::{Serialize, Serializer};

use super::{FieldContext, Scalar, ScalarError};

/// A univariate polynomial in `t`, stored low degree first.
///
/// Trailing exact zeros are always stripped; context-dependent trimming of
/// near-zero coefficients happens through [`UniPoly::trim`].
#[derive(Clone, Debug, PartialEq, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// `c · t^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn t_pow(k: usize) -> Self {
        Self::monomial(Scalar::one(), k)
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = UniPoly { coeffs };
        p.strip();
        p
    }

    fn strip(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_exact_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least degree with a nonzero coefficient; `None` stands for +∞ (zero polynomial).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_exact_zero())
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// True when the polynomial is `c · t^k` for a single term.
    pub fn is_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len(),
            None => false,
        }
    }

    /// True when the polynomial is exactly `t^k`.
    pub fn is_t_power(&self) -> bool {
        self.is_monomial() && self.coeffs.last().is_some_and(Scalar::is_one)
    }

    /// Replaces coefficients that are zero under `ctx` by exact zeros and
    /// returns the largest discarded modulus (0 when nothing was trimmed).
    pub fn trim(&mut self, ctx: &FieldContext) -> f64 {
        if ctx.is_exact() {
            return 0.0;
        }
        let mut dropped = 0.0f64;
        for c in self.coeffs.iter_mut() {
            if !c.is_exact_zero() && ctx.is_zero(c) {
                dropped = dropped.max(c.modulus());
                *c = Scalar::zero();
            }
        }
        self.strip();
        dropped
    }

    pub fn max_modulus(&self) -> f64 {
        self.coeffs.iter().map(Scalar::modulus).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn eval(&self, z: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Exact division by `t^k`.
    pub fn div_t_pow(&self, k: usize) -> Result<Self, ScalarError> {
        match self.valuation() {
            None => Ok(Self::zero()),
            Some(v) if v >= k => Ok(UniPoly { coeffs: self.coeffs[k..].to_vec() }),
            Some(v) => Err(ScalarError::InexactDivision { valuation: v, divisor_power: k }),
        }
    }

    /// Splits into `(low, high)` with `self = low + t^k · high` and `deg low < k`.
    pub fn split_at(&self, k: usize) -> (Self, Self) {
        if self.coeffs.len() <= k {
            return (self.clone(), Self::zero());
        }
        (Self::from_coeffs(self.coeffs[..k].to_vec()), Self::from_coeffs(self.coeffs[k..].to_vec()))
    }

    /// Euclidean division by a nonzero divisor: `self = q · d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly, ctx: &FieldContext) -> Result<(Self, Self), ScalarError> {
        let dd = d.degree().ok_or(ScalarError::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv(ctx)?;
        // Monomial divisors reduce to a split, which keeps the remainder exact.
        if d.is_monomial() {
            let (low, high) = self.split_at(dd);
            return Ok((high.scale(&lead_inv), low));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * dc);
            }
            rem.pop();
            quot[shift] = c;
        }
        let mut r = UniPoly::from_coeffs(rem);
        r.trim(ctx);
        Ok((UniPoly::from_coeffs(quot), r))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, ctx: &FieldContext) -> Result<Self, ScalarError> {
        let lc = self.leading_coeff().ok_or(ScalarError::DivisionByZero)?;
        Ok(self.scale(&lc.inv(ctx)?))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_int(k as i64)).collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_exact_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    /// Coefficientwise closeness: every coefficient of `self - other` is zero under `ctx`
    /// at the scale of the larger operand.
    pub fn approx_eq(&self, other: &UniPoly, ctx: &FieldContext) -> bool {
        let scale = self.max_modulus().max(other.max_modulus());
        let diff = self.sub(other);
        diff.coeffs.iter().all(|c| ctx.is_negligible(c, scale))
    }

    /// Renders with `var` as the indeterminate, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_exact_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            out.push_str(&join_term(&out, c, &mono));
        }
        out
    }
}

/// Appends `c·mono` to an existing sum rendering, handling signs and unit coefficients.
pub(crate) fn join_term(sofar: &str, c: &Scalar, mono: &str) -> String {
    let txt = c.to_string();
    let compound = txt.contains(" + ") || txt.contains(" - ");
    let (neg, abs) = if !compound && txt.starts_with('-') { (true, txt[1..].to_string()) } else { (false, txt) };
    let body = if mono.is_empty() {
        if compound { format!("({abs})") } else { abs }
    } else if abs == "1" {
        mono.to_string()
    } else if compound {
        format!("({abs})*{mono}")
    } else {
        format!("{abs}*{mono}")
    };
    match (sofar.is_empty(), neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// Serialized as the coefficient list, lowest degree first.
impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn valuation_and_splitting() {
        // t^3 + 2 t^5
        let a = p(&[0, 0, 0, 1, 0, 2]);
        assert_eq!(a.valuation(), Some(3));
        assert_eq!(UniPoly::zero().valuation(), None);
        // t^2 + t^4 divided by t^2
        assert_eq!(p(&[0, 0, 1, 0, 1]).div_t_pow(2).unwrap(), p(&[1, 0, 1]));
        assert!(matches!(p(&[0, 1]).div_t_pow(2), Err(ScalarError::InexactDivision { .. })));
        // t^2 - t + 1 at t = 1
        assert_eq!(p(&[1, -1, 1]).eval(&Scalar::one()), Scalar::one());
    }

    #[test]
    fn div_rem_general_divisor() {
        let ctx = FieldContext::exact();
        let num = p(&[3, 14, 16]);
        let den = p(&[1, 2]);
        let (q, r) = num.div_rem(&den, &ctx).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&den), num);
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 0, 1]), &ctx).unwrap();
        assert_eq!((q, r), (p(&[1]), p(&[1])));
    }

    #[test]
    fn trim_reports_discarded_magnitude() {
        let ctx = FieldContext::approx(1e-9);
        let mut a = UniPoly::from_coeffs(vec![Scalar::approx(1e-12, 0.0), Scalar::approx(1.0, 0.0), Scalar::approx(3e-11, 0.0)]);
        let dropped = a.trim(&ctx);
        assert!((dropped - 3e-11).abs() < 1e-20);
        assert_eq!(a.valuation(), Some(1));
        assert_eq!(a.degree(), Some(1));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[0, 2]).to_string(), "2*t");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(|cs| p(&cs))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), z in -4i64..4) {
            let z = Scalar::from_int(z);
            prop_assert_eq!(a.mul(&b).eval(&z), &a.eval(&z) * &b.eval(&z));
            prop_assert_eq!(a.add(&b).eval(&z), &a.eval(&z) + &b.eval(&z));
        }

        #[test]
        fn valuation_is_additive(a in small_poly(), b in small_poly(), s in 1i64..7) {
            if let (Some(va), Some(vb)) = (a.valuation(), b.valuation()) {
                prop_assert_eq!(a.mul(&b).valuation(), Some(va + vb));
            }
            prop_assert_eq!(a.scale(&Scalar::from_int(s)).valuation(), a.valuation());
        }
    }
}
