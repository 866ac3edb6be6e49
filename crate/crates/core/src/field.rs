//! Exact coefficient fields: the rationals and simple extensions `Q[s]/(m(s))`.
//!
//! A [`FieldSpec`] is the arithmetic context; [`FieldElement`] values are plain data in
//! canonical form (reduced rationals, one coefficient per power of `s` below the degree).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

pub type Rational = BigRational;

/// Name of the extension generator in text input and output.
pub const GENERATOR: &str = "s";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// `Q[s]/(modulus)`; `modulus` holds coefficients from the constant term upward and is monic.
    Extension { modulus: Vec<Rational> },
}

/// Canonical element of a [`FieldSpec`]: exactly `degree` reduced rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Builds `Q[s]/(modulus)` from coefficients listed constant term first.
    pub fn extension(modulus: Vec<Rational>) -> Result<Self> {
        let modulus = upoly::trim(modulus);
        if modulus.len() < 2 {
            return Err(AlgebraError::InvalidModulus(
                "modulus must have degree at least 1".into(),
            ));
        }
        if !modulus.last().unwrap().is_one() {
            return Err(AlgebraError::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.len() <= 4 {
            if let Some(root) = upoly::rational_root(&modulus) {
                return Err(AlgebraError::InvalidModulus(format!(
                    "modulus has rational root {root}"
                )));
            }
        }
        Ok(FieldSpec::Extension { modulus })
    }

    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Rationals => 1,
            FieldSpec::Extension { modulus } => modulus.len() - 1,
        }
    }

    pub fn modulus(&self) -> Option<&[Rational]> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Extension { modulus } => Some(modulus),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = r;
        FieldElement { coeffs }
    }

    /// The class of `s`. Over the rationals there is no generator.
    pub fn generator(&self) -> Option<FieldElement> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Extension { .. } => Some(self.from_coeffs(vec![Rational::zero(), Rational::one()])),
        }
    }

    /// Reduces an arbitrary-length coefficient list (constant term first) into canonical form.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> FieldElement {
        let mut coeffs = match self {
            FieldSpec::Rationals => {
                let mut it = coeffs.into_iter();
                let c = it.next().unwrap_or_else(Rational::zero);
                assert!(
                    it.all(|x| x.is_zero()),
                    "nonzero power of the generator over Q"
                );
                vec![c]
            }
            FieldSpec::Extension { modulus } => upoly::rem_monic(coeffs, modulus),
        };
        coeffs.resize(self.degree(), Rational::zero());
        FieldElement { coeffs }
    }

    /// Canonicalizes raw `(numerator, denominator)` pairs, constant term first.
    pub fn canonicalize(&self, raw: &[(i64, i64)]) -> Result<FieldElement> {
        let mut coeffs = Vec::with_capacity(raw.len());
        for &(n, d) in raw {
            if d == 0 {
                return Err(AlgebraError::ZeroDenominator);
            }
            coeffs.push(Rational::new(BigInt::from(n), BigInt::from(d)));
        }
        if matches!(self, FieldSpec::Rationals) && coeffs.len() > 1 {
            return Err(AlgebraError::DimensionMismatch(
                "rational element given with generator coefficients".into(),
            ));
        }
        Ok(self.from_coeffs(coeffs))
    }

    /// Re-canonicalizes an element (idempotent on canonical input).
    pub fn canonicalize_element(&self, a: &FieldElement) -> Result<FieldElement> {
        if matches!(self, FieldSpec::Rationals) && a.coeffs.len() > 1 {
            return Err(AlgebraError::DimensionMismatch(format!(
                "element of length {} over Q",
                a.coeffs.len()
            )));
        }
        Ok(self.from_coeffs(a.coeffs.clone()))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            },
            FieldSpec::Extension { .. } => {
                if let Some(r) = b.as_rational() {
                    return FieldElement {
                        coeffs: a.coeffs.iter().map(|x| x * r).collect(),
                    };
                }
                if let Some(r) = a.as_rational() {
                    return FieldElement {
                        coeffs: b.coeffs.iter().map(|x| x * r).collect(),
                    };
                }
                self.from_coeffs(upoly::mul(&a.coeffs, &b.coeffs))
            }
        }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u32) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Multiplicative inverse; in an extension this runs extended Euclid against the modulus.
    pub fn invert(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(FieldElement {
                coeffs: vec![a.coeffs[0].recip()],
            }),
            FieldSpec::Extension { modulus } => {
                if let Some(r) = a.as_rational() {
                    return Ok(self.from_rational(r.recip()));
                }
                let (g, u) = upoly::gcdext(upoly::trim(a.coeffs.clone()), modulus.clone());
                if g.len() > 1 {
                    return Err(AlgebraError::ReducibleModulus(upoly::display(&g)));
                }
                let scale = g[0].recip();
                Ok(self.from_coeffs(u.into_iter().map(|c| c * &scale).collect()))
            }
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.invert(b)?))
    }

    /// Text form: `p/q` over Q, a polynomial in `s` (ascending powers) in an extension.
    pub fn format(&self, a: &FieldElement) -> String {
        let mut out = String::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match i {
                0 => out.push_str(&format_rational(&mag)),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&format_rational(&mag));
                        out.push('*');
                    }
                    out.push_str(GENERATOR);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Number of nonzero coefficients, used when deciding whether printing needs parentheses.
    pub fn term_count(&self, a: &FieldElement) -> usize {
        a.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Extension { modulus } => {
                write!(f, "Q[{GENERATOR}]/({})", upoly::display(modulus))
            }
        }
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense univariate polynomials over Q, constant term first, trailing zeros trimmed.
pub(crate) mod upoly {
    use super::*;

    pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let zero = Rational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Quotient and remainder of `a` by nonzero `b`.
    pub fn divrem(a: Vec<Rational>, b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = trim(a);
        let db = b.len() - 1;
        let lead_inv = b[db].recip();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] -= &c * bj;
            }
            q[shift] = c;
            r.pop();
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem_monic(a: Vec<Rational>, m: &[Rational]) -> Vec<Rational> {
        divrem(a, m).1
    }

    /// Returns `(g, u)` with `g = gcd(a, m)` and `u * a ≡ g (mod m)`.
    pub fn gcdext(a: Vec<Rational>, m: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
        let (mut r0, mut r1) = (a, m);
        let (mut u0, mut u1) = (vec![Rational::one()], Vec::new());
        while !r1.is_empty() {
            let (q, r) = divrem(r0, &r1);
            let u = sub(&u0, &mul(&q, &u1));
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u);
        }
        (r0, u0)
    }

    fn eval(p: &[Rational], x: &Rational) -> Rational {
        p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
        let n = n.abs().to_u64()?;
        if n > 1_000_000_000_000 {
            return None;
        }
        let mut out = Vec::new();
        let mut d = 1u64;
        while d * d <= n {
            if n % d == 0 {
                out.push(BigInt::from(d));
                if d * d != n {
                    out.push(BigInt::from(n / d));
                }
            }
            d += 1;
        }
        Some(out)
    }

    /// A rational root by the rational root test, skipped when coefficients are too large.
    pub fn rational_root(p: &[Rational]) -> Option<Rational> {
        if p[0].is_zero() {
            return Some(Rational::zero());
        }
        let lcm = p
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
        let nums = divisors(&ints[0])?;
        let dens = divisors(ints.last().unwrap())?;
        for n in &nums {
            for d in &dens {
                for sign in [1, -1] {
                    let cand = Rational::new(n * sign, d.clone());
                    if eval(p, &cand).is_zero() {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }

    pub fn display(p: &[Rational]) -> String {
        let mut out = String::new();
        for (i, c) in p.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if i == 0 || !mag.is_one() {
                out.push_str(&format_rational(&mag));
                if i > 0 {
                    out.push('*');
                }
            }
            if i > 0 {
                out.push_str(GENERATOR);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
