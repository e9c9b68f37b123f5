//! Exact arithmetic for virtual classes that are polynomials in the Lefschetz
//! motive `q = [C]`.
//!
//! [`QPolynomial`] stores dense ascending coefficients with no trailing zeros,
//! so structural equality is polynomial equality. Rational factors only enter
//! through [`QPolynomial::scale`], which refuses to truncate.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The Lefschetz motive itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_u64(&self, at: u64) -> BigInt {
        self.eval(&BigInt::from(at))
    }

    pub fn scale_int(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self::from_coeffs(self.coeffs.iter().map(|c| c * &k).collect())
    }

    /// Multiplies by a rational scalar. Every resulting coefficient must be an
    /// integer, otherwise the formula that produced the input is wrong.
    pub fn scale(&self, s: &RationalScalar) -> Result<Self> {
        let num = s.numerator();
        let den = s.denominator();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quot, rem) = (c * num).div_rem(den);
            if !rem.is_zero() {
                return Err(Error::NonIntegralScale {
                    scalar: s.to_string(),
                    poly: self.to_string(),
                });
            }
            out.push(quot);
        }
        Ok(Self::from_coeffs(out))
    }

    /// LaTeX rendering in descending powers, e.g. `3q^{2} - 3q`.
    pub fn to_latex(&self) -> String {
        self.render(
            |k| match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{{{k}}}"),
            },
            "",
        )
    }

    /// Ascending coefficients as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected an array of coefficients".into()))?;
        let mut coeffs = Vec::with_capacity(items.len());
        for item in items {
            let text = match item {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            let c = text
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
            coeffs.push(c);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Ascending coefficients joined by `;` (the CSV coefficient field).
    pub fn to_semicolon_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }

    fn render(&self, power: impl Fn(usize) -> String, times: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let var = power(k);
            if var.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{abs}{times}{var}"));
            }
        }
        out
    }
}

/// Human rendering in descending powers, e.g. `3*q^2 - 3*q`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |k| match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            },
            "*",
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl From<i64> for QPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for QPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: &QPolynomial) -> QPolynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QPolynomial> for &'a QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: i64) -> QPolynomial {
                (&self).$method(&QPolynomial::from(rhs))
            }
        }
        impl $trait<i64> for &QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: i64) -> QPolynomial {
                self.$method(&QPolynomial::from(rhs))
            }
        }
        impl $trait<QPolynomial> for i64 {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                (&QPolynomial::from(self)).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QPolynomial> for i64 {
            type Output = QPolynomial;
            fn $method(self, rhs: &QPolynomial) -> QPolynomial {
                (&QPolynomial::from(self)).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QPolynomial> for QPolynomial {
    fn sub_assign(&mut self, rhs: &QPolynomial) {
        *self = &*self - rhs;
    }
}

impl Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a QPolynomial> for QPolynomial {
    fn sum<I: Iterator<Item = &'a QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

/// Reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalScalar(BigRational);

impl RationalScalar {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Self(BigRational::new(num.into(), den))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Class of a variety with a `Z2`-action, split as `[X]+ = [X/Z2]` and
/// `[X]- = [X] - [X]+`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivariantClass {
    pub plus: QPolynomial,
    pub minus: QPolynomial,
}

impl EquivariantClass {
    pub fn new(plus: QPolynomial, minus: QPolynomial) -> Self {
        Self { plus, minus }
    }

    /// A point with trivial action.
    pub fn point() -> Self {
        Self::new(QPolynomial::one(), QPolynomial::zero())
    }

    pub fn total(&self) -> QPolynomial {
        &self.plus + &self.minus
    }

    /// Class of `X x Y` under the diagonal action:
    /// `[XY]+ = [X]+[Y]+ + [X]-[Y]-`, `[XY]- = [X]+[Y]- + [X]-[Y]+`.
    pub fn product(&self, other: &Self) -> Self {
        Self {
            plus: &self.plus * &other.plus + &self.minus * &other.minus,
            minus: &self.plus * &other.minus + &self.minus * &other.plus,
        }
    }

    /// `(C*)^2 minus the diagonal`, coordinates swapped.
    pub fn torus_off_diagonal() -> Self {
        let q = QPolynomial::q();
        Self::new((&q - 1).pow(2), 1 - q)
    }

    /// `GL2 / (GL1 x GL1)`, columns swapped.
    pub fn gl2_mod_torus() -> Self {
        let q = QPolynomial::q();
        Self::new(q.pow(2), q)
    }
}
