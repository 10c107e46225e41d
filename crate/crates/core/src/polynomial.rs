//! Univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients in ascending degree with trailing zeros trimmed, so the zero
/// polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl TryFrom<PolyJson> for IntPolynomial {
    type Error = Error;

    fn try_from(json: PolyJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| Error::InvalidNumber(c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

impl From<IntPolynomial> for PolyJson {
    fn from(p: IntPolynomial) -> Self {
        PolyJson { coeffs: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

/// One summand of [`IntPolynomial::combine`].
#[derive(Clone, Debug)]
pub struct Term {
    pub scalar: BigInt,
    pub poly: IntPolynomial,
    pub times_x: bool,
}

impl Term {
    pub fn new(scalar: impl Into<BigInt>, poly: IntPolynomial) -> Self {
        Term { scalar: scalar.into(), poly, times_x: false }
    }

    pub fn times_x(scalar: impl Into<BigInt>, poly: IntPolynomial) -> Self {
        Term { scalar: scalar.into(), poly, times_x: true }
    }
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c·x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero past the degree).
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c * j).collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `Σ scalar·(x·)?poly`.
    pub fn combine(terms: &[Term]) -> Self {
        terms.iter().fold(Self::zero(), |acc, t| {
            let scaled = t.poly.scale(&t.scalar);
            acc + if t.times_x { scaled.mul_x() } else { scaled }
        })
    }

    /// The unique polynomial of degree `< points.len()` through the points.
    ///
    /// Works in exact rationals (Newton divided differences) and fails if the
    /// result does not have integer coefficients.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<Self> {
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::DuplicateNode(xi.to_string()));
            }
        }
        let nodes: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
        let mut table: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from_integer(y.clone())).collect();
        let len = points.len();
        for level in 1..len {
            for i in (level..len).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (&nodes[i] - &nodes[i - level]);
            }
        }
        // Expand c_0 + (x-x_0)(c_1 + (x-x_1)(c_2 + …)) from the inside out.
        let mut acc: Vec<BigRational> = Vec::new();
        for i in (0..len).rev() {
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (j, a) in acc.iter().enumerate() {
                next[j + 1] += a;
                next[j] -= a * &nodes[i];
            }
            next[0] += &table[i];
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral { index, value: c.to_string() })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        for (a, b) in long.coeffs.iter_mut().zip(short.coeffs) {
            *a += b;
        }
        Self::from_coeffs(long.coeffs)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        self + (-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| a + b)
    }
}

/// Human-readable form, highest degree first: `2x^3 - 3x + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if j == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}
