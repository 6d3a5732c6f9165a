use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// The sign ε with i² = ε: `Minus` gives the complex numbers, `Plus` the
/// split-complex (paracomplex) numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Epsilon {
    Minus,
    Plus,
}

impl Epsilon {
    pub const BOTH: [Epsilon; 2] = [Epsilon::Minus, Epsilon::Plus];

    pub fn value(self) -> i8 {
        match self {
            Epsilon::Minus => -1,
            Epsilon::Plus => 1,
        }
    }

    pub fn rational(self) -> Rational {
        int(self.value() as i64)
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            -1 => Ok(Epsilon::Minus),
            1 => Ok(Epsilon::Plus),
            other => Err(Error::InvalidEpsilon(other)),
        }
    }
}

impl From<Epsilon> for i8 {
    fn from(e: Epsilon) -> i8 {
        e.value()
    }
}

impl TryFrom<i8> for Epsilon {
    type Error = Error;
    fn try_from(v: i8) -> Result<Self> {
        Epsilon::from_value(v as i64)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Epsilon::Minus => f.write_str("-1"),
            Epsilon::Plus => f.write_str("+1"),
        }
    }
}

/// `re + im·i` with i² = ε.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EpsComplex {
    pub re: Rational,
    pub im: Rational,
    pub epsilon: Epsilon,
}

impl EpsComplex {
    pub fn new(re: Rational, im: Rational, epsilon: Epsilon) -> Self {
        EpsComplex { re, im, epsilon }
    }

    pub fn real(re: Rational, epsilon: Epsilon) -> Self {
        Self::new(re, Rational::zero(), epsilon)
    }

    pub fn zero(epsilon: Epsilon) -> Self {
        Self::real(Rational::zero(), epsilon)
    }

    /// The imaginary unit i.
    pub fn i(epsilon: Epsilon) -> Self {
        Self::new(Rational::zero(), Rational::one(), epsilon)
    }

    fn same_epsilon(&self, other: &Self) -> Result<()> {
        if self.epsilon == other.epsilon {
            Ok(())
        } else {
            Err(Error::EpsilonMismatch(
                self.epsilon.value(),
                other.epsilon.value(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_epsilon(other)?;
        Ok(Self::new(
            &self.re + &other.re,
            &self.im + &other.im,
            self.epsilon,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_epsilon(other)?;
        Ok(Self::new(
            &self.re - &other.re,
            &self.im - &other.im,
            self.epsilon,
        ))
    }

    /// (a + bi)(c + di) = (ac + ε·bd) + (ad + bc)i.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_epsilon(other)?;
        let eps = self.epsilon.rational();
        Ok(Self::new(
            &self.re * &other.re + eps * &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
            self.epsilon,
        ))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.re * k, &self.im * k, self.epsilon)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im, self.epsilon)
    }

    /// z·z̄ = a² − ε b²: the squared modulus for ε = −1, the hyperbolic
    /// quadratic form a² − b² for ε = +1.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - self.epsilon.rational() * &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for EpsComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}i", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{} {} {}i",
                    format_rational(&self.re),
                    sign,
                    format_rational(&self.im.abs())
                )
            }
        }
    }
}
