//! Projective rationals and minus-convention continued fractions.
//!
//! A continued fraction `[b1, ..., bk]` denotes
//! `1 / (b1 - 1 / (b2 - ... - 1 / bk))`, with the empty sequence equal to
//! `0/1`. Evaluation happens on `Q ∪ {1/0}` so zero coefficients never fail:
//! dividing by zero gives `1/0` and `1/(1/0)` gives `0/1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced pair `m/n` in `Q ∪ {1/0}`.
///
/// The representative is canonical: `gcd(|m|, |n|) = 1` and either `n > 0`
/// or the value is exactly `1/0`. Structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveRational {
    num: BigInt,
    den: BigInt,
}

impl ProjectiveRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn infinity() -> Self {
        Self { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        Self { num: k.into(), den: BigInt::one() }
    }

    // Caller guarantees (num, den) != (0, 0).
    fn canonical(num: BigInt, den: BigInt) -> Self {
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `1 / self`, total on the projective line.
    pub fn recip(&self) -> Self {
        Self::canonical(self.den.clone(), self.num.clone())
    }

    /// `b - self` for an integer `b`; `b - 1/0 = 1/0`.
    pub fn sub_from_integer(&self, b: &BigInt) -> Self {
        Self::canonical(b * &self.den - &self.num, self.den.clone())
    }
}

impl fmt::Display for ProjectiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ProjectiveRational {
    type Err = Error;

    /// Accepts `m/n` or a bare integer `m`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "rational", token: s.to_string() };
        let (num, den) = match s.trim().split_once('/') {
            Some((m, n)) => (m.trim(), n.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Self::new(num, den)
    }
}

/// Integer coefficient sequence `[b1, ..., bk]`, any integers allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ContinuedFraction(Vec<BigInt>);

impl ContinuedFraction {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        Self(coefficients)
    }

    pub fn from_ints<I, T>(coefficients: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self(coefficients.into_iter().map(Into::into).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exact value; total, including zero coefficients anywhere.
    pub fn evaluate(&self) -> ProjectiveRational {
        self.0
            .iter()
            .rev()
            .fold(ProjectiveRational::zero(), |tail, b| tail.sub_from_integer(b).recip())
    }

    /// Greedy minus-expansion of `q`.
    ///
    /// `0/1` expands to `[]` and `1/0` to `[0]`. Otherwise the first
    /// coefficient is `ceil(1/q)`, which leaves a remainder in `[0, 1)`, and
    /// every later coefficient is at least 2.
    pub fn expand(q: &ProjectiveRational) -> Self {
        if q.is_zero() {
            return Self::default();
        }
        if q.is_infinite() {
            return Self(vec![BigInt::zero()]);
        }
        let mut coefficients = Vec::new();
        let (mut num, mut den) = (q.numer().clone(), q.denom().clone());
        // invariant: value is num/den with num != 0; its reciprocal is den/num
        loop {
            let b = den.div_ceil(&num);
            let rem = &b * &num - &den;
            coefficients.push(b);
            if rem.is_zero() {
                break;
            }
            // remainder rem/num lies in (0, 1); reduce and continue
            let next = ProjectiveRational::canonical(rem, num);
            num = next.num;
            den = next.den;
        }
        Self(coefficients)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Comma-separated integers; the empty string is the empty sequence.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Self::default());
        }
        s.split(',')
            .map(|tok| {
                tok.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                    what: "integer coefficient",
                    token: tok.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}
