//! Simple closed curves on the once-punctured torus fiber of the trefoil.
//!
//! A curve is recorded by its homology class `m[a] + n[b]`, coprime and
//! unoriented. Dehn twists act on homology by `x ↦ x + k·⟨x, d⟩·d` with the
//! algebraic intersection form normalized so that `⟨a, b⟩ = -1`; under this
//! normalization `τ_b^{-r} ∘ τ_a^{s} ∘ τ_b^{-n}(a)` lands on
//! `(sn+1)[a] + (rsn+r+n)[b]` with both coefficients positive.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ContinuedFraction, ProjectiveRational};
use crate::error::{precondition, Result};

/// A signed homology class `m[a] + n[b]`; not necessarily primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homology {
    pub m: BigInt,
    pub n: BigInt,
}

impl Homology {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        Self { m: m.into(), n: n.into() }
    }

    /// Algebraic intersection `⟨self, other⟩`, with `⟨a, b⟩ = -1`.
    pub fn pairing(&self, other: &Homology) -> BigInt {
        &self.n * &other.m - &self.m * &other.n
    }

    pub fn scale(&self, k: &BigInt) -> Homology {
        Homology { m: &self.m * k, n: &self.n * k }
    }

    pub fn add(&self, other: &Homology) -> Homology {
        Homology { m: &self.m + &other.m, n: &self.n + &other.n }
    }

    /// `x ↦ x + k·⟨x, d⟩·d`.
    pub fn twist(&self, along: &Homology, k: &BigInt) -> Homology {
        let coeff = k * self.pairing(along);
        self.add(&along.scale(&coeff))
    }
}

/// Unoriented isotopy class of a simple closed curve on the fiber.
///
/// Canonical sign: `n > 0`, or `(m, n) = (1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    m: BigInt,
    n: BigInt,
}

impl CurveClass {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if m.is_zero() && n.is_zero() {
            return Err(precondition("curve class (0, 0) is not a simple closed curve"));
        }
        if !m.gcd(&n).is_one() {
            return Err(precondition(format!("curve class ({m}, {n}) is not primitive")));
        }
        Ok(Self::canonical(m, n))
    }

    fn canonical(m: BigInt, n: BigInt) -> Self {
        if n.is_negative() || (n.is_zero() && m.is_negative()) {
            Self { m: -m, n: -n }
        } else {
            Self { m, n }
        }
    }

    /// The curve `a = 1[a] + 0[b]`.
    pub fn a() -> Self {
        Self { m: BigInt::one(), n: BigInt::zero() }
    }

    /// The curve `b = 0[a] + 1[b]`.
    pub fn b() -> Self {
        Self { m: BigInt::zero(), n: BigInt::one() }
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn homology(&self) -> Homology {
        Homology { m: self.m.clone(), n: self.n.clone() }
    }

    /// Canonicalizes a primitive signed class. Panics if `h` is not primitive,
    /// which only happens if an integer identity has been broken.
    pub(crate) fn from_primitive(h: Homology) -> Self {
        assert!(
            h.m.gcd(&h.n).is_one(),
            "non-primitive class ({}, {}) where a primitive one is guaranteed",
            h.m,
            h.n
        );
        Self::canonical(h.m, h.n)
    }

    /// The curve whose slope is the value of `cf`.
    pub fn from_cf(cf: &ContinuedFraction) -> Self {
        Self::from(cf.evaluate())
    }

    pub fn slope(&self) -> ProjectiveRational {
        ProjectiveRational::new(self.m.clone(), self.n.clone())
            .expect("curve classes are never (0, 0)")
    }
}

impl From<ProjectiveRational> for CurveClass {
    fn from(q: ProjectiveRational) -> Self {
        // both are reduced with the same sign normalization
        Self { m: q.numer().clone(), n: q.denom().clone() }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Geometric intersection number `|m1 n2 - n1 m2|`.
pub fn intersection(c1: &CurveClass, c2: &CurveClass) -> BigInt {
    c1.homology().pairing(&c2.homology()).abs()
}

/// `(r, s, n)` indexing the knots `[r, -s, n]`, with `r >= 3`, `s >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    r: i64,
    s: i64,
    n: i64,
}

impl FamilyParams {
    pub fn new(r: i64, s: i64, n: i64) -> Result<Self> {
        if r < 3 {
            return Err(precondition(format!("r must be >= 3, got {r}")));
        }
        if s < 2 {
            return Err(precondition(format!("s must be >= 2, got {s}")));
        }
        Ok(Self { r, s, n })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `[r, -s, n]`.
    pub fn continued_fraction(&self) -> ContinuedFraction {
        ContinuedFraction::from_ints([self.r, -self.s, self.n])
    }

    /// `τ_b^{-r} ∘ τ_a^{s} ∘ τ_b^{-n}`; the last letter is dropped when `n = 0`.
    pub fn twist_word(&self) -> TwistWord {
        let mut letters = vec![
            TwistLetter::new(CurveClass::b(), -self.r),
            TwistLetter::new(CurveClass::a(), self.s),
        ];
        if self.n != 0 {
            letters.push(TwistLetter::new(CurveClass::b(), -self.n));
        }
        TwistWord::new(letters.into_iter().map(|l| l.expect("nonzero exponent")).collect())
    }

    /// Signed `[K^tw] = s[a] + (rs+1)[b]`.
    pub fn twist_curve(&self) -> Homology {
        let (r, s) = (BigInt::from(self.r), BigInt::from(self.s));
        Homology { n: &r * &s + 1, m: s }
    }

    /// Signed `[K^0] = [a] + r[b]`.
    pub fn base_curve(&self) -> Homology {
        Homology::new(1, self.r)
    }

    /// Signed `[K^n] = (sn+1)[a] + (rsn+r+n)[b]`.
    pub fn knot_homology(&self) -> Homology {
        let (r, s, n) = (BigInt::from(self.r), BigInt::from(self.s), BigInt::from(self.n));
        let sn = &s * &n;
        Homology { m: &sn + 1, n: &r * &sn + &r + &n }
    }
}

/// The curve class of `K^n_{r,s}` from its closed form.
pub fn knot_class(p: &FamilyParams) -> CurveClass {
    CurveClass::from_primitive(p.knot_homology())
}

/// Checks `[K^n] = n[K^tw] + [K^0]` on signed representatives.
pub fn twist_linearity_check(p: &FamilyParams) -> bool {
    let rhs = p.twist_curve().scale(&BigInt::from(p.n)).add(&p.base_curve());
    p.knot_homology() == rhs
}

/// One factor `τ_curve^exponent` of a twist word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistLetter {
    curve: CurveClass,
    exponent: i64,
}

impl TwistLetter {
    pub fn new(curve: CurveClass, exponent: i64) -> Result<Self> {
        if exponent == 0 {
            return Err(precondition("twist exponent must be nonzero"));
        }
        Ok(Self { curve, exponent })
    }

    pub fn curve(&self) -> &CurveClass {
        &self.curve
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }
}

/// A composition of Dehn twists, written left to right and applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwistWord {
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn new(letters: Vec<TwistLetter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn inverse(&self) -> TwistWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| TwistLetter { curve: l.curve.clone(), exponent: -l.exponent })
            .collect();
        TwistWord { letters }
    }

    /// Signed action on homology, rightmost letter first.
    pub fn act(&self, x: &Homology) -> Homology {
        self.letters.iter().rev().fold(x.clone(), |acc, l| {
            acc.twist(&l.curve.homology(), &BigInt::from(l.exponent))
        })
    }

    pub fn apply(&self, c: &CurveClass) -> CurveClass {
        // twists are automorphisms of H_1, so primitivity is preserved
        CurveClass::from_primitive(self.act(&c.homology()))
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", letter_name(&l.curve), l.exponent)?;
        }
        Ok(())
    }
}

fn letter_name(c: &CurveClass) -> String {
    if *c == CurveClass::a() {
        "a".into()
    } else if *c == CurveClass::b() {
        "b".into()
    } else {
        format!("{}/{}", c.m, c.n)
    }
}

impl std::str::FromStr for TwistWord {
    type Err = crate::error::Error;

    /// Whitespace-separated letters `<curve>^<exp>`, where `<curve>` is `a`,
    /// `b`, or a slope `m/n`. Example: `b^-3 a^2 b^-5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |tok: &str| crate::error::Error::Parse { what: "twist letter", token: tok.to_string() };
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (curve, exp) = tok.split_once('^').ok_or_else(|| bad(tok))?;
            let curve = match curve {
                "a" => CurveClass::a(),
                "b" => CurveClass::b(),
                other => {
                    let q: ProjectiveRational = other.parse().map_err(|_| bad(tok))?;
                    CurveClass::from(q)
                }
            };
            let exponent: i64 = exp.parse().map_err(|_| bad(tok))?;
            letters.push(TwistLetter::new(curve, exponent)?);
        }
        Ok(TwistWord::new(letters))
    }
}
