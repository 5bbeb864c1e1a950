//! Growth-rate bound from bridge indices and the Seifert-matrix obstruction
//! to a zero slope.
//!
//! Bridge indices are never computed here. They are supplied by the caller;
//! the fact that `b1(K^n) → ∞` comes from the nonzero linking number of the
//! two push-offs of `K^tw`, which is exactly what [`zero_slope_obstruction`]
//! guarantees.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{precondition, Result};

/// Bridge index `b0` and torus bridge index `b1` of a nontrivial knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BridgeIndices {
    b0: u64,
    b1: u64,
}

impl BridgeIndices {
    pub fn new(b0: u64, b1: u64) -> Result<Self> {
        if b1 == 0 {
            return Err(precondition("torus bridge index b1 must be positive"));
        }
        if b0 <= b1 {
            return Err(precondition(format!("need b0 > b1, got b0 = {b0}, b1 = {b1}")));
        }
        Ok(Self { b0, b1 })
    }

    pub fn b0(&self) -> u64 {
        self.b0
    }

    pub fn b1(&self) -> u64 {
        self.b1
    }
}

/// Both candidates of the growth-rate formula and their min and max.
///
/// `value` is `min{1 - 1/b1, 1 - 2/b0}`; `max_variant` is kept alongside it
/// since the same expression also circulates with `max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRate {
    pub from_b1: BigRational,
    pub from_b0: BigRational,
    pub value: BigRational,
    pub max_variant: BigRational,
}

/// Growth rate of tunnel number for an m-small knot with `g(E(K)) = 2`.
/// Those hypotheses are the caller's to establish.
pub fn growth_rate_bound(b: &BridgeIndices) -> GrowthRate {
    let one = BigRational::one();
    let from_b1 = &one - BigRational::new(BigInt::one(), BigInt::from(b.b1));
    let from_b0 = &one - BigRational::new(BigInt::from(2), BigInt::from(b.b0));
    let (value, max_variant) = if from_b1 <= from_b0 {
        (from_b1.clone(), from_b0.clone())
    } else {
        (from_b0.clone(), from_b1.clone())
    };
    GrowthRate { from_b1, from_b0, value, max_variant }
}

/// Least `b1` with `1 - 1/b1 > 1 - eps`, i.e. `floor(1/eps) + 1`.
pub fn epsilon_target(eps: &BigRational) -> Result<BigInt> {
    if !eps.is_positive() || *eps >= BigRational::one() {
        return Err(precondition(format!("epsilon must satisfy 0 < eps < 1, got {eps}")));
    }
    Ok(eps.recip().floor().to_integer() + 1)
}

/// Integer 2×2 Seifert matrix `[[v00, v01], [v10, v11]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix2(pub [[BigInt; 2]; 2]);

impl SeifertMatrix2 {
    pub fn from_ints(rows: [[i64; 2]; 2]) -> Self {
        Self(rows.map(|row| row.map(BigInt::from)))
    }

    /// `[[0, j], [j + sign, k]]`, the shape forced by a zero slope.
    pub fn zero_slope_shape(j: &BigInt, sign: i8, k: &BigInt) -> Self {
        Self([
            [BigInt::zero(), j.clone()],
            [j + BigInt::from(sign.signum()), k.clone()],
        ])
    }

    /// The trefoil, `[[-1, 1], [0, -1]]`.
    pub fn trefoil() -> Self {
        Self::from_ints([[-1, 1], [0, -1]])
    }
}

/// Integer polynomial in `t`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self(coefficients)
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coefficients: I) -> Self {
        Self::new(coefficients.into_iter().map(BigInt::from).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    /// Equality up to sign and multiplication by powers of `t`.
    pub fn eq_up_to_units(&self, other: &IntPoly) -> bool {
        let strip = |p: &IntPoly| -> Vec<BigInt> {
            p.0.iter().skip_while(|c| c.is_zero()).cloned().collect()
        };
        let (a, b) = (strip(self), strip(other));
        a == b || a == strip(&other.negate())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_coeff = deg == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{deg}")?,
            }
        }
        Ok(())
    }
}

/// `det(V - t·Vᵀ)`, unnormalized.
pub fn alexander_from_seifert(v: &SeifertMatrix2) -> IntPoly {
    let [[a, b], [c, d]] = &v.0;
    // (a - ta)(d - td) - (b - tc)(c - tb)
    let det = a * d - b * c;
    let middle = b * b + c * c - BigInt::from(2) * a * d;
    IntPoly::new(vec![det.clone(), middle, det])
}

/// True iff neither `j(j+1)` nor `j(j-1)` is `±1`, so a Seifert matrix of
/// zero-slope shape can never present the trefoil.
pub fn zero_slope_obstruction(j: &BigInt) -> bool {
    let unit = |x: BigInt| x.abs().is_one();
    !unit(j * (j + 1)) && !unit(j * (j - 1))
}
