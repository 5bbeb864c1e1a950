//! Genus of fibered knots carried by the fiber, via positive braids.
//!
//! In the basis `c = a + b`, `b`, a curve `p[c] + q[b]` with `p, q >= 0`
//! coprime closes up to a positive braid on `p + q` strands with
//! `pq + p(p-1) + q(q-1)` crossings. Stallings' theorem then gives the fiber
//! Euler characteristic `strands - crossings` and the genus follows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::curves::CurveClass;
use crate::error::{precondition, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidCounts {
    pub p: BigInt,
    pub q: BigInt,
    pub strands: BigInt,
    pub crossings: BigInt,
}

/// Rewrites `m[a] + n[b]` as `p[c] + q[b]` with `p, q >= 0`.
pub fn to_cb_basis(c: &CurveClass) -> Result<(BigInt, BigInt)> {
    let p = c.m().clone();
    let q = c.n() - c.m();
    if !p.is_negative() && !q.is_negative() {
        Ok((p, q))
    } else if !p.is_positive() && !q.is_positive() {
        Ok((-p, -q))
    } else {
        Err(Error::NotPositivelyRepresentable { m: c.m().to_string(), n: c.n().to_string() })
    }
}

fn check_pq(p: &BigInt, q: &BigInt) -> Result<()> {
    if p.is_negative() || q.is_negative() {
        return Err(precondition(format!("braid counts need p, q >= 0, got ({p}, {q})")));
    }
    if p.is_zero() && q.is_zero() {
        return Err(precondition("braid counts need (p, q) != (0, 0)"));
    }
    if !p.gcd(q).is_one() {
        return Err(precondition(format!("braid counts need coprime p, q, got ({p}, {q})")));
    }
    Ok(())
}

pub fn braid_counts(p: &BigInt, q: &BigInt) -> Result<BraidCounts> {
    check_pq(p, q)?;
    let crossings = p * q + p * (p - 1) + q * (q - 1);
    Ok(BraidCounts { p: p.clone(), q: q.clone(), strands: p + q, crossings })
}

/// `2(p+q) - (p² + q² + pq)`.
pub fn euler_characteristic(p: &BigInt, q: &BigInt) -> Result<BigInt> {
    check_pq(p, q)?;
    Ok(BigInt::from(2) * (p + q) - (p * p + q * q + p * q))
}

/// `(p² + q² + pq + 1)/2 - (p + q)` for the `(c, b)` coordinates of `c`.
pub fn fibered_genus(c: &CurveClass) -> Result<BigInt> {
    let (p, q) = to_cb_basis(c)?;
    check_pq(&p, &q)?;
    let twice: BigInt = &p * &p + &q * &q + &p * &q + 1;
    let (half, odd): (BigInt, BigInt) = twice.div_rem(&BigInt::from(2));
    assert!(odd.is_zero(), "p² + q² + pq + 1 must be even for coprime ({p}, {q})");
    Ok(half - (p + q))
}

/// Closed form `(s²(r² - r + 1) - s)/2` for the genus of `K^tw = [r, -s]`.
pub fn ktw_genus(r: i64, s: i64) -> Result<BigInt> {
    if r < 3 || s < 2 {
        return Err(precondition(format!("ktw_genus needs r >= 3, s >= 2, got ({r}, {s})")));
    }
    let (r, s) = (BigInt::from(r), BigInt::from(s));
    let num = &s * &s * (&r * &r - &r + 1) - &s;
    Ok(num / 2)
}
