//! Exact integer arithmetic behind every closed form in the crate.
//!
//! Nothing here touches floating point. Rational comparisons elsewhere are
//! done by cross-multiplying, with products of the form `k·n` capped at
//! [`KN_LIMIT`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on products such as `k·n` accepted by the formula path.
pub const KN_LIMIT: i64 = 1 << 40;

/// Extended-Euclid output: `a·x + b·y = g` with `g = gcd(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutResult {
    pub g: i64,
    pub x: i64,
    pub y: i64,
}

/// Minimal positive `t` with `b | a·t − gcd(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TStar(pub i64);

impl TStar {
    pub fn value(self) -> i64 {
        self.0
    }
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    debug_assert!(a >= 0 && b >= 0);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn bezout(a: i64, b: i64) -> BezoutResult {
    debug_assert!(a >= 1 && b >= 1);
    let (mut old_r, mut r) = (a, b);
    let (mut old_x, mut x) = (1i64, 0i64);
    let (mut old_y, mut y) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    BezoutResult {
        g: old_r,
        x: old_x,
        y: old_y,
    }
}

/// `t(a, b)` by exhaustive search over `1..=b/gcd(a, b)`.
///
/// A solution always exists in that range because `a/g` is invertible
/// modulo `b/g`.
pub fn t_star(a: i64, b: i64) -> TStar {
    debug_assert!(a >= 1 && b >= 1);
    let g = gcd(a, b);
    if g == b {
        return TStar(1);
    }
    let a_red = (a / g) % (b / g);
    let b_red = b / g;
    // a·t − g ≡ 0 (mod b)  ⇔  (a/g)·t ≡ 1 (mod b/g)
    let mut acc = 0i64;
    for t in 1..=b_red {
        acc = (acc + a_red) % b_red;
        if acc == 1 {
            return TStar(t);
        }
    }
    unreachable!("a/gcd is invertible modulo b/gcd")
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b >= 1);
    a.div_euclid(b)
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b >= 1);
    -((-a).div_euclid(b))
}

/// `a·b`, rejected when it leaves `[0, KN_LIMIT]`.
pub fn checked_product(a: i64, b: i64, what: &'static str) -> Result<i64> {
    match a.checked_mul(b) {
        Some(v) if (0..=KN_LIMIT).contains(&v) => Ok(v),
        _ => Err(Error::Overflow { what }),
    }
}

pub fn divides(d: i64, m: i64) -> bool {
    d != 0 && m % d == 0
}
