//! Deleted-vertex chromatic numbers and χ_k-criticality of webs and antiwebs.
//!
//! Both families are vertex-transitive, so `χ_k(G − v)` does not depend on
//! `v`. Throughout, `t*` is `t(n, α)`: `t(n, p)` for webs and `t(n, ⌊n/p⌋)`
//! for antiwebs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::chi_k;
use crate::error::{Error, Result};
use crate::families::{Family, FamilyParams};
use crate::numtheory::{ceil_div, checked_product, divides, floor_div, gcd, t_star};

/// Which branch of the characterization decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Web with `gcd(n, p) ≠ 1`: never critical.
    GcdNotOne { gcd: i64 },
    /// Antiweb with `p | n`: never critical.
    PDividesN,
    /// `k` reaches `p·t*` (web) or `α` (antiweb): critical.
    FoldAtLeast { threshold: i64 },
    /// `k = a·t* + b·m` with `a ≥ 1` and the family's constraint on `b`:
    /// critical. `m` is `p` for webs and `α/gcd(n, α)` for antiwebs.
    Decomposition { a: i64, b: i64, t_star: i64, modulus: i64 },
    /// No admissible decomposition exists: not critical.
    NoDecomposition { t_star: i64, modulus: i64 },
}

impl Witness {
    pub fn is_critical(&self) -> bool {
        matches!(self, Witness::FoldAtLeast { .. } | Witness::Decomposition { .. })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::GcdNotOne { .. } => write!(f, "gcd(n,p)≠1"),
            Witness::PDividesN => write!(f, "p divides n"),
            Witness::FoldAtLeast { threshold } => write!(f, "k ≥ {threshold}"),
            Witness::Decomposition { a, b, t_star, modulus } => {
                write!(f, "k = {a}·{t_star} + {b}·{modulus}")
            }
            Witness::NoDecomposition { t_star, modulus } => {
                write!(f, "no decomposition k = a·{t_star} + b·{modulus}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    #[serde(flatten)]
    pub params: FamilyParams,
    pub k: i64,
    pub chi_k: i64,
    pub chi_k_minus_v: i64,
    #[serde(rename = "critical")]
    pub is_critical: bool,
    pub witness: Witness,
    pub gap_bounds: (i64, i64),
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        Err(Error::FoldNotPositive { k })
    } else {
        Ok(())
    }
}

pub fn chi_k_web_minus_v(n: i64, p: i64, k: i64) -> Result<i64> {
    FamilyParams::web(n, p)?;
    check_k(k)?;
    let kn = checked_product(k, n, "k·n")?;
    if gcd(n, p) != 1 {
        return Ok(ceil_div(kn, p));
    }
    let t = t_star(n, p).value();
    Ok(ceil_div(kn - floor_div(k, t), p))
}

pub fn chi_k_antiweb_minus_v(n: i64, p: i64, k: i64) -> Result<i64> {
    let params = FamilyParams::antiweb(n, p)?;
    check_k(k)?;
    let alpha = params.alpha();
    let kn = checked_product(k, n, "k·n")?;
    if params.p_divides_n() {
        Ok(ceil_div(kn, alpha))
    } else {
        Ok(ceil_div(kn - k, alpha))
    }
}

pub fn chi_k_minus_v(params: &FamilyParams, k: i64) -> Result<i64> {
    match params.family() {
        Family::Web => chi_k_web_minus_v(params.n(), params.p(), k),
        Family::Antiweb => chi_k_antiweb_minus_v(params.n(), params.p(), k),
    }
}

/// Criticality via the fractional-part condition, with `r = k·n mod α`:
/// web needs `k ≥ p·t*` or `0 < r ≤ k/t*`; antiweb needs `k ≥ α` or `0 < r ≤ k`.
pub fn fractional_condition(params: &FamilyParams, k: i64) -> Result<bool> {
    check_k(k)?;
    let (n, p) = (params.n(), params.p());
    let kn = checked_product(k, n, "k·n")?;
    Ok(match params.family() {
        Family::Web => {
            if gcd(n, p) != 1 {
                return Ok(false);
            }
            let t = t_star(n, p).value();
            let r = kn % p;
            k >= p.saturating_mul(t) || (r > 0 && k >= r.saturating_mul(t))
        }
        Family::Antiweb => {
            if params.p_divides_n() {
                return Ok(false);
            }
            let alpha = params.alpha();
            let r = kn % alpha;
            k >= alpha || (r > 0 && k >= r)
        }
    })
}

/// Criticality via the threshold-or-decomposition condition, returning the
/// branch that decided it.
pub fn decomposition_witness(params: &FamilyParams, k: i64) -> Result<Witness> {
    check_k(k)?;
    checked_product(k, params.n(), "k·n")?;
    let (n, p) = (params.n(), params.p());
    match params.family() {
        Family::Web => {
            let g = gcd(n, p);
            if g != 1 {
                return Ok(Witness::GcdNotOne { gcd: g });
            }
            let t = t_star(n, p).value();
            let threshold = p.saturating_mul(t);
            if k >= threshold {
                return Ok(Witness::FoldAtLeast { threshold });
            }
            // b ≥ 0 forces a·t ≤ k; admissible a repeat with period p
            let found = (1..=(k / t).min(p))
                .find(|a| divides(p, k - a * t))
                .map(|a| Witness::Decomposition {
                    a,
                    b: (k - a * t) / p,
                    t_star: t,
                    modulus: p,
                });
            Ok(found.unwrap_or(Witness::NoDecomposition { t_star: t, modulus: p }))
        }
        Family::Antiweb => {
            if params.p_divides_n() {
                return Ok(Witness::PDividesN);
            }
            let alpha = params.alpha();
            if k >= alpha {
                return Ok(Witness::FoldAtLeast { threshold: alpha });
            }
            let g = gcd(n, alpha);
            let q = alpha / g;
            let t = t_star(n, alpha).value();
            // b·q ≥ a·(g − t*) with b·q = k − a·t* reduces to a·g ≤ k
            let rest = |a: i64| i128::from(k) - i128::from(a) * i128::from(t);
            let found = (1..=(k / g).min(q))
                .find(|&a| rest(a) % i128::from(q) == 0)
                .map(|a| Witness::Decomposition {
                    a,
                    b: (rest(a) / i128::from(q)) as i64,
                    t_star: t,
                    modulus: q,
                });
            Ok(found.unwrap_or(Witness::NoDecomposition { t_star: t, modulus: q }))
        }
    }
}

/// Bracket on `χ_k(G) − χ_k(G − v)`: `(⌊k/(p·t*)⌋, ⌈k/(p·t*)⌉)` for webs with
/// `gcd(n, p) = 1`, `(⌊k/α⌋, ⌈k/α⌉)` for antiwebs with `p ∤ n`, else `(0, 0)`.
pub fn criticality_gap_bounds(params: &FamilyParams, k: i64) -> Result<(i64, i64)> {
    check_k(k)?;
    let (n, p) = (params.n(), params.p());
    let denom = match params.family() {
        Family::Web if gcd(n, p) == 1 => p.saturating_mul(t_star(n, p).value()),
        Family::Antiweb if !params.p_divides_n() => params.alpha(),
        _ => return Ok((0, 0)),
    };
    Ok((floor_div(k, denom), ceil_div(k, denom)))
}

/// Full χ_k-criticality report. The verdict is derived twice, from the
/// deleted-vertex formula and from the decomposition condition (plus the
/// fractional condition); any disagreement is an error.
pub fn is_chik_critical(params: &FamilyParams, k: i64) -> Result<CriticalityReport> {
    let chi = chi_k(params, k)?;
    let chi_minus = chi_k_minus_v(params, k)?;
    let witness = decomposition_witness(params, k)?;
    let by_formula = chi_minus < chi;
    let by_fraction = fractional_condition(params, k)?;
    if by_formula != witness.is_critical() || by_formula != by_fraction {
        return Err(Error::Inconsistent(format!(
            "{params} k={k}: formula says {by_formula}, witness {witness:?}, fractional {by_fraction}"
        )));
    }
    Ok(CriticalityReport {
        params: *params,
        k,
        chi_k: chi,
        chi_k_minus_v: chi_minus,
        is_critical: by_formula,
        witness,
        gap_bounds: criticality_gap_bounds(params, k)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiStarVerdict {
    pub critical: bool,
    pub alpha: i64,
    /// `(n − 1) mod α`; zero exactly when critical.
    pub remainder: i64,
}

impl fmt::Display for ChiStarVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.critical {
            write!(f, "χ*-critical (α={} divides n−1)", self.alpha)
        } else {
            write!(f, "not χ*-critical (α={} does not divide n−1)", self.alpha)
        }
    }
}

/// χ_k-critical for every `k` iff `α | n − 1`.
pub fn is_chistar_critical(params: &FamilyParams) -> ChiStarVerdict {
    let alpha = params.alpha();
    let remainder = (params.n() - 1) % alpha;
    ChiStarVerdict {
        critical: remainder == 0,
        alpha,
        remainder,
    }
}
