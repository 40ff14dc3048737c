//! Where `χ_k` sits between `k·ω`, `k·χ̄`, and `k·χ` for webs and antiwebs,
//! and when those bounds are tight or strict.

use serde::{Deserialize, Serialize};

use crate::coloring::chi_k;
use crate::error::{Error, Result};
use crate::families::FamilyParams;
use crate::numtheory::{ceil_div, checked_product, divides, gcd};

/// Reduced fraction `num/den` with `den ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den >= 1);
        let g = gcd(num.abs(), den).max(1);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tightness {
    /// `χ_k = k·ω`
    pub omega: bool,
    /// `χ_k = k·χ`
    pub chi: bool,
    /// `χ_k = k·χ̄`
    pub frac: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    #[serde(flatten)]
    pub params: FamilyParams,
    pub k: i64,
    pub k_omega: i64,
    pub chi_k: i64,
    pub k_chi: i64,
    /// Fractional chromatic number `n/α`.
    pub frac_chi: Fraction,
    /// `⌈k·n/α⌉`
    pub lex_lower: i64,
    pub tight: Tightness,
}

/// All five quantities plus tightness flags decided arithmetically:
/// `omega` iff `p | n`; `chi` iff `r = 0` or `k·(α − r) < α` with
/// `r = n mod α`; `frac` iff `α | k·gcd(n, α)`.
pub fn bounds_report(params: &FamilyParams, k: i64) -> Result<BoundsReport> {
    if k < 1 {
        return Err(Error::FoldNotPositive { k });
    }
    let (n, alpha) = (params.n(), params.alpha());
    let kn = checked_product(k, n, "k·n")?;
    let chi_1 = chi_k(params, 1)?;
    let r = n % alpha;
    let tight = Tightness {
        omega: params.p_divides_n(),
        chi: r == 0 || i128::from(k) * i128::from(alpha - r) < i128::from(alpha),
        frac: divides(alpha, checked_product(k, gcd(n, alpha), "k·gcd(n,α)")?),
    };
    Ok(BoundsReport {
        params: *params,
        k,
        k_omega: checked_product(k, params.omega(), "k·ω")?,
        chi_k: chi_k(params, k)?,
        k_chi: checked_product(k, chi_1, "k·χ")?,
        frac_chi: Fraction::new(n, alpha),
        lex_lower: ceil_div(kn, alpha),
        tight,
    })
}

/// Strictness claims that follow from the divisibility hypotheses, for `k > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictnessCheck {
    /// `α | n − 1` and `α > 1`, so `χ_k < k·χ`.
    pub upper_strict: bool,
    /// `p | n − 1` and `p > 1`, so `k·ω < χ_k`.
    pub lower_strict: bool,
    /// Every claimed strict inequality holds on the actual values.
    pub consistent: bool,
}

pub fn strictness_check(params: &FamilyParams, k: i64) -> Result<StrictnessCheck> {
    let report = bounds_report(params, k)?;
    let (n, p, alpha) = (params.n(), params.p(), params.alpha());
    let upper_strict = k > 1 && alpha > 1 && divides(alpha, n - 1);
    let lower_strict = k > 1 && p > 1 && divides(p, n - 1);
    let consistent = (!upper_strict || report.chi_k < report.k_chi)
        && (!lower_strict || (report.k_omega < report.chi_k && report.chi_k < report.k_chi));
    Ok(StrictnessCheck {
        upper_strict,
        lower_strict,
        consistent,
    })
}
