//! Market-entry risk indicator.
//!
//! The indicator of a target firm X, seen from an acquirer's country of
//! origin, is the product of five factors:
//!
//! ```text
//! I = N * F * (1 + RI_T)/(1 + RI_O) * (1 + RCE_T)/(1 + RCE_O) * V/CS
//! ```
//!
//! where `N` is the country-risk rating of the target market, `F` the
//! cultural/organizational compatibility score, `RI_T`/`RI_O` the target
//! and origin inflation rates, `RCE_T`/`RCE_O` the target and origin
//! economic growth rates, `V` the economic value of the firm (market
//! capitalization when listed) and `CS` its common stock.
//!
//! For analysis the decimal logarithm `I* = lg I` is split into a country
//! term `lg(N * monetary_ratio * growth_ratio)` and a firm term
//! `lg(F * V/CS)`, the first characterizing macro (country) risk and the
//! second microeconomic risk.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scale bounds for the factors. Ratios outside `(0, RATIO_SCALE_MAX]`
/// and valuation ratios above `VALUATION_SCALE_MAX` are reported as
/// warnings, not errors: they signal an extreme reading, the formula
/// itself stays well defined.
pub const RATING_MIN: f64 = 1.0;
pub const RATING_MAX: f64 = 10.0;
pub const COMPAT_MIN: f64 = 0.1;
pub const COMPAT_MAX: f64 = 100.0;
pub const RATIO_SCALE_MAX: f64 = 2.0;
pub const VALUATION_SCALE_MAX: f64 = 100.0;

/// Macro-level inputs for one evaluation regime.
///
/// Rates are fractions, not percents: `0.066` means 6.6%. Negative rates
/// are accepted down to (but excluding) -1, where the ratios degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MacroProfile {
    /// Country-risk rating of the target market, 1 (crisis) to 10 (stable).
    #[serde(rename = "n")]
    pub n_rating: f64,
    /// Cultural/organizational compatibility, 0.1 (incompatible) to 100.
    #[serde(rename = "f")]
    pub f_compat: f64,
    /// Inflation rate of the target market.
    pub ri_target: f64,
    /// Inflation rate of the country of origin.
    pub ri_origin: f64,
    /// Economic growth rate of the target country. May be negative.
    pub rce_target: f64,
    /// Economic growth rate of the country of origin. May be negative.
    pub rce_origin: f64,
}

impl MacroProfile {
    /// `(1 + RI_T) / (1 + RI_O)`, the monetary risk ratio.
    pub fn monetary_ratio(&self) -> f64 {
        (1.0 + self.ri_target) / (1.0 + self.ri_origin)
    }

    /// `(1 + RCE_T) / (1 + RCE_O)`, the growth risk ratio.
    pub fn growth_ratio(&self) -> f64 {
        (1.0 + self.rce_target) / (1.0 + self.rce_origin)
    }
}

/// Valuation of the target firm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FirmValuation {
    /// Economic value of the firm, in currency units. Market
    /// capitalization when the firm is listed.
    pub enterprise_value: f64,
    /// Common (scriptural) stock of the firm, in currency units.
    pub common_stock: f64,
}

impl FirmValuation {
    /// `V / CS`, the valuation ratio.
    pub fn ratio(&self) -> f64 {
        self.enterprise_value / self.common_stock
    }
}

/// Hard range violation: the indicator is not computed while any of
/// these hold.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// `N` outside `[1, 10]`.
    Rating { value: f64 },
    /// `F` outside `[0.1, 100]`.
    Compatibility { value: f64 },
    /// A rate at or below -1, where `1 + rate` is non-positive.
    Rate { name: &'static str, value: f64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Rating { value } if *value < RATING_MIN => {
                write!(f, "N {value} below {RATING_MIN}")
            }
            Violation::Rating { value } => write!(f, "N {value} above {RATING_MAX}"),
            Violation::Compatibility { value } if *value < COMPAT_MIN => {
                write!(f, "F {value} below {COMPAT_MIN}")
            }
            Violation::Compatibility { value } => write!(f, "F {value} above {COMPAT_MAX}"),
            Violation::Rate { name, value } => write!(f, "{name} {value} not above -1"),
        }
    }
}

/// Soft scale warning. The computation proceeds; the reading is extreme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RangeWarning {
    /// Monetary ratio outside `(0, 2]`: target inflation is soaring
    /// relative to the origin country.
    MonetaryRatio { ratio: f64 },
    /// Growth ratio outside `(0, 2]`.
    GrowthRatio { ratio: f64 },
    /// Valuation ratio above 100.
    ValuationRatio { ratio: f64 },
}

impl RangeWarning {
    /// Stable machine token, used in CSV output.
    pub fn code(&self) -> &'static str {
        match self {
            RangeWarning::MonetaryRatio { .. } => "monetary-ratio-out-of-scale",
            RangeWarning::GrowthRatio { .. } => "growth-ratio-out-of-scale",
            RangeWarning::ValuationRatio { .. } => "valuation-ratio-out-of-scale",
        }
    }
}

impl std::fmt::Display for RangeWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RangeWarning::MonetaryRatio { ratio } => {
                write!(f, "monetary ratio {ratio} exceeds {RATIO_SCALE_MAX}")
            }
            RangeWarning::GrowthRatio { ratio } => {
                write!(f, "growth ratio {ratio} exceeds {RATIO_SCALE_MAX}")
            }
            RangeWarning::ValuationRatio { ratio } => {
                write!(f, "valuation ratio {ratio} exceeds {VALUATION_SCALE_MAX}")
            }
        }
    }
}

/// Outcome of [`validate_profile`]: hard violations and soft warnings.
#[derive(Debug, Clone, Default)]
pub struct ProfileReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<RangeWarning>,
}

impl ProfileReport {
    /// True when the profile has no hard violations.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check a profile against the factor scales.
///
/// Out-of-range `N`/`F` and rates at or below -1 are hard violations.
/// Monetary or growth ratios outside `(0, 2]` are soft warnings: the
/// scale bound is a reading aid, not a definitional limit.
pub fn validate_profile(profile: &MacroProfile) -> ProfileReport {
    let mut report = ProfileReport::default();

    if !(RATING_MIN..=RATING_MAX).contains(&profile.n_rating) || profile.n_rating.is_nan() {
        report.violations.push(Violation::Rating {
            value: profile.n_rating,
        });
    }
    if !(COMPAT_MIN..=COMPAT_MAX).contains(&profile.f_compat) || profile.f_compat.is_nan() {
        report.violations.push(Violation::Compatibility {
            value: profile.f_compat,
        });
    }
    for (name, value) in [
        ("ri_target", profile.ri_target),
        ("ri_origin", profile.ri_origin),
        ("rce_target", profile.rce_target),
        ("rce_origin", profile.rce_origin),
    ] {
        if !(value > -1.0) {
            report.violations.push(Violation::Rate { name, value });
        }
    }

    // Ratio warnings only make sense once the rates themselves are legal.
    if report.is_valid() {
        let monetary = profile.monetary_ratio();
        if !(monetary > 0.0 && monetary <= RATIO_SCALE_MAX) {
            report
                .warnings
                .push(RangeWarning::MonetaryRatio { ratio: monetary });
        }
        let growth = profile.growth_ratio();
        if !(growth > 0.0 && growth <= RATIO_SCALE_MAX) {
            report
                .warnings
                .push(RangeWarning::GrowthRatio { ratio: growth });
        }
    }

    report
}

/// The indicator with its full factor breakdown.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndicatorResult {
    /// The indicator I, always positive and finite.
    pub i_value: f64,
    /// `I* = lg I`.
    pub i_star: f64,
    /// `(1 + RI_T) / (1 + RI_O)`.
    pub monetary_ratio: f64,
    /// `(1 + RCE_T) / (1 + RCE_O)`.
    pub growth_ratio: f64,
    /// `V / CS`.
    pub valuation_ratio: f64,
    /// `lg(N * monetary_ratio * growth_ratio)`, the macro risk term.
    pub country_term: f64,
    /// `lg(F * V/CS)`, the microeconomic risk term.
    pub firm_term: f64,
    /// Scale warnings raised by the inputs.
    #[serde(serialize_with = "serialize_warning_codes")]
    pub warnings: Vec<RangeWarning>,
}

fn serialize_warning_codes<S: serde::Serializer>(
    warnings: &[RangeWarning],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(warnings.iter().map(|w| w.code()))
}

/// Compute the indicator and its decomposition.
///
/// Fails with [`Error::Domain`] when the profile has hard violations,
/// when `CS <= 0`, or when `V <= 0` (the logarithm is undefined at a
/// non-positive indicator). Nothing is clamped: out-of-scale ratios are
/// carried through and reported in `warnings`.
pub fn compute_indicator(
    profile: &MacroProfile,
    valuation: &FirmValuation,
) -> Result<IndicatorResult> {
    let report = validate_profile(profile);
    if !report.is_valid() {
        let reasons: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Domain(reasons.join("; ")));
    }
    if !(valuation.common_stock > 0.0) {
        return Err(Error::Domain(format!(
            "common stock {} must be positive",
            valuation.common_stock
        )));
    }
    if !(valuation.enterprise_value > 0.0) {
        return Err(Error::Domain(format!(
            "enterprise value {} must be positive, the indicator logarithm is undefined otherwise",
            valuation.enterprise_value
        )));
    }

    let monetary_ratio = profile.monetary_ratio();
    let growth_ratio = profile.growth_ratio();
    let valuation_ratio = valuation.ratio();

    let i_value =
        profile.n_rating * profile.f_compat * monetary_ratio * growth_ratio * valuation_ratio;
    if !i_value.is_finite() || i_value <= 0.0 {
        return Err(Error::Domain(format!(
            "indicator {i_value} is not a positive finite number"
        )));
    }

    let mut warnings = report.warnings;
    if valuation_ratio > VALUATION_SCALE_MAX {
        warnings.push(RangeWarning::ValuationRatio {
            ratio: valuation_ratio,
        });
    }

    Ok(IndicatorResult {
        i_value,
        i_star: i_value.log10(),
        monetary_ratio,
        growth_ratio,
        valuation_ratio,
        country_term: (profile.n_rating * monetary_ratio * growth_ratio).log10(),
        firm_term: (profile.f_compat * valuation_ratio).log10(),
        warnings,
    })
}

/// Decimal logarithm of the indicator, `I* = lg I`.
pub fn log_indicator(i_value: f64) -> Result<f64> {
    if !(i_value > 0.0) || !i_value.is_finite() {
        return Err(Error::Domain(format!(
            "logarithm undefined for indicator value {i_value}"
        )));
    }
    Ok(i_value.log10())
}

/// Asset position of the firm relative to its scriptural capital.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValuationHealth {
    /// `V > CS`: assets exceed the scriptural value of the capital.
    RichInAssets,
    /// `V < CS`: the firm is close to bankruptcy.
    NearBankrupt,
    /// `V = CS` exactly.
    Parity,
}

impl std::fmt::Display for ValuationHealth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValuationHealth::RichInAssets => write!(f, "rich in assets"),
            ValuationHealth::NearBankrupt => write!(f, "near bankrupt"),
            ValuationHealth::Parity => write!(f, "parity"),
        }
    }
}

/// Classify the valuation ratio into an asset-position descriptor.
pub fn valuation_health(valuation: &FirmValuation) -> Result<ValuationHealth> {
    if !(valuation.common_stock > 0.0) {
        return Err(Error::Domain(format!(
            "common stock {} must be positive",
            valuation.common_stock
        )));
    }
    Ok(
        match valuation
            .enterprise_value
            .partial_cmp(&valuation.common_stock)
        {
            Some(std::cmp::Ordering::Greater) => ValuationHealth::RichInAssets,
            Some(std::cmp::Ordering::Less) => ValuationHealth::NearBankrupt,
            Some(std::cmp::Ordering::Equal) => ValuationHealth::Parity,
            None => {
                return Err(Error::Domain(format!(
                    "enterprise value {} is not comparable",
                    valuation.enterprise_value
                )))
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile_2007() -> MacroProfile {
        MacroProfile {
            n_rating: 7.0,
            f_compat: 10.0,
            ri_target: 0.066,
            ri_origin: 0.041,
            rce_target: 0.06,
            rce_origin: 0.04,
        }
    }

    fn valuation_june() -> FirmValuation {
        FirmValuation {
            enterprise_value: 31_786_996.224,
            common_stock: 12_416_795.40,
        }
    }

    #[test]
    fn profile_2007_is_clean() {
        let report = validate_profile(&profile_2007());
        assert!(report.is_valid());
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn rating_below_one_is_violation() {
        let mut p = profile_2007();
        p.n_rating = 0.5;
        let report = validate_profile(&p);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].to_string(), "N 0.5 below 1");
    }

    #[test]
    fn soaring_target_inflation_is_warning_not_violation() {
        let mut p = profile_2007();
        p.ri_target = 3.0;
        p.ri_origin = 0.0;
        let report = validate_profile(&p);
        assert!(report.is_valid());
        assert_eq!(report.warnings.len(), 1);
        assert_eq!(report.warnings[0].to_string(), "monetary ratio 4 exceeds 2");
        assert_eq!(report.warnings[0].code(), "monetary-ratio-out-of-scale");
    }

    #[test]
    fn rate_at_minus_one_is_violation() {
        let mut p = profile_2007();
        p.rce_origin = -1.0;
        let report = validate_profile(&p);
        assert!(!report.is_valid());
        assert!(report.violations[0].to_string().contains("rce_origin"));
    }

    #[test]
    fn negative_growth_within_range_is_accepted() {
        let mut p = profile_2007();
        p.rce_target = -0.07;
        assert!(validate_profile(&p).is_valid());
    }

    #[test]
    fn june_2007_value() {
        // Exact-product oracle puts I at 187.03246878001921..., see the
        // acceptance suite for the independent high-precision check.
        let r = compute_indicator(&profile_2007(), &valuation_june()).unwrap();
        assert!((r.i_value - 187.0325).abs() < 5e-5);
        assert!((r.i_star - 2.271917).abs() < 5e-7);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn all_unit_factors_give_unit_indicator() {
        let p = MacroProfile {
            n_rating: 1.0,
            f_compat: 1.0,
            ri_target: 0.05,
            ri_origin: 0.05,
            rce_target: 0.02,
            rce_origin: 0.02,
        };
        let v = FirmValuation {
            enterprise_value: 123.0,
            common_stock: 123.0,
        };
        let r = compute_indicator(&p, &v).unwrap();
        assert_eq!(r.i_value, 1.0);
        assert_eq!(r.i_star, 0.0);
    }

    #[test]
    fn doubling_value_doubles_indicator() {
        let base = compute_indicator(&profile_2007(), &valuation_june()).unwrap();
        let doubled = compute_indicator(
            &profile_2007(),
            &FirmValuation {
                enterprise_value: 2.0 * 31_786_996.224,
                common_stock: 12_416_795.40,
            },
        )
        .unwrap();
        // Doubling is exact in binary floating point.
        assert_eq!(doubled.i_value, 2.0 * base.i_value);
        assert!((doubled.i_star - (base.i_star + 2f64.log10())).abs() < 1e-12);
    }

    #[test]
    fn decomposition_matches_i_star() {
        let r = compute_indicator(&profile_2007(), &valuation_june()).unwrap();
        assert!((r.country_term + r.firm_term - r.i_star).abs() < 1e-9);
    }

    #[test]
    fn hard_violation_refuses_computation() {
        let mut p = profile_2007();
        p.n_rating = 12.0;
        let err = compute_indicator(&p, &valuation_june()).unwrap_err();
        assert!(err.to_string().contains("N 12 above 10"));
    }

    #[test]
    fn zero_enterprise_value_is_domain_error() {
        let err = compute_indicator(
            &profile_2007(),
            &FirmValuation {
                enterprise_value: 0.0,
                common_stock: 1.0,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn valuation_ratio_above_scale_is_warned() {
        let r = compute_indicator(
            &profile_2007(),
            &FirmValuation {
                enterprise_value: 250.0,
                common_stock: 1.0,
            },
        )
        .unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.warnings[0].code(), "valuation-ratio-out-of-scale");
    }

    #[test]
    fn log_indicator_reproduces_printed_pairs() {
        assert!((log_indicator(4.382).unwrap() - 0.641672373).abs() < 1e-9);
        assert!((log_indicator(20.8895).unwrap() - 1.31992804).abs() < 1e-8);
        assert_eq!(log_indicator(1.0).unwrap(), 0.0);
    }

    #[test]
    fn log_indicator_rejects_non_positive() {
        assert!(log_indicator(0.0).is_err());
        assert!(log_indicator(-3.0).is_err());
        assert!(log_indicator(f64::NAN).is_err());
    }

    #[test]
    fn health_of_june_valuation() {
        let v = valuation_june();
        assert_eq!(valuation_health(&v).unwrap(), ValuationHealth::RichInAssets);
        assert!((v.ratio() - 2.56).abs() < 1e-12);
    }

    #[test]
    fn health_boundaries() {
        let parity = FirmValuation {
            enterprise_value: 5.0,
            common_stock: 5.0,
        };
        assert_eq!(valuation_health(&parity).unwrap(), ValuationHealth::Parity);
        let low = FirmValuation {
            enterprise_value: 2.5,
            common_stock: 5.0,
        };
        assert_eq!(
            valuation_health(&low).unwrap(),
            ValuationHealth::NearBankrupt
        );
        let bad = FirmValuation {
            enterprise_value: 1.0,
            common_stock: 0.0,
        };
        assert!(valuation_health(&bad).is_err());
    }
}
