//! # entryrisk
//!
//! Market-entry risk scoring for a firm weighing an associative entry
//! (acquisition, merger, cooperation) into a foreign market.
//!
//! The core figure is the indicator
//!
//! ```text
//! I = N * F * (1 + RI_T)/(1 + RI_O) * (1 + RCE_T)/(1 + RCE_O) * V/CS
//! ```
//!
//! and its decimal logarithm `I* = lg I`, which a five-interval grid
//! maps to an optimal entry strategy, from direct greenfield investment
//! (`I*` below 0) up to plain export (`I*` above 5).
//!
//! The library covers:
//!
//! - [`indicator`]: the indicator, its log decomposition into country
//!   and firm terms, factor-range validation;
//! - [`grid`]: the strategy grid and classification;
//! - [`market`]: quote CSV ingestion, effective-dated schedules for
//!   shares outstanding and common stock, market capitalization as the
//!   enterprise-value proxy;
//! - [`series`]: day-by-day evaluation over a price series under
//!   date-segmented macro regimes, OLS trend extrapolation of `I*`;
//! - [`report`]: plot-ready CSV and JSON emission.
//!
//! ```
//! use entryrisk::{classify, compute_indicator, FirmValuation, GridBoundaries, MacroProfile};
//!
//! let profile = MacroProfile {
//!     n_rating: 7.0,
//!     f_compat: 10.0,
//!     ri_target: 0.066,
//!     ri_origin: 0.041,
//!     rce_target: 0.06,
//!     rce_origin: 0.04,
//! };
//! let valuation = FirmValuation {
//!     enterprise_value: 31_786_996.224,
//!     common_stock: 12_416_795.40,
//! };
//! let result = compute_indicator(&profile, &valuation).unwrap();
//! let class = classify(result.i_star, &GridBoundaries::default()).unwrap();
//! println!("I = {:.4}, I* = {:.4}, strategy: {}", result.i_value, result.i_star, class);
//! ```

pub mod error;
pub mod grid;
pub mod indicator;
pub mod market;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use grid::{classify, describe, GridBoundaries, StrategyClass};
pub use indicator::{
    compute_indicator, log_indicator, validate_profile, valuation_health, FirmValuation,
    IndicatorResult, MacroProfile, ProfileReport, RangeWarning, ValuationHealth, Violation,
};
pub use market::{
    display_lei, market_value, parse_price_csv, round_currency, serialize_price_csv, snapshot_at,
    CompanySnapshot, EffectiveSchedule, PriceSeries, QuoteRecord, ScheduleEntry,
};
pub use report::{build_report, render_series_csv, render_summary_json, ReportBundle, RunSummary};
pub use series::{
    build_series, classify_series, forecast, forecast_samples, ClassChange, ClassCounts,
    ForecastMethod, ForecastPoint, ForecastResult, ForecastStep, IndicatorSeries, MacroSegment,
    ScenarioConfig, SeriesPoint, SeriesSummary,
};
