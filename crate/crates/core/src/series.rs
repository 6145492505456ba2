//! Day-by-day indicator evaluation under date-segmented macro regimes,
//! plus forward extrapolation of `I*`.
//!
//! A [`ScenarioConfig`] pairs a price series with one macro profile per
//! date segment (regimes change, e.g. a rating downgrade between years)
//! and with effective-dated schedules for shares outstanding and common
//! stock. [`build_series`] evaluates the indicator on every trading
//! date; [`forecast`] extends the `I*` series with an ordinary
//! least-squares trend over a trailing window, or by holding the last
//! observation.

use chrono::{Days, Months, NaiveDate};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{classify, GridBoundaries, StrategyClass};
use crate::indicator::{compute_indicator, FirmValuation, IndicatorResult, MacroProfile};
use crate::market::{snapshot_at, CompanySnapshot, EffectiveSchedule, PriceSeries};

/// One macro regime: a profile in force from `start` through `end`
/// (inclusive), or open-ended when `end` is absent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MacroSegment {
    pub start: NaiveDate,
    #[serde(default)]
    pub end: Option<NaiveDate>,
    pub profile: MacroProfile,
}

impl MacroSegment {
    pub fn covers(&self, date: NaiveDate) -> bool {
        date >= self.start && self.end.map_or(true, |end| date <= end)
    }
}

/// A full scenario: macro segments, schedules, and the quote source.
///
/// The JSON form is
///
/// ```json
/// {
///   "segments": [{"start": "2007-01-01", "end": "2007-12-31",
///                 "profile": {"n": 7, "f": 10, "ri_target": 0.066, "ri_origin": 0.041,
///                             "rce_target": 0.06, "rce_origin": 0.04}}],
///   "shares": [{"effective": "2007-01-01", "value": 124167954}],
///   "common_stock": [{"effective": "2007-01-01", "value": 12416795.40}],
///   "prices": "electroputere_2007.csv"
/// }
/// ```
///
/// Unknown keys are rejected. `end` may be null or absent for an
/// open-ended segment. Every profile field is required; in particular no
/// origin-country rate is ever defaulted. `prices` names the quote CSV
/// for file-based runs (resolved relative to the config file by the CLI)
/// and may be omitted when quotes are supplied directly, as in the
/// browser demo.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub segments: Vec<MacroSegment>,
    pub shares: EffectiveSchedule,
    pub common_stock: EffectiveSchedule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prices: Option<String>,
}

impl ScenarioConfig {
    /// Parse and validate a scenario from JSON text.
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ScenarioConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    /// Check the segment invariants: at least one segment, each with
    /// `start <= end`, sorted by start date, non-overlapping.
    pub fn validate(&self) -> Result<()> {
        if self.segments.is_empty() {
            return Err(Error::Config("scenario needs at least one segment".into()));
        }
        for seg in &self.segments {
            if let Some(end) = seg.end {
                if end < seg.start {
                    return Err(Error::Config(format!(
                        "segment starting {} ends {} before it starts",
                        seg.start, end
                    )));
                }
            }
        }
        for pair in self.segments.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if b.start < a.start {
                return Err(Error::Config(format!(
                    "segments out of order: {} after {}",
                    b.start, a.start
                )));
            }
            match a.end {
                Some(end) if end < b.start => {}
                _ => {
                    return Err(Error::Config(format!(
                        "overlapping segments: segment starting {} runs into segment starting {}",
                        a.start, b.start
                    )));
                }
            }
        }
        Ok(())
    }

    /// The segment covering `date`, if any.
    pub fn segment_for(&self, date: NaiveDate) -> Option<&MacroSegment> {
        self.segments.iter().find(|s| s.covers(date))
    }
}

/// One evaluated trading date.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesPoint {
    #[serde(flatten)]
    pub snapshot: CompanySnapshot,
    #[serde(flatten)]
    pub result: IndicatorResult,
    pub strategy: StrategyClass,
}

impl SeriesPoint {
    pub fn date(&self) -> NaiveDate {
        self.snapshot.date
    }
}

/// The indicator evaluated over every trading date of a price series.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IndicatorSeries {
    points: Vec<SeriesPoint>,
}

impl IndicatorSeries {
    pub fn points(&self) -> &[SeriesPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The (date, `I*`) samples, the forecasting input.
    pub fn i_star_samples(&self) -> Vec<(NaiveDate, f64)> {
        self.points
            .iter()
            .map(|p| (p.date(), p.result.i_star))
            .collect()
    }
}

/// Evaluate the indicator on every trading date of `prices`.
///
/// Each date takes the profile of its covering segment, the schedule
/// values in force, and the grid class of the resulting `I*` under the
/// default boundaries. Points come out date-ascending, one per trading
/// date; dates outside every segment fail with [`Error::Coverage`].
pub fn build_series(config: &ScenarioConfig, prices: &PriceSeries) -> Result<IndicatorSeries> {
    config.validate()?;
    let boundaries = GridBoundaries::default();
    let mut points = Vec::with_capacity(prices.len());

    for quote in prices.records() {
        let date = quote.date;
        let segment = config.segment_for(date).ok_or(Error::Coverage(date))?;
        let snapshot = snapshot_at(prices, &config.shares, &config.common_stock, date)?;
        let valuation = FirmValuation {
            enterprise_value: snapshot.market_value,
            common_stock: snapshot.common_stock,
        };
        let result = compute_indicator(&segment.profile, &valuation)?;
        let strategy = classify(result.i_star, &boundaries)?;
        points.push(SeriesPoint {
            snapshot,
            result,
            strategy,
        });
    }

    Ok(IndicatorSeries { points })
}

/// Extrapolation method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForecastMethod {
    /// Ordinary least-squares line over the trailing window.
    Linear,
    /// Repeat the final observation.
    HoldLast,
}

impl std::str::FromStr for ForecastMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(ForecastMethod::Linear),
            "hold-last" => Ok(ForecastMethod::HoldLast),
            other => Err(Error::Config(format!(
                "unknown forecast method '{other}', expected 'linear' or 'hold-last'"
            ))),
        }
    }
}

impl std::fmt::Display for ForecastMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForecastMethod::Linear => write!(f, "linear"),
            ForecastMethod::HoldLast => write!(f, "hold-last"),
        }
    }
}

/// Spacing between horizon dates: `<count><unit>` with unit `d`, `m`
/// or `y`, e.g. `1d`, `3m`, `1y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForecastStep {
    Days(u32),
    Months(u32),
    Years(u32),
}

impl ForecastStep {
    /// `date` advanced by `multiple` steps. Month and year steps clamp
    /// to the end of shorter months (Jan 31 + 1m = Feb 28/29).
    pub fn advance(&self, date: NaiveDate, multiple: u32) -> Result<NaiveDate> {
        let advanced = match self {
            ForecastStep::Days(n) => date.checked_add_days(Days::new(u64::from(n * multiple))),
            ForecastStep::Months(n) => date.checked_add_months(Months::new(n * multiple)),
            ForecastStep::Years(n) => date.checked_add_months(Months::new(12 * n * multiple)),
        };
        advanced.ok_or_else(|| Error::Domain(format!("horizon date overflows past {date}")))
    }
}

impl std::str::FromStr for ForecastStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, unit) = s.split_at(s.len().saturating_sub(1));
        let count: u32 = digits
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Error::Config(format!("bad step '{s}', expected e.g. '1d', '3m', '1y'")))?;
        match unit {
            "d" => Ok(ForecastStep::Days(count)),
            "m" => Ok(ForecastStep::Months(count)),
            "y" => Ok(ForecastStep::Years(count)),
            _ => Err(Error::Config(format!(
                "bad step unit in '{s}', expected 'd', 'm' or 'y'"
            ))),
        }
    }
}

impl std::fmt::Display for ForecastStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForecastStep::Days(n) => write!(f, "{n}d"),
            ForecastStep::Months(n) => write!(f, "{n}m"),
            ForecastStep::Years(n) => write!(f, "{n}y"),
        }
    }
}

impl Serialize for ForecastStep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One extrapolated point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ForecastPoint {
    pub date: NaiveDate,
    pub i_star: f64,
}

/// An extrapolation of the `I*` series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForecastResult {
    pub method: ForecastMethod,
    /// Number of trailing observations the fit used.
    pub window_used: usize,
    /// Fitted `I*` change per day. Absent for hold-last.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope: Option<f64>,
    /// Fitted `I*` at the window start. Absent for hold-last.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intercept: Option<f64>,
    pub horizon: Vec<ForecastPoint>,
}

/// Extrapolate dated `I*` samples.
///
/// For the linear method an OLS line `i_star = a + b*t` is fitted over
/// the last `window` samples, with `t` in days since the window start,
/// so irregular trading gaps keep their true spacing. Horizon dates are
/// `horizon` multiples of `step` past the last observation.
pub fn forecast_samples(
    samples: &[(NaiveDate, f64)],
    window: usize,
    horizon: usize,
    step: ForecastStep,
    method: ForecastMethod,
) -> Result<ForecastResult> {
    if window < 2 {
        return Err(Error::InsufficientData {
            have: window,
            need: 2,
        });
    }
    if samples.len() < window {
        return Err(Error::InsufficientData {
            have: samples.len(),
            need: window,
        });
    }
    if horizon == 0 {
        return Err(Error::Config("forecast horizon must be at least 1".into()));
    }

    let tail = &samples[samples.len() - window..];
    let window_start = tail[0].0;
    let last = tail[tail.len() - 1];

    let (slope, intercept) = match method {
        ForecastMethod::HoldLast => (None, None),
        ForecastMethod::Linear => {
            let ts: Vec<f64> = tail
                .iter()
                .map(|(date, _)| (*date - window_start).num_days() as f64)
                .collect();
            let n = window as f64;
            let t_mean = ts.iter().sum::<f64>() / n;
            let y_mean = tail.iter().map(|(_, y)| y).sum::<f64>() / n;
            let mut covar = 0.0;
            let mut var = 0.0;
            for ((_, y), t) in tail.iter().zip(&ts) {
                covar += (t - t_mean) * (y - y_mean);
                var += (t - t_mean) * (t - t_mean);
            }
            // Dates in a series are strictly ascending, so var > 0.
            let slope = covar / var;
            (Some(slope), Some(y_mean - slope * t_mean))
        }
    };

    let mut points = Vec::with_capacity(horizon);
    for k in 1..=horizon {
        let date = step.advance(last.0, k as u32)?;
        let i_star = match method {
            ForecastMethod::HoldLast => last.1,
            ForecastMethod::Linear => {
                let t = (date - window_start).num_days() as f64;
                intercept.unwrap() + slope.unwrap() * t
            }
        };
        points.push(ForecastPoint { date, i_star });
    }

    Ok(ForecastResult {
        method,
        window_used: window,
        slope,
        intercept,
        horizon: points,
    })
}

/// Extrapolate an evaluated indicator series, see [`forecast_samples`].
pub fn forecast(
    series: &IndicatorSeries,
    window: usize,
    horizon: usize,
    step: ForecastStep,
    method: ForecastMethod,
) -> Result<ForecastResult> {
    forecast_samples(&series.i_star_samples(), window, horizon, step, method)
}

/// Date counts per strategy class, in grid order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClassCounts {
    pub greenfield_investment: usize,
    pub acquisition: usize,
    pub merger_acquisition: usize,
    pub cooperation: usize,
    pub export: usize,
}

impl ClassCounts {
    pub fn add(&mut self, class: StrategyClass) {
        *self.slot(class) += 1;
    }

    pub fn get(&self, class: StrategyClass) -> usize {
        match class {
            StrategyClass::GreenfieldInvestment => self.greenfield_investment,
            StrategyClass::Acquisition => self.acquisition,
            StrategyClass::MergerAcquisition => self.merger_acquisition,
            StrategyClass::Cooperation => self.cooperation,
            StrategyClass::Export => self.export,
        }
    }

    pub fn total(&self) -> usize {
        StrategyClass::ALL.iter().map(|c| self.get(*c)).sum()
    }

    fn slot(&mut self, class: StrategyClass) -> &mut usize {
        match class {
            StrategyClass::GreenfieldInvestment => &mut self.greenfield_investment,
            StrategyClass::Acquisition => &mut self.acquisition,
            StrategyClass::MergerAcquisition => &mut self.merger_acquisition,
            StrategyClass::Cooperation => &mut self.cooperation,
            StrategyClass::Export => &mut self.export,
        }
    }
}

/// A date on which the strategy class changed from the previous point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassChange {
    pub date: NaiveDate,
    pub from: StrategyClass,
    pub to: StrategyClass,
}

/// Per-class counts and change dates of an evaluated series.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct SeriesSummary {
    pub counts: ClassCounts,
    pub changes: Vec<ClassChange>,
}

/// Summarize how the classification evolved over the series.
pub fn classify_series(series: &IndicatorSeries) -> SeriesSummary {
    let mut summary = SeriesSummary::default();
    let mut previous: Option<StrategyClass> = None;
    for point in series.points() {
        summary.counts.add(point.strategy);
        if let Some(prev) = previous {
            if prev != point.strategy {
                summary.changes.push(ClassChange {
                    date: point.date(),
                    from: prev,
                    to: point.strategy,
                });
            }
        }
        previous = Some(point.strategy);
    }
    summary
}
