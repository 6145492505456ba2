//! Plot-ready CSV and JSON emission for series runs.

use serde::Serialize;
use std::borrow::Cow;

use crate::series::{
    classify_series, ForecastResult, IndicatorSeries, ScenarioConfig, SeriesSummary,
};

/// Decimal places for indicator figures in reports. Currency amounts are
/// emitted at full precision instead.
pub const INDICATOR_DECIMALS: usize = 6;

/// Format an indicator figure for output.
pub fn fmt_indicator(value: f64) -> String {
    format!("{:.prec$}", value, prec = INDICATOR_DECIMALS)
}

/// Quote a CSV field when it contains a separator, quote or newline.
pub fn csv_field(field: &str) -> Cow<'_, str> {
    if field.contains([',', '"', '\n', '\r']) {
        Cow::Owned(format!("\"{}\"", field.replace('"', "\"\"")))
    } else {
        Cow::Borrowed(field)
    }
}

/// Render the evaluated series as CSV: one row per trading date, LF line
/// endings, byte-stable for identical inputs.
pub fn render_series_csv(series: &IndicatorSeries) -> String {
    let mut out = String::from("date,price,shares,value,value_over_cs,i,i_star,class,warnings\n");
    for point in series.points() {
        let warnings = point
            .result
            .warnings
            .iter()
            .map(|w| w.code())
            .collect::<Vec<_>>()
            .join(";");
        let row = [
            point.snapshot.date.to_string(),
            point.snapshot.close.to_string(),
            point.snapshot.shares_outstanding.to_string(),
            point.snapshot.market_value.to_string(),
            fmt_indicator(point.result.valuation_ratio),
            fmt_indicator(point.result.i_value),
            fmt_indicator(point.result.i_star),
            point.strategy.code().to_string(),
            warnings,
        ];
        let escaped: Vec<Cow<'_, str>> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&escaped.join(","));
        out.push('\n');
    }
    out
}

/// Run metadata emitted next to the series CSV. The embedded config
/// echo re-parses as a valid [`ScenarioConfig`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub config: ScenarioConfig,
    pub points: usize,
    pub classes: SeriesSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forecast: Option<ForecastResult>,
}

/// Render the run summary as pretty JSON, UTF-8, stable field order, no
/// trailing whitespace.
pub fn render_summary_json(summary: &RunSummary) -> String {
    // Serialization of these types cannot fail.
    serde_json::to_string_pretty(summary).expect("summary serialization")
}

/// A complete series report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportBundle {
    pub series_csv: String,
    pub summary_json: String,
}

/// Assemble the CSV and summary JSON for one run.
pub fn build_report(
    config: &ScenarioConfig,
    series: &IndicatorSeries,
    forecast: Option<ForecastResult>,
) -> ReportBundle {
    let summary = RunSummary {
        config: config.clone(),
        points: series.len(),
        classes: classify_series(series),
        forecast,
    };
    ReportBundle {
        series_csv: render_series_csv(series),
        summary_json: render_summary_json(&summary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::parse_price_csv;
    use crate::series::build_series;

    fn scenario() -> ScenarioConfig {
        ScenarioConfig::from_json(
            r#"{
                "segments": [{"start": "2007-01-01", "end": "2007-12-31",
                              "profile": {"n": 7, "f": 10, "ri_target": 0.066, "ri_origin": 0.041,
                                          "rce_target": 0.06, "rce_origin": 0.04}}],
                "shares": [{"effective": "2007-01-01", "value": 124167954}],
                "common_stock": [{"effective": "2007-01-01", "value": 12416795.40}]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn fixture_report_is_stable() {
        let config = scenario();
        let prices =
            parse_price_csv("2007-06-01,0.256,120000\n2007-11-06,1.22,2500000").unwrap();
        let series = build_series(&config, &prices).unwrap();
        let bundle_a = build_report(&config, &series, None);
        let bundle_b = build_report(&config, &series, None);
        assert_eq!(bundle_a, bundle_b);

        let mut lines = bundle_a.series_csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "date,price,shares,value,value_over_cs,i,i_star,class,warnings"
        );
        let first = lines.next().unwrap();
        assert!(first.starts_with("2007-06-01,0.256,124167954,31786996.224,"));
        assert!(first.contains(",cooperation,"));
    }

    #[test]
    fn summary_config_echo_round_trips() {
        let config = scenario();
        let prices = parse_price_csv("2007-06-01,0.256,120000").unwrap();
        let series = build_series(&config, &prices).unwrap();
        let bundle = build_report(&config, &series, None);

        let parsed: serde_json::Value = serde_json::from_str(&bundle.summary_json).unwrap();
        let echo = serde_json::to_string(&parsed["config"]).unwrap();
        assert_eq!(ScenarioConfig::from_json(&echo).unwrap(), config);
        assert_eq!(parsed["points"], 1);
        assert!(!bundle.summary_json.ends_with(char::is_whitespace));
    }
}
