//! Daily quotation ingestion and market-value computation.
//!
//! Quotes arrive as CSV (`date,close,volume`), shares outstanding and
//! common stock as effective-dated schedules. Market capitalization,
//! close price times shares outstanding, stands in for the economic
//! value `V` of a listed firm.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One daily quotation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuoteRecord {
    pub date: NaiveDate,
    /// Closing price, currency per share.
    pub close: f64,
    /// Shares transacted. Carried for fidelity, unused by the indicator.
    pub volume: u64,
}

/// A date-ascending series of quotations with unique dates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PriceSeries {
    records: Vec<QuoteRecord>,
}

impl PriceSeries {
    /// Build a series from records in any order. Rejects duplicate dates.
    pub fn new(mut records: Vec<QuoteRecord>) -> Result<Self> {
        records.sort_by_key(|r| r.date);
        for pair in records.windows(2) {
            if pair[0].date == pair[1].date {
                return Err(Error::DuplicateDate {
                    date: pair[0].date,
                    line: 0,
                });
            }
        }
        Ok(PriceSeries { records })
    }

    pub fn records(&self) -> &[QuoteRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The quote at exactly `date`, if present.
    pub fn get(&self, date: NaiveDate) -> Option<&QuoteRecord> {
        self.records
            .binary_search_by_key(&date, |r| r.date)
            .ok()
            .map(|i| &self.records[i])
    }
}

/// Parse a quote CSV.
///
/// One record per line, `YYYY-MM-DD,<decimal close>,<integer volume>`,
/// LF or CRLF. A first line whose first field is not a date and whose
/// second field is not a number is taken for a header and skipped.
/// Records may arrive out of order; the returned series is ascending.
pub fn parse_price_csv(input: &str) -> Result<PriceSeries> {
    let mut records: Vec<(QuoteRecord, usize)> = Vec::new();

    for (idx, raw_line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }

        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("expected 3 fields, found {}", fields.len()),
            });
        }

        let date = NaiveDate::parse_from_str(fields[0].trim(), "%Y-%m-%d");
        let close = fields[1].trim().parse::<f64>();
        if idx == 0 && date.is_err() && close.is_err() {
            // Header line.
            continue;
        }

        let date = date.map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("bad date '{}'", fields[0].trim()),
        })?;
        let close = close.map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("non-numeric price '{}'", fields[1].trim()),
        })?;
        if !close.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("non-finite price '{}'", fields[1].trim()),
            });
        }
        if close < 0.0 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("negative price {close}"),
            });
        }
        let volume_raw = fields[2].trim().parse::<i64>().map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("non-numeric volume '{}'", fields[2].trim()),
        })?;
        if volume_raw < 0 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("negative volume {volume_raw}"),
            });
        }

        records.push((
            QuoteRecord {
                date,
                close,
                volume: volume_raw as u64,
            },
            line_no,
        ));
    }

    records.sort_by_key(|(r, _)| r.date);
    for pair in records.windows(2) {
        if pair[0].0.date == pair[1].0.date {
            return Err(Error::DuplicateDate {
                date: pair[1].0.date,
                line: pair[1].1.max(pair[0].1),
            });
        }
    }

    Ok(PriceSeries {
        records: records.into_iter().map(|(r, _)| r).collect(),
    })
}

/// Render a series back to CSV, with header, LF line endings.
/// `parse_price_csv(serialize_price_csv(s)) == s` for any series.
pub fn serialize_price_csv(series: &PriceSeries) -> String {
    let mut out = String::from("date,close,volume\n");
    for r in series.records() {
        out.push_str(&format!("{},{},{}\n", r.date, r.close, r.volume));
    }
    out
}

/// One (effective_date, value) entry of a schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleEntry {
    pub effective: NaiveDate,
    pub value: f64,
}

/// Piecewise-constant, effective-dated parameter: shares outstanding
/// (a count) or common stock (a currency amount). Lookups before the
/// first entry fail; a lookup between entries returns the latest entry
/// at or before the date.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ScheduleEntry>", into = "Vec<ScheduleEntry>")]
pub struct EffectiveSchedule {
    entries: Vec<ScheduleEntry>,
}

impl EffectiveSchedule {
    /// Build a schedule. Entries must be non-empty, strictly ascending
    /// by effective date, with positive values.
    pub fn new(entries: Vec<ScheduleEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Config("schedule must have at least one entry".into()));
        }
        for pair in entries.windows(2) {
            if pair[0].effective >= pair[1].effective {
                return Err(Error::Config(format!(
                    "schedule effective dates must be strictly ascending ({} then {})",
                    pair[0].effective, pair[1].effective
                )));
            }
        }
        if let Some(bad) = entries.iter().find(|e| !(e.value > 0.0) || !e.value.is_finite()) {
            return Err(Error::Config(format!(
                "schedule value {} at {} must be a positive finite number",
                bad.value, bad.effective
            )));
        }
        Ok(EffectiveSchedule { entries })
    }

    pub fn entries(&self) -> &[ScheduleEntry] {
        &self.entries
    }

    /// First effective date of the schedule.
    pub fn first_effective(&self) -> NaiveDate {
        self.entries[0].effective
    }

    /// The value in effect at `date`: the entry with the latest
    /// effective date at or before `date`.
    pub fn value_at(&self, date: NaiveDate) -> Result<f64> {
        let idx = self.entries.partition_point(|e| e.effective <= date);
        if idx == 0 {
            return Err(Error::ScheduleGap {
                date,
                first: self.first_effective(),
            });
        }
        Ok(self.entries[idx - 1].value)
    }
}

impl TryFrom<Vec<ScheduleEntry>> for EffectiveSchedule {
    type Error = Error;

    fn try_from(entries: Vec<ScheduleEntry>) -> Result<Self> {
        EffectiveSchedule::new(entries)
    }
}

impl From<EffectiveSchedule> for Vec<ScheduleEntry> {
    fn from(s: EffectiveSchedule) -> Vec<ScheduleEntry> {
        s.entries
    }
}

/// A firm's dated valuation inputs with the derived market value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompanySnapshot {
    pub date: NaiveDate,
    pub close: f64,
    pub shares_outstanding: u64,
    pub common_stock: f64,
    /// `close * shares_outstanding`, unrounded.
    pub market_value: f64,
}

/// Market capitalization: close price times shares outstanding.
///
/// The result is exact to f64 multiplication; rounding to whole currency
/// units is a display concern, see [`round_currency`].
pub fn market_value(close: f64, shares_outstanding: u64) -> Result<f64> {
    if !(close >= 0.0) || !close.is_finite() {
        return Err(Error::Domain(format!("negative or non-finite price {close}")));
    }
    if shares_outstanding == 0 {
        return Err(Error::Domain("shares outstanding must be positive".into()));
    }
    Ok(close * shares_outstanding as f64)
}

/// Round a currency amount to the nearest whole unit, halves away from
/// zero. This is the rule under which every published case figure
/// reproduces exactly.
pub fn round_currency(value: f64) -> i64 {
    value.round() as i64
}

/// Human display of a currency amount in lei, e.g. `31,786,996 lei`.
pub fn display_lei(value: f64) -> String {
    let rounded = round_currency(value);
    format!("{} lei", group_thousands(rounded))
}

fn group_thousands(value: i64) -> String {
    let digits = value.unsigned_abs().to_string();
    let mut grouped = String::with_capacity(digits.len() + digits.len() / 3 + 1);
    if value < 0 {
        grouped.push('-');
    }
    let lead = digits.len() % 3;
    for (i, c) in digits.chars().enumerate() {
        if i != 0 && (i + 3 - lead) % 3 == 0 {
            grouped.push(',');
        }
        grouped.push(c);
    }
    grouped
}

/// Join a quote with the schedule values in effect on its date.
///
/// Fails with [`Error::MissingQuote`] when the date has no quote and
/// [`Error::ScheduleGap`] when it precedes a schedule's first entry.
/// The shares schedule must hold whole share counts.
pub fn snapshot_at(
    series: &PriceSeries,
    shares: &EffectiveSchedule,
    common_stock: &EffectiveSchedule,
    date: NaiveDate,
) -> Result<CompanySnapshot> {
    let quote = series.get(date).ok_or(Error::MissingQuote(date))?;
    let shares_value = shares.value_at(date)?;
    if shares_value.fract() != 0.0 || shares_value > u64::MAX as f64 {
        return Err(Error::Domain(format!(
            "shares schedule value {shares_value} is not a whole share count"
        )));
    }
    let shares_outstanding = shares_value as u64;
    let cs = common_stock.value_at(date)?;
    let value = market_value(quote.close, shares_outstanding)?;
    Ok(CompanySnapshot {
        date,
        close: quote.close,
        shares_outstanding,
        common_stock: cs,
        market_value: value,
    })
}
