//! Five-interval entry-strategy grid over `I*`.
//!
//! | `I*` interval | microeconomic environment | optimal entry strategy |
//! |---------------|---------------------------|------------------------|
//! | below 0       | likely to be entirely taken over | direct greenfield investment |
//! | 0 to 1.6      | likely to be taken over by buying the majority of stocks | acquisition |
//! | 1.6 to 2      | likely to be taken over at an equal rate to the partner | mergers, acquisitions |
//! | 2 to 5        | favourable for economic cooperation | licensing, franchising, alliances |
//! | above 5       | hard to approach through partnership, favourable for trading | export |
//!
//! The published grid leaves the cut values themselves unassigned; here
//! every interval includes its lower endpoint, so an `I*` exactly on a
//! cut takes the higher interval's strategy. [`GridBoundaries::hit`]
//! reports such exact hits so front ends can flag them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for reporting that `I*` sits exactly on a cut.
pub const BOUNDARY_HIT_EPS: f64 = 1e-12;

/// The five entry strategies, ordered by ascending `I*` interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyClass {
    GreenfieldInvestment,
    Acquisition,
    MergerAcquisition,
    Cooperation,
    Export,
}

impl StrategyClass {
    pub const ALL: [StrategyClass; 5] = [
        StrategyClass::GreenfieldInvestment,
        StrategyClass::Acquisition,
        StrategyClass::MergerAcquisition,
        StrategyClass::Cooperation,
        StrategyClass::Export,
    ];

    /// Stable machine token, used in CSV and JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            StrategyClass::GreenfieldInvestment => "greenfield-investment",
            StrategyClass::Acquisition => "acquisition",
            StrategyClass::MergerAcquisition => "merger-acquisition",
            StrategyClass::Cooperation => "cooperation",
            StrategyClass::Export => "export",
        }
    }

    /// Grid wording for the microeconomic environment of this interval.
    pub fn environment(&self) -> &'static str {
        match self {
            StrategyClass::GreenfieldInvestment => {
                "The microeconomic environment likely to be entirely taken over"
            }
            StrategyClass::Acquisition => {
                "The microeconomic environment likely to be entirely taken over by a buy \
                 of the majority of stocks and joining the management team"
            }
            StrategyClass::MergerAcquisition => {
                "The microeconomic environment likely to be taken over at a equal rate \
                 to that of the partner"
            }
            StrategyClass::Cooperation => {
                "The microeconomic environment favourable for economic cooperation"
            }
            StrategyClass::Export => {
                "The microeconomic environment hard to be approached through a \
                 partnership but favourable for trading operations"
            }
        }
    }

    /// Grid wording for the optimal entry strategy of this interval.
    pub fn strategy(&self) -> &'static str {
        match self {
            StrategyClass::GreenfieldInvestment => "Direct greenfield investment",
            StrategyClass::Acquisition => "Acquisition",
            StrategyClass::MergerAcquisition => "Mergers, acquisitions",
            StrategyClass::Cooperation => {
                "Licensing, franchising, strategic alliances, management contract"
            }
            StrategyClass::Export => "Export",
        }
    }
}

impl std::fmt::Display for StrategyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

/// The four cut points separating the five intervals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct GridBoundaries {
    cuts: [f64; 4],
}

impl Default for GridBoundaries {
    /// The published cuts: 0, 1.6, 2, 5.
    fn default() -> Self {
        GridBoundaries {
            cuts: [0.0, 1.6, 2.0, 5.0],
        }
    }
}

impl GridBoundaries {
    /// Build custom boundaries. The cuts must be finite and strictly
    /// ascending.
    pub fn new(cuts: [f64; 4]) -> Result<Self> {
        if cuts.iter().any(|c| !c.is_finite()) {
            return Err(Error::Config(format!(
                "grid boundaries must be finite, got {cuts:?}"
            )));
        }
        if !cuts.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config(format!(
                "grid boundaries must be strictly ascending, got {cuts:?}"
            )));
        }
        Ok(GridBoundaries { cuts })
    }

    pub fn cuts(&self) -> [f64; 4] {
        self.cuts
    }

    /// The cut that `i_star` sits on, within [`BOUNDARY_HIT_EPS`], if any.
    pub fn hit(&self, i_star: f64) -> Option<f64> {
        self.cuts
            .iter()
            .copied()
            .find(|c| (i_star - c).abs() <= BOUNDARY_HIT_EPS)
    }
}

impl TryFrom<[f64; 4]> for GridBoundaries {
    type Error = Error;

    fn try_from(cuts: [f64; 4]) -> Result<Self> {
        GridBoundaries::new(cuts)
    }
}

impl From<GridBoundaries> for [f64; 4] {
    fn from(b: GridBoundaries) -> [f64; 4] {
        b.cuts
    }
}

/// Map an `I*` value onto the grid.
///
/// Intervals are lower-inclusive: with the default cuts these are
/// `(-inf, 0)`, `[0, 1.6)`, `[1.6, 2)`, `[2, 5)` and `[5, +inf)`.
/// Fails with [`Error::Domain`] on a non-finite input.
pub fn classify(i_star: f64, boundaries: &GridBoundaries) -> Result<StrategyClass> {
    if !i_star.is_finite() {
        return Err(Error::Domain(format!(
            "cannot classify non-finite I* {i_star}"
        )));
    }
    let cuts = boundaries.cuts;
    let class = if i_star < cuts[0] {
        StrategyClass::GreenfieldInvestment
    } else if i_star < cuts[1] {
        StrategyClass::Acquisition
    } else if i_star < cuts[2] {
        StrategyClass::MergerAcquisition
    } else if i_star < cuts[3] {
        StrategyClass::Cooperation
    } else {
        StrategyClass::Export
    };
    Ok(class)
}

/// The grid wording for a strategy: (environment evaluation, optimal
/// entry strategy).
pub fn describe(strategy: StrategyClass) -> (&'static str, &'static str) {
    (strategy.environment(), strategy.strategy())
}
