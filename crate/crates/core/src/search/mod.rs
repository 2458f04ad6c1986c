//! Exhaustive enumeration, random sampling and the scan campaigns built on
//! top of them.

mod campaign;
mod enumerate;
mod random;

use thiserror::Error;

pub use campaign::{
    run_campaign, scan_conjecture, spectrum_census, theorem_sweep, Campaign, CampaignConfig,
    CensusSummary, Certificate, ScanReport, SpectrumCell, SweepSummary,
};
pub use enumerate::{
    enumerate_connected, enumerate_connected_up_to, enumerate_connected_with, ENUM_MAX_ORDER,
};
pub use random::{random_connected, RANDOM_MAX_ATTEMPTS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("order must be in 1..={max}, got {n}")]
    InvalidOrder { n: usize, max: usize },
    #[error("edge probability must lie strictly between 0 and 1, got {0}")]
    InvalidProbability(f64),
    #[error("no connected sample after {attempts} attempts; edge probability too small for this order")]
    GiveUp { attempts: u32 },
}
