//! Randomized theorem campaigns and fixed worked examples.

pub mod campaign;
pub mod fixtures;

pub use campaign::{
    exhaustive_t37, run_campaign, Campaign, ExhaustiveReport, FailureRecord, Report, Tally, TheoremId,
};
pub use fixtures::{run_all_fixtures, run_fixture, Check, FixtureId, FixtureResult};
