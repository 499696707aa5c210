//! Two-sided matching-market simulator.
//!
//! Generates one-to-one markets with tunable size `n`, preference-list
//! length `k`, and preference correlation `rho`, runs proposer-proposing
//! deferred acceptance, and counts the recipients who hold a useful
//! truncation misreport. The `sweep` module drives deterministic parameter
//! grids in parallel; `report` serializes results to CSV and renders SVG
//! trend plots.

pub mod deviation;
pub mod matching;
pub mod prefgen;
pub mod report;
pub mod sweep;

pub use deviation::{brute_force_deviators, count_deviators, DeviationReport};
pub use matching::{deferred_acceptance, enumerate_stable_matchings, is_stable, Matching, RankTable};
pub use prefgen::{generate_market, popularity_weights, AgentId, Market, PopularityWeights, PrefList};
pub use sweep::{aggregate, run_cell, run_sweep, AggregateRow, SweepConfig, SweepRow};
