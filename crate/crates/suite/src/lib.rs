//! Theorem verification for the soft int-group calculus.
//!
//! Every checked result gets an id, a checker, and a per-instance report
//! with a replayable witness on violation. Checkers quantify exhaustively
//! over enumerated soft sets when the budget allows and over seeded samples
//! otherwise; the effective mode lands in the report, and identical configs
//! and seeds serialize to byte-identical structured reports.

pub mod chain;
pub mod checkers;
pub mod ctx;
pub mod enumerate;
pub mod fixtures;
pub mod instance;
pub mod report;
pub mod rng;
pub mod runner;
pub mod theorem;

pub use chain::{generate_chain_int_group, generate_chain_normal_int_group};
pub use checkers::check_theorem;
pub use enumerate::{enumerate_int_groups, enumerate_soft_sets, soft_set_count, EnumerateError, DEFAULT_BUDGET};
pub use instance::{Instance, Mode, NamedHom};
pub use report::{SuiteReport, TheoremReport, Verdict, Witness};
pub use runner::{hom_catalog, run_suite, SuiteConfig};
pub use theorem::TheoremId;
