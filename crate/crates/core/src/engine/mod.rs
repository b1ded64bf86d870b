//! Finite constructions that turn a highly connected host into a model of
//! a halved Farey graph, reporting the strength actually achieved.

mod farey;
mod plow;
mod separator;
mod split;

pub use separator::{find_small_separator, football_to_separated, FootballOutcome, PairSeparator, SeparatedFootball};
pub use split::{check_split, quotient_lambda, split_at_separator, SplitCase, SplitOutcome, SplitReport, SplitResult};
pub use plow::{plow_extract, PlowModel, PlowOutcome, PlowRoute};
pub use farey::{farey_engine, ChainJson, EngineBudget, EngineTrace, PlowRecord, RoundRecord, TraceJson, TRACE_FORMAT};
