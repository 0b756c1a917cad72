//! Solvers and schedulers for communication for omniscience (CO).
//!
//! A set of users `V`, each privately observing one terminal of a multiple
//! random source, exchanges broadcast messages until every user can
//! reconstruct the whole source. This crate computes the minimum total
//! broadcast rate and optimal per-user rate vectors for both the asymptotic
//! (real-rate) and non-asymptotic (integer-rate) models, and plans
//! *successive omniscience* (SO): schedules where nested user subsets reach
//! local omniscience first without losing global optimality.
//!
//! Everything is driven by one engine: a parametric run over the residual
//! entropy function `F_alpha(X) = alpha - H(V) + H(X)` that computes the
//! Dilworth truncation's finest minimizer and a feasible rate vector for
//! *all* values of the sum-rate estimate `alpha` simultaneously, using exact
//! rational piecewise-linear arithmetic. Its segmented output is the
//! principal sequence of partitions (PSP), whose first critical point is the
//! minimum sum-rate.
//!
//! Module map:
//!
//! * [`entropy`] — ground set and exact-rational entropy oracles (bit-union,
//!   GF(q) linear, and explicit table source models).
//! * [`instance`] — JSON instance documents.
//! * [`partition`] — set-partition algebra and exhaustive enumeration.
//! * [`pwl`] — exact piecewise-linear functions of `alpha` and lower
//!   envelopes with witness tracking.
//! * [`par`] — the parametric engine, brute-force Dilworth truncation, and
//!   PSP extraction.
//! * [`omniscience`] — minimum sum-rates, achievability region tests,
//!   optimal rate vectors (independent brute-force routes included).
//! * [`planner`] — complimentary-subset search, two-stage and multi-stage SO
//!   planning, plan validation, SO-tree export.
//! * [`policy`] — pluggable recipient policies for routing incremental rates.
//! * [`sim`] — packet-level execution of SO plans over GF(q) with rank-based
//!   decodability checks.

pub mod entropy;
pub mod error;
pub mod gf;
pub mod instance;
pub mod omniscience;
pub mod par;
pub mod partition;
pub mod planner;
pub mod policy;
pub mod pwl;
pub mod rational;
pub mod set;
pub mod sim;

pub use entropy::EntropyOracle;
pub use error::{Error, Result};
// pub use par::{par, ParOutput, Psp};
// pub use planner::{Model, SoPlan};
pub use rational::Rational;
pub use set::{Subset, Universe, UserId};

/// Default cap on ground-set sizes for exhaustive enumerations
/// (all-subsets scans, partition enumeration). Bell(12) is about 4.2
/// million, still fine on a laptop. Override per call or, in the CLI,
/// through `COSO_EXHAUSTIVE_LIMIT`.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 12;

/// Hard cap on `|V|` for the parametric engine. Each iteration enumerates
/// the fusion families `X` with `{phi_i} in X subseteq Q_alpha(V_i)`, at most
/// `2^(|V|-1)` envelope candidates. Past this size the enumeration should be
/// replaced by a submodular-function-minimization step over block unions;
/// `par::ParRun` is the extension point.
pub const MAX_PAR_USERS: usize = 16;
