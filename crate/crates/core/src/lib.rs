//! Soft constraint problems over c-semirings, graphical games, and the
//! transformations between them.
//!
//! The crate has three layers:
//!
//! - [`semiring`]: preference carriers — classical booleans, fuzzy values in
//!   `[0, 1]`, weighted costs, payoff levels, and flat products of those —
//!   with exact rational arithmetic, the induced order, and checkers for the
//!   carrier axioms and strict monotonicity of combination.
//! - [`scsp`] and [`game`]: soft constraint satisfaction problems with
//!   exhaustive optimisation, and graphical games with exhaustive Nash /
//!   Pareto enumeration.
//! - [`mappings`] and [`harness`]: structure-preserving translations between
//!   the two models, and a seeded random-instance harness that checks the
//!   containment laws those translations promise.
//!
//! All arithmetic is exact (arbitrary-precision rationals), every enumeration
//! is exhaustive, and every output is in a canonical order, so results are
//! reproducible byte for byte.

pub mod cli;
pub mod game;
pub mod harness;
pub mod json;
pub mod mappings;
pub mod scsp;
pub mod semiring;

pub(crate) mod table;

#[cfg(test)]
pub(crate) mod fixtures;

pub use game::{GameError, GraphicalGame, Player};
pub use harness::{
    generate_game, generate_scsp, verify_all, Family, GeneratorConfig, HarnessError,
    VerificationReport, GENERATOR_ID,
};
pub use json::{game_from_json, game_to_json, scsp_from_json, scsp_to_json, ParseError};
pub use mappings::{
    complement_maps, identity_maps, max_finite_payoff,
    default_maps, game_to_scsp, global_map, harden, local_map, merge, MapRule, MappingError,
    OrderPreservingMap,
};
pub use scsp::{JointAssignment, Scsp, ScspError, SoftConstraint, Variable};
pub use semiring::{BaseKind, Extended, PrefValue, Rational, Semiring, SemiringError};
