//! Team-logic toolkit: parsing, team-semantics evaluation, brute-force
//! semantic checking, Hilbert-style proof checking, and the syntactic
//! elimination pipeline down to Boolean closures of flat logics.

pub mod calculus;
pub mod elim;
pub mod error;
pub mod formula;
pub mod oracle;
pub mod parse;
pub mod render;
pub mod sampler;
pub mod schema;
pub mod semantics;
pub mod signature;

pub use error::Error;
pub use formula::{Formula, FragmentTag, Term};
pub use parse::{parse, parse_prop};
pub use render::render;
pub use semantics::{eval_team, SemanticsMode, TeamModel};
pub use signature::Signature;
