//! Reaction systems: the model, exhaustive dynamics, the polynomial-time
//! procedures for reactantless and inhibitorless systems, hardness gadget
//! compilers and SAT/QBF encodings of the fixed-point problems.

pub mod dynamics;
pub mod error;
pub mod format;
pub mod formula;
pub mod logic;
pub mod polytime;
pub mod problem;
pub mod reductions;
pub mod sample;
pub mod state;
pub mod system;

pub use dynamics::{BruteForce, FixedPoint, FixedPointReport, OrbitReport, Verdict};
pub use error::{Error, Result};
pub use formula::{Formula, FormulaKind, Literal};
pub use polytime::{Bijectivity, BijectivityFailure};
pub use problem::Problem;
pub use reductions::{Claim, Construction, Decoder, FormulaQuestion, ReductionOutput};
pub use state::{EntitySet, State};
pub use system::{EntityTable, Reaction, ReactionSystem, ResourceClass, SystemBuilder};
