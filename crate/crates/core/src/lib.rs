//! Exact inference engine for coherence-based probability logic.
//!
//! The engine decides whether an assessment of conditional-probability
//! values (points or intervals) is coherent, i.e. admits no Dutch book;
//! produces an explicit sure-loss betting scheme when it is not; and
//! computes the tightest coherent probability bounds on a queried
//! conditional event given coherent premises. All arithmetic is exact
//! rational arithmetic, so verdicts at measure-zero boundaries (such as
//! conditioning on an event of probability zero) are decided correctly
//! rather than by floating-point luck.
//!
//! Modules, bottom up:
//!
//! * [`formula`] - propositional formulas and classical evaluation
//! * [`parse`] - the shared surface syntax
//! * [`conditional`] - three-valued conditional events
//! * [`constituents`] - possible cases and their classification table
//! * [`rational`] / [`lp`] - exact rationals and rational simplex
//! * [`coherence`] - layered coherence checking and Dutch books
//! * [`propagation`] - tightest coherent bounds for a conclusion
//! * [`rules`] - named argument forms with closed-form bounds

pub mod coherence;
pub mod conditional;
pub mod constituents;
pub mod error;
pub mod formula;
pub mod lp;
pub mod parse;
pub mod propagation;
pub mod rational;
pub mod rules;

pub use coherence::{check_coherence, dutch_book, Assessment, CoherenceVerdict, DutchBook};
pub use conditional::{ConditionalEvent, TruthValue3};
pub use constituents::{enumerate_constituents, ConstituentTable};
pub use error::{Error, ParseError, Result};
pub use formula::{Formula, Valuation};
pub use propagation::{extension_interval, is_coherent_extension, is_non_informative, PropagationResult};
pub use rational::Rational;
pub use rules::{apply_rule, check_connexive, pttt_predictions, RuleName};
