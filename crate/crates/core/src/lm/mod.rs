//! The untyped Λμ-calculus: two-sorted syntax, substitutions, the
//! oriented axioms and budgeted convertibility.

mod equal;
mod rewrite;
mod subst;
mod syntax;
mod term;

pub use equal::{lm_equal, lm_equal_with};
pub use rewrite::{
    contract_at, normalize, normalize_with, redexes, step, step_with, LmNormalization, LmRedex,
    RuleName, RuleSet,
};
pub use subst::{ctx_subst, plug, rename_stream, struct_subst, subst_term};
pub use syntax::{parse_lm, print_lm};
pub use term::{Arg, LmContext, LmTerm, StreamRef, StreamVar, TermVar};
