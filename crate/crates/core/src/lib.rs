//! The untyped Λμ-calculus and the stream combinatory calculus SCL.
//!
//! * [`lm`]: two-sorted Λμ syntax, substitutions, the oriented axioms,
//!   budgeted normalization and convertibility checking.
//! * [`scl`]: SCL terms and streams, the measure `|T|`, the combinator
//!   axioms as a rewrite system and `=SCL` checking.
//! * [`translate`]: bracket abstraction `λ*`/`μ*`, `M ↦ M*` and the reverse
//!   translations `T ↦ T_*`, `S ↦ S_*`.
//! * [`algebra`]: stream combinatory algebras, meaning functions, the term
//!   model and sampled law checks.
//! * [`stdlib`]: the `hd`/`nth` stream programs and the λ-encodings they use.

pub mod algebra;
pub mod budget;
pub mod gen;
mod lexer;
pub mod lm;
pub mod scl;
pub mod stdlib;
pub mod suites;
pub mod trace;
pub mod translate;
pub mod verdict;

pub use budget::{Budget, BudgetError};
pub use lexer::ParseError;
pub use verdict::{EqVerdict, Verdict};

#[cfg(test)]
pub(crate) mod testutil {
    pub fn lm(src: &str) -> crate::lm::LmTerm {
        crate::lm::parse_lm(src).unwrap_or_else(|e| panic!("{src}: {e}"))
    }

    pub fn scl(src: &str) -> crate::scl::SclTerm {
        crate::scl::parse_scl(src).unwrap_or_else(|e| panic!("{src}: {e}"))
    }
}
