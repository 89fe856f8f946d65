//! SCL: combinatory terms over the seven constants, streams, the measure,
//! rewriting and `=SCL`.

mod equal;
mod rewrite;
mod syntax;
mod term;

pub use equal::{scl_equal, NormalForm};
pub use rewrite::{
    scl_contract_at, scl_joinable, scl_normalize, scl_step, scl_step_at, SclNormalization,
    SclRedex, SclRule,
};
pub use syntax::{parse_scl, parse_scl_stream, print_scl, print_scl_stream};
pub use term::{measure, scl_subst_stream, scl_subst_term, SclArg, SclConst, SclStream, SclTerm};
