use std::fmt;

use super::rewrite::scl_normalize_quiet;
use super::term::SclTerm;
use crate::budget::Budget;
use crate::lm::{lm_equal, LmTerm};
use crate::translate::to_lm;
use crate::verdict::EqVerdict;

/// The evidence attached to an `=SCL` verdict: SCL normal forms when the
/// rewriting fast path decided, Λμ normal forms of the translations
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    Scl(SclTerm),
    Lm(LmTerm),
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Scl(t) => t.fmt(f),
            NormalForm::Lm(m) => m.fmt(f),
        }
    }
}

/// Budgeted `=SCL`.
///
/// If both sides rewrite to the same SCL normal form the answer is `Equal`.
/// Otherwise `T =SCL U` iff `T_* =Λμ U_*`, so the translations are compared
/// with [`lm_equal`].
pub fn scl_equal(t: &SclTerm, u: &SclTerm, budget: Budget) -> EqVerdict<NormalForm> {
    let (nt, ex_t, _) = scl_normalize_quiet(t, budget);
    if !ex_t {
        let (nu, ex_u, _) = scl_normalize_quiet(u, budget);
        if !ex_u && nt == nu {
            return EqVerdict::Equal(NormalForm::Scl(nt), NormalForm::Scl(nu));
        }
    }
    lm_equal(&to_lm(t), &to_lm(u), budget).map(NormalForm::Lm)
}
