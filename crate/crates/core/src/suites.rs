//! Curated inputs shared by the acceptance suite and the CLI `check`
//! command.

use crate::lm::{parse_lm, LmTerm};
use crate::scl::{parse_scl, SclTerm};
use crate::verdict::Verdict;

fn lm(s: &str) -> LmTerm {
    parse_lm(s).unwrap_or_else(|e| panic!("suite term {s:?}: {e}"))
}

fn scl(s: &str) -> SclTerm {
    parse_scl(s).unwrap_or_else(|e| panic!("suite term {s:?}: {e}"))
}

const ROUND_TRIP: [&str; 30] = [
    "x",
    "\\x. x",
    "\\x y. x",
    "\\x y. y",
    "\\x y z. x z (y z)",
    "#'a. x 'a",
    "#'a. x",
    "\\x. #'a. x",
    "#'a 'b. x 'b 'a",
    "\\x. #'a. \\y. x y 'a",
    "#'a. (\\x. x) 'a",
    "\\x. x 'b",
    "(#'a. x) y",
    "#'a. x (y 'a) 'a",
    "\\x. #'a. x 'a 'a",
    "x y z",
    "x 'a y",
    "\\f. f (f x)",
    "(\\x. x x) (\\y. y)",
    "#'a. \\x. x 'a",
    "\\x. #'a. x (#'b. x 'b 'a) 'a",
    "(\\x. #'a. x) u v 'c",
    "\\f x. f (f x)",
    "\\p. p (\\x y. x)",
    "#'a 'b. x 'a (y 'b)",
    "\\x y. #'a. y (x 'a)",
    "(#'a. x 'a 'a) y",
    "\\n f x. f (n f x)",
    "#'a. (#'b. x 'b) 'a",
    "\\x. (#'a. x 'a) y",
];

/// Λμ-terms for the round trip `(M*)_* = M`; together they use every
/// constructor and every non-cons bracket clause.
pub fn round_trip_terms() -> Vec<LmTerm> {
    ROUND_TRIP.iter().map(|s| lm(s)).collect()
}

/// SCL bodies with cons streams, which `M*` never produces: these reach the
/// cons clauses of `λ*x` and `μ*'a`.
pub fn cons_clause_bodies() -> Vec<SclTerm> {
    [
        "x * (y :: 'a)",
        "x * (y :: z :: 'b)",
        "y * (x :: 'a) x",
        "x * (y :: 'a) * 'b",
        "y * (K0 x :: 'a)",
    ]
    .iter()
    .map(|s| scl(s))
    .collect()
}

const FST_MU: [(&str, &str, Verdict); 21] = [
    ("#'a. x", "\\z. #'a. x", Verdict::Equal),
    ("(#'a. x 'a) y", "#'a. x y 'a", Verdict::Equal),
    ("(#'a. x) y", "#'a. x", Verdict::Equal),
    ("(#'a. x 'a 'a) y", "#'a. x y 'a y 'a", Verdict::Equal),
    ("\\x y. x", "\\x y. y", Verdict::Distinct),
    ("(\\x. #'a. x) u v 'b", "u", Verdict::Equal),
    ("(\\x. #'a. x) u v 'b", "v", Verdict::Distinct),
    ("(#'a. \\z. z 'a) y", "#'a. \\z. z y 'a", Verdict::Equal),
    ("#'a. y 'a", "\\x. #'a. y x 'a", Verdict::Equal),
    ("(#'a 'b. x 'b 'a) u", "#'a 'b. x 'b u 'a", Verdict::Equal),
    ("(#'a 'b. x 'b 'a) u", "#'a 'b. x u 'b 'a", Verdict::Distinct),
    ("(#'a. x) y 'b", "x", Verdict::Equal),
    ("(#'a. x 'a) y 'b", "x y 'b", Verdict::Equal),
    ("(#'a. x 'a) y 'b", "x 'b", Verdict::Distinct),
    ("\\x. x", "#'a. \\x. x 'a", Verdict::Distinct),
    ("(\\x. #'a. x) u v w 'b", "u", Verdict::Equal),
    ("(#'a. #'b. x 'a) y 'c", "#'b. x y 'c", Verdict::Equal),
    ("(#'a. y) (\\z. z)", "(#'a. y) w", Verdict::Equal),
    ("(#'a. x 'a) (\\z. z) 'b", "x (\\z. z) 'b", Verdict::Equal),
    ("(#'a. x 'a) y", "(#'a. x 'a) z", Verdict::Distinct),
    ("\\z. (#'a. x) z", "#'a. x", Verdict::Equal),
];

/// Pairs compared under both the μ and the (fst) rule sets, with the
/// expected verdict.
pub fn fst_mu_pairs() -> Vec<(LmTerm, LmTerm, Verdict)> {
    FST_MU.iter().map(|(a, b, v)| (lm(a), lm(b), *v)).collect()
}

const SCL_PAIRS: [(&str, &str, Verdict); 12] = [
    ("K0 x y", "x", Verdict::Equal),
    ("S0 K0 K0", "S0 K0 (K0 K0)", Verdict::Equal),
    ("K0", "K1", Verdict::Distinct),
    ("K1 x * (y :: 'a)", "x", Verdict::Equal),
    ("W1 (K1 x)", "x", Verdict::Equal),
    ("C11 (K1 x) * 'b * 'a", "x * 'b", Verdict::Equal),
    ("x * (y :: 'a)", "x y * 'a", Verdict::Equal),
    ("x * 'a", "x * 'b", Verdict::Distinct),
    ("S1 (K1 x) (K1 y) * 'a", "x y", Verdict::Equal),
    ("C10 (S0 K0 K0) * 'a y", "y * 'a", Verdict::Equal),
    ("S0 (K0 x) (S0 K0 K0)", "x", Verdict::Equal),
    ("K0 x", "K0 y", Verdict::Distinct),
];

/// SCL pairs with their `=SCL` verdict.
pub fn scl_pairs() -> Vec<(SclTerm, SclTerm, Verdict)> {
    SCL_PAIRS.iter().map(|(a, b, v)| (scl(a), scl(b), *v)).collect()
}
