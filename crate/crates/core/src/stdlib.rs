//! Named λ-encodings and the `hd` / `nth` stream programs.
//!
//! Booleans are `λxy.x` / `λxy.y`, `if b t e` is `b t e`, numerals are
//! Church numerals, `pred` uses the pair-shift construction and `Y` is
//! Curry's fixed-point combinator.

use thiserror::Error;

use crate::budget::Budget;
use crate::lm::{normalize, parse_lm, step, LmTerm, StreamVar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedTerm {
    pub name: String,
    pub term: LmTerm,
    pub doc: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StdlibError {
    #[error("unknown builtin `{0}` (known: {known})", known = BUILTIN_NAMES.join(", "))]
    UnknownName(String),
    #[error("index {index} is out of range for a stream prefix of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("nth needs at least one element")]
    NoElements,
    #[error("element {0} is not closed")]
    NotClosed(usize),
    #[error("element {0} is not in normal form")]
    NotNormal(usize),
    #[error("normalization ran out of budget after {steps} steps")]
    Exhausted { steps: usize },
}

pub const BUILTIN_NAMES: [&str; 14] = [
    "hd",
    "nth",
    "Y",
    "true",
    "false",
    "if",
    "zero?",
    "pred",
    "succ",
    "church(n)",
    "pair",
    "fst",
    "snd",
    "nth-functional",
];

fn src(name: &str) -> Option<(&'static str, &'static str)> {
    Some(match name {
        "hd" => ("\\x. #'a. x", "head of a stream"),
        "true" => ("\\x y. x", "boolean true"),
        "false" => ("\\x y. y", "boolean false"),
        "if" => ("\\b t e. b t e", "if b then t else e"),
        "zero?" => ("\\n. n (\\u x y. y) (\\x y. x)", "Church numeral test for zero"),
        "pair" => ("\\a b f. f a b", "pair constructor"),
        "fst" => ("\\p. p (\\x y. x)", "first projection"),
        "snd" => ("\\p. p (\\x y. y)", "second projection"),
        "succ" => ("\\n f x. f (n f x)", "Church successor"),
        "Y" => ("\\f. (\\x. f (x x)) (\\x. f (x x))", "Curry's fixed-point combinator"),
        _ => return None,
    })
}

fn parsed(s: &str) -> LmTerm {
    parse_lm(s).expect("builtin source parses")
}

/// The Church numeral `λf.λx.f^n x`.
pub fn church(n: usize) -> LmTerm {
    let body = (0..n).fold(LmTerm::var("x"), |acc, _| LmTerm::app(LmTerm::var("f"), acc));
    let f = crate::lm::TermVar::new("f");
    let x = crate::lm::TermVar::new("x");
    LmTerm::lam(&f, LmTerm::lam(&x, body))
}

/// `λn. fst (n (λp. pair (snd p) (succ (snd p))) (pair c0 c0))`
fn pred() -> LmTerm {
    let [pair, fst, snd, succ] = ["pair", "fst", "snd", "succ"].map(|n| parsed(src(n).unwrap().0));
    let p = LmTerm::var("p");
    let shift = LmTerm::lam(
        &crate::lm::TermVar::new("p"),
        LmTerm::apps(
            pair.clone(),
            [LmTerm::app(snd.clone(), p.clone()), LmTerm::app(succ, LmTerm::app(snd, p))],
        ),
    );
    let start = LmTerm::apps(pair, [church(0), church(0)]);
    let n = crate::lm::TermVar::new("n");
    LmTerm::lam(&n, LmTerm::app(fst, LmTerm::apps(LmTerm::var("n"), [shift, start])))
}

/// `λf x. μα. λy. if (zero? y) then x else f α (pred y)`
fn nth_functional() -> LmTerm {
    let zero = parsed(src("zero?").unwrap().0);
    let body = LmTerm::apps(
        LmTerm::app(zero, LmTerm::var("y")),
        [
            LmTerm::var("x"),
            LmTerm::app(
                LmTerm::sapp(LmTerm::var("f"), StreamVar::new("a")),
                LmTerm::app(pred(), LmTerm::var("y")),
            ),
        ],
    );
    let tv = crate::lm::TermVar::new;
    LmTerm::lams(&[tv("f"), tv("x")], LmTerm::mu(&StreamVar::new("a"), LmTerm::lam(&tv("y"), body)))
}

/// Looks up a builtin by name; numerals are written `church(n)`.
pub fn builtin(name: &str) -> Result<NamedTerm, StdlibError> {
    let named = |term, doc| Ok(NamedTerm { name: name.to_string(), term, doc });
    if let Some(n) = name.strip_prefix("church(").and_then(|r| r.strip_suffix(')')) {
        return match n.parse::<usize>() {
            Ok(k) => named(church(k), "Church numeral"),
            Err(_) => Err(StdlibError::UnknownName(name.to_string())),
        };
    }
    match name {
        "pred" => named(pred(), "Church predecessor (pair shift)"),
        "nth-functional" => named(nth_functional(), "the functional whose fixed point is nth"),
        "nth" => named(
            LmTerm::app(parsed(src("Y").unwrap().0), nth_functional()),
            "nth N0 ... Nn 'b ci = Ni",
        ),
        _ => match src(name) {
            Some((s, doc)) => named(parsed(s), doc),
            None => Err(StdlibError::UnknownName(name.to_string())),
        },
    }
}

/// `hd N0 ... Nn 'b`
pub fn hd_application(elements: &[LmTerm], tail: &StreamVar) -> LmTerm {
    let hd = builtin("hd").unwrap().term;
    LmTerm::sapp(LmTerm::apps(hd, elements.iter().cloned()), tail.clone())
}

/// `nth N0 ... Nn 'b ci`
pub fn nth_application(elements: &[LmTerm], tail: &StreamVar, index: usize) -> LmTerm {
    let nth = builtin("nth").unwrap().term;
    let applied = LmTerm::sapp(LmTerm::apps(nth, elements.iter().cloned()), tail.clone());
    LmTerm::app(applied, church(index))
}

/// Normalizes `nth N0 ... Nn 'b ci` and returns the result, which equals
/// `Ni` up to alpha.
pub fn run_nth_demo(
    elements: &[LmTerm],
    index: usize,
    budget: Budget,
) -> Result<LmTerm, StdlibError> {
    if elements.is_empty() {
        return Err(StdlibError::NoElements);
    }
    if index >= elements.len() {
        return Err(StdlibError::IndexOutOfRange { index, len: elements.len() });
    }
    for (i, e) in elements.iter().enumerate() {
        let (ts, ss) = e.free_vars();
        if !ts.is_empty() || !ss.is_empty() {
            return Err(StdlibError::NotClosed(i));
        }
        if step(e).is_some() {
            return Err(StdlibError::NotNormal(i));
        }
    }
    let term = nth_application(elements, &StreamVar::new("b"), index);
    let n = normalize(&term, budget);
    if n.exhausted {
        return Err(StdlibError::Exhausted { steps: n.trace.len() });
    }
    Ok(n.term)
}

/// `k` pairwise distinct closed normal forms: the projections
/// `λx1...xm. xj`, enumerated by `m` then `j`.
pub fn sample_elements(k: usize) -> Vec<LmTerm> {
    let mut out = Vec::new();
    let mut m = 1;
    while out.len() < k {
        for j in 0..m {
            if out.len() == k {
                break;
            }
            let vars: Vec<_> = (0..m).map(|i| crate::lm::TermVar::new(format!("v{i}"))).collect();
            out.push(LmTerm::lams(&vars, LmTerm::Var(vars[j].clone())));
        }
        m += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lm::{lm_equal, RuleName};
    use crate::testutil::lm;
    use crate::verdict::Verdict;

    fn nf(t: &LmTerm) -> LmTerm {
        let n = normalize(t, Budget::default());
        assert!(!n.exhausted);
        n.term
    }

    fn b(name: &str) -> LmTerm {
        builtin(name).unwrap().term
    }

    #[test]
    fn builtin_examples() {
        assert_eq!(b("hd"), lm("\\x. #'a. x"));
        assert_eq!(b("church(2)"), lm("\\f. \\x. f (f x)"));
        assert_eq!(b("nth"), LmTerm::app(b("Y"), b("nth-functional")));
        assert!(matches!(builtin("tail"), Err(StdlibError::UnknownName(_))));
        assert!(matches!(builtin("church(x)"), Err(StdlibError::UnknownName(_))));
        for name in BUILTIN_NAMES {
            let name = if name == "church(n)" { "church(3)" } else { name };
            let t = b(name);
            assert!(t.free_vars().0.is_empty() && t.free_vars().1.is_empty(), "{name}");
        }
    }

    #[test]
    fn hd_chain() {
        let elems = sample_elements(5);
        for n in 0..5 {
            let t = hd_application(&elems[..=n], &StreamVar::new("b"));
            let r = normalize(&t, Budget::default());
            assert_eq!(r.term, elems[0]);
            let mut expected = vec![RuleName::BetaT];
            expected.extend(std::iter::repeat_n(RuleName::Mu, n));
            expected.push(RuleName::BetaS);
            assert_eq!(r.trace.rules(), expected);
        }
    }

    #[test]
    fn numerals_and_booleans() {
        let zero = b("zero?");
        assert_eq!(nf(&LmTerm::app(zero.clone(), church(0))), b("true"));
        for k in 1..=5 {
            assert_eq!(nf(&LmTerm::app(zero.clone(), church(k))), b("false"));
        }
        for k in 0..=4 {
            assert_eq!(nf(&LmTerm::app(b("pred"), church(k + 1))), nf(&church(k)));
        }
        let ite = LmTerm::apps(b("if"), [b("false"), lm("u"), lm("v")]);
        assert_eq!(nf(&ite), lm("v"));
    }

    #[test]
    fn y_unfolds() {
        let f = lm("\\g. \\z. z");
        let yf = LmTerm::app(b("Y"), f.clone());
        let v = lm_equal(&yf, &LmTerm::app(f, yf.clone()), Budget::default());
        assert_eq!(v.verdict(), Verdict::Equal);
    }

    #[test]
    fn nth_examples() {
        let elems = vec![lm("\\z. z"), lm("\\x y. x"), lm("\\x y. y")];
        let got = run_nth_demo(&elems, 1, Budget::default()).unwrap();
        assert_eq!(got, lm("\\x y. x"));
        let got = run_nth_demo(&elems[..1], 0, Budget::default()).unwrap();
        assert_eq!(got, lm("\\z. z"));
        assert_eq!(
            run_nth_demo(&elems, 3, Budget::default()),
            Err(StdlibError::IndexOutOfRange { index: 3, len: 3 })
        );
        assert_eq!(run_nth_demo(&[lm("w")], 0, Budget::default()), Err(StdlibError::NotClosed(0)));
        assert_eq!(
            run_nth_demo(&[lm("(\\z. z) (\\z. z)")], 0, Budget::default()),
            Err(StdlibError::NotNormal(0))
        );
        let tiny = Budget::new(10, 1000).unwrap();
        assert!(matches!(run_nth_demo(&elems, 2, tiny), Err(StdlibError::Exhausted { .. })));
    }
}
