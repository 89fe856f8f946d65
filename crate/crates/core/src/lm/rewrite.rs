//! The Λμ axioms oriented left to right, reduced leftmost-outermost.

use std::fmt;

use super::term::{LmTerm, StreamRef};
use crate::budget::Budget;
use crate::trace::{Position, Trace, TraceStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleName {
    /// `(λx.M)N → M[x:=N]`
    BetaT,
    /// `(μα.M)β → M[α:=β]`
    BetaS,
    /// `λx.Mx → M` when `x ∉ FV(M)`
    EtaT,
    /// `μα.Mα → M` when `α ∉ FV(M)`
    EtaS,
    /// `(μα.M)N → μα.M[Pα:=PNα]`
    Mu,
    /// `μα.M → λx.μα.M[Pα:=Pxα]`, fired on a μ-abstraction applied to a term
    Fst,
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleName::BetaT => "BetaT",
            RuleName::BetaS => "BetaS",
            RuleName::EtaT => "EtaT",
            RuleName::EtaS => "EtaS",
            RuleName::Mu => "Mu",
            RuleName::Fst => "Fst",
        })
    }
}

/// Which rule passes term arguments to μ-abstractions.
///
/// With `Fst`, a redex `(μα.M)N` is first expanded by (fst) to
/// `(λx.μα.M[Pα:=Pxα])N` and then contracted by β_T. Applied anywhere else
/// (fst) never terminates, so it only fires in that position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RuleSet {
    #[default]
    Mu,
    Fst,
}

/// A single contraction: the rule used, its position and the whole
/// resulting term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmRedex {
    pub rule: RuleName,
    pub position: Position,
    pub term: LmTerm,
}

fn contract_root(t: &LmTerm, rules: RuleSet) -> Option<(RuleName, LmTerm)> {
    match t {
        LmTerm::App(f, n) => match &**f {
            LmTerm::Lam(body) => Some((RuleName::BetaT, body.instantiate_term(n))),
            LmTerm::Mu(body) => match rules {
                RuleSet::Mu => {
                    let arg = n.shift(0, 1);
                    let bound = StreamRef::Bound(0);
                    let body = body.replace_stream_apps(&bound, &[arg], &bound);
                    Some((RuleName::Mu, LmTerm::Mu(Box::new(body))))
                }
                RuleSet::Fst => {
                    let bound = StreamRef::Bound(0);
                    let body =
                        body.shift(1, 0).replace_stream_apps(&bound, &[LmTerm::Bound(0)], &bound);
                    let expanded = LmTerm::Lam(Box::new(LmTerm::Mu(Box::new(body))));
                    Some((RuleName::Fst, LmTerm::App(Box::new(expanded), n.clone())))
                }
            },
            _ => None,
        },
        LmTerm::SApp(f, s) => match &**f {
            LmTerm::Mu(body) => Some((RuleName::BetaS, body.instantiate_stream(s))),
            _ => None,
        },
        LmTerm::Lam(body) => match &**body {
            LmTerm::App(m, x) if **x == LmTerm::Bound(0) && !m.has_loose_term(0) => {
                Some((RuleName::EtaT, m.shift(-1, 0)))
            }
            _ => None,
        },
        LmTerm::Mu(body) => match &**body {
            LmTerm::SApp(m, StreamRef::Bound(0)) if !m.has_loose_stream(0) => {
                Some((RuleName::EtaS, m.shift(0, -1)))
            }
            _ => None,
        },
        LmTerm::Var(_) | LmTerm::Bound(_) => None,
    }
}

fn step_rec(t: &LmTerm, rules: RuleSet, path: &mut Vec<u8>) -> Option<(RuleName, LmTerm)> {
    if let Some(r) = contract_root(t, rules) {
        return Some(r);
    }
    match t {
        LmTerm::Var(_) | LmTerm::Bound(_) => None,
        LmTerm::Lam(b) => {
            path.push(0);
            let r = step_rec(b, rules, path).map(|(rule, b)| (rule, LmTerm::Lam(Box::new(b))));
            if r.is_none() {
                path.pop();
            }
            r
        }
        LmTerm::Mu(b) => {
            path.push(0);
            let r = step_rec(b, rules, path).map(|(rule, b)| (rule, LmTerm::Mu(Box::new(b))));
            if r.is_none() {
                path.pop();
            }
            r
        }
        LmTerm::App(f, a) => {
            path.push(0);
            if let Some((rule, f)) = step_rec(f, rules, path) {
                return Some((rule, LmTerm::App(Box::new(f), a.clone())));
            }
            path.pop();
            path.push(1);
            if let Some((rule, a)) = step_rec(a, rules, path) {
                return Some((rule, LmTerm::App(f.clone(), Box::new(a))));
            }
            path.pop();
            None
        }
        LmTerm::SApp(f, s) => {
            path.push(0);
            let r = step_rec(f, rules, path)
                .map(|(rule, f)| (rule, LmTerm::SApp(Box::new(f), s.clone())));
            if r.is_none() {
                path.pop();
            }
            r
        }
    }
}

/// One leftmost-outermost step with the default rules (β_T, β_S, μ, η_T,
/// η_S). `None` iff `m` is a normal form.
pub fn step(m: &LmTerm) -> Option<(RuleName, LmTerm)> {
    step_with(m, RuleSet::Mu).map(|r| (r.rule, r.term))
}

pub fn step_with(m: &LmTerm, rules: RuleSet) -> Option<LmRedex> {
    let mut path = Vec::new();
    step_rec(m, rules, &mut path).map(|(rule, term)| LmRedex {
        rule,
        position: Position(path),
        term,
    })
}

/// Every redex of `m`, in leftmost-outermost order, each contracted in
/// the whole term.
pub fn redexes(m: &LmTerm, rules: RuleSet) -> Vec<LmRedex> {
    fn walk(t: &LmTerm, rules: RuleSet, path: &mut Vec<u8>, out: &mut Vec<(RuleName, Vec<u8>)>) {
        if let Some((rule, _)) = contract_root(t, rules) {
            out.push((rule, path.clone()));
        }
        let children: Vec<&LmTerm> = match t {
            LmTerm::Var(_) | LmTerm::Bound(_) => vec![],
            LmTerm::Lam(b) | LmTerm::Mu(b) => vec![b],
            LmTerm::App(f, a) => vec![f, a],
            LmTerm::SApp(f, _) => vec![f],
        };
        for (i, c) in children.into_iter().enumerate() {
            path.push(i as u8);
            walk(c, rules, path, out);
            path.pop();
        }
    }
    let mut found = Vec::new();
    walk(m, rules, &mut Vec::new(), &mut found);
    found
        .into_iter()
        .map(|(rule, path)| {
            let position = Position(path);
            let term = contract_at(m, &position, rule, rules).expect("redex found by walk");
            LmRedex { rule, position, term }
        })
        .collect()
}

/// Re-contracts the redex at `pos`, checking that `rule` is the axiom that
/// matches there. Used to replay and audit traces.
pub fn contract_at(t: &LmTerm, pos: &Position, rule: RuleName, rules: RuleSet) -> Option<LmTerm> {
    fn go(t: &LmTerm, pos: &[u8], rule: RuleName, rules: RuleSet) -> Option<LmTerm> {
        let Some((&d, rest)) = pos.split_first() else {
            return match contract_root(t, rules) {
                Some((r, out)) if r == rule => Some(out),
                _ => None,
            };
        };
        match (t, d) {
            (LmTerm::Lam(b), 0) => go(b, rest, rule, rules).map(|b| LmTerm::Lam(Box::new(b))),
            (LmTerm::Mu(b), 0) => go(b, rest, rule, rules).map(|b| LmTerm::Mu(Box::new(b))),
            (LmTerm::App(f, a), 0) => {
                go(f, rest, rule, rules).map(|f| LmTerm::App(Box::new(f), a.clone()))
            }
            (LmTerm::App(f, a), 1) => {
                go(a, rest, rule, rules).map(|a| LmTerm::App(f.clone(), Box::new(a)))
            }
            (LmTerm::SApp(f, s), 0) => {
                go(f, rest, rule, rules).map(|f| LmTerm::SApp(Box::new(f), s.clone()))
            }
            _ => None,
        }
    }
    go(t, &pos.0, rule, rules)
}

/// Result of budgeted normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmNormalization {
    pub term: LmTerm,
    pub trace: Trace<RuleName, LmTerm>,
    /// The step or size bound was hit before reaching a normal form.
    pub exhausted: bool,
}

pub fn normalize(m: &LmTerm, budget: Budget) -> LmNormalization {
    normalize_with(m, budget, RuleSet::Mu)
}

pub fn normalize_with(m: &LmTerm, budget: Budget, rules: RuleSet) -> LmNormalization {
    let mut trace = Trace::default();
    let mut cur = m.clone();
    let mut exhausted = false;
    loop {
        if cur.size() > budget.max_term_size() {
            exhausted = true;
            break;
        }
        let Some(redex) = step_with(&cur, rules) else { break };
        if trace.steps.len() == budget.max_steps() {
            exhausted = true;
            break;
        }
        cur = redex.term.clone();
        trace.steps.push(TraceStep {
            rule: redex.rule,
            position: redex.position,
            term: redex.term,
        });
    }
    LmNormalization { term: cur, trace, exhausted }
}

/// Normalization without a trace. Returns the final term, whether a bound
/// was hit, and the number of steps taken (at most `max_steps`).
pub(crate) fn normalize_quiet(
    m: &LmTerm,
    max_steps: usize,
    max_size: usize,
    rules: RuleSet,
) -> (LmTerm, bool, usize) {
    let mut cur = m.clone();
    let mut steps = 0;
    loop {
        if cur.size() > max_size {
            return (cur, true, steps);
        }
        let Some(redex) = step_with(&cur, rules) else {
            return (cur, false, steps);
        };
        if steps == max_steps {
            return (cur, true, steps);
        }
        cur = redex.term;
        steps += 1;
    }
}
