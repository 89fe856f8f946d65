//! The SCL axioms as a rewrite system.
//!
//! Rewriting is modulo the cons law: the stream slot of a combinator
//! pattern matches a run `·A1 ... ·An ⋆S` of spine arguments and binds the
//! stream `A1 :: ... :: An :: S`. Without this, `K1·x⋆(y::α)` would be
//! stuck after the cons step produced `K1·x·y⋆α`. At a single node the cons
//! law is tried before the combinator rules, so normal forms contain no
//! `::` at all.

use std::fmt;

use super::term::{SclArg, SclConst, SclStream, SclTerm};
use crate::budget::Budget;
use crate::trace::{Position, Trace, TraceStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SclRule {
    K0,
    K1,
    S0,
    S1,
    C10,
    C11,
    W1,
    /// `T1⋆(T2::S3) → T1·T2⋆S3`
    Cons,
}

impl SclRule {
    pub const ALL: [SclRule; 8] = [
        SclRule::K0,
        SclRule::K1,
        SclRule::S0,
        SclRule::S1,
        SclRule::C10,
        SclRule::C11,
        SclRule::W1,
        SclRule::Cons,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SclRule::K0 => "K0",
            SclRule::K1 => "K1",
            SclRule::S0 => "S0",
            SclRule::S1 => "S1",
            SclRule::C10 => "C10",
            SclRule::C11 => "C11",
            SclRule::W1 => "W1",
            SclRule::Cons => "Cons",
        }
    }

    fn of_const(c: SclConst) -> SclRule {
        match c {
            SclConst::K0 => SclRule::K0,
            SclConst::K1 => SclRule::K1,
            SclConst::S0 => SclRule::S0,
            SclConst::S1 => SclRule::S1,
            SclConst::C10 => SclRule::C10,
            SclConst::C11 => SclRule::C11,
            SclConst::W1 => SclRule::W1,
        }
    }
}

impl fmt::Display for SclRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Argument sorts of each combinator's left-hand side, in order.
fn pattern(c: SclConst) -> &'static [bool] {
    // true: term slot, false: stream slot
    match c {
        SclConst::K0 => &[true, true],
        SclConst::K1 => &[true, false],
        SclConst::S0 => &[true, true, true],
        SclConst::S1 => &[true, true, false],
        SclConst::C10 => &[true, false, true],
        SclConst::C11 => &[true, false, false],
        SclConst::W1 => &[true, false],
    }
}

/// Matches the whole spine of `t` against the pattern of its head
/// constant, returning the bound terms and streams in order.
fn match_combinator(t: &SclTerm) -> Option<(SclConst, Vec<SclTerm>, Vec<SclStream>)> {
    let (head, args) = t.spine();
    let SclTerm::Const(c) = head else { return None };
    let (mut terms, mut streams) = (Vec::new(), Vec::new());
    let mut i = 0;
    for &is_term in pattern(*c) {
        if is_term {
            let Some(SclArg::Term(u)) = args.get(i) else { return None };
            terms.push((*u).clone());
            i += 1;
        } else {
            let start = i;
            while let Some(SclArg::Term(_)) = args.get(i) {
                i += 1;
            }
            let Some(SclArg::Stream(s)) = args.get(i) else { return None };
            let items = args[start..i].iter().map(|a| match a {
                SclArg::Term(u) => (*u).clone(),
                SclArg::Stream(_) => unreachable!(),
            });
            streams.push(SclStream::prepend(items, (*s).clone()));
            i += 1;
        }
    }
    (i == args.len()).then_some((*c, terms, streams))
}

fn contract(c: SclConst, terms: Vec<SclTerm>, streams: Vec<SclStream>) -> SclTerm {
    use SclTerm as T;
    let mut t = terms.into_iter();
    let mut s = streams.into_iter();
    let mut t = move || t.next().expect("pattern arity");
    let mut s = move || s.next().expect("pattern arity");
    match c {
        SclConst::K0 | SclConst::K1 => t(),
        SclConst::S0 => {
            let (t1, t2, t3) = (t(), t(), t());
            T::app(T::app(t1, t3.clone()), T::app(t2, t3))
        }
        SclConst::S1 => {
            let (t1, t2, s3) = (t(), t(), s());
            T::app(T::sapp(t1, s3.clone()), T::sapp(t2, s3))
        }
        SclConst::C10 => {
            let (t1, t3, s2) = (t(), t(), s());
            T::sapp(T::app(t1, t3), s2)
        }
        SclConst::C11 => {
            let (t1, s2, s3) = (t(), s(), s());
            T::sapp(T::sapp(t1, s3), s2)
        }
        SclConst::W1 => {
            let (t1, s2) = (t(), s());
            T::sapp(T::sapp(t1, s2.clone()), s2)
        }
    }
}

fn contract_root(t: &SclTerm) -> Option<(SclRule, SclTerm)> {
    if let SclTerm::SApp(f, SclStream::Cons(h, rest)) = t {
        let out = SclTerm::sapp(SclTerm::app((**f).clone(), (**h).clone()), (**rest).clone());
        return Some((SclRule::Cons, out));
    }
    let (c, terms, streams) = match_combinator(t)?;
    Some((SclRule::of_const(c), contract(c, terms, streams)))
}

fn step_term(t: &SclTerm, path: &mut Vec<u8>) -> Option<(SclRule, SclTerm)> {
    if let Some(r) = contract_root(t) {
        return Some(r);
    }
    match t {
        SclTerm::Const(_) | SclTerm::Var(_) => None,
        SclTerm::App(f, u) => {
            path.push(0);
            if let Some((r, f2)) = step_term(f, path) {
                return Some((r, SclTerm::app(f2, (**u).clone())));
            }
            path.pop();
            path.push(1);
            if let Some((r, u2)) = step_term(u, path) {
                return Some((r, SclTerm::app((**f).clone(), u2)));
            }
            path.pop();
            None
        }
        SclTerm::SApp(f, s) => {
            path.push(0);
            if let Some((r, f2)) = step_term(f, path) {
                return Some((r, SclTerm::sapp(f2, s.clone())));
            }
            path.pop();
            path.push(1);
            if let Some((r, s2)) = step_stream(s, path) {
                return Some((r, SclTerm::sapp((**f).clone(), s2)));
            }
            path.pop();
            None
        }
    }
}

fn step_stream(s: &SclStream, path: &mut Vec<u8>) -> Option<(SclRule, SclStream)> {
    match s {
        SclStream::Var(_) => None,
        SclStream::Cons(h, rest) => {
            path.push(0);
            if let Some((r, h2)) = step_term(h, path) {
                return Some((r, SclStream::cons(h2, (**rest).clone())));
            }
            path.pop();
            path.push(1);
            if let Some((r, rest2)) = step_stream(rest, path) {
                return Some((r, SclStream::cons((**h).clone(), rest2)));
            }
            path.pop();
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SclRedex {
    pub rule: SclRule,
    pub position: Position,
    pub term: SclTerm,
}

/// One leftmost-outermost step; `None` iff `t` is a normal form.
pub fn scl_step(t: &SclTerm) -> Option<(SclRule, SclTerm)> {
    step_term(t, &mut Vec::new())
}

pub fn scl_step_at(t: &SclTerm) -> Option<SclRedex> {
    let mut path = Vec::new();
    let (rule, term) = step_term(t, &mut path)?;
    Some(SclRedex { rule, position: Position(path), term })
}

/// Contracts the redex of rule `rule` at `pos`, if there is one.
pub fn scl_contract_at(t: &SclTerm, pos: &Position, rule: SclRule) -> Option<SclTerm> {
    fn go_term(t: &SclTerm, pos: &[u8], rule: SclRule) -> Option<SclTerm> {
        match (pos.split_first(), t) {
            (None, _) => match contract_root(t) {
                Some((r, out)) if r == rule => Some(out),
                _ => None,
            },
            (Some((0, rest)), SclTerm::App(f, u)) => {
                Some(SclTerm::app(go_term(f, rest, rule)?, (**u).clone()))
            }
            (Some((1, rest)), SclTerm::App(f, u)) => {
                Some(SclTerm::app((**f).clone(), go_term(u, rest, rule)?))
            }
            (Some((0, rest)), SclTerm::SApp(f, s)) => {
                Some(SclTerm::sapp(go_term(f, rest, rule)?, s.clone()))
            }
            (Some((1, rest)), SclTerm::SApp(f, s)) => {
                Some(SclTerm::sapp((**f).clone(), go_stream(s, rest, rule)?))
            }
            _ => None,
        }
    }
    fn go_stream(s: &SclStream, pos: &[u8], rule: SclRule) -> Option<SclStream> {
        match (pos.split_first(), s) {
            (Some((0, rest)), SclStream::Cons(h, tl)) => {
                Some(SclStream::cons(go_term(h, rest, rule)?, (**tl).clone()))
            }
            (Some((1, rest)), SclStream::Cons(h, tl)) => {
                Some(SclStream::cons((**h).clone(), go_stream(tl, rest, rule)?))
            }
            _ => None,
        }
    }
    go_term(t, &pos.0, rule)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SclNormalization {
    pub term: SclTerm,
    pub trace: Trace<SclRule, SclTerm>,
    pub exhausted: bool,
}

/// Iterates [`scl_step`]. The size bound applies to the measure `|T|`.
pub fn scl_normalize(t: &SclTerm, budget: Budget) -> SclNormalization {
    let mut trace = Trace::default();
    let mut cur = t.clone();
    let mut exhausted = false;
    loop {
        if cur.measure() > budget.max_term_size() {
            exhausted = true;
            break;
        }
        let Some(redex) = scl_step_at(&cur) else { break };
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
    SclNormalization { term: cur, trace, exhausted }
}

/// Like [`scl_normalize`] without a trace: (result, exhausted, steps used).
pub(crate) fn scl_normalize_quiet(t: &SclTerm, budget: Budget) -> (SclTerm, bool, usize) {
    let mut cur = t.clone();
    let mut steps = 0;
    loop {
        if cur.measure() > budget.max_term_size() {
            return (cur, true, steps);
        }
        let Some((_, next)) = scl_step(&cur) else { return (cur, false, steps) };
        if steps == budget.max_steps() {
            return (cur, true, steps);
        }
        cur = next;
        steps += 1;
    }
}

/// Whether `t` and `u` rewrite to a common normal form within `budget`
/// each. `None` if either side runs out.
pub fn scl_joinable(t: &SclTerm, u: &SclTerm, budget: Budget) -> Option<bool> {
    let (a, ex_a, _) = scl_normalize_quiet(t, budget);
    if ex_a {
        return None;
    }
    let (b, ex_b, _) = scl_normalize_quiet(u, budget);
    if ex_b {
        return None;
    }
    Some(a == b)
}
