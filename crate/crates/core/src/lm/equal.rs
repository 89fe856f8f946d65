//! Budgeted convertibility for `=Λμ`.
//!
//! Both sides are normalized first. Alpha-equal normal forms are `Equal`.
//! Otherwise the normal forms are compared extensionally, Böhm-tree style:
//!
//! * if either side is a λ, both are applied to a fresh term variable;
//! * else if either side is a μ, both are applied to a fresh stream variable;
//! * a head `(λx.B) γ ...` that is stuck on a stream variable is unstuck by
//!   splitting `γ` into `z :: γ'` on both sides (`M[Pγ:=Pzγ']`);
//! * two neutral terms are equal iff their head variables agree and their
//!   arguments are pairwise equal.
//!
//! Every transformation preserves and reflects `=Λμ` (η_T, η_S and (fst)
//! justify the expansions), so disagreeing heads certify `Distinct` for
//! normal forms. The plain normal-form comparison is not enough on its
//! own: `λz.(μα.x)z` has the two normal forms `μα.x` and `λz.μα.x`.

use super::rewrite::{normalize_quiet, RuleSet};
use super::term::{Arg, LmTerm, StreamRef, StreamVar, TermVar};
use crate::budget::Budget;
use crate::verdict::EqVerdict;

pub fn lm_equal(m: &LmTerm, n: &LmTerm, budget: Budget) -> EqVerdict<LmTerm> {
    lm_equal_with(m, n, budget, RuleSet::Mu)
}

pub fn lm_equal_with(m: &LmTerm, n: &LmTerm, budget: Budget, rules: RuleSet) -> EqVerdict<LmTerm> {
    let (nm, ex, _) = normalize_quiet(m, budget.max_steps(), budget.max_term_size(), rules);
    if ex {
        return EqVerdict::Unknown;
    }
    let (nn, ex, _) = normalize_quiet(n, budget.max_steps(), budget.max_term_size(), rules);
    if ex {
        return EqVerdict::Unknown;
    }
    if nm == nn {
        return EqVerdict::Equal(nm, nn);
    }
    let mut cmp =
        Comparator { fuel: budget.max_steps(), max_size: budget.max_term_size(), rules, fresh: 0 };
    match cmp.run(nm.clone(), nn.clone()) {
        Outcome::Same => EqVerdict::Equal(nm, nn),
        Outcome::Differ => EqVerdict::Distinct(nm, nn),
        Outcome::OutOfFuel => EqVerdict::Unknown,
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    Same,
    Differ,
    OutOfFuel,
}

struct OutOfFuel;

struct Comparator {
    fuel: usize,
    max_size: usize,
    rules: RuleSet,
    fresh: usize,
}

impl Comparator {
    // '%' cannot appear in parsed names, so these never clash.
    fn fresh_term(&mut self) -> TermVar {
        self.fresh += 1;
        TermVar::new(format!("%z{}", self.fresh))
    }

    fn fresh_stream(&mut self) -> StreamVar {
        self.fresh += 1;
        StreamVar::new(format!("%g{}", self.fresh))
    }

    fn norm(&mut self, t: &LmTerm) -> Result<LmTerm, OutOfFuel> {
        let (out, exhausted, used) = normalize_quiet(t, self.fuel, self.max_size, self.rules);
        self.fuel -= used;
        if exhausted {
            return Err(OutOfFuel);
        }
        Ok(out)
    }

    fn run(&mut self, a: LmTerm, b: LmTerm) -> Outcome {
        let mut pending = vec![(a, b)];
        while let Some((a, b)) = pending.pop() {
            if a == b {
                continue;
            }
            if self.fuel == 0 {
                return Outcome::OutOfFuel;
            }
            self.fuel -= 1;
            match self.compare(a, b, &mut pending) {
                Ok(true) => {}
                Ok(false) => return Outcome::Differ,
                Err(OutOfFuel) => return Outcome::OutOfFuel,
            }
        }
        Outcome::Same
    }

    /// Handles one pair of normal forms; `Ok(false)` means they differ.
    fn compare(
        &mut self,
        a: LmTerm,
        b: LmTerm,
        pending: &mut Vec<(LmTerm, LmTerm)>,
    ) -> Result<bool, OutOfFuel> {
        let is_lam = |t: &LmTerm| matches!(t, LmTerm::Lam(_));
        let is_mu = |t: &LmTerm| matches!(t, LmTerm::Mu(_));

        if is_lam(&a) || is_lam(&b) {
            let z = LmTerm::Var(self.fresh_term());
            let a = self.norm(&LmTerm::app(a, z.clone()))?;
            let b = self.norm(&LmTerm::app(b, z))?;
            pending.push((a, b));
            return Ok(true);
        }
        if is_mu(&a) || is_mu(&b) {
            let g = self.fresh_stream();
            let a = self.norm(&LmTerm::sapp(a, g.clone()))?;
            let b = self.norm(&LmTerm::sapp(b, g))?;
            pending.push((a, b));
            return Ok(true);
        }

        if let Some(g) = stuck_stream(&a).or_else(|| stuck_stream(&b)) {
            let z = LmTerm::Var(self.fresh_term());
            let tail = StreamRef::Free(self.fresh_stream());
            let target = StreamRef::Free(g);
            let a = self.norm(&a.replace_stream_apps(&target, std::slice::from_ref(&z), &tail))?;
            let b = self.norm(&b.replace_stream_apps(&target, std::slice::from_ref(&z), &tail))?;
            pending.push((a, b));
            return Ok(true);
        }

        let (ha, args_a) = a.spine();
        let (hb, args_b) = b.spine();
        if ha != hb || args_a.len() != args_b.len() {
            return Ok(false);
        }
        let mut sub = Vec::new();
        for (x, y) in args_a.iter().zip(&args_b) {
            match (x, y) {
                (Arg::Stream(s), Arg::Stream(t)) if s == t => {}
                (Arg::Term(s), Arg::Term(t)) => sub.push(((*s).clone(), (*t).clone())),
                _ => return Ok(false),
            }
        }
        // keep left-to-right processing order on the stack
        pending.extend(sub.into_iter().rev());
        Ok(true)
    }
}

/// For a normal form whose head is a λ applied to a stream variable, that
/// variable.
fn stuck_stream(t: &LmTerm) -> Option<StreamVar> {
    let (head, args) = t.spine();
    match (head, args.first()) {
        (LmTerm::Lam(_), Some(Arg::Stream(StreamRef::Free(g)))) => Some(g.clone()),
        _ => None,
    }
}
