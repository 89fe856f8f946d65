//! Stream combinatory algebras, meaning functions and sampled law checks.
//!
//! Equality in an algebra may be partial, so every check is three-valued
//! and the reports count `Unknown` outcomes separately. The samplers only
//! ever refute: a clean report reads "no counterexample found in n samples".

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::budget::Budget;
use crate::gen::Gen;
use crate::lm::{LmTerm, StreamVar, TermVar};
use crate::scl::{scl_equal, SclConst, SclStream, SclTerm};
use crate::translate::to_scl;
use crate::verdict::Verdict;

/// Result of trying to split a stream element as `d :: s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition<D, S> {
    Cons(D, S),
    NotCons,
    Unknown,
}

/// `⟨D, S, ·, ⋆, ::⟩` with the seven distinguished elements.
pub trait StreamCombinatoryAlgebra {
    type Elem: Clone + fmt::Debug;
    type Stream: Clone + fmt::Debug;

    fn app(&self, d: &Self::Elem, e: &Self::Elem) -> Self::Elem;
    fn sapp(&self, d: &Self::Elem, s: &Self::Stream) -> Self::Elem;
    fn cons(&self, d: &Self::Elem, s: &Self::Stream) -> Self::Stream;
    fn constant(&self, c: SclConst) -> Self::Elem;
    fn elem_eq(&self, d: &Self::Elem, e: &Self::Elem) -> Verdict;
    fn stream_eq(&self, s: &Self::Stream, t: &Self::Stream) -> Verdict;
    /// Inverse of `cons`, where the algebra can tell.
    fn uncons(&self, s: &Self::Stream) -> Decomposition<Self::Elem, Self::Stream>;
}

/// `ρ, θ`: finite maps from term and stream variables.
#[derive(Clone, Debug)]
pub struct Valuation<D, S> {
    pub rho: BTreeMap<TermVar, D>,
    pub theta: BTreeMap<StreamVar, S>,
}

impl<D, S> Default for Valuation<D, S> {
    fn default() -> Self {
        Valuation { rho: BTreeMap::new(), theta: BTreeMap::new() }
    }
}

impl<D: Clone, S: Clone> Valuation<D, S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// `ρ[x ↦ d]`
    pub fn with_term(&self, x: TermVar, d: D) -> Self {
        let mut v = self.clone();
        v.rho.insert(x, d);
        v
    }

    /// `θ[α ↦ s]`
    pub fn with_stream(&self, a: StreamVar, s: S) -> Self {
        let mut v = self.clone();
        v.theta.insert(a, s);
        v
    }
}

/// Maps every variable of the sampling pools to `d` or `s`.
pub fn pool_valuation<D: Clone, S: Clone>(d: D, s: S) -> Valuation<D, S> {
    Valuation {
        rho: crate::gen::TERM_POOL.iter().map(|x| (TermVar::new(x), d.clone())).collect(),
        theta: crate::gen::STREAM_POOL.iter().map(|a| (StreamVar::new(a), s.clone())).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("the valuation does not cover term variable {0}")]
    UnboundTermVar(TermVar),
    #[error("the valuation does not cover stream variable {0}")]
    UnboundStreamVar(StreamVar),
}

fn check_covered<D, S>(
    (ts, ss): (std::collections::BTreeSet<TermVar>, std::collections::BTreeSet<StreamVar>),
    v: &Valuation<D, S>,
) -> Result<(), InterpError> {
    if let Some(x) = ts.into_iter().find(|x| !v.rho.contains_key(x)) {
        return Err(InterpError::UnboundTermVar(x));
    }
    if let Some(a) = ss.into_iter().find(|a| !v.theta.contains_key(a)) {
        return Err(InterpError::UnboundStreamVar(a));
    }
    Ok(())
}

/// `⟦T⟧ρθ`
pub fn interp_term<A: StreamCombinatoryAlgebra>(
    t: &SclTerm,
    v: &Valuation<A::Elem, A::Stream>,
    alg: &A,
) -> Result<A::Elem, InterpError> {
    check_covered(t.free_vars(), v)?;
    Ok(eval_term(t, v, alg))
}

/// `⟦S⟧ρθ`
pub fn interp_stream<A: StreamCombinatoryAlgebra>(
    s: &SclStream,
    v: &Valuation<A::Elem, A::Stream>,
    alg: &A,
) -> Result<A::Stream, InterpError> {
    check_covered(s.free_vars(), v)?;
    Ok(eval_stream(s, v, alg))
}

/// `⟦M⟧ρθ`, taken to be `⟦M*⟧ρθ`.
pub fn interp_lm<A: StreamCombinatoryAlgebra>(
    m: &LmTerm,
    v: &Valuation<A::Elem, A::Stream>,
    alg: &A,
) -> Result<A::Elem, InterpError> {
    interp_term(&to_scl(m), v, alg)
}

fn eval_term<A: StreamCombinatoryAlgebra>(
    t: &SclTerm,
    v: &Valuation<A::Elem, A::Stream>,
    alg: &A,
) -> A::Elem {
    match t {
        SclTerm::Const(c) => alg.constant(*c),
        SclTerm::Var(x) => v.rho[x].clone(),
        SclTerm::App(f, u) => alg.app(&eval_term(f, v, alg), &eval_term(u, v, alg)),
        SclTerm::SApp(f, s) => alg.sapp(&eval_term(f, v, alg), &eval_stream(s, v, alg)),
    }
}

fn eval_stream<A: StreamCombinatoryAlgebra>(
    s: &SclStream,
    v: &Valuation<A::Elem, A::Stream>,
    alg: &A,
) -> A::Stream {
    match s {
        SclStream::Var(a) => v.theta[a].clone(),
        SclStream::Cons(t, rest) => alg.cons(&eval_term(t, v, alg), &eval_stream(rest, v, alg)),
    }
}

/// The term model: SCL terms and streams modulo `=SCL`, with
/// representatives stored as terms and equality decided by [`scl_equal`].
#[derive(Clone, Copy, Debug, Default)]
pub struct TermModel {
    pub budget: Budget,
}

impl TermModel {
    pub fn new(budget: Budget) -> TermModel {
        TermModel { budget }
    }

    /// The canonical valuation `ρ(x) = [x]`, `θ(α) = [α]` on the given
    /// variables.
    pub fn canonical_valuation<'a>(
        terms: impl IntoIterator<Item = &'a TermVar>,
        streams: impl IntoIterator<Item = &'a StreamVar>,
    ) -> Valuation<SclTerm, SclStream> {
        Valuation {
            rho: terms.into_iter().map(|x| (x.clone(), SclTerm::Var(x.clone()))).collect(),
            theta: streams.into_iter().map(|a| (a.clone(), SclStream::Var(a.clone()))).collect(),
        }
    }

    /// Canonical valuation covering the free variables of `m`.
    pub fn canonical_for_lm(m: &LmTerm) -> Valuation<SclTerm, SclStream> {
        let (ts, ss) = m.free_vars();
        Self::canonical_valuation(&ts, &ss)
    }
}

impl StreamCombinatoryAlgebra for TermModel {
    type Elem = SclTerm;
    type Stream = SclStream;

    fn app(&self, d: &SclTerm, e: &SclTerm) -> SclTerm {
        SclTerm::app(d.clone(), e.clone())
    }

    fn sapp(&self, d: &SclTerm, s: &SclStream) -> SclTerm {
        SclTerm::sapp(d.clone(), s.clone())
    }

    fn cons(&self, d: &SclTerm, s: &SclStream) -> SclStream {
        SclStream::cons(d.clone(), s.clone())
    }

    fn constant(&self, c: SclConst) -> SclTerm {
        SclTerm::Const(c)
    }

    fn elem_eq(&self, d: &SclTerm, e: &SclTerm) -> Verdict {
        scl_equal(d, e, self.budget).verdict()
    }

    /// Streams are compared through a probe: `S = S'` iff `z⋆S = z⋆S'`
    /// for a variable `z` that occurs in neither.
    fn stream_eq(&self, s: &SclStream, t: &SclStream) -> Verdict {
        let z = SclTerm::var("%probe");
        scl_equal(&SclTerm::sapp(z.clone(), s.clone()), &SclTerm::sapp(z, t.clone()), self.budget)
            .verdict()
    }

    fn uncons(&self, s: &SclStream) -> Decomposition<SclTerm, SclStream> {
        match s {
            SclStream::Cons(h, t) => Decomposition::Cons((**h).clone(), (**t).clone()),
            // a variable stream is never =SCL to a cons
            SclStream::Var(_) => Decomposition::NotCons,
        }
    }
}

/// The one-point algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrivialAlgebra;

impl StreamCombinatoryAlgebra for TrivialAlgebra {
    type Elem = ();
    type Stream = ();

    fn app(&self, _: &(), _: &()) {}
    fn sapp(&self, _: &(), _: &()) {}
    fn cons(&self, _: &(), _: &()) {}
    fn constant(&self, _: SclConst) {}

    fn elem_eq(&self, _: &(), _: &()) -> Verdict {
        Verdict::Equal
    }

    fn stream_eq(&self, _: &(), _: &()) -> Verdict {
        Verdict::Equal
    }

    fn uncons(&self, _: &()) -> Decomposition<(), ()> {
        Decomposition::Cons((), ())
    }
}

/// Source of sample elements and streams for an algebra.
pub trait Sampler<A: StreamCombinatoryAlgebra> {
    fn seed(&self) -> u64;
    fn element(&mut self, alg: &A) -> A::Elem;
    fn stream(&mut self, alg: &A) -> A::Stream;
}

/// Samples by interpreting seeded random SCL terms and streams under a
/// valuation that covers the generator's variable pools.
pub struct SclSampler<A: StreamCombinatoryAlgebra> {
    seed: u64,
    gen: Gen,
    measure: usize,
    valuation: Valuation<A::Elem, A::Stream>,
}

impl<A: StreamCombinatoryAlgebra> SclSampler<A> {
    /// `measure` bounds the size of the sampled syntax.
    pub fn new(seed: u64, measure: usize, valuation: Valuation<A::Elem, A::Stream>) -> Self {
        SclSampler { seed, gen: Gen::new(seed), measure, valuation }
    }
}

impl SclSampler<TermModel> {
    /// Samples for the term model under the canonical valuation.
    pub fn term_model(seed: u64, measure: usize) -> Self {
        let ts: Vec<_> = crate::gen::TERM_POOL.iter().map(TermVar::new).collect();
        let ss: Vec<_> = crate::gen::STREAM_POOL.iter().map(StreamVar::new).collect();
        Self::new(seed, measure, TermModel::canonical_valuation(&ts, &ss))
    }
}

impl<A: StreamCombinatoryAlgebra> Sampler<A> for SclSampler<A> {
    fn seed(&self) -> u64 {
        self.seed
    }

    fn element(&mut self, alg: &A) -> A::Elem {
        let t = self.gen.scl_term(self.measure);
        interp_term(&t, &self.valuation, alg).expect("valuation covers the pools")
    }

    fn stream(&mut self, alg: &A) -> A::Stream {
        let s = self.gen.scl_stream(self.measure);
        interp_stream(&s, &self.valuation, alg).expect("valuation covers the pools")
    }
}

/// Pass/fail/unknown tally for one law.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawCount {
    pub law: String,
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

impl LawCount {
    fn new(law: &str) -> Self {
        LawCount { law: law.to_string(), ..Default::default() }
    }

    fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Equal => self.pass += 1,
            Verdict::Distinct => self.fail += 1,
            Verdict::Unknown => self.unknown += 1,
        }
    }
}

/// A sampled check: header with seed and sample count, one row per law,
/// then free-form findings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub seed: u64,
    pub samples: usize,
    pub rows: Vec<LawCount>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.rows.iter().map(|r| r.fail).sum()
    }

    pub fn unknowns(&self) -> usize {
        self.rows.iter().map(|r| r.unknown).sum()
    }

    pub fn row(&self, law: &str) -> Option<&LawCount> {
        self.rows.iter().find(|r| r.law == law)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} seed={} n={}", self.check, self.seed, self.samples)?;
        writeln!(f, "law\tpass\tfail\tunknown")?;
        for r in &self.rows {
            writeln!(f, "{}\t{}\t{}\t{}", r.law, r.pass, r.fail, r.unknown)?;
        }
        for n in &self.notes {
            writeln!(f, "# {n}")?;
        }
        Ok(())
    }
}

pub const AXIOM_LAWS: [&str; 8] = ["K0", "K1", "S0", "S1", "C10", "C11", "W1", "cons"];

/// Evaluates the seven combinator laws and the stream applicative law on
/// `n` sampled tuples.
pub fn check_axioms<A, R>(alg: &A, sampler: &mut R, n: usize) -> Report
where
    A: StreamCombinatoryAlgebra,
    R: Sampler<A>,
{
    let mut rows: Vec<LawCount> = AXIOM_LAWS.iter().map(|l| LawCount::new(l)).collect();
    let k = |c| alg.constant(c);
    for _ in 0..n {
        let (d1, d2, d3) = (sampler.element(alg), sampler.element(alg), sampler.element(alg));
        let (s2, s3) = (sampler.stream(alg), sampler.stream(alg));
        let app = |a: &A::Elem, b: &A::Elem| alg.app(a, b);
        let sapp = |a: &A::Elem, s: &A::Stream| alg.sapp(a, s);

        let lhs = app(&app(&k(SclConst::K0), &d1), &d2);
        rows[0].record(alg.elem_eq(&lhs, &d1));

        let lhs = sapp(&app(&k(SclConst::K1), &d1), &s2);
        rows[1].record(alg.elem_eq(&lhs, &d1));

        let lhs = app(&app(&app(&k(SclConst::S0), &d1), &d2), &d3);
        let rhs = app(&app(&d1, &d3), &app(&d2, &d3));
        rows[2].record(alg.elem_eq(&lhs, &rhs));

        let lhs = sapp(&app(&app(&k(SclConst::S1), &d1), &d2), &s3);
        let rhs = app(&sapp(&d1, &s3), &sapp(&d2, &s3));
        rows[3].record(alg.elem_eq(&lhs, &rhs));

        let lhs = app(&sapp(&app(&k(SclConst::C10), &d1), &s2), &d3);
        let rhs = sapp(&app(&d1, &d3), &s2);
        rows[4].record(alg.elem_eq(&lhs, &rhs));

        let lhs = sapp(&sapp(&app(&k(SclConst::C11), &d1), &s2), &s3);
        let rhs = sapp(&sapp(&d1, &s3), &s2);
        rows[5].record(alg.elem_eq(&lhs, &rhs));

        let lhs = sapp(&app(&k(SclConst::W1), &d1), &s2);
        let rhs = sapp(&sapp(&d1, &s2), &s2);
        rows[6].record(alg.elem_eq(&lhs, &rhs));

        let lhs = sapp(&d1, &alg.cons(&d2, &s3));
        let rhs = sapp(&app(&d1, &d2), &s3);
        rows[7].record(alg.elem_eq(&lhs, &rhs));
    }
    let failing: Vec<_> = rows.iter().filter(|r| r.fail > 0).map(|r| r.law.clone()).collect();
    let notes = if failing.is_empty() {
        vec![format!("no counterexample found in {n} samples")]
    } else {
        vec![format!("laws refuted: {}", failing.join(" "))]
    };
    Report { check: "axioms".into(), seed: sampler.seed(), samples: n, rows, notes }
}

/// Outcome of probing one pair of elements for an extensionality violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// Some probe tells the elements apart, or they are equal.
    Consistent,
    /// Every probe agreed but the elements are distinct.
    Refuted,
    Unknown,
}

/// Compares `d` and `e` under `probes` sampled contexts mixing `·` and `⋆`
/// arguments (`[]·a`, `[]⋆s`, `[]·a⋆s`, `[]⋆s·a`), then compares them
/// directly.
pub fn extensional_probe<A, R>(
    alg: &A,
    d: &A::Elem,
    e: &A::Elem,
    sampler: &mut R,
    probes: usize,
) -> ProbeOutcome
where
    A: StreamCombinatoryAlgebra,
    R: Sampler<A>,
{
    let mut unknown = false;
    for i in 0..probes {
        let a = sampler.element(alg);
        let s = sampler.stream(alg);
        let apply = |x: &A::Elem| match i % 4 {
            0 => alg.app(x, &a),
            1 => alg.sapp(x, &s),
            2 => alg.sapp(&alg.app(x, &a), &s),
            _ => alg.app(&alg.sapp(x, &s), &a),
        };
        match alg.elem_eq(&apply(d), &apply(e)) {
            Verdict::Distinct => return ProbeOutcome::Consistent,
            Verdict::Unknown => unknown = true,
            Verdict::Equal => {}
        }
    }
    match alg.elem_eq(d, e) {
        Verdict::Equal => ProbeOutcome::Consistent,
        _ if unknown => ProbeOutcome::Unknown,
        Verdict::Distinct => ProbeOutcome::Refuted,
        Verdict::Unknown => ProbeOutcome::Unknown,
    }
}

/// Refutation search for extensionality over `n` sampled pairs, each
/// probed with 8 mixed contexts.
pub fn check_extensional<A, R>(alg: &A, sampler: &mut R, n: usize) -> Report
where
    A: StreamCombinatoryAlgebra,
    R: Sampler<A>,
{
    let mut row = LawCount::new("extensional");
    for _ in 0..n {
        let d = sampler.element(alg);
        let e = sampler.element(alg);
        match extensional_probe(alg, &d, &e, sampler, 8) {
            ProbeOutcome::Consistent => row.pass += 1,
            ProbeOutcome::Refuted => row.fail += 1,
            ProbeOutcome::Unknown => row.unknown += 1,
        }
    }
    let note = if row.fail == 0 {
        format!("no counterexample found in {n} samples")
    } else {
        format!("{} candidate counterexamples in {n} samples", row.fail)
    };
    Report {
        check: "extensional".into(),
        seed: sampler.seed(),
        samples: n,
        rows: vec![row],
        notes: vec![note],
    }
}

/// Sampled probe of whether `::` is a bijection `D × S → S`: injectivity
/// on sampled pairs and decomposability of sampled streams.
pub fn check_standard<A, R>(alg: &A, sampler: &mut R, n: usize) -> Report
where
    A: StreamCombinatoryAlgebra,
    R: Sampler<A>,
{
    let mut inj = LawCount::new("cons-injective");
    let mut surj = LawCount::new("cons-surjective");
    let mut first_undecomposable = None;
    for i in 0..n {
        let d = sampler.element(alg);
        let s = sampler.stream(alg);
        // reuse a component half of the time so that the antecedent can hold
        let d2 = if i % 2 == 0 { d.clone() } else { sampler.element(alg) };
        let s2 = if i % 4 < 2 { s.clone() } else { sampler.stream(alg) };
        match alg.stream_eq(&alg.cons(&d, &s), &alg.cons(&d2, &s2)) {
            Verdict::Distinct => inj.pass += 1,
            Verdict::Unknown => inj.unknown += 1,
            Verdict::Equal => {
                let v = and(alg.elem_eq(&d, &d2), alg.stream_eq(&s, &s2));
                inj.record(v);
            }
        }
        match alg.uncons(&s) {
            Decomposition::Cons(h, t) => surj.record(alg.stream_eq(&alg.cons(&h, &t), &s)),
            Decomposition::NotCons => {
                surj.fail += 1;
                first_undecomposable.get_or_insert(format!("{s:?}"));
            }
            Decomposition::Unknown => surj.unknown += 1,
        }
    }
    let mut notes = Vec::new();
    notes.push(if inj.fail == 0 {
        format!("cons injectivity: no counterexample found in {n} samples")
    } else {
        format!("cons injectivity: {} violations in {n} samples", inj.fail)
    });
    match first_undecomposable {
        Some(s) => notes.push(format!(
            "cons surjectivity fails: {} of {n} sampled streams are not of the form d :: s (first: {s}); the algebra is not standard",
            surj.fail
        )),
        None => notes.push(format!("cons surjectivity: no counterexample found in {n} samples")),
    }
    Report {
        check: "standard".into(),
        seed: sampler.seed(),
        samples: n,
        rows: vec![inj, surj],
        notes,
    }
}

fn and(a: Verdict, b: Verdict) -> Verdict {
    match (a, b) {
        (Verdict::Distinct, _) | (_, Verdict::Distinct) => Verdict::Distinct,
        (Verdict::Equal, Verdict::Equal) => Verdict::Equal,
        _ => Verdict::Unknown,
    }
}

/// `⟦M[x:=N]⟧ρθ = ⟦M⟧ρ[x↦⟦N⟧ρθ],θ`
pub fn coherence_term_subst<A: StreamCombinatoryAlgebra>(
    alg: &A,
    m: &LmTerm,
    x: &TermVar,
    n: &LmTerm,
    v: &Valuation<A::Elem, A::Stream>,
) -> Result<Verdict, InterpError> {
    let lhs = interp_lm(&crate::lm::subst_term(m, x, n), v, alg)?;
    let d = interp_lm(n, v, alg)?;
    let rhs = interp_lm(m, &v.with_term(x.clone(), d), alg)?;
    Ok(alg.elem_eq(&lhs, &rhs))
}

/// `⟦M[α:=β]⟧ρθ = ⟦M⟧ρ,θ[α↦θ(β)]`
pub fn coherence_stream_rename<A: StreamCombinatoryAlgebra>(
    alg: &A,
    m: &LmTerm,
    a: &StreamVar,
    b: &StreamVar,
    v: &Valuation<A::Elem, A::Stream>,
) -> Result<Verdict, InterpError> {
    let lhs = interp_lm(&crate::lm::rename_stream(m, a, b), v, alg)?;
    let sb = v.theta.get(b).cloned().ok_or_else(|| InterpError::UnboundStreamVar(b.clone()))?;
    let rhs = interp_lm(m, &v.with_stream(a.clone(), sb), alg)?;
    Ok(alg.elem_eq(&lhs, &rhs))
}

/// `⟦M[Pα:=PNα]⟧ρθ = ⟦M⟧ρ,θ[α↦⟦N⟧ρθ::θ(α)]`
pub fn coherence_struct_subst<A: StreamCombinatoryAlgebra>(
    alg: &A,
    m: &LmTerm,
    a: &StreamVar,
    n: &LmTerm,
    v: &Valuation<A::Elem, A::Stream>,
) -> Result<Verdict, InterpError> {
    let lhs = interp_lm(&crate::lm::struct_subst(m, a, n), v, alg)?;
    let d = interp_lm(n, v, alg)?;
    let sa = v.theta.get(a).cloned().ok_or_else(|| InterpError::UnboundStreamVar(a.clone()))?;
    let rhs = interp_lm(m, &v.with_stream(a.clone(), alg.cons(&d, &sa)), alg)?;
    Ok(alg.elem_eq(&lhs, &rhs))
}

/// `⟦λ*x.T⟧ρθ · d = ⟦T⟧ρ[x↦d],θ`
pub fn bracket_lam_law<A: StreamCombinatoryAlgebra>(
    alg: &A,
    x: &TermVar,
    t: &SclTerm,
    d: &A::Elem,
    v: &Valuation<A::Elem, A::Stream>,
) -> Result<Verdict, InterpError> {
    let lhs = alg.app(&interp_term(&crate::translate::lam_star(x, t), v, alg)?, d);
    let rhs = interp_term(t, &v.with_term(x.clone(), d.clone()), alg)?;
    Ok(alg.elem_eq(&lhs, &rhs))
}

/// `⟦μ*α.T⟧ρθ ⋆ s = ⟦T⟧ρ,θ[α↦s]`
pub fn bracket_mu_law<A: StreamCombinatoryAlgebra>(
    alg: &A,
    a: &StreamVar,
    t: &SclTerm,
    s: &A::Stream,
    v: &Valuation<A::Elem, A::Stream>,
) -> Result<Verdict, InterpError> {
    let lhs = alg.sapp(&interp_term(&crate::translate::mu_star(a, t), v, alg)?, s);
    let rhs = interp_term(t, &v.with_stream(a.clone(), s.clone()), alg)?;
    Ok(alg.elem_eq(&lhs, &rhs))
}
