//! Acceptance checks, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use lmu_core::algebra::{
    check_axioms, coherence_stream_rename, coherence_struct_subst, coherence_term_subst, interp_lm,
    SclSampler, TermModel, Valuation,
};
use lmu_core::gen::{Gen, STREAM_POOL, TERM_POOL};
use lmu_core::lm::{
    lm_equal, lm_equal_with, normalize, parse_lm, rename_stream, struct_subst, subst_term, LmTerm,
    RuleName, RuleSet, StreamVar, TermVar,
};
use lmu_core::scl::{scl_equal, scl_joinable, scl_normalize, SclConst, SclStream, SclTerm};
use lmu_core::stdlib::{hd_application, run_nth_demo, sample_elements};
use lmu_core::suites::{cons_clause_bodies, fst_mu_pairs, round_trip_terms, scl_pairs};
use lmu_core::translate::{
    lam_star_clauses, mu_star_clauses, to_lm, to_scl, to_scl_clauses, Clause,
};
use lmu_core::{Budget, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn hd_chains() -> Outcome {
    let start = Instant::now();
    let b = StreamVar::new("b");
    for n in 0..=4 {
        let elems = sample_elements(n + 1);
        let out = normalize(&hd_application(&elems, &b), Budget::default());
        ensure(!out.exhausted, || format!("n={n}: exhausted"))?;
        ensure(out.term == elems[0], || format!("n={n}: got {}", out.term))?;
        let mut counts = BTreeMap::new();
        for r in out.trace.rules() {
            *counts.entry(r).or_insert(0usize) += 1;
        }
        let mut want = BTreeMap::from([(RuleName::BetaT, 1), (RuleName::BetaS, 1)]);
        if n > 0 {
            want.insert(RuleName::Mu, n);
        }
        ensure(counts == want, || format!("n={n}: rules {counts:?}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("n = 0..4, rules {BetaT, Mu x n, BetaS}".into())
}

fn nth_demo() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for len in 1..=5 {
        let elems = sample_elements(len);
        for i in 0..len {
            let got = run_nth_demo(&elems, i, Budget::default())
                .map_err(|e| format!("len={len} i={i}: {e}"))?;
            ensure(got == elems[i], || format!("len={len} i={i}: got {got}"))?;
            cases += 1;
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("{cases}/{cases} cases in {:.2?}", start.elapsed()))
}

fn constructors(m: &LmTerm, out: &mut BTreeSet<&'static str>) {
    match m {
        LmTerm::Var(_) | LmTerm::Bound(_) => {
            out.insert("var");
        }
        LmTerm::Lam(b) => {
            out.insert("lam");
            constructors(b, out);
        }
        LmTerm::Mu(b) => {
            out.insert("mu");
            constructors(b, out);
        }
        LmTerm::App(f, a) => {
            out.insert("app");
            constructors(f, out);
            constructors(a, out);
        }
        LmTerm::SApp(f, _) => {
            out.insert("sapp");
            constructors(f, out);
        }
    }
}

fn round_trip() -> Outcome {
    let start = Instant::now();
    let b = Budget::default();
    let suite = round_trip_terms();
    ensure(suite.len() >= 25, || format!("only {} terms", suite.len()))?;
    let mut clauses = BTreeSet::new();
    let mut ctors = BTreeSet::new();
    for m in &suite {
        let (t, used) = to_scl_clauses(m);
        clauses.extend(used);
        constructors(m, &mut ctors);
        let v = lm_equal(&to_lm(&t), m, b).verdict();
        ensure(v == Verdict::Equal, || format!("{m}: {v}"))?;
    }
    let (x, a) = (TermVar::new("x"), StreamVar::new("a"));
    let bodies = cons_clause_bodies();
    for t in &bodies {
        let (l, used) = lam_star_clauses(&x, t);
        clauses.extend(used);
        let v = lm_equal(&to_lm(&l), &LmTerm::lam(&x, to_lm(t)), b).verdict();
        ensure(v == Verdict::Equal, || format!("lam* x. {t}: {v}"))?;
        let (u, used) = mu_star_clauses(&a, t);
        clauses.extend(used);
        let v = lm_equal(&to_lm(&u), &LmTerm::mu(&a, to_lm(t)), b).verdict();
        ensure(v == Verdict::Equal, || format!("mu* 'a. {t}: {v}"))?;
    }
    ensure(ctors.len() == 5, || format!("constructors covered: {ctors:?}"))?;
    ensure(clauses.len() == Clause::ALL.len(), || format!("clauses covered: {clauses:?}"))?;
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "{} terms + {} cons bodies, 5/5 constructors, {}/{} clauses",
        suite.len(),
        bodies.len(),
        clauses.len(),
        Clause::ALL.len()
    ))
}

fn bracket_laws() -> Outcome {
    let b = Budget::new(500, 100_000).unwrap();
    let mut g = Gen::new(4);
    let (mut resolved, mut total) = (0, 0);
    for _ in 0..200 {
        let x = g.term_var();
        let t = g.scl_term(12);
        let u = g.scl_term(6);
        let lhs = SclTerm::app(lmu_core::translate::lam_star(&x, &t), u.clone());
        let rhs = t.subst_term(&x, &u);
        total += 1;
        match scl_joinable(&lhs, &rhs, b) {
            Some(true) => resolved += 1,
            Some(false) => return Err(format!("lam* x={x:?}: {lhs} does not join {rhs}")),
            None => {}
        }

        let a = g.stream_var();
        let t = g.scl_term(12);
        let s = g.scl_stream(6);
        let lhs = SclTerm::sapp(lmu_core::translate::mu_star(&a, &t), s.clone());
        let rhs = t.subst_stream(&a, &s);
        total += 1;
        match scl_joinable(&lhs, &rhs, b) {
            Some(true) => resolved += 1,
            Some(false) => return Err(format!("mu* a={a:?}: {lhs} does not join {rhs}")),
            None => {}
        }
    }
    ensure(resolved * 100 >= total * 95, || format!("resolved {resolved}/{total}"))?;
    Ok(format!("{resolved}/{total} resolved within 500 steps, all joined"))
}

fn normalizes(m: &LmTerm) -> bool {
    !normalize(m, Budget::default()).exhausted
}

fn fresh_stream_for(m: &LmTerm, n: &LmTerm) -> StreamVar {
    let (_, s1) = m.free_vars();
    let (_, s2) = n.free_vars();
    (0..)
        .map(|i| StreamVar::new(format!("d{i}")))
        .find(|d| !s1.contains(d) && !s2.contains(d))
        .unwrap()
}

/// One instance of a Λμ axiom as (left, right).
fn lm_axiom_instance(g: &mut Gen, rule: RuleName) -> (LmTerm, LmTerm) {
    let m = g.lm_term(8);
    match rule {
        RuleName::BetaT => {
            let (x, n) = (g.term_var(), g.lm_term(5));
            let body = m.clone();
            (LmTerm::app(LmTerm::lam(&x, body), n.clone()), subst_term(&m, &x, &n))
        }
        RuleName::BetaS => {
            let (a, b) = (g.stream_var(), g.stream_var());
            (LmTerm::sapp(LmTerm::mu(&a, m.clone()), b.clone()), rename_stream(&m, &a, &b))
        }
        RuleName::EtaT => {
            let (ts, _) = m.free_vars();
            let x = (0..).map(|i| TermVar::new(format!("w{i}"))).find(|v| !ts.contains(v)).unwrap();
            (LmTerm::lam(&x, LmTerm::app(m.clone(), LmTerm::Var(x.clone()))), m)
        }
        RuleName::EtaS => {
            let a = fresh_stream_for(&m, &m);
            (LmTerm::mu(&a, LmTerm::sapp(m.clone(), a.clone())), m)
        }
        RuleName::Mu | RuleName::Fst => {
            let (a, n) = (g.stream_var(), g.lm_term(5));
            // variable convention: the binder must not capture N's free α
            let (a, m) = if n.has_free_stream(&a) {
                let d = fresh_stream_for(&m, &n);
                (d.clone(), rename_stream(&m, &a, &d))
            } else {
                (a, m)
            };
            let lhs = LmTerm::app(LmTerm::mu(&a, m.clone()), n.clone());
            (lhs, LmTerm::mu(&a, struct_subst(&m, &a, &n)))
        }
    }
}

/// One instance of an SCL axiom as (left, right).
fn scl_axiom_instance(g: &mut Gen, law: usize) -> (SclTerm, SclTerm) {
    let k = SclTerm::Const;
    let app = SclTerm::app;
    let sapp = SclTerm::sapp;
    let (d1, d2, d3) = (g.scl_term(5), g.scl_term(5), g.scl_term(5));
    let (s2, s3) = (g.scl_stream(5), g.scl_stream(5));
    match law {
        0 => (app(app(k(SclConst::K0), d1.clone()), d2), d1),
        1 => (sapp(app(k(SclConst::K1), d1.clone()), s2), d1),
        2 => (
            app(app(app(k(SclConst::S0), d1.clone()), d2.clone()), d3.clone()),
            app(app(d1, d3.clone()), app(d2, d3)),
        ),
        3 => (
            sapp(app(app(k(SclConst::S1), d1.clone()), d2.clone()), s3.clone()),
            app(sapp(d1, s3.clone()), sapp(d2, s3)),
        ),
        4 => (
            app(sapp(app(k(SclConst::C10), d1.clone()), s2.clone()), d3.clone()),
            sapp(app(d1, d3), s2),
        ),
        5 => (
            sapp(sapp(app(k(SclConst::C11), d1.clone()), s2.clone()), s3.clone()),
            sapp(sapp(d1, s3), s2),
        ),
        6 => (sapp(app(k(SclConst::W1), d1.clone()), s2.clone()), sapp(sapp(d1, s2.clone()), s2)),
        _ => (sapp(d1.clone(), SclStream::cons(d2.clone(), s3.clone())), sapp(app(d1, d2), s3)),
    }
}

const SCL_LAWS: [&str; 8] = ["K0", "K1", "S0", "S1", "C10", "C11", "W1", "cons"];

/// Tallies one direction; Unknowns are retried under the thorough profile.
#[derive(Default)]
struct Tally {
    total: usize,
    unknown: usize,
    discarded: usize,
}

impl Tally {
    fn record(
        &mut self,
        label: &str,
        fast: Verdict,
        thorough: impl FnOnce() -> Verdict,
    ) -> Result<(), String> {
        self.total += 1;
        match fast {
            Verdict::Equal => Ok(()),
            Verdict::Distinct => Err(format!("{label}: Distinct")),
            Verdict::Unknown => {
                self.unknown += 1;
                let v = thorough();
                ensure(v == Verdict::Equal, || format!("{label}: {v} under thorough"))
            }
        }
    }

    fn rate_ok(&self) -> bool {
        self.unknown * 100 <= self.total * 5
    }
}

fn axiom_transport() -> Outcome {
    let mut g = Gen::new(5);
    let mut forward = Tally::default();
    for rule in [RuleName::BetaT, RuleName::BetaS, RuleName::EtaT, RuleName::EtaS, RuleName::Mu] {
        let mut kept = 0;
        while kept < 50 {
            let (l, r) = lm_axiom_instance(&mut g, rule);
            if !normalizes(&l) {
                forward.discarded += 1;
                continue;
            }
            kept += 1;
            let (tl, tr) = (to_scl(&l), to_scl(&r));
            let fast = scl_equal(&tl, &tr, Budget::FAST).verdict();
            forward.record(&format!("{rule}: {l} = {r}"), fast, || {
                scl_equal(&tl, &tr, Budget::THOROUGH).verdict()
            })?;
        }
    }
    let mut backward = Tally::default();
    for (law, name) in SCL_LAWS.iter().enumerate() {
        let mut kept = 0;
        while kept < 50 {
            let (l, r) = scl_axiom_instance(&mut g, law);
            let (ml, mr) = (to_lm(&l), to_lm(&r));
            if !normalizes(&ml) {
                backward.discarded += 1;
                continue;
            }
            kept += 1;
            let fast = lm_equal(&ml, &mr, Budget::FAST).verdict();
            backward.record(&format!("{name}: {l} = {r}"), fast, || {
                lm_equal(&ml, &mr, Budget::THOROUGH).verdict()
            })?;
        }
    }
    ensure(forward.rate_ok(), || format!("forward Unknown {}/{}", forward.unknown, forward.total))?;
    ensure(backward.rate_ok(), || {
        format!("backward Unknown {}/{}", backward.unknown, backward.total)
    })?;
    Ok(format!(
        "forward {} (unknown {}, discarded {}), backward {} (unknown {}, discarded {}), no Distinct",
        forward.total,
        forward.unknown,
        forward.discarded,
        backward.total,
        backward.unknown,
        backward.discarded
    ))
}

fn pool_valuation() -> Valuation<SclTerm, SclStream> {
    let ts: Vec<_> = TERM_POOL.iter().map(TermVar::new).collect();
    let ss: Vec<_> = STREAM_POOL.iter().map(StreamVar::new).collect();
    TermModel::canonical_valuation(&ts, &ss)
}

fn term_model_soundness() -> Outcome {
    let tm = TermModel::default();
    let mut sampler = SclSampler::term_model(6, 8);
    let report = check_axioms(&tm, &mut sampler, 100);
    ensure(report.failures() == 0, || format!("axioms:\n{report}"))?;

    let v = pool_valuation();
    let mut g = Gen::new(6);
    let mut counts = [0usize; 3];
    for (which, count) in counts.iter_mut().enumerate() {
        while *count < 100 {
            let m = g.lm_term(8);
            let n = g.lm_term(5);
            if !normalizes(&m) || !normalizes(&n) {
                continue;
            }
            let res = match which {
                0 => coherence_term_subst(&tm, &m, &g.term_var(), &n, &v),
                1 => coherence_stream_rename(&tm, &m, &g.stream_var(), &g.stream_var(), &v),
                _ => coherence_struct_subst(&tm, &m, &g.stream_var(), &n, &v),
            };
            let verdict = res.map_err(|e| e.to_string())?;
            let label = ["term-subst", "stream-rename", "struct-subst"][which];
            ensure(verdict == Verdict::Equal, || format!("{label}: M={m} N={n}: {verdict}"))?;
            *count += 1;
        }
    }
    Ok(format!(
        "axioms: 0 failures, {} unknown on 100 samples; coherence 3 x 100 Equal",
        report.unknowns()
    ))
}

fn consistency() -> Outcome {
    let t = parse_lm("\\x y. x").unwrap();
    let f = parse_lm("\\x y. y").unwrap();
    let v = lm_equal(&t, &f, Budget::default()).verdict();
    ensure(v == Verdict::Distinct, || format!("lm_equal: {v}"))?;
    let tm = TermModel::default();
    let val = Valuation::new();
    let dt = interp_lm(&t, &val, &tm).map_err(|e| e.to_string())?;
    let df = interp_lm(&f, &val, &tm).map_err(|e| e.to_string())?;
    let v = lmu_core::algebra::StreamCombinatoryAlgebra::elem_eq(&tm, &dt, &df);
    ensure(v == Verdict::Distinct, || format!("term model: {v}"))?;
    Ok(format!("lm_equal Distinct; term model {dt} vs {df} Distinct"))
}

fn fst_mu() -> Outcome {
    let pairs = fst_mu_pairs();
    ensure(pairs.len() >= 20, || format!("only {} pairs", pairs.len()))?;
    for (m, n, want) in &pairs {
        let mu = lm_equal_with(m, n, Budget::default(), RuleSet::Mu).verdict();
        let fst = lm_equal_with(m, n, Budget::default(), RuleSet::Fst).verdict();
        ensure(mu == fst && mu == *want, || {
            format!("{m} vs {n}: mu {mu}, fst {fst}, expected {want}")
        })?;
    }
    Ok(format!("{} pairs agree", pairs.len()))
}

/// The text `reduce` and `eq` would print for every suite input.
fn transcript() -> String {
    let b = Budget::default();
    let mut out = String::new();
    let mut lm_inputs = round_trip_terms();
    for (m, n, _) in fst_mu_pairs() {
        lm_inputs.push(m.clone());
        out.push_str(&format!("eq {m} | {n}: {:?}\n", lm_equal(&m, &n, b)));
    }
    for m in &lm_inputs {
        let r = normalize(m, b);
        out.push_str(&format!("reduce {m}\n{}{} {}\n", r.trace.to_text(), r.term, r.exhausted));
    }
    for (t, u, _) in scl_pairs() {
        let r = scl_normalize(&t, b);
        out.push_str(&format!("reduce {t}\n{}{} {}\n", r.trace.to_text(), r.term, r.exhausted));
        out.push_str(&format!("eq {t} | {u}: {:?}\n", scl_equal(&t, &u, b)));
    }
    out
}

fn determinism() -> Outcome {
    let runs: Vec<String> = (0..3).map(|_| transcript()).collect();
    ensure(runs.iter().all(|r| r == &runs[0]), || "transcripts differ".into())?;
    Ok(format!("3 runs, {} bytes each, identical", runs[0].len()))
}

fn run_all() -> bool {
    let criteria: [Criterion; 9] = [
        ("hd derivation", hd_chains),
        ("nth demo", nth_demo),
        ("round trip", round_trip),
        ("bracket beta laws", bracket_laws),
        ("axiom transport", axiom_transport),
        ("term-model soundness", term_model_soundness),
        ("consistency", consistency),
        ("fst/mu agreement", fst_mu),
        ("determinism", determinism),
    ];
    let mut ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let t = start.elapsed();
        match res {
            Ok(detail) => println!("criterion {} ({name}): PASS [{t:.2?}] {detail}", i + 1),
            Err(why) => {
                ok = false;
                println!("criterion {} ({name}): FAIL [{t:.2?}] {why}", i + 1);
            }
        }
    }
    ok
}

fn main() {
    let ok =
        std::thread::Builder::new().stack_size(256 << 20).spawn(run_all).unwrap().join().unwrap();
    if !ok {
        std::process::exit(1);
    }
}
