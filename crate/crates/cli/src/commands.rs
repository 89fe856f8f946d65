use std::io::Read;
use std::path::PathBuf;

use lmu_core::algebra::{
    check_axioms, check_extensional, check_standard, interp_lm, interp_term, pool_valuation,
    Report, SclSampler, TermModel, TrivialAlgebra, Valuation,
};
use lmu_core::lm::{lm_equal_with, normalize_with, parse_lm, print_lm, LmTerm, RuleSet};
use lmu_core::scl::{parse_scl, print_scl, scl_equal, scl_normalize, SclTerm};
use lmu_core::stdlib::{builtin, hd_application, nth_application, run_nth_demo, sample_elements};
use lmu_core::trace::Trace;
use lmu_core::translate::{to_lm, to_scl_clauses};
use lmu_core::{Budget, ParseError, Verdict};
use serde_json::json;

use crate::args::{
    file_calculus, Calculus, Command, Demo, EvalOpts, Model, Profile, Rules, Suite, TermInput,
    TraceFormat,
};
use crate::sexp;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Negative = 1,
    Usage = 2,
    Unknown = 3,
    Internal = 101,
}

impl From<Verdict> for Exit {
    fn from(v: Verdict) -> Exit {
        match v {
            Verdict::Equal => Exit::Ok,
            Verdict::Distinct => Exit::Negative,
            Verdict::Unknown => Exit::Unknown,
        }
    }
}

type Res<T> = Result<T, Exit>;

fn usage(msg: impl std::fmt::Display) -> Exit {
    eprintln!("error: {msg}");
    Exit::Usage
}

enum Term {
    Lm(LmTerm),
    Scl(SclTerm),
}

struct Source {
    origin: String,
    text: String,
    calculus: Calculus,
}

fn load(input: &str, calculus: Option<Calculus>) -> Res<Source> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(Source {
            origin: "<stdin>".into(),
            text,
            calculus: calculus.unwrap_or(Calculus::Lm),
        });
    }
    let path = PathBuf::from(input);
    if let Some(from_ext) = file_calculus(&path) {
        if path.is_file() {
            let text =
                std::fs::read_to_string(&path).map_err(|e| usage(format!("{input}: {e}")))?;
            return Ok(Source {
                origin: input.into(),
                text,
                calculus: calculus.unwrap_or(from_ext),
            });
        }
    }
    Ok(Source {
        origin: "<argument>".into(),
        text: input.into(),
        calculus: calculus.unwrap_or(Calculus::Lm),
    })
}

fn parse_error(src: &Source, e: ParseError) -> Exit {
    usage(format!("{}:{}:{}: {}", src.origin, e.line, e.column, e.message))
}

fn parse(src: &Source) -> Res<Term> {
    match src.calculus {
        Calculus::Lm => parse_lm(&src.text).map(Term::Lm).map_err(|e| parse_error(src, e)),
        Calculus::Scl => parse_scl(&src.text).map(Term::Scl).map_err(|e| parse_error(src, e)),
    }
}

fn load_term(input: &TermInput) -> Res<Term> {
    parse(&load(&input.input, input.calculus)?)
}

fn budget(opts: &EvalOpts) -> Res<Budget> {
    let base = match opts.budget_profile {
        Profile::Fast => Budget::FAST,
        Profile::Thorough => Budget::THOROUGH,
    };
    Budget::new(
        opts.max_steps.unwrap_or(base.max_steps()),
        opts.max_size.unwrap_or(base.max_term_size()),
    )
    .map_err(usage)
}

fn rules(opts: &EvalOpts) -> RuleSet {
    match opts.rules {
        Rules::Mu => RuleSet::Mu,
        Rules::Fst => RuleSet::Fst,
    }
}

pub fn run(cmd: Command) -> Exit {
    let res = match cmd {
        Command::Parse(input) => cmd_parse(&input),
        Command::Fmt(input) => cmd_fmt(&input),
        Command::Reduce { input, opts, trace } => cmd_reduce(&input, &opts, trace),
        Command::Eq { calculus, left, right, opts } => cmd_eq(calculus, &left, &right, &opts),
        Command::Translate { to_scl, to_lm: _, clauses, input } => {
            cmd_translate(to_scl, clauses, &input)
        }
        Command::Interp { input, model, opts } => cmd_interp(&input, model, &opts),
        Command::Check { model, suite, samples, seed, measure, opts } => {
            cmd_check(model, suite, samples, seed, measure, &opts)
        }
        Command::Demo { demo } => cmd_demo(demo),
    };
    res.unwrap_or_else(|e| e)
}

fn cmd_parse(input: &TermInput) -> Res<Exit> {
    match load_term(input)? {
        Term::Lm(m) => println!("{}", sexp::lm(&m)),
        Term::Scl(t) => println!("{}", sexp::scl(&t)),
    }
    Ok(Exit::Ok)
}

fn cmd_fmt(input: &TermInput) -> Res<Exit> {
    match load_term(input)? {
        Term::Lm(m) => println!("{}", print_lm(&m)),
        Term::Scl(t) => println!("{}", print_scl(&t)),
    }
    Ok(Exit::Ok)
}

fn emit_trace<R, T>(trace: &Trace<R, T>, last: &T, exhausted: bool, format: TraceFormat) -> Exit
where
    R: std::fmt::Display,
    T: std::fmt::Display,
{
    match format {
        TraceFormat::Text => {
            print!("{}", trace.to_text());
            println!("{last}");
        }
        TraceFormat::Structured => {
            let steps: Vec<_> = trace
                .steps
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    json!({
                        "k": k + 1,
                        "rule": s.rule.to_string(),
                        "position": s.position.to_string(),
                        "term": s.term.to_string(),
                    })
                })
                .collect();
            let doc = json!({ "steps": steps, "exhausted": exhausted, "final": last.to_string() });
            println!("{doc}");
        }
    }
    if exhausted {
        eprintln!("budget exhausted after {} steps", trace.steps.len());
        Exit::Unknown
    } else {
        Exit::Ok
    }
}

fn cmd_reduce(input: &TermInput, opts: &EvalOpts, format: TraceFormat) -> Res<Exit> {
    let b = budget(opts)?;
    Ok(match load_term(input)? {
        Term::Lm(m) => {
            let n = normalize_with(&m, b, rules(opts));
            emit_trace(&n.trace, &n.term, n.exhausted, format)
        }
        Term::Scl(t) => {
            let n = scl_normalize(&t, b);
            emit_trace(&n.trace, &n.term, n.exhausted, format)
        }
    })
}

fn cmd_eq(calculus: Option<Calculus>, left: &str, right: &str, opts: &EvalOpts) -> Res<Exit> {
    let b = budget(opts)?;
    let l = load(left, calculus)?;
    let r = load(right, calculus.or(Some(l.calculus)))?;
    let v = match (parse(&l)?, parse(&r)?) {
        (Term::Lm(m), Term::Lm(n)) => lm_equal_with(&m, &n, b, rules(opts)).verdict(),
        (Term::Scl(t), Term::Scl(u)) => scl_equal(&t, &u, b).verdict(),
        _ => return Err(usage("both sides must be in the same calculus")),
    };
    println!("{v}");
    Ok(v.into())
}

fn cmd_translate(to_scl: bool, clauses: bool, input: &str) -> Res<Exit> {
    if to_scl {
        let src = load(input, Some(Calculus::Lm))?;
        let Term::Lm(m) = parse(&src)? else { unreachable!() };
        if !m.is_locally_closed() {
            return Err(usage("term has a dangling bound variable"));
        }
        let (t, used) = to_scl_clauses(&m);
        println!("{t}");
        if clauses {
            let names: Vec<_> = used.iter().map(|c| format!("{c:?}")).collect();
            println!("clauses: {}", names.join(" "));
        }
    } else {
        let src = load(input, Some(Calculus::Scl))?;
        let Term::Scl(t) = parse(&src)? else { unreachable!() };
        println!("{}", to_lm(&t));
    }
    Ok(Exit::Ok)
}

fn cmd_interp(input: &TermInput, model: Model, opts: &EvalOpts) -> Res<Exit> {
    let term = load_term(input)?;
    match model {
        Model::Term => {
            let tm = TermModel::new(budget(opts)?);
            let d = match &term {
                Term::Lm(m) => interp_lm(m, &TermModel::canonical_for_lm(m), &tm),
                Term::Scl(t) => {
                    let (ts, ss) = t.free_vars();
                    interp_term(t, &TermModel::canonical_valuation(&ts, &ss), &tm)
                }
            }
            .map_err(usage)?;
            println!("{d}");
            let n = scl_normalize(&d, tm.budget);
            if n.exhausted {
                println!("normal form: unknown (budget exhausted)");
            } else {
                println!("normal form: {}", n.term);
            }
        }
        Model::Trivial => {
            let (ts, ss) = match &term {
                Term::Lm(m) => m.free_vars(),
                Term::Scl(t) => t.free_vars(),
            };
            let v = Valuation {
                rho: ts.into_iter().map(|x| (x, ())).collect(),
                theta: ss.into_iter().map(|a| (a, ())).collect(),
            };
            match &term {
                Term::Lm(m) => interp_lm(m, &v, &TrivialAlgebra),
                Term::Scl(t) => interp_term(t, &v, &TrivialAlgebra),
            }
            .map_err(usage)?;
            println!("()");
        }
    }
    Ok(Exit::Ok)
}

fn reports<A: lmu_core::algebra::StreamCombinatoryAlgebra>(
    alg: &A,
    mk: impl Fn() -> SclSampler<A>,
    suite: Suite,
    samples: usize,
) -> Vec<(Suite, Report)> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Axioms | Suite::All) {
        out.push((Suite::Axioms, check_axioms(alg, &mut mk(), samples)));
    }
    if matches!(suite, Suite::Extensional | Suite::All) {
        out.push((Suite::Extensional, check_extensional(alg, &mut mk(), samples)));
    }
    if matches!(suite, Suite::Standard | Suite::All) {
        out.push((Suite::Standard, check_standard(alg, &mut mk(), samples)));
    }
    out
}

/// Exit status: failures of the requested laws give 1, otherwise unknowns
/// give 3. Under `--suite all` the standardness report is informational.
fn cmd_check(
    model: Model,
    suite: Suite,
    samples: usize,
    seed: u64,
    measure: usize,
    opts: &EvalOpts,
) -> Res<Exit> {
    let rs = match model {
        Model::Term => {
            let tm = TermModel::new(budget(opts)?);
            reports(&tm, || SclSampler::term_model(seed, measure), suite, samples)
        }
        Model::Trivial => reports(
            &TrivialAlgebra,
            || SclSampler::new(seed, measure, pool_valuation((), ())),
            suite,
            samples,
        ),
    };
    let mut exit = Exit::Ok;
    for (i, (which, r)) in rs.iter().enumerate() {
        if i > 0 {
            println!();
        }
        print!("{r}");
        if suite == Suite::All && *which == Suite::Standard {
            continue;
        }
        if r.failures() > 0 {
            exit = Exit::Negative;
        } else if r.unknowns() > 0 && exit == Exit::Ok {
            exit = Exit::Unknown;
        }
    }
    Ok(exit)
}

fn cmd_demo(demo: Demo) -> Res<Exit> {
    match demo {
        Demo::Hd { n, opts } => {
            let b = budget(&opts)?;
            let elems = sample_elements(n + 1);
            let term = hd_application(&elems, &lmu_core::lm::StreamVar::new("b"));
            println!("{term}");
            let out = normalize_with(&term, b, rules(&opts));
            print!("{}", out.trace.to_text());
            if out.exhausted {
                eprintln!("budget exhausted after {} steps", out.trace.len());
                return Ok(Exit::Unknown);
            }
            println!("result: {}", out.term);
            Ok(check_result(&out.term, &elems[0]))
        }
        Demo::Nth { len, index, opts } => {
            let b = budget(&opts)?;
            let elems = sample_elements(len);
            if index < len {
                let term = nth_application(&elems, &lmu_core::lm::StreamVar::new("b"), index);
                println!("size of nth application: {}", term.size());
            }
            match run_nth_demo(&elems, index, b) {
                Ok(got) => {
                    println!("result: {got}");
                    Ok(check_result(&got, &elems[index]))
                }
                Err(lmu_core::stdlib::StdlibError::Exhausted { steps }) => {
                    eprintln!("budget exhausted after {steps} steps");
                    Ok(Exit::Unknown)
                }
                Err(e) => Err(usage(e)),
            }
        }
        Demo::Builtin { name } => {
            let named = builtin(&name).map_err(usage)?;
            println!("{}", named.term);
            println!("# {}", named.doc);
            Ok(Exit::Ok)
        }
    }
}

fn check_result(got: &LmTerm, want: &LmTerm) -> Exit {
    if got == want {
        println!("expected: {want} (match)");
        Exit::Ok
    } else {
        println!("expected: {want} (MISMATCH)");
        Exit::Negative
    }
}
