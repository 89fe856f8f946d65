//! Bracket abstraction and the translations between Λμ and SCL.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::lm::{parse_lm, LmContext, LmTerm, StreamRef, StreamVar, TermVar};
use crate::scl::{SclConst, SclStream, SclTerm};

fn k(c: SclConst) -> SclTerm {
    SclTerm::Const(c)
}

fn identity() -> SclTerm {
    SclTerm::apps(k(SclConst::S0), [k(SclConst::K0), k(SclConst::K0)])
}

/// The defining clauses of `λ*` and `μ*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    LamVar,
    LamConst,
    LamApp,
    LamStar,
    LamCons,
    MuConst,
    MuApp,
    MuStarSame,
    MuStarOther,
    MuCons,
}

impl Clause {
    pub const ALL: [Clause; 10] = [
        Clause::LamVar,
        Clause::LamConst,
        Clause::LamApp,
        Clause::LamStar,
        Clause::LamCons,
        Clause::MuConst,
        Clause::MuApp,
        Clause::MuStarSame,
        Clause::MuStarOther,
        Clause::MuCons,
    ];
}

type Record<'a> = &'a mut dyn FnMut(Clause);

/// `λ*x.T`. Clauses are tried in order: `x`, `x ∉ FV(T)`, `T·U`, `T⋆α`,
/// `T⋆(U::S)`.
pub fn lam_star(x: &TermVar, t: &SclTerm) -> SclTerm {
    lam_star_rec(x, t, &mut |_| {})
}

fn lam_star_rec(x: &TermVar, t: &SclTerm, rec: Record) -> SclTerm {
    match t {
        SclTerm::Var(y) if y == x => {
            rec(Clause::LamVar);
            identity()
        }
        _ if !t.has_term_var(x) => {
            rec(Clause::LamConst);
            SclTerm::app(k(SclConst::K0), t.clone())
        }
        SclTerm::App(t1, u) => {
            rec(Clause::LamApp);
            let (a, b) = (lam_star_rec(x, t1, rec), lam_star_rec(x, u, rec));
            SclTerm::apps(k(SclConst::S0), [a, b])
        }
        SclTerm::SApp(t1, s @ SclStream::Var(_)) => {
            rec(Clause::LamStar);
            SclTerm::sapp(SclTerm::app(k(SclConst::C10), lam_star_rec(x, t1, rec)), s.clone())
        }
        SclTerm::SApp(t1, SclStream::Cons(u, rest)) => {
            rec(Clause::LamCons);
            lam_star_rec(x, &uncons(t1, u, rest), rec)
        }
        SclTerm::Const(_) | SclTerm::Var(_) => unreachable!("x does not occur"),
    }
}

fn uncons(t: &SclTerm, u: &SclTerm, rest: &SclStream) -> SclTerm {
    SclTerm::sapp(SclTerm::app(t.clone(), u.clone()), rest.clone())
}

/// `μ*α.T`. The `T⋆β` clause (`β ≠ α`) is tried first, then `α ∉ FV(T)`,
/// `T·U`, `T⋆α`, `T⋆(U::S)`.
pub fn mu_star(a: &StreamVar, t: &SclTerm) -> SclTerm {
    mu_star_rec(a, t, &mut |_| {})
}

fn mu_star_rec(a: &StreamVar, t: &SclTerm, rec: Record) -> SclTerm {
    match t {
        SclTerm::SApp(t1, s @ SclStream::Var(b)) if b != a => {
            rec(Clause::MuStarOther);
            SclTerm::sapp(SclTerm::app(k(SclConst::C11), mu_star_rec(a, t1, rec)), s.clone())
        }
        _ if !t.has_stream_var(a) => {
            rec(Clause::MuConst);
            SclTerm::app(k(SclConst::K1), t.clone())
        }
        SclTerm::App(t1, u) => {
            rec(Clause::MuApp);
            let (l, r) = (mu_star_rec(a, t1, rec), mu_star_rec(a, u, rec));
            SclTerm::apps(k(SclConst::S1), [l, r])
        }
        SclTerm::SApp(t1, SclStream::Var(_)) => {
            rec(Clause::MuStarSame);
            SclTerm::app(k(SclConst::W1), mu_star_rec(a, t1, rec))
        }
        SclTerm::SApp(t1, SclStream::Cons(u, rest)) => {
            rec(Clause::MuCons);
            mu_star_rec(a, &uncons(t1, u, rest), rec)
        }
        SclTerm::Const(_) | SclTerm::Var(_) => unreachable!("α does not occur"),
    }
}

/// [`lam_star`] together with the clauses it used.
pub fn lam_star_clauses(x: &TermVar, t: &SclTerm) -> (SclTerm, BTreeSet<Clause>) {
    let mut used = BTreeSet::new();
    let out = lam_star_rec(x, t, &mut |c| {
        used.insert(c);
    });
    (out, used)
}

/// [`mu_star`] together with the clauses it used.
pub fn mu_star_clauses(a: &StreamVar, t: &SclTerm) -> (SclTerm, BTreeSet<Clause>) {
    let mut used = BTreeSet::new();
    let out = mu_star_rec(a, t, &mut |c| {
        used.insert(c);
    });
    (out, used)
}

/// `M*`. Binders are opened with names containing `%`, which no parsed
/// term can mention, and are then eliminated by bracket abstraction.
///
/// `m` must be locally closed (every parsed term is).
pub fn to_scl(m: &LmTerm) -> SclTerm {
    to_scl_in(m, &mut 0, &mut |_| {})
}

/// [`to_scl`] together with the bracket-abstraction clauses it used.
pub fn to_scl_clauses(m: &LmTerm) -> (SclTerm, BTreeSet<Clause>) {
    let mut used = BTreeSet::new();
    let out = to_scl_in(m, &mut 0, &mut |c| {
        used.insert(c);
    });
    (out, used)
}

fn to_scl_in(m: &LmTerm, fresh: &mut usize, rec: Record) -> SclTerm {
    match m {
        LmTerm::Var(x) => SclTerm::Var(x.clone()),
        LmTerm::Bound(i) => panic!("to_scl: loose bound index {i}"),
        LmTerm::App(f, a) => {
            let f = to_scl_in(f, fresh, rec);
            SclTerm::app(f, to_scl_in(a, fresh, rec))
        }
        LmTerm::SApp(f, StreamRef::Free(a)) => {
            SclTerm::sapp(to_scl_in(f, fresh, rec), SclStream::Var(a.clone()))
        }
        LmTerm::SApp(_, StreamRef::Bound(j)) => panic!("to_scl: loose stream index {j}"),
        LmTerm::Lam(body) => {
            *fresh += 1;
            let x = TermVar::new(format!("%x{fresh}"));
            let opened = body.instantiate_term(&LmTerm::Var(x.clone()));
            let inner = to_scl_in(&opened, fresh, rec);
            lam_star_rec(&x, &inner, rec)
        }
        LmTerm::Mu(body) => {
            *fresh += 1;
            let a = StreamVar::new(format!("%a{fresh}"));
            let opened = body.instantiate_stream(&StreamRef::Free(a.clone()));
            let inner = to_scl_in(&opened, fresh, rec);
            mu_star_rec(&a, &inner, rec)
        }
    }
}

/// The closed Λμ-term standing for each constant.
pub fn const_to_lm(c: SclConst) -> LmTerm {
    static TABLE: OnceLock<Vec<LmTerm>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        SclConst::ALL
            .iter()
            .map(|c| {
                let src = match c {
                    SclConst::K0 => "\\x y. x",
                    SclConst::K1 => "\\x. #'a. x",
                    SclConst::S0 => "\\x y z. x z (y z)",
                    SclConst::S1 => "\\x y. #'a. x 'a (y 'a)",
                    SclConst::C10 => "\\x. #'a. \\y. x y 'a",
                    SclConst::C11 => "\\x. #'a 'b. x 'b 'a",
                    SclConst::W1 => "\\x. #'a. x 'a 'a",
                };
                parse_lm(src).expect("constant table parses")
            })
            .collect()
    });
    table[SclConst::ALL.iter().position(|d| *d == c).unwrap()].clone()
}

/// `T_*`
pub fn to_lm(t: &SclTerm) -> LmTerm {
    match t {
        SclTerm::Const(c) => const_to_lm(*c),
        SclTerm::Var(x) => LmTerm::Var(x.clone()),
        SclTerm::App(t1, u) => LmTerm::app(to_lm(t1), to_lm(u)),
        SclTerm::SApp(t1, s) => to_lm_ctx(s).plug(to_lm(t1)),
    }
}

/// `S_*`: `α_* = []α`, `(T::S)_* = S_*[[]T_*]`.
pub fn to_lm_ctx(s: &SclStream) -> LmContext {
    let (items, tail) = s.split();
    LmContext::new(items.into_iter().map(to_lm).collect(), tail.clone())
}
