//! S-expression dump for `lmu parse`, with de Bruijn indices shown.

use lmu_core::lm::{LmTerm, StreamRef};
use lmu_core::scl::{SclStream, SclTerm};

pub fn lm(t: &LmTerm) -> String {
    match t {
        LmTerm::Var(x) => format!("(var {})", x.name()),
        LmTerm::Bound(i) => format!("(bound {i})"),
        LmTerm::Lam(b) => format!("(lam {})", lm(b)),
        LmTerm::Mu(b) => format!("(mu {})", lm(b)),
        LmTerm::App(f, a) => format!("(app {} {})", lm(f), lm(a)),
        LmTerm::SApp(f, StreamRef::Free(a)) => format!("(sapp {} (svar '{}))", lm(f), a.name()),
        LmTerm::SApp(f, StreamRef::Bound(j)) => format!("(sapp {} (sbound {j}))", lm(f)),
    }
}

pub fn scl(t: &SclTerm) -> String {
    match t {
        SclTerm::Const(c) => format!("(const {c})"),
        SclTerm::Var(x) => format!("(var {})", x.name()),
        SclTerm::App(f, u) => format!("(app {} {})", scl(f), scl(u)),
        SclTerm::SApp(f, s) => format!("(sapp {} {})", scl(f), stream(s)),
    }
}

fn stream(s: &SclStream) -> String {
    match s {
        SclStream::Var(a) => format!("(svar '{})", a.name()),
        SclStream::Cons(h, t) => format!("(cons {} {})", scl(h), stream(t)),
    }
}
