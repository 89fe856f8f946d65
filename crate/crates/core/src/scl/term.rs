use std::collections::BTreeSet;
use std::fmt;

use crate::lm::{StreamVar, TermVar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SclConst {
    K0,
    K1,
    S0,
    S1,
    C10,
    C11,
    W1,
}

impl SclConst {
    pub const ALL: [SclConst; 7] = [
        SclConst::K0,
        SclConst::K1,
        SclConst::S0,
        SclConst::S1,
        SclConst::C10,
        SclConst::C11,
        SclConst::W1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SclConst::K0 => "K0",
            SclConst::K1 => "K1",
            SclConst::S0 => "S0",
            SclConst::S1 => "S1",
            SclConst::C10 => "C10",
            SclConst::C11 => "C11",
            SclConst::W1 => "W1",
        }
    }

    pub fn from_name(s: &str) -> Option<SclConst> {
        SclConst::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for SclConst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `T ::= C | x | T·U | T⋆S`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SclTerm {
    Const(SclConst),
    Var(TermVar),
    App(Box<SclTerm>, Box<SclTerm>),
    SApp(Box<SclTerm>, SclStream),
}

/// `S ::= α | T::S`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SclStream {
    Var(StreamVar),
    Cons(Box<SclTerm>, Box<SclStream>),
}

impl SclTerm {
    pub fn var(name: impl AsRef<str>) -> SclTerm {
        SclTerm::Var(TermVar::new(name))
    }

    pub fn app(t: SclTerm, u: SclTerm) -> SclTerm {
        SclTerm::App(Box::new(t), Box::new(u))
    }

    pub fn apps(t: SclTerm, args: impl IntoIterator<Item = SclTerm>) -> SclTerm {
        args.into_iter().fold(t, SclTerm::app)
    }

    pub fn sapp(t: SclTerm, s: SclStream) -> SclTerm {
        SclTerm::SApp(Box::new(t), s)
    }

    /// `c(T)`: occurrences of `::`.
    pub fn cons_count(&self) -> usize {
        match self {
            SclTerm::Const(_) | SclTerm::Var(_) => 0,
            SclTerm::App(t, u) => t.cons_count() + u.cons_count(),
            SclTerm::SApp(t, s) => t.cons_count() + s.cons_count(),
        }
    }

    /// `m(T)`: nodes of the syntax tree, stream nodes included.
    pub fn node_count(&self) -> usize {
        match self {
            SclTerm::Const(_) | SclTerm::Var(_) => 1,
            SclTerm::App(t, u) => 1 + t.node_count() + u.node_count(),
            SclTerm::SApp(t, s) => 1 + t.node_count() + s.node_count(),
        }
    }

    /// `|T| = c(T) + m(T)`.
    pub fn measure(&self) -> usize {
        self.cons_count() + self.node_count()
    }

    pub fn free_vars(&self) -> (BTreeSet<TermVar>, BTreeSet<StreamVar>) {
        let mut ts = BTreeSet::new();
        let mut ss = BTreeSet::new();
        self.collect(&mut ts, &mut ss);
        (ts, ss)
    }

    fn collect(&self, ts: &mut BTreeSet<TermVar>, ss: &mut BTreeSet<StreamVar>) {
        match self {
            SclTerm::Const(_) => {}
            SclTerm::Var(x) => {
                ts.insert(x.clone());
            }
            SclTerm::App(t, u) => {
                t.collect(ts, ss);
                u.collect(ts, ss);
            }
            SclTerm::SApp(t, s) => {
                t.collect(ts, ss);
                s.collect(ts, ss);
            }
        }
    }

    pub fn has_term_var(&self, x: &TermVar) -> bool {
        match self {
            SclTerm::Const(_) => false,
            SclTerm::Var(y) => x == y,
            SclTerm::App(t, u) => t.has_term_var(x) || u.has_term_var(x),
            SclTerm::SApp(t, s) => t.has_term_var(x) || s.has_term_var(x),
        }
    }

    pub fn has_stream_var(&self, a: &StreamVar) -> bool {
        match self {
            SclTerm::Const(_) | SclTerm::Var(_) => false,
            SclTerm::App(t, u) => t.has_stream_var(a) || u.has_stream_var(a),
            SclTerm::SApp(t, s) => t.has_stream_var(a) || s.has_stream_var(a),
        }
    }

    /// `T[x:=U]`
    pub fn subst_term(&self, x: &TermVar, u: &SclTerm) -> SclTerm {
        match self {
            SclTerm::Var(y) if y == x => u.clone(),
            SclTerm::Const(_) | SclTerm::Var(_) => self.clone(),
            SclTerm::App(t1, t2) => SclTerm::app(t1.subst_term(x, u), t2.subst_term(x, u)),
            SclTerm::SApp(t, s) => SclTerm::sapp(t.subst_term(x, u), s.subst_term(x, u)),
        }
    }

    /// `T[α:=S]`
    pub fn subst_stream(&self, a: &StreamVar, s: &SclStream) -> SclTerm {
        match self {
            SclTerm::Const(_) | SclTerm::Var(_) => self.clone(),
            SclTerm::App(t1, t2) => SclTerm::app(t1.subst_stream(a, s), t2.subst_stream(a, s)),
            SclTerm::SApp(t, s2) => SclTerm::sapp(t.subst_stream(a, s), s2.subst_stream(a, s)),
        }
    }

    /// Head and arguments of the `·`/`⋆` spine, outermost argument last.
    pub fn spine(&self) -> (&SclTerm, Vec<SclArg<'_>>) {
        let mut args = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                SclTerm::App(t, u) => {
                    args.push(SclArg::Term(u));
                    cur = t;
                }
                SclTerm::SApp(t, s) => {
                    args.push(SclArg::Stream(s));
                    cur = t;
                }
                _ => break,
            }
        }
        args.reverse();
        (cur, args)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SclArg<'a> {
    Term(&'a SclTerm),
    Stream(&'a SclStream),
}

impl SclStream {
    pub fn var(name: impl AsRef<str>) -> SclStream {
        SclStream::Var(StreamVar::new(name))
    }

    pub fn cons(t: SclTerm, s: SclStream) -> SclStream {
        SclStream::Cons(Box::new(t), Box::new(s))
    }

    /// `T1 :: ... :: Tn :: S`
    pub fn prepend(items: impl IntoIterator<Item = SclTerm>, tail: SclStream) -> SclStream {
        let items: Vec<_> = items.into_iter().collect();
        items.into_iter().rev().fold(tail, |s, t| SclStream::cons(t, s))
    }

    pub fn cons_count(&self) -> usize {
        match self {
            SclStream::Var(_) => 0,
            SclStream::Cons(t, s) => 1 + t.cons_count() + s.cons_count(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            SclStream::Var(_) => 1,
            SclStream::Cons(t, s) => 1 + t.node_count() + s.node_count(),
        }
    }

    pub fn free_vars(&self) -> (BTreeSet<TermVar>, BTreeSet<StreamVar>) {
        let mut ts = BTreeSet::new();
        let mut ss = BTreeSet::new();
        self.collect(&mut ts, &mut ss);
        (ts, ss)
    }

    fn collect(&self, ts: &mut BTreeSet<TermVar>, ss: &mut BTreeSet<StreamVar>) {
        match self {
            SclStream::Var(a) => {
                ss.insert(a.clone());
            }
            SclStream::Cons(t, s) => {
                t.collect(ts, ss);
                s.collect(ts, ss);
            }
        }
    }

    pub fn has_term_var(&self, x: &TermVar) -> bool {
        match self {
            SclStream::Var(_) => false,
            SclStream::Cons(t, s) => t.has_term_var(x) || s.has_term_var(x),
        }
    }

    pub fn has_stream_var(&self, a: &StreamVar) -> bool {
        match self {
            SclStream::Var(b) => a == b,
            SclStream::Cons(t, s) => t.has_stream_var(a) || s.has_stream_var(a),
        }
    }

    pub fn subst_term(&self, x: &TermVar, u: &SclTerm) -> SclStream {
        match self {
            SclStream::Var(_) => self.clone(),
            SclStream::Cons(t, s) => SclStream::cons(t.subst_term(x, u), s.subst_term(x, u)),
        }
    }

    pub fn subst_stream(&self, a: &StreamVar, s: &SclStream) -> SclStream {
        match self {
            SclStream::Var(b) if a == b => s.clone(),
            SclStream::Var(_) => self.clone(),
            SclStream::Cons(t, rest) => {
                SclStream::cons(t.subst_stream(a, s), rest.subst_stream(a, s))
            }
        }
    }

    /// The finite prefix and the tail variable.
    pub fn split(&self) -> (Vec<&SclTerm>, &StreamVar) {
        let mut items = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                SclStream::Var(a) => return (items, a),
                SclStream::Cons(t, s) => {
                    items.push(&**t);
                    cur = s;
                }
            }
        }
    }
}

pub fn scl_subst_term(t: &SclTerm, x: &TermVar, u: &SclTerm) -> SclTerm {
    t.subst_term(x, u)
}

pub fn scl_subst_stream(t: &SclTerm, a: &StreamVar, s: &SclStream) -> SclTerm {
    t.subst_stream(a, s)
}

pub fn measure(t: &SclTerm) -> usize {
    t.measure()
}
