use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A term variable (`x`, `y`, ...).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermVar(Arc<str>);

/// A stream variable, written `'a` in the surface syntax.
///
/// Term and stream variables live in separate types, so the two namespaces
/// can never collide even when they share a spelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StreamVar(Arc<str>);

impl TermVar {
    pub fn new(name: impl AsRef<str>) -> Self {
        let name = name.as_ref();
        assert!(!name.is_empty(), "variable names are nonempty");
        TermVar(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl StreamVar {
    pub fn new(name: impl AsRef<str>) -> Self {
        let name = name.as_ref();
        assert!(!name.is_empty(), "variable names are nonempty");
        StreamVar(Arc::from(name))
    }

    /// The name without the leading apostrophe.
    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TermVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for TermVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for StreamVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}", self.0)
    }
}

impl fmt::Debug for StreamVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}", self.0)
    }
}

/// A stream-variable occurrence: either free (named) or bound by the
/// `n`-th enclosing μ (de Bruijn index counted over μ binders only).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum StreamRef {
    Free(StreamVar),
    Bound(u32),
}

/// Λμ-terms in locally nameless form.
///
/// Bound term variables are de Bruijn indices counted over λ binders only;
/// bound stream variables are indices counted over μ binders only. Binder
/// names are not stored, so the derived `PartialEq` is alpha-equivalence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LmTerm {
    Var(TermVar),
    Bound(u32),
    Lam(Box<LmTerm>),
    App(Box<LmTerm>, Box<LmTerm>),
    Mu(Box<LmTerm>),
    SApp(Box<LmTerm>, StreamRef),
}

/// A context `[] M1 ... Mn 'a`: a finite prefix of arguments and a tail
/// stream variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LmContext {
    pub args: Vec<LmTerm>,
    pub tail: StreamVar,
}

impl LmContext {
    pub fn new(args: Vec<LmTerm>, tail: StreamVar) -> Self {
        LmContext { args, tail }
    }

    /// `K[[] M]`: the context that first applies the hole to `m`.
    pub fn push_front(mut self, m: LmTerm) -> Self {
        self.args.insert(0, m);
        self
    }

    /// `K[M]`.
    pub fn plug(&self, m: LmTerm) -> LmTerm {
        let applied = self.args.iter().cloned().fold(m, LmTerm::app);
        LmTerm::sapp(applied, self.tail.clone())
    }
}

impl LmTerm {
    pub fn var(name: impl AsRef<str>) -> LmTerm {
        LmTerm::Var(TermVar::new(name))
    }

    pub fn app(f: LmTerm, a: LmTerm) -> LmTerm {
        LmTerm::App(Box::new(f), Box::new(a))
    }

    /// `f a1 ... an`.
    pub fn apps(f: LmTerm, args: impl IntoIterator<Item = LmTerm>) -> LmTerm {
        args.into_iter().fold(f, LmTerm::app)
    }

    pub fn sapp(f: LmTerm, a: StreamVar) -> LmTerm {
        LmTerm::SApp(Box::new(f), StreamRef::Free(a))
    }

    /// `λx. body`, binding the free occurrences of `x` in `body`.
    pub fn lam(x: &TermVar, body: LmTerm) -> LmTerm {
        LmTerm::Lam(Box::new(body.abstract_term(x)))
    }

    /// `λx1 ... xn. body`.
    pub fn lams(xs: &[TermVar], body: LmTerm) -> LmTerm {
        xs.iter().rev().fold(body, |b, x| LmTerm::lam(x, b))
    }

    /// `μα. body`, binding the free occurrences of `α` in `body`.
    pub fn mu(a: &StreamVar, body: LmTerm) -> LmTerm {
        LmTerm::Mu(Box::new(body.abstract_stream(a)))
    }

    pub fn mus(as_: &[StreamVar], body: LmTerm) -> LmTerm {
        as_.iter().rev().fold(body, |b, a| LmTerm::mu(a, b))
    }

    /// Number of syntax-tree nodes; a stream-variable argument counts as one.
    pub fn size(&self) -> usize {
        match self {
            LmTerm::Var(_) | LmTerm::Bound(_) => 1,
            LmTerm::Lam(b) | LmTerm::Mu(b) => 1 + b.size(),
            LmTerm::App(f, a) => 1 + f.size() + a.size(),
            LmTerm::SApp(f, _) => 2 + f.size(),
        }
    }

    /// True when no de Bruijn index escapes its binders.
    pub fn is_locally_closed(&self) -> bool {
        fn go(t: &LmTerm, dt: u32, ds: u32) -> bool {
            match t {
                LmTerm::Var(_) => true,
                LmTerm::Bound(i) => *i < dt,
                LmTerm::Lam(b) => go(b, dt + 1, ds),
                LmTerm::Mu(b) => go(b, dt, ds + 1),
                LmTerm::App(f, a) => go(f, dt, ds) && go(a, dt, ds),
                LmTerm::SApp(f, s) => {
                    go(f, dt, ds)
                        && match s {
                            StreamRef::Free(_) => true,
                            StreamRef::Bound(j) => *j < ds,
                        }
                }
            }
        }
        go(self, 0, 0)
    }

    /// Free term and stream variables.
    pub fn free_vars(&self) -> (BTreeSet<TermVar>, BTreeSet<StreamVar>) {
        let mut terms = BTreeSet::new();
        let mut streams = BTreeSet::new();
        self.collect_free(&mut terms, &mut streams);
        (terms, streams)
    }

    pub(crate) fn collect_free(
        &self,
        terms: &mut BTreeSet<TermVar>,
        streams: &mut BTreeSet<StreamVar>,
    ) {
        match self {
            LmTerm::Var(x) => {
                terms.insert(x.clone());
            }
            LmTerm::Bound(_) => {}
            LmTerm::Lam(b) | LmTerm::Mu(b) => b.collect_free(terms, streams),
            LmTerm::App(f, a) => {
                f.collect_free(terms, streams);
                a.collect_free(terms, streams);
            }
            LmTerm::SApp(f, s) => {
                f.collect_free(terms, streams);
                if let StreamRef::Free(a) = s {
                    streams.insert(a.clone());
                }
            }
        }
    }

    pub fn has_free_term(&self, x: &TermVar) -> bool {
        match self {
            LmTerm::Var(y) => y == x,
            LmTerm::Bound(_) => false,
            LmTerm::Lam(b) | LmTerm::Mu(b) => b.has_free_term(x),
            LmTerm::App(f, a) => f.has_free_term(x) || a.has_free_term(x),
            LmTerm::SApp(f, _) => f.has_free_term(x),
        }
    }

    pub fn has_free_stream(&self, a: &StreamVar) -> bool {
        match self {
            LmTerm::Var(_) | LmTerm::Bound(_) => false,
            LmTerm::Lam(b) | LmTerm::Mu(b) => b.has_free_stream(a),
            LmTerm::App(f, g) => f.has_free_stream(a) || g.has_free_stream(a),
            LmTerm::SApp(f, s) => matches!(s, StreamRef::Free(b) if b == a) || f.has_free_stream(a),
        }
    }

    // ---- index plumbing ----

    /// Generic leaf map. `on_var` sees every term leaf with the current
    /// (λ-depth, μ-depth); `on_stream` sees every stream occurrence with the
    /// current μ-depth.
    fn map_leaves<F, G>(&self, dt: u32, ds: u32, on_var: &F, on_stream: &G) -> LmTerm
    where
        F: Fn(&LmTerm, u32, u32) -> LmTerm,
        G: Fn(&StreamRef, u32) -> StreamRef,
    {
        match self {
            LmTerm::Var(_) | LmTerm::Bound(_) => on_var(self, dt, ds),
            LmTerm::Lam(b) => LmTerm::Lam(Box::new(b.map_leaves(dt + 1, ds, on_var, on_stream))),
            LmTerm::Mu(b) => LmTerm::Mu(Box::new(b.map_leaves(dt, ds + 1, on_var, on_stream))),
            LmTerm::App(f, a) => LmTerm::App(
                Box::new(f.map_leaves(dt, ds, on_var, on_stream)),
                Box::new(a.map_leaves(dt, ds, on_var, on_stream)),
            ),
            LmTerm::SApp(f, s) => {
                LmTerm::SApp(Box::new(f.map_leaves(dt, ds, on_var, on_stream)), on_stream(s, ds))
            }
        }
    }

    /// Adds `by_t`/`by_s` to every loose term/stream index.
    pub(crate) fn shift(&self, by_t: i64, by_s: i64) -> LmTerm {
        if by_t == 0 && by_s == 0 {
            return self.clone();
        }
        self.map_leaves(
            0,
            0,
            &|t, dt, _| match t {
                LmTerm::Bound(i) if *i >= dt => LmTerm::Bound(bump(*i, by_t)),
                _ => t.clone(),
            },
            &|s, ds| match s {
                StreamRef::Bound(j) if *j >= ds => StreamRef::Bound(bump(*j, by_s)),
                _ => s.clone(),
            },
        )
    }

    /// Replaces the free variable `x` with a fresh loose index 0, shifting
    /// existing loose term indices up by one.
    pub(crate) fn abstract_term(&self, x: &TermVar) -> LmTerm {
        self.map_leaves(
            0,
            0,
            &|t, dt, _| match t {
                LmTerm::Var(y) if y == x => LmTerm::Bound(dt),
                LmTerm::Bound(i) if *i >= dt => LmTerm::Bound(i + 1),
                _ => t.clone(),
            },
            &|s, _| s.clone(),
        )
    }

    pub(crate) fn abstract_stream(&self, a: &StreamVar) -> LmTerm {
        self.map_leaves(0, 0, &|t, _, _| t.clone(), &|s, ds| match s {
            StreamRef::Free(b) if b == a => StreamRef::Bound(ds),
            StreamRef::Bound(j) if *j >= ds => StreamRef::Bound(j + 1),
            _ => s.clone(),
        })
    }

    /// Body of a λ with loose index 0 replaced by `value` (which lives in
    /// the context outside the λ).
    pub(crate) fn instantiate_term(&self, value: &LmTerm) -> LmTerm {
        self.map_leaves(
            0,
            0,
            &|t, dt, ds| match t {
                LmTerm::Bound(i) if *i == dt => value.shift(dt as i64, ds as i64),
                LmTerm::Bound(i) if *i > dt => LmTerm::Bound(i - 1),
                _ => t.clone(),
            },
            &|s, _| s.clone(),
        )
    }

    /// Body of a μ with loose stream index 0 replaced by `value`.
    pub(crate) fn instantiate_stream(&self, value: &StreamRef) -> LmTerm {
        self.map_leaves(0, 0, &|t, _, _| t.clone(), &|s, ds| match s {
            StreamRef::Bound(j) if *j == ds => shift_ref(value, ds),
            StreamRef::Bound(j) if *j > ds => StreamRef::Bound(j - 1),
            _ => s.clone(),
        })
    }

    /// True when loose term index `idx` occurs.
    pub(crate) fn has_loose_term(&self, idx: u32) -> bool {
        match self {
            LmTerm::Var(_) => false,
            LmTerm::Bound(i) => *i == idx,
            LmTerm::Lam(b) => b.has_loose_term(idx + 1),
            LmTerm::Mu(b) => b.has_loose_term(idx),
            LmTerm::App(f, a) => f.has_loose_term(idx) || a.has_loose_term(idx),
            LmTerm::SApp(f, _) => f.has_loose_term(idx),
        }
    }

    pub(crate) fn has_loose_stream(&self, idx: u32) -> bool {
        match self {
            LmTerm::Var(_) | LmTerm::Bound(_) => false,
            LmTerm::Lam(b) => b.has_loose_stream(idx),
            LmTerm::Mu(b) => b.has_loose_stream(idx + 1),
            LmTerm::App(f, a) => f.has_loose_stream(idx) || a.has_loose_stream(idx),
            LmTerm::SApp(f, s) => {
                matches!(s, StreamRef::Bound(j) if *j == idx) || f.has_loose_stream(idx)
            }
        }
    }

    /// Replaces every occurrence `P target` by `P' a1 ... an tail`, where
    /// `P'` is `P` processed recursively. `target`, `args` and `tail` are
    /// expressed in the binding context of `self`. The inserted arguments
    /// are not themselves rewritten.
    pub(crate) fn replace_stream_apps(
        &self,
        target: &StreamRef,
        args: &[LmTerm],
        tail: &StreamRef,
    ) -> LmTerm {
        fn go(
            t: &LmTerm,
            dt: u32,
            ds: u32,
            target: &StreamRef,
            args: &[LmTerm],
            tail: &StreamRef,
        ) -> LmTerm {
            match t {
                LmTerm::Var(_) | LmTerm::Bound(_) => t.clone(),
                LmTerm::Lam(b) => LmTerm::Lam(Box::new(go(b, dt + 1, ds, target, args, tail))),
                LmTerm::Mu(b) => LmTerm::Mu(Box::new(go(b, dt, ds + 1, target, args, tail))),
                LmTerm::App(f, a) => LmTerm::App(
                    Box::new(go(f, dt, ds, target, args, tail)),
                    Box::new(go(a, dt, ds, target, args, tail)),
                ),
                LmTerm::SApp(f, s) => {
                    let f = go(f, dt, ds, target, args, tail);
                    let hit = match (s, target) {
                        (StreamRef::Free(a), StreamRef::Free(b)) => a == b,
                        (StreamRef::Bound(j), StreamRef::Bound(k)) => *j == k + ds,
                        _ => false,
                    };
                    if hit {
                        let applied = args
                            .iter()
                            .fold(f, |acc, a| LmTerm::app(acc, a.shift(dt as i64, ds as i64)));
                        LmTerm::SApp(Box::new(applied), shift_ref(tail, ds))
                    } else {
                        LmTerm::SApp(Box::new(f), s.clone())
                    }
                }
            }
        }
        go(self, 0, 0, target, args, tail)
    }

    /// Splits an application spine into its head and arguments.
    pub fn spine(&self) -> (&LmTerm, Vec<Arg<'_>>) {
        let mut args = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                LmTerm::App(f, a) => {
                    args.push(Arg::Term(a));
                    cur = f;
                }
                LmTerm::SApp(f, s) => {
                    args.push(Arg::Stream(s));
                    cur = f;
                }
                _ => break,
            }
        }
        args.reverse();
        (cur, args)
    }
}

/// One argument of an application spine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arg<'a> {
    Term(&'a LmTerm),
    Stream(&'a StreamRef),
}

fn bump(i: u32, by: i64) -> u32 {
    let v = i as i64 + by;
    debug_assert!(v >= 0, "index shifted below zero");
    v as u32
}

pub(crate) fn shift_ref(s: &StreamRef, by: u32) -> StreamRef {
    match s {
        StreamRef::Bound(j) => StreamRef::Bound(j + by),
        StreamRef::Free(_) => s.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> TermVar {
        TermVar::new("x")
    }
    fn y() -> TermVar {
        TermVar::new("y")
    }
    fn a() -> StreamVar {
        StreamVar::new("a")
    }

    #[test]
    fn binders_are_nameless() {
        let id_x = LmTerm::lam(&x(), LmTerm::Var(x()));
        let id_y = LmTerm::lam(&y(), LmTerm::Var(y()));
        assert_eq!(id_x, id_y);
        assert_eq!(id_x, LmTerm::Lam(Box::new(LmTerm::Bound(0))));
    }

    #[test]
    fn nested_indices_count_per_sort() {
        // λx. μa. λy. x 'a
        let t = LmTerm::lam(
            &x(),
            LmTerm::mu(&a(), LmTerm::lam(&y(), LmTerm::sapp(LmTerm::Var(x()), a()))),
        );
        let expected = LmTerm::Lam(Box::new(LmTerm::Mu(Box::new(LmTerm::Lam(Box::new(
            LmTerm::SApp(Box::new(LmTerm::Bound(1)), StreamRef::Bound(0)),
        ))))));
        assert_eq!(t, expected);
        assert!(t.is_locally_closed());
    }

    #[test]
    fn spine_splits_mixed_arguments() {
        let t = LmTerm::sapp(LmTerm::app(LmTerm::var("f"), LmTerm::var("y")), a());
        let (head, args) = t.spine();
        assert_eq!(head, &LmTerm::var("f"));
        assert_eq!(args.len(), 2);
        assert!(matches!(args[1], Arg::Stream(StreamRef::Free(_))));
    }

    #[test]
    fn context_plug_orders_arguments() {
        let k = LmContext::new(vec![LmTerm::var("n1"), LmTerm::var("n2")], StreamVar::new("b"));
        let plugged = k.plug(LmTerm::var("m"));
        let expected = LmTerm::sapp(
            LmTerm::apps(LmTerm::var("m"), [LmTerm::var("n1"), LmTerm::var("n2")]),
            StreamVar::new("b"),
        );
        assert_eq!(plugged, expected);
    }
}
