//! The four substitutions used by the Λμ axioms, on free variables.
//!
//! Bound variables are de Bruijn indices, so none of these operations can
//! capture: renaming of binders is implicit in the representation.

use super::term::{LmContext, LmTerm, StreamRef, StreamVar, TermVar};

/// `M[x:=N]`.
pub fn subst_term(m: &LmTerm, x: &TermVar, n: &LmTerm) -> LmTerm {
    subst_under(m, x, n, 0, 0)
}

fn subst_under(m: &LmTerm, x: &TermVar, n: &LmTerm, dt: u32, ds: u32) -> LmTerm {
    match m {
        LmTerm::Var(y) if y == x => n.shift(dt as i64, ds as i64),
        LmTerm::Var(_) | LmTerm::Bound(_) => m.clone(),
        LmTerm::Lam(b) => LmTerm::Lam(Box::new(subst_under(b, x, n, dt + 1, ds))),
        LmTerm::Mu(b) => LmTerm::Mu(Box::new(subst_under(b, x, n, dt, ds + 1))),
        LmTerm::App(f, a) => {
            LmTerm::app(subst_under(f, x, n, dt, ds), subst_under(a, x, n, dt, ds))
        }
        LmTerm::SApp(f, s) => LmTerm::SApp(Box::new(subst_under(f, x, n, dt, ds)), s.clone()),
    }
}

/// `M[α:=β]`.
pub fn rename_stream(m: &LmTerm, a: &StreamVar, b: &StreamVar) -> LmTerm {
    match m {
        LmTerm::Var(_) | LmTerm::Bound(_) => m.clone(),
        LmTerm::Lam(body) => LmTerm::Lam(Box::new(rename_stream(body, a, b))),
        LmTerm::Mu(body) => LmTerm::Mu(Box::new(rename_stream(body, a, b))),
        LmTerm::App(f, g) => LmTerm::app(rename_stream(f, a, b), rename_stream(g, a, b)),
        LmTerm::SApp(f, s) => {
            let s = match s {
                StreamRef::Free(c) if c == a => StreamRef::Free(b.clone()),
                _ => s.clone(),
            };
            LmTerm::SApp(Box::new(rename_stream(f, a, b)), s)
        }
    }
}

/// Structural substitution `M[Pα:=PNα]` on the free occurrences of `α`.
///
/// Occurrences of `α` inside `N` itself are left alone.
pub fn struct_subst(m: &LmTerm, a: &StreamVar, n: &LmTerm) -> LmTerm {
    let target = StreamRef::Free(a.clone());
    m.replace_stream_apps(&target, std::slice::from_ref(n), &target)
}

/// `K[M]`.
pub fn plug(k: &LmContext, m: LmTerm) -> LmTerm {
    k.plug(m)
}

/// `M[Pα:=K[P]]` on the free occurrences of `α`.
pub fn ctx_subst(m: &LmTerm, a: &StreamVar, k: &LmContext) -> LmTerm {
    m.replace_stream_apps(&StreamRef::Free(a.clone()), &k.args, &StreamRef::Free(k.tail.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::lm as p;

    fn sv(n: &str) -> StreamVar {
        StreamVar::new(n)
    }

    #[test]
    fn subst_term_examples() {
        let x = TermVar::new("x");
        assert_eq!(subst_term(&p("\\y. x"), &x, &p("z")), p("\\y. z"));
        assert_eq!(subst_term(&p("\\x. x"), &x, &p("y")), p("\\x. x"));
        assert_eq!(subst_term(&p("x 'a"), &x, &p("\\y. y")), p("(\\y. y) 'a"));
    }

    #[test]
    fn subst_term_avoids_capture() {
        // (λy. x y)[x := y] must not capture the free y.
        let out = subst_term(&p("\\y. x y"), &TermVar::new("x"), &p("y"));
        assert_eq!(out, p("\\z. y z"));
        assert_ne!(out, p("\\y. y y"));
        // and under a μ the substituted term's streams stay free
        let out = subst_term(&p("#'b. x 'b"), &TermVar::new("x"), &p("w 'b"));
        assert_eq!(out, p("#'c. w 'b 'c"));
    }

    #[test]
    fn rename_stream_examples() {
        let (a, b) = (sv("a"), sv("b"));
        assert_eq!(rename_stream(&p("x 'a"), &a, &b), p("x 'b"));
        assert_eq!(rename_stream(&p("#'a. x 'a"), &a, &b), p("#'a. x 'a"));
        assert_eq!(rename_stream(&p("#'c. x 'a 'c"), &a, &b), p("#'c. x 'b 'c"));
        // capture: the binder 'b must not grab the renamed occurrence
        assert_eq!(rename_stream(&p("#'b. x 'a 'b"), &a, &b), p("#'c. x 'b 'c"));
    }

    #[test]
    fn struct_subst_examples() {
        let a = sv("a");
        let n = p("n");
        assert_eq!(struct_subst(&p("x 'a"), &a, &n), p("x n 'a"));
        assert_eq!(struct_subst(&p("x 'b"), &a, &n), p("x 'b"));
        assert_eq!(struct_subst(&p("x 'a y 'a"), &a, &n), p("x n 'a y n 'a"));
        assert_eq!(struct_subst(&p("#'a. x 'a"), &a, &n), p("#'a. x 'a"));
    }

    #[test]
    fn struct_subst_leaves_the_inserted_term_alone() {
        let a = sv("a");
        assert_eq!(struct_subst(&p("x 'a"), &a, &p("y 'a")), p("x (y 'a) 'a"));
    }

    #[test]
    fn struct_subst_avoids_capture() {
        // inserting the free y under λy renames the binder
        let out = struct_subst(&p("\\y. x 'a"), &sv("a"), &p("y"));
        assert_eq!(out, p("\\z. x y 'a"));
    }

    #[test]
    fn plug_examples() {
        let k0 = LmContext::new(vec![], sv("a"));
        assert_eq!(plug(&k0, p("x")), p("x 'a"));
        let k1 = LmContext::new(vec![p("n")], sv("a"));
        assert_eq!(plug(&k1, p("x")), p("x n 'a"));
        let k2 = LmContext::new(vec![p("n1"), p("n2")], sv("b"));
        assert_eq!(plug(&k2, p("m")), p("m n1 n2 'b"));
    }

    #[test]
    fn ctx_subst_examples() {
        let a = sv("a");
        let k = LmContext::new(vec![p("n")], sv("b"));
        assert_eq!(ctx_subst(&p("x 'a"), &a, &k), p("x n 'b"));
        assert_eq!(ctx_subst(&p("x 'a"), &a, &k), plug(&k, p("x")));
        assert_eq!(ctx_subst(&p("x 'c"), &a, &k), p("x 'c"));
        assert_eq!(ctx_subst(&p("#'a. x 'a"), &a, &k), p("#'a. x 'a"));
    }

    #[test]
    fn identity_instances() {
        let m = p("\\y. #'b. x y 'a (z 'b)");
        assert_eq!(subst_term(&m, &TermVar::new("x"), &p("x")), m);
        assert_eq!(rename_stream(&m, &sv("a"), &sv("a")), m);
        assert_eq!(struct_subst(&m, &sv("q"), &p("n")), m);
        assert_eq!(ctx_subst(&m, &sv("a"), &LmContext::new(vec![], sv("a"))), m);
    }

    #[test]
    fn degenerate_other_sort_is_identity() {
        // 'x' as a stream variable does not touch term variable x
        let m = p("x 'a");
        assert_eq!(struct_subst(&m, &sv("x"), &p("n")), m);
        assert_eq!(rename_stream(&m, &sv("x"), &sv("y")), m);
    }
}
