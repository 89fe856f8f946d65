//! Surface syntax for Λμ-terms.
//!
//! ```text
//! term  ::= '\' ident+ '.' term | '#' 'ident+ '.' term | app
//! app   ::= atom { atom | 'ident } [ binder ]
//! atom  ::= ident | '(' term ')'
//! ```
//!
//! Application is left-associative and a trailing binder extends as far
//! right as possible. The printer emits minimal parentheses and names bound
//! variables `x0, x1, ...` / `'a0, 'a1, ...` by binder depth, skipping any
//! name that is free in the term.

use std::collections::BTreeSet;
use std::fmt;

use super::term::{LmTerm, StreamRef, StreamVar, TermVar};
use crate::lexer::{ParseError, Tok, Tokens};

pub fn parse_lm(src: &str) -> Result<LmTerm, ParseError> {
    let mut toks = Tokens::new(src)?;
    let t = parse_term(&mut toks)?;
    if *toks.peek() != Tok::Eof {
        return Err(toks.unexpected("end of input"));
    }
    Ok(t)
}

fn parse_term(toks: &mut Tokens) -> Result<LmTerm, ParseError> {
    match toks.peek() {
        Tok::Backslash | Tok::Hash => parse_binder(toks),
        _ => parse_app(toks),
    }
}

fn parse_binder(toks: &mut Tokens) -> Result<LmTerm, ParseError> {
    match toks.next().tok {
        Tok::Backslash => {
            let mut vars = Vec::new();
            while let Tok::Ident(name) = toks.peek() {
                vars.push(TermVar::new(name));
                toks.next();
            }
            if vars.is_empty() {
                return Err(toks.unexpected("a term variable after '\\'"));
            }
            toks.expect(Tok::Dot, "'.'")?;
            let body = parse_term(toks)?;
            Ok(LmTerm::lams(&vars, body))
        }
        Tok::Hash => {
            let mut vars = Vec::new();
            while let Tok::StreamIdent(name) = toks.peek() {
                vars.push(StreamVar::new(name));
                toks.next();
            }
            if vars.is_empty() {
                return Err(toks.unexpected("a stream variable after '#'"));
            }
            toks.expect(Tok::Dot, "'.'")?;
            let body = parse_term(toks)?;
            Ok(LmTerm::mus(&vars, body))
        }
        _ => unreachable!("caller checked for a binder"),
    }
}

fn parse_atom(toks: &mut Tokens) -> Result<LmTerm, ParseError> {
    match toks.peek().clone() {
        Tok::Ident(name) => {
            toks.next();
            Ok(LmTerm::var(name))
        }
        Tok::LParen => {
            toks.next();
            let t = parse_term(toks)?;
            toks.expect(Tok::RParen, "')'")?;
            Ok(t)
        }
        Tok::StreamIdent(_) => {
            Err(toks.error_here("a stream variable cannot stand alone as a term"))
        }
        Tok::Upper(name) => Err(toks.error_here(format!(
            "`{name}` is not a Λμ variable (term variables start with a lowercase letter)"
        ))),
        _ => Err(toks.unexpected("a term")),
    }
}

fn parse_app(toks: &mut Tokens) -> Result<LmTerm, ParseError> {
    let mut acc = parse_atom(toks)?;
    loop {
        match toks.peek().clone() {
            Tok::Ident(_) | Tok::LParen => {
                let arg = parse_atom(toks)?;
                acc = LmTerm::app(acc, arg);
            }
            Tok::StreamIdent(name) => {
                toks.next();
                acc = LmTerm::sapp(acc, StreamVar::new(name));
            }
            Tok::Backslash | Tok::Hash => {
                let arg = parse_binder(toks)?;
                return Ok(LmTerm::app(acc, arg));
            }
            _ => return Ok(acc),
        }
    }
}

/// Deterministic binder naming: the `d`-th name of the sequence
/// `prefix0, prefix1, ...` with the term's free names removed.
struct Names {
    prefix: &'static str,
    avoid: BTreeSet<String>,
    cache: Vec<String>,
    next: usize,
}

impl Names {
    fn new(prefix: &'static str, avoid: BTreeSet<String>) -> Self {
        Names { prefix, avoid, cache: Vec::new(), next: 0 }
    }

    fn at_depth(&mut self, depth: usize) -> String {
        while self.cache.len() <= depth {
            let candidate = format!("{}{}", self.prefix, self.next);
            self.next += 1;
            if !self.avoid.contains(&candidate) {
                self.cache.push(candidate);
            }
        }
        self.cache[depth].clone()
    }
}

struct Printer {
    terms: Names,
    streams: Names,
    lam_stack: Vec<String>,
    mu_stack: Vec<String>,
}

impl Printer {
    fn new(t: &LmTerm) -> Self {
        let (ft, fs) = t.free_vars();
        Printer {
            terms: Names::new("x", ft.iter().map(|v| v.name().to_string()).collect()),
            streams: Names::new("a", fs.iter().map(|v| v.name().to_string()).collect()),
            lam_stack: Vec::new(),
            mu_stack: Vec::new(),
        }
    }

    fn stream(&self, s: &StreamRef, out: &mut String) {
        out.push('\'');
        match s {
            StreamRef::Free(a) => out.push_str(a.name()),
            StreamRef::Bound(j) => {
                let idx = self.mu_stack.len().checked_sub(1 + *j as usize);
                match idx {
                    Some(i) => out.push_str(&self.mu_stack[i]),
                    None => out.push_str(&format!("?{j}")),
                }
            }
        }
    }

    /// `rightmost`: nothing follows this term before the end of the
    /// enclosing parenthesis or binder body.
    fn term(&mut self, t: &LmTerm, rightmost: bool, out: &mut String) {
        match t {
            LmTerm::Var(x) => out.push_str(x.name()),
            LmTerm::Bound(i) => {
                let idx = self.lam_stack.len().checked_sub(1 + *i as usize);
                match idx {
                    Some(k) => out.push_str(&self.lam_stack[k]),
                    None => out.push_str(&format!("?{i}")),
                }
            }
            LmTerm::Lam(_) | LmTerm::Mu(_) => {
                if !rightmost {
                    out.push('(');
                }
                self.binder(t, out);
                if !rightmost {
                    out.push(')');
                }
            }
            LmTerm::App(f, a) => {
                self.head(f, out);
                out.push(' ');
                match **a {
                    LmTerm::App(..) | LmTerm::SApp(..) => {
                        out.push('(');
                        self.term(a, true, out);
                        out.push(')');
                    }
                    _ => self.term(a, rightmost, out),
                }
            }
            LmTerm::SApp(f, s) => {
                self.head(f, out);
                out.push(' ');
                self.stream(s, out);
            }
        }
    }

    fn head(&mut self, f: &LmTerm, out: &mut String) {
        match f {
            LmTerm::Lam(_) | LmTerm::Mu(_) => {
                out.push('(');
                self.binder(f, out);
                out.push(')');
            }
            _ => self.term(f, false, out),
        }
    }

    fn binder(&mut self, t: &LmTerm, out: &mut String) {
        match t {
            LmTerm::Lam(body) => {
                let name = self.terms.at_depth(self.lam_stack.len());
                out.push('\\');
                out.push_str(&name);
                out.push_str(". ");
                self.lam_stack.push(name);
                self.term(body, true, out);
                self.lam_stack.pop();
            }
            LmTerm::Mu(body) => {
                let name = self.streams.at_depth(self.mu_stack.len());
                out.push_str("#'");
                out.push_str(&name);
                out.push_str(". ");
                self.mu_stack.push(name);
                self.term(body, true, out);
                self.mu_stack.pop();
            }
            _ => unreachable!(),
        }
    }
}

/// Prints a term in the surface syntax.
pub fn print_lm(t: &LmTerm) -> String {
    let mut out = String::new();
    Printer::new(t).term(t, true, &mut out);
    out
}

impl fmt::Display for LmTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_lm(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LmTerm {
        parse_lm(s).unwrap()
    }

    #[test]
    fn application_is_left_associative() {
        let t = p("f x y");
        assert_eq!(t, LmTerm::app(LmTerm::app(p("f"), p("x")), p("y")));
    }

    #[test]
    fn binder_extends_right() {
        assert_eq!(p("\\x. x y"), LmTerm::lam(&TermVar::new("x"), p("x y")));
        assert_eq!(p("f \\x. x"), LmTerm::app(p("f"), p("\\x. x")));
    }

    #[test]
    fn multi_binder_sugar() {
        assert_eq!(p("\\x y. x"), p("\\x. \\y. x"));
        assert_eq!(p("#'a 'b. x 'b 'a"), p("#'a. #'b. x 'b 'a"));
    }

    #[test]
    fn stream_application_mixes_with_terms() {
        let t = p("m 'a n");
        let expected = LmTerm::app(LmTerm::sapp(p("m"), StreamVar::new("a")), p("n"));
        assert_eq!(t, expected);
    }

    #[test]
    fn prints_deterministic_names() {
        assert_eq!(print_lm(&p("\\u. \\v. u")), "\\x0. \\x1. x0");
        assert_eq!(print_lm(&p("#'q. y 'q")), "#'a0. y 'a0");
        // free x0 is skipped
        assert_eq!(print_lm(&p("\\u. x0 u")), "\\x1. x0 x1");
    }

    #[test]
    fn prints_minimal_parentheses() {
        assert_eq!(print_lm(&p("(f x) y")), "f x y");
        assert_eq!(print_lm(&p("f (x y)")), "f (x y)");
        assert_eq!(print_lm(&p("f (\\x. x)")), "f \\x0. x0");
        assert_eq!(print_lm(&p("f (\\x. x) y")), "f (\\x0. x0) y");
        assert_eq!(print_lm(&p("(\\x. x) y")), "(\\x0. x0) y");
        assert_eq!(print_lm(&p("(#'a. x) 'b")), "(#'a0. x) 'b");
        assert_eq!(print_lm(&p("f (g \\x. x) y")), "f (g \\x0. x0) y");
        assert_eq!(print_lm(&p("\\x. f (\\y. y)")), "\\x0. f \\x1. x1");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_lm("\\x. ").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_lm("'a x").unwrap_err();
        assert_eq!(e.column, 1);
        let e = parse_lm("(x y").unwrap_err();
        assert!(e.message.contains("')'"));
        let e = parse_lm("x )").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_lm("K0").is_err());
    }
}
