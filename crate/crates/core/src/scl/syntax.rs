//! Surface syntax for SCL.
//!
//! ```text
//! term   ::= atom { atom | '*' stream }
//! atom   ::= CONST | ident | '(' term ')'
//! stream ::= 'ident | '(' inner ')'
//! inner  ::= 'ident | stream | term '::' inner
//! ```
//!
//! Juxtaposition (`·`) and `*` (`⋆`) share one precedence level and
//! associate to the left; `::` associates to the right.

use std::fmt;

use super::term::{SclConst, SclStream, SclTerm};
use crate::lexer::{ParseError, Tok, Tokens};
use crate::lm::StreamVar;

pub fn parse_scl(src: &str) -> Result<SclTerm, ParseError> {
    let mut toks = Tokens::new(src)?;
    let t = term(&mut toks)?;
    if *toks.peek() != Tok::Eof {
        return Err(toks.unexpected("end of input"));
    }
    Ok(t)
}

pub fn parse_scl_stream(src: &str) -> Result<SclStream, ParseError> {
    let mut toks = Tokens::new(src)?;
    let s = if matches!(toks.peek(), Tok::StreamIdent(_) | Tok::LParen) {
        stream(&mut toks)?
    } else {
        inner(&mut toks)?
    };
    if *toks.peek() != Tok::Eof {
        return Err(toks.unexpected("end of input"));
    }
    Ok(s)
}

fn atom(toks: &mut Tokens) -> Result<SclTerm, ParseError> {
    match toks.peek().clone() {
        Tok::Upper(name) => match SclConst::from_name(&name) {
            Some(c) => {
                toks.next();
                Ok(SclTerm::Const(c))
            }
            None => Err(toks.error_here(format!(
                "unknown constant `{name}` (expected one of K0 K1 S0 S1 C10 C11 W1)"
            ))),
        },
        Tok::Ident(name) => {
            toks.next();
            Ok(SclTerm::var(name))
        }
        Tok::LParen => {
            toks.next();
            let t = term(toks)?;
            toks.expect(Tok::RParen, "')'")?;
            Ok(t)
        }
        Tok::StreamIdent(_) => Err(toks.error_here("a stream cannot stand alone as a term")),
        _ => Err(toks.unexpected("a term")),
    }
}

fn term(toks: &mut Tokens) -> Result<SclTerm, ParseError> {
    let mut acc = atom(toks)?;
    loop {
        match toks.peek() {
            Tok::Upper(_) | Tok::Ident(_) | Tok::LParen => {
                let u = atom(toks)?;
                acc = SclTerm::app(acc, u);
            }
            Tok::Star => {
                toks.next();
                let s = stream(toks)?;
                acc = SclTerm::sapp(acc, s);
            }
            _ => return Ok(acc),
        }
    }
}

fn stream(toks: &mut Tokens) -> Result<SclStream, ParseError> {
    match toks.peek().clone() {
        Tok::StreamIdent(name) => {
            toks.next();
            Ok(SclStream::Var(StreamVar::new(name)))
        }
        Tok::LParen => {
            toks.next();
            let s = inner(toks)?;
            toks.expect(Tok::RParen, "')'")?;
            Ok(s)
        }
        _ => Err(toks.unexpected("a stream ('a or (T :: S))")),
    }
}

fn inner(toks: &mut Tokens) -> Result<SclStream, ParseError> {
    if let Tok::StreamIdent(name) = toks.peek().clone() {
        toks.next();
        return Ok(SclStream::Var(StreamVar::new(name)));
    }
    if *toks.peek() == Tok::LParen {
        // either a parenthesized stream or the head term of a cons
        let mark = toks.mark();
        if let Ok(s) = stream(toks) {
            if *toks.peek() == Tok::RParen {
                return Ok(s);
            }
        }
        toks.reset(mark);
    }
    let head = term(toks)?;
    toks.expect(Tok::ColonColon, "'::'")?;
    let tail = inner(toks)?;
    Ok(SclStream::cons(head, tail))
}

fn print_term(t: &SclTerm, out: &mut String) {
    match t {
        SclTerm::Const(c) => out.push_str(c.name()),
        SclTerm::Var(x) => out.push_str(x.name()),
        SclTerm::App(f, u) => {
            print_term(f, out);
            out.push(' ');
            if matches!(**u, SclTerm::App(..) | SclTerm::SApp(..)) {
                out.push('(');
                print_term(u, out);
                out.push(')');
            } else {
                print_term(u, out);
            }
        }
        SclTerm::SApp(f, s) => {
            print_term(f, out);
            out.push_str(" * ");
            print_stream(s, out);
        }
    }
}

fn print_stream(s: &SclStream, out: &mut String) {
    match s {
        SclStream::Var(a) => {
            out.push('\'');
            out.push_str(a.name());
        }
        SclStream::Cons(..) => {
            out.push('(');
            let mut cur = s;
            while let SclStream::Cons(h, rest) = cur {
                print_term(h, out);
                out.push_str(" :: ");
                cur = rest;
            }
            print_stream(cur, out);
            out.push(')');
        }
    }
}

pub fn print_scl(t: &SclTerm) -> String {
    let mut out = String::new();
    print_term(t, &mut out);
    out
}

pub fn print_scl_stream(s: &SclStream) -> String {
    let mut out = String::new();
    print_stream(s, &mut out);
    out
}

impl fmt::Display for SclTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_scl(self))
    }
}

impl fmt::Display for SclStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_scl_stream(self))
    }
}
