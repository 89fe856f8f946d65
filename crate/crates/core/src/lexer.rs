//! Tokenizer shared by the Λμ and SCL surface syntaxes.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Backslash,
    Hash,
    Dot,
    LParen,
    RParen,
    Star,
    ColonColon,
    /// Lowercase identifier: a term variable.
    Ident(String),
    /// `'name`: a stream variable.
    StreamIdent(String),
    /// Uppercase identifier: an SCL constant.
    Upper(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Backslash => f.write_str("'\\'"),
            Tok::Hash => f.write_str("'#'"),
            Tok::Dot => f.write_str("'.'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Star => f.write_str("'*'"),
            Tok::ColonColon => f.write_str("'::'"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::StreamIdent(s) => write!(f, "stream variable `'{s}`"),
            Tok::Upper(s) => write!(f, "constant `{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

/// A syntax error with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_lowercase() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);

    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let err = |message: String| ParseError { line: l, column: col, message };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = match c {
            '\\' => {
                bump(&mut chars);
                Tok::Backslash
            }
            '#' => {
                bump(&mut chars);
                Tok::Hash
            }
            '.' => {
                bump(&mut chars);
                Tok::Dot
            }
            '(' => {
                bump(&mut chars);
                Tok::LParen
            }
            ')' => {
                bump(&mut chars);
                Tok::RParen
            }
            '*' => {
                bump(&mut chars);
                Tok::Star
            }
            ':' => {
                bump(&mut chars);
                if chars.peek() == Some(&':') {
                    bump(&mut chars);
                    Tok::ColonColon
                } else {
                    return Err(err("expected '::'".into()));
                }
            }
            '\'' => {
                bump(&mut chars);
                let mut name = String::new();
                match chars.peek() {
                    Some(&c) if is_ident_start(c) => {}
                    _ => return Err(err("expected a stream variable name after '\\''".into())),
                }
                while let Some(&c) = chars.peek() {
                    if !is_ident_continue(c) {
                        break;
                    }
                    name.push(c);
                    bump(&mut chars);
                }
                Tok::StreamIdent(name)
            }
            c if is_ident_start(c) || c.is_ascii_uppercase() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if !is_ident_continue(c) {
                        break;
                    }
                    name.push(c);
                    bump(&mut chars);
                }
                if c.is_ascii_uppercase() {
                    Tok::Upper(name)
                } else {
                    Tok::Ident(name)
                }
            }
            other => return Err(err(format!("unexpected character {other:?}"))),
        };
        out.push(Spanned { tok, line: l, column: col });
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

/// Cursor over a token vector.
pub(crate) struct Tokens {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Tokens {
    pub fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Tokens { toks: tokenize(src)?, pos: 0 })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn mark(&self) -> usize {
        self.pos
    }

    pub fn reset(&mut self, mark: usize) {
        self.pos = mark;
    }

    pub fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError { line: t.line, column: t.column, message: message.into() }
    }

    pub fn unexpected(&self, wanted: &str) -> ParseError {
        self.error_here(format!("expected {wanted}, found {}", self.peek()))
    }

    pub fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        let toks = tokenize("x\n  'a").unwrap();
        assert_eq!((toks[0].line, toks[0].column), (1, 1));
        assert_eq!(toks[1].tok, Tok::StreamIdent("a".into()));
        assert_eq!((toks[1].line, toks[1].column), (2, 3));
    }

    #[test]
    fn rejects_non_ascii() {
        let e = tokenize("λx. x").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
    }

    #[test]
    fn single_colon_is_an_error() {
        let e = tokenize("x : y").unwrap_err();
        assert_eq!(e.column, 3);
    }
}
