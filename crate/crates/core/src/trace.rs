use std::fmt;

/// Path from the root to a redex: `0` is the function (or binder body)
/// child, `1` the argument child of a term application.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Position(pub Vec<u8>);

impl Position {
    pub fn root() -> Position {
        Position(Vec::new())
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// One rewrite step: the rule, where it fired, and the resulting term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep<R, T> {
    pub rule: R,
    pub position: Position,
    pub term: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace<R, T> {
    pub steps: Vec<TraceStep<R, T>>,
}

impl<R, T> Default for Trace<R, T> {
    fn default() -> Self {
        Trace { steps: Vec::new() }
    }
}

impl<R: Copy, T> Trace<R, T> {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn rules(&self) -> Vec<R> {
        self.steps.iter().map(|s| s.rule).collect()
    }
}

impl<R: fmt::Display, T: fmt::Display> Trace<R, T> {
    /// One line per step: `k<TAB>rule<TAB>term`, `k` counting from 1.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, s) in self.steps.iter().enumerate() {
            out.push_str(&format!("{}\t{}\t{}\n", k + 1, s.rule, s.term));
        }
        out
    }
}
