use std::fmt;

/// Outcome of a budgeted convertibility check. `Equal` and `Distinct`
/// carry the normal forms that were compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqVerdict<T> {
    Equal(T, T),
    Distinct(T, T),
    Unknown,
}

/// The verdict without its evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

impl<T> EqVerdict<T> {
    pub fn verdict(&self) -> Verdict {
        match self {
            EqVerdict::Equal(..) => Verdict::Equal,
            EqVerdict::Distinct(..) => Verdict::Distinct,
            EqVerdict::Unknown => Verdict::Unknown,
        }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, EqVerdict::Equal(..))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, EqVerdict::Distinct(..))
    }

    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> EqVerdict<U> {
        match self {
            EqVerdict::Equal(a, b) => EqVerdict::Equal(f(a), f(b)),
            EqVerdict::Distinct(a, b) => EqVerdict::Distinct(f(a), f(b)),
            EqVerdict::Unknown => EqVerdict::Unknown,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "Equal",
            Verdict::Distinct => "Distinct",
            Verdict::Unknown => "Unknown",
        })
    }
}
