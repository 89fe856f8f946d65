use thiserror::Error;

/// Resource limits for normalization and convertibility checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    max_steps: usize,
    max_term_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("budget bounds must be strictly positive (got steps={steps}, size={size})")]
pub struct BudgetError {
    pub steps: usize,
    pub size: usize,
}

impl Budget {
    /// Defaults of the command line tool.
    pub const FAST: Budget = Budget { max_steps: 10_000, max_term_size: 100_000 };
    pub const THOROUGH: Budget = Budget { max_steps: 200_000, max_term_size: 1_000_000 };

    pub fn new(max_steps: usize, max_term_size: usize) -> Result<Budget, BudgetError> {
        if max_steps == 0 || max_term_size == 0 {
            return Err(BudgetError { steps: max_steps, size: max_term_size });
        }
        Ok(Budget { max_steps, max_term_size })
    }

    pub fn max_steps(&self) -> usize {
        self.max_steps
    }

    pub fn max_term_size(&self) -> usize {
        self.max_term_size
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::FAST
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_bounds() {
        assert!(Budget::new(0, 10).is_err());
        assert!(Budget::new(10, 0).is_err());
        assert_eq!(Budget::new(10, 20).unwrap().max_steps(), 10);
    }
}
