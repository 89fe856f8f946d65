//! Seeded random terms for property checks.
//!
//! Variables come from small pools (`x y z`, `'a 'b 'c`) so that binders
//! and occurrences collide often.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lm::{LmTerm, StreamVar, TermVar};
use crate::scl::{SclConst, SclStream, SclTerm};

pub const TERM_POOL: [&str; 3] = ["x", "y", "z"];
pub const STREAM_POOL: [&str; 3] = ["a", "b", "c"];

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn term_var(&mut self) -> TermVar {
        TermVar::new(TERM_POOL[self.below(3)])
    }

    pub fn stream_var(&mut self) -> StreamVar {
        StreamVar::new(STREAM_POOL[self.below(3)])
    }

    /// A Λμ-term with at most `size` nodes.
    pub fn lm_term(&mut self, size: usize) -> LmTerm {
        if size <= 1 {
            return LmTerm::Var(self.term_var());
        }
        // Var | Lam | App | Mu | SApp, uniformly where the size allows
        let choice = if size == 2 { [0, 1, 3][self.below(3)] } else { self.below(5) };
        match choice {
            0 => LmTerm::Var(self.term_var()),
            1 => {
                let x = self.term_var();
                LmTerm::lam(&x, self.lm_term(size - 1))
            }
            2 => {
                let left = 1 + self.below(size - 2);
                let f = self.lm_term(left);
                LmTerm::app(f, self.lm_term(size - 1 - left))
            }
            3 => {
                let a = self.stream_var();
                LmTerm::mu(&a, self.lm_term(size - 1))
            }
            _ => {
                // the stream argument counts as a node
                let f = self.lm_term(size - 2);
                LmTerm::sapp(f, self.stream_var())
            }
        }
    }

    fn scl_leaf(&mut self) -> SclTerm {
        if self.below(2) == 0 {
            SclTerm::Const(SclConst::ALL[self.below(7)])
        } else {
            SclTerm::Var(self.term_var())
        }
    }

    /// An SCL term with measure at most `measure`.
    pub fn scl_term(&mut self, measure: usize) -> SclTerm {
        if measure < 3 {
            return self.scl_leaf();
        }
        match self.below(3) {
            0 => self.scl_leaf(),
            1 => {
                let left = 1 + self.below(measure - 2);
                let t = self.scl_term(left);
                SclTerm::app(t, self.scl_term(measure - 1 - left))
            }
            _ => {
                let left = 1 + self.below(measure - 2);
                let t = self.scl_term(left);
                SclTerm::sapp(t, self.scl_stream(measure - 1 - left))
            }
        }
    }

    /// An SCL stream whose measure is at most `measure` (at least 1).
    pub fn scl_stream(&mut self, measure: usize) -> SclStream {
        // a cons costs 2 (node plus the `::` count) plus head and tail
        if measure < 4 || self.below(2) == 0 {
            return SclStream::Var(self.stream_var());
        }
        let head = 1 + self.below(measure - 3);
        let t = self.scl_term(head);
        SclStream::cons(t, self.scl_stream(measure - 2 - head))
    }
}
