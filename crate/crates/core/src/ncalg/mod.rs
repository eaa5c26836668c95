//! Normal-form arithmetic in `H(P, gamma)` and `D(Q, gamma)`.

use std::fmt;

pub mod element;
pub mod engine;
pub mod filtration;
pub mod rewrite;
pub mod spec;

pub use element::{Element, Monomial};
pub use engine::Algebra;
pub use filtration::{degree_limit, leading_term, LimitDegree};
pub use rewrite::{check_diamond, CriticalPair, DiamondReport, Strategy, WordSum};
pub use spec::{AlgebraSpec, Kind};

/// A generator. The derived order `U < V < W` is the normal-form order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    U,
    V,
    W,
}

impl Gen {
    pub fn from_char(c: char) -> Option<Gen> {
        match c {
            'u' | 'U' => Some(Gen::U),
            'v' | 'V' => Some(Gen::V),
            'w' | 'W' => Some(Gen::W),
            _ => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gen::U => "u",
            Gen::V => "v",
            Gen::W => "w",
        })
    }
}
