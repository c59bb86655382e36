//! Exhaustive search for good grid colorings (no monochromatic and no rainbow
//! rectangle) with color and row symmetry breaking.

mod cert;
pub(crate) mod driver;
mod grid;

pub use cert::{parse_search_certificate, write_search_certificate, SearchCertificate};
pub use grid::{minimal_forcing_m, search_good_coloring};

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

/// Knobs shared by the grid and complete-graph engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of decision nodes; `None` searches to completion.
    pub node_budget: Option<u64>,
    /// Only allow a color `c` once colors `1..c` have been used.
    pub color_symmetry: bool,
    /// Grid rows must be lexicographically nondecreasing. Ignored by the
    /// graph engine.
    pub row_order_symmetry: bool,
    /// Check rainbow patterns at every assignment rather than only on
    /// complete colorings.
    pub eager_rainbow_pruning: bool,
    /// Number of worker threads; `None` means one.
    pub worker_hint: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: None,
            color_symmetry: true,
            row_order_symmetry: true,
            eager_rainbow_pruning: true,
            worker_hint: None,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(mut self, budget: u64) -> Self {
        assert!(budget > 0, "node budget must be positive");
        self.node_budget = Some(budget);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.worker_hint = Some(workers);
        self
    }

    /// No symmetry breaking at all.
    pub fn plain() -> Self {
        SearchOptions {
            color_symmetry: false,
            row_order_symmetry: false,
            ..Self::default()
        }
    }

    pub(crate) fn workers(&self) -> usize {
        self.worker_hint.unwrap_or(1).max(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeKind {
    Found,
    Exhausted,
    BudgetExceeded,
}

impl OutcomeKind {
    /// Keyword used in certificate headers.
    pub fn keyword(self) -> &'static str {
        match self {
            OutcomeKind::Found => "found",
            OutcomeKind::Exhausted => "exhausted",
            OutcomeKind::BudgetExceeded => "budget",
        }
    }
}

impl fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for OutcomeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "found" => Ok(OutcomeKind::Found),
            "exhausted" => Ok(OutcomeKind::Exhausted),
            "budget" => Ok(OutcomeKind::BudgetExceeded),
            other => Err(format!("unknown outcome {other:?}")),
        }
    }
}

/// Result of one engine run. `witness` is present exactly when `kind` is
/// [`OutcomeKind::Found`].
#[derive(Debug, Clone)]
pub struct SearchOutcome<W> {
    pub kind: OutcomeKind,
    pub witness: Option<W>,
    pub nodes_visited: u64,
    pub elapsed: Duration,
}

impl<W> SearchOutcome<W> {
    pub fn is_found(&self) -> bool {
        self.kind == OutcomeKind::Found
    }

    pub fn is_exhausted(&self) -> bool {
        self.kind == OutcomeKind::Exhausted
    }
}
