//! Depth-first backtracking shared by the grid and graph engines.
//!
//! The tree is cut at a fixed depth. Every prefix that survives pruning
//! becomes an independent subtree, explored by a pool of workers. Results are
//! combined in prefix order, so the verdict, the witness and the node count
//! are identical to a single-threaded run no matter how many workers ran.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::{OutcomeKind, SearchOptions, SearchOutcome};

/// Number of slots assigned before the tree is split into subtrees.
pub(crate) const SPLIT_DEPTH: usize = 10;

/// How often (in nodes) a running subtree polls for cancellation.
const CANCEL_POLL: u64 = 1 << 12;

/// A constraint problem whose slots are colored in index order.
pub(crate) trait Problem {
    type Witness;

    fn slots(&self) -> usize;

    fn colors(&self) -> u32;

    /// Symmetry restrictions beyond first-use color ordering.
    fn admits(&self, _slot: usize, _color: u32) -> bool {
        true
    }

    /// Assigns `color` to `slot`, returning false (with the state untouched)
    /// when the partial assignment already contains a forbidden pattern.
    fn assign(&mut self, slot: usize, color: u32) -> bool;

    fn unassign(&mut self, slot: usize);

    /// Final check of a complete assignment, for constraints that were not
    /// enforced eagerly.
    fn accept_leaf(&self) -> bool {
        true
    }

    fn witness(&self) -> Self::Witness;
}

struct Walk<'a, P: Problem> {
    problem: P,
    color_symmetry: bool,
    budget: Option<u64>,
    nodes: u64,
    aborted: bool,
    cancel: Option<(&'a AtomicUsize, usize)>,
}

impl<P: Problem> Walk<'_, P> {
    fn max_color(&self, max_used: u32) -> u32 {
        if self.color_symmetry {
            (max_used + 1).min(self.problem.colors())
        } else {
            self.problem.colors()
        }
    }

    fn visit(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
        }
        if let Some((cutoff, me)) = self.cancel {
            if self.nodes.is_multiple_of(CANCEL_POLL) && cutoff.load(Ordering::Relaxed) < me {
                self.aborted = true;
            }
        }
        !self.aborted
    }

    /// Completes the assignment from `slot` on; true when a leaf was accepted,
    /// leaving the state at that leaf.
    fn solve(&mut self, slot: usize, max_used: u32) -> bool {
        if slot == self.problem.slots() {
            return self.problem.accept_leaf();
        }
        for c in 1..=self.max_color(max_used) {
            if !self.problem.admits(slot, c) || !self.problem.assign(slot, c) {
                continue;
            }
            if !self.visit() {
                return false;
            }
            if self.solve(slot + 1, max_used.max(c)) {
                return true;
            }
            self.problem.unassign(slot);
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// Collects every surviving assignment of the first `depth` slots.
    fn prefixes(&mut self, slot: usize, depth: usize, max_used: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot == depth {
            out.push(current.clone());
            return;
        }
        for c in 1..=self.max_color(max_used) {
            if !self.problem.admits(slot, c) || !self.problem.assign(slot, c) {
                continue;
            }
            self.nodes += 1;
            current.push(c);
            self.prefixes(slot + 1, depth, max_used.max(c), current, out);
            current.pop();
            self.problem.unassign(slot);
        }
    }
}

struct Subtree<W> {
    nodes: u64,
    aborted: bool,
    witness: Option<W>,
}

fn run_subtree<P: Problem>(
    mut problem: P,
    prefix: &[u32],
    opts: &SearchOptions,
    budget: Option<u64>,
    cancel: Option<(&AtomicUsize, usize)>,
) -> Subtree<P::Witness> {
    for (slot, &c) in prefix.iter().enumerate() {
        let ok = problem.assign(slot, c);
        debug_assert!(ok, "prefix replay must succeed");
    }
    let max_used = prefix.iter().copied().max().unwrap_or(0);
    let mut walk = Walk {
        problem,
        color_symmetry: opts.color_symmetry,
        budget,
        nodes: 0,
        aborted: false,
        cancel,
    };
    let found = walk.solve(prefix.len(), max_used);
    Subtree {
        nodes: walk.nodes,
        aborted: walk.aborted,
        witness: found.then(|| walk.problem.witness()),
    }
}

/// Runs the search; `make` builds a fresh empty problem for each subtree.
pub(crate) fn search<P, F>(make: F, opts: &SearchOptions) -> SearchOutcome<P::Witness>
where
    P: Problem,
    P::Witness: Send,
    F: Fn() -> P + Sync,
{
    let start = Instant::now();
    let root = make();
    let depth = root.slots().min(SPLIT_DEPTH);
    let mut walk = Walk {
        problem: root,
        color_symmetry: opts.color_symmetry,
        budget: None,
        nodes: 0,
        aborted: false,
        cancel: None,
    };
    let mut prefixes = Vec::new();
    walk.prefixes(0, depth, 0, &mut Vec::with_capacity(depth), &mut prefixes);
    let prefix_nodes = walk.nodes;

    let finish = |kind, witness, nodes| SearchOutcome {
        kind,
        witness,
        nodes_visited: nodes,
        elapsed: start.elapsed(),
    };
    if let Some(b) = opts.node_budget {
        if prefix_nodes > b {
            return finish(OutcomeKind::BudgetExceeded, None, prefix_nodes);
        }
    }
    let remaining = opts.node_budget.map(|b| b - prefix_nodes);

    let results: Vec<Option<Subtree<P::Witness>>> = {
        let workers = opts.workers().min(prefixes.len()).max(1);
        let slots: Vec<Mutex<Option<Subtree<P::Witness>>>> = prefixes.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        let cutoff = AtomicUsize::new(usize::MAX);
        // (first subtree not yet folded into the running total, running total)
        let progress = Mutex::new((0usize, prefix_nodes));
        let worker = || loop {
            let idx = next.fetch_add(1, Ordering::SeqCst);
            if idx >= prefixes.len() || idx > cutoff.load(Ordering::SeqCst) {
                break;
            }
            let cancel = (workers > 1).then_some((&cutoff, idx));
            let res = run_subtree(make(), &prefixes[idx], opts, remaining, cancel);
            let decided = res.witness.is_some() || (res.aborted && cancel.is_none_or(|(c, _)| c.load(Ordering::SeqCst) >= idx));
            *slots[idx].lock().unwrap() = Some(res);
            if decided {
                cutoff.fetch_min(idx, Ordering::SeqCst);
            }
            if let Some(b) = opts.node_budget {
                let mut guard = progress.lock().unwrap();
                let (done, total) = &mut *guard;
                while *done < slots.len() {
                    let Some(n) = slots[*done].lock().unwrap().as_ref().map(|r| r.nodes) else {
                        break;
                    };
                    *total += n;
                    if *total > b {
                        cutoff.fetch_min(*done, Ordering::SeqCst);
                        *done = slots.len();
                        break;
                    }
                    *done += 1;
                }
            }
        };
        if workers == 1 {
            worker();
        } else {
            std::thread::scope(|s| {
                for _ in 0..workers {
                    s.spawn(worker);
                }
            });
        }
        slots.into_iter().map(|m| m.into_inner().unwrap()).collect()
    };

    let mut nodes = prefix_nodes;
    for res in results {
        // every subtree before the decisive one ran to completion
        let res = res.expect("subtree before cutoff was skipped");
        nodes += res.nodes;
        if opts.node_budget.is_some_and(|b| nodes > b) || res.aborted {
            return finish(OutcomeKind::BudgetExceeded, None, nodes);
        }
        if let Some(w) = res.witness {
            return finish(OutcomeKind::Found, Some(w), nodes);
        }
    }
    finish(OutcomeKind::Exhausted, None, nodes)
}
