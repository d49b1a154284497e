//! Depth-first branch and bound over first-uncovered-square branchings.
//!
//! Top-level branches run independently (each with its own incumbent and
//! node budget), so the result and the counters do not depend on the
//! number of threads. Within a branch the incumbent is replaced only on
//! strict improvement; across branches ties go to the lexicographically
//! smallest normalized witness.

use std::collections::HashSet;

use rayon::prelude::*;

use super::state::State;
use super::{finish, heuristic, normalize, pad, root_state, SearchConfig, SearchOutcome};

struct Worker<'a> {
    cfg: &'a SearchConfig,
    lower_bound: u32,
    best_m: u32,
    best: State,
    expanded: u64,
    pruned: u64,
    budget: Option<u64>,
    exhausted: bool,
    seen: HashSet<[u128; 3]>,
}

impl Worker<'_> {
    fn visit(&mut self, s: State) {
        if self.budget.is_some_and(|b| self.expanded >= b) {
            self.exhausted = true;
        }
        if self.exhausted {
            return;
        }
        self.expanded += 1;
        let x = s.first_uncovered();
        if x > self.best_m {
            self.best_m = x;
            self.best = s;
        }
        let left = self.cfg.l - s.used();
        if left == 0 {
            return;
        }
        if self.cfg.prune {
            let bound = s.upper_bound(left, self.cfg.max_loc);
            if bound <= self.best_m || bound < self.lower_bound {
                self.pruned += 1;
                return;
            }
        }
        for add in s.covering_options(x, left, self.cfg.max_loc) {
            let child = s.apply(&add);
            if !self.seen.insert(child.parts) {
                self.pruned += 1;
                continue;
            }
            self.visit(child);
        }
    }
}

pub(super) fn run(cfg: &SearchConfig) -> SearchOutcome {
    if cfg.l < 2 {
        // A single segment covers nothing.
        return finish(cfg, &State::empty(), true, 1, 0);
    }
    let root = root_state();
    let root_m = root.first_uncovered();
    let lower_bound = if cfg.prune {
        heuristic::beam_lower_bound(cfg)
    } else {
        0
    };
    let branches = root.covering_options(root_m, cfg.l - root.used(), cfg.max_loc);
    let budget = cfg
        .budget_nodes
        .map(|b| b.saturating_sub(1).div_ceil(branches.len().max(1) as u64));
    let results: Vec<Worker> = branches
        .par_iter()
        .map(|add| {
            let child = root.apply(add);
            let mut w = Worker {
                cfg,
                lower_bound,
                best_m: root_m,
                best: root,
                expanded: 0,
                pruned: 0,
                budget,
                exhausted: false,
                seen: HashSet::from([child.parts]),
            };
            w.visit(child);
            w
        })
        .collect();

    let (mut best_m, mut best) = (root_m, root);
    let (mut expanded, mut pruned, mut complete) = (1, 0, true);
    // Ties between branches go to the lexicographically smallest witness.
    let witness = |s: &State| normalize(&pad(s, cfg.l, cfg.max_loc).to_placement().expect("l >= 1"));
    for w in &results {
        if w.best_m > best_m || (w.best_m == best_m && witness(&w.best) < witness(&best)) {
            best_m = w.best_m;
            best = w.best;
        }
        expanded += w.expanded;
        pruned += w.pruned;
        complete &= !w.exhausted;
    }
    if cfg.budget_nodes == Some(0) {
        complete = false;
    }
    let mut out = finish(cfg, &best, complete, expanded, pruned);
    out.seed_lower_bound = cfg.prune.then_some(lower_bound as u64);
    out
}
