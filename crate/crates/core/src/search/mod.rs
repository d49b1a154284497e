//! Search for placements `(I, J, K)` of `ℓ` segments maximizing the covered
//! prefix `m`, with all locations in `[0, max_loc]`.
//!
//! Every mode grows placements from the first uncovered square: a node
//! branches on the inclusion-minimal ways of covering its smallest uncovered
//! location. Any placement covering `[0, m-1]` contains a chain of such
//! steps, so exhaustive branching over them is complete.
//!
//! Symmetry: square 0 can only be covered through `0 ∈ I` together with
//! `0 ∈ J` or `0 ∈ K`, and the model is symmetric in `J` and `K`, so every
//! search starts from `I = {0}, J = {0}`. Witnesses are reported after
//! [`normalize`].
//!
//! A node's own prefix length is a valid score: padding it with unused slots
//! up to exactly `ℓ` segments never lowers `m`.

mod exhaustive;
mod heuristic;
pub(crate) mod state;

use std::fmt;

use crate::coverage::{covered_set, Placement};
use crate::error::{Error, Result};
use crate::intset::Rational;
use state::{State, MAX_LOC_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Beam { width: usize },
    RandomRestart { count: u64, seed: u64 },
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchMode::Exhaustive => write!(f, "exhaustive"),
            SearchMode::Beam { width } => write!(f, "beam({width})"),
            SearchMode::RandomRestart { count, seed } => {
                write!(f, "random-restart({count},seed={seed})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Segment budget `ℓ`.
    pub l: u32,
    /// Largest admissible location, inclusive.
    pub max_loc: u32,
    pub mode: SearchMode,
    pub target_ratio: Option<Rational>,
    /// Node budget; exhaustive splits it evenly across top-level branches.
    pub budget_nodes: Option<u64>,
    pub threads: usize,
    /// Exhaustive only: disables the counting-bound prune.
    pub prune: bool,
}

impl SearchConfig {
    pub fn exhaustive(l: u32, max_loc: u32) -> Self {
        Self {
            l,
            max_loc,
            mode: SearchMode::Exhaustive,
            target_ratio: None,
            budget_nodes: None,
            threads: 1,
            prune: true,
        }
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.l < 1 {
            return Err(Error::Config("segment budget l must be at least 1".into()));
        }
        if self.max_loc as u64 > MAX_LOC_LIMIT {
            return Err(Error::Config(format!(
                "max-loc {} exceeds the supported limit {MAX_LOC_LIMIT}",
                self.max_loc
            )));
        }
        if 3 * (self.max_loc as u64 + 1) < self.l as u64 {
            return Err(Error::Config(format!(
                "only {} slots in [0, {}] for {} segments",
                3 * (self.max_loc + 1),
                self.max_loc,
                self.l
            )));
        }
        match self.mode {
            SearchMode::Beam { width: 0 } => Err(Error::Config("beam width must be at least 1".into())),
            SearchMode::RandomRestart { count: 0, .. } => {
                Err(Error::Config("restart count must be at least 1".into()))
            }
            _ if self.threads == 0 => Err(Error::Config("threads must be at least 1".into())),
            _ => Ok(()),
        }
    }
}

/// Location cap `⌈ℓ²/3⌉`: no prefix can be longer than the counting bound,
/// and a location at or past the prefix end takes part in no covering sum.
pub fn sufficient_max_loc(l: u32) -> u32 {
    (l * l).div_ceil(3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best_m: u64,
    pub witness: Placement,
    /// `best_m / ℓ²`.
    pub ratio: Rational,
    /// True only for an exhaustive run that finished within budget.
    pub complete: bool,
    pub nodes_expanded: u64,
    pub nodes_pruned: u64,
    /// Score the exhaustive prune was seeded with.
    pub seed_lower_bound: Option<u64>,
    /// Random-restart: index and seed of the restart that produced the witness.
    pub best_restart: Option<(u64, u64)>,
    pub target_reached: Option<bool>,
}

/// Canonical representative under `J ↔ K`: `J` is the lexicographically
/// smaller of the two sorted lists.
pub fn normalize(p: &Placement) -> Placement {
    if p.j() > p.k() {
        p.swap_jk()
    } else {
        p.clone()
    }
}

pub(crate) fn root_state() -> State {
    let mut s = State::empty();
    s.add_location(0, 0);
    s.add_location(1, 0);
    s
}

/// Adds unused slots (highest locations first, `I` before `J` before `K`)
/// until the placement has exactly `l` segments.
pub(crate) fn pad(state: &State, l: u32, max_loc: u32) -> State {
    let mut s = *state;
    'fill: for loc in (0..=max_loc).rev() {
        for part in 0..3 {
            if s.used() >= l {
                break 'fill;
            }
            s.add_location(part, loc);
        }
    }
    s
}

/// Pads, normalizes and rescores a partial result.
pub(crate) fn finish(
    cfg: &SearchConfig,
    best: &State,
    complete: bool,
    nodes_expanded: u64,
    nodes_pruned: u64,
) -> SearchOutcome {
    let witness = normalize(
        &pad(best, cfg.l, cfg.max_loc)
            .to_placement()
            .expect("l >= 1 segments"),
    );
    let best_m = covered_set(&witness).m;
    let ell = cfg.l as u64;
    let ratio = Rational::new(best_m, ell * ell);
    SearchOutcome {
        best_m,
        witness,
        ratio,
        complete,
        nodes_expanded,
        nodes_pruned,
        seed_lower_bound: None,
        best_restart: None,
        target_reached: cfg.target_ratio.map(|t| ratio >= t),
    }
}

pub fn search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    Ok(crate::in_pool(cfg.threads, || match cfg.mode {
        SearchMode::Exhaustive => exhaustive::run(cfg),
        SearchMode::Beam { width } => heuristic::beam(cfg, width),
        SearchMode::RandomRestart { count, seed } => heuristic::restarts(cfg, count, seed),
    }))
}
