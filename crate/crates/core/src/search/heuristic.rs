//! Beam search and seeded random restarts. Both are deterministic for a
//! given configuration, whatever the thread count.

use std::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::state::State;
use super::{finish, root_state, SearchConfig, SearchOutcome};

/// Width used to seed the exhaustive prune.
const SEED_BEAM_WIDTH: usize = 16;

fn children(s: &State, cfg: &SearchConfig) -> Vec<State> {
    let left = cfg.l - s.used();
    if left == 0 {
        return Vec::new();
    }
    let x = s.first_uncovered();
    s.covering_options(x, left, cfg.max_loc)
        .iter()
        .map(|a| s.apply(a))
        .collect()
}

fn beam_key(s: &State) -> (Reverse<u32>, Reverse<u32>, [u128; 3]) {
    (Reverse(s.first_uncovered()), Reverse(s.covered_count()), s.parts)
}

/// Beam over layers of equal segment count: layer `u` keeps the `width`
/// best states using exactly `u` segments, so states are only ranked against
/// others that spent the same budget. Returns (best state, expanded, budget hit).
fn run_beam(cfg: &SearchConfig, width: usize) -> (State, u64, bool) {
    let root = root_state();
    let mut best = root;
    let mut layers: Vec<Vec<State>> = vec![Vec::new(); cfg.l as usize + 1];
    layers[root.used() as usize].push(root);
    let mut expanded = 0u64;
    let mut hit_budget = false;
    for used in 0..=cfg.l as usize {
        let mut layer = std::mem::take(&mut layers[used]);
        layer.sort_unstable_by_key(beam_key);
        layer.dedup_by_key(|s| s.parts);
        layer.truncate(width);
        if let Some(top) = layer.first() {
            if top.first_uncovered() > best.first_uncovered() {
                best = *top;
            }
        }
        if let Some(b) = cfg.budget_nodes {
            if expanded + layer.len() as u64 > b {
                hit_budget = true;
                break;
            }
        }
        expanded += layer.len() as u64;
        let next: Vec<State> = layer
            .par_iter()
            .flat_map_iter(|s| children(s, cfg))
            .collect();
        for child in next {
            layers[child.used() as usize].push(child);
        }
    }
    (best, expanded, hit_budget)
}

pub(super) fn beam_lower_bound(cfg: &SearchConfig) -> u32 {
    let cfg = SearchConfig {
        budget_nodes: None,
        ..cfg.clone()
    };
    run_beam(&cfg, SEED_BEAM_WIDTH).0.first_uncovered()
}

pub(super) fn beam(cfg: &SearchConfig, width: usize) -> SearchOutcome {
    if cfg.l < 2 {
        return finish(cfg, &State::empty(), false, 1, 0);
    }
    let (best, expanded, _) = run_beam(cfg, width);
    finish(cfg, &best, false, expanded, 0)
}

/// Seed of restart `index`.
pub fn restart_seed(seed: u64, index: u64) -> u64 {
    seed.wrapping_add(index)
}

fn one_restart(cfg: &SearchConfig, seed: u64) -> (State, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = root_state();
    let mut best = s;
    let mut steps = 0;
    loop {
        let next = children(&s, cfg);
        steps += 1;
        if next.is_empty() {
            break;
        }
        // Half the time stick to the cheapest options.
        let pool: Vec<State> = if rng.gen_bool(0.5) {
            let least = next.iter().map(State::used).min().unwrap();
            next.into_iter().filter(|c| c.used() == least).collect()
        } else {
            next
        };
        s = *pool.choose(&mut rng).unwrap();
        if s.first_uncovered() > best.first_uncovered() {
            best = s;
        }
    }
    (best, steps)
}

pub(super) fn restarts(cfg: &SearchConfig, count: u64, seed: u64) -> SearchOutcome {
    if cfg.l < 2 {
        let mut out = finish(cfg, &State::empty(), false, 1, 0);
        out.best_restart = Some((0, restart_seed(seed, 0)));
        return out;
    }
    let runs: Vec<(State, u64)> = (0..count)
        .into_par_iter()
        .map(|r| one_restart(cfg, restart_seed(seed, r)))
        .collect();
    let mut best_idx = 0;
    for (r, (s, _)) in runs.iter().enumerate() {
        if s.first_uncovered() > runs[best_idx].0.first_uncovered() {
            best_idx = r;
        }
    }
    let expanded = runs.iter().map(|(_, n)| n).sum();
    let mut out = finish(cfg, &runs[best_idx].0, false, expanded, 0);
    out.best_restart = Some((best_idx as u64, restart_seed(seed, best_idx as u64)));
    out
}
