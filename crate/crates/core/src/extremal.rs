//! Exhaustive computation of the extremal range `n(k) = max_{|A|=k} n(A)`.
//!
//! Bases are enumerated as sorted prefixes `0 = a_0 < a_1 < ...` where each
//! new element is at most one past the prefix's range. A basis violating
//! that has a gap its later (larger) elements cannot fill, so its range is
//! already achieved by a prefix and the restriction keeps the maximum.
//!
//! Prune: the `j`-th element creates at most `j` new sums, so a completion
//! of a prefix with sumset `S` has range below `|S| + Σ j` over the elements
//! still to come.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intset::IntSet;

/// Largest `k` the fixed-width sum masks support.
pub const MAX_K: u64 = 30;

/// `k` up to which exhaustive runs are considered desk scale.
pub const DESK_SCALE_K: u64 = 10;

/// Literature value `n(25) = 212` (zero counted). Not recomputed here.
pub const REFERENCE_N25: (u64, u64) = (25, 212);

/// Prefix length at which enumeration splits into independent tasks.
const SPLIT_DEPTH: usize = 4;

const WORDS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Bits([u64; WORDS]);

impl Bits {
    const ZERO: Bits = Bits([0; WORDS]);

    fn set(&mut self, x: usize) {
        self.0[x / 64] |= 1 << (x % 64);
    }

    fn or_shifted(&mut self, src: &Bits, by: usize) {
        let (ws, bs) = (by / 64, by % 64);
        for w in (0..WORDS).rev() {
            if w < ws {
                break;
            }
            let from = w - ws;
            let mut v = src.0[from] << bs;
            if bs > 0 && from > 0 {
                v |= src.0[from - 1] >> (64 - bs);
            }
            self.0[w] |= v;
        }
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn count_below(&self, n: usize) -> u32 {
        let mut c = 0;
        for (w, &word) in self.0.iter().enumerate() {
            let start = w * 64;
            if start >= n {
                break;
            }
            let take = (n - start).min(64);
            let mask = if take == 64 { u64::MAX } else { (1 << take) - 1 };
            c += (word & mask).count_ones();
        }
        c
    }

    fn trailing_ones(&self) -> u32 {
        let mut t = 0;
        for w in &self.0 {
            let o = w.trailing_ones();
            t += o;
            if o < 64 {
                break;
            }
        }
        t
    }
}

#[derive(Clone, Copy)]
struct Prefix {
    elems: Bits,
    sums: Bits,
    last: usize,
    len: usize,
}

impl Prefix {
    fn zero() -> Self {
        let mut p = Prefix {
            elems: Bits::ZERO,
            sums: Bits::ZERO,
            last: 0,
            len: 1,
        };
        p.elems.set(0);
        p.sums.set(0);
        p
    }

    fn push(&self, a: usize) -> Prefix {
        let mut p = *self;
        p.sums.or_shifted(&self.elems, a);
        p.sums.set(2 * a);
        p.elems.set(a);
        p.last = a;
        p.len += 1;
        p
    }

    fn range(&self) -> usize {
        self.sums.trailing_ones() as usize - 1
    }

    fn bound(&self, k: usize) -> usize {
        let growth: usize = (self.len + 1..=k).sum();
        let coarse = self.sums.count() as usize + growth;
        let fine = self.sums.count_below(coarse) as usize + growth;
        fine.min(coarse) - 1
    }

    fn to_intset(self) -> IntSet {
        IntSet::new((0..WORDS * 64).filter(|&i| self.elems.0[i / 64] >> (i % 64) & 1 == 1).map(|i| i as u64))
            .unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    /// Basis size, counting the zero.
    pub k: u64,
    pub n: u64,
    /// Lexicographically smallest optimal basis first.
    pub witnesses: Vec<IntSet>,
    pub exhaustive: bool,
    pub nodes: u64,
}

struct Task {
    k: usize,
    lower_bound: usize,
    best: Option<(usize, Prefix)>,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
    prune: bool,
}

impl Task {
    fn visit(&mut self, p: Prefix) {
        if self.budget.is_some_and(|b| self.nodes >= b) {
            self.exhausted = true;
        }
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        let best_n = self.best.map(|(n, _)| n);
        if p.len == self.k {
            let r = p.range();
            if best_n.is_none_or(|b| r > b) {
                self.best = Some((r, p));
            }
            return;
        }
        if self.prune {
            let bound = p.bound(self.k);
            if best_n.is_some_and(|b| bound <= b) || bound < self.lower_bound {
                return;
            }
        }
        for a in p.last + 1..=p.range() + 1 {
            self.visit(p.push(a));
        }
    }
}

fn prefixes_of_len(depth: usize) -> Vec<Prefix> {
    let mut level = vec![Prefix::zero()];
    for _ in 1..depth {
        level = level
            .iter()
            .flat_map(|p| (p.last + 1..=p.range() + 1).map(move |a| p.push(a)))
            .collect();
    }
    level
}

fn solve(k: usize, lower_bound: usize, budget: Option<u64>, prune: bool) -> ExtremalRecord {
    let roots = prefixes_of_len(SPLIT_DEPTH.min(k));
    let share = budget.map(|b| b.div_ceil(roots.len() as u64));
    let tasks: Vec<Task> = roots
        .into_par_iter()
        .map(|root| {
            let mut t = Task {
                k,
                lower_bound,
                best: None,
                nodes: 0,
                budget: share,
                exhausted: false,
                prune,
            };
            t.visit(root);
            t
        })
        .collect();
    let mut best: Option<(usize, Prefix)> = None;
    let (mut nodes, mut exhaustive) = (0, true);
    for t in &tasks {
        if let Some((n, p)) = t.best {
            if best.is_none_or(|(b, _)| n > b) {
                best = Some((n, p));
            }
        }
        nodes += t.nodes;
        exhaustive &= !t.exhausted;
    }
    // Only a budget cut can leave no leaf; fall back to [0, k-1].
    let (n, p) = best.unwrap_or_else(|| {
        let p = (1..k).fold(Prefix::zero(), |p, a| p.push(a));
        (p.range(), p)
    });
    ExtremalRecord {
        k: k as u64,
        n: n as u64,
        witnesses: vec![p.to_intset()],
        exhaustive,
        nodes,
    }
}

fn check_k(k: u64) -> Result<usize> {
    if k < 2 {
        return Err(Error::Config(format!("k = {k}: need k >= 2")));
    }
    if k > MAX_K {
        return Err(Error::Config(format!("k = {k} exceeds the supported maximum {MAX_K}")));
    }
    Ok(k as usize)
}

/// Records for every size `2..=k_max`. Each solve is seeded with
/// `n(k-1) + 1`, valid because adjoining `n(k-1) + 1` to an optimal
/// `(k-1)`-basis extends its range.
pub fn n_of_k_table(k_max: u64, budget_nodes: Option<u64>, threads: usize) -> Result<Vec<ExtremalRecord>> {
    let k_max = check_k(k_max)?;
    crate::in_pool(threads, || {
        let mut out: Vec<ExtremalRecord> = Vec::new();
        let mut spent = 0u64;
        for k in 2..=k_max {
            let lower_bound = match out.last() {
                Some(prev) if prev.exhaustive => prev.n as usize + 1,
                _ => 0,
            };
            let left = budget_nodes.map(|b| b.saturating_sub(spent));
            let rec = solve(k, lower_bound, left, true);
            spent += rec.nodes;
            out.push(rec);
        }
        Ok(out)
    })
}

pub fn n_of_k(k: u64, budget_nodes: Option<u64>, threads: usize) -> Result<ExtremalRecord> {
    Ok(n_of_k_table(k, budget_nodes, threads)?.pop().unwrap())
}

/// The same enumeration with all pruning disabled.
pub fn n_of_k_unpruned(k: u64) -> Result<ExtremalRecord> {
    Ok(solve(check_k(k)?, 0, None, false))
}
