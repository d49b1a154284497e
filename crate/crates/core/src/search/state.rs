//! Bitmask search state: locations below 128, location sums below 256.

use crate::coverage::{counting_bound, counting_bound_with_extra, Placement};
use crate::intset::IntSet;

pub(crate) const MAX_LOC_LIMIT: u64 = 127;

/// 256-bit set of location sums.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Sums {
    lo: u128,
    hi: u128,
}

impl Sums {
    #[inline]
    fn or_shifted(&mut self, src: u128, by: u32) {
        self.lo |= src << by;
        if by > 0 {
            self.hi |= src >> (128 - by);
        }
    }

    #[inline]
    fn contains(&self, x: u32) -> bool {
        if x < 128 {
            self.lo >> x & 1 == 1
        } else if x < 256 {
            self.hi >> (x - 128) & 1 == 1
        } else {
            false
        }
    }

    #[inline]
    fn or(self, o: Sums) -> Sums {
        Sums {
            lo: self.lo | o.lo,
            hi: self.hi | o.hi,
        }
    }

    #[inline]
    fn and(self, o: Sums) -> Sums {
        Sums {
            lo: self.lo & o.lo,
            hi: self.hi & o.hi,
        }
    }

    #[inline]
    fn shl1(self) -> Sums {
        Sums {
            lo: self.lo << 1,
            hi: (self.hi << 1) | (self.lo >> 127),
        }
    }

    #[inline]
    fn count(self) -> u32 {
        self.lo.count_ones() + self.hi.count_ones()
    }

    #[inline]
    fn count_below(self, n: u32) -> u32 {
        let mask = |w: u128, bits: u32| {
            if bits >= 128 {
                w
            } else {
                w & ((1u128 << bits) - 1)
            }
        };
        mask(self.lo, n).count_ones() + mask(self.hi, n.saturating_sub(128)).count_ones()
    }

    #[inline]
    fn trailing_ones(self) -> u32 {
        let t = self.lo.trailing_ones();
        if t < 128 {
            t
        } else {
            128 + self.hi.trailing_ones()
        }
    }
}

/// Locations added in one branching step, one mask per part.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Addition {
    pub parts: [u128; 3],
}

impl Addition {
    #[inline]
    pub(crate) fn cost(&self) -> u32 {
        self.parts.iter().map(|p| p.count_ones()).sum()
    }

    #[inline]
    fn union(self, o: Addition) -> Addition {
        Addition {
            parts: [
                self.parts[0] | o.parts[0],
                self.parts[1] | o.parts[1],
                self.parts[2] | o.parts[2],
            ],
        }
    }

    #[inline]
    fn is_subset_of(&self, o: &Addition) -> bool {
        (0..3).all(|p| self.parts[p] & !o.parts[p] == 0)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct State {
    /// Location masks of I, J, K.
    pub parts: [u128; 3],
    ij: Sums,
    ik: Sums,
    jk: Sums,
}

impl State {
    pub(crate) fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn add_location(&mut self, part: usize, loc: u32) {
        let bit = 1u128 << loc;
        if self.parts[part] & bit != 0 {
            return;
        }
        let [i, j, k] = self.parts;
        match part {
            0 => {
                self.ij.or_shifted(j, loc);
                self.ik.or_shifted(k, loc);
            }
            1 => {
                self.ij.or_shifted(i, loc);
                self.jk.or_shifted(k, loc);
            }
            _ => {
                self.ik.or_shifted(i, loc);
                self.jk.or_shifted(j, loc);
            }
        }
        self.parts[part] |= bit;
    }

    pub(crate) fn apply(&self, add: &Addition) -> State {
        let mut s = *self;
        for part in 0..3 {
            let mut bits = add.parts[part];
            while bits != 0 {
                let loc = bits.trailing_zeros();
                s.add_location(part, loc);
                bits &= bits - 1;
            }
        }
        s
    }

    pub(crate) fn used(&self) -> u32 {
        self.parts.iter().map(|p| p.count_ones()).sum()
    }

    fn covered(&self) -> Sums {
        self.ij.or(self.ik).or(self.jk.and(self.jk.shl1()))
    }

    /// `m` of the current partial placement.
    pub(crate) fn first_uncovered(&self) -> u32 {
        self.covered().trailing_ones()
    }

    pub(crate) fn covered_count(&self) -> u32 {
        self.covered().count()
    }

    #[inline]
    fn has(&self, part: usize, loc: u32) -> bool {
        self.parts[part] >> loc & 1 == 1
    }

    /// Upper bound on the prefix length of any extension by at most
    /// `extra` segments with locations up to `max_loc`.
    ///
    /// Each added segment creates at most one new sum per pairing with the
    /// other two parts, so the number of covered locations grows by at most
    /// the growth of the counting bound.
    pub(crate) fn upper_bound(&self, extra: u32, max_loc: u32) -> u32 {
        let [a, b, c] = self.parts.map(|p| p.count_ones() as u64);
        let growth = (counting_bound_with_extra(a, b, c, extra as u64) - counting_bound(a, b, c)) as u32;
        let sums = self.ij.or(self.ik).or(self.jk);
        let coarse = sums.count() + growth;
        // Sums at or above the coarse bound cannot lie inside the prefix.
        let fine = sums.count_below(coarse) + growth;
        fine.min(coarse).min(2 * max_loc + 1)
    }

    /// Inclusion-minimal additions of at most `budget` new locations that
    /// cover square `x`, in a fixed generation order.
    pub(crate) fn covering_options(&self, x: u32, budget: u32, max_loc: u32) -> Vec<Addition> {
        let mut raw: Vec<Addition> = Vec::new();
        let pairs = |sum: u32| {
            let lo = sum.saturating_sub(max_loc);
            let hi = sum.min(max_loc);
            (lo..=hi).map(move |a| (a, sum - a))
        };
        let pair_add = |s: &State, p: usize, q: usize, a: u32, b: u32| {
            let mut add = Addition::default();
            if !s.has(p, a) {
                add.parts[p] |= 1 << a;
            }
            if !s.has(q, b) {
                add.parts[q] |= 1 << b;
            }
            add
        };
        if x <= 2 * max_loc {
            for (p, q) in [(0, 1), (0, 2)] {
                for (a, b) in pairs(x) {
                    let add = pair_add(self, p, q, a, b);
                    if add.cost() <= budget {
                        raw.push(add);
                    }
                }
            }
        }
        if x >= 1 && x <= 2 * max_loc {
            let firsts: Vec<Addition> = if self.jk.contains(x - 1) {
                vec![Addition::default()]
            } else {
                pairs(x - 1)
                    .map(|(a, b)| pair_add(self, 1, 2, a, b))
                    .filter(|add| add.cost() <= budget)
                    .collect()
            };
            for first in firsts {
                let s1 = self.apply(&first);
                if s1.jk.contains(x) {
                    raw.push(first);
                    continue;
                }
                for (a, b) in pairs(x) {
                    let add = first.union(pair_add(&s1, 1, 2, a, b));
                    if add.cost() <= budget {
                        raw.push(add);
                    }
                }
            }
        }
        minimal_options(raw)
    }

    pub(crate) fn to_placement(self) -> Option<Placement> {
        let set = |mask: u128| IntSet::new((0..128u64).filter(|&l| mask >> l & 1 == 1)).unwrap();
        Placement::new(set(self.parts[0]), set(self.parts[1]), set(self.parts[2])).ok()
    }
}

/// Drops duplicates and strict supersets, keeping first-occurrence order.
fn minimal_options(raw: Vec<Addition>) -> Vec<Addition> {
    let mut by_cost: Vec<(u32, usize, Addition)> = raw
        .into_iter()
        .enumerate()
        .map(|(idx, a)| (a.cost(), idx, a))
        .collect();
    by_cost.sort_unstable();
    let mut kept: Vec<(usize, Addition)> = Vec::new();
    for (_, idx, add) in by_cost {
        if add.cost() == 0 {
            continue;
        }
        if kept.iter().any(|(_, k)| k.is_subset_of(&add)) {
            continue;
        }
        kept.push((idx, add));
    }
    kept.sort_unstable_by_key(|&(idx, _)| idx);
    kept.into_iter().map(|(_, a)| a).collect()
}
