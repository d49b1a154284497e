//! The abstract square/parallelogram coverage model.
//!
//! A unit square is an interval of `t²` consecutive integers; square `x`
//! stands for `Q + t²·x`. A placement `(I, J, K)` covers square `x` when
//!
//! * `x ∈ I + J` (a copy of `V + H`), or
//! * `x ∈ I + K` (a copy of `V + S`), or
//! * `x - 1 ∈ J + K` and `x ∈ J + K` (two consecutive parallelograms
//!   `H + S` contain the square between them).
//!
//! Nothing else is credited, so the model does not depend on `t`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::intset::{make_ap, prefix_len, IntSet, Rational};
use crate::segments::SegmentKind;

/// Square locations of the three segment kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    i: IntSet,
    j: IntSet,
    k: IntSet,
}

impl Placement {
    pub fn new(i: IntSet, j: IntSet, k: IntSet) -> Result<Self> {
        if i.len() + j.len() + k.len() == 0 {
            return Err(Error::EmptyPlacement);
        }
        Ok(Self { i, j, k })
    }

    /// Locations of `V` copies.
    pub fn i(&self) -> &IntSet {
        &self.i
    }

    /// Locations of `H` copies.
    pub fn j(&self) -> &IntSet {
        &self.j
    }

    /// Locations of `S` copies.
    pub fn k(&self) -> &IntSet {
        &self.k
    }

    pub fn locations(&self, kind: SegmentKind) -> &IntSet {
        match kind {
            SegmentKind::V => &self.i,
            SegmentKind::H => &self.j,
            SegmentKind::S => &self.k,
        }
    }

    /// Number of segments, `ℓ = |I| + |J| + |K|`.
    pub fn len(&self) -> usize {
        self.i.len() + self.j.len() + self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn part_sizes(&self) -> (u64, u64, u64) {
        (self.i.len() as u64, self.j.len() as u64, self.k.len() as u64)
    }

    /// The same placement with `J` and `K` exchanged.
    pub fn swap_jk(&self) -> Placement {
        Placement {
            i: self.i.clone(),
            j: self.k.clone(),
            k: self.j.clone(),
        }
    }

    pub fn into_parts(self) -> (IntSet, IntSet, IntSet) {
        (self.i, self.j, self.k)
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={} J={} K={}", self.i, self.j, self.k)
    }
}

/// The coverage rules that credit a square.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rules {
    pub square_ij: bool,
    pub square_ik: bool,
    pub parallelogram_pair: bool,
}

impl Rules {
    pub fn any(self) -> bool {
        self.square_ij || self.square_ik || self.parallelogram_pair
    }
}

impl fmt::Display for Rules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.square_ij, "square-IJ"),
            (self.square_ik, "square-IK"),
            (self.parallelogram_pair, "parallelogram-pair"),
        ];
        let mut first = true;
        for (on, name) in names {
            if on {
                if !first {
                    f.write_str(",")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageResult {
    pub covered: IntSet,
    /// Length of the covered prefix `[0, m-1]`.
    pub m: u64,
    /// `m / ℓ²`.
    pub c: Rational,
    pub by_rule: BTreeMap<u64, Rules>,
}

/// The three location sumsets `I+J`, `I+K`, `J+K` (empty if a part is).
pub fn location_sumsets(p: &Placement) -> Result<(IntSet, IntSet, IntSet)> {
    Ok((
        p.i.sumset_or_empty(&p.j)?,
        p.i.sumset_or_empty(&p.k)?,
        p.j.sumset_or_empty(&p.k)?,
    ))
}

pub fn covered_set(p: &Placement) -> CoverageResult {
    let (ij, ik, jk) = location_sumsets(p).expect("location sums stay below capacity");
    coverage_from_sumsets(&ij, &ik, &jk, p.len() as u64)
}

/// Coverage computed from precomputed `I+J`, `I+K`, `J+K`.
pub fn coverage_from_sumsets(ij: &IntSet, ik: &IntSet, jk: &IntSet, ell: u64) -> CoverageResult {
    let mut by_rule: BTreeMap<u64, Rules> = BTreeMap::new();
    for x in ij.iter() {
        by_rule.entry(x).or_default().square_ij = true;
    }
    for x in ik.iter() {
        by_rule.entry(x).or_default().square_ik = true;
    }
    for pair in jk.as_slice().windows(2) {
        if pair[1] == pair[0] + 1 {
            by_rule.entry(pair[1]).or_default().parallelogram_pair = true;
        }
    }
    let covered = IntSet::new(by_rule.keys().copied()).expect("keys come from valid sets");
    let m = prefix_len(covered.as_slice());
    CoverageResult {
        covered,
        m,
        c: Rational::new(m, ell.max(1) * ell.max(1)),
        by_rule,
    }
}

/// `ℓ_I ℓ_J + ℓ_I ℓ_K + ℓ_J ℓ_K`: an upper bound on the number of covered
/// squares, hence on `m`.
pub fn counting_bound(li: u64, lj: u64, lk: u64) -> u64 {
    li * lj + li * lk + lj * lk
}

/// Largest counting bound over all ways to hand out `extra` more segments to
/// parts currently of sizes `(a, b, c)`.
pub fn counting_bound_with_extra(a: u64, b: u64, c: u64, extra: u64) -> u64 {
    let mut best = 0;
    for da in 0..=extra {
        for db in 0..=extra - da {
            let dc = extra - da - db;
            best = best.max(counting_bound(a + da, b + db, c + dc));
        }
    }
    best
}

/// How a subinterval claim of the ℓ = 42 certificate is justified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseRule {
    /// Squares at `I + J`.
    SquareIJ,
    /// Squares at `I + K`.
    SquareIK,
    /// Consecutive parallelograms at `J + K`; the parallelogram run starts
    /// one location before the claimed squares.
    ParallelogramRun,
    /// For each `j ∈ J`: parallelograms at `j + [0,4] ⊆ J + K` and squares
    /// at `j + {0,5} ⊆ I + J`, together covering `j + [0,5]`.
    PerHorizontalCopy,
}

impl fmt::Display for CaseRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseRule::SquareIJ => "square-IJ",
            CaseRule::SquareIK => "square-IK",
            CaseRule::ParallelogramRun => "parallelogram-pair",
            CaseRule::PerHorizontalCopy => "parallelogram-pair+square-IJ",
        })
    }
}

/// One row of the certificate table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub label: &'static str,
    /// Claimed covered squares, inclusive.
    pub interval: (u64, u64),
    pub rule: CaseRule,
    pub claim: String,
    pub holds: bool,
}

struct CaseSpec {
    label: &'static str,
    interval: (u64, u64),
    rule: CaseRule,
    // Part of the first set and part of the second set whose sumset
    // justifies the claim, as (a, step, b) progressions.
    left: &'static [(i64, i64, i64)],
    right: &'static [(i64, i64, i64)],
}

const I_HEAD: &[(i64, i64, i64)] = &[(0, 5, 5)];
const I_TAIL: &[(i64, i64, i64)] = &[(112, 5, 137)];
const J_ALL: &[(i64, i64, i64)] = &[(10, 6, 106)];
const K_LOW: &[(i64, i64, i64)] = &[(0, 1, 4)];
const K_MID: &[(i64, i64, i64)] = &[(224, 1, 229)];
const K_HIGH: &[(i64, i64, i64)] = &[(367, 1, 372)];

const THEOREM_CASES: [CaseSpec; 10] = [
    CaseSpec { label: "i", interval: (0, 9), rule: CaseRule::SquareIK, left: I_HEAD, right: K_LOW },
    CaseSpec { label: "ii", interval: (10, 111), rule: CaseRule::PerHorizontalCopy, left: J_ALL, right: K_LOW },
    CaseSpec { label: "iii", interval: (112, 141), rule: CaseRule::SquareIK, left: I_TAIL, right: K_LOW },
    CaseSpec { label: "iv", interval: (142, 223), rule: CaseRule::SquareIJ, left: I_TAIL, right: J_ALL },
    CaseSpec { label: "v", interval: (224, 234), rule: CaseRule::SquareIK, left: I_HEAD, right: K_MID },
    CaseSpec { label: "vi", interval: (235, 335), rule: CaseRule::ParallelogramRun, left: J_ALL, right: K_MID },
    CaseSpec { label: "vii", interval: (336, 366), rule: CaseRule::SquareIK, left: I_TAIL, right: K_MID },
    CaseSpec { label: "viii", interval: (367, 377), rule: CaseRule::SquareIK, left: I_HEAD, right: K_HIGH },
    CaseSpec { label: "ix", interval: (378, 478), rule: CaseRule::ParallelogramRun, left: J_ALL, right: K_HIGH },
    CaseSpec { label: "x", interval: (479, 509), rule: CaseRule::SquareIK, left: I_TAIL, right: K_HIGH },
];

fn ap_union(parts: &[(i64, i64, i64)]) -> IntSet {
    parts.iter().fold(IntSet::empty(), |acc, &(a, s, b)| {
        acc.union(&make_ap(a, s, b).expect("constant progression"))
    })
}

fn describe(parts: &[(i64, i64, i64)]) -> String {
    parts
        .iter()
        .map(|&(a, s, b)| match s {
            1 => format!("[{a},{b}]"),
            _ if a + s == b => format!("{{{a},{b}}}"),
            _ => format!("[{a},({s}),{b}]"),
        })
        .collect::<Vec<_>>()
        .join("∪")
}

/// Re-derives each subinterval claim of the ℓ = 42 certificate from the
/// placement's own sets. Rows are returned whether or not they hold.
pub fn theorem_cases(p: &Placement) -> Vec<CaseReport> {
    THEOREM_CASES.iter().map(|spec| check_case(spec, p)).collect()
}

fn check_case(spec: &CaseSpec, p: &Placement) -> CaseReport {
    let left = ap_union(spec.left);
    let right = ap_union(spec.right);
    let (lo, hi) = spec.interval;
    let (first, second, names) = match spec.rule {
        CaseRule::SquareIJ => (&p.i, &p.j, ("I", "J")),
        CaseRule::SquareIK => (&p.i, &p.k, ("I", "K")),
        CaseRule::ParallelogramRun | CaseRule::PerHorizontalCopy => (&p.j, &p.k, ("J", "K")),
    };
    let parts_present = left.is_subset(first) && right.is_subset(second);
    let sums = left.sumset(&right).expect("nonempty constant parts");
    let holds = parts_present
        && match spec.rule {
            CaseRule::SquareIJ | CaseRule::SquareIK => {
                IntSet::interval(lo, hi).unwrap().is_subset(&sums)
            }
            CaseRule::ParallelogramRun => IntSet::interval(lo - 1, hi).unwrap().is_subset(&sums),
            CaseRule::PerHorizontalCopy => {
                // Squares j and j+5 come from {0,5} ⊆ I paired with j ∈ J.
                let i_head = ap_union(I_HEAD);
                let head_ok = i_head.is_subset(&p.i);
                let per_copy = left.iter().all(|j| {
                    IntSet::interval(j, j + 4)
                        .unwrap()
                        .is_subset(&IntSet::new(right.iter().map(|k| j + k)).unwrap())
                });
                let union = left.iter().fold(IntSet::empty(), |acc, j| {
                    acc.union(&IntSet::interval(j, j + 5).unwrap())
                });
                head_ok && per_copy && IntSet::interval(lo, hi).unwrap().is_subset(&union)
            }
        };
    let claim = match spec.rule {
        CaseRule::ParallelogramRun => format!(
            "[{},{}] ⊆ {}+{} ⊆ {}+{}",
            lo - 1,
            hi,
            describe(spec.left),
            describe(spec.right),
            names.0,
            names.1
        ),
        CaseRule::PerHorizontalCopy => format!(
            "j+[0,4] ⊆ j+{} ⊆ J+K and j+{{0,5}} ⊆ I+J for j ∈ {}",
            describe(spec.right),
            describe(spec.left)
        ),
        _ => format!(
            "[{lo},{hi}] ⊆ {}+{} ⊆ {}+{}",
            describe(spec.left),
            describe(spec.right),
            names.0,
            names.1
        ),
    };
    CaseReport {
        label: spec.label,
        interval: spec.interval,
        rule: spec.rule,
        claim,
        holds,
    }
}

/// Like [`theorem_cases`] but fails on the first case that does not hold,
/// and checks that the cases together cover `[0, 509]`.
pub fn verify_theorem_cases(p: &Placement) -> Result<Vec<CaseReport>> {
    let cases = theorem_cases(p);
    if let Some(bad) = cases.iter().find(|c| !c.holds) {
        return Err(Error::Verification(format!(
            "case ({}) {} does not hold",
            bad.label, bad.claim
        )));
    }
    let mut next = 0;
    for c in &cases {
        if c.interval.0 != next {
            return Err(Error::Verification(format!(
                "case ({}) leaves a gap before {}",
                c.label, c.interval.0
            )));
        }
        next = c.interval.1 + 1;
    }
    debug_assert_eq!(next, 510);
    Ok(cases)
}
