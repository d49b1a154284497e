//! Elementary segments and the bases built from translated copies of them.
//!
//! With segment length `t`:
//!
//! * `V = [0, t]`
//! * `H = [0, (t), t² - t]`
//! * `S = [0, (t+1), t² - 1]`
//!
//! A placement `(I, J, K)` puts a copy of `V` at `t²·i` for every `i ∈ I`,
//! of `H` at `t²·j` for `j ∈ J` and of `S` at `t²·k` for `k ∈ K`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coverage::Placement;
use crate::error::{Error, Result};
use crate::intset::{make_ap, IntSet, CAPACITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SegmentKind {
    /// `[0, t]`, vertical in the planar picture.
    V,
    /// `[0, (t), t² - t]`, horizontal.
    H,
    /// `[0, (t+1), t² - 1]`, slanted.
    S,
}

impl SegmentKind {
    pub const ALL: [SegmentKind; 3] = [SegmentKind::V, SegmentKind::H, SegmentKind::S];

    pub fn as_str(self) -> &'static str {
        match self {
            SegmentKind::V => "V",
            SegmentKind::H => "H",
            SegmentKind::S => "S",
        }
    }
}

impl fmt::Display for SegmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Validated segment length `t >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SegmentParams {
    t: u64,
}

impl SegmentParams {
    pub fn new(t: u64) -> Result<Self> {
        // t^2 must leave room for at least one square below the capacity.
        if t < 2 {
            return Err(Error::InvalidSegmentLength(t));
        }
        if t.checked_mul(t).is_none_or(|sq| sq >= CAPACITY) {
            return Err(Error::CapacityExceeded(t as i128 * t as i128));
        }
        Ok(Self { t })
    }

    pub fn t(self) -> u64 {
        self.t
    }

    /// Side of a unit square, `t²`.
    pub fn square_len(self) -> u64 {
        self.t * self.t
    }
}

pub fn build_segment(kind: SegmentKind, t: u64) -> Result<IntSet> {
    let p = SegmentParams::new(t)?;
    Ok(segment(kind, p))
}

fn segment(kind: SegmentKind, p: SegmentParams) -> IntSet {
    let t = p.t as i64;
    let ap = match kind {
        SegmentKind::V => make_ap(0, 1, t),
        SegmentKind::H => make_ap(0, t, t * t - t),
        SegmentKind::S => make_ap(0, t + 1, t * t - 1),
    };
    ap.expect("segment parameters validated")
}

/// `Q = [0, t² - 1]`.
pub fn square(t: u64) -> Result<IntSet> {
    let p = SegmentParams::new(t)?;
    IntSet::interval(0, p.square_len() - 1)
}

/// `P = H + S`.
pub fn parallelogram(t: u64) -> Result<IntSet> {
    let p = SegmentParams::new(t)?;
    segment(SegmentKind::H, p).sumset(&segment(SegmentKind::S, p))
}

/// `[0, t] ∪ {2t, 3t, ..., t²}`.
pub fn simple_basis(t: u64) -> Result<IntSet> {
    let p = SegmentParams::new(t)?;
    let t = p.t;
    IntSet::new((0..=t).chain((2..=t).map(|j| j * t)))
}

/// Copies of one segment kind at the given square locations.
fn copies(kind: SegmentKind, locs: &IntSet, p: SegmentParams) -> Result<IntSet> {
    let base = segment(kind, p);
    let mut out = IntSet::empty();
    for loc in locs.iter() {
        let shift = loc
            .checked_mul(p.square_len())
            .filter(|&s| s < CAPACITY)
            .ok_or(Error::CapacityExceeded(loc as i128 * p.square_len() as i128))?;
        out = out.union(&base.translate(shift as i64)?);
    }
    Ok(out)
}

/// `A = (V + t²·I) ∪ (H + t²·J) ∪ (S + t²·K)`; overlaps are merged.
pub fn build_basis(placement: &Placement, t: u64) -> Result<IntSet> {
    let p = SegmentParams::new(t)?;
    let mut out = IntSet::empty();
    for kind in SegmentKind::ALL {
        out = out.union(&copies(kind, placement.locations(kind), p)?);
    }
    Ok(out)
}

/// Which segment copy an element of a basis came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementOrigin {
    pub element: u64,
    pub kind: SegmentKind,
    /// Square location of the copy (the element is in `segment + t²·location`).
    pub location: u64,
}

impl ElementOrigin {
    /// Planar coordinates `(⌊e/t⌋, e mod t)`.
    pub fn coords(&self, t: u64) -> (u64, u64) {
        planar(self.element, t)
    }
}

pub fn planar(element: u64, t: u64) -> (u64, u64) {
    (element / t, element % t)
}

/// One origin per basis element, in increasing element order. An element
/// shared by several copies is attributed to the first in (kind, location)
/// order, which is V before H before S.
pub fn element_origins(placement: &Placement, t: u64) -> Result<Vec<ElementOrigin>> {
    let p = SegmentParams::new(t)?;
    let mut seen: BTreeMap<u64, ElementOrigin> = BTreeMap::new();
    for kind in SegmentKind::ALL {
        let base = segment(kind, p);
        for loc in placement.locations(kind).iter() {
            let shift = loc
                .checked_mul(p.square_len())
                .filter(|&s| s < CAPACITY)
                .ok_or(Error::CapacityExceeded(loc as i128 * p.square_len() as i128))?;
            for e in base.translate(shift as i64)?.iter() {
                seen.entry(e).or_insert(ElementOrigin {
                    element: e,
                    kind,
                    location: loc,
                });
            }
        }
    }
    Ok(seen.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> IntSet {
        IntSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn segment_instances() {
        assert_eq!(build_segment(SegmentKind::V, 4).unwrap(), set(&[0, 1, 2, 3, 4]));
        assert_eq!(build_segment(SegmentKind::H, 4).unwrap(), set(&[0, 4, 8, 12]));
        assert_eq!(build_segment(SegmentKind::S, 4).unwrap(), set(&[0, 5, 10, 15]));
        assert_eq!(
            build_segment(SegmentKind::V, 1),
            Err(Error::InvalidSegmentLength(1))
        );
        assert!(square(0).is_err());
        assert!(parallelogram(1).is_err());
        assert!(simple_basis(1).is_err());
    }

    #[test]
    fn square_and_parallelogram() {
        assert_eq!(square(3).unwrap(), IntSet::interval(0, 8).unwrap());
        assert_eq!(parallelogram(2).unwrap(), set(&[0, 2, 3, 5]));
        let vh = build_segment(SegmentKind::V, 2)
            .unwrap()
            .sumset(&build_segment(SegmentKind::H, 2).unwrap())
            .unwrap();
        assert!(square(2).unwrap().is_subset(&vh));
    }

    #[test]
    fn simple_basis_instances() {
        let b3 = simple_basis(3).unwrap();
        assert_eq!(b3, set(&[0, 1, 2, 3, 6, 9]));
        assert_eq!(b3.range_n().unwrap(), 12);
        assert_eq!(simple_basis(2).unwrap(), set(&[0, 1, 2, 4]));
        assert!(simple_basis(10).unwrap().range_n().unwrap() >= 110);
    }

    #[test]
    fn small_basis_is_a_union() {
        let p = Placement::new(set(&[0]), set(&[0]), IntSet::empty()).unwrap();
        assert_eq!(build_basis(&p, 3).unwrap(), set(&[0, 1, 2, 3, 6]));
    }

    #[test]
    fn origins_cover_every_element_once() {
        let p = Placement::new(set(&[0]), IntSet::empty(), set(&[0, 1])).unwrap();
        let origins = element_origins(&p, 3).unwrap();
        let basis = build_basis(&p, 3).unwrap();
        assert_eq!(origins.len(), basis.len());
        assert!(origins.iter().map(|o| o.element).eq(basis.iter()));
        // 0 is in both V and S at location 0; V wins.
        assert_eq!(origins[0].kind, SegmentKind::V);
        let s11 = ElementOrigin {
            element: 11,
            kind: SegmentKind::S,
            location: 0,
        };
        assert_eq!(s11.coords(10), (1, 1));
    }

    #[test]
    fn oversized_location_is_rejected() {
        let p = Placement::new(set(&[1 << 36]), set(&[0]), IntSet::empty()).unwrap();
        assert!(matches!(build_basis(&p, 32), Err(Error::CapacityExceeded(_))));
    }
}
