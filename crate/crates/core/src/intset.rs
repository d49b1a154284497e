//! Finite sets of non-negative integers and their sumsets.
//!
//! An [`IntSet`] keeps its elements sorted and deduplicated. Sumsets are
//! computed on dense bit arrays: one shifted OR of the second operand per
//! element of the first.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exclusive upper bound on every stored element.
pub const CAPACITY: u64 = 1 << 40;

/// Largest dense bit array a sumset may allocate (512 MiB).
const MAX_DENSE_BITS: u64 = 1 << 32;

/// Exact non-negative rational used in reports.
pub type Rational = Ratio<u64>;

/// Renders a rational as a decimal with six digits.
pub fn display_decimal(r: &Rational) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

/// A finite set of non-negative integers below [`CAPACITY`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSet {
    elems: Vec<u64>,
}

impl IntSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a set from arbitrary (possibly unsorted, repeated) elements.
    pub fn new<I: IntoIterator<Item = u64>>(items: I) -> Result<Self> {
        let mut elems: Vec<u64> = items.into_iter().collect();
        if let Some(&bad) = elems.iter().find(|&&e| e >= CAPACITY) {
            return Err(Error::CapacityExceeded(bad as i128));
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(Self { elems })
    }

    /// Like [`IntSet::new`] but accepts signed input and rejects negatives.
    pub fn from_signed<I: IntoIterator<Item = i64>>(items: I) -> Result<Self> {
        let mut elems = Vec::new();
        for e in items {
            elems.push(check_element(e as i128)?);
        }
        Self::new(elems)
    }

    /// `[a, b]`, or the empty set when `a > b`.
    pub fn interval(a: u64, b: u64) -> Result<Self> {
        if a > b {
            return Ok(Self::empty());
        }
        if b >= CAPACITY {
            return Err(Error::CapacityExceeded(b as i128));
        }
        Ok(Self {
            elems: (a..=b).collect(),
        })
    }

    // Invariant-preserving constructor for callers that already hold sorted,
    // unique, in-range data.
    pub(crate) fn from_sorted_unchecked(elems: Vec<u64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.last().is_none_or(|&e| e < CAPACITY));
        Self { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn smallest(&self) -> Option<u64> {
        self.elems.first().copied()
    }

    pub fn largest(&self) -> Option<u64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.elems
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut rest = other.elems.iter();
        'outer: for &x in &self.elems {
            for &y in rest.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &IntSet) -> IntSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.elems.iter().peekable(), other.elems.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x <= y {
                        out.push(x);
                        a.next();
                        if x == y {
                            b.next();
                        }
                    } else {
                        out.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => {
                    out.extend(a);
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b);
                    break;
                }
                (None, None) => break,
            }
        }
        IntSet::from_sorted_unchecked(out)
    }

    /// `A + h`; fails if any shifted element leaves `[0, CAPACITY)`.
    pub fn translate(&self, h: i64) -> Result<IntSet> {
        let mut out = Vec::with_capacity(self.len());
        for &e in &self.elems {
            out.push(check_element(e as i128 + h as i128)?);
        }
        Ok(IntSet::from_sorted_unchecked(out))
    }

    /// `h · A`.
    pub fn scale(&self, h: i64) -> Result<IntSet> {
        if h == 0 {
            return Ok(if self.is_empty() {
                IntSet::empty()
            } else {
                IntSet::from_sorted_unchecked(vec![0])
            });
        }
        let mut out = Vec::with_capacity(self.len());
        for &e in &self.elems {
            out.push(check_element(e as i128 * h as i128)?);
        }
        if h < 0 {
            out.reverse();
        }
        Ok(IntSet::from_sorted_unchecked(out))
    }

    /// `A + B`; both operands must be nonempty.
    pub fn sumset(&self, other: &IntSet) -> Result<IntSet> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let hi = self.largest().unwrap() + other.largest().unwrap();
        if hi >= CAPACITY {
            return Err(Error::CapacityExceeded(hi as i128));
        }
        Ok(dense_sumset(self, other)?.to_intset())
    }

    /// `A + B`, defined as empty when either operand is empty.
    pub fn sumset_or_empty(&self, other: &IntSet) -> Result<IntSet> {
        if self.is_empty() || other.is_empty() {
            Ok(IntSet::empty())
        } else {
            self.sumset(other)
        }
    }

    /// Range `n(A)`: the largest `n` with `[0, n] ⊆ A + A`.
    pub fn range_n(&self) -> Result<u64> {
        if !self.contains(0) {
            return Err(Error::MissingZero);
        }
        let sums = self.sumset(self)?;
        Ok(prefix_len(sums.as_slice()) - 1)
    }
}

/// Largest `m` with `[0, m-1]` contained in a sorted, deduplicated slice.
pub(crate) fn prefix_len(sorted: &[u64]) -> u64 {
    // `sorted[i] >= i` always, with equality exactly on a prefix.
    let (mut lo, mut hi) = (0usize, sorted.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if sorted[mid] == mid as u64 {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo as u64
}

fn check_element(v: i128) -> Result<u64> {
    if v < 0 {
        Err(Error::NegativeElement(v))
    } else if v >= CAPACITY as i128 {
        Err(Error::CapacityExceeded(v))
    } else {
        Ok(v as u64)
    }
}

/// `[a, (step), b] = {a, a+step, ..., b}`.
pub fn make_ap(a: i64, step: i64, b: i64) -> Result<IntSet> {
    let bad = |reason| Error::BadProgression { a, step, b, reason };
    if a < 0 {
        return Err(Error::NegativeElement(a as i128));
    }
    if step < 1 {
        return Err(bad("step must be at least 1"));
    }
    if b < a {
        return Err(bad("upper end below lower end"));
    }
    if (b - a) % step != 0 {
        return Err(bad("step does not divide b - a"));
    }
    check_element(b as i128)?;
    let elems = (a..=b).step_by(step as usize).map(|e| e as u64).collect();
    Ok(IntSet::from_sorted_unchecked(elems))
}

/// Dense bit array with an offset: bit `i` stands for `offset + i`.
#[derive(Clone, Debug)]
pub(crate) struct DenseBits {
    offset: u64,
    words: Vec<u64>,
}

impl DenseBits {
    pub(crate) fn from_set(s: &IntSet) -> Self {
        let offset = s.smallest().unwrap_or(0);
        let span = s.largest().map_or(0, |m| m - offset + 1);
        let mut words = vec![0u64; (span as usize).div_ceil(64)];
        for e in s.iter() {
            let i = (e - offset) as usize;
            words[i / 64] |= 1 << (i % 64);
        }
        Self { offset, words }
    }

    pub(crate) fn to_intset(&self) -> IntSet {
        let mut out = Vec::new();
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                out.push(self.offset + w as u64 * 64 + b);
                bits &= bits - 1;
            }
        }
        IntSet::from_sorted_unchecked(out)
    }
}

fn dense_sumset(a: &IntSet, b: &IntSet) -> Result<DenseBits> {
    let bb = DenseBits::from_set(b);
    let a_min = a.smallest().unwrap();
    let span = (a.largest().unwrap() - a_min) + (b.largest().unwrap() - bb.offset) + 1;
    if span > MAX_DENSE_BITS {
        return Err(Error::TooDense(span));
    }
    let mut out = vec![0u64; span.div_ceil(64) as usize + 1];
    for e in a.iter() {
        let s = (e - a_min) as usize;
        let (ws, bs) = (s / 64, s % 64);
        let dst = &mut out[ws..];
        if bs == 0 {
            for (d, &w) in dst.iter_mut().zip(&bb.words) {
                *d |= w;
            }
        } else {
            let mut carry = 0u64;
            for (d, &w) in dst.iter_mut().zip(&bb.words) {
                *d |= (w << bs) | carry;
                carry = w >> (64 - bs);
            }
            dst[bb.words.len()] |= carry;
        }
    }
    Ok(DenseBits {
        offset: a_min + bb.offset,
        words: out,
    })
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Size/range accounting for a concrete basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    /// `|A|`, counting the zero.
    pub k: u64,
    pub n: u64,
    /// `n / k²`, exact.
    pub ratio: Rational,
    pub t: Option<u64>,
    /// `(t / (t+1))²` when `t` is known.
    pub r: Option<Rational>,
}

impl BasisReport {
    pub fn of(basis: &IntSet, t: Option<u64>) -> Result<Self> {
        let n = basis.range_n()?;
        let k = basis.len() as u64;
        Ok(Self {
            k,
            n,
            ratio: Rational::new(n, k * k),
            t,
            r: t.map(|t| Rational::new(t * t, (t + 1) * (t + 1))),
        })
    }
}

/// `k(k+1)/2`: the number of unordered pairs with repetition.
pub fn sumset_size_bound(k: u64) -> u64 {
    k * (k + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> IntSet {
        IntSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn ap_examples() {
        assert_eq!(make_ap(0, 1, 3).unwrap(), set(&[0, 1, 2, 3]));
        let j = make_ap(10, 6, 106).unwrap();
        assert_eq!(j.len(), 17);
        assert_eq!(j.smallest(), Some(10));
        assert_eq!(j.largest(), Some(106));
        assert_eq!(
            make_ap(112, 5, 137).unwrap(),
            set(&[112, 117, 122, 127, 132, 137])
        );
    }

    #[test]
    fn ap_errors() {
        assert!(matches!(make_ap(0, 4, 10), Err(Error::BadProgression { .. })));
        assert!(matches!(make_ap(-1, 1, 3), Err(Error::NegativeElement(-1))));
        assert!(matches!(make_ap(5, 1, 3), Err(Error::BadProgression { .. })));
        assert!(matches!(make_ap(0, 0, 0), Err(Error::BadProgression { .. })));
        assert!(matches!(
            make_ap(0, 1, 1 << 41),
            Err(Error::CapacityExceeded(_))
        ));
    }

    #[test]
    fn translate_and_scale() {
        assert_eq!(set(&[0, 5]).translate(3).unwrap(), set(&[3, 8]));
        assert_eq!(set(&[0, 1, 2]).scale(4).unwrap(), set(&[0, 4, 8]));
        assert_eq!(set(&[0]).translate(0).unwrap(), set(&[0]));
        assert_eq!(set(&[3, 8]).translate(-3).unwrap(), set(&[0, 5]));
        assert!(matches!(
            set(&[0, 5]).translate(-1),
            Err(Error::NegativeElement(-1))
        ));
        assert!(matches!(
            set(&[1]).scale(-2),
            Err(Error::NegativeElement(-2))
        ));
        assert!(set(&[1 << 39]).scale(4).is_err());
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(set(&[0, 1]).sumset(&set(&[0, 2])).unwrap(), set(&[0, 1, 2, 3]));
        let a = set(&[0, 1, 3, 4]);
        assert_eq!(a.sumset(&a).unwrap(), IntSet::interval(0, 8).unwrap());
        assert_eq!(set(&[0]).sumset(&set(&[0, 7])).unwrap(), set(&[0, 7]));
        assert_eq!(set(&[0]).sumset(&IntSet::empty()), Err(Error::EmptyOperand));
    }

    #[test]
    fn sumset_crosses_word_boundaries() {
        let a = set(&[0, 63, 64, 65, 200]);
        let b = set(&[1, 64, 127, 128]);
        let mut naive = Vec::new();
        for x in a.iter() {
            for y in b.iter() {
                naive.push(x + y);
            }
        }
        assert_eq!(a.sumset(&b).unwrap(), IntSet::new(naive).unwrap());
    }

    #[test]
    fn range_examples() {
        assert_eq!(set(&[0, 1]).range_n().unwrap(), 2);
        assert_eq!(set(&[0, 1, 3, 4]).range_n().unwrap(), 8);
        assert_eq!(set(&[0, 2]).range_n().unwrap(), 0);
        assert_eq!(set(&[0]).range_n().unwrap(), 0);
        assert_eq!(set(&[1, 2]).range_n(), Err(Error::MissingZero));
    }

    #[test]
    fn subset_and_union() {
        assert!(set(&[1, 3]).is_subset(&set(&[0, 1, 2, 3])));
        assert!(!set(&[1, 4]).is_subset(&set(&[0, 1, 2, 3])));
        assert!(IntSet::empty().is_subset(&set(&[1])));
        assert_eq!(set(&[0, 2]).union(&set(&[1, 2, 5])), set(&[0, 1, 2, 5]));
    }

    #[test]
    fn report_ratio_is_exact() {
        let r = BasisReport::of(&set(&[0, 1, 3, 4]), Some(2)).unwrap();
        assert_eq!((r.k, r.n), (4, 8));
        assert_eq!(r.ratio, Rational::new(1, 2));
        assert_eq!(r.r, Some(Rational::new(4, 9)));
        assert_eq!(display_decimal(&Rational::new(85, 294)), "0.289116");
    }
}
