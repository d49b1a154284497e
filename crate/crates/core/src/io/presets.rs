//! Named constructions.

use std::fmt;
use std::str::FromStr;

use crate::coverage::Placement;
use crate::error::{Error, Result};
use crate::intset::{make_ap, IntSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `[0, t] ∪ {2t, ..., t²}`; not a segment placement.
    Simple,
    /// `I = {0,6,10}, J = {0,1,2}, K = {3}`.
    Mrose7,
    /// `I = {0,3}, J = {0,1,2}, K = {6,10}`.
    Klove7,
    /// The ℓ = 42 placement covering 510 squares.
    Kohonen42,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Simple, Preset::Mrose7, Preset::Klove7, Preset::Kohonen42];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Simple => "simple",
            Preset::Mrose7 => "mrose7",
            Preset::Klove7 => "klove7",
            Preset::Kohonen42 => "kohonen42",
        }
    }

    /// The segment placement, or `None` for [`Preset::Simple`].
    pub fn placement(self) -> Option<Placement> {
        let set = |v: &[u64]| IntSet::new(v.iter().copied()).unwrap();
        let p = match self {
            Preset::Simple => return None,
            Preset::Mrose7 => Placement::new(set(&[0, 6, 10]), set(&[0, 1, 2]), set(&[3])),
            Preset::Klove7 => Placement::new(set(&[0, 3]), set(&[0, 1, 2]), set(&[6, 10])),
            Preset::Kohonen42 => {
                let ap = |a, s, b| make_ap(a, s, b).unwrap();
                Placement::new(
                    set(&[0, 5]).union(&ap(112, 5, 137)),
                    ap(10, 6, 106),
                    ap(0, 1, 4).union(&ap(224, 1, 229)).union(&ap(367, 1, 372)),
                )
            }
        };
        Some(p.expect("preset placements are nonempty"))
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown preset `{s}` (expected simple, mrose7, klove7 or kohonen42)"
                ))
            })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
