//! Partial injective maps on a finite chain.

use std::fmt;

use bitflags::bitflags;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size `n` of the chain `{1, ..., n}`. `n = 0` admits only the empty map.
pub type ChainSize = u32;

/// Largest chain for which domain and image sets fit a `u64` bitmask.
pub const MAX_CHAIN: ChainSize = 64;

/// A partial injection on `{1, ..., n}`, stored as domain-sorted pairs.
///
/// `dom[i] -> img[i]`; `dom` is strictly increasing and `img` has no repeats.
/// Equality is structural on `(n, dom, img)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialInjection {
    n: ChainSize,
    dom: Vec<u32>,
    img: Vec<u32>,
}

/// Per-map statistics. Waists and shoulders are `None` exactly for the empty map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub height: u32,
    pub fix: u32,
    /// `max(Im)`
    pub right_waist: Option<u32>,
    /// `min(Im)`
    pub left_waist: Option<u32>,
    /// `max(Dom)`
    pub right_shoulder: Option<u32>,
    /// `min(Dom)`
    pub left_shoulder: Option<u32>,
}

bitflags! {
    /// Classification predicates. Maps of height 0 or 1 carry both order flags.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
    pub struct MapFlags: u8 {
        const ORDER_PRESERVING = 1 << 0;
        const ORDER_REVERSING = 1 << 1;
        const ISOMETRY = 1 << 2;
        const ORDER_DECREASING = 1 << 3;
        const PARTIAL_IDENTITY = 1 << 4;
        const IDEMPOTENT = 1 << 5;
    }
}

fn check_point(n: ChainSize, x: i64) -> Result<u32> {
    if x >= 1 && x <= n as i64 {
        Ok(x as u32)
    } else {
        Err(Error::OutOfChain { point: x, n })
    }
}

impl PartialInjection {
    /// Builds a map from `(domain point, image point)` pairs in any order.
    pub fn new(n: ChainSize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if n > MAX_CHAIN {
            return Err(Error::BoundExceeded {
                what: "chain size",
                n,
                bound: MAX_CHAIN,
            });
        }
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().collect();
        for &(x, y) in &pairs {
            check_point(n, x as i64)?;
            check_point(n, y as i64)?;
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateDomainPoint(w[0].0));
        }
        let mut seen = 0u64;
        for &(_, y) in &pairs {
            let bit = 1u64 << (y - 1);
            if seen & bit != 0 {
                return Err(Error::DuplicateImagePoint(y));
            }
            seen |= bit;
        }
        let (dom, img) = pairs.into_iter().unzip();
        Ok(Self { n, dom, img })
    }

    /// The empty map on `{1, ..., n}`.
    pub fn empty(n: ChainSize) -> Self {
        Self {
            n,
            dom: Vec::new(),
            img: Vec::new(),
        }
    }

    /// The partial identity on `points`.
    pub fn identity_on(n: ChainSize, points: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(n, points.into_iter().map(|x| (x, x)))
    }

    /// Caller guarantees sorted `dom`, in-range values and injectivity.
    pub(crate) fn from_sorted_unchecked(n: ChainSize, dom: Vec<u32>, img: Vec<u32>) -> Self {
        debug_assert_eq!(dom.len(), img.len());
        debug_assert!(dom.windows(2).all(|w| w[0] < w[1]));
        Self { n, dom, img }
    }

    pub fn n(&self) -> ChainSize {
        self.n
    }

    pub fn domain(&self) -> &[u32] {
        &self.dom
    }

    /// Images in domain order (`image()[i]` is the image of `domain()[i]`).
    pub fn image(&self) -> &[u32] {
        &self.img
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.dom.iter().copied().zip(self.img.iter().copied())
    }

    pub fn height(&self) -> u32 {
        self.dom.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.dom.is_empty()
    }

    /// Image of `x`, or `None` when `x` is outside the domain.
    pub fn apply(&self, x: u32) -> Option<u32> {
        self.dom.binary_search(&x).ok().map(|i| self.img[i])
    }

    /// Domain as a bitmask, bit `x - 1` set for each domain point `x`.
    pub fn domain_mask(&self) -> u64 {
        self.dom.iter().fold(0, |m, &x| m | 1 << (x - 1))
    }

    pub fn image_mask(&self) -> u64 {
        self.img.iter().fold(0, |m, &y| m | 1 << (y - 1))
    }

    /// Applies `self` then `other`: `x -> (x self) other` on
    /// `{x in Dom self : x self in Dom other}`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ChainMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let (dom, img) = self
            .pairs()
            .filter_map(|(x, y)| other.apply(y).map(|z| (x, z)))
            .unzip();
        Ok(Self::from_sorted_unchecked(self.n, dom, img))
    }

    /// The inverse partial map `Im -> Dom`.
    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<(u32, u32)> = self.pairs().map(|(x, y)| (y, x)).collect();
        pairs.sort_unstable();
        let (dom, img) = pairs.into_iter().unzip();
        Self::from_sorted_unchecked(self.n, dom, img)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs().filter(|(x, y)| x == y).map(|(x, _)| x)
    }

    pub fn statistics(&self) -> Statistics {
        Statistics {
            height: self.height(),
            fix: self.fixed_points().count() as u32,
            right_waist: self.img.iter().copied().max(),
            left_waist: self.img.iter().copied().min(),
            right_shoulder: self.dom.last().copied(),
            left_shoulder: self.dom.first().copied(),
        }
    }

    pub fn classify(&self) -> MapFlags {
        let mut flags = MapFlags::empty();
        // dom is sorted, so pairwise order checks reduce to consecutive pairs.
        let steps = || self.img.windows(2).map(|w| w[1] as i64 - w[0] as i64);
        if steps().all(|d| d >= 0) {
            flags |= MapFlags::ORDER_PRESERVING;
        }
        if steps().all(|d| d <= 0) {
            flags |= MapFlags::ORDER_REVERSING;
        }
        let isometry = self.pairs().enumerate().all(|(i, (x, xa))| {
            self.pairs()
                .skip(i + 1)
                .all(|(y, ya)| x.abs_diff(y) == xa.abs_diff(ya))
        });
        if isometry {
            flags |= MapFlags::ISOMETRY;
        }
        if self.pairs().all(|(x, y)| y <= x) {
            flags |= MapFlags::ORDER_DECREASING;
        }
        if self.pairs().all(|(x, y)| x == y) {
            flags |= MapFlags::PARTIAL_IDENTITY;
        }
        if self.compose(self).as_ref() == Ok(self) {
            flags |= MapFlags::IDEMPOTENT;
        }
        flags
    }
}

impl fmt::Display for PartialInjection {
    /// Two-row notation on one line: `(1 2 4 / 3 4 6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        if self.is_empty() {
            write!(f, "( / )")
        } else {
            write!(f, "({} / {})", row(&self.dom), row(&self.img))
        }
    }
}
