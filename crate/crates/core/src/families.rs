//! The studied families of partial isometries and their enumerators.
//!
//! Every partial isometry of a chain is a translation `x -> x + t` or a
//! reflection `x -> c - x` on its domain, so [`enumerate`] walks domain
//! bitmasks and emits the admissible shifts and centres directly.
//! [`naive_enumerate`] instead filters every partial injection through
//! [`PartialInjection::classify`] and is kept as the oracle.

use std::fmt;
use std::ops::{Range, RangeInclusive};
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ptransform::{ChainSize, MapFlags, PartialInjection};

/// Default bound for the naive enumerator.
pub const DEFAULT_ORACLE_BOUND: u32 = 8;

/// Environment variable overriding [`DEFAULT_ORACLE_BOUND`].
pub const ORACLE_BOUND_ENV: &str = "CHAINISO_ORACLE_BOUND";

/// Masks are `u64` and the full range `0..1 << n` must be representable.
pub const MAX_ENUMERATION_CHAIN: ChainSize = 62;

/// Reads [`ORACLE_BOUND_ENV`], falling back to [`DEFAULT_ORACLE_BOUND`].
pub fn oracle_bound_from_env() -> u32 {
    std::env::var(ORACLE_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BOUND)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// All partial isometries.
    Dp,
    /// Order-preserving partial isometries.
    Odp,
    /// Order-decreasing partial isometries.
    Ddp,
    /// Order-preserving, order-decreasing partial isometries.
    Oddp,
    /// Order-reversing, order-decreasing partial isometries, together with
    /// every map of height at most one.
    DdpStar,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Dp,
        Family::Odp,
        Family::Ddp,
        Family::Oddp,
        Family::DdpStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dp => "dp",
            Family::Odp => "odp",
            Family::Ddp => "ddp",
            Family::Oddp => "oddp",
            Family::DdpStar => "ddp-star",
        }
    }

    fn decreasing(self) -> bool {
        matches!(self, Family::Ddp | Family::Oddp | Family::DdpStar)
    }

    fn translations(self, height: u32) -> bool {
        !matches!(self, Family::DdpStar) || height <= 1
    }

    fn reflections(self) -> bool {
        matches!(self, Family::Dp | Family::Ddp | Family::DdpStar)
    }

    /// Membership decided from classification flags alone.
    pub fn admits(self, flags: MapFlags) -> bool {
        let mut need = MapFlags::ISOMETRY;
        match self {
            Family::Dp => {}
            Family::Odp => need |= MapFlags::ORDER_PRESERVING,
            Family::Ddp => need |= MapFlags::ORDER_DECREASING,
            Family::Oddp => need |= MapFlags::ORDER_PRESERVING | MapFlags::ORDER_DECREASING,
            Family::DdpStar => need |= MapFlags::ORDER_REVERSING | MapFlags::ORDER_DECREASING,
        }
        flags.contains(need)
    }

    pub fn contains(self, map: &PartialInjection) -> bool {
        self.admits(map.classify())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.to_ascii_lowercase().replace('_', "-"))
            .or_else(|| (s.eq_ignore_ascii_case("ddpstar")).then_some(Family::DdpStar))
            .ok_or_else(|| Error::Unknown {
                what: "family",
                value: s.to_owned(),
            })
    }
}

/// A family on a fixed chain, optionally restricted to one height.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySlice {
    pub family: Family,
    pub n: ChainSize,
    pub height: Option<u32>,
}

impl FamilySlice {
    pub fn new(family: Family, n: ChainSize) -> Self {
        Self {
            family,
            n,
            height: None,
        }
    }

    pub fn with_height(self, p: u32) -> Self {
        Self {
            height: Some(p),
            ..self
        }
    }

    fn admits_height(&self, p: u32) -> bool {
        self.height.is_none_or(|h| h == p)
    }

    /// Domain masks to visit. The full range is `0..1 << n`.
    pub fn mask_range(&self) -> Range<u64> {
        0..1u64 << self.n.min(MAX_ENUMERATION_CHAIN)
    }
}

fn mask_points(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() + 1);
        m &= m - 1;
    }
    out
}

/// The admissible shifts and reflection centres for one domain.
struct Moves {
    shifts: RangeInclusive<i64>,
    centres: RangeInclusive<i64>,
}

#[allow(clippy::reversed_empty_ranges)]
fn moves(family: Family, n: ChainSize, lo: u32, hi: u32, height: u32) -> Moves {
    let (lo, hi, n) = (lo as i64, hi as i64, n as i64);
    let shifts = if family.translations(height) {
        let top = if family.decreasing() {
            (n - hi).min(0)
        } else {
            n - hi
        };
        (1 - lo)..=top
    } else {
        1..=0
    };
    // Height <= 1 reflections coincide with translations and are not emitted.
    let centres = if height >= 2 && family.reflections() {
        let top = if family.decreasing() { 2 * lo } else { lo + n };
        (hi + 1)..=top
    } else {
        1..=0
    };
    Moves { shifts, centres }
}

fn range_len(r: &RangeInclusive<i64>) -> u64 {
    (r.end() - r.start() + 1).max(0) as u64
}

fn count_for_mask(slice: &FamilySlice, mask: u64) -> u64 {
    let p = mask.count_ones();
    if !slice.admits_height(p) {
        return 0;
    }
    if mask == 0 {
        return 1;
    }
    let lo = mask.trailing_zeros() + 1;
    let hi = 64 - mask.leading_zeros();
    let m = moves(slice.family, slice.n, lo, hi, p);
    range_len(&m.shifts) + range_len(&m.centres)
}

fn maps_for_mask(slice: &FamilySlice, mask: u64) -> Vec<PartialInjection> {
    let p = mask.count_ones();
    if !slice.admits_height(p) {
        return Vec::new();
    }
    let dom = mask_points(mask);
    let (Some(&lo), Some(&hi)) = (dom.first(), dom.last()) else {
        return vec![PartialInjection::empty(slice.n)];
    };
    let m = moves(slice.family, slice.n, lo, hi, p);
    let translated = m.shifts.map(|t| {
        let img = dom.iter().map(|&x| (x as i64 + t) as u32).collect();
        PartialInjection::from_sorted_unchecked(slice.n, dom.clone(), img)
    });
    let reflected = m.centres.map(|c| {
        let img = dom.iter().map(|&x| (c - x as i64) as u32).collect();
        PartialInjection::from_sorted_unchecked(slice.n, dom.clone(), img)
    });
    translated.chain(reflected).collect()
}

/// `x -> x + shift` on `points`.
pub fn construct_translation(n: ChainSize, points: &[u32], shift: i64) -> Result<PartialInjection> {
    let pairs = points
        .iter()
        .map(|&x| {
            let y = x as i64 + shift;
            if (1..=n as i64).contains(&y) {
                Ok((x, y as u32))
            } else {
                Err(Error::OutOfChain { point: y, n })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PartialInjection::new(n, pairs)
}

/// `x -> centre - x` on `points`.
pub fn construct_reflection(n: ChainSize, points: &[u32], centre: i64) -> Result<PartialInjection> {
    let pairs = points
        .iter()
        .map(|&x| {
            let y = centre - x as i64;
            if (1..=n as i64).contains(&y) {
                Ok((x, y as u32))
            } else {
                Err(Error::OutOfChain { point: y, n })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PartialInjection::new(n, pairs)
}

/// Streams every element of `slice` exactly once, in domain-mask order.
pub fn enumerate(slice: FamilySlice) -> impl Iterator<Item = PartialInjection> {
    slice
        .mask_range()
        .flat_map(move |mask| maps_for_mask(&slice, mask))
}

/// Elements of `slice` for domain masks in `masks` only.
pub fn enumerate_masks(
    slice: FamilySlice,
    masks: Range<u64>,
) -> impl Iterator<Item = PartialInjection> {
    masks.flat_map(move |mask| maps_for_mask(&slice, mask))
}

/// Cardinality of `slice` counted over domain masks in `masks`.
pub fn count_masks(slice: &FamilySlice, masks: Range<u64>) -> u64 {
    masks.map(|mask| count_for_mask(slice, mask)).sum()
}

/// Cardinality of `slice`, counted in parallel without building maps.
pub fn count(slice: &FamilySlice) -> u64 {
    slice
        .mask_range()
        .into_par_iter()
        .map(|mask| count_for_mask(slice, mask))
        .sum()
}

/// Number of elements of each height `0..=n`.
pub fn height_profile(family: Family, n: ChainSize) -> Vec<u64> {
    let slice = FamilySlice::new(family, n);
    slice
        .mask_range()
        .into_par_iter()
        .fold(
            || vec![0u64; n as usize + 1],
            |mut acc, mask| {
                acc[mask.count_ones() as usize] += count_for_mask(&slice, mask);
                acc
            },
        )
        .reduce(
            || vec![0u64; n as usize + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Number of elements with each fix value `0..=n`, by enumeration.
pub fn fix_profile(family: Family, n: ChainSize) -> Vec<u64> {
    let mut out = vec![0u64; n as usize + 1];
    for m in enumerate(FamilySlice::new(family, n)) {
        out[m.fixed_points().count()] += 1;
    }
    out
}

/// Every partial injection on `{1, ..., n}`.
pub fn all_partial_injections(
    n: ChainSize,
    bound: u32,
) -> Result<impl Iterator<Item = PartialInjection>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "naive oracle",
            n,
            bound,
        });
    }
    let masks = 0..1u64 << n;
    Ok(masks.clone().flat_map(move |dm| {
        let dom = mask_points(dm);
        let p = dom.len();
        masks
            .clone()
            .filter(move |im| im.count_ones() as usize == p)
            .flat_map(move |im| {
                let dom = dom.clone();
                mask_points(im)
                    .into_iter()
                    .permutations(p)
                    .map(move |img| PartialInjection::from_sorted_unchecked(n, dom.clone(), img))
            })
    }))
}

/// Filter-based oracle: every partial injection, kept when its
/// classification places it in the slice.
pub fn naive_enumerate(
    slice: FamilySlice,
    bound: u32,
) -> Result<impl Iterator<Item = PartialInjection>> {
    Ok(all_partial_injections(slice.n, bound)?
        .filter(move |m| slice.admits_height(m.height()) && slice.family.contains(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(it: impl Iterator<Item = PartialInjection>) -> BTreeSet<PartialInjection> {
        it.collect()
    }

    #[test]
    fn translation_examples() {
        let a = construct_translation(10, &[1, 2, 4, 7, 8], 2).unwrap();
        assert_eq!(a.image(), &[3, 4, 6, 9, 10]);
        let id = construct_translation(6, &[2, 5], 0).unwrap();
        assert!(id.classify().contains(MapFlags::PARTIAL_IDENTITY));
        assert!(matches!(
            construct_translation(5, &[4, 5], 2),
            Err(Error::OutOfChain { point: 6, n: 5 })
        ));
    }

    #[test]
    fn reflection_examples() {
        let b = construct_reflection(10, &[2, 4, 7, 8], 12).unwrap();
        assert_eq!(
            b,
            PartialInjection::new(10, [(2, 10), (4, 8), (7, 5), (8, 4)]).unwrap()
        );

        let r = construct_reflection(7, &[5, 6, 7], 8).unwrap();
        assert_eq!(r.image(), &[3, 2, 1]);
        assert!(r.classify().contains(MapFlags::ORDER_DECREASING));

        let single = construct_reflection(3, &[1], 2).unwrap();
        assert_eq!(single, construct_translation(3, &[1], 0).unwrap());
        assert!(construct_reflection(3, &[1, 2], 2).is_err());
    }

    #[test]
    fn ddp_on_two_points() {
        let got = set(enumerate(FamilySlice::new(Family::Ddp, 2)));
        let want: BTreeSet<_> = [
            vec![],
            vec![(1, 1)],
            vec![(2, 2)],
            vec![(2, 1)],
            vec![(1, 1), (2, 2)],
        ]
        .into_iter()
        .map(|p| PartialInjection::new(2, p).unwrap())
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn ddp_star_height_two_on_three_points() {
        let got: Vec<_> = enumerate(FamilySlice::new(Family::DdpStar, 3).with_height(2)).collect();
        assert_eq!(
            got,
            vec![PartialInjection::new(3, [(2, 2), (3, 1)]).unwrap()]
        );
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(FamilySlice::new(Family::Oddp, 3)).count(), 12);
        assert_eq!(
            count(&FamilySlice::new(Family::DdpStar, 7).with_height(2)),
            22
        );
        assert_eq!(count(&FamilySlice::new(Family::Ddp, 6).with_height(2)), 48);
        for f in Family::ALL {
            assert_eq!(count(&FamilySlice::new(f, 0)), 1);
            assert_eq!(
                enumerate(FamilySlice::new(f, 0)).collect::<Vec<_>>(),
                vec![PartialInjection::empty(0)]
            );
        }
    }

    #[test]
    fn naive_examples() {
        assert_eq!(
            naive_enumerate(FamilySlice::new(Family::Oddp, 3), 8)
                .unwrap()
                .count(),
            12
        );
        assert_eq!(
            naive_enumerate(FamilySlice::new(Family::Dp, 1), 8)
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            set(naive_enumerate(FamilySlice::new(Family::Ddp, 2), 8).unwrap()),
            set(enumerate(FamilySlice::new(Family::Ddp, 2)))
        );
        assert!(matches!(
            naive_enumerate(FamilySlice::new(Family::Dp, 9), 8).map(|_| ()),
            Err(Error::BoundExceeded { n: 9, bound: 8, .. })
        ));
    }

    #[test]
    fn all_partial_injections_counts() {
        // sum_k C(n,k)^2 k!
        let want = [1, 2, 7, 34, 209, 1546];
        for (n, w) in want.into_iter().enumerate() {
            assert_eq!(all_partial_injections(n as u32, 8).unwrap().count(), w);
        }
    }

    #[test]
    fn fast_matches_naive_up_to_six() {
        for f in Family::ALL {
            for n in 0..=6 {
                let fast: Vec<_> = enumerate(FamilySlice::new(f, n)).collect();
                let fast_set: BTreeSet<_> = fast.iter().cloned().collect();
                assert_eq!(fast.len(), fast_set.len(), "{f} n={n} duplicates");
                let naive = set(naive_enumerate(FamilySlice::new(f, n), 8).unwrap());
                assert_eq!(fast_set, naive, "{f} n={n}");
            }
        }
    }

    #[test]
    fn count_matches_enumeration_and_partitioning() {
        for f in Family::ALL {
            for n in 0..=9 {
                let slice = FamilySlice::new(f, n);
                let total = count(&slice);
                assert_eq!(total, enumerate(slice).count() as u64);
                let full = slice.mask_range();
                let mid = full.end / 3;
                assert_eq!(
                    count_masks(&slice, 0..mid) + count_masks(&slice, mid..full.end),
                    total
                );
                assert_eq!(height_profile(f, n).iter().sum::<u64>(), total);
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("DDPstar".parse::<Family>().unwrap(), Family::DdpStar);
        assert!("in".parse::<Family>().is_err());
    }
}
