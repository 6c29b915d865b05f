//! Gap vectors and the starred Green's relations.
//!
//! `L*` and `R*` reduce to equality of images and of domains. `D*` is
//! decided from gap vectors alone, without forming products: two maps of
//! equal height are related iff their gap vectors agree or, among the
//! order-decreasing maps, one gap vector is the reverse of the other and the
//! span is at most `(n - 1) / 2`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::ptransform::PartialInjection;

/// Absolute differences of consecutive images, in domain order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct GapVector(pub Vec<u32>);

impl GapVector {
    pub fn of(alpha: &PartialInjection) -> Self {
        GapVector(
            alpha
                .image()
                .windows(2)
                .map(|w| w[0].abs_diff(w[1]))
                .collect(),
        )
    }

    pub fn reversed(&self) -> Self {
        GapVector(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn gap_vector(alpha: &PartialInjection) -> GapVector {
    GapVector::of(alpha)
}

pub fn reverse_gap(alpha: &PartialInjection) -> GapVector {
    GapVector::of(alpha).reversed()
}

/// `max(Dom) - min(Dom)`.
pub fn span(alpha: &PartialInjection) -> Result<u32> {
    match (alpha.domain().first(), alpha.domain().last()) {
        (Some(lo), Some(hi)) => Ok(hi - lo),
        _ => Err(Error::EmptyMap),
    }
}

/// Largest span at which a gap vector and its reverse share a D*-class
/// among the order-decreasing maps.
pub fn max_merging_span(n: u32) -> u32 {
    n.saturating_sub(1) / 2
}

fn same_chain(alpha: &PartialInjection, beta: &PartialInjection) -> Result<()> {
    if alpha.n() == beta.n() {
        Ok(())
    } else {
        Err(Error::ChainMismatch {
            left: alpha.n(),
            right: beta.n(),
        })
    }
}

/// `Im alpha = Im beta`.
pub fn lstar_related(alpha: &PartialInjection, beta: &PartialInjection) -> Result<bool> {
    same_chain(alpha, beta)?;
    Ok(alpha.image_mask() == beta.image_mask())
}

/// `Dom alpha = Dom beta`.
pub fn rstar_related(alpha: &PartialInjection, beta: &PartialInjection) -> Result<bool> {
    same_chain(alpha, beta)?;
    Ok(alpha.domain_mask() == beta.domain_mask())
}

/// D*-relation within `family`, decided from gap vectors.
///
/// See [`dstar_key`] for the per-family rule. Maps of different heights are
/// never related.
pub fn dstar_related(
    family: Family,
    alpha: &PartialInjection,
    beta: &PartialInjection,
) -> Result<bool> {
    same_chain(alpha, beta)?;
    Ok(dstar_key(family, alpha) == dstar_key(family, beta))
}

/// The same predicate with the span window read literally as
/// `p <= span <= (n - 1) / 2` for height `p`. Kept to show that the lower
/// bound never changes the relation: a span of `p - 1` forces the all-ones
/// gap vector, which is its own reverse.
pub fn dstar_related_literal(
    n: u32,
    alpha: &PartialInjection,
    beta: &PartialInjection,
) -> Result<bool> {
    same_chain(alpha, beta)?;
    if alpha.height() != beta.height() {
        return Ok(false);
    }
    let (ga, gb) = (gap_vector(alpha), gap_vector(beta));
    if ga == gb {
        return Ok(true);
    }
    let p = alpha.height();
    let s = ga.total();
    Ok(ga == gb.reversed() && p <= s && s <= max_merging_span(n))
}

/// Class key for the gap-vector characterisation of D*.
///
/// * [`Family::Odp`], [`Family::Oddp`], [`Family::DdpStar`]: the image gap vector.
/// * [`Family::Ddp`]: a gap vector and its reverse are identified when the
///   span is at most [`max_merging_span`].
/// * [`Family::Dp`]: a gap vector and its reverse are always identified.
///
/// Height is part of the key so that the empty map and the height-one maps
/// (both with the empty gap vector) stay apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DStarKey {
    pub height: u32,
    pub gap: GapVector,
}

pub fn dstar_key(family: Family, alpha: &PartialInjection) -> DStarKey {
    let gap = gap_vector(alpha);
    let merges = match family {
        Family::Ddp => gap.total() <= max_merging_span(alpha.n()),
        Family::Dp => true,
        Family::Odp | Family::Oddp | Family::DdpStar => false,
    };
    let gap = if merges {
        let rev = gap.reversed();
        gap.min(rev)
    } else {
        gap
    };
    DStarKey {
        height: alpha.height(),
        gap,
    }
}
