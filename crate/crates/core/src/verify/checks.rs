use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use super::golden;
use super::partition::{dstar_partition, gap_partition};
use super::{CheckReport, Tally, VerifyConfig};
use crate::error::Result;
use crate::families::{
    count, enumerate, fix_profile, height_profile, naive_enumerate, Family, FamilySlice,
};
use crate::formulas::{self as fm, Statistic};
use crate::green::{dstar_related_literal, gap_vector, span};
use crate::ptransform::{MapFlags, PartialInjection};
use crate::scalar::binomial;
use crate::ExactInt;

type Formula<'a> = dyn Fn(u32, u32) -> Result<ExactInt> + Sync + 'a;

const TRIANGLE_FAMILIES: [Family; 4] = [Family::Odp, Family::Oddp, Family::Ddp, Family::DdpStar];

fn elements(family: Family, n: u32) -> Vec<PartialInjection> {
    enumerate(FamilySlice::new(family, n)).collect()
}

// ---------------------------------------------------------------------------
// Triangles and orders
// ---------------------------------------------------------------------------

/// Height buckets from enumeration against `formula`, rows `0..=n_max`.
pub fn check_height_table_with(
    name: &str,
    family: Family,
    n_max: u32,
    formula: &Formula<'_>,
) -> CheckReport {
    let mut t = Tally::new(name, Some(family), 0, n_max);
    for n in 0..=n_max {
        for (p, actual) in height_profile(family, n).into_iter().enumerate() {
            t.eq_formula(
                &[("n", n as u64), ("p", p as u64)],
                formula(n, p as u32),
                actual,
            );
        }
    }
    t.finish()
}

/// Fix buckets from enumeration against `formula`, rows `0..=n_max`.
pub fn check_fix_table_with(
    name: &str,
    family: Family,
    n_max: u32,
    formula: &Formula<'_>,
) -> CheckReport {
    let mut t = Tally::new(name, Some(family), 0, n_max);
    for n in 0..=n_max {
        for (m, actual) in fix_profile(family, n).into_iter().enumerate() {
            t.eq_formula(
                &[("n", n as u64), ("m", m as u64)],
                formula(n, m as u32),
                actual,
            );
        }
    }
    t.finish()
}

/// Fixture rows against both the formulas and enumeration.
pub fn check_golden_table(family: Family, n_max: u32) -> Option<CheckReport> {
    let rows = golden::height_rows(family)?;
    let hi = n_max.min(rows.last().map_or(0, |r| r.n));
    let mut t = Tally::new("golden-height-table", Some(family), 0, hi);
    for row in rows.iter().filter(|r| r.n <= hi) {
        let n = row.n;
        let counted = height_profile(family, n);
        for (p, &fixture) in row.entries.iter().enumerate() {
            let params = [("n", n as u64), ("p", p as u64)];
            t.eq_formula(
                &params,
                fm::entry(family, Statistic::Height, n, p as u32),
                fixture,
            );
            t.eq(&params, fixture, counted[p]);
        }
        let params = [("n", n as u64)];
        t.eq_formula(&params, fm::order(family, n), row.sum);
        t.eq(&params, row.sum, counted.iter().sum::<u64>());
    }
    t.detail("fixture = formula = enumeration");
    Some(t.finish())
}

pub fn check_height_tables(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.enumeration_bound);
    let mut out: Vec<CheckReport> = TRIANGLE_FAMILIES
        .iter()
        .map(|&f| {
            check_height_table_with("height-table", f, hi, &|n, p| {
                fm::entry(f, Statistic::Height, n, p)
            })
        })
        .collect();
    out.extend(
        [Family::DdpStar, Family::Ddp]
            .into_iter()
            .filter_map(|f| check_golden_table(f, n_max)),
    );
    out
}

pub fn check_fix_tables(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.enumeration_bound);
    [Family::Oddp, Family::Ddp]
        .into_iter()
        .map(|f| {
            check_fix_table_with("fix-table", f, hi, &|n, m| {
                fm::entry(f, Statistic::Fix, n, m)
            })
        })
        .collect()
}

pub fn check_orders(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.enumeration_bound);
    TRIANGLE_FAMILIES
        .into_iter()
        .map(|f| {
            let mut t = Tally::new("order", Some(f), 0, hi);
            for n in 0..=hi {
                t.eq_formula(
                    &[("n", n as u64)],
                    fm::order(f, n),
                    count(&FamilySlice::new(f, n)),
                );
            }
            t.finish()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Formula-only identities
// ---------------------------------------------------------------------------

fn big(v: u64) -> ExactInt {
    ExactInt::from(v)
}

/// Compositions of `n` as part lists, one per subset of the `n - 1` cut points.
fn brute_compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..1u64 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut len = 1;
            for i in 0..n - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            parts
        })
        .collect()
}

pub fn check_formula_identities(cfg: &VerifyConfig) -> Vec<CheckReport> {
    let top = cfg.formula_bound;
    let mut out = Vec::new();

    let mut t = Tally::new("pascal-recurrence", Some(Family::Oddp), 2, top);
    for n in 2..=top {
        for p in 2..=n {
            let params = [("n", n as u64), ("p", p as u64)];
            let lhs = fm::f_oddp_height::<ExactInt>(n, p);
            let rhs = fm::f_oddp_height::<ExactInt>(n - 1, p - 1).and_then(|a| {
                let b = if p < n {
                    fm::f_oddp_height::<ExactInt>(n - 1, p)?
                } else {
                    ExactInt::zero()
                };
                Ok(a + b)
            });
            match rhs {
                Ok(r) => {
                    t.eq_formula(&params, lhs, r);
                }
                Err(e) => t.error(&params, &e),
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("skip-recurrence", Some(Family::DdpStar), 2, top);
    for n in 2..=top {
        for p in 2..=n {
            let params = [("n", n as u64), ("p", p as u64)];
            let rhs = fm::f_ddpstar_height::<ExactInt>(n - 2, p - 1)
                .and_then(|a| Ok(a + fm::f_ddpstar_height::<ExactInt>(n - 2, p)?));
            match rhs {
                Ok(r) => {
                    t.eq_formula(&params, fm::f_ddpstar_height(n, p), r);
                }
                Err(e) => t.error(&params, &e),
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("row-sums", None, 0, top);
    for n in 0..=top {
        let sums = [
            (Family::Oddp, Statistic::Height),
            (Family::Oddp, Statistic::Fix),
            (Family::Ddp, Statistic::Height),
            (Family::Ddp, Statistic::Fix),
            (Family::DdpStar, Statistic::Height),
        ];
        for (code, (f, s)) in sums.into_iter().enumerate() {
            let params = [("n", n as u64), ("table", code as u64)];
            let row: Result<Vec<ExactInt>> = (0..=n).map(|k| fm::entry(f, s, n, k)).collect();
            match (row, fm::order::<ExactInt>(f, n)) {
                (Ok(row), Ok(order)) => {
                    let negative = row.iter().position(|v| v.is_negative());
                    t.holds(&params, negative.is_none(), || {
                        format!("{f} {s} entry {negative:?} is negative")
                    });
                    t.eq(&params, order, row.into_iter().sum::<ExactInt>());
                }
                (Err(e), _) | (_, Err(e)) => t.error(&params, &e),
            }
        }
    }
    t.detail("tables 0..4: oddp height, oddp fix, ddp height, ddp fix, ddp-star height");
    out.push(t.finish());

    let mut t = Tally::new("hockey-stick", None, 0, 60);
    for n in 0..=60u64 {
        for p in 0..=n {
            let lhs: Result<ExactInt> = (p..=n).map(|m| binomial::<ExactInt>(m, p)).sum();
            let params = [("n", n), ("p", p)];
            match lhs {
                Ok(l) => {
                    t.eq_formula(&params, binomial(n + 1, p + 1), l);
                }
                Err(e) => t.error(&params, &e),
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("boundary-heights", Some(Family::DdpStar), 1, 15);
    for p in 1..=15 {
        t.eq_formula(
            &[("n", 2 * p as u64 + 1), ("p", p as u64 + 1)],
            fm::f_ddpstar_height(2 * p + 1, p + 1),
            1u64,
        );
        t.eq_formula(
            &[("n", 2 * p as u64), ("p", p as u64)],
            fm::f_ddpstar_height(2 * p, p),
            3u64,
        );
    }
    out.push(t.finish());

    let mut t = Tally::new("height-two-gauss-sum", Some(Family::DdpStar), 2, top);
    for n in 2..=top {
        let params = [("n", n as u64)];
        match fm::gauss_sum_identity::<ExactInt>(n) {
            Ok(g) => {
                t.eq_formula(&params, fm::f_ddpstar_height(n, 2), g);
            }
            Err(e) => t.error(&params, &e),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("ddp-order-recurrence", Some(Family::Ddp), 0, top);
    for n in 0..=top {
        let params = [("n", n as u64)];
        match fm::order_ddp_recurrence::<ExactInt>(n) {
            Ok(r) => {
                t.eq_formula(&params, fm::order_ddp(n), r);
            }
            Err(e) => t.error(&params, &e),
        }
    }
    let literal_a1 = fm::ddp_recurrence_step::<ExactInt>(1, &big(1), &big(0));
    t.detail(format!(
        "seeds a0 = 1, a1 = 2; seeds a(-1) = 0, a0 = 1 would give a1 = {}",
        literal_a1.map_or_else(|e| e.to_string(), |v| v.to_string())
    ));
    out.push(t.finish());

    let mut t = Tally::new("merged-classes-closed-form", Some(Family::Ddp), 1, top);
    for n in 1..=top {
        for p in 1..=n {
            let params = [("n", n as u64), ("p", p as u64)];
            match fm::merged_b_summation::<ExactInt>(n, p) {
                Ok(s) => {
                    t.eq_formula(&params, fm::merged_b_closed_form(n, p), s);
                }
                Err(e) => t.error(&params, &e),
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("dstar-total-closed-form", Some(Family::Ddp), 1, top);
    for n in 1..=top {
        let params = [("n", n as u64)];
        match fm::dstar_total_ddp::<ExactInt>(n) {
            Ok(s) => {
                t.eq_formula(&params, fm::dstar_total_ddp_closed_form(n), s);
            }
            Err(e) => t.error(&params, &e),
        }
    }
    t.detail(format!(
        "closed form vs per-height summation; first-case coefficient {}",
        fm::DSTAR_TOTAL_FIRST_CASE_COEFFICIENT
    ));
    out.push(t.finish());

    let cap = 16;
    let mut t = Tally::new("compositions-brute-force", None, 1, cap);
    for n in 1..=cap {
        let all = brute_compositions(n);
        for p in 1..=n {
            let params = [("n", n as u64), ("p", p as u64)];
            let of_len: Vec<&Vec<u32>> = all.iter().filter(|c| c.len() == p as usize).collect();
            let palins = of_len
                .iter()
                .filter(|c| c.iter().eq(c.iter().rev()))
                .count();
            t.eq_formula(&params, fm::compositions(n, p), of_len.len() as u64);
            t.eq_formula(&params, fm::symmetric_compositions(n, p), palins as u64);
            // Gap tuples of p parts summing to n are gap vectors of height p + 1.
            let pairs: BTreeSet<Vec<u32>> = of_len
                .iter()
                .filter(|c| !c.iter().eq(c.iter().rev()))
                .map(|c| {
                    let r: Vec<u32> = c.iter().rev().copied().collect();
                    (*c).clone().min(r)
                })
                .collect();
            if n > p {
                t.eq_formula(
                    &[("m", n as u64), ("p", p as u64 + 1)],
                    fm::merged_g(n, p + 1),
                    pairs.len() as u64,
                );
            }
        }
    }
    out.push(t.finish());

    out
}

// ---------------------------------------------------------------------------
// Class counts
// ---------------------------------------------------------------------------

pub fn check_class_counts(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.partition_bound);
    let mut out = Vec::new();

    let mut t = Tally::new("odp-dclasses", Some(Family::Odp), 0, hi);
    for n in 0..=hi {
        let mut gaps: Vec<BTreeSet<_>> = vec![BTreeSet::new(); n as usize + 1];
        for m in enumerate(FamilySlice::new(Family::Odp, n)) {
            gaps[m.height() as usize].insert(gap_vector(&m));
        }
        for p in 1..=n {
            t.eq_formula(
                &[("n", n as u64), ("p", p as u64)],
                fm::dclass_count_odp(n, p),
                gaps[p as usize].len() as u64,
            );
        }
        let total: usize = gaps.iter().map(BTreeSet::len).sum();
        t.eq_formula(&[("n", n as u64)], fm::dclass_total_odp(n), total as u64);
    }
    t.detail("distinct gap vectors per height");
    out.push(t.finish());

    let mut total_partition = HashMap::new();
    for (family, per_height) in [
        (
            Family::Oddp,
            fm::dstar_count_oddp::<ExactInt> as fn(u32, u32) -> Result<ExactInt>,
        ),
        (Family::Ddp, fm::dstar_count_ddp::<ExactInt>),
    ] {
        let mut t = Tally::new("dstar-classes", Some(family), 0, hi);
        let mut keyed = Tally::new("dstar-gap-characterisation", Some(family), 0, hi);
        for n in 0..=hi {
            let part = match dstar_partition(family, n, cfg.partition_bound) {
                Ok(p) => p,
                Err(e) => {
                    t.error(&[("n", n as u64)], &e);
                    continue;
                }
            };
            for p in 1..=n {
                t.eq_formula(
                    &[("n", n as u64), ("p", p as u64)],
                    per_height(n, p),
                    part.per_height[p as usize],
                );
            }
            let total = match family {
                Family::Oddp => fm::dstar_total_oddp::<ExactInt>(n),
                _ => fm::dstar_total_ddp::<ExactInt>(n),
            };
            t.eq_formula(&[("n", n as u64)], total, part.class_count() as u64);
            t.holds(&[("n", n as u64)], part.is_height_homogeneous(), || {
                "class mixes heights".into()
            });
            keyed.holds(
                &[("n", n as u64)],
                gap_partition(family, n).canonical() == part.canonical(),
                || "gap-vector classes differ from union-find classes".into(),
            );
            if family == Family::Ddp {
                total_partition.insert(n, part.class_count());
            }
        }
        t.detail("union-find join of equal-domain and equal-image links");
        out.push(t.finish());
        out.push(keyed.finish());
    }

    let mut t = Tally::new(
        "dstar-total-closed-form-vs-partition",
        Some(Family::Ddp),
        1,
        hi,
    );
    for n in 1..=hi {
        if let Some(&total) = total_partition.get(&n) {
            t.eq_formula(
                &[("n", n as u64)],
                fm::dstar_total_ddp_closed_form(n),
                total as u64,
            );
        }
    }
    t.detail(format!(
        "resolved first-case coefficient (n = 3, 0 mod 4) = {}",
        fm::DSTAR_TOTAL_FIRST_CASE_COEFFICIENT
    ));
    out.push(t.finish());

    let mut t = Tally::new("lr-class-count", Some(Family::Dp), 0, hi);
    for n in 0..=hi {
        let mut doms: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); n as usize + 1];
        let mut imgs = doms.clone();
        for m in enumerate(FamilySlice::new(Family::Dp, n)) {
            doms[m.height() as usize].insert(m.domain_mask());
            imgs[m.height() as usize].insert(m.image_mask());
        }
        for p in 0..=n {
            let params = [("n", n as u64), ("p", p as u64)];
            t.eq_formula(
                &params,
                fm::lr_class_count_dp(n, p),
                doms[p as usize].len() as u64,
            );
            t.eq_formula(
                &params,
                fm::lr_class_count_dp(n, p),
                imgs[p as usize].len() as u64,
            );
        }
    }
    out.push(t.finish());

    out
}

// ---------------------------------------------------------------------------
// Closure and structure
// ---------------------------------------------------------------------------

pub fn check_closure(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.closure_bound);
    [Family::Ddp, Family::Oddp]
        .into_iter()
        .map(|f| {
            let mut t = Tally::new("closure", Some(f), 0, hi);
            for n in 0..=hi {
                let els = elements(f, n);
                let ok = els.iter().enumerate().all(|(i, a)| {
                    els.iter().enumerate().all(|(j, b)| {
                        let ab = a.compose(b).expect("same chain");
                        t.holds(
                            &[("n", n as u64), ("left", i as u64), ("right", j as u64)],
                            f.contains(&ab),
                            || format!("{a} * {b} = {ab} leaves {f}"),
                        )
                    })
                });
                if !ok {
                    break;
                }
            }
            t.finish()
        })
        .collect()
}

fn check_fast_vs_naive(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.naive_bound);
    Family::ALL
        .into_iter()
        .map(|f| {
            let mut t = Tally::new("fast-vs-naive-enumeration", Some(f), 0, hi);
            for n in 0..=hi {
                let fast = elements(f, n);
                let fast_set: BTreeSet<_> = fast.iter().cloned().collect();
                t.eq(&[("n", n as u64)], fast_set.len() as u64, fast.len() as u64);
                match naive_enumerate(FamilySlice::new(f, n), cfg.naive_bound) {
                    Ok(it) => {
                        let naive: BTreeSet<_> = it.collect();
                        t.holds(&[("n", n as u64)], naive == fast_set, || {
                            format!("naive {} vs fast {}", naive.len(), fast_set.len())
                        });
                    }
                    Err(e) => t.error(&[("n", n as u64)], &e),
                }
            }
            t.finish()
        })
        .collect()
}

fn check_decreasing_restriction(n_max: u32, cfg: &VerifyConfig) -> CheckReport {
    let hi = n_max.min(cfg.structure_bound);
    let mut t = Tally::new("decreasing-restriction", None, 0, hi);
    for n in 0..=hi {
        for (whole, part) in [(Family::Dp, Family::Ddp), (Family::Odp, Family::Oddp)] {
            let filtered: BTreeSet<_> = enumerate(FamilySlice::new(whole, n))
                .filter(|m| m.classify().contains(MapFlags::ORDER_DECREASING))
                .collect();
            let direct: BTreeSet<_> = elements(part, n).into_iter().collect();
            t.holds(&[("n", n as u64)], filtered == direct, || {
                format!("{whole} restricted to decreasing maps differs from {part}")
            });
        }
    }
    t.finish()
}

fn check_isometry_structure(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.structure_bound);
    let mut shape = Tally::new(
        "isometry-is-translation-or-reflection",
        Some(Family::Dp),
        0,
        hi,
    );
    let mut many_fixed = Tally::new("two-fixed-points-force-identity", Some(Family::Dp), 0, hi);
    let mut preserving_fixed = Tally::new(
        "preserving-with-fixed-point-is-identity",
        Some(Family::Dp),
        0,
        hi,
    );
    let mut preserving_shape =
        Tally::new("preserving-is-strict-or-identity", Some(Family::Dp), 0, hi);
    let mut one_fixed = Tally::new("single-fixed-point-is-centre", Some(Family::Dp), 0, hi);
    let mut idempotent = Tally::new("idempotent-iff-partial-identity", Some(Family::Dp), 0, hi);
    let mut spans = Tally::new("span-equals-gap-sum", Some(Family::Dp), 0, hi);
    for n in 0..=hi {
        for m in enumerate(FamilySlice::new(Family::Dp, n)) {
            let params = [("n", n as u64), ("height", m.height() as u64)];
            let flags = m.classify();
            let fixed: Vec<u32> = m.fixed_points().collect();
            let identity = flags.contains(MapFlags::PARTIAL_IDENTITY);
            shape.holds(
                &params,
                flags.intersects(MapFlags::ORDER_PRESERVING | MapFlags::ORDER_REVERSING),
                || m.to_string(),
            );
            many_fixed.holds(&params, fixed.len() <= 1 || identity, || m.to_string());
            if flags.contains(MapFlags::ORDER_PRESERVING) {
                preserving_fixed.holds(&params, fixed.is_empty() || identity, || m.to_string());
                let below = m.pairs().all(|(x, y)| y < x);
                let above = m.pairs().all(|(x, y)| y > x);
                preserving_shape.holds(&params, below || above || identity, || m.to_string());
            }
            if let [i] = fixed[..] {
                one_fixed.holds(&params, m.pairs().all(|(x, y)| x + y == 2 * i), || {
                    m.to_string()
                });
            }
            idempotent.holds(
                &params,
                flags.contains(MapFlags::IDEMPOTENT) == identity,
                || m.to_string(),
            );
            if let Ok(s) = span(&m) {
                spans.eq(&params, gap_vector(&m).total() as u64, s as u64);
            }
        }
    }
    vec![
        shape.finish(),
        many_fixed.finish(),
        preserving_fixed.finish(),
        preserving_shape.finish(),
        one_fixed.finish(),
        idempotent.finish(),
        spans.finish(),
    ]
}

fn check_decreasing_structure(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.structure_bound);
    let mut below = Tally::new(
        "decreasing-fixes-everything-below-a-fixed-point",
        Some(Family::Ddp),
        0,
        hi,
    );
    let mut above = Tally::new(
        "decreasing-single-fixed-point-bounds-domain",
        Some(Family::Ddp),
        0,
        hi,
    );
    let mut symmetric = Tally::new("single-fixed-point-symmetry", Some(Family::Ddp), 0, hi);
    for n in 0..=hi {
        let mut by_point = vec![0u64; n as usize + 2];
        for m in enumerate(FamilySlice::new(Family::Ddp, n)) {
            let params = [("n", n as u64), ("height", m.height() as u64)];
            let fixed: Vec<u32> = m.fixed_points().collect();
            for &i in &fixed {
                below.holds(&params, m.pairs().all(|(x, y)| x >= i || x == y), || {
                    m.to_string()
                });
            }
            if let [i] = fixed[..] {
                above.holds(&params, m.domain().iter().all(|&x| x >= i), || {
                    m.to_string()
                });
                by_point[i as usize] += 1;
            }
        }
        for i in 1..=n {
            symmetric.eq(
                &[("n", n as u64), ("i", i as u64)],
                by_point[i as usize],
                by_point[(n + 1 - i) as usize],
            );
        }
    }
    vec![below.finish(), above.finish(), symmetric.finish()]
}

fn check_reversing_structure(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let hi = n_max.min(cfg.structure_bound);
    let mut gap_below = Tally::new(
        "left-shoulder-exceeds-top-gap",
        Some(Family::DdpStar),
        0,
        hi,
    );
    let mut bound = Tally::new("reversing-height-bound", Some(Family::DdpStar), 0, hi);
    for n in 0..=hi {
        for m in enumerate(FamilySlice::new(Family::DdpStar, n)) {
            if let [.., second, top] = m.domain()[..] {
                let r = top - second;
                gap_below.holds(
                    &[("n", n as u64), ("r", r as u64)],
                    m.domain()[0] > r,
                    || m.to_string(),
                );
            }
        }
        for p in 2..=n {
            let exists = count(&FamilySlice::new(Family::DdpStar, n).with_height(p)) > 0;
            bound.holds(
                &[("n", n as u64), ("p", p as u64)],
                exists == (p <= fm::max_reversing_height(n)),
                || format!("exists = {exists}"),
            );
        }
    }
    bound.detail("order-reversing decreasing maps of height p >= 2 exist iff p <= (n + 1) / 2");
    vec![gap_below.finish(), bound.finish()]
}

/// Pairwise: the literal gap-vector predicate against union-find classes.
fn check_pairwise_characterisation(n_max: u32, cfg: &VerifyConfig) -> CheckReport {
    let hi = n_max.min(cfg.partition_bound).min(cfg.structure_bound);
    let mut t = Tally::new(
        "dstar-literal-predicate-vs-partition",
        Some(Family::Ddp),
        0,
        hi,
    );
    for n in 0..=hi {
        let part = match dstar_partition(Family::Ddp, n, cfg.partition_bound) {
            Ok(p) => p,
            Err(e) => {
                t.error(&[("n", n as u64)], &e);
                continue;
            }
        };
        let mut class_of = vec![0usize; part.elements.len()];
        for (k, c) in part.classes.iter().enumerate() {
            for &i in c {
                class_of[i] = k;
            }
        }
        let els = &part.elements;
        'scan: for i in 0..els.len() {
            for j in i..els.len() {
                let related = dstar_related_literal(n, &els[i], &els[j]).expect("same chain");
                let ok = t.holds(
                    &[("n", n as u64), ("left", i as u64), ("right", j as u64)],
                    related == (class_of[i] == class_of[j]),
                    || format!("{} vs {}: predicate {related}", els[i], els[j]),
                );
                if !ok {
                    break 'scan;
                }
            }
        }
    }
    t.detail("lower span bound p <= span never excludes a reversed pair");
    t.finish()
}

pub fn check_structure(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let mut out = check_fast_vs_naive(n_max, cfg);
    out.push(check_decreasing_restriction(n_max, cfg));
    out.extend(check_isometry_structure(n_max, cfg));
    out.extend(check_decreasing_structure(n_max, cfg));
    out.extend(check_reversing_structure(n_max, cfg));
    out.push(check_pairwise_characterisation(n_max, cfg));
    out
}
