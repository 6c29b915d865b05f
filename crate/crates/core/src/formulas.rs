//! Closed forms and recurrences for the height and fix triangles, the
//! family orders, and the starred Green's class counts.
//!
//! Every function is generic over [`ExactScalar`]; divisions are exact and
//! fail loudly on a remainder. Where a count has both a defining summation
//! and a closed form, both are evaluated and a disagreement is an
//! [`Error::Mismatch`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::scalar::{
    add, binomial, binomial_signed, exact_div, lift, mul, mul_u64, pow2, sub, sum, ExactScalar,
};
use crate::{ExactInt, ExactRational};

/// Coefficient of the last power of two in the class-count closed form for
/// `n = 3, 0 (mod 4)`. Confirmed against union-find totals.
pub const DSTAR_TOTAL_FIRST_CASE_COEFFICIENT: u32 = 1;

fn out_of_range<T>(what: &'static str, detail: String) -> Result<T> {
    Err(Error::OutOfRange { what, detail })
}

fn ensure_le(what: &'static str, lo: u32, hi: u32, lo_name: &str, hi_name: &str) -> Result<()> {
    if lo > hi {
        out_of_range(what, format!("{lo_name} = {lo} exceeds {hi_name} = {hi}"))
    } else {
        Ok(())
    }
}

fn c<T: ExactScalar>(n: u32, k: u32) -> Result<T> {
    binomial(n as u64, k as u64)
}

// ---------------------------------------------------------------------------
// Height and fix triangles
// ---------------------------------------------------------------------------

/// Order-preserving partial isometries of height `p`:
/// `(2n - p + 1) C(n, p) / (p + 1)`, and `1` at `p = 0`.
pub fn f_odp_height<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    const W: &str = "f_odp_height";
    ensure_le(W, p, n, "p", "n")?;
    if p == 0 {
        return Ok(T::one());
    }
    let num = mul_u64(&c::<T>(n, p)?, (2 * n - p + 1) as u64, W)?;
    exact_div(&num, &lift(p as u64 + 1, W)?, W)
}

/// Order-preserving order-decreasing maps of height `p`: `C(n+1, p+1)`, `1` at `p = 0`.
pub fn f_oddp_height<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    ensure_le("f_oddp_height", p, n, "p", "n")?;
    if p == 0 {
        Ok(T::one())
    } else {
        c(n + 1, p + 1)
    }
}

/// `|ODDP_n| = 2^(n+1) - (n + 1)`.
pub fn order_oddp<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "order_oddp";
    sub(&pow2::<T>(n + 1)?, &lift(n as u64 + 1, W)?, W)
}

/// Order-preserving order-decreasing maps with exactly `m` fixed points.
///
/// `C(n, m)` for `m >= 1`; the fix-free maps number `|ODDP_(n-1)|`.
pub fn f_oddp_fix<T: ExactScalar>(n: u32, m: u32) -> Result<T> {
    ensure_le("f_oddp_fix", m, n, "m", "n")?;
    match (n, m) {
        (0, 0) => Ok(T::one()),
        (_, 0) => order_oddp(n - 1),
        _ => c(n, m),
    }
}

/// Largest height at which an order-reversing order-decreasing map of
/// height at least two exists on a chain of `n` points.
pub fn max_reversing_height(n: u32) -> u32 {
    n.div_ceil(2)
}

/// Order-reversing order-decreasing maps (with the height-0 and height-1
/// layers included) of height `p`.
///
/// For `2 <= p <= (n+1)/2` the value is
/// `(n+1)(n-1)...(n-2p+3)(2n-3p+3) / (2^p (p+1)!)` for odd `n` and
/// `n(n-2)...(n-2p+2)(2n-p+3) / (2^p (p+1)!)` for even `n`; zero above.
pub fn f_ddpstar_height<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    const W: &str = "f_ddpstar_height";
    match p {
        0 => return Ok(T::one()),
        1 => return c(n + 1, 2),
        _ if p > max_reversing_height(n) => return Ok(T::zero()),
        _ => {}
    }
    let (n64, p64) = (n as i64, p as i64);
    // p falling factors of step 2, then the linear tail.
    let (top, tail) = if n % 2 == 1 {
        (n64 + 1, 2 * n64 - 3 * p64 + 3)
    } else {
        (n64, 2 * n64 - p64 + 3)
    };
    let mut num = T::one();
    for i in 0..p64 {
        let factor = top - 2 * i;
        debug_assert!(factor > 0);
        num = mul_u64(&num, factor as u64, W)?;
    }
    num = mul_u64(&num, tail as u64, W)?;
    let mut den = pow2::<T>(p)?;
    for k in 2..=p as u64 + 1 {
        den = mul_u64(&den, k, W)?;
    }
    exact_div(&num, &den, W)
}

/// `sum_(i >= 0) C(n-1-2i, 2)` by direct summation, checked against the
/// odd/even cubic closed form.
pub fn gauss_sum_identity<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "gauss_sum_identity";
    if n == 0 {
        return out_of_range(W, "n must be at least 1".into());
    }
    let terms = (0..)
        .map(|i| n as i64 - 1 - 2 * i)
        .take_while(|&top| top >= 0)
        .map(|top| binomial_signed::<T>(top, 2))
        .collect::<Result<Vec<_>>>()?;
    let summed = sum(&terms, W)?;
    let closed = gauss_sum_closed_form::<T>(n)?;
    if closed != summed {
        return Err(Error::Mismatch {
            what: W,
            closed: closed.to_string(),
            summed: summed.to_string(),
        });
    }
    Ok(summed)
}

/// `(n+1)(n-1)(2n-3)/24` for odd `n`, `n(n-2)(2n+1)/24` for even `n`.
pub fn gauss_sum_closed_form<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "gauss_sum_closed_form";
    let n = n as i64;
    let factors = if n % 2 == 1 {
        [n + 1, n - 1, 2 * n - 3]
    } else {
        [n, n - 2, 2 * n + 1]
    };
    if factors.iter().any(|&f| f <= 0) {
        return Ok(T::zero());
    }
    let num = factors
        .iter()
        .try_fold(T::one(), |acc, &f| mul_u64(&acc, f as u64, W))?;
    exact_div(&num, &lift(24, W)?, W)
}

/// `|DDP*_n|` as a height sum, checked against the parity-split closed form.
pub fn order_ddpstar<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "order_ddpstar";
    let rows = (0..=n)
        .map(|p| f_ddpstar_height::<T>(n, p))
        .collect::<Result<Vec<_>>>()?;
    let summed = sum(&rows, W)?;
    let closed = order_ddpstar_closed_form::<T>(n)?;
    if closed != summed {
        return Err(Error::Mismatch {
            what: W,
            closed: closed.to_string(),
            summed: summed.to_string(),
        });
    }
    Ok(summed)
}

/// `b_(2k+1) = 5 * 2^(k+1) - 4k - 8`, `b_(2k) = 7 * 2^k - 4k - 6`.
pub fn order_ddpstar_closed_form<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "order_ddpstar_closed_form";
    let k = n / 2;
    let (lead, tail) = if n % 2 == 1 {
        (mul_u64(&pow2::<T>(k + 1)?, 5, W)?, 4 * k as u64 + 8)
    } else {
        (mul_u64(&pow2::<T>(k)?, 7, W)?, 4 * k as u64 + 6)
    };
    sub(&lead, &lift(tail, W)?, W)
}

/// Order-decreasing partial isometries of height `p`.
///
/// Heights 0 and 1 are shared with the order-preserving family; from
/// height 2 the order-preserving and order-reversing parts are disjoint.
pub fn f_ddp_height<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    const W: &str = "f_ddp_height";
    ensure_le(W, p, n, "p", "n")?;
    match p {
        0 => Ok(T::one()),
        1 => c(n + 1, 2),
        _ => add(&f_oddp_height::<T>(n, p)?, &f_ddpstar_height::<T>(n, p)?, W),
    }
}

/// `|DDP_n|` by the parity-split closed form, checked against the height sum.
pub fn order_ddp<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "order_ddp";
    let closed = order_ddp_closed_form::<T>(n)?;
    let rows = (0..=n)
        .map(|p| f_ddp_height::<T>(n, p))
        .collect::<Result<Vec<_>>>()?;
    let summed = sum(&rows, W)?;
    if closed != summed {
        return Err(Error::Mismatch {
            what: W,
            closed: closed.to_string(),
            summed: summed.to_string(),
        });
    }
    Ok(closed)
}

/// `|DDP_(2k+1)| = 2^(2k+2) + 5 * 2^(k+1) - (2k^2 + 9k + 12)` and
/// `|DDP_(2k)| = 2^(2k+1) + 7 * 2^k - (2k^2 + 7k + 8)`.
pub fn order_ddp_closed_form<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "order_ddp_closed_form";
    let k = n / 2;
    let k64 = k as u64;
    let (a, b, poly) = if n % 2 == 1 {
        (
            pow2::<T>(2 * k + 2)?,
            mul_u64(&pow2::<T>(k + 1)?, 5, W)?,
            2 * k64 * k64 + 9 * k64 + 12,
        )
    } else {
        (
            pow2::<T>(2 * k + 1)?,
            mul_u64(&pow2::<T>(k)?, 7, W)?,
            2 * k64 * k64 + 7 * k64 + 8,
        )
    };
    sub(&add(&a, &b, W)?, &lift(poly, W)?, W)
}

/// Order-decreasing partial isometries with exactly `m` fixed points.
///
/// `C(n, m)` for `m >= 2` (only partial identities fix two points);
/// `2^(k+1) - 2` for `n = 2k` and `3 * 2^(k-1) - 2` for `n = 2k - 1` at
/// `m = 1`; the fix-free count is the remainder of `|DDP_n|`.
pub fn f_ddp_fix<T: ExactScalar>(n: u32, m: u32) -> Result<T> {
    const W: &str = "f_ddp_fix";
    ensure_le(W, m, n, "m", "n")?;
    match m {
        0 => {
            let rest = (1..=n)
                .map(|m| f_ddp_fix::<T>(n, m))
                .collect::<Result<Vec<_>>>()?;
            sub(&order_ddp::<T>(n)?, &sum(&rest, W)?, W)
        }
        1 => ddp_single_fixed_point::<T>(n),
        _ => c(n, m),
    }
}

fn ddp_single_fixed_point<T: ExactScalar>(n: u32) -> Result<T> {
    const W: &str = "f_ddp_fix";
    let two = lift::<T>(2, W)?;
    if n.is_multiple_of(2) {
        sub(&pow2::<T>(n / 2 + 1)?, &two, W)
    } else {
        let k = n.div_ceil(2);
        sub(&mul_u64(&pow2::<T>(k - 1)?, 3, W)?, &two, W)
    }
}

/// One step of `a_n = 3 a_(n-1) - 2 a_(n-2) - 2^floor(n/2) + n + 1`.
pub fn ddp_recurrence_step<T: ExactScalar>(n: u32, prev: &T, prev2: &T) -> Result<T> {
    const W: &str = "ddp_recurrence";
    let grow = add(&mul_u64(prev, 3, W)?, &lift(n as u64 + 1, W)?, W)?;
    let shrink = add(&mul_u64(prev2, 2, W)?, &pow2::<T>(n / 2)?, W)?;
    sub(&grow, &shrink, W)
}

/// `|DDP_n|` from the second-order recurrence seeded with `a_0 = 1`, `a_1 = 2`.
pub fn order_ddp_recurrence<T: ExactScalar>(n: u32) -> Result<T> {
    let (mut prev2, mut prev) = (T::one(), lift::<T>(2, "ddp_recurrence")?);
    if n == 0 {
        return Ok(prev2);
    }
    for k in 2..=n {
        let next = ddp_recurrence_step(k, &prev, &prev2)?;
        prev2 = std::mem::replace(&mut prev, next);
    }
    Ok(prev)
}

// ---------------------------------------------------------------------------
// Compositions and class counts
// ---------------------------------------------------------------------------

/// Compositions of `n` into `p` positive parts: `C(n-1, p-1)`.
pub fn compositions<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    if n == 0 || p == 0 {
        return out_of_range("compositions", format!("need n, p >= 1 (n = {n}, p = {p})"));
    }
    c(n - 1, p - 1)
}

/// Palindromic compositions of `n` into `p` parts: zero for odd `n` with
/// even `p`, else `C(floor((n-1)/2), floor((p-1)/2))`.
pub fn symmetric_compositions<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    if n == 0 || p == 0 {
        return out_of_range(
            "symmetric_compositions",
            format!("need n, p >= 1 (n = {n}, p = {p})"),
        );
    }
    if n % 2 == 1 && p.is_multiple_of(2) {
        Ok(T::zero())
    } else {
        c((n - 1) / 2, (p - 1) / 2)
    }
}

/// Order-preserving D-classes at height `p`: `C(n-1, p-1)`.
pub fn dclass_count_odp<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    if n == 0 || p == 0 || p > n {
        return out_of_range(
            "dclass_count_odp",
            format!("need 1 <= p <= n (n = {n}, p = {p})"),
        );
    }
    c(n - 1, p - 1)
}

/// Order-preserving D-classes in total, the empty map included: `1 + 2^(n-1)`.
pub fn dclass_total_odp<T: ExactScalar>(n: u32) -> Result<T> {
    if n == 0 {
        return Ok(T::one());
    }
    add(&T::one(), &pow2::<T>(n - 1)?, "dclass_total_odp")
}

/// L-classes (equivalently R-classes) at height `p` among all partial
/// isometries: `C(n, p)`.
pub fn lr_class_count_dp<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    ensure_le("lr_class_count_dp", p, n, "p", "n")?;
    c(n, p)
}

/// D*-classes of the order-preserving order-decreasing maps at height `p`.
pub fn dstar_count_oddp<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    dclass_count_odp(n, p)
}

pub fn dstar_total_oddp<T: ExactScalar>(n: u32) -> Result<T> {
    dclass_total_odp(n)
}

/// Unordered pairs `{g, reverse(g)}` with `g` not a palindrome, among gap
/// tuples of `p - 1` parts summing to `m`.
pub fn merged_g<T: ExactScalar>(m: u32, p: u32) -> Result<T> {
    const W: &str = "merged_g";
    if p < 2 || m + 1 < p {
        return out_of_range(W, format!("need p >= 2 and m >= p - 1 (m = {m}, p = {p})"));
    }
    let all = compositions::<T>(m, p - 1)?;
    let palindromic = symmetric_compositions::<T>(m, p - 1)?;
    exact_div(&sub(&all, &palindromic, W)?, &lift(2, W)?, W)
}

/// Height-`p` D-classes of the order-preserving maps that merge pairwise
/// into one D*-class among the order-decreasing maps.
///
/// Defined as `sum_(m = p)^(floor((n-1)/2)) merged_g(m, p)`; the three-case
/// closed form is evaluated alongside and must agree.
pub fn merged_b<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    const W: &str = "merged_b";
    let summed = merged_b_summation::<T>(n, p)?;
    let closed = merged_b_closed_form::<T>(n, p)?;
    if closed != summed {
        return Err(Error::Mismatch {
            what: W,
            closed: closed.to_string(),
            summed: summed.to_string(),
        });
    }
    Ok(summed)
}

pub fn merged_b_summation<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    const W: &str = "merged_b";
    if p == 0 || p > n {
        return out_of_range(W, format!("need 1 <= p <= n (n = {n}, p = {p})"));
    }
    if p == 1 {
        return Ok(T::zero());
    }
    let terms = (p..=(n - 1) / 2)
        .map(|m| merged_g::<T>(m, p))
        .collect::<Result<Vec<_>>>()?;
    sum(&terms, W)
}

/// Closed form split on the parity of `p` and on `n mod 4`.
pub fn merged_b_closed_form<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    const W: &str = "merged_b_closed_form";
    if p == 0 || p > n {
        return out_of_range(W, format!("need 1 <= p <= n (n = {n}, p = {p})"));
    }
    let (n, p) = (n as i64, p as i64);
    let half = Integer::div_floor(&(n - 1), &2);
    let lead = binomial_signed::<T>(half, p - 1)?;
    let two = lift::<T>(2, W)?;
    let cut = if p % 2 == 1 {
        binomial_signed::<T>(Integer::div_floor(&(n - 1), &4), (p - 1) / 2)?
    } else if matches!(n.rem_euclid(4), 1 | 2) {
        mul(
            &two,
            &binomial_signed::<T>(Integer::div_floor(&(n - 1), &4), p / 2)?,
            W,
        )?
    } else {
        let q = Integer::div_floor(&(n - 3), &4);
        add(
            &mul(&two, &binomial_signed::<T>(q, p / 2)?, W)?,
            &binomial_signed::<T>(q, (p - 2) / 2)?,
            W,
        )?
    };
    exact_div(&sub(&lead, &cut, W)?, &two, W)
}

/// D*-classes of the order-decreasing maps at height `p`:
/// `C(n-1, p-1) - merged_b(n, p)`.
pub fn dstar_count_ddp<T: ExactScalar>(n: u32, p: u32) -> Result<T> {
    sub(
        &dclass_count_odp::<T>(n, p)?,
        &merged_b::<T>(n, p)?,
        "dstar_count_ddp",
    )
}

/// D*-classes of the order-decreasing maps in total, the empty map included.
pub fn dstar_total_ddp<T: ExactScalar>(n: u32) -> Result<T> {
    let rows = (1..=n)
        .map(|p| dstar_count_ddp::<T>(n, p))
        .collect::<Result<Vec<_>>>()?;
    add(
        &T::one(),
        &sum(&rows, "dstar_total_ddp")?,
        "dstar_total_ddp",
    )
}

/// Coefficient and exponent of the trailing power of two in the closed form.
pub fn dstar_total_ddp_tail(n: u32) -> (u32, i64) {
    let n = n as i64;
    if matches!(n.rem_euclid(4), 1 | 2) {
        (3, Integer::div_floor(&(n - 3), &4))
    } else {
        (
            DSTAR_TOTAL_FIRST_CASE_COEFFICIENT,
            Integer::div_floor(&(n + 1), &4),
        )
    }
}

fn rational_pow2(e: i64) -> ExactRational {
    let p = ExactInt::one() << e.unsigned_abs();
    if e >= 0 {
        ExactRational::from_integer(p)
    } else {
        ExactRational::new(ExactInt::one(), p)
    }
}

/// `2^(n-1) - 2^floor((n-3)/2) + c * 2^e` evaluated over the rationals.
///
/// The exponents go negative for `n <= 2`; the value is still an integer
/// there and equals the class count for every `n >= 1`. Returns an error
/// when the rational value is not integral (as happens at `n = 0`).
pub fn dstar_total_ddp_closed_form(n: u32) -> Result<ExactInt> {
    const W: &str = "dstar_total_ddp_closed_form";
    let n64 = n as i64;
    let (coeff, e) = dstar_total_ddp_tail(n);
    let value = rational_pow2(n64 - 1) - rational_pow2(Integer::div_floor(&(n64 - 3), &2))
        + ExactRational::from_integer(coeff.into()) * rational_pow2(e);
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::InexactDivision {
            what: W,
            divisor: value.denom().to_string(),
            remainder: (value.numer() % value.denom()).to_string(),
        })
    }
}

// ---------------------------------------------------------------------------
// Count tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    Height,
    Fix,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Height => "height",
            Statistic::Fix => "fix",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "height" | "p" => Ok(Statistic::Height),
            "fix" | "m" => Ok(Statistic::Fix),
            _ => Err(Error::Unknown {
                what: "statistic",
                value: s.to_owned(),
            }),
        }
    }
}

/// The formula for one triangle entry, or `Unsupported`.
pub fn entry<T: ExactScalar>(family: Family, statistic: Statistic, n: u32, k: u32) -> Result<T> {
    match (family, statistic) {
        (Family::Odp, Statistic::Height) => f_odp_height(n, k),
        (Family::Oddp, Statistic::Height) => f_oddp_height(n, k),
        (Family::Oddp, Statistic::Fix) => f_oddp_fix(n, k),
        (Family::Ddp, Statistic::Height) => f_ddp_height(n, k),
        (Family::Ddp, Statistic::Fix) => f_ddp_fix(n, k),
        (Family::DdpStar, Statistic::Height) => f_ddpstar_height(n, k),
        _ => Err(Error::Unsupported {
            family,
            statistic: statistic.name(),
        }),
    }
}

/// Closed-form family order, where one exists.
pub fn order<T: ExactScalar>(family: Family, n: u32) -> Result<T> {
    match family {
        Family::Oddp => order_oddp(n),
        Family::Ddp => order_ddp(n),
        Family::DdpStar => order_ddpstar(n),
        Family::Odp => {
            let rows = (0..=n)
                .map(|p| f_odp_height::<T>(n, p))
                .collect::<Result<Vec<_>>>()?;
            sum(&rows, "order_odp")
        }
        Family::Dp => Err(Error::Unsupported {
            family,
            statistic: "order",
        }),
    }
}

/// A triangle `F(n; k)` for `n = 0..=max_n`, `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable<T> {
    pub family: Family,
    pub statistic: Statistic,
    /// `rows[n][k] = F(n; k)`.
    pub rows: Vec<Vec<T>>,
}

impl<T: ExactScalar> CountTable<T> {
    pub fn from_formulas(family: Family, statistic: Statistic, max_n: u32) -> Result<Self> {
        let rows = (0..=max_n)
            .map(|n| (0..=n).map(|k| entry(family, statistic, n, k)).collect())
            .collect::<Result<_>>()?;
        Ok(Self {
            family,
            statistic,
            rows,
        })
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len().saturating_sub(1) as u32
    }

    pub fn get(&self, n: u32, k: u32) -> Option<&T> {
        self.rows.get(n as usize)?.get(k as usize)
    }

    pub fn row_sum(&self, n: u32) -> Result<T> {
        let row = self.rows.get(n as usize).ok_or_else(|| Error::OutOfRange {
            what: "row_sum",
            detail: format!("row {n} beyond table"),
        })?;
        sum(row, "row_sum")
    }

    /// Entries in row-major order, the reading used for OEIS triangles.
    pub fn flatten(&self) -> impl Iterator<Item = &T> {
        self.rows.iter().flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactInt;

    fn big(n: u64) -> ExactInt {
        ExactInt::from(n)
    }

    #[test]
    fn odp_height_examples() {
        assert_eq!(f_odp_height::<u64>(4, 2).unwrap(), 14);
        assert_eq!(f_odp_height::<u64>(2, 1).unwrap(), 4);
        for n in 0..20 {
            assert_eq!(f_odp_height::<u64>(n, n).unwrap(), 1);
        }
        assert!(f_odp_height::<u64>(2, 3).is_err());
    }

    #[test]
    fn oddp_examples() {
        assert_eq!(f_oddp_height::<u64>(5, 1).unwrap(), 15);
        assert_eq!(f_oddp_height::<u64>(3, 2).unwrap(), 4);
        assert_eq!(f_oddp_height::<u64>(9, 9).unwrap(), 1);
        assert_eq!(order_oddp::<u64>(0).unwrap(), 1);
        assert_eq!(order_oddp::<u64>(1).unwrap(), 2);
        assert_eq!(order_oddp::<u64>(3).unwrap(), 12);
        assert_eq!(f_oddp_fix::<u64>(4, 2).unwrap(), 6);
        assert_eq!(f_oddp_fix::<u64>(3, 0).unwrap(), 5);
        assert_eq!(f_oddp_fix::<u64>(7, 7).unwrap(), 1);
        assert_eq!(f_oddp_fix::<u64>(0, 0).unwrap(), 1);
    }

    #[test]
    fn ddpstar_examples() {
        assert_eq!(f_ddpstar_height::<u64>(7, 2).unwrap(), 22);
        assert_eq!(f_ddpstar_height::<u64>(6, 3).unwrap(), 3);
        assert_eq!(f_ddpstar_height::<u64>(5, 3).unwrap(), 1);
        assert_eq!(f_ddpstar_height::<u64>(2, 2).unwrap(), 0);
        assert_eq!(f_ddpstar_height::<u64>(0, 1).unwrap(), 0);
        assert_eq!(order_ddpstar::<u64>(7).unwrap(), 60);
        assert_eq!(order_ddpstar::<u64>(6).unwrap(), 38);
        assert_eq!(order_ddpstar::<u64>(0).unwrap(), 1);
    }

    #[test]
    fn height_two_closed_form_matches_product_formula_at_p_one() {
        // The product formula also reproduces C(n+1, 2) at p = 1.
        for n in 1..30u32 {
            let (top, tail) = if n % 2 == 1 {
                (n + 1, 2 * n)
            } else {
                (n, 2 * n + 2)
            };
            assert_eq!((top * tail) / 4, n * (n + 1) / 2);
        }
    }

    #[test]
    fn gauss_sum_examples() {
        assert_eq!(gauss_sum_identity::<u64>(7).unwrap(), 22);
        assert_eq!(gauss_sum_identity::<u64>(2).unwrap(), 0);
        assert_eq!(gauss_sum_identity::<u64>(6).unwrap(), 13);
        assert_eq!(gauss_sum_identity::<u64>(1).unwrap(), 0);
        assert!(gauss_sum_identity::<u64>(0).is_err());
    }

    #[test]
    fn ddp_examples() {
        assert_eq!(f_ddp_height::<u64>(6, 2).unwrap(), 48);
        assert_eq!(f_ddp_height::<u64>(7, 4).unwrap(), 57);
        for n in 2..20 {
            assert_eq!(f_ddp_height::<u64>(n, n).unwrap(), 1);
        }
        assert_eq!(order_ddp::<u64>(7).unwrap(), 279);
        assert_eq!(order_ddp::<u64>(6).unwrap(), 137);
        assert_eq!(order_ddp::<u64>(0).unwrap(), 1);
        assert_eq!(f_ddp_fix::<u64>(4, 1).unwrap(), 6);
        assert_eq!(f_ddp_fix::<u64>(3, 1).unwrap(), 4);
        assert_eq!(f_ddp_fix::<u64>(5, 5).unwrap(), 1);
        assert_eq!(f_ddp_fix::<u64>(0, 0).unwrap(), 1);
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(order_ddp_recurrence::<u64>(0).unwrap(), 1);
        assert_eq!(order_ddp_recurrence::<u64>(1).unwrap(), 2);
        assert_eq!(order_ddp_recurrence::<u64>(2).unwrap(), 5);
        assert_eq!(order_ddp_recurrence::<u64>(7).unwrap(), 279);
        assert_eq!(ddp_recurrence_step::<u64>(7, &137, &66).unwrap(), 279);
    }

    #[test]
    fn recurrence_from_seeds_zero_and_one_overshoots_at_one() {
        // a_(-1) = 0, a_0 = 1 gives a_1 = 3 - 0 - 1 + 2 = 4, but |DDP_1| = 2.
        let a1 = ddp_recurrence_step::<u64>(1, &1, &0).unwrap();
        assert_eq!(a1, 4);
        assert_ne!(a1, order_ddp::<u64>(1).unwrap());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(compositions::<u64>(4, 2).unwrap(), 3);
        assert_eq!(compositions::<u64>(9, 1).unwrap(), 1);
        assert_eq!(compositions::<u64>(5, 3).unwrap(), 6);
        assert_eq!(symmetric_compositions::<u64>(5, 2).unwrap(), 0);
        assert_eq!(symmetric_compositions::<u64>(4, 2).unwrap(), 1);
        assert_eq!(symmetric_compositions::<u64>(6, 3).unwrap(), 2);
        assert!(compositions::<u64>(0, 1).is_err());
    }

    #[test]
    fn merged_examples() {
        assert_eq!(merged_g::<u64>(3, 3).unwrap(), 1);
        assert_eq!(merged_g::<u64>(2, 2).unwrap(), 0);
        assert_eq!(merged_b::<u64>(7, 3).unwrap(), 1);
        assert_eq!(merged_b_closed_form::<u64>(7, 3).unwrap(), 1);
        assert_eq!(merged_b::<u64>(5, 2).unwrap(), 0);
        assert_eq!(merged_b::<u64>(4, 2).unwrap(), 0);
        assert!(merged_g::<u64>(3, 1).is_err());
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(dclass_total_odp::<u64>(2).unwrap(), 3);
        assert_eq!(dclass_total_odp::<u64>(5).unwrap(), 17);
        assert_eq!(dclass_count_odp::<u64>(8, 1).unwrap(), 1);
        assert_eq!(dstar_total_oddp::<u64>(4).unwrap(), 9);
        assert_eq!(dstar_count_oddp::<u64>(6, 3).unwrap(), 10);
        assert_eq!(dstar_total_ddp::<u64>(4).unwrap(), 9);
        assert_eq!(dstar_total_ddp::<u64>(5).unwrap(), 17);
        assert_eq!(dstar_count_ddp::<u64>(7, 3).unwrap(), 14);
        assert_eq!(dstar_total_ddp::<u64>(0).unwrap(), 1);
        assert_eq!(lr_class_count_dp::<u64>(6, 2).unwrap(), 15);
    }

    #[test]
    fn dstar_total_closed_form_agrees_with_summation() {
        for n in 1..=60 {
            assert_eq!(
                dstar_total_ddp_closed_form(n).unwrap(),
                dstar_total_ddp::<ExactInt>(n).unwrap(),
                "n = {n}"
            );
        }
        assert!(dstar_total_ddp_closed_form(0).is_err());
        assert_eq!(dstar_total_ddp_tail(7), (1, 2));
        assert_eq!(dstar_total_ddp_tail(9), (3, 1));
    }

    #[test]
    fn narrow_scalars_overflow_cleanly() {
        assert!(matches!(order_ddp::<u64>(70), Err(Error::Overflow { .. })));
        assert_eq!(
            order_ddp::<ExactInt>(70).unwrap(),
            order_ddp_recurrence::<ExactInt>(70).unwrap()
        );
        assert_eq!(
            order_ddp::<u128>(40).unwrap().to_string(),
            order_ddp::<ExactInt>(40).unwrap().to_string()
        );
    }

    #[test]
    fn big_and_machine_scalars_agree() {
        for n in 0..=25 {
            for p in 0..=n {
                assert_eq!(
                    big(f_ddp_height::<u64>(n, p).unwrap()),
                    f_ddp_height::<ExactInt>(n, p).unwrap()
                );
                assert_eq!(
                    big(f_ddp_fix::<u64>(n, p).unwrap()),
                    f_ddp_fix::<ExactInt>(n, p).unwrap()
                );
            }
        }
    }

    #[test]
    fn tables_and_unsupported_statistics() {
        let t = CountTable::<u64>::from_formulas(Family::DdpStar, Statistic::Height, 7).unwrap();
        assert_eq!(t.rows[7], vec![1, 28, 22, 8, 1, 0, 0, 0]);
        assert_eq!(t.row_sum(7).unwrap(), 60);
        assert_eq!(t.flatten().count(), 36);
        assert!(matches!(
            CountTable::<u64>::from_formulas(Family::Dp, Statistic::Height, 3),
            Err(Error::Unsupported { .. })
        ));
        assert!(matches!(
            entry::<u64>(Family::DdpStar, Statistic::Fix, 3, 1),
            Err(Error::Unsupported { .. })
        ));
    }
}
