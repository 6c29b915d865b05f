use chainiso::formulas as fm;
use chainiso::{ExactInt, Family, Result, Statistic};
use clap::ValueEnum;

/// Sequences and row-major triangles available to `seq`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Series {
    /// |ODP_n|
    OrderOdp,
    /// |ODDP_n| (A184049 row sums)
    OrderOddp,
    /// |DDP_n| (A184052)
    #[value(alias = "a184052")]
    OrderDdp,
    /// |DDP*_n|
    #[value(alias = "order-ddp-star")]
    OrderDdpstar,
    /// D*-classes of DDP_n
    DstarTotalDdp,
    /// D*-classes of ODDP_n
    DstarTotalOddp,
    /// ODDP height triangle F(n; p), row-major (A184049)
    #[value(name = "oddp-height", alias = "a184049")]
    OddpHeight,
    /// ODDP fix triangle F(n; m), row-major (A184050)
    #[value(name = "oddp-fix", alias = "a184050")]
    OddpFix,
    /// DDP fix triangle F(n; m), row-major (A184051)
    #[value(name = "ddp-fix", alias = "a184051")]
    DdpFix,
    /// DDP height triangle F(n; p), row-major
    DdpHeight,
    /// DDP* height triangle F(n; p), row-major
    #[value(alias = "ddp-star-height")]
    DdpstarHeight,
}

/// One emitted term. Triangle terms carry their `(n, k)` position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub index: u64,
    pub cell: Option<(u32, u32)>,
    pub value: ExactInt,
}

impl Series {
    pub fn triangle(self) -> Option<(Family, Statistic)> {
        match self {
            Series::OddpHeight => Some((Family::Oddp, Statistic::Height)),
            Series::OddpFix => Some((Family::Oddp, Statistic::Fix)),
            Series::DdpFix => Some((Family::Ddp, Statistic::Fix)),
            Series::DdpHeight => Some((Family::Ddp, Statistic::Height)),
            Series::DdpstarHeight => Some((Family::DdpStar, Statistic::Height)),
            _ => None,
        }
    }

    fn term(self, n: u32) -> Result<ExactInt> {
        match self {
            Series::OrderOdp => fm::order(Family::Odp, n),
            Series::OrderOddp => fm::order_oddp(n),
            Series::OrderDdp => fm::order_ddp(n),
            Series::OrderDdpstar => fm::order_ddpstar(n),
            Series::DstarTotalDdp => fm::dstar_total_ddp(n),
            Series::DstarTotalOddp => fm::dstar_total_oddp(n),
            _ => unreachable!("triangle series"),
        }
    }

    /// Terms for rows `offset..=max_n`. Triangle indices count entries in
    /// row-major order from row 0.
    pub fn terms(self, offset: u32, max_n: u32) -> Result<Vec<Term>> {
        match self.triangle() {
            None => (offset..=max_n)
                .map(|n| {
                    Ok(Term {
                        index: n as u64,
                        cell: None,
                        value: self.term(n)?,
                    })
                })
                .collect(),
            Some((family, stat)) => {
                let mut index = offset as u64 * (offset as u64 + 1) / 2;
                let mut out = Vec::new();
                for n in offset..=max_n {
                    for k in 0..=n {
                        out.push(Term {
                            index,
                            cell: Some((n, k)),
                            value: fm::entry(family, stat, n, k)?,
                        });
                        index += 1;
                    }
                }
                Ok(out)
            }
        }
    }
}
