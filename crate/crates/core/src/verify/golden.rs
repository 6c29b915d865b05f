//! Published height triangles shipped as fixtures.

use crate::families::Family;

const DDP_STAR_HEIGHT: &str = include_str!("../../fixtures/ddp_star_height.csv");
const DDP_HEIGHT: &str = include_str!("../../fixtures/ddp_height.csv");

/// One fixture row: entries for `p = 0..=n` and the published row sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub n: u32,
    pub entries: Vec<u64>,
    pub sum: u64,
}

fn parse(csv: &str) -> Vec<GoldenRow> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let cells: Vec<&str> = line.split(',').collect();
            let parse = |s: &str| s.trim().parse::<u64>().expect("fixture cell");
            let n = parse(cells[0]) as u32;
            let sum = parse(cells[cells.len() - 1]);
            let entries = cells[1..cells.len() - 1]
                .iter()
                .filter(|c| !c.trim().is_empty())
                .map(|c| parse(c))
                .collect();
            GoldenRow { n, entries, sum }
        })
        .collect()
}

/// Golden height rows for `family`, when a fixture exists.
pub fn height_rows(family: Family) -> Option<Vec<GoldenRow>> {
    match family {
        Family::DdpStar => Some(parse(DDP_STAR_HEIGHT)),
        Family::Ddp => Some(parse(DDP_HEIGHT)),
        _ => None,
    }
}
