//! `chainiso`: number triangles, sequences, element listings and class counts
//! for the order-decreasing partial isometries of a finite chain.

mod render;
mod series;

use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use chainiso::families::{self, oracle_bound_from_env, DEFAULT_ORACLE_BOUND};
use chainiso::formulas as fm;
use chainiso::verify::{self, CheckGroup, DEFAULT_PARTITION_BOUND};
use chainiso::{ExactInt, ExactTable, Family, FamilySlice, Statistic, VerifyConfig};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use series::Series;

const FAMILY_HELP: &str =
    "Family: dp (all partial isometries DP_n), odp (order-preserving ODP_n), \
ddp (order-decreasing DDP_n), oddp (order-preserving and order-decreasing ODDP_n), \
ddp-star (order-reversing and order-decreasing plus height <= 1, DDP*_n)";

#[derive(Debug, Parser)]
#[command(
    name = "chainiso",
    version,
    about = "Exact enumeration of semigroups of order-decreasing partial isometries"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Omit the report header (the only place a timestamp appears).
    #[arg(long, global = true)]
    no_header: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    Height,
    Fix,
}

impl From<Stat> for Statistic {
    fn from(s: Stat) -> Self {
        match s {
            Stat::Height => Statistic::Height,
            Stat::Fix => Statistic::Fix,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the triangle F(n; k) with a row-sum column.
    Table {
        #[arg(long, value_parser = parse_family, help = FAMILY_HELP)]
        family: Family,
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long)]
        max_n: u32,
        /// Cross-check rows up to the oracle bound against enumeration.
        #[arg(long)]
        check: bool,
    },
    /// Print a sequence a(offset..=max_n), or a triangle read by rows.
    Seq {
        #[arg(long, value_enum, ignore_case = true)]
        series: Series,
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value_t = 0)]
        offset: u32,
    },
    /// List the elements of a family on one chain.
    Elements {
        #[arg(long, value_parser = parse_family, help = FAMILY_HELP)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        height: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: u32,
    },
    /// D*-class counts for oddp or ddp.
    Classes {
        #[arg(long, value_parser = parse_family, help = FAMILY_HELP)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        per_height: bool,
        /// Also count classes by union-find and flag any mismatch.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_PARTITION_BOUND)]
        bound: u32,
    },
    /// Cross-check formulas against enumeration; exit 1 on any failure.
    Verify {
        #[arg(long)]
        max_n: u32,
        /// Check groups: tables, fix, orders, formulas, classes, closure, structure.
        #[arg(long, value_delimiter = ',', value_parser = parse_group)]
        checks: Vec<CheckGroup>,
        #[arg(long)]
        partition_bound: Option<u32>,
        #[arg(long)]
        naive_bound: Option<u32>,
        #[arg(long)]
        closure_bound: Option<u32>,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: chainiso::Error| e.to_string())
}

fn parse_group(s: &str) -> Result<CheckGroup, String> {
    s.parse().map_err(|e: chainiso::Error| e.to_string())
}

/// Rendered output and exit code; `Err` is a usage error.
struct Outcome {
    text: String,
    code: u8,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

type Run = Result<Outcome, String>;

fn unsupported(format: Format, what: &str) -> String {
    format!("format {format:?} is not available for {what}").to_lowercase()
}

fn header(cli: &Cli, title: &str) -> String {
    if cli.no_header || cli.format != Format::Ascii {
        return String::new();
    }
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    format!("# chainiso {title} (unix time {secs})\n")
}

fn cmd_table(format: Format, family: Family, stat: Statistic, max_n: u32, check: bool) -> Run {
    let table = ExactTable::from_formulas(family, stat, max_n).map_err(|e| e.to_string())?;
    let sums: Vec<ExactInt> = (0..=max_n)
        .map(|n| table.row_sum(n))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;

    let mut code = 0;
    let mut notes = String::new();
    if check {
        for n in 0..=max_n.min(oracle_bound_from_env()) {
            let counted = match stat {
                Statistic::Height => families::height_profile(family, n),
                Statistic::Fix => families::fix_profile(family, n),
            };
            let counted: Vec<ExactInt> = counted.into_iter().map(ExactInt::from).collect();
            if counted != table.rows[n as usize] {
                code = 1;
                notes.push_str(&format!("row {n}: enumeration gives {counted:?}\n"));
            }
        }
    }

    let corner = match stat {
        Statistic::Height => "n\\p",
        Statistic::Fix => "n\\m",
    };
    let text = match format {
        Format::Ascii => render::aligned(&render::triangle_grid(corner, &table.rows, &sums)),
        Format::Csv => {
            let mut grid = render::triangle_grid("n", &table.rows, &sums);
            grid[0][0] = "n".into();
            render::csv(&grid)
        }
        Format::Json => render::json(&Value::Array(
            table
                .rows
                .iter()
                .zip(&sums)
                .enumerate()
                .map(|(n, (row, sum))| {
                    json!({
                        "n": n,
                        "entries": row.iter().map(render::number).collect::<Vec<_>>(),
                        "sum": render::number(sum),
                    })
                })
                .collect(),
        )),
        Format::Bfile => render::bfile(
            table
                .flatten()
                .cloned()
                .enumerate()
                .map(|(i, v)| (i as u64, v)),
        ),
    };
    if code != 0 {
        eprint!("{notes}");
    }
    Ok(Outcome { text, code })
}

fn cmd_seq(format: Format, series: Series, offset: u32, max_n: u32) -> Run {
    if offset > max_n {
        return Err(format!("offset {offset} exceeds max-n {max_n}"));
    }
    let terms = series.terms(offset, max_n).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Ascii => {
            let vals: Vec<String> = terms.iter().map(|t| t.value.to_string()).collect();
            vals.join(", ") + "\n"
        }
        Format::Bfile => render::bfile(terms.into_iter().map(|t| (t.index, t.value))),
        Format::Csv => {
            let mut rows = Vec::new();
            if series.triangle().is_some() {
                rows.push(vec!["index".into(), "n".into(), "k".into(), "value".into()]);
                for t in &terms {
                    let (n, k) = t.cell.expect("triangle cell");
                    rows.push(vec![
                        t.index.to_string(),
                        n.to_string(),
                        k.to_string(),
                        t.value.to_string(),
                    ]);
                }
            } else {
                rows.push(vec!["n".into(), "value".into()]);
                rows.extend(
                    terms
                        .iter()
                        .map(|t| vec![t.index.to_string(), t.value.to_string()]),
                );
            }
            render::csv(&rows)
        }
        Format::Json => render::json(&Value::Array(
            terms
                .iter()
                .map(|t| match t.cell {
                    Some((n, k)) => {
                        json!({"index": t.index, "n": n, "k": k, "value": render::number(&t.value)})
                    }
                    None => json!({"n": t.index, "value": render::number(&t.value)}),
                })
                .collect(),
        )),
    };
    Ok(text.into())
}

fn cmd_elements(format: Format, family: Family, n: u32, height: Option<u32>, bound: u32) -> Run {
    if n > bound {
        return Err(chainiso::Error::BoundExceeded {
            what: "element listing",
            n,
            bound,
        }
        .to_string());
    }
    let mut slice = FamilySlice::new(family, n);
    if let Some(p) = height {
        slice = slice.with_height(p);
    }
    let maps: Vec<_> = families::enumerate(slice).collect();
    let text = match format {
        Format::Ascii => maps.iter().map(|m| format!("{m}\n")).collect(),
        Format::Csv => {
            let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            let mut rows = vec![vec!["height".to_string(), "dom".into(), "img".into()]];
            rows.extend(
                maps.iter()
                    .map(|m| vec![m.height().to_string(), join(m.domain()), join(m.image())]),
            );
            render::csv(&rows)
        }
        Format::Json => render::json(&Value::Array(
            maps.iter()
                .map(|m| json!({"n": m.n(), "dom": m.domain(), "img": m.image()}))
                .collect(),
        )),
        Format::Bfile => return Err(unsupported(format, "elements")),
    };
    Ok(text.into())
}

type PerHeight = fn(u32, u32) -> chainiso::Result<ExactInt>;
type Total = fn(u32) -> chainiso::Result<ExactInt>;

fn cmd_classes(
    format: Format,
    family: Family,
    n: u32,
    per_height: bool,
    oracle: bool,
    bound: u32,
) -> Run {
    let (per, total): (PerHeight, Total) = match family {
        Family::Oddp => (fm::dstar_count_oddp, fm::dstar_total_oddp),
        Family::Ddp => (fm::dstar_count_ddp, fm::dstar_total_ddp),
        other => return Err(format!("classes supports oddp and ddp, not {other}")),
    };
    let err = |e: chainiso::Error| e.to_string();
    let heights: Vec<ExactInt> = std::iter::once(Ok(ExactInt::from(1)))
        .chain((1..=n).map(|p| per(n, p)))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let total = total(n).map_err(err)?;
    let partition = if oracle {
        Some(verify::dstar_partition(family, n, bound).map_err(err)?)
    } else {
        None
    };
    let found_heights: Option<Vec<ExactInt>> = partition
        .as_ref()
        .map(|p| p.per_height.iter().map(|&c| ExactInt::from(c)).collect());
    let found_total = partition.as_ref().map(|p| ExactInt::from(p.class_count()));
    let matched = match (&found_heights, &found_total) {
        (Some(h), Some(t)) => Some(*h == heights && *t == total),
        _ => None,
    };

    let mut rows: Vec<(String, ExactInt, Option<ExactInt>)> = Vec::new();
    if per_height {
        for (p, v) in heights.iter().enumerate() {
            let found = found_heights.as_ref().map(|h| h[p].clone());
            rows.push((p.to_string(), v.clone(), found));
        }
    }
    rows.push(("total".into(), total, found_total));

    let text = match format {
        Format::Ascii | Format::Csv => {
            let mut grid = vec![vec!["height".to_string(), "classes".into()]];
            if oracle {
                grid[0].extend(["union-find".into(), "match".into()]);
            }
            for (label, v, found) in &rows {
                let mut line = vec![label.clone(), v.to_string()];
                if let Some(f) = found {
                    line.extend([f.to_string(), (f == v).to_string()]);
                }
                grid.push(line);
            }
            if format == Format::Ascii {
                format!("{family} n={n}\n{}", render::aligned(&grid))
            } else {
                render::csv(&grid)
            }
        }
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(label, v, found)| {
                    let mut o = json!({"height": label, "classes": render::number(v)});
                    if let Some(f) = found {
                        o["union_find"] = render::number(f);
                        o["match"] = Value::Bool(f == v);
                    }
                    o
                })
                .collect();
            let mut o = json!({"family": family.name(), "n": n, "counts": entries});
            if let Some(m) = matched {
                o["match"] = Value::Bool(m);
            }
            render::json(&o)
        }
        Format::Bfile => return Err(unsupported(format, "classes")),
    };
    Ok(Outcome {
        text,
        code: if matched == Some(false) { 1 } else { 0 },
    })
}

fn cmd_verify(cli: &Cli, max_n: u32, groups: &[CheckGroup], cfg: VerifyConfig) -> Run {
    let groups = if groups.is_empty() {
        &CheckGroup::ALL[..]
    } else {
        groups
    };
    let reports = verify::run_selected(max_n, &cfg, groups);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let text = match cli.format {
        Format::Ascii => {
            let mut s = header(cli, &format!("verify --max-n {max_n}"));
            for r in &reports {
                s.push_str(&format!("{r}\n"));
            }
            s.push_str(&format!(
                "{} checks, {} passed, {failed} failed\n",
                reports.len(),
                reports.len() - failed
            ));
            s
        }
        Format::Json => render::json(&json!({
            "max_n": max_n,
            "passed": failed == 0,
            "reports": serde_json::to_value(&reports).expect("serialisable"),
        })),
        Format::Csv => {
            let mut rows = vec![["status", "name", "family", "n_min", "n_max", "detail"]
                .map(String::from)
                .to_vec()];
            for r in &reports {
                rows.push(vec![
                    if r.passed() { "pass" } else { "fail" }.into(),
                    r.name.clone(),
                    r.family.map_or(String::new(), |f| f.to_string()),
                    r.n_range.0.to_string(),
                    r.n_range.1.to_string(),
                    r.detail.clone().unwrap_or_default().replace(',', ";"),
                ]);
            }
            render::csv(&rows)
        }
        Format::Bfile => return Err(unsupported(cli.format, "verify")),
    };
    Ok(Outcome {
        text,
        code: if failed == 0 { 0 } else { 1 },
    })
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Table {
            family,
            stat,
            max_n,
            check,
        } => cmd_table(cli.format, *family, (*stat).into(), *max_n, *check),
        Command::Seq {
            series,
            max_n,
            offset,
        } => cmd_seq(cli.format, *series, *offset, *max_n),
        Command::Elements {
            family,
            n,
            height,
            bound,
        } => cmd_elements(cli.format, *family, *n, *height, *bound),
        Command::Classes {
            family,
            n,
            per_height,
            oracle,
            bound,
        } => cmd_classes(cli.format, *family, *n, *per_height, *oracle, *bound),
        Command::Verify {
            max_n,
            checks,
            partition_bound,
            naive_bound,
            closure_bound,
        } => {
            let mut cfg = VerifyConfig::from_env();
            if let Some(b) = partition_bound {
                cfg.partition_bound = *b;
            }
            if let Some(b) = naive_bound {
                cfg.naive_bound = *b;
            }
            if let Some(b) = closure_bound {
                cfg.closure_bound = *b;
            }
            cmd_verify(cli, *max_n, checks, cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
