//! Command-line interface. Commands render TSV into a string and pick an
//! exit code: 0 success, 1 verification failed, 2 input error, 3 budget
//! exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::coverage::{counting_bound, covered_set, theorem_cases, CoverageResult, Placement};
use crate::error::{Error, Result};
use crate::extremal::{self, DESK_SCALE_K};
use crate::intset::{display_decimal, BasisReport, IntSet, Rational};
use crate::io::placement_file::{format_placement, parse_placement};
use crate::io::presets::Preset;
use crate::io::tsv::Table;
use crate::search::{search, SearchConfig, SearchMode};
use crate::segments::{build_basis, element_origins, planar, simple_basis, SegmentParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const MODEL_NOTE: &str = "coverage model: squares at I+J and I+K, square x when x-1 and x are in J+K";

#[derive(Debug, Parser)]
#[command(name = "addbasis", version, about = "Finite additive 2-bases from segment placements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the elements of a constructed basis.
    Build {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t: u64,
    },
    /// Size and range of a basis.
    Range {
        /// Explicit comma- or space-separated set, e.g. "0,1,3,4".
        #[arg(long, conflicts_with_all = ["preset", "file"])]
        set: Option<String>,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t: Option<u64>,
    },
    /// Build a basis and check its range against the coverage prediction.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t: u64,
    },
    /// Search for placements maximizing the covered prefix.
    Search {
        /// Total number of segments.
        #[arg(long)]
        l: u32,
        /// Largest square location (inclusive).
        #[arg(long = "max-loc")]
        max_loc: u32,
        /// Complete branch and bound (the default mode).
        #[arg(long, conflicts_with_all = ["beam", "restarts"])]
        exhaustive: bool,
        /// Beam search of this width.
        #[arg(long, conflicts_with = "restarts")]
        beam: Option<usize>,
        /// Number of seeded random restarts.
        #[arg(long, requires = "seed")]
        restarts: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; results do not depend on it.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Node limit; hitting it reports complete=false and exits 3.
        #[arg(long = "budget-nodes")]
        budget_nodes: Option<u64>,
        /// Ratio threshold such as 2/7.
        #[arg(long = "target-ratio")]
        target_ratio: Option<String>,
    },
    /// Extremal range n(k) by exhaustive search.
    Nk {
        /// Basis size, counting the zero.
        #[arg(long)]
        k: u64,
        /// Node limit; required above k = 10.
        #[arg(long = "budget-nodes")]
        budget_nodes: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print every size from 2 to k.
        #[arg(long)]
        table: bool,
    },
    /// Counting bound li*lj + li*lk + lj*lk.
    Bound { li: u64, lj: u64, lk: u64 },
    /// Planar coordinates (e / t, e mod t) of every basis element.
    Coords {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t: u64,
        /// Emit covered square locations with their rules instead.
        #[arg(long)]
        tiles: bool,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// simple, mrose7, klove7 or kohonen42.
    #[arg(long, conflicts_with = "file")]
    pub preset: Option<String>,
    /// Placement file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Rendered output of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

enum Basis {
    Simple,
    Placed { name: String, placement: Placement },
}

impl Source {
    fn resolve(&self) -> Result<Basis> {
        match (&self.preset, &self.file) {
            (Some(name), _) => {
                let preset: Preset = name.parse()?;
                Ok(match preset.placement() {
                    None => Basis::Simple,
                    Some(placement) => Basis::Placed {
                        name: preset.name().to_string(),
                        placement,
                    },
                })
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                Ok(Basis::Placed {
                    name: path.display().to_string(),
                    placement: parse_placement(&text)?,
                })
            }
            (None, None) => Err(Error::Config("one of --preset or --file is required".into())),
        }
    }
}

impl Basis {
    fn build(&self, t: u64) -> Result<IntSet> {
        match self {
            Basis::Simple => simple_basis(t),
            Basis::Placed { placement, .. } => build_basis(placement, t),
        }
    }

    fn name(&self) -> &str {
        match self {
            Basis::Simple => "simple",
            Basis::Placed { name, .. } => name,
        }
    }
}

/// Runs a parsed command; input errors become exit code 2 with the message
/// on the returned text.
pub fn execute(cmd: &Command) -> Output {
    let result = match cmd {
        Command::Build { source, t } => cmd_build(source, *t),
        Command::Range { set, source, t } => cmd_range(set.as_deref(), source, *t),
        Command::Verify { source, t } => cmd_verify(source, *t),
        Command::Search {
            l,
            max_loc,
            exhaustive: _,
            beam,
            restarts,
            seed,
            threads,
            budget_nodes,
            target_ratio,
        } => {
            let mode = match (beam, restarts) {
                (Some(w), _) => SearchMode::Beam { width: *w },
                (None, Some(n)) => SearchMode::RandomRestart {
                    count: *n,
                    seed: seed.unwrap_or(0),
                },
                (None, None) => SearchMode::Exhaustive,
            };
            target_ratio
                .as_deref()
                .map(parse_ratio)
                .transpose()
                .and_then(|target_ratio| {
                    cmd_search(&SearchConfig {
                        l: *l,
                        max_loc: *max_loc,
                        mode,
                        target_ratio,
                        budget_nodes: *budget_nodes,
                        threads: *threads,
                        prune: true,
                    })
                })
        }
        Command::Nk {
            k,
            budget_nodes,
            threads,
            table,
        } => cmd_nk(*k, *budget_nodes, *threads, *table),
        Command::Bound { li, lj, lk } => Ok(Output::ok(format!("{}\n", cmd_bound(*li, *lj, *lk)))),
        Command::Coords { source, t, tiles } => cmd_coords(source, *t, *tiles),
    };
    result.unwrap_or_else(|e| Output {
        text: format!("error: {e}\n"),
        code: EXIT_INPUT,
    })
}

fn parse_ratio(s: &str) -> Result<Rational> {
    let bad = || Error::Config(format!("target ratio `{s}` is not of the form p/q"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let p: u64 = p.trim().parse().map_err(|_| bad())?;
    let q: u64 = q.trim().parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn list(set: &IntSet) -> String {
    set.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

pub fn cmd_build(source: &Source, t: u64) -> Result<Output> {
    let basis = source.resolve()?;
    let set = basis.build(t)?;
    let mut table = Table::new(&["element"]);
    table.comment(format!("build {} t={t} k={}", basis.name(), set.len()));
    for e in set.iter() {
        table.row([e]);
    }
    Ok(Output::ok(table.render()))
}

pub fn cmd_range(set: Option<&str>, source: &Source, t: Option<u64>) -> Result<Output> {
    let (label, a) = match set {
        Some(text) => {
            let mut elems = Vec::new();
            for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Config(format!("bad set element `{tok}`")))?;
                elems.push(v);
            }
            ("set".to_string(), IntSet::from_signed(elems)?)
        }
        None => {
            let t = t.ok_or_else(|| Error::Config("--t is required with --preset/--file".into()))?;
            let basis = source.resolve()?;
            (basis.name().to_string(), basis.build(t)?)
        }
    };
    let report = BasisReport::of(&a, t.filter(|_| set.is_none()))?;
    let mut table = Table::fields();
    table
        .comment(format!("range {label}; k counts the zero element"))
        .field("k", report.k)
        .field("n", report.n)
        .field("n_over_k2", report.ratio)
        .field("n_over_k2_decimal", display_decimal(&report.ratio));
    Ok(Output::ok(table.render()))
}

fn push_report(table: &mut Table, report: &BasisReport) {
    table
        .field("k", report.k)
        .field("n", report.n)
        .field("n_over_k2", report.ratio)
        .field("n_over_k2_decimal", display_decimal(&report.ratio));
    if let Some(r) = report.r {
        table.field("r", r).field("r_decimal", display_decimal(&r));
    }
}

pub fn cmd_verify(source: &Source, t: u64) -> Result<Output> {
    SegmentParams::new(t)?;
    let basis = source.resolve()?;
    let set = basis.build(t)?;
    let report = BasisReport::of(&set, Some(t))?;
    let mut table = Table::fields();
    table.comment(format!("verify {} t={t}; k counts the zero element", basis.name()));
    let mut cases_out = String::new();
    let verified = match &basis {
        Basis::Simple => {
            let claimed = t * t + t;
            table.comment("claim: n >= t^2 + t");
            table.field("source", "simple").field("t", t);
            push_report(&mut table, &report);
            table.field("claimed_min_n", claimed);
            report.n >= claimed
        }
        Basis::Placed { name, placement } => {
            table.comment(MODEL_NOTE);
            table.comment("claim: n >= m*t^2 - 1");
            let cov = covered_set(placement);
            let (li, lj, lk) = placement.part_sizes();
            let ell = placement.len() as u64;
            let claimed = (cov.m as i128) * (t as i128 * t as i128) - 1;
            table
                .field("source", name)
                .field("t", t)
                .field("l", ell)
                .field("part_sizes", format!("{li},{lj},{lk}"))
                .field("m", cov.m)
                .field("c", cov.c)
                .field("c_decimal", display_decimal(&cov.c))
                .field("counting_bound", counting_bound(li, lj, lk))
                .field("max_k", ell * (t + 1));
            push_report(&mut table, &report);
            table.field("claimed_min_n", claimed.max(0));
            let mut ok = report.n as i128 >= claimed;
            if Some(placement) == Preset::Kohonen42.placement().as_ref() {
                let cases = theorem_cases(placement);
                ok &= cases.iter().all(|c| c.holds);
                let mut ct = Table::new(&["case", "interval", "rule", "claim", "holds"]);
                ct.comment("certificate cases; their intervals partition [0,509]");
                for c in &cases {
                    ct.row([
                        c.label.to_string(),
                        format!("[{},{}]", c.interval.0, c.interval.1),
                        c.rule.to_string(),
                        c.claim.clone(),
                        c.holds.to_string(),
                    ]);
                }
                cases_out = ct.render();
            }
            ok
        }
    };
    table.field("verified", verified);
    let mut text = table.render();
    text.push_str(&cases_out);
    Ok(Output {
        text,
        code: if verified { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}

pub fn cmd_search(cfg: &SearchConfig) -> Result<Output> {
    let out = search(cfg)?;
    let mut table = Table::fields();
    table.comment(format!(
        "search l={} max_loc={} mode={}; results hold for this search domain only",
        cfg.l, cfg.max_loc, cfg.mode
    ));
    table.comment(MODEL_NOTE);
    let (li, lj, lk) = out.witness.part_sizes();
    table
        .field("l", cfg.l)
        .field("max_loc", cfg.max_loc)
        .field("mode", cfg.mode)
        .field("best_m", out.best_m)
        .field("ratio", out.ratio)
        .field("ratio_decimal", display_decimal(&out.ratio))
        .field("complete", out.complete)
        .field("nodes_expanded", out.nodes_expanded)
        .field("nodes_pruned", out.nodes_pruned)
        .field("witness_counting_bound", counting_bound(li, lj, lk));
    if let Some(lb) = out.seed_lower_bound {
        table.field("seed_lower_bound", lb);
    }
    if let Some((idx, seed)) = out.best_restart {
        table.field("best_restart", idx).field("best_restart_seed", seed);
    }
    if let (Some(t), Some(hit)) = (cfg.target_ratio, out.target_reached) {
        table.field("target_ratio", t).field("target_reached", hit);
    }
    let text = format_placement(&out.witness);
    for line in text.lines() {
        let (label, rest) = line.split_once(':').unwrap();
        table.field(&format!("witness_{label}"), rest.trim());
    }
    let budget_hit = matches!(cfg.mode, SearchMode::Exhaustive) && !out.complete;
    Ok(Output {
        text: table.render(),
        code: if budget_hit { EXIT_BUDGET } else { EXIT_OK },
    })
}

pub fn cmd_nk(k: u64, budget_nodes: Option<u64>, threads: usize, full: bool) -> Result<Output> {
    if k > DESK_SCALE_K && budget_nodes.is_none() {
        return Err(Error::Config(format!(
            "k = {k} is above {DESK_SCALE_K}; pass --budget-nodes"
        )));
    }
    let records = extremal::n_of_k_table(k, budget_nodes, threads)?;
    let last = records.last().unwrap();
    let over_desk = k > DESK_SCALE_K;
    let exhaustive = |r: &extremal::ExtremalRecord| r.exhaustive && !over_desk;
    let text = if full {
        let mut t = Table::new(&["k", "n", "witness", "exhaustive", "nodes"]);
        t.comment("n(k) with k counting the zero element");
        for r in &records {
            t.row([
                r.k.to_string(),
                r.n.to_string(),
                list(&r.witnesses[0]),
                exhaustive(r).to_string(),
                r.nodes.to_string(),
            ]);
        }
        t.render()
    } else {
        let mut t = Table::fields();
        t.comment("n(k) with k counting the zero element");
        t.field("k", last.k)
            .field("n", last.n)
            .field("witness", list(&last.witnesses[0]))
            .field("upper_bound", (last.k * last.k + last.k) / 2)
            .field("exhaustive", exhaustive(last))
            .field("nodes", records.iter().map(|r| r.nodes).sum::<u64>());
        t.render()
    };
    let complete = records.iter().all(|r| r.exhaustive);
    Ok(Output {
        text,
        code: if complete { EXIT_OK } else { EXIT_BUDGET },
    })
}

pub fn cmd_bound(li: u64, lj: u64, lk: u64) -> u64 {
    counting_bound(li, lj, lk)
}

fn tiles_table(cov: &CoverageResult) -> Table {
    let mut t = Table::new(&["location", "rules"]);
    t.comment(format!("covered squares; m={} c={}", cov.m, cov.c));
    for (loc, rules) in &cov.by_rule {
        t.row([loc.to_string(), rules.to_string()]);
    }
    t
}

pub fn cmd_coords(source: &Source, t: u64, tiles: bool) -> Result<Output> {
    SegmentParams::new(t)?;
    let basis = source.resolve()?;
    match (&basis, tiles) {
        (Basis::Placed { placement, .. }, true) => Ok(Output::ok(tiles_table(&covered_set(placement)).render())),
        (Basis::Simple, true) => Err(Error::Config("--tiles needs a segment placement".into())),
        (_, false) => {
            let mut table = Table::new(&["element", "x", "y", "segment_kind", "copy_location"]);
            table.comment(format!("coords {} t={t}; (x, y) = (e div t, e mod t)", basis.name()));
            match &basis {
                Basis::Placed { placement, .. } => {
                    for o in element_origins(placement, t)? {
                        let (x, y) = o.coords(t);
                        table.row([
                            o.element.to_string(),
                            x.to_string(),
                            y.to_string(),
                            o.kind.to_string(),
                            o.location.to_string(),
                        ]);
                    }
                }
                Basis::Simple => {
                    for e in simple_basis(t)?.iter() {
                        let (x, y) = planar(e, t);
                        let kind = if e <= t { "V" } else { "H" };
                        table.row([e.to_string(), x.to_string(), y.to_string(), kind.into(), "0".into()]);
                    }
                }
            }
            Ok(Output::ok(table.render()))
        }
    }
}
