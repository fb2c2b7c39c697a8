//! Command-line front end for `convexenum`.
//!
//! Every command produces an [`OutputRecord`]; rendering to text, JSON or CSV
//! is separate so that tests can inspect records directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use convexenum::cfrac::{bot_series, f1_series, f2_formula_check, tot_series};
use convexenum::exact::{to_decimal, Rounding};
use convexenum::perms::{
    build_digraph, check_subadditivity, count_perms_bruteforce, count_perms_digraph, growth_bounds, BoundGf,
    Truncation,
};
use convexenum::words::{
    count_words_bruteforce, count_words_dp, decode_word, encode_word, g0p_stable, word_gf, IntegerPartition, Word,
};
use convexenum::{Poly, RationalFunction, RootInterval, Series};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Largest length enumerated exhaustively when another engine is available.
const BRUTE_MAX_N: usize = 13;

#[derive(Debug, Parser)]
#[command(name = "convexenum", version, about = "Enumerate k-convex words and permutations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit the record as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit the record as CSV rows `name,index,value`.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    /// Decimal digits for growth rates and root intervals.
    #[arg(long, global = true, default_value_t = 10)]
    pub precision: u32,
    /// Truncation order for series.
    #[arg(long, global = true, default_value_t = 20)]
    pub order: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// k-convex words over the alphabet 1..=p.
    #[command(subcommand)]
    Words(WordsCmd),
    /// k-convex permutations.
    #[command(subcommand)]
    Perms(PermsCmd),
    /// Continued-fraction series for the 1- and 2-convex cases.
    #[command(subcommand)]
    Cfrac(CfracCmd),
}

#[derive(Debug, Subcommand)]
pub enum WordsCmd {
    /// Count words of length n by every engine.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Generating function coefficients up to --order.
    Gf {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// Also compute the rational function.
        #[arg(long)]
        exact: bool,
    },
    /// Number of 0-convex words of any length n >= 2p - 1.
    Stable {
        #[arg(long)]
        p: u32,
    },
    /// Build a 0-convex word from its maximum and two partitions.
    Encode {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Comma-separated parts; empty for the empty partition.
        #[arg(long, default_value = "")]
        w1: String,
        #[arg(long, default_value = "")]
        w2: String,
        #[arg(long)]
        n: usize,
    },
    /// Recover the maximum and partitions of a 0-convex word.
    Decode {
        /// Digits, or comma-separated letters.
        #[arg(long)]
        word: String,
        /// Alphabet size; defaults to the largest letter.
        #[arg(long)]
        p: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Drop the edge leaving the cutoff node.
    Cut,
    /// Cut and add the upper-bound self-loop.
    Loop,
    /// No truncation; requires --depth.
    None,
}

#[derive(Debug, Subcommand)]
pub enum PermsCmd {
    /// Count permutations of length n by every applicable engine.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// f_0, f_1, f_2 for n = 1..=max-n.
    Table {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Rational generating-function bounds and growth-rate intervals.
    Bounds {
        #[arg(long)]
        k: u32,
    },
    /// Transition digraph in DOT format.
    Digraph {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Cut)]
        mode: Mode,
        /// Cutoff level; defaults to 7 for k = 1 and 8 for k = 2.
        #[arg(long)]
        level: Option<u32>,
        /// Generations to expand from the start node.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Test f(m + n) <= f(m) f(n) for m + n <= max-n.
    Subadd {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CfracCmd {
    /// Return walks at the root of the 1-convex tower.
    Bot,
    /// All walks from the root of the 1-convex tower.
    Tot,
    /// f_1(n) from the continued fractions.
    F1,
    /// Compare the k = 2 formula with exact counts.
    F2check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Text(String),
    List(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<Entry>,
    pub provenance: Vec<String>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        Self { command: command.into(), parameters: BTreeMap::new(), results: Vec::new(), provenance: Vec::new() }
    }

    fn param(mut self, name: &str, value: impl ToString) -> Self {
        self.parameters.insert(name.into(), value.to_string());
        self
    }

    fn engines(mut self, names: &[&str]) -> Self {
        self.provenance = names.iter().map(|s| s.to_string()).collect();
        self
    }

    fn text(&mut self, name: &str, value: impl ToString) {
        self.results.push(Entry { name: name.into(), value: Value::Text(value.to_string()) });
    }

    fn list<I: IntoIterator<Item = S>, S: ToString>(&mut self, name: &str, values: I) {
        let values = values.into_iter().map(|v| v.to_string()).collect();
        self.results.push(Entry { name: name.into(), value: Value::List(values) });
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.results.iter().find(|e| e.name == name).map(|e| &e.value)
    }
}

/// A finished command: its record, whether all engines agreed, and DOT text
/// for digraph commands.
#[derive(Clone, Debug)]
pub struct Report {
    pub record: OutputRecord,
    pub agree: bool,
    pub dot: Option<String>,
}

impl Report {
    fn new(record: OutputRecord) -> Self {
        Self { record, agree: true, dot: None }
    }

    /// Record agreement of engine values under `agreement`.
    fn compare<T: PartialEq + ToString>(&mut self, values: &[(&str, T)]) {
        let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
        for (name, v) in values {
            self.record.text(name, v.to_string());
        }
        self.record.text("agreement", agree);
        self.agree &= agree;
    }
}

pub type CliResult<T> = std::result::Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn parse_partition(text: &str) -> CliResult<IntegerPartition> {
    let parts = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|e| format!("bad part {s:?}: {e}")))
        .collect::<CliResult<Vec<_>>>()?;
    IntegerPartition::new(parts).map_err(err)
}

fn partition_text(p: &IntegerPartition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn integers(s: &Series) -> CliResult<Vec<BigInt>> {
    s.to_integers().ok_or_else(|| "series has non-integer coefficients".to_string())
}

fn poly_coeffs(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn interval_text(r: &RootInterval, digits: usize) -> String {
    format!("[{}, {}]", to_decimal(&r.lo, digits, Rounding::Down), to_decimal(&r.hi, digits, Rounding::Up))
}

fn ratfun_entries(record: &mut OutputRecord, prefix: &str, f: &RationalFunction) {
    record.text(&format!("{prefix}_gf"), f);
    record.list(&format!("{prefix}_numerator"), poly_coeffs(f.numerator()));
    record.list(&format!("{prefix}_denominator"), poly_coeffs(f.denominator()));
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Words(cmd) => run_words(cmd, &cli.global),
        Command::Perms(cmd) => run_perms(cmd, &cli.global),
        Command::Cfrac(cmd) => run_cfrac(cmd, &cli.global),
    }
}

fn run_words(cmd: &WordsCmd, g: &GlobalArgs) -> CliResult<Report> {
    match *cmd {
        WordsCmd::Count { n, p, k } => {
            let rec = OutputRecord::new("words count").param("n", n).param("p", p).param("k", k);
            let dp = count_words_dp(n, p, k);
            let gf = integers(&word_gf(p, k, n, false).map_err(err)?.series)?[n].clone();
            let mut report;
            if n <= BRUTE_MAX_N {
                report = Report::new(rec.engines(&["bruteforce", "dp", "transfer"]));
                let brute = count_words_bruteforce(n, p, k);
                report.compare(&[("bruteforce", BigInt::from(brute)), ("dp", dp.into()), ("transfer", gf)]);
            } else {
                report = Report::new(rec.engines(&["dp", "transfer"]));
                report.compare(&[("dp", BigInt::from(dp)), ("transfer", gf)]);
            }
            Ok(report)
        }
        WordsCmd::Gf { p, k, exact } => {
            let mut rec = OutputRecord::new("words gf")
                .param("p", p)
                .param("k", k)
                .param("order", g.order)
                .engines(&["transfer"]);
            let gf = word_gf(p, k, g.order, exact).map_err(err)?;
            rec.list("coefficients", integers(&gf.series)?);
            if let Some(f) = &gf.ratfun {
                ratfun_entries(&mut rec, "word", f);
            }
            Ok(Report::new(rec))
        }
        WordsCmd::Stable { p } => {
            let rec = OutputRecord::new("words stable").param("p", p);
            let formula = g0p_stable(p);
            let n = 2 * p as usize - 1;
            if p <= 10 {
                let mut report = Report::new(rec.engines(&["partition", "bruteforce"]));
                let brute = count_words_bruteforce(n, p, 0);
                report.compare(&[("partition", formula), ("bruteforce", brute.into())]);
                Ok(report)
            } else {
                let mut rec = rec.engines(&["partition"]);
                rec.text("partition", formula);
                Ok(Report::new(rec))
            }
        }
        WordsCmd::Encode { p, m, ref w1, ref w2, n } => {
            let (a, b) = (parse_partition(w1)?, parse_partition(w2)?);
            let mut rec = OutputRecord::new("words encode")
                .param("p", p)
                .param("m", m)
                .param("w1", partition_text(&a))
                .param("w2", partition_text(&b))
                .param("n", n)
                .engines(&["bijection"]);
            rec.text("word", encode_word(p, m, &a, &b, n).map_err(err)?);
            Ok(Report::new(rec))
        }
        WordsCmd::Decode { ref word, p } => {
            let letters = word
                .split(',')
                .flat_map(|chunk| {
                    if word.contains(',') {
                        vec![chunk.trim().parse::<u32>().map_err(err)]
                    } else {
                        chunk.chars().map(|c| c.to_digit(10).ok_or(format!("bad letter {c:?}"))).collect()
                    }
                })
                .collect::<CliResult<Vec<u32>>>()?;
            let p = p.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(1));
            let w = Word::new(letters, p).map_err(err)?;
            let (m, w1, w2) = decode_word(&w).map_err(err)?;
            let mut rec = OutputRecord::new("words decode")
                .param("word", &w)
                .param("p", p)
                .engines(&["bijection"]);
            rec.text("m", m);
            rec.text("w1", partition_text(&w1));
            rec.text("w2", partition_text(&w2));
            Ok(Report::new(rec))
        }
    }
}

fn perm_engines(n: usize, k: u32) -> CliResult<Vec<(&'static str, BigInt)>> {
    let mut out = Vec::new();
    if n <= BRUTE_MAX_N {
        out.push(("bruteforce", BigInt::from(count_perms_bruteforce(n, k))));
    }
    if k <= 2 {
        out.push(("digraph", BigInt::from(count_perms_digraph(n, k).map_err(err)?)));
    }
    if k == 1 {
        out.push(("cfrac", integers(&f1_series(n))?[n].clone()));
    }
    if out.is_empty() {
        return Err(format!("n = {n} is too long for brute force and k = {k} has no structural engine"));
    }
    Ok(out)
}

fn run_perms(cmd: &PermsCmd, g: &GlobalArgs) -> CliResult<Report> {
    match *cmd {
        PermsCmd::Count { n, k } => {
            if n == 0 {
                return Err("n must be positive".into());
            }
            let values = perm_engines(n, k)?;
            let names: Vec<&str> = values.iter().map(|v| v.0).collect();
            let mut report = Report::new(OutputRecord::new("perms count").param("n", n).param("k", k).engines(&names));
            report.compare(&values);
            Ok(report)
        }
        PermsCmd::Table { max_n } => {
            let rec = OutputRecord::new("perms table").param("max_n", max_n);
            let mut report = Report::new(rec.engines(&["bruteforce", "digraph", "cfrac"]));
            let mut columns = vec![Vec::new(); 3];
            let mut disagreements = Vec::new();
            for n in 1..=max_n {
                for k in 0..=2u32 {
                    let values = perm_engines(n, k)?;
                    if values.windows(2).any(|w| w[0].1 != w[1].1) {
                        disagreements.push(format!("f_{k}({n})"));
                    }
                    columns[k as usize].push(values[0].1.clone());
                }
            }
            report.record.list("n", 1..=max_n);
            for (k, col) in columns.iter().enumerate() {
                report.record.list(&format!("f{k}"), col);
            }
            report.record.text("agreement", disagreements.is_empty());
            if !disagreements.is_empty() {
                report.record.list("disagreements", &disagreements);
                report.agree = false;
            }
            Ok(report)
        }
        PermsCmd::Bounds { k } => {
            let b = growth_bounds(k, g.precision).map_err(err)?;
            let mut rec = OutputRecord::new("perms bounds")
                .param("k", k)
                .param("precision", g.precision)
                .engines(&["digraph", "transfer"]);
            let digits = g.precision as usize + 2;
            let mut side = |name: &str, gf: &BoundGf, root: &RootInterval, rate: &str| {
                rec.text(&format!("{name}_level"), gf.level);
                rec.text(&format!("{name}_nodes"), gf.nodes);
                ratfun_entries(&mut rec, &format!("{name}_walk"), &gf.walk_gf);
                rec.text(&format!("{name}_root"), interval_text(root, digits));
                rec.text(&format!("{name}_rate"), rate);
            };
            side("lower", &b.lower, &b.lower_root, &b.lower_rate);
            side("upper", &b.upper, &b.upper_root, &b.upper_rate);
            Ok(Report::new(rec))
        }
        PermsCmd::Digraph { k, mode, level, depth } => {
            let level = match (mode, level) {
                (Mode::None, _) => None,
                (_, Some(l)) => Some(l),
                (_, None) => Some(Truncation::default_level(k).map_err(err)?),
            };
            let truncation = match (mode, level) {
                (Mode::Cut, Some(level)) => Truncation::Cut { level },
                (Mode::Loop, Some(level)) => Truncation::Loop { level },
                _ => Truncation::None,
            };
            let d = build_digraph(k, depth, truncation).map_err(err)?;
            let mut rec = OutputRecord::new("perms digraph").param("k", k).param(
                "mode",
                format!("{mode:?}").to_lowercase(),
            );
            if let Some(l) = level {
                rec = rec.param("level", l);
            }
            if let Some(dp) = depth {
                rec = rec.param("depth", dp);
            }
            let mut rec = rec.engines(&["digraph"]);
            rec.text("nodes", d.len());
            rec.text("edges", d.edges.len());
            rec.list("labels", d.nodes.iter().map(|n| &n.label));
            let dot = d.to_dot();
            rec.text("dot", &dot);
            Ok(Report { record: rec, agree: true, dot: Some(dot) })
        }
        PermsCmd::Subadd { k, max_n } => {
            let r = check_subadditivity(k, max_n).map_err(err)?;
            let mut rec = OutputRecord::new("perms subadd")
                .param("k", k)
                .param("max_n", max_n)
                .engines(&["digraph"]);
            rec.text("pairs_checked", r.checked);
            rec.text("violations", r.violations.len());
            rec.list(
                "violating_pairs",
                r.violations
                    .iter()
                    .map(|v| format!("f({}) = {} > f({}) f({}) = {}", v.m + v.n, v.f_sum, v.m, v.n, v.product)),
            );
            Ok(Report::new(rec))
        }
    }
}

fn run_cfrac(cmd: &CfracCmd, g: &GlobalArgs) -> CliResult<Report> {
    let order = g.order;
    let series = |name: &str, s: Series| -> CliResult<Report> {
        let mut rec = OutputRecord::new(&format!("cfrac {name}")).param("order", order).engines(&["cfrac"]);
        rec.list("coefficients", integers(&s)?);
        Ok(Report::new(rec))
    };
    match cmd {
        CfracCmd::Bot => series("bot", bot_series(order)),
        CfracCmd::Tot => series("tot", tot_series(order)),
        CfracCmd::F1 => series("f1", f1_series(order)),
        CfracCmd::F2check => {
            let r = f2_formula_check(order).map_err(err)?;
            let rec = OutputRecord::new("cfrac f2check").param("order", order).engines(&["cfrac", "digraph", "bruteforce"]);
            let mut report = Report::new(rec);
            let brute_max = order.min(12);
            let brute: Vec<BigInt> = (0..=brute_max)
                .map(|n| BigInt::from(count_perms_bruteforce(n.max(1), 2)))
                .collect();
            let oracle_ok = brute.iter().zip(&r.truth).all(|(a, b)| a == b);
            let rec = &mut report.record;
            rec.list("counts", &r.truth);
            rec.list("formula_as_displayed", &r.printed);
            rec.list("formula_corrected", &r.corrected);
            let mark = |v: &[BigInt]| -> Vec<String> {
                v.iter().zip(&r.truth).map(|(a, b)| if a == b { "ok" } else { "differs" }.into()).collect()
            };
            rec.list("as_displayed_agreement", mark(&r.printed));
            rec.list("corrected_agreement", mark(&r.corrected));
            let first = |m: Option<usize>| m.map_or("none".to_string(), |n| n.to_string());
            rec.text("first_mismatch_as_displayed", first(r.first_printed_mismatch));
            rec.text("first_mismatch_corrected", first(r.first_corrected_mismatch));
            rec.text("oracle_checked_by_bruteforce_to", brute_max);
            rec.text("agreement", oracle_ok);
            report.agree = oracle_ok;
            Ok(report)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl GlobalArgs {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

pub fn render(report: &Report, format: Format) -> CliResult<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(&report.record).map(|s| s + "\n").map_err(err),
        Format::Csv => render_csv(&report.record),
        Format::Text => Ok(match &report.dot {
            Some(dot) => dot.clone(),
            None => render_text(&report.record),
        }),
    }
}

pub fn render_text(r: &OutputRecord) -> String {
    let mut out = String::new();
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(out, "{} ({})", r.command, params.join(" "));
    let _ = writeln!(out, "engines: {}", r.provenance.join(", "));
    for e in &r.results {
        match &e.value {
            Value::Text(v) => {
                let _ = writeln!(out, "{}: {v}", e.name);
            }
            Value::List(v) => {
                let _ = writeln!(out, "{}: {}", e.name, v.join(", "));
            }
        }
    }
    out
}

pub fn render_csv(r: &OutputRecord) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "index", "value"]).map_err(err)?;
    for e in &r.results {
        match &e.value {
            Value::Text(v) => w.write_record([e.name.as_str(), "", v]).map_err(err)?,
            Value::List(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    w.write_record([e.name.as_str(), &i.to_string(), v]).map_err(err)?;
                }
            }
        }
    }
    String::from_utf8(w.into_inner().map_err(err)?).map_err(err)
}
