//! Reproduction of the published bound comparisons and the self-check
//! suites behind `mldr check`.
//!
//! Every number emitted here comes from [`crate::bounds`]; this module only
//! selects parameters, formats cells and compares against the golden
//! copies embedded from `data/`.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{
    bariffi_weger, best_bound, byrne_weger, main_thm_a, main_thm_b, main_thm_d, mds_refined_bound, rank1_bound,
    rank_level_bound, BoundId, BoundResult, RankParams,
};
use crate::error::{Error, Result};
use crate::ring::{is_prime, Modulus, Rational};
use crate::search::{sweep_grid, Property};

/// Column order of the comparison table.
pub const TABLE2_COLUMNS: [BoundId; 7] = [
    BoundId::WynerGrahamMLDR,
    BoundId::AHIntegralTypeMLDR,
    BoundId::AHTypeMLDR,
    BoundId::ByrneWeger,
    BoundId::MainThmA,
    BoundId::MainThmB,
    BoundId::MainThmC,
];

const TABLE2_GOLDEN: &str = include_str!("../data/table2.csv");

const FIGURE_GOLDEN: [&str; 10] = [
    include_str!("../data/figures/fig01.csv"),
    include_str!("../data/figures/fig02.csv"),
    include_str!("../data/figures/fig03.csv"),
    include_str!("../data/figures/fig04.csv"),
    include_str!("../data/figures/fig05.csv"),
    include_str!("../data/figures/fig06.csv"),
    include_str!("../data/figures/fig07.csv"),
    include_str!("../data/figures/fig08.csv"),
    include_str!("../data/figures/fig09.csv"),
    include_str!("../data/figures/fig10.csv"),
];

pub const ABSENT: &str = "-";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::InvalidParams(format!("unknown format {s:?}, expected csv or md"))),
        }
    }
}

fn cell(v: Option<i64>) -> String {
    v.map_or_else(|| ABSENT.to_string(), |x| x.to_string())
}

fn parse_cell(s: &str, line: usize) -> Result<Option<i64>> {
    if s == ABSENT {
        return Ok(None);
    }
    s.parse().map(Some).map_err(|_| Error::Parse { line, message: format!("bad cell {s:?}") })
}

/// A difference between computed output and its golden copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub location: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.location, self.expected, self.found)
    }
}

/// One row of the comparison table: floors of [`TABLE2_COLUMNS`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub params: RankParams,
    pub cells: Vec<Option<i64>>,
}

impl ReportRow {
    pub fn compute(params: RankParams) -> Self {
        let cells =
            TABLE2_COLUMNS.iter().map(|&id| rank_level_bound(id, &params).and_then(|b| b.floor_value())).collect();
        ReportRow { params, cells }
    }
}

/// The golden comparison table.
pub fn table2_golden() -> Vec<ReportRow> {
    parse_table2(TABLE2_GOLDEN).expect("embedded table is well formed")
}

pub fn parse_table2(text: &str) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        let line_no = i + 1;
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 + TABLE2_COLUMNS.len() {
            return Err(Error::Parse { line: line_no, message: format!("expected 10 fields, found {}", fields.len()) });
        }
        let num = |s: &str| -> Result<u64> {
            s.parse().map_err(|_| Error::Parse { line: line_no, message: format!("bad number {s:?}") })
        };
        let params = RankParams::from_order(num(fields[0])? as usize, num(fields[1])? as usize, num(fields[2])?)?;
        let cells = fields[3..].iter().map(|s| parse_cell(s, line_no)).collect::<Result<_>>()?;
        rows.push(ReportRow { params, cells });
    }
    Ok(rows)
}

/// The comparison table recomputed at the golden parameters.
pub fn table2_rows() -> Vec<ReportRow> {
    table2_golden().into_iter().map(|r| ReportRow::compute(r.params)).collect()
}

pub fn compare_table2(computed: &[ReportRow], golden: &[ReportRow]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    if computed.len() != golden.len() {
        out.push(Mismatch {
            location: "row count".into(),
            expected: golden.len().to_string(),
            found: computed.len().to_string(),
        });
    }
    for (c, g) in computed.iter().zip(golden) {
        if c.params != g.params {
            out.push(Mismatch { location: "row".into(), expected: g.params.to_string(), found: c.params.to_string() });
            continue;
        }
        for ((id, x), y) in TABLE2_COLUMNS.iter().zip(&c.cells).zip(&g.cells) {
            if x != y {
                out.push(Mismatch { location: format!("{} {id}", g.params), expected: cell(*y), found: cell(*x) });
            }
        }
    }
    out
}

pub fn render_table2(rows: &[ReportRow], format: Format) -> String {
    let names: Vec<&str> = TABLE2_COLUMNS.iter().map(|id| id.name()).collect();
    let mut s = String::new();
    match format {
        Format::Csv => {
            s.push_str(&format!("n,K,q,{}\n", names.join(",")));
            for r in rows {
                let cells: Vec<String> = r.cells.iter().map(|&c| cell(c)).collect();
                s.push_str(&format!("{},{},{},{}\n", r.params.n, r.params.k, r.params.modulus.q(), cells.join(",")));
            }
        }
        Format::Markdown => {
            s.push_str(&format!("| (n, K, p^t) | {} |\n", names.join(" | ")));
            s.push_str(&format!("|---|{}\n", "---|".repeat(names.len())));
            for r in rows {
                let cells: Vec<String> = r.cells.iter().map(|&c| cell(c)).collect();
                s.push_str(&format!("| {} | {} |\n", r.params, cells.join(" | ")));
            }
        }
    }
    s
}

/// A plotted series: one bound, or several bounds drawn as one line
/// because they coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesSpec {
    pub bounds: &'static [BoundId],
}

impl SeriesSpec {
    pub fn name(&self) -> String {
        self.bounds.iter().map(|b| b.name()).collect::<Vec<_>>().join("+")
    }

    /// Common floor of the bounds; `None` if any is inapplicable or they differ.
    pub fn value(&self, params: &RankParams) -> Option<i64> {
        let floors: Vec<Option<i64>> =
            self.bounds.iter().map(|&id| rank_level_bound(id, params).and_then(|b| b.floor_value())).collect();
        let first = floors[0]?;
        floors.iter().all(|&f| f == Some(first)).then_some(first)
    }
}

#[derive(Debug, Clone)]
pub struct FigureSpec {
    pub id: u8,
    pub title: &'static str,
    pub xs: Vec<i64>,
    pub series: Vec<SeriesSpec>,
    params: fn(i64) -> (usize, usize, u64),
}

impl FigureSpec {
    pub fn params_at(&self, x: i64) -> Result<RankParams> {
        let (n, k, q) = (self.params)(x);
        RankParams::from_order(n, k, q)
    }
}

pub const FIGURE_IDS: std::ops::RangeInclusive<u8> = 1..=10;

const A: BoundId = BoundId::MainThmA;
const B: BoundId = BoundId::MainThmB;
const C: BoundId = BoundId::MainThmC;
const BW: BoundId = BoundId::ByrneWeger;
const CW: BoundId = BoundId::ChiangWolf;
const WG: BoundId = BoundId::WynerGrahamMLDR;
const AHI: BoundId = BoundId::AHIntegralTypeMLDR;
const AHT: BoundId = BoundId::AHTypeMLDR;

fn series(list: &[&'static [BoundId]]) -> Vec<SeriesSpec> {
    list.iter().map(|&bounds| SeriesSpec { bounds }).collect()
}

pub fn figure_spec(id: u8) -> Result<FigureSpec> {
    let range = |a: i64, b: i64| (a..=b).collect::<Vec<_>>();
    let spec = match id {
        1 => FigureSpec {
            id,
            title: "Phi(n,3,7)",
            xs: range(15, 34),
            series: series(&[&[B], &[CW], &[WG], &[A]]),
            params: |x| (x as usize, 3, 7),
        },
        2 => FigureSpec {
            id,
            title: "Phi(n,4,37)",
            xs: range(24, 37),
            series: series(&[&[C], &[CW, A], &[WG]]),
            params: |x| (x as usize, 4, 37),
        },
        3 => FigureSpec {
            id,
            title: "Phi(2K+5,K,5)",
            xs: (3..=39).step_by(2).collect(),
            series: series(&[&[B], &[CW], &[AHT], &[WG], &[A]]),
            params: |x| (2 * x as usize + 5, x as usize, 5),
        },
        4 => FigureSpec {
            id,
            title: "Phi(n,10,5)",
            xs: range(25, 39),
            series: series(&[&[B], &[CW], &[WG], &[A]]),
            params: |x| (x as usize, 10, 5),
        },
        5 => FigureSpec {
            id,
            title: "Phi(2K,K,3^5)",
            xs: range(5, 19),
            series: series(&[&[B], &[BW], &[AHI], &[WG], &[A]]),
            params: |x| (2 * x as usize, x as usize, 243),
        },
        6 => FigureSpec {
            id,
            title: "Phi(2K,K,2^4)",
            xs: range(4, 19),
            series: series(&[&[BW], &[AHI], &[WG], &[A]]),
            params: |x| (2 * x as usize, x as usize, 16),
        },
        7 => FigureSpec {
            id,
            title: "Phi(floor(3K/2),K,2^2)",
            xs: range(4, 19),
            series: series(&[&[B], &[BW], &[AHI], &[WG], &[A]]),
            params: |x| (3 * x as usize / 2, x as usize, 4),
        },
        8 => FigureSpec {
            id,
            title: "Phi(n,20,125)",
            xs: range(110, 129),
            series: series(&[&[B], &[BW], &[AHI], &[WG], &[A]]),
            params: |x| (x as usize, 20, 125),
        },
        9 => FigureSpec {
            id,
            title: "Phi(n,3,13^2)",
            xs: range(9, 14),
            series: series(&[&[C], &[BW], &[AHI], &[WG], &[A]]),
            params: |x| (x as usize, 3, 169),
        },
        10 => FigureSpec {
            id,
            title: "Phi(n,11,13^2)",
            xs: range(15, 24),
            series: series(&[&[B], &[BW], &[AHI], &[WG], &[A]]),
            params: |x| (x as usize, 11, 169),
        },
        _ => return Err(Error::InvalidParams(format!("figure id must be in 1..=10, got {id}"))),
    };
    Ok(spec)
}

/// Points of one series; `None` where the bound does not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureSeries {
    pub figure: u8,
    pub series: String,
    pub points: Vec<(i64, Option<i64>)>,
}

pub fn figure_series(id: u8) -> Result<Vec<FigureSeries>> {
    let spec = figure_spec(id)?;
    spec.series
        .iter()
        .map(|s| {
            let points = spec.xs.iter().map(|&x| Ok((x, s.value(&spec.params_at(x)?)))).collect::<Result<_>>()?;
            Ok(FigureSeries { figure: id, series: s.name(), points })
        })
        .collect()
}

pub fn parse_figure_csv(text: &str) -> Result<Vec<FigureSeries>> {
    let mut out: Vec<FigureSeries> = Vec::new();
    let mut header_seen = false;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        if !header_seen {
            header_seen = true;
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        let bad = |m: &str| Error::Parse { line: line_no, message: m.to_string() };
        if f.len() != 4 {
            return Err(bad("expected figure,series,x,y"));
        }
        let figure: u8 = f[0].parse().map_err(|_| bad("bad figure id"))?;
        let x: i64 = f[2].parse().map_err(|_| bad("bad x"))?;
        let y = parse_cell(f[3], line_no)?;
        match out.last_mut() {
            Some(s) if s.figure == figure && s.series == f[1] => s.points.push((x, y)),
            _ => out.push(FigureSeries { figure, series: f[1].to_string(), points: vec![(x, y)] }),
        }
    }
    Ok(out)
}

pub fn figure_golden(id: u8) -> Result<Vec<FigureSeries>> {
    figure_spec(id)?;
    parse_figure_csv(FIGURE_GOLDEN[id as usize - 1])
}

pub fn compare_figure(computed: &[FigureSeries], golden: &[FigureSeries]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for g in golden {
        let Some(c) = computed.iter().find(|c| c.series == g.series) else {
            out.push(Mismatch {
                location: format!("figure {} series {}", g.figure, g.series),
                expected: "present".into(),
                found: "missing".into(),
            });
            continue;
        };
        for &(x, y) in &g.points {
            let found = c.points.iter().find(|p| p.0 == x).map(|p| p.1);
            if found != Some(y) {
                out.push(Mismatch {
                    location: format!("figure {} {} x={x}", g.figure, g.series),
                    expected: cell(y),
                    found: found.map_or_else(|| "no point".into(), cell),
                });
            }
        }
        if c.points.len() != g.points.len() {
            out.push(Mismatch {
                location: format!("figure {} {} point count", g.figure, g.series),
                expected: g.points.len().to_string(),
                found: c.points.len().to_string(),
            });
        }
    }
    for c in computed {
        if !golden.iter().any(|g| g.series == c.series) {
            out.push(Mismatch {
                location: format!("figure {} series {}", c.figure, c.series),
                expected: "absent".into(),
                found: "present".into(),
            });
        }
    }
    out
}

pub fn render_figure(series: &[FigureSeries], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Csv => {
            s.push_str("figure,series,x,y\n");
            for f in series {
                for &(x, y) in &f.points {
                    s.push_str(&format!("{},{},{x},{}\n", f.figure, f.series, cell(y)));
                }
            }
        }
        Format::Markdown => {
            let Some(first) = series.first() else { return s };
            let names: Vec<&str> = series.iter().map(|f| f.series.as_str()).collect();
            s.push_str(&format!("| x | {} |\n", names.join(" | ")));
            s.push_str(&format!("|---|{}\n", "---|".repeat(names.len())));
            for (i, &(x, _)) in first.points.iter().enumerate() {
                let cells: Vec<String> = series.iter().map(|f| cell(f.points[i].1)).collect();
                s.push_str(&format!("| {x} | {} |\n", cells.join(" | ")));
            }
        }
    }
    s
}

/// Renders every bound at `params` with its exact value, floor and
/// applicability, followed by the winner.
pub fn render_bounds(results: &[BoundResult], best: &BoundResult, format: Format) -> String {
    let row = |b: &BoundResult| {
        (
            b.id.name().to_string(),
            b.value.as_ref().map_or_else(|| ABSENT.to_string(), Rational::to_string),
            cell(b.floor_value()),
            if b.applicable() { "yes" } else { "no" }.to_string(),
            b.condition_note.clone(),
        )
    };
    let mut s = String::new();
    match format {
        Format::Csv => {
            s.push_str("bound,value,floor,applicable,condition\n");
            for b in results {
                let (a, v, f, ap, c) = row(b);
                s.push_str(&format!("{a},{v},{f},{ap},\"{c}\"\n"));
            }
            s.push_str(&format!("best,{},{},yes,\"{}\"\n", cell(best.floor_value()), best.id, best.condition_note));
        }
        Format::Markdown => {
            s.push_str("| bound | value | floor | applicable | condition |\n|---|---|---|---|---|\n");
            for b in results {
                let (a, v, f, ap, c) = row(b);
                s.push_str(&format!("| {a} | {v} | {f} | {ap} | {c} |\n"));
            }
            s.push_str(&format!("\nbest: {} = {} ({})\n", best.id, cell(best.floor_value()), best.condition_note));
        }
    }
    s
}

/// Self-check suites run by `mldr check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ring,
    Code,
    Bounds,
    Sweeps,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ring" => Ok(Suite::Ring),
            "code" => Ok(Suite::Code),
            "bounds" => Ok(Suite::Bounds),
            "sweeps" => Ok(Suite::Sweeps),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidParams(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn line(name: &str, failures: Vec<String>, ok_detail: impl Into<String>) -> CheckLine {
    let passed = failures.is_empty();
    let detail = if passed {
        ok_detail.into()
    } else {
        let shown: Vec<&str> = failures.iter().take(8).map(String::as_str).collect();
        format!("{} failures; {}", failures.len(), shown.join("; "))
    };
    CheckLine { name: name.to_string(), passed, detail }
}

pub fn run_suite(suite: Suite) -> Result<Vec<CheckLine>> {
    Ok(match suite {
        Suite::Ring => ring_suite(),
        Suite::Code => code_suite()?,
        Suite::Bounds => bounds_suite()?,
        Suite::Sweeps => sweeps_suite()?,
        Suite::All => {
            let mut all = ring_suite();
            all.extend(code_suite()?);
            all.extend(bounds_suite()?);
            all.extend(sweeps_suite()?);
            all
        }
    })
}

fn prime_powers_up_to(limit: u64) -> Vec<Modulus> {
    (2..=limit).filter_map(|q| Modulus::from_order(q).ok()).collect()
}

fn ring_suite() -> Vec<CheckLine> {
    let mut failures = Vec::new();
    let moduli = prime_powers_up_to(64);
    for m in &moduli {
        let q = m.q();
        let mut total = 0u64;
        let mut max = 0u64;
        for a in 0..q {
            let w = m.lee_weight(a);
            total += w;
            max = max.max(w);
            if w != m.lee_weight(m.neg(a)) {
                failures.push(format!("{m}: w({a}) != w(-{a})"));
            }
            for b in 0..q {
                if m.lee_weight(m.add(a, b)) > w + m.lee_weight(b) {
                    failures.push(format!("{m}: triangle fails at ({a}, {b})"));
                }
            }
        }
        if m.mean_nonzero_lee_weight() * (q as i64 - 1) != total as i64 {
            failures.push(format!("{m}: weight sum {total} != (q-1) mu_q"));
        }
        if max != m.max_lee_weight() {
            failures.push(format!("{m}: max weight {max} != {}", m.max_lee_weight()));
        }
    }
    vec![line(
        "ring: Lee weight symmetry, triangle inequality, mean and maximum",
        failures,
        format!("{} prime-power moduli up to 64, exhaustive", moduli.len()),
    )]
}

const CODE_PROPERTIES: [Property; 8] = [
    Property::Singleton,
    Property::SocleRank,
    Property::SocleHamming,
    Property::SocleLee,
    Property::KappaRange,
    Property::SizeCount,
    Property::SystematicSpan,
    Property::DistinctCodes,
];

fn code_suite() -> Result<Vec<CheckLine>> {
    let mut failures = Vec::new();
    let mut codes = 0;
    for (q, n) in [(2, 5), (3, 4), (4, 4), (8, 3), (9, 3)] {
        let r = sweep_grid(Modulus::from_order(q)?, n, &CODE_PROPERTIES)?;
        codes += r.codes_examined;
        failures.extend(r.violations.iter().map(|v| v.to_string()));
    }
    Ok(vec![line(
        "code: socle, rank profile, size and systematic-form invariants",
        failures,
        format!("{codes} codes over Z_2, Z_3, Z_4, Z_8, Z_9"),
    )])
}

fn bounds_suite() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();

    let table = compare_table2(&table2_rows(), &table2_golden());
    out.push(line(
        "bounds: comparison table",
        table.iter().map(Mismatch::to_string).collect(),
        "18 rows x 7 columns match",
    ));

    let mut fig_failures = Vec::new();
    let mut points = 0;
    for id in FIGURE_IDS {
        let golden = figure_golden(id)?;
        points += golden.iter().map(|s| s.points.len()).sum::<usize>();
        fig_failures.extend(compare_figure(&figure_series(id)?, &golden).iter().map(Mismatch::to_string));
    }
    out.push(line("bounds: figure series", fig_failures, format!("{points} plotted points match")));

    let mut claims = Vec::new();
    let primes: Vec<u64> = (2..=13).filter(|&p| is_prime(p)).collect();
    for &p in &primes {
        for n in 1..=20 {
            for k in 1..=n {
                let params = RankParams::from_order(n, k, p)?;
                let (a, b) = (main_thm_a(&params).floor_value(), main_thm_b(&params).floor_value());
                if let (Some(a), Some(b)) = (a, b) {
                    if (n - k + 1) < p as usize + 1 && b > a {
                        claims.push(format!("(B) > (A) at {params}"));
                    }
                }
                if let Some(c) = mds_refined_bound(&params).value {
                    if n > k + 5 && c >= byrne_weger(&params).value.expect("always applies") {
                        claims.push(format!("(C) not below ByrneWeger at {params}"));
                    }
                }
            }
        }
    }
    out.push(line("bounds: comparison claims", claims, "p <= 13, n <= 20"));

    let mut lifting = Vec::new();
    let lifted: [fn(&RankParams) -> BoundResult; 7] =
        [main_thm_a, main_thm_b, mds_refined_bound, main_thm_d, byrne_weger, bariffi_weger, rank1_bound];
    for q in [4u64, 8, 9, 16, 25, 27, 49, 125] {
        let m = Modulus::from_order(q)?;
        let lift = m.p_pow(m.t() - 1) as i64;
        for n in 1..=14 {
            for k in 1..=n {
                let big = RankParams::new(n, k, m)?;
                let small = RankParams::new(n, k, m.residue_field())?;
                for f in lifted {
                    let (x, y) = (f(&big), f(&small));
                    if x.value != y.value.clone().map(|v| v * lift) {
                        lifting.push(format!("{} at {big}", x.id));
                    }
                }
            }
        }
    }
    out.push(line("bounds: lifting identity p^t vs p", lifting, "q in {4,8,9,16,25,27,49,125}, n <= 14"));

    let mut mono = Vec::new();
    for m in prime_powers_up_to(32) {
        for k in 1..=8 {
            let mut prev = None;
            for n in k..=24 {
                let b = best_bound(&RankParams::new(n, k, m)?).floor_value();
                if prev.is_some_and(|p| b < Some(p)) {
                    mono.push(format!("best bound decreases at ({n}, {k}, {})", m.q()));
                }
                prev = b;
            }
        }
    }
    out.push(line("bounds: best bound nondecreasing in n", mono, "q <= 32, K <= 8, n <= 24"));
    Ok(out)
}

fn sweeps_suite() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        let r = sweep_grid(Modulus::prime(p)?, 5, &Property::ALL)?;
        out.push(line(
            &format!("sweeps: all properties over Z_{p}, n <= 5"),
            r.violations.iter().map(|v| v.to_string()).collect(),
            format!("{} codes", r.codes_examined),
        ));
    }
    Ok(out)
}
