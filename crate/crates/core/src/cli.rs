//! Command-line front end, the matrix text format and JSON reports.
//!
//! Every coordinate, group index and row index shown to the user is
//! 1-based. Exit codes: 0 success, 1 verification failure, 2 usage or input
//! errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{all_reports, enumerate_optimal_params, EvidenceReport};
use crate::code::{column_scan_cost, CodeParams, LinearCode, MAX_ENUM_K};
use crate::constructions::{build, catalog, exclusions_for, BuildParams, BuiltCode, LrcParams, Status, Variant};
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::lrc::{check_structure_with_distance, verify_locality, Check, OptimalityReport};
use crate::mat4::Mat4;
use crate::pg::{count_subspaces, count_subspaces_containing, enumerate_points};
use crate::repair::{run_trials, ErasurePattern, RepairOutcome};

/// Default column-scan budget, in subsets examined.
pub const DEFAULT_MAX_SCAN: u128 = 100_000_000;

/// Render a matrix: `<rows> <cols>`, then one line of symbols per row.
pub fn write_matrix(m: &Mat4) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.symbol().to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the matrix text format. Lines starting with `#` are comments.
pub fn read_matrix(text: &str) -> Result<Mat4> {
    let parse = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };
    if !text.ends_with('\n') {
        return Err(parse(text.lines().count().max(1), "missing trailing newline"));
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse(1, "missing header"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse(hl, "header must be `<rows> <cols>`")))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(parse(hl, "header must be `<rows> <cols>`"));
    };
    let mut data = Vec::with_capacity(rows);
    for (ln, line) in lines {
        if data.len() == rows {
            return Err(parse(ln, "more rows than the header declares"));
        }
        let row: Vec<Gf4> = line
            .split_whitespace()
            .map(|t| match t {
                "0" | "1" | "w" | "W" => Ok(Gf4::from_symbol(t).expect("symbol")),
                _ => Err(parse(ln, &format!("`{t}` is not one of 0 1 w W"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(parse(ln, &format!("expected {cols} symbols, found {}", row.len())));
        }
        data.push(row);
    }
    if data.len() != rows {
        return Err(parse(text.lines().count(), &format!("expected {rows} rows, found {}", data.len())));
    }
    if rows == 0 {
        return Ok(Mat4::zeros(0, cols));
    }
    Mat4::from_rows(&data, cols)
}

/// The column-scan budget, from `LRC4_MAX_SCAN` when set.
pub fn max_scan() -> u128 {
    std::env::var("LRC4_MAX_SCAN")
        .ok()
        .and_then(|v| {
            let v = v.trim().replace('_', "");
            v.parse::<u128>()
                .ok()
                .or_else(|| v.parse::<f64>().ok().filter(|f| *f >= 0.0).map(|f| f as u128))
        })
        .unwrap_or(DEFAULT_MAX_SCAN)
}

/// Minimum distance, refusing column scans above the budget unless `full`.
/// `upper` bounds the distance from above.
fn guarded_distance(code: &LinearCode, upper: usize, full: bool) -> Result<usize> {
    let (n, k) = (code.n(), code.k());
    let enumerates = k <= (n - k).min(MAX_ENUM_K);
    if !enumerates && !full {
        let cost = (1..=upper).map(|d| column_scan_cost(n, d)).max().unwrap_or(0);
        let budget = max_scan();
        if cost > budget {
            return Err(Error::Resource(format!(
                "column scan of up to {cost} subsets exceeds the budget {budget} (set LRC4_MAX_SCAN or pass --full)"
            )));
        }
    }
    code.min_distance()
}

#[derive(Parser, Debug)]
#[command(name = "lrc4", version, about = "Optimal quaternary (r,δ)-locally recoverable codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a catalogued code and print its parity-check or generator matrix.
    Build(BuildArgs),
    /// Check locality, optimality and the structural properties of a code.
    Verify(VerifyArgs),
    /// Compute the minimum distance of a code.
    Distance(DistanceArgs),
    /// List optimal parameters and recheck the nonexistence evidence.
    Classify(ClassifyArgs),
    /// Simulate local erasure repair on a catalogued code.
    Repair(RepairArgs),
    /// Projective geometry over GF(4).
    Pg(PgArgs),
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// Catalog id, e.g. C1, C17G, CLS2_1.
    #[arg(long)]
    family: String,
    /// Number of local groups.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Locality, for families that admit several.
    #[arg(long)]
    r: Option<usize>,
    /// Target distance, for the puncture-chain families.
    #[arg(long)]
    d: Option<usize>,
    /// a, b, or printed (the uncorrected matrices and puncture sets).
    #[arg(long, default_value = "a")]
    variant: Variant,
}

impl FamilyArgs {
    fn build(&self) -> Result<BuiltCode> {
        let p = BuildParams {
            l: self.l,
            delta: self.delta,
            k: self.k,
            r: self.r,
            d: self.d,
            variant: self.variant,
        };
        build(&self.family, &p)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MatrixKind {
    Generator,
    Parity,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Write the matrix here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "as", value_enum, default_value = "parity")]
    kind: MatrixKind,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    #[arg(long)]
    parity: Option<PathBuf>,
    #[arg(long)]
    generator: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<LinearCode> {
        let read = |p: &Path| {
            std::fs::read_to_string(p).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", p.display()),
            })
        };
        match (&self.parity, &self.generator) {
            (Some(p), _) => LinearCode::from_parity_rows(&read_matrix(&read(p)?)?),
            (_, Some(g)) => LinearCode::from_generator_rows(&read_matrix(&read(g)?)?),
            _ => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    delta: usize,
    /// Ignore the column-scan budget.
    #[arg(long)]
    full: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct DistanceArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Ignore the column-scan budget.
    #[arg(long)]
    full: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct RepairArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// 1-based erased coordinates, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    erase: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[group(id = "pg_query", required = false, multiple = false)]
struct PgQuery {
    /// List the points of PG(m−1, 4).
    #[arg(long)]
    points: bool,
    /// Number of i-dimensional subspaces of GF(4)^m.
    #[arg(long, value_name = "I")]
    count_subspaces: Option<usize>,
    /// Number of i-dimensional subspaces containing a fixed j-dimensional one.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    count_containing: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct PgArgs {
    /// Vector-space dimension m.
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    query: PgQuery,
    #[arg(long)]
    json: bool,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(e: &Error) -> Outcome {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Run one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let res = match cli.cmd {
        Command::Build(a) => cmd_build(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Distance(a) => cmd_distance(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Repair(a) => cmd_repair(a),
        Command::Pg(a) => cmd_pg(a),
    };
    res.unwrap_or_else(|e| Outcome::usage(&e))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

#[derive(Serialize)]
struct ParamsJson {
    n: usize,
    k: usize,
    d: usize,
}

impl From<CodeParams> for ParamsJson {
    fn from(p: CodeParams) -> ParamsJson {
        ParamsJson { n: p.n, k: p.k, d: p.d }
    }
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

impl From<&Mat4> for MatrixJson {
    fn from(m: &Mat4) -> MatrixJson {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|r| m.row(r).iter().map(|x| x.symbol()).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct BuildJson {
    family: String,
    variant: &'static str,
    params: ParamsJson,
    r: usize,
    delta: usize,
    status: &'static str,
    kind: &'static str,
    matrix: MatrixJson,
}

fn cmd_build(a: BuildArgs) -> Result<Outcome> {
    let b = a.family.build()?;
    let m = match a.kind {
        MatrixKind::Parity => b.profile.parity.clone(),
        MatrixKind::Generator => b.code.generator(),
    };
    let text = if a.json {
        to_json(&BuildJson {
            family: b.family.id.to_string(),
            variant: b.variant.as_str(),
            params: b.expected.into(),
            r: b.r,
            delta: b.delta,
            status: b.family.status.as_str(),
            kind: match a.kind {
                MatrixKind::Parity => "parity",
                MatrixKind::Generator => "generator",
            },
            matrix: (&m).into(),
        })
    } else {
        write_matrix(&m)
    };
    match a.out {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", path.display()),
            })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

#[derive(Serialize)]
struct GroupJson {
    rows: Vec<usize>,
    support: Vec<usize>,
}

#[derive(Serialize)]
struct LocalityJson {
    r: usize,
    delta: usize,
    l: usize,
    groups: Vec<GroupJson>,
}

#[derive(Serialize)]
struct CheckJson {
    pass: bool,
    applies: bool,
    witness: Option<String>,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> CheckJson {
        CheckJson {
            pass: c.pass,
            applies: c.applies,
            witness: c.witness.clone(),
        }
    }
}

#[derive(Serialize)]
struct ChecksJson {
    h_prime_mds: CheckJson,
    rows_per_group: CheckJson,
    punctured_mds: CheckJson,
    disjointness: CheckJson,
    distance_cap: CheckJson,
}

#[derive(Serialize)]
struct VerifyJson {
    params: ParamsJson,
    locality: LocalityJson,
    bound_d: i64,
    d_optimal: bool,
    r_optimal: Option<bool>,
    checks: ChecksJson,
    family: Option<&'static str>,
    status: Option<&'static str>,
}

#[derive(Serialize)]
struct LocalityFailureJson {
    error: &'static str,
    r: usize,
    delta: usize,
    coords: Vec<usize>,
}

/// The catalog entry a tuple falls under: a formula family first, then an
/// exclusion.
fn family_of(p: &LrcParams) -> Option<(&'static str, Status)> {
    catalog()
        .iter()
        .find(|f| f.status != Status::Nonexistent && f.matches(p))
        .map(|f| (f.id, f.status))
        .or_else(|| exclusions_for(p).first().map(|f| (f.id, f.status)))
}

fn verify_json(rep: &OptimalityReport) -> VerifyJson {
    let p = LrcParams {
        n: rep.params.n,
        k: rep.params.k,
        d: rep.params.d,
        r: rep.r,
        delta: rep.delta,
    };
    let fam = if rep.d_optimal { family_of(&p) } else { None };
    let c = &rep.checks;
    VerifyJson {
        params: rep.params.into(),
        locality: LocalityJson {
            r: rep.r,
            delta: rep.delta,
            l: rep.profile.l(),
            groups: rep
                .profile
                .groups
                .iter()
                .map(|g| GroupJson {
                    rows: one_based(&g.rows),
                    support: one_based(&g.support),
                })
                .collect(),
        },
        bound_d: rep.bound_d,
        d_optimal: rep.d_optimal,
        r_optimal: rep.r_optimal,
        checks: ChecksJson {
            h_prime_mds: (&c.h_prime_mds).into(),
            rows_per_group: (&c.rows_per_group).into(),
            punctured_mds: (&c.punctured_mds).into(),
            disjointness: (&c.disjointness).into(),
            distance_cap: (&c.distance_cap).into(),
        },
        family: fam.map(|f| f.0),
        status: fam.map(|f| f.1.as_str()),
    }
}

fn verify_text(rep: &OptimalityReport) -> String {
    let j = verify_json(rep);
    let mut s = format!(
        "params n={} k={} d={}\nlocality r={} delta={} l={}\n",
        j.params.n, j.params.k, j.params.d, j.locality.r, j.locality.delta, j.locality.l
    );
    for (i, g) in j.locality.groups.iter().enumerate() {
        s += &format!("  group {}: rows {:?} support {:?}\n", i + 1, g.rows, g.support);
    }
    s += &format!("bound_d={} d_optimal={}\n", j.bound_d, j.d_optimal);
    s += &match j.r_optimal {
        Some(b) => format!("r_optimal={b}\n"),
        None => "r_optimal=unknown (n above the locality search limit)\n".to_string(),
    };
    for (name, c) in rep.checks.named() {
        let state = match (c.pass, c.applies) {
            (true, true) => "pass",
            (true, false) => "pass (vacuous)",
            _ => "FAIL",
        };
        s += &format!("check {name}: {state}");
        if let Some(w) = &c.witness {
            s += &format!(" [{w}]");
        }
        s.push('\n');
    }
    if let (Some(f), Some(st)) = (j.family, j.status) {
        s += &format!("family {f} ({st})\n");
    }
    s
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome> {
    if a.r == 0 || a.delta < 2 {
        return Err(Error::Range("need r ≥ 1 and delta ≥ 2".into()));
    }
    let code = a.input.load()?;
    let profile = match verify_locality(&code, a.r, a.delta) {
        Ok(p) => p,
        Err(Error::LocalityFailure { coords }) => {
            let (stdout, stderr) = if a.json {
                let j = LocalityFailureJson {
                    error: "locality",
                    r: a.r,
                    delta: a.delta,
                    coords: coords.clone(),
                };
                (to_json(&j), String::new())
            } else {
                (String::new(), format!("locality fails at coordinates {coords:?}\n"))
            };
            return Ok(Outcome { code: 1, stdout, stderr });
        }
        Err(e) => return Err(e),
    };
    let upper = code.n() - code.k() + 1;
    let d = guarded_distance(&code, upper, a.full)?;
    let mut rep = check_structure_with_distance(&code, &profile, d)?;
    rep.distance_verified = true;
    let ok = rep.d_optimal && rep.r_optimal != Some(false) && rep.checks.all_pass();
    Ok(Outcome {
        code: if ok { 0 } else { 1 },
        stdout: if a.json { to_json(&verify_json(&rep)) } else { verify_text(&rep) },
        stderr: String::new(),
    })
}

fn cmd_distance(a: DistanceArgs) -> Result<Outcome> {
    let code = a.input.load()?;
    if code.k() == 0 {
        return Err(Error::UndefinedDistance);
    }
    let d = guarded_distance(&code, code.n() - code.k() + 1, a.full)?;
    let p = CodeParams { n: code.n(), k: code.k(), d };
    Ok(Outcome::ok(if a.json {
        #[derive(Serialize)]
        struct DistanceJson {
            params: ParamsJson,
        }
        to_json(&DistanceJson { params: p.into() })
    } else {
        format!("n={} k={} d={}\n", p.n, p.k, p.d)
    }))
}

#[derive(Serialize)]
struct TupleJson {
    n: usize,
    k: usize,
    d: usize,
    r: usize,
    delta: usize,
    family: &'static str,
    label: &'static str,
    status: &'static str,
}

#[derive(Serialize)]
struct ItemJson {
    name: &'static str,
    value: i64,
    expected: Option<i64>,
    holds: bool,
}

#[derive(Serialize)]
struct ReportJson {
    claim: &'static str,
    holds: bool,
    conclusion: &'static str,
    families: Vec<&'static str>,
    items: Vec<ItemJson>,
}

impl From<&EvidenceReport> for ReportJson {
    fn from(r: &EvidenceReport) -> ReportJson {
        ReportJson {
            claim: r.claim,
            holds: r.holds,
            conclusion: r.conclusion.as_str(),
            families: r.families.clone(),
            items: r
                .items
                .iter()
                .map(|i| ItemJson {
                    name: i.name,
                    value: i.value,
                    expected: i.expected,
                    holds: i.holds,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct ClassifyJson {
    n_max: usize,
    tuples: Vec<TupleJson>,
    reports: Vec<ReportJson>,
}

fn cmd_classify(a: ClassifyArgs) -> Result<Outcome> {
    let tuples = enumerate_optimal_params(a.n_max)?;
    let reports = all_reports();
    let holds = reports.iter().all(|r| r.holds);
    let stdout = if a.json {
        to_json(&ClassifyJson {
            n_max: a.n_max,
            tuples: tuples
                .iter()
                .map(|t| TupleJson {
                    n: t.params.n,
                    k: t.params.k,
                    d: t.params.d,
                    r: t.params.r,
                    delta: t.params.delta,
                    family: t.family,
                    label: t.label,
                    status: t.status.as_str(),
                })
                .collect(),
            reports: reports.iter().map(ReportJson::from).collect(),
        })
    } else {
        let mut s = format!("{:>4} {:>4} {:>4} {:>3} {:>5}  family  status\n", "n", "k", "d", "r", "delta");
        for t in &tuples {
            let p = t.params;
            s += &format!(
                "{:>4} {:>4} {:>4} {:>3} {:>5}  {:<7} {}\n",
                p.n,
                p.k,
                p.d,
                p.r,
                p.delta,
                t.family,
                t.status
            );
        }
        for r in &reports {
            s += &format!("\n{}: {}\n", r.claim, if r.holds { "holds" } else { "FAILS" });
            for i in &r.items {
                let exp = i.expected.map(|e| format!(" (expected {e})")).unwrap_or_default();
                s += &format!("  {} = {}{}{}\n", i.name, i.value, exp, if i.holds { "" } else { "  FAIL" });
            }
        }
        s
    };
    Ok(Outcome {
        code: if holds { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

#[derive(Serialize)]
struct StepJson {
    group: usize,
    repaired: Vec<usize>,
    reads: Vec<usize>,
}

#[derive(Serialize)]
struct FailureJson {
    group: usize,
    erased: Vec<usize>,
    underdetermined: bool,
}

#[derive(Serialize)]
struct RepairJson {
    family: &'static str,
    params: ParamsJson,
    r: usize,
    delta: usize,
    erased: Vec<usize>,
    seed: u64,
    trials: usize,
    recovered: usize,
    max_reads: usize,
    outcome: &'static str,
    trace: Vec<StepJson>,
    failures: Vec<FailureJson>,
}

fn cmd_repair(a: RepairArgs) -> Result<Outcome> {
    let b = a.family.build()?;
    let pattern = ErasurePattern::new(b.code.n(), &a.erase)?;
    let sum = run_trials(&b, &pattern, a.trials, a.seed)?;
    let trace: Vec<StepJson> = sum
        .first
        .trace()
        .iter()
        .map(|s| StepJson {
            group: s.group,
            repaired: s.repaired.clone(),
            reads: s.reads.clone(),
        })
        .collect();
    let failures: Vec<FailureJson> = match &sum.first {
        RepairOutcome::LocalFailure { groups, .. } => groups
            .iter()
            .map(|g| FailureJson {
                group: g.group,
                erased: g.erased.clone(),
                underdetermined: g.underdetermined,
            })
            .collect(),
        RepairOutcome::Recovered { .. } => Vec::new(),
    };
    let ok = sum.recovered == sum.trials;
    let j = RepairJson {
        family: b.family.id,
        params: b.expected.into(),
        r: b.r,
        delta: b.delta,
        erased: pattern.coords(),
        seed: a.seed,
        trials: sum.trials,
        recovered: sum.recovered,
        max_reads: sum.max_reads,
        outcome: if ok { "recovered" } else { "local_failure" },
        trace,
        failures,
    };
    let stdout = if a.json {
        to_json(&j)
    } else {
        let mut s = format!(
            "{} [{},{},{}] r={} delta={}: erased {:?}\nrecovered {}/{} trials, max reads per solve {}\n",
            j.family, j.params.n, j.params.k, j.params.d, j.r, j.delta, j.erased, j.recovered, j.trials, j.max_reads
        );
        for t in &j.trace {
            s += &format!("  group {} repaired {:?} reading {:?}\n", t.group, t.repaired, t.reads);
        }
        for f in &j.failures {
            let why = if f.underdetermined {
                "local equations are underdetermined".to_string()
            } else {
                format!("{} erasures exceed the local tolerance {}", f.erased.len(), b.delta - 1)
            };
            s += &format!("  local failure in group {}: {:?} ({why})\n", f.group, f.erased);
        }
        s
    };
    Ok(Outcome {
        code: if ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn cmd_pg(a: PgArgs) -> Result<Outcome> {
    if a.m == 0 {
        return Err(Error::Range("m ≥ 1".into()));
    }
    let q = &a.query;
    #[derive(Serialize)]
    struct CountJson {
        m: usize,
        i: usize,
        j: Option<usize>,
        count: u128,
    }
    let count = |i: usize, j: Option<usize>| -> Result<Outcome> {
        if i > a.m || j.is_some_and(|j| j > i) {
            return Err(Error::Range(format!("need 0 ≤ j ≤ i ≤ m = {}", a.m)));
        }
        let c = match j {
            Some(j) => count_subspaces_containing(a.m, i, j),
            None => count_subspaces(a.m, i),
        };
        Ok(Outcome::ok(if a.json {
            to_json(&CountJson { m: a.m, i, j, count: c })
        } else {
            format!("{c}\n")
        }))
    };
    if let Some(i) = q.count_subspaces {
        return count(i, None);
    }
    if let Some(ij) = &q.count_containing {
        return count(ij[0], Some(ij[1]));
    }
    if a.m > 8 {
        return Err(Error::Resource(format!("listing the points of PG({}, 4) is limited to m ≤ 8", a.m - 1)));
    }
    let pts = enumerate_points(a.m);
    let rows: Vec<String> = pts
        .iter()
        .map(|p| p.coords().iter().map(|x| x.symbol()).collect())
        .collect();
    Ok(Outcome::ok(if a.json {
        #[derive(Serialize)]
        struct PointsJson {
            m: usize,
            count: usize,
            points: Vec<String>,
        }
        to_json(&PointsJson {
            m: a.m,
            count: rows.len(),
            points: rows,
        })
    } else {
        let mut s = String::new();
        for r in rows {
            let spaced: Vec<String> = r.chars().map(String::from).collect();
            s += &spaced.join(" ");
            s.push('\n');
        }
        s
    }))
}
