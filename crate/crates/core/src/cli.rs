//! The `smallcover` command line.
//!
//! Every invocation prints records on standard output in the chosen format
//! and diagnostics on standard error. Exit codes: 0 success, 1 failed
//! verification, 2 usage error, 3 enumeration cap exceeded (rerun with
//! `--allow-long-runs`).
//!
//! JSON output is one object per line. Count records carry the keys
//! `quantity`, `polytope`, `value`, `method`, `runtime_ms` in that order,
//! with `value` as a decimal string; CSV uses the same columns. Check records
//! carry `check`, `expected`, `actual`, `pass`.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::caps::Caps;
use crate::counts::{self, BoundSource};
use crate::cover::{self, CubeSymmetry, PolytopeSpec, ReducedMatrix};
use crate::digraph::{self, Digraph};
use crate::dump;
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::parallel::Workers;

#[derive(Debug, Parser)]
#[command(
    name = "smallcover",
    version,
    about = "Count and enumerate small covers over cubes and products of simplices"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Raise the enumeration caps.
    #[arg(long, global = true)]
    allow_long_runs: bool,
    /// Also report stored table values (or brute-force counts) next to computed ones.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form and brute-force counts.
    #[command(subcommand)]
    Count(CountCmd),
    /// Exhaustive enumerations, optionally dumped to a file.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Cross-checks between formulas and brute force.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
enum CountCmd {
    /// D-J classes over a cube or a product of simplices.
    Dj(DjArgs),
    /// Equivariant homeomorphism classes over the n-cube.
    Equivariant {
        n: usize,
        #[arg(long)]
        bruteforce: bool,
    },
    /// Unlabeled acyclic digraphs, the upper bound for weak equivariant classes.
    UnlabeledBound {
        n: usize,
        #[arg(long)]
        compute: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DjArgs {
    #[arg(long)]
    cube: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    simplices: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
enum EnumerateCmd {
    /// Matrices over GF(2) with all principal minors 1.
    Mn {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Labeled acyclic digraphs.
    Dags {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// DAGs ↔ M(n) through B(G) = E + A(G).
    Bijection { n: usize },
    /// Fixed-point counts and orbit counts over the n-cube.
    Burnside { n: usize },
    /// DAG-sum formula against exhaustive search over a product of simplices.
    Product {
        #[arg(value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Stored tables against recomputation.
    Tables,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    DjClasses,
    EquivariantClasses,
    UnlabeledDagBound,
    LabeledDags,
    GlOrder,
    FixedSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Recurrence,
    Bruteforce,
    Table,
}

/// One counted value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    pub quantity: Quantity,
    pub polytope: String,
    pub value: String,
    pub method: Method,
    pub runtime_ms: u64,
}

/// One verification check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckRecord {
    fn new(check: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        CheckRecord {
            check: check.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

enum Output {
    Counts(Vec<CountRecord>),
    Checks(Vec<CheckRecord>),
}

struct Ctx {
    caps: Caps,
    workers: Workers,
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let workers = match Workers::new(usize::from(cli.jobs)) {
        Ok(w) => w,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let ctx = Ctx {
        caps: if cli.allow_long_runs {
            Caps::long_runs()
        } else {
            Caps::default()
        },
        workers,
    };
    let result = match &cli.command {
        Command::Count(c) => count(c, &ctx, cli.verify).map(Output::Counts),
        Command::Enumerate(c) => enumerate(c, &ctx, cli.verify).map(Output::Counts),
        Command::Verify(c) => verify(c, &ctx).map(Output::Checks),
    };
    let output = match result {
        Ok(o) => o,
        Err(CliError::Lib(Error::CapExceeded {
            what,
            requested,
            cap,
        })) => {
            let _ = writeln!(
                stderr,
                "error: {what} = {requested} exceeds the cap {cap}; pass --allow-long-runs to raise it"
            );
            return 3;
        }
        Err(CliError::Lib(e @ Error::Inconsistent(_))) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let (write_result, failed) = match &output {
        Output::Counts(records) => {
            let failed = cli.verify && !values_agree(records);
            if failed {
                let _ = writeln!(stderr, "verification failed: reported values disagree");
            }
            (emit(records, cli.format, stdout), failed)
        }
        Output::Checks(checks) => {
            let failed_checks = checks.iter().filter(|c| !c.pass).count();
            let _ = writeln!(
                stderr,
                "{} of {} checks passed",
                checks.len() - failed_checks,
                checks.len()
            );
            (emit(checks, cli.format, stdout), failed_checks > 0)
        }
    };
    if let Err(e) = write_result {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 2;
    }
    i32::from(failed)
}

fn values_agree(records: &[CountRecord]) -> bool {
    records.windows(2).all(|w| w[0].value == w[1].value)
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn timed<T>(f: impl FnOnce() -> CliResult<T>) -> CliResult<(T, u64)> {
    let start = Instant::now();
    let value = f()?;
    Ok((value, start.elapsed().as_millis() as u64))
}

fn record(
    quantity: Quantity,
    polytope: &PolytopeSpec,
    value: impl ToString,
    method: Method,
    runtime_ms: u64,
) -> CountRecord {
    CountRecord {
        quantity,
        polytope: polytope.to_string(),
        value: value.to_string(),
        method,
        runtime_ms,
    }
}

fn count(cmd: &CountCmd, ctx: &Ctx, verify: bool) -> CliResult<Vec<CountRecord>> {
    match cmd {
        CountCmd::Dj(DjArgs {
            cube: Some(n),
            simplices: None,
        }) => {
            let spec = PolytopeSpec::cube(*n)?;
            let (v, ms) = timed(|| Ok(counts::r_labeled(*n)))?;
            let mut out = vec![record(
                Quantity::DjClasses,
                &spec,
                v,
                Method::Recurrence,
                ms,
            )];
            if verify {
                if let Some(&t) = counts::LABELED_DAG_TABLE.get(*n) {
                    out.push(record(Quantity::DjClasses, &spec, t, Method::Table, 0));
                }
            }
            Ok(out)
        }
        CountCmd::Dj(DjArgs {
            cube: None,
            simplices: Some(dims),
        }) => {
            let spec = PolytopeSpec::simplex_product(dims.clone())?;
            let (v, ms) = timed(|| Ok(counts::dj_product(dims, &ctx.caps)?))?;
            let mut out = vec![record(Quantity::DjClasses, &spec, v, Method::Formula, ms)];
            if verify {
                let (b, ms) = timed(|| {
                    Ok(cover::count_reduced_product(
                        &spec,
                        &ctx.caps,
                        &ctx.workers,
                    )?)
                })?;
                out.push(record(
                    Quantity::DjClasses,
                    &spec,
                    b,
                    Method::Bruteforce,
                    ms,
                ));
            }
            Ok(out)
        }
        CountCmd::Dj(_) => {
            Err(Error::InvalidInput("pass exactly one of --cube, --simplices".into()).into())
        }
        CountCmd::Equivariant { n, bruteforce } => {
            let spec = PolytopeSpec::Cube(*n);
            let mut out = Vec::new();
            if *bruteforce {
                let (v, ms) = timed(|| {
                    Ok(cover::orbit_count_equivariant_bruteforce(
                        *n,
                        &ctx.caps,
                        &ctx.workers,
                    )?)
                })?;
                out.push(record(
                    Quantity::EquivariantClasses,
                    &spec,
                    v,
                    Method::Bruteforce,
                    ms,
                ));
            } else {
                let (v, ms) = timed(|| Ok(counts::q_equivariant(*n)?))?;
                out.push(record(
                    Quantity::EquivariantClasses,
                    &spec,
                    v,
                    Method::Formula,
                    ms,
                ));
            }
            if verify {
                if let Some(&t) = counts::EQUIVARIANT_CLASS_TABLE.get(*n) {
                    out.push(record(
                        Quantity::EquivariantClasses,
                        &spec,
                        t,
                        Method::Table,
                        0,
                    ));
                }
            }
            Ok(out)
        }
        CountCmd::UnlabeledBound { n, compute } => {
            let spec = PolytopeSpec::Cube(*n);
            let tabulated = *n < counts::UNLABELED_DAG_TABLE.len();
            let mut out = Vec::new();
            if *compute || !tabulated {
                let (v, ms) = timed(|| {
                    Ok(counts::t_upper_bound(
                        *n,
                        BoundSource::Computed {
                            caps: &ctx.caps,
                            workers: &ctx.workers,
                        },
                    )?)
                })?;
                out.push(record(
                    Quantity::UnlabeledDagBound,
                    &spec,
                    v,
                    Method::Bruteforce,
                    ms,
                ));
                if verify && tabulated {
                    let t = counts::t_upper_bound(*n, BoundSource::Table)?;
                    out.push(record(
                        Quantity::UnlabeledDagBound,
                        &spec,
                        t,
                        Method::Table,
                        0,
                    ));
                }
            } else {
                let t = counts::t_upper_bound(*n, BoundSource::Table)?;
                out.push(record(
                    Quantity::UnlabeledDagBound,
                    &spec,
                    t,
                    Method::Table,
                    0,
                ));
                if verify {
                    let (v, ms) =
                        timed(|| Ok(digraph::count_unlabeled_dags(*n, &ctx.caps, &ctx.workers)?))?;
                    out.push(record(
                        Quantity::UnlabeledDagBound,
                        &spec,
                        v,
                        Method::Bruteforce,
                        ms,
                    ));
                }
            }
            Ok(out)
        }
    }
}

fn enumerate(cmd: &EnumerateCmd, ctx: &Ctx, verify: bool) -> CliResult<Vec<CountRecord>> {
    let (quantity, n, kind, out) = match cmd {
        EnumerateCmd::Mn { n, out } => (Quantity::DjClasses, *n, "mn", out),
        EnumerateCmd::Dags { n, out } => (Quantity::LabeledDags, *n, "dags", out),
    };
    let spec = PolytopeSpec::Cube(n);
    let (value, ms) = timed(|| {
        Ok(match (kind, out) {
            ("mn", Some(path)) => dump::write_dump(
                path,
                kind,
                &spec.to_string(),
                cover::enumerate_mn(n, &ctx.caps)?,
            )?,
            ("mn", None) => cover::count_mn(n, &ctx.caps, &ctx.workers)?,
            (_, Some(path)) => dump::write_dump(
                path,
                kind,
                &spec.to_string(),
                digraph::enumerate_dags(n, &ctx.caps)?,
            )?,
            (_, None) => digraph::count_dags(n, &ctx.caps, &ctx.workers)?,
        })
    })?;
    let mut records = vec![record(quantity, &spec, value, Method::Bruteforce, ms)];
    if verify {
        let (r, ms) = timed(|| Ok(counts::r_labeled(n)))?;
        records.push(record(quantity, &spec, r, Method::Recurrence, ms));
    }
    Ok(records)
}

fn verify(cmd: &VerifyCmd, ctx: &Ctx) -> CliResult<Vec<CheckRecord>> {
    match cmd {
        VerifyCmd::Bijection { n } => verify_bijection(*n, ctx),
        VerifyCmd::Burnside { n } => verify_burnside(*n, ctx),
        VerifyCmd::Product { dims } => verify_product(dims, ctx),
        VerifyCmd::Tables => verify_tables(ctx),
    }
}

fn verify_bijection(n: usize, ctx: &Ctx) -> CliResult<Vec<CheckRecord>> {
    if n == 0 {
        return Err(Error::InvalidInput("the bijection is checked for n ≥ 1".into()).into());
    }
    let r = counts::r_labeled(n);
    let dags: Vec<Digraph> = digraph::enumerate_dags(n, &ctx.caps)?.collect();
    let mn: BTreeSet<BitMatrix> = cover::enumerate_mn(n, &ctx.caps)?.collect();
    let mut images = BTreeSet::new();
    let mut in_mn = 0u64;
    let mut round_trips = 0u64;
    for g in &dags {
        let b = cover::phi(g)?;
        if b.all_principal_minors_one()? {
            in_mn += 1;
        }
        if cover::phi_inv(&b).as_ref() == Ok(g) {
            round_trips += 1;
        }
        images.insert(b);
    }
    Ok(vec![
        CheckRecord::new(format!("labeled DAGs on {n} nodes = R_{n}"), &r, dags.len()),
        CheckRecord::new(format!("|M({n})| = R_{n}"), &r, mn.len()),
        CheckRecord::new("phi(G) lies in M(n)", dags.len(), in_mn),
        CheckRecord::new("phi is injective", dags.len(), images.len()),
        CheckRecord::new("image of phi equals M(n)", true, images == mn),
        CheckRecord::new("phi_inv(phi(G)) = G", dags.len(), round_trips),
    ])
}

fn verify_burnside(n: usize, ctx: &Ctx) -> CliResult<Vec<CheckRecord>> {
    let fixed = cover::fixed_set_sizes(n, &ctx.caps, &ctx.workers)?;
    let mut checks: Vec<CheckRecord> = fixed
        .iter()
        .map(|(g, size)| {
            let expected = if g.perm().is_identity() {
                counts::reflection_fixed_count(n, g.reflection_count())
            } else {
                BigUint::from(0u8)
            };
            CheckRecord::new(format!("|cf(I^{n})^g| for g = {g}"), expected, size)
        })
        .collect();
    let order = BigUint::from(CubeSymmetry::all(n).len());
    let sizes: Vec<BigUint> = fixed.into_iter().map(|(_, s)| s).collect();
    let q = counts::q_equivariant(n)?;
    checks.push(CheckRecord::new(
        format!("Burnside average = Q_{n}"),
        &q,
        counts::burnside(&sizes, &order)?,
    ));
    checks.push(CheckRecord::new(
        format!("orbit count by canonical minimum = Q_{n}"),
        &q,
        cover::orbit_count_equivariant_bruteforce(n, &ctx.caps, &ctx.workers)?,
    ));
    Ok(checks)
}

fn verify_product(dims: &[usize], ctx: &Ctx) -> CliResult<Vec<CheckRecord>> {
    let spec = PolytopeSpec::simplex_product(dims.to_vec())?;
    let l = dims.len();
    let formula = counts::dj_product(dims, &ctx.caps)?;
    let members: Vec<ReducedMatrix> = cover::enumerate_reduced_product(&spec, &ctx.caps)?.collect();
    let mut checks = vec![CheckRecord::new(
        format!("DAG-sum formula = exhaustive count over {spec}"),
        &formula,
        members.len(),
    )];
    match dims {
        [a, b] => checks.push(CheckRecord::new(
            "two-factor closed form",
            counts::dj_two_factor_closed_form(*a, *b),
            &formula,
        )),
        [a, b, c] => checks.push(CheckRecord::new(
            "three-factor closed form",
            counts::dj_three_factor_closed_form(*a, *b, *c),
            &formula,
        )),
        _ => {}
    }
    // fiber sizes of ψ
    let mut fibers = std::collections::BTreeMap::<Digraph, u64>::new();
    for m in &members {
        *fibers.entry(cover::psi(m)).or_default() += 1;
    }
    for g in digraph::enumerate_dags(l, &ctx.caps)? {
        let expected = g
            .outdegrees()
            .iter()
            .zip(dims)
            .fold(BigUint::from(1u8), |acc, (&deg, &d)| {
                acc * ((BigUint::from(1u8) << d) - 1u8).pow(deg as u32)
            });
        let actual = fibers.get(&g).copied().unwrap_or(0);
        checks.push(CheckRecord::new(format!("|psi^-1({g})|"), expected, actual));
    }
    // full candidate space, when small enough
    let n = spec.dim();
    if n * l <= 16 {
        let identity = BitMatrix::identity(n)?;
        let mut disagreements = 0u64;
        for k in 0..1u64 << (n * l) {
            let rows = (0..n).map(|r| (k >> (r * l)) & ((1 << l) - 1)).collect();
            let star = BitMatrix::from_rows(l, rows)?;
            let by_minors = cover::nonsingular_product_check(&star, &spec)?;
            let by_vertices = cover::is_characteristic(&identity.hstack(&star)?, &spec)?;
            if by_minors != by_vertices {
                disagreements += 1;
            }
        }
        checks.push(CheckRecord::new(
            "minor test agrees with vertex test on every candidate",
            0,
            disagreements,
        ));
    }
    Ok(checks)
}

fn verify_tables(ctx: &Ctx) -> CliResult<Vec<CheckRecord>> {
    let mut checks = Vec::new();
    for (n, &t) in counts::LABELED_DAG_TABLE.iter().enumerate() {
        checks.push(CheckRecord::new(
            format!("R_{n} recurrence"),
            t,
            counts::r_labeled(n),
        ));
    }
    for (n, &t) in counts::EQUIVARIANT_CLASS_TABLE.iter().enumerate() {
        checks.push(CheckRecord::new(
            format!("Q_{n} formula"),
            t,
            counts::q_equivariant(n)?,
        ));
    }
    for (n, &t) in counts::LABELED_DAG_TABLE.iter().enumerate() {
        if (1..=ctx.caps.mn_size.min(ctx.caps.dag_nodes)).contains(&n) && n <= 5 {
            checks.push(CheckRecord::new(
                format!("|M({n})| by enumeration"),
                t,
                cover::count_mn(n, &ctx.caps, &ctx.workers)?,
            ));
        }
    }
    for (n, &t) in counts::UNLABELED_DAG_TABLE.iter().enumerate() {
        if n <= ctx.caps.dag_nodes {
            checks.push(CheckRecord::new(
                format!("unlabeled DAGs on {n} nodes by canonical forms"),
                t,
                digraph::count_unlabeled_dags(n, &ctx.caps, &ctx.workers)?,
            ));
        }
        if n <= ctx.caps.mn_size.min(5) {
            checks.push(CheckRecord::new(
                format!("S_{n} conjugation orbits on M({n})"),
                t,
                cover::sn_conjugation_orbit_count(n, &ctx.caps, &ctx.workers)?,
            ));
        }
    }
    for l in 1..=ctx.caps.dag_nodes.min(5) {
        checks.push(CheckRecord::new(
            format!("DAG-sum formula over {l} intervals = R_{l}"),
            counts::r_labeled(l),
            counts::dj_product(&vec![1; l], &ctx.caps)?,
        ));
    }
    Ok(checks)
}

trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

impl Row for CountRecord {
    fn header() -> &'static [&'static str] {
        &["quantity", "polytope", "value", "method", "runtime_ms"]
    }

    fn cells(&self) -> Vec<String> {
        let name = |v: &dyn erased::Name| v.name();
        vec![
            name(&self.quantity),
            self.polytope.clone(),
            self.value.clone(),
            name(&self.method),
            self.runtime_ms.to_string(),
        ]
    }
}

impl Row for CheckRecord {
    fn header() -> &'static [&'static str] {
        &["check", "expected", "actual", "pass"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            self.expected.clone(),
            self.actual.clone(),
            if self.pass { "PASS" } else { "FAIL" }.to_string(),
        ]
    }
}

mod erased {
    use serde::Serialize;

    /// The serde name of a unit enum variant.
    pub trait Name {
        fn name(&self) -> String;
    }

    impl<T: Serialize> Name for T {
        fn name(&self) -> String {
            match serde_json::to_value(self) {
                Ok(serde_json::Value::String(s)) => s,
                other => format!("{other:?}"),
            }
        }
    }
}

fn emit<R: Row>(rows: &[R], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            out.write_all(&bytes)?;
        }
        Format::Table => {
            let header: Vec<String> = R::header().iter().map(|s| s.to_string()).collect();
            let body: Vec<Vec<String>> = rows.iter().map(Row::cells).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    body.iter()
                        .map(|r| r[c].chars().count())
                        .chain([header[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for line in std::iter::once(&header).chain(&body) {
                let cells: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &w)| format!("{cell:<w$}"))
                    .collect();
                writeln!(out, "{}", cells.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}
