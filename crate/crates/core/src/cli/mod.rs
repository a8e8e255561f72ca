//! Batch command-line frontend.
//!
//! Every subcommand runs one library operation and emits a report
//! `{"command", "config", "result", "status", "elapsed_ms"}` as JSON, or the
//! report's main table as CSV. Exit status is 0 when the run is clean, 1 when
//! a check found a violation and 2 on invalid input.

pub mod render;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{sigma, sigma_pm_closed, CharIndexS};
use crate::cyclotomic::Exact;
use crate::dimensions::{
    commutator_block, compressed_qdq, dirac_spectrum, dirac_trace_power, gk_growth, phi_block_check,
    phi_commuting_check_from, DiracTruncation, FiniteGroup, FiniteRep, PhiTable, ReturnMoments, VilenkinGroup,
};
use crate::error::{Error, Result};
use crate::fourier::{analyze_fast, analyze_naive, indicator_coefficients, synthesize, LevelFunction};
use crate::heisenberg::{enumerate_dual, enumerate_dual_shell, heis_inv, heis_mul, k0_decomposition, k0_synthesize, HeisElement};
use crate::padic::{check_prime, checked_pow, Coset};
use render::{exact, exact_text, float, float_text, phase, phase_text, ratio, Table};

/// Largest group or table size any subcommand will build.
pub const MAX_POINTS: u64 = 1_000_000;

#[derive(Parser, Debug, Clone)]
#[command(name = "vilenkin", version, about = "Harmonic analysis on Z_p and H_d(Z_p) at finite precision")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Omit wall-clock timings so the output is byte-stable.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Character coefficients of the indicator of x + p^r Z_p.
    DecomposeIndicator(DecomposeIndicatorArgs),
    /// Matrix-coefficient expansion of a coset indicator of H_d(Z_p).
    HeisDecompose(HeisDecomposeArgs),
    /// sigma(p^m, n) by closed form and by brute force.
    SigmaTable(SigmaTableArgs),
    /// Naive against fast transform on random inputs, with timings.
    TransformBench(TransformBenchArgs),
    /// Return probabilities and the random-walk dimension estimate.
    RwDim(RwDimArgs),
    /// Eigenvalues and trace of the shell-diagonal Dirac truncation.
    DiracSpectrum(DiracSpectrumArgs),
    /// [D, pi(chi)] for a single character.
    CommutatorCheck(CommutatorCheckArgs),
    /// Compression of D to a coset under random eigenvalue tables.
    QdqCheck(QdqCheckArgs),
    /// dim(V + ... + V^k) for random generator sets.
    GkGrowth(GkGrowthArgs),
    /// Commuting and block checks for an injection table.
    PhiCheck(PhiCheckArgs),
    /// Irreducible classes of H_d(Z/p^n).
    DualEnumerate(DualEnumerateArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DecomposeIndicator(_) => "decompose-indicator",
            Self::HeisDecompose(_) => "heis-decompose",
            Self::SigmaTable(_) => "sigma-table",
            Self::TransformBench(_) => "transform-bench",
            Self::RwDim(_) => "rw-dim",
            Self::DiracSpectrum(_) => "dirac-spectrum",
            Self::CommutatorCheck(_) => "commutator-check",
            Self::QdqCheck(_) => "qdq-check",
            Self::GkGrowth(_) => "gk-growth",
            Self::PhiCheck(_) => "phi-check",
            Self::DualEnumerate(_) => "dual-enumerate",
        }
    }

    fn args_json(&self) -> Value {
        let v = match self {
            Self::DecomposeIndicator(a) => serde_json::to_value(a),
            Self::HeisDecompose(a) => serde_json::to_value(a),
            Self::SigmaTable(a) => serde_json::to_value(a),
            Self::TransformBench(a) => serde_json::to_value(a),
            Self::RwDim(a) => serde_json::to_value(a),
            Self::DiracSpectrum(a) => serde_json::to_value(a),
            Self::CommutatorCheck(a) => serde_json::to_value(a),
            Self::QdqCheck(a) => serde_json::to_value(a),
            Self::GkGrowth(a) => serde_json::to_value(a),
            Self::PhiCheck(a) => serde_json::to_value(a),
            Self::DualEnumerate(a) => serde_json::to_value(a),
        };
        v.expect("argument structs serialize")
    }
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DecomposeIndicatorArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 0)]
    pub x: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct HeisDecomposeArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long)]
    pub r: u32,
    /// Comma-separated x coordinates of v (default all zero).
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub y: Vec<u64>,
    #[arg(long, default_value_t = 0)]
    pub z: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SigmaTableArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub m: u32,
    /// Rows for n = 0..=max-n.
    #[arg(long)]
    pub max_n: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct TransformBenchArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 1)]
    pub trials: u32,
    /// The quadratic transform runs only up to this many points.
    #[arg(long, default_value_t = 16384)]
    pub naive_limit: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    Cyclic,
    Heisenberg,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct RwDimArgs {
    #[arg(long, value_enum, default_value_t = GroupKind::Cyclic)]
    pub group: GroupKind,
    #[arg(long)]
    pub p: u64,
    /// Quotient level: Z/p^n or H_d(Z/p^n).
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Comma-separated positions in the irreducible list (Monna indices for
    /// Z/p^n); repeats add multiplicity.
    #[arg(long, value_delimiter = ',')]
    pub irreps: Vec<usize>,
    /// Use the regular representation instead of --irreps.
    #[arg(long)]
    pub regular: bool,
    #[arg(long, default_value_t = 10_000)]
    pub steps: u64,
    /// How many leading p_n to print exactly.
    #[arg(long, default_value_t = 3)]
    pub show: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DiracSpectrumArgs {
    #[arg(long, value_enum, default_value_t = GroupKind::Cyclic)]
    pub group: GroupKind,
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    #[arg(long, default_value_t = 3)]
    pub shells: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CommutatorCheckArgs {
    #[arg(long)]
    pub p: u64,
    /// The character chi_{m,n}.
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u32,
    /// Basis level L: characters chi_j with j < p^L.
    #[arg(long)]
    pub level: u32,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct QdqCheckArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 0)]
    pub x: u64,
    #[arg(long)]
    pub level: u32,
    /// Number of random eigenvalue tables.
    #[arg(long, default_value_t = 1)]
    pub tables: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GkGrowthArgs {
    #[arg(long)]
    pub p: u64,
    /// Level N of the generators.
    #[arg(long)]
    pub level: u32,
    /// Generators per set: random subsets of Z/p^N.
    #[arg(long, default_value_t = 3)]
    pub gens: usize,
    #[arg(long, default_value_t = 1)]
    pub sets: u32,
    #[arg(long, default_value_t = 8)]
    pub k_max: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiKind {
    Identity,
    Translation,
    Prufer,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct PhiCheckArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub m: u32,
    #[arg(long, value_enum, default_value_t = PhiKind::Translation)]
    pub kind: PhiKind,
    /// Shift multiplier for translation and prufer tables.
    #[arg(long, default_value_t = 1)]
    pub c: u64,
    /// Table size N.
    #[arg(long)]
    pub domain: u64,
    /// Exchange phi at two positions, e.g. --swap 0,4.
    #[arg(long, value_delimiter = ',')]
    pub swap: Option<Vec<u64>>,
    /// First n to check.
    #[arg(long, default_value_t = 0)]
    pub from: u64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DualEnumerateArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long)]
    pub n: u32,
    /// Only the classes of level exactly n.
    #[arg(long)]
    pub shell: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    ViolationFound,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Ok => 0,
            Self::ViolationFound => 1,
            Self::Error => 2,
        }
    }
}

/// What a subcommand computed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub result: Value,
    pub table: Table,
    pub violation: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub result: Value,
    pub status: Status,
    pub elapsed_ms: Option<f64>,
    pub table: Table,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "config": self.config,
            "result": self.result,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms.map(float),
        })
    }

    /// Pretty JSON with a trailing newline. Keys are sorted, so parsing and
    /// re-rendering reproduces the same bytes.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) => "not-prime",
        Error::Mismatch(_) => "mismatch",
        Error::Precision { .. } => "precision",
        Error::Overflow(_) => "overflow",
        Error::Domain(_) => "domain",
        Error::Precondition(_) => "precondition",
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Report {
    let g = &cli.global;
    let mut config = cli.command.args_json();
    if let Value::Object(map) = &mut config {
        map.insert("seed".into(), json!(g.seed));
        map.insert("tol".into(), float(g.tol));
    }
    let start = Instant::now();
    let outcome = execute(&cli.command, g);
    let elapsed = (!g.no_timing).then(|| start.elapsed().as_secs_f64() * 1e3);
    let (result, status, table) = match outcome {
        Ok(o) => {
            let status = if o.violation {
                Status::ViolationFound
            } else {
                Status::Ok
            };
            (o.result, status, o.table)
        }
        Err(e) => (
            json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } }),
            Status::Error,
            Table::default(),
        ),
    };
    Report {
        command: cli.command.name().into(),
        config,
        result,
        status,
        elapsed_ms: elapsed,
        table,
    }
}

/// Parses `args`, runs, writes the payload and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let report = run(&cli);
    if report.status == Status::Error {
        if let Some(msg) = report.result.pointer("/error/message").and_then(Value::as_str) {
            eprintln!("error: {msg}");
        }
    }
    let payload = match cli.global.format {
        Format::Json => report.render_json(),
        Format::Csv if report.status == Status::Error => String::new(),
        Format::Csv => match report.table.to_csv() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, payload.as_bytes()),
        None => std::io::stdout().write_all(payload.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    report.status.exit_code()
}

fn guard(what: &str, size: u64) -> Result<()> {
    if size > MAX_POINTS {
        return Err(Error::Domain(format!("{what} = {size} exceeds the limit of {MAX_POINTS}")));
    }
    Ok(())
}

fn guard_pow(what: &str, p: u64, e: u32) -> Result<u64> {
    check_prime(p)?;
    let size = checked_pow(p, e).map_err(|_| Error::Domain(format!("{what} exceeds the limit of {MAX_POINTS}")))?;
    guard(what, size)?;
    Ok(size)
}

fn execute(cmd: &Command, g: &GlobalOpts) -> Result<Outcome> {
    if !(g.tol > 0.0) {
        return Err(Error::Domain("--tol must be positive".into()));
    }
    match cmd {
        Command::DecomposeIndicator(a) => decompose_indicator(a),
        Command::HeisDecompose(a) => heis_decompose(a),
        Command::SigmaTable(a) => sigma_table(a),
        Command::TransformBench(a) => transform_bench(a, g),
        Command::RwDim(a) => rw_dim(a, g),
        Command::DiracSpectrum(a) => dirac(a),
        Command::CommutatorCheck(a) => commutator_check(a, g),
        Command::QdqCheck(a) => qdq_check(a, g),
        Command::GkGrowth(a) => gk(a, g),
        Command::PhiCheck(a) => phi_check(a),
        Command::DualEnumerate(a) => dual_enumerate(a),
    }
}

fn decompose_indicator(a: &DecomposeIndicatorArgs) -> Result<Outcome> {
    guard_pow("p^r", a.p, a.r)?;
    let coset = Coset::new(a.p, a.r, a.x)?;
    let coefs = indicator_coefficients(&coset);
    let target = LevelFunction::<Exact>::indicator(&coset, a.r)?;
    let back = synthesize(&coefs);
    let exact_match = back.values() == target.values();
    let error = back.to_complex().max_deviation(&target.to_complex())?;

    let mut map = serde_json::Map::new();
    let mut table = Table::new(&["index", "monna", "coefficient"]);
    for (idx, c) in coefs.iter() {
        map.insert(idx.to_string(), exact(c));
        table.push(vec![idx.to_string(), idx.to_monna().0.to_string(), exact_text(c)]);
    }
    Ok(Outcome {
        result: json!({
            "coset": { "p": a.p, "r": a.r, "x": coset.rep() },
            "coefficients": map,
            "reconstruction_error": float(error),
            "reconstruction_exact": exact_match,
        }),
        table,
        violation: !exact_match,
    })
}

fn heis_decompose(a: &HeisDecomposeArgs) -> Result<Outcome> {
    check_prime(a.p)?;
    if a.d == 0 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    let level = a.r.max(1);
    guard_pow("|H_d(Z/p^r)|", a.p, level * (2 * a.d as u32 + 1))?;
    let coord = |v: &[u64]| if v.is_empty() { vec![0; a.d] } else { v.to_vec() };
    let v = HeisElement::new(a.p, level, coord(&a.x), coord(&a.y), a.z)?;
    let terms = k0_decomposition(&v, a.r)?;
    let values = k0_synthesize(&v, a.r)?;
    let v_inv = heis_inv(&v);
    let mut error: f64 = 0.0;
    let mut exact_match = true;
    let mut points = 0u64;
    for (g, val) in HeisElement::all(a.p, a.d, level)?.zip(&values) {
        points += 1;
        let inside = heis_mul(&v_inv, &g)?.in_congruence_subgroup(a.r)?;
        let want = Exact::from_ratio(a.p, (inside as i64).into());
        exact_match &= *val == want;
        error = error.max((val.to_complex() - want.to_complex()).norm());
    }

    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
    let mut table = Table::new(&["zeta", "row", "col", "weight", "phase"]);
    let list: Vec<Value> = terms
        .iter()
        .map(|t| {
            table.push(vec![
                t.zeta.to_string(),
                join(&t.row),
                join(&t.col),
                ratio(&t.weight),
                phase_text(&t.phase),
            ]);
            json!({
                "zeta": t.zeta.to_string(),
                "row": t.row,
                "col": t.col,
                "weight": ratio(&t.weight),
                "phase": phase(&t.phase),
            })
        })
        .collect();
    Ok(Outcome {
        result: json!({
            "v": { "x": v.x(), "y": v.y(), "z": v.z() },
            "term_count": terms.len(),
            "terms": list,
            "points": points,
            "reconstruction_error": float(error),
            "reconstruction_exact": exact_match,
        }),
        table,
        violation: !exact_match,
    })
}

fn sigma_table(a: &SigmaTableArgs) -> Result<Outcome> {
    check_prime(a.p)?;
    guard("max-n", a.max_n)?;
    let pm = checked_pow(a.p, a.m)?;
    let mut table = Table::new(&["n", "sigma_closed", "sigma_brute", "equal"]);
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for n in 0..=a.max_n {
        let closed = sigma_pm_closed(a.p, a.m, n);
        let brute = sigma(a.p, pm, n);
        let eq = closed == brute;
        mismatches += usize::from(!eq);
        table.push(vec![n.to_string(), closed.to_string(), brute.to_string(), eq.to_string()]);
        rows.push(json!({ "n": n, "closed": closed, "brute": brute, "equal": eq }));
    }
    Ok(Outcome {
        result: json!({ "rows": rows, "mismatches": mismatches }),
        table,
        violation: mismatches > 0,
    })
}

fn random_function(rng: &mut ChaCha8Rng, p: u64, level: u32) -> Result<LevelFunction<Complex64>> {
    LevelFunction::from_fn(p, level, |_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn transform_bench(a: &TransformBenchArgs, g: &GlobalOpts) -> Result<Outcome> {
    let size = guard_pow("p^r", a.p, a.r)?;
    if a.trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let inputs: Vec<_> = (0..a.trials)
        .map(|_| random_function(&mut rng, a.p, a.r))
        .collect::<Result<_>>()?;
    let run_naive = size <= a.naive_limit;

    // agreement first, then timing
    let mut max_dev: f64 = 0.0;
    let mut roundtrip: f64 = 0.0;
    for f in &inputs {
        let fast = analyze_fast(f);
        if run_naive {
            max_dev = max_dev.max(fast.max_deviation(&analyze_naive(f))?);
        }
        roundtrip = roundtrip.max(synthesize(&fast).max_deviation(f)?);
    }
    let time = |op: &dyn Fn(&LevelFunction<Complex64>)| {
        let t = Instant::now();
        for f in &inputs {
            op(f);
        }
        t.elapsed().as_secs_f64() * 1e3 / a.trials as f64
    };
    let (fast_ms, naive_ms) = if g.no_timing {
        (None, None)
    } else {
        let fast_ms = time(&|f| {
            std::hint::black_box(analyze_fast(f));
        });
        let naive_ms = run_naive.then(|| {
            time(&|f| {
                std::hint::black_box(analyze_naive(f));
            })
        });
        (Some(fast_ms), naive_ms)
    };
    let agree = max_dev <= g.tol && roundtrip <= g.tol;
    let mut table = Table::new(&["points", "trials", "max_deviation", "roundtrip_error", "naive_ms", "fast_ms"]);
    let opt = |x: Option<f64>| x.map(float_text).unwrap_or_default();
    table.push(vec![
        size.to_string(),
        a.trials.to_string(),
        float_text(max_dev),
        float_text(roundtrip),
        opt(naive_ms),
        opt(fast_ms),
    ]);
    Ok(Outcome {
        result: json!({
            "points": size,
            "trials": a.trials,
            "naive_ran": run_naive,
            "max_deviation": float(max_dev),
            "roundtrip_error": float(roundtrip),
            "agree": agree,
            "naive_ms": naive_ms.map(float),
            "fast_ms": fast_ms.map(float),
        }),
        table,
        violation: !agree,
    })
}

fn rw_dim(a: &RwDimArgs, g: &GlobalOpts) -> Result<Outcome> {
    let group = match a.group {
        GroupKind::Cyclic => {
            guard_pow("|G|", a.p, a.n)?;
            FiniteGroup::cyclic(a.p, a.n)?
        }
        GroupKind::Heisenberg => {
            check_prime(a.p)?;
            guard_pow("|G|", a.p, a.n * (2 * a.d as u32 + 1))?;
            FiniteGroup::heisenberg(a.p, a.d, a.n)?
        }
    };
    if a.steps < 2 {
        return Err(Error::Domain("steps must be at least 2".into()));
    }
    let irreps = group.irreps()?;
    let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
    if a.regular {
        for (i, irrep) in irreps.iter().enumerate() {
            mult.insert(i, irrep.dim() as u32);
        }
    } else {
        if a.irreps.is_empty() {
            return Err(Error::Domain("give --irreps or --regular".into()));
        }
        for &i in &a.irreps {
            if i >= irreps.len() {
                return Err(Error::Domain(format!("irrep position {i} is out of range 0..{}", irreps.len())));
            }
            *mult.entry(i).or_default() += 1;
        }
    }
    let rep = FiniteRep::new(group, mult.iter().map(|(&i, &m)| (irreps[i].clone(), m)).collect())?;

    let mut shown = Vec::new();
    let mut table = Table::new(&["n", "p_n", "trivial_multiplicity"]);
    let mut first_violation = None;
    let mut last = None;
    for m in ReturnMoments::new(&rep)?.take(a.steps as usize) {
        if m.n <= a.show {
            let pn = ratio(&m.p_n());
            let mult = m.trivial_multiplicity().to_string();
            table.push(vec![m.n.to_string(), pn.clone(), mult.clone()]);
            shown.push(json!({ "n": m.n, "p_n": pn, "trivial_multiplicity": mult }));
        }
        if first_violation.is_none() && !m.meets_floor() {
            first_violation = Some(m.n);
        }
        last = Some(m);
    }
    let last = last.expect("at least two steps");
    let raw = -2.0 * last.ln_p() / (a.steps as f64).ln();
    let estimate = if raw.abs() < 1e-15 { 0.0 } else { raw };
    let bound = crate::dimensions::rw_dim_bound(group.order(), a.steps);
    let within = estimate <= bound + g.tol;
    Ok(Outcome {
        result: json!({
            "group": group.to_string(),
            "order": group.order(),
            "dim": rep.dim(),
            "constituents": mult.iter().map(|(&i, &m)| json!({ "irrep": irreps[i].to_string(), "mult": m })).collect::<Vec<_>>(),
            "p_n": shown,
            "floor_holds": first_violation.is_none(),
            "first_floor_violation": first_violation,
            "steps": a.steps,
            "estimate": float(estimate),
            "bound": float(bound),
            "within_bound": within,
        }),
        table,
        violation: first_violation.is_some() || !within,
    })
}

fn dirac(a: &DiracSpectrumArgs) -> Result<Outcome> {
    let group = match a.group {
        GroupKind::Cyclic => VilenkinGroup::Zp { p: a.p },
        GroupKind::Heisenberg => {
            check_prime(a.p)?;
            guard_pow("|H_d(Z/p^N)|", a.p, a.shells * (2 * a.d as u32 + 1))?;
            VilenkinGroup::Heisenberg { p: a.p, d: a.d }
        }
    };
    check_prime(a.p)?;
    let t = DiracTruncation::new(group, a.s, a.shells)?;
    let spectrum = dirac_spectrum(&t);
    let trace = dirac_trace_power(&t);
    let mut table = Table::new(&["shell", "eigenvalue", "multiplicity", "base"]);
    let rows: Vec<Value> = spectrum
        .iter()
        .zip(t.bases())
        .enumerate()
        .map(|(n, ((ev, mult), base))| {
            table.push(vec![n.to_string(), float_text(*ev), mult.to_string(), base.to_string()]);
            json!({ "shell": n, "eigenvalue": float(*ev), "multiplicity": mult, "base": base.to_string() })
        })
        .collect();
    Ok(Outcome {
        result: json!({
            "group": group.to_string(),
            "s": float(a.s),
            "spectrum": rows,
            "trace_partial": ratio(&trace.partial),
            "tail_lower": ratio(&trace.tail_lower),
            "tail_upper": ratio(&trace.tail_upper),
        }),
        table,
        violation: false,
    })
}

fn commutator_check(a: &CommutatorCheckArgs, g: &GlobalOpts) -> Result<Outcome> {
    let size = guard_pow("p^level", a.p, a.level)?;
    guard("matrix size", size * size)?;
    let idx = CharIndexS::new(a.p, a.m, a.n)?;
    let f = LevelFunction::character(&idx, idx.n())?;
    let t = DiracTruncation::new(VilenkinGroup::Zp { p: a.p }, a.s, a.level)?;
    let block = commutator_block(&f, &t, a.level, g.tol)?;
    let vanishes = block.vanishes_beyond(block.shell);
    let mut table = Table::new(&["row", "col", "re", "im"]);
    let mut entries = Vec::new();
    let n = block.size();
    for r in 0..n {
        for c in 0..n {
            let z = block.entry(r, c);
            if z != Complex64::new(0.0, 0.0) {
                table.push(vec![r.to_string(), c.to_string(), float_text(z.re), float_text(z.im)]);
                entries.push(json!({ "row": r, "col": c, "re": float(z.re), "im": float(z.im) }));
            }
        }
    }
    Ok(Outcome {
        result: json!({
            "character": idx.to_string(),
            "shell": block.shell,
            "level": a.level,
            "vanishes_beyond_shell": vanishes,
            "nonzero_entries": entries.len(),
            "max_abs": float(block.max_abs()),
            "entries": entries,
        }),
        table,
        violation: !vanishes,
    })
}

fn qdq_check(a: &QdqCheckArgs, g: &GlobalOpts) -> Result<Outcome> {
    guard_pow("p^(r+level)", a.p, a.r + a.level)?;
    let q = Coset::new(a.p, a.r, a.x)?;
    if a.tables == 0 {
        return Err(Error::Domain("tables must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let labels = CharIndexS::up_to_level(a.p, a.r + a.level);
    let mut max_offdiag: f64 = 0.0;
    let mut max_diag_error: f64 = 0.0;
    let mut indices = Vec::new();
    let mut table = Table::new(&["table", "basis", "diagonal", "closed_form"]);
    let mut first = None;
    for i in 0..a.tables {
        let lambda: BTreeMap<CharIndexS, f64> = labels.iter().map(|&l| (l, rng.gen_range(0.0..10.0))).collect();
        let rep = compressed_qdq(&lambda, &q, a.level)?;
        max_offdiag = max_offdiag.max(rep.max_offdiag);
        max_diag_error = max_diag_error.max(rep.max_diag_error);
        indices.push(rep.index());
        for ((b, d), c) in rep.basis.iter().zip(&rep.diagonal).zip(&rep.closed_form) {
            table.push(vec![i.to_string(), b.to_string(), float_text(*d), float_text(*c)]);
        }
        if first.is_none() {
            first = Some(json!({
                "basis": rep.basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "diagonal": rep.diagonal.iter().map(|&v| float(v)).collect::<Vec<_>>(),
                "closed_form": rep.closed_form.iter().map(|&v| float(v)).collect::<Vec<_>>(),
            }));
        }
    }
    let ok = max_offdiag <= g.tol && max_diag_error <= g.tol;
    Ok(Outcome {
        result: json!({
            "coset": { "p": a.p, "r": a.r, "x": q.rep() },
            "level": a.level,
            "tables": a.tables,
            "max_offdiag": float(max_offdiag),
            "max_diag_error": float(max_diag_error),
            "indices": indices,
            "first_table": first,
            "diagonal": ok,
        }),
        table,
        violation: !ok,
    })
}

/// The largest algebra dimension `gk-growth` will orthogonalize in.
const GK_MAX_POINTS: u64 = 4096;

fn gk(a: &GkGrowthArgs, g: &GlobalOpts) -> Result<Outcome> {
    let size = guard_pow("p^level", a.p, a.level)?;
    if size > GK_MAX_POINTS {
        return Err(Error::Domain(format!("p^level = {size} exceeds the limit of {GK_MAX_POINTS} for gk-growth")));
    }
    if a.gens == 0 || a.sets == 0 || a.k_max == 0 {
        return Err(Error::Domain("gens, sets and k-max must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let mut table = Table::new(&["set", "k", "dim"]);
    let mut reports = Vec::new();
    let mut bad = false;
    for i in 0..a.sets {
        let gens = (0..a.gens)
            .map(|_| {
                LevelFunction::from_fn(a.p, a.level, |_| {
                    Complex64::new(if rng.gen_bool(0.5) { 1.0 } else { 0.0 }, 0.0)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = gk_growth(&gens, a.k_max, g.tol)?;
        for (k, d) in rep.dims.iter().enumerate() {
            table.push(vec![i.to_string(), (k + 1).to_string(), d.to_string()]);
        }
        let ok = rep.is_nondecreasing() && rep.within_bound() && rep.stable_from.is_some();
        bad |= !ok;
        reports.push(json!({
            "dims": rep.dims,
            "stable_from": rep.stable_from,
            "nondecreasing": rep.is_nondecreasing(),
            "within_bound": rep.within_bound(),
            "last_log_ratio": rep.last_log_ratio().map(float),
        }));
    }
    Ok(Outcome {
        result: json!({ "bound": size, "sets": reports }),
        table,
        violation: bad,
    })
}

fn phi_check(a: &PhiCheckArgs) -> Result<Outcome> {
    check_prime(a.p)?;
    guard("domain", a.domain)?;
    let mut phi = match a.kind {
        PhiKind::Identity => PhiTable::identity(a.p, a.domain)?,
        PhiKind::Translation => PhiTable::translation(a.p, a.m, a.c, a.domain)?,
        PhiKind::Prufer => PhiTable::prufer_shift(a.p, a.c, a.domain)?,
    };
    if let Some(s) = &a.swap {
        let [i, j] = s[..] else {
            return Err(Error::Domain("--swap takes two positions, e.g. --swap 0,4".into()));
        };
        phi = phi.with_swapped(i, j)?;
    }
    let comm = phi_commuting_check_from(&phi, a.m, a.from);
    let blocks = phi_block_check(&phi, a.m, a.from);
    let mut table = Table::new(&["check", "index"]);
    for n in &comm.violations {
        table.push(vec!["commuting".into(), n.to_string()]);
    }
    for b in &blocks.split_blocks {
        table.push(vec!["block".into(), b.l.to_string()]);
    }
    Ok(Outcome {
        result: json!({
            "domain": phi.domain(),
            "deficiency_size": phi.deficiency().len(),
            "commuting": {
                "checked": comm.checked,
                "violation_count": comm.violations.len(),
                "violations": comm.violations,
                "passed": comm.passed(),
            },
            "blocks": {
                "checked": blocks.blocks_checked,
                "split": blocks.split_blocks.iter().map(|b| b.l).collect::<Vec<_>>(),
                "passed": blocks.passed(),
            },
        }),
        table,
        violation: !(comm.passed() && blocks.passed()),
    })
}

fn dual_enumerate(a: &DualEnumerateArgs) -> Result<Outcome> {
    check_prime(a.p)?;
    if a.d == 0 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    let order = guard_pow("|H_d(Z/p^n)|", a.p, a.n * (2 * a.d as u32 + 1))?;
    let classes = if a.shell {
        enumerate_dual_shell(a.p, a.d, a.n)?
    } else {
        enumerate_dual(a.p, a.d, a.n)?
    };
    let list_text = |v: &[crate::padic::QpModZpRep]| v.iter().map(|a| ratio(&a.as_ratio())).collect::<Vec<_>>();
    let mut table = Table::new(&["class", "gamma", "alpha", "beta", "dim", "level"]);
    let mut sum_sq = 0u64;
    let list: Vec<Value> = classes
        .iter()
        .map(|z| {
            sum_sq += z.dim() * z.dim();
            table.push(vec![
                z.to_string(),
                ratio(&z.gamma().as_ratio()),
                list_text(z.alpha()).join(";"),
                list_text(z.beta()).join(";"),
                z.dim().to_string(),
                z.level().to_string(),
            ]);
            json!({
                "class": z.to_string(),
                "gamma": ratio(&z.gamma().as_ratio()),
                "alpha": list_text(z.alpha()),
                "beta": list_text(z.beta()),
                "dim": z.dim(),
                "level": z.level(),
            })
        })
        .collect();
    let complete = a.shell || sum_sq == order;
    Ok(Outcome {
        result: json!({
            "count": classes.len(),
            "sum_dim_squared": sum_sq,
            "group_order": order,
            "classes": list,
            "peter_weyl_holds": complete,
        }),
        table,
        violation: !complete,
    })
}
