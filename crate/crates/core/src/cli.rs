//! Command-line front end. Every subcommand builds a [`Report`], prints it
//! once (text or JSON) and exits 0 when all checks pass, 1 when a check
//! fails, 2 on usage or precondition errors.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{find_zero_divisor_pair, signature, AlgebraKind, StructureTable};
use crate::derivation::{
    derivation_basis, is_automorphism, is_derivation, signed_permutation_automorphisms, LinearMap7,
};
use crate::identities::{check_associativity, check_identities};
use crate::numeric::{
    dirac_at, dt_b_magnitude, evaluate_df_with, plane_wave_em, AnalyticField, DerivativeMode, GroupResiduals,
    SampleConfig,
};
use crate::report::{Check, DecompositionPair, Report, RunConfig};
use crate::symbolic::verify_expansion;
use crate::tolerances;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const CLOSURE_SAMPLES: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "octomax", version, about = "Octonion and split-octonion checks of the Maxwell decomposition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the multiplication table and audit its structure.
    Table(TableArgs),
    /// Exact alternativity, Moufang and norm-multiplicativity suite.
    Identities(IdentitiesArgs),
    /// Expand ∂F symbolically and compare with the vector-calculus form.
    Expand(ExpandArgs),
    /// Evaluate ∂F on a plane wave in both algebras.
    Planewave(PlaneWaveArgs),
    /// Derivation algebra dimension, basis, and automorphism checks.
    Derivations(DerivationsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Split,
    Octonion,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Split => AlgebraKind::SplitOctonion,
            AlgebraArg::Octonion => AlgebraKind::Octonion,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value = "split")]
    pub algebra: AlgebraArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: Common,
    /// Negative control: flip the sign of e_I e_J before auditing.
    #[arg(long, hide = true, value_parser = parse_index_pair)]
    pub flip_sign: Option<(usize, usize)>,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Also require full associativity (expected to fail; prints the associator witness).
    #[arg(long)]
    pub expect_associativity: bool,
    #[arg(long, hide = true, value_parser = parse_index_pair)]
    pub flip_sign: Option<(usize, usize)>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub common: Common,
    /// Include the scalar field S as the e7 coefficient of F.
    #[arg(long = "with-S")]
    pub with_s: bool,
    /// Include a real part F0 (magnetic sources).
    #[arg(long = "with-F0")]
    pub with_f0: bool,
}

#[derive(Debug, Args)]
pub struct PlaneWaveArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value = "0,0,1", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub k: [f64; 3],
    #[arg(long, default_value = "1,0,0", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub eps: [f64; 3],
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub points: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Sampling box LO,HI applied to each of t, x, y, z.
    #[arg(long, default_value = "-10,10", value_parser = parse_bounds, allow_hyphen_values = true)]
    pub bounds: (f64, f64),
    /// Split-algebra residual tolerance per group.
    #[arg(long, default_value_t = tolerances::IDENTITY_RESIDUAL, value_parser = parse_positive)]
    pub tol: f64,
    /// Minimum octonion q_vec residual.
    #[arg(long, default_value_t = tolerances::DISCRIMINATION_FLOOR, value_parser = parse_positive)]
    pub floor: f64,
    /// Evaluate the zero field instead of a plane wave.
    #[arg(long)]
    pub zero_field: bool,
    /// Debug: fourth-order central differences instead of analytic derivatives.
    #[arg(long)]
    pub finite_difference: bool,
}

#[derive(Debug, Args)]
pub struct DerivationsArgs {
    #[command(flatten)]
    pub common: Common,
}

fn parse_index_pair(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected I,J, got {s:?}"));
    };
    let parse = |v: &str| -> Result<usize, String> {
        let n: usize = v.trim().parse().map_err(|e| format!("{v:?}: {e}"))?;
        if (1..=7).contains(&n) {
            Ok(n)
        } else {
            Err(format!("index {n} outside 1..=7"))
        }
    };
    Ok((parse(a)?, parse(b)?))
}

fn parse_floats(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|v| {
            let x: f64 = v.trim().parse().map_err(|e| format!("{v:?}: {e}"))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(format!("{v:?} is not finite"))
            }
        })
        .collect()
}

fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let v = parse_floats(s)?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected 3 components, got {}", v.len()))
}

fn parse_bounds(s: &str) -> Result<(f64, f64), String> {
    match parse_floats(s)?.as_slice() {
        [lo, hi] if lo < hi => Ok((*lo, *hi)),
        [_, _] => Err("bounds must satisfy LO < HI".into()),
        v => Err(format!("expected LO,HI, got {} values", v.len())),
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{s:?}: {e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s} must be a positive number"))
    }
}

/// What a run produced: stdout text, optional stderr diagnostics, exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
    pub report: Option<Report>,
}

impl Outcome {
    fn from_report(report: Report, format: Format, text: String) -> Self {
        let exit_code = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
        let stdout = match format {
            Format::Json => report.to_json() + "\n",
            Format::Text => text + &report.render_checks(),
        };
        Self { stdout, stderr: String::new(), exit_code, report: Some(report) }
    }

    fn usage(message: String) -> Self {
        Self { stdout: String::new(), stderr: message, exit_code: EXIT_USAGE, report: None }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                // --help / --version
                Outcome { stdout: rendered, stderr: String::new(), exit_code: EXIT_PASS, report: None }
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Table(a) => cmd_table(&a),
        Command::Identities(a) => cmd_identities(&a),
        Command::Expand(a) => cmd_expand(&a),
        Command::Planewave(a) => cmd_planewave(&a),
        Command::Derivations(a) => cmd_derivations(&a),
    }
}

fn base_config(common: &Common) -> RunConfig {
    RunConfig {
        algebra: Some(AlgebraKind::from(common.algebra).name().to_string()),
        format: common.format.name().to_string(),
        ..Default::default()
    }
}

fn table_for(kind: AlgebraKind, flip: Option<(usize, usize)>, config: &mut RunConfig) -> StructureTable {
    let table = kind.table();
    match flip {
        Some((i, j)) => {
            config.extra.insert("flip_sign".into(), serde_json::json!([i, j]));
            table.with_flipped_sign(i, j)
        }
        None => table,
    }
}

fn list_or_ok(v: &[String]) -> String {
    if v.is_empty() {
        "ok".into()
    } else {
        v.join("; ")
    }
}

pub fn cmd_table(args: &TableArgs) -> Outcome {
    let kind = AlgebraKind::from(args.common.algebra);
    let mut config = base_config(&args.common);
    let table = table_for(kind, args.flip_sign, &mut config);
    let audit = table.audit();
    let mut report = Report::new("table", kind.name(), config);
    report.checks.push(Check::new("anticommutativity", audit.anticommutativity.is_empty(), list_or_ok(&audit.anticommutativity)));
    report.checks.push(Check::new("closure", audit.closure.is_empty(), list_or_ok(&audit.closure)));
    report.checks.push(Check::new("diagonal_signs", audit.diagonal.is_empty(), list_or_ok(&audit.diagonal)));
    let signature_line = if args.flip_sign.is_none() {
        let (p, n) = signature(kind);
        report.notes.push(format!("norm signature ({p},{n})"));
        format!("norm signature ({p},{n})\n")
    } else {
        String::new()
    };
    report.table = Some(
        (1..=7)
            .map(|i| {
                (1..=7)
                    .map(|j| {
                        let e = table.entry(i, j);
                        let s = if e.sign < 0 { "-" } else { "+" };
                        if e.result == 0 {
                            format!("{s}1")
                        } else {
                            format!("{s}e{}", e.result)
                        }
                    })
                    .collect()
            })
            .collect(),
    );
    let text = format!(
        "{} multiplication table, row e_i times column e_j\n{}{signature_line}",
        kind.name(),
        table.render()
    );
    Outcome::from_report(report, args.common.format, text)
}

pub fn cmd_identities(args: &IdentitiesArgs) -> Outcome {
    let kind = AlgebraKind::from(args.common.algebra);
    let mut config = base_config(&args.common);
    config.trials = Some(args.trials as usize);
    config.seed = Some(args.seed);
    config.extra.insert("expect_associativity".into(), args.expect_associativity.into());
    let table = table_for(kind, args.flip_sign, &mut config);
    let trials = args.trials as usize;
    let suite = match check_identities(&table, trials, args.seed) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let mut report = Report::new("identities", kind.name(), config);
    for r in &suite.results {
        let detail = match &r.witness {
            None => format!("{} trials", r.trials),
            Some(w) => format!("{} of {} trials failed; first: {w}", r.failures, r.trials),
        };
        report.checks.push(Check::new(r.name.clone(), r.passed, detail));
    }
    let assoc = check_associativity(&table, trials, args.seed).expect("trials >= 1");
    let witness = assoc.witness.clone().unwrap_or_else(|| "no counterexample found".into());
    if args.expect_associativity {
        report.checks.push(Check::new("associativity", assoc.passed, witness));
    } else {
        report.notes.push(format!("associativity fails as expected: {witness}"));
    }
    if kind == AlgebraKind::SplitOctonion && args.flip_sign.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let found = find_zero_divisor_pair(kind, &mut rng, 20_000);
        let detail = found
            .as_ref()
            .map(|(x, y)| format!("x = {x}, y = {y}, N(x) = 0, xy = 0"))
            .unwrap_or_else(|| "none found in span{1, e7}".into());
        report.checks.push(Check::new("zero_divisors", found.is_some(), detail));
    }
    let text = format!(
        "exact identity suite, {} algebra, {} trials, seed {}\n",
        kind.name(),
        trials,
        args.seed
    );
    Outcome::from_report(report, args.common.format, text)
}

pub fn cmd_expand(args: &ExpandArgs) -> Outcome {
    let kind = AlgebraKind::from(args.common.algebra);
    let mut config = base_config(&args.common);
    config.with_s = Some(args.with_s);
    config.with_f0 = Some(args.with_f0);
    let verdict = verify_expansion(kind, args.with_s, args.with_f0);
    let mut report = Report::new("expand", kind.name(), config);
    for ((name, a), (_, b)) in verdict.computed.components().iter().zip(verdict.expected.components().iter()) {
        let detail = if a == b { format!("{a}") } else { format!("computed {a}, expected {b}") };
        report.checks.push(Check::new(format!("component {name}"), a == b, detail));
    }
    report.decomposition = Some(DecompositionPair {
        computed: verdict.computed.to_json(),
        expected: verdict.expected.to_json(),
    });

    let mut f = String::from("Ex e1 + Ey e2 + Ez e4 + Bx e3 + By e6 + Bz e5");
    if args.with_s {
        f.push_str(" + S e7");
    }
    if args.with_f0 {
        f.push_str(" + F0");
    }
    match kind {
        AlgebraKind::SplitOctonion => {
            report.notes.push(if args.with_s {
                "dF = 0 <=> div E = d_t S, curl E + d_t B = 0, div B = 0, -curl B + d_t E = grad S \
                 (charge density rho = d_t S, current density j = grad S)"
                    .into()
            } else {
                "dF = 0 <=> div E = 0, curl E = -d_t B, div B = 0, curl B = d_t E (vacuum Maxwell)".into()
            });
        }
        AlgebraKind::Octonion => {
            report.notes.push(
                "upper sign: q_vec = curl E - d_t B, so dF = 0 is NOT Faraday's law".into(),
            );
            if args.with_s {
                report.notes.push("upper sign also flips the d_t S term of the scalar part".into());
            }
        }
    }
    if args.with_f0 {
        report.notes.push(
            "F0 terms (grad F0 in q_vec, d_t F0 in e7_part) are a derived extension carrying magnetic sources".into(),
        );
    }
    let text = format!(
        "dF for the {} algebra, F = {f}\n\ncomputed (table product):\n{}\nexpected (vector calculus):\n{}\n{}\n",
        kind.name(),
        indent(&verdict.computed.render()),
        indent(&verdict.expected.render()),
        report.notes.iter().map(|n| format!("note: {n}\n")).collect::<String>(),
    );
    Outcome::from_report(report, args.common.format, text)
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

pub fn cmd_planewave(args: &PlaneWaveArgs) -> Outcome {
    let field = if args.zero_field {
        AnalyticField::zero()
    } else {
        match plane_wave_em(args.k, args.eps) {
            Ok(f) => f,
            Err(e) => return Outcome::usage(format!("error: {e}\n")),
        }
    };
    let sample = SampleConfig { seed: args.seed, points: args.points as usize, bounds: args.bounds };
    let pts = sample.sample();
    let mode = if args.finite_difference {
        DerivativeMode::CentralDifference { step: tolerances::FD_STEP }
    } else {
        DerivativeMode::Analytic
    };

    let mut config = RunConfig {
        seed: Some(args.seed),
        points: Some(args.points as usize),
        format: args.format.name().into(),
        ..Default::default()
    };
    config.tolerances.insert("split_residual".into(), args.tol);
    config.tolerances.insert("discrimination_floor".into(), args.floor);
    config.extra.insert("k".into(), serde_json::json!(args.k));
    config.extra.insert("eps".into(), serde_json::json!(args.eps));
    config.extra.insert("bounds".into(), serde_json::json!([args.bounds.0, args.bounds.1]));
    config.extra.insert("zero_field".into(), args.zero_field.into());
    config.extra.insert("finite_difference".into(), args.finite_difference.into());

    let mut residuals = BTreeMap::new();
    let mut report = Report::new("planewave", "split+octonion", config);
    for kind in [AlgebraKind::SplitOctonion, AlgebraKind::Octonion] {
        let mut r = evaluate_df_with(kind, &field, &pts, mode).expect("points >= 1");
        r.seed = Some(args.seed);
        residuals.insert(kind.name().to_string(), r);
    }
    let split = residuals["split"].max_abs;
    let oct = residuals["octonion"].max_abs;

    if args.zero_field {
        let zero = split == GroupResiduals::default() && oct == GroupResiduals::default();
        report.checks.push(Check::new("zero_field_residuals", zero, "all groups exactly 0 in both algebras"));
    } else {
        for (group, v) in split.named() {
            report.checks.push(Check::new(
                format!("split {group}"),
                v <= args.tol,
                format!("max |residual| = {v:.3e} (tol {:.0e})", args.tol),
            ));
        }
    }
    if args.zero_field {
        report.checks.push(Check::skipped("octonion discrimination", "zero field has no d_t B"));
    } else {
        report.checks.push(Check::new(
            "octonion discrimination",
            oct.q_vec >= args.floor,
            format!("max |q_vec| = {:.6} (floor {})", oct.q_vec, args.floor),
        ));
        let worst = pts
            .iter()
            .map(|p| {
                let q = GroupResiduals::of(&dirac_at(AlgebraKind::Octonion, &field, p, DerivativeMode::Analytic)).q_vec;
                (q - 2.0 * dt_b_magnitude(&field, p)).abs()
            })
            .fold(0.0f64, f64::max);
        report.checks.push(Check::new(
            "octonion q_vec = 2|d_t B|",
            worst <= args.tol,
            format!("max pointwise gap {worst:.3e}"),
        ));
    }
    let mut text = format!(
        "plane wave k = {:?}, eps = {:?}{}, {} points, seed {}\n",
        args.k,
        args.eps,
        if args.zero_field { " (zero field)" } else { "" },
        args.points,
        args.seed
    );
    for (name, r) in &residuals {
        text.push_str(&format!("  {name:>8}:"));
        for (g, v) in r.max_abs.named() {
            text.push_str(&format!(" {g} {v:.3e}"));
        }
        if let Some(est) = r.richardson_estimate {
            text.push_str(&format!(" (richardson {est:.1e})"));
        }
        text.push('\n');
    }
    report.residuals = Some(residuals);
    Outcome::from_report(report, args.format, text)
}

pub fn cmd_derivations(args: &DerivationsArgs) -> Outcome {
    let kind = AlgebraKind::from(args.common.algebra);
    let basis = derivation_basis(&kind.table());
    let dimension = basis.len();
    let mut report = Report::new("derivations", kind.name(), base_config(&args.common));
    report.checks.push(Check::new("dimension", dimension == 14, format!("{dimension} (g2 has 14)")));
    let bad: Vec<usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, d)| !is_derivation(kind, d).holds)
        .map(|(i, _)| i)
        .collect();
    report.checks.push(Check::new(
        "basis are derivations",
        bad.is_empty(),
        if bad.is_empty() { format!("all {dimension} verified") } else { format!("failing: {bad:?}") },
    ));
    report.checks.push(Check::new(
        "identity is automorphism",
        is_automorphism(kind, &LinearMap7::identity()).holds,
        "",
    ));
    let swap = is_automorphism(kind, &LinearMap7::swap(1, 2));
    report.checks.push(Check::new(
        "e1<->e2 swap rejected",
        !swap.holds,
        swap.failures.first().cloned().unwrap_or_default(),
    ));
    let autos = signed_permutation_automorphisms(kind);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut failures = 0;
    for _ in 0..CLOSURE_SAMPLES {
        let s = &autos[rng.gen_range(0..autos.len())];
        let u = &autos[rng.gen_range(0..autos.len())];
        failures += usize::from(!is_automorphism(kind, s).holds);
        failures += usize::from(!is_automorphism(kind, &s.compose(u)).holds);
    }
    report.checks.push(Check::new(
        "automorphism closure",
        failures == 0 && autos.len() > 1,
        format!(
            "{} signed-permutation automorphisms; {CLOSURE_SAMPLES} sampled pairs and their compositions re-verified, {failures} failures",
            autos.len()
        ),
    ));
    report.dimension = Some(dimension);
    report.basis = Some(basis.iter().map(LinearMap7::to_strings).collect());

    let mut text = format!("derivations of the {} algebra: dimension {dimension}\n", kind.name());
    for (n, d) in basis.iter().enumerate() {
        text.push_str(&format!("D{n}:\n{d:?}"));
    }
    Outcome::from_report(report, args.common.format, text)
}

/// Entry point used by the binary.
pub fn main_from_env() -> i32 {
    let outcome = run_args(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_args(std::iter::once("octomax").chain(args.iter().copied()))
    }

    #[test]
    fn parsers() {
        assert_eq!(parse_vec3("0,-1.5,2").unwrap(), [0.0, -1.5, 2.0]);
        assert!(parse_vec3("1,2").is_err());
        assert!(parse_vec3("1,nan,2").is_err());
        assert_eq!(parse_bounds("-10,10").unwrap(), (-10.0, 10.0));
        assert!(parse_bounds("1,1").is_err());
        assert_eq!(parse_index_pair("3,5").unwrap(), (3, 5));
        assert!(parse_index_pair("0,5").is_err());
        assert!(parse_positive("0").is_err());
    }

    #[test]
    fn trials_zero_is_usage_error() {
        let o = run(&["identities", "--trials", "0"]);
        assert_eq!(o.exit_code, EXIT_USAGE);
        assert!(o.stderr.contains("trials"));
    }

    #[test]
    fn unknown_algebra_is_usage_error() {
        assert_eq!(run(&["table", "--algebra", "quaternion"]).exit_code, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let o = run(&["--help"]);
        assert_eq!(o.exit_code, EXIT_PASS);
        assert!(o.stdout.contains("planewave"));
    }
}
