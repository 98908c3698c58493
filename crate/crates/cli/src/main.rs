//! `sqck`: build quaternionic unitary Cayley–Klein algebras, verify their
//! structure and compute `H²`.
//!
//! Exit status: 0 success, 2 usage error, 3 a check or an expected-dimension
//! assertion failed, 4 I/O error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use sqck::ckalgebra::{all_index_subsets, AlgebraLabel};
use sqck::cohomology::{CohomologyReportJson, unitary_h2_formula};
use sqck::exactnum::{format_rational, int, parse_rational};
use sqck::realization::{antihermiticity_check, realization_consistency, realize_generator};
use sqck::*;

#[derive(Parser)]
#[command(name = "sqck", version, about = "Quaternionic unitary Cayley-Klein algebras and their second cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis and bracket table.
    Algebra(Common),
    /// Run structural checks on sq_ω(N+1).
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of jacobi,matrix,grading,reversal,semidirect.
        #[arg(long, value_delimiter = ',', default_value = "jacobi,matrix,grading,reversal,semidirect")]
        checks: Vec<Check>,
    },
    /// Compute dim Z², dim B², dim H² and representative cocycles.
    H2 {
        #[command(flatten)]
        common: Common,
        /// Read the structure constants from a JSON file written by `algebra --emit json`.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["n", "omega"])]
        from: Option<PathBuf>,
    },
    /// Compute H² for every pattern in VALUES^N.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Comma-separated rationals each ω_a ranges over.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        values: String,
        /// Worker threads; defaults to the number of logical cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct Common {
    /// Number of contraction parameters ω_1..ω_N.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated rationals, e.g. `1,0,-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    /// sq, u1, u2, u3 or so.
    #[arg(long, default_value = "sq")]
    family: String,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Write the output here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Check {
    Jacobi,
    Matrix,
    Grading,
    Reversal,
    Semidirect,
}

enum CliError {
    Usage(String),
    Check(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        CliError::Check(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

impl Common {
    fn family(&self) -> Result<Family, CliError> {
        match self.family.parse() {
            Ok(Family::Custom) | Err(_) => {
                Err(CliError::Usage(format!("unknown family '{}': expected sq, u1, u2, u3 or so", self.family)))
            }
            Ok(f) => Ok(f),
        }
    }

    fn pattern(&self) -> Result<OmegaPattern, CliError> {
        let raw = self.omega.as_deref().ok_or_else(|| CliError::Usage("--omega is required".into()))?;
        let p = OmegaPattern::parse(raw).map_err(|e| match e {
            AlgebraError::InvalidRational(tok) => CliError::Usage(format!("invalid rational '{tok}' in --omega")),
            other => CliError::Usage(other.to_string()),
        })?;
        match self.n {
            Some(n) if n != p.n() => Err(CliError::Usage(format!("--n {n} but --omega has {} values", p.n()))),
            _ => Ok(p),
        }
    }

    fn emit(&self, text: &str) -> CliResult {
        match &self.out {
            Some(path) => write_file(path, text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn write_file(path: &Path, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn describe(label: &AlgebraLabel) -> String {
    let omega: Vec<String> = label.omega.iter().map(format_rational).collect();
    format!("{}, N = {}, omega = ({})", label.family.tag(), label.n(), omega.join(","))
}

fn cmd_algebra(common: &Common) -> CliResult {
    let p = common.pattern()?;
    let g = build_family(&p, common.family()?)?;
    if common.emit == Emit::Json {
        return common.emit(&(g.to_json() + "\n"));
    }
    let mut out = String::new();
    writeln!(out, "{}", describe(g.label())).unwrap();
    writeln!(out, "dimension {}", g.dim()).unwrap();
    let names: Vec<String> = g.basis().iter().map(ToString::to_string).collect();
    writeln!(out, "basis {}", names.join(" ")).unwrap();
    for (i, j, terms) in g.nonzero_brackets() {
        let rhs: Vec<String> = terms.iter().map(|(k, c)| format!("({}) {}", format_rational(c), names[*k])).collect();
        writeln!(out, "[{}, {}] = {}", names[i], names[j], rhs.join(" + ")).unwrap();
    }
    for a in p.zero_positions() {
        writeln!(out, "note: omega_{a} = 0, the algebra splits as a semidirect sum at position {a}").unwrap();
    }
    common.emit(&out)
}

fn run_check(check: Check, p: &OmegaPattern, family: Family) -> Result<Result<String, String>, CliError> {
    Ok(match check {
        Check::Jacobi => {
            let g = build_family(p, family)?;
            match verify_jacobi(&g).first() {
                None => Ok(format!("{} triples", g.dim() * g.dim().saturating_sub(1) * g.dim().saturating_sub(2) / 6)),
                Some(v) => Err(format!("triple {:?}, residual {:?}", v.triple, v.residual)),
            }
        }
        Check::Matrix => {
            let g = build_sq(p);
            let violations = realization_consistency(p);
            let skew = g.basis().iter().find(|x| {
                realize_generator(p, x).map_or(true, |m| !antihermiticity_check(p, &m))
            });
            match (violations.first(), skew) {
                (None, None) => Ok(format!("{} generators realized", g.dim())),
                (Some(v), _) => Err(format!("{v:?}")),
                (None, Some(x)) => Err(format!("{x} is not antihermitian")),
            }
        }
        Check::Grading => {
            let g = build_sq(p);
            let subsets = all_index_subsets(p.n());
            match subsets.iter().find_map(|s| grading_automorphism(&g, s).err().map(|e| (s, e))) {
                None => Ok(format!("{} subsets", subsets.len())),
                Some((s, e)) => Err(format!("subset {s:?}: {e}")),
            }
        }
        Check::Reversal => match reversal_isomorphism(p) {
            Ok(_) => Ok(format!("onto omega = ({})", p.reversed())),
            Err(e) => Err(e.to_string()),
        },
        Check::Semidirect => {
            let zeros = p.zero_positions();
            if zeros.is_empty() {
                return Ok(Ok("skipped: no omega_a = 0".into()));
            }
            let mut dims = Vec::new();
            for a in zeros {
                let r = semidirect_analysis(p, a)?;
                if !r.holds() {
                    return Ok(Err(format!("position {a}: {r:?}")));
                }
                dims.push(format!("a = {a}: dim t = {}", r.ideal.len()));
            }
            Ok(dims.join(", "))
        }
    })
}

fn cmd_verify(common: &Common, checks: &[Check]) -> CliResult {
    let p = common.pattern()?;
    let family = common.family()?;
    let mut seen = BTreeSet::new();
    let mut results = Vec::new();
    for &check in checks {
        if seen.insert(format!("{check:?}")) {
            results.push((check, run_check(check, &p, family)?));
        }
    }
    let failed = results.iter().filter(|(_, r)| r.is_err()).count();
    let out = if common.emit == Emit::Json {
        let rows: Vec<serde_json::Value> = results
            .iter()
            .map(|(c, r)| {
                let (status, detail) = match r {
                    Ok(d) if d.starts_with("skipped") => ("skipped", d),
                    Ok(d) => ("pass", d),
                    Err(d) => ("fail", d),
                };
                serde_json::json!({ "check": format!("{c:?}").to_lowercase(), "status": status, "detail": detail })
            })
            .collect();
        serde_json::to_string_pretty(&rows).unwrap() + "\n"
    } else {
        let mut out = format!("sq, N = {}, omega = ({p})\n", p.n());
        for (c, r) in &results {
            let name = format!("{c:?}").to_lowercase();
            match r {
                Ok(d) if d.starts_with("skipped") => writeln!(out, "{name:<11} SKIP  {}", d.trim_start_matches("skipped: ")),
                Ok(d) => writeln!(out, "{name:<11} PASS  {d}"),
                Err(d) => writeln!(out, "{name:<11} FAIL  {d}"),
            }
            .unwrap();
        }
        out
    };
    common.emit(&out)?;
    if failed > 0 {
        return Err(CliError::Check(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn report_text(r: &CohomologyReport, basis: &[GeneratorId]) -> String {
    let mut out = String::new();
    writeln!(out, "{}", describe(&r.algebra_label)).unwrap();
    writeln!(out, "dim Z2 = {}\ndim B2 = {}\ndim H2 = {}", r.dim_z2, r.dim_b2, r.dim_h2).unwrap();
    for (t, xi) in r.representatives.iter().enumerate() {
        let terms: Vec<String> = xi
            .entries()
            .iter()
            .map(|(i, j, v)| format!("xi({}, {}) = {}", basis[*i], basis[*j], format_rational(v)))
            .collect();
        writeln!(out, "representative {}: {}", t + 1, terms.join(", ")).unwrap();
    }
    out
}

fn cmd_h2(common: &Common, from: Option<&Path>) -> CliResult {
    let g = match from {
        Some(path) => {
            let raw = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            StructureConstants::from_json(&raw).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        }
        None => build_family(&common.pattern()?, common.family()?)?,
    };
    let report = h2(&g)?;
    match common.emit {
        Emit::Json => common.emit(&(report.to_json() + "\n")),
        Emit::Text => common.emit(&report_text(&report, g.basis())),
    }
}

#[derive(Serialize)]
struct SweepJson {
    family: String,
    n: usize,
    values: Vec<String>,
    counts: BTreeMap<usize, usize>,
    reports: Vec<CohomologyReportJson>,
}

fn sweep_patterns(values: &[Rational], n: usize) -> Vec<Vec<Rational>> {
    (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect()
    })
}

fn cmd_sweep(common: &Common, values: &str, jobs: Option<usize>) -> CliResult {
    let family = common.family()?;
    let n = common.n.ok_or_else(|| CliError::Usage("--n is required".into()))?;
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let values = values
        .split(',')
        .map(|tok| parse_rational(tok).map_err(|_| CliError::Usage(format!("invalid rational '{}' in --values", tok.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    if values.iter().collect::<BTreeSet<_>>().len() != values.len() {
        return Err(CliError::Usage("--values contains duplicates".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let reports: Vec<Result<CohomologyReport, CliError>> = pool.install(|| {
        sweep_patterns(&values, n)
            .into_par_iter()
            .map(|omega| {
                let p = OmegaPattern::new(omega)?;
                Ok(h2(&build_family(&p, family)?)?)
            })
            .collect()
    });
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;

    let mut counts = BTreeMap::new();
    for r in &reports {
        *counts.entry(r.dim_h2).or_insert(0) += 1;
    }
    let mut violations = Vec::new();
    let mut summary = format!("{} N = {n}: {} patterns\n", family.tag(), reports.len());
    for r in &reports {
        let expected = match family {
            Family::Quaternionic => Some(0),
            Family::Unitary(_) => Some(unitary_h2_formula(r.algebra_label.omega.iter().filter(|w| **w == int(0)).count())),
            _ => None,
        };
        let flag = match expected {
            Some(e) if e != r.dim_h2 => {
                violations.push(describe(&r.algebra_label));
                format!("  MISMATCH (expected {e})")
            }
            _ => String::new(),
        };
        let omega: Vec<String> = r.algebra_label.omega.iter().map(format_rational).collect();
        writeln!(summary, "  ({})  dim H2 = {}{flag}", omega.join(","), r.dim_h2).unwrap();
    }
    for (dim, count) in &counts {
        writeln!(summary, "dim H2 = {dim}: {count} patterns").unwrap();
    }

    let json = SweepJson {
        family: family.tag(),
        n,
        values: values.iter().map(format_rational).collect(),
        counts,
        reports: reports.iter().map(CohomologyReport::to_json_value).collect(),
    };
    let json = serde_json::to_string_pretty(&json).unwrap() + "\n";
    match (common.emit, &common.out) {
        (Emit::Json, None) => print!("{json}"),
        (_, Some(path)) => {
            print!("{summary}");
            write_file(path, &json)?;
        }
        (Emit::Text, None) => print!("{summary}"),
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(format!("{} patterns disagree with the expected dim H2", violations.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Algebra(common) => cmd_algebra(common),
        Command::Verify { common, checks } => cmd_verify(common, checks),
        Command::H2 { common, from } => cmd_h2(common, from.as_deref()),
        Command::Sweep { common, values, jobs } => cmd_sweep(common, values, *jobs),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Usage(m) | CliError::Check(m) | CliError::Io(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.code())
        }
    }
}
