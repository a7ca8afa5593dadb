use std::fmt::Write as _;
use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use brandt_zeta::arithmetic::locus::LocusJson;
use brandt_zeta::arithmetic::{
    brandt_graph, brandt_matrix, resolve_data_dir, supersingular_locus, validate_brandt,
    BrandtMatrix, Method,
};
use brandt_zeta::correspondence::verify::overall_status;
use brandt_zeta::correspondence::{
    eichler_mass_check, hasse_weil_zeta, table_primes, table_report, verify_brandt,
};
use brandt_zeta::exact::is_prime;
use brandt_zeta::graph::io::{graph_from_json, graph_to_dot, graph_to_json};
use brandt_zeta::report::{Claim, ClaimStatus};
use brandt_zeta::selftest::{run_selftest, DEFAULT_SEED};
use brandt_zeta::zeta::{closed_path_counts, formal_ihara_zeta, ihara_zeta, IharaZeta};
use brandt_zeta::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_USAGE: u8 = 1;
const EXIT_CLAIM: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_OBSTRUCTION: u8 = 4;

#[derive(Parser)]
#[command(name = "brandt-zeta", version, about = "Supersingular graphs, Brandt matrices and their zeta functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the supersingular j-invariants in characteristic N.
    SsEnum {
        #[arg(long = "N", value_parser = parse_characteristic)]
        n: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Check symmetry, row sums and diagonal parity of B(p).
    BrandtValidate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Write B(p), its graph, or one of the zeta functions.
    Emit {
        #[arg(value_enum)]
        kind: EmitKind,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Ihara zeta of a graph file, or the formal zeta of B(p).
    Zeta {
        /// Graph JSON file (`-` for stdin).
        #[arg(long, conflicts_with_all = ["n", "p"])]
        input: Option<PathBuf>,
        #[arg(long = "N", value_parser = parse_characteristic, requires = "p")]
        n: Option<u64>,
        #[arg(long, value_parser = parse_prime, requires = "n")]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Modpoly)]
        method: MethodArg,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        /// Number of closed-path counts listed in text output.
        #[arg(long, default_value_t = 6)]
        terms: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Verify the zeta and spanning-tree identities for (N, p).
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// mu_N(p) and related columns for the primes p <= p-max with n | p+1.
    Table {
        #[arg(long = "N", value_parser = parse_characteristic)]
        n: u64,
        #[arg(long, default_value_t = 29)]
        p_max: u64,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Random property corpus plus the fixed acceptance checks.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitKind {
    Brandt,
    Graph,
    Zeta,
    HasseWeil,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Modpoly,
    Velu2,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Modpoly => Method::ModPoly,
            MethodArg::Velu2 => Method::Velu2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Args)]
struct Source {
    #[arg(long = "N", value_parser = parse_characteristic)]
    n: u64,
    #[arg(long, value_parser = parse_prime)]
    p: u64,
    #[arg(long, value_enum, default_value_t = MethodArg::Modpoly)]
    method: MethodArg,
    /// Modular polynomial directory (overrides BRANDT_ZETA_DATA).
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let v: u64 = s.parse().map_err(|_| format!("'{s}' is not a non-negative integer"))?;
    if !is_prime(v) {
        return Err(format!("{v} is not prime"));
    }
    Ok(v)
}

fn parse_characteristic(s: &str) -> Result<u64, String> {
    let v = parse_prime(s)?;
    if v < 5 {
        return Err(format!("{v} is too small (need a prime N >= 5)"));
    }
    Ok(v)
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::CompositeModulus(_)
            | Error::ModulusTooLarge(_)
            | Error::EvenCharacteristic(_)
            | Error::NotCongruentOneMod12(_)
            | Error::LevelEqualsCharacteristic(_)
            | Error::UnsupportedMethod(_) => EXIT_USAGE,
            Error::MissingModularPolynomial(_)
            | Error::ParseError(_)
            | Error::LevelMismatch { .. }
            | Error::SymmetryViolation(..)
            | Error::MonicityViolation(_)
            | Error::Io(_) => EXIT_DATA,
            Error::ParityObstruction(_) | Error::NotRealizable(_) => EXIT_OBSTRUCTION,
            _ => EXIT_CLAIM,
        };
        let message = match &e {
            Error::ParityObstruction(odd) => {
                let entries: Vec<String> =
                    odd.iter().map(|(i, v)| format!("b[{i}][{i}] = {v}")).collect();
                format!("{e}\noffending diagonal entries: {}", entries.join(", "))
            }
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

type CmdResult = Result<u8, Failure>;

impl Output {
    /// Text for terminals, json otherwise.
    fn resolve(&self, allowed: &[Format]) -> Result<Format, Failure> {
        let f = self.format.unwrap_or(if self.out.is_none() && io::stdout().is_terminal() {
            Format::Text
        } else {
            Format::Json
        });
        if !allowed.contains(&f) {
            let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
            return Err(Failure::usage(format!(
                "format {} is not available here (choose from {})",
                format!("{f:?}").to_lowercase(),
                names.join(", ")
            )));
        }
        Ok(f)
    }

    fn write(&self, body: &str) -> Result<(), Failure> {
        let mut text = body.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| Failure {
                code: EXIT_USAGE,
                message: format!("cannot write {}: {e}", path.display()),
            }),
            None => {
                let mut stdout = io::stdout().lock();
                // a closed pipe is not an error worth reporting
                let _ = stdout.write_all(text.as_bytes());
                Ok(())
            }
        }
    }
}

impl Source {
    fn load(&self) -> Result<BrandtMatrix, Failure> {
        if self.n == self.p {
            return Err(Failure::usage(format!("p must differ from N (both {})", self.n)));
        }
        let dir = resolve_data_dir(self.data_dir.as_deref());
        Ok(brandt_matrix(self.n, self.p, self.method.into(), &dir)?)
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

#[derive(serde::Serialize)]
struct LocusListing<'a> {
    #[serde(flatten)]
    locus: LocusJson,
    mass_check: &'a Claim,
}

fn ss_enum(n: u64, output: &Output) -> CmdResult {
    let format = output.resolve(&[Format::Json, Format::Text])?;
    let locus = supersingular_locus(n)?;
    let mass = eichler_mass_check(n);
    let body = match format {
        Format::Json => {
            pretty(&LocusListing { locus: LocusJson::from(&locus), mass_check: &mass })
        }
        _ => {
            let mut s = format!("N = {n}: {} supersingular j-invariants\n", locus.len());
            for (j, w) in locus.j_invariants().iter().zip(locus.weights()) {
                let (a, b) = j.coords();
                writeln!(s, "  ({a}, {b})  j = {j}  weight {w}").unwrap();
            }
            write!(s, "mass check: {}", mass.status.as_str()).unwrap();
            if !mass.detail.is_empty() {
                write!(s, " ({})", mass.detail).unwrap();
            }
            s
        }
    };
    output.write(&body)?;
    Ok(if mass.status == ClaimStatus::Fail { EXIT_CLAIM } else { 0 })
}

fn brandt_validate(source: &Source, output: &Output) -> CmdResult {
    let format = output.resolve(&[Format::Json, Format::Text])?;
    let b = source.load()?;
    let report = validate_brandt(&b);
    output.write(&match format {
        Format::Json => report.to_json(),
        _ => report.to_text(),
    })?;
    Ok(if report.all_passed() { 0 } else { EXIT_CLAIM })
}

fn matrix_text(b: &BrandtMatrix) -> String {
    let mut s = format!("B({}) for N = {}\n", b.p(), b.characteristic());
    for (k, j) in b.j_invariants().iter().enumerate() {
        let row: Vec<String> = b.matrix().rows()[k].iter().map(ToString::to_string).collect();
        writeln!(s, "  j = {:<12} [{}]", j.to_string(), row.join(" ")).unwrap();
    }
    s
}

fn matrix_csv(b: &BrandtMatrix) -> String {
    let mut s = String::new();
    for row in b.matrix().rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(s, "{}", cells.join(",")).unwrap();
    }
    s
}

fn zeta_text(z: &IharaZeta, counts: Option<Vec<String>>) -> String {
    let mut s = format!("Z(t) = {}\n", z.zeta().display_in("t"));
    writeln!(s, "chi = {}", z.euler_characteristic()).unwrap();
    writeln!(s, "det(I - A t + Q t^2) = {}", z.three_term_determinant().display_in("t")).unwrap();
    if let Some(c) = counts {
        writeln!(s, "N_m, m = 1..{}: {}", c.len(), c.join(", ")).unwrap();
    }
    s
}

fn emit(kind: EmitKind, source: &Source, output: &Output) -> CmdResult {
    let allowed: &[Format] = match kind {
        EmitKind::Brandt => &[Format::Json, Format::Csv, Format::Text],
        EmitKind::Graph => &[Format::Json, Format::Dot, Format::Text],
        EmitKind::Zeta | EmitKind::HasseWeil => &[Format::Json, Format::Text],
    };
    let format = output.resolve(allowed)?;
    let b = source.load()?;
    let body = match kind {
        EmitKind::Brandt => match format {
            Format::Json => pretty(&b.to_json()),
            Format::Csv => matrix_csv(&b),
            _ => matrix_text(&b),
        },
        EmitKind::Graph => {
            let g = brandt_graph(&b)?;
            match format {
                Format::Json => graph_to_json(&g),
                Format::Dot => graph_to_dot(&g, &format!("G_{}_{}", b.characteristic(), b.p())),
                _ => {
                    let loops: usize = (0..g.vertex_count()).map(|v| g.loop_count(v)).sum();
                    format!(
                        "G_{}({}): {} vertices, {} edges ({} loops), {}-regular",
                        b.characteristic(),
                        b.p(),
                        g.vertex_count(),
                        g.geometric_edge_count(),
                        loops,
                        b.p() + 1
                    )
                }
            }
        }
        EmitKind::Zeta => {
            let z = formal_ihara_zeta(b.matrix())?;
            match format {
                Format::Json => pretty(z.zeta()),
                _ => zeta_text(&z, None),
            }
        }
        EmitKind::HasseWeil => {
            let w = hasse_weil_zeta(&b)?;
            match format {
                Format::Json => pretty(w.zeta()),
                _ => {
                    let counts: Vec<String> =
                        w.point_counts(4)?.iter().map(ToString::to_string).collect();
                    format!(
                        "Z(X_0({}) / F_{}, t) = {}\nP(t) = {}\ngenus {}\n#X(F_p^k), k = 1..4: {}",
                        b.characteristic(),
                        b.p(),
                        w.zeta().display_in("t"),
                        w.numerator().display_in("t"),
                        w.genus(),
                        counts.join(", ")
                    )
                }
            }
        }
    };
    output.write(&body)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn zeta(
    input: Option<&PathBuf>,
    n: Option<u64>,
    p: Option<u64>,
    method: MethodArg,
    data_dir: Option<PathBuf>,
    terms: usize,
    output: &Output,
) -> CmdResult {
    let format = output.resolve(&[Format::Json, Format::Text])?;
    let (z, counts) = match (input, n, p) {
        (Some(path), _, _) => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(Error::from)?;
                s
            } else {
                fs::read_to_string(path).map_err(|e| Failure {
                    code: EXIT_DATA,
                    message: format!("cannot read {}: {e}", path.display()),
                })?
            };
            let g = graph_from_json(&text).map_err(|e| Failure::usage(e.to_string()))?;
            let counts = closed_path_counts(&g, terms).iter().map(ToString::to_string).collect();
            (ihara_zeta(&g)?, Some(counts))
        }
        (None, Some(n), Some(p)) => {
            let source = Source { n, p, method, data_dir };
            let b = source.load()?;
            (formal_ihara_zeta(b.matrix())?, None)
        }
        _ => return Err(Failure::usage("give either --input or both --N and --p")),
    };
    output.write(&match format {
        Format::Json => pretty(z.zeta()),
        _ => zeta_text(&z, counts),
    })?;
    Ok(0)
}

fn verify(source: &Source, output: &Output) -> CmdResult {
    let format = output.resolve(&[Format::Json, Format::Text])?;
    let b = source.load()?;
    let report = verify_brandt(&b)?;
    output.write(&match format {
        Format::Json => report.to_json(),
        _ => report.to_text(),
    })?;
    Ok(match overall_status(&report) {
        ClaimStatus::Fail => EXIT_CLAIM,
        _ => 0,
    })
}

fn table(n: u64, p_max: u64, data_dir: Option<PathBuf>, output: &Output) -> CmdResult {
    let format = output.resolve(&[Format::Json, Format::Csv, Format::Text])?;
    let dir = resolve_data_dir(data_dir.as_deref());
    let size = supersingular_locus(n)?.len();
    let report = table_report(n, &table_primes(n, size, p_max), &dir)?;
    output.write(&match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        _ => report.to_text(),
    })?;
    Ok(0)
}

fn selftest(seed: u64, data_dir: Option<PathBuf>, output: &Output) -> CmdResult {
    let format = output.resolve(&[Format::Json, Format::Text])?;
    let dir = resolve_data_dir(data_dir.as_deref());
    let report = run_selftest(seed, &dir);
    output.write(&match format {
        Format::Json => pretty(&report),
        _ => report.to_text(),
    })?;
    Ok(if report.all_passed() { 0 } else { EXIT_CLAIM })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::SsEnum { n, output } => ss_enum(n, &output),
        Command::BrandtValidate { source, output } => brandt_validate(&source, &output),
        Command::Emit { kind, source, output } => emit(kind, &source, &output),
        Command::Zeta { input, n, p, method, data_dir, terms, output } => {
            zeta(input.as_ref(), n, p, method, data_dir, terms, &output)
        }
        Command::Verify { source, output } => verify(&source, &output),
        Command::Table { n, p_max, data_dir, output } => table(n, p_max, data_dir, &output),
        Command::Selftest { seed, data_dir, output } => selftest(seed, data_dir, &output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
