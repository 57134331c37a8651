mod suites;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cubic_zeta::analytic::{check_density_rows, density_report, DensityRow, GAUGE_CONSTANT};
use cubic_zeta::enumerate::{disc_bound, write_jsonl, ClassCatalog, ClassRecord};
use cubic_zeta::qrt3::Q;
use cubic_zeta::series::{build_series, diff_tables, render_table, Convention, Side};
use cubic_zeta::{Error, LatticeId, Sign};

use crate::suites::{run_suite, Perturbation, Suite, SuiteOptions};

const SCHEMA: &str = "schema:1";

#[derive(Parser, Debug)]
#[command(name = "cubic-zeta", version, about = "Orbits of binary cubic forms in invariant lattices")]
struct Cli {
    /// Print the compiled-in reference tables and exit.
    #[arg(long)]
    dump_golden: bool,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Primary,
    Alternative,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One record per orbit with 1 <= n <= max.
    Enumerate {
        #[arg(long, value_parser = parse_lattice)]
        lattice: LatticeId,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Dirichlet coefficients as CSV.
    Coeffs {
        #[arg(long, value_parser = parse_lattice)]
        lattice: LatticeId,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long)]
        max: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Computed coefficient table of one side, diffed against the reference.
    Table {
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "primary")]
        convention: ConventionArg,
    },
    /// Runs a verification suite; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Index bound for relations/lambda (default 5000), oracle (300), density (10^6).
        #[arg(long)]
        max: Option<u64>,
        /// Oracle box half-width (default max(40, max/4 + 5)).
        #[arg(long)]
        oracle_box: Option<i64>,
        /// Oracle stabilizer search bound (default 10 (1 + max |x_i|)).
        #[arg(long)]
        stab_bound: Option<i64>,
        /// Adds 1 to one coefficient before checking, as `LATTICE,SIGN,N`.
        #[arg(long, hide = true, value_parser = parse_perturbation)]
        perturb: Option<Perturbation>,
    },
    /// Class counts below evenly spaced checkpoints against the asymptotic.
    Density {
        #[arg(long, value_parser = parse_lattice)]
        lattice: LatticeId,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 10)]
        checkpoints: u64,
        /// Largest accepted --max.
        #[arg(long, default_value_t = 10_000_000)]
        max_bound: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_lattice(s: &str) -> Result<LatticeId, String> {
    let i: u8 = s.trim_start_matches(['L', 'l']).parse().map_err(|e| format!("{e}"))?;
    LatticeId::new(i).map_err(|e| e.to_string())
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_perturbation(s: &str) -> Result<Perturbation, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [l, sign, n] = parts[..] else { return Err("expected LATTICE,SIGN,N".into()) };
    Ok(Perturbation {
        lattice: parse_lattice(l)?,
        sign: parse_sign(sign)?,
        n: n.parse().map_err(|e| format!("{e}"))?,
    })
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(m) => Failure::Usage(m),
            other => Failure::Check(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(format!("i/o: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Check(format!("csv: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn positive(name: &str, v: u64) -> Outcome {
    if v == 0 {
        return Err(Failure::Usage(format!("--{name} must be positive")));
    }
    Ok(())
}

fn catalog_records(lattice: LatticeId, sign: Sign, max: u64) -> Result<Vec<ClassRecord>, Failure> {
    let catalog = ClassCatalog::build(sign, disc_bound(lattice, max)?)?;
    Ok(catalog.records(lattice, max)?)
}

fn cmd_enumerate(lattice: LatticeId, sign: Sign, max: u64, format: Format, output: &Option<PathBuf>) -> Outcome {
    positive("max", max)?;
    let records = catalog_records(lattice, sign, max)?;
    let mut out = open_output(output)?;
    writeln!(out, "{SCHEMA}")?;
    match format {
        Format::Json => write_jsonl(&records, &mut out)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["lattice", "sign", "n", "rep", "stab", "irreducible"])?;
            for r in &records {
                let [a, b, c, d] = r.rep.0;
                w.write_record([
                    r.lattice.index().to_string(),
                    r.sign.to_string(),
                    r.n.to_string(),
                    format!("[{a},{b},{c},{d}]"),
                    r.stab.to_string(),
                    r.irreducible.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    let weighted = records.iter().fold(0.0, |acc, r| acc + 1.0 / r.stab as f64);
    let irreducible = records.iter().filter(|r| r.irreducible).count();
    eprintln!(
        "{lattice}{sign} n <= {max}: {} classes ({irreducible} irreducible), weighted total {weighted:.4}",
        records.len()
    );
    Ok(())
}

fn fraction(q: Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn cmd_coeffs(lattice: LatticeId, sign: Sign, max: u64, output: &Option<PathBuf>) -> Outcome {
    positive("max", max)?;
    let records = catalog_records(lattice, sign, max)?;
    let series = build_series(lattice, sign, &records, max)?;
    let mut out = open_output(output)?;
    writeln!(out, "{SCHEMA}")?;
    let mut w = csv::Writer::from_writer(&mut out);
    w.write_record(["n", "weighted", "unweighted", "irreducible_weighted", "reducible_weighted"])?;
    for n in 1..=max {
        w.write_record([
            n.to_string(),
            fraction(series.coeff(n)),
            series.count(n).to_string(),
            fraction(series.ird(n)),
            fraction(series.rd(n)),
        ])?;
    }
    w.flush()?;
    drop(w);
    out.flush()?;
    Ok(())
}

fn cmd_table(side: SideArg, convention: ConventionArg) -> Outcome {
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let conv = match convention {
        ConventionArg::Primary => Convention::Primary,
        ConventionArg::Alternative => Convention::Alternative,
    };
    let max_n = side.rows().into_iter().max().unwrap_or(0);
    let bundle = cubic_zeta::series::SeriesBundle::build(max_n)?;
    let got = render_table(side, &bundle, conv)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{SCHEMA}")?;
    write!(out, "{got}")?;
    let diff = diff_tables(&side.golden(), &got);
    if diff.is_empty() {
        writeln!(out, "identical to the reference table")?;
        Ok(())
    } else {
        writeln!(out, "--- reference\n+++ computed")?;
        for line in &diff {
            writeln!(out, "{line}")?;
        }
        Err(Failure::Check(format!("{} differing rows", diff.len() / 2)))
    }
}

fn write_density_csv(out: &mut dyn Write, rows: &[DensityRow]) -> Outcome {
    writeln!(out, "{SCHEMA}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["X", "S_unweighted", "S_weighted", "prediction", "residual", "residual/X^(2/3)"])?;
    for r in rows {
        w.write_record([
            r.x.to_string(),
            r.s_unweighted.to_string(),
            format!("{:.6}", r.s_weighted),
            format!("{:.6}", r.prediction),
            format!("{:.6}", r.residual),
            format!("{:.6}", r.gauge),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_density(
    lattice: LatticeId,
    sign: Sign,
    max: u64,
    checkpoints: u64,
    max_bound: u64,
    output: &Option<PathBuf>,
) -> Outcome {
    positive("max", max)?;
    positive("checkpoints", checkpoints)?;
    if max > max_bound {
        return Err(Failure::Usage(format!("--max {max} exceeds --max-bound {max_bound}")));
    }
    if checkpoints > max {
        return Err(Failure::Usage("more checkpoints than integers below --max".into()));
    }
    let xs: Vec<u64> = (1..=checkpoints).map(|j| (max as u128 * j as u128 / checkpoints as u128) as u64).collect();
    let catalog = ClassCatalog::build(sign, disc_bound(lattice, max)?)?;
    let rows = density_report(&catalog, lattice, &xs)?;
    let mut out = open_output(output)?;
    write_density_csv(&mut out, &rows)?;
    out.flush()?;
    let rep = check_density_rows(&format!("{lattice}{sign}"), &rows);
    let bad: Vec<String> = rep.failures().filter(|c| !c.name.ends_with("trend")).map(|c| c.name.clone()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("|residual| > {GAUGE_CONSTANT} X^(2/3) at {}", bad.join(", "))))
    }
}

fn dump_golden() -> Outcome {
    let mut out = io::stdout().lock();
    writeln!(out, "{SCHEMA}")?;
    for side in [Side::Left, Side::Right] {
        writeln!(out, "# {side:?}")?;
        write!(out, "{}", side.golden())?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    if cli.dump_golden {
        return dump_golden();
    }
    let Some(command) = cli.command else {
        return Err(Failure::Usage("a subcommand or --dump-golden is required".into()));
    };
    match command {
        Command::Enumerate { lattice, sign, max, format, output } => cmd_enumerate(lattice, sign, max, format, &output),
        Command::Coeffs { lattice, sign, max, output } => cmd_coeffs(lattice, sign, max, &output),
        Command::Table { side, convention } => cmd_table(side, convention),
        Command::Verify { suite, max, oracle_box, stab_bound, perturb } => {
            if max == Some(0) || oracle_box.is_some_and(|b| b < 1) || stab_bound.is_some_and(|b| b < 1) {
                return Err(Failure::Usage("bounds must be positive".into()));
            }
            let report = run_suite(suite, &SuiteOptions { max, oracle_box, stab_bound, perturb })?;
            let mut out = io::stdout().lock();
            write!(out, "{report}")?;
            let failed = report.failures().count();
            writeln!(out, "{} checks, {failed} failed", report.checks.len())?;
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Check(format!("{failed} checks failed")))
            }
        }
        Command::Density { lattice, sign, max, checkpoints, max_bound, output } => {
            cmd_density(lattice, sign, max, checkpoints, max_bound, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match cli.workers {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n as usize).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
