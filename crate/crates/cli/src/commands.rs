//! Argument grammar and command implementations.

use std::fmt::Write as _;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use subpower::analytic::{curve_samples, grid};
use subpower::families::{
    bernoulli, faulhaber_polynomial, fermat_search_row, fubini_sequence, sum_powers, worpitzky,
    BernoulliMethod, FubiniMethod, PowerSumMethod,
};
use subpower::oeis::{compare, default_cache_dir, fetch_bfile, flatten_triangle, parse_bfile, ANumber, FetchOptions};
use subpower::rational::format_rational;
use subpower::transforms::IntSequence;
use subpower::{
    factorial, subfactorial, subpower_diagonal, subpower_table, DiagonalOffset, Error, SubpowerTable,
};

use crate::render::{float, to_json_line, Grid, OutputFormat};
use crate::suites::{self, Bounds, Suite};

/// Process exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Mismatch = 1,
    Usage = 2,
    Io = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// A command that could not produce its output.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            status: Status::Usage,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidArgument(_) | Error::MalformedANumber(_) | Error::NonzeroOffset(_) | Error::EmptySequence => {
                Status::Usage
            }
            Error::InexactDivision(_) | Error::EmptyOverlap => Status::Mismatch,
            Error::Parse { .. }
            | Error::NonContiguous { .. }
            | Error::SnapshotMissing(_)
            | Error::Network(_)
            | Error::Io(_) => Status::Io,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

/// Output of a successful run: text for stdout and the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: Status::Success,
            stdout,
        }
    }

    fn judged(passed: bool, stdout: String) -> Self {
        Outcome {
            status: if passed { Status::Success } else { Status::Mismatch },
            stdout,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "subpower", version, about = "Exact subpower numbers and their relatives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the triangle of subpowers n^{m} for 0 <= n <= m <= max-m.
    Table {
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the first terms of an integer sequence.
    Seq(SeqArgs),
    /// Run an identity verification suite.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Override the largest size parameter of every check.
        #[arg(long)]
        max_m: Option<usize>,
        /// Override the floating-point tolerances of the analytic checks.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Search x^{m} + y^{m} = z^{m} with 1 <= x, y, z <= m.
    Fermat {
        #[arg(long)]
        max_m: usize,
    },
    /// Sample n^{z} for real z, as CSV columns z,n1,...
    #[command(allow_negative_numbers = true)]
    PlotData {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        z_min: f64,
        #[arg(long)]
        z_max: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Compare a local sequence with an OEIS b-file.
    Oeis {
        a_number: ANumber,
        #[arg(long, value_enum)]
        against: Against,
        /// Download the b-file instead of using the cache or bundled copy.
        #[arg(long)]
        fetch: bool,
        /// Rows of the triangle (default 12) or last Fubini index (default 20).
        #[arg(long)]
        max_m: Option<usize>,
        /// Network timeout in seconds.
        #[arg(long, default_value_t = 30)]
        timeout: u64,
    },
    /// Print 1^m + 2^m + ... + n^m, or its polynomial in n.
    SumPowers {
        #[arg(long)]
        m: u64,
        #[arg(long, required_unless_present = "polynomial")]
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t = PowerSumChoice::Binomial)]
        method: PowerSumChoice,
        /// Print the Faulhaber polynomial S_m(n) instead of a value.
        #[arg(long)]
        polynomial: bool,
    },
    /// Print Bernoulli numbers B_0..=B_upto (B_1 = +1/2).
    Bernoulli {
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = BernoulliChoice::Recurrence)]
        method: BernoulliChoice,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print Fubini numbers F_0..=F_upto.
    Fubini {
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = FubiniChoice::RowSum)]
        method: FubiniChoice,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Number of terms.
    #[arg(long)]
    pub count: usize,
    /// Column index for `column`, diagonal offset (0-2) for `diagonal`,
    /// exponent for `worpitzky`.
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Triangle rows read left to right, n = 0..=m.
    Triangle,
    /// n^{m} for fixed n = k, m = 0, 1, ...
    Column,
    /// n^{n+k} for n = 0, 1, ...
    Diagonal,
    Factorial,
    Subfactorial,
    Fubini,
    /// Worpitzky numbers W(k, n) for n = 0, 1, ...
    Worpitzky,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Against {
    Triangle,
    Fubini,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PowerSumChoice {
    Direct,
    Binomial,
    Bernoulli,
}

impl From<PowerSumChoice> for PowerSumMethod {
    fn from(c: PowerSumChoice) -> Self {
        match c {
            PowerSumChoice::Direct => Self::Direct,
            PowerSumChoice::Binomial => Self::Binomial,
            PowerSumChoice::Bernoulli => Self::Bernoulli,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BernoulliChoice {
    Recurrence,
    Explicit,
}

impl From<BernoulliChoice> for BernoulliMethod {
    fn from(c: BernoulliChoice) -> Self {
        match c {
            BernoulliChoice::Recurrence => Self::Recurrence,
            BernoulliChoice::Explicit => Self::Explicit,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FubiniChoice {
    RowSum,
    Recurrence,
}

impl From<FubiniChoice> for FubiniMethod {
    fn from(c: FubiniChoice) -> Self {
        match c {
            FubiniChoice::RowSum => Self::RowSum,
            FubiniChoice::Recurrence => Self::Recurrence,
        }
    }
}

pub fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Table { max_m, format } => Ok(Outcome::ok(render_table(&subpower_table(max_m), format))),
        Command::Seq(args) => seq(&args).map(Outcome::ok),
        Command::Check { suite, max_m, tol } => check(suite, Bounds { max_m, tol }),
        Command::Fermat { max_m } => fermat(max_m),
        Command::PlotData {
            n_max,
            z_min,
            z_max,
            step,
            format,
        } => plot_data(n_max, z_min, z_max, step, format).map(Outcome::ok),
        Command::Oeis {
            a_number,
            against,
            fetch,
            max_m,
            timeout,
        } => {
            let options = FetchOptions {
                network: fetch,
                cache_dir: default_cache_dir(),
                timeout: Duration::from_secs(timeout),
            };
            oeis(&a_number, against, max_m, &options)
        }
        Command::SumPowers { m, n, method, polynomial } => {
            if polynomial {
                return Ok(Outcome::ok(format!("{}\n", faulhaber_polynomial(m as usize))));
            }
            let n = n.ok_or_else(|| Failure::usage("--n is required without --polynomial"))?;
            Ok(Outcome::ok(format!("{}\n", sum_powers(m, n, method.into())?)))
        }
        Command::Bernoulli { upto, method, format } => {
            let cache = bernoulli(upto, method.into());
            let mut g = Grid::new(["k", "B_k"]);
            for (k, b) in cache.values().iter().enumerate() {
                g.push(vec![k.to_string(), format_rational(b)]);
            }
            Ok(Outcome::ok(g.render(format)))
        }
        Command::Fubini { upto, method, format } => {
            Ok(Outcome::ok(indexed("m", "F_m", &fubini_sequence(upto, method.into()), format)))
        }
    }
}

/// Table layout: one row per `m`, cells for `n = 0..=m` only.
pub fn render_table(table: &SubpowerTable, format: OutputFormat) -> String {
    let rows = table.rows().map(|row| row.iter().map(BigInt::to_string).collect::<Vec<_>>());
    if format == OutputFormat::Json {
        return to_json_line(&json!({ "rows": rows.collect::<Vec<_>>() }));
    }
    let first = if format == OutputFormat::Markdown { "m \\ n" } else { "m" };
    let header = std::iter::once(first.to_string()).chain((0..=table.max_m()).map(|n| n.to_string()));
    let mut g = Grid::new(header);
    for (m, cells) in rows.enumerate() {
        g.push(std::iter::once(m.to_string()).chain(cells).collect());
    }
    g.render(format)
}

fn indexed(index: &str, name: &str, values: &[BigInt], format: OutputFormat) -> String {
    let mut g = Grid::new([index, name]);
    for (i, v) in values.iter().enumerate() {
        g.push(vec![i.to_string(), v.to_string()]);
    }
    g.render(format)
}

fn seq(args: &SeqArgs) -> Result<String, Failure> {
    let count = args.count;
    let k = args.k;
    let values: Vec<BigInt> = match args.family {
        Family::Triangle => {
            let mut rows = 0;
            while (rows + 1) * (rows + 2) / 2 < count {
                rows += 1;
            }
            let mut v = flatten_triangle(&subpower_table(rows)).values;
            v.truncate(count);
            v
        }
        Family::Column => {
            let n = usize::try_from(k).map_err(|_| Failure::usage("--k too large"))?;
            let max_m = count.saturating_sub(1).max(n);
            let mut v = subpower_table(max_m).column(n);
            v.truncate(count);
            v
        }
        Family::Diagonal => {
            let offset = DiagonalOffset::try_from(k).map_err(Failure::from)?;
            (0..count as u64).map(|n| subpower_diagonal(n, offset)).collect()
        }
        Family::Factorial => (0..count as u64).map(factorial).collect(),
        Family::Subfactorial => (0..count as u64).map(subfactorial).collect(),
        Family::Fubini => match count {
            0 => Vec::new(),
            c => fubini_sequence(c - 1, FubiniMethod::RowSum),
        },
        Family::Worpitzky => (0..count as u64)
            .map(|n| worpitzky(k, n))
            .collect::<Result<_, _>>()?,
    };
    Ok(indexed("i", "value", &values, args.format))
}

fn check(suite: Suite, bounds: Bounds) -> Result<Outcome, Failure> {
    if bounds.tol.is_some_and(|t| !(t.is_finite() && t > 0.0)) {
        return Err(Failure::usage("--tol must be positive and finite"));
    }
    let result = suites::run(suite, &bounds);
    let mut out = format!("suite {}\n", suite.name());
    out.push_str(&result.report());
    Ok(Outcome::judged(result.passed(), out))
}

fn fermat(max_m: usize) -> Result<Outcome, Failure> {
    if max_m == 0 {
        return Err(Failure::usage("--max-m must be at least 1"));
    }
    let table = subpower_table(max_m);
    let mut out = String::new();
    let mut with_solutions = Vec::new();
    for m in 1..=max_m {
        let found = fermat_search_row(m, table.row(m));
        if found.is_empty() {
            let _ = writeln!(out, "m={m}: none");
        } else {
            let triples: Vec<String> = found.iter().map(|s| format!("({},{},{})", s.x, s.y, s.z)).collect();
            let _ = writeln!(out, "m={m}: {}", triples.join(" "));
            with_solutions.push(m.to_string());
        }
    }
    let names = if with_solutions.is_empty() {
        "none".to_string()
    } else {
        with_solutions.join(",")
    };
    let _ = writeln!(out, "solutions for m in 1..={max_m}: {names}");
    Ok(Outcome::ok(out))
}

fn plot_data(n_max: u64, z_min: f64, z_max: f64, step: f64, format: OutputFormat) -> Result<String, Failure> {
    let samples = curve_samples(n_max, z_min, z_max, step)?;
    if format == OutputFormat::Json {
        let samples: Vec<Value> = samples
            .iter()
            .map(|s| json!({ "n": s.n, "z": s.z, "value": s.value }))
            .collect();
        return Ok(to_json_line(&json!({ "samples": samples })));
    }
    let header = std::iter::once("z".to_string()).chain((1..=n_max).map(|n| format!("n{n}")));
    let mut g = Grid::new(header);
    let zs = grid(z_min, z_max, step)?;
    for (z, chunk) in zs.iter().zip(samples.chunks(n_max as usize)) {
        g.push(std::iter::once(float(*z)).chain(chunk.iter().map(|s| float(s.value))).collect());
    }
    Ok(g.render(format))
}

fn oeis(id: &ANumber, against: Against, max_m: Option<usize>, options: &FetchOptions) -> Result<Outcome, Failure> {
    let reference = parse_bfile(&fetch_bfile(id, options)?)?;
    let (label, seq) = match against {
        Against::Triangle => {
            let m = max_m.unwrap_or(12);
            (format!("triangle rows 0..={m}"), flatten_triangle(&subpower_table(m)))
        }
        Against::Fubini => {
            let m = max_m.unwrap_or(20);
            (format!("fubini 0..={m}"), IntSequence::from_zero(fubini_sequence(m, FubiniMethod::RowSum)))
        }
    };
    let report = compare(&seq, &reference)?;
    let mut out = format!(
        "{id} vs {label}: compared {}, matched {}, mismatches {}\n",
        report.compared,
        report.matched,
        report.compared - report.matched
    );
    if let Some(m) = &report.first_mismatch {
        let _ = writeln!(out, "first mismatch at index {}: expected {}, got {}", m.index, m.expected, m.actual);
    }
    Ok(Outcome::judged(report.is_match(), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Outcome, Failure> {
        let cli = Cli::try_parse_from(std::iter::once("subpower").chain(args.iter().copied())).expect("valid args");
        execute(cli.command)
    }

    fn stdout(args: &[&str]) -> String {
        let o = run(args).expect("command succeeds");
        assert_eq!(o.status, Status::Success);
        o.stdout
    }

    #[test]
    fn table_json_rows() {
        assert_eq!(
            stdout(&["table", "--max-m", "2", "--format", "json"]),
            "{\"rows\":[[\"1\"],[\"0\",\"1\"],[\"0\",\"1\",\"2\"]]}\n"
        );
    }

    #[test]
    fn table_zero() {
        assert_eq!(stdout(&["table", "--max-m", "0"]), "m,0\n0,1\n");
    }

    #[test]
    fn fermat_small() {
        assert_eq!(stdout(&["fermat", "--max-m", "2"]), "m=1: none\nm=2: (1,1,2)\nsolutions for m in 1..=2: 2\n");
        assert_eq!(run(&["fermat", "--max-m", "0"]).unwrap_err().status, Status::Usage);
    }

    #[test]
    fn sequences() {
        assert_eq!(stdout(&["seq", "triangle", "--count", "4"]), "i,value\n0,1\n1,0\n2,1\n3,0\n");
        assert_eq!(stdout(&["seq", "subfactorial", "--count", "5"]), "i,value\n0,1\n1,0\n2,1\n3,2\n4,9\n");
        assert_eq!(stdout(&["seq", "column", "--k", "2", "--count", "4"]), "i,value\n0,0\n1,0\n2,2\n3,6\n");
        assert_eq!(stdout(&["seq", "diagonal", "--k", "1", "--count", "3"]), "i,value\n0,0\n1,1\n2,6\n");
        assert_eq!(run(&["seq", "diagonal", "--k", "3", "--count", "3"]).unwrap_err().status, Status::Usage);
        assert_eq!(stdout(&["seq", "fubini", "--count", "0"]), "i,value\n");
    }

    #[test]
    fn family_wrappers() {
        assert_eq!(stdout(&["sum-powers", "--m", "5", "--n", "3"]), "276\n");
        assert_eq!(
            stdout(&["sum-powers", "--m", "1", "--polynomial"]),
            format!("{}\n", faulhaber_polynomial(1))
        );
        assert!(stdout(&["bernoulli", "--upto", "12"]).ends_with("12,-691/2730\n"));
        assert_eq!(stdout(&["fubini", "--upto", "3"]), "m,F_m\n0,1\n1,1\n2,3\n3,13\n");
    }

    #[test]
    fn plot_data_grid() {
        let out = stdout(&["plot-data", "--n-max", "2", "--z-min", "-1", "--z-max", "1", "--step", "1"]);
        assert_eq!(out, "z,n1,n2\n-1.0,1.0,-1.5\n0.0,1.0,-1.0\n1.0,1.0,0.0\n");
        let bad = run(&["plot-data", "--n-max", "2", "--z-min", "1", "--z-max", "0", "--step", "1"]);
        assert_eq!(bad.unwrap_err().status, Status::Usage);
    }
}
