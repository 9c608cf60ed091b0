use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use scarf_core::fdoracle::{compare_spectrum, FdGrid};
use scarf_core::hypergeq::{classify, CanonicalParams};
use scarf_core::noncentral::{angular_function, solve_params, su11_labels, StrategyInput};
use scarf_core::polycore::to_f64;
use scarf_core::quadrature::gram;
use scarf_core::romanovski::romanovski;
use scarf_core::scarf::{spectrum_i, spectrum_ii, wavefunction_i, wavefunction_ii};
use scarf_core::{HypergeqParams, QuadratureSpec, Rational, RomanovskiParams, ScarfParams};

mod output;

use output::{Cell, Format, OutputSpec, Table};

/// Polynomial solutions of the hypergeometric equation, Romanovski
/// polynomials and the Scarf potentials.
#[derive(Parser, Debug)]
#[command(name = "scarf", version)]
struct Cli {
    #[command(flatten)]
    out: OutputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: Format,
    /// write to this file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// digits after the decimal point for floating columns
    #[arg(long, default_value_t = 12, global = true)]
    precision: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PotentialArg {
    Scarf1,
    Scarf2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    LOnly,
    ClosedInLc,
    MnBased,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Energy levels, optionally checked against finite differences
    Spectrum {
        #[arg(long, value_enum, default_value = "scarf2")]
        potential: PotentialArg,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        alpha: Rational,
        /// highest level (required range for scarf1, a cap for scarf2)
        #[arg(long)]
        n_max: Option<u32>,
        /// add finite-difference columns (scarf2 only)
        #[arg(long)]
        oracle: bool,
        /// box half width
        #[arg(long = "L", default_value_t = 20.0)]
        half_width: f64,
        /// interior grid points
        #[arg(long = "N", default_value_t = 4000)]
        interior: usize,
    },
    /// Exact coefficients of a Romanovski polynomial
    Poly {
        #[arg(long, value_parser = parse_rational)]
        p: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long)]
        n: u32,
        /// lift the n <= 32 limit
        #[arg(long)]
        no_limit: bool,
    },
    /// Normalized bound-state wave function on a grid
    Wavefunction {
        #[arg(long, value_enum, default_value = "scarf2")]
        potential: PotentialArg,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        alpha: Rational,
        #[arg(long)]
        n: u32,
        /// zmin zmax points
        #[arg(long, num_args = 3, value_names = ["ZMIN", "ZMAX", "POINTS"], allow_hyphen_values = true)]
        grid: Option<Vec<String>>,
    },
    /// Gram matrix of Romanovski polynomials with convergence mask
    Gram {
        #[arg(long, value_parser = parse_rational)]
        p: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long)]
        max_n: u32,
        /// Gauss-Legendre nodes
        #[arg(long, default_value_t = 256)]
        nodes: usize,
    },
    /// |Z(θ, φ)| for the non-central angular problem
    Angular {
        #[arg(long, value_parser = parse_rational)]
        l: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        m: Option<Rational>,
        #[arg(long, value_enum, default_value = "l-only")]
        strategy: StrategyArg,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Option<Rational>,
        #[arg(long)]
        n: Option<u32>,
        /// switch off the non-central terms (c = 0, n = l - m)
        #[arg(long)]
        spherical: bool,
        /// thetamin thetamax points
        #[arg(long, num_args = 3, value_names = ["TMIN", "TMAX", "POINTS"])]
        grid: Option<Vec<String>>,
    },
    /// Reduce (a, b, c, d, e) to a canonical family
    Classify {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        d: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        e: Rational,
    },
}

#[derive(Debug)]
struct Failure {
    kind: &'static str,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { kind: "usage", msg: msg.into() }
    }
}

impl From<scarf_core::Error> for Failure {
    fn from(e: scarf_core::Error) -> Self {
        Failure { kind: e.kind(), msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { kind: "io", msg: e.to_string() }
    }
}

/// Accepts `p/q`, integers and plain decimals.
fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((int_part, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("not a number: {s}"));
        }
        let digits = format!("{int_part}{frac}");
        let num: BigInt = digits.parse().map_err(|_| format!("not a number: {s}"))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Rational::new(num, den));
    }
    s.parse::<Rational>().map_err(|_| format!("not a rational: {s}"))
}

fn grid3(grid: &Option<Vec<String>>, default: (f64, f64, usize)) -> Result<(f64, f64, usize), Failure> {
    let Some(g) = grid else { return Ok(default) };
    let lo: f64 = g[0].parse().map_err(|_| Failure::usage(format!("bad grid start {}", g[0])))?;
    let hi: f64 = g[1].parse().map_err(|_| Failure::usage(format!("bad grid end {}", g[1])))?;
    let pts: usize = g[2].parse().map_err(|_| Failure::usage(format!("bad point count {}", g[2])))?;
    if !(lo < hi) || pts < 2 {
        return Err(Failure::usage("grid needs start < end and at least 2 points"));
    }
    Ok((lo, hi, pts))
}

fn linspace(lo: f64, hi: f64, pts: usize) -> impl Iterator<Item = f64> {
    (0..pts).map(move |i| lo + (hi - lo) * i as f64 / (pts - 1) as f64)
}

fn potential_name(p: PotentialArg) -> &'static str {
    match p {
        PotentialArg::Scarf1 => "scarf1",
        PotentialArg::Scarf2 => "scarf2",
    }
}

fn run(command: Command) -> Result<Table, Failure> {
    match command {
        Command::Spectrum { potential, a, b, alpha, n_max, oracle, half_width, interior } => {
            let params = ScarfParams::new(a, b, alpha)?;
            let mut t = Table::new(&["n", "epsilon", "e"]);
            t.param("potential", potential_name(potential))
                .param("a", &params.a)
                .param("b", &params.b)
                .param("alpha", &params.alpha);
            let levels = match potential {
                PotentialArg::Scarf1 => {
                    if oracle {
                        return Err(Failure::usage("--oracle is available for scarf2 only"));
                    }
                    spectrum_i(&params, n_max.unwrap_or(3))
                }
                PotentialArg::Scarf2 => {
                    let mut v = spectrum_ii(&params);
                    if let Some(cap) = n_max {
                        v.truncate(cap as usize + 1);
                    }
                    v
                }
            };
            if !oracle {
                for l in &levels {
                    t.push(vec![Cell::Int(l.n as i64), Cell::Exact(l.epsilon.to_string()), Cell::Exact(l.e.to_string())]);
                }
                return Ok(t);
            }
            let grid = FdGrid::new(half_width, interior)?;
            t.param("L", half_width).param("N", interior);
            t.columns.extend(["numeric".into(), "deviation".into()]);
            let report = compare_spectrum(&params, &grid, levels.len())?;
            for (i, l) in report.analytic.iter().enumerate() {
                t.push(vec![
                    Cell::Int(l.n as i64),
                    Cell::Exact(l.epsilon.to_string()),
                    Cell::Exact(l.e.to_string()),
                    Cell::Float(report.numeric[i]),
                    Cell::Float(report.deviations[i]),
                ]);
            }
            Ok(t)
        }
        Command::Poly { p, q, n, no_limit } => {
            if n > 32 && !no_limit {
                return Err(Failure::usage(format!("n = {n} exceeds the default limit 32; pass --no-limit")));
            }
            let params = RomanovskiParams::new(p, q)?;
            let r = romanovski(&params, n);
            let mut t = Table::new(&["power", "coefficient"]);
            t.param("p", params.p()).param("q", params.q()).param("n", n);
            t.param("degree", r.poly.degree().map_or("-inf".to_string(), |d| d.to_string()));
            t.param("degree_deficient", r.degree_deficient);
            for (k, c) in r.poly.coeffs().iter().enumerate() {
                t.push(vec![Cell::Int(k as i64), Cell::Exact(c.to_string())]);
            }
            Ok(t)
        }
        Command::Wavefunction { potential, a, b, alpha, n, grid } => {
            let params = ScarfParams::new(a, b, alpha)?;
            let (wf, default) = match potential {
                PotentialArg::Scarf2 => (wavefunction_ii(&params, n)?, (-10.0, 10.0, 401)),
                PotentialArg::Scarf1 => {
                    let edge = PI / 2.0 / to_f64(&params.alpha);
                    (wavefunction_i(&params, n)?, (-edge, edge, 401))
                }
            };
            let (lo, hi, pts) = grid3(&grid, default)?;
            let mut t = Table::new(&["z", "psi"]);
            t.param("potential", potential_name(potential))
                .param("a", &params.a)
                .param("b", &params.b)
                .param("alpha", &params.alpha)
                .param("n", n)
                .param("e", &wf.level.e)
                .param("nodes", wf.node_count(lo, hi, pts));
            for z in linspace(lo, hi, pts) {
                t.push(vec![Cell::Float(z), Cell::Float(wf.eval(z))]);
            }
            Ok(t)
        }
        Command::Gram { p, q, max_n, nodes } => {
            let params = RomanovskiParams::new(p, q)?;
            let spec = QuadratureSpec { nodes, ..QuadratureSpec::default() };
            let g = gram(&params, max_n, &spec)?;
            let mut t = Table::new(&["m", "mprime", "value", "convergent"]);
            t.param("p", params.p()).param("q", params.q()).param("max_n", max_n).param("nodes", nodes);
            t.param("max_off_diagonal_ratio", g.max_off_diagonal_ratio());
            for (i, row) in g.entries.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    t.push(vec![Cell::Int(i as i64), Cell::Int(j as i64), Cell::Float(*v), Cell::Bool(g.convergent_mask[i][j])]);
                }
            }
            Ok(t)
        }
        Command::Angular { l, m, strategy, c, n, spherical, grid } => {
            let need = |v: Option<Rational>, name: &str| v.ok_or_else(|| Failure::usage(format!("--{name} is required")));
            let whole = |v: &Rational, name: &str| {
                v.to_integer()
                    .to_u32()
                    .filter(|_| v.is_integer())
                    .ok_or_else(|| Failure::usage(format!("--{name} must be a non-negative integer")))
            };
            let input = if spherical {
                let (l, m) = (need(l, "l")?, need(m, "m")?);
                let (li, mi) = (whole(&l, "l")?, whole(&m, "m")?);
                if mi > li {
                    return Err(Failure::usage("spherical limit needs m <= l"));
                }
                StrategyInput::ClosedInLc { l: to_f64(&l), c: 0.0, n: li - mi }
            } else {
                match strategy {
                    StrategyArg::LOnly => {
                        let (l, m) = (need(l, "l")?, need(m, "m")?);
                        StrategyInput::LOnly { l: whole(&l, "l")?, m: whole(&m, "m")? }
                    }
                    StrategyArg::ClosedInLc => StrategyInput::ClosedInLc {
                        l: to_f64(&need(l, "l")?),
                        c: to_f64(&need(c, "c")?),
                        n: n.ok_or_else(|| Failure::usage("--n is required"))?,
                    },
                    StrategyArg::MnBased => StrategyInput::MnBased {
                        m: need(m, "m")?,
                        n: n.ok_or_else(|| Failure::usage("--n is required"))?,
                        c: need(c, "c")?,
                    },
                }
            };
            let problem = solve_params(&input)?;
            let f = angular_function(&problem)?;
            let labels = su11_labels(&problem);
            let (lo, hi, pts) = grid3(&grid, (0.01, PI - 0.01, 181))?;
            if lo <= 0.0 || hi >= PI {
                return Err(Failure::usage("theta grid must lie inside (0, pi)"));
            }
            let strategy_name = if spherical {
                "spherical"
            } else {
                match strategy {
                    StrategyArg::LOnly => "l-only",
                    StrategyArg::ClosedInLc => "closed-in-lc",
                    StrategyArg::MnBased => "mn-based",
                }
            };
            let mut t = Table::new(&["theta", "abs_z"]);
            t.param("strategy", strategy_name)
                .param("l", problem.l)
                .param("m", problem.m)
                .param("c", problem.c)
                .param("a", problem.a)
                .param("b", problem.b)
                .param("n", problem.n);
            match (&labels.j_exact, &labels.mprime_exact) {
                (Some(j), Some(mp)) => t.param("j", j).param("mprime", mp),
                _ => t.param("j", labels.j).param("mprime", labels.mprime),
            };
            for th in linspace(lo, hi, pts) {
                t.push(vec![Cell::Float(th), Cell::Float(f.abs_z(th)?)]);
            }
            Ok(t)
        }
        Command::Classify { a, b, c, d, e } => {
            let params = HypergeqParams::new(a, b, c, d, e)?;
            let fam = classify(&params);
            let mut t = Table::new(&["field", "value"]);
            t.param("a", &params.a).param("b", &params.b).param("c", &params.c).param("d", &params.d).param("e", &params.e);
            let mut row = |k: &str, v: String| t.push(vec![Cell::Exact(k.into()), Cell::Exact(v)]);
            row("family", fam.tag.to_string());
            match &fam.params {
                CanonicalParams::Jacobi { gamma, delta } => {
                    row("gamma", gamma.to_string());
                    row("delta", delta.to_string());
                }
                CanonicalParams::Laguerre { alpha } => row("alpha", alpha.to_string()),
                CanonicalParams::Romanovski { p, q } => {
                    row("p", p.to_string());
                    row("q", q.to_string());
                }
                CanonicalParams::Bessel { alpha, beta } => {
                    row("alpha", alpha.to_string());
                    row("beta", beta.to_string());
                }
                CanonicalParams::Hermite | CanonicalParams::None => {}
            }
            if let Some(s) = &fam.shift {
                row("scale", s.scale.to_string());
                row("offset", s.offset.to_string());
            }
            if let Some(k) = &fam.factor {
                row("factor", k.to_string());
            }
            if let Some(r) = fam.reducible_to {
                row("reducible_to", r.to_string());
            }
            if !fam.note.is_empty() {
                row("note", fam.note.clone());
            }
            Ok(t)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help, --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return ExitCode::from(2);
        }
    };
    let spec = OutputSpec { format: cli.out.format, path: cli.out.output, precision: cli.out.precision };
    let result = run(cli.command).and_then(|t| output::emit(&t, &spec).map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}: {}", f.kind, f.msg.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
