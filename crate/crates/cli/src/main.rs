//! `lattice-cf` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 oracle mismatch.

mod json;

use std::process::ExitCode;

use clap::{ColorChoice, Parser, Subcommand, ValueEnum};
use lattice_cf::cf::{
    e_to_hj, expand_e, expand_hj, format_terms, hj_to_e, involute, staircase, staircase_dual, Rational,
};
use lattice_cf::graphs::{to_dot, to_json, WeightedDualGraph};
use lattice_cf::lattice::{cone_normal_form, dual_cone, duality_map, hull_oracle, polygon, ConeNf, LatticeVector};
use lattice_cf::singularities::{
    blowup_oracle, blowup_types, cusp_dual, cusp_monodromy, cusp_trace_formula, embdim, embdim_oracle,
    hj_resolution, lens_oriented_equal, lens_reverse, lens_reversing_equal, resolve_monomial, CuspCycle, HjType,
    LensSpace,
};
use lattice_cf::zigzag::{self, Reading, RenderFormat};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Parser)]
#[command(name = "lattice-cf", version, about = "Exact continued fractions, lattice cones and singularity invariants")]
#[command(color = ColorChoice::Never)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fractions.
    #[command(subcommand)]
    Cf(CfCommand),
    /// Plane lattice cones.
    #[command(subcommand)]
    Cone(ConeCommand),
    /// Zigzag diagram of λ > 1.
    Zigzag {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: ZigzagFormat,
        /// Print one of the four expansions read off the diagram instead.
        #[arg(long, value_enum)]
        read: Option<ReadArg>,
    },
    /// Hirzebruch-Jung singularities A_{p,q}, given as P/Q.
    #[command(subcommand)]
    Sing(SingCommand),
    /// Lens spaces L(p,q).
    #[command(subcommand)]
    Lens(LensCommand),
    /// Cusp cycles, given as comma-separated weights.
    #[command(subcommand)]
    Cusp(CuspCommand),
    /// Embedded resolution of x^P = y^Q.
    #[command(subcommand)]
    Curve(CurveCommand),
}

#[derive(Subcommand)]
enum CfCommand {
    /// Canonical expansion of a rational.
    Expand {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Convert a sequence to the other kind; TERMS is read as the opposite kind.
    Convert {
        #[arg(long, value_enum)]
        to: KindArg,
        #[arg(allow_hyphen_values = true)]
        terms: String,
    },
    /// λ/(λ-1) for λ > 1.
    Involute {
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Also print both expansions of the result.
        #[arg(long)]
        terms: bool,
    },
    /// Staircase of an HJ sequence and its transposed reading.
    Staircase { terms: String },
}

#[derive(Subcommand)]
enum ConeCommand {
    /// Normal form p/q of cone((UX,UY), (VX,VY)).
    #[command(allow_negative_numbers = true)]
    Type { ux: String, uy: String, vx: String, vy: String },
    /// Boundary polygon P(σ) as JSON.
    Polygon {
        cone: String,
        /// Recompute by brute-force convex hull; exit 3 on mismatch.
        #[arg(long)]
        oracle: bool,
    },
    /// Normal form of the dual cone.
    Dual { cone: String },
    /// Edge map onto the supplementary cone, as JSON.
    DualityReport { cone: String },
}

#[derive(Subcommand)]
enum SingCommand {
    /// Minimal resolution graph.
    Resolve {
        sing: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Embedding dimension.
    Embdim {
        sing: String,
        /// Recount minimal generators of the dual semigroup; exit 3 on mismatch.
        #[arg(long)]
        oracle: bool,
    },
    /// Singular points of the blow-up of the origin.
    Blowup { sing: String },
}

#[derive(Subcommand)]
enum LensCommand {
    /// Orientation-preserving comparison of L(P,Q) and L(P2,Q2).
    Compare {
        p: String,
        q: String,
        p2: String,
        q2: String,
        /// Compare up to an orientation-reversing diffeomorphism instead.
        #[arg(long)]
        reverse: bool,
    },
    /// L(P, P-Q).
    Reverse { p: String, q: String },
}

#[derive(Subcommand)]
enum CuspCommand {
    /// Product of [[0,-1],[1,a]] over the cycle, and its trace.
    Monodromy { cycle: String },
    /// Trace from continuants.
    Trace { cycle: String },
    /// Dual cycle.
    Dual { cycle: String },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Dual graph of the total transform.
    Resolve {
        p: String,
        q: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Recompute by simulating the blow-ups; exit 3 on mismatch.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    E,
    Hj,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZigzagFormat {
    Ascii,
    Svg,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadArg {
    Hj,
    HjDual,
    E,
    EDual,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Domain(String),
    Oracle(String),
}

impl From<lattice_cf::Error> for Failure {
    fn from(e: lattice_cf::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_int(s: &str) -> Result<BigInt, Failure> {
    s.trim().parse().map_err(|_| usage(format!("not an integer: {s:?}")))
}

/// `P/Q` or a bare integer, unreduced.
fn parse_pair(s: &str) -> Result<(BigInt, BigInt), Failure> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (parse_int(p)?, parse_int(q)?),
        None => (parse_int(s)?, BigInt::from(1)),
    };
    if q.is_zero() {
        return Err(usage(format!("zero denominator in {s:?}")));
    }
    Ok((p, q))
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let (p, q) = parse_pair(s)?;
    Ok(Rational::new(p, q))
}

/// `[a,b,c]` or `a,b,c`.
fn parse_terms(s: &str) -> Result<Vec<BigInt>, Failure> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Err(usage("empty sequence"));
    }
    inner.split(',').map(parse_int).collect()
}

fn cone_type(s: &str) -> Result<ConeNf, Failure> {
    let (p, q) = parse_pair(s)?;
    Ok(ConeNf::new(p, q)?)
}

fn hj_type(s: &str) -> Result<HjType, Failure> {
    let (p, q) = parse_pair(s)?;
    Ok(HjType::new(p, q)?)
}

fn cycle(s: &str) -> Result<CuspCycle, Failure> {
    Ok(CuspCycle::new(parse_terms(s)?)?)
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn graph_output(g: &WeightedDualGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(g),
        GraphFormat::Json => to_json(g),
    }
}

fn run_cf(cmd: CfCommand) -> Outcome {
    match cmd {
        CfCommand::Expand { kind, value } => {
            let x = parse_rational(&value)?;
            let cf = match kind {
                KindArg::E => expand_e(&x),
                KindArg::Hj => expand_hj(&x),
            };
            Ok(line(cf))
        }
        CfCommand::Convert { to, terms } => {
            let t = parse_terms(&terms)?;
            let out = match to {
                KindArg::Hj => e_to_hj(&t)?,
                KindArg::E => hj_to_e(&t)?,
            };
            Ok(line(format_terms(&out)))
        }
        CfCommand::Involute { value, terms } => {
            let y = involute(&parse_rational(&value)?)?;
            let mut out = line(&y);
            if terms {
                out += &format!("e {}\nhj {}\n", expand_e(&y), expand_hj(&y));
            }
            Ok(out)
        }
        CfCommand::Staircase { terms } => {
            let st = staircase(&parse_terms(&terms)?)?;
            Ok(format!("{}dual {}\n", st.render(), format_terms(&staircase_dual(&st))))
        }
    }
}

fn run_cone(cmd: ConeCommand) -> Outcome {
    match cmd {
        ConeCommand::Type { ux, uy, vx, vy } => {
            let u = LatticeVector::new(parse_int(&ux)?, parse_int(&uy)?);
            let v = LatticeVector::new(parse_int(&vx)?, parse_int(&vy)?);
            let (nf, _) = cone_normal_form(&u, &v)?;
            Ok(line(nf))
        }
        ConeCommand::Polygon { cone, oracle } => {
            let c = cone_type(&cone)?;
            let poly = polygon(&c)?;
            if oracle && hull_oracle(&c)? != poly {
                return Err(Failure::Oracle(format!("polygon of {c} differs from the convex-hull oracle")));
            }
            Ok(json::polygon(&poly))
        }
        ConeCommand::Dual { cone } => Ok(line(dual_cone(&cone_type(&cone)?)?)),
        ConeCommand::DualityReport { cone } => Ok(json::duality(&duality_map(&cone_type(&cone)?)?)),
    }
}

fn run_zigzag(lambda: &str, format: ZigzagFormat, read: Option<ReadArg>) -> Outcome {
    let d = zigzag::build(&parse_rational(lambda)?)?;
    if let Some(r) = read {
        let reading = match r {
            ReadArg::Hj => Reading::HjLambda,
            ReadArg::HjDual => Reading::HjInvolute,
            ReadArg::E => Reading::ELambda,
            ReadArg::EDual => Reading::EInvolute,
        };
        return Ok(line(d.read(reading)));
    }
    Ok(match format {
        ZigzagFormat::Ascii => zigzag::render(&d, RenderFormat::Ascii),
        ZigzagFormat::Svg => zigzag::render(&d, RenderFormat::Svg),
        ZigzagFormat::Json => json::zigzag(&d),
    })
}

fn run_sing(cmd: SingCommand) -> Outcome {
    match cmd {
        SingCommand::Resolve { sing, format } => Ok(graph_output(&hj_resolution(&hj_type(&sing)?), format)),
        SingCommand::Embdim { sing, oracle } => {
            let t = hj_type(&sing)?;
            let e = embdim(&t);
            if oracle {
                let brute = embdim_oracle(&t)?;
                if brute != e {
                    return Err(Failure::Oracle(format!("embdim {e} but the semigroup count gives {brute}")));
                }
            }
            Ok(line(e))
        }
        SingCommand::Blowup { sing } => {
            let types: Vec<String> = blowup_types(&hj_type(&sing)?)?.iter().map(ToString::to_string).collect();
            Ok(format!("[{}]\n", types.join(",")))
        }
    }
}

fn lens(p: &str, q: &str) -> Result<LensSpace, Failure> {
    Ok(LensSpace::new(parse_int(p)?, parse_int(q)?)?)
}

fn run_lens(cmd: LensCommand) -> Outcome {
    match cmd {
        LensCommand::Compare { p, q, p2, q2, reverse } => {
            let (a, b) = (lens(&p, &q)?, lens(&p2, &q2)?);
            let text = if reverse {
                if lens_reversing_equal(&a, &b) {
                    "reversing-diffeomorphic"
                } else {
                    "not-reversing-diffeomorphic"
                }
            } else if lens_oriented_equal(&a, &b) {
                "oriented-diffeomorphic"
            } else {
                "not-oriented-diffeomorphic"
            };
            Ok(line(text))
        }
        LensCommand::Reverse { p, q } => Ok(line(lens_reverse(&lens(&p, &q)?))),
    }
}

fn run_cusp(cmd: CuspCommand) -> Outcome {
    match cmd {
        CuspCommand::Monodromy { cycle: c } => {
            let m = cusp_monodromy(&cycle(&c)?);
            let trace = &m[0][0] + &m[1][1];
            Ok(format!("[[{},{}],[{},{}]]\ntrace {trace}\n", m[0][0], m[0][1], m[1][0], m[1][1]))
        }
        CuspCommand::Trace { cycle: c } => Ok(line(cusp_trace_formula(&cycle(&c)?)?)),
        CuspCommand::Dual { cycle: c } => Ok(line(cusp_dual(&cycle(&c)?)?)),
    }
}

fn run_curve(cmd: CurveCommand) -> Outcome {
    let CurveCommand::Resolve { p, q, format, oracle } = cmd;
    let (p, q) = (parse_int(&p)?, parse_int(&q)?);
    let res = resolve_monomial(&p, &q)?;
    if oracle && blowup_oracle(&p, &q)? != res {
        return Err(Failure::Oracle(format!("resolution of x^{p} = y^{q} differs from the blow-up simulation")));
    }
    Ok(graph_output(res.graph(), format))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Cf(c) => run_cf(c),
        Command::Cone(c) => run_cone(c),
        Command::Zigzag { lambda, format, read } => run_zigzag(&lambda, format, read),
        Command::Sing(c) => run_sing(c),
        Command::Lens(c) => run_lens(c),
        Command::Cusp(c) => run_cusp(c),
        Command::Curve(c) => run_curve(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if informational { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("oracle mismatch: {msg}");
            ExitCode::from(3)
        }
    }
}
