//! Command-line front end: dimensions, idempotents, characteristic maps,
//! Schur polynomials and the verification suites, with deterministic
//! human-readable or JSON output.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad bounds, mismatched
//! parameters), 2 on a usage error (unknown flags, malformed values).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use brauer_char::charmap::{ch_by_trace, ch_closed_form, ChImage};
use brauer_char::groups::{dim_gl, dim_orth, dim_sp};
use brauer_char::rat::Rat;
use brauer_char::symfunc::{
    double_schur_eval, double_schur_poly, evaluation_point, schur, ParamSequence,
};
use brauer_char::tensorrep::{GroupKind, IdempotentTower};
use brauer_char::verify::{render_report, run_suite, Bounds, Suite};
use brauer_char::young::{standard_tableaux, Partition};

#[derive(Parser)]
#[command(
    name = "brauer-char",
    about = "Exact characteristic maps for Brauer algebra idempotents",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of aligned text
    #[arg(long, global = true)]
    json: bool,

    /// Bypass the tensor-space size guard (N^m <= 10^6)
    #[arg(long, global = true)]
    force_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Group family: gl, orthogonal or sp
    #[arg(long)]
    group: String,

    /// Matrix size N of the group
    #[arg(long = "N")]
    big_n: usize,
}

impl GroupArgs {
    fn kind(&self) -> Result<GroupKind, brauer_char::Error> {
        match self.group.as_str() {
            "gl" => GroupKind::general_linear(self.big_n),
            "orthogonal" => GroupKind::orthogonal(self.big_n),
            "sp" | "symplectic" => GroupKind::symplectic(self.big_n),
            other => Err(brauer_char::Error::Parse(format!(
                "unknown group {other:?}; expected gl, orthogonal or sp"
            ))),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hook dimension formula for an irreducible representation
    Dims {
        #[command(flatten)]
        group: GroupArgs,

        /// Partition label, comma-separated parts (empty or 0 allowed)
        #[arg(long)]
        lambda: String,
    },
    /// Primitive idempotent of a standard tableau as sparse triples
    Idempotent {
        #[command(flatten)]
        group: GroupArgs,

        /// Shape of the tableau
        #[arg(long)]
        lambda: String,

        /// Index into the deterministic tableau list (default 0)
        #[arg(long, default_value_t = 0)]
        tableau: usize,
    },
    /// Characteristic-map image of the normalized central idempotent
    Chmap {
        #[command(flatten)]
        group: GroupArgs,

        /// Shape of the central idempotent
        #[arg(long)]
        lambda: String,

        /// Rank override; must equal floor(N/2) for this command
        #[arg(long)]
        n: Option<usize>,

        /// closed-form (default), trace, or both (cross-checked)
        #[arg(long, default_value = "closed-form")]
        method: String,
    },
    /// Schur polynomial as a sum over semistandard tableaux
    Schur {
        /// Partition, comma-separated parts
        #[arg(long)]
        nu: String,

        /// Number of variables
        #[arg(long)]
        n: usize,
    },
    /// Double (factorial) Schur polynomial, symbolic or evaluated
    DoubleSchur {
        #[command(flatten)]
        group: GroupArgs,

        /// Partition, comma-separated parts
        #[arg(long)]
        nu: String,

        /// Number of variables (default floor(N/2))
        #[arg(long)]
        n: Option<usize>,

        /// Evaluate at the distinguished tuple of this partition
        #[arg(long)]
        rho: Option<String>,

        /// Evaluate at an explicit tuple of rationals p/q, comma-separated
        #[arg(long)]
        at: Option<String>,
    },
    /// Run a named verification suite
    Verify {
        /// relations, idempotents, dims, charmap or all
        #[arg(long, default_value = "all")]
        suite: String,

        /// Largest number of strands / boxes
        #[arg(long, default_value_t = 4)]
        max_m: usize,

        /// Comma-separated list of N values
        #[arg(long = "N", default_value = "5,6")]
        big_ns: String,
    },
    /// Diagram basis of the Brauer algebra
    Basis {
        /// Number of strands
        #[arg(long)]
        m: usize,

        /// Print only the count
        #[arg(long)]
        count: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, brauer_char::Error> {
    let json = cli.json;
    let force = cli.force_large;
    match cli.command {
        Command::Dims { group, lambda } => {
            let kind = group.kind()?;
            let shape: Partition = lambda.parse()?;
            let report = match group.group.as_str() {
                "gl" => dim_gl(&shape, kind.big_n())?,
                "orthogonal" => dim_orth(&shape, kind.big_n())?,
                _ => dim_sp(&shape, kind.big_n())?,
            };
            if json {
                println!("{}", serde_json::to_string(&report.to_json()).expect("serializable"));
            } else {
                let factors: Vec<String> = report.factors.iter().map(Rat::to_string).collect();
                println!("dim {} [{}] = {}", kind, report.shape, report.value);
                println!("factors: {}", factors.join(" * "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Idempotent {
            group,
            lambda,
            tableau,
        } => {
            let kind = group.kind()?;
            let shape: Partition = lambda.parse()?;
            kind.check_shape(&shape)?;
            let tableaux = standard_tableaux(&shape);
            if tableau >= tableaux.len() {
                return Err(brauer_char::Error::IndexOutOfRange {
                    index: tableau,
                    bound: tableaux.len().saturating_sub(1),
                });
            }
            let mut tower = IdempotentTower::new(kind, force);
            let op = tower.idempotent(&tableaux[tableau])?;
            if json {
                println!("{}", serde_json::to_string(&op.to_json()).expect("serializable"));
            } else {
                println!(
                    "idempotent for tableau {} of shape [{}] under {}",
                    tableaux[tableau], shape, kind
                );
                println!("trace = {}, nonzero entries = {}", op.trace(), op.matrix().nnz());
                for (r, c, v) in op.matrix().entries() {
                    println!("{r} {c} {v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chmap {
            group,
            lambda,
            n,
            method,
        } => {
            let kind = group.kind()?;
            if let Some(rank) = n {
                if rank != kind.n() {
                    return Err(brauer_char::Error::Parse(format!(
                        "the rank is determined by N here: floor({}/2) = {}",
                        kind.big_n(),
                        kind.n()
                    )));
                }
            }
            let shape: Partition = lambda.parse()?;
            let image = match method.as_str() {
                "closed-form" => ch_closed_form(&shape, &kind, true)?,
                "trace" => ch_by_trace(&shape, &kind, force)?,
                "both" => {
                    let closed = ch_closed_form(&shape, &kind, true)?;
                    let traced = ch_by_trace(&shape, &kind, force)?;
                    if closed != traced {
                        return Err(brauer_char::Error::Parse(
                            "internal inconsistency: closed form and trace disagree".into(),
                        ));
                    }
                    closed
                }
                other => {
                    return Err(brauer_char::Error::Parse(format!(
                        "unknown method {other:?}; expected closed-form, trace or both"
                    )))
                }
            };
            print_image(&image, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Schur { nu, n } => {
            let nu: Partition = nu.parse()?;
            let poly = schur(&nu, n);
            let truncated = nu.len() > n;
            if json {
                let value = serde_json::json!({
                    "nu": nu.parts(),
                    "n": n,
                    "poly": poly.poly().display_with("x"),
                    "zero_because_too_many_rows": truncated,
                });
                println!("{value}");
            } else {
                println!("s[{nu}] in {n} variables = {}", poly.poly().display_with("x"));
                if truncated {
                    println!("note: more rows than variables, the polynomial vanishes");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DoubleSchur {
            group,
            nu,
            n,
            rho,
            at,
        } => {
            let kind = group.kind()?;
            let seq = ParamSequence::with_epsilon(kind.epsilon()?)?;
            let n = n.unwrap_or_else(|| kind.n());
            let nu: Partition = nu.parse()?;
            if nu.len() > n {
                return Err(brauer_char::Error::TooManyParts {
                    length: nu.len(),
                    vars: n,
                });
            }
            let point: Option<Vec<Rat>> = match (&rho, &at) {
                (Some(_), Some(_)) => {
                    return Err(brauer_char::Error::Parse(
                        "pass at most one of --rho and --at".into(),
                    ))
                }
                (Some(rho), None) => {
                    let rho: Partition = rho.parse()?;
                    Some(evaluation_point(&rho, n, &seq)?)
                }
                (None, Some(at)) => {
                    let parsed: Result<Vec<Rat>, _> =
                        at.split(',').map(|tok| tok.parse::<Rat>()).collect();
                    let tuple = parsed?;
                    if tuple.len() != n {
                        return Err(brauer_char::Error::DimensionMismatch {
                            left: tuple.len(),
                            right: n,
                        });
                    }
                    Some(tuple)
                }
                (None, None) => None,
            };
            match point {
                Some(x) => {
                    let value = double_schur_eval(&nu, n, &seq, &x);
                    if json {
                        let tuple: Vec<String> = x.iter().map(Rat::to_string).collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "nu": nu.parts(),
                                "n": n,
                                "at": tuple,
                                "value": value.to_string(),
                            })
                        );
                    } else {
                        println!("s[{nu}](x | a) at the given tuple = {value}");
                    }
                }
                None => {
                    let poly = double_schur_poly(&nu, n, &seq);
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "nu": nu.parts(),
                                "n": n,
                                "poly": poly.poly().display_with("x"),
                            })
                        );
                    } else {
                        println!("s[{nu}](x | a) = {}", poly.poly().display_with("x"));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_m,
            big_ns,
        } => {
            let suite: Suite = suite.parse()?;
            let parsed: Result<Vec<usize>, _> = big_ns
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|e| brauer_char::Error::Parse(format!("bad N {tok:?}: {e}")))
                })
                .collect();
            let bounds = Bounds {
                max_m,
                big_ns: parsed?,
                force,
            };
            let results = run_suite(suite, &bounds);
            if json {
                println!("{}", serde_json::to_string(&results).expect("serializable"));
            } else {
                print!("{}", render_report(&results));
            }
            if results.iter().all(|r| r.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Basis { m, count } => {
            if count {
                let total = brauer_char::brauer::count_basis(m);
                if json {
                    println!("{}", serde_json::json!({ "m": m, "count": total }));
                } else {
                    println!("{total}");
                }
            } else {
                let diagrams = brauer_char::brauer::basis(m);
                if json {
                    let texts: Vec<String> =
                        diagrams.iter().map(|d| d.to_string()).collect();
                    println!(
                        "{}",
                        serde_json::json!({ "m": m, "count": texts.len(), "diagrams": texts })
                    );
                } else {
                    for d in &diagrams {
                        println!("{d}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_image(image: &ChImage, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&image.to_json()).expect("serializable")
        );
    } else {
        let header = format!(
            "ch(phi[{}]) under {} (n = {})",
            image.lambda,
            image.kind,
            image.n()
        );
        if image.is_zero() {
            println!("{header} = 0");
        } else {
            let terms: Vec<String> = image
                .terms
                .terms()
                .map(|(nu, c)| format!("{c} * s[{nu}]"))
                .collect();
            println!("{header} = {}", terms.join(" + "));
        }
    }
}
