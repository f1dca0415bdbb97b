use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use shuffle_lr::bk::symmetry_map;
use shuffle_lr::crystal::CrystalGraph;
use shuffle_lr::logconcave::{
    certify_schur_dominance, check_theorem_hypotheses, theta, ThetaInstance, WeightQuadruple,
};
use shuffle_lr::lr::{expand_product, lr_coefficient, Method};
use shuffle_lr::perf::bench_grid;
use shuffle_lr::tl::{immanant_expansion, jacobi_trudi_shape, tl_type, JacobiTrudiSpec};
use shuffle_lr::verify::{self, SuiteReport};
use shuffle_lr::{Partition, ShuffleDiagram, SkewShape, Tableau};

#[derive(Parser)]
#[command(name = "shuffle-lr", version, about = "Littlewood-Richardson coefficients via peelable tableaux")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Peelable,
    Yamanouchi,
    Classical,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Peelable => Method::Peelable,
            MethodArg::Yamanouchi => Method::Yamanouchi,
            MethodArg::Classical => Method::Classical,
        }
    }
}

#[derive(Args)]
struct Pair {
    /// Red skew shape, e.g. 3,2/1.
    #[arg(long)]
    red: SkewShape,
    /// Blue skew shape.
    #[arg(long)]
    blue: SkewShape,
}

#[derive(Args)]
struct JtArgs {
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
    /// Matrix size.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// One coefficient c^κ of s_red · s_blue.
    Lr {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        kappa: Partition,
        #[arg(long, value_enum, default_value_t = MethodArg::Peelable)]
        method: MethodArg,
    },
    /// The full Schur expansion of s_red · s_blue.
    Expand {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = MethodArg::Peelable)]
        method: MethodArg,
    },
    /// Jacobi-Trudi immanant table by Temperley-Lieb type and shape.
    TlExpand {
        #[command(flatten)]
        jt: JtArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Peelable)]
        method: MethodArg,
    },
    /// Temperley-Lieb type of a filling of the Jacobi-Trudi shuffle diagram.
    TlType {
        #[command(flatten)]
        jt: JtArgs,
        /// Rows separated by ';' (e.g. "1,3;2,2") or tableau JSON, or @file.
        #[arg(long)]
        tableau: String,
    },
    /// Symmetry map from red⊛blue-peelable to blue⊛red-peelable tableaux.
    Bk {
        #[command(flatten)]
        pair: Pair,
        /// Straight-shape tableau: rows separated by ';', tableau JSON, or @file.
        #[arg(long)]
        tableau: String,
    },
    /// θ on one tableau, or the dominance certificate over all of them.
    Theta {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Exhaustive verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Times the peelable and Yamanouchi routes; writes CSV.
    Bench {
        #[arg(long, default_value_t = 10)]
        max_cells: usize,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<String>,
    },
    /// Crystal graph of all shuffle tableaux with bounded entries.
    CrystalDump {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
    },
}

#[derive(Subcommand)]
enum Suite {
    Equivalence {
        #[arg(long, default_value_t = 10)]
        max_cells: usize,
    },
    Bijections {
        #[arg(long, default_value_t = 10)]
        max_cells: usize,
    },
    Crystal {
        #[arg(long, default_value_t = 9)]
        max_cells: usize,
        #[arg(long, default_value_t = 5)]
        max_entry: u32,
    },
    Bk {
        /// Bounds both the straight SSYT and the shape pairs.
        #[arg(long, default_value_t = 9)]
        max_cells: usize,
        #[arg(long, default_value_t = 5)]
        max_entry: u32,
    },
    Tl {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_part: usize,
    },
    Theta {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_a: usize,
        /// Bound on μ_1 - a.
        #[arg(long, default_value_t = 3)]
        extra: usize,
    },
}

/// Failure kinds mapped to exit codes.
enum Outcome {
    Ok,
    Failed,
}

fn read_tableau(arg: &str, shape: Option<shuffle_lr::Shape>) -> Result<Tableau> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    let text = text.trim();
    if text.starts_with('{') {
        return Ok(Tableau::from_json(text)?);
    }
    let rows = text
        .split(';')
        .map(|r| {
            let r = r.trim();
            if r.is_empty() {
                return Ok(Vec::new());
            }
            r.split(',').map(|x| x.trim().parse::<u32>().with_context(|| format!("bad entry {x:?}"))).collect()
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    Ok(match shape {
        Some(s) => Tableau::new(s, rows)?,
        None => Tableau::from_rows(rows)?,
    })
}

fn report(r: &SuiteReport, format: Format) -> Outcome {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "suite": r.suite,
                "instances": r.instances,
                "passed": r.passed(),
                "failures": r.failures,
            })
        ),
        _ => {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!("{verdict} {} ({} checks, {} failures)", r.suite, r.instances, r.failures.len());
            for f in r.failures.iter().take(20) {
                println!("  {f}");
            }
        }
    }
    if r.passed() {
        Outcome::Ok
    } else {
        Outcome::Failed
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::CrystalDump { .. }) {
        bail!("--format dot is only available for crystal-dump");
    }
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Lr { pair, kappa, method } => {
            let c = lr_coefficient(&pair.red, &pair.blue, &kappa, method.into());
            if json {
                let m: Method = method.into();
                println!(
                    "{}",
                    serde_json::json!({
                        "red": pair.red.to_string(),
                        "blue": pair.blue.to_string(),
                        "kappa": kappa.parts(),
                        "method": m.to_string(),
                        "coeff": c,
                    })
                );
            } else {
                println!("{c}");
            }
        }
        Command::Expand { pair, method } => {
            let t = expand_product(&pair.red, &pair.blue, method.into());
            if json {
                println!("{}", t.to_json());
            } else {
                print!("{}", t.to_table());
            }
        }
        Command::TlExpand { jt, method } => {
            let spec = JacobiTrudiSpec::new(jt.mu, jt.nu, jt.n)?;
            let t = immanant_expansion(&spec, method.into())?;
            if json {
                println!("{}", t.to_json());
            } else {
                for ((tau, lambda), c) in &t.entries {
                    println!("{tau}\t{lambda}\t{c}");
                }
            }
        }
        Command::TlType { jt, tableau } => {
            let spec = JacobiTrudiSpec::new(jt.mu, jt.nu, jt.n)?;
            let t = read_tableau(&tableau, Some(jacobi_trudi_shape(&spec)?))?;
            let m = tl_type(&t, spec.n)?;
            if json {
                println!("{}", m.to_json());
            } else {
                println!("{m}");
            }
        }
        Command::Bk { pair, tableau } => {
            let d = ShuffleDiagram::new(pair.red, pair.blue);
            let t = read_tableau(&tableau, None)?;
            let s = symmetry_map(&t, &d)?;
            if json {
                println!("{}", s.to_json());
            } else {
                println!("{s}");
            }
        }
        Command::Theta { lambda, mu, m, k, tableau } => {
            // λ = (a^k, 1^(n-k-1), 0) has exactly n-1 nonzero parts
            let n = lambda.len() + 1;
            if mu.len() > n {
                bail!("μ has more than {n} parts");
            }
            let pad = |p: &Partition| p.padded(n).into_iter().map(|x| x as i64).collect::<Vec<_>>();
            let a = lambda.padded(n).get(m.wrapping_sub(1)).copied().unwrap_or(0);
            let inst = ThetaInstance::new(WeightQuadruple::strip(pad(&lambda), pad(&mu), m, k), m, k, a);
            let h = check_theorem_hypotheses(&inst);
            if !h.holds() {
                bail!("hypotheses fail: {}", h.first_failure().unwrap_or("?"));
            }
            match tableau {
                Some(arg) => {
                    let t = read_tableau(&arg, None)?;
                    let (image, trace) = theta(&t, &inst)?;
                    if json {
                        println!("{}", trace.to_json(&image));
                    } else {
                        for (label, snap) in &trace.snapshots {
                            println!("{label}:\n{snap}\n");
                        }
                        println!("θ(T):\n{image}");
                    }
                }
                None => {
                    let rep = certify_schur_dominance(&inst)?;
                    if json {
                        println!("{}", rep.to_json());
                    } else {
                        println!("{inst}");
                        println!("kappa\tlower\tupper");
                        for c in &rep.counts {
                            let p = Partition::new(c.kappa.clone())?;
                            println!("{p}\t{}\t{}", c.lower, c.upper);
                        }
                        println!("{}", if rep.passed { "PASS" } else { "FAIL" });
                        for f in &rep.failures {
                            println!("  {f}");
                        }
                    }
                    if !rep.passed {
                        return Ok(Outcome::Failed);
                    }
                }
            }
        }
        Command::Verify { suite } => {
            let r = match suite {
                Suite::Equivalence { max_cells } => verify::equivalence(max_cells),
                Suite::Bijections { max_cells } => verify::bijections(max_cells),
                Suite::Crystal { max_cells, max_entry } => verify::crystal(max_cells, max_entry),
                Suite::Bk { max_cells, max_entry } => verify::bk_suite(max_cells, max_entry, max_cells),
                Suite::Tl { max_n, max_part } => verify::tl(max_n, max_part),
                Suite::Theta { n, max_a, extra } => verify::theta_suite(n, max_a, extra),
            };
            return Ok(report(&r, cli.format));
        }
        Command::Bench { max_cells, out } => {
            let s = bench_grid(&verify::shape_pairs(max_cells));
            let csv = s.to_csv();
            match out {
                Some(path) => fs::write(&path, &csv).with_context(|| format!("writing {path}"))?,
                None => print!("{csv}"),
            }
            eprintln!(
                "{} pairs, peelable faster on {:.1}%, worst slowdown {:.2}x",
                s.rows.len(),
                100.0 * s.faster_share(),
                s.worst_slowdown()
            );
        }
        Command::CrystalDump { pair, max_entry } => {
            let d = ShuffleDiagram::new(pair.red, pair.blue);
            let g = CrystalGraph::build(&d, max_entry);
            match cli.format {
                Format::Json => println!("{}", g.to_json()),
                _ => print!("{}", g.to_dot()),
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
