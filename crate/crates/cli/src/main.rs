use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qelectric::fock::{self, BarInvolution, DualFockVector, FockVector, Transpose};
use qelectric::klr;
use qelectric::tableaux::{self, UpDownTableau};
use qelectric::tensor::{all_flavor_patterns, parse_flavors};
use qelectric::verify::{self, Report, TensorWindow};
use qelectric::{ChargeVector, LaurentPoly, Multipartition, Partition, Residue};

#[derive(Parser)]
#[command(
    name = "qelectric",
    version,
    about = "Fock spaces, tableaux and graded dimensions for the quantum electrical algebra"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads for the parallel suites.
    #[arg(long, global = true, env = "QELECTRIC_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Up-down tableaux.
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// Fock and dual Fock spaces.
    #[command(subcommand)]
    Fock(FockCmd),
    /// Graded dimensions of cyclotomic electric KLR algebras.
    #[command(subcommand)]
    Klr(KlrCmd),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Shape {
    /// Level ℓ.
    #[arg(long, default_value_t = 1)]
    level: usize,
    /// Number of steps m.
    #[arg(long)]
    length: usize,
    /// Target shape, components separated by `|`, e.g. `2,1|1`.
    #[arg(long)]
    shape: Option<String>,
}

#[derive(Subcommand)]
enum TableauxCmd {
    /// Count tableaux of length m, per shape or for one shape.
    Count(Shape),
    /// List the tableaux of length m ending in a shape.
    List(Shape),
    /// Σ_λ |Tud_m(λ)|² for m up to the given length.
    Dims {
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Args)]
struct FockOpts {
    /// Charge δ: an integer, a fraction, or a symbol such as `d1`.
    #[arg(long, default_value = "0")]
    charge: Residue,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    epsilon: i64,
    /// Act on the dual Fock space instead.
    #[arg(long)]
    dual: bool,
}

#[derive(Subcommand)]
enum FockCmd {
    /// Apply one generator E_i to a basis vector.
    Act {
        #[command(flatten)]
        opts: FockOpts,
        /// Residue i of the generator.
        #[arg(long, allow_hyphen_values = true)]
        i: Residue,
        #[arg(long, default_value = "")]
        partition: Partition,
    },
    /// Apply a word of generators, left to right.
    Word {
        #[command(flatten)]
        opts: FockOpts,
        /// Comma-separated residues.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value = "")]
        partition: Partition,
    },
    /// Bar involution of v_λ, or its inverse on v^λ with `--dual`.
    Bar {
        #[command(flatten)]
        opts: FockOpts,
        #[arg(long, default_value = "")]
        partition: Partition,
    },
    /// Transpose map τ(v_λ).
    Tau {
        #[command(flatten)]
        opts: FockOpts,
        #[arg(long, default_value = "")]
        partition: Partition,
    },
    /// Pairing (v^λ, v_μ · u) for a word u.
    Pair {
        #[command(flatten)]
        opts: FockOpts,
        /// λ of the dual basis vector.
        #[arg(long, default_value = "")]
        left: Partition,
        /// μ of the Fock basis vector.
        #[arg(long, default_value = "")]
        right: Partition,
        /// Word acting on v_μ first.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Args)]
struct Charges {
    #[arg(long, default_value_t = 1)]
    level: usize,
    /// Comma-separated charges; generic symbols `d1,…,dℓ` by default.
    #[arg(long)]
    charges: Option<ChargeVector>,
}

impl Charges {
    fn resolve(&self) -> Result<ChargeVector> {
        let c = match &self.charges {
            Some(c) => c.clone(),
            None => ChargeVector::generic(self.level),
        };
        if self.charges.is_some() && c.level() != self.level && self.level != 1 {
            bail!(
                "--level {} disagrees with {} charges",
                self.level,
                c.level()
            );
        }
        c.validate_generic()?;
        Ok(c)
    }
}

#[derive(Subcommand)]
enum KlrCmd {
    /// Graded dimension of Hom(P_src, P_tgt).
    Gdim {
        #[command(flatten)]
        charges: Charges,
        /// Source residue sequence, comma-separated.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        src: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        tgt: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i64,
    },
    /// Degrees of E_i acting on the standard module of λ, level one.
    Act {
        #[arg(long, default_value = "")]
        partition: Partition,
        /// Offset of i from the charge.
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i64,
    },
    /// Standard multiplicities of the projective indexed by λ.
    Projective {
        #[command(flatten)]
        charges: Charges,
        /// Multipartition, components separated by `|`.
        #[arg(long, default_value = "")]
        partition: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i64,
    },
    /// Grothendieck group relations on graded dimensions, level one.
    VerifyRelations {
        #[arg(long, default_value_t = 5)]
        bound: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Uqg,
    Hecke,
    #[value(name = "hecke_commute")]
    HeckeCommute,
    Coideal,
    #[value(name = "beta_b")]
    BetaB,
    FockRelations,
    FockSupport,
    FockStability,
    Categorification,
    Bar,
    Tau,
    Adjoint,
    Degrees,
    Dimensions,
    K0,
    MultiFock,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Index window [-w, w] for the tensor suites.
    #[arg(long, default_value_t = 4)]
    window: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    epsilon: i64,
    /// Restrict the tensor suites to one flavor pattern, e.g. `1,2`.
    #[arg(long)]
    flavors: Option<String>,
    /// Largest number of tensor factors.
    #[arg(long, default_value_t = 3)]
    depth: usize,
    /// Largest partition size for the Fock suites.
    #[arg(long)]
    max_size: Option<usize>,
    /// Number of random cases.
    #[arg(long)]
    cases: Option<usize>,
    /// Length bound for tableaux and Hom tables.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, default_value_t = 1)]
    level: usize,
}

fn parse_word(s: &str) -> Result<Vec<Residue>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<Residue>()
                .with_context(|| format!("bad residue {x:?}"))
        })
        .collect()
}

fn check_eps(eps: i64) -> Result<()> {
    if eps != 1 && eps != -1 {
        bail!("epsilon must be 1 or -1, got {eps}");
    }
    Ok(())
}

fn parse_shape(s: &str, level: usize) -> Result<Multipartition> {
    let lam: Multipartition = if s.trim().is_empty() && level > 1 {
        Multipartition::empty(level)
    } else {
        s.parse()?
    };
    if lam.level() != level {
        bail!(
            "shape {s:?} has {} components, expected {level}",
            lam.level()
        );
    }
    Ok(lam)
}

/// Output of one command, rendered according to `--format`.
struct Out {
    json: serde_json::Value,
    csv: Vec<String>,
    text: String,
}

impl Out {
    fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
            Format::Csv => self.csv.join("\n"),
            Format::Text => self.text.trim_end().to_string(),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn tableau_text(t: &UpDownTableau) -> String {
    t.shapes()
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" → ")
}

fn run_tableaux(cmd: TableauxCmd) -> Result<Out> {
    Ok(match cmd {
        TableauxCmd::Count(sh) => match &sh.shape {
            Some(s) => {
                let lam = parse_shape(s, sh.level)?;
                let n = tableaux::count_by_shape(sh.length, sh.level)
                    .get(&lam)
                    .copied()
                    .unwrap_or(0);
                Out {
                    json: to_json(&n),
                    csv: vec!["count".into(), n.to_string()],
                    text: n.to_string(),
                }
            }
            None => {
                let counts = tableaux::count_by_shape(sh.length, sh.level);
                let rows: Vec<(String, u128)> =
                    counts.iter().map(|(k, v)| (k.to_string(), *v)).collect();
                Out {
                    json: to_json(
                        &counts
                            .iter()
                            .map(|(k, v)| serde_json::json!({"shape": k, "count": v}))
                            .collect::<Vec<_>>(),
                    ),
                    csv: std::iter::once("shape,count".to_string())
                        .chain(rows.iter().map(|(k, v)| format!("{},{v}", csv_field(k))))
                        .collect(),
                    text: rows.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect(),
                }
            }
        },
        TableauxCmd::List(sh) => {
            let ts: Vec<UpDownTableau> = match &sh.shape {
                Some(s) => tableaux::enumerate(sh.length, &parse_shape(s, sh.level)?),
                None => tableaux::enumerate_all(sh.length, sh.level),
            };
            Out {
                json: to_json(&ts),
                csv: std::iter::once("index,shapes".to_string())
                    .chain(
                        ts.iter()
                            .enumerate()
                            .map(|(n, t)| format!("{n},{}", csv_field(&tableau_text(t)))),
                    )
                    .collect(),
                text: ts.iter().map(|t| tableau_text(t) + "\n").collect(),
            }
        }
        TableauxCmd::Dims { level, length } => {
            let rows: Vec<(usize, u128)> = (0..=length)
                .map(|m| (m, tableaux::dimension_sum(m, level)))
                .collect();
            Out {
                json: to_json(
                    &rows
                        .iter()
                        .map(|(m, d)| serde_json::json!({"length": m, "dimension": d}))
                        .collect::<Vec<_>>(),
                ),
                csv: std::iter::once("length,dimension".to_string())
                    .chain(rows.iter().map(|(m, d)| format!("{m},{d}")))
                    .collect(),
                text: rows.iter().map(|(m, d)| format!("{m}\t{d}\n")).collect(),
            }
        }
    })
}

fn fock_out<V: Serialize + std::fmt::Display>(v: &V, terms: Vec<(String, String)>) -> Out {
    Out {
        json: to_json(v),
        csv: std::iter::once("partition,coeff".to_string())
            .chain(
                terms
                    .iter()
                    .map(|(p, c)| format!("{},{}", csv_field(p), csv_field(c))),
            )
            .collect(),
        text: v.to_string(),
    }
}

macro_rules! fock_terms {
    ($v:expr) => {
        $v.terms()
            .iter()
            .map(|(p, c)| (p.to_string(), c.to_string()))
            .collect::<Vec<_>>()
    };
}

fn run_fock(cmd: FockCmd) -> Result<Out> {
    match cmd {
        FockCmd::Act { opts, i, partition } => {
            check_eps(opts.epsilon)?;
            if opts.dual {
                let v = DualFockVector::basis(partition, opts.charge, opts.epsilon).act(&i)?;
                Ok(fock_out(&v, fock_terms!(v)))
            } else {
                let v = FockVector::basis(partition, opts.charge, opts.epsilon).act(&i)?;
                Ok(fock_out(&v, fock_terms!(v)))
            }
        }
        FockCmd::Word {
            opts,
            word,
            partition,
        } => {
            check_eps(opts.epsilon)?;
            let word = parse_word(&word)?;
            if opts.dual {
                let v =
                    DualFockVector::basis(partition, opts.charge, opts.epsilon).act_word(&word)?;
                Ok(fock_out(&v, fock_terms!(v)))
            } else {
                let v = FockVector::basis(partition, opts.charge, opts.epsilon).act_word(&word)?;
                Ok(fock_out(&v, fock_terms!(v)))
            }
        }
        FockCmd::Bar { opts, partition } => {
            let mut b = BarInvolution::new(opts.charge, opts.epsilon)?;
            if opts.dual {
                let v = b.unbar_basis(&partition)?;
                Ok(fock_out(&v, fock_terms!(v)))
            } else {
                let v = b.bar_basis(&partition)?;
                Ok(fock_out(&v, fock_terms!(v)))
            }
        }
        FockCmd::Tau { opts, partition } => {
            let mut t = Transpose::new(opts.charge, opts.epsilon)?;
            let v = t.tau_basis(&partition)?;
            Ok(fock_out(&v, fock_terms!(v)))
        }
        FockCmd::Pair {
            opts,
            left,
            right,
            word,
        } => {
            check_eps(opts.epsilon)?;
            let w = DualFockVector::basis(left, opts.charge.clone(), opts.epsilon);
            let v = FockVector::basis(right, opts.charge, opts.epsilon)
                .act_word(&parse_word(&word)?)?;
            let s = fock::pairing(&w, &v)?;
            Ok(Out {
                json: to_json(&s),
                csv: vec!["value".into(), csv_field(&s.to_string())],
                text: s.to_string(),
            })
        }
    }
}

fn laurent_out(p: &LaurentPoly) -> Out {
    Out {
        json: to_json(p),
        csv: std::iter::once("exp,coeff".to_string())
            .chain(p.terms().map(|(e, c)| format!("{e},{c}")))
            .collect(),
        text: p.to_string(),
    }
}

fn report_out(reports: &[Report]) -> Out {
    Out {
        json: if reports.len() == 1 {
            to_json(&reports[0])
        } else {
            to_json(&reports)
        },
        csv: std::iter::once("suite,checked,failed,status".to_string())
            .chain(reports.iter().map(Report::csv_row))
            .collect(),
        text: reports.iter().map(|r| r.to_string()).collect(),
    }
}

fn run_klr(cmd: KlrCmd) -> Result<(Out, bool)> {
    Ok(match cmd {
        KlrCmd::Gdim {
            charges,
            src,
            tgt,
            epsilon,
        } => {
            check_eps(epsilon)?;
            let c = charges.resolve()?;
            let p = klr::graded_hom_dim(&parse_word(&src)?, &parse_word(&tgt)?, &c, epsilon);
            (laurent_out(&p), true)
        }
        KlrCmd::Act {
            partition,
            i,
            epsilon,
        } => {
            check_eps(epsilon)?;
            let terms = klr::eklr_act(&partition, i, epsilon);
            let out = Out {
                json: to_json(
                    &terms
                        .iter()
                        .map(|(p, d)| serde_json::json!({"partition": p, "degree": d}))
                        .collect::<Vec<_>>(),
                ),
                csv: std::iter::once("partition,degree".to_string())
                    .chain(
                        terms
                            .iter()
                            .map(|(p, d)| format!("{},{d}", csv_field(&p.to_string()))),
                    )
                    .collect(),
                text: terms.iter().map(|(p, d)| format!("{p}\tq^{d}\n")).collect(),
            };
            (out, true)
        }
        KlrCmd::Projective {
            charges,
            partition,
            epsilon,
        } => {
            check_eps(epsilon)?;
            let c = charges.resolve()?;
            let lam = parse_shape(&partition, c.level())?;
            let m: BTreeMap<Multipartition, LaurentPoly> =
                klr::projective_in_standards(&lam, &c, epsilon);
            let out = Out {
                json: to_json(
                    &m.iter()
                        .map(|(k, v)| serde_json::json!({"shape": k, "multiplicity": v}))
                        .collect::<Vec<_>>(),
                ),
                csv: std::iter::once("shape,multiplicity".to_string())
                    .chain(m.iter().map(|(k, v)| {
                        format!(
                            "{},{}",
                            csv_field(&k.to_string()),
                            csv_field(&v.to_string())
                        )
                    }))
                    .collect(),
                text: m.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect(),
            };
            (out, true)
        }
        KlrCmd::VerifyRelations { bound, epsilon } => {
            check_eps(epsilon)?;
            let r = verify::k0_suite(bound, epsilon);
            let ok = r.passed();
            (report_out(&[r]), ok)
        }
    })
}

fn tensor_window(a: &VerifyArgs) -> Result<TensorWindow> {
    if a.window < 0 {
        bail!("--window must be non-negative");
    }
    Ok(match &a.flavors {
        Some(f) => TensorWindow {
            window: a.window,
            patterns: vec![parse_flavors(f)?],
        },
        None => TensorWindow {
            window: a.window,
            patterns: (1..=a.depth).flat_map(all_flavor_patterns).collect(),
        },
    })
}

fn run_suite(suite: Suite, a: &VerifyArgs, seed: u64) -> Result<Vec<Report>> {
    let eps = a.epsilon;
    let size = |d: usize| a.max_size.unwrap_or(d);
    Ok(match suite {
        Suite::Uqg => vec![verify::uqg_suite(&tensor_window(a)?)],
        Suite::Hecke => vec![verify::hecke_suite(&tensor_window(a)?)],
        Suite::HeckeCommute => vec![verify::hecke_commute_suite(&tensor_window(a)?)],
        Suite::Coideal => vec![verify::coideal_suite(&tensor_window(a)?, eps)],
        Suite::BetaB => vec![verify::beta_b_suite(a.window.max(5))],
        Suite::FockRelations => vec![verify::fock_relations_suite(size(6), size(6).min(5), eps)],
        Suite::FockSupport => vec![verify::fock_support_suite(size(6), eps)],
        Suite::FockStability => vec![verify::fock_stability_suite(size(6), eps)],
        Suite::Categorification => vec![verify::categorification_suite(size(5), eps)],
        Suite::Bar => vec![verify::bar_suite(size(4), eps)],
        Suite::Tau => vec![verify::tau_suite(size(5), eps)],
        Suite::Adjoint => vec![verify::adjoint_suite(
            a.cases.unwrap_or(200),
            size(4),
            4,
            seed,
            eps,
        )],
        Suite::Degrees => vec![verify::degree_suite(
            a.cases.unwrap_or(500),
            a.bound.unwrap_or(6),
            seed,
        )],
        Suite::Dimensions => {
            let m = a.bound.unwrap_or(if a.level == 1 { 6 } else { 4 });
            vec![verify::dimensions_suite(a.level, m)]
        }
        Suite::K0 => vec![verify::k0_suite(a.bound.unwrap_or(5), eps)],
        Suite::MultiFock => vec![verify::multi_fock_suite(size(3), eps)],
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::value_variants().iter().filter(|s| **s != Suite::All) {
                out.extend(run_suite(*s, a, seed)?);
            }
            out
        }
    })
}

fn run(cli: Cli) -> Result<(Out, bool)> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    match cli.cmd {
        Cmd::Tableaux(c) => Ok((run_tableaux(c)?, true)),
        Cmd::Fock(c) => Ok((run_fock(c)?, true)),
        Cmd::Klr(c) => run_klr(c),
        Cmd::Verify(a) => {
            check_eps(a.epsilon)?;
            let reports = run_suite(a.suite, &a, cli.seed)?;
            let ok = reports.iter().all(Report::passed);
            Ok((report_out(&reports), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.format;
    match run(cli) {
        Ok((out, ok)) => {
            println!("{}", out.render(fmt));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
