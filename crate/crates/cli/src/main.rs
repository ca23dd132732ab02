use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mcgrep_core::algebra::BigRational;

use mcgrep_core::algebra::{format_rational, AnyMatrix, MatrixFormat};
use mcgrep_core::assembly::{dimension_report, homology_for, AssembledRep};
use mcgrep_core::certify::{certify, CertReport};
use mcgrep_core::config::RepConfig;
use mcgrep_core::garside::normal_form;
use mcgrep_core::homology::{residue_check, HomologyModel};
use mcgrep_core::lk::LkGeneratorTable;
use mcgrep_core::model::relator_suite;
use mcgrep_core::rep::{Mode, RepMatrix, Verdict};
use mcgrep_core::rescale::{check_scalarity, KernelWords, LPrime};
use mcgrep_core::{parse_word, Alphabet, Error, Parallelism};

#[derive(Parser)]
#[command(name = "mcgrep", version, about = "Exact linear representation of the hyperelliptic mapping class group of N_g")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Genus g (number of crosscaps), at least 4.
    #[arg(long, global = true, default_value_t = 4)]
    genus: u32,
    /// TOML config file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Interval precision in bits; overrides the config.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Evaluation mode; overrides the config.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Worker threads for the parallel build (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Run every suite on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Interval,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for MatrixFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => MatrixFormat::Json,
            FormatArg::Csv => MatrixFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Expect {
    Distinct,
    Equal,
}

#[derive(Subcommand)]
enum Command {
    /// Print L(w) for a word in T1.., R, Y.
    Eval {
        #[arg(long)]
        word: String,
    },
    /// Compare L(a) and L(b).
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Exit nonzero unless the verdict matches.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Run every certification suite.
    Certify {
        /// Genera to certify, comma separated; defaults to --genus.
        #[arg(long, value_delimiter = ',')]
        genera: Vec<u32>,
    },
    /// Print the tagged relator list.
    Relators,
    /// Garside normal form of a braid word.
    BraidNf {
        #[arg(long)]
        word: String,
    },
    /// Symbolic Lawrence-Krammer matrix of a braid word.
    LkEval {
        #[arg(long)]
        word: String,
        /// Evaluate at the configured (q0, t0) instead.
        #[arg(long)]
        specialize: bool,
    },
    /// L1 of a hyperelliptic word (or of a sphere word with --sphere).
    L1Eval {
        #[arg(long)]
        word: String,
        #[arg(long)]
        sphere: bool,
    },
    /// L2 of a hyperelliptic word.
    L2Eval {
        #[arg(long)]
        word: String,
        /// Homology model override (JSON).
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Check a homology model against its residue table.
    L2Check {
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Scalarity of the kernel words and the rescale unit.
    RescaleSolve,
    /// Dimension of L against the naive bound.
    Dims {
        /// Genera to report, comma separated; defaults to --genus.
        #[arg(long, value_delimiter = ',')]
        genera: Vec<u32>,
    },
    /// Write L(w) to a file.
    Export {
        #[arg(long)]
        word: String,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

struct Ctx {
    genus: u32,
    cfg: RepConfig,
    par: Parallelism,
}

impl Ctx {
    fn from_global(g: &Global) -> Result<Self, Error> {
        let mut cfg = match &g.config {
            Some(path) => RepConfig::load(path)?,
            None => RepConfig::default(),
        };
        if let Some(p) = g.precision {
            cfg.precision = p;
        }
        if let Some(m) = g.mode {
            cfg.mode = match m {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Interval => Mode::Interval,
            };
        }
        if g.threads > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(g.threads)
                .build_global()
                .map_err(|e| Error::Config(e.to_string()))?;
        }
        let par = if g.sequential {
            Parallelism::Sequential
        } else {
            Parallelism::Parallel
        };
        Ok(Ctx {
            genus: g.genus,
            cfg,
            par,
        })
    }

    fn rep(&self) -> Result<AssembledRep, Error> {
        Ok(AssembledRep::from_config(self.genus, &self.cfg)?.with_parallelism(self.par))
    }

    fn hyper(&self, text: &str) -> Result<mcgrep_core::GroupWord, Error> {
        parse_word(text, Alphabet::HyperMcg, self.genus)
    }

    fn homology(&self, model: &Option<PathBuf>) -> Result<HomologyModel, Error> {
        let mut cfg = self.cfg.clone();
        if let Some(path) = model {
            cfg.homology_model = Some(path.clone());
        }
        homology_for(self.genus, &cfg)
    }
}

fn print_matrix(m: &RepMatrix) {
    println!("{}", m.to_any().to_json_string());
}

fn print_report(report: &CertReport) -> bool {
    print!("{}", report.render());
    report.all_pass()
}

fn run(cli: Cli) -> Result<bool, Error> {
    let ctx = Ctx::from_global(&cli.global)?;
    let g = ctx.genus;
    match cli.command {
        Command::Eval { word } => {
            let w = ctx.hyper(&word)?;
            print_matrix(&ctx.rep()?.eval(&w)?);
            Ok(true)
        }
        Command::Compare { left, right, expect } => {
            let (a, b) = (ctx.hyper(&left)?, ctx.hyper(&right)?);
            let verdict = ctx.rep()?.compare_words(&a, &b)?;
            println!("{verdict}");
            Ok(match expect {
                None => true,
                Some(Expect::Distinct) => matches!(verdict, Verdict::Distinct(_)),
                Some(Expect::Equal) => verdict == Verdict::EqualExact,
            })
        }
        Command::Certify { genera } => {
            let genera = if genera.is_empty() { vec![g] } else { genera };
            Ok(print_report(&certify(&genera, &ctx.cfg, ctx.par)?))
        }
        Command::Relators => {
            let model = ctx.homology(&None)?;
            for rel in relator_suite(g, model.residues())? {
                println!("{rel}");
            }
            Ok(true)
        }
        Command::BraidNf { word } => {
            let w = parse_word(&word, Alphabet::Braid, g)?;
            println!("{}", normal_form(&w)?);
            Ok(true)
        }
        Command::LkEval { word, specialize } => {
            let w = parse_word(&word, Alphabet::Braid, g)?;
            let table = LkGeneratorTable::build(g)?;
            let m: AnyMatrix = if specialize {
                let (q0, t0) = ctx.cfg.point_for(g)?;
                table.specialize(&q0, &t0)?.eval_with(&w, ctx.par)?.into()
            } else {
                table.eval_with(&w, ctx.par)?.into()
            };
            println!("{}", m.to_json_string());
            Ok(true)
        }
        Command::L1Eval { word, sphere } => {
            let rep = ctx.rep()?;
            let m = if sphere {
                let w = parse_word(&word, Alphabet::SphereExt, g)?;
                rep.induced().induced_eval_with(&w, ctx.par)?
            } else {
                rep.l1_eval(&ctx.hyper(&word)?)?
            };
            print_matrix(&m);
            Ok(true)
        }
        Command::L2Eval { word, model } => {
            let m = ctx.homology(&model)?.eval(&ctx.hyper(&word)?)?;
            println!("{}", AnyMatrix::from(m).to_json_string());
            Ok(true)
        }
        Command::L2Check { model } => {
            let model = ctx.homology(&model)?;
            Ok(print_report(&residue_check(&model)))
        }
        Command::RescaleSolve => rescale_solve(&ctx),
        Command::Dims { genera } => {
            let genera = if genera.is_empty() { vec![g] } else { genera };
            let mut ok = true;
            for g in genera {
                if g < mcgrep_core::words::MIN_GENUS {
                    return Err(Error::GenusTooSmall {
                        genus: g,
                        min: mcgrep_core::words::MIN_GENUS,
                    });
                }
                let r = dimension_report(g);
                println!("{r}");
                ok &= r.identity_holds() && r.main == r.l1 + r.l2;
            }
            Ok(ok)
        }
        Command::Export {
            word,
            output,
            format,
        } => {
            ctx.rep()?.export(&ctx.hyper(&word)?, &output, format.into())?;
            println!("wrote {}", output.display());
            Ok(true)
        }
    }
}

fn rescale_solve(ctx: &Ctx) -> Result<bool, Error> {
    let g = ctx.genus;
    let (q0, t0) = ctx.cfg.point_for(g)?;
    println!("point: q0 = {}, t0 = {}", format_rational(&q0), format_rational(&t0));
    let spec = LkGeneratorTable::build(g)?.specialize(&q0, &t0)?;
    let kernel = KernelWords::new(g);
    let mut ok = true;
    let report = |name: &str, r: Result<BigRational, Error>, ok: &mut bool| match r {
        Ok(c) => println!("lambda_{name} = {}", format_rational(&c)),
        Err(e) => {
            *ok = false;
            println!("lambda_{name}: {e}");
        }
    };
    report("tau", check_scalarity(&spec, &kernel.tau), &mut ok);
    report("z", check_scalarity(&spec, &kernel.z), &mut ok);
    match LPrime::new(spec, ctx.cfg.precision, ctx.cfg.mode) {
        Ok(lp) => {
            println!("unit: {}", lp.unit().value());
            println!("certificate: {}", lp.unit().certificate());
            let verified = lp.unit().verify();
            println!("verified: {verified}");
            ok &= verified;
            let z = lp.eval(&kernel.z)?;
            let fine = z.is_compatible_with_identity();
            println!("L'(z) = Id: {fine}");
            ok &= fine;
        }
        Err(e) => {
            println!("unit: {e}");
            ok = false;
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
