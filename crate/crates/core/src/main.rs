use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hopfkit::cli::{matrix_json, parse, report_json, run_suite, Config, SUITES};
use hopfkit::coiso::galilei_subgroup;
use hopfkit::induce::galilei_matrix;
use hopfkit::pairing::{select_orientation, Pairing, PairingConvention, Side};
use hopfkit::report::CheckReport;

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "Exact verification of Hopf *-algebra constructions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Clone, Default)]
struct Overrides {
    #[arg(long)]
    degree: Option<u32>,
    #[arg(long)]
    window: Option<i64>,
    #[arg(long)]
    preset: Option<String>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Def,
    Lemma,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Hopf,
    AsPrinted,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites (`all` runs every suite).
    Verify {
        suites: Vec<String>,
        #[command(flatten)]
        o: Overrides,
    },
    /// Print the normal form of an expression.
    Eval {
        #[arg(long, default_value = "uq-g1")]
        algebra: String,
        expr: String,
    },
    /// Evaluate the duality pairing ⟨X, a⟩.
    Pair {
        x: String,
        a: String,
        #[arg(long, value_enum, default_value = "hopf")]
        convention: ConventionArg,
    },
    /// Matrix of ρ̃(X) on the Galilei window as JSON.
    Matrix {
        #[arg(long)]
        op: String,
        #[arg(long, default_value_t = 5)]
        window: i64,
    },
    /// Basis of the Galilei homogeneous space.
    HomogeneousSpace {
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Quasi-invariance of ν_w with the Galilei weight.
    VerifyFunctional {
        #[arg(long, value_enum, default_value = "def")]
        form: FormArg,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[command(flatten)]
        o: Overrides,
    },
    /// Induced representation batteries.
    Induce {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        generic: bool,
        #[arg(long, default_value = "trivial")]
        corep: String,
        #[command(flatten)]
        o: Overrides,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("hopfkit: {}", msg);
    ExitCode::from(2)
}

fn config(o: &Overrides) -> Result<Config, String> {
    let mut c = match &o.config {
        Some(p) => Config::load(p).map_err(|e| e.to_string())?,
        None => Config::default(),
    };
    if let Some(d) = o.degree {
        c.degree = d;
    }
    if let Some(w) = o.window {
        if w < 0 {
            return Err("window must be nonnegative".into());
        }
        c.window = w;
    }
    if let Some(p) = &o.preset {
        c.preset = p.clone();
    }
    if let Some(p) = &o.out {
        c.output = Some(p.clone());
    }
    Ok(c)
}

fn run(cfg: &Config, names: &[String]) -> ExitCode {
    let names: Vec<String> = if names.iter().any(|n| n == "all") {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    if names.is_empty() {
        return usage("no suite given");
    }
    let results: Vec<_> = names.par_iter().map(|n| run_suite(n, cfg)).collect();
    let mut reports: Vec<CheckReport> = Vec::new();
    for r in results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => return usage(e),
        }
    }
    let json = report_json(&cfg.preset, &reports);
    println!("{}", json);
    if let Some(p) = &cfg.output {
        if let Err(e) = std::fs::write(p, format!("{}\n", json)) {
            return usage(format!("{}: {}", p.display(), e));
        }
    }
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify { suites, o } => {
            let cfg = match config(&o) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let names = if suites.is_empty() { cfg.suites.clone() } else { suites };
            run(&cfg, &names)
        }
        Cmd::Eval { algebra, expr } => match parse(&expr, &algebra) {
            Ok(p) => {
                println!("{}", p.value);
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Cmd::Pair { x, a, convention } => {
            let (xe, ae) = match (parse(&x, "uq-g1"), parse(&a, "fq-g1")) {
                (Ok(x), Ok(a)) => (x.value, a.value),
                (Err(e), _) | (_, Err(e)) => return usage(e),
            };
            let value = match convention {
                ConventionArg::Hopf => Pairing::galilei().pair(&xe, &ae),
                ConventionArg::AsPrinted => {
                    let c = PairingConvention::AsPrinted;
                    Pairing::new(c, select_orientation(c).0).pair(&xe, &ae)
                }
            };
            println!("{}", value);
            ExitCode::SUCCESS
        }
        Cmd::Matrix { op, window } => {
            if window < 0 {
                return usage("window must be nonnegative");
            }
            match parse(&op, "uq-g1") {
                Ok(p) => {
                    println!("{}", matrix_json(&galilei_matrix(&p.value, window)));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Cmd::HomogeneousSpace { degree, side } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            match galilei_subgroup().homogeneous_space(degree, side) {
                Ok(hs) => {
                    for b in &hs.basis {
                        println!("{}", b);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Cmd::VerifyFunctional { form, side, o } => {
            let cfg = match config(&o) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let suite = match (form, side) {
                (_, SideArg::Right) => "mirror-right",
                (FormArg::Def, SideArg::Left) => "functional-def",
                (FormArg::Lemma, SideArg::Left) => "functional-lemma",
            };
            run(&cfg, &[suite.to_string()])
        }
        Cmd::Induce { suite, generic, corep, o } => {
            let cfg = match config(&o) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            if generic {
                if corep != "trivial" {
                    return usage(format!("unsupported corepresentation {:?}", corep));
                }
                return run(&cfg, &["ind-generic".to_string()]);
            }
            let names: Vec<String> = match suite {
                Some(s) if ["relations", "unitarity", "jform", "intertwiner"].contains(&s.as_str()) => vec![s],
                Some(s) => return usage(format!("unknown induce suite {:?}", s)),
                None => ["relations", "unitarity", "jform", "intertwiner"].iter().map(|s| s.to_string()).collect(),
            };
            run(&cfg, &names)
        }
    }
}
