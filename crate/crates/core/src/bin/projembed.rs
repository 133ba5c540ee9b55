//! Command-line interface: parse presentations, inspect groups, compute
//! character tables and projective embedding degrees, and verify the
//! built-in result tables.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use projembed::catalog::{catalog_get, catalog_names, Params};
use projembed::chartab::CharacterTable;
use projembed::closed_forms::TableId;
use projembed::config::Config;
use projembed::covering::Covering;
use projembed::error::Error;
use projembed::group::Group;
use projembed::presentation::{check_consistency, parse_covering, parse_presentation};
use projembed::report::{TauReportOut, SCHEMA_VERSION};
use projembed::tau;
use projembed::verify;

#[derive(Parser)]
#[command(name = "projembed", version, about = "projective embedding degrees of finite groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Budget {
    Low,
    Default,
    High,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// catalog entry name (see `projembed catalog`)
    #[arg(long)]
    group: Option<String>,
    /// file containing a presentation or covering in the pcgroup grammar
    #[arg(long)]
    file: Option<String>,
    /// file containing a covering (pcgroup block + kernel + quotient)
    #[arg(long)]
    covering: Option<String>,
    /// prime parameter for parameterized catalog entries
    #[arg(short = 'p', long, default_value_t = 3)]
    prime: u64,
    /// exponent parameter (e.g. Heisenberg over Z/p^k)
    #[arg(short = 'k', long, default_value_t = 1)]
    k: u32,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long, value_enum, default_value_t = Budget::Default)]
    budget: Budget,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a presentation file and run the consistency tests
    Parse {
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Structural summary: order, centre, derived subgroup, classes, cd(G)
    Info {
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Exact character table
    Chartab {
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Minimal faithful projective degree tau(G)
    Tau {
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Minimal faithful irreducible projective degree tau_irr(G)
    TauIrr {
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Verify a result table against computed values
    Verify {
        /// table id: p3, 2to4, p4, p5
        #[arg(long)]
        table: String,
        #[arg(short = 'p', long, default_value_t = 3)]
        prime: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
        #[arg(long, value_enum, default_value_t = Budget::Default)]
        budget: Budget,
    },
    /// List catalog entries
    Catalog,
}

fn config_for(b: Budget) -> Config {
    let mut cfg = match b {
        Budget::Low => Config::low(),
        Budget::Default => Config::default(),
        Budget::High => Config::high(),
    };
    let env = Config::from_env();
    if env != Config::default() {
        cfg = env;
    }
    cfg
}

fn load_covering_from(src: &SourceArgs, cfg: &Config) -> Result<Covering, Error> {
    if let Some(path) = &src.covering {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
        let spec = parse_covering(&text, cfg)?;
        return Covering::load(&spec, cfg);
    }
    if let Some(name) = &src.group {
        let entry = catalog_get(name, &Params { p: src.prime, k: src.k }, cfg)?;
        return entry.load_covering(cfg);
    }
    if let Some(path) = &src.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
        if text.contains("\nkernel") {
            let spec = parse_covering(&text, cfg)?;
            return Covering::load(&spec, cfg);
        }
        let pres = parse_presentation(&text, cfg)?;
        let g = Group::build(pres, cfg)?;
        return Ok(Covering::trivial(Arc::new(g)));
    }
    Err(Error::Invalid(
        "one of --group, --file or --covering is required".into(),
    ))
}

fn load_group_from(src: &SourceArgs, cfg: &Config) -> Result<Arc<Group>, Error> {
    if let Some(name) = &src.group {
        let entry = catalog_get(name, &Params { p: src.prime, k: src.k }, cfg)?;
        return Ok(Arc::new(entry.build_group(cfg)?));
    }
    if let Some(path) = &src.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
        let pres = parse_presentation(&text, cfg)?;
        return Ok(Arc::new(Group::build(pres, cfg)?));
    }
    Err(Error::Invalid("one of --group or --file is required".into()))
}

fn run_tau(src: &SourceArgs, irr: bool) -> Result<ExitCode, Error> {
    let cfg = config_for(src.budget);
    let cov = load_covering_from(src, &cfg)?;
    let table = CharacterTable::compute(&cov.gstar, &cfg)?;
    let report = if irr {
        tau::tau_irr(&cov, &table, &cfg)?
    } else {
        tau::tau(&cov, &table, &cfg)?
    };
    if src.json {
        let out = TauReportOut {
            schema_version: SCHEMA_VERSION,
            report,
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        let kind = if irr { "tau_irr" } else { "tau" };
        match report.value {
            Some(v) => {
                let exactness = if report.exact { "exact" } else { "upper bound" };
                println!("{kind}({}) = {v}  [{exactness}]", report.group);
                if let Some(w) = &report.witness {
                    let degs: Vec<String> = w
                        .constituents
                        .iter()
                        .map(|c| c.degree.to_string())
                        .collect();
                    println!(
                        "  witness: lambda exponents {:?}, constituent degrees {}",
                        w.lambda,
                        degs.join(" + ")
                    );
                }
            }
            None => {
                let caveat = if report.exact { "" } else { " (within the covering's range)" };
                println!("{kind}({}) does not exist{caveat}", report.group);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn value_grid(table: &CharacterTable) -> Vec<Vec<String>> {
    table
        .irreducibles
        .iter()
        .map(|chi| chi.values.iter().map(|v| format!("{v}")).collect())
        .collect()
}

fn real_main() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Parse { src } => {
            let cfg = config_for(src.budget);
            let path = src
                .file
                .clone()
                .or(src.covering.clone())
                .ok_or_else(|| Error::Invalid("--file is required".into()))?;
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
            let pres = if text.contains("\nkernel") {
                parse_covering(&text, &cfg)?.gstar
            } else {
                parse_presentation(&text, &cfg)?
            };
            let rep = check_consistency(&pres);
            println!(
                "parsed `{}`: {} generators, order {}",
                pres.name,
                pres.num_gens(),
                pres.order()
            );
            if rep.passed() {
                println!("consistency: all {} overlap tests pass", rep.checks.len());
            } else {
                let f = rep.first_failure().unwrap();
                println!("consistency: FAILED at {} ({} != {})", f.description, f.lhs, f.rhs);
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Info { src } => {
            let cfg = config_for(src.budget);
            let g = load_group_from(&src, &cfg)?;
            let info = verify::group_info(&g, &cfg)?;
            if src.json {
                println!("{}", serde_json::to_string_pretty(&info).unwrap());
            } else {
                println!("group {}", info.name);
                println!("  order       {}", info.order);
                println!("  abelian     {}", info.abelian);
                println!("  nilpotent   {}", info.nilpotent);
                println!("  exponent    {}", info.exponent);
                println!("  |Z(G)|      {}", info.center_order);
                println!("  |G'|        {}", info.derived_order);
                println!("  classes     {}", info.num_classes);
                println!("  cd(G)       {:?}", info.character_degrees);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chartab { src } => {
            let cfg = config_for(src.budget);
            let g = load_group_from(&src, &cfg)?;
            let t = CharacterTable::compute(&g, &cfg)?;
            if src.json {
                let grid = value_grid(&t);
                let out = serde_json::json!({
                    "schema_version": SCHEMA_VERSION,
                    "group": g.name(),
                    "exponent": t.exponent,
                    "class_sizes": t.class_sizes,
                    "degrees": t.degrees(),
                    "values": grid,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else if src.csv {
                let mut line = String::from("degree");
                for k in 0..t.num_classes {
                    line.push_str(&format!(",C{k}(size {})", t.class_sizes[k]));
                }
                println!("{line}");
                for chi in &t.irreducibles {
                    let mut row = chi.degree.to_string();
                    for v in &chi.values {
                        row.push_str(&format!(",{v}"));
                    }
                    println!("{row}");
                }
            } else {
                println!(
                    "character table of {} ({} classes, conductor {})",
                    g.name(),
                    t.num_classes,
                    t.exponent
                );
                for (i, chi) in t.irreducibles.iter().enumerate() {
                    let vals: Vec<String> = chi.values.iter().map(|v| format!("{v}")).collect();
                    println!("X{:<3} deg {:>3}: {}", i, chi.degree, vals.join(" | "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tau { src } => run_tau(&src, false),
        Cmd::TauIrr { src } => run_tau(&src, true),
        Cmd::Verify {
            table,
            prime,
            json,
            csv,
            budget,
        } => {
            let cfg = config_for(budget);
            let id = TableId::parse(&table)?;
            let p = if id == TableId::TwoTo4 { 2 } else { prime };
            let rep = verify::verify_table(id, p, &cfg)?;
            if json {
                println!("{}", rep.stable_json());
            } else if csv {
                print!("{}", rep.to_csv());
            } else {
                print!("{}", rep.to_text());
            }
            Ok(if rep.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Catalog => {
            for name in catalog_names() {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
