use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use codegree::chartab::dump::TableDump;
use codegree::codegree::{graph_components, profile};
use codegree::orbits::{clifford_inclusion_check, orbits_on_dual, orbits_on_subgroup};
use codegree::structure;
use codegree::verify::{run_corpus, Check, RunOptions};
use codegree::zoo::{load_corpus, Recipe};
use codegree::{CharacterTable, Error, FiniteGroup, Result, Subgroup};

#[derive(Parser)]
#[command(
    name = "codeg",
    version,
    about = "Character tables and codegrees of small permutation groups"
)]
struct Cli {
    /// Seed for the randomized parts (never changes results).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table in dump format.
    Table { recipe: String },
    /// Print codegrees, per-prime codegree sets and k.
    Cod { recipe: String },
    /// Print a prime graph in DOT format.
    Graph {
        recipe: String,
        #[arg(long, value_enum, default_value_t = Which::Codegree)]
        dot: Which,
    },
    /// Print structural data: series, cores, Fitting, Frobenius structure.
    Structure { recipe: String },
    /// Orbits of a complement on an abelian normal subgroup and its dual.
    Orbits {
        recipe: String,
        #[arg(long, value_enum, default_value_t = Source::Auto)]
        complement: Source,
    },
    /// Run the checks over a corpus file.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        lemma21_max_order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Codegree,
    Prime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    /// The recipe's semidirect parts if any, otherwise the Frobenius structure.
    Auto,
    Semidirect,
    Frobenius,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::BadParameter(_) | Error::Io(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn build(recipe: &str) -> Result<(FiniteGroup, Option<(Subgroup, Subgroup)>)> {
    Recipe::parse(recipe)?.build_with_parts()
}

fn table_of(g: FiniteGroup, seed: u64) -> Result<CharacterTable> {
    CharacterTable::dixon(Arc::new(g), seed)
}

fn orders(hs: &[Subgroup]) -> String {
    hs.iter()
        .map(|h| h.order().to_string())
        .collect::<Vec<_>>()
        .join(" > ")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let seed = cli.seed;
    match cli.command {
        Command::Table { recipe } => {
            let t = table_of(build(&recipe)?.0, seed)?;
            print!("{}", TableDump::from_table(&t).to_text());
        }
        Command::Cod { recipe } => {
            let t = table_of(build(&recipe)?.0, seed)?;
            let p = profile(&t)?;
            println!("order {}", p.order);
            println!("cod {:?}", p.cod_set);
            for (q, set) in &p.cod_p {
                println!("cod_{q} {set:?}");
            }
            println!("k {}", p.k_value);
            println!(
                "codegree graph components {:?}",
                graph_components(&p.codegree_graph)
            );
            println!("prime graph components {:?}", graph_components(&p.gk_graph));
        }
        Command::Graph { recipe, dot } => {
            let t = table_of(build(&recipe)?.0, seed)?;
            let p = profile(&t)?;
            match dot {
                Which::Codegree => print!("{}", p.codegree_graph.to_dot("codegree")),
                Which::Prime => print!("{}", p.gk_graph.to_dot("prime")),
            }
        }
        Command::Structure { recipe } => {
            let g = build(&recipe)?.0;
            println!("order {}", g.order());
            println!("classes {}", g.class_count());
            println!("exponent {}", g.exponent());
            println!("primes {:?}", structure::prime_divisors(&g));
            let d = structure::derived_series(&g);
            println!("derived series {}", orders(&d.terms));
            match structure::derived_length(&g) {
                Ok(n) => println!("derived length {n}"),
                Err(_) => println!("derived length none (not solvable)"),
            }
            println!("nilpotent {}", structure::is_nilpotent(&g));
            let lattice = structure::normal_subgroups(&g);
            let sizes: Vec<usize> = lattice.members().iter().map(Subgroup::order).collect();
            println!("normal subgroups {sizes:?}");
            for p in structure::prime_divisors(&g) {
                let op = structure::core_p(&g, p)?.order();
                let opp = structure::core_p_prime(&g, p)?.order();
                let sylow = structure::sylow_seeded(&g, p, seed)?.order();
                print!("p={p} O_p={op} O_p'={opp} sylow={sylow}");
                match structure::p_length(&g, p) {
                    Ok(l) => println!(" p_length={l}"),
                    Err(_) => println!(),
                }
            }
            println!("fitting {}", structure::fitting(&g).order());
            match structure::frobenius_structure(&g) {
                Some(f) => println!(
                    "frobenius kernel {} complement {}",
                    f.kernel.order(),
                    f.complement.order()
                ),
                None => println!("frobenius none"),
            }
        }
        Command::Orbits { recipe, complement } => {
            let (g, parts) = build(&recipe)?;
            let chosen = match (complement, parts) {
                (Source::Auto | Source::Semidirect, Some((h, v))) => Some((h, v)),
                (Source::Semidirect, None) => {
                    return Err(Error::BadParameter(
                        "recipe is not a semidirect product".into(),
                    ))
                }
                _ => structure::frobenius_structure(&g).map(|f| (f.complement, f.kernel)),
            };
            let Some((h, v)) = chosen else {
                return Err(Error::NotComplemented(
                    "no Frobenius structure found".into(),
                ));
            };
            let prim = orbits_on_subgroup(&g, &h, &v)?;
            let dual = orbits_on_dual(&g, &h, &v, seed)?;
            println!("acting order {} module order {}", h.order(), v.order());
            println!("element orbit sizes {:?}", prim.sizes());
            println!("dual orbit sizes {:?}", dual.sizes());
            println!("m* {:?} (count {})", dual.m_star_set, dual.m_star_count);
            let t = table_of(g, seed)?;
            let c = clifford_inclusion_check(&t, &h, &v, seed)?;
            println!("cd(G|V) {:?}", c.cd_over);
            println!("cod(G|V) {:?}", c.cod_over);
            println!("inclusion {}", if c.holds() { "holds" } else { "fails" });
            if !c.holds() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify {
            corpus,
            checks,
            jobs,
            json,
            lemma21_max_order,
        } => {
            let entries = load_corpus(&corpus)?;
            let opts = RunOptions {
                checks: Check::parse_list(&checks)?,
                jobs,
                seed,
                lemma21_max_order,
            };
            let report = run_corpus(&entries, &opts)?;
            for g in &report.groups {
                let failed: Vec<&str> = g
                    .records
                    .iter()
                    .filter(|r| r.status == codegree::verify::Status::Fail)
                    .map(|r| r.check)
                    .collect();
                if let Some(e) = &g.error {
                    println!("ERROR {}: {e}", g.label);
                } else if !failed.is_empty() {
                    println!("FAIL  {}: {}", g.label, failed.join(", "));
                }
            }
            let s = &report.summary;
            println!(
                "{} groups, {} records: {} pass, {} fail, {} skipped, {} errors",
                s.groups, s.records, s.passed, s.failed, s.skipped, s.errors
            );
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())?;
            }
            if report.failed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
