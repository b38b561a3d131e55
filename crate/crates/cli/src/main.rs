use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use unilat::conditions::{
    ie_incomp_condition, join_closure_condition, meet_closure_condition, norm_on_ie01_condition,
    p_annihilation_condition, ConditionResult,
};
use unilat::construct::{construct, ConstructError, ConstructionKind};
use unilat::is_uninorm;
use unilat::lattice::{BoundedLattice, Elem};
use unilat::norms::{
    canonical_tconorm_join, canonical_tnorm_meet, drastic_tconorm, drastic_tnorm, enumerate_norms,
    Axiom, AxiomWitness, NormRole, OpTable,
};
use unilat::sweep::{search_counterexample, sweep, CounterexampleOutcome, TheoremId};

mod latfile;
mod render;

#[derive(Parser)]
#[command(
    name = "unilat",
    about = "Uninorm constructions and characterization checks on finite bounded lattices",
    version
)]
struct Cli {
    /// Worker thread count for parallel scans (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a .lat file and report the lattice structure
    Validate { file: PathBuf },
    /// Build a construction's full table and print it as TSV
    Table {
        file: PathBuf,
        /// Neutral element label
        #[arg(long)]
        e: String,
        /// Construction kind (UT, US_corrected, Ut_corrected, Us_corrected,
        /// UTe, USe, US_legacy, Ut_legacy, Us_legacy)
        #[arg(long)]
        kind: String,
        /// Sub-operation: meet | join | drastic | index:<k>
        #[arg(long)]
        subop: String,
    },
    /// Check the uninorm axioms of a construction, printing witnesses
    Check {
        file: PathBuf,
        #[arg(long)]
        e: String,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        subop: String,
    },
    /// Evaluate the structural conditions at a neutral element
    Conditions {
        file: PathBuf,
        #[arg(long)]
        e: String,
    },
    /// Verify the characterization theorems over all small lattices
    Sweep {
        /// Largest carrier size to enumerate
        #[arg(long)]
        max_n: usize,
        /// Comma-separated theorem names, or "all"
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Also print one archival line per verified case
        #[arg(long)]
        lines: bool,
    },
    /// Search for the smallest instance where a construction breaks an axiom
    Hunt {
        #[arg(long)]
        kind: String,
        /// Axiom: commutativity | associativity | monotonicity | neutrality
        #[arg(long)]
        axiom: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Print the Hasse diagram as DOT
    ExportDot { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<BoundedLattice> {
    let text =
        std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    latfile::parse_lattice(&text).map_err(|e| anyhow!("{}: {e}", file.display()))
}

fn neutral(lattice: &BoundedLattice, label: &str) -> Result<Elem> {
    let e = lattice
        .elem_by_label(label)
        .ok_or_else(|| anyhow!("no element labeled '{label}'"))?;
    if e == lattice.bottom() || e == lattice.top() {
        bail!("neutral element '{label}' must lie strictly between bottom and top");
    }
    Ok(e)
}

fn parse_kind(s: &str) -> Result<ConstructionKind> {
    ConstructionKind::parse(s).ok_or_else(|| {
        anyhow!(
            "unknown construction kind '{s}' (expected one of: {})",
            ConstructionKind::ALL.map(|k| k.name()).join(", ")
        )
    })
}

fn parse_axiom(s: &str) -> Result<Axiom> {
    Ok(match s {
        "commutativity" => Axiom::Commutativity,
        "associativity" => Axiom::Associativity,
        "monotonicity" => Axiom::Monotonicity,
        "neutrality" => Axiom::Neutrality,
        "closure" => Axiom::Closure,
        _ => bail!("unknown axiom '{s}'"),
    })
}

fn parse_theorems(s: &str) -> Result<Vec<TheoremId>> {
    if s == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    s.split(',')
        .map(|name| {
            TheoremId::parse(name.trim()).ok_or_else(|| {
                anyhow!(
                    "unknown theorem '{name}' (expected one of: {}, or 'all')",
                    TheoremId::ALL.map(|t| t.name()).join(", ")
                )
            })
        })
        .collect()
}

fn resolve_subop(lattice: &BoundedLattice, e: Elem, role: NormRole, spec: &str) -> Result<OpTable> {
    match (spec, role) {
        ("meet", NormRole::TNorm) => Ok(canonical_tnorm_meet(lattice, e)?),
        ("join", NormRole::TConorm) => Ok(canonical_tconorm_join(lattice, e)?),
        ("meet", NormRole::TConorm) => {
            bail!("this kind needs a t-conorm on [e, 1]; 'meet' is a t-norm choice")
        }
        ("join", NormRole::TNorm) => {
            bail!("this kind needs a t-norm on [0, e]; 'join' is a t-conorm choice")
        }
        ("drastic", NormRole::TNorm) => Ok(drastic_tnorm(lattice, e)?),
        ("drastic", NormRole::TConorm) => Ok(drastic_tconorm(lattice, e)?),
        (s, _) => {
            let k: usize = s
                .strip_prefix("index:")
                .ok_or_else(|| anyhow!("sub-op must be meet, join, drastic, or index:<k>"))?
                .parse()
                .context("index:<k> takes a number")?;
            let all = enumerate_norms(lattice, e, role)?;
            all.get(k)
                .cloned()
                .ok_or_else(|| anyhow!("index {k} out of range: {} sub-ops exist", all.len()))
        }
    }
}

fn fmt_elems(lattice: &BoundedLattice, elems: &[Elem]) -> String {
    elems
        .iter()
        .map(|&x| lattice.label(x))
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_witness(lattice: &BoundedLattice, w: &AxiomWitness) -> String {
    format!(
        "{} violated at ({}): values {} vs {}",
        w.axiom,
        fmt_elems(lattice, &w.elems),
        lattice.label(w.lhs),
        lattice.label(w.rhs),
    )
}

fn print_conflicts(lattice: &BoundedLattice, err: &ConstructError) -> bool {
    if let ConstructError::Conflicts(cs) = err {
        println!(
            "construction is ill-defined: {} conflicting pair(s)",
            cs.len()
        );
        for c in cs {
            println!(
                "  at ({}, {}): case {} gives {}, case {} gives {}",
                lattice.label(c.pair.0),
                lattice.label(c.pair.1),
                c.case_a,
                lattice.label(c.value_a),
                c.case_b,
                lattice.label(c.value_b),
            );
        }
        true
    } else {
        false
    }
}

fn print_condition(lattice: &BoundedLattice, r: &ConditionResult) {
    match &r.witness {
        None => println!("{}: holds", r.id),
        Some(w) => {
            let mut line = format!("{}: fails at ({})", r.id, fmt_elems(lattice, &w.elems));
            if let Some(v) = w.value {
                line.push_str(&format!(" with value {}", lattice.label(v)));
            }
            println!("{line}");
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Validate { file } => {
            let l = load(&file)?;
            println!(
                "valid bounded lattice: {} elements, bottom {}, top {}",
                l.n(),
                l.label(l.bottom()),
                l.label(l.top()),
            );
            let incomparable_pairs = l
                .elems()
                .flat_map(|x| l.elems().map(move |y| (x, y)))
                .filter(|&(x, y)| x < y && l.incomp(x, y))
                .count();
            println!("incomparable pairs: {incomparable_pairs}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            file,
            e,
            kind,
            subop,
        } => {
            let l = load(&file)?;
            let e = neutral(&l, &e)?;
            let kind = parse_kind(&kind)?;
            let sub = resolve_subop(&l, e, kind.role(), &subop)?;
            match construct(&l, e, kind, &sub) {
                Ok(u) => {
                    let order: Vec<Elem> = l.elems().collect();
                    print!("{}", render::render_cayley_table(&l, &u, &order).unwrap());
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) if print_conflicts(&l, &err) => Ok(ExitCode::from(1)),
                Err(err) => Err(err.into()),
            }
        }
        Command::Check {
            file,
            e,
            kind,
            subop,
        } => {
            let l = load(&file)?;
            let e = neutral(&l, &e)?;
            let kind = parse_kind(&kind)?;
            let sub = resolve_subop(&l, e, kind.role(), &subop)?;
            match construct(&l, e, kind, &sub) {
                Ok(u) => {
                    let report = is_uninorm(&l, &u, e);
                    for (name, w) in [
                        ("commutativity", &report.commutative),
                        ("associativity", &report.associative),
                        ("monotonicity", &report.monotone),
                        ("neutrality", &report.neutral),
                    ] {
                        match w {
                            None => println!("{name}: ok"),
                            Some(w) => println!("{name}: {}", fmt_witness(&l, w)),
                        }
                    }
                    if report.is_uninorm {
                        println!("uninorm: yes");
                        Ok(ExitCode::SUCCESS)
                    } else {
                        println!("uninorm: no");
                        Ok(ExitCode::from(1))
                    }
                }
                Err(err) if print_conflicts(&l, &err) => Ok(ExitCode::from(1)),
                Err(err) => Err(err.into()),
            }
        }
        Command::Conditions { file, e } => {
            let l = load(&file)?;
            let e = neutral(&l, &e)?;
            // the annihilation condition depends on a t-norm; the meet (the
            // greatest t-norm on [0, e]) is the default probe
            let meet = canonical_tnorm_meet(&l, e)?;
            let results = [
                meet_closure_condition(&l, e)?,
                join_closure_condition(&l, e)?,
                norm_on_ie01_condition(&l, e, NormRole::TNorm)?,
                norm_on_ie01_condition(&l, e, NormRole::TConorm)?,
                p_annihilation_condition(&l, e, &meet)?,
                ie_incomp_condition(&l, e)?,
            ];
            for r in &results {
                print_condition(&l, r);
            }
            if results.iter().all(|r| r.holds) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Sweep {
            max_n,
            theorems,
            lines,
        } => {
            let theorems = parse_theorems(&theorems)?;
            let report = sweep(max_n, &theorems)?;
            if lines {
                print!("{}", report.lines());
            }
            println!("lattices checked: {}", report.lattices_checked);
            println!("cases checked: {}", report.cases_checked);
            let b = &report.branches;
            println!(
                "branches fired: vacuous={} meet-zero={} meet-in-Ie={} join-one={} join-in-Ie={} P-empty={} P-annihilated={}",
                b.vacuous, b.meet_zero, b.meet_in_ie, b.join_one, b.join_in_ie, b.p_empty, b.p_annihilated,
            );
            if report.inconsistencies.is_empty() {
                println!("inconsistencies: none");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("inconsistencies: {}", report.inconsistencies.len());
                for c in &report.inconsistencies {
                    println!("  {}", c.line());
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Hunt { kind, axiom, max_n } => {
            let kind = parse_kind(&kind)?;
            let axiom = parse_axiom(&axiom)?;
            match search_counterexample(max_n, kind, axiom)? {
                None => {
                    println!("no counterexample for {kind} vs {axiom} up to n={max_n}");
                    Ok(ExitCode::SUCCESS)
                }
                Some(CounterexampleOutcome::AxiomViolation {
                    lattice,
                    e,
                    sub_op,
                    witness,
                }) => {
                    println!(
                        "counterexample on {} elements, e={}, sub-op hash {:016x}:",
                        lattice.n(),
                        lattice.label(e),
                        sub_op.content_hash(),
                    );
                    print!("{}", latfile::serialize_lattice(&lattice));
                    println!("{}", fmt_witness(&lattice, &witness));
                    Ok(ExitCode::from(1))
                }
                Some(CounterexampleOutcome::ConstructionConflicts {
                    lattice,
                    e,
                    conflicts,
                    ..
                }) => {
                    println!(
                        "construction ill-defined on {} elements, e={}:",
                        lattice.n(),
                        lattice.label(e),
                    );
                    print!("{}", latfile::serialize_lattice(&lattice));
                    print_conflicts(&lattice, &ConstructError::Conflicts(conflicts));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::ExportDot { file } => {
            let l = load(&file)?;
            print!("{}", render::export_dot(&l));
            Ok(ExitCode::SUCCESS)
        }
    }
}
