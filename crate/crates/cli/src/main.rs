//! `monorees`: batch front end for saturations, torsion tables, fits and regularity.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use monorees::asymptotics::{
    check_bounds, fit_eventually, fit_polynomial_with, fit_quasipolynomial_ray, length_table, FitOptions,
    LengthTable, LengthValue, TableMode,
};
use monorees::checks::{run_all, run_suite, SUITES};
use monorees::dsl::{parse_workspace, Workspace};
use monorees::geometry::{analytic_spread, integral_closure, newton_polyhedron};
use monorees::grid::{parse_grid, parse_multi_index};
use monorees::regularity::{betti_table, linear_bound_check, regularity, PowerVariant};
use monorees::saturation::{
    alpha_stabilization, build_plan, rees_generation_degrees, saturate_certified, saturate_planned,
};
use monorees::{Error, MultiIndex};

#[derive(Parser)]
#[command(name = "monorees", version, about = "Saturations, torsion lengths and regularity of monomial ideals")]
struct Cli {
    /// Workspace file declaring the ring, ideals, polynomials and families.
    #[arg(short, long, global = true, value_name = "FILE")]
    workspace: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the workspace in canonical form.
    Show,
    /// Generators of I^n : J^inf, one per line.
    Saturate {
        family: String,
        #[arg(long, value_name = "N1,N2,...")]
        n: String,
        /// Use the certified colon chains instead of the projection plan.
        #[arg(long)]
        certified: bool,
    },
    /// Length table over a grid, as CSV.
    Table {
        family: String,
        #[arg(long)]
        grid: String,
        /// `torsion` or `quotient:G` with G the larger family.
        #[arg(long, default_value = "torsion")]
        mode: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Exact polynomial fit of a table with hold-out validation.
    Fit {
        table: PathBuf,
        #[arg(long)]
        max_degree: u32,
        /// First grid coordinate to fit from.
        #[arg(long)]
        start: Option<u32>,
        /// Search for the smallest start offset admitting a fit.
        #[arg(long)]
        eventually: bool,
        #[arg(long)]
        json: bool,
    },
    /// Quasi-polynomial fit along a ray t*w of a table.
    Fitray {
        table: PathBuf,
        #[arg(long)]
        max_period: u32,
        #[arg(long)]
        max_degree: u32,
        /// Ray direction; defaults to the all-ones vector.
        #[arg(long, value_name = "W1,W2,...")]
        ray: Option<String>,
        #[arg(long, default_value_t = 1)]
        start: u32,
    },
    /// Degree bounds of the fitted torsion length against the analytic spread.
    Bounds {
        family: String,
        #[arg(long)]
        grid: String,
        /// Degree allowed in the fit; defaults to the number of variables.
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Stabilization indices k(n) and the empirical slope.
    Alpha {
        family: String,
        #[arg(long)]
        norm_bound: u32,
    },
    /// New generators of the symbolic multi-Rees algebra by degree.
    Gens {
        family: String,
        #[arg(long)]
        up_to: u32,
    },
    /// Vertices of the Newton polyhedron.
    Newton { ideal: String },
    /// Analytic spread.
    Spread { ideal: String },
    /// Integral closure.
    Closure { ideal: String },
    /// Castelnuovo-Mumford regularity.
    Reg {
        ideal: String,
        /// Also write the Betti table as CSV.
        #[arg(long, value_name = "FILE")]
        betti: Option<PathBuf>,
    },
    /// Regularity defects reg(I^n) - sum n_i d(I_i) over a grid.
    Regtable {
        family: String,
        #[arg(long)]
        grid: String,
        #[arg(long, conflicts_with = "closure")]
        saturated: bool,
        #[arg(long)]
        closure: bool,
    },
    /// Irreducible decomposition.
    Decompose { ideal: String },
    /// Run the property suites.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 25)]
        cases: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// The computation failed or a check did not pass: exit code 1.
    Compute(String),
}

fn compute(e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::Table(_) => Failure::Usage(e.to_string()),
        other => Failure::Compute(other.to_string()),
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(match e {
        Error::Precondition(m) | Error::Domain(m) => m,
        other => other.to_string(),
    })
}

fn load_workspace(path: &Option<PathBuf>) -> Result<Workspace, Failure> {
    let path = path.as_ref().ok_or_else(|| Failure::Usage("this command needs --workspace FILE".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_workspace(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))
}

fn load_table(path: &Path) -> Result<LengthTable, Failure> {
    let file = fs::File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    LengthTable::read_csv(file).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<String, Failure> {
    match out {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::Compute(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(text.to_string()),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Show => {
            out = load_workspace(&cli.workspace)?.to_string();
        }
        Command::Saturate { family, n, certified } => {
            let ws = load_workspace(&cli.workspace)?;
            let fam = ws.family(&family).map_err(usage)?;
            let n = parse_multi_index(&n).map_err(|e| Failure::Usage(format!("--n {e}")))?;
            if n.arity() != fam.arity() {
                return Err(Failure::Usage(format!("--n has {} entries, family has {}", n.arity(), fam.arity())));
            }
            let sat = if certified {
                saturate_certified(fam, &n)
            } else {
                build_plan(fam).and_then(|plan| saturate_planned(&plan, fam, &n))
            }
            .map_err(compute)?;
            if sat.is_zero() {
                out.push_str("0\n");
            }
            for g in sat.gens() {
                writeln!(out, "{}", ws.ring().fmt_monomial(g)).unwrap();
            }
        }
        Command::Table { family, grid, mode, out: path } => {
            let ws = load_workspace(&cli.workspace)?;
            let fam = ws.family(&family).map_err(usage)?;
            let grid = parse_grid(&grid, Some(fam.arity())).map_err(|e| Failure::Usage(format!("--grid {e}")))?;
            let mode = match mode.split_once(':') {
                None if mode == "torsion" => TableMode::Torsion,
                Some(("quotient", g)) => TableMode::Quotient(ws.family(g).map_err(usage)?.clone()),
                _ => return Err(Failure::Usage(format!("unknown mode `{mode}` (torsion | quotient:G)"))),
            };
            let table = length_table(fam, &grid, &mode).map_err(compute)?;
            out = emit(path.as_ref(), &table.to_csv_string())?;
        }
        Command::Fit { table, max_degree, start, eventually, json } => {
            let table = load_table(&table)?;
            let fit = if eventually {
                fit_eventually(&table, max_degree).map_err(compute)?
            } else {
                let opts = FitOptions { start, holdout: None };
                let s = start.unwrap_or_else(|| table.domain().flat_map(|n| n.entries().to_vec()).min().unwrap_or(0));
                fit_polynomial_with(&table, max_degree, &opts).map_err(compute)?.map(|p| (s, p))
            };
            match (fit, json) {
                (None, false) => out.push_str("NO_FIT\n"),
                (None, true) => out.push_str("{\"fit\": null}\n"),
                (Some((s, p)), false) => {
                    if eventually {
                        write!(out, "for n >= {s}: ").unwrap();
                    }
                    writeln!(out, "{p}").unwrap();
                }
                (Some((s, p)), true) => {
                    let mut v = p.to_json();
                    v["start"] = s.into();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).unwrap();
                }
            }
        }
        Command::Fitray { table, max_period, max_degree, ray, start } => {
            let table = load_table(&table)?;
            let w = match ray {
                Some(r) => parse_multi_index(&r).map_err(|e| Failure::Usage(format!("--ray {e}")))?,
                None => MultiIndex::diagonal(table.arity(), 1),
            };
            let samples = table
                .ray(&w)
                .map_err(usage)?
                .into_iter()
                .map(|(t, v)| match v {
                    LengthValue::Finite(x) => Ok((t, x)),
                    LengthValue::Infinite => Err(Failure::Compute(format!("table is infinite at t = {t}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            match fit_quasipolynomial_ray(&samples, max_period, max_degree, start).map_err(compute)? {
                None => out.push_str("NO_FIT\n"),
                Some(q) => {
                    writeln!(out, "{q}").unwrap();
                    writeln!(out, "held out {}", q.held_out()).unwrap();
                }
            }
        }
        Command::Bounds { family, grid, max_degree } => {
            let ws = load_workspace(&cli.workspace)?;
            let fam = ws.family(&family).map_err(usage)?;
            let grid = parse_grid(&grid, Some(fam.arity())).map_err(|e| Failure::Usage(format!("--grid {e}")))?;
            let d = ws.ring().num_vars() as u32;
            let table = length_table(fam, &grid, &TableMode::Torsion).map_err(compute)?;
            let spread = analytic_spread(&fam.product().map_err(compute)?).map_err(compute)?;
            let Some((s, fit)) = fit_eventually(&table, max_degree.unwrap_or(d)).map_err(compute)? else {
                return Err(Failure::Compute(format!("NO_FIT: no polynomial of degree <= {} fits the table", max_degree.unwrap_or(d))));
            };
            let report = check_bounds(&fit, spread, d);
            writeln!(out, "fit for n >= {s}: {fit}").unwrap();
            write!(out, "{report}").unwrap();
            if !report.all_pass() {
                print!("{out}");
                return Err(Failure::Compute("a degree bound failed".into()));
            }
        }
        Command::Alpha { family, norm_bound } => {
            let ws = load_workspace(&cli.workspace)?;
            let fam = ws.family(&family).map_err(usage)?;
            let rep = alpha_stabilization(fam, norm_bound).map_err(compute)?;
            out.push_str("n,k\n");
            for (n, k) in &rep.k {
                let entries: Vec<String> = n.entries().iter().map(u32::to_string).collect();
                writeln!(out, "\"{}\",{k}", entries.join(",")).unwrap();
            }
            writeln!(out, "alpha_emp = {}", rep.alpha_emp).unwrap();
        }
        Command::Gens { family, up_to } => {
            let ws = load_workspace(&cli.workspace)?;
            let fam = ws.family(&family).map_err(usage)?;
            let rep = rees_generation_degrees(fam, up_to).map_err(compute)?;
            out.push_str("degree,new_generators\n");
            for k in 1..=up_to as u64 {
                writeln!(out, "{k},{}", rep.new_in_norm(k)).unwrap();
            }
            writeln!(out, "standard graded through degree {up_to}: {}", if rep.is_standard() { "yes" } else { "no" })
                .unwrap();
        }
        Command::Newton { ideal } => {
            let ws = load_workspace(&cli.workspace)?;
            let np = newton_polyhedron(ws.ideal(&ideal).map_err(usage)?).map_err(compute)?;
            for v in np.vertices() {
                writeln!(out, "{}", ws.ring().fmt_monomial(v)).unwrap();
            }
        }
        Command::Spread { ideal } => {
            let ws = load_workspace(&cli.workspace)?;
            let s = analytic_spread(ws.ideal(&ideal).map_err(usage)?).map_err(compute)?;
            writeln!(out, "{s}").unwrap();
        }
        Command::Closure { ideal } => {
            let ws = load_workspace(&cli.workspace)?;
            let c = integral_closure(ws.ideal(&ideal).map_err(usage)?).map_err(compute)?;
            writeln!(out, "{c}").unwrap();
        }
        Command::Reg { ideal, betti } => {
            let ws = load_workspace(&cli.workspace)?;
            let i = ws.ideal(&ideal).map_err(usage)?;
            writeln!(out, "{}", regularity(i).map_err(compute)?).unwrap();
            if let Some(p) = betti {
                emit(Some(&p), &betti_table(i).map_err(compute)?.to_csv_string())?;
            }
        }
        Command::Regtable { family, grid, saturated, closure } => {
            let ws = load_workspace(&cli.workspace)?;
            let fam = ws.family(&family).map_err(usage)?;
            let grid = parse_grid(&grid, Some(fam.arity())).map_err(|e| Failure::Usage(format!("--grid {e}")))?;
            let variant = match (saturated, closure) {
                (true, _) => PowerVariant::Saturated,
                (_, true) => PowerVariant::Closure,
                _ => PowerVariant::Plain,
            };
            let rep = linear_bound_check(fam, &grid, variant).map_err(compute)?;
            writeln!(out, "{rep}").unwrap();
        }
        Command::Decompose { ideal } => {
            let ws = load_workspace(&cli.workspace)?;
            for q in ws.ideal(&ideal).map_err(usage)?.irreducible_decomposition().map_err(compute)? {
                writeln!(out, "({q})").unwrap();
            }
        }
        Command::Check { suite, cases, seed } => {
            let outcomes = if suite == "all" {
                run_all(cases, seed)
            } else {
                let one = run_suite(&suite, cases, seed).ok_or_else(|| {
                    Failure::Usage(format!("unknown suite `{suite}`; known: all, {}", SUITES.join(", ")))
                })?;
                vec![one]
            };
            for o in &outcomes {
                writeln!(out, "{o}").unwrap();
            }
            let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.name).collect();
            if !failed.is_empty() {
                print!("{out}");
                return Err(Failure::Compute(format!("failing suites: {}", failed.join(", "))));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
