//! Command-line surface: argument grammar, errata resolution, and the
//! rendering of graphs, reports and tables. Semantic findings are ordinary
//! output that set exit code 1; hard failures (unreadable files, bad flags,
//! malformed documents) exit 2.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::path::PathBuf;

use crate::coloring::{
    check_faithful, check_weight_compatible, is_symmetrically_reversible, ColorPairSystem,
    SymbolPermutationPair,
};
use crate::cycles::{canonical_cycle, cycle_parity, CycleClass, OrientedCycleWord};
use crate::cyclic::{build_cyclic_bigraph, greedy_bicolor, CyclicParams};
use crate::dataset::{
    build_g, build_gprime_quotient, build_gprime_theta, check_theta_displays, covering_map,
    great_circles, load_dataset, pentagon_cycles_check, shipped_errata, validate_dataset,
    ErrataOverlay, GccDataset,
};
use crate::dot::{export_dot, petersen_dot};
use crate::error::{Error, Result};
use crate::import::{
    claimed_level_table, import_paper_solution, printed_circle_block, printed_level_block,
    printed_solution,
};
use crate::petersen::{
    build_petersen, enumerate_graph_cycles, induced_color_cycle, theta_correspondence,
};
use crate::solver::{
    count_gcc_solutions, enumerate_gcc_solutions, is_distribution_reversible, lift_solution,
    verify_gcc_solution, GccSolution, SolutionDoc, SolveOptions,
};

/// Environment variable naming a default errata overlay file.
pub const ERRATA_ENV: &str = "BICOLOR_ERRATA";

#[derive(Parser)]
#[command(
    name = "bicolor",
    version,
    about = "Biregular bipartite graphs, faithful weighted bicolorings, and the great-circle puzzle data"
)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    family: Family,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Errata overlay file (default: the shipped overlay, or $BICOLOR_ERRATA)
    #[arg(long, global = true, value_name = "FILE")]
    errata: Option<PathBuf>,
    /// Use raw source transcriptions, applying no errata at all
    #[arg(long, global = true)]
    raw: bool,
    /// Accepted for scripting symmetry; every algorithm here is deterministic
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    /// Worker threads for enumeration
    #[arg(long, global = true, value_name = "N", default_value_t = 1)]
    workers: usize,
    /// Write output to this file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// The two-cyclic-group family Z_m / Z_n
    Cyclic {
        #[command(subcommand)]
        verb: CyclicVerb,
    },
    /// The triangle graph O_3 and its cycle correspondences
    Petersen {
        #[command(subcommand)]
        verb: PetersenVerb,
    },
    /// The great-circle dataset, graphs, solver and imports
    Gcc {
        #[command(subcommand)]
        verb: GccVerb,
    },
}

#[derive(Subcommand)]
enum CyclicVerb {
    /// Emit the (m,n) biregular graph as JSON
    Build {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Color the (m,n) graph by walking theta, optionally checking the result
    Color {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Ordered pair list, e.g. "0,0;0,1;1,1;1,2"
        #[arg(long)]
        theta: String,
        /// Weights in theta order, e.g. "6,3,3,6"
        #[arg(long)]
        weights: String,
        /// Run the faithfulness and weight checks on the coloring
        #[arg(long)]
        check: bool,
        /// Test symmetric reversibility under the given symbol permutations
        #[arg(long, requires = "perm_alpha", requires = "perm_beta")]
        reversible: bool,
        /// Degree-side symbol permutation as images of 0..λ, e.g. "1,0"
        #[arg(long, value_name = "PERM")]
        perm_alpha: Option<String>,
        /// Star-side symbol permutation as images of 0..μ, e.g. "2,1,0"
        #[arg(long, value_name = "PERM")]
        perm_beta: Option<String>,
    },
}

#[derive(Subcommand)]
enum PetersenVerb {
    /// Emit the graph, edges labeled by w-color
    Build {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Canonical cycles of one length with their induced color classes
    Cycles {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The 5-cycle and 6-cycle color correspondences
    Theta {
        /// Also check the printed correspondence tables against the graph
        #[arg(long)]
        check_paper: bool,
    },
    /// Canonical class and parity of a cycle word
    Parity {
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum GccVerb {
    /// Validate the shipped source tables under the active errata overlay
    ValidateData,
    /// Emit the sphere graph G or the folded graph G′
    Graph {
        #[arg(long, value_enum)]
        which: WhichGraph,
        #[arg(long, value_enum, default_value_t = Route::Phi)]
        route: Route,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate solutions on the folded graph
    Solve {
        /// Pin pairs 1a/3b/5c onto w-colors 1/3/5
        #[arg(long = "fix-135")]
        fix_135: bool,
        /// Keep only solutions whose level table is mirror-symmetric
        #[arg(long)]
        reversible_only: bool,
        /// Report the count alone. Without --limit or --reversible-only this
        /// uses the exact transfer computation instead of streaming the
        /// search, which matters: the unrestricted space holds billions.
        #[arg(long)]
        count_only: bool,
        /// Stop after this many solutions (0 = no limit)
        #[arg(long, value_name = "N", default_value_t = 0)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a solution document against the folded graph
    Verify {
        #[arg(long, value_name = "FILE")]
        solution: PathBuf,
    },
    /// Level or great-circle distribution tables of a valid solution
    Tables {
        #[arg(long, value_name = "FILE")]
        solution: PathBuf,
        /// Per-level piece counts (the default)
        #[arg(long, conflicts_with = "circles")]
        levels: bool,
        /// Pairs carried by each great circle of the sphere graph
        #[arg(long)]
        circles: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Map a shipped solution table onto the derived graph, reporting
    /// every printed entry the graph contradicts
    Import {
        /// Which shipped table: ss4, ss5a or ss5b
        #[arg(long, value_name = "LABEL")]
        paper: String,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WhichGraph {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "Gprime", alias = "gprime")]
    Gprime,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Route {
    Phi,
    Theta,
}

/// What a verb produced: rendered text plus whether the checked object was
/// semantically clean (`false` exits 1).
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn clean(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// Parses argv, runs the verb, writes the output, returns the exit code.
pub fn dispatch(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    if cli.run.workers == 0 {
        eprintln!("error: --workers must be at least 1");
        return 2;
    }
    let output = cli.run.output.clone();
    match run(cli) {
        Ok(outcome) => {
            let written = match &output {
                Some(path) => fs::write(path, &outcome.text).map_err(Error::from),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => {
                    if outcome.ok {
                        0
                    } else {
                        1
                    }
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    2
                }
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.family {
        Family::Cyclic { verb } => run_cyclic(verb),
        Family::Petersen { verb } => run_petersen(verb, &cli.run),
        Family::Gcc { verb } => run_gcc(verb, &cli.run),
    }
}

/// Applies the overlay policy: `--raw` beats `--errata`, which beats the
/// environment variable, which beats the shipped overlay.
fn load_configured_dataset(run: &RunArgs) -> Result<GccDataset> {
    if run.raw {
        return load_dataset(None);
    }
    let path = run
        .errata
        .clone()
        .or_else(|| std::env::var_os(ERRATA_ENV).map(PathBuf::from));
    match path {
        Some(path) => {
            let text = fs::read_to_string(&path)?;
            let overlay = ErrataOverlay::from_json(&text)?;
            load_dataset(Some(&overlay))
        }
        None => load_dataset(Some(&shipped_errata())),
    }
}

fn pretty(value: serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("value serialization");
    text.push('\n');
    text
}

fn parse_usize_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::input(format!("{what}: {part:?} is not a number")))
        })
        .collect()
}

fn parse_pair_list(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(';')
        .map(|part| {
            let fields = parse_usize_list(part, "theta pair")?;
            if fields.len() != 2 {
                return Err(Error::input(format!(
                    "theta pair {part:?} does not have exactly two entries"
                )));
            }
            Ok((fields[0], fields[1]))
        })
        .collect()
}

fn run_cyclic(verb: CyclicVerb) -> Result<Outcome> {
    match verb {
        CyclicVerb::Build { m, n } => {
            let params = CyclicParams::new(m, n)?;
            let graph = build_cyclic_bigraph(&params);
            Ok(Outcome::clean(pretty(serde_json::to_value(&graph)?)))
        }
        CyclicVerb::Color {
            m,
            n,
            theta,
            weights,
            check,
            reversible,
            perm_alpha,
            perm_beta,
        } => {
            let params = CyclicParams::new(m, n)?;
            let theta = parse_pair_list(&theta)?;
            let omega = parse_usize_list(&weights, "weights")?;
            let coloring = greedy_bicolor(&params, &theta, &omega)?;
            let graph = build_cyclic_bigraph(&params);
            let system = ColorPairSystem::new(params.lambda(), params.mu(), theta, omega)?;

            let mut body = json!({ "coloring": serde_json::to_value(&coloring)? });
            let mut ok = true;
            if check {
                let mut report = check_faithful(&graph, &coloring, &system)?;
                report.merge(check_weight_compatible(&coloring, &system)?);
                ok = report.ok();
                body["report"] = serde_json::to_value(&report)?;
            }
            if reversible {
                let alpha = parse_usize_list(perm_alpha.as_deref().unwrap_or(""), "perm-alpha")?;
                let beta = parse_usize_list(perm_beta.as_deref().unwrap_or(""), "perm-beta")?;
                let perms = SymbolPermutationPair::new(alpha, beta)?;
                body["reversible"] =
                    json!(is_symmetrically_reversible(&graph, &coloring, &system, &perms)?);
            }
            Ok(Outcome {
                text: pretty(body),
                ok,
            })
        }
    }
}

fn run_petersen(verb: PetersenVerb, run: &RunArgs) -> Result<Outcome> {
    match verb {
        PetersenVerb::Build { format } => {
            let g = build_petersen();
            match format {
                Format::Dot => Ok(Outcome::clean(petersen_dot(&g))),
                Format::Json => {
                    let vertices: Vec<_> = g
                        .vertices()
                        .iter()
                        .enumerate()
                        .map(|(i, v)| json!({ "id": i, "subset": format!("{}{}{}", v[0], v[1], v[2]) }))
                        .collect();
                    Ok(Outcome::clean(pretty(json!({
                        "vertices": vertices,
                        "edges": g.edges(),
                    }))))
                }
                Format::Csv => Err(Error::input("petersen build supports json or dot")),
            }
        }
        PetersenVerb::Cycles { length, format } => {
            if format != Format::Json {
                return Err(Error::input("petersen cycles supports json only"));
            }
            let g = build_petersen();
            let cycles = enumerate_graph_cycles(&g, length)?;
            let rows = cycles
                .iter()
                .map(|cycle| {
                    let class = induced_color_cycle(&g, cycle)?;
                    Ok(json!({ "vertices": cycle, "class": class.to_string() }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome::clean(pretty(json!({
                "length": length,
                "count": rows.len(),
                "cycles": rows,
            }))))
        }
        PetersenVerb::Theta { check_paper } => {
            let th = theta_correspondence();
            let five: Vec<_> = th
                .five_classes()
                .map(|class| json!({ "class": class.to_string(), "cycle": th.theta5(class) }))
                .collect();
            let three: Vec<_> = th
                .three_classes()
                .map(|class| json!({ "class": class.to_string(), "cycle": th.theta3(class) }))
                .collect();
            let mut body = json!({ "five": five, "three": three });
            let mut ok = true;
            if check_paper {
                let ds = load_configured_dataset(run)?;
                let report = check_theta_displays(&ds);
                ok = report.ok();
                body["report"] = serde_json::to_value(&report)?;
            }
            Ok(Outcome {
                text: pretty(body),
                ok,
            })
        }
        PetersenVerb::Parity { word } => {
            let word = OrientedCycleWord::parse(&word)?;
            let class = canonical_cycle(&word);
            let parity = cycle_parity(&class)?;
            Ok(Outcome::clean(pretty(json!({
                "word": word.elements(),
                "class": class.to_string(),
                "parity": parity.to_string(),
            }))))
        }
    }
}

fn folded_by_route(ds: &GccDataset, route: Route) -> Result<crate::dataset::FoldedGraph> {
    match route {
        Route::Phi => build_gprime_quotient(ds),
        Route::Theta => build_gprime_theta(ds),
    }
}

fn read_solution(gp: &crate::dataset::FoldedGraph, path: &PathBuf) -> Result<GccSolution> {
    let text = fs::read_to_string(path)?;
    let doc = SolutionDoc::from_json(&text)?;
    doc.to_solution(gp)
}

fn run_gcc(verb: GccVerb, run: &RunArgs) -> Result<Outcome> {
    match verb {
        GccVerb::ValidateData => {
            let ds = load_configured_dataset(run)?;
            let dataset_report = validate_dataset(&ds);
            let pentagon_report = pentagon_cycles_check(&ds);
            let mut text = String::new();
            text.push_str(&format!("source tables: {}", dataset_report));
            text.push_str(&format!("pentagon face words: {}", pentagon_report));
            Ok(Outcome {
                text,
                ok: dataset_report.ok(),
            })
        }
        GccVerb::Graph {
            which,
            route,
            format,
        } => {
            let ds = load_configured_dataset(run)?;
            let (y_labels, x_labels, edges, name) = match which {
                WhichGraph::Gprime => {
                    let gp = folded_by_route(&ds, route)?;
                    let y: Vec<(String, String)> = gp
                        .y_names
                        .iter()
                        .zip(&gp.y_classes)
                        .map(|(alias, class)| (alias.clone(), class.to_string()))
                        .collect();
                    let x: Vec<(String, String)> = gp
                        .x_names
                        .iter()
                        .zip(&gp.x_subsets)
                        .map(|(alias, subset)| {
                            (alias.clone(), CycleClass::of_subset(*subset).to_string())
                        })
                        .collect();
                    (y, x, gp.graph.edges.clone(), "gprime")
                }
                WhichGraph::G => {
                    let g = build_g(&ds)?;
                    let cover = covering_map(&ds)?;
                    let class_of = |pairs: &[[usize; 2]], classes: &[CycleClass], v: usize| {
                        pairs
                            .iter()
                            .position(|p| p.contains(&v))
                            .map(|i| classes[i].to_string())
                            .unwrap_or_default()
                    };
                    let y: Vec<(String, String)> = g
                        .y_names
                        .iter()
                        .enumerate()
                        .map(|(v, alias)| {
                            (
                                alias.to_string(),
                                class_of(&cover.y_pairs, &cover.y_classes, v),
                            )
                        })
                        .collect();
                    let x: Vec<(String, String)> = g
                        .x_names
                        .iter()
                        .enumerate()
                        .map(|(v, alias)| {
                            (
                                alias.to_string(),
                                class_of(&cover.x_pairs, &cover.x_classes, v),
                            )
                        })
                        .collect();
                    (y, x, g.graph.edges.clone(), "g")
                }
            };
            match format {
                Format::Dot => {
                    let y: Vec<String> = y_labels
                        .iter()
                        .map(|(alias, class)| format!("{alias} {class}"))
                        .collect();
                    let x: Vec<String> = x_labels
                        .iter()
                        .map(|(alias, class)| format!("{alias} {class}"))
                        .collect();
                    Ok(Outcome::clean(export_dot(name, &y, &x, &edges)))
                }
                Format::Json => {
                    let side = |labels: &[(String, String)]| {
                        labels
                            .iter()
                            .enumerate()
                            .map(|(i, (alias, class))| {
                                json!({ "id": i, "alias": alias, "class": class })
                            })
                            .collect::<Vec<_>>()
                    };
                    Ok(Outcome::clean(pretty(json!({
                        "y": side(&y_labels),
                        "x": side(&x_labels),
                        "edges": edges,
                    }))))
                }
                Format::Csv => Err(Error::input("gcc graph supports json or dot")),
            }
        }
        GccVerb::Solve {
            fix_135,
            reversible_only,
            count_only,
            limit,
            format,
        } => {
            let ds = load_configured_dataset(run)?;
            let gp = build_gprime_quotient(&ds)?;
            if count_only && limit == 0 && !reversible_only {
                let count = count_gcc_solutions(&gp, fix_135)?;
                return Ok(Outcome::clean(format!("{count}\n")));
            }
            let outcome = enumerate_gcc_solutions(
                &gp,
                &SolveOptions {
                    fix_135,
                    reversible_only,
                    count_only,
                    limit,
                    workers: run.workers,
                },
            )?;
            if count_only {
                return Ok(Outcome::clean(format!("{}\n", outcome.count)));
            }
            match format {
                Format::Json => {
                    let docs = outcome
                        .solutions
                        .iter()
                        .map(|sol| {
                            Ok(serde_json::to_value(&SolutionDoc::from_solution(&gp, sol)?)?)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Outcome::clean(pretty(json!({
                        "count": outcome.count,
                        "solutions": docs,
                    }))))
                }
                Format::Csv => {
                    let mut text = String::from("solution,y,x,w,pair\n");
                    for (s, sol) in outcome.solutions.iter().enumerate() {
                        for (i, &(y, x, tag)) in gp.graph.edges.iter().enumerate() {
                            text.push_str(&format!(
                                "{s},{},{},{tag},{}\n",
                                gp.y_names[y],
                                gp.x_names[x],
                                sol.pairs[i].code()
                            ));
                        }
                    }
                    Ok(Outcome::clean(text))
                }
                Format::Dot => Err(Error::input("gcc solve supports json or csv")),
            }
        }
        GccVerb::Verify { solution } => {
            let ds = load_configured_dataset(run)?;
            let gp = build_gprime_quotient(&ds)?;
            let sol = read_solution(&gp, &solution)?;
            let report = verify_gcc_solution(&gp, &sol)?;
            if report.ok() {
                let reversible = is_distribution_reversible(&gp, &sol)?;
                Ok(Outcome::clean(format!(
                    "ok\ndistribution-reversible: {reversible}\n"
                )))
            } else {
                Ok(Outcome {
                    text: report.to_string(),
                    ok: false,
                })
            }
        }
        GccVerb::Tables {
            solution,
            levels: _,
            circles,
            format,
        } => {
            if format != Format::Csv {
                return Err(Error::input("gcc tables supports csv only"));
            }
            let ds = load_configured_dataset(run)?;
            let gp = build_gprime_quotient(&ds)?;
            let sol = read_solution(&gp, &solution)?;
            let report = verify_gcc_solution(&gp, &sol)?;
            if !report.ok() {
                return Ok(Outcome {
                    text: report.to_string(),
                    ok: false,
                });
            }
            if circles {
                let g = build_g(&ds)?;
                let cover = covering_map(&ds)?;
                let circles = great_circles(&ds)?;
                let lifted = lift_solution(&sol, &g, &cover, &gp)?;
                let rows = crate::solver::circle_distribution(&lifted, &circles)?;
                Ok(Outcome::clean(crate::solver::circle_table_csv(&rows)))
            } else {
                Ok(Outcome::clean(
                    crate::solver::level_distribution(&gp, &sol).to_csv(),
                ))
            }
        }
        GccVerb::Import { paper } => {
            let ds = load_configured_dataset(run)?;
            let gp = build_gprime_quotient(&ds)?;
            let doc = printed_solution(&paper)?;
            let (partial, report) = import_paper_solution(&gp, &doc)?;
            let ansatz135 = doc.ansatz == [true, true, true];
            let mut entries = Vec::new();
            let mut open = Vec::new();
            for (i, &(y, x, tag)) in gp.graph.edges.iter().enumerate() {
                let alias = |side: &str| -> String {
                    if side == "y" {
                        gp.y_names[y].clone()
                    } else {
                        gp.x_names[x].clone()
                    }
                };
                match partial.pairs[i] {
                    Some(pair) => {
                        if !(ansatz135 && matches!(tag, 1 | 3 | 5)) {
                            entries.push(json!({
                                "y": alias("y"),
                                "x": alias("x"),
                                "w": tag,
                                "pair": pair.code(),
                            }));
                        }
                    }
                    None => open.push(json!({ "y": alias("y"), "x": alias("x"), "w": tag })),
                }
            }
            let claimed = claimed_level_table(&gp, &doc);
            let printed = printed_level_block(&paper)?;
            let circles: Vec<String> = printed_circle_block(&paper)?
                .iter()
                .map(|[a, b]| format!("{}{}", a.code(), b.code()))
                .collect();
            Ok(Outcome {
                text: pretty(json!({
                    "source": paper,
                    "solution": { "ansatz135": ansatz135, "entries": entries },
                    "open": open,
                    "assigned": partial.assigned(),
                    "report": serde_json::to_value(&report)?,
                    "claimed_levels": claimed.counts,
                    "printed_levels": printed,
                    "printed_circles": circles,
                })),
                ok: report.ok(),
            })
        }
    }
}
