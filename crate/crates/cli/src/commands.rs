use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use antikit::closure_opt::{max_weight_feasible, Sense, WeightFn};
use antikit::hardness::{
    self, build_reduction, extract_independent_set, format_rational, max_feasible_weight, parse_delta,
    reduction_path_poset,
};
use antikit::structure::{self, Recognition, Witness};
use antikit::{
    classify, enumerate_feasible_with, is_feasible, shelling, BruteLimits, Error, SetFamily, SimpleGraph, SplitGraph,
    VertexSet,
};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::{Cli, Command, GraphSet};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: Error },
    #[error("invalid set argument: {0}")]
    SetArgument(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 1 for domain refusals, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                Error::NotFeasible(_)
                | Error::NotSplitShelling(_)
                | Error::NotAnAntimatroid(_)
                | Error::FullPowerSet
                | Error::NotFeasibleReduction(_),
            ) => 1,
            _ => 2,
        }
    }
}

pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            warnings: Vec::new(),
            code: 0,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load<T>(path: &Path) -> Result<T>
where
    T: std::str::FromStr<Err = Error>,
{
    read(path)?.parse().map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_set(tokens: &[String]) -> Result<VertexSet> {
    VertexSet::parse_tokens(tokens.iter().map(String::as_str)).map_err(CliError::SetArgument)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json {
        to_json(value)
    } else {
        text()
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let limits = BruteLimits::from_env()?;
    let json = cli.json;
    match &cli.command {
        Command::Validate { graph } => {
            let g: SplitGraph = load(graph)?;
            let full = g.full_independent_vertex();
            let value = json!({ "graph": &g, "normalized": full.is_none() });
            Ok(Output::ok(render(json, &value, || {
                let mut s = format!(
                    "split graph: {} vertices, |K| = {}, |I| = {}, {} cross edges\n",
                    g.order(),
                    g.clique().len(),
                    g.independent().len(),
                    g.cross_edges().len()
                );
                match full {
                    None => s.push_str("normalized: yes\n"),
                    Some(i) => {
                        let _ = writeln!(s, "normalized: no (vertex {i} in I is adjacent to all of K)");
                    }
                }
                s
            })))
        }
        Command::Feasible(GraphSet { graph, set }) => {
            let g: SplitGraph = load(graph)?;
            let f = parse_set(set)?;
            let class = if is_feasible(&g, &f)? {
                Some(classify(&g, &f)?)
            } else {
                None
            };
            let value = json!({ "set": &f, "feasible": class.is_some(), "class": class });
            Ok(Output::ok(render(json, &value, || match class {
                Some(c) => format!("feasible ({c})\n"),
                None => "not feasible\n".to_string(),
            })))
        }
        Command::Shelling(GraphSet { graph, set }) => {
            let g: SplitGraph = load(graph)?;
            let f = parse_set(set)?;
            let order = shelling(&g, &f)?;
            let value = json!({ "set": &f, "order": &order });
            Ok(Output::ok(render(json, &value, || format!("{order}\n"))))
        }
        Command::Enumerate { graph } => {
            let g: SplitGraph = load(graph)?;
            let fam = enumerate_feasible_with(&g, &limits)?;
            Ok(Output::ok(render(json, &fam, || fam.to_string())))
        }
        Command::Classify(GraphSet { graph, set }) => {
            let g: SplitGraph = load(graph)?;
            let f = parse_set(set)?;
            let class = classify(&g, &f)?;
            let value = json!({ "set": &f, "class": class });
            Ok(Output::ok(render(json, &value, || format!("{class}\n"))))
        }
        Command::Maxweight { graph, weights, min } => {
            let g: SplitGraph = load(graph)?;
            let w: WeightFn = load(weights)?;
            let missing = w.missing_in(&g).map_err(|source| CliError::Input {
                path: weights.clone(),
                source,
            })?;
            let sense = if *min { Sense::Min } else { Sense::Max };
            let r = max_weight_feasible(&g, &w, sense)?;
            let value = json!({
                "sense": sense,
                "best_set": &r.best_set,
                "best_weight": r.best_weight,
                "class": r.class,
                "missing_weights": &missing,
            });
            let mut out = Output::ok(render(json, &value, || {
                format!("set {}\nweight {}\nclass {}\n", r.best_set, r.best_weight, r.class)
            }));
            if !missing.is_empty() {
                let ids: Vec<String> = missing.iter().map(|v| v.to_string()).collect();
                out.warnings
                    .push(format!("no weight for vertices {}; using 0", ids.join(" ")));
            }
            Ok(out)
        }
        Command::Paths { graph } => {
            let g: SplitGraph = load(graph)?;
            let paths = structure::path_poset(&g)?;
            Ok(Output::ok(render(json, &paths, || lines(&paths))))
        }
        Command::Circuits { graph } => {
            let g: SplitGraph = load(graph)?;
            let circuits = structure::rooted_circuits(&g)?;
            Ok(Output::ok(render(json, &circuits, || lines(&circuits))))
        }
        Command::Free(GraphSet { graph, set }) => {
            let g: SplitGraph = load(graph)?;
            let x = parse_set(set)?;
            let free = structure::is_free(&g, &x)?;
            let value = json!({ "set": &x, "free": free });
            Ok(Output::ok(render(json, &value, || {
                if free { "free\n" } else { "not free\n" }.to_string()
            })))
        }
        Command::Trace { family, set } => {
            let fam: SetFamily = load(family)?;
            let x = parse_set(set)?;
            let t = structure::trace(&fam, &x)?;
            Ok(Output::ok(render(json, &t, || t.to_string())))
        }
        Command::Reconstruct {
            family,
            force_canonical,
        } => {
            let fam: SetFamily = load(family)?;
            let g = structure::reconstruct_graph(&fam, *force_canonical)?;
            Ok(Output::ok(render(json, &g, || g.to_string())))
        }
        Command::Recognize {
            family,
            force_canonical,
        } => {
            let fam: SetFamily = load(family)?;
            let verdict = structure::recognize(&fam, *force_canonical, &limits)?;
            let code = match verdict {
                Recognition::Split { .. } => 0,
                Recognition::NotSplitShelling { .. } => 1,
            };
            let stdout = render(json, &verdict, || match &verdict {
                Recognition::Split { graph } => format!("split shelling antimatroid\n{graph}"),
                Recognition::NotSplitShelling { witness } => {
                    format!("not a split shelling antimatroid: {}\n", describe(witness))
                }
            });
            Ok(Output {
                stdout,
                warnings: Vec::new(),
                code,
            })
        }
        Command::Hardness { graph, delta } => {
            let g: SimpleGraph = load(graph)?;
            let inst = build_reduction(&g, parse_delta(delta)?)?;
            hardness_report(&inst, &limits, json).map(Output::ok)
        }
    }
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::NotAnAntimatroid { violation } => violation.to_string(),
        Witness::NotSplit { .. } => "the recovered edge set is not a split graph".to_string(),
        Witness::Mismatch { set, in_family, .. } => {
            if *in_family {
                format!("{set} is in the family but not feasible in the candidate graph")
            } else {
                format!("{set} is feasible in the candidate graph but missing from the family")
            }
        }
    }
}

fn hardness_report(inst: &hardness::ReductionInstance, limits: &BruteLimits, json: bool) -> Result<String> {
    let labels = |s: &hardness::ElementSet| -> Vec<String> { s.iter().map(|&e| inst.label(e)).collect() };
    let elements: Vec<(String, String)> = inst
        .ground()
        .iter()
        .map(|&e| (inst.label(e), format_rational(&inst.weight(e))))
        .collect();
    let paths = reduction_path_poset(inst);
    let opt = max_feasible_weight(inst, limits)?;
    let ex = extract_independent_set(inst, &opt.set)?;
    let indep = inst.total(&ex.f_prime);
    let bound = inst.delta() * hardness::Rational::from_integer(ex.indep.len() as i64);
    let independent: Vec<String> = ex.indep.iter().map(|&v| inst.graph().label(v).to_string()).collect();

    if json {
        let value = json!({
            "delta": format_rational(&inst.delta()),
            "elements": elements.iter().map(|(l, w)| json!({ "label": l, "weight": w })).collect::<Vec<_>>(),
            "paths": paths.len(),
            "optimum": { "set": labels(&opt.set), "weight": format_rational(&opt.weight) },
            "independent_set": &independent,
            "bound": format_rational(&bound),
            "bound_holds": bound >= opt.weight,
        });
        return Ok(to_json(&value));
    }
    let mut s = String::new();
    let _ = writeln!(s, "delta {}", format_rational(&inst.delta()));
    let _ = writeln!(
        s,
        "elements {} ({} vertices, {} edges)",
        inst.len(),
        inst.graph().order(),
        inst.graph().size()
    );
    for (l, w) in &elements {
        let _ = writeln!(s, "  {l} {w}");
    }
    let _ = writeln!(s, "paths {}", paths.len());
    let _ = writeln!(s, "optimum {} weight {}", inst.format_set(&opt.set), format_rational(&opt.weight));
    let _ = writeln!(
        s,
        "independent set {{{}}} (weight after extraction {})",
        independent.join(", "),
        format_rational(&indep)
    );
    let verdict = if bound >= opt.weight { "holds" } else { "FAILS" };
    let _ = writeln!(
        s,
        "bound delta*|indep| = {} >= {}: {verdict}",
        format_rational(&bound),
        format_rational(&opt.weight)
    );
    Ok(s)
}
