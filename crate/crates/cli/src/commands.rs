use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use kcover::chordal_cover::{heuristic_31, optimal_chordal_31};
use kcover::graph::io::{parse_completion, parse_edge_list, write_completion, write_edge_list};
use kcover::graph::validate_completion;
use kcover::oracle::{
    brute_min_completion, gen_random_3partition, gen_random_chordal, gen_random_setcover,
    gen_random_tree, OracleBudget, OracleOutcome, PartitionMode,
};
use kcover::reductions::{
    build_setcover, build_spider, extract_set_cover, goodify as goodify_completion,
    roles_from_json, LabeledReductionGraph, SetCoverInstance, ThreePartitionInstance,
};
use kcover::tree::{approx_tree_4, approx_tree_k, optimal_tree_31, worst_case_spider, RootedTree};
use kcover::{CompletionSet, CoverError, CoverSpec, Graph};

use crate::{Alg, CheckArgs, GenCommand, GoodifyArgs, Mode, ReduceCommand, SolveArgs, Status};

pub(crate) fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub(crate) fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_completion(path: &Path) -> Result<CompletionSet> {
    parse_completion(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".roles.json");
    PathBuf::from(s)
}

/// The cover each algorithm targets; `k` is fixed for all but two of them.
pub(crate) fn spec_for(alg: Alg, k: Option<usize>, l: usize) -> Result<CoverSpec> {
    let fixed = match alg {
        Alg::TreeOpt | Alg::ChordalOpt => Some(3),
        Alg::TreeApprox4 => Some(4),
        Alg::TreeApprox | Alg::Brute => None,
    };
    let k = match (fixed, k) {
        (Some(f), Some(k)) if f != k => bail!("{} solves k={f}, got --k {k}", alg.name()),
        (Some(f), _) => f,
        (None, Some(k)) => k,
        (None, None) if alg == Alg::Brute => 3,
        (None, None) => bail!("{} needs --k", alg.name()),
    };
    if l != 1 && alg != Alg::Brute {
        bail!("{} solves l=1 only; use brute for l={l}", alg.name());
    }
    Ok(CoverSpec::new(k, l)?)
}

/// Runs one algorithm. `None` means the oracle ran out of budget.
pub(crate) fn run_alg(
    alg: Alg,
    g: &Graph,
    spec: CoverSpec,
    heuristic: bool,
    budget: &OracleBudget,
) -> Result<Option<CompletionSet>> {
    let tree = || RootedTree::from_graph(g.clone());
    let c = match alg {
        Alg::TreeOpt => optimal_tree_31(&tree()?)?,
        Alg::TreeApprox4 => approx_tree_4(&tree()?)?,
        Alg::TreeApprox => approx_tree_k(&tree()?, spec.k())?,
        Alg::ChordalOpt => match optimal_chordal_31(g) {
            Err(CoverError::NotChordal { witness }) if heuristic => {
                log::warn!("graph is not chordal (vertex {witness}); result may not be minimum");
                heuristic_31(g)?
            }
            other => other?,
        },
        Alg::Brute => match brute_min_completion(g, spec, budget)? {
            OracleOutcome::Optimal(c) => c,
            OracleOutcome::Infeasible => {
                bail!(
                    "no completion exists: the complete graph has no ({},{})-cover",
                    spec.k(),
                    spec.l()
                )
            }
            OracleOutcome::Inconclusive { lower_bound } => {
                log::warn!(
                    "search budget exhausted; any completion needs >= {lower_bound} additions"
                );
                return Ok(None);
            }
        },
    };
    Ok(Some(c))
}

pub(crate) fn solve(a: &SolveArgs) -> Result<Status> {
    if a.heuristic && a.alg != Alg::ChordalOpt {
        bail!("--heuristic applies to chordal-opt only");
    }
    let spec = spec_for(a.alg, a.k, a.l)?;
    let g = read_graph(&a.input)?;
    let budget = OracleBudget {
        max_additions: a.max_additions,
        max_nodes: a.max_nodes,
        ..OracleBudget::default()
    };
    let Some(c) = run_alg(a.alg, &g, spec, a.heuristic, &budget)? else {
        return Ok(Status::Inconclusive);
    };
    let verdict = validate_completion(&g, &c, spec)?;
    if !verdict.is_ok() {
        bail!(
            "internal error: {} left {} edges unsaturated",
            a.alg.name(),
            verdict.unsaturated.len()
        );
    }
    log::info!(
        "{} on n={} m={}: {} additions",
        a.alg.name(),
        g.n(),
        g.m(),
        c.len()
    );
    emit(a.out.as_deref(), &write_completion(&c))?;
    Ok(Status::Ok)
}

pub(crate) fn check(a: &CheckArgs) -> Result<Status> {
    let spec = CoverSpec::new(a.k, a.l)?;
    let g = read_graph(&a.graph)?;
    let c = read_completion(&a.completion)?;
    let verdict = match validate_completion(&g, &c, spec) {
        Ok(v) => v,
        Err(e) => {
            println!("invalid completion: {e}");
            return Ok(Status::CheckFailed);
        }
    };
    if verdict.is_ok() {
        println!("ok: {} additions give a ({},{})-cover", c.len(), a.k, a.l);
        return Ok(Status::Ok);
    }
    println!("unsaturated {}", verdict.unsaturated.len());
    for e in &verdict.unsaturated {
        println!("{} {}", e.u(), e.v());
    }
    Ok(Status::CheckFailed)
}

pub(crate) fn reduce(c: &ReduceCommand) -> Result<Status> {
    match c {
        ReduceCommand::Setcover {
            k,
            input,
            out,
            roles,
        } => {
            let inst = SetCoverInstance::from_json(&read(input)?)?;
            let rg = build_setcover(&inst, *k)?;
            let roles = roles.clone().unwrap_or_else(|| sidecar(out));
            emit(Some(out), &write_edge_list(rg.graph()))?;
            emit(Some(&roles), &rg.roles_json())?;
            log::info!(
                "gadget: n={} m={}, roles in {}",
                rg.graph().n(),
                rg.graph().m(),
                roles.display()
            );
        }
        ReduceCommand::ThreePartition { input, out } => {
            let inst = ThreePartitionInstance::from_json(&read(input)?)?;
            let g = build_spider(&inst)?;
            emit(Some(out), &write_edge_list(&g))?;
            log::info!("spider: n={}, k={}", g.n(), inst.s + 1);
        }
    }
    Ok(Status::Ok)
}

pub(crate) fn goodify(a: &GoodifyArgs) -> Result<Status> {
    let g = read_graph(&a.graph)?;
    let roles_path = a.roles.clone().unwrap_or_else(|| sidecar(&a.graph));
    let roles = roles_from_json(&read(&roles_path)?, g.n())?;
    let rg = LabeledReductionGraph::from_parts(g, roles, a.k)?;
    let c = read_completion(&a.completion)?;
    let good = goodify_completion(&rg, &c)?;
    let cover = extract_set_cover(&rg, &good)?;
    log::info!(
        "{} additions became {}; set cover {:?}",
        c.len(),
        good.len(),
        cover
    );
    emit(a.out.as_deref(), &write_completion(&good))?;
    Ok(Status::Ok)
}

pub(crate) fn generate(c: &GenCommand) -> Result<Status> {
    let (text, out) = match c {
        GenCommand::Tree { n, seed, out } => (write_edge_list(&gen_random_tree(*n, *seed)), out),
        GenCommand::Chordal {
            n,
            width,
            seed,
            out,
        } => (
            write_edge_list(&gen_random_chordal(*n, *width, *seed)?),
            out,
        ),
        GenCommand::Spider { p, s, seed, out } => {
            let gp = gen_random_3partition(*p, *s, PartitionMode::Yes, *seed)?;
            log::info!("values {:?}", gp.instance.values);
            (write_edge_list(&build_spider(&gp.instance)?), out)
        }
        GenCommand::WorstSpider { n, out } => (write_edge_list(&worst_case_spider(*n)?), out),
        GenCommand::Setcover {
            items,
            sets,
            density,
            seed,
            out,
        } => {
            let inst = gen_random_setcover(*items, *sets, *density, *seed)?;
            (inst.to_json() + "\n", out)
        }
        GenCommand::ThreePartition {
            p,
            s,
            mode,
            seed,
            out,
        } => {
            let mode = match mode {
                Mode::Yes => PartitionMode::Yes,
                Mode::LikelyNo => PartitionMode::LikelyNo,
            };
            let gp = gen_random_3partition(*p, *s, mode, *seed)?;
            if let Some(t) = &gp.triples {
                log::info!("planted triples {t:?}");
            }
            (gp.instance.to_json() + "\n", out)
        }
    };
    emit(out.as_deref(), &text)?;
    Ok(Status::Ok)
}
