//! Subcommand implementations, independent of argument parsing.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use grundy_core::closed::{lex_gamma, solve_xjoin_cycle_power, solve_xjoin_path_power, XJoinSolveResult};
use grundy_core::moddecomp::{decompose, solve_with, ModuleTree, NodeKind, SolveOptions, SolveStats};
use grundy_core::mwis::{best_pair_cycle_power, mwis_cycle_power, mwis_path_power, WeightVector};
use grundy_core::oracle::{gamma_gr_exact_with, gamma_gr_given_i_with, gds_given_i};
use grundy_core::product::{lift_sequence, xjoin, xjoin_gamma_generic, GammaProfile};
use grundy_core::sequence::{verify_sequence, Verification};
use grundy_core::split::{lex_gamma_split, solve_xjoin_split, split_recognize};
use grundy_core::{Graph, OracleConfig, StructuredKind, VertexSequence, VertexSet};
use serde_json::{json, Value};

use crate::format::read_graph_file;
use crate::report::{exit, CliError, RunReport};
use crate::spec::MainFactorSpec;

pub const ORACLE_ENV: &str = "GRUNDY_ORACLE_MAX";

/// Oracle limit: explicit flag, then the environment, then the default.
pub fn oracle_config(flag: Option<usize>) -> Result<OracleConfig, CliError> {
    let max_n = match flag {
        Some(n) => n,
        None => match std::env::var(ORACLE_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| CliError::parse(format!("{ORACLE_ENV}: bad value '{v}'")))?,
            Err(_) => OracleConfig::default().max_n,
        },
    };
    Ok(OracleConfig::with_max_n(max_n))
}

fn timed<F>(f: F) -> Result<RunReport, CliError>
where
    F: FnOnce() -> Result<RunReport, CliError>,
{
    let start = Instant::now();
    let mut r = f()?;
    r.millis = start.elapsed().as_millis() as u64;
    Ok(r)
}

pub fn exact(path: &Path, cfg: &OracleConfig) -> Result<RunReport, CliError> {
    timed(|| {
        let g = read_graph_file(path)?;
        let (gamma, witness) = gamma_gr_exact_with(&g, cfg)?;
        let mut r = RunReport::new(path.display().to_string(), "oracle");
        r.note("vertices", g.order()).note("edges", g.edge_count());
        r.certify(&g, gamma, &witness)?;
        Ok(r)
    })
}

pub fn verify(path: &Path, sequence: &[usize]) -> Result<RunReport, CliError> {
    timed(|| {
        let g = read_graph_file(path)?;
        let s = VertexSequence::new(sequence.to_vec())?;
        let mut r = RunReport::new(path.display().to_string(), "verify");
        match verify_sequence(&g, &s)? {
            Verification::Legal(cert) => {
                r.note("legal", true);
                r.note("self_footprinted", cert.self_set.to_vec());
                r.certify(&g, s.len(), &s)?;
            }
            Verification::Illegal(v) => {
                r.note("legal", false).note("violation", v.to_string());
                r.code = exit::NEGATIVE;
            }
        }
        Ok(r)
    })
}

/// Where the part values come from.
pub enum Parts<'a> {
    Gammas(&'a [usize]),
    Dir(&'a Path),
}

struct MainSolution {
    gamma: usize,
    i: VertexSet,
    skeleton: VertexSequence,
    solver: &'static str,
    detail: Value,
}

fn from_closed(n: usize, r: XJoinSolveResult, solver: &'static str) -> Result<MainSolution, CliError> {
    let d = &r.diagnostics;
    let detail = json!({
        "branch": format!("{:?}", d.branch),
        "weights": d.weights.as_ref().map(|w| w.0.clone()),
        "mwis_value": d.mwis_value,
        "used_best_pair": d.used_best_pair,
        "adjoined_first": d.adjoined_first,
        "enumeration_fallback": d.enumeration_fallback,
        "cross_check": d.cross_check,
    });
    if d.enumeration_fallback || d.cross_check == Some(false) {
        eprintln!("warning: weight reduction needed a fallback: {detail}");
    }
    Ok(MainSolution { gamma: r.gamma, i: r.argmax_i.to_set(n)?, skeleton: r.main_sequence, solver, detail })
}

fn solve_main(
    spec: &MainFactorSpec,
    g: &Graph,
    profile: &GammaProfile,
    cfg: &OracleConfig,
) -> Result<MainSolution, CliError> {
    let n = g.order();
    match spec {
        MainFactorSpec::Structured(StructuredKind::CyclePower { n, m }) => {
            from_closed(*n, solve_xjoin_cycle_power(*n, *m, profile)?, "mwis-reduction")
        }
        MainFactorSpec::Structured(StructuredKind::PathPower { n, m }) => {
            from_closed(*n, solve_xjoin_path_power(*n, *m, profile)?, "mwis-reduction")
        }
        MainFactorSpec::Split(_) => {
            let p = split_recognize(g)?;
            from_closed(n, solve_xjoin_split(g, &p, profile)?, "closed-form")
        }
        _ => {
            if let Ok(p) = split_recognize(g) {
                return from_closed(n, solve_xjoin_split(g, &p, profile)?, "closed-form");
            }
            if n > cfg.max_n {
                return Err(CliError::unsupported(format!(
                    "main factor {spec} has no dedicated solver and exceeds the oracle limit {}",
                    cfg.max_n
                )));
            }
            let (gamma, i) = xjoin_gamma_generic(g, profile, |i| gamma_gr_given_i_with(g, i, cfg))?;
            let skeleton =
                gds_given_i(g, &i, cfg)?.ok_or_else(|| CliError::new(exit::INTERNAL, "no sequence for maximiser"))?;
            Ok(MainSolution { gamma, i, skeleton, solver: "oracle", detail: Value::Null })
        }
    }
}

pub fn xjoin_cmd(spec: &MainFactorSpec, parts: Parts<'_>, opts: &SolveOptions) -> Result<RunReport, CliError> {
    timed(|| {
        let main = spec.graph()?;
        let n = main.order();
        let mut part_graphs = Vec::new();
        let mut part_seqs = Vec::new();
        let profile = match parts {
            Parts::Gammas(values) => {
                if values.len() != n {
                    return Err(CliError::parse(format!(
                        "--gammas has {} entries, main factor has {n} vertices",
                        values.len()
                    )));
                }
                GammaProfile::new(values.to_vec())?
            }
            Parts::Dir(dir) => {
                let mut values = Vec::with_capacity(n);
                for v in 1..=n {
                    let file = dir.join(format!("part_{v}.gr"));
                    let g = if file.exists() { read_graph_file(&file)? } else { Graph::edgeless(1) };
                    let solved = solve_with(&g, opts)?;
                    values.push(solved.gamma);
                    part_graphs.push(g);
                    part_seqs.push(solved.witness);
                }
                GammaProfile::new(values)?
            }
        };
        let sol = solve_main(spec, &main, &profile, &opts.oracle)?;
        let mut r = RunReport::new(spec.to_string(), sol.solver);
        if !verify_sequence(&main, &sol.skeleton)?.is_legal() {
            return Err(CliError::new(exit::INTERNAL, "main sequence failed re-verification"));
        }
        r.note("profile", profile.values().to_vec());
        r.note("argmax_i", sol.i.to_vec());
        r.note("main_sequence", sol.skeleton.as_slice().to_vec());
        if !sol.detail.is_null() {
            r.note("reduction", sol.detail);
        }
        if part_graphs.is_empty() {
            r.gamma = Some(sol.gamma);
            return Ok(r);
        }
        let inst = xjoin(&main, part_graphs)?;
        let chosen: BTreeMap<_, _> = sol.i.iter().map(|v| (v, part_seqs[v - 1].clone())).collect();
        let lifted = lift_sequence(&inst, &sol.skeleton, &sol.i, &chosen)?;
        r.note("product_vertices", inst.product().order());
        r.certify(inst.product(), sol.gamma, &lifted)?;
        Ok(r)
    })
}

pub fn lex(spec: &MainFactorSpec, gamma_h: usize) -> Result<RunReport, CliError> {
    timed(|| {
        let mut r = RunReport::new(spec.to_string(), "closed-form");
        let gamma = match spec {
            MainFactorSpec::Structured(k @ (StructuredKind::CyclePower { .. } | StructuredKind::PathPower { .. })) => {
                lex_gamma(*k, gamma_h)?
            }
            MainFactorSpec::Structured(StructuredKind::CoPath { .. } | StructuredKind::CoCycle { .. }) => {
                return Err(CliError::unsupported(format!("no lexicographic formula for {spec}")));
            }
            _ => {
                let g = spec.graph()?;
                let p =
                    split_recognize(&g).map_err(|_| CliError::unsupported(format!("{spec} is not a split graph")))?;
                r.note("alpha", p.independent.len()).note("n_param", p.n_param);
                lex_gamma_split(&g, &p, gamma_h)?
            }
        };
        r.note("gamma_h", gamma_h);
        r.gamma = Some(gamma);
        Ok(r)
    })
}

fn stats_json(s: &SolveStats) -> Value {
    json!({
        "leaves": s.leaves,
        "parallel": s.parallel,
        "series": s.series,
        "prime_split": s.prime_split,
        "prime_path": s.prime_path,
        "prime_cycle": s.prime_cycle,
        "prime_co_family": s.prime_co_family,
        "prime_generic": s.prime_generic,
    })
}

pub fn solve(path: &Path, opts: &SolveOptions) -> Result<RunReport, CliError> {
    timed(|| {
        let g = read_graph_file(path)?;
        let solved = solve_with(&g, opts)?;
        let s = &solved.stats;
        let primes = s.prime_split + s.prime_path + s.prime_cycle + s.prime_co_family + s.prime_generic;
        let mut r = RunReport::new(path.display().to_string(), "decomposition");
        r.note("prime_nodes", primes).note("nodes", stats_json(s));
        r.certify(&g, solved.gamma, &solved.witness)?;
        Ok(r)
    })
}

pub fn mwis(kind: &str, n: usize, m: usize, weights: &[i64], pair: bool) -> Result<RunReport, CliError> {
    timed(|| {
        let w = WeightVector(weights.to_vec());
        let res = match (kind, pair) {
            ("path-power", false) => mwis_path_power(n, m, &w)?,
            ("cycle-power", false) => mwis_cycle_power(n, m, &w)?,
            ("cycle-power", true) => best_pair_cycle_power(n, m, &w)?,
            ("path-power", true) => return Err(CliError::unsupported("--pair applies to cycle-power only")),
            (other, _) => return Err(CliError::parse(format!("unknown kind '{other}'"))),
        };
        let mut r = RunReport::new(format!("{kind}:n={n},m={m}"), "mwis");
        r.note("weight", res.weight).note("set", res.set.to_vec());
        Ok(r)
    })
}

/// Nested `{kind, vertices, quotient_edges?, children}` form of a tree.
pub fn tree_json(t: &ModuleTree) -> Value {
    let children: Vec<Value> = t.children.iter().map(tree_json).collect();
    match &t.kind {
        NodeKind::Leaf(v) => json!({ "kind": "leaf", "vertex": v, "children": children }),
        NodeKind::Parallel => json!({ "kind": "parallel", "vertices": t.vertices.to_vec(), "children": children }),
        NodeKind::Series => json!({ "kind": "series", "vertices": t.vertices.to_vec(), "children": children }),
        NodeKind::Prime { quotient } => json!({
            "kind": "prime",
            "vertices": t.vertices.to_vec(),
            "quotient_edges": quotient.edges(),
            "children": children,
        }),
    }
}

pub fn tree_text(t: &ModuleTree, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match &t.kind {
        NodeKind::Leaf(v) => out.push_str(&format!("{pad}leaf {v}\n")),
        NodeKind::Parallel => out.push_str(&format!("{pad}parallel {:?}\n", t.vertices)),
        NodeKind::Series => out.push_str(&format!("{pad}series {:?}\n", t.vertices)),
        NodeKind::Prime { quotient } => {
            out.push_str(&format!("{pad}prime {:?} quotient edges {:?}\n", t.vertices, quotient.edges()))
        }
    }
    for c in &t.children {
        tree_text(c, depth + 1, out);
    }
}

pub fn decompose_cmd(path: &Path) -> Result<(RunReport, ModuleTree), CliError> {
    let start = Instant::now();
    let g = read_graph_file(path)?;
    let t = decompose(&g);
    if t.reconstruct() != g {
        return Err(CliError::new(exit::INTERNAL, "decomposition does not reconstruct the graph"));
    }
    let mut r = RunReport::new(path.display().to_string(), "decomposition");
    r.note("tree", tree_json(&t));
    r.millis = start.elapsed().as_millis() as u64;
    Ok((r, t))
}
