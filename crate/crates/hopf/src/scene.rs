//! Scene files: a JSON document naming a DAG of construction nodes.
//!
//! ```json
//! {
//!   "conductor": 6,
//!   "nodes": [
//!     {"name": "S3", "op": "group_algebra", "group": {"degree": 3, "gens": ["(1 2 3)", "(1 2)"]}}
//!   ],
//!   "outputs": [["S3", "s3.hstore"]]
//! }
//! ```
//!
//! Nodes are built in topological order, every result is checked with
//! `verify_hopf`, extensions get their canonical exact sequence certified,
//! and the requested artifacts are written as `.hstore` files together with
//! a deterministic `build.log`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopf_core::analysis::verify_exact;
use hopf_core::constructions::{
    abelian_extension, action_from_theta, basic_construction, coaction_from_theta, galindo_pair, galindo_three_step,
    permutation_columns, smash_coproduct, smash_product, AutAction, Extension, GammaHatCocycle, TwistedGroupData,
};
use hopf_core::groups::{
    abelian_characters, lcm, matched_pair_from_factorization, nondegenerate_two_cocycle, CocyclePair, Decomposition,
    DualCocycle, Perm, PermGroup,
};
use hopf_core::hopf::{dual, dual_group_algebra, group_algebra, tensor_hopf, verify_hopf, FinHopf};
use hopf_core::{Conductor, CycNumber, Rational, SparseVec};
use serde::Deserialize;

use crate::{store, CliError};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupLit {
    pub degree: usize,
    pub gens: Vec<String>,
}

/// A scalar: an integer, a rational string `"a/b"`, a root of unity
/// `"z^k"` or `"-z^k"` (z = ζ_N), or a full literal `"cyc(N=..)[..]"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Lit {
    Int(i64),
    Text(String),
}

/// An automorphism given either as conjugation by a permutation of the
/// underlying group N, or as a matrix by columns of `[index, scalar]` pairs.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AutLit {
    Conjugation(String),
    Matrix(Vec<Vec<(usize, Lit)>>),
}

/// ω on Ŝ: an explicit table indexed by character positions, or the
/// nondegenerate cocycle of a decomposition S = Π⟨first⟩ × Π⟨second⟩; both
/// omitted gives ω ≡ 1.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaLit {
    #[serde(default)]
    pub first: Vec<String>,
    #[serde(default)]
    pub second: Vec<String>,
    pub table: Option<Vec<Lit>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Op {
    GroupAlgebra {
        group: GroupLit,
    },
    DualGroupAlgebra {
        group: GroupLit,
    },
    Dual {
        of: String,
    },
    Tensor {
        left: String,
        right: String,
    },
    /// (kN)^J for the twist J of (S, ω) with S ≤ N abelian.
    Twist {
        #[serde(rename = "N")]
        n: GroupLit,
        #[serde(rename = "S")]
        s: Vec<String>,
        #[serde(default)]
        omega: OmegaLit,
    },
    /// R ⋊ k^G with θ given per generator of G.
    SmashCoproduct {
        #[serde(rename = "R")]
        r: String,
        #[serde(rename = "G")]
        g: GroupLit,
        #[serde(default)]
        theta: Vec<AutLit>,
    },
    /// T # kF with the action given per generator of F.
    SmashProduct {
        #[serde(rename = "T")]
        t: String,
        #[serde(rename = "F")]
        f: GroupLit,
        #[serde(default)]
        action: Vec<AutLit>,
    },
    /// R ⋊ k^Γ #_σ kG; σ as `sigma[g·|G| + g'][γ]`.
    BasicConstruction {
        #[serde(rename = "R")]
        r: String,
        #[serde(rename = "Gamma")]
        gamma: GroupLit,
        #[serde(default)]
        theta: Vec<AutLit>,
        #[serde(rename = "G")]
        g: GroupLit,
        #[serde(default)]
        mu: Vec<AutLit>,
        sigma: Option<Vec<Vec<Lit>>>,
    },
    /// k^G # kF from the exact factorization L = FG, with
    /// `sigma[(x·|F| + y)·|G| + s] = σ_s(x,y)` and
    /// `tau[(a·|G| + b)·|F| + x] = τ_x(a,b)`.
    AbelianExtension {
        #[serde(rename = "L")]
        l: GroupLit,
        #[serde(rename = "F")]
        f: Vec<String>,
        #[serde(rename = "G")]
        g: Vec<String>,
        sigma: Option<Vec<Lit>>,
        tau: Option<Vec<Lit>>,
    },
    /// (kN ⋊ k^Γ)^{J̃} for a twist node and Γ ≤ N acting by conjugation.
    GalindoTwist {
        twist: String,
        #[serde(rename = "Gamma")]
        gamma: Vec<String>,
    },
    /// (k(N⋊G))^{J̃} ⋊ k^Γ for a twist node and Γ, G ≤ N acting by
    /// conjugation.
    GalindoThreeStep {
        twist: String,
        #[serde(rename = "Gamma")]
        gamma: Vec<String>,
        #[serde(rename = "G")]
        g: Vec<String>,
    },
}

impl Op {
    pub fn name(&self) -> &'static str {
        match self {
            Op::GroupAlgebra { .. } => "group_algebra",
            Op::DualGroupAlgebra { .. } => "dual_group_algebra",
            Op::Dual { .. } => "dual",
            Op::Tensor { .. } => "tensor",
            Op::Twist { .. } => "twist",
            Op::SmashCoproduct { .. } => "smash_coproduct",
            Op::SmashProduct { .. } => "smash_product",
            Op::BasicConstruction { .. } => "basic_construction",
            Op::AbelianExtension { .. } => "abelian_extension",
            Op::GalindoTwist { .. } => "galindo_twist",
            Op::GalindoThreeStep { .. } => "galindo_three_step",
        }
    }

    fn references(&self) -> Vec<&str> {
        match self {
            Op::Dual { of } => vec![of],
            Op::Tensor { left, right } => vec![left, right],
            Op::SmashCoproduct { r, .. } | Op::BasicConstruction { r, .. } => vec![r],
            Op::SmashProduct { t, .. } => vec![t],
            Op::GalindoTwist { twist, .. } | Op::GalindoThreeStep { twist, .. } => vec![twist],
            _ => Vec::new(),
        }
    }

    fn group_literals(&self) -> Vec<&GroupLit> {
        match self {
            Op::GroupAlgebra { group } | Op::DualGroupAlgebra { group } => vec![group],
            Op::Twist { n, .. } => vec![n],
            Op::SmashCoproduct { g, .. } => vec![g],
            Op::SmashProduct { f, .. } => vec![f],
            Op::BasicConstruction { gamma, g, .. } => vec![gamma, g],
            Op::AbelianExtension { l, .. } => vec![l],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Node {
    pub name: String,
    #[serde(flatten)]
    pub op: Op,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub conductor: Option<u32>,
    pub nodes: Vec<Node>,
    #[serde(default)]
    pub outputs: Vec<(String, String)>,
}

fn node_err(index: usize, name: &str, message: impl Into<String>) -> CliError {
    CliError::Parse { position: format!("node {index} ({name:?})"), message: message.into() }
}

pub fn parse(text: &str) -> Result<Scene, CliError> {
    let scene: Scene = serde_json::from_str(text).map_err(|e| CliError::Parse {
        position: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let mut seen = BTreeSet::new();
    for (i, node) in scene.nodes.iter().enumerate() {
        if !seen.insert(node.name.as_str()) {
            return Err(node_err(i, &node.name, "duplicate node name"));
        }
    }
    for (i, node) in scene.nodes.iter().enumerate() {
        for r in node.op.references() {
            if !seen.contains(r) {
                return Err(node_err(i, &node.name, format!("reference to undefined node {r:?}")));
            }
        }
    }
    for (node, _) in &scene.outputs {
        if !seen.contains(node.as_str()) {
            return Err(CliError::Parse { position: String::from("outputs"), message: format!("undefined node {node:?}") });
        }
    }
    levels(&scene)?;
    Ok(scene)
}

pub fn load(path: &Path) -> Result<Scene, CliError> {
    parse(&std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?)
}

/// Nodes grouped by dependency depth; fails on cycles.
fn levels(scene: &Scene) -> Result<Vec<Vec<usize>>, CliError> {
    let index: BTreeMap<&str, usize> = scene.nodes.iter().enumerate().map(|(i, n)| (n.name.as_str(), i)).collect();
    let mut depth: Vec<Option<usize>> = vec![None; scene.nodes.len()];
    let mut remaining = scene.nodes.len();
    while remaining > 0 {
        let mut progressed = false;
        for (i, node) in scene.nodes.iter().enumerate() {
            if depth[i].is_some() {
                continue;
            }
            let deps: Option<Vec<usize>> = node.op.references().iter().map(|r| depth[index[r]]).collect();
            if let Some(deps) = deps {
                depth[i] = Some(deps.into_iter().max().map_or(0, |d| d + 1));
                remaining -= 1;
                progressed = true;
            }
        }
        if !progressed {
            let i = depth.iter().position(Option::is_none).expect("remaining");
            return Err(node_err(i, &scene.nodes[i].name, "dependency cycle"));
        }
    }
    let max = depth.iter().flatten().max().copied().unwrap_or(0);
    let mut out = vec![Vec::new(); max + 1];
    for (i, d) in depth.iter().enumerate() {
        out[d.expect("assigned")].push(i);
    }
    Ok(out)
}

fn build_group(lit: &GroupLit) -> Result<PermGroup, hopf_core::Error> {
    let gens: Vec<&str> = lit.gens.iter().map(String::as_str).collect();
    PermGroup::from_cycles(lit.degree, &gens)
}

fn parse_perms(gens: &[String], degree: usize) -> Result<Vec<Perm>, hopf_core::Error> {
    gens.iter().map(|g| Perm::parse(g, degree)).collect()
}

pub fn parse_scalar(lit: &Lit, field: &Conductor) -> Result<CycNumber, hopf_core::Error> {
    match lit {
        Lit::Int(v) => Ok(field.int(*v)),
        Lit::Text(s) => {
            let t = s.trim();
            if t.starts_with("cyc(") {
                return CycNumber::parse_literal(t, field);
            }
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest.trim()),
                None => (1, t),
            };
            if let Some(k) = body.strip_prefix("z^").or_else(|| body.strip_prefix("zeta^")) {
                let k: i64 = k.trim().parse().map_err(|_| hopf_core::Error::Parse(s.clone()))?;
                let z = field.root_of_unity(k);
                return Ok(if sign < 0 { -&z } else { z });
            }
            if body == "z" || body == "zeta" {
                let z = field.root_of_unity(1);
                return Ok(if sign < 0 { -&z } else { z });
            }
            let q: Rational = t.parse().map_err(|_| hopf_core::Error::Parse(s.clone()))?;
            Ok(field.rational(q))
        }
    }
}

/// A built node: the Hopf algebra plus whatever structure later nodes use.
#[derive(Clone, Debug)]
pub struct Built {
    pub hopf: Arc<FinHopf>,
    pub extension: Option<Extension>,
    pub twist: Option<TwistedGroupData>,
    /// N when the basis of `hopf` is the sorted element list of N.
    pub base_group: Option<PermGroup>,
}

impl Built {
    fn plain(hopf: FinHopf) -> Self {
        Built { hopf: Arc::new(hopf), extension: None, twist: None, base_group: None }
    }

    fn extension(ext: Extension) -> Self {
        Built { hopf: ext.hopf.clone(), extension: Some(ext), twist: None, base_group: None }
    }
}

/// The conductor used when a scene does not set one: the lcm of the
/// exponents of every declared group.
pub fn default_conductor(scene: &Scene) -> Result<u32, CliError> {
    let mut l = 1u64;
    for (i, node) in scene.nodes.iter().enumerate() {
        for g in node.op.group_literals() {
            let group = build_group(g).map_err(|e| node_err(i, &node.name, e.to_string()))?;
            l = lcm(l, group.exponent());
        }
    }
    u32::try_from(l).map_err(|_| CliError::Input(String::from("default conductor overflows")))
}

/// Every declared group must have all its characters defined over the field.
fn check_conductor(scene: &Scene, field: &Conductor) -> Result<(), CliError> {
    for (i, node) in scene.nodes.iter().enumerate() {
        for g in node.op.group_literals() {
            let e = build_group(g).map_err(|e| node_err(i, &node.name, e.to_string()))?.exponent();
            if !u32::try_from(e).is_ok_and(|e| field.contains_roots_of_order(e)) {
                return Err(node_err(
                    i,
                    &node.name,
                    format!("conductor {} lacks roots of unity of order {e}", field.n()),
                ));
            }
        }
    }
    Ok(())
}

fn aut_action(target: &Built, group: &PermGroup, lits: &[AutLit], field: &Conductor) -> Result<AutAction, CliError> {
    if lits.is_empty() {
        return Ok(AutAction::trivial(target.hopf.clone(), group));
    }
    let dim = target.hopf.dim();
    let maps = lits
        .iter()
        .map(|lit| match lit {
            AutLit::Conjugation(c) => {
                let n = target
                    .base_group
                    .as_ref()
                    .ok_or_else(|| CliError::Input(String::from("conjugation needs a group algebra or twisted group algebra")))?;
                let p = Perm::parse(c, n.degree())?;
                let ci = n.index_of(&p).ok_or_else(|| CliError::Input(format!("{c} is not in N")))?;
                let images: Vec<usize> = (0..n.order()).map(|x| n.conj(x, ci)).collect();
                Ok(permutation_columns(&images, field))
            }
            AutLit::Matrix(cols) => {
                if cols.len() != dim {
                    return Err(CliError::Input(format!("matrix has {} columns, expected {dim}", cols.len())));
                }
                cols.iter()
                    .map(|col| {
                        col.iter()
                            .map(|(i, c)| Ok((*i, parse_scalar(c, field)?)))
                            .collect::<Result<Vec<_>, hopf_core::Error>>()
                            .map(SparseVec::from_terms)
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(CliError::from)
            }
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(AutAction::from_generators(target.hopf.clone(), group, maps)?)
}

fn scalars(lits: &[Lit], field: &Conductor) -> Result<Vec<CycNumber>, hopf_core::Error> {
    lits.iter().map(|l| parse_scalar(l, field)).collect()
}

fn twist_data(n: &GroupLit, s: &[String], omega: &OmegaLit, field: &Conductor) -> Result<TwistedGroupData, hopf_core::Error> {
    let ng = build_group(n)?;
    let sg = ng.subgroup(&parse_perms(s, n.degree)?)?;
    let omega = if let Some(table) = &omega.table {
        let dual = abelian_characters(&sg, field)?;
        DualCocycle::from_table(&dual, scalars(table, field)?)?
    } else if omega.first.is_empty() && omega.second.is_empty() {
        DualCocycle::trivial(&abelian_characters(&sg, field)?, field)
    } else {
        let dec = Decomposition { first: parse_perms(&omega.first, n.degree)?, second: parse_perms(&omega.second, n.degree)? };
        nondegenerate_two_cocycle(&sg, &dec, field)?
    };
    Ok(TwistedGroupData { n: ng, s: sg, omega, field: field.clone() })
}

fn build_node(op: &Op, built: &BTreeMap<String, Built>, field: &Conductor) -> Result<Built, CliError> {
    let get = |name: &str| built.get(name).expect("dependencies are built first");
    Ok(match op {
        Op::GroupAlgebra { group } => {
            let g = build_group(group)?;
            Built { base_group: Some(g.clone()), ..Built::plain(group_algebra(&g, field)) }
        }
        Op::DualGroupAlgebra { group } => Built::plain(dual_group_algebra(&build_group(group)?, field)),
        Op::Dual { of } => Built::plain(dual(&get(of).hopf)),
        Op::Tensor { left, right } => Built::plain(tensor_hopf(&get(left).hopf, &get(right).hopf)?),
        Op::Twist { n, s, omega } => {
            let data = twist_data(n, s, omega, field)?;
            let j = data.twist()?;
            j.check()?;
            Built { hopf: data.twisted()?, extension: None, base_group: Some(data.n.clone()), twist: Some(data) }
        }
        Op::SmashCoproduct { r, g, theta } => {
            let target = get(r);
            let theta = aut_action(target, &build_group(g)?, theta, field)?;
            Built::extension(smash_coproduct(&coaction_from_theta(&theta)?)?)
        }
        Op::SmashProduct { t, f, action } => {
            let target = get(t);
            let theta = aut_action(target, &build_group(f)?, action, field)?;
            Built::extension(smash_product(&action_from_theta(&theta)?)?)
        }
        Op::BasicConstruction { r, gamma, theta, g, mu, sigma } => {
            let target = get(r);
            let gm = build_group(gamma)?;
            let gg = build_group(g)?;
            let theta = aut_action(target, &gm, theta, field)?;
            let mu = aut_action(target, &gg, mu, field)?;
            let sigma = match sigma {
                None => GammaHatCocycle::trivial(&gm, &gg, field),
                Some(rows) => {
                    let values = rows.iter().map(|row| scalars(row, field)).collect::<Result<Vec<_>, _>>()?;
                    let s = GammaHatCocycle { gamma: gm.clone(), g: gg.clone(), values };
                    s.check()?;
                    s
                }
            };
            Built::extension(basic_construction(&theta, &mu, &sigma)?)
        }
        Op::AbelianExtension { l, f, g, sigma, tau } => {
            let lg = build_group(l)?;
            let fg = lg.subgroup(&parse_perms(f, l.degree)?)?;
            let gg = lg.subgroup(&parse_perms(g, l.degree)?)?;
            let mp = matched_pair_from_factorization(&lg, &fg, &gg)?;
            let mut cp = CocyclePair::trivial(&mp, field);
            if let Some(s) = sigma {
                cp.sigma = scalars(s, field)?;
            }
            if let Some(t) = tau {
                cp.tau = scalars(t, field)?;
            }
            Built::extension(abelian_extension(&mp, &cp, field)?)
        }
        Op::GalindoTwist { twist, gamma } => {
            let data = get(twist).twist.as_ref().ok_or_else(|| CliError::Input(format!("{twist:?} is not a twist node")))?;
            let gm = data.n.subgroup(&parse_perms(gamma, data.n.degree())?)?;
            let (_, h2) = galindo_pair(data, &gm)?;
            Built { hopf: h2, extension: None, twist: None, base_group: None }
        }
        Op::GalindoThreeStep { twist, gamma, g } => {
            let data = get(twist).twist.as_ref().ok_or_else(|| CliError::Input(format!("{twist:?} is not a twist node")))?;
            let gm = data.n.subgroup(&parse_perms(gamma, data.n.degree())?)?;
            let gg = data.n.subgroup(&parse_perms(g, data.n.degree())?)?;
            let (_, a2, _) = galindo_three_step(data, &gm, &gg)?;
            Built::extension(a2)
        }
    })
}

/// Result of building a scene.
#[derive(Debug)]
pub struct BuildOutcome {
    pub field: Conductor,
    pub nodes: BTreeMap<String, Built>,
    pub log: String,
    pub artifacts: Vec<PathBuf>,
}

/// Builds every node without touching the filesystem.
pub fn build_nodes(scene: &Scene) -> Result<(Conductor, BTreeMap<String, Built>, String), CliError> {
    let conductor = match scene.conductor {
        Some(c) => c,
        None => default_conductor(scene)?,
    };
    let field = Conductor::new(conductor).map_err(|e| CliError::Input(e.to_string()))?;
    check_conductor(scene, &field)?;
    let mut built: BTreeMap<String, Built> = BTreeMap::new();
    let mut log = String::new();
    let _ = writeln!(log, "conductor {conductor}");
    for level in levels(scene)? {
        let results: Vec<(usize, Result<Built, CliError>)> = std::thread::scope(|scope| {
            let handles: Vec<_> = level
                .iter()
                .map(|&i| {
                    let (built, field) = (&built, &field);
                    (i, scope.spawn(move || build_node(&scene.nodes[i].op, built, field)))
                })
                .collect();
            handles.into_iter().map(|(i, h)| (i, h.join().expect("node builder panicked"))).collect()
        });
        for (i, result) in results {
            let node = &scene.nodes[i];
            let value = result.map_err(|e| match e {
                CliError::Core(core) => {
                    let err = CliError::Core(core);
                    if err.exit_code() == crate::EXIT_VERIFICATION {
                        CliError::Verification { identity: format!("node {:?}: {err}", node.name), witness: None }
                    } else {
                        node_err(i, &node.name, err.to_string())
                    }
                }
                other => other,
            })?;
            let report = verify_hopf(&value.hopf);
            let _ = writeln!(log, "node {} op {} dim {}", node.name, node.op.name(), value.hopf.dim());
            let _ = writeln!(log, "  verify_hopf: {}", report.summary());
            if !report.passed() {
                let failure = report.failures().next().expect("a failure");
                return Err(CliError::Verification {
                    identity: format!("node {:?}: {}", node.name, failure.name),
                    witness: failure.witness.clone(),
                });
            }
            if let Some(ext) = &value.extension {
                let cert = verify_exact(&ext.iota, &ext.pi).map_err(|e| CliError::Verification {
                    identity: format!("node {:?}: exact sequence: {e}", node.name),
                    witness: None,
                })?;
                let (k, h, t) = cert.dims;
                let _ = writeln!(log, "  exact sequence certified: {k} -> {h} -> {t}");
            }
            built.insert(node.name.clone(), value);
        }
    }
    Ok((field, built, log))
}

/// Builds the scene and writes artifacts plus `build.log` into `out`.
pub fn build(scene: &Scene, out: &Path) -> Result<BuildOutcome, CliError> {
    let (field, nodes, mut log) = build_nodes(scene)?;
    std::fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
    let outputs: Vec<(String, String)> = if scene.outputs.is_empty() {
        scene.nodes.iter().map(|n| (n.name.clone(), format!("{}.hstore", n.name))).collect()
    } else {
        scene.outputs.clone()
    };
    let mut artifacts = Vec::new();
    for (name, rel) in &outputs {
        let path = out.join(rel);
        store::save(&nodes[name].hopf, &path)?;
        let _ = writeln!(log, "artifact {name} -> {rel}");
        artifacts.push(path);
    }
    let log_path = out.join("build.log");
    std::fs::write(&log_path, &log).map_err(|e| CliError::io(&log_path, e))?;
    Ok(BuildOutcome { field, nodes, log, artifacts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse("{\"nodes\": [ {\"name\": 3} ]}").unwrap_err();
        assert!(matches!(err, CliError::Parse { ref position, .. } if position.starts_with("line 1")));
        let err = parse(r#"{"nodes": [{"name": "a", "op": "dual", "of": "b"}]}"#).unwrap_err();
        assert!(err.to_string().contains("node 0 (\"a\")"));
        let err = parse(r#"{"nodes": [{"name": "a", "op": "dual", "of": "b"}, {"name": "b", "op": "dual", "of": "a"}]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("cycle"));
    }

    #[test]
    fn scalar_literals() {
        let k = Conductor::new(4).unwrap();
        assert_eq!(parse_scalar(&Lit::Int(-1), &k).unwrap(), k.int(-1));
        assert_eq!(parse_scalar(&Lit::Text("1/2".into()), &k).unwrap(), k.frac(1, 2));
        assert_eq!(parse_scalar(&Lit::Text("-z^1".into()), &k).unwrap(), -&k.root_of_unity(1));
        let lit = k.root_of_unity(3).to_literal();
        assert_eq!(parse_scalar(&Lit::Text(lit), &k).unwrap(), k.root_of_unity(3));
    }

    #[test]
    fn single_group_algebra_scene() {
        let scene = parse(r#"{"nodes": [{"name": "S3", "op": "group_algebra", "group": {"degree": 3, "gens": ["(1 2 3)", "(1 2)"]}}]}"#)
            .unwrap();
        assert_eq!(default_conductor(&scene).unwrap(), 6);
        let (_, nodes, log) = build_nodes(&scene).unwrap();
        assert_eq!(nodes["S3"].hopf.dim(), 6);
        assert!(log.contains("node S3 op group_algebra dim 6"));
    }
}
