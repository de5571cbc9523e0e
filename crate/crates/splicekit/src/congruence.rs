//! Congruence conditions and splice-quotient assembly: choose one
//! admissible monomial per edge at each node so that the discriminant
//! group transforms all of them by the same character, then attach the
//! diagonal group action to the resulting equations.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::equations::{admissible_monomials, hamm_matrix, EquationSystem, Monomial, NodeEquations};
use crate::error::{Error, Result};
use crate::graph::{validate_resolution_graph, PlumbingGraph};
use crate::lattice::{
    character_of_monomial, discriminant_group, leaf_representation, Character, DiscriminantGroup,
    LeafCharacterTable,
};
use crate::parse::Input;
use crate::splice::{
    check_semigroup_conditions, resolution_to_splice, validate_splice_diagram, weight_system,
    SemigroupCertificate, SpliceDiagram,
};

pub const DEFAULT_ENUM_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Enumeration was truncated on a failing node, so the failure is
    /// not definitive.
    Inconclusive,
}

/// Per-edge data of a failed or inconclusive node: the full (or
/// truncated) character sets that admit no common member.
#[derive(Debug, Clone)]
pub struct CongruenceFailure {
    /// (edge description, characters seen, enumeration exhaustive?)
    pub edges: Vec<(String, Vec<Character>, bool)>,
    pub enum_limit: usize,
}

#[derive(Debug, Clone)]
pub struct NodeCongruence {
    pub node: String,
    pub verdict: Verdict,
    /// The shared character on pass.
    pub character: Option<Character>,
    /// On pass: (edge index, edge description, chosen exponents),
    /// in the canonical edge order of the node.
    pub monomials: Vec<(usize, String, BTreeMap<String, u64>)>,
    pub failure: Option<CongruenceFailure>,
}

#[derive(Debug, Clone)]
pub struct CongruenceCertificate {
    pub nodes: Vec<NodeCongruence>,
    pub verdict: Verdict,
    pub semigroup: SemigroupCertificate,
}

impl CongruenceCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn check_congruence_conditions(
    g: &PlumbingGraph,
    enum_limit: usize,
) -> Result<CongruenceCertificate> {
    let d = resolution_to_splice(g)?;
    let semigroup = check_semigroup_conditions(&d)?;
    if !semigroup.pass {
        return Err(Error::domain(
            "congruence conditions need the semigroup conditions to hold",
        ));
    }
    let table = leaf_representation(g)?;
    let ws = weight_system(&d);

    let mut nodes = Vec::new();
    for &v in &d.nodes() {
        let vname = d.name(v).to_string();
        let edge_order = d.ordered_edges_at(v);

        // per edge: monomials in lex order, their characters, exhaustiveness
        let mut per_edge = Vec::new();
        for &e in &edge_order {
            let monos = admissible_monomials(&d, &ws, v, e, enum_limit)?;
            let exhaustive = monos.len() < enum_limit;
            let chars: Vec<Character> = monos
                .iter()
                .map(|m| character_of_monomial(&table, m))
                .collect::<Result<_>>()?;
            let other = d.edges()[e].other(v);
            let desc = format!("{} -> {}", vname, d.name(other));
            per_edge.push((e, desc, monos, chars, exhaustive));
        }

        // characters available on every edge
        let mut common: Option<HashSet<Character>> = None;
        for (_, _, _, chars, _) in &per_edge {
            let set: HashSet<Character> = chars.iter().cloned().collect();
            common = Some(match common {
                None => set,
                Some(prev) => prev.intersection(&set).cloned().collect(),
            });
        }
        let common = common.unwrap_or_default();

        if common.is_empty() {
            let exhaustive_all = per_edge.iter().all(|(_, _, _, _, ex)| *ex);
            nodes.push(NodeCongruence {
                node: vname,
                verdict: if exhaustive_all {
                    Verdict::Fail
                } else {
                    Verdict::Inconclusive
                },
                character: None,
                monomials: Vec::new(),
                failure: Some(CongruenceFailure {
                    edges: per_edge
                        .into_iter()
                        .map(|(_, desc, _, chars, ex)| {
                            let mut uniq = Vec::new();
                            for c in chars {
                                if !uniq.contains(&c) {
                                    uniq.push(c);
                                }
                            }
                            (desc, uniq, ex)
                        })
                        .collect(),
                    enum_limit,
                }),
            });
            continue;
        }

        // deterministic choice: the first monomial of the first edge whose
        // character is common fixes the character; each edge then takes its
        // first monomial with that character
        let (_, _, monos0, chars0, _) = &per_edge[0];
        let pick = chars0
            .iter()
            .position(|c| common.contains(c))
            .expect("common character appears on the first edge");
        let chi = chars0[pick].clone();
        let _ = monos0;
        let monomials: Vec<(usize, String, BTreeMap<String, u64>)> = per_edge
            .iter()
            .map(|(e, desc, monos, chars, _)| {
                let i = chars
                    .iter()
                    .position(|c| c == &chi)
                    .expect("character is common to all edges");
                (*e, desc.clone(), monos[i].clone())
            })
            .collect();
        // re-verify the certificate from scratch
        for (_, _, m) in &monomials {
            if character_of_monomial(&table, m)? != chi {
                return Err(Error::Internal("chosen monomial character mismatch".into()));
            }
        }
        nodes.push(NodeCongruence {
            node: vname,
            verdict: Verdict::Pass,
            character: Some(chi),
            monomials,
            failure: None,
        });
    }

    let verdict = if nodes.iter().any(|n| n.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if nodes.iter().any(|n| n.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(CongruenceCertificate {
        nodes,
        verdict,
        semigroup,
    })
}

/// Splice-quotient package: equivariant splice equations, the group, its
/// leaf action, per-node characters, and the exponent that makes each
/// leaf variable invariant.
#[derive(Debug, Clone)]
pub struct SpliceQuotientData {
    pub system: EquationSystem,
    pub group: DiscriminantGroup,
    pub action: LeafCharacterTable,
    pub node_characters: BTreeMap<String, Character>,
    /// |det| of the intersection matrix: z_w to this power is invariant.
    pub invariant_exponent: BigInt,
}

pub fn assemble_splice_quotient(g: &PlumbingGraph) -> Result<SpliceQuotientData> {
    assemble_splice_quotient_limited(g, DEFAULT_ENUM_LIMIT)
}

pub fn assemble_splice_quotient_limited(
    g: &PlumbingGraph,
    enum_limit: usize,
) -> Result<SpliceQuotientData> {
    let cert = check_congruence_conditions(g, enum_limit)?;
    if !cert.passed() {
        return Err(Error::domain(format!(
            "congruence conditions verdict: {:?}",
            cert.verdict
        )));
    }
    let d = resolution_to_splice(g)?;
    let ws = weight_system(&d);
    let table = leaf_representation(g)?;
    let group = discriminant_group(g)?;
    let variables: Vec<String> = d.leaves().iter().map(|&w| d.name(w).to_string()).collect();

    let mut nodes = Vec::new();
    let mut node_characters = BTreeMap::new();
    for nc in &cert.nodes {
        let tv = nc.monomials.len();
        let matrix = hamm_matrix(tv - 2, tv)?;
        let equations: Vec<Vec<Monomial>> = (0..tv - 2)
            .map(|i| {
                (0..tv)
                    .map(|e| Monomial {
                        coeff: matrix[(i, e)].clone(),
                        exponents: nc.monomials[e].2.clone(),
                    })
                    .collect()
            })
            .collect();
        // isotypicality: every monomial of the node carries chi_v
        let chi = nc.character.clone().expect("pass certificate has character");
        for eq in &equations {
            for m in eq {
                if character_of_monomial(&table, &m.exponents)? != chi {
                    return Err(Error::Internal(format!(
                        "equation at node `{}` is not isotypical",
                        nc.node
                    )));
                }
            }
        }
        // weighted homogeneity, as for plain splice equations
        let dv = &ws.node_weight[&nc.node];
        for eq in &equations {
            for m in eq {
                let mut total = BigInt::from(0);
                for (leaf, &e) in &m.exponents {
                    total += BigInt::from(e) * &ws.l[&(nc.node.clone(), leaf.clone())];
                }
                if &total != dv {
                    return Err(Error::Internal(format!(
                        "monomial at node `{}` breaks weighted homogeneity",
                        nc.node
                    )));
                }
            }
        }
        node_characters.insert(nc.node.clone(), chi);
        nodes.push(NodeEquations {
            node: nc.node.clone(),
            matrix,
            equations,
        });
    }

    let note = if validate_splice_diagram(&d).zhs_link {
        None
    } else {
        Some(
            "node weights not pairwise coprime: equations describe the conjectural universal abelian cover"
                .to_string(),
        )
    };
    let det = g.intersection_matrix().det().abs();
    Ok(SpliceQuotientData {
        system: EquationSystem {
            variables,
            nodes,
            note,
        },
        group,
        action: table,
        node_characters,
        invariant_exponent: det,
    })
}

/// One stage of the classification pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct Stage {
    pub name: String,
    pub verdict: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub stages: Vec<Stage>,
    /// Both the semigroup and the congruence conditions hold.
    pub splice_quotient_eligible: bool,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "stages": self.stages.iter().map(|s| serde_json::json!({
                "name": s.name,
                "verdict": s.verdict,
                "detail": s.detail,
            })).collect::<Vec<_>>(),
            "splice_quotient_eligible": self.splice_quotient_eligible,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.stages {
            out.push_str(&format!("{:<22} {:<14} {}\n", s.name, s.verdict, s.detail));
        }
        out.push_str(&format!(
            "splice-quotient eligible: {}\n",
            if self.splice_quotient_eligible { "yes" } else { "no" }
        ));
        out
    }
}

/// Run the whole condition pipeline on a resolution graph and report
/// every stage with its witnesses. All failures are report entries.
pub fn classify_graph(g: &PlumbingGraph) -> ClassificationReport {
    classify_graph_limited(g, DEFAULT_ENUM_LIMIT)
}

pub fn classify_graph_limited(g: &PlumbingGraph, enum_limit: usize) -> ClassificationReport {
    let mut stages = Vec::new();
    let report = validate_resolution_graph(g);
    stages.push(Stage {
        name: "resolution_graph".into(),
        verdict: if report.passed() { "pass" } else { "fail" }.into(),
        detail: report
            .checks
            .iter()
            .map(|c| format!("{}: {}", c.name, if c.pass { "ok" } else { c.detail.as_str() }))
            .collect::<Vec<_>>()
            .join("; "),
    });
    if !report.passed() {
        return ClassificationReport {
            stages,
            splice_quotient_eligible: false,
        };
    }
    stages.push(Stage {
        name: "homology".into(),
        verdict: if report.is_zhs { "ZHS" } else { "QHS" }.into(),
        detail: format!("det(A) = {}", report.det),
    });

    let d = match resolution_to_splice(g) {
        Ok(d) => d,
        Err(e) => {
            stages.push(Stage {
                name: "splice_diagram".into(),
                verdict: "not_applicable".into(),
                detail: e.to_string(),
            });
            return ClassificationReport {
                stages,
                splice_quotient_eligible: false,
            };
        }
    };
    stages.push(Stage {
        name: "splice_diagram".into(),
        verdict: "ok".into(),
        detail: format!("{} nodes, {} leaves", d.nodes().len(), d.leaves().len()),
    });
    classify_from_splice(&mut stages, &d, Some(g), enum_limit)
}

/// Classification starting from a splice diagram. Without a resolution
/// graph the discriminant group is unavailable, so the congruence stage
/// is skipped.
pub fn classify_splice(d: &SpliceDiagram) -> ClassificationReport {
    let mut stages = Vec::new();
    classify_from_splice(&mut stages, d, None, DEFAULT_ENUM_LIMIT)
}

fn classify_from_splice(
    stages: &mut Vec<Stage>,
    d: &SpliceDiagram,
    g: Option<&PlumbingGraph>,
    enum_limit: usize,
) -> ClassificationReport {
    let take = |stages: &mut Vec<Stage>, eligible| ClassificationReport {
        stages: std::mem::take(stages),
        splice_quotient_eligible: eligible,
    };

    let en = validate_splice_diagram(d);
    stages.push(Stage {
        name: "splice_conditions".into(),
        verdict: if en.zhs_link { "ZHS_link" } else { "not_ZHS" }.into(),
        detail: en
            .checks
            .iter()
            .map(|c| format!("{}: {}", c.name, if c.pass { "ok" } else { c.detail.as_str() }))
            .collect::<Vec<_>>()
            .join("; ")
            + &en.note.as_deref().map(|n| format!("; {n}")).unwrap_or_default(),
    });

    let sg = match check_semigroup_conditions(d) {
        Ok(c) => c,
        Err(e) => {
            stages.push(Stage {
                name: "semigroup".into(),
                verdict: "error".into(),
                detail: e.to_string(),
            });
            return take(stages, false);
        }
    };
    let sg_detail = sg
        .entries
        .iter()
        .map(|e| match &e.witness {
            Some(w) => {
                let parts: Vec<String> = w.iter().map(|(n, a)| format!("{a}*l'({n})")).collect();
                format!("{} [{}]: {} = {}", e.node, e.edge_desc, e.target, parts.join(" + "))
            }
            None => {
                let gens: Vec<String> = e.generators.iter().map(|(_, g)| g.to_string()).collect();
                format!(
                    "{} [{}]: {} not in N({})",
                    e.node,
                    e.edge_desc,
                    e.target,
                    gens.join(",")
                )
            }
        })
        .collect::<Vec<_>>()
        .join("; ");
    stages.push(Stage {
        name: "semigroup".into(),
        verdict: if sg.pass { "pass" } else { "fail" }.into(),
        detail: sg_detail,
    });
    if !sg.pass {
        return take(stages, false);
    }

    let Some(g) = g else {
        stages.push(Stage {
            name: "congruence".into(),
            verdict: "skipped".into(),
            detail: "requires a resolution graph input".into(),
        });
        return take(stages, false);
    };

    match check_congruence_conditions(g, enum_limit) {
        Ok(cert) => {
            let detail = cert
                .nodes
                .iter()
                .map(|n| match &n.character {
                    Some(chi) => format!("{}: character {}", n.node, chi),
                    None => format!("{}: no common character", n.node),
                })
                .collect::<Vec<_>>()
                .join("; ");
            let pass = cert.passed();
            stages.push(Stage {
                name: "congruence".into(),
                verdict: match cert.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::Inconclusive => "inconclusive",
                }
                .into(),
                detail,
            });
            take(stages, pass)
        }
        Err(e) => {
            stages.push(Stage {
                name: "congruence".into(),
                verdict: "error".into(),
                detail: e.to_string(),
            });
            take(stages, false)
        }
    }
}

/// Classification entry point for either input format.
pub fn classify_input(input: &Input) -> ClassificationReport {
    match input {
        Input::Graph(g) => classify_graph(g),
        Input::Splice(d) => classify_splice(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_quotient_cusp;
    use crate::splice::resolution_to_splice;
    use crate::testutil::{a_string, d4, question_a_diagram, sigma235, two_node_zhs};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn zhs_congruence_trivial() {
        let cert = check_congruence_conditions(&two_node_zhs(), DEFAULT_ENUM_LIMIT).unwrap();
        assert!(cert.passed());
        for n in &cert.nodes {
            assert!(n.character.as_ref().unwrap().is_trivial());
        }
    }

    #[test]
    fn d4_congruence() {
        let cert = check_congruence_conditions(&d4(), DEFAULT_ENUM_LIMIT).unwrap();
        assert!(cert.passed());
        let n = &cert.nodes[0];
        // chosen monomials are the forced z_w^2, all with trivial character
        assert!(n.character.as_ref().unwrap().is_trivial());
        for (_, _, m) in &n.monomials {
            assert_eq!(m.len(), 1);
            assert_eq!(*m.values().next().unwrap(), 2);
        }
    }

    #[test]
    fn quotient_cusp_congruence() {
        let g = build_quotient_cusp(&[big(2), big(3)]).unwrap();
        let cert = check_congruence_conditions(&g, DEFAULT_ENUM_LIMIT).unwrap();
        assert!(cert.passed(), "{:?}", cert.verdict);
    }

    #[test]
    fn zhs_assembly_matches_plain_equations() {
        let g = two_node_zhs();
        let data = assemble_splice_quotient(&g).unwrap();
        let plain =
            crate::equations::generate_splice_equations(&resolution_to_splice(&g).unwrap())
                .unwrap();
        assert_eq!(
            data.system.to_json().to_string(),
            plain.to_json().to_string()
        );
        assert!(data.group.is_trivial());
        assert_eq!(data.invariant_exponent, big(1));
    }

    #[test]
    fn star_assembly_agrees_with_brieskorn() {
        let g = sigma235();
        let data = assemble_splice_quotient(&g).unwrap();
        let uac = crate::equations::brieskorn_uac(&g).unwrap();
        // exponents agree: the splice equations of a one-node diagram are
        // pure powers z_w^{n_w}
        let eq = &data.system.nodes[0].equations[0];
        for (m, (leaf, n)) in eq.iter().zip(&uac.exponents) {
            assert_eq!(m.exponents.len(), 1);
            let (l, e) = m.exponents.iter().next().unwrap();
            assert_eq!(l, leaf);
            assert_eq!(BigInt::from(*e), *n);
        }
        assert_eq!(data.action.rows, uac.action.rows);
    }

    #[test]
    fn d4_assembly() {
        let data = assemble_splice_quotient(&d4()).unwrap();
        assert_eq!(data.group.invariant_factors, vec![big(2), big(2)]);
        assert_eq!(data.invariant_exponent, big(4));
        assert_eq!(data.system.equation_count(), 1);
        // z_w^4 is invariant for each leaf
        for leaf in &data.action.leaves {
            let mut m = BTreeMap::new();
            m.insert(leaf.clone(), 4u64);
            let chi = character_of_monomial(&data.action, &m).unwrap();
            assert!(chi.is_trivial());
        }
    }

    #[test]
    fn classify_running_example() {
        let r = classify_graph(&two_node_zhs());
        assert!(r.splice_quotient_eligible);
        assert!(r.stages.iter().any(|s| s.name == "homology" && s.verdict == "ZHS"));
        assert!(r.stages.iter().all(|s| s.verdict != "fail"));
    }

    #[test]
    fn classify_question_a() {
        let r = classify_splice(&question_a_diagram());
        assert!(!r.splice_quotient_eligible);
        let sg = r.stages.iter().find(|s| s.name == "semigroup").unwrap();
        assert_eq!(sg.verdict, "fail");
        assert!(sg.detail.contains("1 not in N(2,3)"), "{}", sg.detail);
    }

    #[test]
    fn classify_string_graph() {
        let r = classify_graph(&a_string(1));
        assert!(!r.splice_quotient_eligible);
        let s = r.stages.iter().find(|s| s.name == "splice_diagram").unwrap();
        assert_eq!(s.verdict, "not_applicable");
        assert!(s.detail.contains("string graph"));
    }

    #[test]
    fn classify_invalid_graph_stops_early() {
        let mut g = PlumbingGraph::new();
        g.add_vertex("a", big(1)).unwrap();
        let r = classify_graph(&g);
        assert!(!r.splice_quotient_eligible);
        assert_eq!(r.stages.len(), 1);
    }
}
