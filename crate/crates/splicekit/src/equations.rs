//! Splice-type equation generation: admissible monomials from semigroup
//! witnesses, coefficient matrices with all maximal minors nonzero, the
//! per-node equation systems, and the Brieskorn form of the universal
//! abelian cover of a star-shaped graph.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{cf_contract, validate_resolution_graph, PlumbingGraph};
use crate::lattice::{bigint_json, discriminant_group, leaf_representation, DiscriminantGroup, LeafCharacterTable};
use crate::matrix::IntMatrix;
use crate::splice::{
    check_semigroup_conditions, validate_splice_diagram, weight_system, SpliceDiagram, WeightSystem,
};

/// A term in a splice-type equation: an integer coefficient times a
/// product of leaf variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub exponents: BTreeMap<String, u64>,
}

impl Monomial {
    pub fn render(&self, with_coeff: bool) -> String {
        let mut parts = Vec::new();
        if with_coeff && !self.coeff.is_one() {
            parts.push(self.coeff.to_string());
        }
        for (name, &e) in &self.exponents {
            if e == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        parts.join("*")
    }
}

/// Equations of one node: `t_v - 2` linear combinations of one admissible
/// monomial per incident edge.
#[derive(Debug, Clone)]
pub struct NodeEquations {
    pub node: String,
    /// The (t_v - 2) x t_v coefficient matrix.
    pub matrix: IntMatrix,
    pub equations: Vec<Vec<Monomial>>,
}

#[derive(Debug, Clone)]
pub struct EquationSystem {
    pub variables: Vec<String>,
    pub nodes: Vec<NodeEquations>,
    /// Set for diagrams whose node weights are not pairwise coprime: the
    /// link statement is only conjectural there.
    pub note: Option<String>,
}

impl EquationSystem {
    pub fn equation_count(&self) -> usize {
        self.nodes.iter().map(|n| n.equations.len()).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .map(|n| {
                let matrix: Vec<Vec<serde_json::Value>> = (0..n.matrix.nrows())
                    .map(|i| n.matrix.row(i).iter().map(bigint_json).collect())
                    .collect();
                let equations: Vec<Vec<serde_json::Value>> = n
                    .equations
                    .iter()
                    .map(|eq| {
                        eq.iter()
                            .map(|m| {
                                let exp: BTreeMap<&String, u64> =
                                    m.exponents.iter().map(|(k, &v)| (k, v)).collect();
                                serde_json::json!({
                                    "coeff": bigint_json(&m.coeff),
                                    "exp": exp,
                                })
                            })
                            .collect()
                    })
                    .collect();
                serde_json::json!({
                    "node": n.node,
                    "matrix": matrix,
                    "equations": equations,
                })
            })
            .collect();
        let mut v = serde_json::json!({
            "variables": self.variables,
            "nodes": nodes,
        });
        if let Some(note) = &self.note {
            v["note"] = serde_json::Value::String(note.clone());
        }
        v
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(note) = &self.note {
            out.push_str(&format!("# {note}\n"));
        }
        for n in &self.nodes {
            for eq in &n.equations {
                let terms: Vec<String> = eq.iter().map(|m| m.render(true)).collect();
                out.push_str(&format!("{} = 0\n", terms.join(" + ")));
            }
        }
        out
    }
}

/// Exponent maps alpha supported on the outer leaves on the `e`-side of
/// node `v` with sum alpha_w * l'_vw = d_ve, in lexicographic order of
/// the coefficient vector under the leaf order, up to `limit` entries.
pub fn admissible_monomials(
    d: &SpliceDiagram,
    ws: &WeightSystem,
    v: usize,
    e: usize,
    limit: usize,
) -> Result<Vec<BTreeMap<String, u64>>> {
    let vname = d.name(v).to_string();
    let target = ws.edge_weight[&(vname.clone(), e)].clone();
    let leaves: Vec<(String, BigInt)> = d
        .outer_leaves(v, e)
        .into_iter()
        .map(|w| {
            let wname = d.name(w).to_string();
            let g = ws.l_prime[&(vname.clone(), wname.clone())].clone();
            (wname, g)
        })
        .collect();
    let mut out = Vec::new();
    let mut partial: Vec<(String, u64)> = Vec::new();
    enumerate(&target, &leaves, &mut partial, &mut out, limit);
    if out.is_empty() {
        return Err(Error::domain(format!(
            "semigroup condition fails at node `{vname}`: {target} is not generated by {:?}",
            leaves.iter().map(|(n, g)| format!("{n}:{g}")).collect::<Vec<_>>()
        )));
    }
    Ok(out)
}

fn enumerate(
    rem: &BigInt,
    leaves: &[(String, BigInt)],
    partial: &mut Vec<(String, u64)>,
    out: &mut Vec<BTreeMap<String, u64>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    match leaves.split_first() {
        None => {
            if rem.is_zero() {
                out.push(
                    partial
                        .iter()
                        .filter(|(_, a)| *a > 0)
                        .cloned()
                        .collect(),
                );
            }
        }
        Some(((name, g), rest)) => {
            let mut alpha = BigInt::zero();
            while &alpha * g <= *rem {
                let a64 = alpha.to_u64().expect("exponent fits in u64");
                partial.push((name.clone(), a64));
                let next = rem - &alpha * g;
                enumerate(&next, rest, partial, out, limit);
                partial.pop();
                if out.len() >= limit {
                    return;
                }
                alpha += 1;
            }
        }
    }
}

/// Deterministic (rows x cols) integer matrix all of whose maximal minors
/// are nonzero: row i holds the (i-1)-th powers of distinct positive
/// constants. Verified by exact minor computation; constants shift and
/// the check reruns if a zero minor ever appears.
pub fn hamm_matrix(rows: usize, cols: usize) -> Result<IntMatrix> {
    if rows == 0 || cols < rows {
        return Err(Error::domain(format!(
            "coefficient matrix shape {rows}x{cols} out of range"
        )));
    }
    for attempt in 0..16u32 {
        let shift = attempt as i64 * cols as i64;
        let m = IntMatrix::from_rows(
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|e| BigInt::from(e as i64 + 1 + shift).pow(i as u32))
                        .collect()
                })
                .collect(),
        );
        if all_maximal_minors_nonzero(&m) {
            return Ok(m);
        }
    }
    Err(Error::Internal("coefficient matrix retry budget exhausted".into()))
}

pub fn all_maximal_minors_nonzero(m: &IntMatrix) -> bool {
    let r = m.nrows();
    let rows: Vec<usize> = (0..r).collect();
    column_subsets(m.ncols(), r)
        .into_iter()
        .all(|cols| !m.submatrix(&rows, &cols).det().is_zero())
}

fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Splice-type equations for a diagram satisfying the semigroup
/// conditions: per node, the lexicographically minimal admissible
/// monomial on each incident edge, combined by the rows of a maximal-
/// minor-nonzero coefficient matrix.
pub fn generate_splice_equations(d: &SpliceDiagram) -> Result<EquationSystem> {
    let cert = check_semigroup_conditions(d)?;
    if !cert.pass {
        let bad = cert.entries.iter().find(|e| !e.pass).unwrap();
        return Err(Error::domain(format!(
            "semigroup condition fails at node `{}`, edge {}: {} not generated by {:?}",
            bad.node,
            bad.edge_desc,
            bad.target,
            bad.generators
                .iter()
                .map(|(n, g)| format!("{n}:{g}"))
                .collect::<Vec<_>>()
        )));
    }
    let ws = weight_system(d);
    let variables: Vec<String> = d.leaves().iter().map(|&w| d.name(w).to_string()).collect();

    let mut nodes = Vec::new();
    for &v in &d.nodes() {
        let vname = d.name(v).to_string();
        let edge_order = d.ordered_edges_at(v);
        let tv = edge_order.len();
        let matrix = hamm_matrix(tv - 2, tv)?;
        let chosen: Vec<BTreeMap<String, u64>> = edge_order
            .iter()
            .map(|&e| Ok(admissible_monomials(d, &ws, v, e, 1)?.remove(0)))
            .collect::<Result<_>>()?;
        let equations: Vec<Vec<Monomial>> = (0..tv - 2)
            .map(|i| {
                (0..tv)
                    .map(|e| Monomial {
                        coeff: matrix[(i, e)].clone(),
                        exponents: chosen[e].clone(),
                    })
                    .collect()
            })
            .collect();
        verify_node_homogeneity(&ws, &vname, &equations)?;
        nodes.push(NodeEquations {
            node: vname,
            matrix,
            equations,
        });
    }

    let system = EquationSystem {
        variables,
        nodes,
        note: equation_note(d),
    };
    let expected = d.leaves().len() as i64 - 2;
    if system.equation_count() as i64 != expected {
        return Err(Error::Internal(format!(
            "equation count {} != t - 2 = {expected}",
            system.equation_count()
        )));
    }
    Ok(system)
}

fn equation_note(d: &SpliceDiagram) -> Option<String> {
    let report = validate_splice_diagram(d);
    if report.zhs_link {
        None
    } else {
        Some(
            "node weights not pairwise coprime: equations describe the conjectural universal abelian cover"
                .to_string(),
        )
    }
}

/// Every monomial of every node-v equation must have v-weight d_v.
fn verify_node_homogeneity(
    ws: &WeightSystem,
    vname: &str,
    equations: &[Vec<Monomial>],
) -> Result<()> {
    let dv = &ws.node_weight[vname];
    for eq in equations {
        for m in eq {
            let mut total = BigInt::zero();
            for (leaf, &e) in &m.exponents {
                total += BigInt::from(e) * &ws.l[&(vname.to_string(), leaf.clone())];
            }
            if &total != dv {
                return Err(Error::Internal(format!(
                    "monomial {} at node `{vname}` has weight {total}, expected {dv}",
                    m.render(false)
                )));
            }
        }
    }
    Ok(())
}

/// Brieskorn description of the universal abelian cover of a star-shaped
/// graph: exponents n_1..n_t from the arm continued fractions, a
/// maximal-minor-nonzero coefficient matrix, and the diagonal group
/// action on the t coordinates.
#[derive(Debug, Clone)]
pub struct BrieskornSystem {
    /// (leaf variable, exponent n_i), in the fixed leaf order.
    pub exponents: Vec<(String, BigInt)>,
    pub matrix: IntMatrix,
    pub group: DiscriminantGroup,
    /// Per-variable characters: column w gives the action on z_w.
    pub action: LeafCharacterTable,
}

impl BrieskornSystem {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.matrix.nrows() {
            let terms: Vec<String> = self
                .exponents
                .iter()
                .enumerate()
                .map(|(j, (name, n))| {
                    let c = &self.matrix[(i, j)];
                    let var = if n.is_one() {
                        name.clone()
                    } else {
                        format!("{name}^{n}")
                    };
                    if c.is_one() {
                        var
                    } else {
                        format!("{c}*{var}")
                    }
                })
                .collect();
            out.push_str(&format!("{} = 0\n", terms.join(" + ")));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let matrix: Vec<Vec<serde_json::Value>> = (0..self.matrix.nrows())
            .map(|i| self.matrix.row(i).iter().map(bigint_json).collect())
            .collect();
        let exps: Vec<serde_json::Value> = self
            .exponents
            .iter()
            .map(|(n, e)| serde_json::json!({"variable": n, "exponent": bigint_json(e)}))
            .collect();
        serde_json::json!({
            "exponents": exps,
            "matrix": matrix,
            "group": crate::lattice::group_json(&self.group, &self.action),
        })
    }
}

pub fn brieskorn_uac(g: &PlumbingGraph) -> Result<BrieskornSystem> {
    let report = validate_resolution_graph(g);
    if !report.passed() {
        return Err(Error::domain("graph fails resolution validation"));
    }
    let nodes = g.nodes();
    if nodes.len() != 1 {
        return Err(Error::domain(format!(
            "graph is not star-shaped: {} vertices of valency >= 3",
            nodes.len()
        )));
    }
    let center = nodes[0];

    // walk each arm from the center and contract its continued fraction
    let mut arms: Vec<(String, BigInt)> = Vec::new();
    for u0 in g.neighbors(center) {
        let mut terms = Vec::new();
        let mut prev = center;
        let mut cur = u0;
        loop {
            terms.push(-g.vertices()[cur].selfint.clone());
            let next = g.neighbors(cur).into_iter().find(|&x| x != prev);
            match next {
                Some(n) => {
                    prev = cur;
                    cur = n;
                }
                None => break,
            }
        }
        let (n, _q) = cf_contract(&terms)?;
        arms.push((g.name(cur).to_string(), n));
    }
    arms.sort_by(|a, b| a.0.cmp(&b.0));
    let t = arms.len();
    if t < 3 {
        return Err(Error::domain(format!("star-shaped graph needs t >= 3 arms, got {t}")));
    }

    let matrix = hamm_matrix(t - 2, t)?;
    let group = discriminant_group(g)?;
    let action = leaf_representation(g)?;
    if action.leaves != arms.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>() {
        return Err(Error::Internal("arm leaf order disagrees with leaf table".into()));
    }
    Ok(BrieskornSystem {
        exponents: arms,
        matrix,
        group,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splice::{one_node_diagram, resolution_to_splice};
    use crate::testutil::{brieskorn_star, d4, sigma235, two_node_zhs};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn admissible_one_node() {
        let d = one_node_diagram("v", &[("x", 2), ("y", 3), ("z", 7)]).unwrap();
        let ws = weight_system(&d);
        let v = d.vertex_id("v").unwrap();
        for e in d.edge_ids_at(v) {
            let ms = admissible_monomials(&d, &ws, v, e, 100).unwrap();
            assert_eq!(ms.len(), 1);
            let m = &ms[0];
            assert_eq!(m.len(), 1);
            let (leaf, &exp) = m.iter().next().unwrap();
            let other = d.edges()[e].other(v);
            assert_eq!(leaf, d.name(other));
            assert_eq!(
                BigInt::from(exp),
                *d.edges()[e].weight_at(v).unwrap()
            );
        }
    }

    #[test]
    fn admissible_two_node() {
        let d = resolution_to_splice(&two_node_zhs()).unwrap();
        let ws = weight_system(&d);
        let n1 = d.vertex_id("n1").unwrap();
        let n2 = d.vertex_id("n2").unwrap();
        let node_edge = d
            .edges()
            .iter()
            .position(|e| d.is_node(e.a) && d.is_node(e.b))
            .unwrap();
        // left node, d_ve = 7 over l' = {W:2, Z:5}: only 2+5
        let ms = admissible_monomials(&d, &ws, n1, node_edge, 100).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0][&"W".to_string()], 1);
        assert_eq!(ms[0][&"Z".to_string()], 1);
        // right node, d_ve = 11 over l' = {X:3, Y:2}: {X:1,Y:4}, {X:3,Y:1}
        let ms = admissible_monomials(&d, &ws, n2, node_edge, 100).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0][&"X".to_string()], 1);
        assert_eq!(ms[0][&"Y".to_string()], 4);
        assert_eq!(ms[1][&"X".to_string()], 3);
        assert_eq!(ms[1][&"Y".to_string()], 1);
    }

    #[test]
    fn admissible_failure_is_error() {
        let q = crate::testutil::question_a_diagram();
        let ws = weight_system(&q);
        let v1 = q.vertex_id("v1").unwrap();
        let node_edge = q
            .edges()
            .iter()
            .position(|e| q.is_node(e.a) && q.is_node(e.b))
            .unwrap();
        assert!(admissible_monomials(&q, &ws, v1, node_edge, 100).is_err());
    }

    #[test]
    fn hamm_matrices() {
        let m = hamm_matrix(1, 3).unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 1, 1]]));
        let m = hamm_matrix(1, 4).unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 1, 1, 1]]));
        let m = hamm_matrix(2, 4).unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 1, 1, 1], &[1, 2, 3, 4]]));
        // independent check by exhaustive cofactor-expansion minors
        for (r, c) in [(1usize, 3usize), (2, 4), (3, 5), (4, 7)] {
            let m = hamm_matrix(r, c).unwrap();
            let rows: Vec<usize> = (0..r).collect();
            for cols in column_subsets(c, r) {
                assert!(!m.submatrix(&rows, &cols).det_cofactor().is_zero());
            }
        }
        assert!(hamm_matrix(0, 3).is_err());
        assert!(hamm_matrix(4, 3).is_err());
    }

    #[test]
    fn one_node_brieskorn_shape() {
        let d = one_node_diagram("v", &[("x", 2), ("y", 3), ("z", 7)]).unwrap();
        let sys = generate_splice_equations(&d).unwrap();
        assert_eq!(sys.variables, vec!["x", "y", "z"]);
        assert_eq!(sys.equation_count(), 1);
        assert_eq!(sys.render(), "x^2 + y^3 + z^7 = 0\n");
        assert!(sys.note.is_none());
    }

    #[test]
    fn running_example_equations() {
        let d = resolution_to_splice(&two_node_zhs()).unwrap();
        let sys = generate_splice_equations(&d).unwrap();
        assert_eq!(sys.variables, vec!["W", "X", "Y", "Z"]);
        assert_eq!(sys.equation_count(), 2);
        assert_eq!(sys.render(), "X^2 + Y^3 + W*Z = 0\nZ^2 + W^5 + X*Y^4 = 0\n");
    }

    #[test]
    fn qhs_note_attached() {
        let d = resolution_to_splice(&d4()).unwrap();
        let sys = generate_splice_equations(&d).unwrap();
        assert!(sys.note.is_some());
        let names: Vec<&str> = sys.variables.iter().map(|s| s.as_str()).collect();
        let expect: Vec<String> = names.iter().map(|n| format!("{n}^2")).collect();
        assert_eq!(sys.render().lines().last().unwrap(), format!("{} = 0", expect.join(" + ")));
    }

    #[test]
    fn json_deterministic() {
        let d = resolution_to_splice(&two_node_zhs()).unwrap();
        let a = generate_splice_equations(&d).unwrap().to_json().to_string();
        let b = generate_splice_equations(&d).unwrap().to_json().to_string();
        assert_eq!(a, b);
        assert!(a.contains("\"variables\":[\"W\",\"X\",\"Y\",\"Z\"]"));
    }

    #[test]
    fn brieskorn_uac_zhs() {
        let sys = brieskorn_uac(&sigma235()).unwrap();
        let exps: Vec<BigInt> = sys.exponents.iter().map(|(_, e)| e.clone()).collect();
        let mut sorted = exps.clone();
        sorted.sort();
        assert_eq!(sorted, vec![big(2), big(3), big(5)]);
        assert!(sys.group.is_trivial());

        let sys = brieskorn_uac(&brieskorn_star(2, 3, 7)).unwrap();
        let mut exps: Vec<BigInt> = sys.exponents.iter().map(|(_, e)| e.clone()).collect();
        exps.sort();
        assert_eq!(exps, vec![big(2), big(3), big(7)]);
    }

    #[test]
    fn brieskorn_uac_d4() {
        let sys = brieskorn_uac(&d4()).unwrap();
        let exps: Vec<BigInt> = sys.exponents.iter().map(|(_, e)| e.clone()).collect();
        assert_eq!(exps, vec![big(2), big(2), big(2)]);
        assert_eq!(sys.group.invariant_factors, vec![big(2), big(2)]);
        assert_eq!(sys.render(), "a1_1^2 + a2_1^2 + a3_1^2 = 0\n");
    }

    #[test]
    fn brieskorn_uac_rejects_non_star() {
        assert!(brieskorn_uac(&two_node_zhs()).is_err());
    }
}
