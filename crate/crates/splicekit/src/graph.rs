//! Resolution (plumbing) graphs: the decorated tree of exceptional curves,
//! its intersection matrix, validity checks, and the continued-fraction
//! encoding of arm strings.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A plumbing graph: a tree of rational curves with self-intersection
/// weights. Vertex order is the insertion (file) order and fixes the
/// row/column order of every derived matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub selfint: BigInt,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        PlumbingGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str, selfint: BigInt) -> Result<usize> {
        if self.index.contains_key(name) {
            return Err(Error::domain(format!("duplicate vertex name `{name}`")));
        }
        let id = self.vertices.len();
        self.index.insert(name.to_string(), id);
        self.vertices.push(Vertex {
            name: name.to_string(),
            selfint,
        });
        Ok(id)
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let ia = self.vertex_id(a)?;
        let ib = self.vertex_id(b)?;
        if ia == ib {
            return Err(Error::domain(format!("self-loop at `{a}`")));
        }
        let key = (ia.min(ib), ia.max(ib));
        if self.edges.contains(&key) {
            return Err(Error::domain(format!("duplicate edge {a} {b}")));
        }
        self.edges.push(key);
        Ok(())
    }

    pub fn vertex_id(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::domain(format!("unknown vertex `{name}`")))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.vertices[id].name
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == id {
                out.push(b);
            } else if b == id {
                out.push(a);
            }
        }
        out
    }

    pub fn valency(&self, id: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == id || b == id)
            .count()
    }

    pub fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        // connectivity
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Leaves (valency-1 vertices) in lexicographic name order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.valency(v) == 1)
            .collect();
        ids.sort_by(|&a, &b| self.name(a).cmp(self.name(b)));
        ids
    }

    /// Nodes: vertices of valency at least 3.
    pub fn nodes(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.valency(v) >= 3)
            .collect()
    }

    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.vertices.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            m[(i, i)] = v.selfint.clone();
        }
        for &(a, b) in &self.edges {
            m[(a, b)] = BigInt::one();
            m[(b, a)] = BigInt::one();
        }
        m
    }

    /// Serialize back to the line-oriented file format.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("v {} {}\n", v.name, v.selfint));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("e {} {}\n", self.name(a), self.name(b)));
        }
        out
    }
}

impl Default for PlumbingGraph {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Report from `validate_resolution_graph`: failures are entries, not errors.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
    pub det: String,
    pub is_zhs: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn det_bigint(&self) -> BigInt {
        self.det.parse().expect("stored determinant is decimal")
    }
}

/// Checks that `g` is a valid resolution graph in the rational-homology-
/// sphere setting: a tree with negative-definite intersection matrix.
pub fn validate_resolution_graph(g: &PlumbingGraph) -> ValidationReport {
    let mut checks = Vec::new();
    let tree = g.is_tree();
    checks.push(ValidationCheck {
        name: "tree".into(),
        pass: tree,
        detail: if tree {
            format!("{} vertices, {} edges, connected", g.vertex_count(), g.edges().len())
        } else {
            "graph is not a connected tree".into()
        },
    });

    let a = g.intersection_matrix();
    let det = if g.vertex_count() > 0 { a.det() } else { BigInt::zero() };

    // negative definite iff all leading principal minors of -A positive
    let minors = a.negate().leading_principal_minors();
    let bad = minors.iter().position(|m| !m.is_positive());
    checks.push(ValidationCheck {
        name: "negative_definite".into(),
        pass: bad.is_none(),
        detail: match bad {
            None => "all leading principal minors of -A positive".into(),
            Some(k) => format!("leading principal minor {} of -A is {}", k + 1, minors[k]),
        },
    });

    checks.push(ValidationCheck {
        name: "nonzero_determinant".into(),
        pass: !det.is_zero(),
        detail: format!("det(A) = {det}"),
    });

    let is_zhs = det.abs().is_one();
    ValidationReport {
        checks,
        det: det.to_string(),
        is_zhs,
    }
}

/// Negative continued fraction n/q = b_1 - 1/(b_2 - 1/(... - 1/b_s))
/// with every b_i >= 2; this expansion is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub n: BigInt,
    pub q: BigInt,
    pub terms: Vec<BigInt>,
}

pub fn cf_expand(n: &BigInt, q: &BigInt) -> Result<ContinuedFraction> {
    if !(q.is_positive() && q < n) {
        return Err(Error::domain(format!("need 0 < q < n, got n={n}, q={q}")));
    }
    if !n.gcd(q).is_one() {
        return Err(Error::domain(format!("gcd({n},{q}) != 1")));
    }
    let mut terms = Vec::new();
    let mut a = n.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        // b_i = ceil(a/b)
        let bi = (&a + &b - BigInt::one()) / &b;
        let r = &bi * &b - &a;
        terms.push(bi);
        a = b;
        b = r;
    }
    Ok(ContinuedFraction {
        n: n.clone(),
        q: q.clone(),
        terms,
    })
}

pub fn cf_contract(terms: &[BigInt]) -> Result<(BigInt, BigInt)> {
    if terms.is_empty() {
        return Err(Error::domain("empty continued fraction"));
    }
    if let Some(bad) = terms.iter().find(|t| *t < &BigInt::from(2)) {
        return Err(Error::domain(format!("continued fraction term {bad} < 2")));
    }
    // evaluate right to left: value = b_i - 1/value
    let mut n = terms.last().unwrap().clone();
    let mut q = BigInt::one();
    for b in terms.iter().rev().skip(1) {
        let new_n = b * &n - &q;
        q = n;
        n = new_n;
    }
    Ok((n, q))
}

/// Star-shaped graph: central vertex `-d` with `t >= 3` arms, each the
/// continued-fraction string of n_i/q_i attached at its b_1 end.
/// Negative definiteness is not checked here.
pub fn build_star_graph(d: &BigInt, arms: &[(BigInt, BigInt)]) -> Result<PlumbingGraph> {
    if arms.len() < 3 {
        return Err(Error::domain(format!(
            "star-shaped graph needs at least 3 arms, got {}",
            arms.len()
        )));
    }
    if !d.is_positive() {
        return Err(Error::domain(format!("central weight d must be >= 1, got {d}")));
    }
    let mut g = PlumbingGraph::new();
    g.add_vertex("c", -d.clone())?;
    for (i, (n, q)) in arms.iter().enumerate() {
        let cf = cf_expand(n, q)?;
        let mut prev = "c".to_string();
        for (j, b) in cf.terms.iter().enumerate() {
            let name = format!("a{}_{}", i + 1, j + 1);
            g.add_vertex(&name, -b.clone())?;
            g.add_edge(&prev, &name)?;
            prev = name;
        }
    }
    Ok(g)
}

/// Quotient-cusp graph: central string -e_1,...,-e_k (k >= 2, e_i >= 2,
/// some e_j > 2) with a pair of -2 leaves at each end.
pub fn build_quotient_cusp(es: &[BigInt]) -> Result<PlumbingGraph> {
    let k = es.len();
    if k < 2 {
        return Err(Error::domain(format!("quotient-cusp needs k >= 2, got {k}")));
    }
    let two = BigInt::from(2);
    if let Some(bad) = es.iter().find(|e| *e < &two) {
        return Err(Error::domain(format!("central weight {bad} < 2")));
    }
    if es.iter().all(|e| *e == two) {
        return Err(Error::domain("quotient-cusp needs some e_j > 2"));
    }
    let mut g = PlumbingGraph::new();
    for (i, e) in es.iter().enumerate() {
        g.add_vertex(&format!("c{}", i + 1), -e.clone())?;
        if i > 0 {
            g.add_edge(&format!("c{i}"), &format!("c{}", i + 1))?;
        }
    }
    for name in ["p1", "p2"] {
        g.add_vertex(name, -two.clone())?;
        g.add_edge(name, "c1")?;
    }
    for name in ["q1", "q2"] {
        g.add_vertex(name, -two.clone())?;
        g.add_edge(name, &format!("c{k}"))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    use crate::testutil::two_node_zhs;

    #[test]
    fn single_vertex_validation() {
        let mut g = PlumbingGraph::new();
        g.add_vertex("a", big(-2)).unwrap();
        let r = validate_resolution_graph(&g);
        assert!(r.passed());
        assert_eq!(r.det_bigint(), big(-2));
        assert!(!r.is_zhs);

        let mut g = PlumbingGraph::new();
        g.add_vertex("a", big(1)).unwrap();
        let r = validate_resolution_graph(&g);
        assert!(!r.passed());
        assert!(!r.checks.iter().find(|c| c.name == "negative_definite").unwrap().pass);
    }

    #[test]
    fn two_node_graph_is_zhs() {
        let g = two_node_zhs();
        let r = validate_resolution_graph(&g);
        assert!(r.passed());
        assert!(r.is_zhs);
        assert_eq!(r.det_bigint().abs(), big(1));
    }

    #[test]
    fn intersection_matrix_shapes() {
        let mut g = PlumbingGraph::new();
        g.add_vertex("a", big(-2)).unwrap();
        g.add_vertex("b", big(-3)).unwrap();
        g.add_edge("a", "b").unwrap();
        let m = g.intersection_matrix();
        assert_eq!(m, IntMatrix::from_i64(&[&[-2, 1], &[1, -3]]));

        let mut g = PlumbingGraph::new();
        for n in ["a", "b", "c"] {
            g.add_vertex(n, big(-2)).unwrap();
        }
        g.add_edge("a", "b").unwrap();
        g.add_edge("b", "c").unwrap();
        assert_eq!(g.intersection_matrix().det(), big(-4));
    }

    #[test]
    fn cf_expand_examples() {
        assert_eq!(cf_expand(&big(2), &big(1)).unwrap().terms, vec![big(2)]);
        assert_eq!(cf_expand(&big(5), &big(2)).unwrap().terms, vec![big(3), big(2)]);
        assert_eq!(cf_expand(&big(11), &big(4)).unwrap().terms, vec![big(3), big(4)]);
        assert!(cf_expand(&big(4), &big(2)).is_err());
        assert!(cf_expand(&big(3), &big(3)).is_err());
    }

    #[test]
    fn cf_contract_examples() {
        assert_eq!(cf_contract(&[big(2)]).unwrap(), (big(2), big(1)));
        assert_eq!(cf_contract(&[big(3), big(2)]).unwrap(), (big(5), big(2)));
        assert_eq!(cf_contract(&[big(2), big(2), big(2)]).unwrap(), (big(4), big(3)));
        assert!(cf_contract(&[big(1)]).is_err());
        assert!(cf_contract(&[]).is_err());
    }

    #[test]
    fn cf_roundtrip_exhaustive() {
        for n in 2i64..=200 {
            for q in 1..n {
                if big(n).gcd(&big(q)).is_one() {
                    let cf = cf_expand(&big(n), &big(q)).unwrap();
                    assert!(cf.terms.iter().all(|t| t >= &big(2)));
                    assert_eq!(cf_contract(&cf.terms).unwrap(), (big(n), big(q)));
                }
            }
        }
    }

    #[test]
    fn star_graphs() {
        // E8 = star for Sigma(2,3,5): center -2, arms 2/1, 3/2, 5/4
        let g = build_star_graph(&big(2), &[(big(2), big(1)), (big(3), big(2)), (big(5), big(4))])
            .unwrap();
        let r = validate_resolution_graph(&g);
        assert!(r.passed());
        assert!(r.is_zhs);
        assert_eq!(g.vertex_count(), 8);

        let g = build_star_graph(&big(1), &[(big(2), big(1)), (big(3), big(1)), (big(7), big(1))])
            .unwrap();
        let r = validate_resolution_graph(&g);
        assert!(r.passed());
        assert!(r.is_zhs);

        // D4
        let g = build_star_graph(&big(2), &[(big(2), big(1)), (big(2), big(1)), (big(2), big(1))])
            .unwrap();
        assert_eq!(validate_resolution_graph(&g).det_bigint().abs(), big(4));
        assert_eq!(g.leaves().len(), 3);
        assert_eq!(g.nodes(), vec![0]);

        assert!(build_star_graph(&big(1), &[(big(2), big(1)), (big(3), big(1))]).is_err());
    }
}
