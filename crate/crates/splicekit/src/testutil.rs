//! Shared graph builders for unit tests.

use num_bigint::BigInt;

use crate::graph::{build_star_graph, PlumbingGraph};
use crate::splice::SpliceDiagram;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// The two-node homology-sphere graph: a -1 node with -2, -3 arms, a -17
/// middle vertex, and a -1 node with a -2 arm and a -3,-2 arm. Its splice
/// diagram has node weight tuples (2,3,7) and (2,5,11).
pub fn two_node_zhs() -> PlumbingGraph {
    let mut g = PlumbingGraph::new();
    for (name, w) in [
        ("X", -2),
        ("Y", -3),
        ("n1", -1),
        ("m", -17),
        ("n2", -1),
        ("Z", -2),
        ("w1", -3),
        ("W", -2),
    ] {
        g.add_vertex(name, big(w)).unwrap();
    }
    for (a, b) in [
        ("n1", "X"),
        ("n1", "Y"),
        ("n1", "m"),
        ("m", "n2"),
        ("n2", "Z"),
        ("n2", "w1"),
        ("w1", "W"),
    ] {
        g.add_edge(a, b).unwrap();
    }
    g
}

/// D4: a -2 center with three -2 leaves.
pub fn d4() -> PlumbingGraph {
    build_star_graph(&big(2), &[(big(2), big(1)), (big(2), big(1)), (big(2), big(1))]).unwrap()
}

/// The A_n string of -2 curves.
pub fn a_string(n: usize) -> PlumbingGraph {
    let mut g = PlumbingGraph::new();
    for i in 1..=n {
        g.add_vertex(&format!("a{i}"), big(-2)).unwrap();
        if i > 1 {
            g.add_edge(&format!("a{}", i - 1), &format!("a{i}")).unwrap();
        }
    }
    g
}

/// Star for the Brieskorn sphere Sigma(p,q,r) with -1 central curve and
/// single-vertex arms -p, -q, -r. Negative definite when 1/p+1/q+1/r < 1,
/// e.g. (2,3,7).
pub fn brieskorn_star(p: i64, q: i64, r: i64) -> PlumbingGraph {
    build_star_graph(&big(1), &[(big(p), big(1)), (big(q), big(1)), (big(r), big(1))]).unwrap()
}

/// The E8 graph: star for Sigma(2,3,5), center -2 with arms 2/1, 3/2, 5/4.
pub fn sigma235() -> PlumbingGraph {
    build_star_graph(&big(2), &[(big(2), big(1)), (big(3), big(2)), (big(5), big(4))]).unwrap()
}

/// Star for D_n (n >= 4): all -2, center of valency 3 with arms of
/// lengths 1, 1, n-3.
pub fn d_star(n: usize) -> PlumbingGraph {
    assert!(n >= 4);
    let mut g = PlumbingGraph::new();
    g.add_vertex("c", big(-2)).unwrap();
    for name in ["p", "q"] {
        g.add_vertex(name, big(-2)).unwrap();
        g.add_edge(name, "c").unwrap();
    }
    for i in 1..=n - 3 {
        g.add_vertex(&format!("t{i}"), big(-2)).unwrap();
        let prev = if i == 1 { "c".to_string() } else { format!("t{}", i - 1) };
        g.add_edge(&prev, &format!("t{i}")).unwrap();
    }
    g
}

/// Star for E6, E7, or E8: all -2, center of valency 3 with arm lengths
/// (1,2,2), (1,2,3), (1,2,4).
pub fn e_star(n: usize) -> PlumbingGraph {
    let arms: [usize; 3] = match n {
        6 => [1, 2, 2],
        7 => [1, 2, 3],
        8 => [1, 2, 4],
        _ => panic!("E_n only defined for n = 6, 7, 8"),
    };
    let mut g = PlumbingGraph::new();
    g.add_vertex("c", big(-2)).unwrap();
    for (a, &len) in arms.iter().enumerate() {
        let mut prev = "c".to_string();
        for j in 1..=len {
            let name = format!("a{}_{}", a + 1, j);
            g.add_vertex(&name, big(-2)).unwrap();
            g.add_edge(&prev, &name).unwrap();
            prev = name;
        }
    }
    g
}

/// The two-node splice diagram (2,3,1 | 2,3,37) where the semigroup
/// condition fails: edge weights 1 and 37 on the node-node edge.
pub fn question_a_diagram() -> SpliceDiagram {
    SpliceDiagram::build(
        ["v1", "v2", "A", "B", "C", "D"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        vec![
            ("v1".into(), "A".into(), Some(big(2)), None),
            ("v1".into(), "B".into(), Some(big(3)), None),
            ("v2".into(), "C".into(), Some(big(2)), None),
            ("v2".into(), "D".into(), Some(big(3)), None),
            ("v1".into(), "v2".into(), Some(big(1)), Some(big(37))),
        ],
    )
    .unwrap()
}
