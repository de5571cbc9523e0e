//! The lattice spanned by the exceptional curves, its dual, the
//! discriminant group with its Q/Z-valued pairing, and the faithful
//! diagonal representation on leaf coordinates.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{validate_resolution_graph, PlumbingGraph};
use crate::matrix::{smith_normal_form, IntMatrix, RatMatrix};

/// Pairings e_i . e_j of the dual basis: the exact inverse of the
/// intersection matrix.
#[derive(Debug, Clone)]
pub struct DualPairingTable {
    pub names: Vec<String>,
    pub entries: RatMatrix,
}

pub fn dual_pairing(g: &PlumbingGraph) -> Result<DualPairingTable> {
    let a = g.intersection_matrix();
    let inv = a
        .to_rational()
        .inverse()
        .ok_or_else(|| Error::domain("intersection matrix is singular"))?;
    Ok(DualPairingTable {
        names: g.vertices().iter().map(|v| v.name.clone()).collect(),
        entries: inv,
    })
}

/// The discriminant group: cokernel of the intersection matrix, as a
/// product of cyclic groups Z/d_1 x ... x Z/d_m with d_1 | d_2 | ...
/// (trivial factors dropped). Generators are recorded as integer vectors
/// in the dual-basis coordinates.
#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    pub order: BigInt,
    pub invariant_factors: Vec<BigInt>,
    /// Generator k, as an integer vector in e-coordinates; its class has
    /// order invariant_factors[k].
    pub generators: Vec<Vec<BigInt>>,
    /// Rows of the row transform matrix matching each nontrivial factor;
    /// reduction of x is (row_k . x) mod d_k.
    reduction_rows: Vec<Vec<BigInt>>,
}

impl DiscriminantGroup {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Canonical coordinates (c_1 mod d_1, ..., c_m mod d_m) of a dual
    /// lattice element given in e-coordinates.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.reduction_rows
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, d)| {
                let c: BigInt = row.iter().zip(x).map(|(r, xi)| r * xi).sum();
                c.mod_floor(d)
            })
            .collect()
    }
}

pub fn discriminant_group(g: &PlumbingGraph) -> Result<DiscriminantGroup> {
    let a = g.intersection_matrix();
    let det = a.det();
    if det.is_zero() {
        return Err(Error::domain("intersection matrix is singular"));
    }
    let snf = smith_normal_form(&a);
    let diag = snf.diagonal();
    let u_inv = snf
        .u
        .to_rational()
        .inverse()
        .and_then(|m| m.to_integer())
        .ok_or_else(|| Error::Internal("row transform not unimodular".into()))?;

    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    let mut reduction_rows = Vec::new();
    for (k, d) in diag.iter().enumerate() {
        if d > &BigInt::one() {
            invariant_factors.push(d.clone());
            generators.push((0..u_inv.nrows()).map(|i| u_inv[(i, k)].clone()).collect());
            reduction_rows.push(snf.u.row(k).to_vec());
        }
    }
    Ok(DiscriminantGroup {
        order: det.abs(),
        invariant_factors,
        generators,
        reduction_rows,
    })
}

/// An element of the dual group of D(Gamma), stored as one exact rational
/// in [0,1) per canonical generator. Equality is decidable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character(pub Vec<BigRational>);

impl Character {
    pub fn trivial(len: usize) -> Self {
        Character(vec![BigRational::zero(); len])
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|r| r.is_zero())
    }

    pub fn add(&self, other: &Character) -> Character {
        Character(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| frac_part(&(a + b)))
                .collect(),
        )
    }
}

impl std::fmt::Display for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(trivial)");
        }
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Representative of a rational modulo 1 in [0,1).
pub fn frac_part(r: &BigRational) -> BigRational {
    r - r.floor()
}

/// The pairing of each group generator with each leaf dual vector,
/// reduced to Q/Z. Columns are ordered by leaf name; the induced map
/// into (Q/Z)^t is verified injective at construction.
#[derive(Debug, Clone)]
pub struct LeafCharacterTable {
    pub leaves: Vec<String>,
    pub invariant_factors: Vec<BigInt>,
    /// rows[k][w] = (generator_k . e_w) mod 1, in [0,1).
    pub rows: Vec<Vec<BigRational>>,
}

pub fn leaf_representation(g: &PlumbingGraph) -> Result<LeafCharacterTable> {
    let report = validate_resolution_graph(g);
    if !report.passed() {
        return Err(Error::domain("graph fails resolution validation"));
    }
    let leaf_ids = g.leaves();
    if leaf_ids.is_empty() {
        return Err(Error::domain("graph has no leaves"));
    }
    let pairing = dual_pairing(g)?;
    let group = discriminant_group(g)?;

    let mut rows = Vec::new();
    for gen in &group.generators {
        let mut row = Vec::new();
        for &w in &leaf_ids {
            // gen . e_w = sum_i gen_i * (A^-1)_{i,w}
            let mut acc = BigRational::zero();
            for (i, c) in gen.iter().enumerate() {
                acc += BigRational::from_integer(c.clone()) * &pairing.entries[(i, w)];
            }
            row.push(frac_part(&acc));
        }
        rows.push(row);
    }
    let table = LeafCharacterTable {
        leaves: leaf_ids.iter().map(|&w| g.name(w).to_string()).collect(),
        invariant_factors: group.invariant_factors.clone(),
        rows,
    };
    if !injectivity_holds(&table) {
        return Err(Error::Internal(
            "leaf character map is not injective".into(),
        ));
    }
    Ok(table)
}

/// Kernel triviality of the map (x_1,...,x_m) -> sum_k x_k row_k in
/// (Q/Z)^t. Exhaustive enumeration up to group order 10^4; exact lattice
/// index computation beyond that.
fn injectivity_holds(table: &LeafCharacterTable) -> bool {
    let order: BigInt = table.invariant_factors.iter().product();
    if order <= BigInt::from(10_000) {
        let mut seen = HashSet::new();
        for elem in enumerate_elements(&table.invariant_factors) {
            let img: Vec<BigRational> = (0..table.leaves.len())
                .map(|w| {
                    let mut acc = BigRational::zero();
                    for (k, x) in elem.iter().enumerate() {
                        acc += BigRational::from_integer(x.clone()) * &table.rows[k][w];
                    }
                    frac_part(&acc)
                })
                .collect();
            if !seen.insert(img) {
                return false;
            }
        }
        true
    } else {
        injectivity_by_lattice_index(table)
    }
}

/// The kernel is trivial iff the lattice of integer tuples x with
/// sum_k x_k row_k integral in every leaf coordinate is exactly the
/// lattice d_1 Z x ... x d_m Z, detected by comparing covolumes.
fn injectivity_by_lattice_index(table: &LeafCharacterTable) -> bool {
    let m = table.invariant_factors.len();
    let t = table.leaves.len();
    let mut l = BigInt::one();
    for row in &table.rows {
        for r in row {
            l = l.lcm(r.denom());
        }
    }
    // K = [M^T | L I_t], M[k][w] = L * rows[k][w]
    let mut k_mat = IntMatrix::zero(t, m + t);
    for w in 0..t {
        for k in 0..m {
            k_mat[(w, k)] = (&table.rows[k][w] * BigRational::from_integer(l.clone())).to_integer();
        }
        k_mat[(w, m + w)] = l.clone();
    }
    let snf = smith_normal_form(&k_mat);
    let rank = snf
        .diagonal()
        .iter()
        .filter(|d| !d.is_zero())
        .count();
    if m + t - rank != m {
        return false;
    }
    // projection of the kernel basis onto the first m coordinates
    let mut basis = IntMatrix::zero(m, m);
    for (b, j) in (rank..m + t).enumerate() {
        for i in 0..m {
            basis[(i, b)] = snf.v[(i, j)].clone();
        }
    }
    let target: BigInt = table.invariant_factors.iter().product();
    basis.det().abs() == target
}

fn enumerate_elements(factors: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for d in factors {
        let mut next = Vec::new();
        for prefix in &out {
            let mut x = BigInt::zero();
            while &x < d {
                let mut e = prefix.clone();
                e.push(x.clone());
                next.push(e);
                x += 1;
            }
        }
        out = next;
    }
    out
}

/// Character by which the group acts on the monomial with the given leaf
/// exponents: per generator, sum_w exp(w) * (g . e_w) mod 1.
pub fn character_of_monomial(
    table: &LeafCharacterTable,
    exponents: &BTreeMap<String, u64>,
) -> Result<Character> {
    for leaf in exponents.keys() {
        if !table.leaves.contains(leaf) {
            return Err(Error::domain(format!("unknown leaf `{leaf}`")));
        }
    }
    let values = table
        .rows
        .iter()
        .map(|row| {
            let mut acc = BigRational::zero();
            for (w, leaf) in table.leaves.iter().enumerate() {
                if let Some(&e) = exponents.get(leaf) {
                    acc += BigRational::from_integer(BigInt::from(e)) * &row[w];
                }
            }
            frac_part(&acc)
        })
        .collect();
    Ok(Character(values))
}

/// Canonical JSON rendering of a group and its leaf characters.
pub fn group_json(group: &DiscriminantGroup, table: &LeafCharacterTable) -> serde_json::Value {
    let mut leaf_chars = serde_json::Map::new();
    for (k, row) in table.rows.iter().enumerate() {
        let mut cols = serde_json::Map::new();
        for (w, leaf) in table.leaves.iter().enumerate() {
            cols.insert(leaf.clone(), serde_json::Value::String(row[w].to_string()));
        }
        leaf_chars.insert(k.to_string(), serde_json::Value::Object(cols));
    }
    serde_json::json!({
        "order": bigint_json(&group.order),
        "invariant_factors": group
            .invariant_factors
            .iter()
            .map(bigint_json)
            .collect::<Vec<_>>(),
        "leaf_characters": leaf_chars,
    })
}

/// Integers render as JSON numbers when they fit in i64, else as strings.
pub fn bigint_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(x.to_string()),
    }
}
