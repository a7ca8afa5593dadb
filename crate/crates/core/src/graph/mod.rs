//! Finite multigraphs with oriented edges and an orientation-reversal
//! involution, and the bijection with symmetric non-negative integer
//! matrices whose diagonal is even.
//!
//! A geometric edge between distinct vertices `x, y` is a pair of oriented
//! edges `x -> y`, `y -> x` swapped by `J`. A geometric loop at `x` is a pair
//! of oriented edges `x -> x` swapped by `J`; it contributes 2 to `A_xx` and
//! to the degree of `x`.

pub mod io;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{charpoly_int, det_int, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub tail: usize,
    pub head: usize,
    /// Index of `J(e)`.
    pub reverse: usize,
}

impl OrientedEdge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<OrientedEdge>,
}

/// Symmetric non-negative adjacency matrix together with `Q = diag(d(x) - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    matrix: IntMatrix,
    q: Vec<BigInt>,
}

impl AdjacencyMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn q(&self) -> &[BigInt] {
        &self.q
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    pub connected: bool,
    pub bipartite: bool,
    pub regular: Option<usize>,
}

/// Checks the two matrix conditions for a geometric realization and returns
/// the entries as machine integers.
fn validate_adjacency(a: &IntMatrix) -> Result<Vec<Vec<usize>>> {
    let n = a.check_square()?;
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j).is_negative() {
                return Err(Error::NegativeEntry(i, j));
            }
            if a.get(i, j) != a.get(j, i) {
                return Err(Error::AsymmetricMatrix(i.min(j), i.max(j)));
            }
        }
        if (a.get(i, i) % BigInt::from(2u8)) != BigInt::zero() {
            return Err(Error::OddDiagonal(i));
        }
    }
    a.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    v.to_usize()
                        .ok_or_else(|| Error::BudgetExceeded(format!("edge multiplicity {v}")))
                })
                .collect()
        })
        .collect()
}

/// The unique graph with adjacency matrix `a`.
pub fn graph_from_adjacency(a: &IntMatrix) -> Result<MultiGraph> {
    let entries = validate_adjacency(a)?;
    let n = entries.len();
    let mut g = MultiGraph::empty(n);
    for x in 0..n {
        for _ in 0..entries[x][x] / 2 {
            g.push_pair(x, x);
        }
        for y in x + 1..n {
            for _ in 0..entries[x][y] {
                g.push_pair(x, y);
            }
        }
    }
    Ok(g)
}

pub fn adjacency_of(g: &MultiGraph) -> AdjacencyMatrix {
    g.adjacency()
}

pub fn euler_characteristic(g: &MultiGraph) -> i64 {
    g.vertex_count as i64 - g.geometric_edge_count() as i64
}

pub fn laplacian(g: &MultiGraph) -> IntMatrix {
    g.laplacian()
}

pub fn delete_loops(g: &MultiGraph) -> MultiGraph {
    let mut out = MultiGraph::empty(g.vertex_count);
    for (i, e) in g.edges.iter().enumerate() {
        if !e.is_loop() && i < e.reverse {
            out.push_pair(e.tail, e.head);
        }
    }
    out
}

/// Number of spanning trees, computed by two Kirchhoff routes that must agree.
pub fn tree_count(g: &MultiGraph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let lap = g.laplacian();
    tree_count_from_laplacian(&lap)
}

/// Matrix-tree count from a Laplacian: `|c_1(charpoly)| / m` and the
/// reduced determinant, with a consistency check.
pub fn tree_count_from_laplacian(lap: &IntMatrix) -> Result<BigInt> {
    let m = lap.check_square()?;
    if m == 0 {
        return Err(Error::DisconnectedGraph);
    }
    let cp = charpoly_int(lap)?;
    let linear = cp.coeff(1).abs();
    let (spectral, rem) = num_integer::Integer::div_rem(&linear, &BigInt::from(m));
    if !rem.is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "linear charpoly coefficient {linear} not divisible by {m}"
        )));
    }
    let reduced = det_int(&lap.minor(0, 0))?;
    if reduced != spectral {
        return Err(Error::InternalInconsistency(format!(
            "Kirchhoff routes disagree: spectral {spectral}, reduced determinant {reduced}"
        )));
    }
    Ok(reduced)
}

pub fn structure_flags(g: &MultiGraph) -> StructureFlags {
    StructureFlags {
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        regular: g.regular_degree(),
    }
}

impl MultiGraph {
    pub fn empty(vertex_count: usize) -> Self {
        MultiGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    /// Adds a geometric edge (or loop when `x == y`) as two oriented edges.
    pub fn push_pair(&mut self, x: usize, y: usize) {
        assert!(x < self.vertex_count && y < self.vertex_count);
        let i = self.edges.len();
        self.edges.push(OrientedEdge {
            tail: x,
            head: y,
            reverse: i + 1,
        });
        self.edges.push(OrientedEdge {
            tail: y,
            head: x,
            reverse: i,
        });
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[OrientedEdge] {
        &self.edges
    }

    pub fn geometric_edge_count(&self) -> usize {
        self.edges.len() / 2
    }

    /// `d(x) = |E_0(x)|`.
    pub fn degree(&self, x: usize) -> usize {
        self.edges.iter().filter(|e| e.tail == x).count()
    }

    /// Geometric loops at `x`.
    pub fn loop_count(&self, x: usize) -> usize {
        self.edges.iter().filter(|e| e.tail == x && e.is_loop()).count() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for e in &self.edges {
            d[e.tail] += 1;
        }
        d
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        let n = self.vertex_count;
        let mut m = IntMatrix::zeros(n);
        let mut counts = vec![vec![0u64; n]; n];
        for e in &self.edges {
            counts[e.tail][e.head] += 1;
        }
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(c));
            }
        }
        let q = self
            .degrees()
            .into_iter()
            .map(|d| BigInt::from(d as i64 - 1))
            .collect();
        AdjacencyMatrix { matrix: m, q }
    }

    /// `(I + Q) - A`, the degree matrix minus the adjacency matrix.
    pub fn laplacian(&self) -> IntMatrix {
        let adj = self.adjacency();
        let degrees = self.degrees();
        let mut lap = adj.matrix.scaled_identity_minus(&BigInt::zero());
        for (i, d) in degrees.into_iter().enumerate() {
            let v = lap.get(i, i) + BigInt::from(d);
            lap.set(i, i, v);
        }
        lap
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut nb = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            nb[e.tail].push(e.head);
        }
        nb
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let nb = self.neighbours();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &nb[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Two-colouring of every component; any loop rules it out.
    pub fn is_bipartite(&self) -> bool {
        if self.edges.iter().any(OrientedEdge::is_loop) {
            return false;
        }
        let nb = self.neighbours();
        let mut colour: Vec<Option<bool>> = vec![None; self.vertex_count];
        for start in 0..self.vertex_count {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let cx = colour[x].unwrap();
                for &y in &nb[x] {
                    match colour[y] {
                        None => {
                            colour[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    /// The graph with vertices relabelled so that old vertex `perm[i]` becomes `i`.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        let mut inverse = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        MultiGraph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| OrientedEdge {
                    tail: inverse[e.tail],
                    head: inverse[e.head],
                    reverse: e.reverse,
                })
                .collect(),
        }
    }

    /// Checks `J` is a fixed-point-free involution reversing endpoints.
    pub fn check_involution(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, e)| {
            let r = &self.edges[e.reverse];
            e.reverse != i && r.reverse == i && r.tail == e.head && r.head == e.tail
        })
    }
}

/// Small named graphs used in tests and the self-test corpus.
pub mod named {
    use super::*;

    pub fn from_rows(rows: &[&[i64]]) -> MultiGraph {
        let m = IntMatrix::from_i64s(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .expect("rectangular rows");
        graph_from_adjacency(&m).expect("valid adjacency")
    }

    /// The 4-vertex 4-regular graph with loops at the first and last vertex.
    pub fn four_regular_example() -> MultiGraph {
        from_rows(&[&[2, 1, 0, 1], &[1, 0, 3, 0], &[0, 3, 0, 1], &[1, 0, 1, 2]])
    }

    pub fn cycle(n: usize) -> MultiGraph {
        let mut g = MultiGraph::empty(n);
        for i in 0..n {
            g.push_pair(i, (i + 1) % n);
        }
        g
    }

    pub fn complete(n: usize) -> MultiGraph {
        let mut g = MultiGraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.push_pair(i, j);
            }
        }
        g
    }

    pub fn petersen() -> MultiGraph {
        let mut g = MultiGraph::empty(10);
        for i in 0..5 {
            g.push_pair(i, (i + 1) % 5);
            g.push_pair(i, i + 5);
            g.push_pair(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn bouquet(loops: usize) -> MultiGraph {
        let mut g = MultiGraph::empty(1);
        for _ in 0..loops {
            g.push_pair(0, 0);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64s(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn example_graph_has_loops_at_ends() {
        let g = four_regular_example();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!((0..4).map(|x| g.loop_count(x)).collect::<Vec<_>>(), vec![1, 0, 0, 1]);
        assert!(g.check_involution());
        assert_eq!(euler_characteristic(&g), -4);
        assert_eq!(euler_characteristic(&g), 4 * (2 - 4) / 2);
    }

    #[test]
    fn adjacency_errors() {
        assert_eq!(graph_from_adjacency(&m(&[&[1]])), Err(Error::OddDiagonal(0)));
        assert_eq!(
            graph_from_adjacency(&m(&[&[0, 1], &[2, 0]])),
            Err(Error::AsymmetricMatrix(0, 1))
        );
        assert_eq!(
            graph_from_adjacency(&m(&[&[0, -1], &[-1, 0]])),
            Err(Error::NegativeEntry(0, 1))
        );
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(adjacency_of(&cycle(3)).matrix(), &m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]));
        assert_eq!(adjacency_of(&bouquet(1)).matrix(), &m(&[&[2]]));
        let a = m(&[&[2, 1, 0, 1], &[1, 0, 3, 0], &[0, 3, 0, 1], &[1, 0, 1, 2]]);
        let adj = adjacency_of(&four_regular_example());
        assert_eq!(adj.matrix(), &a);
        assert!(adj.q().iter().all(|q| *q == BigInt::from(3)));
    }

    #[test]
    fn euler_examples() {
        let mut edge = MultiGraph::empty(2);
        edge.push_pair(0, 1);
        assert_eq!(euler_characteristic(&edge), 1);
        assert_eq!(euler_characteristic(&bouquet(1)), 0);
    }

    #[test]
    fn laplacian_examples() {
        let expected = m(&[&[2, -1, 0, -1], &[-1, 4, -3, 0], &[0, -3, 4, -1], &[-1, 0, -1, 2]]);
        assert_eq!(laplacian(&four_regular_example()), expected);
        assert_eq!(laplacian(&bouquet(1)), m(&[&[0]]));
        let c3 = cycle(3);
        let expected = adjacency_of(&c3).matrix().scaled_identity_minus(&BigInt::from(2));
        assert_eq!(laplacian(&c3), expected);
    }

    #[test]
    fn delete_loops_examples() {
        let g = four_regular_example();
        let stripped = delete_loops(&g);
        let a_prime = m(&[&[0, 1, 0, 1], &[1, 0, 3, 0], &[0, 3, 0, 1], &[1, 0, 1, 0]]);
        assert_eq!(adjacency_of(&stripped).matrix(), &a_prime);
        let q: Vec<i64> = adjacency_of(&stripped).q().iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(q, vec![1, 3, 3, 1]);
        assert_eq!(laplacian(&stripped), laplacian(&g));
        assert_eq!(delete_loops(&cycle(4)), cycle(4));
        let b = delete_loops(&bouquet(2));
        assert_eq!((b.vertex_count(), b.geometric_edge_count()), (1, 0));
    }

    #[test]
    fn tree_counts() {
        assert_eq!(tree_count(&four_regular_example()).unwrap(), BigInt::from(10));
        assert_eq!(tree_count(&delete_loops(&four_regular_example())).unwrap(), BigInt::from(10));
        assert_eq!(tree_count(&complete(4)).unwrap(), BigInt::from(16));
        assert_eq!(tree_count(&petersen()).unwrap(), BigInt::from(2000));
        assert_eq!(tree_count(&bouquet(3)).unwrap(), BigInt::from(1));
        assert_eq!(tree_count(&MultiGraph::empty(2)), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn structure_examples() {
        let f = structure_flags(&cycle(3));
        assert_eq!(f, StructureFlags { connected: true, bipartite: false, regular: Some(2) });
        let mut dipole = MultiGraph::empty(2);
        dipole.push_pair(0, 1);
        dipole.push_pair(0, 1);
        let f = structure_flags(&dipole);
        assert_eq!(f, StructureFlags { connected: true, bipartite: true, regular: Some(2) });
        assert!(!structure_flags(&bouquet(1)).bipartite);
        assert_eq!(structure_flags(&petersen()).regular, Some(3));
    }

    #[test]
    fn relabel_preserves_tree_count() {
        let g = four_regular_example();
        let h = g.relabel(&[2, 0, 3, 1]);
        assert!(h.check_involution());
        assert_eq!(tree_count(&h).unwrap(), BigInt::from(10));
        assert_eq!(
            adjacency_of(&h).matrix(),
            &adjacency_of(&g).matrix().permute(&[2, 0, 3, 1])
        );
    }
}
