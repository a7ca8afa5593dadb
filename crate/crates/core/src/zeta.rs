//! Ihara zeta functions: the three-term determinant, the Hashimoto edge-matrix
//! oracle, direct counts of reduced tail-less closed paths, and
//! exact Ramanujan certification.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::sturm::symmetric_window;
use crate::exact::{
    charpoly_berkowitz, charpoly_int, ratfun_normalize, three_term_det, window_count, IntMatrix,
    IntPolynomial, RationalFunction,
};
use crate::graph::{graph_from_adjacency, MultiGraph};

pub const MAX_PATH_LENGTH: usize = 12;
pub const MAX_ORIENTED_EDGES: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IharaZeta {
    zeta: RationalFunction,
    three_term: IntPolynomial,
    euler_characteristic: i64,
}

impl IharaZeta {
    pub fn zeta(&self) -> &RationalFunction {
        &self.zeta
    }

    /// `det[1 - A t + Q t^2]`
    pub fn three_term_determinant(&self) -> &IntPolynomial {
        &self.three_term
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.euler_characteristic
    }

    fn assemble(three_term: IntPolynomial, chi: i64) -> Result<Self> {
        let one_minus_t2 = IntPolynomial::from_i64s(&[1, 0, -1]);
        let power = one_minus_t2.pow(chi.unsigned_abs() as u32);
        let zeta = if chi >= 0 {
            ratfun_normalize(power, three_term.clone())?
        } else {
            ratfun_normalize(IntPolynomial::one(), &three_term * &power)?
        };
        Ok(IharaZeta {
            zeta,
            three_term,
            euler_characteristic: chi,
        })
    }
}

/// `Z(G; t) = (1 - t^2)^chi(G) / det[1 - A t + Q t^2]`.
pub fn ihara_zeta(g: &MultiGraph) -> Result<IharaZeta> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let adj = g.adjacency();
    let det = three_term_det(adj.matrix(), adj.q())?;
    IharaZeta::assemble(det, crate::graph::euler_characteristic(g))
}

/// Zeta from a symmetric non-negative matrix with constant row sum `k`, using
/// `Q = (k-1) I` and `chi = m (2 - k) / 2`.
///
/// No diagonal parity is required; when the matrix is not an adjacency matrix
/// the result is a formal zeta with no path interpretation.
pub fn formal_ihara_zeta(a: &IntMatrix) -> Result<IharaZeta> {
    let m = a.check_square()?;
    if !a.is_symmetric() {
        return Err(Error::AsymmetricMatrix(0, 0));
    }
    for i in 0..m {
        for j in 0..m {
            if a.get(i, j).is_negative() {
                return Err(Error::NegativeEntry(i, j));
            }
        }
    }
    let sums = a.row_sums();
    let k = sums.first().cloned().unwrap_or_default();
    if sums.iter().any(|s| *s != k) {
        return Err(Error::NotRegular);
    }
    let k = k.to_i64().ok_or_else(|| Error::BudgetExceeded("row sum".into()))?;
    let twice_chi = m as i64 * (2 - k);
    if twice_chi % 2 != 0 {
        return Err(Error::NotRealizable(format!(
            "Euler characteristic m(2-k)/2 = {twice_chi}/2 is not an integer"
        )));
    }
    let q = vec![BigInt::from(k - 1); m];
    let det = three_term_det(a, &q)?;
    IharaZeta::assemble(det, twice_chi / 2)
}

/// Non-backtracking edge matrix: `T[e][f] = 1` iff `head(e) = tail(f)` and `f != J(e)`.
pub fn hashimoto_matrix(g: &MultiGraph) -> IntMatrix {
    let edges = g.edges();
    let n = edges.len();
    let mut t = IntMatrix::zeros(n);
    for (i, e) in edges.iter().enumerate() {
        for (j, f) in edges.iter().enumerate() {
            if e.head == f.tail && j != e.reverse {
                t.set(i, j, BigInt::one());
            }
        }
    }
    t
}

/// `1 / det(I - t T)` with `T` the Hashimoto matrix.
pub fn zeta_via_hashimoto(g: &MultiGraph) -> Result<RationalFunction> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let t = hashimoto_matrix(g);
    // det(I - tT) = t^n charpoly_T(1/t)
    let recip = charpoly_berkowitz(&t)?.reversed();
    ratfun_normalize(IntPolynomial::one(), recip)
}

/// Number of reduced, tail-less closed paths of length `m`, by enumeration.
pub fn count_closed_paths(g: &MultiGraph, m: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::BudgetExceeded("path length must be at least 1".into()));
    }
    if m > MAX_PATH_LENGTH || g.edges().len() > MAX_ORIENTED_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "length {m} with {} oriented edges exceeds the enumeration budget \
             (length <= {MAX_PATH_LENGTH}, edges <= {MAX_ORIENTED_EDGES})",
            g.edges().len()
        )));
    }
    let edges = g.edges();
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        out_of[e.tail].push(i);
    }
    let mut total: u64 = 0;
    let mut path = Vec::with_capacity(m);
    for first in 0..edges.len() {
        path.clear();
        path.push(first);
        extend_paths(edges, &out_of, m, &mut path, &mut total);
    }
    Ok(BigInt::from(total))
}

fn extend_paths(
    edges: &[crate::graph::OrientedEdge],
    out_of: &[Vec<usize>],
    m: usize,
    path: &mut Vec<usize>,
    total: &mut u64,
) {
    let last = *path.last().unwrap();
    if path.len() == m {
        let first = path[0];
        if edges[last].head == edges[first].tail && edges[first].reverse != last {
            *total += 1;
        }
        return;
    }
    for &next in &out_of[edges[last].head] {
        if next == edges[last].reverse {
            continue;
        }
        path.push(next);
        extend_paths(edges, out_of, m, path, total);
        path.pop();
    }
}

/// `N_1, ..., N_max` by dynamic programming over reduced walks: for each
/// starting edge, the number of reduced walks ending in each oriented edge.
///
/// Agrees with [`count_closed_paths`] but runs in `O(max * |E|^2 * deg)`, so
/// it handles graphs whose walk trees are too large to enumerate.
pub fn closed_path_counts(g: &MultiGraph, max: usize) -> Vec<BigInt> {
    let edges = g.edges();
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        out_of[e.tail].push(i);
    }
    let mut totals = vec![BigInt::zero(); max];
    for (first, e0) in edges.iter().enumerate() {
        let mut walks = vec![BigInt::zero(); edges.len()];
        walks[first] = BigInt::one();
        for len in 1..=max {
            for (last, count) in walks.iter().enumerate() {
                if !count.is_zero()
                    && edges[last].head == e0.tail
                    && e0.reverse != last
                {
                    totals[len - 1] += count;
                }
            }
            if len == max {
                break;
            }
            let mut next = vec![BigInt::zero(); edges.len()];
            for (last, count) in walks.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for &f in &out_of[edges[last].head] {
                    if f != edges[last].reverse {
                        next[f] += count;
                    }
                }
            }
            walks = next;
        }
    }
    totals
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamanujanVerdict {
    pub degree: usize,
    pub is_regular: bool,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_ramanujan: bool,
    /// Eigenvalues (with multiplicity) other than the trivial `k` (and `-k`
    /// when bipartite) lying outside `[-2 sqrt(k-1), 2 sqrt(k-1)]`.
    pub outside_window: usize,
}

pub fn ramanujan_certificate(g: &MultiGraph) -> Result<RamanujanVerdict> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    let bipartite = g.is_bipartite();
    let mut verdict = spectral_window_verdict(g.adjacency().matrix(), k, bipartite)?;
    verdict.is_connected = true;
    Ok(verdict)
}

/// Ramanujan test on a symmetric matrix with constant row sum `k`, given the
/// bipartiteness of the underlying graph. Connectivity is taken from the
/// simple multiplicity of `k` as an eigenvalue.
pub fn spectral_window_verdict(a: &IntMatrix, k: usize, bipartite: bool) -> Result<RamanujanVerdict> {
    if k < 2 {
        return Err(Error::DegreeTooSmall(k));
    }
    let kb = BigInt::from(k);
    if a.row_sums().iter().any(|s| *s != kb) {
        return Err(Error::NotRegular);
    }
    let cp = charpoly_int(a)?;
    let mut rest = cp.exact_div(&IntPolynomial::linear_root(kb.clone()))?;
    let simple_top = !rest.eval(&kb).is_zero();
    if bipartite {
        rest = rest.exact_div(&IntPolynomial::linear_root(-kb))?;
    }
    let (lo, hi) = symmetric_window(2, k as u64 - 1);
    let census = if rest.degree().unwrap_or(0) == 0 {
        None
    } else {
        Some(window_count(&rest, &lo, &hi)?)
    };
    let outside = census.as_ref().map_or(0, |c| c.outside());
    Ok(RamanujanVerdict {
        degree: k,
        is_regular: true,
        is_connected: simple_top,
        is_bipartite: bipartite,
        is_ramanujan: outside == 0,
        outside_window: outside,
    })
}

/// Ramanujan verdict for a regular adjacency matrix that admits a geometric realization.
pub fn ramanujan_certificate_matrix(a: &IntMatrix) -> Result<RamanujanVerdict> {
    ramanujan_certificate(&graph_from_adjacency(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn inv(den: IntPolynomial) -> RationalFunction {
        ratfun_normalize(p(&[1]), den).unwrap()
    }

    #[test]
    fn zeta_examples() {
        let z3 = inv(p(&[1, 0, 0, -1]).pow(2));
        assert_eq!(ihara_zeta(&cycle(3)).unwrap().zeta(), &z3);
        assert_eq!(zeta_via_hashimoto(&cycle(3)).unwrap(), z3);

        let z1 = inv(p(&[1, -1]).pow(2));
        assert_eq!(ihara_zeta(&bouquet(1)).unwrap().zeta(), &z1);
        assert_eq!(zeta_via_hashimoto(&bouquet(1)).unwrap(), z1);

        let mut dipole = MultiGraph::empty(2);
        dipole.push_pair(0, 1);
        dipole.push_pair(0, 1);
        let z2 = inv(p(&[1, 0, -1]).pow(2));
        assert_eq!(ihara_zeta(&dipole).unwrap().zeta(), &z2);
        assert_eq!(zeta_via_hashimoto(&dipole).unwrap(), z2);
    }

    #[test]
    fn example_graph_oracle_agreement() {
        let g = four_regular_example();
        let z = ihara_zeta(&g).unwrap();
        assert_eq!(z.euler_characteristic(), -4);
        assert_eq!(z.zeta(), &zeta_via_hashimoto(&g).unwrap());
        assert_eq!(z.zeta().denominator().degree(), Some(2 * g.geometric_edge_count()));
    }

    #[test]
    fn closed_path_examples() {
        assert_eq!(count_closed_paths(&cycle(3), 3).unwrap(), BigInt::from(6));
        assert_eq!(count_closed_paths(&cycle(3), 4).unwrap(), BigInt::zero());
        assert_eq!(count_closed_paths(&bouquet(1), 1).unwrap(), BigInt::from(2));
        assert!(matches!(count_closed_paths(&cycle(3), 13), Err(Error::BudgetExceeded(_))));
        assert!(matches!(count_closed_paths(&complete(8), 3), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn closed_paths_match_hashimoto_trace() {
        let g = four_regular_example();
        let t = hashimoto_matrix(&g);
        let mut power = t.clone();
        for m in 1..=5 {
            assert_eq!(count_closed_paths(&g, m).unwrap(), power.trace(), "m = {m}");
            power = power.mul(&t).unwrap();
        }
    }

    #[test]
    fn dynamic_counts_match_enumeration() {
        let mut lollipop = cycle(3);
        lollipop.push_pair(0, 0);
        for g in [four_regular_example(), petersen(), bouquet(2), lollipop] {
            let dp = closed_path_counts(&g, 6);
            for m in 1..=6 {
                assert_eq!(dp[m - 1], count_closed_paths(&g, m).unwrap(), "m = {m}");
            }
        }
    }

    #[test]
    fn ramanujan_examples() {
        let v = ramanujan_certificate(&cycle(3)).unwrap();
        assert!(v.is_ramanujan && v.is_connected && !v.is_bipartite);
        let v = ramanujan_certificate(&four_regular_example()).unwrap();
        assert!(v.is_ramanujan);
        assert_eq!(v.outside_window, 0);
        // Petersen: eigenvalues 3, 1 (x5), -2 (x4); window [-2 sqrt 2, 2 sqrt 2]
        assert!(ramanujan_certificate(&petersen()).unwrap().is_ramanujan);
        // even cycle is bipartite; -2 is divided out
        let v = ramanujan_certificate(&cycle(6)).unwrap();
        assert!(v.is_bipartite && v.is_ramanujan);
        assert_eq!(ramanujan_certificate(&MultiGraph::empty(2)), Err(Error::DisconnectedGraph));
        let mut path = MultiGraph::empty(3);
        path.push_pair(0, 1);
        path.push_pair(1, 2);
        assert_eq!(ramanujan_certificate(&path), Err(Error::NotRegular));
    }

    #[test]
    fn non_ramanujan_graph_detected() {
        // Two copies of K_7 minus an edge, joined by two edges: 6-regular with a tiny gap.
        let mut g = MultiGraph::empty(14);
        for base in [0, 7] {
            for i in 0..7 {
                for j in i + 1..7 {
                    if (i, j) != (0, 1) {
                        g.push_pair(base + i, base + j);
                    }
                }
            }
        }
        g.push_pair(0, 7);
        g.push_pair(1, 8);
        let v = ramanujan_certificate(&g).unwrap();
        assert_eq!(v.degree, 6);
        assert!(!v.is_ramanujan);
        assert!(v.outside_window >= 1);
    }

    #[test]
    fn formal_zeta_matches_geometric_when_realizable() {
        let g = four_regular_example();
        let formal = formal_ihara_zeta(g.adjacency().matrix()).unwrap();
        assert_eq!(formal, ihara_zeta(&g).unwrap());
        // [3] has odd diagonal and half-integral chi
        let odd = IntMatrix::from_i64s(&[vec![3]]).unwrap();
        assert!(matches!(formal_ihara_zeta(&odd), Err(Error::NotRealizable(_))));
    }
}
