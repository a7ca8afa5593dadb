//! Seeded property corpus and the fixed acceptance matrix, runnable as one
//! entry point.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arithmetic::{brandt_matrix, supersingular_locus, validate_brandt, Method};
use crate::correspondence::{mu, verify_theorems};
use crate::error::Result;
use crate::graph::io::{graph_from_json, graph_to_json};
use crate::graph::{tree_count, MultiGraph};
use crate::zeta::{closed_path_counts, ihara_zeta, zeta_via_hashimoto};

pub const DEFAULT_SEED: u64 = 0x1d7a_2e7a;
pub const CORPUS_SIZE: usize = 24;
pub const MAX_VERTICES: usize = 8;
pub const MAX_EDGES: usize = 12;
pub const MAX_PATH: usize = 8;

/// Pairs on which the reciprocity, limit and bound identities are checked.
pub const IDENTITY_PAIRS: [(u64, u64); 4] = [(37, 5), (37, 11), (61, 19), (73, 5)];
pub const LEVELS: [u64; 4] = [13, 37, 61, 73];

/// Connected multigraph with at most `max_vertices` vertices and
/// `max_edges` geometric edges (loops and parallel edges allowed).
pub fn random_connected_multigraph(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
) -> MultiGraph {
    let m = rng.gen_range(1..=max_vertices.min(max_edges + 1));
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let mut g = MultiGraph::empty(m);
    for i in 1..m {
        let j = rng.gen_range(0..i);
        g.push_pair(order[i], order[j]);
    }
    let extra = rng.gen_range(0..=max_edges - (m - 1));
    for _ in 0..extra {
        let x = rng.gen_range(0..m);
        let y = rng.gen_range(0..m);
        g.push_pair(x, y);
    }
    g
}

pub fn random_corpus(seed: u64, count: usize) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_connected_multigraph(&mut rng, MAX_VERTICES, MAX_EDGES))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub checks: Vec<SelftestCheck>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("seed {:#x}\n", self.seed);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
        }
        out
    }
}

fn push(checks: &mut Vec<SelftestCheck>, name: &str, result: Result<(bool, String)>) {
    let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    checks.push(SelftestCheck {
        name: name.into(),
        passed,
        detail,
    });
}

fn zeta_oracles(corpus: &[MultiGraph]) -> Result<(bool, String)> {
    let mut agree = 0;
    for g in corpus {
        if ihara_zeta(g)?.zeta() == &zeta_via_hashimoto(g)? {
            agree += 1;
        }
    }
    Ok((agree == corpus.len(), format!("{agree}/{} graphs", corpus.len())))
}

fn path_counts(corpus: &[MultiGraph]) -> Result<(bool, String)> {
    let mut agree = 0;
    for g in corpus {
        let series = ihara_zeta(g)?.zeta().log_derivative_series(MAX_PATH)?;
        let counts = closed_path_counts(g, MAX_PATH);
        let ok = series
            .iter()
            .zip(&counts)
            .all(|(c, n)| *c == BigRational::from_integer(n.clone()));
        agree += ok as usize;
    }
    Ok((
        agree == corpus.len(),
        format!("{agree}/{} graphs, m <= {MAX_PATH}", corpus.len()),
    ))
}

fn graph_invariants(corpus: &[MultiGraph], seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
    let mut ok = true;
    for g in corpus {
        ok &= graph_from_json(&graph_to_json(g))?.adjacency() == g.adjacency();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        ok &= tree_count(&h)? == tree_count(g)?;
        ok &= ihara_zeta(&h)?.zeta() == ihara_zeta(g)?.zeta();
        ok &= g.check_involution();
    }
    Ok((ok, "json round trip, relabel invariance, edge involution".into()))
}

fn brandt_cross_oracle(data_dir: &Path) -> Result<(bool, String)> {
    let mut ok = true;
    for n in LEVELS {
        let a = brandt_matrix(n, 2, Method::ModPoly, data_dir)?;
        let b = brandt_matrix(n, 2, Method::Velu2, data_dir)?;
        ok &= a == b;
    }
    Ok((ok, format!("p = 2, N in {LEVELS:?}")))
}

fn brandt_row_sums(data_dir: &Path) -> Result<(bool, String)> {
    let mut count = 0;
    let mut ok = true;
    for n in [37u64, 61, 73] {
        for p in (2..=29).filter(|&p| crate::exact::is_prime(p)) {
            let b = brandt_matrix(n, p, Method::ModPoly, data_dir)?;
            let expected = BigInt::from(p + 1);
            ok &= b.matrix().row_sums().iter().all(|s| *s == expected);
            count += 1;
        }
    }
    Ok((ok, format!("{count} matrices")))
}

fn locus_sizes() -> Result<(bool, String)> {
    let mut sizes = Vec::new();
    for n in LEVELS {
        sizes.push(supersingular_locus(n)?.len());
    }
    Ok((sizes == [1, 3, 5, 6], format!("{sizes:?}")))
}

fn identities(data_dir: &Path) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for (n, p) in IDENTITY_PAIRS {
        let r = verify_theorems(n, p, data_dir)?;
        failures.extend(r.failures().map(|c| format!("({n},{p}) {}", c.id)));
    }
    Ok((failures.is_empty(), format!("{IDENTITY_PAIRS:?} {failures:?}")))
}

fn table_values(data_dir: &Path) -> Result<(bool, String)> {
    let expected: [(u64, u64, i64); 10] = [
        (37, 5, 0),
        (37, 11, -15),
        (37, 17, 0),
        (37, 23, 12),
        (61, 29, 120),
        (73, 5, -6),
        (73, 11, -18),
        (73, 17, 810),
        (73, 23, 8580),
        (73, 29, 1122),
    ];
    let mut bad = Vec::new();
    for (n, p, v) in expected {
        let got = mu(&brandt_matrix(n, p, Method::ModPoly, data_dir)?)?;
        if got != BigInt::from(v) {
            bad.push(format!("({n},{p}) {got}"));
        }
    }
    Ok((bad.is_empty(), format!("mismatches {bad:?}")))
}

fn validator_reports(data_dir: &Path) -> Result<(bool, String)> {
    let mut count = 0;
    let mut parity_failures = Vec::new();
    for n in LEVELS {
        for p in (2..=29).filter(|&p| crate::exact::is_prime(p) && p != n) {
            let b = brandt_matrix(n, p, Method::ModPoly, data_dir)?;
            let r = validate_brandt(&b);
            count += 1;
            if !b.odd_diagonal().is_empty() {
                parity_failures.push((n, p));
            }
            if r.claims.len() != 3 {
                return Ok((false, format!("({n},{p}) incomplete report")));
            }
        }
    }
    Ok((
        true,
        format!("{count} reports, {} with odd diagonal", parity_failures.len()),
    ))
}

pub fn run_selftest(seed: u64, data_dir: &Path) -> SelftestReport {
    let corpus = random_corpus(seed, CORPUS_SIZE);
    let mut checks = Vec::new();
    push(&mut checks, "zeta.oracles", zeta_oracles(&corpus));
    push(&mut checks, "zeta.closed_paths", path_counts(&corpus));
    push(&mut checks, "graph.invariants", graph_invariants(&corpus, seed));
    push(&mut checks, "locus.sizes", locus_sizes());
    push(&mut checks, "brandt.cross_oracle", brandt_cross_oracle(data_dir));
    push(&mut checks, "brandt.row_sums", brandt_row_sums(data_dir));
    push(&mut checks, "brandt.validator", validator_reports(data_dir));
    push(&mut checks, "table.mu", table_values(data_dir));
    push(&mut checks, "identities", identities(data_dir));
    SelftestReport { seed, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_respects_limits() {
        let corpus = random_corpus(7, 50);
        for g in &corpus {
            assert!(g.is_connected());
            assert!(g.vertex_count() <= MAX_VERTICES);
            assert!(g.geometric_edge_count() <= MAX_EDGES);
        }
        assert_eq!(random_corpus(7, 50), corpus);
    }

    #[test]
    fn full_run_passes() {
        let r = run_selftest(DEFAULT_SEED, Path::new(crate::arithmetic::modpoly::DEFAULT_DATA_DIR));
        assert!(r.all_passed(), "{}", r.to_text());
    }
}
