//! Acceptance matrix. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use brandt_zeta::arithmetic::modpoly::DEFAULT_DATA_DIR;
use brandt_zeta::arithmetic::{brandt_graph, brandt_matrix, supersingular_locus, validate_brandt, BrandtMatrix, Method};
use brandt_zeta::correspondence::verify::ids;
use brandt_zeta::correspondence::{
    brandt_tree_count, cusp_eigenvalue_polynomial, eigenform_fixture, hasse_weil_zeta,
    hecke_charpoly_s2, mu, verify_brandt,
};
use brandt_zeta::exact::{charpoly_int, is_prime, ratfun_normalize, IntPolynomial, QuadraticBound};
use brandt_zeta::graph::named::four_regular_example;
use brandt_zeta::graph::{delete_loops, tree_count};
use brandt_zeta::report::ClaimStatus;
use brandt_zeta::selftest::{random_corpus, CORPUS_SIZE, DEFAULT_SEED, MAX_EDGES, MAX_PATH, MAX_VERTICES};
use brandt_zeta::zeta::{closed_path_counts, formal_ihara_zeta, ihara_zeta, ramanujan_certificate, zeta_via_hashimoto};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const RECIPROCITY_PAIRS: [(u64, u64); 4] = [(37, 5), (37, 11), (61, 19), (73, 5)];

fn data() -> &'static Path {
    Path::new(DEFAULT_DATA_DIR)
}

fn brandt(n: u64, p: u64) -> Result<BrandtMatrix, String> {
    brandt_matrix(n, p, Method::ModPoly, data()).map_err(|e| format!("B({n},{p}): {e}"))
}

fn primes_to(max: u64) -> impl Iterator<Item = u64> {
    (2..=max).filter(|&p| is_prime(p))
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn c1_complexity() -> Outcome {
    let g = four_regular_example();
    let expected = [[2, -1, 0, -1], [-1, 4, -3, 0], [0, -3, 4, -1], [-1, 0, -1, 2]];
    let lap = g.laplacian();
    for (i, row) in expected.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            ensure!(*lap.get(i, j) == big(v), "Laplacian entry ({i},{j}) = {}", lap.get(i, j));
        }
    }
    // eigenvalues 0, 2, 5 +- sqrt 5
    let cp = charpoly_int(&lap).map_err(|e| e.to_string())?;
    let want = &(&IntPolynomial::from_i64s(&[0, 1]) * &IntPolynomial::from_i64s(&[-2, 1]))
        * &IntPolynomial::from_i64s(&[20, -10, 1]);
    ensure!(cp == want, "Laplacian charpoly {cp}");
    let tau = tree_count(&g).map_err(|e| e.to_string())?;
    ensure!(tau == big(10), "tau(G) = {tau}");
    let h = delete_loops(&g);
    ensure!(h.laplacian() == lap, "loop deletion changed the Laplacian");
    ensure!((0..4).all(|i| *h.adjacency().matrix().get(i, i) == big(0)), "loops remain");
    let tau2 = tree_count(&h).map_err(|e| e.to_string())?;
    ensure!(tau2 == big(10), "tau(G') = {tau2}");
    Ok(())
}

fn c2_locus() -> Outcome {
    for (n, size) in [(13u64, 1usize), (37, 3), (61, 5), (73, 6)] {
        let locus = supersingular_locus(n).map_err(|e| e.to_string())?;
        ensure!(locus.len() == size, "N = {n}: {} points", locus.len());
        ensure!(locus.len() as u64 == (n - 1) / 12, "N = {n}: n != (N-1)/12");
        let f = locus.field();
        let special = [f.zero(), f.from_u64(1728)];
        ensure!(
            locus.j_invariants().iter().all(|j| !special.contains(j)),
            "N = {n}: j = 0 or 1728 present"
        );
        ensure!(locus.weights().iter().all(|&w| w == 1), "N = {n}: nontrivial weight");
    }
    Ok(())
}

fn c3_zeta_oracles() -> Outcome {
    let corpus = random_corpus(DEFAULT_SEED, CORPUS_SIZE);
    ensure!(corpus.len() >= 20, "corpus has {} graphs", corpus.len());
    for (k, g) in corpus.iter().enumerate() {
        ensure!(g.is_connected(), "graph {k} disconnected");
        ensure!(
            g.vertex_count() <= MAX_VERTICES && g.geometric_edge_count() <= MAX_EDGES,
            "graph {k} too large"
        );
        let z = ihara_zeta(g).map_err(|e| e.to_string())?;
        let h = zeta_via_hashimoto(g).map_err(|e| e.to_string())?;
        ensure!(z.zeta() == &h, "graph {k}: three-term and Hashimoto zeta differ");
        let series = z.zeta().log_derivative_series(MAX_PATH).map_err(|e| e.to_string())?;
        let counts = closed_path_counts(g, MAX_PATH);
        ensure!(counts.len() == MAX_PATH && series.len() == MAX_PATH, "graph {k}: series length");
        for (m, (c, n)) in series.iter().zip(&counts).enumerate() {
            ensure!(
                *c == BigRational::from_integer(n.clone()),
                "graph {k}: N_{} = {n}, t Z'/Z gives {c}",
                m + 1
            );
        }
    }
    Ok(())
}

fn c4_brandt_cross_oracle() -> Outcome {
    for n in [13u64, 37, 61, 73] {
        let a = brandt(n, 2)?;
        let b = brandt_matrix(n, 2, Method::Velu2, data()).map_err(|e| e.to_string())?;
        ensure!(a.j_invariants() == b.j_invariants(), "N = {n}: vertex orderings differ");
        ensure!(a.matrix() == b.matrix(), "N = {n}: modpoly and velu2 differ");
    }
    for n in [37u64, 61, 73] {
        for p in primes_to(29).filter(|&p| p != n) {
            let b = brandt(n, p)?;
            let want = BigInt::from(p + 1);
            ensure!(b.matrix().row_sums().iter().all(|s| *s == want), "B({n},{p}) row sums");
        }
    }
    Ok(())
}

fn c5_table() -> Outcome {
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
    for (n, p, v) in expected {
        let b = brandt(n, p)?;
        let got = mu(&b).map_err(|e| e.to_string())?;
        ensure!(got == big(v), "mu_{n}({p}) = {got}, expected {v}");
        let report = verify_brandt(&b).map_err(|e| e.to_string())?;
        ensure!(
            !report.discrepancies.iter().any(|d| d.id == "mu.printed"),
            "({n},{p}) flagged although it matches"
        );
    }

    // (37, 29): agreement up to sign, flagged
    let b = brandt(37, 29)?;
    let got = mu(&b).map_err(|e| e.to_string())?;
    let printed = eigenform_fixture(37)
        .and_then(|f| f.column(29).map(|c| c.printed_mu.clone()))
        .ok_or("no recorded value for (37,29)")?;
    ensure!(got.magnitude() == printed.magnitude(), "|mu_37(29)| = {got}, recorded {printed}");
    ensure!(got != printed, "(37,29) unexpectedly agrees in sign");
    let report = verify_brandt(&b).map_err(|e| e.to_string())?;
    let d = report
        .discrepancies
        .iter()
        .find(|d| d.id == "mu.printed")
        .ok_or("(37,29) sign not flagged")?;
    ensure!(d.recorded != d.computed, "(37,29) flag carries equal values");

    // (61, 19): both numbers reported
    let b = brandt(61, 19)?;
    let got = mu(&b).map_err(|e| e.to_string())?;
    let report = verify_brandt(&b).map_err(|e| e.to_string())?;
    let d = report
        .discrepancies
        .iter()
        .find(|d| d.id == "mu.printed")
        .ok_or("(61,19) not flagged")?;
    let printed = eigenform_fixture(61)
        .and_then(|f| f.column(19).map(|c| c.printed_mu.clone()))
        .ok_or("no recorded value for (61,19)")?;
    ensure!(
        d.recorded == serde_json::json!(printed.to_string().parse::<i64>().unwrap()),
        "(61,19) recorded value {}",
        d.recorded
    );
    ensure!(
        d.computed == serde_json::json!(got.to_string().parse::<i64>().unwrap()),
        "(61,19) computed value {}",
        d.computed
    );
    ensure!(got != printed, "(61,19) unexpectedly agrees");
    Ok(())
}

fn c6_divisibility() -> Outcome {
    let mut checked = 0;
    for level in [37u64, 61, 73] {
        let n = supersingular_locus(level).map_err(|e| e.to_string())?.len() as u64;
        for p in primes_to(29).filter(|&p| p != level && (p + 1) % n == 0) {
            let m = mu(&brandt(level, p)?).map_err(|e| e.to_string())?;
            ensure!(m.is_multiple_of(&BigInt::from(n)), "{n} does not divide mu_{level}({p}) = {m}");
            checked += 1;
        }
    }
    ensure!(checked >= 12, "only {checked} cases");
    Ok(())
}

fn c7_reciprocity() -> Outcome {
    for (n, p) in RECIPROCITY_PAIRS {
        let b = brandt(n, p)?;
        let w = hasse_weil_zeta(&b).map_err(|e| e.to_string())?;
        let z = formal_ihara_zeta(b.matrix()).map_err(|e| e.to_string())?;
        let size = b.size() as u64;
        ensure!((size * (p - 1)) % 2 == 0, "({n},{p}) exponent not integral");
        let e = (size * (p - 1) / 2) as u32;
        let one_t = IntPolynomial::from_i64s(&[1, -1]);
        let one_pt = IntPolynomial::new(vec![BigInt::one(), -BigInt::from(p)]);
        let one_t2 = IntPolynomial::from_i64s(&[1, 0, -1]);
        let den = &(&one_t.pow(2) * &one_pt.pow(2)) * &one_t2.pow(e);
        let rhs = ratfun_normalize(IntPolynomial::one(), den).map_err(|e| e.to_string())?;
        ensure!(w.zeta() * z.zeta() == rhs, "({n},{p}) W Z != rhs");
        let report = verify_brandt(&b).map_err(|e| e.to_string())?;
        ensure!(report.status(ids::RECIPROCITY) == Some(ClaimStatus::Pass), "({n},{p}) claim not passing");
    }
    Ok(())
}

fn c8_limit_and_triangle() -> Outcome {
    let b = brandt(37, 5)?;
    let w = hasse_weil_zeta(&b).map_err(|e| e.to_string())?;
    let tau = brandt_tree_count(&b).map_err(|e| e.to_string())?;
    ensure!(tau == big(16), "tau = {tau}");
    let listed = eigenform_fixture(37)
        .and_then(|f| f.column(5).cloned())
        .ok_or("no eigenvalues for (37,5)")?;
    let from_eigenvalues = listed
        .hecke_polynomial()
        .map_err(|e| e.to_string())?
        .eval(&big(6));
    let at_one = hecke_charpoly_s2(&b).map_err(|e| e.to_string())?.eval(&BigInt::one());
    let n_tau = BigInt::from(b.size()) * &tau;
    ensure!(
        from_eigenvalues == big(48) && at_one == big(48) && n_tau == big(48),
        "prod = {from_eigenvalues}, P(1) = {at_one}, n tau = {n_tau}"
    );
    let residue = w.residue_at_one().map_err(|e| e.to_string())?;
    ensure!(residue == BigRational::from_integer(big(12)), "limit = {residue}");

    for (n, p) in RECIPROCITY_PAIRS {
        let b = brandt(n, p)?;
        let tau = brandt_tree_count(&b).map_err(|e| e.to_string())?;
        let n_tau = BigInt::from(b.size()) * &tau;
        let at_one = hecke_charpoly_s2(&b).map_err(|e| e.to_string())?.eval(&BigInt::one());
        let h = cusp_eigenvalue_polynomial(&b).map_err(|e| e.to_string())?;
        let prod = h.eval(&BigInt::from(p + 1));
        ensure!(at_one == n_tau && prod == n_tau, "({n},{p}): {prod}, {at_one}, {n_tau}");
        let report = verify_brandt(&b).map_err(|e| e.to_string())?;
        ensure!(report.status(ids::TRIANGLE) == Some(ClaimStatus::Pass), "({n},{p}) triangle claim");
        ensure!(report.status(ids::LIMIT) == Some(ClaimStatus::Pass), "({n},{p}) limit claim");
    }
    Ok(())
}

fn c9_ramanujan() -> Outcome {
    let mut certified = 0;
    for (n, p) in RECIPROCITY_PAIRS {
        let b = brandt(n, p)?;
        if validate_brandt(&b).status(ids::PARITY) == Some(ClaimStatus::Pass) {
            let g = brandt_graph(&b).map_err(|e| e.to_string())?;
            let v = ramanujan_certificate(&g).map_err(|e| e.to_string())?;
            ensure!(
                v.is_connected && !v.is_bipartite && v.is_ramanujan && v.degree == p as usize + 1,
                "G_{n}({p}): {v:?}"
            );
            certified += 1;
        }
        let w = hasse_weil_zeta(&b).map_err(|e| e.to_string())?;
        let window = w.weil_window().map_err(|e| e.to_string())?;
        ensure!(window.passes(), "({n},{p}) Weil window: {:?}", window.census);
        let report = verify_brandt(&b).map_err(|e| e.to_string())?;
        ensure!(report.status(ids::WEIL_WINDOW) == Some(ClaimStatus::Pass), "({n},{p}) window claim");
        ensure!(report.status(ids::RAMANUJAN) == Some(ClaimStatus::Pass), "({n},{p}) Ramanujan claim");
    }
    println!("    graph certificates issued for {certified} of {} pairs", RECIPROCITY_PAIRS.len());
    Ok(())
}

/// `(sqrt p + s)^{2e}` as `a + b sqrt p`.
fn power_bound(p: u64, s: i64, e: usize) -> QuadraticBound {
    let pb = BigInt::from(p);
    let (mut a, mut b) = (BigInt::one(), BigInt::from(0));
    for _ in 0..2 * e {
        // (a + b sqrt p)(s + sqrt p)
        let na = &a * s + &b * &pb;
        let nb = &a + &b * s;
        a = na;
        b = nb;
    }
    QuadraticBound::new(BigRational::from_integer(a), BigRational::from_integer(b), pb)
}

fn c10_tree_bounds() -> Outcome {
    for (n, p) in RECIPROCITY_PAIRS {
        let b = brandt(n, p)?;
        let size = b.size();
        let tau = brandt_tree_count(&b).map_err(|e| e.to_string())?;
        let x = QuadraticBound::rational(BigRational::from_integer(BigInt::from(size) * &tau));
        let lo = power_bound(p, -1, size - 1);
        let hi = power_bound(p, 1, size - 1);
        ensure!(lo <= x && x <= hi, "({n},{p}): tau = {tau} outside bounds");
        println!(
            "    ({n},{p}): {:.4} <= tau = {tau} <= {:.4}",
            lo.approx() / size as f64,
            hi.approx() / size as f64
        );
        let report = verify_brandt(&b).map_err(|e| e.to_string())?;
        ensure!(report.status(ids::TREE_BOUNDS) == Some(ClaimStatus::Pass), "({n},{p}) bound claim");
    }
    Ok(())
}

fn c11_validator() -> Outcome {
    let mut reports = 0;
    let mut odd = 0;
    for n in [13u64, 37, 61, 73] {
        for p in primes_to(29).filter(|&p| p != n) {
            let b = brandt(n, p)?;
            let r = validate_brandt(&b);
            ensure!(r.characteristic == n && r.p == p, "({n},{p}) header");
            for id in [ids::SYMMETRIC, ids::ROW_SUMS, ids::PARITY] {
                ensure!(r.claim(id).is_some(), "({n},{p}) missing {id}");
            }
            ensure!(r.status(ids::SYMMETRIC) == Some(ClaimStatus::Pass), "({n},{p}) asymmetric");
            ensure!(r.status(ids::ROW_SUMS) == Some(ClaimStatus::Pass), "({n},{p}) row sums");
            // the parity claim must reflect the matrix, whatever it says
            let has_odd = (0..b.size()).any(|i| b.matrix().get(i, i).is_odd());
            let parity = r.status(ids::PARITY).unwrap();
            ensure!(parity == ClaimStatus::from_bool(!has_odd), "({n},{p}) parity claim dishonest");
            odd += has_odd as usize;
            let json: serde_json::Value = serde_json::from_str(&r.to_json()).map_err(|e| e.to_string())?;
            ensure!(json["claims"].as_array().map_or(0, Vec::len) == 3, "({n},{p}) json claims");
            reports += 1;
        }
    }
    ensure!(reports == 39, "{reports} reports");
    println!("    {reports} reports, {odd} with an odd diagonal entry");

    let b = brandt(13, 2)?;
    ensure!(*b.matrix().get(0, 0) == big(3), "b_11 = {}", b.matrix().get(0, 0));
    let r = validate_brandt(&b);
    let c = r.claim(ids::PARITY).unwrap();
    ensure!(c.status == ClaimStatus::Fail, "(13,2) parity not failing");
    ensure!(c.found == Some(serde_json::json!([[0, 3]])), "(13,2) finding {:?}", c.found);
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("complexity of the four-vertex example", c1_complexity),
        ("supersingular counts", c2_locus),
        ("zeta oracle equivalence", c3_zeta_oracles),
        ("Brandt cross-oracle and row sums", c4_brandt_cross_oracle),
        ("mu table", c5_table),
        ("divisibility", c6_divisibility),
        ("reciprocity", c7_reciprocity),
        ("limit formula and triangle identity", c8_limit_and_triangle),
        ("Ramanujan certification and Weil window", c9_ramanujan),
        ("spanning tree bounds", c10_tree_bounds),
        ("Brandt validator reports", c11_validator),
    ];
    panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panic: {msg}"))
            });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {name} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
