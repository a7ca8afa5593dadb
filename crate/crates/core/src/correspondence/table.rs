use std::fmt::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::fixtures::eigenform_fixture;
use super::hasse_weil::mu;
use crate::arithmetic::{brandt_matrix, supersingular_locus, Method};
use crate::error::{Error, Result};
use crate::exact::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Computed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: u64,
    pub status: RowStatus,
    /// `trace B(p) - (p + 1)`, the sum of the `a_p(f_i)`.
    #[serde(with = "opt_int")]
    pub sum_ap: Option<BigInt>,
    #[serde(with = "opt_int")]
    pub mu: Option<BigInt>,
    /// `n | mu`, present when `n | p + 1`.
    pub n_divides_mu: Option<bool>,
    #[serde(with = "opt_int")]
    pub fixture_mu: Option<BigInt>,
    pub fixture_match: Option<bool>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

mod opt_int {
    use num_bigint::BigInt;
    use serde::Serializer;

    use crate::exact::json_int::JsonInt;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&JsonInt(x.clone())),
            None => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    #[serde(rename = "N")]
    pub characteristic: u64,
    pub n: usize,
    pub rows: Vec<TableRow>,
}

/// Odd primes `p <= p_max`, `p != N`, with `n | p + 1`.
pub fn table_primes(n_char: u64, n: usize, p_max: u64) -> Vec<u64> {
    (3..=p_max)
        .filter(|&p| is_prime(p) && p != n_char && (p + 1) % n as u64 == 0)
        .collect()
}

pub fn table_report(n_char: u64, primes: &[u64], data_dir: &Path) -> Result<TableReport> {
    let n = supersingular_locus(n_char)?.len();
    let fixture = eigenform_fixture(n_char);
    let mut rows = Vec::with_capacity(primes.len());
    for &p in primes {
        let fixture_mu = fixture
            .as_ref()
            .and_then(|f| f.column(p))
            .map(|c| c.printed_mu.clone());
        let b = match brandt_matrix(n_char, p, Method::ModPoly, data_dir) {
            Ok(b) => b,
            Err(Error::MissingModularPolynomial(_)) => {
                rows.push(TableRow {
                    p,
                    status: RowStatus::Skipped,
                    sum_ap: None,
                    mu: None,
                    n_divides_mu: None,
                    fixture_mu,
                    fixture_match: None,
                    note: format!("no modular polynomial for p = {p}"),
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        let sum_ap = b.matrix().trace() - BigInt::from(p + 1);
        let mu_value = mu(&b)?;
        let n_divides_mu =
            ((p + 1) % n as u64 == 0).then(|| mu_value.is_multiple_of(&BigInt::from(n)));
        let fixture_match = fixture_mu.as_ref().map(|f| *f == mu_value);
        let note = match (&fixture_mu, fixture_match) {
            (Some(f), Some(false)) => format!("recorded {f}, computed {mu_value}"),
            _ => String::new(),
        };
        rows.push(TableRow {
            p,
            status: RowStatus::Computed,
            sum_ap: Some(sum_ap),
            mu: Some(mu_value),
            n_divides_mu,
            fixture_mu,
            fixture_match,
            note,
        });
    }
    Ok(TableReport {
        characteristic: n_char,
        n,
        rows,
    })
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl TableReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,status,sum_ap,mu,n_divides_mu,fixture_mu,fixture_match\n");
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Computed => "computed",
                RowStatus::Skipped => "skipped",
            };
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.p,
                status,
                cell(&r.sum_ap),
                cell(&r.mu),
                cell(&r.n_divides_mu),
                cell(&r.fixture_mu),
                cell(&r.fixture_match)
            )
            .unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("N = {}, n = {}\n", self.characteristic, self.n);
        writeln!(out, "{:>5} {:>10} {:>12} {:>8} {:>12}", "p", "sum a_p", "mu", "n | mu", "recorded").unwrap();
        for r in &self.rows {
            let flag = match r.fixture_match {
                Some(false) => "  *",
                _ => "",
            };
            let div = match r.n_divides_mu {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "-",
            };
            if r.status == RowStatus::Skipped {
                writeln!(out, "{:>5} {:>10}  {}", r.p, "skipped", r.note).unwrap();
                continue;
            }
            writeln!(
                out,
                "{:>5} {:>10} {:>12} {:>8} {:>12}{}",
                r.p,
                cell(&r.sum_ap),
                cell(&r.mu),
                div,
                cell(&r.fixture_mu),
                flag
            )
            .unwrap();
        }
        if self.rows.iter().any(|r| r.fixture_match == Some(false)) {
            out.push_str("* recorded value differs from the computed one\n");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }
}
