use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::locus::{supersingular_locus, SupersingularLocus};
use super::modpoly::{ModularPolynomial, ReducedModularPolynomial};
use super::velu::legendre_two_isogenous;
use crate::error::{Error, Result};
use crate::exact::json_int::to_value;
use crate::exact::{is_prime, FieldElement, IntMatrix};
use crate::graph::{graph_from_adjacency, MultiGraph};
use crate::report::{Claim, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    ModPoly,
    Velu2,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "modpoly" => Ok(Method::ModPoly),
            "velu2" => Ok(Method::Velu2),
            other => Err(Error::ParseError(format!("unknown method {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrandtMatrix {
    characteristic: u64,
    p: u64,
    j_invariants: Vec<FieldElement>,
    matrix: IntMatrix,
}

impl BrandtMatrix {
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn j_invariants(&self) -> &[FieldElement] {
        &self.j_invariants
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.j_invariants.len()
    }

    pub fn to_json(&self) -> BrandtJson {
        BrandtJson {
            characteristic: self.characteristic,
            p: self.p,
            j_invariants: self.j_invariants.iter().map(|j| j.coords()).collect(),
            matrix: self.matrix.rows().to_vec(),
        }
    }

    /// Odd diagonal entries as `(index, b_ii)`.
    pub fn odd_diagonal(&self) -> Vec<(usize, u64)> {
        (0..self.size())
            .filter_map(|i| {
                let v = self.matrix.get(i, i).to_u64().unwrap_or(0);
                (v % 2 == 1).then_some((i, v))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrandtJson {
    #[serde(rename = "N")]
    pub characteristic: u64,
    pub p: u64,
    pub j_invariants: Vec<(u64, u64)>,
    #[serde(with = "crate::exact::json_int::matrix")]
    pub matrix: Vec<Vec<BigInt>>,
}

fn check_parameters(n: u64, p: u64, method: Method) -> Result<()> {
    if !is_prime(n) {
        return Err(Error::CompositeModulus(n));
    }
    if n % 12 != 1 {
        return Err(Error::NotCongruentOneMod12(n));
    }
    if !is_prime(p) {
        return Err(Error::CompositeModulus(p));
    }
    if p == n {
        return Err(Error::LevelEqualsCharacteristic(n));
    }
    if method == Method::Velu2 && p != 2 {
        return Err(Error::UnsupportedMethod(p));
    }
    Ok(())
}

/// `B(p)` over the supersingular locus in characteristic `N`.
///
/// `data_dir` is only read for [`Method::ModPoly`].
pub fn brandt_matrix(n: u64, p: u64, method: Method, data_dir: &Path) -> Result<BrandtMatrix> {
    check_parameters(n, p, method)?;
    let locus = supersingular_locus(n)?;
    match method {
        Method::ModPoly => {
            let phi = ModularPolynomial::load(data_dir, p)?;
            brandt_from_modpoly(&locus, &phi.reduce(locus.field()))
        }
        Method::Velu2 => brandt_via_velu2(&locus),
    }
}

/// `b_ij` is the multiplicity of `j_j` as a root of `Phi_p(j_i, Y)`.
pub fn brandt_from_modpoly(
    locus: &SupersingularLocus,
    phi: &ReducedModularPolynomial,
) -> Result<BrandtMatrix> {
    let p = phi.level();
    let n = locus.len();
    let js = locus.j_invariants();
    let mut m = IntMatrix::zeros(n);
    for (i, ji) in js.iter().enumerate() {
        let f = phi.specialize(*ji);
        let mut sum = 0u64;
        for (k, jk) in js.iter().enumerate() {
            let mult = f.root_multiplicity(*jk) as u64;
            sum += mult;
            m.set(i, k, BigInt::from(mult));
        }
        if sum != p + 1 {
            return Err(Error::RowSumViolation {
                row: i,
                sum,
                expected: p + 1,
            });
        }
    }
    Ok(BrandtMatrix {
        characteristic: locus.characteristic(),
        p,
        j_invariants: js.to_vec(),
        matrix: m,
    })
}

/// `B(2)` from the three 2-isogenies of each Legendre witness curve.
pub fn brandt_via_velu2(locus: &SupersingularLocus) -> Result<BrandtMatrix> {
    let n = locus.len();
    let mut counts = vec![vec![0u64; n]; n];
    for (i, lambda) in locus.lambda_witnesses().iter().enumerate() {
        for j in legendre_two_isogenous(*lambda)? {
            let k = locus.index_of(&j).ok_or_else(|| {
                Error::ModelConstructionFailure(format!(
                    "2-isogenous j-invariant {j} is not supersingular"
                ))
            })?;
            counts[i][k] += 1;
        }
    }
    let rows = counts
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    Ok(BrandtMatrix {
        characteristic: locus.characteristic(),
        p: 2,
        j_invariants: locus.j_invariants().to_vec(),
        matrix: IntMatrix::new(rows)?,
    })
}

/// Symmetry, row sums and diagonal parity of a Brandt matrix.
pub fn validate_brandt(b: &BrandtMatrix) -> VerificationReport {
    let mut report = VerificationReport::new(b.characteristic, b.p);
    let m = b.matrix();
    let asym: Vec<(usize, usize)> = (0..b.size())
        .flat_map(|i| (i + 1..b.size()).map(move |j| (i, j)))
        .filter(|&(i, j)| m.get(i, j) != m.get(j, i))
        .collect();
    report.push(
        Claim::check("prop3.1.symmetric", asym.is_empty()).with_values(json!([]), json!(asym)),
    );
    let expected = BigInt::from(b.p + 1);
    let sums: Vec<_> = m.row_sums().iter().map(to_value).collect();
    let ok = m.row_sums().iter().all(|s| *s == expected);
    report.push(
        Claim::check("prop3.1.row_sums", ok).with_values(to_value(&expected), json!(sums)),
    );
    let odd = b.odd_diagonal();
    report.push(
        Claim::check("prop3.1.parity", odd.is_empty())
            .with_values(json!([]), json!(odd))
            .with_detail(if odd.is_empty() {
                String::new()
            } else {
                "odd diagonal entries: no geometric realization".into()
            }),
    );
    report
}

/// The `(p+1)`-regular graph with adjacency matrix `B(p)`.
pub fn brandt_graph(b: &BrandtMatrix) -> Result<MultiGraph> {
    let odd = b.odd_diagonal();
    if !odd.is_empty() {
        return Err(Error::ParityObstruction(odd));
    }
    graph_from_adjacency(b.matrix())
}
