use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{is_prime, Field, FieldElement, FieldPoly};

/// Supersingular j-invariants in characteristic `N`, sorted by their
/// canonical `(a, b)` encoding in `F_{N^2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersingularLocus {
    characteristic: u64,
    field: Field,
    j_invariants: Vec<FieldElement>,
    /// A Legendre parameter mapping to each j-invariant.
    lambdas: Vec<FieldElement>,
    weights: Vec<u64>,
}

impl SupersingularLocus {
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn j_invariants(&self) -> &[FieldElement] {
        &self.j_invariants
    }

    pub fn lambda_witnesses(&self) -> &[FieldElement] {
        &self.lambdas
    }

    /// `w_i = |Aut(E_i)| / 2`: 3 for `j = 0`, 2 for `j = 1728`, 1 otherwise.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.j_invariants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.j_invariants.is_empty()
    }

    pub fn index_of(&self, j: &FieldElement) -> Option<usize> {
        self.j_invariants.binary_search(j).ok()
    }

    pub fn coords(&self) -> Vec<(u64, u64)> {
        self.j_invariants.iter().map(FieldElement::coords).collect()
    }
}

/// `H_N(lambda) = sum_{i=0}^{m} binom(m, i)^2 lambda^i` over `F_N`, `m = (N-1)/2`.
pub fn hasse_polynomial(n: u64) -> Result<FieldPoly> {
    if n == 2 {
        return Err(Error::EvenCharacteristic(2));
    }
    let field = Field::new(n, 1)?;
    let m = (n - 1) / 2;
    let coeffs = (0..=m)
        .map(|i| {
            let b = binomial(BigInt::from(m), BigInt::from(i));
            field.from_bigint(&(&b * &b))
        })
        .collect();
    Ok(FieldPoly::new(field, coeffs))
}

/// `j = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)`.
pub fn legendre_to_j(lambda: FieldElement) -> Result<FieldElement> {
    let f = lambda.field();
    let one = f.one();
    if lambda.is_zero() || lambda == one {
        return Err(Error::SingularLambda);
    }
    let s = lambda * lambda - lambda + one;
    let num = f.from_u64(256) * s * s * s;
    let lm1 = lambda - one;
    let den = lambda * lambda * lm1 * lm1;
    num.div(&den)
}

/// Enumerates `F_{N^2}`, keeps the roots of the Hasse polynomial, and maps
/// them to j-invariants.
pub fn supersingular_locus(n: u64) -> Result<SupersingularLocus> {
    if !is_prime(n) {
        return Err(Error::CompositeModulus(n));
    }
    if n < 5 {
        return Err(Error::EvenCharacteristic(n));
    }
    let hasse = hasse_polynomial(n)?;
    let field = Field::new(n, 2)?;
    let lifted: Vec<FieldElement> = hasse
        .coeffs()
        .iter()
        .map(|c| field.from_u64(c.coords().0))
        .collect();
    let hasse = FieldPoly::new(field, lifted);
    let mut found: Vec<(FieldElement, FieldElement)> = Vec::new();
    for lambda in field.elements() {
        if lambda.is_zero() || lambda.is_one() {
            continue;
        }
        if hasse.eval(lambda).is_zero() {
            found.push((legendre_to_j(lambda)?, lambda));
        }
    }
    found.sort();
    found.dedup_by(|a, b| a.0 == b.0);
    let j0 = field.zero();
    let j1728 = field.from_u64(1728);
    let weights: Vec<u64> = found
        .iter()
        .map(|(j, _)| {
            if *j == j0 {
                3
            } else if *j == j1728 {
                2
            } else {
                1
            }
        })
        .collect();
    let locus = SupersingularLocus {
        characteristic: n,
        field,
        j_invariants: found.iter().map(|(j, _)| *j).collect(),
        lambdas: found.iter().map(|(_, l)| *l).collect(),
        weights,
    };
    if n % 12 == 1 {
        let expected = (n - 1) / 12;
        if locus.len() as u64 != expected {
            return Err(Error::MassFormulaViolation {
                expected,
                found: locus.len() as u64,
            });
        }
        if let Some(pos) = locus.weights.iter().position(|&w| w != 1) {
            return Err(Error::WeightNotOne(locus.j_invariants[pos].to_string()));
        }
    }
    Ok(locus)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocusJson {
    #[serde(rename = "N")]
    pub characteristic: u64,
    pub count: usize,
    pub j_invariants: Vec<(u64, u64)>,
    pub weights: Vec<u64>,
}

impl From<&SupersingularLocus> for LocusJson {
    fn from(l: &SupersingularLocus) -> Self {
        LocusJson {
            characteristic: l.characteristic,
            count: l.len(),
            j_invariants: l.coords(),
            weights: l.weights.clone(),
        }
    }
}
