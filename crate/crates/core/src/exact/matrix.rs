use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{interpolate, IntPolynomial};
use crate::error::{Error, Result};

/// Dense integer matrix (row-major). May be rectangular; square-only
/// operations check their precondition.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMatrix {
    #[serde(with = "super::json_int::matrix")]
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::NonSquare {
                rows: rows.len(),
                cols: bad.len(),
            });
        }
        Ok(IntMatrix { rows })
    }

    pub fn from_i64s(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows.iter().all(|r| r.len() == self.rows.len())
    }

    pub fn check_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows.len())
        } else {
            Err(Error::NonSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            })
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.nrows();
        self.is_square() && (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.nrows().min(self.ncols()))
            .map(|i| self.rows[i][i].clone())
            .sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.nrows(), self.ncols());
        IntMatrix {
            rows: (0..c)
                .map(|j| (0..r).map(|i| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::NonSquare {
                rows: self.ncols(),
                cols: other.nrows(),
            });
        }
        let rows = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| {
                        (0..self.ncols())
                            .map(|k| &self.rows[i][k] * &other.rows[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(IntMatrix { rows })
    }

    /// `self - other` entrywise; shapes must agree.
    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        IntMatrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }

    pub fn scaled_identity_minus(&self, k: &BigInt) -> IntMatrix {
        let n = self.nrows();
        let mut m = self.clone();
        for i in 0..n {
            for j in 0..n {
                m.rows[i][j] = -&m.rows[i][j];
            }
            m.rows[i][i] += k;
        }
        m
    }

    /// Remove row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        IntMatrix {
            rows: self
                .rows
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != r)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect(),
        }
    }

    /// Simultaneous row/column permutation: `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permute(&self, perm: &[usize]) -> IntMatrix {
        IntMatrix {
            rows: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn to_i64s(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64()).collect())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_int(m: &IntMatrix) -> Result<BigInt> {
    let n = m.check_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.rows.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -d } else { d })
}

/// `det(x I - M)` by evaluating at `dim + 1` integer points and interpolating.
pub fn charpoly_int(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.check_square()?;
    let points = (0..=n as i64)
        .map(|x| {
            let x = BigInt::from(x);
            let v = det_int(&m.scaled_identity_minus(&x))?;
            Ok((x, v))
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}

/// `det(x I - M)` by Berkowitz's division-free algorithm.
///
/// Independent of [`charpoly_int`]; the two must agree bit for bit.
pub fn charpoly_berkowitz(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.check_square()?;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let a = &m.rows;
    // Coefficient vector of the running charpoly, highest degree first.
    let mut v: Vec<BigInt> = vec![BigInt::one(), -a[0][0].clone()];
    for r in 1..n {
        // Partition the leading (r+1)x(r+1) block as [[A, R], [C, a_rr]].
        let big_r: Vec<&BigInt> = (0..r).map(|j| &a[j][r]).collect();
        let c: Vec<&BigInt> = (0..r).map(|j| &a[r][j]).collect();
        // Toeplitz column: 1, -a_rr, -C R, -C A R, ..., -C A^{r-1} R
        let mut col = vec![BigInt::one(), -a[r][r].clone()];
        let mut w: Vec<BigInt> = big_r.iter().map(|x| (*x).clone()).collect();
        for _ in 0..r {
            let cw: BigInt = c.iter().zip(&w).map(|(x, y)| *x * y).sum();
            col.push(-cw);
            w = (0..r)
                .map(|i| (0..r).map(|k| &a[i][k] * &w[k]).sum())
                .collect();
        }
        // new v = T * v where T is lower-triangular Toeplitz of size (r+2)x(r+1)
        let mut nv = vec![BigInt::zero(); r + 2];
        for (i, out) in nv.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if i >= j && i - j < col.len() {
                    *out += &col[i - j] * vj;
                }
            }
        }
        v = nv;
    }
    v.reverse();
    Ok(IntPolynomial::new(v))
}

/// Determinant of a square matrix of integer polynomials, by evaluation at
/// enough integer points and interpolation.
pub fn det_poly_matrix(entries: &[Vec<IntPolynomial>]) -> Result<IntPolynomial> {
    let n = entries.len();
    if let Some(bad) = entries.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    let max_deg = entries
        .iter()
        .flatten()
        .filter_map(IntPolynomial::degree)
        .max()
        .unwrap_or(0);
    let bound = n * max_deg;
    let points = (0..=bound as i64)
        .map(|x| {
            let x = BigInt::from(x);
            let m = IntMatrix {
                rows: entries
                    .iter()
                    .map(|r| r.iter().map(|p| p.eval(&x)).collect())
                    .collect(),
            };
            Ok((x, det_int(&m)?))
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}

/// `det(I - M t + c t^2 I)`-style three-term determinant:
/// `det(I - A t + diag(q) t^2)` as a polynomial in `t`.
pub fn three_term_det(a: &IntMatrix, q: &[BigInt]) -> Result<IntPolynomial> {
    let n = a.check_square()?;
    let entries: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut c = vec![BigInt::zero(), -a.get(i, j).clone()];
                    if i == j {
                        c[0] = BigInt::one();
                        c.push(q[i].clone());
                    }
                    IntPolynomial::new(c)
                })
                .collect()
        })
        .collect();
    det_poly_matrix(&entries)
}
