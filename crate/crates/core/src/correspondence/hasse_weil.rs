use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arithmetic::BrandtMatrix;
use crate::error::{Error, Result};
use crate::exact::sturm::symmetric_window;
use crate::exact::{
    charpoly_berkowitz, det_int, ratfun_normalize, three_term_det, window_count, IntPolynomial,
    RationalFunction, WindowCount,
};

fn one_minus_ct(c: u64) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(), -BigInt::from(c)])
}

/// `det[1 - B t + p t^2]`.
pub fn brandt_three_term(b: &BrandtMatrix) -> Result<IntPolynomial> {
    let q = vec![BigInt::from(b.p()); b.size()];
    three_term_det(b.matrix(), &q)
}

/// `det[1 - T_p t + p t^2 | S_2]`, i.e. `det[1 - B t + p t^2] / ((1 - t)(1 - p t))`.
pub fn hecke_charpoly_s2(b: &BrandtMatrix) -> Result<IntPolynomial> {
    let full = brandt_three_term(b)?;
    let eis = &one_minus_ct(1) * &one_minus_ct(b.p());
    full.exact_div(&eis)
}

/// `prod (x - a_p(f_i))` from the characteristic polynomial of `B`.
pub fn cusp_eigenvalue_polynomial(b: &BrandtMatrix) -> Result<IntPolynomial> {
    let cp = charpoly_berkowitz(b.matrix())?;
    cp.exact_div(&IntPolynomial::linear_root(BigInt::from(b.p() + 1)))
}

/// `mu = det B / (p + 1)`.
pub fn mu(b: &BrandtMatrix) -> Result<BigInt> {
    let det = det_int(b.matrix())?;
    let k = BigInt::from(b.p() + 1);
    let (q, r) = det.div_rem(&k);
    if !r.is_zero() {
        return Err(Error::ExactDivisionFailure(format!("det B = {det} is not divisible by {k}")));
    }
    Ok(q)
}

/// Recovers `h` of degree `g` from `P(t) = t^g h(1/t + p t)` by peeling off the
/// top coefficient: the `k`-th term contributes `h_k t^(g-k) (1 + p t^2)^k`,
/// whose leading coefficient is `h_k p^k` in degree `g + k`.
pub fn reciprocal_transform(numerator: &IntPolynomial, p: u64) -> Result<IntPolynomial> {
    let deg = numerator.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 != 0 {
        return Err(Error::ExactDivisionFailure(format!("odd degree {deg}")));
    }
    let g = deg / 2;
    let pb = BigInt::from(p);
    let base = IntPolynomial::new(vec![BigInt::one(), BigInt::zero(), pb.clone()]);
    let mut residual = numerator.clone();
    let mut h = vec![BigInt::zero(); g + 1];
    for k in (0..=g).rev() {
        let pk = pb.pow(k as u32);
        let (q, r) = residual.coeff(g + k).div_rem(&pk);
        if !r.is_zero() {
            return Err(Error::ExactDivisionFailure(format!(
                "coefficient of t^{} is not divisible by {pk}",
                g + k
            )));
        }
        let mut shift = vec![BigInt::zero(); g - k];
        shift.push(q.clone());
        let term = &IntPolynomial::new(shift) * &base.pow(k as u32);
        residual = &residual - &term;
        h[k] = q;
    }
    if !residual.is_zero() {
        return Err(Error::ExactDivisionFailure(
            "numerator is not of the form t^g h(1/t + p t)".into(),
        ));
    }
    Ok(IntPolynomial::new(h))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseWeilZeta {
    p: u64,
    numerator: IntPolynomial,
    zeta: RationalFunction,
}

impl HasseWeilZeta {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// `P(t) = det(1 - Fr_p t | H^1)`.
    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn zeta(&self) -> &RationalFunction {
        &self.zeta
    }

    pub fn genus(&self) -> usize {
        self.numerator.degree().unwrap_or(0) / 2
    }

    /// `#X(F_{p^m})` for `m = 1..=terms`, read off `t W'/W`.
    pub fn point_counts(&self, terms: usize) -> Result<Vec<BigInt>> {
        self.zeta
            .log_derivative_series(terms)?
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::InternalInconsistency(format!("non-integral point count {c}")))
                }
            })
            .collect()
    }

    /// Root census of `h` against `[-2 sqrt p, 2 sqrt p]`, where
    /// `P(t) = t^g h(1/t + p t)`; all roots inside means every inverse root of
    /// `P` has absolute value `sqrt p`.
    pub fn weil_window(&self) -> Result<WeilWindow> {
        let h = reciprocal_transform(&self.numerator, self.p)?;
        let census = if self.genus() == 0 {
            WindowCount {
                degree: 0,
                real_with_multiplicity: 0,
                inside_with_multiplicity: 0,
            }
        } else {
            let (lo, hi) = symmetric_window(2, self.p);
            window_count(&h, &lo, &hi)?
        };
        Ok(WeilWindow { h, census })
    }

    /// `lim_{t -> 1} (t - 1) W(t) = P(1) / (p - 1)`, evaluated on the
    /// normalized rational function `(t - 1) W(t)`.
    pub fn residue_at_one(&self) -> Result<num_rational::BigRational> {
        let t_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
        let scaled = ratfun_normalize(
            &t_minus_1 * self.zeta.numerator(),
            self.zeta.denominator().clone(),
        )?;
        scaled
            .eval(&num_rational::BigRational::one())
            .ok_or(Error::ZeroDenominator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilWindow {
    pub h: IntPolynomial,
    pub census: WindowCount,
}

impl WeilWindow {
    pub fn passes(&self) -> bool {
        self.census.all_real_and_inside()
    }
}

/// `W(t) = P(t) / ((1 - t)(1 - p t))`.
pub fn hasse_weil_zeta(b: &BrandtMatrix) -> Result<HasseWeilZeta> {
    let numerator = hecke_charpoly_s2(b)?;
    let den = &one_minus_ct(1) * &one_minus_ct(b.p());
    let zeta = ratfun_normalize(numerator.clone(), den)?;
    Ok(HasseWeilZeta {
        p: b.p(),
        numerator,
        zeta,
    })
}
