use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Quotient of integer polynomials in canonical form.
///
/// Canonical means: `gcd(numerator, denominator)` is constant, the joint
/// content of both coefficient lists is 1, and the denominator has a positive
/// leading coefficient. Structural equality is then equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        ratfun_normalize(numerator, denominator)
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        ratfun_normalize(p, IntPolynomial::one()).expect("non-zero denominator")
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        ratfun_normalize(self.denominator.clone(), self.numerator.clone())
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        ratfun_normalize(base.numerator.pow(e), base.denominator.pow(e))
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let d = self.denominator.eval_rational(t);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval_rational(t) / d)
    }

    /// First `terms` coefficients of the Taylor expansion at 0 (`t^0` first).
    pub fn series(&self, terms: usize) -> Result<Vec<BigRational>> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let d0 = BigRational::from_integer(d0);
        let mut out: Vec<BigRational> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = BigRational::from_integer(self.numerator.coeff(k));
            for i in 1..=k {
                let di = self.denominator.coeff(i);
                if !di.is_zero() {
                    acc -= BigRational::from_integer(di) * &out[k - i];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// Coefficients `c_1, ..., c_terms` of `t * f'(t) / f(t)`.
    ///
    /// Requires `f(0)` finite and non-zero.
    pub fn log_derivative_series(&self, terms: usize) -> Result<Vec<BigRational>> {
        let t = IntPolynomial::x();
        // t f'/f = t (N' D - N D') / (N D)
        let n = &self.numerator;
        let d = &self.denominator;
        let top = &t * &(&(&n.derivative() * d) - &(n * &d.derivative()));
        let bottom = n * d;
        let ld = ratfun_normalize(top, bottom)?;
        let s = ld.series(terms + 1)?;
        Ok(s.into_iter().skip(1).collect())
    }
}

/// Bring `num/den` to canonical form.
pub fn ratfun_normalize(num: IntPolynomial, den: IntPolynomial) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RationalFunction {
            numerator: IntPolynomial::zero(),
            denominator: IntPolynomial::one(),
        });
    }
    let g = num.gcd(&den);
    let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
        (num.exact_div(&g)?, den.exact_div(&g)?)
    } else {
        (num, den)
    };
    let mut c = num.content().gcd(&den.content());
    if den.leading().unwrap().is_negative() {
        c = -c;
    }
    if !c.is_one() {
        num = IntPolynomial::new(num.coeffs().iter().map(|a| a / &c).collect());
        den = IntPolynomial::new(den.coeffs().iter().map(|a| a / &c).collect());
    }
    Ok(RationalFunction {
        numerator: num,
        denominator: den,
    })
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        ratfun_normalize(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
        .expect("product of non-zero denominators")
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        ratfun_normalize(
            &self.numerator * &rhs.denominator,
            &self.denominator * &rhs.numerator,
        )
    }
}

impl RationalFunction {
    /// `(num) / (den)` in variable `var`.
    pub fn display_in(&self, var: &str) -> String {
        let num = self.numerator.display_in(var);
        if self.denominator == IntPolynomial::one() {
            num.to_string()
        } else {
            format!("({num}) / ({})", self.denominator.display_in(var))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{self}]")
    }
}

/// Convenience for building `(1 - c t)` style factors.
pub fn one_minus(c: i64, power: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); power + 1];
    coeffs[0] = BigInt::one();
    coeffs[power] -= BigInt::from(c);
    IntPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalize_examples() {
        // (1-t^2)^2 / (1-t) = (1-t)(1+t)^2
        let r = ratfun_normalize(p(&[1, 0, -1]).pow(2), p(&[1, -1])).unwrap();
        assert_eq!(r.denominator(), &IntPolynomial::one());
        assert_eq!(r.numerator(), &(&p(&[1, -1]) * &p(&[1, 1]).pow(2)));

        let r = ratfun_normalize(IntPolynomial::zero(), p(&[1, -1])).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (&IntPolynomial::zero(), &IntPolynomial::one()));

        let r = ratfun_normalize(p(&[2, -2]), p(&[4, -4])).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (&p(&[1]), &p(&[2])));

        assert_eq!(
            ratfun_normalize(p(&[1]), IntPolynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn sign_convention() {
        let r = ratfun_normalize(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(r.numerator(), &p(&[-1]));
        assert_eq!(r.denominator(), &p(&[-1, 1]));
    }

    #[test]
    fn series_of_geometric() {
        let r = ratfun_normalize(p(&[1]), p(&[1, -2])).unwrap();
        let s: Vec<_> = r.series(5).unwrap().into_iter().map(|c| c.to_integer()).collect();
        assert_eq!(s, [1, 2, 4, 8, 16].map(BigInt::from));
    }

    #[test]
    fn log_derivative_of_cycle_zeta() {
        // Z = 1/(1-t^3)^2 has t Z'/Z = sum 6 t^{3k}
        let z = ratfun_normalize(p(&[1]), p(&[1, 0, 0, -1]).pow(2)).unwrap();
        let s: Vec<_> = z
            .log_derivative_series(7)
            .unwrap()
            .into_iter()
            .map(|c| c.to_integer())
            .collect();
        assert_eq!(s, [0, 0, 6, 0, 0, 6, 0].map(BigInt::from));
    }

    #[test]
    fn eval_and_powers() {
        let r = ratfun_normalize(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(r.eval(&BigRational::one()), None);
        assert_eq!(
            r.eval(&BigRational::from_integer(BigInt::from(3))),
            Some(BigRational::from_integer(BigInt::from(-2)))
        );
        assert_eq!(r.powi(-1).unwrap(), r.recip().unwrap());
        assert_eq!(&r.powi(2).unwrap() * &r.powi(-2).unwrap(), RationalFunction::from_polynomial(p(&[1])));
    }
}
