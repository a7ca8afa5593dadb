//! Sturm sequences with exact sign evaluation at quadratic irrationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use super::quadratic::QuadraticBound;
use crate::error::{Error, Result};

/// Sturm chain `f, f', -rem(f, f'), ...` kept primitive; each member is a
/// positive multiple of the classical rational Sturm sequence member.
pub fn sturm_chain(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![f.clone()];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.degree() == Some(0) {
            break;
        }
        // prem = lc(b)^k a mod b; dividing by |lc(b)|^k keeps the sign of the true remainder
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let k = da - db + 1;
        let r = a.pseudo_rem(b).expect("b non-zero");
        if r.is_zero() {
            break;
        }
        let flip = b.leading().unwrap().is_negative() && k % 2 == 1;
        let r = if flip { r } else { -&r };
        let c = r.content();
        chain.push(IntPolynomial::new(r.coeffs().iter().map(|x| x / &c).collect()));
    }
    chain
}

fn sign_variations(chain: &[IntPolynomial], x: &QuadraticBound) -> usize {
    let signs: Vec<Ordering> = chain
        .iter()
        .map(|p| x.sign_of(p))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `f` in the closed interval `[lo, hi]`.
pub fn sturm_root_count(f: &IntPolynomial, lo: &QuadraticBound, hi: &QuadraticBound) -> Result<usize> {
    if lo > hi {
        return Err(Error::InvalidInterval);
    }
    let g = f.squarefree_part()?;
    if g.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&g);
    // V(lo) - V(hi) counts roots in (lo, hi] for squarefree g.
    let mut count = sign_variations(&chain, lo) - sign_variations(&chain, hi);
    if lo.sign_of(&g) == Ordering::Equal {
        count += 1;
    }
    Ok(count)
}

/// `1 + max |c_i / c_n|`: every real root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &IntPolynomial) -> Result<BigRational> {
    let lead = f.leading().ok_or(Error::ZeroPolynomial)?.abs();
    let n = f.coeffs().len() - 1;
    let max = f.coeffs()[..n]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(BigRational::zero);
    Ok(max + BigRational::one())
}

/// Number of distinct real roots.
pub fn real_root_count(f: &IntPolynomial) -> Result<usize> {
    let b = cauchy_bound(f)?;
    sturm_root_count(f, &QuadraticBound::rational(-b.clone()), &QuadraticBound::rational(b))
}

/// Counts of roots inside a closed window, weighted by multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCount {
    pub degree: usize,
    pub real_with_multiplicity: usize,
    pub inside_with_multiplicity: usize,
}

impl WindowCount {
    pub fn all_real_and_inside(&self) -> bool {
        self.inside_with_multiplicity == self.degree
    }

    pub fn outside(&self) -> usize {
        self.degree - self.inside_with_multiplicity
    }
}

/// Root census of `f` against `[lo, hi]` using the square-free decomposition.
pub fn window_count(f: &IntPolynomial, lo: &QuadraticBound, hi: &QuadraticBound) -> Result<WindowCount> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut real = 0;
    let mut inside = 0;
    for (i, part) in f.squarefree_decomposition()?.iter().enumerate() {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mult = i + 1;
        real += mult * real_root_count(part)?;
        inside += mult * sturm_root_count(part, lo, hi)?;
    }
    Ok(WindowCount {
        degree,
        real_with_multiplicity: real,
        inside_with_multiplicity: inside,
    })
}

/// `[-c sqrt(d), c sqrt(d)]`
pub fn symmetric_window(c: i64, d: u64) -> (QuadraticBound, QuadraticBound) {
    let hi = QuadraticBound::new(
        BigRational::zero(),
        BigRational::from_integer(BigInt::from(c)),
        BigInt::from(d),
    );
    (hi.neg(), hi)
}
