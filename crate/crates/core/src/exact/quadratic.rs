//! Exact real numbers of the form `a + b*sqrt(d)` with rational `a, b`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::IntPolynomial;

#[derive(Clone)]
pub struct QuadraticBound {
    rational: BigRational,
    surd: BigRational,
    radicand: BigInt,
}

impl QuadraticBound {
    /// `a + b sqrt(d)`; panics if `d < 0`.
    pub fn new(rational: BigRational, surd: BigRational, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "radicand must be non-negative");
        QuadraticBound {
            rational,
            surd,
            radicand,
        }
    }

    pub fn rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero(), BigInt::zero())
    }

    pub fn integer(v: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `b * sqrt(d)` with integer `b`.
    pub fn surd(b: i64, d: i64) -> Self {
        Self::new(
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(b)),
            BigInt::from(d),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.rational, -&self.surd, self.radicand.clone())
    }

    /// Exact sign of `a + b sqrt(d)`.
    pub fn signum(&self) -> Ordering {
        quad_sign(&self.rational, &self.surd, &self.radicand)
    }

    /// Exact sign of `f(self)`.
    pub fn sign_of(&self, f: &IntPolynomial) -> Ordering {
        let (x, y) = eval_in_quadratic_field(f, &self.rational, &self.surd, &self.radicand);
        quad_sign(&x, &y, &self.radicand)
    }

    /// Floating approximation for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.surd.to_f64().unwrap_or(f64::NAN);
        let d = self.radicand.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

/// Sign of `a + b sqrt(d)` for rational `a, b` and `d >= 0`.
pub fn quad_sign(a: &BigRational, b: &BigRational, d: &BigInt) -> Ordering {
    let sa = a.cmp(&BigRational::zero());
    let sb = if d.is_zero() {
        Ordering::Equal
    } else {
        b.cmp(&BigRational::zero())
    };
    match (sa, sb) {
        (s, Ordering::Equal) => s,
        (Ordering::Equal, s) => s,
        (x, y) if x == y => x,
        // opposite signs: compare a^2 with b^2 d
        (sa, _) => {
            let lhs = a * a;
            let rhs = b * b * BigRational::from_integer(d.clone());
            match lhs.cmp(&rhs) {
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

/// Horner evaluation in `Q(sqrt d)`: returns `(x, y)` with `f(a + b sqrt d) = x + y sqrt d`.
fn eval_in_quadratic_field(
    f: &IntPolynomial,
    a: &BigRational,
    b: &BigRational,
    d: &BigInt,
) -> (BigRational, BigRational) {
    let d = BigRational::from_integer(d.clone());
    let mut x = BigRational::zero();
    let mut y = BigRational::zero();
    for c in f.coeffs().iter().rev() {
        let nx = &x * a + &y * b * &d + BigRational::from_integer(c.clone());
        let ny = &x * b + &y * a;
        x = nx;
        y = ny;
    }
    (x, y)
}

impl PartialEq for QuadraticBound {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for QuadraticBound {}

impl PartialOrd for QuadraticBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticBound {
    /// Exact comparison, also across different radicands.
    fn cmp(&self, other: &Self) -> Ordering {
        // sign of (a1 - a2) + b1 sqrt d1 - b2 sqrt d2 = p - q
        let a = &self.rational - &other.rational;
        let p_sign = quad_sign(&a, &self.surd, &self.radicand);
        let q_sign = quad_sign(&BigRational::zero(), &other.surd, &other.radicand);
        match (p_sign, q_sign) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s.reverse(),
            (Ordering::Greater, Ordering::Less) => Ordering::Greater,
            (Ordering::Less, Ordering::Greater) => Ordering::Less,
            (s, _) => {
                // same sign: compare p^2 with q^2
                let d1 = BigRational::from_integer(self.radicand.clone());
                let p2_rat = &a * &a + &self.surd * &self.surd * &d1;
                let p2_surd = BigRational::from_integer(BigInt::from(2)) * &a * &self.surd;
                let q2 = &other.surd * &other.surd * BigRational::from_integer(other.radicand.clone());
                let diff = quad_sign(&(p2_rat - q2), &p2_surd, &self.radicand);
                match diff {
                    Ordering::Equal => Ordering::Equal,
                    // |p| > |q|
                    Ordering::Greater => s,
                    Ordering::Less => s.reverse(),
                }
            }
        }
    }
}

impl fmt::Display for QuadraticBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() || self.radicand.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "{}*sqrt({})", self.surd, self.radicand)
        } else {
            let sign = if self.surd.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {}*sqrt({})", self.rational, self.surd.abs(), self.radicand)
        }
    }
}

impl fmt::Debug for QuadraticBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticBound({self})")
    }
}
