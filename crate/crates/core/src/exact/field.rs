//! Prime fields `F_N` and their quadratic extensions `F_N[g]/(g^2 - r)`.
//!
//! Elements are pairs `(a, b)` meaning `a + b*g`, reduced into `0..N`. The
//! ordering of elements is lexicographic on `(a, b)`, which fixes the vertex
//! order of every Brandt matrix built on top of this module.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Deterministic trial-division primality check.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    characteristic: u64,
    degree: u32,
    nonresidue: u64,
}

impl Field {
    pub fn new(characteristic: u64, degree: u32) -> Result<Self> {
        if characteristic >= 1 << 32 {
            return Err(Error::ModulusTooLarge(characteristic));
        }
        if !is_prime(characteristic) {
            return Err(Error::CompositeModulus(characteristic));
        }
        let nonresidue = match degree {
            1 => 0,
            2 => {
                if characteristic == 2 {
                    // F_4 = F_2[g]/(g^2 + g + 1) is not of the form g^2 = r.
                    return Err(Error::EvenCharacteristic(2));
                }
                least_nonresidue(characteristic)
            }
            d => return Err(Error::UnsupportedDegree(d)),
        };
        Ok(Field {
            characteristic,
            degree,
            nonresidue,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `g^2` for the extension generator; 0 for a prime field.
    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    pub fn order(&self) -> u64 {
        self.characteristic.pow(self.degree)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { a: 0, b: 0, field: *self }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        FieldElement {
            a: v % self.characteristic,
            b: 0,
            field: *self,
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        let n = self.characteristic as i64;
        self.from_u64(v.rem_euclid(n) as u64)
    }

    pub fn from_bigint(&self, v: &num_bigint::BigInt) -> FieldElement {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let n = num_bigint::BigInt::from(self.characteristic);
        let r = v.mod_floor(&n).to_u64().expect("residue fits in u64");
        self.from_u64(r)
    }

    /// Element `a + b*g`; `b` must be zero for a prime field.
    pub fn element(&self, a: u64, b: u64) -> Result<FieldElement> {
        let b = b % self.characteristic;
        if self.degree == 1 && b != 0 {
            return Err(Error::InternalInconsistency(
                "prime field element with non-zero g coordinate".into(),
            ));
        }
        Ok(FieldElement {
            a: a % self.characteristic,
            b,
            field: *self,
        })
    }

    /// The generator `g` of the quadratic extension.
    pub fn generator(&self) -> Option<FieldElement> {
        (self.degree == 2).then_some(FieldElement { a: 0, b: 1, field: *self })
    }

    /// All elements in canonical `(a, b)` order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let n = self.characteristic;
        let bs = if self.degree == 2 { n } else { 1 };
        let field = *self;
        (0..n).flat_map(move |a| (0..bs).map(move |b| FieldElement { a, b, field }))
    }
}

fn least_nonresidue(n: u64) -> u64 {
    let mut is_square = vec![false; n as usize];
    for x in 1..n {
        is_square[(x * x % n) as usize] = true;
    }
    (1..n)
        .find(|&r| !is_square[r as usize])
        .expect("odd prime has a non-residue")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: u64,
    b: u64,
    field: Field,
}

impl FieldElement {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field.characteristic;
        // (a + bg)^{-1} = (a - bg) / (a^2 - r b^2)
        let norm = (self.a * self.a % n + n - self.b * self.b % n * self.field.nonresidue % n) % n;
        let inv = pow_mod(norm, n - 2, n);
        Ok(FieldElement {
            a: self.a * inv % n,
            b: (n - self.b) % n * inv % n,
            field: self.field,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(*self * other.inverse()?)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "g"),
            (0, b) => write!(f, "{b}g"),
            (a, 1) => write!(f, "{a}+g"),
            (a, b) => write!(f, "{a}+{b}g"),
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b).cmp(&(other.a, other.b))
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.field, rhs.field);
        let n = self.field.characteristic;
        FieldElement {
            a: (self.a + rhs.a) % n,
            b: (self.b + rhs.b) % n,
            field: self.field,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let n = self.field.characteristic;
        FieldElement {
            a: (n - self.a) % n,
            b: (n - self.b) % n,
            field: self.field,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.field, rhs.field);
        let n = self.field.characteristic;
        let r = self.field.nonresidue;
        let ac = self.a * rhs.a % n;
        let bd = self.b * rhs.b % n;
        FieldElement {
            a: (ac + bd * r % n) % n,
            b: (self.a * rhs.b % n + self.b * rhs.a % n) % n,
            field: self.field,
        }
    }
}

/// Dense univariate polynomial over a [`Field`], lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl FieldPoly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FieldPoly { field, coeffs }
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    /// Synthetic division by `(x - r)`; returns the quotient when `r` is a root.
    pub fn deflate(&self, r: FieldElement) -> Option<FieldPoly> {
        if self.is_zero() {
            return None;
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![self.field.zero(); d];
        let mut carry = self.field.zero();
        for i in (0..=d).rev() {
            let v = self.coeffs[i] + carry * r;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                quotient[i - 1] = v;
            }
            carry = v;
        }
        Some(FieldPoly::new(self.field, quotient))
    }

    /// Multiplicity of `r` as a root, by repeated exact deflation.
    pub fn root_multiplicity(&self, r: FieldElement) -> usize {
        let mut count = 0;
        let mut current = self.clone();
        while let Some(q) = current.deflate(r) {
            count += 1;
            current = q;
        }
        count
    }
}

/// Roots of `f` in its field with multiplicities, found by evaluating at every element.
pub fn poly_roots(f: &FieldPoly) -> Result<Vec<(FieldElement, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let mut remaining = f.clone();
    for x in f.field.elements() {
        if remaining.degree() == Some(0) {
            break;
        }
        if remaining.eval(x).is_zero() {
            let mut m = 0;
            while let Some(q) = remaining.deflate(x) {
                m += 1;
                remaining = q;
            }
            out.push((x, m));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_addition_wraps() {
        let f = Field::new(13, 1).unwrap();
        assert_eq!(f.from_u64(5) + f.from_u64(9), f.one());
    }

    #[test]
    fn least_nonresidue_mod_13_is_2() {
        let squares: Vec<u64> = {
            let mut s: Vec<u64> = (1..13u64).map(|x| x * x % 13).collect();
            s.sort();
            s.dedup();
            s
        };
        assert_eq!(squares, vec![1, 3, 4, 9, 10, 12]);
        assert_eq!(Field::new(13, 2).unwrap().nonresidue(), 2);
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(Field::new(12, 1), Err(Error::CompositeModulus(12)));
        assert_eq!(Field::new(1, 2), Err(Error::CompositeModulus(1)));
        assert_eq!(Field::new(13, 3), Err(Error::UnsupportedDegree(3)));
    }

    #[test]
    fn extension_arithmetic() {
        let f = Field::new(13, 2).unwrap();
        let g = f.generator().unwrap();
        assert_eq!(g * g, f.from_u64(2));
        for x in f.elements().filter(|x| !x.is_zero()) {
            assert!((x * x.inverse().unwrap()).is_one(), "{x:?}");
        }
        // Frobenius fixes exactly the prime subfield.
        let fixed = f.elements().filter(|x| x.pow(13) == *x).count();
        assert_eq!(fixed, 13);
        assert_eq!(f.elements().count(), 169);
    }

    #[test]
    fn roots_examples() {
        let f13 = Field::new(13, 1).unwrap();
        let x2p1 = FieldPoly::from_i64s(f13, &[1, 0, 1]);
        let roots: Vec<_> = poly_roots(&x2p1)
            .unwrap()
            .into_iter()
            .map(|(r, m)| (r.coords().0, m))
            .collect();
        assert_eq!(roots, vec![(5, 1), (8, 1)]);

        let x2 = FieldPoly::from_i64s(f13, &[0, 0, 1]);
        assert_eq!(poly_roots(&x2).unwrap(), vec![(f13.zero(), 2)]);

        let x2m2 = FieldPoly::from_i64s(f13, &[-2, 0, 1]);
        assert!(poly_roots(&x2m2).unwrap().is_empty());

        // 2 becomes a square in F_169.
        let f169 = Field::new(13, 2).unwrap();
        let x2m2 = FieldPoly::from_i64s(f169, &[-2, 0, 1]);
        assert_eq!(poly_roots(&x2m2).unwrap().len(), 2);

        assert_eq!(
            poly_roots(&FieldPoly::new(f13, vec![])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn multiplicity_by_deflation() {
        let f = Field::new(7, 1).unwrap();
        // (x-3)^3 (x+1)
        let p = FieldPoly::from_i64s(f, &[-27, 27, -9, 1]);
        let q = FieldPoly::new(
            f,
            vec![
                p.coeffs()[0],
                p.coeffs()[0] + p.coeffs()[1],
                p.coeffs()[1] + p.coeffs()[2],
                p.coeffs()[2] + p.coeffs()[3],
                p.coeffs()[3],
            ],
        );
        assert_eq!(q.root_multiplicity(f.from_u64(3)), 3);
        assert_eq!(q.root_multiplicity(f.from_i64(-1)), 1);
        assert_eq!(q.root_multiplicity(f.from_u64(2)), 0);
    }
}
