//! Curves `y^2 = x^3 + a2 x^2 + a4 x + a6` and Vélu's formulas for
//! 2-isogenies with kernel `{O, (x0, 0)}`.

use crate::error::{Error, Result};
use crate::exact::FieldElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShortCurve {
    pub a2: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
}

impl ShortCurve {
    /// `y^2 = x (x - 1) (x - lambda)`.
    pub fn legendre(lambda: FieldElement) -> Self {
        let f = lambda.field();
        ShortCurve {
            a2: -(f.one() + lambda),
            a4: lambda,
            a6: f.zero(),
        }
    }

    pub fn rhs(&self, x: FieldElement) -> FieldElement {
        ((x + self.a2) * x + self.a4) * x + self.a6
    }

    pub fn discriminant(&self) -> FieldElement {
        let (b2, b4, b6, b8) = self.b_invariants();
        let f = self.a2.field();
        let c = |v: i64| f.from_i64(v);
        -(b2 * b2 * b8) - c(8) * b4 * b4 * b4 - c(27) * b6 * b6 + c(9) * b2 * b4 * b6
    }

    fn b_invariants(&self) -> (FieldElement, FieldElement, FieldElement, FieldElement) {
        let f = self.a2.field();
        let c = |v: i64| f.from_i64(v);
        let b2 = c(4) * self.a2;
        let b4 = c(2) * self.a4;
        let b6 = c(4) * self.a6;
        let b8 = c(4) * self.a2 * self.a6 - self.a4 * self.a4;
        (b2, b4, b6, b8)
    }

    pub fn j_invariant(&self) -> Result<FieldElement> {
        let (b2, b4, _, _) = self.b_invariants();
        let c4 = b2 * b2 - self.a2.field().from_i64(24) * b4;
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(Error::ModelConstructionFailure("singular curve".into()));
        }
        (c4 * c4 * c4).div(&disc)
    }

    /// Codomain of the 2-isogeny with kernel generated by `(x0, 0)`.
    pub fn two_isogeny(&self, x0: FieldElement) -> Result<ShortCurve> {
        if !self.rhs(x0).is_zero() {
            return Err(Error::ModelConstructionFailure(format!(
                "({x0}, 0) is not a 2-torsion point"
            )));
        }
        let f = x0.field();
        let c = |v: i64| f.from_i64(v);
        let v = c(3) * x0 * x0 + c(2) * self.a2 * x0 + self.a4;
        let w = x0 * v;
        Ok(ShortCurve {
            a2: self.a2,
            a4: self.a4 - c(5) * v,
            a6: self.a6 - c(4) * self.a2 * v - c(7) * w,
        })
    }
}

/// j-invariants of the three 2-isogenous curves of the Legendre curve.
pub fn legendre_two_isogenous(lambda: FieldElement) -> Result<[FieldElement; 3]> {
    let f = lambda.field();
    let e = ShortCurve::legendre(lambda);
    let mut out = [f.zero(); 3];
    for (slot, x0) in out.iter_mut().zip([f.zero(), f.one(), lambda]) {
        *slot = e.two_isogeny(x0)?.j_invariant()?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::locus::legendre_to_j;
    use crate::exact::Field;

    #[test]
    fn legendre_j_matches_closed_form() {
        let f = Field::new(37, 2).unwrap();
        for lambda in f.elements().filter(|l| !l.is_zero() && !l.is_one()).take(200) {
            let e = ShortCurve::legendre(lambda);
            assert_eq!(e.j_invariant().unwrap(), legendre_to_j(lambda).unwrap());
        }
    }

    #[test]
    fn isogeny_over_rationals_mod_large_prime() {
        // y^2 = x^3 - x (j = 1728) has kernel (0,0) codomain y^2 = x^3 + 4x, j = 1728;
        // the kernels (+-1, 0) lead to j = 287496.
        let f = Field::new(1_000_003, 1).unwrap();
        let e = ShortCurve {
            a2: f.zero(),
            a4: f.from_i64(-1),
            a6: f.zero(),
        };
        assert_eq!(e.two_isogeny(f.zero()).unwrap().j_invariant().unwrap(), f.from_u64(1728));
        assert_eq!(e.two_isogeny(f.one()).unwrap().j_invariant().unwrap(), f.from_u64(287496));
        assert_eq!(
            e.two_isogeny(f.from_i64(-1)).unwrap().j_invariant().unwrap(),
            f.from_u64(287496)
        );
        assert!(e.two_isogeny(f.from_u64(2)).is_err());
    }
}
