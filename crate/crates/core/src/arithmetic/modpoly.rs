//! Classical modular polynomials `Phi_p(X, Y)` read from text files.
//!
//! File format, one record per line (blank lines and `#` comments ignored):
//!
//! ```text
//! p 2
//! a b c      # coefficient c of X^a Y^b, stored for a >= b
//! ```
//!
//! The coefficient of `X^b Y^a` is the same `c`; entries may be given for
//! both orders as long as they agree.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Field, FieldElement, FieldPoly};

pub const DATA_DIR_ENV: &str = "BRANDT_ZETA_DATA";
pub const DEFAULT_DATA_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/modpoly");

/// Flag, then `BRANDT_ZETA_DATA`, then the bundled data directory.
pub fn resolve_data_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => PathBuf::from(DEFAULT_DATA_DIR),
    }
}

pub fn modpoly_file_name(p: u64) -> String {
    format!("phi_{p}.txt")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPolynomial {
    level: u64,
    /// `(a, b) -> c` with `a >= b`.
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl ModularPolynomial {
    pub fn parse(text: &str, expected_level: u64) -> Result<Self> {
        let mut level = None;
        let mut coeffs: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::ParseError(format!("line {}: {msg}", lineno + 1));
            if level.is_none() {
                if fields.len() != 2 || fields[0] != "p" {
                    return Err(bad("expected header `p <prime>`"));
                }
                let p: u64 = fields[1].parse().map_err(|_| bad("level is not an integer"))?;
                if p != expected_level {
                    return Err(Error::LevelMismatch {
                        expected: expected_level,
                        found: p,
                    });
                }
                level = Some(p);
                continue;
            }
            if fields.len() != 3 {
                return Err(bad("expected `a b c`"));
            }
            let a: usize = fields[0].parse().map_err(|_| bad("bad exponent"))?;
            let b: usize = fields[1].parse().map_err(|_| bad("bad exponent"))?;
            let c: BigInt = fields[2].parse().map_err(|_| bad("bad coefficient"))?;
            let key = (a.max(b), a.min(b));
            match coeffs.get(&key) {
                Some(prev) if *prev != c => return Err(Error::SymmetryViolation(key.0, key.1)),
                Some(_) => {}
                None => {
                    if !c.is_zero() {
                        coeffs.insert(key, c);
                    }
                }
            }
        }
        let level = level.ok_or_else(|| Error::ParseError("missing header".into()))?;
        let p1 = level as usize + 1;
        if let Some((&(a, b), _)) = coeffs.iter().find(|((a, _), _)| *a > p1) {
            return Err(Error::MonicityViolation(format!(
                "term X^{a} Y^{b} exceeds degree {p1}"
            )));
        }
        match coeffs.get(&(p1, 0)) {
            Some(c) if c.is_one() => {}
            other => {
                return Err(Error::MonicityViolation(format!(
                    "coefficient of X^{p1} is {}",
                    other.cloned().unwrap_or_default()
                )))
            }
        }
        if let Some((&(a, b), _)) = coeffs.range((p1, 1)..).next() {
            return Err(Error::MonicityViolation(format!(
                "term X^{a} Y^{b} alongside X^{p1}"
            )));
        }
        Ok(ModularPolynomial { level, coeffs })
    }

    pub fn load(dir: &Path, p: u64) -> Result<Self> {
        let path = dir.join(modpoly_file_name(p));
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Err(Error::MissingModularPolynomial(p))
            }
            Err(e) => return Err(e.into()),
        };
        Self::parse(&text, p)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Integer coefficient of `X^a Y^b`.
    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.coeffs
            .get(&(a.max(b), a.min(b)))
            .cloned()
            .unwrap_or_default()
    }

    pub fn stored_terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn reduce(&self, field: Field) -> ReducedModularPolynomial {
        let d = self.level as usize + 2;
        let mut dense = vec![vec![field.zero(); d]; d];
        for (&(a, b), c) in &self.coeffs {
            let v = field.from_bigint(c);
            dense[a][b] = v;
            dense[b][a] = v;
        }
        ReducedModularPolynomial {
            level: self.level,
            field,
            dense,
        }
    }

    /// Text serialization in the file format, one term per stored pair.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.level);
        for (&(a, b), c) in &self.coeffs {
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }
}

/// `Phi_p` with coefficients reduced into a finite field.
#[derive(Debug, Clone)]
pub struct ReducedModularPolynomial {
    level: u64,
    field: Field,
    dense: Vec<Vec<FieldElement>>,
}

impl ReducedModularPolynomial {
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `Phi_p(x, Y)` as a polynomial in `Y`.
    pub fn specialize(&self, x: FieldElement) -> FieldPoly {
        let d = self.dense.len();
        let mut powers = Vec::with_capacity(d);
        let mut acc = self.field.one();
        for _ in 0..d {
            powers.push(acc);
            acc = acc * x;
        }
        let coeffs = (0..d)
            .map(|b| {
                (0..d).fold(self.field.zero(), |s, a| s + self.dense[a][b] * powers[a])
            })
            .collect();
        FieldPoly::new(self.field, coeffs)
    }

    pub fn eval(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.specialize(x).eval(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi2() -> ModularPolynomial {
        ModularPolynomial::load(Path::new(DEFAULT_DATA_DIR), 2).unwrap()
    }

    #[test]
    fn bundled_phi2_matches_known_coefficients() {
        let phi = phi2();
        let expect = |a, b, c: i64| assert_eq!(phi.coeff(a, b), BigInt::from(c), "({a},{b})");
        expect(3, 0, 1);
        expect(0, 3, 1);
        expect(2, 2, -1);
        expect(2, 1, 1488);
        expect(1, 2, 1488);
        expect(2, 0, -162000);
        expect(1, 1, 40773375);
        expect(1, 0, 8748000000);
        expect(0, 0, -157464000000000);
    }

    #[test]
    fn bundled_files_are_monic_and_consistent() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29] {
            let phi = ModularPolynomial::load(Path::new(DEFAULT_DATA_DIR), p).unwrap();
            assert_eq!(phi.level(), p);
            assert_eq!(phi.coeff(p as usize + 1, 0), BigInt::one());
        }
    }

    #[test]
    fn round_trip_text() {
        let phi = phi2();
        assert_eq!(ModularPolynomial::parse(&phi.to_text(), 2).unwrap(), phi);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            ModularPolynomial::parse("p 3\n4 0 1\n", 2),
            Err(Error::LevelMismatch { expected: 2, found: 3 })
        ));
        assert_eq!(
            ModularPolynomial::parse("p 2\n3 0 1\n1 0 5\n0 1 6\n", 2),
            Err(Error::SymmetryViolation(1, 0))
        );
        assert!(matches!(
            ModularPolynomial::parse("p 2\n3 0 2\n", 2),
            Err(Error::MonicityViolation(_))
        ));
        assert!(matches!(
            ModularPolynomial::parse("p 2\n4 0 1\n3 0 1\n", 2),
            Err(Error::MonicityViolation(_))
        ));
        assert!(matches!(
            ModularPolynomial::parse("3 0 1\n", 2),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(
            ModularPolynomial::parse("p 2\n3 0\n", 2),
            Err(Error::ParseError(_))
        ));
    }

    #[test]
    fn missing_file() {
        assert_eq!(
            ModularPolynomial::load(Path::new(DEFAULT_DATA_DIR), 101),
            Err(Error::MissingModularPolynomial(101))
        );
    }

    #[test]
    fn flag_beats_default() {
        let dir = PathBuf::from("/nonexistent");
        assert_eq!(resolve_data_dir(Some(&dir)), dir);
    }

    #[test]
    fn specialize_matches_integer_evaluation() {
        let phi = phi2();
        let f = Field::new(37, 2).unwrap();
        let red = phi.reduce(f);
        for (x, y) in [(3i64, 5i64), (0, 0), (8, 36)] {
            let mut total = BigInt::zero();
            for a in 0..4u32 {
                for b in 0..4u32 {
                    total += phi.coeff(a as usize, b as usize)
                        * BigInt::from(x).pow(a)
                        * BigInt::from(y).pow(b);
                }
            }
            assert_eq!(red.eval(f.from_i64(x), f.from_i64(y)), f.from_bigint(&total));
        }
    }
}
