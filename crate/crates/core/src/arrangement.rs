//! Linear forms, arrangements, and the plain-text arrangement format.
//!
//! The format is line oriented:
//!
//! ```text
//! # optional comments
//! dim 2
//! 1 -1 0
//! 1 0 -1
//! 0 1 -1
//! ```
//!
//! Each row holds the `n + 1` coefficients of one form in the homogeneous
//! coordinates `x_1 .. x_{n+1}`. Coefficients are integers, fractions `p/q`,
//! or elements `a+bw` of `Q(w)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// A nonzero linear form, stored as the canonical representative of its
/// projective class: integer components, content 1, leading coefficient a
/// positive integer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    /// Canonicalizes `coeffs`; `None` when every coefficient is zero.
    pub fn new(coeffs: Vec<Scalar>) -> Option<Self> {
        canonicalize(&coeffs).map(|coeffs| Self { coeffs })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        dot(&self.coeffs, point)
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Scale to the primitive integral representative with positive leading
/// entry. Used for both forms and projective points.
pub(crate) fn canonicalize(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let lead = coeffs.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv().expect("nonzero");
    let scaled: Vec<Scalar> = coeffs.iter().map(|c| c * &inv).collect();
    let den = scaled.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let ints: Vec<(BigInt, BigInt)> = scaled.iter().map(|c| c.scaled_integers(&den)).collect();
    let content = ints
        .iter()
        .flat_map(|(a, b)| [a, b])
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(
        ints.into_iter()
            .map(|(a, b)| {
                Scalar::new(
                    Rational::from_integer(a / &content),
                    Rational::from_integer(b / &content),
                )
            })
            .collect(),
    )
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Hyperplanes in `P^n`. The position of a hyperplane in [`Arrangement::hyperplanes`]
/// is its identifier everywhere else in the crate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    ambient_dim: usize,
    hyperplanes: Vec<LinearForm>,
}

impl Arrangement {
    pub fn new(ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidDimension("ambient dimension must be at least 1".into()));
        }
        if rows.is_empty() {
            return Err(Error::Empty);
        }
        let mut hyperplanes: Vec<LinearForm> = Vec::with_capacity(rows.len());
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != ambient_dim + 1 {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: ambient_dim + 1,
                    found: row.len(),
                });
            }
            let form = LinearForm::new(row).ok_or(Error::ZeroForm { index })?;
            if let Some(first) = hyperplanes.iter().position(|h| *h == form) {
                return Err(Error::DuplicateHyperplane { first, second: index });
            }
            hyperplanes.push(form);
        }
        Ok(Self { ambient_dim, hyperplanes })
    }

    pub fn from_ints(ambient_dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            ambient_dim,
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of hyperplanes.
    pub fn d(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn hyperplanes(&self) -> &[LinearForm] {
        &self.hyperplanes
    }

    pub fn is_rational(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.coeffs().iter().all(Scalar::is_rational))
    }

    /// Pulls every form back along the coordinate change `x = M y`; `matrix`
    /// is given by rows and must be square of size `n + 1`.
    pub fn pullback(&self, matrix: &[Vec<Scalar>]) -> Result<Self> {
        let w = self.ambient_dim + 1;
        if matrix.len() != w || matrix.iter().any(|r| r.len() != w) {
            return Err(Error::InvalidDimension(format!("expected a {w}x{w} matrix")));
        }
        let rows = self
            .hyperplanes
            .iter()
            .map(|h| {
                (0..w)
                    .map(|j| {
                        h.coeffs()
                            .iter()
                            .zip(matrix)
                            .fold(Scalar::zero(), |acc, (c, row)| &acc + &(c * &row[j]))
                    })
                    .collect()
            })
            .collect();
        Self::new(self.ambient_dim, rows)
    }

    /// Canonical text serialization; parses back to an equal arrangement.
    pub fn to_text(&self) -> String {
        let mut s = format!("dim {}\n", self.ambient_dim);
        for h in &self.hyperplanes {
            s.push_str(&h.to_string());
            s.push('\n');
        }
        s
    }
}

impl FromStr for Arrangement {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_arrangement(text)
    }
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Syntax { line: 1, msg: "missing `dim n` header".into() })?;
    let mut words = header.split_whitespace();
    let dim = match (words.next(), words.next(), words.next()) {
        (Some("dim"), Some(n), None) => n
            .parse::<usize>()
            .map_err(|_| Error::Syntax { line, msg: format!("bad dimension `{n}`") })?,
        _ => return Err(Error::Syntax { line, msg: "expected `dim n`".into() }),
    };

    let mut rows = Vec::new();
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|tok| tok.parse::<Scalar>().map_err(|e| Error::Syntax { line, msg: e.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Arrangement::new(dim, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid2_from_text() {
        let a = parse_arrangement("dim 2\n1 -1 0\n1 0 -1\n0 1 -1").unwrap();
        assert_eq!(a.ambient_dim(), 2);
        assert_eq!(a.d(), 3);
    }

    #[test]
    fn proportional_rows_rejected() {
        let e = parse_arrangement("dim 2\n2 -2 0\n1 -1 0").unwrap_err();
        assert_eq!(e, Error::DuplicateHyperplane { first: 0, second: 1 });
    }

    #[test]
    fn points_on_the_projective_line() {
        let a = parse_arrangement("dim 1\n1 0\n0 1\n1 1").unwrap();
        assert_eq!((a.ambient_dim(), a.d()), (1, 3));
    }

    #[test]
    fn error_paths() {
        assert!(matches!(parse_arrangement("dim 2\n0 0 0"), Err(Error::ZeroForm { index: 0 })));
        assert!(matches!(
            parse_arrangement("dim 2\n1 0 0\n1 2"),
            Err(Error::DimensionMismatch { index: 1, expected: 3, found: 2 })
        ));
        assert!(matches!(parse_arrangement("1 0 0"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_arrangement("dim 2\n1 x 0"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_arrangement("# nothing\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_arrangement("dim 0\n1"), Err(Error::InvalidDimension(_))));
        assert!(matches!(parse_arrangement("dim 2\n"), Err(Error::Empty)));
    }

    #[test]
    fn canonical_forms() {
        let f = LinearForm::new(vec!["-1/2".parse().unwrap(), "3/4".parse().unwrap(), Scalar::zero()]).unwrap();
        assert_eq!(f.to_string(), "2 -3 0");
        let g = LinearForm::new(vec![Scalar::zero(), Scalar::omega(), "-1-w".parse().unwrap()]).unwrap();
        // divide by w: (0, 1, w^2 / w) = (0, 1, w)
        assert_eq!(g.to_string(), "0 1 w");
    }

    #[test]
    fn comments_and_blank_lines() {
        let a = parse_arrangement("# braid\n\ndim 1\n# points\n1 0\n\n0 1\n").unwrap();
        assert_eq!(a.d(), 2);
    }
}
