//! Monodromy zeta function and eigenvalue-1 multiplicities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::IntersectionLattice;
use crate::poly::IntPolynomial;

/// Formal product `prod_e (1 - t^e)^{exp(e)}` with nonzero integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycloExpression {
    factors: BTreeMap<usize, i64>,
}

impl CycloExpression {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn factor(e: usize, exp: i64) -> Self {
        let mut s = Self::one();
        s.push(e, exp);
        s
    }

    fn push(&mut self, e: usize, exp: i64) {
        assert!(e >= 1, "factor 1 - t^0 vanishes");
        let x = self.factors.entry(e).or_insert(0);
        *x += exp;
        if *x == 0 {
            self.factors.remove(&e);
        }
    }

    pub fn factors(&self) -> &BTreeMap<usize, i64> {
        &self.factors
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &x) in &other.factors {
            out.push(e, x);
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &x) in &other.factors {
            out.push(e, -x);
        }
        out
    }

    /// Degree as a rational function: `sum e * exp(e)`.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(&e, &x)| e as i64 * x).sum()
    }

    /// Expands when every exponent is nonnegative.
    pub fn to_polynomial(&self) -> Option<IntPolynomial> {
        self.factors.iter().try_fold(IntPolynomial::one(), |acc, (&e, &x)| {
            let x = u32::try_from(x).ok()?;
            Some(&acc * &IntPolynomial::one_minus_t_pow(e).pow(x))
        })
    }
}

impl std::fmt::Display for CycloExpression {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(&e, &x)| {
                let base = if e == 1 { "(1-t)".to_string() } else { format!("(1-t^{e})") };
                if x == 1 { base } else { format!("{base}^{x}") }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for CycloExpression {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            factors: BTreeMap<String, i64>,
            text: &'a str,
        }
        let text = self.to_string();
        Repr { factors: self.factors.iter().map(|(e, x)| (e.to_string(), *x)).collect(), text: &text }
            .serialize(s)
    }
}

/// `(1 - t^d)^{chi(P^n - A)}`.
pub fn zeta_function(lattice: &IntersectionLattice) -> Result<CycloExpression> {
    let chi = lattice
        .euler_char()?
        .to_i64()
        .ok_or_else(|| Error::InternalInconsistency("Euler characteristic out of range".into()))?;
    Ok(CycloExpression::factor(lattice.arrangement().d(), chi))
}

/// Multiplicity of the eigenvalue 1 on `H_i` of the Milnor fiber, i.e. the
/// `i`-th Betti number of the complement.
pub fn eigenvalue_one_multiplicity(lattice: &IntersectionLattice, i: usize) -> Result<BigInt> {
    if i > lattice.ambient_dim() {
        return Err(Error::InvalidArgument(format!("homology degree {i} exceeds ambient dimension")));
    }
    lattice.betti(i)
}

/// Euler characteristic of `P^n - A` from the stratification alone: each
/// open stratum is a projective space minus the strata below it.
pub fn euler_char_by_strata(lattice: &IntersectionLattice) -> BigInt {
    let n = lattice.ambient_dim() as i64;
    let strata: Vec<_> = lattice.strata().collect();
    let mut open = vec![BigInt::zero(); strata.len()];
    for (i, x) in strata.iter().enumerate().rev() {
        let closure = BigInt::from(n - x.codim as i64 + 1);
        let inside: BigInt = strata
            .iter()
            .enumerate()
            .skip(i + 1)
            .filter(|(_, y)| y.codim > x.codim && x.is_below(y))
            .map(|(j, _)| open[j].clone())
            .sum();
        open[i] = closure - inside;
    }
    BigInt::from(n + 1) - open.iter().sum::<BigInt>()
}

/// `det(1 - t T_2)` of a line arrangement from `det(1 - t T_1)`, using
/// `P0^{-1} P1 ... = (1 - t^d)^chi` with `P0 = 1 - t`.
pub fn reconstruct_top_charpoly(lattice: &IntersectionLattice, p1: &IntPolynomial) -> Result<IntPolynomial> {
    if lattice.ambient_dim() != 2 {
        return Err(Error::InvalidDimension("top characteristic polynomial needs a line arrangement".into()));
    }
    let d = lattice.arrangement().d();
    let chi = lattice.euler_char()?;
    let chi = chi
        .to_i64()
        .and_then(|c| u32::try_from(c.abs()).ok().map(|a| (c >= 0, a)))
        .ok_or_else(|| Error::InternalInconsistency("Euler characteristic out of range".into()))?;
    let cyc = IntPolynomial::one_minus_t_pow(d);
    let (num, den) = match chi {
        (true, a) => (p1 * &cyc.pow(a), IntPolynomial::one_minus_t_pow(1)),
        (false, a) => (p1.clone(), &IntPolynomial::one_minus_t_pow(1) * &cyc.pow(a)),
    };
    num.div_exact(&den)
        .ok_or_else(|| Error::InconsistentSpectrum(format!("(1-t^{d})^chi * P1 / (1-t) is not a polynomial")))
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub zeta: CycloExpression,
    #[serde(serialize_with = "ser_bigints")]
    pub eigenvalue_one: Vec<BigInt>,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub euler_char: BigInt,
}

fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

pub fn zeta_report(lattice: &IntersectionLattice) -> Result<ZetaReport> {
    let p = lattice.poincare_projective()?;
    Ok(ZetaReport {
        zeta: zeta_function(lattice)?,
        eigenvalue_one: (0..=lattice.ambient_dim()).map(|i| p.coeff(i)).collect(),
        euler_char: lattice.euler_char()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::lattice::build_lattice;

    #[test]
    fn zeta_examples() {
        let z = |a| zeta_function(&build_lattice(&a)).unwrap();
        assert_eq!(z(builtin::braid(2).unwrap()), CycloExpression::factor(3, -1));
        assert_eq!(z(builtin::generic(2, 5).unwrap()), CycloExpression::factor(5, 3));
        let line = crate::Arrangement::from_ints(2, &[&[1, 2, 3]]).unwrap();
        assert_eq!(z(line), CycloExpression::factor(1, 1));
    }

    #[test]
    fn eigenvalue_one() {
        let b2 = build_lattice(&builtin::braid(2).unwrap());
        assert_eq!(eigenvalue_one_multiplicity(&b2, 1).unwrap(), BigInt::from(2));
        assert_eq!(eigenvalue_one_multiplicity(&b2, 0).unwrap(), BigInt::from(1));
        let g = build_lattice(&builtin::generic(2, 5).unwrap());
        assert_eq!(eigenvalue_one_multiplicity(&g, 1).unwrap(), BigInt::from(4));
        assert!(eigenvalue_one_multiplicity(&g, 3).is_err());
    }

    #[test]
    fn strata_euler_characteristic_agrees() {
        for a in [
            builtin::braid(2).unwrap(),
            builtin::braid(3).unwrap(),
            builtin::braid(4).unwrap(),
            builtin::generic(2, 5).unwrap(),
            builtin::generic(3, 7).unwrap(),
            builtin::ceva(3).unwrap(),
            builtin::triangle_medians(),
        ] {
            let l = build_lattice(&a);
            assert_eq!(euler_char_by_strata(&l), l.euler_char().unwrap());
        }
    }

    #[test]
    fn top_charpoly() {
        let b2 = build_lattice(&builtin::braid(2).unwrap());
        let p1 = &IntPolynomial::one_minus_t_pow(1) * &IntPolynomial::one_minus_t_pow(3);
        assert_eq!(reconstruct_top_charpoly(&b2, &p1).unwrap(), IntPolynomial::one());

        let g = build_lattice(&builtin::generic(2, 5).unwrap());
        let p1 = IntPolynomial::one_minus_t_pow(1).pow(4);
        let p2 = reconstruct_top_charpoly(&g, &p1).unwrap();
        let want = CycloExpression::factor(5, 3).mul(&CycloExpression::factor(1, 3)).to_polynomial().unwrap();
        assert_eq!(p2, want);
        assert_eq!(p2.degree(), Some(18));

        // a wrong P1 for the braid arrangement cannot be divided out
        let bad = IntPolynomial::one_minus_t_pow(1).pow(2);
        assert!(matches!(reconstruct_top_charpoly(&b2, &bad), Err(Error::InconsistentSpectrum(_))));
    }

    #[test]
    fn expression_algebra() {
        let a = CycloExpression::factor(3, 2).mul(&CycloExpression::factor(1, -1));
        assert_eq!(a.degree(), 5);
        assert!(a.to_polynomial().is_none());
        assert_eq!(a.div(&a), CycloExpression::one());
        assert_eq!(a.to_string(), "(1-t)^-1 (1-t^3)^2");
    }
}
