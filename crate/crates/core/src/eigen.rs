//! Spectra of finite-order operators with eigenvalues on the `d`-th roots
//! of unity.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `mult[j]` is the multiplicity of `exp(2 pi i j / d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueSpectrum {
    pub d: usize,
    pub mult: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicFactor {
    pub cyclotomic_order: usize,
    pub power: usize,
}

impl EigenvalueSpectrum {
    pub fn new(d: usize, mult: Vec<usize>) -> Self {
        assert_eq!(mult.len(), d);
        Self { d, mult }
    }

    /// Multiplicative order of `exp(2 pi i j / d)`.
    pub fn order_of(&self, j: usize) -> usize {
        self.d / j.gcd(&self.d)
    }

    /// Sum of all multiplicities.
    pub fn degree(&self) -> usize {
        self.mult.iter().sum()
    }

    /// Sorted distinct orders of eigenvalues that occur.
    pub fn orders(&self) -> Vec<usize> {
        let mut o: Vec<usize> =
            (0..self.d).filter(|&j| self.mult[j] > 0).map(|j| self.order_of(j)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    pub fn lcm_of_orders(&self) -> usize {
        self.orders().into_iter().fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn is_conjugation_symmetric(&self) -> bool {
        (1..self.d).all(|j| self.mult[j] == self.mult[self.d - j])
    }

    /// Groups eigenvalues by order. Fails when two primitive roots of the
    /// same order carry different multiplicities, since then no integer
    /// characteristic polynomial exists.
    pub fn charpoly_factored(&self) -> Result<Vec<CyclotomicFactor>> {
        let mut out = Vec::new();
        for o in (1..=self.d).filter(|o| self.d.is_multiple_of(*o)) {
            let ms: Vec<usize> = (0..self.d).filter(|&j| self.order_of(j) == o).map(|j| self.mult[j]).collect();
            if ms.iter().any(|&m| m != ms[0]) {
                return Err(Error::InconsistentSpectrum(format!(
                    "primitive {o}-th roots have multiplicities {ms:?}"
                )));
            }
            if ms[0] > 0 {
                out.push(CyclotomicFactor { cyclotomic_order: o, power: ms[0] });
            }
        }
        Ok(out)
    }

    /// `det(t - T)`.
    pub fn charpoly(&self) -> Result<IntPolynomial> {
        Ok(self.charpoly_factored()?.iter().fold(IntPolynomial::one(), |acc, f| {
            &acc * &IntPolynomial::cyclotomic(f.cyclotomic_order).pow(f.power as u32)
        }))
    }

    /// `det(1 - tT)`; differs from [`Self::charpoly`] by the sign `(-1)^mult[0]`.
    pub fn det_one_minus_t(&self) -> Result<IntPolynomial> {
        let p = self.charpoly()?;
        Ok(if self.mult[0] % 2 == 1 { -&p } else { p })
    }

    /// Text form such as `(t-1)^2 (t^2+t+1)^1`; `1` for the empty spectrum.
    pub fn factored_string(&self) -> Result<String> {
        let f = self.charpoly_factored()?;
        if f.is_empty() {
            return Ok("1".into());
        }
        Ok(f.iter()
            .map(|c| format!("({})^{}", descending(&IntPolynomial::cyclotomic(c.cyclotomic_order)), c.power))
            .collect::<Vec<_>>()
            .join(" "))
    }
}

/// Descending-power rendering without spaces, e.g. `t^2-t+1`.
pub fn descending(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let mag = c.abs();
        if i == 0 || !mag.is_one() {
            s.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => s.push('t'),
            _ => s.push_str(&format!("t^{i}")),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid2_spectrum_polynomials() {
        let s = EigenvalueSpectrum::new(3, vec![2, 1, 1]);
        assert_eq!(s.factored_string().unwrap(), "(t-1)^2 (t^2+t+1)^1");
        // (1 - t)(1 - t^3)
        let want = &IntPolynomial::from_i64(&[1, -1]) * &IntPolynomial::from_i64(&[1, 0, 0, -1]);
        assert_eq!(s.det_one_minus_t().unwrap(), want);
        assert_eq!(s.orders(), vec![1, 3]);
    }

    #[test]
    fn galois_inconsistency_detected() {
        let s = EigenvalueSpectrum::new(5, vec![4, 1, 0, 0, 1]);
        assert!(matches!(s.charpoly_factored(), Err(Error::InconsistentSpectrum(_))));
    }

    #[test]
    fn descending_format() {
        assert_eq!(descending(&IntPolynomial::cyclotomic(1)), "t-1");
        assert_eq!(descending(&IntPolynomial::cyclotomic(6)), "t^2-t+1");
        assert_eq!(descending(&IntPolynomial::cyclotomic(12)), "t^4-t^2+1");
    }
}
