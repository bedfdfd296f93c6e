//! Monodromy spectrum on `H_1` of the Milnor fiber of a line arrangement.
//!
//! The multiplicity of `exp(2 pi i k / m)` is `sigma_k(m) + sigma_{d-k}(m)`,
//! where `sigma_k(m)` is the superabundance (`h^1` of the twisted ideal
//! sheaf) of plane curves of degree `d - 3 - k d / m` vanishing to a
//! prescribed order at every vertex. The expected dimension comes from a
//! closed formula, `h^0` from exact elimination on an interpolation matrix.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{canonicalize, Arrangement};
use crate::eigen::{CyclotomicFactor, EigenvalueSpectrum};
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, IntersectionLattice};
use crate::linalg::Echelon;
use crate::poly::IntPolynomial;
use crate::scalar::Scalar;

/// A point of multiplicity at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Primitive integral homogeneous coordinates.
    pub point: Vec<Scalar>,
    pub multiplicity: usize,
    pub flat_id: usize,
    pub lines: Vec<usize>,
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            point: Vec<String>,
            multiplicity: usize,
            flat_id: usize,
            lines: &'a [usize],
        }
        Repr {
            point: self.point.iter().map(ToString::to_string).collect(),
            multiplicity: self.multiplicity,
            flat_id: self.flat_id,
            lines: &self.lines,
        }
        .serialize(s)
    }
}

fn require_lines(a: &Arrangement) -> Result<()> {
    if a.ambient_dim() != 2 {
        return Err(Error::InvalidDimension(format!(
            "expected a line arrangement in P^2, got ambient dimension {}",
            a.ambient_dim()
        )));
    }
    Ok(())
}

fn cross(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    vec![
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// One vertex per codimension-2 flat, with coordinates checked against every
/// line of the arrangement.
pub fn vertices(lattice: &IntersectionLattice) -> Result<Vec<Vertex>> {
    let a = lattice.arrangement();
    require_lines(a)?;
    let lines = a.hyperplanes();
    lattice
        .of_codim(2)
        .map(|f| {
            let p = cross(lines[f.hyperplanes[0]].coeffs(), lines[f.hyperplanes[1]].coeffs());
            let point = canonicalize(&p)
                .ok_or_else(|| Error::InternalInconsistency(format!("flat {} has parallel normals", f.id)))?;
            for (i, l) in lines.iter().enumerate() {
                if l.eval(&point).is_zero() != f.contains_hyperplane(i) {
                    return Err(Error::InternalInconsistency(format!(
                        "vertex of flat {} disagrees with line {i}",
                        f.id
                    )));
                }
            }
            Ok(Vertex { point, multiplicity: f.multiplicity, flat_id: f.id, lines: f.hyperplanes.clone() })
        })
        .collect()
}

/// Rule giving the vanishing order imposed at a vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExponentConvention {
    /// `max(0, m_P - 1 - ceil(k m_P / m))`.
    #[default]
    Reconciled,
    /// `max(0, m_P - floor(k m_P / m) - 2)`.
    Strict,
    /// `max(0, m_P - floor(k d / m) - 1)`.
    PaperTheorem,
}

impl FromStr for ExponentConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reconciled" => Ok(Self::Reconciled),
            "strict" => Ok(Self::Strict),
            "paper-theorem" => Ok(Self::PaperTheorem),
            _ => Err(Error::InvalidArgument(format!("unknown exponent convention `{s}`"))),
        }
    }
}

impl fmt::Display for ExponentConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Reconciled => "reconciled",
            Self::Strict => "strict",
            Self::PaperTheorem => "paper-theorem",
        })
    }
}

impl ExponentConvention {
    pub fn exponent(self, m_p: usize, k: usize, m: usize, d: usize) -> usize {
        let v = match self {
            Self::Reconciled => m_p as i64 - 1 - (k * m_p).div_ceil(m) as i64,
            Self::Strict => m_p as i64 - (k * m_p / m) as i64 - 2,
            Self::PaperTheorem => m_p as i64 - (k * d / m) as i64 - 1,
        };
        v.max(0) as usize
    }
}

/// Vanishing order at a vertex of multiplicity `m_p` for the eigenvalue
/// parameter `k / m`.
pub fn local_exponent(m_p: usize, k: usize, m: usize) -> usize {
    ExponentConvention::Reconciled.exponent(m_p, k, m, 0)
}

fn binomial(n: usize, k: usize) -> Scalar {
    let mut acc = num_bigint::BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Scalar::from(acc)
}

/// Exponent triples of the degree-`e` monomials, lexicographically.
fn monomials(e: usize) -> Vec<[usize; 3]> {
    (0..=e).rev().flat_map(|a| (0..=e - a).rev().map(move |b| [a, b, e - a - b])).collect()
}

/// Interpolation matrix: one column per degree-`e` monomial, one row per
/// Taylor coefficient of order `< s` at each point, in an affine chart where
/// the point's largest coordinate is 1.
pub fn interpolation_matrix(conditions: &[(Vec<Scalar>, usize)], e: usize) -> Vec<Vec<Scalar>> {
    let mons = monomials(e);
    let mut rows = Vec::new();
    for (point, s) in conditions {
        if *s == 0 {
            continue;
        }
        let chart = (0..3)
            .max_by(|&i, &j| point[i].norm().cmp(&point[j].norm()).then(j.cmp(&i)))
            .expect("three coordinates");
        let inv = point[chart].inv().expect("nonzero chart coordinate");
        let others: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
        let (u0, v0) = (&point[others[0]] * &inv, &point[others[1]] * &inv);
        for order in 0..*s {
            for i in 0..=order {
                let j = order - i;
                rows.push(
                    mons.iter()
                        .map(|m| {
                            let (a, b) = (m[others[0]], m[others[1]]);
                            if a < i || b < j {
                                return Scalar::zero();
                            }
                            let c = &binomial(a, i) * &binomial(b, j);
                            &(&c * &u0.pow((a - i) as u32)) * &v0.pow((b - j) as u32)
                        })
                        .collect(),
                );
            }
        }
    }
    rows
}

/// Dimension of degree-`e` plane curves vanishing to order `s` at each
/// listed point, together with the rank of the conditions.
pub fn interpolation_h0(conditions: &[(Vec<Scalar>, usize)], e: i64) -> (usize, usize) {
    let Ok(e) = usize::try_from(e) else {
        return (0, 0);
    };
    let cols = (e + 1) * (e + 2) / 2;
    let rows = interpolation_matrix(conditions, e);
    let rank = Echelon::from_rows(cols, rows.iter().map(Vec::as_slice)).rank();
    (cols - rank, rank)
}

/// Basis of the degree-`e` curves through the conditions, as coefficient
/// vectors over the lexicographic monomial basis.
pub fn interpolation_kernel(conditions: &[(Vec<Scalar>, usize)], e: usize) -> Vec<Vec<Scalar>> {
    let cols = (e + 1) * (e + 2) / 2;
    let rows = interpolation_matrix(conditions, e);
    Echelon::from_rows(cols, rows.iter().map(Vec::as_slice)).null_space()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexExponent {
    pub flat_id: usize,
    pub multiplicity: usize,
    pub exponent: usize,
}

/// Audit record for one superabundance computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperabundanceCertificate {
    pub k: usize,
    pub m: usize,
    pub degree: i64,
    pub exponents: Vec<VertexExponent>,
    pub matrix_rows: usize,
    pub matrix_cols: usize,
    pub rank: usize,
    pub h0: i64,
    pub chi_ideal: i64,
    pub h2: i64,
    pub sigma: i64,
}

impl SuperabundanceCertificate {
    /// Recomputes the closed-form parts from the recorded data.
    pub fn is_consistent(&self) -> bool {
        let e = self.degree;
        let conditions: i64 = self.exponents.iter().map(|v| (v.exponent * (v.exponent + 1) / 2) as i64).sum();
        let h2 = if e <= -3 { (-e - 2) * (-e - 1) / 2 } else { 0 };
        self.chi_ideal == (e + 1) * (e + 2) / 2 - conditions
            && self.h2 == h2
            && self.sigma == self.h0 - self.chi_ideal + self.h2
            && self.sigma >= 0
            && (e >= 0 || self.h0 == 0)
    }
}

/// Computes superabundances for one line arrangement.
#[derive(Clone, Debug)]
pub struct LineSystem {
    d: usize,
    vertices: Vec<Vertex>,
    convention: ExponentConvention,
}

impl LineSystem {
    pub fn new(lattice: &IntersectionLattice, convention: ExponentConvention) -> Result<Self> {
        Ok(Self { d: lattice.arrangement().d(), vertices: vertices(lattice)?, convention })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `sigma_k(m)` with its certificate.
    pub fn sigma(&self, k: usize, m: usize) -> Result<SuperabundanceCertificate> {
        let d = self.d;
        if m == 0 || !d.is_multiple_of(m) || k == 0 || k >= m {
            return Err(Error::InvalidArgument(format!("need m | {d} and 1 <= k < m, got k={k}, m={m}")));
        }
        let e = d as i64 - 3 - (k * d / m) as i64;
        let exponents: Vec<VertexExponent> = self
            .vertices
            .iter()
            .map(|v| VertexExponent {
                flat_id: v.flat_id,
                multiplicity: v.multiplicity,
                exponent: self.convention.exponent(v.multiplicity, k, m, d),
            })
            .collect();
        let conditions: Vec<(Vec<Scalar>, usize)> =
            self.vertices.iter().zip(&exponents).map(|(v, x)| (v.point.clone(), x.exponent)).collect();
        let (h0, rank) = interpolation_h0(&conditions, e);
        let matrix_cols = if e >= 0 { ((e + 1) * (e + 2) / 2) as usize } else { 0 };
        let matrix_rows =
            if e >= 0 { exponents.iter().map(|x| x.exponent * (x.exponent + 1) / 2).sum() } else { 0 };
        let imposed: i64 = exponents.iter().map(|x| (x.exponent * (x.exponent + 1) / 2) as i64).sum();
        let chi_ideal = (e + 1) * (e + 2) / 2 - imposed;
        let h2 = if e <= -3 { (-e - 2) * (-e - 1) / 2 } else { 0 };
        let h0 = h0 as i64;
        let cert = SuperabundanceCertificate {
            k,
            m,
            degree: e,
            exponents,
            matrix_rows,
            matrix_cols,
            rank,
            h0,
            chi_ideal,
            h2,
            sigma: h0 - chi_ideal + h2,
        };
        if cert.sigma < 0 {
            return Err(Error::NegativeSigma(format!("{cert:?}")));
        }
        Ok(cert)
    }

    /// Spectrum of `T_1` on `H_1(F_A)`, computed with `m = d` throughout.
    pub fn spectrum(&self) -> Result<SpectrumReport> {
        let d = self.d;
        let certificates: Vec<SuperabundanceCertificate> =
            (1..d).into_par_iter().map(|k| self.sigma(k, d)).collect::<Result<_>>()?;
        let sigma = |k: usize| certificates[k - 1].sigma as usize;
        let mut mult = vec![0; d];
        mult[0] = d - 1;
        for j in 1..d {
            mult[j] = sigma(j) + sigma(d - j);
        }
        let spectrum = EigenvalueSpectrum::new(d, mult);
        let charpoly_factored = spectrum.charpoly_factored()?;
        Ok(SpectrumReport {
            d,
            convention: self.convention,
            charpoly: spectrum.factored_string()?,
            det_one_minus_t: spectrum.det_one_minus_t()?,
            mult: spectrum.mult.clone(),
            charpoly_factored,
            certificates,
            spectrum,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub d: usize,
    pub convention: ExponentConvention,
    pub mult: Vec<usize>,
    pub charpoly_factored: Vec<CyclotomicFactor>,
    /// `det(t - T_1)` in factored text form.
    pub charpoly: String,
    pub det_one_minus_t: IntPolynomial,
    pub certificates: Vec<SuperabundanceCertificate>,
    #[serde(skip)]
    pub spectrum: EigenvalueSpectrum,
}

pub fn sigma(lattice: &IntersectionLattice, k: usize, m: usize) -> Result<SuperabundanceCertificate> {
    LineSystem::new(lattice, ExponentConvention::default())?.sigma(k, m)
}

pub fn spectrum(lattice: &IntersectionLattice) -> Result<SpectrumReport> {
    LineSystem::new(lattice, ExponentConvention::default())?.spectrum()
}

/// Convenience wrapper building the lattice first.
pub fn spectrum_of(a: &Arrangement) -> Result<SpectrumReport> {
    spectrum(&build_lattice(a))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriplePointModule {
    pub d: usize,
    pub s: usize,
    pub decomposition: String,
}

/// `H_1(F_A)` as a `C[t, t^-1]`-module for arrangements whose vertices are
/// double or triple points.
pub fn triple_point_module(lattice: &IntersectionLattice, report: &SpectrumReport) -> Result<TriplePointModule> {
    let d = lattice.arrangement().d();
    for v in vertices(lattice)? {
        if !(2..=3).contains(&v.multiplicity) {
            return Err(Error::NotTriplePointArrangement(v.multiplicity));
        }
    }
    let s = if d.is_multiple_of(3) { report.mult[d / 3] } else { 0 };
    let bound = d.saturating_sub(2);
    if s > bound {
        return Err(Error::BoundViolated { s, bound });
    }
    let decomposition =
        format!("H_1(F_A,C) = (C[t,t^-1]/(t^3-1))^{s} + (C[t,t^-1]/(t-1))^{}", d - 1 - s);
    Ok(TriplePointModule { d, s, decomposition })
}
