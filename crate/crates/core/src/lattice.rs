//! Intersection lattice of an arrangement.
//!
//! Flats are identified by their closed hyperplane sets. The lattice is the
//! one of the central arrangement in `C^{n+1}`: when the normals span
//! everything, the top flat has codimension `n + 1` and is empty as a
//! projective subspace. It is kept because the Möbius values need it;
//! anything that talks about strata of `P^n` filters on `codim <= n`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::{fundamental_circuits, Echelon};
use crate::poly::IntPolynomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flat {
    pub id: usize,
    /// Sorted indices of all hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    pub codim: usize,
    pub multiplicity: usize,
    pub dense: bool,
    /// `mu(P^n, X)`.
    pub mobius: i64,
}

impl Flat {
    pub fn contains_hyperplane(&self, h: usize) -> bool {
        self.hyperplanes.binary_search(&h).is_ok()
    }

    /// `self <= other` in the lattice order (reverse inclusion of subspaces).
    pub fn is_below(&self, other: &Flat) -> bool {
        is_subset(&self.hyperplanes, &other.hyperplanes)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    arrangement: Arrangement,
    /// Sorted by `(codim, hyperplanes)`; `flats[i].id == i`.
    flats: Vec<Flat>,
    index: HashMap<Vec<usize>, usize>,
}

/// Enumerates all flats by iterated closure, then fills in Möbius values and
/// density flags.
pub fn build_lattice(arrangement: &Arrangement) -> IntersectionLattice {
    let width = arrangement.ambient_dim() + 1;
    let rows: Vec<&[Scalar]> = arrangement.hyperplanes().iter().map(|h| h.coeffs()).collect();

    let mut found: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut level: Vec<(Vec<usize>, Echelon)> = (0..rows.len())
        .map(|i| (vec![i], Echelon::from_rows(width, [rows[i]])))
        .collect();
    let mut codim = 1;
    while !level.is_empty() {
        let mut next = Vec::new();
        for (set, ech) in level {
            let mut covered = vec![false; rows.len()];
            for &i in &set {
                covered[i] = true;
            }
            for h in 0..rows.len() {
                if covered[h] {
                    continue;
                }
                let mut e = ech.clone();
                e.insert(rows[h]);
                let closed: Vec<usize> = (0..rows.len())
                    .filter(|&j| set.binary_search(&j).is_ok() || e.contains(rows[j]))
                    .collect();
                for &j in &closed {
                    if set.binary_search(&j).is_err() {
                        covered[j] = true;
                    }
                }
                if seen.insert(closed.clone()) {
                    next.push((closed, e));
                }
            }
            found.push((set, codim));
        }
        level = next;
        codim += 1;
    }

    found.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    let flats: Vec<Flat> = found
        .into_iter()
        .enumerate()
        .map(|(id, (hyperplanes, codim))| Flat {
            id,
            multiplicity: hyperplanes.len(),
            hyperplanes,
            codim,
            dense: false,
            mobius: 0,
        })
        .collect();
    let index = flats.iter().map(|f| (f.hyperplanes.clone(), f.id)).collect();
    let mut lattice = IntersectionLattice { arrangement: arrangement.clone(), flats, index };
    lattice.fill_mobius();
    dense_flats(lattice)
}

/// Sets the density flag of every flat: a flat is dense when its localization
/// `{H : F ⊆ H}` does not split into two parts whose spans meet only in 0.
pub fn dense_flats(mut lattice: IntersectionLattice) -> IntersectionLattice {
    let normals: Vec<Vec<Scalar>> =
        lattice.arrangement.hyperplanes().iter().map(|h| h.coeffs().to_vec()).collect();
    let flags: Vec<bool> = lattice
        .flats
        .par_iter()
        .map(|f| {
            let local: Vec<Vec<Scalar>> = f.hyperplanes.iter().map(|&i| normals[i].clone()).collect();
            is_indecomposable(&local)
        })
        .collect();
    for (f, dense) in lattice.flats.iter_mut().zip(flags) {
        f.dense = dense;
    }
    lattice
}

/// Whether the linear matroid of `vectors` is connected. Components are the
/// classes of the relation generated by the fundamental circuits of a basis.
pub fn is_indecomposable(vectors: &[Vec<Scalar>]) -> bool {
    component_count(vectors) <= 1
}

pub fn component_count(vectors: &[Vec<Scalar>]) -> usize {
    let n = vectors.len();
    if n == 0 {
        return 0;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let (_, circuits) = fundamental_circuits(vectors);
    for (x, support) in circuits {
        for b in support {
            let (rx, rb) = (find(&mut parent, x), find(&mut parent, b));
            parent[rx] = rb;
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

impl IntersectionLattice {
    fn fill_mobius(&mut self) {
        for i in 0..self.flats.len() {
            // the bottom element P^n contributes mu = 1
            let below: i64 = self.flats[..i]
                .iter()
                .filter(|y| y.codim < self.flats[i].codim && y.is_below(&self.flats[i]))
                .map(|y| y.mobius)
                .sum();
            self.flats[i].mobius = -1 - below;
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn ambient_dim(&self) -> usize {
        self.arrangement.ambient_dim()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: usize) -> &Flat {
        &self.flats[id]
    }

    pub fn find(&self, hyperplanes: &[usize]) -> Option<&Flat> {
        self.index.get(hyperplanes).map(|&i| &self.flats[i])
    }

    /// Flats of a given codimension.
    pub fn of_codim(&self, codim: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.codim == codim)
    }

    /// Flats that are nonempty subspaces of `P^n`.
    pub fn strata(&self) -> impl Iterator<Item = &Flat> {
        let n = self.ambient_dim();
        self.flats.iter().filter(move |f| f.codim <= n)
    }

    /// Highest codimension present (the rank of the arrangement).
    pub fn rank(&self) -> usize {
        self.flats.last().map_or(0, |f| f.codim)
    }

    /// Central Poincaré polynomial `sum |mu(X)| t^codim(X)` over all flats
    /// including the bottom.
    pub fn central_poincare(&self) -> IntPolynomial {
        let mut c = vec![BigInt::from(0); self.rank() + 1];
        c[0] = BigInt::from(1);
        for f in &self.flats {
            c[f.codim] += BigInt::from(f.mobius).abs();
        }
        IntPolynomial::new(c)
    }

    /// Poincaré polynomial of `P^n - A`.
    pub fn poincare_projective(&self) -> Result<IntPolynomial> {
        self.central_poincare()
            .div_exact(&IntPolynomial::from_i64(&[1, 1]))
            .ok_or_else(|| Error::InternalInconsistency("1 + t does not divide the central Poincaré polynomial".into()))
    }

    pub fn betti(&self, i: usize) -> Result<BigInt> {
        Ok(self.poincare_projective()?.coeff(i))
    }

    pub fn euler_char(&self) -> Result<BigInt> {
        Ok(self.poincare_projective()?.eval(&BigInt::from(-1)))
    }
}

pub fn poincare_projective(arrangement: &Arrangement) -> Result<IntPolynomial> {
    build_lattice(arrangement).poincare_projective()
}

pub fn betti(arrangement: &Arrangement, i: usize) -> Result<BigInt> {
    build_lattice(arrangement).betti(i)
}

pub fn euler_char(arrangement: &Arrangement) -> Result<BigInt> {
    build_lattice(arrangement).euler_char()
}
