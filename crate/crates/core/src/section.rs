//! Generic linear sections.
//!
//! A section by a `k`-plane transversal to all strata has, up to codimension
//! `k`, the same intersection lattice as the original arrangement. The plane
//! is drawn with a seeded generator and transversality is checked on the
//! lattices, so the result is reproducible and certified.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangement::{dot, Arrangement};
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, IntersectionLattice};
use crate::linalg::rank;
use crate::scalar::Scalar;

pub const SECTION_RETRIES: usize = 32;
const INITIAL_BOUND: i64 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatPair {
    pub section_flat: usize,
    pub original_flat: usize,
    pub hyperplanes: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Section {
    /// `A ∩ L`, hyperplane `i` of the section is the trace of hyperplane `i`.
    pub arrangement: Arrangement,
    /// Spanning vectors of the cone over `L`, one per row.
    pub plane: Vec<Vec<i64>>,
    /// Bijection between flats of codimension `<= k`.
    pub correspondence: Vec<FlatPair>,
    pub attempts: usize,
}

pub fn generic_section(a: &Arrangement, k: usize, seed: u64) -> Result<Section> {
    generic_section_with_lattice(&build_lattice(a), k, seed)
}

pub fn generic_section_with_lattice(lattice: &IntersectionLattice, k: usize, seed: u64) -> Result<Section> {
    let a = lattice.arrangement();
    let n = a.ambient_dim();
    if k < 2 || k >= n {
        return Err(Error::InvalidDimension(format!("section dimension {k} must satisfy 2 <= k < {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = INITIAL_BOUND;
    for attempt in 1..=SECTION_RETRIES {
        let plane: Vec<Vec<i64>> =
            (0..=k).map(|_| (0..=n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
        bound = bound.saturating_mul(2);
        if let Some((arrangement, correspondence)) = try_plane(lattice, &plane) {
            return Ok(Section { arrangement, plane, correspondence, attempts: attempt });
        }
    }
    Err(Error::SectionFailure(SECTION_RETRIES))
}

fn try_plane(lattice: &IntersectionLattice, plane: &[Vec<i64>]) -> Option<(Arrangement, Vec<FlatPair>)> {
    let k = plane.len() - 1;
    let vs: Vec<Vec<Scalar>> = plane.iter().map(|v| v.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
    if rank(vs[0].len(), &vs) != k + 1 {
        return None;
    }
    let rows = lattice
        .arrangement()
        .hyperplanes()
        .iter()
        .map(|h| vs.iter().map(|v| dot(h.coeffs(), v)).collect())
        .collect();
    // zero or proportional traces mean L is not transversal
    let section = Arrangement::new(k, rows).ok()?;
    let sl = build_lattice(&section);

    let mut pairs = Vec::new();
    for f in sl.flats().iter().filter(|f| f.codim <= k) {
        let orig = lattice.find(&f.hyperplanes)?;
        if orig.codim != f.codim {
            return None;
        }
        pairs.push(FlatPair { section_flat: f.id, original_flat: orig.id, hyperplanes: f.hyperplanes.clone() });
    }
    let expected = lattice.flats().iter().filter(|f| f.codim <= k).count();
    (pairs.len() == expected).then_some((section, pairs))
}
