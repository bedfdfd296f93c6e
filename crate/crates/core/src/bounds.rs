//! Combinatorial restrictions on the orders of monodromy eigenvalues.
//!
//! Degrees are homology degrees `i`; the strata that constrain `H_i` are
//! those of codimension at most `i + 1`. For every hyperplane `H`, an
//! eigenvalue of order `e` on `H_i` needs some stratum inside `H` of
//! codimension `<= i + 1` whose multiplicity is divisible by `e`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::eigen::EigenvalueSpectrum;
use crate::error::{Error, Result};
use crate::lattice::{Flat, IntersectionLattice};

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|k| n.is_multiple_of(*k)).collect()
}

fn check_degree(lattice: &IntersectionLattice, i: usize) -> Result<()> {
    let n = lattice.ambient_dim();
    if i > n {
        return Err(Error::InvalidArgument(format!("homology degree {i} exceeds ambient dimension {n}")));
    }
    Ok(())
}

fn witness_flats(
    lattice: &IntersectionLattice,
    h: usize,
    i: usize,
    dense_only: bool,
) -> impl Iterator<Item = &Flat> {
    lattice
        .strata()
        .filter(move |f| f.codim <= i + 1 && f.contains_hyperplane(h) && (f.dense || !dense_only))
}

/// Sorted multiplicities of the strata constraining `H_i` that lie in
/// hyperplane `h`.
pub fn witnesses(lattice: &IntersectionLattice, h: usize, i: usize, dense_only: bool) -> Vec<usize> {
    let mut w: Vec<usize> = witness_flats(lattice, h, i, dense_only).map(|f| f.multiplicity).collect();
    w.sort_unstable();
    w
}

fn orders_from_witnesses<F>(lattice: &IntersectionLattice, witness_sets: F) -> Vec<usize>
where
    F: Fn(usize) -> Vec<usize>,
{
    let d = lattice.arrangement().d();
    let sets: Vec<Vec<usize>> = (0..d).map(witness_sets).collect();
    divisors(d)
        .into_iter()
        .filter(|&e| sets.iter().all(|ws| ws.iter().any(|m| m % e == 0)))
        .collect()
}

/// Orders `e | d` not excluded in homology degree `i`. The top degree is
/// unconstrained and yields every divisor of `d`.
pub fn admissible_orders(lattice: &IntersectionLattice, i: usize, dense_only: bool) -> Result<Vec<usize>> {
    check_degree(lattice, i)?;
    if i == lattice.ambient_dim() {
        return Ok(divisors(lattice.arrangement().d()));
    }
    Ok(orders_from_witnesses(lattice, |h| witnesses(lattice, h, i, dense_only)))
}

/// For each degree `1..n-1`: does some hyperplane see only multiplicities
/// coprime to `d`? When it does, only the eigenvalue 1 survives there.
pub fn relprime_shortcut(lattice: &IntersectionLattice) -> Vec<(usize, bool)> {
    let d = lattice.arrangement().d();
    (1..lattice.ambient_dim())
        .map(|i| {
            let hit = (0..d).any(|h| witnesses(lattice, h, i, true).iter().all(|m| m.gcd(&d) == 1));
            (i, hit)
        })
        .collect()
}

/// Possible orders of the deck transformation on the homology of the
/// `e`-fold cyclic cover of the cone complement.
pub fn cover_orders(d: usize, e: usize) -> Result<Vec<usize>> {
    if e == 0 {
        return Err(Error::InvalidArgument("cover degree must be positive".into()));
    }
    Ok(divisors(d.gcd(&e)))
}

/// Necessary condition for the rank-one local system with monodromy
/// `exp(2 pi i / e)` around every hyperplane to have nonzero `H^i`.
pub fn local_system_nonvanishing(lattice: &IntersectionLattice, e: usize, i: usize) -> Result<bool> {
    let n = lattice.ambient_dim();
    if e < 2 || i < 1 || i + 1 > n {
        return Err(Error::InvalidArgument(format!("need e >= 2 and 1 <= i <= {}", n.saturating_sub(1))));
    }
    Ok(lattice.strata().any(|f| f.codim <= i + 1 && f.multiplicity % e == 0))
}

/// Monodromy spectrum on `H_1` of the Milnor fiber of `m` concurrent lines:
/// eigenvalues `exp(2 pi i (a + b) / m)`, `1 <= a, b <= m - 1`.
pub fn local_charpoly_ordinary(m: usize) -> Result<EigenvalueSpectrum> {
    if m < 2 {
        return Err(Error::InvalidArgument("local multiplicity must be at least 2".into()));
    }
    let mut mult = vec![0; m];
    for a in 1..m {
        for b in 1..m {
            mult[(a + b) % m] += 1;
        }
    }
    Ok(EigenvalueSpectrum::new(m, mult))
}

/// Like [`admissible_orders`], with each codimension-2 witness replaced by
/// the lcm of the eigenvalue orders of its local monodromy.
pub fn refined_orders(lattice: &IntersectionLattice, i: usize, dense_only: bool) -> Result<Vec<usize>> {
    check_degree(lattice, i)?;
    if i >= lattice.ambient_dim() {
        return Err(Error::InvalidArgument("refinement applies below the top degree".into()));
    }
    let d = lattice.arrangement().d();
    let local: Vec<usize> = (0..=d)
        .map(|m| if m >= 2 { local_charpoly_ordinary(m).map(|s| s.lcm_of_orders()).unwrap_or(m) } else { 1 })
        .collect();
    Ok(orders_from_witnesses(lattice, |h| {
        witness_flats(lattice, h, i, dense_only)
            .map(|f| if f.codim == 2 { local[f.multiplicity] } else { f.multiplicity })
            .collect()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBounds {
    pub degree: usize,
    pub admissible_orders: Vec<usize>,
    pub per_hyperplane_witnesses: BTreeMap<usize, Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub d: usize,
    pub dense_only: bool,
    pub degrees: Vec<DegreeBounds>,
}

/// Bounds for every degree `0..=n`; refined orders below the top degree
/// when requested.
pub fn bounds_report(lattice: &IntersectionLattice, dense_only: bool, refined: bool) -> Result<BoundsReport> {
    let n = lattice.ambient_dim();
    let d = lattice.arrangement().d();
    let degrees = (0..=n)
        .map(|i| {
            Ok(DegreeBounds {
                degree: i,
                admissible_orders: admissible_orders(lattice, i, dense_only)?,
                per_hyperplane_witnesses: (0..d).map(|h| (h, witnesses(lattice, h, i, dense_only))).collect(),
                refined: if refined && i < n { Some(refined_orders(lattice, i, dense_only)?) } else { None },
            })
        })
        .collect::<Result<_>>()?;
    Ok(BoundsReport { d, dense_only, degrees })
}
