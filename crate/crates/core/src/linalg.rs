//! Exact Gaussian elimination over [`Scalar`].

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Reduced row echelon basis of a growing row space.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<'a, I>(width: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [Scalar]>,
    {
        let mut e = Self::new(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *o = &*o - &(&f * r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the row space; returns `false` when it was already there.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep fully reduced: clear the new pivot column from older rows
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (o, n) in row.iter_mut().zip(&r).skip(p) {
                if !n.is_zero() {
                    *o = &*o - &(&f * n);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Basis of the orthogonal complement `{x : <row, x> = 0 for every row}`.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut free = vec![true; self.width];
        for &p in &self.pivots {
            free[p] = false;
        }
        (0..self.width)
            .filter(|&c| free[c])
            .map(|c| {
                let mut x = vec![Scalar::zero(); self.width];
                x[c] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -&row[c];
                }
                x
            })
            .collect()
    }
}

pub fn rank(width: usize, rows: &[Vec<Scalar>]) -> usize {
    Echelon::from_rows(width, rows.iter().map(Vec::as_slice)).rank()
}

/// Kernel basis of the matrix with the given rows.
pub fn kernel(width: usize, rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    Echelon::from_rows(width, rows.iter().map(Vec::as_slice)).null_space()
}

/// Greedy basis of `vectors` (earliest indices win) together with, for every
/// vector outside the basis, the basis indices that appear with nonzero
/// coefficient when it is written in that basis.
pub fn fundamental_circuits(vectors: &[Vec<Scalar>]) -> (Vec<usize>, Vec<(usize, Vec<usize>)>) {
    let Some(width) = vectors.first().map(Vec::len) else {
        return (Vec::new(), Vec::new());
    };
    let mut ech = Echelon::new(width);
    let mut basis = Vec::new();
    let mut rest = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if ech.insert(v) {
            basis.push(i);
        } else {
            rest.push(i);
        }
    }
    let circuits = rest
        .into_iter()
        .map(|x| {
            // columns: basis vectors then x; kernel is one-dimensional
            let rows: Vec<Vec<Scalar>> = (0..width)
                .map(|c| {
                    basis
                        .iter()
                        .map(|&b| vectors[b][c].clone())
                        .chain(std::iter::once(vectors[x][c].clone()))
                        .collect()
                })
                .collect();
            let ker = kernel(basis.len() + 1, &rows);
            debug_assert_eq!(ker.len(), 1);
            let support = basis
                .iter()
                .zip(&ker[0])
                .filter(|(_, c)| !c.is_zero())
                .map(|(&b, _)| b)
                .collect();
            (x, support)
        })
        .collect();
    (basis, circuits)
}
