#![allow(dead_code)]

use milnor_core::{Arrangement, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Lines with small integer coefficients; small ranges produce many
/// concurrences. Zero and proportional rows are dropped.
pub fn random_lines(rng: &mut impl Rng, max_lines: usize, range: i64) -> Option<Arrangement> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let target = rng.gen_range(3..=max_lines);
    let mut tries = 0;
    while rows.len() < target && tries < 200 {
        tries += 1;
        let r: Vec<i64> = (0..3).map(|_| rng.gen_range(-range..=range)).collect();
        let cand: Vec<Vec<i64>> = rows.iter().cloned().chain(std::iter::once(r)).collect();
        let refs: Vec<&[i64]> = cand.iter().map(Vec::as_slice).collect();
        if Arrangement::from_ints(2, &refs).is_ok() {
            rows = cand;
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Arrangement::from_ints(2, &refs).ok()
}

pub fn corpus_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random invertible integer matrix.
pub fn random_gl3(rng: &mut impl Rng) -> Vec<Vec<Scalar>> {
    loop {
        let m: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det != 0 {
            return m.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        }
    }
}

/// Textbook rank over Q, kept separate from the library's elimination.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn rat_pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// Exhaustive search for a split of `vectors` into two nonempty parts whose
/// ranks add up to the total rank.
pub fn decomposable_by_bipartition(vectors: &[Vec<Scalar>]) -> bool {
    let n = vectors.len();
    let total = milnor_core::linalg::rank(vectors[0].len(), vectors);
    (1..(1u32 << n) - 1).any(|mask| {
        let (a, b): (Vec<_>, Vec<_>) = (0..n).partition(|&i| mask >> i & 1 == 1);
        let pick = |s: &[usize]| s.iter().map(|&i| vectors[i].clone()).collect::<Vec<_>>();
        let w = vectors[0].len();
        milnor_core::linalg::rank(w, &pick(&a)) + milnor_core::linalg::rank(w, &pick(&b)) == total
    })
}

/// Dimension of degree-`e` plane curves with multiplicity `>= s_P` at each
/// rational point, from homogeneous partial derivatives of order `s_P - 1`
/// (Euler's identity makes these equivalent to all lower-order conditions).
pub fn h0_by_homogeneous_derivatives(points: &[([i64; 3], usize)], e: usize) -> usize {
    let mons: Vec<[usize; 3]> =
        (0..=e).flat_map(|a| (0..=e - a).map(move |b| [a, b, e - a - b])).collect();
    let falling = |n: usize, k: usize| (0..k).fold(1i64, |acc, i| acc * (n as i64 - i as i64));
    let mut rows = Vec::new();
    for (p, s) in points {
        if *s == 0 {
            continue;
        }
        if *s > e + 1 {
            // any curve of degree e with multiplicity > e at P is zero
            return 0;
        }
        let order = s - 1;
        for b0 in 0..=order {
            for b1 in 0..=order - b0 {
                let beta = [b0, b1, order - b0 - b1];
                rows.push(
                    mons.iter()
                        .map(|m| {
                            if (0..3).any(|i| m[i] < beta[i]) {
                                return BigRational::zero();
                            }
                            (0..3).fold(BigRational::one(), |acc, i| {
                                acc * int(falling(m[i], beta[i])) * rat_pow(&int(p[i]), m[i] - beta[i])
                            })
                        })
                        .collect(),
                );
            }
        }
    }
    mons.len() - if rows.is_empty() { 0 } else { rational_rank(rows) }
}
