//! Built-in arrangement families.

use crate::arrangement::{parse_arrangement, Arrangement};
use crate::error::{Error, Result};
use crate::lattice::build_lattice;
use crate::scalar::Scalar;

const CEVA3: &str = include_str!("../data/ceva3.arr");

const GENERIC_RETRIES: usize = 16;

/// Looks up a family by name, e.g. `("braid", [3])` or `("generic", [2, 5])`.
pub fn builtin(name: &str, params: &[usize]) -> Result<Arrangement> {
    match (name, params) {
        ("braid", [n]) => braid(*n),
        ("ceva", [q]) => ceva(*q),
        ("generic", [n, d]) => generic(*n, *d),
        ("triangle-medians", []) => Ok(triangle_medians()),
        _ => Err(Error::UnsupportedBuiltin(format!(
            "{name}{}",
            if params.is_empty() {
                String::new()
            } else {
                format!(":{}", params.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            }
        ))),
    }
}

/// Parses `name` or `name:p1,p2,...`.
pub fn parse_builtin_spec(spec: &str) -> Result<Arrangement> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let params = params
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::UnsupportedBuiltin(spec.to_owned())))
        .collect::<Result<Vec<_>>>()?;
    builtin(name, &params)
}

/// Hyperplanes `x_i - x_j`, `0 <= i < j <= n`, in `P^n`.
pub fn braid(n: usize) -> Result<Arrangement> {
    if n == 0 {
        return Err(Error::InvalidDimension("braid arrangement needs n >= 1".into()));
    }
    let mut rows = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let mut r = vec![Scalar::from_int(0); n + 1];
            r[i] = Scalar::from_int(1);
            r[j] = Scalar::from_int(-1);
            rows.push(r);
        }
    }
    Arrangement::new(n, rows)
}

/// Linear factors of `(x^q - y^q)(y^q - z^q)(x^q - z^q)` for `q` in 1..=3.
/// For `q = 3` the coefficients live in `Q(w)`.
pub fn ceva(q: usize) -> Result<Arrangement> {
    match q {
        1 => Arrangement::from_ints(2, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]),
        2 => Arrangement::from_ints(
            2,
            &[&[1, -1, 0], &[1, 1, 0], &[0, 1, -1], &[0, 1, 1], &[1, 0, -1], &[1, 0, 1]],
        ),
        3 => ceva3(),
        _ => Err(Error::UnsupportedBuiltin(format!("ceva:{q}"))),
    }
}

fn ceva3() -> Result<Arrangement> {
    let a = parse_arrangement(CEVA3)?;
    let lattice = build_lattice(&a);
    let mut mults: Vec<usize> = lattice.of_codim(2).map(|f| f.multiplicity).collect();
    mults.sort();
    if a.d() != 9 || mults != vec![3; 12] {
        return Err(Error::InternalInconsistency(format!("ceva3 data has lattice signature {mults:?}")));
    }
    Ok(a)
}

/// Sides and medians of a triangle: `x, y, z, x - y, y - z, x - z`.
pub fn triangle_medians() -> Arrangement {
    Arrangement::from_ints(
        2,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[0, 1, -1], &[1, 0, -1]],
    )
    .expect("valid")
}

/// `d` hyperplanes in general position in `P^n`, taken from the moment curve:
/// hyperplane `i` has coefficients `(1, t, t^2, ..., t^n)` with `t = i`.
pub fn generic(n: usize, d: usize) -> Result<Arrangement> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidDimension("generic arrangement needs n >= 1 and d >= 1".into()));
    }
    for shift in 0..GENERIC_RETRIES as i64 {
        let rows = (1..=d as i64)
            .map(|i| {
                let t = Scalar::from_int(i + shift * d as i64);
                (0..=n as u32).map(|k| t.pow(k)).collect()
            })
            .collect();
        let a = Arrangement::new(n, rows)?;
        if is_generic(&a) {
            return Ok(a);
        }
    }
    Err(Error::GenericityFailure(GENERIC_RETRIES))
}

/// Every stratum of codimension `c` lies on exactly `c` hyperplanes.
pub fn is_generic(a: &Arrangement) -> bool {
    build_lattice(a).strata().all(|f| f.multiplicity == f.codim)
}
