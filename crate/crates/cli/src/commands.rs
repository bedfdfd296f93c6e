use milnor_core::bounds::{admissible_orders, bounds_report, relprime_shortcut};
use milnor_core::lattice::{build_lattice, IntersectionLattice};
use milnor_core::lines::{triple_point_module, LineSystem, SpectrumReport};
use milnor_core::section::generic_section_with_lattice;
use milnor_core::zeta::{euler_char_by_strata, reconstruct_top_charpoly, zeta_report};
use milnor_core::{Arrangement, Error, ExponentConvention};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Failure;

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Integers that fit in `i64` as numbers, larger ones as decimal strings.
fn int(x: impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

pub fn validate(a: &Arrangement) -> Value {
    json!({ "canonical": a.to_text(), "rational": a.is_rational() })
}

pub fn lattice(a: &Arrangement) -> Result<Value, Failure> {
    lattice_of(&build_lattice(a))
}

fn lattice_of(l: &IntersectionLattice) -> Result<Value, Failure> {
    let p = l.poincare_projective()?;
    Ok(json!({
        "rank": l.rank(),
        "flats": to_value(&l.flats()),
        "central_poincare": to_value(&l.central_poincare()),
        "poincare": to_value(&p),
        "betti": (0..=l.ambient_dim()).map(|i| int(p.coeff(i))).collect::<Vec<_>>(),
        "euler_char": int(l.euler_char()?),
    }))
}

pub fn bounds(a: &Arrangement, degree: Option<usize>, dense_only: bool, refined: bool) -> Result<Value, Failure> {
    let n = a.ambient_dim();
    if let Some(i) = degree.filter(|&i| i > n) {
        return Err(Error::InvalidArgument(format!("degree {i} exceeds the ambient dimension {n}")).into());
    }
    let l = build_lattice(a);
    let mut report = bounds_report(&l, dense_only, refined)?;
    if let Some(i) = degree {
        report.degrees.retain(|b| b.degree == i);
    }
    let mut v = to_value(&report);
    v["coprime_shortcut"] = relprime_shortcut(&l)
        .into_iter()
        .filter(|(i, _)| degree.is_none_or(|want| want == *i))
        .map(|(i, hit)| json!({ "degree": i, "only_eigenvalue_one": hit }))
        .collect();
    Ok(v)
}

pub fn zeta(a: &Arrangement) -> Result<Value, Failure> {
    Ok(to_value(&zeta_report(&build_lattice(a))?))
}

/// The line arrangement whose spectrum is computed, the lattice it came
/// from, and section data when a reduction was needed.
struct Reduced {
    lattice: IntersectionLattice,
    section: Option<Value>,
}

fn reduce_to_lines(l: &IntersectionLattice, seed: u64) -> Result<Reduced, Failure> {
    match l.ambient_dim() {
        2 => Ok(Reduced { lattice: l.clone(), section: None }),
        1 => Err(Error::InvalidDimension("first homology spectrum needs ambient dimension at least 2".into()).into()),
        _ => {
            let s = generic_section_with_lattice(l, 2, seed)?;
            let info = json!({
                "seed": seed,
                "attempts": s.attempts,
                "plane": s.plane,
                "hyperplanes": s.arrangement.hyperplanes().iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok(Reduced { lattice: build_lattice(&s.arrangement), section: Some(info) })
        }
    }
}

fn spectrum_value(l: &IntersectionLattice, report: &SpectrumReport) -> Result<Value, Failure> {
    let mut v = to_value(report);
    match triple_point_module(l, report) {
        Ok(t) => v["triple_point_module"] = to_value(&t),
        Err(Error::NotTriplePointArrangement(_)) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(v)
}

pub fn charpoly(a: &Arrangement, section: bool, seed: u64, convention: ExponentConvention) -> Result<Value, Failure> {
    if a.ambient_dim() > 2 && !section {
        return Err(Error::InvalidDimension(format!(
            "ambient dimension {} needs --section to reduce to lines",
            a.ambient_dim()
        ))
        .into());
    }
    let r = reduce_to_lines(&build_lattice(a), seed)?;
    let report = LineSystem::new(&r.lattice, convention)?.spectrum()?;
    let mut v = spectrum_value(&r.lattice, &report)?;
    if let Some(s) = r.section {
        v["section"] = s;
    }
    Ok(v)
}

pub fn section(a: &Arrangement, k: usize, seed: u64) -> Result<Value, Failure> {
    let s = generic_section_with_lattice(&build_lattice(a), k, seed)?;
    Ok(json!({
        "k": k,
        "seed": seed,
        "attempts": s.attempts,
        "plane": s.plane,
        "canonical": s.arrangement.to_text(),
        "correspondence": to_value(&s.correspondence),
    }))
}

fn check(name: &str, outcome: Result<(bool, String), Error>) -> Value {
    let (pass, detail) = outcome.unwrap_or_else(|e| (false, e.to_string()));
    json!({ "name": name, "pass": pass, "detail": detail })
}

/// Runs every applicable computation. The flag is false when a cross-check
/// fails.
pub fn report(a: &Arrangement, seed: u64, convention: ExponentConvention) -> Result<(Value, bool), Failure> {
    let l = build_lattice(a);
    let zeta = zeta_report(&l)?;
    let bounds = bounds_report(&l, true, true)?;
    let mut out = json!({
        "canonical": a.to_text(),
        "lattice": lattice_of(&l)?,
        "bounds": to_value(&bounds),
        "zeta": to_value(&zeta),
    });

    let strata_chi = euler_char_by_strata(&l);
    let mut checks = vec![check(
        "euler_char_by_strata",
        Ok((strata_chi == zeta.euler_char, format!("strata {strata_chi}, lattice {}", zeta.euler_char))),
    )];

    if a.ambient_dim() >= 2 {
        let r = reduce_to_lines(&l, seed)?;
        let spectrum = LineSystem::new(&r.lattice, convention)?.spectrum()?;
        let b1 = &zeta.eigenvalue_one[1];
        checks.push(check(
            "eigenvalue_one_matches_betti",
            Ok((spectrum.mult[0].to_string() == b1.to_string(), format!("spectrum {}, b1 {b1}", spectrum.mult[0]))),
        ));
        checks.push(check(
            "spectrum_within_bounds",
            admissible_orders(&l, 1, true).map(|adm| {
                let orders = spectrum.spectrum.orders();
                (orders.iter().all(|o| adm.contains(o)), format!("orders {orders:?}, admissible {adm:?}"))
            }),
        ));
        checks.push(check(
            "top_degree_from_zeta",
            reconstruct_top_charpoly(&r.lattice, &spectrum.det_one_minus_t)
                .map(|p2| (p2.coeff(0) == 1.into(), format!("det(1-tT_2) = {p2}"))),
        ));
        out["spectrum"] = spectrum_value(&r.lattice, &spectrum)?;
        if let Some(s) = r.section {
            out["section"] = s;
        }
    }

    let ok = checks.iter().all(|c| c["pass"] == true);
    out["checks"] = Value::Array(checks);
    Ok((out, ok))
}
