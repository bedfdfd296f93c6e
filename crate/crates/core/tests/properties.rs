mod common;

use milnor_core::bounds::{admissible_orders, divisors, refined_orders};
use milnor_core::builtin;
use milnor_core::lattice::build_lattice;
use milnor_core::lines::LineSystem;
use milnor_core::zeta::{euler_char_by_strata, reconstruct_top_charpoly};
use milnor_core::{parse_arrangement, Arrangement, ExponentConvention, LinearForm, Scalar};
use proptest::prelude::*;

fn lines_strategy() -> impl Strategy<Value = Arrangement> {
    prop::collection::vec(prop::array::uniform3(-2i64..=2), 3..14).prop_filter_map("too few lines", |rows| {
        let mut kept: Vec<[i64; 3]> = Vec::new();
        for r in rows {
            let cand: Vec<&[i64]> = kept.iter().map(|x| &x[..]).chain(std::iter::once(&r[..])).collect();
            if kept.len() < 8 && Arrangement::from_ints(2, &cand).is_ok() {
                kept.push(r);
            }
        }
        let refs: Vec<&[i64]> = kept.iter().map(|x| &x[..]).collect();
        Arrangement::from_ints(2, &refs).ok().filter(|a| a.d() >= 3)
    })
}

fn gl3() -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3)).prop_filter_map("singular", |m| {
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        (det != 0).then(|| m.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(a in lines_strategy()) {
        prop_assert_eq!(parse_arrangement(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn canonicalization_is_idempotent(v in prop::array::uniform4(-9i64..=9), den in 1i64..6) {
        let coeffs: Vec<Scalar> = v.iter().map(|&x| Scalar::from_int(x) / Scalar::from_int(den)).collect();
        if let Some(f) = LinearForm::new(coeffs) {
            prop_assert_eq!(LinearForm::new(f.coeffs().to_vec()).unwrap(), f);
        }
    }

    #[test]
    fn spectrum_invariants(a in lines_strategy()) {
        let l = build_lattice(&a);
        let sys = LineSystem::new(&l, ExponentConvention::default()).unwrap();
        let r = sys.spectrum().unwrap();
        let d = a.d();
        prop_assert_eq!(r.mult[0], d - 1);
        prop_assert!(r.spectrum.is_conjugation_symmetric());
        for c in &r.certificates {
            prop_assert!(c.is_consistent(), "{:?}", c);
        }
        // reduced fractions
        for m in divisors(d).into_iter().filter(|&m| m > 1) {
            for k in 1..m {
                prop_assert_eq!(sys.sigma(k, m).unwrap().sigma, sys.sigma(k * d / m, d).unwrap().sigma);
            }
        }
        // soundness against the combinatorial bound
        let adm = admissible_orders(&l, 1, true).unwrap();
        for o in r.spectrum.orders() {
            prop_assert!(adm.contains(&o), "order {} not in {:?}", o, adm);
        }
        // zeta consistency
        let p2 = reconstruct_top_charpoly(&l, &r.det_one_minus_t).unwrap();
        prop_assert_eq!(p2.coeff(0), 1.into());
        // only double points: nothing off 1
        if l.of_codim(2).all(|f| f.multiplicity == 2) {
            prop_assert!(r.mult[1..].iter().all(|&m| m == 0));
        }
    }

    #[test]
    fn spectrum_is_projectively_invariant(a in lines_strategy(), m in gl3()) {
        let b = a.pullback(&m).unwrap();
        let sa = LineSystem::new(&build_lattice(&a), ExponentConvention::default()).unwrap().spectrum().unwrap();
        let sb = LineSystem::new(&build_lattice(&b), ExponentConvention::default()).unwrap().spectrum().unwrap();
        prop_assert_eq!(sa.mult, sb.mult);
    }

    #[test]
    fn lattice_invariants(a in lines_strategy()) {
        let l = build_lattice(&a);
        // alternating Möbius sum over the central lattice vanishes
        let total: i64 = 1 + l.flats().iter().map(|f| f.mobius).sum::<i64>();
        prop_assert_eq!(total, 0);
        for f in l.flats() {
            prop_assert!(f.multiplicity >= f.codim);
            prop_assert_eq!(f.mobius.signum(), if f.codim % 2 == 0 { 1 } else { -1 });
            if f.codim == 1 {
                prop_assert!(f.dense && f.multiplicity == 1);
            }
        }
        prop_assert_eq!(euler_char_by_strata(&l), l.euler_char().unwrap());
        prop_assert_eq!(l.betti(0).unwrap(), 1.into());
    }

    #[test]
    fn bounds_monotone_and_nested(a in lines_strategy()) {
        let l = build_lattice(&a);
        let d = a.d();
        let mut prev: Vec<usize> = vec![1];
        for i in 0..=2 {
            let dense = admissible_orders(&l, i, true).unwrap();
            let all = admissible_orders(&l, i, false).unwrap();
            prop_assert!(dense.contains(&1));
            prop_assert!(dense.iter().all(|e| d % e == 0));
            prop_assert!(dense.iter().all(|e| all.contains(e)));
            prop_assert!(prev.iter().all(|e| dense.contains(e)));
            if i < 2 {
                let refined = refined_orders(&l, i, true).unwrap();
                prop_assert!(refined.iter().all(|e| dense.contains(e)));
            }
            prev = dense;
        }
        prop_assert_eq!(prev, divisors(d));
    }
}

#[test]
fn braid_and_generic_higher_dimensions() {
    for n in 2..=4 {
        let l = build_lattice(&builtin::braid(n).unwrap());
        let mut prev = vec![1];
        for i in 0..=n {
            let cur = admissible_orders(&l, i, true).unwrap();
            assert!(prev.iter().all(|e| cur.contains(e)));
            prev = cur;
        }
    }
    for n in 1..=3 {
        for d in 1..=8 {
            assert!(builtin::is_generic(&builtin::generic(n, d).unwrap()));
        }
    }
}
