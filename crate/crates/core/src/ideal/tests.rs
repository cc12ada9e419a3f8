use proptest::prelude::*;

use super::*;
use crate::polyring::{parse_polynomial, Scalar};

fn ring2() -> Ring {
    Ring::rational(["x", "y"])
}

fn ring3() -> Ring {
    Ring::rational(["x", "y", "z"])
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

#[test]
fn sums() {
    let r = ring2();
    let s = ideal_sum(&ideal(&r, &["x^2 - y"]), &ideal(&r, &["y"])).unwrap();
    assert!(ideal_equal(&s, &ideal(&r, &["x^2", "y"])).unwrap());
    let s = ideal_sum(&ideal(&r, &["x*y"]), &ideal(&r, &["x - y"])).unwrap();
    assert_eq!(s.generators().len(), 2);
    assert!(ideal_equal(&s, &ideal(&r, &["x - y", "y^2"])).unwrap());
    let j = ideal(&r, &["x^3 - y", "x*y"]);
    assert!(ideal_equal(&ideal_sum(&j, &Ideal::zero(&r)).unwrap(), &j).unwrap());
    let other = Ideal::zero(&Ring::rational(["u"]));
    assert!(matches!(ideal_sum(&j, &other), Err(Error::RingMismatch)));
}

#[test]
fn intersections() {
    let r = ring2();
    let i = ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert_eq!(i.generators(), &[p(&r, "x*y")]);

    let r3 = ring3();
    let i = ideal_intersection(&ideal(&r3, &["z - x"]), &ideal(&r3, &["z - y"])).unwrap();
    assert!(ideal_equal(&i, &ideal(&r3, &["(z-x)*(z-y)"])).unwrap());

    let j = ideal(&r, &["x^2 - y", "x*y - 1"]);
    assert!(ideal_equal(&ideal_intersection(&j, &j).unwrap(), &j).unwrap());

    assert!(ideal_intersection(&j, &Ideal::zero(&r)).unwrap().is_zero());
    assert!(ideal_equal(&ideal_intersection(&j, &Ideal::unit(&r)).unwrap(), &j).unwrap());
}

#[test]
fn radical_membership() {
    let r = ring2();
    let j = ideal(&r, &["x^2", "y"]);
    assert!(radical_member(&p(&r, "x"), &j).unwrap());
    assert!(!j.contains(&p(&r, "x")).unwrap());
    assert!(!radical_member(&r.one(), &j).unwrap());
    assert!(radical_member(&r.zero(), &Ideal::zero(&r)).unwrap());
    assert!(!radical_member(&p(&r, "x"), &Ideal::zero(&r)).unwrap());
    // x+y vanishes on V(<x^3, y^2>) = {0}
    assert!(radical_member(&p(&r, "x + y"), &ideal(&r, &["x^3", "y^2"])).unwrap());
    // but x - 1 does not
    assert!(!radical_member(&p(&r, "x - 1"), &ideal(&r, &["x^3", "y^2"])).unwrap());
}

#[test]
fn zero_dimensionality() {
    let r = ring2();
    assert!(is_zero_dimensional(&ideal(&r, &["x^2", "y"])));
    assert!(is_zero_dimensional(&ideal(&r, &["x*y", "x - y"])));
    assert!(!is_zero_dimensional(&ideal(&r, &["y - x^2"])));
    assert!(is_zero_dimensional(&Ideal::unit(&r)));
    assert!(!is_zero_dimensional(&Ideal::zero(&r)));
}

#[test]
fn radicals_of_the_counterexample_sums() {
    let r = ring2();
    let max = ideal(&r, &["x", "y"]);
    let rad = zero_dim_radical(&ideal(&r, &["x^2", "y"])).unwrap();
    assert!(ideal_equal(&rad, &max).unwrap());
    assert!(!is_radical(&ideal(&r, &["x^2", "y"])).unwrap());

    let rad = zero_dim_radical(&ideal(&r, &["x*y", "x - y"])).unwrap();
    assert!(ideal_equal(&rad, &max).unwrap());
    assert!(!is_radical(&ideal(&r, &["x*y", "x - y"])).unwrap());

    assert!(ideal_equal(&zero_dim_radical(&max).unwrap(), &max).unwrap());
    assert!(is_radical(&max).unwrap());

    let r3 = ring3();
    let s = ideal_sum(
        &ideal_intersection(&ideal(&r3, &["z - x"]), &ideal(&r3, &["z - y"])).unwrap(),
        &ideal(&r3, &["x", "y"]),
    )
    .unwrap();
    assert!(ideal_equal(&s, &ideal(&r3, &["x", "y", "z^2"])).unwrap());
    assert!(!is_radical(&s).unwrap());

    assert_eq!(zero_dim_radical(&ideal(&r, &["y - x^2"])).unwrap_err(), Error::PositiveDimensional);
}

#[test]
fn radical_of_points_with_multiplicity() {
    // two points (0,0), (1,1): one of them doubled
    let r = ring2();
    let j = ideal(&r, &["x - y", "x^2*(x - 1)"]);
    let rad = zero_dim_radical(&j).unwrap();
    assert!(ideal_equal(&rad, &ideal(&r, &["x - y", "x*(x - 1)"])).unwrap());
    // idempotent and radical
    assert!(ideal_equal(&zero_dim_radical(&rad).unwrap(), &rad).unwrap());
    assert!(is_radical(&rad).unwrap());
    // a non-monomial radical that is not generated by univariate parts
    let circle_line = ideal(&r, &["x^2 + y^2 - 2", "x - y"]);
    assert!(is_radical(&circle_line).unwrap());
}

#[test]
fn radical_over_gaussian_rationals() {
    let r = Ring::new(["x"], crate::polyring::Field::GaussianRational);
    let j = Ideal::new(&r, vec![(&r.var(0) - &r.constant(Scalar::i())).pow(2)]).unwrap();
    let rad = zero_dim_radical(&j).unwrap();
    assert_eq!(rad.basis().elements(), &[&r.var(0) - &r.constant(Scalar::i())]);
}

#[test]
fn ideal_equality() {
    let r = ring2();
    assert!(ideal_equal(&ideal(&r, &["x^2 - y", "y"]), &ideal(&r, &["x^2", "y"])).unwrap());
    assert!(!ideal_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"])).unwrap());
}

fn small_poly(r: &Ring, terms: &[(u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(r, terms.iter().map(|&(a, b, c)| (Monomial::new(vec![a, b]), Scalar::from_int(c))))
}

fn terms(max_deg: u32) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    proptest::collection::vec((0..=max_deg, 0..=max_deg, -3i64..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn intersection_matches_two_sided_membership(a in terms(2), b in terms(2), c in terms(2), t in terms(3)) {
        let r = ring2();
        let j1 = Ideal::new(&r, vec![small_poly(&r, &a)]).unwrap();
        let j2 = Ideal::new(&r, vec![small_poly(&r, &b), small_poly(&r, &c)]).unwrap();
        prop_assume!(!j1.is_zero() && !j2.is_zero());
        let i = ideal_intersection(&j1, &j2).unwrap();
        for g in i.generators() {
            prop_assert!(j1.contains(g).unwrap() && j2.contains(g).unwrap());
        }
        let q = small_poly(&r, &t);
        // products land in both ideals
        for cand in [q.clone(), &q * &(&j1.generators()[0] * &j2.generators()[0])] {
            let both = j1.contains(&cand).unwrap() && j2.contains(&cand).unwrap();
            prop_assert_eq!(i.contains(&cand).unwrap(), both);
        }
    }

    #[test]
    fn membership_implies_radical_membership(a in terms(2), b in terms(2), t in terms(2)) {
        let r = ring2();
        let j = Ideal::new(&r, vec![small_poly(&r, &a), small_poly(&r, &b)]).unwrap();
        let q = &small_poly(&r, &t) * &j.generators()[0];
        prop_assert!(j.contains(&q).unwrap());
        prop_assert!(radical_member(&q, &j).unwrap());
    }
}
