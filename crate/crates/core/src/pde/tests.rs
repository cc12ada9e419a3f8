use proptest::prelude::*;

use super::*;
use crate::groebner::multivariate_divide;
use crate::polyring::{fischer_product, parse_polynomial, partial, Field};

fn p(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

fn ps(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|t| p(r, t)).collect()
}

fn laplacian(f: &Polynomial) -> Polynomial {
    (0..f.ring().nvars()).fold(f.ring().zero(), |acc, i| acc + partial(&partial(f, i), i))
}

#[test]
fn space_layout() {
    let r = Ring::rational(["x", "y", "z"]);
    let s = DegreeBoundedSpace::new(&r, 2);
    assert_eq!(s.dim(), 10);
    assert_eq!(space_dimension(3, 2), 10);
    assert_eq!(space_dimension(2, -1), 0);
    // y^2 precedes x*z in grevlex
    let names: Vec<_> = s.basis().iter().map(|m| r.monomial(m.clone(), Scalar::from_int(1)).to_string()).collect();
    assert_eq!(names, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2", "x", "y", "z", "1"]);
    let f = p(&r, "3*x*z - y + 1/2");
    assert_eq!(s.poly(&s.coords(&f).unwrap()), f);
    assert!(s.coords(&p(&r, "x^3")).is_none());
}

#[test]
fn kernel_bases() {
    let r = Ring::rational(["x", "y"]);
    let k = kernel_basis(&p(&r, "x^2 + y^2"), 2).unwrap();
    assert_eq!(k, ps(&r, &["x^2 - y^2", "x*y", "x", "y", "1"]));

    let k = kernel_basis(&p(&r, "x"), 2).unwrap();
    assert_eq!(k, ps(&r, &["y^2", "y", "1"]));

    let k = kernel_basis(&p(&r, "x^3*y"), 2).unwrap();
    assert_eq!(k.len(), 6);

    assert!(kernel_basis(&r.zero(), 2).is_err());
}

#[test]
fn homogeneous_splits() {
    let r = Ring::rational(["x", "y"]);
    let l = p(&r, "x^2 + y^2");
    assert_eq!(fischer_split_homogeneous(&p(&r, "x^2"), &l).unwrap(), (p(&r, "1/2*x^2 - 1/2*y^2"), p(&r, "1/2")));
    assert_eq!(fischer_split_homogeneous(&p(&r, "x*y"), &l).unwrap(), (p(&r, "x*y"), r.zero()));
    assert_eq!(fischer_split_homogeneous(&l, &l).unwrap(), (r.zero(), r.one()));
    assert_eq!(fischer_split_homogeneous(&p(&r, "x"), &l).unwrap(), (p(&r, "x"), r.zero()));
    assert_eq!(fischer_split_homogeneous(&p(&r, "x^2 + 1"), &l).unwrap_err(), Error::NotHomogeneous);
}

#[test]
fn harmonic_example() {
    let r = Ring::rational(["x", "y"]);
    let q = p(&r, "x^2 + y^2 - 1");
    let s = pde_interpolate(&p(&r, "x^2"), &q, None).unwrap();
    assert_eq!(s.kernel_part, p(&r, "1/2 + (x^2 - y^2)/2"));
    // p = f + q·h, so f − p = −q/2
    assert_eq!(s.cofactor, p(&r, "1/2"));
    assert!(s.verify());
    assert!(laplacian(&s.kernel_part).is_zero());
    assert_eq!(s.kernel_part.to_string(), "1/2*x^2 - 1/2*y^2 + 1/2");

    let h = harmonic_interpolate(&p(&r, "x^2"), &q).unwrap();
    assert_eq!(h, s);
    assert_eq!(harmonic_interpolate(&p(&r, "x*y"), &q).unwrap().kernel_part, p(&r, "x*y"));
    assert_eq!(harmonic_interpolate(&p(&r, "x"), &p(&r, "x^2 - y^2")).unwrap_err(), Error::LeadingFormMismatch);
}

#[test]
fn trivial_cases() {
    let r = Ring::rational(["x", "y"]);
    let q = p(&r, "x^3 - y + 2");
    let s = pde_interpolate(&p(&r, "x*y + 1"), &q, None).unwrap();
    assert_eq!(s.kernel_part, p(&r, "x*y + 1"));
    assert!(s.cofactor.is_zero());

    let q = p(&r, "x^2 + y^2 - 1");
    let s = pde_interpolate(&p(&r, "x^3 - 3*x*y^2"), &q, None).unwrap();
    assert_eq!(s.kernel_part, p(&r, "x^3 - 3*x*y^2"));
    assert!(s.cofactor.is_zero());

    assert_eq!(pde_interpolate(&p(&r, "x"), &p(&r, "3"), None).unwrap_err(), Error::ConstantModulus);
}

#[test]
fn transversality() {
    let r = Ring::rational(["x", "y"]);
    assert!(!transversality_check(&p(&r, "x^2"), &p(&r, "x*y"), 2).unwrap());
    assert!(transversality_check(&p(&r, "x^2"), &p(&r, "x^2"), 2).unwrap());
    assert!(transversality_check(&p(&r, "x^2"), &p(&r, "x^2"), 5).unwrap());
    for q in ["x^2 + y^2 - 1", "x*y + x", "x^2 - 2*x*y + 3*y^2"] {
        let q = p(&r, q);
        let lead = q.leading_form().unwrap();
        for n in 0..6 {
            assert!(transversality_check(&lead, &q, n).unwrap());
        }
    }
    let rc = Ring::new(["x", "y"], Field::GaussianRational);
    let q = p(&rc, "x^2 + i*x*y - y^2 + 1");
    assert!(transversality_check(&q.leading_form().unwrap(), &q, 4).unwrap());
}

#[test]
fn user_operator() {
    let r = Ring::rational(["x", "y"]);
    let q = p(&r, "x^2 + y^2 - 1");
    let s = pde_interpolate(&p(&r, "x^2"), &q, Some(&p(&r, "x^2 + y^2"))).unwrap();
    assert_eq!(s.kernel_part, p(&r, "1/2*x^2 - 1/2*y^2 + 1/2"));

    // a non-homogeneous operator with the right lowest degree
    let op = p(&r, "x^2 + y^2 + x^3");
    let s = pde_interpolate(&p(&r, "x^3 + y"), &q, Some(&op)).unwrap();
    assert!(s.verify());

    assert_eq!(
        pde_interpolate(&p(&r, "x"), &q, Some(&p(&r, "x"))).unwrap_err(),
        Error::LowestDegreeMismatch { operator: 1, modulus: 2 }
    );
    assert_eq!(
        pde_interpolate(&p(&r, "x^2"), &p(&r, "x*y"), Some(&p(&r, "x^2"))).unwrap_err(),
        Error::TransversalityFailure(2)
    );
}

#[test]
fn gaussian_leading_form() {
    let r = Ring::new(["x", "y"], Field::GaussianRational);
    let q = p(&r, "x^2 + i*x*y + 1");
    let s = pde_interpolate(&p(&r, "x^3 + i*y^2"), &q, None).unwrap();
    assert!(s.verify());
    let joint = pde_interpolate(&p(&r, "x^3 + i*y^2"), &q, Some(&q.leading_form().unwrap())).unwrap();
    assert_eq!(joint.kernel_part, s.kernel_part);
    assert_eq!(joint.cofactor, s.cofactor);
}

fn poly(r: &Ring, terms: &[(Vec<u32>, i64, i64)], max_deg: u32) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms.iter().filter(|(e, _, _)| e.iter().sum::<u32>() <= max_deg).map(|(e, a, b)| {
            (Monomial::new(e.clone()), &Scalar::from_int(*a) + &(&Scalar::i() * &Scalar::from_int(*b)))
        }),
    )
}

fn terms(max_deg: u32, n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    proptest::collection::vec((proptest::collection::vec(0..=max_deg, 2), -3i64..4, -1i64..2), 1..=n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn split_is_unique_and_exact(pt in terms(4, 5), qt in terms(2, 4), rt in terms(2, 3)) {
        let ring = Ring::new(["x", "y"], Field::GaussianRational);
        let (pp, q, rr) = (poly(&ring, &pt, 4), poly(&ring, &qt, 2), poly(&ring, &rt, 2));
        prop_assume!(q.degree().unwrap_or(0) >= 1);
        let a = pde_interpolate(&pp, &q, None).unwrap();
        prop_assert!(a.verify());
        prop_assert!(a.kernel_part.degree().unwrap_or(0) <= pp.degree().unwrap_or(0));
        let b = pde_interpolate(&(&pp + &(&q * &rr)), &q, None).unwrap();
        prop_assert_eq!(&a.kernel_part, &b.kernel_part);
        let diff = &a.kernel_part - &pp;
        let div = multivariate_divide(&diff, std::slice::from_ref(&q), MonomialOrder::Grevlex).unwrap();
        prop_assert!(div.remainder.is_zero());
    }

    #[test]
    fn homogeneous_split_is_fischer_orthogonal(gt in terms(4, 5), lt in terms(2, 3), k in 2u32..5, l in 1u32..3) {
        let ring = Ring::new(["x", "y"], Field::GaussianRational);
        let g = poly(&ring, &gt, 4).homogeneous_component(k);
        let lop = poly(&ring, &lt, 2).homogeneous_component(l);
        prop_assume!(!lop.is_zero() && k >= l);
        let (f, h) = fischer_split_homogeneous(&g, &lop).unwrap();
        prop_assert_eq!(&(&f + &(&lop * &h)), &g);
        for m in monomials_of_degree(2, k - l) {
            let lm = &lop * &ring.monomial(m, Scalar::from_int(1));
            prop_assert!(fischer_product(&f, &lm).unwrap().is_zero());
        }
    }
}
