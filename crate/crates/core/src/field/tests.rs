use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::arith::order_mod;

fn f7() -> Field {
    make_field(7, 1).unwrap()
}

fn el(f: &Field, c: &[u64]) -> FieldElement {
    FieldElement::new(f, c).unwrap()
}

/// Enumerates monic cubics over F_s in lexicographic order of
/// (c0, c1, c2) and returns the first without a root. A cubic with no root
/// is irreducible, so this never touches the gcd-based test.
fn smallest_rootless_cubic(s: u64) -> Vec<u64> {
    for c0 in 0..s {
        for c1 in 0..s {
            for c2 in 0..s {
                let has_root = (0..s).any(|x| (c0 + c1 * x + c2 * x * x + x * x * x) % s == 0);
                if !has_root {
                    return vec![c0, c1, c2, 1];
                }
            }
        }
    }
    unreachable!()
}

#[test]
fn make_field_prime_and_cubic() {
    let f = f7();
    assert_eq!(f.order(), 7);
    assert_eq!(f.modulus(), &[0, 1]);

    let f343 = make_field(7, 3).unwrap();
    assert_eq!(f343.order(), 343);
    let oracle = smallest_rootless_cubic(7);
    assert_eq!(oracle, vec![1, 0, 1, 1]);
    assert_eq!(f343.modulus(), oracle.as_slice());

    assert_eq!(make_field(13, 3).unwrap().modulus(), smallest_rootless_cubic(13).as_slice());
}

#[test]
fn make_field_rejects_bad_characteristic() {
    assert!(matches!(make_field(6, 1), Err(Error::Parameter(_))));
    assert!(matches!(make_field(2, 1), Err(Error::Parameter(_))));
    assert!(matches!(make_field(9, 2), Err(Error::Parameter(_))));
    assert!(matches!(make_field(7, 0), Err(Error::Parameter(_))));
}

#[test]
fn with_modulus_checks_irreducibility() {
    assert!(FieldSpec::with_modulus(7, 3, vec![1, 0, 1, 1]).is_ok());
    assert!(FieldSpec::with_modulus(7, 3, vec![1, 0, 0, 1]).is_err());
    assert!(FieldSpec::with_modulus(7, 3, vec![1, 0, 1, 2]).is_err());
}

#[test]
fn ff_pow_examples() {
    let f = f7();
    let two = FieldElement::constant(&f, 2);
    assert!(ff_pow(&two, 0).unwrap().is_one());
    assert!(ff_pow(&FieldElement::zero(&f), 0).unwrap().is_one());
    assert_eq!(ff_pow(&two, 3).unwrap(), FieldElement::one(&f));
    assert_eq!(ff_pow(&two, -1).unwrap(), FieldElement::constant(&f, 4));
    assert!(matches!(ff_pow(&FieldElement::zero(&f), -1), Err(Error::Domain(_))));
    let huge = BigInt::from(6u64).pow(40) + 3;
    assert_eq!(ff_pow(&two, huge).unwrap(), FieldElement::one(&f));
}

#[test]
fn mult_order_examples() {
    let f = f7();
    assert_eq!(mult_order(&FieldElement::one(&f)).unwrap(), 1);
    assert_eq!(mult_order(&FieldElement::constant(&f, 2)).unwrap(), 3);
    assert_eq!(mult_order(&FieldElement::constant(&f, 3)).unwrap(), 6);
    assert!(matches!(mult_order(&FieldElement::zero(&f)), Err(Error::Domain(_))));
}

#[test]
fn root_of_unity_examples() {
    let f = f7();
    assert!(root_of_unity(&f, 1).unwrap().is_one());
    assert_eq!(root_of_unity(&f, 3).unwrap(), FieldElement::constant(&f, 2));
    assert!(matches!(root_of_unity(&f, 9), Err(Error::Parameter(_))));
    assert!(matches!(root_of_unity(&f, 0), Err(Error::Parameter(_))));
}

#[test]
fn root_of_unity_is_lexicographically_smallest() {
    let f343 = make_field(7, 3).unwrap();
    let z = root_of_unity(&f343, 9).unwrap();
    assert_eq!(z.coeffs(), vec![1, 0, 4]);
    // brute force over all elements
    for d in [2u64, 3, 9, 19, 38, 342] {
        let z = root_of_unity(&f343, d).unwrap();
        let best = elements(&f343)
            .filter(|x| !x.is_zero() && x.mult_order().unwrap() == d)
            .min_by(|a, b| a.cmp_lex(b))
            .unwrap();
        assert_eq!(z, best, "d = {d}");
    }
}

#[test]
fn serialization_format() {
    let f = f7();
    assert_eq!(serde_json::to_string(&FieldElement::constant(&f, 3)).unwrap(), "[3]");
    let f343 = make_field(7, 3).unwrap();
    assert_eq!(serde_json::to_string(&el(&f343, &[3, 0, 5])).unwrap(), "[3,0,5]");
    assert_eq!(serde_json::to_string(&*f343).unwrap(), r#"{"s":7,"r":3,"modulus":[1,0,1,1]}"#);
}

#[test]
fn element_construction_errors() {
    let f343 = make_field(7, 3).unwrap();
    assert!(FieldElement::new(&f343, &[1, 2, 3, 4]).is_err());
    assert!(FieldElement::new(&f343, &[7]).is_err());
    assert_eq!(el(&f343, &[1]).coeffs(), vec![1, 0, 0]);
}

#[test]
fn param_search_examples() {
    let g = param_search(3, 1000).unwrap();
    assert_eq!((g.s(), g.r(), g.q(), g.i), (7, 1, 7, 2));
    assert_eq!(g.zeta_p.coeffs(), vec![2]);
    assert_eq!((g.m_root, g.n_rep, g.k), (9, 3, 4));

    let g = param_search(5, 1000).unwrap();
    assert_eq!((g.s(), g.r()), (11, 1));
    assert_eq!(crate::arith::pow_mod(6, g.i, 25), 11);

    let g = param_search(101, 10_000).unwrap();
    assert_eq!(g.s(), 607);
}

#[test]
fn param_search_errors() {
    assert!(matches!(param_search(4, 1000), Err(Error::Parameter(_))));
    assert!(matches!(param_search(9, 1000), Err(Error::Parameter(_))));
    assert!(matches!(param_search(2, 1000), Err(Error::Parameter(_))));
    assert!(matches!(param_search(3, 2), Err(Error::Parameter(_))));
    assert!(matches!(param_search(3, 5), Err(Error::SearchExhausted(_))));
}

#[test]
fn param_search_invariants() {
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 101] {
        let g = param_search(p, 1_000_000).unwrap();
        let q = g.q();
        assert_eq!(q % p, 1);
        assert_ne!(q % (p * p), 1);
        assert_eq!(crate::arith::pow_mod(p + 1, g.i, p * p), q % (p * p));
        assert_eq!(order_mod(q, p * p), Some(p));
        assert_eq!(g.zeta_p.mult_order().unwrap(), p);
        g.validate().unwrap();
    }
}

#[test]
fn polynomial_helpers() {
    let f = f7();
    let two = FieldElement::constant(&f, 2);
    let b = Polynomial::binomial(3, &two);
    assert_eq!(b, Polynomial::from_constants(&f, &[5, 0, 0, 1]));
    assert_eq!(b.to_string(), "x^3 + 5");
    let (n, c) = b.as_binomial().unwrap();
    assert_eq!((n, c), (3, two.clone()));
    assert!(Polynomial::from_constants(&f, &[5, 1, 0, 1]).as_binomial().is_none());
    // (x - 1)^3 = x^3 + 4x^2 + 3x + 6 over F_7
    let cube = Polynomial::linear(&FieldElement::one(&f)).pow(3);
    assert_eq!(cube, Polynomial::from_constants(&f, &[6, 3, 4, 1]));
    assert!(cube.eval(&FieldElement::one(&f)).is_zero());
    assert_eq!(Polynomial::zero(&f).degree(), None);
}

fn arb_f343_elem() -> impl Strategy<Value = u64> {
    0u64..343
}

proptest! {
    #[test]
    fn fermat_and_order_divide(raw in 1u64..343) {
        let f = make_field(7, 3).unwrap();
        let x = FieldElement::from_raw(&f, raw);
        prop_assert!(x.pow(342).unwrap().is_one());
        let d = x.mult_order().unwrap();
        prop_assert_eq!(342 % d, 0);
        prop_assert!(x.pow(d).unwrap().is_one());
    }

    #[test]
    fn field_axioms_f343(a in arb_f343_elem(), b in arb_f343_elem(), c in arb_f343_elem()) {
        let f = make_field(7, 3).unwrap();
        let (a, b, c) = (FieldElement::from_raw(&f, a), FieldElement::from_raw(&f, b), FieldElement::from_raw(&f, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &b) + &b) == a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn field_axioms_prime(a in 0u64..607, b in 0u64..607, c in 0u64..607) {
        let f = make_field(607, 1).unwrap();
        let (a, b, c) = (FieldElement::constant(&f, a), FieldElement::constant(&f, b), FieldElement::constant(&f, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }
}
