//! Invariants over randomized inputs.

mod common;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::{quad, rat};
use intpoly::arith::fp_poly::FpPoly;
use intpoly::arith::int::{field_discriminant, is_squarefree};
use intpoly::arith::Field;
use intpoly::domain::{Domain, FpPolyRing, Integers, LocalizedIntegers, QuadOrder};
use intpoly::intpoly::w::{digits, w_u64};
use intpoly::intpoly::{combine, expand_in_basis, ideal_report, regular_basis, Expansion, RegularBasis};
use intpoly::quad_ideal::{class_group, ideal_mul, reduce, ClassGroupTable};
use intpoly::wpc::{check_wpc_over_z, numthm_split_analysis, FiniteAlgebra};
use intpoly::{Poly, QuadElem, RatFunc};

const N: usize = 8;

fn z_basis() -> &'static RegularBasis<BigRational> {
    static B: OnceLock<RegularBasis<BigRational>> = OnceLock::new();
    B.get_or_init(|| regular_basis(&Integers, N as u64).unwrap())
}

fn zloc_basis() -> &'static RegularBasis<BigRational> {
    static B: OnceLock<RegularBasis<BigRational>> = OnceLock::new();
    B.get_or_init(|| regular_basis(&LocalizedIntegers::new(3), N as u64).unwrap())
}

fn f2_basis() -> &'static RegularBasis<RatFunc> {
    static B: OnceLock<RegularBasis<RatFunc>> = OnceLock::new();
    B.get_or_init(|| regular_basis(&FpPolyRing::new(2), N as u64).unwrap())
}

fn gauss_basis() -> &'static RegularBasis<QuadElem> {
    static B: OnceLock<RegularBasis<QuadElem>> = OnceLock::new();
    B.get_or_init(|| regular_basis(&QuadOrder::new(BigInt::from(-1)), N as u64).unwrap())
}

fn round_trip<D: Domain>(d: &D, basis: &RegularBasis<D::Elem>, coeffs: Vec<D::Elem>) -> Result<(), TestCaseError> {
    let f = combine(basis, &coeffs).unwrap();
    let m = d.is_member(&f).unwrap();
    prop_assert!(m.member, "combination {f} rejected: {m:?}");
    match expand_in_basis(d, &f, basis).unwrap() {
        Expansion::Coefficients(back) => {
            let mut expected = coeffs;
            while expected.last().is_some_and(Field::is_zero_elem) {
                expected.pop();
            }
            prop_assert_eq!(back, expected);
        }
        other => prop_assert!(false, "{f}: {other:?}"),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn w_digit_formula(k in 2u64..60, n in 0u64..100_000) {
        let s: u64 = digits(k, n).iter().sum();
        prop_assert_eq!(w_u64(k, n) * (k - 1), n - s);
    }

    #[test]
    fn w_superadditive_and_monotone(k in 2u64..50, m in 0u64..500, n in 0u64..500) {
        prop_assert!(w_u64(k, m + n) >= w_u64(k, m) + w_u64(k, n));
        prop_assert!(w_u64(k, n + 1) >= w_u64(k, n));
    }

    #[test]
    fn basis_round_trip_z(c in prop::collection::vec(-50i64..50, 1..=N + 1)) {
        round_trip(&Integers, z_basis(), c.iter().map(|&x| rat(x, 1)).collect())?;
    }

    #[test]
    fn basis_round_trip_zloc(c in prop::collection::vec((-50i64..50, 0u32..4), 1..=N + 1)) {
        let coeffs = c.iter().map(|&(x, e)| rat(x, 2i64.pow(e))).collect();
        round_trip(&LocalizedIntegers::new(3), zloc_basis(), coeffs)?;
    }

    #[test]
    fn basis_round_trip_f2t(c in prop::collection::vec(prop::collection::vec(0u64..2, 0..5), 1..=N + 1)) {
        let coeffs = c.into_iter().map(|v| RatFunc::from_poly(FpPoly::new(2, v))).collect();
        round_trip(&FpPolyRing::new(2), f2_basis(), coeffs)?;
    }

    #[test]
    fn basis_round_trip_gaussian(c in prop::collection::vec((-20i64..20, -20i64..20), 1..=N + 1)) {
        let d = BigInt::from(-1);
        let coeffs = c.iter().map(|&(u, v)| quad(u, v, &d)).collect();
        round_trip(&QuadOrder::new(d.clone()), gauss_basis(), coeffs)?;
    }

    #[test]
    fn coefficient_text_round_trips(c in prop::collection::vec((-30i64..30, 1i64..12, -30i64..30, 1i64..12), 1..6), d in 1i64..40) {
        let d = -BigInt::from(d);
        prop_assume!(is_squarefree(&d));
        let coeffs: Vec<QuadElem> = c.iter().map(|&(a, b, x, y)| QuadElem::new(rat(a, b), rat(x, y), d.clone())).collect();
        let f = Poly::new(d.clone(), coeffs).unwrap();
        let text: Vec<String> = f.coeffs().iter().map(intpoly::arith::poly::ParseCoeff::format_coeff).collect();
        prop_assert_eq!(Poly::parse(&d, &text.join(",")).unwrap(), f);
    }
}

fn table(d: i64) -> ClassGroupTable {
    class_group(&field_discriminant(&BigInt::from(d))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_group_table_matches_ideal_products(d in -400i64..-1, i in 0usize..64, j in 0usize..64) {
        prop_assume!(is_squarefree(&BigInt::from(d)));
        let g = table(d);
        let h = g.class_number();
        let (a, b) = (&g.reduced_forms[i % h], &g.reduced_forms[j % h]);
        let prod = ideal_mul(a, b).unwrap();
        prop_assert_eq!(prod.norm(), a.norm() * b.norm());
        prop_assert_eq!(g.class_of(&prod), g.table[i % h][j % h]);
        prop_assert_eq!(g.class_of(&reduce(&prod)), g.class_of(&prod));
        prop_assert_eq!(g.table[i % h][j % h], g.table[j % h][i % h]);
    }

    #[test]
    fn split_analysis_is_consistent(d in -300i64..-1, bound in 2u64..80) {
        prop_assume!(is_squarefree(&BigInt::from(d)));
        let r = numthm_split_analysis(&BigInt::from(d), bound).unwrap();
        prop_assert!(r.consistent);
    }
}

/// Small algebras `Z[x]/(f, n)` with `f` monic of degree 1 or 2.
fn small_algebra() -> impl Strategy<Value = FiniteAlgebra> {
    (prop::collection::vec(-3i64..4, 1..=2), 2i64..13).prop_map(|(mut f, n)| {
        f.push(1);
        FiniteAlgebra::poly_quotient(&f, n).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wpc_closed_under_quotients(a in small_algebra(), row in prop::collection::vec(-6i64..7, 1..=3)) {
        let before = check_wpc_over_z(&a).unwrap().overall;
        let mut row: Vec<BigInt> = row.into_iter().map(BigInt::from).collect();
        row.resize(a.rank(), BigInt::from(0));
        let q = a.quotient(&[row]).unwrap();
        if before {
            prop_assert!(check_wpc_over_z(&q).unwrap().overall);
        }
    }

    #[test]
    fn wpc_of_product_is_conjunction(a in small_algebra(), b in small_algebra()) {
        let ab = a.product(&b).unwrap();
        let both = check_wpc_over_z(&a).unwrap().overall && check_wpc_over_z(&b).unwrap().overall;
        prop_assert_eq!(check_wpc_over_z(&ab).unwrap().overall, both);
    }
}

/// The leading coefficient of `G_n` generates the characteristic ideal.
#[test]
fn leading_coefficients_generate_characteristic_ideals() {
    fn check<D: Domain>(d: &D, upto: u64) {
        let b = regular_basis(d, upto).unwrap();
        for n in 0..=upto {
            let r = ideal_report(&d.spec(), n).unwrap();
            for (p, e) in r.characteristic.factors() {
                assert_eq!(BigInt::from(d.valuation(p, &b.sigmas[n as usize])), *e, "{} n={n} at {p}", d.spec());
            }
            let generated = d.ideal_generator(&r.characteristic).unwrap();
            let ratio = b.sigmas[n as usize].div(&generated).unwrap();
            assert!(d.contains(&ratio) && d.contains(&ratio.inv().unwrap()), "{} n={n}", d.spec());
        }
    }
    check(&Integers, 30);
    check(&LocalizedIntegers::new(2), 30);
    check(&FpPolyRing::new(3), 12);
    check(&QuadOrder::new(BigInt::from(-2)), 8);
}
