use std::collections::BTreeMap;

use num_bigint::BigInt;
use wardcf::contfrac::families;
use wardcf::eulerian::{
    e2_poly, e2_reversed, enumerate_stirling_perms, eulerian2, eulerian2_triangle,
};
use wardcf::hankel::{
    all_minors_nonneg, cofactor_det, hankel_report, hankel_section, HankelFamily,
};
use wardcf::matchings::{count_mprime, generalized_ward_oracle};
use wardcf::trees::{enumerate_phylo, multivariate_ward};
use wardcf::ward::{
    generalized_ward_cf, generalized_ward_recurrence, ward_poly, ward_reversed, ward_triangle,
};
use wardcf::{Polynomial, VarId};

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn at_x(poly: &Polynomial, value: i64) -> Polynomial {
    poly.subs(VarId::new("x"), &Polynomial::int(value))
}

fn factorial(n: u64) -> i64 {
    (1..=n).product::<u64>() as i64
}

fn semifactorial(n: u64) -> i64 {
    (1..=n).map(|i| 2 * i - 1).product::<u64>() as i64
}

#[test]
fn ward_triangle_closed_forms() {
    let t = ward_triangle(10);
    for n in 1..=10u32 {
        let n_ = n as usize;
        assert_eq!(t.get(n_, n_), BigInt::from(semifactorial(n as u64)));
        assert_eq!(t.get(n_, 2), BigInt::from(2u64.pow(n + 1) - n as u64 - 3));
    }
    for n in 0..=5 {
        for k in 0..=n {
            assert_eq!(t.get(n, k), BigInt::from(enumerate_phylo(n, k).len()));
        }
    }
}

#[test]
fn reversed_ward_values() {
    for n in 0..=8u64 {
        let rev = ward_reversed(n as usize);
        assert_eq!(at_x(&rev, 0), Polynomial::int(semifactorial(n)));
        assert_eq!(at_x(&rev, -1), Polynomial::int(factorial(n)));
    }
    assert_eq!(ward_reversed(2), p("x + 3"));
}

#[test]
fn ward_t_fraction_matches_triangle() {
    let series = families::ward().expand(8);
    let reversed = families::ward_reversed().expand(8);
    for n in 0..=8 {
        assert_eq!(series.coeffs()[n], ward_poly(n));
        assert_eq!(reversed.coeffs()[n], ward_reversed(n));
    }
}

#[test]
fn generalized_triple_agreement() {
    let cf = generalized_ward_cf(5);
    let unrolled = generalized_ward_recurrence(5);
    let merge = BTreeMap::from([(VarId::new("w'"), p("w")), (VarId::new("w''"), p("w"))]);
    let split = BTreeMap::from([(VarId::new("w"), p("w' + w''"))]);
    for n in 0..=5 {
        let oracle = generalized_ward_oracle(n);
        assert_eq!(&oracle, &cf.get(n).substitute(&split));
        assert_eq!(&unrolled[n], cf.get(n));
        // merging the two wiggly/dashed weights is not the same as w = w' + w''
        if n >= 2 {
            assert_ne!(oracle.substitute(&merge), *cf.get(n));
        }
    }
}

#[test]
fn generalized_homogeneity() {
    let seq = generalized_ward_cf(6);
    let scaled: BTreeMap<VarId, Polynomial> = ["x", "u", "z", "w"]
        .iter()
        .map(|v| (VarId::new(v), &p("l") * &Polynomial::sym(v)))
        .collect();
    for n in 0..=6 {
        let w = seq.get(n);
        assert_eq!(w.substitute(&scaled), &p("l").pow(n as u32) * w);
    }
}

#[test]
fn generalized_specialization_fixture() {
    let seq = generalized_ward_cf(3).specialize(&[("u", p("x")), ("z", p("1")), ("w", p("0"))]);
    assert_eq!(seq[1], p("x + 1"));
    assert_eq!(seq[2], p("3*x^2 + 3*x + 1"));
}

#[test]
fn multivariate_ward_by_trees() {
    assert_eq!(multivariate_ward(3), p("15*x[1]^3 + 10*x[1]*x[2] + x[3]"));
    let x = VarId::indexed("x", &[1]);
    let all_x: BTreeMap<VarId, Polynomial> = (1..=5)
        .map(|i| (VarId::indexed("x", &[i]), Polynomial::var(x)))
        .collect();
    for n in 0..=5 {
        assert_eq!(
            multivariate_ward(n).substitute(&all_x),
            ward_poly(n).subs(VarId::new("x"), &Polynomial::var(x))
        );
    }
}

#[test]
fn second_order_eulerian_facts() {
    let t = eulerian2_triangle(8);
    for n in 0..=8u64 {
        let row_sum: BigInt = t[n as usize].iter().sum();
        assert_eq!(row_sum, BigInt::from(semifactorial(n)));
        assert_eq!(
            eulerian2(n as usize, n as usize),
            BigInt::from(factorial(n))
        );
        let rev = e2_reversed(n as usize);
        assert_eq!(at_x(&rev, 0), Polynomial::int(factorial(n)));
        assert_eq!(at_x(&rev, 1), Polynomial::int(semifactorial(n)));
    }
    assert_eq!(e2_poly(3), p("6*x^3 + 8*x^2 + x"));
    assert_eq!(enumerate_stirling_perms(1)[0].to_string(), "11");
    assert_eq!(
        (0..=3).map(|l| count_mprime(3, l)).collect::<Vec<_>>(),
        [6, 8, 1, 0]
    );
    assert_eq!(count_mprime(2, 1), 1);
}

#[test]
fn hankel_fixtures() {
    let ward: Vec<Polynomial> = (0..3).map(ward_poly).collect();
    let h = hankel_section(&ward, 2).unwrap();
    assert_eq!(cofactor_det(h.entries()).to_rational(), p("2*x^2 + x"));
    let e2: Vec<Polynomial> = (0..3).map(e2_reversed).collect();
    let h = hankel_section(&e2, 2).unwrap();
    assert_eq!(cofactor_det(h.entries()).to_rational(), p("x + 1"));
    assert!(all_minors_nonneg(&hankel_section(&ward, 1).unwrap(), 1).ok);
    let report = hankel_report(HankelFamily::Ward, 4, 4).unwrap();
    assert!(report.ok);
    let bad: Vec<Polynomial> = ["1", "2", "1"].iter().map(|s| p(s)).collect();
    let check = all_minors_nonneg(&hankel_section(&bad, 2).unwrap(), 2);
    assert_eq!(check.counterexample.unwrap().determinant, "-3");
}
