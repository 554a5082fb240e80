//! Verification suites. Each returns `Err` with the first counterexample.

use std::collections::{BTreeMap, HashSet};

use clap::ValueEnum;
use wardcf::contfrac::{euler_identity_check, families, ContinuedFraction};
use wardcf::eulerian::{
    clop_equals_eulerian, e2_reversed_tfraction_check, eulerian2_by_enumeration,
    eulerian2_triangle, ward_euler_identity,
};
use wardcf::matchings::{
    cf_12var, cf_12var_bis1, cf_12var_bis2, cf_18var, enumerate_augmented, enumerate_super,
    generalized_ward_oracle, master_cf, master_poly_t, poly_18var, specialize_12var,
    IndexedWeights,
};
use wardcf::paths::{
    enumerate_labeled, flajolet_sides, matching_to_path, path_to_matching, verify_heights,
    verify_statistics, FlajoletWeights, PathFamily,
};
use wardcf::trees::{augmented_to_tree, enumerate_all_phylo, tree_to_augmented};
use wardcf::ward::{
    check_closed_form_u_eq_x, check_linear_recurrence_u_eq_x, check_nonlinear_recurrence,
    check_recurrence_w_eq_neg_u, check_riccati_u_eq_0, generalized_ward_cf,
    generalized_ward_recurrence, ward_poly, ward_triangle,
};
use wardcf::{Monomial, Polynomial, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "thm1.1")]
    Thm11,
    #[value(name = "thm1.2")]
    Thm12,
    #[value(name = "thm2.1")]
    Thm21,
    #[value(name = "cor2.3")]
    Cor23,
    #[value(name = "bijection-schroeder")]
    BijectionSchroeder,
    #[value(name = "bijection-phylo")]
    BijectionPhylo,
    #[value(name = "lemma4.2")]
    Lemma42,
    #[value(name = "appendixB")]
    AppendixB,
    #[value(name = "ward-euler")]
    WardEuler,
    #[value(name = "flajolet")]
    Flajolet,
    #[value(name = "contraction")]
    Contraction,
    #[value(name = "euler-identity")]
    EulerIdentity,
    #[value(name = "closed-form-ux")]
    ClosedFormUx,
}

impl Suite {
    /// Suites whose cost grows with exhaustive enumeration.
    pub fn enumerates(self) -> bool {
        !matches!(
            self,
            Suite::AppendixB | Suite::Contraction | Suite::EulerIdentity | Suite::ClosedFormUx
        )
    }

    pub fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

type Outcome = Result<(), String>;

fn expect_eq(what: &str, n: usize, left: &Polynomial, right: &Polynomial) -> Outcome {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what} at n={n}: {left} != {right}"))
    }
}

fn x_power_sum(exponents: impl Iterator<Item = usize>) -> Polynomial {
    let x = VarId::new("x");
    exponents
        .map(|e| Polynomial::monomial(Monomial::power(x, e as u32)))
        .sum()
}

pub fn run_suite(suite: Suite, n: usize) -> Outcome {
    match suite {
        Suite::Thm11 => ward_three_ways(n),
        Suite::Thm12 => generalized_ward(n),
        Suite::Thm21 => master_t_fraction(n),
        Suite::Cor23 => cor23(n),
        Suite::BijectionSchroeder => bijection_schroeder(n),
        Suite::BijectionPhylo => bijection_phylo(n),
        Suite::Lemma42 => path_statistics(n),
        Suite::AppendixB => appendix_b(n),
        Suite::WardEuler => ward_euler(n),
        Suite::Flajolet => flajolet(n),
        Suite::Contraction => contraction(n),
        Suite::EulerIdentity => euler_identity(n),
        Suite::ClosedFormUx => check("closed form for u = x", check_closed_form_u_eq_x(n)),
    }
}

fn check(what: &str, ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(format!("{what} does not hold"))
    }
}

fn ward_three_ways(n: usize) -> Outcome {
    let cf = families::ward().expand(n);
    for m in 0..=n {
        let tri = ward_poly(m);
        expect_eq("T-fraction vs triangle", m, &cf.coeffs()[m], &tri)?;
        let trees = x_power_sum(enumerate_all_phylo(m).iter().map(|t| t.internal_vertices()));
        expect_eq("trees vs triangle", m, &trees, &tri)?;
        let matchings = x_power_sum(enumerate_augmented(m).iter().map(|p| m - p.wiggly().len()));
        expect_eq("augmented matchings vs triangle", m, &matchings, &tri)?;
    }
    Ok(())
}

fn generalized_ward(n: usize) -> Outcome {
    let split = Polynomial::sym("w'") + Polynomial::sym("w''");
    let cf = generalized_ward_cf(n).specialize(&[("w", split)]);
    for (m, p) in cf.iter().enumerate() {
        expect_eq(
            "T-fraction vs super-augmented matchings",
            m,
            p,
            &generalized_ward_oracle(m),
        )?;
    }
    Ok(())
}

fn master_t_fraction(n: usize) -> Outcome {
    let w = IndexedWeights::symbolic();
    let cf = master_cf(&w).expand(n);
    for m in 0..=n {
        expect_eq(
            "matching sum vs T-fraction",
            m,
            &master_poly_t(m, &w),
            &cf.coeffs()[m],
        )?;
    }
    Ok(())
}

fn bindings(pairs: &[(&str, &str)]) -> BTreeMap<VarId, Polynomial> {
    pairs
        .iter()
        .map(|(v, p)| (VarId::new(v), Polynomial::sym(p)))
        .collect()
}

fn cor23(n: usize) -> Outcome {
    let fractions = [
        cf_18var().expand(n),
        cf_12var().expand(n),
        cf_12var_bis1().expand(n),
        cf_12var_bis2().expand(n),
    ];
    let bis1 = bindings(&[("u'", "x'")]);
    let bis2 = bindings(&[("u", "x"), ("u'", "x'"), ("u''", "x''")]);
    for m in 0..=n {
        let p18 = poly_18var(m);
        let p12 = specialize_12var(&p18);
        expect_eq("18-variable", m, &p18, &fractions[0].coeffs()[m])?;
        expect_eq("12-variable", m, &p12, &fractions[1].coeffs()[m])?;
        expect_eq(
            "u' = x'",
            m,
            &p12.substitute(&bis1),
            &fractions[2].coeffs()[m],
        )?;
        expect_eq(
            "u = x, u' = x', u'' = x''",
            m,
            &p12.substitute(&bis2),
            &fractions[3].coeffs()[m],
        )?;
    }
    Ok(())
}

fn bijection_schroeder(n: usize) -> Outcome {
    for m in 0..=n {
        let matchings = enumerate_super(m);
        let mut image = HashSet::new();
        for tau in &matchings {
            let lp = matching_to_path(tau);
            match path_to_matching(&lp) {
                Ok(back) if &back == tau => {}
                Ok(back) => return Err(format!("{tau} -> {lp} -> {back}")),
                Err(e) => return Err(format!("{tau} -> {lp} -> error: {e}")),
            }
            image.insert(lp);
        }
        let labeled = enumerate_labeled(m);
        for lp in &labeled {
            let tau = path_to_matching(lp).map_err(|e| format!("{lp}: {e}"))?;
            let back = matching_to_path(&tau);
            if &back != lp {
                return Err(format!("{lp} -> {tau} -> {back}"));
            }
            if !image.contains(lp) {
                return Err(format!("{lp} is not hit by any matching"));
            }
        }
        if labeled.len() != matchings.len() {
            return Err(format!(
                "n={m}: {} matchings but {} labeled paths",
                matchings.len(),
                labeled.len()
            ));
        }
    }
    Ok(())
}

fn path_statistics(n: usize) -> Outcome {
    for m in 0..=n {
        for tau in enumerate_super(m) {
            if !verify_heights(&tau) {
                return Err(format!("height identity fails for {tau}"));
            }
            if !verify_statistics(&tau) {
                return Err(format!("statistic identities fail for {tau}"));
            }
        }
    }
    Ok(())
}

fn bijection_phylo(n: usize) -> Outcome {
    for m in 0..=n {
        let tri = ward_triangle(m);
        let mut by_wiggly = vec![0u64; m + 1];
        for p in enumerate_augmented(m) {
            let t = augmented_to_tree(&p).map_err(|e| format!("{p}: {e}"))?;
            match tree_to_augmented(&t) {
                Ok(back) if back == p => {}
                Ok(back) => return Err(format!("{p} -> {t} -> {back}")),
                Err(e) => return Err(format!("{p} -> {t} -> error: {e}")),
            }
            if t.tree_type() != (m, m - p.wiggly().len()) {
                return Err(format!("{p} -> {t} has type {:?}", t.tree_type()));
            }
            by_wiggly[p.wiggly().len()] += 1;
        }
        for t in enumerate_all_phylo(m) {
            let p = tree_to_augmented(&t).map_err(|e| format!("{t}: {e}"))?;
            let back = augmented_to_tree(&p).map_err(|e| format!("{p}: {e}"))?;
            if back != t {
                return Err(format!("{t} -> {p} -> {back}"));
            }
        }
        for (l, &count) in by_wiggly.iter().enumerate() {
            if tri.get(m, m - l) != count.into() {
                return Err(format!(
                    "n={m}: {count} augmented matchings with {l} wiggly lines, W(n,n-l)={}",
                    tri.get(m, m - l)
                ));
            }
        }
    }
    Ok(())
}

fn appendix_b(n: usize) -> Outcome {
    check("nonlinear recurrence", check_nonlinear_recurrence(n))?;
    check(
        "linear recurrence at u = x",
        check_linear_recurrence_u_eq_x(n),
    )?;
    check("recurrence at w = -u", check_recurrence_w_eq_neg_u(n))?;
    check("Riccati equation at u = 0", check_riccati_u_eq_0(n))?;
    let cf = generalized_ward_cf(n);
    for (m, p) in generalized_ward_recurrence(n).iter().enumerate() {
        expect_eq("recurrence vs T-fraction", m, p, cf.get(m))?;
    }
    Ok(())
}

fn ward_euler(n: usize) -> Outcome {
    let tri = eulerian2_triangle(n);
    for m in 0..=n {
        let counted: Vec<num_bigint::BigInt> = eulerian2_by_enumeration(m)
            .into_iter()
            .map(Into::into)
            .collect();
        if counted != tri[m] {
            return Err(format!(
                "n={m}: descents give {counted:?}, recurrence {:?}",
                tri[m]
            ));
        }
        check(
            &format!("reversed Ward vs Eulerian at n={m}"),
            ward_euler_identity(m),
        )?;
        check(
            &format!("closer-opener counts at n={m}"),
            clop_equals_eulerian(m),
        )?;
    }
    check("Eulerian T-fraction", e2_reversed_tfraction_check(n))
}

fn flajolet(n: usize) -> Outcome {
    let w = FlajoletWeights::symbolic();
    for (family, name) in [
        (PathFamily::Motzkin, "Motzkin"),
        (PathFamily::Dyck, "Dyck"),
        (PathFamily::Schroeder, "Schroeder"),
    ] {
        let (paths, cf) = flajolet_sides(family, n, &w);
        for m in 0..=n {
            expect_eq(name, m, &paths.coeffs()[m], &cf.coeffs()[m])?;
        }
    }
    Ok(())
}

fn indexed(name: &str, i: usize) -> Polynomial {
    Polynomial::var(VarId::indexed(name, &[i as u32]))
}

fn contraction(n: usize) -> Outcome {
    let t = ContinuedFraction::t(
        |i| indexed("a", i),
        |i| {
            if i % 2 == 0 {
                Polynomial::zero()
            } else {
                indexed("d", i)
            }
        },
    );
    let s = ContinuedFraction::s(|i| indexed("a", i));
    for (name, cf) in [("T-fraction", t), ("S-fraction", s)] {
        let j = cf.contract(n).map_err(|e| format!("{name}: {e}"))?;
        let (lhs, rhs) = (cf.expand(n), j.expand(n));
        for m in 0..=n {
            expect_eq(name, m, &lhs.coeffs()[m], &rhs.coeffs()[m])?;
        }
    }
    Ok(())
}

fn euler_identity(n: usize) -> Outcome {
    check(
        "sum of factorials",
        euler_identity_check(|i| Polynomial::int(i as i64), n),
    )?;
    check(
        "symbolic products",
        euler_identity_check(|i| indexed("a", i), n),
    )
}
