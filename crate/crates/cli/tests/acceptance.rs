//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use wardcf::contfrac::{euler_identity_check, families, ContinuedFraction};
use wardcf::eulerian::{
    clop_equals_eulerian, e2_reversed_tfraction_check, eulerian2_by_enumeration,
    ward_euler_identity,
};
use wardcf::hankel::{hankel_report, HankelFamily};
use wardcf::matchings::SuperMatching;
use wardcf::paths::{
    flajolet_check, matching_to_path, path_to_matching, verify_heights, verify_statistics,
    FlajoletWeights, PathFamily, Step,
};
use wardcf::trees::{
    arch_system, assoc_stirling_triangle, count_assoc_stirling, multivariate_ward,
    tree_to_augmented, tree_to_binary,
};
use wardcf::ward::{
    check_closed_form_u_eq_x, check_linear_recurrence_u_eq_x, check_nonlinear_recurrence,
    check_recurrence_w_eq_neg_u, check_riccati_u_eq_0, invert_generalized_ward, invert_sequence,
    multivariate_ward_series, ward_triangle,
};
use wardcf::{Polynomial, VarId};
use wardcf_cli::{run_suite, run_with_max_n, Suite};

type Check = Result<(), String>;

const WARD: [&[u64]; 9] = [
    &[1],
    &[0, 1],
    &[0, 1, 3],
    &[0, 1, 10, 15],
    &[0, 1, 25, 105, 105],
    &[0, 1, 56, 490, 1260, 945],
    &[0, 1, 119, 1918, 9450, 17325, 10395],
    &[0, 1, 246, 6825, 56980, 190575, 270270, 135135],
    &[0, 1, 501, 22935, 302995, 1636635, 4099095, 4729725, 2027025],
];
const WARD_ROW_SUMS: [u64; 9] = [1, 1, 4, 26, 236, 2752, 39208, 660032, 12818912];

const EULERIAN2: [&[u64]; 9] = [
    &[1],
    &[0, 1],
    &[0, 1, 2],
    &[0, 1, 8, 6],
    &[0, 1, 22, 58, 24],
    &[0, 1, 52, 328, 444, 120],
    &[0, 1, 114, 1452, 4400, 3708, 720],
    &[0, 1, 240, 5610, 32120, 58140, 33984, 5040],
    &[0, 1, 494, 19950, 195800, 644020, 785304, 341136, 40320],
];

const ASSOC_STIRLING: [&[u64]; 11] = [
    &[1],
    &[0, 0],
    &[0, 1, 0],
    &[0, 1, 0, 0],
    &[0, 1, 3, 0, 0],
    &[0, 1, 10, 0, 0, 0],
    &[0, 1, 25, 15, 0, 0, 0],
    &[0, 1, 56, 105, 0, 0, 0, 0],
    &[0, 1, 119, 490, 105, 0, 0, 0, 0],
    &[0, 1, 246, 1918, 1260, 0, 0, 0, 0, 0],
    &[0, 1, 501, 6825, 9450, 945, 0, 0, 0, 0, 0],
];

fn p(s: &str) -> Polynomial {
    s.parse().expect("fixture polynomial")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str], max_n: usize) -> wardcf_cli::Output {
    let argv = std::iter::once("wardcf").chain(args.iter().copied());
    run_with_max_n(argv, max_n)
}

fn csv_table(stdout: &str) -> Result<BTreeMap<(usize, usize), String>, String> {
    let mut lines = stdout.lines();
    ensure(lines.next() == Some("n,k,value"), || {
        "missing CSV header".into()
    })?;
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            match f.as_slice() {
                [n, k, v] => Ok((
                    (
                        n.parse().map_err(|_| l.to_string())?,
                        k.parse().map_err(|_| l.to_string())?,
                    ),
                    v.to_string(),
                )),
                _ => Err(format!("bad CSV line {l:?}")),
            }
        })
        .collect()
}

fn compare_table(got: &BTreeMap<(usize, usize), String>, want: &[&[u64]]) -> Check {
    let cells: usize = want.iter().map(|r| r.len()).sum();
    ensure(got.len() == cells, || {
        format!("{} cells, expected {cells}", got.len())
    })?;
    for (n, row) in want.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            let cell = got.get(&(n, k)).map(String::as_str);
            ensure(cell == Some(v.to_string().as_str()), || {
                format!("({n},{k}): got {cell:?}, expected {v}")
            })?;
        }
    }
    Ok(())
}

fn c1_ward_triangle() -> Check {
    let out = cli(&["triangle", "--family", "ward", "--rows", "8"], 6);
    ensure(out.code == 0, || {
        format!("exit {}: {}", out.code, out.stderr)
    })?;
    compare_table(&csv_table(&out.stdout)?, &WARD)?;
    let sums: Vec<BigInt> = ward_triangle(8).row_sums();
    let want: Vec<BigInt> = WARD_ROW_SUMS.iter().map(|&v| v.into()).collect();
    ensure(sums == want, || format!("row sums {sums:?}"))?;
    ensure(ward_triangle(8).get(8, 8) == 2027025u64.into(), || {
        "W(8,8)".into()
    })
}

fn c2_ward_four_ways() -> Check {
    let out = cli(&["verify", "--suite", "thm1.1", "--n", "6"], 6);
    ensure(out.code == 0 && out.stdout.starts_with("PASS"), || {
        out.stdout.clone()
    })
}

fn c3_master() -> Check {
    run_suite(Suite::Thm21, 5)
}

fn c4_schroeder_bijection() -> Check {
    run_suite(Suite::BijectionSchroeder, 4)?;
    run_suite(Suite::Lemma42, 4)?;
    let tau: SuperMatching = "pairs=(1,4)(2,8)(3,5)(6,12)(7,11)(9,10); wiggly={5}; dashed={3,9}"
        .parse()
        .map_err(|e| format!("{e}"))?;
    let lp = matching_to_path(&tau);
    use Step::*;
    let steps = [
        Rise,
        Rise,
        LongLevel(2),
        LongLevel(1),
        Rise,
        Fall,
        LongLevel(2),
        Fall,
        Fall,
    ];
    ensure(lp.path().steps() == steps, || format!("steps of {lp}"))?;
    ensure(lp.labels() == [1, 1, 1, 2, 1, 1, 3, 2, 1], || {
        format!("labels of {lp}")
    })?;
    let heights = [0, 1, 2, 99, 2, 99, 2, 3, 2, 99, 2, 1, 0];
    let got: Vec<usize> = lp
        .path()
        .heights()
        .iter()
        .map(|h| h.unwrap_or(99))
        .collect();
    ensure(got == heights, || format!("heights {got:?}"))?;
    ensure(path_to_matching(&lp).as_ref() == Ok(&tau), || {
        "inverse of the figure".into()
    })?;
    ensure(verify_heights(&tau) && verify_statistics(&tau), || {
        "figure statistics".into()
    })
}

fn c5_phylo_bijection() -> Check {
    run_suite(Suite::BijectionPhylo, 5)?;
    let p: SuperMatching =
        "pairs=(2,4)(3,7)(1,5)(6,10)(8,9)(11,12)(13,14); wiggly={5,7,10}; dashed={}"
            .parse()
            .map_err(|e| format!("{e}"))?;
    let a = arch_system(&p).map_err(|e| e.to_string())?;
    let arches = [
        (1, 6, true),
        (2, 5, false),
        (3, 8, true),
        (6, 11, true),
        (8, 10, false),
        (11, 13, false),
        (13, 15, false),
    ];
    ensure(a.arches() == arches, || format!("arches {a}"))?;
    let horizontals = [(1, 2), (2, 3), (3, 4), (6, 7), (8, 9), (11, 12), (13, 14)];
    ensure(a.horizontals() == horizontals, || {
        format!("horizontals {a}")
    })?;
    let leaves = [
        (4, 1),
        (5, 2),
        (7, 3),
        (9, 4),
        (10, 5),
        (12, 6),
        (14, 7),
        (15, 8),
    ];
    ensure(a.leaf_labels() == leaves, || {
        format!("{:?}", a.leaf_labels())
    })?;
    let t2 = a.to_binary_tree();
    ensure(t2.to_string() == "[[[1,~[4,5]],2],~[3,~[6,[7,8]]]]", || {
        t2.to_string()
    })?;
    let t = t2.contract();
    ensure(t.to_string() == "(((1,4,5),2),3,6,(7,8))", || t.to_string())?;
    ensure(t.internal_vertices() == 4, || "internal vertices".into())?;
    ensure(tree_to_binary(&t) == t2, || {
        "split back to the binary tree".into()
    })?;
    ensure(t2.to_arch_system() == a, || {
        "laid back out as arches".into()
    })?;
    ensure(tree_to_augmented(&t).as_ref() == Ok(&p), || {
        "inverse of the figure".into()
    })
}

fn c6_multivariable() -> Check {
    run_suite(Suite::Cor23, 4)
}

fn c7_eulerian() -> Check {
    let out = cli(&["triangle", "--family", "eulerian2", "--rows", "8"], 6);
    ensure(out.code == 0, || out.stderr.clone())?;
    compare_table(&csv_table(&out.stdout)?, &EULERIAN2)?;
    for n in 0..=6 {
        let want: Vec<u64> = EULERIAN2[n].to_vec();
        ensure(eulerian2_by_enumeration(n) == want, || {
            format!("descents at n={n}")
        })?;
        ensure(clop_equals_eulerian(n), || {
            format!("closer-opener counts at n={n}")
        })?;
    }
    for n in 0..=8 {
        ensure(ward_euler_identity(n), || {
            format!("reversed Ward identity at n={n}")
        })?;
    }
    ensure(e2_reversed_tfraction_check(8), || {
        "T-fraction to order 8".into()
    })
}

fn c8_assoc_stirling() -> Check {
    for (n, row) in ASSOC_STIRLING.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            let got = count_assoc_stirling(n, k);
            ensure(got == v, || {
                format!("partitions of [{n}] into {k} blocks: {got}, table {v}")
            })?;
        }
    }
    let tri = assoc_stirling_triangle(10);
    for (n, row) in ASSOC_STIRLING.iter().enumerate() {
        let want: Vec<BigInt> = row.iter().map(|&v| v.into()).collect();
        ensure(tri[n] == want, || format!("recurrence row {n}"))?;
    }
    let ward = ward_triangle(6);
    for n in 0..=6 {
        for k in 0..=n {
            let parts = count_assoc_stirling(n + k, k);
            ensure(ward.get(n, k) == parts.into(), || {
                format!(
                    "W({n},{k}) vs partitions of [{}] into {k} blocks: {parts}",
                    n + k
                )
            })?;
        }
    }
    Ok(())
}

fn c9_appendix() -> Check {
    ensure(check_nonlinear_recurrence(8), || {
        "nonlinear recurrence".into()
    })?;
    ensure(check_linear_recurrence_u_eq_x(8), || {
        "linear recurrences at u = x".into()
    })?;
    ensure(check_recurrence_w_eq_neg_u(8), || {
        "recurrence at w = -u".into()
    })?;
    ensure(check_riccati_u_eq_0(8), || "Riccati equation".into())?;
    ensure(check_closed_form_u_eq_x(6), || {
        "closed form at u = x".into()
    })
}

fn c10_inversion() -> Check {
    let a: Vec<Polynomial> = (0..=5)
        .map(|i| {
            if i == 0 {
                Polynomial::one()
            } else {
                Polynomial::var(VarId::indexed("a", &[i]))
            }
        })
        .collect();
    let xs = invert_sequence(&a, 5).map_err(|e| e.to_string())?;
    ensure(xs[0] == p("a[1]"), || format!("x1 = {}", xs[0]))?;
    ensure(xs[1] == p("-3*a[1]^2 + a[2]"), || format!("x2 = {}", xs[1]))?;
    ensure(
        xs[3] == p("-105*a[1]^4 + 105*a[1]^2*a[2] - 15*a[1]*a[3] - 10*a[2]^2 + a[4]"),
        || format!("x4 = {}", xs[3]),
    )?;
    // The printed x3 has +10 a1 a2, which contradicts the sign rule stated with it;
    // the sign rule and W_3(x1,x2,x3) = a3 both force -10 a1 a2.
    let printed_x3 = p("15*a[1]^3 + 10*a[1]*a[2] + a[3]");
    ensure(xs[2] == p("15*a[1]^3 - 10*a[1]*a[2] + a[3]"), || {
        format!("x3 = {}", xs[2])
    })?;
    let w: Vec<Polynomial> = multivariate_ward_series(5);
    for n in 0..=5 {
        ensure(w[n] == multivariate_ward(n), || {
            format!("tree count of W_{n}")
        })?;
    }
    let to_x = |xs: &[Polynomial]| -> BTreeMap<VarId, Polynomial> {
        xs.iter()
            .enumerate()
            .map(|(i, x)| (VarId::indexed("x", &[i as u32 + 1]), x.clone()))
            .collect()
    };
    let printed = [xs[0].clone(), xs[1].clone(), printed_x3];
    ensure(w[3].substitute(&to_x(&printed)) != a[3], || {
        "printed x3 inverts W_3".into()
    })?;
    let negated: BTreeMap<VarId, Polynomial> = (1..=5)
        .map(|i| {
            (
                VarId::indexed("x", &[i]),
                -Polynomial::var(VarId::indexed("a", &[i])),
            )
        })
        .collect();
    for n in 1..=5 {
        ensure(-xs[n - 1].clone() == w[n].substitute(&negated), || {
            format!("sign rule at n={n}")
        })?;
        ensure(w[n].substitute(&to_x(&xs)) == a[n], || {
            format!("W_{n}(x) = a_{n}")
        })?;
    }
    let g = invert_generalized_ward(3);
    ensure(g[0] == p("x + z"), || format!("x1 = {}", g[0]))?;
    ensure(g[1] == p("u*x + w*x - x^2 - 3*x*z - 2*z^2"), || {
        format!("x2 = {}", g[1])
    })?;
    let x3 = p("3*u^2*x + 4*u*w*x - 3*u*x^2 - 5*u*x*z + w^2*x - 4*w*x^2 - 6*w*x*z + 5*x^2*z + 11*x*z^2 + 6*z^3");
    ensure(g[2] == x3, || format!("x3 = {}", g[2]))
}

fn c11_hankel() -> Check {
    for family in [
        HankelFamily::Ward,
        HankelFamily::GeneralizedWard,
        HankelFamily::Eulerian2Reversed,
    ] {
        let report = hankel_report(family, 5, 5).map_err(|e| e.to_string())?;
        ensure(report.ok, || report.to_json())?;
    }
    Ok(())
}

fn indexed(name: &str, i: usize) -> Polynomial {
    Polynomial::var(VarId::indexed(name, &[i as u32]))
}

fn c12_foundations() -> Check {
    let w = FlajoletWeights::symbolic();
    ensure(flajolet_check(PathFamily::Motzkin, 8, &w), || {
        "Motzkin paths".into()
    })?;
    ensure(flajolet_check(PathFamily::Dyck, 4, &w), || {
        "Dyck paths".into()
    })?;
    ensure(flajolet_check(PathFamily::Schroeder, 4, &w), || {
        "Schroeder paths".into()
    })?;
    ensure(
        euler_identity_check(|i| Polynomial::int(i as i64), 8),
        || "sum of factorials".into(),
    )?;
    let fact = families::semifactorial()
        .contract(8)
        .map_err(|e| e.to_string())?;
    let euler = ContinuedFraction::t(
        |i| Polynomial::int(i as i64),
        |i| {
            if i == 1 {
                Polynomial::zero()
            } else {
                Polynomial::int(1 - i as i64)
            }
        },
    )
    .expand(8);
    let mut factorial = 1i64;
    for n in 0..=8 {
        if n > 0 {
            factorial *= n as i64;
        }
        ensure(euler.coeffs()[n] == Polynomial::int(factorial), || {
            format!("{n}!")
        })?;
    }
    run_suite(Suite::Contraction, 8)?;
    let j = ContinuedFraction::j(|k| indexed("c", k), |k| indexed("b", k));
    let fractions = [
        families::ward(),
        families::ward_reversed(),
        families::generalized_ward(),
        families::semifactorial(),
        families::eulerian2_reversed(),
        fact,
        j,
    ];
    for cf in &fractions {
        for n in 0..=6 {
            let fast = cf.expand(n);
            ensure(fast == cf.expand_with_depth(n, n + 1), || {
                format!("depth n+1 at {n}")
            })?;
            ensure(fast == cf.expand_with_depth(n, n + 4), || {
                format!("depth n+4 at {n}")
            })?;
        }
    }
    let master = families::master_t();
    for n in 0..=3 {
        ensure(
            master.expand(n) == master.expand_with_depth(n, n + 2),
            || format!("master depth at {n}"),
        )?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Option<Duration>, fn() -> Check); 12] = [
        (
            "Ward triangle through row 8",
            Some(Duration::from_secs(1)),
            c1_ward_triangle,
        ),
        (
            "Ward polynomials four ways, n <= 6",
            Some(Duration::from_secs(30)),
            c2_ward_four_ways,
        ),
        (
            "symbolic master T-fraction, n <= 5",
            Some(Duration::from_secs(300)),
            c3_master,
        ),
        (
            "matching/labeled Schroeder path bijection, n <= 4",
            None,
            c4_schroeder_bijection,
        ),
        (
            "augmented matching/phylogenetic tree bijection, n <= 5",
            None,
            c5_phylo_bijection,
        ),
        (
            "18- and 12-variable T-fractions, n <= 4",
            None,
            c6_multivariable,
        ),
        ("second-order Eulerian suite", None, c7_eulerian),
        (
            "partitions into blocks of size >= 2",
            None,
            c8_assoc_stirling,
        ),
        (
            "recurrences, Riccati equation, closed form at u = x",
            None,
            c9_appendix,
        ),
        ("series inversion", None, c10_inversion),
        (
            "5x5 Hankel minors",
            Some(Duration::from_secs(120)),
            c11_hankel,
        ),
        (
            "Flajolet, Euler, contraction, depth stability",
            None,
            c12_foundations,
        ),
    ];
    let mut failed = 0;
    for (i, (title, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, budget) {
            (Ok(()), Some(b)) if elapsed > *b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(()) => println!("PASS {:>2} {title} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {title} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
