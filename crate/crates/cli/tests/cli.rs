use wardcf_cli::{run_suite, run_with_max_n, Output, Suite};

fn cli(args: &[&str]) -> Output {
    run_with_max_n(std::iter::once("wardcf").chain(args.iter().copied()), 6)
}

#[test]
fn ward_triangle_csv() {
    let out = cli(&[
        "triangle", "--family", "ward", "--rows", "4", "--format", "csv",
    ]);
    assert_eq!(out.code, 0);
    let row4: Vec<&str> = out
        .stdout
        .lines()
        .filter(|l| l.starts_with("4,"))
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(row4, ["0", "1", "25", "105", "105"]);
    assert!(out.stdout.starts_with("n,k,value\n0,0,1\n"));
}

#[test]
fn triangle_json_and_pretty() {
    let out = cli(&[
        "triangle",
        "--family",
        "eulerian2",
        "--rows",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(
        out.stdout,
        "{\"family\":\"eulerian2\",\"rows\":[[1],[0,1],[0,1,2]]}\n"
    );
    let out = cli(&[
        "triangle",
        "--family",
        "stirling2assoc",
        "--rows",
        "6",
        "--format",
        "pretty",
    ]);
    assert_eq!(out.stdout.lines().last(), Some("6 |  0  1 25 15  0  0  0"));
}

#[test]
fn expansions() {
    let out = cli(&["expand", "--family", "semifactorial", "--order", "4"]);
    assert_eq!(out.stdout, "1, 1, 3, 15, 105\n");
    let out = cli(&["expand", "--family", "ward", "--order", "2"]);
    assert_eq!(out.stdout, "1, x, 3*x^2 + x\n");
    let out = cli(&["expand", "--family", "eulerian2-reversed", "--order", "2"]);
    assert_eq!(out.stdout, "1, 1, x + 2\n");
    let out = cli(&[
        "expand",
        "--family",
        "generalized-ward",
        "--order",
        "2",
        "--set",
        "u=x",
        "--set",
        "z=0",
        "--set",
        "w=1",
    ]);
    assert_eq!(out.stdout, "1, x, 3*x^2 + x\n");
    let out = cli(&["expand", "--family", "master-T", "--order", "1"]);
    assert_eq!(out.stdout, "1, a[0]*b[0,0] + g[0,0]\n");
}

#[test]
fn verify_suites_pass() {
    let out = cli(&["verify", "--suite", "thm2.1", "--n", "4"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "PASS thm2.1 n=4\n"));
    for suite in [
        Suite::Thm12,
        Suite::AppendixB,
        Suite::Flajolet,
        Suite::EulerIdentity,
        Suite::ClosedFormUx,
        Suite::WardEuler,
    ] {
        assert_eq!(run_suite(suite, 3), Ok(()), "{}", suite.name());
    }
}

#[test]
fn enumeration_cap() {
    let out = cli(&["verify", "--suite", "lemma4.2", "--n", "7"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("WARDCF_MAX_N"));
    let out = cli(&["verify", "--suite", "appendixB", "--n", "7"]);
    assert_eq!(out.code, 0);
    let out = run_with_max_n(
        ["wardcf", "verify", "--suite", "euler-identity", "--n", "2"],
        0,
    );
    assert_eq!(out.code, 0);
}

#[test]
fn usage_errors() {
    for args in [
        &["triangle", "--family", "ward"][..],
        &["triangle", "--family", "catalan", "--rows", "3"],
        &["expand", "--family", "ward", "--order", "2", "--bogus"],
        &["expand", "--family", "ward", "--order", "2", "--set", "x"],
        &["expand", "--family", "ward", "--order", "2", "--set", "x=)"],
        &["hankel", "--family", "ward", "--size", "3", "--rmax", "4"],
        &["hankel", "--family", "ward", "--size", "7"],
        &["frobnicate"],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn hankel_report() {
    let out = cli(&[
        "hankel",
        "--family",
        "eulerian2-reversed",
        "--size",
        "3",
        "--rmax",
        "2",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "{\"sequence\":\"eulerian2-reversed\",\"m\":3,\"r_max\":2,\"ok\":true}\n"
    );
}

#[test]
fn inversion() {
    let out = cli(&["invert", "--order", "2"]);
    assert_eq!(
        out.stdout,
        "x1 = x + z\nx2 = u*x + w*x - x^2 - 3*x*z - 2*z^2\n"
    );
    let out = cli(&[
        "invert", "--order", "3", "--set", "z=0", "--set", "w=1", "--set", "u=x",
    ]);
    assert_eq!(out.stdout, "x1 = x\nx2 = x\nx3 = x\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "bijection-phylo", "--n", "3"];
    assert_eq!(cli(&args), cli(&args));
    let args = ["expand", "--family", "master-T", "--order", "3"];
    assert_eq!(cli(&args), cli(&args));
}
