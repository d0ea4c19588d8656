use triaut::cli::{run, Outcome};
use triaut::document::parse_automorphism;

fn triaut(args: &[&str]) -> Outcome {
    run(std::iter::once("triaut").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = triaut(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

const NEG: &str = r#"{"algebra":"poly","n":2,"images":["-1*x1 + x2^2","x2"]}"#;

#[test]
fn documented_invocations() {
    assert_eq!(
        ok(&["--algebra", "poly", "--n", "2", "solve-diff", "--var", "1", "--shift", "1", "--g", "x1"]),
        "1/2*x1^2 - 1/2*x1\n"
    );
    assert_eq!(ok(&["--n", "3", "nonlin-witness", "--p", "2", "--l", "1", "--m", "2", "--at-zero"]), "2\n");
    assert_eq!(ok(&["--n", "2", "order", "--auto", NEG]), "finite 2\n");
}

#[test]
fn exit_codes() {
    let parse = triaut(&["--n", "2", "solve-diff", "--var", "1", "--shift", "1", "--g", "x1 + x3"]);
    assert_eq!(parse.code, 2);
    assert!(parse.stderr.contains("byte 6"), "{}", parse.stderr);
    let domain = triaut(&["--n", "2", "solve-diff", "--var", "1", "--shift", "0", "--g", "x1"]);
    assert_eq!(domain.code, 1);
    assert!(domain.stderr.contains("shift"));
    let not_tri = triaut(&["factorize", "--auto", "(x2, x1)"]);
    assert_eq!(not_tri.code, 1);
    assert_eq!(triaut(&["frobnicate"]).code, 2);
    assert_eq!(triaut(&["solve-diff", "--var", "1", "--shift", "1", "--g", "x1"]).code, 2);
    assert_eq!(triaut(&["--n", "3", "order", "--auto", NEG]).code, 1);
    let help = triaut(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("solve-diff"));
}

#[test]
fn map_operations() {
    assert_eq!(ok(&["compose", "--auto", "(x1 + x2, x2)", "--auto", "(x1, x2 + 1)"]), "(x1 + x2 + 1, x2 + 1)\n");
    assert_eq!(ok(&["invert", "--auto", "(x1 + x2^2, x2 + 1)"]), "(-1*x2^2 + x1 + 2*x2 - 1, x2 - 1)\n");
    assert_eq!(ok(&["power", "--auto", "(x1 + x2, x2)", "--k", "-3"]), "(x1 - 3*x2, x2)\n");
    assert_eq!(
        ok(&["commutator", "--auto", "(x1 + x2^2, x2)", "--auto", "(x1, x2 + 1)"]),
        "(x1 + 2*x2 + 1, x2)\n"
    );
    assert_eq!(ok(&["ia-level", "--auto", "(x1 + x2^3, x2 + x3^3, x3)"]), "level 2\n");
    assert_eq!(ok(&["fix-split", "--auto", "(x2, x1)", "--f", "x1"]), "fix: 1/2*x1 + 1/2*x2\nifix: 1/2*x1 - 1/2*x2\n");
}

#[test]
fn json_output_round_trips() {
    let out = ok(&["--output", "json", "invert", "--auto", r#"{"algebra":"free","n":2,"images":["x1 + x2*x2","x2"]}"#]);
    let phi = parse_automorphism(out.trim()).unwrap();
    assert_eq!(phi.to_string(), "(-1*x2^2 + x1, x2)");
    let back = ok(&["--output", "json", "invert", "--auto", out.trim()]);
    assert_eq!(parse_automorphism(back.trim()).unwrap().to_string(), "(x2^2 + x1, x2)");
}

#[test]
fn auto_from_file() {
    let path = std::env::temp_dir().join(format!("triaut-cli-{}.json", std::process::id()));
    std::fs::write(&path, NEG).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(ok(&["order", "--auto", &arg]), "finite 2\n");
    std::fs::remove_file(&path).ok();
    assert_eq!(triaut(&["order", "--auto", &arg]).code, 1);
}

#[test]
fn structure_commands_with_checks() {
    assert_eq!(
        ok(&["factorize", "--auto", "(x1 + x2^2, x2 + 1)", "--check"]),
        "sigma(2, 1; 1) * sigma(1, 1; x2^2)\n"
    );
    let expr = ok(&["comm-express", "--auto", "(x1 + x2, x2)", "--check"]);
    assert!(expr.contains("phi1: sigma(1, 1; -1/2*x2^2 + 1/2*x2)"), "{expr}");
    assert_eq!(
        ok(&["--n", "3", "layer-comm", "--i", "1", "--g", "x2", "--j", "2", "--h", "1", "--check"]),
        "phi: sigma(1, 1; 1/2*x2^2 - 1/2*x2)\npsi: sigma(2, 1; 1)\n"
    );
    assert_eq!(ok(&["--n", "2", "diag", "--elem", "sigma(1, 2; x2)", "--check"]), "c: sigma(1, 1; -1*x2)\nd: (2*x1, x2)\n");
    assert_eq!(ok(&["--n", "2", "diag", "--elem", "sigma(1, 1; x2)"]), "not diagonalizable\n");
}

#[test]
fn presentation_commands() {
    assert_eq!(ok(&["--n", "3", "translate", "--elem", "sigma(2, 3; x3)"]), "t(1,2) phi(3; x3) t(1,2)\n");
    assert_eq!(ok(&["--n", "3", "translate", "--word", "t(1,2) phi(3; x3) t(1,2)"]), "(x1, 3*x2 + x3, x3)\n");
    let a = ok(&["--n", "4", "check-relations", "--seed", "9", "--count", "10"]);
    let b = ok(&["--n", "4", "check-relations", "--seed", "9", "--count", "10"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 8);
    assert!(a.lines().all(|l| l.ends_with("10/10 hold")), "{a}");
    let free = ok(&["--algebra", "free", "--n", "3", "check-relations", "--family", "R7", "--count", "5"]);
    assert_eq!(free, "R7: 5/5 hold\n");
    let small = ok(&["--n", "2", "check-relations", "--family", "r6", "--count", "5"]);
    assert_eq!(small, "R6: skipped (needs n >= 3)\n");
}

#[test]
fn subgroup_commands() {
    let cert = ok(&["free-check", "--f", "x2^2", "--g", "x1^2", "--word", "a b a b"]);
    assert!(cert.contains("observed degree: 16\nexpected degree: 16\nvalid: true"), "{cert}");
    let small = triaut(&["free-check", "--f", "x2", "--g", "x1", "--word", "a b"]);
    assert_eq!(small.code, 1);
    assert!(small.stderr.contains("p*q = 1"));
    assert_eq!(triaut(&["free-check", "--f", "x2^2", "--g", "x1", "--word", "a a"]).code, 1);
    assert_eq!(triaut(&["free-check", "--f", "x2^2", "--g", "x1", "--word", "a c"]).code, 2);
    assert!(ok(&["--n", "3", "classify-pair", "--e1", "sigma(1, 1; x2)", "--e2", "sigma(1, 1; 2*x2)"]).starts_with("Z "));
    assert!(ok(&["--n", "3", "classify-pair", "--e1", "sigma(1, 1; x2)", "--e2", "sigma(1, 1; x3)"]).starts_with("ZxZ "));
    assert!(ok(&["--n", "3", "classify-pair", "--e1", "sigma(1, 2; x2^3)", "--e2", "sigma(2, 1; 5)"])
        .starts_with("metabelian "));
    assert_eq!(ok(&["--n", "3", "order", "--elem", "sigma(1, 3; x2)"]), "infinite\n");
}

#[test]
fn budget_guard() {
    let out = triaut(&["--budget", "3", "nonlin-witness", "--p", "4", "--l", "2", "--m", "4"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("budget"));
}
