use std::path::PathBuf;
use std::process::{Command, Output};

const SIX: &str = "1/((1-l2*x/l1^2)*(1-l3*x/l1^2)*(1-l1*x/l2^2)*(1-l3*x/l2^2)*(1-l1*x/l3^2)*(1-l2*x/l3^2))";

fn omegact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omegact"))
        .args(args)
        .env_remove("OMEGACT_TRUNCATE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Successful run, trimmed stdout.
fn ok(args: &[&str]) -> String {
    let o = omegact(args);
    assert_eq!(o.status.code(), Some(0), "{:?} failed: {}", args, stderr(&o));
    stdout(&o).trim_end().to_string()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("omegact-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn omega_geq_two_a_at_least_three_b() {
    let out = ok(&["omega", "geq", "1/((1-l^2*x)*(1-y/l^3))", "--vars", "l,x,y", "--eliminate", "l"]);
    assert_eq!(out, "(1+x^2*y)/((1-x^3*y^2)*(1-x))");
    let checked = ok(&["omega", "geq", "1/((1-l^2*x)*(1-y*l^-3))", "--vars", "l,x,y", "--eliminate", "l", "--cross-check"]);
    assert_eq!(checked, out);
}

#[test]
fn six_factor_constant_term_in_every_order() {
    for order in ["l1,l2,l3", "l2,l3,l1", "l3,l2,l1"] {
        let out = ok(&["omega", "ct", SIX, "--vars", "l1,l2,l3,x", "--eliminate", "l1,l2,l3", "--elim-order", order]);
        assert_eq!(out, "1", "order {}", order);
    }
}

#[test]
fn elimination_order_must_permute_the_eliminated_set() {
    let o = omegact(&["omega", "ct", SIX, "--vars", "l1,l2,l3,x", "--eliminate", "l1,l2,l3", "--elim-order", "l1,l2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a permutation"));
}

#[test]
fn constant_input() {
    assert_eq!(ok(&["omega", "ct", "5", "--vars", "l", "--eliminate", "l"]), "5");
}

#[test]
fn non_binomial_factor_is_a_domain_error() {
    let o = omegact(&["omega", "ct", "1/((1-l*x)*(1-l-x))", "--vars", "l,x", "--eliminate", "l"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("1-l-x"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    let syntax = omegact(&["omega", "ct", "x+(", "--eliminate", "x"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(stderr(&syntax).contains("offset 3"));
    assert_eq!(omegact(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(omegact(&[]).status.code(), Some(2));
    let unknown = omegact(&["omega", "ct", "1/(1-l*z)", "--vars", "l,x", "--eliminate", "l"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bad = scratch("bad.txt", "1 2\n3 x\n");
    assert_eq!(omegact(&["count", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = omegact(&["count", "/nonexistent/system.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn partial_fractions_of_the_worked_example() {
    let out = ok(&["pfd", "t/((t+1)^2*(t-1)^3*(t-2)^5)", "--cross-check"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "(t+1)^2: (-1/1944)/(t+1)^2 + (-13/11664)/(t+1)",
            "(t-1)^3: (-1/4)/(t-1)^3 + (-5/4)/(t-1)^2 + (-59/16)/(t-1)",
            "(t-2)^5: (2/9)/(t-2)^5 + (-19/27)/(t-2)^4 + (13/9)/(t-2)^3 + (-593/243)/(t-2)^2 + (2689/729)/(t-2)",
        ]
    );
}

#[test]
fn partial_fractions_other_modes() {
    let general = ok(&["pfd", "1/((t^2+1)^2*(t-1))", "--cross-check"]);
    assert!(general.contains("(1+t^2)^2: (-3/4-3/4*t-1/4*t^2-1/4*t^3)/(1+t^2)^2"), "{}", general);
    let prime = ok(&["pfd", "1/((t^2+1)^2*(t-1))", "--prime", "t^2+1", "--cross-check"]);
    assert!(prime.contains("(1/8+1/8*a)/(t-a)^2 + (-1/8+1/4*a)/(t-a)"), "{}", prime);
    assert_eq!(ok(&["pfd", "(1+t)/(t^3*(1-t))", "--at-origin"]), "(1+2*t+2*t^2)/(t)^3");
    let o = omegact(&["pfd", "1/((t-1)*(t^2-1))"]);
    assert_eq!(o.status.code(), Some(1), "shared factor t-1");
}

#[test]
fn dedekind_commands() {
    let r = ok(&["dedekind", "--reciprocity", "2", "3", "5", "--cross-check"]);
    assert!(r.ends_with("equal: true"), "{}", r);
    let j: serde_json::Value = serde_json::from_str(&ok(&["--json", "dedekind", "--reciprocity", "2", "3", "5"])).unwrap();
    assert_eq!(j["equal"], serde_json::Value::Bool(true));
    assert_eq!(ok(&["dedekind", "7", "1", "1", "--cross-check"]), "d(7; 1, 1) = -10");
    assert_eq!(omegact(&["dedekind", "6", "2"]).status.code(), Some(1));
}

#[test]
fn hadamard_of_fibonacci() {
    assert_eq!(ok(&["hadamard", "1/(1-t-t^2)", "1/(1-t-t^2)", "--cross-check"]), "(1-t)/(1-2*t-2*t^2+t^3)");
}

#[test]
fn counting_and_reciprocity() {
    let magic = scratch("magic.txt", "# x1 + x2 = x3 + x4\n1 1 -1 -1\n");
    let out = ok(&["count", magic.to_str().unwrap(), "--cross-check"]);
    assert!(out.starts_with("E(x) = (1-x1*x2*x3*x4)/"), "{}", out);
    assert!(out.ends_with("holds up to degree 8"), "{}", out);
    let shifted = scratch("shifted.txt", "2 -3 1\nb: 2\n");
    let ct = ok(&["omega", "ct", "--system", shifted.to_str().unwrap(), "--cross-check"]);
    assert_eq!(ct, "(x2*x3+x1^2*x2^2+x1*x2^2*x3^2)/((1-x1^3*x2^2)*(1-x2*x3^3))");
    let deficient = scratch("deficient.txt", "1 -1\n2 -2\n");
    assert!(ok(&["count", deficient.to_str().unwrap()]).contains("not applicable"));
}

#[test]
fn walks_match_enumeration() {
    for args in [
        vec!["walks", "slit", "--truncate", "6", "--cross-check"],
        vec!["walks", "slit", "--steps", "1/(x*y*(1-x)*(1-y))", "--truncate", "5", "--cross-check"],
        vec!["walks", "dyck", "--height", "3", "--truncate", "10", "--cross-check"],
        vec!["walks", "dyck", "--truncate", "8", "--cross-check"],
        vec!["walks", "quarter", "--truncate", "5", "--cross-check"],
        vec!["walks", "quarter", "--steps", "x*y+x/y+y/x+1/(x*y)", "--truncate", "4", "--cross-check"],
        vec!["walks", "catalan", "--truncate", "8", "--cross-check"],
    ] {
        ok(&args);
    }
    let slit = ok(&["walks", "slit", "--steps", "1/(x*y*(1-x)*(1-y))", "--truncate", "6"]);
    assert!(slit.contains("S_{1,0}(t) = t + 10*t^2 + 110*t^3 + 1302*t^4 + 16212*t^5 + 209352*t^6 + O(t^7)"), "{}", slit);
    let asym = omegact(&["walks", "quarter", "--steps", "x*y+1/x+1/y"]);
    assert_eq!(asym.status.code(), Some(1));
}

#[test]
fn oracle_commands() {
    let diag = ok(&["oracle", "walks", "--steps", "x+y", "--constraint", "diagonal", "--truncate", "2"]);
    assert_eq!(diag, "[0, 0, 0] 1\n[1, 1, 0] 1\n[2, 1, 1] 1\n[2, 2, 0] 1");
    assert_eq!(ok(&["oracle", "dyson", "2", "3", "1"]), "CT = 60\nmultinomial = 60\nequal: true");
    let suite = ok(&["oracle", "binomial", "all", "--max", "3"]);
    assert_eq!(suite.lines().count(), 6);
    let ct = ok(&["oracle", "ct", "1/((1-l^2*x)*(1-y/l^3))", "--eliminate", "l", "--truncate", "5"]);
    assert!(ct.contains("[3, 2] 1"), "{}", ct);
    let float: f64 = ok(&["oracle", "dedekind", "7", "1", "1"]).parse().unwrap();
    assert!((float + 10.0).abs() < 1e-9);
    let band = ok(&["oracle", "walks", "--steps", "x*y+x/y", "--constraint", "band:0:1", "--truncate", "3"]);
    assert_eq!(band.lines().count(), 4);
    assert_eq!(omegact(&["oracle", "walks", "--constraint", "sideways"]).status.code(), Some(2));
}

#[test]
fn json_output_is_stable() {
    let args = ["--json", "omega", "geq", "1/((1-l^2*x)*(1-y/l^3))", "--vars", "l,x,y", "--eliminate", "l"];
    let a = ok(&args);
    let b = ok(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["result"], "(1+x^2*y)/((1-x^3*y^2)*(1-x))");
    assert_eq!(v["form"]["variables"], serde_json::json!(["x", "y"]));
    let w: serde_json::Value = serde_json::from_str(&ok(&["--json", "walks", "catalan", "--truncate", "3"])).unwrap();
    assert_eq!(w["by_length"]["order"], 3);
}

#[test]
fn latex_output() {
    let out = ok(&["--latex", "omega", "geq", "1/((1-l^2*x)*(1-y/l^3))", "--vars", "l,x,y", "--eliminate", "l"]);
    assert!(out.contains("\\frac"), "{}", out);
}

#[test]
fn truncation_from_flag_and_environment() {
    assert!(ok(&["walks", "catalan", "--truncate", "2"]).starts_with("by length: 1 + t + 2*t^2 + O(t^3)"));
    let o = Command::new(env!("CARGO_BIN_EXE_omegact"))
        .args(["walks", "catalan"])
        .env("OMEGACT_TRUNCATE", "3")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("by length: 1 + t + 2*t^2 + 3*t^3 + O(t^4)"), "{}", stdout(&o));
}

#[test]
fn output_file() {
    let target = scratch("out.txt", "");
    assert_eq!(ok(&["hadamard", "1/(1-t)", "1/(1-2*t)", "--out", target.to_str().unwrap()]), "");
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "1/(1-2*t)\n");
}

#[test]
fn batch_keeps_file_order_and_worst_exit_code() {
    let batch = scratch(
        "batch.txt",
        "# comment\ndedekind 7 1 1\nomega ct \"1/(1-x-y)\" --eliminate x\nhadamard \"1/(1-t)\" \"1/(1-t)\"\n",
    );
    let o = omegact(&["--batch", batch.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let heads: Vec<&str> = text.lines().filter(|l| l.starts_with("> ")).collect();
    assert_eq!(heads, ["> dedekind 7 1 1", "> omega ct \"1/(1-x-y)\" --eliminate x", "> hadamard \"1/(1-t)\" \"1/(1-t)\""]);
    assert!(text.contains("d(7; 1, 1) = -10"));
    let j: serde_json::Value = serde_json::from_str(&stdout(&omegact(&["--json", "--batch", batch.to_str().unwrap()]))).unwrap();
    assert_eq!(j.as_array().unwrap().len(), 3);
    assert!(j[1]["error"].as_str().unwrap().contains("1-x-y"));
    assert_eq!(j[2]["result"]["result"], "1/(1-t)");
}
