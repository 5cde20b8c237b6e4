use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattice-cf")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn continued_fractions() {
    assert_eq!(ok(&["cf", "expand", "--kind", "hj", "11/7"]), "[2,3,2,2]\n");
    assert_eq!(ok(&["cf", "expand", "--kind", "e", "11/7"]), "[1,1,1,3]\n");
    assert_eq!(ok(&["cf", "expand", "--kind", "e", "1/1"]), "[1]\n");
    assert_eq!(ok(&["cf", "expand", "--kind", "e", "-7/3"]), "[-3,1,2]\n");
    assert_eq!(ok(&["cf", "expand", "--kind", "hj", "5"]), "[5]\n");
    assert_eq!(ok(&["cf", "convert", "--to", "hj", "[1,1,1,3]"]), "[2,3,2,2]\n");
    assert_eq!(ok(&["cf", "convert", "--to", "e", "[2,3,2,2]"]), "[1,1,1,3]\n");
    assert_eq!(ok(&["cf", "involute", "11/7"]), "11/4\n");
    assert_eq!(ok(&["cf", "involute", "11/7", "--terms"]), "11/4\ne [2,1,3]\nhj [3,4]\n");
    assert_eq!(ok(&["cf", "staircase", "[2,3,2,2]"]), "*\n* *\n  *\n  *\ndual [3,4]\n");
}

#[test]
fn cones() {
    assert_eq!(ok(&["cone", "type", "1", "0", "4", "11"]), "11/7\n");
    assert_eq!(ok(&["cone", "type", "4", "11", "1", "0"]), "11/8\n");
    assert_eq!(ok(&["cone", "dual", "11/7"]), "11/4\n");
    let poly: serde_json::Value = serde_json::from_str(&ok(&["cone", "polygon", "11/7", "--oracle"])).unwrap();
    assert_eq!(poly["schema"], "lattice-cf/1");
    assert_eq!(poly["weights"], serde_json::json!([2, 3, 2, 2]));
    assert_eq!(poly["vertices"], serde_json::json!([0, 2, 5]));
    let rep: serde_json::Value = serde_json::from_str(&ok(&["cone", "duality-report", "11/4"])).unwrap();
    assert_eq!(rep["passes"], true);
    assert_eq!(rep["supplementary"], "11/7");
}

#[test]
fn zigzag() {
    let ascii = ok(&["zigzag", "11/7", "--format", "ascii"]);
    let frozen = include_str!("../../core/tests/golden/zz_11_7.txt");
    assert_eq!(ascii, frozen);
    assert!(ok(&["zigzag", "11/7", "--format", "svg"]).starts_with("<?xml"));
    let j: serde_json::Value = serde_json::from_str(&ok(&["zigzag", "11/7", "--format", "json"])).unwrap();
    assert_eq!(j["readings"]["e"], serde_json::json!([1, 1, 1, 3]));
    assert_eq!(j["readings"]["hj-dual"], serde_json::json!([3, 4]));
    assert_eq!(ok(&["zigzag", "11/7", "--read", "e-dual"]), "[2,1,3]\n");
    assert_eq!(ok(&["zigzag", "11/7", "--read", "hj"]), "[2,3,2,2]\n");
}

#[test]
fn singularities() {
    let dot = ok(&["sing", "resolve", "11/7", "--format", "dot"]);
    assert_eq!(dot.matches(" -- ").count(), 3);
    let j: serde_json::Value = serde_json::from_str(&ok(&["sing", "resolve", "2/1", "--format", "json"])).unwrap();
    assert_eq!(j["vertices"][0]["weight"], -2);
    assert_eq!(ok(&["sing", "embdim", "11/4", "--oracle"]), "6\n");
    assert_eq!(ok(&["sing", "embdim", "11/7"]), "4\n");
    assert_eq!(ok(&["sing", "blowup", "11/7"]), "[smooth,A1]\n");
    assert_eq!(ok(&["sing", "blowup", "2/1"]), "[]\n");
    assert_eq!(ok(&["lens", "compare", "11", "7", "11", "8"]), "oriented-diffeomorphic\n");
    assert_eq!(ok(&["lens", "compare", "11", "7", "11", "4"]), "not-oriented-diffeomorphic\n");
    assert_eq!(ok(&["lens", "compare", "11", "7", "11", "4", "--reverse"]), "reversing-diffeomorphic\n");
    assert_eq!(ok(&["lens", "reverse", "11", "7"]), "L(11,4)\n");
    assert_eq!(ok(&["cusp", "monodromy", "4"]), "[[0,-1],[1,4]]\ntrace 4\n");
    assert_eq!(ok(&["cusp", "trace", "2,3,2,2"]), "6\n");
    assert_eq!(ok(&["cusp", "dual", "4"]), "(2,3)\n");
    assert_eq!(ok(&["cusp", "dual", "2,3,2,2"]), "(6)\n");
    let curve = ok(&["curve", "resolve", "11", "4", "--format", "json", "--oracle"]);
    let j: serde_json::Value = serde_json::from_str(&curve).unwrap();
    assert_eq!(j["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(j["arrows"], serde_json::json!([5]));
    assert_eq!(j["vertices"][5]["label"], "E6");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["cf", "expand", "--kind", "x", "1/2"]), 1);
    assert_eq!(code(&["cf", "expand", "--kind", "e", "1/0"]), 1);
    assert_eq!(code(&["cf", "expand", "--kind", "e", "--bogus", "1/2"]), 1);
    assert_eq!(code(&["cf", "expand", "--kind", "e", "abc"]), 1);
    assert_eq!(code(&["cf", "involute", "1/2"]), 2);
    assert_eq!(code(&["zigzag", "-3/2"]), 2);
    assert_eq!(code(&["sing", "embdim", "12/8"]), 2);
    assert_eq!(code(&["cone", "type", "1", "2", "2", "4"]), 2);
    assert_eq!(code(&["cusp", "trace", "4"]), 2);
    assert_eq!(code(&["cusp", "dual", "2,2"]), 2);
    assert_eq!(code(&["curve", "resolve", "5", "1"]), 2);
    let out = run(&["cf", "involute", "1/2"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("λ > 1"));
}

#[test]
fn output_is_repeatable() {
    for args in [
        &["zigzag", "97/35", "--format", "svg"][..],
        &["cone", "duality-report", "97/35"][..],
        &["curve", "resolve", "13", "5", "--format", "dot"][..],
    ] {
        assert_eq!(ok(args), ok(args));
    }
}
