use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use plucker::blade::binomial;
use plucker::decomposability::{equation_count, from_factors, CountedCriterion};
use plucker::json::{emit_multivector, parse_family, parse_multivector};
use plucker::young::{dim_y, TwoColumnShape};
use tempfile::TempDir;

fn plk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plk"))
        .args(args)
        .output()
        .expect("plk runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

const TWO_PLANES: &str = r#"{"dim": 4, "grade": 2, "terms": [
    {"indices": [1, 2], "coeff": "1"}, {"indices": [3, 4], "coeff": "1"}]}"#;
const E123: &str = r#"{"dim": 4, "grade": 3, "terms": [{"indices": [1, 2, 3], "coeff": 1}]}"#;
const V_WEDGE_Q: &str = r#"{"dim": 7, "grade": 4, "terms": [
    {"indices": [1, 2, 3, 4], "coeff": "1"}, {"indices": [1, 5, 6, 7], "coeff": "1"}]}"#;

#[test]
fn check_two_planes_fails_everywhere() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", TWO_PLANES);
    let o = plk(&["check", s(&f)]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in &lines {
        assert_eq!(line.split_whitespace().nth(1), Some("false"), "{line}");
        assert!(line.contains("witness:"), "{line}");
    }
}

#[test]
fn check_simple_passes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", E123);
    let o = plk(&["check", "--all", s(&f)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert!(out
        .lines()
        .all(|l| l.split_whitespace().nth(1) == Some("true")));
}

#[test]
fn check_optimal_golden() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "vq.json", V_WEDGE_Q);
    let o = plk(&["check", "--criterion", "optimal", s(&f)]);
    assert_eq!(code(&o), 1);
    assert_eq!(
        stdout(&o),
        "optimal            false equations=14210 witness: coefficient C[11,25|3,4,6,7] = 16\n"
    );
}

#[test]
fn check_json_and_randomized() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", E123);
    let o = plk(&[
        "check",
        "--criterion",
        "contraction",
        "--mode",
        "randomized",
        "--seed",
        "9",
        "--json",
        s(&f),
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let report = &v["reports"][0];
    assert_eq!(report["probabilistic"], true);
    assert_eq!(report["seed"], 9);
    assert_eq!(report["criterion"]["contraction"], 2);

    let o = plk(&["check", "--criterion", "nope", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("unknown criterion"));
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("{\"dim\": 4,", "malformed"),
        (
            r#"{"dim": 4, "grade": 2, "terms": [{"indices": [1, 2], "coeff": "1"}, {"indices": [2, 1], "coeff": "3"}]}"#,
            "term 2",
        ),
        (
            r#"{"dim": 4, "grade": 2, "terms": [{"indices": [1, 5], "coeff": "1"}]}"#,
            "index 5",
        ),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let f = write(&dir, &format!("bad{i}.json"), text);
        let o = plk(&["check", s(&f)]);
        assert_eq!(code(&o), 2, "{text}");
        assert!(stderr(&o).contains(needle), "{}", stderr(&o));
    }
    let o = plk(&["check", "/nonexistent/file.json"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn factor_examples() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", E123);
    let o = plk(&["factor", s(&f)]);
    assert_eq!(code(&o), 0);
    let factors = parse_family(&stdout(&o)).unwrap();
    let expected: Vec<_> = [1, 2, 3]
        .iter()
        .map(|&i| plucker::Multivector::basis(4, &[i]).unwrap())
        .collect();
    assert_eq!(factors, expected);

    let f = write(&dir, "q.json", TWO_PLANES);
    let o = plk(&["factor", s(&f)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "not simple\n");
}

#[test]
fn factor_then_wedge_reproduces_file() {
    let dir = TempDir::new().unwrap();
    for (n, k, seed) in [
        ("5", "3", "1"),
        ("6", "2", "4"),
        ("8", "4", "7"),
        ("4", "4", "2"),
    ] {
        let path = dir.path().join(format!("r{n}{k}.json"));
        let o = plk(&[
            "random",
            "--dim",
            n,
            "--grade",
            k,
            "--simple",
            "--seed",
            seed,
            s(&path),
        ]);
        assert_eq!(code(&o), 0);
        let original = std::fs::read_to_string(&path).unwrap();
        let o = plk(&["factor", s(&path)]);
        assert_eq!(code(&o), 0);
        let factors = parse_family(&stdout(&o)).unwrap();
        let rebuilt = emit_multivector(&from_factors(&factors).unwrap());
        assert_eq!(rebuilt, original);
    }
}

#[test]
fn count_examples() {
    let o = plk(&["count", "--dim", "8", "--grade", "4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let header: Vec<&str> = out.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(
        header,
        [
            "n",
            "s",
            "Classical",
            "Dual",
            "Improved",
            "DualImproved",
            "Optimal"
        ]
    );
    let row: Vec<u128> = out
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(row[2], 3136);
    assert_eq!(row[4], 784);
    assert_eq!(row[6], dim_y(8, &TwoColumnShape::new(6, 2).unwrap()));
    assert!(row[6] < 784);

    let o = plk(&["count", "--dim", "4", "--grade", "2"]);
    let row: Vec<u128> = stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(row[2], binomial(4, 1) * binomial(4, 3));
    assert_eq!(row[4], 1);

    let o = plk(&["count", "--dim", "6", "--grade", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for c in CountedCriterion::ALL {
        assert_eq!(
            v["counts"][c.name()].as_u64().unwrap() as u128,
            equation_count(6, 3, c).unwrap()
        );
    }

    assert_eq!(code(&plk(&["count", "--dim", "3", "--grade", "5"])), 2);
}

#[test]
fn dims_examples() {
    let o = plk(&["dims", "--dim", "6", "--grade", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("symmetric    210 == 210  PASS"), "{out}");
    assert_eq!(out.matches("PASS").count(), 5);

    let o = plk(&["dims", "--dim", "4", "--grade", "2"]);
    assert!(stdout(&o).contains("full         36 == 36  PASS"));

    let o = plk(&["dims", "--dim", "3", "--grade", "3"]);
    let out = stdout(&o);
    assert!(out.contains("Y^(3,3)    1\n"), "{out}");
    assert!(out.contains("Y^(4,2)    0\n"), "{out}");
    assert_eq!(code(&o), 0);

    assert_eq!(code(&plk(&["dims", "--dim", "3", "--grade", "0"])), 2);
}

#[test]
fn random_examples() {
    let dir = TempDir::new().unwrap();
    let a = plk(&[
        "random", "--dim", "6", "--grade", "3", "--simple", "--seed", "1",
    ]);
    let b = plk(&[
        "random", "--dim", "6", "--grade", "3", "--simple", "--seed", "1",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let f = write(&dir, "simple.json", &stdout(&a));
    assert_eq!(code(&plk(&["check", "--all", s(&f)])), 0);

    let o = plk(&[
        "random",
        "--dim",
        "4",
        "--grade",
        "2",
        "--nonsimple",
        "--seed",
        "1",
    ]);
    let p = parse_multivector(&stdout(&o)).unwrap();
    assert!(!plucker::decomposability::is_simple_oracle(&p));
    let f = write(&dir, "nonsimple.json", &stdout(&o));
    let o = plk(&["check", "--all", s(&f)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o)
        .lines()
        .all(|l| l.split_whitespace().nth(1) == Some("false")));

    let o = plk(&["random", "--dim", "4", "--grade", "1", "--nonsimple"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("simple"));
    let o = plk(&[
        "random",
        "--dim",
        "4",
        "--grade",
        "2",
        "--simple",
        "--nonsimple",
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&plk(&["random", "--dim", "4", "--grade", "2"])), 2);
}

fn family_file(dir: &TempDir, name: &str, sets: &[&[usize]]) -> PathBuf {
    let members: Vec<String> = sets
        .iter()
        .map(|idx| {
            let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            format!(
                r#"{{"dim": 4, "grade": {}, "terms": [{{"indices": [{}], "coeff": "1"}}]}}"#,
                idx.len(),
                list.join(",")
            )
        })
        .collect();
    write(dir, name, &format!("[{}]", members.join(",")))
}

#[test]
fn family_examples() {
    let dir = TempDir::new().unwrap();
    let cases: [(&[&[usize]], &str); 3] = [
        (&[&[1, 2], &[1, 3], &[1, 4]], "IntersectionBound"),
        (&[&[1, 2], &[1, 3], &[2, 3]], "SpanBound"),
        (&[&[1, 2, 3]], "Both"),
    ];
    for (i, (sets, branch)) in cases.iter().enumerate() {
        let f = family_file(&dir, &format!("f{i}.json"), sets);
        let o = plk(&["family", s(&f)]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).starts_with(branch), "{}", stdout(&o));
    }

    let f = write(
        &dir,
        "bad.json",
        &format!(
            "[{}, {}]",
            r#"{"dim": 4, "grade": 2, "terms": [{"indices": [1, 2], "coeff": "1"}]}"#, TWO_PLANES
        ),
    );
    let o = plk(&["family", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("member 2"), "{}", stderr(&o));
}
