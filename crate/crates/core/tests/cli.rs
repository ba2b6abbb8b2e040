use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hyperquartet::hgx::{parse_document, parse_hgx, to_hgx, HgxDocument};
use hyperquartet::laws::{enumerate_hypergraphs, random_instances};
use hyperquartet::Error;

fn write(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperquartet")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn derive_reproduces_the_four_matrices() {
    let f = write("ex24.hgx", "2 4\n0101\n1011\n");
    let f = f.to_str().unwrap();
    assert_eq!(ok(&["derive", "--op", "d", f]), "{\"m\":4,\"n\":2,\"rows\":[\"01\",\"10\",\"01\",\"11\"]}\n");
    assert_eq!(ok(&["derive", "--op", "c", f]), "{\"m\":2,\"n\":4,\"rows\":[\"1010\",\"0100\"]}\n");
    assert_eq!(ok(&["derive", "--op", "cd", f]), "{\"m\":4,\"n\":2,\"rows\":[\"10\",\"01\",\"10\",\"00\"]}\n");
}

#[test]
fn quartet_poly_and_count() {
    let f = write("double-edge.hgx", "2 3\n111\n111\n");
    let f = f.to_str().unwrap();
    assert_eq!(
        ok(&["quartet", f]),
        "{\"chi\":[\"0\",\"-1\",\"0\",\"1\"],\"chi_d\":[\"0\",\"-1\",\"1\"],\"chi_c\":[\"0\",\"0\",\"0\",\"1\"],\"chi_cd\":[\"0\",\"0\",\"1\"]}\n"
    );
    assert_eq!(ok(&["poly", "--kind", "chi-d", f]), "[\"0\",\"-1\",\"1\"]\n");
    assert_eq!(ok(&["poly", "--kind", "rainbow", f]), "[\"0\",\"2\",\"-3\",\"1\"]\n");
    let t = write("full3.hgx", "1 3\n111\n");
    assert_eq!(ok(&["count", "--colors", "2", t.to_str().unwrap()]), "6\n");
    assert_eq!(ok(&["count", "--colors", "2", "--rainbow", t.to_str().unwrap()]), "0\n");
}

#[test]
fn coproduct_terms_are_sorted_and_stable() {
    let f = write("path.hgx", "{\"vertices\":3,\"edges\":[[0,1],[1,2]]}");
    let f = f.to_str().unwrap();
    let a = ok(&["coproduct", "--kind", "delta", f]);
    assert_eq!(a, ok(&["coproduct", "--kind", "delta", f]));
    let terms: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<(String, String)> = terms
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["left"].as_str().unwrap().into(), t["right"].as_str().unwrap().into()))
        .collect();
    assert_eq!(keys.len(), 3);
    assert_eq!(terms[0]["left"], "0 3\n");
    assert_eq!(terms[1]["coeff"], "2");
    for kind in ["Delta", "Delta-d", "Delta-c", "Delta-cd", "delta-d", "delta-c", "delta-cd", "Dprime", "Dpp", "dpp"] {
        ok(&["coproduct", "--kind", kind, f]);
    }
}

#[test]
fn canon_is_labeling_independent() {
    let a = write("canon-a.hgx", "2 3\n110\n011\n");
    let b = write("canon-b.hgx", "2 3\n101\n011\n");
    assert_eq!(ok(&["canon", a.to_str().unwrap()]), ok(&["canon", b.to_str().unwrap()]));
}

#[test]
fn stdin_is_accepted() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyperquartet"))
        .args(["count", "--colors", "3", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1 2\n11\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "6\n");
}

#[test]
fn exit_codes() {
    let o = run(&["laws", "--suite", "coassoc", "--max-edges", "2", "--max-vertices", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failing"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["laws", "--suite", "nonsense"]).status.code(), Some(2));
    let bad = write("bad.hgx", "2 4\n0101\n10x1\n");
    let o = run(&["quartet", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error: ") && err.contains("bad.hgx:3:"), "{err}");
    assert_eq!(run(&["quartet", "/nonexistent/file.hgx"]).status.code(), Some(2));
    let f = write("k2.hgx", "1 2\n11\n");
    assert_eq!(run(&["coproduct", "--kind", "Nabla", f.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["derive", "--op", "x", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn laws_json_is_byte_stable() {
    let args = ["laws", "--max-edges", "2", "--max-vertices", "2", "--samples", "20", "--seed", "7", "--json"];
    let a = ok(&args);
    let b = ok(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a, b);
    let report: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(report["coassoc/Delta"]["checked"].as_u64().unwrap() > 0);
}

fn corpus() -> Vec<HgxDocument> {
    let mut out: Vec<HgxDocument> = enumerate_hypergraphs(3, 4)
        .unwrap()
        .into_iter()
        .map(|h| HgxDocument { name: None, hypergraph: h })
        .collect();
    for (i, h) in random_instances(11, 100, 6, 8).unwrap().into_iter().enumerate() {
        out.push(HgxDocument { name: Some(format!("random-{i}")), hypergraph: h });
    }
    out
}

#[test]
fn serialization_round_trips() {
    for doc in corpus() {
        let text = doc.to_text();
        assert_eq!(parse_document(&text).unwrap(), doc);
        assert_eq!(to_hgx(&parse_hgx(&text).unwrap()), to_hgx(&doc.hypergraph));
    }
}

#[test]
fn shape_mutations_are_rejected() {
    let rejects = |t: &str| matches!(parse_hgx(t), Err(Error::Parse { .. }));
    for doc in corpus() {
        let h = &doc.hypergraph;
        let (m, n) = (h.edge_count(), h.vertex_count());
        if m == 0 || n == 0 {
            continue;
        }
        let body: Vec<String> = (0..m).map(|e| h.row_string(e)).collect();
        let with = |header: String, rows: &[String]| format!("{header}\n{}\n", rows.join("\n"));
        assert!(rejects(&with(format!("{} {n}", m + 1), &body)));
        assert!(rejects(&with(format!("{} {n}", m - 1), &body)));
        assert!(rejects(&with(format!("{m} {}", n + 1), &body)));
        assert!(rejects(&with(format!("{m} {}", n - 1), &body)));
        assert!(rejects(&with(format!("{m} {n}"), &body[1..])));
        for e in 0..m {
            let mut longer = body.clone();
            longer[e].push('0');
            assert!(rejects(&with(format!("{m} {n}"), &longer)));
            let mut shorter = body.clone();
            shorter[e].pop();
            assert!(rejects(&with(format!("{m} {n}"), &shorter)));
            let mut bad = body.clone();
            bad[e].replace_range(0..1, "2");
            assert!(rejects(&with(format!("{m} {n}"), &bad)));
        }
    }
}
