use std::process::{Command, Output};

use serde_json::Value;

fn syt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = syt(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_closed_two_row() {
    let v = json(&["count", "--shape", "5,2", "--method", "closed", "--json"]);
    assert_eq!(v["count"], "14");
    assert_eq!(v["method"], "closed");
    assert_eq!(v["n"], 7);
}

#[test]
fn count_every_method_agrees_on_3_1() {
    for m in ["auto", "dp", "genfun", "closed", "tworow", "dft", "oracle"] {
        let v = json(&["count", "--shape", "3,1", "--method", m, "--json"]);
        assert_eq!(v["count"], "3", "method {m}");
    }
}

#[test]
fn empty_shape_counts_one() {
    let out = syt(&["count", "--shape", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("f(0) = 1"));
}

#[test]
fn dft_count_reports_raw_sum() {
    let v = json(&["count", "--shape", "4,3,2", "--method", "dft", "--json"]);
    assert_eq!(v["count"], "168");
    let re = v["dft"]["raw_re"].as_f64().unwrap();
    assert!((re - 168.0).abs() < 1e-6);
    assert!(v["dft"]["residual"].as_f64().unwrap() < 0.25);
    assert_eq!(v["dft"]["mode"], "derived");
}

#[test]
fn verbatim_dft_fails_tolerance_or_misses() {
    // the verbatim construction does not reproduce f^(2,1) = 2
    let out = syt(&["count", "--shape", "2,1", "--method", "dft", "--dft-mode", "verbatim", "--json"]);
    if out.status.success() {
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_ne!(v["count"], "2");
    } else {
        assert_eq!(out.status.code(), Some(2));
    }
}

#[test]
fn big_count_is_a_decimal_string() {
    let v = json(&["count", "--shape", "20,20,20", "--json"]);
    let s = v["count"].as_str().unwrap();
    assert!(s.len() > 20 && s.bytes().all(|b| b.is_ascii_digit()));
    let dp = json(&["count", "--shape", "20,20,20", "--method", "dp", "--json"]);
    assert_eq!(dp["count"], v["count"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--shape", "1,1,1", "--method", "tworow"][..],
        &["count", "--shape", "2,2,1,1", "--method", "dft"],
        &["count", "--shape", "2,3"],
        &["count", "--shape", "-1"],
        &["count", "--shape", "3,2,1", "--r", "2"],
        &["count", "--shape", "9,9", "--method", "oracle"],
        &["count", "--shape", "2", "--method", "bogus"],
        &["genfun", "--n", "3", "--r", "0"],
    ] {
        let out = syt(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_n4_height_3() {
    let out = syt(&["table", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\t1\tok\n3,1\t3\tok\n2,2\t2\tok\n2,1,1\t3\tok\n");
}

#[test]
fn table_n7_json_sums_to_motzkin() {
    let v = json(&["table", "--n", "7", "--json"]);
    let rows = v.as_array().unwrap();
    let total: u64 = rows
        .iter()
        .map(|r| {
            assert_eq!(r["agree"], true);
            r["count"].as_str().unwrap().parse::<u64>().unwrap()
        })
        .sum();
    assert_eq!(total, 127);
    assert_eq!(rows[0]["shape"], "7");
}

#[test]
fn genfun_text() {
    let out = syt(&["genfun", "--n", "3", "--r", "2"]);
    assert_eq!(stdout(&out).trim(), "x1^3 + 2*x1^2*x2 - 2*x2^3 - x2^4/x1");
    let out = syt(&["genfun", "--n", "0", "--r", "1"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = syt(&["genfun", "--n", "2", "--r", "2"]);
    assert_eq!(stdout(&out).trim(), "x1^2 + x1*x2 - x2^2 - x2^3/x1");
}

#[test]
fn genfun_json_records() {
    let v = json(&["genfun", "--n", "7", "--r", "2", "--format", "json"]);
    let terms = v.as_array().unwrap();
    assert_eq!(terms[0]["exponents"], serde_json::json!([7, 0]));
    assert_eq!(terms[0]["coefficient"], "1");
    let c43 = terms
        .iter()
        .find(|t| t["exponents"] == serde_json::json!([4, 3]))
        .unwrap();
    assert_eq!(c43["coefficient"], "14");
}

type Pairs = Vec<(String, String)>;

/// Minimal check of the DOT subset we emit: header, node and edge statements, closing brace.
fn parse_dot(text: &str) -> (usize, Pairs, Pairs) {
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("digraph young_r") && header.ends_with('{'), "{header}");
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut closed = false;
    for line in lines {
        let line = line.trim();
        assert!(!closed, "content after closing brace");
        if line == "}" {
            closed = true;
            continue;
        }
        assert!(line.ends_with(';'), "unterminated: {line}");
        let body = &line[..line.len() - 1];
        if let Some((lhs, rest)) = body.split_once(" -> ") {
            let (rhs, attrs) = rest.split_once(" [").unwrap();
            edges.push((lhs.to_string(), rhs.to_string()));
            assert!(attrs.starts_with("arrowhead="));
        } else if let Some((id, attrs)) = body.split_once(" [label=\"") {
            if id == "node" {
                continue;
            }
            assert!(id.starts_with("p_"));
            nodes.push((id.to_string(), attrs.trim_end_matches("\"]").to_string()));
        }
    }
    assert!(closed);
    (nodes.len(), nodes, edges)
}

#[test]
fn graph_is_valid_dot_with_expected_nodes() {
    let out = syt(&["graph", "--r", "3", "--max-coordinate", "2"]);
    assert!(out.status.success());
    let (count, nodes, edges) = parse_dot(&stdout(&out));
    // partitions fitting in a 3 x 2 box
    assert_eq!(count, 10);
    let ids: Vec<&str> = nodes.iter().map(|(id, _)| id.as_str()).collect();
    for (a, b) in &edges {
        assert!(ids.contains(&a.as_str()) && ids.contains(&b.as_str()));
    }
    let label = |id: &str| nodes.iter().find(|(n, _)| n == id).unwrap().1.clone();
    assert_eq!(label("p_1_1_1"), "(1,1,1) : 1");
    assert_eq!(label("p_2_1_0"), "(2,1,0) : 2");
    assert_eq!(label("p_2_2_2"), "(2,2,2) : 5");
}

#[test]
fn verify_passes_and_reports() {
    let out = syt(&["verify", "--max-n", "6", "--max-r", "3", "--dft-max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("disagreements: 0"));
    let v = json(&["verify", "--max-n", "5", "--max-r", "3", "--json"]);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_verbatim_keeps_misses_separate() {
    let v = json(&["verify", "--max-n", "4", "--max-r", "3", "--dft-mode", "verbatim", "--json"]);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
    assert!(!v["dft_mode_diffs"].as_array().unwrap().is_empty());
}

#[test]
fn verify_rejects_impossible_tolerance() {
    // a negative tolerance rejects every Fourier sum; that is a count failure, not a mismatch
    let out = syt(&["verify", "--max-n", "3", "--max-r", "3", "--dft-tolerance", "-1"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn enumerate_lists_tableaux() {
    let out = syt(&["enumerate", "--shape", "2,2"]);
    assert_eq!(stdout(&out), "1 2\n3 4\n\n1 3\n2 4\n");
    let v = json(&["enumerate", "--shape", "3,2", "--json"]);
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn bench_csv_shape() {
    let out = syt(&["bench", "--max-n", "4", "--methods", "closed,oracle"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("method,n,shapes,elapsed_us"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.len() == 4 && r[3].parse::<f64>().is_ok()));
    assert_eq!(rows[4], vec!["closed", "4", "4", rows[4][3]]);
}

#[test]
fn json_count_round_trips_through_shape_parser() {
    for shape in ["0", "1", "3,1", "4,4,2,1"] {
        let v = json(&["count", "--shape", shape, "--json"]);
        let back = v["shape"].as_str().unwrap();
        let again = json(&["count", "--shape", back, "--json"]);
        assert_eq!(v["count"], again["count"]);
        assert_eq!(back, shape);
    }
}
