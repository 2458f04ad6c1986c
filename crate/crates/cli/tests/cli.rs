use std::io::Write;
use std::process::{Command, Output, Stdio};

use d2graph::io::graph6;
use d2graph::{distance_power_graph, random_connected};

fn d2graph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_d2graph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gadget_chain_metrics_row() {
    let fam = d2graph(&["family", "--name", "gadget-chain", "--t", "2", "--i", "3", "--format", "g6"], "");
    assert!(fam.status.success());
    let m = d2graph(&["metrics"], &stdout(&fam));
    assert_eq!(
        stdout(&m),
        "n,edge_count,diam,bipartite,join,d2_connected,d2_diam\n18,21,11,false,false,true,6\n"
    );
}

#[test]
fn d2_of_c5_is_a_five_cycle() {
    let fam = d2graph(&["family", "--name", "cycle", "--size", "5"], "");
    let out = d2graph(&["d2"], &stdout(&fam));
    let g = graph6::parse(stdout(&out).trim()).unwrap();
    assert_eq!(g.order(), 5);
    assert!((0..5).all(|v| g.degree(v) == 2) && g.is_connected());
}

#[test]
fn d2_stream_composes_like_memory() {
    let graphs: Vec<_> = (0..100).map(|s| random_connected(9, 0.35, s).unwrap()).collect();
    let input: String = graphs.iter().map(|g| graph6::encode(g).unwrap() + "\n").collect();
    let once = d2graph(&["d2"], &input);
    let twice = d2graph(&["d2"], &stdout(&once));
    let expected: String = graphs
        .iter()
        .map(|g| graph6::encode(&distance_power_graph(&distance_power_graph(g, 2), 2)).unwrap() + "\n")
        .collect();
    assert_eq!(stdout(&twice), expected);
}

#[test]
fn dk_flag() {
    let out = d2graph(&["d2", "--k", "3"], "Ch\n");
    // P4 0-1-2-3: only 0 and 3 are at distance 3
    assert_eq!(graph6::parse(stdout(&out).trim()).unwrap().edges().collect::<Vec<_>>(), vec![(0, 3)]);
    assert_eq!(d2graph(&["d2", "--k", "0"], "").status.code(), Some(2));
}

#[test]
fn input_errors_carry_line_numbers() {
    let out = d2graph(&["metrics"], "A_\n\nD Qc\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let long = d2graph(&["d2"], "~?@?\n");
    assert_eq!(long.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["family", "--name", "nope"],
        vec!["family", "--name", "gadget-chain", "--t", "0", "--i", "1"],
        vec!["scan", "--campaign", "conjecture31", "--max-n", "10"],
        vec!["scan", "--campaign", "bogus", "--max-n", "4"],
        vec!["verify"],
        vec!["enumerate", "--n", "12"],
    ] {
        let out = d2graph(&args, "");
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn family_formats() {
    let edges = d2graph(&["family", "--name", "house", "--format", "edges"], "");
    assert_eq!(stdout(&edges), "5\n0 1\n0 2\n0 4\n1 2\n2 3\n3 4\n");
    let dot = d2graph(&["family", "--name", "gadget-chain", "--t", "1", "--i", "3", "--format", "dot"], "");
    let dot = stdout(&dot);
    for name in ["u", "b0", "a11", "a16", "b1", "v", "w"] {
        assert!(dot.contains(&format!("  \"{name}\";\n")), "{name}");
    }
    assert_eq!(dot.matches(" -- ").count(), 12);
    let kmn = d2graph(&["family", "--name", "COMPLETE_BIPARTITE", "--m", "2", "--n", "3"], "");
    assert_eq!(graph6::parse(stdout(&kmn).trim()).unwrap().edge_count(), 6);
}

#[test]
fn enumerate_and_scan_input_stream() {
    let list = d2graph(&["enumerate", "--n", "5"], "");
    assert_eq!(stdout(&list).lines().count(), 21);
    let via_stream = d2graph(&["scan", "--campaign", "theorem-sweep", "--input", "-"], &stdout(&list));
    assert_eq!(via_stream.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&via_stream.stdout).unwrap();
    assert_eq!(v["report"]["graphs_examined"], 21);
    assert_eq!(v["report"]["campaign"], "theorem-sweep");
}

#[test]
fn census_csv_and_filter() {
    let out = d2graph(&["census", "--max-n", "6", "--diam", "3", "--format", "csv"], "");
    let text = stdout(&out);
    assert!(text.starts_with("diam,d2_diam,count,witness\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("3,")));
    assert!(text.contains("3,5,2,"));
}

#[test]
fn random_is_reproducible() {
    let a = d2graph(&["random", "--n", "12", "--p", "0.3", "--seed", "5", "--count", "3"], "");
    let b = d2graph(&["random", "--n", "12", "--p", "0.3", "--seed", "5", "--count", "3"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);
    let give_up = d2graph(&["random", "--n", "50", "--p", "0.0001"], "");
    assert_eq!(give_up.status.code(), Some(2));
}

#[test]
fn metrics_on_empty_input_prints_header() {
    let out = d2graph(&["metrics"], "");
    assert_eq!(stdout(&out), "n,edge_count,diam,bipartite,join,d2_connected,d2_diam\n");
}
