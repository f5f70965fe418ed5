use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use clutterlab::domination::is_maximal_independent;
use clutterlab::{connected_graph_clutter, is_edgewise_dominant, Clutter, Graph};
use clutterlab_cli::commands::ANALYZE_COLUMNS;
use clutterlab_cli::input::{parse, ClutterFile, GraphFile, Parsed};

const PENTAGON: &str =
    r#"{"vertices":["1","2","3","4","5"],"edges":[["1","2"],["2","3"],["3","4"],["4","5"],["5","1"]]}"#;

fn clutterlab(args: &[&str]) -> Output {
    clutterlab_with(args, None, &[])
}

fn clutterlab_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_clutterlab"));
    cmd.args(args).env_remove("CLUTTERLAB_MAX_N");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().expect("stdin is piped");
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn clutter_of(v: &Value) -> Clutter {
    serde_json::from_value::<ClutterFile>(v.clone()).unwrap().build().unwrap()
}

fn name_set(c: &Clutter, v: &Value) -> clutterlab::VertexSet {
    let names: Vec<String> = serde_json::from_value(v.clone()).unwrap();
    c.set_by_names(&names).unwrap()
}

#[test]
fn analyze_pentagon_reports_and_witnesses_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "pentagon.json", PENTAGON);
    let v = stdout_json(&clutterlab(&["analyze", &input]));
    assert_eq!(v["schema"], 1);
    let r = &v["report"];
    assert_eq!((r["pd"].as_u64(), r["epsilon"].as_u64(), r["faltings_bound"].as_u64()), (Some(3), Some(2), Some(4)));
    assert_eq!(r["tight_edgewise"], true);

    let c = clutter_of(&v["clutter"]);
    let family: Vec<_> =
        v["witnesses"]["edgewise_dominant_family"].as_array().unwrap().iter().map(|e| name_set(&c, e)).collect();
    assert_eq!(family.len(), 2);
    assert!(is_edgewise_dominant(&c, &family).unwrap());
    let mis = name_set(&c, &v["witnesses"]["maximal_independent_set"]);
    assert!(is_maximal_independent(&c, mis) && mis.len() == 2);
    let cover = v["witnesses"]["edge_cover"].as_array().unwrap();
    let covered = cover.iter().fold(clutterlab::VertexSet::EMPTY, |acc, e| acc.union(name_set(&c, e)));
    assert_eq!((cover.len(), covered), (3, c.ground()));
}

#[test]
fn analyze_betti_table_matches_graded_counts() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "pentagon.txt", "1 2 3 4 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    let v = stdout_json(&clutterlab(&["analyze", &input, "--betti", "--field", "q"]));
    let mut graded = std::collections::BTreeMap::new();
    for b in v["betti"].as_array().unwrap() {
        let key = (b["i"].as_u64().unwrap(), b["degree"].as_u64().unwrap());
        *graded.entry(key).or_insert(0) += b["value"].as_u64().unwrap();
    }
    // Resolution of the pentagon edge ideal: 5 quadrics, 5 cubic syzygies, one top class.
    let expected: std::collections::BTreeMap<_, _> = [((1, 2), 5), ((2, 3), 5), ((3, 5), 1)].into_iter().collect();
    assert_eq!(graded, expected);

    let tsv = clutterlab(&["analyze", &input, "--betti", "--format", "tsv"]);
    let text = String::from_utf8(tsv.stdout).unwrap();
    let mut blocks = text.split("\n\n");
    let summary: Vec<&str> = blocks.next().unwrap().lines().collect();
    assert_eq!(summary[0].split('\t').collect::<Vec<_>>(), ANALYZE_COLUMNS);
    assert_eq!(summary[1].split('\t').count(), ANALYZE_COLUMNS.len());
    assert_eq!(blocks.next().unwrap().lines().count(), 1 + 11);
}

#[test]
fn analyze_graph_input_builds_connected_clutter() {
    let dir = tempfile::tempdir().unwrap();
    let input =
        write(dir.path(), "p4.json", r#"{"vertices":["a","b","c","d"],"adjacency":[["a","b"],["b","c"],["c","d"]]}"#);
    let v = stdout_json(&clutterlab(&["analyze", &input, "--k", "3"]));
    let c = clutter_of(&v["clutter"]);
    assert_eq!(c.edge_count(), 2);
    assert_eq!(c.uniformity(), Some(3));
}

#[test]
fn family_row_matches_closed_forms() {
    let out = clutterlab(&["family", "--kind", "cycle", "--n", "5", "--k", "2", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(&row[..4], ["cycle", "5", "2", "gf2"]);
    assert_eq!(row.iter().filter(|&&c| c == "match").count(), 3);

    let v = stdout_json(&clutterlab(&["family", "--kind", "path", "--n", "9", "--k", "3", "--field", "q"]));
    assert_eq!(v["all_match"], true);
    assert_eq!(v["columns"][2]["computed"], 4);
}

#[test]
fn scan_counts_every_clutter() {
    // 1, 2, 5, 19, 167: antichains of nonempty subsets.
    for (n, count) in [(0, 1), (1, 2), (2, 5), (3, 19), (4, 167)] {
        let v = stdout_json(&clutterlab(&["scan", "--n", &n.to_string(), "--field", "gf:3"]));
        assert_eq!(v["clutters"], count, "n = {n}");
        assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn fuzz_is_deterministic_per_seed() {
    let args = ["fuzz", "--n", "6", "--trials", "60", "--seed", "42"];
    let a = clutterlab(&args);
    let b = clutterlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!((v["trials"].as_u64(), v["seed"].as_u64()), (Some(60), Some(42)));
    let c = clutterlab(&["fuzz", "--n", "6", "--trials", "60", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn realizable_witness_reverifies() {
    let none = stdout_json(&clutterlab_with(&["realizable", "-"], Some("a b c d e\na b c\nc d e\n"), &[]));
    assert_eq!(none["realizable"], false);
    assert!(none["graph"].is_null());

    let p4 = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
    let target = connected_graph_clutter(&p4, 3).unwrap();
    let text = serde_json::to_string(&ClutterFile::from_clutter(&target)).unwrap();
    let v = stdout_json(&clutterlab_with(&["realizable", "-"], Some(&text), &[]));
    assert_eq!(v["realizable"], true);
    let g = serde_json::from_value::<GraphFile>(v["graph"].clone()).unwrap().build().unwrap();
    assert_eq!(connected_graph_clutter(&g, 3).unwrap().edges(), target.edges());
}

#[test]
fn dual_tsv_reparses_and_is_an_involution() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "pentagon.json", PENTAGON);
    let first = clutterlab(&["dual", &input, "--format", "tsv"]);
    assert_eq!(first.status.code(), Some(0));
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    let Parsed::Clutter(d) = parse(&text).unwrap() else { panic!("dual is a clutter") };
    assert_eq!(d.edge_count(), 5);
    assert!(d.edges().iter().all(|e| e.len() == 3));

    let second = clutterlab_with(&["dual", "-"], Some(&text), &[]);
    let back = clutter_of(&stdout_json(&second)["clutter"]);
    let Parsed::Clutter(original) = parse(PENTAGON).unwrap() else { unreachable!() };
    assert_eq!(back, original);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "pentagon.json", PENTAGON);
    let path = dir.path().join("nested-report.json");
    let to_file = clutterlab(&["analyze", &input, "--out", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let to_stdout = clutterlab(&["analyze", &input]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
    // Only the input and the report remain; the temporary file was renamed.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let pentagon = write(dir.path(), "pentagon.json", PENTAGON);
    let code = |out: Output| out.status.code();

    // Input errors.
    assert_eq!(code(clutterlab(&["analyze", "/nonexistent/file.json"])), Some(2));
    assert_eq!(code(clutterlab_with(&["analyze", "-"], Some("a b\na c\n"), &[])), Some(2));
    assert_eq!(code(clutterlab_with(&["analyze", "-"], Some("a b\na\na b\n"), &[])), Some(2));
    assert_eq!(code(clutterlab_with(&["analyze", "-"], Some("{\"vertices\": ["), &[])), Some(2));
    assert_eq!(code(clutterlab(&["analyze", &pentagon, "--k", "3"])), Some(2));
    assert_eq!(code(clutterlab(&["analyze", &pentagon, "--field", "gf:4"])), Some(2));
    assert_eq!(code(clutterlab(&["family", "--kind", "cycle", "--n", "2", "--k", "2"])), Some(2));
    assert_eq!(code(clutterlab(&["family", "--kind", "tree", "--n", "4", "--k", "2"])), Some(2));
    assert_eq!(code(clutterlab_with(&["dual", "-"], Some("a b c\na b\n"), &[])), Some(2));
    assert_eq!(code(clutterlab_with(&["realizable", "-"], Some("a b c\na b\nc\n"), &[])), Some(2));

    // Resource guards, from the flag and from the environment.
    assert_eq!(code(clutterlab(&["analyze", &pentagon, "--max-n", "4"])), Some(3));
    assert_eq!(code(clutterlab_with(&["analyze", &pentagon], None, &[("CLUTTERLAB_MAX_N", "4")])), Some(3));
    assert_eq!(
        code(clutterlab_with(&["analyze", &pentagon, "--max-n", "5"], None, &[("CLUTTERLAB_MAX_N", "4")])),
        Some(0)
    );
    assert_eq!(code(clutterlab(&["scan", "--n", "6"])), Some(3));
    assert_eq!(code(clutterlab(&["fuzz", "--n", "13"])), Some(3));
    let big = (1..=8).map(|i| format!("v{i}")).collect::<Vec<_>>().join(" ") + "\nv1 v2\n";
    assert_eq!(code(clutterlab_with(&["realizable", "-"], Some(&big), &[])), Some(3));
}

#[test]
fn help_documents_tsv_columns() {
    let out = clutterlab(&["analyze", "--help"]);
    let help = String::from_utf8(out.stdout).unwrap();
    let flat = help.split_whitespace().collect::<Vec<_>>().join(" ");
    assert!(flat.contains(&ANALYZE_COLUMNS.join(" ")), "{help}");
}
