use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use convex_lines::io::parse_family_file;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convex-lines"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn generate_then_verify_thm12() {
    let dir = tempfile::tempdir().unwrap();
    let fam = path(dir.path(), "fam.txt");
    let o = run(&["generate", "--kind", "thm12", "--l", "3", "--n", "6", "-o", &fam]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let file = parse_family_file(&fs::read_to_string(&fam).unwrap()).unwrap();
    assert!(file.family.len() >= 8);
    assert_eq!(file.get("kind"), Some("thm12_even"));
    let o = run(&["verify", &fam, "--l", "3", "--no-convex", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("convex_6: none"));
    assert!(stdout(&o).ends_with("result: pass\n"));
}

#[test]
fn verify_exits_one_on_pencil() {
    let dir = tempfile::tempdir().unwrap();
    let fam = path(dir.path(), "pencil.txt");
    let o = run(&["generate", "--kind", "pencil", "--count", "4", "-o", &fam]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", &fam, "--max-concurrency", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("max_concurrency: 4"));
    let o = run(&["verify", &fam, "--max-concurrency", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.txt");
    fs::write(&bad, "1 0\n1 5\n").unwrap();
    let o = run(&["verify", &bad, "--l", "3"]);
    assert_eq!(o.status.code(), Some(2));
    fs::write(&bad, "1 0\nfoo bar\n").unwrap();
    let o = run(&["verify", &bad, "--l", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--kind", "nope", "--l", "3"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--kind", "thm12", "--l", "2", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--l", "3", "--n", "6", "--c", "1/2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &path(dir.path(), "missing.txt")]).status.code(), Some(2));
}

#[test]
fn bounds_output() {
    let o = run(&["bounds", "--l", "3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("lower: 8\n"));
    assert!(s.contains("upper: 560\n"));
    let o = run(&["bounds", "--l", "5", "--n", "4", "--c", "3/2"]);
    let s = stdout(&o);
    assert!(s.contains("exact: 6\n"));
    assert!(s.contains("upper: 72\n"));
    let o = run(&["bounds", "--l", "3", "--p", "3", "--q", "3"]);
    assert!(stdout(&o).contains("f_l: 10\n"));
}

#[test]
fn search_reports_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let tri = path(dir.path(), "tri.txt");
    fs::write(&tri, "1 0\n-1 0\n0 1\n").unwrap();
    let o = run(&["search", &tri, "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "convex_3: lines 0,1,2\n");
    let o = run(&["search", &tri, "--prune", "hereditary"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "largest_convex: 3 lines 0,1,2\n");
    let fam = path(dir.path(), "f10.txt");
    run(&["generate", "--kind", "figure10", "--l", "4", "-o", &fam]);
    let o = run(&["search", &fam, "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.txt"), path(dir.path(), "b.txt"));
    for out in [&a, &b] {
        let o = run(&["generate", "--kind", "recursive_pq", "--p", "3", "--q", "3", "--l", "4", "-o", out]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let (sa, sb) = (path(dir.path(), "a.svg"), path(dir.path(), "b.svg"));
    for out in [&sa, &sb] {
        let o = run(&["render", &a, "-o", out, "--highlight-lines", "0,1,2"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(fs::read(&sa).unwrap(), fs::read(&sb).unwrap());
}

#[test]
fn render_figure10_and_viewports() {
    let dir = tempfile::tempdir().unwrap();
    let fam = path(dir.path(), "f10.txt");
    run(&["generate", "--kind", "figure10", "--l", "4", "-o", &fam]);
    let o = run(&["render", &fam]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert_eq!(svg.matches("<path").count(), 8);
    // the two pencil apexes
    assert_eq!(svg.matches("<circle").count(), 2);
    let o = run(&["render", &fam, "--viewport", "100,100,101,101"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["render", &fam, "--viewport", "-2,-1,2,3", "--highlight-signs", "++++++++"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("<polygon"));
    let o = run(&["render", &fam, "--epsilon-scale", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn epsilon_scale_changes_coordinates_not_structure() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.txt"), path(dir.path(), "b.txt"));
    run(&["generate", "--kind", "recursive_pq", "--p", "3", "--q", "3", "--l", "3", "-o", &a]);
    run(&["generate", "--kind", "recursive_pq", "--p", "3", "--q", "3", "--l", "3", "--epsilon-scale", "1/4", "-o", &b]);
    let fa = parse_family_file(&fs::read_to_string(&a).unwrap()).unwrap().family;
    let fb = parse_family_file(&fs::read_to_string(&b).unwrap()).unwrap().family;
    assert_ne!(fa, fb);
    assert_eq!(fa.len(), fb.len());
    let o = run(&["verify", &b, "--l", "3", "--p", "3", "--q", "3", "--check-unbounded", "right"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["generate", "--kind", "figure10", "--l", "3", "--epsilon-scale", "0"]).status.code(), Some(2));
}
