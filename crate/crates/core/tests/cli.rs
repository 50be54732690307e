//! The binary's subcommands and exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

use udg_maxcut::gadget::h_model;
use udg_maxcut::geometry::Point;
use udg_maxcut::graph::named;
use udg_maxcut::io::model_to_json;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_udg-maxcut")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn reduce_solve_validate_render() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write(dir.path(), "k5.txt", &named::complete(5).to_text());
    let json = dir.path().join("k5.json");
    let svg = dir.path().join("k5.svg");
    let o = bin(&["reduce", "--in", &k5, "--out", json.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let summary = stdout(&o);
    let k: usize = summary.lines().find_map(|l| l.strip_prefix("k ")).unwrap().parse().unwrap();
    assert!(k >= 1);

    let j = json.to_str().unwrap();
    let o = bin(&["validate", "--in", j]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("precision2 1/2"));
    let o = bin(&["planarity", "--in", j]);
    assert!(stdout(&o).contains("not_planar_drawing"));

    let o = bin(&["solve", "--in", j, "--method", "dp"]);
    assert_eq!(code(&o), 0);
    let mc_u: usize = stdout(&o).lines().next().unwrap().strip_prefix("cut ").unwrap().parse().unwrap();
    let t: usize = summary.lines().find_map(|l| l.strip_prefix("t ")).unwrap().parse().unwrap();
    assert_eq!(mc_u - 8 * k - t, 6);

    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg"));
    let out = dir.path().join("again.svg");
    assert_eq!(code(&bin(&["render", "--in", j, "--out", out.to_str().unwrap()])), 0);
    assert_eq!(std::fs::read_to_string(out).unwrap(), picture);
}

#[test]
fn reduce_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write(dir.path(), "k5.txt", &named::complete(5).to_text());
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert_eq!(code(&bin(&["reduce", "--in", &k5, "--out", p.to_str().unwrap()])), 0);
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn solve_examples() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write(dir.path(), "k5.txt", &named::complete(5).to_text());
    assert!(stdout(&bin(&["solve", "--in", &k5, "--cut"])).starts_with("cut 6\n"));
    let c4 = write(dir.path(), "c4.txt", &named::cycle(4).to_text());
    assert!(stdout(&bin(&["solve", "--in", &c4, "--bisection"])).starts_with("bisection 4\n"));
    let p3 = write(dir.path(), "p3.txt", &named::path(3).to_text());
    let o = bin(&["solve", "--in", &p3, "--bisection"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("even"));
    let o = bin(&["solve", "--in", &k5, "--method", "dp", "--max-width", "2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn malformed_and_unsupported_input_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.txt", &named::star(5).to_text());
    assert_eq!(code(&bin(&["reduce", "--in", &star])), 2);
    let garbage = write(dir.path(), "bad.txt", "3 1\n0 zero\n");
    assert_eq!(code(&bin(&["reduce", "--in", &garbage])), 2);
    let bad_json = write(dir.path(), "bad.json", "{\"vertices\": [");
    assert_eq!(code(&bin(&["render", "--in", &bad_json])), 2);
    assert_eq!(code(&bin(&["validate", "--in", "/nonexistent/model.json"])), 2);
    assert_eq!(code(&bin(&["solve"])), 2);
}

#[test]
fn invalid_model_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let m = h_model(Point::origin());
    let mut text = model_to_json(&m);
    // drop one edge: its endpoints are still within distance 1
    text = text.replacen("[0,1],", "", 1);
    let p = write(dir.path(), "broken.json", &text);
    let o = bin(&["validate", "--in", &p]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("close non-edge 0-1"));
}

#[test]
fn render_counts_and_empty_canvas() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.json", &model_to_json(&h_model(Point::origin())));
    let svg = stdout(&bin(&["render", "--in", &h]));
    assert_eq!(svg.matches("<circle").count(), 8);
    assert_eq!(svg.matches("<line").count(), 14);
    let empty = write(dir.path(), "empty.json", r#"{"scale":20,"vertices":[],"edges":[]}"#);
    let o = bin(&["render", "--in", &empty]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("</svg>"));
}

#[test]
fn certify_pass_fail_and_vacuous() {
    let o = bin(&["certify", "--iterations", "10", "--seed", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("PASS").count(), 3);
    let o = bin(&["certify", "--iterations", "3", "--relax"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains(r#""expected":12,"got":10"#));
    let o = bin(&["certify", "--iterations", "0"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn draw_and_double() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", &named::complete(4).to_text());
    let o = bin(&["draw", "--in", &k4]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["routes"].as_array().unwrap().len(), 6);
    let h = write(dir.path(), "h.json", &model_to_json(&h_model(Point::origin())));
    let out = dir.path().join("hh.json");
    assert_eq!(code(&bin(&["double", "--in", &h, "--out", out.to_str().unwrap()])), 0);
    let o = bin(&["solve", "--in", out.to_str().unwrap(), "--bisection"]);
    assert!(stdout(&o).starts_with("bisection 20\n"));
}
