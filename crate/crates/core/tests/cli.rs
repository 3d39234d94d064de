mod common;

use common::*;
use minkbeam::cli::{ProblemFile, SolutionFile};
use minkbeam::{rel_close, BeamProblem, PhaseSet};
use proptest::prelude::*;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn minkbeam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minkbeam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn write_problem(dir: &TempDir, name: &str, problem: &BeamProblem) -> PathBuf {
    write(dir, name, &ProblemFile::from_problem(problem).to_json())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn solution(out: &Output) -> SolutionFile {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    SolutionFile::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn solve_bpsk_unit_channel() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"channels": [[1, 0]], "phase_sets": {"psk": {"M": 2}}}"#);
    let sol = solution(&minkbeam(&["solve", s(&f)]));
    assert_eq!(sol.gain, 1.0);
    assert_eq!(sol.method, "general");
    assert_eq!(sol.weight_indices.len(), 1);
}

#[test]
fn solve_quad_tri_reports_seven_vertices() {
    let dir = TempDir::new().unwrap();
    let f = write_problem(&dir, "quad_tri.json", &quad_tri_problem());
    let out_path = dir.path().join("sol.json");
    let out = minkbeam(&["solve", s(&f), "-o", s(&out_path)]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let sol = SolutionFile::from_json(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(sol.vertex_count, 7);
    assert_eq!(sol.weight_indices, vec![0, 0]);
}

#[test]
fn solve_without_timing_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let gen = minkbeam(&["gen", "--n", "12", "--m", "4", "--seed", "3"]);
    let f = write(&dir, "p.json", std::str::from_utf8(&gen.stdout).unwrap());
    let a = minkbeam(&["solve", s(&f), "--no-timing"]);
    let b = minkbeam(&["solve", s(&f), "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(solution(&a).elapsed_ms, 0.0);
}

#[test]
fn solve_psk_fast_agrees_and_rejects_non_psk() {
    let dir = TempDir::new().unwrap();
    let gen = minkbeam(&["gen", "--n", "20", "--m", "8", "--seed", "9"]);
    let f = write(&dir, "p.json", std::str::from_utf8(&gen.stdout).unwrap());
    let fast = solution(&minkbeam(&["solve", s(&f), "--psk-fast"]));
    let general = solution(&minkbeam(&["solve", s(&f)]));
    assert_eq!(fast.method, "psk_fast_path");
    assert!(rel_close(fast.gain, general.gain, 1e-9));

    let g = write_problem(&dir, "quad_tri.json", &quad_tri_problem());
    let out = minkbeam(&["solve", s(&g), "--psk-fast"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not uniform PSK"));

    let r = minkbeam(&["solve", s(&f), "--psk-fast", "--ris"]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn solve_ris_flag_can_switch_off() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "p.json",
        r#"{"h0": [10, 0], "channels": [[-0.5, 0], [-0.5, 0]], "phase_sets": {"psk": {"M": 1}}}"#,
    );
    let on = solution(&minkbeam(&["solve", s(&f)]));
    assert!(rel_close(on.gain, 9.0, 1e-12));
    let ris = solution(&minkbeam(&["solve", s(&f), "--ris"]));
    assert_eq!(ris.weight_indices, vec![-1, -1]);
    assert!(rel_close(ris.gain, 10.0, 1e-12));
}

#[test]
fn malformed_input_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", "{\"channels\": [[1, 0]],");
    let out = minkbeam(&["solve", s(&f)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let mismatch = write(&dir, "m.json", r#"{"channels": [[1, 0], [0, 1]], "phase_sets": [{"elements": [[1, 0]]}]}"#);
    assert_eq!(minkbeam(&["solve", s(&mismatch)]).status.code(), Some(1));
    let missing = dir.path().join("nope.json");
    assert_eq!(minkbeam(&["solve", s(&missing)]).status.code(), Some(1));
    assert_eq!(minkbeam(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn verify_passes_and_honours_cap() {
    let dir = TempDir::new().unwrap();
    let gen = minkbeam(&["gen", "--n", "5", "--m", "4", "--seed", "1", "--ris"]);
    let f = write(&dir, "p.json", std::str::from_utf8(&gen.stdout).unwrap());
    let out = minkbeam(&["verify", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().last(), Some("PASS"));
    assert_eq!(text.lines().count(), 4);

    let capped = minkbeam(&["verify", s(&f), "--cap", "10"]);
    assert_eq!(capped.status.code(), Some(3));

    let zero = write(&dir, "z.json", r#"{"channels": [[1, 0], [0, 0]], "phase_sets": {"psk": {"M": 4}}}"#);
    assert_eq!(minkbeam(&["verify", s(&zero)]).status.code(), Some(0));
}

#[test]
fn gen_is_deterministic() {
    let a = minkbeam(&["gen", "--n", "7", "--m", "3", "--seed", "42"]);
    let b = minkbeam(&["gen", "--n", "7", "--m", "3", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = minkbeam(&["gen", "--n", "7", "--m", "3", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);

    let file = ProblemFile::from_json(std::str::from_utf8(&a.stdout).unwrap()).unwrap();
    let p = file.to_problem().unwrap();
    assert_eq!(p.antenna_count(), 7);
    assert_eq!(p.phase_sets, vec![PhaseSet::psk(3); 7]);
    assert!(!p.ris_mode);
}

#[test]
fn gen_unit_model_and_ris_flag() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("u.json");
    let out = minkbeam(&["gen", "--n", "30", "--m", "2", "--model", "unit", "--ris", "-o", s(&path)]);
    assert!(out.status.success());
    let p = ProblemFile::from_json(&std::fs::read_to_string(path).unwrap())
        .unwrap()
        .to_problem()
        .unwrap();
    assert!(p.ris_mode);
    for h in &p.channels {
        assert!((h.norm() - 1.0).abs() < 1e-12);
    }
    assert_eq!(minkbeam(&["gen", "--n", "0", "--m", "2"]).status.code(), Some(1));
}

#[test]
fn bench_csv_skips_brute_force_when_too_large() {
    let out = minkbeam(&["bench", "--n-list", "2,5,20", "--m", "4", "--repeats", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "N,K,mean_solve_ms,mean_brute_ms,vertex_count");
    assert_eq!(lines.len(), 4);
    for (line, n) in lines[1..].iter().zip([2usize, 5, 20]) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 5);
        assert_eq!(cols[0].parse::<usize>().unwrap(), n);
        assert_eq!(cols[1].parse::<usize>().unwrap(), 4 * n);
        assert!(cols[2].parse::<f64>().unwrap() >= 0.0);
        assert!(cols[4].parse::<usize>().unwrap() <= 4 * n);
    }
    assert_ne!(lines[2].split(',').nth(3), Some("NA"));
    assert_eq!(lines[3].split(',').nth(3), Some("NA"));
}

#[test]
fn bench_writes_csv_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("b.csv");
    let out = minkbeam(&["bench", "--n-list", "3", "--repeats", "1", "--csv", s(&path)]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(path).unwrap().starts_with("N,K,"));
}

fn labels(svg: &str) -> (usize, usize, Vec<String>) {
    let doc = roxmltree::Document::parse(svg).expect("well-formed svg");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let class = |n: &roxmltree::Node, c: &str| n.attribute("class").is_some_and(|a| a.split(' ').any(|x| x == c));
    let texts: Vec<String> = root
        .descendants()
        .filter(|n| n.tag_name().name() == "text" && class(n, "vertex-label"))
        .map(|n| n.text().unwrap_or("").to_string())
        .collect();
    let circles = root
        .descendants()
        .filter(|n| n.tag_name().name() == "circle" && class(n, "thales"))
        .count();
    let sums = root.descendants().filter(|n| class(n, "minkowski-sum")).count();
    (sums, circles, texts)
}

#[test]
fn plot_quad_tri() {
    let dir = TempDir::new().unwrap();
    let f = write_problem(&dir, "quad_tri.json", &quad_tri_problem());
    let svg_path = dir.path().join("quad_tri.svg");
    let out = minkbeam(&["plot", s(&f), "-o", s(&svg_path), "--show-circles"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let (sums, circles, texts) = labels(&std::fs::read_to_string(&svg_path).unwrap());
    assert_eq!(sums, 1);
    assert_eq!(circles, 7);
    let expected: Vec<String> = QUAD_TRI_TUPLES.iter().map(|[a, b]| format!("({a},{b})")).collect();
    assert_eq!(texts, expected);

    let plain = dir.path().join("plain.svg");
    assert!(minkbeam(&["plot", s(&f), "-o", s(&plain)]).status.success());
    assert_eq!(labels(&std::fs::read_to_string(&plain).unwrap()).1, 0);
}

#[test]
fn plot_label_count_matches_vertex_count() {
    let dir = TempDir::new().unwrap();
    let gen = minkbeam(&["gen", "--n", "4", "--m", "3", "--seed", "5", "--ris"]);
    let f = write(&dir, "p.json", std::str::from_utf8(&gen.stdout).unwrap());
    let sol = solution(&minkbeam(&["solve", s(&f)]));
    let svg_path = dir.path().join("p.svg");
    assert!(minkbeam(&["plot", s(&f), "-o", s(&svg_path)]).status.success());
    let (_, _, texts) = labels(&std::fs::read_to_string(&svg_path).unwrap());
    assert_eq!(texts.len(), sol.vertex_count);
}

#[test]
fn plot_handles_point_summands() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "p.json",
        r#"{"h0": [0.5, 0.5], "channels": [[1, 0], [0, 0]], "phase_sets": {"psk": {"M": 3}}}"#,
    );
    let svg_path = dir.path().join("p.svg");
    assert!(minkbeam(&["plot", s(&f), "-o", s(&svg_path), "--show-circles"]).status.success());
    let (sums, circles, texts) = labels(&std::fs::read_to_string(&svg_path).unwrap());
    assert_eq!(sums, 1);
    assert_eq!(circles, 3);
    assert_eq!(texts.len(), 3);
    // antennas first, then the direct path
    assert!(texts.iter().all(|t| t.ends_with(",0,0)")));
}

#[test]
fn plot_refuses_large_instances() {
    let dir = TempDir::new().unwrap();
    let gen = minkbeam(&["gen", "--n", "7", "--m", "2"]);
    let f = write(&dir, "p.json", std::str::from_utf8(&gen.stdout).unwrap());
    let out = minkbeam(&["plot", s(&f), "-o", s(&dir.path().join("x.svg"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_writes_to_the_given_sink() {
    let mut buf = Vec::new();
    let code = minkbeam::cli::run(["minkbeam", "gen", "--n", "2", "--m", "2"], &mut buf);
    assert_eq!(code, 0);
    assert!(ProblemFile::from_json(std::str::from_utf8(&buf).unwrap()).is_ok());
}

fn pair() -> impl Strategy<Value = [f64; 2]> {
    [-1e6..1e6f64, -1e6..1e6f64]
}

proptest! {
    #[test]
    fn problem_file_round_trips(
        h0 in prop::option::of(pair()),
        sets in prop::collection::vec(prop::collection::vec(pair(), 1..5), 1..5),
        ris in prop::option::of(any::<bool>()),
    ) {
        let file = ProblemFile {
            h0,
            channels: vec![[1.0, -2.0]; sets.len()],
            phase_sets: minkbeam::cli::PhaseSetsSpec::Explicit(
                sets.into_iter()
                    .map(|elements| minkbeam::cli::PhaseSetEntry { label: None, elements })
                    .collect(),
            ),
            ris_mode: ris,
        };
        let back = ProblemFile::from_json(&file.to_json()).unwrap();
        prop_assert_eq!(&back, &file);
        let problem = file.to_problem().unwrap();
        prop_assert_eq!(ProblemFile::from_problem(&problem).to_problem().unwrap(), problem);
    }

    #[test]
    fn solution_file_round_trips(
        gain in 0.0..1e6f64,
        z in pair(),
        idx in prop::collection::vec(-1i64..8, 1..6),
        vc in 0usize..1000,
        ms in 0.0..1e4f64,
    ) {
        let file = SolutionFile {
            gain,
            z_star: z,
            weights: vec![[0.5, 0.25]; idx.len()],
            weight_indices: idx,
            vertex_count: vc,
            method: "general".into(),
            elapsed_ms: ms,
        };
        let back = SolutionFile::from_json(&file.to_json()).unwrap();
        prop_assert_eq!(&back, &file);
        let sol = back.to_solution().unwrap();
        prop_assert_eq!(SolutionFile::new(&sol, ms), file);
    }
}
