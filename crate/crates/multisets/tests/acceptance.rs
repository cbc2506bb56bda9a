//! Acceptance suite: one test per headline claim, each printing a pass line
//! and pinned to its runtime budget. Run with
//! `cargo test --test acceptance -- --nocapture` to see the per-claim lines.

use std::process::Command;
use std::time::{Duration, Instant};

use multisets::complexes::{lower_set, realize_biorthoscheme, verify_dual_graph};
use multisets::exact::Rat;
use multisets::interface::verify::{
    check_counting_claims, check_dual_graph, check_face_poset, check_linear_poset_law,
    check_preimage_counts, check_prism_cell, check_spine_worked_example, check_tetra_graph,
};
use multisets::interface::{files, random_multiset2d, RandomMode};
use multisets::linear::Multiset1D;
use multisets::rectangular::{Rect, RectComposition};
use multisets::symmetry::{cayley_graph, CayleySide};
use multisets::{permutahedron, tetra_graph};

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name} took {elapsed:?}, budget {budget:?}"
    );
    println!("acceptance {name}: PASS ({elapsed:?})");
}

fn assert_checks(name: &str, checks: &[multisets::interface::Check]) {
    for check in checks {
        assert!(
            check.pass,
            "{name}/{}: expected {}, actual {}",
            check.claim, check.expected, check.actual
        );
    }
}

#[test]
fn criterion_01_linear_poset_law() {
    let started = Instant::now();
    let checks = check_linear_poset_law();
    assert_checks("01", &checks);
    // Counts for n = 1..8 and exhaustive order agreement for n <= 6.
    assert!(checks
        .iter()
        .any(|c| c.claim == "linear-poset-law/count-n8"));
    assert!(checks
        .iter()
        .any(|c| c.claim == "linear-poset-law/order-agreement-n6"));
    finish("01 linear poset law", started, Duration::from_secs(5));
}

#[test]
fn criterion_02_spine_worked_example() {
    let started = Instant::now();
    assert_checks("02", &check_spine_worked_example());

    // The same example, checked against frozen values end to end.
    let r = |p: i64, q: i64| Rat::new(p, q).unwrap();
    let x = Multiset1D::new(
        (r(0, 1), r(1, 1)),
        vec![
            (r(0, 1), 3),
            (r(1, 4), 4),
            (r(1, 2), 1),
            (r(3, 4), 2),
            (r(1, 1), 1),
        ],
    )
    .unwrap();
    let comp = x.composition();
    assert_eq!(comp.entries(), &[3, 4, 1, 2, 1]);
    let spine = comp.spine();
    let vertices: Vec<&[u64]> = spine.vertices().iter().map(|v| v.entries()).collect();
    assert_eq!(vertices, vec![&[3u64, 8][..], &[7, 4], &[8, 3], &[10, 1]]);
    assert_eq!(spine.weights(), &[4, 1, 2]);
    finish("02 spine worked example", started, Duration::from_secs(5));
}

#[test]
fn criterion_03_face_poset_counts() {
    let started = Instant::now();
    let checks = check_face_poset(3).expect("within bound");
    assert_checks("03", &checks);
    assert!(checks.iter().any(|c| c.claim == "face-poset/f-vector-n1"));
    assert!(checks
        .iter()
        .any(|c| c.claim == "face-poset/f-vector-vs-enumeration-n3"));
    finish("03 face poset counts", started, Duration::from_secs(60));
}

#[test]
fn criterion_04_dual_graph_theorem() {
    let started = Instant::now();
    assert_checks("04", &check_dual_graph());
    for (n, expected) in [(2u64, 2usize), (3, 12), (4, 72)] {
        let report = verify_dual_graph(n).unwrap();
        assert!(report.equal, "n={n}: {:?}", report.detail);
        assert_eq!(report.dual_edges, expected);
    }
    finish("04 dual graph theorem", started, Duration::from_secs(30));
}

#[test]
fn criterion_05_counting_claims() {
    let started = Instant::now();
    let checks = check_counting_claims();
    assert_checks("05", &checks);
    // Frozen values: 6, 24, 120 maximal; 4, 10, 20, 35, 56 minimal.
    use multisets::rectangular::{maximal_elements, minimal_elements};
    assert_eq!(maximal_elements(3).len(), 6);
    assert_eq!(maximal_elements(4).len(), 24);
    assert_eq!(maximal_elements(5).len(), 120);
    let minimal: Vec<usize> = (1..=5).map(|n| minimal_elements(n).len()).collect();
    assert_eq!(minimal, vec![4, 10, 20, 35, 56]);
    finish("05 counting claims", started, Duration::from_secs(5));
}

#[test]
fn criterion_06_preimage_counts() {
    let started = Instant::now();
    assert_checks("06", &check_preimage_counts());
    finish("06 preimage counts", started, Duration::from_secs(30));
}

#[test]
fn criterion_07_prism_cell() {
    let started = Instant::now();
    assert_checks("07", &check_prism_cell());

    let prism =
        RectComposition::new(vec![vec![0, 3, 0, 0], vec![0, 2, 4, 0], vec![0, 0, 4, 3]]).unwrap();
    let spine = prism.spine();
    assert_eq!(
        (
            spine.vertex_count(),
            spine.edges().len(),
            spine.faces().len()
        ),
        (6, 7, 2)
    );
    let realization = realize_biorthoscheme(&prism, Rat::one(), Rat::one());
    realization.check(1e-9).unwrap();
    assert_eq!(lower_set(&prism).len(), 21);
    finish("07 prism cell", started, Duration::from_secs(5));
}

#[test]
fn criterion_08_permutahedron() {
    let started = Instant::now();
    let base: Vec<Rat> = [1, 2, 3].map(Rat::integer).to_vec();
    let hex = permutahedron(3, (Rat::zero(), Rat::integer(4)), &base).unwrap();
    for coord in hex.realization.coords() {
        assert!((coord.iter().sum::<f64>() - 6.0).abs() < 1e-9);
    }
    assert_eq!(hex.realization.edges().len(), 6);
    for edge in hex.realization.edges() {
        assert_eq!(edge.sq_length, Rat::integer(2));
        let actual = hex.realization.sq_distance(edge.a, edge.b);
        assert!((actual - 2.0).abs() < 1e-9);
    }
    assert_eq!(hex.skeleton, cayley_graph(3, CayleySide::Right));
    finish("08 permutahedron", started, Duration::from_secs(5));
}

#[test]
fn criterion_09_tetrahedral_graph() {
    let started = Instant::now();
    assert_checks("09", &check_tetra_graph());
    let t = tetra_graph(4);
    assert_eq!(t.graph().vertex_count(), 35);
    assert_eq!(t.boundary_edges().len(), 16);
    finish("09 tetrahedral graph", started, Duration::from_secs(5));
}

/// Runs the command-line tool twice per export and compares bytes.
#[test]
fn criterion_10_determinism() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_multisets");
    let dir = tempfile::tempdir().unwrap();

    let run = |args: &[&str], output: &std::path::Path| {
        let status = Command::new(bin)
            .args(args)
            .arg("--output")
            .arg(output)
            .status()
            .expect("binary runs");
        assert!(status.success(), "{args:?} failed");
        std::fs::read(output).expect("output written")
    };

    let multiset = dir.path().join("z.json");
    std::fs::write(
        &multiset,
        r#"{"rect": {"xl": "0/1", "xr": "5/1", "yb": "0/1", "yt": "5/1"},
            "points": [{"x": "1/1", "y": "2/1", "m": 1}, {"x": "2/1", "y": "3/1", "m": 1},
                       {"x": "3/1", "y": "1/1", "m": 1}, {"x": "4/1", "y": "4/1", "m": 1}]}"#,
    )
    .unwrap();
    let composition = dir.path().join("c.json");
    std::fs::write(
        &composition,
        r#"{"n": 16, "matrix": [[0, 3, 0, 0], [0, 2, 4, 0], [0, 0, 4, 3]]}"#,
    )
    .unwrap();
    let multiset = multiset.to_str().unwrap();
    let composition = composition.to_str().unwrap();

    let cases: Vec<Vec<&str>> = vec![
        vec!["verify"],
        vec!["comp", "--input", multiset],
        vec!["spine", "--input", composition],
        vec!["spine", "--input", composition, "--format", "dot"],
        vec!["graph", "--n", "3", "--which", "dual", "--format", "dot"],
        vec!["graph", "--n", "3", "--which", "lr", "--format", "json"],
        vec!["graph", "--n", "4", "--which", "tetra", "--format", "json"],
        vec!["graph", "--n", "3", "--which", "permutahedron"],
        vec!["enumerate", "--n", "4", "--kind", "minimal"],
        vec!["random", "--n", "5", "--seed", "11", "--mode", "grid"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let a = run(args, &dir.path().join(format!("a{i}")));
        let b = run(args, &dir.path().join(format!("b{i}")));
        assert_eq!(a, b, "{args:?} not byte-identical");
        assert!(!a.is_empty());
    }

    // Library-level: repeated sampling with one seed is identical.
    let z1 = random_multiset2d(6, 3, Rect::unit(), RandomMode::Generic).unwrap();
    let z2 = random_multiset2d(6, 3, Rect::unit(), RandomMode::Generic).unwrap();
    assert_eq!(
        files::render_json(&serde_json::to_value(files::Multiset2DFile::from(&z1)).unwrap()),
        files::render_json(&serde_json::to_value(files::Multiset2DFile::from(&z2)).unwrap())
    );
    finish("10 determinism", started, Duration::from_secs(60));
}
