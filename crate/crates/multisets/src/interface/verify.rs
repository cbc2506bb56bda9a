//! The bundled verification suite.
//!
//! Each check recomputes a claim through an independent route — direct
//! formulas, brute-force enumeration over raw vectors and matrices, placement
//! bucketing, or frozen worked values — and compares against the library
//! construction it certifies. The `verify` subcommand runs these and exits
//! nonzero if any comparison fails.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::json;

use crate::complexes::{
    dual_graph, face_poset_rect, lower_set, permutahedron, realize_biorthoscheme, tetra_graph,
    verify_dual_graph, FACE_POSET_MAX_N,
};
use crate::exact::Rat;
use crate::graph::Color;
use crate::linear::{enumerate_linear, LinearComposition, Multiset1D};
use crate::rectangular::{
    count_preimages, enumerate_rect, maximal_elements, minimal_elements, visit_matrices,
    RectComposition,
};
use crate::symmetry::{cayley_graph, CayleySide};
use crate::{Error, Result};

/// One verified claim: an identifier, the expected and computed values as
/// text, and whether they agree.
#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn compare<T: PartialEq + std::fmt::Debug>(
        claim: impl Into<String>,
        expected: T,
        actual: T,
    ) -> Check {
        Check {
            claim: claim.into(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass: expected == actual,
        }
    }

    fn assert(claim: impl Into<String>, pass: bool) -> Check {
        Check {
            claim: claim.into(),
            expected: "true".to_string(),
            actual: pass.to_string(),
            pass,
        }
    }
}

/// A deterministic run record: the command, its inputs, headline results, and
/// every check performed.
#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: serde_json::Value,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut result = 1u64;
    for i in 0..k.min(n - k) {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Independent merge-reachability oracle over raw entry vectors: the full
/// downset of `top` under single merges, avoiding the library order entirely.
fn downset_by_merges(top: &[u64]) -> BTreeSet<Vec<u64>> {
    let mut seen = BTreeSet::from([top.to_vec()]);
    let mut frontier = vec![top.to_vec()];
    while let Some(v) = frontier.pop() {
        if v.len() <= 2 {
            continue;
        }
        for i in 1..v.len() {
            let mut merged = v.clone();
            merged[i - 1] += merged[i];
            merged.remove(i);
            if seen.insert(merged.clone()) {
                frontier.push(merged);
            }
        }
    }
    seen
}

/// Independent enumeration of linear compositions as raw vectors: a first
/// entry >= 0, then positive internal entries, closed by a final entry >= 0.
fn enumerate_vectors(n: u64) -> BTreeSet<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, remaining: u64, out: &mut BTreeSet<Vec<u64>>) {
        if !prefix.is_empty() {
            let mut done = prefix.clone();
            done.push(remaining);
            out.insert(done);
        }
        let start = u64::from(!prefix.is_empty());
        for e in start..=remaining {
            prefix.push(e);
            extend(prefix, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = BTreeSet::new();
    extend(&mut Vec::new(), n, &mut out);
    out
}

/// Linear poset law: counts match `2^{n+1} - 1` for n = 1..8 against an
/// independent vector enumeration, and the library order agrees with cut-set
/// inclusion and with merge reachability, exhaustively for n <= 6.
pub fn check_linear_poset_law() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=8u64 {
        let enumerated = enumerate_linear(n);
        let expected = (1u64 << (n + 1)) - 1;
        checks.push(Check::compare(
            format!("linear-poset-law/count-n{n}"),
            expected,
            enumerated.len() as u64,
        ));
        let raw = enumerate_vectors(n);
        let ours: BTreeSet<Vec<u64>> = enumerated.iter().map(|c| c.entries().to_vec()).collect();
        checks.push(Check::assert(
            format!("linear-poset-law/set-n{n}"),
            raw == ours,
        ));
    }
    for n in 1..=6u64 {
        let all = enumerate_linear(n);
        let downsets: Vec<BTreeSet<Vec<u64>>> =
            all.iter().map(|c| downset_by_merges(c.entries())).collect();
        let mut agree = true;
        for (bi, b) in all.iter().enumerate() {
            for a in &all {
                let lib = a.leq(b).expect("same n");
                // Cut-set inclusion recomputed from scratch.
                let cuts = |c: &LinearComposition| -> BTreeSet<u64> {
                    let mut acc = 0;
                    c.entries()[..c.len() - 1]
                        .iter()
                        .map(|&e| {
                            acc += e;
                            acc
                        })
                        .collect()
                };
                let by_cuts = cuts(a).is_subset(&cuts(b));
                let by_merges = downsets[bi].contains(a.entries());
                if lib != by_cuts || lib != by_merges {
                    agree = false;
                }
            }
        }
        checks.push(Check::assert(
            format!("linear-poset-law/order-agreement-n{n}"),
            agree,
        ));
    }
    checks
}

/// Spine worked example: the multiset with multiplicities 3, 4, 1, 2, 1 along
/// an interval yields composition [3 4 1 2 1], spine vertices [3 8], [7 4],
/// [8 3], [10 1], and squared lengths 4, 1, 2 exactly.
pub fn check_spine_worked_example() -> Vec<Check> {
    let r = |p: i64, q: i64| Rat::new(p, q).expect("nonzero denominator");
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
    .expect("valid multiset");
    let comp = x.composition();
    let spine = comp.spine();
    let vertices: Vec<Vec<u64>> = spine
        .vertices()
        .iter()
        .map(|v| v.entries().to_vec())
        .collect();
    vec![
        Check::compare(
            "spine-worked-example/composition",
            vec![3u64, 4, 1, 2, 1],
            comp.entries().to_vec(),
        ),
        Check::compare(
            "spine-worked-example/vertices",
            vec![vec![3u64, 8], vec![7, 4], vec![8, 3], vec![10, 1]],
            vertices,
        ),
        Check::compare(
            "spine-worked-example/sq-lengths",
            vec![4u64, 1, 2],
            spine.weights().to_vec(),
        ),
    ]
}

/// Face poset consistency: the hand count (4, 4, 1) at n = 1, Euler
/// characteristic 1, and per-dimension counts equal to the independent
/// per-shape enumeration, for n up to `max_n <= 4`.
pub fn check_face_poset(max_n: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let poset = face_poset_rect(n)?;
        if n == 1 {
            checks.push(Check::compare(
                "face-poset/f-vector-n1",
                vec![4usize, 4, 1],
                poset.f_vector(),
            ));
        }
        checks.push(Check::compare(
            format!("face-poset/euler-n{n}"),
            1i64,
            poset.euler_characteristic(),
        ));
        let independent = enumerate_rect(n)?;
        let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
        for m in &independent {
            *by_dim.entry(m.dimension()).or_default() += 1;
        }
        let brute: Vec<usize> = (0..=2 * n as usize)
            .map(|d| by_dim.get(&d).copied().unwrap_or(0))
            .collect();
        checks.push(Check::compare(
            format!("face-poset/f-vector-vs-enumeration-n{n}"),
            brute,
            poset.f_vector(),
        ));
        let graded = poset
            .covers()
            .iter()
            .all(|&(lo, hi)| poset.dims()[lo] + 1 == poset.dims()[hi]);
        checks.push(Check::assert(format!("face-poset/graded-n{n}"), graded));
    }
    Ok(checks)
}

/// Dual graph theorem at desk scale: exact labeled-multigraph equality with
/// the overlaid Cayley graphs for n = 2, 3, 4, with edge totals n!(n-1).
pub fn check_dual_graph() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=4u64 {
        let report = verify_dual_graph(n).expect("within bound");
        checks.push(Check::assert(
            format!("dual-graph/equal-n{n}"),
            report.equal,
        ));
        let expected = factorial(n) * (n - 1);
        checks.push(Check::compare(
            format!("dual-graph/edges-n{n}"),
            expected as usize,
            report.dual_edges,
        ));
    }
    checks
}

/// Counting claims: n! maximal and C(n+3, 3) minimal elements for n = 1..5.
pub fn check_counting_claims() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=5u64 {
        checks.push(Check::compare(
            format!("counting/maximal-n{n}"),
            factorial(n) as usize,
            maximal_elements(n).len(),
        ));
        checks.push(Check::compare(
            format!("counting/minimal-n{n}"),
            binomial(n + 3, 3) as usize,
            minimal_elements(n).len(),
        ));
    }
    checks
}

/// Preimage counts: the generic fiber has n! points for n <= 5, and for
/// n <= 4 every margin pair agrees with an independent placement bucketing
/// that enumerates all matrices of each shape once.
pub fn check_preimage_counts() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=5u64 {
        let mut entries = vec![0i64];
        entries.extend(std::iter::repeat_n(1, n as usize));
        entries.push(0);
        let generic = LinearComposition::new(entries).expect("valid");
        checks.push(Check::compare(
            format!("preimages/generic-n{n}"),
            factorial(n),
            count_preimages(&generic, &generic).expect("same n"),
        ));
    }
    for n in 1..=4u64 {
        let comps = enumerate_linear(n);
        // Bucket every matrix of every occurring shape by its margins, once;
        // the count for each (xc, yc) must match the margin-pruned recursion.
        let shapes: BTreeSet<(usize, usize)> = comps
            .iter()
            .flat_map(|xc| comps.iter().map(move |yc| (xc.len(), yc.len())))
            .collect();
        let mut buckets: BTreeMap<(Vec<u64>, Vec<u64>), u64> = BTreeMap::new();
        for &(rows, cols) in &shapes {
            visit_matrices(rows, cols, n, &mut |matrix| {
                let row_sums: Vec<u64> = matrix.iter().map(|r| r.iter().sum()).collect();
                let col_sums: Vec<u64> = (0..cols)
                    .map(|j| matrix.iter().map(|r| r[j]).sum())
                    .collect();
                *buckets.entry((row_sums, col_sums)).or_default() += 1;
            });
        }
        let mut agree = true;
        let mut pairs = 0usize;
        for xc in &comps {
            for yc in &comps {
                let key = (xc.entries().to_vec(), yc.entries().to_vec());
                let placed = buckets.get(&key).copied().unwrap_or(0);
                if placed != count_preimages(xc, yc).expect("same n") {
                    agree = false;
                }
                pairs += 1;
            }
        }
        checks.push(Check::assert(
            format!("preimages/placement-cross-check-n{n}-pairs{pairs}"),
            agree,
        ));
    }
    checks
}

/// The prism cell with projections [3 6 7] and [0 5 8 3]: spine counts
/// 6 / 7 / 2, a sqrt(5)-sqrt(8) right triangle times a sqrt(6) segment, and a
/// 21-element lower set graded (6, 9, 5, 1).
pub fn check_prism_cell() -> Vec<Check> {
    let prism = RectComposition::new(vec![vec![0, 3, 0, 0], vec![0, 2, 4, 0], vec![0, 0, 4, 3]])
        .expect("valid prism composition");
    let mut checks = vec![Check::compare(
        "prism/projections",
        (vec![3u64, 6, 7], vec![0u64, 5, 8, 3]),
        (
            prism.pi_re().entries().to_vec(),
            prism.pi_im().entries().to_vec(),
        ),
    )];
    let spine = prism.spine();
    checks.push(Check::compare(
        "prism/spine-counts",
        (6usize, 7usize, 2usize),
        (
            spine.vertex_count(),
            spine.edges().len(),
            spine.faces().len(),
        ),
    ));
    let realization = realize_biorthoscheme(&prism, Rat::one(), Rat::one());
    checks.push(Check::assert(
        "prism/realization-distances-1e-9",
        realization.check(1e-9).is_ok(),
    ));
    let mut sq: Vec<i64> = realization
        .edges()
        .iter()
        .map(|e| e.sq_length.numer())
        .collect();
    sq.sort_unstable();
    checks.push(Check::compare(
        "prism/sq-lengths",
        vec![5i64, 5, 6, 6, 6, 8, 8],
        sq,
    ));
    // The red factor really is a right triangle: along a fixed blue vertex
    // the two column displacements are orthogonal.
    let step = |a: usize, b: usize| -> Vec<f64> {
        realization.coords()[a]
            .iter()
            .zip(&realization.coords()[b])
            .map(|(x, y)| y - x)
            .collect()
    };
    let leg1 = step(0, 1);
    let leg2 = step(1, 2);
    let dot: f64 = leg1.iter().zip(&leg2).map(|(x, y)| x * y).sum();
    checks.push(Check::assert("prism/right-angle", dot.abs() < 1e-9));
    let below = lower_set(&prism);
    let mut by_dim = [0usize; 4];
    for m in &below {
        by_dim[m.dimension()] += 1;
    }
    checks.push(Check::compare("prism/lower-set-size", 21usize, below.len()));
    checks.push(Check::compare(
        "prism/lower-set-by-dimension",
        [6usize, 9, 5, 1],
        by_dim,
    ));
    checks
}

/// The hexagon: the permutahedron over basepoint (1, 2, 3) in [0, 4]^3 is
/// coplanar on coordinate sum 6, has six edges of length sqrt(2), and its
/// 1-skeleton equals the right Cayley graph.
pub fn check_permutahedron() -> Vec<Check> {
    let base: Vec<Rat> = [1, 2, 3].map(Rat::integer).to_vec();
    let hex = permutahedron(3, (Rat::zero(), Rat::integer(4)), &base).expect("generic basepoint");
    let mut checks = vec![Check::compare(
        "permutahedron/vertex-count",
        6usize,
        hex.realization.vertices().len(),
    )];
    let coplanar = hex
        .realization
        .coords()
        .iter()
        .all(|c| (c.iter().sum::<f64>() - 6.0).abs() < 1e-9);
    checks.push(Check::assert("permutahedron/coplanar-sum-6", coplanar));
    let sides = hex.realization.edges().len() == 6
        && hex
            .realization
            .edges()
            .iter()
            .all(|e| e.sq_length == Rat::integer(2));
    checks.push(Check::assert("permutahedron/six-sides-sqrt2", sides));
    checks.push(Check::assert(
        "permutahedron/distances-1e-9",
        hex.realization.check(1e-9).is_ok(),
    ));
    checks.push(Check::assert(
        "permutahedron/skeleton-is-right-cayley",
        hex.skeleton == cayley_graph(3, CayleySide::Right),
    ));
    checks
}

/// The tetrahedral graph at n = 4: 35 vertices, a 16-edge boundary cycle, and
/// the spine of the generic 4-point cell as a subgraph.
pub fn check_tetra_graph() -> Vec<Check> {
    let t = tetra_graph(4);
    let mut checks = vec![Check::compare(
        "tetra/vertex-count",
        35usize,
        t.graph().vertex_count(),
    )];
    let boundary = t.boundary_vertices();
    let edges = t.boundary_edges();
    checks.push(Check::compare(
        "tetra/boundary-vertices",
        16usize,
        boundary.len(),
    ));
    checks.push(Check::compare("tetra/boundary-edges", 16usize, edges.len()));
    let two_regular = boundary
        .iter()
        .all(|v| edges.iter().filter(|(a, b)| a == v || b == v).count() == 2);
    checks.push(Check::assert("tetra/boundary-two-regular", two_regular));
    let mut reach: BTreeSet<String> = BTreeSet::from([boundary[0].clone()]);
    loop {
        let before = reach.len();
        for (a, b) in &edges {
            if reach.contains(a) {
                reach.insert(b.clone());
            }
            if reach.contains(b) {
                reach.insert(a.clone());
            }
        }
        if reach.len() == before {
            break;
        }
    }
    checks.push(Check::compare(
        "tetra/boundary-connected",
        boundary.len(),
        reach.len(),
    ));

    let generic = RectComposition::new(vec![
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0],
    ])
    .expect("valid generic composition");
    let spine = generic.spine();
    let embedded = spine.edges().iter().all(|e| {
        let (from, to) = e.endpoints();
        t.graph().contains_edge(
            &spine.vertex_key(from.0, from.1),
            &spine.vertex_key(to.0, to.1),
            &e.color,
        )
    }) && spine.edges().iter().all(|e| e.color != Color::Mixed);
    checks.push(Check::assert("tetra/top-spine-embeds", embedded));
    checks
}

/// In-process determinism spot check: rendering the same exports twice gives
/// identical bytes. Cross-process determinism is exercised by the acceptance
/// suite, which runs the command-line tool twice and compares files.
pub fn check_determinism() -> Vec<Check> {
    let g = dual_graph(3);
    let json_a = super::files::render_json(&g.to_json());
    let json_b = super::files::render_json(&dual_graph(3).to_json());
    let dot_a = g.to_dot("dual");
    let dot_b = dual_graph(3).to_dot("dual");
    let t = tetra_graph(3);
    let tetra_a = super::files::render_json(&super::files::tetra_json(&t));
    let tetra_b = super::files::render_json(&super::files::tetra_json(&tetra_graph(3)));
    vec![
        Check::assert("determinism/dual-json", json_a == json_b),
        Check::assert("determinism/dual-dot", dot_a == dot_b),
        Check::assert("determinism/tetra-json", tetra_a == tetra_b),
    ]
}

/// Runs every bundled check. The face-poset family sweeps n = 1..=`max_n`;
/// everything else runs at its fixed range. Refuses `max_n` past the face
/// poset bound rather than silently truncating.
pub fn run_verification(max_n: u64) -> Result<RunReport> {
    if max_n == 0 || max_n > FACE_POSET_MAX_N {
        return Err(Error::ResourceGuard {
            task: "verification suite (face poset closure)",
            requested: max_n,
            max: FACE_POSET_MAX_N,
        });
    }
    let mut checks = Vec::new();
    checks.extend(check_linear_poset_law());
    checks.extend(check_spine_worked_example());
    checks.extend(check_face_poset(max_n)?);
    checks.extend(check_dual_graph());
    checks.extend(check_counting_claims());
    checks.extend(check_preimage_counts());
    checks.extend(check_prism_cell());
    checks.extend(check_permutahedron());
    checks.extend(check_tetra_graph());
    checks.extend(check_determinism());
    let passed = checks.iter().filter(|c| c.pass).count();
    let report = RunReport {
        command: "verify".to_string(),
        inputs: json!({ "max_n": max_n }),
        results: json!({
            "checks": checks.len(),
            "passed": passed,
            "failed": checks.len() - passed,
        }),
        checks,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_enumeration_matches_formula() {
        for n in 1..=6u64 {
            assert_eq!(enumerate_vectors(n).len() as u64, (1 << (n + 1)) - 1);
        }
    }

    #[test]
    fn downset_oracle_small() {
        let down = downset_by_merges(&[0, 1, 1, 0]);
        // [0 1 1 0] with merges: [1 1 0], [0 2 0], [0 1 1]; then [2 0], [1 1], [0 2].
        assert_eq!(down.len(), 7);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn guard_refuses_large_sweeps() {
        assert!(matches!(
            run_verification(20),
            Err(Error::ResourceGuard { requested: 20, .. })
        ));
        assert!(run_verification(0).is_err());
    }

    #[test]
    fn quick_families_pass() {
        assert!(check_spine_worked_example().iter().all(|c| c.pass));
        assert!(check_counting_claims().iter().all(|c| c.pass));
        assert!(check_prism_cell().iter().all(|c| c.pass));
        assert!(check_permutahedron().iter().all(|c| c.pass));
        assert!(check_tetra_graph().iter().all(|c| c.pass));
        assert!(check_determinism().iter().all(|c| c.pass));
    }
}
