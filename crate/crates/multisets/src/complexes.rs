//! Whole-complex constructions: the face poset of the multiset space of a
//! rectangle, its dual graph and the comparison with the overlaid Cayley
//! graphs, the tetrahedral graph on the vertex set, and permutahedron and
//! bi-orthoscheme geometry.
//!
//! Combinatorics stays exact throughout; floating point appears only in
//! `GeometricRealization` coordinates, checked against declared exact squared
//! lengths at tolerance 1e-9.

use std::collections::{BTreeMap, BTreeSet};

use crate::exact::Rat;
use crate::graph::{Color, EdgeTag, LabeledMultigraph, Side};
use crate::rectangular::{
    compare_canonical, maximal_elements, maximal_facet_parents, minimal_elements, Dir, MergeTag,
    RectComposition,
};
use crate::symmetry::{all_permutations, overlay_lr};
use crate::{Error, Result};

/// Practical bound for closing the face poset; growth past it is factorial.
pub const FACE_POSET_MAX_N: u64 = 4;

/// Practical bound for the dual-graph comparison.
pub const DUAL_GRAPH_MAX_N: u64 = 5;

/// The face poset of the multiset space of a rectangle: every cell label,
/// its dimension, and the single-merge cover relations, graded so that each
/// cover drops dimension by exactly one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FacePoset {
    elements: Vec<RectComposition>,
    covers: Vec<(usize, usize)>,
    dims: Vec<usize>,
}

impl FacePoset {
    pub fn elements(&self) -> &[RectComposition] {
        &self.elements
    }

    /// Cover pairs as (lower index, upper index) into `elements`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Cell counts per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dims.iter().copied().max().unwrap_or(0);
        let mut f = vec![0usize; top + 1];
        for &d in &self.dims {
            f[d] += 1;
        }
        f
    }

    /// Alternating sum of the f-vector; reported as a computed value.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &count)| {
                let signed = count as i64;
                if d % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }

    /// Indices of the elements covering `idx` from above.
    pub fn upper_covers(&self, idx: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == idx)
            .map(|&(_, hi)| hi)
            .collect()
    }
}

/// Builds the face poset by closing the maximal elements downward under
/// single merges. Guarded above `FACE_POSET_MAX_N`.
pub fn face_poset_rect(n: u64) -> Result<FacePoset> {
    if n == 0 || n > FACE_POSET_MAX_N {
        return Err(Error::ResourceGuard {
            task: "face poset closure",
            requested: n,
            max: FACE_POSET_MAX_N,
        });
    }
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut elements: Vec<RectComposition> = Vec::new();
    let mut frontier: Vec<RectComposition> = Vec::new();
    for (_, m) in maximal_elements(n) {
        seen.insert(m.matrix().to_vec());
        elements.push(m.clone());
        frontier.push(m);
    }
    while let Some(element) = frontier.pop() {
        for (_, cover) in element.lower_covers() {
            if seen.insert(cover.matrix().to_vec()) {
                elements.push(cover.clone());
                frontier.push(cover);
            }
        }
    }
    elements.sort_by(compare_canonical);
    let index: BTreeMap<Vec<Vec<u64>>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (m.matrix().to_vec(), i))
        .collect();
    let mut covers = Vec::new();
    for (upper, element) in elements.iter().enumerate() {
        for (_, cover) in element.lower_covers() {
            let lower = index[&cover.matrix().to_vec()];
            covers.push((lower, upper));
        }
    }
    covers.sort();
    covers.dedup();
    let dims = elements.iter().map(RectComposition::dimension).collect();
    Ok(FacePoset {
        elements,
        covers,
        dims,
    })
}

/// The downward closure of a single composition, with its per-dimension
/// counts; the face poset of one cell.
pub fn lower_set(a: &RectComposition) -> Vec<RectComposition> {
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::from([a.matrix().to_vec()]);
    let mut frontier = vec![a.clone()];
    let mut out = vec![a.clone()];
    while let Some(element) = frontier.pop() {
        for (_, cover) in element.lower_covers() {
            if seen.insert(cover.matrix().to_vec()) {
                out.push(cover.clone());
                frontier.push(cover);
            }
        }
    }
    out.sort_by(compare_canonical);
    out
}

/// The dual graph of the top-dimensional cells: one vertex per padded
/// permutation matrix, one edge per shared codimension-1 face. Faces are
/// matched by actually merging matrices; a row merge at internal position
/// `i+1` shared between two cells yields the label (Row, i), and likewise for
/// columns.
pub fn dual_graph(n: u64) -> LabeledMultigraph<EdgeTag> {
    let vertices: Vec<String> = maximal_elements(n).iter().map(|(p, _)| p.key()).collect();
    let mut edges = Vec::new();
    for (facet, parents) in maximal_facet_parents(n) {
        debug_assert!(parents.len() <= 2, "facet {facet:?} has too many parents");
        if let [(a, tag_a), (b, tag_b)] = parents.as_slice() {
            debug_assert_eq!(tag_a, tag_b);
            let tag = match tag_a {
                MergeTag::Row(pos) => EdgeTag::new(Side::Row, pos - 1),
                MergeTag::Col(pos) => EdgeTag::new(Side::Col, pos - 1),
            };
            edges.push((a.clone(), b.clone(), tag));
        }
    }
    LabeledMultigraph::new(vertices, edges).expect("parents are maximal cells")
}

/// Outcome of comparing the dual graph with the overlaid Cayley graphs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualGraphReport {
    pub n: u64,
    pub equal: bool,
    pub dual_edges: usize,
    pub overlay_edges: usize,
    /// First difference found, if the graphs disagree.
    pub detail: Option<String>,
}

/// Compares `dual_graph(n)` with `overlay_lr(n)` after mapping the labels
/// (Row, i) to (Left, i) and (Col, j) to (Right, j). Guarded above
/// `DUAL_GRAPH_MAX_N`.
pub fn verify_dual_graph(n: u64) -> Result<DualGraphReport> {
    if n == 0 || n > DUAL_GRAPH_MAX_N {
        return Err(Error::ResourceGuard {
            task: "dual graph comparison",
            requested: n,
            max: DUAL_GRAPH_MAX_N,
        });
    }
    let dual = dual_graph(n).map_labels(|tag| {
        EdgeTag::new(
            match tag.side {
                Side::Row => Side::Left,
                Side::Col => Side::Right,
                other => other,
            },
            tag.index,
        )
    });
    let overlay = overlay_lr(usize::try_from(n).expect("small n"));
    let detail = dual.first_difference(&overlay);
    Ok(DualGraphReport {
        n,
        equal: detail.is_none(),
        dual_edges: dual.edge_count(),
        overlay_edges: overlay.edge_count(),
        detail,
    })
}

/// Reference vertices of the tetrahedral embedding: the 2x2 entry at each
/// position contributes its value times the matching corner.
pub const TETRA_CORNERS: [[i64; 3]; 4] = [
    [1, 1, 1],   // upper left
    [1, -1, -1], // upper right
    [-1, 1, -1], // lower left
    [-1, -1, 1], // lower right
];

/// Human-readable description of the embedding, carried in exports.
pub const TETRA_EMBEDDING: &str = "coords = a*(1,1,1) + b*(1,-1,-1) + c*(-1,1,-1) + d*(-1,-1,1) \
     for the vertex [a b / c d]";

/// The tetrahedral graph: the minimal elements of the composition poset,
/// placed at integer points of a tetrahedron, with one edge for each unit
/// move between two entries in the same row or column of the 2x2 label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TetraGraph {
    graph: LabeledMultigraph<Color>,
    coords: Vec<[i64; 3]>,
}

impl TetraGraph {
    pub fn graph(&self) -> &LabeledMultigraph<Color> {
        &self.graph
    }

    /// Coordinates aligned with `graph().vertices()`.
    pub fn coords(&self) -> &[[i64; 3]] {
        &self.coords
    }

    pub fn coord_of(&self, key: &str) -> Option<[i64; 3]> {
        self.graph
            .vertices()
            .iter()
            .position(|v| v == key)
            .map(|i| self.coords[i])
    }

    /// Keys of the vertices whose 2x2 label has a zero row or zero column;
    /// these induce a cycle with `4n` edges.
    pub fn boundary_vertices(&self) -> Vec<String> {
        self.graph
            .vertices()
            .iter()
            .filter(|key| {
                let m = parse_quad(key);
                m[0][0] + m[0][1] == 0
                    || m[1][0] + m[1][1] == 0
                    || m[0][0] + m[1][0] == 0
                    || m[0][1] + m[1][1] == 0
            })
            .cloned()
            .collect()
    }

    /// Edges of the subgraph induced on the boundary vertices.
    pub fn boundary_edges(&self) -> Vec<(String, String)> {
        let boundary: BTreeSet<String> = self.boundary_vertices().into_iter().collect();
        self.graph
            .edges()
            .filter(|(u, v, _)| boundary.contains(*u) && boundary.contains(*v))
            .map(|(u, v, _)| (u.to_string(), v.to_string()))
            .collect()
    }
}

fn quad_key(m: [[u64; 2]; 2]) -> String {
    format!("{} {} / {} {}", m[0][0], m[0][1], m[1][0], m[1][1])
}

fn parse_quad(key: &str) -> [[u64; 2]; 2] {
    let nums: Vec<u64> = key
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().expect("quad keys hold integers"))
        .collect();
    [[nums[0], nums[1]], [nums[2], nums[3]]]
}

/// Builds the tetrahedral graph for the vertices of the multiset space.
pub fn tetra_graph(n: u64) -> TetraGraph {
    let quads: Vec<[[u64; 2]; 2]> = minimal_elements(n)
        .iter()
        .map(|m| {
            let rows = m.matrix();
            [[rows[0][0], rows[0][1]], [rows[1][0], rows[1][1]]]
        })
        .collect();
    let vertices: Vec<String> = quads.iter().map(|&q| quad_key(q)).collect();
    let mut edges = Vec::new();
    for &q in &quads {
        // Move one unit between the two entries of a row or column; emitting
        // only the direction that increases the first entry keeps each
        // undirected edge once.
        type UnitMove = ((usize, usize), (usize, usize), Color);
        let moves: [UnitMove; 4] = [
            ((0, 0), (0, 1), Color::Red),    // within top row, bottom fixed
            ((1, 0), (1, 1), Color::Orange), // within bottom row, top fixed
            ((0, 0), (1, 0), Color::Cyan),   // within left column, right fixed
            ((0, 1), (1, 1), Color::Blue),   // within right column, left fixed
        ];
        for (from, to, color) in moves {
            if q[from.0][from.1] > 0 {
                let mut other = q;
                other[from.0][from.1] -= 1;
                other[to.0][to.1] += 1;
                edges.push((quad_key(q), quad_key(other), color));
            }
        }
    }
    let graph = LabeledMultigraph::new(vertices, edges).expect("moves stay on the simplex");
    let coords = graph
        .vertices()
        .iter()
        .map(|key| {
            let m = parse_quad(key);
            let weights = [m[0][0], m[0][1], m[1][0], m[1][1]];
            let mut coord = [0i64; 3];
            for (w, corner) in weights.iter().zip(TETRA_CORNERS) {
                for (c, delta) in coord.iter_mut().zip(corner) {
                    *c += *w as i64 * delta;
                }
            }
            coord
        })
        .collect();
    TetraGraph { graph, coords }
}

/// A straight-line realization: vertex keys, float coordinates, and edges
/// carrying exact declared squared lengths.
#[derive(Clone, PartialEq, Debug)]
pub struct GeometricRealization {
    vertices: Vec<String>,
    coords: Vec<Vec<f64>>,
    edges: Vec<RealizedEdge>,
}

/// An edge of a realization; `a` and `b` index the vertex list.
#[derive(Clone, PartialEq, Debug)]
pub struct RealizedEdge {
    pub a: usize,
    pub b: usize,
    pub label: String,
    pub sq_length: Rat,
}

impl GeometricRealization {
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn coords(&self) -> &[Vec<f64>] {
        &self.coords
    }

    pub fn coord_of(&self, key: &str) -> Option<&[f64]> {
        self.vertices
            .iter()
            .position(|v| v == key)
            .map(|i| self.coords[i].as_slice())
    }

    pub fn edges(&self) -> &[RealizedEdge] {
        &self.edges
    }

    pub fn sq_distance(&self, a: usize, b: usize) -> f64 {
        self.coords[a]
            .iter()
            .zip(&self.coords[b])
            .map(|(x, y)| (x - y) * (x - y))
            .sum()
    }

    /// Largest relative error between declared squared lengths and coordinate
    /// distances.
    pub fn max_sq_error(&self) -> f64 {
        self.edges
            .iter()
            .map(|e| {
                let declared = e.sq_length.to_f64();
                let actual = self.sq_distance(e.a, e.b);
                let scale = declared.abs().max(1.0);
                ((declared - actual) / scale).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Fails if any declared squared length disagrees with the coordinates
    /// beyond `tol` relative error.
    pub fn check(&self, tol: f64) -> Result<()> {
        let err = self.max_sq_error();
        if err > tol {
            return Err(Error::GeometryMismatch { error: err, tol });
        }
        Ok(())
    }
}

/// A permutahedron: the convex hull of the orbit of a generic point under the
/// coordinate-permuting action, with its 1-skeleton as a labeled multigraph.
#[derive(Clone, PartialEq, Debug)]
pub struct Permutahedron {
    pub realization: GeometricRealization,
    pub skeleton: LabeledMultigraph<EdgeTag>,
}

/// Builds the permutahedron over a strictly increasing basepoint inside
/// `interval^n`. The vertex keyed by a permutation `tau` sits at the orbit
/// point whose `j`-th coordinate is `basepoint[j·tau]`; two vertices are
/// joined when their coordinate tuples differ by swapping two values that are
/// adjacent in the sorted value order, which are exactly the hull edges. The
/// edge swapping values `b_i, b_{i+1}` gets the label (Right, i), and the
/// skeleton equals the right Cayley graph.
pub fn permutahedron(n: u64, interval: (Rat, Rat), basepoint: &[Rat]) -> Result<Permutahedron> {
    let n = usize::try_from(n).expect("small n");
    if n == 0 || basepoint.len() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: basepoint.len(),
        });
    }
    let (lo, hi) = interval;
    if lo >= hi {
        return Err(Error::DegenerateInterval);
    }
    if basepoint.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonGenericBasepoint);
    }
    if basepoint.iter().any(|&b| b < lo || b > hi) {
        return Err(Error::PointOutsideDomain);
    }

    let perms = all_permutations(n);
    let exact: BTreeMap<String, Vec<Rat>> = perms
        .iter()
        .map(|tau| {
            let point: Vec<Rat> = (1..=n)
                .map(|j| basepoint[tau.act_right(j).expect("j in range") - 1])
                .collect();
            (tau.key(), point)
        })
        .collect();

    // Hull edges: swap the two coordinates holding the consecutive values
    // b_i and b_{i+1}.
    let mut edges: Vec<(String, String, EdgeTag)> = Vec::new();
    for (key, point) in &exact {
        for i in 1..n {
            let pa = point
                .iter()
                .position(|&v| v == basepoint[i - 1])
                .expect("orbit point");
            let pb = point
                .iter()
                .position(|&v| v == basepoint[i])
                .expect("orbit point");
            let mut swapped = point.clone();
            swapped.swap(pa, pb);
            let neighbor_key = key_of_orbit_point(&swapped, basepoint);
            if key.as_str() < neighbor_key.as_str() {
                edges.push((key.clone(), neighbor_key, EdgeTag::new(Side::Right, i)));
            }
        }
    }
    let vertices: Vec<String> = exact.keys().cloned().collect();
    let skeleton = LabeledMultigraph::new(vertices.clone(), edges.clone())?;

    let coords: Vec<Vec<f64>> = vertices
        .iter()
        .map(|key| exact[key].iter().map(Rat::to_f64).collect())
        .collect();
    let index: BTreeMap<&str, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, k)| (k.as_str(), i))
        .collect();
    let realized_edges = edges
        .into_iter()
        .map(|(a, b, tag)| {
            let gap = basepoint[tag.index] - basepoint[tag.index - 1];
            RealizedEdge {
                a: index[a.as_str()],
                b: index[b.as_str()],
                label: tag.to_string(),
                sq_length: Rat::integer(2) * gap * gap,
            }
        })
        .collect();
    Ok(Permutahedron {
        realization: GeometricRealization {
            vertices,
            coords,
            edges: realized_edges,
        },
        skeleton,
    })
}

/// Recovers the permutation key of an orbit point: `tau(j)` is the sorted
/// position of coordinate `j` in the basepoint.
fn key_of_orbit_point(point: &[Rat], basepoint: &[Rat]) -> String {
    let image: Vec<String> = point
        .iter()
        .map(|v| {
            (basepoint
                .iter()
                .position(|b| b == v)
                .expect("orbit coordinate")
                + 1)
            .to_string()
        })
        .collect();
    image.join(" ")
}

/// Realizes the bi-orthoscheme of a rectangular composition: the blue factor
/// uses mutually orthogonal displacements of squared length `c_i · L_I²`, the
/// red factor `d_j · L_J²`, and the spine vertices map to product coordinates.
pub fn realize_biorthoscheme(
    a: &RectComposition,
    unit_i: Rat,
    unit_j: Rat,
) -> GeometricRealization {
    let spine = a.spine();
    let (grid_rows, grid_cols) = spine.grid_shape();
    let h = grid_rows - 1;
    let k = grid_cols - 1;
    let blue: Vec<f64> = (1..=h)
        .map(|i| (Rat::from(a.matrix()[i].iter().sum::<u64>()) * unit_i * unit_i).to_f64())
        .collect();
    let red: Vec<f64> = (1..=k)
        .map(|j| {
            let col: u64 = a.matrix().iter().map(|row| row[j]).sum();
            (Rat::from(col) * unit_j * unit_j).to_f64()
        })
        .collect();

    let mut vertices = Vec::with_capacity(grid_rows * grid_cols);
    let mut coords = Vec::with_capacity(grid_rows * grid_cols);
    let mut index = BTreeMap::new();
    for i in 0..grid_rows {
        for j in 0..grid_cols {
            let mut point = vec![0.0; h + k];
            for (axis, sq) in blue.iter().enumerate().take(i) {
                point[axis] = sq.sqrt();
            }
            for (axis, sq) in red.iter().enumerate().take(j) {
                point[h + axis] = sq.sqrt();
            }
            index.insert((i, j), vertices.len());
            vertices.push(spine.vertex_key(i, j));
            coords.push(point);
        }
    }
    let edges = spine
        .edges()
        .iter()
        .map(|e| {
            let (from, to) = e.endpoints();
            RealizedEdge {
                a: index[&from],
                b: index[&to],
                label: format!(
                    "{}{}/{}",
                    e.dir.as_str(),
                    match e.dir {
                        Dir::Row => e.at.0 + 1,
                        Dir::Col => e.at.1 + 1,
                    },
                    e.color
                ),
                sq_length: e.sq_length(unit_i, unit_j),
            }
        })
        .collect();
    GeometricRealization {
        vertices,
        coords,
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectangular::tests::{generic4, prism, rect};
    use crate::symmetry::{cayley_graph, CayleySide};

    const TOL: f64 = 1e-9;

    #[test]
    fn face_poset_n1() {
        let poset = face_poset_rect(1).unwrap();
        assert_eq!(poset.f_vector(), vec![4, 4, 1]);
        assert_eq!(poset.euler_characteristic(), 1);
        // 2 vertices under each of the 4 edges, 4 edges under the face.
        assert_eq!(poset.covers().len(), 12);
    }

    #[test]
    fn face_poset_n2_frozen() {
        let poset = face_poset_rect(2).unwrap();
        assert_eq!(poset.f_vector(), vec![10, 22, 21, 10, 2]);
        assert_eq!(poset.euler_characteristic(), 1);
        // Grading: every cover drops dimension by exactly one.
        for &(lo, hi) in poset.covers() {
            assert_eq!(poset.dims()[lo] + 1, poset.dims()[hi]);
        }
    }

    #[test]
    fn face_poset_guard() {
        assert!(matches!(
            face_poset_rect(20),
            Err(Error::ResourceGuard {
                requested: 20,
                max: 4,
                ..
            })
        ));
        assert!(face_poset_rect(0).is_err());
    }

    #[test]
    fn codimension_one_parent_counts() {
        for n in 1..=3 {
            let poset = face_poset_rect(n).unwrap();
            let top = 2 * n as usize;
            let mut shared = 0usize;
            for idx in 0..poset.len() {
                if poset.dims()[idx] == top - 1 {
                    let uppers: Vec<usize> = poset
                        .upper_covers(idx)
                        .into_iter()
                        .filter(|&u| poset.dims()[u] == top)
                        .collect();
                    assert!(uppers.len() == 1 || uppers.len() == 2);
                    if uppers.len() == 2 {
                        shared += 1;
                    }
                }
            }
            assert_eq!(shared, dual_graph(n).edge_count());
        }
    }

    #[test]
    fn dual_graph_examples() {
        let d2 = dual_graph(2);
        assert_eq!((d2.vertex_count(), d2.edge_count()), (2, 2));
        let labels: Vec<String> = d2.edges().map(|(_, _, l)| l.to_string()).collect();
        assert_eq!(labels, vec!["Row1", "Col1"]);

        let d3 = dual_graph(3);
        assert_eq!((d3.vertex_count(), d3.edge_count()), (6, 12));

        let d1 = dual_graph(1);
        assert_eq!((d1.vertex_count(), d1.edge_count()), (1, 0));
    }

    #[test]
    fn dual_graph_matches_overlay() {
        // Up to and including the bound of the comparison.
        for n in 1..=5 {
            let report = verify_dual_graph(n).unwrap();
            assert!(report.equal, "n={n}: {:?}", report.detail);
            let expected: usize = (1..=n as usize).product::<usize>() * (n as usize - 1);
            assert_eq!(report.dual_edges, expected);
            assert_eq!(report.overlay_edges, expected);
        }
        assert!(matches!(
            verify_dual_graph(6),
            Err(Error::ResourceGuard {
                requested: 6,
                max: 5,
                ..
            })
        ));
    }

    #[test]
    fn lower_set_of_prism() {
        let below = lower_set(&prism());
        assert_eq!(below.len(), 21);
        let mut by_dim = [0usize; 4];
        for m in &below {
            by_dim[m.dimension()] += 1;
        }
        assert_eq!(by_dim, [6, 9, 5, 1]);
    }

    #[test]
    fn tetra_graph_counts() {
        let t = tetra_graph(4);
        assert_eq!(t.graph().vertex_count(), 35);
        assert_eq!(t.boundary_vertices().len(), 16);
        assert_eq!(t.boundary_edges().len(), 16);

        // The boundary is a single cycle: degree 2 within the induced
        // subgraph, and connected.
        let boundary = t.boundary_vertices();
        let edges = t.boundary_edges();
        for v in &boundary {
            let deg = edges.iter().filter(|(a, b)| a == v || b == v).count();
            assert_eq!(deg, 2, "boundary vertex {v}");
        }
        let mut reach: BTreeSet<&String> = BTreeSet::from([&boundary[0]]);
        loop {
            let before = reach.len();
            for (a, b) in &edges {
                if reach.contains(a) {
                    reach.insert(b);
                }
                if reach.contains(b) {
                    reach.insert(a);
                }
            }
            if reach.len() == before {
                break;
            }
        }
        assert_eq!(reach.len(), boundary.len());
    }

    #[test]
    fn tetra_coords_are_affine_in_the_label() {
        let t = tetra_graph(2);
        assert_eq!(t.coord_of("2 0 / 0 0"), Some([2, 2, 2]));
        assert_eq!(t.coord_of("0 0 / 0 2"), Some([-2, -2, 2]));
        assert_eq!(t.coord_of("1 1 / 0 0"), Some([2, 0, 0]));
        // Coordinates are distinct across vertices.
        let mut seen = BTreeSet::new();
        for &c in t.coords() {
            assert!(seen.insert(c));
        }
    }

    #[test]
    fn spine_skeleton_embeds_in_tetra_graph() {
        let t = tetra_graph(4);
        let spine = generic4().spine();
        for e in spine.edges() {
            let (from, to) = e.endpoints();
            let u = spine.vertex_key(from.0, from.1);
            let v = spine.vertex_key(to.0, to.1);
            assert!(
                t.graph().contains_edge(&u, &v, &e.color),
                "spine edge {u} -- {v} [{}] missing",
                e.color
            );
        }
    }

    #[test]
    fn hexagon_permutahedron() {
        let base: Vec<Rat> = [1, 2, 3].map(Rat::integer).to_vec();
        let hex = permutahedron(3, (Rat::zero(), Rat::integer(4)), &base).unwrap();
        assert_eq!(hex.realization.vertices().len(), 6);
        assert_eq!(hex.realization.edges().len(), 6);
        for e in hex.realization.edges() {
            assert_eq!(e.sq_length, Rat::integer(2));
        }
        hex.realization.check(TOL).unwrap();
        for coord in hex.realization.coords() {
            let sum: f64 = coord.iter().sum();
            assert!((sum - 6.0).abs() < TOL);
        }
        assert_eq!(hex.skeleton, cayley_graph(3, CayleySide::Right));
    }

    #[test]
    fn two_point_permutahedron() {
        let base: Vec<Rat> = [0, 1].map(Rat::integer).to_vec();
        let p = permutahedron(2, (Rat::zero(), Rat::one()), &base).unwrap();
        assert_eq!(p.realization.vertices().len(), 2);
        assert_eq!(p.realization.edges().len(), 1);
        assert_eq!(p.realization.edges()[0].sq_length, Rat::integer(2));
        p.realization.check(TOL).unwrap();
    }

    #[test]
    fn permutahedron_rejects_bad_basepoints() {
        let flat: Vec<Rat> = [1, 1, 2].map(Rat::integer).to_vec();
        assert!(matches!(
            permutahedron(3, (Rat::zero(), Rat::integer(4)), &flat),
            Err(Error::NonGenericBasepoint)
        ));
        let outside: Vec<Rat> = [1, 2, 9].map(Rat::integer).to_vec();
        assert!(matches!(
            permutahedron(3, (Rat::zero(), Rat::integer(4)), &outside),
            Err(Error::PointOutsideDomain)
        ));
    }

    #[test]
    fn prism_realization() {
        let r = realize_biorthoscheme(&prism(), Rat::one(), Rat::one());
        assert_eq!(r.vertices().len(), 6);
        assert_eq!(r.edges().len(), 7);
        r.check(TOL).unwrap();
        let mut sq: Vec<i64> = r.edges().iter().map(|e| e.sq_length.numer()).collect();
        sq.sort();
        assert_eq!(sq, vec![5, 5, 6, 6, 6, 8, 8]);

        // The two red displacements along a fixed blue vertex are orthogonal
        // legs of the right triangle.
        let leg =
            |a: &[f64], b: &[f64]| -> Vec<f64> { a.iter().zip(b).map(|(x, y)| y - x).collect() };
        let d1 = leg(&r.coords()[0], &r.coords()[1]);
        let d2 = leg(&r.coords()[1], &r.coords()[2]);
        let dot: f64 = d1.iter().zip(&d2).map(|(x, y)| x * y).sum();
        assert!(dot.abs() < TOL);
    }

    #[test]
    fn degenerate_red_factor_reduces_to_linear_spine() {
        // Row sums [3 4 1 2 1] with all mass in one column: the blue factor
        // alone, realized in three dimensions.
        let m = rect(&[&[3, 0], &[4, 0], &[1, 0], &[2, 0], &[1, 0]]);
        let r = realize_biorthoscheme(&m, Rat::one(), Rat::one());
        r.check(TOL).unwrap();
        let sq: Vec<i64> = r.edges().iter().map(|e| e.sq_length.numer()).collect();
        assert_eq!(sq, vec![4, 1, 2]);
    }

    #[test]
    fn point_realization() {
        let r = realize_biorthoscheme(&rect(&[&[2, 0], &[0, 1]]), Rat::one(), Rat::one());
        assert_eq!(r.vertices().len(), 1);
        assert!(r.edges().is_empty());
        assert_eq!(r.coords()[0].len(), 0);
    }

    #[test]
    fn realization_scales_with_side_lengths() {
        let li = Rat::new(3, 2).unwrap();
        let lj = Rat::new(2, 5).unwrap();
        let r = realize_biorthoscheme(&prism(), li, lj);
        r.check(TOL).unwrap();
        let mut sq: Vec<Rat> = r.edges().iter().map(|e| e.sq_length).collect();
        sq.sort();
        // Row edges scale by L_I^2 = 9/4, column edges by L_J^2 = 4/25.
        let expected: Vec<Rat> = [
            (5, lj),
            (5, lj),
            (8, lj),
            (8, lj),
            (6, li),
            (6, li),
            (6, li),
        ]
        .map(|(w, unit)| Rat::integer(w) * unit * unit)
        .into_iter()
        .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(sq, expected);
    }
}
