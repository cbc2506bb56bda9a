//! Rectangular compositions, multisets in a rectangle, and bi-orthoscheme
//! spines.
//!
//! A rectangular composition of `n` is a nonnegative integer matrix with no
//! internal row or column summing to zero. It labels a cell of the multiset
//! space of a rectangle: the product of a blue orthoscheme labeled by the row
//! sums and a red orthoscheme labeled by the column sums. Merging two adjacent
//! rows or columns passes to a facet, and the resulting partial order is
//! decided here by searching consecutive-block partitions, which is equivalent
//! to merge reachability because merges commute and every merge output is
//! valid.
//!
//! Matrix orientation: rows follow the horizontal interval (x, blue), columns
//! the vertical interval (y, red), so a plane rotated a quarter-turn clockwise
//! aligns visually with its multiplicity matrix.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::Rat;
use crate::graph::Color;
use crate::linear::LinearComposition;
use crate::symmetry::{all_permutations, Permutation};
use crate::{Error, Result};

/// A nonnegative integer matrix of shape `(h+2) x (k+2)` with positive
/// internal row and column sums and total `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RectComposition {
    matrix: Vec<Vec<u64>>,
}

impl RectComposition {
    /// Validates a raw matrix, reporting the first violated rule.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let rows = matrix.len();
        if rows < 2 {
            return Err(Error::BadShape {
                rows,
                cols: matrix.first().map_or(0, Vec::len),
            });
        }
        let cols = matrix[0].len();
        if cols < 2 {
            return Err(Error::BadShape { rows, cols });
        }
        if matrix.iter().any(|row| row.len() != cols) {
            return Err(Error::RaggedMatrix);
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e < 0 {
                    return Err(Error::NegativeMatrixEntry {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        let matrix: Vec<Vec<u64>> = matrix
            .into_iter()
            .map(|row| row.into_iter().map(|e| e as u64).collect())
            .collect();
        for (i, row) in matrix.iter().enumerate().take(rows - 1).skip(1) {
            if row.iter().sum::<u64>() == 0 {
                return Err(Error::ZeroInternalRow { row: i + 1 });
            }
        }
        for j in 1..cols - 1 {
            if matrix.iter().map(|row| row[j]).sum::<u64>() == 0 {
                return Err(Error::ZeroInternalCol { col: j + 1 });
            }
        }
        if matrix.iter().flatten().sum::<u64>() == 0 {
            return Err(Error::ZeroTotal);
        }
        Ok(RectComposition { matrix })
    }

    fn from_matrix_unchecked(matrix: Vec<Vec<u64>>) -> Self {
        RectComposition { matrix }
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix[0].len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn n(&self) -> u64 {
        self.matrix.iter().flatten().sum()
    }

    /// `h + k`: the dimension of the labeled bi-orthoscheme.
    pub fn dimension(&self) -> usize {
        self.rows() + self.cols() - 4
    }

    fn row_sums(&self) -> Vec<u64> {
        self.matrix.iter().map(|row| row.iter().sum()).collect()
    }

    fn col_sums(&self) -> Vec<u64> {
        (0..self.cols())
            .map(|j| self.matrix.iter().map(|row| row[j]).sum())
            .collect()
    }

    /// Projection to the row-sum composition (the blue, horizontal factor).
    pub fn pi_re(&self) -> LinearComposition {
        LinearComposition::from_entries_unchecked(self.row_sums())
    }

    /// Projection to the column-sum composition (the red, vertical factor).
    pub fn pi_im(&self) -> LinearComposition {
        LinearComposition::from_entries_unchecked(self.col_sums())
    }

    /// Replaces rows `i-1` and `i` (0-based `i-1`, `i`) by their sum,
    /// `1 <= i <= rows-1`. The result is always a valid composition, but a
    /// 2-row matrix cannot merge.
    pub fn row_merge(&self, i: usize) -> Result<RectComposition> {
        if self.rows() == 2 {
            return Err(Error::BadShape {
                rows: 1,
                cols: self.cols(),
            });
        }
        if i < 1 || i >= self.rows() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.rows() - 1,
            });
        }
        let mut matrix = self.matrix.clone();
        let lower = matrix.remove(i);
        for (a, b) in matrix[i - 1].iter_mut().zip(lower) {
            *a += b;
        }
        Ok(RectComposition { matrix })
    }

    /// Column analogue of `row_merge`.
    pub fn col_merge(&self, j: usize) -> Result<RectComposition> {
        if self.cols() == 2 {
            return Err(Error::BadShape {
                rows: self.rows(),
                cols: 1,
            });
        }
        if j < 1 || j >= self.cols() {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.cols() - 1,
            });
        }
        let mut matrix = self.matrix.clone();
        for row in &mut matrix {
            let b = row.remove(j);
            row[j - 1] += b;
        }
        Ok(RectComposition { matrix })
    }

    /// The merge partial order, decided by searching for partitions of the
    /// rows and columns of `other` into consecutive blocks whose block-sum
    /// matrix equals `self`. Only partitions whose block sums reproduce the
    /// projections of `self` can succeed, which prunes the search to the
    /// boundary positions where the prefix margins agree.
    pub fn leq(&self, other: &RectComposition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::MismatchedN {
                left: self.n(),
                right: other.n(),
            });
        }
        if self.rows() > other.rows() || self.cols() > other.cols() {
            return Ok(false);
        }
        let row_parts = margin_partitions(&other.row_sums(), &self.row_sums());
        let col_parts = margin_partitions(&other.col_sums(), &self.col_sums());
        for rp in &row_parts {
            for cp in &col_parts {
                if block_sums(&other.matrix, rp, cp) == self.matrix {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// All single-merge results with their merge tags, deduplicated by result
    /// and in canonical order.
    pub fn lower_covers(&self) -> Vec<(MergeTag, RectComposition)> {
        let mut covers: Vec<(MergeTag, RectComposition)> = Vec::new();
        for i in 1..self.rows() {
            if let Ok(m) = self.row_merge(i) {
                covers.push((MergeTag::Row(i), m));
            }
        }
        for j in 1..self.cols() {
            if let Ok(m) = self.col_merge(j) {
                covers.push((MergeTag::Col(j), m));
            }
        }
        covers.sort_by(|a, b| compare_canonical(&a.1, &b.1).then(a.0.cmp(&b.0)));
        covers.dedup_by(|a, b| a.1 == b.1);
        covers
    }

    /// Canonical key, used for vertex labels of 2x2 compositions.
    pub fn key(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        rows.join(" / ")
    }

    /// The spine of the labeled bi-orthoscheme: the product of the spines of
    /// the two factor orthoschemes. Vertex `(i, j)` of the grid is the 2x2
    /// block-sum matrix splitting the rows before row `i+1` and the columns
    /// before column `j+1`.
    pub fn spine(&self) -> SpineComplex {
        let (rows, cols) = self.shape();
        let h = rows - 2;
        let k = cols - 2;
        let grid: Vec<Vec<[[u64; 2]; 2]>> = (1..=h + 1)
            .map(|i| (1..=k + 1).map(|j| self.corner_blocks(i, j)).collect())
            .collect();
        let mut edges = Vec::new();
        for i in 0..h {
            for j in 0..=k {
                // Crossing internal row i+1; its mass left/right of column cut j+1.
                let row = &self.matrix[i + 1];
                let left: u64 = row[..=j].iter().sum();
                let right: u64 = row[j + 1..].iter().sum();
                let color = match (left, right) {
                    (0, _) => Color::Blue,
                    (_, 0) => Color::Cyan,
                    _ => Color::Mixed,
                };
                edges.push(SpineEdge {
                    at: (i, j),
                    dir: Dir::Row,
                    color,
                    weight: left + right,
                });
            }
        }
        for i in 0..=h {
            for j in 0..k {
                // Crossing internal column j+1; its mass above/below row cut i+1.
                let top: u64 = (0..=i).map(|r| self.matrix[r][j + 1]).sum();
                let bottom: u64 = (i + 1..rows).map(|r| self.matrix[r][j + 1]).sum();
                let color = match (top, bottom) {
                    (0, _) => Color::Orange,
                    (_, 0) => Color::Red,
                    _ => Color::Mixed,
                };
                edges.push(SpineEdge {
                    at: (i, j),
                    dir: Dir::Col,
                    color,
                    weight: top + bottom,
                });
            }
        }
        let faces: Vec<(usize, usize)> = (0..h).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
        SpineComplex { grid, edges, faces }
    }

    /// 2x2 block sums with the row cut after `i` rows and the column cut after
    /// `j` columns (`1 <= i <= rows-1`, `1 <= j <= cols-1`).
    fn corner_blocks(&self, i: usize, j: usize) -> [[u64; 2]; 2] {
        let mut blocks = [[0u64; 2]; 2];
        for (r, row) in self.matrix.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                blocks[usize::from(r >= i)][usize::from(c >= j)] += e;
            }
        }
        blocks
    }
}

impl fmt::Display for RectComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Which merge produced a cover: row gap `i` or column gap `j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MergeTag {
    Row(usize),
    Col(usize),
}

/// Canonical matrix order: by shape, then row-major lexicographic.
pub fn compare_canonical(a: &RectComposition, b: &RectComposition) -> Ordering {
    a.shape()
        .cmp(&b.shape())
        .then_with(|| a.matrix.cmp(&b.matrix))
}

/// All partitions of `long` into consecutive nonempty blocks whose sums are
/// exactly `short`, as boundary indices (each of length `short.len() + 1`).
/// Ambiguity only arises where zero entries of `long` sit at block borders.
fn margin_partitions(long: &[u64], short: &[u64]) -> Vec<Vec<usize>> {
    fn extend(
        long: &[u64],
        short: &[u64],
        bounds: &mut Vec<usize>,
        block: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if block == short.len() {
            if *bounds.last().unwrap() == long.len() {
                out.push(bounds.clone());
            }
            return;
        }
        let start = *bounds.last().unwrap();
        let mut acc = 0u64;
        for end in start + 1..=long.len() {
            acc += long[end - 1];
            if acc > short[block] {
                break;
            }
            if acc == short[block] {
                // Remaining blocks each need at least one entry.
                let blocks_left = short.len() - block - 1;
                if long.len() - end >= blocks_left {
                    bounds.push(end);
                    extend(long, short, bounds, block + 1, out);
                    bounds.pop();
                }
                // A zero entry after this boundary allows a wider block.
                if end == long.len() || long[end] > 0 {
                    break;
                }
            }
        }
    }
    let mut out = Vec::new();
    if !short.is_empty() && short.len() <= long.len() {
        extend(long, short, &mut vec![0], 0, &mut out);
    }
    out
}

fn block_sums(matrix: &[Vec<u64>], row_bounds: &[usize], col_bounds: &[usize]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0u64; col_bounds.len() - 1]; row_bounds.len() - 1];
    for (bi, rw) in row_bounds.windows(2).enumerate() {
        for (bj, cw) in col_bounds.windows(2).enumerate() {
            out[bi][bj] = matrix[rw[0]..rw[1]]
                .iter()
                .map(|row| row[cw[0]..cw[1]].iter().sum::<u64>())
                .sum();
        }
    }
    out
}

/// The `n!` maximal elements: `n x n` permutation matrices padded with zeros
/// along the outside, keyed by their permutation, in lexicographic order.
pub fn maximal_elements(n: u64) -> Vec<(Permutation, RectComposition)> {
    let n = usize::try_from(n).expect("n fits in usize");
    assert!(n >= 1);
    all_permutations(n)
        .into_iter()
        .map(|p| {
            let padded = padded_permutation(&p);
            (p, padded)
        })
        .collect()
}

/// The padded-matrix form of a permutation.
pub fn padded_permutation(p: &Permutation) -> RectComposition {
    let n = p.n();
    let mut matrix = vec![vec![0u64; n + 2]; n + 2];
    for (i, &v) in p.image().iter().enumerate() {
        matrix[i + 1][v] = 1;
    }
    RectComposition::from_matrix_unchecked(matrix)
}

/// The minimal elements: all 2x2 nonnegative matrices with entry sum `n`,
/// in canonical order. There are `C(n+3, 3)` of them.
pub fn minimal_elements(n: u64) -> Vec<RectComposition> {
    assert!(n >= 1, "compositions require n >= 1");
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                let d = n - a - b - c;
                out.push(RectComposition::from_matrix_unchecked(vec![
                    vec![a, b],
                    vec![c, d],
                ]));
            }
        }
    }
    out.sort_by(compare_canonical);
    out
}

/// Practical bound for whole-poset enumerations.
pub const ENUMERATION_MAX_N: u64 = 4;

/// All rectangular compositions of `n` in canonical order, by direct
/// enumeration over shapes. Guarded: the count grows too quickly past
/// `ENUMERATION_MAX_N` for exhaustive listing.
pub fn enumerate_rect(n: u64) -> Result<Vec<RectComposition>> {
    if n == 0 || n > ENUMERATION_MAX_N {
        return Err(Error::ResourceGuard {
            task: "rectangular composition enumeration",
            requested: n,
            max: ENUMERATION_MAX_N,
        });
    }
    let mut out = Vec::new();
    let side = usize::try_from(n).unwrap() + 2;
    for rows in 2..=side {
        for cols in 2..=side {
            visit_matrices(rows, cols, n, &mut |matrix| {
                if is_valid_rect(matrix) {
                    out.push(RectComposition::from_matrix_unchecked(matrix.to_vec()));
                }
            });
        }
    }
    out.sort_by(compare_canonical);
    Ok(out)
}

/// Calls `f` with every `rows x cols` nonnegative matrix of entry sum `total`.
pub(crate) fn visit_matrices(
    rows: usize,
    cols: usize,
    total: u64,
    f: &mut impl FnMut(&[Vec<u64>]),
) {
    fn fill(
        matrix: &mut Vec<Vec<u64>>,
        cell: usize,
        remaining: u64,
        cols: usize,
        f: &mut impl FnMut(&[Vec<u64>]),
    ) {
        let cells = matrix.len() * cols;
        if cell == cells {
            if remaining == 0 {
                f(matrix);
            }
            return;
        }
        let last = cell + 1 == cells;
        let choices = if last {
            remaining..=remaining
        } else {
            0..=remaining
        };
        for v in choices {
            matrix[cell / cols][cell % cols] = v;
            fill(matrix, cell + 1, remaining - v, cols, f);
        }
        matrix[cell / cols][cell % cols] = 0;
    }
    let mut matrix = vec![vec![0u64; cols]; rows];
    fill(&mut matrix, 0, total, cols, f);
}

pub(crate) fn is_valid_rect(matrix: &[Vec<u64>]) -> bool {
    let rows = matrix.len();
    let cols = matrix[0].len();
    (1..rows - 1).all(|i| matrix[i].iter().sum::<u64>() > 0)
        && (1..cols - 1).all(|j| matrix.iter().map(|row| row[j]).sum::<u64>() > 0)
}

/// Number of rectangular compositions with the given projections, i.e. of
/// nonnegative matrices with the given row and column sums, by exhaustive
/// contingency-table enumeration.
pub fn count_preimages(xc: &LinearComposition, yc: &LinearComposition) -> Result<u64> {
    if xc.n() != yc.n() {
        return Err(Error::MismatchedN {
            left: xc.n(),
            right: yc.n(),
        });
    }
    fn count(row_sums: &[u64], col_remaining: &mut Vec<u64>) -> u64 {
        let Some((&r, rest)) = row_sums.split_first() else {
            return u64::from(col_remaining.iter().all(|&c| c == 0));
        };
        // Distribute r over the columns without exceeding their budgets.
        fn rows(col_remaining: &mut Vec<u64>, j: usize, left: u64, rest: &[u64]) -> u64 {
            if j == col_remaining.len() {
                return if left == 0 {
                    count(rest, col_remaining)
                } else {
                    0
                };
            }
            let mut total = 0;
            let tail: u64 = col_remaining[j + 1..].iter().sum();
            let low = left.saturating_sub(tail);
            for v in low..=left.min(col_remaining[j]) {
                col_remaining[j] -= v;
                total += rows(col_remaining, j + 1, left - v, rest);
                col_remaining[j] += v;
            }
            total
        }
        rows(col_remaining, 0, r, rest)
    }
    let mut cols: Vec<u64> = yc.entries().to_vec();
    Ok(count(xc.entries(), &mut cols))
}

/// An `n`-point multiset in a closed coordinate rectangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multiset2D {
    rect: Rect,
    points: Vec<(Rat, Rat, u64)>,
}

/// A closed coordinate rectangle `[xl, xr] x [yb, yt]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rect {
    pub xl: Rat,
    pub xr: Rat,
    pub yb: Rat,
    pub yt: Rat,
}

impl Rect {
    pub fn new(xl: Rat, xr: Rat, yb: Rat, yt: Rat) -> Result<Self> {
        if xl >= xr || yb >= yt {
            return Err(Error::DegenerateInterval);
        }
        Ok(Rect { xl, xr, yb, yt })
    }

    pub fn unit() -> Self {
        Rect {
            xl: Rat::zero(),
            xr: Rat::one(),
            yb: Rat::zero(),
            yt: Rat::one(),
        }
    }

    pub fn contains(&self, x: Rat, y: Rat) -> bool {
        x >= self.xl && x <= self.xr && y >= self.yb && y <= self.yt
    }
}

impl Multiset2D {
    /// Builds a multiset, sorting points and merging duplicate coordinate
    /// pairs by adding multiplicities.
    pub fn new(rect: Rect, points: Vec<(Rat, Rat, u64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        let mut sorted = points;
        sorted.sort_by_key(|&(x, y, _)| (x, y));
        let mut merged: Vec<(Rat, Rat, u64)> = Vec::new();
        for (x, y, m) in sorted {
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            if !rect.contains(x, y) {
                return Err(Error::PointOutsideDomain);
            }
            match merged.last_mut() {
                Some((px, py, pm)) if *px == x && *py == y => *pm += m,
                _ => merged.push((x, y, m)),
            }
        }
        Ok(Multiset2D {
            rect,
            points: merged,
        })
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn points(&self) -> &[(Rat, Rat, u64)] {
        &self.points
    }

    pub fn n(&self) -> u64 {
        self.points.iter().map(|&(_, _, m)| m).sum()
    }

    /// The horizontal projection: x coordinates with multiplicities.
    pub fn re(&self) -> crate::linear::Multiset1D {
        let points = self.points.iter().map(|&(x, _, m)| (x, m)).collect();
        crate::linear::Multiset1D::new((self.rect.xl, self.rect.xr), points)
            .expect("projection of a valid multiset is valid")
    }

    /// The vertical projection: y coordinates with multiplicities.
    pub fn im(&self) -> crate::linear::Multiset1D {
        let points = self.points.iter().map(|&(_, y, m)| (y, m)).collect();
        crate::linear::Multiset1D::new((self.rect.yb, self.rect.yt), points)
            .expect("projection of a valid multiset is valid")
    }

    /// The multiplicity matrix: rows indexed by `{xl}`, the distinct interior
    /// x values, and `{xr}`; columns likewise for y; entries the multiplicity
    /// of each grid point.
    pub fn composition(&self) -> RectComposition {
        let mut xs: Vec<Rat> = vec![self.rect.xl];
        let mut ys: Vec<Rat> = vec![self.rect.yb];
        for &(x, y, _) in &self.points {
            if x > self.rect.xl && x < self.rect.xr && !xs.contains(&x) {
                xs.push(x);
            }
            if y > self.rect.yb && y < self.rect.yt && !ys.contains(&y) {
                ys.push(y);
            }
        }
        xs.push(self.rect.xr);
        ys.push(self.rect.yt);
        xs.sort();
        ys.sort();
        let mut matrix = vec![vec![0u64; ys.len()]; xs.len()];
        for &(x, y, m) in &self.points {
            let i = xs.iter().position(|&v| v == x).expect("x is indexed");
            let j = ys.iter().position(|&v| v == y).expect("y is indexed");
            matrix[i][j] += m;
        }
        RectComposition::from_matrix_unchecked(matrix)
    }
}

/// Edge direction in a spine grid.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Dir {
    Row,
    Col,
}

impl Dir {
    pub fn as_str(&self) -> &'static str {
        match self {
            Dir::Row => "row",
            Dir::Col => "col",
        }
    }
}

/// An edge of a bi-orthoscheme spine, anchored at grid vertex `at` and running
/// toward the next cut in direction `dir`. `weight` is the squared length in
/// units of the squared side length of the corresponding factor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpineEdge {
    pub at: (usize, usize),
    pub dir: Dir,
    pub color: Color,
    pub weight: u64,
}

impl SpineEdge {
    pub fn endpoints(&self) -> ((usize, usize), (usize, usize)) {
        let (i, j) = self.at;
        match self.dir {
            Dir::Row => ((i, j), (i + 1, j)),
            Dir::Col => ((i, j), (i, j + 1)),
        }
    }

    /// Exact squared length given the side lengths of the rectangle.
    pub fn sq_length(&self, unit_i: Rat, unit_j: Rat) -> Rat {
        let unit = match self.dir {
            Dir::Row => unit_i,
            Dir::Col => unit_j,
        };
        Rat::from(self.weight) * unit * unit
    }
}

/// The spine of a bi-orthoscheme: a grid of 2x2 block-sum vertices, the edges
/// between consecutive cuts, and one rectangular face per grid square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpineComplex {
    grid: Vec<Vec<[[u64; 2]; 2]>>,
    edges: Vec<SpineEdge>,
    faces: Vec<(usize, usize)>,
}

impl SpineComplex {
    pub fn grid(&self) -> &[Vec<[[u64; 2]; 2]>] {
        &self.grid
    }

    pub fn grid_shape(&self) -> (usize, usize) {
        (self.grid.len(), self.grid[0].len())
    }

    pub fn vertex(&self, i: usize, j: usize) -> [[u64; 2]; 2] {
        self.grid[i][j]
    }

    pub fn vertex_key(&self, i: usize, j: usize) -> String {
        let [[a, b], [c, d]] = self.grid[i][j];
        format!("{a} {b} / {c} {d}")
    }

    pub fn vertex_count(&self) -> usize {
        self.grid.len() * self.grid[0].len()
    }

    pub fn edges(&self) -> &[SpineEdge] {
        &self.edges
    }

    pub fn faces(&self) -> &[(usize, usize)] {
        &self.faces
    }

    /// The colors of the four edges around the unit face anchored at `(i, j)`:
    /// the two row-direction edges, then the two column-direction edges.
    pub fn face_edge_colors(&self, i: usize, j: usize) -> [Color; 4] {
        let find = |at: (usize, usize), dir: Dir| {
            self.edges
                .iter()
                .find(|e| e.at == at && e.dir == dir)
                .expect("face edges exist")
                .color
        };
        [
            find((i, j), Dir::Row),
            find((i, j + 1), Dir::Row),
            find((i, j), Dir::Col),
            find((i + 1, j), Dir::Col),
        ]
    }

    /// Faces whose four edges use four distinct colors; for a top-dimensional
    /// spine these sit exactly at the points of the underlying multiset.
    pub fn four_colored_faces(&self) -> Vec<(usize, usize)> {
        self.faces
            .iter()
            .copied()
            .filter(|&(i, j)| {
                let mut colors = self.face_edge_colors(i, j).to_vec();
                colors.sort();
                colors.dedup();
                colors.len() == 4 && !colors.contains(&Color::Mixed)
            })
            .collect()
    }
}

/// Groups every codimension-1 face of the maximal cells by the merged matrix,
/// returning for each face the list of (permutation key, merge tag) parents.
/// Shared faces (two parents) are exactly the dual-graph edges.
pub fn maximal_facet_parents(n: u64) -> BTreeMap<Vec<Vec<u64>>, Vec<(String, MergeTag)>> {
    let mut facets: BTreeMap<Vec<Vec<u64>>, Vec<(String, MergeTag)>> = BTreeMap::new();
    for (p, m) in maximal_elements(n) {
        for i in 1..m.rows() {
            let merged = m.row_merge(i).expect("wide enough");
            facets
                .entry(merged.matrix().to_vec())
                .or_default()
                .push((p.key(), MergeTag::Row(i)));
        }
        for j in 1..m.cols() {
            let merged = m.col_merge(j).expect("tall enough");
            facets
                .entry(merged.matrix().to_vec())
                .or_default()
                .push((p.key(), MergeTag::Col(j)));
        }
    }
    facets
}
