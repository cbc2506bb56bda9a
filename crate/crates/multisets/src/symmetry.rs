//! Permutations of `[n]`, their matrices, and Cayley graphs over the adjacent
//! transpositions.
//!
//! A permutation is a bijection between a left and a right copy of
//! `{1, .., n}`. Writing `f` for the underlying left-to-right function, the
//! *right action* sends `i` to `i·pi = f(i)` and the *left action* sends `i`
//! to `pi·i = f^{-1}(i)`; the two actions are mutually inverse as functions of
//! the point. One-line image form is the canonical representation; cycle
//! notation is accepted as parser input only.

use crate::graph::{EdgeTag, LabeledMultigraph, Side};
use crate::{Error, Result};

/// A permutation of `{1, .., n}` in one-line form: `image[i-1]` is `i·pi`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations are defined on [n] with n >= 1");
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line image, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n {
                return Err(Error::NotABijection { value: v, n });
            }
            if seen[v - 1] {
                return Err(Error::NotABijection { value: v, n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// The adjacent transposition `sigma_i = (i i+1)`, `1 <= i <= n-1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i + 1 > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(i - 1, i);
        Ok(Permutation { image })
    }

    /// Builds a permutation from disjoint cycles; the cycle `(a b c)` sends
    /// `a` on the left to `b` on the right, `b` to `c`, and `c` back to `a`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut image: Vec<Option<usize>> = vec![None; n];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                let b = cycle[(pos + 1) % cycle.len()];
                if a < 1 || a > n || b < 1 || b > n {
                    return Err(Error::NotABijection { value: a.max(b), n });
                }
                if image[a - 1].is_some() {
                    return Err(Error::OverlappingCycles { value: a });
                }
                image[a - 1] = Some(b);
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(idx, v)| v.unwrap_or(idx + 1))
            .collect();
        Permutation::from_image(image)
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::BadCycleNotation(text.to_string()));
            };
            let Some(end) = stripped.find(')') else {
                return Err(Error::BadCycleNotation(text.to_string()));
            };
            let body = &stripped[..end];
            let entries: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::BadCycleNotation(text.to_string()))
                })
                .collect::<Result<_>>()?;
            if !entries.is_empty() {
                cycles.push(entries);
            }
            rest = stripped[end + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// The right action `i·pi`.
    pub fn act_right(&self, i: usize) -> Result<usize> {
        if i < 1 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n(),
            });
        }
        Ok(self.image[i - 1])
    }

    /// The left action `pi·i`, i.e. the preimage of `i` under the function
    /// realized by this permutation.
    pub fn act_left(&self, i: usize) -> Result<usize> {
        if i < 1 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n(),
            });
        }
        Ok(self
            .image
            .iter()
            .position(|&v| v == i)
            .expect("bijection has a preimage")
            + 1)
    }

    /// Composition `pi q` acting left to right: `i·(pi q) = (i·pi)·q`, so the
    /// matrix of the result is `M_pi · M_q`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let image = self.image.iter().map(|&v| other.image[v - 1]).collect();
        Ok(Permutation { image })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    /// Canonical vertex key: the one-line form, space separated.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }

    pub fn matrix(&self) -> PermutationMatrix {
        let n = self.n();
        let mut entries = vec![vec![0u8; n]; n];
        for (i, &v) in self.image.iter().enumerate() {
            entries[i][v - 1] = 1;
        }
        PermutationMatrix { entries }
    }

    /// Left action on a coordinate tuple: `sigma·x = (x_{sigma·1}, .., x_{sigma·n})`.
    /// Display utility only; quotient computations sort coordinates instead.
    pub fn act_left_tuple<T: Clone>(&self, coords: &[T]) -> Result<Vec<T>> {
        if coords.len() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: coords.len(),
            });
        }
        (1..=self.n())
            .map(|j| Ok(coords[self.act_left(j)? - 1].clone()))
            .collect()
    }

    /// Right action on a coordinate tuple, listed in the reversed order of the
    /// defining convention: `x·sigma = (x_{n·sigma}, .., x_{1·sigma})`.
    /// Display utility only.
    pub fn act_right_tuple<T: Clone>(&self, coords: &[T]) -> Result<Vec<T>> {
        if coords.len() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: coords.len(),
            });
        }
        (1..=self.n())
            .rev()
            .map(|j| Ok(coords[self.act_right(j)? - 1].clone()))
            .collect()
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.key())
    }
}

/// The 0/1 matrix of a permutation: entry `(i, j)` is 1 exactly when
/// `i·pi = j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationMatrix {
    entries: Vec<Vec<u8>>,
}

impl PermutationMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i - 1][j - 1]
    }

    pub fn to_permutation(&self) -> Permutation {
        let image = self
            .entries
            .iter()
            .map(|row| row.iter().position(|&e| e == 1).expect("one 1 per row") + 1)
            .collect();
        Permutation { image }
    }

    /// Swapping rows `i` and `i+1` yields the matrix of `sigma_i pi`.
    pub fn swap_rows(&self, i: usize) -> Result<PermutationMatrix> {
        if i < 1 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n() - 1,
            });
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(PermutationMatrix { entries })
    }

    /// Swapping columns `i` and `i+1` yields the matrix of `pi sigma_i`.
    pub fn swap_cols(&self, i: usize) -> Result<PermutationMatrix> {
        if i < 1 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n() - 1,
            });
        }
        let mut entries = self.entries.clone();
        for row in &mut entries {
            row.swap(i - 1, i);
        }
        Ok(PermutationMatrix { entries })
    }
}

impl std::fmt::Display for PermutationMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.entries {
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All permutations of `[n]` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation {
                image: prefix.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Which Cayley graph of the symmetric group to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CayleySide {
    Left,
    Right,
}

/// The left or right Cayley graph of the symmetric group over the adjacent
/// transpositions: one vertex per permutation, and for each `pi` and each
/// `i in [n-1]` one undirected edge `{pi, sigma_i pi}` (left) or
/// `{pi, pi sigma_i}` (right).
pub fn cayley_graph(n: usize, side: CayleySide) -> LabeledMultigraph<EdgeTag> {
    assert!(n >= 1, "the symmetric group acts on [n] with n >= 1");
    let perms = all_permutations(n);
    let vertices: Vec<String> = perms.iter().map(Permutation::key).collect();
    let mut edges = Vec::new();
    for pi in &perms {
        for i in 1..n {
            let sigma = Permutation::adjacent_transposition(n, i).expect("i in range");
            let (neighbor, tag) = match side {
                CayleySide::Left => (
                    sigma.compose(pi).expect("equal n"),
                    EdgeTag::new(Side::Left, i),
                ),
                CayleySide::Right => (
                    pi.compose(&sigma).expect("equal n"),
                    EdgeTag::new(Side::Right, i),
                ),
            };
            // Each undirected edge is visited from both endpoints; keep one.
            if pi.key() < neighbor.key() {
                edges.push((pi.key(), neighbor.key(), tag));
            }
        }
    }
    LabeledMultigraph::new(vertices, edges).expect("endpoints are permutations of [n]")
}

/// The overlay of the left and right Cayley graphs on the common vertex set,
/// keeping both labels; parallel edges are retained.
pub fn overlay_lr(n: usize) -> LabeledMultigraph<EdgeTag> {
    let left = cayley_graph(n, CayleySide::Left);
    let right = cayley_graph(n, CayleySide::Right);
    let vertices = left.vertices().to_vec();
    let mut edges: Vec<(String, String, EdgeTag)> = Vec::new();
    for (u, v, l) in left.edges().chain(right.edges()) {
        edges.push((u.to_string(), v.to_string(), *l));
    }
    LabeledMultigraph::new(vertices, edges).expect("same vertex set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(n: usize, i: usize) -> Permutation {
        Permutation::adjacent_transposition(n, i).unwrap()
    }

    /// The 5x5 permutation whose matrix has rows e4, e1, e5, e2, e3.
    fn pi5() -> Permutation {
        Permutation::from_image(vec![4, 1, 5, 2, 3]).unwrap()
    }

    fn rows(m: &PermutationMatrix) -> Vec<Vec<u8>> {
        m.entries().to_vec()
    }

    #[test]
    fn compose_involution_and_identity() {
        let s1 = sigma(3, 1);
        assert_eq!(s1.compose(&s1).unwrap(), Permutation::identity(3));
        let p = Permutation::from_image(vec![3, 1, 2]).unwrap();
        assert_eq!(Permutation::identity(3).compose(&p).unwrap(), p);
        assert_eq!(p.compose(&Permutation::identity(3)).unwrap(), p);
    }

    #[test]
    fn compose_size_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(
            p.compose(&q),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn five_by_five_products() {
        // sigma_2 acting on the left swaps rows 2 and 3.
        let left = sigma(5, 2).compose(&pi5()).unwrap();
        assert_eq!(
            rows(&left.matrix()),
            vec![
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 1, 0, 0],
            ]
        );
        assert_eq!(left.matrix(), pi5().matrix().swap_rows(2).unwrap());

        // sigma_2 acting on the right swaps columns 2 and 3.
        let right = pi5().compose(&sigma(5, 2)).unwrap();
        assert_eq!(
            rows(&right.matrix()),
            vec![
                vec![0, 0, 0, 1, 0],
                vec![1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 1, 0, 0],
                vec![0, 1, 0, 0, 0],
            ]
        );
        assert_eq!(right.matrix(), pi5().matrix().swap_cols(2).unwrap());
    }

    #[test]
    fn actions_on_a_three_cycle() {
        let p = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        assert_eq!(p.act_left(2).unwrap(), 1);
        assert_eq!(p.act_right(2).unwrap(), 3);
        assert_eq!(Permutation::identity(4).act_left(3).unwrap(), 3);
        assert_eq!(Permutation::identity(4).act_right(3).unwrap(), 3);
        assert_eq!(sigma(2, 1).act_left(1).unwrap(), 2);
        assert_eq!(sigma(2, 1).act_right(1).unwrap(), 2);
        assert!(p.act_left(4).is_err());
        assert!(p.act_right(0).is_err());
    }

    #[test]
    fn actions_are_mutually_inverse() {
        for p in all_permutations(5) {
            for i in 1..=5 {
                assert_eq!(p.act_right(p.act_left(i).unwrap()).unwrap(), i);
            }
        }
    }

    #[test]
    fn swap_laws_exhaustive() {
        for n in 1..=5 {
            for p in all_permutations(n) {
                for i in 1..n {
                    let s = sigma(n, i);
                    assert_eq!(
                        s.compose(&p).unwrap().matrix(),
                        p.matrix().swap_rows(i).unwrap()
                    );
                    assert_eq!(
                        p.compose(&s).unwrap().matrix(),
                        p.matrix().swap_cols(i).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn swap_rows_is_an_involution() {
        let m = pi5().matrix();
        assert_eq!(m.swap_rows(2).unwrap().swap_rows(2).unwrap(), m);
        assert!(m.swap_rows(5).is_err());
        assert!(m.swap_rows(0).is_err());
    }

    #[test]
    fn cycle_parser() {
        let p = Permutation::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.image(), &[2, 3, 1, 5, 4]);
        assert_eq!(
            Permutation::parse_cycles(3, "()").unwrap(),
            Permutation::identity(3)
        );
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for p in all_permutations(4) {
            assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(4));
            assert_eq!(p.inverse().inverse(), p);
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_image(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_image(vec![0, 1]).is_err());
        assert!(Permutation::from_image(vec![1, 4, 2]).is_err());
        assert!(Permutation::from_image(vec![]).is_err());
    }

    #[test]
    fn tuple_actions_verbatim() {
        // sigma·x lists x_{sigma·1}, .., x_{sigma·n}.
        let p = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let x = ["a", "b", "c"];
        // act_left(p, j): 1 -> 3, 2 -> 1, 3 -> 2.
        assert_eq!(p.act_left_tuple(&x).unwrap(), vec!["c", "a", "b"]);
        // x·sigma lists x_{n·sigma}, .., x_{1·sigma} (reversed convention).
        // act_right: 1 -> 2, 2 -> 3, 3 -> 1.
        assert_eq!(p.act_right_tuple(&x).unwrap(), vec!["a", "c", "b"]);
    }

    #[test]
    fn cayley_graph_counts() {
        let g = cayley_graph(2, CayleySide::Left);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let (u, v, l) = g.edges().next().unwrap();
        assert_eq!((u, v, l.to_string().as_str()), ("1 2", "2 1", "L1"));

        let right3 = cayley_graph(3, CayleySide::Right);
        assert_eq!(right3.vertex_count(), 6);
        assert_eq!(right3.edge_count(), 6);
        assert!(right3.degrees().iter().all(|&d| d == 2));
        assert!(right3.is_connected()); // degree 2 and connected: a 6-cycle

        for side in [CayleySide::Left, CayleySide::Right] {
            let g4 = cayley_graph(4, side);
            assert_eq!(g4.vertex_count(), 24);
            assert_eq!(g4.edge_count(), 36);
            assert!(g4.degrees().iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn cayley_edge_count_formula() {
        for n in 1..=5 {
            let g = cayley_graph(n, CayleySide::Left);
            let expected = factorial(n) * (n - 1);
            assert_eq!(2 * g.edge_count(), expected);
        }
        fn factorial(n: usize) -> usize {
            (1..=n).product()
        }
    }

    #[test]
    fn overlay_counts_and_degrees() {
        let g1 = overlay_lr(1);
        assert_eq!((g1.vertex_count(), g1.edge_count()), (1, 0));

        let g2 = overlay_lr(2);
        assert_eq!((g2.vertex_count(), g2.edge_count()), (2, 2));

        let g3 = overlay_lr(3);
        assert_eq!((g3.vertex_count(), g3.edge_count()), (6, 12));
        assert!(g3.degrees().iter().all(|&d| d == 4)); // 2(n-1) with parallels
    }
}
