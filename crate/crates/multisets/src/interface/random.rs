//! Deterministic random multisets for testing and exploration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rat;
use crate::rectangular::{Multiset2D, Rect};
use crate::{Error, Result};

/// How to sample: `Generic` draws pairwise-distinct interior coordinates, so
/// the multiplicity matrix is a padded permutation matrix; `Grid` samples an
/// arbitrary multiplicity matrix and realizes it on a coordinate grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RandomMode {
    Generic,
    Grid,
}

/// Samples an `n`-point multiset in `rect`, deterministically for a fixed
/// seed.
pub fn random_multiset2d(n: u64, seed: u64, rect: Rect, mode: RandomMode) -> Result<Multiset2D> {
    if n == 0 {
        return Err(Error::EmptyMultiset);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        RandomMode::Generic => generic(n, rect, &mut rng),
        RandomMode::Grid => grid(n, rect, &mut rng),
    }
}

/// Interior coordinate at fraction `num / den` across `[lo, hi]`.
fn lerp(lo: Rat, hi: Rat, num: u64, den: u64) -> Rat {
    lo + (hi - lo) * Rat::from(num) / Rat::from(den)
}

fn generic(n: u64, rect: Rect, rng: &mut ChaCha8Rng) -> Result<Multiset2D> {
    let den = 4 * n;
    let mut fractions: Vec<u64> = (1..den).collect();
    fractions.shuffle(rng);
    let mut xs: Vec<u64> = fractions[..n as usize].to_vec();
    xs.sort_unstable();
    fractions.shuffle(rng);
    let mut ys: Vec<u64> = fractions[..n as usize].to_vec();
    ys.sort_unstable();
    ys.shuffle(rng); // pair sorted x's with y's in random order
    let points = xs
        .into_iter()
        .zip(ys)
        .map(|(fx, fy)| {
            (
                lerp(rect.xl, rect.xr, fx, den),
                lerp(rect.yb, rect.yt, fy, den),
                1u64,
            )
        })
        .collect();
    Multiset2D::new(rect, points)
}

fn grid(n: u64, rect: Rect, rng: &mut ChaCha8Rng) -> Result<Multiset2D> {
    for _ in 0..100_000 {
        let h = rng.random_range(0..=n) as usize;
        let k = rng.random_range(0..=n) as usize;
        let rows = h + 2;
        let cols = k + 2;
        let mut matrix = vec![vec![0u64; cols]; rows];
        for _ in 0..n {
            let cell = rng.random_range(0..rows * cols);
            matrix[cell / cols][cell % cols] += 1;
        }
        if !crate::rectangular::is_valid_rect(&matrix) {
            continue;
        }
        let mut points = Vec::new();
        for (i, row) in matrix.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    let x = match i {
                        0 => rect.xl,
                        _ if i == rows - 1 => rect.xr,
                        _ => lerp(rect.xl, rect.xr, i as u64, rows as u64 - 1),
                    };
                    let y = match j {
                        0 => rect.yb,
                        _ if j == cols - 1 => rect.yt,
                        _ => lerp(rect.yb, rect.yt, j as u64, cols as u64 - 1),
                    };
                    points.push((x, y, m));
                }
            }
        }
        return Multiset2D::new(rect, points);
    }
    Err(Error::MalformedInput(
        "grid sampling failed to produce a valid multiplicity matrix".to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_is_deterministic() {
        let a = random_multiset2d(5, 42, Rect::unit(), RandomMode::Generic).unwrap();
        let b = random_multiset2d(5, 42, Rect::unit(), RandomMode::Generic).unwrap();
        assert_eq!(a, b);
        let c = random_multiset2d(5, 43, Rect::unit(), RandomMode::Generic).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn generic_mode_gives_padded_permutation_shape() {
        for seed in 0..20 {
            let z = random_multiset2d(4, seed, Rect::unit(), RandomMode::Generic).unwrap();
            let comp = z.composition();
            assert_eq!(comp.shape(), (6, 6));
            assert_eq!(comp.n(), 4);
        }
    }

    #[test]
    fn grid_mode_hits_every_cell_of_the_square() {
        // The nine cells of a 1-point multiset space, reachable by sampling.
        let mut shapes = std::collections::BTreeSet::new();
        for seed in 0..200 {
            let z = random_multiset2d(1, seed, Rect::unit(), RandomMode::Grid).unwrap();
            let c = z.composition();
            let pos: Vec<(usize, usize)> = c
                .matrix()
                .iter()
                .enumerate()
                .flat_map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(_, &e)| e > 0)
                        .map(move |(j, _)| (i, j))
                })
                .collect();
            shapes.insert((c.shape(), pos));
        }
        assert_eq!(shapes.len(), 9);
    }

    #[test]
    fn zero_points_rejected() {
        assert!(random_multiset2d(0, 1, Rect::unit(), RandomMode::Generic).is_err());
    }
}
