//! Closed-form quantities for graph powers: the tree count `f(k, Δ)`,
//! chromatic numbers of powers of paths and cycles, palette sizes of the two
//! coloring procedures, and the k-gap.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("parameter constraint violated: {0}")]
    Parameters(String),
}

/// Number of non-root nodes of a tree of height `k` whose root has `delta`
/// children and whose other internal nodes have `delta - 1` children:
/// `delta * sum_{i<k} (delta-1)^i`. Also the largest possible degree of
/// `G^k` when `Δ(G) = delta`.
///
/// Summed term by term, so `delta = 2` gives `2k`.
pub fn f(k: usize, delta: usize) -> BigUint {
    let base = BigUint::from(delta.saturating_sub(1));
    let mut term = BigUint::one();
    let mut sum = BigUint::zero();
    for _ in 0..k {
        sum += &term;
        term *= &base;
    }
    sum * BigUint::from(delta)
}

/// [`f`] as a machine word, when it fits.
pub fn f_usize(k: usize, delta: usize) -> Option<usize> {
    f(k, delta).to_usize()
}

/// `χ(P_n^k) = min(n, k + 1)`.
pub fn chi_path_power(n: usize, k: usize) -> usize {
    n.min(k + 1)
}

/// `χ(C_n^k)`: `n` when the power is a clique, otherwise `k + 1 + ⌈r/q⌉`
/// with `n = q(k+1) + r`, `0 <= r <= k`.
pub fn chi_cycle_power(n: usize, k: usize) -> usize {
    if n <= k + 1 {
        return n;
    }
    let (q, r) = (n / (k + 1), n % (k + 1));
    k + 1 + r.div_ceil(q)
}

/// Palette of the path-precoloring procedure: `f(k, Δ) + 3 - k`.
pub fn palette_main(k: usize, delta: usize) -> Result<BigUint, BoundsError> {
    if k < 3 || delta < 3 {
        return Err(BoundsError::Parameters(format!(
            "main palette needs k >= 3 and delta >= 3 (k={k}, delta={delta})"
        )));
    }
    Ok(f(k, delta) + 3u32 - BigUint::from(k))
}

/// Largest `s` admissible for the ball-precoloring procedure,
/// `⌊(k-5)/12⌋`, or `None` when it would be zero.
pub fn max_improved_s(k: usize) -> Option<usize> {
    let s = k.checked_sub(5)? / 12;
    (s >= 1).then_some(s)
}

/// Palette of the ball-precoloring procedure: `f(k, Δ) - f(s, Δ)`.
pub fn palette_improved(k: usize, delta: usize, s: usize) -> Result<BigUint, BoundsError> {
    if delta < 3 || s < 1 || 12 * s + 5 > k {
        return Err(BoundsError::Parameters(format!(
            "improved palette needs delta >= 3 and 1 <= s <= (k-5)/12 (k={k}, delta={delta}, s={s})"
        )));
    }
    Ok(f(k, delta) - f(s, delta))
}

/// Number of colors the ball-precoloring procedure spares below
/// `f(k, Δ) + 1`, i.e. `f(s, Δ) + 1` at the largest admissible `s`.
pub fn improved_saving(k: usize, delta: usize) -> Option<BigUint> {
    max_improved_s(k).map(|s| f(s, delta) + 1u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    pub k: usize,
    pub delta: usize,
    pub chi: usize,
    /// `f(k, delta) + 1 - chi`, kept signed and unbounded.
    pub gap: BigInt,
}

impl GapRecord {
    pub fn new(k: usize, delta: usize, chi: usize) -> Self {
        let gap = BigInt::from(f(k, delta)) + 1 - BigInt::from(chi);
        GapRecord { k, delta, chi, gap }
    }
}

/// The k-gap of `g` given `chi = χ(g^k)`.
pub fn gap(g: &Graph, k: usize, chi: usize) -> GapRecord {
    GapRecord::new(k, g.max_degree(), chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn f_reference_values() {
        assert_eq!(f(3, 4), BigUint::from(52u32));
        assert_eq!(f(2, 3), BigUint::from(9u32));
        for delta in 2..8 {
            assert_eq!(f(1, delta), BigUint::from(delta));
        }
        assert_eq!(f(3, 2), BigUint::from(6u32));
        assert_eq!(f(2, 2), BigUint::from(4u32));
        assert_eq!(f(0, 5), BigUint::zero());
    }

    #[test]
    fn f_matches_tree_size() {
        for delta in 2..6 {
            for k in 0..5 {
                let tree = generators::dary_tree(delta, k).unwrap();
                assert_eq!(f_usize(k, delta).unwrap() + 1, tree.vertex_count());
            }
        }
    }

    #[test]
    fn path_and_cycle_formulas() {
        assert_eq!(chi_path_power(5, 2), 3);
        assert_eq!(chi_path_power(3, 7), 3);
        assert_eq!(chi_path_power(12, 3), 4);
        assert_eq!(chi_cycle_power(7, 2), 4);
        assert_eq!(chi_cycle_power(10, 3), 5);
        assert_eq!(chi_cycle_power(4, 3), 4);
        // r = 0
        assert_eq!(chi_cycle_power(9, 2), 3);
    }

    #[test]
    fn palettes() {
        assert_eq!(palette_main(3, 3).unwrap(), BigUint::from(21u32));
        assert_eq!(palette_main(4, 3).unwrap(), BigUint::from(44u32));
        assert_eq!(
            palette_improved(17, 3, 1).unwrap(),
            BigUint::from(393_210u32)
        );
        assert!(palette_main(2, 3).is_err());
        assert!(palette_main(3, 2).is_err());
        assert!(palette_improved(20, 3, 2).is_err());
        assert!(palette_improved(16, 3, 1).is_err());
        assert!(palette_improved(17, 3, 0).is_err());
    }

    #[test]
    fn admissible_s() {
        assert_eq!(max_improved_s(16), None);
        assert_eq!(max_improved_s(17), Some(1));
        assert_eq!(max_improved_s(28), Some(1));
        assert_eq!(max_improved_s(29), Some(2));
        assert_eq!(max_improved_s(3), None);
    }

    #[test]
    fn gap_records() {
        let p = generators::petersen();
        assert_eq!(gap(&p, 2, 10).gap, BigInt::zero());
        let p12 = generators::path(12).unwrap();
        assert_eq!(gap(&p12, 3, 4).gap, BigInt::from(3));
        let rec = GapRecord::new(5, 4, f_usize(5, 4).unwrap() + 1);
        assert_eq!(rec.gap, BigInt::zero());
    }
}
