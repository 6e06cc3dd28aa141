use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Optional color per vertex, colors in `0..palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialColoring {
    colors: Vec<Option<usize>>,
    palette_size: usize,
}

impl PartialColoring {
    pub fn new(vertices: usize, palette_size: usize) -> Self {
        PartialColoring {
            colors: vec![None; vertices],
            palette_size,
        }
    }

    pub fn from_colors(colors: Vec<usize>, palette_size: usize) -> Self {
        assert!(
            colors.iter().all(|&c| c < palette_size),
            "color outside palette"
        );
        PartialColoring {
            colors: colors.into_iter().map(Some).collect(),
            palette_size,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, color: usize) {
        assert!(
            color < self.palette_size,
            "color {color} outside palette of size {}",
            self.palette_size
        );
        self.colors[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().flatten().count()
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette_size];
        self.colors.iter().flatten().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.colors
    }

    /// Restriction to vertices `0..count`.
    pub fn truncated(&self, count: usize) -> PartialColoring {
        PartialColoring {
            colors: self.colors[..count].to_vec(),
            palette_size: self.palette_size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
}

/// Two vertices within distance `k` sharing a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub distance: usize,
    pub color: usize,
}

/// Checks that `coloring` is proper on `g^k`. Every vertex of `g` must be
/// colored; extra entries past `g`'s vertex count are ignored. Each
/// conflicting pair is reported once with `u < v`.
pub fn verify_coloring(
    g: &Graph,
    k: usize,
    coloring: &PartialColoring,
) -> Result<Vec<Violation>, VerifyError> {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| coloring.get(v).is_none()) {
        return Err(VerifyError::Uncolored(v));
    }
    let mut violations = Vec::new();
    for u in 0..n {
        let table = g.bfs_bounded(u, k);
        let cu = coloring.get(u);
        for v in u + 1..n {
            if let Some(distance) = table.get(v) {
                if coloring.get(v) == cu {
                    violations.push(Violation {
                        u,
                        v,
                        distance,
                        color: cu.unwrap(),
                    });
                }
            }
        }
    }
    Ok(violations)
}
