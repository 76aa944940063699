//! Sperner labelings of the triangulation vertices and cell color counts.
//!
//! A labeling assigns each vertex a color in `{1, ..., k}`; the Sperner
//! condition forbids color i wherever the i-th coordinate vanishes. The
//! first-choice labeling picks the smallest positive coordinate index and
//! attains the closed-form upper bound on non-monochromatic cells.

use serde::{Deserialize, Serialize};

use crate::lattice::{LatticePoint, VertexId, VertexTable};
use crate::triangulation::{Cell, Triangulation};
use crate::{Error, Result};

/// A total color assignment, stored densely in vertex-id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    colors: Vec<u8>,
}

impl Labeling {
    pub fn new(colors: Vec<u8>) -> Self {
        Self { colors }
    }

    pub fn color(&self, v: VertexId) -> u8 {
        self.colors[v.0]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// The colors a vertex may legally receive: 1-based indices of its positive
/// coordinates. Never empty since the coordinates sum to q >= 1.
pub fn allowed_colors(v: &LatticePoint) -> Vec<u8> {
    v.coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, _)| (i + 1) as u8)
        .collect()
}

/// True when the labeling is total on the table and every color is allowed.
pub fn is_sperner(table: &VertexTable, labeling: &Labeling) -> bool {
    check_sperner(table, labeling).is_ok()
}

fn check_sperner(table: &VertexTable, labeling: &Labeling) -> Result<()> {
    if labeling.len() != table.len() {
        return Err(Error::LabelingSize {
            expected: table.len(),
            got: labeling.len(),
        });
    }
    for (i, (point, &color)) in table.points().iter().zip(labeling.colors()).enumerate() {
        let ok = color >= 1
            && (color as usize) <= table.k()
            && point.coords()[color as usize - 1] > 0;
        if !ok {
            return Err(Error::NotSperner { vertex: i, color });
        }
    }
    Ok(())
}

/// The first-choice labeling: each vertex takes the smallest index of a
/// positive coordinate. Sperner by construction.
pub fn first_choice(table: &VertexTable) -> Labeling {
    let colors = table
        .points()
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .position(|&c| c > 0)
                .map(|i| (i + 1) as u8)
                .expect("coordinates sum to q >= 1")
        })
        .collect();
    Labeling::new(colors)
}

fn cell_color_mask(cell: &Cell, labeling: &Labeling) -> u16 {
    cell.ids()
        .iter()
        .fold(0u16, |m, &id| m | 1 << (labeling.color(id) - 1))
}

/// Number of cells carrying at least two distinct colors. Rejects labelings
/// that are not Sperner; this is the trusted oracle the search is checked
/// against, so it recomputes from scratch.
pub fn count_nonmono(t: &Triangulation, labeling: &Labeling) -> Result<usize> {
    check_sperner(t.vertices(), labeling)?;
    Ok(t.cells()
        .iter()
        .filter(|c| cell_color_mask(c, labeling).count_ones() >= 2)
        .count())
}

/// Number of cells whose vertex color set has size at least `j`. At j=1 this
/// is the cell count; at j=2 it matches [`count_nonmono`].
pub fn count_cells_with_at_least(t: &Triangulation, labeling: &Labeling, j: usize) -> Result<usize> {
    if j < 1 || j > t.k() {
        return Err(Error::ColorThreshold { j, k: t.k() });
    }
    if labeling.len() != t.vertices().len() {
        return Err(Error::LabelingSize {
            expected: t.vertices().len(),
            got: labeling.len(),
        });
    }
    Ok(t.cells()
        .iter()
        .filter(|c| cell_color_mask(c, labeling).count_ones() as usize >= j)
        .count())
}

/// Distinct-color counts per cell plus their aggregate histogram;
/// `histogram[c-1]` is the number of cells showing exactly c colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorCount {
    pub per_cell: Vec<u8>,
    pub histogram: Vec<usize>,
}

pub fn color_counts(t: &Triangulation, labeling: &Labeling) -> Result<ColorCount> {
    if labeling.len() != t.vertices().len() {
        return Err(Error::LabelingSize {
            expected: t.vertices().len(),
            got: labeling.len(),
        });
    }
    let per_cell: Vec<u8> = t
        .cells()
        .iter()
        .map(|c| cell_color_mask(c, labeling).count_ones() as u8)
        .collect();
    let mut histogram = vec![0usize; t.k()];
    for &c in &per_cell {
        histogram[c as usize - 1] += 1;
    }
    Ok(ColorCount { per_cell, histogram })
}

/// Size of the full Sperner labeling space, saturating at `u128::MAX`.
pub fn labeling_space_size(table: &VertexTable) -> u128 {
    table.points().iter().fold(1u128, |acc, p| {
        acc.saturating_mul(allowed_colors(p).len() as u128)
    })
}

/// Visits every Sperner labeling once, counting through the per-vertex
/// allowed color sets in vertex-id order (earlier vertices most significant).
pub fn for_each_sperner_labeling(table: &VertexTable, mut f: impl FnMut(&Labeling)) {
    let allowed: Vec<Vec<u8>> = table.points().iter().map(allowed_colors).collect();
    let mut colors = vec![0u8; table.len()];
    fn rec(allowed: &[Vec<u8>], colors: &mut Vec<u8>, d: usize, f: &mut impl FnMut(&Labeling)) {
        if d == allowed.len() {
            f(&Labeling::new(colors.clone()));
            return;
        }
        for &c in &allowed[d] {
            colors[d] = c;
            rec(allowed, colors, d + 1, f);
        }
    }
    rec(&allowed, &mut colors, 0, &mut f);
}

/// On-disk form of a labeling: colors are 1-based, in vertex enumeration order.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct LabelingFile {
    pub k: usize,
    pub q: u32,
    pub colors: Vec<u8>,
}

impl LabelingFile {
    pub fn new(k: usize, q: u32, labeling: &Labeling) -> Self {
        Self {
            k,
            q,
            colors: labeling.colors().to_vec(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labeling file serializes")
    }

    /// Checks the file against the table's parameters and extracts the labeling.
    pub fn into_labeling(self, table: &VertexTable) -> Result<Labeling> {
        if self.k != table.k() {
            return Err(Error::FileMismatch {
                field: "k",
                expected: table.k() as u64,
                got: self.k as u64,
            });
        }
        if self.q != table.q() {
            return Err(Error::FileMismatch {
                field: "q",
                expected: table.q() as u64,
                got: self.q as u64,
            });
        }
        if self.colors.len() != table.len() {
            return Err(Error::LabelingSize {
                expected: table.len(),
                got: self.colors.len(),
            });
        }
        Ok(Labeling::new(self.colors))
    }
}
