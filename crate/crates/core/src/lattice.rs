//! Lattice points of the dilated simplex and of its order-region image.
//!
//! The same finite point set carries two coordinate systems: length-k vectors
//! with non-negative entries summing to q ([`LatticePoint`]), and
//! non-decreasing length-(k-1) vectors with entries in `[0, q]`
//! ([`MonotonePoint`]). [`phi`] and [`phi_inv`] convert between them.
//! [`VertexTable`] assigns dense [`VertexId`]s following the frozen
//! lexicographic enumeration order; every serialized artifact references
//! points through these ids, so the order is part of the file-format contract.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest supported dimension count.
pub const MAX_K: usize = 16;
/// Largest supported dilation factor.
pub const MAX_Q: u32 = 64;

/// Checks the `(k, q)` parameter envelope shared by every builder.
pub fn validate_params(k: usize, q: u32) -> Result<()> {
    if !(2..=MAX_K).contains(&k) {
        return Err(Error::InvalidK { got: k, max: MAX_K });
    }
    if !(1..=MAX_Q).contains(&q) {
        return Err(Error::InvalidQ { got: q, max: MAX_Q });
    }
    Ok(())
}

/// Exact binomial coefficient; fails loudly instead of wrapping.
pub fn binomial(n: u64, r: u64) -> Result<u64> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 1..=r {
        // acc * (n - r + i) is divisible by i at every step: the running
        // value is itself a binomial coefficient.
        acc = acc
            .checked_mul(n - r + i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / i;
    }
    Ok(acc)
}

/// Number of lattice points of the dilated simplex, `C(q+k-1, k-1)`.
pub fn vertex_count(k: usize, q: u32) -> Result<u64> {
    validate_params(k, q)?;
    binomial(q as u64 + k as u64 - 1, k as u64 - 1)
}

/// A length-k vector of non-negative integers; valid for dilation q when the
/// entries sum to q.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    coords: Vec<u32>,
}

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidK {
                got: coords.len(),
                max: MAX_K,
            });
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn sum(&self) -> u32 {
        self.coords.iter().sum()
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ{:?}", self.coords)
    }
}

/// A non-decreasing integer vector of length k-1; the order-region coordinates
/// of a lattice point. Membership in the region for a given q additionally
/// requires the last entry to stay at or below q, see [`MonotonePoint::in_range`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotonePoint {
    coords: Vec<u32>,
}

impl MonotonePoint {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidK { got: 1, max: MAX_K });
        }
        if coords.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnknownPoint(coords));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Dimension count k of the ambient simplex (one more than the length).
    pub fn k(&self) -> usize {
        self.coords.len() + 1
    }

    /// True when every entry lies in `[0, q]`.
    pub fn in_range(&self, q: u32) -> bool {
        // Entries are non-decreasing, so checking the last one suffices.
        *self.coords.last().expect("non-empty") <= q
    }
}

impl fmt::Debug for MonotonePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.coords)
    }
}

/// Dense index of a lattice point in the frozen enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

/// All simplex lattice points in ascending lexicographic order.
pub fn enum_delta_points(k: usize, q: u32) -> Result<Vec<LatticePoint>> {
    validate_params(k, q)?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(cur: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<LatticePoint>) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(LatticePoint { coords: cur.clone() });
            return;
        }
        for c in 0..=rem {
            cur[pos] = c;
            rec(cur, pos + 1, rem - c, out);
        }
    }
    rec(&mut cur, 0, q, &mut out);
    Ok(out)
}

/// All order-region lattice points in ascending lexicographic order.
pub fn enum_monotone_points(k: usize, q: u32) -> Result<Vec<MonotonePoint>> {
    validate_params(k, q)?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; k - 1];
    fn rec(cur: &mut Vec<u32>, pos: usize, lo: u32, q: u32, out: &mut Vec<MonotonePoint>) {
        if pos == cur.len() {
            out.push(MonotonePoint { coords: cur.clone() });
            return;
        }
        for c in lo..=q {
            cur[pos] = c;
            rec(cur, pos + 1, c, q, out);
        }
    }
    rec(&mut cur, 0, 0, q, &mut out);
    Ok(out)
}

/// Successive differences: maps order-region coordinates back to the simplex,
/// `(w_1, w_2 - w_1, ..., q - w_{k-1})`.
pub fn phi(w: &MonotonePoint, q: u32) -> LatticePoint {
    assert!(w.in_range(q), "{w:?} lies outside the order region for q={q}");
    let c = w.coords();
    let mut coords = Vec::with_capacity(c.len() + 1);
    coords.push(c[0]);
    for i in 1..c.len() {
        coords.push(c[i] - c[i - 1]);
    }
    coords.push(q - c[c.len() - 1]);
    LatticePoint { coords }
}

/// Prefix sums: the inverse of [`phi`], dropping the redundant total q.
pub fn phi_inv(v: &LatticePoint) -> MonotonePoint {
    let c = v.coords();
    let mut acc = 0u32;
    let mut coords = Vec::with_capacity(c.len() - 1);
    for &x in &c[..c.len() - 1] {
        acc += x;
        coords.push(acc);
    }
    MonotonePoint { coords }
}

/// Simplex lattice points with their dense ids, in the frozen enumeration
/// order. Everything downstream (cells, labelings, certificates) references
/// points through this table.
pub struct VertexTable {
    k: usize,
    q: u32,
    points: Vec<LatticePoint>,
    ids: HashMap<Vec<u32>, VertexId>,
}

impl VertexTable {
    pub fn new(k: usize, q: u32) -> Result<Self> {
        let points = enum_delta_points(k, q)?;
        let ids = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.coords.clone(), VertexId(i)))
            .collect();
        Ok(Self { k, q, points, ids })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn point(&self, id: VertexId) -> &LatticePoint {
        &self.points[id.0]
    }

    pub fn id(&self, v: &LatticePoint) -> Result<VertexId> {
        self.ids
            .get(v.coords())
            .copied()
            .ok_or_else(|| Error::UnknownPoint(v.coords().to_vec()))
    }
}
