//! The regular triangulation of the dilated simplex, built three ways.
//!
//! Route one anchors a chain of k vertices at each order-region point and
//! walks coordinates in the order prescribed by a consistent permutation.
//! Routes two and three enumerate k-cliques of an adjacency graph, either on
//! the order-region points (unit-step differences) or directly on the simplex
//! points (balanced alternating ±1 differences). All three produce the same
//! `q^(k-1)` unimodular cells; [`Triangulation::verify`] checks the
//! triangulation axioms and reports per-check results.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::lattice::{
    enum_delta_points, enum_monotone_points, phi, phi_inv, validate_params, LatticePoint,
    MonotonePoint, VertexId, VertexTable,
};
use crate::Result;

/// A permutation of the coordinate axes compatible with the ties of its
/// anchor point: ranks must increase across equal adjacent coordinates.
///
/// `ranks[j]` is the turn-on rank of coordinate `j` in the vertex chain of
/// [`cell_vertices`]: the higher the rank, the earlier the coordinate gains
/// its +1 increment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistentPermutation {
    anchor: MonotonePoint,
    ranks: Vec<usize>,
}

impl ConsistentPermutation {
    pub fn anchor(&self) -> &MonotonePoint {
        &self.anchor
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }
}

/// Tie rule: equal adjacent anchor coordinates force increasing ranks.
pub fn is_consistent(anchor: &MonotonePoint, ranks: &[usize]) -> bool {
    let w = anchor.coords();
    ranks.len() == w.len()
        && w.windows(2)
            .zip(ranks.windows(2))
            .all(|(wp, rp)| wp[0] != wp[1] || rp[0] < rp[1])
}

/// All rank assignments consistent with the anchor. Distinct anchor entries
/// leave all (k-1)! permutations; a constant anchor admits only the identity.
pub fn consistent_permutations(anchor: &MonotonePoint) -> Vec<ConsistentPermutation> {
    let d = anchor.coords().len();
    (0..d)
        .permutations(d)
        .filter(|ranks| is_consistent(anchor, ranks))
        .map(|ranks| ConsistentPermutation {
            anchor: anchor.clone(),
            ranks,
        })
        .collect()
}

/// The k vertices of the cell addressed by a consistent permutation, in chain
/// order from the anchor up to anchor+(1,...,1). Vertex t adds 1 to every
/// coordinate of rank at least k-1-t. The tie rule keeps each chain vertex
/// monotone; entries may still exceed q and are range-filtered by the caller.
pub fn cell_vertices(cp: &ConsistentPermutation) -> Vec<MonotonePoint> {
    let w = cp.anchor.coords();
    let d = w.len();
    (0..=d)
        .map(|t| {
            let coords: Vec<u32> = (0..d)
                .map(|j| w[j] + u32::from(cp.ranks[j] >= d - t))
                .collect();
            MonotonePoint::new(coords).expect("tie rule keeps chain vertices monotone")
        })
        .collect()
}

/// One simplex of the triangulation: k distinct vertex ids, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    ids: Vec<VertexId>,
}

impl Cell {
    fn new(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]), "cell vertices repeat");
        Self { ids }
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }
}

/// Which adjacency relation a graph carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphVariant {
    /// Order-region points; edges read off shared permutation-built cells.
    CellDerived,
    /// Order-region points; difference entrywise in {0,1} or in {-1,0}.
    UnitStep,
    /// Simplex points; ±1 entries balanced and alternating in sign.
    Alternating,
}

/// Undirected graph over an enumeration of points, stored as bitset rows.
pub struct AdjacencyGraph {
    variant: GraphVariant,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl AdjacencyGraph {
    fn empty(variant: GraphVariant, n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            variant,
            n,
            rows: vec![vec![0u64; words]; n],
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.rows[a][b / 64] |= 1 << (b % 64);
        self.rows[b][a / 64] |= 1 << (a % 64);
    }

    pub fn variant(&self) -> GraphVariant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] & (1 << (b % 64)) != 0
    }

    /// Sorted list of edges as index pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in ones(&self.rows[a]) {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| popcount(r)).sum::<usize>() / 2
    }
}

/// Unit-step adjacency on order-region points: the difference is entrywise
/// in {0,1} or entrywise in {-1,0}.
pub fn unit_step_adjacent(a: &MonotonePoint, b: &MonotonePoint) -> bool {
    let (x, y) = (a.coords(), b.coords());
    if x == y {
        return false;
    }
    let mut up = true; // a - b entrywise in {0,1}
    let mut down = true; // a - b entrywise in {-1,0}
    for (&xa, &yb) in x.iter().zip(y) {
        let d = i64::from(xa) - i64::from(yb);
        up &= d == 0 || d == 1;
        down &= d == 0 || d == -1;
    }
    up || down
}

/// Simplex adjacency: entries of the difference lie in {-1,0,1}, the +1 and
/// -1 counts agree, and the nonzero entries alternate in sign left to right.
pub fn alternating_adjacent(a: &LatticePoint, b: &LatticePoint) -> bool {
    let (x, y) = (a.coords(), b.coords());
    if x == y {
        return false;
    }
    let mut plus = 0i64;
    let mut minus = 0i64;
    let mut last = 0i64;
    for (&xa, &yb) in x.iter().zip(y) {
        let d = i64::from(xa) - i64::from(yb);
        if d.abs() > 1 {
            return false;
        }
        if d != 0 {
            if d == last {
                return false;
            }
            if d > 0 {
                plus += 1;
            } else {
                minus += 1;
            }
            last = d;
        }
    }
    plus == minus && plus > 0
}

/// Builds the requested adjacency graph by exhaustive pairwise testing, or by
/// scanning the permutation-built cells for the cell-derived variant.
pub fn adjacency_graph(k: usize, q: u32, variant: GraphVariant) -> Result<AdjacencyGraph> {
    validate_params(k, q)?;
    match variant {
        GraphVariant::UnitStep => {
            let ws = enum_monotone_points(k, q)?;
            let mut g = AdjacencyGraph::empty(variant, ws.len());
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    if unit_step_adjacent(&ws[i], &ws[j]) {
                        g.add_edge(i, j);
                    }
                }
            }
            Ok(g)
        }
        GraphVariant::Alternating => {
            let vs = enum_delta_points(k, q)?;
            let mut g = AdjacencyGraph::empty(variant, vs.len());
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    if alternating_adjacent(&vs[i], &vs[j]) {
                        g.add_edge(i, j);
                    }
                }
            }
            Ok(g)
        }
        GraphVariant::CellDerived => {
            let n = enum_monotone_points(k, q)?.len();
            let mut g = AdjacencyGraph::empty(variant, n);
            for cell in permutation_cells_on_region(k, q)? {
                for (a, b) in cell.iter().tuple_combinations() {
                    g.add_edge(*a, *b);
                }
            }
            Ok(g)
        }
    }
}

/// In-range cells of the permutation construction, as sorted tuples of
/// indices into the order-region enumeration.
fn permutation_cells_on_region(k: usize, q: u32) -> Result<BTreeSet<Vec<usize>>> {
    let ws = enum_monotone_points(k, q)?;
    let index: HashMap<&[u32], usize> = ws
        .iter()
        .enumerate()
        .map(|(i, w)| (w.coords(), i))
        .collect();
    let mut cells = BTreeSet::new();
    for w in &ws {
        for cp in consistent_permutations(w) {
            let chain = cell_vertices(&cp);
            // Cells whose top vertex leaves the region are dropped.
            if !chain.iter().all(|z| z.in_range(q)) {
                continue;
            }
            let mut ids: Vec<usize> = chain.iter().map(|z| index[z.coords()]).collect();
            ids.sort_unstable();
            cells.insert(ids);
        }
    }
    Ok(cells)
}

/// The triangulation of the dilated simplex: its vertex table plus the cell
/// list, canonicalized as sorted vertex-id tuples in sorted order.
pub struct Triangulation {
    vertices: VertexTable,
    cells: Vec<Cell>,
}

impl Triangulation {
    /// Route one: anchored permutation chains, range-filtered, mapped to the
    /// simplex and deduplicated.
    pub fn from_permutations(k: usize, q: u32) -> Result<Self> {
        let table = VertexTable::new(k, q)?;
        let ws = enum_monotone_points(k, q)?;
        let cells = permutation_cells_on_region(k, q)?
            .into_iter()
            .map(|region_cell| {
                let ids = region_cell
                    .iter()
                    .map(|&i| table.id(&phi(&ws[i], q)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Cell::new(ids))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_cells(table, cells))
    }

    /// Routes two and three: every k-clique of the chosen adjacency graph is
    /// a cell. Unit-step and cell-derived cliques live on the order region
    /// and are mapped through [`phi`]; alternating cliques are simplex points
    /// already.
    pub fn from_cliques(k: usize, q: u32, variant: GraphVariant) -> Result<Self> {
        let table = VertexTable::new(k, q)?;
        let graph = adjacency_graph(k, q, variant)?;
        let cliques = k_cliques(&graph, k);
        let cells = match variant {
            GraphVariant::Alternating => cliques
                .into_iter()
                .map(|c| Cell::new(c.into_iter().map(VertexId).collect()))
                .collect(),
            GraphVariant::UnitStep | GraphVariant::CellDerived => {
                let ws = enum_monotone_points(k, q)?;
                cliques
                    .into_iter()
                    .map(|c| {
                        let ids = c
                            .iter()
                            .map(|&i| table.id(&phi(&ws[i], q)))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Cell::new(ids))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(Self::from_cells(table, cells))
    }

    /// Canonical builder used by consumers that do not care about the route.
    pub fn build(k: usize, q: u32) -> Result<Self> {
        Self::from_permutations(k, q)
    }

    fn from_cells(vertices: VertexTable, cells: Vec<Cell>) -> Self {
        let cells: Vec<Cell> = cells.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Self { vertices, cells }
    }

    pub fn k(&self) -> usize {
        self.vertices.k()
    }

    pub fn q(&self) -> u32 {
        self.vertices.q()
    }

    pub fn vertices(&self) -> &VertexTable {
        &self.vertices
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Replaces the cell list, keeping canonical order. Intended for tests
    /// that check how validation reports broken inputs.
    pub fn with_cells(self, cells: Vec<Cell>) -> Self {
        Self::from_cells(self.vertices, cells)
    }

    /// Runs the triangulation axioms and returns one result per check.
    pub fn verify(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let k = self.k();
        let q = self.q();

        // (a) cell count
        let expected = (q as u64).checked_pow(k as u32 - 1);
        let got = self.cells.len() as u64;
        checks.push(CheckResult {
            name: "cell-count",
            passed: expected == Some(got),
            details: format!(
                "{} cells, expected q^(k-1) = {}",
                got,
                expected.map_or_else(|| "overflow".into(), |e| e.to_string())
            ),
        });

        // (b) unimodularity in order-region coordinates
        let mut bad_det = None;
        for cell in &self.cells {
            let ws: Vec<MonotonePoint> = cell
                .ids()
                .iter()
                .map(|&id| phi_inv(self.vertices.point(id)))
                .collect();
            let base = ws[0].coords();
            let mat: Vec<Vec<i128>> = ws[1..]
                .iter()
                .map(|w| {
                    w.coords()
                        .iter()
                        .zip(base)
                        .map(|(&a, &b)| i128::from(a) - i128::from(b))
                        .collect()
                })
                .collect();
            let det = integer_determinant(mat);
            if det.abs() != 1 {
                bad_det = Some((cell.clone(), det));
                break;
            }
        }
        checks.push(CheckResult {
            name: "unimodular",
            passed: bad_det.is_none(),
            details: match &bad_det {
                None => format!("all {} cells have edge determinant ±1", self.cells.len()),
                Some((c, d)) => format!("cell {:?} has determinant {}", c.ids(), d),
            },
        });

        // (c) facet incidence: a facet on a wall x_i = 0 of the simplex must
        // belong to exactly 1 cell, every other facet to exactly 2
        let mut facets: HashMap<Vec<VertexId>, u32> = HashMap::new();
        for cell in &self.cells {
            for skip in 0..k {
                let facet: Vec<VertexId> = cell
                    .ids()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &id)| id)
                    .collect();
                *facets.entry(facet).or_insert(0) += 1;
            }
        }
        let on_wall = |facet: &[VertexId]| {
            (0..k).any(|i| {
                facet
                    .iter()
                    .all(|&id| self.vertices.point(id).coords()[i] == 0)
            })
        };
        let mut incidence_fail = None;
        for (facet, &count) in &facets {
            let expected = if on_wall(facet) { 1 } else { 2 };
            if count != expected {
                incidence_fail = Some((facet.clone(), count, expected));
                break;
            }
        }
        let interior = facets.values().filter(|&&c| c == 2).count();
        let boundary = facets.values().filter(|&&c| c == 1).count();
        checks.push(CheckResult {
            name: "facet-incidence",
            passed: incidence_fail.is_none(),
            details: match &incidence_fail {
                None => format!(
                    "{interior} interior facets (2 cells), {boundary} boundary facets (1 cell)"
                ),
                Some((f, got, expected)) => {
                    format!("facet {f:?} belongs to {got} cells, expected {expected}")
                }
            },
        });

        // (d) every boundary facet lies in a supporting hyperplane x_i = 0
        let stray = facets
            .iter()
            .find(|(facet, &count)| count == 1 && !on_wall(facet))
            .map(|(facet, _)| facet.clone());
        checks.push(CheckResult {
            name: "boundary-support",
            passed: stray.is_none(),
            details: match &stray {
                None => format!("{boundary} boundary facets each lie in some x_i = 0"),
                Some(f) => format!("boundary facet {f:?} lies in no coordinate hyperplane"),
            },
        });

        ValidationReport { checks }
    }

    pub fn to_file(&self) -> TriangulationFile {
        TriangulationFile {
            k: self.k(),
            q: self.q(),
            vertex_count: self.vertices.len(),
            cell_count: self.cells.len(),
            vertices: self
                .vertices
                .points()
                .iter()
                .map(|p| p.coords().to_vec())
                .collect(),
            cells: self
                .cells
                .iter()
                .map(|c| c.ids().iter().map(|id| id.0).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("triangulation serializes")
    }
}

/// Outcome of one validation check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

/// Per-check results of [`Triangulation::verify`]; a failed check is
/// reported, never thrown.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// On-disk form of a triangulation. Field order and the frozen vertex
/// enumeration make the serialization byte-stable.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct TriangulationFile {
    pub k: usize,
    pub q: u32,
    pub vertex_count: usize,
    pub cell_count: usize,
    pub vertices: Vec<Vec<u32>>,
    pub cells: Vec<Vec<usize>>,
}

impl TriangulationFile {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triangulation file serializes")
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination; divisions are
/// exact, so no floating point enters any validity check.
pub fn integer_determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..n {
        if a[p][p] == 0 {
            let Some(r) = (p + 1..n).find(|&r| a[r][p] != 0) else {
                return 0;
            };
            a.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    sign * a[n - 1][n - 1]
}

/// All cliques of size exactly `k`, each emitted once in ascending vertex
/// order. Depth-first walk over bitset rows, pruning when the candidate set
/// cannot complete the clique.
fn k_cliques(graph: &AdjacencyGraph, k: usize) -> Vec<Vec<usize>> {
    let n = graph.len();
    let words = n.div_ceil(64);
    let mut all = vec![!0u64; words];
    if !n.is_multiple_of(64) {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    let mut out = Vec::new();
    let mut clique = Vec::with_capacity(k);
    extend(graph, k, &mut clique, &all, &mut out);
    out
}

fn extend(
    graph: &AdjacencyGraph,
    k: usize,
    clique: &mut Vec<usize>,
    cand: &[u64],
    out: &mut Vec<Vec<usize>>,
) {
    if clique.len() == k {
        out.push(clique.clone());
        return;
    }
    if clique.len() + popcount(cand) < k {
        return;
    }
    for v in ones(cand) {
        clique.push(v);
        let next = intersect_above(cand, &graph.rows[v], v);
        extend(graph, k, clique, &next, out);
        clique.pop();
    }
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(
            if w == 0 { None } else { Some(w) },
            |&r| {
                let r = r & (r - 1);
                if r == 0 {
                    None
                } else {
                    Some(r)
                }
            },
        )
        .map(move |r| wi * 64 + r.trailing_zeros() as usize)
    })
}

/// `a & b` restricted to indices strictly above `v`.
fn intersect_above(a: &[u64], b: &[u64], v: usize) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| x & y).collect();
    let wi = v / 64;
    let bi = v % 64;
    for w in out.iter_mut().take(wi) {
        *w = 0;
    }
    out[wi] &= if bi == 63 { 0 } else { !0u64 << (bi + 1) };
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticePoint;

    fn mono(coords: &[u32]) -> MonotonePoint {
        MonotonePoint::new(coords.to_vec()).unwrap()
    }

    fn cell_points(t: &Triangulation) -> Vec<Vec<Vec<u32>>> {
        t.cells()
            .iter()
            .map(|c| {
                c.ids()
                    .iter()
                    .map(|&id| t.vertices().point(id).coords().to_vec())
                    .collect()
            })
            .collect()
    }

    fn sorted_cell(points: &[&[u32]]) -> Vec<Vec<u32>> {
        let mut cell: Vec<Vec<u32>> = points.iter().map(|p| p.to_vec()).collect();
        cell.sort();
        cell
    }

    #[test]
    fn consistency_counts() {
        assert_eq!(consistent_permutations(&mono(&[0, 0])).len(), 1);
        assert_eq!(
            consistent_permutations(&mono(&[0, 0]))[0].ranks(),
            &[0, 1]
        );
        assert_eq!(consistent_permutations(&mono(&[0, 1])).len(), 2);
        assert_eq!(consistent_permutations(&mono(&[0, 0, 1])).len(), 3);
        // constant anchors admit only the identity
        assert_eq!(consistent_permutations(&mono(&[2, 2, 2])).len(), 1);
        // distinct entries admit every permutation
        assert_eq!(consistent_permutations(&mono(&[0, 1, 2])).len(), 6);
    }

    #[test]
    fn chain_vertices_examples() {
        let cps = consistent_permutations(&mono(&[0, 0]));
        let chain = cell_vertices(&cps[0]);
        assert_eq!(chain, vec![mono(&[0, 0]), mono(&[0, 1]), mono(&[1, 1])]);

        // ranks (1,0): coordinate 0 turns on first, then coordinate 1
        let cp = consistent_permutations(&mono(&[0, 1]))
            .into_iter()
            .find(|cp| cp.ranks() == [1, 0])
            .unwrap();
        assert_eq!(
            cell_vertices(&cp),
            vec![mono(&[0, 1]), mono(&[1, 1]), mono(&[1, 2])]
        );

        let cp = consistent_permutations(&mono(&[0, 0, 0]))
            .into_iter()
            .find(|cp| cp.ranks() == [0, 1, 2])
            .unwrap();
        assert_eq!(
            cell_vertices(&cp),
            vec![
                mono(&[0, 0, 0]),
                mono(&[0, 0, 1]),
                mono(&[0, 1, 1]),
                mono(&[1, 1, 1])
            ]
        );
    }

    #[test]
    fn permutation_build_small_counts() {
        assert_eq!(Triangulation::from_permutations(2, 3).unwrap().cell_count(), 3);
        assert_eq!(Triangulation::from_permutations(3, 2).unwrap().cell_count(), 4);
        assert_eq!(Triangulation::from_permutations(4, 2).unwrap().cell_count(), 8);
    }

    #[test]
    fn permutation_build_k3_q2_exact_cells() {
        let t = Triangulation::from_permutations(3, 2).unwrap();
        let got: BTreeSet<Vec<Vec<u32>>> = cell_points(&t).into_iter().collect();
        let expect: BTreeSet<Vec<Vec<u32>>> = [
            sorted_cell(&[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1]]),
            sorted_cell(&[&[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]),
            sorted_cell(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]),
            sorted_cell(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn unit_step_examples() {
        assert!(unit_step_adjacent(&mono(&[0, 1]), &mono(&[1, 2])));
        assert!(!unit_step_adjacent(&mono(&[0, 2]), &mono(&[1, 1])));
        assert!(!unit_step_adjacent(&mono(&[0, 0]), &mono(&[0, 2])));
    }

    #[test]
    fn alternating_examples() {
        let p = |c: &[u32]| LatticePoint::new(c.to_vec()).unwrap();
        assert!(alternating_adjacent(&p(&[1, 0, 1]), &p(&[0, 1, 1])));
        assert!(!alternating_adjacent(&p(&[2, 0, 0]), &p(&[0, 2, 0])));
        assert!(alternating_adjacent(&p(&[1, 0, 1, 0]), &p(&[0, 1, 0, 1])));
        // balanced but not alternating
        assert!(!alternating_adjacent(&p(&[1, 1, 0, 0]), &p(&[0, 0, 1, 1])));
    }

    #[test]
    fn graph_examples() {
        let g = adjacency_graph(2, 2, GraphVariant::Alternating).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]); // path on 3 points

        let g = adjacency_graph(3, 1, GraphVariant::Alternating).unwrap();
        assert_eq!(g.edge_count(), 3); // triangle

        // exhaustive pairwise oracle for the unit-step graph
        let ws = enum_monotone_points(3, 2).unwrap();
        let g = adjacency_graph(3, 2, GraphVariant::UnitStep).unwrap();
        let mut expect = Vec::new();
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                if unit_step_adjacent(&ws[i], &ws[j]) {
                    expect.push((i, j));
                }
            }
        }
        assert_eq!(g.edges(), expect);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn cell_derived_graph_examples() {
        let g = adjacency_graph(2, 2, GraphVariant::CellDerived).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);

        let g = adjacency_graph(3, 1, GraphVariant::CellDerived).unwrap();
        assert_eq!(g.edge_count(), 3); // single cell, complete graph

        let gp = adjacency_graph(3, 2, GraphVariant::CellDerived).unwrap();
        let gpp = adjacency_graph(3, 2, GraphVariant::UnitStep).unwrap();
        assert_eq!(gp.edges(), gpp.edges());
    }

    #[test]
    fn clique_build_agrees() {
        for (k, q) in [(2, 3), (3, 2), (4, 1), (4, 2)] {
            let a = Triangulation::from_permutations(k, q).unwrap();
            let b = Triangulation::from_cliques(k, q, GraphVariant::UnitStep).unwrap();
            let c = Triangulation::from_cliques(k, q, GraphVariant::Alternating).unwrap();
            assert_eq!(a.cells(), b.cells(), "k={k} q={q}");
            assert_eq!(a.cells(), c.cells(), "k={k} q={q}");
        }
        assert_eq!(
            Triangulation::from_cliques(4, 1, GraphVariant::Alternating)
                .unwrap()
                .cell_count(),
            1
        );
    }

    #[test]
    fn verify_passes_on_built_triangulations() {
        let t = Triangulation::from_permutations(3, 2).unwrap();
        let report = t.verify();
        assert!(report.passed(), "{report:?}");
        assert!(report
            .check("facet-incidence")
            .unwrap()
            .details
            .starts_with("3 interior facets"));

        let single = Triangulation::from_permutations(3, 1).unwrap();
        let report = single.verify();
        assert!(report.passed());
        assert!(report
            .check("facet-incidence")
            .unwrap()
            .details
            .starts_with("0 interior facets"));
    }

    #[test]
    fn verify_flags_missing_cell() {
        let t = Triangulation::from_permutations(3, 2).unwrap();
        let mut cells = t.cells().to_vec();
        cells.pop();
        let broken = t.with_cells(cells);
        let report = broken.verify();
        assert!(!report.check("cell-count").unwrap().passed);
        // the removed cell leaves an off-wall facet with a single owner
        assert!(!report.check("facet-incidence").unwrap().passed);
        assert!(!report.passed());
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(integer_determinant(vec![vec![5]]), 5);
        assert_eq!(integer_determinant(vec![vec![1, 2], vec![3, 4]]), -2);
        assert_eq!(
            integer_determinant(vec![vec![0, 1], vec![1, 0]]),
            -1 // pivot swap path
        );
        assert_eq!(
            integer_determinant(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]),
            2
        );
        assert_eq!(
            integer_determinant(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]),
            0
        );
    }

    #[test]
    fn json_export_is_stable() {
        let t = Triangulation::from_permutations(3, 1).unwrap();
        let json = t.to_json();
        assert_eq!(
            json,
            "{\"k\":3,\"q\":1,\"vertex_count\":3,\"cell_count\":1,\
             \"vertices\":[[0,0,1],[0,1,0],[1,0,0]],\"cells\":[[0,1,2]]}"
        );
        let again = Triangulation::from_permutations(3, 1).unwrap().to_json();
        assert_eq!(json, again);
        let parsed = TriangulationFile::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
    }
}
