//! The simplex-lattice hypergraph: one hyperedge `{b+e_1, ..., b+e_k}` per
//! lattice point b of the once-smaller simplex. Every hyperedge embeds as a
//! cell of the regular triangulation, which is what makes counting its
//! non-monochromatic members a lower bound for the full cell count.

use serde::{Deserialize, Serialize};

use crate::labeling::Labeling;
use crate::lattice::{enum_delta_points, LatticePoint, VertexId, VertexTable};
use crate::triangulation::Triangulation;
use crate::Result;

/// A hyperedge: the k points one step up from a base point, as sorted ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperedge {
    base: LatticePoint,
    ids: Vec<VertexId>,
}

impl Hyperedge {
    pub fn base(&self) -> &LatticePoint {
        &self.base
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }
}

/// One hyperedge per base point, in base enumeration order;
/// `C(q+k-2, k-1)` hyperedges in total.
pub fn build_hypergraph(table: &VertexTable) -> Result<Vec<Hyperedge>> {
    let k = table.k();
    let q = table.q();
    let bases = if q == 1 {
        vec![LatticePoint::new(vec![0; k])?]
    } else {
        enum_delta_points(k, q - 1)?
    };
    bases
        .into_iter()
        .map(|base| {
            let mut ids = (0..k)
                .map(|i| {
                    let mut coords = base.coords().to_vec();
                    coords[i] += 1;
                    table.id(&LatticePoint::new(coords)?)
                })
                .collect::<Result<Vec<_>>>()?;
            ids.sort_unstable();
            Ok(Hyperedge { base, ids })
        })
        .collect()
}

/// True when every hyperedge appears, as a sorted id tuple, among the cells.
pub fn hyperedges_are_cells(hyperedges: &[Hyperedge], t: &Triangulation) -> bool {
    // cells are kept sorted, so membership is a binary search
    hyperedges
        .iter()
        .all(|h| t.cells().binary_search_by(|c| c.ids().cmp(h.ids())).is_ok())
}

/// Number of hyperedges whose k vertices carry at least two distinct colors.
pub fn count_nonmono_hyperedges(hyperedges: &[Hyperedge], labeling: &Labeling) -> usize {
    hyperedges
        .iter()
        .filter(|h| {
            let mask = h
                .ids
                .iter()
                .fold(0u16, |m, &id| m | 1 << (labeling.color(id) - 1));
            mask.count_ones() >= 2
        })
        .count()
}

/// On-disk form mirroring the triangulation export, tagged by field names.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct HypergraphFile {
    pub k: usize,
    pub q: u32,
    pub vertex_count: usize,
    pub hyperedge_count: usize,
    pub vertices: Vec<Vec<u32>>,
    pub hyperedges: Vec<Vec<usize>>,
}

impl HypergraphFile {
    pub fn new(table: &VertexTable, hyperedges: &[Hyperedge]) -> Self {
        Self {
            k: table.k(),
            q: table.q(),
            vertex_count: table.len(),
            hyperedge_count: hyperedges.len(),
            vertices: table.points().iter().map(|p| p.coords().to_vec()).collect(),
            hyperedges: hyperedges
                .iter()
                .map(|h| h.ids().iter().map(|id| id.0).collect())
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph file serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{count_nonmono, first_choice, for_each_sperner_labeling};
    use crate::lattice::binomial;

    fn pt(coords: &[u32]) -> LatticePoint {
        LatticePoint::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn hyperedge_from_base() {
        let table = VertexTable::new(3, 2).unwrap();
        let h = build_hypergraph(&table).unwrap();
        assert_eq!(h.len(), 3);
        let edge = h.iter().find(|e| e.base() == &pt(&[1, 0, 0])).unwrap();
        let points: Vec<&LatticePoint> =
            edge.ids().iter().map(|&id| table.point(id)).collect();
        assert!(points.contains(&&pt(&[2, 0, 0])));
        assert!(points.contains(&&pt(&[1, 1, 0])));
        assert!(points.contains(&&pt(&[1, 0, 1])));
    }

    #[test]
    fn hyperedge_counts() {
        let table = VertexTable::new(3, 1).unwrap();
        assert_eq!(build_hypergraph(&table).unwrap().len(), 1);

        let table = VertexTable::new(4, 3).unwrap();
        let h = build_hypergraph(&table).unwrap();
        assert_eq!(h.len() as u64, binomial(3 + 4 - 2, 4 - 1).unwrap());
        assert_eq!(h.len(), 10);
    }

    #[test]
    fn embedding_k3_q2() {
        let t = Triangulation::build(3, 2).unwrap();
        let h = build_hypergraph(t.vertices()).unwrap();
        assert!(hyperedges_are_cells(&h, &t));
        // 3 of the 4 cells are hyperedges; the one with no base is the cell
        // {(1,1,0),(1,0,1),(0,1,1)}
        let hyper_ids: Vec<&[VertexId]> = h.iter().map(|e| e.ids()).collect();
        let non_hyper: Vec<_> = t
            .cells()
            .iter()
            .filter(|c| !hyper_ids.contains(&c.ids()))
            .collect();
        assert_eq!(non_hyper.len(), 1);
        let coords: Vec<&[u32]> = non_hyper[0]
            .ids()
            .iter()
            .map(|&id| t.vertices().point(id).coords())
            .collect();
        assert!(coords.contains(&[1, 1, 0].as_slice()));
        assert!(coords.contains(&[1, 0, 1].as_slice()));
        assert!(coords.contains(&[0, 1, 1].as_slice()));
    }

    #[test]
    fn embedding_edge_cases() {
        for q in 1..=4u32 {
            let t = Triangulation::build(2, q).unwrap();
            let h = build_hypergraph(t.vertices()).unwrap();
            assert!(hyperedges_are_cells(&h, &t));
            assert_eq!(h.len(), t.cell_count()); // segments: hyperedges are all cells
        }
        let t = Triangulation::build(4, 1).unwrap();
        let h = build_hypergraph(t.vertices()).unwrap();
        assert_eq!(h.len(), 1);
        assert!(hyperedges_are_cells(&h, &t));
    }

    #[test]
    fn nonmono_hyperedges_first_choice_k3_q2() {
        let t = Triangulation::build(3, 2).unwrap();
        let h = build_hypergraph(t.vertices()).unwrap();
        let fc = first_choice(t.vertices());
        assert_eq!(count_nonmono_hyperedges(&h, &fc), 2);
    }

    #[test]
    fn nonmono_hyperedges_never_exceed_cells() {
        let t = Triangulation::build(3, 2).unwrap();
        let h = build_hypergraph(t.vertices()).unwrap();
        for_each_sperner_labeling(t.vertices(), |l| {
            let cells = count_nonmono(&t, l).unwrap();
            let edges = count_nonmono_hyperedges(&h, l);
            assert!(edges <= cells);
            assert!(edges >= 1);
        });
    }

    #[test]
    fn q1_always_nonmono() {
        let t = Triangulation::build(4, 1).unwrap();
        let h = build_hypergraph(t.vertices()).unwrap();
        for_each_sperner_labeling(t.vertices(), |l| {
            assert_eq!(count_nonmono_hyperedges(&h, l), 1);
        });
    }

    #[test]
    fn file_round_trip() {
        let t = Triangulation::build(3, 2).unwrap();
        let h = build_hypergraph(t.vertices()).unwrap();
        let file = HypergraphFile::new(t.vertices(), &h);
        let json = file.to_json();
        let back = HypergraphFile::from_json(&json).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.hyperedge_count, 3);
    }
}
