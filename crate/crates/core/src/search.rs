//! Exact minimization of non-monochromatic cells over all Sperner labelings.
//!
//! Both searches assign colors vertex by vertex along the same deterministic
//! order from [`vertex_order_heuristic`], trying smaller colors first. Brute
//! force walks the whole labeling space; branch and bound prunes on the count
//! of cells that are already fully colored and non-monochromatic, which never
//! overestimates the cost of a completion. The two therefore return not only
//! the same minimum but the same witness: the first optimal labeling in the
//! shared assignment order.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::labeling::{
    allowed_colors, count_nonmono, first_choice, is_sperner, labeling_space_size, Labeling,
};
use crate::lattice::VertexId;
use crate::triangulation::Triangulation;
use crate::{Error, Result};

/// Default cap on the brute-force labeling space.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    BranchBound,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::BranchBound => "branch_bound",
        }
    }
}

/// Outcome of an exact search: the minimum m, a labeling attaining it, and
/// how much work it took. `nodes_explored` counts complete labelings for
/// brute force and color assignments for branch and bound.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub m: usize,
    pub witness: Labeling,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub method: Method,
}

/// Greedy vertex order that completes cells as early as possible: each step
/// picks the vertex finishing the most cells whose other vertices are already
/// placed, breaking ties by smallest id. Deterministic.
pub fn vertex_order_heuristic(t: &Triangulation) -> Vec<VertexId> {
    let n = t.vertices().len();
    let k = t.k();
    let cells_of = cells_of_vertex(t);
    let mut placed_per_cell = vec![0usize; t.cell_count()];
    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_gain = 0usize;
        for v in 0..n {
            if chosen[v] {
                continue;
            }
            let gain = cells_of[v]
                .iter()
                .filter(|&&c| placed_per_cell[c] == k - 1)
                .count();
            if best == usize::MAX || gain > best_gain {
                best = v;
                best_gain = gain;
            }
        }
        chosen[best] = true;
        for &c in &cells_of[best] {
            placed_per_cell[c] += 1;
        }
        order.push(VertexId(best));
    }
    order
}

fn cells_of_vertex(t: &Triangulation) -> Vec<Vec<usize>> {
    let mut cells_of = vec![Vec::new(); t.vertices().len()];
    for (ci, cell) in t.cells().iter().enumerate() {
        for &id in cell.ids() {
            cells_of[id.0].push(ci);
        }
    }
    cells_of
}

struct Ctx {
    k: usize,
    n: usize,
    /// Depth -> raw vertex index, from the heuristic order.
    order: Vec<usize>,
    /// Depth -> allowed colors of that vertex, ascending.
    allowed: Vec<Vec<u8>>,
    /// Depth -> cells containing that vertex.
    cells_at: Vec<Vec<usize>>,
    n_cells: usize,
}

impl Ctx {
    fn new(t: &Triangulation) -> Self {
        let order: Vec<usize> = vertex_order_heuristic(t).iter().map(|id| id.0).collect();
        let cells_of = cells_of_vertex(t);
        let allowed = order
            .iter()
            .map(|&v| allowed_colors(&t.vertices().points()[v]))
            .collect();
        let cells_at = order.iter().map(|&v| cells_of[v].clone()).collect();
        Self {
            k: t.k(),
            n: order.len(),
            order,
            allowed,
            cells_at,
            n_cells: t.cell_count(),
        }
    }
}

struct State {
    assigned: Vec<u8>,
    mask: Vec<u16>,
    colors: Vec<u8>,
    undo: Vec<Vec<(usize, u16)>>,
}

impl State {
    fn new(ctx: &Ctx) -> Self {
        Self {
            assigned: vec![0; ctx.n_cells],
            mask: vec![0; ctx.n_cells],
            colors: vec![0; ctx.n],
            undo: (0..ctx.n).map(|d| Vec::with_capacity(ctx.cells_at[d].len())).collect(),
        }
    }

    /// Colors the vertex at `depth` and returns how many cells this completes
    /// as non-monochromatic.
    fn assign(&mut self, ctx: &Ctx, depth: usize, color: u8) -> usize {
        self.colors[ctx.order[depth]] = color;
        let bit = 1u16 << (color - 1);
        let mut completed = 0;
        for &ci in &ctx.cells_at[depth] {
            self.undo[depth].push((ci, self.mask[ci]));
            self.mask[ci] |= bit;
            self.assigned[ci] += 1;
            if self.assigned[ci] as usize == ctx.k && self.mask[ci].count_ones() >= 2 {
                completed += 1;
            }
        }
        completed
    }

    fn unassign(&mut self, ctx: &Ctx, depth: usize) {
        self.colors[ctx.order[depth]] = 0;
        while let Some((ci, old)) = self.undo[depth].pop() {
            self.mask[ci] = old;
            self.assigned[ci] -= 1;
        }
    }
}

struct Incumbent {
    cost: usize,
    colors: Option<Vec<u8>>,
}

/// Exhaustive scan of the labeling space as a mixed-radix counter over the
/// per-vertex allowed color sets. Returns the exact minimum and the first
/// witness attaining it in iteration order. Refuses instances whose labeling
/// space exceeds the budget.
pub fn brute_force_min(t: &Triangulation, budget: u64) -> Result<SearchResult> {
    let size = labeling_space_size(t.vertices());
    if size > budget as u128 {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let start = Instant::now();
    let ctx = Ctx::new(t);
    let mut state = State::new(&ctx);
    let mut best = Incumbent {
        cost: usize::MAX,
        colors: None,
    };
    let mut leaves = 0u64;
    scan(&ctx, &mut state, 0, 0, &mut best, &mut leaves);
    Ok(SearchResult {
        m: best.cost,
        witness: Labeling::new(best.colors.expect("labeling space is non-empty")),
        nodes_explored: leaves,
        wall_time: start.elapsed(),
        method: Method::Brute,
    })
}

fn scan(ctx: &Ctx, st: &mut State, depth: usize, cost: usize, best: &mut Incumbent, leaves: &mut u64) {
    if depth == ctx.n {
        *leaves += 1;
        if cost < best.cost {
            best.cost = cost;
            best.colors = Some(st.colors.clone());
        }
        return;
    }
    for &color in &ctx.allowed[depth] {
        let completed = st.assign(ctx, depth, color);
        scan(ctx, st, depth + 1, cost + completed, best, leaves);
        st.unassign(ctx, depth);
    }
}

/// Depth-first branch and bound. The partial cost counts only cells whose
/// vertices are all colored, so it never overestimates a completion and the
/// returned minimum is exact. The bound is seeded one above the first-choice
/// cost, which keeps an optimal labeling equal to that cost discoverable.
/// With `threads > 1` the top of the tree is split into prefix tasks sharing
/// a monotone bound; the reduction makes the result identical to a
/// single-threaded run.
pub fn branch_bound_min(t: &Triangulation, threads: usize) -> SearchResult {
    let start = Instant::now();
    let fc_cost = count_nonmono(t, &first_choice(t.vertices()))
        .expect("first choice labeling is Sperner");
    let seed = fc_cost + 1;
    let ctx = Ctx::new(t);

    let (best, nodes) = if threads <= 1 {
        let mut state = State::new(&ctx);
        let mut best = Incumbent {
            cost: seed,
            colors: None,
        };
        let mut nodes = 0u64;
        descend(&ctx, &mut state, 0, 0, &mut best, None, &mut nodes);
        (best, nodes)
    } else {
        parallel_descend(&ctx, seed, threads)
    };

    SearchResult {
        m: best.cost,
        witness: Labeling::new(best.colors.expect("some labeling beats the seeded bound")),
        nodes_explored: nodes,
        wall_time: start.elapsed(),
        method: Method::BranchBound,
    }
}

fn descend(
    ctx: &Ctx,
    st: &mut State,
    depth: usize,
    cost: usize,
    best: &mut Incumbent,
    shared: Option<&AtomicUsize>,
    nodes: &mut u64,
) {
    if depth == ctx.n {
        if cost < best.cost {
            best.cost = cost;
            best.colors = Some(st.colors.clone());
            if let Some(bound) = shared {
                bound.fetch_min(cost, Ordering::Relaxed);
            }
        }
        return;
    }
    for &color in &ctx.allowed[depth] {
        *nodes += 1;
        let completed = st.assign(ctx, depth, color);
        let next_cost = cost + completed;
        // The shared bound prunes strictly above to keep every labeling that
        // ties the global optimum reachable within its own task.
        let cut = next_cost >= best.cost
            || shared.is_some_and(|b| next_cost > b.load(Ordering::Relaxed));
        if !cut {
            descend(ctx, st, depth + 1, next_cost, best, shared, nodes);
        }
        st.unassign(ctx, depth);
    }
}

fn parallel_descend(ctx: &Ctx, seed: usize, threads: usize) -> (Incumbent, u64) {
    // Split the first few levels into prefix tasks, enumerated in the same
    // lexicographic order the serial search walks them.
    let mut split = 0;
    let mut count = 1usize;
    while split < ctx.n && count < threads * 8 {
        let width = ctx.allowed[split].len();
        if count.saturating_mul(width) > 4096 {
            break;
        }
        count *= width;
        split += 1;
    }
    let mut prefixes: Vec<Vec<u8>> = vec![Vec::new()];
    for d in 0..split {
        let mut next = Vec::with_capacity(prefixes.len() * ctx.allowed[d].len());
        for p in &prefixes {
            for &c in &ctx.allowed[d] {
                let mut p2 = p.clone();
                p2.push(c);
                next.push(p2);
            }
        }
        prefixes = next;
    }

    type TaskResult = Option<(usize, Vec<u8>)>;
    let bound = AtomicUsize::new(seed);
    let task_idx = AtomicUsize::new(0);
    let nodes = AtomicU64::new(0);
    let results: Mutex<Vec<TaskResult>> = Mutex::new(vec![None; prefixes.len()]);

    thread::scope(|scope| {
        for _ in 0..threads.min(prefixes.len()) {
            scope.spawn(|| {
                let mut state = State::new(ctx);
                let mut local_nodes = 0u64;
                loop {
                    let i = task_idx.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() {
                        break;
                    }
                    let prefix = &prefixes[i];
                    let mut cost = 0;
                    for (d, &c) in prefix.iter().enumerate() {
                        local_nodes += 1;
                        cost += state.assign(ctx, d, c);
                    }
                    let mut best = Incumbent {
                        cost: seed,
                        colors: None,
                    };
                    if cost <= bound.load(Ordering::Relaxed) && cost < seed {
                        descend(ctx, &mut state, prefix.len(), cost, &mut best, Some(&bound), &mut local_nodes);
                    }
                    for d in (0..prefix.len()).rev() {
                        state.unassign(ctx, d);
                    }
                    if let Some(colors) = best.colors {
                        results.lock().unwrap()[i] = Some((best.cost, colors));
                    }
                }
                nodes.fetch_add(local_nodes, Ordering::Relaxed);
            });
        }
    });

    // Reduce by cost, then by task order; prefixes are lexicographic, so this
    // picks exactly the witness the serial search would return.
    let results = results.into_inner().unwrap();
    let mut best = Incumbent {
        cost: seed,
        colors: None,
    };
    for entry in results.into_iter().flatten() {
        if entry.0 < best.cost {
            best.cost = entry.0;
            best.colors = Some(entry.1);
        }
    }
    (best, nodes.into_inner())
}

/// Re-checks a claimed optimum independently of any search path: the witness
/// must be Sperner and its recount must equal the claim.
pub fn verify_certificate(k: usize, q: u32, witness: &Labeling, claimed_m: usize) -> Result<bool> {
    let t = Triangulation::build(k, q)?;
    if witness.len() != t.vertices().len() || !is_sperner(t.vertices(), witness) {
        return Ok(false);
    }
    Ok(count_nonmono(&t, witness)? == claimed_m)
}

/// On-disk form of a search certificate.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct CertificateFile {
    pub k: usize,
    pub q: u32,
    pub m: usize,
    pub method: String,
    pub colors: Vec<u8>,
    pub nodes_explored: u64,
}

impl CertificateFile {
    pub fn new(k: usize, q: u32, result: &SearchResult) -> Self {
        Self {
            k,
            q,
            m: result.m,
            method: result.method.as_str().to_string(),
            colors: result.witness.colors().to_vec(),
            nodes_explored: result.nodes_explored,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn check(&self) -> Result<bool> {
        verify_certificate(self.k, self.q, &Labeling::new(self.colors.clone()), self.m)
    }
}
