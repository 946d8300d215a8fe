//! Exact chromatic numbers by iterated k-feasibility search.
//!
//! The solver seeds a lower bound with a greedy clique and an upper bound
//! with a greedy coloring, then tests k-colorability for increasing k with a
//! DSATUR-ordered backtracking search. Color symmetry is broken by
//! pre-assigning the clique to colors `0..q-1` and only ever introducing the
//! next unused color index. Two exactness-preserving reductions keep the
//! search small: vertices whose neighborhood is contained in the
//! neighborhood of a non-adjacent vertex are removed up front, and vertices
//! of degree `< k` are peeled before each feasibility test.
//!
//! The search is single-threaded and fully index-ordered, so results are
//! deterministic.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graphs::ConflictGraph;

/// Wall-clock budget for exact searches. An unlimited budget never expires.
#[derive(Clone, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn from_ms(ms: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_ms(60_000)
    }
}

/// Best bounds known when a search is cut off.
#[derive(Clone, Debug)]
pub struct ChromaticBounds {
    pub lower: usize,
    pub upper: usize,
    /// Proper coloring realizing `upper`.
    pub coloring: Vec<usize>,
    /// Clique realizing `lower`.
    pub clique: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("budget exhausted, chromatic number is within [{}, {}]", .0.lower, .0.upper)]
    BudgetExhausted(ChromaticBounds),
}

/// Exact result: `coloring` is proper with exactly `chromatic` colors, and
/// `clique` is the (not necessarily tight) greedy clique used as the lower
/// bound seed.
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chromatic: usize,
    pub coloring: Vec<usize>,
    pub clique: Vec<usize>,
}

const MAX_COLORS: usize = 120;
const DOMINANCE_LIMIT: usize = 2_048;

pub fn solve_chromatic(g: &ConflictGraph, budget: &Budget) -> Result<ChromaticResult, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chromatic: 0,
            coloring: Vec::new(),
            clique: Vec::new(),
        });
    }
    let base = SubGraph::from_conflict(g);
    // dominance reduction: drop u when some non-neighbor v has N(u) <= N(v)
    let (sub, kept, removed) = if n <= DOMINANCE_LIMIT {
        dominance_reduce(&base)
    } else {
        (base, (0..n).collect(), Vec::new())
    };

    let lift = |coloring: &[usize], clique: &[usize]| {
        let mut full = vec![usize::MAX; n];
        for (i, &orig) in kept.iter().enumerate() {
            full[orig] = coloring[i];
        }
        for &(u, v) in removed.iter().rev() {
            full[u] = full[v];
        }
        let clique: Vec<usize> = clique.iter().map(|&i| kept[i]).collect();
        (full, clique)
    };

    match solve_reduced(&sub, budget) {
        Ok(Exact {
            chromatic,
            coloring,
            clique,
        }) => {
            let (coloring, clique) = lift(&coloring, &clique);
            Ok(ChromaticResult {
                chromatic,
                coloring,
                clique,
            })
        }
        Err(bounds) => {
            let (coloring, clique) = lift(&bounds.coloring, &bounds.clique);
            Err(SolveError::BudgetExhausted(ChromaticBounds {
                lower: bounds.lower,
                upper: bounds.upper,
                coloring,
                clique,
            }))
        }
    }
}

struct Exact {
    chromatic: usize,
    coloring: Vec<usize>,
    clique: Vec<usize>,
}

fn solve_reduced(sub: &SubGraph, budget: &Budget) -> Result<Exact, ChromaticBounds> {
    let n = sub.n;
    if n == 0 {
        return Ok(Exact {
            chromatic: 0,
            coloring: Vec::new(),
            clique: Vec::new(),
        });
    }
    let clique = sub.greedy_clique();
    let lower = clique.len().max(1);
    let (upper, greedy) = sub.greedy_coloring();
    if lower == upper {
        return Ok(Exact {
            chromatic: upper,
            coloring: greedy,
            clique,
        });
    }
    for k in lower..upper {
        if k >= MAX_COLORS {
            break;
        }
        if budget.exhausted() {
            return Err(ChromaticBounds {
                lower: k,
                upper,
                coloring: greedy,
                clique,
            });
        }
        match sub.feasible_with(k, budget) {
            Feasibility::Feasible(coloring) => {
                return Ok(Exact {
                    chromatic: k,
                    coloring,
                    clique,
                });
            }
            Feasibility::Infeasible => (),
            Feasibility::Aborted => {
                return Err(ChromaticBounds {
                    lower: k,
                    upper,
                    coloring: greedy,
                    clique,
                });
            }
        }
    }
    Ok(Exact {
        chromatic: upper,
        coloring: greedy,
        clique,
    })
}

enum Feasibility {
    Feasible(Vec<usize>),
    Infeasible,
    Aborted,
}

/// Mutable adjacency copy used by the solver.
struct SubGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SubGraph {
    fn from_conflict(g: &ConflictGraph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for i in 0..n {
            rows[i * words..(i + 1) * words].copy_from_slice(g.row(i));
        }
        SubGraph { n, words, rows }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Greedy clique from every seed (up to 512 highest-degree seeds on
    /// large graphs), deterministic.
    fn greedy_clique(&self) -> Vec<usize> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        let mut seeds: Vec<usize> = (0..n).collect();
        if n > 512 {
            seeds.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
            seeds.truncate(512);
        }
        let mut best: Vec<usize> = vec![seeds[0]];
        let mut cand = vec![0u64; self.words];
        for &seed in &seeds {
            let mut clique = vec![seed];
            cand.copy_from_slice(self.row(seed));
            loop {
                let mut pick: Option<(usize, usize)> = None; // (inner degree, vertex)
                for v in BitsOf::new(&cand) {
                    let inner = self
                        .row(v)
                        .iter()
                        .zip(&cand)
                        .map(|(&a, &b)| (a & b).count_ones() as usize)
                        .sum::<usize>();
                    let better = match pick {
                        None => true,
                        Some((bi, bv)) => inner > bi || (inner == bi && v < bv),
                    };
                    if better {
                        pick = Some((inner, v));
                    }
                }
                let Some((_, v)) = pick else { break };
                clique.push(v);
                for (w, word) in cand.iter_mut().enumerate() {
                    *word &= self.row(v)[w];
                }
            }
            if clique.len() > best.len() {
                clique.sort_unstable();
                best = clique;
            }
        }
        best
    }

    /// Welsh-Powell greedy coloring: upper bound plus a witness coloring.
    fn greedy_coloring(&self) -> (usize, Vec<usize>) {
        let n = self.n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut color = vec![usize::MAX; n];
        let mut used = 0usize;
        let mut taken = Vec::new();
        for &v in &order {
            taken.clear();
            taken.resize(used + 1, false);
            for u in BitsOf::new(self.row(v)) {
                if color[u] != usize::MAX {
                    taken[color[u].min(used)] = true;
                }
            }
            let c = (0..=used).find(|&c| !taken[c]).expect("free color");
            color[v] = c;
            used = used.max(c + 1);
        }
        (used, color)
    }

    /// Is the graph k-colorable? Peels low-degree vertices, pre-assigns a
    /// clique of the remainder, then runs DSATUR backtracking.
    fn feasible_with(&self, k: usize, budget: &Budget) -> Feasibility {
        let n = self.n;
        debug_assert!((1..MAX_COLORS).contains(&k));
        // peel vertices of degree < k; they can always be colored afterwards
        let mut alive = vec![true; n];
        let mut alive_degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut peel_order: Vec<usize> = Vec::new();
        loop {
            let Some(v) = (0..n).find(|&v| alive[v] && alive_degree[v] < k) else {
                break;
            };
            alive[v] = false;
            peel_order.push(v);
            for u in BitsOf::new(self.row(v)) {
                if alive[u] {
                    alive_degree[u] -= 1;
                }
            }
        }

        let core: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut color = vec![usize::MAX; n];
        if !core.is_empty() {
            // compact the core
            let mut local = vec![usize::MAX; n];
            for (i, &v) in core.iter().enumerate() {
                local[v] = i;
            }
            let words = core.len().div_ceil(64).max(1);
            let mut rows = vec![0u64; core.len() * words];
            for (i, &v) in core.iter().enumerate() {
                for u in BitsOf::new(self.row(v)) {
                    if alive[u] {
                        let j = local[u];
                        rows[i * words + j / 64] |= 1 << (j % 64);
                    }
                }
            }
            let core_graph = SubGraph {
                n: core.len(),
                words,
                rows,
            };
            let clique = core_graph.greedy_clique();
            if clique.len() > k {
                return Feasibility::Infeasible;
            }
            let mut searcher = Searcher::new(&core_graph, k, budget);
            for (c, &v) in clique.iter().enumerate() {
                searcher.assign(v, c);
            }
            match searcher.run() {
                SearchOutcome::Found => {
                    for (i, &v) in core.iter().enumerate() {
                        color[v] = searcher.color[i];
                    }
                }
                SearchOutcome::Exhausted => return Feasibility::Infeasible,
                SearchOutcome::Aborted => return Feasibility::Aborted,
            }
        }
        // re-insert peeled vertices; each has fewer than k colored neighbors
        for &v in peel_order.iter().rev() {
            let mut taken = [false; MAX_COLORS];
            for u in BitsOf::new(self.row(v)) {
                if color[u] != usize::MAX {
                    taken[color[u]] = true;
                }
            }
            color[v] = (0..k).find(|&c| !taken[c]).expect("peeled vertex has a free color");
        }
        Feasibility::Feasible(color)
    }
}

/// Removes vertices whose alive neighborhood is contained in the
/// neighborhood of a non-adjacent alive vertex; such a vertex can reuse its
/// dominator's color, so the chromatic number is unchanged.
///
/// Returns the compacted graph, the original index of each kept vertex, and
/// the removals as `(vertex, dominator)` pairs in removal order.
fn dominance_reduce(sub: &SubGraph) -> (SubGraph, Vec<usize>, Vec<(usize, usize)>) {
    let n = sub.n;
    let words = sub.words;
    let mut alive = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        alive[words - 1] = (1u64 << (n % 64)) - 1;
    }
    let is_alive = |alive: &[u64], v: usize| alive[v / 64] & (1 << (v % 64)) != 0;
    let mut removed: Vec<(usize, usize)> = Vec::new();
    // a few fixpoint passes are enough in practice; the reduction is optional
    for _ in 0..3 {
        let mut any = false;
        for u in 0..n {
            if !is_alive(&alive, u) {
                continue;
            }
            'candidates: for v in 0..n {
                if v == u || !is_alive(&alive, v) || sub.has_edge(u, v) {
                    continue;
                }
                for w in 0..words {
                    let u_nbrs = sub.rows[u * words + w] & alive[w];
                    if u_nbrs & !sub.rows[v * words + w] != 0 {
                        continue 'candidates;
                    }
                }
                removed.push((u, v));
                alive[u / 64] &= !(1 << (u % 64));
                any = true;
                break;
            }
        }
        if !any {
            break;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| is_alive(&alive, v)).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        local[v] = i;
    }
    let words2 = kept.len().div_ceil(64).max(1);
    let mut rows = vec![0u64; kept.len() * words2];
    for (i, &v) in kept.iter().enumerate() {
        for u in BitsOf::new(sub.row(v)) {
            if is_alive(&alive, u) {
                let j = local[u];
                rows[i * words2 + j / 64] |= 1 << (j % 64);
            }
        }
    }
    (
        SubGraph {
            n: kept.len(),
            words: words2,
            rows,
        },
        kept,
        removed,
    )
}

enum SearchOutcome {
    Found,
    Exhausted,
    Aborted,
}

struct Searcher<'a> {
    g: &'a SubGraph,
    k: usize,
    mask_k: u128,
    color: Vec<usize>,
    forbid: Vec<u128>,
    uncolored: usize,
    max_used: usize,
    nodes: u64,
    budget: &'a Budget,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a SubGraph, k: usize, budget: &'a Budget) -> Self {
        Searcher {
            g,
            k,
            mask_k: (1u128 << k) - 1,
            color: vec![usize::MAX; g.n],
            forbid: vec![0; g.n],
            uncolored: g.n,
            max_used: 0,
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) -> Vec<usize> {
        debug_assert_eq!(self.color[v], usize::MAX);
        self.color[v] = c;
        self.uncolored -= 1;
        self.max_used = self.max_used.max(c + 1);
        let bit = 1u128 << c;
        let mut touched = Vec::new();
        for u in BitsOf::new(self.g.row(v)) {
            if self.color[u] == usize::MAX && self.forbid[u] & bit == 0 {
                self.forbid[u] |= bit;
                touched.push(u);
            }
        }
        touched
    }

    fn unassign(&mut self, v: usize, c: usize, touched: Vec<usize>, prev_max: usize) {
        let bit = 1u128 << c;
        for u in touched {
            self.forbid[u] &= !bit;
        }
        self.color[v] = usize::MAX;
        self.uncolored += 1;
        self.max_used = prev_max;
    }

    fn run(&mut self) -> SearchOutcome {
        if self.uncolored == 0 {
            return SearchOutcome::Found;
        }
        // DSATUR choice: max saturation, then max degree, then min index
        let mut chosen = usize::MAX;
        let mut best_sat = 0usize;
        let mut best_deg = 0usize;
        for v in 0..self.g.n {
            if self.color[v] != usize::MAX {
                continue;
            }
            let sat = (self.forbid[v] & self.mask_k).count_ones() as usize;
            let deg = self.g.degree(v);
            if chosen == usize::MAX || sat > best_sat || (sat == best_sat && deg > best_deg) {
                chosen = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        let v = chosen;
        let cap = (self.max_used + 1).min(self.k);
        let mut avail = !self.forbid[v] & self.mask_k & ((1u128 << cap) - 1);
        while avail != 0 {
            let c = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            self.nodes += 1;
            if self.nodes.is_multiple_of(1024) && self.budget.exhausted() {
                return SearchOutcome::Aborted;
            }
            let prev_max = self.max_used;
            let touched = self.assign(v, c);
            match self.run() {
                SearchOutcome::Found => return SearchOutcome::Found,
                SearchOutcome::Aborted => return SearchOutcome::Aborted,
                SearchOutcome::Exhausted => self.unassign(v, c, touched, prev_max),
            }
        }
        SearchOutcome::Exhausted
    }
}

/// Iterator over set bits of a word slice.
struct BitsOf<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitsOf<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitsOf {
            words,
            index: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }
}

impl Iterator for BitsOf<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
