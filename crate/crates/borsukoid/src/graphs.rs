//! Graphs derived from matroids: Kneser graphs on the bases, diameter
//! graphs, Schrijver graphs, and the categorical product. Adjacency is kept
//! as packed bit rows so that coloring and embedding searches stay cheap.

use thiserror::Error;

use crate::matroid::Matroid;
use crate::set::{subsets_of_size, ElementSet};

/// Conflict graphs at desk scale; this guard keeps adjacency memory
/// predictable (rows are `vertex_count^2` bits).
pub const MAX_VERTICES: usize = 20_000;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph would have {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("matroid has a single basis")]
    SingleBasis,
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Simple undirected graph over indexed vertices with bit-row adjacency.
///
/// When built from a matroid, `payload[i]` is the basis behind vertex `i`,
/// and the vertex order is the canonical basis order of the matroid.
#[derive(Clone)]
pub struct ConflictGraph {
    vertex_count: usize,
    words: usize,
    rows: Vec<u64>,
    payload: Option<Vec<ElementSet>>,
}

impl ConflictGraph {
    pub fn new(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        let words = vertex_count.div_ceil(64).max(1);
        Ok(ConflictGraph {
            vertex_count,
            words,
            rows: vec![0; vertex_count * words],
            payload: None,
        })
    }

    pub fn with_payload(
        vertex_count: usize,
        payload: Vec<ElementSet>,
    ) -> Result<Self, GraphError> {
        debug_assert_eq!(payload.len(), vertex_count);
        let mut g = Self::new(vertex_count)?;
        g.payload = Some(payload);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn payload(&self) -> Option<&[ElementSet]> {
        self.payload.as_deref()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.vertex_count && j < self.vertex_count);
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.rows[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.vertex_count).map(|i| self.degree(i)).sum();
        total / 2
    }

    /// Edges as ordered pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count {
            for (w, &word) in self.row(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if i < j {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.row(i).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// True when row(i) is a subset of row(j).
    pub fn neighborhood_subset(&self, i: usize, j: usize) -> bool {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .all(|(&a, &b)| a & !b == 0)
    }
}

/// The Kneser graph of a matroid: vertices are the bases in canonical
/// order, edges join disjoint bases.
pub fn kneser_graph(m: &Matroid) -> Result<ConflictGraph, GraphError> {
    let bases = m.bases();
    let mut g = ConflictGraph::with_payload(bases.len(), bases.to_vec())?;
    for (i, &b) in bases.iter().enumerate() {
        for (j, &b2) in bases.iter().enumerate().skip(i + 1) {
            if b.is_disjoint_from(b2) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The diameter graph of a matroid: edges join basis pairs realizing the
/// largest symmetric-difference distance. Requires at least two bases.
pub fn diameter_graph(m: &Matroid) -> Result<ConflictGraph, GraphError> {
    let bases = m.bases();
    if bases.len() < 2 {
        return Err(GraphError::SingleBasis);
    }
    let diameter = m.diameter();
    let mut g = ConflictGraph::with_payload(bases.len(), bases.to_vec())?;
    for (i, &b) in bases.iter().enumerate() {
        for (j, &b2) in bases.iter().enumerate().skip(i + 1) {
            if b.symmetric_difference(b2).card() == diameter {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The Schrijver graph `SG(n, r)`: the subgraph of `KG(n, r)` induced by the
/// stable `r`-subsets of the cycle on `[n]` (no two cyclically consecutive
/// elements).
pub fn schrijver_graph(n: usize, r: usize) -> Result<ConflictGraph, GraphError> {
    if r < 1 || n < 2 * r || n > crate::set::MAX_GROUND {
        return Err(GraphError::BadParams(format!(
            "schrijver_graph({n}, {r}) needs 1 <= r and n >= 2r"
        )));
    }
    let stable: Vec<ElementSet> = subsets_of_size(n, r)
        .into_iter()
        .filter(|&s| {
            !(0..n).any(|i| s.contains(i) && s.contains((i + 1) % n))
        })
        .collect();
    let mut g = ConflictGraph::with_payload(stable.len(), stable.clone())?;
    for (i, &b) in stable.iter().enumerate() {
        for (j, &b2) in stable.iter().enumerate().skip(i + 1) {
            if b.is_disjoint_from(b2) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Categorical product: vertices are ordered pairs indexed `i * |V'| + j`,
/// and `(u, u')` is adjacent to `(v, v')` iff `uv` and `u'v'` are both
/// edges.
pub fn categorical_product(
    a: &ConflictGraph,
    b: &ConflictGraph,
) -> Result<ConflictGraph, GraphError> {
    let count = a
        .vertex_count()
        .checked_mul(b.vertex_count())
        .ok_or_else(|| GraphError::BadParams("product size overflow".into()))?;
    let mut g = ConflictGraph::new(count)?;
    let a_edges = a.edges();
    let b_edges = b.edges();
    for &(u, v) in &a_edges {
        for &(x, y) in &b_edges {
            g.add_edge(u * b.vertex_count() + x, v * b.vertex_count() + y);
            g.add_edge(u * b.vertex_count() + y, v * b.vertex_count() + x);
        }
    }
    Ok(g)
}

/// Outcome of a budgeted subgraph-embedding search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedOutcome {
    /// Injective map `small vertex -> big vertex` preserving the edges of
    /// the small graph.
    Found(Vec<usize>),
    /// The whole search space was exhausted without a witness.
    NotFound,
    /// Node-expansion budget ran out; inconclusive.
    BudgetExhausted,
}

/// Backtracking search for an injective, edge-preserving map from `small`
/// into `big`. `node_budget` caps the number of search-tree expansions; the
/// search is inconclusive when the budget runs out.
pub fn subgraph_embedding_exists(
    small: &ConflictGraph,
    big: &ConflictGraph,
    node_budget: u64,
) -> EmbedOutcome {
    let ns = small.vertex_count();
    let nb = big.vertex_count();
    if ns > nb {
        return EmbedOutcome::NotFound;
    }
    if ns == 0 {
        return EmbedOutcome::Found(Vec::new());
    }
    // order: highest degree first, then prefer vertices adjacent to the
    // already-ordered prefix so partial maps are constrained early
    let mut order: Vec<usize> = Vec::with_capacity(ns);
    let mut placed = vec![false; ns];
    let by_degree = |v: usize| (small.degree(v), std::cmp::Reverse(v));
    while order.len() < ns {
        let candidate = (0..ns)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = order.iter().filter(|&&u| small.has_edge(u, v)).count();
                (attached, by_degree(v))
            })
            .expect("unplaced vertex exists");
        placed[candidate] = true;
        order.push(candidate);
    }

    let mut image = vec![usize::MAX; ns];
    let mut used = vec![false; nb];
    let mut expansions: u64 = 0;

    fn rec(
        depth: usize,
        order: &[usize],
        small: &ConflictGraph,
        big: &ConflictGraph,
        image: &mut [usize],
        used: &mut [bool],
        expansions: &mut u64,
        budget: u64,
    ) -> Result<bool, ()> {
        if depth == order.len() {
            return Ok(true);
        }
        let v = order[depth];
        let v_degree = small.degree(v);
        for target in 0..big.vertex_count() {
            if used[target] || big.degree(target) < v_degree {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                !small.has_edge(u, v) || big.has_edge(image[u], target)
            });
            if !consistent {
                continue;
            }
            *expansions += 1;
            if *expansions > budget {
                return Err(());
            }
            image[v] = target;
            used[target] = true;
            if rec(depth + 1, order, small, big, image, used, expansions, budget)? {
                return Ok(true);
            }
            image[v] = usize::MAX;
            used[target] = false;
        }
        Ok(false)
    }

    match rec(
        0,
        &order,
        small,
        big,
        &mut image,
        &mut used,
        &mut expansions,
        node_budget,
    ) {
        Ok(true) => EmbedOutcome::Found(image),
        Ok(false) => EmbedOutcome::NotFound,
        Err(()) => EmbedOutcome::BudgetExhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{graphic, sbip_graphic_example, uniform};

    #[test]
    fn petersen_graph() {
        let g = kneser_graph(&uniform(2, 5).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn kneser_u23_has_no_edges() {
        let g = kneser_graph(&uniform(2, 3).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn kneser_of_sbip_example_is_edgeless() {
        let m = graphic(&sbip_graphic_example()).unwrap();
        let g = kneser_graph(&m).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn diameter_graph_equals_kneser_with_disjoint_bases() {
        let m = uniform(2, 4).unwrap();
        let kg = kneser_graph(&m).unwrap();
        let dg = diameter_graph(&m).unwrap();
        assert_eq!(kg.edges(), dg.edges());
    }

    #[test]
    fn diameter_graph_of_loop_example_is_triangle() {
        let m = crate::matroid::Matroid::from_bases(
            crate::matroid::int_labels(4),
            &[
                vec![1.into(), 2.into()],
                vec![1.into(), 3.into()],
                vec![2.into(), 3.into()],
            ],
        )
        .unwrap();
        let dg = diameter_graph(&m).unwrap();
        assert_eq!(dg.vertex_count(), 3);
        assert_eq!(dg.edge_count(), 3);
    }

    #[test]
    fn vertex_order_is_canonical_basis_order() {
        let m = uniform(2, 4).unwrap();
        assert_eq!(kneser_graph(&m).unwrap().payload().unwrap(), m.bases());
        assert_eq!(diameter_graph(&m).unwrap().payload().unwrap(), m.bases());
    }

    #[test]
    fn theta5_diameter_edges_have_disjoint_x_pairs() {
        // diameter pairs split the x-part: both endpoints use two x's and
        // share none of them
        let m = crate::families::theta(5).unwrap();
        let dg = diameter_graph(&m).unwrap();
        let x_part = crate::set::ElementSet::full(5);
        let bases = m.bases();
        for (i, j) in dg.edges() {
            let bx = bases[i].intersection(x_part);
            let bx2 = bases[j].intersection(x_part);
            assert_eq!(bx.card(), 2);
            assert_eq!(bx2.card(), 2);
            assert!(bx.is_disjoint_from(bx2));
        }
    }

    #[test]
    fn diameter_graph_needs_two_bases() {
        let single = uniform(1, 1).unwrap();
        assert!(matches!(
            diameter_graph(&single),
            Err(GraphError::SingleBasis)
        ));
    }

    #[test]
    fn schrijver_small_cases() {
        let c5 = schrijver_graph(5, 2).unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2)); // a 5-cycle

        let tiny = schrijver_graph(4, 2).unwrap();
        assert_eq!(tiny.vertex_count(), 2);
        assert_eq!(tiny.edge_count(), 1);

        assert!(schrijver_graph(3, 2).is_err());
    }

    #[test]
    fn schrijver_is_induced_in_kneser() {
        let sg = schrijver_graph(6, 2).unwrap();
        let kg = kneser_graph(&uniform(2, 6).unwrap()).unwrap();
        let kg_payload = kg.payload().unwrap();
        let sg_payload = sg.payload().unwrap();
        for (i, &b) in sg_payload.iter().enumerate() {
            for (j, &b2) in sg_payload.iter().enumerate().skip(i + 1) {
                let ki = kg_payload.iter().position(|&x| x == b).unwrap();
                let kj = kg_payload.iter().position(|&x| x == b2).unwrap();
                assert_eq!(sg.has_edge(i, j), kg.has_edge(ki, kj));
            }
        }
    }

    #[test]
    fn product_counts() {
        let a = kneser_graph(&uniform(2, 5).unwrap()).unwrap();
        let b = kneser_graph(&uniform(1, 2).unwrap()).unwrap();
        let p = categorical_product(&a, &b).unwrap();
        assert_eq!(p.vertex_count(), 20);
        assert_eq!(p.edge_count(), (2 * 15));
    }

    #[test]
    fn product_with_single_vertex_is_edgeless() {
        let a = kneser_graph(&uniform(2, 5).unwrap()).unwrap();
        let one = ConflictGraph::new(1).unwrap();
        let p = categorical_product(&a, &one).unwrap();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn embedding_examples() {
        // SG(5,2) into KG(5,2)
        let sg = schrijver_graph(5, 2).unwrap();
        let kg = kneser_graph(&uniform(2, 5).unwrap()).unwrap();
        match subgraph_embedding_exists(&sg, &kg, 1_000_000) {
            EmbedOutcome::Found(image) => {
                for (i, j) in sg.edges() {
                    assert!(kg.has_edge(image[i], image[j]));
                }
            }
            other => panic!("expected embedding, got {other:?}"),
        }

        // K4 into K3: impossible
        let mut k4 = ConflictGraph::new(4).unwrap();
        for i in 0..4 {
            for j in i + 1..4 {
                k4.add_edge(i, j);
            }
        }
        let mut k3 = ConflictGraph::new(3).unwrap();
        for i in 0..3 {
            for j in i + 1..3 {
                k3.add_edge(i, j);
            }
        }
        assert_eq!(
            subgraph_embedding_exists(&k4, &k3, 1_000_000),
            EmbedOutcome::NotFound
        );
    }

    #[test]
    fn embedding_budget_is_inconclusive() {
        let sg = schrijver_graph(7, 3).unwrap();
        let kg = kneser_graph(&uniform(3, 7).unwrap()).unwrap();
        assert_eq!(
            subgraph_embedding_exists(&sg, &kg, 0),
            EmbedOutcome::BudgetExhausted
        );
    }
}
