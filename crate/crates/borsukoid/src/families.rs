//! Generators for the named matroid and graph families: uniform matroids,
//! theta matroids, the Fano and non-Pappus point configurations, V-shaped
//! line configurations, lattice path matroids (including both Catalan
//! variants), and graphic matroids with the vertex-replacement construction.

use thiserror::Error;

use crate::matroid::{int_labels, Label, Matroid, MatroidError};
use crate::set::{binomial, subsets_of_size, ElementSet, MAX_GROUND};

/// Guard against accidentally materializing astronomically many bases.
const MAX_BASES: u128 = 1 << 22;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid lattice path spec: {0}")]
    InvalidPathSpec(String),
    #[error("graph has {0} edges, at most {MAX_GROUND} are supported")]
    TooManyEdges(usize),
    #[error("attachment map is not injective")]
    AttachNotInjective,
    #[error("replaced vertex has degree {degree} but the patch graph has only {available} vertices")]
    DegreeTooLarge { degree: usize, available: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// The uniform matroid `U_{r,n}`: every `r`-subset of `{1, ..., n}` is a
/// basis.
pub fn uniform(r: usize, n: usize) -> Result<Matroid, FamilyError> {
    if r > n || n > MAX_GROUND {
        return Err(FamilyError::BadParams(format!(
            "uniform({r}, {n}) needs 0 <= r <= n <= {MAX_GROUND}"
        )));
    }
    if binomial(n, r) > MAX_BASES {
        return Err(FamilyError::BadParams(format!(
            "uniform({r}, {n}) has more than {MAX_BASES} bases"
        )));
    }
    if n == 0 {
        return Ok(Matroid::empty());
    }
    Ok(Matroid::from_masks_unchecked(
        int_labels(n),
        subsets_of_size(n, r),
    ))
}

/// The theta matroid on ground set `x1..xn, y1..yn`: bases are the
/// `n`-subsets `B` with `|B ∩ X| <= 2`, except the `n` sets
/// `(Y - y_i) + x_i`. Self-dual, and connected for `n >= 2`.
pub fn theta(n: usize) -> Result<Matroid, FamilyError> {
    if n < 1 || 2 * n > MAX_GROUND {
        return Err(FamilyError::BadParams(format!(
            "theta({n}) needs 1 <= n <= {}",
            MAX_GROUND / 2
        )));
    }
    let mut labels = Vec::with_capacity(2 * n);
    for i in 1..=n {
        labels.push(Label::Str(format!("x{i}")));
    }
    for i in 1..=n {
        labels.push(Label::Str(format!("y{i}")));
    }
    // x_i at index i-1, y_i at index n+i-1
    let mut masks = Vec::new();
    for x_part in 0..=2usize.min(n) {
        for xs in subsets_of_size(n, x_part) {
            for ys in subsets_of_size(n, n - x_part) {
                let b = ElementSet::from_mask(xs.mask() | (ys.mask() << n));
                masks.push(b);
            }
        }
    }
    // remove (Y - y_i) + x_i for every i
    let all_y = ElementSet::from_mask(ElementSet::full(n).mask() << n);
    masks.retain(|&b| {
        !(1..=n).any(|i| b == all_y.without(n + i - 1).with(i - 1))
    });
    Matroid::from_masks(labels, masks).map_err(Into::into)
}

/// The Fano matroid: rank 3 on 7 points, bases are the triples that are not
/// one of the 7 lines of the projective plane of order 2.
pub fn fano() -> Matroid {
    let lines: [[usize; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    point_configuration(7, &lines)
}

/// The non-Pappus matroid: rank 3 on 9 points, dependent triples are the
/// eight lines of the Pappus configuration with the ninth collinearity
/// removed.
pub fn non_pappus() -> Matroid {
    let lines: [[usize; 3]; 8] = [
        [1, 2, 9],
        [1, 7, 8],
        [1, 4, 5],
        [2, 5, 6],
        [6, 8, 9],
        [4, 6, 7],
        [3, 4, 9],
        [2, 3, 7],
    ];
    point_configuration(9, &lines)
}

/// Rank-3 matroid of a point configuration: bases are all triples not on a
/// listed line. Lines are 1-based triples and must pairwise share at most
/// one point.
fn point_configuration(n: usize, lines: &[[usize; 3]]) -> Matroid {
    let line_masks: Vec<ElementSet> = lines
        .iter()
        .map(|l| ElementSet::from_indices(l.iter().map(|&p| p - 1)))
        .collect();
    for (i, &a) in line_masks.iter().enumerate() {
        for &b in &line_masks[i + 1..] {
            debug_assert!(a.intersection(b).card() <= 1, "lines share two points");
        }
    }
    let masks: Vec<ElementSet> = subsets_of_size(n, 3)
        .into_iter()
        .filter(|s| !line_masks.contains(s))
        .collect();
    Matroid::from_masks(int_labels(n), masks).expect("point configuration is a matroid")
}

/// The rank-3 matroid of two lines of `h` points each meeting at a common
/// center: bases are the triples contained in neither line.
///
/// Ground order: center first, then branch `a1..ah`, then branch `b1..bh`.
pub fn v_line(h: usize) -> Result<Matroid, FamilyError> {
    if h < 2 || 2 * h + 1 > MAX_GROUND {
        return Err(FamilyError::BadParams(format!(
            "v_line({h}) needs 2 <= h <= {}",
            (MAX_GROUND - 1) / 2
        )));
    }
    let n = 2 * h + 1;
    let mut labels = vec![Label::Str("c".to_owned())];
    for i in 1..=h {
        labels.push(Label::Str(format!("a{i}")));
    }
    for i in 1..=h {
        labels.push(Label::Str(format!("b{i}")));
    }
    let line_a = ElementSet::from_indices(0..=h);
    let line_b = ElementSet::singleton(0).union(ElementSet::from_indices(h + 1..n));
    let masks: Vec<ElementSet> = subsets_of_size(n, 3)
        .into_iter()
        .filter(|&s| !s.is_subset_of(line_a) && !s.is_subset_of(line_b))
        .collect();
    Matroid::from_masks(labels, masks).map_err(Into::into)
}

/// One step of a monotone lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    North,
    East,
}

/// A pair of monotone step strings bounding a lattice path matroid: the
/// `upper` path never goes below the `lower` one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathSpec {
    upper: Vec<Step>,
    lower: Vec<Step>,
}

impl LatticePathSpec {
    pub fn new(upper: Vec<Step>, lower: Vec<Step>) -> Result<Self, FamilyError> {
        let spec = LatticePathSpec { upper, lower };
        spec.validate()?;
        Ok(spec)
    }

    /// Parses strings over the alphabet `N`/`E`.
    pub fn parse(upper: &str, lower: &str) -> Result<Self, FamilyError> {
        Self::new(parse_steps(upper)?, parse_steps(lower)?)
    }

    fn validate(&self) -> Result<(), FamilyError> {
        if self.upper.len() != self.lower.len() {
            return Err(FamilyError::InvalidPathSpec(format!(
                "step strings have lengths {} and {}",
                self.upper.len(),
                self.lower.len()
            )));
        }
        if self.upper.is_empty() {
            return Err(FamilyError::InvalidPathSpec("empty step strings".into()));
        }
        if self.upper.len() > MAX_GROUND {
            return Err(FamilyError::InvalidPathSpec(format!(
                "{} steps exceed the {MAX_GROUND}-element limit",
                self.upper.len()
            )));
        }
        let north = |steps: &[Step]| steps.iter().filter(|&&s| s == Step::North).count();
        if north(&self.upper) != north(&self.lower) {
            return Err(FamilyError::InvalidPathSpec(
                "bounding paths have different numbers of North steps".into(),
            ));
        }
        let mut up = 0usize;
        let mut low = 0usize;
        for (u, l) in self.upper.iter().zip(&self.lower) {
            up += usize::from(*u == Step::North);
            low += usize::from(*l == Step::North);
            if up < low {
                return Err(FamilyError::InvalidPathSpec(
                    "upper path goes below the lower path".into(),
                ));
            }
        }
        Ok(())
    }

    /// Number of North steps (the rank of the matroid).
    pub fn rank(&self) -> usize {
        self.upper.iter().filter(|&&s| s == Step::North).count()
    }

    /// Number of East steps.
    pub fn east_steps(&self) -> usize {
        self.upper.len() - self.rank()
    }

    /// Cumulative North counts after each prefix.
    fn prefix_norths(steps: &[Step]) -> Vec<usize> {
        let mut acc = 0;
        steps
            .iter()
            .map(|s| {
                acc += usize::from(*s == Step::North);
                acc
            })
            .collect()
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>, FamilyError> {
    s.chars()
        .map(|c| match c {
            'N' | 'n' => Ok(Step::North),
            'E' | 'e' => Ok(Step::East),
            other => Err(FamilyError::InvalidPathSpec(format!(
                "unexpected step character {other:?}"
            ))),
        })
        .collect()
}

/// The lattice path matroid of a bounding pair: the ground set is the step
/// positions `1..m+r` and the bases are the North-step position sets of all
/// monotone paths weakly between the bounds.
pub fn lattice_path(spec: &LatticePathSpec) -> Result<Matroid, FamilyError> {
    spec.validate()?;
    let len = spec.upper.len();
    let up = LatticePathSpec::prefix_norths(&spec.upper);
    let low = LatticePathSpec::prefix_norths(&spec.lower);
    let mut masks = Vec::new();
    let mut current = ElementSet::EMPTY;
    // depth-first over step choices; `height` = North steps used so far
    fn rec(
        pos: usize,
        height: usize,
        len: usize,
        up: &[usize],
        low: &[usize],
        current: &mut ElementSet,
        out: &mut Vec<ElementSet>,
    ) {
        if pos == len {
            out.push(*current);
            return;
        }
        // North step at position pos (0-based)
        if height < up[pos] {
            current.insert(pos);
            rec(pos + 1, height + 1, len, up, low, current, out);
            current.remove(pos);
        }
        // East step
        if height >= low[pos] {
            rec(pos + 1, height, len, up, low, current, out);
        }
    }
    rec(0, 0, len, &up, &low, &mut current, &mut masks);
    Matroid::from_masks(int_labels(len), masks).map_err(Into::into)
}

/// Number of monotone paths weakly between the bounds, by dynamic
/// programming over (position, height). Used as an independent check that
/// path generation is a bijection onto the bases.
pub fn lattice_path_count(spec: &LatticePathSpec) -> u128 {
    let len = spec.upper.len();
    let r = spec.rank();
    let up = LatticePathSpec::prefix_norths(&spec.upper);
    let low = LatticePathSpec::prefix_norths(&spec.lower);
    let mut counts = vec![0u128; r + 1];
    counts[0] = 1;
    for pos in 0..len {
        let mut next = vec![0u128; r + 1];
        for h in 0..=r {
            if counts[h] == 0 {
                continue;
            }
            if h < up[pos] {
                next[h + 1] += counts[h];
            }
            if h >= low[pos] {
                next[h] += counts[h];
            }
        }
        counts = next;
    }
    counts[r]
}

/// The Catalan matroid `C(r, m)`: lattice path matroid bounded above by
/// `(NE)^r E^(m-r)` and below by `E^m N^r`.
pub fn catalan(r: usize, m: usize) -> Result<Matroid, FamilyError> {
    lattice_path(&catalan_spec(r, m)?)
}

/// The restricted Catalan matroid `C^-(r, m)`: same upper bound, lower bound
/// `E^(m-r) (EN)^r`.
pub fn catalan_minus(r: usize, m: usize) -> Result<Matroid, FamilyError> {
    lattice_path(&catalan_minus_spec(r, m)?)
}

pub fn catalan_spec(r: usize, m: usize) -> Result<LatticePathSpec, FamilyError> {
    check_catalan_params(r, m)?;
    let mut lower = vec![Step::East; m];
    lower.extend(std::iter::repeat_n(Step::North, r));
    LatticePathSpec::new(catalan_upper(r, m), lower)
}

pub fn catalan_minus_spec(r: usize, m: usize) -> Result<LatticePathSpec, FamilyError> {
    check_catalan_params(r, m)?;
    let mut lower = vec![Step::East; m - r];
    for _ in 0..r {
        lower.push(Step::East);
        lower.push(Step::North);
    }
    LatticePathSpec::new(catalan_upper(r, m), lower)
}

fn catalan_upper(r: usize, m: usize) -> Vec<Step> {
    let mut upper = Vec::with_capacity(m + r);
    for _ in 0..r {
        upper.push(Step::North);
        upper.push(Step::East);
    }
    upper.extend(std::iter::repeat_n(Step::East, m - r));
    upper
}

fn check_catalan_params(r: usize, m: usize) -> Result<(), FamilyError> {
    if r < 1 || m < r || m + r > MAX_GROUND {
        return Err(FamilyError::BadParams(format!(
            "catalan({r}, {m}) needs m >= r >= 1 and m + r <= {MAX_GROUND}"
        )));
    }
    Ok(())
}

/// A finite undirected graph given by an edge list. Parallel edges are
/// allowed (they carry distinct labels); self-loops are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    edge_labels: Vec<Label>,
}

impl SimpleGraph {
    /// Builds a graph with default integer edge labels `1..=m`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, FamilyError> {
        let labels = int_labels(edges.len());
        Self::with_labels(vertex_count, edges, labels)
    }

    pub fn with_labels(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        edge_labels: Vec<Label>,
    ) -> Result<Self, FamilyError> {
        if edge_labels.len() != edges.len() {
            return Err(FamilyError::BadParams(format!(
                "{} edges but {} edge labels",
                edges.len(),
                edge_labels.len()
            )));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(FamilyError::BadParams(format!(
                    "edge ({u}, {v}) outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(FamilyError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        for (i, l) in edge_labels.iter().enumerate() {
            if edge_labels[..i].contains(l) {
                return Err(MatroidError::DuplicateLabel(l.clone()).into());
            }
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: normalized,
            edge_labels,
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, edges).expect("complete graph is simple")
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        Self::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
            .expect("path graph is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Self::new(n, edges).expect("cycle graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> &[Label] {
        &self.edge_labels
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Indices of the edges incident to `v`.
    pub fn edges_at(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        if self.vertex_count == 0 {
            return 0;
        }
        let mut dsu: Vec<usize> = (0..self.vertex_count).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru != rv {
                dsu[ru.max(rv)] = ru.min(rv);
            }
        }
        (0..self.vertex_count)
            .filter(|&v| find(&mut dsu, v) == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// True when the graph is connected, has at least three vertices, and
    /// removing any single vertex keeps it connected.
    pub fn is_two_connected(&self) -> bool {
        if self.vertex_count < 3 || !self.is_connected() {
            return false;
        }
        for removed in 0..self.vertex_count {
            let mut dsu: Vec<usize> = (0..self.vertex_count).collect();
            fn find(dsu: &mut [usize], mut x: usize) -> usize {
                while dsu[x] != x {
                    dsu[x] = dsu[dsu[x]];
                    x = dsu[x];
                }
                x
            }
            for &(u, v) in &self.edges {
                if u == removed || v == removed {
                    continue;
                }
                let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                if ru != rv {
                    dsu[ru.max(rv)] = ru.min(rv);
                }
            }
            let roots = (0..self.vertex_count)
                .filter(|&v| v != removed && find(&mut dsu, v) == v)
                .count();
            if roots > 1 {
                return false;
            }
        }
        true
    }
}

/// The graphic matroid of a graph: ground set the edges, bases the maximal
/// spanning forests (spanning trees when the graph is connected).
pub fn graphic(g: &SimpleGraph) -> Result<Matroid, FamilyError> {
    if g.edge_count() == 0 {
        return Err(FamilyError::BadParams("graph has no edges".into()));
    }
    if g.edge_count() > MAX_GROUND {
        return Err(FamilyError::TooManyEdges(g.edge_count()));
    }
    let rank = g.vertex_count() - g.component_count();
    let mut masks = Vec::new();
    if rank == 0 {
        return Err(FamilyError::BadParams(
            "graph has edges but rank zero".into(),
        ));
    }
    // enumerate acyclic edge subsets of size `rank` with a rollback DSU
    let m = g.edge_count();
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    fn rec(
        g: &SimpleGraph,
        next: usize,
        chosen: &mut Vec<usize>,
        rank: usize,
        m: usize,
        parent: &mut Vec<usize>,
        out: &mut Vec<ElementSet>,
    ) {
        if chosen.len() == rank {
            out.push(ElementSet::from_indices(chosen.iter().copied()));
            return;
        }
        if m - next < rank - chosen.len() {
            return; // not enough edges left
        }
        for e in next..m {
            let (u, v) = g.edges()[e];
            let (ru, rv) = (find(parent, u), find(parent, v));
            if ru == rv {
                continue;
            }
            parent[ru.max(rv)] = ru.min(rv);
            chosen.push(e);
            rec(g, e + 1, chosen, rank, m, parent, out);
            chosen.pop();
            parent[ru.max(rv)] = ru.max(rv);
        }
    }
    let mut chosen = Vec::with_capacity(rank);
    rec(g, 0, &mut chosen, rank, m, &mut parent, &mut masks);
    Matroid::from_masks(g.edge_labels().to_vec(), masks).map_err(Into::into)
}

/// Spanning tree count of a connected graph by deletion-contraction,
/// independent of the forest enumeration above. Exponential; small inputs
/// only.
pub fn spanning_tree_count(g: &SimpleGraph) -> Result<u128, FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::Disconnected);
    }
    // multigraph on contracted vertices
    fn count(vertices: usize, edges: &[(usize, usize)]) -> u128 {
        if vertices == 1 {
            return 1;
        }
        match edges.split_last() {
            None => 0,
            Some((&(u, v), rest)) => {
                if u == v {
                    return count(vertices, rest); // loop created by contraction
                }
                let deleted = count(vertices, rest);
                // contract: merge the larger endpoint into the smaller and
                // move the last vertex into the freed slot
                let keep = u.min(v);
                let gone = u.max(v);
                let last = vertices - 1;
                let relabel = |x: usize| {
                    if x == gone {
                        keep
                    } else if x == last {
                        gone
                    } else {
                        x
                    }
                };
                let contracted: Vec<(usize, usize)> =
                    rest.iter().map(|&(a, b)| (relabel(a), relabel(b))).collect();
                deleted + count(vertices - 1, &contracted)
            }
        }
    }
    Ok(count(g.vertex_count(), g.edges()))
}

/// Smallest number of edges shared by two spanning trees (over all ordered
/// pairs, including equal ones).
pub fn min_shared_edges(g: &SimpleGraph) -> Result<usize, FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::Disconnected);
    }
    let m = graphic(g)?;
    let mut best = m.rank();
    for &t1 in m.bases() {
        for &t2 in m.bases() {
            best = best.min(t1.intersection(t2).card());
        }
    }
    Ok(best)
}

/// Replaces the vertex `v0` of `host` by the graph `patch`, re-attaching
/// each `host` edge at `v0` to a distinct `patch` vertex.
///
/// Vertex order of the result: the `host` vertices other than `v0` in their
/// original order, followed by the `patch` vertices. Edges are relabelled
/// `1..=|E(host)| + |E(patch)|`.
pub fn vertex_replacement(
    host: &SimpleGraph,
    v0: usize,
    patch: &SimpleGraph,
    attach: &[(usize, usize)],
) -> Result<SimpleGraph, FamilyError> {
    if v0 >= host.vertex_count() {
        return Err(FamilyError::BadParams(format!(
            "vertex {v0} outside the host graph"
        )));
    }
    let at_v0 = host.edges_at(v0);
    if patch.vertex_count() < at_v0.len() {
        return Err(FamilyError::DegreeTooLarge {
            degree: at_v0.len(),
            available: patch.vertex_count(),
        });
    }
    let mut images = vec![usize::MAX; host.edge_count()];
    let mut used = vec![false; patch.vertex_count()];
    for &(edge, target) in attach {
        if !at_v0.contains(&edge) {
            return Err(FamilyError::BadParams(format!(
                "edge {edge} is not incident to vertex {v0}"
            )));
        }
        if target >= patch.vertex_count() {
            return Err(FamilyError::BadParams(format!(
                "patch vertex {target} out of range"
            )));
        }
        if used[target] || images[edge] != usize::MAX {
            return Err(FamilyError::AttachNotInjective);
        }
        images[edge] = target;
        used[target] = true;
    }
    for &edge in &at_v0 {
        if images[edge] == usize::MAX {
            return Err(FamilyError::BadParams(format!(
                "edge {edge} at vertex {v0} has no attachment"
            )));
        }
    }
    // host vertex u (u != v0) -> u - (u > v0); patch vertex w -> host_count - 1 + w
    let host_vertex = |u: usize| if u > v0 { u - 1 } else { u };
    let offset = host.vertex_count() - 1;
    let mut edges = Vec::with_capacity(host.edge_count() + patch.edge_count());
    for (i, &(u, v)) in host.edges().iter().enumerate() {
        if u == v0 || v == v0 {
            let kept = if u == v0 { v } else { u };
            edges.push((host_vertex(kept), offset + images[i]));
        } else {
            edges.push((host_vertex(u), host_vertex(v)));
        }
    }
    for &(u, v) in patch.edges() {
        edges.push((offset + u, offset + v));
    }
    SimpleGraph::new(offset + patch.vertex_count(), edges)
}

/// The 6-vertex planar patch graph whose cographic matroid has the basis
/// intersection property (two cobases are too large to be disjoint).
pub fn sbip_gadget() -> SimpleGraph {
    SimpleGraph::new(
        6,
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (4, 5),
            (5, 2),
            (5, 3),
            (3, 4),
            (4, 1),
            (1, 5),
        ],
    )
    .expect("gadget is simple")
}

/// The standard 8-vertex, 14-edge planar example of a 2-connected graph
/// whose graphic matroid is connected and has the strong basis intersection
/// property: a triangle with one vertex replaced by [`sbip_gadget`].
pub fn sbip_graphic_example() -> SimpleGraph {
    let host = SimpleGraph::complete(3);
    // triangle edges: 0:(0,1) 1:(0,2) 2:(1,2); replace vertex 2
    vertex_replacement(&host, 2, &sbip_gadget(), &[(1, 3), (2, 0)])
        .expect("replacement parameters are valid")
}
