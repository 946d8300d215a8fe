//! Matroids given by their bases, with the constructions used throughout the
//! crate: duality, direct sums, series and parallel connections, circuits,
//! cocircuits, and connected components.
//!
//! A matroid is stored as a ground-set size `n <= 64`, a list of external
//! labels, and the family of bases encoded as bit masks. Bases are kept
//! deduplicated and sorted in increasing mask order; this canonical order is
//! what certificate and graph vertex indices refer to everywhere else.
//!
//! Construction always checks the basis exchange axiom: for all bases `B`,
//! `B'` and every `e` in `B \ B'` there is an `f` in `B' \ B` such that
//! `B - e + f` is again a basis. A nonempty family of subsets satisfying this
//! axiom is exactly a matroid basis family.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::{ElementSet, MAX_GROUND};

/// External name of a ground-set element: either an integer or a string.
///
/// Labels appear only at I/O boundaries; all algorithms work on indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Str(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Str(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Str(s) => write!(f, "{s:?}"),
        }
    }
}

impl From<i64> for Label {
    fn from(v: i64) -> Self {
        Label::Int(v)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Str(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Str(s)
    }
}

/// Labels `1, 2, ..., n` as integers.
pub fn int_labels(n: usize) -> Vec<Label> {
    (1..=n as i64).map(Label::Int).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set is empty")]
    EmptyGround,
    #[error("ground set has {0} elements, at most {MAX_GROUND} are supported")]
    TooManyElements(usize),
    #[error("duplicate label {0}")]
    DuplicateLabel(Label),
    #[error("unknown label {0}")]
    UnknownLabel(Label),
    #[error("the basis family is empty")]
    EmptyBases,
    #[error("bases {0:?} and {1:?} have different cardinalities")]
    UnequalCardinality(ElementSet, ElementSet),
    #[error(
        "exchange axiom violated: no f in {other:?} \\ {basis:?} repairs the removal of {element} from {basis:?}"
    )]
    ExchangeAxiomViolation {
        basis: ElementSet,
        other: ElementSet,
        element: usize,
    },
    #[error("label {0} occurs in both ground sets")]
    LabelCollision(Label),
    #[error("shared element {0} is a coloop of the {1} matroid")]
    ColoopShared(Label, &'static str),
    #[error("shared element {0} is a loop of the {1} matroid")]
    LoopShared(Label, &'static str),
    #[error("{0:?} is not a basis")]
    NotABasis(ElementSet),
}

/// A matroid on at most 64 elements, represented by its bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    labels: Vec<Label>,
    bases: Vec<ElementSet>,
    rank: usize,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, rk={}, {} bases)",
            self.n(),
            self.rank,
            self.bases.len()
        )
    }
}

/// Checks the exchange axiom over all ordered basis pairs.
///
/// `masks` must be sorted and deduplicated. Returns the first witnessing
/// triple on failure.
fn check_exchange(masks: &[ElementSet]) -> Result<(), MatroidError> {
    let lookup: HashSet<u64> = masks.iter().map(|b| b.mask()).collect();
    for &b in masks {
        for &other in masks {
            if b == other {
                continue;
            }
            for e in b.difference(other).iter() {
                let removed = b.without(e);
                let mut fixed = false;
                for f in other.difference(b).iter() {
                    if lookup.contains(&removed.with(f).mask()) {
                        fixed = true;
                        break;
                    }
                }
                if !fixed {
                    return Err(MatroidError::ExchangeAxiomViolation {
                        basis: b,
                        other,
                        element: e,
                    });
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Builds and validates a matroid from labelled bases.
    pub fn from_bases(labels: Vec<Label>, bases: &[Vec<Label>]) -> Result<Self, MatroidError> {
        let index = label_index(&labels)?;
        let mut masks = Vec::with_capacity(bases.len());
        for basis in bases {
            let mut set = ElementSet::EMPTY;
            for label in basis {
                let i = *index
                    .iter()
                    .find(|(l, _)| *l == label)
                    .map(|(_, i)| i)
                    .ok_or_else(|| MatroidError::UnknownLabel(label.clone()))?;
                set.insert(i);
            }
            masks.push(set);
        }
        Self::from_masks(labels, masks)
    }

    /// Builds and validates a matroid from index masks.
    pub fn from_masks(labels: Vec<Label>, mut masks: Vec<ElementSet>) -> Result<Self, MatroidError> {
        let n = labels.len();
        if n > MAX_GROUND {
            return Err(MatroidError::TooManyElements(n));
        }
        check_distinct(&labels)?;
        if masks.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let ground = ElementSet::full(n);
        for &m in &masks {
            debug_assert!(m.is_subset_of(ground), "basis outside the ground set");
        }
        masks.sort();
        masks.dedup();
        if n == 0 && masks != vec![ElementSet::EMPTY] {
            return Err(MatroidError::EmptyGround);
        }
        let rank = masks[0].card();
        for w in masks.windows(2) {
            if w[1].card() != rank {
                return Err(MatroidError::UnequalCardinality(w[0], w[1]));
            }
        }
        check_exchange(&masks)?;
        Ok(Matroid {
            labels,
            bases: masks,
            rank,
        })
    }

    /// Fast path for constructions whose output is a matroid by theorem
    /// (duals, direct sums, exchange-checked enumeration). Sorts and dedups
    /// but skips the quadratic axiom check.
    pub(crate) fn from_masks_unchecked(labels: Vec<Label>, mut masks: Vec<ElementSet>) -> Self {
        assert!(
            labels.len() <= MAX_GROUND,
            "combined ground set has {} elements, at most {MAX_GROUND} are supported",
            labels.len()
        );
        masks.sort();
        masks.dedup();
        let rank = masks[0].card();
        debug_assert!(masks.iter().all(|b| b.card() == rank));
        Matroid {
            labels,
            bases: masks,
            rank,
        }
    }

    /// The matroid on an empty ground set whose only basis is empty.
    pub fn empty() -> Self {
        Matroid {
            labels: Vec::new(),
            bases: vec![ElementSet::EMPTY],
            rank: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    /// Bases in canonical (increasing mask) order.
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    /// Index of a basis in canonical order.
    pub fn basis_index(&self, b: ElementSet) -> Option<usize> {
        self.bases.binary_search(&b).ok()
    }

    pub fn is_basis(&self, b: ElementSet) -> bool {
        self.basis_index(b).is_some()
    }

    /// Resolves a list of labels to an index set.
    pub fn resolve(&self, labels: &[Label]) -> Result<ElementSet, MatroidError> {
        let mut set = ElementSet::EMPTY;
        for label in labels {
            set.insert(self.index_of(label)?);
        }
        Ok(set)
    }

    pub fn index_of(&self, label: &Label) -> Result<usize, MatroidError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatroidError::UnknownLabel(label.clone()))
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, s: ElementSet) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(s).card())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.rank_of(s) == s.card()
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> ElementSet {
        let mut union = ElementSet::EMPTY;
        for &b in &self.bases {
            union = union.union(b);
        }
        union.complement(self.n())
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> ElementSet {
        let mut inter = self.ground();
        for &b in &self.bases {
            inter = inter.intersection(b);
        }
        inter
    }

    /// All circuits (minimal dependent sets), in increasing mask order.
    ///
    /// Every circuit is the fundamental circuit of some element with respect
    /// to some basis: `C(e, B) = {e} + {x in B : B - x + e is a basis}`.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let lookup: HashSet<u64> = self.bases.iter().map(|b| b.mask()).collect();
        let mut seen: HashSet<u64> = HashSet::new();
        let mut out = Vec::new();
        for &b in &self.bases {
            for e in b.complement(self.n()).iter() {
                let mut circuit = ElementSet::singleton(e);
                for x in b.iter() {
                    if lookup.contains(&b.without(x).with(e).mask()) {
                        circuit.insert(x);
                    }
                }
                if seen.insert(circuit.mask()) {
                    out.push(circuit);
                }
            }
        }
        out.sort();
        out
    }

    /// Circuits of the dual.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        self.dual().circuits()
    }

    /// The dual matroid: bases are the complements of the bases.
    pub fn dual(&self) -> Matroid {
        let n = self.n();
        let masks = self.bases.iter().map(|b| b.complement(n)).collect();
        Matroid::from_masks_unchecked(self.labels.clone(), masks)
    }

    /// Direct sum, relabelling colliding labels of `other` with `#2`, `#3`,
    /// ... suffix tags. Panics when the combined ground set exceeds 64
    /// elements.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let mut labels = self.labels.clone();
        for label in &other.labels {
            labels.push(fresh_label(label, &labels));
        }
        self.direct_sum_with_labels(other, labels)
    }

    /// Direct sum that refuses colliding label sets.
    pub fn direct_sum_strict(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        for label in &other.labels {
            if self.labels.contains(label) {
                return Err(MatroidError::LabelCollision(label.clone()));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Ok(self.direct_sum_with_labels(other, labels))
    }

    fn direct_sum_with_labels(&self, other: &Matroid, labels: Vec<Label>) -> Matroid {
        let n = self.n();
        let mut masks = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b in &self.bases {
            for &b2 in &other.bases {
                masks.push(ElementSet::from_mask(b.mask() | (b2.mask() << n)));
            }
        }
        Matroid::from_masks_unchecked(labels, masks)
    }

    /// Series connection along `p` (of `self`) identified with `p2` (of
    /// `other`): bases are the unions `B + B'` with `B` and `B'` disjoint,
    /// i.e. not both containing the shared element.
    ///
    /// The shared element keeps the label `p`. Requires `p` to be a coloop of
    /// neither matroid. The result is re-validated against the exchange
    /// axiom.
    pub fn series_connection(
        &self,
        p: &Label,
        other: &Matroid,
        p2: &Label,
    ) -> Result<Matroid, MatroidError> {
        let glue = Gluing::prepare(self, p, other, p2)?;
        if self.coloops().contains(glue.p_left) {
            return Err(MatroidError::ColoopShared(p.clone(), "left"));
        }
        if other.coloops().contains(glue.p_right) {
            return Err(MatroidError::ColoopShared(p2.clone(), "right"));
        }
        let mut masks = Vec::new();
        for &b in &self.bases {
            for &b2 in &other.bases {
                if b.contains(glue.p_left) && b2.contains(glue.p_right) {
                    continue; // B and B' would share p
                }
                masks.push(b.union(glue.map(b2)));
            }
        }
        Matroid::from_masks(glue.labels, masks)
    }

    /// Parallel connection along `p` identified with `p2`: bases are the
    /// unions `B + B'` with `B` and `B'` meeting exactly in the shared
    /// element, together with the sets `B + B' - p` where exactly one of the
    /// two contains it.
    ///
    /// Requires `p` to be a loop of neither matroid. Re-validated.
    pub fn parallel_connection(
        &self,
        p: &Label,
        other: &Matroid,
        p2: &Label,
    ) -> Result<Matroid, MatroidError> {
        let glue = Gluing::prepare(self, p, other, p2)?;
        if self.loops().contains(glue.p_left) {
            return Err(MatroidError::LoopShared(p.clone(), "left"));
        }
        if other.loops().contains(glue.p_right) {
            return Err(MatroidError::LoopShared(p2.clone(), "right"));
        }
        let mut masks = Vec::new();
        for &b in &self.bases {
            for &b2 in &other.bases {
                let left = b.contains(glue.p_left);
                let right = b2.contains(glue.p_right);
                let union = b.union(glue.map(b2));
                if left && right {
                    masks.push(union);
                } else if left != right {
                    masks.push(union.without(glue.p_left));
                }
            }
        }
        Matroid::from_masks(glue.labels, masks)
    }

    /// Connected components: the finest partition of the ground set such
    /// that every circuit stays inside one part. Loops and coloops are
    /// singleton parts.
    pub fn connected_components(&self) -> ComponentDecomposition {
        let n = self.n();
        let mut dsu = Dsu::new(n);
        for circuit in self.circuits() {
            let mut it = circuit.iter();
            if let Some(first) = it.next() {
                for e in it {
                    dsu.union(first, e);
                }
            }
        }
        let mut parts: Vec<ElementSet> = Vec::new();
        let mut part_of = vec![usize::MAX; n];
        for i in 0..n {
            let root = dsu.find(i);
            if part_of[root] == usize::MAX {
                part_of[root] = parts.len();
                parts.push(ElementSet::EMPTY);
            }
            parts[part_of[root]].insert(i);
        }
        let component_matroids = parts.iter().map(|&p| self.restriction_to_part(p)).collect();
        ComponentDecomposition {
            parts,
            component_matroids,
        }
    }

    /// Restriction of the matroid to one connected component.
    fn restriction_to_part(&self, part: ElementSet) -> Matroid {
        let positions: Vec<usize> = part.iter().collect();
        let labels: Vec<Label> = positions.iter().map(|&i| self.labels[i].clone()).collect();
        let mut masks: Vec<ElementSet> = self
            .bases
            .iter()
            .map(|b| {
                ElementSet::from_indices(
                    positions
                        .iter()
                        .enumerate()
                        .filter(|(_, &i)| b.contains(i))
                        .map(|(local, _)| local),
                )
            })
            .collect();
        masks.sort();
        masks.dedup();
        Matroid::from_masks_unchecked(labels, masks)
    }

    /// 0/1 indicator vector of a basis.
    pub fn incidence_vector(&self, b: ElementSet) -> Result<Vec<u8>, MatroidError> {
        if !self.is_basis(b) {
            return Err(MatroidError::NotABasis(b));
        }
        Ok((0..self.n()).map(|i| u8::from(b.contains(i))).collect())
    }

    /// Symmetric-difference distance between two bases (always even).
    pub fn basis_distance(&self, b: ElementSet, b2: ElementSet) -> Result<usize, MatroidError> {
        if !self.is_basis(b) {
            return Err(MatroidError::NotABasis(b));
        }
        if !self.is_basis(b2) {
            return Err(MatroidError::NotABasis(b2));
        }
        Ok(b.symmetric_difference(b2).card())
    }

    /// Largest pairwise basis distance; 0 when there is a single basis.
    pub fn diameter(&self) -> usize {
        let mut best = 0;
        for (i, &b) in self.bases.iter().enumerate() {
            for &b2 in &self.bases[i + 1..] {
                best = best.max(b.symmetric_difference(b2).card());
            }
        }
        best
    }

    /// Brute-force isomorphism test over label permutations, pruned by the
    /// per-element basis-membership counts. Intended for small ground sets
    /// (n <= 10), e.g. self-duality checks.
    pub fn is_isomorphic_to(&self, other: &Matroid) -> bool {
        if self.n() != other.n()
            || self.rank != other.rank
            || self.bases.len() != other.bases.len()
        {
            return false;
        }
        let n = self.n();
        let sig = |m: &Matroid, i: usize| m.bases.iter().filter(|b| b.contains(i)).count();
        let sig_a: Vec<usize> = (0..n).map(|i| sig(self, i)).collect();
        let sig_b: Vec<usize> = (0..n).map(|i| sig(other, i)).collect();
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return false;
            }
        }
        let target: HashSet<u64> = other.bases.iter().map(|b| b.mask()).collect();
        // map self-element -> other-element, backtracking with signature pruning
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            pos: usize,
            n: usize,
            sig_a: &[usize],
            sig_b: &[usize],
            image: &mut [usize],
            used: &mut [bool],
            bases: &[ElementSet],
            target: &HashSet<u64>,
        ) -> bool {
            if pos == n {
                return bases.iter().all(|b| {
                    let mapped: ElementSet = b.iter().map(|i| image[i]).collect();
                    target.contains(&mapped.mask())
                });
            }
            for cand in 0..n {
                if used[cand] || sig_b[cand] != sig_a[pos] {
                    continue;
                }
                image[pos] = cand;
                used[cand] = true;
                if rec(pos + 1, n, sig_a, sig_b, image, used, bases, target) {
                    return true;
                }
                used[cand] = false;
            }
            image[pos] = usize::MAX;
            false
        }
        rec(0, n, &sig_a, &sig_b, &mut image, &mut used, &self.bases, &target)
    }
}

/// Decomposition of a matroid into its connected components.
#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    /// Disjoint nonempty parts covering the ground set, ordered by smallest
    /// element.
    pub parts: Vec<ElementSet>,
    /// Restriction of the matroid to each part, in the same order.
    pub component_matroids: Vec<Matroid>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.parts.len()
    }
}

/// Shared-element layout for series/parallel connections: `self`'s elements
/// keep their indices, `other`'s element `p2` maps onto `p`, the rest are
/// appended in order.
struct Gluing {
    labels: Vec<Label>,
    p_left: usize,
    p_right: usize,
    right_map: Vec<usize>,
}

impl Gluing {
    fn prepare(
        left: &Matroid,
        p: &Label,
        right: &Matroid,
        p2: &Label,
    ) -> Result<Gluing, MatroidError> {
        let p_left = left.index_of(p)?;
        let p_right = right.index_of(p2)?;
        let mut labels = left.labels.clone();
        let mut right_map = vec![usize::MAX; right.n()];
        for (j, label) in right.labels.iter().enumerate() {
            if j == p_right {
                right_map[j] = p_left;
            } else {
                right_map[j] = labels.len();
                labels.push(fresh_label(label, &labels));
            }
        }
        Ok(Gluing {
            labels,
            p_left,
            p_right,
            right_map,
        })
    }

    fn map(&self, b: ElementSet) -> ElementSet {
        b.iter().map(|j| self.right_map[j]).collect()
    }
}

fn check_distinct(labels: &[Label]) -> Result<(), MatroidError> {
    let mut seen: HashSet<&Label> = HashSet::new();
    for label in labels {
        if !seen.insert(label) {
            return Err(MatroidError::DuplicateLabel(label.clone()));
        }
    }
    Ok(())
}

fn label_index(labels: &[Label]) -> Result<Vec<(&Label, usize)>, MatroidError> {
    if labels.is_empty() {
        return Err(MatroidError::EmptyGround);
    }
    check_distinct(labels)?;
    Ok(labels.iter().enumerate().map(|(i, l)| (l, i)).collect())
}

/// Appends `#2`, `#3`, ... until the label no longer collides.
fn fresh_label(label: &Label, taken: &[Label]) -> Label {
    if !taken.contains(label) {
        return label.clone();
    }
    let mut k = 2;
    loop {
        let candidate = Label::Str(format!("{label}#{k}"));
        if !taken.contains(&candidate) {
            return candidate;
        }
        k += 1;
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
