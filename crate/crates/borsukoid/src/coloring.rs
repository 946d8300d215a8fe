//! Borsuk numbers, proper colorings of matroid Kneser graphs, and the
//! constructive partitions behind the known upper bounds, together with the
//! certificate validator that referees all of them.
//!
//! The Borsuk number of a matroid with at least two bases is computed
//! exactly as the chromatic number of its diameter graph; when the matroid
//! has two disjoint bases this coincides with the chromatic number of its
//! Kneser graph, because the diameter is then `2 rk(M)`, attained exactly on
//! disjoint pairs.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dsatur::{solve_chromatic, Budget, SolveError};
use crate::families::{theta, FamilyError};
use crate::graphs::{diameter_graph, ConflictGraph, GraphError};
#[cfg(test)]
use crate::graphs::kneser_graph;
use crate::matroid::{Label, Matroid, MatroidError};
use crate::set::ElementSet;

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("budget exhausted, value is within [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
    #[error("the given set is not a cocircuit")]
    NotACocircuit,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("matroid is not connected")]
    NotConnected,
    #[error("matroid has two disjoint bases")]
    DisjointBasesExist,
    #[error("matroid has a single basis")]
    SingleBasis,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("input certificate is invalid: {0}")]
    InvalidInputCertificate(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl From<SolveError> for ColoringError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExhausted(bounds) => ColoringError::BudgetExhausted {
                lower: bounds.lower,
                upper: bounds.upper,
            },
        }
    }
}

/// A proper coloring: `assignment[v]` is the color of vertex `v`, colors are
/// `0..colors` and every color is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub colors: usize,
}

impl Coloring {
    /// Renumbers arbitrary color ids to `0..k-1` in order of first use.
    pub fn compact(raw: &[usize]) -> Coloring {
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        let mut assignment = Vec::with_capacity(raw.len());
        for &c in raw {
            let next = remap.len();
            assignment.push(*remap.entry(c).or_insert(next));
        }
        Coloring {
            assignment,
            colors: remap.len(),
        }
    }

    /// Checks properness by scanning every edge; independent of any solver.
    pub fn is_proper_for(&self, g: &ConflictGraph) -> bool {
        if self.assignment.len() != g.vertex_count() {
            return false;
        }
        if self.assignment.iter().any(|&c| c >= self.colors) {
            return false;
        }
        let mut used = vec![false; self.colors];
        for &c in &self.assignment {
            used[c] = true;
        }
        if !used.iter().all(|&u| u) {
            return false;
        }
        g.edges()
            .iter()
            .all(|&(i, j)| self.assignment[i] != self.assignment[j])
    }

    /// Color classes as sorted index lists.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            parts[c].push(v);
        }
        parts
    }
}

/// Partition of the basis indices of a matroid, with the diameter of each
/// part and of the whole basis family. Valid when it covers every basis
/// exactly once and each part diameter is strictly below the matroid
/// diameter; [`validate_certificate`] is the referee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCertificate {
    /// Disjoint basis-index sets, sorted by smallest member, each sorted.
    pub parts: Vec<Vec<usize>>,
    /// Largest pairwise distance within each part.
    pub part_diameters: Vec<usize>,
    /// Largest pairwise distance over the whole basis family.
    pub matroid_diameter: usize,
}

impl PartitionCertificate {
    /// Builds a certificate from raw parts, computing diameters and sorting
    /// canonically. Empty parts are dropped.
    pub fn from_parts(m: &Matroid, raw_parts: Vec<Vec<usize>>) -> PartitionCertificate {
        let bases = m.bases();
        let mut parts: Vec<Vec<usize>> = raw_parts
            .into_iter()
            .filter(|p| !p.is_empty())
            .map(|mut p| {
                p.sort_unstable();
                p.dedup();
                p
            })
            .collect();
        parts.sort_by_key(|p| p[0]);
        let part_diameters = parts
            .iter()
            .map(|p| {
                let mut d = 0;
                for (a, &i) in p.iter().enumerate() {
                    for &j in &p[a + 1..] {
                        if i < bases.len() && j < bases.len() {
                            d = d.max(bases[i].symmetric_difference(bases[j]).card());
                        }
                    }
                }
                d
            })
            .collect();
        PartitionCertificate {
            parts,
            part_diameters,
            matroid_diameter: m.diameter(),
        }
    }

    /// Color classes of a proper diameter-graph coloring form a valid
    /// partition.
    pub fn from_coloring(m: &Matroid, coloring: &Coloring) -> PartitionCertificate {
        Self::from_parts(m, coloring.classes())
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

/// Result of a certificate check; violations are values, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateCheck {
    Valid,
    Violation(CertificateViolation),
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertificateCheck::Valid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("basis index {index} out of range")]
    IndexOutOfRange { index: usize },
    #[error("basis index {index} appears in two parts")]
    DuplicateIndex { index: usize },
    #[error("basis index {index} is not covered")]
    MissingIndex { index: usize },
    #[error("stated matroid diameter {stated} differs from actual {actual}")]
    DiameterMismatch { stated: usize, actual: usize },
    #[error("part {part} is not below the matroid diameter (bases {a} and {b})")]
    PartNotBelowDiameter { part: usize, a: usize, b: usize },
}

/// Checks that a certificate is a disjoint cover of all basis indices and
/// that every part diameter is strictly below the matroid diameter.
pub fn validate_certificate(m: &Matroid, cert: &PartitionCertificate) -> CertificateCheck {
    use CertificateViolation::*;
    let count = m.bases().len();
    let mut seen = vec![false; count];
    for part in &cert.parts {
        for &i in part {
            if i >= count {
                return CertificateCheck::Violation(IndexOutOfRange { index: i });
            }
            if seen[i] {
                return CertificateCheck::Violation(DuplicateIndex { index: i });
            }
            seen[i] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return CertificateCheck::Violation(MissingIndex { index: missing });
    }
    let diameter = m.diameter();
    if cert.matroid_diameter != diameter {
        return CertificateCheck::Violation(DiameterMismatch {
            stated: cert.matroid_diameter,
            actual: diameter,
        });
    }
    let bases = m.bases();
    for (p, part) in cert.parts.iter().enumerate() {
        if part.len() == 1 && diameter == 0 {
            // single-basis matroid: 0 < 0 fails, no valid partition exists
            return CertificateCheck::Violation(PartNotBelowDiameter {
                part: p,
                a: part[0],
                b: part[0],
            });
        }
        for (x, &i) in part.iter().enumerate() {
            for &j in &part[x + 1..] {
                if bases[i].symmetric_difference(bases[j]).card() >= diameter {
                    return CertificateCheck::Violation(PartNotBelowDiameter { part: p, a: i, b: j });
                }
            }
        }
    }
    CertificateCheck::Valid
}

/// A Borsuk number: finite, or infinite for single-basis matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorsukValue {
    Finite(usize),
    Infinite,
}

impl BorsukValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, BorsukValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            BorsukValue::Finite(v) => Some(*v),
            BorsukValue::Infinite => None,
        }
    }
}

impl PartialOrd for BorsukValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BorsukValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use BorsukValue::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl std::fmt::Display for BorsukValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BorsukValue::Finite(v) => write!(f, "{v}"),
            BorsukValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Exact Borsuk number plus the evidence behind it.
#[derive(Clone, Debug)]
pub struct BorsukResult {
    pub value: BorsukValue,
    /// Optimal partition; absent when the value is infinite.
    pub certificate: Option<PartitionCertificate>,
    /// Pairwise diameter-realizing bases, present when the greedy clique is
    /// tight (its size then equals the value).
    pub lower_bound_witness: Option<Vec<usize>>,
}

/// Exact chromatic number with a proper coloring, within the budget.
pub fn chromatic_number(
    g: &ConflictGraph,
    budget: &Budget,
) -> Result<(usize, Coloring), ColoringError> {
    let result = solve_chromatic(g, budget)?;
    let coloring = Coloring {
        assignment: result.coloring,
        colors: result.chromatic,
    };
    debug_assert!(g.vertex_count() == 0 || coloring.is_proper_for(g));
    Ok((result.chromatic, coloring))
}

/// Exact Borsuk number: infinite for a single basis, otherwise the
/// chromatic number of the diameter graph, with the color classes as the
/// optimal partition.
pub fn borsuk_number(m: &Matroid, budget: &Budget) -> Result<BorsukResult, ColoringError> {
    if m.bases().len() == 1 {
        return Ok(BorsukResult {
            value: BorsukValue::Infinite,
            certificate: None,
            lower_bound_witness: None,
        });
    }
    let dg = diameter_graph(m)?;
    let result = solve_chromatic(&dg, budget)?;
    let coloring = Coloring {
        assignment: result.coloring,
        colors: result.chromatic,
    };
    let certificate = PartitionCertificate::from_coloring(m, &coloring);
    let witness = (result.clique.len() == result.chromatic).then_some(result.clique);
    Ok(BorsukResult {
        value: BorsukValue::Finite(result.chromatic),
        certificate: Some(certificate),
        lower_bound_witness: witness,
    })
}

/// Evidence for (or against) the Borsuk property `f(M) <= n - c + 1`.
#[derive(Clone, Debug)]
pub struct BorsukPropertyEvidence {
    pub holds: bool,
    pub value: BorsukValue,
    pub elements: usize,
    pub components: usize,
    pub bound: usize,
}

pub fn has_borsuk_property(
    m: &Matroid,
    budget: &Budget,
) -> Result<BorsukPropertyEvidence, ColoringError> {
    let components = m.connected_components().count();
    let bound = m.n() + 1 - components;
    let result = borsuk_number(m, budget)?;
    let holds = match result.value {
        BorsukValue::Finite(v) => v <= bound,
        BorsukValue::Infinite => false,
    };
    Ok(BorsukPropertyEvidence {
        holds,
        value: result.value,
        elements: m.n(),
        components,
        bound,
    })
}

/// Colors every basis by the smallest element it shares with the given
/// cocircuit. Proper for the Kneser graph, with at most `|C*|` colors,
/// because disjoint bases pick distinct elements of the cocircuit.
pub fn cocircuit_coloring(m: &Matroid, cstar: ElementSet) -> Result<Coloring, ColoringError> {
    if !m.cocircuits().contains(&cstar) {
        return Err(ColoringError::NotACocircuit);
    }
    let raw: Vec<usize> = m
        .bases()
        .iter()
        .map(|b| {
            b.intersection(cstar)
                .min_element()
                .expect("every basis meets every cocircuit")
        })
        .collect();
    Ok(Coloring::compact(&raw))
}

/// The classical proper coloring of `KG(n, r)` with `n - 2r + 2` colors:
/// class `i` (for `i <= n - 2r + 1`, 1-based) holds the `r`-subsets with
/// minimum `i`, and the last class holds the subsets of the final `2r - 1`
/// elements.
pub fn kneser_standard_coloring(n: usize, r: usize) -> Result<Coloring, ColoringError> {
    if r < 1 || n + 1 < 2 * r {
        return Err(ColoringError::BadParams(format!(
            "kneser_standard_coloring({n}, {r}) needs r >= 1 and n >= 2r - 1"
        )));
    }
    let m = crate::families::uniform(r, n)?;
    let coloring = standard_coloring_over(&m, n, r);
    debug_assert_eq!(coloring.colors, n + 2 - 2 * r);
    Ok(coloring)
}

/// Restriction of the standard Kneser coloring to the bases of a rank-r
/// matroid on `n` elements. Proper for its Kneser graph because that graph
/// is a subgraph of `KG(n, r)` on a subset of the vertices.
pub fn kneser_standard_coloring_for(m: &Matroid) -> Result<Coloring, ColoringError> {
    let (n, r) = (m.n(), m.rank());
    if r < 1 || n + 1 < 2 * r {
        return Err(ColoringError::BadParams(format!(
            "standard coloring needs rank >= 1 and n >= 2 rk - 1, got n={n}, rk={r}"
        )));
    }
    Ok(standard_coloring_over(m, n, r))
}

fn standard_coloring_over(m: &Matroid, n: usize, r: usize) -> Coloring {
    let cutoff = (n + 1) - 2 * r; // 0-based minimums below this get their own class
    let raw: Vec<usize> = m
        .bases()
        .iter()
        .map(|b| {
            let min = b.min_element().expect("nonempty basis");
            min.min(cutoff)
        })
        .collect();
    Coloring::compact(&raw)
}

/// The explicit partition showing `f(theta(n)) <= n - 2` for `n >= 5`: part
/// `i` collects the bases whose smallest x-index is `i`, capped at `n - 2`;
/// the all-y basis joins part 1.
pub fn theta_partition(n: usize) -> Result<PartitionCertificate, ColoringError> {
    if n < 5 {
        return Err(ColoringError::BadParams(format!(
            "theta_partition({n}) needs n >= 5"
        )));
    }
    let m = theta(n)?;
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); n - 2];
    for (index, &b) in m.bases().iter().enumerate() {
        // x_i sits at ground index i - 1
        let least_x = b
            .intersection(ElementSet::full(n))
            .min_element()
            .map(|i| i + 1);
        let part = match least_x {
            Some(i) => i.min(n - 2),
            None => 1,
        };
        parts[part - 1].push(index);
    }
    Ok(PartitionCertificate::from_parts(&m, parts))
}

/// The rank-driven partition for a connected matroid whose bases pairwise
/// intersect: each basis is keyed by an `(s+1)`-tuple inside it, where `s`
/// is the minimum pairwise basis intersection. Bases meeting in exactly `s`
/// elements get distinct keys, so no part contains a diameter pair. The
/// number of parts is at most `2^(r-2) (r+2)^2`.
pub fn rankr_partition(m: &Matroid) -> Result<PartitionCertificate, ColoringError> {
    let bases = m.bases();
    if bases.len() < 2 {
        return Err(ColoringError::SingleBasis);
    }
    if m.connected_components().count() != 1 {
        return Err(ColoringError::NotConnected);
    }
    // s = minimum pairwise intersection; first realizing pair gives B0, B1
    let mut s = usize::MAX;
    let mut pair = (0usize, 1usize);
    for (i, &a) in bases.iter().enumerate() {
        for (j, &b) in bases.iter().enumerate().skip(i + 1) {
            let inter = a.intersection(b).card();
            if inter < s {
                s = inter;
                pair = (i, j);
            }
        }
    }
    if s == 0 {
        return Err(ColoringError::DisjointBasesExist);
    }
    let b0 = bases[pair.0];
    let b1 = bases[pair.1];
    // B(e): a basis avoiding e; reuse B1 whenever possible
    let avoiding = |e: usize| -> Result<ElementSet, ColoringError> {
        if !b1.contains(e) {
            return Ok(b1);
        }
        bases
            .iter()
            .copied()
            .find(|b| !b.contains(e))
            .ok_or_else(|| {
                ColoringError::PreconditionFailed(format!(
                    "element {e} is a coloop, no basis avoids it"
                ))
            })
    };
    let mut groups: BTreeMap<(u64, usize), Vec<usize>> = BTreeMap::new();
    for (index, &b) in bases.iter().enumerate() {
        // the s smallest elements of B /\ B0
        let mut tuple = ElementSet::EMPTY;
        for e in b.intersection(b0).iter().take(s) {
            tuple.insert(e);
        }
        debug_assert_eq!(tuple.card(), s);
        let e = tuple.min_element().expect("s >= 1");
        let be = avoiding(e)?;
        let f = b
            .intersection(be)
            .difference(tuple)
            .min_element()
            .expect("intersection exceeds the tuple");
        groups.entry((tuple.mask(), f)).or_default().push(index);
    }
    Ok(PartitionCertificate::from_parts(
        m,
        groups.into_values().collect(),
    ))
}

/// Upper bound `2^(r-2) (r+2)^2` on the part count of [`rankr_partition`]
/// for rank `r >= 2`.
pub fn rankr_part_bound(rank: usize) -> u128 {
    debug_assert!(rank >= 2);
    (1u128 << (rank - 2)) * ((rank + 2) as u128).pow(2)
}

/// Lifts a partition of `M`'s bases to `M (+) M'`: the part of `B + B'` is
/// the part of `B`. Part count is unchanged.
pub fn direct_sum_partition(
    m: &Matroid,
    other: &Matroid,
    cert: &PartitionCertificate,
) -> Result<PartitionCertificate, ColoringError> {
    if let CertificateCheck::Violation(v) = validate_certificate(m, cert) {
        return Err(ColoringError::InvalidInputCertificate(v.to_string()));
    }
    let sum = m.direct_sum(other);
    let mut part_of = vec![usize::MAX; m.bases().len()];
    for (p, part) in cert.parts.iter().enumerate() {
        for &i in part {
            part_of[i] = p;
        }
    }
    let n = m.n();
    let left_ground = ElementSet::full(n);
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); cert.parts.len()];
    for (index, &d) in sum.bases().iter().enumerate() {
        let left = d.intersection(left_ground);
        let i = m
            .basis_index(left)
            .expect("direct-sum basis restricts to a basis");
        parts[part_of[i]].push(index);
    }
    Ok(PartitionCertificate::from_parts(&sum, parts))
}

/// Which of the two series-connection partition constructions to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesVariant {
    /// At most `k + k'` parts: bases whose right side avoids the shared
    /// element follow the left partition, the others follow the right one.
    Sum,
    /// At most `min(k, k')` parts; needs two disjoint bases of the left
    /// matroid avoiding the shared element, so that the diameter of the
    /// connection splits over the two sides.
    Min,
}

/// Builds a diameter partition of `Ser(M, M')` from partitions of the two
/// sides.
pub fn series_partition(
    m: &Matroid,
    p: &Label,
    other: &Matroid,
    p2: &Label,
    cert_left: &PartitionCertificate,
    cert_right: &PartitionCertificate,
    variant: SeriesVariant,
) -> Result<PartitionCertificate, ColoringError> {
    if let CertificateCheck::Violation(v) = validate_certificate(m, cert_left) {
        return Err(ColoringError::InvalidInputCertificate(format!("left: {v}")));
    }
    if let CertificateCheck::Violation(v) = validate_certificate(other, cert_right) {
        return Err(ColoringError::InvalidInputCertificate(format!("right: {v}")));
    }
    let p_left = m.index_of(p)?;
    let p_right = other.index_of(p2)?;
    if variant == SeriesVariant::Min {
        let disjoint_avoiding = m.bases().iter().enumerate().any(|(i, &a)| {
            !a.contains(p_left)
                && m.bases()
                    .iter()
                    .skip(i + 1)
                    .any(|&b| !b.contains(p_left) && a.is_disjoint_from(b))
        });
        if !disjoint_avoiding {
            return Err(ColoringError::PreconditionFailed(
                "no two disjoint bases of the left matroid avoid the shared element".into(),
            ));
        }
    }
    let ser = m.series_connection(p, other, p2)?;
    // layout of the connection: left indices unchanged, right element j maps
    // to p_left (j == p_right) or to n + j adjusted for the skipped slot
    let n = m.n();
    let map_right = |b: ElementSet| -> ElementSet {
        b.iter()
            .map(|j| {
                if j == p_right {
                    p_left
                } else if j < p_right {
                    n + j
                } else {
                    n + j - 1
                }
            })
            .collect()
    };
    let part_lookup = |cert: &PartitionCertificate, count: usize| {
        let mut part_of = vec![usize::MAX; count];
        for (p, part) in cert.parts.iter().enumerate() {
            for &i in part {
                part_of[i] = p;
            }
        }
        part_of
    };
    let left_parts = part_lookup(cert_left, m.bases().len());
    let right_parts = part_lookup(cert_right, other.bases().len());
    let k_left = cert_left.parts.len();
    let k_right = cert_right.parts.len();

    // preferred decomposition of each connection basis: right side avoiding
    // the shared element when possible, first (left, right) pair otherwise
    let mut decomposition: Vec<Option<(usize, usize, bool)>> = vec![None; ser.bases().len()];
    for (i, &b) in m.bases().iter().enumerate() {
        for (j, &b2) in other.bases().iter().enumerate() {
            if b.contains(p_left) && b2.contains(p_right) {
                continue;
            }
            let d = b.union(map_right(b2));
            let index = ser
                .basis_index(d)
                .expect("pair union is a basis of the connection");
            let right_has_p = b2.contains(p_right);
            match decomposition[index] {
                None => decomposition[index] = Some((i, j, right_has_p)),
                Some((_, _, true)) if !right_has_p => {
                    decomposition[index] = Some((i, j, right_has_p))
                }
                _ => (),
            }
        }
    }

    let part_count = match variant {
        SeriesVariant::Sum => k_left + k_right,
        SeriesVariant::Min => k_left.min(k_right),
    };
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); part_count];
    for (index, slot) in decomposition.iter().enumerate() {
        let (i, j, right_has_p) = slot.expect("every connection basis decomposes");
        let part = match variant {
            SeriesVariant::Sum => {
                if right_has_p {
                    k_left + right_parts[j]
                } else {
                    left_parts[i]
                }
            }
            SeriesVariant::Min => {
                if k_left <= k_right {
                    left_parts[i]
                } else {
                    right_parts[j]
                }
            }
        };
        parts[part].push(index);
    }
    Ok(PartitionCertificate::from_parts(&ser, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{graphic, sbip_graphic_example, uniform, SimpleGraph};

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn chromatic_number_examples() {
        let petersen = kneser_graph(&uniform(2, 5).unwrap()).unwrap();
        let (k, coloring) = chromatic_number(&petersen, &unlimited()).unwrap();
        assert_eq!(k, 3);
        assert!(coloring.is_proper_for(&petersen));

        let edgeless = ConflictGraph::new(7).unwrap();
        assert_eq!(chromatic_number(&edgeless, &unlimited()).unwrap().0, 1);
        let empty = ConflictGraph::new(0).unwrap();
        assert_eq!(chromatic_number(&empty, &unlimited()).unwrap().0, 0);
    }

    #[test]
    fn borsuk_number_examples() {
        let t3 = theta(3).unwrap();
        let r = borsuk_number(&t3, &unlimited()).unwrap();
        assert_eq!(r.value, BorsukValue::Finite(2));
        assert!(validate_certificate(&t3, r.certificate.as_ref().unwrap()).is_valid());

        let single = uniform(1, 1).unwrap();
        let r = borsuk_number(&single, &unlimited()).unwrap();
        assert_eq!(r.value, BorsukValue::Infinite);
        assert!(r.certificate.is_none());

        let g = sbip_graphic_example();
        let m = graphic(&g).unwrap();
        let r = borsuk_number(&m, &unlimited()).unwrap();
        assert_eq!(r.value, BorsukValue::Finite(3));
    }

    #[test]
    fn borsuk_property_examples() {
        assert!(!has_borsuk_property(&uniform(1, 1).unwrap(), &unlimited())
            .unwrap()
            .holds);

        let m = crate::matroid::Matroid::from_bases(
            crate::matroid::int_labels(4),
            &[
                vec![1.into(), 2.into()],
                vec![1.into(), 3.into()],
                vec![2.into(), 3.into()],
            ],
        )
        .unwrap();
        let ev = has_borsuk_property(&m, &unlimited()).unwrap();
        assert!(ev.holds);
        assert_eq!(ev.value, BorsukValue::Finite(3));
        assert_eq!(ev.bound, 3); // n - c + 1 = 4 - 2 + 1

        let t6 = theta(6).unwrap();
        let ev = has_borsuk_property(&t6, &unlimited()).unwrap();
        assert!(ev.holds);
        assert!(ev.value <= BorsukValue::Finite(4));
    }

    #[test]
    fn borsuk_at_least_two_with_two_bases() {
        for m in [
            uniform(1, 2).unwrap(),
            uniform(2, 3).unwrap(),
            theta(2).unwrap(),
        ] {
            let v = borsuk_number(&m, &unlimited()).unwrap().value;
            assert!(v >= BorsukValue::Finite(2), "{m:?}");
        }
    }

    #[test]
    fn cocircuit_coloring_examples() {
        let u24 = uniform(2, 4).unwrap();
        let cstar = ElementSet::from_indices([0, 1, 2]);
        let coloring = cocircuit_coloring(&u24, cstar).unwrap();
        let kg = kneser_graph(&u24).unwrap();
        assert!(coloring.is_proper_for(&kg));
        assert!(coloring.colors <= 3);

        let u12 = uniform(1, 2).unwrap();
        let coloring = cocircuit_coloring(&u12, ElementSet::from_indices([0, 1])).unwrap();
        assert_eq!(coloring.colors, 2);

        assert!(matches!(
            cocircuit_coloring(&u24, ElementSet::from_indices([0])),
            Err(ColoringError::NotACocircuit)
        ));
    }

    #[test]
    fn cocircuit_coloring_on_graphic_example() {
        let g = sbip_graphic_example();
        let m = graphic(&g).unwrap();
        // the two edges at a degree-two vertex form a cocircuit
        let degree_two = (0..g.vertex_count())
            .find(|&v| g.degree(v) == 2)
            .expect("a degree-two vertex exists");
        let cstar = ElementSet::from_indices(g.edges_at(degree_two));
        let coloring = cocircuit_coloring(&m, cstar).unwrap();
        assert!(coloring.colors <= 2);
        assert!(coloring.is_proper_for(&kneser_graph(&m).unwrap()));
    }

    #[test]
    fn standard_coloring_examples() {
        let c = kneser_standard_coloring(5, 2).unwrap();
        assert_eq!(c.colors, 3);
        assert!(c.is_proper_for(&kneser_graph(&uniform(2, 5).unwrap()).unwrap()));

        let c = kneser_standard_coloring(4, 2).unwrap();
        assert_eq!(c.colors, 2);

        let fano = crate::families::fano();
        let c = kneser_standard_coloring_for(&fano).unwrap();
        assert!(c.colors <= 3);
        assert!(c.is_proper_for(&kneser_graph(&fano).unwrap()));

        // n = 2r - 1 leaves a single class
        assert_eq!(kneser_standard_coloring(3, 2).unwrap().colors, 1);
        assert!(kneser_standard_coloring(2, 2).is_err());
    }

    #[test]
    fn theta_partition_validates() {
        for n in 5..=6 {
            let cert = theta_partition(n).unwrap();
            assert!(cert.part_count() <= n - 2);
            let m = theta(n).unwrap();
            assert!(validate_certificate(&m, &cert).is_valid(), "theta({n})");
        }
        assert!(theta_partition(4).is_err());
    }

    #[test]
    fn theta_partition_negative_control() {
        // merging everything into one part must fail
        let m = theta(5).unwrap();
        let all: Vec<usize> = (0..m.bases().len()).collect();
        let cert = PartitionCertificate::from_parts(&m, vec![all]);
        match validate_certificate(&m, &cert) {
            CertificateCheck::Violation(CertificateViolation::PartNotBelowDiameter {
                a, b, ..
            }) => {
                let d = m.basis_distance(m.bases()[a], m.bases()[b]).unwrap();
                assert_eq!(d, m.diameter());
            }
            other => panic!("expected a diameter violation, got {other:?}"),
        }
    }

    #[test]
    fn validator_rejects_missing_and_duplicate() {
        let m = uniform(2, 4).unwrap();
        let missing = PartitionCertificate {
            parts: vec![vec![0]],
            part_diameters: vec![0],
            matroid_diameter: m.diameter(),
        };
        assert!(matches!(
            validate_certificate(&m, &missing),
            CertificateCheck::Violation(CertificateViolation::MissingIndex { .. })
        ));
        let duplicated = PartitionCertificate {
            parts: vec![(0..m.bases().len()).collect(), vec![0]],
            part_diameters: vec![0, 0],
            matroid_diameter: m.diameter(),
        };
        assert!(matches!(
            validate_certificate(&m, &duplicated),
            CertificateCheck::Violation(CertificateViolation::DuplicateIndex { .. })
        ));
    }

    #[test]
    fn rankr_partition_on_u34_is_singletons() {
        let m = uniform(3, 4).unwrap();
        let cert = rankr_partition(&m).unwrap();
        assert_eq!(cert.part_count(), 4);
        assert!(cert.parts.iter().all(|p| p.len() == 1));
        assert!(validate_certificate(&m, &cert).is_valid());
        assert!(cert.part_count() as u128 <= rankr_part_bound(3));
    }

    #[test]
    fn rankr_partition_on_catalog() {
        for (name, m) in [
            ("theta(5)", theta(5).unwrap()),
            ("theta(6)", theta(6).unwrap()),
            ("u(4,6)", uniform(4, 6).unwrap()),
            ("graphic example", graphic(&sbip_graphic_example()).unwrap()),
        ] {
            let cert = rankr_partition(&m).unwrap();
            assert!(validate_certificate(&m, &cert).is_valid(), "{name}");
            assert!(
                cert.part_count() as u128 <= rankr_part_bound(m.rank()),
                "{name}: {} parts",
                cert.part_count()
            );
        }
    }

    #[test]
    fn rankr_partition_preconditions() {
        assert!(matches!(
            rankr_partition(&uniform(2, 4).unwrap()),
            Err(ColoringError::DisjointBasesExist)
        ));
        assert!(matches!(
            rankr_partition(&uniform(1, 1).unwrap()),
            Err(ColoringError::SingleBasis)
        ));
        let disconnected = uniform(2, 3).unwrap().direct_sum(&uniform(1, 3).unwrap());
        assert!(matches!(
            rankr_partition(&disconnected),
            Err(ColoringError::NotConnected)
        ));
    }

    #[test]
    fn direct_sum_partition_examples() {
        let m = uniform(2, 4).unwrap();
        let kg_cert = borsuk_number(&m, &unlimited())
            .unwrap()
            .certificate
            .unwrap();
        let single = uniform(1, 1).unwrap();
        let lifted = direct_sum_partition(&m, &single, &kg_cert).unwrap();
        assert_eq!(lifted.part_count(), kg_cert.part_count());
        assert!(validate_certificate(&m.direct_sum(&single), &lifted).is_valid());

        let u13 = uniform(1, 3).unwrap();
        let lifted = direct_sum_partition(&m, &u13, &kg_cert).unwrap();
        assert!(validate_certificate(&m.direct_sum(&u13), &lifted).is_valid());

        // garbage input certificate is rejected
        let bad = PartitionCertificate {
            parts: vec![vec![0]],
            part_diameters: vec![0],
            matroid_diameter: 0,
        };
        assert!(matches!(
            direct_sum_partition(&m, &u13, &bad),
            Err(ColoringError::InvalidInputCertificate(_))
        ));
    }

    #[test]
    fn series_partition_sum_and_min() {
        let m = uniform(2, 5).unwrap();
        let p: Label = 1.into();
        let cert = borsuk_number(&m, &unlimited()).unwrap().certificate.unwrap();
        let ser = m.series_connection(&p, &m, &p).unwrap();

        let sum = series_partition(&m, &p, &m, &p, &cert, &cert, SeriesVariant::Sum).unwrap();
        assert!(sum.part_count() <= 2 * cert.part_count());
        assert!(validate_certificate(&ser, &sum).is_valid());

        // U_{2,5} has two disjoint bases avoiding element 1
        let min = series_partition(&m, &p, &m, &p, &cert, &cert, SeriesVariant::Min).unwrap();
        assert!(min.part_count() <= cert.part_count());
        assert!(validate_certificate(&ser, &min).is_valid());
    }

    #[test]
    fn chromatic_monotone_on_catalan_chain() {
        // SG(m+r, r) embeds in KG(C-), which embeds in KG(C), which embeds
        // in KG(m+r, r); chromatic numbers must be monotone along the chain
        use crate::families::{catalan, catalan_minus};
        use crate::graphs::{schrijver_graph, subgraph_embedding_exists, EmbedOutcome};
        let (r, m) = (2usize, 3usize);
        let sg = schrijver_graph(m + r, r).unwrap();
        let kg_minus = kneser_graph(&catalan_minus(r, m).unwrap()).unwrap();
        let kg_full = kneser_graph(&catalan(r, m).unwrap()).unwrap();
        let kg_top = kneser_graph(&uniform(r, m + r).unwrap()).unwrap();
        let chain = [&sg, &kg_minus, &kg_full, &kg_top];
        for window in chain.windows(2) {
            assert!(matches!(
                subgraph_embedding_exists(window[0], window[1], 10_000_000),
                EmbedOutcome::Found(_)
            ));
        }
        let chis: Vec<usize> = chain
            .iter()
            .map(|g| chromatic_number(g, &unlimited()).unwrap().0)
            .collect();
        assert!(chis.windows(2).all(|w| w[0] <= w[1]), "{chis:?}");
        assert_eq!(chis[3], m - r + 2);
    }

    #[test]
    fn direct_sum_partition_of_three_part_cocircuit_certificate() {
        // a proper Kneser coloring from a 3-element cocircuit of U_{2,4}
        // lifts to a 3-part certificate of the sum with a single coloop
        let m = uniform(2, 4).unwrap();
        let coloring = cocircuit_coloring(&m, ElementSet::from_indices([0, 1, 2])).unwrap();
        assert_eq!(coloring.colors, 3);
        let cert = PartitionCertificate::from_coloring(&m, &coloring);
        assert!(validate_certificate(&m, &cert).is_valid());
        let coloop = uniform(1, 1).unwrap();
        let lifted = direct_sum_partition(&m, &coloop, &cert).unwrap();
        assert_eq!(lifted.part_count(), 3);
        assert!(validate_certificate(&m.direct_sum(&coloop), &lifted).is_valid());
    }

    #[test]
    fn series_partition_with_unique_basis_through_shared_element() {
        // exactly one basis of the right side contains the shared element
        let left = uniform(2, 5).unwrap();
        let right = uniform(1, 2).unwrap();
        let p: Label = 1.into();
        let cert_left = borsuk_number(&left, &unlimited())
            .unwrap()
            .certificate
            .unwrap();
        let cert_right = borsuk_number(&right, &unlimited())
            .unwrap()
            .certificate
            .unwrap();
        let sum = series_partition(
            &left,
            &p,
            &right,
            &p,
            &cert_left,
            &cert_right,
            SeriesVariant::Sum,
        )
        .unwrap();
        let ser = left.series_connection(&p, &right, &p).unwrap();
        assert!(validate_certificate(&ser, &sum).is_valid());
        assert!(sum.part_count() <= cert_left.part_count() + cert_right.part_count());
    }

    #[test]
    fn series_partition_min_precondition() {
        // in U_{2,3} every pair of bases avoiding a fixed element intersects
        let m = uniform(2, 3).unwrap();
        let p: Label = 1.into();
        let cert = borsuk_number(&m, &unlimited()).unwrap().certificate.unwrap();
        assert!(matches!(
            series_partition(&m, &p, &m, &p, &cert, &cert, SeriesVariant::Min),
            Err(ColoringError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn series_partition_rejects_single_basis_certificate() {
        // a single-basis right side has no valid partition at all
        let left = uniform(2, 5).unwrap();
        let p: Label = 1.into();
        let right = graphic(&SimpleGraph::path(3)).unwrap();
        let cert_left = borsuk_number(&left, &unlimited())
            .unwrap()
            .certificate
            .unwrap();
        let cert_right = PartitionCertificate::from_parts(&right, vec![vec![0]]);
        assert!(matches!(
            series_partition(
                &left,
                &p,
                &right,
                &1.into(),
                &cert_left,
                &cert_right,
                SeriesVariant::Sum,
            ),
            Err(ColoringError::InvalidInputCertificate(_))
        ));
    }
}
