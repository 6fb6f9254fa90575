//! Finite simplicial complexes stored by their facets.
//!
//! A complex over the ground set `[n] = {1, ..., n}` is represented by its
//! maximal faces only; membership of any coalition is a subset test against
//! that antichain. Faces are fixed-width bitmasks (one bit per vertex,
//! `n <= 64`), so all the subset algebra is plain mask arithmetic.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Hard cap on the ground-set size imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex count must be at least 1")]
    ZeroVertices,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("face {face} has a vertex outside 1..={n}")]
    VertexOutOfRange { face: Face, n: usize },
    #[error("face {0} is not a member of the complex")]
    InfeasibleFace(Face),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
}

/// A player of the game, identified by a 1-based index into the ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(u32);

impl Vertex {
    pub fn new(id: u32) -> Self {
        assert!(
            id >= 1 && id as usize <= MAX_VERTICES,
            "vertex ids are 1-based and bounded by {MAX_VERTICES}"
        );
        Vertex(id)
    }

    pub fn id(&self) -> u32 {
        self.0
    }

    /// Zero-based position, for indexing into per-player vectors.
    pub fn index(&self) -> usize {
        (self.0 - 1) as usize
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A coalition: a duplicate-free set of vertices, canonically a bitmask.
///
/// The ordering is the deterministic face order used everywhere in this
/// crate: by cardinality first, then lexicographically on the ascending
/// member list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(v: Vertex) -> Self {
        Face(1u64 << (v.0 - 1))
    }

    pub fn from_members<I: IntoIterator<Item = u32>>(members: I) -> Self {
        let mut mask = 0u64;
        for id in members {
            assert!(
                id >= 1 && id as usize <= MAX_VERTICES,
                "vertex ids are 1-based and bounded by {MAX_VERTICES}"
            );
            mask |= 1u64 << (id - 1);
        }
        Face(mask)
    }

    /// The full face `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&n));
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn card(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0 & (1u64 << (v.0 - 1)) != 0
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(&self, other: &Face) -> bool {
        self.0 != other.0 && self.is_subset(other)
    }

    pub fn union(&self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(&self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(&self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn insert(&self, v: Vertex) -> Face {
        Face(self.0 | (1u64 << (v.0 - 1)))
    }

    pub fn remove(&self, v: Vertex) -> Face {
        Face(self.0 & !(1u64 << (v.0 - 1)))
    }

    pub fn members(&self) -> impl Iterator<Item = Vertex> + '_ {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some(Vertex(bit + 1))
            }
        })
    }

    pub fn member_ids(&self) -> Vec<u32> {
        self.members().map(|v| v.id()).collect()
    }

    /// All subsets of this face, in canonical order, the empty face included.
    pub fn subsets(&self) -> Vec<Face> {
        let mut out = Vec::with_capacity(1 << self.card());
        let mask = self.0;
        let mut sub = mask;
        loop {
            out.push(Face(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        out.sort();
        out
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.card().cmp(&other.card()).then_with(|| {
            if self.0 == other.0 {
                return Ordering::Equal;
            }
            // Same cardinality: the face holding the smallest vertex in the
            // symmetric difference comes first, which is exactly the
            // lexicographic order on the ascending member lists.
            let diff = self.0 ^ other.0;
            let low = diff & diff.wrapping_neg();
            if self.0 & low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.id())?;
        }
        write!(f, "}}")
    }
}

/// A feasible-coalition structure: the ground set size, the facets
/// (maximal faces, an antichain), and optional display labels.
///
/// Downward closure is implicit: a face belongs to the complex exactly when
/// it is contained in some facet.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    labels: Option<Vec<String>>,
}

impl PartialEq for SimplicialComplex {
    /// Structural equality; labels are presentation only.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Canonicalizes an arbitrary family of candidate maximal sets:
    /// duplicates are merged and dominated candidates (subsets of another
    /// candidate) are silently dropped. An empty candidate list yields the
    /// complex whose single face is the empty coalition.
    pub fn from_facets(
        n: usize,
        candidates: impl IntoIterator<Item = Face>,
    ) -> Result<Self, ComplexError> {
        if n == 0 {
            return Err(ComplexError::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(n));
        }
        let full = Face::full(n);
        let mut sets: Vec<Face> = Vec::new();
        for cand in candidates {
            if !cand.is_subset(&full) {
                return Err(ComplexError::VertexOutOfRange { face: cand, n });
            }
            if !sets.contains(&cand) {
                sets.push(cand);
            }
        }
        let mut facets: Vec<Face> = sets
            .iter()
            .filter(|c| !sets.iter().any(|d| c.is_strict_subset(d)))
            .copied()
            .collect();
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        facets.sort();
        Ok(SimplicialComplex {
            n,
            facets,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ComplexError> {
        if labels.len() != self.n {
            return Err(ComplexError::LabelCount {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.get(v.index()))
            .map(|s| s.as_str())
    }

    /// Resolves a display label back to its vertex.
    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        let ls = self.labels.as_ref()?;
        ls.iter()
            .position(|l| l == label)
            .map(|idx| Vertex::new(idx as u32 + 1))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.n as u32).map(Vertex::new)
    }

    /// Vertices that appear in at least one facet (the actual players).
    pub fn support(&self) -> Face {
        self.facets
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Every face of the complex, the empty face included, in canonical
    /// order. Enumeration is exponential in the rank; intended for desk
    /// scale (total face count up to roughly a million).
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for facet in &self.facets {
            let mask = facet.0;
            let mut sub = mask;
            loop {
                seen.insert(Face(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort();
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// The coalitions the anchor `s` can be extended by: all faces `A`
    /// disjoint from `s` with `A ∪ s` still feasible.
    pub fn link(&self, s: Face) -> Result<Vec<Face>, ComplexError> {
        if !self.contains(s) {
            return Err(ComplexError::InfeasibleFace(s));
        }
        let mut seen: HashSet<Face> = HashSet::new();
        for facet in self.facets.iter().filter(|f| s.is_subset(f)) {
            let room = facet.difference(s);
            let mask = room.0;
            let mut sub = mask;
            loop {
                seen.insert(Face(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn link_of_player(&self, v: Vertex) -> Result<Vec<Face>, ComplexError> {
        self.link(Face::singleton(v))
    }

    pub fn facets_containing(&self, t: Face) -> Vec<Face> {
        self.facets
            .iter()
            .filter(|f| t.is_subset(f))
            .copied()
            .collect()
    }

    /// Number of facets containing `s`; zero when `s` is infeasible.
    pub fn m_count(&self, s: Face) -> usize {
        self.facets.iter().filter(|f| s.is_subset(f)).count()
    }

    /// Maximal facet cardinality.
    pub fn rank(&self) -> usize {
        self.facets.iter().map(|f| f.card()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let r = self.rank();
        self.facets.iter().all(|f| f.card() == r)
    }

    /// Purity plus the base-exchange property on every facet pair.
    pub fn is_matroid(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let facet_set: HashSet<Face> = self.facets.iter().copied().collect();
        for a in &self.facets {
            for b in &self.facets {
                if a == b {
                    continue;
                }
                for v in a.difference(*b).members() {
                    let trimmed = a.remove(v);
                    let exchangeable = b
                        .difference(*a)
                        .members()
                        .any(|w| facet_set.contains(&trimmed.insert(w)));
                    if !exchangeable {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Size of the largest feasible subset of `s`; the matroid rank
    /// function when the complex is a matroid.
    pub fn generalized_rank(&self, s: Face) -> usize {
        assert!(
            s.is_subset(&Face::full(self.n)),
            "coalition outside the ground set"
        );
        self.facets
            .iter()
            .map(|f| f.intersection(s).card())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn face(ids: &[u32]) -> Face {
        Face::from_members(ids.iter().copied())
    }

    #[test]
    fn face_order_is_size_then_lex() {
        let mut faces = vec![
            face(&[2, 3]),
            face(&[1, 4]),
            face(&[1, 2]),
            face(&[3]),
            Face::EMPTY,
            face(&[1, 2, 3]),
        ];
        faces.sort();
        assert_eq!(
            faces,
            vec![
                Face::EMPTY,
                face(&[3]),
                face(&[1, 2]),
                face(&[1, 4]),
                face(&[2, 3]),
                face(&[1, 2, 3]),
            ]
        );
    }

    #[test]
    fn from_facets_drops_dominated_sets() {
        let c =
            SimplicialComplex::from_facets(3, vec![face(&[1, 2]), face(&[1]), face(&[2, 3])])
                .unwrap();
        assert_eq!(c.facets(), &[face(&[1, 2]), face(&[2, 3])]);
    }

    #[test]
    fn from_facets_prototype_listing_reduces_to_five_facets() {
        // The twenty-set listing, dominated members and all.
        let listing: Vec<Face> = vec![
            Face::EMPTY,
            face(&[1]),
            face(&[2]),
            face(&[3]),
            face(&[5]),
            face(&[4]),
            face(&[1, 2]),
            face(&[1, 3]),
            face(&[2, 3]),
            face(&[1, 2, 3]),
            face(&[3, 5]),
            face(&[3, 4]),
            face(&[4, 5]),
            face(&[3, 4, 5]),
            face(&[3, 6]),
            face(&[4, 6]),
            face(&[3, 4, 6]),
            face(&[5, 6]),
            face(&[3, 5, 6]),
            face(&[4, 5, 6]),
        ];
        assert_eq!(listing.len(), 20);
        let c = SimplicialComplex::from_facets(6, listing).unwrap();
        assert_eq!(
            c.facets(),
            &[
                face(&[1, 2, 3]),
                face(&[3, 4, 5]),
                face(&[3, 4, 6]),
                face(&[3, 5, 6]),
                face(&[4, 5, 6]),
            ]
        );
        assert_eq!(c, fixtures::prototype());
    }

    #[test]
    fn empty_candidate_list_yields_the_empty_complex() {
        let c = SimplicialComplex::from_facets(2, vec![]).unwrap();
        assert_eq!(c.facets(), &[Face::EMPTY]);
        assert_eq!(c.faces(), vec![Face::EMPTY]);
        assert_eq!(c.rank(), 0);
        assert!(c.is_pure());
    }

    #[test]
    fn out_of_range_vertex_is_rejected_naming_the_set() {
        let err = SimplicialComplex::from_facets(3, vec![face(&[1, 4])]).unwrap_err();
        assert_eq!(
            err,
            ComplexError::VertexOutOfRange {
                face: face(&[1, 4]),
                n: 3
            }
        );
        assert!(err.to_string().contains("{1,4}"));
    }

    #[test]
    fn contains_prototype_cases() {
        let c = fixtures::prototype();
        assert!(c.contains(face(&[3, 4])));
        assert!(!c.contains(face(&[1, 4])));
        assert!(c.contains(Face::EMPTY));
    }

    #[test]
    fn faces_counts() {
        let c = fixtures::prototype();
        assert_eq!(c.face_count(), 21);
        let simplex = SimplicialComplex::from_facets(3, vec![face(&[1, 2, 3])]).unwrap();
        assert_eq!(simplex.face_count(), 8);
    }

    #[test]
    fn faces_are_deterministically_ordered() {
        let c = fixtures::prototype();
        let fs = c.faces();
        let mut sorted = fs.clone();
        sorted.sort();
        assert_eq!(fs, sorted);
        assert_eq!(fs[0], Face::EMPTY);
    }

    #[test]
    fn link_of_player_four_in_prototype() {
        let c = fixtures::prototype();
        let l = c.link(face(&[4])).unwrap();
        assert_eq!(
            l,
            vec![
                Face::EMPTY,
                face(&[3]),
                face(&[5]),
                face(&[6]),
                face(&[3, 5]),
                face(&[3, 6]),
                face(&[5, 6]),
            ]
        );
    }

    #[test]
    fn link_of_player_one_in_prototype() {
        let c = fixtures::prototype();
        let l = c.link(face(&[1])).unwrap();
        assert_eq!(
            l,
            vec![Face::EMPTY, face(&[2]), face(&[3]), face(&[2, 3])]
        );
    }

    #[test]
    fn link_on_full_simplex() {
        let c = SimplicialComplex::from_facets(2, vec![face(&[1, 2])]).unwrap();
        assert_eq!(c.link(face(&[1])).unwrap(), vec![Face::EMPTY, face(&[2])]);
    }

    #[test]
    fn link_of_infeasible_anchor_errors() {
        let c = fixtures::prototype();
        assert_eq!(
            c.link(face(&[1, 4])).unwrap_err(),
            ComplexError::InfeasibleFace(face(&[1, 4]))
        );
    }

    #[test]
    fn facets_containing_cases() {
        let c = fixtures::prototype();
        assert_eq!(
            c.facets_containing(face(&[3])),
            vec![
                face(&[1, 2, 3]),
                face(&[3, 4, 5]),
                face(&[3, 4, 6]),
                face(&[3, 5, 6]),
            ]
        );
        assert_eq!(
            c.facets_containing(face(&[1, 2, 3])),
            vec![face(&[1, 2, 3])]
        );
        assert!(c.facets_containing(face(&[1, 4])).is_empty());
    }

    #[test]
    fn m_count_cases() {
        let c = fixtures::prototype();
        assert_eq!(c.m_count(face(&[3])), 4);
        assert_eq!(c.m_count(face(&[4, 5])), 2);
        assert_eq!(c.m_count(face(&[1, 4])), 0);
    }

    #[test]
    fn rank_and_purity() {
        let c = fixtures::prototype();
        assert_eq!(c.rank(), 3);
        assert!(c.is_pure());

        let bowtie = fixtures::bowtie();
        assert_eq!(bowtie.rank(), 3);
        assert!(bowtie.is_pure());

        let mixed = SimplicialComplex::from_facets(3, vec![face(&[1, 2]), face(&[3])]).unwrap();
        assert_eq!(mixed.rank(), 2);
        assert!(!mixed.is_pure());
    }

    #[test]
    fn uniform_matroid_passes_base_exchange() {
        assert!(fixtures::uniform_matroid(2, 3).is_matroid());
        assert!(fixtures::uniform_matroid(2, 4).is_matroid());
        assert!(fixtures::uniform_matroid(1, 2).is_matroid());
    }

    #[test]
    fn bowtie_fails_base_exchange() {
        assert!(!fixtures::bowtie().is_matroid());
    }

    #[test]
    fn triangle_strip_computed_verdict() {
        // Exchange fails for A={1,2,3}, B={3,4,5}, a=2: neither {1,3,4} nor
        // {1,3,5} is a facet. The check reports exactly what it finds.
        assert!(!fixtures::triangle_strip().is_matroid());
    }

    #[test]
    fn generalized_rank_cases() {
        let u23 = fixtures::uniform_matroid(2, 3);
        assert_eq!(u23.generalized_rank(face(&[1, 2, 3])), 2);
        let c = fixtures::prototype();
        assert_eq!(c.generalized_rank(face(&[1, 4])), 1);
        assert_eq!(c.generalized_rank(Face::EMPTY), 0);
    }

    #[test]
    fn nonpure_variant_has_expected_facets() {
        let v = fixtures::prototype_nonpure();
        assert_eq!(v.facets().len(), 2);
        let mut sizes: Vec<usize> = v.facets().iter().map(|f| f.card()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);
        assert!(!v.is_pure());
    }

    #[test]
    fn structures_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Vertex>();
        assert_send_sync::<Face>();
        assert_send_sync::<SimplicialComplex>();
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            proptest::collection::vec(0..=full, 0..6).prop_map(move |masks| {
                SimplicialComplex::from_facets(n, masks.into_iter().map(Face)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn facets_form_an_antichain(c in arb_complex(8)) {
            for a in c.facets() {
                for b in c.facets() {
                    prop_assert!(a == b || !a.is_subset(b));
                }
            }
        }

        #[test]
        fn link_matches_direct_predicate(c in arb_complex(6)) {
            let faces = c.faces();
            for v in c.vertices() {
                let single = Face::singleton(v);
                if !c.contains(single) {
                    prop_assert!(c.link(single).is_err());
                    continue;
                }
                let by_def = c.link(single).unwrap();
                let direct: Vec<Face> = faces
                    .iter()
                    .filter(|a| !a.contains_vertex(v) && c.contains(a.insert(v)))
                    .copied()
                    .collect();
                prop_assert_eq!(by_def, direct);
            }
        }

        #[test]
        fn full_simplex_has_two_to_the_n_faces(n in 1usize..=10) {
            let c = SimplicialComplex::from_facets(n, vec![Face::full(n)]).unwrap();
            prop_assert_eq!(c.face_count(), 1 << n);
        }

        #[test]
        fn m_count_matches_double_loop(c in arb_complex(6)) {
            for s in c.faces() {
                let mut count = 0;
                for f in c.facets() {
                    if s.is_subset(f) {
                        count += 1;
                    }
                }
                prop_assert_eq!(c.m_count(s), count);
                prop_assert!(count > 0);
            }
        }

        #[test]
        fn matroid_implies_pure(c in arb_complex(6)) {
            if c.is_matroid() {
                prop_assert!(c.is_pure());
            }
        }

        #[test]
        fn face_order_is_total_and_consistent(a in 0u64..1024, b in 0u64..1024, c in 0u64..1024) {
            let (fa, fb, fc) = (Face(a), Face(b), Face(c));
            prop_assert_eq!(fa.cmp(&fb), fb.cmp(&fa).reverse());
            if fa < fb && fb < fc {
                prop_assert!(fa < fc);
            }
            prop_assert_eq!(fa.cmp(&fa), Ordering::Equal);
        }
    }
}
