//! The facet polytope and classical-game polyhedra.
//!
//! The facet polytope of a complex is the convex hull of the facet
//! incidence vectors in `R^n`. A facet distribution `P` induces the
//! participation influence `w^P(T) = Σ_{T ⊆ F} P(F)`, and the influence
//! vectors over singletons are exactly the points of that polytope;
//! membership is decided by linear feasibility. For classical games (full
//! simplex) this module also provides core/anticore membership and vertex
//! enumeration, marginal worth vectors, the Weber set, and the equality of
//! the matroid rank game's anticore with the facet polytope.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::feasibility;
use crate::games::{GameError, WorthFunction};
use crate::scalar::{approx_eq, approx_le, sum, Scalar};
use crate::values::{FacetDistribution, ValueError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolytopeError {
    #[error("point has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a classical game on the full simplex is required")]
    ClassicalGameRequired,
    #[error("the complex is not a matroid; the anticore equality is only claimed for matroids")]
    MatroidRequired,
    #[error("{0}")]
    ScaleLimit(String),
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// The per-player participation influences `w^P({i})` as a point of `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct InfluenceVector<S: Scalar> {
    coords: Vec<S>,
}

impl<S: Scalar> InfluenceVector<S> {
    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }
}

/// A payoff vector for a classical game.
#[derive(Debug, Clone, PartialEq)]
pub struct Imputation<S: Scalar> {
    x: Vec<S>,
}

impl<S: Scalar> Imputation<S> {
    pub fn new(x: Vec<S>) -> Self {
        Imputation { x }
    }

    pub fn coords(&self) -> &[S] {
        &self.x
    }

    /// `x(S) = Σ_{i ∈ S} x_i`
    pub fn coalition_sum(&self, s: Face) -> S {
        sum(s.members().map(|v| self.x[v.index()].clone()))
    }
}

/// The marginal contributions along one arrival order.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginalWorthVector<S: Scalar> {
    order: Vec<Vertex>,
    a: Vec<S>,
}

impl<S: Scalar> MarginalWorthVector<S> {
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn contributions(&self) -> &[S] {
        &self.a
    }
}

/// `w^P(T)`: the total probability of the facets covering `T`. Zero for
/// infeasible `T`, since no facet contains it.
pub fn influence<S: Scalar>(
    complex: &SimplicialComplex,
    dist: &FacetDistribution<S>,
    t: Face,
) -> Result<S, PolytopeError> {
    if !dist.matches(complex) {
        return Err(ValueError::DistributionMismatch.into());
    }
    Ok(sum(
        complex
            .facets()
            .iter()
            .filter(|f| t.is_subset(f))
            .map(|f| dist.weight(f)),
    ))
}

/// The influences of all singletons; as a vector identity this equals
/// `Σ_F P(F) e_F`.
pub fn influence_vector<S: Scalar>(
    complex: &SimplicialComplex,
    dist: &FacetDistribution<S>,
) -> Result<InfluenceVector<S>, PolytopeError> {
    if !dist.matches(complex) {
        return Err(ValueError::DistributionMismatch.into());
    }
    let coords = complex
        .vertices()
        .map(|v| {
            sum(complex
                .facets()
                .iter()
                .filter(|f| f.contains_vertex(v))
                .map(|f| dist.weight(f)))
        })
        .collect();
    Ok(InfluenceVector { coords })
}

fn incidence_vector<S: Scalar>(n: usize, f: &Face) -> Vec<S> {
    (1..=n as u32)
        .map(|id| {
            if f.contains_vertex(Vertex::new(id)) {
                S::one()
            } else {
                S::zero()
            }
        })
        .collect()
}

/// Decides membership of `q` in the facet polytope by solving for
/// convex-combination weights over the incidence vectors `e_F`; a witness
/// distribution is returned on success.
pub fn polytope_membership<S: Scalar>(
    complex: &SimplicialComplex,
    q: &[S],
    tol: &S,
) -> Result<Option<FacetDistribution<S>>, PolytopeError> {
    if q.len() != complex.n() {
        return Err(PolytopeError::DimensionMismatch {
            expected: complex.n(),
            found: q.len(),
        });
    }
    let columns: Vec<Vec<S>> = complex
        .facets()
        .iter()
        .map(|f| incidence_vector(complex.n(), f))
        .collect();
    let Some(weights) = feasibility::convex_combination(&columns, q, tol) else {
        return Ok(None);
    };
    let dist = FacetDistribution::from_weight_slice(complex, &weights)?;
    // Guard against numerically sloppy bases in the float backend.
    let realized = influence_vector(complex, &dist)?;
    let ok = realized
        .coords()
        .iter()
        .zip(q.iter())
        .all(|(a, b)| approx_eq(a, b, tol));
    Ok(ok.then_some(dist))
}

fn require_classical<S: Scalar>(v: &WorthFunction<S>) -> Result<usize, PolytopeError> {
    let complex = v.complex();
    let n = complex.n();
    if complex.facets() != [Face::full(n)] {
        return Err(PolytopeError::ClassicalGameRequired);
    }
    if n > 20 {
        return Err(PolytopeError::ScaleLimit(format!(
            "coalition enumeration over 2^{n} subsets is beyond desk scale"
        )));
    }
    Ok(n)
}

fn proper_coalitions(n: usize) -> impl Iterator<Item = Face> {
    let full = Face::full(n);
    full.subsets()
        .into_iter()
        .filter(move |s| !s.is_empty() && *s != full)
}

/// `x([n]) = v([n])` and `x(S) >= v(S)` for every proper coalition.
pub fn core_membership<S: Scalar>(
    v: &WorthFunction<S>,
    x: &Imputation<S>,
    tol: &S,
) -> Result<bool, PolytopeError> {
    let n = require_classical(v)?;
    if x.coords().len() != n {
        return Err(PolytopeError::DimensionMismatch {
            expected: n,
            found: x.coords().len(),
        });
    }
    let full = Face::full(n);
    if !approx_eq(&x.coalition_sum(full), &v.value(full), tol) {
        return Ok(false);
    }
    Ok(proper_coalitions(n).all(|s| approx_le(&v.value(s), &x.coalition_sum(s), tol)))
}

/// `x([n]) = v([n])` and `x(S) <= v(S)` for every proper coalition.
pub fn anticore_membership<S: Scalar>(
    v: &WorthFunction<S>,
    x: &Imputation<S>,
    tol: &S,
) -> Result<bool, PolytopeError> {
    let n = require_classical(v)?;
    if x.coords().len() != n {
        return Err(PolytopeError::DimensionMismatch {
            expected: n,
            found: x.coords().len(),
        });
    }
    let full = Face::full(n);
    if !approx_eq(&x.coalition_sum(full), &v.value(full), tol) {
        return Ok(false);
    }
    Ok(proper_coalitions(n).all(|s| approx_le(&x.coalition_sum(s), &v.value(s), tol)))
}

fn next_permutation(arr: &mut [u32]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// All `n!` marginal worth vectors, ordered lexicographically by arrival
/// order for reproducibility.
pub fn marginal_vectors<S: Scalar>(
    v: &WorthFunction<S>,
) -> Result<Vec<MarginalWorthVector<S>>, PolytopeError> {
    let n = require_classical(v)?;
    if n > 8 {
        return Err(PolytopeError::ScaleLimit(format!(
            "marginal worth vectors enumerate {n}! permutations; capped at n <= 8"
        )));
    }
    let mut order: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    loop {
        let mut prefix = Face::EMPTY;
        let mut a = vec![S::zero(); n];
        for &id in &order {
            let player = Vertex::new(id);
            let joined = prefix.insert(player);
            a[player.index()] = v.value(joined) - v.value(prefix);
            prefix = joined;
        }
        out.push(MarginalWorthVector {
            order: order.iter().map(|&id| Vertex::new(id)).collect(),
            a,
        });
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(out)
}

/// Membership of `x` in the convex hull of the marginal worth vectors.
pub fn weber_membership<S: Scalar>(
    v: &WorthFunction<S>,
    x: &Imputation<S>,
    tol: &S,
) -> Result<bool, PolytopeError> {
    let n = require_classical(v)?;
    if x.coords().len() != n {
        return Err(PolytopeError::DimensionMismatch {
            expected: n,
            found: x.coords().len(),
        });
    }
    let vectors = marginal_vectors(v)?;
    let columns: Vec<Vec<S>> = vectors.iter().map(|m| m.a.clone()).collect();
    Ok(feasibility::convex_combination(&columns, x.coords(), tol).is_some())
}

/// Exact extreme points of `{x : x([n]) = v([n]), x(S) >= v(S)}` (core) or
/// the anticore with the inequalities flipped. Enumerates active-constraint
/// subsets, so the ground set is capped at five players.
fn polyhedron_vertices<S: Scalar>(
    v: &WorthFunction<S>,
    anticore: bool,
) -> Result<Vec<Imputation<S>>, PolytopeError> {
    let n = require_classical(v)?;
    if n > 5 {
        return Err(PolytopeError::ScaleLimit(format!(
            "vertex enumeration over constraint subsets is capped at 5 players, got {n}"
        )));
    }
    let tol = S::default_tolerance();
    let full = Face::full(n);
    let coalitions: Vec<Face> = proper_coalitions(n).collect();

    let feasible = |x: &Imputation<S>| {
        coalitions.iter().all(|s| {
            if anticore {
                approx_le(&x.coalition_sum(*s), &v.value(*s), &tol)
            } else {
                approx_le(&v.value(*s), &x.coalition_sum(*s), &tol)
            }
        })
    };

    let mut vertices: Vec<Imputation<S>> = Vec::new();
    let mut chosen = vec![0usize; n - 1];
    enumerate_combinations(coalitions.len(), n - 1, &mut chosen, &mut |picked| {
        let mut rows: Vec<Vec<S>> = Vec::with_capacity(n);
        let mut rhs: Vec<S> = Vec::with_capacity(n);
        rows.push(incidence_vector(n, &full));
        rhs.push(v.value(full));
        for &idx in picked {
            rows.push(incidence_vector(n, &coalitions[idx]));
            rhs.push(v.value(coalitions[idx]));
        }
        if let Some(x) = feasibility::solve_square(&rows, &rhs, &tol) {
            let imp = Imputation::new(x);
            if feasible(&imp) && !vertices.iter().any(|w| {
                w.coords()
                    .iter()
                    .zip(imp.coords())
                    .all(|(a, b)| approx_eq(a, b, &tol))
            }) {
                vertices.push(imp);
            }
        }
    });
    Ok(vertices)
}

fn enumerate_combinations(
    pool: usize,
    take: usize,
    chosen: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    fn rec(
        pool: usize,
        take: usize,
        start: usize,
        depth: usize,
        chosen: &mut [usize],
        visit: &mut impl FnMut(&[usize]),
    ) {
        if depth == take {
            visit(chosen);
            return;
        }
        for idx in start..pool {
            chosen[depth] = idx;
            rec(pool, take, idx + 1, depth + 1, chosen, visit);
        }
    }
    if take == 0 {
        visit(&[]);
    } else {
        rec(pool, take, 0, 0, chosen, visit);
    }
}

pub fn core_vertices<S: Scalar>(
    v: &WorthFunction<S>,
) -> Result<Vec<Imputation<S>>, PolytopeError> {
    polyhedron_vertices(v, false)
}

pub fn anticore_vertices<S: Scalar>(
    v: &WorthFunction<S>,
) -> Result<Vec<Imputation<S>>, PolytopeError> {
    polyhedron_vertices(v, true)
}

/// The rank game of a complex as a classical game: `v(S)` is the size of
/// the largest feasible subset of `S`, defined on the full simplex.
pub fn rank_game(complex: &SimplicialComplex) -> WorthFunction<BigRational> {
    let n = complex.n();
    let ambient = Arc::new(
        SimplicialComplex::from_facets(n, vec![Face::full(n)]).expect("valid ground set"),
    );
    let assignments = Face::full(n)
        .subsets()
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            (
                s,
                BigRational::from_int(complex.generalized_rank(s) as i64),
            )
        });
    WorthFunction::new(ambient, assignments).expect("rank game on the full simplex")
}

/// Verifies, exactly, that the anticore of the rank game coincides with
/// the facet polytope for a matroid: every incidence vector `e_F` lies in
/// the anticore, the anticore's extreme points are exactly `{e_F}`, and
/// sampled anticore points pass facet-polytope membership.
pub fn edmonds_check(
    m: &SimplicialComplex,
    samples: usize,
    seed: u64,
) -> Result<bool, PolytopeError> {
    if !m.is_matroid() {
        return Err(PolytopeError::MatroidRequired);
    }
    let game = rank_game(m);
    let zero = BigRational::zero();

    for facet in m.facets() {
        let e_f = Imputation::new(incidence_vector(m.n(), facet));
        if !anticore_membership(&game, &e_f, &zero)? {
            return Ok(false);
        }
    }

    let mut vertices: Vec<Vec<BigRational>> = anticore_vertices(&game)?
        .into_iter()
        .map(|imp| imp.coords().to_vec())
        .collect();
    vertices.sort();
    vertices.dedup();
    let mut expected: Vec<Vec<BigRational>> = m
        .facets()
        .iter()
        .map(|f| incidence_vector(m.n(), f))
        .collect();
    expected.sort();
    expected.dedup();
    if vertices != expected {
        return Ok(false);
    }

    // Random interior points of the anticore, as convex combinations of its
    // extreme points; each must admit a facet distribution.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let raw: Vec<i64> = vertices.iter().map(|_| rng.random_range(1..10)).collect();
        let total: i64 = raw.iter().sum();
        let mut point = vec![BigRational::zero(); m.n()];
        for (vertex, w) in vertices.iter().zip(raw.iter()) {
            let weight = BigRational::from_ratio(*w, total);
            for (acc, coord) in point.iter_mut().zip(vertex.iter()) {
                *acc = acc.clone() + weight.clone() * coord.clone();
            }
        }
        if !anticore_membership(&game, &Imputation::new(point.clone()), &zero)? {
            return Ok(false);
        }
        if polytope_membership(m, &point, &zero)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::values::shapley_simplex;
    use num_traits::One;
    use std::collections::BTreeMap;

    fn face(ids: &[u32]) -> Face {
        Face::from_members(ids.iter().copied())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn full_simplex(n: usize) -> Arc<SimplicialComplex> {
        Arc::new(SimplicialComplex::from_facets(n, vec![Face::full(n)]).unwrap())
    }

    #[test]
    fn influence_on_the_prototype() {
        let c = fixtures::prototype();
        let p: FacetDistribution<BigRational> = FacetDistribution::uniform(&c);
        assert_eq!(influence(&c, &p, face(&[3])).unwrap(), q(4, 5));
        assert_eq!(influence(&c, &p, face(&[1, 4])).unwrap(), q(0, 1));
        assert_eq!(influence(&c, &p, Face::EMPTY).unwrap(), q(1, 1));
        // A facet is covered exactly by itself.
        assert_eq!(influence(&c, &p, face(&[1, 2, 3])).unwrap(), q(1, 5));
    }

    #[test]
    fn influence_vector_of_the_uniform_distribution() {
        let c = fixtures::prototype();
        let p: FacetDistribution<BigRational> = FacetDistribution::uniform(&c);
        let w = influence_vector(&c, &p).unwrap();
        assert_eq!(
            w.coords(),
            &[q(1, 5), q(1, 5), q(4, 5), q(3, 5), q(3, 5), q(3, 5)]
        );
    }

    #[test]
    fn point_mass_realizes_the_incidence_vector() {
        let c = fixtures::prototype();
        let f = face(&[3, 4, 5]);
        let p: FacetDistribution<BigRational> =
            FacetDistribution::point_mass(&c, f).unwrap();
        let w = influence_vector(&c, &p).unwrap();
        assert_eq!(w.coords(), incidence_vector::<BigRational>(6, &f).as_slice());
    }

    #[test]
    fn influence_coordinates_sum_by_double_counting() {
        let c = fixtures::prototype();
        let p: FacetDistribution<BigRational> = FacetDistribution::uniform(&c);
        let w = influence_vector(&c, &p).unwrap();
        let lhs = sum(w.coords().iter().cloned());
        let rhs = sum(
            c.facets()
                .iter()
                .map(|f| p.weight(f) * BigRational::from_int(f.card() as i64)),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn influence_is_monotone_under_containment() {
        let c = fixtures::prototype();
        let p: FacetDistribution<BigRational> = FacetDistribution::uniform(&c);
        for t in c.faces() {
            for t_prime in c.faces() {
                if t.is_subset(&t_prime) {
                    assert!(
                        influence(&c, &p, t).unwrap() >= influence(&c, &p, t_prime).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn membership_accepts_incidence_vectors() {
        let c = fixtures::prototype();
        let f = face(&[3, 5, 6]);
        let e_f: Vec<BigRational> = incidence_vector(6, &f);
        let dist = polytope_membership(&c, &e_f, &BigRational::zero())
            .unwrap()
            .unwrap();
        let w = influence_vector(&c, &dist).unwrap();
        assert_eq!(w.coords(), e_f.as_slice());
    }

    #[test]
    fn membership_roundtrip_on_random_distributions() {
        use rand::{RngExt, SeedableRng};
        let c = fixtures::prototype();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let raw: Vec<i64> = c.facets().iter().map(|_| rng.random_range(0..7)).collect();
            let total: i64 = raw.iter().sum::<i64>().max(1);
            let mut weights: Vec<BigRational> = raw.iter().map(|w| q(*w, total)).collect();
            if raw.iter().all(|w| *w == 0) {
                weights[0] = BigRational::one();
            }
            let p = FacetDistribution::from_weight_slice(&c, &weights).unwrap();
            let target = influence_vector(&c, &p).unwrap();
            let recovered = polytope_membership(&c, target.coords(), &BigRational::zero())
                .unwrap()
                .expect("forward image must be a member");
            let roundtrip = influence_vector(&c, &recovered).unwrap();
            assert_eq!(roundtrip.coords(), target.coords());
        }
    }

    #[test]
    fn all_ones_probe_is_rejected_on_the_prototype() {
        let c = fixtures::prototype();
        let ones = vec![BigRational::one(); 6];
        assert!(polytope_membership(&c, &ones, &BigRational::zero())
            .unwrap()
            .is_none());
    }

    #[test]
    fn membership_rejects_dimension_mismatch() {
        let c = fixtures::prototype();
        let err = polytope_membership(&c, &[BigRational::one()], &BigRational::zero())
            .unwrap_err();
        assert_eq!(
            err,
            PolytopeError::DimensionMismatch {
                expected: 6,
                found: 1
            }
        );
    }

    #[test]
    fn core_membership_two_player_examples() {
        let c = full_simplex(2);
        let v = WorthFunction::new(Arc::clone(&c), vec![(face(&[1, 2]), 1.0)]).unwrap();
        assert!(core_membership(&v, &Imputation::new(vec![0.3, 0.7]), &1e-9).unwrap());
        // x({2}) = -0.2 < v({2}) = 0.
        assert!(!core_membership(&v, &Imputation::new(vec![1.2, -0.2]), &1e-9).unwrap());
    }

    #[test]
    fn anticore_membership_of_the_rank_game() {
        let u23 = fixtures::uniform_matroid(2, 3);
        let game = rank_game(&u23);
        let x = Imputation::new(vec![q(1, 1), q(1, 1), q(0, 1)]);
        assert!(anticore_membership(&game, &x, &BigRational::zero()).unwrap());
        let y = Imputation::new(vec![q(2, 1), q(0, 1), q(0, 1)]);
        assert!(!anticore_membership(&game, &y, &BigRational::zero()).unwrap());
    }

    #[test]
    fn classical_game_is_required() {
        let c = Arc::new(fixtures::prototype());
        let v: WorthFunction<f64> = WorthFunction::zero(c);
        assert_eq!(
            core_membership(&v, &Imputation::new(vec![0.0; 6]), &1e-9).unwrap_err(),
            PolytopeError::ClassicalGameRequired
        );
    }

    #[test]
    fn marginal_vectors_of_the_two_player_unanimity_game() {
        let c = full_simplex(2);
        let v = WorthFunction::new(Arc::clone(&c), vec![(face(&[1, 2]), q(1, 1))]).unwrap();
        let ms = marginal_vectors(&v).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].contributions(), &[q(0, 1), q(1, 1)]);
        assert_eq!(ms[1].contributions(), &[q(1, 1), q(0, 1)]);
        // The segment between them is the Weber set.
        assert!(weber_membership(
            &v,
            &Imputation::new(vec![q(1, 3), q(2, 3)]),
            &BigRational::zero()
        )
        .unwrap());
        assert!(!weber_membership(
            &v,
            &Imputation::new(vec![q(2, 3), q(2, 3)]),
            &BigRational::zero()
        )
        .unwrap());
    }

    #[test]
    fn scale_limit_on_marginal_vectors() {
        let c = full_simplex(9);
        let v: WorthFunction<f64> = WorthFunction::zero(c);
        assert!(matches!(
            marginal_vectors(&v).unwrap_err(),
            PolytopeError::ScaleLimit(_)
        ));
    }

    /// Supermodular games via non-negative Harsanyi dividends on the
    /// coalitions of size two and more.
    fn random_convex_game(
        n: usize,
        rng: &mut ChaCha8Rng,
    ) -> WorthFunction<BigRational> {
        use rand::RngExt;
        let c = full_simplex(n);
        let full = Face::full(n);
        let dividends: BTreeMap<Face, BigRational> = full
            .subsets()
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| (s, q(rng.random_range(0..6), 4)))
            .collect();
        let assignments = full.subsets().into_iter().filter(|s| !s.is_empty()).map(|s| {
            let worth = sum(
                s.subsets()
                    .into_iter()
                    .filter(|t| !t.is_empty())
                    .map(|t| dividends[&t].clone()),
            );
            (s, worth)
        });
        WorthFunction::new(c, assignments).unwrap()
    }

    #[test]
    fn core_points_of_convex_games_are_weber_members() {
        use rand::{RngExt, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 2..=4 {
            let v = random_convex_game(n, &mut rng);
            let vertices = core_vertices(&v).unwrap();
            assert!(!vertices.is_empty());
            for _ in 0..20 {
                let raw: Vec<i64> = vertices.iter().map(|_| rng.random_range(1..5)).collect();
                let total: i64 = raw.iter().sum();
                let mut point = vec![BigRational::zero(); n];
                for (vertex, w) in vertices.iter().zip(raw.iter()) {
                    for (acc, coord) in point.iter_mut().zip(vertex.coords()) {
                        *acc = acc.clone() + q(*w, total) * coord.clone();
                    }
                }
                let imp = Imputation::new(point);
                assert!(core_membership(&v, &imp, &BigRational::zero()).unwrap());
                assert!(weber_membership(&v, &imp, &BigRational::zero()).unwrap());
            }
        }
    }

    #[test]
    fn shapley_vector_is_always_a_weber_member() {
        use rand::{RngExt, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for n in 2..=4 {
            let c = full_simplex(n);
            let v = WorthFunction::new(
                Arc::clone(&c),
                Face::full(n)
                    .subsets()
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .map(|s| (s, q(rng.random_range(-30..30), 8))),
            )
            .unwrap();
            let shapley: Vec<BigRational> = c
                .vertices()
                .map(|p| shapley_simplex(&v, p).unwrap())
                .collect();
            assert!(weber_membership(
                &v,
                &Imputation::new(shapley),
                &BigRational::zero()
            )
            .unwrap());
        }
    }

    #[test]
    fn shapley_is_the_average_of_marginal_vectors() {
        use rand::{RngExt, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let c = full_simplex(4);
        let v = WorthFunction::new(
            Arc::clone(&c),
            Face::full(4)
                .subsets()
                .into_iter()
                .filter(|s| !s.is_empty())
                .map(|s| (s, q(rng.random_range(-30..30), 8))),
        )
        .unwrap();
        let ms = marginal_vectors(&v).unwrap();
        let count = BigRational::from_int(ms.len() as i64);
        for player in c.vertices() {
            let avg = sum(
                ms.iter()
                    .map(|m| m.contributions()[player.index()].clone()),
            ) / count.clone();
            assert_eq!(avg, shapley_simplex(&v, player).unwrap());
        }
    }

    #[test]
    fn anticore_vertices_of_u23_are_the_incidence_vectors() {
        let u23 = fixtures::uniform_matroid(2, 3);
        let game = rank_game(&u23);
        let mut vertices: Vec<Vec<BigRational>> = anticore_vertices(&game)
            .unwrap()
            .into_iter()
            .map(|imp| imp.coords().to_vec())
            .collect();
        vertices.sort();
        assert_eq!(
            vertices,
            vec![
                vec![q(0, 1), q(1, 1), q(1, 1)],
                vec![q(1, 1), q(0, 1), q(1, 1)],
                vec![q(1, 1), q(1, 1), q(0, 1)],
            ]
        );
    }

    #[test]
    fn membership_agrees_across_backends() {
        use rand::{RngExt, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for complex in [
            fixtures::prototype(),
            fixtures::prototype_nonpure(),
            fixtures::path_complex(4),
        ] {
            for _ in 0..20 {
                let raw: Vec<i64> = complex
                    .facets()
                    .iter()
                    .map(|_| rng.random_range(0..7))
                    .collect();
                let total: i64 = raw.iter().sum::<i64>().max(1);
                let mut weights: Vec<BigRational> =
                    raw.iter().map(|w| q(*w, total)).collect();
                if raw.iter().all(|w| *w == 0) {
                    weights[0] = BigRational::one();
                }
                let dist = FacetDistribution::from_weight_slice(&complex, &weights).unwrap();
                let target = influence_vector(&complex, &dist).unwrap();

                let exact =
                    polytope_membership(&complex, target.coords(), &BigRational::zero())
                        .unwrap();
                assert!(exact.is_some());

                let float_target: Vec<f64> =
                    target.coords().iter().map(|c| c.to_f64()).collect();
                let float = polytope_membership(&complex, &float_target, &1e-9).unwrap();
                assert!(float.is_some(), "float backend rejects an exact member");

                // Push one coordinate above the attainable maximum of 1:
                // both backends must reject.
                let mut outside_exact = target.coords().to_vec();
                outside_exact[0] = outside_exact[0].clone() + q(11, 10);
                assert!(polytope_membership(&complex, &outside_exact, &BigRational::zero())
                    .unwrap()
                    .is_none());
                let mut outside_float = float_target.clone();
                outside_float[0] += 1.1;
                assert!(polytope_membership(&complex, &outside_float, &1e-9)
                    .unwrap()
                    .is_none());
            }
        }
    }

    #[test]
    fn edmonds_equality_on_small_matroids() {
        assert!(edmonds_check(&fixtures::uniform_matroid(1, 2), 10, 71).unwrap());
        assert!(edmonds_check(&fixtures::uniform_matroid(2, 3), 10, 71).unwrap());
    }

    #[test]
    fn edmonds_check_requires_a_matroid() {
        assert_eq!(
            edmonds_check(&fixtures::bowtie(), 5, 71).unwrap_err(),
            PolytopeError::MatroidRequired
        );
    }
}
