//! Individual and group values on a complex.
//!
//! A quasi-probabilistic value for player `i` is a family of non-negative
//! coefficients over the player's link, summing to the participation rate
//! `λ_i`; evaluating it on a game accumulates the weighted marginal
//! contributions `v(T ∪ i) − v(T)`. This module provides those values,
//! extraction of their coefficients from an abstract linear value, the
//! decomposition of a value over the facets of the complex, classical
//! Shapley values on full simplices, facet-distribution-weighted group
//! values, and the axiom checkers used by the verification suites.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, Vertex};
use crate::feasibility;
use crate::games::{GameError, WorthFunction};
use crate::scalar::{approx_eq, sum, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ValueError {
    #[error("value and game live on different complexes")]
    ComplexMismatch,
    #[error("coefficient key {face} is outside the link of player {player}")]
    CoefficientOutsideLink { face: Face, player: Vertex },
    #[error("coefficient at {0} is negative")]
    NegativeCoefficient(Face),
    #[error("participation rate must lie in [0, 1]; coefficients sum to {0}")]
    LambdaOutOfRange(f64),
    #[error("stated participation rate {stated} does not match the coefficient sum {computed}")]
    LambdaMismatch { stated: f64, computed: f64 },
    #[error("missing indicator value for face {0}")]
    MissingIndicatorValue(Face),
    #[error("nonzero indicator value at {0} although its extension by the player is infeasible")]
    NecessaryConditionViolated(Face),
    #[error("indicator values at {0} and at its extension by the player disagree")]
    InconsistentIndicatorValues(Face),
    #[error("participation rate is zero; the decomposition is empty")]
    EmptyDecomposition,
    #[error("the worth function is not defined on a full simplex")]
    NotASimplex,
    #[error("player {player} does not belong to facet {facet}")]
    PlayerNotInFacet { player: Vertex, facet: Face },
    #[error("{0} is not a facet of the complex")]
    UnknownFacet(Face),
    #[error("negative weight on facet {0}")]
    NegativeWeight(Face),
    #[error("facet weights sum to {0}, expected 1")]
    WeightSumNotOne(f64),
    #[error("Shapley reduction requires a pure complex; facet sizes differ")]
    PurityRequired,
    #[error("no local value supplied for player {player} on facet {facet}")]
    MissingLocalValue { player: Vertex, facet: Face },
    #[error("facet distribution was built for a different complex")]
    DistributionMismatch,
    #[error("duplicate value for player {0}")]
    DuplicatePlayer(Vertex),
    #[error("no value supplied for player {0}")]
    MissingPlayerValue(Vertex),
    #[error("player {0} is not dummy in the supplied game, so the dummy axiom does not apply")]
    DummyPreconditionViolated(Vertex),
    #[error("{0}")]
    ScaleLimit(String),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// Classical Shapley weight for joining a coalition of size `t` in a
/// simplex on `f` players: `t!(f-t-1)!/f!`.
fn shapley_weight<S: Scalar>(t: usize, f: usize) -> S {
    S::from_ratio(factorial(t) * factorial(f - t - 1), factorial(f))
}

/// A quasi-probabilistic individual value: non-negative coefficients over
/// the player's link summing to the participation rate.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiValue<S: Scalar> {
    complex: Arc<SimplicialComplex>,
    player: Vertex,
    coefficients: BTreeMap<Face, S>,
    lambda: S,
}

impl<S: Scalar> QuasiValue<S> {
    /// Validates the coefficient family and takes `λ` to be its sum.
    /// Exact-zero coefficients are dropped from storage.
    pub fn new(
        complex: Arc<SimplicialComplex>,
        player: Vertex,
        coefficients: BTreeMap<Face, S>,
    ) -> Result<Self, ValueError> {
        let lambda = sum(coefficients.values().cloned());
        Self::build(complex, player, coefficients, lambda, false)
    }

    /// Like [`QuasiValue::new`] but revalidates an explicitly stated `λ`
    /// against the coefficient sum.
    pub fn with_stated_lambda(
        complex: Arc<SimplicialComplex>,
        player: Vertex,
        coefficients: BTreeMap<Face, S>,
        lambda: S,
    ) -> Result<Self, ValueError> {
        Self::build(complex, player, coefficients, lambda, true)
    }

    fn build(
        complex: Arc<SimplicialComplex>,
        player: Vertex,
        coefficients: BTreeMap<Face, S>,
        lambda: S,
        stated: bool,
    ) -> Result<Self, ValueError> {
        let tol = S::default_tolerance();
        let link: HashSet<Face> = complex.link_of_player(player)?.into_iter().collect();
        for (face, value) in &coefficients {
            if !link.contains(face) {
                return Err(ValueError::CoefficientOutsideLink {
                    face: *face,
                    player,
                });
            }
            if *value < -tol.clone() {
                return Err(ValueError::NegativeCoefficient(*face));
            }
        }
        let computed = sum(coefficients.values().cloned());
        if stated && !approx_eq(&computed, &lambda, &tol) {
            return Err(ValueError::LambdaMismatch {
                stated: lambda.to_f64(),
                computed: computed.to_f64(),
            });
        }
        if lambda < -tol.clone() || lambda.clone() - S::one() > tol {
            return Err(ValueError::LambdaOutOfRange(lambda.to_f64()));
        }
        let coefficients = coefficients
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(QuasiValue {
            complex,
            player,
            coefficients,
            lambda,
        })
    }

    /// No validation; for oracle tests that deliberately corrupt a value.
    #[cfg(test)]
    pub(crate) fn new_unchecked(
        complex: Arc<SimplicialComplex>,
        player: Vertex,
        coefficients: BTreeMap<Face, S>,
        lambda: S,
    ) -> Self {
        QuasiValue {
            complex,
            player,
            coefficients,
            lambda,
        }
    }

    /// The Shapley coefficient family on a full simplex (`λ = 1`).
    pub fn shapley(complex: Arc<SimplicialComplex>, player: Vertex) -> Result<Self, ValueError> {
        if complex.facets().len() != 1 {
            return Err(ValueError::NotASimplex);
        }
        let facet = complex.facets()[0];
        if !facet.contains_vertex(player) {
            return Err(ValueError::PlayerNotInFacet {
                player,
                facet,
            });
        }
        let f = facet.card();
        if f > 20 {
            return Err(ValueError::ScaleLimit(format!(
                "Shapley coefficients need factorials up to {f}!, beyond exact 64-bit range"
            )));
        }
        let coefficients = facet
            .remove(player)
            .subsets()
            .into_iter()
            .map(|t| (t, shapley_weight(t.card(), f)))
            .collect();
        QuasiValue::new(complex, player, coefficients)
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn player(&self) -> Vertex {
        self.player
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    pub fn coefficients(&self) -> &BTreeMap<Face, S> {
        &self.coefficients
    }

    pub fn coefficient(&self, face: &Face) -> S {
        self.coefficients.get(face).cloned().unwrap_or_else(S::zero)
    }

    /// `Σ_T p_T (v(T ∪ i) − v(T))` over the stored link coefficients.
    pub fn eval(&self, v: &WorthFunction<S>) -> Result<S, ValueError> {
        if self.complex.as_ref() != v.complex().as_ref() {
            return Err(ValueError::ComplexMismatch);
        }
        let mut acc = S::zero();
        for (t, p) in &self.coefficients {
            let gain = v.value(t.insert(self.player)) - v.value(*t);
            acc = acc + p.clone() * gain;
        }
        Ok(acc)
    }
}

/// A probability distribution over the facets of a complex.
#[derive(Debug, Clone, PartialEq)]
pub struct FacetDistribution<S: Scalar> {
    weights: BTreeMap<Face, S>,
}

impl<S: Scalar> FacetDistribution<S> {
    /// Missing facets get weight zero; unknown keys, negative weights, and
    /// sums away from one are rejected.
    pub fn new(
        complex: &SimplicialComplex,
        weights: BTreeMap<Face, S>,
    ) -> Result<Self, ValueError> {
        let tol = S::default_tolerance();
        let facet_set: HashSet<Face> = complex.facets().iter().copied().collect();
        for (facet, w) in &weights {
            if !facet_set.contains(facet) {
                return Err(ValueError::UnknownFacet(*facet));
            }
            if *w < -tol.clone() {
                return Err(ValueError::NegativeWeight(*facet));
            }
        }
        let total = sum(weights.values().cloned());
        if !approx_eq(&total, &S::one(), &tol) {
            return Err(ValueError::WeightSumNotOne(total.to_f64()));
        }
        let mut full = weights;
        for facet in complex.facets() {
            full.entry(*facet).or_insert_with(S::zero);
        }
        Ok(FacetDistribution { weights: full })
    }

    pub fn uniform(complex: &SimplicialComplex) -> Self {
        let k = complex.facets().len() as i64;
        let weights = complex
            .facets()
            .iter()
            .map(|f| (*f, S::from_ratio(1, k)))
            .collect();
        FacetDistribution { weights }
    }

    pub fn point_mass(complex: &SimplicialComplex, facet: Face) -> Result<Self, ValueError> {
        if !complex.facets().contains(&facet) {
            return Err(ValueError::UnknownFacet(facet));
        }
        let weights = complex
            .facets()
            .iter()
            .map(|f| (*f, if *f == facet { S::one() } else { S::zero() }))
            .collect();
        Ok(FacetDistribution { weights })
    }

    /// Weights given in the canonical facet order of the complex.
    pub fn from_weight_slice(
        complex: &SimplicialComplex,
        weights: &[S],
    ) -> Result<Self, ValueError> {
        assert_eq!(weights.len(), complex.facets().len());
        let map = complex
            .facets()
            .iter()
            .copied()
            .zip(weights.iter().cloned())
            .collect();
        Self::new(complex, map)
    }

    pub fn weight(&self, facet: &Face) -> S {
        self.weights.get(facet).cloned().unwrap_or_else(S::zero)
    }

    pub fn weights(&self) -> &BTreeMap<Face, S> {
        &self.weights
    }

    pub(crate) fn matches(&self, complex: &SimplicialComplex) -> bool {
        self.weights.len() == complex.facets().len()
            && complex.facets().iter().all(|f| self.weights.contains_key(f))
    }
}

/// A classical probabilistic value for one player on the full simplex of
/// one facet: coefficients over the subsets of `facet ∖ player`, summing
/// to one.
#[derive(Debug, Clone, PartialEq)]
pub struct FacetLocalValue<S: Scalar> {
    facet: Face,
    player: Vertex,
    coefficients: BTreeMap<Face, S>,
}

impl<S: Scalar> FacetLocalValue<S> {
    pub fn new(
        facet: Face,
        player: Vertex,
        coefficients: BTreeMap<Face, S>,
    ) -> Result<Self, ValueError> {
        let tol = S::default_tolerance();
        if !facet.contains_vertex(player) {
            return Err(ValueError::PlayerNotInFacet { player, facet });
        }
        let room = facet.remove(player);
        for (t, p) in &coefficients {
            if !t.is_subset(&room) {
                return Err(ValueError::CoefficientOutsideLink { face: *t, player });
            }
            if *p < -tol.clone() {
                return Err(ValueError::NegativeCoefficient(*t));
            }
        }
        let total = sum(coefficients.values().cloned());
        if !approx_eq(&total, &S::one(), &tol) {
            return Err(ValueError::WeightSumNotOne(total.to_f64()));
        }
        Ok(FacetLocalValue {
            facet,
            player,
            coefficients: coefficients.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
        })
    }

    /// The Shapley coefficients on this facet's simplex.
    pub fn shapley(facet: Face, player: Vertex) -> Result<Self, ValueError> {
        if !facet.contains_vertex(player) {
            return Err(ValueError::PlayerNotInFacet { player, facet });
        }
        let f = facet.card();
        if f > 20 {
            return Err(ValueError::ScaleLimit(format!(
                "Shapley coefficients need factorials up to {f}!, beyond exact 64-bit range"
            )));
        }
        let coefficients = facet
            .remove(player)
            .subsets()
            .into_iter()
            .map(|t| (t, shapley_weight(t.card(), f)))
            .collect();
        FacetLocalValue::new(facet, player, coefficients)
    }

    pub fn facet(&self) -> Face {
        self.facet
    }

    pub fn player(&self) -> Vertex {
        self.player
    }

    pub fn coefficients(&self) -> &BTreeMap<Face, S> {
        &self.coefficients
    }

    /// Evaluates against a game whose complex contains this facet. Only
    /// faces inside the facet are queried, so restriction is implicit.
    pub fn eval(&self, v: &WorthFunction<S>) -> Result<S, ValueError> {
        if !v.complex().contains(self.facet) {
            return Err(ValueError::Game(GameError::InfeasibleCoalition(self.facet)));
        }
        let mut acc = S::zero();
        for (t, p) in &self.coefficients {
            let gain = v.value(t.insert(self.player)) - v.value(*t);
            acc = acc + p.clone() * gain;
        }
        Ok(acc)
    }
}

/// The decomposition of a quasi-probabilistic value over the facets
/// containing its player: per-facet probabilities summing to `λ` and a
/// local classical value on each facet of positive probability.
#[derive(Debug, Clone, PartialEq)]
pub struct FacetDecomposition<S: Scalar> {
    player: Vertex,
    lambda: S,
    weights: BTreeMap<Face, S>,
    locals: BTreeMap<Face, FacetLocalValue<S>>,
}

impl<S: Scalar> FacetDecomposition<S> {
    pub fn player(&self) -> Vertex {
        self.player
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    /// Positive per-facet probabilities, over facets containing the player.
    pub fn weights(&self) -> &BTreeMap<Face, S> {
        &self.weights
    }

    pub fn locals(&self) -> &BTreeMap<Face, FacetLocalValue<S>> {
        &self.locals
    }

    /// `Σ_F P(F) · φ^F(v|_F)` — must agree with evaluating the original
    /// quasi value directly.
    pub fn eval(&self, v: &WorthFunction<S>) -> Result<S, ValueError> {
        let mut acc = S::zero();
        for (facet, p) in &self.weights {
            let local = &self.locals[facet];
            acc = acc + p.clone() * local.eval(v)?;
        }
        Ok(acc)
    }
}

/// Decomposes a quasi value as a facet distribution plus per-facet
/// classical values: `P(F) = Σ_{T ⊆ F∖i} p_T / m_{T∪i}` and, on facets of
/// positive probability, local coefficients `p_T / (m_{T∪i} P(F))`.
pub fn facet_decompose<S: Scalar>(
    q: &QuasiValue<S>,
) -> Result<FacetDecomposition<S>, ValueError> {
    if q.lambda().is_zero() {
        return Err(ValueError::EmptyDecomposition);
    }
    let complex = q.complex();
    let player = q.player();
    let mut weights = BTreeMap::new();
    let mut locals = BTreeMap::new();
    for facet in complex.facets() {
        if !facet.contains_vertex(player) {
            continue;
        }
        let room = facet.remove(player);
        let mut p_facet = S::zero();
        for t in room.subsets() {
            let p = q.coefficient(&t);
            if p.is_zero() {
                continue;
            }
            let m = complex.m_count(t.insert(player)) as i64;
            p_facet = p_facet + p / S::from_int(m);
        }
        if p_facet.is_zero() {
            continue;
        }
        let mut local = BTreeMap::new();
        for t in room.subsets() {
            let p = q.coefficient(&t);
            if p.is_zero() {
                continue;
            }
            let m = complex.m_count(t.insert(player)) as i64;
            local.insert(t, p / (S::from_int(m) * p_facet.clone()));
        }
        locals.insert(*facet, FacetLocalValue::new(*facet, player, local)?);
        weights.insert(*facet, p_facet);
    }
    Ok(FacetDecomposition {
        player,
        lambda: q.lambda().clone(),
        weights,
        locals,
    })
}

/// Recovers a quasi value from the indicator-game values `φ_i(𝟙_T)` of an
/// abstract linear value: `p_T = φ_i(𝟙_{T∪i})` for every link member `T`,
/// with the representability conditions enforced — `φ_i(𝟙_T) = 0` whenever
/// `T ∪ i` is infeasible, `φ_i(𝟙_T) = −φ_i(𝟙_{T∪i})` on the link, and no
/// negative induced coefficient.
pub fn coefficients_from_linear_value<S: Scalar>(
    complex: Arc<SimplicialComplex>,
    player: Vertex,
    indicator_values: &BTreeMap<Face, S>,
) -> Result<QuasiValue<S>, ValueError> {
    let tol = S::default_tolerance();
    let link = complex.link_of_player(player)?;
    let link_set: HashSet<Face> = link.iter().copied().collect();
    let lookup = |t: &Face| -> Result<S, ValueError> {
        indicator_values
            .get(t)
            .cloned()
            .ok_or(ValueError::MissingIndicatorValue(*t))
    };

    for t in complex.faces() {
        if t.is_empty() || t.contains_vertex(player) || link_set.contains(&t) {
            continue;
        }
        // t is feasible but t ∪ player is not.
        if lookup(&t)?.abs() > tol {
            return Err(ValueError::NecessaryConditionViolated(t));
        }
    }

    let mut coefficients = BTreeMap::new();
    for t in &link {
        let p = lookup(&t.insert(player))?;
        if !t.is_empty() {
            let neg = -lookup(t)?;
            if !approx_eq(&p, &neg, &tol) {
                return Err(ValueError::InconsistentIndicatorValues(*t));
            }
        }
        if p < -tol.clone() {
            return Err(ValueError::NegativeCoefficient(*t));
        }
        let p = if p < S::zero() { S::zero() } else { p };
        coefficients.insert(*t, p);
    }
    QuasiValue::new(complex, player, coefficients)
}

/// The classical Shapley value of `player` in a game on a full simplex.
pub fn shapley_simplex<S: Scalar>(
    v_f: &WorthFunction<S>,
    player: Vertex,
) -> Result<S, ValueError> {
    let complex = v_f.complex();
    if complex.facets().len() != 1 {
        return Err(ValueError::NotASimplex);
    }
    let facet = complex.facets()[0];
    if !facet.contains_vertex(player) {
        return Err(ValueError::PlayerNotInFacet { player, facet });
    }
    let f = facet.card();
    if f > 20 {
        return Err(ValueError::ScaleLimit(format!(
            "Shapley values need factorials up to {f}!, beyond exact 64-bit range"
        )));
    }
    let mut acc = S::zero();
    for t in facet.remove(player).subsets() {
        let weight: S = shapley_weight(t.card(), f);
        let gain = v_f.value(t.insert(player)) - v_f.value(t);
        acc = acc + weight * gain;
    }
    Ok(acc)
}

/// One quasi value per player of the complex.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupValue<S: Scalar> {
    complex: Arc<SimplicialComplex>,
    per_player: BTreeMap<Vertex, QuasiValue<S>>,
}

impl<S: Scalar> GroupValue<S> {
    /// Requires one value per vertex appearing in some facet, all on the
    /// same complex.
    pub fn new(
        complex: Arc<SimplicialComplex>,
        values: Vec<QuasiValue<S>>,
    ) -> Result<Self, ValueError> {
        let mut per_player = BTreeMap::new();
        for q in values {
            if q.complex().as_ref() != complex.as_ref() {
                return Err(ValueError::ComplexMismatch);
            }
            let player = q.player();
            if per_player.insert(player, q).is_some() {
                return Err(ValueError::DuplicatePlayer(player));
            }
        }
        for v in complex.support().members() {
            if !per_player.contains_key(&v) {
                return Err(ValueError::MissingPlayerValue(v));
            }
        }
        Ok(GroupValue {
            complex,
            per_player,
        })
    }

    /// The group value of a shared facet distribution with Shapley values
    /// on each facet, written out as per-player link coefficients
    /// `p^i_T = Σ_{F ⊇ T∪i} P(F) · |T|!(r−|T|−1)!/r!`. Requires a pure
    /// complex.
    pub fn shapley_reducible(
        complex: Arc<SimplicialComplex>,
        dist: &FacetDistribution<S>,
    ) -> Result<Self, ValueError> {
        if !complex.is_pure() {
            return Err(ValueError::PurityRequired);
        }
        if !dist.matches(&complex) {
            return Err(ValueError::DistributionMismatch);
        }
        let r = complex.rank();
        let mut values = Vec::new();
        for player in complex.support().members() {
            let mut coefficients: BTreeMap<Face, S> = BTreeMap::new();
            for t in complex.link_of_player(player)? {
                let covering = sum(
                    complex
                        .facets_containing(t.insert(player))
                        .into_iter()
                        .map(|f| dist.weight(&f)),
                );
                if covering.is_zero() {
                    continue;
                }
                coefficients.insert(t, covering * shapley_weight(t.card(), r));
            }
            values.push(QuasiValue::new(
                Arc::clone(&complex),
                player,
                coefficients,
            )?);
        }
        GroupValue::new(complex, values)
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn get(&self, player: Vertex) -> Option<&QuasiValue<S>> {
        self.per_player.get(&player)
    }

    pub fn players(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.per_player.keys().copied()
    }

    /// Per-player evaluations as a length-`n` vector; vertices in no facet
    /// get zero.
    pub fn eval_all(&self, v: &WorthFunction<S>) -> Result<Vec<S>, ValueError> {
        let mut out = vec![S::zero(); self.complex.n()];
        for (player, q) in &self.per_player {
            out[player.index()] = q.eval(v)?;
        }
        Ok(out)
    }
}

/// Evaluates the facet-distribution-weighted group value
/// `φ_i(v) = Σ_{F ∋ i} P(F) φ_i^F(v|_F)` for every player at once.
///
/// With `locals` omitted, each `φ_i^F` is the Shapley value (which requires
/// a pure complex); otherwise the supplied per-facet classical values are
/// used and purity is not needed.
pub fn reducible_group_value<S: Scalar>(
    complex: &Arc<SimplicialComplex>,
    dist: &FacetDistribution<S>,
    v: &WorthFunction<S>,
    locals: Option<&[FacetLocalValue<S>]>,
) -> Result<Vec<S>, ValueError> {
    if v.complex().as_ref() != complex.as_ref() {
        return Err(ValueError::ComplexMismatch);
    }
    if !dist.matches(complex) {
        return Err(ValueError::DistributionMismatch);
    }
    let mut out = vec![S::zero(); complex.n()];
    match locals {
        None => {
            if !complex.is_pure() {
                return Err(ValueError::PurityRequired);
            }
            for facet in complex.facets() {
                let p = dist.weight(facet);
                if p.is_zero() {
                    continue;
                }
                let v_f = v.restrict(*facet)?;
                for player in facet.members() {
                    let share = shapley_simplex(&v_f, player)?;
                    out[player.index()] = out[player.index()].clone() + p.clone() * share;
                }
            }
        }
        Some(locals) => {
            let mut by_key: HashMap<(Face, Vertex), &FacetLocalValue<S>> = HashMap::new();
            for local in locals {
                if !complex.facets().contains(&local.facet()) {
                    return Err(ValueError::UnknownFacet(local.facet()));
                }
                by_key.insert((local.facet(), local.player()), local);
            }
            for facet in complex.facets() {
                let p = dist.weight(facet);
                if p.is_zero() {
                    continue;
                }
                for player in facet.members() {
                    let local = by_key.get(&(*facet, player)).ok_or(
                        ValueError::MissingLocalValue {
                            player,
                            facet: *facet,
                        },
                    )?;
                    out[player.index()] =
                        out[player.index()].clone() + p.clone() * local.eval(v)?;
                }
            }
        }
    }
    Ok(out)
}

/// Verifies `φ_i(v) = λ_i v(i)` for a game where the player is dummy.
/// A non-dummy game is a precondition violation, reported distinctly.
pub fn check_dummy_axiom<S: Scalar>(
    q: &QuasiValue<S>,
    v: &WorthFunction<S>,
    tol: &S,
) -> Result<bool, ValueError> {
    if q.complex().as_ref() != v.complex().as_ref() {
        return Err(ValueError::ComplexMismatch);
    }
    if !v.is_dummy_tol(q.player(), tol)? {
        return Err(ValueError::DummyPreconditionViolated(q.player()));
    }
    let expected = q.lambda().clone() * v.value(Face::singleton(q.player()));
    Ok(approx_eq(&q.eval(v)?, &expected, tol))
}

/// Verifies that every carrier game `v_T` pays its interchangeable players
/// equally: `φ_i(v_T) = φ_j(v_T)` for all `i, j ∈ T`. Players outside `T`
/// are dummies with standalone worth zero, so their equality is automatic
/// and not re-checked.
pub fn check_substitution_carrier<S: Scalar>(
    g: &GroupValue<S>,
    tol: &S,
) -> Result<bool, ValueError> {
    let complex = g.complex();
    for t in complex.faces() {
        if t.is_empty() {
            continue;
        }
        let carrier = WorthFunction::carrier(Arc::clone(complex), t)?;
        let mut first: Option<S> = None;
        for player in t.members() {
            let q = g
                .get(player)
                .ok_or(ValueError::MissingPlayerValue(player))?;
            let value = q.eval(&carrier)?;
            match &first {
                None => first = Some(value),
                Some(f) => {
                    if !approx_eq(f, &value, tol) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Verifies `Σ_i φ_i(v) = Σ_F P(F) v(F)`.
pub fn check_probabilistic_efficiency<S: Scalar>(
    g: &GroupValue<S>,
    dist: &FacetDistribution<S>,
    v: &WorthFunction<S>,
    tol: &S,
) -> Result<bool, ValueError> {
    if !dist.matches(g.complex()) {
        return Err(ValueError::DistributionMismatch);
    }
    let lhs = sum(g.eval_all(v)?);
    let rhs = sum(
        g.complex()
            .facets()
            .iter()
            .map(|f| dist.weight(f) * v.value(*f)),
    );
    Ok(approx_eq(&lhs, &rhs, tol))
}

/// Attempts to write a group value as a shared facet distribution
/// weighting per-facet Shapley values. On a pure complex of rank `r` the
/// link coefficients of such a value satisfy
/// `p^i_T = |T|!(r−|T|−1)!/r! · Σ_{F ⊇ T∪i} P(F)`, which is a linear
/// feasibility problem in `P`. Returns the witness distribution, or `None`
/// when the group value is not reducible.
pub fn reconstruct_reducible<S: Scalar>(
    g: &GroupValue<S>,
    tol: &S,
) -> Option<FacetDistribution<S>> {
    let complex = g.complex();
    if !complex.is_pure() {
        return None;
    }
    let r = complex.rank();
    let facets = complex.facets();

    let mut rows: Vec<Vec<S>> = Vec::new();
    let mut rhs: Vec<S> = Vec::new();
    for u in complex.faces() {
        if u.is_empty() {
            continue;
        }
        for player in u.members() {
            let q = g.get(player)?;
            let t = u.remove(player);
            let weight: S = shapley_weight(t.card(), r);
            rows.push(
                facets
                    .iter()
                    .map(|f| if u.is_subset(f) { S::one() } else { S::zero() })
                    .collect(),
            );
            rhs.push(q.coefficient(&t) / weight);
        }
    }

    let columns: Vec<Vec<S>> = (0..facets.len())
        .map(|j| rows.iter().map(|row| row[j].clone()).collect())
        .collect();
    let weights = feasibility::convex_combination(&columns, &rhs, tol)?;
    FacetDistribution::from_weight_slice(complex, &weights).ok()
}
