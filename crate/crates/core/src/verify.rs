//! Seeded verification suites.
//!
//! Each check exercises one of the library's central identities on a
//! given complex with reproducible randomness and reports pass/fail plus
//! the trial count. The `scgt verify` subcommand prints one line per
//! check; the acceptance tests drive the same functions with larger
//! corpora. Everything here runs on the exact rational backend, so a
//! failure is a real counterexample, never rounding noise.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::games::WorthFunction;
use crate::polytope;
use crate::scalar::{sum, Scalar};
use crate::values::{
    check_dummy_axiom, check_probabilistic_efficiency, check_substitution_carrier,
    coefficients_from_linear_value, facet_decompose, reconstruct_reducible, shapley_simplex,
    FacetDistribution, GroupValue, QuasiValue,
};
use crate::{attribution, fixtures};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub trials: usize,
    pub detail: String,
}

impl CheckReport {
    fn pass(name: &str, trials: usize) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            skipped: false,
            trials,
            detail: String::new(),
        }
    }

    fn fail(name: &str, trials: usize, detail: String) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: false,
            skipped: false,
            trials,
            detail,
        }
    }

    fn skip(name: &str, detail: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            skipped: true,
            trials: 0,
            detail: detail.to_string(),
        }
    }

    pub fn status_line(&self) -> String {
        if self.skipped {
            format!("SKIP {} ({})", self.name, self.detail)
        } else if self.passed {
            format!("PASS {} ({} trials)", self.name, self.trials)
        } else {
            format!("FAIL {}: {}", self.name, self.detail)
        }
    }
}

/// Named fixtures reachable from the command line.
pub fn fixture_by_name(name: &str) -> Option<SimplicialComplex> {
    match name {
        "prototype" => Some(fixtures::prototype()),
        "prototype-nonpure" => Some(fixtures::prototype_nonpure()),
        "u12" => Some(fixtures::uniform_matroid(1, 2)),
        "u23" => Some(fixtures::uniform_matroid(2, 3)),
        "u24" => Some(fixtures::uniform_matroid(2, 4)),
        "triangle" => Some(fixtures::triangle_graphic_matroid()),
        "path3" => Some(fixtures::path_complex(3)),
        "path4" => Some(fixtures::path_complex(4)),
        "strip" => Some(fixtures::triangle_strip()),
        "bowtie" => Some(fixtures::bowtie()),
        _ => None,
    }
}

pub const FIXTURE_NAMES: &[&str] = &[
    "prototype",
    "prototype-nonpure",
    "u12",
    "u23",
    "u24",
    "triangle",
    "path3",
    "path4",
    "strip",
    "bowtie",
];

/// Random-object generators over the exact rational backend. Dyadic
/// denominators are used for worth values so the same numbers are exact
/// in both backends.
pub mod gen {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    /// A complex on at most `max_n` vertices generated by a handful of
    /// random candidate sets, at least one of them nonempty.
    pub fn random_complex(rng: &mut ChaCha8Rng, max_n: usize) -> SimplicialComplex {
        let n = rng.random_range(1..=max_n);
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let count = rng.random_range(1..=n + 2);
        let mut candidates = Vec::with_capacity(count);
        for _ in 0..count {
            let mask = rng.random_range(1..=full);
            candidates.push(Face::from_members(
                (0..n as u32).filter(|b| mask & (1u64 << b) != 0).map(|b| b + 1),
            ));
        }
        SimplicialComplex::from_facets(n, candidates).expect("candidates are in range")
    }

    pub fn random_worth(
        complex: &Arc<SimplicialComplex>,
        rng: &mut ChaCha8Rng,
    ) -> WorthFunction<BigRational> {
        WorthFunction::new(
            Arc::clone(complex),
            complex
                .faces()
                .into_iter()
                .filter(|f| !f.is_empty())
                .map(|f| (f, q(rng.random_range(-40..=40), 16))),
        )
        .expect("faces are feasible")
    }

    /// A monotone game as a non-negative combination of carrier games.
    pub fn random_monotone_worth(
        complex: &Arc<SimplicialComplex>,
        rng: &mut ChaCha8Rng,
    ) -> WorthFunction<BigRational> {
        let mut v = WorthFunction::zero(Arc::clone(complex));
        for t in complex.faces() {
            if t.is_empty() {
                continue;
            }
            let coeff = q(rng.random_range(0..4), 8);
            if coeff.is_zero() {
                continue;
            }
            let carrier = WorthFunction::carrier(Arc::clone(complex), t)
                .expect("faces are feasible");
            v = v.try_add(&carrier.scale(&coeff)).expect("same complex");
        }
        v
    }

    /// A game in which `player` is dummy: worths on the faces avoiding the
    /// player are free, and every face containing it is forced to
    /// `v(T ∖ i) + v(i)`.
    pub fn random_dummy_worth(
        complex: &Arc<SimplicialComplex>,
        player: Vertex,
        rng: &mut ChaCha8Rng,
    ) -> WorthFunction<BigRational> {
        let own = q(rng.random_range(-20..=20), 8);
        let mut values: BTreeMap<Face, BigRational> = BTreeMap::new();
        let faces = complex.faces();
        for f in &faces {
            if f.is_empty() || f.contains_vertex(player) {
                continue;
            }
            values.insert(*f, q(rng.random_range(-40..=40), 16));
        }
        values.insert(Face::singleton(player), own.clone());
        for f in &faces {
            if !f.contains_vertex(player) || f.card() < 2 {
                continue;
            }
            let base = values
                .get(&f.remove(player))
                .cloned()
                .unwrap_or_else(BigRational::zero);
            values.insert(*f, base + own.clone());
        }
        WorthFunction::new(Arc::clone(complex), values).expect("faces are feasible")
    }

    /// Non-negative link coefficients summing to `1/c` for a small random
    /// `c`, so `λ` stays in `[0, 1]`.
    pub fn random_quasi(
        complex: &Arc<SimplicialComplex>,
        player: Vertex,
        rng: &mut ChaCha8Rng,
    ) -> QuasiValue<BigRational> {
        let link = complex.link_of_player(player).expect("player is feasible");
        let raw: Vec<i64> = link.iter().map(|_| rng.random_range(0..5)).collect();
        let total: i64 = raw.iter().sum::<i64>().max(1);
        let scale = [1, 2, 4][rng.random_range(0..3)];
        let coefficients: BTreeMap<Face, BigRational> = link
            .iter()
            .zip(raw.iter())
            .map(|(t, w)| (*t, q(*w, total * scale)))
            .collect();
        QuasiValue::new(Arc::clone(complex), player, coefficients).expect("valid by construction")
    }

    pub fn random_distribution(
        complex: &SimplicialComplex,
        rng: &mut ChaCha8Rng,
    ) -> FacetDistribution<BigRational> {
        let raw: Vec<i64> = complex
            .facets()
            .iter()
            .map(|_| rng.random_range(0..5))
            .collect();
        let total: i64 = raw.iter().sum();
        let weights: Vec<BigRational> = if total == 0 {
            let mut w = vec![BigRational::zero(); raw.len()];
            w[0] = BigRational::one();
            w
        } else {
            raw.iter().map(|w| q(*w, total)).collect()
        };
        FacetDistribution::from_weight_slice(complex, &weights).expect("normalized")
    }

    /// A convex (supermodular) classical game built from non-negative
    /// Harsanyi dividends.
    pub fn random_convex_game(n: usize, rng: &mut ChaCha8Rng) -> WorthFunction<BigRational> {
        let complex = Arc::new(
            SimplicialComplex::from_facets(n, vec![Face::full(n)]).expect("valid simplex"),
        );
        let full = Face::full(n);
        let dividends: BTreeMap<Face, BigRational> = full
            .subsets()
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| (s, q(rng.random_range(0..6), 4)))
            .collect();
        let assignments = full
            .subsets()
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| {
                let worth = sum(
                    s.subsets()
                        .into_iter()
                        .filter(|t| !t.is_empty())
                        .map(|t| dividends[&t].clone()),
                );
                (s, worth)
            });
        WorthFunction::new(complex, assignments).expect("full simplex")
    }
}

/// Implementation-independent reference computations.
pub mod oracle {
    use super::*;

    /// The Shapley value as the plain average of marginal contributions
    /// over every arrival order of the facet's members.
    pub fn shapley_permutation_average<S: Scalar>(
        v_f: &WorthFunction<S>,
        player: Vertex,
    ) -> S {
        let facet = v_f.complex().facets()[0];
        let mut members: Vec<Vertex> = facet.members().collect();
        let mut total = S::zero();
        let mut count: i64 = 0;
        loop {
            let mut prefix = Face::EMPTY;
            for &p in &members {
                let joined = prefix.insert(p);
                if p == player {
                    total = total + (v_f.value(joined) - v_f.value(prefix));
                    break;
                }
                prefix = joined;
            }
            count += 1;
            if !next_perm(&mut members) {
                break;
            }
        }
        total / S::from_int(count)
    }

    /// All players' permutation averages in one sweep: every arrival
    /// order contributes one marginal gain per player.
    pub fn shapley_permutation_profile<S: Scalar>(
        v_f: &WorthFunction<S>,
    ) -> BTreeMap<Vertex, S> {
        let facet = v_f.complex().facets()[0];
        let mut members: Vec<Vertex> = facet.members().collect();
        let mut totals: BTreeMap<Vertex, S> =
            members.iter().map(|&p| (p, S::zero())).collect();
        let mut count: i64 = 0;
        loop {
            let mut prefix = Face::EMPTY;
            let mut prev = v_f.value(prefix);
            for &p in &members {
                prefix = prefix.insert(p);
                let here = v_f.value(prefix);
                let slot = totals.get_mut(&p).expect("member");
                *slot = slot.clone() + (here.clone() - prev);
                prev = here;
            }
            count += 1;
            if !next_perm(&mut members) {
                break;
            }
        }
        totals
            .into_iter()
            .map(|(p, total)| (p, total / S::from_int(count)))
            .collect()
    }

    fn next_perm(arr: &mut [Vertex]) -> bool {
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
}

/// Forward evaluation on every indicator game followed by coefficient
/// extraction must reproduce the value exactly.
pub fn check_roundtrip(
    complex: &Arc<SimplicialComplex>,
    seed: u64,
    trials: usize,
) -> CheckReport {
    let name = "coefficient-roundtrip";
    let players: Vec<Vertex> = complex.support().members().collect();
    if players.is_empty() {
        return CheckReport::skip(name, "no players in any facet");
    }
    let mut rng = gen::rng(seed);
    let nonempty: Vec<Face> = complex
        .faces()
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    let indicators: Vec<(Face, WorthFunction<BigRational>)> = nonempty
        .iter()
        .map(|t| {
            (
                *t,
                WorthFunction::indicator(Arc::clone(complex), *t).expect("nonempty face"),
            )
        })
        .collect();
    for trial in 0..trials {
        let player = players[trial % players.len()];
        let qv = gen::random_quasi(complex, player, &mut rng);
        let mut values = BTreeMap::new();
        for (t, game) in &indicators {
            values.insert(*t, qv.eval(game).expect("same complex"));
        }
        match coefficients_from_linear_value(Arc::clone(complex), player, &values) {
            Ok(recovered) => {
                if recovered.coefficients() != qv.coefficients()
                    || recovered.lambda() != qv.lambda()
                {
                    return CheckReport::fail(
                        name,
                        trial + 1,
                        format!("coefficients differ for player {player} on trial {trial}"),
                    );
                }
            }
            Err(err) => {
                return CheckReport::fail(name, trial + 1, format!("extraction failed: {err}"))
            }
        }
    }
    CheckReport::pass(name, trials)
}

/// On games where the player is dummy, the value must be exactly
/// `λ · v(i)`.
pub fn check_dummy(complex: &Arc<SimplicialComplex>, seed: u64, trials: usize) -> CheckReport {
    let name = "dummy-axiom";
    let players: Vec<Vertex> = complex.support().members().collect();
    if players.is_empty() {
        return CheckReport::skip(name, "no players in any facet");
    }
    let mut rng = gen::rng(seed);
    let zero = BigRational::zero();
    for trial in 0..trials {
        let player = players[trial % players.len()];
        let qv = gen::random_quasi(complex, player, &mut rng);
        let game = gen::random_dummy_worth(complex, player, &mut rng);
        match check_dummy_axiom(&qv, &game, &zero) {
            Ok(true) => {}
            Ok(false) => {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    format!("player {player} got a value different from λ·v(i)"),
                )
            }
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        }
    }
    CheckReport::pass(name, trials)
}

/// On monotone games every quasi-probabilistic value is non-negative.
pub fn check_monotonicity(
    complex: &Arc<SimplicialComplex>,
    seed: u64,
    trials: usize,
) -> CheckReport {
    let name = "monotone-nonnegativity";
    let players: Vec<Vertex> = complex.support().members().collect();
    if players.is_empty() {
        return CheckReport::skip(name, "no players in any facet");
    }
    let mut rng = gen::rng(seed);
    for trial in 0..trials {
        let player = players[trial % players.len()];
        let qv = gen::random_quasi(complex, player, &mut rng);
        let game = gen::random_monotone_worth(complex, &mut rng);
        debug_assert!(game.is_monotone());
        let value = qv.eval(&game).expect("same complex");
        if value < BigRational::zero() {
            return CheckReport::fail(
                name,
                trial + 1,
                format!("negative value {value} for player {player} on a monotone game"),
            );
        }
    }
    CheckReport::pass(name, trials)
}

/// The facet decomposition: probabilities sum to λ, local families sum to
/// one, link coefficients reconstruct, and evaluation agrees on random
/// games.
pub fn check_decomposition(
    complex: &Arc<SimplicialComplex>,
    seed: u64,
    trials: usize,
    games_per_trial: usize,
) -> CheckReport {
    let name = "facet-decomposition";
    let players: Vec<Vertex> = complex.support().members().collect();
    if players.is_empty() {
        return CheckReport::skip(name, "no players in any facet");
    }
    let mut rng = gen::rng(seed);
    for trial in 0..trials {
        let player = players[trial % players.len()];
        let qv = gen::random_quasi(complex, player, &mut rng);
        if qv.lambda().is_zero() {
            continue;
        }
        let d = match facet_decompose(&qv) {
            Ok(d) => d,
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        };
        if &sum(d.weights().values().cloned()) != qv.lambda() {
            return CheckReport::fail(name, trial + 1, "ΣP(F) differs from λ".to_string());
        }
        for local in d.locals().values() {
            if sum(local.coefficients().values().cloned()) != BigRational::one() {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    "local coefficients do not sum to one".to_string(),
                );
            }
        }
        for t in complex.link_of_player(player).expect("feasible player") {
            let mut back = BigRational::zero();
            for (facet, p) in d.weights() {
                if t.insert(player).is_subset(facet) {
                    back += p.clone()
                        * d.locals()[facet]
                            .coefficients()
                            .get(&t)
                            .cloned()
                            .unwrap_or_else(BigRational::zero);
                }
            }
            if back != qv.coefficient(&t) {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    format!("reconstruction identity fails at {t}"),
                );
            }
        }
        for _ in 0..games_per_trial {
            let game = gen::random_worth(complex, &mut rng);
            if d.eval(&game).expect("same complex") != qv.eval(&game).expect("same complex") {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    "decomposition and direct evaluation disagree".to_string(),
                );
            }
        }
    }
    CheckReport::pass(name, trials)
}

/// The closed-form Shapley value against the permutation-average oracle,
/// on every facet of the complex.
pub fn check_shapley_oracle(
    complex: &Arc<SimplicialComplex>,
    seed: u64,
    games_per_facet: usize,
) -> CheckReport {
    let name = "shapley-oracle";
    let mut rng = gen::rng(seed);
    let mut trials = 0;
    for facet in complex.facets() {
        if facet.is_empty() {
            continue;
        }
        if facet.card() > 8 {
            return CheckReport::skip(name, "facet too large for permutation enumeration");
        }
        for _ in 0..games_per_facet {
            let ambient = gen::random_worth(complex, &mut rng);
            let v_f = ambient.restrict(*facet).expect("facet is feasible");
            for player in facet.members() {
                let fast = shapley_simplex(&v_f, player).expect("player in facet");
                let slow = oracle::shapley_permutation_average(&v_f, player);
                trials += 1;
                if fast != slow {
                    return CheckReport::fail(
                        name,
                        trials,
                        format!("Shapley mismatch for player {player} on facet {facet}"),
                    );
                }
            }
        }
    }
    CheckReport::pass(name, trials)
}

/// Influence vectors land in the facet polytope and membership recovers a
/// distribution with the same influence vector; off-polytope probes are
/// rejected.
pub fn check_influence_roundtrip(
    complex: &Arc<SimplicialComplex>,
    seed: u64,
    trials: usize,
) -> CheckReport {
    let name = "influence-polytope-roundtrip";
    let mut rng = gen::rng(seed);
    let zero = BigRational::zero();
    for trial in 0..trials {
        let dist = gen::random_distribution(complex, &mut rng);
        let target = match polytope::influence_vector(complex, &dist) {
            Ok(t) => t,
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        };
        match polytope::polytope_membership(complex, target.coords(), &zero) {
            Ok(Some(recovered)) => {
                let back = polytope::influence_vector(complex, &recovered)
                    .expect("distribution matches complex");
                if back.coords() != target.coords() {
                    return CheckReport::fail(
                        name,
                        trial + 1,
                        "recovered distribution has a different influence vector".to_string(),
                    );
                }
            }
            Ok(None) => {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    "forward influence vector rejected by membership".to_string(),
                )
            }
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        }
    }
    CheckReport::pass(name, trials)
}

/// On pure complexes: the Shapley-weighted group value satisfies
/// probabilistic efficiency, substitution on carrier games, the
/// `w^P(i)`-dummy axiom, and is recovered by the reconstruction solver.
pub fn check_reducible(
    complex: &Arc<SimplicialComplex>,
    seed: u64,
    trials: usize,
) -> CheckReport {
    let name = "shapley-reduction-axioms";
    if !complex.is_pure() {
        return CheckReport::skip(name, "complex is not pure");
    }
    if complex.support().is_empty() {
        return CheckReport::skip(name, "no players in any facet");
    }
    let mut rng = gen::rng(seed);
    let zero = BigRational::zero();
    for trial in 0..trials {
        let dist = gen::random_distribution(complex, &mut rng);
        let group = match GroupValue::shapley_reducible(Arc::clone(complex), &dist) {
            Ok(g) => g,
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        };
        let game = gen::random_worth(complex, &mut rng);
        match check_probabilistic_efficiency(&group, &dist, &game, &zero) {
            Ok(true) => {}
            Ok(false) => {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    "probabilistic efficiency fails".to_string(),
                )
            }
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        }
        match check_substitution_carrier(&group, &zero) {
            Ok(true) => {}
            Ok(false) => {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    "substitution fails on a carrier game".to_string(),
                )
            }
            Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
        }
        // Each player's participation rate is the influence w^P(i), and the
        // dummy axiom holds at that rate.
        for player in complex.support().members() {
            let quasi = group.get(player).expect("coverage");
            let influence = polytope::influence(complex, &dist, Face::singleton(player))
                .expect("distribution matches");
            if quasi.lambda() != &influence {
                return CheckReport::fail(
                    name,
                    trial + 1,
                    format!("λ of player {player} differs from w^P(i)"),
                );
            }
            let dummy_game = gen::random_dummy_worth(complex, player, &mut rng);
            match check_dummy_axiom(quasi, &dummy_game, &zero) {
                Ok(true) => {}
                Ok(false) => {
                    return CheckReport::fail(
                        name,
                        trial + 1,
                        format!("dummy axiom fails for player {player}"),
                    )
                }
                Err(err) => return CheckReport::fail(name, trial + 1, err.to_string()),
            }
        }
        if reconstruct_reducible(&group, &zero).is_none() {
            return CheckReport::fail(
                name,
                trial + 1,
                "reconstruction failed to find a witness distribution".to_string(),
            );
        }
    }
    CheckReport::pass(name, trials)
}

/// On matroids: the anticore of the rank game coincides with the facet
/// polytope.
pub fn check_edmonds(complex: &SimplicialComplex, seed: u64, samples: usize) -> CheckReport {
    let name = "edmonds-equality";
    if !complex.is_matroid() {
        return CheckReport::skip(name, "complex is not a matroid");
    }
    if complex.n() > 5 {
        return CheckReport::skip(name, "vertex enumeration capped at 5 players");
    }
    match polytope::edmonds_check(complex, samples, seed) {
        Ok(true) => CheckReport::pass(name, samples),
        Ok(false) => CheckReport::fail(name, samples, "equality check failed".to_string()),
        Err(err) => CheckReport::fail(name, samples, err.to_string()),
    }
}

/// The attribution pipeline on a synthetic log: monotone worth, exact
/// drop accounting, and conservation of the channel sum.
pub fn check_attribution(complex: &Arc<SimplicialComplex>, seed: u64) -> CheckReport {
    let name = "attribution-conservation";
    if !complex.is_pure() {
        return CheckReport::skip(name, "complex is not pure");
    }
    if complex.support().is_empty() {
        return CheckReport::skip(name, "no players in any facet");
    }
    let records = attribution::synth_journeys(complex, 500, seed);
    let build = attribution::build_worth::<f64>(&records, Arc::clone(complex));
    if !build.worth.is_monotone() {
        return CheckReport::fail(name, 1, "built worth is not monotone".to_string());
    }
    let expected_dropped = records
        .iter()
        .filter(|r| r.converted && !complex.contains(r.channels))
        .count();
    if build.dropped != expected_dropped {
        return CheckReport::fail(name, 1, "drop accounting mismatch".to_string());
    }
    match attribution::attribute(
        complex,
        &build,
        &attribution::Method::ShapleyReduce,
        &attribution::DistSpec::Uniform,
    ) {
        Ok(report) => {
            let channel_sum: f64 = report.per_channel.iter().map(|c| c.value).sum();
            let weighted: f64 = complex
                .facets()
                .iter()
                .map(|f| build.worth.value(*f) / complex.facets().len() as f64)
                .sum();
            if (channel_sum - weighted).abs() > 1e-6 {
                return CheckReport::fail(
                    name,
                    1,
                    format!("conservation residual {} too large", channel_sum - weighted),
                );
            }
            CheckReport::pass(name, records.len())
        }
        Err(err) => CheckReport::fail(name, 1, err.to_string()),
    }
}

/// The standard battery behind `scgt verify`.
pub fn run_all(complex: &Arc<SimplicialComplex>, seed: u64) -> Vec<CheckReport> {
    vec![
        check_roundtrip(complex, seed, 100),
        check_dummy(complex, seed.wrapping_add(1), 100),
        check_monotonicity(complex, seed.wrapping_add(2), 100),
        check_decomposition(complex, seed.wrapping_add(3), 50, 20),
        check_shapley_oracle(complex, seed.wrapping_add(4), 20),
        check_influence_roundtrip(complex, seed.wrapping_add(5), 100),
        check_reducible(complex, seed.wrapping_add(6), 20),
        check_edmonds(complex, seed.wrapping_add(7), 10),
        check_attribution(complex, seed.wrapping_add(8)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_on_the_prototype() {
        let complex = Arc::new(fixtures::prototype());
        for report in run_all(&complex, 42) {
            assert!(report.passed, "{}", report.status_line());
        }
    }

    #[test]
    fn all_checks_pass_on_u23() {
        let complex = Arc::new(fixtures::uniform_matroid(2, 3));
        for report in run_all(&complex, 42) {
            assert!(report.passed, "{}", report.status_line());
        }
    }

    #[test]
    fn nonpure_fixture_skips_reducible_checks() {
        let complex = Arc::new(fixtures::prototype_nonpure());
        let reports = run_all(&complex, 42);
        let reducible = reports
            .iter()
            .find(|r| r.name == "shapley-reduction-axioms")
            .unwrap();
        assert!(reducible.skipped);
        for report in &reports {
            assert!(report.passed, "{}", report.status_line());
        }
    }

    #[test]
    fn random_complexes_pass_the_core_identity_checks() {
        let mut rng = gen::rng(1234);
        for _ in 0..10 {
            let complex = Arc::new(gen::random_complex(&mut rng, 6));
            assert!(check_roundtrip(&complex, 9, 20).passed);
            assert!(check_dummy(&complex, 10, 20).passed);
            assert!(check_monotonicity(&complex, 11, 20).passed);
            assert!(check_decomposition(&complex, 12, 10, 5).passed);
            assert!(check_influence_roundtrip(&complex, 13, 10).passed);
        }
    }

    #[test]
    fn fixture_names_resolve() {
        for name in FIXTURE_NAMES {
            assert!(fixture_by_name(name).is_some(), "{name}");
        }
        assert!(fixture_by_name("nope").is_none());
    }
}
