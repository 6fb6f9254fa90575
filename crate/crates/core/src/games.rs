//! Worth functions on a complex and the structural game families built
//! from them: carrier games, indicator games, restrictions, and the
//! indicator-basis decomposition.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, Vertex};
use crate::scalar::{approx_eq, approx_le, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("coalition {0} is not feasible in this complex")]
    InfeasibleCoalition(Face),
    #[error("the empty coalition must have worth zero")]
    NonzeroEmptyWorth,
    #[error("operation is undefined for the empty coalition")]
    EmptyAnchor,
    #[error("worth functions live on different complexes")]
    ComplexMismatch,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A payoff map on the faces of a complex, with `v(∅) = 0`.
///
/// Faces never assigned explicitly have worth zero; querying a coalition
/// outside the complex is a contract violation and panics.
#[derive(Debug, Clone, PartialEq)]
pub struct WorthFunction<S: Scalar> {
    complex: Arc<SimplicialComplex>,
    values: BTreeMap<Face, S>,
}

impl<S: Scalar> WorthFunction<S> {
    pub fn zero(complex: Arc<SimplicialComplex>) -> Self {
        WorthFunction {
            complex,
            values: BTreeMap::new(),
        }
    }

    /// Builds a worth function from partial assignments. Unassigned faces
    /// default to zero. Assigning a face outside the complex or a nonzero
    /// worth to the empty coalition is an error, not a silent fixup.
    pub fn new(
        complex: Arc<SimplicialComplex>,
        assignments: impl IntoIterator<Item = (Face, S)>,
    ) -> Result<Self, GameError> {
        let mut values = BTreeMap::new();
        for (face, value) in assignments {
            if face.is_empty() {
                if !value.is_zero() {
                    return Err(GameError::NonzeroEmptyWorth);
                }
                continue;
            }
            if !complex.contains(face) {
                return Err(GameError::InfeasibleCoalition(face));
            }
            values.insert(face, value);
        }
        Ok(WorthFunction { complex, values })
    }

    /// The carrier game `v_T`: worth 1 exactly on the feasible coalitions
    /// containing `t`. Undefined for `t = ∅` (it would give the empty
    /// coalition worth 1).
    pub fn carrier(complex: Arc<SimplicialComplex>, t: Face) -> Result<Self, GameError> {
        if t.is_empty() {
            return Err(GameError::EmptyAnchor);
        }
        if !complex.contains(t) {
            return Err(GameError::InfeasibleCoalition(t));
        }
        let values = complex
            .faces()
            .into_iter()
            .filter(|s| t.is_subset(s))
            .map(|s| (s, S::one()))
            .collect();
        Ok(WorthFunction { complex, values })
    }

    /// The strict carrier game `v̂_T`: worth 1 exactly on the feasible
    /// coalitions strictly containing `t`. Defined for every `t` in the
    /// complex, the empty coalition included.
    pub fn carrier_strict(complex: Arc<SimplicialComplex>, t: Face) -> Result<Self, GameError> {
        if !complex.contains(t) {
            return Err(GameError::InfeasibleCoalition(t));
        }
        let values = complex
            .faces()
            .into_iter()
            .filter(|s| t.is_strict_subset(s))
            .map(|s| (s, S::one()))
            .collect();
        Ok(WorthFunction { complex, values })
    }

    /// The indicator game `𝟙_t`: worth 1 at `t` only. Exposed for
    /// nonempty `t`; `𝟙_∅` would violate `v(∅) = 0`.
    pub fn indicator(complex: Arc<SimplicialComplex>, t: Face) -> Result<Self, GameError> {
        if t.is_empty() {
            return Err(GameError::EmptyAnchor);
        }
        if !complex.contains(t) {
            return Err(GameError::InfeasibleCoalition(t));
        }
        let values = BTreeMap::from([(t, S::one())]);
        Ok(WorthFunction { complex, values })
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn value(&self, face: Face) -> S {
        assert!(
            self.complex.contains(face),
            "worth queried on infeasible coalition {face}"
        );
        self.values.get(&face).cloned().unwrap_or_else(S::zero)
    }

    /// The explicitly stored assignments.
    pub fn entries(&self) -> impl Iterator<Item = (&Face, &S)> {
        self.values.iter()
    }

    pub fn scale(&self, c: &S) -> Self {
        WorthFunction {
            complex: Arc::clone(&self.complex),
            values: self
                .values
                .iter()
                .map(|(f, v)| (*f, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, GameError> {
        if self.complex.as_ref() != other.complex.as_ref() {
            return Err(GameError::ComplexMismatch);
        }
        let mut values = self.values.clone();
        for (f, v) in &other.values {
            let entry = values.entry(*f).or_insert_with(S::zero);
            *entry = entry.clone() + v.clone();
        }
        Ok(WorthFunction {
            complex: Arc::clone(&self.complex),
            values,
        })
    }

    /// Monotonicity check over covering pairs `(T ∖ i, T)`, which is
    /// equivalent to checking all comparable pairs by transitivity.
    pub fn is_monotone(&self) -> bool {
        self.is_monotone_tol(&S::default_tolerance())
    }

    pub fn is_monotone_tol(&self, tol: &S) -> bool {
        for t in self.complex.faces() {
            if t.is_empty() {
                continue;
            }
            let vt = self.value(t);
            for i in t.members() {
                if !approx_le(&self.value(t.remove(i)), &vt, tol) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether player `i` contributes exactly its standalone worth to every
    /// coalition it can join.
    pub fn is_dummy(&self, i: Vertex) -> Result<bool, GameError> {
        self.is_dummy_tol(i, &S::default_tolerance())
    }

    pub fn is_dummy_tol(&self, i: Vertex, tol: &S) -> Result<bool, GameError> {
        let link = self.complex.link_of_player(i)?;
        let vi = self.value(Face::singleton(i));
        for s in link {
            let lhs = self.value(s.insert(i));
            let rhs = self.value(s) + vi.clone();
            if !approx_eq(&lhs, &rhs, tol) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restriction to the full simplex on the members of `f`, keeping the
    /// ambient ground set (and labels) intact.
    pub fn restrict(&self, f: Face) -> Result<Self, GameError> {
        if !self.complex.contains(f) {
            return Err(GameError::InfeasibleCoalition(f));
        }
        let mut sub = SimplicialComplex::from_facets(self.complex.n(), vec![f])?;
        if let Some(labels) = self.complex.labels() {
            sub = sub.with_labels(labels.to_vec())?;
        }
        let values = f
            .subsets()
            .into_iter()
            .filter(|s| !s.is_empty())
            .filter_map(|s| {
                let v = self.value(s);
                (!v.is_zero()).then_some((s, v))
            })
            .collect();
        Ok(WorthFunction {
            complex: Arc::new(sub),
            values,
        })
    }

    /// Coefficients of the game in the indicator basis: since the
    /// indicators `𝟙_T` are pointwise disjoint, the coefficient of `𝟙_T`
    /// is simply `v(T)`.
    pub fn basis_decompose(&self) -> GameBasisCoefficients<S> {
        let coefficients = self
            .complex
            .faces()
            .into_iter()
            .filter(|t| !t.is_empty())
            .filter_map(|t| {
                let v = self.value(t);
                (!v.is_zero()).then_some((t, v))
            })
            .collect();
        GameBasisCoefficients { coefficients }
    }
}

/// Coefficients of a game in the indicator basis, keyed by nonempty faces.
/// Zero coefficients are omitted.
#[derive(Debug, Clone, PartialEq)]
pub struct GameBasisCoefficients<S: Scalar> {
    coefficients: BTreeMap<Face, S>,
}

impl<S: Scalar> GameBasisCoefficients<S> {
    pub fn coefficients(&self) -> &BTreeMap<Face, S> {
        &self.coefficients
    }

    pub fn reconstruct(
        &self,
        complex: Arc<SimplicialComplex>,
    ) -> Result<WorthFunction<S>, GameError> {
        WorthFunction::new(complex, self.coefficients.clone())
    }
}
