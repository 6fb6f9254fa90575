//! JSON file formats: complexes, games, coefficient families, facet
//! distributions, and trackability declarations.
//!
//! Vertices are 1-based integers everywhere. Loaders canonicalize face
//! lists (sorting, deduplication, antichain reduction for facets) so the
//! on-disk order never matters; writers emit canonical order so outputs
//! are byte-stable.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, Vertex, MAX_VERTICES};
use crate::games::{GameError, WorthFunction};
use crate::values::{FacetDistribution, QuasiValue, ValueError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("vertex id {id} is outside 1..={n}")]
    VertexOutOfRange { id: u32, n: usize },
    #[error("label {0:?} is not declared in the complex")]
    UnknownLabel(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// `{"n": 6, "labels": [...], "facets": [[1,2,3], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexFile {
    pub fn build(&self) -> Result<SimplicialComplex, IoError> {
        if self.n == 0 {
            return Err(ComplexError::ZeroVertices.into());
        }
        if self.n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(self.n).into());
        }
        let mut faces = Vec::with_capacity(self.facets.len());
        for ids in &self.facets {
            faces.push(face_from_ids(ids, self.n)?);
        }
        let mut complex = SimplicialComplex::from_facets(self.n, faces)?;
        if let Some(labels) = &self.labels {
            complex = complex.with_labels(labels.clone())?;
        }
        Ok(complex)
    }

    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        ComplexFile {
            n: complex.n(),
            labels: complex.labels().map(|ls| ls.to_vec()),
            facets: complex.facets().iter().map(|f| f.member_ids()).collect(),
        }
    }
}

fn face_from_ids(ids: &[u32], n: usize) -> Result<Face, IoError> {
    let mut face = Face::EMPTY;
    for &id in ids {
        if id == 0 || id as usize > n {
            return Err(IoError::VertexOutOfRange { id, n });
        }
        face = face.insert(Vertex::new(id));
    }
    Ok(face)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|source| IoError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    text.push('\n');
    fs::write(path, text).map_err(|source| IoError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplex, IoError> {
    read_json::<ComplexFile>(path)?.build()
}

/// Builds a complex from the JSON text itself (FFI and embedding use).
pub fn complex_from_json_str(text: &str) -> Result<SimplicialComplex, IoError> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|source| IoError::Json {
        path: PathBuf::from("<string>"),
        source,
    })?;
    file.build()
}

/// The complex a game file refers to: inline, or a path resolved relative
/// to the game file itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexRef {
    Inline(ComplexFile),
    Path(String),
}

/// `{"complex": "path-or-inline", "worth": [{"face": [1,2], "value": 4.0}]}`
/// Faces absent from the list have worth zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameFile {
    pub complex: ComplexRef,
    pub worth: Vec<WorthEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WorthEntry {
    pub face: Vec<u32>,
    pub value: f64,
}

pub fn load_game(path: &Path) -> Result<(Arc<SimplicialComplex>, WorthFunction<f64>), IoError> {
    let file: GameFile = read_json(path)?;
    let complex = match &file.complex {
        ComplexRef::Inline(inline) => inline.build()?,
        ComplexRef::Path(rel) => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            load_complex(&base.join(rel))?
        }
    };
    let complex = Arc::new(complex);
    let mut assignments = Vec::with_capacity(file.worth.len());
    for entry in &file.worth {
        assignments.push((face_from_ids(&entry.face, complex.n())?, entry.value));
    }
    let worth = WorthFunction::new(Arc::clone(&complex), assignments)?;
    Ok((complex, worth))
}

/// Builds a game against an already-loaded complex (for commands that take
/// `--complex` and `--game` separately). The game file may still name its
/// own complex; it must agree structurally.
pub fn load_game_on(
    path: &Path,
    complex: &Arc<SimplicialComplex>,
) -> Result<WorthFunction<f64>, IoError> {
    let (own, worth) = load_game(path)?;
    if own.as_ref() != complex.as_ref() {
        return Err(GameError::ComplexMismatch.into());
    }
    // Rebind onto the shared complex so downstream complex checks pass by
    // construction.
    let assignments: Vec<(Face, f64)> = worth.entries().map(|(f, v)| (*f, *v)).collect();
    Ok(WorthFunction::new(Arc::clone(complex), assignments)?)
}

/// `{"player": 3, "lambda": 1.0, "coefficients": [{"face": [4,5], "p": 0.1}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffsFile {
    pub player: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    pub coefficients: Vec<CoeffEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub face: Vec<u32>,
    pub p: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl CoeffsFile {
    pub fn build(&self, complex: &Arc<SimplicialComplex>) -> Result<QuasiValue<f64>, IoError> {
        if self.player == 0 || self.player as usize > complex.n() {
            return Err(IoError::VertexOutOfRange {
                id: self.player,
                n: complex.n(),
            });
        }
        let player = Vertex::new(self.player);
        let mut coefficients = BTreeMap::new();
        for entry in &self.coefficients {
            coefficients.insert(face_from_ids(&entry.face, complex.n())?, entry.p);
        }
        let value = match self.lambda {
            Some(lambda) => {
                QuasiValue::with_stated_lambda(Arc::clone(complex), player, coefficients, lambda)?
            }
            None => QuasiValue::new(Arc::clone(complex), player, coefficients)?,
        };
        Ok(value)
    }

    pub fn from_value(value: &QuasiValue<f64>) -> Self {
        CoeffsFile {
            player: value.player().id(),
            lambda: Some(*value.lambda()),
            coefficients: value
                .coefficients()
                .iter()
                .map(|(f, p)| CoeffEntry {
                    face: f.member_ids(),
                    p: *p,
                })
                .collect(),
        }
    }
}

/// Loads one coefficient file or a JSON array of them.
pub fn load_coeffs(
    path: &Path,
    complex: &Arc<SimplicialComplex>,
) -> Result<Vec<QuasiValue<f64>>, IoError> {
    let parsed: OneOrMany<CoeffsFile> = read_json(path)?;
    let files = match parsed {
        OneOrMany::One(one) => vec![one],
        OneOrMany::Many(many) => many,
    };
    files.iter().map(|f| f.build(complex)).collect()
}

/// `{"weights": [{"facet": [1,2,3], "P": 0.2}, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistFile {
    pub weights: Vec<DistEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistEntry {
    pub facet: Vec<u32>,
    #[serde(rename = "P")]
    pub p: f64,
}

impl DistFile {
    pub fn build(&self, complex: &SimplicialComplex) -> Result<FacetDistribution<f64>, IoError> {
        let mut weights = BTreeMap::new();
        for entry in &self.weights {
            weights.insert(face_from_ids(&entry.facet, complex.n())?, entry.p);
        }
        Ok(FacetDistribution::new(complex, weights)?)
    }

    pub fn from_distribution(complex: &SimplicialComplex, dist: &FacetDistribution<f64>) -> Self {
        DistFile {
            weights: complex
                .facets()
                .iter()
                .map(|f| DistEntry {
                    facet: f.member_ids(),
                    p: dist.weight(f),
                })
                .collect(),
        }
    }
}

pub fn load_distribution(
    path: &Path,
    complex: &SimplicialComplex,
) -> Result<FacetDistribution<f64>, IoError> {
    read_json::<DistFile>(path)?.build(complex)
}

/// A channel in a trackability declaration: a 1-based index or a label.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChannelId {
    Index(u32),
    Label(String),
}

/// `{"n": 6, "labels": [...], "maximal_trackable": [["FB","S","F"], [3,4,5,6]]}`
///
/// Every subset of each listed set counts as measurable; the induced
/// feasibility complex is their antichain reduction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrackableFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub maximal_trackable: Vec<Vec<ChannelId>>,
}

/// A trackability declaration with its labels resolved to vertex ids.
#[derive(Debug, Clone)]
pub struct ResolvedTrackable {
    pub n: usize,
    pub labels: Option<Vec<String>>,
    pub sets: Vec<Face>,
}

impl TrackableFile {
    pub fn resolve(&self) -> Result<ResolvedTrackable, IoError> {
        if self.n == 0 {
            return Err(ComplexError::ZeroVertices.into());
        }
        if self.n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(self.n).into());
        }
        let mut sets = Vec::with_capacity(self.maximal_trackable.len());
        for raw in &self.maximal_trackable {
            let mut face = Face::EMPTY;
            for channel in raw {
                let id = match channel {
                    ChannelId::Index(id) => *id,
                    ChannelId::Label(label) => {
                        let labels = self
                            .labels
                            .as_ref()
                            .ok_or_else(|| IoError::UnknownLabel(label.clone()))?;
                        labels
                            .iter()
                            .position(|l| l == label)
                            .map(|idx| idx as u32 + 1)
                            .ok_or_else(|| IoError::UnknownLabel(label.clone()))?
                    }
                };
                if id == 0 || id as usize > self.n {
                    return Err(IoError::VertexOutOfRange { id, n: self.n });
                }
                face = face.insert(Vertex::new(id));
            }
            sets.push(face);
        }
        Ok(ResolvedTrackable {
            n: self.n,
            labels: self.labels.clone(),
            sets,
        })
    }
}

pub fn load_trackable(path: &Path) -> Result<TrackableFile, IoError> {
    read_json(path)
}
