//! The multi-touch-attribution pipeline: ingest journey logs, build the
//! feasibility complex from a trackability declaration, count conversions
//! into a worth function, and split them across channels with the chosen
//! value method.
//!
//! Worth semantics: `v(T)` counts the conversions whose touched channel
//! set is *contained in* `T`, which makes the game monotone by
//! construction. Converted journeys whose channel set is not trackable are
//! dropped loudly (reported in the diagnostics) rather than truncated to a
//! feasible subset.

use std::io::Read;
use std::path::Path;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, Vertex};
use crate::games::{GameError, WorthFunction};
use crate::io::{self, DistEntry, IoError};
use crate::polytope;
use crate::scalar::Scalar;
use crate::values::{reducible_group_value, FacetDistribution, QuasiValue, ValueError};
use crate::{fixtures, verify};

#[derive(Debug, Error)]
pub enum AttributionError {
    #[error("line {line}: unknown channel {token:?}")]
    UnknownChannel { line: usize, token: String },
    #[error("line {line}: {message}")]
    MalformedRow { line: usize, message: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error(
        "shapley-reduce requires all trackable sets to have equal size; \
         this complex is not pure. Switch to --method quasi with explicit \
         coefficients, or amend the trackability declaration"
    )]
    PurityRequired,
    #[error("proportional distribution is undefined: total facet conversion mass is zero")]
    ZeroConversionMass,
    #[error("no coefficients supplied for channel {0}")]
    MissingCoefficients(Vertex),
    #[error("method quasi requires --coeffs with per-channel coefficient files")]
    MissingCoeffsFile,
    #[error("unknown method {0:?}; expected shapley-reduce or quasi")]
    UnknownMethod(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Polytope(#[from] polytope::PolytopeError),
}

/// One user journey: the touched channels and whether it converted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JourneyRecord {
    pub user_id: String,
    pub channels: Face,
    pub converted: bool,
}

/// The channel sets a marketing team can actually measure; every subset of
/// each listed set is measurable too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackabilityDeclaration {
    pub maximal_trackable: Vec<Face>,
}

/// The six-channel demo fixture: the trackability declaration and the
/// complex it generates. With `nonpure` the four right-side channels are
/// declared trackable as one block, which breaks purity.
pub fn prototype_fixture(nonpure: bool) -> (SimplicialComplex, TrackabilityDeclaration) {
    let declaration = if nonpure {
        TrackabilityDeclaration {
            maximal_trackable: vec![
                Face::from_members([1, 2, 3]),
                Face::from_members([3, 4, 5, 6]),
            ],
        }
    } else {
        TrackabilityDeclaration {
            maximal_trackable: vec![
                Face::from_members([1, 2, 3]),
                Face::from_members([3, 4, 5]),
                Face::from_members([3, 4, 6]),
                Face::from_members([3, 5, 6]),
                Face::from_members([4, 5, 6]),
            ],
        }
    };
    let complex = if nonpure {
        fixtures::prototype_nonpure()
    } else {
        fixtures::prototype()
    };
    (complex, declaration)
}

/// Parses `user_id,channels,converted` rows. Channels are semicolon
/// separated labels or 1-based indices; `converted` is 0 or 1. Reported
/// line numbers count data rows, the header excluded.
pub fn ingest<R: Read>(
    reader: R,
    complex: &SimplicialComplex,
) -> Result<Vec<JourneyRecord>, AttributionError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    {
        let headers = csv_reader.headers()?;
        let expected = ["user_id", "channels", "converted"];
        if headers.len() != 3 || headers.iter().zip(expected).any(|(h, e)| h != e) {
            return Err(AttributionError::MalformedRow {
                line: 0,
                message: format!("expected header user_id,channels,converted, found {headers:?}"),
            });
        }
    }
    let mut records = Vec::new();
    for (idx, row) in csv_reader.records().enumerate() {
        let line = idx + 1;
        let row = row?;
        if row.len() != 3 {
            return Err(AttributionError::MalformedRow {
                line,
                message: format!("expected 3 fields, found {}", row.len()),
            });
        }
        let user_id = row[0].to_string();
        let mut channels = Face::EMPTY;
        for token in row[1].split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let vertex = match token.parse::<u32>() {
                Ok(id) if id >= 1 && id as usize <= complex.n() => Vertex::new(id),
                Ok(_) => {
                    return Err(AttributionError::UnknownChannel {
                        line,
                        token: token.to_string(),
                    })
                }
                Err(_) => complex.vertex_by_label(token).ok_or_else(|| {
                    AttributionError::UnknownChannel {
                        line,
                        token: token.to_string(),
                    }
                })?,
            };
            channels = channels.insert(vertex);
        }
        if channels.is_empty() {
            return Err(AttributionError::MalformedRow {
                line,
                message: "journey lists no channels".to_string(),
            });
        }
        let converted = match &row[2] {
            "0" => false,
            "1" => true,
            other => {
                return Err(AttributionError::MalformedRow {
                    line,
                    message: format!("converted must be 0 or 1, found {other:?}"),
                })
            }
        };
        records.push(JourneyRecord {
            user_id,
            channels,
            converted,
        });
    }
    Ok(records)
}

pub fn ingest_path(
    path: &Path,
    complex: &SimplicialComplex,
) -> Result<Vec<JourneyRecord>, AttributionError> {
    let file = std::fs::File::open(path).map_err(|source| {
        AttributionError::Io(IoError::Read {
            path: path.to_path_buf(),
            source,
        })
    })?;
    ingest(file, complex)
}

/// The feasibility complex generated by a trackability declaration.
pub fn build_complex(
    declaration: &TrackabilityDeclaration,
    n: usize,
) -> Result<SimplicialComplex, ComplexError> {
    SimplicialComplex::from_facets(n, declaration.maximal_trackable.iter().copied())
}

/// The worth function plus the journey accounting it came from.
#[derive(Debug, Clone)]
pub struct WorthBuild<S: Scalar> {
    pub worth: WorthFunction<S>,
    pub converted_total: usize,
    pub dropped: usize,
}

/// Counts conversions into a worth function: `v(T)` is the number of
/// converted journeys whose channel set is contained in `T`. Converted
/// journeys with an untrackable channel set contribute to no coalition and
/// are tallied as dropped.
pub fn build_worth<S: Scalar>(
    records: &[JourneyRecord],
    complex: Arc<SimplicialComplex>,
) -> WorthBuild<S> {
    let converted: Vec<&JourneyRecord> = records.iter().filter(|r| r.converted).collect();
    let dropped = converted
        .iter()
        .filter(|r| !complex.contains(r.channels))
        .count();
    let assignments: Vec<(Face, S)> = complex
        .faces()
        .into_iter()
        .filter(|t| !t.is_empty())
        .map(|t| {
            let count = converted
                .iter()
                .filter(|r| r.channels.is_subset(&t))
                .count();
            (t, S::from_int(count as i64))
        })
        .collect();
    let worth = WorthFunction::new(complex, assignments).expect("faces are feasible");
    WorthBuild {
        worth,
        converted_total: converted.len(),
        dropped,
    }
}

/// How the facet distribution is chosen.
#[derive(Debug, Clone)]
pub enum DistSpec {
    Uniform,
    /// Weights proportional to the facet conversion mass `v(F)`.
    Proportional,
    Explicit(FacetDistribution<f64>),
}

/// Which value method splits the conversions.
#[derive(Debug, Clone)]
pub enum Method {
    ShapleyReduce,
    Quasi(Vec<QuasiValue<f64>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelValue {
    pub channel: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EfficiencyDiagnostic {
    pub channel_sum: f64,
    pub weighted_facet_worth: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Diagnostics {
    pub pure: bool,
    /// Per-channel participation rates: `w^P({i})` for shapley-reduce, the
    /// supplied `λ_i` for quasi.
    pub lambda: Vec<f64>,
    pub dropped_journeys: usize,
    pub converted_total: usize,
    pub converted_counted: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub efficiency: Option<EfficiencyDiagnostic>,
}

/// The attribution result: per-channel values, the distribution that
/// produced them, and the accounting diagnostics. Serialized values are
/// rounded to nine decimal places; full precision is kept in memory.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AttributionReport {
    pub method: String,
    pub per_channel: Vec<ChannelValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<Vec<DistEntry>>,
    pub diagnostics: Diagnostics,
}

fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

fn resolve_distribution(
    complex: &SimplicialComplex,
    build: &WorthBuild<f64>,
    spec: &DistSpec,
) -> Result<FacetDistribution<f64>, AttributionError> {
    match spec {
        DistSpec::Uniform => Ok(FacetDistribution::uniform(complex)),
        DistSpec::Proportional => {
            let masses: Vec<f64> = complex
                .facets()
                .iter()
                .map(|f| build.worth.value(*f))
                .collect();
            let total: f64 = masses.iter().sum();
            if total <= 0.0 {
                return Err(AttributionError::ZeroConversionMass);
            }
            let weights: Vec<f64> = masses.iter().map(|m| m / total).collect();
            Ok(FacetDistribution::from_weight_slice(complex, &weights)?)
        }
        DistSpec::Explicit(dist) => Ok(dist.clone()),
    }
}

/// Computes the report for an already-built worth function.
pub fn attribute(
    complex: &Arc<SimplicialComplex>,
    build: &WorthBuild<f64>,
    method: &Method,
    dist_spec: &DistSpec,
) -> Result<AttributionReport, AttributionError> {
    let n = complex.n();
    let labels = complex.labels();
    let (method_name, values, lambda, distribution, efficiency) = match method {
        Method::ShapleyReduce => {
            if !complex.is_pure() {
                return Err(AttributionError::PurityRequired);
            }
            let dist = resolve_distribution(complex, build, dist_spec)?;
            let values = reducible_group_value(complex, &dist, &build.worth, None)?;
            let lambda: Vec<f64> = complex
                .vertices()
                .map(|v| polytope::influence(complex, &dist, Face::singleton(v)))
                .collect::<Result<_, _>>()?;
            let channel_sum: f64 = values.iter().sum();
            let weighted: f64 = complex
                .facets()
                .iter()
                .map(|f| dist.weight(f) * build.worth.value(*f))
                .sum();
            let efficiency = EfficiencyDiagnostic {
                channel_sum: round9(channel_sum),
                weighted_facet_worth: round9(weighted),
                residual: round9((channel_sum - weighted).abs()),
            };
            let entries: Vec<DistEntry> = io::DistFile::from_distribution(complex, &dist)
                .weights
                .into_iter()
                .map(|mut e| {
                    e.p = round9(e.p);
                    e
                })
                .collect();
            (
                "shapley-reduce",
                values,
                lambda,
                Some(entries),
                Some(efficiency),
            )
        }
        Method::Quasi(quasi_values) => {
            let mut values = vec![0.0; n];
            let mut lambda = vec![0.0; n];
            let mut covered = Face::EMPTY;
            for q in quasi_values {
                values[q.player().index()] = q.eval(&build.worth)?;
                lambda[q.player().index()] = *q.lambda();
                covered = covered.insert(q.player());
            }
            for v in complex.support().members() {
                if !covered.contains_vertex(v) {
                    return Err(AttributionError::MissingCoefficients(v));
                }
            }
            ("quasi", values, lambda, None, None)
        }
    };

    let per_channel = (0..n)
        .map(|idx| ChannelValue {
            channel: idx as u32 + 1,
            label: labels.map(|ls| ls[idx].clone()),
            value: round9(values[idx]),
        })
        .collect();
    Ok(AttributionReport {
        method: method_name.to_string(),
        per_channel,
        distribution,
        diagnostics: Diagnostics {
            pure: complex.is_pure(),
            lambda: lambda.into_iter().map(round9).collect(),
            dropped_journeys: build.dropped,
            converted_total: build.converted_total,
            converted_counted: build.converted_total - build.dropped,
            efficiency,
        },
    })
}

/// End-to-end pipeline as driven by the CLI: load the trackability
/// declaration, ingest journeys, build the worth function, attribute.
pub fn run_pipeline(
    journeys: &Path,
    trackable: &Path,
    method_name: &str,
    dist_arg: &str,
    coeffs: Option<&Path>,
) -> Result<AttributionReport, AttributionError> {
    let resolved = io::load_trackable(trackable)?.resolve()?;
    let declaration = TrackabilityDeclaration {
        maximal_trackable: resolved.sets,
    };
    let mut complex = build_complex(&declaration, resolved.n)?;
    if let Some(labels) = resolved.labels {
        complex = complex.with_labels(labels)?;
    }
    let complex = Arc::new(complex);

    let records = ingest_path(journeys, &complex)?;
    let build = build_worth::<f64>(&records, Arc::clone(&complex));

    let method = match method_name {
        "shapley-reduce" => Method::ShapleyReduce,
        "quasi" => {
            let path = coeffs.ok_or(AttributionError::MissingCoeffsFile)?;
            Method::Quasi(io::load_coeffs(path, &complex)?)
        }
        other => return Err(AttributionError::UnknownMethod(other.to_string())),
    };
    let dist_spec = match dist_arg {
        "uniform" => DistSpec::Uniform,
        "proportional" => DistSpec::Proportional,
        path => DistSpec::Explicit(io::load_distribution(Path::new(path), &complex)?),
    };
    attribute(&complex, &build, &method, &dist_spec)
}

/// Deterministic synthetic journey log for demos and pipeline tests:
/// mostly feasible journeys drawn under a random facet, a slice of
/// arbitrary (possibly untrackable) channel sets, roughly a third
/// converting.
pub fn synth_journeys(complex: &SimplicialComplex, rows: usize, seed: u64) -> Vec<JourneyRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facets = complex.facets();
    let full = complex.support();
    let mut out = Vec::with_capacity(rows);
    for k in 0..rows {
        let base = if rng.random_range(0..10) < 9 {
            facets[rng.random_range(0..facets.len())]
        } else {
            full
        };
        let members: Vec<Vertex> = base.members().collect();
        let channels = loop {
            let mut s = Face::EMPTY;
            for &v in &members {
                if rng.random_range(0..2) == 1 {
                    s = s.insert(v);
                }
            }
            if !s.is_empty() {
                break s;
            }
        };
        out.push(JourneyRecord {
            user_id: format!("u{}", k + 1),
            channels,
            converted: rng.random_range(0..100) < 35,
        });
    }
    out
}

/// Writes journeys in the ingestion format, using labels when available.
pub fn write_journeys_csv(
    path: &Path,
    records: &[JourneyRecord],
    labels: Option<&[String]>,
) -> Result<(), AttributionError> {
    let mut writer = csv::Writer::from_path(path).map_err(AttributionError::Csv)?;
    writer.write_record(["user_id", "channels", "converted"])?;
    for record in records {
        let channels = record
            .channels
            .members()
            .map(|v| match labels {
                Some(ls) => ls[v.index()].clone(),
                None => v.id().to_string(),
            })
            .collect::<Vec<_>>()
            .join(";");
        writer.write_record([
            record.user_id.as_str(),
            channels.as_str(),
            if record.converted { "1" } else { "0" },
        ])?;
    }
    writer.flush().map_err(|source| {
        AttributionError::Io(IoError::Write {
            path: path.to_path_buf(),
            source,
        })
    })?;
    Ok(())
}

/// Runs the seeded verification suites on a named fixture; used by the
/// `verify` subcommand and the acceptance tests.
pub fn run_verification(fixture: &str, seed: u64) -> Option<Vec<verify::CheckReport>> {
    let complex = verify::fixture_by_name(fixture)?;
    Some(verify::run_all(&Arc::new(complex), seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(ids: &[u32]) -> Face {
        Face::from_members(ids.iter().copied())
    }

    fn proto() -> Arc<SimplicialComplex> {
        Arc::new(fixtures::prototype())
    }

    #[test]
    fn ingest_parses_labels_and_indices() {
        let csv = "user_id,channels,converted\nu1,FB;TV,1\nu2,G,0\nu3,1;2,1\n";
        let records = ingest(csv.as_bytes(), &proto()).unwrap();
        assert_eq!(records.len(), 3);
        assert_eq!(records[0].channels, face(&[3, 4]));
        assert!(records[0].converted);
        assert_eq!(records[1].channels, face(&[6]));
        assert!(!records[1].converted);
        assert_eq!(records[2].channels, face(&[1, 2]));
    }

    #[test]
    fn ingest_names_unknown_labels_with_line_numbers() {
        let csv = "user_id,channels,converted\nu1,FB;TV,1\nu2,G,0\nu3,XX,1\n";
        let err = ingest(csv.as_bytes(), &proto()).unwrap_err();
        match err {
            AttributionError::UnknownChannel { line, token } => {
                assert_eq!(line, 3);
                assert_eq!(token, "XX");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn ingest_rejects_malformed_rows_and_accepts_empty_logs() {
        let csv = "user_id,channels,converted\nu1,FB,2\n";
        assert!(matches!(
            ingest(csv.as_bytes(), &proto()).unwrap_err(),
            AttributionError::MalformedRow { line: 1, .. }
        ));
        let empty = "user_id,channels,converted\n";
        assert!(ingest(empty.as_bytes(), &proto()).unwrap().is_empty());
    }

    #[test]
    fn declaration_generates_the_prototype_complex() {
        let declaration = TrackabilityDeclaration {
            maximal_trackable: vec![
                face(&[1, 2, 3]),
                face(&[3, 4, 5]),
                face(&[3, 4, 6]),
                face(&[3, 5, 6]),
                face(&[4, 5, 6]),
            ],
        };
        assert_eq!(
            build_complex(&declaration, 6).unwrap(),
            fixtures::prototype()
        );
        let full = TrackabilityDeclaration {
            maximal_trackable: vec![Face::full(4)],
        };
        let classical = build_complex(&full, 4).unwrap();
        assert_eq!(classical.facets(), &[Face::full(4)]);
    }

    #[test]
    fn prototype_fixture_shapes() {
        let (complex, declaration) = prototype_fixture(false);
        assert_eq!(complex.facets().len(), 5);
        assert_eq!(declaration.maximal_trackable.len(), 5);
        let link_sizes: Vec<usize> = complex
            .vertices()
            .map(|v| complex.link_of_player(v).unwrap().len())
            .collect();
        assert_eq!(link_sizes, vec![4, 4, 10, 7, 7, 7]);

        let (variant, _) = prototype_fixture(true);
        assert_eq!(variant.facets().len(), 2);
        assert!(!variant.is_pure());
    }

    #[test]
    fn worth_counts_contained_conversions() {
        let complex = proto();
        let records = vec![JourneyRecord {
            user_id: "a".into(),
            channels: face(&[3]),
            converted: true,
        }];
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        for t in complex.faces() {
            let expected = if face(&[3]).is_subset(&t) { 1.0 } else { 0.0 };
            assert_eq!(build.worth.value(t), expected, "at {t}");
        }
        assert_eq!(build.dropped, 0);
    }

    #[test]
    fn untrackable_conversions_are_dropped_loudly() {
        let complex = proto();
        let records = vec![
            JourneyRecord {
                user_id: "a".into(),
                channels: face(&[1, 4]),
                converted: true,
            },
            JourneyRecord {
                user_id: "b".into(),
                channels: face(&[1, 4]),
                converted: false,
            },
        ];
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        assert_eq!(build.dropped, 1);
        assert_eq!(build.converted_total, 1);
        for t in complex.faces() {
            assert_eq!(build.worth.value(t), 0.0);
        }
    }

    #[test]
    fn empty_log_gives_the_zero_game() {
        let complex = proto();
        let build = build_worth::<f64>(&[], Arc::clone(&complex));
        assert_eq!(build.converted_total, 0);
        for t in complex.faces() {
            assert_eq!(build.worth.value(t), 0.0);
        }
    }

    #[test]
    fn built_worth_is_always_monotone() {
        let complex = proto();
        let records = synth_journeys(&complex, 300, 99);
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        assert!(build.worth.is_monotone());
    }

    #[test]
    fn shapley_reduce_report_conserves_mass() {
        let complex = proto();
        let records = synth_journeys(&complex, 100, 7);
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        let report =
            attribute(&complex, &build, &Method::ShapleyReduce, &DistSpec::Uniform).unwrap();
        let channel_sum: f64 = report.per_channel.iter().map(|c| c.value).sum();
        let expected: f64 = complex
            .facets()
            .iter()
            .map(|f| 0.2 * build.worth.value(*f))
            .sum();
        assert!((channel_sum - expected).abs() < 1e-6, "rounding is 9 dp");
        let eff = report.diagnostics.efficiency.unwrap();
        assert!(eff.residual <= 1e-9);
        assert!(report.diagnostics.pure);
        // λ_i = w^P(i): vertex 3 sits in four of five facets.
        assert!((report.diagnostics.lambda[2] - 0.8).abs() < 1e-9);
    }

    #[test]
    fn nonpure_complex_rejects_shapley_reduce_but_accepts_quasi() {
        let (complex, _) = prototype_fixture(true);
        let complex = Arc::new(complex);
        let records = synth_journeys(&complex, 50, 13);
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        let err =
            attribute(&complex, &build, &Method::ShapleyReduce, &DistSpec::Uniform).unwrap_err();
        assert!(matches!(err, AttributionError::PurityRequired));
        assert!(err.to_string().contains("quasi"));

        let quasi: Vec<QuasiValue<f64>> = complex
            .support()
            .members()
            .map(|p| {
                let link = complex.link_of_player(p).unwrap();
                let w = 1.0 / link.len() as f64;
                QuasiValue::new(
                    Arc::clone(&complex),
                    p,
                    link.into_iter().map(|t| (t, w)).collect(),
                )
                .unwrap()
            })
            .collect();
        let report =
            attribute(&complex, &build, &Method::Quasi(quasi), &DistSpec::Uniform).unwrap();
        assert_eq!(report.method, "quasi");
        assert!(report.distribution.is_none());
        assert!(!report.diagnostics.pure);
    }

    #[test]
    fn proportional_distribution_weights_by_facet_mass() {
        let complex = proto();
        let records = synth_journeys(&complex, 200, 17);
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        let report = attribute(
            &complex,
            &build,
            &Method::ShapleyReduce,
            &DistSpec::Proportional,
        )
        .unwrap();
        let dist = report.distribution.unwrap();
        let total_mass: f64 = complex
            .facets()
            .iter()
            .map(|f| build.worth.value(*f))
            .sum();
        for entry in &dist {
            let f = Face::from_members(entry.facet.iter().copied());
            assert!((entry.p - build.worth.value(f) / total_mass).abs() < 1e-9);
        }

        let empty_build = build_worth::<f64>(&[], Arc::clone(&complex));
        assert!(matches!(
            attribute(
                &complex,
                &empty_build,
                &Method::ShapleyReduce,
                &DistSpec::Proportional,
            )
            .unwrap_err(),
            AttributionError::ZeroConversionMass
        ));
    }

    #[test]
    fn single_facet_reduces_to_classical_shapley_attribution() {
        let complex =
            Arc::new(SimplicialComplex::from_facets(3, vec![Face::full(3)]).unwrap());
        let records = synth_journeys(&complex, 120, 23);
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        let report =
            attribute(&complex, &build, &Method::ShapleyReduce, &DistSpec::Uniform).unwrap();
        for player in complex.vertices() {
            let direct = crate::values::shapley_simplex(&build.worth, player).unwrap();
            assert!((report.per_channel[player.index()].value - direct).abs() < 1e-9);
        }
    }

    #[test]
    fn report_json_is_deterministic() {
        let complex = proto();
        let records = synth_journeys(&complex, 150, 29);
        let build = build_worth::<f64>(&records, Arc::clone(&complex));
        let report_a =
            attribute(&complex, &build, &Method::ShapleyReduce, &DistSpec::Uniform).unwrap();
        let build_again = build_worth::<f64>(&records, Arc::clone(&complex));
        let report_b = attribute(
            &complex,
            &build_again,
            &Method::ShapleyReduce,
            &DistSpec::Uniform,
        )
        .unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&report_a).unwrap(),
            serde_json::to_string_pretty(&report_b).unwrap()
        );
    }

    #[test]
    fn journeys_csv_roundtrip() {
        let complex = proto();
        let records = synth_journeys(&complex, 40, 31);
        let dir = std::env::temp_dir().join(format!("scgt-attr-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("journeys.csv");
        write_journeys_csv(&path, &records, complex.labels()).unwrap();
        let back = ingest_path(&path, &complex).unwrap();
        assert_eq!(back, records);
    }
}
