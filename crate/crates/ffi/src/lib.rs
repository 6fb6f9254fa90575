//! C ABI for the cooperative-game library.
//!
//! Handles are opaque pointers created and destroyed by this library;
//! every fallible call returns a [`ScgtStatus`] and leaves a description
//! of the last failure retrievable via [`scgt_last_error_message`]. Faces
//! cross the boundary as arrays of 1-based vertex ids; facet weights as
//! arrays ordered like the complex's canonical facet order.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use scgt_core::complex::{ComplexError, Face, SimplicialComplex, Vertex};
use scgt_core::games::{GameError, WorthFunction};
use scgt_core::io;
use scgt_core::polytope;
use scgt_core::values::{self, FacetDistribution, QuasiValue, ValueError};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScgtStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed input: bad JSON, out-of-range vertex ids, bad weights.
    InvalidInput = 2,
    /// Structurally valid input that violates a precondition: infeasible
    /// coalitions, purity or matroid requirements, scale limits.
    Infeasible = 3,
    /// A panic was caught at the boundary; this is a bug in the library.
    Internal = 4,
}

/// Opaque handle to an immutable simplicial complex.
pub struct ScgtComplex {
    inner: Arc<SimplicialComplex>,
}

/// Opaque handle to a worth function on a complex.
pub struct ScgtGame {
    complex: Arc<SimplicialComplex>,
    worth: WorthFunction<f64>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let cstring = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn fail(status: ScgtStatus, message: impl Into<String>) -> ScgtStatus {
    set_error(message.into());
    status
}

/// A pointer to the message of the last failure on this thread, or null.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn scgt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |msg| msg.as_ptr())
    })
}

fn complex_status(err: &ComplexError) -> ScgtStatus {
    match err {
        ComplexError::InfeasibleFace(_) => ScgtStatus::Infeasible,
        _ => ScgtStatus::InvalidInput,
    }
}

fn game_status(err: &GameError) -> ScgtStatus {
    match err {
        GameError::InfeasibleCoalition(_) | GameError::EmptyAnchor | GameError::ComplexMismatch => {
            ScgtStatus::Infeasible
        }
        GameError::NonzeroEmptyWorth => ScgtStatus::InvalidInput,
        GameError::Complex(e) => complex_status(e),
    }
}

fn value_status(err: &ValueError) -> ScgtStatus {
    match err {
        ValueError::CoefficientOutsideLink { .. }
        | ValueError::NegativeCoefficient(_)
        | ValueError::LambdaOutOfRange(_)
        | ValueError::LambdaMismatch { .. }
        | ValueError::NegativeWeight(_)
        | ValueError::WeightSumNotOne(_)
        | ValueError::DuplicatePlayer(_) => ScgtStatus::InvalidInput,
        ValueError::Game(e) => game_status(e),
        ValueError::Complex(e) => complex_status(e),
        _ => ScgtStatus::Infeasible,
    }
}

fn guard(body: impl FnOnce() -> ScgtStatus) -> ScgtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(ScgtStatus::Internal, "panic caught at the FFI boundary"),
    }
}

/// # Safety
/// `members` must point to `len` readable u32 values (or be null with
/// `len == 0`).
unsafe fn face_from_raw(members: *const u32, len: usize, n: usize) -> Result<Face, String> {
    if len == 0 {
        return Ok(Face::EMPTY);
    }
    if members.is_null() {
        return Err("face member pointer is null".to_string());
    }
    let ids = std::slice::from_raw_parts(members, len);
    let mut face = Face::EMPTY;
    for &id in ids {
        if id == 0 || id as usize > n {
            return Err(format!("vertex id {id} is outside 1..={n}"));
        }
        face = face.insert(Vertex::new(id));
    }
    Ok(face)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, String> {
    if ptr.is_null() {
        return Err("string pointer is null".to_string());
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| "string is not valid UTF-8".to_string())
}

/// Builds a complex from flattened facets: `member_counts[i]` vertices of
/// facet `i` are consumed from `members` in order. Dominated facets are
/// reduced away, as in the JSON loader.
///
/// # Safety
/// `members` must hold the sum of `member_counts` u32 values and
/// `member_counts` must hold `facet_count` usize values; `out` must be a
/// valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_from_facets(
    n: u32,
    members: *const u32,
    member_counts: *const usize,
    facet_count: usize,
    out: *mut *mut ScgtComplex,
) -> ScgtStatus {
    guard(|| {
        if out.is_null() || (facet_count > 0 && member_counts.is_null()) {
            return fail(ScgtStatus::NullPointer, "null output or facet pointer");
        }
        let counts = if facet_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(member_counts, facet_count)
        };
        if members.is_null() && counts.iter().any(|&c| c > 0) {
            return fail(ScgtStatus::NullPointer, "null facet member pointer");
        }
        let mut faces = Vec::with_capacity(facet_count);
        let mut offset = 0usize;
        for &count in counts {
            let ptr = if count == 0 {
                std::ptr::null()
            } else {
                members.add(offset)
            };
            match face_from_raw(ptr, count, n as usize) {
                Ok(face) => faces.push(face),
                Err(msg) => return fail(ScgtStatus::InvalidInput, msg),
            }
            offset += count;
        }
        match SimplicialComplex::from_facets(n as usize, faces) {
            Ok(complex) => {
                *out = Box::into_raw(Box::new(ScgtComplex {
                    inner: Arc::new(complex),
                }));
                ScgtStatus::Ok
            }
            Err(err) => fail(complex_status(&err), err.to_string()),
        }
    })
}

/// Parses the JSON complex format (`{"n", "labels"?, "facets"}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_from_json(
    json: *const c_char,
    out: *mut *mut ScgtComplex,
) -> ScgtStatus {
    guard(|| {
        if out.is_null() {
            return fail(ScgtStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(msg) => return fail(ScgtStatus::NullPointer, msg),
        };
        match io::complex_from_json_str(text) {
            Ok(complex) => {
                *out = Box::into_raw(Box::new(ScgtComplex {
                    inner: Arc::new(complex),
                }));
                ScgtStatus::Ok
            }
            Err(err) => fail(ScgtStatus::InvalidInput, err.to_string()),
        }
    })
}

/// # Safety
/// `complex` must come from a constructor of this library and not have
/// been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_free(complex: *mut ScgtComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Ground-set size; 0 when the handle is null.
///
/// # Safety
/// `complex` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_n(complex: *const ScgtComplex) -> u32 {
    complex.as_ref().map_or(0, |c| c.inner.n() as u32)
}

/// # Safety
/// `complex` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_facet_count(complex: *const ScgtComplex) -> usize {
    complex.as_ref().map_or(0, |c| c.inner.facets().len())
}

/// # Safety
/// `complex` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_rank(complex: *const ScgtComplex) -> usize {
    complex.as_ref().map_or(0, |c| c.inner.rank())
}

/// # Safety
/// `complex` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_face_count(complex: *const ScgtComplex) -> u64 {
    complex.as_ref().map_or(0, |c| c.inner.face_count() as u64)
}

/// # Safety
/// `complex` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_is_pure(complex: *const ScgtComplex) -> bool {
    complex.as_ref().is_some_and(|c| c.inner.is_pure())
}

/// # Safety
/// `complex` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_is_matroid(complex: *const ScgtComplex) -> bool {
    complex.as_ref().is_some_and(|c| c.inner.is_matroid())
}

/// Membership of a coalition given as an array of 1-based vertex ids.
///
/// # Safety
/// Pointer arguments must satisfy the usual slice contracts.
#[no_mangle]
pub unsafe extern "C" fn scgt_complex_contains(
    complex: *const ScgtComplex,
    members: *const u32,
    len: usize,
    out: *mut bool,
) -> ScgtStatus {
    guard(|| {
        let Some(handle) = complex.as_ref() else {
            return fail(ScgtStatus::NullPointer, "null complex handle");
        };
        if out.is_null() {
            return fail(ScgtStatus::NullPointer, "null output pointer");
        }
        match face_from_raw(members, len, handle.inner.n()) {
            Ok(face) => {
                *out = handle.inner.contains(face);
                ScgtStatus::Ok
            }
            Err(msg) => fail(ScgtStatus::InvalidInput, msg),
        }
    })
}

/// Creates the zero game on a complex.
///
/// # Safety
/// `complex` must be a live handle; `out` a valid destination.
#[no_mangle]
pub unsafe extern "C" fn scgt_game_new(
    complex: *const ScgtComplex,
    out: *mut *mut ScgtGame,
) -> ScgtStatus {
    guard(|| {
        let Some(handle) = complex.as_ref() else {
            return fail(ScgtStatus::NullPointer, "null complex handle");
        };
        if out.is_null() {
            return fail(ScgtStatus::NullPointer, "null output pointer");
        }
        *out = Box::into_raw(Box::new(ScgtGame {
            complex: Arc::clone(&handle.inner),
            worth: WorthFunction::zero(Arc::clone(&handle.inner)),
        }));
        ScgtStatus::Ok
    })
}

/// Assigns a worth to one coalition, replacing any previous assignment.
/// The coalition must be feasible; the empty coalition only accepts zero.
///
/// # Safety
/// `game` must be a live handle; `members` a readable array of `len` ids.
#[no_mangle]
pub unsafe extern "C" fn scgt_game_set_worth(
    game: *mut ScgtGame,
    members: *const u32,
    len: usize,
    value: f64,
) -> ScgtStatus {
    guard(|| {
        let Some(handle) = game.as_mut() else {
            return fail(ScgtStatus::NullPointer, "null game handle");
        };
        let face = match face_from_raw(members, len, handle.complex.n()) {
            Ok(face) => face,
            Err(msg) => return fail(ScgtStatus::InvalidInput, msg),
        };
        let mut assignments: BTreeMap<Face, f64> =
            handle.worth.entries().map(|(f, v)| (*f, *v)).collect();
        assignments.insert(face, value);
        match WorthFunction::new(Arc::clone(&handle.complex), assignments) {
            Ok(worth) => {
                handle.worth = worth;
                ScgtStatus::Ok
            }
            Err(err) => fail(game_status(&err), err.to_string()),
        }
    })
}

/// Worth of a coalition; infeasible queries report `Infeasible`.
///
/// # Safety
/// Pointer arguments must satisfy the usual slice contracts.
#[no_mangle]
pub unsafe extern "C" fn scgt_game_worth(
    game: *const ScgtGame,
    members: *const u32,
    len: usize,
    out: *mut f64,
) -> ScgtStatus {
    guard(|| {
        let Some(handle) = game.as_ref() else {
            return fail(ScgtStatus::NullPointer, "null game handle");
        };
        if out.is_null() {
            return fail(ScgtStatus::NullPointer, "null output pointer");
        }
        let face = match face_from_raw(members, len, handle.complex.n()) {
            Ok(face) => face,
            Err(msg) => return fail(ScgtStatus::InvalidInput, msg),
        };
        if !handle.complex.contains(face) {
            return fail(
                ScgtStatus::Infeasible,
                format!("coalition {face} is not feasible"),
            );
        }
        *out = handle.worth.value(face);
        ScgtStatus::Ok
    })
}

/// # Safety
/// `game` must come from [`scgt_game_new`] and not have been freed; null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn scgt_game_free(game: *mut ScgtGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

unsafe fn distribution_from_raw(
    complex: &SimplicialComplex,
    weights: *const f64,
) -> Result<FacetDistribution<f64>, (ScgtStatus, String)> {
    if weights.is_null() {
        return Ok(FacetDistribution::uniform(complex));
    }
    let slice = std::slice::from_raw_parts(weights, complex.facets().len());
    FacetDistribution::from_weight_slice(complex, slice)
        .map_err(|err| (value_status(&err), err.to_string()))
}

/// The facet-distribution-weighted Shapley group value. `weights` holds
/// one probability per facet in canonical facet order, or null for the
/// uniform distribution; `out_values` receives one value per vertex.
///
/// # Safety
/// `out_values` must hold `scgt_complex_n` doubles; other pointers follow
/// the usual contracts.
#[no_mangle]
pub unsafe extern "C" fn scgt_shapley_reduce(
    complex: *const ScgtComplex,
    game: *const ScgtGame,
    weights: *const f64,
    out_values: *mut f64,
) -> ScgtStatus {
    guard(|| {
        let (Some(c), Some(g)) = (complex.as_ref(), game.as_ref()) else {
            return fail(ScgtStatus::NullPointer, "null complex or game handle");
        };
        if out_values.is_null() {
            return fail(ScgtStatus::NullPointer, "null output pointer");
        }
        if g.complex.as_ref() != c.inner.as_ref() {
            return fail(ScgtStatus::Infeasible, "game lives on a different complex");
        }
        let dist = match distribution_from_raw(&c.inner, weights) {
            Ok(d) => d,
            Err((status, msg)) => return fail(status, msg),
        };
        match values::reducible_group_value(&c.inner, &dist, &g.worth, None) {
            Ok(values) => {
                let out = std::slice::from_raw_parts_mut(out_values, c.inner.n());
                out.clone_from_slice(&values);
                ScgtStatus::Ok
            }
            Err(err) => fail(value_status(&err), err.to_string()),
        }
    })
}

/// Participation influences `w^P({i})` per vertex, for a facet
/// distribution given as in [`scgt_shapley_reduce`].
///
/// # Safety
/// `out_values` must hold `scgt_complex_n` doubles.
#[no_mangle]
pub unsafe extern "C" fn scgt_influence_vector(
    complex: *const ScgtComplex,
    weights: *const f64,
    out_values: *mut f64,
) -> ScgtStatus {
    guard(|| {
        let Some(c) = complex.as_ref() else {
            return fail(ScgtStatus::NullPointer, "null complex handle");
        };
        if out_values.is_null() {
            return fail(ScgtStatus::NullPointer, "null output pointer");
        }
        let dist = match distribution_from_raw(&c.inner, weights) {
            Ok(d) => d,
            Err((status, msg)) => return fail(status, msg),
        };
        match polytope::influence_vector(&c.inner, &dist) {
            Ok(vector) => {
                let out = std::slice::from_raw_parts_mut(out_values, c.inner.n());
                out.clone_from_slice(vector.coords());
                ScgtStatus::Ok
            }
            Err(err) => fail(ScgtStatus::Infeasible, err.to_string()),
        }
    })
}

/// Facet-polytope membership of a point of length `scgt_complex_n`.
/// On membership, a witness distribution is written to `out_weights`
/// (one weight per facet, canonical order) unless it is null.
///
/// # Safety
/// `point` must hold `scgt_complex_n` doubles; `out_weights`, when not
/// null, must hold `scgt_complex_facet_count` doubles.
#[no_mangle]
pub unsafe extern "C" fn scgt_polytope_member(
    complex: *const ScgtComplex,
    point: *const f64,
    tolerance: f64,
    out_weights: *mut f64,
    out_member: *mut bool,
) -> ScgtStatus {
    guard(|| {
        let Some(c) = complex.as_ref() else {
            return fail(ScgtStatus::NullPointer, "null complex handle");
        };
        if point.is_null() || out_member.is_null() {
            return fail(ScgtStatus::NullPointer, "null point or output pointer");
        }
        let coords = std::slice::from_raw_parts(point, c.inner.n());
        match polytope::polytope_membership(&c.inner, coords, &tolerance) {
            Ok(Some(dist)) => {
                *out_member = true;
                if !out_weights.is_null() {
                    let out =
                        std::slice::from_raw_parts_mut(out_weights, c.inner.facets().len());
                    for (slot, facet) in out.iter_mut().zip(c.inner.facets()) {
                        *slot = dist.weight(facet);
                    }
                }
                ScgtStatus::Ok
            }
            Ok(None) => {
                *out_member = false;
                ScgtStatus::Ok
            }
            Err(err) => fail(ScgtStatus::InvalidInput, err.to_string()),
        }
    })
}

/// Evaluates a quasi-probabilistic value given as flattened link
/// coefficients: `face_members`/`face_counts` encode `count` faces the
/// same way as [`scgt_complex_from_facets`], with `coefficients[i]` the
/// weight of face `i`.
///
/// # Safety
/// Pointer arguments must satisfy the usual slice contracts; `out_value`
/// must be a valid destination.
#[no_mangle]
pub unsafe extern "C" fn scgt_quasi_eval(
    complex: *const ScgtComplex,
    game: *const ScgtGame,
    player: u32,
    face_members: *const u32,
    face_counts: *const usize,
    coefficients: *const f64,
    count: usize,
    out_value: *mut f64,
) -> ScgtStatus {
    guard(|| {
        let (Some(c), Some(g)) = (complex.as_ref(), game.as_ref()) else {
            return fail(ScgtStatus::NullPointer, "null complex or game handle");
        };
        if out_value.is_null() || (count > 0 && (face_counts.is_null() || coefficients.is_null()))
        {
            return fail(ScgtStatus::NullPointer, "null output or coefficient pointer");
        }
        if g.complex.as_ref() != c.inner.as_ref() {
            return fail(ScgtStatus::Infeasible, "game lives on a different complex");
        }
        if player == 0 || player as usize > c.inner.n() {
            return fail(
                ScgtStatus::InvalidInput,
                format!("player {player} is outside 1..={}", c.inner.n()),
            );
        }
        let counts = if count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(face_counts, count)
        };
        let weights = if count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(coefficients, count)
        };
        if face_members.is_null() && counts.iter().any(|&c| c > 0) {
            return fail(ScgtStatus::NullPointer, "null face member pointer");
        }
        let mut map: BTreeMap<Face, f64> = BTreeMap::new();
        let mut offset = 0usize;
        for (i, &len) in counts.iter().enumerate() {
            let ptr = if len == 0 {
                std::ptr::null()
            } else {
                face_members.add(offset)
            };
            match face_from_raw(ptr, len, c.inner.n()) {
                Ok(face) => {
                    map.insert(face, weights[i]);
                }
                Err(msg) => return fail(ScgtStatus::InvalidInput, msg),
            }
            offset += len;
        }
        match QuasiValue::new(Arc::clone(&c.inner), Vertex::new(player), map) {
            Ok(quasi) => match quasi.eval(&g.worth) {
                Ok(value) => {
                    *out_value = value;
                    ScgtStatus::Ok
                }
                Err(err) => fail(value_status(&err), err.to_string()),
            },
            Err(err) => fail(value_status(&err), err.to_string()),
        }
    })
}
