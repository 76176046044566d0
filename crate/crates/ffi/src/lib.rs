//! C interface to `sptough`.
//!
//! Trees and graphs are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`SptStatus`]; on failure a
//! description is available from [`spt_last_error`] on the same thread.
//! Strings handed out by the library are released with
//! [`spt_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sptough::structure::classify_with;
use sptough::{
    parse, read_edge_list, serialize, to_dot, DotAnnotations, Error, Multigraph, Oracle, SpTree,
    Toughness, Verdict,
};

/// Opaque sp-tree.
pub struct SptTree(SpTree);

/// Opaque multigraph.
pub struct SptGraph(Multigraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SptStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    InvalidInput = 4,
    Capacity = 5,
    NotSeriesParallel = 6,
    Disconnected = 7,
    Domain = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SptToughnessKind {
    Zero = 0,
    Finite = 1,
    Infinite = 2,
}

/// Toughness as `numer / denom` when finite; `0/1` otherwise.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SptToughness {
    pub kind: SptToughnessKind,
    pub numer: u64,
    pub denom: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SptVerdict {
    MinimallyTough = 0,
    NotMinimallyTough = 1,
    OutOfScope = 2,
    NotApplicable = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(SptStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::JoinArity { .. } => SptStatus::Syntax,
            Error::Arity { .. } | Error::EdgeList { .. } | Error::UnknownVertex(_) => {
                SptStatus::InvalidInput
            }
            Error::Capacity { .. } | Error::Budget { .. } => SptStatus::Capacity,
            Error::Disconnected => SptStatus::Disconnected,
            Error::NotSeriesParallel => SptStatus::NotSeriesParallel,
            Error::Domain(_) => SptStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SptStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SptStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SptStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SptStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SptStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(SptStatus::Domain, "NUL in output".into()))?;
    put(out, c.into_raw())
}

fn oracle(vertex_cap: usize) -> Oracle {
    if vertex_cap == 0 {
        Oracle::default()
    } else {
        Oracle::with_cap(vertex_cap)
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn spt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn spt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an SP expression such as `P(S(e,e),e)`.
#[no_mangle]
pub unsafe extern "C" fn spt_tree_parse(expr: *const c_char, out: *mut *mut SptTree) -> SptStatus {
    guard(|| {
        let tree = parse(text(expr, "expression")?)?;
        put(out, Box::into_raw(Box::new(SptTree(tree))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn spt_tree_free(tree: *mut SptTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

#[no_mangle]
pub unsafe extern "C" fn spt_tree_serialize(
    tree: *const SptTree,
    out: *mut *mut c_char,
) -> SptStatus {
    guard(|| put_string(out, serialize(&get(tree, "tree")?.0)))
}

/// Canonical code, equal for two trees exactly when their graphs are
/// isomorphic with terminals matched up to swapping.
#[no_mangle]
pub unsafe extern "C" fn spt_tree_encode(tree: *const SptTree, out: *mut *mut c_char) -> SptStatus {
    guard(|| put_string(out, get(tree, "tree")?.0.encode()))
}

#[no_mangle]
pub unsafe extern "C" fn spt_tree_canonicalize(
    tree: *const SptTree,
    out: *mut *mut SptTree,
) -> SptStatus {
    guard(|| {
        let c = get(tree, "tree")?.0.canonicalize()?;
        put(out, Box::into_raw(Box::new(SptTree(c))))
    })
}

/// Builds the graph of a tree. Its source is vertex 0 and its sink vertex 1.
#[no_mangle]
pub unsafe extern "C" fn spt_tree_realize(
    tree: *const SptTree,
    out: *mut *mut SptGraph,
) -> SptStatus {
    guard(|| {
        let lg = get(tree, "tree")?.0.realize()?;
        put(out, Box::into_raw(Box::new(SptGraph(lg.graph))))
    })
}

#[no_mangle]
pub extern "C" fn spt_graph_new() -> *mut SptGraph {
    Box::into_raw(Box::new(SptGraph(Multigraph::new())))
}

/// Reads `u v` lines; `#` starts a comment.
#[no_mangle]
pub unsafe extern "C" fn spt_graph_from_edge_list(
    edges: *const c_char,
    out: *mut *mut SptGraph,
) -> SptStatus {
    guard(|| {
        let g = read_edge_list(text(edges, "edge list")?)?;
        put(out, Box::into_raw(Box::new(SptGraph(g))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn spt_graph_add_edge(graph: *mut SptGraph, u: u32, v: u32) -> SptStatus {
    guard(|| {
        let g = graph.as_mut().ok_or_else(|| null("graph"))?;
        g.0.add_edge(u, v);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spt_graph_free(graph: *mut SptGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn spt_graph_vertex_count(graph: *const SptGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn spt_graph_edge_count(graph: *const SptGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

fn to_c(t: Toughness) -> SptToughness {
    match t {
        Toughness::Zero => SptToughness {
            kind: SptToughnessKind::Zero,
            numer: 0,
            denom: 1,
        },
        Toughness::Finite(r) => SptToughness {
            kind: SptToughnessKind::Finite,
            numer: r.numer(),
            denom: r.denom(),
        },
        Toughness::Infinite => SptToughness {
            kind: SptToughnessKind::Infinite,
            numer: 0,
            denom: 1,
        },
    }
}

/// Exact toughness. `vertex_cap` 0 selects the default cap.
#[no_mangle]
pub unsafe extern "C" fn spt_toughness(
    graph: *const SptGraph,
    vertex_cap: usize,
    out: *mut SptToughness,
) -> SptStatus {
    guard(|| {
        let tau = oracle(vertex_cap).toughness(&get(graph, "graph")?.0)?;
        put(out, to_c(tau.value))
    })
}

/// Copies the witness tough set into `buf`. `len` receives its size even
/// when `cap` is too small. A complete graph has no witness and reports
/// `Domain`.
#[no_mangle]
pub unsafe extern "C" fn spt_tough_set(
    graph: *const SptGraph,
    vertex_cap: usize,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> SptStatus {
    guard(|| {
        let tau = oracle(vertex_cap).toughness(&get(graph, "graph")?.0)?;
        let set = tau
            .witness
            .ok_or_else(|| Failure(SptStatus::Domain, "a complete graph has no cutset".into()))?;
        put(len, set.len())?;
        if set.len() > cap {
            return Err(Failure(
                SptStatus::BufferTooSmall,
                format!("tough set has {} vertices, buffer holds {cap}", set.len()),
            ));
        }
        if !set.is_empty() {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            ptr::copy_nonoverlapping(set.as_ptr(), buf, set.len());
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spt_is_minimally_tough(
    graph: *const SptGraph,
    vertex_cap: usize,
    out: *mut bool,
) -> SptStatus {
    guard(|| {
        let m = oracle(vertex_cap).is_minimally_tough(&get(graph, "graph")?.0)?;
        put(out, m.is_minimal)
    })
}

/// Structural classification. When `description` is not NULL it receives
/// a one-line report to be released with [`spt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn spt_classify(
    graph: *const SptGraph,
    vertex_cap: usize,
    verdict: *mut SptVerdict,
    description: *mut *mut c_char,
) -> SptStatus {
    guard(|| {
        let report = classify_with(&get(graph, "graph")?.0, &oracle(vertex_cap))?;
        let v = match report.verdict {
            Verdict::MinimallyTough => SptVerdict::MinimallyTough,
            Verdict::NotMinimallyTough => SptVerdict::NotMinimallyTough,
            Verdict::OutOfScope => SptVerdict::OutOfScope,
            Verdict::NotApplicable => SptVerdict::NotApplicable,
        };
        put(verdict, v)?;
        if !description.is_null() {
            put_string(description, report.to_string())?;
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spt_graph_to_dot(
    graph: *const SptGraph,
    out: *mut *mut c_char,
) -> SptStatus {
    guard(|| put_string(out, to_dot(&get(graph, "graph")?.0, &DotAnnotations::default())))
}
