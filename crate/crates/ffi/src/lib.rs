//! C ABI over `bary-core`.
//!
//! Every fallible function returns a [`BaryStatus`]; results come back
//! through out-pointers. Partitions cross the boundary as arrays of
//! `uint64_t` parts, lowest power first. Diagrams and partition lists are
//! opaque handles released with their `_free` function; strings returned
//! through `char **` are released with [`bary_string_free`].
//!
//! Functions that fill a caller buffer always store the required length in
//! `*out_len`; when `capacity` is too small nothing else is written and
//! `BARY_STATUS_BUFFER_TOO_SMALL` is returned.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bary_core::counting::CountCache;
use bary_core::lattice::{self, HasseDiagram};
use bary_core::{oracle, tree, Basis, Error, Partition};
use libc::c_char;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaryStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidBasis = 2,
    InvalidArgument = 3,
    InvalidPartition = 4,
    CapExceeded = 5,
    Overflow = 6,
    OutOfRange = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Values accepted by the `method` argument of [`bary_count`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaryCountMethod {
    Recurrence = 0,
    Sum = 1,
    Pi = 2,
    Oracle = 3,
}

/// Covering diagram of the lattice of partitions of n.
pub struct BaryHasse(HasseDiagram);

/// Partitions of n in enumeration-tree level order.
pub struct BaryPartitionList(Vec<Partition>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn fail(status: BaryStatus, message: impl Into<String>) -> BaryStatus {
    set_last_error(message.into());
    status
}

fn from_core(err: Error) -> BaryStatus {
    let status = match err {
        Error::InvalidBasis(_) => BaryStatus::InvalidBasis,
        Error::Overflow(_) => BaryStatus::Overflow,
        Error::CapExceeded { .. } => BaryStatus::CapExceeded,
        Error::Parse(_) | Error::ZeroArgument | Error::BasisMismatch(..) => BaryStatus::InvalidArgument,
        Error::PositionOutOfRange { .. } => BaryStatus::OutOfRange,
        _ => BaryStatus::InvalidPartition,
    };
    fail(status, err.to_string())
}

fn guard(body: impl FnOnce() -> Result<(), BaryStatus>) -> BaryStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BaryStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(BaryStatus::Panic, "internal panic"),
    }
}

fn basis(b: u64) -> Result<Basis, BaryStatus> {
    Basis::new(b).map_err(from_core)
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), BaryStatus> {
    if p.is_null() {
        Err(fail(BaryStatus::NullPointer, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

unsafe fn read_partition(parts: *const u64, len: usize, b: Basis, n: u64) -> Result<Partition, BaryStatus> {
    let slice = if len == 0 {
        &[][..]
    } else {
        non_null(parts, "parts")?;
        std::slice::from_raw_parts(parts, len)
    };
    let p = Partition::new(slice.to_vec(), b);
    let value = p.value().map_err(from_core)?;
    if value != n {
        return Err(from_core(Error::InconsistentValue { expected: n, found: value }));
    }
    Ok(p)
}

unsafe fn write_parts(src: &[u64], out: *mut u64, capacity: usize, out_len: *mut usize) -> Result<(), BaryStatus> {
    non_null(out_len, "out_len")?;
    *out_len = src.len();
    if capacity < src.len() {
        return Err(fail(
            BaryStatus::BufferTooSmall,
            format!("need room for {} parts, got {capacity}", src.len()),
        ));
    }
    if !src.is_empty() {
        non_null(out, "out")?;
        ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    }
    Ok(())
}

unsafe fn write_string(text: String, out: *mut *mut c_char) -> Result<(), BaryStatus> {
    non_null(out, "out")?;
    let c = CString::new(text).map_err(|_| fail(BaryStatus::InvalidArgument, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bary_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn bary_status_str(status: BaryStatus) -> *const c_char {
    let text: &'static CStr = match status {
        BaryStatus::Ok => c"ok",
        BaryStatus::NullPointer => c"null pointer",
        BaryStatus::InvalidBasis => c"basis must be at least 2",
        BaryStatus::InvalidArgument => c"invalid argument",
        BaryStatus::InvalidPartition => c"invalid partition",
        BaryStatus::CapExceeded => c"resource cap exceeded",
        BaryStatus::Overflow => c"arithmetic overflow",
        BaryStatus::OutOfRange => c"index out of range",
        BaryStatus::BufferTooSmall => c"buffer too small",
        BaryStatus::Panic => c"internal panic",
    };
    text.as_ptr()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bary_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of partitions of `n` in base `base`, as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bary_count(base: u64, n: u64, method: u32, out: *mut *mut c_char) -> BaryStatus {
    guard(|| {
        let b = basis(base)?;
        let text = match method {
            m if m == BaryCountMethod::Recurrence as u32 => CountCache::new(b).count(n).to_string(),
            m if m == BaryCountMethod::Sum as u32 => CountCache::new(b).count_sum_form(n).to_string(),
            m if m == BaryCountMethod::Pi as u32 => CountCache::new(b).count_via_pi(n).to_string(),
            m if m == BaryCountMethod::Oracle as u32 => oracle::brute_count(n, b).map_err(from_core)?.to_string(),
            m => return Err(fail(BaryStatus::InvalidArgument, format!("unknown count method {m}"))),
        };
        write_string(text, out)
    })
}

/// Number of partitions of `n` with exactly `parts` parts, the last one nonzero.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bary_count_exact_parts(base: u64, n: u64, parts: u32, out: *mut *mut c_char) -> BaryStatus {
    guard(|| {
        let b = basis(base)?;
        if parts == 0 {
            return Err(from_core(Error::ZeroArgument));
        }
        write_string(CountCache::new(b).count_exact_parts(n, parts).to_string(), out)
    })
}

/// Exponent of the largest power of `base` dividing `i` (`i > 0`).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bary_carry(i: u64, base: u64, out: *mut u32) -> BaryStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = tree::carry(i, basis(base)?).map_err(from_core)?;
        Ok(())
    })
}

/// Builds the covering diagram of partitions of `n`. `incremental` selects
/// the stage-by-stage construction; both give identical diagrams. `cap`
/// bounds the node count.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_build(
    base: u64,
    n: u64,
    incremental: bool,
    cap: usize,
    out: *mut *mut BaryHasse,
) -> BaryStatus {
    guard(|| {
        non_null(out, "out")?;
        let b = basis(base)?;
        let d = if incremental {
            lattice::build_hasse_incremental(n, b, cap)
        } else {
            lattice::build_hasse(n, b, cap)
        }
        .map_err(from_core)?;
        *out = Box::into_raw(Box::new(BaryHasse(d)));
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`bary_hasse_build`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_free(h: *mut BaryHasse) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Node count, or 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_node_count(h: *const BaryHasse) -> usize {
    h.as_ref().map_or(0, |h| h.0.node_count())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_edge_count(h: *const BaryHasse) -> usize {
    h.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Copies the parts of node `index` into `out`.
///
/// # Safety
/// `h` must be a live handle, `out` must hold `capacity` values, `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_node(
    h: *const BaryHasse,
    index: usize,
    out: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> BaryStatus {
    guard(|| {
        non_null(h, "handle")?;
        let node = (*h).0.nodes().get(index).ok_or_else(|| out_of_range(index, (*h).0.node_count()))?;
        write_parts(node.parts(), out, capacity, out_len)
    })
}

/// Reads edge `index`: `source` covers `target`, reached by firing `position`.
///
/// # Safety
/// `h` must be a live handle and the out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_edge(
    h: *const BaryHasse,
    index: usize,
    source: *mut usize,
    target: *mut usize,
    position: *mut usize,
) -> BaryStatus {
    guard(|| {
        non_null(h, "handle")?;
        non_null(source, "source")?;
        non_null(target, "target")?;
        non_null(position, "position")?;
        let e = (*h).0.edges().get(index).ok_or_else(|| out_of_range(index, (*h).0.edge_count()))?;
        *source = e.source;
        *target = e.target;
        *position = e.position;
        Ok(())
    })
}

/// Node index of a partition, or `BARY_STATUS_OUT_OF_RANGE` if absent.
///
/// # Safety
/// `h` must be a live handle, `parts` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_index_of(
    h: *const BaryHasse,
    parts: *const u64,
    len: usize,
    out: *mut usize,
) -> BaryStatus {
    guard(|| {
        non_null(h, "handle")?;
        non_null(out, "out")?;
        let d = &(*h).0;
        let p = read_partition(parts, len, d.basis(), d.n())?;
        *out = d.index_of(&p).ok_or_else(|| fail(BaryStatus::OutOfRange, format!("{p} is not a node")))?;
        Ok(())
    })
}

/// JSON document `{"basis","n","nodes","edges"}`.
///
/// # Safety
/// `h` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_to_json(h: *const BaryHasse, out: *mut *mut c_char) -> BaryStatus {
    guard(|| {
        non_null(h, "handle")?;
        write_string((*h).0.to_json(), out)
    })
}

/// Graphviz DOT rendering.
///
/// # Safety
/// `h` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bary_hasse_to_dot(h: *const BaryHasse, out: *mut *mut c_char) -> BaryStatus {
    guard(|| {
        non_null(h, "handle")?;
        write_string((*h).0.to_dot(), out)
    })
}

/// Enumerates the partitions of `n`, stopping with `BARY_STATUS_CAP_EXCEEDED`
/// past `cap` of them.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bary_enumerate(base: u64, n: u64, cap: usize, out: *mut *mut BaryPartitionList) -> BaryStatus {
    guard(|| {
        non_null(out, "out")?;
        let list = tree::enumerate(n, basis(base)?, cap).map_err(from_core)?;
        *out = Box::into_raw(Box::new(BaryPartitionList(list)));
        Ok(())
    })
}

/// # Safety
/// `list` must come from [`bary_enumerate`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bary_list_free(list: *mut BaryPartitionList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Number of partitions, or 0 for NULL.
///
/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bary_list_len(list: *const BaryPartitionList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Copies the parts of entry `index` into `out`.
///
/// # Safety
/// `list` must be a live handle, `out` must hold `capacity` values, `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bary_list_get(
    list: *const BaryPartitionList,
    index: usize,
    out: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> BaryStatus {
    guard(|| {
        non_null(list, "list")?;
        let items = &(*list).0;
        let p = items.get(index).ok_or_else(|| out_of_range(index, items.len()))?;
        write_parts(p.parts(), out, capacity, out_len)
    })
}

fn out_of_range(index: usize, len: usize) -> BaryStatus {
    fail(BaryStatus::OutOfRange, format!("index {index} out of range for length {len}"))
}

/// Whether P lies below Q, i.e. P is reachable from Q by firings.
///
/// # Safety
/// `p`/`q` must hold `p_len`/`q_len` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bary_leq(
    base: u64,
    n: u64,
    p: *const u64,
    p_len: usize,
    q: *const u64,
    q_len: usize,
    out: *mut bool,
) -> BaryStatus {
    guard(|| {
        non_null(out, "out")?;
        let b = basis(base)?;
        let (p, q) = (read_partition(p, p_len, b, n)?, read_partition(q, q_len, b, n)?);
        *out = lattice::leq(&p, &q, n).map_err(from_core)?;
        Ok(())
    })
}

unsafe fn pair_op(
    op: fn(&Partition, &Partition, u64) -> bary_core::Result<Partition>,
    base: u64,
    n: u64,
    (p, p_len): (*const u64, usize),
    (q, q_len): (*const u64, usize),
    (out, capacity, out_len): (*mut u64, usize, *mut usize),
) -> BaryStatus {
    guard(|| {
        let b = basis(base)?;
        let (p, q) = (read_partition(p, p_len, b, n)?, read_partition(q, q_len, b, n)?);
        let r = op(&p, &q, n).map_err(from_core)?;
        write_parts(r.parts(), out, capacity, out_len)
    })
}

/// Least upper bound of P and Q, written into `out`.
///
/// # Safety
/// `p`/`q` must hold `p_len`/`q_len` values, `out` must hold `capacity`
/// values and `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bary_join(
    base: u64,
    n: u64,
    p: *const u64,
    p_len: usize,
    q: *const u64,
    q_len: usize,
    out: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> BaryStatus {
    pair_op(lattice::join, base, n, (p, p_len), (q, q_len), (out, capacity, out_len))
}

/// Greatest lower bound of P and Q, written into `out`.
///
/// # Safety
/// Same as [`bary_join`].
#[no_mangle]
pub unsafe extern "C" fn bary_meet(
    base: u64,
    n: u64,
    p: *const u64,
    p_len: usize,
    q: *const u64,
    q_len: usize,
    out: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> BaryStatus {
    pair_op(lattice::meet, base, n, (p, p_len), (q, q_len), (out, capacity, out_len))
}

/// Shot vector of P: how often each position fires on the way from `(n)`.
///
/// # Safety
/// `p` must hold `p_len` values, `out` must hold `capacity` values and
/// `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bary_shots(
    base: u64,
    n: u64,
    p: *const u64,
    p_len: usize,
    out: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> BaryStatus {
    guard(|| {
        let p = read_partition(p, p_len, basis(base)?, n)?;
        let s = p.shot_vector(n).map_err(from_core)?;
        write_parts(s.shots(), out, capacity, out_len)
    })
}
