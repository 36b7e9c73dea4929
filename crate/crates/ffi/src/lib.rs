//! C ABI over the `messiaen` library.
//!
//! Conventions:
//! - every fallible function returns an [`MsnStatus`] and writes its result
//!   through an out pointer only on success;
//! - objects are opaque handles created by `msn_*_parse` / constructors and
//!   released with the matching `msn_*_free`;
//! - strings returned through `char **` are owned by the caller and released
//!   with [`msn_string_free`];
//! - [`msn_last_error`] describes the most recent failure on the calling
//!   thread.
//!
//! Pitch-class sets cross the boundary as their 12-bit characteristic value.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use messiaen::catalog::{self, CatalogError, SeedData, TalaEntry};
use messiaen::perm::{self, FanDirection, PermError};
use messiaen::rational;
use messiaen::rhythm::{self, RhythmError, Voice};
use messiaen::z12::{self, PcSet, Z12Error};
use messiaen::{Perm, Rhythm};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsnStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed text input.
    Parse = 3,
    /// Well-formed input outside an operation's domain.
    Domain = 4,
    /// An orbit did not close within the iteration cap.
    CapExceeded = 5,
    /// A result does not fit the requested integer type.
    Overflow = 6,
    /// A caller-provided buffer is too small.
    BufferTooSmall = 7,
    IndexOutOfRange = 8,
    /// Internal failure; the library state is unchanged.
    Panic = 9,
}

pub struct MsnRhythm(Rhythm);
pub struct MsnPerm(Perm);
pub struct MsnOrbit(Vec<Rhythm>);
pub struct MsnCatalog(Vec<TalaEntry>);
pub struct MsnCanon(rhythm::Canon);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure {
    status: MsnStatus,
    message: String,
}

impl Failure {
    fn new(status: MsnStatus, message: impl Into<String>) -> Failure {
        Failure { status, message: message.into() }
    }
}

macro_rules! parse_or_domain {
    ($($ty:ty),*) => {$(
        impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                let status = if e.is_parse() { MsnStatus::Parse } else { MsnStatus::Domain };
                Failure::new(status, e.to_string())
            }
        }
    )*};
}

parse_or_domain!(RhythmError, Z12Error, CatalogError);

impl From<PermError> for Failure {
    fn from(e: PermError) -> Self {
        let status = match e {
            PermError::CapExceeded(_) => MsnStatus::CapExceeded,
            ref e if e.is_parse() => MsnStatus::Parse,
            _ => MsnStatus::Domain,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<rational::ParseRationalError> for Failure {
    fn from(e: rational::ParseRationalError) -> Self {
        Failure::new(MsnStatus::Parse, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> MsnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            MsnStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(_) => {
            set_last_error("internal panic");
            MsnStatus::Panic
        }
    }
}

unsafe fn text<'a>(ptr: *const c_char) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure::new(MsnStatus::NullArgument, "null string argument"));
    }
    // SAFETY: caller passes a NUL-terminated string valid for this call.
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure::new(MsnStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn handle<'a, T>(ptr: *const T) -> Result<&'a T, Failure> {
    // SAFETY: non-null handles come from this library and are still live.
    ptr.as_ref()
        .ok_or_else(|| Failure::new(MsnStatus::NullArgument, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(MsnStatus::NullArgument, "null out pointer"));
    }
    // SAFETY: caller provides a writable location for one T.
    out.write(value);
    Ok(())
}

unsafe fn write_boxed<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(MsnStatus::NullArgument, "null out pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), Failure> {
    let c = CString::new(value).map_err(|_| Failure::new(MsnStatus::Domain, "interior NUL"))?;
    write_out(out, c.into_raw())
}

unsafe fn free_boxed<T>(ptr: *mut T) {
    if !ptr.is_null() {
        // SAFETY: `ptr` came from `Box::into_raw` in this library.
        drop(Box::from_raw(ptr));
    }
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn msn_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn msn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// Rhythms

/// Parses the rhythm text format, e.g. `"2 3/2 2 @unit=double croche"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_parse(text_in: *const c_char, out: *mut *mut MsnRhythm) -> MsnStatus {
    guard(|| {
        let r = Rhythm::from_str(text(text_in)?)?;
        write_boxed(out, MsnRhythm(r))
    })
}

/// # Safety
/// `r` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_free(r: *mut MsnRhythm) {
    free_boxed(r)
}

/// Number of durations, 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_len(r: *const MsnRhythm) -> usize {
    r.as_ref().map_or(0, |r| r.0.len())
}

/// Text form including the unit; parses back with [`msn_rhythm_parse`].
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_to_string(r: *const MsnRhythm, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, handle(r)?.0.to_string()))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_retrograde(r: *const MsnRhythm, out: *mut *mut MsnRhythm) -> MsnStatus {
    guard(|| write_boxed(out, MsnRhythm(handle(r)?.0.retrograde())))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_is_non_retrogradable(r: *const MsnRhythm, out: *mut bool) -> MsnStatus {
    guard(|| write_out(out, handle(r)?.0.is_non_retrogradable()))
}

/// Multiplies every duration by `ratio` (`"n"` or `"n/d"`).
///
/// # Safety
/// `r` must be a live handle, `ratio` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_augment(
    r: *const MsnRhythm,
    ratio: *const c_char,
    out: *mut *mut MsnRhythm,
) -> MsnStatus {
    guard(|| {
        let ratio = rational::parse_nonnegative(text(ratio)?)?;
        write_boxed(out, MsnRhythm(handle(r)?.0.augment(&ratio)?))
    })
}

/// `wing ++ core ++ retrograde(wing)`.
///
/// # Safety
/// `core` and `wing` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_amplify(
    core: *const MsnRhythm,
    wing: *const MsnRhythm,
    out: *mut *mut MsnRhythm,
) -> MsnStatus {
    guard(|| {
        let result = handle(core)?.0.symmetric_amplification(&handle(wing)?.0)?;
        write_boxed(out, MsnRhythm(result))
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_eliminate(r: *const MsnRhythm, k: usize, out: *mut *mut MsnRhythm) -> MsnStatus {
    guard(|| write_boxed(out, MsnRhythm(handle(r)?.0.eliminate_extremes(k)?)))
}

/// # Safety
/// `r` must be a live handle, `ratio` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_scale_central(
    r: *const MsnRhythm,
    ratio: *const c_char,
    out: *mut *mut MsnRhythm,
) -> MsnStatus {
    guard(|| {
        let ratio = rational::parse_nonnegative(text(ratio)?)?;
        write_boxed(out, MsnRhythm(handle(r)?.0.scale_central(&ratio)?))
    })
}

/// Exact total as `"n"` or `"n/d"`.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_total(r: *const MsnRhythm, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, rational::format(&handle(r)?.0.total_duration())))
}

/// `MSN_STATUS_DOMAIN` when the total is not a whole number of units.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_is_prime_total(r: *const MsnRhythm, out: *mut bool) -> MsnStatus {
    guard(|| write_out(out, handle(r)?.0.is_prime_total()?))
}

/// Full analysis report as JSON (the CLI's machine format).
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_rhythm_analyze_json(r: *const MsnRhythm, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, catalog::analyze_rhythm(0, &handle(r)?.0).to_json()))
}

/// Builds a canon. `voices` holds whitespace-separated `delay:ratio` pairs,
/// e.g. `"0:1 1:3/2"`.
///
/// # Safety
/// `subject` must be a live handle, `voices` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn msn_canon_build(
    subject: *const MsnRhythm,
    voices: *const c_char,
    out: *mut *mut MsnCanon,
) -> MsnStatus {
    guard(|| {
        let voices = text(voices)?
            .split_whitespace()
            .map(Voice::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        let canon = rhythm::build_canon(&handle(subject)?.0, &voices)?;
        write_boxed(out, MsnCanon(canon))
    })
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_canon_free(c: *mut MsnCanon) {
    free_boxed(c)
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_canon_voice_count(c: *const MsnCanon) -> usize {
    c.as_ref().map_or(0, |c| c.0.onsets.len())
}

/// Onsets of one voice (0-based index) as space-separated rationals.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_canon_onsets(c: *const MsnCanon, voice: usize, out: *mut *mut c_char) -> MsnStatus {
    guard(|| {
        let onsets = handle(c)?
            .0
            .onsets
            .get(voice)
            .ok_or_else(|| Failure::new(MsnStatus::IndexOutOfRange, format!("no voice {voice}")))?;
        let joined = onsets.iter().map(rational::format).collect::<Vec<_>>().join(" ");
        write_string(out, joined)
    })
}

/// Time at which the last voice ends.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_canon_end(c: *const MsnCanon, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, rational::format(&handle(c)?.0.end)))
}

// Pitch-class sets

/// Parses integers 0..11 or note names into a 12-bit set.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_pcset_parse(text_in: *const c_char, out: *mut u16) -> MsnStatus {
    guard(|| write_out(out, PcSet::from_str(text(text_in)?)?.bits()))
}

fn pcset(bits: u16) -> Result<PcSet, Failure> {
    PcSet::from_bits(bits)
        .ok_or_else(|| Failure::new(MsnStatus::Domain, format!("bits {bits:#x} outside 12-bit range")))
}

/// Transposes by `t` semitones. Bits above 11 are ignored.
#[no_mangle]
pub extern "C" fn msn_pcset_transpose(bits: u16, t: i64) -> u16 {
    PcSet::from_bits(bits & 0x0fff).unwrap_or_default().transpose(t).bits()
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_pcset_minimal_period(bits: u16, out: *mut u8) -> MsnStatus {
    guard(|| write_out(out, pcset(bits)?.minimal_period()?))
}

/// Writes the mode number (1..7, or 0 when none matches) and the 0-based
/// transposition offset.
///
/// # Safety
/// `mode` and `offset` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_pcset_classify(bits: u16, mode: *mut u8, offset: *mut u8) -> MsnStatus {
    guard(|| {
        let found = pcset(bits)?.classify_mode()?;
        write_out(mode, found.map_or(0, |m| m.mode_number))?;
        write_out(offset, found.map_or(0, |m| m.transposition_offset))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_pcset_is_truncated(bits: u16, out: *mut bool) -> MsnStatus {
    guard(|| write_out(out, pcset(bits)?.is_truncated_mode()?))
}

/// Fills `buf` with every limited-transposition set in ascending order and
/// writes the count to `len`. With a null or short buffer only `len` is
/// written and `MSN_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `buf` must be null or valid for `capacity` writes; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_pcset_enumerate_limited(buf: *mut u16, capacity: usize, len: *mut usize) -> MsnStatus {
    guard(|| {
        let sets = z12::enumerate_limited();
        write_out(len, sets.len())?;
        if buf.is_null() || capacity < sets.len() {
            return Err(Failure::new(MsnStatus::BufferTooSmall, format!("need room for {} sets", sets.len())));
        }
        for (i, s) in sets.iter().enumerate() {
            buf.add(i).write(s.bits());
        }
        Ok(())
    })
}

// Permutations

/// Parses whitespace-separated 1-based images.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_parse(text_in: *const c_char, out: *mut *mut MsnPerm) -> MsnStatus {
    guard(|| write_boxed(out, MsnPerm(Perm::from_str(text(text_in)?)?)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_chronochromie(out: *mut *mut MsnPerm) -> MsnStatus {
    guard(|| write_boxed(out, MsnPerm(perm::chronochromie())))
}

/// Center-outward permutation on `n` points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_fan(n: usize, right_first: bool, out: *mut *mut MsnPerm) -> MsnStatus {
    guard(|| {
        let direction = if right_first { FanDirection::RightFirst } else { FanDirection::LeftFirst };
        write_boxed(out, MsnPerm(perm::fan(n, direction)?))
    })
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_free(p: *mut MsnPerm) {
    free_boxed(p)
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_len(p: *const MsnPerm) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// 1-based images, space-separated.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_to_string(p: *const MsnPerm, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, handle(p)?.0.to_string()))
}

/// Order of the permutation; `MSN_STATUS_OVERFLOW` past `u64`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_order(p: *const MsnPerm, out: *mut u64) -> MsnStatus {
    guard(|| {
        let order = handle(p)?.0.order();
        let small = u64::try_from(&order)
            .map_err(|_| Failure::new(MsnStatus::Overflow, format!("order {order} exceeds u64")))?;
        write_out(out, small)
    })
}

/// Reorders a rhythm: `out[i] = r[p[i]]`.
///
/// # Safety
/// `p` and `r` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_apply_rhythm(
    p: *const MsnPerm,
    r: *const MsnRhythm,
    out: *mut *mut MsnRhythm,
) -> MsnStatus {
    guard(|| write_boxed(out, MsnRhythm(handle(p)?.0.apply_rhythm(&handle(r)?.0)?)))
}

/// Iterates `p` from `base` until it returns. A null `base` uses the
/// chromatic durations `1..n`. `cap` of 0 means the default cap.
///
/// # Safety
/// `p` must be a live handle, `base` null or a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn msn_perm_orbit(
    p: *const MsnPerm,
    base: *const MsnRhythm,
    cap: usize,
    out: *mut *mut MsnOrbit,
) -> MsnStatus {
    guard(|| {
        let p = &handle(p)?.0;
        let base = match base.as_ref() {
            Some(b) => b.0.clone(),
            None => perm::chromatic_durations(p.len())?,
        };
        let cap = if cap == 0 { perm::DEFAULT_ORBIT_CAP } else { cap };
        let table = perm::orbit_table(p, base.durations(), cap)?;
        let rows = table
            .rows
            .into_iter()
            .map(|row| Rhythm::new(row, base.unit()))
            .collect::<Result<Vec<_>, _>>()?;
        write_boxed(out, MsnOrbit(rows))
    })
}

/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_orbit_free(o: *mut MsnOrbit) {
    free_boxed(o)
}

/// Row count, equal to the number of applications needed to return.
///
/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_orbit_len(o: *const MsnOrbit) -> usize {
    o.as_ref().map_or(0, |o| o.0.len())
}

/// Copy of row `index` (0-based; row 0 is one application).
///
/// # Safety
/// `o` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_orbit_row(o: *const MsnOrbit, index: usize, out: *mut *mut MsnRhythm) -> MsnStatus {
    guard(|| {
        let row = handle(o)?
            .0
            .get(index)
            .ok_or_else(|| Failure::new(MsnStatus::IndexOutOfRange, format!("no row {index}")))?;
        write_boxed(out, MsnRhythm(row.clone()))
    })
}

/// `n!` in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_permutation_count(n: u64, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, perm::permutation_count(n).to_string()))
}

// Catalogs

/// Which shipped catalog to open.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsnSeed {
    Talas = 0,
    Quatuor = 1,
}

/// Parses catalog text (`id|name|gloss|durations[|source note]` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_parse(text_in: *const c_char, out: *mut *mut MsnCatalog) -> MsnStatus {
    guard(|| write_boxed(out, MsnCatalog(catalog::parse_catalog(text(text_in)?)?)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_seed(which: MsnSeed, out: *mut *mut MsnCatalog) -> MsnStatus {
    guard(|| {
        let seed = SeedData::shipped();
        let entries = match which {
            MsnSeed::Talas => seed.talas,
            MsnSeed::Quatuor => seed.quatuor,
        };
        write_boxed(out, MsnCatalog(entries))
    })
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_free(c: *mut MsnCatalog) {
    free_boxed(c)
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_len(c: *const MsnCatalog) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

unsafe fn entry<'a>(c: *const MsnCatalog, index: usize) -> Result<&'a TalaEntry, Failure> {
    handle(c)?
        .0
        .get(index)
        .ok_or_else(|| Failure::new(MsnStatus::IndexOutOfRange, format!("no entry {index}")))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_entry_id(c: *const MsnCatalog, index: usize, out: *mut u32) -> MsnStatus {
    guard(|| write_out(out, entry(c, index)?.id))
}

/// Copy of the rhythm of entry `index` (0-based, file order).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_entry_rhythm(
    c: *const MsnCatalog,
    index: usize,
    out: *mut *mut MsnRhythm,
) -> MsnStatus {
    guard(|| write_boxed(out, MsnRhythm(entry(c, index)?.rhythm.clone())))
}

/// Analysis report for entry `index` as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_report_json(c: *const MsnCatalog, index: usize, out: *mut *mut c_char) -> MsnStatus {
    guard(|| write_string(out, catalog::analyze_entry(entry(c, index)?).to_json()))
}

/// Ids of entries satisfying `predicate` (`nonretro`, `prime`, `augchain`
/// or `interleave`). Buffer handling as in [`msn_pcset_enumerate_limited`].
///
/// # Safety
/// `c` must be a live handle, `predicate` a NUL-terminated string, `buf` null
/// or valid for `capacity` writes, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn msn_catalog_filter(
    c: *const MsnCatalog,
    predicate: *const c_char,
    buf: *mut u32,
    capacity: usize,
    len: *mut usize,
) -> MsnStatus {
    guard(|| {
        let matched = catalog::filter_catalog(&handle(c)?.0, text(predicate)?)?;
        write_out(len, matched.len())?;
        if matched.is_empty() {
            return Ok(());
        }
        if buf.is_null() || capacity < matched.len() {
            return Err(Failure::new(MsnStatus::BufferTooSmall, format!("need room for {} ids", matched.len())));
        }
        for (i, e) in matched.iter().enumerate() {
            buf.add(i).write(e.id);
        }
        Ok(())
    })
}
