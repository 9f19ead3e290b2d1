//! Optional instrumentation of the two-phase closure machinery.
//!
//! Instrumentation is off unless the `BINDCORE_DEBUG` environment variable is
//! set to a non-empty value, or [`set_enabled`] is called. When enabled, every
//! key-to-slot lookup made while resolving closures is counted, and every call
//! to [`subst`](crate::subst) records how many lookups happened during it.
//!
//! Counters are per thread: closures are resolved on the thread that calls
//! `unbox`/`bind_var`/`subst`, so a thread only ever sees its own work.

use std::cell::Cell;
use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::OnceLock;

const UNSET: u8 = 0;
const ON: u8 = 1;
const OFF: u8 = 2;

static OVERRIDE: AtomicU8 = AtomicU8::new(UNSET);
static FROM_ENV: OnceLock<bool> = OnceLock::new();

thread_local! {
    static LOOKUPS: Cell<u64> = const { Cell::new(0) };
    static SUBST_CALLS: Cell<u64> = const { Cell::new(0) };
    static SUBST_LOOKUPS: Cell<u64> = const { Cell::new(0) };
}

/// Whether instrumentation is currently active.
pub fn enabled() -> bool {
    match OVERRIDE.load(Ordering::Relaxed) {
        ON => true,
        OFF => false,
        _ => *FROM_ENV.get_or_init(|| {
            std::env::var_os("BINDCORE_DEBUG").is_some_and(|v| !v.is_empty())
        }),
    }
}

/// Force instrumentation on or off for the whole process, overriding
/// `BINDCORE_DEBUG`.
pub fn set_enabled(on: bool) {
    OVERRIDE.store(if on { ON } else { OFF }, Ordering::Relaxed);
}

/// Counter snapshot for the current thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Key-to-slot lookups performed while resolving closures.
    pub lookups: u64,
    /// Number of `subst` calls observed.
    pub subst_calls: u64,
    /// Lookups that happened while a `subst` call was running.
    pub lookups_during_subst: u64,
}

pub fn stats() -> Stats {
    Stats {
        lookups: LOOKUPS.with(Cell::get),
        subst_calls: SUBST_CALLS.with(Cell::get),
        lookups_during_subst: SUBST_LOOKUPS.with(Cell::get),
    }
}

/// Zero the current thread's counters.
pub fn reset() {
    LOOKUPS.with(|c| c.set(0));
    SUBST_CALLS.with(|c| c.set(0));
    SUBST_LOOKUPS.with(|c| c.set(0));
}

#[inline]
pub(crate) fn record_lookup() {
    if enabled() {
        LOOKUPS.with(|c| c.set(c.get() + 1));
    }
}

/// Run `f` as a substitution, attributing any lookups it performs.
#[inline]
pub(crate) fn track_subst<R>(f: impl FnOnce() -> R) -> R {
    if !enabled() {
        return f();
    }
    let before = LOOKUPS.with(Cell::get);
    let r = f();
    let delta = LOOKUPS.with(Cell::get) - before;
    SUBST_CALLS.with(|c| c.set(c.get() + 1));
    SUBST_LOOKUPS.with(|c| c.set(c.get() + delta));
    r
}
