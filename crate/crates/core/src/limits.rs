//! Process-wide resource limits.
//!
//! The word-length cap guards enumeration and products against exponential
//! blow-up. It applies to every operation that can create a longer word.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::word::MAX_LETTERS;

pub const DEFAULT_MAX_WORD_LEN: usize = 32;

static MAX_WORD_LEN: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_WORD_LEN);
static CACHE_ENABLED: AtomicBool = AtomicBool::new(true);

pub fn max_word_len() -> usize {
    MAX_WORD_LEN.load(Ordering::Relaxed)
}

/// Sets the word-length cap. The packed word representation holds at most
/// [`MAX_LETTERS`] letters, so larger caps are rejected.
pub fn set_max_word_len(cap: usize) -> Result<()> {
    if cap > MAX_LETTERS {
        return Err(Error::Domain(format!(
            "word-length cap {cap} exceeds the representable maximum {MAX_LETTERS}"
        )));
    }
    MAX_WORD_LEN.store(cap, Ordering::Relaxed);
    Ok(())
}

pub(crate) fn check_len(len: usize) -> Result<()> {
    let cap = max_word_len();
    if len > cap {
        Err(Error::CapExceeded { len, cap })
    } else {
        Ok(())
    }
}

pub fn cache_enabled() -> bool {
    CACHE_ENABLED.load(Ordering::Relaxed)
}

/// Turns the shared shuffle memo table on or off. Results never depend on it.
pub fn set_cache_enabled(enabled: bool) {
    CACHE_ENABLED.store(enabled, Ordering::Relaxed);
    if !enabled {
        crate::shuffle::clear_cache();
    }
}
