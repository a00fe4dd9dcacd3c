//! The q-shuffle product of two words.
//!
//! The product of words has integer Laurent coefficients, so the kernel
//! works over `i64` and is shared by every coefficient field. It follows the
//! left recursion
//!
//! ```text
//! u * v = u_1 ((u_2..u_r) * v) + v_1 (u * (v_2..v_s)) q^{<v_1,u_1> + ... + <v_1,u_r>}
//! ```
//!
//! memoized on the pair of suffixes. A bounded process-wide table keeps
//! results across calls; see [`crate::limits::set_cache_enabled`].

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::limits;
use crate::word::{Letter, Word};

/// Expansion of a word product: each output word with its coefficient.
pub type WordShuffle = Vec<(Word, LaurentPoly<i64>)>;

const CACHE_CAPACITY: usize = 1 << 18;

type Cache = RwLock<HashMap<(Word, Word), Arc<WordShuffle>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn clear_cache() {
    cache().write().unwrap().clear();
}

/// Number of word pairs currently memoized.
pub fn cache_len() -> usize {
    cache().read().unwrap().len()
}

/// `u * v` for words, subject to the word-length cap.
pub fn shuffle_words(u: &Word, v: &Word) -> Result<Arc<WordShuffle>> {
    limits::check_len(u.len() + v.len())?;
    let mut local = HashMap::new();
    Ok(shuffle_rec(*u, *v, &mut local))
}

/// Exponent picked up when letter `a` moves in front of all of `w`.
fn pass_exponent(a: Letter, w: &Word) -> i64 {
    let same = w.count(a) as i64;
    let other = w.len() as i64 - same;
    2 * same - 2 * other
}

fn shuffle_rec(
    u: Word,
    v: Word,
    local: &mut HashMap<(Word, Word), Arc<WordShuffle>>,
) -> Arc<WordShuffle> {
    if u.is_empty() {
        return Arc::new(vec![(v, LaurentPoly::one())]);
    }
    if v.is_empty() {
        return Arc::new(vec![(u, LaurentPoly::one())]);
    }
    if let Some(hit) = local.get(&(u, v)) {
        return hit.clone();
    }
    let use_global = limits::cache_enabled();
    if use_global {
        if let Some(hit) = cache().read().unwrap().get(&(u, v)) {
            return hit.clone();
        }
    }

    let u1 = u.first().unwrap();
    let v1 = v.first().unwrap();
    let left = shuffle_rec(u.tail(), v, local);
    let right = shuffle_rec(u, v.tail(), local);
    let e = pass_exponent(v1, &u);

    let mut out: WordShuffle = Vec::with_capacity(left.len() + right.len());
    out.extend(left.iter().map(|(w, c)| (w.prepend_unchecked(u1), c.clone())));
    if u1 == v1 {
        let mut index: HashMap<Word, usize> = out.iter().enumerate().map(|(i, (w, _))| (*w, i)).collect();
        for (w, c) in right.iter() {
            let w = w.prepend_unchecked(v1);
            let c = c.shift(e);
            match index.get(&w) {
                Some(&i) => {
                    let sum = &out[i].1 + &c;
                    out[i].1 = sum;
                }
                None => {
                    index.insert(w, out.len());
                    out.push((w, c));
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
    } else {
        out.extend(right.iter().map(|(w, c)| (w.prepend_unchecked(v1), c.shift(e))));
    }

    let out = Arc::new(out);
    local.insert((u, v), out.clone());
    if use_global {
        let mut table = cache().write().unwrap();
        if table.len() >= CACHE_CAPACITY {
            table.clear();
        }
        table.insert((u, v), out.clone());
    }
    out
}
