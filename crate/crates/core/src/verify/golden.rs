//! Reference values: the scalar tables for Catalan words of length at most
//! 6 and columns `m = -3..=3`, and the expansions of `C_0..C_3`, `D_0..D_3`.
//! Entries use the bracket notation read by [`crate::laurent::parse_bracket`].

/// The `m` values of the table columns.
pub const TABLE_M: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];

/// `Delta^(m)(w)`; the word `1` is the empty word.
pub const DELTA_TABLE: &[(&str, [&str; 7])] = &[
    ("1", ["1", "1", "1", "1", "1", "1", "1"]),
    ("xy", ["-[3]_q", "-[2]_q", "-1", "0", "1", "[2]_q", "[3]_q"]),
    ("xyxy", ["[3]_q^2", "[2]_q^2", "1", "0", "1", "[2]_q^2", "[3]_q^2"]),
    ("xxyy", ["[2]_q^2[3]_q", "[2]_q^2", "0", "0", "[2]_q^2", "[2]_q^2[3]_q", "[2]_q[3]_q[4]_q"]),
    ("xyxyxy", ["-[3]_q^3", "-[2]_q^3", "-1", "0", "1", "[2]_q^3", "[3]_q^3"]),
    ("xxyyxy", ["-[2]_q^2[3]_q^2", "-[2]_q^3", "0", "0", "[2]_q^2", "[2]_q^3[3]_q", "[2]_q[3]_q^2[4]_q"]),
    ("xyxxyy", ["-[2]_q^2[3]_q^2", "-[2]_q^3", "0", "0", "[2]_q^2", "[2]_q^3[3]_q", "[2]_q[3]_q^2[4]_q"]),
    ("xxyxyy", ["-[2]_q^4[3]_q", "-[2]_q^3", "0", "0", "[2]_q^4", "[2]_q^3[3]_q^2", "[2]_q^2[3]_q[4]_q^2"]),
    ("xxxyyy", ["-[2]_q^2[3]_q^2", "0", "0", "0", "[2]_q^2[3]_q^2", "[2]_q^2[3]_q^2[4]_q", "[2]_q[3]_q^2[4]_q[5]_q"]),
];

/// `Nabla^(m)(w)` for nontrivial words.
pub const NABLA_TABLE: &[(&str, [&str; 7])] = &[
    ("xy", ["1", "1", "1", "1", "1", "1", "1"]),
    ("xyxy", ["-[3]_q", "-[2]_q", "-1", "0", "1", "[2]_q", "[3]_q"]),
    ("xxyy", ["-[2]_q^2", "-[2]_q", "0", "[2]_q", "[2]_q^2", "[2]_q[3]_q", "[2]_q[4]_q"]),
    ("xyxyxy", ["[3]_q^2", "[2]_q^2", "1", "0", "1", "[2]_q^2", "[3]_q^2"]),
    ("xxyyxy", ["[2]_q^2[3]_q", "[2]_q^2", "0", "0", "[2]_q^2", "[2]_q^2[3]_q", "[2]_q[3]_q[4]_q"]),
    ("xyxxyy", ["[2]_q^2[3]_q", "[2]_q^2", "0", "0", "[2]_q^2", "[2]_q^2[3]_q", "[2]_q[3]_q[4]_q"]),
    ("xxyxyy", ["[2]_q^4", "[2]_q^2", "0", "[2]_q^2", "[2]_q^4", "[2]_q^2[3]_q^2", "[2]_q^2[4]_q^2"]),
    ("xxxyyy", ["[2]_q^2[3]_q", "0", "0", "[2]_q^2[3]_q", "[2]_q^2[3]_q^2", "[2]_q[3]_q^2[4]_q", "[2]_q[3]_q[4]_q[5]_q"]),
];

/// `C_0, ..., C_3` as sums of `coefficient word` terms.
pub const C_EXPANSIONS: [&str; 4] = [
    "1",
    "[2]_q xy",
    "[2]_q^2 xyxy + [2]_q^2[3]_q xxyy",
    "[2]_q^3 xyxyxy + [2]_q^3[3]_q xxyyxy + [2]_q^3[3]_q xyxxyy + [2]_q^3[3]_q^2 xxyxyy \
     + [2]_q^2[3]_q^2[4]_q xxxyyy",
];

/// `D_0, ..., D_3`.
pub const D_EXPANSIONS: [&str; 4] = [
    "1",
    "-xy",
    "xyxy + [2]_q^2 xxyy",
    "-xyxyxy - [2]_q^2 xxyyxy - [2]_q^2 xyxxyy - [2]_q^4 xxyxyy - [2]_q^2[3]_q^2 xxxyyy",
];
