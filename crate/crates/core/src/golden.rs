//! Embedded coefficient tables.
//!
//! Entries are stored exactly as printed: three times the coefficient, except
//! in the columns of `xi_-(L_i)` with `i` even, which hold the coefficient itself.

/// Columns `L1-, L2+, L3-, L4+, L5-, L6+, L7-, L8+, L9-, L10+`.
pub const LEFT: [(u64, [u32; 10]); 25] = [
    (3, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]),
    (4, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (8, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, [3, 3, 3, 3, 0, 3, 0, 0, 3, 3]),
    (12, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (15, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (16, [6, 6, 3, 0, 0, 3, 0, 0, 0, 0]),
    (19, [3, 3, 3, 3, 0, 3, 0, 0, 3, 3]),
    (20, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (23, [9, 9, 3, 0, 3, 9, 9, 9, 0, 0]),
    (24, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (27, [6, 6, 6, 4, 0, 4, 0, 0, 6, 6]),
    (28, [9, 9, 0, 0, 0, 6, 0, 0, 0, 0]),
    (31, [9, 9, 3, 0, 3, 9, 9, 9, 0, 0]),
    (32, [6, 6, 3, 0, 0, 3, 0, 0, 0, 0]),
    (35, [3, 3, 3, 3, 0, 3, 0, 0, 3, 3]),
    (36, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (39, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (40, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (43, [3, 3, 3, 3, 0, 3, 0, 0, 3, 3]),
    (44, [9, 9, 6, 0, 0, 0, 0, 0, 0, 0]),
    (47, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (48, [6, 6, 3, 3, 3, 3, 3, 3, 3, 3]),
    (51, [3, 3, 3, 3, 0, 3, 0, 0, 3, 3]),
];

/// Columns `L1+, L2-, L3+, L4-, L5+, L6-, L7+, L8-, L9+, L10-`.
pub const RIGHT: [(u64, [u32; 10]); 25] = [
    (1, [1, 1, 1, 0, 1, 1, 1, 1, 0, 0]),
    (4, [3, 3, 0, 0, 0, 2, 0, 0, 0, 0]),
    (5, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]),
    (8, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (9, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (12, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]),
    (16, [4, 4, 1, 1, 1, 3, 1, 1, 1, 1]),
    (17, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (20, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (21, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]),
    (24, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (25, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (28, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (29, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]),
    (32, [6, 6, 3, 0, 0, 3, 0, 0, 0, 0]),
    (33, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (36, [9, 9, 0, 0, 0, 6, 0, 0, 0, 0]),
    (37, [3, 3, 3, 3, 0, 3, 0, 0, 3, 3]),
    (40, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (41, [3, 3, 3, 0, 3, 3, 3, 3, 0, 0]),
    (44, [3, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (45, [3, 3, 3, 1, 0, 1, 0, 0, 3, 3]),
    (48, [6, 6, 3, 0, 0, 3, 0, 0, 0, 0]),
    (49, [5, 5, 3, 0, 3, 5, 5, 5, 0, 0]),
];
