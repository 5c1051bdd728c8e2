//! Published reference tables, transcribed row by row.
#![allow(dead_code)]

/// (rows, total coins, coins / 3, increment cell, decomposition)
pub const TRIANGLE_TABLE: [(u64, u64, &str, &str, &str); 28] = [
    (1, 1, "0.3333333333", "", "0 + 0 + 0"),
    (2, 3, "1", "1 - 0 = 1", "1 + 0 + 0"),
    (3, 6, "2", "2 - 1 = 1", "1 + 1 + 0"),
    (4, 10, "3.3333333333", "3 - 2 = 1", "1 + 1 + 1"),
    (5, 15, "5", "5 - 3 = 2", "3 + 1 + 1"),
    (6, 21, "7", "2", "3 + 3 + 1"),
    (7, 28, "9.3333333333", "2", "3 + 3 + 3"),
    (8, 36, "12", "3", "6 + 3 + 3"),
    (9, 45, "15", "3", "6 + 6 + 3"),
    (10, 55, "18.3333333333", "3", "6 + 6 + 6"),
    (11, 66, "22", "4", "10 + 6 + 6"),
    (12, 78, "26", "4", "10 + 10 + 6"),
    (13, 91, "30.3333333333", "4", "10 + 10 + 10"),
    (14, 105, "35", "5", "15 + 10 + 10"),
    (15, 120, "40", "5", "15 + 15 + 10"),
    (16, 136, "45.3333333333", "5", "15 + 15 + 15"),
    (17, 153, "51", "6", "21 + 15 + 15"),
    (18, 171, "57", "6", "21 + 21 + 15"),
    (19, 190, "63.3333333333", "6", "21 + 21 + 21"),
    (20, 210, "70", "7", "28 + 21 + 21"),
    (21, 231, "77", "7", "28 + 28 + 21"),
    (22, 253, "84.3333333333", "7", "28 + 28 + 28"),
    (23, 276, "92", "8", "36 + 28 + 28"),
    (24, 300, "100", "8", "36 + 36 + 28"),
    (25, 325, "108.3333333333", "8", "36 + 36 + 36"),
    (26, 351, "117", "9", "45 + 36 + 36"),
    (27, 378, "126", "9", "45 + 45 + 36"),
    (28, 406, "135.3333333333", "9", "45 + 45 + 45"),
];

/// (rows, total coins, coins / 4, decomposition)
pub const RHOMBUS_TABLE: [(u64, u64, &str, &str); 21] = [
    (1, 1, "0.25", "0 + 0"),
    (2, 4, "1", "1 + 0"),
    (3, 9, "2.25", "1 + 1"),
    (4, 16, "4", "3 + 1"),
    (5, 25, "6.25", "3 + 3"),
    (6, 36, "9", "6 + 3"),
    (7, 49, "12.25", "6 + 6"),
    (8, 64, "16", "10 + 6"),
    (9, 81, "20.25", "10 + 10"),
    (10, 100, "25", "15 + 10"),
    (11, 121, "30.25", "15 + 15"),
    (12, 144, "36", "21 + 15"),
    (13, 169, "42.25", "21 + 21"),
    (14, 196, "49", "28 + 21"),
    (15, 225, "56.25", "28 + 28"),
    (16, 256, "64", "36 + 28"),
    (17, 289, "72.25", "36 + 36"),
    (18, 324, "81", "45 + 36"),
    (19, 361, "90.25", "45 + 45"),
    (20, 400, "100", "55 + 45"),
    (21, 441, "110.25", "55 + 55"),
];

pub fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Integer part of a decimal string such as "18.3333333333".
pub fn floor_of(decimal: &str) -> u64 {
    decimal.split('.').next().unwrap().parse().unwrap()
}

pub fn parse_sum(s: &str) -> Vec<u64> {
    s.split('+').map(|p| p.trim().parse().unwrap()).collect()
}
