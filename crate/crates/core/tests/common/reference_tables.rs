//! Rows of the published cyclic and multicirculant tables, transcribed by hand.
//! Columns are the types (ssss), (ksss), (kkss) and, for cyclic rows, (kkks).

pub use Cell::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    /// A count of inequivalent families; `true` when printed in bold (exhaustive).
    Count(u32, bool),
    /// Type incompatible with the parameters.
    Cross,
    /// Left blank: existence unknown.
    Open,
    Yes,
    No,
}

#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub n: usize,
    pub k: [usize; 4],
    pub lambda: i64,
    pub a: [i64; 4],
    pub cells: &'static [Cell],
}

pub const CYCLIC_TYPES: [&str; 4] = ["ssss", "ksss", "kkss", "kkks"];

pub const CYCLIC_TABLE: &[Row] = &[
    Row {
        n: 3,
        k: [1, 1, 1, 0],
        lambda: 0,
        a: [1, 1, 1, 3],
        cells: &[Count(1, true), Count(1, true), Count(1, true), Count(1, true)],
    },
    Row {
        n: 5,
        k: [2, 2, 1, 1],
        lambda: 1,
        a: [1, 1, 3, 3],
        cells: &[Count(1, true), Count(1, true), Count(1, true), Cross],
    },
    Row {
        n: 7,
        k: [3, 3, 3, 1],
        lambda: 3,
        a: [1, 1, 1, 5],
        cells: &[Count(1, true), Count(1, true), Count(1, true), Count(1, true)],
    },
    Row { n: 7, k: [3, 2, 2, 2], lambda: 2, a: [1, 3, 3, 3], cells: &[Count(1, true), Count(2, true), Cross, Cross] },
    Row {
        n: 9,
        k: [4, 4, 3, 2],
        lambda: 4,
        a: [1, 1, 3, 5],
        cells: &[Count(2, true), Count(1, true), Count(1, true), Cross],
    },
    Row { n: 9, k: [3, 3, 3, 3], lambda: 3, a: [3, 3, 3, 3], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 11, k: [5, 4, 4, 3], lambda: 5, a: [1, 3, 3, 5], cells: &[Count(1, true), Count(3, true), Cross, Cross] },
    Row {
        n: 13,
        k: [6, 6, 6, 3],
        lambda: 8,
        a: [1, 1, 1, 7],
        cells: &[Count(1, true), Count(2, true), Count(0, true), Count(2, true)],
    },
    Row {
        n: 13,
        k: [6, 6, 4, 4],
        lambda: 7,
        a: [1, 1, 5, 5],
        cells: &[Count(1, true), Count(4, true), Count(8, true), Cross],
    },
    Row { n: 13, k: [5, 5, 5, 4], lambda: 6, a: [3, 3, 3, 5], cells: &[Count(2, true), Cross, Cross, Cross] },
    Row {
        n: 15,
        k: [7, 7, 6, 4],
        lambda: 9,
        a: [1, 1, 3, 7],
        cells: &[Count(3, true), Count(7, true), Count(32, true), Cross],
    },
    Row { n: 15, k: [7, 6, 5, 5], lambda: 8, a: [1, 3, 5, 5], cells: &[Count(1, true), Count(4, true), Cross, Cross] },
    Row { n: 17, k: [8, 7, 7, 5], lambda: 10, a: [1, 3, 3, 7], cells: &[Count(3, true), Count(2, true), Cross, Cross] },
    Row { n: 17, k: [7, 7, 6, 6], lambda: 9, a: [3, 3, 5, 5], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row {
        n: 19,
        k: [9, 9, 7, 6],
        lambda: 12,
        a: [1, 1, 5, 7],
        cells: &[Count(3, true), Count(5, true), Count(9, true), Cross],
    },
    Row { n: 19, k: [8, 8, 8, 6], lambda: 11, a: [3, 3, 3, 7], cells: &[Count(3, true), Cross, Cross, Cross] },
    Row { n: 19, k: [9, 7, 7, 7], lambda: 11, a: [1, 5, 5, 5], cells: &[Count(0, true), Count(3, true), Cross, Cross] },
    Row {
        n: 21,
        k: [10, 10, 10, 6],
        lambda: 15,
        a: [1, 1, 1, 9],
        cells: &[Count(1, true), Count(4, true), Count(23, true), Count(21, true)],
    },
    Row {
        n: 21,
        k: [10, 9, 8, 7],
        lambda: 13,
        a: [1, 3, 5, 7],
        cells: &[Count(3, true), Count(6, true), Cross, Cross],
    },
    Row { n: 21, k: [9, 8, 8, 8], lambda: 12, a: [3, 5, 5, 5], cells: &[Count(3, true), Cross, Cross, Cross] },
    Row {
        n: 23,
        k: [11, 11, 10, 7],
        lambda: 16,
        a: [1, 1, 3, 9],
        cells: &[Count(0, true), Count(6, true), Count(16, true), Cross],
    },
    Row { n: 23, k: [10, 10, 9, 8], lambda: 14, a: [3, 3, 5, 7], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row {
        n: 25,
        k: [12, 11, 11, 8],
        lambda: 17,
        a: [1, 3, 3, 9],
        cells: &[Count(1, true), Count(3, true), Cross, Cross],
    },
    Row {
        n: 25,
        k: [12, 12, 9, 9],
        lambda: 17,
        a: [1, 1, 7, 7],
        cells: &[Count(3, true), Count(0, true), Count(13, true), Cross],
    },
    Row {
        n: 25,
        k: [12, 10, 10, 9],
        lambda: 16,
        a: [1, 5, 5, 7],
        cells: &[Count(3, true), Count(6, true), Cross, Cross],
    },
    Row { n: 25, k: [10, 10, 10, 10], lambda: 15, a: [5, 5, 5, 5], cells: &[Count(3, true), Cross, Cross, Cross] },
    Row {
        n: 27,
        k: [13, 13, 11, 9],
        lambda: 19,
        a: [1, 1, 5, 9],
        cells: &[Count(2, true), Count(6, true), Count(20, true), Cross],
    },
    Row { n: 27, k: [12, 12, 12, 9], lambda: 18, a: [3, 3, 3, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row {
        n: 27,
        k: [13, 12, 10, 10],
        lambda: 18,
        a: [1, 3, 7, 7],
        cells: &[Count(3, true), Count(6, true), Cross, Cross],
    },
    Row { n: 27, k: [12, 11, 11, 10], lambda: 17, a: [3, 5, 5, 7], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row {
        n: 29,
        k: [14, 13, 12, 10],
        lambda: 20,
        a: [1, 3, 5, 9],
        cells: &[Count(1, true), Count(5, true), Cross, Cross],
    },
    Row { n: 29, k: [13, 13, 11, 11], lambda: 19, a: [3, 3, 7, 7], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row {
        n: 31,
        k: [15, 15, 15, 10],
        lambda: 24,
        a: [1, 1, 1, 11],
        cells: &[Count(0, true), Count(2, true), Count(8, true), Count(8, true)],
    },
    Row { n: 31, k: [14, 14, 13, 11], lambda: 21, a: [3, 3, 5, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row {
        n: 31,
        k: [15, 13, 12, 12],
        lambda: 21,
        a: [1, 5, 7, 7],
        cells: &[Count(1, true), Count(1, true), Cross, Cross],
    },
    Row { n: 31, k: [13, 13, 13, 12], lambda: 20, a: [5, 5, 5, 7], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row {
        n: 33,
        k: [16, 16, 15, 11],
        lambda: 25,
        a: [1, 1, 3, 11],
        cells: &[Count(1, true), Count(6, true), Count(9, true), Cross],
    },
    Row {
        n: 33,
        k: [16, 16, 13, 12],
        lambda: 24,
        a: [1, 1, 7, 9],
        cells: &[Count(1, true), Count(4, true), Count(22, true), Cross],
    },
    Row {
        n: 33,
        k: [16, 14, 14, 12],
        lambda: 23,
        a: [1, 5, 5, 9],
        cells: &[Count(2, true), Count(5, true), Cross, Cross],
    },
    Row { n: 33, k: [15, 14, 13, 13], lambda: 22, a: [3, 5, 7, 7], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row {
        n: 35,
        k: [17, 16, 16, 12],
        lambda: 26,
        a: [1, 3, 3, 11],
        cells: &[Count(0, true), Count(4, true), Cross, Cross],
    },
    Row {
        n: 35,
        k: [17, 16, 14, 13],
        lambda: 25,
        a: [1, 3, 7, 9],
        cells: &[Count(0, true), Count(2, true), Cross, Cross],
    },
    Row { n: 35, k: [16, 15, 15, 13], lambda: 24, a: [3, 5, 5, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row {
        n: 37,
        k: [18, 18, 16, 13],
        lambda: 28,
        a: [1, 1, 5, 11],
        cells: &[Count(0, true), Count(1, true), Count(5, false), Cross],
    },
    Row { n: 37, k: [17, 17, 17, 13], lambda: 27, a: [3, 3, 3, 11], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 37, k: [17, 17, 15, 14], lambda: 26, a: [3, 3, 7, 9], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row {
        n: 37,
        k: [18, 15, 15, 15],
        lambda: 26,
        a: [1, 7, 7, 7],
        cells: &[Count(0, true), Count(1, true), Cross, Cross],
    },
    Row { n: 37, k: [16, 16, 15, 15], lambda: 25, a: [5, 5, 7, 7], cells: &[Count(2, true), Cross, Cross, Cross] },
    Row {
        n: 39,
        k: [19, 18, 17, 14],
        lambda: 29,
        a: [1, 3, 5, 11],
        cells: &[Count(0, true), Count(3, true), Cross, Cross],
    },
    Row {
        n: 39,
        k: [19, 17, 16, 15],
        lambda: 28,
        a: [1, 5, 7, 9],
        cells: &[Count(0, true), Count(2, true), Cross, Cross],
    },
    Row { n: 39, k: [17, 17, 17, 15], lambda: 27, a: [5, 5, 5, 9], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 39, k: [18, 16, 16, 16], lambda: 27, a: [3, 7, 7, 7], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 41, k: [19, 19, 18, 15], lambda: 30, a: [3, 3, 5, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row {
        n: 41,
        k: [20, 20, 16, 16],
        lambda: 31,
        a: [1, 1, 9, 9],
        cells: &[Count(1, true), Open, Count(1, false), Cross],
    },
    Row { n: 41, k: [19, 18, 17, 16], lambda: 29, a: [3, 5, 7, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 43, k: [21, 21, 21, 15], lambda: 35, a: [1, 1, 1, 13], cells: &[Count(0, true), Open, Open, Open] },
    Row { n: 43, k: [21, 21, 18, 16], lambda: 33, a: [1, 1, 7, 11], cells: &[Count(0, true), Open, Open, Cross] },
    Row { n: 43, k: [21, 19, 19, 16], lambda: 32, a: [1, 5, 5, 11], cells: &[Count(1, true), Open, Cross, Cross] },
    Row { n: 43, k: [21, 20, 17, 17], lambda: 32, a: [1, 3, 9, 9], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 43, k: [19, 18, 18, 18], lambda: 30, a: [5, 7, 7, 7], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 45, k: [22, 22, 21, 16], lambda: 36, a: [1, 1, 3, 13], cells: &[Count(0, true), Open, Open, Cross] },
    Row { n: 45, k: [22, 21, 19, 17], lambda: 34, a: [1, 3, 7, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 45, k: [21, 20, 20, 17], lambda: 33, a: [3, 5, 5, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 45, k: [21, 21, 18, 18], lambda: 33, a: [3, 3, 9, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 45, k: [22, 19, 19, 18], lambda: 33, a: [1, 7, 7, 9], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 45, k: [20, 20, 19, 18], lambda: 32, a: [5, 5, 7, 9], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 47, k: [23, 22, 22, 17], lambda: 37, a: [1, 3, 3, 13], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 47, k: [22, 22, 20, 18], lambda: 35, a: [3, 3, 7, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 47, k: [23, 21, 19, 19], lambda: 35, a: [1, 5, 9, 9], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 47, k: [22, 20, 20, 19], lambda: 34, a: [3, 7, 7, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 49, k: [24, 24, 22, 18], lambda: 39, a: [1, 1, 5, 13], cells: &[Count(0, true), Open, Open, Cross] },
    Row { n: 49, k: [23, 23, 23, 18], lambda: 38, a: [3, 3, 3, 13], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 49, k: [24, 22, 21, 19], lambda: 37, a: [1, 5, 7, 11], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 49, k: [22, 22, 22, 19], lambda: 36, a: [5, 5, 5, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 49, k: [23, 22, 20, 20], lambda: 36, a: [3, 5, 9, 9], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 49, k: [21, 21, 21, 21], lambda: 35, a: [7, 7, 7, 7], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 51, k: [25, 24, 23, 19], lambda: 40, a: [1, 3, 5, 13], cells: &[Count(0, true), Open, Cross, Cross] },
    Row {
        n: 51,
        k: [25, 25, 21, 20],
        lambda: 40,
        a: [1, 1, 9, 11],
        cells: &[Count(1, true), Open, Count(1, false), Cross],
    },
    Row { n: 51, k: [24, 23, 22, 20], lambda: 38, a: [3, 5, 7, 11], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 51, k: [23, 22, 22, 21], lambda: 37, a: [5, 7, 7, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 53, k: [25, 25, 24, 20], lambda: 41, a: [3, 3, 5, 13], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 53, k: [26, 25, 22, 21], lambda: 41, a: [1, 3, 9, 11], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 53, k: [26, 23, 22, 22], lambda: 40, a: [1, 7, 9, 9], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 53, k: [24, 24, 22, 22], lambda: 39, a: [5, 5, 9, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row {
        n: 55,
        k: [27, 27, 24, 21],
        lambda: 44,
        a: [1, 1, 7, 13],
        cells: &[Count(0, true), Open, Count(1, false), Cross],
    },
    Row { n: 55, k: [27, 25, 25, 21], lambda: 43, a: [1, 5, 5, 13], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 55, k: [26, 26, 23, 22], lambda: 42, a: [3, 3, 9, 11], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 55, k: [27, 24, 24, 23], lambda: 43, a: [1, 7, 7, 11], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 55, k: [25, 25, 24, 22], lambda: 41, a: [5, 5, 7, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 55, k: [26, 24, 23, 23], lambda: 41, a: [3, 7, 9, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 57, k: [28, 28, 28, 21], lambda: 48, a: [1, 1, 1, 15], cells: &[Count(0, true), Open, Open, Open] },
    Row { n: 57, k: [28, 27, 25, 22], lambda: 45, a: [1, 3, 7, 13], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 57, k: [27, 26, 26, 22], lambda: 44, a: [3, 5, 5, 13], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 57, k: [28, 26, 24, 23], lambda: 44, a: [1, 5, 9, 11], cells: &[Count(0, true), Open, Cross, Cross] },
    Row { n: 57, k: [27, 25, 25, 23], lambda: 44, a: [3, 7, 7, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 57, k: [25, 25, 25, 24], lambda: 42, a: [7, 7, 7, 9], cells: &[Count(1, true), Cross, Cross, Cross] },
    Row { n: 59, k: [29, 29, 28, 22], lambda: 49, a: [1, 1, 3, 15], cells: &[Count(0, true), Open, Open, Cross] },
    Row { n: 59, k: [28, 28, 26, 23], lambda: 46, a: [3, 3, 7, 13], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 59, k: [28, 27, 25, 24], lambda: 45, a: [3, 5, 9, 11], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 59, k: [27, 26, 25, 25], lambda: 44, a: [5, 7, 9, 9], cells: &[Count(0, true), Cross, Cross, Cross] },
    Row { n: 61, k: [30, 29, 29, 23], lambda: 50, a: [1, 3, 3, 15], cells: &[Open, Open, Cross, Cross] },
    Row { n: 61, k: [30, 28, 27, 24], lambda: 48, a: [1, 5, 7, 13], cells: &[Open, Open, Cross, Cross] },
    Row { n: 61, k: [28, 28, 28, 24], lambda: 47, a: [5, 5, 5, 13], cells: &[Open, Cross, Cross, Cross] },
    Row { n: 61, k: [30, 30, 25, 25], lambda: 49, a: [1, 1, 11, 11], cells: &[Count(1, false), Open, Open, Cross] },
    Row { n: 61, k: [28, 27, 27, 25], lambda: 46, a: [5, 7, 7, 11], cells: &[Open, Cross, Cross, Cross] },
    Row { n: 61, k: [30, 26, 26, 26], lambda: 47, a: [1, 9, 9, 9], cells: &[Open, Open, Cross, Cross] },
    Row { n: 63, k: [31, 31, 29, 24], lambda: 52, a: [1, 1, 5, 15], cells: &[Open, Open, Open, Cross] },
    Row { n: 63, k: [30, 30, 30, 24], lambda: 51, a: [3, 3, 3, 15], cells: &[Open, Cross, Cross, Cross] },
    Row { n: 63, k: [31, 31, 27, 25], lambda: 51, a: [1, 1, 9, 13], cells: &[Open, Open, Count(1, false), Cross] },
    Row { n: 63, k: [30, 29, 28, 25], lambda: 49, a: [3, 5, 7, 13], cells: &[Open, Cross, Cross, Cross] },
    Row { n: 63, k: [31, 30, 26, 26], lambda: 50, a: [1, 3, 11, 11], cells: &[Count(1, false), Open, Cross, Cross] },
    Row { n: 63, k: [31, 28, 27, 26], lambda: 49, a: [1, 7, 9, 11], cells: &[Open, Open, Cross, Cross] },
    Row { n: 63, k: [29, 29, 27, 26], lambda: 48, a: [5, 5, 9, 11], cells: &[Open, Cross, Cross, Cross] },
    Row { n: 63, k: [30, 27, 27, 27], lambda: 48, a: [3, 9, 9, 9], cells: &[Open, Cross, Cross, Cross] },
];

pub const MULTICIRCULANT_TABLE: &[Row] = &[
    Row { n: 9, k: [4, 4, 3, 2], lambda: 4, a: [1, 1, 3, 5], cells: &[No, No, No] },
    Row { n: 9, k: [3, 3, 3, 3], lambda: 3, a: [3, 3, 3, 3], cells: &[Yes, Cross, Cross] },
    Row { n: 25, k: [12, 11, 11, 8], lambda: 17, a: [1, 3, 3, 9], cells: &[Yes, No, Cross] },
    Row { n: 25, k: [12, 12, 9, 9], lambda: 17, a: [1, 1, 7, 7], cells: &[Yes, No, Yes] },
    Row { n: 25, k: [12, 10, 10, 9], lambda: 16, a: [1, 5, 5, 7], cells: &[No, No, Cross] },
    Row { n: 25, k: [10, 10, 10, 10], lambda: 15, a: [5, 5, 5, 5], cells: &[Yes, Cross, Cross] },
    Row { n: 27, k: [13, 13, 11, 9], lambda: 19, a: [1, 1, 5, 9], cells: &[No, No, No] },
    Row { n: 27, k: [12, 12, 12, 9], lambda: 18, a: [3, 3, 3, 9], cells: &[Yes, Cross, Cross] },
    Row { n: 27, k: [13, 12, 10, 10], lambda: 18, a: [1, 3, 7, 7], cells: &[No, No, Cross] },
    Row { n: 27, k: [12, 11, 11, 10], lambda: 17, a: [3, 5, 5, 7], cells: &[No, Cross, Cross] },
    Row { n: 49, k: [24, 24, 22, 18], lambda: 39, a: [1, 1, 5, 13], cells: &[Open, Open, Open] },
    Row { n: 49, k: [23, 23, 23, 18], lambda: 38, a: [3, 3, 3, 13], cells: &[Open, Cross, Cross] },
    Row { n: 49, k: [24, 22, 21, 19], lambda: 37, a: [1, 5, 7, 11], cells: &[Open, Open, Cross] },
    Row { n: 49, k: [22, 22, 22, 19], lambda: 36, a: [5, 5, 5, 11], cells: &[Open, Cross, Cross] },
    Row { n: 49, k: [23, 22, 20, 20], lambda: 36, a: [3, 5, 9, 9], cells: &[Open, Cross, Cross] },
    Row { n: 49, k: [21, 21, 21, 21], lambda: 35, a: [7, 7, 7, 7], cells: &[Yes, Cross, Cross] },
];
