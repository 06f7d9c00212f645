//! Reference classes for incomparable pattern pairs: generating function
//! coefficients (unnormalized, signs and all) and sequence terms.

#![allow(dead_code)]

use num_bigint::BigInt;
use treepat::ratfun::{Polynomial, RationalGf};

pub struct GoldenClass {
    pub num: &'static [i64],
    pub den: &'static [i64],
    /// Sequence terms starting at `n = first`.
    pub first: usize,
    pub terms: &'static [i64],
}

impl GoldenClass {
    pub fn gf(&self) -> RationalGf {
        RationalGf::new(
            Polynomial::from_i64(self.num),
            Polynomial::from_i64(self.den),
        )
        .expect("nonzero denominator")
    }
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

const fn c(
    num: &'static [i64],
    den: &'static [i64],
    first: usize,
    terms: &'static [i64],
) -> GoldenClass {
    GoldenClass {
        num,
        den,
        first,
        terms,
    }
}

pub const PAIRS_3_4: &[GoldenClass] = &[c(
    &[0, 1, 1, 1],
    &[1],
    1,
    &[1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
)];

pub const PAIRS_3_5: &[GoldenClass] = &[c(
    &[0, 1, 1, 1, 1],
    &[1],
    1,
    &[1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
)];

pub const PAIRS_4_4: &[GoldenClass] = &[
    c(
        &[0, 1, 1, 2, 3, 2, 1],
        &[1],
        1,
        &[1, 1, 2, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ),
    c(
        &[0, 1, -1, 1],
        &[1, -2, 1],
        1,
        &[1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
    ),
    c(
        &[0, -1],
        &[-1, 1, 1],
        1,
        &[1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610],
    ),
];

pub const PAIRS_4_5: &[GoldenClass] = &[
    c(
        &[0, 1, 1, 2, 4, 7, 8, 8, 6, 3, 1],
        &[1],
        1,
        &[1, 1, 2, 4, 7, 8, 8, 6, 3, 1, 0, 0, 0, 0, 0],
    ),
    c(
        &[0, 1, -1, 1, 1, 1],
        &[1, -2, 1],
        1,
        &[1, 1, 2, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37],
    ),
    c(
        &[0, -1, 2, -2],
        &[-1, 3, -3, 1],
        1,
        &[1, 1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92],
    ),
    c(
        &[0, 1, -1, 0, 1],
        &[1, -2, 0, 1],
        1,
        &[1, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609, 986],
    ),
    c(
        &[0, -1],
        &[-1, 1, 1, 1],
        1,
        &[
            1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705, 3136,
        ],
    ),
];

/// Class K's n = 9 term (265) is also recounted by brute force in the
/// acceptance run.
pub const PAIRS_5_5: &[GoldenClass] = &[
    c(
        &[
            0, 1, 1, 2, 5, 12, 26, 46, 76, 116, 163, 208, 238, 240, 210, 158, 100, 52, 21, 6, 1,
        ],
        &[1],
        6,
        &[
            26, 46, 76, 116, 163, 208, 238, 240, 210, 158, 100, 52, 21, 6, 1,
        ],
    ),
    c(
        &[0, 1, -2, 2, 1, 2, 3, 2, 2, 1],
        &[1, -3, 3, -1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 49, 83, 129, 187, 257, 339, 433, 539, 657,
        ],
    ),
    c(
        &[0, 1, -4, 7, -5, 2],
        &[1, -5, 10, -10, 5, -1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 51, 92, 155, 247, 376, 551, 782, 1080, 1457,
        ],
    ),
    c(
        &[0, 1, -5, 11, -12, 7, -2, 1],
        &[1, -6, 15, -20, 15, -6, 1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 52, 98, 176, 303, 502, 803, 1244, 1872, 2744,
        ],
    ),
    c(
        &[0, 1, -3, 3, 1, -1],
        &[1, -4, 5, -1, -2, 1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 52, 98, 177, 310, 531, 895, 1491, 2463, 4044,
        ],
    ),
    c(
        &[0, -1, 2, -1, -1, -2],
        &[-1, 3, -2, 0, -1, 1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 53, 104, 199, 375, 700, 1299, 2402, 4432, 8167,
        ],
    ),
    c(
        &[0, 1, -2, 0, 2, 2, -1, -1],
        &[1, -3, 1, 2, 1, -1, -1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 55, 113, 227, 449, 877, 1696, 3254, 6203, 11762,
        ],
    ),
    c(
        &[0, 1, -1, -1, 0, 3, 2, 1],
        &[1, -2, -1, 0, 3, 2, 1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 56, 118, 244, 499, 1010, 2027, 4040, 8004, 15776,
        ],
    ),
    c(
        &[0, -1],
        &[-1, 1, 1, 2, 3, 2, 1],
        1,
        &[
            1, 1, 2, 5, 12, 26, 57, 127, 284, 632, 1405, 3126, 6958, 15485, 34458,
        ],
    ),
    c(
        &[0, -1, 3, -3],
        &[-1, 4, -5, 2],
        1,
        &[
            1, 1, 2, 5, 12, 27, 58, 121, 248, 503, 1014, 2037, 4084, 8179, 16370,
        ],
    ),
    c(
        &[0, 1, -2, 0, 2, 1],
        &[1, -3, 1, 2],
        1,
        &[
            1, 1, 2, 5, 12, 27, 59, 126, 265, 551, 1136, 2327, 4743, 9630, 19493,
        ],
    ),
    c(
        &[0, 1, -3, 2, 1],
        &[1, -4, 4],
        1,
        &[
            1, 1, 2, 5, 12, 28, 64, 144, 320, 704, 1536, 3328, 7168, 15360, 32768,
        ],
    ),
    c(
        &[0, 1, -2, 1],
        &[1, -3, 2, -1],
        1,
        &[
            1, 1, 2, 5, 12, 28, 65, 151, 351, 816, 1897, 4410, 10252, 23833, 55405,
        ],
    ),
    c(
        &[0, 1, -1, -1],
        &[1, -2, -1],
        1,
        &[
            1, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741, 13860, 33461, 80782,
        ],
    ),
];

/// Avoidance counts n = 1..=8 for single k-leaf patterns, k = 1..=9.
pub const COMB_ROWS: [[i64; 8]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 2, 4, 8, 16, 32, 64],
    [1, 1, 2, 5, 13, 34, 89, 233],
    [1, 1, 2, 5, 14, 41, 122, 365],
    [1, 1, 2, 5, 14, 42, 131, 417],
    [1, 1, 2, 5, 14, 42, 132, 428],
    [1, 1, 2, 5, 14, 42, 132, 429],
];
