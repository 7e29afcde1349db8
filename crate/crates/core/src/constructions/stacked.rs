//! Labeling constructions for stacked prisms `Y(3, n)` and `Y(5, n)`.

use crate::labeling::{Certificate, TheoremId};

/// Triangle labels for `Y(3, n)`, layer-major: `labels[i-1][j-1]` is
/// the label of position `j` on triangle `i`. Maximum label `4n - 1`.
///
/// Triangle 1 is seeded `(1, 2, 3)`; each step fills the next triangle
/// with `{4i+1, 4i+2, 4i+3}` permuted by divisibility cases on
/// `4i - 3`, `4i - 2`, `4i - 1`, except one case that fills two
/// triangles at once, giving the first `{4i, 4i+1, 4i+3}`.
pub(crate) fn y3_labels(n: u64) -> (Vec<[u64; 3]>, Certificate) {
    assert!(n >= 1);
    let mut rows: Vec<[u64; 3]> = Vec::with_capacity(n as usize);
    rows.push([1, 2, 3]);
    // Positions (0-based) currently holding 4i-3, 4i-2, 4i-1.
    let (mut r, mut s, mut t) = (0usize, 1usize, 2usize);
    let mut i = 1u64;
    while i < n {
        let a = 4 * i - 3;
        let b = 4 * i - 2;
        let c = 4 * i - 1;
        let mut row = [0u64; 3];
        if a % 5 != 0 && b % 3 != 0 {
            // Case 1
            row[r] = 4 * i + 2;
            row[s] = 4 * i + 1;
            row[t] = 4 * i + 3;
            rows.push(row);
            (r, s) = (s, r);
            i += 1;
        } else if a % 5 == 0 && c % 3 != 0 {
            // Case 2
            row[r] = 4 * i + 1;
            row[s] = 4 * i + 3;
            row[t] = 4 * i + 2;
            rows.push(row);
            (s, t) = (t, s);
            i += 1;
        } else if a % 5 != 0 && b % 5 != 0 {
            // Case 3
            row[r] = 4 * i + 2;
            row[s] = 4 * i + 3;
            row[t] = 4 * i + 1;
            rows.push(row);
            (r, s, t) = (t, r, s);
            i += 1;
        } else {
            // Case 4: 4i-3 divisible by 5 and 4i-1 by 3. Two triangles
            // at once; the first skips 4i+2 and uses 4i instead. Roles
            // are unchanged on the second triangle.
            debug_assert!(a % 5 == 0 && c % 3 == 0);
            row[r] = 4 * i;
            row[s] = 4 * i + 1;
            row[t] = 4 * i + 3;
            rows.push(row);
            if i + 2 <= n {
                let mut row2 = [0u64; 3];
                row2[r] = 4 * i + 5;
                row2[s] = 4 * i + 6;
                row2[t] = 4 * i + 7;
                rows.push(row2);
            }
            i += 2;
        }
    }
    debug_assert_eq!(rows.len() as u64, n);
    let case = if n == 1 { "seed" } else { "recursive cases 1-4" };
    (rows, Certificate::new(TheoremId::T5_1, case))
}

/// Pentagon labels for rows 1 to 70 of the `Y(5, n)` construction.
///
/// Row `i` is a permutation of `{6i-5, ..., 6i-1}`; 46 of the 350
/// entries deviate from the plain alternating pattern to avoid shared
/// factors of 5 and 7 between vertically adjacent labels. Rows past 70
/// repeat with a shift of 420.
pub(crate) const Y5_BASE: [[u64; 5]; 70] = [
    [3, 2, 1, 4, 5],
    [7, 11, 10, 9, 8],
    [15, 16, 13, 14, 17],
    [19, 21, 22, 23, 20],
    [27, 26, 25, 28, 29],
    [31, 35, 34, 33, 32],
    [39, 38, 37, 40, 41],
    [43, 45, 46, 47, 44],
    [51, 52, 49, 50, 53],
    [55, 59, 58, 57, 56],
    [63, 62, 61, 64, 65],
    [67, 71, 70, 69, 68],
    [75, 74, 73, 76, 77],
    [79, 83, 82, 81, 80],
    [87, 86, 85, 88, 89],
    [91, 95, 94, 93, 92],
    [101, 98, 97, 100, 99],
    [105, 107, 106, 103, 104],
    [113, 110, 109, 112, 111],
    [115, 119, 118, 117, 116],
    [123, 122, 121, 124, 125],
    [127, 131, 130, 129, 128],
    [135, 134, 133, 136, 137],
    [139, 143, 142, 141, 140],
    [147, 146, 145, 148, 149],
    [151, 153, 154, 155, 152],
    [159, 160, 157, 158, 161],
    [163, 167, 166, 165, 164],
    [171, 170, 169, 172, 173],
    [175, 179, 178, 177, 176],
    [183, 184, 181, 182, 185],
    [187, 189, 190, 191, 188],
    [195, 194, 193, 196, 197],
    [199, 203, 202, 201, 200],
    [207, 206, 205, 208, 209],
    [211, 213, 214, 215, 212],
    [219, 220, 217, 218, 221],
    [223, 227, 226, 225, 224],
    [231, 230, 229, 232, 233],
    [235, 239, 238, 237, 236],
    [243, 242, 241, 244, 245],
    [247, 251, 250, 249, 248],
    [255, 254, 253, 256, 257],
    [259, 263, 262, 261, 260],
    [267, 268, 265, 266, 269],
    [275, 273, 274, 271, 272],
    [279, 278, 277, 280, 281],
    [287, 285, 286, 283, 284],
    [291, 292, 289, 290, 293],
    [295, 299, 298, 297, 296],
    [303, 302, 301, 304, 305],
    [307, 311, 310, 309, 308],
    [315, 314, 313, 316, 317],
    [319, 323, 322, 321, 320],
    [327, 326, 325, 328, 329],
    [331, 335, 334, 333, 332],
    [339, 338, 337, 340, 341],
    [343, 345, 346, 347, 344],
    [351, 352, 349, 350, 353],
    [355, 357, 358, 359, 356],
    [363, 362, 361, 364, 365],
    [367, 371, 370, 369, 368],
    [375, 374, 373, 376, 377],
    [379, 383, 382, 381, 380],
    [387, 386, 385, 388, 389],
    [391, 395, 394, 393, 392],
    [399, 398, 397, 400, 401],
    [403, 405, 406, 407, 404],
    [411, 412, 409, 410, 413],
    [415, 419, 418, 417, 416],
];

/// Row `i` (1-based) of the `Y(5, n)` labeling; rows past 70 shift the
/// base table by multiples of 420.
pub(crate) fn y5_row(i: u64) -> [u64; 5] {
    let base = Y5_BASE[((i - 1) % 70) as usize];
    let shift = (i - 1) / 70 * 420;
    base.map(|x| x + shift)
}

pub(crate) fn y5_labels(n: u64) -> (Vec<[u64; 5]>, Certificate) {
    assert!(n >= 1);
    let rows = (1..=n).map(y5_row).collect();
    let case = if n <= 70 {
        "table rows 1-70"
    } else {
        "table plus period-420 extension"
    };
    (rows, Certificate::new(TheoremId::T5_2, case))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y3_small_cases() {
        let (rows, _) = y3_labels(1);
        assert_eq!(rows, vec![[1, 2, 3]]);
        // At i=1: 5 does not divide 1, 3 does not divide 2, so case 1.
        let (rows, _) = y3_labels(2);
        assert_eq!(rows[1], [6, 5, 7]);
    }

    #[test]
    fn y3_max_label_is_formula() {
        for n in 1..2000u64 {
            let (rows, _) = y3_labels(n);
            assert_eq!(rows.len() as u64, n);
            let last_max = rows.last().unwrap().iter().max().copied().unwrap();
            assert_eq!(last_max, 4 * n - 1, "n={n}");
        }
    }

    #[test]
    fn y3_rows_use_expected_windows() {
        // Each triangle i >= 2 uses {4i-3, 4i-2, 4i-1}, except the first
        // of a case-4 pair which uses {4i-4, 4i-3, 4i-1}.
        let (rows, _) = y3_labels(500);
        for (idx, row) in rows.iter().enumerate().skip(1) {
            let i = idx as u64 + 1;
            let mut sorted = *row;
            sorted.sort_unstable();
            let standard = [4 * i - 3, 4 * i - 2, 4 * i - 1];
            let skip = [4 * i - 4, 4 * i - 3, 4 * i - 1];
            assert!(
                sorted == standard || sorted == skip,
                "triangle {i}: {sorted:?}"
            );
        }
    }

    #[test]
    fn y5_base_table_ingestion() {
        let mut sum = 0u64;
        for (idx, row) in Y5_BASE.iter().enumerate() {
            let i = idx as u64 + 1;
            let mut sorted = *row;
            sorted.sort_unstable();
            assert_eq!(
                sorted,
                [6 * i - 5, 6 * i - 4, 6 * i - 3, 6 * i - 2, 6 * i - 1],
                "row {i} is not a permutation of its window"
            );
            sum += row.iter().sum::<u64>();
        }
        // Checksum: sum of {1..419} minus the multiples of 6.
        assert_eq!(sum, 73_500);
    }

    #[test]
    fn y5_first_row_and_extension() {
        assert_eq!(y5_row(1), [3, 2, 1, 4, 5]);
        assert_eq!(y5_row(71), [423, 422, 421, 424, 425]);
        assert_eq!(y5_row(141), [843, 842, 841, 844, 845]);
        let (rows, _) = y5_labels(6);
        assert_eq!(rows.iter().flatten().max(), Some(&35)); // 6n-1
    }
}
