//! Small colorings found once by the exact solver and kept as literals.
//! Each table is in the canonical edge order of the named graph and is
//! re-verified whenever it is used.

/// `P_2 □ P_2`, 3 colors.
pub const GRID_2_2: [usize; 4] = [0, 0, 1, 2];

/// `P_3 □ P_3`, 5 colors.
pub const GRID_3_3: [usize; 12] = [0, 1, 0, 3, 4, 0, 4, 3, 2, 1, 4, 2];

/// `P_4 □ P_3`, 5 colors.
pub const GRID_4_3: [usize; 17] = [0, 1, 2, 4, 0, 1, 2, 1, 3, 3, 1, 2, 3, 3, 4, 0, 2];

/// `P_3 □ P_4`, 5 colors.
pub const GRID_3_4: [usize; 17] = [0, 1, 1, 3, 2, 1, 3, 4, 3, 0, 1, 2, 4, 0, 4, 0, 3];

/// `P_2 □ C_4`, 4 colors.
pub const PATH2_CYCLE4: [usize; 12] = [0, 2, 1, 3, 1, 3, 0, 2, 3, 0, 2, 1];

/// `P_2 □ C_5`, 5 colors.
pub const PATH2_CYCLE5: [usize; 15] = [0, 0, 4, 4, 3, 1, 2, 3, 0, 2, 3, 2, 1, 2, 4];

/// `C_3 □ C_3`, 6 colors.
pub const TORUS_3_3: [usize; 18] = [0, 1, 2, 1, 2, 0, 2, 0, 1, 3, 5, 4, 4, 3, 5, 5, 4, 3];

/// `C_5 □ C_5`, 7 colors.
pub const TORUS_5_5: [usize; 50] = [
    0, 1, 0, 6, 3, 0, 4, 0, 3, 1, 5, 1, 6, 2, 0, 1, 2, 4, 5, 6, 6, 5, 6, 2, 0, 5, 6, 4, 2, 4, 2, 3, 0, 4, 3,
    2, 3, 5, 0, 3, 5, 1, 0, 3, 4, 2, 4, 3, 1, 5,
];

/// `Q_3`, 4 colors.
pub const CUBE_3: [usize; 12] = [0, 2, 1, 3, 3, 1, 0, 2, 2, 3, 1, 0];

/// Three compatible star colorings of `C_5` on 8 colors. No such family
/// exists on 7 colors.
pub const CYCLE5_FAMILY_8_3: [[usize; 5]; 3] = [[0, 3, 0, 2, 5], [1, 4, 1, 3, 6], [2, 5, 6, 4, 7]];

/// Three compatible star colorings of `C_5 □ C_5` on 14 colors.
pub const TORUS_5_5_FAMILY_14_3: [[usize; 50]; 3] = [
    [
        0, 3, 0, 4, 5, 2, 1, 2, 0, 10, 3, 0, 3, 12, 6, 8, 1, 5, 12, 6, 7, 1, 5, 8, 1, 6, 8, 11, 0, 4, 6, 9,
        7, 2, 9, 6, 9, 7, 4, 9, 7, 10, 2, 3, 10, 2, 3, 1, 5, 9,
    ],
    [
        1, 4, 1, 3, 10, 5, 0, 5, 6, 1, 4, 1, 4, 0, 7, 9, 0, 8, 10, 4, 6, 0, 6, 13, 2, 3, 9, 2, 3, 8, 7, 10,
        6, 5, 10, 7, 10, 6, 2, 10, 8, 11, 6, 1, 11, 7, 5, 9, 11, 0,
    ],
    [
        2, 5, 2, 6, 11, 4, 3, 4, 12, 11, 5, 2, 5, 8, 10, 10, 3, 9, 13, 7, 12, 3, 7, 4, 10, 7, 0, 1, 5, 9, 8,
        11, 12, 4, 11, 8, 11, 12, 13, 11, 9, 1, 7, 0, 12, 8, 13, 2, 3, 12,
    ],
];
