use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::constructors::{combinator_null_extension, cyclic_group};
use super::table::OpTable;

/// The fixed tables realizing the Petersen, dodecahedron and Desargues graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuiltinTable {
    PetersenS,
    PetersenM,
    PetersenSp,
    PetersenMp,
    Dodecahedron,
    Desargues,
}

impl BuiltinTable {
    pub const ALL: [BuiltinTable; 6] = [
        Self::PetersenS,
        Self::PetersenM,
        Self::PetersenSp,
        Self::PetersenMp,
        Self::Dodecahedron,
        Self::Desargues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::PetersenS => "petersen-s",
            Self::PetersenM => "petersen-m",
            Self::PetersenSp => "petersen-sp",
            Self::PetersenMp => "petersen-mp",
            Self::Dodecahedron => "dodecahedron",
            Self::Desargues => "desargues",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn table(self) -> OpTable {
        match self {
            Self::PetersenS => from_rows(&PETERSEN_S),
            Self::PetersenM => from_rows(&PETERSEN_M),
            Self::PetersenSp => from_rows(&PETERSEN_SP),
            Self::PetersenMp => from_rows(&PETERSEN_MP),
            Self::Dodecahedron => from_rows(&DODECAHEDRON_M),
            Self::Desargues => desargues_m().expect("ideal {6..9} of petersen-m"),
        }
    }

    /// Connection set whose Cayley digraph realizes [`Self::target`].
    pub fn connection(self) -> Vec<usize> {
        match self {
            Self::PetersenS | Self::PetersenM => vec![1, 6],
            Self::PetersenSp | Self::PetersenMp => vec![0, 4, 8],
            Self::Dodecahedron => vec![1, 11, 18],
            // (1,1) and (6,0)
            Self::Desargues => vec![3, 12],
        }
    }

    /// `(n, k)` of the generalized Petersen graph realized.
    pub fn target(self) -> (usize, usize) {
        match self {
            Self::Dodecahedron => (10, 2),
            Self::Desargues => (10, 3),
            _ => (5, 2),
        }
    }
}

fn from_rows<const N: usize>(rows: &[[u8; N]; N]) -> OpTable {
    OpTable::new(rows.iter().map(|r| r.iter().map(|&x| x as usize).collect()).collect())
        .expect("builtin table is closed")
}

/// `petersen-m × Z_2` with `{6,7,8,9}` as the ideal.
pub fn desargues_m() -> Result<OpTable> {
    combinator_null_extension(&from_rows(&PETERSEN_M), &[6, 7, 8, 9], &cyclic_group(2)?)
}

const PETERSEN_S: [[u8; 10]; 10] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [1, 2, 3, 4, 5, 0, 7, 8, 6, 9],
    [2, 3, 4, 5, 0, 1, 8, 6, 7, 9],
    [3, 4, 5, 0, 1, 2, 6, 7, 8, 9],
    [4, 5, 0, 1, 2, 3, 7, 8, 6, 9],
    [5, 0, 1, 2, 3, 4, 8, 6, 7, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
];

const PETERSEN_M: [[u8; 10]; 10] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [1, 2, 3, 4, 5, 0, 7, 8, 6, 9],
    [2, 3, 4, 5, 0, 1, 8, 6, 7, 9],
    [3, 4, 5, 0, 1, 2, 6, 7, 8, 9],
    [4, 5, 0, 1, 2, 3, 7, 8, 6, 9],
    [5, 0, 1, 2, 3, 4, 8, 6, 7, 9],
    [6, 6, 6, 6, 6, 6, 9, 9, 9, 9],
    [7, 7, 7, 7, 7, 7, 9, 9, 9, 9],
    [8, 8, 8, 8, 8, 8, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
];

const PETERSEN_SP: [[u8; 10]; 10] = [
    [5, 4, 3, 2, 1, 0, 8, 7, 6, 9],
    [2, 3, 4, 5, 0, 1, 8, 6, 7, 9],
    [1, 0, 5, 4, 3, 2, 7, 6, 8, 9],
    [4, 5, 0, 1, 2, 3, 7, 8, 6, 9],
    [3, 2, 1, 0, 5, 4, 6, 8, 7, 9],
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
];

const PETERSEN_MP: [[u8; 10]; 10] = [
    [5, 4, 3, 2, 1, 0, 8, 7, 6, 9],
    [2, 3, 4, 5, 0, 1, 8, 6, 7, 9],
    [1, 0, 5, 4, 3, 2, 7, 6, 8, 9],
    [4, 5, 0, 1, 2, 3, 7, 8, 6, 9],
    [3, 2, 1, 0, 5, 4, 6, 8, 7, 9],
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [6, 6, 6, 6, 6, 6, 9, 9, 9, 9],
    [7, 7, 7, 7, 7, 7, 9, 9, 9, 9],
    [8, 8, 8, 8, 8, 8, 9, 9, 9, 9],
    [9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
];

const DODECAHEDRON_M: [[u8; 20]; 20] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19],
    [1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 16, 18, 17, 19, 12, 14, 13, 15],
    [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 17, 18, 16, 19, 13, 14, 12, 15],
    [3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 13, 12, 14, 15, 17, 16, 18, 19],
    [4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 14, 12, 13, 15, 18, 16, 17, 19],
    [5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 18, 17, 16, 19, 14, 13, 12, 15],
    [6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 16, 17, 18, 19, 12, 13, 14, 15],
    [7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 12, 14, 13, 15, 16, 18, 17, 19],
    [8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 13, 14, 12, 15, 17, 18, 16, 19],
    [9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 17, 16, 18, 19, 13, 12, 14, 15],
    [10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 18, 16, 17, 19, 14, 12, 13, 15],
    [11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 14, 13, 12, 15, 18, 17, 16, 19],
    [12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 15, 15, 15, 15, 15, 15, 15, 15],
    [13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 15, 15, 15, 15, 15, 15, 15, 15],
    [14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 15, 15, 15, 15, 15, 15, 15, 15],
    [15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15],
    [16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 19, 19, 19, 19, 19, 19, 19, 19],
    [17, 17, 17, 17, 17, 17, 17, 17, 17, 17, 17, 17, 19, 19, 19, 19, 19, 19, 19, 19],
    [18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 19, 19, 19, 19, 19, 19, 19, 19],
    [19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19],
];
