//! Reference data: tree statistics for the avoidance trees at known and
//! conjectured thresholds, and the threshold values themselves.

use crate::error::Result;
use crate::exponent::Exponent;
use crate::search::TreeStats;
use crate::spec::{FreenessSpec, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    /// Seconds in total.
    Fast,
    /// More than half a million internal nodes; opt-in.
    Slow,
}

impl Tier {
    pub fn as_str(self) -> &'static str {
        match self {
            Tier::Fast => "fast",
            Tier::Slow => "slow",
        }
    }
}

/// Expected statistics of one avoidance tree. Fields that were not
/// tabulated are `None` and are not compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub k: usize,
    pub min_period: usize,
    pub alpha: (u64, u64),
    pub leaves: Option<u64>,
    pub internal: u64,
    pub height: usize,
    pub max_len: Option<usize>,
    pub max_count: Option<u64>,
    pub lex_least: Option<&'static str>,
    pub tier: Tier,
}

#[allow(clippy::too_many_arguments)]
const fn row(
    k: usize,
    min_period: usize,
    alpha: (u64, u64),
    leaves: u64,
    internal: u64,
    height: usize,
    max_count: u64,
    lex_least: &'static str,
    tier: Tier,
) -> TableRow {
    TableRow {
        k,
        min_period,
        alpha,
        leaves: Some(leaves),
        internal,
        height,
        max_len: Some(height - 1),
        max_count: Some(max_count),
        lex_least: Some(lex_least),
        tier,
    }
}

use Tier::{Fast, Slow};

/// Avoidance trees for `(α, ℓ)`-repetitions at the tabulated thresholds.
pub const TREE_STATS: &[TableRow] = &[
    row(2, 1, (2, 1), 8, 7, 4, 2, "010", Fast),
    row(2, 2, (2, 1), 478, 477, 19, 2, "010011000111001101", Fast),
    row(
        2,
        3,
        (8, 5),
        5196,
        5195,
        34,
        12,
        "001100001010111100001110101000110",
        Fast,
    ),
    row(
        2,
        4,
        (3, 2),
        13680,
        13679,
        54,
        4,
        "01110010010111100000110110100100111110000010110110001",
        Fast,
    ),
    row(
        2,
        5,
        (7, 5),
        40642,
        40641,
        60,
        4,
        "00111010101000001111110010001011101100000011111010101000001",
        Fast,
    ),
    row(
        2,
        6,
        (4, 3),
        21476,
        21475,
        40,
        4,
        "000110101101000000011111110101001000110",
        Fast,
    ),
    row(
        2,
        7,
        (9, 7),
        81368,
        81367,
        65,
        4,
        "0001111011100000001010101011111111001001001011011011000000001010",
        Fast,
    ),
    row(
        3,
        1,
        (7, 4),
        6393,
        3196,
        39,
        18,
        "01020121021201021012021020121021201020",
        Fast,
    ),
    row(
        3,
        2,
        (3, 2),
        11655,
        5827,
        31,
        6,
        "012002112201100221120011022012",
        Fast,
    ),
    row(
        3,
        3,
        (4, 3),
        4037361,
        2018680,
        228,
        6,
        concat!(
            "012121000111222010121200022210102021112220001212020111000",
            "212101022200011120201012221110202121000111222010121200022",
            "211120201012220001110202121000222010121200011122210102021",
            "11000121202011122200021210102221112020101222000111020201",
        ),
        Slow,
    ),
    row(
        3,
        4,
        (5, 4),
        188247,
        94123,
        63,
        24,
        "00102202111100001221210200201111222210010120220211100001212210",
        Fast,
    ),
    row(
        3,
        5,
        (6, 5),
        493653,
        246826,
        63,
        12,
        "01011121200000222221110102020212121000001111122022002101210120",
        Fast,
    ),
    row(
        3,
        6,
        (7, 6),
        782931,
        391465,
        60,
        24,
        "00001211212102020220111111000000212212120101011022222200001",
        Fast,
    ),
    row(
        3,
        7,
        (8, 7),
        2881125,
        1440562,
        68,
        24,
        "0000111111122202020101010121212120000000222222211011010012020212021",
        Slow,
    ),
    row(
        4,
        1,
        (7, 5),
        709036,
        236345,
        122,
        48,
        concat!(
            "012031021301231032013021031230132031021301203210231201302",
            "1032012310213203123013210231203213012310320130210312301",
            "320310230",
        ),
        Fast,
    ),
    row(4, 2, (5, 4), 10324, 3441, 17, 24, "0112330022110332", Fast),
    row(
        4,
        3,
        (6, 5),
        153724,
        51241,
        24,
        96,
        "01012333000222111332001",
        Fast,
    ),
    row(
        4,
        4,
        (7, 6),
        2501620,
        833873,
        35,
        24,
        "0010122223033111100002212333301011",
        Slow,
    ),
    row(
        4,
        5,
        (8, 7),
        30669148,
        10223049,
        40,
        864,
        "001012222230331111100000221233333010101",
        Slow,
    ),
    row(5, 1, (5, 4), 1785, 446, 7, 120, "012340", Fast),
    row(
        5,
        2,
        (6, 5),
        453965,
        113491,
        23,
        240,
        "0122344002114332204413",
        Fast,
    ),
    row(
        5,
        3,
        (8, 7),
        7497345,
        1874336,
        34,
        720,
        "010123234440002111433322204041312",
        Slow,
    ),
    row(6, 1, (6, 5), 13386, 2677, 8, 720, "0123450", Fast),
    row(
        6,
        2,
        (8, 7),
        3159066,
        631813,
        21,
        1440,
        "01233455002211443052",
        Slow,
    ),
    row(7, 1, (7, 6), 112441, 18740, 9, 5040, "01234560", Fast),
    row(8, 1, (8, 7), 1049448, 149921, 10, 40320, "012345670", Fast),
    // finite tree at 1.2608 = 788/625 with minimum period 8; only the height
    // and internal node count were reported
    TableRow {
        k: 2,
        min_period: 8,
        alpha: (788, 625),
        leaves: None,
        internal: 53699993,
        height: 195,
        max_len: None,
        max_count: None,
        lex_least: None,
        tier: Slow,
    },
];

/// One field of a [`TableRow`] that disagreed with a computed tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
}

impl TableRow {
    pub fn spec(&self) -> FreenessSpec {
        let alpha = Exponent::new(self.alpha.0, self.alpha.1).expect("tabulated exponent");
        FreenessSpec::new(alpha, self.min_period, Mode::Geq).expect("tabulated spec")
    }

    /// Label in the `k,ℓ,alpha` form accepted by [`TableRow::matches`].
    pub fn label(&self) -> String {
        format!(
            "{},{},{}/{}",
            self.k, self.min_period, self.alpha.0, self.alpha.1
        )
    }

    /// Matches a `"k,ℓ,alpha"` selector; `alpha` may be a fraction or a
    /// decimal and is compared exactly.
    pub fn matches(&self, selector: &str) -> Result<bool> {
        let parts: Vec<&str> = selector.split(',').map(str::trim).collect();
        let bad = || crate::error::Error::BadSpec(selector.to_string());
        let [k, l, a] = parts.as_slice() else {
            return Err(bad());
        };
        let k: usize = k.parse().map_err(|_| bad())?;
        let l: usize = l.parse().map_err(|_| bad())?;
        let a: Exponent = a.parse()?;
        Ok(k == self.k && l == self.min_period && &a == self.spec().alpha())
    }

    /// Compares every tabulated field exactly.
    pub fn compare(&self, s: &TreeStats) -> Vec<Mismatch> {
        let mut out = Vec::new();
        let mut check = |field, expected: Option<String>, actual: String| {
            if let Some(expected) = expected {
                if expected != actual {
                    out.push(Mismatch {
                        field,
                        expected,
                        actual,
                    });
                }
            }
        };
        check("k", Some(self.k.to_string()), s.k.to_string());
        check(
            "leaves",
            self.leaves.map(|x| x.to_string()),
            s.leaves.to_string(),
        );
        check(
            "internal",
            Some(self.internal.to_string()),
            s.internal.to_string(),
        );
        check(
            "height",
            Some(self.height.to_string()),
            s.height.to_string(),
        );
        check(
            "max_len",
            self.max_len.map(|x| x.to_string()),
            s.max_len.to_string(),
        );
        check(
            "max_count",
            self.max_count.map(|x| x.to_string()),
            s.max_count.to_string(),
        );
        check(
            "lex_least",
            self.lex_least.map(str::to_string),
            s.lex_least.to_string(),
        );
        out
    }
}

/// A threshold value of `R(k, ℓ)`, either proved or only conjectured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub k: usize,
    pub min_period: usize,
    pub alpha: (u64, u64),
    pub proved: bool,
}

const fn t(k: usize, min_period: usize, num: u64, den: u64, proved: bool) -> Threshold {
    Threshold {
        k,
        min_period,
        alpha: (num, den),
        proved,
    }
}

/// Known and conjectured thresholds. Conjectured entries are data only.
pub const THRESHOLDS: &[Threshold] = &[
    t(2, 1, 2, 1, true),
    t(2, 2, 2, 1, true),
    t(2, 3, 8, 5, false),
    t(2, 4, 3, 2, false),
    t(2, 5, 7, 5, false),
    t(2, 6, 4, 3, false),
    t(2, 7, 9, 7, false),
    t(3, 1, 7, 4, true),
    t(3, 2, 3, 2, true),
    t(3, 3, 4, 3, false),
    t(3, 4, 5, 4, false),
    t(3, 5, 6, 5, false),
    t(3, 6, 7, 6, false),
    t(3, 7, 8, 7, false),
    t(4, 1, 7, 5, true),
    t(4, 2, 5, 4, false),
    t(4, 3, 6, 5, false),
    t(4, 4, 7, 6, false),
    t(5, 1, 5, 4, true),
    t(5, 2, 6, 5, false),
    t(5, 3, 8, 7, false),
    t(6, 1, 6, 5, true),
    t(6, 2, 8, 7, false),
    t(7, 1, 7, 6, true),
    t(8, 1, 8, 7, true),
    t(9, 1, 9, 8, true),
    t(10, 1, 10, 9, true),
    t(11, 1, 11, 10, true),
    t(12, 1, 12, 11, false),
    t(13, 1, 13, 12, false),
];

impl Threshold {
    /// Spec in the given mode at this threshold.
    pub fn spec(&self, mode: Mode) -> FreenessSpec {
        let alpha = Exponent::new(self.alpha.0, self.alpha.1).expect("tabulated exponent");
        FreenessSpec::new(alpha, self.min_period, mode).expect("tabulated spec")
    }
}
