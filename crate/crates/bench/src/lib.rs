//! Workloads shared by the benchmarks in `benches/`.

/// One triple per construction branch, plus a larger one.
pub const IHS_CASES: [(&str, usize, usize, usize); 8] = [
    ("c0_n3", 9, 7, 4),
    ("c0_11", 13, 9, 8),
    ("c1", 13, 11, 5),
    ("c1_97", 9, 7, 13),
    ("c3_m3", 11, 11, 7),
    ("c3_m1", 13, 9, 11),
    ("c3_77", 7, 7, 31),
    ("large", 19, 19, 28),
];

/// Quadruples built end to end.
pub const HEFFTER_CASES: [(usize, usize, usize, usize); 3] = [(28, 36, 9, 7), (36, 28, 7, 9), (44, 56, 14, 11)];
