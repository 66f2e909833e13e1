//! Explicit sets printed in the literature, embedded as cycle-notation text.
//!
//! Points are 1-based and `()` is the identity.

/// Maximum cliques of the full graph on `Sym(n)` for n = 5, 6, 7.
pub const MAXIMUM_CLIQUES: &[(usize, &[&str])] = &[
    (
        5,
        &[
            "()",
            "(1,2,3,4,5)",
            "(1,2,4,5,3)",
            "(1,2,5,3,4)",
            "(1,3,5,4,2)",
            "(1,3,2,5,4)",
            "(1,3,4,2,5)",
            "(1,4,3,5,2)",
            "(1,4,5,2,3)",
            "(1,4,2,3,5)",
            "(1,5,4,3,2)",
            "(1,5,2,4,3)",
            "(1,5,3,2,4)",
        ],
    ),
    (
        6,
        &[
            "()",
            "(3,4)",
            "(3,5,4)",
            "(3,6,4)",
            "(2,4,3)",
            "(1,4,3)",
            "(1,2,3,4,6,5)",
            "(1,2,5,3,4,6)",
            "(1,2,6,5,3,4)",
            "(1,3,4,5,6,2)",
            "(1,3,4,2,5,6)",
            "(1,3,4,6,2,5)",
            "(1,5,6,3,4,2)",
            "(1,5,2,6,3,4)",
            "(1,5,3,4,2,6)",
            "(1,6,3,4,5,2)",
            "(1,6,5,2,3,4)",
            "(1,6,2,3,4,5)",
        ],
    ),
    (
        7,
        &[
            "()",
            "(4,5)",
            "(2,4,3)",
            "(2,4)",
            "(2,4,6)",
            "(2,4,7)",
            "(2,5,3)",
            "(2,5,6)",
            "(2,5,7)",
            "(1,2,5)",
            "(1,3,6,7,5,4,2)",
            "(1,3,5,4,2,6,7)",
            "(1,3,7,5,4,2,6)",
            "(1,4,5)",
            "(1,5,4,2,3,7,6)",
            "(1,5,4,2,6,3,7)",
            "(1,5,4,2,7,6,3)",
            "(1,6,7,3,5,4,2)",
            "(1,6,5,4,2,7,3)",
            "(1,6,3,5,4,2,7)",
            "(1,7,3,6,5,4,2)",
            "(1,7,6,5,4,2,3)",
            "(1,7,5,4,2,3,6)",
        ],
    ),
];

/// One representative per similarity class of maximum 3-cycle cliques.
pub const THREE_CYCLE_CLIQUES: &[(usize, &[&[&str]])] = &[
    (3, &[&["(1,2,3)"]]),
    (4, &[&["(2,3,4)", "(1,4,2)"], &["(2,3,4)", "(2,4,3)"]]),
    (
        5,
        &[
            &["(2,5,3)", "(2,5,4)", "(1,2,5)", "(1,3,4)", "(1,4,3)"],
            &["(3,4,5)", "(2,3,4)", "(1,2,3)", "(1,2,5)", "(1,4,5)"],
        ],
    ),
    (
        6,
        &[
            &[
                "(3,5,6)", "(2,4,5)", "(2,5,4)", "(2,6,3)", "(1,3,2)", "(1,3,5)", "(1,4,6)", "(1,6,4)",
            ],
            &[
                "(4,5,6)", "(4,6,5)", "(2,3,4)", "(2,3,5)", "(2,3,6)", "(1,3,4)", "(1,3,5)", "(1,3,6)",
            ],
            &[
                "(4,5,6)", "(4,6,5)", "(2,3,4)", "(2,3,5)", "(2,3,6)", "(1,3,4)", "(1,3,5)", "(1,6,2)",
            ],
            &[
                "(4,5,6)", "(4,6,5)", "(2,3,4)", "(2,3,5)", "(2,3,6)", "(1,3,4)", "(1,5,2)", "(1,6,2)",
            ],
            &[
                "(4,5,6)", "(4,6,5)", "(2,3,4)", "(2,3,5)", "(2,3,6)", "(1,4,2)", "(1,5,2)", "(1,6,2)",
            ],
            &[
                "(4,5,6)", "(4,6,5)", "(2,3,4)", "(2,4,3)", "(1,2,5)", "(1,3,6)", "(1,5,2)", "(1,6,3)",
            ],
        ],
    ),
    (
        7,
        &[&[
            "(4,6,7)", "(4,7,6)", "(3,4,5)", "(3,5,4)", "(2,3,7)", "(2,5,6)", "(2,6,5)", "(2,7,3)", "(1,2,4)",
            "(1,3,6)", "(1,4,2)", "(1,5,7)", "(1,6,3)", "(1,7,5)",
        ]],
    ),
    (
        8,
        &[
            &[
                "(6,7,8)", "(5,6,7)", "(4,6,7)", "(3,4,6)", "(3,5,6)", "(3,8,6)", "(2,3,7)", "(2,4,6)", "(2,5,6)",
                "(2,7,3)", "(2,8,6)", "(1,6,2)", "(1,6,3)", "(1,6,7)",
            ],
            &[
                "(6,7,8)", "(6,8,7)", "(4,5,6)", "(4,5,7)", "(4,5,8)", "(3,6,4)", "(3,7,4)", "(3,8,4)", "(2,6,4)",
                "(2,7,4)", "(2,8,4)", "(1,6,4)", "(1,7,4)", "(1,8,4)",
            ],
            &[
                "(6,7,8)", "(6,8,7)", "(4,5,6)", "(4,6,5)", "(3,4,7)", "(3,5,8)", "(3,7,4)", "(3,8,5)", "(2,3,6)",
                "(2,4,8)", "(2,5,7)", "(2,6,3)", "(2,7,5)", "(2,8,4)",
            ],
        ],
    ),
    (
        9,
        &[
            &[
                "(2,3,5)", "(2,3,6)", "(2,4,5)", "(2,4,6)", "(2,7,5)", "(2,7,6)", "(2,8,5)", "(2,8,6)", "(2,9,5)",
                "(2,9,6)", "(1,2,3)", "(1,2,4)", "(1,2,7)", "(1,2,8)", "(1,2,9)", "(1,5,6)", "(1,6,5)",
            ],
            &[
                "(7,8,9)", "(7,9,8)", "(5,6,7)", "(5,6,8)", "(5,6,9)", "(4,6,7)", "(4,6,8)", "(4,6,9)", "(3,6,7)",
                "(3,6,8)", "(3,6,9)", "(2,6,7)", "(2,6,8)", "(2,6,9)", "(1,6,7)", "(1,6,8)", "(1,6,9)",
            ],
        ],
    ),
    (
        10,
        &[
            &[
                "(5,6,7)", "(5,8,7)", "(5,9,7)", "(5,10,7)", "(4,6,7)", "(4,8,7)", "(4,9,7)", "(4,10,7)", "(3,6,7)",
                "(3,8,7)", "(3,9,7)", "(2,10,7)", "(1,7,2)", "(1,7,3)", "(3,10,7)", "(2,6,7)", "(2,8,7)", "(2,9,7)",
                "(1,7,4)", "(1,7,5)",
            ],
            &[
                "(8,9,10)", "(8,10,9)", "(6,7,8)", "(6,7,9)", "(6,7,10)", "(5,7,8)", "(5,7,9)", "(5,7,10)", "(4,7,8)",
                "(4,7,9)", "(4,7,10)", "(3,7,8)", "(3,7,9)", "(3,7,10)", "(2,7,8)", "(2,7,9)", "(2,7,10)", "(1,7,8)",
                "(1,7,9)", "(1,7,10)",
            ],
            &[
                "(8,9,10)", "(8,10,9)", "(6,7,8)", "(6,7,9)", "(6,7,10)", "(5,8,6)", "(5,9,6)", "(5,10,6)", "(4,8,6)",
                "(4,9,6)", "(4,10,6)", "(3,8,6)", "(3,9,6)", "(3,10,6)", "(2,8,6)", "(2,9,6)", "(2,10,6)", "(1,8,6)",
                "(1,9,6)", "(1,10,6)",
            ],
            &[
                "(8,9,10)", "(7,8,9)", "(6,7,8)", "(6,10,8)", "(5,7,8)", "(5,10,8)", "(4,7,8)", "(4,10,8)", "(3,7,8)",
                "(3,10,8)", "(2,8,3)", "(2,8,4)", "(2,8,5)", "(2,8,6)", "(2,8,9)", "(1,8,3)", "(1,8,4)", "(1,8,5)",
                "(1,8,6)", "(1,8,9)",
            ],
        ],
    ),
    (
        11,
        &[&[
            "(7,11,8)",
            "(7,11,9)",
            "(7,11,10)",
            "(6,8,7)",
            "(6,9,7)",
            "(6,10,7)",
            "(5,8,7)",
            "(5,9,7)",
            "(5,10,7)",
            "(4,7,5)",
            "(4,7,6)",
            "(4,7,11)",
            "(3,4,7)",
            "(3,8,7)",
            "(3,9,7)",
            "(3,10,7)",
            "(2,7,3)",
            "(2,7,5)",
            "(2,7,6)",
            "(2,7,11)",
            "(1,2,7)",
            "(1,4,7)",
            "(1,8,7)",
            "(1,9,7)",
            "(1,10,7)",
        ]],
    ),
    (
        12,
        &[
            &[
                "(4,7,5)", "(4,7,6)", "(4,7,8)", "(4,7,9)", "(4,10,5)", "(4,10,6)", "(4,10,8)", "(4,10,9)", "(4,11,5)",
                "(4,11,6)", "(4,11,8)", "(4,11,9)", "(4,12,5)", "(4,12,6)", "(4,12,8)", "(4,12,9)", "(3,4,7)",
                "(3,4,10)", "(3,4,11)", "(3,4,12)", "(2,3,4)", "(2,5,4)", "(2,6,4)", "(2,8,4)", "(2,9,4)", "(1,3,4)",
                "(1,5,4)", "(1,6,4)", "(1,8,4)", "(1,9,4)",
            ],
            &[
                "(10,11,12)",
                "(9,10,11)",
                "(8,9,10)",
                "(8,12,10)",
                "(7,9,10)",
                "(7,12,10)",
                "(6,9,10)",
                "(6,12,10)",
                "(5,9,10)",
                "(5,12,10)",
                "(4,10,5)",
                "(4,10,6)",
                "(4,10,7)",
                "(4,10,8)",
                "(4,10,11)",
                "(3,10,5)",
                "(3,10,6)",
                "(3,10,7)",
                "(3,10,8)",
                "(3,10,11)",
                "(2,10,5)",
                "(2,10,6)",
                "(2,10,7)",
                "(2,10,8)",
                "(2,10,11)",
                "(1,10,5)",
                "(1,10,6)",
                "(1,10,7)",
                "(1,10,8)",
                "(1,10,11)",
            ],
        ],
    ),
];

/// Maximum cliques among the n-cycles of `Sym(n)` for n = 5..8.
pub const FULL_CYCLE_CLIQUES: &[(usize, &[&str])] = &[
    (
        5,
        &[
            "(1,2,3,4,5)",
            "(1,2,4,5,3)",
            "(1,2,5,3,4)",
            "(1,3,2,5,4)",
            "(1,3,4,2,5)",
            "(1,3,5,4,2)",
            "(1,4,2,3,5)",
            "(1,4,5,2,3)",
            "(1,4,3,5,2)",
            "(1,5,2,4,3)",
            "(1,5,3,2,4)",
            "(1,5,4,3,2)",
        ],
    ),
    (
        6,
        &[
            "(1,6,2,3,4,5)",
            "(1,6,2,4,5,3)",
            "(1,6,2,5,3,4)",
            "(1,6,3,2,5,4)",
            "(1,6,3,4,2,5)",
            "(1,6,3,5,4,2)",
            "(1,6,4,2,3,5)",
            "(1,6,4,5,2,3)",
            "(1,6,4,3,5,2)",
            "(1,6,5,2,4,3)",
            "(1,6,5,3,2,4)",
            "(1,6,5,4,3,2)",
        ],
    ),
    (
        7,
        &[
            "(1,7,6,5,4,3,2)",
            "(1,3,7,6,5,4,2)",
            "(1,3,2,7,6,5,4)",
            "(1,5,7,6,4,3,2)",
            "(1,3,5,7,6,4,2)",
            "(1,3,2,5,7,6,4)",
            "(1,2,4,6,7,5,3)",
            "(1,4,6,7,5,2,3)",
            "(1,2,3,4,6,7,5)",
            "(1,2,4,7,5,6,3)",
            "(1,4,7,5,6,2,3)",
            "(1,2,3,4,7,5,6)",
            "(1,6,5,7,4,3,2)",
            "(1,3,6,5,7,4,2)",
            "(1,3,2,6,5,7,4)",
            "(1,2,4,5,6,7,3)",
            "(1,4,5,6,7,2,3)",
            "(1,2,3,4,5,6,7)",
        ],
    ),
    (
        8,
        &[
            "(1,2,7,4,3,6,5,8)",
            "(1,3,4,7,2,6,5,8)",
            "(1,4,3,2,7,6,5,8)",
            "(1,5,7,2,3,4,6,8)",
            "(1,5,8,7,2,3,4,6)",
            "(1,5,3,4,7,2,6,8)",
            "(1,5,8,3,4,7,2,6)",
            "(1,5,4,3,2,7,6,8)",
            "(1,5,8,4,3,2,7,6)",
            "(1,5,2,7,4,3,6,8)",
            "(1,5,8,2,7,4,3,6)",
            "(1,6,7,2,4,3,8,5)",
            "(1,6,3,4,2,7,8,5)",
            "(1,6,2,7,3,4,8,5)",
            "(1,6,4,3,7,2,8,5)",
            "(1,7,2,3,4,6,5,8)",
            "(1,8,5,6,4,3,7,2)",
            "(1,8,5,6,7,2,4,3)",
            "(1,8,6,7,2,4,3,5)",
            "(1,8,6,4,3,7,2,5)",
            "(1,8,5,6,2,7,3,4)",
            "(1,8,6,3,4,2,7,5)",
            "(1,8,5,6,3,4,2,7)",
            "(1,8,6,2,7,3,4,5)",
        ],
    ),
];

/// The identity with both orientations of the seven Fano-plane lines.
pub const FANO_CLIQUE: &[&str] = &[
    "()", "(4,6,7)", "(4,7,6)", "(3,4,5)", "(3,5,4)", "(2,3,7)", "(2,5,6)", "(2,6,5)", "(2,7,3)", "(1,2,4)", "(1,3,6)",
    "(1,4,2)", "(1,5,7)", "(1,6,3)", "(1,7,5)",
];

/// A maximum independent set of `Sym(5)` with elements of both parities.
pub const MIXED_PARITY_SET: &[&str] = &["()", "(1,2,3)(4,5)", "(2,3,5)(1,4)", "(1,5)(2,4)"];

/// Generators of the independent subgroup of order 216 in `Sym(9)`.
pub const ORDER_216_GENERATORS: &[&str] = &[
    "(4,6,8)(5,7,9)",
    "(2,3)(4,5,6,7,8,9)",
    "(2,4,3,7)(5,9,8,6)",
    "(1,2)(4,5,8,9,6,7)",
];

/// A maximum independent set of `Sym(7)` with 40 elements, as printed.
pub const SEVEN_POINT_INDEPENDENT_SET: &[&str] = &[
    "()",
    "(1,3)(4,2)",
    "(1,4)(3,2)",
    "(1,2)(3,4)",
    "(1,2)(5,6)",
    "(1,4,2,3)(5,6)",
    "(1,3,2,4)(5,6)",
    "(3,4)(5,6)",
    "(1,3)(5,7)",
    "(2,4)(5,7)",
    "(1,2,3,4)(5,7)",
    "(1,4,3,2)(5,7)",
    "(1,4)(6,7)",
    "(1,2,4,3)(6,7)",
    "(2,3)(6,7)",
    "(1,3,4,2)(6,7)",
    "(6,5,7)(3,2,4)",
    "(1,3,2)(6,7,5)",
    "(1,4,3)(6,7,5)",
    "(1,2,4)(6,7,5)",
    "(6,7,5)(3,4,2)",
    "(1,3,4)(6,5,7)",
    "(1,4,2)(6,5,7)",
    "(1,2,3)(6,5,7)",
    "(1,5)(2,6)(3,7)",
    "(1,5,3,7)(6,4,2)",
    "(1,5,4)(6,3,7,2)",
    "(1,5,2,6)(3,7,4)",
    "(1,6)(2,5)(4,7)",
    "(1,6,3)(4,7,2,5)",
    "(1,6,4,7)(3,2,5)",
    "(1,6,2,5)(3,4,7)",
    "(1,7)(3,5)(4,6)",
    "(1,7,3,5)(6,2,4)",
    "(1,7,4,6)(3,5,2)",
    "(1,7,2)(6,3,5,4)",
    "(3,6)(4,5)(2,7)",
    "(1,3,6)(4,5,2,7)",
    "(1,4,5)(6,2,7,3)",
    "(1,2,7)(6,4,5,3)",
];

/// The Klein four-group on four points.
pub const KLEIN: &[&str] = &["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"];
