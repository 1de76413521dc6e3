//! The documented CLI invocations and their expected results.

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    /// Substring required on standard error.
    pub stderr: Option<&'static str>,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case {
        name,
        args,
        code,
        stderr: None,
    }
}

const fn case_err(
    name: &'static str,
    args: &'static [&'static str],
    code: i32,
    stderr: &'static str,
) -> Case {
    Case {
        name,
        args,
        code,
        stderr: Some(stderr),
    }
}

pub const CASES: &[Case] = &[
    case(
        "solve_a_zero",
        &["solve", "tests/data/solve_a_zero.json"],
        0,
    ),
    case(
        "solve_scalar_unique",
        &["solve", "tests/data/solve_scalar_unique.json"],
        0,
    ),
    case(
        "solve_scalar_unique_text",
        &[
            "solve",
            "tests/data/solve_scalar_unique.json",
            "--format",
            "text",
        ],
        0,
    ),
    case(
        "solve_scalar_nonunique",
        &["solve", "tests/data/solve_scalar_nonunique.json"],
        0,
    ),
    case_err(
        "solve_inconsistent",
        &["solve", "tests/data/solve_inconsistent.json"],
        4,
        "inconsistent real system",
    ),
    case_err(
        "solve_shape_mismatch",
        &["solve", "tests/data/solve_shape_mismatch.json"],
        3,
        "shape",
    ),
    case("coneig_i", &["coneig", "tests/data/i.json"], 0),
    case(
        "coneig_k_text",
        &["coneig", "tests/data/k.json", "--format", "text"],
        0,
    ),
    case("inverse_j", &["inverse", "tests/data/j.json"], 0),
    case(
        "inverse_2x2_text",
        &[
            "inverse",
            "tests/data/invertible_2x2.json",
            "--format",
            "text",
        ],
        0,
    ),
    case_err(
        "inverse_singular",
        &["inverse", "tests/data/one_plus_j.json"],
        5,
        "singular",
    ),
    case(
        "classify_2x2",
        &["classify", "tests/data/classify_2x2.json"],
        0,
    ),
    case(
        "consim_check_pass",
        &[
            "consim-check",
            "tests/data/i.json",
            "tests/data/minus_i.json",
            "tests/data/j.json",
        ],
        0,
    ),
    case(
        "consim_check_fail_text",
        &[
            "consim-check",
            "tests/data/i.json",
            "tests/data/i.json",
            "tests/data/j.json",
            "--format",
            "text",
        ],
        0,
    ),
    case_err(
        "consim_check_singular",
        &[
            "consim-check",
            "tests/data/i.json",
            "tests/data/i.json",
            "tests/data/one_plus_j.json",
        ],
        5,
        "singular",
    ),
    case("scalar_sqrt", &["scalar", "sqrt", "0", "2", "0", "0"], 0),
    case(
        "scalar_sqrt_text",
        &["scalar", "sqrt", "0", "2", "0", "0", "--format", "text"],
        0,
    ),
    case_err(
        "scalar_sqrt_real",
        &["scalar", "sqrt", "4", "0", "0", "0"],
        6,
        "real",
    ),
    case_err(
        "scalar_sqrt_zero_norm",
        &["scalar", "sqrt", "1", "0", "1", "0"],
        5,
        "zero norm",
    ),
    case_err(
        "scalar_sqrt_no_root",
        &["scalar", "sqrt", "-2", "0", "1", "0"],
        6,
        "failed verification",
    ),
    case(
        "scalar_mul",
        &["scalar", "mul", "0", "1", "0", "0", "0", "0", "1", "0"],
        0,
    ),
    case("scalar_conj", &["scalar", "conj", "1", "2", "3", "4"], 0),
    case("scalar_jconj", &["scalar", "jconj", "1", "2", "3", "4"], 0),
    case("scalar_norm", &["scalar", "norm", "1", "2", "3", "4"], 0),
    case(
        "scalar_classify_null",
        &["scalar", "classify", "1", "0", "1", "0"],
        0,
    ),
    case(
        "scalar_classify_tol",
        &[
            "scalar",
            "classify",
            "1",
            "0",
            "1.0000001",
            "0",
            "--null-tol",
            "1e-6",
        ],
        0,
    ),
    case(
        "scalar_inverse",
        &["scalar", "inverse", "1", "2", "0", "1"],
        0,
    ),
    case_err(
        "scalar_inverse_null",
        &["scalar", "inverse", "1", "0", "1", "0"],
        5,
        "zero divisor",
    ),
    case(
        "scalar_left_rep_text",
        &["scalar", "left-rep", "1", "2", "3", "4", "--format", "text"],
        0,
    ),
    case(
        "scalar_right_rep",
        &["scalar", "right-rep", "0", "1", "0", "0"],
        0,
    ),
    case(
        "scalar_consim_slice",
        &["scalar", "consim", "0", "1", "0", "0", "0", "-1", "0", "0"],
        0,
    ),
    case(
        "scalar_consim_hyperplane",
        &["scalar", "consim", "0", "1", "0", "0", "0", "1", "0", "0"],
        0,
    ),
    case(
        "scalar_consim_empty",
        &["scalar", "consim", "0", "1", "0", "0", "0", "2", "0", "0"],
        0,
    ),
    case_err(
        "scalar_consim_mixed",
        &["scalar", "consim", "0", "1", "0", "0", "0", "0", "1", "0"],
        6,
        "timelike",
    ),
    case(
        "scalar_witness",
        &["scalar", "witness", "0", "1", "0", "0"],
        0,
    ),
    case_err(
        "scalar_wrong_arity",
        &["scalar", "mul", "1", "2"],
        2,
        "expected 8",
    ),
    case_err(
        "parse_not_json",
        &["inverse", "tests/data/not_json.json"],
        2,
        "parse",
    ),
    case_err(
        "parse_bad_entry",
        &["inverse", "tests/data/bad_entry.json"],
        2,
        "parse",
    ),
    case_err(
        "shape_bad_length",
        &["inverse", "tests/data/bad_length.json"],
        3,
        "needs 4 entries",
    ),
    case_err(
        "missing_file",
        &["inverse", "tests/data/does_not_exist.json"],
        2,
        "does_not_exist",
    ),
    case_err(
        "bad_tolerance",
        &["solve", "tests/data/solve_a_zero.json", "--tol-rank", "0"],
        2,
        "positive",
    ),
    case_err("unknown_subcommand", &["frobnicate"], 2, "frobnicate"),
];
