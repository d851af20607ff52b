use std::path::PathBuf;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ffzeta").chain(args.iter().copied());
    let code = ffzeta::cli::main_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn schema(name: &str) -> jsonschema::Validator {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "..",
        "docs",
        "schemas",
        &format!("{name}.json"),
    ]
    .iter()
    .collect();
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(
        errors.is_empty(),
        "{args:?} against {name}: {errors:?}\n{out}"
    );
    v
}

#[test]
fn every_subcommand_matches_its_schema() {
    let grid: &[(&str, &[&str])] = &[
        ("field", &["field", "--q", "5"]),
        ("field", &["field", "--q", "9"]),
        ("field", &["field", "--q", "27", "--modulus", "1,2,0,1"]),
        ("poly", &["poly", "--q", "5", "--D", "T^3+T"]),
        (
            "poly",
            &["poly", "--q", "9", "--D", "T^4+1", "--chi", "T+1"],
        ),
        (
            "lpoly",
            &["lpoly", "--q", "5", "--D", "T^3+T", "--route", "both"],
        ),
        (
            "lpoly",
            &["lpoly", "--q", "7", "--D", "T^5+T+3", "--route", "charsum"],
        ),
        ("lpoly", &["lpoly", "--q", "3", "--D", "T"]),
        ("zeta", &["zeta", "--q", "5", "--D", "T^3+T", "--s", "0"]),
        (
            "zeta",
            &["zeta", "--q", "5", "--D", "T^3+T", "--s", "0.5+1.3i"],
        ),
        ("zeta", &["zeta", "--q", "9", "--D", "T^3+T", "--s", "0.5"]),
        ("classify", &["classify", "--q", "5", "--s", "0.75"]),
        ("classify", &["classify", "--q", "3", "--s", "2"]),
        ("classify", &["classify", "--q", "5", "--s", "0.3"]),
        ("classify", &["classify", "--q", "9", "--s", "0.75+0.5i"]),
        (
            "bound_report",
            &["bounds", "right-threshold", "--q", "5", "--sigma", "2"],
        ),
        (
            "bound_report",
            &["bounds", "right-threshold", "--q", "7", "--sigma", "1.1"],
        ),
        (
            "bound_report",
            &["bounds", "size", "--q", "5", "--s", "-1", "--B", "2"],
        ),
        (
            "bounds_genus_cap",
            &["bounds", "genus-cap", "--q", "9", "--s", "0", "--B", "10"],
        ),
        (
            "bounds_hasse",
            &["bounds", "hasse", "--q", "5", "--g", "2", "--u", "0.2+0.1i"],
        ),
        (
            "bounds_moment_threshold",
            &["bounds", "moment-threshold", "--q", "5", "--s", "2"],
        ),
        (
            "northcott",
            &[
                "northcott",
                "--q",
                "5",
                "--s",
                "1",
                "--B",
                "1",
                "--genus-max",
                "1",
            ],
        ),
        (
            "northcott",
            &[
                "northcott",
                "--q",
                "5",
                "--s",
                "-2",
                "--B",
                "100",
                "--dedupe",
                "affine_orbit",
            ],
        ),
        (
            "northcott",
            &[
                "northcott",
                "--q",
                "5",
                "--s",
                "0.5",
                "--B",
                "1",
                "--genus-max",
                "1",
                "--dedupe",
                "by-lpolynomial",
            ],
        ),
        (
            "central_zeros",
            &["central-zeros", "--q", "5", "--max-deg", "3"],
        ),
        (
            "central_zeros",
            &["central-zeros", "--q", "9", "--max-deg", "3"],
        ),
        (
            "moments",
            &["moments", "--q", "5", "--g", "1", "--alpha", "0.25"],
        ),
        (
            "moments_verify_afe",
            &[
                "moments",
                "verify-afe",
                "--q",
                "5",
                "--D",
                "T^3+T",
                "--alpha",
                "0.25",
            ],
        ),
        (
            "moments_c_alpha",
            &["moments", "c-alpha", "--q", "5", "--alpha", "0.25+0.1i"],
        ),
        (
            "moments_predict",
            &[
                "moments", "predict", "--q", "5", "--g", "2", "--alpha1", "0.25", "--alpha2", "0.1",
            ],
        ),
    ];
    for (name, args) in grid {
        assert_valid(name, args);
    }
}

#[test]
fn documented_examples() {
    let v = assert_valid("classify", &["classify", "--q", "5", "--s", "0.75"]);
    assert_eq!(v["kind"], "NonNorthcottAllB");
    assert_eq!(v["provenance"], "e");
    let v = assert_valid("lpoly", &["lpoly", "--q", "5", "--D", "T^3+T"]);
    assert_eq!(v["L"], serde_json::json!([1, -2, 5]));
    assert_eq!(v["h"], 4);
    let v = assert_valid(
        "bound_report",
        &["bounds", "right-threshold", "--q", "5", "--sigma", "2"],
    );
    assert_eq!(v["exact"], "625/384");
}

#[test]
fn northcott_csv_columns() {
    let (code, out, _) = run(&[
        "--format",
        "csv",
        "northcott",
        "--q",
        "5",
        "--s",
        "1",
        "--B",
        "1",
        "--genus-max",
        "3",
        "--dedupe",
        "affine-orbit",
    ]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("D,genus,h,order,abs_leading,in_S"));
    assert!(lines.count() > 0);
}

#[test]
fn empty_result_gives_header_only_csv() {
    let (code, out, err) = run(&[
        "--format",
        "csv",
        "central-zeros",
        "--q",
        "5",
        "--max-deg",
        "3",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "D,value,property\n");
}

#[test]
fn bounds_list_csv() {
    let (code, out, _) = run(&[
        "--format", "csv", "bounds", "--list", "--q", "5,9", "--g", "1,2", "--sigma", "2,3",
    ]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[0], "calculator");
    assert!(header.iter().any(|h| h == "log_value"));
    let rows = rdr.records().map(Result::unwrap).count();
    assert!(rows > 10);
}

#[test]
fn exit_codes() {
    let (code, out, err) = run(&["field", "--q", "6"]);
    assert_eq!(code, 2, "{out}");
    assert!(!err.is_empty());

    let (code, _, _) = run(&["lpoly", "--q", "5", "--D", "T^3+*T"]);
    assert_eq!(code, 2);

    let (code, out, err) = run(&["lpoly", "--q", "5", "--D", "T^3"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(schema("error").is_valid(&v));
    assert_eq!(v["error"]["code"], "NotSquarefree");

    let (code, out, _) = run(&[
        "--budget",
        "10",
        "northcott",
        "--q",
        "5",
        "--s",
        "1",
        "--B",
        "1",
        "--genus-max",
        "2",
    ]);
    assert_eq!(
        code, 0,
        "budget exhaustion in northcott yields a partial report"
    );
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["complete_within_scope"], false);

    let (code, out, _) = run(&[
        "--budget", "10", "moments", "--q", "5", "--g", "2", "--alpha", "0.25",
    ]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], "BudgetExceeded");
}

#[test]
fn thread_count_does_not_change_output() {
    for args in [
        &["lpoly", "--q", "7", "--D", "T^5+T+3", "--route", "both"][..],
        &[
            "northcott",
            "--q",
            "5",
            "--s",
            "0.75",
            "--B",
            "2",
            "--genus-max",
            "2",
        ],
        &["moments", "--q", "5", "--g", "2", "--alpha", "0.3"],
    ] {
        let one: Vec<&str> = ["--threads", "1"].iter().chain(args).copied().collect();
        let many: Vec<&str> = ["--threads", "6"].iter().chain(args).copied().collect();
        assert_eq!(run(&one).1, run(&many).1, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ffzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("field.json");
    let (code, out, _) = run(&["--out", path.to_str().unwrap(), "field", "--q", "25"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["q"], 25);
    std::fs::remove_dir_all(dir).unwrap();
}
