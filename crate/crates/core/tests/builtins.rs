use sally_hilbert::classify::{classify, Status};
use sally_hilbert::problem::{builtin_example, BuiltinParams, ProblemSpec, BUILTIN_NAMES};
use sally_hilbert::report::{emit_report, Format};

fn params(m: usize, d: Option<usize>, lambda: &[usize]) -> BuiltinParams {
    BuiltinParams {
        m: Some(m),
        d,
        lambda: lambda.to_vec(),
    }
}

#[test]
fn every_builtin_round_trips_through_json() {
    let cases = [
        ("ex32", params(0, None, &[])),
        ("ex32", params(2, None, &[])),
        ("sec5", params(1, Some(1), &[])),
        ("sec5", params(4, Some(2), &[3, 4])),
    ];
    for (name, p) in cases {
        assert!(BUILTIN_NAMES.contains(&name));
        let spec = builtin_example(name, &p).unwrap();
        let again = ProblemSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(spec, again);
        assert_eq!(spec.to_json(), again.to_json());
    }
}

#[test]
fn sec5_with_lambda_has_expected_coefficients() {
    // e_0 = m + 2, e_1 = #Λ + 2, e_2 = 1
    let spec = builtin_example("sec5", &params(4, Some(2), &[3, 4])).unwrap();
    let a = spec.validate().unwrap().analyze().unwrap();
    assert_eq!(a.e(), &[6, 4, 1]);
    assert_eq!(a.key().a_mod_i, 3);
    assert_eq!(a.sally.r, 2);
    assert_eq!(classify(&a).status, Status::Pass);
}

#[test]
fn parameter_ideal_has_zero_sally_lengths() {
    let spec = ProblemSpec::from_json(
        r#"{"ring": {"vars": ["X", "Y"], "char": 0, "relations": []},
            "ideal_I": ["X^2", "Y^3"], "ideal_Q": ["X^2", "Y^3"], "options": {}}"#,
    )
    .unwrap();
    let a = spec.validate().unwrap().analyze().unwrap();
    let c = classify(&a);
    let json = emit_report(&spec, &a, &c, Format::Json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["sally"]["lengths"].as_array().unwrap().iter().all(|x| x == 0));
    assert_eq!(v["hilbert"]["e"], serde_json::json!([6, 0, 0]));
    assert_eq!(v["sally"]["r"], 0);
}

#[test]
fn reports_are_deterministic() {
    let spec = builtin_example("sec5", &params(2, Some(2), &[])).unwrap();
    let render = || {
        let a = spec.validate().unwrap().analyze().unwrap();
        emit_report(&spec, &a, &classify(&a), Format::Json)
    };
    assert_eq!(render(), render());
}
