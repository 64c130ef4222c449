macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(parse_polynomials, "parse_polynomials.rs");
example!(monomial_colength, "monomial_colength.rs");
example!(local_engine, "local_engine.rs");
example!(hilbert_polynomial, "hilbert_polynomial.rs");
example!(sally_module, "sally_module.rs");
example!(classify_example, "classify_example.rs");
example!(family_identities, "family_identities.rs");
example!(json_report, "json_report.rs");
example!(selftest_catalog, "selftest_catalog.rs");

#[test]
fn parse_polynomials_runs() {
    parse_polynomials::run_example().unwrap();
}

#[test]
fn monomial_colength_runs() {
    monomial_colength::run_example().unwrap();
}

#[test]
fn local_engine_runs() {
    local_engine::run_example().unwrap();
}

#[test]
fn hilbert_polynomial_runs() {
    hilbert_polynomial::run_example().unwrap();
}

#[test]
fn sally_module_runs() {
    sally_module::run_example().unwrap();
}

#[test]
fn classify_example_runs() {
    classify_example::run_example().unwrap();
}

#[test]
fn family_identities_runs() {
    family_identities::run_example().unwrap();
}

#[test]
fn json_report_runs() {
    json_report::run_example().unwrap();
}

#[test]
fn selftest_catalog_runs() {
    selftest_catalog::run_example().unwrap();
}
