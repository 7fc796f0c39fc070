//! Binding helpers directly, then the registered module through an embedded interpreter.

use moonshine_py::{
    cusps_impl, del_pezzo_impl, report_impl, series_impl, series_ints_impl, verify_impl,
};
use pyo3::prelude::*;
use pyo3::types::{IntoPyDict, PyModule};

#[test]
fn helpers_match_the_engine() {
    assert_eq!(cusps_impl("2+").unwrap(), vec![("2+".to_string(), 1, 3)]);
    assert_eq!(cusps_impl("8|4").unwrap().len(), 2);
    assert!(cusps_impl("x").is_err());
    let (offset, coeffs) = series_impl("j", 4).unwrap();
    assert_eq!(offset, "-1");
    assert_eq!(coeffs, ["1", "744", "196884", "21493760"]);
    let ints = series_ints_impl("t3a", 5).unwrap();
    assert_eq!(
        ints.iter().map(ToString::to_string).collect::<Vec<_>>(),
        ["1", "0", "783", "8672", "65367"]
    );
    assert!(series_impl("nope", 4).is_err());
    assert_eq!(del_pezzo_impl(3, false).unwrap().len(), 27);
    assert_eq!(del_pezzo_impl(1, true).unwrap().len(), 240);
    assert!(del_pezzo_impl(0, false).is_err());
}

#[test]
fn reports_through_helpers() {
    let r = verify_impl("baby", None).unwrap();
    assert!(r.passed());
    assert!(verify_impl("nope", None).is_err());
    let missing = std::env::temp_dir().join("moonshine-py-missing-data");
    assert!(verify_impl("all", Some(missing)).is_err());
    assert!(report_impl(None, "xml").is_err());
}

#[test]
fn module_functions_from_python() {
    pyo3::prepare_freethreaded_python();
    Python::with_gil(|py| {
        let m = PyModule::new_bound(py, "moonshine_py").unwrap();
        moonshine_py::register(&m).unwrap();
        let got: Vec<(String, u64, u64)> = m
            .getattr("cusps")
            .unwrap()
            .call1(("2+",))
            .unwrap()
            .extract()
            .unwrap();
        assert_eq!(got, vec![("2+".to_string(), 1, 3)]);
        let j = m.getattr("series_ints").unwrap().call1(("j", 5)).unwrap();
        let total: u64 = py
            .eval_bound("sum(xs)", None, Some(&[("xs", j)].into_py_dict_bound(py)))
            .unwrap()
            .extract()
            .unwrap();
        assert_eq!(total, 1 + 744 + 196884 + 21493760 + 864299970);
        let primes: Vec<u64> = m
            .getattr("supersingular_primes")
            .unwrap()
            .call1((200,))
            .unwrap()
            .extract()
            .unwrap();
        assert_eq!(primes.len(), 15);
        let err = m.getattr("cusps").unwrap().call1(("7|2+",)).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        let err = m
            .getattr("gamma0_cusp_count")
            .unwrap()
            .call1((0,))
            .unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
    });
}
