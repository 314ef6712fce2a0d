use std::collections::BTreeMap;

use verma_py::{character_coeffs, run_job, subsingular_text, tensor_verdict, u_prime_text};

#[test]
fn u_prime_rows() {
    assert_eq!(u_prime_text(1).unwrap(), "W(-1).v");
    assert_eq!(u_prime_text(2).unwrap(), "(W(-2) - 3/(4*hW) W(-1)^2).v");
}

#[test]
fn subsingular_p1() {
    assert_eq!(subsingular_text(1, 2).unwrap().unwrap(), "(L(-1)^2 + 6/c W(-2)).v");
}

#[test]
fn characters() {
    let ch = character_coeffs("0", Some(1), Some(1), 5).unwrap();
    assert_eq!(ch["V"], vec![1, 2, 5, 10, 20, 36]);
    assert_eq!(ch["L'"], vec![1, 1, 3, 5, 10, 16]);
    assert!(ch.contains_key("L"));
}

#[test]
fn tensor() {
    assert_eq!(tensor_verdict("1", "17/8", "-1/8", "1/2", "0").unwrap(), "Irreducible");
    assert_eq!(tensor_verdict("1", "17/8", "-1/8", "0", "1").unwrap(), "Reducible");
}

#[test]
fn jobs() {
    let params: BTreeMap<String, String> =
        [("order", "3")].into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let out = run_job("character", params, "text").unwrap();
    assert!(out.starts_with("V: 1 + 2q + 5q^2 + 10q^3"));
    assert!(run_job("nope", BTreeMap::new(), "json").is_err());
    assert!(run_job("character", BTreeMap::new(), "yaml").is_err());
}
