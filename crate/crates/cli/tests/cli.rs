use std::process::{Command, Output};

use kleinian_core::{Algebra, AlgebraSpec, Poly, Scalar};
use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32) {
    let Output { status, stdout, .. } = Command::new(env!("CARGO_BIN_EXE_kleinian")).args(args).output().expect("binary runs");
    let text = String::from_utf8(stdout).expect("utf-8 output");
    (serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}")), status.code().expect("exit code"))
}

fn ok(args: &[&str]) -> Value {
    let (value, code) = run(args);
    assert_eq!(code, 0, "{value}");
    value
}

#[test]
fn derive_p_of_a_cubic() {
    assert_eq!(ok(&["derive-p", "--q", "t^3+2*t^2-1"])["p"], "3*t^2+12*t+12");
}

#[test]
fn derive_q_inverts_derive_p() {
    let p = ok(&["derive-p", "--q", "t^4-t^2+(1/2+i)*t+7"]);
    let q = ok(&["derive-q", "--p", p["p"].as_str().unwrap()]);
    assert_eq!(q["q"].as_str().unwrap().parse::<Poly>().unwrap(), "t^4-t^2+(1/2+i)*t".parse().unwrap());
}

#[test]
fn reduce_reorders_words() {
    let out = ok(&["reduce", "--algebra", "d", "--q", "t^3", "--gamma", "0", "--expr", "v*u"]);
    assert_eq!(out["element"], "u*v-2*w");
}

#[test]
fn commutators_and_center() {
    let out = ok(&["commutator", "--algebra", "h", "--p", "3*t^2", "--gamma", "1", "--expr", "u", "--expr2", "w"]);
    assert_eq!(out["element"], "-2*u*v+2*w+1");
    let omega = ok(&["center", "--algebra", "h", "--p", "3*t^2+t", "--gamma", "2"]);
    let text = omega["omega"].as_str().unwrap();
    let central = ok(&["is-central", "--algebra", "h", "--p", "3*t^2+t", "--gamma", "2", "--expr", text]);
    assert_eq!(central["central"], true);
    let not_central = ok(&["is-central", "--algebra", "h", "--p", "3*t^2+t", "--gamma", "2", "--expr", "u*v"]);
    assert_eq!(not_central["central"], false);
}

#[test]
fn diamond_and_degree() {
    let out = ok(&["diamond", "--q", "t^4+t", "--gamma", "i"]);
    assert_eq!(out["all_resolve"], true);
    assert_eq!(out["pairs"].as_array().unwrap().len(), 4);
    let deg = ok(&["degree", "--q", "t^3", "--expr", "w*v*u + u^3"]);
    assert_eq!(deg["standard"], 14);
    assert_eq!(deg["limit"], serde_json::json!([2, 3]));
}

#[test]
fn iso_d_sign_of_gamma() {
    let out = ok(&["iso-d", "--q", "t^4", "--gamma", "1", "--q2", "t^4", "--gamma2", "-1"]);
    assert_eq!(out["isomorphic"], true);
    assert_eq!(out["case"], "n>=4");
    assert_eq!(out["witness"]["name"], "Θ");
    let images = &out["witness"]["images"];
    let target = Algebra::new(AlgebraSpec::d("t^4".parse().unwrap(), Scalar::from_int(-1)).unwrap());
    for key in ["u", "v", "w"] {
        let text = images[key].as_str().unwrap();
        assert_eq!(target.parse_element(text).unwrap().to_string(), text);
    }
    let no = ok(&["iso-d", "--q", "t^4", "--gamma", "1", "--q2", "t^4", "--gamma2", "2"]);
    assert_eq!(no["isomorphic"], false);
    assert!(no["witness"].is_null());
}

#[test]
fn iso_h_cases() {
    let out = ok(&["iso-h", "--p", "3*t^2+t+1", "--gamma", "2", "--p2", "3*t^2+t+1", "--gamma2", "-2"]);
    assert_eq!(out["isomorphic"], true);
    assert_eq!(out["case"], "iii");
    let no = ok(&["iso-h", "--p", "3*t^2+t+1", "--gamma", "2", "--p2", "3*t^2+t", "--gamma2", "2"]);
    assert_eq!(no["isomorphic"], false);
}

#[test]
fn automorphisms_orbits_moduli() {
    let aut = ok(&["aut", "--q", "t^3-4*t", "--gamma", "0"]);
    assert_eq!(aut["group"], "S3");
    assert_eq!(aut["order"], 6);
    assert_eq!(aut["type"], "D4");
    assert_eq!(ok(&["orbit", "--q", "t^3-4*t"])["orbit"].as_array().unwrap().len(), 1);
    assert_eq!(ok(&["orbit", "--q", "t^3+t+1", "--gamma", "1/3"])["orbit"].as_array().unwrap().len(), 6);
    let m = ok(&["moduli", "--q", "t^5+t", "--gamma", "i"]);
    assert_eq!(m["kind"], "high");
    assert_eq!(m["coordinates"][1], "-1");
}

#[test]
fn semiclassical_pair() {
    let out = ok(&["semiclassical", "--algebra", "h", "--p", "4*t^3", "--expr", "u^2*v", "--expr2", "w^2+v"]);
    assert_eq!(out["holds"], true);
}

#[test]
fn json_values_reparse() {
    let orbit = ok(&["orbit", "--q", "t^3+(1/2)*t^2-i*t+2", "--gamma", "1+i"]);
    for member in orbit["orbit"].as_array().unwrap() {
        let q: Poly = member["q"].as_str().unwrap().parse().unwrap();
        let gamma: Scalar = member["gamma"].as_str().unwrap().parse().unwrap();
        assert_eq!(q.to_string(), member["q"]);
        assert_eq!(gamma.to_string(), member["gamma"]);
    }
    let x = ok(&["reduce", "--q", "t^3", "--gamma", "i", "--expr", "w*v*u^2 + (1/2+i)*v"]);
    let text = x["element"].as_str().unwrap();
    let again = ok(&["reduce", "--q", "t^3", "--gamma", "i", "--expr", text]);
    assert_eq!(again["element"], text);
}

#[test]
fn parse_errors_exit_two() {
    let (out, code) = run(&["derive-p", "--q", "t^3+*"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "Parse");
    let (out, code) = run(&["derive-p", "--q", "t^2+1"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "DegreeTooSmall");
    let (out, code) = run(&["no-such-verb"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "Usage");
    let (_, code) = run(&["reduce", "--q", "t^3"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_is_deterministic() {
    let a = ok(&["verify", "--seed", "5", "--max-degree", "10"]);
    let b = ok(&["verify", "--seed", "5", "--max-degree", "10", "--sequential"]);
    assert_eq!(a, b);
    assert_eq!(a["failed"], 0);
    assert_eq!(a["checks"].as_array().unwrap().len(), 13);
}
