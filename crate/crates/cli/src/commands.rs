//! One handler per verb, each returning the JSON result.

use kleinian_core::iso::{self, DParams, IsoWitness, ModuliPoint};
use kleinian_core::ncalg::{self, check_diamond};
use kleinian_core::poisson;
use kleinian_core::suite::{self, SuiteConfig};
use kleinian_core::{Algebra, AlgebraSpec, Element, Error, Exec, Kind, Poly, Result, Scalar};
use serde_json::{json, Value};

use crate::{AlgebraArg, Cli, Verb};

/// The JSON result, and whether the run counts as a success.
pub fn run(cli: &Cli) -> Result<(Value, bool)> {
    let value = match cli.verb {
        Verb::DeriveP => {
            let p = kleinian_core::poly::solve_p_from_q(&poly_flag(&cli.q, "q")?)?;
            json!({ "p": p.to_string() })
        }
        Verb::DeriveQ => {
            let q = kleinian_core::poly::solve_q_from_p(&poly_flag(&cli.p, "p")?)?;
            json!({ "q": q.to_string() })
        }
        Verb::Reduce => {
            let alg = algebra(cli)?;
            json!({ "element": expr(&alg, &cli.expr, "expr")?.to_string() })
        }
        Verb::Commutator => {
            let alg = algebra(cli)?;
            let (x, y) = (expr(&alg, &cli.expr, "expr")?, expr(&alg, &cli.expr2, "expr2")?);
            json!({ "element": alg.commutator(&x, &y).to_string() })
        }
        Verb::Center => {
            let alg = algebra(cli)?;
            let q = match alg.spec().q() {
                Some(q) => q.clone(),
                None => kleinian_core::poly::solve_q_from_p(alg.spec().p())?,
            };
            json!({ "omega": alg.center_element(&q)?.to_string() })
        }
        Verb::IsCentral => {
            let alg = algebra(cli)?;
            json!({ "central": alg.is_central(&expr(&alg, &cli.expr, "expr")?) })
        }
        Verb::Diamond => {
            let report = check_diamond(&spec(cli, false)?);
            let pairs: Vec<Value> = report
                .pairs
                .iter()
                .map(|pair| {
                    json!({
                        "word": pair.word_text(),
                        "resolves": pair.resolves(),
                        "left_first": pair.left_first.to_string(),
                        "right_first": pair.right_first.to_string(),
                    })
                })
                .collect();
            json!({ "all_resolve": report.all_resolve(), "pairs": pairs })
        }
        Verb::Degree => {
            let alg = algebra(cli)?;
            let x = expr(&alg, &cli.expr, "expr")?;
            let limit = match alg.kind() {
                Kind::D => {
                    let d = ncalg::degree_limit(&x)?;
                    json!([d.a, d.b])
                }
                Kind::H => Value::Null,
            };
            json!({ "standard": alg.degree_standard(&x)?, "limit": limit })
        }
        Verb::IsoD => {
            let (p1, p2) = (d_params(&cli.q, &cli.gamma, "q")?, d_params(&cli.q2, &cli.gamma2, "q2")?);
            let witness = iso::is_isomorphic_d(&p1, &p2)?;
            let case = if p1.n() == 3 { "n=3" } else { "n>=4" };
            json!({
                "isomorphic": witness.is_some(),
                "case": witness.as_ref().map(|_| case),
                "witness": witness.as_ref().map(witness_json),
                "moduli": [moduli_json(&iso::moduli_invariants(&p1)), moduli_json(&iso::moduli_invariants(&p2))],
            })
        }
        Verb::IsoH => {
            let (p1, p2) = (poly_flag(&cli.p, "p")?, poly_flag(&cli.p2, "p2")?);
            let (g1, g2) = (scalar(&cli.gamma)?, scalar(&cli.gamma2)?);
            let case = iso::is_isomorphic_h(&p1, &g1, &p2, &g2)?;
            json!({
                "isomorphic": case.is_some(),
                "case": case.map(|c| c.label()),
                "witness": Value::Null,
                "moduli": Value::Null,
            })
        }
        Verb::Aut => {
            let p = d_params(&cli.q, &cli.gamma, "q")?;
            let group = iso::automorphism_group(&p);
            let stabilizer: Vec<&str> = iso::stabilizer(&p).into_iter().map(|g| g.name()).collect();
            json!({
                "group": group.label(),
                "order": group.order(),
                "stabilizer": stabilizer,
                "type": format!("D{}", p.dynkin_rank()),
            })
        }
        Verb::Orbit => {
            let p = d_params(&cli.q, &cli.gamma, "q")?;
            let orbit: Vec<Value> = iso::orbit_params(&p)
                .into_iter()
                .map(|(g, image)| json!({ "element": g.name(), "q": image.q().to_string(), "gamma": image.gamma().to_string() }))
                .collect();
            json!({ "orbit": orbit })
        }
        Verb::Moduli => {
            let p = d_params(&cli.q, &cli.gamma, "q")?;
            moduli_json(&iso::moduli_invariants(&p))
        }
        Verb::Semiclassical => {
            let alg = algebra(cli)?;
            let (x, y) = (expr(&alg, &cli.expr, "expr")?, expr(&alg, &cli.expr2, "expr2")?);
            let symbols = [poisson::principal_symbol(&alg, &x)?, poisson::principal_symbol(&alg, &y)?];
            json!({
                "holds": poisson::semiclassical_check(&alg, &x, &y)?,
                "symbols": [symbols[0].to_string(), symbols[1].to_string()],
            })
        }
        Verb::Verify => return Ok(verify(cli)),
    };
    Ok((value, true))
}

fn verify(cli: &Cli) -> (Value, bool) {
    let config = SuiteConfig { seed: cli.seed, max_degree: cli.max_degree, exec: exec(cli) };
    let outcomes = suite::run_all(&config);
    for outcome in &outcomes {
        eprintln!("{outcome}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let checks: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "index": o.index, "name": o.name, "passed": o.passed, "detail": o.detail }))
        .collect();
    let failed = outcomes.len() - passed;
    let value = json!({
        "seed": cli.seed,
        "max_degree": cli.max_degree,
        "passed": passed,
        "failed": failed,
        "checks": checks,
    });
    (value, failed == 0)
}

fn exec(cli: &Cli) -> Exec {
    if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn missing(flag: &str) -> Error {
    Error::InvalidArgument(format!("missing --{flag}"))
}

fn poly_flag(text: &Option<String>, flag: &str) -> Result<Poly> {
    text.as_deref().ok_or_else(|| missing(flag))?.parse()
}

fn scalar(text: &str) -> Result<Scalar> {
    text.parse()
}

/// The algebra named by `--algebra`. `H` takes `--p`, or derives it from
/// `--q`; `D` takes `--q`, or the zero-constant partner of `--p`.
fn spec(cli: &Cli, second: bool) -> Result<AlgebraSpec> {
    let (q, p, gamma) = if second { (&cli.q2, &cli.p2, &cli.gamma2) } else { (&cli.q, &cli.p, &cli.gamma) };
    let gamma = scalar(gamma)?;
    let given = |text: &Option<String>| text.as_deref().map(str::parse::<Poly>).transpose();
    match (cli.algebra, given(q)?, given(p)?) {
        (AlgebraArg::H, _, Some(p)) => AlgebraSpec::h(p, gamma),
        (AlgebraArg::H, Some(q), None) => AlgebraSpec::h(kleinian_core::poly::solve_p_from_q(&q)?, gamma),
        (AlgebraArg::D, Some(q), _) => AlgebraSpec::d(q, gamma),
        (AlgebraArg::D, None, Some(p)) => AlgebraSpec::d(kleinian_core::poly::solve_q_from_p(&p)?, gamma),
        (AlgebraArg::H, None, None) => Err(missing("p")),
        (AlgebraArg::D, None, None) => Err(missing("q")),
    }
}

fn algebra(cli: &Cli) -> Result<Algebra> {
    Ok(Algebra::with_exec(spec(cli, false)?, exec(cli)))
}

fn expr(alg: &Algebra, text: &Option<String>, flag: &str) -> Result<Element> {
    alg.parse_element(text.as_deref().ok_or_else(|| missing(flag))?)
}

fn d_params(q: &Option<String>, gamma: &str, flag: &str) -> Result<DParams> {
    DParams::new(poly_flag(q, flag)?, scalar(gamma)?)
}

fn spec_json(spec: &AlgebraSpec) -> Value {
    json!({
        "algebra": spec.kind().to_string(),
        "p": spec.p().to_string(),
        "q": spec.q().map(Poly::to_string),
        "gamma": spec.gamma().to_string(),
    })
}

fn witness_json(w: &IsoWitness) -> Value {
    let images: Vec<String> = w.images.iter().map(Element::to_string).collect();
    json!({
        "name": w.name,
        "source": spec_json(&w.source),
        "target": spec_json(&w.target),
        "images": { "u": images[0], "v": images[1], "w": images[2] },
    })
}

fn moduli_json(m: &ModuliPoint) -> Value {
    let kind = match m {
        ModuliPoint::High { .. } => "high",
        ModuliPoint::Cubic(_) => "cubic",
    };
    json!({ "kind": kind, "coordinates": m.coordinates() })
}
