//! One function per subcommand.  Each returns whether every check passed
//! plus a JSON payload of what was computed; all numbers that could be
//! non-integral are rendered as exact rational strings.

use serde_json::{json, Value};

use voa_core::admissibility::{check_all_supports, lambda_S, pi_check, witness_coroots};
use voa_core::classification::verify_classification;
use voa_core::enveloping::{
    adjoint_gen, generate_R, polynomials_P0, spans_match, v_prime, zhu_F,
};
use voa_core::finite_lie::Generator;
use voa_core::rational::render;
use voa_core::root_system::{RootIndex, Weight};
use voa_core::verma::{apply_gen, is_singular, singular_vector};
use voa_core::{boundary_level, Error};

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(|c| Value::String(render(c))).collect())
}

/// Builds the conformal-degree-2 singular vector and records the result of
/// applying each annihilation operator.
pub fn verify_singular(l: usize) -> Result<(bool, Value), Error> {
    let v = singular_vector(l)?;
    let mut checks = Vec::new();
    for p in 1..=l {
        let g = Generator::E(RootIndex::new(l, p, p + 1)?);
        let image = apply_gen(g, 0, &v)?;
        checks.push(json!({
            "operator": format!("e({},{})(0)", p, p + 1),
            "annihilates": image.is_zero(),
        }));
    }
    let theta = voa_core::root_system::highest_root(l)?;
    let image = apply_gen(Generator::F(theta), 1, &v)?;
    checks.push(json!({
        "operator": format!("f({},{})(1)", theta.i, theta.j),
        "annihilates": image.is_zero(),
    }));
    let (singular, _) = is_singular(&v)?;
    let weight = v
        .homogeneous_weight()?
        .expect("singular vector is weight-homogeneous");
    let payload = json!({
        "level": render(&boundary_level(l)),
        "conformal_degree": v.homogeneous_degree().expect("homogeneous"),
        "term_count": v.term_count(),
        "finite_weight": weight_json(&weight),
        "checks": checks,
        "singular": singular,
    });
    Ok((singular, payload))
}

/// Maps the singular vector into `U(sl(l+1))` and compares with the
/// closed-form image.
pub fn zhu(l: usize) -> Result<(bool, Value), Error> {
    let v = singular_vector(l)?;
    let image = zhu_F(&v)?;
    let closed = v_prime(l)?;
    let matches = image == closed;
    let payload = json!({
        "image_term_count": image.term_count(),
        "image": format!("{image}"),
        "matches_closed_form": matches,
    });
    Ok((matches, payload))
}

/// Computes the zero-weight polynomials by adjoint chains (each checked
/// internally against its closed form) and the adjoint closure of the
/// singular-vector image, then compares the two zero-weight spaces.
pub fn polynomials(l: usize) -> Result<(bool, Value), Error> {
    let polys = polynomials_P0(l)?;
    let module = generate_R(l)?;
    let vp = v_prime(l)?;
    let mut hw_annihilated = true;
    for p in 1..=l {
        let g = Generator::E(RootIndex::new(l, p, p + 1)?);
        if !adjoint_gen(g, &vp)?.is_zero() {
            hw_annihilated = false;
        }
    }
    let dim_expected = (l + 1) * (l + 1) - 1;
    let span_ok = spans_match(&polys, &module)?;
    let pass = module.dim() == dim_expected
        && module.dim_zero_weight() == l
        && hw_annihilated
        && span_ok;
    let payload = json!({
        "polynomials": polys
            .iter()
            .enumerate()
            .map(|(t, p)| json!({ "i": t + 1, "p": format!("{p}") }))
            .collect::<Vec<_>>(),
        "closure": {
            "dim": module.dim(),
            "dim_expected": dim_expected,
            "dim_zero_weight": module.dim_zero_weight(),
            "dim_zero_weight_expected": l,
            "generator_is_highest_weight": hw_annihilated,
            "zero_weight_span_matches_polynomials": span_ok,
        },
    });
    Ok((pass, payload))
}

/// Solves for all common zeros of the zero-weight polynomials and compares
/// against the closed-form weights.
pub fn classify(l: usize) -> Result<(bool, Value), Error> {
    let report = verify_classification(l)?;
    let payload = json!({
        "count": report.solutions.len(),
        "count_expected": 1u64 << l,
        "matches_closed_form": report.matches_closed_form,
        "all_distinct": report.all_distinct,
        "solutions": report
            .solutions
            .iter()
            .map(|(s, w)| json!({
                "support": format!("{s}"),
                "weight": weight_json(w),
                "dominant_integral": w.is_dominant_integral(),
            }))
            .collect::<Vec<_>>(),
        "dominant_integral_supports": report
            .dominant_integral
            .iter()
            .map(|s| format!("{s}"))
            .collect::<Vec<_>>(),
        "anomalies": report.anomalies,
    });
    Ok((report.verdict(), payload))
}

/// Checks admissibility of every classified weight and the minimal system
/// of the distinguished one.
pub fn admissible(l: usize, max_m: i64, pi_max_m: i64) -> Result<(bool, Value), Error> {
    let reports = check_all_supports(l, max_m)?;
    let mut supports = Vec::new();
    let mut all_ok = true;
    for r in &reports {
        let witnesses = witness_coroots(l, &r.support)?;
        let witnesses_integral = witnesses.iter().all(|(_, p)| p.is_integer());
        let ok = r.verdict && witnesses_integral;
        all_ok &= ok;
        supports.push(json!({
            "support": format!("{}", r.support),
            "lambda": format!("{}", lambda_S(l, &r.support)?),
            "violations": r.violations.iter().map(|v| format!("{v}")).collect::<Vec<_>>(),
            "integer_paired_count": r.integer_paired_count,
            "integer_paired_rank": r.integer_paired_rank,
            "rank_expected": l + 1,
            "required_m": r.required_m,
            "certificate_covers_cutoff": r.certificate_covers_cutoff,
            "witnesses": witnesses
                .iter()
                .map(|(root, p)| json!({
                    "coroot_of": format!("{root}"),
                    "pairing": render(p),
                }))
                .collect::<Vec<_>>(),
            "witnesses_integral": witnesses_integral,
            "admissible": ok,
        }));
    }
    let pi = pi_check(l, pi_max_m)?;
    let pi_ok = pi.matches && pi.all_shifted_pairings_one;
    let payload = json!({
        "max_m": max_m,
        "slope": render(&reports[0].slope),
        "supports": supports,
        "all_admissible": all_ok,
        "pi": {
            "max_m": pi_max_m,
            "integer_paired_count": pi.integer_paired.len(),
            "minimal": pi.minimal.iter().map(|r| format!("{r}")).collect::<Vec<_>>(),
            "expected": pi.expected.iter().map(|r| format!("{r}")).collect::<Vec<_>>(),
            "matches": pi.matches,
            "shifted_pairings": pi
                .shifted_pairings
                .iter()
                .map(|(r, p)| json!({ "coroot_of": format!("{r}"), "pairing": render(p) }))
                .collect::<Vec<_>>(),
            "all_shifted_pairings_one": pi.all_shifted_pairings_one,
        },
    });
    Ok((all_ok && pi_ok, payload))
}

/// Runs the whole pipeline in order.
pub fn all(l: usize, max_m: i64, pi_max_m: i64) -> Result<(bool, Value), Error> {
    let stages: Vec<(&str, (bool, Value))> = vec![
        ("verify-singular", verify_singular(l)?),
        ("zhu", zhu(l)?),
        ("polynomials", polynomials(l)?),
        ("classify", classify(l)?),
        ("admissible", admissible(l, max_m, pi_max_m)?),
    ];
    let pass = stages.iter().all(|(_, (ok, _))| *ok);
    let mut payload = serde_json::Map::new();
    for (name, (ok, stage_payload)) in stages {
        payload.insert(
            name.to_string(),
            json!({
                "status": if ok { "pass" } else { "fail" },
                "payload": stage_payload,
            }),
        );
    }
    payload.insert("all_pass".to_string(), Value::Bool(pass));
    Ok((pass, Value::Object(payload)))
}
