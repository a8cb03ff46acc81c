//! JSON report sections. Keys are emitted sorted, rationals as `"p/q"`
//! strings, indices 1-based, so identical inputs give byte-identical output.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::actions::{module_axiom_residuals, ActionCase, TensorSquareElement};
use crate::adjoint::{adjoint_set, coadjoint_set, AdjointSet};
use crate::algebra::{leibniz_residual, LeibnizAlgebra, Side, StructureTensor};
use crate::array::Array;
use crate::bialgebra::{dual_leibniz_residual, scenario_sweep, verify_bialgebra, BialgebraVerdict, DualFamily, SweepEntry};
use crate::cohomology::{cocycle_residual_tensor, gamma0, gamma1, CocycleScenario};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};
use crate::rmatrix::{
    coboundary_cocommutator, cybe_check, dual_bracket_from_r, gybe_identity_holds, gybe_residual, is_antisymmetric, schouten, solve_r,
    triple_products, CoboundaryCase, RMatrixFamily, RSolution,
};
use crate::sampling::Sampler;

pub const TOOL_NAME: &str = "leibniz";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn rational(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(rational).collect()))
            .collect(),
    )
}

fn matrices(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix).collect())
}

/// Nonzero components as `{"index": [..], "value": "p/q"}`.
pub fn sparse(a: &Array) -> Value {
    Value::Array(
        a.nonzero_entries()
            .into_iter()
            .map(|(idx, v)| json!({ "index": idx, "value": format_rational(&v) }))
            .collect(),
    )
}

pub fn tensor(t: &StructureTensor) -> Value {
    sparse(t.as_array())
}

pub fn witness(a: &Array) -> Value {
    match a.first_nonzero() {
        Some((idx, v)) => json!({ "index": idx, "value": format_rational(&v) }),
        None => Value::Null,
    }
}

pub fn check_section(alg: &LeibnizAlgebra) -> Value {
    let mut residuals = Map::new();
    for side in Side::BOTH {
        residuals.insert(side.name().into(), witness(&leibniz_residual(alg.tensor(), side)));
    }
    json!({
        "chirality": alg.chirality().name(),
        "dim": alg.dim(),
        "name": alg.name(),
        "residual_witnesses": residuals,
        "antisymmetric": alg.tensor().is_antisymmetric(),
    })
}

fn adjoint_json(a: &AdjointSet) -> Value {
    json!({ "chi": matrices(&a.chi), "chi_prime": matrices(&a.chi_prime), "y": matrices(&a.y) })
}

pub fn adjoint_section(t: &StructureTensor) -> Value {
    let a = adjoint_set(t);
    let c = coadjoint_set(&a);
    json!({
        "adjoint": adjoint_json(&a),
        "coadjoint": { "ad_star_left": matrices(&c.ad_star_left), "ad_star_right": matrices(&c.ad_star_right) },
    })
}

pub fn actions_section(alg: &LeibnizAlgebra, cases: &[ActionCase]) -> (Value, bool) {
    let mut out = Map::new();
    let mut all_ok = true;
    for &case in cases {
        let key = format!("case{}", case.number());
        match module_axiom_residuals(case, alg) {
            Ok(residuals) => {
                let axioms: Vec<Value> = residuals
                    .iter()
                    .map(|r| {
                        all_ok &= r.holds();
                        json!({ "side": r.side.name(), "axiom": r.axiom, "holds": r.holds(), "witness": witness(&r.residual) })
                    })
                    .collect();
                out.insert(key, json!({ "defined": true, "axioms": axioms }));
            }
            Err(e) => {
                out.insert(key, json!({ "defined": false, "reason": e.to_string() }));
            }
        }
    }
    (Value::Object(out), all_ok)
}

pub fn family_json(fam: &DualFamily) -> Value {
    json!({
        "parameters": fam.params(),
        "offset": tensor(fam.offset()),
        "basis": fam.basis().iter().map(tensor).collect::<Vec<_>>(),
    })
}

fn sweep_entry_json(e: &SweepEntry) -> Value {
    json!({
        "scenario": e.scenario.label(),
        "form": e.scenario.form().number(),
        "dual_side": e.scenario.dual_side().name(),
        "rank": e.rank,
        "family": family_json(&e.family),
        "quadratic": {
            "identically_zero": e.quadratic.vanishes_identically(),
            "polynomials": e.quadratic.render(),
        },
    })
}

pub fn verdict_json(v: &BialgebraVerdict) -> Value {
    let w = v.witness.as_ref().map_or(
        Value::Null,
        |w| json!({ "kind": w.kind.name(), "index": w.index, "value": format_rational(&w.value) }),
    );
    json!({
        "scenario": v.scenario.label(),
        "cocycle_ok": v.cocycle_ok,
        "dual_leibniz_ok": v.dual_leibniz_ok,
        "holds": v.holds(),
        "witness": w,
    })
}

/// Sweep over the requested scenarios, plus verdicts for an explicit dual.
/// The flag is false when an explicit dual fails every requested scenario.
pub fn duals_section(alg: &LeibnizAlgebra, scenarios: &[CocycleScenario], dual: Option<&StructureTensor>) -> Result<(Value, bool)> {
    let sweep: Vec<SweepEntry> = scenario_sweep(alg)
        .into_iter()
        .filter(|e| scenarios.contains(&e.scenario))
        .collect();
    let skipped: Vec<&str> = scenarios.iter().filter(|s| !s.admits(alg)).map(|s| s.label()).collect();
    let mut out = json!({
        "scenarios": sweep.iter().map(sweep_entry_json).collect::<Vec<_>>(),
        "not_admitted": skipped,
    });
    let mut ok = true;
    if let Some(ft) = dual {
        let verdicts: Vec<BialgebraVerdict> = sweep.iter().map(|e| verify_bialgebra(alg, e.scenario, ft)).collect::<Result<_>>()?;
        ok = verdicts.iter().any(BialgebraVerdict::holds);
        out["dual"] = json!({
            "tensor": tensor(ft),
            "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
            "admitting": verdicts.iter().filter(|v| v.holds()).map(|v| v.scenario.label()).collect::<Vec<_>>(),
        });
    }
    Ok((out, ok))
}

pub fn r_family_json(fam: &RMatrixFamily) -> Value {
    let (p, _) = fam.particular();
    json!({
        "parameters": fam.params(),
        "particular": matrix(&p),
        "kernel": fam.kernel().iter().map(|(m, _)| matrix(m)).collect::<Vec<_>>(),
    })
}

pub fn rmatrix_section(alg: &LeibnizAlgebra, ft: &StructureTensor, case: CoboundaryCase) -> Result<(Value, bool)> {
    let sol = solve_r(alg, ft, case)?;
    Ok(match &sol {
        RSolution::Family(f) => (json!({ "case": case.label(), "feasible": true, "family": r_family_json(f) }), true),
        RSolution::Infeasible => (json!({ "case": case.label(), "feasible": false }), false),
    })
}

pub fn coboundary_section(alg: &LeibnizAlgebra, r: &Matrix, case: CoboundaryCase) -> Result<Value> {
    let ft = coboundary_cocommutator(alg, r, case)?;
    let mut out = json!({ "case": case.label(), "dual": tensor(&ft) });
    if let Some(side) = case.side() {
        let v = leibniz_residual(&ft, side);
        out["dual_leibniz_witness"] = witness(&v);
    }
    Ok(out)
}

pub fn ybe_section(alg: &LeibnizAlgebra, r: &Matrix, side: Side) -> Result<(Value, bool)> {
    let ok = cybe_check(alg, r, side)?;
    let s = schouten(alg, r, side)?;
    Ok((
        json!({ "side": side.name(), "cybe": ok, "schouten": sparse(&s), "antisymmetric_r": is_antisymmetric(r) }),
        ok,
    ))
}

pub fn gybe_section(alg: &LeibnizAlgebra, r: &Matrix, side: Side) -> Result<(Value, bool)> {
    let g = gybe_residual(alg, r, side)?;
    let ok = g.is_zero();
    let identity = gybe_identity_holds(alg, r, side)?;
    Ok((
        json!({ "side": side.name(), "gybe": ok, "residual": sparse(&g), "leibniz_gybe_identity": identity }),
        ok,
    ))
}

pub fn schouten_section(alg: &LeibnizAlgebra, r: &Matrix, side: Side) -> Result<Value> {
    let s = schouten(alg, r, side)?;
    let triples = triple_products(alg, r, side)?;
    let mut t = Map::new();
    for tp in &triples {
        t.insert(tp.which.label().into(), sparse(&tp.entries));
    }
    Ok(json!({
        "side": side.name(),
        "schouten": sparse(&s),
        "triple_products": t,
        "decomposition_holds": &triples[0].entries + &triples[1].entries == s,
        "r_bracket": tensor(&dual_bracket_from_r(alg, r, side)?),
    }))
}

/// Counts of seeded spot checks on this algebra.
pub fn properties_section(alg: &LeibnizAlgebra, seed: u64, samples: usize) -> Value {
    let mut s = Sampler::new(seed);
    let n = alg.dim();
    let mut out = Map::new();
    let mut record = |name: &str, checked: usize, failed: usize| {
        out.insert(name.into(), json!({ "checked": checked, "failed": failed }));
    };

    let (mut checked, mut failed) = (0, 0);
    for case in ActionCase::ALL {
        if case.check(alg).is_err() {
            continue;
        }
        for &side in case.natural_sides().iter().filter(|&&side| alg.admits(side)) {
            for _ in 0..samples {
                let m: TensorSquareElement = s.tensor_square(n);
                let g = gamma0(alg, case, side, &m).and_then(|w| gamma1(alg, case, side, &w));
                checked += 1;
                if !g.map(|g| g.is_zero()).unwrap_or(false) {
                    failed += 1;
                }
            }
        }
    }
    record("gamma1_gamma0", checked, failed);

    let (mut cob, mut cob_failed) = (0, 0);
    let (mut eqv, mut eqv_failed) = (0, 0);
    let (mut dec, mut dec_failed) = (0, 0);
    let (mut id_checked, mut id_failed) = (0, 0);
    for _ in 0..samples {
        let r = s.matrix(n);
        for case in [
            CoboundaryCase::Right1,
            CoboundaryCase::Left1,
            CoboundaryCase::Right4,
            CoboundaryCase::Left4,
        ] {
            let Ok(ft) = coboundary_cocommutator(alg, &r, case) else { continue };
            let form = match case {
                CoboundaryCase::Right1 | CoboundaryCase::Left1 => crate::cohomology::CocycleForm::Form1,
                _ => crate::cohomology::CocycleForm::Form4,
            };
            cob += 1;
            if !cocycle_residual_tensor(alg.tensor(), &ft, form)
                .map(|t| t.is_zero())
                .unwrap_or(false)
            {
                cob_failed += 1;
            }
        }
        for side in Side::BOTH.into_iter().filter(|&side| alg.admits(side)) {
            let case = match side {
                Side::Right => CoboundaryCase::Right1,
                Side::Left => CoboundaryCase::Left4,
            };
            eqv += 1;
            if dual_bracket_from_r(alg, &r, side).ok() != coboundary_cocommutator(alg, &r, case).ok() {
                eqv_failed += 1;
            }
            dec += 1;
            let decomposed = triple_products(alg, &r, side).map(|t| &t[0].entries + &t[1].entries);
            if decomposed.ok() != schouten(alg, &r, side).ok() {
                dec_failed += 1;
            }
            id_checked += 1;
            if !gybe_identity_holds(alg, &r, side).unwrap_or(false) {
                id_failed += 1;
            }
        }
    }
    record("coboundary_is_cocycle", cob, cob_failed);
    record("r_bracket_equals_coboundary", eqv, eqv_failed);
    record("schouten_decomposition", dec, dec_failed);
    record("leibniz_gybe_identity", id_checked, id_failed);
    json!({ "seed": seed, "samples": samples, "checks": out })
}

/// Inputs of a full report, with their source texts for the digest.
pub struct ReportInput<'a> {
    pub algebra_text: &'a str,
    pub algebra: &'a LeibnizAlgebra,
    pub declared_side: &'a str,
    pub dual: Option<(&'a str, &'a StructureTensor)>,
    pub r: Option<(&'a str, &'a Matrix)>,
    pub seed: u64,
}

pub fn full_report(input: &ReportInput<'_>) -> Result<Value> {
    let alg = input.algebra;
    let mut digest = json!({ "algebra_sha256": sha256_hex(input.algebra_text) });
    if let Some((text, _)) = input.dual {
        digest["dual_sha256"] = json!(sha256_hex(text));
    }
    if let Some((text, _)) = input.r {
        digest["r_sha256"] = json!(sha256_hex(text));
    }
    let (actions, actions_ok) = actions_section(alg, &ActionCase::ALL);
    let (duals, _) = duals_section(alg, &CocycleScenario::ALL, input.dual.map(|(_, t)| t))?;
    let mut results = json!({
        "check": check_section(alg),
        "adjoint": adjoint_section(alg.tensor()),
        "actions": actions,
        "actions_ok": actions_ok,
        "duals": duals,
        "properties": properties_section(alg, input.seed, 10),
    });
    if let Some((_, ft)) = input.dual {
        let mut sols = Map::new();
        for case in CoboundaryCase::ALL {
            if let Ok((v, _)) = rmatrix_section(alg, ft, case) {
                sols.insert(case.label().into(), v);
            }
        }
        results["rmatrix"] = Value::Object(sols);
        let mut quad = Map::new();
        for side in Side::BOTH {
            let fam = DualFamily::affine(ft.clone(), vec![], vec![])?;
            quad.insert(side.name().into(), json!(dual_leibniz_residual(&fam, side).vanishes_identically()));
        }
        results["dual_leibniz"] = Value::Object(quad);
    }
    if let Some((_, r)) = input.r {
        let mut ybe = Map::new();
        for side in Side::BOTH.into_iter().filter(|&s| alg.admits(s)) {
            let (c, _) = ybe_section(alg, r, side)?;
            let (g, _) = gybe_section(alg, r, side)?;
            let sch = schouten_section(alg, r, side)?;
            ybe.insert(side.name().into(), json!({ "cybe": c, "gybe": g, "schouten": sch }));
        }
        let mut cob = Map::new();
        for case in CoboundaryCase::ALL {
            if let Ok(v) = coboundary_section(alg, r, case) {
                cob.insert(case.label().into(), v);
            }
        }
        results["yang_baxter"] = Value::Object(ybe);
        results["coboundary"] = Value::Object(cob);
    }
    Ok(json!({
        "tool": { "name": TOOL_NAME, "version": TOOL_VERSION },
        "input": {
            "digest": digest,
            "declared_side": input.declared_side,
            "inferred_chirality": alg.chirality().name(),
        },
        "results": results,
    }))
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
