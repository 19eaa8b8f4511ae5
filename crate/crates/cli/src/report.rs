//! Report assembly: every number is an exact rational string unless it
//! is explicitly marked as a decimal approximation with its precision.

use serde_json::{json, Value};

use fatpoints_core::asymptotics::{
    ChudnovskyVerdict, DeltaReport, HhReport, SemicontReport, SeshadriBound, WaldschmidtReport,
};
use fatpoints_core::interp::AlphaEntry;
use fatpoints_core::monomial::{CounterexampleReport, MonomialIdeal};
use fatpoints_core::points::PointConfig;
use fatpoints_core::Rational;

pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

/// Envelope shared by every command.
pub fn envelope(command: &str, input: Value, result: Value, warnings: &[String]) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input": input,
        "result": result,
        "warnings": warnings,
    })
}

/// A point configuration rendered in the point-file schema (normalized
/// integer coordinates as strings), so outputs can be fed back in.
pub fn config_value(cfg: &PointConfig) -> Value {
    json!({
        "N": cfg.dim(),
        "points": cfg
            .points()
            .iter()
            .map(|p| p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "label": cfg.label(),
    })
}

pub fn alpha_entry_value(e: &AlphaEntry) -> Value {
    json!({
        "m": e.m,
        "alpha": e.alpha,
        "ratio": rat_str(&e.ratio()),
        "kernel_dim_at_alpha": e.kernel_dim_at_alpha,
        "full_rank_below": e.full_rank_below,
        "certified": e.is_certified(),
        "rank_records": e.records.iter().map(|r| json!({
            "degree": r.degree,
            "rank": r.rank,
            "cols": r.cols,
            "strategy": r.kind.as_str(),
            "primes": r.primes,
            "primes_agreed": r.agreed,
        })).collect::<Vec<_>>(),
    })
}

pub fn waldschmidt_value(r: &WaldschmidtReport) -> Value {
    json!({
        "label": r.label,
        "N": r.dim,
        "n_points": r.n_points,
        "alpha": r.alpha,
        "rows": r.rows.iter().map(|row| json!({
            "m": row.m,
            "alpha_m": row.alpha_m,
            "ratio": rat_str(&row.ratio),
            "chudnovsky_slack": rat_str(&row.chudnovsky_slack),
            "chudnovsky_holds": row.chudnovsky_holds,
            "certified": row.certified,
        })).collect::<Vec<_>>(),
        "waldschmidt_upper_bound": rat_str(&r.upper_bound),
        "skoda_lower_bound": rat_str(&r.skoda_lower),
        "esnault_viehweg_lower_bound": rat_str(&r.ev_lower),
        "chudnovsky_target": rat_str(&r.chudnovsky_target),
    })
}

pub fn chudnovsky_value(verdicts: &[ChudnovskyVerdict]) -> Value {
    json!({
        "verdicts": verdicts.iter().map(|v| json!({
            "m": v.m,
            "alpha_m": v.alpha_m,
            "slack": rat_str(&v.slack),
            "holds": v.holds,
        })).collect::<Vec<_>>(),
    })
}

pub fn delta_value(d: &DeltaReport) -> Value {
    json!({
        "s_max": d.s_max,
        "alpha": d.alpha,
        "alphas": d.alphas.iter().map(|(s, a)| json!({"s": s, "alpha_s": a})).collect::<Vec<_>>(),
        "delta": d.delta,
        "t0": d.t0,
        "bound_reached": d.delta.is_none(),
    })
}

pub fn seshadri_value(b: &SeshadriBound) -> Value {
    json!({
        "radicand": rat_str(&b.radicand),
        "root_order": b.root_order,
        "decimal_approximation": b.decimal,
        "decimal_precision": "12 significant digits",
    })
}

pub fn hh_value(r: &HhReport) -> Value {
    json!({
        "m": r.m,
        "alpha_symbolic_Nm": r.alpha_symbolic_nm,
        "d_max": r.d_max,
        "degrees": r.degrees.iter().map(|v| json!({
            "degree": v.degree,
            "lhs_dim": v.lhs_dim,
            "rhs_dim": v.rhs_dim,
            "holds": v.holds,
        })).collect::<Vec<_>>(),
        "all_hold": r.all_hold,
        "note": r.note,
    })
}

pub fn semicont_value(r: &SemicontReport) -> Value {
    json!({
        "m": r.m,
        "samples": r.samples.iter().map(|s| json!({
            "label": s.label,
            "alpha_m": s.alpha_m,
            "special": s.special,
        })).collect::<Vec<_>>(),
        "max_alpha_m": r.max_alpha_m,
    })
}

pub fn ideal_value(i: &MonomialIdeal) -> Value {
    json!({
        "variables": i.vars(),
        "generators": i.generators().iter().map(|g| g.0.clone()).collect::<Vec<_>>(),
        "rendered": i
            .generators()
            .iter()
            .map(|g| g.render(i.vars()))
            .collect::<Vec<_>>(),
    })
}

pub fn counterexample_value(r: &CounterexampleReport) -> Value {
    json!({
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
        "socle_witness": r.socle_witness,
        "deep_witness": r.deep_witness,
        "ass_primes_of_square": r.ass_j2,
        "conclusion_holds": r.conclusion_holds,
    })
}

/// Flatten a tabular result into CSV; structured reports stay JSON.
pub fn to_csv(command: &str, result: &Value) -> Option<String> {
    let rows: Vec<Vec<String>> = match command {
        "wald" => {
            let mut out = vec![vec![
                "m".into(),
                "alpha_m".into(),
                "ratio".into(),
                "chudnovsky_slack".into(),
                "chudnovsky_holds".into(),
            ]];
            for row in result.get("rows")?.as_array()? {
                out.push(vec![
                    row["m"].to_string(),
                    row["alpha_m"].to_string(),
                    row["ratio"].as_str()?.to_string(),
                    row["chudnovsky_slack"].as_str()?.to_string(),
                    row["chudnovsky_holds"].to_string(),
                ]);
            }
            out
        }
        "chud" => {
            let mut out = vec![vec![
                "m".into(),
                "alpha_m".into(),
                "slack".into(),
                "holds".into(),
            ]];
            for v in result.get("verdicts")?.as_array()? {
                out.push(vec![
                    v["m"].to_string(),
                    v["alpha_m"].to_string(),
                    v["slack"].as_str()?.to_string(),
                    v["holds"].to_string(),
                ]);
            }
            out
        }
        "hilbert" => {
            let mut out = vec![vec!["d".into(), "hilbert_function".into()]];
            for v in result.get("values")?.as_array()? {
                out.push(vec![v["d"].to_string(), v["value"].to_string()]);
            }
            out
        }
        "semicont" => {
            let mut out = vec![vec!["label".into(), "alpha_m".into(), "special".into()]];
            for s in result.get("samples")?.as_array()? {
                out.push(vec![
                    s["label"].as_str()?.to_string(),
                    s["alpha_m"].to_string(),
                    s["special"].to_string(),
                ]);
            }
            out
        }
        _ => return None,
    };
    let mut text = String::new();
    for row in rows {
        let quoted: Vec<String> = row
            .iter()
            .map(|f| {
                if f.contains(',') || f.contains('"') {
                    format!("\"{}\"", f.replace('"', "\"\""))
                } else {
                    f.clone()
                }
            })
            .collect();
        text.push_str(&quoted.join(","));
        text.push('\n');
    }
    Some(text)
}
