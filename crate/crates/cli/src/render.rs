//! JSON shapes shared by the subcommands.
//!
//! Objects are built as `serde_json::Value`, whose maps are ordered by key,
//! so every document serializes with sorted keys.

use knotgrowth::bounds::GrowthRate;
use knotgrowth::small::{ScanEntry, SumCondition, SurfaceWitness};
use knotgrowth::surgery::{SurgeryDescription, SurgerySlope};
use knotgrowth::{CurveClass, FamilyParams, ProjectiveRational};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Number, Value};

/// Exact integer as a JSON number, whatever its size.
pub fn int(b: &BigInt) -> Value {
    Value::Number(b.to_string().parse::<Number>().expect("integer digits are a JSON number"))
}

pub fn ints<'a>(bs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(bs.into_iter().map(int).collect())
}

pub fn ratio(q: &BigRational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn slope(q: &ProjectiveRational) -> Value {
    Value::String(q.to_string())
}

pub fn curve(c: &CurveClass) -> Value {
    json!({ "m": int(c.m()), "n": int(c.n()), "slope": slope(&c.slope()) })
}

pub fn params(p: &FamilyParams) -> Value {
    json!({ "r": p.r(), "s": p.s(), "n": p.n() })
}

pub fn witness(w: &SurfaceWitness) -> Value {
    let condition = match w.condition {
        SumCondition::OneInI => "one_in_i",
        SumCondition::OneNotInI => "one_not_in_i",
    };
    json!({ "i": w.i, "j": w.j, "condition": condition, "sum_value": int(&w.sum_value) })
}

pub fn witness_text(w: &SurfaceWitness) -> String {
    let set = |v: &[usize]| {
        let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
        format!("{{{}}}", inner.join(","))
    };
    let cond = match w.condition {
        SumCondition::OneInI => "1 in I",
        SumCondition::OneNotInI => "1 not in I",
    };
    format!("I={} J={} ({cond})", set(&w.i), set(&w.j))
}

pub fn scan_entry(n: i64, e: &ScanEntry) -> Value {
    match e {
        ScanEntry::Verdict { small, witnesses } => json!({
            "n": n,
            "status": "verdict",
            "small": small,
            "witnesses": witnesses.iter().map(witness).collect::<Vec<_>>(),
        }),
        ScanEntry::Inapplicable { reason } => json!({
            "n": n,
            "status": "inapplicable",
            "reason": reason,
        }),
    }
}

pub fn growth(b0: u64, b1: u64, g: &GrowthRate) -> Value {
    json!({
        "b0": b0,
        "b1": b1,
        "from_b0": ratio(&g.from_b0),
        "from_b1": ratio(&g.from_b1),
        "min": ratio(&g.value),
        "max_variant": ratio(&g.max_variant),
    })
}

pub fn surgery(d: &SurgeryDescription) -> Value {
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| match &c.slope {
            SurgerySlope::Filled(q) => json!({ "label": c.label, "slope": slope(q) }),
            SurgerySlope::Unfilled => json!({ "label": c.label, "slope": Value::Null }),
        })
        .collect();
    json!({
        "link": d.link.to_string(),
        "components": components,
        "notes": d.notes,
    })
}
