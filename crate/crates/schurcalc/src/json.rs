//! JSON encodings of the library types.
//!
//! Partitions are arrays (`[]` for the empty partition), graded objects are
//! objects keyed by degree strings (`{}` for zero), and reports carry
//! `suite`, `checked`, `passed` and `counterexamples`, plus `flagged` and
//! `notes`.

use serde_json::{json, Map, Value};

use schurcalc_core::{
    CharacterTable, Classification, GradedObject, IdealTruncation, Partition, Result,
    SchurExpansion, VerificationReport,
};
use schurcalc_core::Error;

pub fn partition(lambda: &Partition) -> Value {
    json!(lambda.parts())
}

pub fn partition_from(value: &Value) -> Result<Partition> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array, got {value}")))?;
    let parts = items
        .iter()
        .map(|v| {
            v.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("bad part {v}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Partition::new(parts)
}

pub fn graded(x: &GradedObject) -> Value {
    let map: Map<String, Value> = x
        .dims()
        .iter()
        .map(|(d, m)| (d.to_string(), json!(m)))
        .collect();
    Value::Object(map)
}

pub fn graded_from(value: &Value) -> Result<GradedObject> {
    let map = value
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected an object, got {value}")))?;
    let mut pairs = Vec::with_capacity(map.len());
    for (k, v) in map {
        let degree: i64 = k.parse().map_err(|_| Error::Parse(format!("bad degree {k:?}")))?;
        let mult = v
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("bad multiplicity {v}")))?;
        pairs.push((degree, mult));
    }
    Ok(GradedObject::from_pairs(pairs))
}

pub fn expansion(e: &SchurExpansion) -> Value {
    Value::Array(
        e.iter()
            .map(|(l, m)| json!({ "lambda": partition(l), "multiplicity": m }))
            .collect(),
    )
}

pub fn truncation(s: &IdealTruncation) -> Value {
    let members: Vec<Value> = s.sorted_members().iter().map(partition).collect();
    json!({ "max_size": s.max_size(), "members": members })
}

pub fn truncation_from(value: &Value) -> Result<IdealTruncation> {
    let max_size = value
        .get("max_size")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing max_size".into()))?;
    let members = value
        .get("members")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing members".into()))?
        .iter()
        .map(partition_from)
        .collect::<Result<Vec<_>>>()?;
    IdealTruncation::new(max_size as usize, members)
}

pub fn classification(c: &Classification) -> Value {
    match c {
        Classification::Zero => json!({ "result": "zero" }),
        Classification::Prime(label) => json!({ "result": "prime", "p": label.p, "q": label.q }),
        Classification::NotPrime(Some(w)) => json!({
            "result": "not_prime",
            "witness": { "mu": partition(&w.mu), "nu": partition(&w.nu) },
        }),
        // passes the truncated test without being a P(p,q)
        Classification::NotPrime(None) => json!({ "result": "not_prime" }),
    }
}

pub fn character_table(t: &CharacterTable) -> Value {
    let rows: Vec<Value> = t
        .partitions()
        .iter()
        .map(|l| {
            let row = t.row(l).expect("row of table");
            // identity class first
            let values: Map<String, Value> = t
                .classes()
                .iter()
                .zip(row)
                .rev()
                .map(|(c, v)| (c.partition().to_string(), json!(v)))
                .collect();
            json!({ "lambda": partition(l), "values": values })
        })
        .collect();
    json!({ "n": t.n(), "rows": rows })
}

pub fn report(r: &VerificationReport) -> Value {
    json!({
        "suite": r.suite,
        "checked": r.checks,
        "passed": r.passed(),
        "counterexamples": r.counterexamples,
        "flagged": r.flagged,
        "notes": r.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use schurcalc_core::balmer::{PrimalityWitness, PrimeLabel};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_round_trip() {
        for s in ["5,2,2,1", "0", "1"] {
            let l = p(s);
            assert_eq!(partition_from(&partition(&l)).unwrap(), l);
        }
        assert_eq!(partition(&Partition::empty()).to_string(), "[]");
        assert!(partition_from(&json!([1, 2])).is_err());
    }

    #[test]
    fn graded_round_trip() {
        let x: GradedObject = "-1:1,0:2,1:1".parse().unwrap();
        assert_eq!(graded(&x).to_string(), r#"{"-1":1,"0":2,"1":1}"#);
        assert_eq!(graded_from(&graded(&x)).unwrap(), x);
        assert_eq!(graded(&GradedObject::zero()).to_string(), "{}");
    }

    #[test]
    fn truncation_format() {
        let s = IdealTruncation::new(4, [p("2,1"), p("3,1"), p("2,2"), p("2,1,1")]).unwrap();
        let v = truncation(&s);
        assert_eq!(v["max_size"], 4);
        assert_eq!(v["members"][0], json!([2, 1]));
        assert_eq!(truncation_from(&v).unwrap(), s);
    }

    #[test]
    fn classification_format() {
        let prime = Classification::Prime(PrimeLabel::new(1, 2).unwrap());
        assert_eq!(classification(&prime), json!({"result": "prime", "p": 1, "q": 2}));
        assert_eq!(classification(&Classification::Zero), json!({"result": "zero"}));
        let w = Classification::NotPrime(Some(PrimalityWitness { mu: p("2"), nu: p("1,1") }));
        assert_eq!(
            classification(&w),
            json!({"result": "not_prime", "witness": {"mu": [2], "nu": [1, 1]}})
        );
    }

    #[test]
    fn character_table_format() {
        let t = CharacterTable::build(3).unwrap();
        let v = character_table(&t);
        assert_eq!(v["n"], 3);
        let row = v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["lambda"] == json!([2, 1]))
            .unwrap();
        assert_eq!(row["values"], json!({"1,1,1": 2, "2,1": 0, "3": -1}));
    }
}
