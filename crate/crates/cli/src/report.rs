use serde_json::{json, Map, Value};
use superomni_core::superlinalg::{gl_space, SuperVector};
use superomni_core::{Residual, Verdict};

use crate::docs::combination;

fn vector_json(v: &SuperVector) -> Value {
    json!(combination(v))
}

fn residual_json(r: &Residual) -> Value {
    match r {
        Residual::Vector(v) => json!({ "vector": vector_json(v) }),
        Residual::Scalar(s) => json!({ "scalar": s.to_string() }),
        Residual::Map(m) if m.is_endomorphism() => {
            let gl = gl_space(m.domain());
            let v = m.to_gl_vector(&gl).expect("endomorphism of its own domain");
            json!({ "map": vector_json(&v) })
        }
        Residual::Map(m) => json!({ "note": format!("{m:?}") }),
        Residual::Note(n) => json!({ "note": n }),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let mut out = Map::new();
    out.insert("check".into(), json!(v.check));
    out.insert("pass".into(), json!(v.is_pass()));
    out.insert("checked".into(), json!(v.checked));
    if let Some(f) = &v.failure {
        let mut failure = Map::new();
        failure.insert("tuple".into(), json!(f.labels));
        failure.insert("indices".into(), json!(f.indices));
        failure.insert("residual".into(), residual_json(&f.residual));
        if !f.elements.is_empty() {
            failure.insert("elements".into(), Value::Array(f.elements.iter().map(vector_json).collect()));
        }
        out.insert("failure".into(), Value::Object(failure));
    }
    Value::Object(out)
}

fn verdict_lines(v: &Verdict) -> Vec<String> {
    let mut lines = vec![v.to_string()];
    if let Some(f) = &v.failure {
        for (k, e) in f.elements.iter().enumerate() {
            lines.push(format!("    element {}: {e}", k + 1));
        }
    }
    lines
}

/// Verdicts plus command-specific facts, printed either as text or JSON.
pub struct Report {
    command: String,
    verdicts: Vec<Verdict>,
    facts: Map<String, Value>,
    notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, verdicts: Vec<Verdict>) -> Report {
        Report {
            command: command.to_string(),
            verdicts,
            facts: Map::new(),
            notes: Vec::new(),
        }
    }

    /// A fact shown as `key: text` in human output and as `key: value` in JSON.
    pub fn fact(&mut self, key: &str, text: impl Into<String>, value: Value) {
        self.notes.push(format!("{key}: {}", text.into()));
        self.facts.insert(key.to_string(), value);
    }

    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(Verdict::is_pass)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut out = Map::new();
            out.insert("command".into(), json!(self.command));
            out.insert("pass".into(), json!(self.pass()));
            out.insert("verdicts".into(), Value::Array(self.verdicts.iter().map(verdict_json).collect()));
            for (k, v) in &self.facts {
                out.insert(k.clone(), v.clone());
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            let mut lines = self.notes.clone();
            for v in &self.verdicts {
                lines.extend(verdict_lines(v));
            }
            lines.push(format!("{} {}", if self.pass() { "PASS" } else { "FAIL" }, self.command));
            lines.join("\n") + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use superomni_core::liesuper::{check_lie, BracketTable};
    use superomni_core::superlinalg::{Field, SuperSpace};

    #[test]
    fn human_and_json_agree() {
        let v = SuperSpace::standard(Field::Rational, 1, 0);
        let mut t = BracketTable::zero(&v);
        t.set(0, 0, v.basis_vector(0)).unwrap();
        let mut r = Report::new("check lie", check_lie(&t));
        r.fact("dimension", "1", json!(1));
        assert!(!r.pass());
        let human = r.render(false);
        assert!(human.contains("FAIL super skew-symmetry at (e1, e1)"), "{human}");
        assert!(human.ends_with("FAIL check lie\n"));
        let j: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(j["pass"], json!(false));
        assert_eq!(j["dimension"], json!(1));
        let bad = j["verdicts"].as_array().unwrap().iter().find(|v| v["pass"] == json!(false)).unwrap();
        assert_eq!(bad["failure"]["tuple"], json!(["e1", "e1"]));
        assert_eq!(bad["failure"]["residual"]["vector"]["e1"], json!("2"));
    }
}
