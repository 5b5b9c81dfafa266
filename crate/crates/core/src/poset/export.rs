//! DOT and JSON renderings of a quotient poset.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::QuotientPoset;

/// Integer as a JSON number when it fits in 64 bits, else as a string.
pub fn big_to_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

impl QuotientPoset {
    fn emission_order(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.len()).collect();
        ids.sort_by_key(|&v| (self.dim(v), v));
        ids
    }

    /// Hasse diagram in Graphviz DOT; one node per coset labelled
    /// `dim:deg`, one edge per cover (drawn upwards).
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.label().replace(['/', ','], "_");
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
        for v in self.emission_order() {
            writeln!(out, "  n{v} [label=\"{}\"];", self.dim_deg_label(v)).unwrap();
        }
        for (u, v) in self.hasse().cover_pairs() {
            writeln!(out, "  n{u} -> n{v};").unwrap();
        }
        for d in 0..=self.top_dim() {
            let same: Vec<String> = self
                .nodes_of_dim(d)
                .iter()
                .map(|v| format!("n{v}"))
                .collect();
            if same.len() > 1 {
                writeln!(out, "  {{ rank=same; {}; }}", same.join("; ")).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON document `{type, parabolic, nodes:[{id,dim,degree,min_word}],
    /// covers:[[lower,upper]]}`.
    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .emission_order()
            .into_iter()
            .map(|v| {
                let n = &self.nodes()[v];
                json!({
                    "id": v,
                    "dim": n.dim,
                    "degree": big_to_json(self.hasse().degree(v)),
                    "min_word": n.min_word.letters(),
                })
            })
            .collect();
        let covers: Vec<Value> = self
            .hasse()
            .cover_pairs()
            .into_iter()
            .map(|(u, v)| json!([u, v]))
            .collect();
        json!({
            "type": self.datum().label(),
            "parabolic": self.marked(),
            "nodes": nodes,
            "covers": covers,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::lattice::{build_cartan, CartanType};
    use crate::poset::build_quotient_poset;

    #[test]
    fn dot_for_gr24() {
        let p = build_quotient_poset(&build_cartan(CartanType::A, 3).unwrap(), &[2]).unwrap();
        let dot = p.to_dot();
        assert_eq!(dot.matches("label=").count(), 6);
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert!(dot.contains("label=\"4:2\""));
        assert_eq!(dot, p.to_dot());
    }

    #[test]
    fn json_schema_fields() {
        let p = build_quotient_poset(&build_cartan(CartanType::E6, 6).unwrap(), &[6]).unwrap();
        let v = p.to_json();
        assert_eq!(v["type"], "E6");
        assert_eq!(v["parabolic"], serde_json::json!([6]));
        assert_eq!(v["nodes"].as_array().unwrap().len(), 27);
        assert_eq!(v["covers"].as_array().unwrap().len(), 36);
        let top = v["nodes"].as_array().unwrap().last().unwrap();
        assert_eq!(top["dim"], 16);
        assert_eq!(top["degree"], 78);
    }
}
