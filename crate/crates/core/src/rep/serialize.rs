//! JSON serialization of modules and content hashes.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::linalg::SparseMat;

use super::module::RepModule;

/// Sparse matrix as `[[row, col, "value"], …]` in row-major order.
pub fn matrix_json(m: &SparseMat) -> Value {
    Value::Array(m.triplets().map(|(r, c, v)| json!([r, c, v.to_string()])).collect())
}

/// Comma-separated weight entries.
pub fn weight_string(w: &[i64]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A deterministic JSON document describing `m` completely.
pub fn module_json(m: &RepModule) -> Value {
    let generators: Vec<Value> = m
        .generators()
        .iter()
        .zip(m.lie_actions())
        .map(|(g, a)| json!({ "label": g.label, "matrix": matrix_json(a) }))
        .collect();
    let elements: Vec<Value> =
        m.elements().iter().map(|(g, a)| json!({ "label": g.label(), "matrix": matrix_json(a) })).collect();
    let weights = m.grading().map(|g| {
        json!({
            "torus": g.torus.tag(),
            "entries": g.weights.iter().map(|w| weight_string(w)).collect::<Vec<_>>(),
        })
    });
    json!({
        "name": m.name(),
        "n": m.n(),
        "group": m.kind().name(),
        "dim": m.dim(),
        "ambient": m.ambient(),
        "det_twist": m.det_twist(),
        "label": m.irreducible().map(|l| l.to_string()),
        "generators": generators,
        "elements": elements,
        "weights": weights,
    })
}

/// Hex SHA-256 of the compact JSON serialization.
pub fn module_hash(m: &RepModule) -> String {
    hex::encode(Sha256::digest(module_json(m).to_string().as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::build_gl_irrep;

    #[test]
    fn serialization_is_stable() {
        let a = build_gl_irrep(&[1, -1]).unwrap();
        let b = build_gl_irrep(&[1, -1]).unwrap();
        assert_eq!(module_json(&a), module_json(&b));
        assert_eq!(module_hash(&a), module_hash(&b));
        let doc = module_json(&a);
        assert_eq!(doc["dim"], 3);
        assert_eq!(doc["weights"]["torus"], "gamma2");
        assert_ne!(module_hash(&a), module_hash(&build_gl_irrep(&[2, -2]).unwrap()));
    }
}
