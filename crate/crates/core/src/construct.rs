//! Coproducts of finite simplicial sets.

use std::sync::Arc;

use crate::map::SimplicialMap;
use crate::sset::{RawCell, SimplexExpr, SimplicialSet};

/// Disjoint union of `parts`; the `k`-th summand's ids are prefixed `"k:"`.
/// Returns the sum and one injection per summand.
pub fn coproduct_all(parts: &[Arc<SimplicialSet>]) -> (Arc<SimplicialSet>, Vec<SimplicialMap>) {
    let mut raw = Vec::new();
    let mut offsets = Vec::with_capacity(parts.len());
    for (k, part) in parts.iter().enumerate() {
        let offset = raw.len();
        offsets.push(offset);
        raw.extend(part.raw_cells().into_iter().map(|c| RawCell {
            id: format!("{k}:{}", c.id),
            dim: c.dim,
            faces: c.faces.into_iter().map(|(s, b)| (s, b + offset)).collect(),
        }));
    }
    let name = if parts.is_empty() {
        "0".to_string()
    } else {
        parts
            .iter()
            .map(|p| p.name())
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let sum = Arc::new(SimplicialSet::from_raw(name, raw).expect("disjoint union is valid"));
    let injections = parts
        .iter()
        .enumerate()
        .map(|(k, part)| {
            let values = part
                .cells()
                .iter()
                .map(|c| {
                    let target = sum.lookup(&format!("{k}:{}", c.id)).expect("summand cell");
                    SimplexExpr::cell(target, c.dim)
                })
                .collect();
            SimplicialMap::new_unchecked(part.clone(), sum.clone(), values)
        })
        .collect();
    (sum, injections)
}

/// Binary coproduct `X ⊔ Y` with its two injections.
pub fn coproduct(
    x: &Arc<SimplicialSet>,
    y: &Arc<SimplicialSet>,
) -> (Arc<SimplicialSet>, Vec<SimplicialMap>) {
    coproduct_all(&[x.clone(), y.clone()])
}
