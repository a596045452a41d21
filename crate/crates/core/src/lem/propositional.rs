use serde_json::{json, Value};

use crate::lem::LemError;
use crate::lifting::{boundary_rlp, horn_rlp, MapSearch, RlpReport, SimplexIndex};
use crate::map::SimplicialMap;
use crate::product::{product, pullback};
use crate::standard::std_simplex;
use std::sync::Arc;

/// Default cap on nondegenerate simplices of `P × Δ¹` for the homotopy search.
pub const HOMOTOPY_SIZE_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionalityReport {
    pub bound: usize,
    /// Boundary family on `[1, bound]`.
    pub via_rlp: RlpReport,
    pub via_homotopy: Option<bool>,
    /// Horn family up to `bound + 1`.
    pub kan_check: RlpReport,
}

impl PropositionalityReport {
    pub fn propositional(&self) -> bool {
        self.via_rlp.holds
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bound": self.bound,
            "propositional": self.propositional(),
            "kan": self.kan_check.to_json(),
            "via_rlp": self.via_rlp.to_json(),
            "via_homotopy": self.via_homotopy,
        })
    }
}

pub fn is_propositional_rlp(p: &SimplicialMap, bound: usize) -> PropositionalityReport {
    PropositionalityReport {
        bound,
        kan_check: horn_rlp(p, bound + 1),
        via_rlp: boundary_rlp(p, 1, bound),
        via_homotopy: None,
    }
}

/// Are the two projections `P = Y ×_X Y → Y` homotopic over `X` through a
/// single prism `P × Δ¹ → Y`?
pub fn is_propositional_homotopy(p: &SimplicialMap) -> Result<bool, LemError> {
    is_propositional_homotopy_capped(p, HOMOTOPY_SIZE_CAP)
}

pub fn is_propositional_homotopy_capped(p: &SimplicialMap, cap: usize) -> Result<bool, LemError> {
    let pair = pullback(p, p)?;
    let interval = Arc::new(std_simplex(1));
    let prism = product(&pair.set, &interval);
    let cells = prism.set.len();
    if cells > cap {
        return Err(LemError::SizeGuard { cells, cap });
    }
    let total = p.domain();
    let index = SimplexIndex::new(total, prism.set.dim().unwrap_or(0));
    let mut fixed = vec![None; cells];
    let mut targets = Vec::with_capacity(cells);
    for (q, slot) in fixed.iter_mut().enumerate() {
        let (e, t) = prism.pair(q);
        // Vertices "0" and "1" of Δ¹ are cells 0 and 1.
        match (t.base, t.dim()) {
            (0, _) => *slot = Some(pair.proj1.value(e)),
            (1, _) => *slot = Some(pair.proj2.value(e)),
            _ => {}
        }
        targets.push(p.value(pair.proj1.value(e)));
    }
    Ok(MapSearch::new(&prism.set, &index)
        .fixed(fixed)
        .over(p, targets)
        .first()
        .is_some())
}
