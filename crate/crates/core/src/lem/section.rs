use crate::lem::LemError;
use crate::lifting::{boundary_rlp, SimplexIndex};
use crate::map::SimplicialMap;
use crate::sset::SimplexExpr;

/// A section of `p` built cell by cell in canonical order, taking the least
/// simplex over each base cell whose faces match the values already chosen.
///
/// Lifting against `∂Δⁿ ↪ Δⁿ` for `0 ≤ n ≤ bound` is checked first; a
/// failure there is reported as `NoFiller` at the bottom simplex of the
/// first unliftable square.
pub fn trivial_fibration_section(
    p: &SimplicialMap,
    bound: usize,
) -> Result<SimplicialMap, LemError> {
    let base = p.codomain();
    let total = p.domain();
    let pre = boundary_rlp(p, 0, bound);
    if let Some(cx) = pre.counterexample {
        let bottom = &cx.problem.bottom;
        let top_cell = bottom.domain().len() - 1;
        return Err(LemError::NoFiller {
            dim: cx.dim,
            simplex: base.render(&bottom.value_of(top_cell)),
        });
    }

    let index = SimplexIndex::new(total, base.dim().unwrap_or(0));
    let mut values: Vec<SimplexExpr> = Vec::with_capacity(base.len());
    for (x, cell) in base.cells().iter().enumerate() {
        let faces: Vec<Option<SimplexExpr>> = cell
            .faces
            .iter()
            .map(|f| Some(values[f.base].degenerate_by(&f.surj)))
            .collect();
        let target = SimplexExpr::cell(x, cell.dim);
        let chosen = index
            .fillers(cell.dim, &faces)
            .find(|c| p.value(*c) == target)
            .ok_or_else(|| LemError::NoFiller {
                dim: cell.dim,
                simplex: cell.id.clone(),
            })?;
        values.push(chosen);
    }
    Ok(SimplicialMap::new(base.clone(), total.clone(), values)?)
}
