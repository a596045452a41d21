//! Prism squares: the constructive direction from boundary and horn
//! lifting to lifting against `i_1 ×̂ i_n`, and the bounded equivalence check
//! between the two lifting conditions.

use thiserror::Error;

use crate::lifting::problem::LiftingProblem;
use crate::lifting::pushout::PushoutProduct;
use crate::lifting::rlp::{boundary_rlp, horn_rlp, prism_rlp};
use crate::lifting::search::SimplexIndex;
use crate::map::SimplicialMap;
use crate::sset::SimplexExpr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrismError {
    #[error("left leg is not i_1 x^ i_n")]
    NotPrism,
    #[error("no filler for shuffle {step} (`{shuffle}`) against the {}", match .horn { Some(k) => format!("horn missing face {k}"), None => "full boundary".to_string() })]
    ShuffleStep {
        step: usize,
        shuffle: String,
        horn: Option<usize>,
    },
    #[error("assembled prism lift failed verification: {0}")]
    Unverified(String),
}

/// Fills the `n+1` shuffles of `Δ¹ × Δⁿ` in order of their collapse position.
/// Shuffle `c` meets the known part of the prism in the horn missing face
/// `c+1`, except the last, whose whole boundary is known.
pub fn prism_filler(prob: &LiftingProblem) -> Result<SimplicialMap, PrismError> {
    let b = prob.left.codomain();
    let n = b
        .dim()
        .and_then(|d| d.checked_sub(1))
        .ok_or(PrismError::NotPrism)?;
    let pp = PushoutProduct::prism(n);
    if pp.inclusion != prob.left {
        return Err(PrismError::NotPrism);
    }
    let p = &prob.right;
    let y = p.domain();
    let index = SimplexIndex::new(y, n + 1);

    let mut h = prob.forced_values();
    let mut shuffles: Vec<usize> = b.cells_of_dim(n + 1).collect();
    shuffles.sort_by_key(|&c| pp.product.pair(c).1.surj.collapse_mask());

    for (step, &sigma) in shuffles.iter().enumerate() {
        let cell = b.cell(sigma);
        let faces: Vec<Option<SimplexExpr>> = cell
            .faces
            .iter()
            .map(|f| h[f.base].map(|v| v.degenerate_by(&f.surj)))
            .collect();
        let target = prob.bottom.value_of(sigma);
        let filler = index
            .fillers(n + 1, &faces)
            .find(|c| p.value(*c) == target)
            .ok_or_else(|| PrismError::ShuffleStep {
                step,
                shuffle: b.id(sigma).to_string(),
                horn: faces.iter().position(Option::is_none),
            })?;
        h[sigma] = Some(filler);
        for (j, f) in cell.faces.iter().enumerate() {
            if h[f.base].is_none() && f.is_nondegenerate() {
                h[f.base] = Some(y.face_unchecked(filler, j));
            }
        }
    }

    let values = h
        .into_iter()
        .enumerate()
        .map(|(c, v)| v.ok_or_else(|| PrismError::Unverified(format!("`{}` unassigned", b.id(c)))))
        .collect::<Result<Vec<_>, _>>()?;
    let map = SimplicialMap::new(b.clone(), y.clone(), values)
        .map_err(|e| PrismError::Unverified(e.to_string()))?;
    if !prob.is_solved_by(&map) {
        return Err(PrismError::Unverified("triangles do not commute".into()));
    }
    Ok(map)
}

/// Outcome of comparing prism lifting (cond1) with boundary lifting for
/// `n ≥ 1` (cond2) up to a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    /// False when `p` is not Kan up to `n_max + 1`; the conditions are then
    /// not evaluated.
    pub applicable: bool,
    pub n_max: usize,
    pub cond1: Option<bool>,
    pub cond2: Option<bool>,
    pub agree: Option<bool>,
}

pub fn prism_boundary_equivalence(p: &SimplicialMap, n_max: usize) -> EquivalenceVerdict {
    if !horn_rlp(p, n_max + 1).holds {
        return EquivalenceVerdict {
            applicable: false,
            n_max,
            cond1: None,
            cond2: None,
            agree: None,
        };
    }
    let cond1 = prism_rlp(p, n_max).holds;
    let cond2 = boundary_rlp(p, 1, n_max).holds;
    EquivalenceVerdict {
        applicable: true,
        n_max,
        cond1: Some(cond1),
        cond2: Some(cond2),
        agree: Some(cond1 == cond2),
    }
}
