use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Result, SimplicialError};
use crate::lifting::search::{MapSearch, SearchOrder, SimplexIndex};
use crate::map::{compose, SimplicialMap};
use crate::sset::SimplexExpr;

/// A commuting square
///
/// ```text
///   A --top--> Y
///   |          |
/// left       right
///   v          v
///   B -bottom> X
/// ```
///
/// with `left` a monomorphism. A solution is a diagonal `h: B → Y` with
/// `h ∘ left = top` and `right ∘ h = bottom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingProblem {
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    pub top: SimplicialMap,
    pub bottom: SimplicialMap,
}

fn same(a: &Arc<crate::SimplicialSet>, b: &Arc<crate::SimplicialSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LiftingProblem {
    pub fn new(
        left: SimplicialMap,
        right: SimplicialMap,
        top: SimplicialMap,
        bottom: SimplicialMap,
    ) -> Result<Self> {
        if !left.is_mono() {
            return Err(SimplicialError::InvalidSquare(
                "left leg is not a monomorphism".into(),
            ));
        }
        if !same(top.domain(), left.domain())
            || !same(top.codomain(), right.domain())
            || !same(bottom.domain(), left.codomain())
            || !same(bottom.codomain(), right.codomain())
        {
            return Err(SimplicialError::InvalidSquare(
                "maps do not form a square".into(),
            ));
        }
        if compose(&right, &top)? != compose(&bottom, &left)? {
            return Err(SimplicialError::InvalidSquare(
                "square does not commute".into(),
            ));
        }
        Ok(LiftingProblem {
            left,
            right,
            top,
            bottom,
        })
    }

    pub(crate) fn new_unchecked(
        left: SimplicialMap,
        right: SimplicialMap,
        top: SimplicialMap,
        bottom: SimplicialMap,
    ) -> Self {
        LiftingProblem {
            left,
            right,
            top,
            bottom,
        }
    }

    /// Checks both triangles by composition.
    pub fn is_solved_by(&self, h: &SimplicialMap) -> bool {
        h.validate().is_ok()
            && compose(h, &self.left).is_ok_and(|m| m == self.top)
            && compose(&self.right, h).is_ok_and(|m| m == self.bottom)
    }

    /// Values of the diagonal forced by `top` on the image of `left`.
    pub(crate) fn forced_values(&self) -> Vec<Option<SimplexExpr>> {
        forced(&self.left, self.top.values())
    }
}

pub(crate) fn forced(left: &SimplicialMap, top: &[SimplexExpr]) -> Vec<Option<SimplexExpr>> {
    let mut fixed = vec![None; left.codomain().len()];
    for (a, image) in left.values().iter().enumerate() {
        fixed[image.base] = Some(top[a]);
    }
    fixed
}

/// The canonically least diagonal filler, or `None` after exhaustive search.
pub fn solve_lift(prob: &LiftingProblem) -> Option<SimplicialMap> {
    solve_lift_ordered(prob, SearchOrder::Canonical)
}

pub(crate) fn solve_lift_ordered(
    prob: &LiftingProblem,
    order: SearchOrder,
) -> Option<SimplicialMap> {
    let b = prob.left.codomain();
    let index = SimplexIndex::new(prob.right.domain(), b.dim().unwrap_or(0));
    let search = MapSearch::new(b, &index)
        .fixed(prob.forced_values())
        .over(&prob.right, prob.bottom.values().to_vec())
        .order(order);
    let h = search.first().map(|values| search.to_map(values))?;
    debug_assert!(prob.is_solved_by(&h));
    Some(h)
}

/// Every commuting square from `left` to `right`, ordered by bottom, then top.
pub fn squares(left: &SimplicialMap, right: &SimplicialMap) -> Vec<LiftingProblem> {
    let a = left.domain();
    let b = left.codomain();
    let dim = b.dim().unwrap_or(0);
    let x_index = SimplexIndex::new(right.codomain(), dim);
    let y_index = SimplexIndex::new(right.domain(), dim);
    let mut out = Vec::new();
    for v in MapSearch::new(b, &x_index).collect() {
        let targets = left.values().iter().map(|i| v[i.base]).collect();
        let bottom = SimplicialMap::new_unchecked(b.clone(), right.codomain().clone(), v);
        for u in MapSearch::new(a, &y_index).over(right, targets).collect() {
            out.push(LiftingProblem::new_unchecked(
                left.clone(),
                right.clone(),
                SimplicialMap::new_unchecked(a.clone(), right.domain().clone(), u),
                bottom.clone(),
            ));
        }
    }
    out
}

/// The least square `(bottom, top)` for `left` against `right` without a
/// diagonal, in enumeration order. Squares are checked in parallel and
/// merged by canonical minimum.
pub(crate) fn first_unliftable(
    left: &SimplicialMap,
    right: &SimplicialMap,
    order: SearchOrder,
) -> Option<LiftingProblem> {
    let a = left.domain();
    let b = left.codomain();
    let dim = b.dim().unwrap_or(0);
    let x_index = SimplexIndex::new(right.codomain(), dim);
    let y_index = SimplexIndex::new(right.domain(), dim);
    let bottoms = MapSearch::new(b, &x_index).order(order).collect();

    let found = bottoms.par_iter().find_map_first(|v| {
        let targets: Vec<SimplexExpr> = left.values().iter().map(|i| v[i.base]).collect();
        let mut failing = None;
        MapSearch::new(a, &y_index)
            .over(right, targets)
            .order(order)
            .for_each(|u| {
                let lift = MapSearch::new(b, &y_index)
                    .fixed(forced(left, u))
                    .over(right, v.clone())
                    .order(order)
                    .first();
                if lift.is_none() {
                    failing = Some(u.to_vec());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
        failing.map(|u| (v.clone(), u))
    })?;

    let (v, u) = found;
    Some(LiftingProblem::new_unchecked(
        left.clone(),
        right.clone(),
        SimplicialMap::new_unchecked(a.clone(), right.domain().clone(), u),
        SimplicialMap::new_unchecked(b.clone(), right.codomain().clone(), v),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::coproduct;
    use crate::standard::{boundary, horn, std_simplex};
    use crate::surjection::OrdinalSurjection;
    use crate::SimplicialSet;

    fn arc(n: usize) -> Arc<SimplicialSet> {
        Arc::new(std_simplex(n))
    }

    fn to_point(x: &Arc<SimplicialSet>) -> SimplicialMap {
        let pt = arc(0);
        let values = x
            .cells()
            .iter()
            .map(|c| SimplexExpr {
                base: 0,
                surj: OrdinalSurjection::all(c.dim, 0)[0],
            })
            .collect();
        SimplicialMap::new(x.clone(), pt, values).unwrap()
    }

    #[test]
    fn identity_right_leg_lifts_the_edge() {
        let (_, i1) = boundary(1);
        let d1 = i1.codomain().clone();
        let p = SimplicialMap::identity(&d1);
        let top = i1.clone();
        let bottom = SimplicialMap::identity(&d1);
        let prob = LiftingProblem::new(i1, p, top, bottom.clone()).unwrap();
        assert_eq!(solve_lift(&prob), Some(bottom));
    }

    #[test]
    fn two_points_over_a_point_do_not_lift() {
        let (_, i1) = boundary(1);
        let pt = arc(0);
        let (two, _) = coproduct(&pt, &pt);
        let p = to_point(&two);
        let top = SimplicialMap::new(
            i1.domain().clone(),
            two.clone(),
            vec![SimplexExpr::cell(0, 0), SimplexExpr::cell(1, 0)],
        )
        .unwrap();
        let bottom = to_point(i1.codomain());
        let prob = LiftingProblem::new(i1, p, top, bottom).unwrap();
        assert_eq!(solve_lift(&prob), None);
    }

    #[test]
    fn outer_horn_into_an_edge_does_not_lift() {
        let (h, incl) = horn(2, 0).unwrap();
        let d1 = arc(1);
        let p = to_point(&d1);
        // 01 -> the edge, 02 -> the degenerate edge at 0.
        let values = h
            .cells()
            .iter()
            .map(|c| match c.id.as_str() {
                "0" => SimplexExpr::cell(0, 0),
                "1" => SimplexExpr::cell(1, 0),
                "2" => SimplexExpr::cell(0, 0),
                "01" => SimplexExpr::cell(2, 1),
                "02" => SimplexExpr {
                    base: 0,
                    surj: OrdinalSurjection::new(1, &[0]).unwrap(),
                },
                other => panic!("unexpected cell {other}"),
            })
            .collect();
        let top = SimplicialMap::new(h.clone(), d1, values).unwrap();
        let bottom = to_point(incl.codomain());
        let prob = LiftingProblem::new(incl, p, top, bottom).unwrap();
        assert!(solve_lift(&prob).is_none());
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let (_, i1) = boundary(1);
        let d1 = i1.codomain().clone();
        let pt = arc(0);
        let v0 = SimplicialMap::new(pt, d1.clone(), vec![SimplexExpr::cell(0, 0)]).unwrap();
        let const0 = compose(&v0, &to_point(&d1)).unwrap();
        let p = SimplicialMap::identity(&d1);
        let err = LiftingProblem::new(i1.clone(), p, i1, const0).unwrap_err();
        assert!(matches!(err, SimplicialError::InvalidSquare(_)));
    }

    #[test]
    fn non_mono_left_leg_is_rejected() {
        let d1 = arc(1);
        let f = to_point(&d1);
        let id_pt = SimplicialMap::identity(f.codomain());
        let err = LiftingProblem::new(f.clone(), id_pt.clone(), f, id_pt).unwrap_err();
        assert!(matches!(err, SimplicialError::InvalidSquare(_)));
    }
}
