//! Search for a map `i` as a retract of a map `j` in the arrow category.

use std::ops::ControlFlow;

use crate::lifting::search::{MapSearch, SimplexIndex};
use crate::map::{compose, SimplicialMap};
use crate::sset::SimplexExpr;

/// `i: A → B` as a retract of `j: C → D`:
///
/// ```text
/// A --s_top--> C --r_top--> A
/// i            j            i
/// B --s_bot--> D --r_bot--> B
/// ```
///
/// with both squares commuting and both rows composing to identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractDiagram {
    pub s_top: SimplicialMap,
    pub s_bot: SimplicialMap,
    pub r_top: SimplicialMap,
    pub r_bot: SimplicialMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RetractOutcome {
    Found(Box<RetractDiagram>),
    /// Exhaustive search found no diagram.
    Absent,
    /// The budget ran out before the search space was exhausted.
    BudgetExhausted {
        examined: usize,
    },
}

impl RetractDiagram {
    /// Re-checks every equation by composition.
    pub fn verify(&self, i: &SimplicialMap, j: &SimplicialMap) -> bool {
        let eq = |a: Result<SimplicialMap, _>, b: Result<SimplicialMap, _>| match (a, b) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        [&self.s_top, &self.s_bot, &self.r_top, &self.r_bot]
            .iter()
            .all(|m| m.validate().is_ok())
            && eq(compose(j, &self.s_top), compose(&self.s_bot, i))
            && eq(compose(i, &self.r_top), compose(&self.r_bot, j))
            && compose(&self.r_top, &self.s_top)
                .is_ok_and(|m| m == SimplicialMap::identity(i.domain()))
            && compose(&self.r_bot, &self.s_bot)
                .is_ok_and(|m| m == SimplicialMap::identity(i.codomain()))
    }
}

/// Preimage of `e` under a mono, if `e` is in its image.
fn pull_back_along_mono(table: &[Option<usize>], e: SimplexExpr) -> Option<SimplexExpr> {
    table[e.base].map(|base| SimplexExpr { base, surj: e.surj })
}

/// Exhaustive search within `budget` candidate maps. Both legs must be monos.
pub fn retract_search(i: &SimplicialMap, j: &SimplicialMap, budget: usize) -> RetractOutcome {
    assert!(i.is_mono() && j.is_mono(), "retract search needs monos");
    let (a, b) = (i.domain(), i.codomain());
    let (c, d) = (j.domain(), j.codomain());
    let d_index = SimplexIndex::new(d, b.dim().unwrap_or(0));
    let b_index = SimplexIndex::new(b, d.dim().unwrap_or(0));
    let i_pre = i.preimage_table();
    let j_pre = j.preimage_table();

    let mut examined = 0usize;
    let mut outcome = RetractOutcome::Absent;
    MapSearch::new(b, &d_index).for_each(|s_bot_values| {
        examined += 1;
        if examined > budget {
            outcome = RetractOutcome::BudgetExhausted {
                examined: examined - 1,
            };
            return ControlFlow::Break(());
        }
        let s_bot = SimplicialMap::new_unchecked(b.clone(), d.clone(), s_bot_values.to_vec());
        if !s_bot.is_mono() {
            return ControlFlow::Continue(());
        }
        let Some(s_top_values) = i
            .values()
            .iter()
            .map(|e| pull_back_along_mono(&j_pre, s_bot.value(*e)))
            .collect::<Option<Vec<_>>>()
        else {
            return ControlFlow::Continue(());
        };
        let s_top = SimplicialMap::new_unchecked(a.clone(), c.clone(), s_top_values);

        let mut fixed = vec![None; d.len()];
        for (cell, v) in s_bot_values.iter().enumerate() {
            fixed[v.base] = Some(SimplexExpr::cell(cell, b.cell(cell).dim));
        }
        let mut inner = ControlFlow::Continue(());
        MapSearch::new(d, &b_index)
            .fixed(fixed)
            .for_each(|r_bot_values| {
                examined += 1;
                if examined > budget {
                    inner = ControlFlow::Break(());
                    return ControlFlow::Break(());
                }
                let r_bot =
                    SimplicialMap::new_unchecked(d.clone(), b.clone(), r_bot_values.to_vec());
                let Some(r_top_values) = j
                    .values()
                    .iter()
                    .map(|e| pull_back_along_mono(&i_pre, r_bot.value(*e)))
                    .collect::<Option<Vec<_>>>()
                else {
                    return ControlFlow::Continue(());
                };
                let diagram = RetractDiagram {
                    s_top: s_top.clone(),
                    s_bot: s_bot.clone(),
                    r_top: SimplicialMap::new_unchecked(c.clone(), a.clone(), r_top_values),
                    r_bot,
                };
                if diagram.verify(i, j) {
                    outcome = RetractOutcome::Found(Box::new(diagram));
                    inner = ControlFlow::Break(());
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
        if inner.is_break() && !matches!(outcome, RetractOutcome::Found(_)) {
            outcome = RetractOutcome::BudgetExhausted { examined: budget };
        }
        inner
    });
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::pushout::pushout_product;
    use crate::standard::boundary;

    #[test]
    fn every_mono_is_a_retract_of_itself() {
        let (_, i2) = boundary(2);
        match retract_search(&i2, &i2, 10_000) {
            RetractOutcome::Found(d) => {
                assert!(d.verify(&i2, &i2));
                assert_eq!(d.s_bot, SimplicialMap::identity(i2.codomain()));
            }
            other => panic!("expected a diagram, got {other:?}"),
        }
    }

    #[test]
    fn edge_boundary_is_a_retract_of_its_degenerate_prism() {
        let (_, i0) = boundary(0);
        let (_, i1) = boundary(1);
        let pp = pushout_product(&i1, &i0).unwrap();
        assert!(matches!(
            retract_search(&i1, &pp, 10_000),
            RetractOutcome::Found(_)
        ));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let (_, i1) = boundary(1);
        let (_, i2) = boundary(2);
        let pp = pushout_product(&i1, &i1).unwrap();
        assert!(matches!(
            retract_search(&i2, &pp, 1),
            RetractOutcome::BudgetExhausted { .. }
        ));
    }
}
