//! Products and pullbacks.
//!
//! A nondegenerate `n`-simplex of `X × Y` is a pair of `n`-simplices
//! `((η, x), (μ, y))` whose collapse sets are disjoint. Faces are taken
//! componentwise and the common collapse positions are factored back out.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Result, SimplicialError};
use crate::map::SimplicialMap;
use crate::sset::{RawCell, SimplexExpr, SimplicialSet};
use crate::surjection::{OrdinalSurjection, MAX_DIM};

/// `X × Y` (or a face-closed part of it such as a pullback) with its
/// projections and the pair decomposition of each cell.
#[derive(Clone, Debug)]
pub struct Product {
    pub set: Arc<SimplicialSet>,
    pub proj1: SimplicialMap,
    pub proj2: SimplicialMap,
    pairs: Vec<(SimplexExpr, SimplexExpr)>,
    lookup: HashMap<(SimplexExpr, SimplexExpr), usize>,
}

impl Product {
    /// Components of a nondegenerate cell.
    pub fn pair(&self, cell: usize) -> (SimplexExpr, SimplexExpr) {
        self.pairs[cell]
    }

    /// Normal form of the simplex `(e, f)`; `None` when the pair is not a
    /// simplex of this (sub)product.
    pub fn locate(&self, e: SimplexExpr, f: SimplexExpr) -> Option<SimplexExpr> {
        debug_assert_eq!(e.dim(), f.dim());
        let (common, e0, f0) = split_common(e, f);
        self.lookup.get(&(e0, f0)).map(|&cell| SimplexExpr {
            base: cell,
            surj: OrdinalSurjection::from_mask(e.dim(), common),
        })
    }
}

fn split_common(e: SimplexExpr, f: SimplexExpr) -> (u32, SimplexExpr, SimplexExpr) {
    let common = e.surj.collapse_mask() & f.surj.collapse_mask();
    let e0 = SimplexExpr {
        base: e.base,
        surj: e.surj.divide(common),
    };
    let f0 = SimplexExpr {
        base: f.base,
        surj: f.surj.divide(common),
    };
    (common, e0, f0)
}

fn render_pair(x: &SimplicialSet, y: &SimplicialSet, e: &SimplexExpr, f: &SimplexExpr) -> String {
    format!("({},{})", x.render(e), y.render(f))
}

/// The part of `X × Y` on jointly nondegenerate pairs accepted by `keep`.
/// `keep` must describe a face-closed family.
fn sub_product<F>(
    x: &Arc<SimplicialSet>,
    y: &Arc<SimplicialSet>,
    name: String,
    keep: F,
) -> Result<Product>
where
    F: Fn(&SimplexExpr, &SimplexExpr) -> bool,
{
    let mut pairs: Vec<(SimplexExpr, SimplexExpr)> = Vec::new();
    let (Some(dx), Some(dy)) = (x.dim(), y.dim()) else {
        return assemble(x, y, name, pairs);
    };
    let top = dx + dy;
    for n in 0..=top {
        for xc in 0..=dx.min(n) {
            for yc in n.saturating_sub(xc)..=dy.min(n) {
                if n > MAX_DIM {
                    return Err(SimplicialError::DimensionTooLarge(n));
                }
                let left = OrdinalSurjection::all(n, xc);
                let right = OrdinalSurjection::all(n, yc);
                for a in x.cells_of_dim(xc) {
                    for b in y.cells_of_dim(yc) {
                        for sa in &left {
                            for sb in &right {
                                if sa.collapse_mask() & sb.collapse_mask() != 0 {
                                    continue;
                                }
                                let e = SimplexExpr { base: a, surj: *sa };
                                let f = SimplexExpr { base: b, surj: *sb };
                                if keep(&e, &f) {
                                    pairs.push((e, f));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assemble(x, y, name, pairs)
}

fn assemble(
    x: &Arc<SimplicialSet>,
    y: &Arc<SimplicialSet>,
    name: String,
    pairs: Vec<(SimplexExpr, SimplexExpr)>,
) -> Result<Product> {
    let provisional: HashMap<(SimplexExpr, SimplexExpr), usize> =
        pairs.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let mut raw = Vec::with_capacity(pairs.len());
    for (e, f) in &pairs {
        let n = e.dim();
        let mut faces = Vec::with_capacity(if n == 0 { 0 } else { n + 1 });
        if n > 0 {
            for i in 0..=n {
                let (common, e0, f0) =
                    split_common(x.face_unchecked(*e, i), y.face_unchecked(*f, i));
                let target = *provisional.get(&(e0, f0)).ok_or_else(|| {
                    SimplicialError::Malformed("sub-product is not closed under faces".into())
                })?;
                faces.push((OrdinalSurjection::from_mask(n - 1, common), target));
            }
        }
        raw.push(RawCell {
            id: render_pair(x, y, e, f),
            dim: n,
            faces,
        });
    }
    let ids: Vec<String> = raw.iter().map(|c| c.id.clone()).collect();
    let set = Arc::new(SimplicialSet::from_raw(name, raw)?);
    let mut slots = vec![None; pairs.len()];
    for (k, id) in ids.iter().enumerate() {
        slots[set.lookup(id).expect("cell survives sorting")] = Some(pairs[k]);
    }
    let ordered: Vec<(SimplexExpr, SimplexExpr)> = slots
        .into_iter()
        .map(|p| p.expect("every slot filled"))
        .collect();
    let lookup = ordered.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let proj1 = SimplicialMap::new_unchecked(
        set.clone(),
        x.clone(),
        ordered.iter().map(|p| p.0).collect(),
    );
    let proj2 = SimplicialMap::new_unchecked(
        set.clone(),
        y.clone(),
        ordered.iter().map(|p| p.1).collect(),
    );
    Ok(Product {
        set,
        proj1,
        proj2,
        pairs: ordered,
        lookup,
    })
}

/// Bracketed when it contains spaces, e.g. a coproduct name.
fn factor_name(x: &SimplicialSet) -> String {
    if x.name().contains(' ') {
        format!("({})", x.name())
    } else {
        x.name().to_string()
    }
}

/// `X × Y` with its projections.
pub fn product(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Product {
    let name = format!("{} x {}", factor_name(x), factor_name(y));
    sub_product(x, y, name, |_, _| true)
        .expect("products of valid sets are valid")
}

/// `X ×_Z Y` for `f: X → Z` and `g: Y → Z`, as a sub-simplicial set of `X × Y`.
pub fn pullback(f: &SimplicialMap, g: &SimplicialMap) -> Result<Product> {
    if !(Arc::ptr_eq(f.codomain(), g.codomain()) || f.codomain() == g.codomain()) {
        return Err(SimplicialError::CodomainMismatch(
            f.codomain().name().to_string(),
            g.codomain().name().to_string(),
        ));
    }
    let name = format!(
        "{} x_{} {}",
        factor_name(f.domain()),
        factor_name(f.codomain()),
        factor_name(g.domain())
    );
    sub_product(f.domain(), g.domain(), name, |e, e2| {
        f.value(*e) == g.value(*e2)
    })
}

/// `f × g : A × C → B × D` between already-built products.
pub fn product_map(
    f: &SimplicialMap,
    g: &SimplicialMap,
    source: &Product,
    target: &Product,
) -> Result<SimplicialMap> {
    let values = (0..source.set.len())
        .map(|c| {
            let (e, e2) = source.pair(c);
            target.locate(f.value(e), g.value(e2)).ok_or_else(|| {
                SimplicialError::NotComposable(format!(
                    "`{}` has no simplex over `{}`",
                    target.set.name(),
                    source.set.id(c)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMap::new_unchecked(
        source.set.clone(),
        target.set.clone(),
        values,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::coproduct;
    use crate::map::compose;
    use crate::standard::std_simplex;

    fn arc(n: usize) -> Arc<SimplicialSet> {
        Arc::new(std_simplex(n))
    }

    #[test]
    fn square_has_eleven_cells() {
        let sq = product(&arc(1), &arc(1));
        assert_eq!(sq.set.counts(), vec![4, 5, 2]);
        sq.proj1.validate().unwrap();
        sq.proj2.validate().unwrap();
    }

    #[test]
    fn prism_over_triangle_has_three_shuffles() {
        let p = product(&arc(1), &arc(2));
        assert_eq!(p.set.counts().last(), Some(&3));
        assert_eq!(p.set.dim(), Some(3));
    }

    #[test]
    fn point_is_a_unit() {
        let p = product(&arc(0), &arc(2));
        assert_eq!(p.set.counts(), arc(2).counts());
    }

    #[test]
    fn pullback_of_distinct_vertices_is_empty() {
        let d1 = arc(1);
        let pt = arc(0);
        let v0 = SimplicialMap::new(pt.clone(), d1.clone(), vec![SimplexExpr::cell(0, 0)]).unwrap();
        let v1 = SimplicialMap::new(pt, d1, vec![SimplexExpr::cell(1, 0)]).unwrap();
        let pb = pullback(&v0, &v1).unwrap();
        assert!(pb.set.is_empty());
    }

    #[test]
    fn pullback_of_mono_along_itself() {
        let d1 = arc(1);
        let (_, inj) = coproduct(&d1, &arc(0));
        let pb = pullback(&inj[0], &inj[0]).unwrap();
        assert_eq!(pb.set.counts(), d1.counts());
        let left = compose(&inj[0], &pb.proj1).unwrap();
        let right = compose(&inj[0], &pb.proj2).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn fiber_of_square_projection() {
        let d1 = arc(1);
        let sq = product(&d1, &d1);
        let v = SimplicialMap::new(arc(0), d1.clone(), vec![SimplexExpr::cell(1, 0)]).unwrap();
        let fiber = pullback(&sq.proj1, &v).unwrap();
        assert_eq!(fiber.set.counts(), vec![2, 1]);
        fiber.proj1.validate().unwrap();
    }

    #[test]
    fn pullback_rejects_mismatched_codomains() {
        let a = SimplicialMap::identity(&arc(1));
        let b = SimplicialMap::identity(&arc(2));
        assert!(matches!(
            pullback(&a, &b),
            Err(SimplicialError::CodomainMismatch(..))
        ));
    }

    #[test]
    fn product_map_of_identities_is_identity() {
        let sq = product(&arc(1), &arc(1));
        let id = SimplicialMap::identity(&arc(1));
        let m = product_map(&id, &id, &sq, &sq).unwrap();
        assert_eq!(m, SimplicialMap::identity(&sq.set));
    }
}
