use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SimplicialError};
use crate::sset::{SimplexExpr, SimplicialSet};

/// A simplicial map, given by the image of each nondegenerate simplex of the
/// domain. Values are indexed by the domain's canonical cell order.
#[derive(Clone)]
pub struct SimplicialMap {
    domain: Arc<SimplicialSet>,
    codomain: Arc<SimplicialSet>,
    values: Vec<SimplexExpr>,
}

impl fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialMap")
            .field("domain", &self.domain.name())
            .field("codomain", &self.codomain.name())
            .field("values", &self.values)
            .finish()
    }
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
            && (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
            && (Arc::ptr_eq(&self.codomain, &other.codomain) || self.codomain == other.codomain)
    }
}

impl Eq for SimplicialMap {}

impl SimplicialMap {
    /// Builds a map and checks dimensions and face commutation.
    pub fn new(
        domain: Arc<SimplicialSet>,
        codomain: Arc<SimplicialSet>,
        values: Vec<SimplexExpr>,
    ) -> Result<Self> {
        let map = SimplicialMap {
            domain,
            codomain,
            values,
        };
        map.validate()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(
        domain: Arc<SimplicialSet>,
        codomain: Arc<SimplicialSet>,
        values: Vec<SimplexExpr>,
    ) -> Self {
        debug_assert_eq!(domain.len(), values.len());
        SimplicialMap {
            domain,
            codomain,
            values,
        }
    }

    pub fn identity(x: &Arc<SimplicialSet>) -> Self {
        let values = x
            .cells()
            .iter()
            .enumerate()
            .map(|(i, c)| SimplexExpr::cell(i, c.dim))
            .collect();
        SimplicialMap::new_unchecked(x.clone(), x.clone(), values)
    }

    /// The unique map out of an empty simplicial set.
    pub fn from_empty(domain: &Arc<SimplicialSet>, codomain: &Arc<SimplicialSet>) -> Self {
        assert!(domain.is_empty());
        SimplicialMap::new_unchecked(domain.clone(), codomain.clone(), Vec::new())
    }

    pub fn domain(&self) -> &Arc<SimplicialSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SimplicialSet> {
        &self.codomain
    }

    pub fn values(&self) -> &[SimplexExpr] {
        &self.values
    }

    pub fn value_of(&self, cell: usize) -> SimplexExpr {
        self.values[cell]
    }

    /// Image of an arbitrary domain simplex: `f(η^* a) = η^* f(a)`.
    pub fn value(&self, e: SimplexExpr) -> SimplexExpr {
        self.values[e.base].degenerate_by(&e.surj)
    }

    fn label(&self) -> String {
        format!("{} -> {}", self.domain.name(), self.codomain.name())
    }

    /// Checks dimension preservation and `f(d_i a) = d_i f(a)` on every
    /// nondegenerate `a`, reporting the first failure in canonical order.
    pub fn validate(&self) -> Result<()> {
        if self.values.len() != self.domain.len() {
            let id = self
                .domain
                .cells()
                .get(self.values.len())
                .map_or_else(String::new, |c| c.id.clone());
            return Err(SimplicialError::MissingValue {
                map: self.label(),
                id,
            });
        }
        for (a, cell) in self.domain.cells().iter().enumerate() {
            let v = self.values[a];
            if self.codomain.check_expr(&v).is_err() || v.dim() != cell.dim {
                return Err(SimplicialError::ValueDimension {
                    map: self.label(),
                    id: cell.id.clone(),
                });
            }
            for (i, face) in cell.faces.iter().enumerate() {
                if self.value(*face) != self.codomain.face_unchecked(v, i) {
                    return Err(SimplicialError::FaceCommutation {
                        map: self.label(),
                        id: cell.id.clone(),
                        face: i,
                    });
                }
            }
        }
        Ok(())
    }

    /// Injective on nondegenerate simplices and never sends one to a
    /// degenerate simplex; by uniqueness of normal forms this is injectivity.
    pub fn is_mono(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        for v in &self.values {
            if !v.is_nondegenerate() || seen[v.base] {
                return false;
            }
            seen[v.base] = true;
        }
        true
    }

    /// For a mono, the preimage cell of a codomain cell.
    pub(crate) fn preimage_table(&self) -> Vec<Option<usize>> {
        let mut table = vec![None; self.codomain.len()];
        for (a, v) in self.values.iter().enumerate() {
            if v.is_nondegenerate() {
                table[v.base] = Some(a);
            }
        }
        table
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SimplicialMap) -> Result<SimplicialMap> {
        compose(next, self)
    }
}

/// `outer ∘ inner`, normalised pointwise.
pub fn compose(outer: &SimplicialMap, inner: &SimplicialMap) -> Result<SimplicialMap> {
    if !(Arc::ptr_eq(&inner.codomain, &outer.domain) || *inner.codomain == *outer.domain) {
        return Err(SimplicialError::NotComposable(format!(
            "`{}` does not match `{}`",
            inner.codomain.name(),
            outer.domain.name()
        )));
    }
    let values = inner.values.iter().map(|v| outer.value(*v)).collect();
    Ok(SimplicialMap::new_unchecked(
        inner.domain.clone(),
        outer.codomain.clone(),
        values,
    ))
}

/// Identity map of `x`.
pub fn identity(x: &Arc<SimplicialSet>) -> SimplicialMap {
    SimplicialMap::identity(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{boundary, std_simplex};
    use crate::surjection::OrdinalSurjection;

    #[test]
    fn identity_is_neutral() {
        let (_, incl) = boundary(2);
        let id_cod = identity(incl.codomain());
        let id_dom = identity(incl.domain());
        assert_eq!(compose(&id_cod, &incl).unwrap(), incl);
        assert_eq!(compose(&incl, &id_dom).unwrap(), incl);
    }

    #[test]
    fn boundary_inclusion_is_mono_and_valid() {
        let (_, incl) = boundary(3);
        incl.validate().unwrap();
        assert!(incl.is_mono());
    }

    #[test]
    fn collapse_to_point_is_valid_not_mono() {
        let d1 = Arc::new(std_simplex(1));
        let pt = Arc::new(std_simplex(0));
        let values = vec![
            SimplexExpr::cell(0, 0),
            SimplexExpr::cell(0, 0),
            SimplexExpr {
                base: 0,
                surj: OrdinalSurjection::new(1, &[0]).unwrap(),
            },
        ];
        let f = SimplicialMap::new(d1, pt, values).unwrap();
        assert!(!f.is_mono());
    }

    #[test]
    fn reversed_edge_is_rejected() {
        let d1 = Arc::new(std_simplex(1));
        // 0 -> 1, 1 -> 0, edge -> edge: d0(edge) = 1 should map to d0(edge) = 1.
        let values = vec![
            SimplexExpr::cell(1, 0),
            SimplexExpr::cell(0, 0),
            SimplexExpr::cell(2, 1),
        ];
        let err = SimplicialMap::new(d1.clone(), d1, values).unwrap_err();
        assert!(matches!(
            err,
            SimplicialError::FaceCommutation { face: 0, .. }
        ));
    }

    #[test]
    fn incompatible_composition() {
        let (_, a) = boundary(1);
        let (_, b) = boundary(2);
        assert!(matches!(
            compose(&a, &b),
            Err(SimplicialError::NotComposable(_))
        ));
    }
}
