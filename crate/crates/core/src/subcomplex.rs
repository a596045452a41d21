use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Result, SimplicialError};
use crate::map::SimplicialMap;
use crate::sset::{RawCell, SimplexExpr, SimplicialSet};

/// A face-closed set of nondegenerate simplices of an ambient set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    ambient: Arc<SimplicialSet>,
    members: BTreeSet<usize>,
}

impl Subcomplex {
    /// Least face-closed superset of `seed` (cell indices).
    pub fn closure_of(ambient: &Arc<SimplicialSet>, seed: impl IntoIterator<Item = usize>) -> Self {
        let mut members = BTreeSet::new();
        let mut stack: Vec<usize> = seed.into_iter().collect();
        while let Some(c) = stack.pop() {
            if members.insert(c) {
                stack.extend(ambient.cell(c).faces.iter().map(|f| f.base));
            }
        }
        Subcomplex {
            ambient: ambient.clone(),
            members,
        }
    }

    /// Wraps `members` without closing; callers check [`Self::is_closed`].
    pub fn from_members(ambient: &Arc<SimplicialSet>, members: BTreeSet<usize>) -> Self {
        Subcomplex {
            ambient: ambient.clone(),
            members,
        }
    }

    pub fn full(ambient: &Arc<SimplicialSet>) -> Self {
        Subcomplex::from_members(ambient, (0..ambient.len()).collect())
    }

    pub fn ambient(&self) -> &Arc<SimplicialSet> {
        &self.ambient
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.members.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member ids in canonical order.
    pub fn ids(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|&c| self.ambient.id(c).to_string())
            .collect()
    }

    /// First member with a face outside the set, as `(member, face base)`.
    pub fn first_open_face(&self) -> Option<(usize, usize)> {
        self.members.iter().find_map(|&c| {
            self.ambient
                .cell(c)
                .faces
                .iter()
                .find(|f| !self.members.contains(&f.base))
                .map(|f| (c, f.base))
        })
    }

    pub fn is_closed(&self) -> bool {
        self.first_open_face().is_none()
    }

    /// Cells of the ambient set not in this subcomplex.
    pub fn complement_members(&self) -> BTreeSet<usize> {
        (0..self.ambient.len())
            .filter(|c| !self.members.contains(c))
            .collect()
    }

    /// The subcomplex as a simplicial set with the same ids, together with
    /// its inclusion into the ambient set.
    pub fn realize(&self, name: impl Into<String>) -> Result<(Arc<SimplicialSet>, SimplicialMap)> {
        if let Some((c, _)) = self.first_open_face() {
            return Err(SimplicialError::Malformed(format!(
                "`{}` is not face-closed",
                self.ambient.id(c)
            )));
        }
        let members: Vec<usize> = self.members.iter().copied().collect();
        let mut position = vec![usize::MAX; self.ambient.len()];
        for (k, &c) in members.iter().enumerate() {
            position[c] = k;
        }
        let raw = members
            .iter()
            .map(|&c| {
                let cell = self.ambient.cell(c);
                RawCell {
                    id: cell.id.clone(),
                    dim: cell.dim,
                    faces: cell
                        .faces
                        .iter()
                        .map(|f| (f.surj, position[f.base]))
                        .collect(),
                }
            })
            .collect();
        let set = Arc::new(SimplicialSet::from_raw(name.into(), raw)?);
        // Ambient order restricts to the canonical order of the subset.
        let values = members
            .iter()
            .map(|&c| SimplexExpr::cell(c, self.ambient.cell(c).dim))
            .collect();
        let incl = SimplicialMap::new_unchecked(set.clone(), self.ambient.clone(), values);
        Ok((set, incl))
    }
}

/// Least face-closed set of simplices containing the given ids.
pub fn subcomplex_closure(x: &Arc<SimplicialSet>, seed: &[&str]) -> Result<Subcomplex> {
    let cells = seed
        .iter()
        .map(|id| {
            x.lookup(id)
                .ok_or_else(|| SimplicialError::UnknownId(id.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subcomplex::closure_of(x, cells))
}

/// Image of a simplicial map: the bases of the values, which are already
/// face-closed for a valid map.
pub fn image(f: &SimplicialMap) -> Subcomplex {
    let members: BTreeSet<usize> = f.values().iter().map(|v| v.base).collect();
    let sub = Subcomplex::from_members(f.codomain(), members);
    assert!(
        sub.is_closed(),
        "image of a valid map must be closed under faces"
    );
    sub
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::coproduct;
    use crate::product::product;
    use crate::standard::std_simplex;

    #[test]
    fn closure_of_top_cell_is_everything() {
        let d2 = Arc::new(std_simplex(2));
        let s = subcomplex_closure(&d2, &["012"]).unwrap();
        assert_eq!(s.len(), 7);
    }

    #[test]
    fn closure_of_nothing_is_empty() {
        let d2 = Arc::new(std_simplex(2));
        assert!(subcomplex_closure(&d2, &[]).unwrap().is_empty());
    }

    #[test]
    fn closure_of_unknown_id_fails() {
        let d2 = Arc::new(std_simplex(2));
        assert_eq!(
            subcomplex_closure(&d2, &["013"]).unwrap_err(),
            SimplicialError::UnknownId("013".into())
        );
    }

    #[test]
    fn closure_of_diagonal_edge() {
        let d1 = Arc::new(std_simplex(1));
        let sq = product(&d1, &d1);
        let diagonal = sq
            .set
            .cells()
            .iter()
            .position(|c| c.dim == 1 && c.id == "(01,01)")
            .unwrap();
        let s = Subcomplex::closure_of(&sq.set, [diagonal]);
        assert_eq!(s.ids(), vec!["(0,0)", "(1,1)", "(01,01)"]);
        assert_eq!(Subcomplex::closure_of(&sq.set, s.members().clone()), s);
    }

    #[test]
    fn image_of_identity_and_vertex() {
        let d1 = Arc::new(std_simplex(1));
        assert_eq!(image(&SimplicialMap::identity(&d1)).len(), 3);
        let pt = Arc::new(std_simplex(0));
        let v0 = SimplicialMap::new(pt, d1.clone(), vec![SimplexExpr::cell(0, 0)]).unwrap();
        assert_eq!(image(&v0).ids(), vec!["0"]);
    }

    #[test]
    fn image_of_fold_is_onto() {
        let d1 = Arc::new(std_simplex(1));
        let (sum, _) = coproduct(&d1, &d1);
        let values = sum
            .cells()
            .iter()
            .map(|c| {
                let local = &c.id[2..];
                SimplexExpr::cell(d1.lookup(local).unwrap(), c.dim)
            })
            .collect();
        let fold = SimplicialMap::new(sum, d1, values).unwrap();
        assert_eq!(image(&fold).len(), 3);
    }

    #[test]
    fn realize_keeps_ids_and_faces() {
        let d2 = Arc::new(std_simplex(2));
        let s = subcomplex_closure(&d2, &["01", "2"]).unwrap();
        let (set, incl) = s.realize("sub").unwrap();
        assert_eq!(set.counts(), vec![3, 1]);
        incl.validate().unwrap();
        assert!(incl.is_mono());
    }
}
