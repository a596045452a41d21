//! Finite simplicial sets presented by their nondegenerate simplices.
//!
//! Every simplex, degenerate or not, is written uniquely as a pair
//! `(η, x)` of a monotone surjection and a nondegenerate simplex
//! ([`SimplexExpr`]). Faces and degeneracies of such pairs are computed by
//! pushing the operator through `η` and, when a genuine face of `x` is
//! reached, substituting the stored face of `x`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use crate::error::{Result, SimplicialError};
use crate::surjection::{factor, Monotone, OrdinalSurjection, MAX_DIM};

/// Canonical pair `(η, x)`: the degeneracy `η` applied to the nondegenerate
/// simplex with index `base` in its simplicial set.
///
/// Indices follow the canonical order of the owning set (dimension, then id),
/// so the derived ordering is the enumeration order used by all searches.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SimplexExpr {
    pub base: usize,
    pub surj: OrdinalSurjection,
}

impl SimplexExpr {
    /// The nondegenerate simplex `base` itself.
    pub fn cell(base: usize, dim: usize) -> Self {
        SimplexExpr {
            base,
            surj: OrdinalSurjection::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.surj.source_dim()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.surj.is_identity()
    }

    /// `η'^*` of this simplex for a further surjection `η'` onto its dimension.
    pub fn degenerate_by(&self, outer: &OrdinalSurjection) -> SimplexExpr {
        SimplexExpr {
            base: self.base,
            surj: self.surj.after(outer),
        }
    }
}

/// A simplicial operator applied by [`SimplicialSet::normalize`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimplicialOperator {
    Face(usize),
    Degeneracy(usize),
}

/// A nondegenerate simplex with its stored faces `d_0 … d_dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub faces: Vec<SimplexExpr>,
}

/// Cell description whose faces point at positions in the same input list.
#[derive(Clone, Debug)]
pub(crate) struct RawCell {
    pub id: String,
    pub dim: usize,
    pub faces: Vec<(OrdinalSurjection, usize)>,
}

#[derive(Clone)]
pub struct SimplicialSet {
    name: String,
    cells: Vec<Cell>,
    index: HashMap<String, usize>,
    dim_start: Vec<usize>,
    // restrict[x][S] is the face of x spanned by the vertex subset S.
    restrict: Vec<Box<[SimplexExpr]>>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("name", &self.name)
            .field("counts", &self.counts())
            .finish()
    }
}

/// Structural equality: same name and the same presentation.
impl PartialEq for SimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.cells == other.cells
    }
}

impl Eq for SimplicialSet {}

impl SimplicialSet {
    pub fn empty(name: impl Into<String>) -> Self {
        SimplicialSet::from_raw(name.into(), Vec::new()).expect("empty set is valid")
    }

    /// Sorts the cells canonically, resolves faces and checks every invariant.
    pub(crate) fn from_raw(name: String, raw: Vec<RawCell>) -> Result<Self> {
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| (raw[a].dim, &raw[a].id).cmp(&(raw[b].dim, &raw[b].id)));
        let mut position = vec![0usize; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }

        let mut index = HashMap::with_capacity(raw.len());
        for &old in &order {
            let cell = &raw[old];
            if cell.dim > MAX_DIM {
                return Err(SimplicialError::DimensionTooLarge(cell.dim));
            }
            if index.insert(cell.id.clone(), position[old]).is_some() {
                return Err(SimplicialError::DuplicateId(cell.id.clone()));
            }
        }

        let mut set = SimplicialSet {
            name,
            cells: Vec::with_capacity(raw.len()),
            index,
            dim_start: Vec::new(),
            restrict: Vec::with_capacity(raw.len()),
        };

        for &old in &order {
            let cell = &raw[old];
            let expected = if cell.dim == 0 { 0 } else { cell.dim + 1 };
            if cell.faces.len() != expected {
                return Err(SimplicialError::FaceCount {
                    id: cell.id.clone(),
                    dim: cell.dim,
                    found: cell.faces.len(),
                });
            }
            let mut faces = Vec::with_capacity(expected);
            for (k, &(surj, target)) in cell.faces.iter().enumerate() {
                let Some(&base) = position.get(target) else {
                    return Err(SimplicialError::FaceExpression {
                        id: cell.id.clone(),
                        face: k,
                    });
                };
                if surj.source_dim() + 1 != cell.dim {
                    return Err(SimplicialError::FaceDimension {
                        id: cell.id.clone(),
                        face: k,
                        expected: cell.dim - 1,
                        found: surj.source_dim(),
                    });
                }
                // Faces may only refer to cells already admitted, i.e. of lower dimension.
                if base >= set.cells.len() || surj.target_dim() != set.cells[base].dim {
                    return Err(SimplicialError::FaceExpression {
                        id: cell.id.clone(),
                        face: k,
                    });
                }
                faces.push(SimplexExpr { base, surj });
            }
            let new_cell = Cell {
                id: cell.id.clone(),
                dim: cell.dim,
                faces,
            };
            set.check_identities(&new_cell)?;
            let table = set.restriction_table(set.cells.len(), &new_cell);
            set.cells.push(new_cell);
            set.restrict.push(table);
        }

        let top = set.cells.last().map_or(0, |c| c.dim + 1);
        let mut dim_start = vec![0usize; top + 1];
        for d in 0..=top {
            dim_start[d] = set.cells.partition_point(|c| c.dim < d);
        }
        set.dim_start = dim_start;
        Ok(set)
    }

    fn check_identities(&self, cell: &Cell) -> Result<()> {
        let k = cell.dim;
        if k < 2 {
            return Ok(());
        }
        for j in 1..=k {
            for i in 0..j {
                let lhs = self.apply_monotone(cell.faces[j], &Monotone::coface(k - 1, i));
                let rhs = self.apply_monotone(cell.faces[i], &Monotone::coface(k - 1, j - 1));
                if lhs != rhs {
                    return Err(SimplicialError::SimplicialIdentity {
                        id: cell.id.clone(),
                        i,
                        j,
                    });
                }
            }
        }
        Ok(())
    }

    fn restriction_table(&self, me: usize, cell: &Cell) -> Box<[SimplexExpr]> {
        let k = cell.dim;
        let full = (1u32 << (k + 1)) - 1;
        let mut table = vec![SimplexExpr::cell(me, k); 1 << (k + 1)];
        for mask in 1..full {
            // Drop the highest missing vertex j through the stored face d_j.
            let j = (31 - (!mask & full).leading_zeros()) as usize;
            let low = mask & ((1u32 << j) - 1);
            let high = (mask >> (j + 1)) << j;
            let theta = Monotone::subset(low | high);
            table[mask as usize] = self.apply_monotone(cell.faces[j], &theta);
        }
        table.into_boxed_slice()
    }

    /// `θ^*(η, x) = (η∘θ)^* x`, renormalised through the restriction table.
    pub(crate) fn apply_monotone(&self, e: SimplexExpr, theta: &Monotone) -> SimplexExpr {
        let (mask, sigma) = factor(&e.surj, theta);
        let r = self.restrict[e.base][mask as usize];
        SimplexExpr {
            base: r.base,
            surj: r.surj.after(&sigma),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, index: usize) -> &Cell {
        &self.cells[index]
    }

    pub fn id(&self, index: usize) -> &str {
        &self.cells[index].id
    }

    pub fn lookup(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Largest dimension of a nondegenerate simplex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    /// Indices of the nondegenerate simplices of dimension `d`.
    pub fn cells_of_dim(&self, d: usize) -> Range<usize> {
        if d + 1 >= self.dim_start.len() {
            return self.cells.len()..self.cells.len();
        }
        self.dim_start[d]..self.dim_start[d + 1]
    }

    /// Number of nondegenerate simplices in each dimension `0..=dim`.
    pub fn counts(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.cells_of_dim(d).len()).collect(),
        }
    }

    pub fn check_expr(&self, e: &SimplexExpr) -> Result<()> {
        if e.base >= self.cells.len() || e.surj.target_dim() != self.cells[e.base].dim {
            return Err(SimplicialError::Malformed(format!(
                "expression {e:?} is not valid in `{}`",
                self.name
            )));
        }
        Ok(())
    }

    pub fn face(&self, e: SimplexExpr, i: usize) -> Result<SimplexExpr> {
        self.normalize(e, SimplicialOperator::Face(i))
    }

    pub fn degeneracy(&self, e: SimplexExpr, i: usize) -> Result<SimplexExpr> {
        self.normalize(e, SimplicialOperator::Degeneracy(i))
    }

    /// Canonical expression of `d_i e` or `s_i e`.
    pub fn normalize(&self, e: SimplexExpr, op: SimplicialOperator) -> Result<SimplexExpr> {
        self.check_expr(&e)?;
        let n = e.dim();
        match op {
            SimplicialOperator::Face(i) => {
                if n == 0 || i > n {
                    return Err(SimplicialError::IndexOutOfRange { index: i, dim: n });
                }
                Ok(self.face_unchecked(e, i))
            }
            SimplicialOperator::Degeneracy(i) => {
                if i > n {
                    return Err(SimplicialError::IndexOutOfRange { index: i, dim: n });
                }
                if n + 1 > MAX_DIM {
                    return Err(SimplicialError::DimensionTooLarge(n + 1));
                }
                Ok(self.apply_monotone(e, &Monotone::codegeneracy(n, i)))
            }
        }
    }

    pub(crate) fn face_unchecked(&self, e: SimplexExpr, i: usize) -> SimplexExpr {
        self.apply_monotone(e, &Monotone::coface(e.dim(), i))
    }

    /// Vertex `p` of `e`, as the index of a 0-dimensional cell.
    pub fn vertex(&self, e: &SimplexExpr, p: usize) -> usize {
        let q = e.surj.apply(p);
        self.restrict[e.base][1usize << q].base
    }

    pub fn vertices(&self, e: &SimplexExpr) -> Vec<usize> {
        (0..=e.dim()).map(|p| self.vertex(e, p)).collect()
    }

    /// Vertex cells of a nondegenerate simplex, without repetition.
    pub fn cell_vertices(&self, base: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..=self.cells[base].dim)
            .map(|q| self.restrict[base][1usize << q].base)
            .collect();
        v.dedup();
        v
    }

    /// Renders `e` as `id` or `s{c0,c1}(id)`.
    pub fn render(&self, e: &SimplexExpr) -> String {
        let id = &self.cells[e.base].id;
        if e.surj.is_identity() {
            id.clone()
        } else {
            format!("{}({})", e.surj, id)
        }
    }

    /// Same presentation under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> SimplicialSet {
        SimplicialSet {
            name: name.into(),
            ..self.clone()
        }
    }

    /// Cells in the raw form used by internal constructors.
    pub(crate) fn raw_cells(&self) -> Vec<RawCell> {
        self.cells
            .iter()
            .map(|c| RawCell {
                id: c.id.clone(),
                dim: c.dim,
                faces: c.faces.iter().map(|f| (f.surj, f.base)).collect(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::std_simplex;

    fn expr(x: &SimplicialSet, collapse: &[usize], dim: usize, id: &str) -> SimplexExpr {
        SimplexExpr {
            base: x.lookup(id).unwrap(),
            surj: OrdinalSurjection::new(dim, collapse).unwrap(),
        }
    }

    #[test]
    fn stored_face_of_top_cell() {
        let d2 = std_simplex(2);
        let top = expr(&d2, &[], 2, "012");
        assert_eq!(d2.face(top, 0).unwrap(), expr(&d2, &[], 1, "12"));
    }

    #[test]
    fn face_cancels_degeneracy() {
        let d2 = std_simplex(2);
        let s0x = expr(&d2, &[0], 2, "01");
        // d0 s0 = id
        assert_eq!(d2.face(s0x, 0).unwrap(), expr(&d2, &[], 1, "01"));
        assert_eq!(d2.face(s0x, 1).unwrap(), expr(&d2, &[], 1, "01"));
    }

    #[test]
    fn face_commutes_past_degeneracy() {
        // d2 s0 x = s0 d1 x, and d1 of the edge 01 is the vertex 0.
        let d2 = std_simplex(2);
        let s0x = expr(&d2, &[0], 2, "01");
        assert_eq!(d2.face(s0x, 2).unwrap(), expr(&d2, &[0], 1, "0"));
    }

    #[test]
    fn degeneracy_then_face_is_identity() {
        let d3 = std_simplex(3);
        for c in d3.cells() {
            let e = SimplexExpr::cell(d3.lookup(&c.id).unwrap(), c.dim);
            for i in 0..=c.dim {
                let s = d3.degeneracy(e, i).unwrap();
                assert_eq!(d3.face(s, i).unwrap(), e);
                assert_eq!(d3.face(s, i + 1).unwrap(), e);
            }
        }
    }

    #[test]
    fn face_index_out_of_range() {
        let d1 = std_simplex(1);
        let edge = expr(&d1, &[], 1, "01");
        assert!(matches!(
            d1.face(edge, 2),
            Err(SimplicialError::IndexOutOfRange { .. })
        ));
        let v = expr(&d1, &[], 0, "0");
        assert!(d1.face(v, 0).is_err());
    }

    #[test]
    fn malformed_expression_rejected() {
        let d1 = std_simplex(1);
        let bad = SimplexExpr {
            base: d1.lookup("01").unwrap(),
            surj: OrdinalSurjection::identity(0),
        };
        assert!(matches!(
            d1.face(bad, 0),
            Err(SimplicialError::Malformed(_))
        ));
    }

    #[test]
    fn vertices_of_degenerate_simplex() {
        let d2 = std_simplex(2);
        let e = expr(&d2, &[1], 2, "12");
        let v: Vec<&str> = d2.vertices(&e).into_iter().map(|i| d2.id(i)).collect();
        assert_eq!(v, vec!["1", "2", "2"]);
    }
}
