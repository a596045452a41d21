//! Backtracking enumeration of simplicial maps between finite presentations.
//!
//! Nondegenerate simplices of the domain are visited in canonical order, so
//! the faces of a simplex are always assigned before the simplex itself.
//! Candidate values are looked up by their vertex tuple, which the already
//! assigned faces determine.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::map::SimplicialMap;
use crate::sset::{SimplexExpr, SimplicialSet};
use crate::surjection::OrdinalSurjection;

/// Candidate order during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchOrder {
    #[default]
    Canonical,
    Reversed,
}

/// Every simplex (degenerate ones included) of a set up to some dimension,
/// bucketed by vertex tuple and sorted canonically within each bucket.
#[derive(Debug)]
pub struct SimplexIndex {
    set: Arc<SimplicialSet>,
    buckets: Vec<HashMap<Vec<usize>, Vec<SimplexExpr>>>,
    all: Vec<Vec<SimplexExpr>>,
}

impl SimplexIndex {
    pub fn new(set: &Arc<SimplicialSet>, max_dim: usize) -> Self {
        let mut index = SimplexIndex {
            set: set.clone(),
            buckets: Vec::new(),
            all: Vec::new(),
        };
        index.extend_to(max_dim);
        index
    }

    pub fn set(&self) -> &Arc<SimplicialSet> {
        &self.set
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.all.len().checked_sub(1)
    }

    pub fn extend_to(&mut self, max_dim: usize) {
        for k in self.all.len()..=max_dim {
            let mut all = Vec::new();
            for l in 0..=k {
                let surjections = OrdinalSurjection::all(k, l);
                for base in self.set.cells_of_dim(l) {
                    for s in &surjections {
                        all.push(SimplexExpr { base, surj: *s });
                    }
                }
            }
            all.sort();
            let mut buckets: HashMap<Vec<usize>, Vec<SimplexExpr>> = HashMap::new();
            for e in &all {
                buckets.entry(self.set.vertices(e)).or_default().push(*e);
            }
            self.all.push(all);
            self.buckets.push(buckets);
        }
    }

    /// All simplices of dimension `k`, canonically ordered.
    pub fn all_of_dim(&self, k: usize) -> &[SimplexExpr] {
        &self.all[k]
    }

    pub fn with_vertices(&self, k: usize, vertices: &[usize]) -> &[SimplexExpr] {
        self.buckets[k].get(vertices).map_or(&[], |v| v.as_slice())
    }

    /// Candidates of dimension `k` whose faces agree with the known entries
    /// of `faces` (one slot per face, `None` = unconstrained).
    pub fn fillers<'s>(
        &'s self,
        k: usize,
        faces: &'s [Option<SimplexExpr>],
    ) -> impl Iterator<Item = SimplexExpr> + 's {
        let pool = match self.vertex_tuple(k, faces) {
            Some(v) => self.with_vertices(k, &v),
            None => self.all_of_dim(k),
        };
        pool.iter().copied().filter(move |c| {
            faces.iter().enumerate().all(|(i, f)| match f {
                Some(f) => self.set.face_unchecked(*c, i) == *f,
                None => true,
            })
        })
    }

    /// The vertex tuple forced by the known faces, if every vertex is covered.
    fn vertex_tuple(&self, k: usize, faces: &[Option<SimplexExpr>]) -> Option<Vec<usize>> {
        if k == 0 {
            return None;
        }
        (0..=k)
            .map(|p| {
                faces.iter().enumerate().find_map(|(i, f)| {
                    let f = f.as_ref()?;
                    if i == p {
                        None
                    } else {
                        Some(self.set.vertex(f, if p < i { p } else { p - 1 }))
                    }
                })
            })
            .collect()
    }
}

/// Constraint that the searched map lie over given values: `p ∘ h = target`.
#[derive(Clone, Debug)]
pub struct Over<'a> {
    pub map: &'a SimplicialMap,
    pub targets: Vec<SimplexExpr>,
}

/// One enumeration problem: maps `domain → index.set()` extending `fixed`
/// and, optionally, lying over `over`.
pub struct MapSearch<'a> {
    domain: &'a Arc<SimplicialSet>,
    index: &'a SimplexIndex,
    fixed: Vec<Option<SimplexExpr>>,
    over: Option<Over<'a>>,
    order: SearchOrder,
}

impl<'a> MapSearch<'a> {
    pub fn new(domain: &'a Arc<SimplicialSet>, index: &'a SimplexIndex) -> Self {
        debug_assert!(domain.dim().map_or(true, |d| index.max_dim() >= Some(d)));
        MapSearch {
            domain,
            index,
            fixed: vec![None; domain.len()],
            over: None,
            order: SearchOrder::Canonical,
        }
    }

    pub fn fix(mut self, cell: usize, value: SimplexExpr) -> Self {
        self.fixed[cell] = Some(value);
        self
    }

    pub fn fixed(mut self, fixed: Vec<Option<SimplexExpr>>) -> Self {
        assert_eq!(fixed.len(), self.domain.len());
        self.fixed = fixed;
        self
    }

    pub fn over(mut self, map: &'a SimplicialMap, targets: Vec<SimplexExpr>) -> Self {
        assert_eq!(targets.len(), self.domain.len());
        self.over = Some(Over { map, targets });
        self
    }

    pub fn order(mut self, order: SearchOrder) -> Self {
        self.order = order;
        self
    }

    /// Calls `visit` on each solution in enumeration order until it breaks.
    pub fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&[SimplexExpr]) -> ControlFlow<()>,
    {
        let mut assignment: Vec<SimplexExpr> = Vec::with_capacity(self.domain.len());
        let _ = self.descend(&mut assignment, &mut visit);
    }

    fn descend<F>(&self, assignment: &mut Vec<SimplexExpr>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[SimplexExpr]) -> ControlFlow<()>,
    {
        let b = assignment.len();
        if b == self.domain.len() {
            return visit(assignment);
        }
        let cell = self.domain.cell(b);
        let faces: Vec<Option<SimplexExpr>> = cell
            .faces
            .iter()
            .map(|f| Some(assignment[f.base].degenerate_by(&f.surj)))
            .collect();
        let target = self.over.as_ref().map(|o| (o.map, o.targets[b]));
        let admissible = |c: &SimplexExpr| match target {
            Some((p, t)) => p.value(*c) == t,
            None => true,
        };

        if let Some(v) = self.fixed[b] {
            let set = self.index.set();
            let ok = set.check_expr(&v).is_ok()
                && v.dim() == cell.dim
                && faces
                    .iter()
                    .enumerate()
                    .all(|(i, f)| set.face_unchecked(v, i) == f.expect("assigned"))
                && admissible(&v);
            if !ok {
                return ControlFlow::Continue(());
            }
            assignment.push(v);
            let flow = self.descend(assignment, visit);
            assignment.pop();
            return flow;
        }

        let candidates: Vec<SimplexExpr> = self
            .index
            .fillers(cell.dim, &faces)
            .filter(|c| admissible(c))
            .collect();
        let mut run = |c: SimplexExpr, assignment: &mut Vec<SimplexExpr>| {
            assignment.push(c);
            let flow = self.descend(assignment, visit);
            assignment.pop();
            flow
        };
        match self.order {
            SearchOrder::Canonical => {
                for c in candidates {
                    run(c, assignment)?;
                }
            }
            SearchOrder::Reversed => {
                for c in candidates.into_iter().rev() {
                    run(c, assignment)?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    pub fn first(&self) -> Option<Vec<SimplexExpr>> {
        let mut found = None;
        self.for_each(|a| {
            found = Some(a.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn collect(&self) -> Vec<Vec<SimplexExpr>> {
        let mut out = Vec::new();
        self.for_each(|a| {
            out.push(a.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    pub fn to_map(&self, values: Vec<SimplexExpr>) -> SimplicialMap {
        SimplicialMap::new_unchecked(self.domain.clone(), self.index.set().clone(), values)
    }
}

/// Every simplicial map `domain → codomain` whose value on each constrained
/// cell id is the given expression, in deterministic enumeration order.
pub fn enumerate_maps(
    domain: &Arc<SimplicialSet>,
    codomain: &Arc<SimplicialSet>,
    constraints: &[(usize, SimplexExpr)],
) -> Vec<SimplicialMap> {
    let index = SimplexIndex::new(codomain, domain.dim().unwrap_or(0));
    let mut search = MapSearch::new(domain, &index);
    for &(cell, value) in constraints {
        search = search.fix(cell, value);
    }
    search
        .collect()
        .into_iter()
        .map(|values| search.to_map(values))
        .collect()
}
