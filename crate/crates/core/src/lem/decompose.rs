use std::collections::BTreeSet;
use std::sync::Arc;

use crate::lem::LemError;
use crate::map::SimplicialMap;
use crate::sset::SimplicialSet;
use crate::subcomplex::{image, Subcomplex};

/// Splitting of the base of `p` into the image and its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub base: Arc<SimplicialSet>,
    pub gamma0: Subcomplex,
    pub gamma1: Subcomplex,
}

/// Base simplices outside the image of `p`, checked to be face-closed.
pub fn image_complement(p: &SimplicialMap) -> Result<Subcomplex, LemError> {
    let base = p.codomain();
    let img = image(p);
    let outside = img.complement_members();
    for &x in &outside {
        if let Some(f) = base.cell(x).faces.iter().find(|f| img.contains(f.base)) {
            return Err(LemError::NotComplemented {
                simplex: base.id(x).to_string(),
                face: base.id(f.base).to_string(),
            });
        }
    }
    Ok(Subcomplex::from_members(base, outside))
}

/// Base simplices all of whose vertices miss the image of `p`.
pub fn vertex_complement(p: &SimplicialMap) -> Subcomplex {
    let base = p.codomain();
    let hit: BTreeSet<usize> = p
        .values()
        .iter()
        .filter(|v| v.dim() == 0)
        .map(|v| v.base)
        .collect();
    let members = (0..base.len())
        .filter(|&x| base.cell_vertices(x).iter().all(|v| !hit.contains(v)))
        .collect();
    Subcomplex::from_members(base, members)
}

pub fn decompose_base(p: &SimplicialMap) -> Result<Decomposition, LemError> {
    let gamma1 = image_complement(p)?;
    let gamma0 = image(p);
    let base = p.codomain().clone();
    assert!(gamma0.members().is_disjoint(gamma1.members()));
    assert_eq!(gamma0.len() + gamma1.len(), base.len());
    assert!(gamma0.is_closed() && gamma1.is_closed());
    assert_eq!(
        vertex_complement(p),
        gamma1,
        "vertex criterion disagrees with the image complement"
    );
    Ok(Decomposition {
        base,
        gamma0,
        gamma1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::coproduct;
    use crate::sset::SimplexExpr;
    use crate::standard::std_simplex;

    fn arc(n: usize) -> Arc<SimplicialSet> {
        Arc::new(std_simplex(n))
    }

    #[test]
    fn component_inclusion_splits_off_the_other_summand() {
        let (_, inj) = coproduct(&arc(2), &arc(1));
        let d = decompose_base(&inj[0]).unwrap();
        assert_eq!(d.gamma0.len(), 7);
        assert_eq!(d.gamma1.ids(), vec!["1:0", "1:1", "1:01"]);
        assert_eq!(image_complement(&inj[0]).unwrap(), d.gamma1);
    }

    #[test]
    fn identity_has_empty_complement() {
        let id = SimplicialMap::identity(&arc(2));
        assert!(image_complement(&id).unwrap().is_empty());
        assert!(vertex_complement(&id).is_empty());
    }

    #[test]
    fn vertex_into_edge_is_not_complemented() {
        let p = SimplicialMap::new(arc(0), arc(1), vec![SimplexExpr::cell(0, 0)]).unwrap();
        assert_eq!(
            image_complement(&p),
            Err(LemError::NotComplemented {
                simplex: "01".into(),
                face: "0".into()
            })
        );
        assert_eq!(vertex_complement(&p).ids(), vec!["1"]);
    }

    #[test]
    fn fold_is_onto() {
        let d1 = arc(1);
        let (two, _) = coproduct(&d1, &d1);
        let values = two
            .cells()
            .iter()
            .map(|c| SimplexExpr::cell(d1.lookup(&c.id[2..]).unwrap(), c.dim))
            .collect();
        let fold = SimplicialMap::new(two, d1, values).unwrap();
        let d = decompose_base(&fold).unwrap();
        assert_eq!(d.gamma0.len(), 3);
        assert!(d.gamma1.is_empty());
    }
}
