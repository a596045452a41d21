use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Result, SimplicialError};
use crate::map::SimplicialMap;
use crate::product::{product, Product};
use crate::sset::SimplicialSet;
use crate::standard::boundary;
use crate::subcomplex::{image, Subcomplex};

/// The pushout-product `i ×̂ j : A×D ∪_{A×C} B×C ↪ B×D` of two monos,
/// built as the union of the images of `A×D` and `B×C` inside `B×D`.
#[derive(Clone, Debug)]
pub struct PushoutProduct {
    pub inclusion: SimplicialMap,
    pub product: Product,
}

impl PushoutProduct {
    pub fn new(i: &SimplicialMap, j: &SimplicialMap) -> Result<Self> {
        for m in [i, j] {
            if !m.is_mono() {
                return Err(SimplicialError::NotMono(format!(
                    "{} -> {}",
                    m.domain().name(),
                    m.codomain().name()
                )));
            }
        }
        let prod = product(i.codomain(), j.codomain());
        let left = image(i);
        let right = image(j);
        let members: BTreeSet<usize> = (0..prod.set.len())
            .filter(|&c| {
                let (e, f) = prod.pair(c);
                left.contains(e.base) || right.contains(f.base)
            })
            .collect();
        let sub = Subcomplex::from_members(&prod.set, members);
        let name = format!(
            "({} -> {}) x^ ({} -> {})",
            i.domain().name(),
            i.codomain().name(),
            j.domain().name(),
            j.codomain().name()
        );
        let (_, inclusion) = sub.realize(name)?;
        Ok(PushoutProduct {
            inclusion,
            product: prod,
        })
    }

    /// `i_1 ×̂ i_n : (∂Δ¹ × Δⁿ) ∪ (Δ¹ × ∂Δⁿ) ↪ Δ¹ × Δⁿ`.
    pub fn prism(n: usize) -> Self {
        let (_, i1) = boundary(1);
        let (_, i_n) = boundary(n);
        PushoutProduct::new(&i1, &i_n).expect("boundary inclusions are monos")
    }

    pub fn domain(&self) -> &Arc<SimplicialSet> {
        self.inclusion.domain()
    }

    pub fn codomain(&self) -> &Arc<SimplicialSet> {
        self.inclusion.codomain()
    }
}

/// The inclusion underlying [`PushoutProduct::new`].
pub fn pushout_product(i: &SimplicialMap, j: &SimplicialMap) -> Result<SimplicialMap> {
    Ok(PushoutProduct::new(i, j)?.inclusion)
}
