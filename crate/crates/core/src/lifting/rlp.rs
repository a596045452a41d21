//! Right lifting property checks against the boundary, horn and prism
//! families. Every "for all n" is bounded; reports carry the range they
//! certify.

use std::fmt;

use serde_json::{json, Value};

use crate::interchange::map_file;
use crate::lifting::problem::{first_unliftable, LiftingProblem};
use crate::lifting::pushout::PushoutProduct;
use crate::lifting::search::SearchOrder;
use crate::map::SimplicialMap;
use crate::standard::{boundary, horn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `i_n : ∂Δⁿ ↪ Δⁿ`
    Boundary,
    /// `Λⁿ_k ↪ Δⁿ` for all `0 ≤ k ≤ n`
    Horn,
    /// `i_1 ×̂ i_n`
    Prism,
    /// A single caller-supplied mono.
    Single,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Boundary => "boundary",
            Family::Horn => "horn",
            Family::Prism => "prism",
            Family::Single => "single",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An unliftable square found by a family check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub dim: usize,
    /// The horn index `k` for the horn family.
    pub horn: Option<usize>,
    pub problem: LiftingProblem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RlpReport {
    pub holds: bool,
    pub family: Family,
    pub dims: (usize, usize),
    pub counterexample: Option<Counterexample>,
    pub note: String,
}

impl RlpReport {
    fn new(family: Family, dims: (usize, usize), counterexample: Option<Counterexample>) -> Self {
        let note = if dims.0 > dims.1 {
            "empty dimension range; nothing checked".to_string()
        } else {
            format!(
                "exhaustive for n in [{}, {}]; higher dimensions not checked",
                dims.0, dims.1
            )
        };
        RlpReport {
            holds: counterexample.is_none(),
            family,
            dims,
            counterexample,
            note,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "holds": self.holds,
            "family": self.family.as_str(),
            "dims": [self.dims.0, self.dims.1],
            "note": self.note,
        });
        if let Some(c) = &self.counterexample {
            let mut cx = json!({
                "dim": c.dim,
                "left": map_file(&c.problem.left),
                "top": map_file(&c.problem.top),
                "bottom": map_file(&c.problem.bottom),
            });
            if let Some(k) = c.horn {
                cx["horn"] = json!(k);
            }
            v["counterexample"] = cx;
        }
        v
    }
}

/// Does `p` lift against the single mono `i`?
pub fn rlp(i: &SimplicialMap, p: &SimplicialMap) -> RlpReport {
    let dim = i.codomain().dim().unwrap_or(0);
    let cx = first_unliftable(i, p, SearchOrder::Canonical).map(|problem| Counterexample {
        dim,
        horn: None,
        problem,
    });
    RlpReport::new(Family::Single, (dim, dim), cx)
}

/// Runs one family over `[n_min, n_max]`, stopping at the first
/// counterexample in `(n, k, bottom, top)` order.
pub fn check_family(
    p: &SimplicialMap,
    family: Family,
    n_min: usize,
    n_max: usize,
    order: SearchOrder,
) -> RlpReport {
    let mut found = None;
    'dims: for n in n_min..=n_max {
        match family {
            Family::Boundary => {
                let (_, i) = boundary(n);
                if let Some(problem) = first_unliftable(&i, p, order) {
                    found = Some(Counterexample {
                        dim: n,
                        horn: None,
                        problem,
                    });
                    break 'dims;
                }
            }
            Family::Horn => {
                if n == 0 {
                    continue;
                }
                for k in 0..=n {
                    let (_, i) = horn(n, k).expect("valid horn parameters");
                    if let Some(problem) = first_unliftable(&i, p, order) {
                        found = Some(Counterexample {
                            dim: n,
                            horn: Some(k),
                            problem,
                        });
                        break 'dims;
                    }
                }
            }
            Family::Prism => {
                let i = PushoutProduct::prism(n).inclusion;
                if let Some(problem) = first_unliftable(&i, p, order) {
                    found = Some(Counterexample {
                        dim: n,
                        horn: None,
                        problem,
                    });
                    break 'dims;
                }
            }
            Family::Single => panic!("single-map checks go through `rlp`"),
        }
    }
    RlpReport::new(family, (n_min, n_max), found)
}

/// `i_n ⋔ p` for `n_min ≤ n ≤ n_max`. `n = 0` checks surjectivity on vertices.
pub fn boundary_rlp(p: &SimplicialMap, n_min: usize, n_max: usize) -> RlpReport {
    check_family(p, Family::Boundary, n_min, n_max, SearchOrder::Canonical)
}

/// Lifting against every horn `Λⁿ_k ↪ Δⁿ` with `1 ≤ n ≤ n_max`.
pub fn horn_rlp(p: &SimplicialMap, n_max: usize) -> RlpReport {
    check_family(p, Family::Horn, 1, n_max, SearchOrder::Canonical)
}

/// `i_1 ×̂ i_n ⋔ p` for `0 ≤ n ≤ n_max`.
pub fn prism_rlp(p: &SimplicialMap, n_max: usize) -> RlpReport {
    check_family(p, Family::Prism, 0, n_max, SearchOrder::Canonical)
}

/// Default bound for the unbounded quantifiers: `dim(total space) + 2`.
pub fn default_bound(p: &SimplicialMap) -> usize {
    p.domain().dim().unwrap_or(0) + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::coproduct;
    use crate::sset::{SimplexExpr, SimplicialSet};
    use crate::standard::std_simplex;
    use crate::surjection::OrdinalSurjection;
    use std::sync::Arc;

    fn arc(n: usize) -> Arc<SimplicialSet> {
        Arc::new(std_simplex(n))
    }

    fn to_point(x: &Arc<SimplicialSet>) -> SimplicialMap {
        let values = x
            .cells()
            .iter()
            .map(|c| SimplexExpr {
                base: 0,
                surj: OrdinalSurjection::all(c.dim, 0)[0],
            })
            .collect();
        SimplicialMap::new(x.clone(), arc(0), values).unwrap()
    }

    #[test]
    fn identity_lifts_everything() {
        let id = SimplicialMap::identity(&arc(2));
        assert!(boundary_rlp(&id, 1, 3).holds);
        assert!(horn_rlp(&id, 3).holds);
        assert!(prism_rlp(&id, 2).holds);
    }

    #[test]
    fn two_point_cover_fails_at_the_edge() {
        let pt = arc(0);
        let (two, _) = coproduct(&pt, &pt);
        let p = to_point(&two);
        let r = boundary_rlp(&p, 1, 1);
        assert!(!r.holds);
        let cx = r.counterexample.unwrap();
        assert_eq!(cx.dim, 1);
        // The sphere picks the two distinct points.
        assert_ne!(cx.problem.top.value_of(0), cx.problem.top.value_of(1));
        assert!(crate::lifting::solve_lift(&cx.problem).is_none());
        // Vertices are still surjective.
        assert!(boundary_rlp(&p, 0, 0).holds);
    }

    #[test]
    fn collapsing_an_edge_fails_an_outer_horn() {
        let p = to_point(&arc(1));
        let r = horn_rlp(&p, 2);
        assert!(!r.holds);
        let cx = r.counterexample.unwrap();
        assert_eq!((cx.dim, cx.horn), (2, Some(0)));
    }

    #[test]
    fn report_json_shape() {
        let p = to_point(&arc(1));
        let v = boundary_rlp(&p, 1, 2).to_json();
        assert_eq!(v["holds"], json!(false));
        assert_eq!(v["family"], json!("boundary"));
        assert_eq!(v["dims"], json!([1, 2]));
        assert!(v["counterexample"]["top"]["assignments"].is_object());
    }

    #[test]
    fn reversed_enumeration_agrees() {
        let pt = arc(0);
        let (two, _) = coproduct(&pt, &pt);
        for p in [
            to_point(&two),
            SimplicialMap::identity(&arc(1)),
            to_point(&arc(1)),
        ] {
            for fam in [Family::Boundary, Family::Horn, Family::Prism] {
                let a = check_family(&p, fam, 0, 2, SearchOrder::Canonical);
                let b = check_family(&p, fam, 0, 2, SearchOrder::Reversed);
                assert_eq!(a.holds, b.holds);
            }
        }
    }
}
