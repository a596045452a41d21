//! Deterministic corpus of maps used by the test suites, with expected
//! properties computed by the exhaustive checkers and frozen as golden files.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construct::coproduct_all;
use crate::interchange::{to_canonical_json, write_sset, MapFile};
use crate::lem::{image_complement, is_propositional_homotopy};
use crate::lifting::{boundary_rlp, default_bound, horn_rlp};
use crate::map::SimplicialMap;
use crate::product::product;
use crate::sset::{RawCell, SimplexExpr, SimplicialSet};
use crate::standard::{boundary, horn, std_simplex};
use crate::subcomplex::Subcomplex;
use crate::surjection::OrdinalSurjection;

/// One summand `Δⁿ` of the domain sent to summand `target` of the codomain
/// by the monotone vertex map `values`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub target: usize,
    pub values: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub vertices: usize,
    /// Number of vertices spanning the full subcomplex.
    pub keep: usize,
    pub edge_percent: u32,
    pub triangle_percent: u32,
}

/// How a fixture is constructed. Summand lists give simplex dimensions.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Builder {
    Identity {
        simplex: usize,
    },
    ComponentInclusion {
        parts: Vec<usize>,
        selected: Vec<usize>,
    },
    DiscreteCover {
        parts: Vec<usize>,
        k: usize,
    },
    SummandMap {
        domain: Vec<usize>,
        codomain: Vec<usize>,
        legs: Vec<Leg>,
    },
    BoundaryInclusion {
        n: usize,
    },
    HornInclusion {
        n: usize,
        k: usize,
    },
    /// `Δ^fibre × Δ^base → Δ^base`
    Projection {
        fibre: usize,
        base: usize,
    },
    RandomSubcomplex {
        seed: u64,
        params: RandomParams,
    },
}

fn simplices(dims: &[usize]) -> Vec<Arc<SimplicialSet>> {
    dims.iter().map(|&n| Arc::new(std_simplex(n))).collect()
}

impl Builder {
    pub fn build(&self) -> SimplicialMap {
        match self {
            Builder::Identity { simplex } => {
                SimplicialMap::identity(&Arc::new(std_simplex(*simplex)))
            }
            Builder::ComponentInclusion { parts, selected } => {
                component_inclusion(&simplices(parts), selected)
            }
            Builder::DiscreteCover { parts, k } => {
                let (x, _) = coproduct_all(&simplices(parts));
                discrete_cover(&x, *k)
            }
            Builder::SummandMap {
                domain,
                codomain,
                legs,
            } => summand_map(domain, codomain, legs),
            Builder::BoundaryInclusion { n } => boundary(*n).1,
            Builder::HornInclusion { n, k } => horn(*n, *k).expect("valid horn").1,
            Builder::Projection { fibre, base } => {
                let f = Arc::new(std_simplex(*fibre));
                let b = Arc::new(std_simplex(*base));
                product(&f, &b).proj2
            }
            Builder::RandomSubcomplex { seed, params } => {
                random_subcomplex_inclusion(*seed, *params)
            }
        }
    }
}

/// Inclusion of the `selected` summands into `⊔ parts`.
pub fn component_inclusion(parts: &[Arc<SimplicialSet>], selected: &[usize]) -> SimplicialMap {
    assert!(
        !parts.is_empty(),
        "component inclusion needs at least one part"
    );
    let (sum, inj) = coproduct_all(parts);
    let chosen: Vec<Arc<SimplicialSet>> = selected.iter().map(|&k| parts[k].clone()).collect();
    let (sub, sub_inj) = coproduct_all(&chosen);
    let mut values = vec![SimplexExpr::cell(0, 0); sub.len()];
    for (j, &k) in selected.iter().enumerate() {
        for a in 0..parts[k].len() {
            values[sub_inj[j].value_of(a).base] = inj[k].value_of(a);
        }
    }
    SimplicialMap::new(sub, sum, values).expect("summand inclusion is simplicial")
}

/// The projection `X × (k points) → X`.
pub fn discrete_cover(x: &Arc<SimplicialSet>, k: usize) -> SimplicialMap {
    let point = Arc::new(std_simplex(0));
    let (points, _) = coproduct_all(&vec![point; k]);
    product(x, &points).proj1
}

/// `Δⁿ → Δᵐ` induced by a monotone map on vertices.
pub fn monotone_simplex_map(n: usize, m: usize, values: &[usize]) -> SimplicialMap {
    assert_eq!(values.len(), n + 1);
    assert!(values.windows(2).all(|w| w[0] <= w[1]) && values[n] <= m);
    let source = Arc::new(std_simplex(n));
    let target = Arc::new(std_simplex(m));
    let images = (0..source.len())
        .map(|c| {
            let image: Vec<usize> = source.cell_vertices(c).iter().map(|&v| values[v]).collect();
            let mask = image.iter().fold(0u32, |acc, &v| acc | (1 << v));
            let rank: Vec<u8> = image
                .iter()
                .map(|&v| (mask & ((1u32 << v) - 1)).count_ones() as u8)
                .collect();
            let base = target
                .lookup(&crate::standard::simplex_id(mask))
                .expect("face of the target simplex");
            SimplexExpr {
                base,
                surj: OrdinalSurjection::from_values(&rank),
            }
        })
        .collect();
    SimplicialMap::new(source, target, images).expect("monotone maps are simplicial")
}

fn summand_map(domain: &[usize], codomain: &[usize], legs: &[Leg]) -> SimplicialMap {
    assert_eq!(domain.len(), legs.len());
    let (dom, dom_inj) = coproduct_all(&simplices(domain));
    let (cod, cod_inj) = coproduct_all(&simplices(codomain));
    let mut values = vec![SimplexExpr::cell(0, 0); dom.len()];
    for (i, leg) in legs.iter().enumerate() {
        let f = monotone_simplex_map(domain[i], codomain[leg.target], &leg.values);
        for a in 0..f.domain().len() {
            values[dom_inj[i].value_of(a).base] = cod_inj[leg.target].value(f.value_of(a));
        }
    }
    SimplicialMap::new(dom, cod, values).expect("legs assemble to a simplicial map")
}

/// Full subcomplex inclusion into a random 2-dimensional complex, drawn
/// reproducibly from `seed`. Vertices are named `a`, `b`, ….
pub fn random_subcomplex_inclusion(seed: u64, params: RandomParams) -> SimplicialMap {
    assert!(params.vertices <= 26 && params.keep <= params.vertices);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.vertices;
    let name = |v: usize| char::from(b'a' + v as u8).to_string();

    let mut raw: Vec<RawCell> = (0..n)
        .map(|v| RawCell {
            id: name(v),
            dim: 0,
            faces: Vec::new(),
        })
        .collect();
    let mut edge = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..100) < params.edge_percent {
                edge.insert((i, j), raw.len());
                raw.push(RawCell {
                    id: name(i) + &name(j),
                    dim: 1,
                    faces: vec![
                        (OrdinalSurjection::identity(0), j),
                        (OrdinalSurjection::identity(0), i),
                    ],
                });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (Some(&jk), Some(&ik), Some(&ij)) =
                    (edge.get(&(j, k)), edge.get(&(i, k)), edge.get(&(i, j)))
                else {
                    continue;
                };
                if rng.gen_range(0..100) < params.triangle_percent {
                    raw.push(RawCell {
                        id: name(i) + &name(j) + &name(k),
                        dim: 2,
                        faces: [jk, ik, ij]
                            .into_iter()
                            .map(|e| (OrdinalSurjection::identity(1), e))
                            .collect(),
                    });
                }
            }
        }
    }
    let complex = Arc::new(
        SimplicialSet::from_raw(format!("K{seed}"), raw).expect("random complex is valid"),
    );

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut kept: Vec<usize> = order[..params.keep].to_vec();
    kept.sort();
    // Vertices come first in canonical order, so vertex `v` is cell `v`.
    let members = (0..complex.len())
        .filter(|&c| complex.cell_vertices(c).iter().all(|v| kept.contains(v)))
        .collect();
    let label: String = kept.iter().map(|&v| name(v)).collect();
    let (_, incl) = Subcomplex::from_members(&complex, members)
        .realize(format!("K{seed}[{label}]"))
        .expect("full subcomplexes are face-closed");
    incl
}

/// How a known non-fibration is expected to fail.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum NonFibration {
    /// Some simplex outside the image has a face inside it.
    NotComplemented,
    /// The image is complemented (the map is onto), but a horn does not fill.
    HornFailure,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub builder: Builder,
    /// Set for maps known to fail the Kan condition.
    pub non_fibration: Option<NonFibration>,
}

impl Fixture {
    fn new(name: &str, builder: Builder) -> Self {
        Fixture {
            name: name.to_string(),
            builder,
            non_fibration: None,
        }
    }

    fn negative(name: &str, builder: Builder, how: NonFibration) -> Self {
        Fixture {
            non_fibration: Some(how),
            ..Fixture::new(name, builder)
        }
    }

    pub fn build(&self) -> SimplicialMap {
        self.builder.build()
    }

    pub fn map_file_name(&self) -> String {
        format!("{}.map.json", self.name)
    }

    pub fn domain_file_name(&self) -> String {
        format!("{}.domain.sset.json", self.name)
    }

    pub fn codomain_file_name(&self) -> String {
        format!("{}.codomain.sset.json", self.name)
    }
}

fn leg(target: usize, values: &[usize]) -> Leg {
    Leg {
        target,
        values: values.to_vec(),
    }
}

fn legs(list: &[(usize, &[usize])]) -> Vec<Leg> {
    list.iter().map(|&(t, v)| leg(t, v)).collect()
}

const RANDOM: RandomParams = RandomParams {
    vertices: 5,
    keep: 3,
    edge_percent: 50,
    triangle_percent: 50,
};

pub fn corpus() -> Vec<Fixture> {
    use Builder::*;
    use NonFibration::*;
    let cover = |parts: &[usize], k| DiscreteCover {
        parts: parts.to_vec(),
        k,
    };
    let inclusion = |parts: &[usize], selected: &[usize]| ComponentInclusion {
        parts: parts.to_vec(),
        selected: selected.to_vec(),
    };
    let summands = |domain: &[usize], codomain: &[usize], l: &[(usize, &[usize])]| SummandMap {
        domain: domain.to_vec(),
        codomain: codomain.to_vec(),
        legs: legs(l),
    };
    vec![
        Fixture::new("identity_point", Identity { simplex: 0 }),
        Fixture::new("identity_edge", Identity { simplex: 1 }),
        Fixture::new("identity_triangle", Identity { simplex: 2 }),
        Fixture::new("triangle_into_triangle_and_edge", inclusion(&[2, 1], &[0])),
        Fixture::new("edge_into_edge_and_point", inclusion(&[1, 0], &[0])),
        Fixture::new("point_into_point_and_edge", inclusion(&[0, 1], &[0])),
        Fixture::new("two_of_three_components", inclusion(&[0, 0, 2], &[0, 1])),
        Fixture::new("empty_over_edge", inclusion(&[1], &[])),
        Fixture::new("empty_over_point", inclusion(&[0], &[])),
        Fixture::new("single_cover_of_edge", cover(&[1], 1)),
        Fixture::new("two_point_cover", cover(&[0], 2)),
        Fixture::new("three_point_cover", cover(&[0], 3)),
        Fixture::new("double_cover_of_edge", cover(&[1], 2)),
        Fixture::new("double_cover_of_two_points", cover(&[0, 0], 2)),
        Fixture::new(
            "three_points_over_two",
            summands(&[0, 0, 0], &[0, 0], &[(0, &[0]), (0, &[0]), (1, &[0])]),
        ),
        Fixture::new(
            "four_points_over_two",
            summands(
                &[0, 0, 0, 0],
                &[0, 0],
                &[(0, &[0]), (0, &[0]), (0, &[0]), (1, &[0])],
            ),
        ),
        Fixture::new(
            "two_points_over_point_and_edge",
            summands(&[0, 0], &[0, 1], &[(0, &[0]), (0, &[0])]),
        ),
        Fixture::new(
            "three_points_over_point_and_triangle",
            summands(&[0, 0, 0], &[0, 2], &[(0, &[0]), (0, &[0]), (0, &[0])]),
        ),
        Fixture::new(
            "fold_of_two_edges",
            summands(&[1, 1], &[1], &[(0, &[0, 1]), (0, &[0, 1])]),
        ),
        Fixture::negative(
            "vertex_into_edge",
            summands(&[0], &[1], &[(0, &[0])]),
            NotComplemented,
        ),
        Fixture::negative(
            "edge_to_point",
            summands(&[1], &[0], &[(0, &[0, 0])]),
            HornFailure,
        ),
        Fixture::negative(
            "two_points_into_edge",
            summands(&[0, 0], &[1], &[(0, &[0]), (0, &[0])]),
            NotComplemented,
        ),
        Fixture::negative("edge_boundary", BoundaryInclusion { n: 1 }, NotComplemented),
        Fixture::negative(
            "triangle_boundary",
            BoundaryInclusion { n: 2 },
            NotComplemented,
        ),
        Fixture::negative(
            "inner_triangle_horn",
            HornInclusion { n: 2, k: 1 },
            NotComplemented,
        ),
        Fixture::negative(
            "square_projection",
            Projection { fibre: 1, base: 1 },
            HornFailure,
        ),
        Fixture::new(
            "random_seed_0",
            RandomSubcomplex {
                seed: 0,
                params: RANDOM,
            },
        ),
        Fixture::new(
            "random_seed_1",
            RandomSubcomplex {
                seed: 1,
                params: RANDOM,
            },
        ),
        Fixture::new(
            "random_seed_2",
            RandomSubcomplex {
                seed: 2,
                params: RANDOM,
            },
        ),
        Fixture::new(
            "random_seed_3_full",
            RandomSubcomplex {
                seed: 3,
                params: RandomParams { keep: 5, ..RANDOM },
            },
        ),
        Fixture::new(
            "random_seed_4_empty",
            RandomSubcomplex {
                seed: 4,
                params: RandomParams { keep: 0, ..RANDOM },
            },
        ),
    ]
}

/// Maps known to fail the Kan condition, with the expected failure.
pub fn non_fibration_counterexamples() -> Vec<(NonFibration, SimplicialMap)> {
    corpus()
        .iter()
        .filter_map(|f| Some((f.non_fibration?, f.build())))
        .collect()
}

/// Properties of a fixture as computed by the exhaustive checkers.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    /// `dim(total space) + 2`.
    pub bound: usize,
    /// Largest `n ≤ bound + 1` with every horn of dimension `≤ n` lifting.
    pub kan_up_to: usize,
    /// First failing horn `[n, k]`.
    pub horn_failure: Option<[usize; 2]>,
    pub complemented: bool,
    /// Whether the image complement is empty, when it exists.
    pub gamma1_empty: Option<bool>,
    /// Boundary lifting for `1 ≤ n ≤ bound`.
    pub propositional: bool,
    /// Boundary lifting for `0 ≤ n ≤ bound`.
    pub trivial: bool,
    /// Homotopy oracle verdict; absent for non-Kan maps and over the size cap.
    pub homotopy: Option<bool>,
}

impl Expected {
    pub fn kan(&self) -> bool {
        self.horn_failure.is_none()
    }
}

pub fn expected(p: &SimplicialMap) -> Expected {
    let bound = default_bound(p);
    let kan = horn_rlp(p, bound + 1);
    let horn_failure = kan
        .counterexample
        .as_ref()
        .map(|c| [c.dim, c.horn.unwrap_or(0)]);
    let complement = image_complement(p).ok();
    Expected {
        bound,
        kan_up_to: horn_failure.map_or(bound + 1, |[n, _]| n - 1),
        horn_failure,
        complemented: complement.is_some(),
        gamma1_empty: complement.map(|c| c.is_empty()),
        propositional: boundary_rlp(p, 1, bound).holds,
        trivial: boundary_rlp(p, 0, bound).holds,
        homotopy: if kan.holds {
            is_propositional_homotopy(p).ok()
        } else {
            None
        },
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    #[serde(flatten)]
    pub fixture: Fixture,
    pub map: String,
    pub domain: String,
    pub codomain: String,
    pub expected: Expected,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub fixtures: Vec<ManifestEntry>,
}

pub const MANIFEST: &str = "manifest.json";

/// Every golden file of the corpus, keyed by file name, with expectations
/// recomputed from scratch.
pub fn render_corpus() -> BTreeMap<String, String> {
    let mut files = BTreeMap::new();
    let mut entries = Vec::new();
    for fixture in corpus() {
        let p = fixture.build();
        let (map, domain, codomain) = (
            fixture.map_file_name(),
            fixture.domain_file_name(),
            fixture.codomain_file_name(),
        );
        files.insert(domain.clone(), write_sset(p.domain()));
        files.insert(codomain.clone(), write_sset(p.codomain()));
        files.insert(
            map.clone(),
            to_canonical_json(&MapFile::from_map(&p, &domain, &codomain)),
        );
        entries.push(ManifestEntry {
            expected: expected(&p),
            fixture,
            map,
            domain,
            codomain,
        });
    }
    files.insert(
        MANIFEST.to_string(),
        to_canonical_json(&Manifest { fixtures: entries }),
    );
    files
}
