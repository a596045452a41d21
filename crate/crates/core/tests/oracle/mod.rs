//! Brute-force model of a finite simplicial set, degree by degree.
//!
//! In degree `n` every pair `(x, θ)` of a stored cell `x` and a monotone map
//! `θ: [n] → [dim x]` names the simplex `θ*(x)`. Pairs are glued along
//! `(x, δ_j ∘ φ) ~ (y, η ∘ φ)` whenever the stored face `d_j x` is `(η, y)`.
//! The classes are the simplices of degree `n`; faces and degeneracies act
//! on representatives by precomposition. Nothing here goes through the
//! engine's restriction tables.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use workbench_core::{SimplexExpr, SimplicialOperator, SimplicialSet};

/// A simplex `θ*(x)` as `(cell, values of θ)`.
pub type Rep = (usize, Vec<u8>);

pub struct Tabulation {
    classes: Vec<Vec<Rep>>,
    lookup: Vec<HashMap<Rep, usize>>,
}

fn monotone_maps(n: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fn go(n: usize, m: usize, lo: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v as u8);
            go(n, m, v, cur, out);
            cur.pop();
        }
    }
    go(n, m, 0, &mut cur, &mut out);
    out
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

fn surjective(theta: &[u8], m: usize) -> bool {
    theta[0] == 0
        && theta[theta.len() - 1] as usize == m
        && theta.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
}

impl Tabulation {
    pub fn new(set: &SimplicialSet, max_degree: usize) -> Self {
        let mut classes = Vec::new();
        let mut lookup = Vec::new();
        for n in 0..=max_degree {
            let mut pairs: Vec<Rep> = Vec::new();
            for (x, cell) in set.cells().iter().enumerate() {
                for theta in monotone_maps(n, cell.dim) {
                    pairs.push((x, theta));
                }
            }
            let index: HashMap<Rep, usize> =
                pairs.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
            let mut parent: Vec<usize> = (0..pairs.len()).collect();
            for (k, (x, theta)) in pairs.iter().enumerate() {
                let dim = set.cell(*x).dim;
                for j in 0..=dim {
                    if theta.contains(&(j as u8)) {
                        continue;
                    }
                    // θ = δ_j ∘ φ
                    let phi: Vec<usize> = theta
                        .iter()
                        .map(|&t| if (t as usize) < j { t as usize } else { t as usize - 1 })
                        .collect();
                    let face = &set.cell(*x).faces[j];
                    let collapse = face.surj.collapse();
                    let eta = |i: usize| i - collapse.iter().filter(|&&c| c < i).count();
                    let image: Vec<u8> = phi.iter().map(|&i| eta(i) as u8).collect();
                    let other = index[&(face.base, image)];
                    let (a, b) = (find(&mut parent, k), find(&mut parent, other));
                    parent[a] = b;
                }
            }
            let mut class_of_root = HashMap::new();
            let mut reps: Vec<Vec<Rep>> = Vec::new();
            let mut degree_lookup = HashMap::new();
            for (k, pair) in pairs.iter().enumerate() {
                let root = find(&mut parent, k);
                let c = *class_of_root.entry(root).or_insert_with(|| {
                    reps.push(Vec::new());
                    reps.len() - 1
                });
                if surjective(&pair.1, set.cell(pair.0).dim) {
                    reps[c].push(pair.clone());
                }
                degree_lookup.insert(pair.clone(), c);
            }
            assert!(
                reps.iter().all(|r| r.len() == 1),
                "degree {n}: some class lacks a unique surjective representative"
            );
            classes.push(reps.into_iter().map(|mut r| r.pop().unwrap()).collect());
            lookup.push(degree_lookup);
        }
        Tabulation { classes, lookup }
    }

    pub fn max_degree(&self) -> usize {
        self.classes.len() - 1
    }

    /// Number of `n`-simplices.
    pub fn size(&self, n: usize) -> usize {
        self.classes[n].len()
    }

    pub fn class(&self, rep: &Rep) -> usize {
        self.lookup[rep.1.len() - 1][rep]
    }

    /// The representative with `θ` surjective.
    pub fn normal(&self, rep: &Rep) -> Rep {
        self.classes[rep.1.len() - 1][self.class(rep)].clone()
    }

    pub fn rep(&self, n: usize, class: usize) -> &Rep {
        &self.classes[n][class]
    }

    pub fn face(rep: &Rep, i: usize) -> Rep {
        let mut theta = rep.1.clone();
        theta.remove(i);
        (rep.0, theta)
    }

    pub fn degeneracy(rep: &Rep, i: usize) -> Rep {
        let mut theta = rep.1.clone();
        theta.insert(i, theta[i]);
        (rep.0, theta)
    }

    /// Positions `i` with the class in the image of `s_i`.
    pub fn collapse_positions(&self, n: usize, class: usize) -> u32 {
        let theta = &self.classes[n][class].1;
        (0..n).filter(|&i| theta[i] == theta[i + 1]).fold(0, |m, i| m | (1 << i))
    }

    pub fn nondegenerate(&self, n: usize) -> usize {
        (0..self.size(n))
            .filter(|&c| self.collapse_positions(n, c) == 0)
            .count()
    }
}

/// Nondegenerate `n`-simplices of `X × Y` counted as pairs of `n`-simplices
/// without a common degeneracy.
pub fn product_nondegenerate(x: &Tabulation, y: &Tabulation, n: usize) -> usize {
    let xs: Vec<u32> = (0..x.size(n)).map(|c| x.collapse_positions(n, c)).collect();
    let ys: Vec<u32> = (0..y.size(n)).map(|c| y.collapse_positions(n, c)).collect();
    xs.iter()
        .map(|a| ys.iter().filter(|b| a & *b == 0).count())
        .sum()
}

/// Strictly increasing chains of length `len` in the product of the total
/// orders `[a_1] × … × [a_k]`.
pub fn chains(sizes: &[usize], len: usize) -> usize {
    let points: Vec<Vec<usize>> = sizes.iter().fold(vec![vec![]], |acc, &m| {
        acc.iter()
            .flat_map(|p| {
                (0..=m).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect()
    });
    let less = |a: &Vec<usize>, b: &Vec<usize>| a != b && a.iter().zip(b).all(|(x, y)| x <= y);
    fn go(
        points: &[Vec<usize>],
        less: &dyn Fn(&Vec<usize>, &Vec<usize>) -> bool,
        last: Option<&Vec<usize>>,
        left: usize,
    ) -> usize {
        if left == 0 {
            return 1;
        }
        points
            .iter()
            .filter(|p| last.map_or(true, |l| less(l, p)))
            .map(|p| go(points, less, Some(p), left - 1))
            .sum()
    }
    go(&points, &less, None, len)
}

fn engine_rep(e: &SimplexExpr) -> Rep {
    (e.base, e.surj.values())
}

/// Applies a random word of up to `steps` faces and degeneracies to a random
/// cell, through the engine and through the tabulation, and compares the
/// normal forms after every step.
pub fn random_problem(
    set: &SimplicialSet,
    tab: &Tabulation,
    rng: &mut impl Rng,
    steps: usize,
) -> Result<(), String> {
    let x = rng.gen_range(0..set.len());
    let dim = set.cell(x).dim;
    let mut e = SimplexExpr::cell(x, dim);
    let mut rep: Rep = (x, (0..=dim as u8).collect());
    let mut word = Vec::new();
    for _ in 0..rng.gen_range(1..=steps) {
        let n = e.dim();
        let face = n > 0 && (n == tab.max_degree() || rng.gen_bool(0.5));
        if !face && n == tab.max_degree() {
            break;
        }
        let i = rng.gen_range(0..=n);
        let op = if face {
            rep = Tabulation::face(&rep, i);
            SimplicialOperator::Face(i)
        } else {
            rep = Tabulation::degeneracy(&rep, i);
            SimplicialOperator::Degeneracy(i)
        };
        word.push(op);
        e = set.normalize(e, op).map_err(|err| err.to_string())?;
        let want = tab.normal(&rep);
        if engine_rep(&e) != want {
            return Err(format!(
                "`{}` after {word:?}: engine {:?}, tabulation {want:?}",
                set.id(x),
                engine_rep(&e)
            ));
        }
    }
    Ok(())
}
