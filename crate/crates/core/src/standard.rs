//! Standard simplices, their boundaries and horns.

use std::sync::Arc;

use crate::error::{Result, SimplicialError};
use crate::map::SimplicialMap;
use crate::sset::{RawCell, SimplicialSet};
use crate::subcomplex::Subcomplex;
use crate::surjection::{OrdinalSurjection, MAX_DIM};

fn vertex_char(v: usize) -> char {
    std::char::from_digit(v as u32, 36).expect("vertex label fits one digit")
}

/// Id of the face of `Δⁿ` spanned by the vertices in `mask`, e.g. `"012"`.
pub fn simplex_id(mask: u32) -> String {
    (0..32)
        .filter(|v| mask & (1 << v) != 0)
        .map(vertex_char)
        .collect()
}

/// `Δⁿ`: one nondegenerate simplex per nonempty subset of `{0, …, n}`.
pub fn std_simplex(n: usize) -> SimplicialSet {
    assert!(n <= MAX_DIM, "dimension {n} exceeds the supported maximum");
    let masks: Vec<u32> = (1u32..(1u32 << (n + 1))).collect();
    let mut position = vec![0usize; 1 << (n + 1)];
    for (k, &m) in masks.iter().enumerate() {
        position[m as usize] = k;
    }
    let raw = masks
        .iter()
        .map(|&m| {
            let dim = m.count_ones() as usize - 1;
            let vertices: Vec<u32> = (0..=n as u32).filter(|v| m & (1 << v) != 0).collect();
            let faces = if dim == 0 {
                Vec::new()
            } else {
                vertices
                    .iter()
                    .map(|v| {
                        (
                            OrdinalSurjection::identity(dim - 1),
                            position[(m & !(1 << v)) as usize],
                        )
                    })
                    .collect()
            };
            RawCell {
                id: simplex_id(m),
                dim,
                faces,
            }
        })
        .collect();
    SimplicialSet::from_raw(format!("Delta^{n}"), raw).expect("standard simplex is valid")
}

/// The boundary `∂Δⁿ` and its inclusion `i_n : ∂Δⁿ ↪ Δⁿ`. `∂Δ⁰` is empty.
pub fn boundary(n: usize) -> (Arc<SimplicialSet>, SimplicialMap) {
    let simplex = Arc::new(std_simplex(n));
    let top = simplex.len() - 1;
    let sub = Subcomplex::from_members(&simplex, (0..top).collect());
    sub.realize(format!("dDelta^{n}"))
        .expect("boundary is face-closed")
}

/// The horn `Λⁿ_k` (boundary minus the face opposite `k`) and its inclusion.
pub fn horn(n: usize, k: usize) -> Result<(Arc<SimplicialSet>, SimplicialMap)> {
    if n == 0 {
        return Err(SimplicialError::Malformed("horns need n >= 1".into()));
    }
    if k > n {
        return Err(SimplicialError::IndexOutOfRange { index: k, dim: n });
    }
    let simplex = Arc::new(std_simplex(n));
    let full = (1u32 << (n + 1)) - 1;
    let missing = simplex
        .lookup(&simplex_id(full & !(1 << k)))
        .expect("face exists");
    let top = simplex.len() - 1;
    let sub = Subcomplex::from_members(&simplex, (0..top).filter(|&c| c != missing).collect());
    sub.realize(format!("Lambda^{n}_{k}"))
}
