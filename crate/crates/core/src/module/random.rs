//! Seeded random modules for property tests.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use super::{cokernel, direct_sum, free_hom, free_layout, free_module, quotient_mod_k, FreeSummand, Module, ModuleHom};
use crate::category::CategoryRing;
use crate::group::FgGroup;

pub fn random_spec<R: Rng>(rng: &mut R, ring: &CategoryRing, max_summands: usize) -> Vec<FreeSummand> {
    let count = rng.gen_range(1..=max_summands.max(1));
    (0..count)
        .map(|_| FreeSummand { object: rng.gen_range(0..ring.num_objects()), shift: rng.gen_range(0..2) })
        .collect()
}

/// Random element of a free module slot, restricted to the coordinates
/// accepted by `keep(summand, basis morphism)`.
fn random_free_element<R: Rng>(
    rng: &mut R,
    ring: &CategoryRing,
    spec: &[FreeSummand],
    y: usize,
    p: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> Vec<BigInt> {
    free_layout(ring, spec, y, p)
        .into_iter()
        .map(|(i, b)| if keep(i, b) { BigInt::from(rng.gen_range(-2i64..=2)) } else { BigInt::from(0) })
        .collect()
}

/// A homomorphism `free(src) → free(tgt)` with random generator images.
pub fn random_free_map<R: Rng>(
    rng: &mut R,
    ring: &Arc<CategoryRing>,
    src: &[FreeSummand],
    tgt: &[FreeSummand],
) -> ModuleHom {
    let (fs, ft) = (free_module(ring, src), free_module(ring, tgt));
    let images: Vec<Vec<BigInt>> =
        src.iter().map(|s| random_free_element(rng, ring, tgt, s.object, s.shift as usize, |_, _| true)).collect();
    free_hom(&fs, src, &ft, &images)
}

/// `k·id + ψ` on a free module, with `ψ` landing in the nil part; always injective.
pub fn unipotent_map<R: Rng>(rng: &mut R, ring: &Arc<CategoryRing>, spec: &[FreeSummand], k: i64) -> ModuleHom {
    let f = free_module(ring, spec);
    let images: Vec<Vec<BigInt>> = spec
        .iter()
        .enumerate()
        .map(|(gi, s)| {
            let layout = free_layout(ring, spec, s.object, s.shift as usize);
            let mut v = random_free_element(rng, ring, spec, s.object, s.shift as usize, |_, b| !ring.is_identity(b));
            let pos = layout.iter().position(|&x| x == (gi, ring.identity(s.object))).expect("generator");
            v[pos] += k;
            v
        })
        .collect();
    free_hom(&f, spec, &f, &images)
}

/// Exact modules: free modules, cokernels of injective maps between free
/// modules, and direct sums of these.
pub fn random_exact_module<R: Rng>(rng: &mut R, ring: &Arc<CategoryRing>) -> Module {
    match rng.gen_range(0..4) {
        0 => free_module(ring, &random_spec(rng, ring, 3)),
        1 => {
            let spec = random_spec(rng, ring, 3);
            let k = rng.gen_range(1..=4);
            cokernel(&unipotent_map(rng, ring, &spec, k)).0
        }
        2 => {
            for _ in 0..20 {
                let src = random_spec(rng, ring, 2);
                let tgt = random_spec(rng, ring, 3);
                let h = random_free_map(rng, ring, &src, &tgt);
                if h.is_injective() {
                    return cokernel(&h).0;
                }
            }
            free_module(ring, &random_spec(rng, ring, 2))
        }
        _ => {
            let a = random_exact_module(rng, ring);
            let b = free_module(ring, &random_spec(rng, ring, 2));
            direct_sum(&[a, b]).expect("same ring")
        }
    }
}

/// A module with `Z` in one slot and nothing else.
pub fn simple_module(ring: &Arc<CategoryRing>, y: usize, parity: usize, order: i64) -> Module {
    let mut slots = vec![[FgGroup::zero(), FgGroup::zero()]; ring.num_objects()];
    slots[y][parity] = FgGroup::new(vec![BigInt::from(order)]);
    Module::from_generators(ring.clone(), slots, &HashMap::new()).expect("zero actions")
}

/// Arbitrary modules: cokernels of random maps between free modules,
/// reductions mod k, simple modules and direct sums.
pub fn random_module<R: Rng>(rng: &mut R, ring: &Arc<CategoryRing>) -> Module {
    match rng.gen_range(0..6) {
        0 => random_exact_module(rng, ring),
        1 | 2 => {
            let src = random_spec(rng, ring, 2);
            let tgt = random_spec(rng, ring, 3);
            cokernel(&random_free_map(rng, ring, &src, &tgt)).0
        }
        3 => {
            let k = rng.gen_range(2..=3);
            quotient_mod_k(&free_module(ring, &random_spec(rng, ring, 2)), k)
        }
        4 => simple_module(ring, rng.gen_range(0..ring.num_objects()), rng.gen_range(0..2), 0),
        _ => {
            let a = random_module(rng, ring);
            let b = random_module(rng, ring);
            direct_sum(&[a, b]).expect("same ring")
        }
    }
}
