//! The category ring of the totally ordered space `1 ⪯ … ⪯ n`, with objects
//! the intervals `[a,b]`.

use std::collections::HashMap;

use super::{BasisMorphism, CategoryRing, ObjectId};
use crate::poset::FinitePoset;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Interval {
    a: usize,
    b: usize,
}

impl Interval {
    /// `Y ≥ Z` and not `Y ≫ Z`: an even transformation `Y → Z` exists.
    fn even_to(self, z: Interval) -> bool {
        z.a <= self.a && self.a <= z.b && z.b <= self.b
    }

    fn odd_to(self, z: Interval) -> bool {
        self.a < z.a && self.b < z.b && z.a - 1 <= self.b
    }
}

pub fn chain_category(n: usize) -> CategoryRing {
    assert!(n >= 1);
    let p = FinitePoset::chain(n);
    let sets = p.connected_lc_sets();
    let objects: Vec<ObjectId> = sets.iter().map(|&s| ObjectId { name: p.set_name(s), set: Some(s) }).collect();
    let iv: Vec<Interval> = sets
        .iter()
        .map(|s| {
            let m = s.members();
            Interval { a: m[0] + 1, b: m[m.len() - 1] + 1 }
        })
        .collect();
    let k = objects.len();
    let mut basis = Vec::new();
    let mut identities = vec![0; k];
    let mut even: HashMap<(usize, usize), usize> = HashMap::new();
    let mut odd: HashMap<(usize, usize), usize> = HashMap::new();
    for y in 0..k {
        for z in 0..k {
            let (ny, nz) = (&objects[y].name, &objects[z].name);
            if y == z {
                identities[y] = basis.len();
                even.insert((y, z), basis.len());
                basis.push(BasisMorphism { source: y, target: z, degree: 0, label: format!("id[{ny}]") });
            } else if iv[y].even_to(iv[z]) {
                even.insert((y, z), basis.len());
                basis.push(BasisMorphism { source: y, target: z, degree: 0, label: format!("mu[{ny}>{nz}]") });
            }
            if iv[y].odd_to(iv[z]) {
                odd.insert((y, z), basis.len());
                basis.push(BasisMorphism { source: y, target: z, degree: 1, label: format!("delta[{ny}>{nz}]") });
            }
        }
    }
    let mut products = HashMap::new();
    for (f, bf) in basis.iter().enumerate() {
        for (g, bg) in basis.iter().enumerate() {
            if bg.target != bf.source {
                continue;
            }
            let (w, z) = (bg.source, bf.target);
            let result = if identities[bf.source] == f {
                Some(g)
            } else if identities[bg.target] == g {
                Some(f)
            } else {
                match (bf.degree, bg.degree) {
                    (0, 0) => even.get(&(w, z)).copied().filter(|_| w != z),
                    (1, 1) => None,
                    _ => odd.get(&(w, z)).copied(),
                }
            };
            if let Some(h) = result {
                products.insert((f, g), vec![(h, 1)]);
            }
        }
    }
    let obj = |a: usize, b: usize| iv.iter().position(|x| *x == Interval { a, b }).expect("interval object");
    let mut generators = Vec::new();
    for a in 2..=n {
        for b in a..=n {
            generators.push(even[&(obj(a, b), obj(a - 1, b))]);
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            generators.push(even[&(obj(a, b), obj(a, b - 1))]);
        }
    }
    for a in 2..=n {
        generators.push(odd[&(obj(1, a - 1), obj(a, n))]);
    }
    let mut ring = CategoryRing::new(format!("chain:{n}"), Some(p), objects, basis, identities, products, generators)
        .expect("chain generators factor every basis element");
    ring.attach_lc_triples().expect("chain triples are rank one");
    ring
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nil_ss_split, validate_ring};

    #[test]
    fn chain_rings_validate() {
        for n in 1..=4 {
            let r = chain_category(n);
            let rep = validate_ring(&r);
            assert!(rep.passed(), "chain {n}: {:?}", &rep.failures[..rep.failures.len().min(5)]);
            assert!(rep.nil_index <= 2 * n);
        }
    }

    #[test]
    fn far_apart_composite_vanishes() {
        let r = chain_category(2);
        let c = r.compose(&r.el("mu[12>1]").unwrap(), &r.el("mu[2>12]").unwrap()).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn delta_factors_through_generators() {
        let r = chain_category(3);
        let b = r.label_index("delta[12>23]").unwrap();
        let (sign, seq) = r.factorization(b).unwrap();
        assert_eq!(*sign, 1);
        assert!(seq.len() >= 2);
        assert!(seq.iter().any(|&g| r.basis()[g].label.starts_with("delta")));
    }

    #[test]
    fn odd_squared_is_zero() {
        let r = chain_category(4);
        for (f, bf) in r.basis().iter().enumerate() {
            for (g, bg) in r.basis().iter().enumerate() {
                if bf.degree == 1 && bg.degree == 1 && r.is_composable(f, g) {
                    assert!(r.product(f, g).is_empty());
                }
            }
        }
        assert!(nil_ss_split(&r).nil_index >= 2);
    }
}
