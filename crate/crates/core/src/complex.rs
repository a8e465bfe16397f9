//! Order complexes, the relative pairs presenting `S(Y,Z)`, and their
//! Z/2-graded integral cohomology.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::group::{homology, AbGroup, FgGroup, GradedAbelianGroup};
use crate::intmat::IntMatrix;
use crate::poset::{FinitePoset, LCSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("empty chain has no minimum or maximum")]
    EmptyChain,
}

/// A strict chain `x₀ ≺ x₁ ≺ … ≺ x_k`, stored in chain order.
pub type Simplex = Vec<usize>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    /// Whether every face of every simplex is present.
    pub fn is_closed_under_faces(&self) -> bool {
        self.simplices.iter().all(|s| {
            s.len() == 1
                || (0..s.len()).all(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    self.simplices.contains(&f)
                })
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialPair {
    pub total: SimplicialComplex,
    pub sub: SimplicialComplex,
}

impl SimplicialPair {
    /// Simplices of `total` not in `sub`: the open cells of `|total| ∖ |sub|`.
    pub fn relative_simplices(&self) -> BTreeSet<Simplex> {
        self.total.simplices.difference(&self.sub.simplices).cloned().collect()
    }

    pub fn relative_dim(&self) -> Option<usize> {
        self.relative_simplices().iter().map(|s| s.len() - 1).max()
    }

    pub fn render(&self, p: &FinitePoset) -> String {
        let show = |c: &SimplicialComplex| {
            c.simplices
                .iter()
                .map(|s| format!("({})", s.iter().map(|&i| p.elements()[i].as_str()).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("total: {}\nsub: {}\n", show(&self.total), show(&self.sub))
    }
}

fn sort_chain(p: &FinitePoset, chain: &mut Simplex) {
    chain.sort_by_key(|&x| chain_height(p, x));
}

fn chain_height(p: &FinitePoset, x: usize) -> usize {
    (0..p.len()).filter(|&y| p.lt(y, x)).count()
}

/// All strict chains contained in `within`.
pub fn chains_in(p: &FinitePoset, within: LCSet) -> SimplicialComplex {
    let members = within.members();
    let mut simplices = BTreeSet::new();
    let k = members.len();
    for mask in 1u32..(1u32 << k) {
        let mut chain: Simplex = (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| members[i]).collect();
        sort_chain(p, &mut chain);
        if chain.windows(2).all(|w| p.lt(w[0], w[1])) {
            simplices.insert(chain);
        }
    }
    SimplicialComplex { simplices }
}

pub fn order_complex(p: &FinitePoset) -> SimplicialComplex {
    chains_in(p, p.full())
}

pub fn m_of(s: &[usize]) -> Result<usize, ComplexError> {
    s.first().copied().ok_or(ComplexError::EmptyChain)
}

#[allow(non_snake_case)]
pub fn M_of(s: &[usize]) -> Result<usize, ComplexError> {
    s.last().copied().ok_or(ComplexError::EmptyChain)
}

/// `S(Y,Z)` as the pair `(Ch(Ỹ∩cl Z), Ch(Ỹ∩∂̄Z) ∪ Ch(∂̃Y∩cl Z))`.
#[allow(non_snake_case)]
pub fn relative_S(p: &FinitePoset, y: LCSet, z: LCSet) -> SimplicialPair {
    let cy = p.closure_ops(y);
    let cz = p.closure_ops(z);
    let total = chains_in(p, cy.up.intersect(cz.cl));
    let mut sub = chains_in(p, cy.up.intersect(cz.cl_boundary)).simplices;
    sub.extend(chains_in(p, cy.up_boundary.intersect(cz.cl)).simplices);
    sub.retain(|s| total.simplices.contains(s));
    SimplicialPair { total, sub: SimplicialComplex { simplices: sub } }
}

/// `{I : min I ∈ Y, max I ∈ Z}` by direct enumeration.
pub fn open_simplex_filter(p: &FinitePoset, y: LCSet, z: LCSet) -> BTreeSet<Simplex> {
    order_complex(p).simplices.into_iter().filter(|s| y.contains(s[0]) && z.contains(*s.last().unwrap())).collect()
}

/// Relative cohomology `H^q(total, sub; Z)` for `q = 0..=dim`.
pub fn cohomology_of_pair(pair: &SimplicialPair) -> Vec<AbGroup> {
    let cells = pair.relative_simplices();
    let Some(dim) = cells.iter().map(|s| s.len() - 1).max() else {
        return Vec::new();
    };
    let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); dim + 1];
    for s in cells {
        by_dim[s.len() - 1].push(s);
    }
    let index: Vec<HashMap<Simplex, usize>> =
        by_dim.iter().map(|v| v.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
    // coboundary δ^q : C^q → C^{q+1}, (δφ)(σ) = Σ (−1)^i φ(∂_i σ)
    let cobound = |q: usize| -> IntMatrix {
        let rows = by_dim.get(q + 1).map_or(0, Vec::len);
        let cols = by_dim[q].len();
        let mut m = IntMatrix::zeros(rows, cols);
        if q < dim {
            for (r, s) in by_dim[q + 1].iter().enumerate() {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    if let Some(&c) = index[q].get(&f) {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        *m.get_mut(r, c) += BigInt::from(sign);
                    }
                }
            }
        }
        m
    };
    (0..=dim)
        .map(|q| {
            let mid = FgGroup::free(by_dim[q].len());
            let d_in = if q == 0 { IntMatrix::zeros(by_dim[0].len(), 0) } else { cobound(q - 1) };
            let d_out = cobound(q);
            let next = FgGroup::free(d_out.rows());
            homology(&mid, &d_in, &d_out, &next).expect("coboundary squares to zero").group.invariants()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exactness {
    Exact,
    Heuristic,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => write!(f, "exact"),
            Exactness::Heuristic => write!(f, "heuristic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheoryResult {
    pub groups: GradedAbelianGroup,
    pub exactness: Exactness,
}

/// Z/2-graded cohomology standing in for `K^*`; flagged exact when the
/// relative complex has dimension ≤ 2 or the cohomology is torsion-free, since
/// then the Atiyah-Hirzebruch differentials and extensions are trivial.
pub fn graded_k_theory(pair: &SimplicialPair) -> KTheoryResult {
    let h = cohomology_of_pair(pair);
    let mut even = AbGroup::zero();
    let mut odd = AbGroup::zero();
    for (q, g) in h.iter().enumerate() {
        if q % 2 == 0 {
            even = even.direct_sum(g);
        } else {
            odd = odd.direct_sum(g);
        }
    }
    let dim = pair.relative_dim().unwrap_or(0);
    let exactness = if dim <= 2 || h.iter().all(AbGroup::is_free) { Exactness::Exact } else { Exactness::Heuristic };
    KTheoryResult { groups: GradedAbelianGroup::new(even, odd), exactness }
}

/// Graded hom group `𝒩ℑ_*(Y,Z) ≅ K^*(S(Y,Z))`, summed over components.
pub fn hom_group(p: &FinitePoset, y: LCSet, z: LCSet) -> KTheoryResult {
    let mut groups = GradedAbelianGroup::zero();
    let mut exactness = Exactness::Exact;
    for yc in p.components(y) {
        for zc in p.components(z) {
            let k = graded_k_theory(&relative_S(p, yc, zc));
            groups = groups.direct_sum(&k.groups);
            if k.exactness == Exactness::Heuristic {
                exactness = Exactness::Heuristic;
            }
        }
    }
    KTheoryResult { groups, exactness }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GradedAbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn d4_is_a_star_graph() {
        let p = FinitePoset::d4();
        let c = order_complex(&p);
        assert_eq!(c.vertices().len(), 4);
        assert_eq!(c.simplices.iter().filter(|s| s.len() == 2).count(), 3);
        assert_eq!(c.dim(), Some(1));
        assert!(c.simplices.contains(&vec![0, 3]));
    }

    #[test]
    fn chain_complex_is_a_simplex() {
        let c = order_complex(&FinitePoset::chain(4));
        assert_eq!(c.len(), 15);
        assert_eq!(c.dim(), Some(3));
        assert!(c.is_closed_under_faces());
    }

    #[test]
    fn min_and_max() {
        let p = FinitePoset::d4();
        let edge = order_complex(&p).simplices.into_iter().find(|s| s.len() == 2 && s[0] == 0).unwrap();
        assert_eq!(m_of(&edge).unwrap(), 0);
        assert_eq!(M_of(&edge).unwrap(), 3);
        assert_eq!(m_of(&[]), Err(ComplexError::EmptyChain));
    }

    #[test]
    fn interval_pair() {
        let p = FinitePoset::chain(2);
        let pair = relative_S(&p, p.parse_set("1").unwrap(), p.parse_set("2").unwrap());
        assert_eq!(pair.total.len(), 3);
        assert_eq!(pair.sub.len(), 2);
        assert_eq!(cohomology_of_pair(&pair), vec![AbGroup::zero(), AbGroup::free(1)]);
        assert_eq!(graded_k_theory(&pair).groups, g("Z[1]"));
    }

    #[test]
    fn relative_pair_matches_filter_exhaustively() {
        for p in [FinitePoset::d4(), FinitePoset::d4().opposite(), FinitePoset::chain(4), FinitePoset::antichain(3)] {
            let lc = p.locally_closed_sets();
            for &y in &lc {
                for &z in &lc {
                    let pair = relative_S(&p, y, z);
                    assert_eq!(pair.relative_simplices(), open_simplex_filter(&p, y, z));
                    assert!(pair.total.is_closed_under_faces());
                    assert!(pair.sub.is_closed_under_faces());
                }
            }
        }
    }

    #[test]
    fn filter_example() {
        let p = FinitePoset::d4();
        let f = open_simplex_filter(&p, p.parse_set("234").unwrap(), p.parse_set("14").unwrap());
        let expect: BTreeSet<Simplex> = [vec![3], vec![1, 3], vec![2, 3]].into_iter().collect();
        assert_eq!(f, expect);
        assert_eq!(hom_group(&p, p.parse_set("234").unwrap(), p.parse_set("14").unwrap()).groups, g("Z[1]"));
        assert!(open_simplex_filter(&p, LCSet::EMPTY, p.full()).is_empty());
    }

    #[test]
    fn simplex_cases() {
        let p = FinitePoset::chain(3);
        let full = SimplicialPair { total: order_complex(&p), sub: SimplicialComplex::default() };
        assert_eq!(cohomology_of_pair(&full), vec![AbGroup::free(1), AbGroup::zero(), AbGroup::zero()]);
        // two disjoint faces {1} and {3} removed... the edge 13 with interior point 2 kept
        let sub = chains_in(&p, p.parse_set("1").unwrap())
            .simplices
            .union(&chains_in(&p, p.parse_set("3").unwrap()).simplices)
            .cloned()
            .collect();
        let pair = SimplicialPair { total: order_complex(&p), sub: SimplicialComplex { simplices: sub } };
        assert_eq!(graded_k_theory(&pair).groups, g("Z[1]"));
        // two intersecting faces
        let sub = chains_in(&p, p.parse_set("12").unwrap())
            .simplices
            .union(&chains_in(&p, p.parse_set("23").unwrap()).simplices)
            .cloned()
            .collect();
        let pair = SimplicialPair { total: order_complex(&p), sub: SimplicialComplex { simplices: sub } };
        assert!(graded_k_theory(&pair).groups.is_zero());
    }

    #[test]
    fn d4_table_spot_checks() {
        let p = FinitePoset::d4();
        let s = |n: &str| p.parse_set(n).unwrap();
        assert_eq!(hom_group(&p, s("1234"), s("4")).groups, g("Z^2[1]"));
        assert_eq!(hom_group(&p, s("4"), s("1234")).groups, g("Z[0]"));
        assert_eq!(hom_group(&p, s("14"), s("1")).groups, g("Z[0]"));
        let c = FinitePoset::chain(2);
        assert!(hom_group(&c, c.parse_set("1").unwrap(), c.parse_set("12").unwrap()).groups.is_zero());
    }

    #[test]
    fn cones_are_acyclic() {
        for p in [FinitePoset::d4(), FinitePoset::d4().opposite(), FinitePoset::chain(5)] {
            for x in 0..p.len() {
                let ux = p.up_closure(LCSet::singleton(x));
                let cone = chains_in(&p, ux);
                for s in &cone.simplices {
                    let mut t = s.clone();
                    if !t.contains(&x) {
                        t.insert(0, x);
                    }
                    assert!(cone.contains(&t));
                }
                let pair = SimplicialPair { total: cone, sub: SimplicialComplex::default() };
                let h = cohomology_of_pair(&pair);
                assert_eq!(h[0], AbGroup::free(1));
                assert!(h[1..].iter().all(AbGroup::is_zero));
            }
        }
    }

    #[test]
    fn same_as_connected_self_pair() {
        let p = FinitePoset::d4();
        for y in p.connected_lc_sets() {
            let pair = relative_S(&p, y, y);
            assert!(pair.sub.is_empty());
            assert_eq!(pair.total, chains_in(&p, y));
        }
    }
}
