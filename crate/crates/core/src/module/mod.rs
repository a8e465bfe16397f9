//! Graded modules over a category ring: one finitely generated abelian group
//! per object and parity, and one matrix per basis morphism and parity.

mod d4;
mod exact;
mod format;
mod hom;
pub mod random;
mod resolve;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::category::{CategoryRing, RingElement, RingError, RingMap};
use crate::group::{self, FgGroup, GradedAbelianGroup, GroupError, Subgroup};
use crate::intmat::IntMatrix;

pub use d4::{counterexample, counterexample_mod_k, j_map, p0_spec};
pub use exact::{is_exact, two_out_of_three_check, ExactnessFailure, ExactnessReport, TwoOfThreeReport};
pub use format::{parse_module, parse_module_over, write_module};
pub use hom::{ext, ext_from_resolution, hom_modules, yoneda, HomGroup};
pub use resolve::{
    chain_kernel_formula_check, check_resolution, free_cover, free_resolution, is_free, nil_submodule, ss_part,
    tor1_ss, FreeCover, FreeResolution, FreenessReport, SsPart, DEFAULT_MAX_LENGTH,
};

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("modules live over different rings ({0} and {1})")]
    RingMismatch(String, String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not closed under the action: {0}")]
    NotClosed(String),
    #[error("not a module homomorphism: {0}")]
    NotAHom(String),
    #[error("not an extension: {0}")]
    NotAnExtension(String),
    #[error("resolution stops at length {length} but Ext^{degree} needs one more stage")]
    ResolutionTruncated { length: usize, degree: usize },
    #[error("module does not fit the ring: {0}")]
    SpecMismatch(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Parity of a slot: 0 even, 1 odd.
pub type Parity = usize;

fn flip(p: Parity, degree: u8) -> Parity {
    (p + degree as usize) % 2
}

#[derive(Clone, Debug)]
pub struct Module {
    ring: Arc<CategoryRing>,
    slots: Vec<[FgGroup; 2]>,
    /// `actions[b][p]`: slot(target, p + deg b) × slot(source, p)
    actions: Vec<[IntMatrix; 2]>,
    names: Vec<[Vec<String>; 2]>,
}

impl Module {
    /// Builds a module from an action matrix for every basis element.
    pub fn new(
        ring: Arc<CategoryRing>,
        slots: Vec<[FgGroup; 2]>,
        actions: Vec<[IntMatrix; 2]>,
    ) -> Result<Self, ModuleError> {
        if slots.len() != ring.num_objects() || actions.len() != ring.basis().len() {
            return Err(ModuleError::Shape("slot or action count does not match the ring".into()));
        }
        let mut m = Module { ring, slots, actions, names: Vec::new() };
        for b in 0..m.actions.len() {
            let bm = &m.ring.basis()[b];
            for p in 0..2 {
                let src = &m.slots[bm.source][p];
                let tgt = &m.slots[bm.target][flip(p, bm.degree)];
                src.check_hom(tgt, &m.actions[b][p])
                    .map_err(|e| ModuleError::Shape(format!("action of {}: {e}", bm.label)))?;
                m.actions[b][p] = tgt.reduce_rows(&m.actions[b][p]);
            }
        }
        Ok(m)
    }

    /// Builds a module from generator actions; every other basis element acts
    /// through its factorization. Missing generators act by zero.
    pub fn from_generators(
        ring: Arc<CategoryRing>,
        slots: Vec<[FgGroup; 2]>,
        given: &HashMap<usize, [IntMatrix; 2]>,
    ) -> Result<Self, ModuleError> {
        let zero_action = |b: usize, p: Parity| {
            let bm = &ring.basis()[b];
            IntMatrix::zeros(slots[bm.target][flip(p, bm.degree)].ngens(), slots[bm.source][p].ngens())
        };
        let mut actions = Vec::with_capacity(ring.basis().len());
        for b in 0..ring.basis().len() {
            let bm = &ring.basis()[b];
            let a = if let Some(a) = given.get(&b) {
                a.clone()
            } else if ring.is_identity(b) {
                let n = |p: usize| IntMatrix::identity(slots[bm.source][p].ngens());
                [n(0), n(1)]
            } else {
                let (sign, seq) = ring.factorization(b).expect("validated ring");
                let mut out = [zero_action(b, 0), zero_action(b, 1)];
                for (p, slot) in out.iter_mut().enumerate() {
                    let mut q = p;
                    let mut acc = IntMatrix::identity(slots[bm.source][p].ngens());
                    for &g in seq {
                        let ga = given.get(&g).cloned().unwrap_or_else(|| [zero_action(g, 0), zero_action(g, 1)]);
                        acc = ga[q].mul(&acc);
                        q = flip(q, ring.basis()[g].degree);
                    }
                    *slot = acc.scale(&BigInt::from(*sign));
                }
                out
            };
            actions.push(a);
        }
        Module::new(ring, slots, actions)
    }

    pub fn zero(ring: Arc<CategoryRing>) -> Self {
        let slots = vec![[FgGroup::zero(), FgGroup::zero()]; ring.num_objects()];
        let actions = vec![[IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0)]; ring.basis().len()];
        Module { ring, slots, actions, names: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<CategoryRing> {
        &self.ring
    }

    pub fn slot(&self, y: usize, p: Parity) -> &FgGroup {
        &self.slots[y][p]
    }

    pub fn slots(&self) -> &[[FgGroup; 2]] {
        &self.slots
    }

    pub fn action(&self, b: usize, p: Parity) -> &IntMatrix {
        &self.actions[b][p]
    }

    /// Action of a ring element on the parity `p` part of its source slot.
    pub fn act(&self, e: &RingElement, p: Parity) -> IntMatrix {
        let tgt = &self.slots[e.target][flip(p, e.degree)];
        let mut out = IntMatrix::zeros(tgt.ngens(), self.slots[e.source][p].ngens());
        for (&b, &c) in &e.terms {
            out = out.add(&self.actions[b][p].scale(&BigInt::from(c)));
        }
        tgt.reduce_rows(&out)
    }

    /// Invariant form of the value at an object.
    pub fn value(&self, y: usize) -> GradedAbelianGroup {
        GradedAbelianGroup::new(self.slots[y][0].invariants(), self.slots[y][1].invariants())
    }

    pub fn value_at(&self, name: &str) -> Result<GradedAbelianGroup, ModuleError> {
        Ok(self.value(self.ring.object_index(name)?))
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().flatten().all(|g| g.invariants().is_zero())
    }

    /// Every slot is a free abelian group.
    pub fn is_slotwise_free(&self) -> bool {
        self.slots.iter().flatten().all(|g| g.invariants().is_free())
    }

    /// Generator names per slot, if the module was read from a file.
    pub fn names(&self, y: usize, p: Parity) -> Option<&[String]> {
        self.names.get(y).map(|n| n[p].as_slice())
    }

    pub(crate) fn set_names(&mut self, names: Vec<[Vec<String>; 2]>) {
        self.names = names;
    }

    pub fn same_ring(&self, other: &Module) -> Result<(), ModuleError> {
        if self.ring.name() == other.ring.name() {
            Ok(())
        } else {
            Err(ModuleError::RingMismatch(self.ring.name().into(), other.ring.name().into()))
        }
    }

    fn identity_maps(&self) -> Vec<[IntMatrix; 2]> {
        self.slots.iter().map(|s| [IntMatrix::identity(s[0].ngens()), IntMatrix::identity(s[1].ngens())]).collect()
    }

    pub fn identity_hom(&self) -> ModuleHom {
        ModuleHom { source: self.clone(), target: self.clone(), degree: 0, maps: self.identity_maps() }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (y, o) in self.ring.objects().iter().enumerate() {
            writeln!(f, "{:>6}  {}", o.name, self.value(y))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct ModuleReport {
    pub failures: Vec<String>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Identity and compatibility laws, with the witnessing basis pair.
pub fn validate_module(m: &Module) -> ModuleReport {
    let mut rep = ModuleReport::default();
    let ring = &m.ring;
    let nb = ring.basis().len();
    for y in 0..ring.num_objects() {
        let id = ring.identity(y);
        for p in 0..2 {
            let g = &m.slots[y][p];
            let diff = m.actions[id][p].sub(&IntMatrix::identity(g.ngens()));
            if !group::is_zero_map(g, &diff) {
                rep.failures.push(format!("{} does not act as the identity", ring.basis()[id].label));
            }
        }
    }
    for b in 0..nb {
        let bm = &ring.basis()[b];
        for p in 0..2 {
            if let Err(e) = m.slots[bm.source][p].check_hom(&m.slots[bm.target][flip(p, bm.degree)], &m.actions[b][p]) {
                rep.failures.push(format!("action of {} is not well defined: {e}", bm.label));
            }
        }
    }
    for f in 0..nb {
        for g in 0..nb {
            if !ring.is_composable(f, g) {
                continue;
            }
            let prod = ring.compose(&ring.element(f), &ring.element(g)).expect("composable");
            let (bf, bg) = (&ring.basis()[f], &ring.basis()[g]);
            for p in 0..2 {
                let lhs = m.actions[f][flip(p, bg.degree)].mul(&m.actions[g][p]);
                let rhs = m.act(&prod, p);
                let tgt = &m.slots[bf.target][flip(p, bf.degree + bg.degree)];
                if !group::is_zero_map(tgt, &lhs.sub(&rhs)) {
                    rep.failures.push(format!("{} ∘ {} is not respected", bf.label, bg.label));
                    break;
                }
            }
        }
    }
    rep
}

/// A family of slot maps `A(Y)_p → B(Y)_{p+degree}` commuting with the actions.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    pub source: Module,
    pub target: Module,
    pub degree: u8,
    pub maps: Vec<[IntMatrix; 2]>,
}

impl ModuleHom {
    pub fn new(source: Module, target: Module, degree: u8, maps: Vec<[IntMatrix; 2]>) -> Result<Self, ModuleError> {
        source.same_ring(&target)?;
        let mut h = ModuleHom { source, target, degree, maps };
        let problems = h.check();
        if let Some(p) = problems.first() {
            return Err(ModuleError::NotAHom(p.clone()));
        }
        for (y, m) in h.maps.iter_mut().enumerate() {
            for (p, a) in m.iter_mut().enumerate() {
                *a = h.target.slots[y][flip(p, degree)].reduce_rows(a);
            }
        }
        Ok(h)
    }

    pub fn map(&self, y: usize, p: Parity) -> &IntMatrix {
        &self.maps[y][p]
    }

    /// Well-definedness and commutation with every generator.
    pub fn check(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let ring = self.source.ring.clone();
        if self.maps.len() != ring.num_objects() {
            return vec!["wrong number of slot maps".into()];
        }
        for y in 0..ring.num_objects() {
            for p in 0..2 {
                let (a, b) = (&self.source.slots[y][p], &self.target.slots[y][flip(p, self.degree)]);
                if let Err(e) = a.check_hom(b, &self.maps[y][p]) {
                    bad.push(format!("slot {}[{p}]: {e}", ring.objects()[y].name));
                }
            }
        }
        if !bad.is_empty() {
            return bad;
        }
        for &g in ring.generators() {
            let bg = &ring.basis()[g];
            for p in 0..2 {
                let q = flip(p, bg.degree);
                let lhs = self.maps[bg.target][q].mul(self.source.action(g, p));
                let rhs = self.target.action(g, flip(p, self.degree)).mul(&self.maps[bg.source][p]);
                let tgt = &self.target.slots[bg.target][flip(q, self.degree)];
                if !group::is_zero_map(tgt, &lhs.sub(&rhs)) {
                    bad.push(format!("does not commute with {}", bg.label));
                }
            }
        }
        bad
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleHom) -> ModuleHom {
        let maps = (0..self.maps.len())
            .map(|y| {
                let f = |p: usize| {
                    let q = flip(p, other.degree);
                    let m = self.maps[y][q].mul(&other.maps[y][p]);
                    self.target.slots[y][flip(q, self.degree)].reduce_rows(&m)
                };
                [f(0), f(1)]
            })
            .collect();
        ModuleHom {
            source: other.source.clone(),
            target: self.target.clone(),
            degree: (self.degree + other.degree) % 2,
            maps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps
            .iter()
            .enumerate()
            .all(|(y, m)| (0..2).all(|p| group::is_zero_map(&self.target.slots[y][flip(p, self.degree)], &m[p])))
    }

    fn slot_groups(&self, y: usize, p: Parity) -> (&FgGroup, &FgGroup) {
        (&self.source.slots[y][p], &self.target.slots[y][flip(p, self.degree)])
    }

    pub fn is_injective(&self) -> bool {
        (0..self.maps.len()).all(|y| {
            (0..2).all(|p| {
                let (a, b) = self.slot_groups(y, p);
                group::is_injective(a, b, &self.maps[y][p])
            })
        })
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.maps.len()).all(|y| (0..2).all(|p| group::is_surjective(self.slot_groups(y, p).1, &self.maps[y][p])))
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Sum of two parallel homomorphisms.
    pub fn plus(&self, other: &ModuleHom) -> ModuleHom {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| [a[0].add(&b[0]), a[1].add(&b[1])]).collect();
        ModuleHom { source: self.source.clone(), target: self.target.clone(), degree: self.degree, maps }
    }
}

/// One summand `P_Y[shift]` of a free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeSummand {
    pub object: usize,
    pub shift: u8,
}

pub type FreeModuleSpec = Vec<FreeSummand>;

pub fn spec_to_string(ring: &CategoryRing, spec: &[FreeSummand]) -> String {
    if spec.is_empty() {
        return "0".into();
    }
    spec.iter()
        .map(|s| {
            let name = &ring.objects()[s.object].name;
            if s.shift == 1 {
                format!("P_{name}[1]")
            } else {
                format!("P_{name}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Generators of slot `(z, q)` of a free module: pairs (summand, basis morphism).
pub fn free_layout(ring: &CategoryRing, spec: &[FreeSummand], z: usize, q: Parity) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, s) in spec.iter().enumerate() {
        for &b in ring.hom(s.object, z) {
            if flip(s.shift as usize, ring.basis()[b].degree) == q {
                out.push((i, b));
            }
        }
    }
    out
}

/// Coordinates of the generator of summand `i` inside its home slot.
pub fn free_generator(ring: &CategoryRing, spec: &[FreeSummand], i: usize) -> (usize, Parity, usize) {
    let s = spec[i];
    let p = s.shift as usize;
    let layout = free_layout(ring, spec, s.object, p);
    let pos = layout.iter().position(|&x| x == (i, ring.identity(s.object))).expect("identity in layout");
    (s.object, p, pos)
}

/// `⊕ P_Y[shift]`, acting by left composition.
pub fn free_module(ring: &Arc<CategoryRing>, spec: &[FreeSummand]) -> Module {
    let n = ring.num_objects();
    let layouts: Vec<[Vec<(usize, usize)>; 2]> =
        (0..n).map(|z| [free_layout(ring, spec, z, 0), free_layout(ring, spec, z, 1)]).collect();
    let index: Vec<[HashMap<(usize, usize), usize>; 2]> = layouts
        .iter()
        .map(|l| {
            let f = |p: usize| l[p].iter().enumerate().map(|(k, &x)| (x, k)).collect();
            [f(0), f(1)]
        })
        .collect();
    let slots = layouts.iter().map(|l| [FgGroup::free(l[0].len()), FgGroup::free(l[1].len())]).collect();
    let mut actions = Vec::with_capacity(ring.basis().len());
    for (f, bf) in ring.basis().iter().enumerate() {
        let mk = |p: usize| {
            let q = flip(p, bf.degree);
            let src = &layouts[bf.source][p];
            let mut m = IntMatrix::zeros(layouts[bf.target][q].len(), src.len());
            for (col, &(i, g)) in src.iter().enumerate() {
                for &(h, c) in ring.product(f, g) {
                    let row = index[bf.target][q][&(i, h)];
                    *m.get_mut(row, col) += c;
                }
            }
            m
        };
        actions.push([mk(0), mk(1)]);
    }
    Module { ring: ring.clone(), slots, actions, names: Vec::new() }
}

/// The homomorphism `free_module(spec) → target` sending the generator of
/// summand `i` to `images[i]`, an element of `target(Y_i)` in parity `shift_i`.
pub fn free_hom(free: &Module, spec: &[FreeSummand], target: &Module, images: &[Vec<BigInt>]) -> ModuleHom {
    let ring = free.ring.clone();
    let maps = (0..ring.num_objects())
        .map(|z| {
            let f = |q: usize| {
                let layout = free_layout(&ring, spec, z, q);
                let cols: Vec<Vec<BigInt>> =
                    layout.iter().map(|&(i, b)| target.action(b, spec[i].shift as usize).mul_vec(&images[i])).collect();
                target.slots[z][q].reduce_rows(&IntMatrix::from_columns(target.slots[z][q].ngens(), &cols))
            };
            [f(0), f(1)]
        })
        .collect();
    ModuleHom { source: free.clone(), target: target.clone(), degree: 0, maps }
}

/// Direct sum of a list of modules over one ring.
pub fn direct_sum(parts: &[Module]) -> Result<Module, ModuleError> {
    let first = parts.first().ok_or_else(|| ModuleError::Shape("empty direct sum".into()))?;
    for p in parts {
        first.same_ring(p)?;
    }
    let ring = first.ring.clone();
    let slots = (0..ring.num_objects())
        .map(|y| {
            let f = |p: usize| parts.iter().fold(FgGroup::zero(), |acc, m| acc.direct_sum(&m.slots[y][p]));
            [f(0), f(1)]
        })
        .collect();
    let actions = (0..ring.basis().len())
        .map(|b| {
            let f = |p: usize| parts.iter().fold(IntMatrix::zeros(0, 0), |acc, m| acc.block_diag(&m.actions[b][p]));
            [f(0), f(1)]
        })
        .collect();
    Ok(Module { ring, slots, actions, names: Vec::new() })
}

/// Parity shift `M[1]`.
pub fn shift(m: &Module) -> Module {
    let swap = |x: &[FgGroup; 2]| [x[1].clone(), x[0].clone()];
    Module {
        ring: m.ring.clone(),
        slots: m.slots.iter().map(swap).collect(),
        actions: m.actions.iter().map(|a| [a[1].clone(), a[0].clone()]).collect(),
        names: m.names.iter().map(|n| [n[1].clone(), n[0].clone()]).collect(),
    }
}

/// The submodule with the given slot subgroups, with its inclusion.
pub fn submodule(m: &Module, subs: &[[Subgroup; 2]]) -> Result<(Module, ModuleHom), ModuleError> {
    let ring = m.ring.clone();
    let mut actions = Vec::with_capacity(ring.basis().len());
    for (b, bm) in ring.basis().iter().enumerate() {
        let f = |p: usize| {
            let image = m.actions[b][p].mul(&subs[bm.source][p].incl);
            subs[bm.target][flip(p, bm.degree)]
                .lift_matrix(&image)
                .ok_or_else(|| ModuleError::NotClosed(format!("{} leaves the subgroup", bm.label)))
        };
        actions.push([f(0)?, f(1)?]);
    }
    let slots = subs.iter().map(|s| [s[0].group.clone(), s[1].group.clone()]).collect();
    let sub = Module { ring, slots, actions, names: Vec::new() };
    let maps = subs.iter().map(|s| [s[0].incl.clone(), s[1].incl.clone()]).collect();
    let incl = ModuleHom { source: sub.clone(), target: m.clone(), degree: 0, maps };
    Ok((sub, incl))
}

fn slot_subgroups(h: &ModuleHom, f: impl Fn(&FgGroup, &FgGroup, &IntMatrix) -> Subgroup) -> Vec<[Subgroup; 2]> {
    (0..h.maps.len())
        .map(|y| {
            let g = |p: usize| {
                let (a, b) = h.slot_groups(y, p);
                f(a, b, &h.maps[y][p])
            };
            [g(0), g(1)]
        })
        .collect()
}

pub fn kernel(h: &ModuleHom) -> (Module, ModuleHom) {
    let subs = slot_subgroups(h, group::kernel);
    submodule(&h.source, &subs).expect("kernels are submodules")
}

/// Image as a submodule of the target; degree-zero homomorphisms only.
pub fn image(h: &ModuleHom) -> (Module, ModuleHom) {
    assert_eq!(h.degree, 0, "image of a shifted homomorphism");
    let subs = slot_subgroups(h, |_, b, a| group::image(b, a));
    submodule(&h.target, &subs).expect("images are submodules")
}

/// Quotient of the target by the image, with the projection. Each slot keeps
/// a section back to the target for lifting.
pub fn cokernel(h: &ModuleHom) -> (Module, ModuleHom, Vec<[IntMatrix; 2]>) {
    let ring = h.target.ring.clone();
    let n = ring.num_objects();
    let mut quots: Vec<[Option<group::Quotient>; 2]> = (0..n).map(|_| [None, None]).collect();
    for y in 0..n {
        for p in 0..2 {
            // the target slot at parity p receives source parity p + degree
            let sp = flip(p, h.degree);
            quots[y][p] = Some(group::cokernel(&h.target.slots[y][p], &h.maps[y][sp]));
        }
    }
    let q = |y: usize, p: usize| quots[y][p].as_ref().expect("filled");
    let slots: Vec<[FgGroup; 2]> = (0..n).map(|y| [q(y, 0).group.clone(), q(y, 1).group.clone()]).collect();
    let actions = ring
        .basis()
        .iter()
        .enumerate()
        .map(|(b, bm)| {
            let f = |p: usize| {
                let tq = q(bm.target, flip(p, bm.degree));
                let m = tq.proj.mul(&h.target.actions[b][p]).mul(&q(bm.source, p).section);
                tq.group.reduce_rows(&m)
            };
            [f(0), f(1)]
        })
        .collect();
    let quot = Module { ring, slots, actions, names: Vec::new() };
    let proj = ModuleHom {
        source: h.target.clone(),
        target: quot.clone(),
        degree: 0,
        maps: (0..n).map(|y| [q(y, 0).proj.clone(), q(y, 1).proj.clone()]).collect(),
    };
    let sections = (0..n).map(|y| [q(y, 0).section.clone(), q(y, 1).section.clone()]).collect();
    (quot, proj, sections)
}

/// Multiplication by an integer.
pub fn scalar_hom(m: &Module, k: i64) -> ModuleHom {
    let k = BigInt::from(k);
    let maps = m.identity_maps().into_iter().map(|[a, b]| [a.scale(&k), b.scale(&k)]).collect();
    ModuleHom { source: m.clone(), target: m.clone(), degree: 0, maps }
}

/// `M / kM`.
pub fn quotient_mod_k(m: &Module, k: i64) -> Module {
    cokernel(&scalar_hom(m, k)).0
}

/// Restriction of scalars along a ring map `src → m.ring`.
pub fn restrict(m: &Module, src: &Arc<CategoryRing>, phi: &RingMap) -> Module {
    let slots = phi.object_map.iter().map(|&y| m.slots[y].clone()).collect();
    let actions = (0..src.basis().len())
        .map(|b| {
            let e = &phi.images[b];
            [m.act(e, 0), m.act(e, 1)]
        })
        .collect();
    Module { ring: src.clone(), slots, actions, names: Vec::new() }
}

/// Invariant values at every object, in object order.
pub fn graded_values(m: &Module) -> Vec<GradedAbelianGroup> {
    (0..m.ring.num_objects()).map(|y| m.value(y)).collect()
}

/// Element of a slot as a coordinate vector, from small integers.
pub fn element(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests;
