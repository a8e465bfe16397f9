//! Nil and semisimple parts, free covers, Tor₁ and free resolutions.

use num_bigint::BigInt;

use super::{cokernel, flip, free_hom, free_module, kernel, submodule, FreeModuleSpec, FreeSummand, Module, ModuleHom};
use crate::group::{self, GradedAbelianGroup, Subgroup};
use crate::intmat::IntMatrix;

pub const DEFAULT_MAX_LENGTH: usize = 8;

/// `nil · M`: in each slot, the sum of images of all non-identity actions.
pub fn nil_submodule(m: &Module) -> (Module, ModuleHom) {
    let ring = m.ring().clone();
    let subs: Vec<[Subgroup; 2]> = (0..ring.num_objects())
        .map(|z| {
            let f = |q: usize| {
                let slot = m.slot(z, q);
                let mut gens = IntMatrix::zeros(slot.ngens(), 0);
                for (b, bm) in ring.basis().iter().enumerate() {
                    if bm.target == z && !ring.is_identity(b) {
                        gens = gens.hcat(m.action(b, flip(q, bm.degree)));
                    }
                }
                Subgroup::generated(slot, &gens)
            };
            [f(0), f(1)]
        })
        .collect();
    submodule(m, &subs).expect("nil · M is a submodule")
}

/// `M_ss = M / nil·M` with the projection and a section per slot.
#[derive(Clone, Debug)]
pub struct SsPart {
    pub module: Module,
    pub proj: ModuleHom,
    pub section: Vec<[IntMatrix; 2]>,
}

pub fn ss_part(m: &Module) -> SsPart {
    let (_, incl) = nil_submodule(m);
    let (module, proj, section) = cokernel(&incl);
    SsPart { module, proj, section }
}

/// A free module mapping onto `M`, one summand per generator of `M_ss`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub spec: FreeModuleSpec,
    pub free: Module,
    pub map: ModuleHom,
}

pub fn free_cover(m: &Module) -> FreeCover {
    let ring = m.ring().clone();
    let ss = ss_part(m);
    let mut spec = Vec::new();
    let mut images: Vec<Vec<BigInt>> = Vec::new();
    for y in 0..ring.num_objects() {
        for p in 0..2 {
            let sec = &ss.section[y][p];
            for k in 0..ss.module.slot(y, p).ngens() {
                spec.push(FreeSummand { object: y, shift: p as u8 });
                images.push(sec.column(k));
            }
        }
    }
    let free = free_module(&ring, &spec);
    let map = free_hom(&free, &spec, m, &images);
    FreeCover { spec, free, map }
}

/// `Tor₁(ss, M)` per object, as `ker(K_ss → F_ss)` for a free cover `K ↣ F ↠ M`.
pub fn tor1_ss_by_object(m: &Module) -> Vec<GradedAbelianGroup> {
    let cover = free_cover(m);
    let (k, incl) = kernel(&cover.map);
    let kss = ss_part(&k);
    let fss = ss_part(&cover.free);
    (0..m.ring().num_objects())
        .map(|y| {
            let f = |p: usize| {
                let a = fss.proj.map(y, p).mul(incl.map(y, p)).mul(&kss.section[y][p]);
                group::kernel(kss.module.slot(y, p), fss.module.slot(y, p), &a).group.invariants()
            };
            GradedAbelianGroup::new(f(0), f(1))
        })
        .collect()
}

pub fn tor1_ss(m: &Module) -> GradedAbelianGroup {
    tor1_ss_by_object(m).iter().fold(GradedAbelianGroup::zero(), |acc, g| acc.direct_sum(g))
}

#[derive(Clone, Debug)]
pub struct FreenessReport {
    pub ss_free: bool,
    pub tor1: GradedAbelianGroup,
    pub free: bool,
    /// free cover that is an isomorphism, when `free`
    pub witness: Option<FreeCover>,
}

/// Free iff `M_ss` is slotwise free and `Tor₁(ss, M) = 0`; on success the
/// free cover is checked to be an isomorphism.
pub fn is_free(m: &Module) -> FreenessReport {
    let ss_free = ss_part(m).module.is_slotwise_free();
    let tor1 = tor1_ss(m);
    let mut witness = None;
    if ss_free && tor1.is_zero() {
        let cover = free_cover(m);
        if cover.map.is_iso() {
            witness = Some(cover);
        }
    }
    FreenessReport { ss_free, tor1, free: witness.is_some(), witness }
}

#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub specs: Vec<FreeModuleSpec>,
    pub modules: Vec<Module>,
    /// `boundaries[i]: F_{i+1} → F_i`
    pub boundaries: Vec<ModuleHom>,
    pub augmentation: ModuleHom,
    /// the last kernel vanished; otherwise the resolution was cut off
    pub complete: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }
}

/// Iterated free covers until a kernel vanishes or `max_length` is reached.
pub fn free_resolution(m: &Module, max_length: usize) -> FreeResolution {
    let c0 = free_cover(m);
    let (mut k, mut incl) = kernel(&c0.map);
    let mut res = FreeResolution {
        specs: vec![c0.spec],
        modules: vec![c0.free],
        boundaries: Vec::new(),
        augmentation: c0.map,
        complete: false,
    };
    loop {
        if k.is_zero() {
            res.complete = true;
            break;
        }
        if res.length() >= max_length {
            break;
        }
        let c = free_cover(&k);
        res.boundaries.push(incl.compose(&c.map));
        let (k2, incl2) = kernel(&c.map);
        k = k2;
        incl = incl2;
        res.specs.push(c.spec);
        res.modules.push(c.free);
    }
    res
}

fn stage_failures(d_out: &ModuleHom, d_in: Option<&ModuleHom>, stage: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let mid = &d_out.source;
    for y in 0..mid.ring().num_objects() {
        for p in 0..2 {
            let ker = group::kernel(mid.slot(y, p), d_out.target.slot(y, p), d_out.map(y, p));
            let covered = match d_in {
                Some(d) => {
                    let im = group::image(mid.slot(y, p), d.map(y, p));
                    if !group::is_zero_map(d_out.target.slot(y, p), &d_out.map(y, p).mul(d.map(y, p))) {
                        bad.push(format!("d∘d ≠ 0 at stage {stage}"));
                    }
                    im.contains_all(&ker.incl)
                }
                None => ker.group.is_trivial(),
            };
            if !covered {
                bad.push(format!("not exact at stage {stage}, object {}", mid.ring().objects()[y].name));
            }
        }
    }
    bad
}

/// Homomorphism checks, `d² = 0`, exactness at every stage and surjectivity
/// of the augmentation.
pub fn check_resolution(res: &FreeResolution) -> Vec<String> {
    let mut bad: Vec<String> = Vec::new();
    for d in res.boundaries.iter().chain([&res.augmentation]) {
        bad.extend(d.check());
    }
    if !res.augmentation.is_surjective() {
        bad.push("augmentation is not surjective".into());
    }
    for i in 0..res.modules.len() {
        let d_out = if i == 0 { &res.augmentation } else { &res.boundaries[i - 1] };
        let d_in = res.boundaries.get(i);
        if d_in.is_none() && !res.complete {
            continue;
        }
        bad.extend(stage_failures(d_out, d_in, i));
    }
    bad
}

/// For chain rings: over an exact module, `nil·M([a,b])` is the kernel of
/// `δ: [a,b] → [a+1,b+1]` when `b < n` and of `μ: [a,n] → [1,a]` otherwise.
/// Returns the objects where the two descriptions disagree.
pub fn chain_kernel_formula_check(m: &Module) -> Vec<String> {
    let ring = m.ring().clone();
    let Some(poset) = ring.poset() else { return vec!["ring has no underlying space".into()] };
    let n = poset.len();
    let (_, incl) = nil_submodule(m);
    let mut bad = Vec::new();
    for (y, obj) in ring.objects().iter().enumerate() {
        let Some(set) = obj.set else { continue };
        let mem = set.members();
        let (a, b) = (mem[0], mem[mem.len() - 1]);
        let (target, degree) =
            if b + 1 < n { ((a + 1..=b + 1).collect::<Vec<_>>(), 1u8) } else { ((0..=a).collect(), 0u8) };
        let z = ring.object_of_set(crate::poset::LCSet::from_members(&target)).expect("interval is an object");
        let hom = ring.hom_of_degree(y, z, degree);
        let [e] = hom[..] else {
            bad.push(format!("{}: expected one longest morphism", obj.name));
            continue;
        };
        for p in 0..2 {
            let slot = m.slot(y, p);
            let ker = group::kernel(slot, m.slot(z, flip(p, degree)), m.action(e, p));
            let nil_sub = Subgroup::generated(slot, incl.map(y, p));
            if !ker.same_as(&nil_sub) {
                bad.push(format!("{}[{p}]", obj.name));
            }
        }
    }
    bad
}
