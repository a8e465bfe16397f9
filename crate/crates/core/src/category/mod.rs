//! Z/2-graded category rings: a finite basis of morphisms between objects,
//! integer structure constants, and the distinguished `(i, r, δ)` triples
//! whose six-term sequences define exactness of modules.

mod chain;
mod d4;
mod path;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::complex::{hom_group, Exactness};
use crate::group::{AbGroup, GradedAbelianGroup};
use crate::intmat::{column_echelon, IntMatrix};
use crate::poset::{FinitePoset, LCSet};

pub use chain::chain_category;
pub use d4::{d4_category, d4_refined_category, d4op_category, refined_embedding, refined_sign};
pub use path::{Quiver, Relation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("unknown builtin ring `{0}`")]
    UnknownRing(String),
    #[error("presentation error: {0}")]
    Presentation(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectId {
    pub name: String,
    /// `None` for virtual objects such as `12344`.
    pub set: Option<LCSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMorphism {
    pub source: usize,
    pub target: usize,
    pub degree: u8,
    pub label: String,
}

/// Integer combination of basis morphisms with a common source, target and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pub source: usize,
    pub target: usize,
    pub degree: u8,
    pub terms: BTreeMap<usize, i64>,
}

impl RingElement {
    pub fn zero(source: usize, target: usize, degree: u8) -> Self {
        RingElement { source, target, degree, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: usize, c: i64) {
        let e = self.terms.entry(b).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = RingElement::zero(self.source, self.target, self.degree);
        for (&b, &c) in &self.terms {
            out.add_term(b, c * k);
        }
        out
    }

    pub fn plus(&self, other: &RingElement) -> Result<Self, RingError> {
        if (self.source, self.target, self.degree) != (other.source, other.target, other.degree) {
            return Err(RingError::ObjectMismatch("adding elements of different hom groups".into()));
        }
        let mut out = self.clone();
        for (&b, &c) in &other.terms {
            out.add_term(b, c);
        }
        Ok(out)
    }
}

/// A distinguished triangle `A --i--> B --r--> C --δ--> A[1]`, each of
/// `A`, `B`, `C` a list of connected objects; map entries are indexed
/// `[target component][source component]`.
#[derive(Clone, Debug)]
pub struct ExactTriple {
    pub label: String,
    pub sub: Vec<usize>,
    pub mid: Vec<usize>,
    pub quot: Vec<usize>,
    pub i: Vec<Vec<RingElement>>,
    pub r: Vec<Vec<RingElement>>,
    pub delta: Vec<Vec<RingElement>>,
}

/// Sign and generator sequence whose composite is a basis morphism.
pub type Factorization = (i64, Vec<usize>);

#[derive(Clone, Debug)]
pub struct CategoryRing {
    name: String,
    poset: Option<FinitePoset>,
    objects: Vec<ObjectId>,
    basis: Vec<BasisMorphism>,
    homs: Vec<Vec<Vec<usize>>>,
    identities: Vec<usize>,
    products: HashMap<(usize, usize), Vec<(usize, i64)>>,
    generators: Vec<usize>,
    factorization: Vec<Option<Factorization>>,
    triples: Vec<ExactTriple>,
    label_index: HashMap<String, usize>,
}

impl CategoryRing {
    /// `products[(f, g)]` is `f ∘ g` for composable basis pairs; missing pairs compose to zero.
    pub(crate) fn new(
        name: impl Into<String>,
        poset: Option<FinitePoset>,
        objects: Vec<ObjectId>,
        basis: Vec<BasisMorphism>,
        identities: Vec<usize>,
        products: HashMap<(usize, usize), Vec<(usize, i64)>>,
        generators: Vec<usize>,
    ) -> Result<Self, RingError> {
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (k, b) in basis.iter().enumerate() {
            homs[b.source][b.target].push(k);
        }
        let label_index = basis.iter().enumerate().map(|(k, b)| (b.label.clone(), k)).collect();
        let mut ring = CategoryRing {
            name: name.into(),
            poset,
            objects,
            basis,
            homs,
            identities,
            products,
            generators,
            factorization: Vec::new(),
            triples: Vec::new(),
            label_index,
        };
        ring.factorization = ring.factorize()?;
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poset(&self) -> Option<&FinitePoset> {
        self.poset.as_ref()
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn basis(&self) -> &[BasisMorphism] {
        &self.basis
    }

    pub fn hom(&self, y: usize, z: usize) -> &[usize] {
        &self.homs[y][z]
    }

    pub fn hom_of_degree(&self, y: usize, z: usize, degree: u8) -> Vec<usize> {
        self.homs[y][z].iter().copied().filter(|&b| self.basis[b].degree == degree).collect()
    }

    pub fn identity(&self, y: usize) -> usize {
        self.identities[y]
    }

    pub fn is_identity(&self, b: usize) -> bool {
        self.identities[self.basis[b].source] == b
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn triples(&self) -> &[ExactTriple] {
        &self.triples
    }

    /// Sign and generator sequence (in order of application) whose product is the basis element.
    pub fn factorization(&self, b: usize) -> Option<&Factorization> {
        self.factorization[b].as_ref()
    }

    pub fn product(&self, f: usize, g: usize) -> &[(usize, i64)] {
        self.products.get(&(f, g)).map_or(&[], Vec::as_slice)
    }

    pub fn object_index(&self, name: &str) -> Result<usize, RingError> {
        self.objects.iter().position(|o| o.name == name).ok_or_else(|| RingError::UnknownObject(name.to_string()))
    }

    pub fn object_of_set(&self, set: LCSet) -> Option<usize> {
        self.objects.iter().position(|o| o.set == Some(set))
    }

    pub fn label_index(&self, label: &str) -> Result<usize, RingError> {
        self.label_index.get(label).copied().ok_or_else(|| RingError::UnknownLabel(label.to_string()))
    }

    pub fn element(&self, b: usize) -> RingElement {
        let m = &self.basis[b];
        let mut e = RingElement::zero(m.source, m.target, m.degree);
        e.add_term(b, 1);
        e
    }

    /// Basis element by label.
    pub fn el(&self, label: &str) -> Result<RingElement, RingError> {
        Ok(self.element(self.label_index(label)?))
    }

    pub fn compose(&self, f: &RingElement, g: &RingElement) -> Result<RingElement, RingError> {
        if g.target != f.source {
            return Err(RingError::ObjectMismatch(format!(
                "cannot compose {} after {}",
                self.objects[f.source].name, self.objects[g.target].name
            )));
        }
        let mut out = RingElement::zero(g.source, f.target, (f.degree + g.degree) % 2);
        for (&a, &ca) in &f.terms {
            for (&b, &cb) in &g.terms {
                for &(h, ch) in self.product(a, b) {
                    out.add_term(h, ca * cb * ch);
                }
            }
        }
        Ok(out)
    }

    /// Composes a chain of elements given in order of application.
    pub fn compose_path(&self, path: &[RingElement]) -> Result<RingElement, RingError> {
        let mut it = path.iter();
        let mut acc = it.next().ok_or_else(|| RingError::ObjectMismatch("empty path".into()))?.clone();
        for e in it {
            acc = self.compose(e, &acc)?;
        }
        Ok(acc)
    }

    /// Free graded group spanned by the basis of `hom(y, z)`.
    pub fn hom_graded(&self, y: usize, z: usize) -> GradedAbelianGroup {
        GradedAbelianGroup::new(
            AbGroup::free(self.hom_of_degree(y, z, 0).len()),
            AbGroup::free(self.hom_of_degree(y, z, 1).len()),
        )
    }

    fn factorize(&self) -> Result<Vec<Option<Factorization>>, RingError> {
        let mut fact: Vec<Option<(i64, Vec<usize>)>> = vec![None; self.basis.len()];
        for &g in &self.generators {
            fact[g] = Some((1, vec![g]));
        }
        let mut changed = true;
        while changed {
            changed = false;
            for e in 0..self.basis.len() {
                if fact[e].is_some() || self.is_identity(e) {
                    continue;
                }
                let (src, tgt) = (self.basis[e].source, self.basis[e].target);
                'search: for &g in &self.generators {
                    if self.basis[g].target != tgt {
                        continue;
                    }
                    for &h in &self.homs[src][self.basis[g].source] {
                        let Some((sh, seq)) = &fact[h] else { continue };
                        if let [(x, c)] = self.product(g, h) {
                            if *x == e && c.abs() == 1 {
                                let mut s = seq.clone();
                                s.push(g);
                                fact[e] = Some((sh * c, s));
                                changed = true;
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
        if let Some(e) = (0..self.basis.len()).find(|&e| fact[e].is_none() && !self.is_identity(e)) {
            return Err(RingError::Presentation(format!(
                "basis element {} is not a signed product of generators",
                self.basis[e].label
            )));
        }
        Ok(fact)
    }

    /// Attaches one triple per connected `Y` and relatively open `∅ ≠ U ⊊ Y`.
    pub(crate) fn attach_lc_triples(&mut self) -> Result<(), RingError> {
        let Some(p) = self.poset.clone() else { return Ok(()) };
        for y in 0..self.objects.len() {
            let Some(yset) = self.objects[y].set else { continue };
            for u in p.relatively_open(yset) {
                if u.is_empty() || u == yset {
                    continue;
                }
                let v = yset.minus(u);
                let lookup = |s: LCSet| self.object_of_set(s).ok_or_else(|| RingError::UnknownObject(p.set_name(s)));
                let sub: Vec<usize> = p.components(u).into_iter().map(lookup).collect::<Result<_, _>>()?;
                let quot: Vec<usize> = p.components(v).into_iter().map(lookup).collect::<Result<_, _>>()?;
                let label = format!("{}/{}", self.objects[y].name, p.set_name(u));
                let t = self.make_triple(label, sub, vec![y], quot)?;
                self.triples.push(t);
            }
        }
        Ok(())
    }

    fn unique_generator(&self, y: usize, z: usize, degree: u8, allow_zero: bool) -> Result<RingElement, RingError> {
        let h = self.hom_of_degree(y, z, degree);
        match h.len() {
            1 => Ok(self.element(h[0])),
            0 if allow_zero => Ok(RingElement::zero(y, z, degree)),
            k => Err(RingError::Presentation(format!(
                "expected a rank-one hom group {}→{} in degree {degree}, found rank {k}",
                self.objects[y].name, self.objects[z].name
            ))),
        }
    }

    /// Builds a triple from hom-group generators, choosing signs of the
    /// boundary entries so that consecutive composites vanish.
    pub(crate) fn make_triple(
        &self,
        label: String,
        sub: Vec<usize>,
        mid: Vec<usize>,
        quot: Vec<usize>,
    ) -> Result<ExactTriple, RingError> {
        let i: Vec<Vec<RingElement>> = mid
            .iter()
            .map(|&m| sub.iter().map(|&s| self.unique_generator(s, m, 0, true)).collect())
            .collect::<Result<_, _>>()?;
        let r: Vec<Vec<RingElement>> = quot
            .iter()
            .map(|&q| mid.iter().map(|&m| self.unique_generator(m, q, 0, true)).collect())
            .collect::<Result<_, _>>()?;
        let base: Vec<Vec<RingElement>> = sub
            .iter()
            .map(|&s| quot.iter().map(|&q| self.unique_generator(q, s, 1, true)).collect())
            .collect::<Result<_, _>>()?;
        let slots: Vec<(usize, usize)> = (0..sub.len())
            .flat_map(|a| (0..quot.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| !base[a][b].is_zero())
            .collect();
        for pattern in 0u32..(1 << slots.len()) {
            let mut delta = base.clone();
            for (k, &(a, b)) in slots.iter().enumerate() {
                if pattern & (1 << k) != 0 {
                    delta[a][b] = delta[a][b].scaled(-1);
                }
            }
            let t = ExactTriple {
                label: label.clone(),
                sub: sub.clone(),
                mid: mid.clone(),
                quot: quot.clone(),
                i: i.clone(),
                r: r.clone(),
                delta,
            };
            if self.triple_composites_vanish(&t)? {
                return Ok(t);
            }
        }
        Err(RingError::Presentation(format!("no sign choice makes triple {label} a complex")))
    }

    fn matrix_product(
        &self,
        f: &[Vec<RingElement>],
        g: &[Vec<RingElement>],
        src: &[usize],
        tgt: &[usize],
        degree: u8,
    ) -> Result<Vec<Vec<RingElement>>, RingError> {
        let mut out = Vec::new();
        for (row, &t) in f.iter().zip(tgt) {
            let mut line = Vec::new();
            for (c, &s) in src.iter().enumerate() {
                let mut acc = RingElement::zero(s, t, degree);
                for (k, fe) in row.iter().enumerate() {
                    acc = acc.plus(&self.compose(fe, &g[k][c])?)?;
                }
                line.push(acc);
            }
            out.push(line);
        }
        Ok(out)
    }

    /// `r∘i`, `δ∘r` and `i∘δ` all vanish.
    pub fn triple_composites_vanish(&self, t: &ExactTriple) -> Result<bool, RingError> {
        let ri = self.matrix_product(&t.r, &t.i, &t.sub, &t.quot, 0)?;
        let dr = self.matrix_product(&t.delta, &t.r, &t.mid, &t.sub, 1)?;
        let id = self.matrix_product(&t.i, &t.delta, &t.quot, &t.mid, 1)?;
        Ok([ri, dr, id].iter().all(|m| m.iter().flatten().all(RingElement::is_zero)))
    }

    pub(crate) fn push_triple(&mut self, t: ExactTriple) {
        self.triples.push(t);
    }

    /// A copy with one structure constant changed, for fault-injection tests.
    pub fn perturbed(&self, f: usize, g: usize, delta: i64) -> Self {
        let mut r = self.clone();
        let mb = &r.basis;
        let target = (mb[g].source, mb[f].target, (mb[f].degree + mb[g].degree) % 2);
        let h = r.homs[target.0][target.1]
            .iter()
            .copied()
            .find(|&h| mb[h].degree == target.2)
            .expect("target hom group is nonzero");
        let entry = r.products.entry((f, g)).or_default();
        match entry.iter_mut().find(|(x, _)| *x == h) {
            Some((_, c)) => *c += delta,
            None => entry.push((h, delta)),
        }
        entry.retain(|&(_, c)| c != 0);
        r
    }

    pub fn is_composable(&self, f: usize, g: usize) -> bool {
        self.basis[g].target == self.basis[f].source
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("{c}·#{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A graded functor between category rings, given on basis elements.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub object_map: Vec<usize>,
    pub images: Vec<RingElement>,
}

impl RingMap {
    /// Extends images of generators multiplicatively along factorizations.
    pub fn from_generators(
        src: &CategoryRing,
        tgt: &CategoryRing,
        object_map: Vec<usize>,
        gen_images: &HashMap<usize, RingElement>,
    ) -> Result<Self, RingError> {
        let mut images = Vec::with_capacity(src.basis.len());
        for b in 0..src.basis.len() {
            if src.is_identity(b) {
                images.push(tgt.element(tgt.identity(object_map[src.basis[b].source])));
                continue;
            }
            let (sign, seq) = src.factorization(b).expect("validated ring");
            let path: Vec<RingElement> = seq
                .iter()
                .map(|g| gen_images.get(g).cloned().ok_or_else(|| RingError::UnknownLabel(src.basis[*g].label.clone())))
                .collect::<Result<_, _>>()?;
            images.push(tgt.compose_path(&path)?.scaled(*sign));
        }
        Ok(RingMap { object_map, images })
    }

    pub fn apply(&self, e: &RingElement) -> RingElement {
        let mut out = RingElement::zero(self.object_map[e.source], self.object_map[e.target], e.degree);
        for (&b, &c) in &e.terms {
            for (&h, &d) in &self.images[b].terms {
                out.add_term(h, c * d);
            }
        }
        out
    }

    /// Multiplicativity on all composable basis pairs.
    pub fn check_functor(&self, src: &CategoryRing, tgt: &CategoryRing) -> Vec<String> {
        let mut bad = Vec::new();
        for f in 0..src.basis.len() {
            for g in 0..src.basis.len() {
                if !src.is_composable(f, g) {
                    continue;
                }
                let lhs = self.apply(&src.compose(&src.element(f), &src.element(g)).unwrap());
                let rhs = tgt.compose(&self.images[f], &self.images[g]).unwrap();
                if lhs != rhs {
                    bad.push(format!("{} ∘ {}", src.basis[f].label, src.basis[g].label));
                }
            }
        }
        bad
    }

    /// Each hom group maps isomorphically onto its image hom group.
    pub fn check_bijective(&self, src: &CategoryRing, tgt: &CategoryRing) -> Vec<String> {
        let mut bad = Vec::new();
        for y in 0..src.objects.len() {
            for z in 0..src.objects.len() {
                for d in 0..2u8 {
                    let from = src.hom_of_degree(y, z, d);
                    let to = tgt.hom_of_degree(self.object_map[y], self.object_map[z], d);
                    let mut m = IntMatrix::zeros(to.len(), from.len());
                    for (c, &b) in from.iter().enumerate() {
                        for (&h, &x) in &self.images[b].terms {
                            let r = to.iter().position(|&t| t == h).expect("image in target hom group");
                            m.set(r, c, x.into());
                        }
                    }
                    if !crate::group::is_unimodular(&m) {
                        bad.push(format!("hom({}, {}) in degree {d}", src.objects[y].name, src.objects[z].name));
                    }
                }
            }
        }
        bad
    }
}

#[derive(Clone, Debug, Default)]
pub struct RingReport {
    pub failures: Vec<String>,
    pub nil_index: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct NilSsSplit {
    pub nil_basis: Vec<usize>,
    pub ss_basis: Vec<usize>,
    pub nil_index: usize,
}

/// Identities versus everything else, and the least `k` with `nil^k = 0`.
pub fn nil_ss_split(ring: &CategoryRing) -> NilSsSplit {
    let nb = ring.basis.len();
    let nil_basis: Vec<usize> = (0..nb).filter(|&b| !ring.is_identity(b)).collect();
    let ss_basis: Vec<usize> = (0..nb).filter(|&b| ring.is_identity(b)).collect();
    // span of nil^k, kept as a list of basis-coordinate vectors
    let mut power: Vec<RingElement> = nil_basis.iter().map(|&b| ring.element(b)).collect();
    let mut k = 1;
    let limit = nb + 2;
    while !power.is_empty() && k <= limit {
        let mut next: Vec<RingElement> = Vec::new();
        for &a in &nil_basis {
            let ea = ring.element(a);
            for p in &power {
                if p.target == ring.basis[a].source {
                    let c = ring.compose(&ea, p).expect("composable");
                    if !c.is_zero() {
                        next.push(c);
                    }
                }
            }
        }
        power = reduce_span(nb, next);
        k += 1;
    }
    NilSsSplit { nil_basis, ss_basis, nil_index: k }
}

fn reduce_span(nb: usize, elems: Vec<RingElement>) -> Vec<RingElement> {
    if elems.is_empty() {
        return elems;
    }
    let mut groups: BTreeMap<(usize, usize, u8), Vec<RingElement>> = BTreeMap::new();
    for e in elems {
        groups.entry((e.source, e.target, e.degree)).or_default().push(e);
    }
    let mut out = Vec::new();
    for ((s, t, d), es) in groups {
        let cols: Vec<Vec<num_bigint::BigInt>> = es
            .iter()
            .map(|e| {
                let mut v = vec![num_bigint::BigInt::from(0); nb];
                for (&b, &c) in &e.terms {
                    v[b] = c.into();
                }
                v
            })
            .collect();
        let basis = column_echelon(&IntMatrix::from_columns(nb, &cols)).image();
        for j in 0..basis.cols() {
            let mut e = RingElement::zero(s, t, d);
            for (b, x) in basis.column(j).iter().enumerate() {
                if !num_traits::Zero::is_zero(x) {
                    e.add_term(b, i64::try_from(x).expect("small coefficient"));
                }
            }
            out.push(e);
        }
    }
    out
}

/// Associativity on all composable basis triples, identity laws, degree
/// additivity, nilpotency, triple complexes, generator factorizations and,
/// when the ring carries a poset, hom ranks against cohomology.
pub fn validate_ring(ring: &CategoryRing) -> RingReport {
    let mut rep = RingReport::default();
    let nb = ring.basis.len();
    let label = |b: usize| ring.basis[b].label.as_str();
    for f in 0..nb {
        let bf = &ring.basis[f];
        // identity laws
        let id_src = ring.identity(bf.source);
        let id_tgt = ring.identity(bf.target);
        if ring.product(f, id_src) != [(f, 1)] || ring.product(id_tgt, f) != [(f, 1)] {
            rep.failures.push(format!("identity law fails for {}", label(f)));
        }
        for g in 0..nb {
            if !ring.is_composable(f, g) {
                if ring.products.contains_key(&(f, g)) {
                    rep.failures.push(format!("product of non-composable {}∘{}", label(f), label(g)));
                }
                continue;
            }
            rep.pairs_checked += 1;
            let bg = &ring.basis[g];
            for &(h, _) in ring.product(f, g) {
                let bh = &ring.basis[h];
                if bh.source != bg.source || bh.target != bf.target || bh.degree != (bf.degree + bg.degree) % 2 {
                    rep.failures.push(format!("{}∘{} has a term of the wrong type", label(f), label(g)));
                }
            }
        }
    }
    for f in 0..nb {
        for g in 0..nb {
            if !ring.is_composable(f, g) {
                continue;
            }
            let fg = ring.compose(&ring.element(f), &ring.element(g)).unwrap();
            for h in 0..nb {
                if !ring.is_composable(g, h) {
                    continue;
                }
                let left = ring.compose(&fg, &ring.element(h)).unwrap();
                let gh = ring.compose(&ring.element(g), &ring.element(h)).unwrap();
                let right = ring.compose(&ring.element(f), &gh).unwrap();
                if left != right {
                    rep.failures.push(format!("associativity fails on ({}, {}, {})", label(f), label(g), label(h)));
                }
            }
        }
    }
    for y in 0..ring.objects.len() {
        if ring.basis[ring.identity(y)].source != y || ring.basis[ring.identity(y)].degree != 0 {
            rep.failures.push(format!("identity of {} is malformed", ring.objects[y].name));
        }
    }
    for b in 0..nb {
        if ring.is_identity(b) {
            continue;
        }
        let Some((sign, seq)) = ring.factorization(b) else {
            rep.failures.push(format!("{} has no factorization", label(b)));
            continue;
        };
        let elems: Vec<RingElement> = seq.iter().map(|&g| ring.element(g)).collect();
        match ring.compose_path(&elems) {
            Ok(p) if p == ring.element(b).scaled(*sign) => {}
            _ => rep.failures.push(format!("factorization of {} does not multiply out", label(b))),
        }
    }
    for t in &ring.triples {
        rep.triples_checked += 1;
        match ring.triple_composites_vanish(t) {
            Ok(true) => {}
            _ => rep.failures.push(format!("triple {} is not a complex", t.label)),
        }
    }
    let split = nil_ss_split(&ring.clone());
    if split.nil_index > nb + 1 {
        rep.failures.push("nil ideal is not nilpotent".into());
    }
    rep.nil_index = split.nil_index;
    if let Some(p) = &ring.poset {
        for (y, oy) in ring.objects.iter().enumerate() {
            for (z, oz) in ring.objects.iter().enumerate() {
                let (Some(ys), Some(zs)) = (oy.set, oz.set) else { continue };
                let k = hom_group(p, ys, zs);
                if k.exactness != Exactness::Exact || ring.hom_graded(y, z) != k.groups {
                    rep.failures.push(format!(
                        "hom({}, {}) has basis {} but cohomology gives {}",
                        oy.name,
                        oz.name,
                        ring.hom_graded(y, z),
                        k.groups
                    ));
                }
            }
        }
    }
    rep
}

/// Builtin rings: `chain:N`, `d4`, `d4op`, `d4refined`.
pub fn builtin_ring(name: &str) -> Result<CategoryRing, RingError> {
    match name {
        "d4" => d4_category(),
        "d4op" => d4op_category(),
        "d4refined" => d4_refined_category(),
        other => match other.strip_prefix("chain:").and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=8).contains(&n) => Ok(chain_category(n)),
            _ => Err(RingError::UnknownRing(other.to_string())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_like_nil_index() {
        let r = chain_category(1);
        let s = nil_ss_split(&r);
        assert!(s.nil_basis.is_empty());
        assert_eq!(s.nil_index, 1);
    }

    #[test]
    fn builtins_resolve() {
        for name in ["chain:3", "d4", "d4op", "d4refined"] {
            assert_eq!(builtin_ring(name).unwrap().name(), name);
        }
        assert!(builtin_ring("chain:0").is_err());
        assert!(builtin_ring("torus").is_err());
    }
}
