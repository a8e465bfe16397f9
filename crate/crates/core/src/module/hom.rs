//! Homomorphism groups between modules and Ext through free resolutions.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{flip, free_generator, free_layout, free_resolution, FreeResolution, Module, ModuleError, ModuleHom};
use crate::group::{self, FgGroup, GradedAbelianGroup};
use crate::intmat::IntMatrix;

/// `Hom(A, B)` in both parities with an explicit basis of homomorphisms.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: GradedAbelianGroup,
    /// `basis[s]`: generators of the degree-`s` part, matching its cyclic decomposition
    pub basis: [Vec<ModuleHom>; 2],
}

/// Yoneda evaluation: `Hom(P_Y, N) ≅ N(Y)`.
pub fn yoneda(n: &Module, y: usize) -> GradedAbelianGroup {
    n.value(y)
}

pub fn hom_modules(a: &Module, b: &Module) -> Result<HomGroup, ModuleError> {
    a.same_ring(b)?;
    let (even, be) = hom_part(a, b, 0);
    let (odd, bo) = hom_part(a, b, 1);
    Ok(HomGroup { group: GradedAbelianGroup::new(even.invariants(), odd.invariants()), basis: [be, bo] })
}

/// Solves for families of slot matrices commuting with every generator.
fn hom_part(a: &Module, b: &Module, s: u8) -> (FgGroup, Vec<ModuleHom>) {
    let ring = a.ring().clone();
    let n = ring.num_objects();
    // variable offsets: X[y][p] is |B(y, p+s)| × |A(y, p)|, row-major
    let mut offset = vec![[0usize; 2]; n];
    let mut orders: Vec<BigInt> = Vec::new();
    for y in 0..n {
        for p in 0..2 {
            offset[y][p] = orders.len();
            let (rows, cols) = (b.slot(y, flip(p, s)), a.slot(y, p).ngens());
            for i in 0..rows.ngens() {
                orders.extend(std::iter::repeat_n(rows.orders()[i].clone(), cols));
            }
        }
    }
    let nvars = orders.len();
    let var = |y: usize, p: usize, i: usize, j: usize| offset[y][p] + i * a.slot(y, p).ngens() + j;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut target_orders: Vec<BigInt> = Vec::new();
    // well-definedness on torsion generators of A
    for y in 0..n {
        for p in 0..2 {
            let tgt = b.slot(y, flip(p, s));
            for (j, o) in a.slot(y, p).orders().iter().enumerate() {
                if o.is_zero() {
                    continue;
                }
                for i in 0..tgt.ngens() {
                    let mut row = vec![BigInt::zero(); nvars];
                    row[var(y, p, i, j)] = o.clone();
                    rows.push(row);
                    target_orders.push(tgt.orders()[i].clone());
                }
            }
        }
    }
    // commutation with generators: act_B(f)·X_y − X_z·act_A(f) = 0
    for &f in ring.generators() {
        let bf = &ring.basis()[f];
        let (y, z) = (bf.source, bf.target);
        for p in 0..2 {
            let q = flip(p, bf.degree);
            let act_b = b.action(f, flip(p, s));
            let act_a = a.action(f, p);
            let tgt = b.slot(z, flip(q, s));
            for j in 0..a.slot(y, p).ngens() {
                for r in 0..tgt.ngens() {
                    let mut row = vec![BigInt::zero(); nvars];
                    for i in 0..b.slot(y, flip(p, s)).ngens() {
                        row[var(y, p, i, j)] += act_b.get(r, i);
                    }
                    for k in 0..a.slot(z, q).ngens() {
                        row[var(z, q, r, k)] -= act_a.get(k, j);
                    }
                    rows.push(row);
                    target_orders.push(tgt.orders()[r].clone());
                }
            }
        }
    }
    let source = FgGroup::new(orders);
    let target = FgGroup::new(target_orders);
    let phi = if rows.is_empty() { IntMatrix::zeros(0, nvars) } else { IntMatrix::from_rows(&rows) };
    let sol = group::kernel(&source, &target, &phi);
    let basis = (0..sol.incl.cols())
        .map(|c| {
            let v = sol.incl.column(c);
            let maps = (0..n)
                .map(|y| {
                    let f = |p: usize| {
                        let (r, k) = (b.slot(y, flip(p, s)).ngens(), a.slot(y, p).ngens());
                        let mut m = IntMatrix::zeros(r, k);
                        for i in 0..r {
                            for j in 0..k {
                                m.set(i, j, v[var(y, p, i, j)].clone());
                            }
                        }
                        m
                    };
                    [f(0), f(1)]
                })
                .collect();
            ModuleHom { source: a.clone(), target: b.clone(), degree: s, maps }
        })
        .collect();
    (sol.group, basis)
}

/// Cochain group `Hom(F_k, B)` in parity `s`: one copy of `B(Y)` per summand.
fn cochains(res: &FreeResolution, b: &Module, k: usize, s: u8) -> FgGroup {
    match res.specs.get(k) {
        Some(spec) => {
            spec.iter().fold(FgGroup::zero(), |acc, g| acc.direct_sum(b.slot(g.object, flip(g.shift as usize, s))))
        }
        None => FgGroup::zero(),
    }
}

/// `Hom(F_k, B) → Hom(F_{k+1}, B)`, precomposition with `F_{k+1} → F_k`.
fn coboundary(res: &FreeResolution, b: &Module, k: usize, s: u8) -> IntMatrix {
    let ring = b.ring().clone();
    let cols = cochains(res, b, k, s).ngens();
    let Some(d) = res.boundaries.get(k) else {
        return IntMatrix::zeros(cochains(res, b, k + 1, s).ngens(), cols);
    };
    let (src_spec, tgt_spec) = (&res.specs[k + 1], &res.specs[k]);
    let width = |g: &super::FreeSummand| b.slot(g.object, flip(g.shift as usize, s)).ngens();
    let col_start: Vec<usize> = tgt_spec
        .iter()
        .scan(0, |acc, g| {
            let start = *acc;
            *acc += width(g);
            Some(start)
        })
        .collect();
    let rows: usize = src_spec.iter().map(width).sum();
    let mut out = IntMatrix::zeros(rows, cols);
    let mut r0 = 0;
    for (gi, g2) in src_spec.iter().enumerate() {
        let (y2, p2, pos) = free_generator(&ring, src_spec, gi);
        let image = d.map(y2, p2).column(pos);
        for (&(g, basis_el), c) in free_layout(&ring, tgt_spec, y2, p2).iter().zip(&image) {
            if c.is_zero() {
                continue;
            }
            let act = b.action(basis_el, flip(tgt_spec[g].shift as usize, s)).scale(c);
            for i in 0..act.rows() {
                for j in 0..act.cols() {
                    *out.get_mut(r0 + i, col_start[g] + j) += act.get(i, j);
                }
            }
        }
        r0 += width(g2);
    }
    out
}

/// `Ext^n(A, B)` from a free resolution of `A`.
pub fn ext_from_resolution(res: &FreeResolution, b: &Module, n: usize) -> Result<GradedAbelianGroup, ModuleError> {
    res.augmentation.source.same_ring(b)?;
    let len = res.length();
    if !res.complete && n >= len {
        return Err(ModuleError::ResolutionTruncated { length: len, degree: n });
    }
    if n > len {
        return Ok(GradedAbelianGroup::zero());
    }
    let part = |s: u8| -> Result<_, ModuleError> {
        let mid = cochains(res, b, n, s);
        let next = cochains(res, b, n + 1, s);
        let d_out = coboundary(res, b, n, s);
        let d_in = if n == 0 { IntMatrix::zeros(mid.ngens(), 0) } else { coboundary(res, b, n - 1, s) };
        Ok(group::homology(&mid, &d_in, &d_out, &next)?.group.invariants())
    };
    Ok(GradedAbelianGroup::new(part(0)?, part(1)?))
}

pub fn ext(a: &Module, b: &Module, n: usize, max_length: usize) -> Result<GradedAbelianGroup, ModuleError> {
    a.same_ring(b)?;
    ext_from_resolution(&free_resolution(a, max_length), b, n)
}
