//! Exactness of six-term sequences and extension closure.

use super::{flip, Module, ModuleError, ModuleHom, Parity};
use crate::category::{ExactTriple, RingElement};
use crate::group::{self, FgGroup};
use crate::intmat::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub triple: String,
    /// node of the six-term sequence, e.g. `mid[0]`
    pub position: String,
}

#[derive(Clone, Debug, Default)]
pub struct ExactnessReport {
    pub failures: Vec<ExactnessFailure>,
    pub triples_checked: usize,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sum_group(m: &Module, objs: &[usize], p: Parity) -> FgGroup {
    objs.iter().fold(FgGroup::zero(), |acc, &y| acc.direct_sum(m.slot(y, p)))
}

/// Block matrix `⊕ src → ⊕ tgt` with entries `grid[t][s]`.
fn block(m: &Module, grid: &[Vec<RingElement>], src: &[usize], tgt: &[usize], p: Parity) -> IntMatrix {
    let rows: usize = tgt.iter().map(|&y| m.slot(y, flip(p, grid_degree(grid))).ngens()).sum();
    let cols: usize = src.iter().map(|&y| m.slot(y, p).ngens()).sum();
    let mut out = IntMatrix::zeros(rows, cols);
    let mut r0 = 0;
    for (t, row) in grid.iter().enumerate() {
        let mut c0 = 0;
        for (s, e) in row.iter().enumerate() {
            let a = m.act(e, p);
            out.paste(r0, c0, &a);
            c0 += m.slot(src[s], p).ngens();
        }
        r0 += m.slot(tgt[t], flip(p, grid_degree(grid))).ngens();
    }
    out
}

fn grid_degree(grid: &[Vec<RingElement>]) -> u8 {
    grid.iter().flatten().next().map_or(0, |e| e.degree)
}

/// Checks every six-term sequence `M(U) → M(Y) → M(Y∖U) → M(U)[1] → …`
/// attached to the ring's triples.
pub fn is_exact(m: &Module) -> ExactnessReport {
    let mut rep = ExactnessReport::default();
    for t in m.ring().triples() {
        rep.triples_checked += 1;
        for pos in triple_failures(m, t) {
            rep.failures.push(ExactnessFailure { triple: t.label.clone(), position: pos });
        }
    }
    rep
}

fn triple_failures(m: &Module, t: &ExactTriple) -> Vec<String> {
    // nodes in cyclic order: sub0, mid0, quot0, sub1, mid1, quot1
    let objs = [&t.sub, &t.mid, &t.quot];
    let names = ["sub", "mid", "quot"];
    let groups: Vec<FgGroup> = (0..6).map(|k| sum_group(m, objs[k % 3], k / 3)).collect();
    let maps: Vec<IntMatrix> = (0..6)
        .map(|k| {
            let p = k / 3;
            match k % 3 {
                0 => block(m, &t.i, &t.sub, &t.mid, p),
                1 => block(m, &t.r, &t.mid, &t.quot, p),
                _ => block(m, &t.delta, &t.quot, &t.sub, p),
            }
        })
        .collect();
    let mut bad = Vec::new();
    for k in 0..6 {
        let prev = (k + 5) % 6;
        let (f, g) = (&maps[prev], &maps[k]);
        let x = &groups[k];
        let next = &groups[(k + 1) % 6];
        let composite_zero = group::is_zero_map(next, &g.mul(f));
        let ker = group::kernel(x, next, g);
        let im = group::image(x, f);
        if !composite_zero || !im.contains_all(&ker.incl) {
            bad.push(format!("{}[{}]", names[k % 3], k / 3));
        }
    }
    bad
}

#[derive(Clone, Debug)]
pub struct TwoOfThreeReport {
    pub sub_exact: bool,
    pub middle_exact: bool,
    pub quotient_exact: bool,
}

impl TwoOfThreeReport {
    /// Exactly two exact modules would contradict extension closure.
    pub fn consistent(&self) -> bool {
        [self.sub_exact, self.middle_exact, self.quotient_exact].iter().filter(|&&x| x).count() != 2
    }
}

/// Confirms that `K ↣ E ↠ Q` is an extension, then reports exactness of all three.
pub fn two_out_of_three_check(incl: &ModuleHom, proj: &ModuleHom) -> Result<TwoOfThreeReport, ModuleError> {
    let not_ext = |msg: &str| Err(ModuleError::NotAnExtension(msg.into()));
    if incl.degree != 0 || proj.degree != 0 {
        return not_ext("maps must preserve parity");
    }
    if let Some(p) = incl.check().into_iter().chain(proj.check()).next() {
        return Err(ModuleError::NotAnExtension(p));
    }
    if !incl.is_injective() {
        return not_ext("first map is not injective");
    }
    if !proj.is_surjective() {
        return not_ext("second map is not surjective");
    }
    let e = &incl.target;
    for y in 0..e.ring().num_objects() {
        for p in 0..2 {
            let q = proj.target.slot(y, p);
            if !group::is_zero_map(q, &proj.map(y, p).mul(incl.map(y, p))) {
                return not_ext("composite is not zero");
            }
            let ker = group::kernel(e.slot(y, p), q, proj.map(y, p));
            if !group::image(e.slot(y, p), incl.map(y, p)).contains_all(&ker.incl) {
                return not_ext("not exact in the middle");
            }
        }
    }
    Ok(TwoOfThreeReport {
        sub_exact: is_exact(&incl.source).exact(),
        middle_exact: is_exact(e).exact(),
        quotient_exact: is_exact(&proj.target).exact(),
    })
}
