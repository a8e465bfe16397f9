//! Finitely generated abelian groups in cyclic-decomposition form and the
//! kernel/cokernel/subgroup/homology constructions on maps between them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intmat::{column_echelon, smith_normal_form, ColumnEchelon, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("map is not well defined on the presented group: {0}")]
    NotWellDefined(String),
    #[error("cannot parse abelian group `{0}`")]
    Parse(String),
}

/// Invariant-factor normal form: `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k`, `dᵢ ≥ 2`, `dᵢ | dᵢ₊₁`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbGroup {
    pub fn zero() -> Self {
        AbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Self {
        FgGroup::new(vec![BigInt::from(order)]).invariants()
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        let mut orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        orders.extend(std::iter::repeat_n(BigInt::zero(), self.rank + other.rank));
        FgGroup::new(orders).invariants()
    }

    fn fmt_with_degree(&self, f: &mut fmt::Formatter<'_>, deg: Option<u8>) -> fmt::Result {
        let suffix = deg.map(|d| format!("[{d}]")).unwrap_or_default();
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            Ok(())
        };
        if self.rank > 0 {
            sep(f)?;
            if self.rank == 1 {
                write!(f, "Z{suffix}")?;
            } else {
                write!(f, "Z^{}{suffix}", self.rank)?;
            }
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            sep(f)?;
            if run == 1 {
                write!(f, "Z/{d}{suffix}")?;
            } else {
                write!(f, "(Z/{d})^{run}{suffix}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        self.fmt_with_degree(f, None)
    }
}

/// Parses a sum of summands `Z`, `Z^n`, `Z/d`, `(Z/d)^n`, `0`, each optionally
/// followed by a degree tag `[0]`/`[1]`. Returns the summands per degree.
fn parse_summands(s: &str) -> Result<[Vec<BigInt>; 2], GroupError> {
    let err = || GroupError::Parse(s.to_string());
    let mut out: [Vec<BigInt>; 2] = [Vec::new(), Vec::new()];
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    for term in compact.split('+') {
        let (body, deg) = match term.strip_suffix(']') {
            Some(rest) => {
                let open = rest.rfind('[').ok_or_else(err)?;
                let d: usize = rest[open + 1..].parse().map_err(|_| err())?;
                (&rest[..open], d % 2)
            }
            None => (term, 0),
        };
        if body == "0" {
            continue;
        }
        let (base, mult) = match body.rfind(")^") {
            Some(p) if body.starts_with('(') => (&body[1..p], body[p + 2..].parse::<usize>().map_err(|_| err())?),
            _ => match body.strip_prefix("Z^") {
                Some(n) => ("Z", n.parse::<usize>().map_err(|_| err())?),
                None => (body, 1),
            },
        };
        let order = if base == "Z" {
            BigInt::zero()
        } else {
            let d = base.strip_prefix("Z/").ok_or_else(err)?;
            let d = BigInt::from_str(d).map_err(|_| err())?;
            if d < BigInt::one() {
                return Err(err());
            }
            d
        };
        if order.is_one() {
            continue;
        }
        out[deg].extend(std::iter::repeat_n(order, mult));
    }
    Ok(out)
}

impl FromStr for AbGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let [even, odd] = parse_summands(s)?;
        if !odd.is_empty() {
            return Err(GroupError::Parse(s.to_string()));
        }
        Ok(FgGroup::new(even).invariants())
    }
}

/// A Z/2-graded group; displayed as e.g. `Z^2[1] + Z/3[0]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedAbelianGroup {
    pub even: AbGroup,
    pub odd: AbGroup,
}

impl GradedAbelianGroup {
    pub fn new(even: AbGroup, odd: AbGroup) -> Self {
        GradedAbelianGroup { even, odd }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn part(&self, parity: usize) -> &AbGroup {
        if parity.is_multiple_of(2) {
            &self.even
        } else {
            &self.odd
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        GradedAbelianGroup { even: self.even.direct_sum(&other.even), odd: self.odd.direct_sum(&other.odd) }
    }

    /// Swaps even and odd parts.
    pub fn shift(&self) -> Self {
        GradedAbelianGroup { even: self.odd.clone(), odd: self.even.clone() }
    }

    pub fn total_rank(&self) -> usize {
        self.even.rank + self.odd.rank
    }
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.odd.is_zero() {
            self.odd.fmt_with_degree(f, Some(1))?;
            if !self.even.is_zero() {
                write!(f, " + ")?;
            }
        }
        if !self.even.is_zero() {
            self.even.fmt_with_degree(f, Some(0))?;
        }
        Ok(())
    }
}

impl FromStr for GradedAbelianGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let [even, odd] = parse_summands(s)?;
        Ok(GradedAbelianGroup { even: FgGroup::new(even).invariants(), odd: FgGroup::new(odd).invariants() })
    }
}

/// `⊕ Z/oᵢ` with `oᵢ = 0` meaning a free summand; each coordinate is one
/// generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FgGroup {
    orders: Vec<BigInt>,
}

impl FgGroup {
    pub fn new(orders: Vec<BigInt>) -> Self {
        assert!(orders.iter().all(|o| o.is_zero() || *o > BigInt::one()), "cyclic orders must be 0 or at least 2");
        FgGroup { orders }
    }

    pub fn free(rank: usize) -> Self {
        FgGroup { orders: vec![BigInt::zero(); rank] }
    }

    pub fn zero() -> Self {
        FgGroup::default()
    }

    /// Free part first, then the torsion factors in order.
    pub fn from_ab(g: &AbGroup) -> Self {
        let mut orders = vec![BigInt::zero(); g.rank];
        orders.extend(g.torsion.iter().cloned());
        FgGroup { orders }
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.orders.iter().all(Zero::is_zero)
    }

    pub fn direct_sum(&self, other: &FgGroup) -> FgGroup {
        let mut orders = self.orders.clone();
        orders.extend(other.orders.iter().cloned());
        FgGroup { orders }
    }

    /// Relation matrix: one column per torsion generator.
    pub fn relations(&self) -> IntMatrix {
        let idx: Vec<usize> = (0..self.ngens()).filter(|&i| !self.orders[i].is_zero()).collect();
        let mut m = IntMatrix::zeros(self.ngens(), idx.len());
        for (k, &i) in idx.iter().enumerate() {
            m.set(i, k, self.orders[i].clone());
        }
        m
    }

    pub fn invariants(&self) -> AbGroup {
        let tors: Vec<BigInt> = self.orders.iter().filter(|o| !o.is_zero()).cloned().collect();
        let rank = self.orders.len() - tors.len();
        let snf = smith_normal_form(&IntMatrix::diagonal(&tors));
        let torsion = snf.factors().into_iter().filter(|d| !d.is_one()).collect();
        AbGroup { rank, torsion }
    }

    pub fn reduce(&self, v: &mut [BigInt]) {
        for (x, o) in v.iter_mut().zip(&self.orders) {
            if !o.is_zero() {
                *x = x.mod_floor(o);
            }
        }
    }

    pub fn reduced(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        v.iter().zip(&self.orders).all(|(x, o)| if o.is_zero() { x.is_zero() } else { x.is_multiple_of(o) })
    }

    /// Reduces the rows of a matrix with values in this group.
    pub fn reduce_rows(&self, m: &IntMatrix) -> IntMatrix {
        assert_eq!(m.rows(), self.ngens());
        let mut out = m.clone();
        for i in 0..m.rows() {
            let o = &self.orders[i];
            if o.is_zero() {
                continue;
            }
            for j in 0..m.cols() {
                let v = out.get(i, j).mod_floor(o);
                out.set(i, j, v);
            }
        }
        out
    }

    /// Whether `A` defines a homomorphism `self → target`.
    pub fn check_hom(&self, target: &FgGroup, a: &IntMatrix) -> Result<(), GroupError> {
        if a.rows() != target.ngens() || a.cols() != self.ngens() {
            return Err(GroupError::NotWellDefined(format!(
                "shape {}x{} does not match {}x{}",
                a.rows(),
                a.cols(),
                target.ngens(),
                self.ngens()
            )));
        }
        for j in 0..self.ngens() {
            let o = &self.orders[j];
            let col: Vec<BigInt> = a.column(j).iter().map(|x| x * o).collect();
            if !target.is_zero_element(&col) {
                return Err(GroupError::NotWellDefined(format!("generator {j} of order {o} is not respected")));
            }
        }
        Ok(())
    }
}

/// Result of rewriting `Z^n / im R` in cyclic-decomposition form.
#[derive(Clone, Debug)]
pub struct Diagonalized {
    pub group: FgGroup,
    /// old coordinates → new coordinates
    pub to_new: IntMatrix,
    /// new coordinates → old representatives
    pub from_new: IntMatrix,
}

pub fn diagonalize(n: usize, rels: &IntMatrix) -> Diagonalized {
    assert_eq!(rels.rows(), n);
    let snf = smith_normal_form(rels);
    let mut keep = Vec::new();
    let mut orders = Vec::new();
    for i in 0..n {
        let d = if i < snf.rank { snf.s.get(i, i).clone() } else { BigInt::zero() };
        if !d.is_one() {
            keep.push(i);
            orders.push(d);
        }
    }
    let group = FgGroup { orders };
    let to_new = group.reduce_rows(&snf.u.select_rows(&keep));
    let from_new = snf.u_inv.select_cols(&keep);
    Diagonalized { group, to_new, from_new }
}

/// A subgroup of `ambient` in its own cyclic decomposition, with inclusion.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FgGroup,
    /// ambient gens × subgroup gens
    pub incl: IntMatrix,
    ambient: FgGroup,
    solver: ColumnEchelon,
}

impl Subgroup {
    /// Subgroup generated by the columns of `gens`.
    pub fn generated(ambient: &FgGroup, gens: &IntMatrix) -> Subgroup {
        assert_eq!(gens.rows(), ambient.ngens());
        let d = ambient.relations();
        // shrink the generating set to a lattice basis of span(gens) + im D
        let lattice = column_echelon(&gens.hcat(&d)).image();
        let t = lattice.cols();
        let k = column_echelon(&lattice.hcat(&d)).kernel();
        let rels = k.select_rows(&(0..t).collect::<Vec<_>>());
        let diag = diagonalize(t, &rels);
        let incl = ambient.reduce_rows(&lattice.mul(&diag.from_new));
        let solver = column_echelon(&incl.hcat(&d));
        Subgroup { group: diag.group, incl, ambient: ambient.clone(), solver }
    }

    pub fn ambient(&self) -> &FgGroup {
        &self.ambient
    }

    /// Coordinates of `v` in the subgroup, or `None` if `v` is not a member.
    pub fn lift(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let sol = self.solver.solve(v)?;
        let mut c = sol[..self.group.ngens()].to_vec();
        self.group.reduce(&mut c);
        Some(c)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solver.solve(v).is_some()
    }

    /// Lifts every column of `m`.
    pub fn lift_matrix(&self, m: &IntMatrix) -> Option<IntMatrix> {
        let cols: Option<Vec<Vec<BigInt>>> = (0..m.cols()).map(|j| self.lift(&m.column(j))).collect();
        Some(IntMatrix::from_columns(self.group.ngens(), &cols?))
    }

    pub fn contains_all(&self, m: &IntMatrix) -> bool {
        (0..m.cols()).all(|j| self.contains(&m.column(j)))
    }

    pub fn is_everything(&self) -> bool {
        let id = IntMatrix::identity(self.ambient.ngens());
        self.contains_all(&id)
    }

    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.contains_all(&other.incl) && other.contains_all(&self.incl)
    }
}

/// Kernel of `a: source → target`.
pub fn kernel(source: &FgGroup, target: &FgGroup, a: &IntMatrix) -> Subgroup {
    let n = source.ngens();
    let k = column_echelon(&a.hcat(&target.relations())).kernel();
    let gens = k.select_rows(&(0..n).collect::<Vec<_>>());
    Subgroup::generated(source, &gens)
}

/// Image of `a: source → target` as a subgroup of the target.
pub fn image(target: &FgGroup, a: &IntMatrix) -> Subgroup {
    Subgroup::generated(target, a)
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FgGroup,
    /// ambient → quotient
    pub proj: IntMatrix,
    /// quotient → ambient representatives
    pub section: IntMatrix,
}

/// `target / (image of a)`.
pub fn cokernel(target: &FgGroup, a: &IntMatrix) -> Quotient {
    let rels = a.hcat(&target.relations());
    let d = diagonalize(target.ngens(), &rels);
    Quotient { group: d.group, proj: d.to_new, section: d.from_new }
}

/// `ambient / sub`.
pub fn quotient(sub: &Subgroup) -> Quotient {
    cokernel(&sub.ambient, &sub.incl)
}

#[derive(Clone, Debug)]
pub struct Homology {
    pub group: FgGroup,
    /// homology coordinates → cycle representatives in the middle group
    pub reps: IntMatrix,
}

/// `ker(d_out) / im(d_in)` at the middle group `mid`.
pub fn homology(mid: &FgGroup, d_in: &IntMatrix, d_out: &IntMatrix, next: &FgGroup) -> Result<Homology, GroupError> {
    let z = kernel(mid, next, d_out);
    let lifted = z.lift_matrix(d_in).ok_or_else(|| GroupError::NotWellDefined("boundaries are not cycles".into()))?;
    let rels = lifted.hcat(&z.group.relations());
    let d = diagonalize(z.group.ngens(), &rels);
    let reps = mid.reduce_rows(&z.incl.mul(&d.from_new));
    Ok(Homology { group: d.group, reps })
}

pub fn is_injective(source: &FgGroup, target: &FgGroup, a: &IntMatrix) -> bool {
    kernel(source, target, a).group.is_trivial()
}

pub fn is_surjective(target: &FgGroup, a: &IntMatrix) -> bool {
    cokernel(target, a).group.is_trivial()
}

/// Whether the columns of `m`, read in `g`, are all zero.
pub fn is_zero_map(g: &FgGroup, m: &IntMatrix) -> bool {
    (0..m.cols()).all(|j| g.is_zero_element(&m.column(j)))
}

/// `|det| = 1` test for square integer matrices.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.rows() == m.cols() && m.det().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::big;

    #[test]
    fn coker_multiplication() {
        let q = cokernel(&FgGroup::free(1), &IntMatrix::from_rows(&[vec![5]]));
        assert_eq!(q.group.invariants(), AbGroup::cyclic(5));
    }

    #[test]
    fn kernel_of_coordinate_projections() {
        let a = IntMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]);
        let k = kernel(&FgGroup::free(3), &FgGroup::free(2), &a);
        assert_eq!(k.group.invariants(), AbGroup::free(1));
    }

    #[test]
    fn quotient_by_diagonal() {
        let q = cokernel(&FgGroup::free(2), &IntMatrix::from_rows(&[vec![1], vec![1]]));
        assert_eq!(q.group.invariants(), AbGroup::free(1));
        let q = cokernel(&FgGroup::free(3), &IntMatrix::from_rows(&[vec![1], vec![1], vec![1]]));
        assert_eq!(q.group.invariants(), AbGroup::free(2));
    }

    #[test]
    fn torsion_kernel() {
        // Z/4 --x2--> Z/4 has kernel Z/2
        let g = FgGroup::new(vec![big(4)]);
        let k = kernel(&g, &g, &IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(k.group.invariants(), AbGroup::cyclic(2));
        // Z --> Z/6 reduction has kernel 6Z
        let k = kernel(&FgGroup::free(1), &FgGroup::new(vec![big(6)]), &IntMatrix::from_rows(&[vec![1]]));
        assert_eq!(k.group.invariants(), AbGroup::free(1));
        assert_eq!(k.incl.get(0, 0).abs(), big(6));
    }

    #[test]
    fn homology_of_multiplication_complex() {
        // Z --2--> Z --0--> Z : homology Z/2 in the middle
        let z = FgGroup::free(1);
        let h = homology(&z, &IntMatrix::from_rows(&[vec![2]]), &IntMatrix::zeros(1, 1), &z).unwrap();
        assert_eq!(h.group.invariants(), AbGroup::cyclic(2));
    }

    #[test]
    fn invariant_factors_merge() {
        let g = FgGroup::new(vec![big(2), big(3), BigInt::zero()]);
        assert_eq!(g.invariants(), AbGroup { rank: 1, torsion: vec![big(6)] });
    }

    #[test]
    fn display_and_parse() {
        let g = GradedAbelianGroup::new(AbGroup::cyclic(3), AbGroup::free(2));
        assert_eq!(g.to_string(), "Z^2[1] + Z/3[0]");
        assert_eq!(g.to_string().parse::<GradedAbelianGroup>().unwrap(), g);
        assert_eq!("0".parse::<GradedAbelianGroup>().unwrap(), GradedAbelianGroup::zero());
        assert!("Z[1]^2".parse::<GradedAbelianGroup>().is_err());
        let t = GradedAbelianGroup::new(AbGroup { rank: 0, torsion: vec![big(2), big(2)] }, AbGroup::zero());
        assert_eq!(t.to_string(), "(Z/2)^2[0]");
        assert_eq!(t.to_string().parse::<GradedAbelianGroup>().unwrap(), t);
    }

    #[test]
    fn ill_defined_map_rejected() {
        let z2 = FgGroup::new(vec![big(2)]);
        let z = FgGroup::free(1);
        assert!(z2.check_hom(&z, &IntMatrix::from_rows(&[vec![1]])).is_err());
        assert!(z.check_hom(&z2, &IntMatrix::from_rows(&[vec![1]])).is_ok());
    }
}
