//! Dense matrices over arbitrary-precision integers, Smith normal form and
//! column echelon reduction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone().into());
            }
        }
        m
    }

    /// Builds a `rows × cols.len()` matrix from column vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, d) in entries.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        let data = self.data.iter().map(|a| a * k).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn paste(&mut self, r: usize, c: usize, block: &IntMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (k, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(k, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.set(i, k, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row `dst` += k · row `src`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            if !v.is_zero() {
                *self.get_mut(dst, j) += v;
            }
        }
    }

    /// column `dst` += k · column `src`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            if !v.is_zero() {
                *self.get_mut(i, dst) += v;
            }
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U·A·V = S` with `U`, `V` unimodular and `S` diagonal, `d₁ | d₂ | …`,
/// zeros trailing. The inverses of `U` and `V` are tracked alongside.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// Nonzero diagonal entries.
    pub fn factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }
}

struct SnfState {
    w: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.w.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.w.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.w.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, r: usize) {
        self.w.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut st = SnfState {
        w: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut rank = 0;
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = st.w.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < st.w.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            let p = st.w.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = st.w.get(i, t).div_floor(&p);
                st.add_row(i, t, &-q);
                if !st.w.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = st.w.get(t, j).div_floor(&p);
                st.add_col(j, t, &-q);
                if !st.w.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !st.w.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => st.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if st.w.get(t, t).is_zero() {
            break;
        }
        if st.w.get(t, t).is_negative() {
            st.negate_row(t);
        }
        rank = t + 1;
    }
    SnfResult { s: st.w, u: st.u, u_inv: st.u_inv, v: st.v, v_inv: st.v_inv, rank }
}

/// Column echelon form `W = A·V` with `V` unimodular. Column `k < pivots.len()`
/// has its first nonzero entry (positive) at row `pivots[k]`, rows strictly
/// increasing; columns past the pivots are zero.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    pub w: IntMatrix,
    pub v: IntMatrix,
    pub pivots: Vec<usize>,
}

pub fn column_echelon(a: &IntMatrix) -> ColumnEchelon {
    let (m, n) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut v = IntMatrix::identity(n);
    let mut pivots = Vec::new();
    let mut p = 0;
    for r in 0..m {
        if p == n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in p..n {
                let x = w.get(r, j);
                if !x.is_zero() && best.is_none_or(|b| x.abs() < w.get(r, b).abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            w.swap_cols(p, b);
            v.swap_cols(p, b);
            let piv = w.get(r, p).clone();
            let mut done = true;
            for j in p + 1..n {
                if w.get(r, j).is_zero() {
                    continue;
                }
                let q = -w.get(r, j).div_floor(&piv);
                w.add_col_multiple(j, p, &q);
                v.add_col_multiple(j, p, &q);
                if !w.get(r, j).is_zero() {
                    done = false;
                }
            }
            if done {
                if w.get(r, p).is_negative() {
                    w.negate_col(p);
                    v.negate_col(p);
                }
                pivots.push(r);
                p += 1;
                break;
            }
        }
    }
    ColumnEchelon { w, v, pivots }
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{x : A x = 0}` as columns.
    pub fn kernel(&self) -> IntMatrix {
        let r = self.rank();
        let idx: Vec<usize> = (r..self.v.cols()).collect();
        self.v.select_cols(&idx)
    }

    /// Basis of the lattice spanned by the columns of `A`.
    pub fn image(&self) -> IntMatrix {
        let idx: Vec<usize> = (0..self.rank()).collect();
        self.w.select_cols(&idx)
    }

    /// Some integer `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.w.rows());
        let r = self.rank();
        let mut y = vec![BigInt::zero(); self.w.cols()];
        let mut residual = b.to_vec();
        for k in 0..r {
            let row = self.pivots[k];
            let (q, rem) = residual[row].div_rem(self.w.get(row, k));
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for i in row..self.w.rows() {
                    let c = self.w.get(i, k);
                    if !c.is_zero() {
                        residual[i] -= c * &q;
                    }
                }
            }
            y[k] = q;
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(self.v.mul_vec(&y))
    }
}

pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).kernel()
}

pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).image()
}

pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    column_echelon(a).solve(b)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn snf_lcm_normalization() {
        let r = smith_normal_form(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(r.factors(), vec![big(1), big(6)]);
    }

    #[test]
    fn snf_single_relation() {
        let r = smith_normal_form(&m(&[vec![1, 1, 1]]));
        assert_eq!(r.factors(), vec![big(1)]);
    }

    #[test]
    fn snf_zero_matrix() {
        let r = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert!(r.factors().is_empty());
    }

    #[test]
    fn kernel_of_projection() {
        let k = kernel_basis(&m(&[vec![1, 0, 1], vec![0, 1, 1]]));
        assert_eq!(k.cols(), 1);
        assert!(m(&[vec![1, 0, 1], vec![0, 1, 1]]).mul(&k).is_zero());
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[vec![2, 1], vec![7, 4]]).det(), big(1));
        assert_eq!(m(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).det(), big(-2));
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..7, r * c).prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(c).map(|s| s.to_vec()).collect();
                IntMatrix::from_rows(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn snf_round_trip(a in small_matrix()) {
            let r = smith_normal_form(&a);
            prop_assert_eq!(r.u.mul(&a).mul(&r.v), r.s.clone());
            prop_assert_eq!(r.u.mul(&r.u_inv), IntMatrix::identity(a.rows()));
            prop_assert_eq!(r.v.mul(&r.v_inv), IntMatrix::identity(a.cols()));
            prop_assert!(r.u.det().abs().is_one());
            prop_assert!(r.v.det().abs().is_one());
            let f = r.factors();
            for w in f.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    if i != j || i >= r.rank {
                        prop_assert!(r.s.get(i, j).is_zero());
                    }
                }
            }
        }

        #[test]
        fn echelon_solve_and_kernel(a in small_matrix(), x in proptest::collection::vec(-5i64..6, 4)) {
            let e = column_echelon(&a);
            prop_assert!(a.mul(&e.kernel()).is_zero());
            let x: Vec<BigInt> = x.into_iter().take(a.cols()).map(BigInt::from).collect();
            if x.len() == a.cols() {
                let b = a.mul_vec(&x);
                let y = e.solve(&b).expect("b lies in the image");
                prop_assert_eq!(a.mul_vec(&y), b);
            }
            let rank_snf = smith_normal_form(&a).rank;
            prop_assert_eq!(e.rank(), rank_snf);
        }
    }
}
