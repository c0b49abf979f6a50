//! Exact integer and rational linear algebra.
//!
//! Matrices are small (dimension at most a few dozen) so everything is dense
//! and arbitrary precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense integer matrix in row-major order.
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
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed so that an empty row list
    /// still has a well-defined shape.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Matrix times rational column vector.
    pub fn mul_rat(&self, v: &RatVector) -> RatVector {
        assert_eq!(v.len(), self.cols);
        RatVector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&v.0)
                        .fold(BigRational::zero(), |acc, (a, b)| acc + b * a)
                })
                .collect(),
        )
    }

    /// Rows `r` stacked in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(self.cols, &rows)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut m = Self::zeros(self.rows, cols);
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

    /// Columns `from..to`.
    pub fn col_range(&self, from: usize, to: usize) -> Self {
        let mut m = Self::zeros(self.rows, to - from);
        for i in 0..self.rows {
            for j in from..to {
                m.set(i, j - from, self.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// col[dst] -= k * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
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
        for k in 0..n - 1 {
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

    pub fn rank(&self) -> usize {
        let (h, _) = hermite_normal_form(self);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }

    /// Inverse over the rationals, as a list of rows.
    pub fn inverse_rational(&self) -> Option<Vec<RatVector>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut r: Vec<BigRational> =
                    self.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
                r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero())?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..2 * n {
                        let v = &a[c][j] * &f;
                        a[i][j] -= v;
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| RatVector(r[n..].to_vec())).collect())
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64().expect("entry fits i64")).collect())
            .collect()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut m = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * rhs.get(k, j);
                    m.data[i * rhs.cols + j] += v;
                }
            }
        }
        m
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
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Vector of reduced rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(pub Vec<BigRational>);

impl RatVector {
    pub fn zeros(n: usize) -> Self {
        RatVector(vec![BigRational::zero(); n])
    }

    pub fn from_ints(v: &[BigInt]) -> Self {
        RatVector(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RatVector(v.iter().map(|&x| BigRational::from_integer(int(x))).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigRational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        RatVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Bilinear form xᵀ G y for a symmetric integer matrix G.
    pub fn form(&self, gram: &IntMatrix, other: &RatVector) -> BigRational {
        let gy = gram.mul_rat(other);
        self.0.iter().zip(&gy.0).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Least common multiple of the denominators.
    pub fn denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

impl Add for &RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.len(), rhs.len());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.len(), rhs.len());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row-style Hermite normal form: returns (H, U) with U unimodular and
/// U·M = H. Nonzero rows come first, pivots are positive and entries above a
/// pivot lie in [0, pivot).
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let mut found = false;
        loop {
            let piv = (r..m.rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(p) = piv else { break };
            found = true;
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..m.rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the row
/// lattice.
pub fn row_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(m);
    let keep: Vec<usize> =
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).collect();
    h.select_rows(&keep)
}

/// Smith normal form: returns (D, U, V) with U·M·V = D diagonal,
/// nonnegative, and d₁ | d₂ | ….
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    'outer: for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m.rows {
                for j in t..m.cols {
                    let x = d.get(i, j);
                    if !x.is_zero()
                        && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            d.swap_rows(pi, t);
            u.swap_rows(pi, t);
            d.swap_cols(pj, t);
            v.swap_cols(pj, t);
            let mut clean = true;
            for i in t + 1..m.rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..m.cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = d.get(t, t).clone();
            let bad = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    d.sub_row(t, i, &minus_one);
                    u.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

/// ℤ-basis of the left integer kernel {x : x·M = 0}, HNF-reduced.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let aug = m.hstack(&IntMatrix::identity(m.rows));
    let (h, _) = hermite_normal_form(&aug);
    let keep: Vec<usize> =
        (0..h.rows).filter(|&i| (0..m.cols).all(|j| h.get(i, j).is_zero())).collect();
    let k = h.select_rows(&keep).col_range(m.cols, m.cols + m.rows);
    row_basis(&k)
}

/// Some x with A·x = b over ℚ, or `None` when inconsistent.
pub fn solve_rational(a: &IntMatrix, b: &RatVector) -> Option<RatVector> {
    assert_eq!(a.rows, b.len(), "right-hand side length must equal row count");
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<BigRational> =
                a.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.push(b.0[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = RatVector::zeros(cols);
    for (i, &c) in pivots.iter().enumerate() {
        x.0[c] = m[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c).prop_map(move |v| {
                IntMatrix::from_vec(r, c, v.into_iter().map(int).collect())
            })
        })
    }

    fn is_hnf(h: &IntMatrix) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            match h.row(i).iter().position(|x| !x.is_zero()) {
                None => seen_zero = true,
                Some(p) => {
                    if seen_zero || last_pivot.is_some_and(|l| p <= l) {
                        return false;
                    }
                    let piv = h.get(i, p);
                    if !piv.is_positive() {
                        return false;
                    }
                    if (0..i).any(|k| h.get(k, p).is_negative() || h.get(k, p) >= piv) {
                        return false;
                    }
                    last_pivot = Some(p);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(2));
        assert!(h.is_identity() && u.is_identity());
        let m = IntMatrix::from_i64(&[vec![2, 4], vec![1, 3]]);
        let (h, u) = hermite_normal_form(&m);
        // [[1,3],[0,2]] with the entry above the pivot reduced modulo 2
        assert_eq!(h, IntMatrix::from_i64(&[vec![1, 1], vec![0, 2]]));
        assert_eq!(&u * &m, h);
        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert!(h.is_zero() && u.is_identity());
    }

    #[test]
    fn snf_examples() {
        let (d, _, _) = smith_normal_form(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(d, IntMatrix::from_i64(&[vec![1, 0], vec![0, 6]]));
        let (d, _, _) = smith_normal_form(&IntMatrix::identity(3));
        assert!(d.is_identity());
        let (d, _, _) = smith_normal_form(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 2]]));
        assert_eq!(d, IntMatrix::from_i64(&[vec![2, 0], vec![0, 2]]));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&IntMatrix::from_i64(&[vec![1], vec![1]]));
        assert_eq!(k, IntMatrix::from_i64(&[vec![1, -1]]));
        let k = kernel_basis(&IntMatrix::from_i64(&[vec![2, 1], vec![1, 1]]));
        assert_eq!(k.rows(), 0);
    }

    #[test]
    fn solve_examples() {
        let b = RatVector(vec![rat(3, 7), rat(-2, 1)]);
        assert_eq!(solve_rational(&IntMatrix::identity(2), &b), Some(b.clone()));
        let x = solve_rational(&IntMatrix::from_i64(&[vec![2]]), &RatVector::from_i64(&[1]));
        assert_eq!(x, Some(RatVector(vec![rat(1, 2)])));
        let inconsistent = IntMatrix::from_i64(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(solve_rational(&inconsistent, &RatVector::from_i64(&[1, 3])), None);
    }

    #[test]
    fn det_and_inverse() {
        let m = IntMatrix::from_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.det(), int(4));
        let inv = m.inverse_rational().unwrap();
        assert_eq!(inv[0], RatVector(vec![rat(3, 4), rat(1, 2), rat(1, 4)]));
    }

    proptest! {
        #[test]
        fn hnf_is_unimodular_transform(m in small_matrix(5)) {
            let (h, u) = hermite_normal_form(&m);
            prop_assert_eq!(&u * &m, h.clone());
            prop_assert_eq!(u.det().abs(), BigInt::one());
            prop_assert!(is_hnf(&h));
        }

        #[test]
        fn snf_divisibility_chain(m in small_matrix(5)) {
            let (d, u, v) = smith_normal_form(&m);
            prop_assert_eq!(&(&u * &m) * &v, d.clone());
            prop_assert_eq!(u.det().abs(), BigInt::one());
            prop_assert_eq!(v.det().abs(), BigInt::one());
            let n = d.rows().min(d.cols());
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if i != j { prop_assert!(d.get(i, j).is_zero()); }
                }
            }
            for i in 0..n {
                prop_assert!(!d.get(i, i).is_negative());
                if i + 1 < n && !d.get(i, i).is_zero() {
                    prop_assert!(d.get(i + 1, i + 1).is_multiple_of(d.get(i, i)));
                }
                if i + 1 < n && d.get(i, i).is_zero() {
                    prop_assert!(d.get(i + 1, i + 1).is_zero());
                }
            }
        }

        #[test]
        fn kernel_rows_annihilate(m in small_matrix(5)) {
            let k = kernel_basis(&m);
            for i in 0..k.rows() {
                let x = k.row(i);
                for j in 0..m.cols() {
                    let s: BigInt = (0..m.rows()).map(|r| &x[r] * m.get(r, j)).sum();
                    prop_assert!(s.is_zero());
                }
            }
            prop_assert_eq!(k.rank(), k.rows());
            prop_assert_eq!(k.rows(), m.rows() - m.rank());
        }

        #[test]
        fn solve_reproduces_rhs(m in small_matrix(5), seed in proptest::collection::vec(-5i64..=5, 5)) {
            let x0 = RatVector::from_i64(&seed[..m.cols()]);
            let b = m.mul_rat(&x0);
            let x = solve_rational(&m, &b).expect("consistent by construction");
            prop_assert_eq!(m.mul_rat(&x), b);
        }
    }
}
