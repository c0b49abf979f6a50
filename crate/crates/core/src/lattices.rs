//! Sublattices of L, discriminant forms and root systems.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, row_basis, smith_normal_form, IntMatrix, RatVector};
use crate::lorentz::{self, LorentzVector};

/// A sublattice of L. `basis` holds ℤ-basis rows in L-coordinates (HNF).
#[derive(Clone, Debug)]
pub struct EmbeddedLattice {
    pub generators: Vec<LorentzVector>,
    pub basis: IntMatrix,
    pub gram: IntMatrix,
}

fn gram_of(basis: &IntMatrix) -> IntMatrix {
    &(basis * lorentz::gram()) * &basis.transpose()
}

impl EmbeddedLattice {
    fn from_basis(generators: Vec<LorentzVector>, basis: IntMatrix) -> Self {
        let gram = gram_of(&basis);
        EmbeddedLattice { generators, basis, gram }
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn basis_vectors(&self) -> Vec<LorentzVector> {
        (0..self.rank()).map(|i| LorentzVector::from_coordinates(self.basis.row(i))).collect()
    }

    /// Whether `v` lies in this lattice.
    pub fn contains(&self, v: &LorentzVector) -> bool {
        let Ok(c) = v.coordinates() else { return false };
        let mut rows = self.basis.row_vecs();
        rows.push(c);
        row_basis(&IntMatrix::from_rows(26, &rows)) == self.basis
    }
}

pub fn span(gens: &[LorentzVector]) -> Result<EmbeddedLattice> {
    let rows = gens.iter().map(LorentzVector::coordinates).collect::<Result<Vec<_>>>()?;
    let basis = row_basis(&IntMatrix::from_rows(26, &rows));
    Ok(EmbeddedLattice::from_basis(gens.to_vec(), basis))
}

/// {v ∈ L : v ⟂ M}.
pub fn orthogonal_complement(m: &EmbeddedLattice) -> EmbeddedLattice {
    let pairing = lorentz::gram() * &m.basis.transpose();
    let basis = kernel_basis(&pairing);
    let gens = (0..basis.rows()).map(|i| LorentzVector::from_coordinates(basis.row(i))).collect();
    EmbeddedLattice::from_basis(gens, basis)
}

/// (M ⊗ ℚ) ∩ L.
pub fn saturation(m: &EmbeddedLattice) -> EmbeddedLattice {
    let right_kernel = kernel_basis(&m.basis.transpose());
    let basis = kernel_basis(&right_kernel.transpose());
    let gens = (0..basis.rows()).map(|i| LorentzVector::from_coordinates(basis.row(i))).collect();
    EmbeddedLattice::from_basis(gens, basis)
}

pub fn is_primitive(m: &EmbeddedLattice) -> bool {
    saturation(m).basis == m.basis
}

fn mod_rat(x: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(int(m));
    let q = (x / &m).floor();
    x - q * m
}

/// A finite abelian group ⊕ ℤ/dᵢ with a quadratic form q: → ℚ/2ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    pub orders: Vec<u64>,
    /// q on each generator, reduced into [0,2).
    pub values: Vec<BigRational>,
    /// b on pairs of generators, reduced into [0,1).
    pub pairings: Vec<Vec<BigRational>>,
}

impl FiniteQuadraticForm {
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn negate(&self) -> Self {
        FiniteQuadraticForm {
            orders: self.orders.clone(),
            values: self.values.iter().map(|v| mod_rat(&-v, 2)).collect(),
            pairings: self
                .pairings
                .iter()
                .map(|r| r.iter().map(|v| mod_rat(&-v, 1)).collect())
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.orders.len();
        let k = other.orders.len();
        let mut pairings = vec![vec![BigRational::zero(); n + k]; n + k];
        for i in 0..n {
            for j in 0..n {
                pairings[i][j] = self.pairings[i][j].clone();
            }
        }
        for i in 0..k {
            for j in 0..k {
                pairings[n + i][n + j] = other.pairings[i][j].clone();
            }
        }
        FiniteQuadraticForm {
            orders: self.orders.iter().chain(&other.orders).copied().collect(),
            values: self.values.iter().chain(&other.values).cloned().collect(),
            pairings,
        }
    }

    /// All elements as coefficient vectors, in mixed-radix order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |c| {
                        let mut e2 = e.clone();
                        e2.push(c);
                        e2
                    })
                })
                .collect();
        }
        out
    }

    pub fn q(&self, e: &[u64]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..e.len() {
            let ci = BigRational::from_integer(BigInt::from(e[i]));
            acc += &ci * &ci * &self.values[i];
            for j in i + 1..e.len() {
                let cj = BigRational::from_integer(BigInt::from(e[j]));
                acc += BigRational::from_integer(int(2)) * &ci * cj * &self.pairings[i][j];
            }
        }
        mod_rat(&acc, 2)
    }

    pub fn b(&self, e: &[u64], f: &[u64]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..e.len() {
            for j in 0..f.len() {
                acc += BigRational::from_integer(BigInt::from(e[i] * f[j])) * &self.pairings[i][j];
            }
        }
        mod_rat(&acc, 1)
    }

    fn add(&self, e: &[u64], f: &[u64]) -> Vec<u64> {
        e.iter().zip(f).zip(&self.orders).map(|((a, b), d)| (a + b) % d).collect()
    }

    fn mul(&self, k: u64, e: &[u64]) -> Vec<u64> {
        e.iter().zip(&self.orders).map(|(a, d)| (k * a) % d).collect()
    }

    /// q(x+y) − q(x) − q(y) ≡ 2b(x,y) (mod 2) on all pairs.
    pub fn is_consistent(&self) -> bool {
        let els = self.elements();
        els.iter().all(|x| {
            els.iter().all(|y| {
                let lhs = self.q(&self.add(x, y)) - self.q(x) - self.q(y);
                let rhs = BigRational::from_integer(int(2)) * self.b(x, y);
                mod_rat(&(lhs - rhs), 2).is_zero()
            })
        })
    }
}

impl fmt::Display for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.orders.iter().zip(&self.values).map(|(d, q)| format!("Z/{d}:{q}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Decides isomorphism by exhaustive search over generator images.
pub fn fqf_isomorphic(q1: &FiniteQuadraticForm, q2: &FiniteQuadraticForm) -> bool {
    if q1.order() != q2.order() {
        return false;
    }
    let targets = q2.elements();
    let target_q: Vec<BigRational> = targets.iter().map(|e| q2.q(e)).collect();
    let mut images: Vec<usize> = Vec::new();
    search(q1, q2, &targets, &target_q, &mut images)
}

fn search(
    q1: &FiniteQuadraticForm,
    q2: &FiniteQuadraticForm,
    targets: &[Vec<u64>],
    target_q: &[BigRational],
    images: &mut Vec<usize>,
) -> bool {
    let i = images.len();
    if i == q1.orders.len() {
        return is_bijective(q1, q2, targets, images);
    }
    for (t, e) in targets.iter().enumerate() {
        if q2.mul(q1.orders[i], e).iter().any(|&c| c != 0) || target_q[t] != q1.values[i] {
            continue;
        }
        if (0..i).any(|j| q2.b(e, &targets[images[j]]) != q1.pairings[i][j]) {
            continue;
        }
        images.push(t);
        if search(q1, q2, targets, target_q, images) {
            return true;
        }
        images.pop();
    }
    false
}

fn is_bijective(
    q1: &FiniteQuadraticForm,
    q2: &FiniteQuadraticForm,
    targets: &[Vec<u64>],
    images: &[usize],
) -> bool {
    let mut seen = std::collections::HashSet::new();
    for x in q1.elements() {
        let mut y = vec![0; q2.orders.len()];
        for (c, &im) in x.iter().zip(images) {
            y = q2.add(&y, &q2.mul(*c, &targets[im]));
        }
        if !seen.insert(y) {
            return false;
        }
    }
    true
}

/// The discriminant group of a nondegenerate Gram matrix: the form, plus the
/// generators of M*/M as rational coordinate vectors.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    pub form: FiniteQuadraticForm,
    pub generators: Vec<RatVector>,
}

pub fn discriminant_of_gram(gram: &IntMatrix) -> Result<DiscriminantGroup> {
    if gram.det().is_zero() {
        return Err(Error::Degenerate);
    }
    let (d, _u, v) = smith_normal_form(gram);
    let mut orders = Vec::new();
    let mut generators = Vec::new();
    for i in 0..gram.rows() {
        let di = d.get(i, i);
        if di.is_one() {
            continue;
        }
        orders.push(di.to_u64().expect("small discriminant"));
        let col = v.col(i);
        generators.push(RatVector(
            col.into_iter().map(|x| BigRational::new(x, di.clone())).collect(),
        ));
    }
    let values = generators.iter().map(|g| mod_rat(&g.form(gram, g), 2)).collect();
    let pairings = generators
        .iter()
        .map(|g| generators.iter().map(|h| mod_rat(&g.form(gram, h), 1)).collect())
        .collect();
    Ok(DiscriminantGroup { form: FiniteQuadraticForm { orders, values, pairings }, generators })
}

pub fn discriminant_form(m: &EmbeddedLattice) -> Result<FiniteQuadraticForm> {
    Ok(discriminant_of_gram(&m.gram)?.form)
}

/// Gram matrices of U, U(m), A_n(m), D_n(m), E8(m); e.g. `"A2(-2)"`.
pub fn standard_gram(name: &str) -> Result<IntMatrix> {
    let bad = || Error::UnknownName(name.to_string());
    let (base, scale) = match name.split_once('(') {
        Some((b, rest)) => {
            let s = rest.strip_suffix(')').ok_or_else(bad)?;
            (b, s.parse::<i64>().map_err(|_| bad())?)
        }
        None => (name, 1),
    };
    let (kind, n) = base.split_at(1);
    let cartan = |n: usize, edges: &[(usize, usize)]| {
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            g.set(i, i, int(2));
        }
        for &(a, b) in edges {
            g.set(a, b, int(-1));
            g.set(b, a, int(-1));
        }
        g
    };
    let g = match (kind, n) {
        ("U", "") => IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]),
        ("A", n) => {
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            cartan(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
        }
        ("D", n) => {
            let n: usize = n.parse().map_err(|_| bad())?;
            if n < 4 {
                return Err(bad());
            }
            let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
            e.push((n - 3, n - 1));
            cartan(n, &e)
        }
        ("E", "8") => cartan(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]),
        _ => return Err(bad()),
    };
    let mut out = g.clone();
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            out.set(i, j, g.get(i, j) * scale);
        }
    }
    Ok(out)
}

/// Orthogonal direct sum of Gram matrices.
pub fn block_diagonal(blocks: &[IntMatrix]) -> IntMatrix {
    let n: usize = blocks.iter().map(IntMatrix::rows).sum();
    let mut g = IntMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                g.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows();
    }
    g
}

/// All v with vᵀGv = −2 for a negative definite Gram matrix, by exact
/// Fincke–Pohst enumeration.
pub fn roots_of_negative_definite(gram: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = gram.rows();
    let q: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(-gram.get(i, j))).collect())
        .collect();
    // Q = Σ dᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²
    let mut d = vec![BigRational::zero(); n];
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut a = q.clone();
    for i in 0..n {
        d[i] = a[i][i].clone();
        assert!(d[i].is_positive(), "Gram matrix must be negative definite");
        for j in i + 1..n {
            mu[i][j] = &a[i][j] / &d[i];
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let v = &mu[i][j] * &a[i][k];
                a[j][k] -= v;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    let two = BigRational::from_integer(int(2));
    enumerate(n, &d, &mu, &two, &mut x, &mut out);
    out.retain(|v| v.iter().any(|c| !c.is_zero()));
    out.retain(|v| {
        let gv = gram.mul_vec(v);
        v.iter().zip(&gv).map(|(a, b)| a * b).sum::<BigInt>() == int(-2)
    });
    out
}

fn enumerate(
    level: usize,
    d: &[BigRational],
    mu: &[Vec<BigRational>],
    rem: &BigRational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if level == 0 {
        out.push(x.clone());
        return;
    }
    let i = level - 1;
    let n = d.len();
    let c: BigRational = -(i + 1..n)
        .map(|j| &mu[i][j] * BigRational::from_integer(x[j].clone()))
        .fold(BigRational::zero(), |a, b| a + b);
    let cost = |t: &BigInt| {
        let diff = BigRational::from_integer(t.clone()) - &c;
        &d[i] * &diff * &diff
    };
    let t0 = c.round().to_integer();
    if &cost(&t0) > rem {
        return;
    }
    let mut lo = t0.clone();
    while &cost(&(&lo - 1)) <= rem {
        lo -= 1;
    }
    let mut t = lo;
    loop {
        let k = cost(&t);
        if &k > rem {
            break;
        }
        x[i] = t.clone();
        enumerate(i, d, mu, &(rem - k), x, out);
        t += 1;
    }
    x[i] = BigInt::zero();
}

/// Irreducible components of the root system of a negative definite
/// lattice, e.g. `{"A5": 1, "A1": 5}`.
pub fn root_type(gram: &IntMatrix) -> BTreeMap<String, usize> {
    let roots = roots_of_negative_definite(gram);
    let pair = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        let gb = gram.mul_vec(b);
        a.iter().zip(&gb).map(|(x, y)| x * y).sum()
    };
    let n = roots.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if comp[b] == usize::MAX && !pair(&roots[a], &roots[b]).is_zero() {
                    comp[b] = next;
                    stack.push(b);
                }
            }
        }
        next += 1;
    }
    let mut types = BTreeMap::new();
    for c in 0..next {
        let members: Vec<Vec<BigInt>> =
            (0..n).filter(|&i| comp[i] == c).map(|i| roots[i].clone()).collect();
        let count = members.len();
        let rank = IntMatrix::from_rows(gram.rows(), &members).rank();
        *types.entry(classify_component(rank, count)).or_insert(0) += 1;
    }
    types
}

fn classify_component(rank: usize, count: usize) -> String {
    match (rank, count) {
        (6, 72) => "E6".into(),
        (7, 126) => "E7".into(),
        (8, 240) => "E8".into(),
        (n, c) if c == n * (n + 1) => format!("A{n}"),
        (n, c) if n >= 4 && c == 2 * n * (n - 1) => format!("D{n}"),
        (n, c) => format!("?rank{n}roots{c}"),
    }
}

/// Total number of roots of a root type, e.g. A5 + 5·A1 → 40.
pub fn root_count(types: &BTreeMap<String, usize>) -> usize {
    types
        .iter()
        .map(|(t, k)| {
            let n: usize = t[1..].parse().unwrap_or(0);
            let c = match &t[..1] {
                "A" => n * (n + 1),
                "D" => 2 * n * (n - 1),
                "E" => [0, 0, 0, 0, 0, 0, 72, 126, 240][n.min(8)],
                _ => 0,
            };
            c * k
        })
        .sum()
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |a, b| a.gcd(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leech::LeechVector;
    use crate::lorentz::{leech_root, r_generators};

    fn z() -> LorentzVector {
        leech_root(LeechVector::zero()).unwrap().vector()
    }

    #[test]
    fn span_examples() {
        let s = span(&[z()]).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.gram, IntMatrix::from_i64(&[vec![-2]]));
        let r: Vec<_> = r_generators().iter().map(|(_, r)| r.vector()).collect();
        assert_eq!(span(&r).unwrap().rank(), 10);
    }

    #[test]
    fn complement_and_saturation() {
        let s = span(&[z()]).unwrap();
        let c = orthogonal_complement(&s);
        assert_eq!(c.rank(), 25);
        let cc = orthogonal_complement(&c);
        assert_eq!(cc.basis, saturation(&s).basis);
        let two_z = span(&[z().scale(2)]).unwrap();
        assert!(!is_primitive(&two_z));
        assert_eq!(saturation(&two_z).basis, s.basis);
        assert!(is_primitive(&s));
    }

    #[test]
    fn discriminant_examples() {
        let a1 = discriminant_of_gram(&standard_gram("A1(-1)").unwrap()).unwrap().form;
        assert_eq!(a1.orders, vec![2]);
        assert_eq!(a1.values, vec![BigRational::new(int(3), int(2))]);
        let a5 = discriminant_of_gram(&standard_gram("A5(-1)").unwrap()).unwrap().form;
        assert_eq!(a5.orders, vec![6]);
        let target = FiniteQuadraticForm {
            orders: vec![6],
            values: vec![mod_rat(&BigRational::new(int(-5), int(6)), 2)],
            pairings: vec![vec![mod_rat(&BigRational::new(int(-5), int(6)), 1)]],
        };
        assert!(fqf_isomorphic(&a5, &target));
        let a2 = discriminant_of_gram(&standard_gram("A2").unwrap()).unwrap().form;
        assert!(!fqf_isomorphic(&a1, &a2));
        let e8 = discriminant_of_gram(&standard_gram("E8(-2)").unwrap()).unwrap().form;
        assert_eq!(e8.order(), 256);
    }

    #[test]
    fn standard_grams() {
        assert_eq!(standard_gram("U").unwrap(), IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]));
        assert_eq!(
            standard_gram("A2(-2)").unwrap(),
            IntMatrix::from_i64(&[vec![-4, 2], vec![2, -4]])
        );
        assert_eq!(standard_gram("A2(-2)").unwrap().det(), int(12));
        assert_eq!(standard_gram("E8").unwrap().det(), int(1));
        assert_eq!(standard_gram("D4").unwrap().det(), int(4));
        assert!(standard_gram("F4").is_err());
    }

    #[test]
    fn root_counting() {
        let neg = |name: &str| standard_gram(&format!("{name}(-1)")).unwrap();
        for (name, count) in [("A1", 2), ("A3", 12), ("A5", 30), ("D6", 60), ("A7", 56), ("E8", 240)] {
            let g = neg(name);
            assert_eq!(roots_of_negative_definite(&g).len(), count, "{name}");
            assert_eq!(root_type(&g), BTreeMap::from([(name.to_string(), 1)]));
        }
        let g = block_diagonal(&[neg("A5"), neg("A1"), neg("A1")]);
        assert_eq!(root_type(&g), BTreeMap::from([("A5".into(), 1), ("A1".into(), 2)]));
    }

    #[test]
    fn forms_are_consistent() {
        for name in ["A2(-2)", "U(2)", "D4(-1)", "A5(-2)"] {
            let q = discriminant_of_gram(&standard_gram(name).unwrap()).unwrap().form;
            assert!(q.is_consistent(), "{name}");
            assert_eq!(q.order(), standard_gram(name).unwrap().det().abs().to_u64().unwrap());
        }
    }
}
