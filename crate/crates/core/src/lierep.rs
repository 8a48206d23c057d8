//! Tensor calculus for `gl(V)`, `V = Q^d`: wheel invariants, their action on
//! `V^{⊗m}`, exterior invariants of Lie algebras and of current algebras.
//!
//! A tensor in `gl(V)^{⊗m}` is stored with `2m` axes `(a_1, b_1, ..., a_m, b_m)`,
//! slot `k` holding the coefficient of `E_{a_k b_k}`. Flattening each pair as
//! `a·d + b` gives the Lie-algebra basis order used by [`LieAlgebraSpec::gl`].
//!
//! The wheel is the cyclic contraction read off the Penrose diagram of nested
//! `V`-cups under one `V*`-cap: slot `k` contracts its `V*` leg with the `V`
//! leg of slot `k+1`, and slot `m` closes the loop into slot 1. In components
//! that is `Σ E_{a_1 a_2} ⊗ E_{a_2 a_3} ⊗ ... ⊗ E_{a_m a_1}`, which acts on
//! `V^{⊗m}` as the cyclic slot permutation `(1 2 ... m)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::exactla::{frac, int, parse_scalar, SparseMatrix, SparseVec, Subspace};
use crate::homology::{cubic_cohomology, SnModule};
use crate::symgrp::{e_element, enumerate, GroupAlgebraElement, Permutation};
use crate::Scalar;

/// Largest number of tensor entries any operation will materialize.
pub const ENTRY_LIMIT: usize = 10_000_000;

/// Largest exterior power basis handled by the invariant solvers.
const EXTERIOR_LIMIT: usize = 50_000;

fn guard_entries(count: Option<usize>, what: &str) -> Result<usize> {
    match count {
        Some(c) if c <= ENTRY_LIMIT => Ok(c),
        _ => Err(Error::LimitExceeded(format!(
            "{what} exceeds {ENTRY_LIMIT} entries"
        ))),
    }
}

/// A dense tensor with exact entries, row-major (last axis fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseTensor {
    shape: Vec<usize>,
    entries: Vec<Scalar>,
}

impl DenseTensor {
    pub fn zeros(shape: Vec<usize>) -> Result<Self> {
        let n = guard_entries(
            shape.iter().try_fold(1usize, |a, &s| a.checked_mul(s)),
            "tensor",
        )?;
        Ok(Self {
            shape,
            entries: vec![Scalar::zero(); n],
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "index rank");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &s)| {
            assert!(i < s, "index out of range");
            acc * s + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.entries[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let k = self.flat_index(idx);
        self.entries[k] = v;
    }

    pub fn scale(&self, c: &Scalar) -> DenseTensor {
        DenseTensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }
}

/// Decompose a flat index over `m` axes of size `base`, most significant first.
fn digits(mut k: usize, base: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for slot in (0..m).rev() {
        out[slot] = k % base;
        k /= base;
    }
    out
}

fn undigits(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * base + x)
}

fn tensor_shape(m: usize, d: usize) -> Result<Vec<usize>> {
    if m == 0 || d == 0 {
        return Err(Error::InvalidSpec("wheel needs m ≥ 1 and d ≥ 1".into()));
    }
    guard_entries(d.checked_pow(2 * m as u32), "gl(V)^{⊗m}")?;
    Ok(vec![d; 2 * m])
}

/// `Σ E_{a_1 a_2} ⊗ E_{a_2 a_3} ⊗ ... ⊗ E_{a_m a_1}`.
pub fn wheel(m: usize, d: usize) -> Result<DenseTensor> {
    let mut t = DenseTensor::zeros(tensor_shape(m, d)?)?;
    for k in 0..d.pow(m as u32) {
        let a = digits(k, d, m);
        let mut idx = Vec::with_capacity(2 * m);
        for s in 0..m {
            idx.push(a[s]);
            idx.push(a[(s + 1) % m]);
        }
        t.set(&idx, Scalar::one());
    }
    Ok(t)
}

/// `σ^{(2)}`: slot `j` (its `V` and `V*` axes together) moves to slot `σ(j)`.
pub fn permute_slots(t: &DenseTensor, sigma: &Permutation) -> Result<DenseTensor> {
    let m = sigma.n();
    if t.shape.len() != 2 * m {
        return Err(Error::SizeMismatch(format!(
            "tensor of rank {} vs S_{m}",
            t.shape.len()
        )));
    }
    let d = t.shape[0];
    let mut out = DenseTensor::zeros(t.shape.clone())?;
    for (k, v) in t.entries.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let idx = digits(k, d, 2 * m);
        let mut moved = vec![0; 2 * m];
        for j in 0..m {
            let to = sigma.apply(j + 1) - 1;
            moved[2 * to] = idx[2 * j];
            moved[2 * to + 1] = idx[2 * j + 1];
        }
        out.set(&moved, v.clone());
    }
    Ok(out)
}

/// `alt^{(2)}_m(T) = (m!)^{-1} Σ_σ sign(σ) σ^{(2)}(T)`.
pub fn alt2(t: &DenseTensor) -> Result<DenseTensor> {
    let m = t.shape.len() / 2;
    let d = t.shape[0];
    let support: Vec<(Vec<usize>, Scalar)> = t
        .entries
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (digits(k, d, 2 * m), v.clone()))
        .collect();
    let mut acc: HashMap<usize, Scalar> = HashMap::new();
    for sigma in enumerate(m)? {
        let s = int(sigma.sign() as i64);
        let targets: Vec<usize> = (0..m).map(|j| sigma.apply(j + 1) - 1).collect();
        for (idx, v) in &support {
            let mut moved = vec![0; 2 * m];
            for j in 0..m {
                moved[2 * targets[j]] = idx[2 * j];
                moved[2 * targets[j] + 1] = idx[2 * j + 1];
            }
            *acc.entry(undigits(&moved, d)).or_insert_with(Scalar::zero) += &s * v;
        }
    }
    let norm = Scalar::from_integer((factorial(m) as i64).into());
    let mut out = DenseTensor::zeros(t.shape.clone())?;
    for (k, v) in acc {
        out.entries[k] = v / &norm;
    }
    Ok(out)
}

/// `x_m = alt^{(2)}_m(wheel)`.
pub fn alt2_wheel(m: usize, d: usize) -> Result<DenseTensor> {
    alt2(&wheel(m, d)?)
}

/// The operator of `t ∈ gl(V)^{⊗m}` on `V^{⊗m}`: slot `k` acts on tensor factor `k`.
///
/// Rows are indexed by `(a_1..a_m)`, columns by `(b_1..b_m)`.
pub fn act_on_power(t: &DenseTensor) -> Result<SparseMatrix> {
    if !t.shape.len().is_multiple_of(2) || t.shape.iter().any(|&s| s != t.shape[0]) {
        return Err(Error::SizeMismatch(
            "expected a tensor in gl(V)^{⊗m}".into(),
        ));
    }
    let m = t.shape.len() / 2;
    let d = t.shape[0];
    let n = d.pow(m as u32);
    let mut triplets = Vec::new();
    for (k, v) in t.entries.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let idx = digits(k, d, 2 * m);
        let rows: Vec<usize> = (0..m).map(|s| idx[2 * s]).collect();
        let cols: Vec<usize> = (0..m).map(|s| idx[2 * s + 1]).collect();
        triplets.push((undigits(&rows, d), undigits(&cols, d), v.clone()));
    }
    Ok(SparseMatrix::from_triplets(n, n, triplets))
}

/// Slot permutation action of `Q[S_m]` on `V^{⊗m}`; `σ` moves factor `j` to slot `σ(j)`.
pub fn perm_action(u: &GroupAlgebraElement, d: usize) -> Result<SparseMatrix> {
    let m = u.n();
    let n = guard_entries(d.checked_pow(m as u32), "V^{⊗m}")?;
    let mut triplets = Vec::new();
    for (sigma, c) in u.coeffs().iter() {
        for col in 0..n {
            let j = digits(col, d, m);
            let mut i = vec![0; m];
            for (k, &jk) in j.iter().enumerate() {
                i[sigma.apply(k + 1) - 1] = jk;
            }
            triplets.push((undigits(&i, d), col, c.clone()));
        }
    }
    Ok(SparseMatrix::from_triplets(n, n, triplets))
}

/// Outcome of comparing `act(x_m)` with `((m-1)!)^{-1} e_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoxVerdict {
    pub m: usize,
    pub d: usize,
    /// `act(x_m) = ratio · act(e_m)`, when `act(e_m) ≠ 0` and such a scalar exists.
    pub ratio: Option<Scalar>,
    pub expected: Scalar,
    /// Both sides vanish.
    pub both_zero: bool,
    pub holds: bool,
}

pub fn kox_check(m: usize, d: usize) -> Result<KoxVerdict> {
    let lhs = act_on_power(&alt2_wheel(m, d)?)?;
    let rhs = perm_action(&e_element(m), d)?;
    let expected = frac(1, factorial(m - 1) as i64);
    let both_zero = lhs.is_zero() && rhs.is_zero();
    let ratio = first_nonzero(&rhs).and_then(|(i, j, r)| {
        let c = lhs.get(i, j) / r;
        (lhs == rhs.scale(&c)).then_some(c)
    });
    let holds = both_zero || ratio.as_ref() == Some(&expected);
    Ok(KoxVerdict {
        m,
        d,
        ratio,
        expected,
        both_zero,
        holds,
    })
}

fn first_nonzero(m: &SparseMatrix) -> Option<(usize, usize, Scalar)> {
    (0..m.rows()).find_map(|i| m.row(i).entries().first().map(|(j, v)| (i, *j, v.clone())))
}

/// One row of the wheel vanishing table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingRow {
    pub m: usize,
    pub d: usize,
    pub vanishes: bool,
    /// `m` even or `m > 2d - 1`.
    pub predicted: bool,
}

pub fn wheel_vanishing_table(max_m: usize, ds: &[usize]) -> Result<Vec<VanishingRow>> {
    let mut out = Vec::new();
    for &d in ds {
        for m in 1..=max_m {
            out.push(VanishingRow {
                m,
                d,
                vanishes: alt2_wheel(m, d)?.is_zero(),
                predicted: m % 2 == 0 || m + 1 > 2 * d,
            });
        }
    }
    Ok(out)
}

/// Whether `e_m` acts as zero on `(Q^d)^{⊗m}`.
pub fn e_acts_as_zero(m: usize, d: usize) -> Result<bool> {
    Ok(perm_action(&e_element(m), d)?.is_zero())
}

/// A finite-dimensional Lie algebra `[x_i, x_j] = Σ_k c_{ij}^k x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    dim: usize,
    names: Vec<String>,
    /// `brackets[i][j]` = sparse coordinates of `[x_i, x_j]`.
    brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
}

#[derive(Deserialize)]
struct LieJson {
    dim: usize,
    #[serde(default)]
    names: Option<Vec<String>>,
    /// `[i, j, k, c]`: `c_{ij}^k = c` for `i < j`; the rest follows from antisymmetry.
    brackets: Vec<(usize, usize, usize, serde_json::Value)>,
}

impl LieAlgebraSpec {
    /// Checks antisymmetry and the Jacobi identity.
    pub fn new(
        dim: usize,
        names: Option<Vec<String>>,
        brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
    ) -> Result<Self> {
        if dim == 0 || dim > 64 {
            return Err(Error::InvalidSpec(format!(
                "Lie algebra dimension {dim} outside 1..=64"
            )));
        }
        if brackets.len() != dim || brackets.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidSpec(
                "bracket table has the wrong shape".into(),
            ));
        }
        let names = match names {
            Some(n) if n.len() == dim => n,
            Some(_) => return Err(Error::InvalidSpec("one name per basis element".into())),
            None => (0..dim).map(|i| format!("x{i}")).collect(),
        };
        let mut clean = brackets;
        for row in clean.iter_mut() {
            for cell in row.iter_mut() {
                if cell.iter().any(|(k, _)| *k >= dim) {
                    return Err(Error::InvalidSpec("bracket coordinate out of range".into()));
                }
                let v = SparseVec::from_entries(dim, std::mem::take(cell));
                *cell = v.into_entries();
            }
        }
        let g = Self {
            dim,
            names,
            brackets: clean,
        };
        for i in 0..dim {
            for j in 0..dim {
                if g.bracket_vec(i, j) != g.bracket_vec(j, i).neg() {
                    return Err(Error::InvalidSpec(format!("[x{i},x{j}] ≠ -[x{j},x{i}]")));
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let cyc = g
                        .bracket_with(i, &g.bracket_vec(j, k))
                        .add(&g.bracket_with(j, &g.bracket_vec(k, i)))
                        .add(&g.bracket_with(k, &g.bracket_vec(i, j)));
                    if !cyc.is_zero() {
                        return Err(Error::InvalidSpec(format!(
                            "Jacobi fails on x{i}, x{j}, x{k}"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    /// `gl(d)` on `E_{ab}` (index `a·d + b`) with `[E_ab, E_cd] = δ_bc E_ad - δ_da E_cb`.
    pub fn gl(d: usize) -> Result<Self> {
        let n = d * d;
        let mut br = vec![vec![Vec::new(); n]; n];
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let cell = &mut br[a * d + b][c * d + e];
                        if b == c {
                            cell.push((a * d + e, int(1)));
                        }
                        if e == a {
                            cell.push((c * d + b, int(-1)));
                        }
                    }
                }
            }
        }
        let names = (0..n)
            .map(|k| format!("E{}{}", k / d + 1, k % d + 1))
            .collect();
        Self::new(n, Some(names), br)
    }

    /// `sl(2)` on `(e, h, f)`.
    pub fn sl2() -> Self {
        let mut br = vec![vec![Vec::new(); 3]; 3];
        br[1][0] = vec![(0, int(2))];
        br[0][1] = vec![(0, int(-2))];
        br[1][2] = vec![(2, int(-2))];
        br[2][1] = vec![(2, int(2))];
        br[0][2] = vec![(1, int(1))];
        br[2][0] = vec![(1, int(-1))];
        Self::new(3, Some(vec!["e".into(), "h".into(), "f".into()]), br).expect("sl(2)")
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(dim, None, vec![vec![Vec::new(); dim]; dim])
    }

    /// `{"dim": n, "names": [..], "brackets": [[i, j, k, c], ...]}` with `i < j`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: LieJson = serde_json::from_str(text)?;
        let n = raw.dim;
        if n == 0 || n > 64 {
            return Err(Error::InvalidSpec(format!(
                "Lie algebra dimension {n} outside 1..=64"
            )));
        }
        let mut br = vec![vec![Vec::new(); n]; n];
        for (i, j, k, c) in raw.brackets {
            if i >= j || j >= n || k >= n {
                return Err(Error::InvalidSpec(format!(
                    "bracket entry [{i},{j}]→{k} must have i < j < dim"
                )));
            }
            let c = match &c {
                serde_json::Value::String(s) => parse_scalar(s)?,
                serde_json::Value::Number(x) if x.is_i64() => int(x.as_i64().unwrap()),
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "bad structure constant {other}"
                    )))
                }
            };
            br[j][i].push((k, -c.clone()));
            br[i][j].push((k, c));
        }
        Self::new(n, raw.names, br)
    }

    /// The same algebra with basis element `order[k]` placed at position `k`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let n = self.dim;
        let mut pos = vec![usize::MAX; n];
        for (k, &o) in order.iter().enumerate() {
            pos[o] = k;
        }
        if order.len() != n || pos.contains(&usize::MAX) {
            return Err(Error::InvalidSpec("reordering is not a permutation".into()));
        }
        let br = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.brackets[order[i]][order[j]]
                            .iter()
                            .map(|(k, c)| (pos[*k], c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let names = order.iter().map(|&o| self.names[o].clone()).collect();
        Self::new(n, Some(names), br)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.brackets[i][j]
    }

    fn bracket_vec(&self, i: usize, j: usize) -> SparseVec {
        SparseVec::from_sorted_unchecked(self.dim, self.brackets[i][j].clone())
    }

    /// `[x_i, v]`.
    fn bracket_with(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (j, c) in v.entries() {
            for (k, x) in &self.brackets[i][*j] {
                terms.push((*k, c * x));
            }
        }
        SparseVec::from_entries(self.dim, terms)
    }

    /// `ad(x_i)` as a matrix on `g`.
    pub fn ad(&self, i: usize) -> SparseMatrix {
        let mut triplets = Vec::new();
        for j in 0..self.dim {
            for (k, c) in &self.brackets[i][j] {
                triplets.push((*k, j, c.clone()));
            }
        }
        SparseMatrix::from_triplets(self.dim, self.dim, triplets)
    }

    /// The centre `z(g)`.
    pub fn center(&self) -> Result<Subspace> {
        // x is central iff [x_i, x] = 0 for every i.
        let ops: Vec<SparseMatrix> = (0..self.dim).map(|i| self.ad(i)).collect();
        Subspace::joint_kernel(self.dim, &ops)
    }

    /// The derivation `ad(x_i)` on `g^{⊗n}`.
    pub fn ad_on_tensor_power(&self, i: usize, n: usize) -> Result<SparseMatrix> {
        let size = guard_entries(self.dim.checked_pow(n as u32), "g^{⊗n}")?;
        let mut triplets = Vec::new();
        for col in 0..size {
            let idx = digits(col, self.dim, n);
            for slot in 0..n {
                for (k, c) in &self.brackets[i][idx[slot]] {
                    let mut out = idx.clone();
                    out[slot] = *k;
                    triplets.push((undigits(&out, self.dim), col, c.clone()));
                }
            }
        }
        Ok(SparseMatrix::from_triplets(size, size, triplets))
    }
}

/// The `ad`-action of `g` on a flat tensor in `g^{⊗m}`: zero iff invariant.
pub fn is_ad_invariant(g: &LieAlgebraSpec, t: &DenseTensor) -> Result<bool> {
    let mut m = 0;
    let mut size = 1usize;
    while size < t.len() {
        size = size.saturating_mul(g.dim());
        m += 1;
    }
    if size != t.len() || g.dim() == 1 && t.len() != 1 {
        return Err(Error::SizeMismatch(
            "tensor is not in a tensor power of g".into(),
        ));
    }
    let v = SparseVec::from_dense(t.entries());
    for i in 0..g.dim() {
        if !g.ad_on_tensor_power(i, m)?.apply(&v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Increasing `m`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == m {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            if n - i < m - acc.len() {
                break;
            }
            acc.push(i);
            go(i + 1, n, m, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Sort a wedge word, returning its sign, or `None` if a letter repeats.
fn sort_wedge<K: Ord + Clone>(mut w: Vec<K>) -> Option<(i32, Vec<K>)> {
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some((sign, w))
    }
}

fn guard_exterior(n: usize, m: usize) -> Result<()> {
    if binomial(n, m) > EXTERIOR_LIMIT as u128 {
        Err(Error::LimitExceeded(format!(
            "Λ^{m} of a {n}-dimensional space"
        )))
    } else {
        Ok(())
    }
}

/// `dim Λ^m(g)^g` for `m = 0..=maxdeg`, by solving `ad(x_i) ω = 0` on `Λ^m(g)`.
pub fn exterior_invariants_dims(g: &LieAlgebraSpec, maxdeg: usize) -> Result<Vec<usize>> {
    let n = g.dim();
    let mut out = Vec::with_capacity(maxdeg + 1);
    for m in 0..=maxdeg {
        if m > n {
            out.push(0);
            continue;
        }
        guard_exterior(n, m)?;
        let basis = subsets(n, m);
        let index: HashMap<Vec<usize>, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut rows = Vec::new();
        for i in 0..n {
            let mut triplets = Vec::new();
            for (col, s) in basis.iter().enumerate() {
                for pos in 0..m {
                    for (k, c) in g.bracket(i, s[pos]) {
                        let mut w = s.clone();
                        w[pos] = *k;
                        if let Some((sign, sorted)) = sort_wedge(w) {
                            triplets.push((index[&sorted], col, c * int(sign as i64)));
                        }
                    }
                }
            }
            let mat = SparseMatrix::from_triplets(basis.len(), basis.len(), triplets);
            rows.extend(mat.row_vectors().iter().cloned());
        }
        let k = crate::exactla::kernel_basis(&SparseMatrix::from_rows(basis.len(), rows));
        out.push(k.dim());
    }
    Ok(out)
}

/// Coefficients of `∏_{i=1}^{d} (1 + t^{2i-1})`.
pub fn odd_exterior_series(d: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for i in 1..=d {
        let e = 2 * i - 1;
        let mut next = vec![0u64; c.len() + e];
        for (k, &x) in c.iter().enumerate() {
            next[k] += x;
            next[k + e] += x;
        }
        c = next;
    }
    c
}

/// Invariant counts of `Λ^m(g ⊗ span{1, x, ..., x^D})` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentInvariants {
    pub degree: usize,
    /// Joint kernel of `ad(ξ ⊗ x^s)` for `s = 0..=m`.
    pub invariants: usize,
    /// Same with `s = 0..=m+1`.
    pub invariants_next_s: usize,
    /// `dim Λ^m(z(g) ⊗ span{1..x^D})`.
    pub center_prediction: usize,
}

/// Basis element `x_i ⊗ x^s` of the current algebra.
type CurrentLetter = (usize, usize);

pub fn current_invariants_dims(
    g: &LieAlgebraSpec,
    d_bound: usize,
    maxdeg: usize,
) -> Result<Vec<CurrentInvariants>> {
    let n = g.dim();
    let letters: Vec<CurrentLetter> = (0..n)
        .flat_map(|i| (0..=d_bound).map(move |s| (i, s)))
        .collect();
    let total = letters.len();
    let zdim = g.center()?.dim();
    let mut out = Vec::new();
    for m in 0..=maxdeg {
        if m > total {
            out.push(CurrentInvariants {
                degree: m,
                invariants: 0,
                invariants_next_s: 0,
                center_prediction: 0,
            });
            continue;
        }
        guard_exterior(total, m)?;
        let basis: Vec<Vec<CurrentLetter>> = subsets(total, m)
            .into_iter()
            .map(|s| s.into_iter().map(|k| letters[k]).collect())
            .collect();
        let solve = |max_s: usize| -> Result<usize> {
            // Images may leave the slice, so target words are indexed as they appear.
            let mut targets: BTreeMap<Vec<CurrentLetter>, usize> = BTreeMap::new();
            let mut triplets = Vec::new();
            let mut row_base = 0;
            for xi in 0..n {
                for s in 0..=max_s {
                    let mut local: BTreeMap<Vec<CurrentLetter>, usize> = BTreeMap::new();
                    for (col, word) in basis.iter().enumerate() {
                        for pos in 0..m {
                            let (j, t) = word[pos];
                            for (k, c) in g.bracket(xi, j) {
                                let mut w = word.clone();
                                w[pos] = (*k, t + s);
                                if let Some((sign, sorted)) = sort_wedge(w) {
                                    let next = local.len();
                                    let r = *local.entry(sorted).or_insert(next);
                                    triplets.push((row_base + r, col, c * int(sign as i64)));
                                }
                            }
                        }
                    }
                    row_base += local.len();
                    targets.extend(local);
                }
            }
            let mat = SparseMatrix::from_triplets(row_base, basis.len(), triplets);
            Ok(crate::exactla::kernel_basis(&mat).dim())
        };
        out.push(CurrentInvariants {
            degree: m,
            invariants: solve(m)?,
            invariants_next_s: solve(m + 1)?,
            center_prediction: binomial(zdim * (d_bound + 1), m) as usize,
        });
    }
    Ok(out)
}

/// Slot permutations of `g^{⊗n}` as an `S_n`-module.
pub fn tensor_power_module(g: &LieAlgebraSpec, n: usize) -> Result<SnModule> {
    let dim = guard_entries(g.dim().checked_pow(n as u32), "g^{⊗n}")?;
    let gens = (1..n)
        .map(|i| {
            SparseMatrix::from_triplets(
                dim,
                dim,
                (0..dim).map(|col| {
                    let mut idx = digits(col, g.dim(), n);
                    idx.swap(i - 1, i);
                    (undigits(&idx, g.dim()), col, int(1))
                }),
            )
        })
        .collect();
    SnModule::new(n, dim, gens)
}

/// Top cubic cohomology of the `S_n`-module `(g^{⊗n})^g`; equals `dim Λ^n(g)^g`.
pub fn cohomology_of_rep_category_graded(g: &LieAlgebraSpec, n: usize) -> Result<usize> {
    if n == 0 {
        return Ok(1);
    }
    let full = tensor_power_module(g, n)?;
    let ops = (0..g.dim())
        .map(|i| g.ad_on_tensor_power(i, n))
        .collect::<Result<Vec<_>>>()?;
    let inv = Subspace::joint_kernel(full.dim(), &ops)?;
    let module = full.restrict(&inv)?;
    let h = cubic_cohomology(&module)?;
    Ok(h.get(n as i64 - 1))
}
