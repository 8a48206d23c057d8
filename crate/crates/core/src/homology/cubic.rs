use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinat::{compositions, multinomial, Composition};
use crate::error::{Error, Result};
use crate::exactla::{
    int, rank, CochainComplex, CohomologyDims, SparseMatrix, SparseVec, Subspace,
};
use crate::symgrp::{enumerate, lex_rank, young_generator_indices, Permutation};

/// A finite-dimensional representation of `S_n`, given by the matrices of
/// `t_1, ..., t_{n-1}` acting on column vectors.
#[derive(Clone, Debug)]
pub struct SnModule {
    n: usize,
    dim: usize,
    gens: Vec<SparseMatrix>,
}

impl SnModule {
    /// Checks the Coxeter relations before accepting the matrices.
    pub fn new(n: usize, dim: usize, gens: Vec<SparseMatrix>) -> Result<Self> {
        if n == 0 || gens.len() != n - 1 {
            return Err(Error::SizeMismatch(format!(
                "S_{n} needs {} generators, got {}",
                n.saturating_sub(1),
                gens.len()
            )));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::SizeMismatch(format!(
                    "t_{} is not {dim}×{dim}",
                    i + 1
                )));
            }
        }
        let id = SparseMatrix::identity(dim);
        for i in 0..gens.len() {
            if gens[i].mul(&gens[i])? != id {
                return Err(Error::RelationCheck(format!("t_{}² ≠ 1", i + 1)));
            }
            for j in i + 1..gens.len() {
                let (a, b) = (&gens[i], &gens[j]);
                if j == i + 1 {
                    let l = a.mul(b)?.mul(a)?;
                    let r = b.mul(a)?.mul(b)?;
                    if l != r {
                        return Err(Error::RelationCheck(format!(
                            "braid relation at t_{}",
                            i + 1
                        )));
                    }
                } else if a.mul(b)? != b.mul(a)? {
                    return Err(Error::RelationCheck(format!(
                        "t_{} and t_{} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { n, dim, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `t_i`, 1-based.
    pub fn generator(&self, i: usize) -> &SparseMatrix {
        &self.gens[i - 1]
    }

    pub fn generators(&self) -> &[SparseMatrix] {
        &self.gens
    }

    pub fn trivial(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn sign(n: usize) -> Self {
        Self::scalar(n, -1)
    }

    fn scalar(n: usize, c: i64) -> Self {
        let g = SparseMatrix::identity(1).scale(&int(c));
        Self::new(n, 1, vec![g; n - 1]).expect("scalar representation")
    }

    /// `Q^n` with `t_i` swapping `e_i` and `e_{i+1}`.
    pub fn natural(n: usize) -> Self {
        Self::from_action(n, n, |i, j| {
            if j == i - 1 {
                i
            } else if j == i {
                i - 1
            } else {
                j
            }
        })
    }

    /// `Q[S_n]` with `t_i` acting by left multiplication.
    pub fn regular(n: usize) -> Result<Self> {
        let perms = enumerate(n)?;
        Ok(Self::from_action(n, perms.len(), |i, j| {
            lex_rank(&(&Permutation::transposition(n, i) * &perms[j]))
        }))
    }

    /// The permutation module on words of content `λ`, i.e. `Q[S_n / S_λ]`.
    pub fn permutation_module(lambda: &Composition) -> Result<Self> {
        let n = lambda.weight();
        let mut word: Vec<usize> = Vec::with_capacity(n);
        for (k, &p) in lambda.parts().iter().enumerate() {
            word.extend(std::iter::repeat_n(k, p));
        }
        let mut words = vec![word.clone()];
        while next_permutation(&mut word) {
            words.push(word.clone());
        }
        if words.len() > 5000 {
            return Err(Error::LimitExceeded(format!(
                "permutation module of dim {}",
                words.len()
            )));
        }
        let index = |w: &Vec<usize>| words.binary_search(w).expect("word of the orbit");
        let action: Vec<Vec<usize>> = (1..n)
            .map(|i| {
                words
                    .iter()
                    .map(|w| {
                        let mut v = w.clone();
                        v.swap(i - 1, i);
                        index(&v)
                    })
                    .collect()
            })
            .collect();
        Ok(Self::from_action(n, words.len(), |i, j| action[i - 1][j]))
    }

    /// Each `t_i` permutes basis vectors: `e_j ↦ e_{f(i, j)}`.
    fn from_action(n: usize, dim: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let gens = (1..n)
            .map(|i| SparseMatrix::from_triplets(dim, dim, (0..dim).map(|j| (f(i, j), j, int(1)))))
            .collect();
        Self::new(n, dim, gens).expect("permutation action")
    }

    pub fn tensor(&self, other: &SnModule) -> Result<Self> {
        self.check_same_group(other)?;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.kron(b))
            .collect();
        Self::new(self.n, self.dim * other.dim, gens)
    }

    pub fn direct_sum(&self, other: &SnModule) -> Result<Self> {
        self.check_same_group(other)?;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Self::new(self.n, self.dim + other.dim, gens)
    }

    /// The same representation in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &SparseMatrix) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidSpec("change of basis is singular".into()))?;
        let gens = self
            .gens
            .iter()
            .map(|g| inv.mul(g)?.mul(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.n, self.dim, gens)
    }

    /// Restriction to an invariant subspace, in the coordinates of its echelon basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Self> {
        if sub.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(self.dim, sub.ambient_dim()));
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for (i, g) in self.gens.iter().enumerate() {
            let cols = sub
                .basis()
                .iter()
                .map(|b| {
                    let image = g.apply(b)?;
                    sub.coordinates(&image)
                        .map(|c| SparseVec::from_dense(&c))
                        .ok_or_else(|| {
                            Error::NotContained(format!("subspace not stable under t_{}", i + 1))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            gens.push(SparseMatrix::from_columns(sub.dim(), &cols));
        }
        Self::new(self.n, sub.dim(), gens)
    }

    fn check_same_group(&self, other: &SnModule) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(format!(
                "S_{} vs S_{}",
                self.n, other.n
            )))
        }
    }

    /// `M^{S_λ}`.
    pub fn invariants(&self, lambda: &Composition) -> Result<Subspace> {
        if lambda.weight() != self.n {
            return Err(Error::WeightMismatch(lambda.weight(), self.n));
        }
        let id = SparseMatrix::identity(self.dim);
        let ops = young_generator_indices(lambda)
            .into_iter()
            .map(|i| self.gens[i - 1].add_scaled(&int(-1), &id))
            .collect::<Result<Vec<_>>>()?;
        Subspace::joint_kernel(self.dim, &ops)
    }

    /// Multiplicity of the sign representation: `dim {v : t_i v = -v for all i}`.
    pub fn sign_multiplicity(&self) -> Result<usize> {
        let id = SparseMatrix::identity(self.dim);
        let ops = self
            .gens
            .iter()
            .map(|g| g.add_scaled(&int(1), &id))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::joint_kernel(self.dim, &ops)?.dim())
    }

    pub fn cubic_diagram(&self) -> Result<CubicDiagram> {
        let spaces = compositions(self.n)?
            .iter()
            .map(|l| self.invariants(l).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;
        CubicDiagram::new(self.n, self.dim, spaces)
    }
}

/// Lexicographic successor; false at the last arrangement.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Subspaces `Q_x ⊆ V` indexed by the vertices of the `(w-1)`-cube, with
/// `Q_x ⊆ Q_{x+e_i}` along every edge.
#[derive(Clone, Debug)]
pub struct CubicDiagram {
    weight: usize,
    ambient: usize,
    vertices: Vec<Composition>,
    spaces: Vec<Arc<Subspace>>,
}

impl CubicDiagram {
    /// `spaces` follow the order of [`compositions`]; containment is checked on edges.
    pub fn new(weight: usize, ambient: usize, spaces: Vec<Arc<Subspace>>) -> Result<Self> {
        let vertices = compositions(weight)?;
        if spaces.len() != vertices.len() {
            return Err(Error::SizeMismatch(format!(
                "{} subspaces for {} vertices",
                spaces.len(),
                vertices.len()
            )));
        }
        for s in &spaces {
            if s.ambient_dim() != ambient {
                return Err(Error::AmbientMismatch(ambient, s.ambient_dim()));
            }
        }
        let d = Self {
            weight,
            ambient,
            vertices,
            spaces,
        };
        for (k, lambda) in d.vertices.iter().enumerate() {
            for (_, mu) in lambda.subdivisions() {
                if !d.space(&mu).contains_subspace(&d.spaces[k]) {
                    return Err(Error::NotContained(format!("Q{lambda} ⊄ Q{mu}")));
                }
            }
        }
        Ok(d)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Composition] {
        &self.vertices
    }

    fn position(&self, lambda: &Composition) -> usize {
        self.vertices
            .binary_search_by(|v| v.to_binary().cmp(&lambda.to_binary()))
            .expect("vertex of the cube")
    }

    pub fn space(&self, lambda: &Composition) -> &Subspace {
        &self.spaces[self.position(lambda)]
    }

    /// Degree `k` is `⊕_{l(λ) = k+1} Q_λ`; the differential is the signed sum of
    /// the edge inclusions. Degrees are shifted by `offset`.
    pub fn complex(&self, offset: i64) -> Result<CochainComplex> {
        let w = self.weight;
        let by_degree: Vec<Vec<&Composition>> = (0..w)
            .map(|k| self.vertices.iter().filter(|v| v.len() == k + 1).collect())
            .collect();
        let dims: Vec<usize> = by_degree
            .iter()
            .map(|vs| vs.iter().map(|v| self.space(v).dim()).sum())
            .collect();
        let mut diffs = Vec::with_capacity(w.saturating_sub(1));
        for k in 0..w.saturating_sub(1) {
            let mut target_offset = std::collections::HashMap::new();
            let mut acc = 0;
            for v in &by_degree[k + 1] {
                target_offset.insert((*v).clone(), acc);
                acc += self.space(v).dim();
            }
            let mut triplets = Vec::new();
            let mut col = 0;
            for v in &by_degree[k] {
                let q = self.space(v);
                for b in q.basis() {
                    for (sign, mu) in v.subdivisions() {
                        let target = self.space(&mu);
                        let coords = target.coordinates(b).expect("checked containment");
                        let off = target_offset[&mu];
                        for (r, c) in coords.into_iter().enumerate() {
                            if !c.is_zero() {
                                triplets.push((off + r, col, c * int(sign as i64)));
                            }
                        }
                    }
                    col += 1;
                }
            }
            diffs.push(SparseMatrix::from_triplets(dims[k + 1], dims[k], triplets));
        }
        CochainComplex::new(offset, dims, diffs)
    }

    pub fn cohomology(&self, offset: i64) -> Result<CohomologyDims> {
        Ok(self.complex(offset)?.cohomology_dims())
    }
}

/// Cohomology of the cubic complex of invariants, degrees `0..n-1`.
pub fn cubic_cohomology(m: &SnModule) -> Result<CohomologyDims> {
    m.cubic_diagram()?.cohomology(0)
}

/// `dim M / Σ_i (1 + t_i) M`, computed without the cube.
pub fn top_quotient(m: &SnModule) -> Result<usize> {
    let id = SparseMatrix::identity(m.dim());
    let mut rows = Vec::new();
    for g in m.generators() {
        rows.extend(
            g.add_scaled(&int(1), &id)?
                .transpose()
                .row_vectors()
                .iter()
                .cloned(),
        );
    }
    Ok(m.dim() - rank(&SparseMatrix::from_rows(m.dim(), rows)))
}

/// A random module of `S_n` built from small permutation modules, tensor
/// products and sums, then written in a random unimodular basis.
pub fn random_module<R: Rng>(rng: &mut R, n: usize, max_dim: usize) -> Result<(SnModule, String)> {
    let (mut m, mut desc) = random_block(rng, n)?;
    for _ in 0..3 {
        if m.dim() >= max_dim {
            break;
        }
        let (b, bd) = random_block(rng, n)?;
        if rng.gen_bool(0.5) && m.dim() * b.dim() <= max_dim {
            m = m.tensor(&b)?;
            desc = format!("({desc} ⊗ {bd})");
        } else if m.dim() + b.dim() <= max_dim {
            m = m.direct_sum(&b)?;
            desc = format!("({desc} ⊕ {bd})");
        }
    }
    let p = random_unimodular(rng, m.dim());
    Ok((m.change_basis(&p)?, desc))
}

fn random_block<R: Rng>(rng: &mut R, n: usize) -> Result<(SnModule, String)> {
    Ok(match rng.gen_range(0..5) {
        0 => (SnModule::trivial(n), "triv".into()),
        1 => (SnModule::sign(n), "sgn".into()),
        2 => (SnModule::natural(n), "nat".into()),
        3 => (
            SnModule::natural(n).tensor(&SnModule::sign(n))?,
            "nat⊗sgn".into(),
        ),
        _ => {
            let all = compositions(n)?;
            let small: Vec<&Composition> = all.iter().filter(|l| multinomial(l) <= 8).collect();
            let lambda = small.choose(rng).expect("(n) is always small");
            (
                SnModule::permutation_module(lambda)?,
                format!("Q[S/S{lambda}]"),
            )
        }
    })
}

/// `P · L · U` with `P` a permutation, `L` and `U` unitriangular with entries in `-2..=2`.
fn random_unimodular<R: Rng>(rng: &mut R, d: usize) -> SparseMatrix {
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let p = SparseMatrix::from_triplets(d, d, (0..d).map(|j| (perm[j], j, int(1))));
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for i in 0..d {
        lower.push((i, i, int(1)));
        upper.push((i, i, int(1)));
        for j in 0..i {
            lower.push((i, j, int(rng.gen_range(-2..=2))));
            upper.push((j, i, int(rng.gen_range(-2..=2))));
        }
    }
    let l = SparseMatrix::from_triplets(d, d, lower);
    let u = SparseMatrix::from_triplets(d, d, upper);
    p.mul(&l).and_then(|x| x.mul(&u)).expect("square factors")
}

/// One row of the simplex count of the relative cube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeCubeRow {
    pub m: usize,
    /// Binary `n × (m+1)` matrices with non-decreasing rows, distinct columns,
    /// first column zero and last column all ones.
    pub simplices: u128,
    /// `Σ_{λ ⊨ n, l(λ) = m} n! / ∏ λ_i!`.
    pub multinomial_sum: u128,
}

/// Both counts for `m = 1..=n`.
pub fn relative_cube_dims(n: usize) -> Result<Vec<RelativeCubeRow>> {
    if n == 0 || n > 10 {
        return Err(Error::LimitExceeded(format!("relative cube for n = {n}")));
    }
    let full: u32 = (1u32 << n) - 1;
    // Columns as bitmasks over rows; non-decreasing rows means each column
    // contains the previous one, distinct columns means strictly.
    fn chains(cur: u32, full: u32, len: usize, counts: &mut [u128]) {
        if cur == full {
            counts[len] += 1;
            return;
        }
        let free = full & !cur;
        let mut sub = free;
        while sub != 0 {
            chains(cur | sub, full, len + 1, counts);
            sub = (sub - 1) & free;
        }
    }
    let mut counts = vec![0u128; n + 1];
    chains(0, full, 0, &mut counts);
    let comps = compositions(n)?;
    Ok((1..=n)
        .map(|m| RelativeCubeRow {
            m,
            simplices: counts[m],
            multinomial_sum: comps.iter().filter(|l| l.len() == m).map(multinomial).sum(),
        })
        .collect())
}
