//! Permutations, Young subgroups and signed class functions.
//!
//! Permutations act on positions `1..=n`. Products are composition of maps,
//! `(p * q)(j) = p(q(j))`, and conjugation is `conjugate(p, σ) = σ p σ^{-1}`.
//! With these conventions `t_1 t_2 ... t_{m-1}` is the cycle `(1 2 ... m)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::combinat::{parity_sign, Composition};
use crate::error::{Error, Result};
use crate::exactla::{int, LinComb, Scalar};

/// Default cap for [`enumerate`].
pub const ENUMERATION_LIMIT: usize = 8;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// The derived order is lexicographic on one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(
            n < 256,
            "permutations of more than 255 points are not supported"
        );
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// From one-line notation with images in `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::SizeMismatch(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(k, &v)| k == v as usize)
        });
        Self { images }
    }

    /// Adjacent transposition `t_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "t_{i} not in S_{n}");
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The cycle `(c_1 c_2 ... c_k)` on 1-based points.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        let mut seen = vec![false; n];
        for &c in points {
            if c == 0 || c > n || seen[c - 1] {
                return Err(Error::SizeMismatch(format!(
                    "bad cycle {points:?} in S_{n}"
                )));
            }
            seen[c - 1] = true;
        }
        for k in 0..points.len() {
            let from = points[k] - 1;
            let to = points[(k + 1) % points.len()] - 1;
            p.images[from] = to as u8;
        }
        Ok(p)
    }

    /// `(1 2 ... m) = t_1 t_2 ... t_{m-1}`.
    pub fn long_cycle(m: usize) -> Self {
        let points: Vec<usize> = (1..=m).collect();
        Self::cycle(m, &points).expect("valid cycle")
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| k == v as usize)
    }

    /// `self ∘ q`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.n() != q.n() {
            return Err(Error::SizeMismatch(format!(
                "S_{} element composed with S_{} element",
                self.n(),
                q.n()
            )));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&j| self.images[j as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    /// `by ∘ self ∘ by^{-1}`.
    pub fn conjugate(&self, by: &Permutation) -> Result<Permutation> {
        by.compose(self)?.compose(&by.inverse())
    }

    /// Disjoint cycles on 0-based points, each starting at its smallest point,
    /// ordered by that point. Fixed points are included.
    pub(crate) fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                c.push(j);
                j = self.images[j] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles0().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i32 {
        let even_cycles = self.cycles0().iter().filter(|c| c.len() % 2 == 0).count();
        parity_sign(even_cycles)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Right descents: `i` with `σ(i) > σ(i+1)`, i.e. `l(σ t_i) < l(σ)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    /// Juxtaposition `self ⊕ q ∈ S_{n+m}`: `q` acts on the last `m` points.
    pub fn direct_sum(&self, q: &Permutation) -> Permutation {
        let shift = self.n() as u8;
        let mut images = self.images.clone();
        images.extend(q.images.iter().map(|&v| v + shift));
        Permutation { images }
    }

    /// Word in adjacent transpositions: `self = t_{w_1} t_{w_2} ... t_{w_k}`, `k = l(σ)`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut p = self.clone();
        // Strip right descents: σ = (σ t_i) t_i with l(σ t_i) = l(σ) - 1.
        while let Some(&i) = p.right_descents().first() {
            word.push(i);
            p = p
                .compose(&Permutation::transposition(p.n(), i))
                .expect("same n");
        }
        word.reverse();
        word
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation sizes must agree")
    }
}

/// All `n!` permutations in lexicographic one-line order, `n ≤ ENUMERATION_LIMIT`.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    enumerate_with_limit(n, ENUMERATION_LIMIT)
}

pub fn enumerate_with_limit(n: usize, limit: usize) -> Result<Vec<Permutation>> {
    if n > limit {
        return Err(Error::LimitExceeded(format!(
            "enumerating S_{n} exceeds the cap S_{limit}"
        )));
    }
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    // Standard next-permutation in lexicographic order.
    while let Some(i) = (1..current.len())
        .rev()
        .find(|&i| current[i - 1] < current[i])
    {
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation {
            images: current.clone(),
        });
    }
    Ok(out)
}

/// Position of `p` in [`enumerate`] order (the Lehmer code read in factorial base).
pub fn lex_rank(p: &Permutation) -> usize {
    let n = p.n();
    let mut rank = 0;
    for i in 0..n {
        let smaller = (i + 1..n).filter(|&j| p.images[j] < p.images[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// Adjacent transpositions `t_i` whose two points share a part of `λ`.
pub fn young_generator_indices(lambda: &Composition) -> Vec<usize> {
    let mut out = Vec::new();
    for r in lambda.blocks() {
        for i in r.start + 1..r.end {
            out.push(i);
        }
    }
    out
}

/// Generators of the Young subgroup `S_{λ_1} × ... × S_{λ_r}`.
pub fn young_generators(lambda: &Composition) -> Vec<Permutation> {
    young_generator_indices(lambda)
        .into_iter()
        .map(|i| Permutation::transposition(lambda.weight(), i))
        .collect()
}

/// An element of `Q[S_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: LinComb<Permutation>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: LinComb::zero(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    pub fn from_perm(p: Permutation) -> Self {
        Self {
            n: p.n(),
            coeffs: LinComb::basis(p),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Scalar)>) -> Self {
        let coeffs = LinComb::from_terms(terms);
        assert!(coeffs.labels().all(|p| p.n() == n), "mixed S_n levels");
        Self { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &LinComb<Permutation> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Permutation) -> Scalar {
        self.coeffs.coeff(p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "Q[S_{}] · Q[S_{}]",
                self.n, other.n
            )));
        }
        Ok(Self {
            n: self.n,
            coeffs: self
                .coeffs
                .bilinear(&other.coeffs, |a, b| LinComb::basis(a * b)),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            coeffs: self.coeffs.plus(&other.coeffs),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            coeffs: self.coeffs.minus(&other.coeffs),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.scale(c),
        }
    }

    /// Largest Coxeter length in the support, `None` for zero.
    pub fn max_length(&self) -> Option<usize> {
        self.coeffs.labels().map(Permutation::length).max()
    }
}

/// The signed conjugation orbit of `π`: every `σπσ^{-1}` with value `sign(σ)`.
///
/// Explores by conjugating with adjacent transpositions and flipping the sign
/// each step. Returns `None` as soon as some element is reached with both signs,
/// which happens exactly when the centralizer of `π` contains an odd permutation.
pub fn signed_orbit(pi: &Permutation) -> Option<BTreeMap<Permutation, i32>> {
    let n = pi.n();
    let gens: Vec<Permutation> = (1..n).map(|i| Permutation::transposition(n, i)).collect();
    let mut values = BTreeMap::new();
    values.insert(pi.clone(), 1);
    let mut queue = VecDeque::from([pi.clone()]);
    while let Some(rho) = queue.pop_front() {
        let s = values[&rho];
        for t in &gens {
            let next = &(t * &rho) * t;
            match values.get(&next) {
                Some(&v) if v != -s => return None,
                Some(_) => {}
                None => {
                    values.insert(next.clone(), -s);
                    queue.push_back(next);
                }
            }
        }
    }
    Some(values)
}

/// Product of consecutive increasing cycles with the given lengths, in order.
pub fn canonical_representative(cycle_type: &[usize]) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut start = 0;
    for &len in cycle_type {
        for k in 0..len {
            let next = if k + 1 == len { start } else { start + k + 1 };
            images[start + k] = next as u8;
        }
        start += len;
    }
    Permutation::from_zero_based(images)
}

/// All partitions of `n` as decreasing sequences, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            acc.push(p);
            go(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Whether every element of the centralizer of a permutation of this cycle type
/// is even. The centralizer is generated by the cycles themselves (sign
/// `(-1)^{k-1}`) and by swaps of two equal cycles of length `k` (sign `(-1)^k`).
pub fn centralizer_is_even(cycle_type: &[usize]) -> bool {
    let cycles_even = cycle_type.iter().all(|&k| k % 2 == 1);
    let mut sorted = cycle_type.to_vec();
    sorted.sort_unstable();
    let swaps_even = sorted.windows(2).all(|w| w[0] != w[1] || w[0] % 2 == 0);
    cycles_even && swaps_even
}

/// A function on `S_n` with `f(σπσ^{-1}) = sign(σ) f(π)`, supported on one class.
///
/// Normalized by `f(c) = 1` for the [`canonical_representative`] `c` of the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedClassFunction {
    n: usize,
    cycle_type: Vec<usize>,
}

impl SignedClassFunction {
    /// `None` unless the class admits a nonzero signed class function.
    pub fn for_cycle_type(cycle_type: &[usize]) -> Option<Self> {
        let mut t = cycle_type.to_vec();
        t.sort_unstable_by(|a, b| b.cmp(a));
        centralizer_is_even(&t).then(|| Self {
            n: t.iter().sum(),
            cycle_type: t,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycle_type(&self) -> &[usize] {
        &self.cycle_type
    }

    pub fn representative(&self) -> Permutation {
        canonical_representative(&self.cycle_type)
    }

    /// `f(π)`: the sign of any `σ` with `σ c σ^{-1} = π`, or 0 off the class.
    pub fn eval(&self, pi: &Permutation) -> i32 {
        if pi.n() != self.n || pi.cycle_type() != self.cycle_type {
            return 0;
        }
        // Match the cycles of c and π by length; lengths are distinct, so the
        // matching is unique and σ is determined up to rotations of cycles.
        let c = self.representative();
        let mut target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for cyc in pi.cycles0() {
            target.insert(cyc.len(), cyc);
        }
        let mut sigma = vec![0u8; self.n];
        for cyc in c.cycles0() {
            let tc = &target[&cyc.len()];
            for (a, b) in cyc.iter().zip(tc) {
                sigma[*a] = *b as u8;
            }
        }
        Permutation::from_zero_based(sigma).sign()
    }

    /// `c_f = Σ_σ f(σ) σ`, by orbit enumeration with sign checks.
    pub fn to_group_algebra(&self) -> GroupAlgebraElement {
        let orbit = signed_orbit(&self.representative()).expect("class has even centralizer");
        GroupAlgebraElement::from_terms(self.n, orbit.into_iter().map(|(p, s)| (p, int(s as i64))))
    }

    /// `Σ_σ f(σ) a_σ`.
    pub fn pair(&self, a: &GroupAlgebraElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (p, c) in a.coeffs().iter() {
            match self.eval(p) {
                0 => {}
                1 => acc += c,
                _ => acc -= c,
            }
        }
        acc
    }
}

/// `dim V_n`. For `n ≤ ENUMERATION_LIMIT` each class is tested by signed orbit
/// exploration; above that, by the centralizer-generator criterion.
pub fn signed_class_dim(n: usize) -> usize {
    if n <= ENUMERATION_LIMIT {
        partitions(n)
            .iter()
            .filter(|t| signed_orbit(&canonical_representative(t)).is_some())
            .count()
    } else {
        partitions(n)
            .iter()
            .filter(|t| centralizer_is_even(t))
            .count()
    }
}

/// One signed class function per class with even centralizer, ordered by cycle
/// type (decreasing lexicographic).
pub fn signed_class_basis(n: usize) -> Vec<SignedClassFunction> {
    partitions(n)
        .iter()
        .filter_map(|t| SignedClassFunction::for_cycle_type(t))
        .collect()
}

/// `e_m = Σ f_m(σ) σ` for the class of the `m`-cycle `t_1 ... t_{m-1}`; zero for even `m`.
pub fn e_element(m: usize) -> GroupAlgebraElement {
    assert!(m >= 1, "e_m needs m ≥ 1");
    match signed_orbit(&Permutation::long_cycle(m)) {
        Some(orbit) => {
            GroupAlgebraElement::from_terms(m, orbit.into_iter().map(|(p, s)| (p, int(s as i64))))
        }
        None => GroupAlgebraElement::zero(m),
    }
}
