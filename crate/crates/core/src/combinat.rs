//! Compositions, cube vertices and partition counting.
//!
//! A composition `λ = (λ_1, ..., λ_r)` of `w` is identified with the interval
//! set-partition of `{1, ..., w}` whose `i`-th block has `λ_i` elements, and
//! with the binary vector `x(λ) ∈ {0,1}^{w-1}` whose `j`-th coordinate is 1
//! exactly when `j` and `j+1` lie in different blocks.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    weight: usize,
}

/// A vertex of the `(w-1)`-dimensional cube.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeVertex {
    bits: Vec<bool>,
}

impl CubeVertex {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of coordinates equal to one.
    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Ambient weight `w` of the compositions this vertex encodes.
    pub fn weight(&self) -> usize {
        self.bits.len() + 1
    }

    /// Sign of the cube edge `x -> x + e_i` (`i` is 1-based, `x_i = 0`).
    ///
    /// The edge splits the block containing `i` and `i+1`, which is block
    /// number `1 + Σ_{s<i} x_s`; the sign is `(-1)` to that power.
    pub fn edge_sign(&self, i: usize) -> Result<i32> {
        if i == 0 || i > self.bits.len() || self.bits[i - 1] {
            return Err(Error::InvalidComposition(format!(
                "no cube edge in direction {i} from {self}"
            )));
        }
        let part = 1 + self.bits[..i - 1].iter().filter(|&&b| b).count();
        Ok(parity_sign(part))
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.bits.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(*b))?;
        }
        write!(f, ")")
    }
}

/// `(-1)^k`.
pub fn parity_sign(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        let weight = parts.iter().sum();
        Ok(Self { parts, weight })
    }

    /// The one-part composition `(w)`.
    pub fn single(w: usize) -> Result<Self> {
        Self::new(vec![w])
    }

    /// The composition `(1, ..., 1)` of `w`.
    pub fn ones(w: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::ZeroWeight);
        }
        Self::new(vec![1; w])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_binary(&self) -> CubeVertex {
        let mut bits = vec![false; self.weight - 1];
        let mut pos = 0;
        for &p in &self.parts[..self.parts.len() - 1] {
            pos += p;
            bits[pos - 1] = true;
        }
        CubeVertex { bits }
    }

    pub fn from_binary(x: &CubeVertex) -> Composition {
        let mut parts = Vec::with_capacity(x.ones() + 1);
        let mut current = 1;
        for &b in &x.bits {
            if b {
                parts.push(current);
                current = 1;
            } else {
                current += 1;
            }
        }
        parts.push(current);
        let weight = x.weight();
        Composition { parts, weight }
    }

    /// Finest interval coarsening of both compositions (`x(λ∪μ) = x(λ) ∧ x(μ)`).
    pub fn union(&self, other: &Composition) -> Result<Composition> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.weight, other.weight));
        }
        let a = self.to_binary();
        let b = other.to_binary();
        let bits = a.bits.iter().zip(&b.bits).map(|(x, y)| *x && *y).collect();
        Ok(Composition::from_binary(&CubeVertex { bits }))
    }

    /// Replace part `j` (1-based) by `(a, b)`; returns the sign `(-1)^j` and the result.
    pub fn subdivide(&self, j: usize, a: usize, b: usize) -> Result<(i32, Composition)> {
        if j == 0 || j > self.parts.len() {
            return Err(Error::InvalidSplit {
                part: j,
                size: 0,
                a,
                b,
            });
        }
        let size = self.parts[j - 1];
        if a == 0 || b == 0 || a + b != size {
            return Err(Error::InvalidSplit {
                part: j,
                size,
                a,
                b,
            });
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.extend_from_slice(&self.parts[..j - 1]);
        parts.push(a);
        parts.push(b);
        parts.extend_from_slice(&self.parts[j..]);
        Ok((
            parity_sign(j),
            Composition {
                parts,
                weight: self.weight,
            },
        ))
    }

    /// All single subdivisions `(sign, μ)`, ordered by part index then split point.
    pub fn subdivisions(&self) -> Vec<(i32, Composition)> {
        let mut out = Vec::new();
        for (idx, &p) in self.parts.iter().enumerate() {
            for a in 1..p {
                out.push(self.subdivide(idx + 1, a, p - a).expect("valid split"));
            }
        }
        out
    }

    /// Concatenation `(λ, μ)`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition {
            parts,
            weight: self.weight + other.weight,
        }
    }

    /// Half-open position ranges of the blocks, 0-based.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All `2^{w-1}` compositions of `w`, ascending lexicographically on binary vectors.
pub fn compositions(w: usize) -> Result<Vec<Composition>> {
    if w == 0 {
        return Err(Error::ZeroWeight);
    }
    if w > 40 {
        return Err(Error::LimitExceeded(format!("2^{} compositions", w - 1)));
    }
    let len = w - 1;
    Ok((0u64..(1u64 << len))
        .map(|code| {
            // x_1 is the most significant bit so that numeric order is lexicographic.
            let bits = (0..len).map(|j| (code >> (len - 1 - j)) & 1 == 1).collect();
            Composition::from_binary(&CubeVertex { bits })
        })
        .collect())
}

/// Compositions of `w` into exactly `k` parts, in the order of [`compositions`].
pub fn compositions_into(w: usize, k: usize) -> Result<Vec<Composition>> {
    Ok(compositions(w)?
        .into_iter()
        .filter(|c| c.len() == k)
        .collect())
}

/// Partitions of `n` into distinct odd parts, each listed in decreasing order.
pub fn distinct_odd_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        let mut p = max_part.min(rest);
        if p.is_multiple_of(2) {
            p = p.saturating_sub(1);
        }
        while p >= 1 {
            acc.push(p);
            go(rest - p, p.saturating_sub(2), acc, out);
            acc.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of `∏_{m≥1} (1 + t^{2m-1})` up to `t^N` by polynomial multiplication.
pub fn distinct_odd_series_by_product(max_degree: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; max_degree + 1];
    coeffs[0] = 1;
    let mut part = 1;
    while part <= max_degree {
        for k in (part..=max_degree).rev() {
            coeffs[k] += coeffs[k - part];
        }
        part += 2;
    }
    coeffs
}

/// The same coefficients by enumerating partitions.
pub fn distinct_odd_series_by_enumeration(max_degree: usize) -> Vec<u64> {
    (0..=max_degree)
        .map(|n| distinct_odd_partitions(n).len() as u64)
        .collect()
}

/// `s_0, ..., s_N`: partitions of `n` into distinct odd parts.
///
/// Both routes are evaluated; a disagreement is a bug and panics.
pub fn distinct_odd_partition_series(max_degree: usize) -> Vec<u64> {
    let product = distinct_odd_series_by_product(max_degree);
    let enumerated = distinct_odd_series_by_enumeration(max_degree);
    assert_eq!(product, enumerated, "partition series routes disagree");
    product
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `w! / ∏ λ_i!`, the number of cosets of the Young subgroup `S_λ`.
pub fn multinomial(lambda: &Composition) -> u128 {
    let mut acc = factorial(lambda.weight());
    for &p in lambda.parts() {
        acc /= factorial(p);
    }
    acc
}
