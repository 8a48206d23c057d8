use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use super::{Element, MultiplicativeSequence};
use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::exactla::{format_scalar, int, parse_scalar, LinComb, Scalar};
use crate::symgrp::{enumerate, young_generators, Permutation};

/// Largest basis size of a level of the skew sequence.
const LEVEL_LIMIT: usize = 200_000;

/// A finite-dimensional commutative associative unital algebra given by
/// structure constants `e_i e_j = Σ_k table[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativeAlgebraSpec {
    dim: usize,
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    names: Vec<String>,
}

#[derive(Deserialize)]
struct AlgebraJson {
    dim: usize,
    table: Vec<Vec<Vec<serde_json::Value>>>,
    unit: Vec<serde_json::Value>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

fn scalar_from_json(v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::String(s) => parse_scalar(s),
        serde_json::Value::Number(n) if n.is_i64() => Ok(int(n.as_i64().unwrap())),
        other => Err(Error::InvalidSpec(format!(
            "expected an exact rational string or integer, got {other}"
        ))),
    }
}

/// Outcome of the zero-divisor search; passing it does not prove the algebra is a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainCheck {
    pub dim_above_one: bool,
    pub zero_divisor_found: bool,
    pub trials: usize,
}

impl DomainCheck {
    pub fn passed(&self) -> bool {
        self.dim_above_one && !self.zero_divisor_found
    }
}

impl CommutativeAlgebraSpec {
    /// Validates shape, commutativity, associativity and the unit law.
    pub fn new(
        dim: usize,
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        if dim == 0 || dim > 16 {
            return Err(Error::InvalidSpec(format!(
                "algebra dimension {dim} outside 1..=16"
            )));
        }
        let shape_ok = table.len() == dim
            && table
                .iter()
                .all(|r| r.len() == dim && r.iter().all(|c| c.len() == dim))
            && unit.len() == dim;
        if !shape_ok {
            return Err(Error::InvalidSpec(
                "structure constants have the wrong shape".into(),
            ));
        }
        let names = match names {
            Some(n) if n.len() == dim => n,
            Some(_) => return Err(Error::InvalidSpec("one name per basis element".into())),
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        let spec = Self {
            dim,
            table,
            unit,
            names,
        };
        for i in 0..dim {
            for j in 0..dim {
                if spec.table[i][j] != spec.table[j][i] {
                    return Err(Error::InvalidSpec(format!("e{i}e{j} ≠ e{j}e{i}")));
                }
                for k in 0..dim {
                    let left = spec.product(&spec.table[i][j], &spec.unit_vector(k));
                    let right = spec.product(&spec.unit_vector(i), &spec.table[j][k]);
                    if left != right {
                        return Err(Error::InvalidSpec(format!(
                            "(e{i}e{j})e{k} ≠ e{i}(e{j}e{k})"
                        )));
                    }
                }
            }
            if spec.product(&spec.unit, &spec.unit_vector(i)) != spec.unit_vector(i) {
                return Err(Error::InvalidSpec(format!("unit does not fix e{i}")));
            }
        }
        Ok(spec)
    }

    /// `Q[x]/(x^2 - 2)` on the basis `(1, x)`.
    pub fn quadratic_default() -> Self {
        let z = Scalar::zero;
        let table = vec![
            vec![vec![int(1), z()], vec![z(), int(1)]],
            vec![vec![z(), int(1)], vec![int(2), z()]],
        ];
        Self::new(
            2,
            table,
            vec![int(1), z()],
            Some(vec!["1".into(), "x".into()]),
        )
        .expect("valid default algebra")
    }

    /// `Q[x]/(x^k)` on the monomial basis.
    pub fn truncated_polynomial(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSpec("Q[x]/(x^0) is the zero ring".into()));
        }
        let table = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let mut v = vec![Scalar::zero(); k];
                        if i + j < k {
                            v[i + j] = Scalar::one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![Scalar::zero(); k];
        unit[0] = Scalar::one();
        let names = (0..k)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        Self::new(k, table, unit, Some(names))
    }

    /// The ground field `Q`.
    pub fn rationals() -> Self {
        Self::new(
            1,
            vec![vec![vec![int(1)]]],
            vec![int(1)],
            Some(vec!["1".into()]),
        )
        .expect("valid algebra")
    }

    /// Parse `{"dim": d, "table": [[[c]]], "unit": [c], "names": [..]}` with
    /// rationals as strings (integers may be bare numbers).
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_str(text)?;
        let table = raw
            .table
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.iter().map(scalar_from_json).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let unit = raw
            .unit
            .iter()
            .map(scalar_from_json)
            .collect::<Result<Vec<_>>>()?;
        Self::new(raw.dim, table, unit, raw.names)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let q = |v: &Vec<Scalar>| v.iter().map(format_scalar).collect::<Vec<_>>();
        serde_json::json!({
            "dim": self.dim,
            "table": self.table.iter().map(|r| r.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "unit": q(&self.unit),
            "names": self.names,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    /// Search for zero divisors among products of random small integer combinations.
    pub fn domain_heuristic(&self, seed: u64, trials: usize) -> DomainCheck {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut found = false;
        for _ in 0..trials {
            let mut draw =
                || -> Vec<Scalar> { (0..self.dim).map(|_| int(rng.gen_range(-3..=3))).collect() };
            let (a, b) = (draw(), draw());
            if a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
                continue;
            }
            if self.product(&a, &b).iter().all(Zero::is_zero) {
                found = true;
                break;
            }
        }
        // Basis pairs are tried as well; they are the most common source of nilpotents.
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.table[i][j].iter().all(Zero::is_zero) {
                    found = true;
                }
            }
        }
        DomainCheck {
            dim_above_one: self.dim > 1,
            zero_divisor_found: found,
            trials,
        }
    }

    /// `e_{i_1} ⊗ ... ⊗ e_{i_n}` expansion of a tensor product of vectors.
    fn expand(&self, factors: &[Vec<Scalar>]) -> Vec<(Vec<u8>, Scalar)> {
        let mut acc: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (idx, c) in &acc {
                for (k, x) in f.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mut i = idx.clone();
                    i.push(k as u8);
                    next.push((i, c * x));
                }
            }
            acc = next;
        }
        acc
    }
}

/// Basis label `e_{slots} ⊗ σ` of `A^{⊗n} ∗ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewLabel {
    pub slots: Vec<u8>,
    pub perm: Permutation,
}

/// Skew group algebras `A^{⊗n} ∗ S_n` with `(a⊗σ)(b⊗τ) = a σ(b) ⊗ στ`,
/// where `σ` moves the tensor factor in slot `j` to slot `σ(j)`.
#[derive(Clone, Debug)]
pub struct Skew {
    alg: CommutativeAlgebraSpec,
    /// For the polynomial slice: the largest slot degree in the level bases.
    slice: Option<usize>,
}

impl Skew {
    pub fn new(alg: CommutativeAlgebraSpec) -> Self {
        Self { alg, slice: None }
    }

    /// `A = Q[x]` with level bases restricted to slot degree `≤ d`.
    ///
    /// Arithmetic happens in `Q[x]/(x^{2d+2})`; a product that would reach
    /// `x^{2d+2}` is rejected, so every computed product agrees with `Q[x]`.
    pub fn polynomial_slice(d: usize) -> Result<Self> {
        if d == 0 || d > 6 {
            return Err(Error::InvalidSpec(format!(
                "polynomial slice degree {d} outside 1..=6"
            )));
        }
        Ok(Self {
            alg: CommutativeAlgebraSpec::truncated_polynomial(2 * d + 2)?,
            slice: Some(d),
        })
    }

    pub fn slice(&self) -> Option<usize> {
        self.slice
    }

    /// Dimension of the slice of `A` spanned by level-one basis slots.
    pub fn slot_dim(&self) -> usize {
        self.slice.map_or(self.alg.dim, |d| d + 1)
    }

    pub fn algebra(&self) -> &CommutativeAlgebraSpec {
        &self.alg
    }

    fn tensor_with_perm(&self, factors: &[Vec<Scalar>], perm: &Permutation) -> Element<SkewLabel> {
        LinComb::from_terms(self.alg.expand(factors).into_iter().map(|(slots, c)| {
            (
                SkewLabel {
                    slots,
                    perm: perm.clone(),
                },
                c,
            )
        }))
    }

    /// `1 ⊗ ... ⊗ a ⊗ ... ⊗ 1` with `a` in slot `i` (1-based), times the identity.
    pub fn slot_insertion(&self, n: usize, i: usize, a: &[Scalar]) -> Element<SkewLabel> {
        let mut factors = vec![self.alg.unit.clone(); n];
        factors[i - 1] = a.to_vec();
        self.tensor_with_perm(&factors, &Permutation::identity(n))
    }

    /// `Σ_i a^{(i)}` in `A_n`.
    pub fn diagonal_insertion(&self, n: usize, a: &[Scalar]) -> Element<SkewLabel> {
        let mut out = LinComb::zero();
        for i in 1..=n {
            out.add_scaled(&Scalar::one(), &self.slot_insertion(n, i, a));
        }
        out
    }

    /// `1^{⊗n} ⊗ σ`.
    pub fn permutation(&self, perm: &Permutation) -> Element<SkewLabel> {
        let factors = vec![self.alg.unit.clone(); perm.n()];
        self.tensor_with_perm(&factors, perm)
    }
}

impl MultiplicativeSequence for Skew {
    type Label = SkewLabel;

    fn id(&self) -> String {
        match self.slice {
            Some(d) => format!("skew(poly≤{d})"),
            None => format!("skew(dim={})", self.alg.dim),
        }
    }

    fn basis(&self, n: usize) -> Result<Vec<SkewLabel>> {
        let perms = enumerate(n)?;
        let slot_dim = self.slot_dim();
        let count = slot_dim.checked_pow(n as u32).unwrap_or(usize::MAX);
        if count.saturating_mul(perms.len()) > LEVEL_LIMIT {
            return Err(Error::LimitExceeded(format!(
                "skew level {n} has more than {LEVEL_LIMIT} basis elements"
            )));
        }
        let mut multi: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..n {
            multi = multi
                .into_iter()
                .flat_map(|m| {
                    (0..slot_dim as u8).map(move |k| {
                        let mut v = m.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        let mut out = Vec::with_capacity(multi.len() * perms.len());
        for slots in multi {
            for p in &perms {
                out.push(SkewLabel {
                    slots: slots.clone(),
                    perm: p.clone(),
                });
            }
        }
        Ok(out)
    }

    fn unit(&self, n: usize) -> Element<SkewLabel> {
        self.permutation(&Permutation::identity(n))
    }

    fn multiply_basis(&self, n: usize, a: &SkewLabel, b: &SkewLabel) -> Result<Element<SkewLabel>> {
        if a.slots.len() != n || b.slots.len() != n {
            return Err(Error::SizeMismatch(format!("skew labels at level {n}")));
        }
        let mut moved = vec![0u8; n];
        for (j, &bj) in b.slots.iter().enumerate() {
            moved[a.perm.apply(j + 1) - 1] = bj;
        }
        if self.slice.is_some() {
            if let Some(k) =
                (0..n).find(|&k| a.slots[k] as usize + moved[k] as usize >= self.alg.dim)
            {
                return Err(Error::TruncationOverflow {
                    degree: (a.slots[k] + moved[k]) as u32,
                    bound: self.alg.dim as u32 - 1,
                });
            }
        }
        let factors: Vec<Vec<Scalar>> = (0..n)
            .map(|k| self.alg.table[a.slots[k] as usize][moved[k] as usize].clone())
            .collect();
        Ok(self.tensor_with_perm(&factors, &a.perm.compose(&b.perm)?))
    }

    fn mu_basis(
        &self,
        _m: usize,
        _n: usize,
        a: &SkewLabel,
        b: &SkewLabel,
    ) -> Result<Element<SkewLabel>> {
        let mut slots = a.slots.clone();
        slots.extend_from_slice(&b.slots);
        Ok(LinComb::basis(SkewLabel {
            slots,
            perm: a.perm.direct_sum(&b.perm),
        }))
    }

    fn subalgebra_generators(&self, lambda: &Composition) -> Result<Vec<Element<SkewLabel>>> {
        let n = lambda.weight();
        let mut out: Vec<Element<SkewLabel>> = young_generators(lambda)
            .iter()
            .map(|t| self.permutation(t))
            .collect();
        for i in 1..=n {
            for k in 0..self.slot_dim() {
                let e = self.alg.unit_vector(k);
                if e != self.alg.unit {
                    out.push(self.slot_insertion(n, i, &e));
                }
            }
        }
        Ok(out)
    }

    fn generated_by_first_two(&self) -> bool {
        true
    }

    fn format_label(&self, label: &SkewLabel) -> String {
        let slots: Vec<&str> = label
            .slots
            .iter()
            .map(|&k| self.alg.names[k as usize].as_str())
            .collect();
        format!("{}|{}", slots.join("⊗"), label.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::tests::{check_associative_level, check_sequence_axioms};
    use crate::seq::{mu, multiply};

    fn x(n: usize, i: usize) -> Element<SkewLabel> {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        s.slot_insertion(n, i, &[int(0), int(1)])
    }

    #[test]
    fn x_squared_is_two() {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let xx = multiply(&s, 1, &x(1, 1), &x(1, 1)).unwrap();
        assert_eq!(xx, s.unit(1).scale(&int(2)));
    }

    #[test]
    fn pairing_and_twist() {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let xx = mu(&s, 1, 1, &x(1, 1), &x(1, 1)).unwrap();
        assert_eq!(
            xx,
            LinComb::basis(SkewLabel {
                slots: vec![1, 1],
                perm: Permutation::identity(2)
            })
        );
        // t_1 x^{(1)} t_1 = x^{(2)}
        let t = s.permutation(&Permutation::transposition(2, 1));
        let conj = multiply(&s, 2, &multiply(&s, 2, &t, &x(2, 1)).unwrap(), &t).unwrap();
        assert_eq!(conj, x(2, 2));
    }

    #[test]
    fn generators() {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let g = s
            .subalgebra_generators(&Composition::ones(2).unwrap())
            .unwrap();
        assert_eq!(g, vec![x(2, 1), x(2, 2)]);
        let g = s
            .subalgebra_generators(&Composition::single(2).unwrap())
            .unwrap();
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn axioms() {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        check_sequence_axioms(&s, 5);
        check_associative_level(&s, 2);
    }

    #[test]
    fn restricted_products() {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let basis = s.basis(2).unwrap();
        let tensors: Vec<_> = basis.iter().filter(|l| l.perm.is_identity()).collect();
        for a in &tensors {
            for b in &tensors {
                assert_eq!(
                    s.multiply_basis(2, a, b).unwrap(),
                    s.multiply_basis(2, b, a).unwrap()
                );
            }
        }
        for p in enumerate(3).unwrap() {
            for q in enumerate(3).unwrap() {
                let prod = multiply(&s, 3, &s.permutation(&p), &s.permutation(&q)).unwrap();
                assert_eq!(prod, s.permutation(&p.compose(&q).unwrap()));
            }
        }
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let a = CommutativeAlgebraSpec::quadratic_default();
        let text = a.to_json().to_string();
        assert_eq!(CommutativeAlgebraSpec::from_json(&text).unwrap(), a);
        let bad = r#"{"dim": 2, "table": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]], "unit": ["1","0"]}"#;
        assert!(CommutativeAlgebraSpec::from_json(bad).is_ok());
        let noncomm = r#"{"dim": 2, "table": [[["1","0"],["0","1"]],[["1","1"],["0","0"]]], "unit": ["1","0"]}"#;
        assert!(CommutativeAlgebraSpec::from_json(noncomm).is_err());
        let dual = CommutativeAlgebraSpec::from_json(bad).unwrap();
        assert!(!dual.domain_heuristic(1, 50).passed());
        assert!(a.domain_heuristic(1, 200).passed());
    }

    #[test]
    fn polynomial_slice_axioms() {
        let s = Skew::polynomial_slice(1).unwrap();
        assert_eq!(s.basis(2).unwrap().len(), 4 * 2);
        check_sequence_axioms(&s, 4);
        check_associative_level(&s, 2);
        let x2 = multiply(
            &s,
            1,
            &s.slot_insertion(1, 1, &s.algebra().unit_vector(1)),
            &s.slot_insertion(1, 1, &s.algebra().unit_vector(1)),
        )
        .unwrap();
        assert_eq!(x2, s.slot_insertion(1, 1, &s.algebra().unit_vector(2)));
        let top = SkewLabel {
            slots: vec![3],
            perm: Permutation::identity(1),
        };
        assert!(s.multiply_basis(1, &top, &top).is_err());
    }
}
