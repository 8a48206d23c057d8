//! Degenerate affine Hecke algebras `Λ_n` in the normal form `y^a σ`.
//!
//! `Λ_n` is generated by `t_1, ..., t_{n-1}` and `y_1, ..., y_n` with the `S_n`
//! relations, commuting `y`'s, `t_i y_j = y_j t_i` for `j ≠ i, i+1`, and
//! `y_i t_i - t_i y_{i+1} = 1`. Moving a generator right past a polynomial uses
//! `t_i f = (s_i f) t_i + ∂_i f` with `∂_i f = (f - s_i f)/(y_i - y_{i+1})`.
//!
//! The algebra is infinite-dimensional; the finite slice used for linear
//! algebra consists of the `y^a σ` with every exponent `a_i ≤ D`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::One;

use super::{Element, MultiplicativeSequence};
use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::exactla::{LinComb, Scalar};
use crate::symgrp::{enumerate, young_generator_indices, GroupAlgebraElement, Permutation};

pub const DEFAULT_TRUNCATION: u32 = 3;

const LEVEL_LIMIT: usize = 200_000;

/// A polynomial in `y_1, ..., y_n`, keyed by exponent vectors.
pub type Poly = LinComb<Vec<u8>>;

/// Basis label `y^a σ`, ordered by total degree, then exponents, then `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeckeLabel {
    pub exps: Vec<u8>,
    pub perm: Permutation,
}

impl HeckeLabel {
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0) as u32
    }
}

impl Ord for HeckeLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
            .then_with(|| self.perm.cmp(&other.perm))
    }
}

impl PartialOrd for HeckeLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A generator of `Λ_n`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeGen {
    Y(usize),
    T(usize),
}

type PermPoly = BTreeMap<Permutation, Poly>;

/// The sequence `Λ_*` with `μ_{m,n}` shifting generators of the second factor by `m`.
#[derive(Debug)]
pub struct Hecke {
    bound: u32,
    memo: Mutex<HashMap<(Permutation, Vec<u8>), PermPoly>>,
}

impl Clone for Hecke {
    fn clone(&self) -> Self {
        Self::new(self.bound)
    }
}

/// `s_i` applied to an exponent vector (1-based `i`).
fn swap_exps(a: &[u8], i: usize) -> Vec<u8> {
    let mut b = a.to_vec();
    b.swap(i - 1, i);
    b
}

/// Divided difference `∂_i` of the monomial `y^a`.
pub fn divided_difference(a: &[u8], i: usize) -> Poly {
    let (p, q) = (a[i - 1], a[i]);
    let mut out = Poly::zero();
    if p == q {
        return out;
    }
    let (hi, lo, sign) = if p > q { (p, q, 1) } else { (q, p, -1) };
    // y_i^lo y_{i+1}^lo (y_i^{hi-lo} - y_{i+1}^{hi-lo}) / (y_i - y_{i+1})
    for k in 0..(hi - lo) {
        let mut e = a.to_vec();
        e[i - 1] = lo + k;
        e[i] = lo + (hi - lo - 1 - k);
        out.add_term(e, crate::exactla::int(sign));
    }
    out
}

fn add_perm_poly(acc: &mut PermPoly, perm: Permutation, f: &Poly, c: &Scalar) {
    let entry = acc.entry(perm.clone()).or_default();
    entry.add_scaled(c, f);
    if entry.is_zero() {
        acc.remove(&perm);
    }
}

impl Hecke {
    pub fn new(bound: u32) -> Self {
        assert!(bound <= 60, "truncation bound too large");
        Self {
            bound,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `σ y^a = Σ_π f_π(y) π`.
    fn perm_times_monomial(&self, sigma: &Permutation, a: &[u8]) -> PermPoly {
        if sigma.is_identity() {
            return PermPoly::from([(sigma.clone(), Poly::basis(a.to_vec()))]);
        }
        let key = (sigma.clone(), a.to_vec());
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        // σ = σ' t_i with l(σ') < l(σ); then σ f = σ'(s_i f) t_i + σ'(∂_i f).
        let i = sigma.right_descents()[0];
        let n = sigma.n();
        let ti = Permutation::transposition(n, i);
        let shorter = sigma * &ti;
        let mut out = PermPoly::new();
        for (pi, f) in self.perm_times_monomial(&shorter, &swap_exps(a, i)) {
            add_perm_poly(&mut out, &pi * &ti, &f, &Scalar::one());
        }
        for (e, c) in divided_difference(a, i).iter() {
            for (pi, f) in self.perm_times_monomial(&shorter, e) {
                add_perm_poly(&mut out, pi, &f, c);
            }
        }
        self.memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// The label of a single generator at level `n`.
    pub fn generator(&self, n: usize, g: HeckeGen) -> Result<Element<HeckeLabel>> {
        match g {
            HeckeGen::Y(i) if i >= 1 && i <= n => {
                let mut exps = vec![0u8; n];
                exps[i - 1] = 1;
                Ok(LinComb::basis(HeckeLabel {
                    exps,
                    perm: Permutation::identity(n),
                }))
            }
            HeckeGen::T(i) if i >= 1 && i < n => Ok(LinComb::basis(HeckeLabel {
                exps: vec![0; n],
                perm: Permutation::transposition(n, i),
            })),
            other => Err(Error::SizeMismatch(format!(
                "{other:?} is not a generator of Λ_{n}"
            ))),
        }
    }

    pub fn permutation(&self, perm: &Permutation) -> Element<HeckeLabel> {
        LinComb::basis(HeckeLabel {
            exps: vec![0; perm.n()],
            perm: perm.clone(),
        })
    }

    /// Normal form of a word in the generators; surviving terms must respect the bound.
    pub fn normal_form(&self, n: usize, word: &[HeckeGen]) -> Result<Element<HeckeLabel>> {
        let mut acc = self.unit(n);
        for &g in word {
            acc = super::multiply_unbounded(self, n, &acc, &self.generator(n, g)?)?;
        }
        self.check_truncation(&acc)?;
        Ok(acc)
    }

    /// `∂_i(στ) = ∂_i(σ) τ + σ ∂_{σ^{-1}(i)}(τ)` for all `σ, τ ∈ S_n`, `1 ≤ i ≤ n`.
    pub fn check_twisted_leibniz(&self, n: usize) -> Result<bool> {
        let perms = enumerate(n)?;
        for s in &perms {
            for t in &perms {
                for i in 1..=n {
                    let lhs = self.partial(i, &s.compose(t)?)?;
                    let a = self
                        .partial(i, s)?
                        .mul(&GroupAlgebraElement::from_perm(t.clone()))?;
                    let j = s.inverse().apply(i);
                    let b = GroupAlgebraElement::from_perm(s.clone()).mul(&self.partial(j, t)?)?;
                    if lhs != a.add(&b) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every permutation in `∂_i(σ)` is shorter than `σ`.
    pub fn check_partial_lowers_length(&self, n: usize) -> Result<bool> {
        for s in enumerate(n)? {
            for i in 1..=n {
                if let Some(l) = self.partial(i, &s)?.max_length() {
                    if l >= s.length() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `∂_i(σ) = y_i σ - σ y_{σ^{-1}(i)}`, an element of `Q[S_n]`.
    pub fn partial(&self, i: usize, sigma: &Permutation) -> Result<GroupAlgebraElement> {
        let n = sigma.n();
        let s = self.permutation(sigma);
        let j = sigma.inverse().apply(i);
        let left = super::multiply_unbounded(self, n, &self.generator(n, HeckeGen::Y(i))?, &s)?;
        let right = super::multiply_unbounded(self, n, &s, &self.generator(n, HeckeGen::Y(j))?)?;
        let diff = left.minus(&right);
        let mut terms = Vec::new();
        for (label, c) in diff.iter() {
            if label.degree() != 0 {
                return Err(Error::RelationCheck(format!(
                    "∂_{i}({sigma}) has a term of y-degree {}",
                    label.degree()
                )));
            }
            terms.push((label.perm.clone(), c.clone()));
        }
        Ok(GroupAlgebraElement::from_terms(n, terms))
    }
}

impl MultiplicativeSequence for Hecke {
    type Label = HeckeLabel;

    fn id(&self) -> String {
        format!("hecke(D={})", self.bound)
    }

    fn basis(&self, n: usize) -> Result<Vec<HeckeLabel>> {
        let perms = enumerate(n)?;
        let per = (self.bound as usize + 1)
            .checked_pow(n as u32)
            .unwrap_or(usize::MAX);
        if per.saturating_mul(perms.len()) > LEVEL_LIMIT {
            return Err(Error::LimitExceeded(format!(
                "Hecke level {n} at bound {} exceeds {LEVEL_LIMIT} basis elements",
                self.bound
            )));
        }
        let mut exps: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..n {
            exps = exps
                .into_iter()
                .flat_map(|e| {
                    (0..=self.bound as u8).map(move |k| {
                        let mut v = e.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        let mut out = Vec::with_capacity(exps.len() * perms.len());
        for e in exps {
            for p in &perms {
                out.push(HeckeLabel {
                    exps: e.clone(),
                    perm: p.clone(),
                });
            }
        }
        out.sort();
        Ok(out)
    }

    fn unit(&self, n: usize) -> Element<HeckeLabel> {
        self.permutation(&Permutation::identity(n))
    }

    /// `(y^a σ)(y^b τ) = y^a (σ y^b) τ`.
    fn multiply_basis(
        &self,
        n: usize,
        a: &HeckeLabel,
        b: &HeckeLabel,
    ) -> Result<Element<HeckeLabel>> {
        if a.exps.len() != n || b.exps.len() != n {
            return Err(Error::SizeMismatch(format!("Hecke labels at level {n}")));
        }
        let mut out = LinComb::zero();
        for (pi, f) in self.perm_times_monomial(&a.perm, &b.exps) {
            let perm = pi.compose(&b.perm)?;
            for (e, c) in f.iter() {
                let exps: Vec<u8> = a.exps.iter().zip(e).map(|(x, y)| x + y).collect();
                out.add_term(
                    HeckeLabel {
                        exps,
                        perm: perm.clone(),
                    },
                    c.clone(),
                );
            }
        }
        Ok(out)
    }

    fn mu_basis(
        &self,
        _m: usize,
        _n: usize,
        a: &HeckeLabel,
        b: &HeckeLabel,
    ) -> Result<Element<HeckeLabel>> {
        let mut exps = a.exps.clone();
        exps.extend_from_slice(&b.exps);
        Ok(LinComb::basis(HeckeLabel {
            exps,
            perm: a.perm.direct_sum(&b.perm),
        }))
    }

    fn subalgebra_generators(&self, lambda: &Composition) -> Result<Vec<Element<HeckeLabel>>> {
        let n = lambda.weight();
        let mut out = Vec::new();
        for i in 1..=n {
            out.push(self.generator(n, HeckeGen::Y(i))?);
        }
        for i in young_generator_indices(lambda) {
            out.push(self.generator(n, HeckeGen::T(i))?);
        }
        Ok(out)
    }

    fn generated_by_first_two(&self) -> bool {
        true
    }

    fn check_truncation(&self, x: &Element<HeckeLabel>) -> Result<()> {
        match x.labels().map(HeckeLabel::max_exponent).max() {
            Some(d) if d > self.bound => Err(Error::TruncationOverflow {
                degree: d,
                bound: self.bound,
            }),
            _ => Ok(()),
        }
    }

    fn format_label(&self, label: &HeckeLabel) -> String {
        let mono: Vec<String> = label
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("y{}", i + 1)
                } else {
                    format!("y{}^{e}", i + 1)
                }
            })
            .collect();
        let mono = if mono.is_empty() {
            "1".to_string()
        } else {
            mono.join("")
        };
        format!("{mono}|{}", label.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::seq::tests::check_sequence_axioms;
    use crate::seq::{mu, multiply, multiply_unbounded};
    use HeckeGen::{T, Y};

    #[test]
    fn defining_relation() {
        let h = Hecke::new(1);
        let lhs = h.normal_form(2, &[Y(1), T(1)]).unwrap();
        let t1y2 = h.normal_form(2, &[T(1), Y(2)]).unwrap();
        assert_eq!(lhs, t1y2.plus(&h.unit(2)));
        let diff = h
            .normal_form(3, &[Y(2), T(2)])
            .unwrap()
            .minus(&h.normal_form(3, &[T(2), Y(3)]).unwrap());
        assert_eq!(diff, h.unit(3));
        assert_eq!(
            h.normal_form(3, &[T(1), Y(3)]).unwrap(),
            h.normal_form(3, &[Y(3), T(1)]).unwrap()
        );
    }

    #[test]
    fn braid_and_involution() {
        let h = Hecke::new(2);
        assert_eq!(h.normal_form(3, &[T(1), T(1)]).unwrap(), h.unit(3));
        assert_eq!(
            h.normal_form(3, &[T(1), T(2), T(1)]).unwrap(),
            h.normal_form(3, &[T(2), T(1), T(2)]).unwrap()
        );
        assert_eq!(
            h.normal_form(3, &[Y(1), Y(2)]).unwrap(),
            h.normal_form(3, &[Y(2), Y(1)]).unwrap()
        );
    }

    #[test]
    fn overflow_is_reported() {
        let h = Hecke::new(1);
        assert!(matches!(
            h.normal_form(2, &[Y(1), Y(1)]),
            Err(Error::TruncationOverflow {
                degree: 2,
                bound: 1
            })
        ));
        let y = h.generator(1, Y(1)).unwrap();
        assert!(multiply(&h, 1, &y, &y).is_err());
        assert!(multiply_unbounded(&h, 1, &y, &y).is_ok());
    }

    #[test]
    fn partials_of_generators() {
        let h = Hecke::new(2);
        let n = 4;
        for i in 1..n {
            let ti = Permutation::transposition(n, i);
            assert_eq!(h.partial(i, &ti).unwrap(), GroupAlgebraElement::one(n));
            assert_eq!(
                h.partial(i + 1, &ti).unwrap(),
                GroupAlgebraElement::one(n).scale(&int(-1))
            );
            for j in 1..n {
                if i.abs_diff(j) > 1 {
                    assert!(h
                        .partial(i, &Permutation::transposition(n, j))
                        .unwrap()
                        .is_zero());
                }
            }
        }
    }

    #[test]
    fn twisted_leibniz() {
        let h = Hecke::new(2);
        let s3 = enumerate(3).unwrap();
        for s in &s3 {
            for t in &s3 {
                for i in 1..=3 {
                    let lhs = h.partial(i, &(s * t)).unwrap();
                    let a = h
                        .partial(i, s)
                        .unwrap()
                        .mul(&GroupAlgebraElement::from_perm(t.clone()))
                        .unwrap();
                    let j = s.inverse().apply(i);
                    let b = GroupAlgebraElement::from_perm(s.clone())
                        .mul(&h.partial(j, t).unwrap())
                        .unwrap();
                    assert_eq!(lhs, a.add(&b));
                }
            }
        }
    }

    #[test]
    fn exposed_checks() {
        let h = Hecke::new(2);
        assert!(h.check_twisted_leibniz(3).unwrap());
        assert!(h.check_partial_lowers_length(4).unwrap());
    }

    #[test]
    fn partial_lowers_length() {
        let h = Hecke::new(2);
        for s in enumerate(4).unwrap() {
            for i in 1..=4 {
                let d = h.partial(i, &s).unwrap();
                if let Some(l) = d.max_length() {
                    assert!(l < s.length(), "∂_{i}({s})");
                }
            }
        }
    }

    #[test]
    fn divided_differences() {
        // ∂(y_1^2) = y_1 + y_2, ∂(y_2) = -1
        let d = divided_difference(&[2, 0], 1);
        assert_eq!(
            d,
            Poly::from_terms([(vec![1, 0], int(1)), (vec![0, 1], int(1))])
        );
        assert_eq!(
            divided_difference(&[0, 1], 1),
            Poly::term(vec![0, 0], int(-1))
        );
        assert!(divided_difference(&[3, 3], 1).is_zero());
    }

    #[test]
    fn axioms() {
        let h = Hecke::new(1);
        check_sequence_axioms(&h, 5);
        crate::seq::tests::check_associative_level(&h, 2);
        let y1 = h.generator(1, Y(1)).unwrap();
        let shifted = mu(&h, 1, 1, &h.unit(1), &y1).unwrap();
        assert_eq!(shifted, h.generator(2, Y(2)).unwrap());
        // Associativity on mixed words at level 3.
        let a = h.normal_form(3, &[T(1), Y(2)]).unwrap();
        let b = h.normal_form(3, &[Y(1), T(2)]).unwrap();
        let c = h.normal_form(3, &[T(2), T(1)]).unwrap();
        let ab_c =
            multiply_unbounded(&h, 3, &multiply_unbounded(&h, 3, &a, &b).unwrap(), &c).unwrap();
        let a_bc =
            multiply_unbounded(&h, 3, &a, &multiply_unbounded(&h, 3, &b, &c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn slice_dimensions() {
        let h = Hecke::new(2);
        assert_eq!(h.basis(2).unwrap().len(), 9 * 2);
        assert_eq!(h.basis(0).unwrap().len(), 1);
    }
}
