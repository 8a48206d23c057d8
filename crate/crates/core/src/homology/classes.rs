use std::collections::BTreeSet;

use super::centralizer::Workspace;
use super::deformation::{GenericQuotient, QuotientRoute, ReducedComplex, WeightQuotient};
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::exactla::{int, LinComb, Scalar};
use crate::seq::{Element, Symmetric};
use crate::symgrp::{
    enumerate, signed_class_basis, GroupAlgebraElement, Permutation, SignedClassFunction,
};

/// Largest weight whose relations are listed for the well-definedness check.
const RELATION_LISTING_LIMIT: usize = 7;

/// `T_w` for `Q[S_w]`, with coordinates `a ↦ (⟨f_K, a⟩)_K` over signed class functions.
///
/// The annihilator of `Σ_j C(1..2_j..1) = span{ρ + t_j ρ t_j}` consists exactly
/// of the signed class functions, so these coordinates identify `T_w`.
pub struct SignedClassQuotient {
    weight: usize,
    basis: Vec<SignedClassFunction>,
}

impl SignedClassQuotient {
    pub fn new(w: usize) -> Result<Self> {
        if w == 0 || w > 20 {
            return Err(Error::LimitExceeded(format!(
                "signed classes at weight {w}"
            )));
        }
        Ok(Self {
            weight: w,
            basis: signed_class_basis(w),
        })
    }

    pub fn basis(&self) -> &[SignedClassFunction] {
        &self.basis
    }
}

impl WeightQuotient<Permutation> for SignedClassQuotient {
    fn weight(&self) -> usize {
        self.weight
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn route(&self) -> QuotientRoute {
        QuotientRoute::SignedClasses
    }

    fn ambient_dim(&self) -> usize {
        factorial(self.weight) as usize
    }

    fn relations_dim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    /// Canonical class representatives; `f_K` is 1 on its own and 0 on the others.
    fn representatives(&self) -> Vec<Element<Permutation>> {
        self.basis
            .iter()
            .map(|f| LinComb::basis(f.representative()))
            .collect()
    }

    fn coordinates(&self, x: &Element<Permutation>) -> Result<Vec<Scalar>> {
        if let Some(p) = x.labels().find(|p| p.n() != self.weight) {
            return Err(Error::SizeMismatch(format!(
                "{p} is not in S_{}",
                self.weight
            )));
        }
        let a = GroupAlgebraElement::from_terms(
            self.weight,
            x.iter().map(|(p, c)| (p.clone(), c.clone())),
        );
        Ok(self.basis.iter().map(|f| f.pair(&a)).collect())
    }

    fn relation_spanning_set(&self) -> Option<Vec<Element<Permutation>>> {
        let w = self.weight;
        if w > RELATION_LISTING_LIMIT {
            return None;
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for rho in enumerate(w).ok()? {
            for j in 1..w {
                let t = Permutation::transposition(w, j);
                let other = &(&t * &rho) * &t;
                let key = if other < rho {
                    (other.clone(), rho.clone())
                } else {
                    (rho.clone(), other.clone())
                };
                if seen.insert(key) {
                    let mut x = LinComb::basis(rho.clone());
                    x.add_term(other, int(1));
                    out.push(x);
                }
            }
        }
        Some(out)
    }
}

/// How the symmetric-group quotients are presented.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetricRoute {
    /// Exact linear algebra in `Q[S_w]` at every weight (`w ≤ 8`).
    Generic,
    /// Signed class functions at every weight.
    SignedClasses,
    /// Generic up to the given weight, signed classes above it.
    Mixed(usize),
}

impl Default for SymmetricRoute {
    fn default() -> Self {
        SymmetricRoute::Mixed(6)
    }
}

pub fn symmetric_models<'p>(
    ws: &'p Workspace<'p, Symmetric>,
    route: SymmetricRoute,
) -> impl Fn(usize) -> Result<Option<Box<dyn WeightQuotient<Permutation>>>> + 'p {
    move |w| {
        let generic = match route {
            SymmetricRoute::Generic => true,
            SymmetricRoute::SignedClasses => false,
            SymmetricRoute::Mixed(limit) => w <= limit,
        };
        if generic {
            match GenericQuotient::new(ws, w) {
                Ok(q) => Ok(Some(Box::new(q) as Box<dyn WeightQuotient<Permutation>>)),
                Err(e) if e.is_resource_guard() => Ok(None),
                Err(e) => Err(e),
            }
        } else {
            match SignedClassQuotient::new(w) {
                Ok(q) => Ok(Some(Box::new(q) as Box<dyn WeightQuotient<Permutation>>)),
                Err(e) if e.is_resource_guard() => Ok(None),
                Err(e) => Err(e),
            }
        }
    }
}

pub fn symmetric_reduced_complex(
    max_weight: usize,
    route: SymmetricRoute,
) -> Result<ReducedComplex<Permutation>> {
    let ws = Workspace::new(&Symmetric);
    let provider = symmetric_models(&ws, route);
    ReducedComplex::build(&Symmetric, max_weight, &provider)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_route_matches_generic() {
        let g = symmetric_reduced_complex(5, SymmetricRoute::Generic).unwrap();
        let c = symmetric_reduced_complex(5, SymmetricRoute::SignedClasses).unwrap();
        assert_eq!(g.cohomology(), c.cohomology());
        for (a, b) in g.summaries().iter().zip(c.summaries()) {
            assert_eq!(a.quotient_dim, b.quotient_dim);
            assert_eq!(a.relations_dim, b.relations_dim);
        }
    }

    #[test]
    fn class_route_through_eight() {
        let r = symmetric_reduced_complex(8, SymmetricRoute::SignedClasses).unwrap();
        let h: Vec<usize> = (1..=8).map(|w| r.cohomology().get(w)).collect();
        assert_eq!(h, vec![1, 0, 1, 1, 1, 1, 1, 2]);
        assert_eq!(r.final_through(), 8);
    }
}
