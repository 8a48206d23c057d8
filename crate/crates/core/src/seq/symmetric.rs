use std::collections::BTreeMap;

use super::{Element, MultiplicativeSequence};
use crate::combinat::Composition;
use crate::error::Result;
use crate::exactla::LinComb;
use crate::symgrp::{enumerate, young_generators, Permutation};

/// Group algebras `Q[S_n]` with `μ_{m,n}(σ ⊗ τ) = σ ⊕ τ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Symmetric;

impl MultiplicativeSequence for Symmetric {
    type Label = Permutation;

    fn id(&self) -> String {
        "symmetric".into()
    }

    fn basis(&self, n: usize) -> Result<Vec<Permutation>> {
        enumerate(n)
    }

    fn unit(&self, n: usize) -> Element<Permutation> {
        LinComb::basis(Permutation::identity(n))
    }

    fn multiply_basis(
        &self,
        _n: usize,
        a: &Permutation,
        b: &Permutation,
    ) -> Result<Element<Permutation>> {
        Ok(LinComb::basis(a.compose(b)?))
    }

    fn mu_basis(
        &self,
        _m: usize,
        _n: usize,
        a: &Permutation,
        b: &Permutation,
    ) -> Result<Element<Permutation>> {
        Ok(LinComb::basis(a.direct_sum(b)))
    }

    fn subalgebra_generators(&self, lambda: &Composition) -> Result<Vec<Element<Permutation>>> {
        Ok(young_generators(lambda)
            .into_iter()
            .map(LinComb::basis)
            .collect())
    }

    /// Orbit sums of the Young subgroup acting by conjugation.
    fn invariant_centralizer(
        &self,
        lambda: &Composition,
    ) -> Option<Result<Vec<Element<Permutation>>>> {
        Some(conjugation_orbit_sums(lambda))
    }

    fn generated_by_first_two(&self) -> bool {
        true
    }

    fn format_label(&self, label: &Permutation) -> String {
        label.to_string()
    }
}

fn conjugation_orbit_sums(lambda: &Composition) -> Result<Vec<Element<Permutation>>> {
    let gens = young_generators(lambda);
    let elements = enumerate(lambda.weight())?;
    let mut orbit_of: BTreeMap<Permutation, usize> = BTreeMap::new();
    let mut orbits: Vec<Vec<Permutation>> = Vec::new();
    for p in elements {
        if orbit_of.contains_key(&p) {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![p.clone()];
        orbit_of.insert(p, id);
        let mut k = 0;
        while k < members.len() {
            let cur = members[k].clone();
            for t in &gens {
                let next = &(t * &cur) * t;
                if !orbit_of.contains_key(&next) {
                    orbit_of.insert(next.clone(), id);
                    members.push(next);
                }
            }
            k += 1;
        }
        orbits.push(members);
    }
    Ok(orbits
        .into_iter()
        .map(|o| LinComb::from_terms(o.into_iter().map(|p| (p, crate::exactla::one()))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::tests::{check_associative_level, check_sequence_axioms};
    use crate::seq::{mu, multiply};

    #[test]
    fn products_and_pairings() {
        let s = Symmetric;
        let t1 = LinComb::basis(Permutation::transposition(2, 1));
        assert_eq!(multiply(&s, 2, &t1, &t1).unwrap(), s.unit(2));
        let t2 = mu(&s, 1, 2, &s.unit(1), &t1).unwrap();
        assert_eq!(t2, LinComb::basis(Permutation::transposition(3, 2)));
        assert_eq!(mu(&s, 2, 1, &s.unit(2), &s.unit(1)).unwrap(), s.unit(3));
    }

    #[test]
    fn generators() {
        let s = Symmetric;
        let g = s
            .subalgebra_generators(&Composition::new(vec![2, 1]).unwrap())
            .unwrap();
        assert_eq!(g, vec![LinComb::basis(Permutation::transposition(3, 1))]);
        assert!(s
            .subalgebra_generators(&Composition::ones(3).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn axioms() {
        check_sequence_axioms(&Symmetric, 5);
        check_associative_level(&Symmetric, 3);
    }

    #[test]
    fn orbit_sums_count_classes() {
        let full = conjugation_orbit_sums(&Composition::single(4).unwrap()).unwrap();
        assert_eq!(full.len(), 5);
        let none = conjugation_orbit_sums(&Composition::ones(3).unwrap()).unwrap();
        assert_eq!(none.len(), 6);
    }
}
