use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, LinComb, SparseMatrix, SparseVec, Subspace};
use crate::seq::{commutator, Element, MultiplicativeSequence};

/// The ordered basis of one level, with a reverse index.
#[derive(Debug)]
pub struct Level<L> {
    n: usize,
    labels: Vec<L>,
    index: HashMap<L, usize>,
}

impl<L: Clone + Ord + std::hash::Hash + std::fmt::Debug> Level<L> {
    pub fn new(n: usize, labels: Vec<L>) -> Self {
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        Self { n, labels, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Coordinates of `x`; every label must lie in the level basis.
    pub fn vector(&self, x: &Element<L>) -> Result<SparseVec> {
        let mut entries = Vec::with_capacity(x.len());
        for (l, c) in x.iter() {
            let i = self.index_of(l).ok_or_else(|| {
                Error::NotContained(format!("label {l:?} outside the level {} basis", self.n))
            })?;
            entries.push((i, c.clone()));
        }
        Ok(SparseVec::from_entries(self.dim(), entries))
    }

    pub fn element(&self, v: &SparseVec) -> Element<L> {
        assert_eq!(v.dim(), self.dim(), "vector outside level {}", self.n);
        LinComb::from_terms(
            v.entries()
                .iter()
                .map(|(i, c)| (self.labels[*i].clone(), c.clone())),
        )
    }
}

/// Which description of `C(λ)` to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CentralizerRoute {
    /// The sequence's own invariant description when present, else the commutant.
    Auto,
    /// Joint kernel of `b ↦ [b, g]` over the subalgebra generators.
    Commutant,
    /// Only the sequence's invariant description.
    Invariants,
}

type Cache<K, V> = Mutex<HashMap<K, Arc<V>>>;

/// Cached levels and centralizers `C(λ) ⊆ A_{|λ|}` of one sequence.
pub struct Workspace<'a, S: MultiplicativeSequence> {
    seq: &'a S,
    route: CentralizerRoute,
    levels: Cache<usize, Level<S::Label>>,
    centralizers: Cache<(Composition, CentralizerRoute), Subspace>,
}

impl<'a, S: MultiplicativeSequence> Workspace<'a, S> {
    pub fn new(seq: &'a S) -> Self {
        Self::with_route(seq, CentralizerRoute::Auto)
    }

    pub fn with_route(seq: &'a S, route: CentralizerRoute) -> Self {
        Self {
            seq,
            route,
            levels: Mutex::new(HashMap::new()),
            centralizers: Mutex::new(HashMap::new()),
        }
    }

    pub fn seq(&self) -> &'a S {
        self.seq
    }

    pub fn route(&self) -> CentralizerRoute {
        self.route
    }

    pub fn level(&self, n: usize) -> Result<Arc<Level<S::Label>>> {
        if let Some(l) = self.levels.lock().unwrap().get(&n) {
            return Ok(l.clone());
        }
        let level = Arc::new(Level::new(n, self.seq.basis(n)?));
        self.levels.lock().unwrap().insert(n, level.clone());
        Ok(level)
    }

    pub fn centralizer(&self, lambda: &Composition) -> Result<Arc<Subspace>> {
        self.centralizer_by(lambda, self.route)
    }

    pub fn centralizer_by(
        &self,
        lambda: &Composition,
        route: CentralizerRoute,
    ) -> Result<Arc<Subspace>> {
        let key = (lambda.clone(), route);
        if let Some(c) = self.centralizers.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let c = Arc::new(match route {
            CentralizerRoute::Commutant => self.commutant(lambda)?,
            CentralizerRoute::Invariants => self.invariants(lambda)?.ok_or_else(|| {
                Error::InvalidSpec(format!("{} has no invariant description", self.seq.id()))
            })?,
            CentralizerRoute::Auto => match self.invariants(lambda)? {
                Some(c) => c,
                None => self.commutant(lambda)?,
            },
        });
        self.centralizers.lock().unwrap().insert(key, c.clone());
        Ok(c)
    }

    fn invariants(&self, lambda: &Composition) -> Result<Option<Subspace>> {
        let Some(vectors) = self.seq.invariant_centralizer(lambda) else {
            return Ok(None);
        };
        let level = self.level(lambda.weight())?;
        let vs = vectors?
            .iter()
            .map(|x| level.vector(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(Subspace::from_vectors(level.dim(), &vs)))
    }

    /// Restricts the candidate space one generator at a time. Commutators may
    /// leave the slice, so their labels are indexed as they appear.
    fn commutant(&self, lambda: &Composition) -> Result<Subspace> {
        let n = lambda.weight();
        let level = self.level(n)?;
        let dim = level.dim();
        // Current candidate basis, as vectors of the level.
        let mut current: Vec<SparseVec> = (0..dim).map(|i| SparseVec::unit(dim, i)).collect();
        for g in self.seq.subalgebra_generators(lambda)? {
            if current.is_empty() {
                break;
            }
            let mut images: HashMap<usize, Element<S::Label>> = HashMap::new();
            let mut targets: HashMap<S::Label, usize> = HashMap::new();
            let mut triplets = Vec::new();
            for (col, b) in current.iter().enumerate() {
                for (i, c) in b.entries() {
                    if !images.contains_key(i) {
                        let e = LinComb::basis(level.labels()[*i].clone());
                        images.insert(*i, commutator(self.seq, n, &e, &g)?);
                    }
                    for (l, x) in images[i].iter() {
                        let next = targets.len();
                        let row = *targets.entry(l.clone()).or_insert(next);
                        triplets.push((row, col, c * x));
                    }
                }
            }
            if targets.is_empty() {
                continue;
            }
            let m = SparseMatrix::from_triplets(targets.len(), current.len(), triplets);
            let kernel = kernel_basis(&m);
            current = kernel
                .basis()
                .iter()
                .map(|k| {
                    let mut terms = Vec::new();
                    for (j, c) in k.entries() {
                        for (i, x) in current[*j].entries() {
                            terms.push((*i, c * x));
                        }
                    }
                    SparseVec::from_entries(dim, terms)
                })
                .collect();
        }
        Ok(Subspace::from_vectors(dim, &current))
    }
}

/// `C(λ)` by the default route, with a throwaway cache.
pub fn centralizer<S: MultiplicativeSequence>(seq: &S, lambda: &Composition) -> Result<Subspace> {
    Ok(Workspace::new(seq).centralizer(lambda)?.as_ref().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{binomial, compositions};
    use crate::seq::{CommutativeAlgebraSpec, Hecke, Skew, Symmetric};

    #[test]
    fn symmetric_routes_agree() {
        let ws = Workspace::new(&Symmetric);
        for w in 1..=5 {
            for lambda in compositions(w).unwrap() {
                let a = ws
                    .centralizer_by(&lambda, CentralizerRoute::Commutant)
                    .unwrap();
                let b = ws
                    .centralizer_by(&lambda, CentralizerRoute::Invariants)
                    .unwrap();
                assert_eq!(a, b, "C{lambda}");
            }
        }
    }

    #[test]
    fn symmetric_small_dims() {
        let ws = Workspace::new(&Symmetric);
        let c = |p: Vec<usize>| ws.centralizer(&Composition::new(p).unwrap()).unwrap().dim();
        // Classes of S_3, then the centralizer of S_2 × S_1.
        assert_eq!(c(vec![3]), 3);
        assert_eq!(c(vec![2, 1]), 4);
        assert_eq!(c(vec![1, 1, 1]), 6);
        assert_eq!(c(vec![4]), 5);
    }

    #[test]
    fn hecke_counts() {
        let d = 3u32;
        let h = Hecke::new(d);
        let ws = Workspace::new(&h);
        for w in 1..=3 {
            for lambda in compositions(w).unwrap() {
                let expected: u128 = lambda
                    .parts()
                    .iter()
                    .map(|&p| binomial(d as usize + p, p))
                    .product();
                assert_eq!(
                    ws.centralizer(&lambda).unwrap().dim() as u128,
                    expected,
                    "C{lambda}"
                );
            }
        }
    }

    #[test]
    fn skew_polynomial_slice_is_symmetric_tensors() {
        let s = Skew::polynomial_slice(1).unwrap();
        let ws = Workspace::new(&s);
        for w in 1..=3 {
            for lambda in compositions(w).unwrap() {
                let expected: u128 = lambda.parts().iter().map(|&p| binomial(p + 1, p)).product();
                assert_eq!(
                    ws.centralizer(&lambda).unwrap().dim() as u128,
                    expected,
                    "C{lambda}"
                );
            }
        }
    }

    #[test]
    fn skew_over_a_field_extension_has_extra_centralizer() {
        // In Q(√2) ⊗ Q(√2), (x⊗1 + 1⊗x)(x⊗1 - 1⊗x) = 0, so b·s with b in that
        // annihilator commutes with A ⊗ A.
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let ws = Workspace::new(&s);
        let c = |p: Vec<usize>| ws.centralizer(&Composition::new(p).unwrap()).unwrap().dim();
        assert_eq!(c(vec![1]), 2);
        assert_eq!(c(vec![1, 1]), 4 + 2);
        assert_eq!(c(vec![2]), 3 + 2);
    }
}
