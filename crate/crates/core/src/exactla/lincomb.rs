use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Scalar;

/// A finite formal combination `Σ c_l · l` of ordered labels, without zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<L: Ord> {
    terms: BTreeMap<L, Scalar>,
}

impl<L: Ord> Default for LinComb<L> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> LinComb<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: L) -> Self {
        Self::term(label, Scalar::one())
    }

    pub fn term(label: L, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(label, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (L, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, label: L, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &L) -> Scalar {
        self.terms.get(label).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Scalar)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        for (l, v) in &other.terms {
            self.add_term(l.clone(), c * v);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    /// Apply a label map linearly; images are combined with multiplicity.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> LinComb<M> {
        LinComb::from_terms(self.terms.iter().map(|(l, c)| (f(l), c.clone())))
    }

    /// Bilinear extension of `f` on basis pairs.
    pub fn bilinear<M: Ord + Clone, N: Ord + Clone>(
        &self,
        other: &LinComb<M>,
        mut f: impl FnMut(&L, &M) -> LinComb<N>,
    ) -> LinComb<N> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&(x * y), &f(a, b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    #[test]
    fn cancellation_drops_terms() {
        let mut a = LinComb::basis("x");
        a.add_term("y", int(2));
        a.add_term("x", int(-1));
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&"y"), int(2));
        assert!(a.minus(&a).is_zero());
    }
}
