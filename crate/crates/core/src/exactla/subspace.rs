use num_traits::Zero;

use super::elim::{kernel_basis, row_echelon, Rref};
use super::{Scalar, SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// A subspace of `Q^ambient` held as its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their structs are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| SparseVec::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[SparseVec]) -> Self {
        Self::from_rref(row_echelon(ambient, vectors))
    }

    pub fn from_rref(r: Rref) -> Self {
        Self {
            ambient: r.ncols,
            basis: r.rows,
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient, n))
        }
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v ∈ U`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ambient, "vector outside the ambient space");
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        let mut touched = false;
        for (c, x) in v.entries() {
            if let Ok(k) = self.pivots.binary_search(c) {
                touched = true;
                for (j, y) in self.basis[k].entries() {
                    terms.push((*j, -(x * y)));
                }
            }
        }
        if !touched {
            return v.clone();
        }
        terms.extend(v.entries().iter().cloned());
        SparseVec::from_entries(self.ambient, terms)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coefficients of `v` in the echelon basis, if `v ∈ U`.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v.get(p)).collect();
        self.contains(v).then_some(coords)
    }

    pub fn combination(&self, coords: &[Scalar]) -> SparseVec {
        assert_eq!(coords.len(), self.dim());
        let mut terms = Vec::new();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (j, y) in b.entries() {
                terms.push((*j, c * y));
            }
        }
        SparseVec::from_entries(self.ambient, terms)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::from_vectors(
            self.ambient,
            &[self.basis.clone(), other.basis.clone()].concat(),
        ))
    }

    /// Sum of many subspaces of one ambient space.
    pub fn sum_all(ambient: usize, parts: &[Subspace]) -> Result<Subspace> {
        let mut vectors = Vec::new();
        for p in parts {
            p.check_ambient(ambient)?;
            vectors.extend(p.basis.iter().cloned());
        }
        Ok(Subspace::from_vectors(ambient, &vectors))
    }

    /// Zassenhaus: echelonize rows `(u, u)` and `(w, 0)`; rows whose left half
    /// vanishes carry a basis of `U ∩ W` in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let n = self.ambient;
        let zero = SparseVec::zero(n);
        let mut rows: Vec<SparseVec> = self.basis.iter().map(|u| u.concat(u)).collect();
        rows.extend(other.basis.iter().map(|w| w.concat(&zero)));
        let r = row_echelon(2 * n, &rows);
        let meet: Vec<SparseVec> = r
            .rows
            .iter()
            .zip(&r.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(row, _)| row.slice(n, n))
            .collect();
        Ok(Subspace::from_vectors(n, &meet))
    }

    /// Joint intersection; the full space when `parts` is empty.
    pub fn intersect_all(ambient: usize, parts: &[Subspace]) -> Result<Subspace> {
        let mut acc = Subspace::full(ambient);
        for p in parts {
            acc = acc.intersect(p)?;
        }
        Ok(acc)
    }

    /// `M(U)` for `M : Q^ambient → Q^rows`.
    pub fn image_under(&self, m: &SparseMatrix) -> Result<Subspace> {
        let images = self
            .basis
            .iter()
            .map(|b| m.apply(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors(m.rows(), &images))
    }

    /// The subspace annihilated by every matrix in `ops` (all square on the ambient space).
    pub fn joint_kernel(ambient: usize, ops: &[SparseMatrix]) -> Result<Subspace> {
        let mut rows = Vec::new();
        for op in ops {
            if op.cols() != ambient {
                return Err(Error::AmbientMismatch(ambient, op.cols()));
            }
            rows.extend(op.row_vectors().iter().cloned());
        }
        Ok(kernel_basis(&SparseMatrix::from_rows(ambient, rows)))
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn inclusion_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ambient, &self.basis)
    }
}

/// `V / U` for subspaces `U ⊆ V`, with canonical coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    sub: Subspace,
    reps: Subspace,
}

impl QuotientSpace {
    /// Fails with [`Error::NotContained`] unless `sub ⊆ sup`.
    pub fn new(sup: &Subspace, sub: &Subspace) -> Result<Self> {
        sup.check_ambient(sub.ambient)?;
        if !sup.contains_subspace(sub) {
            return Err(Error::NotContained(format!(
                "subspace of dim {} not inside superspace of dim {}",
                sub.dim(),
                sup.dim()
            )));
        }
        let reduced: Vec<SparseVec> = sup.basis.iter().map(|b| sub.reduce(b)).collect();
        let reps = Subspace::from_vectors(sup.ambient, &reduced);
        debug_assert_eq!(reps.dim() + sub.dim(), sup.dim());
        Ok(Self {
            sub: sub.clone(),
            reps,
        })
    }

    pub fn of_ambient(sub: &Subspace) -> Self {
        Self::new(&Subspace::full(sub.ambient), sub).expect("ambient contains everything")
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    /// Echelon-selected representatives, one per quotient basis vector.
    pub fn representatives(&self) -> &[SparseVec] {
        self.reps.basis()
    }

    /// Coordinates of the class `v + U`; `v` must lie in the superspace.
    pub fn class_coordinates(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        let r = self.sub.reduce(v);
        self.reps
            .coordinates(&r)
            .ok_or_else(|| Error::NotContained("vector outside the superspace".into()))
    }

    pub fn is_zero_class(&self, v: &SparseVec) -> bool {
        self.sub.contains(v)
    }

    pub fn lift(&self, coords: &[Scalar]) -> SparseVec {
        self.reps.combination(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        let v: Vec<SparseVec> = vs.iter().map(|x| SparseVec::from_i64(x)).collect();
        Subspace::from_vectors(n, &v)
    }

    #[test]
    fn sum_and_intersection() {
        let u = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let w = span(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(u.sum(&w).unwrap().dim(), 4);
        assert_eq!(u.intersect(&w).unwrap().dim(), 0);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);

        let a = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = span(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let m = a.intersect(&b).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.contains(&SparseVec::from_i64(&[1, 0, -1])));
        assert!(u.sum(&span(3, &[])).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = span(3, &[&[2, 2, 0], &[0, 3, 3]]);
        let v = SparseVec::from_i64(&[1, 3, 2]);
        let c = a.coordinates(&v).unwrap();
        assert_eq!(a.combination(&c), v);
        assert_eq!(a.coordinates(&SparseVec::from_i64(&[0, 0, 1])), None);
    }

    #[test]
    fn quotients() {
        let v = Subspace::full(3);
        let u = span(3, &[&[1, 1, 0]]);
        let q = QuotientSpace::new(&v, &u).unwrap();
        assert_eq!(q.dim(), 2);
        let c = q
            .class_coordinates(&SparseVec::from_i64(&[1, 1, 0]))
            .unwrap();
        assert!(c.iter().all(|x| x.is_zero()));
        let c = q
            .class_coordinates(&SparseVec::from_i64(&[1, 0, 0]))
            .unwrap();
        let c2 = q
            .class_coordinates(&SparseVec::from_i64(&[0, -1, 0]))
            .unwrap();
        assert_eq!(c, c2);
        assert_eq!(QuotientSpace::new(&v, &Subspace::zero(3)).unwrap().dim(), 3);
        assert_eq!(QuotientSpace::new(&v, &v).unwrap().dim(), 0);
        assert!(QuotientSpace::new(&u, &v).is_err());
    }
}
