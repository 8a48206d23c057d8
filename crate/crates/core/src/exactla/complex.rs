use std::collections::BTreeMap;

use serde::Serialize;

use super::elim::{image_basis, kernel_basis, rank};
use super::{QuotientSpace, SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// A bounded cochain complex `C^lo → C^{lo+1} → ... → C^hi` of coordinate spaces.
///
/// `diffs[k]` is the matrix of `d : C^{lo+k} → C^{lo+k+1}` (rows index the target).
#[derive(Clone, Debug)]
pub struct CochainComplex {
    lo: i64,
    dims: Vec<usize>,
    diffs: Vec<SparseMatrix>,
}

/// Cohomology dimensions keyed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CohomologyDims(pub BTreeMap<i64, usize>);

impl CohomologyDims {
    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .map(|(k, d)| if k % 2 == 0 { *d as i64 } else { -(*d as i64) })
            .sum()
    }
}

impl CochainComplex {
    /// Checks shapes and `d∘d = 0` exactly.
    pub fn new(lo: i64, dims: Vec<usize>, diffs: Vec<SparseMatrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::SizeMismatch(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols() != dims[k] || d.rows() != dims[k + 1] {
                return Err(Error::SizeMismatch(format!(
                    "differential at degree {} is {}x{}, expected {}x{}",
                    lo + k as i64,
                    d.rows(),
                    d.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].mul(&diffs[k - 1])?.is_zero() {
                return Err(Error::NotAComplex(lo + k as i64 - 1));
            }
        }
        Ok(Self { lo, dims, diffs })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.index(degree).map_or(0, |k| self.dims[k])
    }

    fn index(&self, degree: i64) -> Option<usize> {
        (degree >= self.lo && degree <= self.hi()).then(|| (degree - self.lo) as usize)
    }

    /// `d : C^degree → C^{degree+1}`, or `None` where it is a map from or to 0.
    pub fn differential(&self, degree: i64) -> Option<&SparseMatrix> {
        self.index(degree).and_then(|k| self.diffs.get(k))
    }

    fn outgoing(&self, degree: i64) -> SparseMatrix {
        self.differential(degree)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(degree + 1), self.dim(degree)))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|k| {
                let d = self.dim(k) as i64;
                if k % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }

    pub fn cohomology_dims(&self) -> CohomologyDims {
        let ranks: Vec<usize> = self.diffs.iter().map(rank).collect();
        let mut out = BTreeMap::new();
        for (k, &d) in self.dims.iter().enumerate() {
            let out_rank = ranks.get(k).copied().unwrap_or(0);
            let in_rank = if k > 0 { ranks[k - 1] } else { 0 };
            out.insert(self.lo + k as i64, d - out_rank - in_rank);
        }
        CohomologyDims(out)
    }

    /// `ker d / im d` at `degree`, with canonical representatives.
    pub fn cohomology_quotient(&self, degree: i64) -> QuotientSpace {
        let cycles = kernel_basis(&self.outgoing(degree));
        let boundaries = image_basis(&self.outgoing(degree - 1));
        QuotientSpace::new(&cycles, &boundaries).expect("im d ⊆ ker d")
    }

    pub fn cohomology_representatives(&self, degree: i64) -> Vec<SparseVec> {
        self.cohomology_quotient(degree).representatives().to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_complex_is_acyclic() {
        let c = CochainComplex::new(0, vec![1, 1], vec![SparseMatrix::identity(1)]).unwrap();
        let h = c.cohomology_dims();
        assert_eq!((h.get(0), h.get(1)), (0, 0));
    }

    #[test]
    fn zero_differentials() {
        let c = CochainComplex::new(
            1,
            vec![2, 3, 1],
            vec![SparseMatrix::zero(3, 2), SparseMatrix::zero(1, 3)],
        )
        .unwrap();
        let h = c.cohomology_dims();
        assert_eq!(h.0.values().copied().collect::<Vec<_>>(), vec![2, 3, 1]);
        assert_eq!(h.euler_characteristic(), c.euler_characteristic());
        assert_eq!(c.cohomology_representatives(2).len(), 3);
    }

    #[test]
    fn rejects_non_complex() {
        let d = SparseMatrix::identity(1);
        assert!(matches!(
            CochainComplex::new(0, vec![1, 1, 1], vec![d.clone(), d]),
            Err(Error::NotAComplex(0))
        ));
        assert!(CochainComplex::new(0, vec![1, 2], vec![SparseMatrix::identity(1)]).is_err());
    }

    #[test]
    fn representatives_are_cycles() {
        // Q -(1,1)-> Q^2 -(1,-1)-> Q
        let d0 = SparseMatrix::from_i64(&[vec![1], vec![1]]);
        let d1 = SparseMatrix::from_i64(&[vec![1, -1]]);
        let c = CochainComplex::new(0, vec![1, 2, 1], vec![d0, d1.clone()]).unwrap();
        let h = c.cohomology_dims();
        assert_eq!((h.get(0), h.get(1), h.get(2)), (0, 0, 0));
        assert_eq!(h.euler_characteristic(), c.euler_characteristic());
    }
}
