//! Multiplicative sequences `A_0, A_1, ...` with pairings `μ_{m,n} : A_m ⊗ A_n → A_{m+n}`.

mod hecke;
mod skew;
mod symmetric;

use std::fmt::Debug;
use std::hash::Hash;

use crate::combinat::Composition;
use crate::error::Result;
use crate::exactla::{LinComb, Scalar};

pub use hecke::{Hecke, HeckeGen, HeckeLabel, Poly, DEFAULT_TRUNCATION};
pub use skew::{CommutativeAlgebraSpec, Skew, SkewLabel};
pub use symmetric::Symmetric;

/// An element of some `A_n`, as a combination of basis labels.
pub type Element<L> = LinComb<L>;

/// A sequence of associative unital algebras with associative unital pairings.
///
/// Each level has a finite ordered basis (for infinite-dimensional levels, a
/// fixed finite slice). Products of basis elements may leave the slice; the
/// sequence reports that through [`MultiplicativeSequence::check_truncation`].
pub trait MultiplicativeSequence: Send + Sync {
    type Label: Clone + Ord + Hash + Debug + Send + Sync;

    /// Short identifier used in reports.
    fn id(&self) -> String;

    /// Ordered basis of the slice of `A_n` under consideration.
    fn basis(&self, n: usize) -> Result<Vec<Self::Label>>;

    fn unit(&self, n: usize) -> Element<Self::Label>;

    /// Product of two basis elements of `A_n`, without truncation.
    fn multiply_basis(
        &self,
        n: usize,
        a: &Self::Label,
        b: &Self::Label,
    ) -> Result<Element<Self::Label>>;

    /// `μ_{m,n}(a ⊗ b)` on basis elements.
    fn mu_basis(
        &self,
        m: usize,
        n: usize,
        a: &Self::Label,
        b: &Self::Label,
    ) -> Result<Element<Self::Label>>;

    /// A finite generating set of the image `μ(A_{λ_1} ⊗ ... ⊗ A_{λ_r}) ⊆ A_{|λ|}`.
    fn subalgebra_generators(&self, lambda: &Composition) -> Result<Vec<Element<Self::Label>>>;

    /// A second, independent description of `C(λ)` when one is available.
    fn invariant_centralizer(
        &self,
        _lambda: &Composition,
    ) -> Option<Result<Vec<Element<Self::Label>>>> {
        None
    }

    /// Whether the sequence is generated by `A_1` and `A_2` under the pairings.
    fn generated_by_first_two(&self) -> bool;

    /// Reject elements that left the finite slice.
    fn check_truncation(&self, _x: &Element<Self::Label>) -> Result<()> {
        Ok(())
    }

    fn format_label(&self, label: &Self::Label) -> String;
}

/// Product in `A_n`, checked against the slice.
pub fn multiply<S: MultiplicativeSequence>(
    seq: &S,
    n: usize,
    u: &Element<S::Label>,
    v: &Element<S::Label>,
) -> Result<Element<S::Label>> {
    let out = multiply_unbounded(seq, n, u, v)?;
    seq.check_truncation(&out)?;
    Ok(out)
}

/// Product in `A_n` without the slice check.
pub fn multiply_unbounded<S: MultiplicativeSequence>(
    seq: &S,
    n: usize,
    u: &Element<S::Label>,
    v: &Element<S::Label>,
) -> Result<Element<S::Label>> {
    let mut out = LinComb::zero();
    for (a, x) in u.iter() {
        for (b, y) in v.iter() {
            let c: Scalar = x * y;
            out.add_scaled(&c, &seq.multiply_basis(n, a, b)?);
        }
    }
    Ok(out)
}

/// `μ_{m,n}(u ⊗ v)`. The bundled pairings map slices into slices.
pub fn mu<S: MultiplicativeSequence>(
    seq: &S,
    m: usize,
    n: usize,
    u: &Element<S::Label>,
    v: &Element<S::Label>,
) -> Result<Element<S::Label>> {
    let mut out = LinComb::zero();
    for (a, x) in u.iter() {
        for (b, y) in v.iter() {
            let c: Scalar = x * y;
            out.add_scaled(&c, &seq.mu_basis(m, n, a, b)?);
        }
    }
    Ok(out)
}

/// `[u, v] = uv - vu`, unbounded.
pub fn commutator<S: MultiplicativeSequence>(
    seq: &S,
    n: usize,
    u: &Element<S::Label>,
    v: &Element<S::Label>,
) -> Result<Element<S::Label>> {
    Ok(multiply_unbounded(seq, n, u, v)?.minus(&multiply_unbounded(seq, n, v, u)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `μ(μ(a ⊗ b) ⊗ c) = μ(a ⊗ μ(b ⊗ c))` and multiplicativity of `μ` on basis elements.
    pub(crate) fn check_sequence_axioms<S: MultiplicativeSequence>(seq: &S, max_total: usize) {
        for l in 0..=max_total {
            for m in 0..=max_total - l {
                for n in 0..=max_total - l - m {
                    let (bl, bm, bn) = (
                        seq.basis(l).unwrap(),
                        seq.basis(m).unwrap(),
                        seq.basis(n).unwrap(),
                    );
                    for a in &bl {
                        for b in &bm {
                            let ab = seq.mu_basis(l, m, a, b).unwrap();
                            for c in &bn {
                                let ea = LinComb::basis(a.clone());
                                let ec = LinComb::basis(c.clone());
                                let left = mu(seq, l + m, n, &ab, &ec).unwrap();
                                let bc = seq.mu_basis(m, n, b, c).unwrap();
                                let right = mu(seq, l, m + n, &ea, &bc).unwrap();
                                assert_eq!(left, right, "associativity at levels {l},{m},{n}");
                            }
                        }
                    }
                }
            }
        }
        for m in 0..=2 {
            for n in 0..=max_total.saturating_sub(m).min(2) {
                let um = seq.unit(m);
                let un = seq.unit(n);
                assert_eq!(mu(seq, m, n, &um, &un).unwrap(), seq.unit(m + n));
                let (bm, bn) = (seq.basis(m).unwrap(), seq.basis(n).unwrap());
                for a in bm.iter().take(6) {
                    for a2 in bm.iter().rev().take(3) {
                        for b in bn.iter().take(3) {
                            for b2 in bn.iter().rev().take(3) {
                                let ea = LinComb::basis(a.clone());
                                let ea2 = LinComb::basis(a2.clone());
                                let eb = LinComb::basis(b.clone());
                                let eb2 = LinComb::basis(b2.clone());
                                let lhs = mu(
                                    seq,
                                    m,
                                    n,
                                    &multiply_unbounded(seq, m, &ea, &ea2).unwrap(),
                                    &multiply_unbounded(seq, n, &eb, &eb2).unwrap(),
                                )
                                .unwrap();
                                let rhs = multiply_unbounded(
                                    seq,
                                    m + n,
                                    &mu(seq, m, n, &ea, &eb).unwrap(),
                                    &mu(seq, m, n, &ea2, &eb2).unwrap(),
                                )
                                .unwrap();
                                assert_eq!(lhs, rhs, "μ multiplicative at levels {m},{n}");
                            }
                        }
                    }
                }
            }
        }
    }

    pub(crate) fn check_associative_level<S: MultiplicativeSequence>(seq: &S, n: usize) {
        let b = seq.basis(n).unwrap();
        let one = seq.unit(n);
        for x in &b {
            let ex = LinComb::basis(x.clone());
            assert_eq!(multiply_unbounded(seq, n, &one, &ex).unwrap(), ex);
            assert_eq!(multiply_unbounded(seq, n, &ex, &one).unwrap(), ex);
            for y in &b {
                let xy = seq.multiply_basis(n, x, y).unwrap();
                for z in &b {
                    let ez = LinComb::basis(z.clone());
                    let left = multiply_unbounded(seq, n, &xy, &ez).unwrap();
                    let yz = seq.multiply_basis(n, y, z).unwrap();
                    let right = multiply_unbounded(seq, n, &ex, &yz).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}
