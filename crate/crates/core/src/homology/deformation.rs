use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::centralizer::{Level, Workspace};
use super::cubic::CubicDiagram;
use crate::combinat::{compositions, parity_sign, Composition};
use crate::error::{Error, Result};
use crate::exactla::{
    int, kernel_basis, CochainComplex, CohomologyDims, QuotientSpace, SparseMatrix, SparseVec,
    Subspace,
};
use crate::seq::{mu, Element, MultiplicativeSequence};

/// The cubic diagram `λ ↦ C(λ) ⊆ A_w`.
pub fn horizontal_diagram<S: MultiplicativeSequence>(
    ws: &Workspace<S>,
    w: usize,
) -> Result<CubicDiagram> {
    let level = ws.level(w)?;
    let spaces = compositions(w)?
        .iter()
        .map(|l| ws.centralizer(l))
        .collect::<Result<Vec<_>>>()?;
    CubicDiagram::new(w, level.dim(), spaces)
}

/// Cohomology of the weight-`w` horizontal complex, indexed by the number of parts (`1..=w`).
pub fn horizontal_cohomology<S: MultiplicativeSequence>(
    ws: &Workspace<S>,
    w: usize,
) -> Result<CohomologyDims> {
    horizontal_diagram(ws, w)?.cohomology(1)
}

/// One summand `C(λ)` of a degree of the truncated complex.
#[derive(Clone, Debug)]
pub struct Component {
    /// `None` for the unit layer in degree 0.
    pub composition: Option<Composition>,
    pub space: Arc<Subspace>,
    pub offset: usize,
}

/// The deformation complex modulo the weight filtration `F^{W+1}`.
#[derive(Debug)]
pub struct TruncatedComplex {
    max_weight: usize,
    components: Vec<Vec<Component>>,
    complex: CochainComplex,
}

impl TruncatedComplex {
    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn components(&self, degree: usize) -> &[Component] {
        &self.components[degree]
    }

    /// All degrees `0..=W`; only degrees below `W` agree with the untruncated complex.
    pub fn cohomology(&self) -> CohomologyDims {
        self.complex.cohomology_dims()
    }

    pub fn is_final(&self, degree: usize) -> bool {
        degree < self.max_weight
    }

    /// The block of `d` from `C(from)` in degree `from.len()` to `C(to)`, in
    /// echelon-basis coordinates.
    pub fn block(&self, from: &Composition, to: &Composition) -> Result<SparseMatrix> {
        let n = from.len();
        let find = |deg: usize, l: &Composition| {
            self.components
                .get(deg)
                .and_then(|cs| cs.iter().find(|c| c.composition.as_ref() == Some(l)))
                .ok_or_else(|| {
                    Error::InvalidComposition(format!("{l} is not a summand in degree {deg}"))
                })
        };
        let (a, b) = (find(n, from)?, find(n + 1, to)?);
        let d = self
            .complex
            .differential(n as i64)
            .ok_or_else(|| Error::InvalidSpec(format!("no differential from degree {n}")))?;
        let rows = (b.offset..b.offset + b.space.dim())
            .map(|r| d.row(r).slice(a.offset, a.space.dim()))
            .collect();
        Ok(SparseMatrix::from_rows(a.space.dim(), rows))
    }
}

/// Degree 0 is the unit layer `k`; degree `n ≥ 1` is `⊕ C(λ)` over compositions
/// with `n` parts and weight at most `W`. The differential is `Σ (-1)^i ∂_i`
/// with `∂_0 a = μ(1 ⊗ a)`, `∂_i` splitting part `i`, and `∂_{n+1} a = μ(a ⊗ 1)`.
pub fn deformation_complex_truncated<S: MultiplicativeSequence>(
    ws: &Workspace<S>,
    max_weight: usize,
) -> Result<TruncatedComplex> {
    if max_weight == 0 {
        return Err(Error::ZeroWeight);
    }
    let seq = ws.seq();
    let mut components: Vec<Vec<Component>> = vec![vec![Component {
        composition: None,
        space: Arc::new(Subspace::full(1)),
        offset: 0,
    }]];
    for n in 1..=max_weight {
        let mut cs = Vec::new();
        let mut offset = 0;
        for w in n..=max_weight {
            for l in compositions(w)?.into_iter().filter(|l| l.len() == n) {
                let space = ws.centralizer(&l)?;
                let d = space.dim();
                cs.push(Component {
                    composition: Some(l),
                    space,
                    offset,
                });
                offset += d;
            }
        }
        components.push(cs);
    }
    let dims: Vec<usize> = components
        .iter()
        .map(|cs| cs.iter().map(|c| c.space.dim()).sum())
        .collect();

    let mut diffs = vec![SparseMatrix::zero(dims[1], 1)];
    for n in 1..max_weight {
        let targets: HashMap<&Composition, &Component> = components[n + 1]
            .iter()
            .map(|c| (c.composition.as_ref().expect("positive degree"), c))
            .collect();
        let mut triplets = Vec::new();
        let mut push = |target: &Composition, v: &SparseVec, col: usize, sign: i32| -> Result<()> {
            let c = targets[target];
            let coords = c
                .space
                .coordinates(v)
                .ok_or_else(|| Error::NotContained(format!("coface image outside C{target}")))?;
            for (r, x) in coords.into_iter().enumerate() {
                if !x.is_zero() {
                    triplets.push((c.offset + r, col, x * int(sign as i64)));
                }
            }
            Ok(())
        };
        for src in &components[n] {
            let lambda = src.composition.as_ref().expect("positive degree");
            let w = lambda.weight();
            let level = ws.level(w)?;
            for (k, b) in src.space.basis().iter().enumerate() {
                let col = src.offset + k;
                let a = level.element(b);
                for m in 1..=max_weight - w {
                    let outer = ws.level(w + m)?;
                    let head = mu(seq, m, w, &seq.unit(m), &a)?;
                    let target = Composition::single(m)?.concat(lambda);
                    push(&target, &outer.vector(&head)?, col, 1)?;
                    let tail = mu(seq, w, m, &a, &seq.unit(m))?;
                    let target = lambda.concat(&Composition::single(m)?);
                    push(&target, &outer.vector(&tail)?, col, parity_sign(n + 1))?;
                }
                for (sign, target) in lambda.subdivisions() {
                    push(&target, b, col, sign)?;
                }
            }
        }
        diffs.push(SparseMatrix::from_triplets(dims[n + 1], dims[n], triplets));
    }
    let complex = CochainComplex::new(0, dims, diffs)?;
    Ok(TruncatedComplex {
        max_weight,
        components,
        complex,
    })
}

/// How a quotient `T_w` is presented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientRoute {
    /// `C(1^w) / Σ_j C(1..2_j..1)` by exact linear algebra in `A_w`.
    Generic,
    /// Coordinates are the pairings with signed class functions.
    SignedClasses,
}

/// A presentation of `T_w = C(1^w) / Σ_j C(1, ..., 2_j, ..., 1)`.
pub trait WeightQuotient<L: Ord>: Send + Sync {
    fn weight(&self) -> usize;
    fn dim(&self) -> usize;
    fn route(&self) -> QuotientRoute;
    /// `dim C(1^w)`.
    fn ambient_dim(&self) -> usize;
    /// `dim Σ_j C(1..2_j..1)`.
    fn relations_dim(&self) -> usize;
    /// Lifts of the coordinate basis.
    fn representatives(&self) -> Vec<Element<L>>;
    /// Class coordinates of an element of `C(1^w)`.
    fn coordinates(&self, x: &Element<L>) -> Result<Vec<crate::Scalar>>;
    /// A spanning set of the relations, when small enough to list.
    fn relation_spanning_set(&self) -> Option<Vec<Element<L>>>;
}

pub struct GenericQuotient<L> {
    weight: usize,
    level: Arc<Level<L>>,
    sup: Arc<Subspace>,
    quotient: QuotientSpace,
}

impl<L: Clone + Ord + std::hash::Hash + std::fmt::Debug + Send + Sync> GenericQuotient<L> {
    pub fn new<S: MultiplicativeSequence<Label = L>>(ws: &Workspace<S>, w: usize) -> Result<Self> {
        let level = ws.level(w)?;
        let sup = ws.centralizer(&Composition::ones(w)?)?;
        let mut rel = Vec::new();
        for j in 1..w {
            let mut parts = vec![1; w - 1];
            parts[j - 1] = 2;
            rel.push(ws.centralizer(&Composition::new(parts)?)?.as_ref().clone());
        }
        let sum = Subspace::sum_all(level.dim(), &rel)?;
        let quotient = QuotientSpace::new(&sup, &sum)?;
        Ok(Self {
            weight: w,
            level,
            sup,
            quotient,
        })
    }
}

impl<L: Clone + Ord + std::hash::Hash + std::fmt::Debug + Send + Sync> WeightQuotient<L>
    for GenericQuotient<L>
{
    fn weight(&self) -> usize {
        self.weight
    }

    fn dim(&self) -> usize {
        self.quotient.dim()
    }

    fn route(&self) -> QuotientRoute {
        QuotientRoute::Generic
    }

    fn ambient_dim(&self) -> usize {
        self.sup.dim()
    }

    fn relations_dim(&self) -> usize {
        self.quotient.subspace().dim()
    }

    fn representatives(&self) -> Vec<Element<L>> {
        self.quotient
            .representatives()
            .iter()
            .map(|v| self.level.element(v))
            .collect()
    }

    fn coordinates(&self, x: &Element<L>) -> Result<Vec<crate::Scalar>> {
        let v = self.level.vector(x)?;
        if !self.sup.contains(&v) {
            return Err(Error::NotContained(format!(
                "element outside C(1^{})",
                self.weight
            )));
        }
        self.quotient.class_coordinates(&v)
    }

    fn relation_spanning_set(&self) -> Option<Vec<Element<L>>> {
        Some(
            self.quotient
                .subspace()
                .basis()
                .iter()
                .map(|v| self.level.element(v))
                .collect(),
        )
    }
}

/// The reduced complex `T_1 → T_2 → ...` with
/// `d a = μ_{1,w}(1 ⊗ a) + (-1)^{w+1} μ_{w,1}(a ⊗ 1)`.
pub struct ReducedComplex<L: Ord> {
    max_weight: usize,
    models: Vec<Box<dyn WeightQuotient<L>>>,
    complex: CochainComplex,
}

/// Per-weight sizes of a reduced complex.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WeightSummary {
    pub weight: usize,
    pub route: QuotientRoute,
    pub centralizer_dim: usize,
    pub relations_dim: usize,
    pub quotient_dim: usize,
}

/// A presentation of `T_w`, or `None` when the weight is out of reach.
pub type Model<L> = Option<Box<dyn WeightQuotient<L>>>;

/// Chooses the presentation of `T_w`.
pub type ModelProvider<'p, L> = dyn Fn(usize) -> Result<Model<L>> + 'p;

/// Generic presentations for every weight the sequence can enumerate.
pub fn generic_models<'p, S>(
    ws: &'p Workspace<'p, S>,
) -> impl Fn(usize) -> Result<Model<S::Label>> + 'p
where
    S: MultiplicativeSequence,
    S::Label: 'static,
{
    move |w| match GenericQuotient::new(ws, w) {
        Ok(q) => Ok(Some(Box::new(q) as Box<dyn WeightQuotient<S::Label>>)),
        Err(e) if e.is_resource_guard() => Ok(None),
        Err(e) => Err(e),
    }
}

impl<L: Clone + Ord + std::hash::Hash + std::fmt::Debug + Send + Sync + 'static> ReducedComplex<L> {
    /// Builds `T_1, ..., T_P` and, when reachable, `T_{P+1}` so that `H^P` is final.
    pub fn build<S: MultiplicativeSequence<Label = L>>(
        seq: &S,
        max_weight: usize,
        provider: &ModelProvider<'_, L>,
    ) -> Result<Self> {
        if max_weight == 0 {
            return Err(Error::ZeroWeight);
        }
        let mut models: Vec<Box<dyn WeightQuotient<L>>> = Vec::new();
        for w in 1..=max_weight + 1 {
            match provider(w)? {
                Some(m) => models.push(m),
                None if w == max_weight + 1 => break,
                None => {
                    return Err(Error::LimitExceeded(format!(
                        "reduced complex weight {w} is out of reach"
                    )));
                }
            }
        }
        let mut diffs = Vec::new();
        for w in 1..models.len() {
            let (src, dst) = (&models[w - 1], &models[w]);
            let d = |a: &Element<L>| -> Result<Vec<crate::Scalar>> {
                dst.coordinates(&reduced_coface(seq, w, a)?)
            };
            if let Some(rel) = src.relation_spanning_set() {
                for u in &rel {
                    if d(u)?.iter().any(|c| !c.is_zero()) {
                        return Err(Error::NotContained(format!(
                            "the differential does not preserve relations at weight {w}"
                        )));
                    }
                }
            }
            let cols = src
                .representatives()
                .iter()
                .map(|r| d(r).map(|c| SparseVec::from_dense(&c)))
                .collect::<Result<Vec<_>>>()?;
            diffs.push(SparseMatrix::from_columns(dst.dim(), &cols));
        }
        let dims = models.iter().map(|m| m.dim()).collect();
        let complex = CochainComplex::new(1, dims, diffs)?;
        Ok(Self {
            max_weight,
            models,
            complex,
        })
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn model(&self, w: usize) -> Option<&dyn WeightQuotient<L>> {
        self.models.get(w.checked_sub(1)?).map(|m| m.as_ref())
    }

    pub fn summaries(&self) -> Vec<WeightSummary> {
        self.models
            .iter()
            .map(|m| WeightSummary {
                weight: m.weight(),
                route: m.route(),
                centralizer_dim: m.ambient_dim(),
                relations_dim: m.relations_dim(),
                quotient_dim: m.dim(),
            })
            .collect()
    }

    /// `d_w : T_w → T_{w+1}`.
    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn differential(&self, w: usize) -> Option<&SparseMatrix> {
        self.complex.differential(w as i64)
    }

    pub fn top_differential_computed(&self) -> bool {
        self.models.len() > self.max_weight
    }

    /// The largest degree whose cohomology is final.
    pub fn final_through(&self) -> usize {
        if self.top_differential_computed() {
            self.max_weight
        } else {
            self.max_weight - 1
        }
    }

    /// `H^w` for `w = 1..=P`.
    pub fn cohomology(&self) -> CohomologyDims {
        let mut h = self.complex.cohomology_dims();
        h.0.retain(|&d, _| d >= 1 && d <= self.max_weight as i64);
        h
    }

    pub fn differentials_vanish(&self) -> bool {
        (1..self.models.len()).all(|w| self.differential(w).is_none_or(|d| d.is_zero()))
    }

    /// Elements of `C(1^w)` representing a basis of `H^w`.
    pub fn cohomology_representatives(&self, w: usize) -> Vec<Element<L>> {
        let model = &self.models[w - 1];
        let reps = model.representatives();
        self.complex
            .cohomology_representatives(w as i64)
            .iter()
            .map(|v| {
                let mut x = Element::zero();
                for (i, c) in v.entries() {
                    x.add_scaled(c, &reps[*i]);
                }
                x
            })
            .collect()
    }

    /// The class of `x ∈ C(1^w)` in `T_w`.
    pub fn class_of(&self, w: usize, x: &Element<L>) -> Result<Vec<crate::Scalar>> {
        self.model(w)
            .ok_or_else(|| Error::LimitExceeded(format!("weight {w} not built")))?
            .coordinates(x)
    }

    /// `u ∪ v`: the class of `μ_{m,n}(u ⊗ v)` in `T_{m+n}`.
    pub fn cup<S: MultiplicativeSequence<Label = L>>(
        &self,
        seq: &S,
        m: usize,
        u: &Element<L>,
        n: usize,
        v: &Element<L>,
    ) -> Result<Vec<crate::Scalar>> {
        self.class_of(m + n, &mu(seq, m, n, u, v)?)
    }

    /// `u ∪ v + (-1)^{mn+1} v ∪ u = 0` in `T_{m+n}`.
    pub fn cup_graded_commutes<S: MultiplicativeSequence<Label = L>>(
        &self,
        seq: &S,
        m: usize,
        u: &Element<L>,
        n: usize,
        v: &Element<L>,
    ) -> Result<bool> {
        let a = self.cup(seq, m, u, n, v)?;
        let b = self.cup(seq, n, v, m, u)?;
        let s = int(parity_sign(m * n + 1) as i64);
        Ok(a.iter().zip(&b).all(|(x, y)| (x + &s * y).is_zero()))
    }
}

/// `μ_{1,w}(1 ⊗ a) + (-1)^{w+1} μ_{w,1}(a ⊗ 1)`.
pub fn reduced_coface<S: MultiplicativeSequence>(
    seq: &S,
    w: usize,
    a: &Element<S::Label>,
) -> Result<Element<S::Label>> {
    let head = mu(seq, 1, w, &seq.unit(1), a)?;
    let tail = mu(seq, w, 1, a, &seq.unit(1))?;
    Ok(head.plus(&tail.scale(&int(parity_sign(w + 1) as i64))))
}

/// Generic reduced complex up to weight `P`.
pub fn reduced_complex<S>(ws: &Workspace<S>, max_weight: usize) -> Result<ReducedComplex<S::Label>>
where
    S: MultiplicativeSequence,
    S::Label: 'static,
{
    let provider = generic_models(ws);
    ReducedComplex::build(ws.seq(), max_weight, &provider)
}

/// `{a ∈ Z(A_1) : μ(a ⊗ 1) + μ(1 ⊗ a) ∈ Z(A_2)}`, directly from its definition.
pub fn first_cohomology_direct<S: MultiplicativeSequence>(
    ws: &Workspace<S>,
) -> Result<Vec<Element<S::Label>>> {
    let seq = ws.seq();
    let (l1, l2) = (ws.level(1)?, ws.level(2)?);
    let z1 = ws.centralizer(&Composition::single(1)?)?;
    let z2 = ws.centralizer(&Composition::single(2)?)?;
    let q = QuotientSpace::of_ambient(&z2);
    let mut cols = Vec::new();
    let mut elems = Vec::new();
    for b in z1.basis() {
        let a = l1.element(b);
        let delta = mu(seq, 1, 1, &a, &seq.unit(1))?.plus(&mu(seq, 1, 1, &seq.unit(1), &a)?);
        cols.push(SparseVec::from_dense(
            &q.class_coordinates(&l2.vector(&delta)?)?,
        ));
        elems.push(a);
    }
    let k = kernel_basis(&SparseMatrix::from_columns(q.dim(), &cols));
    Ok(k.basis()
        .iter()
        .map(|c| {
            let mut x = Element::zero();
            for (i, s) in c.entries() {
                x.add_scaled(s, &elems[*i]);
            }
            x
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;
    use crate::seq::{CommutativeAlgebraSpec, Hecke, Skew, Symmetric};

    fn dims(h: &CohomologyDims, range: std::ops::RangeInclusive<i64>) -> Vec<usize> {
        range.map(|d| h.get(d)).collect()
    }

    #[test]
    fn horizontal_concentrates_in_top_degree() {
        let ws = Workspace::new(&Symmetric);
        assert_eq!(
            dims(&horizontal_cohomology(&ws, 2).unwrap(), 1..=2),
            vec![0, 0]
        );
        assert_eq!(
            dims(&horizontal_cohomology(&ws, 3).unwrap(), 1..=3),
            vec![0, 0, 1]
        );
        assert_eq!(
            dims(&horizontal_cohomology(&ws, 4).unwrap(), 1..=4),
            vec![0, 0, 0, 1]
        );
        let s = Skew::polynomial_slice(1).unwrap();
        let ws = Workspace::new(&s);
        assert_eq!(
            dims(&horizontal_cohomology(&ws, 2).unwrap(), 1..=2),
            vec![0, 1]
        );
        assert_eq!(
            dims(&horizontal_cohomology(&ws, 3).unwrap(), 1..=3),
            vec![0, 0, 0]
        );
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let ws = Workspace::new(&s);
        assert_eq!(
            dims(&horizontal_cohomology(&ws, 3).unwrap(), 1..=3),
            vec![0, 0, 2]
        );
        let h = Hecke::new(2);
        let ws = Workspace::new(&h);
        for w in 1..=3 {
            let c = horizontal_cohomology(&ws, w).unwrap();
            for d in 1..w as i64 {
                assert_eq!(c.get(d), 0);
            }
            assert_eq!(c.get(w as i64) as u128, binomial(3, w));
        }
    }

    #[test]
    fn truncated_symmetric() {
        let ws = Workspace::new(&Symmetric);
        let t = deformation_complex_truncated(&ws, 4).unwrap();
        let h = t.cohomology();
        assert_eq!(dims(&h, 0..=3), vec![1, 1, 0, 1]);
        assert!(t.is_final(3) && !t.is_final(4));
    }

    #[test]
    fn reduced_matches_truncated_block() {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let ws = Workspace::new(&s);
        let t = deformation_complex_truncated(&ws, 3).unwrap();
        for w in 1..=2 {
            let from = Composition::ones(w).unwrap();
            let to = Composition::ones(w + 1).unwrap();
            let block = t.block(&from, &to).unwrap();
            let level = ws.level(w).unwrap();
            let outer = ws.level(w + 1).unwrap();
            let target = ws.centralizer(&to).unwrap();
            let src = ws.centralizer(&from).unwrap();
            for (k, b) in src.basis().iter().enumerate() {
                let img = reduced_coface(&s, w, &level.element(b)).unwrap();
                let coords = target.coordinates(&outer.vector(&img).unwrap()).unwrap();
                for (r, c) in coords.iter().enumerate() {
                    assert_eq!(&block.get(r, k), c, "weight {w}");
                }
            }
        }
    }

    #[test]
    fn reduced_small_cases() {
        let ws = Workspace::new(&Symmetric);
        let r = reduced_complex(&ws, 4).unwrap();
        assert_eq!(dims(&r.cohomology(), 1..=4), vec![1, 0, 1, 1]);
        assert!(r.differentials_vanish());
        assert_eq!(r.final_through(), 4);

        let s = Skew::polynomial_slice(1).unwrap();
        let ws = Workspace::new(&s);
        let r = reduced_complex(&ws, 3).unwrap();
        assert_eq!(dims(&r.cohomology(), 1..=3), vec![2, 1, 0]);
        let s = Skew::polynomial_slice(2).unwrap();
        let r = reduced_complex(&Workspace::new(&s), 3).unwrap();
        assert_eq!(dims(&r.cohomology(), 1..=3), vec![3, 3, 1]);
    }

    #[test]
    fn skew_over_a_field_extension() {
        // Q(√2)^{⊗3} splits into four copies of Q(√2); the top quotient no longer vanishes.
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        let ws = Workspace::new(&s);
        let r = reduced_complex(&ws, 3).unwrap();
        assert_eq!(dims(&r.cohomology(), 1..=3), vec![2, 1, 2]);
        let t = deformation_complex_truncated(&ws, 4).unwrap();
        assert_eq!(dims(&t.cohomology(), 1..=3), vec![2, 1, 2]);
    }

    #[test]
    fn first_cohomology() {
        assert_eq!(
            first_cohomology_direct(&Workspace::new(&Symmetric))
                .unwrap()
                .len(),
            1
        );
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        assert_eq!(
            first_cohomology_direct(&Workspace::new(&s)).unwrap().len(),
            2
        );
        let h = Hecke::new(3);
        assert_eq!(
            first_cohomology_direct(&Workspace::new(&h)).unwrap().len(),
            4
        );
    }

    #[test]
    fn cup_products_symmetric() {
        let ws = Workspace::new(&Symmetric);
        let r = reduced_complex(&ws, 4).unwrap();
        let e1 = Symmetric.unit(1);
        let e3 = r.cohomology_representatives(3).pop().unwrap();
        assert!(r
            .cup(&Symmetric, 1, &e1, 1, &e1)
            .unwrap()
            .iter()
            .all(|c| c.is_zero()));
        assert!(r
            .cup(&Symmetric, 1, &e1, 3, &e3)
            .unwrap()
            .iter()
            .any(|c| !c.is_zero()));
        assert!(r.cup_graded_commutes(&Symmetric, 1, &e1, 3, &e3).unwrap());
    }
}
