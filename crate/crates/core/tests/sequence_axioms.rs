use proptest::prelude::*;
use proptest::sample::Index;
use swcohom::seq::{
    mu, multiply, CommutativeAlgebraSpec, Element, Hecke, MultiplicativeSequence, Skew, Symmetric,
};
use swcohom::Result;

fn pick<S: MultiplicativeSequence>(s: &S, n: usize, i: &Index) -> Element<S::Label> {
    let basis = s.basis(n).unwrap();
    Element::basis(basis[i.index(basis.len())].clone())
}

/// Associativity of products and pairings, and the interchange law
/// `μ(a a', b b') = μ(a, b) μ(a', b')`. `Ok(false)` is a violation; errors mean
/// the product left the finite slice.
fn axioms<S: MultiplicativeSequence>(s: &S, m: usize, n: usize, ix: &[Index; 6]) -> Result<bool> {
    let (a, a2, a3) = (pick(s, m, &ix[0]), pick(s, m, &ix[1]), pick(s, m, &ix[2]));
    let (b, b2, c) = (pick(s, n, &ix[3]), pick(s, n, &ix[4]), pick(s, 1, &ix[5]));
    let assoc = multiply(s, m, &multiply(s, m, &a, &a2)?, &a3)?
        == multiply(s, m, &a, &multiply(s, m, &a2, &a3)?)?;
    let mu_assoc =
        mu(s, m + n, 1, &mu(s, m, n, &a, &b)?, &c)? == mu(s, m, n + 1, &a, &mu(s, n, 1, &b, &c)?)?;
    let lhs = mu(
        s,
        m,
        n,
        &multiply(s, m, &a, &a2)?,
        &multiply(s, n, &b, &b2)?,
    )?;
    let rhs = multiply(s, m + n, &mu(s, m, n, &a, &b)?, &mu(s, m, n, &a2, &b2)?)?;
    let units = mu(s, m, n, &s.unit(m), &s.unit(n))? == s.unit(m + n);
    Ok(assoc && mu_assoc && lhs == rhs && units)
}

fn indices() -> impl Strategy<Value = [Index; 6]> {
    any::<[Index; 6]>()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn symmetric(m in 1usize..4, n in 1usize..4, ix in indices()) {
        prop_assert!(axioms(&Symmetric, m, n, &ix).unwrap());
    }

    #[test]
    fn skew_quadratic(m in 1usize..3, n in 1usize..3, ix in indices()) {
        let s = Skew::new(CommutativeAlgebraSpec::quadratic_default());
        prop_assert!(axioms(&s, m, n, &ix).unwrap());
    }

    #[test]
    fn skew_polynomial_slice(m in 1usize..3, n in 1usize..3, ix in indices()) {
        let s = Skew::polynomial_slice(3).unwrap();
        match axioms(&s, m, n, &ix) {
            Ok(ok) => prop_assert!(ok),
            Err(e) => prop_assume!(matches!(e, swcohom::Error::TruncationOverflow { .. })),
        }
    }

    #[test]
    fn hecke(m in 1usize..3, n in 1usize..3, ix in indices()) {
        let s = Hecke::new(4);
        match axioms(&s, m, n, &ix) {
            Ok(ok) => prop_assert!(ok),
            Err(e) => prop_assume!(matches!(e, swcohom::Error::TruncationOverflow { .. })),
        }
    }
}
