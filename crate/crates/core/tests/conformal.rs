use gdext::algebras::{check_gd, AlgebraData};
use gdext::catalog::{w1b, Family};
use gdext::conformal::{
    check_conformal, check_conformal_jacobi, check_conformal_skew, PolyVector, QuadraticLambdaBracket, Spectral,
};
use gdext::flag::build_flag_extension_data;
use gdext::scalar::{q, qr};
use gdext::{Scalar, Vector};
use proptest::prelude::*;

fn mono(m: (u32, u32, u32), v: &[i64]) -> PolyVector {
    PolyVector::monomial(m, Vector::from_ints(v)).unwrap()
}

#[test]
fn heisenberg_virasoro_brackets() {
    let b = QuadraticLambdaBracket::new(w1b(&q(0)).data());
    let (l, w) = (b.e(0), b.e(1));
    let lam = Spectral::lambda();
    assert_eq!(b.lambda_bracket(&l, &l, &lam).unwrap(), mono((1, 0, 0), &[1, 0]).add(&mono((0, 1, 0), &[2, 0])));
    assert_eq!(b.lambda_bracket(&l, &w, &lam).unwrap(), mono((1, 0, 0), &[0, 1]).add(&mono((0, 1, 0), &[0, 1])));
    // [W_λ L] = ∂(L∘W) + λ(L∗W) + [L,W] = λW
    assert_eq!(b.lambda_bracket(&w, &l, &lam).unwrap(), mono((0, 1, 0), &[0, 1]));
    assert!(b.lambda_bracket(&w, &w, &lam).unwrap().is_zero());
}

#[test]
fn sesquilinearity_on_monomials() {
    let b = QuadraticLambdaBracket::new(w1b(&q(2)).data());
    let (l, w) = (b.e(0), b.e(1));
    let lam = Spectral::lambda();
    let base = b.lambda_bracket(&l, &w, &lam).unwrap();
    // [∂L_λ W] = −λ[L_λ W]
    let left = b.lambda_bracket(&l.shift((1, 0, 0)).unwrap(), &w, &lam).unwrap();
    assert_eq!(left, base.shift((0, 1, 0)).unwrap().scale(&q(-1)));
    // [L_λ ∂W] = (λ+∂)[L_λ W]
    let right = b.lambda_bracket(&l, &w.shift((1, 0, 0)).unwrap(), &lam).unwrap();
    assert_eq!(right, base.shift((0, 1, 0)).unwrap().add(&base.shift((1, 0, 0)).unwrap()));
}

#[test]
fn degree_grows_as_expected() {
    let b = QuadraticLambdaBracket::new(w1b(&q(1)).data());
    let u = b.e(0).shift((2, 0, 0)).unwrap();
    let r = b.lambda_bracket(&u, &b.e(0), &Spectral::lambda()).unwrap();
    assert_eq!(r.degree(), Some(3));
}

#[test]
fn empty_algebra_passes() {
    let e = AlgebraData::new(vec![], gdext::BilinearMap::zero(0, 0, 0), gdext::BilinearMap::zero(0, 0, 0)).unwrap();
    assert!(check_conformal(&e).unwrap().passed());
}

#[test]
fn oracle_agrees_on_catalog_extensions() {
    let mut n = 0;
    for f in Family::ALL {
        for b in f.b_values() {
            let a = w1b(&b);
            for p in f.grid().into_iter().take(6) {
                let e = build_flag_extension_data(&a, &f.datum(&b, &p).unwrap()).unwrap();
                let r = check_conformal(&e).unwrap();
                assert!(r.passed(), "{f}{p:?}: {r}");
                n += 1;
            }
        }
    }
    assert!(n >= 60);
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| qr(n, d))
}

fn poly(dim: usize) -> impl Strategy<Value = PolyVector> {
    prop::collection::vec(((0u32..=1, 0u32..=1, 0u32..=1), prop::collection::vec(-2i64..=2, dim)), 1..=3).prop_map(
        move |ts| {
            ts.into_iter()
                .fold(PolyVector::zero(dim), |acc, (m, v)| acc.add(&PolyVector::monomial(m, Vector::from_ints(&v)).unwrap()))
        },
    )
}

/// Elements of `K[∂]A`: no `λ` or `μ` in the coefficients.
fn d_poly(dim: usize) -> impl Strategy<Value = PolyVector> {
    prop::collection::vec((0u32..=2, prop::collection::vec(-2i64..=2, dim)), 1..=3).prop_map(move |ts| {
        ts.into_iter()
            .fold(PolyVector::zero(dim), |acc, (i, v)| acc.add(&PolyVector::monomial((i, 0, 0), Vector::from_ints(&v)).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A corrupted W(1,b) is GD exactly when its λ-bracket is a Lie conformal
    /// algebra.
    #[test]
    fn gd_iff_conformal(b in scalar(), which in 0usize..2, i in 0usize..2, j in 0usize..2, k in 0usize..2, c in scalar()) {
        let mut data = w1b(&b).data().clone();
        if which == 0 { data.product.add_to(i, j, k, &c) } else { data.bracket.add_to(i, j, k, &c) }
        let bracket = QuadraticLambdaBracket::new(&data);
        let conformal = check_conformal_skew(&bracket).unwrap().passed() && check_conformal_jacobi(&bracket).unwrap().passed();
        prop_assert_eq!(check_gd(&data).passed(), conformal);
    }

    #[test]
    fn gd_iff_conformal_on_extensions(
        idx in 0usize..Family::ALL.len(),
        which in 0usize..2, i in 0usize..3, j in 0usize..3, k in 0usize..3, c in -2i64..=2,
    ) {
        let f = Family::ALL[idx];
        let b = f.b_values()[0].clone();
        let p = f.grid()[0].clone();
        let mut data = build_flag_extension_data(&w1b(&b), &f.datum(&b, &p).unwrap()).unwrap();
        if which == 0 { data.product.add_to(i, j, k, &q(c)) } else { data.bracket.add_to(i, j, k, &q(c)) }
        prop_assert_eq!(check_gd(&data).passed(), check_conformal(&data).unwrap().passed());
    }

    /// For a GD bialgebra the axioms hold on arbitrary elements of K[∂]A,
    /// not only on basis vectors.
    #[test]
    fn axioms_hold_on_polynomial_elements(b in scalar(), u in d_poly(2), v in d_poly(2), w in d_poly(2)) {
        let br = QuadraticLambdaBracket::new(w1b(&b).data());
        prop_assert!(br.skew_residual(&u, &v).unwrap().is_zero());
        prop_assert!(br.jacobi_residual(&u, &v, &w).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_bilinear(b in scalar(), u in poly(2), v in poly(2), w in poly(2), s in scalar()) {
        let br = QuadraticLambdaBracket::new(w1b(&b).data());
        let lam = Spectral::lambda();
        let lhs = br.lambda_bracket(&u.add(&v.scale(&s)), &w, &lam).unwrap();
        let rhs = br.lambda_bracket(&u, &w, &lam).unwrap().add(&br.lambda_bracket(&v, &w, &lam).unwrap().scale(&s));
        prop_assert_eq!(lhs, rhs);
    }
}
