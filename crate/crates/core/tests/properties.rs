//! Randomized invariant checks for the pair algebra, the determinant layer,
//! and the operator layer. Exact arithmetic throughout: every assertion is
//! equality, never a tolerance.

mod common;

use common::{brute_force_diagonalizable, leibniz_det, TestRng};

use bimat_core::bimatrix::BiMatrix;
use bimat_core::det::BiDeterminant;
use bimat_core::error::Error;
use bimat_core::matrix::Matrix;
use bimat_core::neutro::neutro_matmul;
use bimat_core::operator::BireduceMode;
use bimat_core::scalar::{rat, NeutrosophicScalar, Rational};

use proptest::prelude::*;

fn rat_matrix(n: usize, m: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-4i64..=4, n * m)
        .prop_map(move |v| Matrix::new(n, m, v.into_iter().map(rat).collect()))
}

fn square_pair(n: usize) -> impl Strategy<Value = BiMatrix<Rational>> {
    (rat_matrix(n, n), rat_matrix(n, n))
        .prop_filter_map("degenerate pair", |(a, b)| BiMatrix::new(a, b).ok())
}

fn rect_pair(r: usize, c: usize) -> impl Strategy<Value = BiMatrix<Rational>> {
    (rat_matrix(r, c), rat_matrix(r, c))
        .prop_filter_map("degenerate pair", |(a, b)| BiMatrix::new(a, b).ok())
}

proptest! {
    #[test]
    fn addition_commutes_and_collapse_is_symmetric(
        a in rect_pair(2, 3),
        b in rect_pair(2, 3),
    ) {
        let ab = a.add(&b);
        let ba = b.add(&a);
        match (ab, ba) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(Error::DegenerateCollapse), Err(Error::DegenerateCollapse)) => {}
            other => prop_assert!(false, "asymmetric outcome {:?}", other),
        }
    }

    #[test]
    fn addition_associates(
        a in rect_pair(2, 2),
        b in rect_pair(2, 2),
        c in rect_pair(2, 2),
    ) {
        let lhs = a.add_relaxed(&b).unwrap().add_relaxed(&c).unwrap();
        let rhs = a.add_relaxed(&b.add_relaxed(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_distributes_and_associates(
        a in square_pair(3),
        b in square_pair(3),
        c in square_pair(3),
    ) {
        let sum = b.add_relaxed(&c).unwrap();
        let lhs = a.mul_relaxed(&sum).unwrap();
        let rhs = a
            .mul_relaxed(&b)
            .unwrap()
            .add_relaxed(&a.mul_relaxed(&c).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);

        let assoc_l = a.mul_relaxed(&b).unwrap().mul_relaxed(&c).unwrap();
        let assoc_r = a.mul_relaxed(&b.mul_relaxed(&c).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
    }

    #[test]
    fn transpose_rules(a in rect_pair(2, 3), b in rect_pair(2, 3)) {
        let sum_t = a.add_relaxed(&b).unwrap().transpose();
        let t_sum = a.transpose().add_relaxed(&b.transpose()).unwrap();
        prop_assert_eq!(sum_t, t_sum);
    }

    #[test]
    fn product_transpose_rule(a in square_pair(3), b in square_pair(3)) {
        let lhs = a.mul_relaxed(&b).unwrap().transpose();
        let rhs = b.transpose().mul_relaxed(&a.transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sym_skew_decomposition_properties(a in square_pair(3)) {
        let pair = a.sym_skew_decompose().unwrap();
        prop_assert_eq!(pair.symmetric.transpose(), pair.symmetric.clone());
        prop_assert_eq!(pair.skew.transpose(), pair.skew.neg());
        prop_assert_eq!(pair.symmetric.add_relaxed(&pair.skew).unwrap(), a);
    }

    #[test]
    fn mixed_shape_sums_never_collapse(
        m1 in rat_matrix(2, 2),
        m2 in rat_matrix(3, 3),
        n1 in rat_matrix(2, 2),
        n2 in rat_matrix(3, 3),
    ) {
        let a = BiMatrix::relaxed(m1, m2);
        let b = BiMatrix::relaxed(n1, n2);
        prop_assert!(a.add(&b).is_ok());
    }

    #[test]
    fn determinant_matches_leibniz_oracle(a in square_pair(4)) {
        let d = a.bideterminant().unwrap();
        prop_assert_eq!(d.first, leibniz_det(a.first()));
        prop_assert_eq!(d.second, leibniz_det(a.second()));
    }

    #[test]
    fn bilaplace_total_equals_bideterminant_for_every_row_set(a in square_pair(4)) {
        let d = a.bideterminant().unwrap();
        for rows in [
            vec![1], vec![2], vec![3], vec![4],
            vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4],
            vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4],
        ] {
            let exp = a.bilaplace_expand(&rows).unwrap();
            prop_assert_eq!(&exp.total, &d);
        }
    }

    #[test]
    fn product_theorem(a in square_pair(3), b in square_pair(3)) {
        let prod = a.mul_relaxed(&b).unwrap();
        let lhs = BiDeterminant::new(prod.first().det().unwrap(), prod.second().det().unwrap());
        let rhs = a
            .bideterminant()
            .unwrap()
            .componentwise_mul(&b.bideterminant().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cayley_hamilton(a in square_pair(4)) {
        let p = a.char_bipolynomial().unwrap();
        prop_assert!(p.first.eval_matrix(a.first()).is_zero());
        prop_assert!(p.second.eval_matrix(a.second()).is_zero());
    }

    #[test]
    fn minimal_divides_characteristic(a in square_pair(4)) {
        let min = a.biminimal_polynomial().unwrap();
        let ch = a.char_bipolynomial().unwrap();
        prop_assert!(min.first.divides(&ch.first));
        prop_assert!(min.second.divides(&ch.second));
        // identical rational root sets
        for (m, c) in [(&min.first, &ch.first), (&min.second, &ch.second)] {
            let rm: Vec<Rational> = m.rational_roots().0.into_iter().map(|(r, _)| r).collect();
            let rc: Vec<Rational> = c.rational_roots().0.into_iter().map(|(r, _)| r).collect();
            prop_assert_eq!(rm, rc);
        }
    }

    #[test]
    fn eigen_consistency(a in square_pair(4)) {
        let report = a.bieigen().unwrap();
        for (m, spectrum) in [(a.first(), &report.first), (a.second(), &report.second)] {
            let order = m.rows();
            let mut alg_total = 0;
            for pair in &spectrum.pairs {
                prop_assert!(pair.geometric >= 1);
                prop_assert!(pair.geometric <= pair.algebraic);
                alg_total += pair.algebraic;
                for v in &pair.eigenspace {
                    let vm = Matrix::from_fn(order, 1, |r, _| v[r].clone());
                    prop_assert_eq!(m.mul(&vm).unwrap(), vm.scalar_mul(&pair.root));
                }
            }
            prop_assert_eq!(alg_total + spectrum.residual.degree(), order);
        }
    }

    #[test]
    fn diagonalizability_agrees_with_brute_force(a in square_pair(3)) {
        let check = a.is_bidiagonalizable().unwrap();
        let brute =
            brute_force_diagonalizable(a.first()) && brute_force_diagonalizable(a.second());
        prop_assert_eq!(check.diagonalizable, brute);
    }

    #[test]
    fn projection_identities_whenever_diagonalizable(a in square_pair(3)) {
        if !a.is_bidiagonalizable().unwrap().diagonalizable {
            return Ok(());
        }
        let proj = a.biprojections().unwrap();
        for (m, projs) in [(a.first(), &proj.first), (a.second(), &proj.second)] {
            let n = m.rows();
            let mut sum = Matrix::<Rational>::zero(n, n);
            let mut weighted = Matrix::<Rational>::zero(n, n);
            for (i, p) in projs.iter().enumerate() {
                prop_assert_eq!(&p.matrix.mul(&p.matrix).unwrap(), &p.matrix);
                for (j, q) in projs.iter().enumerate() {
                    if i != j {
                        prop_assert!(p.matrix.mul(&q.matrix).unwrap().is_zero());
                    }
                }
                sum = sum.add(&p.matrix).unwrap();
                weighted = weighted.add(&p.matrix.scalar_mul(&p.eigenvalue)).unwrap();
            }
            prop_assert_eq!(sum, Matrix::identity(n));
            prop_assert_eq!(&weighted, m);
        }
    }

    #[test]
    fn similarity_preserves_char_bipolynomial(a in square_pair(3), seed in any::<u64>()) {
        let mut rng = TestRng::new(seed);
        let p = BiMatrix::relaxed(rng.nonsingular_matrix(3), rng.nonsingular_matrix(3));
        let conj = BiMatrix::relaxed(
            p.first().inverse().unwrap().unwrap().mul(a.first()).unwrap().mul(p.first()).unwrap(),
            p.second().inverse().unwrap().unwrap().mul(a.second()).unwrap().mul(p.second()).unwrap(),
        );
        prop_assert!(a.check_similarity_witness(&conj, &p).unwrap());
        prop_assert_eq!(a.char_bipolynomial().unwrap(), conj.char_bipolynomial().unwrap());
    }

    #[test]
    fn inverse_identities(seed in any::<u64>()) {
        let mut rng = TestRng::new(seed);
        let a = rng.nonsingular_bimatrix(3, 3);
        let b = rng.nonsingular_bimatrix(3, 3);
        let a_inv = a.biinverse().unwrap();
        prop_assert_eq!(a.mul_relaxed(&a_inv).unwrap(), BiMatrix::identity(3, 3));
        prop_assert_eq!(a_inv.mul_relaxed(&a).unwrap(), BiMatrix::identity(3, 3));
        prop_assert_eq!(a_inv.biinverse().unwrap(), a.clone());
        let ab_inv = a.mul_relaxed(&b).unwrap().biinverse().unwrap();
        let rhs = b.biinverse().unwrap().mul_relaxed(&a_inv).unwrap();
        prop_assert_eq!(ab_inv, rhs);
    }

    #[test]
    fn rref_soundness(a in rect_pair(3, 4)) {
        let red = a.row_bireduce(BireduceMode::Weak).unwrap();
        match &red.log {
            bimat_core::operator::BireduceLog::Weak { first, second } => {
                let mut m1 = a.first().clone();
                for op in first { op.apply(&mut m1); }
                prop_assert_eq!(&m1, red.result.first());
                let mut m2 = a.second().clone();
                for op in second { op.apply(&mut m2); }
                prop_assert_eq!(&m2, red.result.second());
            }
            _ => prop_assert!(false, "weak log expected"),
        }
        // canonical form is a fixpoint
        prop_assert_eq!(&red.result.first().rref().matrix, red.result.first());
        prop_assert_eq!(&red.result.second().rref().matrix, red.result.second());
        // nullspaces computed from the RREF agree with the solver
        let zero = vec![rat(0); 3];
        let sol = a.solve_biequation(&zero, &zero).unwrap();
        prop_assert_eq!(&sol.first.nullspace, &a.first().nullspace());
        prop_assert_eq!(&sol.second.nullspace, &a.second().nullspace());
    }

    #[test]
    fn strong_mode_log_replays_on_both(a in square_pair(3)) {
        let red = a.row_bireduce(BireduceMode::Strong).unwrap();
        match &red.log {
            bimat_core::operator::BireduceLog::Strong { ops, .. } => {
                let mut m1 = a.first().clone();
                let mut m2 = a.second().clone();
                for op in ops {
                    op.apply(&mut m1);
                    op.apply(&mut m2);
                }
                prop_assert_eq!(&m1, red.result.first());
                prop_assert_eq!(&m2, red.result.second());
                prop_assert_eq!(&m1, &a.first().rref().matrix);
            }
            _ => prop_assert!(false, "strong log expected"),
        }
    }

    #[test]
    fn neutro_matmul_commutes_with_evaluations(
        a_re in prop::collection::vec(-3i64..=3, 6),
        a_im in prop::collection::vec(-3i64..=3, 6),
        b_re in prop::collection::vec(-3i64..=3, 6),
        b_im in prop::collection::vec(-3i64..=3, 6),
    ) {
        let build = |re: &[i64], im: &[i64], r: usize, c: usize| {
            Matrix::from_fn(r, c, |i, j| {
                NeutrosophicScalar::new(rat(re[i * c + j]), rat(im[i * c + j]))
            })
        };
        let a = build(&a_re, &a_im, 2, 3);
        let b = build(&b_re, &b_im, 3, 2);
        let ab = neutro_matmul(&a, &b).unwrap();
        let ev0 = |x: &NeutrosophicScalar| x.eval_at_zero();
        let ev1 = |x: &NeutrosophicScalar| x.eval_at_one();
        prop_assert_eq!(ab.map(ev0), a.map(ev0).mul(&b.map(ev0)).unwrap());
        prop_assert_eq!(ab.map(ev1), a.map(ev1).mul(&b.map(ev1)).unwrap());
    }
}

/// Wide homogeneous systems always have nontrivial bisolutions.
#[test]
fn theorem_wide_homogeneous_nontrivial() {
    let mut rng = TestRng::new(0xA51CE);
    for _ in 0..50 {
        let rows = rng.usize_in(1, 3);
        let cols = rng.usize_in(rows + 1, rows + 3);
        let a = rng.bimatrix((rows, cols), (rows, cols));
        let zero = vec![rat(0); rows];
        let sol = a.solve_biequation(&zero, &zero).unwrap();
        assert!(!sol.first.nullspace.is_empty());
        assert!(!sol.second.nullspace.is_empty());
    }
}

/// A square pair is weakly row biequivalent to the identity bimatrix iff the
/// homogeneous system has only the trivial bisolution.
#[test]
fn theorem_identity_biequivalence() {
    let mut rng = TestRng::new(0xB0B);
    let mut seen_singular = 0;
    let mut seen_nonsingular = 0;
    for _ in 0..200 {
        let a = rng.square_bimatrix(3);
        let red = a.row_bireduce(BireduceMode::Weak).unwrap();
        let reaches_identity = *red.result.first() == Matrix::identity(3)
            && *red.result.second() == Matrix::identity(3);
        let zero = vec![rat(0); 3];
        let sol = a.solve_biequation(&zero, &zero).unwrap();
        let trivial_only = sol.first.nullspace.is_empty() && sol.second.nullspace.is_empty();
        assert_eq!(reaches_identity, trivial_only);
        if trivial_only {
            seen_nonsingular += 1;
        } else {
            seen_singular += 1;
        }
    }
    assert!(
        seen_singular > 0,
        "generator never produced a singular pair"
    );
    assert!(seen_nonsingular > 0);
}

/// The uniqueness half of the symmetric/skew decomposition: any other skew
/// part fails the sum check.
#[test]
fn sym_skew_uniqueness() {
    let mut rng = TestRng::new(0x5EED);
    for _ in 0..100 {
        let a = rng.square_bimatrix(3);
        let pair = a.sym_skew_decompose().unwrap();
        // random skew perturbation
        let raw = rng.int_matrix(3, 3);
        let d = raw.sub(&raw.transpose()).unwrap();
        if d.is_zero() {
            continue;
        }
        let other_skew = BiMatrix::relaxed(
            pair.skew.first().add(&d).unwrap(),
            pair.skew.second().clone(),
        );
        let reassembled = pair.symmetric.add_relaxed(&other_skew).unwrap();
        assert_ne!(reassembled, a);
    }
}

/// Scaling by a zero divisor of Q(I) can make distinct components coincide;
/// the collapse check catches it.
#[test]
fn scalar_mul_collapse_over_zero_divisors() {
    use bimat_core::scalar::Ring as _;
    let i = NeutrosophicScalar::i();
    let one = NeutrosophicScalar::one();
    let a = BiMatrix::new(
        Matrix::from_rows(vec![vec![one]]).unwrap(),
        Matrix::from_rows(vec![vec![i.clone()]]).unwrap(),
    )
    .unwrap();
    assert_eq!(a.scalar_mul(&i).unwrap_err(), Error::DegenerateCollapse);
}

proptest! {
    /// Canonical rationals survive a format/parse round trip.
    #[test]
    fn rational_token_round_trip(num in -10_000i64..=10_000, den in 1i64..=10_000) {
        let x = Rational::new(num, den);
        prop_assert_eq!(Rational::parse(&x.to_string()).unwrap(), x);
    }

    /// Neutrosophic tokens survive a format/parse round trip.
    #[test]
    fn neutro_token_round_trip(
        an in -100i64..=100, ad in 1i64..=12,
        bn in -100i64..=100, bd in 1i64..=12,
    ) {
        let x = NeutrosophicScalar::new(Rational::new(an, ad), Rational::new(bn, bd));
        prop_assert_eq!(NeutrosophicScalar::parse(&x.to_string()).unwrap(), x);
    }
}
