use super::*;
use crate::rat::{int, rat};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

#[test]
fn h2_in_p_basis() {
    let h2 = SymFunc::h_n(2).convert(Basis::P);
    assert_eq!(h2.coeff(&p(&[2])), rat(1, 2));
    assert_eq!(h2.coeff(&p(&[1, 1])), rat(1, 2));
}

#[test]
fn e1_is_p1() {
    let e1 = SymFunc::e_n(1).convert(Basis::P);
    assert_eq!(e1, SymFunc::p_n(1));
}

#[test]
fn column_schur_is_elementary() {
    // s_{(1^n)} = e_n
    for n in 1..=6u32 {
        let s = SymFunc::schur(Partition::new(vec![1; n as usize])).convert(Basis::E);
        assert_eq!(s, SymFunc::e_n(n), "n = {n}");
    }
    // and s_{(n)} = h_n
    for n in 1..=6u32 {
        let s = SymFunc::schur(p(&[n])).convert(Basis::H);
        assert_eq!(s, SymFunc::h_n(n), "n = {n}");
    }
}

#[test]
fn conversion_round_trips() {
    let bases = [Basis::P, Basis::E, Basis::H, Basis::M, Basis::S];
    for n in 0..=8u32 {
        for lam in Partition::all(n) {
            for &from in &bases {
                let f = SymFunc::basis_element(from, lam.clone());
                for &to in &bases {
                    assert_eq!(
                        f.convert(to).convert(from),
                        f,
                        "{}{} via {:?}",
                        from.symbol(),
                        lam,
                        to
                    );
                }
            }
        }
    }
}

#[test]
fn scalar_product_values() {
    assert_eq!(SymFunc::p_n(2).scalar_product(&SymFunc::p_n(2)), int(2));
    let s21 = SymFunc::schur(p(&[2, 1]));
    let s3 = SymFunc::schur(p(&[3]));
    assert_eq!(s21.scalar_product(&s3), int(0));
    assert_eq!(s21.scalar_product(&s21), int(1));
    // h/m duality: ⟨h_λ, m_μ⟩ = δ
    for n in 1..=5u32 {
        for a in Partition::all(n) {
            for b in Partition::all(n) {
                let h = SymFunc::basis_element(Basis::H, a.clone());
                let m = SymFunc::basis_element(Basis::M, b.clone());
                let expect = if a == b { int(1) } else { int(0) };
                assert_eq!(h.scalar_product(&m), expect, "⟨h{a}, m{b}⟩");
            }
        }
    }
}

#[test]
fn schur_orthonormal() {
    for n in 1..=6u32 {
        for a in Partition::all(n) {
            for b in Partition::all(n) {
                let sa = SymFunc::schur(a.clone());
                let sb = SymFunc::schur(b.clone());
                let expect = if a == b { int(1) } else { int(0) };
                assert_eq!(sa.scalar_product(&sb), expect);
            }
        }
    }
}

#[test]
fn character_consistency_with_transitions() {
    // expanding p_ρ in the s-basis recovers χ^λ_ρ
    for n in 1..=6u32 {
        for rho in Partition::all(n) {
            let in_s = SymFunc::basis_element(Basis::P, rho.clone()).convert(Basis::S);
            for lam in Partition::all(n) {
                let chi = int(character(&lam, &rho).unwrap());
                assert_eq!(in_s.coeff(&lam), chi);
            }
        }
    }
}

#[test]
fn character_against_alternant_oracle() {
    // independent route: solve for χ from evaluations of p_ρ and s_λ at
    // distinct rational points via the alternant determinant
    for n in 1..=5u32 {
        let parts = Partition::all(n);
        let points: Vec<Rat> = (0..n as i64).map(|i| rat(2 * i + 1, 2)).collect();
        for rho in &parts {
            let p_val = SymFunc::basis_element(Basis::P, rho.clone()).eval_rats(&points);
            let mut acc = Rat::zero();
            for lam in &parts {
                let s_val = schur_alternant_at(lam, &points).unwrap();
                acc += int(character(lam, rho).unwrap()) * s_val;
            }
            assert_eq!(acc, p_val, "p_{rho} at rational points");
        }
    }
}

#[test]
fn jacobi_trudi_matches_conversion() {
    for n in 0..=8u32 {
        for lam in Partition::all(n) {
            let jt = jacobi_trudi(&lam);
            let direct = SymFunc::schur(lam.clone()).convert(Basis::H);
            assert_eq!(jt, direct, "λ = {lam}");
            let jt_dual = jacobi_trudi_dual(&lam).convert(Basis::S);
            assert_eq!(jt_dual, SymFunc::schur(lam.clone()), "dual, λ = {lam}");
        }
    }
}

#[test]
fn jacobi_trudi_examples() {
    // (n) -> h_n
    assert_eq!(jacobi_trudi(&p(&[3])), SymFunc::h_n(3));
    // (2,1) -> h2 h1 - h3
    let jt = jacobi_trudi(&p(&[2, 1]));
    assert_eq!(jt.coeff(&p(&[2, 1])), int(1));
    assert_eq!(jt.coeff(&p(&[3])), int(-1));
    // (1,1,1) -> e_3 via the dual form
    assert_eq!(jacobi_trudi_dual(&p(&[1, 1, 1])), SymFunc::e_n(3));
}

#[test]
fn omega_involution() {
    assert_eq!(SymFunc::p_n(3).omega(), SymFunc::p_n(3));
    assert_eq!(SymFunc::p_n(2).omega(), SymFunc::p_n(2).scale(&int(-1)));
    assert_eq!(SymFunc::h_n(2).omega().convert(Basis::E), SymFunc::e_n(2));
    let s21 = SymFunc::schur(p(&[2, 1]));
    assert_eq!(s21.omega(), s21);
    for n in 0..=8u32 {
        for lam in Partition::all(n) {
            let s = SymFunc::schur(lam.clone());
            assert_eq!(s.omega(), SymFunc::schur(lam.conjugate()), "ω(s_{lam})");
            assert_eq!(s.omega().omega(), s, "involution at {lam}");
            let h = SymFunc::basis_element(Basis::H, lam.clone());
            assert_eq!(
                h.omega().convert(Basis::E),
                SymFunc::basis_element(Basis::E, lam.clone())
            );
        }
    }
}

#[test]
fn skew_schur_cases() {
    let lam = p(&[3, 2]);
    assert_eq!(skew_schur(&lam, &lam), SymFunc::one(Basis::S));
    assert_eq!(
        skew_schur(&lam, &Partition::empty()),
        SymFunc::schur(lam.clone())
    );
    // s_{(2,1)/(1)} = s_2 + s_{11}
    let sk = skew_schur(&p(&[2, 1]), &p(&[1]));
    assert_eq!(sk.coeff(&p(&[2])), int(1));
    assert_eq!(sk.coeff(&p(&[1, 1])), int(1));
    // non-containment -> 0
    assert!(skew_schur(&p(&[2]), &p(&[1, 1])).is_zero());
}

#[test]
fn skew_schur_via_evaluations() {
    // s_λ(X ∪ Y) = sum_μ s_{λ/μ}(X) s_μ(Y) at rational points
    let xs = [rat(1, 2), rat(1, 3)];
    let ys = [rat(2, 1)];
    let all: Vec<Rat> = xs.iter().chain(ys.iter()).cloned().collect();
    for n in 0..=6u32 {
        for lam in Partition::all(n) {
            let lhs = SymFunc::schur(lam.clone()).eval_rats(&all);
            let mut rhs = Rat::zero();
            for w in 0..=lam.weight() {
                for mu in Partition::all(w) {
                    let sk = skew_schur(&lam, &mu);
                    if sk.is_zero() {
                        continue;
                    }
                    rhs += sk.eval_rats(&xs) * SymFunc::schur(mu.clone()).eval_rats(&ys);
                }
            }
            assert_eq!(lhs, rhs, "λ = {lam}");
        }
    }
}

#[test]
fn fg_series_are_inverse() {
    let d = 6;
    let f = series_f(d);
    let g = series_g(d);
    let prod = convolve(&f, &g);
    assert_eq!(prod[0], SymFunc::one(Basis::P));
    for (k, c) in prod.iter().enumerate().skip(1) {
        assert!(c.is_zero(), "t^{k} coefficient should vanish, got {c}");
    }
    // F coefficient of t^2 is h_2 = s_(2); G coefficient of t^2 is +e_2 = s_(1,1)
    assert_eq!(f[2].convert(Basis::S), SymFunc::schur(p(&[2])));
    assert_eq!(g[2].convert(Basis::S), SymFunc::schur(p(&[1, 1])));
    // (F·G) coefficient of t^1 is h_1 - e_1 = 0
    assert!(prod[1].is_zero());
}

#[test]
fn cauchy_kernels() {
    cauchy_schur_check(1, 1, 3, &int(1)).unwrap();
    cauchy_schur_check(2, 2, 4, &int(1)).unwrap();
    cauchy_schur_check(2, 1, 4, &rat(1, 2)).unwrap();
}

#[test]
fn replicate_examples() {
    assert_eq!(
        SymFunc::p_n(1).replicate(&int(2)),
        SymFunc::p_n(1).scale(&int(2))
    );
    let f = SymFunc::h_n(2);
    assert_eq!(f.replicate(&int(1)), f);
    // replicate(h2, 2) at (x) equals h2(x, x) = 3x^2
    let r = SymFunc::h_n(2).replicate(&int(2));
    let x = rat(5, 7);
    assert_eq!(r.eval_rats(&[x.clone()]), SymFunc::h_n(2).eval_rats(&[x.clone(), x.clone()]));
    // integer replication = literal doubling for assorted functions
    for n in 0..=5u32 {
        for lam in Partition::all(n) {
            let f = SymFunc::schur(lam.clone());
            let lhs = f.replicate(&int(2)).eval_rats(&[x.clone(), rat(1, 3)]);
            let rhs = f.eval_rats(&[x.clone(), x.clone(), rat(1, 3), rat(1, 3)]);
            assert_eq!(lhs, rhs, "λ = {lam}");
        }
    }
}

#[test]
fn monomial_evaluation_oracle() {
    // every basis element evaluated at concrete points matches the direct
    // summation from the defining formulas (h/e/p monomial sums)
    let points = [rat(1, 2), rat(-1, 3), rat(2, 5), rat(1, 7)];
    let n_vars = points.len();

    // direct h_n: sum over weakly increasing index tuples
    fn h_direct(n: u32, pts: &[Rat]) -> Rat {
        fn rec(n: u32, start: usize, pts: &[Rat]) -> Rat {
            if n == 0 {
                return Rat::one();
            }
            let mut acc = Rat::zero();
            for i in start..pts.len() {
                acc += &pts[i] * rec(n - 1, i, pts);
            }
            acc
        }
        rec(n, 0, pts)
    }
    // direct e_n: strictly increasing tuples
    fn e_direct(n: u32, pts: &[Rat]) -> Rat {
        fn rec(n: u32, start: usize, pts: &[Rat]) -> Rat {
            if n == 0 {
                return Rat::one();
            }
            let mut acc = Rat::zero();
            for i in start..pts.len() {
                acc += &pts[i] * rec(n - 1, i + 1, pts);
            }
            acc
        }
        rec(n, 0, pts)
    }

    for n in 0..=6u32 {
        assert_eq!(SymFunc::h_n(n).eval_rats(&points), h_direct(n, &points), "h_{n}");
        assert_eq!(SymFunc::e_n(n).eval_rats(&points), e_direct(n, &points), "e_{n}");
        if n >= 1 {
            let p_direct: Rat = points.iter().map(|x| x.pow(n as i32)).sum();
            assert_eq!(SymFunc::p_n(n).eval_rats(&points), p_direct);
        }
    }
    // m_λ via distinct permutations: cross-check m against p-route by the
    // alternant oracle through s instead (m = sum over conversions)
    for n in 0..=6u32 {
        for lam in Partition::all(n) {
            let direct = schur_alternant_at(&lam, &points).unwrap();
            let via_p = SymFunc::schur(lam.clone()).eval_rats(&points);
            assert_eq!(direct, via_p, "s_{lam} alternant vs p-route");
        }
    }
    let _ = n_vars;
}

#[test]
fn littlewood_richardson_small() {
    // s_1 * s_1 = s_2 + s_{11}
    let prod = SymFunc::schur(p(&[1])).mul(&SymFunc::schur(p(&[1]))).convert(Basis::S);
    assert_eq!(prod.coeff(&p(&[2])), int(1));
    assert_eq!(prod.coeff(&p(&[1, 1])), int(1));
    // Pieri: s_{21} * s_1 = s_{31} + s_{22} + s_{211}
    let prod = SymFunc::schur(p(&[2, 1])).mul(&SymFunc::schur(p(&[1]))).convert(Basis::S);
    assert_eq!(prod.coeff(&p(&[3, 1])), int(1));
    assert_eq!(prod.coeff(&p(&[2, 2])), int(1));
    assert_eq!(prod.coeff(&p(&[2, 1, 1])), int(1));
    assert_eq!(prod.coeff(&p(&[3])), int(0));
}
