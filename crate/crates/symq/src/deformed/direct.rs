//! Direct symmetrization formulas for Hall-Littlewood Q-polynomials and the
//! classical Schur Q-functions, at oracle scale (few variables).
//!
//! Both formulas are sums of rational functions whose total is a polynomial.
//! They are computed exactly: every term is put over a power of the products
//! prod (x_a - x_b) and prod (x_a + x_b), the numerators are expanded, and
//! the final division is performed by synthetic division with respect to one
//! variable at a time (the remainder must vanish; this is asserted).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::Rat;
use crate::series::Series;

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Exact division of `f` by (x_i - s*x_j) with s = +1 or -1.
/// Panics when the division is not exact.
fn divide_by_binomial(f: &Series, i: usize, j: usize, s: i64) -> Series {
    let vars: Vec<&str> = f.vars().iter().map(|v| v.as_str()).collect();
    let xi = &vars[i].to_string();
    let xj_mono = Series::monomial(&vars, f.trunc(), vars[j], 1, Rat::from_integer(s.into()));
    let max_deg = f
        .iter()
        .map(|(e, _)| e[i])
        .max()
        .unwrap_or(0);
    let mut q = Series::zero(&vars, f.trunc());
    // q_{k-1} = f_k + s x_j q_k, descending
    let mut qk = Series::zero(&vars, f.trunc());
    for k in (1..=max_deg).rev() {
        let fk = f.coefficient_of(xi, k);
        qk = fk.add(&xj_mono.mul(&qk));
        let mono = Series::monomial(&vars, f.trunc(), xi, k - 1, Rat::one());
        q = q.add(&qk.mul(&mono));
    }
    // remainder: f_0 + s x_j q_0 must vanish
    let f0 = f.coefficient_of(xi, 0);
    let r = f0.add(&xj_mono.mul(&qk));
    assert!(r.is_zero(), "inexact binomial division");
    q
}

/// v_m(t) = prod_{k=1}^m (1 - t^k)/(1 - t)
fn v_poly(m: u32, t: &Rat) -> Rat {
    let mut acc = Rat::one();
    let one_minus_t = Rat::one() - t;
    for k in 1..=m {
        acc *= (Rat::one() - t.pow(k as i32)) / &one_minus_t;
    }
    acc
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    fn rec(idx: &mut Vec<usize>, k: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == idx.len() {
            out.push((idx.clone(), sign));
            return;
        }
        for i in k..idx.len() {
            idx.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(idx, k + 1, s, out);
            idx.swap(k, i);
        }
    }
    rec(&mut idx, 0, 1, &mut out);
    out
}

/// Hall-Littlewood Q_λ(x_1..x_n; t) by the symmetrization formula,
/// normalized so that it agrees with b_λ P_λ in any number of variables:
///
///   Q_λ = (1-t)^{ℓ(λ)} / v_{n-ℓ}(t) · sum_{σ in S_n} σ( x^λ prod_{i<j} (x_i - t x_j)/(x_i - x_j) )
///
/// The raw symmetrized sum carries an extra v_{n-ℓ(λ)}(t) compared to the
/// stable Q_λ whenever n > ℓ(λ) + 1; dividing it out keeps the result
/// consistent with the Gram-Schmidt normalization. Errors when v_{n-ℓ}(t)
/// vanishes (e.g. t = -1 with n >= ℓ + 2); use fewer variables there.
pub fn hall_littlewood_direct(lambda: &Partition, nvars: usize, t: &Rat) -> Result<Series> {
    let names = x_names(nvars);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let deg = lambda.weight() + (nvars * (nvars - 1) / 2) as u32;
    if lambda.len() > nvars {
        return Ok(Series::zero(&vars, lambda.weight()));
    }
    let m0 = (nvars - lambda.len()) as u32;
    let v = v_poly(m0, t);
    if v.is_zero() {
        return Err(Error::Domain(format!(
            "normalization v_{m0}(t) vanishes at t = {}; use at most ℓ(λ)+1 variables",
            crate::rat::format_rat(t)
        )));
    }

    // numerator: sum_σ sgn(σ) σ( x^λ prod_{i<j} (x_i - t x_j) )
    let mut num = Series::zero(&vars, deg);
    for (perm, sign) in permutations(nvars) {
        let mut term = Series::constant(&vars, deg, Rat::from_integer(sign.into()));
        let mut mono = vec![0u32; nvars];
        for (row, &var) in perm.iter().enumerate() {
            mono[var] = lambda.part(row);
        }
        let mut base = Series::zero(&vars, deg);
        base.set_coeff(mono, Rat::one());
        term = term.mul(&base);
        for a in 0..nvars {
            for b in (a + 1)..nvars {
                // (x_{σ(a)} - t x_{σ(b)})
                let xa = Series::variable(&vars, deg, vars[perm[a]]);
                let xb = Series::monomial(&vars, deg, vars[perm[b]], 1, -t.clone());
                term = term.mul(&xa.add(&xb));
            }
        }
        num = num.add(&term);
    }
    // divide by the Vandermonde
    let mut quot = num;
    for a in 0..nvars {
        for b in (a + 1)..nvars {
            if quot.is_zero() {
                break;
            }
            quot = divide_by_binomial(&quot, a, b, 1);
        }
    }
    let scale = (Rat::one() - t).pow(lambda.len() as i32) / v;
    Ok(quot.scale(&scale).truncated(lambda.weight()))
}

/// Classical Schur Q-function Q_λ(x_1..x_n) for strict λ by the direct
/// summation formula
///
///   Q_λ = 2^p sum_{j_1..j_p} x_{j_1}^{λ_1}...x_{j_p}^{λ_p} / (u_{j_1}...u_{j_p})
///         · A(x_{j_p}, ..., x_{j_1}),
///
/// A(y_1..y_p) = prod_{a<b} (y_a - y_b)/(y_a + y_b),
/// u_j = prod_{i != j} (x_j - x_i)/(x_j + x_i).
pub fn q_function_direct(lambda: &Partition, nvars: usize) -> Result<Series> {
    let p = lambda.len();
    if p > 0 {
        for w in lambda.parts().windows(2) {
            if w[0] == w[1] {
                return Err(Error::Usage(format!(
                    "Q-function needs a strict partition, got {lambda}"
                )));
            }
        }
    }
    if p > nvars {
        return Err(Error::Usage(format!(
            "Q_{lambda} needs at least {p} variables, got {nvars}"
        )));
    }
    let names = x_names(nvars);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let pairs = nvars * (nvars - 1) / 2;
    let deg = lambda.weight() + 4 * pairs as u32;
    if p == 0 {
        return Ok(Series::one(&vars, lambda.weight().max(1)));
    }

    // Δ = prod_{a<b} (x_a - x_b)^2 (x_a + x_b)^2 clears every denominator.
    let mut total = Series::zero(&vars, deg);

    // iterate over tuples (j_1..j_p) with distinct entries
    let mut tuple = vec![0usize; p];
    loop {
        if tuple.iter().collect::<std::collections::BTreeSet<_>>().len() == p {
            total = total.add(&q_term(lambda, &tuple, nvars, &vars, deg));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == p {
                // done: divide by Δ and finish
                let mut quot = total.scale(&Rat::from_integer((1i64 << p).into()));
                for a in 0..nvars {
                    for b in (a + 1)..nvars {
                        for s in [1i64, 1, -1, -1] {
                            if quot.is_zero() {
                                break;
                            }
                            quot = divide_by_binomial(&quot, a, b, s);
                        }
                    }
                }
                return Ok(quot.truncated(lambda.weight()));
            }
            if tuple[pos] + 1 < nvars {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// One term of the Q-function sum, multiplied by Δ (all factors expanded).
fn q_term(lambda: &Partition, tuple: &[usize], nvars: usize, vars: &[&str], deg: u32) -> Series {
    use std::collections::BTreeMap;
    let p = tuple.len();
    // factor exponents per canonical pair (a<b): minus = (x_a - x_b), plus = (x_a + x_b)
    let mut minus: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let mut plus: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let mut sign = 1i64;

    let canon = |i: usize, j: usize| (i.min(j), i.max(j));

    // 1/u_{j_k} = prod_{i != j_k} (x_{j_k} + x_i)/(x_{j_k} - x_i)
    for &jk in tuple {
        for i in 0..nvars {
            if i == jk {
                continue;
            }
            *plus.entry(canon(jk, i)).or_insert(0) += 1;
            *minus.entry(canon(jk, i)).or_insert(0) -= 1;
            if jk > i {
                sign = -sign; // (x_jk - x_i) = -(x_i - x_jk)
            }
        }
    }
    // A(y_1..y_p) with y_a = x_{tuple[p-a]} (reversed order)
    let ys: Vec<usize> = tuple.iter().rev().copied().collect();
    for a in 0..p {
        for b in (a + 1)..p {
            *minus.entry(canon(ys[a], ys[b])).or_insert(0) += 1;
            if ys[a] > ys[b] {
                sign = -sign;
            }
            *plus.entry(canon(ys[a], ys[b])).or_insert(0) -= 1;
        }
    }
    // multiply by Δ: exponent + 2 on every pair
    for a in 0..nvars {
        for b in (a + 1)..nvars {
            *minus.entry((a, b)).or_insert(0) += 2;
            *plus.entry((a, b)).or_insert(0) += 2;
        }
    }

    // assemble: sign · x^λ over the tuple · prod factors^exponent
    let mut mono = vec![0u32; nvars];
    for (k, &jk) in tuple.iter().enumerate() {
        mono[jk] += lambda.part(k);
    }
    let mut term = Series::zero(vars, deg);
    term.set_coeff(mono, Rat::from_integer(sign.into()));
    for ((a, b), e) in minus {
        assert!(e >= 0, "uncleared minus denominator");
        let f = Series::variable(vars, deg, vars[a]).sub(&Series::variable(vars, deg, vars[b]));
        term = term.mul(&f.pow(e as u32));
    }
    for ((a, b), e) in plus {
        assert!(e >= 0, "uncleared plus denominator");
        let f = Series::variable(vars, deg, vars[a]).add(&Series::variable(vars, deg, vars[b]));
        term = term.mul(&f.pow(e as u32));
    }
    term
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deformed::{family, DeformationParams};
    use crate::rat::{int, rat};
    use crate::symfunc::{Basis, SymFunc};

    #[test]
    fn division_round_trip() {
        let vars = ["x1", "x2", "x3"];
        let f = Series::variable(&vars, 6, "x1")
            .add(&Series::variable(&vars, 6, "x2").scale(&rat(2, 3)))
            .mul(&Series::variable(&vars, 6, "x1").sub(&Series::variable(&vars, 6, "x3")));
        let q = divide_by_binomial(&f, 0, 2, 1);
        assert_eq!(
            q,
            Series::variable(&vars, 6, "x1").add(&Series::variable(&vars, 6, "x2").scale(&rat(2, 3)))
        );
    }

    #[test]
    fn hl_q1_two_vars() {
        // Q_(1)(x1,x2;t) = (1-t)(x1+x2)
        let t = rat(1, 3);
        let q = hall_littlewood_direct(&Partition::new(vec![1]), 2, &t).unwrap();
        let vars = ["x1", "x2"];
        let expect = Series::variable(&vars, 1, "x1")
            .add(&Series::variable(&vars, 1, "x2"))
            .scale(&(Rat::one() - &t));
        assert_eq!(q, expect);
    }

    #[test]
    fn hl_t_zero_is_schur() {
        // t = 0: Q_λ = s_λ evaluated in n variables
        for n in 0..=5u32 {
            for lam in Partition::all(n) {
                if lam.len() > 3 {
                    continue;
                }
                let q = hall_littlewood_direct(&lam, 3, &int(0)).unwrap();
                let vars = ["x1", "x2", "x3"];
                let s = SymFunc::schur(lam.clone()).eval_series(&vars, lam.weight().max(1), &[0, 1, 2]);
                assert_eq!(q.truncated(lam.weight().max(1)), s, "λ = {lam}");
            }
        }
    }

    #[test]
    fn hl_matches_gram_schmidt() {
        // Q_λ from the symmetrization = b_λ P_λ from Gram-Schmidt, evaluated
        let t = rat(1, 2);
        let params = DeformationParams::HallLittlewood { t: t.clone() };
        let fam = family(&params, 5).unwrap();
        for n in 1..=4u32 {
            for lam in Partition::all(n) {
                if lam.len() > 3 {
                    continue;
                }
                let direct = hall_littlewood_direct(&lam, 3, &t).unwrap();
                let basis = fam.basis(n).unwrap();
                let q_sym = SymFunc::from_coeffs(Basis::P, {
                    let mut m = std::collections::BTreeMap::new();
                    let b = &basis.b[&lam];
                    for (rho, c) in &basis.p_in_p[&lam] {
                        m.insert(rho.clone(), c * b);
                    }
                    m
                });
                let vars = ["x1", "x2", "x3"];
                let via_gs = q_sym.eval_series(&vars, n, &[0, 1, 2]);
                assert_eq!(direct.truncated(n), via_gs, "λ = {lam}");
            }
        }
    }

    #[test]
    fn hl_t_minus_one_guard() {
        // m0 >= 2 at t = -1 is singular by design
        let err = hall_littlewood_direct(&Partition::new(vec![1]), 3, &int(-1));
        assert!(err.is_err());
        // but m0 <= 1 works
        assert!(hall_littlewood_direct(&Partition::new(vec![1]), 2, &int(-1)).is_ok());
    }

    #[test]
    fn q_function_q1() {
        // Q_(1) = 2 p_1
        let q = q_function_direct(&Partition::new(vec![1]), 2).unwrap();
        let vars = ["x1", "x2"];
        let expect = Series::variable(&vars, 1, "x1")
            .add(&Series::variable(&vars, 1, "x2"))
            .scale(&int(2));
        assert_eq!(q, expect);
    }

    #[test]
    fn q_function_empty() {
        let q = q_function_direct(&Partition::empty(), 2).unwrap();
        assert_eq!(q.constant_term(), int(1));
    }

    #[test]
    fn q_function_rejects_non_strict() {
        assert!(q_function_direct(&Partition::new(vec![2, 2]), 3).is_err());
    }

    #[test]
    fn q_function_matches_hl_at_minus_one() {
        // strict λ: Schur Q = Hall-Littlewood Q at t = -1
        for lam in [
            Partition::new(vec![1]),
            Partition::new(vec![2]),
            Partition::new(vec![2, 1]),
            Partition::new(vec![3]),
            Partition::new(vec![3, 1]),
            Partition::new(vec![3, 2]),
        ] {
            // keep nvars <= ℓ(λ)+1 so the HL normalization is regular
            let nvars = lam.len() + 1;
            let a = q_function_direct(&lam, nvars).unwrap();
            let b = hall_littlewood_direct(&lam, nvars, &int(-1)).unwrap();
            assert_eq!(a, b, "λ = {lam}");
        }
    }

    #[test]
    fn gram_schmidt_rejects_singular_hl_parameter() {
        // t = -1 degenerates ξ_2 = 1/(1 - t^2); the error names the relation
        let params = DeformationParams::HallLittlewood { t: int(-1) };
        let err = family(&params, 3);
        assert!(err.is_err());
        let msg = format!("{}", err.err().unwrap());
        assert!(msg.contains("singular"), "{msg}");
    }
}
