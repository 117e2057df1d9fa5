//! Heisenberg realization on Λ, vertex operators, matrix elements and
//! regularized traces.
//!
//! The oscillator algebra acts on symmetric functions by α_{-n} = p_n·
//! (multiplication) and α_n = n ∂/∂p_n, so a state is just a [`SymFunc`] in
//! the power-sum basis. Generalized vertex operators carry insertion
//! variables symbolically: operator images live in maps from power-sum
//! partitions to polynomials in the insertion variables.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::deformed::{family, DeformationParams, DeformedFamily, Expansion};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::{factorial, Rat};
use crate::ring::RatField;
use crate::series::Series;
use crate::symfunc::{Basis, SymFunc};

/// α_{-n}: multiplication by p_n, truncated at weight `d`.
pub fn creation(n: u32, state: &SymFunc, d: u32) -> SymFunc {
    assert!(n >= 1);
    let f = state.convert(Basis::P);
    let mut out = BTreeMap::new();
    for (rho, c) in f.coeffs() {
        if rho.weight() + n <= d {
            out.insert(rho.with_part(n), c.clone());
        }
    }
    SymFunc::from_coeffs(Basis::P, out)
}

/// α_n = n ∂/∂p_n.
pub fn annihilation(n: u32, state: &SymFunc) -> SymFunc {
    assert!(n >= 1);
    let scaled = partial_p(n, state);
    scaled.scale(&Rat::from_integer((n as i64).into()))
}

/// ∂/∂p_n on the power-sum basis.
pub fn partial_p(n: u32, state: &SymFunc) -> SymFunc {
    let f = state.convert(Basis::P);
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (rho, c) in f.coeffs() {
        let m = rho.multiplicity(n);
        if m == 0 {
            continue;
        }
        let reduced = rho.without_part(n).expect("multiplicity checked");
        let add = c * Rat::from_integer((m as i64).into());
        let slot = out.entry(reduced).or_insert_with(Rat::zero);
        *slot += add;
    }
    out.retain(|_, c| !c.is_zero());
    SymFunc::from_coeffs(Basis::P, out)
}

/// The adjoint D(p_n) = n ξ_n ∂/∂p_n of multiplication by p_n with respect
/// to the ξ-deformed inner product.
pub fn deformed_adjoint(n: u32, params: &DeformationParams, state: &SymFunc) -> Result<SymFunc> {
    let xi = crate::deformed::xi_value(n, params)?;
    Ok(partial_p(n, state).scale(&(xi * Rat::from_integer((n as i64).into()))))
}

/// Laurent expansion of V_α(z)·state:
/// exp(α Σ_k z^k p_k/k) exp(-α Σ_k z^{-k} ∂/∂p_k), symmetric-function weight
/// capped at `d`, z-powers capped at |k| <= d. Keys are z-exponents.
pub fn vertex_simple(alpha: &Rat, state: &SymFunc, d: u32) -> BTreeMap<i64, SymFunc> {
    // annihilation side first
    let mut cur: BTreeMap<i64, SymFunc> = BTreeMap::new();
    cur.insert(0, state.convert(Basis::P));
    let mut acc = cur.clone();
    // exp(A) with A = -α Σ_k z^{-k} ∂_k; A^m kills weight-m states eventually
    let mut power = cur;
    for m in 1.. {
        let mut next: BTreeMap<i64, SymFunc> = BTreeMap::new();
        let mut any = false;
        for (zp, g) in &power {
            for k in 1..=g.max_weight() {
                let dg = partial_p(k, g);
                if dg.is_zero() {
                    continue;
                }
                any = true;
                let term = dg.scale(&-alpha.clone());
                let slot = next
                    .entry(zp - k as i64)
                    .or_insert_with(|| SymFunc::zero(Basis::P));
                *slot = slot.add(&term);
            }
        }
        if !any {
            break;
        }
        let inv_fact = factorial(m).recip();
        for (zp, g) in &next {
            if g.is_zero() {
                continue;
            }
            let slot = acc.entry(*zp).or_insert_with(|| SymFunc::zero(Basis::P));
            *slot = slot.add(&g.scale(&inv_fact));
        }
        power = next;
    }
    // creation side: multiply by exp(α Σ_k z^k p_k / k)
    let mut out = acc.clone();
    let mut power = acc;
    for m in 1..=d {
        let mut next: BTreeMap<i64, SymFunc> = BTreeMap::new();
        for (zp, g) in &power {
            for k in 1..=d {
                let lifted = creation(k, g, d);
                if lifted.is_zero() {
                    continue;
                }
                let c = alpha / Rat::from_integer((k as i64).into());
                let slot = next
                    .entry(zp + k as i64)
                    .or_insert_with(|| SymFunc::zero(Basis::P));
                *slot = slot.add(&lifted.scale(&c));
            }
        }
        if next.is_empty() {
            break;
        }
        let inv_fact = factorial(m).recip();
        for (zp, g) in &next {
            if g.is_zero() {
                continue;
            }
            let slot = out.entry(*zp).or_insert_with(|| SymFunc::zero(Basis::P));
            *slot = slot.add(&g.scale(&inv_fact));
        }
        power = next;
    }
    out.retain(|zp, g| !g.is_zero() && zp.unsigned_abs() <= d as u64);
    out
}

/// dim_σ(α) = prod_{cells (i,j)} (α + j - i)/hook(i,j): the unique
/// polynomial in α matching s_σ on integer-replicated alphabets.
pub fn dim_sigma(alpha: &Rat, sigma: &Partition) -> Rat {
    let mut acc = Rat::one();
    for i in 0..sigma.len() {
        for j in 0..sigma.part(i) as usize {
            let content = Rat::from_integer((j as i64 - i as i64).into());
            let hook = Rat::from_integer((sigma.hook_length(i, j) as i64).into());
            acc *= (alpha + content) / hook;
        }
    }
    acc
}

/// Symbolic insertion block: variables with replication weights.
#[derive(Clone, Debug, Default)]
pub struct Insertions {
    pub vars: Vec<String>,
    pub weights: Vec<Rat>,
}

impl Insertions {
    pub fn new(vars: &[&str], weights: &[Rat]) -> Self {
        assert_eq!(vars.len(), weights.len());
        Insertions {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
        }
    }

    pub fn empty() -> Self {
        Insertions::default()
    }

    /// p_m on the weighted alphabet: sum_i w_i v_i^m as a series.
    fn power_sum(&self, vars: &[&str], trunc: u32, m: u32) -> Series {
        let mut s = Series::zero(vars, trunc);
        for (name, w) in self.vars.iter().zip(&self.weights) {
            let idx = s.var_index(name);
            let mut e = vec![0u32; vars.len()];
            e[idx] = m;
            let prev = s.coeff(&e);
            s.set_coeff(e, prev + w.clone());
        }
        s
    }
}

/// A generalized vertex operator: creation insertions (τ⃗ ∗ Z), annihilation
/// insertions (η⃗ ∗ W), and the deformation ξ.
#[derive(Clone, Debug)]
pub struct VertexSpec {
    pub z: Insertions,
    pub w: Insertions,
    pub params: DeformationParams,
}

fn all_vars(spec: &VertexSpec, extra: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
    v.extend(spec.z.vars.iter().cloned());
    v.extend(spec.w.vars.iter().cloned());
    v
}

/// ⟨P_μ, V Q_ν⟩ computed two independent ways: by applying the operator and
/// pairing, and by the skew-sum formula Σ_ζ P_{μ/ζ}(τ⃗∗Z) Q_{ν/ζ}(η⃗∗W).
/// Errors if the two disagree (internal consistency), otherwise returns the
/// common polynomial in the insertion variables.
pub fn vertex_matrix_element(
    mu: &Partition,
    nu: &Partition,
    spec: &VertexSpec,
) -> Result<Series> {
    let names = all_vars(spec, &[]);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let trunc = mu.weight() + nu.weight();
    let fam = family(&spec.params, mu.weight().max(nu.weight()).max(1))?;

    let direct = matrix_element_direct(mu, nu, spec, &fam, &vars, trunc)?;
    let via_skew = matrix_element_skew(mu, nu, spec, &fam, &vars, trunc)?;
    if direct != via_skew {
        return Err(Error::CheckFailed(format!(
            "vertex matrix element routes disagree at μ={mu}, ν={nu}: direct {direct} vs skew {via_skew}"
        )));
    }
    Ok(direct)
}

/// Operator route: annihilation exponential, creation exponential, pairing.
fn matrix_element_direct(
    mu: &Partition,
    nu: &Partition,
    spec: &VertexSpec,
    fam: &DeformedFamily<RatField>,
    vars: &[&str],
    trunc: u32,
) -> Result<Series> {
    let zero = Series::zero(vars, trunc);
    // state = Q_ν in power-sum coordinates
    let basis_nu = fam.basis(nu.weight())?;
    let mut state: BTreeMap<Partition, Series> = BTreeMap::new();
    for (rho, c) in &basis_nu.p_in_p[nu] {
        state.insert(rho.clone(), zero.constant_like(c * &basis_nu.b[nu]));
    }

    // annihilation: exp(Σ_m c_m(W) ∂_m), c_m(W) = Σ_j η_j w_j^m
    let cap_w = nu.weight();
    let mut acc = state.clone();
    let mut power = state;
    for m in 1..=cap_w.max(1) {
        let mut next: BTreeMap<Partition, Series> = BTreeMap::new();
        for (rho, s) in &power {
            for k in 1..=rho.part(0).max(0) {
                let mult = rho.multiplicity(k);
                if mult == 0 {
                    continue;
                }
                let reduced = rho.without_part(k).unwrap();
                let c = spec.w.power_sum(vars, trunc, k);
                let term = s.mul(&c).scale(&Rat::from_integer((mult as i64).into()));
                add_poly_term(&mut next, reduced, term);
            }
        }
        if next.is_empty() {
            break;
        }
        let inv_fact = factorial(m).recip();
        for (rho, s) in &next {
            add_poly_term(&mut acc, rho.clone(), s.scale(&inv_fact));
        }
        power = next;
    }

    // creation: exp(Σ_m d_m(Z) p_m / (m ξ_m)), capped at weight |μ|
    let cap = mu.weight();
    let mut out = acc.clone();
    let mut power = acc;
    for m in 1..=cap.max(1) {
        let mut next: BTreeMap<Partition, Series> = BTreeMap::new();
        for (rho, s) in &power {
            for k in 1..=cap {
                if rho.weight() + k > cap {
                    continue;
                }
                let d = spec.z.power_sum(vars, trunc, k);
                let xi = fam.xi(k).clone();
                let c = (Rat::from_integer((k as i64).into()) * xi).recip();
                add_poly_term(&mut next, rho.with_part(k), s.mul(&d).scale(&c));
            }
        }
        if next.is_empty() {
            break;
        }
        let inv_fact = factorial(m).recip();
        for (rho, s) in &next {
            add_poly_term(&mut out, rho.clone(), s.scale(&inv_fact));
        }
        power = next;
    }

    // pairing ⟨P_μ, ·⟩_ξ
    let basis_mu = fam.basis(mu.weight())?;
    let mut result = zero.clone();
    for (rho, c) in &basis_mu.p_in_p[mu] {
        if let Some(s) = out.get(rho) {
            let w = rho.z_lambda() * fam.xi_partition(rho);
            result = result.add(&s.scale(&(c * w)));
        }
    }
    Ok(result)
}

fn add_poly_term(map: &mut BTreeMap<Partition, Series>, key: Partition, term: Series) {
    if term.is_zero() {
        return;
    }
    match map.remove(&key) {
        Some(old) => {
            let s = old.add(&term);
            if !s.is_zero() {
                map.insert(key, s);
            }
        }
        None => {
            map.insert(key, term);
        }
    }
}

/// Evaluates a rational power-sum expansion at series-valued power sums.
fn eval_p_at_series(f: &Expansion<Rat>, powersums: &[Series], zero: &Series) -> Series {
    let mut acc = zero.clone();
    for (rho, c) in f {
        let mut term = zero.constant_like(c.clone());
        for &part in rho.parts() {
            term = term.mul(&powersums[part as usize - 1]);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Skew-sum route: Σ_ζ P_{μ/ζ}(τ⃗∗Z) Q_{ν/ζ}(η⃗∗W).
fn matrix_element_skew(
    mu: &Partition,
    nu: &Partition,
    spec: &VertexSpec,
    fam: &DeformedFamily<RatField>,
    vars: &[&str],
    trunc: u32,
) -> Result<Series> {
    let zero = Series::zero(vars, trunc);
    let max_m = mu.weight().max(nu.weight()).max(1);
    let pz: Vec<Series> = (1..=max_m).map(|m| spec.z.power_sum(vars, trunc, m)).collect();
    let pw: Vec<Series> = (1..=max_m).map(|m| spec.w.power_sum(vars, trunc, m)).collect();
    let mut acc = zero.clone();
    for w in 0..=mu.weight().min(nu.weight()) {
        for zeta in Partition::all(w) {
            let p_skew = fam.skew_p(mu, &zeta)?;
            if p_skew.is_empty() {
                continue;
            }
            let q_skew = fam.skew_q(nu, &zeta)?;
            if q_skew.is_empty() {
                continue;
            }
            let a = eval_p_at_series(&p_skew, &pz, &zero);
            let b = eval_p_at_series(&q_skew, &pw, &zero);
            acc = acc.add(&a.mul(&b));
        }
    }
    Ok(acc)
}

/// The regularized trace S_{p/r} = Σ_{μν} p^{|μ|} r^{|ν|} P_{μ/ν}(τ⃗∗Z)
/// Q_{μ/ν}(η⃗∗W) with formal weights: a series in (p, r, insertions),
/// summed over |μ| <= cap.
pub fn trace_series(spec: &VertexSpec, cap: u32) -> Result<Series> {
    let names = all_vars(spec, &["p", "r"]);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let trunc = 3 * cap;
    let fam = family(&spec.params, cap.max(1))?;
    let zero = Series::zero(&vars, trunc);
    let pz: Vec<Series> = (1..=cap.max(1))
        .map(|m| spec.z.power_sum(&vars, trunc, m))
        .collect();
    let pw: Vec<Series> = (1..=cap.max(1))
        .map(|m| spec.w.power_sum(&vars, trunc, m))
        .collect();

    let mut acc = zero.clone();
    for wmu in 0..=cap {
        for mu in Partition::all(wmu) {
            for wnu in 0..=wmu {
                for nu in Partition::all(wnu) {
                    let p_skew = fam.skew_p(&mu, &nu)?;
                    if p_skew.is_empty() {
                        continue;
                    }
                    let q_skew = fam.skew_q(&mu, &nu)?;
                    if q_skew.is_empty() {
                        continue;
                    }
                    let a = eval_p_at_series(&p_skew, &pz, &zero);
                    if a.is_zero() {
                        continue;
                    }
                    let b = eval_p_at_series(&q_skew, &pw, &zero);
                    if b.is_zero() {
                        continue;
                    }
                    let weight = Series::monomial(&vars, trunc, "p", wmu, Rat::one())
                        .mul(&Series::monomial(&vars, trunc, "r", wnu, Rat::one()));
                    acc = acc.add(&weight.mul(&a).mul(&b));
                }
            }
        }
    }
    Ok(acc)
}

/// S_{p/r} at exact rational weights |p|, |r| < 1 (convergence surrogate;
/// the sum is truncated at |μ| <= cap): a polynomial in the insertion
/// variables only.
pub fn vertex_trace(spec: &VertexSpec, p: &Rat, r: &Rat, cap: u32) -> Result<Series> {
    if !crate::rat::abs_lt_one(p) || !crate::rat::abs_lt_one(r) {
        return Err(Error::Usage("trace weights need |p| < 1 and |r| < 1".into()));
    }
    let s = trace_series(spec, cap)?;
    Ok(s.substitute_rat("p", p).substitute_rat("r", r))
}

/// A_{λμ} = Σ_ζ p^{|ζ|} P_{ζ/λ}(τ⃗∗Z) Q_{ζ/μ}(η⃗∗W), |ζ| <= cap, formal p.
pub fn a_lambda_mu(
    spec: &VertexSpec,
    lam: &Partition,
    mu: &Partition,
    cap: u32,
) -> Result<Series> {
    let names = all_vars(spec, &["p", "r"]);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let trunc = 3 * cap;
    let fam = family(&spec.params, cap.max(1))?;
    let zero = Series::zero(&vars, trunc);
    let pz: Vec<Series> = (1..=cap.max(1))
        .map(|m| spec.z.power_sum(&vars, trunc, m))
        .collect();
    let pw: Vec<Series> = (1..=cap.max(1))
        .map(|m| spec.w.power_sum(&vars, trunc, m))
        .collect();
    let mut acc = zero.clone();
    for wz in 0..=cap {
        for zeta in Partition::all(wz) {
            let p_skew = fam.skew_p(&zeta, lam)?;
            if p_skew.is_empty() {
                continue;
            }
            let q_skew = fam.skew_q(&zeta, mu)?;
            if q_skew.is_empty() {
                continue;
            }
            let a = eval_p_at_series(&p_skew, &pz, &zero);
            let b = eval_p_at_series(&q_skew, &pw, &zero);
            let weight = Series::monomial(&vars, trunc, "p", wz, Rat::one());
            acc = acc.add(&weight.mul(&a).mul(&b));
        }
    }
    Ok(acc)
}

/// Hall-Littlewood trace identity with a formal parameter q doubling as the
/// trace weight:
///
///   Σ_{μν} q^{|μ|} P_{μ/ν}(X^{(α)},Y^{(β)}; q) Q_{μ/ν}(W^{(τ)},Z^{(η)}; q)
///     = prod_n (1-q^n)^{-1} prod (1-q x w)^{-ατ} prod (1-q x z)^{-αη}
///       prod (1-q y w)^{-βτ} prod (1-q y z)^{-βη},
///
/// with concrete rational alphabets (each up to two letters), exact to
/// degree d in q. Errors with the first differing q-power.
#[allow(clippy::too_many_arguments)]
pub fn hl_trace_identity_check(
    alpha: &Rat,
    beta: &Rat,
    tau: &Rat,
    eta: &Rat,
    xs: &[Rat],
    ys: &[Rat],
    ws: &[Rat],
    zs: &[Rat],
    d: u32,
) -> Result<()> {
    if xs.len() > 2 || ys.len() > 2 || ws.len() > 2 || zs.len() > 2 {
        return Err(Error::Usage("alphabets are limited to two letters".into()));
    }
    let fam = crate::deformed::hall_littlewood_formal("q", d, d.max(1));
    let ring = fam.ring().clone();
    use crate::ring::CoeffRing;

    // power sums of the replicated union alphabets, as constants in the ring
    let pow_block = |letters: &[Rat], weight: &Rat, m: u32| -> Rat {
        letters.iter().map(|x| x.pow(m as i32) * weight).sum()
    };
    let pa: Vec<Series> = (1..=d.max(1))
        .map(|m| ring.from_rat(&(pow_block(xs, alpha, m) + pow_block(ys, beta, m))))
        .collect();
    let pb: Vec<Series> = (1..=d.max(1))
        .map(|m| ring.from_rat(&(pow_block(ws, tau, m) + pow_block(zs, eta, m))))
        .collect();

    let mut lhs = ring.zero();
    for wmu in 0..=d {
        for mu in Partition::all(wmu) {
            for wnu in 0..=wmu {
                for nu in Partition::all(wnu) {
                    let p_skew = fam.skew_p(&mu, &nu)?;
                    if p_skew.is_empty() {
                        continue;
                    }
                    let q_skew = fam.skew_q(&mu, &nu)?;
                    if q_skew.is_empty() {
                        continue;
                    }
                    let a = fam.eval_p(&p_skew, &pa);
                    if ring.is_zero(&a) {
                        continue;
                    }
                    let b = fam.eval_p(&q_skew, &pb);
                    let qk = ring.monomial("q", wmu, Rat::one());
                    lhs = ring.add(&lhs, &ring.mul(&qk, &ring.mul(&a, &b)));
                }
            }
        }
    }

    // right side: partition series times binomial factors
    // (1 - q u v)^{-γ} = Σ_k (γ)_k/k! (u v)^k q^k
    let binomial_factor = |u: &Rat, v: &Rat, exponent: &Rat| -> Series {
        let mut factor = ring.one();
        let mut coef = Rat::one();
        let uv = u * v;
        for k in 1..=d {
            let kk = Rat::from_integer((k as i64).into());
            coef = coef * (exponent + &kk - Rat::one()) / &kk;
            let c = &coef * uv.pow(k as i32);
            factor = factor.add(&ring.monomial("q", k, c));
        }
        factor
    };
    let mut rhs = ring.one();
    for n in 1..=d {
        rhs = rhs.mul(&ring.geometric("q", n, &Rat::one()));
    }
    for (us, vs, exponent) in [
        (xs, ws, alpha * tau),
        (xs, zs, alpha * eta),
        (ys, ws, beta * tau),
        (ys, zs, beta * eta),
    ] {
        for u in us {
            for v in vs {
                rhs = rhs.mul(&binomial_factor(u, v, &exponent));
            }
        }
    }

    if lhs != rhs {
        let diff = lhs.sub(&rhs);
        let first = diff
            .iter()
            .next()
            .map(|(e, c)| format!("q^{}: {}", e[0], crate::rat::format_rat(c)))
            .unwrap_or_default();
        return Err(Error::CheckFailed(format!(
            "Hall-Littlewood trace identity fails; first difference at {first}"
        )));
    }
    Ok(())
}

/// Candidate readings of the trace functional equation
/// S_{p/r} = prod J_p^{τ_i η_j}(z_i, w_j) · S_{?/?}: which substitution of
/// the (p, r) slots makes it an identity at truncation. Diagnostic only.
pub fn trace_functional_equation_probe(
    spec: &VertexSpec,
    cap: u32,
) -> Result<Vec<(&'static str, bool)>> {
    // C_{μν}(Z, W) = P_{μ/ν}(τ⃗∗Z) Q_{μ/ν}(η⃗∗W)
    let names = all_vars(spec, &[]);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let trunc = 2 * cap;
    let fam = family(&spec.params, cap.max(1))?;
    let zero = Series::zero(&vars, trunc);
    let pz: Vec<Series> = (1..=cap.max(1))
        .map(|m| spec.z.power_sum(&vars, trunc, m))
        .collect();
    let pw: Vec<Series> = (1..=cap.max(1))
        .map(|m| spec.w.power_sum(&vars, trunc, m))
        .collect();

    let mut c: BTreeMap<(Partition, Partition), Series> = BTreeMap::new();
    for wmu in 0..=cap {
        for mu in Partition::all(wmu) {
            for wnu in 0..=wmu {
                for nu in Partition::all(wnu) {
                    let p_skew = fam.skew_p(&mu, &nu)?;
                    let q_skew = fam.skew_q(&mu, &nu)?;
                    let a = eval_p_at_series(&p_skew, &pz, &zero);
                    let b = eval_p_at_series(&q_skew, &pw, &zero);
                    let v = a.mul(&b);
                    if !v.is_zero() {
                        c.insert((mu.clone(), nu.clone()), v);
                    }
                }
            }
        }
    }
    // J_k = Σ_{λ ⊢ k} P_λ(τ⃗∗Z) Q_λ(η⃗∗W) (coefficients of p^k in J_p)
    let mut j: Vec<Series> = Vec::with_capacity(cap as usize + 1);
    for k in 0..=cap {
        let mut acc = zero.clone();
        let basis = fam.basis(k)?;
        for lam in Partition::all(k) {
            let a = eval_p_at_series(&basis.p_in_p[&lam], &pz, &zero);
            if a.is_zero() {
                continue;
            }
            let b = eval_p_at_series(&basis.p_in_p[&lam], &pw, &zero).scale(&basis.b[&lam]);
            acc = acc.add(&a.mul(&b));
        }
        j.push(acc);
    }

    // LHS coefficient at (p^a r^b): Σ_{|μ|=a, |ν|=b} C_{μν}
    let lhs = |a: u32, b: u32| -> Series {
        let mut acc = zero.clone();
        for ((mu, nu), v) in &c {
            if mu.weight() == a && nu.weight() == b {
                acc = acc.add(v);
            }
        }
        acc
    };
    // reading 1: S(rp^2, p^{-1}): term p^{k + 2|μ'| - |ν'|} r^{|μ'|}
    // reading 2: S(p, rp^2):      term p^{k + |μ'| + 2|ν'|} r^{|ν'|}
    // reading 3: S(rp^2, p):      term p^{k + 2|μ'| + |ν'|} r^{|μ'|}
    let readings: [(&'static str, Box<dyn Fn(u32, u32, u32) -> i64>); 3] = [
        (
            "S(rp^2, 1/p)",
            Box::new(|k, m, n| k as i64 + 2 * m as i64 - n as i64),
        ),
        (
            "S(p, rp^2)",
            Box::new(|k, m, n| k as i64 + m as i64 + 2 * n as i64),
        ),
        (
            "S(rp^2, p)",
            Box::new(|k, m, n| k as i64 + 2 * m as i64 + n as i64),
        ),
    ];
    let mut results = Vec::new();
    for (label, pexp) in readings {
        let r_of = |m: u32, n: u32, first_slot: bool| if first_slot { m } else { n };
        let first_slot_r = label != "S(p, rp^2)";
        let mut ok = true;
        // compare on a safe window where no truncated |μ'| > cap terms enter
        'outer: for a in 0..=cap / 2 {
            for b in 0..=cap / 2 {
                let mut rhs = zero.clone();
                for ((mu2, nu2), v) in &c {
                    let m = mu2.weight();
                    let n = nu2.weight();
                    if r_of(m, n, first_slot_r) != b {
                        continue;
                    }
                    for (k, jk) in j.iter().enumerate() {
                        if pexp(k as u32, m, n) == a as i64 {
                            rhs = rhs.add(&jk.mul(v));
                        }
                    }
                }
                if lhs(a, b) != rhs {
                    ok = false;
                    break 'outer;
                }
            }
        }
        results.push((label, ok));
    }
    Ok(results)
}
