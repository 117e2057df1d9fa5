//! The ring Λ of symmetric functions over exact rationals.
//!
//! A [`SymFunc`] is a finite linear combination of basis elements indexed by
//! partitions, tagged with one of the five classical bases. Conversions
//! route through the power sums, where products are multiset unions and the
//! Schur-Hall scalar product is diagonal.

pub mod character;
pub mod transition;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::Rat;
use crate::series::Series;

pub use character::character;

/// The five classical bases of Λ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// power sums p_λ
    P,
    /// elementary e_λ
    E,
    /// complete homogeneous h_λ
    H,
    /// monomial m_λ
    M,
    /// Schur s_λ
    S,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::M => "m",
            Basis::S => "s",
        }
    }
}

/// Element of Λ: a basis tag plus a partition-indexed coefficient map.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit 1 = X_∅ in any basis.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    /// A single basis element X_λ.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, Rat::one());
        SymFunc { basis, coeffs }
    }

    pub fn p_n(n: u32) -> Self {
        Self::basis_element(Basis::P, Partition::new(vec![n]))
    }

    pub fn h_n(n: u32) -> Self {
        if n == 0 {
            Self::one(Basis::H)
        } else {
            Self::basis_element(Basis::H, Partition::new(vec![n]))
        }
    }

    pub fn e_n(n: u32) -> Self {
        if n == 0 {
            Self::one(Basis::E)
        } else {
            Self::basis_element(Basis::E, Partition::new(vec![n]))
        }
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    pub fn monomial_sym(lambda: Partition) -> Self {
        Self::basis_element(Basis::M, lambda)
    }

    pub fn from_coeffs(basis: Basis, coeffs: BTreeMap<Partition, Rat>) -> Self {
        let mut f = SymFunc { basis, coeffs };
        f.coeffs.retain(|_, c| !c.is_zero());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest weight present (0 for the zero element).
    pub fn max_weight(&self) -> u32 {
        self.coeffs.keys().map(|p| p.weight()).max().unwrap_or(0)
    }

    /// Drops all components of weight > d.
    pub fn truncate_weight(&self, d: u32) -> SymFunc {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(p, _)| p.weight() <= d)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        SymFunc {
            basis: self.basis,
            coeffs,
        }
    }

    /// Homogeneous component of weight d.
    pub fn weight_component(&self, d: u32) -> SymFunc {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(p, _)| p.weight() == d)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        SymFunc {
            basis: self.basis,
            coeffs,
        }
    }

    /// Converts to the target basis (exact; round trips are identities).
    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let in_p = self.to_p();
        if target == Basis::P {
            return in_p;
        }
        // apply the per-weight p->target matrices
        let mut out = BTreeMap::new();
        let mut by_weight: BTreeMap<u32, Vec<(Partition, Rat)>> = BTreeMap::new();
        for (p, c) in in_p.coeffs {
            by_weight.entry(p.weight()).or_default().push((p, c));
        }
        for (w, terms) in by_weight {
            let t = transition::tables(w);
            let mat = match target {
                Basis::H => &t.p2h,
                Basis::E => &t.p2e,
                Basis::M => &t.p2m,
                Basis::S => &t.p2s,
                Basis::P => unreachable!(),
            };
            for (rho, c) in terms {
                let i = t.index[&rho];
                for (j, mu) in t.parts.iter().enumerate() {
                    if mat[i][j].is_zero() {
                        continue;
                    }
                    let v = &c * &mat[i][j];
                    let slot = out.entry(mu.clone()).or_insert_with(Rat::zero);
                    *slot += v;
                }
            }
        }
        out.retain(|_, c: &mut Rat| !c.is_zero());
        SymFunc {
            basis: target,
            coeffs: out,
        }
    }

    fn to_p(&self) -> SymFunc {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        let mut by_weight: BTreeMap<u32, Vec<(Partition, Rat)>> = BTreeMap::new();
        for (p, c) in &self.coeffs {
            by_weight
                .entry(p.weight())
                .or_default()
                .push((p.clone(), c.clone()));
        }
        for (w, terms) in by_weight {
            let t = transition::tables(w);
            let mat = match self.basis {
                Basis::H => &t.h2p,
                Basis::E => &t.e2p,
                Basis::M => &t.m2p,
                Basis::S => &t.s2p,
                Basis::P => unreachable!(),
            };
            for (mu, c) in terms {
                let i = t.index[&mu];
                for (j, rho) in t.parts.iter().enumerate() {
                    if mat[i][j].is_zero() {
                        continue;
                    }
                    let v = &c * &mat[i][j];
                    let slot = out.entry(rho.clone()).or_insert_with(Rat::zero);
                    *slot += v;
                }
            }
        }
        out.retain(|_, c: &mut Rat| !c.is_zero());
        SymFunc {
            basis: Basis::P,
            coeffs: out,
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = other.convert(self.basis);
        let mut coeffs = self.coeffs.clone();
        for (p, c) in other.coeffs {
            let slot = coeffs.entry(p).or_insert_with(Rat::zero);
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymFunc {
            basis: self.basis,
            coeffs,
        }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, r: &Rat) -> SymFunc {
        if r.is_zero() {
            return SymFunc::zero(self.basis);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(p, c)| (p.clone(), c * r))
            .collect();
        SymFunc {
            basis: self.basis,
            coeffs,
        }
    }

    /// Product in Λ; the result carries the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_p();
        let b = other.to_p();
        let mut coeffs: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (pa, ca) in &a.coeffs {
            for (pb, cb) in &b.coeffs {
                let key = pa.union(pb);
                let v = ca * cb;
                let slot = coeffs.entry(key).or_insert_with(Rat::zero);
                *slot += v;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymFunc {
            basis: Basis::P,
            coeffs,
        }
        .convert(self.basis)
    }

    /// Schur-Hall scalar product: ⟨p_ρ, p_σ⟩ = z_ρ δ_{ρσ} extended bilinearly.
    pub fn scalar_product(&self, other: &SymFunc) -> Rat {
        let a = self.to_p();
        let b = other.to_p();
        let mut acc = Rat::zero();
        for (p, ca) in &a.coeffs {
            if let Some(cb) = b.coeffs.get(p) {
                acc += ca * cb * p.z_lambda();
            }
        }
        acc
    }

    /// The involution ω: p_n -> (-1)^{n-1} p_n; ω(h_n) = e_n, ω(s_λ) = s_{λ'}.
    pub fn omega(&self) -> SymFunc {
        let a = self.to_p();
        let coeffs = a
            .coeffs
            .into_iter()
            .map(|(p, c)| {
                let sign = p.permutation_sign();
                let c = if sign < 0 { -c } else { c };
                (p, c)
            })
            .collect();
        SymFunc {
            basis: Basis::P,
            coeffs,
        }
        .convert(self.basis)
    }

    /// Replicated argument X^(τ): p_n -> τ p_n.
    pub fn replicate(&self, tau: &Rat) -> SymFunc {
        let a = self.to_p();
        let coeffs = a
            .coeffs
            .into_iter()
            .map(|(p, c)| {
                let c = c * tau.pow(p.len() as i32);
                (p, c)
            })
            .collect();
        SymFunc {
            basis: Basis::P,
            coeffs,
        }
        .convert(self.basis)
    }

    /// Evaluates at exact rational points x_1..x_k (all other variables 0).
    pub fn eval_rats(&self, points: &[Rat]) -> Rat {
        let a = self.to_p();
        let mut acc = Rat::zero();
        for (rho, c) in &a.coeffs {
            let mut term = c.clone();
            for &part in rho.parts() {
                let ps: Rat = points.iter().map(|x| x.pow(part as i32)).sum();
                term *= ps;
            }
            acc += term;
        }
        acc
    }

    /// Evaluates as a polynomial in the series variables selected by
    /// `var_indices` within the given context.
    pub fn eval_series(&self, vars: &[&str], trunc: u32, var_indices: &[usize]) -> Series {
        let a = self.to_p();
        let mut acc = Series::zero(vars, trunc);
        for (rho, c) in &a.coeffs {
            if rho.weight() > trunc {
                continue;
            }
            let mut term = Series::constant(vars, trunc, c.clone());
            for &part in rho.parts() {
                term = term.mul(&power_sum_series(vars, trunc, var_indices, part));
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// p_m over a subset of the context variables: sum_{i in subset} v_i^m.
pub fn power_sum_series(vars: &[&str], trunc: u32, var_indices: &[usize], m: u32) -> Series {
    let mut s = Series::zero(vars, trunc);
    for &i in var_indices {
        let mut e = vec![0u32; vars.len()];
        e[i] = m;
        let prev = s.coeff(&e);
        s.set_coeff(e, prev + Rat::one());
    }
    s
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        let mut first = true;
        for (p, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            if p.is_empty() {
                write!(f, "{}", crate::rat::format_rat(c))?;
            } else if c.is_one() {
                write!(f, "{sym}{p}")?;
            } else {
                write!(f, "({})*{sym}{p}", crate::rat::format_rat(c))?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Jacobi-Trudi determinant det(h_{λ_i - i + j}) as an h-basis element.
pub fn jacobi_trudi(lambda: &Partition) -> SymFunc {
    jt_determinant(lambda, false)
}

/// Dual Jacobi-Trudi determinant det(e_{λ'_i - i + j}) as an e-basis element.
pub fn jacobi_trudi_dual(lambda: &Partition) -> SymFunc {
    jt_determinant(&lambda.conjugate(), true)
}

fn jt_determinant(lambda: &Partition, elementary: bool) -> SymFunc {
    let basis = if elementary { Basis::E } else { Basis::H };
    let l = lambda.len();
    if l == 0 {
        return SymFunc::one(basis);
    }
    // entry (i, j) = λ_i - i + j as an index into h (or e); None when negative
    let entry = |i: usize, j: usize| -> Option<u32> {
        let v = lambda.part(i) as i64 - i as i64 + j as i64;
        if v < 0 {
            None
        } else {
            Some(v as u32)
        }
    };
    let mut acc = SymFunc::zero(basis);
    // permutation expansion with pruning on zero entries
    let mut cols: Vec<usize> = Vec::with_capacity(l);
    let mut used = vec![false; l];
    expand_perm(
        lambda,
        &entry,
        basis,
        0,
        l,
        &mut cols,
        &mut used,
        &mut acc,
        1,
    );
    acc
}

#[allow(clippy::too_many_arguments)]
fn expand_perm(
    lambda: &Partition,
    entry: &impl Fn(usize, usize) -> Option<u32>,
    basis: Basis,
    row: usize,
    l: usize,
    cols: &mut Vec<usize>,
    used: &mut [bool],
    acc: &mut SymFunc,
    sign: i64,
) {
    if row == l {
        let mut parts: Vec<u32> = Vec::new();
        for (i, &j) in cols.iter().enumerate() {
            let k = entry(i, j).expect("pruned");
            if k > 0 {
                parts.push(k);
            }
        }
        let term = SymFunc::basis_element(basis, Partition::from_unsorted(parts))
            .scale(&Rat::from_integer(sign.into()));
        *acc = acc.add(&term);
        return;
    }
    for j in 0..l {
        if used[j] {
            continue;
        }
        if entry(row, j).is_none() {
            continue;
        }
        // inversions added by placing column j at this row
        let inv = cols.iter().filter(|&&c| c > j).count();
        let s = if inv % 2 == 0 { sign } else { -sign };
        used[j] = true;
        cols.push(j);
        expand_perm(lambda, entry, basis, row + 1, l, cols, used, acc, s);
        cols.pop();
        used[j] = false;
    }
}

/// Littlewood-Richardson coefficient c^λ_{μν} = ⟨s_μ s_ν, s_λ⟩.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> Rat {
    if mu.weight() + nu.weight() != lambda.weight() {
        return Rat::zero();
    }
    SymFunc::schur(mu.clone())
        .mul(&SymFunc::schur(nu.clone()))
        .scalar_product(&SymFunc::schur(lambda.clone()))
}

/// Skew Schur function s_{λ/μ} = sum_ν c^λ_{μν} s_ν (zero when μ ⊄ λ).
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> SymFunc {
    if !lambda.contains(mu) {
        return SymFunc::zero(Basis::S);
    }
    let rest = lambda.weight() - mu.weight();
    let mut coeffs = BTreeMap::new();
    for nu in Partition::all(rest) {
        let c = littlewood_richardson(lambda, mu, &nu);
        if !c.is_zero() {
            coeffs.insert(nu, c);
        }
    }
    SymFunc::from_coeffs(Basis::S, coeffs)
}

/// The mutually inverse generating series F(t;X) = sum_m h_m t^m and
/// G(t;X) = sum_m (-1)^m e_m t^m, as coefficient vectors indexed by the
/// power of t.
pub fn series_f(d: u32) -> Vec<SymFunc> {
    (0..=d).map(SymFunc::h_n).collect()
}

pub fn series_g(d: u32) -> Vec<SymFunc> {
    (0..=d)
        .map(|m| {
            let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
            SymFunc::e_n(m).scale(&sign)
        })
        .collect()
}

/// Convolution of two SymFunc-coefficient t-series.
pub fn convolve(a: &[SymFunc], b: &[SymFunc]) -> Vec<SymFunc> {
    let d = a.len().min(b.len());
    let mut out = Vec::with_capacity(d);
    for k in 0..d {
        let mut acc = SymFunc::zero(Basis::P);
        for i in 0..=k {
            acc = acc.add(&a[i].mul(&b[k - i]));
        }
        out.push(acc);
    }
    out
}

/// Verifies the classical Cauchy kernels in nx + ny concrete variables to
/// total degree 2d:
///   sum_λ s_λ(X)s_λ(Y) = prod (1 - x_i y_j)^{-1}
///   sum_α (-q)^{|α|} s_α(X)s_{α'}(Y) = prod (1 - q x_i y_j)
pub fn cauchy_schur_check(nx: usize, ny: usize, d: u32, q: &Rat) -> Result<()> {
    let names: Vec<String> = (0..nx)
        .map(|i| format!("x{}", i + 1))
        .chain((0..ny).map(|j| format!("y{}", j + 1)))
        .collect();
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let trunc = 2 * d;
    let x_idx: Vec<usize> = (0..nx).collect();
    let y_idx: Vec<usize> = (nx..nx + ny).collect();

    // direct kernel
    let mut lhs = Series::zero(&vars, trunc);
    for lam in Partition::all_up_to(d) {
        let sx = SymFunc::schur(lam.clone()).eval_series(&vars, trunc, &x_idx);
        if sx.is_zero() {
            continue;
        }
        let sy = SymFunc::schur(lam.clone()).eval_series(&vars, trunc, &y_idx);
        lhs = lhs.add(&sx.mul(&sy));
    }
    let mut rhs = Series::one(&vars, trunc);
    for i in 0..nx {
        for j in 0..ny {
            let mut factor = Series::one(&vars, trunc);
            let mut k = 1u32;
            while 2 * k <= trunc {
                let mut e = vec![0u32; vars.len()];
                e[x_idx[i]] = k;
                e[y_idx[j]] = k;
                factor.set_coeff(e, Rat::one());
                k += 1;
            }
            rhs = rhs.mul(&factor);
        }
    }
    if lhs != rhs {
        return Err(Error::CheckFailed(format!(
            "Cauchy kernel mismatch at nx={nx} ny={ny} d={d}: lhs-rhs = {}",
            lhs.sub(&rhs)
        )));
    }

    // dual kernel at rational q
    let mut lhs2 = Series::zero(&vars, trunc);
    for lam in Partition::all_up_to(d) {
        if lam.len() > nx || lam.part(0) as usize > ny {
            continue;
        }
        let sx = SymFunc::schur(lam.clone()).eval_series(&vars, trunc, &x_idx);
        let sy = SymFunc::schur(lam.conjugate()).eval_series(&vars, trunc, &y_idx);
        let mq = -q.clone();
        lhs2 = lhs2.add(&sx.mul(&sy).scale(&mq.pow(lam.weight() as i32)));
    }
    let mut rhs2 = Series::one(&vars, trunc);
    for i in 0..nx {
        for j in 0..ny {
            let mut factor = Series::one(&vars, trunc);
            let mut e = vec![0u32; vars.len()];
            e[x_idx[i]] = 1;
            e[y_idx[j]] = 1;
            factor.set_coeff(e, -q.clone());
            rhs2 = rhs2.mul(&factor);
        }
    }
    if lhs2 != rhs2 {
        return Err(Error::CheckFailed(format!(
            "dual Cauchy kernel mismatch at nx={nx} ny={ny} d={d} q={}",
            crate::rat::format_rat(q)
        )));
    }
    Ok(())
}

/// Reference evaluator for s_λ by the ratio of alternants at distinct
/// rational points — guards the determinantal definition.
pub fn schur_alternant_at(lambda: &Partition, points: &[Rat]) -> Result<Rat> {
    let n = points.len();
    if lambda.len() > n {
        return Ok(Rat::zero());
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i] == points[j] {
                return Err(Error::Domain(
                    "alternant evaluation needs distinct points".into(),
                ));
            }
        }
    }
    // numerator det(x_i^{λ_j + n - 1 - j}), denominator Vandermonde
    let exps: Vec<u32> = (0..n)
        .map(|j| lambda.part(j) + (n - 1 - j) as u32)
        .collect();
    let num = det_rat(&(0..n)
        .map(|i| {
            exps.iter()
                .map(|&e| points[i].pow(e as i32))
                .collect::<Vec<Rat>>()
        })
        .collect::<Vec<_>>());
    let mut den = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            den *= &points[i] - &points[j];
        }
    }
    Ok(num / den)
}

fn det_rat(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let piv = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..n {
                let v = &a[col][j] * &f;
                a[r][j] -= v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests;
