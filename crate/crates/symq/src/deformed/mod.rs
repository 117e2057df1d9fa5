//! ξ-deformed inner products and their orthogonal bases.
//!
//! For a nondegenerate sequence ξ = (ξ_1, ξ_2, ...) the inner product
//! ⟨p_λ, p_μ⟩_ξ = δ_{λμ} z_λ prod_i ξ_{λ_i} admits a unique monic basis
//! {P_λ}, unitriangular over the monomial basis with respect to dominance
//! order, produced by Gram-Schmidt along a linear extension. Hall-Littlewood
//! (ξ_n = 1/(1-t^n)), Jack (ξ_n = α), Macdonald (ξ_n = (1-q^n)/(1-t^n)) and
//! the (q,κ,α) family are specializations.
//!
//! The machinery is generic over the coefficient ring: exact rationals for
//! specialized parameters, truncated q-series for a formal Hall-Littlewood
//! parameter (used by the vertex-trace identities).

pub mod cauchy;
pub mod direct;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::{format_rat, pow_i, Rat};
use crate::ring::{CoeffRing, RatField, SeriesRing};
use crate::symfunc::transition;

/// A named deformation of the Schur-Hall inner product, specialized at
/// exact rational parameter values.
#[derive(Clone, Debug, PartialEq)]
pub enum DeformationParams {
    /// ξ_n = 1 (the classical Schur case)
    Schur,
    /// ξ_n = (1 - t^n)^{-1}
    HallLittlewood { t: Rat },
    /// ξ_n = α
    Jack { alpha: Rat },
    /// ξ_n = (1 - q^n)/(1 - t^n)
    Macdonald { q: Rat, t: Rat },
    /// ξ_n = α (q^{κn} - q^{-κn})/(q^{2n} - q^{-2n})
    Kappa { q: Rat, kappa: i64, alpha: Rat },
    /// explicit values ξ_1, ξ_2, ...
    Explicit(Vec<Rat>),
}

impl DeformationParams {
    pub fn label(&self) -> String {
        match self {
            DeformationParams::Schur => "schur".into(),
            DeformationParams::HallLittlewood { t } => format!("hall-littlewood(t={})", format_rat(t)),
            DeformationParams::Jack { alpha } => format!("jack(alpha={})", format_rat(alpha)),
            DeformationParams::Macdonald { q, t } => {
                format!("macdonald(q={}, t={})", format_rat(q), format_rat(t))
            }
            DeformationParams::Kappa { q, kappa, alpha } => format!(
                "kappa(q={}, kappa={kappa}, alpha={})",
                format_rat(q),
                format_rat(alpha)
            ),
            DeformationParams::Explicit(_) => "explicit".into(),
        }
    }
}

/// ξ_n for the selected family. Errors on singular parameters (vanishing
/// denominator or a vanishing ξ_n, which would degenerate the inner product).
pub fn xi_value(n: u32, params: &DeformationParams) -> Result<Rat> {
    if n == 0 {
        return Err(Error::Usage("ξ_n is defined for n >= 1".into()));
    }
    let value = match params {
        DeformationParams::Schur => Rat::one(),
        DeformationParams::HallLittlewood { t } => {
            let den = Rat::one() - t.pow(n as i32);
            if den.is_zero() {
                return Err(Error::Domain(format!(
                    "Hall-Littlewood ξ_{n} singular: t^{n} = 1 at t = {}",
                    format_rat(t)
                )));
            }
            den.recip()
        }
        DeformationParams::Jack { alpha } => alpha.clone(),
        DeformationParams::Macdonald { q, t } => {
            let den = Rat::one() - t.pow(n as i32);
            if den.is_zero() {
                return Err(Error::Domain(format!(
                    "Macdonald ξ_{n} singular: t^{n} = 1 at t = {}",
                    format_rat(t)
                )));
            }
            (Rat::one() - q.pow(n as i32)) / den
        }
        DeformationParams::Kappa { q, kappa, alpha } => {
            if q.is_zero() {
                return Err(Error::Domain("(q,κ,α) family needs q != 0".into()));
            }
            let den = pow_i(q, 2 * n as i64)? - pow_i(q, -2 * n as i64)?;
            if den.is_zero() {
                return Err(Error::Domain(format!(
                    "(q,κ,α) ξ_{n} singular: q^{{2n}} = q^{{-2n}} at q = {}",
                    format_rat(q)
                )));
            }
            let num = pow_i(q, kappa * n as i64)? - pow_i(q, -kappa * n as i64)?;
            alpha * num / den
        }
        DeformationParams::Explicit(xs) => xs
            .get(n as usize - 1)
            .cloned()
            .ok_or_else(|| Error::Usage(format!("explicit ξ list too short for n = {n}")))?,
    };
    if value.is_zero() {
        return Err(Error::Domain(format!(
            "ξ_{n} = 0 for {}: inner product degenerate",
            params.label()
        )));
    }
    Ok(value)
}

/// Expansion over a basis indexed by partitions, with ring-valued coefficients.
pub type Expansion<E> = BTreeMap<Partition, E>;

/// Orthogonal basis data for one weight: P_λ in monomial and power-sum
/// coordinates plus the dual normalizations b_λ = 1/⟨P_λ, P_λ⟩.
pub struct WeightBasis<E> {
    /// dominance-compatible order, most dominant first
    pub order: Vec<Partition>,
    pub p_in_m: BTreeMap<Partition, Expansion<E>>,
    pub p_in_p: BTreeMap<Partition, Expansion<E>>,
    pub b: BTreeMap<Partition, E>,
}

/// A deformation with its coefficient ring and cached per-weight bases.
pub struct DeformedFamily<R: CoeffRing> {
    ring: R,
    xi: Vec<R::Elem>,
    cache: Mutex<BTreeMap<u32, Arc<WeightBasis<R::Elem>>>>,
}

/// Rational-coefficient family for specialized parameters.
pub fn family(params: &DeformationParams, max_weight: u32) -> Result<DeformedFamily<RatField>> {
    let xi: Result<Vec<Rat>> = (1..=max_weight.max(1)).map(|n| xi_value(n, params)).collect();
    Ok(DeformedFamily::new(RatField, xi?))
}

/// Hall-Littlewood family with a formal parameter: coefficients live in
/// truncated series over `t_var`, ξ_n = (1 - t^n)^{-1}.
pub fn hall_littlewood_formal(t_var: &str, trunc: u32, max_weight: u32) -> DeformedFamily<SeriesRing> {
    let ring = SeriesRing::new(&[t_var], trunc);
    let xi: Vec<_> = (1..=max_weight.max(1))
        .map(|n| ring.geometric(t_var, n, &Rat::one()))
        .collect();
    DeformedFamily::new(ring, xi)
}

impl<R: CoeffRing> DeformedFamily<R> {
    pub fn new(ring: R, xi: Vec<R::Elem>) -> Self {
        DeformedFamily {
            ring,
            xi,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn xi(&self, n: u32) -> &R::Elem {
        &self.xi[n as usize - 1]
    }

    /// ξ_λ = prod_i ξ_{λ_i}
    pub fn xi_partition(&self, lambda: &Partition) -> R::Elem {
        let mut acc = self.ring.one();
        for &part in lambda.parts() {
            acc = self.ring.mul(&acc, self.xi(part));
        }
        acc
    }

    /// ⟨·,·⟩_ξ on power-sum expansions.
    pub fn inner_p(&self, f: &Expansion<R::Elem>, g: &Expansion<R::Elem>) -> R::Elem {
        let mut acc = self.ring.zero();
        for (rho, cf) in f {
            if let Some(cg) = g.get(rho) {
                let w = self.ring.scale(&self.xi_partition(rho), &rho.z_lambda());
                acc = self.ring.add(&acc, &self.ring.mul(&self.ring.mul(cf, cg), &w));
            }
        }
        acc
    }

    /// Product of power-sum expansions (partition unions).
    pub fn mul_p(&self, f: &Expansion<R::Elem>, g: &Expansion<R::Elem>) -> Expansion<R::Elem> {
        let mut out: Expansion<R::Elem> = BTreeMap::new();
        for (pa, ca) in f {
            for (pb, cb) in g {
                let key = pa.union(pb);
                let v = self.ring.mul(ca, cb);
                match out.remove(&key) {
                    Some(old) => {
                        let s = self.ring.add(&old, &v);
                        if !self.ring.is_zero(&s) {
                            out.insert(key, s);
                        }
                    }
                    None => {
                        if !self.ring.is_zero(&v) {
                            out.insert(key, v);
                        }
                    }
                }
            }
        }
        out
    }

    /// m_λ in power-sum coordinates, lifted from the rational tables.
    fn m_in_p(&self, lambda: &Partition) -> Expansion<R::Elem> {
        let t = transition::tables(lambda.weight());
        let i = t.index[lambda];
        let mut out = BTreeMap::new();
        for (j, rho) in t.parts.iter().enumerate() {
            if !t.m2p[i][j].is_zero() {
                out.insert(rho.clone(), self.ring.from_rat(&t.m2p[i][j]));
            }
        }
        out
    }

    /// Converts a power-sum expansion (homogeneous of weight w) to monomial
    /// coordinates.
    pub fn p_expansion_to_m(&self, f: &Expansion<R::Elem>, w: u32) -> Expansion<R::Elem> {
        let t = transition::tables(w);
        let mut out: Expansion<R::Elem> = BTreeMap::new();
        for (rho, c) in f {
            let i = t.index[rho];
            for (j, mu) in t.parts.iter().enumerate() {
                if t.p2m[i][j].is_zero() {
                    continue;
                }
                let v = self.ring.scale(c, &t.p2m[i][j]);
                match out.remove(mu) {
                    Some(old) => {
                        let s = self.ring.add(&old, &v);
                        if !self.ring.is_zero(&s) {
                            out.insert(mu.clone(), s);
                        }
                    }
                    None => {
                        if !self.ring.is_zero(&v) {
                            out.insert(mu.clone(), v);
                        }
                    }
                }
            }
        }
        out
    }

    /// The orthogonal basis at one weight (cached).
    pub fn basis(&self, weight: u32) -> Result<Arc<WeightBasis<R::Elem>>> {
        if let Some(b) = self.cache.lock().unwrap().get(&weight) {
            return Ok(b.clone());
        }
        if weight >= 1 && self.xi.len() < weight as usize {
            return Err(Error::Usage(format!(
                "family initialized to max weight {}, asked for {weight}",
                self.xi.len()
            )));
        }
        let order = Partition::all(weight); // revlex = dominance-compatible, most dominant first
        let b = Arc::new(self.gram_schmidt(&order)?);
        self.cache.lock().unwrap().insert(weight, b.clone());
        Ok(b)
    }

    /// Gram-Schmidt along an explicit dominance-compatible order
    /// (most dominant first). Exposed for the extension-independence check.
    pub fn gram_schmidt(&self, order: &[Partition]) -> Result<WeightBasis<R::Elem>> {
        let mut p_in_m: BTreeMap<Partition, Expansion<R::Elem>> = BTreeMap::new();
        let mut p_in_p: BTreeMap<Partition, Expansion<R::Elem>> = BTreeMap::new();
        let mut b: BTreeMap<Partition, R::Elem> = BTreeMap::new();
        let mut norms: BTreeMap<Partition, R::Elem> = BTreeMap::new();

        // process least dominant first
        for lambda in order.iter().rev() {
            let m_p = self.m_in_p(lambda);
            let mut cur_p = m_p.clone();
            let mut cur_m: Expansion<R::Elem> = BTreeMap::new();
            cur_m.insert(lambda.clone(), self.ring.one());
            for mu in order.iter().rev() {
                if mu == lambda {
                    break;
                }
                let proj = self.inner_p(&m_p, &p_in_p[mu]);
                if self.ring.is_zero(&proj) {
                    continue;
                }
                let c = self.ring.mul(&proj, &b[mu]); // ⟨m_λ, P_μ⟩ / ⟨P_μ, P_μ⟩
                let neg_c = self.ring.neg(&c);
                axpy(&self.ring, &mut cur_p, &neg_c, &p_in_p[mu]);
                axpy(&self.ring, &mut cur_m, &neg_c, &p_in_m[mu]);
            }
            let norm = self.inner_p(&cur_p, &cur_p);
            let b_l = self.ring.invert(&norm).map_err(|_| {
                Error::Domain(format!(
                    "degenerate Gram matrix: ⟨P_{lambda}, P_{lambda}⟩ is not invertible (singular deformation parameters)"
                ))
            })?;
            norms.insert(lambda.clone(), norm);
            b.insert(lambda.clone(), b_l);
            p_in_p.insert(lambda.clone(), cur_p);
            p_in_m.insert(lambda.clone(), cur_m);
        }
        Ok(WeightBasis {
            order: order.to_vec(),
            p_in_m,
            p_in_p,
            b,
        })
    }

    /// Structure constants f^λ_{μν}: P_μ P_ν = sum_λ f^λ_{μν} P_λ.
    pub fn structure_constants(
        &self,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<BTreeMap<Partition, R::Elem>> {
        let bmu = self.basis(mu.weight())?;
        let bnu = self.basis(nu.weight())?;
        let prod = self.mul_p(&bmu.p_in_p[mu], &bnu.p_in_p[nu]);
        self.expand_in_p_basis(&prod, mu.weight() + nu.weight())
    }

    /// Expands a homogeneous power-sum expansion of weight w over {P_λ}
    /// by back-substitution in monomial coordinates.
    pub fn expand_in_p_basis(
        &self,
        f: &Expansion<R::Elem>,
        w: u32,
    ) -> Result<BTreeMap<Partition, R::Elem>> {
        let basis = self.basis(w)?;
        let mut rem = self.p_expansion_to_m(f, w);
        let mut out = BTreeMap::new();
        for lambda in &basis.order {
            if let Some(c) = rem.get(lambda).cloned() {
                let neg_c = self.ring.neg(&c);
                axpy(&self.ring, &mut rem, &neg_c, &basis.p_in_m[lambda]);
                out.insert(lambda.clone(), c);
            }
        }
        if !rem.is_empty() {
            return Err(Error::Domain(
                "back-substitution left a nonzero remainder (non-triangular input)".into(),
            ));
        }
        Ok(out)
    }

    /// Transition coefficients Y_λ^μ with p_λ = sum_μ Y_λ^μ P_μ.
    pub fn transition_y(&self, lambda: &Partition) -> Result<BTreeMap<Partition, R::Elem>> {
        let mut p_exp: Expansion<R::Elem> = BTreeMap::new();
        p_exp.insert(lambda.clone(), self.ring.one());
        self.expand_in_p_basis(&p_exp, lambda.weight())
    }

    /// Skew function Q_{λ/μ} = sum_ν f^λ_{μν} Q_ν in power-sum coordinates.
    pub fn skew_q(&self, lambda: &Partition, mu: &Partition) -> Result<Expansion<R::Elem>> {
        if mu.weight() > lambda.weight() {
            return Ok(BTreeMap::new());
        }
        let w = lambda.weight() - mu.weight();
        let basis_w = self.basis(w)?;
        let mut out: Expansion<R::Elem> = BTreeMap::new();
        for nu in Partition::all(w) {
            let f = self.structure_constants(mu, &nu)?;
            let Some(c) = f.get(lambda) else { continue };
            // Q_ν = b_ν P_ν
            let coeff = self.ring.mul(c, &basis_w.b[&nu]);
            axpy(&self.ring, &mut out, &coeff, &basis_w.p_in_p[&nu]);
        }
        Ok(out)
    }

    /// Skew function P_{λ/μ} = sum_ν (b_μ b_ν / b_λ) f^λ_{μν} P_ν.
    pub fn skew_p(&self, lambda: &Partition, mu: &Partition) -> Result<Expansion<R::Elem>> {
        if mu.weight() > lambda.weight() {
            return Ok(BTreeMap::new());
        }
        let w = lambda.weight() - mu.weight();
        let basis_w = self.basis(w)?;
        let basis_l = self.basis(lambda.weight())?;
        let basis_m = self.basis(mu.weight())?;
        let b_l_inv = self.ring.invert(&basis_l.b[lambda])?;
        let mut out: Expansion<R::Elem> = BTreeMap::new();
        for nu in Partition::all(w) {
            let f = self.structure_constants(mu, &nu)?;
            let Some(c) = f.get(lambda) else { continue };
            // (b_μ b_ν / b_λ) f^λ_{μν}
            let coeff = self.ring.mul(
                &self.ring.mul(c, &basis_m.b[mu]),
                &self.ring.mul(&basis_w.b[&nu], &b_l_inv),
            );
            axpy(&self.ring, &mut out, &coeff, &basis_w.p_in_p[&nu]);
        }
        Ok(out)
    }

    /// Evaluates a power-sum expansion given the values of p_1..p_w.
    /// `powersums[n-1]` is the value of p_n.
    pub fn eval_p(&self, f: &Expansion<R::Elem>, powersums: &[R::Elem]) -> R::Elem {
        let mut acc = self.ring.zero();
        for (rho, c) in f {
            let mut term = c.clone();
            for &part in rho.parts() {
                term = self.ring.mul(&term, &powersums[part as usize - 1]);
            }
            acc = self.ring.add(&acc, &term);
        }
        acc
    }
}

/// out += c * f
fn axpy<R: CoeffRing>(
    ring: &R,
    out: &mut Expansion<R::Elem>,
    c: &R::Elem,
    f: &Expansion<R::Elem>,
) {
    for (k, v) in f {
        let add = ring.mul(c, v);
        if ring.is_zero(&add) {
            continue;
        }
        match out.remove(k) {
            Some(old) => {
                let s = ring.add(&old, &add);
                if !ring.is_zero(&s) {
                    out.insert(k.clone(), s);
                }
            }
            None => {
                out.insert(k.clone(), add);
            }
        }
    }
}

/// An alternative dominance-compatible order: increasing length, then
/// lexicographically descending. Used to confirm that Gram-Schmidt does not
/// depend on the chosen linear extension.
pub fn length_major_order(weight: u32) -> Vec<Partition> {
    let mut order = Partition::all(weight);
    order.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.parts().cmp(a.parts())));
    order
}

/// Rational-parameter convenience: the deformed inner product of two
/// symmetric functions.
pub fn deformed_inner(
    f: &crate::symfunc::SymFunc,
    g: &crate::symfunc::SymFunc,
    params: &DeformationParams,
) -> Result<Rat> {
    let max_w = f.max_weight().max(g.max_weight()).max(1);
    let fam = family(params, max_w)?;
    let fp = f.convert(crate::symfunc::Basis::P);
    let gp = g.convert(crate::symfunc::Basis::P);
    let fe: Expansion<Rat> = fp.coeffs().clone();
    let ge: Expansion<Rat> = gp.coeffs().clone();
    Ok(fam.inner_p(&fe, &ge))
}

/// P_λ as a monomial-basis symmetric function at rational parameters.
pub fn p_polynomial(lambda: &Partition, params: &DeformationParams) -> Result<crate::symfunc::SymFunc> {
    let fam = family(params, lambda.weight().max(1))?;
    let basis = fam.basis(lambda.weight())?;
    Ok(crate::symfunc::SymFunc::from_coeffs(
        crate::symfunc::Basis::M,
        basis.p_in_m[lambda].clone(),
    ))
}

/// b_λ = 1/⟨P_λ, P_λ⟩ at rational parameters.
pub fn b_norm(lambda: &Partition, params: &DeformationParams) -> Result<Rat> {
    let fam = family(params, lambda.weight().max(1))?;
    let basis = fam.basis(lambda.weight())?;
    Ok(basis.b[lambda].clone())
}

#[cfg(test)]
mod tests;
