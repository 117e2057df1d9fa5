//! Per-weight transition matrices between the p/e/h/m/s bases of Λ.
//!
//! Everything routes through the power sums: products of p's are multiset
//! unions, h_k and e_k have the classical p-expansions, s rows come from the
//! character table, and the monomial matrices follow from ⟨h_λ, m_μ⟩ = δ.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::rat::Rat;
use crate::symfunc::character::character;

/// Square exact-rational matrix indexed by the partitions of one weight.
pub type Mat = Vec<Vec<Rat>>;

pub struct WeightTables {
    pub parts: Vec<Partition>,
    pub index: BTreeMap<Partition, usize>,
    /// row i = expansion of X_{parts[i]} over {p_{parts[j]}}
    pub h2p: Mat,
    pub e2p: Mat,
    pub s2p: Mat,
    pub m2p: Mat,
    /// row i = expansion of p_{parts[i]} over {X_{parts[j]}}
    pub p2h: Mat,
    pub p2e: Mat,
    pub p2s: Mat,
    pub p2m: Mat,
}

static TABLES: LazyLock<Mutex<BTreeMap<u32, Arc<WeightTables>>>> =
    LazyLock::new(|| Mutex::new(BTreeMap::new()));

/// The transition tables for weight `n`, built once and cached.
pub fn tables(n: u32) -> Arc<WeightTables> {
    if let Some(t) = TABLES.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build(n));
    TABLES.lock().unwrap().insert(n, t.clone());
    t
}

/// p-expansion of h_k: h_k = sum_{σ ⊢ k} p_σ / z_σ.
fn h_in_p(k: u32) -> BTreeMap<Partition, Rat> {
    Partition::all(k)
        .into_iter()
        .map(|s| {
            let z = s.z_lambda();
            (s, z.recip())
        })
        .collect()
}

/// p-expansion of e_k: e_k = sum_{σ ⊢ k} ε_σ p_σ / z_σ.
fn e_in_p(k: u32) -> BTreeMap<Partition, Rat> {
    Partition::all(k)
        .into_iter()
        .map(|s| {
            let c = Rat::from_integer(s.permutation_sign().into()) / s.z_lambda();
            (s, c)
        })
        .collect()
}

/// Product of p-expansions (partition unions).
fn p_mul(a: &BTreeMap<Partition, Rat>, b: &BTreeMap<Partition, Rat>) -> BTreeMap<Partition, Rat> {
    let mut out = BTreeMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            let key = pa.union(pb);
            let v = ca * cb;
            let slot = out.entry(key).or_insert_with(Rat::zero);
            *slot += v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn multiplicative_rows(
    parts: &[Partition],
    index: &BTreeMap<Partition, usize>,
    gen: impl Fn(u32) -> BTreeMap<Partition, Rat>,
) -> Mat {
    let n = parts.len();
    let mut rows = Vec::with_capacity(n);
    for mu in parts {
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        acc.insert(Partition::empty(), Rat::one());
        for &k in mu.parts() {
            acc = p_mul(&acc, &gen(k));
        }
        let mut row = vec![Rat::zero(); n];
        for (p, c) in acc {
            row[index[&p]] = c;
        }
        rows.push(row);
    }
    rows
}

/// Exact inverse by Gauss-Jordan elimination. Panics on singular input
/// (the transition matrices are invertible by construction).
pub fn invert(m: &Mat) -> Mat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular transition matrix");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let v = &a[col][j] * &f;
                    a[r][j] -= v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn build(n: u32) -> WeightTables {
    let parts = Partition::all(n);
    let index: BTreeMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let np = parts.len();

    let h2p = multiplicative_rows(&parts, &index, h_in_p);
    let e2p = multiplicative_rows(&parts, &index, e_in_p);

    let mut s2p = vec![vec![Rat::zero(); np]; np];
    let mut p2s = vec![vec![Rat::zero(); np]; np];
    for (i, lam) in parts.iter().enumerate() {
        for (j, rho) in parts.iter().enumerate() {
            let chi = Rat::from_integer(character(lam, rho).expect("equal weights").into());
            s2p[i][j] = &chi / rho.z_lambda();
            // p_ρ = sum_λ χ^λ_ρ s_λ
            p2s[j][i] = chi;
        }
    }

    // p_ρ = sum_λ z_ρ * h2p[λ][ρ] * m_λ   (from ⟨h_λ, m_μ⟩ = δ)
    let mut p2m = vec![vec![Rat::zero(); np]; np];
    for (rho_i, rho) in parts.iter().enumerate() {
        let z = rho.z_lambda();
        for lam_i in 0..np {
            p2m[rho_i][lam_i] = &h2p[lam_i][rho_i] * &z;
        }
    }
    let m2p = invert(&p2m);
    let p2h = invert(&h2p);
    let p2e = invert(&e2p);

    WeightTables {
        parts,
        index,
        h2p,
        e2p,
        s2p,
        m2p,
        p2h,
        p2e,
        p2s,
        p2m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn h2_in_p() {
        // h_2 = (p_{11} + p_2)/2
        let t = tables(2);
        let i_h2 = t.index[&Partition::new(vec![2])];
        let j_p2 = t.index[&Partition::new(vec![2])];
        let j_p11 = t.index[&Partition::new(vec![1, 1])];
        assert_eq!(t.h2p[i_h2][j_p2], rat(1, 2));
        assert_eq!(t.h2p[i_h2][j_p11], rat(1, 2));
    }

    #[test]
    fn p_in_m_small() {
        // p_2 = m_2, p_{11} = m_2 + 2 m_{11}
        let t = tables(2);
        let p2 = t.index[&Partition::new(vec![2])];
        let p11 = t.index[&Partition::new(vec![1, 1])];
        assert_eq!(t.p2m[p2][p2], int(1));
        assert_eq!(t.p2m[p2][p11], int(0));
        assert_eq!(t.p2m[p11][p2], int(1));
        assert_eq!(t.p2m[p11][p11], int(2));
    }

    #[test]
    fn inverses_are_inverses() {
        for n in 1..=6u32 {
            let t = tables(n);
            let np = t.parts.len();
            for (a, b) in [(&t.h2p, &t.p2h), (&t.e2p, &t.p2e), (&t.m2p, &t.p2m)] {
                for i in 0..np {
                    for j in 0..np {
                        let mut s = Rat::zero();
                        for k in 0..np {
                            s += &a[i][k] * &b[k][j];
                        }
                        let expect = if i == j { Rat::one() } else { Rat::zero() };
                        assert_eq!(s, expect, "weight {n} ({i},{j})");
                    }
                }
            }
        }
    }
}
