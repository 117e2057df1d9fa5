//! Multipartite generating functions.
//!
//! F(z;X) = prod over non-zero multi-indices k of (1 - z x^k)^{-1} counts
//! multipartitions with repetition; G(z;X) = prod (1 + z x^k) counts them
//! with distinct parts. Both are computed through their exponential forms
//! with β_m(n) = prod_j (1 - x_j^n)^{-1}:
//!
//!   F(z;X) = exp( sum_n z^n/n · (β_m(n) - 1) ),
//!   G(z;X) = exp( -sum_n (-z)^n/n · (β_m(n) - 1) ),
//!
//! the `- 1` removing the all-zero index so that the coefficient of z^j x^k
//! is the number of multipartitions of k into exactly j non-zero parts.
//! The Bell-polynomial coefficient families P_j and Q_j correspond to the
//! products with the all-zero index kept; they differ from the z-slices of
//! F and G by the geometric factor (1-z)^{-1} (resp. 1+z).

use num_traits::One;

use crate::bell::bell_recurrence;
use crate::partition::{enumerate_distinct_multipartitions, enumerate_multipartitions, MultiIndex};
use crate::rat::{factorial, int, Rat};
use crate::ring::SeriesRing;
use crate::series::Series;

/// Variable context for an m-part expansion: z plus x1..xm, total degree `d`.
#[derive(Clone, Debug)]
pub struct MultiGenConfig {
    pub m: usize,
    pub d: u32,
}

impl MultiGenConfig {
    pub fn new(m: usize, d: u32) -> Self {
        assert!(m >= 1, "need at least one x variable");
        MultiGenConfig { m, d }
    }

    pub fn var_names(&self) -> Vec<String> {
        let mut v = vec!["z".to_string()];
        v.extend((1..=self.m).map(|j| format!("x{j}")));
        v
    }

    fn x_ring(&self) -> SeriesRing {
        let names: Vec<String> = (1..=self.m).map(|j| format!("x{j}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        SeriesRing::new(&refs, self.d)
    }
}

/// β_m(n) = prod_{j=1}^m (1 - x_j^n)^{-1}, truncated to total degree `d`.
pub fn beta(m: usize, n: u32, d: u32) -> Series {
    assert!(n >= 1);
    let names: Vec<String> = (1..=m).map(|j| format!("x{j}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    if m == 0 {
        return Series::one(&[], d);
    }
    let mut acc = Series::one(&refs, d);
    for name in &names {
        acc = acc.mul(&Series::geometric(&refs, d, name, n, &Rat::one()));
    }
    acc
}

fn log_series(cfg: &MultiGenConfig, signed: bool, drop_zero_index: bool) -> Series {
    let names = cfg.var_names();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut acc = Series::zero(&refs, cfg.d);
    for n in 1..=cfg.d {
        let mut b = beta(cfg.m, n, cfg.d).embed(&refs, cfg.d);
        if drop_zero_index {
            b = b.sub(&Series::one(&refs, cfg.d));
            if b.is_zero() {
                continue;
            }
        }
        // z^n/n * β, with (-z)^n/n * (-1) for the signed (G) variant
        let mut c = Rat::one() / int(n as i64);
        if signed && n % 2 == 0 {
            c = -c;
        }
        let zn = Series::monomial(&refs, cfg.d, "z", n, c);
        acc = acc.add(&zn.mul(&b));
    }
    acc
}

/// F(z;X): coefficient of z^j x^k = number of multipartitions of k into
/// exactly j non-zero parts (with repetition).
pub fn expand_f(cfg: &MultiGenConfig) -> Series {
    log_series(cfg, false, true).exp()
}

/// G(z;X): coefficient of z^j x^k = number of multipartitions of k into
/// exactly j distinct non-zero parts.
pub fn expand_g(cfg: &MultiGenConfig) -> Series {
    log_series(cfg, true, true).exp()
}

/// F with the all-zero index kept: expand_f * (1-z)^{-1}. Its z-slices are
/// the Bell coefficients P_j.
pub fn expand_f_full(cfg: &MultiGenConfig) -> Series {
    let names = cfg.var_names();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    expand_f(cfg).mul(&Series::geometric(&refs, cfg.d, "z", 1, &Rat::one()))
}

/// G with the all-zero index kept: expand_g * (1+z). Its z-slices are the
/// Bell coefficients Q_j.
pub fn expand_g_full(cfg: &MultiGenConfig) -> Series {
    let names = cfg.var_names();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let one_plus_z = Series::one(&refs, cfg.d).add(&Series::variable(&refs, cfg.d, "z"));
    expand_g(cfg).mul(&one_plus_z)
}

/// P_j = Y_j(0!β_m(1), 1!β_m(2), ..., (j-1)!β_m(j)) / j! — a series in
/// x_1..x_m equal to the z^j slice of [`expand_f_full`].
pub fn coefficient_p(j: u32, cfg: &MultiGenConfig) -> Series {
    assert!(j >= 1);
    let ring = cfg.x_ring();
    let g: Vec<Series> = (1..=j)
        .map(|n| beta(cfg.m, n, cfg.d).scale(&factorial(n - 1)))
        .collect();
    let y = bell_recurrence(&ring, j, &g).expect("argument count matches j");
    y.scale(&factorial(j).recip())
}

/// Q_j = Y_j(-0!β_m(1), ..., -(j-1)!β_m(j)) / ((-1)^j j!) — the z^j slice
/// of [`expand_g_full`].
pub fn coefficient_q(j: u32, cfg: &MultiGenConfig) -> Series {
    assert!(j >= 1);
    let ring = cfg.x_ring();
    let g: Vec<Series> = (1..=j)
        .map(|n| beta(cfg.m, n, cfg.d).scale(&-factorial(n - 1)))
        .collect();
    let y = bell_recurrence(&ring, j, &g).expect("argument count matches j");
    let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
    y.scale(&(sign / factorial(j)))
}

/// Which of F (repetitions allowed) or G (distinct parts) to specialize.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    F,
    G,
}

/// Restricted specialization X = (q, q^2, ..., q^r): a series in (z, q).
/// F: exp( sum_n z^n/n (prod_{l=1}^r (1-q^{ln})^{-1} - 1) ), G signed.
pub fn specialize_to_q(r: u32, d: u32, kind: Kind) -> Series {
    assert!(r >= 1);
    let vars = ["z", "q"];
    let mut acc = Series::zero(&vars, d);
    for n in 1..=d {
        let mut b = Series::one(&vars, d);
        for l in 1..=r {
            if l * n <= d {
                b = b.mul(&Series::geometric(&vars, d, "q", l * n, &Rat::one()));
            }
        }
        b = b.sub(&Series::one(&vars, d));
        if b.is_zero() {
            continue;
        }
        let mut c = Rat::one() / int(n as i64);
        if kind == Kind::G && n % 2 == 0 {
            c = -c;
        }
        acc = acc.add(&Series::monomial(&vars, d, "z", n, c).mul(&b));
    }
    acc.exp()
}

/// Direct product form of the specialization, expanded factor by factor
/// over non-zero indices k with x^k = q^{k_1 + 2 k_2 + ... + r k_r}.
pub fn specialize_to_q_direct(r: u32, d: u32, kind: Kind) -> Series {
    let vars = ["z", "q"];
    let mut acc = Series::one(&vars, d);
    // enumerate exponents e = sum l*k_l over non-zero k; multiplicity of e =
    // number of partitions of e with parts <= r
    for e in 0..=d.saturating_sub(1) {
        let mult = count_partitions_bounded(e, r);
        for _ in 0..mult {
            let factor = match kind {
                Kind::F => {
                    // (1 - z q^e)^{-1} = sum_j z^j q^{je}
                    let mut f = Series::one(&vars, d);
                    let mut j = 1u32;
                    while j + j * e <= d {
                        f.set_coeff(vec![j, j * e], Rat::one());
                        j += 1;
                    }
                    f
                }
                Kind::G => {
                    let mut f = Series::one(&vars, d);
                    if 1 + e <= d {
                        f.set_coeff(vec![1, e], Rat::one());
                    }
                    f
                }
            };
            acc = acc.mul(&factor);
        }
    }
    acc
}

/// Number of partitions of n into parts <= r (n = 0 counts once — the empty
/// partition — but callers skip the zero index themselves).
fn count_partitions_bounded(n: u32, r: u32) -> u64 {
    fn rec(n: u32, max: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|p| rec(n - p, p)).sum()
    }
    if n == 0 {
        0 // the all-zero index is excluded from the products
    } else {
        rec(n, r)
    }
}

/// One factor of the hierarchy factorization: for a fixed vector index k
/// with s = k_1 + ... + k_r, the factor prod_{k0 >= 0} (1 - q^{s + k0})^{-1}
/// (k0 >= 1 when s = 0, dropping the all-zero total index).
pub fn hierarchy_factor(s: u32, d: u32) -> Series {
    let start = if s == 0 { 1 } else { 0 };
    let mut acc = Series::one(&["q"], d);
    for k0 in start..=d.saturating_sub(s) {
        let e = s + k0;
        if e > d {
            break;
        }
        acc = acc.mul(&Series::geometric(&["q"], d, "q", e, &Rat::one()));
    }
    acc
}

/// All hierarchy factors needed to degree `d` for vectors of length `r`,
/// as (weight s, multiplicity, factor) grouped by the vector weight.
pub fn hierarchy_factorize(r: u32, d: u32) -> Vec<(u32, u64, Series)> {
    // multiplicity of weight s among k in Z_{>=0}^r: weak compositions,
    // C(s + r - 1, r - 1)
    let mut out = Vec::new();
    for s in 0..=d {
        let mult = if r == 0 {
            if s == 0 {
                1
            } else {
                0
            }
        } else {
            let mut c: u64 = 1;
            for i in 0..r - 1 {
                c = c * (s as u64 + i as u64 + 1) / (i as u64 + 1);
            }
            c
        };
        if mult == 0 {
            continue;
        }
        out.push((s, mult, hierarchy_factor(s, d)));
    }
    out
}

/// Product of the hierarchy factors, truncated to degree d.
pub fn hierarchy_product(r: u32, d: u32) -> Series {
    let mut acc = Series::one(&["q"], d);
    for (_, mult, factor) in hierarchy_factorize(r, d) {
        for _ in 0..mult {
            acc = acc.mul(&factor);
        }
    }
    acc
}

/// Brute-force coefficient oracle: number of multipartitions of k into
/// exactly j parts, with repetition (`distinct = false`) or distinct parts.
pub fn brute_force_count(k: &MultiIndex, j: usize, distinct: bool) -> u64 {
    let all = if distinct {
        enumerate_distinct_multipartitions(k)
    } else {
        enumerate_multipartitions(k)
    };
    match all {
        Ok(list) => list.iter().filter(|ms| ms.len() == j).count() as u64,
        Err(_) => 0,
    }
}
