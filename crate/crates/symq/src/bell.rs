//! Bell polynomials Y_n(g_1, ..., g_n).
//!
//! Two independent routes: the binomial recurrence and Faà di Bruno's
//! partition sum. Both are generic over the coefficient ring so the
//! arguments may be rationals or truncated series.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::{binomial, factorial, Rat};
use crate::ring::{CoeffRing, RatField};
use crate::series::Series;

/// Y_n by the recurrence Y_{n+1} = sum_k C(n,k) Y_{n-k} g_{k+1}, with Y_0 = 1.
///
/// `g` must supply at least `n` values g_1..g_n.
pub fn bell_recurrence<R: CoeffRing>(ring: &R, n: u32, g: &[R::Elem]) -> Result<R::Elem> {
    if (g.len() as u32) < n {
        return Err(Error::Usage(format!(
            "Bell Y_{n} needs {n} arguments, got {}",
            g.len()
        )));
    }
    let mut y: Vec<R::Elem> = vec![ring.one()];
    for m in 0..n {
        // Y_{m+1} = sum_{k=0}^{m} C(m,k) Y_{m-k} g_{k+1}
        let mut acc = ring.zero();
        for k in 0..=m {
            let c = binomial(m, k);
            let term = ring.mul(&y[(m - k) as usize], &g[k as usize]);
            acc = ring.add(&acc, &ring.scale(&term, &c));
        }
        y.push(acc);
    }
    Ok(y[n as usize].clone())
}

/// Y_n by Faà di Bruno's formula: the sum over partitions of n with
/// multiplicities m_i of n!/(prod_i m_i! (i!)^{m_i}) * prod_i g_i^{m_i}.
pub fn bell_faa_di_bruno<R: CoeffRing>(ring: &R, n: u32, g: &[R::Elem]) -> Result<R::Elem> {
    if (g.len() as u32) < n {
        return Err(Error::Usage(format!(
            "Bell Y_{n} needs {n} arguments, got {}",
            g.len()
        )));
    }
    let mut acc = ring.zero();
    for lambda in Partition::all(n) {
        let mut coef = factorial(n);
        let mut prod = ring.one();
        let mut i = 0;
        let parts = lambda.parts();
        while i < parts.len() {
            let value = parts[i];
            let mut m = 0u32;
            while i < parts.len() && parts[i] == value {
                m += 1;
                i += 1;
            }
            coef /= factorial(m) * factorial(value).pow(m as i32);
            for _ in 0..m {
                prod = ring.mul(&prod, &g[(value - 1) as usize]);
            }
        }
        acc = ring.add(&acc, &ring.scale(&prod, &coef));
    }
    Ok(acc)
}

/// Rational-argument conveniences.
pub fn bell_recurrence_rat(n: u32, g: &[Rat]) -> Result<Rat> {
    bell_recurrence(&RatField, n, g)
}

pub fn bell_faa_di_bruno_rat(n: u32, g: &[Rat]) -> Result<Rat> {
    bell_faa_di_bruno(&RatField, n, g)
}

/// Checks the generating-function link: exp(sum g_n z^n/n!) must have
/// coefficient Y_n/n! at z^n for every n <= d.
pub fn bell_generating_check(g: &[Rat], d: u32) -> Result<bool> {
    if (g.len() as u32) < d {
        return Err(Error::Usage(format!(
            "generating check to degree {d} needs {d} arguments, got {}",
            g.len()
        )));
    }
    let mut inner = Series::zero(&["z"], d);
    for (k, gk) in g.iter().take(d as usize).enumerate() {
        let n = k as u32 + 1;
        inner = inner.add(&Series::monomial(&["z"], d, "z", n, gk / factorial(n)));
    }
    let b = inner.exp();
    for n in 0..=d {
        let yn = bell_recurrence_rat(n, g)?;
        if b.coeff(&[n]) != yn / factorial(n) {
            return Ok(false);
        }
    }
    Ok(true)
}
