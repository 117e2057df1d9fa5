//! q-Pochhammer machinery, the Euler product/coefficient recursion, and
//! numerical evaluation of Ruelle-type spectral products.
//!
//! The spectral function R(s) is exposed operationally through its defining
//! product prod_{n=l}^inf (1 - q^{an+eps}) with q = e^{2πiθ}, Im θ > 0,
//! together with the associated argument s = (al+eps)(1-iρ(θ)) + 1 - a,
//! ρ(θ) = Re θ/Im θ. The plus-sign variant shifts s by iσ(θ), σ = 1/(2 Im θ).

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::series::Series;

/// Finite or infinite order of a Pochhammer product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PochOrder {
    Finite(u32),
    Infinite,
}

/// Symbolic (a; q)_n with `a` a series and `q` one of its variables:
/// prod_{k=0}^{n-1} (1 - a q^k). For the infinite order the product is
/// truncated once a q^k exceeds the series truncation; this requires `a`
/// to have zero constant term.
pub fn pochhammer_series(a: &Series, q_var: &str, order: PochOrder) -> Result<Series> {
    let one = a.constant_like(Rat::one());
    match order {
        PochOrder::Finite(n) => {
            let mut acc = one.clone();
            let mut aq = a.clone();
            let q = Series::variable(
                &a.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                a.trunc(),
                q_var,
            );
            for _ in 0..n {
                acc = acc.mul(&one.sub(&aq));
                aq = aq.mul(&q);
            }
            Ok(acc)
        }
        PochOrder::Infinite => {
            if !a.constant_term().is_zero() {
                return Err(Error::Usage(
                    "infinite symbolic Pochhammer needs a with zero constant term".into(),
                ));
            }
            let mut acc = one.clone();
            let mut aq = a.clone();
            let q = Series::variable(
                &a.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                a.trunc(),
                q_var,
            );
            while !aq.is_zero() {
                acc = acc.mul(&one.sub(&aq));
                aq = aq.mul(&q);
            }
            Ok(acc)
        }
    }
}

/// Numeric (a; q)_n. For n = ∞ requires |q| < 1; the tail is cut when
/// |a q^N| < tol * (1 - |q|).
pub fn pochhammer_complex(
    a: Complex64,
    q: Complex64,
    order: PochOrder,
    tol: f64,
) -> Result<Complex64> {
    match order {
        PochOrder::Finite(n) => {
            let mut acc = Complex64::new(1.0, 0.0);
            let mut aq = a;
            for _ in 0..n {
                acc *= Complex64::new(1.0, 0.0) - aq;
                aq *= q;
            }
            ensure_finite(acc)
        }
        PochOrder::Infinite => {
            if q.norm() >= 1.0 {
                return Err(Error::Domain(format!(
                    "(a;q)_inf diverges at |q| = {} >= 1",
                    q.norm()
                )));
            }
            let mut acc = Complex64::new(1.0, 0.0);
            let mut aq = a;
            let gap = 1.0 - q.norm();
            for _ in 0..MAX_FACTORS {
                if aq.norm() < tol * gap {
                    break;
                }
                acc *= Complex64::new(1.0, 0.0) - aq;
                aq *= q;
            }
            ensure_finite(acc)
        }
    }
}

const MAX_FACTORS: usize = 1_000_000;

fn ensure_finite(z: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain("non-finite complex result".into()))
    }
}

/// Coefficients B_n of prod_{n>=1} (1 - q^n)^{-a_n} = 1 + sum B_n q^n via
/// the divisor-sum recursion n B_n = sum_{j=1}^n D_j B_{n-j},
/// D_j = sum_{d|j} d a_d.
pub fn euler_expand(a: &[i64], d: u32) -> Result<Vec<Rat>> {
    if (a.len() as u32) < d {
        return Err(Error::Usage(format!(
            "euler_expand to degree {d} needs {d} exponents, got {}",
            a.len()
        )));
    }
    let dj: Vec<Rat> = (1..=d as usize)
        .map(|j| {
            let mut s = 0i64;
            for div in 1..=j {
                if j % div == 0 {
                    s += div as i64 * a[div - 1];
                }
            }
            Rat::from_integer(s.into())
        })
        .collect();
    let mut b = vec![Rat::one()];
    for n in 1..=d as usize {
        let mut acc = Rat::zero();
        for j in 1..=n {
            acc += &dj[j - 1] * &b[n - j];
        }
        b.push(acc / Rat::from_integer(n.into()));
    }
    Ok(b)
}

/// Rational-exponent variant used by the inversion round trip.
pub fn euler_expand_rat(a: &[Rat], d: u32) -> Result<Vec<Rat>> {
    if (a.len() as u32) < d {
        return Err(Error::Usage(format!(
            "euler_expand to degree {d} needs {d} exponents, got {}",
            a.len()
        )));
    }
    let dj: Vec<Rat> = (1..=d as usize)
        .map(|j| {
            let mut s = Rat::zero();
            for div in 1..=j {
                if j % div == 0 {
                    s += Rat::from_integer((div as i64).into()) * &a[div - 1];
                }
            }
            s
        })
        .collect();
    let mut b = vec![Rat::one()];
    for n in 1..=d as usize {
        let mut acc = Rat::zero();
        for j in 1..=n {
            acc += &dj[j - 1] * &b[n - j];
        }
        b.push(acc / Rat::from_integer(n.into()));
    }
    Ok(b)
}

/// Recovers the exponents a_n from coefficients B_0..B_D (B_0 must be 1):
/// the unique solution of the recursion, rational in general.
pub fn euler_invert(b: &[Rat], d: u32) -> Result<Vec<Rat>> {
    if b.is_empty() || !b[0].is_one() {
        return Err(Error::Usage("euler_invert needs leading coefficient 1".into()));
    }
    if (b.len() as u32) < d + 1 {
        return Err(Error::Usage(format!(
            "euler_invert to degree {d} needs {} coefficients, got {}",
            d + 1,
            b.len()
        )));
    }
    // n B_n = sum_{j=1}^n D_j B_{n-j}  =>  D_n = n B_n - sum_{j<n} D_j B_{n-j}
    let mut dj: Vec<Rat> = Vec::with_capacity(d as usize);
    for n in 1..=d as usize {
        let mut acc = Rat::from_integer(n.into()) * &b[n];
        for j in 1..n {
            acc -= &dj[j - 1] * &b[n - j];
        }
        dj.push(acc);
    }
    // D_n = sum_{d|n} d a_d  =>  n a_n = D_n - sum_{d|n, d<n} d a_d
    let mut a: Vec<Rat> = Vec::with_capacity(d as usize);
    for n in 1..=d as usize {
        let mut acc = dj[n - 1].clone();
        for div in 1..n {
            if n % div == 0 {
                acc -= Rat::from_integer((div as i64).into()) * &a[div - 1];
            }
        }
        a.push(acc / Rat::from_integer(n.into()));
    }
    Ok(a)
}

/// Parameters of a Ruelle-type product prod_{n=l}^inf (1 ∓ q^{an+eps}).
#[derive(Clone, Copy, Debug)]
pub struct SpectralParams {
    /// exponent slope; must be positive
    pub a: f64,
    /// exponent offset
    pub eps: Complex64,
    /// first factor index (l >= 1)
    pub ell: u32,
    /// modular parameter with Im θ > 0; q = e^{2πiθ}
    pub theta: Complex64,
}

impl SpectralParams {
    pub fn new(a: f64, eps: Complex64, ell: u32, theta: Complex64) -> Result<Self> {
        if theta.im <= 0.0 {
            return Err(Error::Domain("spectral products need Im θ > 0".into()));
        }
        if a <= 0.0 {
            return Err(Error::Domain("spectral products need a > 0".into()));
        }
        if ell < 1 {
            return Err(Error::Domain("spectral products need l >= 1".into()));
        }
        Ok(SpectralParams { a, eps, ell, theta })
    }

    pub fn q(&self) -> Complex64 {
        (Complex64::i() * std::f64::consts::TAU * self.theta).exp()
    }

    /// ρ(θ) = Re θ / Im θ
    pub fn rho(&self) -> f64 {
        self.theta.re / self.theta.im
    }

    /// σ(θ) = 1 / (2 Im θ)
    pub fn sigma(&self) -> f64 {
        1.0 / (2.0 * self.theta.im)
    }

    /// s = (a l + eps)(1 - iρ(θ)) + 1 - a
    pub fn s_value(&self) -> Complex64 {
        let al = Complex64::new(self.a * self.ell as f64, 0.0) + self.eps;
        al * Complex64::new(1.0, -self.rho()) + Complex64::new(1.0 - self.a, 0.0)
    }

    /// q^{an+eps} = exp(2πiθ(an+eps))
    fn w(&self, n: u32) -> Complex64 {
        let expo = Complex64::new(self.a * n as f64, 0.0) + self.eps;
        (Complex64::i() * std::f64::consts::TAU * self.theta * expo).exp()
    }
}

/// Evaluates prod_{n=l}^inf (1 - q^{an+eps}) together with the associated
/// argument s. The tail is truncated using the geometric bound
/// |log prod_{n>N} (1 ± w_n)| <= 2 sum |w_n|, valid once |w_n| < 1/2.
pub fn ruelle_product(p: &SpectralParams, tol: f64) -> Result<(Complex64, Complex64)> {
    let value = alternating_product(p, tol, false)?;
    Ok((value, p.s_value()))
}

/// The plus-sign variant prod (1 + q^{an+eps}); s gains + iσ(θ).
pub fn ruelle_plus_product(p: &SpectralParams, tol: f64) -> Result<(Complex64, Complex64)> {
    let value = alternating_product(p, tol, true)?;
    let s = p.s_value() + Complex64::new(0.0, p.sigma());
    Ok((value, s))
}

fn alternating_product(p: &SpectralParams, tol: f64, plus: bool) -> Result<Complex64> {
    let qa = p.w(1).norm() / p.w(0).norm(); // |q^a|
    if !qa.is_finite() || qa >= 1.0 {
        return Err(Error::Domain(format!("|q^a| = {qa} >= 1: product diverges")));
    }
    let mut acc = Complex64::new(1.0, 0.0);
    let mut n = p.ell;
    loop {
        let w = p.w(n);
        // geometric tail bound: 2 |w_n| / (1 - |q^a|) below tolerance
        if w.norm() < 0.5 && 2.0 * w.norm() / (1.0 - qa) < tol {
            break;
        }
        acc *= if plus {
            Complex64::new(1.0, 0.0) + w
        } else {
            Complex64::new(1.0, 0.0) - w
        };
        n += 1;
        if (n - p.ell) as usize > MAX_FACTORS {
            return Err(Error::Domain("spectral product did not converge".into()));
        }
    }
    ensure_finite(acc)
}

/// Per-m outcome of the restricted-specialization identity check.
#[derive(Clone, Debug)]
pub struct SpectralIdentityReport {
    pub max_deviation: f64,
    pub per_m: Vec<(u32, f64)>,
    pub series_deviation: f64,
    pub passed: bool,
}

/// Verifies, for each m <= m_max, the factorization
///   prod_{l=1}^r (1 - q^{lm})^{-1}
///     = [prod_{l=1}^inf (1 - q^{lm})]^{-1} · prod_{l=r+1}^inf (1 - q^{lm}),
/// with both infinite factors evaluated as Ruelle products, and checks that
/// their s-arguments take the advertised forms -imρ(θ)+1 and
/// -imρ(θ)(r+1)+mr+1. Also compares the two forms of log F(z;X) summed to
/// m_max for the supplied z.
pub fn check_spectral_identities(
    r: u32,
    m_max: u32,
    theta: Complex64,
    z: Complex64,
    tol: f64,
) -> Result<SpectralIdentityReport> {
    if theta.im <= 0.0 {
        return Err(Error::Domain("need Im θ > 0".into()));
    }
    let q = (Complex64::i() * std::f64::consts::TAU * theta).exp();
    let rho = theta.re / theta.im;
    let mut per_m = Vec::new();
    let mut max_dev: f64 = 0.0;
    let mut log_f_finite = Complex64::new(0.0, 0.0);
    let mut log_f_spectral = Complex64::new(0.0, 0.0);
    for m in 1..=m_max {
        // finite product
        let mut finite = Complex64::new(1.0, 0.0);
        for l in 1..=r {
            finite /= Complex64::new(1.0, 0.0) - q.powf(l as f64 * m as f64);
        }
        // spectral side
        let p_den = SpectralParams::new(m as f64, Complex64::zero(), 1, theta)?;
        let (den, s_den) = ruelle_product(&p_den, tol)?;
        let p_num = SpectralParams::new(m as f64, Complex64::zero(), r + 1, theta)?;
        let (num, s_num) = ruelle_product(&p_num, tol)?;
        let spectral = num / den;
        let dev = (finite - spectral).norm();

        // the advertised s-arguments
        let s_den_expect = Complex64::new(1.0, -(m as f64) * rho);
        let s_num_expect = Complex64::new((m * r) as f64 + 1.0, -(m as f64) * rho * (r as f64 + 1.0));
        let s_dev = (s_den - s_den_expect).norm().max((s_num - s_num_expect).norm());

        let total = dev.max(s_dev);
        max_dev = max_dev.max(total);
        per_m.push((m, total));

        let zm = z.powu(m) / m as f64;
        log_f_finite += zm * finite;
        log_f_spectral += zm * spectral;
    }
    let series_deviation = (log_f_finite - log_f_spectral).norm();
    max_dev = max_dev.max(series_deviation);
    Ok(SpectralIdentityReport {
        max_deviation: max_dev,
        per_m,
        series_deviation,
        passed: max_dev < tol,
    })
}

/// Symbolic (q; q)_inf to degree d (the pentagonal-number series).
pub fn euler_function_series(d: u32) -> Series {
    let q = Series::variable(&["q"], d, "q");
    pochhammer_series(&q, "q", PochOrder::Infinite).expect("q has zero constant term")
}
