//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] is a sparse map from exponent vectors to nonzero rationals,
//! truncated at a fixed total degree `trunc`: every operation discards
//! monomials of total degree greater than `trunc`. Arithmetic between two
//! series requires the same variable list and the same truncation degree;
//! mixing contexts is a caller bug and panics.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::rat::{factorial, rat_to_f64, Rat};

/// Sparse multivariate formal power series truncated at a total degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    vars: Arc<Vec<String>>,
    trunc: u32,
    /// exponent vector (same length as `vars`, total degree <= trunc) -> nonzero coefficient
    coeffs: BTreeMap<Vec<u32>, Rat>,
}

fn total_degree(expts: &[u32]) -> u32 {
    expts.iter().sum()
}

impl Series {
    /// The zero series over the given variables.
    pub fn zero(vars: &[&str], trunc: u32) -> Self {
        Series {
            vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()),
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// Zero series sharing the context of `self`.
    pub fn zero_like(&self) -> Self {
        Series {
            vars: self.vars.clone(),
            trunc: self.trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// Constant series.
    pub fn constant(vars: &[&str], trunc: u32, value: Rat) -> Self {
        let mut s = Self::zero(vars, trunc);
        s.set_coeff(vec![0; s.vars.len()], value);
        s
    }

    /// The constant 1.
    pub fn one(vars: &[&str], trunc: u32) -> Self {
        Self::constant(vars, trunc, Rat::one())
    }

    /// Constant series in the context of `self`.
    pub fn constant_like(&self, value: Rat) -> Self {
        let mut s = self.zero_like();
        s.set_coeff(vec![0; self.vars.len()], value);
        s
    }

    /// The monomial `c * var^power`. Panics if the variable is unknown.
    pub fn monomial(vars: &[&str], trunc: u32, var: &str, power: u32, c: Rat) -> Self {
        let mut s = Self::zero(vars, trunc);
        let idx = s.var_index(var);
        let mut e = vec![0u32; s.vars.len()];
        e[idx] = power;
        s.set_coeff(e, c);
        s
    }

    /// Variable `var` as a series.
    pub fn variable(vars: &[&str], trunc: u32, var: &str) -> Self {
        Self::monomial(vars, trunc, var, 1, Rat::one())
    }

    /// Geometric series 1/(1 - c*var^step) = sum_k c^k var^(k*step), truncated.
    pub fn geometric(vars: &[&str], trunc: u32, var: &str, step: u32, c: &Rat) -> Self {
        assert!(step >= 1, "geometric step must be >= 1");
        let mut s = Self::one(vars, trunc);
        let idx = s.var_index(var);
        let mut k = 1u32;
        let mut ck = c.clone();
        while k * step <= trunc {
            let mut e = vec![0u32; s.vars.len()];
            e[idx] = k * step;
            s.set_coeff(e, ck.clone());
            k += 1;
            ck *= c;
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn var_index(&self, var: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == var)
            .unwrap_or_else(|| panic!("unknown series variable `{var}`"))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) monomials.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, expts: &[u32]) -> Rat {
        self.coeffs.get(expts).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Sets (or clears) a coefficient. Exponents above the truncation are ignored.
    pub fn set_coeff(&mut self, expts: Vec<u32>, value: Rat) {
        assert_eq!(expts.len(), self.vars.len(), "exponent arity mismatch");
        if total_degree(&expts) > self.trunc {
            return;
        }
        if value.is_zero() {
            self.coeffs.remove(&expts);
        } else {
            self.coeffs.insert(expts, value);
        }
    }

    fn add_to_coeff(&mut self, expts: Vec<u32>, value: &Rat) {
        if value.is_zero() || total_degree(&expts) > self.trunc {
            return;
        }
        let entry = self.coeffs.entry(expts);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get_mut();
                *v += value;
                if v.is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value.clone());
            }
        }
    }

    /// Iterate over (exponents, coefficient) pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.coeffs.iter()
    }

    fn assert_same_context(&self, other: &Series) {
        assert!(
            self.vars == other.vars && self.trunc == other.trunc,
            "series context mismatch: ({:?}, D={}) vs ({:?}, D={})",
            self.vars,
            self.trunc,
            other.vars,
            other.trunc
        );
    }

    pub fn add(&self, other: &Series) -> Series {
        self.assert_same_context(other);
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_to_coeff(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        let mut out = self.zero_like();
        for (e, c) in self.coeffs.iter() {
            out.coeffs.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> Series {
        if r.is_zero() {
            return self.zero_like();
        }
        let mut out = self.zero_like();
        for (e, c) in self.coeffs.iter() {
            out.coeffs.insert(e.clone(), c * r);
        }
        out
    }

    /// Product truncated to the common total degree.
    pub fn mul(&self, other: &Series) -> Series {
        self.assert_same_context(other);
        let mut out = self.zero_like();
        // iterate over the smaller operand outside
        let (small, big) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ea, ca) in small.coeffs.iter() {
            let da = total_degree(ea);
            if da > self.trunc {
                continue;
            }
            for (eb, cb) in big.coeffs.iter() {
                let db = total_degree(eb);
                if da + db > self.trunc {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_to_coeff(e, &(ca * cb));
            }
        }
        out
    }

    /// k-th power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Series {
        let mut out = self.constant_like(Rat::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Splits into homogeneous components by total degree.
    fn homogeneous_parts(&self) -> Vec<BTreeMap<Vec<u32>, Rat>> {
        let mut parts: Vec<BTreeMap<Vec<u32>, Rat>> = vec![BTreeMap::new(); self.trunc as usize + 1];
        for (e, c) in self.coeffs.iter() {
            parts[total_degree(e) as usize].insert(e.clone(), c.clone());
        }
        parts
    }

    fn convolve_into(
        acc: &mut BTreeMap<Vec<u32>, Rat>,
        a: &BTreeMap<Vec<u32>, Rat>,
        b: &BTreeMap<Vec<u32>, Rat>,
        scale: &Rat,
    ) {
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let v = ca * cb * scale;
                if v.is_zero() {
                    continue;
                }
                let slot = acc.entry(e).or_insert_with(Rat::zero);
                *slot += v;
            }
        }
    }

    /// exp of a series with zero constant term.
    ///
    /// Computed degree by degree from the Euler-operator recurrence
    /// d*B_d = sum_e (e*A_e)*B_{d-e}, which agrees with sum_k a^k/k!.
    /// Panics if the constant term is nonzero.
    pub fn exp(&self) -> Series {
        assert!(
            self.constant_term().is_zero(),
            "series exp requires zero constant term"
        );
        let a = self.homogeneous_parts();
        let d_max = self.trunc as usize;
        let mut b: Vec<BTreeMap<Vec<u32>, Rat>> = Vec::with_capacity(d_max + 1);
        let mut one_map = BTreeMap::new();
        one_map.insert(vec![0u32; self.vars.len()], Rat::one());
        b.push(one_map);
        for d in 1..=d_max {
            let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
            for e in 1..=d {
                if a[e].is_empty() || b[d - e].is_empty() {
                    continue;
                }
                let w = Rat::from_integer(e.into());
                Self::convolve_into(&mut acc, &a[e], &b[d - e], &w);
            }
            let inv_d = Rat::from_integer(d.into()).recip();
            acc.retain(|_, v| !v.is_zero());
            for v in acc.values_mut() {
                *v *= &inv_d;
            }
            b.push(acc);
        }
        self.collect_parts(b)
    }

    /// log of a series with constant term 1.
    ///
    /// Inverse of [`Series::exp`]: d*A_d = d*B_d - sum_{e<d} (e*A_e)*B_{d-e}.
    /// Panics if the constant term is not 1.
    pub fn log(&self) -> Series {
        assert!(
            self.constant_term().is_one(),
            "series log requires constant term 1"
        );
        let b = self.homogeneous_parts();
        let d_max = self.trunc as usize;
        let mut a: Vec<BTreeMap<Vec<u32>, Rat>> = Vec::with_capacity(d_max + 1);
        a.push(BTreeMap::new());
        for d in 1..=d_max {
            let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
            let w = Rat::from_integer(d.into());
            for (e, c) in b[d].iter() {
                acc.insert(e.clone(), c * &w);
            }
            for e in 1..d {
                if a[e].is_empty() || b[d - e].is_empty() {
                    continue;
                }
                let we = -Rat::from_integer(e.into());
                Self::convolve_into(&mut acc, &a[e], &b[d - e], &we);
            }
            let inv_d = w.recip();
            acc.retain(|_, v| !v.is_zero());
            for v in acc.values_mut() {
                *v *= &inv_d;
            }
            a.push(acc);
        }
        self.collect_parts(a)
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    /// Panics if the constant term is zero.
    pub fn inv(&self) -> Series {
        let c0 = self.constant_term();
        assert!(!c0.is_zero(), "series inverse requires a unit constant term");
        let b = self.homogeneous_parts();
        let d_max = self.trunc as usize;
        let inv_c0 = c0.recip();
        let mut q: Vec<BTreeMap<Vec<u32>, Rat>> = Vec::with_capacity(d_max + 1);
        let mut q0 = BTreeMap::new();
        q0.insert(vec![0u32; self.vars.len()], inv_c0.clone());
        q.push(q0);
        for d in 1..=d_max {
            let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
            for e in 1..=d {
                if b[e].is_empty() || q[d - e].is_empty() {
                    continue;
                }
                Self::convolve_into(&mut acc, &b[e], &q[d - e], &Rat::one());
            }
            acc.retain(|_, v| !v.is_zero());
            let m = -&inv_c0;
            for v in acc.values_mut() {
                *v *= &m;
            }
            q.push(acc);
        }
        self.collect_parts(q)
    }

    fn collect_parts(&self, parts: Vec<BTreeMap<Vec<u32>, Rat>>) -> Series {
        let mut out = self.zero_like();
        for part in parts {
            for (e, c) in part {
                if !c.is_zero() {
                    out.coeffs.insert(e, c);
                }
            }
        }
        out
    }

    /// Re-truncates to a (smaller or equal) total degree.
    pub fn truncated(&self, d: u32) -> Series {
        let mut out = self.clone();
        out.trunc = d;
        out.coeffs.retain(|e, _| total_degree(e) <= d);
        out
    }

    /// Maps this series into a superset variable context (same truncation).
    /// Every variable of `self` must appear in `vars`.
    pub fn embed(&self, vars: &[&str], trunc: u32) -> Series {
        let mut out = Series::zero(vars, trunc);
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                out.vars
                    .iter()
                    .position(|w| w == v)
                    .unwrap_or_else(|| panic!("variable `{v}` missing from embedding context"))
            })
            .collect();
        for (e, c) in self.coeffs.iter() {
            let mut e2 = vec![0u32; out.vars.len()];
            for (i, &p) in e.iter().enumerate() {
                e2[map[i]] = p;
            }
            out.set_coeff(e2, c.clone());
        }
        out
    }

    /// Substitutes var -> -var (negates coefficients of odd powers).
    pub fn substitute_neg(&self, var: &str) -> Series {
        let idx = self.var_index(var);
        let mut out = self.zero_like();
        for (e, c) in self.coeffs.iter() {
            let v = if e[idx] % 2 == 1 { -c.clone() } else { c.clone() };
            out.coeffs.insert(e.clone(), v);
        }
        out
    }

    /// Substitutes an exact rational value for one variable; the variable
    /// stays in the context with exponent 0.
    pub fn substitute_rat(&self, var: &str, value: &Rat) -> Series {
        let idx = self.var_index(var);
        let mut out = self.zero_like();
        for (e, c) in self.coeffs.iter() {
            let mut e2 = e.clone();
            let p = e2[idx];
            e2[idx] = 0;
            out.add_to_coeff(e2, &(c * value.pow(p as i32)));
        }
        out
    }

    /// Extracts the coefficient of `var^power` as a series in the remaining
    /// context (the variable stays with exponent zero).
    pub fn coefficient_of(&self, var: &str, power: u32) -> Series {
        let idx = self.var_index(var);
        let mut out = self.zero_like();
        for (e, c) in self.coeffs.iter() {
            if e[idx] == power {
                let mut e2 = e.clone();
                e2[idx] = 0;
                out.coeffs.insert(e2, c.clone());
            }
        }
        out
    }

    /// Maximum total degree with a nonzero coefficient (None when zero).
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|e| total_degree(e)).max()
    }

    /// Evaluates at complex points, one per variable.
    pub fn eval_complex(&self, points: &[Complex64]) -> Complex64 {
        assert_eq!(points.len(), self.vars.len(), "evaluation arity mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.coeffs.iter() {
            let mut term = Complex64::new(rat_to_f64(c), 0.0);
            for (i, &p) in e.iter().enumerate() {
                term *= points[i].powu(p);
            }
            acc += term;
        }
        acc
    }

    /// Evaluates at exact rational points.
    pub fn eval_rat(&self, points: &[Rat]) -> Rat {
        assert_eq!(points.len(), self.vars.len(), "evaluation arity mismatch");
        let mut acc = Rat::zero();
        for (e, c) in self.coeffs.iter() {
            let mut term = c.clone();
            for (i, &p) in e.iter().enumerate() {
                term *= points[i].pow(p as i32);
            }
            acc += term;
        }
        acc
    }

    /// Naive exp as sum_k a^k / k! — reference implementation for tests.
    pub fn exp_naive(&self) -> Series {
        assert!(self.constant_term().is_zero());
        let mut out = self.constant_like(Rat::one());
        let mut pw = self.constant_like(Rat::one());
        for k in 1..=self.trunc {
            pw = pw.mul(self);
            if pw.is_zero() {
                break;
            }
            out = out.add(&pw.scale(&factorial(k).recip()));
        }
        out
    }

    /// Naive log as -sum_k (1-a)^k / k — reference implementation for tests.
    pub fn log_naive(&self) -> Series {
        assert!(self.constant_term().is_one());
        let u = self.constant_like(Rat::one()).sub(self);
        let mut out = self.zero_like();
        let mut pw = self.constant_like(Rat::one());
        for k in 1..=self.trunc {
            pw = pw.mul(&u);
            if pw.is_zero() {
                break;
            }
            out = out.sub(&pw.scale(&Rat::from_integer(k.into()).recip()));
        }
        out
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // sort by total degree, then exponents — stable, readable
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            total_degree(ea)
                .cmp(&total_degree(eb))
                .then_with(|| ea.cmp(eb).reverse())
        });
        let mut first = true;
        for (e, c) in terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], p)
                    }
                })
                .collect();
            let sep = if first {
                ""
            } else if c.cmp(&Rat::zero()) == Ordering::Less {
                " - "
            } else {
                " + "
            };
            let cc = if first {
                c.clone()
            } else {
                // magnitude only; the sign went into the separator
                if c.cmp(&Rat::zero()) == Ordering::Less {
                    -c.clone()
                } else {
                    c.clone()
                }
            };
            if mono.is_empty() {
                write!(f, "{sep}{cc}")?;
            } else if cc.is_one() {
                write!(f, "{sep}{}", mono.join("*"))?;
            } else {
                write!(f, "{sep}{cc}*{}", mono.join("*"))?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use proptest::prelude::*;

    fn q_series(trunc: u32) -> Series {
        Series::variable(&["q"], trunc, "q")
    }

    #[test]
    fn mul_difference_of_squares() {
        let one = Series::one(&["q"], 2);
        let q = q_series(2);
        let lhs = one.add(&q).mul(&one.sub(&q));
        let mut expect = Series::one(&["q"], 2);
        expect.set_coeff(vec![2], int(-1));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn mul_truncates_telescoping() {
        // (1 + q + q^2 + q^3 + q^4)(1 - q) = 1 - q^5 -> 1 at D=4
        let d = 4;
        let mut s = Series::one(&["q"], d);
        for n in 1..=4 {
            s.set_coeff(vec![n], int(1));
        }
        let one_minus_q = Series::one(&["q"], d).sub(&q_series(d));
        assert_eq!(s.mul(&one_minus_q), Series::one(&["q"], d));
    }

    #[test]
    fn mul_identity() {
        let mut a = Series::one(&["x", "y"], 3);
        a.set_coeff(vec![1, 2], rat(7, 3));
        a.set_coeff(vec![1, 0], rat(-1, 2));
        let one = Series::one(&["x", "y"], 3);
        assert_eq!(a.mul(&one), a);
    }

    #[test]
    fn exp_of_q() {
        // exp(q) to D=3: 1 + q + q^2/2 + q^3/6
        let e = q_series(3).exp();
        assert_eq!(e.coeff(&[0]), int(1));
        assert_eq!(e.coeff(&[1]), int(1));
        assert_eq!(e.coeff(&[2]), rat(1, 2));
        assert_eq!(e.coeff(&[3]), rat(1, 6));
    }

    #[test]
    fn exp_zero_is_one() {
        let z = Series::zero(&["q"], 5);
        assert_eq!(z.exp(), Series::one(&["q"], 5));
    }

    #[test]
    fn log_one_is_zero() {
        let one = Series::one(&["q"], 5);
        assert!(one.log().is_zero());
    }

    #[test]
    fn log_of_geometric_is_mercator() {
        // log(1-q) = -q - q^2/2 - q^3/3
        let d = 3;
        let one_minus_q = Series::one(&["q"], d).sub(&q_series(d));
        let l = one_minus_q.log();
        assert_eq!(l.coeff(&[1]), int(-1));
        assert_eq!(l.coeff(&[2]), rat(-1, 2));
        assert_eq!(l.coeff(&[3]), rat(-1, 3));
    }

    #[test]
    fn log_of_two_factor_product() {
        // log((1-q)^{-1} (1-q^2)^{-1}) at D=3.
        // Oracle: sum of the two Mercator expansions,
        //   sum q^n/n + sum q^{2n}/n = q + (3/2) q^2 + (1/3) q^3 + ...
        let d = 3;
        let f = Series::geometric(&["q"], d, "q", 1, &int(1))
            .mul(&Series::geometric(&["q"], d, "q", 2, &int(1)));
        let l = f.log();
        assert_eq!(l.coeff(&[1]), int(1));
        assert_eq!(l.coeff(&[2]), rat(3, 2));
        assert_eq!(l.coeff(&[3]), rat(1, 3));
    }

    #[test]
    fn exp_of_log_inverse_partition_series() {
        // exp(log((1-q)^{-1})) should reproduce the geometric series, and
        // exp(-log(1-q)) expanded to D=4 gives the partition numbers of a
        // single geometric factor: 1,1,1,1,1. The partition generating
        // function needs all factors:
        let d = 4;
        let mut f = Series::one(&["q"], d);
        for n in 1..=d {
            f = f.mul(&Series::geometric(&["q"], d, "q", n, &int(1)));
        }
        // brute-force partition counts
        let expect = [1i64, 1, 2, 3, 5];
        for (n, &p) in expect.iter().enumerate() {
            assert_eq!(f.coeff(&[n as u32]), int(p), "p({n})");
        }
        // and the log/exp round trip preserves it
        assert_eq!(f.log().exp(), f);
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let d = 6;
        let one_minus_q = Series::one(&["q"], d).sub(&q_series(d));
        assert_eq!(one_minus_q.inv(), Series::geometric(&["q"], d, "q", 1, &int(1)));
        assert_eq!(one_minus_q.inv().mul(&one_minus_q), Series::one(&["q"], d));
    }

    #[test]
    fn embed_and_coefficient_of() {
        let d = 4;
        let bx = Series::geometric(&["x"], d, "x", 1, &int(1));
        let e = bx.embed(&["z", "x"], d);
        assert_eq!(e.coeff(&[0, 2]), int(1));
        let z = Series::variable(&["z", "x"], d, "z");
        let s = z.mul(&e);
        let slice = s.coefficient_of("z", 1);
        assert_eq!(slice.coeff(&[0, 2]), int(1));
        assert_eq!(slice.coeff(&[0, 4]), int(0)); // truncated: z*x^4 has degree 5
    }

    #[test]
    fn substitution() {
        let d = 5;
        let mut s = Series::zero(&["z", "q"], d);
        s.set_coeff(vec![1, 1], int(2));
        s.set_coeff(vec![3, 0], int(1));
        let t = s.substitute_neg("z");
        assert_eq!(t.coeff(&[1, 1]), int(-2));
        assert_eq!(t.coeff(&[3, 0]), int(-1));
        let u = s.substitute_rat("z", &rat(1, 2));
        assert_eq!(u.coeff(&[0, 1]), int(1));
        assert_eq!(u.coeff(&[0, 0]), rat(1, 8));
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn context_mismatch_panics() {
        let a = Series::one(&["q"], 3);
        let b = Series::one(&["q"], 4);
        let _ = a.mul(&b);
    }

    #[test]
    #[should_panic(expected = "zero constant term")]
    fn exp_rejects_constant_term() {
        let _ = Series::one(&["q"], 3).exp();
    }

    #[test]
    #[should_panic(expected = "constant term 1")]
    fn log_rejects_bad_constant_term() {
        let _ = Series::zero(&["q"], 3).log();
    }

    // random small series over two variables with denominators in {1,2,3}
    fn arb_series(d: u32) -> impl Strategy<Value = Series> {
        proptest::collection::vec((0u32..=d, 0u32..=d, -4i64..=4, 1i64..=3), 0..6).prop_map(
            move |terms| {
                let mut s = Series::zero(&["x", "y"], d);
                for (i, j, n, den) in terms {
                    if i + j <= d && n != 0 {
                        let mut c = s.coeff(&[i, j]);
                        c += rat(n, den);
                        s.set_coeff(vec![i, j], c);
                    }
                }
                s
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_associativity(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn ring_distributivity(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn ring_commutativity(a in arb_series(6), b in arb_series(6)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn exp_log_mutually_inverse(a in arb_series(6)) {
            let mut a = a;
            a.set_coeff(vec![0, 0], int(0));
            let e = a.exp();
            prop_assert_eq!(e.log(), a.clone());
            // and against the naive Taylor forms
            prop_assert_eq!(&e, &a.exp_naive());
            let mut u = a;
            u.set_coeff(vec![0, 0], int(1));
            prop_assert_eq!(u.log(), u.log_naive());
            prop_assert_eq!(u.log().exp(), u);
        }

        #[test]
        fn inv_is_inverse(a in arb_series(6)) {
            let mut a = a;
            a.set_coeff(vec![0, 0], int(1));
            prop_assert_eq!(a.inv().mul(&a), Series::one(&["x", "y"], 6));
        }
    }
}
