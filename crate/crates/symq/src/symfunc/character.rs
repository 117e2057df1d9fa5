//! Irreducible characters of the symmetric group via the
//! Murnaghan-Nakayama border-strip recursion.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::partition::Partition;

static CACHE: LazyLock<Mutex<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// χ^λ_ρ — the character of the irreducible representation λ of S_n on the
/// conjugacy class of cycle type ρ. Errors when |λ| != |ρ|.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::Usage(format!(
            "character weight mismatch: |{lambda}| = {} vs |{rho}| = {}",
            lambda.weight(),
            rho.weight()
        )));
    }
    Ok(mn(lambda, rho))
}

fn mn(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = CACHE.lock().unwrap().get(&key) {
        return v;
    }
    let r = rho.part(0);
    let rest = Partition::new(rho.parts()[1..].to_vec());

    // first-column beta numbers: β_i = λ_i + (L - 1 - i), strictly decreasing
    let l = lambda.len();
    let betas: Vec<u32> = (0..l)
        .map(|i| lambda.part(i) + (l - 1 - i) as u32)
        .collect();

    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if betas.contains(&nb) {
            continue; // occupied: no border strip ends here
        }
        // strip height = number of betas strictly between nb and b
        let height = betas.iter().filter(|&&x| nb < x && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };

        let mut new_betas = betas.clone();
        new_betas[i] = nb;
        new_betas.sort_unstable_by(|a, c| c.cmp(a));
        let mut parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &bj)| bj - (l - 1 - j) as u32)
            .collect();
        parts.retain(|&p| p > 0);
        total += sign * mn(&Partition::new(parts), &rest);
    }

    CACHE.lock().unwrap().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn trivial_representation() {
        for n in 1..=6u32 {
            for rho in Partition::all(n) {
                assert_eq!(character(&p(&[n]), &rho).unwrap(), 1);
            }
        }
    }

    #[test]
    fn sign_character() {
        // χ^{(1^n)}_ρ = sign of the class
        for n in 1..=6u32 {
            let ones = Partition::new(vec![1; n as usize]);
            for rho in Partition::all(n) {
                assert_eq!(character(&ones, &rho).unwrap(), rho.permutation_sign());
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert!(character(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn s4_table_frozen() {
        // full S_4 character table, rows λ in revlex order, columns ρ in
        // revlex order (4),(3,1),(2,2),(2,1,1),(1,1,1,1); frozen from the
        // hook-length dimensions and the orthogonality solve.
        let rows: Vec<Vec<i64>> = Partition::all(4)
            .iter()
            .map(|l| {
                Partition::all(4)
                    .iter()
                    .map(|r| character(l, r).unwrap())
                    .collect()
            })
            .collect();
        let expect = vec![
            vec![1, 1, 1, 1, 1],
            vec![-1, 0, -1, 1, 3],
            vec![0, -1, 2, 0, 2],
            vec![1, 0, -1, -1, 3],
            vec![-1, 1, 1, -1, 1],
        ];
        assert_eq!(rows, expect);
    }

    #[test]
    fn orthogonality_rows() {
        // sum_ρ z_ρ^{-1} χ^λ_ρ χ^μ_ρ = δ_{λμ}
        for n in 1..=6u32 {
            let parts = Partition::all(n);
            for a in &parts {
                for b in &parts {
                    let s: Rat = parts
                        .iter()
                        .map(|rho| {
                            let x = character(a, rho).unwrap() * character(b, rho).unwrap();
                            Rat::from_integer(x.into()) / rho.z_lambda()
                        })
                        .sum();
                    let expect = if a == b { Rat::from_integer(1.into()) } else { Rat::zero() };
                    assert_eq!(s, expect, "rows {a} {b}");
                }
            }
        }
    }
}
