//! ξ-deformed orthogonal bases: Gram-Schmidt P_λ for the Hall-Littlewood,
//! Jack, Macdonald and (q,κ,α) families, plus the direct symmetrization
//! formulas.
//!
//! Run with: cargo run --example deformed_bases

use symq::deformed::direct::{hall_littlewood_direct, q_function_direct};
use symq::deformed::{b_norm, p_polynomial, xi_value, DeformationParams};
use symq::partition::Partition;
use symq::rat::{format_rat, int, rat};

fn main() {
    let families = [
        DeformationParams::HallLittlewood { t: rat(1, 2) },
        DeformationParams::Jack { alpha: int(2) },
        DeformationParams::Macdonald { q: rat(1, 3), t: rat(1, 2) },
        DeformationParams::Kappa { q: rat(1, 2), kappa: 4, alpha: int(1) },
    ];
    for params in &families {
        println!("{}  (ξ_1 = {})", params.label(), format_rat(&xi_value(1, params).unwrap()));
        for lam in Partition::all(3) {
            let p = p_polynomial(&lam, params).unwrap();
            let b = b_norm(&lam, params).unwrap();
            println!("  P_{lam} = {p}    b = {}", format_rat(&b));
        }
        println!();
    }

    // direct symmetrization at three variables
    let t = rat(1, 2);
    let q21 = hall_littlewood_direct(&Partition::new(vec![2, 1]), 3, &t).unwrap();
    println!("Hall-Littlewood Q(2,1)(x1,x2,x3; 1/2) = {q21}");

    // classical Schur Q-function (strict partitions; equals HL at t = -1)
    let q = q_function_direct(&Partition::new(vec![2, 1]), 3).unwrap();
    println!("Schur Q(2,1)(x1,x2,x3) = {q}");
    let hl = hall_littlewood_direct(&Partition::new(vec![2, 1]), 3, &int(-1)).unwrap();
    println!("matches Hall-Littlewood at t = -1: {}", q == hl);
}
