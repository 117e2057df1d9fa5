//! The classical ring Λ: basis conversions, characters, Jacobi-Trudi
//! determinants, the involution ω, and skew functions.
//!
//! Run with: cargo run --example symmetric_functions

use symq::partition::Partition;
use symq::symfunc::{character, jacobi_trudi, skew_schur, SymFunc};
use symq::Basis;

fn main() {
    let lam = Partition::new(vec![2, 1]);

    let s = SymFunc::schur(lam.clone());
    println!("s(2,1) in p-basis: {}", s.convert(Basis::P));
    println!("s(2,1) in m-basis: {}", s.convert(Basis::M));
    println!("s(2,1) in h-basis: {}", s.convert(Basis::H));
    println!("Jacobi-Trudi:      {}", jacobi_trudi(&lam));

    println!("\nω(h_3) = {}", SymFunc::h_n(3).omega().convert(Basis::E));
    println!("ω(s(2,1)) = {} (self-conjugate)", s.omega());

    println!("\ncharacter table of S_4 (rows λ, columns ρ, revlex):");
    for l in Partition::all(4) {
        let row: Vec<String> = Partition::all(4)
            .iter()
            .map(|r| format!("{:>3}", character(&l, r).unwrap()))
            .collect();
        println!("  {l}: {}", row.join(" "));
    }

    println!("\ns(3,1)/(1) = {}", skew_schur(&Partition::new(vec![3, 1]), &Partition::new(vec![1])));

    // scalar products: ⟨p_ρ, p_ρ⟩ = z_ρ
    let p22 = SymFunc::basis_element(Basis::P, Partition::new(vec![2, 2]));
    println!("\n⟨p(2,2), p(2,2)⟩ = {}", p22.scalar_product(&p22));

    // replicated argument: h_2 on two copies of one letter
    let r = SymFunc::h_n(2).replicate(&symq::rat::int(2));
    println!("h_2(X^(2)) in p-basis: {}", r.convert(Basis::P));
}
