//! Partitions, multipartite indices, and their statistics.
//!
//! Run with: cargo run --example partitions

use symq::partition::{enumerate_multipartitions, MultiIndex, Partition};

fn main() {
    println!("partitions of 5, reverse-lexicographic:");
    for p in Partition::all(5) {
        println!(
            "  {p}   weight {}  length {}  z = {}  conjugate {}",
            p.weight(),
            p.len(),
            p.z_lambda(),
            p.conjugate()
        );
    }

    let a = Partition::new(vec![4, 1, 1]);
    let b = Partition::new(vec![3, 3]);
    println!("\ndominance of {a} vs {b}: {:?} (incomparable)", a.dominance_cmp(&b));

    let k = MultiIndex::new(vec![2, 2]);
    let parts = enumerate_multipartitions(&k).unwrap();
    println!("\nmultipartitions of {k:?} ({} total):", parts.len());
    for ms in parts {
        let body: Vec<String> = ms.iter().map(|m| format!("{m:?}")).collect();
        println!("  {{{}}}", body.join(", "));
    }
}
