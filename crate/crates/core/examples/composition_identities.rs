// Exact identity checks over random integer octonions, the associativity
// witness, and a null zero-divisor pair in the split algebra.

use octomax::algebra::{find_zero_divisor_pair, AlgebraKind};
use octomax::identities::{check_associativity, check_identities};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in AlgebraKind::ALL {
        let table = kind.table();
        let report = check_identities(&table, 500, 42)?;
        for r in &report.results {
            println!("{kind:>8} {:<22} {}", r.name, if r.passed { "ok" } else { "FAILED" });
        }
        let assoc = check_associativity(&table, 10, 42)?;
        println!("{kind:>8} associator witness: {}", assoc.witness.unwrap_or_default());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    match find_zero_divisor_pair(AlgebraKind::SplitOctonion, &mut rng, 10_000) {
        Some((x, y)) => println!("split zero divisors: x = {x}, y = {y}"),
        None => return Err("no zero divisors found in the split algebra".into()),
    }
    let none = find_zero_divisor_pair(AlgebraKind::Octonion, &mut rng, 1000);
    println!("octonion zero divisors found: {}", none.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
