// Print both multiplication tables, their norm signatures, and audit them.
//
// ```text
// cargo run --example multiplication_table
// ```

use octomax::algebra::{diagonal_signs, signature, AlgebraKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in AlgebraKind::ALL {
        let table = kind.table();
        println!("{kind}:");
        println!("{}", table.render());
        println!("squares of e1..e7: {:?}", diagonal_signs(kind));
        println!("norm signature: {:?}", signature(kind));
        let audit = table.audit();
        if !audit.passed() {
            return Err(format!("{kind} table failed its audit: {audit:?}").into());
        }
        println!();
    }

    // flipping one product breaks anticommutativity, and the audit says where
    let broken = AlgebraKind::Octonion.table().with_flipped_sign(2, 5);
    println!("after flipping e2e5: {:?}", broken.audit().anticommutativity);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
