// The 14-dimensional derivation algebra, signed-permutation automorphisms,
// and transporting dF along one of them.

use octomax::algebra::AlgebraKind;
use octomax::derivation::{
    derivation_basis, is_automorphism, signed_permutation_automorphisms, transport_maxwell, LinearMap7,
};
use octomax::symbolic::{apply_dirac, FieldOctonion};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in AlgebraKind::ALL {
        let basis = derivation_basis(&kind.table());
        let autos = signed_permutation_automorphisms(kind);
        println!("{kind}: {} derivations, {} signed-permutation automorphisms", basis.len(), autos.len());
    }

    let kind = AlgebraKind::SplitOctonion;
    let basis = derivation_basis(&kind.table());
    println!("first basis element:\n{:?}", basis[0]);

    let swap = LinearMap7::swap(1, 2);
    println!("e1<->e2 automorphism: {}", is_automorphism(kind, &swap).holds);

    let autos = signed_permutation_automorphisms(kind);
    let s = autos.last().ok_or("no automorphisms")?;
    let df = apply_dirac(kind, &FieldOctonion::standard(false, false));
    println!("transported dF:\n{}", transport_maxwell(kind, s, &df)?.render());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
