// Symbolic expansion of dF, regrouped into the four component groups and
// compared against the vector-calculus form.

use octomax::algebra::AlgebraKind;
use octomax::symbolic::{apply_dirac, verify_expansion, FieldOctonion};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in AlgebraKind::ALL {
        let df = apply_dirac(kind, &FieldOctonion::standard(false, false));
        println!("{kind}:\n{}", df.render());
    }

    // with sources: S in the e7 slot, F0 in the real slot
    let verdict = verify_expansion(AlgebraKind::SplitOctonion, true, true);
    println!("split with S and F0:\n{}", verdict.computed.render());
    if !verdict.matched() {
        return Err(format!("expansion mismatch: {:?}", verdict.mismatches).into());
    }

    let f = FieldOctonion::standard(false, false);
    let diff = apply_dirac(AlgebraKind::SplitOctonion, &f) - apply_dirac(AlgebraKind::Octonion, &f);
    println!("split - octonion:\n{}", diff.render());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
