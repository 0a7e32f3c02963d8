// The table product and the closed vector-calculus form agree numerically
// on random polynomial fields.

use octomax::algebra::AlgebraKind;
use octomax::numeric::{cross_check, AnalyticField, SampleConfig};
use octomax::symbolic::FieldName;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pts = SampleConfig::new(3, 200).sample();
    for i in 0..5 {
        let field = AnalyticField::random_polynomial(&mut rng, &FieldName::ALL);
        for kind in AlgebraKind::ALL {
            let gap = cross_check(kind, &field, &pts)?;
            println!("field {i} {kind:>8}: max gap {gap:.2e}");
            if gap > 1e-12 {
                return Err(format!("routes disagree by {gap}").into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
