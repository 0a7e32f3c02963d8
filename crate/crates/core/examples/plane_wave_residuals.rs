// Evaluate dF on a transverse plane wave at random spacetime points.
// The split algebra annihilates it; the octonion one leaves 2|d_t B|.

use octomax::algebra::AlgebraKind;
use octomax::numeric::{evaluate_df_sampled, evaluate_df_with, plane_wave_em, DerivativeMode, SampleConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let wave = plane_wave_em([0.0, 0.6, 0.8], [1.0, 0.0, 0.0])?;
    let cfg = SampleConfig::new(7, 500);
    for kind in AlgebraKind::ALL {
        let r = evaluate_df_sampled(kind, &wave, &cfg)?;
        println!("{kind:>8}: {:?}", r.max_abs);
    }

    // finite differences, for debugging a field without analytic derivatives
    let fd = DerivativeMode::CentralDifference { step: 1e-3 };
    let r = evaluate_df_with(AlgebraKind::SplitOctonion, &wave, &cfg.sample(), fd)?;
    println!("split, central differences: max {:.2e}, richardson {:.2e}", r.max_abs.overall(), r.richardson_estimate.unwrap_or(0.0));

    // a longitudinal polarization is rejected up front
    match plane_wave_em([0.0, 0.0, 1.0], [0.0, 0.0, 1.0]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("longitudinal wave accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
