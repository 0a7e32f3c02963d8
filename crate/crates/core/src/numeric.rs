//! Floating-point evaluation of `∂F` on closed-form fields.
//!
//! Derivatives are analytic. A fourth-order central-difference mode is kept
//! for debugging only; it is never used by the checks themselves.

use std::sync::LazyLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, Octonion};
use crate::error::{Error, Result};
use crate::symbolic::{expected_decomposition, FieldName, MaxwellDecomposition, Var, DIRAC_TERMS};
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if [t, x, y, z].iter().all(|v| v.is_finite()) {
            Ok(Self { t, x, y, z })
        } else {
            Err(Error::InvalidArgument(format!("non-finite spacetime point ({t}, {x}, {y}, {z})")))
        }
    }

    pub fn coord(&self, var: Var) -> f64 {
        match var {
            Var::T => self.t,
            Var::X => self.x,
            Var::Y => self.y,
            Var::Z => self.z,
        }
    }

    fn shifted(&self, var: Var, h: f64) -> Self {
        let mut p = *self;
        match var {
            Var::T => p.t += h,
            Var::X => p.x += h,
            Var::Y => p.y += h,
            Var::Z => p.z += h,
        }
        p
    }
}

/// Exponents `(t, x, y, z)` of every monomial of total degree at most 3.
pub fn monomials() -> &'static [[u32; 4]] {
    static TABLE: LazyLock<Vec<[u32; 4]>> = LazyLock::new(build_monomials);
    &TABLE
}

fn build_monomials() -> Vec<[u32; 4]> {
    let mut out = Vec::with_capacity(35);
    for deg in 0..=3u32 {
        for a in (0..=deg).rev() {
            for b in (0..=deg - a).rev() {
                for c in (0..=deg - a - b).rev() {
                    out.push([a, b, c, deg - a - b - c]);
                }
            }
        }
    }
    out
}

const MONOMIALS: usize = 35;

/// A closed-form field configuration with exact first derivatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum AnalyticField {
    /// `E = eps cos(k·r - ω t)`, `B = (k̂ × eps) cos(k·r - ω t)`, `ω = |k|`.
    PlaneWave { k: [f64; 3], eps: [f64; 3], omega: f64, b_amp: [f64; 3] },
    /// One table of 35 monomial coefficients per [`FieldName`], in
    /// [`FieldName::ALL`] order; monomials in [`monomials`] order.
    Polynomial { coeffs: Vec<Vec<f64>> },
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Vacuum plane wave with wave vector `k` and polarization `eps`.
pub fn plane_wave_em(k: [f64; 3], eps: [f64; 3]) -> Result<AnalyticField> {
    if !k.iter().chain(eps.iter()).all(|v| v.is_finite()) {
        return Err(Error::PlaneWave("k and eps must be finite".into()));
    }
    let omega = norm(k);
    if omega == 0.0 {
        return Err(Error::PlaneWave("|k| must be positive".into()));
    }
    let amp = norm(eps);
    if amp == 0.0 {
        return Err(Error::PlaneWave("eps must be nonzero".into()));
    }
    if dot(eps, k).abs() > tolerances::TRANSVERSALITY * amp * omega {
        return Err(Error::PlaneWave(format!(
            "eps not transverse: eps·k = {} for k = {k:?}, eps = {eps:?}",
            dot(eps, k)
        )));
    }
    let k_hat = k.map(|v| v / omega);
    Ok(AnalyticField::PlaneWave { k, eps, omega, b_amp: cross(k_hat, eps) })
}

impl AnalyticField {
    /// The field that vanishes everywhere.
    pub fn zero() -> Self {
        AnalyticField::Polynomial { coeffs: vec![vec![0.0; MONOMIALS]; FieldName::ALL.len()] }
    }

    /// Random polynomial field with coefficients uniform in `[-1, 1]`.
    /// `fields` selects which components are nonzero.
    pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, fields: &[FieldName]) -> Self {
        let coeffs = FieldName::ALL
            .iter()
            .map(|f| {
                if fields.contains(f) {
                    (0..MONOMIALS).map(|_| rng.gen_range(-1.0..=1.0)).collect()
                } else {
                    vec![0.0; MONOMIALS]
                }
            })
            .collect();
        AnalyticField::Polynomial { coeffs }
    }

    fn field_slot(field: FieldName) -> usize {
        field as usize
    }

    pub fn value(&self, field: FieldName, p: &SpacetimePoint) -> f64 {
        match self {
            AnalyticField::PlaneWave { k, eps, omega, b_amp } => {
                let phase = dot(*k, [p.x, p.y, p.z]) - omega * p.t;
                match field {
                    FieldName::Ex => eps[0] * phase.cos(),
                    FieldName::Ey => eps[1] * phase.cos(),
                    FieldName::Ez => eps[2] * phase.cos(),
                    FieldName::Bx => b_amp[0] * phase.cos(),
                    FieldName::By => b_amp[1] * phase.cos(),
                    FieldName::Bz => b_amp[2] * phase.cos(),
                    FieldName::S | FieldName::F0 => 0.0,
                }
            }
            AnalyticField::Polynomial { coeffs } => {
                let row = &coeffs[Self::field_slot(field)];
                let c = [p.t, p.x, p.y, p.z];
                monomials()
                    .iter()
                    .zip(row)
                    .map(|(e, a)| a * (0..4).map(|i| c[i].powi(e[i] as i32)).product::<f64>())
                    .sum()
            }
        }
    }

    /// Exact `∂_var field` at `p`.
    pub fn derivative(&self, field: FieldName, var: Var, p: &SpacetimePoint) -> f64 {
        match self {
            AnalyticField::PlaneWave { k, eps, omega, b_amp } => {
                let phase = dot(*k, [p.x, p.y, p.z]) - omega * p.t;
                // d/dvar cos(phase) = -sin(phase) * d(phase)/dvar
                let dphase = match var {
                    Var::T => -omega,
                    Var::X => k[0],
                    Var::Y => k[1],
                    Var::Z => k[2],
                };
                let amp = match field {
                    FieldName::Ex => eps[0],
                    FieldName::Ey => eps[1],
                    FieldName::Ez => eps[2],
                    FieldName::Bx => b_amp[0],
                    FieldName::By => b_amp[1],
                    FieldName::Bz => b_amp[2],
                    FieldName::S | FieldName::F0 => 0.0,
                };
                -amp * phase.sin() * dphase
            }
            AnalyticField::Polynomial { coeffs } => {
                let row = &coeffs[Self::field_slot(field)];
                let c = [p.t, p.x, p.y, p.z];
                let v = var.spacetime_index();
                monomials()
                    .iter()
                    .zip(row)
                    .filter(|(e, _)| e[v] > 0)
                    .map(|(e, a)| {
                        let mut term = a * e[v] as f64;
                        for i in 0..4 {
                            let pow = if i == v { e[i] - 1 } else { e[i] };
                            term *= c[i].powi(pow as i32);
                        }
                        term
                    })
                    .sum()
            }
        }
    }

    /// Fourth-order central difference `(-f(+2h) + 8f(+h) - 8f(-h) + f(-2h)) / 12h`.
    pub fn central_difference(&self, field: FieldName, var: Var, p: &SpacetimePoint, h: f64) -> f64 {
        let f = |s: f64| self.value(field, &p.shifted(var, s * h));
        (-f(2.0) + 8.0 * f(1.0) - 8.0 * f(-1.0) + f(-2.0)) / (12.0 * h)
    }

    /// All first derivatives at `p`, indexed `[field slot][var.spacetime_index()]`
    /// with field slots in [`FieldName::ALL`] order.
    pub fn jet(&self, p: &SpacetimePoint, mode: DerivativeMode) -> Jet {
        let mut out = [[0.0; 4]; 8];
        match (self, mode) {
            (AnalyticField::Polynomial { coeffs }, DerivativeMode::Analytic) => {
                let c = [p.t, p.x, p.y, p.z];
                let pow: [[f64; 4]; 4] = c.map(|v| [1.0, v, v * v, v * v * v]);
                for (row, slot) in coeffs.iter().zip(out.iter_mut()) {
                    for (e, a) in monomials().iter().zip(row) {
                        if *a == 0.0 {
                            continue;
                        }
                        for (v, d) in slot.iter_mut().enumerate() {
                            if e[v] == 0 {
                                continue;
                            }
                            let mut term = a * e[v] as f64;
                            for i in 0..4 {
                                term *= pow[i][if i == v { e[i] as usize - 1 } else { e[i] as usize }];
                            }
                            *d += term;
                        }
                    }
                }
            }
            _ => {
                for (fi, field) in FieldName::ALL.iter().enumerate() {
                    for var in Var::ALL {
                        out[fi][var.spacetime_index()] = match mode {
                            DerivativeMode::Analytic => self.derivative(*field, var, p),
                            DerivativeMode::CentralDifference { step } => {
                                self.central_difference(*field, var, p, step)
                            }
                        };
                    }
                }
            }
        }
        Jet(out)
    }
}

/// First derivatives of every field at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet(pub [[f64; 4]; 8]);

impl Jet {
    pub fn get(&self, field: FieldName, var: Var) -> f64 {
        self.0[AnalyticField::field_slot(field)][var.spacetime_index()]
    }

    /// `∂_var F` as a numeric octonion.
    pub fn octonion(&self, var: Var) -> Octonion<f64> {
        let mut o = Octonion::<f64>::zero();
        for field in FieldName::ALL {
            o.c[field.basis_index()] = self.get(field, var);
        }
        o
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DerivativeMode {
    Analytic,
    /// Debug only.
    CentralDifference { step: f64 },
}

/// `∂F` at one point, regrouped.
pub fn dirac_at(
    kind: AlgebraKind,
    field: &AnalyticField,
    p: &SpacetimePoint,
    mode: DerivativeMode,
) -> MaxwellDecomposition<f64> {
    dirac_from_jet(kind, &field.jet(p, mode))
}

/// `Σ_μ e_μ ∂_μ F` from precomputed derivatives.
pub fn dirac_from_jet(kind: AlgebraKind, jet: &Jet) -> MaxwellDecomposition<f64> {
    let table = kind.table();
    let mut out = Octonion::<f64>::zero();
    for (idx, var) in DIRAC_TERMS {
        out += table.multiply(&Octonion::basis(idx), &jet.octonion(var));
    }
    MaxwellDecomposition::from_octonion(&out)
}

/// Largest absolute value per decomposition group.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GroupResiduals {
    pub scalar: f64,
    pub q_vec: f64,
    pub e7q_vec: f64,
    pub e7_part: f64,
}

impl GroupResiduals {
    pub fn of(d: &MaxwellDecomposition<f64>) -> Self {
        let vmax = |v: &[f64; 3]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        Self {
            scalar: d.scalar_part.abs(),
            q_vec: vmax(&d.q_vec),
            e7q_vec: vmax(&d.e7q_vec),
            e7_part: d.e7_part.abs(),
        }
    }

    pub fn max(self, o: Self) -> Self {
        Self {
            scalar: self.scalar.max(o.scalar),
            q_vec: self.q_vec.max(o.q_vec),
            e7q_vec: self.e7q_vec.max(o.e7q_vec),
            e7_part: self.e7_part.max(o.e7_part),
        }
    }

    pub fn overall(&self) -> f64 {
        self.scalar.max(self.q_vec).max(self.e7q_vec).max(self.e7_part)
    }

    pub fn named(&self) -> [(&'static str, f64); 4] {
        [
            ("scalar", self.scalar),
            ("q_vec", self.q_vec),
            ("e7q_vec", self.e7q_vec),
            ("e7_part", self.e7_part),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_abs: GroupResiduals,
    pub points_evaluated: usize,
    pub seed: Option<u64>,
    /// Only in finite-difference mode: max `|D(h) - D(h/2)|` over all
    /// derivative slots, an estimate of the truncation error.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub richardson_estimate: Option<f64>,
}

/// Seeded uniform sampling of `[lo, hi]^4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub points: usize,
    pub bounds: (f64, f64),
}

impl SampleConfig {
    pub fn new(seed: u64, points: usize) -> Self {
        Self { seed, points, bounds: tolerances::DEFAULT_BOUNDS }
    }

    pub fn sample(&self) -> Vec<SpacetimePoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let (lo, hi) = self.bounds;
        (0..self.points)
            .map(|_| SpacetimePoint {
                t: rng.gen_range(lo..=hi),
                x: rng.gen_range(lo..=hi),
                y: rng.gen_range(lo..=hi),
                z: rng.gen_range(lo..=hi),
            })
            .collect()
    }
}

/// Per-group max residual of `∂F` over `pts`.
pub fn evaluate_df(kind: AlgebraKind, field: &AnalyticField, pts: &[SpacetimePoint]) -> Result<ResidualReport> {
    evaluate_df_with(kind, field, pts, DerivativeMode::Analytic)
}

pub fn evaluate_df_with(
    kind: AlgebraKind,
    field: &AnalyticField,
    pts: &[SpacetimePoint],
    mode: DerivativeMode,
) -> Result<ResidualReport> {
    if pts.is_empty() {
        return Err(Error::InvalidArgument("at least one point is required".into()));
    }
    let max_abs = pts
        .iter()
        .map(|p| GroupResiduals::of(&dirac_at(kind, field, p, mode)))
        .fold(GroupResiduals::default(), GroupResiduals::max);
    let richardson_estimate = match mode {
        DerivativeMode::Analytic => None,
        DerivativeMode::CentralDifference { step } => Some(richardson(field, pts, step)),
    };
    Ok(ResidualReport { max_abs, points_evaluated: pts.len(), seed: None, richardson_estimate })
}

fn richardson(field: &AnalyticField, pts: &[SpacetimePoint], step: f64) -> f64 {
    let mut worst = 0.0f64;
    for p in pts {
        for f in FieldName::ALL {
            for v in Var::ALL {
                let coarse = field.central_difference(f, v, p, step);
                let fine = field.central_difference(f, v, p, step / 2.0);
                worst = worst.max((coarse - fine).abs());
            }
        }
    }
    worst
}

/// [`evaluate_df`] on seeded sample points; the report records the seed.
pub fn evaluate_df_sampled(kind: AlgebraKind, field: &AnalyticField, cfg: &SampleConfig) -> Result<ResidualReport> {
    let mut report = evaluate_df(kind, field, &cfg.sample())?;
    report.seed = Some(cfg.seed);
    Ok(report)
}

/// Max componentwise gap between the algebra-product route and the
/// vector-calculus route (symbolic right-hand sides with every atom replaced
/// by its analytic value).
pub fn cross_check(kind: AlgebraKind, field: &AnalyticField, pts: &[SpacetimePoint]) -> Result<f64> {
    if pts.is_empty() {
        return Err(Error::InvalidArgument("at least one point is required".into()));
    }
    let expected = expected_decomposition(kind, true, true);
    let mut worst = 0.0f64;
    for p in pts {
        let jet = field.jet(p, DerivativeMode::Analytic);
        let product = dirac_from_jet(kind, &jet);
        let calculus = expected.map(|s| s.evaluate(|a| jet.get(a.field, a.var)));
        for ((_, a), (_, b)) in product.components().iter().zip(calculus.components().iter()) {
            worst = worst.max((*a - *b).abs());
        }
    }
    Ok(worst)
}

/// `max |∂t B|` (componentwise) at `p`.
pub fn dt_b_magnitude(field: &AnalyticField, p: &SpacetimePoint) -> f64 {
    FieldName::B
        .iter()
        .map(|&f| field.derivative(f, Var::T, p).abs())
        .fold(0.0, f64::max)
}
