//! Exact identity suite over random integer-coefficient elements.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{random_integer_octonion, Integer, Octonion, StructureTable};
use crate::error::{Error, Result};

/// Outcome of one identity over all trials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub passed: bool,
    pub trials: usize,
    pub failures: usize,
    /// First counterexample, rendered.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub trials: usize,
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

pub const ANTICOMMUTATIVITY: &str = "anticommutativity";
pub const LEFT_ALTERNATIVITY: &str = "left_alternativity";
pub const RIGHT_ALTERNATIVITY: &str = "right_alternativity";
pub const MOUFANG: &str = "moufang";
pub const NORM_MULTIPLICATIVITY: &str = "norm_multiplicativity";
pub const ASSOCIATIVITY: &str = "associativity";

struct Tally {
    name: &'static str,
    trials: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, trials: 0, failures: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn finish(self) -> IdentityResult {
        IdentityResult {
            name: self.name.to_string(),
            passed: self.failures == 0,
            trials: self.trials,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

/// Runs the composition-algebra identities exactly (integer inputs, no rounding).
///
/// Anticommutativity is checked on all 42 ordered pairs of distinct
/// imaginary units; the remaining identities on `trials` seeded random
/// triples with coefficients in `[-9, 9]`.
pub fn check_identities(table: &StructureTable, trials: usize, seed: u64) -> Result<IdentityReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut anti = Tally::new(ANTICOMMUTATIVITY);
    for i in 1..=7 {
        for j in 1..=7 {
            if i == j {
                continue;
            }
            let (ei, ej) = (Octonion::<Integer>::basis(i), Octonion::<Integer>::basis(j));
            let ij = table.multiply(&ei, &ej);
            let ji = table.multiply(&ej, &ei);
            anti.record(ij == -ji.clone(), || format!("e{i}e{j} = {ij}, e{j}e{i} = {ji}"));
        }
    }

    let mut left = Tally::new(LEFT_ALTERNATIVITY);
    let mut right = Tally::new(RIGHT_ALTERNATIVITY);
    let mut moufang = Tally::new(MOUFANG);
    let mut norm = Tally::new(NORM_MULTIPLICATIVITY);
    for _ in 0..trials {
        let x = random_integer_octonion(&mut rng);
        let y = random_integer_octonion(&mut rng);
        let z = random_integer_octonion(&mut rng);
        let xx = table.multiply(&x, &x);
        let xy = table.multiply(&x, &y);
        let yx = table.multiply(&y, &x);

        left.record(table.multiply(&x, &xy) == table.multiply(&xx, &y), || {
            format!("x = {x}, y = {y}")
        });
        right.record(table.multiply(&yx, &x) == table.multiply(&y, &xx), || {
            format!("x = {x}, y = {y}")
        });

        let lhs = table.multiply(&xy, &table.multiply(&z, &x));
        let rhs = table.multiply(&table.multiply(&x, &table.multiply(&y, &z)), &x);
        moufang.record(lhs == rhs, || format!("x = {x}, y = {y}, z = {z}"));

        let nx = table.try_norm_form(&x);
        let ny = table.try_norm_form(&y);
        let nxy = table.try_norm_form(&xy);
        let ok = match (&nx, &ny, &nxy) {
            (Some(a), Some(b), Some(c)) => *c == a * b,
            _ => false,
        };
        norm.record(ok, || {
            let show = |n: &Option<Integer>| n.as_ref().map_or("not real".to_string(), |v| v.to_string());
            format!("x = {x}, y = {y}: N(x) = {}, N(y) = {}, N(xy) = {}", show(&nx), show(&ny), show(&nxy))
        });
    }

    Ok(IdentityReport {
        seed,
        trials,
        results: vec![anti.finish(), left.finish(), right.finish(), moufang.finish(), norm.finish()],
    })
}

/// Full associativity `(xy)z = x(yz)`, expected to fail in both algebras.
///
/// The basis triple `(e1, e2, e3)` is tried first so a failure always
/// carries that witness; `trials` random triples follow.
pub fn check_associativity(table: &StructureTable, trials: usize, seed: u64) -> Result<IdentityResult> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new(ASSOCIATIVITY);
    let (e1, e2, e3) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(3));
    let a = table.associator::<Integer>(&e1, &e2, &e3);
    tally.record(a.is_zero(), || format!("[e1, e2, e3] = {a}"));
    for _ in 0..trials {
        let x = random_integer_octonion(&mut rng);
        let y = random_integer_octonion(&mut rng);
        let z = random_integer_octonion(&mut rng);
        let a = table.associator(&x, &y, &z);
        tally.record(a.is_zero(), || format!("x = {x}, y = {y}, z = {z}: [x, y, z] = {a}"));
    }
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::AlgebraKind;

    #[test]
    fn both_algebras_pass() {
        for kind in AlgebraKind::ALL {
            let report = check_identities(&kind.table(), 200, 7).unwrap();
            assert!(report.all_passed(), "{kind}: {report:?}");
            assert_eq!(report.get(ANTICOMMUTATIVITY).unwrap().trials, 42);
        }
    }

    #[test]
    fn associativity_fails_with_basis_witness() {
        for kind in AlgebraKind::ALL {
            let r = check_associativity(&kind.table(), 20, 1).unwrap();
            assert!(!r.passed);
            assert!(r.witness.unwrap().starts_with("[e1, e2, e3]"));
        }
    }

    #[test]
    fn zero_trials_rejected() {
        let t = AlgebraKind::Octonion.table();
        assert!(matches!(check_identities(&t, 0, 1), Err(Error::InvalidArgument(_))));
        assert!(check_associativity(&t, 0, 1).is_err());
    }

    #[test]
    fn flipped_sign_breaks_norm() {
        let t = AlgebraKind::SplitOctonion.table().with_flipped_sign(1, 2);
        let report = check_identities(&t, 50, 3).unwrap();
        assert!(!report.get(NORM_MULTIPLICATIVITY).unwrap().passed);
        assert!(!report.get(ANTICOMMUTATIVITY).unwrap().passed);
    }

    #[test]
    fn deterministic() {
        let t = AlgebraKind::SplitOctonion.table().with_flipped_sign(3, 5);
        assert_eq!(check_identities(&t, 30, 9).unwrap(), check_identities(&t, 30, 9).unwrap());
    }
}
