//! Derivations and automorphisms of the two algebras.
//!
//! Maps act on the imaginary span `e1..e7` and fix the unit. A derivation
//! `D` satisfies `D(xy) = D(x)y + xD(y)`; an automorphism `s` satisfies
//! `s(x)s(y) = s(xy)` and is invertible. The derivations of either table
//! form a 14-dimensional Lie algebra.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, Octonion, Rational, StructureTable};
use crate::error::{Error, Result};
use crate::linalg;
use crate::symbolic::{MaxwellDecomposition, SymbolicScalar};

const N: usize = 7;
const UNKNOWNS: usize = N * N;

/// A 7×7 rational matrix on the imaginary span, extended by `1 ↦ 1`.
///
/// Column `j` holds the image of `e_{j+1}`: `s(e_{j+1}) = Σ_i m[i][j] e_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap7 {
    pub m: [[Rational; N]; N],
}

impl LinearMap7 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self { m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Rational::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// Exchanges `e_a` and `e_b` (1-based), fixing the other units.
    pub fn swap(a: usize, b: usize) -> Self {
        let mut perm: [usize; N] = std::array::from_fn(|i| i);
        perm.swap(a - 1, b - 1);
        Self::from_fn(|i, j| if perm[j] == i { Rational::one() } else { Rational::zero() })
    }

    /// `e_{j+1} ↦ signs[j] · e_{images[j]}` with 1-based `images`.
    pub fn signed_permutation(images: [(i8, usize); N]) -> Self {
        Self::from_fn(|i, j| {
            let (s, k) = images[j];
            if k - 1 == i {
                Rational::from_integer(s.into())
            } else {
                Rational::zero()
            }
        })
    }

    /// Row-major 49-vector (`m[i][j]` at `7i + j`).
    pub fn from_vector(v: &[Rational]) -> Self {
        assert_eq!(v.len(), UNKNOWNS);
        Self::from_fn(|i, j| v[N * i + j].clone())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| &self.m[i][k] * &other.m[k][j]).sum())
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = self.m.iter().map(|r| r.to_vec()).collect();
        linalg::rank(&rows, N)
    }

    /// Image of an octonion with arbitrary coefficients; the unit slot is
    /// either kept (`fix_unit = true`, automorphisms) or dropped (derivations).
    fn act<T, F>(&self, x: &Octonion<T>, fix_unit: bool, scale: F) -> Octonion<T>
    where
        T: Clone + Zero,
        F: Fn(&Rational, &T) -> T,
    {
        let mut out = Octonion::<T>::zero();
        if fix_unit {
            out.c[0] = x.c[0].clone();
        }
        for i in 0..N {
            let mut acc = T::zero();
            for j in 0..N {
                if !self.m[i][j].is_zero() {
                    acc = acc + scale(&self.m[i][j], &x.c[j + 1]);
                }
            }
            out.c[i + 1] = acc;
        }
        out
    }

    /// `s(x)` with `s(1) = 1`.
    pub fn apply(&self, x: &Octonion<Rational>) -> Octonion<Rational> {
        self.act(x, true, |a, b| a * b)
    }

    /// `D(x)` with `D(1) = 0`.
    pub fn apply_derivation(&self, x: &Octonion<Rational>) -> Octonion<Rational> {
        self.act(x, false, |a, b| a * b)
    }

    /// `s(x)` for a symbolic octonion, `s(1) = 1`.
    pub fn apply_symbolic(&self, x: &Octonion<SymbolicScalar>) -> Octonion<SymbolicScalar> {
        self.act(x, true, |a, b| b.scale(a))
    }

    /// Entries as strings (`"p/q"` or integers), row-major.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.m.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
    }
}

impl fmt::Debug for LinearMap7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Result of a predicate check with the first few violations rendered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub failures: Vec<String>,
}

impl Verdict {
    fn from_failures(failures: Vec<String>) -> Self {
        Self { holds: failures.is_empty(), failures }
    }
}

/// The Leibniz conditions `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)`,
/// `1 <= i <= j <= 7`, as linear equations in the 49 entries of `D`.
#[derive(Debug, Clone)]
pub struct DerivationSystem {
    /// Nonzero equation rows, each of length 49 (row-major unknowns).
    pub rows: Vec<Vec<Rational>>,
}

impl DerivationSystem {
    pub const UNKNOWNS: usize = UNKNOWNS;

    pub fn assemble(table: &StructureTable) -> Self {
        // D(e_a) = Σ_r u[r][a-1] e_{r+1}; unknown u[r][c] sits at 7r + c.
        let var = |r: usize, c: usize| N * r + c;
        let mut rows = Vec::new();
        for i in 1..=N {
            for j in i..=N {
                let mut eqs = vec![vec![0i64; UNKNOWNS]; 8];
                // D(e_i e_j)
                let (s, k) = table.basis_product(i, j);
                if k != 0 {
                    for r in 0..N {
                        eqs[r + 1][var(r, k - 1)] += s as i64;
                    }
                }
                // - D(e_i) e_j
                for r in 0..N {
                    let (s, k) = table.basis_product(r + 1, j);
                    eqs[k][var(r, i - 1)] -= s as i64;
                }
                // - e_i D(e_j)
                for r in 0..N {
                    let (s, k) = table.basis_product(i, r + 1);
                    eqs[k][var(r, j - 1)] -= s as i64;
                }
                rows.extend(
                    eqs.into_iter()
                        .filter(|e| e.iter().any(|&v| v != 0))
                        .map(|e| e.into_iter().map(|v| Rational::from_integer(v.into())).collect()),
                );
            }
        }
        Self { rows }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows, UNKNOWNS)
    }

    pub fn null_space(&self) -> Vec<LinearMap7> {
        linalg::null_space(&self.rows, UNKNOWNS)
            .iter()
            .map(|v| LinearMap7::from_vector(v))
            .collect()
    }
}

/// Exact rational basis of the derivation algebra.
pub fn derivation_basis(table: &StructureTable) -> Vec<LinearMap7> {
    DerivationSystem::assemble(table).null_space()
}

pub fn derivation_dimension(kind: AlgebraKind) -> usize {
    UNKNOWNS - DerivationSystem::assemble(&kind.table()).rank()
}

fn basis(i: usize) -> Octonion<Rational> {
    Octonion::basis(i)
}

/// Checks the Leibniz rule on every ordered pair of imaginary units.
pub fn is_derivation(kind: AlgebraKind, d: &LinearMap7) -> Verdict {
    let table = kind.table();
    let mut failures = Vec::new();
    for i in 1..=N {
        for j in 1..=N {
            let (ei, ej) = (basis(i), basis(j));
            let lhs = d.apply_derivation(&table.multiply(&ei, &ej));
            let rhs = table.multiply(&d.apply_derivation(&ei), &ej) + table.multiply(&ei, &d.apply_derivation(&ej));
            if lhs != rhs {
                failures.push(format!("D(e{i}e{j}) = {lhs} but D(e{i})e{j} + e{i}D(e{j}) = {rhs}"));
            }
        }
    }
    Verdict::from_failures(failures)
}

/// Invertibility plus `s(e_i)s(e_j) = s(e_i e_j)` on all ordered pairs.
pub fn is_automorphism(kind: AlgebraKind, s: &LinearMap7) -> Verdict {
    is_automorphism_of(&kind.table(), s)
}

pub fn is_automorphism_of(table: &StructureTable, s: &LinearMap7) -> Verdict {
    let mut failures = Vec::new();
    let rank = s.rank();
    if rank != N {
        failures.push(format!("not invertible: rank {rank}"));
    }
    for i in 1..=N {
        for j in 1..=N {
            let lhs = table.multiply(&s.apply(&basis(i)), &s.apply(&basis(j)));
            let rhs = s.apply(&table.multiply(&basis(i), &basis(j)));
            if lhs != rhs {
                failures.push(format!("s(e{i})s(e{j}) = {lhs} but s(e{i}e{j}) = {rhs}"));
            }
        }
    }
    Verdict::from_failures(failures)
}

/// Applies an automorphism to the octonion form of a decomposition and regroups.
pub fn transport_maxwell(
    kind: AlgebraKind,
    s: &LinearMap7,
    decomposition: &MaxwellDecomposition,
) -> Result<MaxwellDecomposition> {
    let verdict = is_automorphism(kind, s);
    if !verdict.holds {
        return Err(Error::NotAutomorphism { kind, reason: verdict.failures.join("; ") });
    }
    Ok(MaxwellDecomposition::from_octonion(&s.apply_symbolic(&decomposition.to_octonion())))
}

/// Every automorphism that maps basis units to signed basis units.
///
/// Images of `e1, e2, e3` are chosen freely; the rest follow from
/// `e4 = e1e2`, `e5 = e2e3`, `e6 = e3e4`, `e7 = e1e3`, and each candidate is
/// then checked against the whole table.
pub fn signed_permutation_automorphisms(kind: AlgebraKind) -> Vec<LinearMap7> {
    let table = kind.table();
    let mul = |a: (i8, usize), b: (i8, usize)| -> (i8, usize) {
        let (s, k) = table.basis_product(a.1, b.1);
        (a.0 * b.0 * s, k)
    };
    let candidates: Vec<(i8, usize)> = (1..=N).flat_map(|k| [(1, k), (-1, k)]).collect();
    let mut out = Vec::new();
    for &a1 in &candidates {
        for &a2 in &candidates {
            for &a3 in &candidates {
                let a4 = mul(a1, a2);
                let a5 = mul(a2, a3);
                let a6 = mul(a3, a4);
                let a7 = mul(a1, a3);
                let img = [a1, a2, a3, a4, a5, a6, a7];
                let mut seen = [false; N + 1];
                if img.iter().any(|&(_, k)| k == 0 || std::mem::replace(&mut seen[k], true)) {
                    continue;
                }
                let image = |i: usize| if i == 0 { (1, 0) } else { img[i - 1] };
                let ok = (1..=N).all(|i| {
                    (1..=N).all(|j| {
                        let (s, k) = table.basis_product(i, j);
                        let (t, l) = image(k);
                        mul(image(i), image(j)) == (s * t, l)
                    })
                });
                if ok {
                    out.push(LinearMap7::signed_permutation(img));
                }
            }
        }
    }
    out
}

/// A random derivation: a combination of the basis with integer weights in `[-3, 3]`.
pub fn random_derivation<R: Rng + ?Sized>(basis: &[LinearMap7], rng: &mut R) -> LinearMap7 {
    basis.iter().fold(LinearMap7::zero(), |acc, b| {
        let w = Rational::from_integer(rng.gen_range(-3i64..=3).into());
        LinearMap7::from_fn(|i, j| &acc.m[i][j] + &w * &b.m[i][j])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{apply_dirac, FieldOctonion};

    #[test]
    fn dimension_fourteen() {
        for kind in AlgebraKind::ALL {
            assert_eq!(derivation_dimension(kind), 14, "{kind}");
        }
    }

    #[test]
    fn system_shape() {
        let sys = DerivationSystem::assemble(&AlgebraKind::SplitOctonion.table());
        assert!(sys.rows.len() <= 8 * 28);
        assert!(sys.rows.iter().all(|r| r.len() == 49));
    }

    #[test]
    fn basis_vectors_are_derivations() {
        for kind in AlgebraKind::ALL {
            let b = derivation_basis(&kind.table());
            assert_eq!(b.len(), 14);
            for d in &b {
                assert!(is_derivation(kind, d).holds);
            }
        }
    }

    #[test]
    fn zero_and_swap() {
        for kind in AlgebraKind::ALL {
            assert!(is_derivation(kind, &LinearMap7::zero()).holds);
            assert!(!is_derivation(kind, &LinearMap7::swap(1, 2)).holds);
            assert!(is_automorphism(kind, &LinearMap7::identity()).holds);
            let v = is_automorphism(kind, &LinearMap7::swap(1, 2));
            assert!(!v.holds);
            assert!(v.failures.iter().any(|f| f.starts_with("s(e1)s(e2)")));
        }
    }

    #[test]
    fn singular_map_is_not_automorphism() {
        let v = is_automorphism(AlgebraKind::Octonion, &LinearMap7::zero());
        assert!(!v.holds);
        assert!(v.failures[0].contains("rank 0"));
    }

    #[test]
    fn signed_permutations() {
        for kind in AlgebraKind::ALL {
            let autos = signed_permutation_automorphisms(kind);
            assert!(autos.contains(&LinearMap7::identity()));
            assert!(autos.len() > 1, "{kind}");
            for s in autos.iter().take(10) {
                assert!(is_automorphism(kind, s).holds);
            }
        }
    }

    #[test]
    fn transport() {
        let kind = AlgebraKind::SplitOctonion;
        let df = apply_dirac(kind, &FieldOctonion::standard(true, false));
        assert_eq!(transport_maxwell(kind, &LinearMap7::identity(), &df).unwrap(), df);
        let zero = MaxwellDecomposition::zero();
        for s in signed_permutation_automorphisms(kind).iter().take(5) {
            assert!(transport_maxwell(kind, s, &zero).unwrap().is_zero());
            assert!(!transport_maxwell(kind, s, &df).unwrap().is_zero());
        }
        assert!(matches!(
            transport_maxwell(kind, &LinearMap7::swap(1, 2), &df),
            Err(Error::NotAutomorphism { .. })
        ));
    }
}
