//! The two eight-dimensional algebras spanned by `1, e1, ..., e7`.
//!
//! Both share a single signed multiplication table. Entries marked `±`/`∓`
//! resolve to the upper sign for the octonions and the lower sign for the
//! split octonions. The table is stored as data so that every row can be
//! read against its printed form.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Exact scalar used wherever a discrete answer is required.
pub type Rational = BigRational;

/// Coefficient ring for [`Octonion`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Which sign of the shared table is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    /// Upper sign.
    Octonion,
    /// Lower sign.
    #[serde(rename = "split")]
    SplitOctonion,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 2] = [AlgebraKind::Octonion, AlgebraKind::SplitOctonion];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Octonion => "octonion",
            AlgebraKind::SplitOctonion => "split",
        }
    }

    /// The structure table for this algebra.
    pub fn table(self) -> StructureTable {
        StructureTable::new(self)
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy)]
enum TableSign {
    Plus,
    Minus,
    /// `±`
    Upper,
    /// `∓`
    Lower,
}

use TableSign::{Lower as MP, Minus as M, Plus as P, Upper as PM};

/// Row `i`, column `j` holds `e_{i+1} e_{j+1}` as (sign, basis index); index 0 is the unit.
#[rustfmt::skip]
const SIGNED_TABLE: [[(TableSign, u8); 7]; 7] = [
    //  e1       e2       e3       e4       e5       e6       e7
    [(M, 0), (P, 4), (P, 7), (M, 2), (P, 6), (M, 5), (M, 3)],      // e1
    [(M, 4), (M, 0), (P, 5), (P, 1), (M, 3), (P, 7), (M, 6)],      // e2
    [(M, 7), (M, 5), (MP, 0), (P, 6), (PM, 2), (MP, 4), (PM, 1)],  // e3
    [(P, 2), (M, 1), (M, 6), (M, 0), (P, 7), (P, 3), (M, 5)],      // e4
    [(M, 6), (P, 3), (MP, 2), (M, 7), (MP, 0), (PM, 1), (PM, 4)],  // e5
    [(P, 5), (M, 7), (PM, 4), (M, 3), (MP, 1), (MP, 0), (PM, 2)],  // e6
    [(P, 3), (P, 6), (MP, 1), (P, 5), (MP, 4), (MP, 2), (MP, 0)],  // e7
];

/// One product of imaginary basis units: `sign * e_result` (`result == 0` is the unit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub sign: i8,
    pub result: u8,
}

/// Resolved 7×7 table of products `e_i e_j`, `1 <= i, j <= 7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    kind: AlgebraKind,
    entries: [[TableEntry; 7]; 7],
}

impl StructureTable {
    pub fn new(kind: AlgebraKind) -> Self {
        let mut entries = [[TableEntry { sign: 0, result: 0 }; 7]; 7];
        for (row, src) in entries.iter_mut().zip(SIGNED_TABLE.iter()) {
            for (entry, &(sign, result)) in row.iter_mut().zip(src.iter()) {
                let sign = match (sign, kind) {
                    (P, _) => 1,
                    (M, _) => -1,
                    (PM, AlgebraKind::Octonion) | (MP, AlgebraKind::SplitOctonion) => 1,
                    (PM, AlgebraKind::SplitOctonion) | (MP, AlgebraKind::Octonion) => -1,
                };
                *entry = TableEntry { sign, result };
            }
        }
        Self { kind, entries }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Entry for `e_i e_j` with `i, j` in `1..=7`.
    pub fn entry(&self, i: usize, j: usize) -> TableEntry {
        self.entries[i - 1][j - 1]
    }

    /// Returns a copy with the sign of `e_i e_j` flipped. Used to build
    /// deliberately broken tables for negative controls.
    pub fn with_flipped_sign(mut self, i: usize, j: usize) -> Self {
        self.entries[i - 1][j - 1].sign = -self.entries[i - 1][j - 1].sign;
        self
    }

    /// Product of any two basis elements `0..=7` (0 is the unit), as (sign, index).
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> (i8, usize) {
        match (i, j) {
            (0, _) => (1, j),
            (_, 0) => (1, i),
            _ => {
                let e = self.entries[i - 1][j - 1];
                (e.sign, e.result as usize)
            }
        }
    }

    /// Bilinear extension of the table with a caller-supplied coefficient
    /// product. Lets the same table drive products between different
    /// coefficient types (e.g. rational basis elements times symbolic fields).
    pub fn bilinear<A, B, C, F>(&self, a: &Octonion<A>, b: &Octonion<B>, mut mul: F) -> Octonion<C>
    where
        C: Zero + Neg<Output = C> + Add<Output = C>,
        F: FnMut(&A, &B) -> C,
    {
        let mut out: [C; 8] = std::array::from_fn(|_| C::zero());
        for (i, ai) in a.c.iter().enumerate() {
            for (j, bj) in b.c.iter().enumerate() {
                let (sign, k) = self.basis_product(i, j);
                let term = mul(ai, bj);
                let slot = std::mem::replace(&mut out[k], C::zero());
                out[k] = if sign > 0 { slot + term } else { slot + (-term) };
            }
        }
        Octonion { c: out }
    }

    pub fn multiply<S: Scalar>(&self, a: &Octonion<S>, b: &Octonion<S>) -> Octonion<S> {
        let mut out = Octonion::<S>::zero();
        for (i, ai) in a.c.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.c.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let (sign, k) = self.basis_product(i, j);
                let term = ai.clone() * bj.clone();
                let slot = std::mem::replace(&mut out.c[k], S::zero());
                out.c[k] = if sign > 0 { slot + term } else { slot - term };
            }
        }
        out
    }

    /// `(xy)z - x(yz)`.
    pub fn associator<S: Scalar>(&self, x: &Octonion<S>, y: &Octonion<S>, z: &Octonion<S>) -> Octonion<S> {
        let left = self.multiply(&self.multiply(x, y), z);
        let right = self.multiply(x, &self.multiply(y, z));
        left - right
    }

    /// `x · conj(x)`; its imaginary part vanishes in a well-formed table.
    pub fn norm_product<S: Scalar>(&self, a: &Octonion<S>) -> Octonion<S> {
        self.multiply(a, &a.conjugate())
    }

    /// Scalar part of `x · conj(x)`, or `None` if the product is not a real multiple of 1.
    pub fn try_norm_form<S: Scalar>(&self, a: &Octonion<S>) -> Option<S> {
        let p = self.norm_product(a);
        if p.is_real() {
            Some(p.c[0].clone())
        } else {
            None
        }
    }

    /// Structural audit of the table.
    pub fn audit(&self) -> TableAudit {
        let mut anticommutativity = Vec::new();
        let mut closure = Vec::new();
        let mut diagonal = Vec::new();
        let expected_diag = diagonal_signs(self.kind);
        for i in 1..=7 {
            for j in 1..=7 {
                let e = self.entry(i, j);
                if i == j {
                    if e.result != 0 || e.sign != expected_diag[i - 1] {
                        diagonal.push(format!(
                            "e{i}e{i} = {} (expected {})",
                            render_entry(e),
                            render_entry(TableEntry { sign: expected_diag[i - 1], result: 0 })
                        ));
                    }
                    continue;
                }
                let k = e.result as usize;
                if k == 0 || k == i || k == j || e.sign.abs() != 1 {
                    closure.push(format!("e{i}e{j} = {}", render_entry(e)));
                }
                let t = self.entry(j, i);
                if i < j && (t.result != e.result || t.sign != -e.sign) {
                    anticommutativity.push(format!(
                        "e{i}e{j} = {} but e{j}e{i} = {}",
                        render_entry(e),
                        render_entry(t)
                    ));
                }
            }
        }
        TableAudit { anticommutativity, closure, diagonal }
    }

    /// The table as printable rows, one per `e_i`.
    pub fn render(&self) -> String {
        let mut out = String::from("      ");
        for j in 1..=7 {
            out.push_str(&format!("{:>5}", format!("e{j}")));
        }
        out.push('\n');
        for i in 1..=7 {
            out.push_str(&format!("{:>5} ", format!("e{i}")));
            for j in 1..=7 {
                out.push_str(&format!("{:>5}", render_entry(self.entry(i, j))));
            }
            out.push('\n');
        }
        out
    }
}

fn render_entry(e: TableEntry) -> String {
    let s = if e.sign < 0 { "-" } else { "+" };
    if e.result == 0 {
        format!("{s}1")
    } else {
        format!("{s}e{}", e.result)
    }
}

/// Expected `e_i^2` for `i = 1..=7`.
pub fn diagonal_signs(kind: AlgebraKind) -> [i8; 7] {
    match kind {
        AlgebraKind::Octonion => [-1; 7],
        AlgebraKind::SplitOctonion => [-1, -1, 1, -1, 1, 1, 1],
    }
}

/// Violations found by [`StructureTable::audit`]; empty lists mean the check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableAudit {
    pub anticommutativity: Vec<String>,
    pub closure: Vec<String>,
    pub diagonal: Vec<String>,
}

impl TableAudit {
    pub fn passed(&self) -> bool {
        self.anticommutativity.is_empty() && self.closure.is_empty() && self.diagonal.is_empty()
    }
}

/// An element `c0 + c1 e1 + ... + c7 e7`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Octonion<S> {
    pub c: [S; 8],
}

impl<S> Octonion<S> {
    pub const fn new(c: [S; 8]) -> Self {
        Self { c }
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.c
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Octonion<T> {
        Octonion { c: self.c.each_ref().map(f) }
    }
}

impl<S: Zero> Octonion<S> {
    pub fn zero() -> Self {
        Self { c: std::array::from_fn(|_| S::zero()) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.c[0].is_zero()
    }

    /// No imaginary component.
    pub fn is_real(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }
}

impl<S: Zero + One> Octonion<S> {
    pub fn one() -> Self {
        Self::basis(0)
    }

    /// `e_i`, with `basis(0)` the unit.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index {i} out of range");
        let mut o = Self::zero();
        o.c[i] = S::one();
        o
    }
}

impl<S: Clone + Neg<Output = S>> Octonion<S> {
    pub fn conjugate(&self) -> Self {
        let mut c = self.c.clone();
        for v in &mut c[1..] {
            *v = -v.clone();
        }
        Self { c }
    }
}

impl<S: Clone + Mul<Output = S>> Octonion<S> {
    pub fn scale(&self, k: &S) -> Self {
        self.map(|v| k.clone() * v.clone())
    }
}

impl<S> Index<usize> for Octonion<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.c[i]
    }
}

impl<S: Clone + Add<Output = S>> Add for Octonion<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c) {
            *a = a.clone() + b;
        }
        Self { c }
    }
}

impl<S: Clone + Add<Output = S>> AddAssign for Octonion<S> {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a = a.clone() + b;
        }
    }
}

impl<S: Clone + Sub<Output = S>> Sub for Octonion<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c) {
            *a = a.clone() - b;
        }
        Self { c }
    }
}

impl<S: Neg<Output = S>> Neg for Octonion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { c: self.c.map(Neg::neg) }
    }
}

impl<S: fmt::Display + Zero> fmt::Debug for Octonion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<S: fmt::Display + Zero> fmt::Display for Octonion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            if i == 0 {
                write!(f, "({v})")?;
            } else {
                write!(f, "({v})e{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Product in the algebra selected by `kind`.
pub fn multiply<S: Scalar>(kind: AlgebraKind, a: &Octonion<S>, b: &Octonion<S>) -> Octonion<S> {
    kind.table().multiply(a, b)
}

pub fn conjugate<S: Clone + Neg<Output = S>>(a: &Octonion<S>) -> Octonion<S> {
    a.conjugate()
}

/// `N(x)`, the scalar part of `x · conj(x)`.
///
/// Panics if the product has an imaginary part, which cannot happen for
/// either of the two well-formed tables.
pub fn norm_form<S: Scalar>(kind: AlgebraKind, a: &Octonion<S>) -> S {
    kind.table()
        .try_norm_form(a)
        .expect("x * conj(x) must be real in a composition algebra")
}

pub fn associator<S: Scalar>(
    kind: AlgebraKind,
    x: &Octonion<S>,
    y: &Octonion<S>,
    z: &Octonion<S>,
) -> Octonion<S> {
    kind.table().associator(x, y, z)
}

/// Signature `(p, n)` of the norm form.
///
/// The basis is checked to be orthogonal for the polar form, so the signs of
/// `N(e_i)` are the signature.
pub fn signature(kind: AlgebraKind) -> (usize, usize) {
    let table = kind.table();
    let norms: Vec<Rational> = (0..8)
        .map(|i| norm_form(kind, &Octonion::<Rational>::basis(i)))
        .collect();
    for i in 0..8 {
        for j in (i + 1)..8 {
            let sum = Octonion::<Rational>::basis(i) + Octonion::basis(j);
            let polar = table.try_norm_form(&sum).expect("well-formed table") - &norms[i] - &norms[j];
            assert!(polar.is_zero(), "basis not orthogonal for N: e{i}, e{j}");
        }
    }
    let p = norms.iter().filter(|n| n.is_positive()).count();
    let n = norms.iter().filter(|n| n.is_negative()).count();
    (p, n)
}

/// Exact integer scalar for identity suites. Integer inputs keep every
/// polynomial identity inside `Z`, a subring of `Q`, so evaluation here is
/// exact rational evaluation without fraction overhead.
pub type Integer = i128;

/// An octonion with integer coefficients drawn uniformly from `[-9, 9]`.
pub fn random_integer_octonion<R: Rng + ?Sized>(rng: &mut R) -> Octonion<Integer> {
    Octonion { c: std::array::from_fn(|_| rng.gen_range(-9..=9)) }
}

impl Octonion<Integer> {
    pub fn to_rational(&self) -> Octonion<Rational> {
        self.map(|&v| Rational::from_integer(BigInt::from(v)))
    }
}

/// Searches `span{1, e7}` for `x, y != 0` with `N(x) = 0` and `xy = 0`.
///
/// Only the split algebra has such pairs; for the octonions the search
/// exhausts `attempts` and returns `None`.
pub fn find_zero_divisor_pair<R: Rng + ?Sized>(
    kind: AlgebraKind,
    rng: &mut R,
    attempts: usize,
) -> Option<(Octonion<Rational>, Octonion<Rational>)> {
    let table = kind.table();
    let draw = |rng: &mut R| -> Octonion<Rational> {
        let mut o = Octonion::zero();
        o.c[0] = Rational::from_integer(BigInt::from(rng.gen_range(-9i64..=9)));
        o.c[7] = Rational::from_integer(BigInt::from(rng.gen_range(-9i64..=9)));
        o
    };
    for _ in 0..attempts {
        let x = draw(rng);
        let y = draw(rng);
        if x.is_zero() || y.is_zero() {
            continue;
        }
        if table.try_norm_form(&x).is_some_and(|n| n.is_zero()) && table.multiply(&x, &y).is_zero() {
            return Some((x, y));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize) -> Octonion<Rational> {
        Octonion::basis(i)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn published_entries() {
        let split = AlgebraKind::SplitOctonion;
        let oct = AlgebraKind::Octonion;
        assert_eq!(multiply(split, &e(1), &e(2)), e(4));
        assert_eq!(multiply(split, &e(3), &e(3)), e(0));
        assert_eq!(multiply(oct, &e(3), &e(3)), -e(0));
        assert_eq!(multiply(split, &e(3), &e(5)), -e(2));
        assert_eq!(multiply(oct, &e(3), &e(5)), e(2));
        assert_eq!(multiply(split, &e(7), &e(1)), e(3));
        assert_eq!(multiply(split, &e(7), &e(2)), e(6));
        assert_eq!(multiply(split, &e(7), &e(4)), e(5));
    }

    #[test]
    fn unit_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for kind in AlgebraKind::ALL {
            for _ in 0..20 {
                let x = random_integer_octonion(&mut rng).to_rational();
                assert_eq!(multiply(kind, &e(0), &x), x);
                assert_eq!(multiply(kind, &x, &e(0)), x);
            }
        }
    }

    #[test]
    fn table_antisymmetry_and_closure() {
        for kind in AlgebraKind::ALL {
            for i in 1..=7 {
                for j in 1..=7 {
                    let p = multiply(kind, &e(i), &e(j));
                    let nonzero: Vec<_> = p.c.iter().filter(|v| !v.is_zero()).collect();
                    assert_eq!(nonzero.len(), 1);
                    assert_eq!(nonzero[0].abs(), q(1));
                    if i != j {
                        assert_eq!(p, -multiply(kind, &e(j), &e(i)));
                    }
                }
            }
            assert!(kind.table().audit().passed());
        }
    }

    #[test]
    fn diagonal() {
        for kind in AlgebraKind::ALL {
            let signs = diagonal_signs(kind);
            for i in 1..=7 {
                assert_eq!(multiply(kind, &e(i), &e(i)), e(0).scale(&q(signs[i - 1] as i64)));
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&e(0)), e(0));
        assert_eq!(conjugate(&e(7)), -e(7));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = random_integer_octonion(&mut rng);
        assert_eq!(conjugate(&conjugate(&x)), x);
    }

    #[test]
    fn norm_examples() {
        let x = Octonion::new([q(3), q(4), q(0), q(0), q(0), q(0), q(0), q(0)]);
        assert_eq!(norm_form(AlgebraKind::Octonion, &x), q(25));
        assert_eq!(norm_form(AlgebraKind::SplitOctonion, &e(7)), q(-1));
        assert_eq!(norm_form(AlgebraKind::SplitOctonion, &e(0)), q(1));
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(AlgebraKind::Octonion), (8, 0));
        assert_eq!(signature(AlgebraKind::SplitOctonion), (4, 4));
    }

    #[test]
    fn associator_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for kind in AlgebraKind::ALL {
            let x = random_integer_octonion(&mut rng).to_rational();
            let y = random_integer_octonion(&mut rng).to_rational();
            assert!(associator(kind, &e(0), &x, &y).is_zero());
            assert!(associator(kind, &x, &x, &y).is_zero());
            assert!(!associator(kind, &e(1), &e(2), &e(3)).is_zero());
        }
    }

    #[test]
    fn zero_divisors_only_in_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (x, y) = find_zero_divisor_pair(AlgebraKind::SplitOctonion, &mut rng, 20_000)
            .expect("split octonions have zero divisors in span{1, e7}");
        assert!(!x.is_zero() && !y.is_zero());
        assert!(norm_form(AlgebraKind::SplitOctonion, &x).is_zero());
        assert!(multiply(AlgebraKind::SplitOctonion, &x, &y).is_zero());
        assert!(find_zero_divisor_pair(AlgebraKind::Octonion, &mut rng, 2_000).is_none());
    }

    #[test]
    fn flipped_table_fails_audit() {
        let bad = AlgebraKind::SplitOctonion.table().with_flipped_sign(1, 2);
        let audit = bad.audit();
        assert!(!audit.passed());
        assert_eq!(audit.anticommutativity.len(), 1);
    }

    #[test]
    fn float_scalars() {
        let x = Octonion::new([1.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0]);
        let n = norm_form(AlgebraKind::SplitOctonion, &x);
        assert!((n - (1.0 + 0.25 - 4.0)).abs() < 1e-15);
    }
}
