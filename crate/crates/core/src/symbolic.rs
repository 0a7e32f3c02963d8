//! Exact symbolic expansion of the Dirac-like operator
//! `∂ = e1 ∂x + e2 ∂y + e4 ∂z + e7 ∂t` acting on the field octonion
//! `F = Ex e1 + Ey e2 + Ez e4 + Bx e3 + By e6 + Bz e5 (+ S e7 + F0)`.
//!
//! Coefficients are formal first derivatives `∂_var(field)` with rational
//! weights. No rewriting is ever done: two expansions agree only if their
//! canonical atom maps are identical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, Octonion, Rational};

/// Spacetime coordinate a derivative is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
    Z,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];
    pub const SPATIAL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::T => "t",
        }
    }

    /// Slot of this coordinate in a `[t, x, y, z]` array.
    pub fn spacetime_index(self) -> usize {
        match self {
            Var::T => 0,
            Var::X => 1,
            Var::Y => 2,
            Var::Z => 3,
        }
    }
}

/// The imaginary unit paired with each coordinate in `∂`.
pub const DIRAC_TERMS: [(usize, Var); 4] = [(1, Var::X), (2, Var::Y), (4, Var::Z), (7, Var::T)];

/// Basis indices of `Q = (e1, e2, e4)`.
pub const Q_INDICES: [usize; 3] = [1, 2, 4];
/// Basis indices of `e7 Q = (e7e1, e7e2, e7e4) = (e3, e6, e5)`.
pub const E7Q_INDICES: [usize; 3] = [3, 6, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldName {
    Ex,
    Ey,
    Ez,
    Bx,
    By,
    Bz,
    S,
    F0,
}

impl FieldName {
    pub const ALL: [FieldName; 8] = [
        FieldName::Ex,
        FieldName::Ey,
        FieldName::Ez,
        FieldName::Bx,
        FieldName::By,
        FieldName::Bz,
        FieldName::S,
        FieldName::F0,
    ];
    pub const E: [FieldName; 3] = [FieldName::Ex, FieldName::Ey, FieldName::Ez];
    pub const B: [FieldName; 3] = [FieldName::Bx, FieldName::By, FieldName::Bz];

    pub fn name(self) -> &'static str {
        match self {
            FieldName::Ex => "Ex",
            FieldName::Ey => "Ey",
            FieldName::Ez => "Ez",
            FieldName::Bx => "Bx",
            FieldName::By => "By",
            FieldName::Bz => "Bz",
            FieldName::S => "S",
            FieldName::F0 => "F0",
        }
    }

    /// Basis index of this field in `F`.
    pub fn basis_index(self) -> usize {
        match self {
            FieldName::F0 => 0,
            FieldName::Ex => 1,
            FieldName::Ey => 2,
            FieldName::Bx => 3,
            FieldName::Ez => 4,
            FieldName::Bz => 5,
            FieldName::By => 6,
            FieldName::S => 7,
        }
    }
}

impl fmt::Display for FieldName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The formal symbol `∂_var(field)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DerivAtom {
    pub var: Var,
    pub field: FieldName,
}

impl DerivAtom {
    pub fn new(var: Var, field: FieldName) -> Self {
        Self { var, field }
    }
}

impl fmt::Display for DerivAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d_{}({})", self.var.name(), self.field)
    }
}

/// Finite rational linear combination of symbols, kept canonical
/// (no zero weights stored).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

/// Coefficient ring of the symbolic `∂F`.
pub type SymbolicScalar = LinComb<DerivAtom>;
/// Coefficient ring of a field octonion (combinations of field names).
pub type FieldCombo = LinComb<FieldName>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::default();
        out.add_term(key, coeff);
        out
    }

    pub fn symbol(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(a, c)| (a.clone(), c * k)).collect() }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: Ord + Clone> Zero for LinComb<K> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FieldCombo {
    /// Formal derivative, distributed over the field symbols.
    pub fn derivative(&self, var: Var) -> SymbolicScalar {
        let mut out = SymbolicScalar::default();
        for (field, c) in self.terms() {
            out.add_term(DerivAtom::new(var, *field), c.clone());
        }
        out
    }
}

impl SymbolicScalar {
    pub fn atom(var: Var, field: FieldName) -> Self {
        Self::symbol(DerivAtom::new(var, field))
    }

    /// Substitutes a numeric value for every atom.
    pub fn evaluate(&self, mut value: impl FnMut(&DerivAtom) -> f64) -> f64 {
        self.terms().map(|(a, c)| small_rational_to_f64(c) * value(a)).sum()
    }

    /// Fields whose derivatives appear.
    pub fn fields(&self) -> std::collections::BTreeSet<FieldName> {
        self.keys().map(|a| a.field).collect()
    }

    /// Signed JSON terms, one per atom.
    pub fn json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(a, c)| TermJson {
                sign: if c.is_negative() { "-".into() } else { "+".into() },
                coeff: c.abs().to_string(),
                var: a.var,
                field: a.field,
            })
            .collect()
    }
}

fn small_rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    // weights here are small integers; skip the general BigInt conversion
    if r.is_integer() {
        if let Some(v) = r.numer().to_i64() {
            return v as f64;
        }
    }
    r.to_f64().expect("rational weight representable as f64")
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { '-' } else { '+' };
            if n == 0 {
                write!(f, "{sign}")?;
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{mag} {k}")?;
            }
        }
        Ok(())
    }
}

/// One signed term of a rendered component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub sign: String,
    pub coeff: String,
    pub var: Var,
    pub field: FieldName,
}

/// An octonion whose coefficients are (combinations of) field symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldOctonion {
    pub coeffs: Octonion<FieldCombo>,
}

impl FieldOctonion {
    /// `F = Ex e1 + Ey e2 + Ez e4 + Bx e3 + By e6 + Bz e5`, optionally with
    /// `S e7` and a real part `F0`.
    pub fn standard(with_s: bool, with_f0: bool) -> Self {
        let mut fields = vec![];
        fields.extend(FieldName::E);
        fields.extend(FieldName::B);
        if with_s {
            fields.push(FieldName::S);
        }
        if with_f0 {
            fields.push(FieldName::F0);
        }
        Self::from_fields(&fields)
    }

    /// Places each listed field at its own basis slot.
    pub fn from_fields(fields: &[FieldName]) -> Self {
        let mut coeffs = Octonion::<FieldCombo>::zero();
        for &f in fields {
            coeffs.c[f.basis_index()].add_term(f, Rational::one());
        }
        Self { coeffs }
    }
}

impl Add for FieldOctonion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { coeffs: self.coeffs + rhs.coeffs }
    }
}

/// `∂F` grouped as `scalar + q_vec·Q + e7q_vec·(e7Q) + e7_part·e7`.
///
/// `q_vec` holds the coefficients of `(e1, e2, e4)` and `e7q_vec` those of
/// `(e3, e6, e5)`, both indexed by `(x, y, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxwellDecomposition<T = SymbolicScalar> {
    pub scalar_part: T,
    pub q_vec: [T; 3],
    pub e7q_vec: [T; 3],
    pub e7_part: T,
}

/// Component labels in report order.
pub const COMPONENT_NAMES: [&str; 8] = [
    "scalar", "q_vec.x", "q_vec.y", "q_vec.z", "e7q_vec.x", "e7q_vec.y", "e7q_vec.z", "e7_part",
];

impl<T: Clone> MaxwellDecomposition<T> {
    pub fn from_octonion(o: &Octonion<T>) -> Self {
        Self {
            scalar_part: o.c[0].clone(),
            q_vec: Q_INDICES.map(|i| o.c[i].clone()),
            e7q_vec: E7Q_INDICES.map(|i| o.c[i].clone()),
            e7_part: o.c[7].clone(),
        }
    }

    pub fn to_octonion(&self) -> Octonion<T> {
        let mut c: [Option<T>; 8] = Default::default();
        c[0] = Some(self.scalar_part.clone());
        for (k, &i) in Q_INDICES.iter().enumerate() {
            c[i] = Some(self.q_vec[k].clone());
        }
        for (k, &i) in E7Q_INDICES.iter().enumerate() {
            c[i] = Some(self.e7q_vec[k].clone());
        }
        c[7] = Some(self.e7_part.clone());
        Octonion::new(c.map(|v| v.expect("every slot assigned")))
    }

    /// `(name, value)` pairs in [`COMPONENT_NAMES`] order.
    pub fn components(&self) -> [(&'static str, &T); 8] {
        [
            (COMPONENT_NAMES[0], &self.scalar_part),
            (COMPONENT_NAMES[1], &self.q_vec[0]),
            (COMPONENT_NAMES[2], &self.q_vec[1]),
            (COMPONENT_NAMES[3], &self.q_vec[2]),
            (COMPONENT_NAMES[4], &self.e7q_vec[0]),
            (COMPONENT_NAMES[5], &self.e7q_vec[1]),
            (COMPONENT_NAMES[6], &self.e7q_vec[2]),
            (COMPONENT_NAMES[7], &self.e7_part),
        ]
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> MaxwellDecomposition<U> {
        MaxwellDecomposition {
            scalar_part: f(&self.scalar_part),
            q_vec: self.q_vec.each_ref().map(&mut f),
            e7q_vec: self.e7q_vec.each_ref().map(&mut f),
            e7_part: f(&self.e7_part),
        }
    }
}

impl<T: Clone + Zero> MaxwellDecomposition<T> {
    pub fn zero() -> Self {
        Self::from_octonion(&Octonion::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|(_, v)| v.is_zero())
    }
}

impl<T: Clone + Add<Output = T>> Add for MaxwellDecomposition<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_octonion(&(self.to_octonion() + rhs.to_octonion()))
    }
}

impl<T: Clone + Sub<Output = T>> Sub for MaxwellDecomposition<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_octonion(&(self.to_octonion() - rhs.to_octonion()))
    }
}

impl MaxwellDecomposition<SymbolicScalar> {
    /// One `name = terms` line per component.
    pub fn render(&self) -> String {
        self.components()
            .iter()
            .map(|(name, v)| format!("{name} = {v}\n"))
            .collect()
    }

    pub fn to_json(&self) -> BTreeMap<String, Vec<TermJson>> {
        self.components()
            .iter()
            .map(|(name, v)| (name.to_string(), v.json_terms()))
            .collect()
    }
}

/// `Σ_μ e_μ · ∂_μ F` as a flat octonion, no regrouping.
pub fn dirac_octonion(kind: AlgebraKind, f: &FieldOctonion) -> Octonion<SymbolicScalar> {
    let table = kind.table();
    let mut out = Octonion::<SymbolicScalar>::zero();
    for (idx, var) in DIRAC_TERMS {
        let unit = Octonion::<Rational>::basis(idx);
        let derivative = f.coeffs.map(|combo| combo.derivative(var));
        out += table.bilinear(&unit, &derivative, |r, s| s.scale(r));
    }
    out
}

/// Left action of `∂` on `f`, regrouped.
pub fn apply_dirac(kind: AlgebraKind, f: &FieldOctonion) -> MaxwellDecomposition {
    MaxwellDecomposition::from_octonion(&dirac_octonion(kind, f))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn d(var: Var, field: FieldName) -> SymbolicScalar {
    SymbolicScalar::atom(var, field)
}

/// `∇·V` for a triple of field names.
pub fn divergence(v: [FieldName; 3]) -> SymbolicScalar {
    d(Var::X, v[0]) + d(Var::Y, v[1]) + d(Var::Z, v[2])
}

/// `∇×V` for a triple of field names.
pub fn curl(v: [FieldName; 3]) -> [SymbolicScalar; 3] {
    [
        d(Var::Y, v[2]) - d(Var::Z, v[1]),
        d(Var::Z, v[0]) - d(Var::X, v[2]),
        d(Var::X, v[1]) - d(Var::Y, v[0]),
    ]
}

pub fn gradient(field: FieldName) -> [SymbolicScalar; 3] {
    Var::SPATIAL.map(|v| d(v, field))
}

pub fn time_derivative(v: [FieldName; 3]) -> [SymbolicScalar; 3] {
    v.map(|f| d(Var::T, f))
}

fn add3(a: [SymbolicScalar; 3], b: [SymbolicScalar; 3]) -> [SymbolicScalar; 3] {
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    [a0 + b0, a1 + b1, a2 + b2]
}

fn scale3(a: [SymbolicScalar; 3], k: &Rational) -> [SymbolicScalar; 3] {
    a.map(|v| v.scale(k))
}

/// `+1` for the split algebra, `-1` for the octonions: the sign of the
/// `∂t B` term in `q_vec` and of the `∂t S` term in the scalar part.
pub fn time_sign(kind: AlgebraKind) -> i64 {
    match kind {
        AlgebraKind::SplitOctonion => 1,
        AlgebraKind::Octonion => -1,
    }
}

/// The displayed right-hand sides, built from vector calculus alone:
///
/// ```text
/// scalar  = -∇·E  ± ∂t S
/// q_vec   =  ∇×E  ± ∂t B  + ∇F0
/// e7q_vec = -∇×B  + ∂t E  - ∇S
/// e7_part =  ∇·B          + ∂t F0
/// ```
///
/// with `+` for the split algebra. The `S` terms follow the sourced form
/// (`ρ = ∂t S`, `j = ∇S`); the `F0` terms are the real-part extension that
/// carries magnetic sources.
pub fn expected_decomposition(kind: AlgebraKind, with_s: bool, with_f0: bool) -> MaxwellDecomposition {
    let sign = q(time_sign(kind));
    let mut scalar_part = -divergence(FieldName::E);
    let mut q_vec = add3(curl(FieldName::E), scale3(time_derivative(FieldName::B), &sign));
    let mut e7q_vec = add3(scale3(curl(FieldName::B), &q(-1)), time_derivative(FieldName::E));
    let mut e7_part = divergence(FieldName::B);
    if with_s {
        scalar_part = scalar_part + d(Var::T, FieldName::S).scale(&sign);
        e7q_vec = add3(e7q_vec, scale3(gradient(FieldName::S), &q(-1)));
    }
    if with_f0 {
        q_vec = add3(q_vec, gradient(FieldName::F0));
        e7_part = e7_part + d(Var::T, FieldName::F0);
    }
    MaxwellDecomposition { scalar_part, q_vec, e7q_vec, e7_part }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentMismatch {
    pub component: String,
    pub computed: String,
    pub expected: String,
}

/// Outcome of comparing the algebra-product expansion with the vector-calculus form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionVerdict {
    pub kind: AlgebraKind,
    pub with_s: bool,
    pub with_f0: bool,
    pub computed: MaxwellDecomposition,
    pub expected: MaxwellDecomposition,
    pub mismatches: Vec<ComponentMismatch>,
}

impl ExpansionVerdict {
    pub fn matched(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn compare(computed: &MaxwellDecomposition, expected: &MaxwellDecomposition) -> Vec<ComponentMismatch> {
    computed
        .components()
        .iter()
        .zip(expected.components().iter())
        .filter(|((_, a), (_, b))| a != b)
        .map(|((name, a), (_, b))| ComponentMismatch {
            component: name.to_string(),
            computed: a.to_string(),
            expected: b.to_string(),
        })
        .collect()
}

pub fn verify_expansion(kind: AlgebraKind, with_s: bool, with_f0: bool) -> ExpansionVerdict {
    let computed = apply_dirac(kind, &FieldOctonion::standard(with_s, with_f0));
    let expected = expected_decomposition(kind, with_s, with_f0);
    let mismatches = compare(&computed, &expected);
    ExpansionVerdict { kind, with_s, with_f0, computed, expected, mismatches }
}
