//! Operators on mixed tensor powers of the natural module `V` and its dual.
//!
//! Basis tuples `(i_1, …, i_d)` carry integer indices, read as offsets in a
//! single coset `δ + ℤ`. A flavor pattern `(l_1, …, l_{d-1})`, `l_m ∈ {1, 2}`,
//! records which comultiplication joins factor `m` to factor `m + 1`, with
//! left-adjusted bracketing. Natural vectors carry the right action, dual
//! vectors the left action.
//!
//! Conventions (all checked by the relation suites in [`crate::verify`]):
//!
//! * `Δ₁(F_i) = F_i ⊗ K_{β_i} + 1 ⊗ F_i`,
//!   `Δ₁(E_i) = K_{α_i} ⊗ E_i + E_i ⊗ K_{α_i + β_{i+1}}`;
//! * `Δ₂` is `Δ₁` twisted by the index shift: `Δ₂(F_i) = F_i ⊗ K_{β'_{i-1}} + 1 ⊗ F_i`,
//!   `Δ₂(E_i) = K_{α'_{i-1}} ⊗ E_i + E_i ⊗ K_{(α_{i-1} + β_i)'}`,
//!   where a primed functional satisfies `⟨λ', e_j⟩ = ⟨λ, e_{j-1}⟩`.
//!
//! Evaluating primes at `e_{j+1}` instead breaks the `[E_i, F_i]` commutator and the Hecke
//! linearity; see the `prime_direction_matters` test.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::charges::{neg_one_pow, Residue};
use crate::scalars::{q_sum, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("flavors must be 1 or 2, got {0}")]
    BadFlavor(u8),
    #[error("tuple of length {got} does not fit flavor pattern of length {expected}")]
    Length { got: usize, expected: usize },
    #[error("Hecke position {k} out of range for {d} factors")]
    Position { k: usize, d: usize },
    #[error("cannot parse flavor pattern {0:?}")]
    Parse(String),
}

/// `⟨β_i, e_j⟩`.
pub fn pair_beta(i: i64, j: i64) -> i64 {
    let s = neg_one_pow(j);
    if j == i {
        neg_one_pow(i) * 2
    } else if s * j > s * i {
        neg_one_pow(i) * 4
    } else {
        0
    }
}

/// `⟨α_i, e_j⟩` with `α_i = ε_{i+1} - ε_i`.
pub fn pair_alpha(i: i64, j: i64) -> i64 {
    (j == i + 1) as i64 - (j == i) as i64
}

/// `b_{ij}` for integer indices.
pub fn b_int(i: i64, j: i64) -> i64 {
    if j == i || j == i + 1 {
        -2
    } else {
        4 * (j - i).signum() * neg_one_pow(j - i)
    }
}

/// `b_{ij}` for residues; zero when `i - j` is not an integer.
pub fn b_coeff(i: &Residue, j: &Residue) -> i64 {
    match j.differ_by_int(i) {
        Some(d) => b_int(0, d),
        None => 0,
    }
}

/// `β_{ij}`, the twist in the `q`-commutator `[E_i, F_j]_{β_{ij}}`.
pub fn beta_ij(i: i64, j: i64) -> i64 {
    let d = j - i;
    match d.abs() {
        0 => 0,
        1 => 3 * d,
        _ => -4 * d.signum() * neg_one_pow(d),
    }
}

/// Elements of the weight lattice `X`, evaluated lazily on `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WeightFunctional {
    Beta(i64),
    /// `γ_i = -β_{i+1}`.
    Gamma(i64),
    Alpha(i64),
    /// `⟨λ, e_j⟩ = values[j]`, zero elsewhere.
    Finite(BTreeMap<i64, i64>),
    /// `⟨λ', e_j⟩ = ⟨λ, e_{j-1}⟩`.
    Shifted(Box<WeightFunctional>),
    /// Integer combination `Σ c_k λ_k`.
    Sum(Vec<(i64, WeightFunctional)>),
}

impl WeightFunctional {
    pub fn eval(&self, j: i64) -> i64 {
        match self {
            WeightFunctional::Beta(i) => pair_beta(*i, j),
            WeightFunctional::Gamma(i) => -pair_beta(i + 1, j),
            WeightFunctional::Alpha(i) => pair_alpha(*i, j),
            WeightFunctional::Finite(m) => m.get(&j).copied().unwrap_or(0),
            WeightFunctional::Shifted(f) => f.eval(j - 1),
            WeightFunctional::Sum(v) => v.iter().map(|(c, f)| c * f.eval(j)).sum(),
        }
    }

    /// `⟨λ, α_j^∨⟩` with `α_j^∨ = e_{j+1} - e_j`.
    pub fn pair_coroot(&self, j: i64) -> i64 {
        self.eval(j + 1) - self.eval(j)
    }

    pub fn negated(self) -> Self {
        WeightFunctional::Sum(vec![(-1, self)])
    }

    pub fn shifted(self) -> Self {
        WeightFunctional::Shifted(Box::new(self))
    }

    pub fn plus(self, other: WeightFunctional) -> Self {
        WeightFunctional::Sum(vec![(1, self), (1, other)])
    }

    /// Support, when known to be finite.
    pub fn finite_support(&self) -> Option<Vec<i64>> {
        match self {
            WeightFunctional::Alpha(i) => Some(vec![*i, i + 1]),
            WeightFunctional::Finite(m) => Some(
                m.iter()
                    .filter(|(_, v)| **v != 0)
                    .map(|(k, _)| *k)
                    .collect(),
            ),
            WeightFunctional::Shifted(f) => f
                .finite_support()
                .map(|s| s.into_iter().map(|j| j + 1).collect()),
            _ => None,
        }
    }
}

/// Checks that every connective is 1 or 2.
pub fn validate_flavors(flavors: &[u8]) -> Result<(), TensorError> {
    match flavors.iter().find(|&&l| l != 1 && l != 2) {
        Some(&l) => Err(TensorError::BadFlavor(l)),
        None => Ok(()),
    }
}

/// Parses `"1,2"`; the empty string is the pattern of a single factor.
pub fn parse_flavors(s: &str) -> Result<Vec<u8>, TensorError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let v = t
        .split(',')
        .map(|x| x.trim().parse::<u8>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| TensorError::Parse(s.to_string()))?;
    validate_flavors(&v)?;
    Ok(v)
}

/// All flavor patterns for `d` factors.
pub fn all_flavor_patterns(d: usize) -> Vec<Vec<u8>> {
    let n = d.saturating_sub(1);
    (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|b| if mask >> b & 1 == 1 { 2 } else { 1 })
                .collect()
        })
        .collect()
}

/// A finite linear combination of basis tuples of `V^{⊙ľ}` (or its dual).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorVector {
    flavors: Vec<u8>,
    dual: bool,
    #[serde(serialize_with = "ser_terms")]
    terms: BTreeMap<Vec<i64>, Scalar>,
}

fn ser_terms<S: serde::Serializer>(
    terms: &BTreeMap<Vec<i64>, Scalar>,
    s: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Term<'a> {
        tuple: &'a [i64],
        coeff: &'a Scalar,
    }
    s.collect_seq(terms.iter().map(|(t, c)| Term { tuple: t, coeff: c }))
}

impl TensorVector {
    pub fn zero(flavors: Vec<u8>, dual: bool) -> Result<Self, TensorError> {
        validate_flavors(&flavors)?;
        Ok(Self {
            flavors,
            dual,
            terms: BTreeMap::new(),
        })
    }

    /// The basis vector `v_{i_1} ⊙ … ⊙ v_{i_d}` (or `v^{i_1} ⊙ …`).
    pub fn basis(flavors: Vec<u8>, dual: bool, tuple: Vec<i64>) -> Result<Self, TensorError> {
        let mut v = Self::zero(flavors, dual)?;
        if tuple.len() != v.flavors.len() + 1 {
            return Err(TensorError::Length {
                got: tuple.len(),
                expected: v.flavors.len() + 1,
            });
        }
        v.terms.insert(tuple, Scalar::one());
        Ok(v)
    }

    fn empty_like(&self) -> Self {
        Self {
            flavors: self.flavors.clone(),
            dual: self.dual,
            terms: BTreeMap::new(),
        }
    }

    pub fn flavors(&self) -> &[u8] {
        &self.flavors
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn depth(&self) -> usize {
        self.flavors.len() + 1
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, tuple: &[i64]) -> Scalar {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, tuple: Vec<i64>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(tuple) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut r = self.empty_like();
        if c.is_zero() {
            return r;
        }
        r.terms = self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect();
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (t, c) in &other.terms {
            r.add_term(t.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// `Σ c_k v_k` over vectors of one shape.
    pub fn combine(parts: &[(Scalar, &TensorVector)]) -> Self {
        let mut r = parts[0].1.empty_like();
        for (c, v) in parts {
            for (t, x) in &v.terms {
                r.add_term(t.clone(), x * c);
            }
        }
        r
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let v = if self.dual { "v^" } else { "v_" };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let idx: Vec<String> = t.iter().map(|i| format!("{v}{i}")).collect();
                format!("({c})·{}", idx.join("⊙"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exponent contributed by `K_{β_i}` (flavor 1) or `K_{β'_{i-1}}` (flavor 2)
/// at a factor with index `x`.
#[inline]
fn f_tail(i: i64, l: u8, x: i64) -> i64 {
    if l == 1 {
        pair_beta(i, x)
    } else {
        pair_beta(i - 1, x - 1)
    }
}

/// `K_{α_i}` (flavor 1) or `K_{α'_{i-1}}` (flavor 2).
#[inline]
fn e_head(i: i64, l: u8, x: i64) -> i64 {
    if l == 1 {
        pair_alpha(i, x)
    } else {
        pair_alpha(i - 1, x - 1)
    }
}

/// `K_{α_i + β_{i+1}}` (flavor 1) or `K_{(α_{i-1} + β_i)'}` (flavor 2).
#[inline]
fn e_tail(i: i64, l: u8, x: i64) -> i64 {
    if l == 1 {
        pair_alpha(i, x) + pair_beta(i + 1, x)
    } else {
        pair_alpha(i - 1, x - 1) + pair_beta(i, x - 1)
    }
}

/// The factor weights `(head, tail)` of `Δ_l(E_i)` and `Δ_l(F_i)` as
/// explicit functionals; the operators use the inlined closed forms.
pub fn coproduct_weights(gen: char, i: i64, l: u8) -> (Option<WeightFunctional>, WeightFunctional) {
    use WeightFunctional::*;
    match (gen, l) {
        ('F', 1) => (None, Beta(i)),
        ('F', _) => (None, Beta(i - 1).shifted()),
        ('E', 1) => (Some(Alpha(i)), Alpha(i).plus(Gamma(i).negated())),
        ('E', _) => (
            Some(Alpha(i - 1).shifted()),
            Alpha(i - 1).plus(Gamma(i - 1).negated()).shifted(),
        ),
        _ => panic!("generator must be 'E' or 'F'"),
    }
}

/// Moves the single factor at `p` from `from` to `to`, collecting the
/// `K`-exponents on the other factors.
fn move_factor<H, T>(v: &TensorVector, from: i64, to: i64, head: H, tail: T) -> TensorVector
where
    H: Fn(u8, i64) -> i64,
    T: Fn(u8, i64) -> i64,
{
    let mut r = v.empty_like();
    for (t, c) in &v.terms {
        for p in 0..t.len() {
            if t[p] != from {
                continue;
            }
            let mut e = 0;
            if p > 0 {
                let l = v.flavors[p - 1];
                e += t[..p].iter().map(|&x| head(l, x)).sum::<i64>();
            }
            for (q, &x) in t.iter().enumerate().skip(p + 1) {
                e += tail(v.flavors[q - 1], x);
            }
            let mut nt = t.clone();
            nt[p] = to;
            r.add_term(nt, c.shift(e));
        }
    }
    r
}

/// `F_i`: right action `v_j F_i = δ_{ij} v_{j+1}` on natural vectors, left
/// action `F_i v^j = δ_{i+1,j} v^i` on dual vectors.
pub fn apply_f(i: i64, v: &TensorVector) -> TensorVector {
    if v.dual {
        move_factor(v, i + 1, i, |_, _| 0, |l, x| f_tail(i, l, x))
    } else {
        move_factor(v, i, i + 1, |_, _| 0, |l, x| f_tail(i, l, x))
    }
}

/// `E_i`: right action `v_j E_i = δ_{i+1,j} v_{j-1}` on natural vectors,
/// left action `E_i v^j = δ_{ij} v^{i+1}` on dual vectors.
pub fn apply_e(i: i64, v: &TensorVector) -> TensorVector {
    let (from, to) = if v.dual { (i, i + 1) } else { (i + 1, i) };
    move_factor(v, from, to, |l, x| e_head(i, l, x), |l, x| e_tail(i, l, x))
}

/// `K_λ`, acting diagonally on every factor.
pub fn apply_k(lam: &WeightFunctional, v: &TensorVector) -> TensorVector {
    apply_k_fn(|x| lam.eval(x), v)
}

fn apply_k_fn<W: Fn(i64) -> i64>(w: W, v: &TensorVector) -> TensorVector {
    let mut r = v.empty_like();
    r.terms = v
        .terms
        .iter()
        .map(|(t, c)| (t.clone(), c.shift(t.iter().map(|&x| w(x)).sum())))
        .collect();
    r
}

/// Exponent of the Hecke coefficient `a_{ij}` for connective flavor `l`.
pub fn hecke_a_exp(i: i64, j: i64, l: u8) -> i64 {
    let i_odd = (i - l as i64).rem_euclid(2) == 1;
    let j_odd = (j - l as i64).rem_euclid(2) == 1;
    if i >= j {
        if i_odd && !j_odd {
            3
        } else {
            -1
        }
    } else if !i_odd && j_odd {
        -3
    } else {
        1
    }
}

/// `H` at positions `(k, k+1)`, 1-based, on natural vectors; `H*` on dual vectors:
/// `x_i ⊙ x_j ↦ a x_j ⊙ x_i + δ_{i<j}(q^{-1} - q) x_i ⊙ x_j`
/// with `a = a_{ij}`, resp. `a_{ji}`, taken for `l = l_k`.
pub fn apply_h(k: usize, v: &TensorVector) -> Result<TensorVector, TensorError> {
    let d = v.depth();
    if k == 0 || k >= d {
        return Err(TensorError::Position { k, d });
    }
    let l = v.flavors[k - 1];
    let corr = q_sum(&[-1]) - q_sum(&[1]);
    let mut r = v.empty_like();
    for (t, c) in &v.terms {
        let (i, j) = (t[k - 1], t[k]);
        let a = if v.dual {
            hecke_a_exp(j, i, l)
        } else {
            hecke_a_exp(i, j, l)
        };
        let mut sw = t.clone();
        sw.swap(k - 1, k);
        r.add_term(sw, c.shift(a));
        if i < j {
            r.add_term(t.clone(), c * &corr);
        }
    }
    Ok(r)
}

/// Image of the coideal generator `𝓔_i ↦ F_i + q^{ε-1} E_{i-1} K_{-α_{i-1}}`
/// acting on the right of natural vectors.
pub fn coideal_apply(i: i64, eps: i64, v: &TensorVector) -> TensorVector {
    assert!(!v.dual, "coideal_apply acts on natural vectors");
    let f = apply_f(i, v);
    let e = apply_e(i - 1, v);
    let ek = apply_k_fn(|x| -pair_alpha(i - 1, x), &e);
    f.add(&ek.scale(&Scalar::q_pow(eps - 1)))
}

/// Right action of `𝓔_i` on dual vectors: the left action of
/// `q^{-ε}(F_{i+1} + q^{ε-1} E_i K_{-α_i})`.
pub fn dual_coideal_apply(i: i64, eps: i64, v: &TensorVector) -> TensorVector {
    assert!(v.dual, "dual_coideal_apply acts on dual vectors");
    let f = apply_f(i + 1, v);
    let k = apply_k_fn(|x| -pair_alpha(i, x), v);
    let e = apply_e(i, &k);
    f.add(&e.scale(&Scalar::q_pow(eps - 1)))
        .scale(&Scalar::q_pow(-eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qint;

    fn nat(fl: &[u8], t: &[i64]) -> TensorVector {
        TensorVector::basis(fl.to_vec(), false, t.to_vec()).unwrap()
    }

    fn dual(fl: &[u8], t: &[i64]) -> TensorVector {
        TensorVector::basis(fl.to_vec(), true, t.to_vec()).unwrap()
    }

    #[test]
    fn beta_values() {
        assert_eq!(pair_beta(0, 0), 2);
        assert_eq!(pair_beta(0, 2), 4);
        assert_eq!(pair_beta(1, 1), -2);
        // j = 0 is even, so the test is 0 > 1, which fails
        assert_eq!(pair_beta(1, 0), 0);
        assert_eq!(pair_beta(1, 2), -4);
    }

    #[test]
    fn b_values() {
        let d = Residue::symbolic(1, 0);
        assert_eq!(b_coeff(&d, &d.plus(1)), -2);
        assert_eq!(b_coeff(&d, &d), -2);
        assert_eq!(b_coeff(&Residue::int(0), &Residue::int(2)), 4);
        assert_eq!(b_coeff(&d, &Residue::symbolic(2, 0)), 0);
        assert_eq!(b_int(2, 0), -4);
        assert_eq!(b_int(0, 3), -4);
    }

    #[test]
    fn single_factor_actions() {
        assert_eq!(apply_f(0, &nat(&[], &[0])), nat(&[], &[1]));
        assert_eq!(apply_e(0, &nat(&[], &[1])), nat(&[], &[0]));
        assert!(apply_f(1, &nat(&[], &[0])).is_zero());
        assert_eq!(apply_f(0, &dual(&[], &[1])), dual(&[], &[0]));
        assert_eq!(apply_e(0, &dual(&[], &[0])), dual(&[], &[1]));
    }

    #[test]
    fn two_factor_f() {
        let v = apply_f(0, &nat(&[1], &[0, 0]));
        let mut w = nat(&[1], &[1, 0]).scale(&Scalar::q_pow(2));
        w.add_term(vec![0, 1], Scalar::one());
        assert_eq!(v, w);
    }

    #[test]
    fn hecke_examples() {
        for l in [1, 2] {
            for i in -3..3 {
                let h = apply_h(1, &nat(&[l], &[i, i])).unwrap();
                assert_eq!(h, nat(&[l], &[i, i]).scale(&Scalar::q_pow(-1)));
            }
        }
        // l = 1, i = 1 ≥ j = 0: 1 - 1 is even, so a_{10} = q^{-1}
        let h = apply_h(1, &nat(&[1], &[1, 0])).unwrap();
        assert_eq!(h, nat(&[1], &[0, 1]).scale(&Scalar::q_pow(-1)));
        let h = apply_h(1, &nat(&[1], &[0, 1])).unwrap();
        let mut w = nat(&[1], &[1, 0]).scale(&Scalar::q_pow(1));
        w.add_term(vec![0, 1], q_sum(&[-1]) - q_sum(&[1]));
        assert_eq!(h, w);
        assert!(apply_h(2, &nat(&[1], &[0, 1])).is_err());
    }

    #[test]
    fn hecke_coefficients_are_inverse() {
        for l in [1, 2] {
            for i in -5..5 {
                for j in -5..5 {
                    let s = hecke_a_exp(i, j, l) + hecke_a_exp(j, i, l);
                    assert_eq!(s, if i == j { -2 } else { 0 }, "{i} {j} {l}");
                }
            }
        }
    }

    #[test]
    fn coideal_single_factor() {
        for eps in [1, -1] {
            let v = coideal_apply(0, eps, &nat(&[], &[0]));
            let mut w = nat(&[], &[1]);
            w.add_term(vec![-1], Scalar::q_pow(eps));
            assert_eq!(v, w);
            assert!(coideal_apply(1, eps, &nat(&[], &[0])).is_zero());
            let v = dual_coideal_apply(0, eps, &dual(&[], &[2]));
            assert_eq!(v, dual(&[], &[1]).scale(&Scalar::q_pow(-eps)));
            let v = dual_coideal_apply(0, eps, &dual(&[], &[0]));
            assert_eq!(v, dual(&[], &[1]));
        }
    }

    #[test]
    fn coproduct_weights_match_closed_forms() {
        for i in -4..4 {
            for l in [1, 2] {
                let (_, f) = coproduct_weights('F', i, l);
                let (h, t) = coproduct_weights('E', i, l);
                let h = h.unwrap();
                for x in -8..8 {
                    assert_eq!(f.eval(x), f_tail(i, l, x));
                    assert_eq!(h.eval(x), e_head(i, l, x));
                    assert_eq!(t.eval(x), e_tail(i, l, x));
                }
            }
        }
    }

    #[test]
    fn u3_on_one_factor() {
        for i in -3..3 {
            for k in -4..4 {
                let v = nat(&[], &[k]);
                let comm = apply_f(i, &apply_e(i, &v)).sub(&apply_e(i, &apply_f(i, &v)));
                let n = pair_alpha(i, k);
                assert_eq!(comm, v.scale(&qint(n)));
            }
        }
    }

    #[test]
    fn prime_direction_matters() {
        // The two-factor [E_i, F_i] check, with primes evaluated at e_{j+1}.
        let bad_f_tail = |i: i64, l: u8, x: i64| {
            if l == 1 {
                pair_beta(i, x)
            } else {
                pair_beta(i - 1, x + 1)
            }
        };
        let mut failures = 0;
        for a in -3..=3 {
            for b in -3..=3 {
                for i in -3..3 {
                    let v = nat(&[2], &[a, b]);
                    let fe = apply_f_with(i, &apply_e(i, &v), bad_f_tail);
                    let ef = apply_e(i, &apply_f_with(i, &v, bad_f_tail));
                    let n = pair_alpha(i, a) + pair_alpha(i, b);
                    if fe.sub(&ef) != v.scale(&qint(n)) {
                        failures += 1;
                    }
                }
            }
        }
        assert!(failures > 0);
    }

    fn apply_f_with(i: i64, v: &TensorVector, tail: impl Fn(i64, u8, i64) -> i64) -> TensorVector {
        move_factor(v, i, i + 1, |_, _| 0, |l, x| tail(i, l, x))
    }

    #[test]
    fn flavor_parsing() {
        assert_eq!(parse_flavors("1,2").unwrap(), vec![1, 2]);
        assert_eq!(parse_flavors("").unwrap(), Vec::<u8>::new());
        assert!(parse_flavors("1,3").is_err());
        assert_eq!(all_flavor_patterns(3).len(), 4);
        assert_eq!(all_flavor_patterns(1), vec![Vec::<u8>::new()]);
    }
}
