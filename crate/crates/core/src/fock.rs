//! Fock and dual Fock spaces as semiinfinite q-wedges.
//!
//! A partition `λ` of charge `δ` is the wedge of `v_{λ_1+δ}, v_{λ_2-1+δ}, …`.
//! Actions are computed on a truncation to `d` factors with the alternating
//! flavor pattern `(2, 1, 2, 1, …)`, straightened back to strictly decreasing
//! tuples, and checked for stability against depth `d + 2`.
//!
//! Indices are stored as offsets from the charge, so the same code serves
//! integer, rational and symbolic charges.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::charges::{ChargeVector, Residue};
use crate::partitions::{Multipartition, Partition};
use crate::scalars::{q_sum, Scalar, ScalarError};
use crate::tensor::{coideal_apply, dual_coideal_apply, hecke_a_exp, TensorVector};

/// Truncation depth is `|λ| + DEPTH_MARGIN`.
pub const DEPTH_MARGIN: usize = 4;
/// Give up if no two consecutive depths agree below `|λ| + DEPTH_CAP`.
pub const DEPTH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FockError {
    #[error("generator {i} is not in the coset of the charge {charge}")]
    Coset { i: String, charge: String },
    #[error("action of offset {i} on {partition} is not stable up to depth {depth}")]
    Unstable {
        partition: Partition,
        i: i64,
        depth: usize,
    },
    #[error("coefficient {coeff} at {partition} is not a signed power of q")]
    NonMonomial { partition: Partition, coeff: String },
    #[error("charges differ: {0} and {1}")]
    ChargeMismatch(String, String),
    #[error("epsilon must be 1 or -1, got {0}")]
    Epsilon(i64),
    #[error("leading coefficient vanished while inverting at {0}")]
    ZeroLeading(Partition),
    #[error("recursion reached {mu} which is not smaller than {lam}")]
    NotTriangular { lam: Partition, mu: Partition },
    #[error("straightening needs the alternating pattern (2,1,2,…)")]
    Pattern,
    #[error("image of {lam} is not a multiple of {expected}")]
    NotTranspose { lam: Partition, expected: Partition },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn check_eps(eps: i64) -> Result<(), FockError> {
    if eps == 1 || eps == -1 {
        Ok(())
    } else {
        Err(FockError::Epsilon(eps))
    }
}

/// `(λ_1 + δ, λ_2 - 1 + δ, …, λ_d - d + 1 + δ)`, or `None` if `d < ℓ(λ)`.
pub fn wedge_indices(lam: &Partition, delta: i64, d: usize) -> Option<Vec<i64>> {
    (d >= lam.len()).then(|| {
        (1..=d)
            .map(|j| lam.row(j) as i64 + 1 - j as i64 + delta)
            .collect()
    })
}

/// Inverse of [`wedge_indices`] at charge 0; `None` when the tuple is not a
/// truncated wedge of a partition.
pub fn wedge_partition(t: &[i64]) -> Option<Partition> {
    if t.windows(2).any(|w| w[0] <= w[1]) {
        return None;
    }
    let parts: Vec<i64> = t.iter().enumerate().map(|(j, x)| x + j as i64).collect();
    if parts.last().is_some_and(|&x| x < 0) {
        return None;
    }
    Some(Partition::from_trusted(
        parts.into_iter().map(|x| x as usize).collect(),
    ))
}

/// The flavor pattern `(2, 1, 2, …)` of `∧^d V`.
pub fn wedge_pattern(d: usize) -> Vec<u8> {
    (0..d.saturating_sub(1))
        .map(|k| if k % 2 == 0 { 2 } else { 1 })
        .collect()
}

/// Rewrites a tensor in the strictly decreasing wedge basis.
///
/// With `A` the q-antisymmetrizer, `A H_k = -q A`, so at an ascending pair
/// `x_i ⊙ x_j` (`i < j`) one may replace the tensor by `-q a_{ij}` times the
/// swapped one (`a_{ji}` for dual vectors), and equal neighbours give zero.
pub fn straighten(v: &TensorVector) -> Result<TensorVector, FockError> {
    if v.flavors() != wedge_pattern(v.depth()).as_slice() {
        return Err(FockError::Pattern);
    }
    let fl = v.flavors();
    let mut out = TensorVector::zero(fl.to_vec(), v.is_dual()).expect("valid pattern");
    let mut stack: Vec<(Vec<i64>, Scalar)> = v
        .terms()
        .iter()
        .map(|(t, c)| (t.clone(), c.clone()))
        .collect();
    'next: while let Some((mut t, mut c)) = stack.pop() {
        loop {
            let mut swapped = false;
            for k in 0..t.len().saturating_sub(1) {
                let (i, j) = (t[k], t[k + 1]);
                if i == j {
                    continue 'next;
                }
                if i < j {
                    let a = if v.is_dual() {
                        hecke_a_exp(j, i, fl[k])
                    } else {
                        hecke_a_exp(i, j, fl[k])
                    };
                    c = -c.shift(a + 1);
                    t.swap(k, k + 1);
                    swapped = true;
                    break;
                }
            }
            if !swapped {
                out.add_term(t, c);
                continue 'next;
            }
        }
    }
    Ok(out)
}

fn depth_for(lam: &Partition) -> usize {
    lam.size() + DEPTH_MARGIN
}

/// The action of `𝓔_{δ+i}` on `v_λ` (or `v^λ`) at a fixed truncation depth.
pub fn act_basis_at_depth(
    lam: &Partition,
    i: i64,
    eps: i64,
    dual: bool,
    d: usize,
) -> BTreeMap<Partition, Scalar> {
    let t = wedge_indices(lam, 0, d).expect("depth exceeds the length");
    let v = TensorVector::basis(wedge_pattern(d), dual, t).expect("valid pattern");
    let acted = if dual {
        dual_coideal_apply(i, eps, &v)
    } else {
        coideal_apply(i, eps, &v)
    };
    let s = straighten(&acted).expect("wedge pattern");
    s.terms()
        .iter()
        .filter_map(|(t, c)| wedge_partition(t).map(|p| (p, c.clone())))
        .collect()
}

/// The action on a basis vector under the depth policy, with every
/// coefficient checked to be `±q^k`.
pub fn act_basis(
    lam: &Partition,
    i: i64,
    eps: i64,
    dual: bool,
) -> Result<BTreeMap<Partition, Scalar>, FockError> {
    check_eps(eps)?;
    let mut d = depth_for(lam);
    let mut prev = act_basis_at_depth(lam, i, eps, dual, d);
    loop {
        let next = act_basis_at_depth(lam, i, eps, dual, d + 2);
        if next == prev {
            break;
        }
        d += 2;
        if d > lam.size() + DEPTH_CAP {
            return Err(FockError::Unstable {
                partition: lam.clone(),
                i,
                depth: d,
            });
        }
        prev = next;
    }
    for (mu, c) in &prev {
        if c.as_signed_monomial().is_none() {
            return Err(FockError::NonMonomial {
                partition: mu.clone(),
                coeff: c.to_string(),
            });
        }
    }
    Ok(prev)
}

macro_rules! wedge_vector {
    ($name:ident, $dual:expr) => {
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name {
            charge: Residue,
            eps: i64,
            terms: BTreeMap<Partition, Scalar>,
        }

        impl $name {
            pub fn zero(charge: Residue, eps: i64) -> Self {
                Self {
                    charge,
                    eps,
                    terms: BTreeMap::new(),
                }
            }

            pub fn basis(lam: Partition, charge: Residue, eps: i64) -> Self {
                let mut v = Self::zero(charge, eps);
                v.terms.insert(lam, Scalar::one());
                v
            }

            /// The vacuum of charge `charge`.
            pub fn vacuum_with(charge: Residue, eps: i64) -> Self {
                Self::basis(Partition::empty(), charge, eps)
            }

            /// The vacuum of charge 0 with `ε = 1`.
            pub fn vacuum() -> Self {
                Self::vacuum_with(Residue::int(0), 1)
            }

            pub fn charge(&self) -> &Residue {
                &self.charge
            }

            pub fn eps(&self) -> i64 {
                self.eps
            }

            pub fn terms(&self) -> &BTreeMap<Partition, Scalar> {
                &self.terms
            }

            pub fn coeff(&self, lam: &Partition) -> Scalar {
                self.terms.get(lam).cloned().unwrap_or_default()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn add_term(&mut self, lam: Partition, c: Scalar) {
                if c.is_zero() {
                    return;
                }
                let slot = self.terms.entry(lam.clone()).or_default();
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&lam);
                }
            }

            pub fn scale(&self, c: &Scalar) -> Self {
                let mut r = Self::zero(self.charge.clone(), self.eps);
                for (lam, x) in &self.terms {
                    r.add_term(lam.clone(), x * c);
                }
                r
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut r = self.clone();
                for (lam, c) in &other.terms {
                    r.add_term(lam.clone(), c.clone());
                }
                r
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.add(&other.scale(&Scalar::from_int(-1)))
            }

            /// Right action of `𝓔_{δ+i}`.
            pub fn act_offset(&self, i: i64) -> Result<Self, FockError> {
                let mut r = Self::zero(self.charge.clone(), self.eps);
                for (lam, c) in &self.terms {
                    for (mu, x) in act_basis(lam, i, self.eps, $dual)? {
                        r.add_term(mu, &x * c);
                    }
                }
                Ok(r)
            }

            /// Right action of `𝓔_i`; `i` must lie in `δ + ℤ`.
            pub fn act(&self, i: &Residue) -> Result<Self, FockError> {
                let n = i
                    .differ_by_int(&self.charge)
                    .ok_or_else(|| FockError::Coset {
                        i: i.to_string(),
                        charge: self.charge.to_string(),
                    })?;
                self.act_offset(n)
            }

            /// Left-to-right fold of [`Self::act_offset`].
            pub fn act_word_offsets(&self, word: &[i64]) -> Result<Self, FockError> {
                word.iter().try_fold(self.clone(), |v, &i| v.act_offset(i))
            }

            pub fn act_word(&self, word: &[Residue]) -> Result<Self, FockError> {
                word.iter().try_fold(self.clone(), |v, i| v.act(i))
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Term<'a> {
                    partition: &'a Partition,
                    coeff: &'a Scalar,
                }
                let terms: Vec<Term> = self
                    .terms
                    .iter()
                    .map(|(partition, coeff)| Term { partition, coeff })
                    .collect();
                let mut st = s.serialize_struct(stringify!($name), 4)?;
                st.serialize_field("dual", &$dual)?;
                st.serialize_field("charge", &self.charge)?;
                st.serialize_field("epsilon", &self.eps)?;
                st.serialize_field("terms", &terms)?;
                st.end()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.terms.is_empty() {
                    return write!(f, "0");
                }
                let sym = if $dual { "v^" } else { "v_" };
                let parts: Vec<String> = self
                    .terms
                    .iter()
                    .map(|(lam, c)| format!("({c})·{sym}{lam}"))
                    .collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    };
}

wedge_vector!(FockVector, false);
wedge_vector!(DualFockVector, true);

/// `q`-bilinear extension of `(v^λ, v_μ) = δ_{λμ}`.
pub fn pairing(w: &DualFockVector, v: &FockVector) -> Result<Scalar, FockError> {
    if w.charge() != v.charge() {
        return Err(FockError::ChargeMismatch(
            w.charge().to_string(),
            v.charge().to_string(),
        ));
    }
    let mut s = Scalar::zero();
    for (lam, c) in w.terms() {
        if let Some(x) = v.terms().get(lam) {
            s += &(c * x);
        }
    }
    Ok(s)
}

/// Contents `c - r` of `λ` read row by row: the residue word (as offsets)
/// of the canonical tableau, which builds `v_λ` from the vacuum.
pub fn canonical_word(lam: &Partition) -> Vec<i64> {
    lam.cells().map(|(r, c)| c as i64 - r as i64).collect()
}

/// The bar involution `Fock → dual Fock` and its inverse, with memoized
/// images of basis vectors.
///
/// Both maps are `q`-antilinear, send the vacuum to the vacuum and
/// intertwine the actions. Images are found by triangular recursion over
/// `v_∅ · u_λ = c_λ v_λ + (smaller terms)`, with `u_λ` the
/// [`canonical_word`].
#[derive(Debug, Clone)]
pub struct BarInvolution {
    charge: Residue,
    eps: i64,
    forward: HashMap<Partition, DualFockVector>,
    backward: HashMap<Partition, FockVector>,
}

impl BarInvolution {
    pub fn new(charge: Residue, eps: i64) -> Result<Self, FockError> {
        check_eps(eps)?;
        Ok(Self {
            charge,
            eps,
            forward: HashMap::new(),
            backward: HashMap::new(),
        })
    }

    /// `bar(v_λ)`.
    pub fn bar_basis(&mut self, lam: &Partition) -> Result<DualFockVector, FockError> {
        if let Some(v) = self.forward.get(lam) {
            return Ok(v.clone());
        }
        let word = canonical_word(lam);
        let gen = FockVector::vacuum_with(self.charge.clone(), self.eps).act_word_offsets(&word)?;
        let mut acc =
            DualFockVector::vacuum_with(self.charge.clone(), self.eps).act_word_offsets(&word)?;
        let lead = leading(&gen.terms, lam)?;
        for (mu, c) in gen.terms() {
            if mu == lam {
                continue;
            }
            triangular(lam, mu)?;
            let img = self.bar_basis(mu)?;
            acc = acc.sub(&img.scale(&c.bar()));
        }
        let res = acc.scale(&lead.bar().inv()?);
        self.forward.insert(lam.clone(), res.clone());
        Ok(res)
    }

    /// Antilinear extension of [`Self::bar_basis`].
    pub fn bar(&mut self, v: &FockVector) -> Result<DualFockVector, FockError> {
        let mut r = DualFockVector::zero(self.charge.clone(), self.eps);
        for (lam, c) in v.terms() {
            r = r.add(&self.bar_basis(lam)?.scale(&c.bar()));
        }
        Ok(r)
    }

    /// The inverse map on `v^λ`.
    pub fn unbar_basis(&mut self, lam: &Partition) -> Result<FockVector, FockError> {
        if let Some(v) = self.backward.get(lam) {
            return Ok(v.clone());
        }
        let word = canonical_word(lam);
        let gen =
            DualFockVector::vacuum_with(self.charge.clone(), self.eps).act_word_offsets(&word)?;
        let mut acc =
            FockVector::vacuum_with(self.charge.clone(), self.eps).act_word_offsets(&word)?;
        let lead = leading(&gen.terms, lam)?;
        for (mu, c) in gen.terms() {
            if mu == lam {
                continue;
            }
            triangular(lam, mu)?;
            let img = self.unbar_basis(mu)?;
            acc = acc.sub(&img.scale(&c.bar()));
        }
        let res = acc.scale(&lead.bar().inv()?);
        self.backward.insert(lam.clone(), res.clone());
        Ok(res)
    }

    pub fn unbar(&mut self, w: &DualFockVector) -> Result<FockVector, FockError> {
        let mut r = FockVector::zero(self.charge.clone(), self.eps);
        for (lam, c) in w.terms() {
            r = r.add(&self.unbar_basis(lam)?.scale(&c.bar()));
        }
        Ok(r)
    }
}

fn leading(terms: &BTreeMap<Partition, Scalar>, lam: &Partition) -> Result<Scalar, FockError> {
    match terms.get(lam) {
        Some(c) if !c.is_zero() => Ok(c.clone()),
        _ => Err(FockError::ZeroLeading(lam.clone())),
    }
}

fn triangular(lam: &Partition, mu: &Partition) -> Result<(), FockError> {
    if mu.size() < lam.size() {
        Ok(())
    } else {
        Err(FockError::NotTriangular {
            lam: lam.clone(),
            mu: mu.clone(),
        })
    }
}

/// `bar(v_λ)` as a dual Fock vector.
pub fn bar_fock(lam: &Partition, charge: Residue, eps: i64) -> Result<DualFockVector, FockError> {
    BarInvolution::new(charge, eps)?.bar_basis(lam)
}

/// The transpose map `τ: Fock(δ) → dual Fock(-δ)`.
///
/// It is `q`-antilinear, fixes the vacuum and turns the action of `𝓔_{δ+i}`
/// into that of `𝓔_{-δ-i}`. A `q`-linear map with this intertwining property
/// does not exist; the recursion then produces vectors with several terms.
#[derive(Debug, Clone)]
pub struct Transpose {
    charge: Residue,
    eps: i64,
    memo: HashMap<Partition, DualFockVector>,
}

impl Transpose {
    pub fn new(charge: Residue, eps: i64) -> Result<Self, FockError> {
        check_eps(eps)?;
        Ok(Self {
            charge,
            eps,
            memo: HashMap::new(),
        })
    }

    fn target_charge(&self) -> Residue {
        match &self.charge {
            Residue::Concrete(x) => Residue::Concrete(-x),
            // formal charges are renamed rather than negated
            s => s.clone(),
        }
    }

    pub fn tau_basis(&mut self, lam: &Partition) -> Result<DualFockVector, FockError> {
        if let Some(v) = self.memo.get(lam) {
            return Ok(v.clone());
        }
        let word = canonical_word(lam);
        let neg: Vec<i64> = word.iter().map(|x| -x).collect();
        let gen = FockVector::vacuum_with(self.charge.clone(), self.eps).act_word_offsets(&word)?;
        let mut acc =
            DualFockVector::vacuum_with(self.target_charge(), self.eps).act_word_offsets(&neg)?;
        let lead = leading(&gen.terms, lam)?;
        for (mu, c) in gen.terms() {
            if mu == lam {
                continue;
            }
            triangular(lam, mu)?;
            let img = self.tau_basis(mu)?;
            acc = acc.sub(&img.scale(&c.bar()));
        }
        let res = acc.scale(&lead.bar().inv()?);
        self.memo.insert(lam.clone(), res.clone());
        Ok(res)
    }

    /// The exponent `c(λ)` with `τ(v_λ) = q^{c(λ)} v^{λᵗ}`.
    pub fn exponent(&mut self, lam: &Partition) -> Result<i64, FockError> {
        let expected = lam.transpose();
        let img = self.tau_basis(lam)?;
        let not_transpose = || FockError::NotTranspose {
            lam: lam.clone(),
            expected: expected.clone(),
        };
        if img.terms().len() != 1 {
            return Err(not_transpose());
        }
        let c = img.terms().get(&expected).ok_or_else(not_transpose)?;
        match c.as_signed_monomial() {
            Some((1, e)) => Ok(e),
            _ => Err(not_transpose()),
        }
    }
}

pub fn tau_fock(lam: &Partition, charge: Residue, eps: i64) -> Result<DualFockVector, FockError> {
    Transpose::new(charge, eps)?.tau_basis(lam)
}

/// A vector in the level `ℓ` Fock space, spanned by `ℓ`-multipartitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiFockVector {
    charges: ChargeVector,
    eps: i64,
    terms: BTreeMap<Multipartition, Scalar>,
}

impl MultiFockVector {
    pub fn zero(charges: ChargeVector, eps: i64) -> Self {
        Self {
            charges,
            eps,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(lam: Multipartition, charges: ChargeVector, eps: i64) -> Self {
        let mut v = Self::zero(charges, eps);
        v.terms.insert(lam, Scalar::one());
        v
    }

    pub fn vacuum(charges: ChargeVector, eps: i64) -> Self {
        let level = charges.level();
        Self::basis(Multipartition::empty(level), charges, eps)
    }

    pub fn charges(&self) -> &ChargeVector {
        &self.charges
    }

    pub fn terms(&self) -> &BTreeMap<Multipartition, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lam: Multipartition, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lam.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut r = Self::zero(self.charges.clone(), self.eps);
        for (lam, x) in &self.terms {
            r.add_term(lam.clone(), x * c);
        }
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (lam, c) in &other.terms {
            r.add_term(lam.clone(), c.clone());
        }
        r
    }

    /// Acts by the level one action in the component `k` with `i ∈ δ_k + ℤ`,
    /// identically on the others. Gives zero if `i` lies in no such coset.
    pub fn act(&self, i: &Residue) -> Result<Self, FockError> {
        let mut r = Self::zero(self.charges.clone(), self.eps);
        let Some((k, n)) = self.charges.locate(i) else {
            return Ok(r);
        };
        for (lam, c) in &self.terms {
            for (mu, x) in act_basis(lam.component(k), n, self.eps, false)? {
                let mut comps = lam.components().to_vec();
                comps[k - 1] = mu;
                r.add_term(Multipartition::new(comps), &x * c);
            }
        }
        Ok(r)
    }

    pub fn act_word(&self, word: &[Residue]) -> Result<Self, FockError> {
        word.iter().try_fold(self.clone(), |v, i| v.act(i))
    }
}

impl Serialize for MultiFockVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            multipartition: &'a Multipartition,
            coeff: &'a Scalar,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(multipartition, coeff)| Term {
                multipartition,
                coeff,
            })
            .collect();
        let mut st = s.serialize_struct("MultiFockVector", 3)?;
        st.serialize_field("charges", &self.charges)?;
        st.serialize_field("epsilon", &self.eps)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `[2] = q + q^{-1}`, used by the Serre-type relations.
pub(crate) fn two() -> Scalar {
    q_sum(&[1, -1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn single(lam: &str, c: Scalar) -> BTreeMap<Partition, Scalar> {
        BTreeMap::from([(p(lam), c)])
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge_indices(&p(""), 0, 3).unwrap(), vec![0, -1, -2]);
        assert_eq!(wedge_indices(&p("2"), 0, 3).unwrap(), vec![2, -1, -2]);
        assert_eq!(wedge_indices(&p("1,1"), 0, 2).unwrap(), vec![1, 0]);
        assert!(wedge_indices(&p("1,1,1"), 0, 2).is_none());
        for lam in crate::partitions::partitions_up_to(5) {
            let t = wedge_indices(&lam, 0, lam.len() + 3).unwrap();
            assert_eq!(wedge_partition(&t).unwrap(), lam);
        }
    }

    #[test]
    fn straightening_rules() {
        let fl = wedge_pattern(2);
        let v = TensorVector::basis(fl.clone(), false, vec![1, 1]).unwrap();
        assert!(straighten(&v).unwrap().is_zero());
        let v = TensorVector::basis(fl.clone(), false, vec![0, 1]).unwrap();
        let a = hecke_a_exp(0, 1, 2);
        let want = TensorVector::basis(fl.clone(), false, vec![1, 0])
            .unwrap()
            .scale(&Scalar::signed_q_pow(-1, a + 1));
        assert_eq!(straighten(&v).unwrap(), want);
        let v = TensorVector::basis(fl, false, vec![3, 0]).unwrap();
        assert_eq!(straighten(&v).unwrap(), v);
        let bad = TensorVector::basis(vec![1], false, vec![0, 1]).unwrap();
        assert_eq!(straighten(&bad), Err(FockError::Pattern));
    }

    #[test]
    fn vacuum_actions() {
        for eps in [1, -1] {
            assert_eq!(
                act_basis(&p(""), 0, eps, false).unwrap(),
                single("1", Scalar::one())
            );
            for i in [-3, -2, -1, 1, 2, 3] {
                assert!(act_basis(&p(""), i, eps, false).unwrap().is_empty());
                assert!(act_basis(&p(""), i, eps, true).unwrap().is_empty());
            }
            let v = FockVector::vacuum_with(Residue::int(0), eps);
            // E_1 on v_(1) adds a box of content 1 and removes the one of content 0
            let w = v.act_word_offsets(&[0, 1]).unwrap();
            assert_eq!(w.terms().keys().collect::<Vec<_>>(), vec![&p(""), &p("2")]);
            let w = v.act_word_offsets(&[0, -1]).unwrap();
            assert_eq!(w.terms().keys().collect::<Vec<_>>(), vec![&p("1,1")]);
            assert_eq!(v.act_word_offsets(&[]).unwrap(), v);
            let d = DualFockVector::vacuum_with(Residue::int(0), eps)
                .act_offset(0)
                .unwrap();
            assert_eq!(d.terms().keys().collect::<Vec<_>>(), vec![&p("1")]);
        }
    }

    #[test]
    fn squares_act_by_zero() {
        for eps in [1, -1] {
            for lam in crate::partitions::partitions_up_to(4) {
                let v = FockVector::basis(lam.clone(), Residue::int(0), eps);
                for i in -5..=5 {
                    assert!(v.act_word_offsets(&[i, i]).unwrap().is_zero(), "{lam} {i}");
                }
            }
        }
    }

    #[test]
    fn other_charges_shift_indices() {
        let half = Residue::Concrete(crate::scalars::Rational::new(1.into(), 2.into()));
        let v = FockVector::vacuum_with(half.clone(), 1);
        assert!(v.act(&Residue::int(0)).is_err());
        let w = v.act(&half).unwrap().act(&half.plus(1)).unwrap();
        assert_eq!(w.terms().keys().collect::<Vec<_>>(), vec![&p(""), &p("2")]);
        let sym = Residue::symbolic(1, 0);
        let w = FockVector::vacuum_with(sym.clone(), -1).act(&sym).unwrap();
        assert_eq!(w.terms().keys().collect::<Vec<_>>(), vec![&p("1")]);
    }

    #[test]
    fn bar_small_cases() {
        let mut b = BarInvolution::new(Residue::int(0), 1).unwrap();
        assert_eq!(b.bar_basis(&p("")).unwrap(), DualFockVector::vacuum());
        let mut want = DualFockVector::basis(p("2"), Residue::int(0), 1);
        want.add_term(p(""), Scalar::signed_q_pow(-1, -1));
        assert_eq!(b.bar_basis(&p("2")).unwrap(), want);
        let mut want = DualFockVector::basis(p("1,1"), Residue::int(0), 1);
        want.add_term(p(""), Scalar::q_pow(-1));
        assert_eq!(b.bar_basis(&p("1,1")).unwrap(), want);
    }

    #[test]
    fn tau_small_cases() {
        for eps in [1, -1] {
            let mut t = Transpose::new(Residue::int(0), eps).unwrap();
            assert_eq!(t.exponent(&p("")).unwrap(), 0);
            assert_eq!(t.exponent(&p("1")).unwrap(), 0);
            assert!(t.exponent(&p("2")).is_ok());
        }
    }

    #[test]
    fn pairing_basics() {
        let w = DualFockVector::basis(p("1"), Residue::int(0), 1);
        let v = FockVector::basis(p("1"), Residue::int(0), 1);
        assert!(pairing(&w, &v).unwrap().is_one());
        let w = DualFockVector::basis(p("2"), Residue::int(0), 1);
        let v = FockVector::basis(p("1,1"), Residue::int(0), 1);
        assert!(pairing(&w, &v).unwrap().is_zero());
        let v = FockVector::basis(p("1,1"), Residue::int(1), 1);
        assert!(pairing(&w, &v).is_err());
    }

    #[test]
    fn multi_fock_componentwise() {
        let ch = ChargeVector::generic(2);
        let v = MultiFockVector::vacuum(ch.clone(), 1);
        let w = v.act(&Residue::symbolic(2, 0)).unwrap();
        assert_eq!(
            w.terms().keys().collect::<Vec<_>>(),
            vec![&"|1".parse::<Multipartition>().unwrap()]
        );
        assert!(v.act(&Residue::symbolic(1, 5)).unwrap().is_zero());
        assert!(v.act(&Residue::int(0)).unwrap().is_zero());
    }

    #[test]
    fn json_shape() {
        let v = FockVector::basis(p("2,1"), Residue::int(0), 1);
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["terms"][0]["partition"], serde_json::json!([2, 1]));
        assert_eq!(j["charge"], "0");
    }
}
