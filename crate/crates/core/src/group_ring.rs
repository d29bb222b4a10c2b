//! Exact arithmetic in the group ring ℚ[S_r].
//!
//! Elements are formal sums Σ a(p)·p with rational coefficients, stored as a
//! sorted map so that iteration, equality and serialization are all in the
//! canonical lexicographic term order. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::AlgebraError;
use crate::perm::Permutation;
use crate::rational::{rat, rat_display, rat_int, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupRingElement {
    /// The zero element of ℚ[S_r].
    pub fn zero(degree: usize) -> Self {
        GroupRingElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The ring unit δ_id.
    pub fn unit(degree: usize) -> Self {
        Self::single(Permutation::identity(degree), rat_int(1))
    }

    /// One term c·p.
    pub fn single(p: Permutation, c: Rational) -> Self {
        let mut e = Self::zero(p.degree());
        e.add_term(p, c);
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    /// Adds c·p in place, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        assert_eq!(p.degree(), self.degree, "term degree mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.check_degree(rhs)?;
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.add(&rhs.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> GroupRingElement {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupRingElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, a)| (p.clone(), a * c))
                .collect(),
        }
    }

    /// Convolution product: coefficient of s is Σ_{p∘q=s} a(p)·b(q).
    pub fn ring_multiply(&self, rhs: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.check_degree(rhs)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in self.terms() {
            for (q, b) in rhs.terms() {
                out.add_term(p.compose(q)?, a * b);
            }
        }
        Ok(out)
    }

    /// The star operator: Σ a(p)·p ↦ Σ a(p)·p⁻¹.
    pub fn star(&self) -> GroupRingElement {
        let mut out = Self::zero(self.degree);
        for (p, a) in self.terms() {
            out.add_term(p.inverse(), a.clone());
        }
        out
    }

    /// Pushes every permutation through the block embedding
    /// `(ι s)(k) = Δ + s(k − Δ)` for `Δ < k ≤ Δ + degree`, identity elsewhere.
    pub fn embed(&self, target_degree: usize, offset: usize) -> Result<GroupRingElement, AlgebraError> {
        if offset + self.degree > target_degree {
            return Err(AlgebraError::EmbedOutOfRange {
                offset,
                degree: self.degree,
                target: target_degree,
            });
        }
        let mut out = Self::zero(target_degree);
        for (p, a) in self.terms() {
            let images: Vec<usize> = (1..=target_degree)
                .map(|k| {
                    if k > offset && k <= offset + self.degree {
                        offset + p.image(k - offset)
                    } else {
                        k
                    }
                })
                .collect();
            out.add_term(Permutation::from_images(&images)?, a.clone());
        }
        Ok(out)
    }

    fn check_degree(&self, rhs: &GroupRingElement) -> Result<(), AlgebraError> {
        if self.degree != rhs.degree {
            return Err(AlgebraError::DegreeMismatch {
                expected: self.degree,
                got: rhs.degree,
            });
        }
        Ok(())
    }

    /// Σ_{p∈S_r} sign(p)·p.
    pub fn alternating_sum(degree: usize) -> Self {
        let mut e = Self::zero(degree);
        for p in Permutation::all(degree) {
            let s = rat_int(p.sign() as i64);
            e.add_term(p, s);
        }
        e
    }
}

/// The named degree-3 idempotents and the families indexed by ν.
pub mod named {
    use super::*;

    fn term(images: &[usize]) -> Permutation {
        Permutation::from_images(images).expect("hard-coded permutation")
    }

    /// ζ_ν = (1/3){ [1,2,3] + ν[1,3,2] + (1−ν)[2,1,3] − ν[2,3,1] + (−1+ν)[3,1,2] − [3,2,1] }.
    pub fn zeta(nu: &Rational) -> GroupRingElement {
        let third = rat(1, 3);
        let mut e = GroupRingElement::zero(3);
        e.add_term(term(&[1, 2, 3]), &third * rat_int(1));
        e.add_term(term(&[1, 3, 2]), &third * nu);
        e.add_term(term(&[2, 1, 3]), &third * (rat_int(1) - nu));
        e.add_term(term(&[2, 3, 1]), &third * -nu);
        e.add_term(term(&[3, 1, 2]), &third * (nu - rat_int(1)));
        e.add_term(term(&[3, 2, 1]), &third * rat_int(-1));
        e
    }

    /// η = (1/3){ [1,2,3] − [2,1,3] − [2,3,1] + [3,2,1] }.
    pub fn eta() -> GroupRingElement {
        let third = rat(1, 3);
        let mut e = GroupRingElement::zero(3);
        e.add_term(term(&[1, 2, 3]), third.clone());
        e.add_term(term(&[2, 1, 3]), -third.clone());
        e.add_term(term(&[2, 3, 1]), -third.clone());
        e.add_term(term(&[3, 2, 1]), third);
        e
    }

    /// ρ = (1/2){ id − (2 3) } − (1/6) Σ sign(p)·p.
    pub fn rho() -> GroupRingElement {
        let mut e = GroupRingElement::zero(3);
        e.add_term(term(&[1, 2, 3]), rat(1, 2));
        e.add_term(term(&[1, 3, 2]), rat(-1, 2));
        let alt = GroupRingElement::alternating_sum(3).scale(&rat(-1, 6));
        e.add(&alt).expect("degree 3")
    }

    /// f₀ = (1/2){ id − (1 3) } − (1/6) Σ sign(p)·p.
    pub fn f0() -> GroupRingElement {
        let mut e = GroupRingElement::zero(3);
        e.add_term(term(&[1, 2, 3]), rat(1, 2));
        e.add_term(term(&[3, 2, 1]), rat(-1, 2));
        let alt = GroupRingElement::alternating_sum(3).scale(&rat(-1, 6));
        e.add(&alt).expect("degree 3")
    }

    /// Looks up a named element: `f0`, `eta`, `rho`, or `zeta(ν)` via the
    /// ν argument.
    pub fn build_named(name: &str, nu: Option<&Rational>) -> Result<GroupRingElement, AlgebraError> {
        match name {
            "f0" => Ok(f0()),
            "eta" => Ok(eta()),
            "rho" => Ok(rho()),
            "zeta" => {
                let nu = nu.ok_or_else(|| {
                    AlgebraError::UnknownName("zeta requires a ν argument".into())
                })?;
                Ok(zeta(nu))
            }
            other => Err(AlgebraError::UnknownName(other.to_string())),
        }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{}·{p}", rat_display(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Vec<u8>,
    num: String,
    den: String,
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(p, c)| TermRepr {
                perm: p.clone().into(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        let mut s = serializer.serialize_struct("GroupRingElement", 2)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for GroupRingElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            degree: usize,
            terms: Vec<TermRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut e = GroupRingElement::zero(repr.degree);
        for t in repr.terms {
            let p = Permutation::try_from(t.perm).map_err(serde::de::Error::custom)?;
            if p.degree() != repr.degree {
                return Err(serde::de::Error::custom("term degree mismatch"));
            }
            let num = t.num.parse().map_err(serde::de::Error::custom)?;
            let den = t.den.parse().map_err(serde::de::Error::custom)?;
            e.add_term(p, Rational::new(num, den));
        }
        Ok(e)
    }
}
