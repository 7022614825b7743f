//! Exact single-variable Laurent polynomials over arbitrary-precision integers.
//!
//! The polynomial is stored sparsely as a map from exponent to coefficient,
//! with the canonical-form invariant that no stored coefficient is zero.
//! Coefficients are `BigInt`: bracket polynomials of cabled diagrams overflow
//! machine integers, and every downstream check is equality-based.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LaurentError;

/// A Laurent polynomial `Σ c_e · A^e` with integer coefficients.
///
/// The variable is written `A` throughout; after the q-substitution the same
/// type holds polynomials in `q`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::mono(1, 0)
    }

    /// The monomial `coeff · A^exp`. A zero coefficient yields the zero polynomial.
    pub fn mono(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The loop value `δ = −A² − A⁻²`: the factor a closed circle contributes
    /// to the bracket state sum.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficient of `A^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `(mindeg, maxdeg)`: extreme exponents carrying nonzero coefficients.
    /// `None` for the zero polynomial, which has no degree; callers branch.
    pub fn degree_bounds(&self) -> Option<(i64, i64)> {
        let min = *self.terms.keys().next()?;
        let max = *self.terms.keys().next_back()?;
        Some((min, max))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degree_bounds().map(|(lo, _)| lo)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.degree_bounds().map(|(_, hi)| hi)
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by the monomial `coeff · A^exp` (fast path used heavily by the
    /// evaluation engines).
    pub fn mul_mono(&self, coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e + exp, v * &c))
                .collect(),
        }
    }

    /// Substitute `A ↦ A⁻¹` (negate every exponent). Mirror images of
    /// diagrams transform the bracket this way.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact division: returns `r` with `r·q == self`, or `NonDivisible` when
    /// no exact quotient exists. Division by a monomial always succeeds.
    pub fn divide_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if q.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (pmin, _pmax) = self.degree_bounds().unwrap();
        let (qmin, qmax) = q.degree_bounds().unwrap();
        let quot_min = pmin - qmin;
        let q_lead = q.terms.get(&qmax).unwrap();
        let mut quotient = LaurentPoly::zero();
        let mut rem = self.clone();
        while let Some((_, rmax)) = rem.degree_bounds() {
            let step_exp = rmax - qmax;
            if step_exp < quot_min {
                return Err(LaurentError::NonDivisible);
            }
            let r_lead = rem.terms.get(&rmax).unwrap();
            let (step_coeff, residue) = num_integer::div_rem(r_lead.clone(), q_lead.clone());
            if !residue.is_zero() {
                return Err(LaurentError::NonDivisible);
            }
            for (&e, c) in &q.terms {
                rem.add_term(e + step_exp, -(c * &step_coeff));
            }
            quotient.add_term(step_exp, step_coeff);
        }
        Ok(quotient)
    }

    /// Substitute `q := A⁻⁴`: the term `c·A^e` becomes `c·q^(−e/4)`.
    /// Every exponent must be divisible by 4; a violation means the input is
    /// not a knot invariant of the expected form.
    pub fn substitute_q(&self) -> Result<LaurentPoly, LaurentError> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e.rem_euclid(4) != 0 {
                return Err(LaurentError::NotDivisibleBy4(e));
            }
            terms.insert(-e / 4, c.clone());
        }
        Ok(LaurentPoly { terms })
    }

    /// Serialized form: `[exponent, coefficient-as-decimal-string]` pairs in
    /// ascending exponent order, as embedded in all JSON reports.
    pub fn to_term_list(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect()
    }

    /// Render with an explicit variable name, descending exponents.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_one = mag == &1u32.into();
            if e == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !coeff_one {
                    out.push_str(&mag.to_string());
                }
                out.push_str(var);
                if e != 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("A"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TermsVisitor;
        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient-string] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((e, c)) = seq.next_element::<(i64, String)>()? {
                    let coeff: BigInt = c
                        .parse()
                        .map_err(|_| serde::de::Error::custom("bad coefficient"))?;
                    p.add_term(e, coeff);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_seq(TermsVisitor)
    }
}
