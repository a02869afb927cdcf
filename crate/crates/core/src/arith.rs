//! Exact arithmetic for multivariate Laurent polynomials over ℚ.
//!
//! The universal value type of the engine is [`LaurentPoly`]: a finite sum
//! of monomials `c · x_1^{e_1} ⋯ x_n^{e_n} · u^m` with `c ∈ ℚ` and integer
//! (possibly negative) exponents. The extra variable `u` stands for
//! `q^{-1/2}`, so `t = q^{-1}` is represented as `u²`; half-integral powers
//! of `q` never require a fractional exponent lattice.
//!
//! Terms are stored in a `BTreeMap` keyed by [`Monomial`] under the
//! lexicographic order on `(u_exponent, x_exponents)`. That single order
//! drives serialization, leading-term selection, and exact division, so
//! every operation is deterministic.
//!
//! [`RationalFn`] is a formal quotient of two Laurent polynomials. It is
//! never reduced to lowest terms; equality is decided by
//! cross-multiplication, which avoids multivariate GCD entirely.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Pow, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use smallvec::SmallVec;

use crate::{Error, Result};

/// Arbitrary-precision rational coefficient. The representation keeps the
/// denominator positive and the fraction reduced after every operation.
pub type Rational = num_rational::BigRational;

/// Shorthand for small integer coefficients.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exponent storage; inline up to rank 6, the largest guarded rank.
pub type ExpVec = SmallVec<[i32; 6]>;

/// A monomial `x_1^{e_1} ⋯ x_n^{e_n} · u^m` of fixed ambient rank `n`.
///
/// The derived ordering is lexicographic on `(u_exponent, x_exponents)`,
/// the canonical term order of the whole engine.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    u_exponent: i32,
    x_exponents: ExpVec,
}

impl Monomial {
    pub fn new(x_exponents: impl Into<ExpVec>, u_exponent: i32) -> Self {
        Monomial {
            u_exponent,
            x_exponents: x_exponents.into(),
        }
    }

    /// The unit monomial of the given rank.
    pub fn one(rank: usize) -> Self {
        Monomial::new(ExpVec::from_elem(0, rank), 0)
    }

    /// `x_i` (0-based variable index).
    pub fn x(rank: usize, i: usize) -> Self {
        let mut e = ExpVec::from_elem(0, rank);
        e[i] = 1;
        Monomial::new(e, 0)
    }

    /// `u^m`.
    pub fn u_power(rank: usize, m: i32) -> Self {
        Monomial::new(ExpVec::from_elem(0, rank), m)
    }

    pub fn rank(&self) -> usize {
        self.x_exponents.len()
    }

    pub fn u_exponent(&self) -> i32 {
        self.u_exponent
    }

    pub fn x_exponents(&self) -> &[i32] {
        &self.x_exponents
    }

    pub fn is_one(&self) -> bool {
        self.u_exponent == 0 && self.x_exponents.iter().all(|&e| e == 0)
    }

    /// Product of monomials: exponent-wise sum.
    pub fn product(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Monomial {
            u_exponent: self.u_exponent + other.u_exponent,
            x_exponents: self
                .x_exponents
                .iter()
                .zip(&other.x_exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiplicative inverse: exponent-wise negation.
    pub fn inverse(&self) -> Self {
        Monomial {
            u_exponent: -self.u_exponent,
            x_exponents: self.x_exponents.iter().map(|e| -e).collect(),
        }
    }

    /// Quotient `self / other`, defined for Laurent monomials always.
    pub fn quotient(&self, other: &Self) -> Self {
        self.product(&other.inverse())
    }

    /// True if `other` divides `self` with nonnegative exponents left over.
    /// Only meaningful for ordinary (nonnegative-exponent) monomials.
    fn divisible_by(&self, other: &Self) -> bool {
        self.u_exponent >= other.u_exponent
            && self
                .x_exponents
                .iter()
                .zip(&other.x_exponents)
                .all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.x_exponents.iter().enumerate() {
            if e != 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
        }
        if self.u_exponent != 0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if self.u_exponent == 1 {
                write!(f, "u")?;
            } else {
                write!(f, "u^{}", self.u_exponent)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// JSON shape of a single term: `{"c": "p/q", "x": [e1,…,en], "u": m}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermRepr {
    pub c: String,
    pub x: Vec<i32>,
    pub u: i32,
}

/// Sparse exact Laurent polynomial in `x_1, …, x_n` and `u`.
///
/// Invariants: no stored coefficient is zero; two polynomials are equal iff
/// their term maps (and ranks) are equal. Iteration order over terms is the
/// canonical lexicographic order on `(u_exponent, x_exponents)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        LaurentPoly::constant(rank, Rational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        let mut p = LaurentPoly::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(rank), c);
        }
        p
    }

    /// The single-term polynomial `c · m`.
    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = LaurentPoly::zero(m.rank());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `x_i` (0-based index).
    pub fn var_x(rank: usize, i: usize) -> Self {
        LaurentPoly::monomial(Monomial::x(rank, i), Rational::one())
    }

    /// The parameter `t = q^{-1}`, i.e. `u²`.
    pub fn t(rank: usize) -> Self {
        LaurentPoly::monomial(Monomial::u_power(rank, 2), Rational::one())
    }

    /// Build from an arbitrary term iterator, merging duplicates and
    /// dropping zero coefficients.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = LaurentPoly::zero(rank);
        for (m, c) in terms {
            debug_assert_eq!(m.rank(), rank);
            p.insert_add(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under the canonical order (`None` for the zero poly).
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            Err(Error::RankMismatch(self.rank, other.rank))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = LaurentPoly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.product(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiply by a single monomial (exponent shift), cheaper than `try_mul`.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.product(m), c.clone()))
                .collect(),
        }
    }

    /// Apply a monomial substitution (e.g. a Weyl-group action on the
    /// x-exponent lattice). The map need not be injective; colliding images
    /// are merged.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> Self {
        let mut out = LaurentPoly::zero(self.rank);
        for (m, c) in &self.terms {
            out.insert_add(f(m), c.clone());
        }
        out
    }

    /// Componentwise minimum of all exponents: the monomial content. Used to
    /// shift Laurent polynomials into ordinary polynomials and to clear
    /// common monomial factors before serialization.
    pub fn content_monomial(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut u = first.u_exponent;
        let mut x: ExpVec = first.x_exponents.clone();
        for m in it {
            u = u.min(m.u_exponent);
            for (acc, &e) in x.iter_mut().zip(m.x_exponents()) {
                *acc = (*acc).min(e);
            }
        }
        Some(Monomial::new(x, u))
    }

    /// Exact quotient `self / divisor`, or `NotDivisible`.
    ///
    /// Both operands are shifted by their monomial content into ordinary
    /// polynomials, then the quotient is built by iterated leading-term
    /// elimination under the canonical order. Leading monomials strictly
    /// decrease in a well-order, so the loop terminates.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_rank(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.rank));
        }
        let shift_a = self.content_monomial().expect("nonzero");
        let shift_b = divisor.content_monomial().expect("nonzero");
        let a = self.mul_monomial(&shift_a.inverse());
        let b = divisor.mul_monomial(&shift_b.inverse());
        let (lt_b_m, lt_b_c) = b.leading_term().expect("nonzero");
        let lt_b_m = lt_b_m.clone();
        let lt_b_c = lt_b_c.clone();

        let mut remainder = a;
        let mut quotient = LaurentPoly::zero(self.rank);
        while let Some((lt_m, lt_c)) = remainder.leading_term() {
            if !lt_m.divisible_by(&lt_b_m) {
                return Err(Error::NotDivisible);
            }
            let factor_m = lt_m.quotient(&lt_b_m);
            let factor_c = lt_c / &lt_b_c;
            let piece = LaurentPoly::monomial(factor_m, factor_c);
            remainder = remainder.try_sub(&piece.try_mul(&b)?)?;
            quotient = quotient.try_add(&piece)?;
        }
        // Undo the content shifts: self/divisor = (a/b) · shift_a/shift_b.
        Ok(quotient.mul_monomial(&shift_a.quotient(&shift_b)))
    }

    /// Exact numeric evaluation at `x = x_values`, `u = u_value`.
    pub fn eval_numeric(&self, x_values: &[Rational], u_value: &Rational) -> Result<Rational> {
        if x_values.len() != self.rank {
            return Err(Error::RankMismatch(self.rank, x_values.len()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in x_values.iter().zip(m.x_exponents()) {
                term *= pow_rational(v, e)?;
            }
            term *= pow_rational(u_value, m.u_exponent())?;
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute a rational value for `u`, keeping the x-variables formal.
    /// `value = 0` kills every positive `u` power and errors on negative ones.
    pub fn substitute_u(&self, value: &Rational) -> Result<Self> {
        let mut out = LaurentPoly::zero(self.rank);
        for (m, c) in &self.terms {
            let e = m.u_exponent();
            let factor = pow_rational(value, e)?;
            if factor.is_zero() {
                continue;
            }
            out.insert_add(Monomial::new(ExpVec::from(m.x_exponents()), 0), c * factor);
        }
        Ok(out)
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Canonical term list for serialization.
    pub fn to_term_reprs(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(m, c)| TermRepr {
                c: c.to_string(),
                x: m.x_exponents().to_vec(),
                u: m.u_exponent(),
            })
            .collect()
    }

    /// Rebuild from serialized terms. The rank must be supplied because the
    /// zero polynomial serializes to an empty array.
    pub fn from_term_reprs(rank: usize, reprs: &[TermRepr]) -> Result<Self> {
        let mut p = LaurentPoly::zero(rank);
        for r in reprs {
            if r.x.len() != rank {
                return Err(Error::RankMismatch(rank, r.x.len()));
            }
            let c: Rational = r
                .c
                .parse()
                .map_err(|_| Error::NotDominant(format!("unparseable coefficient {:?}", r.c)))?;
            p.insert_add(Monomial::new(ExpVec::from(r.x.as_slice()), r.u), c);
        }
        Ok(p)
    }
}

/// Exact square root of a nonnegative rational, when it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    let sd = q.denom().sqrt();
    if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

fn pow_rational(base: &Rational, exp: i32) -> Result<Rational> {
    if exp == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::ZeroBase);
        }
        return Ok(Rational::zero());
    }
    Ok(Pow::pow(base.clone(), exp as i64))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for repr in self.to_term_reprs() {
            seq.serialize_element(&repr)?;
        }
        seq.end()
    }
}

// Operator sugar; panics on rank mismatch, like fixed-size numeric types.
// The checked `try_*` methods surface `RankMismatch` instead.
macro_rules! binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$inner(rhs).expect("rank mismatch")
            }
        }
        impl std::ops::$trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$inner(&rhs).expect("rank mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

/// Formal quotient of two Laurent polynomials.
///
/// Never auto-reduced: `new` only rejects a zero denominator. Equality is by
/// cross-multiplication (`f = g  iff  f.num·g.den = g.num·f.den`), so no
/// multivariate GCD is ever needed. [`RationalFn::clear_monomial`] divides
/// out the common monomial content; it is applied before serialization only.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.check_rank(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.rank());
        RationalFn { num: p, den: one }
    }

    pub fn one(rank: usize) -> Self {
        RationalFn::from_poly(LaurentPoly::one(rank))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        RationalFn::new(
            &self.num.try_mul(&other.den)? + &self.den.try_mul(&other.num)?,
            self.den.try_mul(&other.den)?,
        )
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        RationalFn::new(
            &self.num.try_mul(&other.den)? - &self.den.try_mul(&other.num)?,
            self.den.try_mul(&other.den)?,
        )
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        RationalFn::new(
            self.num.try_mul(&other.num)?,
            self.den.try_mul(&other.den)?,
        )
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        RationalFn::new(
            self.num.try_mul(&other.den)?,
            self.den.try_mul(&other.num)?,
        )
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Cross-multiplication equality: `f.num·g.den = g.num·f.den`.
    pub fn eq_cross(&self, other: &Self) -> bool {
        match (
            self.num.try_mul(&other.den),
            other.num.try_mul(&self.den),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Divide numerator and denominator by their common monomial content
    /// (the componentwise minimum exponent over all terms of both). Applied
    /// before serialization so output is canonical without full reduction.
    pub fn clear_monomial(&self) -> Self {
        let (Some(cn), Some(cd)) = (self.num.content_monomial(), self.den.content_monomial())
        else {
            return self.clone();
        };
        let mut u = cn.u_exponent().min(cd.u_exponent());
        let mut x: ExpVec = ExpVec::from(cn.x_exponents());
        for (acc, &e) in x.iter_mut().zip(cd.x_exponents()) {
            *acc = (*acc).min(e);
        }
        // A no-op shift keeps the value untouched.
        let common = Monomial::new(std::mem::take(&mut x), std::mem::take(&mut u));
        let inv = common.inverse();
        RationalFn {
            num: self.num.mul_monomial(&inv),
            den: self.den.mul_monomial(&inv),
        }
    }

    /// Exact evaluation; errors with `DenominatorVanishes` at poles.
    pub fn eval_numeric(&self, x_values: &[Rational], u_value: &Rational) -> Result<Rational> {
        let den = self.den.eval_numeric(x_values, u_value)?;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        let num = self.num.eval_numeric(x_values, u_value)?;
        Ok(num / den)
    }

    /// If the denominator is a nonzero constant multiple of a monomial, fold
    /// it into the numerator and return the underlying polynomial.
    pub fn into_poly(&self) -> Option<LaurentPoly> {
        if self.den.num_terms() != 1 {
            return None;
        }
        let (m, c) = self.den.leading_term()?;
        let inv = Rational::one() / c;
        Some(self.num.mul_monomial(&m.inverse()).scale(&inv))
    }
}

/// Equality of rational functions is mathematical equality of the fractions,
/// decided by cross-multiplication. Panics on rank mismatch like the
/// polynomial operators.
impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other)
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let cleared = self.clear_monomial();
        let mut s = serializer.serialize_struct("RationalFn", 2)?;
        s.serialize_field("num", &cleared.num)?;
        s.serialize_field("den", &cleared.den)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(rank: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var_x(rank, i)
    }

    fn x_inv(rank: usize, i: usize) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::x(rank, i).inverse(), rat(1))
    }

    // ---- arith ----

    #[test]
    fn add_additive_inverse_is_zero() {
        let p = &x(1, 0) + &x(1, 0).neg();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn mul_difference_of_squares() {
        // (x - x⁻¹)(x + x⁻¹) = x² - x⁻²
        let a = &x(1, 0) - &x_inv(1, 0);
        let b = &x(1, 0) + &x_inv(1, 0);
        let expected = LaurentPoly::from_terms(
            1,
            [
                (Monomial::new(vec![2], 0), rat(1)),
                (Monomial::new(vec![-2], 0), rat(-1)),
            ],
        );
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn mul_by_one_is_identity() {
        // 1 - u²x²
        let p = &LaurentPoly::one(1) - &LaurentPoly::t(1).try_mul(&x(1, 0).try_mul(&x(1, 0)).unwrap()).unwrap();
        assert_eq!(p.try_mul(&LaurentPoly::one(1)).unwrap(), p);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let err = x(1, 0).try_add(&x(2, 0)).unwrap_err();
        assert_eq!(err, Error::RankMismatch(1, 2));
    }

    // ---- exact_div ----

    #[test]
    fn exact_div_factorization() {
        let num = &(&x(1, 0) * &x(1, 0)) - &(&x_inv(1, 0) * &x_inv(1, 0));
        let den = &x(1, 0) - &x_inv(1, 0);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, &x(1, 0) + &x_inv(1, 0));
        assert_eq!(q.try_mul(&den).unwrap(), num);
    }

    #[test]
    fn exact_div_self_is_one() {
        let p = &x(1, 0) - &x_inv(1, 0);
        assert!(p.exact_div(&p).unwrap().is_one());
    }

    #[test]
    fn exact_div_rejects_non_divisor() {
        // Leading-term elimination leaves the nonzero remainder 2.
        let num = &(&x(1, 0) * &x(1, 0)) + &LaurentPoly::one(1);
        let den = &x(1, 0) - &x_inv(1, 0);
        assert_eq!(num.exact_div(&den).unwrap_err(), Error::NotDivisible);
    }

    #[test]
    fn exact_div_by_zero() {
        let p = x(1, 0);
        assert_eq!(
            p.exact_div(&LaurentPoly::zero(1)).unwrap_err(),
            Error::DivisionByZeroPoly
        );
    }

    // ---- eval_numeric ----

    #[test]
    fn eval_simple_point() {
        let p = &x(1, 0) - &x_inv(1, 0);
        let v = p.eval_numeric(&[rat(2)], &rat(1)).unwrap();
        assert_eq!(v, Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn eval_vanishing_point() {
        let p = &LaurentPoly::one(1)
            - &(&LaurentPoly::t(1) * &(&x(1, 0) * &x(1, 0)));
        assert!(p.eval_numeric(&[rat(1)], &rat(1)).unwrap().is_zero());
    }

    #[test]
    fn eval_zero_base_negative_exponent() {
        let p = x_inv(1, 0);
        assert_eq!(
            p.eval_numeric(&[rat(0)], &rat(1)).unwrap_err(),
            Error::ZeroBase
        );
    }

    // ---- RationalFn ----

    #[test]
    fn rfn_eq_by_cancellation() {
        // (x² - 1)/(x - 1) = (x + 1)/1
        let one = LaurentPoly::one(1);
        let f = RationalFn::new(&(&x(1, 0) * &x(1, 0)) - &one, &x(1, 0) - &one).unwrap();
        let g = RationalFn::from_poly(&x(1, 0) + &one);
        assert!(f.eq_cross(&g));
    }

    #[test]
    fn rfn_neq_cross_multiply() {
        let one = LaurentPoly::one(1);
        let f = RationalFn::new(one.clone(), &one - &x(1, 0)).unwrap();
        let g = RationalFn::new(one.clone(), &one - &(&x(1, 0) * &x(1, 0))).unwrap();
        assert!(!f.eq_cross(&g));
    }

    #[test]
    fn rfn_eq_both_zero() {
        let one = LaurentPoly::one(1);
        let f = RationalFn::new(LaurentPoly::zero(1), &one - &x(1, 0)).unwrap();
        let g =
            RationalFn::new(LaurentPoly::zero(1), &one - &(&x(1, 0) * &x(1, 0))).unwrap();
        assert!(f.eq_cross(&g));
    }

    #[test]
    fn rfn_zero_denominator_rejected() {
        assert_eq!(
            RationalFn::new(LaurentPoly::one(1), LaurentPoly::zero(1)).unwrap_err(),
            Error::DivisionByZeroPoly
        );
    }

    // ---- substitution & serialization ----

    #[test]
    fn substitute_u_at_zero_drops_t_terms() {
        // 1 - t·x² ↦ 1 at u = 0
        let p = &LaurentPoly::one(1) - &(&LaurentPoly::t(1) * &(&x(1, 0) * &x(1, 0)));
        assert!(p.substitute_u(&rat(0)).unwrap().is_one());
        // u⁻¹ at u = 0 is an error
        let q = LaurentPoly::monomial(Monomial::u_power(1, -1), rat(1));
        assert_eq!(q.substitute_u(&rat(0)).unwrap_err(), Error::ZeroBase);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = LaurentPoly::from_terms(
            2,
            [
                (Monomial::new(vec![1, -2], 3), Rational::new(3.into(), 7.into())),
                (Monomial::new(vec![0, 0], 0), rat(-5)),
            ],
        );
        let json = serde_json::to_string(&p).unwrap();
        let reprs: Vec<TermRepr> = serde_json::from_str(&json).unwrap();
        let back = LaurentPoly::from_term_reprs(2, &reprs).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn rational_fn_json_round_trip_is_bit_exact() {
        let f = RationalFn::new(
            LaurentPoly::from_terms(
                2,
                [
                    (Monomial::new(vec![2, -1], 1), rat(3)),
                    (Monomial::new(vec![0, 1], 0), Rational::new(1.into(), 2.into())),
                ],
            ),
            LaurentPoly::from_terms(
                2,
                [
                    (Monomial::new(vec![0, 0], 0), rat(1)),
                    (Monomial::new(vec![1, 1], 2), rat(-1)),
                ],
            ),
        )
        .unwrap();
        let json = serde_json::to_string(&f).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let num_reprs: Vec<TermRepr> = serde_json::from_value(value["num"].clone()).unwrap();
        let den_reprs: Vec<TermRepr> = serde_json::from_value(value["den"].clone()).unwrap();
        let back = RationalFn::new(
            LaurentPoly::from_term_reprs(2, &num_reprs).unwrap(),
            LaurentPoly::from_term_reprs(2, &den_reprs).unwrap(),
        )
        .unwrap();
        assert!(back.eq_cross(&f));
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn clear_monomial_before_serialization() {
        // x²/x ↦ x/1 after clearing the common content x.
        let f = RationalFn::new(
            LaurentPoly::monomial(Monomial::new(vec![2], 0), rat(1)),
            LaurentPoly::monomial(Monomial::new(vec![1], 0), rat(1)),
        )
        .unwrap();
        let cleared = f.clear_monomial();
        assert_eq!(cleared.num(), &x(1, 0));
        assert!(cleared.den().is_one());
        assert!(f.eq_cross(&cleared));
    }

    // ---- randomized ring properties ----

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(rank: usize) -> impl Strategy<Value = LaurentPoly> {
            let term = (
                proptest::collection::vec(-5i32..=5, rank),
                -5i32..=5,
                -9i64..=9,
            );
            proptest::collection::vec(term, 0..8).prop_map(move |terms| {
                LaurentPoly::from_terms(
                    rank,
                    terms.into_iter().map(|(xs, u, c)| {
                        (Monomial::new(ExpVec::from(xs.as_slice()), u), rat(c))
                    }),
                )
            })
        }

        proptest! {
            #[test]
            fn add_commutes(a in arb_poly(2), b in arb_poly(2)) {
                prop_assert_eq!(&a + &b, &b + &a);
            }

            #[test]
            fn mul_commutes(a in arb_poly(2), b in arb_poly(2)) {
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn mul_associates(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn mul_distributes(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn product_division_round_trip(a in arb_poly(2), b in arb_poly(2)) {
                prop_assume!(!b.is_zero());
                let q = (&a * &b).exact_div(&b).unwrap();
                prop_assert_eq!(q, a);
            }

            #[test]
            fn eval_is_ring_homomorphism(
                a in arb_poly(2),
                b in arb_poly(2),
                xn in 1i64..7,
                xd in 1i64..7,
                yn in -7i64..-1,
            ) {
                let pt = [Rational::new(xn.into(), xd.into()), Rational::new(yn.into(), 3.into())];
                let u = Rational::new(2.into(), 5.into());
                let ea = a.eval_numeric(&pt, &u).unwrap();
                let eb = b.eval_numeric(&pt, &u).unwrap();
                prop_assert_eq!((&a + &b).eval_numeric(&pt, &u).unwrap(), &ea + &eb);
                prop_assert_eq!((&a * &b).eval_numeric(&pt, &u).unwrap(), &ea * &eb);
            }

            #[test]
            fn serialization_round_trips(a in arb_poly(3)) {
                let json = serde_json::to_string(&a).unwrap();
                let reprs: Vec<TermRepr> = serde_json::from_str(&json).unwrap();
                let back = LaurentPoly::from_term_reprs(3, &reprs).unwrap();
                prop_assert_eq!(&back, &a);
                prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
            }
        }
    }
}
