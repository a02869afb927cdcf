//! Independent oracles used to validate the engine.
//!
//! Each oracle deliberately shares no code with the computation path it
//! checks: [`alternant_det`] expands a determinant by its permutation sum
//! (never touching the signed-permutation machinery in [`crate::weyl`]),
//! [`sp_character_det`] realizes the Weyl character formula for Sp(2n, ℂ)
//! as an exact quotient of alternants, and [`whittaker_gl2`] is the
//! classical GL(2) spherical Whittaker value that the rank-one Shalika
//! function must be proportional to.

use itertools::Itertools;

use crate::arith::{rat, LaurentPoly, Monomial};
use crate::roots::{rho, DominantLambda};
use crate::{Error, Result};

/// Largest rank for which determinants are expanded (4! = 24 terms).
pub const MAX_RANK_DET: usize = 4;

/// A strictly decreasing positive integer vector, indexing alternants
/// `μ = ρ + λ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrictWeight {
    vec: Vec<i32>,
}

impl StrictWeight {
    pub fn new(vec: Vec<i32>) -> Result<Self> {
        if vec.is_empty() || *vec.last().unwrap() < 1 || vec.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotDominant(format!(
                "{:?} is not strictly decreasing and positive",
                vec
            )));
        }
        Ok(StrictWeight { vec })
    }

    pub fn parts(&self) -> &[i32] {
        &self.vec
    }

    pub fn rank(&self) -> usize {
        self.vec.len()
    }
}

/// `det_{i,j}( x_j^{μ_i} − x_j^{−μ_i} )`, expanded as a sum over
/// permutations with inversion-count signs.
pub fn alternant_det(mu: &StrictWeight) -> Result<LaurentPoly> {
    let n = mu.rank();
    if n > MAX_RANK_DET {
        return Err(Error::RankTooLarge(n, MAX_RANK_DET));
    }
    let mut det = LaurentPoly::zero(n);
    for sigma in (0..n).permutations(n) {
        let mut inversions = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if sigma[a] > sigma[b] {
                    inversions += 1;
                }
            }
        }
        // ∏_i ( x_{σ(i)}^{μ_i} − x_{σ(i)}^{−μ_i} )
        let mut term = LaurentPoly::constant(n, rat(if inversions % 2 == 0 { 1 } else { -1 }));
        for (i, &col) in sigma.iter().enumerate() {
            let e = mu.parts()[i];
            let mut plus = vec![0i32; n];
            plus[col] = e;
            let mut minus = vec![0i32; n];
            minus[col] = -e;
            let factor = LaurentPoly::from_terms(
                n,
                [
                    (Monomial::new(plus, 0), rat(1)),
                    (Monomial::new(minus, 0), rat(-1)),
                ],
            );
            term = term.try_mul(&factor)?;
        }
        det = det.try_add(&term)?;
    }
    Ok(det)
}

/// The irreducible character of Sp(2n, ℂ) with highest weight λ, as the
/// exact quotient `alternant(λ+ρ) / alternant(ρ)` of the Weyl character
/// formula. A `NotDivisible` error here signals an engine bug.
pub fn sp_character_det(lambda: &DominantLambda) -> Result<LaurentPoly> {
    if !lambda.is_nonnegative() {
        return Err(Error::NotDominant(format!(
            "{:?} has a negative part",
            lambda.parts()
        )));
    }
    let n = lambda.rank();
    let rho = rho(n);
    let shifted: Vec<i32> = lambda
        .parts()
        .iter()
        .zip(&rho.vec)
        .map(|(l, r)| l + r)
        .collect();
    let numerator = alternant_det(&StrictWeight::new(shifted)?)?;
    let denominator = alternant_det(&StrictWeight::new(rho.vec)?)?;
    numerator.exact_div(&denominator)
}

/// The unramified GL(2) Whittaker value at `diag(ϖ^λ, 1)`:
/// `u^λ · (x^{λ+1} − x^{−λ−1}) / (x − x^{−1})`, an exact polynomial.
pub fn whittaker_gl2(lambda: i32) -> Result<LaurentPoly> {
    if lambda < 0 {
        return Err(Error::NotDominant(format!("lambda = {lambda} is negative")));
    }
    let numerator = LaurentPoly::from_terms(
        1,
        [
            (Monomial::new(vec![lambda + 1], 0), rat(1)),
            (Monomial::new(vec![-lambda - 1], 0), rat(-1)),
        ],
    );
    let denominator = LaurentPoly::from_terms(
        1,
        [
            (Monomial::new(vec![1], 0), rat(1)),
            (Monomial::new(vec![-1], 0), rat(-1)),
        ],
    );
    let quotient = numerator.exact_div(&denominator)?;
    Ok(quotient.mul_monomial(&Monomial::u_power(1, lambda)))
}
