//! The three computation paths for the spherical Shalika function `Ω(g_λ)`.
//!
//! * [`omega_closed`] — the closed form
//!   `∏_{α∈Φ_Sp^+}(1 − t·e^α) · δ^{1/2}(g_λ) · 𝒜(e^{ρ+λ} ∏_{α∈Φ_Sp^{S+}}(1 − t·e^{−α}))`,
//!   always a genuine Laurent polynomial.
//! * [`omega_gamma_sum`] — the sum over Γ with c-function style factors
//!   attached to the roots each `w` sends negative, under a different
//!   normalization.
//! * [`omega_hecke`] — the Casselman-basis assembly: for each `w ∈ Γ` the
//!   product of `c_α` over GL roots kept positive, the functional-equation
//!   constants (`c_α` over GL roots sent negative and `d_α` over Sp roots
//!   sent negative), the transported character of `g_λ`, and the global
//!   Poincaré constant `Q^{-1}`, under the `Λ(φ_B) = 1` normalization.
//!
//! The three paths agree up to λ-independent calibration factors per rank;
//! the [`crate::verify`] suites measure and record those factors.
//!
//! ## Twist orientation
//!
//! The transported character of `g_λ` can be read with the Weyl action
//! oriented two ways; only one makes the ratio of the Γ-sum to the closed
//! form independent of λ. With `^wχ(ϖ^k) = χ(ϖ^{k∘w})`, the passing
//! orientation is `(^wχ)^{-1}δ^{1/2}(g_λ)` — at n = 1 it gives
//! `Ω_Γ(λ) = u^λ(x^{-λ} − x^{2+λ})`, a fixed multiple `−x/(1 − t·x²)` of
//! the closed form, whereas the un-inverted orientation yields 0 at λ = 1.
//! Both orientations are implemented behind [`TwistConvention`]; the
//! verified one is hard-coded as [`RESOLVED_TWIST`] and re-checked by the
//! verification suite at every run.

use serde::Serialize;

use crate::arith::{LaurentPoly, Monomial, RationalFn};
use crate::parallel::tree_map_reduce;
use crate::roots::{
    chi_of_gl_root, delta_half, eval_chi_at_glweight, monomial_of_weight, positive_roots_gl,
    positive_roots_sp, rho, DominantLambda, GLRoot, RootKind, SpRoot, SpWeight,
};
use crate::weyl::{alternator, embed_in_w, enumerate_gamma, poincare_q_inv, PermW, SignedPerm};
use crate::{Error, Result};

/// Largest rank for the Casselman-basis path (it needs the full S_{2n}
/// Poincaré sum).
pub const MAX_RANK_HECKE: usize = 3;
/// Largest rank served by the closed and Γ-sum paths in the CLI.
pub const MAX_RANK_TABLE: usize = 4;

/// Orientation of the Weyl-group twist applied to the character of `g_λ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwistConvention {
    /// `^wχ · δ^{1/2}(g_λ)` — fails the λ-independence test.
    Direct,
    /// `(^wχ)^{-1} · δ^{1/2}(g_λ)` — the empirically resolved orientation.
    Inverse,
}

/// The twist orientation that passes the λ-independence test at n = 1, 2.
pub const RESOLVED_TWIST: TwistConvention = TwistConvention::Inverse;

/// One element of Γ with its derived data cached.
#[derive(Clone, Debug)]
pub struct GammaElement {
    pub element: SignedPerm,
    pub length: usize,
    pub in_w: PermW,
}

/// Immutable per-rank context: root systems, ρ, and the enumerated Weyl
/// group Γ with lengths and embeddings precomputed. Shareable across
/// threads.
#[derive(Clone, Debug)]
pub struct ModelContext {
    n: usize,
    sp_positive: Vec<SpRoot>,
    gl_positive: Vec<GLRoot>,
    rho: SpWeight,
    gamma: Vec<GammaElement>,
}

impl ModelContext {
    pub fn new(n: usize) -> Result<Self> {
        let gamma = enumerate_gamma(n)?
            .into_iter()
            .map(|element| {
                let length = element.length();
                let in_w = embed_in_w(&element);
                GammaElement {
                    element,
                    length,
                    in_w,
                }
            })
            .collect();
        Ok(ModelContext {
            n,
            sp_positive: positive_roots_sp(n),
            gl_positive: positive_roots_gl(n),
            rho: rho(n),
            gamma,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sp_positive(&self) -> &[SpRoot] {
        &self.sp_positive
    }

    pub fn short_positive(&self) -> impl Iterator<Item = &SpRoot> {
        self.sp_positive
            .iter()
            .filter(|r| r.kind == RootKind::Short)
    }

    pub fn gl_positive(&self) -> &[GLRoot] {
        &self.gl_positive
    }

    pub fn rho(&self) -> &SpWeight {
        &self.rho
    }

    pub fn gamma(&self) -> &[GammaElement] {
        &self.gamma
    }

    fn check_lambda(&self, lambda: &DominantLambda) -> Result<()> {
        if lambda.rank() != self.n {
            return Err(Error::RankMismatch(self.n, lambda.rank()));
        }
        Ok(())
    }

    /// `1 − t·m` as a polynomial.
    fn one_minus_t(&self, m: &Monomial) -> LaurentPoly {
        let one = LaurentPoly::one(self.n);
        let tm = LaurentPoly::monomial(m.product(&Monomial::u_power(self.n, 2)), crate::arith::rat(1));
        one.try_sub(&tm).expect("equal ranks")
    }

    /// `1 − m` as a polynomial.
    fn one_minus(&self, m: &Monomial) -> LaurentPoly {
        let one = LaurentPoly::one(self.n);
        let pm = LaurentPoly::monomial(m.clone(), crate::arith::rat(1));
        one.try_sub(&pm).expect("equal ranks")
    }
}

/// `c_α(χ) = (1 − t·χ(a_α)) / (1 − χ(a_α))` for a GL root.
pub fn c_alpha(ctx: &ModelContext, alpha: &GLRoot) -> RationalFn {
    let m = chi_of_gl_root(alpha, ctx.n());
    RationalFn::new(ctx.one_minus_t(&m), ctx.one_minus(&m)).expect("denominator is nonzero")
}

/// The functional-equation constant `d_α(χ)` of a positive Sp root:
/// `χ(a_α)` for a long root, `χ(a_α)·(1 − t·χ(a_{−α}))/(1 − t·χ(a_α))`
/// for a short one.
pub fn d_alpha(ctx: &ModelContext, alpha: &SpRoot) -> RationalFn {
    debug_assert!(alpha.is_positive());
    let m = monomial_of_weight(&alpha.as_weight());
    match alpha.kind {
        RootKind::Long => {
            RationalFn::from_poly(LaurentPoly::monomial(m, crate::arith::rat(1)))
        }
        RootKind::Short => {
            let num = ctx.one_minus_t(&m.inverse()).mul_monomial(&m);
            RationalFn::new(num, ctx.one_minus_t(&m)).expect("denominator is nonzero")
        }
    }
}

/// The transported character value `(^wχ)^{±1} δ^{1/2}(g_λ)` as a single
/// monomial. The GL weight of `g_λ` is `(λ, 0, …, 0)`; `w` transports it
/// through the embedding Γ ↪ W, and the convention chooses the sign of the
/// exponent.
fn twisted_character(
    elem: &GammaElement,
    lambda: &DominantLambda,
    convention: TwistConvention,
) -> Monomial {
    let k = lambda.gl_weight();
    let sign = match convention {
        TwistConvention::Direct => 1,
        TwistConvention::Inverse => -1,
    };
    let transported: Vec<i32> = (0..k.len())
        .map(|i| sign * k[elem.in_w.apply(i)])
        .collect();
    eval_chi_at_glweight(&transported).product(&delta_half(lambda))
}

/// Closed form of the spherical Shalika function. Returns the zero
/// polynomial whenever `λ_n < 0`.
pub fn omega_closed(ctx: &ModelContext, lambda: &DominantLambda) -> Result<LaurentPoly> {
    ctx.check_lambda(lambda)?;
    let n = ctx.n();
    if !lambda.is_nonnegative() {
        return Ok(LaurentPoly::zero(n));
    }

    // ∏_{α ∈ Φ_Sp^+} (1 − t·e^α)
    let mut prefactor = LaurentPoly::one(n);
    for alpha in ctx.sp_positive() {
        prefactor = prefactor.try_mul(&ctx.one_minus_t(&monomial_of_weight(&alpha.as_weight())))?;
    }

    // e^{ρ+λ} · ∏_{α ∈ Φ_Sp^{S+}} (1 − t·e^{−α})
    let rho_lambda = ctx.rho().add(&lambda.as_weight());
    let mut inner = LaurentPoly::monomial(monomial_of_weight(&rho_lambda), crate::arith::rat(1));
    for alpha in ctx.short_positive() {
        inner = inner.try_mul(&ctx.one_minus_t(&monomial_of_weight(&alpha.negated().as_weight())))?;
    }

    let alternated = alternator(&inner, n)?;
    Ok(prefactor
        .try_mul(&alternated)?
        .mul_monomial(&delta_half(lambda)))
}

/// Γ-sum form under the resolved twist orientation.
pub fn omega_gamma_sum(ctx: &ModelContext, lambda: &DominantLambda) -> Result<RationalFn> {
    omega_gamma_sum_with(ctx, lambda, RESOLVED_TWIST)
}

/// Γ-sum form with an explicit twist orientation.
///
/// All terms are assembled over the fixed common denominator
/// `∏_{α∈Φ_Sp^{S+}} (1 − t·χ(a_α))`: the term of `w ∈ Γ` contributes
/// `(−1)^{l(w)} ∏_{α∈Φ_Sp^+, wα<0} χ(a_α) · ∏_{α∈Φ_Sp^{S+}, wα<0} (1 − t·χ(a_{−α}))
///  · ∏_{α∈Φ_Sp^{S+}, wα>0} (1 − t·χ(a_α)) · twist_w(g_λ)` to the numerator.
pub fn omega_gamma_sum_with(
    ctx: &ModelContext,
    lambda: &DominantLambda,
    convention: TwistConvention,
) -> Result<RationalFn> {
    ctx.check_lambda(lambda)?;
    if !lambda.is_nonnegative() {
        return Err(Error::NotDominant(format!(
            "{:?}: the gamma-sum path requires lambda_n >= 0",
            lambda.parts()
        )));
    }
    let n = ctx.n();

    let mut denominator = LaurentPoly::one(n);
    for alpha in ctx.short_positive() {
        denominator =
            denominator.try_mul(&ctx.one_minus_t(&monomial_of_weight(&alpha.as_weight())))?;
    }

    let numerator = tree_map_reduce(
        0,
        ctx.gamma().len(),
        &|i| gamma_term(ctx, &ctx.gamma()[i], lambda, convention),
        &|a: LaurentPoly, b: LaurentPoly| a.try_add(&b).expect("equal ranks"),
    )
    .unwrap_or_else(|| LaurentPoly::zero(n));

    RationalFn::new(numerator, denominator)
}

fn gamma_term(
    ctx: &ModelContext,
    elem: &GammaElement,
    lambda: &DominantLambda,
    convention: TwistConvention,
) -> LaurentPoly {
    let n = ctx.n();
    let w = &elem.element;
    let mut term = LaurentPoly::one(n);
    let mut shift = Monomial::one(n);
    for alpha in ctx.sp_positive() {
        let negated = !w.act_root(alpha).is_positive();
        let m = monomial_of_weight(&alpha.as_weight());
        if negated {
            // χ(a_α) for every negated positive root
            shift = shift.product(&m);
        }
        if alpha.kind == RootKind::Short {
            let factor = if negated {
                ctx.one_minus_t(&m.inverse())
            } else {
                ctx.one_minus_t(&m)
            };
            term = term.try_mul(&factor).expect("equal ranks");
        }
    }
    shift = shift.product(&twisted_character(elem, lambda, convention));
    let term = term.mul_monomial(&shift);
    if elem.length % 2 == 1 {
        term.neg()
    } else {
        term
    }
}

/// Casselman-basis assembly under the resolved twist orientation.
pub fn omega_hecke(ctx: &ModelContext, lambda: &DominantLambda) -> Result<RationalFn> {
    omega_hecke_with(ctx, lambda, RESOLVED_TWIST)
}

/// Casselman-basis assembly with an explicit twist orientation:
///
/// `Q^{-1} · Σ_{w∈Γ} [∏_{α∈Φ_GL^+, wα>0} c_α] · [(^wχ)^{-1}δ^{1/2}(g_λ)] ·
///  [(−1)^{l(w)} ∏_{α∈Φ_GL^+, wα<0} c_α · ∏_{α∈Φ_Sp^+, wα<0} d_α]`,
///
/// where `w` acts on GL roots through the embedding Γ ↪ W. Terms are
/// assembled over the fixed common denominator
/// `∏_{α∈Φ_GL^+}(1 − χ(a_α)) · ∏_{α∈Φ_Sp^{S+}}(1 − t·χ(a_α))`.
pub fn omega_hecke_with(
    ctx: &ModelContext,
    lambda: &DominantLambda,
    convention: TwistConvention,
) -> Result<RationalFn> {
    ctx.check_lambda(lambda)?;
    let n = ctx.n();
    if n > MAX_RANK_HECKE {
        return Err(Error::RankTooLarge(n, MAX_RANK_HECKE));
    }
    if !lambda.is_nonnegative() {
        return Err(Error::NotDominant(format!(
            "{:?}: the Casselman-basis path requires lambda_n >= 0",
            lambda.parts()
        )));
    }

    let q_inv = poincare_q_inv(n)?;

    let mut denominator = LaurentPoly::one(n);
    for alpha in ctx.gl_positive() {
        denominator = denominator.try_mul(&ctx.one_minus(&chi_of_gl_root(alpha, n)))?;
    }
    for alpha in ctx.short_positive() {
        denominator =
            denominator.try_mul(&ctx.one_minus_t(&monomial_of_weight(&alpha.as_weight())))?;
    }

    let sum = tree_map_reduce(
        0,
        ctx.gamma().len(),
        &|i| hecke_term(ctx, &ctx.gamma()[i], lambda, convention),
        &|a: LaurentPoly, b: LaurentPoly| a.try_add(&b).expect("equal ranks"),
    )
    .unwrap_or_else(|| LaurentPoly::zero(n));

    RationalFn::new(q_inv.try_mul(&sum)?, denominator)
}

fn hecke_term(
    ctx: &ModelContext,
    elem: &GammaElement,
    lambda: &DominantLambda,
    convention: TwistConvention,
) -> LaurentPoly {
    let n = ctx.n();
    let mut term = LaurentPoly::one(n);

    // ∏_{α∈Φ_GL^+, wα>0} c_α — the numerators; the c-denominators
    // (1 − χ(a_α)) sit in the common denominator.
    for alpha in ctx.gl_positive() {
        if elem.in_w.act_gl_root(alpha).is_positive() {
            term = term
                .try_mul(&ctx.one_minus_t(&chi_of_gl_root(alpha, n)))
                .expect("equal ranks");
        }
    }
    // ∏_{α∈Φ_GL^+, wα<0} c_α — the functional-equation c-part.
    for alpha in ctx.gl_positive() {
        if !elem.in_w.act_gl_root(alpha).is_positive() {
            term = term
                .try_mul(&ctx.one_minus_t(&chi_of_gl_root(alpha, n)))
                .expect("equal ranks");
        }
    }

    // ∏_{α∈Φ_Sp^+, wα<0} d_α, over the short-root common denominator.
    let mut shift = Monomial::one(n);
    for alpha in ctx.sp_positive() {
        let negated = !elem.element.act_root(alpha).is_positive();
        let m = monomial_of_weight(&alpha.as_weight());
        match alpha.kind {
            RootKind::Long => {
                if negated {
                    shift = shift.product(&m);
                }
            }
            RootKind::Short => {
                let factor = if negated {
                    // d_α numerator: χ(a_α)(1 − t·χ(a_{−α}))
                    ctx.one_minus_t(&m.inverse()).mul_monomial(&m)
                } else {
                    // compensate the common denominator
                    ctx.one_minus_t(&m)
                };
                term = term.try_mul(&factor).expect("equal ranks");
            }
        }
    }

    shift = shift.product(&twisted_character(elem, lambda, convention));
    let term = term.mul_monomial(&shift);
    if elem.length % 2 == 1 {
        term.neg()
    } else {
        term
    }
}

/// The normalization factor `Q · e^{−ρ} · ∏_{α∈Φ_GL^+}(1 − χ(a_α))`
/// relating the Casselman-basis assembly to the closed form.
pub fn normalization_factor(ctx: &ModelContext) -> Result<RationalFn> {
    let n = ctx.n();
    let q_inv = poincare_q_inv(n)?;
    let mut num = LaurentPoly::monomial(
        monomial_of_weight(ctx.rho()).inverse(),
        crate::arith::rat(1),
    );
    for alpha in ctx.gl_positive() {
        num = num.try_mul(&ctx.one_minus(&chi_of_gl_root(alpha, n)))?;
    }
    RationalFn::new(num, q_inv)
}

/// Which formula produced a value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaPath {
    Closed,
    GammaSum,
    Hecke,
}

/// A computed value of `Ω(g_λ)`: exact polynomial on the closed path,
/// formal quotient on the other two.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum OmegaBody {
    Poly(LaurentPoly),
    Ratio(RationalFn),
}

#[derive(Clone, Debug)]
pub struct OmegaValue {
    pub lambda: DominantLambda,
    pub path: OmegaPath,
    pub value: OmegaBody,
}

/// Evaluate `Ω(g_λ)` along the requested path.
pub fn omega(ctx: &ModelContext, lambda: &DominantLambda, path: OmegaPath) -> Result<OmegaValue> {
    let value = match path {
        OmegaPath::Closed => OmegaBody::Poly(omega_closed(ctx, lambda)?),
        OmegaPath::GammaSum => OmegaBody::Ratio(omega_gamma_sum(ctx, lambda)?),
        OmegaPath::Hecke => OmegaBody::Ratio(omega_hecke(ctx, lambda)?),
    };
    Ok(OmegaValue {
        lambda: lambda.clone(),
        path,
        value,
    })
}
