//! Root data for GL(2n) and Sp(2n).
//!
//! GL roots are index pairs `(i, j)` (1-based, `i ≠ j`) for the character
//! `diag(t_1,…,t_{2n}) ↦ t_i t_j^{-1}`. Sp roots are integer n-vectors:
//! `e_i − e_j`, `e_i + e_j` (short) and `2e_i` (long). Restriction to the
//! symplectic torus collapses GL roots onto Sp roots, one-to-one on long
//! roots and two-to-one on short ones; `partner` is the second preimage.
//!
//! Characters are evaluated at the Satake point
//! `g_χ = diag(x_1, …, x_n, x_n^{-1}, …, x_1^{-1})`, so every weight turns
//! into a [`Monomial`] in `x_1, …, x_n`.

use crate::arith::{ExpVec, Monomial};
use crate::{Error, Result};

/// A root of GL(2n): the pair `(i, j)`, 1-based, `i ≠ j`. Positive iff `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GLRoot {
    pub i: usize,
    pub j: usize,
}

impl GLRoot {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(i != j);
        GLRoot { i, j }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    /// The weight vector `e_i − e_j` in the GL(2n) character lattice.
    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut k = vec![0i32; 2 * n];
        k[self.i - 1] += 1;
        k[self.j - 1] -= 1;
        k
    }
}

/// Length class of an Sp root.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootKind {
    Short,
    Long,
}

/// A root of Sp(2n) stored as its integer n-vector, with the length class
/// cached at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpRoot {
    pub vec: Vec<i32>,
    pub kind: RootKind,
}

impl SpRoot {
    pub fn from_vec(vec: Vec<i32>) -> Self {
        let kind = if vec.iter().any(|&e| e.abs() == 2) {
            RootKind::Long
        } else {
            RootKind::Short
        };
        SpRoot { vec, kind }
    }

    /// Positive iff the lowest-index nonzero coordinate is positive; every
    /// C_n root vector is either positive or the negative of a positive one.
    pub fn is_positive(&self) -> bool {
        self.vec
            .iter()
            .find(|&&e| e != 0)
            .map(|&e| e > 0)
            .unwrap_or(false)
    }

    pub fn negated(&self) -> Self {
        SpRoot {
            vec: self.vec.iter().map(|e| -e).collect(),
            kind: self.kind,
        }
    }

    pub fn as_weight(&self) -> SpWeight {
        SpWeight {
            vec: self.vec.clone(),
        }
    }
}

/// A weight of the Sp(2n) torus: an integer n-vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpWeight {
    pub vec: Vec<i32>,
}

impl SpWeight {
    pub fn new(vec: Vec<i32>) -> Self {
        SpWeight { vec }
    }

    pub fn rank(&self) -> usize {
        self.vec.len()
    }

    pub fn add(&self, other: &SpWeight) -> SpWeight {
        debug_assert_eq!(self.rank(), other.rank());
        SpWeight {
            vec: self
                .vec
                .iter()
                .zip(&other.vec)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A weakly decreasing integer tuple `λ_1 ≥ … ≥ λ_n`. Entries may be
/// negative; the closed formula vanishes unless `λ_n ≥ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominantLambda {
    parts: Vec<i32>,
}

impl DominantLambda {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::NotDominant("lambda must have at least one part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format!(
                "{:?} is not weakly decreasing",
                parts
            )));
        }
        Ok(DominantLambda { parts })
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        *self.parts.last().unwrap() >= 0
    }

    pub fn as_weight(&self) -> SpWeight {
        SpWeight {
            vec: self.parts.clone(),
        }
    }

    /// The GL(2n) weight of `g_λ`: `(λ_1, …, λ_n, 0, …, 0)`, read off the
    /// block form of `g_λ`.
    pub fn gl_weight(&self) -> Vec<i32> {
        let n = self.rank();
        let mut k = vec![0i32; 2 * n];
        k[..n].copy_from_slice(&self.parts);
        k
    }
}

/// All positive roots of Sp(2n): `e_i − e_j`, `e_i + e_j` (i < j), `2e_i`.
/// Exactly n² of them, in a fixed deterministic order.
pub fn positive_roots_sp(n: usize) -> Vec<SpRoot> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![0i32; n];
            v[i] = 1;
            v[j] = -1;
            out.push(SpRoot::from_vec(v));
            let mut v = vec![0i32; n];
            v[i] = 1;
            v[j] = 1;
            out.push(SpRoot::from_vec(v));
        }
    }
    for i in 0..n {
        let mut v = vec![0i32; n];
        v[i] = 2;
        out.push(SpRoot::from_vec(v));
    }
    out
}

/// All positive roots of GL(2n): pairs `(i, j)`, `1 ≤ i < j ≤ 2n`;
/// n(2n − 1) of them.
pub fn positive_roots_gl(n: usize) -> Vec<GLRoot> {
    let mut out = Vec::with_capacity(n * (2 * n - 1));
    for i in 1..=2 * n {
        for j in i + 1..=2 * n {
            out.push(GLRoot::new(i, j));
        }
    }
    out
}

/// Restrict a positive GL root to the symplectic torus:
/// `k ↦ (k_1 − k_{2n}, …, k_n − k_{n+1})`. Returns the Sp image and the
/// unique other positive GL preimage `(2n+1−j, 2n+1−i)`; for long images the
/// partner is the root itself.
pub fn collapse(alpha: &GLRoot, n: usize) -> (SpRoot, GLRoot) {
    debug_assert!(alpha.is_positive());
    let k = alpha.weight(n);
    let v: Vec<i32> = (0..n).map(|m| k[m] - k[2 * n - 1 - m]).collect();
    let partner = GLRoot::new(2 * n + 1 - alpha.j, 2 * n + 1 - alpha.i);
    (SpRoot::from_vec(v), partner)
}

/// ρ = half the sum of the positive Sp roots: `(n, n−1, …, 1)`.
pub fn rho(n: usize) -> SpWeight {
    SpWeight {
        vec: (1..=n).rev().map(|i| i as i32).collect(),
    }
}

/// `e^w` at `g_χ`: the monomial `∏ x_i^{w_i}` (no `u` factor).
pub fn monomial_of_weight(w: &SpWeight) -> Monomial {
    Monomial::new(ExpVec::from(w.vec.as_slice()), 0)
}

/// `χ(a_α)` for a GL root: with `ξ = (x_1,…,x_n,x_n^{-1},…,x_1^{-1})`, the
/// monomial `ξ_i / ξ_j`.
pub fn chi_of_gl_root(alpha: &GLRoot, n: usize) -> Monomial {
    eval_chi_at_glweight(&alpha.weight(n))
}

/// `δ^{1/2}(g_λ)`: a pure power of `u`, exponent `Σ λ_i·(2n − 2i + 1)`.
pub fn delta_half(lambda: &DominantLambda) -> Monomial {
    let n = lambda.rank();
    let e: i32 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &l)| l * (2 * n as i32 - 2 * (idx as i32 + 1) + 1))
        .sum();
    Monomial::u_power(n, e)
}

/// Evaluate `∏ ξ_i^{k_i}` at the Satake point for a GL(2n) weight `k`.
/// Since `ξ_j = x_{2n+1−j}^{-1}` for `j > n`, the x-exponent of `x_m` is
/// `k_m − k_{2n+1−m}`.
pub fn eval_chi_at_glweight(k: &[i32]) -> Monomial {
    debug_assert!(k.len() % 2 == 0);
    let n = k.len() / 2;
    let x: ExpVec = (0..n).map(|m| k[m] - k[2 * n - 1 - m]).collect();
    Monomial::new(x, 0)
}

/// All dominant λ ≥ 0 with `λ_1 ≤ max_part`, in ascending lexicographic
/// order: (0,…,0), (1,0,…,0), (1,1,0,…,0), ….
pub fn dominant_lambdas(n: usize, max_part: i32) -> Vec<DominantLambda> {
    fn extend(prefix: &mut Vec<i32>, n: usize, bound: i32, out: &mut Vec<DominantLambda>) {
        if prefix.len() == n {
            out.push(DominantLambda::new(prefix.clone()).expect("weakly decreasing"));
            return;
        }
        for v in 0..=bound {
            prefix.push(v);
            extend(prefix, n, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, max_part, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- enumeration counts ----

    #[test]
    fn sp_root_counts() {
        assert_eq!(positive_roots_sp(1).len(), 1);
        let c2 = positive_roots_sp(2);
        assert_eq!(c2.len(), 4);
        let vecs: Vec<&[i32]> = c2.iter().map(|r| r.vec.as_slice()).collect();
        assert!(vecs.contains(&[1, -1].as_slice()));
        assert!(vecs.contains(&[1, 1].as_slice()));
        assert!(vecs.contains(&[2, 0].as_slice()));
        assert!(vecs.contains(&[0, 2].as_slice()));
        for n in 1..=6 {
            assert_eq!(positive_roots_sp(n).len(), n * n);
        }
    }

    #[test]
    fn gl_root_counts() {
        assert_eq!(positive_roots_gl(1), vec![GLRoot::new(1, 2)]);
        assert_eq!(positive_roots_gl(2).len(), 6);
        assert_eq!(positive_roots_gl(3).len(), 15);
        for n in 1..=6 {
            assert_eq!(positive_roots_gl(n).len(), n * (2 * n - 1));
        }
    }

    // ---- collapse ----

    #[test]
    fn collapse_short_and_long() {
        let (sp, partner) = collapse(&GLRoot::new(1, 2), 2);
        assert_eq!(sp.vec, vec![1, -1]);
        assert_eq!(sp.kind, RootKind::Short);
        assert_eq!(partner, GLRoot::new(3, 4));

        let (sp, partner) = collapse(&GLRoot::new(1, 3), 2);
        assert_eq!(sp.vec, vec![1, 1]);
        assert_eq!(sp.kind, RootKind::Short);
        assert_eq!(partner, GLRoot::new(2, 4));

        let (sp, partner) = collapse(&GLRoot::new(1, 4), 2);
        assert_eq!(sp.vec, vec![2, 0]);
        assert_eq!(sp.kind, RootKind::Long);
        assert_eq!(partner, GLRoot::new(1, 4));
    }

    #[test]
    fn collapse_is_two_to_one_on_short_one_to_one_on_long() {
        for n in 1..=6 {
            let mut short_hits = std::collections::HashMap::new();
            let mut long_hits = std::collections::HashMap::new();
            for alpha in positive_roots_gl(n) {
                let (sp, partner) = collapse(&alpha, n);
                assert!(sp.is_positive());
                // partner-of-partner is the identity
                let (sp2, back) = collapse(&partner, n);
                assert_eq!(sp2, sp);
                assert_eq!(back, alpha);
                match sp.kind {
                    RootKind::Short => *short_hits.entry(sp.vec).or_insert(0) += 1,
                    RootKind::Long => *long_hits.entry(sp.vec).or_insert(0) += 1,
                }
            }
            let sp_pos = positive_roots_sp(n);
            let n_short = sp_pos.iter().filter(|r| r.kind == RootKind::Short).count();
            let n_long = sp_pos.iter().filter(|r| r.kind == RootKind::Long).count();
            assert_eq!(short_hits.len(), n_short);
            assert_eq!(long_hits.len(), n_long);
            assert!(short_hits.values().all(|&c| c == 2));
            assert!(long_hits.values().all(|&c| c == 1));
        }
    }

    // ---- rho / weights / delta ----

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for n in 1..=6 {
            let mut sum = vec![0i32; n];
            for r in positive_roots_sp(n) {
                for (s, v) in sum.iter_mut().zip(&r.vec) {
                    *s += v;
                }
            }
            let half: Vec<i32> = sum.iter().map(|s| s / 2).collect();
            assert!(sum.iter().all(|s| s % 2 == 0));
            assert_eq!(rho(n).vec, half);
        }
        assert_eq!(rho(3).vec, vec![3, 2, 1]);
    }

    #[test]
    fn weight_monomials() {
        let m = monomial_of_weight(&SpWeight::new(vec![2, 1]));
        assert_eq!(m.x_exponents(), &[2, 1]);
        assert_eq!(m.u_exponent(), 0);
        assert!(monomial_of_weight(&SpWeight::new(vec![0, 0, 0])).is_one());
        let m = monomial_of_weight(&SpWeight::new(vec![1, -1]));
        assert_eq!(m.x_exponents(), &[1, -1]);
    }

    #[test]
    fn chi_of_gl_roots_at_satake_point() {
        assert_eq!(chi_of_gl_root(&GLRoot::new(1, 2), 2).x_exponents(), &[1, -1]);
        assert_eq!(chi_of_gl_root(&GLRoot::new(1, 4), 2).x_exponents(), &[2, 0]);
        assert_eq!(chi_of_gl_root(&GLRoot::new(2, 3), 2).x_exponents(), &[0, 2]);
    }

    #[test]
    fn chi_of_gl_root_matches_collapse_route() {
        // The two evaluation routes must agree on every positive GL root.
        for n in 1..=6 {
            for alpha in positive_roots_gl(n) {
                let (sp, _) = collapse(&alpha, n);
                assert_eq!(
                    chi_of_gl_root(&alpha, n),
                    monomial_of_weight(&sp.as_weight()),
                    "n={n}, alpha={alpha:?}"
                );
            }
        }
    }

    #[test]
    fn delta_half_exponents() {
        let l = DominantLambda::new(vec![0, 0]).unwrap();
        assert!(delta_half(&l).is_one());
        let l = DominantLambda::new(vec![1]).unwrap();
        assert_eq!(delta_half(&l), Monomial::u_power(1, 1));
        let l = DominantLambda::new(vec![1, 0]).unwrap();
        assert_eq!(delta_half(&l), Monomial::u_power(2, 3));
    }

    #[test]
    fn delta_half_is_additive() {
        // δ^{1/2}(λ)·δ^{1/2}(μ) = δ^{1/2}(λ+μ) componentwise.
        let pairs = [
            (vec![2, 1, 0], vec![3, 1, 1]),
            (vec![1, 1, 1], vec![2, 0, 0]),
            (vec![4, 2, 1], vec![1, 1, 0]),
        ];
        for (a, b) in pairs {
            let sum: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let la = DominantLambda::new(a).unwrap();
            let lb = DominantLambda::new(b).unwrap();
            let ls = DominantLambda::new(sum).unwrap();
            assert_eq!(delta_half(&la).product(&delta_half(&lb)), delta_half(&ls));
        }
    }

    #[test]
    fn eval_chi_at_glweights() {
        assert_eq!(eval_chi_at_glweight(&[1, 0, 0, 0]).x_exponents(), &[1, 0]);
        assert_eq!(eval_chi_at_glweight(&[0, 0, 0, 1]).x_exponents(), &[-1, 0]);
        assert!(eval_chi_at_glweight(&[1, 0, 0, 1]).is_one());
    }

    // ---- dominance ----

    #[test]
    fn dominant_lambda_validation() {
        assert!(DominantLambda::new(vec![3, 1, 0]).is_ok());
        assert!(DominantLambda::new(vec![1, 2]).is_err());
        let l = DominantLambda::new(vec![1, -1]).unwrap();
        assert!(!l.is_nonnegative());
        assert_eq!(l.gl_weight(), vec![1, -1, 0, 0]);
    }

    #[test]
    fn dominant_lambda_enumeration_is_lexicographic() {
        let all = dominant_lambdas(2, 2);
        let parts: Vec<&[i32]> = all.iter().map(|l| l.parts()).collect();
        assert_eq!(
            parts,
            vec![
                [0, 0].as_slice(),
                [1, 0].as_slice(),
                [1, 1].as_slice(),
                [2, 0].as_slice(),
                [2, 1].as_slice(),
                [2, 2].as_slice(),
            ]
        );
        assert_eq!(dominant_lambdas(3, 3).len(), 20);
        assert_eq!(dominant_lambdas(2, 0).len(), 1);
    }
}
