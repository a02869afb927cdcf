//! Weyl groups: the hyperoctahedral group Γ ≅ (ℤ/2) ≀ S_n of Sp(2n), the
//! symmetric group W = S_{2n} of GL(2n), lengths, the alternator, the
//! embedding Γ ↪ W, and the Poincaré constant Q.
//!
//! A [`SignedPerm`] acts on exponent vectors directly (one pass per
//! monomial): coordinate `i` is scaled by `signs[i]` and moved to slot
//! `perm[i]`. Group sums run over [`enumerate_gamma`]'s fixed order —
//! permutations in lexicographic word order, sign patterns as an increasing
//! bitmask — so parallel reductions are reproducible.

use itertools::Itertools;

use crate::arith::{ExpVec, LaurentPoly, Monomial};
use crate::parallel::tree_map_reduce;
use crate::roots::{positive_roots_sp, GLRoot, SpRoot, SpWeight};
use crate::{Error, Result};

/// Largest rank for which Γ is enumerated (2⁶·6! = 46080 elements).
pub const MAX_RANK_GAMMA: usize = 6;
/// Largest rank for which full S_{2n} sums are taken (|S_6| = 720).
pub const MAX_RANK_FULL_W: usize = 3;

/// An element of Γ: a permutation of `{0..n-1}` (stored as images) together
/// with a sign for each coordinate. Acting on a vector `v`, slot `perm[i]`
/// of the image receives `signs[i] · v[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        debug_assert_eq!(perm.len(), signs.len());
        debug_assert!(signs.iter().all(|&s| s == 1 || s == -1));
        SignedPerm { perm, signs }
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Group law: `(a.compose(b))·v = a·(b·v)`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        debug_assert_eq!(n, other.rank());
        let perm = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let signs = (0..n)
            .map(|i| self.signs[other.perm[i]] * other.signs[i])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Action on a weight vector.
    pub fn act_weight(&self, v: &SpWeight) -> SpWeight {
        SpWeight::new(self.act_vec(&v.vec))
    }

    /// Action on a root; the length class is preserved.
    pub fn act_root(&self, r: &SpRoot) -> SpRoot {
        SpRoot {
            vec: self.act_vec(&r.vec),
            kind: r.kind,
        }
    }

    fn act_vec(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0i32; v.len()];
        for i in 0..v.len() {
            out[self.perm[i]] = self.signs[i] as i32 * v[i];
        }
        out
    }

    /// Action on a monomial: the x-exponent vector is transported, `u` is
    /// fixed.
    pub fn act_monomial(&self, m: &Monomial) -> Monomial {
        let mut x = ExpVec::from_elem(0, self.rank());
        for (i, &e) in m.x_exponents().iter().enumerate() {
            x[self.perm[i]] = self.signs[i] as i32 * e;
        }
        Monomial::new(x, m.u_exponent())
    }

    /// Coxeter length in Γ: the number of positive Sp roots sent negative.
    pub fn length(&self) -> usize {
        positive_roots_sp(self.rank())
            .iter()
            .filter(|r| !self.act_root(r).is_positive())
            .count()
    }

    /// `(−1)^{length}` as the determinant of the signed permutation matrix:
    /// `sign(perm) · ∏ signs`.
    pub fn det(&self) -> i8 {
        let mut det = perm_sign(&self.perm);
        for &s in &self.signs {
            det *= s;
        }
        det
    }

    /// Generators of Γ: the adjacent swaps `(i, i+1)` with all signs `+`
    /// (short-root reflections) and the sign flip of the last coordinate
    /// (the long-root reflection).
    pub fn generators(n: usize) -> Vec<SignedPerm> {
        let mut gens = Vec::with_capacity(n);
        for i in 0..n.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            gens.push(SignedPerm::new(perm, vec![1; n]));
        }
        let mut signs = vec![1i8; n];
        signs[n - 1] = -1;
        gens.push(SignedPerm::new((0..n).collect(), signs));
        gens
    }
}

fn perm_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All 2ⁿ·n! elements of Γ, each exactly once, ordered lexicographically in
/// (permutation word, sign bitmask). Bit `i` of the mask set means the sign
/// of coordinate `i` is `−1`.
pub fn enumerate_gamma(n: usize) -> Result<Vec<SignedPerm>> {
    if n == 0 || n > MAX_RANK_GAMMA {
        return Err(Error::RankTooLarge(n, MAX_RANK_GAMMA));
    }
    let mut out = Vec::with_capacity((1 << n) * (1..=n).product::<usize>());
    for perm in (0..n).permutations(n) {
        for mask in 0u32..(1 << n) {
            let signs = (0..n)
                .map(|i| if mask & (1 << i) != 0 { -1i8 } else { 1i8 })
                .collect();
            out.push(SignedPerm::new(perm.clone(), signs));
        }
    }
    Ok(out)
}

/// The alternator `𝒜(f) = Σ_{w∈Γ} (−1)^{l(w)} w(f)`, computed by a
/// deterministic parallel reduction over the fixed enumeration of Γ.
pub fn alternator(f: &LaurentPoly, n: usize) -> Result<LaurentPoly> {
    if f.rank() != n {
        return Err(Error::RankMismatch(f.rank(), n));
    }
    let gamma = enumerate_gamma(n)?;
    let sum = tree_map_reduce(
        0,
        gamma.len(),
        &|i| {
            let w = &gamma[i];
            let image = f.map_monomials(|m| w.act_monomial(m));
            if w.det() < 0 {
                image.neg()
            } else {
                image
            }
        },
        &|a, b| a.try_add(&b).expect("equal ranks"),
    );
    Ok(sum.unwrap_or_else(|| LaurentPoly::zero(n)))
}

/// An element of W = S_{2n}, stored as images on `{0..2n-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermW {
    perm: Vec<usize>,
}

impl PermW {
    pub fn new(perm: Vec<usize>) -> Self {
        PermW { perm }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn compose(&self, other: &Self) -> Self {
        PermW {
            perm: (0..self.perm.len())
                .map(|i| self.perm[other.perm[i]])
                .collect(),
        }
    }

    /// Coxeter length in W: the inversion count.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for a in 0..self.perm.len() {
            for b in a + 1..self.perm.len() {
                if self.perm[a] > self.perm[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Image of a GL root under the permutation action on indices. The
    /// result is positive iff the transported pair is still increasing.
    pub fn act_gl_root(&self, alpha: &GLRoot) -> GLRoot {
        GLRoot::new(self.perm[alpha.i - 1] + 1, self.perm[alpha.j - 1] + 1)
    }
}

/// The embedding Γ ↪ W = S_{2n} fixing the pairing `i ↔ 2n+1−i`:
/// slot `i ≤ n` maps to `perm(i)` when the sign is `+` and to `2n+1−perm(i)`
/// when it is `−`; slots above `n` are forced by the pairing. This matches
/// the generator images: the long reflection goes to the transposition
/// `(n, n+1)`, a short reflection to `(i, i+1)(2n−i, 2n+1−i)`.
pub fn embed_in_w(w: &SignedPerm) -> PermW {
    let n = w.rank();
    let mut perm = vec![0usize; 2 * n];
    for i in 0..n {
        let image = if w.signs()[i] == 1 {
            w.perm()[i]
        } else {
            2 * n - 1 - w.perm()[i]
        };
        perm[i] = image;
        perm[2 * n - 1 - i] = 2 * n - 1 - image;
    }
    PermW::new(perm)
}

/// `Q^{-1} = Σ_{w∈S_{2n}} t^{l(w)}` with `t = u²`, using the Iwahori index
/// `(BwB : B) = q^{l(w)}`. Returned as a polynomial of the given ambient
/// rank in `u` only.
pub fn poincare_q_inv(n: usize) -> Result<LaurentPoly> {
    if n == 0 || n > MAX_RANK_FULL_W {
        return Err(Error::RankTooLarge(n, MAX_RANK_FULL_W));
    }
    let mut sum = LaurentPoly::zero(n);
    for perm in (0..2 * n).permutations(2 * n) {
        let w = PermW::new(perm);
        let t_power = Monomial::u_power(n, 2 * w.length() as i32);
        sum = sum.try_add(&LaurentPoly::monomial(t_power, crate::arith::rat(1)))?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn sp(perm: Vec<usize>, signs: Vec<i8>) -> SignedPerm {
        SignedPerm::new(perm, signs)
    }

    // ---- enumeration ----

    #[test]
    fn gamma_sizes() {
        assert_eq!(enumerate_gamma(1).unwrap().len(), 2);
        assert_eq!(enumerate_gamma(2).unwrap().len(), 8);
        assert_eq!(enumerate_gamma(3).unwrap().len(), 48);
        assert!(matches!(
            enumerate_gamma(7).unwrap_err(),
            Error::RankTooLarge(7, _)
        ));
    }

    #[test]
    fn gamma_elements_are_distinct() {
        for n in 1..=3 {
            let g = enumerate_gamma(n).unwrap();
            let set: std::collections::HashSet<_> = g.iter().cloned().collect();
            assert_eq!(set.len(), g.len());
        }
    }

    // ---- action ----

    #[test]
    fn identity_acts_trivially() {
        let v = SpWeight::new(vec![2, 1]);
        assert_eq!(SignedPerm::identity(2).act_weight(&v), v);
    }

    #[test]
    fn single_sign_flip() {
        let w = sp(vec![0], vec![-1]);
        assert_eq!(w.act_weight(&SpWeight::new(vec![3])).vec, vec![-3]);
    }

    #[test]
    fn swap_with_mixed_signs() {
        // perm = (2,1), signs = (+,−) sends (2,1) to (−1,2).
        let w = sp(vec![1, 0], vec![1, -1]);
        assert_eq!(w.act_weight(&SpWeight::new(vec![2, 1])).vec, vec![-1, 2]);
    }

    #[test]
    fn composition_is_the_group_law() {
        let gamma = enumerate_gamma(2).unwrap();
        let v = SpWeight::new(vec![5, -3]);
        for a in &gamma {
            for b in &gamma {
                assert_eq!(
                    a.compose(b).act_weight(&v),
                    a.act_weight(&b.act_weight(&v))
                );
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        for w in enumerate_gamma(3).unwrap() {
            assert_eq!(w.compose(&w.inverse()), SignedPerm::identity(3));
        }
    }

    // ---- length & parity ----

    #[test]
    fn length_examples() {
        assert_eq!(SignedPerm::identity(3).length(), 0);
        // Flipping only the first coordinate at n=2 negates three roots.
        assert_eq!(sp(vec![0, 1], vec![-1, 1]).length(), 3);
        for n in 1..=4 {
            let longest = sp((0..n).collect(), vec![-1; n]);
            assert_eq!(longest.length(), n * n);
        }
    }

    #[test]
    fn parity_equals_matrix_determinant() {
        for n in 1..=4 {
            for w in enumerate_gamma(n).unwrap() {
                let parity = if w.length() % 2 == 0 { 1 } else { -1 };
                assert_eq!(parity, w.det() as i32, "w = {w:?}");
            }
        }
    }

    // ---- alternator ----

    #[test]
    fn alternator_kills_invariants() {
        for n in 1..=2 {
            assert!(alternator(&LaurentPoly::one(n), n).unwrap().is_zero());
        }
    }

    #[test]
    fn alternator_rank_one() {
        let x = LaurentPoly::var_x(1, 0);
        let expect = |k: i32| {
            LaurentPoly::from_terms(
                1,
                [
                    (Monomial::new(vec![k], 0), rat(1)),
                    (Monomial::new(vec![-k], 0), rat(-1)),
                ],
            )
        };
        assert_eq!(alternator(&x, 1).unwrap(), expect(1));
        assert_eq!(alternator(&x.try_mul(&x).unwrap(), 1).unwrap(), expect(2));
    }

    #[test]
    fn alternator_is_anti_invariant() {
        // s·𝒜(f) = −𝒜(f) for every generator s.
        let f = LaurentPoly::from_terms(
            2,
            [
                (Monomial::new(vec![2, 1], 0), rat(1)),
                (Monomial::new(vec![1, 0], 2), rat(3)),
                (Monomial::new(vec![-1, 2], 0), rat(-2)),
            ],
        );
        let alt = alternator(&f, 2).unwrap();
        for s in SignedPerm::generators(2) {
            let image = alt.map_monomials(|m| s.act_monomial(m));
            assert_eq!(image, alt.neg());
        }
    }

    // ---- embedding ----

    #[test]
    fn embedding_matches_generator_descriptions() {
        // n=1: the sign flip is the transposition (1,2).
        let flip = sp(vec![0], vec![-1]);
        assert_eq!(embed_in_w(&flip).perm(), &[1, 0]);
        // n=2: the short reflection is (1,2)(3,4).
        let short = sp(vec![1, 0], vec![1, 1]);
        assert_eq!(embed_in_w(&short).perm(), &[1, 0, 3, 2]);
        // n=2: the long reflection (flip coordinate 2) is (2,3).
        let long = sp(vec![0, 1], vec![1, -1]);
        assert_eq!(embed_in_w(&long).perm(), &[0, 2, 1, 3]);
    }

    #[test]
    fn embedding_is_a_homomorphism_preserving_the_pairing() {
        for n in 1..=3 {
            let gamma = enumerate_gamma(n).unwrap();
            for w in &gamma {
                let e = embed_in_w(w);
                // image commutes with the pairing i ↔ 2n+1−i
                for i in 0..2 * n {
                    assert_eq!(e.apply(2 * n - 1 - i), 2 * n - 1 - e.apply(i));
                }
            }
            for a in &gamma {
                for b in &gamma {
                    assert_eq!(
                        embed_in_w(&a.compose(b)),
                        embed_in_w(a).compose(&embed_in_w(b))
                    );
                }
            }
        }
    }

    // ---- W lengths & Poincaré ----

    #[test]
    fn w_length_examples() {
        assert_eq!(PermW::new(vec![0, 1, 2, 3]).length(), 0);
        assert_eq!(PermW::new(vec![1, 0, 2, 3]).length(), 1);
        assert_eq!(PermW::new(vec![3, 2, 1, 0]).length(), 6);
    }

    #[test]
    fn poincare_rank_one() {
        // S_2: 1 + t.
        let q_inv = poincare_q_inv(1).unwrap();
        let expected = LaurentPoly::from_terms(
            1,
            [
                (Monomial::u_power(1, 0), rat(1)),
                (Monomial::u_power(1, 2), rat(1)),
            ],
        );
        assert_eq!(q_inv, expected);
    }

    #[test]
    fn poincare_matches_product_formula() {
        // Oracle: ∏_{i=1}^{2n} (1 − t^i)/(1 − t), expanded via exact division.
        for n in 1..=3 {
            let q_inv = poincare_q_inv(n).unwrap();
            let one = LaurentPoly::one(n);
            let t = LaurentPoly::t(n);
            let mut numer = LaurentPoly::one(n);
            for i in 1..=2 * n {
                let mut t_i = LaurentPoly::one(n);
                for _ in 0..i {
                    t_i = t_i.try_mul(&t).unwrap();
                }
                numer = numer.try_mul(&one.try_sub(&t_i).unwrap()).unwrap();
            }
            let mut denom = LaurentPoly::one(n);
            for _ in 0..2 * n {
                denom = denom.try_mul(&one.try_sub(&t).unwrap()).unwrap();
            }
            assert_eq!(numer.exact_div(&denom).unwrap(), q_inv);
        }
    }

    #[test]
    fn poincare_at_t_zero_is_one() {
        let q_inv = poincare_q_inv(2).unwrap();
        assert!(q_inv.substitute_u(&rat(0)).unwrap().is_one());
    }

    #[test]
    fn poincare_guard() {
        assert!(matches!(
            poincare_q_inv(4).unwrap_err(),
            Error::RankTooLarge(4, _)
        ));
    }
}
