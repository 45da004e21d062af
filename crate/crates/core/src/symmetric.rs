//! Symmetric Jack polynomials `J_λ`, `P_λ` obtained from `F`, expansions in
//! monomial bases, and independent oracles (Schur functions, elementary
//! products, and a Gram–Schmidt construction of `E_λ` at `α = 1/k`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cherednik::PairingContext;
use crate::combinatorics::{compare, compositions, factorial, Composition, OrderRelation, Permutation};
use crate::error::{JackError, Result};
use crate::format::{CoefJson, JsonCoeff};
use crate::poly::{divide_by_alpha_poly, specialize_poly, AlphaFrac, AlphaPoly, Coeff, Exponent, MPoly};
use crate::recursion::{f_nonsym, phi, MemoStore};

/// In-place lexicographic successor; false once the last arrangement is
/// reached.
fn next_arrangement<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every distinct rearrangement of `parts`.
fn arrangements(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_arrangement(&mut v) {
        out.push(v.clone());
    }
    out
}

/// `u_μ = ∏_{i≥1} m_i(μ)!`, zeros excluded.
fn multiplicity_factorial(parts: &[u32]) -> BigInt {
    let mut sorted: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    sorted.sort_unstable();
    sorted
        .chunk_by(|a, b| a == b)
        .map(|run| factorial(run.len()))
        .product()
}

/// `m_μ` in `μ.len()` variables (`μ` padded with zeros to the variable count).
pub fn monomial_symmetric<C: Coeff>(mu: &[u32]) -> MPoly<C> {
    let mut out = MPoly::zero(mu.len());
    for a in arrangements(mu) {
        out.add_term(a.iter().map(|&k| k as i32).collect(), C::one());
    }
    out
}

/// The partial monomial `m^(m)_μ = x^{μ'} · m_{μ''}(x_{m+1}, …, x_n)`.
pub fn partial_monomial<C: Coeff>(mu: &[u32], m: usize) -> MPoly<C> {
    let mut out = MPoly::zero(mu.len());
    for tail in arrangements(&mu[m..]) {
        let e: Exponent = mu[..m].iter().chain(&tail).map(|&k| k as i32).collect();
        out.add_term(e, C::one());
    }
    out
}

fn pad(parts: &[u32], n: usize) -> Vec<u32> {
    let mut v = parts.to_vec();
    v.resize(n.max(parts.len()), 0);
    v
}

/// `J_λ` in `n − l(λ)` variables as `F_λ(0, …, 0, x_{m+1}, …, x_n)` with
/// `λ` placed in the first `m = l(λ)` of `n` slots.
pub fn j_via_restriction(lambda: &Composition, n: usize, memo: &MemoStore) -> Result<MPoly<AlphaPoly>> {
    lambda.require_partition()?;
    let parts = lambda.nonzero_parts();
    let m = parts.len();
    if n < (2 * m).max(1) {
        return Err(JackError::InsufficientVariables {
            need: (2 * m).max(1),
            got: n,
        });
    }
    if m == 0 {
        return Ok(MPoly::one(n));
    }
    let padded = Composition::padded(&parts, n)?;
    let f = f_nonsym(&padded, memo);
    let zeroed: Vec<usize> = (1..=m).collect();
    let keep: Vec<usize> = (m + 1..=n).collect();
    f.substitute_zero(&zeroed)?.restrict_to(&keep)
}

/// `J_λ = (1/(n−m)!) Σ_{w∈S_n} w Φ^m F_{λ⁰}`.
pub fn j_via_symmetrization(lambda: &Composition, n: usize, memo: &MemoStore) -> Result<MPoly<AlphaPoly>> {
    lambda.require_partition()?;
    let parts = lambda.nonzero_parts();
    let m = parts.len();
    if n == 0 || m > n {
        return Err(JackError::InsufficientVariables {
            need: m.max(1),
            got: n,
        });
    }
    let shape = Composition::padded(&parts, n)?;
    let mut g = f_nonsym(&shape.zero_shape()?, memo).as_ref().clone();
    for _ in 0..m {
        g = phi(&g);
    }
    let mut sum = MPoly::zero(n);
    for w in Permutation::all(n) {
        sum.add_assign_poly(&g.act(&w));
    }
    sum.div_int(&factorial(n - m))
}

/// `J_λ` in `n` variables by the restriction route; zero when `l(λ) > n`.
pub fn j_sym(lambda: &Composition, n: usize, memo: &MemoStore) -> Result<MPoly<AlphaPoly>> {
    lambda.require_partition()?;
    let m = lambda.length();
    if n == 0 {
        return Err(JackError::InsufficientVariables { need: 1, got: 0 });
    }
    if m > n {
        return Ok(MPoly::zero(n));
    }
    j_via_restriction(lambda, n + m, memo)
}

/// `P_λ = J_λ / ∏_{s∈λ} c_λ(s)`.
pub fn p_sym(lambda: &Composition, n: usize) -> Result<MPoly<AlphaFrac>> {
    let memo = MemoStore::new();
    p_sym_with(lambda, n, &memo)
}

pub fn p_sym_with(lambda: &Composition, n: usize, memo: &MemoStore) -> Result<MPoly<AlphaFrac>> {
    let j = j_sym(lambda, n, memo)?;
    divide_by_alpha_poly(&j, &lambda.lower_hook_product())
}

/// `f = Σ_μ v_μ m_μ`, entries in decreasing lexicographic order of `μ`
/// (so the leading entry is dominance-maximal).
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialExpansion<C> {
    n: usize,
    entries: Vec<(Vec<u32>, C)>,
}

impl<C: Coeff> MonomialExpansion<C> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `(μ, v_μ)` with `μ` given by its nonzero parts.
    pub fn entries(&self) -> &[(Vec<u32>, C)] {
        &self.entries
    }

    pub fn coeff(&self, mu: &[u32]) -> Option<&C> {
        self.entries.iter().find(|(m, _)| m == mu).map(|(_, c)| c)
    }

    /// The leading index, i.e. `λ` when expanding `J_λ` or `P_λ`.
    pub fn leading(&self) -> Option<&[u32]> {
        self.entries.first().map(|(m, _)| m.as_slice())
    }

    /// `ṽ_μ = v_μ / u_μ`; fails if a quotient leaves the coefficient ring.
    pub fn augmented(&self) -> Result<Vec<(Vec<u32>, C)>> {
        self.entries
            .iter()
            .map(|(mu, v)| {
                let u = multiplicity_factorial(mu);
                v.div_int(&u)
                    .map(|q| (mu.clone(), q))
                    .ok_or_else(|| JackError::NonIntegral(format!("coefficient {v:?} of m{mu:?} / {u}")))
            })
            .collect()
    }

    pub fn to_poly(&self) -> MPoly<C> {
        let mut out = MPoly::zero(self.n);
        for (mu, v) in &self.entries {
            out.add_scaled(&monomial_symmetric(&pad(mu, self.n)), v);
        }
        out
    }
}

/// Expand a symmetric polynomial over the `m_μ` by repeatedly peeling off
/// the lexicographically largest remaining term.
pub fn expand_monomial<C: Coeff>(f: &MPoly<C>) -> Result<MonomialExpansion<C>> {
    let n = f.nvars();
    if !f.is_polynomial() {
        return Err(JackError::Precondition("expansion needs a polynomial".into()));
    }
    if let Some(i) = f.is_symmetric_under(1..=n.saturating_sub(1)) {
        return Err(JackError::NotSymmetric(i));
    }
    let mut rest = f.clone();
    let mut entries = Vec::new();
    while let Some((top, v)) = rest.terms().max_by(|a, b| a.0.cmp(b.0)) {
        let mu: Vec<u32> = top.iter().map(|&k| k as u32).collect();
        let v = v.clone();
        rest.add_scaled(&monomial_symmetric(&mu), &-v.clone());
        entries.push((mu.into_iter().filter(|&k| k > 0).collect(), v));
    }
    Ok(MonomialExpansion { n, entries })
}

/// `f = Σ_{μ∈Λ^(m)} a_μ m̃^(m)_μ` with `m̃^(m)_μ = u_{μ''} m^(m)_μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialSymExpansion<C> {
    m: usize,
    n: usize,
    entries: Vec<(Vec<u32>, C)>,
}

impl<C: Coeff> PartialSymExpansion<C> {
    pub fn split(&self) -> usize {
        self.m
    }

    /// `(μ, a_μ)` with `μ` a full `n`-tuple whose tail is weakly decreasing.
    pub fn entries(&self) -> &[(Vec<u32>, C)] {
        &self.entries
    }

    pub fn coeff(&self, mu: &[u32]) -> Option<&C> {
        self.entries.iter().find(|(m, _)| m == mu).map(|(_, c)| c)
    }

    pub fn to_poly(&self) -> MPoly<C> {
        let mut out = MPoly::zero(self.n);
        for (mu, a) in &self.entries {
            let u = multiplicity_factorial(&mu[self.m..]);
            let u = C::from_int(i64::try_from(u).expect("small multiplicity"));
            out.add_scaled(&partial_monomial(mu, self.m), &(a.clone() * &u));
        }
        out
    }
}

pub fn expand_partial_sym<C: Coeff>(f: &MPoly<C>, m: usize) -> Result<PartialSymExpansion<C>> {
    let n = f.nvars();
    if m > n {
        return Err(JackError::IndexOutOfRange { index: m, n });
    }
    if !f.is_polynomial() {
        return Err(JackError::Precondition("expansion needs a polynomial".into()));
    }
    if m + 1 < n {
        if let Some(i) = f.is_symmetric_under(m + 1..=n - 1) {
            return Err(JackError::NotSymmetric(i));
        }
    }
    let mut entries = Vec::new();
    for (e, c) in f.sorted_terms() {
        let mu: Vec<u32> = e.iter().map(|&k| k as u32).collect();
        if !mu[m..].windows(2).all(|w| w[0] >= w[1]) {
            continue;
        }
        let u = multiplicity_factorial(&mu[m..]);
        let a = c
            .div_int(&u)
            .ok_or_else(|| JackError::NonIntegral(format!("coefficient {c:?} at {mu:?} / {u}")))?;
        entries.push((mu, a));
    }
    Ok(PartialSymExpansion { m, n, entries })
}

/// Serialized expansion table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub lambda: Vec<u32>,
    pub basis: String,
    pub entries: Vec<ExpansionEntryJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionEntryJson {
    pub mu: Vec<u32>,
    pub coef: CoefJson,
}

/// Basis tag used in [`ExpansionJson`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Augmented,
    Partial,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Augmented => "m-tilde",
            Basis::Partial => "m^(m)",
        }
    }
}

pub fn expansion_json<C: JsonCoeff>(lambda: &[u32], basis: Basis, entries: &[(Vec<u32>, C)]) -> ExpansionJson {
    ExpansionJson {
        lambda: lambda.to_vec(),
        basis: basis.tag().to_string(),
        entries: entries
            .iter()
            .map(|(mu, c)| ExpansionEntryJson {
                mu: mu.clone(),
                coef: c.to_json(),
            })
            .collect(),
    }
}

/// `s_λ(x_1, …, x_n)` by enumerating semistandard tableaux.
pub fn schur_oracle(lambda: &[u32], n: usize) -> MPoly<BigInt> {
    let rows: Vec<usize> = lambda.iter().filter(|&&p| p > 0).map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut out = MPoly::zero(n);
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    fn fill(
        p: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut MPoly<BigInt>,
    ) {
        if p == cells.len() {
            let mut e = Exponent::from_elem(0, n);
            for row in grid.iter() {
                for &l in row {
                    e[l - 1] += 1;
                }
            }
            out.add_term(e, BigInt::one());
            return;
        }
        let (i, j) = cells[p];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        for l in lo_row.max(lo_col)..=n {
            grid[i][j] = l;
            fill(p + 1, cells, grid, n, out);
        }
    }
    fill(0, &cells, &mut grid, n, &mut out);
    out
}

/// `e_r(x_1, …, x_n)`.
pub fn elementary(r: usize, n: usize) -> MPoly<BigInt> {
    if r > n {
        return MPoly::zero(n);
    }
    let mut base = vec![0u32; n];
    base[..r].iter_mut().for_each(|p| *p = 1);
    monomial_symmetric(&base)
}

/// `e_ρ = ∏ e_{ρ_i}`.
pub fn elementary_product(rho: &[u32], n: usize) -> MPoly<BigInt> {
    rho.iter()
        .fold(MPoly::one(n), |acc, &r| &acc * &elementary(r as usize, n))
}

/// `J_λ(x; 1) = (∏_{s} (a(s) + l(s) + 1)) · s_λ`.
pub fn alpha_one_check(lambda: &Composition, n: usize, memo: &MemoStore) -> Result<bool> {
    let j = specialize_poly(&j_sym(lambda, n, memo)?, &BigRational::one());
    let hooks = lambda.lower_hook_product().eval(&BigRational::one());
    let s = schur_oracle(lambda.parts(), n).map_coeffs(|c| BigRational::from_integer(c.clone()));
    Ok(j == s.scale(&hooks))
}

/// `J_λ(x; 0)` is a nonzero multiple of `e_{λ′}` (or both vanish).
pub fn alpha_zero_check(lambda: &Composition, n: usize, memo: &MemoStore) -> Result<bool> {
    let j = specialize_poly(&j_sym(lambda, n, memo)?, &BigRational::zero());
    let e = elementary_product(&lambda.conjugate()?, n).map_coeffs(|c| BigRational::from_integer(c.clone()));
    Ok(proportional(&j, &e))
}

fn proportional(a: &MPoly<BigRational>, b: &MPoly<BigRational>) -> bool {
    match b.terms().next() {
        None => a.is_zero(),
        Some((e, cb)) => {
            let ca = a.coeff_or_zero(e);
            !ca.is_zero() && *a == b.scale(&(ca / cb))
        }
    }
}

/// `E_λ` at `α = 1/k` from its defining conditions: `x^λ` plus a
/// combination of `x^ν` (`ν < λ`) orthogonal to every `x^μ`, `μ < λ`.
pub fn gram_schmidt_oracle(lambda: &Composition, k: u32) -> Result<MPoly<BigRational>> {
    let n = lambda.n();
    let ctx = PairingContext::new(n, k)?;
    let lower: Vec<Composition> = compositions(n, lambda.degree())
        .into_iter()
        .filter(|mu| compare(mu, lambda) == OrderRelation::Less)
        .collect();
    let mono = |c: &Composition| MPoly::monomial(&c.as_exponent(), BigRational::one());
    let lead = mono(lambda);
    let basis: Vec<MPoly<BigRational>> = lower.iter().map(mono).collect();
    let size = basis.len();
    // rows: test monomials x^μ; columns: unknown coefficients of x^ν
    let mut a = vec![vec![BigRational::zero(); size + 1]; size];
    for (r, xm) in basis.iter().enumerate() {
        for (col, xn) in basis.iter().enumerate() {
            a[r][col] = ctx.scalar_product(xn, xm)?;
        }
        a[r][size] = -ctx.scalar_product(&lead, xm)?;
    }
    let coeffs = solve(a).ok_or_else(|| JackError::SingularSystem(format!("pairing matrix for {lambda:?}, k={k}")))?;
    let mut out = lead;
    for (c, xn) in coeffs.iter().zip(&basis) {
        out.add_scaled(xn, c);
    }
    Ok(out)
}

/// Gauss–Jordan elimination on an augmented square system.
fn solve(mut a: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let size = a.len();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot).skip(col) {
                    *v -= &factor * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[size].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;
    use crate::poly::specialize_frac;
    use crate::recursion::e_nonsym;
    use crate::tableau::j_comb;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn ap(v: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64s(v)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn restriction_examples() {
        let memo = MemoStore::new();
        let j = j_via_restriction(&c("1"), 2, &memo).unwrap();
        assert_eq!(j, MPoly::monomial(&[1], AlphaPoly::one()));
        let j = j_via_restriction(&c("1,1"), 4, &memo).unwrap();
        assert_eq!(j, MPoly::monomial(&[1, 1], ap(&[2])));
        let j = j_via_restriction(&c("2"), 2, &memo).unwrap();
        assert_eq!(j, MPoly::monomial(&[2], ap(&[1, 1])));
        assert!(j_via_restriction(&c("1,1"), 3, &memo).is_err());
        assert!(j_via_restriction(&c("1,2"), 4, &memo).is_err());
    }

    #[test]
    fn symmetrization_examples() {
        let memo = MemoStore::new();
        let j = j_via_symmetrization(&c("1"), 2, &memo).unwrap();
        assert_eq!(j, monomial_symmetric(&[1, 0]));
        let j = j_via_symmetrization(&c("1,1"), 2, &memo).unwrap();
        assert_eq!(j, MPoly::monomial(&[1, 1], ap(&[2])));
        let j = j_via_symmetrization(&c("2,1"), 3, &memo).unwrap();
        let expect = &monomial_symmetric::<AlphaPoly>(&[2, 1, 0]).scale(&ap(&[2, 1]))
            + &monomial_symmetric::<AlphaPoly>(&[1, 1, 1]).scale(&ap(&[6]));
        assert_eq!(j, expect);
        assert!(j_via_symmetrization(&c("1,1,1"), 2, &memo).is_err());
    }

    #[test]
    fn routes_agree_small() {
        let memo = MemoStore::new();
        for d in 0..=4 {
            for lam in partitions(d, d as usize) {
                let m = lam.length();
                for n in m.max(1)..=4 {
                    let comb = j_comb(&lam, n).unwrap();
                    assert_eq!(j_via_symmetrization(&lam, n, &memo).unwrap(), comb, "{lam:?} n={n}");
                    assert_eq!(j_sym(&lam, n, &memo).unwrap(), comb, "{lam:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn p_examples() {
        let p = p_sym(&c("1,1"), 2).unwrap();
        assert_eq!(p, MPoly::monomial(&[1, 1], AlphaFrac::one()));
        let p = p_sym(&c("2"), 2).unwrap();
        let two_over = AlphaFrac::new(ap(&[2]), ap(&[1, 1])).unwrap();
        let expect = &monomial_symmetric::<AlphaFrac>(&[2, 0]) + &MPoly::monomial(&[1, 1], two_over);
        assert_eq!(p, expect);
        for n in 1..=3 {
            assert_eq!(p_sym(&c("1"), n).unwrap(), monomial_symmetric(&pad(&[1], n)));
        }
    }

    #[test]
    fn p_is_monic_and_triangular() {
        for d in 1..=4 {
            for lam in partitions(d, 4) {
                let exp = expand_monomial(&p_sym(&lam, 4).unwrap()).unwrap();
                assert_eq!(exp.leading(), Some(lam.nonzero_parts().as_slice()));
                assert!(exp.entries()[0].1.is_one());
                for (mu, _) in &exp.entries()[1..] {
                    let ord = crate::combinatorics::dominance(mu, &lam.nonzero_parts());
                    assert_eq!(ord, Some(std::cmp::Ordering::Less), "{lam:?} {mu:?}");
                }
            }
        }
    }

    #[test]
    fn monomial_expansion_examples() {
        let memo = MemoStore::new();
        let exp = expand_monomial(&j_sym(&c("2"), 2, &memo).unwrap()).unwrap();
        assert_eq!(exp.coeff(&[2]), Some(&ap(&[1, 1])));
        assert_eq!(exp.coeff(&[1, 1]), Some(&ap(&[2])));
        let aug = exp.augmented().unwrap();
        assert_eq!(aug[1], (vec![1, 1], ap(&[1])));
        let exp = expand_monomial(&j_sym(&c("2,1"), 3, &memo).unwrap()).unwrap();
        assert_eq!(exp.entries(), &[(vec![2, 1], ap(&[2, 1])), (vec![1, 1, 1], ap(&[6]))]);
        assert_eq!(exp.augmented().unwrap()[1].1, ap(&[1]));
        let exp = expand_monomial(&monomial_symmetric::<AlphaPoly>(&[1, 0, 0])).unwrap();
        assert_eq!(exp.entries(), &[(vec![1], AlphaPoly::one())]);
    }

    #[test]
    fn monomial_expansion_rejects_nonsymmetric() {
        let f = MPoly::monomial(&[1, 0], AlphaPoly::one());
        assert!(matches!(expand_monomial(&f), Err(JackError::NotSymmetric(1))));
        let half = MPoly::monomial(&[1, 1], BigInt::from(3));
        assert!(matches!(
            expand_monomial(&half).unwrap().augmented(),
            Err(JackError::NonIntegral(_))
        ));
    }

    #[test]
    fn expansions_reconstruct() {
        let memo = MemoStore::new();
        for lam in partitions(4, 4) {
            let j = j_sym(&lam, 4, &memo).unwrap();
            assert_eq!(expand_monomial(&j).unwrap().to_poly(), j);
        }
        for s in ["1,0,2,0", "0,2,1,0", "2,0,0,0"] {
            let l = c(s);
            let f = f_nonsym(&l, &memo);
            let exp = expand_partial_sym(f.as_ref(), l.length()).unwrap();
            assert_eq!(exp.to_poly(), *f);
        }
    }

    #[test]
    fn partial_expansion_examples() {
        let memo = MemoStore::new();
        let f = f_nonsym(&c("1,0"), &memo);
        let exp = expand_partial_sym(f.as_ref(), 1).unwrap();
        assert_eq!(exp.coeff(&[1, 0]), Some(&ap(&[1, 1])));
        assert_eq!(exp.coeff(&[0, 1]), Some(&ap(&[1])));
        let f = f_nonsym(&c("1,1"), &memo);
        let exp = expand_partial_sym(f.as_ref(), 2).unwrap();
        assert_eq!(exp.entries(), &[(vec![1, 1], ap(&[2, 3, 1]))]);
        // m = 0 gives the augmented monomial expansion
        let j = j_sym(&c("2,1"), 3, &memo).unwrap();
        let part = expand_partial_sym(&j, 0).unwrap();
        let aug = expand_monomial(&j).unwrap().augmented().unwrap();
        assert_eq!(part.entries().len(), aug.len());
        for (mu, a) in &aug {
            assert_eq!(part.coeff(&pad(mu, 3)), Some(a));
        }
        assert!(expand_partial_sym(&MPoly::monomial(&[0, 1, 0], ap(&[1])), 1).is_err());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_oracle(&[1], 2), monomial_symmetric(&[1, 0]));
        let s2 = &monomial_symmetric::<BigInt>(&[2, 0]) + &monomial_symmetric(&[1, 1]);
        assert_eq!(schur_oracle(&[2], 2), s2);
        assert_eq!(schur_oracle(&[1, 1], 2), MPoly::monomial(&[1, 1], BigInt::one()));
        assert!(schur_oracle(&[1, 1, 1], 2).is_zero());
        // number of SSYT of shape (2,1) with entries ≤ 3 is 8
        let total: BigInt = schur_oracle(&[2, 1], 3).terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(2, 2), MPoly::monomial(&[1, 1], BigInt::one()));
        assert_eq!(elementary(0, 3), MPoly::one(3));
        assert!(elementary(3, 2).is_zero());
        assert_eq!(elementary_product(&[1, 1], 2).len(), 3);
    }

    #[test]
    fn specializations_small() {
        let memo = MemoStore::new();
        for d in 1..=4 {
            for lam in partitions(d, d as usize) {
                for n in 1..=3 {
                    assert!(alpha_one_check(&lam, n, &memo).unwrap(), "{lam:?} n={n}");
                    assert!(alpha_zero_check(&lam, n, &memo).unwrap(), "{lam:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_examples() {
        assert_eq!(
            gram_schmidt_oracle(&c("0,1"), 1).unwrap(),
            MPoly::monomial(&[0, 1], q(1, 1))
        );
        let expect = &MPoly::monomial(&[1, 0], q(1, 1)) + &MPoly::monomial(&[0, 1], q(1, 2));
        assert_eq!(gram_schmidt_oracle(&c("1,0"), 1).unwrap(), expect);
        assert_eq!(gram_schmidt_oracle(&c("0,0"), 1).unwrap(), MPoly::one(2));
    }

    #[test]
    fn gram_schmidt_matches_engine_small() {
        let memo = MemoStore::new();
        for l in compositions(2, 3).into_iter().chain(compositions(3, 2)) {
            for k in 1..=2u32 {
                let alpha = q(1, k as i64);
                let e = specialize_frac(&e_nonsym(&l, &memo), &alpha).unwrap();
                assert_eq!(gram_schmidt_oracle(&l, k).unwrap(), e, "{l:?} k={k}");
            }
        }
    }

    #[test]
    fn expansion_json_shape() {
        let memo = MemoStore::new();
        let exp = expand_monomial(&j_sym(&c("2,1"), 3, &memo).unwrap()).unwrap();
        let doc = expansion_json(&[2, 1], Basis::Monomial, exp.entries());
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"lambda":[2,1],"basis":"m","entries":[{"mu":[2,1],"coef":["2","1"]},{"mu":[1,1,1],"coef":["6"]}]}"#
        );
        let back: ExpansionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }
}
