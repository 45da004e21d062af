//! Differential-reflection operators `ξ_i`, their algebraic relations, and
//! the constant-term scalar product at `α = 1/k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{compare, compositions, dominance, partitions, Composition, OrderRelation};
use crate::error::{JackError, Result};
use crate::poly::{specialize_frac, AlphaFrac, AlphaPoly, Coeff, Exponent, MPoly};
use crate::recursion::{e_nonsym, phi, MemoStore};
use crate::symmetric::{monomial_symmetric, p_sym};

/// `ξ_i f = α x_i ∂_i f + Σ_{j<i} N_ij(x_j f) + Σ_{j>i} x_j N_ij(f)`.
///
/// `alpha` is the value of α in the coefficient ring, so the same code
/// serves generic α (`AlphaPoly::alpha()`) and specialized α (a rational).
pub fn xi_apply<C: Coeff>(i: usize, f: &MPoly<C>, alpha: &C) -> Result<MPoly<C>> {
    let n = f.nvars();
    if i == 0 || i > n {
        return Err(JackError::IndexOutOfRange { index: i, n });
    }
    let mut out = f.euler(i).scale(alpha);
    for j in 1..i {
        out.add_assign_poly(&f.mul_var(j).divided_transposition(i, j)?);
    }
    for j in i + 1..=n {
        out.add_assign_poly(&f.divided_transposition(i, j)?.mul_var(j));
    }
    Ok(out)
}

fn xi_generic(i: usize, f: &MPoly<AlphaPoly>) -> MPoly<AlphaPoly> {
    xi_apply(i, f, &AlphaPoly::alpha()).expect("index in range")
}

#[derive(Clone, Debug)]
pub struct EigenCheck {
    pub i: usize,
    pub eigenvalue: AlphaPoly,
    pub holds: bool,
}

/// `ξ_i E_λ = λ̄_i E_λ` for each `i`.
pub fn verify_eigen(lambda: &Composition, memo: &MemoStore) -> Vec<EigenCheck> {
    let e = e_nonsym(lambda, memo);
    let alpha = AlphaFrac::from_poly(AlphaPoly::alpha());
    (1..=lambda.n())
        .map(|i| {
            let ev = lambda.eigenvalue(i).expect("index in range");
            let lhs = xi_apply(i, &e, &alpha).expect("index in range");
            let holds = lhs == e.scale(&AlphaFrac::from_poly(ev.clone()));
            EigenCheck {
                i,
                eigenvalue: ev,
                holds,
            }
        })
        .collect()
}

/// Outcome of an exhaustive operator-identity sweep.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub failure: Option<String>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn monomials(n: usize, max_degree: u32) -> impl Iterator<Item = (Composition, MPoly<AlphaPoly>)> {
    (0..=max_degree).flat_map(move |d| {
        compositions(n, d).into_iter().map(|c| {
            let f = MPoly::monomial(&c.as_exponent(), AlphaPoly::one());
            (c, f)
        })
    })
}

/// The graded-Hecke relations between the `ξ_i` and the `s_j`, and pairwise
/// commutation of the `ξ_i`, on every monomial of degree `≤ max_degree`.
///
/// The commutation `ξ_i s_j = s_j ξ_i` is checked for every `s_j` that
/// fixes `x_i`, i.e. `j ∉ {i−1, i}`.
pub fn hecke_relations_check(n: usize, max_degree: u32) -> RelationReport {
    let mut rep = RelationReport::default();
    for (c, f) in monomials(n, max_degree) {
        let xi: Vec<MPoly<AlphaPoly>> = (1..=n).map(|i| xi_generic(i, &f)).collect();
        for i in 1..n {
            let lhs = &xi_generic(i, &f.s(i)) - &xi[i].s(i);
            rep.record(lhs == f, || format!("xi_{i} s_{i} - s_{i} xi_{} = 1 fails on x^{c:?}", i + 1));
            let lhs = &xi_generic(i + 1, &f.s(i)) - &xi[i - 1].s(i);
            rep.record(lhs == -f.clone(), || {
                format!("xi_{} s_{i} - s_{i} xi_{i} = -1 fails on x^{c:?}", i + 1)
            });
        }
        for i in 1..=n {
            for j in (1..n).filter(|&j| j + 1 != i && j != i) {
                let ok = xi_generic(i, &f.s(j)) == xi[i - 1].s(j);
                rep.record(ok, || format!("xi_{i} s_{j} = s_{j} xi_{i} fails on x^{c:?}"));
            }
            for j in i + 1..=n {
                let ok = xi_generic(i, &xi[j - 1]) == xi_generic(j, &xi[i - 1]);
                rep.record(ok, || format!("[xi_{i}, xi_{j}] != 0 on x^{c:?}"));
            }
        }
    }
    rep
}

/// `ξ_i Φ = Φ ξ_{i+1}` for `i < n` and `ξ_n Φ = Φ(ξ_1 + α)`.
///
/// The shift in the second relation is α: `x_n ∂_n Φ = Φ x_1 ∂_1 + Φ`
/// picks up the factor α carried by the Euler term of `ξ_n`. A constant
/// shift of 1 already fails on `f = 1`.
pub fn phi_relations_check(n: usize, max_degree: u32) -> RelationReport {
    let mut rep = RelationReport::default();
    for (c, f) in monomials(n, max_degree) {
        let pf = phi(&f);
        for i in 1..n {
            let ok = xi_generic(i, &pf) == phi(&xi_generic(i + 1, &f));
            rep.record(ok, || format!("xi_{i} Phi = Phi xi_{} fails on x^{c:?}", i + 1));
        }
        let rhs = phi(&(&xi_generic(1, &f) + &f.scale(&AlphaPoly::alpha())));
        rep.record(xi_generic(n, &pf) == rhs, || {
            format!("xi_{n} Phi = Phi (xi_1 + a) fails on x^{c:?}")
        });
    }
    rep
}

/// `ξ_i(x^λ) − λ̄_i x^λ` is supported on monomials strictly below `λ`.
pub fn triangularity_check(n: usize, max_degree: u32) -> RelationReport {
    let mut rep = RelationReport::default();
    for (c, f) in monomials(n, max_degree) {
        for i in 1..=n {
            let ev = c.eigenvalue(i).expect("index in range");
            let rest = &xi_generic(i, &f) - &f.scale(&ev);
            let bad = rest.terms().find_map(|(e, _)| {
                let mu = Composition::new(e.iter().map(|&k| k as u32).collect()).unwrap();
                (compare(&mu, &c) != OrderRelation::Less).then_some(mu)
            });
            rep.record(bad.is_none(), || {
                format!("xi_{i} x^{c:?} has a term at {:?}, not below", bad.unwrap())
            });
        }
    }
    rep
}

/// Setting `x_n = 0` commutes with `ξ_1, …, ξ_{n−1}` on monomials free of
/// `x_n`.
pub fn stability_operator_check(n: usize, max_degree: u32) -> RelationReport {
    let mut rep = RelationReport::default();
    if n < 2 {
        return rep;
    }
    let keep: Vec<usize> = (1..n).collect();
    for (c, f) in monomials(n - 1, max_degree) {
        let big = f.extend_vars(n);
        for i in 1..n {
            let lhs = xi_generic(i, &big)
                .substitute_zero(&[n])
                .and_then(|g| g.restrict_to(&keep))
                .expect("x_n occurs with nonnegative exponents");
            let ok = lhs == xi_generic(i, &f);
            rep.record(ok, || format!("x_{n}=0 does not commute with xi_{i} on x^{c:?}"));
        }
    }
    rep
}

/// Weight for the pairing at `α = 1/k`:
/// `δ = ∏_{i≠j} (1 − x_i/x_j)^k`, expanded as a Laurent polynomial.
#[derive(Clone, Debug)]
pub struct PairingContext {
    n: usize,
    k: u32,
    delta: MPoly<BigInt>,
}

impl PairingContext {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        if n == 0 {
            return Err(JackError::InsufficientVariables { need: 1, got: 0 });
        }
        if k == 0 {
            return Err(JackError::Precondition("pairing needs k >= 1".into()));
        }
        let mut delta = MPoly::one(n);
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let mut e = Exponent::from_elem(0, n);
                e[i] = 1;
                e[j] = -1;
                let mut factor = MPoly::one(n);
                factor.add_term(e, BigInt::from(-1));
                for _ in 0..k {
                    delta = &delta * &factor;
                }
            }
        }
        Ok(Self { n, k, delta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn alpha(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.k))
    }

    pub fn delta(&self) -> &MPoly<BigInt> {
        &self.delta
    }

    /// `⟨f, g⟩ = CT[f(x) g(1/x) δ] = Σ_{ν,μ} f_ν g_μ δ_{μ−ν}`.
    pub fn scalar_product(&self, f: &MPoly<BigRational>, g: &MPoly<BigRational>) -> Result<BigRational> {
        for p in [f, g] {
            if p.nvars() != self.n {
                return Err(JackError::VariableMismatch {
                    left: p.nvars(),
                    right: self.n,
                });
            }
            if !p.is_polynomial() {
                return Err(JackError::Precondition("pairing needs polynomials".into()));
            }
        }
        let mut acc = BigRational::zero();
        let mut diff = Exponent::from_elem(0, self.n);
        for (nu, a) in f.terms() {
            for (mu, b) in g.terms() {
                for t in 0..self.n {
                    diff[t] = mu[t] - nu[t];
                }
                if let Some(d) = self.delta.coeff(&diff) {
                    acc += a * b * BigRational::from_integer(d.clone());
                }
            }
        }
        Ok(acc)
    }

    /// `E_λ` with α specialized to `1/k`.
    pub fn e_specialized(&self, lambda: &Composition, memo: &MemoStore) -> MPoly<BigRational> {
        specialize_frac(&e_nonsym(lambda, memo), &self.alpha())
            .expect("hook products are positive at alpha = 1/k")
    }

    pub fn xi(&self, i: usize, f: &MPoly<BigRational>) -> Result<MPoly<BigRational>> {
        xi_apply(i, f, &self.alpha())
    }
}

/// A scalar-product identity `lhs = rhs` with the offending index.
#[derive(Clone, Debug)]
pub struct PairingFailure {
    pub mu: Vec<u32>,
    pub value: BigRational,
}

#[derive(Clone, Debug, Default)]
pub struct OrthogonalityReport {
    pub checked: usize,
    pub failure: Option<PairingFailure>,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    fn record(&mut self, mu: &[u32], value: BigRational) {
        self.checked += 1;
        if !value.is_zero() && self.failure.is_none() {
            self.failure = Some(PairingFailure {
                mu: mu.to_vec(),
                value,
            });
        }
    }
}

/// `⟨E_λ, x^μ⟩ = 0` for every composition `μ < λ`, at `α = 1/k`; when `λ`
/// is a partition, also `⟨P_λ, m_μ⟩ = 0` for every partition `μ < λ`.
pub fn verify_orthogonality(lambda: &Composition, ctx: &PairingContext, memo: &MemoStore) -> Result<OrthogonalityReport> {
    let n = lambda.n();
    if ctx.n() != n {
        return Err(JackError::VariableMismatch {
            left: n,
            right: ctx.n(),
        });
    }
    let mut rep = OrthogonalityReport::default();
    let e = ctx.e_specialized(lambda, memo);
    for mu in compositions(n, lambda.degree()) {
        if compare(&mu, lambda) == OrderRelation::Less {
            let xm = MPoly::monomial(&mu.as_exponent(), BigRational::one());
            rep.record(mu.parts(), ctx.scalar_product(&e, &xm)?);
        }
    }
    if lambda.is_partition() {
        let p = specialize_frac(&p_sym(lambda, n)?, &ctx.alpha())?;
        for mu in partitions(lambda.degree(), n) {
            if dominance(mu.parts(), lambda.parts()) == Some(std::cmp::Ordering::Less) {
                let m = monomial_symmetric::<BigRational>(mu.parts());
                rep.record(mu.parts(), ctx.scalar_product(&p, &m)?);
            }
        }
    }
    Ok(rep)
}

/// Both sides of `⟨ξ_i f, g⟩ = ⟨f, ξ_i g⟩`.
pub fn verify_self_adjoint(
    i: usize,
    f: &MPoly<BigRational>,
    g: &MPoly<BigRational>,
    ctx: &PairingContext,
) -> Result<(BigRational, BigRational)> {
    let lhs = ctx.scalar_product(&ctx.xi(i, f)?, g)?;
    let rhs = ctx.scalar_product(f, &ctx.xi(i, g)?)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::e_nonsym;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn ap(v: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64s(v)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn qmono(e: &[i32], a: i64, b: i64) -> MPoly<BigRational> {
        MPoly::monomial(e, q(a, b))
    }

    #[test]
    fn xi_examples() {
        let x1 = MPoly::monomial(&[1, 0], AlphaPoly::one());
        let expect = &MPoly::monomial(&[1, 0], ap(&[0, 1])) + &MPoly::monomial(&[0, 1], AlphaPoly::one());
        assert_eq!(xi_generic(1, &x1), expect);
        assert_eq!(
            xi_generic(2, &MPoly::one(2)),
            MPoly::constant(2, AlphaPoly::from(-1))
        );
        let memo = MemoStore::new();
        let e = e_nonsym(&c("1,0"), &memo);
        let alpha = AlphaFrac::from_poly(AlphaPoly::alpha());
        assert_eq!(xi_apply(1, &e, &alpha).unwrap(), e.scale(&alpha));
        assert!(xi_apply(3, &e, &alpha).is_err());
    }

    #[test]
    fn eigen_examples() {
        let memo = MemoStore::new();
        for s in ["0,0", "0,0,0", "1,0", "0,2,1"] {
            assert!(verify_eigen(&c(s), &memo).iter().all(|r| r.holds), "{s}");
        }
        let evs: Vec<AlphaPoly> = verify_eigen(&c("0,2,1"), &memo).into_iter().map(|r| r.eigenvalue).collect();
        assert_eq!(evs, vec![ap(&[-2]), ap(&[0, 2]), ap(&[-1, 1])]);
        let evs: Vec<AlphaPoly> = verify_eigen(&c("0,0,0"), &memo).into_iter().map(|r| r.eigenvalue).collect();
        assert_eq!(evs, vec![ap(&[0]), ap(&[-1]), ap(&[-2])]);
    }

    #[test]
    fn hecke_small() {
        let r = hecke_relations_check(2, 3);
        assert!(r.holds(), "{:?}", r.failure);
        let r = hecke_relations_check(3, 3);
        assert!(r.holds(), "{:?}", r.failure);
        // ξ_1 s_2 = s_2 ξ_1 on a sample
        let f = MPoly::monomial(&[1, 2, 0], AlphaPoly::one());
        assert_eq!(xi_generic(1, &f.s(2)), xi_generic(1, &f).s(2));
    }

    #[test]
    fn xi_does_not_commute_with_adjacent_left_reflection() {
        // s_{i−1} moves x_i, so the commutation cannot extend to j = i − 1.
        let f = MPoly::monomial(&[1, 0, 0], AlphaPoly::one());
        assert_ne!(xi_generic(2, &f.s(1)), xi_generic(2, &f).s(1));
    }

    #[test]
    fn commutators_vanish_on_x1x2() {
        let f = MPoly::monomial(&[1, 1, 0], AlphaPoly::one());
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(xi_generic(i, &xi_generic(j, &f)), xi_generic(j, &xi_generic(i, &f)));
            }
        }
    }

    #[test]
    fn phi_relations_small() {
        let r = phi_relations_check(3, 2);
        assert!(r.holds(), "{:?}", r.failure);
        assert!(r.checked > 0);
    }

    #[test]
    fn unit_shift_in_cyclic_relation_fails() {
        let one = MPoly::one(3);
        let lhs = xi_generic(3, &phi(&one));
        assert_ne!(lhs, phi(&(&xi_generic(1, &one) + &one)));
        assert_eq!(lhs, phi(&(&xi_generic(1, &one) + &one.scale(&AlphaPoly::alpha()))));
    }

    #[test]
    fn triangularity_small() {
        let r = triangularity_check(3, 3);
        assert!(r.holds(), "{:?}", r.failure);
    }

    #[test]
    fn stability_small() {
        let r = stability_operator_check(3, 3);
        assert!(r.holds(), "{:?}", r.failure);
    }

    #[test]
    fn delta_constant_terms() {
        // Dyson: CT ∏_{i≠j}(1 − x_i/x_j)^k = (nk)!/(k!)^n
        for (n, k, ct) in [(2, 1, 2), (3, 1, 6), (2, 2, 6), (3, 2, 90)] {
            let ctx = PairingContext::new(n, k).unwrap();
            assert_eq!(ctx.delta().constant_term(), BigInt::from(ct), "n={n} k={k}");
            for i in 1..n {
                assert_eq!(ctx.delta().s(i), *ctx.delta());
            }
        }
        assert!(PairingContext::new(2, 0).is_err());
    }

    #[test]
    fn pairing_examples() {
        let ctx = PairingContext::new(2, 1).unwrap();
        let one = MPoly::constant(2, q(1, 1));
        assert_eq!(ctx.scalar_product(&one, &one).unwrap(), q(2, 1));
        let x1 = qmono(&[1, 0], 1, 1);
        let x2 = qmono(&[0, 1], 1, 1);
        assert_eq!(ctx.scalar_product(&x1, &x2).unwrap(), q(-1, 1));
        let e = ctx.e_specialized(&c("1,0"), &MemoStore::new());
        assert_eq!(e, &x1 + &qmono(&[0, 1], 1, 2));
        assert_eq!(ctx.scalar_product(&e, &x2).unwrap(), q(0, 1));
        let laurent = qmono(&[-1, 0], 1, 1);
        assert!(ctx.scalar_product(&laurent, &x2).is_err());
    }

    #[test]
    fn pairing_is_symmetric() {
        let ctx = PairingContext::new(3, 2).unwrap();
        let f = &qmono(&[2, 0, 1], 3, 1) + &qmono(&[0, 1, 0], -1, 2);
        let g = &qmono(&[1, 1, 1], 1, 1) + &qmono(&[0, 3, 0], 2, 3);
        assert_eq!(ctx.scalar_product(&f, &g).unwrap(), ctx.scalar_product(&g, &f).unwrap());
    }

    #[test]
    fn orthogonality_examples() {
        let memo = MemoStore::new();
        let ctx = PairingContext::new(2, 1).unwrap();
        for s in ["1,0", "1,1", "2,0", "0,2"] {
            let r = verify_orthogonality(&c(s), &ctx, &memo).unwrap();
            assert!(r.holds(), "{s}: {:?}", r.failure);
        }
        assert_eq!(verify_orthogonality(&c("1,1"), &ctx, &memo).unwrap().checked, 0);
        // (2,0): μ ∈ {(1,1), (0,2)} plus the partition (1,1)
        assert_eq!(verify_orthogonality(&c("2,0"), &ctx, &memo).unwrap().checked, 3);
    }

    #[test]
    fn self_adjoint_examples() {
        let ctx = PairingContext::new(2, 1).unwrap();
        let (l, r) = verify_self_adjoint(1, &qmono(&[1, 0], 1, 1), &qmono(&[0, 1], 1, 1), &ctx).unwrap();
        assert_eq!(l, r);
        let ctx = PairingContext::new(2, 2).unwrap();
        let f = qmono(&[2, 0], 1, 1);
        let g = qmono(&[1, 1], 1, 1);
        for i in 1..=2 {
            let (l, r) = verify_self_adjoint(i, &f, &g, &ctx).unwrap();
            assert_eq!(l, r);
            let (l, r) = verify_self_adjoint(i, &f, &f, &ctx).unwrap();
            assert_eq!(l, r);
        }
    }
}
