//! Verification sweeps. Each check runs an exhaustive sweep over a bounded
//! range of shapes and reports a [`Verdict`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::cherednik::{
    hecke_relations_check, phi_relations_check, stability_operator_check, triangularity_check, verify_eigen,
    verify_orthogonality, verify_self_adjoint, PairingContext, RelationReport,
};
use crate::combinatorics::{compositions, factorial, partitions, Composition};
use crate::error::{JackError, Result};
use crate::poly::{specialize_frac, AlphaFrac, AlphaPoly, Coeff, MPoly};
use crate::recursion::{cyclic_phi, e_nonsym, f_nonsym, swap_op, MemoStore};
use crate::symmetric::{
    alpha_one_check, alpha_zero_check, expand_monomial, expand_partial_sym, gram_schmidt_oracle, j_sym,
    j_via_restriction, j_via_symmetrization, p_sym_with,
};
use crate::tableau::{f_comb_threaded, j_comb, lemma_witness, LemmaKind};

/// Result of one verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub theorem: String,
    pub params: serde_json::Value,
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    OracleEquivalence,
    Eigen,
    Hecke,
    Orthogonality,
    Positivity,
    CoeffIdentities,
    Stability,
    SymRoutes,
    Specializations,
    Swap,
    Cyclic,
    L2L3,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::OracleEquivalence,
        Check::Eigen,
        Check::Hecke,
        Check::Orthogonality,
        Check::Positivity,
        Check::CoeffIdentities,
        Check::Stability,
        Check::SymRoutes,
        Check::Specializations,
        Check::Swap,
        Check::Cyclic,
        Check::L2L3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::OracleEquivalence => "oracle-equivalence",
            Check::Eigen => "eigen",
            Check::Hecke => "hecke",
            Check::Orthogonality => "orthogonality",
            Check::Positivity => "positivity",
            Check::CoeffIdentities => "coeff-identities",
            Check::Stability => "stability",
            Check::SymRoutes => "sym-routes",
            Check::Specializations => "specializations",
            Check::Swap => "swap",
            Check::Cyclic => "cyclic",
            Check::L2L3 => "l2l3",
        }
    }

    pub fn theorem(self) -> &'static str {
        match self {
            Check::OracleEquivalence => "combinatorial formula for F (sum over 0-admissible tableaux)",
            Check::Eigen => "E is a simultaneous eigenfunction of the xi_i; xi_i is triangular on monomials",
            Check::Hecke => "graded Hecke relations, commuting xi_i, and the Phi intertwining relations",
            Check::Orthogonality => "E orthogonal to lower monomials, P orthogonal to lower m; xi_i self-adjoint",
            Check::Positivity => "augmented monomial coefficients of J and partial coefficients of F lie in N[a]",
            Check::CoeffIdentities => "coefficient d! of a squarefree monomial in F and of m_{1^d} in J",
            Check::Stability => "E and P stable under x_n = 0; s_i E = E when parts i, i+1 agree",
            Check::SymRoutes => "J by symmetrization, by restriction of F, and by tableaux agree",
            Check::Specializations => "J at a=1 is hook product times Schur; J at a=0 is proportional to e",
            Check::Swap => "E for lambda from E for s_i lambda by the swap operator",
            Check::Cyclic => "E_lambda = Phi(E_lambda*) when the last part is nonzero",
            Check::L2L3 => "swap and cyclic identities for the raw tableau sums",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = JackError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| JackError::Parse(format!("unknown check {s:?}")))
    }
}

/// Sweep bounds. `n_max` and `deg_max` bound the variable count and the
/// degree; `k_list` lists the `k` in `α = 1/k` for the pairing checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: usize,
    pub deg_max: u32,
    pub k_list: Vec<u32>,
    pub threads: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            n_max: 3,
            deg_max: 4,
            k_list: vec![1, 2],
            threads: 1,
        }
    }
}

/// Running tally shared by the sweeps.
#[derive(Default)]
struct Tally {
    checked: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    fn absorb(&mut self, rep: RelationReport) {
        self.checked += rep.checked;
        if self.counterexample.is_none() {
            self.counterexample = rep.failure;
        }
    }

    fn done(&self) -> bool {
        self.counterexample.is_some()
    }
}

fn shapes(n_range: impl Iterator<Item = usize>, deg_max: u32) -> Vec<Composition> {
    n_range
        .flat_map(|n| (0..=deg_max).flat_map(move |d| compositions(n, d)))
        .collect()
}

pub fn run_check(check: Check, bounds: &Bounds) -> Result<Verdict> {
    let memo = MemoStore::new();
    let mut t = Tally::default();
    let b = bounds;
    let params = match check {
        Check::OracleEquivalence => {
            for l in shapes(1..=b.n_max, b.deg_max) {
                let ok = f_comb_threaded(&l, b.threads) == *f_nonsym(&l, &memo);
                t.record(ok, || format!("F differs at lambda={l}"));
                if t.done() {
                    break;
                }
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::Eigen => {
            for l in shapes(1..=b.n_max, b.deg_max) {
                for r in verify_eigen(&l, &memo) {
                    t.record(r.holds, || format!("xi_{} E_({l}) != ({}) E", r.i, r.eigenvalue));
                }
            }
            for n in 1..=b.n_max {
                t.absorb(triangularity_check(n, b.deg_max));
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::Hecke => {
            for n in 1..=b.n_max {
                t.absorb(hecke_relations_check(n, b.deg_max));
                t.absorb(phi_relations_check(n, b.deg_max));
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::Orthogonality => {
            for &k in &b.k_list {
                for n in 1..=b.n_max {
                    let ctx = PairingContext::new(n, k)?;
                    for d in 0..=b.deg_max {
                        for l in compositions(n, d) {
                            let rep = verify_orthogonality(&l, &ctx, &memo)?;
                            t.checked += rep.checked;
                            if let Some(f) = rep.failure {
                                t.record(false, || {
                                    format!("<E_({l}), x^{:?}> = {} at k={k}", f.mu, f.value)
                                });
                            }
                            let gs = gram_schmidt_oracle(&l, k)?;
                            t.record(gs == ctx.e_specialized(&l, &memo), || {
                                format!("Gram-Schmidt differs from E_({l}) at k={k}")
                            });
                        }
                    }
                    self_adjoint_sweep(&ctx, b.deg_max.min(2), &mut t)?;
                }
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max, "k_list": b.k_list})
        }
        Check::Positivity => {
            positivity_sweep(b, &memo, &mut t)?;
            json!({"n": b.n_max, "deg_max": b.deg_max})
        }
        Check::CoeffIdentities => {
            coeff_identity_sweep(b.deg_max, &memo, &mut t)?;
            json!({"deg_max": b.deg_max})
        }
        Check::Stability => {
            stability_sweep(b, &memo, &mut t)?;
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::SymRoutes => {
            for d in 0..=b.deg_max {
                for lam in partitions(d, d as usize) {
                    let m = lam.length();
                    for n in m.max(1)..=b.n_max {
                        let comb = j_comb(&lam, n)?;
                        let sym = j_via_symmetrization(&lam, n, &memo)?;
                        t.record(sym == comb, || format!("symmetrization route differs for ({lam}), n={n}"));
                        let res = j_sym(&lam, n, &memo)?;
                        t.record(res == comb, || format!("restriction route differs for ({lam}), n={n}"));
                    }
                    let minimal = j_via_restriction(&lam, (2 * m).max(1), &memo)?;
                    let comb = j_comb(&lam, m.max(1))?;
                    t.record(minimal == comb, || format!("restriction with n=2l differs for ({lam})"));
                }
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::Specializations => {
            for d in 1..=b.deg_max {
                for lam in partitions(d, d as usize) {
                    for n in 1..=b.n_max {
                        t.record(alpha_one_check(&lam, n, &memo)?, || {
                            format!("J_({lam})(x;1) is not hook product times s_lambda, n={n}")
                        });
                        t.record(alpha_zero_check(&lam, n, &memo)?, || {
                            format!("J_({lam})(x;0) is not proportional to e_lambda', n={n}")
                        });
                    }
                }
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::Swap => {
            for l in shapes(2..=b.n_max, b.deg_max) {
                for i in 1..l.n() {
                    if l.part(i) > l.part(i + 1) {
                        let got = swap_op(&l, i, &e_nonsym(&l.swap(i), &memo))?;
                        t.record(got == e_nonsym(&l, &memo), || format!("swap at i={i} fails for ({l})"));
                    }
                }
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::Cyclic => {
            for l in shapes(1..=b.n_max, b.deg_max) {
                if l.part(l.n()) != 0 {
                    let w = cyclic_phi(&l, &memo)?;
                    t.record(w.holds, || format!("E_({l}) != Phi(E_lambda*)"));
                }
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
        Check::L2L3 => {
            for l in shapes(1..=b.n_max, b.deg_max) {
                for i in 1..l.n() {
                    if l.part(i) == 0 && l.part(i + 1) > 0 {
                        let w = lemma_witness(&l, LemmaKind::SwapZero, i)?;
                        t.record(w.holds, || format!("swap identity fails for ({l}), i={i}"));
                    }
                }
                let w = lemma_witness(&l, LemmaKind::Cyclic, 0)?;
                t.record(w.holds, || format!("cyclic identity fails for ({l})"));
            }
            json!({"n_max": b.n_max, "deg_max": b.deg_max})
        }
    };
    Ok(Verdict {
        check: check.name().to_string(),
        theorem: check.theorem().to_string(),
        params,
        pass: t.counterexample.is_none(),
        checked: t.checked,
        counterexample: t.counterexample,
    })
}

fn self_adjoint_sweep(ctx: &PairingContext, deg: u32, t: &mut Tally) -> Result<()> {
    let n = ctx.n();
    for d in 0..=deg {
        let monos: Vec<(Composition, MPoly<BigRational>)> = compositions(n, d)
            .into_iter()
            .map(|c| {
                let f = MPoly::monomial(&c.as_exponent(), BigRational::one());
                (c, f)
            })
            .collect();
        for (a, f) in &monos {
            for (bb, g) in &monos {
                for i in 1..=n {
                    let (l, r) = verify_self_adjoint(i, f, g, ctx)?;
                    t.record(l == r, || {
                        format!("<xi_{i} x^({a}), x^({bb})> != <x^({a}), xi_{i} x^({bb})> at k={}", ctx.k())
                    });
                }
            }
        }
    }
    Ok(())
}

fn in_n_alpha(p: &AlphaPoly) -> bool {
    p.is_nonnegative()
}

/// Augmented monomial coefficients of `J_λ` for all partitions of degree
/// `≤ deg_max` in `n_max` variables, and the partial coefficients of `F_λ`
/// with split `m = l(λ)` for all compositions in at most `n_max`
/// variables.
fn positivity_sweep(b: &Bounds, memo: &MemoStore, t: &mut Tally) -> Result<()> {
    let n = b.n_max;
    for d in 0..=b.deg_max {
        for lam in partitions(d, n) {
            let exp = expand_monomial(&j_sym(&lam, n, memo)?)?;
            match exp.augmented() {
                Ok(entries) => {
                    for (mu, v) in entries {
                        t.record(in_n_alpha(&v), || format!("J_({lam}): coefficient {v} of m~{mu:?}"));
                    }
                }
                Err(e) => t.record(false, || format!("J_({lam}): {e}")),
            }
        }
    }
    for l in shapes(1..=n, b.deg_max) {
        let f = f_nonsym(&l, memo);
        match expand_partial_sym(f.as_ref(), l.length()) {
            Ok(exp) => {
                for (mu, a) in exp.entries() {
                    t.record(in_n_alpha(a), || format!("F_({l}): coefficient {a} at {mu:?}"));
                }
            }
            Err(e) => t.record(false, || format!("F_({l}): {e}")),
        }
    }
    Ok(())
}

/// Compositions of `d` with exactly `l` parts, the last nonzero.
fn compositions_ending_nonzero(l: usize, d: u32) -> Vec<Composition> {
    compositions(l, d).into_iter().filter(|c| c.part(l) > 0).collect()
}

fn coeff_identity_sweep(deg_max: u32, memo: &MemoStore, t: &mut Tally) -> Result<()> {
    for d in 1..=deg_max {
        let target = AlphaPoly::from(factorial(d as usize));
        for l in 1..=d as usize {
            for base in compositions_ending_nonzero(l, d) {
                let lam = Composition::padded(base.parts(), l + d as usize)?;
                let f = f_nonsym(&lam, memo);
                let mut e = vec![0i32; lam.n()];
                e[l..].iter_mut().for_each(|k| *k = 1);
                let c = f.coeff_or_zero(&e);
                t.record(c == target, || format!("coefficient of x_{}..x_{} in F_({lam}) is {c}", l + 1, l + d as usize));
            }
        }
        for lam in partitions(d, d as usize) {
            let exp = expand_monomial(&j_sym(&lam, d as usize, memo)?)?;
            let ones = vec![1u32; d as usize];
            let c = exp.coeff(&ones).cloned().unwrap_or_else(AlphaPoly::zero);
            t.record(c == target, || format!("coefficient of m_(1^{d}) in J_({lam}) is {c}"));
        }
    }
    Ok(())
}

fn restrict_last_zero<C: Coeff>(f: &MPoly<C>) -> Result<MPoly<C>> {
    let n = f.nvars();
    let keep: Vec<usize> = (1..n).collect();
    f.substitute_zero(&[n])?.restrict_to(&keep)
}

fn stability_sweep(b: &Bounds, memo: &MemoStore, t: &mut Tally) -> Result<()> {
    for l in shapes(2..=b.n_max, b.deg_max) {
        let n = l.n();
        if l.part(n) == 0 {
            let lower = l.drop_last()?;
            let got = restrict_last_zero(&e_nonsym(&l, memo))?;
            t.record(got == e_nonsym(&lower, memo), || format!("E_({l})|x{n}=0 != E_({lower})"));
            if l.is_partition() {
                let got = restrict_last_zero(&p_sym_with(&l, n, memo)?)?;
                t.record(got == p_sym_with(&lower, n - 1, memo)?, || {
                    format!("P_({l})|x{n}=0 != P_({lower})")
                });
            }
        }
        let e: MPoly<AlphaFrac> = e_nonsym(&l, memo);
        for i in 1..n {
            if l.part(i) == l.part(i + 1) {
                t.record(e.s(i) == e, || format!("s_{i} E_({l}) != E_({l})"));
            }
        }
    }
    for n in 2..=b.n_max {
        t.absorb(stability_operator_check(n, b.deg_max));
    }
    Ok(())
}

/// α specialized at `1/k`; exposed for callers that print specialized
/// polynomials.
pub fn alpha_of(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(k))
}

pub fn specialize_e(lambda: &Composition, k: u32, memo: &MemoStore) -> Result<MPoly<BigRational>> {
    specialize_frac(&e_nonsym(lambda, memo), &alpha_of(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            n_max: 3,
            deg_max: 3,
            k_list: vec![1, 2],
            threads: 2,
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn all_checks_pass_small() {
        for c in Check::ALL {
            let v = run_check(c, &small()).unwrap();
            assert!(v.pass, "{}: {:?}", c, v.counterexample);
            assert!(v.checked > 0, "{c} checked nothing");
        }
    }

    #[test]
    fn verdict_json_fields() {
        let v = run_check(Check::Cyclic, &small()).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        for key in ["check", "theorem", "params", "pass", "checked", "counterexample"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["check"], "cyclic");
        assert!(j["counterexample"].is_null());
    }

    #[test]
    fn tally_keeps_first_counterexample() {
        let mut t = Tally::default();
        t.record(true, || unreachable!());
        t.record(false, || "first".into());
        t.record(false, || "second".into());
        assert_eq!(t.checked, 3);
        assert_eq!(t.counterexample.as_deref(), Some("first"));
    }
}
