//! `F_λ` by the creation-operator recursion, `E_λ` by hook-product
//! division, and the auxiliary operators (`Φ_k`, the swap operator,
//! `X_λ`) as standalone functions.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Composition;
use crate::error::{JackError, Result};
use crate::format::{self, TermJson};
use crate::poly::{divide_by_alpha_poly, AlphaCoeff, AlphaFrac, AlphaPoly, Coeff, Exponent, MPoly};

/// Exponent map of `Φ_k`: `ν ↦ (ν_2, …, ν_k, ν_1 + 1, ν_{k+1}, …, ν_n)`.
fn phi_exponent(k: usize, e: &Exponent) -> Exponent {
    let mut out = e.clone();
    out[..k].rotate_left(1);
    out[k - 1] += 1;
    out
}

/// `Φ_k = x_k s_{k−1} ⋯ s_1`, 1-based `k`.
pub fn phi_k<C: Coeff>(k: usize, f: &MPoly<C>) -> Result<MPoly<C>> {
    let n = f.nvars();
    if k == 0 || k > n {
        return Err(JackError::IndexOutOfRange { index: k, n });
    }
    Ok(f.map_exponents(n, |e| phi_exponent(k, e)))
}

/// `(Φf)(x_1, …, x_n) = x_n f(x_n, x_1, …, x_{n−1})`, i.e. `Φ_n`.
pub fn phi<C: Coeff>(f: &MPoly<C>) -> MPoly<C> {
    phi_k(f.nvars(), f).expect("n >= 1")
}

/// Memo table for `F_λ`, keyed by the composition (which fixes `n`).
///
/// Shared between threads by reference; entries are only ever added, and an
/// entry always equals what the recursion would compute from scratch.
#[derive(Default)]
pub struct MemoStore {
    table: RwLock<HashMap<Composition, Arc<MPoly<AlphaPoly>>>>,
}

pub const CACHE_VERSION: u64 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u64,
    n: usize,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    lambda: Vec<u32>,
    poly: Vec<TermJson>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, lambda: &Composition) -> Option<Arc<MPoly<AlphaPoly>>> {
        self.table.read().unwrap().get(lambda).cloned()
    }

    pub fn insert(&self, lambda: Composition, f: Arc<MPoly<AlphaPoly>>) {
        self.table.write().unwrap().entry(lambda).or_insert(f);
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total_terms(&self) -> usize {
        self.table.read().unwrap().values().map(|p| p.len()).sum()
    }

    pub fn clear(&self) {
        self.table.write().unwrap().clear();
    }

    /// Variable counts present in the store, ascending.
    pub fn variable_counts(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.table.read().unwrap().keys().map(Composition::n).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// `(n, entries, total terms)` per variable count, ascending in `n`.
    pub fn stats_by_n(&self) -> Vec<(usize, usize, usize)> {
        let table = self.table.read().unwrap();
        let mut acc: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
        for (k, p) in table.iter() {
            let slot = acc.entry(k.n()).or_default();
            slot.0 += 1;
            slot.1 += p.len();
        }
        acc.into_iter().map(|(n, (e, t))| (n, e, t)).collect()
    }

    /// Serialize the entries for `n` variables to the cache JSON document.
    pub fn export_json(&self, n: usize) -> Result<String> {
        let table = self.table.read().unwrap();
        let mut keys: Vec<&Composition> = table.keys().filter(|k| k.n() == n).collect();
        keys.sort();
        let entries = keys
            .into_iter()
            .map(|k| CacheEntry {
                lambda: k.parts().to_vec(),
                poly: format::poly_to_terms(&table[k]),
            })
            .collect();
        Ok(serde_json::to_string(&CacheFile {
            version: CACHE_VERSION,
            n,
            entries,
        })?)
    }

    /// Merge a cache document into the store. The whole document is
    /// validated before anything is inserted.
    pub fn import_json(&self, text: &str) -> Result<usize> {
        let raw: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| JackError::Cache(format!("not JSON: {e}")))?;
        let version = raw
            .get("version")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| JackError::Cache("missing version".into()))?;
        if version != CACHE_VERSION {
            return Err(JackError::CacheVersion {
                found: version,
                expected: CACHE_VERSION,
            });
        }
        let file: CacheFile =
            serde_json::from_value(raw).map_err(|e| JackError::Cache(e.to_string()))?;
        let mut parsed = Vec::with_capacity(file.entries.len());
        for entry in file.entries {
            if entry.lambda.len() != file.n {
                return Err(JackError::Cache(format!(
                    "entry {:?} does not have n = {} parts",
                    entry.lambda, file.n
                )));
            }
            let lambda = Composition::new(entry.lambda)
                .map_err(|e| JackError::Cache(e.to_string()))?;
            let poly = format::poly_from_terms(file.n, &entry.poly)
                .map_err(|e| JackError::Cache(e.to_string()))?;
            parsed.push((lambda, poly));
        }
        let count = parsed.len();
        for (lambda, poly) in parsed {
            self.insert(lambda, Arc::new(poly));
        }
        Ok(count)
    }

    pub fn save(&self, path: &Path, n: usize) -> Result<()> {
        std::fs::write(path, self.export_json(n)?)?;
        Ok(())
    }

    pub fn load(&self, path: &Path) -> Result<usize> {
        let text = std::fs::read_to_string(path)?;
        self.import_json(&text)
    }
}

/// One step of the recursion: `Y_λ(F_{λ*})` with
/// `Y_λ = (λ̄_m + m)Φ_m + Φ_{m+1} + ⋯ + Φ_n`.
fn recursion_step(lambda: &Composition, prev: &MPoly<AlphaPoly>) -> MPoly<AlphaPoly> {
    let n = lambda.n();
    let m = lambda.length();
    let lead = lambda.eigenvalue(m).expect("m in range") + &AlphaPoly::constant(m as i64);
    let mut out = MPoly::zero(n);
    for (e, c) in prev.terms() {
        out.add_term(phi_exponent(m, e), c.clone() * &lead);
        for i in m + 1..=n {
            out.add_term(phi_exponent(i, e), c.clone());
        }
    }
    out
}

/// `F_λ`, reusing and filling `memo`. `F_0 = 1`.
pub fn f_nonsym(lambda: &Composition, memo: &MemoStore) -> Arc<MPoly<AlphaPoly>> {
    if let Some(hit) = memo.get(lambda) {
        return hit;
    }
    // Walk λ → λ* → λ** … down to a cached shape or zero, then build upward.
    let mut chain = vec![lambda.clone()];
    let mut base = loop {
        let top = chain.last().unwrap();
        if top.is_zero() {
            break Arc::new(MPoly::one(top.n()));
        }
        let next = top.star().expect("nonzero");
        if let Some(hit) = memo.get(&next) {
            break hit;
        }
        chain.push(next);
    };
    if chain.last().unwrap().is_zero() {
        let zero = chain.pop().unwrap();
        memo.insert(zero, base.clone());
    }
    while let Some(shape) = chain.pop() {
        base = Arc::new(recursion_step(&shape, &base));
        memo.insert(shape, base.clone());
    }
    base
}

/// `F_λ` with a private, throwaway memo table.
pub fn f_nonsym_fresh(lambda: &Composition) -> MPoly<AlphaPoly> {
    f_nonsym(lambda, &MemoStore::new()).as_ref().clone()
}

/// Monic `E_λ = F_λ / ∏_{s∈λ} d_λ(s)`.
pub fn e_nonsym(lambda: &Composition, memo: &MemoStore) -> MPoly<AlphaFrac> {
    let f = f_nonsym(lambda, memo);
    divide_by_alpha_poly(&f, &lambda.upper_hook_product()).expect("hook product is nonzero")
}

/// `(x·s_i + 1)(f) / x` with `x = λ̄_i − λ̄_{i+1}`. Maps `E_{s_iλ}` to `E_λ`
/// whenever `λ_i > λ_{i+1}`.
pub fn swap_op(lambda: &Composition, i: usize, f: &MPoly<AlphaFrac>) -> Result<MPoly<AlphaFrac>> {
    let n = lambda.n();
    if i == 0 || i >= n {
        return Err(JackError::IndexOutOfRange { index: i, n: n - 1 });
    }
    if lambda.part(i) <= lambda.part(i + 1) {
        return Err(JackError::Precondition(format!(
            "swap needs lambda_{i} > lambda_{} in {lambda}",
            i + 1
        )));
    }
    let x = lambda.eigenvalue(i)? - lambda.eigenvalue(i + 1)?;
    if x.is_zero() {
        return Err(JackError::DivisionByZero);
    }
    let x = AlphaFrac::from_poly(x);
    let mut out = f.s(i).scale(&x);
    out.add_assign_poly(f);
    Ok(out.scale(&x.recip()?))
}

/// `X_λ = (λ̄_m + m)·s_m⋯s_{n−1} + Σ_{i=m+1}^{n} s_i⋯s_{n−1}` applied to `f`.
pub fn creation_x<C: AlphaCoeff>(lambda: &Composition, f: &MPoly<C>) -> Result<MPoly<C>> {
    let n = lambda.n();
    let m = lambda.length();
    if m == 0 {
        return Err(JackError::ZeroComposition);
    }
    let lead = C::from_alpha_poly(&(lambda.eigenvalue(m)? + &AlphaPoly::constant(m as i64)));
    // partial[i] = s_i ⋯ s_{n−1} f, built from the right
    let mut cur = f.clone();
    let mut tail = MPoly::zero(n);
    for i in (m + 1..=n).rev() {
        if i < n {
            cur = cur.s(i);
        }
        tail.add_assign_poly(&cur);
    }
    let head = if m < n { cur.s(m) } else { cur };
    let mut out = head.scale(&lead);
    out.add_assign_poly(&tail);
    Ok(out)
}

/// Both sides of `E_λ = Φ(E_{λ*})` for `λ_n ≠ 0`.
#[derive(Clone, Debug)]
pub struct CyclicWitness {
    pub holds: bool,
    pub lhs: MPoly<AlphaFrac>,
    pub rhs: MPoly<AlphaFrac>,
}

pub fn cyclic_phi(lambda: &Composition, memo: &MemoStore) -> Result<CyclicWitness> {
    let n = lambda.n();
    if lambda.part(n) == 0 {
        return Err(JackError::Precondition(format!(
            "cyclic relation needs a nonzero last part, got {lambda}"
        )));
    }
    let mut prev = vec![lambda.part(n) - 1];
    prev.extend_from_slice(&lambda.parts()[..n - 1]);
    let prev = Composition::new(prev)?;
    let lhs = e_nonsym(lambda, memo);
    let rhs = phi(&e_nonsym(&prev, memo));
    Ok(CyclicWitness {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn ap(v: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64s(v)
    }

    fn frac(num: &[i64], den: &[i64]) -> AlphaFrac {
        AlphaFrac::new(ap(num), ap(den)).unwrap()
    }

    fn mono<C: Coeff>(e: &[i32], coeff: C) -> MPoly<C> {
        MPoly::monomial(e, coeff)
    }

    #[test]
    fn phi_k_examples() {
        let x1 = mono(&[1, 0, 0], BigInt::one());
        assert_eq!(phi_k(2, &x1).unwrap(), mono(&[0, 2, 0], BigInt::one()));
        let one = MPoly::<BigInt>::one(2);
        assert_eq!(phi_k(2, &one).unwrap(), mono(&[0, 1], BigInt::one()));
        let x1x2 = mono(&[1, 1, 0], BigInt::one());
        assert_eq!(phi_k(3, &x1x2).unwrap(), mono(&[1, 0, 2], BigInt::one()));
        assert!(phi_k(4, &x1x2).is_err());
        assert!(phi_k(0, &x1x2).is_err());
    }

    #[test]
    fn phi_k_matches_reflection_product() {
        // Φ_k = x_k s_{k−1} ⋯ s_1 applied operator by operator
        let f = &(&mono(&[3, 1, 0, 2], BigInt::from(2)) + &mono(&[0, 1, 1, 1], BigInt::from(-1)))
            + &mono(&[1, 0, 4, 0], BigInt::from(5));
        for k in 1..=4 {
            let mut g = f.clone();
            for i in 1..k {
                g = g.s(i);
            }
            assert_eq!(phi_k(k, &f).unwrap(), g.mul_var(k), "k = {k}");
        }
    }

    #[test]
    fn f_examples() {
        let memo = MemoStore::new();
        assert_eq!(*f_nonsym(&c("0,0,0"), &memo), MPoly::one(3));
        let f10 = &mono(&[1, 0], ap(&[1, 1])) + &mono(&[0, 1], AlphaPoly::one());
        assert_eq!(*f_nonsym(&c("1,0"), &memo), f10);
        assert_eq!(*f_nonsym(&c("1,1"), &memo), mono(&[1, 1], ap(&[2, 3, 1])));
        assert_eq!(*f_nonsym(&c("0,1"), &memo), mono(&[0, 1], ap(&[2, 1])));
    }

    #[test]
    fn e_examples() {
        let memo = MemoStore::new();
        assert_eq!(e_nonsym(&c("0,1"), &memo), mono(&[0, 1], AlphaFrac::one()));
        let e10 = &mono(&[1, 0], AlphaFrac::one()) + &mono(&[0, 1], frac(&[1], &[1, 1]));
        assert_eq!(e_nonsym(&c("1,0"), &memo), e10);
        assert_eq!(e_nonsym(&c("0,0"), &memo), MPoly::one(2));
    }

    #[test]
    fn e_is_monic() {
        let memo = MemoStore::new();
        for n in 1..=3 {
            for d in 0..=4 {
                for l in crate::combinatorics::compositions(n, d) {
                    let e = e_nonsym(&l, &memo);
                    assert_eq!(e.coeff(&l.as_exponent()), Some(&AlphaFrac::one()), "{l:?}");
                }
            }
        }
    }

    #[test]
    fn swap_examples() {
        let memo = MemoStore::new();
        let e01 = e_nonsym(&c("0,1"), &memo);
        let e10 = &mono(&[1, 0], AlphaFrac::one()) + &mono(&[0, 1], frac(&[1], &[1, 1]));
        assert_eq!(swap_op(&c("1,0"), 1, &e01).unwrap(), e10);
        assert_eq!(
            swap_op(&c("1,0,0"), 1, &e_nonsym(&c("0,1,0"), &memo)).unwrap(),
            e_nonsym(&c("1,0,0"), &memo)
        );
        assert!(swap_op(&c("0,1"), 1, &e01).is_err());
        assert!(swap_op(&c("1,1"), 1, &e01).is_err());
        assert!(swap_op(&c("1,0"), 2, &e01).is_err());
    }

    #[test]
    fn swap_reproduces_e_everywhere_small() {
        let memo = MemoStore::new();
        for n in 2..=3 {
            for d in 1..=3 {
                for l in crate::combinatorics::compositions(n, d) {
                    for i in 1..n {
                        if l.part(i) > l.part(i + 1) {
                            let got = swap_op(&l, i, &e_nonsym(&l.swap(i), &memo)).unwrap();
                            assert_eq!(got, e_nonsym(&l, &memo), "{l:?} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn creation_examples() {
        let memo = MemoStore::new();
        // m = n: plain scaling
        let l = c("0,1");
        let e = e_nonsym(&l.sharp().unwrap(), &memo);
        let x = l.eigenvalue(2).unwrap() + &AlphaPoly::constant(2);
        assert_eq!(
            creation_x(&l, &e).unwrap(),
            e_nonsym(&l, &memo).scale(&AlphaFrac::from_poly(x))
        );
        for s in ["0,1,0", "1,0,0", "2,1,0", "1,0,2,0", "0,2,0,0"] {
            let l = c(s);
            let m = l.length();
            let x = AlphaFrac::from_poly(l.eigenvalue(m).unwrap() + &AlphaPoly::constant(m as i64));
            let lhs = e_nonsym(&l, &memo).scale(&x);
            let rhs = creation_x(&l, &e_nonsym(&l.sharp().unwrap(), &memo)).unwrap();
            assert_eq!(lhs, rhs, "{s}");
        }
        assert!(creation_x(&c("0,0"), &MPoly::<AlphaPoly>::one(2)).is_err());
    }

    #[test]
    fn cyclic_examples() {
        let memo = MemoStore::new();
        let w = cyclic_phi(&c("0,1"), &memo).unwrap();
        assert!(w.holds);
        assert_eq!(w.lhs, mono(&[0, 1], AlphaFrac::one()));
        let w = cyclic_phi(&c("1,1"), &memo).unwrap();
        assert!(w.holds);
        assert_eq!(w.lhs, mono(&[1, 1], AlphaFrac::one()));
        assert!(cyclic_phi(&c("1,0,2"), &memo).unwrap().holds);
        assert!(cyclic_phi(&c("1,0"), &memo).is_err());
    }

    #[test]
    fn memo_is_transparent() {
        let warm = MemoStore::new();
        for d in 0..=4 {
            for l in crate::combinatorics::compositions(3, d) {
                f_nonsym(&l, &warm);
            }
        }
        for d in 0..=4 {
            for l in crate::combinatorics::compositions(3, d) {
                assert_eq!(*f_nonsym(&l, &warm), f_nonsym_fresh(&l));
            }
        }
    }

    #[test]
    fn cache_round_trip_and_version_gate() {
        let memo = MemoStore::new();
        f_nonsym(&c("2,0,1"), &memo);
        let text = memo.export_json(3).unwrap();
        let other = MemoStore::new();
        assert_eq!(other.import_json(&text).unwrap(), memo.len());
        assert_eq!(other.total_terms(), memo.total_terms());
        assert_eq!(*other.get(&c("2,0,1")).unwrap(), f_nonsym_fresh(&c("2,0,1")));

        let bad = text.replacen("\"version\":1", "\"version\":99", 1);
        assert!(matches!(
            MemoStore::new().import_json(&bad),
            Err(JackError::CacheVersion { found: 99, .. })
        ));
        assert!(matches!(
            MemoStore::new().import_json("{\"version\":1,\"n\":2,\"entries\":[{\"lambda\":[1],\"poly\":[]}]}"),
            Err(JackError::Cache(_))
        ));
        assert!(matches!(MemoStore::new().import_json("nope"), Err(JackError::Cache(_))));
    }
}
