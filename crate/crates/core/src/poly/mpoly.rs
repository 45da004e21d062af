use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use smallvec::SmallVec;

use super::coeff::Coeff;
use crate::combinatorics::Permutation;
use crate::error::{JackError, Result};

/// Exponent vector of a monomial. Negative entries only occur in Laurent
/// polynomials.
pub type Exponent = SmallVec<[i32; 8]>;

/// Sparse polynomial (or Laurent polynomial) in `x_1..x_n`.
///
/// Terms are kept in a `BTreeMap` so that iteration order, equality and
/// serialization are deterministic. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

fn check_var(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(JackError::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(SmallVec::from_elem(0, nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// `coeff · x^exp`
    pub fn monomial(exp: &[i32], coeff: C) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(SmallVec::from_slice(exp), coeff);
        p
    }

    /// The variable `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        check_var(i, nvars)?;
        let mut e: Exponent = SmallVec::from_elem(0, nvars);
        e[i - 1] = 1;
        Ok(Self::monomial(&e, C::one()))
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, C)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(JackError::VariableMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> Option<&C> {
        self.terms.get(exp)
    }

    /// Coefficient of `x^exp`, zero when absent.
    pub fn coeff_or_zero(&self, exp: &[i32]) -> C {
        self.coeff(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in graded-lexicographic descending order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: i64 = a.iter().map(|&x| x as i64).sum();
            let db: i64 = b.iter().map(|&x| x as i64).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    /// Accumulate `c · x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponent, c: C) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, exp: &Exponent, c: &C) {
        if c.is_zero() {
            return;
        }
        if let Some(slot) = self.terms.get_mut(exp) {
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(exp);
            }
        } else {
            self.terms.insert(exp.clone(), c.clone());
        }
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(JackError::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        out.add_assign_poly(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term_ref(e, &-c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb);
            }
        }
        Ok(out)
    }

    /// `self += other`; panics on a variable-count mismatch.
    pub fn add_assign_poly(&mut self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term_ref(e, c);
        }
    }

    /// `self += k · other`
    pub fn add_scaled(&mut self, other: &Self, k: &C) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if k.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            self.add_term_ref(e, &(c.clone() * k));
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k);
        }
        out
    }

    /// Divide every coefficient by an integer, failing if any quotient
    /// leaves the coefficient ring.
    pub fn div_int(&self, d: &BigInt) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let q = c
                .div_int(d)
                .ok_or_else(|| JackError::InexactDivision(format!("{c:?} / {d}")))?;
            out.add_term(e.clone(), q);
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(
        &self,
        mut f: impl FnMut(&C) -> Result<D>,
    ) -> Result<MPoly<D>> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Apply a map on exponent vectors term by term, re-accumulating.
    pub fn map_exponents(&self, nvars: usize, mut f: impl FnMut(&Exponent) -> Exponent) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            out.add_term_ref(&f(e), c);
        }
        out
    }

    /// Permutation action: `x_i ↦ x_{w(i)}`, so `(w·f)(x) = f(x_{w(1)}, …)`
    /// read as a substitution; this is a left action, `w·(v·f) = (wv)·f`.
    pub fn act(&self, w: &Permutation) -> Self {
        assert_eq!(w.len(), self.nvars, "permutation size mismatch");
        self.map_exponents(self.nvars, |e| {
            let mut out = SmallVec::from_elem(0, e.len());
            for (i, &x) in e.iter().enumerate() {
                out[w.image0(i)] = x;
            }
            out
        })
    }

    /// Transposition `s_ij` of two variables (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        assert!(i >= 1 && i <= self.nvars && j >= 1 && j <= self.nvars);
        self.map_exponents(self.nvars, |e| {
            let mut out = e.clone();
            out.swap(i - 1, j - 1);
            out
        })
    }

    /// Simple reflection `s_i = s_{i,i+1}`.
    pub fn s(&self, i: usize) -> Self {
        self.swap_vars(i, i + 1)
    }

    /// Divided difference `N_ij f = (f − s_ij f)/(x_i − x_j)`.
    ///
    /// Evaluated monomial by monomial: for `x_i^a x_j^b` with `a > b` the
    /// quotient is `x_i^b x_j^b · Σ_{t<a−b} x_i^{a−b−1−t} x_j^t`, and the
    /// case `a < b` is the negative of the mirrored sum. Hence the result is
    /// always exact.
    pub fn divided_transposition(&self, i: usize, j: usize) -> Result<Self> {
        check_var(i, self.nvars)?;
        check_var(j, self.nvars)?;
        if i == j {
            return Err(JackError::Precondition("N_ij needs i != j".into()));
        }
        let (ii, jj) = (i - 1, j - 1);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let (a, b) = (e[ii], e[jj]);
            if a == b {
                continue;
            }
            let (hi, lo, sign, hi_var, lo_var) = if a > b {
                (a, b, false, ii, jj)
            } else {
                (b, a, true, jj, ii)
            };
            let coeff = if sign { -c.clone() } else { c.clone() };
            let gap = hi - lo;
            for t in 0..gap {
                let mut m = e.clone();
                m[hi_var] = lo + gap - 1 - t;
                m[lo_var] = lo + t;
                out.add_term_ref(&m, &coeff);
            }
        }
        Ok(out)
    }

    /// Multiply by `x_i`.
    pub fn mul_var(&self, i: usize) -> Self {
        self.mul_var_pow(i, 1)
    }

    pub fn mul_var_pow(&self, i: usize, k: i32) -> Self {
        assert!(i >= 1 && i <= self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut m = e.clone();
            m[i - 1] += k;
            out.terms.insert(m, c.clone());
        }
        out
    }

    /// Euler operator `x_i ∂/∂x_i`.
    pub fn euler(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i - 1];
            if k != 0 {
                out.add_term(e.clone(), c.clone() * &C::from_int(k as i64));
            }
        }
        out
    }

    /// Set the listed variables (1-based) to zero: drops every term with a
    /// positive exponent in one of them.
    pub fn substitute_zero(&self, vars: &[usize]) -> Result<Self> {
        for &v in vars {
            check_var(v, self.nvars)?;
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut keep = true;
            for &v in vars {
                match e[v - 1] {
                    0 => {}
                    x if x < 0 => return Err(JackError::LaurentInZeroedVariable(v)),
                    _ => keep = false,
                }
            }
            if keep {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Keep only the listed variables (1-based, in the given order) as the
    /// new `x_1, x_2, …`. Every term must have zero exponent in the dropped
    /// variables.
    pub fn restrict_to(&self, keep: &[usize]) -> Result<Self> {
        for &v in keep {
            check_var(v, self.nvars)?;
        }
        let mut out = Self::zero(keep.len());
        for (e, c) in &self.terms {
            let dropped_nonzero = (1..=self.nvars)
                .filter(|v| !keep.contains(v))
                .any(|v| e[v - 1] != 0);
            if dropped_nonzero {
                return Err(JackError::Precondition(
                    "restrict_to: term depends on a dropped variable".into(),
                ));
            }
            let m: Exponent = keep.iter().map(|&v| e[v - 1]).collect();
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// Embed into more variables (new variables appended, not occurring).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        self.map_exponents(nvars, |e| {
            let mut m = e.clone();
            m.resize(nvars, 0);
            m
        })
    }

    /// `f(x^{-1})`
    pub fn invert_vars(&self) -> Self {
        self.map_exponents(self.nvars, |e| e.iter().map(|&x| -x).collect())
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    /// No negative exponents anywhere.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// True if `s_i f = f` for every `i` in `range` (1-based simple
    /// reflections).
    pub fn is_symmetric_under(&self, range: std::ops::RangeInclusive<usize>) -> Option<usize> {
        range.into_iter().find(|&i| self.s(i) != *self)
    }
}

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &MPoly<C>) -> MPoly<C> {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &MPoly<C>) -> MPoly<C> {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}
