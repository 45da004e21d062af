//! Compositions, diagrams, hook statistics and the order on `ℕⁿ` used by the
//! non-symmetric theory.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{JackError, Result};
use crate::poly::AlphaPoly;

/// An `n`-tuple of non-negative integers. Partitions are the weakly
/// decreasing ones.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

/// Arm, the two leg statistics, and the two α-hook polynomials of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub arm: u32,
    pub leg_above: u32,
    pub leg_below: u32,
    /// `α·a + (l′ + l″ + 1)`
    pub lower: AlphaPoly,
    /// `α·(a + 1) + (l′ + l″ + 1)`
    pub upper: AlphaPoly,
}

impl HookData {
    pub fn leg(&self) -> u32 {
        self.leg_above + self.leg_below
    }
}

/// Result of comparing two compositions in the partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderRelation {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(JackError::Precondition(
                "a composition needs at least one variable".into(),
            ));
        }
        Ok(Self { parts })
    }

    pub fn zero(n: usize) -> Self {
        Self { parts: vec![0; n] }
    }

    /// Pads a partition given by its nonzero parts with zeros up to `n`.
    pub fn padded(parts: &[u32], n: usize) -> Result<Self> {
        let nonzero: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        if nonzero.len() > n {
            return Err(JackError::InsufficientVariables {
                need: nonzero.len(),
                got: n,
            });
        }
        let mut v = parts.to_vec();
        while v.len() > n && v.last() == Some(&0) {
            v.pop();
        }
        v.resize(n, 0);
        Self::new(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i`, 1-based.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest index with a nonzero part, 0 for the zero composition.
    pub fn length(&self) -> usize {
        self.parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn require_partition(&self) -> Result<()> {
        if self.is_partition() {
            Ok(())
        } else {
            Err(JackError::NotPartition(self.to_string()))
        }
    }

    pub fn as_exponent(&self) -> crate::poly::Exponent {
        self.parts.iter().map(|&p| p as i32).collect()
    }

    /// The weakly decreasing rearrangement.
    pub fn lambda_plus(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Minimal-length `w` with `self = w·λ⁺`. Equal parts keep their
    /// relative order (stable sort), which gives the shortest coset
    /// representative.
    pub fn w_lambda(&self) -> Permutation {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| self.parts[b].cmp(&self.parts[a]).then(a.cmp(&b)));
        Permutation { images: order }
    }

    /// `w·λ`, defined by `(w·λ)_{w(i)} = λ_i`; consistent with
    /// `w·x^λ = x^{w·λ}`.
    pub fn act(&self, w: &Permutation) -> Self {
        assert_eq!(w.len(), self.n());
        let mut parts = vec![0; self.n()];
        for (i, &p) in self.parts.iter().enumerate() {
            parts[w.images[i]] = p;
        }
        Self { parts }
    }

    /// `s_i λ` (1-based).
    pub fn swap(&self, i: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Self { parts }
    }

    /// Boxes of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn contains(&self, s: Cell) -> bool {
        s.row >= 1 && s.row <= self.n() && s.col >= 1 && s.col <= self.parts[s.row - 1] as usize
    }

    pub fn hook(&self, s: Cell) -> Result<HookData> {
        if !self.contains(s) {
            return Err(JackError::BoxOutsideDiagram {
                row: s.row,
                col: s.col,
                shape: self.to_string(),
            });
        }
        let (i, j) = (s.row, s.col as u32);
        let li = self.parts[i - 1];
        let arm = li - j;
        let leg_above = self.parts[..i - 1]
            .iter()
            .filter(|&&lk| j <= lk + 1 && lk < li)
            .count() as u32;
        let leg_below = self.parts[i..]
            .iter()
            .filter(|&&lk| j <= lk && lk <= li)
            .count() as u32;
        let leg = (leg_above + leg_below) as i64;
        Ok(HookData {
            arm,
            leg_above,
            leg_below,
            lower: AlphaPoly::linear(arm as i64, leg + 1),
            upper: AlphaPoly::linear(arm as i64 + 1, leg + 1),
        })
    }

    /// `∏_{s∈λ} d_λ(s)`, the factor relating `F_λ` and `E_λ`.
    pub fn upper_hook_product(&self) -> AlphaPoly {
        self.cells().fold(AlphaPoly::one(), |acc, s| {
            acc * &self.hook(s).expect("cell in diagram").upper
        })
    }

    /// `∏_{s∈λ} c_λ(s)`, the factor relating `J_λ` and `P_λ`.
    pub fn lower_hook_product(&self) -> AlphaPoly {
        self.cells().fold(AlphaPoly::one(), |acc, s| {
            acc * &self.hook(s).expect("cell in diagram").lower
        })
    }

    /// Spectral value `λ̄_i = α·λ_i − (k′ + k″)` with
    /// `k′ = #{j<i : λ_j ≥ λ_i}` and `k″ = #{j>i : λ_j > λ_i}`.
    pub fn eigenvalue(&self, i: usize) -> Result<AlphaPoly> {
        if i == 0 || i > self.n() {
            return Err(JackError::IndexOutOfRange { index: i, n: self.n() });
        }
        let li = self.parts[i - 1];
        let before = self.parts[..i - 1].iter().filter(|&&lj| lj >= li).count();
        let after = self.parts[i..].iter().filter(|&&lj| lj > li).count();
        Ok(AlphaPoly::linear(li as i64, -((before + after) as i64)))
    }

    pub fn eigenvalues(&self) -> Vec<AlphaPoly> {
        (1..=self.n()).map(|i| self.eigenvalue(i).unwrap()).collect()
    }

    /// `λ* = (λ_m − 1, λ_1, …, λ_{m−1}, 0, …, 0)` with `m = l(λ)`.
    pub fn star(&self) -> Result<Self> {
        let m = self.length();
        if m == 0 {
            return Err(JackError::ZeroComposition);
        }
        let mut parts = Vec::with_capacity(self.n());
        parts.push(self.parts[m - 1] - 1);
        parts.extend_from_slice(&self.parts[..m - 1]);
        parts.resize(self.n(), 0);
        Ok(Self { parts })
    }

    /// `λ♯ = (λ_1, …, λ_{m−1}, 0, …, 0, λ_m)`.
    pub fn sharp(&self) -> Result<Self> {
        let m = self.length();
        if m == 0 {
            return Err(JackError::ZeroComposition);
        }
        let mut parts = self.parts[..m - 1].to_vec();
        parts.resize(self.n() - 1, 0);
        parts.push(self.parts[m - 1]);
        Ok(Self { parts })
    }

    /// `λ⁰ = (λ_m − 1, …, λ_1 − 1, 0, …, 0)` for a partition.
    pub fn zero_shape(&self) -> Result<Self> {
        self.require_partition()?;
        let m = self.length();
        let mut parts: Vec<u32> = self.parts[..m].iter().rev().map(|&p| p - 1).collect();
        parts.resize(self.n(), 0);
        Ok(Self { parts })
    }

    /// `Φλ = (λ_2, …, λ_n, λ_1 + 1)`, the shape raised by the cyclic
    /// creation operator.
    pub fn cyclic_raise(&self) -> Self {
        let mut parts = self.parts[1..].to_vec();
        parts.push(self.parts[0] + 1);
        Self { parts }
    }

    /// Drops the last part (`λ′` in the stability statement).
    pub fn drop_last(&self) -> Result<Self> {
        Self::new(self.parts[..self.n() - 1].to_vec())
    }

    /// `m_i(λ) = #{k : λ_k = i}` for `i ≥ 1`.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in self.parts.iter().filter(|&&p| p > 0) {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `u_λ = ∏_{i≥1} m_i(λ)!`
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities()
            .values()
            .map(|&k| factorial(k))
            .product()
    }

    /// Conjugate partition as a list of nonzero parts.
    pub fn conjugate(&self) -> Result<Vec<u32>> {
        self.require_partition()?;
        let top = self.parts.first().copied().unwrap_or(0);
        Ok((1..=top)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect())
    }

    /// Nonzero parts only, e.g. `[2,1]` for `(2,1,0)`.
    pub fn nonzero_parts(&self) -> Vec<u32> {
        self.parts.iter().copied().filter(|&p| p > 0).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = JackError;

    /// Comma-separated parts, e.g. `"0,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| JackError::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// Prefix-sum dominance on partitions of equal size: `Some(Greater)` if `a`
/// dominates `b` strictly, `None` when incomparable.
pub fn dominance(a: &[u32], b: &[u32]) -> Option<Ordering> {
    let sa: u32 = a.iter().sum();
    let sb: u32 = b.iter().sum();
    if sa != sb {
        return None;
    }
    let len = a.len().max(b.len());
    let (mut pa, mut pb) = (0u32, 0u32);
    let (mut ge, mut le) = (true, true);
    for k in 0..len {
        pa += a.get(k).copied().unwrap_or(0);
        pb += b.get(k).copied().unwrap_or(0);
        ge &= pa >= pb;
        le &= pa <= pb;
    }
    match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}

/// The partial order on compositions: first dominance of `λ⁺` against
/// `μ⁺`; inside an orbit, `λ ≥ μ` iff `w_λ ≤ w_μ` in Bruhat order.
/// Compositions of different size or degree are incomparable.
pub fn compare(lambda: &Composition, mu: &Composition) -> OrderRelation {
    if lambda.n() != mu.n() || lambda.degree() != mu.degree() {
        return OrderRelation::Incomparable;
    }
    let (lp, mp) = (lambda.lambda_plus(), mu.lambda_plus());
    if lp != mp {
        return match dominance(lp.parts(), mp.parts()) {
            Some(Ordering::Greater) => OrderRelation::Greater,
            Some(Ordering::Less) => OrderRelation::Less,
            _ => OrderRelation::Incomparable,
        };
    }
    if lambda == mu {
        return OrderRelation::Equal;
    }
    let (wl, wm) = (lambda.w_lambda(), mu.w_lambda());
    match (wl.bruhat_le(&wm), wm.bruhat_le(&wl)) {
        (true, _) => OrderRelation::Greater,
        (_, true) => OrderRelation::Less,
        _ => OrderRelation::Incomparable,
    }
}

/// All compositions of `degree` into `n` parts, in lexicographic order.
pub fn compositions(n: usize, degree: u32) -> Vec<Composition> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Composition { parts: cur.clone() });
            cur.pop();
            return;
        }
        for p in (0..=left).rev() {
            cur.push(p);
            rec(n, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, degree, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Partitions of `degree` with at most `max_parts` nonzero parts, padded
/// with zeros to `max_parts`, in reverse lexicographic order.
pub fn partitions(degree: u32, max_parts: usize) -> Vec<Composition> {
    fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(degree, degree, max_parts, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .filter_map(|p| Composition::padded(&p, max_parts.max(1)).ok())
        .collect()
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images `w(1), …, w(n)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(JackError::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Self { images: out })
    }

    /// Transposition `s_ij` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k == 0 || k > n {
                return Err(JackError::IndexOutOfRange { index: k, n });
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Self { images })
    }

    /// Simple reflection `s_i = s_{i,i+1}`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(JackError::IndexOutOfRange { index: i, n: n.saturating_sub(1) });
        }
        Self::transposition(n, i, i + 1)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image0(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `w(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// `r[i][j] = #{a ≤ i : w(a) ≥ j}` for `i, j` in `1..=n`.
    fn rank_table(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut table: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut row = vec![0; n];
        for &w in &self.images {
            for (j, r) in row.iter_mut().enumerate() {
                *r += usize::from(w >= j);
            }
            table.push(row.clone());
        }
        table
    }

    /// Bruhat order via the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len());
        let (a, b) = (self.rank_table(), other.rank_table());
        a.iter()
            .zip(&b)
            .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x <= y))
    }

    /// Every permutation of `n` letters, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Self { images: cur.clone() }];
        // next_permutation
        while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Self { images: cur.clone() });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_plus_examples() {
        assert_eq!(c("0,2,1").lambda_plus(), c("2,1,0"));
        assert_eq!(c("1,1").lambda_plus(), c("1,1"));
        assert_eq!(c("0,0,3").lambda_plus(), c("3,0,0"));
    }

    #[test]
    fn w_lambda_examples() {
        assert_eq!(c("1,0").w_lambda(), Permutation::identity(2));
        assert_eq!(c("0,1").w_lambda(), Permutation::simple(2, 1).unwrap());
        assert_eq!(c("1,1").w_lambda(), Permutation::identity(2));
        for s in ["0,2,1", "1,0,1", "0,0,3", "2,0,2,1"] {
            let l = c(s);
            assert_eq!(l.lambda_plus().act(&l.w_lambda()), l);
        }
    }

    #[test]
    fn w_lambda_is_shortest_in_coset() {
        for l in compositions(4, 4) {
            let lp = l.lambda_plus();
            let best = Permutation::all(4)
                .into_iter()
                .filter(|w| lp.act(w) == l)
                .map(|w| w.length())
                .min()
                .unwrap();
            let wl = l.w_lambda();
            assert_eq!(wl.length(), best, "{l:?}");
            let ties = Permutation::all(4)
                .into_iter()
                .filter(|w| lp.act(w) == l && w.length() == best)
                .count();
            assert_eq!(ties, 1, "{l:?}");
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&c("2,0"), &c("1,1")), OrderRelation::Greater);
        assert_eq!(compare(&c("1,0"), &c("0,1")), OrderRelation::Greater);
        assert_eq!(compare(&c("0,2"), &c("1,1")), OrderRelation::Greater);
        assert_eq!(compare(&c("1,1"), &c("0,2")), OrderRelation::Less);
        assert_eq!(compare(&c("1,0"), &c("1,0")), OrderRelation::Equal);
        assert_eq!(compare(&c("1,0"), &c("1,1")), OrderRelation::Incomparable);
        assert_eq!(compare(&c("1,0"), &c("1,0,0")), OrderRelation::Incomparable);
        // dominance-incomparable partitions of 6
        assert_eq!(
            compare(&c("3,1,1,1,0,0"), &c("2,2,2,0,0,0")),
            OrderRelation::Incomparable
        );
    }

    #[test]
    fn hook_examples() {
        let h = c("2,1,0").hook(Cell::new(1, 1)).unwrap();
        assert_eq!((h.arm, h.leg_above, h.leg_below), (1, 0, 1));
        assert_eq!(h.lower, AlphaPoly::linear(1, 2));
        assert_eq!(h.upper, AlphaPoly::linear(2, 2));
        let h = c("0,2,1").hook(Cell::new(2, 1)).unwrap();
        assert_eq!((h.arm, h.leg_above, h.leg_below), (1, 1, 1));
        assert_eq!(h.lower, AlphaPoly::linear(1, 3));
        assert_eq!(h.upper, AlphaPoly::linear(2, 3));
        let h = c("1,1").hook(Cell::new(2, 1)).unwrap();
        assert_eq!((h.arm, h.leg_above, h.leg_below), (0, 0, 0));
        assert_eq!(h.lower, AlphaPoly::constant(1));
        assert_eq!(h.upper, AlphaPoly::linear(1, 1));
        assert!(matches!(
            c("1,1").hook(Cell::new(1, 2)),
            Err(JackError::BoxOutsideDiagram { .. })
        ));
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(c("0,2,1").eigenvalue(2).unwrap(), AlphaPoly::linear(2, 0));
        assert_eq!(c("0,2,1").eigenvalue(1).unwrap(), AlphaPoly::constant(-2));
        assert_eq!(c("0,0").eigenvalue(2).unwrap(), AlphaPoly::constant(-1));
        assert!(c("0,0").eigenvalue(3).is_err());
    }

    #[test]
    fn derived_shape_examples() {
        assert_eq!(c("0,2,1").star().unwrap(), c("0,0,2"));
        assert_eq!(c("1,0").sharp().unwrap(), c("0,1"));
        assert_eq!(c("2,1,0").zero_shape().unwrap(), c("0,1,0"));
        assert!(matches!(c("0,0").star(), Err(JackError::ZeroComposition)));
        assert!(matches!(c("0,0").sharp(), Err(JackError::ZeroComposition)));
        assert!(matches!(c("1,2").zero_shape(), Err(JackError::NotPartition(_))));
        assert_eq!(c("1,0,2").cyclic_raise(), c("0,2,2"));
    }

    #[test]
    fn multiplicity_examples() {
        let l = c("2,1,1,0");
        let m = l.multiplicities();
        assert_eq!((m[&1], m[&2]), (2, 1));
        assert_eq!(l.multiplicity_factorial(), BigInt::from(2));
        assert_eq!(c("0,0,0").multiplicity_factorial(), BigInt::from(1));
        assert_eq!(c("3,3,3").multiplicities()[&3], 3);
        assert_eq!(c("3,3,3").multiplicity_factorial(), BigInt::from(6));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(c("0, 2,1").to_string(), "0,2,1");
        assert!("1,x".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("-1,2".parse::<Composition>().is_err());
    }

    #[test]
    fn enumerations() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(4, 2).len(), 3);
        assert!(partitions(3, 3).iter().all(Composition::is_partition));
        assert_eq!(c("3,1,0").conjugate().unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn lambda_plus_is_unique_orbit_maximum() {
        for n in 1..=4 {
            for l in compositions(n, 3) {
                let lp = l.lambda_plus();
                for w in Permutation::all(n) {
                    let wl = l.act(&w);
                    let r = compare(&lp, &wl);
                    if wl == lp {
                        assert_eq!(r, OrderRelation::Equal);
                    } else {
                        assert_eq!(r, OrderRelation::Greater, "{lp:?} vs {wl:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn compare_on_partitions_is_dominance() {
        // independent prefix-sum check
        let dominates = |a: &[u32], b: &[u32]| {
            let mut s = (0i64, 0i64);
            a.iter().zip(b).all(|(x, y)| {
                s.0 += *x as i64;
                s.1 += *y as i64;
                s.0 >= s.1
            })
        };
        for d in 1..=7 {
            let ps = partitions(d, d as usize);
            for a in &ps {
                for b in &ps {
                    let expect = match (dominates(a.parts(), b.parts()), dominates(b.parts(), a.parts())) {
                        (true, true) => OrderRelation::Equal,
                        (true, false) => OrderRelation::Greater,
                        (false, true) => OrderRelation::Less,
                        _ => OrderRelation::Incomparable,
                    };
                    assert_eq!(compare(a, b), expect);
                }
            }
        }
    }

    #[test]
    fn upper_hook_at_first_column_matches_spectral_value() {
        for n in 1..=5 {
            for d in 0..=6 {
                for l in compositions(n, d) {
                    for i in 1..=n {
                        if l.part(i) == 0 {
                            continue;
                        }
                        let a0 = l.parts()[i..].iter().filter(|&&p| p > 0).count() as i64;
                        let lhs = l.hook(Cell::new(i, 1)).unwrap().upper;
                        let rhs = l.eigenvalue(i).unwrap() + &AlphaPoly::constant(i as i64 + a0);
                        assert_eq!(lhs, rhs, "{l:?} row {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn shifted_spectral_value_at_last_row() {
        for n in 1..=5 {
            for d in 1..=5 {
                for l in compositions(n, d) {
                    let m = l.length();
                    let k = l.parts()[..m - 1].iter().filter(|&&p| p < l.part(m)).count() as i64;
                    let lhs = l.eigenvalue(m).unwrap() + &AlphaPoly::constant(m as i64);
                    assert_eq!(lhs, AlphaPoly::linear(l.part(m) as i64, k + 1), "{l:?}");
                }
            }
        }
    }

    #[test]
    fn bruhat_order_on_s4() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let id = Permutation::identity(4);
        for w in &all {
            assert!(id.bruhat_le(w));
            assert!(w.bruhat_le(w));
            for v in &all {
                if w != v && w.bruhat_le(v) {
                    assert!(!v.bruhat_le(w), "antisymmetry {w:?} {v:?}");
                    assert!(w.length() < v.length());
                }
            }
        }
        // s1 s2 vs s2 s1 are incomparable, both below the longest element
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        let (a, b) = (s1.compose(&s2), s2.compose(&s1));
        assert!(!a.bruhat_le(&b) && !b.bruhat_le(&a));
        let w0 = Permutation::from_one_based(&[3, 2, 1]).unwrap();
        assert!(a.bruhat_le(&w0) && b.bruhat_le(&w0));
        assert!(!BigInt::from(w0.length()).is_zero());
    }

    #[test]
    fn bruhat_matches_subword_closure_on_s4() {
        // Independent oracle: Bruhat order is the transitive closure of
        // w < w·t for reflections t with ℓ(w·t) > ℓ(w).
        let all = Permutation::all(4);
        let idx = |p: &Permutation| all.iter().position(|q| q == p).unwrap();
        let mut le = vec![vec![false; 24]; 24];
        for (i, w) in all.iter().enumerate() {
            le[i][i] = true;
            for a in 1..=4 {
                for b in a + 1..=4 {
                    let t = Permutation::transposition(4, a, b).unwrap();
                    let wt = w.compose(&t);
                    if wt.length() > w.length() {
                        le[i][idx(&wt)] = true;
                    }
                }
            }
        }
        for k in 0..24 {
            for i in 0..24 {
                for j in 0..24 {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        for (i, w) in all.iter().enumerate() {
            for (j, v) in all.iter().enumerate() {
                assert_eq!(w.bruhat_le(v), le[i][j], "{w:?} {v:?}");
            }
        }
    }

    #[test]
    fn permutation_basics() {
        let w = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.image(1), 2);
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert!(Permutation::simple(2, 2).is_err());
    }
}
