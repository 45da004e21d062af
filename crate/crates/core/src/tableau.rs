//! The combinatorial formula: `F_λ` as a sum over 0-admissible tableaux and
//! `J_λ` as a sum over admissible tableaux, each weighted by the product of
//! upper hooks `d_λ(s)` over its (0-)critical boxes.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{Cell, Composition};
use crate::error::{JackError, Result};
use crate::poly::{AlphaPoly, Exponent, MPoly};
use crate::recursion::phi;

/// Which admissibility notion an enumeration uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Conditions (a), (b); critical boxes repeat their left neighbour.
    Plain,
    /// Adds the first-column floor `T(i,1) ≥ i`; a first-column box with
    /// `T(i,1) = i` is also critical.
    Zero,
}

/// A labeling of a diagram by `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<u32>,
    n: usize,
    labels: Vec<Vec<u8>>,
}

impl Tableau {
    /// `labels[i]` holds row `i + 1`; its length must equal the row length.
    pub fn new(shape: &[u32], n: usize, labels: Vec<Vec<u8>>) -> Result<Self> {
        if labels.len() != shape.len() {
            return Err(JackError::Precondition("one label row per shape row".into()));
        }
        for (row, (&len, ls)) in shape.iter().zip(&labels).enumerate() {
            if ls.len() != len as usize {
                return Err(JackError::Precondition(format!(
                    "row {} has {} labels, shape wants {len}",
                    row + 1,
                    ls.len()
                )));
            }
            if let Some(&bad) = ls.iter().find(|&&l| l == 0 || l as usize > n) {
                return Err(JackError::Precondition(format!("label {bad} outside 1..={n}")));
            }
        }
        Ok(Self {
            rows: shape.to_vec(),
            n,
            labels,
        })
    }

    pub fn shape(&self) -> &[u32] {
        &self.rows
    }

    pub fn label(&self, s: Cell) -> u8 {
        self.labels[s.row - 1][s.col - 1]
    }

    fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    /// `|T|_i` = number of boxes labeled `i`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0; self.n];
        for row in &self.labels {
            for &l in row {
                w[l as usize - 1] += 1;
            }
        }
        w
    }

    pub fn is_admissible(&self) -> bool {
        for s in self.cells() {
            let t = self.label(s);
            // (a) column entries below differ
            for i2 in s.row + 1..=self.rows.len() {
                if self.rows[i2 - 1] as usize >= s.col && self.label(Cell::new(i2, s.col)) == t {
                    return false;
                }
            }
            // (b) differs from column j−1 in rows above
            if s.col > 1 {
                for i2 in 1..s.row {
                    if self.rows[i2 - 1] as usize >= s.col - 1
                        && self.label(Cell::new(i2, s.col - 1)) == t
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_zero_admissible(&self) -> bool {
        self.is_admissible()
            && self
                .cells()
                .filter(|s| s.col == 1)
                .all(|s| self.label(s) as usize >= s.row)
    }

    pub fn is_critical(&self, s: Cell, variant: Variant) -> bool {
        if s.col > 1 {
            self.label(s) == self.label(Cell::new(s.row, s.col - 1))
        } else {
            variant == Variant::Zero && self.label(s) as usize == s.row
        }
    }

    /// Product of `d_λ(s)` over critical (resp. 0-critical) boxes.
    pub fn hook_weight(&self, variant: Variant) -> AlphaPoly {
        let shape = shape_composition(&self.rows);
        self.cells()
            .filter(|&s| self.is_critical(s, variant))
            .fold(AlphaPoly::one(), |acc, s| {
                acc * &shape.hook(s).expect("cell in diagram").upper
            })
    }

    /// One-line dump: shape header then rows separated by `|`, `.` for an
    /// empty row. E.g. `2,1: 2 1 | 1`.
    pub fn dump(&self) -> String {
        let header: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        let rows: Vec<String> = self
            .labels
            .iter()
            .map(|r| {
                if r.is_empty() {
                    ".".to_string()
                } else {
                    r.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
                }
            })
            .collect();
        format!("{}: {}", header.join(","), rows.join(" | "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

fn shape_composition(rows: &[u32]) -> Composition {
    if rows.is_empty() {
        Composition::zero(1)
    } else {
        Composition::new(rows.to_vec()).expect("nonempty")
    }
}

/// Backtracking enumerator over the admissible fillings of a shape.
///
/// Boxes are filled column by column (column 1 first, top to bottom), so
/// each new box is checked against already-placed boxes only: the boxes
/// above it in its column, and the boxes of the previous column in higher
/// rows.
struct Filler {
    n: u8,
    variant: Variant,
    cells: Vec<Cell>,
    /// earlier positions whose label must differ
    conflicts: Vec<Vec<usize>>,
    lows: Vec<u8>,
    highs: Vec<u8>,
    labels: Vec<u8>,
    pos: usize,
    started: bool,
    done: bool,
}

impl Filler {
    fn new(rows: &[u32], n: usize, variant: Variant, first_label: Option<u8>) -> Self {
        assert!(n <= u8::MAX as usize);
        let width = rows.iter().copied().max().unwrap_or(0) as usize;
        let mut cells = Vec::new();
        for j in 1..=width {
            for (i, &len) in rows.iter().enumerate() {
                if len as usize >= j {
                    cells.push(Cell::new(i + 1, j));
                }
            }
        }
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(p, &s)| (s, p)).collect();
        let mut conflicts = Vec::with_capacity(cells.len());
        let mut lows = Vec::with_capacity(cells.len());
        let mut highs = Vec::with_capacity(cells.len());
        for (p, s) in cells.iter().enumerate() {
            let mut c = Vec::new();
            for i2 in 1..s.row {
                if let Some(&q) = index.get(&Cell::new(i2, s.col)) {
                    c.push(q);
                }
                if s.col > 1 {
                    if let Some(&q) = index.get(&Cell::new(i2, s.col - 1)) {
                        c.push(q);
                    }
                }
            }
            conflicts.push(c);
            let floor = if variant == Variant::Zero && s.col == 1 {
                s.row.min(n + 1) as u8
            } else {
                1
            };
            let (lo, hi) = match (p, first_label) {
                (0, Some(f)) => (floor.max(f), f),
                _ => (floor, n as u8),
            };
            lows.push(lo);
            highs.push(hi);
        }
        let len = cells.len();
        Self {
            n: n as u8,
            variant,
            cells,
            conflicts,
            lows,
            highs,
            labels: vec![0; len],
            pos: 0,
            started: false,
            done: false,
        }
    }

    /// Advance to the next complete admissible filling.
    fn advance(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if self.cells.is_empty() {
            self.done = true;
            return Some(&self.labels);
        }
        if !self.started {
            self.started = true;
            self.pos = 0;
            self.labels[0] = self.lows[0] - 1;
        }
        loop {
            let p = self.pos;
            let mut v = self.labels[p] + 1;
            while v <= self.highs[p] && self.conflicts[p].iter().any(|&q| self.labels[q] == v) {
                v += 1;
            }
            if v > self.highs[p] {
                if p == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                continue;
            }
            self.labels[p] = v;
            if p + 1 == self.cells.len() {
                return Some(&self.labels);
            }
            self.pos += 1;
            self.labels[self.pos] = self.lows[self.pos] - 1;
        }
    }

    fn to_tableau(&self, rows: &[u32]) -> Tableau {
        let mut labels: Vec<Vec<u8>> = rows.iter().map(|&r| vec![0; r as usize]).collect();
        for (s, &l) in self.cells.iter().zip(&self.labels) {
            labels[s.row - 1][s.col - 1] = l;
        }
        Tableau {
            rows: rows.to_vec(),
            n: self.n as usize,
            labels,
        }
    }
}

/// Streaming iterator over the admissible (or 0-admissible) tableaux of a
/// shape with labels in `1..=n`.
pub struct TableauIter {
    rows: Vec<u32>,
    filler: Filler,
}

impl TableauIter {
    pub fn new(shape: &[u32], n: usize, variant: Variant) -> Self {
        Self {
            rows: shape.to_vec(),
            filler: Filler::new(shape, n, variant, None),
        }
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        self.filler.advance()?;
        Some(self.filler.to_tableau(&self.rows))
    }
}

/// Sum `Σ_T d_T x^T` over the admissible tableaux of `shape` whose first
/// enumerated box carries `first_label` (all tableaux when `None`).
fn partial_sum(shape: &[u32], n: usize, variant: Variant, first_label: Option<u8>) -> MPoly<AlphaPoly> {
    let comp = shape_composition(shape);
    let mut filler = Filler::new(shape, n, variant, first_label);
    let len = filler.cells.len();
    assert!(len <= 64, "shape too large for the critical-set mask");
    let hooks: Vec<AlphaPoly> = filler
        .cells
        .iter()
        .map(|&s| comp.hook(s).expect("cell in diagram").upper)
        .collect();
    // position of the left neighbour, or None in column 1
    let left: Vec<Option<usize>> = filler
        .cells
        .iter()
        .map(|s| {
            (s.col > 1).then(|| {
                filler
                    .cells
                    .iter()
                    .position(|t| t.row == s.row && t.col == s.col - 1)
                    .unwrap()
            })
        })
        .collect();
    let rows_of: Vec<u8> = filler.cells.iter().map(|s| s.row as u8).collect();
    let zero = filler.variant == Variant::Zero;

    // Group tableaux by (monomial, critical set); hook products are formed
    // once per group at the end.
    let mut counts: HashMap<(Exponent, u64), u64> = HashMap::new();
    while let Some(labels) = filler.advance() {
        let mut exp = Exponent::from_elem(0, n);
        let mut mask = 0u64;
        for p in 0..len {
            let l = labels[p];
            exp[l as usize - 1] += 1;
            let critical = match left[p] {
                Some(q) => labels[q] == l,
                None => zero && l == rows_of[p],
            };
            if critical {
                mask |= 1 << p;
            }
        }
        *counts.entry((exp, mask)).or_insert(0) += 1;
    }
    let mut products: HashMap<u64, AlphaPoly> = HashMap::new();
    let mut out = MPoly::zero(n);
    for ((exp, mask), count) in counts {
        let w = products
            .entry(mask)
            .or_insert_with(|| {
                (0..len)
                    .filter(|p| mask >> p & 1 == 1)
                    .fold(AlphaPoly::one(), |acc, p| acc * &hooks[p])
            })
            .scale(&count.into());
        out.add_term(exp, w);
    }
    out
}

/// `Σ_T d_T(α) x^T` over all tableaux of `shape` admissible for `variant`.
pub fn tableau_sum(shape: &[u32], n: usize, variant: Variant) -> MPoly<AlphaPoly> {
    tableau_sum_threaded(shape, n, variant, 1)
}

/// Same sum, split by the label of the first enumerated box across
/// `threads` workers. The result does not depend on `threads`.
pub fn tableau_sum_threaded(shape: &[u32], n: usize, variant: Variant, threads: usize) -> MPoly<AlphaPoly> {
    if threads <= 1 || shape.iter().all(|&r| r == 0) {
        return partial_sum(shape, n, variant, None);
    }
    let labels: Vec<u8> = (1..=n as u8).collect();
    let workers = threads.min(labels.len());
    let partials: Vec<MPoly<AlphaPoly>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let mine: Vec<u8> = labels.iter().copied().skip(w).step_by(workers).collect();
                scope.spawn(move || {
                    let mut acc = MPoly::zero(n);
                    for l in mine {
                        acc.add_assign_poly(&partial_sum(shape, n, variant, Some(l)));
                    }
                    acc
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    partials.into_iter().fold(MPoly::zero(n), |mut acc, p| {
        acc.add_assign_poly(&p);
        acc
    })
}

pub fn count_tableaux(shape: &[u32], n: usize, variant: Variant) -> usize {
    let mut filler = Filler::new(shape, n, variant, None);
    let mut k = 0;
    while filler.advance().is_some() {
        k += 1;
    }
    k
}

/// `F_λ` from the tableau formula.
pub fn f_comb(lambda: &Composition) -> MPoly<AlphaPoly> {
    tableau_sum(lambda.parts(), lambda.n(), Variant::Zero)
}

pub fn f_comb_threaded(lambda: &Composition, threads: usize) -> MPoly<AlphaPoly> {
    tableau_sum_threaded(lambda.parts(), lambda.n(), Variant::Zero, threads)
}

/// `J_λ` in `n` variables from the tableau formula; `λ` must be a partition
/// (its trailing zeros are ignored).
pub fn j_comb(lambda: &Composition, n: usize) -> Result<MPoly<AlphaPoly>> {
    lambda.require_partition()?;
    if n == 0 {
        return Err(JackError::InsufficientVariables { need: 1, got: 0 });
    }
    Ok(tableau_sum(&lambda.nonzero_parts(), n, Variant::Plain))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaKind {
    /// `d·F′_{s_iλ} = (d−1)·s_i(F′_λ) + F′_λ` for `λ_i = 0 < λ_{i+1}`,
    /// `d = d_λ(i+1, 1)`.
    SwapZero,
    /// `F′_{Φλ} = d·Φ(F′_λ)` with `d = d_{Φλ}(n, 1)`.
    Cyclic,
}

#[derive(Clone, Debug)]
pub struct LemmaWitness {
    pub holds: bool,
    pub d: AlphaPoly,
    pub lhs: MPoly<AlphaPoly>,
    pub rhs: MPoly<AlphaPoly>,
}

/// Evaluate both sides of one of the two inductive identities for the raw
/// tableau sums `F′`. `i` is ignored for [`LemmaKind::Cyclic`].
pub fn lemma_witness(lambda: &Composition, kind: LemmaKind, i: usize) -> Result<LemmaWitness> {
    let n = lambda.n();
    match kind {
        LemmaKind::SwapZero => {
            if i == 0 || i >= n {
                return Err(JackError::IndexOutOfRange { index: i, n: n - 1 });
            }
            if lambda.part(i) != 0 || lambda.part(i + 1) == 0 {
                return Err(JackError::Precondition(format!(
                    "need lambda_{i} = 0 < lambda_{} in {lambda}",
                    i + 1
                )));
            }
            let d = lambda.hook(Cell::new(i + 1, 1))?.upper;
            let f = f_comb(lambda);
            let lhs = f_comb(&lambda.swap(i)).scale(&d);
            let mut rhs = f.s(i).scale(&(d.clone() - AlphaPoly::one()));
            rhs.add_assign_poly(&f);
            Ok(LemmaWitness {
                holds: lhs == rhs,
                d,
                lhs,
                rhs,
            })
        }
        LemmaKind::Cyclic => {
            let raised = lambda.cyclic_raise();
            let d = raised.hook(Cell::new(n, 1))?.upper;
            let lhs = f_comb(&raised);
            let rhs = phi(&f_comb(lambda)).scale(&d);
            Ok(LemmaWitness {
                holds: lhs == rhs,
                d,
                lhs,
                rhs,
            })
        }
    }
}

impl LemmaWitness {
    pub fn is_trivial(&self) -> bool {
        self.lhs.is_zero() && self.rhs.is_zero() && self.d.is_zero()
    }
}
