use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::alpha::{AlphaFrac, AlphaPoly};

/// Coefficient ring for [`MPoly`](super::MPoly).
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + 'static
{
    fn from_int(c: i64) -> Self;

    /// Exact division by a nonzero integer; `None` when the quotient leaves
    /// the ring.
    fn div_int(&self, d: &BigInt) -> Option<Self>;

    /// Text rendering with `a` for α.
    fn render(&self, latex: bool) -> String;

    /// Whether the rendered form needs parentheses when used as a factor.
    fn is_compound(&self) -> bool;

    /// Whether the rendered form starts with a minus sign.
    fn is_negative_lead(&self) -> bool;
}

/// Coefficient rings that contain ℤ[α].
pub trait AlphaCoeff: Coeff {
    fn from_alpha_poly(p: &AlphaPoly) -> Self;
}

impl Coeff for AlphaPoly {
    fn from_int(c: i64) -> Self {
        AlphaPoly::constant(c)
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        self.div_int_exact(d)
    }
    fn render(&self, latex: bool) -> String {
        self.render(if latex { "\\alpha" } else { "a" }, latex)
    }
    fn is_compound(&self) -> bool {
        self.term_count() > 1
    }
    fn is_negative_lead(&self) -> bool {
        self.leading().is_some_and(|l| l.is_negative())
    }
}

impl AlphaCoeff for AlphaPoly {
    fn from_alpha_poly(p: &AlphaPoly) -> Self {
        p.clone()
    }
}

impl Coeff for AlphaFrac {
    fn from_int(c: i64) -> Self {
        AlphaFrac::from(c)
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        AlphaFrac::new(self.num().clone(), self.den().scale(d)).ok()
    }
    fn render(&self, latex: bool) -> String {
        let var = if latex { "\\alpha" } else { "a" };
        let num = self.num().render(var, latex);
        if self.den().is_one() {
            return num;
        }
        let den = self.den().render(var, latex);
        if latex {
            return format!("\\frac{{{num}}}{{{den}}}");
        }
        let wrap = |p: &AlphaPoly, s: String| {
            if p.term_count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(self.num(), num), wrap(self.den(), den))
    }
    fn is_compound(&self) -> bool {
        self.num().term_count() > 1 || !self.den().is_one()
    }
    fn is_negative_lead(&self) -> bool {
        self.num().leading().is_some_and(|l| l.is_negative())
    }
}

impl AlphaCoeff for AlphaFrac {
    fn from_alpha_poly(p: &AlphaPoly) -> Self {
        AlphaFrac::from_poly(p.clone())
    }
}

impl Coeff for BigInt {
    fn from_int(c: i64) -> Self {
        BigInt::from(c)
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
    fn render(&self, _latex: bool) -> String {
        self.to_string()
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn is_negative_lead(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for BigRational {
    fn from_int(c: i64) -> Self {
        BigRational::from_integer(c.into())
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        Some(self / BigRational::from_integer(d.clone()))
    }
    fn render(&self, latex: bool) -> String {
        if latex && !self.is_integer() {
            let sign = if self.is_negative() { "-" } else { "" };
            return format!("{sign}\\frac{{{}}}{{{}}}", self.numer().abs(), self.denom());
        }
        self.to_string()
    }
    fn is_compound(&self) -> bool {
        !self.is_integer()
    }
    fn is_negative_lead(&self) -> bool {
        self.is_negative()
    }
}
