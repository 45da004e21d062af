//! Exact scalars in the Jack parameter: `AlphaPoly` is an element of ℤ[α],
//! `AlphaFrac` an element of ℚ(α) kept in a unique reduced form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{JackError, Result};

/// Polynomial in α with integer coefficients; `coeffs[k]` multiplies α^k.
///
/// Invariant: no trailing zero coefficient, so the zero polynomial is the
/// empty vector and structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<BigInt>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The indeterminate α itself.
    pub fn alpha() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `slope·α + intercept`
    pub fn linear(slope: i64, intercept: i64) -> Self {
        Self::from_i64s(&[intercept, slope])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// True when every coefficient is ≥ 0, i.e. the element lies in ℕ[α].
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// gcd of the integer coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_int_exact(&c).expect("content divides every coefficient")
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divide every coefficient by `d`, or `None` if some coefficient is not
    /// a multiple of `d`.
    pub fn div_int_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Exact division in ℤ[α]; `None` unless `divisor` divides `self` with an
    /// integral quotient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for shift in (0..=ds - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &q * c;
            }
            quot[shift] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `divisor`: a remainder of
    /// `lc(divisor)^e · self` for some `e ≥ 0`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().unwrap();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let top = rem.coeffs[dr].clone();
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * lead).collect();
            for (k, c) in divisor.coeffs.iter().enumerate() {
                next[dr - dd + k] -= &top * c;
            }
            rem = Self::new(next);
        }
        rem
    }

    /// Greatest common divisor over ℚ[α], returned as a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        // Horner
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Renders with `var` standing for α, e.g. `a^2+3*a+2`.
    pub fn render(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let power = match (k, latex) {
                (0, _) => String::new(),
                (1, _) => var.to_string(),
                (_, false) => format!("{var}^{k}"),
                (_, true) => format!("{var}^{{{k}}}"),
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else if latex {
                out.push_str(&format!("{mag}{power}"));
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({})", self.render("a", false))
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a", false))
    }
}

impl From<i64> for AlphaPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for AlphaPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Zero for AlphaPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for AlphaPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl AddAssign<&AlphaPoly> for AlphaPoly {
    fn add_assign(&mut self, rhs: &AlphaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add<&AlphaPoly> for AlphaPoly {
    type Output = AlphaPoly;
    fn add(mut self, rhs: &AlphaPoly) -> AlphaPoly {
        self += rhs;
        self
    }
}

impl Add for AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: AlphaPoly) -> AlphaPoly {
        self + &rhs
    }
}

impl Sub<&AlphaPoly> for AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        self + &(-rhs.clone())
    }
}

impl Sub for AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: AlphaPoly) -> AlphaPoly {
        self + &(-rhs)
    }
}

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        AlphaPoly::new(out)
    }
}

impl Mul<&AlphaPoly> for AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        &self * rhs
    }
}

impl Mul for AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: AlphaPoly) -> AlphaPoly {
        &self * &rhs
    }
}

/// Element of ℚ(α) as a reduced ratio of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` over ℚ[α], the integer coefficients
/// of `num` and `den` have no common factor, and `den` has a positive
/// leading coefficient. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaFrac {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaFrac {
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(JackError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: AlphaPoly, den: AlphaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_int_exact(&c).unwrap();
            den = den.div_int_exact(&c).unwrap();
        }
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        Self {
            num: p,
            den: AlphaPoly::one(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        Self::new(AlphaPoly::constant(num), AlphaPoly::constant(den))
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    /// The polynomial this fraction equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&AlphaPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.recip()?)
    }

    /// Value at a rational α; fails if the denominator vanishes there.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(JackError::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }
}

impl fmt::Debug for AlphaFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaFrac({self})")
    }
}

impl fmt::Display for AlphaFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &AlphaPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl From<AlphaPoly> for AlphaFrac {
    fn from(p: AlphaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for AlphaFrac {
    fn from(c: i64) -> Self {
        Self::from_poly(AlphaPoly::constant(c))
    }
}

impl Zero for AlphaFrac {
    fn zero() -> Self {
        Self::from_poly(AlphaPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for AlphaFrac {
    fn one() -> Self {
        Self::from_poly(AlphaPoly::one())
    }
}

impl Add<&AlphaFrac> for AlphaFrac {
    type Output = AlphaFrac;
    fn add(self, rhs: &AlphaFrac) -> AlphaFrac {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return Self::reduce(self.num + &rhs.num, self.den);
        }
        let num = &self.num * &rhs.den + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Self::reduce(num, den)
    }
}

impl Add for AlphaFrac {
    type Output = AlphaFrac;
    fn add(self, rhs: AlphaFrac) -> AlphaFrac {
        self + &rhs
    }
}

impl AddAssign<&AlphaFrac> for AlphaFrac {
    fn add_assign(&mut self, rhs: &AlphaFrac) {
        let lhs = std::mem::take(self);
        *self = lhs + rhs;
    }
}

impl Default for AlphaFrac {
    fn default() -> Self {
        Self::zero()
    }
}

impl Sub<&AlphaFrac> for AlphaFrac {
    type Output = AlphaFrac;
    fn sub(self, rhs: &AlphaFrac) -> AlphaFrac {
        self + &(-rhs.clone())
    }
}

impl Sub for AlphaFrac {
    type Output = AlphaFrac;
    fn sub(self, rhs: AlphaFrac) -> AlphaFrac {
        self + &(-rhs)
    }
}

impl Neg for AlphaFrac {
    type Output = AlphaFrac;
    fn neg(self) -> AlphaFrac {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul<&AlphaFrac> for AlphaFrac {
    type Output = AlphaFrac;
    fn mul(self, rhs: &AlphaFrac) -> AlphaFrac {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num * &rhs.num);
        }
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for AlphaFrac {
    type Output = AlphaFrac;
    fn mul(self, rhs: AlphaFrac) -> AlphaFrac {
        self * &rhs
    }
}

impl PartialOrd for AlphaPoly {
    /// Coefficient-wise lexicographic order from the top degree; only used
    /// to give containers a deterministic order.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlphaPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}
