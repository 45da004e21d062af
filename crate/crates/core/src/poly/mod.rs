//! Exact coefficient arithmetic and sparse multivariate polynomials.

mod alpha;
mod coeff;
mod mpoly;

pub use alpha::{AlphaFrac, AlphaPoly};
pub use coeff::{AlphaCoeff, Coeff};
pub use mpoly::{Exponent, MPoly};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{JackError, Result};

/// Divide every coefficient of an integral-α polynomial by `d`, landing in
/// ℚ(α).
pub fn divide_by_alpha_poly(f: &MPoly<AlphaPoly>, d: &AlphaPoly) -> Result<MPoly<AlphaFrac>> {
    if num_traits::Zero::is_zero(d) {
        return Err(JackError::DivisionByZero);
    }
    f.try_map_coeffs(|c| AlphaFrac::new(c.clone(), d.clone()))
}

/// Specialize α to a rational value.
pub fn specialize_poly(f: &MPoly<AlphaPoly>, alpha: &BigRational) -> MPoly<BigRational> {
    f.map_coeffs(|c| c.eval(alpha))
}

/// Specialize α in a ℚ(α) polynomial; fails if a denominator vanishes.
pub fn specialize_frac(f: &MPoly<AlphaFrac>, alpha: &BigRational) -> Result<MPoly<BigRational>> {
    f.try_map_coeffs(|c| c.eval(alpha))
}

/// Embed an integer polynomial into any coefficient ring.
pub fn from_integer_poly<C: Coeff>(f: &MPoly<BigInt>) -> MPoly<C> {
    f.map_coeffs(|c| {
        let small: i64 = c.try_into().expect("coefficient fits in i64");
        C::from_int(small)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn divide_examples() {
        let a1 = AlphaPoly::linear(1, 1);
        let f = MPoly::from_terms(
            2,
            [
                (Exponent::from_slice(&[1, 0]), a1.clone()),
                (Exponent::from_slice(&[0, 1]), AlphaPoly::one()),
            ],
        )
        .unwrap();
        let e = divide_by_alpha_poly(&f, &a1).unwrap();
        assert_eq!(e.coeff(&[1, 0]), Some(&AlphaFrac::one()));
        assert_eq!(
            e.coeff(&[0, 1]),
            Some(&AlphaFrac::new(AlphaPoly::one(), a1.clone()).unwrap())
        );
        let same = divide_by_alpha_poly(&f, &AlphaPoly::one()).unwrap();
        assert_eq!(same, f.map_coeffs(|c| AlphaFrac::from_poly(c.clone())));
        let a2 = AlphaPoly::linear(1, 2);
        let g = MPoly::monomial(&[0, 1], a2.clone());
        assert_eq!(
            divide_by_alpha_poly(&g, &a2).unwrap(),
            MPoly::monomial(&[0, 1], AlphaFrac::one())
        );
        assert!(divide_by_alpha_poly(&g, &AlphaPoly::from_i64s(&[])).is_err());
    }
}
