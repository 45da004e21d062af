//! JSON term encoding and deterministic text / LaTeX rendering.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{JackError, Result};
use crate::poly::{AlphaFrac, AlphaPoly, Coeff, Exponent, MPoly};

/// Coefficient in the JSON term format. ℤ[α] elements are a list of
/// decimal strings indexed by the power of α; ℚ(α) elements carry
/// numerator and denominator lists; plain numbers are a single string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefJson {
    Poly(Vec<String>),
    Frac { num: Vec<String>, den: Vec<String> },
    Scalar(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: CoefJson,
}

pub trait JsonCoeff: Coeff {
    fn to_json(&self) -> CoefJson;
    fn from_json(v: &CoefJson) -> Result<Self>;
}

fn poly_strings(p: &AlphaPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn parse_poly(v: &[String]) -> Result<AlphaPoly> {
    v.iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| JackError::Parse(format!("bad integer {s:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(AlphaPoly::new)
}

impl JsonCoeff for AlphaPoly {
    fn to_json(&self) -> CoefJson {
        CoefJson::Poly(poly_strings(self))
    }
    fn from_json(v: &CoefJson) -> Result<Self> {
        match v {
            CoefJson::Poly(c) => parse_poly(c),
            other => Err(JackError::Parse(format!("expected an α-polynomial, got {other:?}"))),
        }
    }
}

impl JsonCoeff for AlphaFrac {
    fn to_json(&self) -> CoefJson {
        CoefJson::Frac {
            num: poly_strings(self.num()),
            den: poly_strings(self.den()),
        }
    }
    fn from_json(v: &CoefJson) -> Result<Self> {
        match v {
            CoefJson::Frac { num, den } => AlphaFrac::new(parse_poly(num)?, parse_poly(den)?),
            CoefJson::Poly(c) => Ok(AlphaFrac::from_poly(parse_poly(c)?)),
            other => Err(JackError::Parse(format!("expected an α-fraction, got {other:?}"))),
        }
    }
}

impl JsonCoeff for BigInt {
    fn to_json(&self) -> CoefJson {
        CoefJson::Scalar(self.to_string())
    }
    fn from_json(v: &CoefJson) -> Result<Self> {
        match v {
            CoefJson::Scalar(s) => s
                .parse()
                .map_err(|_| JackError::Parse(format!("bad integer {s:?}"))),
            other => Err(JackError::Parse(format!("expected an integer, got {other:?}"))),
        }
    }
}

impl JsonCoeff for BigRational {
    fn to_json(&self) -> CoefJson {
        CoefJson::Scalar(self.to_string())
    }
    fn from_json(v: &CoefJson) -> Result<Self> {
        match v {
            CoefJson::Scalar(s) => s
                .parse()
                .map_err(|_| JackError::Parse(format!("bad rational {s:?}"))),
            other => Err(JackError::Parse(format!("expected a rational, got {other:?}"))),
        }
    }
}

/// Terms in graded-lexicographic descending order.
pub fn poly_to_terms<C: JsonCoeff>(f: &MPoly<C>) -> Vec<TermJson> {
    f.sorted_terms()
        .into_iter()
        .map(|(e, c)| TermJson {
            exp: e.to_vec(),
            coef: c.to_json(),
        })
        .collect()
}

pub fn poly_from_terms<C: JsonCoeff>(n: usize, terms: &[TermJson]) -> Result<MPoly<C>> {
    let parsed = terms
        .iter()
        .map(|t| Ok((Exponent::from_slice(&t.exp), C::from_json(&t.coef)?)))
        .collect::<Result<Vec<_>>>()?;
    MPoly::from_terms(n, parsed)
}

fn monomial_text(e: &[i32], latex: bool) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        let v = i + 1;
        let s = match (k, latex) {
            (0, _) => continue,
            (1, false) => format!("x{v}"),
            (_, false) => format!("x{v}^{k}"),
            (1, true) => format!("x_{{{v}}}"),
            (_, true) => format!("x_{{{v}}}^{{{k}}}"),
        };
        parts.push(s);
    }
    parts.join(if latex { " " } else { "*" })
}

/// `coefficient` times a basis element rendered as `basis`, with `joiner`
/// between them (`*` for monomials, a space for symmetric bases).
fn scaled(c: &impl Coeff, basis: &str, joiner: &str, latex: bool) -> String {
    if basis.is_empty() {
        return c.render(latex);
    }
    if c.is_one() {
        return basis.to_string();
    }
    if (-c.clone()).is_one() {
        return format!("-{basis}");
    }
    let coef = c.render(latex);
    if c.is_compound() {
        format!("({coef}){joiner}{basis}")
    } else {
        format!("{coef}{joiner}{basis}")
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

/// e.g. `(a+1)*x1 + x2`, or `(\alpha+1) x_{1} + x_{2}` in LaTeX.
pub fn render_poly<C: Coeff>(f: &MPoly<C>, latex: bool) -> String {
    let joiner = if latex { " " } else { "*" };
    join_terms(
        f.sorted_terms()
            .into_iter()
            .map(|(e, c)| scaled(c, &monomial_text(e, latex), joiner, latex))
            .collect(),
    )
}

/// Basis element label such as `m[2,1]` / `m_{(2,1)}`.
pub fn basis_label(name: &str, index: &[u32], latex: bool) -> String {
    let idx: Vec<String> = index.iter().map(u32::to_string).collect();
    if latex {
        format!("{name}_{{({})}}", idx.join(","))
    } else {
        format!("{name}[{}]", idx.join(","))
    }
}

/// e.g. `(a+2) m[2,1] + 6 m[1,1,1]`.
pub fn render_expansion<'a, C: Coeff + 'a>(
    entries: impl IntoIterator<Item = (String, &'a C)>,
    latex: bool,
) -> String {
    join_terms(
        entries
            .into_iter()
            .map(|(label, c)| scaled(c, &label, " ", latex))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn ap(v: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64s(v)
    }

    #[test]
    fn renders_f10() {
        let f = &MPoly::monomial(&[1, 0], ap(&[1, 1])) + &MPoly::monomial(&[0, 1], AlphaPoly::one());
        assert_eq!(render_poly(&f, false), "(a+1)*x1 + x2");
        assert_eq!(render_poly(&f, true), "(\\alpha+1) x_{1} + x_{2}");
    }

    #[test]
    fn renders_signs_and_constants() {
        let f = &(&MPoly::monomial(&[2, 1], BigInt::from(-3))
            + &MPoly::monomial(&[0, 0], BigInt::from(5)))
            + &MPoly::monomial(&[0, 2], BigInt::from(-1));
        assert_eq!(render_poly(&f, false), "-3*x1^2*x2 - x2^2 + 5");
        assert_eq!(render_poly(&MPoly::<BigInt>::zero(2), false), "0");
        let g = MPoly::monomial(&[0, 1], AlphaFrac::new(ap(&[1]), ap(&[1, 1])).unwrap());
        assert_eq!(render_poly(&g, false), "(1/(a+1))*x2");
    }

    #[test]
    fn renders_expansions() {
        let a2 = ap(&[2, 1]);
        let six = ap(&[6]);
        let s = render_expansion(
            [
                (basis_label("m", &[2, 1], false), &a2),
                (basis_label("m", &[1, 1, 1], false), &six),
            ],
            false,
        );
        assert_eq!(s, "(a+2) m[2,1] + 6 m[1,1,1]");
    }

    #[test]
    fn rejects_malformed_terms() {
        let bad = vec![TermJson {
            exp: vec![1],
            coef: CoefJson::Poly(vec!["1".into()]),
        }];
        assert!(poly_from_terms::<AlphaPoly>(2, &bad).is_err());
        let bad = vec![TermJson {
            exp: vec![1, 0],
            coef: CoefJson::Poly(vec!["x".into()]),
        }];
        assert!(poly_from_terms::<AlphaPoly>(2, &bad).is_err());
    }

    fn arb_alpha_poly() -> impl Strategy<Value = AlphaPoly> {
        prop::collection::vec(-50i64..50, 0..4).prop_map(|v| AlphaPoly::from_i64s(&v))
    }

    fn arb_frac_poly() -> impl Strategy<Value = MPoly<AlphaFrac>> {
        prop::collection::vec(
            (prop::collection::vec(0i32..4, 3), arb_alpha_poly(), arb_alpha_poly()),
            0..6,
        )
        .prop_map(|terms| {
            let mut f = MPoly::zero(3);
            for (e, num, den) in terms {
                if let Ok(c) = AlphaFrac::new(num, den) {
                    f.add_term(Exponent::from_slice(&e), c);
                }
            }
            f
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(f in arb_frac_poly()) {
            let text = serde_json::to_string(&poly_to_terms(&f)).unwrap();
            let back: Vec<TermJson> = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(poly_from_terms::<AlphaFrac>(3, &back).unwrap(), f);
        }
    }
}
