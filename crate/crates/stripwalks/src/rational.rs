//! Exact rational generating functions: quotients of [`IntPoly`] kept in
//! lowest terms with denominator constant term 1.
//!
//! That normal form exists for every power series arising here (integer
//! coefficients, rational function), and it makes equality literal:
//! two normalized values are equal iff their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::{IntPoly, PolyError, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("denominator is zero (or vanishes at the origin) after reduction")]
    ZeroDenominator,
    #[error(
        "denominator constant term {0} is not a unit; cannot reach den(0) = 1 over the integers"
    )]
    NonUnitConstantTerm(BigInt),
}

/// A normalized rational function in `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalGF {
    num: IntPoly,
    den: IntPoly,
}

impl RationalGF {
    /// Normalize `num/den`: cancel the full integer-polynomial gcd (content
    /// included), then scale signs so the denominator has constant term 1.
    ///
    /// Cancellation happens before the constant-term check, so inputs whose
    /// denominator vanishes at the origin are accepted when the numerator
    /// carries the matching `t` factor.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, RationalError> {
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalGF {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let pp_gcd = num
            .primitive_part()
            .gcd(&den.primitive_part())
            .expect("both operands nonzero");
        let content_gcd = num.content().gcd(&den.content());
        let full = pp_gcd.scaled(&content_gcd);
        let num = num.exact_div(&full).expect("gcd divides numerator");
        let den = den.exact_div(&full).expect("gcd divides denominator");
        let c = den.constant_term();
        if c.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        if !c.magnitude().is_one() {
            return Err(RationalError::NonUnitConstantTerm(c));
        }
        if c.is_negative() {
            Ok(RationalGF {
                num: -&num,
                den: -&den,
            })
        } else {
            Ok(RationalGF { num, den })
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalGF {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RationalGF::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        RationalGF::from_poly(IntPoly::one())
    }

    /// The monomial `t^k` as a rational value.
    pub fn t_pow(k: usize) -> Self {
        RationalGF::from_poly(IntPoly::t_pow(k))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Value of the underlying power series at the origin.
    pub fn constant_term(&self) -> BigInt {
        self.num.constant_term()
    }

    /// Reciprocal; fails unless the numerator is nonzero with unit constant
    /// term (otherwise the result is not a power series over the integers).
    pub fn inv(&self) -> Result<Self, RationalError> {
        RationalGF::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        RationalGF::new(&self.num * p, self.den.clone()).expect("den(0) = 1 is preserved")
    }

    /// Whether both numerator and denominator avoid odd t-powers, i.e. the
    /// value has a faithful z-rendering.
    pub fn is_even_in_t(&self) -> bool {
        self.num.is_even_in_t() && self.den.is_even_in_t()
    }

    /// The variable this value prints in by default: `z` when possible.
    pub fn natural_var(&self) -> Var {
        if self.is_even_in_t() {
            Var::Z
        } else {
            Var::T
        }
    }

    pub fn render(&self, var: Var) -> Result<String, PolyError> {
        Ok(format!(
            "({}) / ({})",
            self.num.render(var)?,
            self.den.render(var)?
        ))
    }

    /// JSON form `{"num": {...}, "den": {...}}`, both in the same variable.
    pub fn to_json(&self, var: Var) -> Result<Value, PolyError> {
        Ok(json!({
            "num": self.num.to_json(var)?,
            "den": self.den.to_json(var)?,
        }))
    }
}

// Closure argument for the infallible ops below: for normalized inputs both
// denominators have constant term 1, so the combined denominator does too,
// and any gcd cancelled out of it keeps a unit constant term. `new` can then
// only take the happy path.
impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: &RationalGF) -> RationalGF {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalGF::new(num, den).expect("sum of normalized values normalizes")
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, rhs: &RationalGF) -> RationalGF {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalGF::new(num, den).expect("difference of normalized values normalizes")
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalGF::new(num, den).expect("product of normalized values normalizes")
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;
    fn neg(self) -> RationalGF {
        RationalGF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<IntPoly> for RationalGF {
    fn from(p: IntPoly) -> Self {
        RationalGF::from_poly(p)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Var::T).expect("t form always renders"))
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF({} / {})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_z_coeffs(coeffs)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (1 - z^2)/(1 - z) -> (1 + z)/1
        let r = RationalGF::new(z(&[1, 0, -1]), z(&[1, -1])).unwrap();
        assert_eq!(r.num(), &z(&[1, 1]));
        assert!(r.den().is_one());
    }

    #[test]
    fn normalize_keeps_lowest_terms() {
        let r = RationalGF::new(z(&[1, -1]), z(&[1, -2, -3])).unwrap();
        assert_eq!(r.num(), &z(&[1, -1]));
        assert_eq!(r.den(), &z(&[1, -2, -3]));
    }

    #[test]
    fn normalize_strips_content() {
        // (2 - 2z)/(2 - 4z - 6z^2) -> (1 - z)/(1 - 2z - 3z^2)
        let r = RationalGF::new(z(&[2, -2]), z(&[2, -4, -6])).unwrap();
        assert_eq!(r.num(), &z(&[1, -1]));
        assert_eq!(r.den(), &z(&[1, -2, -3]));
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(
            RationalGF::new(IntPoly::one(), IntPoly::zero()),
            Err(RationalError::ZeroDenominator)
        );
        // 1/t: no cancellation possible, den(0) = 0
        assert_eq!(
            RationalGF::new(IntPoly::one(), IntPoly::t_pow(1)),
            Err(RationalError::ZeroDenominator)
        );
        assert_eq!(
            RationalGF::new(IntPoly::one(), z(&[2, 1])),
            Err(RationalError::NonUnitConstantTerm(BigInt::from(2)))
        );
        // t/(2t) cancels to 1/2: still not a unit
        assert!(matches!(
            RationalGF::new(IntPoly::t_pow(1), IntPoly::from_t_coeffs(&[0, 2])),
            Err(RationalError::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn normalize_negative_unit() {
        // 1/(-1 + z) -> (-1)/(1 - z)
        let r = RationalGF::new(IntPoly::one(), z(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &z(&[-1]));
        assert_eq!(r.den(), &z(&[1, -1]));
    }

    #[test]
    fn field_identities() {
        let geom = RationalGF::new(IntPoly::one(), z(&[1, -1])).unwrap();
        // 1/(1-z) * (1-z) = 1
        assert!((&geom * &RationalGF::from_poly(z(&[1, -1]))).is_one());
        // 1 + z * 1/(1-z) = 1/(1-z)
        let lhs = &RationalGF::one() + &geom.mul_poly(&IntPoly::t_pow(2));
        assert_eq!(lhs, geom);
        // inv(1/(1-z)) = 1 - z
        let inv = geom.inv().unwrap();
        assert_eq!(inv.num(), &z(&[1, -1]));
        assert!(inv.den().is_one());
    }

    #[test]
    fn inv_errors() {
        assert_eq!(
            RationalGF::zero().inv(),
            Err(RationalError::ZeroDenominator)
        );
        let odd = RationalGF::from_poly(IntPoly::t_pow(1));
        assert_eq!(odd.inv(), Err(RationalError::ZeroDenominator));
        let two = RationalGF::from_poly(z(&[2]));
        assert!(matches!(
            two.inv(),
            Err(RationalError::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn json_and_render() {
        let f2 = RationalGF::new(z(&[1, -1]), z(&[1, -2, -3])).unwrap();
        assert!(f2.is_even_in_t());
        assert_eq!(f2.natural_var(), Var::Z);
        assert_eq!(f2.render(Var::Z).unwrap(), "(1 - z) / (1 - 2z - 3z^2)");
        let v = f2.to_json(Var::Z).unwrap();
        assert_eq!(v["num"]["coeffs"][0], "1");
        assert_eq!(v["den"]["coeffs"][2], "-3");
        let odd = RationalGF::new(IntPoly::t_pow(1), z(&[1, -3])).unwrap();
        assert_eq!(odd.natural_var(), Var::T);
        assert!(odd.to_json(Var::Z).is_err());
    }
}
