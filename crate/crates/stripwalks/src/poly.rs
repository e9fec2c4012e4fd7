//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! The working variable is `t`, with `z = t^2`. Walk weights assign `sqrt(z)`
//! per unit of x-displacement, so integer powers of `z` sit at even
//! t-exponents and the half-integer powers needed by the crossing walks sit
//! at odd ones. Everything here is exact; there is no floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Which variable a textual or JSON rendering is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    /// The internal variable; `t^2 = z`.
    T,
    /// The walk-weight variable. Only meaningful for even-parity data.
    Z,
}

impl Var {
    pub fn as_str(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Z => "z",
        }
    }
}

/// Classification of which t-exponents carry nonzero coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Zero,
    Even,
    Odd,
    Mixed,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("odd t-powers present; no z form exists")]
    OddPowers,
    #[error("invalid polynomial encoding: {0}")]
    BadEncoding(String),
}

/// A polynomial in `t` with `BigInt` coefficients, stored densely.
///
/// `coeffs[k]` is the coefficient of `t^k`; the highest stored coefficient is
/// nonzero. The zero polynomial is the empty vector, with degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![BigInt::from(c)])
    }

    /// The monomial `t^k`.
    pub fn t_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Ascending t-coefficients from machine integers.
    pub fn from_t_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending z-coefficients; entry `k` lands at `t^{2k}`.
    pub fn from_z_coeffs(coeffs: &[i64]) -> Self {
        let mut out = vec![BigInt::zero(); coeffs.len() * 2];
        for (k, &c) in coeffs.iter().enumerate() {
            if !out.is_empty() {
                out[2 * k] = BigInt::from(c);
            }
        }
        IntPoly::new(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Lowest-index nonzero coefficient, if any.
    fn trailing(&self) -> Option<&BigInt> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, keeping the sign pattern of the input.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Negate if the lowest-order nonzero coefficient is negative.
    pub fn sign_normalized(&self) -> Self {
        match self.trailing() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn parity(&self) -> Parity {
        if self.is_zero() {
            return Parity::Zero;
        }
        let even = self
            .coeffs
            .iter()
            .enumerate()
            .any(|(k, c)| k % 2 == 0 && !c.is_zero());
        let odd = self
            .coeffs
            .iter()
            .enumerate()
            .any(|(k, c)| k % 2 == 1 && !c.is_zero());
        match (even, odd) {
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            _ => Parity::Mixed,
        }
    }

    /// Whether a z-rendering exists (only even t-powers, or zero).
    pub fn is_even_in_t(&self) -> bool {
        matches!(self.parity(), Parity::Zero | Parity::Even)
    }

    /// Ascending z-coefficients; fails on odd t-powers.
    pub fn to_z_coeffs(&self) -> Result<Vec<BigInt>, PolyError> {
        if !self.is_even_in_t() {
            return Err(PolyError::OddPowers);
        }
        Ok(self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Exact quotient `self / div`; the error carries no partial result.
    pub fn exact_div(&self, div: &IntPoly) -> Result<IntPoly, PolyError> {
        if div.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (dn, dd) = (self.coeffs.len(), div.coeffs.len());
        if dn < dd {
            return Err(PolyError::NotDivisible);
        }
        let lead = div.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (i, d) in div.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Primitive gcd via the primitive polynomial remainder sequence.
    ///
    /// The result has content 1 and a positive lowest-order coefficient.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        if self.is_zero() {
            return Ok(other.primitive_part().sign_normalized());
        }
        if other.is_zero() {
            return Ok(self.primitive_part().sign_normalized());
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        Ok(a.sign_normalized())
    }

    /// Pseudo-remainder of `self` by `div`: the remainder of
    /// `lc(div)^(deg self - deg div + 1) * self` under division by `div`.
    fn pseudo_rem(&self, div: &IntPoly) -> IntPoly {
        let dd = div.coeffs.len();
        debug_assert!(dd > 0);
        let lead = div.leading().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() >= dd {
            let top = rem.last().expect("nonempty").clone();
            if top.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - dd;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, d) in div.coeffs.iter().enumerate() {
                rem[shift + i] -= &top * d;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Render in the given variable; `Var::Z` requires even parity.
    pub fn render(&self, var: Var) -> Result<String, PolyError> {
        let coeffs: Vec<BigInt> = match var {
            Var::T => self.coeffs.clone(),
            Var::Z => self.to_z_coeffs()?,
        };
        if coeffs.is_empty() {
            return Ok("0".to_owned());
        }
        let name = var.as_str();
        let mut out = String::new();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(name),
                _ => {
                    out.push_str(name);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        Ok(out)
    }

    /// JSON form `{"var": ..., "coeffs": [decimal strings, ascending]}`.
    pub fn to_json(&self, var: Var) -> Result<Value, PolyError> {
        let coeffs: Vec<String> = match var {
            Var::T => self.coeffs.iter().map(|c| c.to_string()).collect(),
            Var::Z => self.to_z_coeffs()?.iter().map(|c| c.to_string()).collect(),
        };
        Ok(json!({ "var": var.as_str(), "coeffs": coeffs }))
    }

    pub fn from_json(value: &Value) -> Result<IntPoly, PolyError> {
        let obj = value
            .as_object()
            .ok_or_else(|| PolyError::BadEncoding("expected an object".into()))?;
        let var = match obj.get("var").and_then(Value::as_str) {
            Some("t") => Var::T,
            Some("z") => Var::Z,
            other => {
                return Err(PolyError::BadEncoding(format!(
                    "var must be \"t\" or \"z\", got {other:?}"
                )))
            }
        };
        let raw = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| PolyError::BadEncoding("coeffs must be an array".into()))?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for entry in raw {
            let s = entry
                .as_str()
                .ok_or_else(|| PolyError::BadEncoding("coefficients must be strings".into()))?;
            let c: BigInt = s
                .parse()
                .map_err(|e| PolyError::BadEncoding(format!("bad integer {s:?}: {e}")))?;
            coeffs.push(c);
        }
        let poly = IntPoly::new(coeffs);
        Ok(match var {
            Var::T => poly,
            Var::Z => {
                let mut spread = vec![BigInt::zero(); poly.coeffs.len() * 2];
                for (k, c) in poly.coeffs.iter().enumerate() {
                    spread[2 * k] = c.clone();
                }
                IntPoly::new(spread)
            }
        })
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Var::T).expect("t form always renders"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
