//! Exact integer Laurent polynomials in one variable `v`, with the bar
//! involution `v -> v^{-1}`.
//!
//! Coefficients are checked 64-bit integers: any overflow is reported as
//! an error instead of wrapping. The representation is a sparse map from
//! exponent to nonzero coefficient.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,
    #[error("cannot parse {0:?} as a Laurent polynomial")]
    Parse(String),
}

/// An element of `Z[v, v^{-1}]`. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c * v^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        LaurentPoly::monomial(1, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == 1
    }

    /// The coefficient of `v^k` (zero if absent).
    pub fn coeff(&self, k: i32) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn top_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn bottom_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) -> Result<(), LaurentError> {
        for (k, c) in other.iter() {
            self.add_term(k, c)?;
        }
        Ok(())
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            let neg = c.checked_neg().ok_or(LaurentError::Overflow)?;
            out.add_term(k, neg)?;
        }
        Ok(out)
    }

    pub fn negate(&self) -> LaurentPoly {
        // i64::MIN never occurs: it cannot be produced without a prior
        // overflow error.
        let terms = self.terms.iter().map(|(&k, &c)| (k, -c)).collect();
        LaurentPoly { terms }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in self.iter() {
            for (kb, cb) in other.iter() {
                let k = ka.checked_add(kb).ok_or(LaurentError::Overflow)?;
                let c = ca.checked_mul(cb).ok_or(LaurentError::Overflow)?;
                out.add_term(k, c)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<LaurentPoly, LaurentError> {
        let mut out = LaurentPoly::zero();
        for (k, a) in self.iter() {
            out.add_term(k, a.checked_mul(c).ok_or(LaurentError::Overflow)?)?;
        }
        Ok(out)
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Result<LaurentPoly, LaurentError> {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.iter() {
            out.add_term(e.checked_add(k).ok_or(LaurentError::Overflow)?, c)?;
        }
        Ok(out)
    }

    /// The bar involution: `v^k -> v^{-k}` on every term.
    pub fn bar(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&k, &c)| (-k, c)).collect();
        LaurentPoly { terms }
    }

    /// True iff every exponent is `<= -1`.
    pub fn is_strictly_negative_support(&self) -> bool {
        self.terms.keys().all(|&k| k <= -1)
    }

    /// True iff `self - 1` is supported on strictly positive even exponents,
    /// i.e. `self` lies in `1 + v^2 Z[v^2]`.
    pub fn is_one_plus_even_positive(&self) -> bool {
        self.coeff(0) == 1
            && self
                .terms
                .keys()
                .all(|&k| k == 0 || (k > 0 && k % 2 == 0))
    }

    fn add_term(&mut self, k: i32, c: i64) -> Result<(), LaurentError> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.get(&k).copied() {
            None => {
                self.terms.insert(k, c);
            }
            Some(old) => {
                let new = old.checked_add(c).ok_or(LaurentError::Overflow)?;
                if new == 0 {
                    self.terms.remove(&k);
                } else {
                    self.terms.insert(k, new);
                }
            }
        }
        Ok(())
    }

    /// Parses the canonical rendering produced by `Display`.
    pub fn parse(s: &str) -> Result<LaurentPoly, LaurentError> {
        let err = || LaurentError::Parse(s.to_owned());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        if compact == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        // Split into signed terms; a '-' right after '^' is part of an exponent.
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut cuts = Vec::new();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                cuts.push(i);
            }
        }
        cuts.push(bytes.len());
        for cut in cuts {
            let term = &compact[start..cut];
            start = cut;
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, term.strip_prefix('+').unwrap_or(term)),
            };
            let (coeff, exp) = if let Some(idx) = body.find('v') {
                let c_part = body[..idx].strip_suffix('*').unwrap_or(&body[..idx]);
                let c: i64 = if c_part.is_empty() { 1 } else { c_part.parse().map_err(|_| err())? };
                let e_part = body[idx + 1..].strip_prefix('^');
                let e: i32 = match e_part {
                    Some(e) => e.parse().map_err(|_| err())?,
                    None if body[idx + 1..].is_empty() => 1,
                    None => return Err(err()),
                };
                (c, e)
            } else {
                (body.parse().map_err(|_| err())?, 0)
            };
            out.add_term(exp, coeff.checked_mul(sign).ok_or(LaurentError::Overflow)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: terms in decreasing exponent order, e.g.
    /// `v^2 - 2 + v^-2`, `3*v^-1 + v^-3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&k, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "v")?;
                } else {
                    write!(f, "v^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
