use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{AlgebraError, Int};

/// Laurent polynomial in one variable `t` with integer coefficients.
///
/// Stored as a sparse exponent -> coefficient map without zero entries, so
/// structural equality is coefficient-wise equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Int> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, T::one())
    }

    /// `c * t^exp`
    pub fn monomial(exp: i64, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, T::from_int(c))))
    }

    fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.terms.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitution `t -> t^k`; maps exponent `e` to `k * e`.
    ///
    /// Panics if `k == 0`.
    pub fn substitute(&self, k: i64) -> Self {
        assert!(k != 0, "substitution t -> t^0 is not a ring endomorphism of Laurent polynomials");
        Self { terms: self.terms.iter().map(|(&e, c)| (k * e, c.clone())).collect() }
    }

    /// Exact value at a rational point. Panics on `x = 0` with negative exponents.
    pub fn evaluate(&self, x: &Ratio<T>) -> Ratio<T> {
        let mut acc = Ratio::zero();
        for (&e, c) in &self.terms {
            acc = acc + Ratio::from_integer(c.clone()) * pow_ratio(x, e);
        }
        acc
    }

    /// Integer value at an integer point; defined whenever the result is
    /// integral (always for `x = ±1` or polynomials without negative powers).
    pub fn evaluate_int(&self, x: &T) -> Result<T, AlgebraError> {
        if x.is_zero() {
            return if self.min_exp().is_some_and(|e| e < 0) {
                Err(AlgebraError::NotIntegral)
            } else {
                Ok(self.coeff(0))
            };
        }
        let v = self.evaluate(&Ratio::from_integer(x.clone()));
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(AlgebraError::NotIntegral)
        }
    }

    /// True when `p(t) = p(t^-1)`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, c)| self.coeff(-e) == *c)
    }

    /// Exact quotient `self / d` in `Z[t, t^-1]`, if it exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dmin, dmax) = (d.min_exp()?, d.max_exp()?);
        let lead = d.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rmax) = rem.max_exp() {
            let rmin = rem.min_exp().unwrap();
            if rmax - rmin < dmax - dmin {
                return None;
            }
            let c = rem.coeff(rmax);
            let (q, r) = num_integer::Integer::div_rem(&c, &lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(rmax - dmax, q);
            rem = &rem - &(&step * d);
            quot = &quot + &step;
        }
        Some(quot)
    }
}

fn pow_ratio<T: Int>(x: &Ratio<T>, e: i64) -> Ratio<T> {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut out = Ratio::one();
    for _ in 0..e.unsigned_abs() {
        out = out * base.clone();
    }
    out
}

impl<T: Int> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Int> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: Self) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<T: Int> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<T: Int> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Int> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Int> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: Self) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Int> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

/// Canonical text form, ascending exponents: `t^-1 - 1 + t`, `-t + 3 - t^-1`
/// is printed as `-t^-1 + 3 - t`.
impl<T: Int> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse Laurent polynomial: {0}")]
pub struct ParseLaurentError(pub String);

impl<T: Int> FromStr for LaurentPoly<T> {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseLaurentError("empty input".into()));
        }
        // Split into signed terms, keeping a '-' that follows '^'.
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            let after_caret = compact[..i].ends_with('^');
            if (ch == '+' || ch == '-') && i > 0 && !after_caret {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let bad = || ParseLaurentError(format!("bad term '{piece}'"));
            let (coeff_str, exp) = match body.find('t') {
                None => (body, 0i64),
                Some(pos) => {
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
                    };
                    (&body[..pos], exp)
                }
            };
            let coeff_str = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
            let mut c = if coeff_str.is_empty() {
                if exp == 0 {
                    return Err(bad());
                }
                T::one()
            } else {
                let v: i64 = coeff_str.parse().map_err(|_| bad())?;
                T::from_int(v)
            };
            if neg {
                c = -c;
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }
}
