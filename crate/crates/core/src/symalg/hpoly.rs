//! Polynomials in the formal parameter `h` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, One, Signed, Zero};

pub type Rational = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `Σ_k c_k h^k`, stored sparsely with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HPoly {
    terms: BTreeMap<u32, Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly::default()
    }

    pub fn one() -> Self {
        HPoly::constant(Rational::one())
    }

    /// The formal parameter `h`.
    pub fn h() -> Self {
        HPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        HPoly::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        HPoly::constant(int(n))
    }

    pub fn monomial(c: Rational, power: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(power, c);
        }
        HPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, power: u32) -> Rational {
        self.terms.get(&power).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value at `h = 0`.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, power: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        if c.is_zero() {
            return HPoly::zero();
        }
        HPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `h^k`.
    pub fn shift(&self, k: u32) -> HPoly {
        HPoly {
            terms: self.terms.iter().map(|(p, v)| (p + k, v.clone())).collect(),
        }
    }
}

impl From<Rational> for HPoly {
    fn from(c: Rational) -> Self {
        HPoly::constant(c)
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl SubAssign<&HPoly> for HPoly {
    fn sub_assign(&mut self, rhs: &HPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for HPoly {
            type Output = HPoly;
            fn $m(self, rhs: HPoly) -> HPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

/// Writes `|c| h^k` with unit magnitudes suppressed when `h` or a trailing
/// basis element is present. Returns the parts to be space-joined.
pub(crate) fn magnitude_parts(c: &Rational, power: u32, has_basis: bool) -> Vec<String> {
    let mut parts = Vec::new();
    let mag = c.abs();
    if !(mag.is_one() && (power > 0 || has_basis)) {
        parts.push(mag.to_string());
    }
    match power {
        0 => {}
        1 => parts.push("h".into()),
        k => parts.push(format!("h^{k}")),
    }
    parts
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let body = magnitude_parts(c, *k, false).join(" ");
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_hpoly() -> impl Strategy<Value = HPoly> {
        proptest::collection::vec((0u32..4, -6i64..6, 1i64..5), 0..5).prop_map(|ts| {
            let mut p = HPoly::zero();
            for (k, n, d) in ts {
                p.add_term(k, &rat(n, d));
            }
            p
        })
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let mut p = HPoly::h();
        p.add_term(1, &int(-1));
        assert!(p.is_zero());
        assert_eq!(p, HPoly::zero());
        assert!(HPoly::monomial(int(0), 3).is_zero());
    }

    #[test]
    fn display() {
        let p = &HPoly::from_int(3) + &HPoly::monomial(rat(-1, 2), 2);
        assert_eq!(p.to_string(), "3 - 1/2 h^2");
        assert_eq!(HPoly::h().to_string(), "h");
        assert_eq!((-HPoly::h()).to_string(), "-h");
        assert_eq!(HPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_hpoly(), b in arb_hpoly(), c in arb_hpoly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &HPoly::one(), a.clone());
        }
    }
}
