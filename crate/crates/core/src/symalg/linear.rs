//! Sparse `k[h]`-linear combinations over an ordered basis.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use super::hpoly::{HPoly, Rational};

/// `Σ c_K · K` with `HPoly` coefficients; zero coefficients are never stored
/// and iteration follows the basis order, so equality and output are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, HPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, HPoly::one())
    }

    pub fn term(key: K, coeff: HPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &HPoly)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> HPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: &HPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff.clone());
            }
        }
    }

    /// Adds `c · h^power · key`.
    pub fn add_scaled(&mut self, key: K, c: &Rational, power: u32) {
        self.add_term(key, &HPoly::monomial(c.clone(), power));
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    /// `c · self`, reusing `self` when `c = 1`.
    pub fn into_scaled(self, c: &HPoly) -> Self {
        if *c == HPoly::one() {
            self
        } else {
            self.scale(c)
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &v.scale(c));
        }
        out
    }

    /// Extends a basis map linearly over `k[h]`.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_assign_scaled(&f(k), c);
        }
        out
    }

    /// Extends a bilinear basis map over `k[h]`.
    pub fn bilinear<R: Ord + Clone, L: Ord + Clone>(
        &self,
        rhs: &LinComb<R>,
        mut f: impl FnMut(&K, &R) -> LinComb<L>,
    ) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_assign_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &HPoly) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    /// The coefficient of `h^power`, as an element with constant coefficients.
    pub fn h_coefficient(&self, power: u32) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &HPoly::constant(v.coeff(power)));
        }
        out
    }

    /// Value at `h = 0`.
    pub fn at_h_zero(&self) -> Self {
        self.h_coefficient(0)
    }

    /// Largest `h`-degree among the coefficients.
    pub fn h_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(HPoly::degree).max()
    }

    /// First basis element (in basis order) at which `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<K> {
        let diff = self - other;
        diff.terms.keys().next().cloned()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, HPoly)> {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, HPoly)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, HPoly)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), &-v);
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

/// Accumulates integer multiplicities of `(key, power of h/2)` before the
/// final conversion into exact coefficients. Used by the matching sums.
pub(crate) struct HalfPowerAccumulator<K> {
    counts: rustc_hash::FxHashMap<(K, u32), i128>,
}

impl<K: Ord + Clone + std::hash::Hash> HalfPowerAccumulator<K> {
    pub fn new() -> Self {
        HalfPowerAccumulator {
            counts: rustc_hash::FxHashMap::default(),
        }
    }

    /// `None` when the running count would overflow.
    pub fn checked_add(&mut self, key: K, half_power: u32, n: i128) -> Option<()> {
        let slot = self.counts.entry((key, half_power)).or_insert(0);
        *slot = slot.checked_add(n)?;
        Some(())
    }

    /// Adds the counts of `other`; `None` on overflow.
    pub fn merge(&mut self, other: Self) -> Option<()> {
        for ((key, k), n) in other.counts {
            self.checked_add(key, k, n)?;
        }
        Some(())
    }

    /// Converts to `Σ count · (h/2)^k · key`.
    pub fn finish(self) -> LinComb<K> {
        let mut out = LinComb::zero();
        for ((key, k), n) in self.counts {
            if n != 0 {
                let c = Rational::new(n.into(), num::BigInt::from(1u8) << k);
                out.add_scaled(key, &c, k);
            }
        }
        out
    }
}

/// `Σ n_k (h/2)^k` as the list of `(k, n_k)`.
pub(crate) type HalfPowers = Vec<(u32, i128)>;

/// Writes `c` as `Σ n_k (h/2)^k` with integers `n_k`, when it has that form.
pub(crate) fn half_power_form(c: &HPoly) -> Option<HalfPowers> {
    c.terms()
        .map(|(k, r)| {
            let n = r * Rational::from_integer(num::BigInt::from(1u8) << k);
            if !n.is_integer() {
                return None;
            }
            Some((k, i128::try_from(n.numer()).ok()?))
        })
        .collect()
}

/// The terms of `a` in half-power form, when every coefficient has it.
pub(crate) fn half_power_terms<K: Ord + Clone>(a: &LinComb<K>) -> Option<Vec<(&K, HalfPowers)>> {
    a.iter().map(|(k, c)| Some((k, half_power_form(c)?))).collect()
}
