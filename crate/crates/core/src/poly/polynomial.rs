use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::Monomial;
use super::var::VarId;
use crate::error::{Error, Result};
use crate::scalar::{FieldScalar, Scalar};

/// Sparse multivariate polynomial in canonical form: no zero coefficients stored.
///
/// Equality is structural, so two polynomials are equal iff their term maps match.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(v: i64) -> Self {
        Self::constant(C::from_i64_exact(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(C::one(), m)
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(Monomial::var(v))
    }

    /// Shorthand for a plain variable by name.
    pub fn sym(name: &str) -> Self {
        Self::var(VarId::new(name))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: &VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: &VarId) -> bool {
        self.terms.keys().any(|m| m.contains(v))
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// All coefficients are `>= 0`.
    pub fn coefficientwise_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul_ref(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a.mul_ref(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `bindings` as a ring homomorphism; unbound variables pass through.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Poly<C>>) -> Self {
        if bindings.is_empty() || !self.vars().iter().any(|v| bindings.contains_key(v)) {
            return self.clone();
        }
        let mut powers: HashMap<(VarId, u32), Poly<C>> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Self::constant(c.clone());
            for &(v, e) in m.factors() {
                match bindings.get(&v) {
                    Some(image) => {
                        let p = powers.entry((v, e)).or_insert_with(|| image.pow(e)).clone();
                        factor = &factor * &p;
                    }
                    None => kept.push((v, e)),
                }
            }
            let rest = Monomial::from_pairs(kept);
            out += &factor.mul_monomial(&rest, &C::one());
        }
        out
    }

    /// Substitutes a single variable.
    pub fn subs(&self, v: VarId, image: &Poly<C>) -> Self {
        let mut b = BTreeMap::new();
        b.insert(v, image.clone());
        self.substitute(&b)
    }

    pub fn derivative(&self, v: &VarId) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == 0 {
                continue;
            }
            let lowered = rest.mul(&Monomial::power(*v, e - 1));
            out.add_term(lowered, &c.mul_ref(&C::from_u32(e).expect("small integer")));
        }
        out
    }

    /// Coefficients of `v^0, v^1, ..., v^deg` as polynomials free of `v`.
    pub fn coefficients_in(&self, v: &VarId) -> Vec<Poly<C>> {
        let mut out = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out[e as usize].add_term(rest, c);
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::<D>::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }
}

impl<C: FieldScalar> Poly<C> {
    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly<C>) -> Result<Poly<C>> {
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| Error::NotDivisible("division by zero".into()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m
                .div(lm)
                .ok_or_else(|| Error::NotDivisible(format!("leading monomial {m} by {lm}")))?;
            let qc = c.clone() / lc.clone();
            if qc.mul_ref(lc) != *c {
                return Err(Error::NotDivisible(format!("coefficient of {m}")));
            }
            rem -= &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }
}

impl Poly<BigRational> {
    /// Every coefficient has denominator 1.
    pub fn is_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        self.is_integer()
            .then(|| self.map_coeffs(|c| c.to_integer()))
    }
}

impl Poly<BigInt> {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl<'a, C: Scalar> AddAssign<&'a Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &'a Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a, C: Scalar> SubAssign<&'a Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &'a Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &(-c.clone()));
        }
    }
}

impl<C: Scalar> AddAssign for Poly<C> {
    fn add_assign(&mut self, rhs: Poly<C>) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            *self += &rhs;
        }
    }
}

impl<'a, C: Scalar> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += rhs;
        self
    }
}

impl<'a, C: Scalar> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<'a, C: Scalar> Neg for &'a Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -self.clone()
    }
}

impl<'a, C: Scalar> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1.mul_ref(c2);
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        e.get_mut().add_assign_ref(&c)
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Scalar> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl<C: Scalar> std::iter::Product for Poly<C> {
    fn product<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

impl<C: Scalar> From<VarId> for Poly<C> {
    fn from(v: VarId) -> Self {
        Poly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Polynomial;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn add_identity_inverse_cancellation() {
        assert_eq!(&p("x + 3*x^2") + &Polynomial::zero(), p("x + 3*x^2"));
        assert!((&p("x") + &p("-x")).is_empty());
        assert_eq!(&p("x + z") + &p("x - z"), p("2*x"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x + z") * &Polynomial::one(), p("x + z"));
        assert_eq!(p("x + z").pow(2), p("x^2 + 2*x*z + z^2"));
        assert_eq!(&p("1 - x") * &p("1 + x + x^2 + x^3"), p("1 - x^4"));
    }

    #[test]
    fn substitute_examples() {
        let w2 = p("x + 3*x^2");
        assert_eq!(w2.subs(VarId::new("x"), &Polynomial::one()), p("4"));
        assert_eq!(w2.substitute(&BTreeMap::new()), w2);
        assert_eq!(p("x*y").subs(VarId::new("x"), &p("y")), p("y^2"));
    }

    #[test]
    fn derivative_and_split() {
        let q = p("3*x^2*z + x - 7");
        assert_eq!(q.derivative(&VarId::new("x")), p("6*x*z + 1"));
        assert_eq!(q.derivative(&VarId::new("w")), Polynomial::zero());
        let cs = q.coefficients_in(&VarId::new("x"));
        assert_eq!(cs, vec![p("-7"), p("1"), p("3*z")]);
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - z^2");
        assert_eq!(a.div_exact(&p("x - z")).unwrap(), p("x + z"));
        assert!(a.div_exact(&p("x + 2")).is_err());
        assert!(p("x").div_exact(&Polynomial::zero()).is_err());
        assert_eq!(p("3*x").div_exact(&p("2")).unwrap(), p("3/2*x"));
        let ints = p("3*x").to_integer().unwrap();
        assert!(ints.div_exact(&Poly::<BigInt>::int(2)).is_err());
    }

    #[test]
    fn integrality_and_sign() {
        assert!(p("3*x - 2").is_integer());
        assert!(!p("1/2*x").is_integer());
        assert!(p("x + 2*y").coefficientwise_nonneg());
        assert!(!p("x - y").coefficientwise_nonneg());
    }
}
