use std::fmt;

use super::polynomial::Poly;
use super::var::VarId;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Formal power series in `t` known modulo `t^(order+1)`.
///
/// Coefficients never mention `t`. Binary operations require equal orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries<C> {
    coeffs: Vec<Poly<C>>,
}

impl<C: Scalar> PowerSeries<C> {
    /// Builds a series of the given order; missing coefficients are zero and
    /// coefficients beyond `order` are dropped.
    pub fn new(order: usize, mut coeffs: Vec<Poly<C>>) -> Result<Self> {
        let t = VarId::t();
        if coeffs.iter().any(|c| c.contains_var(&t)) {
            return Err(Error::ContainsSeriesVariable);
        }
        coeffs.resize(order + 1, Poly::zero());
        Ok(PowerSeries { coeffs })
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [Poly<C>] {
        &mut self.coeffs
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Poly::one())
    }

    pub fn constant(order: usize, c: Poly<C>) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t` itself.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Poly::one();
        }
        s
    }

    /// Reads a polynomial in `t` as a series.
    pub fn from_poly_in_t(p: &Poly<C>, order: usize) -> Self {
        let mut coeffs = p.coefficients_in(&VarId::t());
        coeffs.resize(order + 1, Poly::zero());
        PowerSeries { coeffs }
    }

    /// Collapses back to a polynomial in `t`.
    pub fn to_poly_in_t(&self) -> Poly<C> {
        let t = Poly::var(VarId::t());
        let mut out = Poly::zero();
        let mut tp = Poly::one();
        for c in &self.coeffs {
            out += &(c * &tp);
            tp = &tp * &t;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly<C>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly<C>> {
        self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&Poly<C>> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![Poly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(PowerSeries { coeffs })
    }

    /// Multiplies every coefficient by a `t`-free polynomial.
    pub fn scale(&self, p: &Poly<C>) -> Result<Self> {
        if p.contains_var(&VarId::t()) {
            return Err(Error::ContainsSeriesVariable);
        }
        Ok(self.map(|c| c * p))
    }

    pub fn map(&self, f: impl Fn(&Poly<C>) -> Poly<C>) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies by `t^k`; the result is known to order `order + k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    /// Forgets coefficients above `order` (which must not exceed the current order).
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Inverse of a series with constant term exactly 1.
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotUnitConstant);
        }
        let n = self.order();
        let mut r: Vec<Poly<C>> = Vec::with_capacity(n + 1);
        r.push(Poly::one());
        for k in 1..=n {
            let mut acc = Poly::zero();
            for j in 1..=k {
                let s = &self.coeffs[j];
                if !s.is_zero() && !r[k - j].is_zero() {
                    acc -= &(s * &r[k - j]);
                }
            }
            r.push(acc);
        }
        Ok(PowerSeries { coeffs: r })
    }

    /// Formal derivative in `t`; known to one order less.
    pub fn derivative_t(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        PowerSeries {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&C::from_usize(k + 1).expect("small integer")))
                .collect(),
        }
    }

    /// `self(inner(t))`; `inner` must have zero constant term and the same order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "inner series of a composition needs zero constant term".into(),
            ));
        }
        let n = self.order();
        let mut acc = Self::constant(n, self.coeffs[n].clone());
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse of `t + s_2 t^2 + ...` by undetermined coefficients.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || (self.order() >= 1 && !self.coeffs[1].is_one()) {
            return Err(Error::NotInvertibleSeed);
        }
        let n = self.order();
        let mut r = Self::t(n);
        for k in 2..=n {
            let head = self.truncate(k)?;
            let guess = r.truncate(k)?;
            let residue = head.compose(&guess)?;
            r.coeffs[k] = -residue.coeffs[k].clone();
        }
        Ok(r)
    }

    /// True when the series is exactly 1 up to its order.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Poly::is_zero)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Polynomial, Series};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn ser(order: usize, cs: &[&str]) -> Series {
        Series::new(order, cs.iter().map(|c| p(c)).collect()).unwrap()
    }

    #[test]
    fn mul_examples() {
        let a = ser(2, &["1", "1"]);
        let b = ser(2, &["1", "-1"]);
        assert_eq!(a.mul(&b).unwrap(), ser(2, &["1", "0", "-1"]));
        let f = ser(3, &["1", "1", "2", "6"]);
        assert_eq!(f.mul(&Series::one(3)).unwrap(), f);
        assert_eq!(
            a.mul(&Series::one(3)),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            ser(3, &["1", "-1"]).reciprocal().unwrap(),
            ser(3, &["1", "1", "1", "1"])
        );
        assert_eq!(Series::one(4).reciprocal().unwrap(), Series::one(4));
        let s = ser(2, &["1", "-x - 1"]);
        let r = s.reciprocal().unwrap();
        assert_eq!(r, ser(2, &["1", "1 + x", "1 + 2*x + x^2"]));
        assert!(s.mul(&r).unwrap().is_one());
        assert_eq!(ser(2, &["2"]).reciprocal(), Err(Error::NotUnitConstant));
    }

    #[test]
    fn compositional_inverse_examples() {
        assert_eq!(Series::t(5).compositional_inverse().unwrap(), Series::t(5));
        let s = ser(3, &["0", "1", "-1"]);
        let r = s.compositional_inverse().unwrap();
        assert_eq!(r, ser(3, &["0", "1", "1", "2"]));
        assert_eq!(s.compose(&r).unwrap(), Series::t(3));
        assert_eq!(
            ser(3, &["0", "2"]).compositional_inverse(),
            Err(Error::NotInvertibleSeed)
        );
        assert_eq!(
            ser(3, &["1", "1"]).compositional_inverse(),
            Err(Error::NotInvertibleSeed)
        );
    }

    #[test]
    fn generic_inverse_reproduces_multivariate_ward() {
        // F = t - x1 t^2/2! - x2 t^3/3! - x3 t^4/4!
        let f = ser(4, &["0", "1", "-1/2*x[1]", "-1/6*x[2]", "-1/24*x[3]"]);
        let w = f.compositional_inverse().unwrap();
        assert_eq!(w.coefficient(1).unwrap(), &p("1"));
        assert_eq!(w.coefficient(2).unwrap(), &p("1/2*x[1]"));
        assert_eq!(w.coefficient(3).unwrap(), &p("1/2*x[1]^2 + 1/6*x[2]"));
        assert_eq!(
            w.coefficient(4).unwrap(),
            &p("15/24*x[1]^3 + 10/24*x[1]*x[2] + 1/24*x[3]")
        );
    }

    #[test]
    fn coefficient_range() {
        let s = ser(3, &["1", "-1"]).reciprocal().unwrap();
        assert_eq!(s.coefficient(3).unwrap(), &Polynomial::one());
        assert_eq!(
            s.coefficient(4),
            Err(Error::IndexOutOfRange { index: 4, order: 3 })
        );
    }

    #[test]
    fn rejects_t_in_coefficients() {
        assert_eq!(
            Series::new(2, vec![p("t")]),
            Err(Error::ContainsSeriesVariable)
        );
    }

    #[test]
    fn derivative_and_shift() {
        let s = ser(3, &["1", "2", "3", "4"]);
        assert_eq!(s.derivative_t(), ser(2, &["2", "6", "12"]));
        assert_eq!(s.shift(1).order(), 4);
        assert_eq!(s.shift(1).coefficient(4).unwrap(), &p("4"));
    }
}
