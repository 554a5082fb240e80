//! S-, J- and T-type continued fractions expanded as truncated power series.
//!
//! Indexing follows the usual convention: `alpha`, `delta` and `beta` start
//! at 1, `gamma` starts at 0.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Poly, PowerSeries};
use crate::scalar::Scalar;
use crate::Rational;

/// A coefficient generator `i -> P_i`.
pub type Coefficients<C = Rational> = Arc<dyn Fn(usize) -> Poly<C> + Send + Sync>;

pub fn coefficients<C, F>(f: F) -> Coefficients<C>
where
    F: Fn(usize) -> Poly<C> + Send + Sync + 'static,
{
    Arc::new(f)
}

#[derive(Clone)]
pub enum ContinuedFraction<C = Rational> {
    /// `1/(1 - alpha_1 t/(1 - alpha_2 t/(1 - ...)))`
    S { alpha: Coefficients<C> },
    /// `1/(1 - gamma_0 t - beta_1 t^2/(1 - gamma_1 t - beta_2 t^2/(...)))`
    J {
        gamma: Coefficients<C>,
        beta: Coefficients<C>,
    },
    /// `1/(1 - delta_1 t - alpha_1 t/(1 - delta_2 t - alpha_2 t/(...)))`
    T {
        alpha: Coefficients<C>,
        delta: Coefficients<C>,
    },
}

impl<C> fmt::Debug for ContinuedFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::S { .. } => "ContinuedFraction::S",
            Self::J { .. } => "ContinuedFraction::J",
            Self::T { .. } => "ContinuedFraction::T",
        })
    }
}

impl<C: Scalar> ContinuedFraction<C> {
    pub fn s(alpha: impl Fn(usize) -> Poly<C> + Send + Sync + 'static) -> Self {
        Self::S {
            alpha: coefficients(alpha),
        }
    }

    pub fn j(
        gamma: impl Fn(usize) -> Poly<C> + Send + Sync + 'static,
        beta: impl Fn(usize) -> Poly<C> + Send + Sync + 'static,
    ) -> Self {
        Self::J {
            gamma: coefficients(gamma),
            beta: coefficients(beta),
        }
    }

    pub fn t(
        alpha: impl Fn(usize) -> Poly<C> + Send + Sync + 'static,
        delta: impl Fn(usize) -> Poly<C> + Send + Sync + 'static,
    ) -> Self {
        Self::T {
            alpha: coefficients(alpha),
            delta: coefficients(delta),
        }
    }

    /// Truncated expansion to `t^order`.
    pub fn expand(&self, order: usize) -> PowerSeries<C> {
        match self {
            Self::S { alpha } => expand_t(&**alpha, &|_| Poly::zero(), order),
            Self::T { alpha, delta } => expand_t(&**alpha, &**delta, order),
            Self::J { gamma, beta } => expand_j(&**gamma, &**beta, order),
        }
    }

    /// Literal bottom-up evaluation with `depth` levels, every level kept to full order.
    pub fn expand_with_depth(&self, order: usize, depth: usize) -> PowerSeries<C> {
        match self {
            Self::S { alpha } => expand_t_literal(&**alpha, &|_| Poly::zero(), order, depth),
            Self::T { alpha, delta } => expand_t_literal(&**alpha, &**delta, order, depth),
            Self::J { gamma, beta } => expand_j_literal(&**gamma, &**beta, order, depth),
        }
    }

    /// Even contraction of a T-fraction (or S-fraction) into a J-fraction.
    ///
    /// Requires `delta_{2n} = 0`; this is checked for every index that can
    /// influence the expansion to `t^order`.
    pub fn contract(&self, order: usize) -> Result<Self> {
        let (alpha, delta): (Coefficients<C>, Coefficients<C>) = match self {
            Self::S { alpha } => (alpha.clone(), coefficients(|_| Poly::zero())),
            Self::T { alpha, delta } => (alpha.clone(), delta.clone()),
            Self::J { .. } => {
                return Err(Error::Precondition(
                    "only S- and T-fractions can be contracted".into(),
                ))
            }
        };
        for k in 1..=order + 1 {
            if !delta(2 * k).is_zero() {
                return Err(Error::NonzeroEvenDelta { index: 2 * k });
            }
        }
        let (a, d) = (alpha.clone(), delta.clone());
        let gamma = move |n: usize| {
            if n == 0 {
                a(1) + d(1)
            } else {
                &(&a(2 * n) + &a(2 * n + 1)) + &d(2 * n + 1)
            }
        };
        let beta = move |n: usize| &alpha(2 * n - 1) * &alpha(2 * n);
        Ok(Self::j(gamma, beta))
    }
}

/// T-fraction expansion, truncating level `k` to order `order - k`.
pub fn expand_t<C: Scalar>(
    alpha: &dyn Fn(usize) -> Poly<C>,
    delta: &dyn Fn(usize) -> Poly<C>,
    order: usize,
) -> PowerSeries<C> {
    let mut f = PowerSeries::one(0);
    for k in (0..order).rev() {
        let o = order - k;
        let (a, d) = (alpha(k + 1), delta(k + 1));
        let mut den = f.shift(1).map(|c| -(c * &a));
        den.coeffs_mut()[0] = Poly::one();
        den.coeffs_mut()[1] -= &d;
        debug_assert_eq!(den.order(), o);
        f = den.reciprocal().expect("constant term is one");
    }
    f
}

fn expand_t_literal<C: Scalar>(
    alpha: &dyn Fn(usize) -> Poly<C>,
    delta: &dyn Fn(usize) -> Poly<C>,
    order: usize,
    depth: usize,
) -> PowerSeries<C> {
    let mut f = PowerSeries::one(order);
    for k in (0..depth).rev() {
        let tail = f.shift(1).truncate(order).expect("shift raises order");
        let level = PowerSeries::t(order).scale(&delta(k + 1)).expect("t-free");
        let den = PowerSeries::one(order)
            .sub(&level)
            .and_then(|s| s.sub(&tail.scale(&alpha(k + 1))?))
            .expect("orders agree");
        f = den.reciprocal().expect("constant term is one");
    }
    f
}

/// J-fraction expansion with per-level truncation.
pub fn expand_j<C: Scalar>(
    gamma: &dyn Fn(usize) -> Poly<C>,
    beta: &dyn Fn(usize) -> Poly<C>,
    order: usize,
) -> PowerSeries<C> {
    let mut f = PowerSeries::one(0);
    for k in (0..order).rev() {
        let o = order - k;
        let mut den = if o >= 2 {
            let b = beta(k + 1);
            f.truncate(o - 2)
                .expect("previous level is longer")
                .shift(2)
                .map(|c| -(c * &b))
        } else {
            PowerSeries::zero(o)
        };
        den.coeffs_mut()[0] = Poly::one();
        den.coeffs_mut()[1] -= &gamma(k);
        f = den.reciprocal().expect("constant term is one");
    }
    f
}

fn expand_j_literal<C: Scalar>(
    gamma: &dyn Fn(usize) -> Poly<C>,
    beta: &dyn Fn(usize) -> Poly<C>,
    order: usize,
    depth: usize,
) -> PowerSeries<C> {
    let mut f = PowerSeries::one(order);
    for k in (0..depth).rev() {
        let tail = f.shift(2).truncate(order).expect("shift raises order");
        let level = PowerSeries::t(order).scale(&gamma(k)).expect("t-free");
        let den = PowerSeries::one(order)
            .sub(&level)
            .and_then(|s| s.sub(&tail.scale(&beta(k + 1))?))
            .expect("orders agree");
        f = den.reciprocal().expect("constant term is one");
    }
    f
}

/// Checks `sum_n alpha_1...alpha_n t^n` against the T-fraction with
/// `delta_1 = 0`, `delta_i = -alpha_{i-1}`.
pub fn euler_identity_check<C: Scalar>(
    alpha: impl Fn(usize) -> Poly<C> + Send + Sync + Clone + 'static,
    order: usize,
) -> bool {
    let a = alpha.clone();
    let cf = ContinuedFraction::t(
        alpha.clone(),
        move |i| {
            if i == 1 {
                Poly::zero()
            } else {
                -a(i - 1)
            }
        },
    );
    let mut prod = Poly::one();
    let mut coeffs = vec![prod.clone()];
    for n in 1..=order {
        prod = &prod * &alpha(n);
        coeffs.push(prod.clone());
    }
    cf.expand(order) == PowerSeries::new(order, coeffs).expect("alpha is t-free")
}

/// Named coefficient families.
pub mod families {
    use super::ContinuedFraction;
    use crate::matchings::star;
    use crate::{Polynomial, Rational};
    use num_traits::FromPrimitive;

    fn int(i: usize) -> Polynomial {
        Polynomial::constant(Rational::from_usize(i).expect("small"))
    }

    fn v(name: &str) -> Polynomial {
        Polynomial::sym(name)
    }

    /// `alpha_i = i x`, `delta_i = i - 1`: the Ward polynomials.
    pub fn ward() -> ContinuedFraction {
        ContinuedFraction::t(|i| &int(i) * &v("x"), |i| int(i - 1))
    }

    /// `alpha_i = i`, `delta_i = (i - 1) x`: the reversed Ward polynomials.
    pub fn ward_reversed() -> ContinuedFraction {
        ContinuedFraction::t(int, |i| &int(i - 1) * &v("x"))
    }

    /// `alpha_i = x + (i-1) u`, `delta_i = z + (i-1) w`.
    pub fn generalized_ward() -> ContinuedFraction {
        ContinuedFraction::t(
            |i| v("x") + &int(i - 1) * &v("u"),
            |i| v("z") + &int(i - 1) * &v("w"),
        )
    }

    /// `alpha_i = i`: odd semifactorials `(2n-1)!!`.
    pub fn semifactorial() -> ContinuedFraction {
        ContinuedFraction::s(int)
    }

    /// `alpha_i = i`, `delta_i = (i-1)(x-1)`: reversed second-order Eulerian polynomials.
    pub fn eulerian2_reversed() -> ContinuedFraction {
        ContinuedFraction::t(int, |i| &int(i - 1) * &(v("x") - int(1)))
    }

    /// Fully symbolic master T-fraction:
    /// `alpha_n = a[n-1] b*[n-1]`, `delta_n = f*[n-2] + g*[n-1]`.
    pub fn master_t() -> ContinuedFraction {
        ContinuedFraction::t(
            |n| {
                let m = n as i64 - 1;
                &Polynomial::var(crate::VarId::indexed("a", &[m as u32])) * &star("b", m)
            },
            |n| star("f", n as i64 - 2) + star("g", n as i64 - 1),
        )
    }
}
