//! Ward numbers and polynomials, the four-variable generalization, its
//! recurrences and differential equations, and series inversion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::contfrac::families;
use crate::error::{Error, Result};
use crate::poly::VarId;
use crate::{Polynomial, Rational, Series};

fn int(i: i64) -> Polynomial {
    Polynomial::int(i)
}

fn sym(name: &str) -> Polynomial {
    Polynomial::sym(name)
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer(i.into())
    })
}

/// Ward numbers `W(n, k)`, `0 <= k <= n <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WardTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl WardTriangle {
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `W(n, k)`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Triangle from `W(n,k) = (n+k-1) W(n-1,k-1) + k W(n-1,k)`.
pub fn ward_triangle(rows: usize) -> WardTriangle {
    let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=rows {
        let prev = &t[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let row = (0..=n)
            .map(|k| {
                if k == 0 {
                    BigInt::zero()
                } else {
                    BigInt::from(n + k - 1) * at(k - 1) + BigInt::from(k) * at(k)
                }
            })
            .collect();
        t.push(row);
    }
    WardTriangle { rows: t }
}

fn row_poly(row: &[BigInt], reversed: bool) -> Polynomial {
    let x = VarId::new("x");
    let n = row.len() - 1;
    row.iter()
        .enumerate()
        .map(|(k, c)| {
            let e = if reversed { n - k } else { k };
            Polynomial::term(
                Rational::from_integer(c.clone()),
                crate::Monomial::power(x, e as u32),
            )
        })
        .sum()
}

/// `W_n(x) = sum_k W(n,k) x^k`.
pub fn ward_poly(n: usize) -> Polynomial {
    row_poly(&ward_triangle(n).rows[n], false)
}

/// `x^n W_n(1/x)`.
pub fn ward_reversed(n: usize) -> Polynomial {
    row_poly(&ward_triangle(n).rows[n], true)
}

/// `W_0, ..., W_N` of the T-fraction `alpha_i = x + (i-1) u`, `delta_i = z + (i-1) w`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedWardSequence {
    polys: Vec<Polynomial>,
}

impl GeneralizedWardSequence {
    pub fn order(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }

    /// Substitutes into every term.
    pub fn specialize(&self, bindings: &[(&str, Polynomial)]) -> Vec<Polynomial> {
        let map: BTreeMap<VarId, Polynomial> = bindings
            .iter()
            .map(|(v, p)| (VarId::new(v), p.clone()))
            .collect();
        self.polys.iter().map(|p| p.substitute(&map)).collect()
    }
}

pub fn generalized_ward_cf(order: usize) -> GeneralizedWardSequence {
    GeneralizedWardSequence {
        polys: families::generalized_ward().expand(order).into_coeffs(),
    }
}

fn convolution(seq: &[Polynomial], n: usize) -> Polynomial {
    (0..n).map(|j| &seq[j] * &seq[n - 1 - j]).sum()
}

/// Unrolls the nonlinear differential recurrence
/// `W_n = (z+nu) W_{n-1} + (u+w)(u d_u + x d_x) W_{n-1} + (x-u) sum_j W_j W_{n-1-j}`.
pub fn generalized_ward_recurrence(order: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    for n in 1..=order {
        let next = nonlinear_step(&out, n);
        out.push(next);
    }
    out
}

fn nonlinear_step(seq: &[Polynomial], n: usize) -> Polynomial {
    let [x, u, z, w] = ["x", "u", "z", "w"].map(sym);
    let (vx, vu) = (VarId::new("x"), VarId::new("u"));
    let prev = &seq[n - 1];
    let euler = &u * &prev.derivative(&vu) + &x * &prev.derivative(&vx);
    &(z + &int(n as i64) * &u) * prev + &(&u + &w) * &euler + &(&x - &u) * &convolution(seq, n)
}

/// Checks the nonlinear recurrence for the CF-generated `W_n(x,u,z,w)`, `n <= order`.
pub fn check_nonlinear_recurrence(order: usize) -> bool {
    let seq = generalized_ward_cf(order);
    seq.polys[0].is_one() && (1..=order).all(|n| nonlinear_step(&seq.polys, n) == seq.polys[n])
}

/// `P_n = W_n(x,x,z,w)`: the linear recurrence in `P_n` and in its coefficients `W_{n,k}(z,w)`.
pub fn check_linear_recurrence_u_eq_x(order: usize) -> bool {
    let seq = generalized_ward_cf(order).specialize(&[("u", sym("x"))]);
    let (x, z, w) = (sym("x"), sym("z"), sym("w"));
    let vx = VarId::new("x");
    if !seq[0].is_one() {
        return false;
    }
    let linear = (1..=order).all(|n| {
        let prev = &seq[n - 1];
        let rhs =
            &(&z + &(&int(n as i64) * &x)) * prev + &(&x * &(&x + &w)) * &prev.derivative(&vx);
        rhs == seq[n]
    });
    let coeff = |n: usize, k: usize| -> Polynomial {
        seq[n]
            .coefficients_in(&vx)
            .get(k)
            .cloned()
            .unwrap_or_default()
    };
    let triangle = (1..=order).all(|n| {
        (0..=n).all(|k| {
            let mut rhs = &(&z + &(&int(k as i64) * &w)) * &coeff(n - 1, k);
            if k > 0 {
                rhs += &(&int((n + k - 1) as i64) * &coeff(n - 1, k - 1));
            }
            rhs == coeff(n, k)
        })
    });
    linear && triangle
}

/// `Q_n = W_n(x,u,z,-u)` satisfies `Q_n = (z+nu) Q_{n-1} + (x-u) sum_j Q_j Q_{n-1-j}`.
pub fn check_recurrence_w_eq_neg_u(order: usize) -> bool {
    let seq = generalized_ward_cf(order).specialize(&[("w", -sym("u"))]);
    let (x, u, z) = (sym("x"), sym("u"), sym("z"));
    seq[0].is_one()
        && (1..=order).all(|n| {
            let rhs =
                &(&z + &(&int(n as i64) * &u)) * &seq[n - 1] + &(&x - &u) * &convolution(&seq, n);
            rhs == seq[n]
        })
}

/// `H = sum_n W_n(x,0,z,w) t^n` satisfies `H = 1 + z t H + w x t H_x + x t H^2` to `order`.
pub fn check_riccati_u_eq_0(order: usize) -> bool {
    let coeffs = generalized_ward_cf(order).specialize(&[("u", Polynomial::zero())]);
    let h = Series::new(order, coeffs).expect("t-free");
    let vx = VarId::new("x");
    let (x, z, w) = (sym("x"), sym("z"), sym("w"));
    let check = || -> Result<bool> {
        let t = Series::t(order);
        let h_x = h.map(|c| c.derivative(&vx));
        let th = t.mul(&h)?;
        let rhs = Series::one(order)
            .add(&th.scale(&z)?)?
            .add(&t.mul(&h_x)?.scale(&(&w * &x))?)?
            .add(&th.mul(&h)?.scale(&x)?)?;
        Ok(rhs == h)
    };
    check().unwrap_or(false)
}

/// Solves `W_n(x_1..x_n) = a_n` for `x_1..x_order` by inverting
/// `A(t) = sum_n a_n t^{n+1}/(n+1)!`: `x_k = -(k+1)! [t^{k+1}] A^{-1}`.
pub fn invert_sequence(a: &[Polynomial], order: usize) -> Result<Vec<Polynomial>> {
    if a.first().is_none_or(|a0| !a0.is_one()) {
        return Err(Error::Precondition("a_0 must be 1".into()));
    }
    if a.len() < order + 1 {
        return Err(Error::Precondition(format!(
            "need a_0..a_{order}, got {} terms",
            a.len()
        )));
    }
    let mut coeffs = vec![Polynomial::zero()];
    for (n, an) in a.iter().take(order + 1).enumerate() {
        coeffs.push(an.scale(&factorial(n + 1).recip()));
    }
    let f = Series::new(order + 1, coeffs)?.compositional_inverse()?;
    Ok((1..=order)
        .map(|k| f.coeffs()[k + 1].scale(&-factorial(k + 1)))
        .collect())
}

/// Multivariate Ward polynomials `W_0..W_order` in `x[1], x[2], ...`, read off
/// the compositional inverse of `t - sum_{n>=2} x[n-1] t^n/n!`.
pub fn multivariate_ward_series(order: usize) -> Vec<Polynomial> {
    let mut coeffs = vec![Polynomial::zero(), Polynomial::one()];
    for n in 2..=order + 1 {
        let x = Polynomial::var(VarId::indexed("x", &[n as u32 - 1]));
        coeffs.push(x.scale(&-factorial(n).recip()));
    }
    let w = Series::new(order + 1, coeffs)
        .and_then(|f| f.compositional_inverse())
        .expect("seed is t + O(t^2)");
    (0..=order)
        .map(|n| w.coeffs()[n + 1].scale(&factorial(n + 1)))
        .collect()
}

/// `invert_sequence` applied to `a_n = W_n(x,u,z,w)`.
pub fn invert_generalized_ward(order: usize) -> Vec<Polynomial> {
    invert_sequence(generalized_ward_cf(order).polys(), order).expect("W_0 = 1")
}

/// For `u = x`: checks
/// `w x_{n-1} = (-1)^n (n-1)! (w+x) z^{n-1} + x prod_{j=1}^{n-1} (w - jz)` for `n <= order + 1`,
/// and that the closed-form inverse series `F` solves
/// `F_t = 1 - xF - z t F_t + x(x+w) F_x` to `order`.
pub fn check_closed_form_u_eq_x(order: usize) -> bool {
    let (x, z, w) = (sym("x"), sym("z"), sym("w"));
    let a = generalized_ward_cf(order).specialize(&[("u", x.clone())]);
    let Ok(xs) = invert_sequence(&a, order) else {
        return false;
    };
    let falling =
        |n: usize| -> Polynomial { (1..n).map(|j| &w - &(&int(j as i64) * &z)).product() };
    let closed = |n: usize| -> Result<Polynomial> {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let lhs = (&(&x + &w) * &z.pow(n as u32 - 1))
            .scale(&(factorial(n - 1) * Rational::from_integer(sign.into())))
            + &x * &falling(n);
        lhs.div_exact(&w)
    };
    for n in 2..=order + 1 {
        match closed(n) {
            Ok(c) if c == xs[n - 2] => {}
            _ => return false,
        }
    }
    // w [t^n] F = (w+x) (-1)^{n+1} z^{n-1}/n - x prod_{j=1}^{n-1} (w - jz)/n!
    let mut coeffs = vec![Polynomial::zero()];
    for n in 1..=order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let scaled = (&(&x + &w) * &z.pow(n as u32 - 1))
            .scale(&Rational::new(sign.into(), n.into()))
            - (&x * &falling(n)).scale(&factorial(n).recip());
        match scaled.div_exact(&w) {
            Ok(c) => coeffs.push(c),
            Err(_) => return false,
        }
    }
    if (2..=order).any(|n| coeffs[n].scale(&-factorial(n)) != xs[n - 2]) {
        return false;
    }
    let vx = VarId::new("x");
    let pde = || -> Result<bool> {
        let f = Series::new(order, coeffs)?;
        let f_t = f.derivative_t();
        let low = order.saturating_sub(1);
        let t = Series::t(low);
        let rhs = Series::one(low)
            .sub(&f.truncate(low)?.scale(&x)?)?
            .sub(&t.mul(&f_t)?.scale(&z)?)?
            .add(
                &f.map(|c| c.derivative(&vx))
                    .truncate(low)?
                    .scale(&(&x * &(&x + &w)))?,
            )?;
        Ok(rhs == f_t)
    };
    pde().unwrap_or(false)
}
