//! Dense complex polynomials: arithmetic, simultaneous root finding,
//! Cardano's formula, palindromic folding and reduction modulo a cubic.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{serde_complex, Complex64, Error, Result};

/// Coefficients stored lowest degree first. Trailing zeros are trimmed, so
/// the leading coefficient is nonzero except for the zero polynomial `[0]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComplexPolynomial {
    #[serde(
        serialize_with = "serde_complex::serialize_complex_slice",
        deserialize_with = "serde_complex::deserialize_complex_vec"
    )]
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Coefficients given highest degree first, as polynomials are usually printed.
    pub fn from_real_descending(coeffs: &[f64]) -> Self {
        Self::from_real(&coeffs.iter().rev().copied().collect::<Vec<_>>())
    }

    pub fn zero() -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0)])
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: Complex64) -> Self {
        Self::new(vec![-root, Complex64::new(1.0, 0.0)])
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && *self.coeffs.last().unwrap() == Complex64::new(0.0, 0.0) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Complex64::new(0.0, 0.0));
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        self.scale(self.leading().inv())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Complex64::new(1.0, 0.0)), |acc, _| {
            &acc * self
        })
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Relative backward error of `z` as a root: `|p(z)| / sum |c_i| |z|^i`.
    pub fn backward_error(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let scale = self
            .coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm());
        if scale == 0.0 {
            0.0
        } else {
            self.eval(z).norm() / scale
        }
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        let dd = divisor.degree();
        if self.degree() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Complex64::new(0.0, 0.0); self.degree() - dd + 1];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd] / lead;
            quot[i] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= q * d;
            }
            rem[i + dd] = Complex64::new(0.0, 0.0);
        }
        rem.truncate(dd.max(1));
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Whether `c_i = c_{2n-i}` within `tol` (relative to the largest coefficient).
    pub fn is_palindromic(&self, tol: f64) -> bool {
        let d = self.degree();
        let scale = self.max_norm().max(f64::MIN_POSITIVE);
        (0..=d).all(|i| (self.coeffs[i] - self.coeffs[d - i]).norm() <= tol * scale)
    }
}

impl fmt::Display for ComplexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == Complex64::new(0.0, 0.0) && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn add(self, rhs: Self) -> ComplexPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn sub(self, rhs: Self) -> ComplexPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn mul(self, rhs: Self) -> ComplexPolynomial {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPolynomial::new(out)
    }
}

impl Neg for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn neg(self) -> ComplexPolynomial {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// A root together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Root {
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Relative clustering radius for multiple roots.
pub const CLUSTER_RADIUS: f64 = 1e-8;
/// Default backward-error tolerance for [`roots`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

const ABERTH_MAX_ITER: usize = 500;

/// All roots of `p` (Aberth-Ehrlich iteration, clustering of multiple roots,
/// Newton polishing). Fails when a polished root's backward error exceeds `tol`.
pub fn roots(p: &ComplexPolynomial, tol: f64) -> Result<Vec<Root>> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::domain("a constant polynomial has no roots to find"));
    }
    let p = p.monic();
    let raw = aberth(&p);
    let mut found = cluster(&raw, &p);
    for root in &mut found {
        root.value = polish(&p, root.value, root.multiplicity);
    }
    for root in &found {
        let err = p.backward_error(root.value);
        if err > tol {
            return Err(Error::Convergence {
                iterations: ABERTH_MAX_ITER,
                residual: err,
                reason: format!("root {} failed the backward-error check", root.value),
            });
        }
    }
    found.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(found)
}

/// [`roots`] flattened into a multiset.
pub fn root_multiset(p: &ComplexPolynomial, tol: f64) -> Result<Vec<Complex64>> {
    Ok(roots(p, tol)?
        .into_iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect())
}

fn aberth(p: &ComplexPolynomial) -> Vec<Complex64> {
    let n = p.degree();
    let dp = p.derivative();
    let coeffs = p.coeffs();
    // Cauchy bound on the root moduli, and a centre at the root mean.
    let bound = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let centre = -coeffs[n - 1] / n as f64;
    let radius = {
        let g = coeffs[0].norm().powf(1.0 / n as f64);
        if g > 0.0 {
            g.min(bound)
        } else {
            0.5 * bound
        }
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| centre + Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..ABERTH_MAX_ITER {
        let mut largest = 0.0f64;
        for i in 0..n {
            let pv = p.eval(z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dp.eval(z[i]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                largest = largest.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if largest < 1e-16 {
            break;
        }
    }
    z
}

fn cluster(raw: &[Complex64], p: &ComplexPolynomial) -> Vec<Root> {
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    'next: for &z in raw {
        for g in &mut groups {
            let centre: Complex64 = g.iter().sum::<Complex64>() / g.len() as f64;
            // Approximations of an m-fold root scatter like eps^(1/m); accept a
            // member when it is within the clustering radius or when the group
            // mean is a markedly better root than either member.
            let radius = CLUSTER_RADIUS * centre.norm().max(1.0);
            let close = (z - centre).norm() <= radius;
            let near = (z - centre).norm() <= 1e-4 * centre.norm().max(1.0);
            if close || (near && merged_is_multiple(p, &g[..], z)) {
                g.push(z);
                continue 'next;
            }
        }
        groups.push(vec![z]);
    }
    groups
        .into_iter()
        .map(|g| Root {
            value: g.iter().sum::<Complex64>() / g.len() as f64,
            multiplicity: g.len(),
        })
        .collect()
}

/// A merged cluster of size `m` is a genuine multiple root when the first
/// `m - 1` derivatives nearly vanish at its mean.
fn merged_is_multiple(p: &ComplexPolynomial, group: &[Complex64], z: Complex64) -> bool {
    let m = group.len() + 1;
    let mean = (group.iter().sum::<Complex64>() + z) / m as f64;
    let mut d = p.clone();
    for _ in 0..m - 1 {
        d = d.derivative();
        if d.backward_error(mean) > 1e-6 {
            return false;
        }
    }
    true
}

/// Newton on the `(m-1)`-th derivative, where an `m`-fold root is simple.
fn polish(p: &ComplexPolynomial, z0: Complex64, multiplicity: usize) -> Complex64 {
    let mut q = p.clone();
    for _ in 1..multiplicity {
        q = q.derivative();
    }
    let dq = q.derivative();
    let mut z = z0;
    let mut err = q.backward_error(z);
    for _ in 0..8 {
        let step = q.eval(z) / dq.eval(z);
        if !step.is_finite() {
            break;
        }
        let candidate = z - step;
        let cand_err = q.backward_error(candidate);
        if cand_err >= err {
            break;
        }
        z = candidate;
        err = cand_err;
    }
    z
}

/// Monic polynomial with the given roots.
pub fn from_roots(roots: &[Complex64]) -> ComplexPolynomial {
    roots.iter().fold(
        ComplexPolynomial::constant(Complex64::new(1.0, 0.0)),
        |acc, &r| &acc * &ComplexPolynomial::linear(r),
    )
}

/// Roots of `x^3 + c2 x^2 + c1 x + c0` in Cardano form
/// `x_k = -c2/3 + e^k Y1 + e^{2k} Y2`, `e = exp(2 pi i / 3)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CubicRoots {
    #[serde(serialize_with = "serde_complex::serialize_complex_slice")]
    pub roots: [Complex64; 3],
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub y1: Complex64,
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub y2: Complex64,
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub epsilon: Complex64,
    /// `(Q/2)^2 + (P/3)^3` of the depressed cubic; nonnegative means one real
    /// root and real radicals `Y1`, `Y2`.
    pub discriminant: f64,
}

impl CubicRoots {
    pub fn has_real_radicals(&self) -> bool {
        self.discriminant >= 0.0
    }
}

/// Primitive cube root of unity `exp(2 pi i / 3) = -1/2 + i sqrt(3)/2`.
pub fn cube_root_of_unity() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

pub fn cardano_cubic(c0: f64, c1: f64, c2: f64) -> CubicRoots {
    let shift = -c2 / 3.0;
    // Depressed cubic y^3 + P y + Q with x = y - c2/3.
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2.powi(3) / 27.0 - c2 * c1 / 3.0 + c0;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let (y1, y2) = if disc >= 0.0 {
        let s = disc.sqrt();
        (
            Complex64::new((-q / 2.0 + s).cbrt(), 0.0),
            Complex64::new((-q / 2.0 - s).cbrt(), 0.0),
        )
    } else {
        // Three real roots: conjugate radicals with Y1 Y2 = -P/3.
        let w = Complex64::new(-q / 2.0, (-disc).sqrt());
        let y1 = w.powf(1.0 / 3.0);
        (y1, y1.conj())
    };
    let eps = cube_root_of_unity();
    let eps2 = eps * eps;
    let roots = [
        shift + y1 + y2,
        shift + eps * y1 + eps2 * y2,
        shift + eps2 * y1 + eps * y2,
    ];
    CubicRoots {
        roots,
        y1,
        y2,
        epsilon: eps,
        discriminant: disc,
    }
}

/// Fold a self-reciprocal polynomial of degree `2n` into `q` of degree `n`
/// with `p(t) = t^n q(t + 1/t)`.
pub fn palindromic_fold(p: &ComplexPolynomial) -> Result<ComplexPolynomial> {
    let d = p.degree();
    if d % 2 != 0 {
        return Err(Error::domain(format!(
            "palindromic fold needs even degree, got {d}"
        )));
    }
    if !p.is_palindromic(1e-12) {
        return Err(Error::domain("polynomial is not self-reciprocal"));
    }
    let n = d / 2;
    let x = ComplexPolynomial::linear(Complex64::new(0.0, 0.0));
    let two = ComplexPolynomial::constant(Complex64::new(2.0, 0.0));
    // s_m(x) = t^m + t^-m: s_0 = 2, s_1 = x, s_{m+1} = x s_m - s_{m-1}.
    let mut prev = two;
    let mut cur = x.clone();
    let mut q = ComplexPolynomial::constant(p.coeff(n));
    for m in 1..=n {
        q = &q + &cur.scale(p.coeff(n + m));
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(q)
}

/// The two roots of `t^2 - x t + 1`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LiftedPair {
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub x: Complex64,
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub t1: Complex64,
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub t2: Complex64,
    /// `x = +-2`: a double root.
    pub degenerate: bool,
}

impl LiftedPair {
    pub fn fiber_polynomial(&self) -> ComplexPolynomial {
        ComplexPolynomial::new(vec![
            Complex64::new(1.0, 0.0),
            -self.x,
            Complex64::new(1.0, 0.0),
        ])
    }

    pub fn members(&self) -> [Complex64; 2] {
        [self.t1, self.t2]
    }
}

/// `t_{1,2} = x/2 +- (i/2) sqrt(4 - x^2)`.
pub fn lift_root(x: Complex64) -> LiftedPair {
    let four = Complex64::new(4.0, 0.0);
    let s = (four - x * x).sqrt();
    let half = Complex64::new(0.0, 0.5) * s;
    LiftedPair {
        x,
        t1: x / 2.0 + half,
        t2: x / 2.0 - half,
        degenerate: s.norm() <= 1e-12 * four.norm(),
    }
}

/// Remainder of `p` modulo a monic cubic `u`.
pub fn reduce_mod_cubic(p: &ComplexPolynomial, u: &ComplexPolynomial) -> Result<ComplexPolynomial> {
    if u.degree() != 3 {
        return Err(Error::domain(format!(
            "modulus has degree {}, expected 3",
            u.degree()
        )));
    }
    if (u.leading() - 1.0).norm() > 1e-14 {
        return Err(Error::domain("modulus is not monic"));
    }
    Ok(p.div_rem(u)?.1)
}
