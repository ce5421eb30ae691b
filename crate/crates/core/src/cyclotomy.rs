//! Cyclotomic classes, Gaussian periods and the period polynomial.
//!
//! Periods are computed from first principles: one pass over `F_r^*` tallies
//! how many elements of each class have each absolute trace, and
//! `η_i = Σ_j counts[i][j] ω^j` with `ω = e^{2πi/p}`.

use std::f64::consts::TAU;

use crate::arith::{is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::gf::{Element, FieldTable};
use crate::par::Exec;
use crate::poly;

/// Index of the class `C_i = α^i ⟨α^N⟩` containing `x`.
pub fn class_of(field: &FieldTable, x: Element, index: u64) -> Result<usize> {
    check_index(field, index)?;
    let e = x.log().ok_or(Error::ZeroElement)?;
    Ok((e as u64 % index) as usize)
}

fn check_index(field: &FieldTable, index: u64) -> Result<()> {
    if index < 2 {
        return Err(Error::IndexTooSmall(index));
    }
    if !(field.group_order() as u64).is_multiple_of(index) {
        return Err(Error::IndexDoesNotDivide { index, group_order: field.group_order() as u128 });
    }
    Ok(())
}

/// `counts[i][j] = #{x ∈ C_i : Tr_{r/p}(x) = j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCountMatrix {
    pub p: u32,
    pub order: u64,
    pub counts: Vec<Vec<u64>>,
}

impl TraceCountMatrix {
    pub fn index(&self) -> usize {
        self.counts.len()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.counts.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.p as usize).map(|j| self.counts.iter().map(|row| row[j]).sum()).collect()
    }

    /// Row sums equal `(r-1)/N`; column `j` totals `r/p - [j = 0]`.
    pub fn check_invariants(&self) -> bool {
        let n = self.index() as u64;
        let rows_ok = self.row_sums().iter().all(|&s| s * n == self.order - 1);
        let per_value = self.order / self.p as u64;
        let cols_ok = self.column_sums().iter().enumerate().all(|(j, &c)| c == per_value - (j == 0) as u64);
        rows_ok && cols_ok
    }
}

pub fn trace_count_matrix(field: &FieldTable, index: u64, exec: Exec) -> Result<TraceCountMatrix> {
    check_index(field, index)?;
    let p = field.p();
    let prime = field.subfield(p as u64)?;
    let trace = field.trace_map(&prime);
    let n = index as usize;
    let width = p as usize;
    let flat = exec.map_reduce(
        0..field.group_order() as u64,
        |range| {
            let mut local = vec![0u64; n * width];
            for e in range {
                let t = trace.apply(field.exp_packed(e as u32)) as usize;
                local[(e % index) as usize * width + t] += 1;
            }
            local
        },
        |mut a, b| {
            if a.is_empty() {
                return b;
            }
            for (x, y) in a.iter_mut().zip(&b) {
                *x += y;
            }
            a
        },
    );
    let flat = if flat.is_empty() { vec![0; n * width] } else { flat };
    Ok(TraceCountMatrix { p, order: field.order() as u64, counts: flat.chunks(width).map(<[u64]>::to_vec).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Period {
    Exact(i64),
    Numeric { re: f64, im: f64 },
}

impl Period {
    pub fn re(self) -> f64 {
        match self {
            Period::Exact(v) => v as f64,
            Period::Numeric { re, .. } => re,
        }
    }

    pub fn im(self) -> f64 {
        match self {
            Period::Exact(_) => 0.0,
            Period::Numeric { im, .. } => im,
        }
    }

    pub fn exact(self) -> Option<i64> {
        match self {
            Period::Exact(v) => Some(v),
            Period::Numeric { .. } => None,
        }
    }
}

/// `η_0, .., η_{N-1}`, indexed by class relative to the field's `α`.
#[derive(Clone, Debug)]
pub struct GaussianPeriodSet {
    pub values: Vec<Period>,
    pub matrix: TraceCountMatrix,
    /// The exponent `t` of `ω^t` used for evaluation (1 for the canonical character).
    pub root_power: u32,
}

impl GaussianPeriodSet {
    pub fn all_exact(&self) -> bool {
        self.values.iter().all(|v| v.exact().is_some())
    }

    pub fn exact_values(&self) -> Option<Vec<i64>> {
        self.values.iter().map(|v| v.exact()).collect()
    }

    /// `Σ η_i` as a complex number.
    pub fn sum(&self) -> (f64, f64) {
        self.values.iter().fold((0.0, 0.0), |(a, b), v| (a + v.re(), b + v.im()))
    }

    /// `Σ η_i = -1`, exactly or within `10^-6 √r`.
    pub fn sum_identity_holds(&self) -> bool {
        if let Some(v) = self.exact_values() {
            return v.iter().sum::<i64>() == -1;
        }
        let (re, im) = self.sum();
        let tol = 1e-6 * (self.matrix.order as f64).sqrt();
        (re + 1.0).abs() <= tol && im.abs() <= tol
    }
}

pub fn gaussian_periods(matrix: &TraceCountMatrix) -> GaussianPeriodSet {
    gaussian_periods_with_root(matrix, 1)
}

/// Periods with respect to `ω^t` instead of `ω`; `t` must be prime to `p`.
pub fn gaussian_periods_with_root(matrix: &TraceCountMatrix, t: u32) -> GaussianPeriodSet {
    let p = matrix.p as usize;
    assert!(!(t as usize).is_multiple_of(p), "root power must be prime to p");
    let values = matrix
        .counts
        .iter()
        .map(|row| {
            if row[1..].windows(2).all(|w| w[0] == w[1]) {
                Period::Exact(row[0] as i64 - row[1] as i64)
            } else {
                let (mut re, mut im) = (0.0, 0.0);
                for (j, &c) in row.iter().enumerate() {
                    let angle = TAU * ((j * t as usize) % p) as f64 / p as f64;
                    re += c as f64 * angle.cos();
                    im += c as f64 * angle.sin();
                }
                Period::Numeric { re, im }
            }
        })
        .collect();
    GaussianPeriodSet { values, matrix: matrix.clone(), root_power: t }
}

/// `ψ(X) = Π (X - η_i)`, highest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodPolynomial {
    pub coeffs: Vec<i128>,
    /// True when every period was an exact integer.
    pub exact: bool,
}

pub fn period_polynomial(periods: &GaussianPeriodSet) -> Result<PeriodPolynomial> {
    if let Some(v) = periods.exact_values() {
        let roots: Vec<i128> = v.into_iter().map(i128::from).collect();
        return Ok(PeriodPolynomial { coeffs: poly::from_roots(&roots)?, exact: true });
    }
    let exact = modular_coefficients(&periods.matrix)?;
    let numeric = complex_coefficients(&periods.values);
    let n = periods.values.len();
    let bound = period_bound(n, periods.matrix.order);
    // each period is a sum of at most (r-1)/N unit-modulus terms
    let slack = 4.0 * f64::EPSILON * (periods.matrix.order - 1) as f64 / n as f64;
    for (k, (&z, &(re, im))) in exact.iter().zip(&numeric).enumerate() {
        let spread = (bound + slack).powi(k as i32) - bound.powi(k as i32);
        let tol = 1e-3 + binomial(n, k) * (spread + 64.0 * f64::EPSILON * bound.powi(k as i32));
        let distance = (re - z as f64).abs().max(im.abs());
        if distance.is_nan() || distance > tol {
            return Err(Error::PeriodRounding { index: k, distance });
        }
    }
    Ok(PeriodPolynomial { coeffs: exact, exact: false })
}

/// `|η_i| ≤ (1 + (N-1)√r) / N`.
fn period_bound(n: usize, order: u64) -> f64 {
    (1.0 + (n as f64 - 1.0) * (order as f64).sqrt()) / n as f64
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn complex_coefficients(values: &[Period]) -> Vec<(f64, f64)> {
    let mut c = vec![(1.0, 0.0)];
    for v in values {
        let (a, b) = (v.re(), v.im());
        let mut next = c.clone();
        next.push((0.0, 0.0));
        for (i, &(x, y)) in c.iter().enumerate() {
            next[i + 1].0 -= x * a - y * b;
            next[i + 1].1 -= x * b + y * a;
        }
        c = next;
    }
    c
}

/// The coefficients of `ψ` recovered exactly: the periods are evaluated in
/// `Z/ℓZ` for primes `ℓ ≡ 1 (mod p)` where `ω` becomes an element of order
/// `p`, the product is expanded modulo each `ℓ`, and the results are glued by
/// the Chinese remainder theorem into the symmetric range.
fn modular_coefficients(matrix: &TraceCountMatrix) -> Result<Vec<i128>> {
    let p = matrix.p as u64;
    let n = matrix.index();
    let primes = primes_one_mod(p, 2);
    let (l1, l2) = (primes[0], primes[1]);
    let modulus = l1 as u128 * l2 as u128;
    let bound = period_bound(n, matrix.order);
    if (0..=n).any(|k| binomial(n, k) * bound.powi(k as i32) >= modulus as f64 / 4.0) {
        return Err(Error::Overflow);
    }
    let residues: Vec<Vec<u64>> = [l1, l2].iter().map(|&l| coefficients_mod(matrix, l)).collect();
    let inv = pow_mod(l1 % l2, l2 - 2, l2);
    Ok((0..=n)
        .map(|k| {
            let (a1, a2) = (residues[0][k], residues[1][k]);
            let t = mul_mod((a2 + l2 - a1 % l2) % l2, inv, l2);
            let x = a1 as u128 + l1 as u128 * t as u128;
            if x > modulus / 2 {
                -((modulus - x) as i128)
            } else {
                x as i128
            }
        })
        .collect())
}

fn coefficients_mod(matrix: &TraceCountMatrix, l: u64) -> Vec<u64> {
    let p = matrix.p as u64;
    let omega = (2..l).map(|g| pow_mod(g, (l - 1) / p, l)).find(|&w| w != 1).expect("Z/l has elements of order p");
    let periods: Vec<u64> = matrix
        .counts
        .iter()
        .map(|row| {
            let mut acc = 0u64;
            let mut w = 1u64;
            for &c in row {
                acc = (acc + mul_mod(c % l, w, l)) % l;
                w = mul_mod(w, omega, l);
            }
            acc
        })
        .collect();
    let mut c = vec![1u64];
    for &eta in &periods {
        let mut next = c.clone();
        next.push(0);
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] = (next[i + 1] + l - mul_mod(ci, eta, l)) % l;
        }
        c = next;
    }
    c
}

/// The `count` largest primes below `2^62` that are `≡ 1 (mod p)`.
fn primes_one_mod(p: u64, count: usize) -> Vec<u64> {
    let top = ((1u64 << 62) - 2) / p;
    (1..=top).rev().map(|k| k * p + 1).filter(|&l| is_prime(l)).take(count).collect()
}
