//! Integer polynomial helpers. Coefficient vectors are stored highest degree
//! first unless a function says otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Monic `Π (X - root)` with overflow checking.
pub fn from_roots(roots: &[i128]) -> Result<Vec<i128>> {
    let mut c = vec![1i128];
    for &root in roots {
        let mut next = c.clone();
        next.push(0);
        for (i, &ci) in c.iter().enumerate() {
            let t = ci.checked_mul(root).ok_or(Error::Overflow)?;
            next[i + 1] = next[i + 1].checked_sub(t).ok_or(Error::Overflow)?;
        }
        c = next;
    }
    Ok(c)
}

/// Horner evaluation, `None` on overflow.
pub fn eval(coeffs: &[i128], x: i128) -> Option<i128> {
    coeffs.iter().try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c))
}

/// Dense polynomial over the integers, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigPoly(pub Vec<BigInt>);

impl BigPoly {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        BigPoly(vec![c.into()])
    }

    /// `Y + c`
    pub fn linear(c: impl Into<BigInt>) -> Self {
        BigPoly(vec![c.into(), BigInt::one()])
    }

    /// From coefficients listed highest degree first.
    pub fn from_desc<T: Into<BigInt> + Clone>(desc: &[T]) -> Self {
        let mut v: Vec<BigInt> = desc.iter().cloned().map(Into::into).collect();
        v.reverse();
        BigPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &BigPoly) -> BigPoly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigPoly(out).trimmed()
    }

    pub fn pow(&self, k: u32) -> BigPoly {
        (0..k).fold(BigPoly::constant(1), |acc, _| acc.mul(self))
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a BigPoly>) -> BigPoly {
        factors.into_iter().fold(BigPoly::constant(1), |acc, f| acc.mul(f))
    }

    /// `P(a·X + b)`.
    pub fn compose_affine(&self, a: &BigInt, b: &BigInt) -> BigPoly {
        let inner = BigPoly(vec![b.clone(), a.clone()]);
        let mut out = BigPoly::constant(0);
        for c in self.0.iter().rev() {
            out = out.mul(&inner);
            out.0[0] += c;
        }
        out.trimmed()
    }

    /// Divides every coefficient by `d`, failing unless all are multiples.
    pub fn exact_div(&self, d: &BigInt) -> Result<BigPoly> {
        self.0
            .iter()
            .map(|c| {
                let (q, rem) = c.div_rem(d);
                if rem.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::NonIntegral { num: to_i128_lossy(c), den: to_i128_lossy(d) })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(BigPoly)
    }

    /// Highest degree first, as `i128`.
    pub fn to_desc_i128(&self) -> Result<Vec<i128>> {
        self.0.iter().rev().map(|c| c.to_i128().ok_or(Error::Overflow)).collect()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

fn to_i128_lossy(x: &BigInt) -> i128 {
    x.to_i128().unwrap_or(if x.is_negative() { i128::MIN } else { i128::MAX })
}

/// Rational roots of an integer polynomial (highest degree first) via the
/// rational root theorem. Only numerators and denominators that divide the
/// constant and leading terms are tried, so this is cheap for the small
/// degrees used here whenever the constant term factors quickly.
pub fn has_rational_root(desc: &[i128]) -> bool {
    let p = BigPoly::from_desc(desc);
    if p.0[0].is_zero() {
        return true;
    }
    let lead = p.0.last().expect("nonempty").abs();
    let constant = p.0[0].abs();
    let (Some(lead), Some(constant)) = (lead.to_u128(), constant.to_u128()) else {
        return false;
    };
    let dens = small_divisors(lead);
    let nums = small_divisors(constant);
    let (Some(dens), Some(nums)) = (dens, nums) else {
        return false;
    };
    for &a in &nums {
        for &b in &dens {
            for sign in [1i64, -1] {
                // evaluate b^deg · P(±a/b) exactly
                let deg = p.degree() as u32;
                let (a, b) = (BigInt::from(a) * sign, BigInt::from(b));
                let mut acc = BigInt::zero();
                for (k, c) in p.0.iter().enumerate() {
                    acc += c * a.pow(k as u32) * b.pow(deg - k as u32);
                }
                if acc.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// All divisors of `n` when `n` factors by trial division up to 10^7.
fn small_divisors(n: u128) -> Option<Vec<u128>> {
    let mut factors = Vec::new();
    let mut rest = n;
    let mut f = 2u128;
    while f * f <= rest {
        if f > 10_000_000 {
            return None;
        }
        let mut e = 0;
        while rest.is_multiple_of(f) {
            rest /= f;
            e += 1;
        }
        if e > 0 {
            factors.push((f, e));
        }
        f += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    let mut divs = vec![1u128];
    for (f, e) in factors {
        let mut next = Vec::new();
        for &d in &divs {
            let mut pw = 1u128;
            for _ in 0..=e {
                next.push(d * pw);
                pw *= f;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Some(divs)
}
