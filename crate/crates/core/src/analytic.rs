//! Closed-form predictions for `C(r, N)` with `N = 5, 6, 7, 8`.
//!
//! [`classify`] maps `(p, s, m, N)` to a theorem branch, the enumerator
//! functions evaluate that branch's weight enumerator exactly, and
//! [`predicted_period_polynomial`] expands the matching factorization of
//! `ψ_(N,r)`. Nothing here enumerates the field; compare against
//! [`crate::codes`] and [`crate::cyclotomy`] to check a prediction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{digit_sum, exact_root, isqrt};
use crate::codes::CodeParams;
use crate::error::{Error, Result};
use crate::poly::{self, BigPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T3_1,
    T3_3,
    T3_5i,
    T3_5ii,
    T3_6i,
    T3_6ii,
    T3_8,
    T3_10i,
    T3_10ii,
    T3_12i,
    T3_12ii,
    T3_15,
    T3_17i,
    T3_17ii,
    T3_18i,
    T3_18ii,
    T3_19,
    T3_22,
    T3_24i,
    T3_24ii,
    T3_25i,
    T3_25ii,
    T3_26,
    T3_28i,
    T3_28ii,
    None,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == TheoremId::None {
            return f.write_str("NONE");
        }
        let dbg = format!("{self:?}");
        f.write_str(&dbg.replacen("T3_", "T3.", 1))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::NotApplicable(format!("unknown theorem id {s}")))
    }
}

pub const ALL_THEOREMS: [TheoremId; 26] = {
    use TheoremId::*;
    [
        T3_1, T3_3, T3_5i, T3_5ii, T3_6i, T3_6ii, T3_8, T3_10i, T3_10ii, T3_12i, T3_12ii, T3_15, T3_17i, T3_17ii,
        T3_18i, T3_18ii, T3_19, T3_22, T3_24i, T3_24ii, T3_25i, T3_25ii, T3_26, T3_28i, T3_28ii, None,
    ]
};

impl TheoremId {
    pub fn is_one_weight(self) -> bool {
        use TheoremId::*;
        matches!(self, T3_1 | T3_3 | T3_8 | T3_15 | T3_22)
    }

    fn priority(self) -> u8 {
        use TheoremId::*;
        match self {
            T3_3 | T3_8 | T3_15 | T3_22 => 0,
            T3_1 => 1,
            T3_5i | T3_5ii | T3_6i | T3_6ii | T3_10i | T3_12i | T3_17i | T3_17ii | T3_18i | T3_18ii | T3_24i
            | T3_25i | T3_28i => 2,
            T3_10ii | T3_12ii | T3_24ii | T3_25ii | T3_26 | T3_28ii => 3,
            T3_19 => 4,
            None => 5,
        }
    }
}

/// The quadratic forms that appear in the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormKind {
    /// `c² + 4d²`
    C2_4D2,
    /// `l² + 2t²`
    L2_2T2,
    /// `w² + 4z²`
    W2_4Z2,
    /// `c² + 7d²`
    C2_7D2,
}

impl FormKind {
    pub fn coefficient(self) -> i128 {
        match self {
            FormKind::C2_4D2 | FormKind::W2_4Z2 => 4,
            FormKind::L2_2T2 => 2,
            FormKind::C2_7D2 => 7,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FormKind::C2_4D2 => "c^2+4d^2",
            FormKind::L2_2T2 => "l^2+2t^2",
            FormKind::W2_4Z2 => "w^2+4z^2",
            FormKind::C2_7D2 => "c^2+7d^2",
        }
    }
}

/// Constraint on the first coordinate of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Normalization {
    /// Both coordinates strictly positive.
    Positive,
    /// `first ≡ residue (mod modulus)`.
    Congruent { residue: i64, modulus: i64 },
    /// `first ≡ ±residue (mod modulus)`.
    PlusMinus { residue: i64, modulus: i64 },
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Normalization::Positive => f.write_str("positive"),
            Normalization::Congruent { residue, modulus } => write!(f, "first = {residue} mod {modulus}"),
            Normalization::PlusMinus { residue, modulus } => write!(f, "first = +-{residue} mod {modulus}"),
        }
    }
}

/// All `(first, second)` with `first² + k·second² = target`, `second ≥ 0`,
/// satisfying the normalization and, when given, `gcd(first, p) = 1`.
pub fn solve_quadratic_form(
    kind: FormKind,
    target: u128,
    norm: Normalization,
    coprime_to: Option<u64>,
) -> Result<Vec<(i128, i128)>> {
    if target == 0 {
        return Err(Error::NoDiophantineSolution { kind: kind.label(), target });
    }
    let k = kind.coefficient() as u128;
    let bound = isqrt(target) as i128;
    let mut out = Vec::new();
    for first in -bound..=bound {
        let rest = target - (first * first) as u128;
        if !rest.is_multiple_of(k) {
            continue;
        }
        let Some(second) = exact_root(rest / k, 2) else { continue };
        let second = second as i128;
        let ok = match norm {
            Normalization::Positive => first > 0 && second > 0,
            Normalization::Congruent { residue, modulus } => {
                first.rem_euclid(modulus as i128) == residue.rem_euclid(modulus) as i128
            }
            Normalization::PlusMinus { residue, modulus } => {
                let f = first.rem_euclid(modulus as i128);
                f == (residue as i128).rem_euclid(modulus as i128)
                    || f == (-residue as i128).rem_euclid(modulus as i128)
            }
        };
        let coprime = coprime_to.is_none_or(|p| first.gcd(&(p as i128)) == 1);
        if ok && coprime {
            out.push((first, second));
        }
    }
    if out.is_empty() {
        return Err(Error::NoDiophantineSolution { kind: kind.label(), target });
    }
    Ok(out)
}

/// A solved (or, for the `N = 6` branches, unresolved) Diophantine datum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiophantineParams {
    pub kind: FormKind,
    #[serde(serialize_with = "crate::ser::big")]
    pub target: u128,
    pub normalization: Normalization,
    /// Every representation surviving the normalization.
    pub solutions: Vec<(i128, i128)>,
    /// `k` with `p = 6k + 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    /// `a = ω_p(n)/(p-1)` and the digit sum `ω_p(n)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<u64>,
    /// Constants the closed form leaves undetermined.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unresolved: Vec<&'static str>,
}

impl DiophantineParams {
    fn solve(kind: FormKind, target: u128, normalization: Normalization, p: u64) -> Result<Self> {
        let solutions = solve_quadratic_form(kind, target, normalization, Some(p))?;
        Ok(DiophantineParams {
            kind,
            target,
            normalization,
            solutions,
            k: None,
            a: None,
            omega: None,
            unresolved: vec![],
        })
    }

    pub fn unique(&self) -> Option<(i128, i128)> {
        (self.solutions.len() == 1).then(|| self.solutions[0])
    }
}

/// The branch assigned by [`classify`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCase {
    pub theorem_id: TheoremId,
    /// Human-readable congruences that hold for these parameters.
    pub conditions: Vec<String>,
    /// Every theorem whose hypotheses hold, in priority order.
    pub satisfied: Vec<TheoremId>,
    pub dioph: Vec<DiophantineParams>,
}

fn modp(x: u128, n: u64) -> u64 {
    (x % n as u128) as u64
}

/// Assigns `(p, s, m, N)` to a theorem branch and solves its norm equations.
pub fn classify(params: &CodeParams) -> TheoremCase {
    let mut case = classify_branch(params);
    case.dioph = case_dioph(params, case.theorem_id).unwrap_or_default();
    case
}

/// [`classify`] without the Diophantine step.
pub fn classify_branch(params: &CodeParams) -> TheoremCase {
    use TheoremId::*;
    let CodeParams { p, s, m, index: n, q, r, .. } = *params;
    let d = s * m;
    let pm = p % n;
    let qm = modp(q, n);
    let mm = (m as u64) % n;
    let mut conditions = vec![format!("p = {pm} mod {n}"), format!("q = {qm} mod {n}"), format!("m = {mm} mod {n}")];
    let mut sat = Vec::new();

    if qm == 1 % n {
        let ratio = modp((r - 1) / (q - 1), n);
        assert_eq!(ratio, mm, "(r-1)/(q-1) mod N must equal m mod N when q = 1 mod N");
        conditions.push(format!("(r-1)/(q-1) = {ratio} mod {n}"));
        if (m as u64).gcd(&n) == 1 {
            sat.push(T3_1);
        }
        let se = s % 2 == 0;
        match n {
            5 => {
                if m % 5 != 0 {
                    sat.push(T3_3);
                } else if pm == 4 {
                    match d % 4 {
                        0 => sat.push(T3_5i),
                        2 => sat.push(T3_5ii),
                        _ => {}
                    }
                } else if pm == 2 || pm == 3 {
                    match d % 8 {
                        0 => sat.push(T3_6i),
                        4 => sat.push(T3_6ii),
                        _ => {}
                    }
                }
            }
            6 => {
                if m % 2 == 1 && m % 3 != 0 {
                    sat.push(T3_8);
                }
                if pm == 5 && se {
                    match m % 6 {
                        0 => sat.push(T3_10i),
                        2 => sat.push(T3_10ii),
                        _ => {}
                    }
                }
                if pm == 1 {
                    match m % 6 {
                        0 => sat.push(T3_12i),
                        2 => sat.push(T3_12ii),
                        _ => {}
                    }
                }
            }
            7 => {
                if m % 7 != 0 {
                    sat.push(T3_15);
                } else if pm == 6 {
                    match d % 4 {
                        0 => sat.push(T3_17i),
                        2 => sat.push(T3_17ii),
                        _ => {}
                    }
                } else if pm == 3 || pm == 5 {
                    match d % 12 {
                        0 => sat.push(T3_18i),
                        6 => sat.push(T3_18ii),
                        _ => {}
                    }
                }
            }
            8 => {
                if m % 2 == 1 {
                    sat.push(T3_22);
                }
                let mm8 = m % 8;
                match (pm, se, mm8) {
                    (7, true, 0) => sat.push(T3_24i),
                    (7, true, 2) => sat.push(T3_24ii),
                    (5, true, 0) => sat.push(T3_25i),
                    (5, true, 2) => sat.push(T3_25ii),
                    (3, true, 2) => sat.push(T3_26),
                    (1, _, 0) => sat.push(T3_28i),
                    (1, _, 2) => sat.push(T3_28ii),
                    _ => {}
                }
            }
            _ => {}
        }
    }
    if n == 7 && s == 1 && m % 3 == 0 && (pm == 2 || pm == 4) {
        sat.push(T3_19);
    }
    conditions.push(format!("sm = {d}"));
    sat.sort_by_key(|t| t.priority());
    let theorem_id = sat.first().copied().unwrap_or(None);
    TheoremCase { theorem_id, conditions, satisfied: sat, dioph: vec![] }
}

fn case_dioph(params: &CodeParams, id: TheoremId) -> Option<Vec<DiophantineParams>> {
    let p = params.p;
    match id {
        TheoremId::T3_25i => {
            let quarter = exact_root(params.r, 4)?;
            Some(vec![DiophantineParams::solve(
                FormKind::C2_4D2,
                quarter,
                Normalization::Congruent { residue: 1, modulus: 4 },
                p,
            )
            .ok()?])
        }
        TheoremId::T3_28i => {
            let quarter = exact_root(params.r, 4)?;
            let half = exact_root(params.r, 2)?;
            Some(vec![
                DiophantineParams::solve(
                    FormKind::C2_4D2,
                    quarter,
                    Normalization::Congruent { residue: 1, modulus: 8 },
                    p,
                )
                .ok()?,
                DiophantineParams::solve(
                    FormKind::L2_2T2,
                    half,
                    Normalization::Congruent { residue: 1, modulus: 8 },
                    p,
                )
                .ok()?,
            ])
        }
        TheoremId::T3_12i => Some(vec![DiophantineParams {
            kind: FormKind::C2_4D2,
            target: 0,
            normalization: Normalization::Positive,
            solutions: vec![],
            k: Some((p - 1) / 6),
            a: None,
            omega: None,
            unresolved: vec!["u", "v", "u1", "v1"],
        }]),
        TheoremId::T3_19 => t3_19_dioph(params, T319Reading::BaseLength).ok().map(|d| vec![d]),
        _ => None,
    }
}

/// One term of a predicted enumerator: `count = share · (r - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedTerm {
    #[serde(serialize_with = "crate::ser::ratio")]
    pub weight: Ratio<i128>,
    #[serde(serialize_with = "crate::ser::ratio")]
    pub share: Ratio<i128>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredictedEnumerator {
    pub source: TheoremId,
    pub terms: Vec<PredictedTerm>,
}

impl PredictedEnumerator {
    fn new(source: TheoremId, terms: Vec<(Ratio<i128>, Ratio<i128>)>) -> Self {
        PredictedEnumerator {
            source,
            terms: terms.into_iter().map(|(weight, share)| PredictedTerm { weight, share }).collect(),
        }
    }

    /// `Σ share = 1`, i.e. the counts add up to `r - 1`.
    pub fn count_identity_holds(&self) -> bool {
        self.terms.iter().map(|t| t.share).sum::<Ratio<i128>>() == Ratio::from(1)
    }

    /// Problems with integrality or range, empty when every weight is an
    /// integer in `[0, n]` and every count is an integer.
    pub fn integrality_issues(&self, params: &CodeParams) -> Vec<String> {
        let mut out = Vec::new();
        let r1 = BigInt::from(params.r - 1);
        for (i, t) in self.terms.iter().enumerate() {
            if !t.weight.is_integer() {
                out.push(format!("term {i}: weight {}/{} is not an integer", t.weight.numer(), t.weight.denom()));
            } else if t.weight.to_integer() < 0 || t.weight.to_integer() > params.length as i128 {
                out.push(format!("term {i}: weight {} outside [0, {}]", t.weight.to_integer(), params.length));
            }
            if !(&r1 * BigInt::from(*t.share.numer())).is_multiple_of(&BigInt::from(*t.share.denom())) {
                out.push(format!("term {i}: count {}(r-1)/{} is not an integer", t.share.numer(), t.share.denom()));
            }
        }
        out
    }

    /// `Σ w·A_w = n(q-1)r/q` over nonzero `β`, evaluated with big integers.
    pub fn first_moment_holds(&self, params: &CodeParams) -> bool {
        let r1 = BigInt::from(params.r - 1);
        let mut num = BigInt::zero();
        let mut den = BigInt::from(1);
        for t in &self.terms {
            let tn = BigInt::from(*t.weight.numer()) * BigInt::from(*t.share.numer()) * &r1;
            let td = BigInt::from(*t.weight.denom()) * BigInt::from(*t.share.denom());
            num = num * &td + tn * &den;
            den *= td;
        }
        let expect = BigInt::from(params.length) * BigInt::from(params.q - 1) * BigInt::from(params.r / params.q);
        num == expect * den
    }

    /// The prediction as `weight → count` over nonzero `β`.
    pub fn distribution(&self, params: &CodeParams) -> Result<std::collections::BTreeMap<u128, u128>> {
        let mut out = std::collections::BTreeMap::new();
        for t in &self.terms {
            if !t.weight.is_integer() || t.weight.is_negative() {
                return Err(Error::NonIntegral { num: *t.weight.numer(), den: *t.weight.denom() });
            }
            let count = Ratio::new((params.r - 1) as i128 / *t.share.denom() * *t.share.numer(), 1);
            if (params.r - 1) as i128 % *t.share.denom() != 0 {
                return Err(Error::NonIntegral {
                    num: (params.r - 1) as i128 * *t.share.numer(),
                    den: *t.share.denom(),
                });
            }
            *out.entry(t.weight.to_integer() as u128).or_default() += count.to_integer() as u128;
        }
        Ok(out)
    }
}

fn reason(e: &Error) -> String {
    match e {
        Error::NotApplicable(msg) => msg.clone(),
        other => other.to_string(),
    }
}

fn root(r: u128, k: u32) -> Result<i128> {
    exact_root(r, k).map(|x| x as i128).ok_or_else(|| Error::NotApplicable(format!("r^(1/{k}) is not an integer")))
}

fn ck(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow)
}

/// `(q-1)·x / (N q)`.
fn weight_of(params: &CodeParams, x: i128) -> Result<Ratio<i128>> {
    let q = params.q as i128;
    let num = ck((q - 1).checked_mul(x))?;
    Ok(Ratio::new(num, params.index as i128 * q))
}

fn require(case: &TheoremCase, allowed: &[TheoremId]) -> Result<()> {
    if allowed.contains(&case.theorem_id) {
        Ok(())
    } else {
        Err(Error::NotApplicable(format!("{} is not one of the expected branches", case.theorem_id)))
    }
}

/// Theorem 3.1 family: the single weight `q^{m-1}(q-1)/N`.
pub fn one_weight_enumerator(params: &CodeParams, case: &TheoremCase) -> Result<PredictedEnumerator> {
    use TheoremId::*;
    require(case, &[T3_1, T3_3, T3_8, T3_15, T3_22])?;
    let q = params.q as i128;
    let w = ck(q.checked_pow(params.m - 1).and_then(|x| x.checked_mul(q - 1)))?;
    Ok(PredictedEnumerator::new(case.theorem_id, vec![(Ratio::new(w, params.index as i128), Ratio::from(1))]))
}

/// Two weights from one exceptional class: `(N-1)(r-1)/N` codewords at
/// `(q-1)(r ∓ √r)/Nq` and `(r-1)/N` at `(q-1)(r ± (N-1)√r)/Nq`.
pub fn semiprimitive_two_weight_enumerator(params: &CodeParams, case: &TheoremCase) -> Result<PredictedEnumerator> {
    use TheoremId::*;
    let upper = match case.theorem_id {
        T3_5i | T3_6i | T3_10i | T3_17i | T3_18i | T3_24i => true,
        T3_5ii | T3_6ii | T3_17ii | T3_18ii => false,
        other => return Err(Error::NotApplicable(format!("{other} is not a semiprimitive branch"))),
    };
    let sr = root(params.r, 2)?;
    let r = params.r as i128;
    let big_n = params.index as i128;
    let sign = if upper { 1 } else { -1 };
    let many = weight_of(params, r - sign * sr)?;
    let one = weight_of(params, ck(((big_n - 1) * sr).checked_mul(sign).and_then(|x| x.checked_add(r)))?)?;
    Ok(PredictedEnumerator::new(
        case.theorem_id,
        vec![(many, Ratio::new(big_n - 1, big_n)), (one, Ratio::new(1, big_n))],
    ))
}

/// Half the codewords at `(q-1)(r-√r)/Nq`, half at `(q-1)(r+√r)/Nq`.
pub fn balanced_two_weight_enumerator(params: &CodeParams, case: &TheoremCase) -> Result<PredictedEnumerator> {
    use TheoremId::*;
    require(case, &[T3_10ii, T3_12ii, T3_24ii, T3_25ii, T3_26, T3_28ii])?;
    let sr = root(params.r, 2)?;
    let r = params.r as i128;
    let half = Ratio::new(1, 2);
    Ok(PredictedEnumerator::new(
        case.theorem_id,
        vec![(weight_of(params, r - sr)?, half), (weight_of(params, r + sr)?, half)],
    ))
}

/// The six-weight enumerator of Theorem 3.25(i).
pub fn eight_weight_enumerator_t3_25(params: &CodeParams, c: i128, d: i128) -> Result<PredictedEnumerator> {
    let r = params.r as i128;
    let sr = root(params.r, 2)?;
    let q4 = root(params.r, 4)?;
    let r38 = ck(root(params.r, 8)?.checked_pow(3))?;
    let (quarter, eighth) = (Ratio::new(1, 4), Ratio::new(1, 8));
    let xs = [
        (r - sr + 8 * q4 * c * d, quarter),
        (r - sr - 8 * q4 * c * d, quarter),
        (r + 3 * sr - 4 * q4 * c * c + 8 * r38 * d, eighth),
        (r - sr + 4 * q4 * c * c - 4 * r38 * c, eighth),
        (r + 3 * sr - 4 * q4 * c * c - 8 * r38 * d, eighth),
        (r - sr + 4 * q4 * c * c + 4 * r38 * c, eighth),
    ];
    let terms = xs.iter().map(|&(x, sh)| Ok((weight_of(params, x)?, sh))).collect::<Result<_>>()?;
    Ok(PredictedEnumerator::new(TheoremId::T3_25i, terms))
}

/// The eight-weight enumerator of Theorem 3.28(i).
pub fn eight_weight_enumerator_t3_28(
    params: &CodeParams,
    (c, d): (i128, i128),
    (l, t): (i128, i128),
) -> Result<PredictedEnumerator> {
    let r = params.r as i128;
    let sr = root(params.r, 2)?;
    let q4 = root(params.r, 4)?;
    let e = root(params.r, 8)?;
    let xs = [
        r + sr + 8 * q4 * c * d + 2 * e * (2 * c - 4 * d) * t,
        r + sr - 4 * q4 * c * c + 8 * e * d * l,
        r + sr - 8 * q4 * c * d + 2 * e * (2 * c + 4 * d) * t,
        r - 3 * sr + 4 * q4 * c * c - 4 * e * c * l,
        r + sr + 8 * q4 * c * d + 2 * e * (4 * d - 2 * c) * t,
        r + sr - 4 * q4 * c * c - 8 * e * d * l,
        r + sr - 8 * q4 * c * d - 2 * e * (2 * c + 4 * d) * t,
        r - 3 * sr + 4 * q4 * c * c + 4 * e * c * l,
    ];
    let terms = xs.iter().map(|&x| Ok((weight_of(params, x)?, Ratio::new(1, 8)))).collect::<Result<_>>()?;
    Ok(PredictedEnumerator::new(TheoremId::T3_28i, terms))
}

/// How to read the definitions of `n`, `a` and the first weight in Theorem 3.19.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum T319Reading {
    /// `n` is the code length `n_m`; the first weight as printed.
    Literal,
    /// `n = n_1 = (p³-1)/7`; the first weight as printed.
    BaseLength,
    /// `n = n_1`; first weight `(p-1)(r ± 3p^{ma}c)/(7p)`, the form forced by
    /// the period sum and the first moment.
    BaseLengthAmended,
}

pub const T319_READINGS: [T319Reading; 3] =
    [T319Reading::Literal, T319Reading::BaseLength, T319Reading::BaseLengthAmended];

impl fmt::Display for T319Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            T319Reading::Literal => "literal",
            T319Reading::BaseLength => "base-length",
            T319Reading::BaseLengthAmended => "base-length-amended",
        })
    }
}

impl std::str::FromStr for T319Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        T319_READINGS
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| Error::NotApplicable(format!("unknown reading {s}")))
    }
}

/// The theorem's `m`: the code is over `F_p` with `r = p^{3m}`.
fn t3_19_m(params: &CodeParams) -> Result<u32> {
    if params.index != 7 || params.s != 1 || !params.m.is_multiple_of(3) {
        return Err(Error::NotApplicable("Theorem 3.19 needs N = 7, q = p and r = p^(3m)".into()));
    }
    Ok(params.m / 3)
}

fn t3_19_dioph(params: &CodeParams, reading: T319Reading) -> Result<DiophantineParams> {
    let tm = t3_19_m(params)?;
    let p = params.p;
    let n = match reading {
        T319Reading::Literal => params.length,
        _ => ((p as u128).pow(3) - 1) / 7,
    };
    let omega = digit_sum(n, p as u128) as u64;
    if !omega.is_multiple_of(p - 1) {
        return Err(Error::NonIntegral { num: omega as i128, den: p as i128 - 1 });
    }
    let a = (omega / (p - 1)) as u32;
    let exp = tm as i64 * (3 - 2 * a as i64);
    let scale = (p as u128).checked_pow(exp.unsigned_abs() as u32).ok_or(Error::Overflow)?;
    let target = match exp {
        0.. => 4 * scale,
        _ if 4 % scale == 0 => 4 / scale,
        _ => return Err(Error::NotApplicable(format!("a = {a} makes the target 4p^({exp}) fractional"))),
    };
    let mut dp = DiophantineParams::solve(FormKind::C2_7D2, target, Normalization::Positive, p)?;
    dp.a = Some(a);
    dp.omega = Some(omega);
    Ok(dp)
}

/// Candidate enumerators for Theorem 3.19 under one reading.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct T319Outcome {
    pub reading: T319Reading,
    pub dioph: Option<DiophantineParams>,
    /// `(σ, enumerator)` for `σ = ±1`, the sign of the upper alternatives.
    pub candidates: Vec<(i8, PredictedEnumerator)>,
    /// Signs whose weights are integral, in range and satisfy the first moment.
    pub survivors: Vec<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl T319Outcome {
    pub fn unique(&self) -> Option<&PredictedEnumerator> {
        match self.survivors.as_slice() {
            [s] => self.candidates.iter().find(|(c, _)| c == s).map(|(_, e)| e),
            _ => None,
        }
    }
}

/// Theorem 3.19: three weights with counts `n_m, 3n_m, 3n_m`.
pub fn three_weight_enumerator_t3_19(params: &CodeParams, reading: T319Reading) -> T319Outcome {
    let mut out = T319Outcome { reading, dioph: None, candidates: vec![], survivors: vec![], error: None };
    let dp = match t3_19_dioph(params, reading) {
        Ok(dp) => dp,
        Err(e) => {
            out.error = Some(reason(&e));
            return out;
        }
    };
    let tm = t3_19_m(params).expect("checked by t3_19_dioph");
    let (p, r) = (params.p as i128, params.r as i128);
    let big_p = p.pow(tm * dp.a.expect("set by t3_19_dioph"));
    let (c, d) = dp.solutions[0];
    for sigma in [1i8, -1] {
        let sg = sigma as i128;
        let first = match reading {
            T319Reading::BaseLengthAmended => Ratio::new((p - 1) * (r + sg * 3 * big_p * c), 7 * p),
            _ => Ratio::new((p - 1) * (2 * r + sg * 3 * big_p * c), 7 * p),
        };
        let second = Ratio::new((p - 1) * (2 * r + sg * big_p * (7 * d - c)), 14 * p);
        let third = Ratio::new((p - 1) * (2 * r - sg * big_p * (7 * d + c)), 14 * p);
        let e = PredictedEnumerator::new(
            TheoremId::T3_19,
            vec![(first, Ratio::new(1, 7)), (second, Ratio::new(3, 7)), (third, Ratio::new(3, 7))],
        );
        if e.integrality_issues(params).is_empty() && e.first_moment_holds(params) {
            out.survivors.push(sigma);
        }
        out.candidates.push((sigma, e));
    }
    if dp.solutions.len() > 1 {
        out.error = Some(format!("{} representations survive normalization", dp.solutions.len()));
    } else if out.survivors.is_empty() {
        out.error = Some("no sign assignment yields integral weights satisfying the first moment".into());
    } else if out.survivors.len() > 1 {
        out.error = Some("both sign assignments survive".into());
    }
    out.dioph = Some(dp);
    out
}

/// The enumerator for the classified branch. Theorem 3.19 uses `reading`;
/// branches with several Diophantine normalizations keep the ones whose
/// weights are integral and fail if that is not exactly one.
pub fn predicted_enumerator(
    params: &CodeParams,
    case: &TheoremCase,
    reading: T319Reading,
) -> Result<PredictedEnumerator> {
    use TheoremId::*;
    match case.theorem_id {
        id if id.is_one_weight() => one_weight_enumerator(params, case),
        T3_5i | T3_5ii | T3_6i | T3_6ii | T3_10i | T3_17i | T3_17ii | T3_18i | T3_18ii | T3_24i => {
            semiprimitive_two_weight_enumerator(params, case)
        }
        T3_10ii | T3_12ii | T3_24ii | T3_25ii | T3_26 | T3_28ii => balanced_two_weight_enumerator(params, case),
        T3_25i => {
            let dp = case.dioph.first().ok_or_else(|| Error::NotApplicable("no c, d for Theorem 3.25".into()))?;
            pick_integral(params, dp.solutions.iter().map(|&(c, d)| eight_weight_enumerator_t3_25(params, c, d)))
        }
        T3_28i => {
            let [cd, lt] = case.dioph.as_slice() else {
                return Err(Error::NotApplicable("no c, d, l, t for Theorem 3.28".into()));
            };
            let all = cd
                .solutions
                .iter()
                .flat_map(|&x| lt.solutions.iter().map(move |&y| (x, y)))
                .map(|(x, y)| eight_weight_enumerator_t3_28(params, x, y));
            pick_integral(params, all)
        }
        T3_19 => {
            let o = three_weight_enumerator_t3_19(params, reading);
            o.unique().cloned().ok_or_else(|| {
                Error::NotApplicable(format!("Theorem 3.19 ({reading}): {}", o.error.unwrap_or_default()))
            })
        }
        T3_12i => Err(Error::NotApplicable(
            "Theorem 3.12(i) depends on u, v, u1, v1, which the norm equations do not determine".into(),
        )),
        _ => Err(Error::NotApplicable("no theorem covers these parameters".into())),
    }
}

fn pick_integral(
    params: &CodeParams,
    all: impl Iterator<Item = Result<PredictedEnumerator>>,
) -> Result<PredictedEnumerator> {
    let all: Vec<_> = all.collect::<Result<_>>()?;
    let mut ok: Vec<_> = all.into_iter().filter(|e| e.integrality_issues(params).is_empty()).collect();
    ok.dedup();
    match ok.len() {
        1 => Ok(ok.pop().expect("one")),
        0 => Err(Error::NotApplicable("no normalization yields integral weights".into())),
        k => Err(Error::NotApplicable(format!("{k} normalizations yield integral weights"))),
    }
}

/// Which factorization of `ψ_(N,r)` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaBranch {
    L2_4i,
    L2_4ii,
    L2_4iii,
    L2_5i,
    L2_5iia,
    L2_5iib,
    L2_5iic,
    L2_6i,
    L2_6ii,
    L2_6iii,
    L2_7i,
    L2_7iia,
    L2_7iib,
    L2_7iic,
    L2_7iiia,
    L2_7iiib,
    L2_7iva,
    L2_7ivb,
    L2_7ivc,
    L2_7ivd,
}

impl fmt::Display for LemmaBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format!("{self:?}");
        let (head, tail) = s.split_at(4);
        write!(f, "{}({})", head.replacen("L2_", "L2.", 1), tail)
    }
}

impl LemmaBranch {
    /// Branches whose printed form was corrected before use.
    pub fn has_amendment(self) -> bool {
        matches!(self, LemmaBranch::L2_7iib | LemmaBranch::L2_7ivc | LemmaBranch::L2_7ivd)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum FormChoice {
    /// Corrected where the printed factorization disagrees with the periods.
    #[default]
    Amended,
    AsPrinted,
}

/// One fully determined expansion of a predicted factorization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsiCandidate {
    /// Coefficients of `ψ`, highest degree first.
    #[serde(serialize_with = "crate::ser::big_vec")]
    pub coeffs: Vec<i128>,
    /// Named Diophantine values used, e.g. `("c", 1)`.
    pub values: Vec<(&'static str, i128)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PsiPrediction {
    Factored { branch: LemmaBranch, form: FormChoice, candidates: Vec<PsiCandidate> },
    Irreducible { branch: LemmaBranch },
    Unsupported { branch: LemmaBranch, reason: String },
}

impl PsiPrediction {
    pub fn branch(&self) -> LemmaBranch {
        match self {
            PsiPrediction::Factored { branch, .. }
            | PsiPrediction::Irreducible { branch }
            | PsiPrediction::Unsupported { branch, .. } => *branch,
        }
    }

    /// Whether the computed polynomial is consistent with the prediction:
    /// equal to some candidate, or root-free over the rationals for the
    /// irreducible branches. `None` when nothing can be checked.
    pub fn agrees_with(&self, computed: &[i128]) -> Option<bool> {
        match self {
            PsiPrediction::Factored { candidates, .. } => Some(candidates.iter().any(|c| c.coeffs == computed)),
            PsiPrediction::Irreducible { .. } => Some(!poly::has_rational_root(computed)),
            PsiPrediction::Unsupported { .. } => None,
        }
    }
}

/// Which lemma branch governs `ψ_(N, p^d)`, if any.
pub fn lemma_branch(p: u64, d: u32, n: u64) -> Option<LemmaBranch> {
    use LemmaBranch::*;
    let pm = p % n;
    match (n, pm) {
        (5, 4) if d.is_multiple_of(2) => Some(L2_4i),
        (5, 2 | 3) if d.is_multiple_of(4) => Some(L2_4ii),
        (5, 1) if !d.is_multiple_of(5) => Some(L2_4iii),
        (6, 5) if d.is_multiple_of(2) => Some(L2_5i),
        (6, 1) if d % 2 == 1 && !d.is_multiple_of(3) => Some(L2_5iia),
        (6, 1) if d.is_multiple_of(6) => Some(L2_5iib),
        (6, 1) if d % 6 == 3 => Some(L2_5iic),
        (7, 6) if d.is_multiple_of(2) => Some(L2_6i),
        (7, 3 | 5) if d.is_multiple_of(6) => Some(L2_6ii),
        (7, 1) if !d.is_multiple_of(7) => Some(L2_6iii),
        (8, 7) if d.is_multiple_of(2) => Some(L2_7i),
        (8, 5) if d.is_multiple_of(8) => Some(L2_7iia),
        (8, 5) if d % 8 == 4 => Some(L2_7iib),
        (8, 5) if d % 4 == 2 => Some(L2_7iic),
        (8, 3) if d.is_multiple_of(4) => Some(L2_7iiia),
        (8, 3) if d % 4 == 2 => Some(L2_7iiib),
        (8, 1) if d % 2 == 1 => Some(L2_7iva),
        (8, 1) if d.is_multiple_of(8) => Some(L2_7ivb),
        (8, 1) if d % 8 == 4 => Some(L2_7ivc),
        (8, 1) if d % 4 == 2 => Some(L2_7ivd),
        _ => None,
    }
}

fn b(x: i128) -> BigInt {
    BigInt::from(x)
}

/// `Y + c` and `Y² + bY + c` as big polynomials in `Y = NX + 1`.
fn lin(c: BigInt) -> BigPoly {
    BigPoly::linear(c)
}

fn quad(bc: BigInt, c: BigInt) -> BigPoly {
    BigPoly(vec![c, bc, BigInt::from(1)])
}

fn quartic(c3: BigInt, c2: BigInt, c1: BigInt, c0: BigInt) -> BigPoly {
    BigPoly(vec![c0, c1, c2, c3, BigInt::from(1)])
}

/// Expands `N^{-N} P(NX + 1)`.
fn psi_from_y(y_poly: &BigPoly, n: u64) -> Result<Vec<i128>> {
    let nn = BigInt::from(n);
    y_poly.compose_affine(&nn, &BigInt::from(1)).exact_div(&nn.pow(n as u32))?.to_desc_i128()
}

/// The predicted `ψ_(N,r)` for the field `F_{p^d}`, `d = sm`.
pub fn predicted_period_polynomial(p: u64, s: u32, m: u32, n: u64, form: FormChoice) -> Result<PsiPrediction> {
    use LemmaBranch::*;
    let d = s * m;
    let branch = lemma_branch(p, d, n)
        .ok_or_else(|| Error::NotApplicable(format!("no factorization of psi_({n}, {p}^{d}) is stated")))?;
    let r = (p as u128).checked_pow(d).ok_or(Error::Overflow)?;
    let irreducible = PsiPrediction::Irreducible { branch };
    let semiprimitive = |parity_unit: u32| -> Result<PsiPrediction> {
        let sr = b(root(r, 2)?);
        let even = (d / parity_unit).is_multiple_of(2);
        let k = b(n as i128 - 1);
        let (one, many) = if even { (&k * &sr, -sr.clone()) } else { (-(&k * &sr), sr.clone()) };
        let y = lin(one).mul(&lin(many).pow(n as u32 - 1));
        Ok(PsiPrediction::Factored {
            branch,
            form,
            candidates: vec![PsiCandidate { coeffs: psi_from_y(&y, n)?, values: vec![] }],
        })
    };
    let amended = form == FormChoice::Amended;
    let solve = |kind, target: u128, norm| DiophantineParams::solve(kind, target, norm, p).map(|d| d.solutions);
    let factored = |cands: Vec<(BigPoly, Vec<(&'static str, i128)>)>| -> Result<PsiPrediction> {
        let mut candidates: Vec<PsiCandidate> = Vec::new();
        for (y, values) in cands {
            let coeffs = psi_from_y(&y, n)?;
            if !candidates.iter().any(|c| c.coeffs == coeffs) {
                candidates.push(PsiCandidate { coeffs, values });
            }
        }
        Ok(PsiPrediction::Factored { branch, form, candidates })
    };

    match branch {
        L2_4iii | L2_5iia | L2_6iii | L2_7iva => Ok(irreducible),
        L2_5iib | L2_5iic => Ok(PsiPrediction::Unsupported {
            branch,
            reason: "the constants u, v, u1, v1 are fixed only up to their norm equations".into(),
        }),
        L2_4i | L2_5i | L2_6i | L2_7i => semiprimitive(2),
        L2_4ii => semiprimitive(4),
        L2_6ii => semiprimitive(6),
        L2_7iia => {
            let (sr, q4, r38) = (b(root(r, 2)?), b(root(r, 4)?), b(root(r, 8)?.pow(3)));
            let sols = solve(FormKind::C2_4D2, r.isqrt().isqrt(), Normalization::Congruent { residue: 1, modulus: 4 })?;
            factored(
                sols.into_iter()
                    .map(|(c, dd)| {
                        let (c, dd) = (b(c), b(dd));
                        let cd8 = BigInt::from(8) * &q4 * &c * &dd;
                        let c2 = BigInt::from(4) * &q4 * &c * &c;
                        let y = BigPoly::product(&[
                            lin(-&sr + &cd8).pow(2),
                            lin(BigInt::from(3) * &sr - &c2 + BigInt::from(8) * &r38 * &dd),
                            lin(-&sr - &cd8).pow(2),
                            lin(-&sr + &c2 - BigInt::from(4) * &r38 * &c),
                            lin(BigInt::from(3) * &sr - &c2 - BigInt::from(8) * &r38 * &dd),
                            lin(-&sr + &c2 + BigInt::from(4) * &r38 * &c),
                        ]);
                        (y, vec![("c", c.to_i128().unwrap_or(0)), ("d", dd.to_i128().unwrap_or(0))])
                    })
                    .collect(),
            )
        }
        L2_7iib => {
            let (sr, q4) = (b(root(r, 2)?), b(root(r, 4)?));
            let q4_3 = q4.pow(3);
            let sols = solve(
                FormKind::C2_4D2,
                q4.to_u128().unwrap_or(0),
                Normalization::PlusMinus { residue: 1, modulus: 4 },
            )?;
            factored(
                sols.into_iter()
                    .map(|(c0, d0)| {
                        let (c, dd) = (b(c0), b(d0));
                        let cd8 = BigInt::from(8) * &q4 * &c * &dd;
                        let c2 = BigInt::from(4) * &q4 * &c * &c;
                        let u = BigInt::from(3) * &sr - &c2;
                        let v = &c2 - &sr;
                        let last = if amended { &q4_3 } else { &q4 };
                        let y = BigPoly::product(&[
                            lin(-&sr + &cd8).pow(2),
                            quad(BigInt::from(2) * &u, &u * &u - BigInt::from(64) * &q4_3 * &dd * &dd),
                            lin(-&sr - &cd8).pow(2),
                            quad(BigInt::from(2) * &v, &v * &v - BigInt::from(16) * last * &c * &c),
                        ]);
                        (y, vec![("c", c0), ("d", d0)])
                    })
                    .collect(),
            )
        }
        L2_7iic => {
            let sr = b(root(r, 2)?);
            let sols = solve(FormKind::W2_4Z2, r.isqrt(), Normalization::Congruent { residue: 1, modulus: 4 })?;
            let rr = b(r as i128);
            factored(
                sols.into_iter()
                    .map(|(w0, z0)| {
                        let (w2, z2) = (b(w0 * w0), b(z0 * z0));
                        let a = quad(BigInt::from(-2) * &sr, &rr - BigInt::from(16) * &sr * &z2).pow(2);
                        let t = BigInt::from(9) * &sr - BigInt::from(4) * &w2;
                        let bq = quartic(
                            BigInt::from(4) * &sr,
                            BigInt::from(2) * &sr * (BigInt::from(11) * &sr - BigInt::from(4) * &w2),
                            BigInt::from(4) * &rr * (BigInt::from(9) * &sr - BigInt::from(20) * &w2),
                            &rr * &t * &t,
                        );
                        (a.mul(&bq), vec![("w", w0), ("z", z0)])
                    })
                    .collect(),
            )
        }
        L2_7iiia | L2_7iiib => {
            let sr = b(root(r, 2)?);
            let rr = b(r as i128);
            let norm = if branch == L2_7iiia {
                Normalization::Congruent { residue: -1, modulus: 8 }
            } else {
                Normalization::PlusMinus { residue: 1, modulus: 4 }
            };
            let sols = solve(FormKind::L2_2T2, r.isqrt(), norm)?;
            factored(
                sols.into_iter()
                    .map(|(l0, t0)| {
                        let (l2, t2) = (b(l0 * l0), b(t0 * t0));
                        let y = if branch == L2_7iiia {
                            BigPoly::product(&[
                                lin(-sr.clone()).pow(2),
                                quad(BigInt::from(-2) * &sr, &rr - BigInt::from(16) * &sr * &t2).pow(2),
                                quad(BigInt::from(6) * &sr, BigInt::from(9) * &rr - BigInt::from(16) * &sr * &l2),
                            ])
                        } else {
                            BigPoly::product(&[
                                quad(BigInt::from(2) * &sr, &rr + BigInt::from(16) * &sr * &t2).pow(2),
                                lin(BigInt::from(-3) * &sr).pow(2),
                                quad(BigInt::from(2) * &sr, &rr + BigInt::from(16) * &sr * &l2),
                            ])
                        };
                        (y, vec![("l", l0), ("t", t0)])
                    })
                    .collect(),
            )
        }
        L2_7ivb | L2_7ivc => {
            let sr = b(root(r, 2)?);
            let q4 = b(root(r, 4)?);
            let cds = solve(
                FormKind::C2_4D2,
                q4.to_u128().unwrap_or(0),
                Normalization::Congruent { residue: 1, modulus: if branch == L2_7ivb { 8 } else { 4 } },
            )?;
            let lts = solve(FormKind::L2_2T2, r.isqrt(), Normalization::Congruent { residue: 1, modulus: 8 })?;
            let mut cands = Vec::new();
            for &(c0, d0) in &cds {
                for &(l0, t0) in &lts {
                    let (c, dd, l, t) = (b(c0), b(d0), b(l0), b(t0));
                    let y = if branch == L2_7ivb {
                        let e = b(root(r, 8)?);
                        let cd8 = BigInt::from(8) * &q4 * &c * &dd;
                        let c2 = BigInt::from(4) * &q4 * &c * &c;
                        let two = BigInt::from(2);
                        let four = BigInt::from(4);
                        BigPoly::product(&[
                            lin(&sr + &cd8 + &two * &e * (&two * &c - &four * &dd) * &t),
                            lin(&sr - &c2 + BigInt::from(8) * &e * &dd * &l),
                            lin(&sr - &cd8 + &two * &e * (&two * &c + &four * &dd) * &t),
                            lin(BigInt::from(-3) * &sr + &c2 - &four * &e * &c * &l),
                            lin(&sr + &cd8 + &two * &e * (&four * &dd - &two * &c) * &t),
                            lin(&sr - &c2 - BigInt::from(8) * &e * &dd * &l),
                            lin(&sr - &cd8 - &two * &e * (&two * &c + &four * &dd) * &t),
                            lin(BigInt::from(-3) * &sr + &c2 + &four * &e * &c * &l),
                        ])
                    } else {
                        let cd8 = BigInt::from(8) * &c * &dd;
                        let c4 = BigInt::from(4) * &c * &c;
                        let two_q = BigInt::from(2) * &q4;
                        let f = |lin_coef: BigInt, sq: BigInt, tail: BigInt| {
                            quad(&two_q * lin_coef, &sr * &sq * &sq - tail)
                        };
                        let t_minus =
                            BigInt::from(4) * &q4 * (BigInt::from(2) * &c - BigInt::from(4) * &dd).pow(2) * &t * &t;
                        let t_plus =
                            BigInt::from(4) * &q4 * (BigInt::from(2) * &c + BigInt::from(4) * &dd).pow(2) * &t * &t;
                        let (f1, f3) = if amended {
                            (f(&cd8 - &q4, &cd8 - &q4, t_minus), f(-(&q4 + &cd8), &q4 + &cd8, t_plus))
                        } else {
                            (f(&q4 + &cd8, &q4 + &cd8, t_minus), f(&q4 - &cd8, &q4 - &cd8, t_plus))
                        };
                        let three_q = BigInt::from(3) * &q4 - &c4;
                        let f2 = f(three_q.clone(), three_q, BigInt::from(64) * &q4 * &dd * &dd * &l * &l);
                        let four_c = &c4 - &q4;
                        let f4 = f(four_c.clone(), four_c, BigInt::from(16) * &q4 * &c * &c * &l * &l);
                        BigPoly::product(&[f1, f2, f3, f4])
                    };
                    cands.push((y, vec![("c", c0), ("d", d0), ("l", l0), ("t", t0)]));
                }
            }
            factored(cands)
        }
        L2_7ivd => {
            let sr = b(root(r, 2)?);
            let rr = b(r as i128);
            let wzs = solve(FormKind::W2_4Z2, r.isqrt(), Normalization::Congruent { residue: 1, modulus: 4 })?;
            let lts = solve(FormKind::L2_2T2, r.isqrt(), Normalization::Congruent { residue: -1, modulus: 4 })?;
            let mut cands = Vec::new();
            for &(w0, z0) in &wzs {
                for &(l0, t0) in &lts {
                    let (w2, z2, l2, t2) = (b(w0 * w0), b(z0 * z0), b(l0 * l0), b(t0 * t0));
                    let sixteen = BigInt::from(16);
                    let zt = &sixteen * &z2 + &sixteen * &t2;
                    let inner = if amended { &sr - BigInt::from(4) * &t2 } else { &sr - &sixteen * &t2 };
                    let a = quartic(
                        BigInt::from(-4) * &sr,
                        BigInt::from(-2) * &sr * (&zt - BigInt::from(3) * &sr),
                        BigInt::from(-4) * &sr * (&rr - &sr * &zt + BigInt::from(128) * &t2 * &z2),
                        &rr * (&sr + &sixteen * &z2 - &sixteen * &t2).pow(2)
                            - BigInt::from(64) * &sr * inner.pow(2) * &z2,
                    );
                    let wl = BigInt::from(4) * &w2 + BigInt::from(8) * &l2;
                    let bq = quartic(
                        BigInt::from(4) * &sr,
                        BigInt::from(-2) * &sr * (&wl - BigInt::from(3) * &sr),
                        BigInt::from(4) * &sr * (&rr - &sr * &wl + &sixteen * &w2 * &l2),
                        &rr * (&sr + BigInt::from(4) * &w2 - BigInt::from(8) * &l2).pow(2)
                            - BigInt::from(4) * &sr * (BigInt::from(2) * &sr - BigInt::from(4) * &l2).pow(2) * &w2,
                    );
                    cands.push((a.mul(&bq), vec![("w", w0), ("z", z0), ("l", l0), ("t", t0)]));
                }
            }
            factored(cands)
        }
    }
}
