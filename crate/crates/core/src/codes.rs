//! Irreducible cyclic codes `C(r, N)` and their weight distributions.
//!
//! The codeword for `β ∈ F_r` is `(Tr(β), Tr(βθ), .., Tr(βθ^{n-1}))` with
//! `θ = α^N` and `Tr = Tr_{r/q}`. Weights are computed two ways: by
//! enumerating codewords, and from the solution count
//! `Z(r, a) = #{x : Tr(a x^N) = 0}` through `wt = n - (Z - 1)/N`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::gf::{Element, FieldTable, Subfield, TraceMap, DEFAULT_FIELD_CAP};
use crate::par::Exec;

/// `(p, s, m, N)` with the derived `q = p^s`, `r = q^m`, `n = (r-1)/N`.
///
/// Valid for any size that fits in 128 bits; no field is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CodeParams {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    #[serde(rename = "N")]
    pub index: u64,
    #[serde(serialize_with = "crate::ser::big")]
    pub q: u128,
    #[serde(serialize_with = "crate::ser::big")]
    pub r: u128,
    #[serde(rename = "n", serialize_with = "crate::ser::big")]
    pub length: u128,
}

impl CodeParams {
    pub fn new(p: u64, s: u32, m: u32, index: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroExponent("s"));
        }
        if m == 0 {
            return Err(Error::ZeroExponent("m"));
        }
        if index < 2 {
            return Err(Error::IndexTooSmall(index));
        }
        let q = (p as u128).checked_pow(s).ok_or(Error::Overflow)?;
        let r = q.checked_pow(m).ok_or(Error::Overflow)?;
        if (r - 1) % index as u128 != 0 {
            return Err(Error::IndexDoesNotDivide { index, group_order: r - 1 });
        }
        Ok(CodeParams { p, s, m, index, q, r, length: (r - 1) / index as u128 })
    }

    /// Extension degree `sm` of `F_r` over `F_p`.
    pub fn degree(&self) -> u32 {
        self.s * self.m
    }

    /// Whether `F_q^* ⊆ C_0`, i.e. `N | (r-1)/(q-1)`.
    pub fn subfield_in_first_class(&self) -> bool {
        ((self.r - 1) / (self.q - 1)).is_multiple_of(self.index as u128)
    }

    /// `n (q-1) r / q`, the first moment `Σ w A_w` of every such code.
    pub fn first_moment(&self) -> u128 {
        self.length * (self.q - 1) * (self.r / self.q)
    }
}

/// A code together with its ambient field.
pub struct CodeSpec {
    pub params: CodeParams,
    pub field: FieldTable,
    pub sub: Subfield,
    pub theta: Element,
    trace: TraceMap,
    zero_trace: OnceLock<Vec<bool>>,
}

impl std::fmt::Debug for CodeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CodeSpec").field("params", &self.params).field("field", &self.field).finish()
    }
}

/// Builds `C(r, N)` under the default field cap.
pub fn build_code(p: u64, s: u32, m: u32, index: u64) -> Result<CodeSpec> {
    CodeSpec::new(CodeParams::new(p, s, m, index)?, DEFAULT_FIELD_CAP)
}

impl CodeSpec {
    pub fn new(params: CodeParams, cap: u64) -> Result<Self> {
        if params.r > cap as u128 {
            return Err(Error::FieldTooLarge { order: params.r, cap });
        }
        let field = FieldTable::with_cap(params.p, params.degree(), cap)?;
        let sub = field.subfield(params.q as u64)?;
        let trace = field.trace_map(&sub);
        let theta = field.alpha_pow(params.index as i64);
        Ok(CodeSpec { params, field, sub, theta, trace, zero_trace: OnceLock::new() })
    }

    pub fn length(&self) -> usize {
        self.params.length as usize
    }

    pub fn index(&self) -> u64 {
        self.params.index
    }

    /// `Tr_{r/q}(x)` through the precomputed linear map.
    pub fn trace(&self, x: Element) -> Element {
        self.field.from_packed(self.trace.apply(self.field.packed(x)))
    }

    /// `zero_trace[e]` is true iff `Tr(α^e) = 0`.
    fn zero_trace(&self) -> &[bool] {
        self.zero_trace.get_or_init(|| {
            (0..self.field.group_order()).map(|e| self.trace.apply(self.field.exp_packed(e)) == 0).collect()
        })
    }

    /// Weight of `c(α^e)`.
    pub fn weight_of_log(&self, e: u32) -> u64 {
        let zero = self.zero_trace();
        let g = zero.len();
        let step = self.index() as usize;
        let mut idx = e as usize % g;
        let mut w = 0u64;
        for _ in 0..self.length() {
            w += !zero[idx] as u64;
            idx += step;
            if idx >= g {
                idx -= g;
            }
        }
        w
    }

    /// Weight of `c(β)`.
    pub fn weight(&self, beta: Element) -> u64 {
        beta.log().map_or(0, |e| self.weight_of_log(e))
    }
}

/// `c(β)` as subfield labels: `0` for zero, `j + 1` for `g^j`.
pub fn codeword(spec: &CodeSpec, beta: Element) -> Vec<u32> {
    let mut x = beta;
    (0..spec.length())
        .map(|_| {
            let label = spec.field.subfield_label(spec.trace(x), &spec.sub).expect("trace lands in the subfield");
            x = spec.field.mul(x, spec.theta);
            label
        })
        .collect()
}

/// `c(β)` over a prime field, as integer residues.
pub fn codeword_residues(spec: &CodeSpec, beta: Element) -> Result<Vec<u32>> {
    let mut x = beta;
    (0..spec.length())
        .map(|_| {
            let v = spec.field.natural_label(spec.trace(x));
            x = spec.field.mul(x, spec.theta);
            v
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Every `β ∈ F_r`.
    Direct,
    /// One representative per cyclotomic class, weighted by the class size.
    #[default]
    ClassOrbit,
}

/// `A_w` over all `r` values of `β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub counts: BTreeMap<u64, u64>,
    pub length: u64,
    pub q: u64,
    /// Number of distinct codewords, `r / A_0`.
    pub distinct: u64,
    /// `log_q(distinct)`.
    pub dim: u32,
}

impl WeightDistribution {
    pub fn from_counts(counts: BTreeMap<u64, u64>, length: u64, q: u64) -> Self {
        let total: u64 = counts.values().sum();
        let kernel = counts.get(&0).copied().unwrap_or(0).max(1);
        let distinct = total / kernel;
        let mut dim = 0u32;
        let mut acc = 1u64;
        while acc < distinct {
            acc = acc.saturating_mul(q);
            dim += 1;
        }
        assert_eq!(acc, distinct, "distinct codeword count is not a power of q");
        WeightDistribution { counts, length, q, distinct, dim }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn first_moment(&self) -> u128 {
        self.counts.iter().map(|(&w, &c)| w as u128 * c as u128).sum()
    }

    /// Counts over nonzero `β` (one fewer at weight 0).
    pub fn nonzero_beta(&self) -> BTreeMap<u64, u64> {
        let mut out = self.counts.clone();
        if let Some(c) = out.get_mut(&0) {
            *c -= 1;
            if *c == 0 {
                out.remove(&0);
            }
        }
        out
    }

    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

fn merge_hist(mut a: BTreeMap<u64, u64>, b: BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    for (w, c) in b {
        *a.entry(w).or_default() += c;
    }
    a
}

pub fn brute_weight_distribution(spec: &CodeSpec, strategy: Strategy, exec: Exec) -> WeightDistribution {
    let n = spec.params.length as u64;
    let g = spec.field.group_order() as u64;
    let mut counts = match strategy {
        Strategy::Direct => exec.map_reduce(
            0..g,
            |range| {
                let mut h = BTreeMap::new();
                for e in range {
                    *h.entry(spec.weight_of_log(e as u32)).or_default() += 1;
                }
                h
            },
            merge_hist,
        ),
        Strategy::ClassOrbit => exec.map_reduce(
            0..spec.index(),
            |range| {
                let mut h = BTreeMap::new();
                for i in range {
                    *h.entry(spec.weight_of_log(i as u32)).or_default() += n;
                }
                h
            },
            merge_hist,
        ),
    };
    *counts.entry(0).or_default() += 1;
    WeightDistribution::from_counts(counts, n, spec.params.q as u64)
}

/// `Z(r, a)` by direct enumeration of `x ∈ F_r`, using the Frobenius-sum
/// trace rather than the linear map behind [`CodeSpec::weight`].
pub fn count_z(spec: &CodeSpec, a: Element) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let f = &spec.field;
    let index = spec.index();
    // each nonzero N-th power has exactly N preimages
    let z = 1 + index
        * (0..f.group_order() / index as u32)
            .filter(|&k| {
                let y = f.mul(a, f.from_log(k * index as u32));
                f.rel_trace(y, &spec.sub).is_zero()
            })
            .count() as u64;
    if !(z - 1).is_multiple_of(spec.index()) {
        return Err(Error::ZCountNotDivisible { z_minus_one: z as i128 - 1, index: spec.index() });
    }
    Ok(z)
}

/// `wt = n - (Z - 1)/N`.
pub fn weight_from_z(params: &CodeParams, z: u128) -> Result<u128> {
    let index = params.index as u128;
    let zm1 = z.checked_sub(1).ok_or(Error::ZCountNotDivisible { z_minus_one: -1, index: params.index })?;
    if zm1 % index != 0 {
        return Err(Error::ZCountNotDivisible { z_minus_one: zm1 as i128, index: params.index });
    }
    params
        .length
        .checked_sub(zm1 / index)
        .ok_or(Error::WeightOutOfRange { weight: params.length as i128 - (zm1 / index) as i128, n: params.length })
}

/// `wt = (q-1)(r-1-Nη)/(Nq)`, valid when `F_q^* ⊆ C_0`.
pub fn weight_from_period(params: &CodeParams, eta: Ratio<i128>) -> Result<i128> {
    if !params.subfield_in_first_class() {
        return Err(Error::SubfieldNotInFirstClass);
    }
    let (q, r, big_n) = (params.q as i128, params.r as i128, params.index as i128);
    let w = (Ratio::from(r - 1) - eta * big_n) * (q - 1) / (big_n * q);
    if !w.is_integer() {
        return Err(Error::NonIntegral { num: *w.numer(), den: *w.denom() });
    }
    let w = w.to_integer();
    if w < 0 || w > params.length as i128 {
        return Err(Error::WeightOutOfRange { weight: w, n: params.length });
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dist(pairs: &[(u64, u64)]) -> BTreeMap<u64, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn build_examples() {
        let c = build_code(11, 1, 2, 5).unwrap();
        assert_eq!((c.params.q, c.params.r, c.params.length), (11, 121, 24));
        let c = build_code(7, 1, 2, 6).unwrap();
        assert_eq!((c.params.q, c.params.r, c.params.length), (7, 49, 8));
        let c = build_code(2, 1, 6, 7).unwrap();
        assert_eq!((c.params.q, c.params.r, c.params.length), (2, 64, 9));
        assert!(matches!(build_code(2, 1, 4, 7), Err(Error::IndexDoesNotDivide { .. })));
        assert!(matches!(build_code(2, 1, 30, 3), Err(Error::FieldTooLarge { .. })));
        assert_eq!(CodeParams::new(6, 1, 2, 5).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn degenerate_length_one() {
        let c = build_code(2, 1, 3, 7).unwrap();
        assert_eq!(c.length(), 1);
        let d = brute_weight_distribution(&c, Strategy::Direct, Exec::sequential());
        assert_eq!(d.counts, dist(&[(0, 4), (1, 4)]));
    }

    #[test]
    fn zero_codeword_and_shift() {
        let c = build_code(7, 1, 2, 6).unwrap();
        assert_eq!(codeword(&c, Element::ZERO), vec![0; 8]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let beta = c.field.from_log(rng.random_range(0..48));
            let mut a = codeword(&c, beta);
            let b = codeword(&c, c.field.mul(beta, c.theta));
            a.rotate_left(1);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn example_distributions() {
        let c = build_code(11, 1, 2, 5).unwrap();
        let d = brute_weight_distribution(&c, Strategy::Direct, Exec::sequential());
        assert_eq!(d.counts, dist(&[(0, 1), (22, 120)]));
        assert_eq!(d.dim, 2);
        let c = build_code(3, 2, 2, 8).unwrap();
        let d = brute_weight_distribution(&c, Strategy::Direct, Exec::sequential());
        assert_eq!(d.counts, dist(&[(0, 1), (8, 40), (10, 40)]));
        let c = build_code(17, 1, 2, 8).unwrap();
        let d = brute_weight_distribution(&c, Strategy::ClassOrbit, Exec::sequential());
        assert_eq!(d.counts, dist(&[(0, 1), (32, 144), (36, 144)]));
    }

    #[test]
    fn nonzero_weights_example_6() {
        let c = build_code(7, 1, 2, 6).unwrap();
        let mut hist = BTreeMap::new();
        for e in 0..48 {
            let cw = codeword(&c, c.field.from_log(e));
            *hist.entry(cw.iter().filter(|&&x| x != 0).count()).or_insert(0) += 1;
        }
        assert_eq!(hist, [(6, 24), (8, 24)].into_iter().collect());
        let residues = codeword_residues(&c, Element::ONE).unwrap();
        assert!(residues.iter().all(|&v| v < 7));
    }

    #[test]
    fn z_counts() {
        let c = build_code(11, 1, 2, 5).unwrap();
        for e in [0, 1, 7, 33, 119] {
            let z = count_z(&c, c.field.from_log(e)).unwrap();
            assert_eq!(z, 11);
            assert_eq!(weight_from_z(&c.params, z as u128).unwrap(), 22);
        }
        assert_eq!(count_z(&c, Element::ZERO), Err(Error::ZeroElement));
        assert_eq!(weight_from_z(&c.params, 121).unwrap(), 0);
        assert!(weight_from_z(&c.params, 12).is_err());

        // Z is a class function
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = build_code(13, 1, 2, 7).unwrap();
        for _ in 0..10 {
            let i = rng.random_range(0..7u32);
            let a = c.field.from_log(i + 7 * rng.random_range(0..24u32));
            let b = c.field.from_log(i + 7 * rng.random_range(0..24u32));
            assert_eq!(count_z(&c, a), count_z(&c, b));
        }

        let c = build_code(7, 1, 2, 6).unwrap();
        let weights: std::collections::BTreeSet<u128> = (0..6)
            .map(|e| weight_from_z(&c.params, count_z(&c, c.field.from_log(e)).unwrap() as u128).unwrap())
            .collect();
        assert_eq!(weights, [6, 8].into_iter().collect());

        let c = build_code(2, 1, 6, 7).unwrap();
        let weights: std::collections::BTreeSet<u128> = (0..7)
            .map(|e| weight_from_z(&c.params, count_z(&c, c.field.from_log(e)).unwrap() as u128).unwrap())
            .collect();
        assert_eq!(weights, [2, 4, 6].into_iter().collect());
    }

    #[test]
    fn period_weights() {
        // (r-1)/(q-1) = 12 for r = 11^2, so F_11^* is not inside C_0 when N = 5
        let p = CodeParams::new(11, 1, 2, 5).unwrap();
        assert_eq!(weight_from_period(&p, Ratio::from(-1)), Err(Error::SubfieldNotInFirstClass));
        // r = 19^2: η_0 = 15 gives the weight of the lone class
        let p = CodeParams::new(19, 1, 2, 5).unwrap();
        assert_eq!(weight_from_period(&p, Ratio::from(15)).unwrap(), 18 * (360 - 75) / 95);

        // q = 16, m = 5: N = 5 divides (r-1)/(q-1) = 69905
        let p = CodeParams::new(2, 4, 5, 5).unwrap();
        let (q, r, root) = (16i128, 1i128 << 20, 1i128 << 10);
        let mean = Ratio::new(-1, 5);
        assert_eq!(weight_from_period(&p, mean).unwrap(), 16i128.pow(4) * 15 / 5);
        let low = Ratio::new(-1 - 4 * root, 5);
        assert_eq!(weight_from_period(&p, low).unwrap(), (q - 1) * (r + 4 * root) / (5 * q));
        let high = Ratio::new(-1 + root, 5);
        assert_eq!(weight_from_period(&p, high).unwrap(), (q - 1) * (r - root) / (5 * q));
        assert!(matches!(weight_from_period(&p, Ratio::from(0)), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn class_orbit_matches_direct_and_moments() {
        for (p, s, m, n) in
            [(2u64, 1u32, 6u32, 7u64), (7, 1, 2, 6), (3, 1, 4, 8), (5, 1, 3, 2), (2, 2, 3, 3), (13, 1, 2, 7)]
        {
            let c = build_code(p, s, m, n).unwrap();
            let a = brute_weight_distribution(&c, Strategy::Direct, Exec::sequential());
            let b = brute_weight_distribution(&c, Strategy::ClassOrbit, Exec::auto());
            assert_eq!(a, b);
            assert_eq!(a.total() as u128, c.params.r);
            assert_eq!(a.first_moment(), c.params.first_moment());
        }
    }

    fn small_code() -> impl PStrategy<Value = (u64, u32, u32, u64)> {
        use proptest::prelude::*;
        let fields = [
            (2u64, 1u32, 6u32),
            (3, 1, 4),
            (5, 1, 3),
            (7, 1, 2),
            (3, 2, 2),
            (2, 2, 3),
            (13, 1, 2),
            (11, 1, 2),
            (2, 1, 8),
        ];
        proptest::sample::select(fields.to_vec()).prop_flat_map(|(p, s, m)| {
            let r = (p as u128).pow(s * m);
            let divs: Vec<u64> = (2..=12).filter(|&n| (r - 1) % n as u128 == 0).collect();
            proptest::sample::select(divs).prop_map(move |n| (p, s, m, n))
        })
    }

    use proptest::strategy::Strategy as PStrategy;

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config::with_cases(48))]

        #[test]
        fn distribution_identities((p, s, m, n) in small_code()) {
            let spec = build_code(p, s, m, n).unwrap();
            let direct = brute_weight_distribution(&spec, Strategy::Direct, Exec::sequential());
            let orbit = brute_weight_distribution(&spec, Strategy::ClassOrbit, Exec::auto());
            proptest::prop_assert_eq!(direct.total() as u128, spec.params.r);
            proptest::prop_assert_eq!(direct.first_moment(), spec.params.first_moment());
            proptest::prop_assert_eq!(direct, orbit);
        }

        #[test]
        fn weight_invariances((p, s, m, n) in small_code(), e in 0u32..100_000, j in 0u32..1000) {
            let spec = build_code(p, s, m, n).unwrap();
            let f = &spec.field;
            let beta = f.from_log(e % f.group_order());
            let gamma = f.from_log((j % spec.sub.q as u32) * spec.sub.step);
            let w = spec.weight(beta);
            proptest::prop_assert_eq!(spec.weight(f.mul(beta, spec.theta)), w);
            proptest::prop_assert_eq!(spec.weight(f.mul(beta, gamma)), w);
            let mut shifted = codeword(&spec, beta);
            shifted.rotate_left(1);
            proptest::prop_assert_eq!(codeword(&spec, f.mul(beta, spec.theta)), shifted);
            let z = count_z(&spec, beta).unwrap();
            proptest::prop_assert_eq!(weight_from_z(&spec.params, z as u128).unwrap(), w as u128);
        }
    }
}
