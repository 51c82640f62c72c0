//! Complete integer factorization and signed divisor enumeration.
//!
//! The resolvent integers whose divisors parameterize curve points
//! (`d^3+27`, `(T^2+64)(T-8)(T+8)/16`, `(a^4-1024b)/g^2`) are factored with a
//! ladder: trial division below 10^4, then Miller-Rabin plus Pollard rho with
//! Brent cycle detection. Rho work is bounded by an explicit budget measured
//! in iterations; exhausting it yields an error carrying the partial
//! factorization, never a silently wrong answer.

use crate::arith::Integer;
use num_bigint::BigUint;
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::OnceLock;

const TRIAL_LIMIT: u64 = 10_000;

/// Largest bound for which the 12-witness Miller-Rabin set is deterministic.
const MR_DETERMINISTIC_BOUND: &str = "3317044064679887385961981";
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor zero")]
    Zero,
    #[error("factorization incomplete after exhausting the work budget; \
             {} unfactored composite(s) remain", remaining.len())]
    Incomplete {
        sign: i8,
        factored: Vec<(Integer, u32)>,
        remaining: Vec<Integer>,
    },
    #[error("invalid factorization: {0}")]
    Invalid(String),
}

/// Controls for the randomized part of factorization. Runs are reproducible
/// for a fixed seed.
#[derive(Debug, Clone, Copy)]
pub struct FactorOptions {
    /// Total rho iterations allowed per `factorize` call.
    pub rho_budget: u64,
    /// Seed for the rho polynomial parameters.
    pub seed: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            rho_budget: 1_000_000_000,
            seed: 0x9e37_79b9_7f4a_7c15,
        }
    }
}

/// Prime decomposition `sign * prod p_i^(e_i)` with strictly increasing
/// certified primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    sign: i8,
    prime_powers: Vec<(Integer, u32)>,
}

impl Factorization {
    /// Validating constructor: primes strictly increasing, each certified.
    pub fn new(sign: i8, prime_powers: Vec<(Integer, u32)>) -> Result<Self, FactorError> {
        if sign != 1 && sign != -1 {
            return Err(FactorError::Invalid("sign must be +1 or -1".into()));
        }
        for w in prime_powers.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(FactorError::Invalid("primes must strictly increase".into()));
            }
        }
        for (p, e) in &prime_powers {
            if *e == 0 {
                return Err(FactorError::Invalid("exponents must be positive".into()));
            }
            if !is_prime(p) {
                return Err(FactorError::Invalid(format!("{p} is not prime")));
            }
        }
        Ok(Factorization { sign, prime_powers })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn prime_powers(&self) -> &[(Integer, u32)] {
        &self.prime_powers
    }

    /// Reassemble the factored integer.
    pub fn value(&self) -> Integer {
        let mut v = Integer::from(self.sign);
        for (p, e) in &self.prime_powers {
            v *= p.pow(*e);
        }
        v
    }

    /// Number of signed divisors: `2 * prod (e_i + 1)`.
    pub fn signed_divisor_count(&self) -> u64 {
        2 * self
            .prime_powers
            .iter()
            .map(|(_, e)| u64::from(*e) + 1)
            .product::<u64>()
    }

    /// Stream every integer (both signs) dividing the factored value, each
    /// exactly once, by mixed-radix counting over the exponent vectors.
    pub fn signed_divisors(&self) -> SignedDivisors<'_> {
        SignedDivisors {
            factorization: self,
            counters: vec![0; self.prime_powers.len()],
            current: Integer::one(),
            pending_negative: None,
            done: false,
        }
    }

    /// Remove `p^k` from the factorization (used when a resolvent is a known
    /// quotient of an already factored product).
    pub fn remove_prime_power(&mut self, p: &Integer, k: u32) -> Result<(), FactorError> {
        if k == 0 {
            return Ok(());
        }
        match self.prime_powers.iter().position(|(q, _)| q == p) {
            Some(i) if self.prime_powers[i].1 >= k => {
                self.prime_powers[i].1 -= k;
                if self.prime_powers[i].1 == 0 {
                    self.prime_powers.remove(i);
                }
                Ok(())
            }
            _ => Err(FactorError::Invalid(format!(
                "{p}^{k} does not divide the factored value"
            ))),
        }
    }
}

pub struct SignedDivisors<'a> {
    factorization: &'a Factorization,
    counters: Vec<u32>,
    current: Integer,
    pending_negative: Option<Integer>,
    done: bool,
}

impl Iterator for SignedDivisors<'_> {
    type Item = Integer;

    fn next(&mut self) -> Option<Integer> {
        if let Some(neg) = self.pending_negative.take() {
            return Some(neg);
        }
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.pending_negative = Some(-&out);
        // advance the exponent counters
        let pp = &self.factorization.prime_powers;
        let mut i = 0;
        loop {
            if i == pp.len() {
                self.done = true;
                break;
            }
            if self.counters[i] < pp[i].1 {
                self.counters[i] += 1;
                self.current *= &pp[i].0;
                break;
            }
            self.current /= pp[i].0.pow(self.counters[i]);
            self.counters[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        let mut primes = Vec::new();
        for p in 2..=n {
            if sieve[p] {
                primes.push(p as u64);
                let mut q = p * p;
                while q <= n {
                    sieve[q] = false;
                    q += p;
                }
            }
        }
        primes
    })
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `u64`.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in MR_WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mr_round(n: &BigUint, d: &BigUint, s: u32, a: &BigUint) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

fn is_prime_biguint(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for p in small_primes() {
        if (n % p).is_zero() {
            return false;
        }
    }
    let d0 = n - 1u32;
    let s = d0.trailing_zeros().unwrap() as u32;
    let d = &d0 >> s;
    for a in MR_WITNESSES {
        if !mr_round(n, &d, s, &BigUint::from(a)) {
            return false;
        }
    }
    static BOUND: OnceLock<BigUint> = OnceLock::new();
    let bound = BOUND.get_or_init(|| MR_DETERMINISTIC_BOUND.parse().unwrap());
    if n < bound {
        return true;
    }
    // beyond the proven range: 64 extra witnesses, seeded from n itself so
    // the certificate is reproducible
    let mut state = n.iter_u64_digits().fold(0u64, |a, d| a ^ d);
    let range = n - 3u32;
    for _ in 0..64 {
        let mut bits = BigUint::zero();
        for _ in 0..(n.bits() / 64 + 1) {
            bits = (bits << 64) | BigUint::from(splitmix64(&mut state));
        }
        let a = (bits % &range) + 2u32;
        if !mr_round(n, &d, s, &a) {
            return false;
        }
    }
    true
}

/// Probabilistic-beyond-10^24 primality certificate; deterministic below.
pub fn is_prime(n: &Integer) -> bool {
    if n.is_negative() {
        return false;
    }
    is_prime_biguint(n.magnitude())
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn spend(&mut self, amount: u64) -> bool {
        self.used = self.used.saturating_add(amount);
        self.used <= self.limit
    }
}

/// Brent-variant Pollard rho on `u64`; returns a nontrivial factor.
fn brent_u64(n: u64, c: u64, budget: &mut Budget) -> Option<u64> {
    let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        if !budget.spend(r) {
            return None;
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            let m = 128.min(r - k);
            for _ in 0..m {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            if !budget.spend(m) {
                return None;
            }
            g = gcd_u64(q, n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        // backtrack one step at a time
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd_u64(b % a, a)
    }
}

/// Brent rho over big integers, for inputs beyond the u64 fast path.
fn brent_biguint(n: &BigUint, c0: u64, budget: &mut Budget) -> Option<BigUint> {
    let c = BigUint::from(c0 % 0xffff + 1);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        if !budget.spend(r) {
            return None;
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            let m = 128.min(r - k);
            for _ in 0..m {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            if !budget.spend(m) {
                return None;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}

/// Find any nontrivial factor of a composite `n`, retrying rho parameters.
fn find_factor(n: &BigUint, opts: &FactorOptions, budget: &mut Budget) -> Option<BigUint> {
    let mut state = opts.seed ^ n.iter_u64_digits().fold(0u64, |a, d| a.rotate_left(7) ^ d);
    if let Some(v) = n.to_u64() {
        for _ in 0..64 {
            if budget.used >= budget.limit {
                return None;
            }
            let c = splitmix64(&mut state) % (v - 2) + 1;
            if let Some(f) = brent_u64(v, c, budget) {
                return Some(BigUint::from(f));
            }
        }
        return None;
    }
    for _ in 0..64 {
        if budget.used >= budget.limit {
            return None;
        }
        let c = splitmix64(&mut state);
        if let Some(f) = brent_biguint(n, c, budget) {
            return Some(f);
        }
    }
    None
}

/// Fast complete factorization of a `u64`, sharing the same ladder.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: BTreeMap<u64, u32> = BTreeMap::new();
    for &p in small_primes() {
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut budget = Budget {
            used: 0,
            limit: u64::MAX,
        };
        while let Some(c) = stack.pop() {
            if c == 1 {
                continue;
            }
            if is_prime_u64(c) {
                *out.entry(c).or_insert(0) += 1;
                continue;
            }
            let f = find_factor(&BigUint::from(c), &FactorOptions::default(), &mut budget)
                .and_then(|f| f.to_u64())
                .expect("u64 rho cannot exhaust an unlimited budget");
            stack.push(f);
            stack.push(c / f);
        }
    }
    out.into_iter().collect()
}

fn factorize_into(
    n: &Integer,
    opts: &FactorOptions,
    budget: &mut Budget,
    map: &mut BTreeMap<Integer, u32>,
) -> Result<(), Vec<Integer>> {
    let mut m = n.magnitude().clone();
    if m.is_one() {
        return Ok(());
    }
    for &p in small_primes() {
        if m.is_one() {
            break;
        }
        while (&m % p).is_zero() {
            *map.entry(Integer::from(p)).or_insert(0) += 1;
            m /= p;
        }
    }
    let mut stack = vec![m];
    let mut leftovers = Vec::new();
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime_biguint(&c) {
            *map.entry(Integer::from(c)).or_insert(0) += 1;
            continue;
        }
        match find_factor(&c, opts, budget) {
            Some(f) => {
                let q = &c / &f;
                stack.push(f);
                stack.push(q);
            }
            None => leftovers.push(Integer::from(c)),
        }
    }
    if leftovers.is_empty() {
        Ok(())
    } else {
        leftovers.extend(stack.into_iter().map(Integer::from));
        Err(leftovers)
    }
}

/// Complete factorization of `n != 0` under a work budget.
pub fn factorize(n: &Integer, opts: &FactorOptions) -> Result<Factorization, FactorError> {
    factorize_product(std::slice::from_ref(n), opts)
}

/// Factorize with default options.
pub fn factorize_default(n: &Integer) -> Result<Factorization, FactorError> {
    factorize(n, &FactorOptions::default())
}

/// Factor a product given by its (nonzero) parts, merging the results.
///
/// Resolvents that split algebraically (`d^3+27 = (d+3)(d^2-3d+9)` and the
/// like) factor much faster piecewise than multiplied out.
pub fn factorize_product(
    parts: &[Integer],
    opts: &FactorOptions,
) -> Result<Factorization, FactorError> {
    let mut sign = 1i8;
    let mut map = BTreeMap::new();
    let mut budget = Budget {
        used: 0,
        limit: opts.rho_budget,
    };
    let mut remaining = Vec::new();
    for part in parts {
        if part.is_zero() {
            return Err(FactorError::Zero);
        }
        if part.is_negative() {
            sign = -sign;
        }
        if let Err(mut left) = factorize_into(part, opts, &mut budget, &mut map) {
            remaining.append(&mut left);
        }
    }
    let factored: Vec<(Integer, u32)> = map.into_iter().collect();
    if remaining.is_empty() {
        Ok(Factorization {
            sign,
            prime_powers: factored,
        })
    } else {
        remaining.sort();
        Err(FactorError::Incomplete {
            sign,
            factored,
            remaining,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn powers(pairs: &[(i64, u32)]) -> Vec<(Integer, u32)> {
        pairs.iter().map(|(p, e)| (int(*p), *e)).collect()
    }

    #[test]
    fn factorize_examples() {
        let f = factorize_default(&int(15652)).unwrap();
        assert_eq!(f.sign(), 1);
        assert_eq!(f.prime_powers(), powers(&[(2, 2), (7, 1), (13, 1), (43, 1)]));

        let f = factorize_default(&int(-1)).unwrap();
        assert_eq!(f.sign(), -1);
        assert!(f.prime_powers().is_empty());

        let f = factorize_default(&int(159744)).unwrap();
        assert_eq!(f.prime_powers(), powers(&[(2, 12), (3, 1), (13, 1)]));

        assert_eq!(factorize_default(&int(0)), Err(FactorError::Zero));
    }

    #[test]
    fn signed_divisor_streams() {
        let f = factorize_default(&int(4)).unwrap();
        let got: BTreeSet<Integer> = f.signed_divisors().collect();
        let want: BTreeSet<Integer> = [1, -1, 2, -2, 4, -4].map(int).into();
        assert_eq!(got, want);
        assert_eq!(f.signed_divisor_count(), 6);

        let f = factorize_default(&int(-1)).unwrap();
        let got: BTreeSet<Integer> = f.signed_divisors().collect();
        assert_eq!(got, [1, -1].map(int).into());

        let f = factorize_default(&int(15652)).unwrap();
        let divs: Vec<Integer> = f.signed_divisors().collect();
        assert_eq!(divs.len(), 48);
        assert_eq!(f.signed_divisor_count(), 48);
        let set: BTreeSet<Integer> = divs.iter().cloned().collect();
        assert_eq!(set.len(), 48, "no duplicates");
        assert!(set.contains(&int(-13)));
        for d in &set {
            assert!((int(15652) % d).is_zero());
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // semiprime with both factors beyond the trial-division bound
        let n = int(1_000_003) * int(1_000_033);
        let opts = FactorOptions {
            rho_budget: 0,
            seed: 1,
        };
        match factorize(&n, &opts) {
            Err(FactorError::Incomplete {
                sign,
                factored,
                remaining,
            }) => {
                assert_eq!(sign, 1);
                assert!(factored.is_empty());
                assert_eq!(remaining, vec![n]);
            }
            other => panic!("expected Incomplete, got {other:?}"),
        }
    }

    #[test]
    fn product_factorization_merges_parts() {
        let parts = [int(-12), int(18)];
        let f = factorize_product(&parts, &FactorOptions::default()).unwrap();
        assert_eq!(f.sign(), -1);
        assert_eq!(f.prime_powers(), powers(&[(2, 3), (3, 3)]));
        assert_eq!(f.value(), int(-216));

        let mut f = f;
        f.remove_prime_power(&int(2), 2).unwrap();
        assert_eq!(f.value(), int(-54));
        assert!(f.remove_prime_power(&int(5), 1).is_err());
    }

    #[test]
    fn primality_agrees_with_trial_division_below_1e6() {
        let n = 1_000_000usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        for p in 2..n {
            if sieve[p] {
                let mut q = p * p;
                while q < n {
                    sieve[q] = false;
                    q += p;
                }
            }
        }
        for (v, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime_u64(v as u64), expected, "disagree at {v}");
        }
        // spot-check the BigInt path against the u64 path
        for v in [999_983u64, 999_979, 4, 2, 1, 0] {
            assert_eq!(is_prime(&Integer::from(v)), is_prime_u64(v));
        }
        assert!(!is_prime(&int(-7)));
    }

    #[test]
    fn large_prime_certificates() {
        assert!(is_prime(&"2305843009213693951".parse().unwrap())); // 2^61-1
        let composite = (Integer::from(2u32).pow(61) - 1u32) * (Integer::from(2u32).pow(31) - 1u32);
        assert!(!is_prime(&composite));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factorize_round_trips(exps in proptest::collection::vec(0u32..3, 5)) {
            let primes = [2i64, 3, 5, 101, 10007];
            let mut expected = Vec::new();
            let mut n = int(1);
            for (p, e) in primes.iter().zip(&exps) {
                if *e > 0 {
                    expected.push((int(*p), *e));
                    n *= int(*p).pow(*e);
                }
            }
            let f = factorize_default(&n).unwrap();
            prop_assert_eq!(f.prime_powers(), &expected[..]);
            prop_assert_eq!(f.value(), n);
        }

        #[test]
        fn divisor_count_matches_formula(a in 0u32..4, b in 0u32..3, c in 0u32..2) {
            let n = int(2).pow(a) * int(3).pow(b) * int(7).pow(c);
            let f = factorize_default(&n).unwrap();
            let divs: Vec<_> = f.signed_divisors().collect();
            prop_assert_eq!(divs.len() as u64, f.signed_divisor_count());
            prop_assert_eq!(f.signed_divisor_count(), 2 * u64::from(a + 1) * u64::from(b + 1) * u64::from(c + 1));
        }
    }
}
