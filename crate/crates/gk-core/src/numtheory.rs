//! Exact integer arithmetic: factorization, primality, multiplicative orders,
//! primitive prime divisors and the arithmetic lemmas used by the group families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Inputs to [`factorize`] must be strictly below this bound (2⁹⁶).
pub const FACTOR_LIMIT: u128 = 1 << 96;

/// The strong-pseudoprime test with the first thirteen prime bases is
/// deterministic below this bound.
pub const PRIMALITY_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const TRIAL_LIMIT: u32 = 1_000_000;
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// A positive integer together with its prime factorization.
///
/// Factors are kept sorted by prime with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from (prime, exponent) pairs, merging repeats and
    /// checking that every base is prime.
    pub fn from_factors<I: IntoIterator<Item = (u128, u32)>>(pairs: I) -> Result<Self> {
        let mut map: BTreeMap<u128, u32> = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p)? {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            if e > 0 {
                *map.entry(p).or_default() += e;
            }
        }
        Ok(Self {
            factors: map.into_iter().collect(),
        })
    }

    fn from_map(map: BTreeMap<u128, u32>) -> Self {
        Self {
            factors: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn prime_set(&self) -> BTreeSet<u128> {
        self.primes().collect()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn valuation(&self, p: u128) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u32), |acc, &(p, e)| {
                acc * BigUint::from(p).pow(e)
            })
    }

    /// The value when it fits in a `u128`.
    pub fn value_u128(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<u128, u32> = self.factors.iter().copied().collect();
        for &(p, e) in &other.factors {
            *map.entry(p).or_default() += e;
        }
        Self::from_map(map)
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::from_map(self.factors.iter().map(|&(p, e)| (p, e * k)).collect())
    }

    /// Exact quotient; fails when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let mut map: BTreeMap<u128, u32> = self.factors.iter().copied().collect();
        for &(p, e) in &other.factors {
            let slot = map
                .get_mut(&p)
                .filter(|have| **have >= e)
                .ok_or_else(|| Error::InvalidArgument(format!("{other} does not divide {self}")))?;
            *slot -= e;
        }
        Ok(Self::from_map(map))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Witness that a value equals `base^exponent` with `base` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePowerWitness {
    pub base: u128,
    pub exponent: u32,
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(m < FACTOR_LIMIT);
    let (a, b) = (a % m, b % m);
    if a < (1 << 64) && b < (1 << 64) {
        return a * b % m;
    }
    // Horner over 32-bit chunks of b; every intermediate stays below 2^128.
    let mut acc = 0u128;
    for shift in [64u32, 32, 0] {
        let chunk = (b >> shift) & 0xffff_ffff;
        acc = ((acc << 32) % m + a * chunk % m) % m;
    }
    acc
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic primality test, valid below [`PRIMALITY_LIMIT`].
pub fn is_prime(n: u128) -> Result<bool> {
    if n < 2 {
        return Ok(false);
    }
    if n >= PRIMALITY_LIMIT {
        return Err(Error::Overflow(format!("primality of {n}")));
    }
    for &p in &MR_BASES {
        if n == p {
            return Ok(true);
        }
        if n.is_multiple_of(p) {
            return Ok(false);
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Brent's variant of Pollard rho; returns a non-trivial factor of composite `n`.
fn rho(n: u128) -> u128 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u128.. {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u128, 2u128, 1u128);
        let mut r = 1u64;
        let mut q = 1u128;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..r.min(128).min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho exhausts the u128 seed space only for prime inputs")
}

fn split_into(n: u128, out: &mut BTreeMap<u128, u32>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n)? {
        *out.entry(n).or_default() += 1;
        return Ok(());
    }
    let d = rho(n);
    split_into(d, out)?;
    split_into(n / d, out)
}

/// Factors `n` by trial division up to 10⁶ followed by Pollard rho.
pub fn factorize(n: u128) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    if n >= FACTOR_LIMIT {
        return Err(Error::Overflow(format!("factorize({n})")));
    }
    let mut map = BTreeMap::new();
    let mut rest = n;
    for &p in small_primes() {
        let p = p as u128;
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            rest /= p;
            *map.entry(p).or_default() += 1;
        }
    }
    if rest > 1 {
        let trial_sq = (TRIAL_LIMIT as u128) * (TRIAL_LIMIT as u128);
        if rest < trial_sq {
            *map.entry(rest).or_default() += 1;
        } else {
            split_into(rest, &mut map)?;
        }
    }
    Ok(Factorization::from_map(map))
}

/// Distinct prime divisors of `n`.
pub fn prime_divisors(n: u128) -> Result<BTreeSet<u128>> {
    Ok(factorize(n)?.prime_set())
}

pub fn is_prime_power(n: u128) -> Result<Option<PrimePowerWitness>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "is_prime_power({n}) needs n >= 2"
        )));
    }
    let f = factorize(n)?;
    Ok(match f.factors() {
        [(p, e)] => Some(PrimePowerWitness {
            base: *p,
            exponent: *e,
        }),
        _ => None,
    })
}

/// `e(r, q)`: the multiplicative order of `q` modulo an odd prime `r`, with
/// `e(2, q) = 1` for `q ≡ 1 (mod 4)` and `2` for `q ≡ 3 (mod 4)`.
pub fn e_order(r: u128, q: u128) -> Result<u64> {
    if !is_prime(r)? {
        return Err(Error::InvalidArgument(format!("{r} is not prime")));
    }
    if q.is_multiple_of(r) {
        return Err(Error::NotCoprime { r, q });
    }
    if r == 2 {
        return Ok(if q % 4 == 1 { 1 } else { 2 });
    }
    let mut n = r - 1;
    for p in factorize(r - 1)?.primes() {
        while n.is_multiple_of(p) && pow_mod(q, n / p, r) == 1 {
            n /= p;
        }
    }
    Ok(n as u64)
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The cyclotomic value Φₙ(q).
pub fn cyclotomic_value(q: u128, n: u32) -> Result<u128> {
    if q < 2 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "cyclotomic_value({q}, {n})"
        )));
    }
    let mut values: BTreeMap<u32, u128> = BTreeMap::new();
    for d in divisors(n) {
        let full = q
            .checked_pow(d)
            .ok_or_else(|| Error::Overflow(format!("{q}^{d}")))?
            - 1;
        let proper: u128 = divisors(d)
            .into_iter()
            .filter(|&e| e < d)
            .map(|e| values[&e])
            .product();
        values.insert(d, full / proper);
    }
    Ok(values[&n])
}

/// Factorization of `qᵈ − 1`, assembled from its cyclotomic factors.
pub fn factor_q_pow_minus_one(q: u128, d: u32) -> Result<Factorization> {
    divisors(d)
        .into_iter()
        .try_fold(Factorization::one(), |acc, e| {
            Ok(acc.mul(&factorize(cyclotomic_value(q, e)?)?))
        })
}

/// Factorization of `qᵈ + 1`.
pub fn factor_q_pow_plus_one(q: u128, d: u32) -> Result<Factorization> {
    factor_q_pow_minus_one(q, 2 * d)?.div(&factor_q_pow_minus_one(q, d)?)
}

/// All primes `r` with `e(r, q) = n`.
pub fn primitive_prime_divisors(q: u128, n: u32) -> Result<BTreeSet<u128>> {
    if q < 2 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "primitive_prime_divisors({q}, {n})"
        )));
    }
    let phi = cyclotomic_value(q, n)?;
    let mut out = BTreeSet::new();
    for r in prime_divisors(phi)? {
        if !q.is_multiple_of(r) && e_order(r, q)? == n as u64 {
            out.insert(r);
        }
    }
    Ok(out)
}

/// Largest `k` with `pᵏ | n`.
pub fn p_adic_valuation(p: u128, n: u128) -> Result<u32> {
    if p < 2 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "p_adic_valuation({p}, {n})"
        )));
    }
    let (mut n, mut k) = (n, 0);
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    Ok(k)
}

/// `v₂(5^ℓ − 1) = 2 + v₂(ℓ)`, cross-checked directly whenever `5^ℓ` fits in a `u128`.
pub fn lte_two_adic_five(l: u32) -> Result<u32> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "lte_two_adic_five needs l >= 1".into(),
        ));
    }
    let formula = 2 + l.trailing_zeros();
    if let Some(power) = 5u128.checked_pow(l) {
        let direct = p_adic_valuation(2, power - 1)?;
        if direct != formula {
            return Err(Error::CheckFailed(format!(
                "v2(5^{l} - 1) = {direct} but the formula gives {formula}"
            )));
        }
    }
    Ok(formula)
}

fn power_checked(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp)
        .filter(|&v| v < FACTOR_LIMIT)
        .ok_or_else(|| Error::Overflow(format!("{base}^{exp}")))
}

/// `q ∓ √(2q) + 1` for `q = 2^(2m+1)`, returned as (minus, plus).
pub fn suzuki_q_pm(m: u32) -> Result<(u128, u128)> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "Suzuki parameter m must be >= 1".into(),
        ));
    }
    let q = power_checked(2, 2 * m + 1)?;
    let s = power_checked(2, m + 1)?;
    Ok((q - s + 1, q + s + 1))
}

/// `q ∓ √(3q) + 1` for `q = 3^(2m+1)`, returned as (minus, plus).
pub fn ree_q_pm(m: u32) -> Result<(u128, u128)> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "Ree parameter m must be >= 1".into(),
        ));
    }
    let q = power_checked(3, 2 * m + 1)?;
    let s = power_checked(3, m + 1)?;
    Ok((q - s + 1, q + s + 1))
}

/// Whether both `q ± √(2q) + 1` are prime powers for `q = 2^(2m+1)`.
pub fn suzuki_both_prime_powers(m: u32) -> Result<bool> {
    let (minus, plus) = suzuki_q_pm(m)?;
    Ok(is_prime_power(minus)?.is_some() && is_prime_power(plus)?.is_some())
}

/// Outcome of [`ree_prime_power_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReeCheck {
    pub minus_is_prime_power: bool,
    pub plus_is_prime_power: bool,
    pub both_prime: bool,
    pub congruence_ok: bool,
    /// Whether 7 divides `Q₊Q₋ = q² − q + 1`.
    pub seven_divides_product: bool,
}

/// For `q = 3^(2m+1)`, checks that each prime-power `Q± = q ± √(3q) + 1` is
/// prime, that both being prime forces `m ≡ 1 (mod 3)`, and that 7 divides
/// `Q₊Q₋` exactly when `m ≢ 1 (mod 3)`.
pub fn ree_prime_power_check(m: u32) -> Result<ReeCheck> {
    let (minus, plus) = ree_q_pm(m)?;
    let wm = is_prime_power(minus)?;
    let wp = is_prime_power(plus)?;
    for (w, v) in [(wm, minus), (wp, plus)] {
        if let Some(w) = w.filter(|w| w.exponent > 1) {
            return Err(Error::CheckFailed(format!(
                "{v} = {}^{} is a proper prime power (m = {m})",
                w.base, w.exponent
            )));
        }
    }
    let both_prime = wm.is_some() && wp.is_some();
    let congruence_ok = !both_prime || m % 3 == 1;
    if !congruence_ok {
        return Err(Error::CheckFailed(format!(
            "both Q± prime but m = {m} is not 1 mod 3"
        )));
    }
    let seven_divides_product = (minus % 7) * (plus % 7) % 7 == 0;
    if seven_divides_product == (m % 3 == 1) {
        return Err(Error::CheckFailed(format!(
            "7-divisibility of Q+Q- wrong for m = {m}"
        )));
    }
    Ok(ReeCheck {
        minus_is_prime_power: wm.is_some(),
        plus_is_prime_power: wp.is_some(),
        both_prime,
        congruence_ok,
        seven_divides_product,
    })
}

/// All `(m, k)` with `m ≤ max_m` and `2^(2m+1) + 1 = 3ᵏ`.
pub fn gerono_solutions(max_m: u32) -> Result<BTreeSet<(u32, u32)>> {
    if max_m == 0 {
        return Err(Error::InvalidArgument(
            "gerono_solutions needs max_m >= 1".into(),
        ));
    }
    let mut out = BTreeSet::new();
    for m in 1..=max_m {
        let mut v = 2u128
            .checked_pow(2 * m + 1)
            .ok_or_else(|| Error::Overflow(format!("2^{}", 2 * m + 1)))?
            + 1;
        let mut k = 0;
        while v % 3 == 0 {
            v /= 3;
            k += 1;
        }
        if v == 1 {
            out.insert((m, k));
        }
    }
    Ok(out)
}

/// Factorization of `n!` by Legendre's formula.
pub fn factorial_factorization(n: u32) -> Factorization {
    let map = small_primes()
        .iter()
        .take_while(|&&p| p <= n)
        .map(|&p| {
            let (mut e, mut pk) = (0u32, p as u64);
            while pk <= n as u64 {
                e += (n as u64 / pk) as u32;
                pk *= p as u64;
            }
            (p as u128, e)
        })
        .collect();
    Factorization::from_map(map)
}

/// Primes up to `n` (inclusive), for `n` at most 10⁶.
pub fn primes_up_to(n: u32) -> Vec<u64> {
    small_primes()
        .iter()
        .take_while(|&&p| p <= n)
        .map(|&p| p as u64)
        .collect()
}
