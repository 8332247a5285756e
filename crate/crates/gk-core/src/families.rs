//! Group identifiers, order formulas, component partitions and prime graphs
//! for the simple groups whose prime graph has at least three components.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::graph::{Pattern, PrimeGraph, Vertex};
use crate::numtheory::{
    cyclotomic_value, factor_q_pow_minus_one, factor_q_pow_plus_one, factorial_factorization,
    factorize, is_prime, is_prime_power, primes_up_to, Factorization,
};

macro_rules! sporadic_names {
    ($($variant:ident => $name:literal, $order:literal, $out:literal;)*) => {
        /// The 26 sporadic simple groups, in order of increasing group order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Sporadic {
            $($variant,)*
        }

        impl Sporadic {
            pub const ALL: [Sporadic; 26] = [$(Sporadic::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Sporadic::$variant => $name,)*
                }
            }

            /// The decimal group order as listed in the ATLAS.
            pub fn atlas_order(self) -> &'static str {
                match self {
                    $(Sporadic::$variant => $order,)*
                }
            }

            /// |Out(S)|.
            pub fn out_order(self) -> u32 {
                match self {
                    $(Sporadic::$variant => $out,)*
                }
            }
        }
    };
}

sporadic_names! {
    M11 => "M11", "7920", 1;
    M12 => "M12", "95040", 2;
    J1 => "J1", "175560", 1;
    M22 => "M22", "443520", 2;
    J2 => "J2", "604800", 2;
    M23 => "M23", "10200960", 1;
    HS => "HS", "44352000", 2;
    J3 => "J3", "50232960", 2;
    M24 => "M24", "244823040", 1;
    McL => "McL", "898128000", 2;
    He => "He", "4030387200", 2;
    Ru => "Ru", "145926144000", 1;
    Suz => "Suz", "448345497600", 2;
    ON => "ON", "460815505920", 2;
    Co3 => "Co3", "495766656000", 1;
    Co2 => "Co2", "42305421312000", 1;
    Fi22 => "Fi22", "64561751654400", 2;
    HN => "HN", "273030912000000", 2;
    Ly => "Ly", "51765179004000000", 1;
    Th => "Th", "90745943887872000", 1;
    Fi23 => "Fi23", "4089470473293004800", 1;
    Co1 => "Co1", "4157776806543360000", 1;
    J4 => "J4", "86775571046077562880", 1;
    Fi24 => "Fi24", "1255205709190661721292800", 2;
    B => "B", "4154781481226426191177580544000000", 1;
    M => "M", "808017424794512875886459904961710757005754368000000000", 1;
}

impl Sporadic {
    /// Conventional typeset name, e.g. `O'N` or `Fi24'`.
    pub fn display_name(self) -> &'static str {
        match self {
            Sporadic::ON => "O'N",
            Sporadic::Fi24 => "Fi24'",
            other => other.name(),
        }
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sporadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '\'' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        Sporadic::ALL
            .into_iter()
            .find(|g| g.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Parse(format!("unknown sporadic group {s:?}")))
    }
}

/// A finite simple group, named by family and parameter.
///
/// Field sizes: `G2(k)` is over 3^k, `F4(k)` over 2^k, `TwoG2(m)` over
/// 3^(2m+1), `TwoF4(m)` and `TwoB2(m)` over 2^(2m+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupId {
    Sporadic(Sporadic),
    Alt(u32),
    Psl2(u64),
    Psl3_4,
    Psu4_3,
    Psu6_2,
    POmegaMinus(u32),
    G2(u32),
    TwoG2(u32),
    F4(u32),
    TwoF4(u32),
    TwoB2(u32),
    E7_2,
    E7_3,
    TwoE6_2,
    E8(u64),
}

impl GroupId {
    /// Checks the parameter constraints of the family.
    pub fn validate(self) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        match self {
            GroupId::Alt(n) if n < 5 => bad(format!("Alt({n}) needs n >= 5")),
            GroupId::Psl2(q) if q < 4 || is_prime_power(q as u128)?.is_none() => {
                bad(format!("PSL2({q}) needs a prime power q >= 4"))
            }
            GroupId::POmegaMinus(p)
                if !(is_prime(p as u128)? && p >= 3 && (p - 1).is_power_of_two()) =>
            {
                bad(format!("POmegaMinus({p}) needs a prime p = 2^m + 1"))
            }
            GroupId::G2(0)
            | GroupId::TwoG2(0)
            | GroupId::F4(0)
            | GroupId::TwoF4(0)
            | GroupId::TwoB2(0) => bad(format!("{self} needs a positive parameter")),
            GroupId::E8(q) if q < 2 || is_prime_power(q as u128)?.is_none() => {
                bad(format!("E8({q}) needs a prime power q"))
            }
            _ => Ok(self),
        }
    }

    /// Human-readable name such as `PSL2(61)` or `2B2(2^7)`.
    pub fn display_name(self) -> String {
        match self {
            GroupId::Sporadic(s) => s.display_name().to_string(),
            GroupId::Alt(n) => format!("Alt{n}"),
            GroupId::Psl2(q) => format!("PSL2({q})"),
            GroupId::Psl3_4 => "PSL3(4)".into(),
            GroupId::Psu4_3 => "PSU4(3)".into(),
            GroupId::Psu6_2 => "PSU6(2)".into(),
            GroupId::POmegaMinus(p) => format!("POmega-{}(3)", 2 * p),
            GroupId::G2(k) => format!("G2(3^{k})"),
            GroupId::TwoG2(m) => format!("2G2(3^{})", 2 * m + 1),
            GroupId::F4(k) => format!("F4(2^{k})"),
            GroupId::TwoF4(m) => format!("2F4(2^{})", 2 * m + 1),
            GroupId::TwoB2(m) => format!("2B2(2^{})", 2 * m + 1),
            GroupId::E7_2 => "E7(2)".into(),
            GroupId::E7_3 => "E7(3)".into(),
            GroupId::TwoE6_2 => "2E6(2)".into(),
            GroupId::E8(q) => format!("E8({q})"),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Sporadic(s) => write!(f, "sporadic:{s}"),
            GroupId::Alt(n) => write!(f, "alt:{n}"),
            GroupId::Psl2(q) => write!(f, "psl2:{q}"),
            GroupId::Psl3_4 => write!(f, "psl3_4"),
            GroupId::Psu4_3 => write!(f, "psu4_3"),
            GroupId::Psu6_2 => write!(f, "psu6_2"),
            GroupId::POmegaMinus(p) => write!(f, "pomega_minus:{p}"),
            GroupId::G2(k) => write!(f, "g2:k={k}"),
            GroupId::TwoG2(m) => write!(f, "2g2:m={m}"),
            GroupId::F4(k) => write!(f, "f4:k={k}"),
            GroupId::TwoF4(m) => write!(f, "2f4:m={m}"),
            GroupId::TwoB2(m) => write!(f, "sz:m={m}"),
            GroupId::E7_2 => write!(f, "e7_2"),
            GroupId::E7_3 => write!(f, "e7_3"),
            GroupId::TwoE6_2 => write!(f, "2e6_2"),
            GroupId::E8(q) => write!(f, "e8:{q}"),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses `family[:param]`, where `param` is `value` or `name=value`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, param) = match s.split_once(':') {
            Some((f, p)) => (f, Some(p)),
            None => (s, None),
        };
        let family = family.to_ascii_lowercase();
        let number = |expected: &[&str]| -> Result<u64> {
            let p = param.ok_or_else(|| Error::Parse(format!("{family} needs a parameter")))?;
            if p.contains(',') {
                return Err(Error::Parse(format!(
                    "{family} takes a single parameter, got {p:?}"
                )));
            }
            let value = match p.split_once('=') {
                Some((name, v)) if expected.contains(&name.trim()) => v,
                Some((name, _)) => {
                    return Err(Error::Parse(format!(
                        "{family} expects parameter {}, got {name:?}",
                        expected.join(" or ")
                    )))
                }
                None => p,
            };
            value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid parameter {p:?} for {family}")))
        };
        let small =
            |v: u64| u32::try_from(v).map_err(|_| Error::Parse(format!("parameter {v} too large")));
        let bare = |id: GroupId| match param {
            None => Ok(id),
            Some(p) => Err(Error::Parse(format!(
                "{family} takes no parameter, got {p:?}"
            ))),
        };
        let id = match family.as_str() {
            "sporadic" => GroupId::Sporadic(
                param
                    .ok_or_else(|| Error::Parse("sporadic needs a group name".into()))?
                    .parse()?,
            ),
            "alt" => GroupId::Alt(small(number(&["n"])?)?),
            "psl2" => GroupId::Psl2(number(&["q"])?),
            "psl3_4" => bare(GroupId::Psl3_4)?,
            "psu4_3" => bare(GroupId::Psu4_3)?,
            "psu6_2" => bare(GroupId::Psu6_2)?,
            "pomega_minus" => GroupId::POmegaMinus(small(number(&["p"])?)?),
            "g2" => GroupId::G2(small(number(&["k"])?)?),
            "2g2" => GroupId::TwoG2(small(number(&["m"])?)?),
            "f4" => GroupId::F4(small(number(&["k"])?)?),
            "2f4" => GroupId::TwoF4(small(number(&["m"])?)?),
            "sz" | "2b2" => GroupId::TwoB2(small(number(&["m"])?)?),
            "e7_2" => bare(GroupId::E7_2)?,
            "e7_3" => bare(GroupId::E7_3)?,
            "2e6_2" => bare(GroupId::TwoE6_2)?,
            "e8" => GroupId::E8(number(&["q"])?),
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        id.validate().map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Parse(m),
            other => other,
        })
    }
}

macro_rules! string_serde {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
            }
        }
    )*};
}

string_serde!(GroupId, Sporadic);

fn prime_power_parts(q: u64) -> Result<(u64, u32)> {
    let w = is_prime_power(q as u128)?
        .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    Ok((w.base as u64, w.exponent))
}

fn power(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("{base}^{exp}")))
}

fn q_power(q: u64, k: u32) -> Result<Factorization> {
    Ok(factorize(q as u128)?.pow(k))
}

fn minus(q: u64, d: u32) -> Result<Factorization> {
    factor_q_pow_minus_one(q as u128, d)
}

fn plus(q: u64, d: u32) -> Result<Factorization> {
    factor_q_pow_plus_one(q as u128, d)
}

fn product(parts: Vec<Factorization>) -> Factorization {
    parts.iter().fold(Factorization::one(), |acc, f| acc.mul(f))
}

fn fact(n: u128) -> Result<Factorization> {
    factorize(n)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Field size of a Lie-type group, where one exists.
pub fn field_size(id: GroupId) -> Result<Option<u64>> {
    Ok(match id {
        GroupId::Psl2(q) | GroupId::E8(q) => Some(q),
        GroupId::G2(k) => Some(power(3, k)?),
        GroupId::F4(k) => Some(power(2, k)?),
        GroupId::TwoG2(m) => Some(power(3, 2 * m + 1)?),
        GroupId::TwoF4(m) | GroupId::TwoB2(m) => Some(power(2, 2 * m + 1)?),
        GroupId::POmegaMinus(_) | GroupId::Psu4_3 | GroupId::E7_3 => Some(3),
        GroupId::Psu6_2 | GroupId::E7_2 | GroupId::TwoE6_2 => Some(2),
        GroupId::Psl3_4 => Some(4),
        GroupId::Sporadic(_) | GroupId::Alt(_) => None,
    })
}

/// The factored order of a simple group, using the built-in catalog for sporadic groups.
pub fn order(id: GroupId) -> Result<Factorization> {
    order_in(Catalog::builtin(), id)
}

/// As [`order`], reading sporadic orders from `catalog` and checking them
/// against the ATLAS decimal value.
pub fn order_in(catalog: &Catalog, id: GroupId) -> Result<Factorization> {
    let id = id.validate()?;
    let q = field_size(id)?;
    let q = q.unwrap_or(0);
    Ok(match id {
        GroupId::Sporadic(s) => {
            let f = catalog.entry(id)?.order.clone();
            if f.value().to_string() != s.atlas_order() {
                return Err(Error::Catalog(format!(
                    "order of {s} does not multiply out to {}",
                    s.atlas_order()
                )));
            }
            f
        }
        GroupId::Alt(n) => factorial_factorization(n).div(&fact(2)?)?,
        GroupId::Psl2(q) => {
            let f = product(vec![q_power(q, 1)?, minus(q, 2)?]);
            f.div(&fact(gcd(2, q - 1) as u128)?)?
        }
        GroupId::Psl3_4 => fact(20_160)?,
        GroupId::Psu4_3 => fact(3_265_920)?,
        GroupId::Psu6_2 => fact(9_196_830_720)?,
        GroupId::POmegaMinus(p) => {
            let mut parts = vec![q_power(3, p * (p - 1))?, plus(3, p)?];
            for i in 1..p {
                parts.push(minus(3, 2 * i)?);
            }
            product(parts).div(&fact(4)?)?
        }
        GroupId::G2(_) => product(vec![q_power(q, 6)?, minus(q, 6)?, minus(q, 2)?]),
        GroupId::TwoG2(_) => product(vec![q_power(q, 3)?, plus(q, 3)?, minus(q, 1)?]),
        GroupId::F4(_) => product(vec![
            q_power(q, 24)?,
            minus(q, 12)?,
            minus(q, 8)?,
            minus(q, 6)?,
            minus(q, 2)?,
        ]),
        GroupId::TwoF4(_) => product(vec![
            q_power(q, 12)?,
            plus(q, 6)?,
            minus(q, 4)?,
            plus(q, 3)?,
            minus(q, 1)?,
        ]),
        GroupId::TwoB2(_) => product(vec![q_power(q, 2)?, plus(q, 2)?, minus(q, 1)?]),
        GroupId::E7_2 | GroupId::E7_3 => {
            let mut parts = vec![q_power(q, 63)?];
            for d in [2, 6, 8, 10, 12, 14, 18] {
                parts.push(minus(q, d)?);
            }
            product(parts).div(&fact(gcd(2, q - 1) as u128)?)?
        }
        GroupId::TwoE6_2 => product(vec![
            q_power(q, 36)?,
            minus(q, 12)?,
            plus(q, 9)?,
            minus(q, 8)?,
            minus(q, 6)?,
            plus(q, 5)?,
            minus(q, 2)?,
        ])
        .div(&fact(gcd(3, q + 1) as u128)?)?,
        GroupId::E8(_) => {
            let mut parts = vec![q_power(q, 120)?];
            for d in [2, 8, 12, 14, 18, 20, 24, 30] {
                parts.push(minus(q, d)?);
            }
            product(parts)
        }
    })
}

/// π(S): the prime divisors of |S|.
pub fn prime_set(id: GroupId) -> Result<BTreeSet<u64>> {
    Ok(order(id)?.primes().map(|p| p as u64).collect())
}

/// One entry of a component description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentEntry {
    /// The component is exactly this set.
    ExplicitPrimes { primes: BTreeSet<u64> },
    /// The component is the set of prime divisors of the expression.
    DivisorsOf {
        expression: String,
        #[serde(serialize_with = "serialize_factorization")]
        value: Factorization,
    },
}

fn serialize_factorization<S: serde::Serializer>(
    f: &Factorization,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&f.value())
}

impl ComponentEntry {
    pub fn primes(&self) -> BTreeSet<u64> {
        match self {
            ComponentEntry::ExplicitPrimes { primes } => primes.clone(),
            ComponentEntry::DivisorsOf { value, .. } => value.primes().map(|p| p as u64).collect(),
        }
    }
}

/// Component description of a prime graph, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSpec {
    pub entries: Vec<ComponentEntry>,
}

impl ComponentSpec {
    pub fn expand(&self) -> Vec<BTreeSet<u64>> {
        self.entries.iter().map(ComponentEntry::primes).collect()
    }
}

fn explicit(primes: &[u64]) -> ComponentEntry {
    ComponentEntry::ExplicitPrimes {
        primes: primes.iter().copied().collect(),
    }
}

fn divisors(expression: impl Into<String>, value: Factorization) -> ComponentEntry {
    ComponentEntry::DivisorsOf {
        expression: expression.into(),
        value,
    }
}

fn divisors_of(expression: impl Into<String>, n: u128) -> Result<ComponentEntry> {
    Ok(divisors(expression, fact(n)?))
}

/// Component rows of sporadic groups with at least three components.
pub const SPORADIC_COMPONENT_TABLE: &[(Sporadic, &[&[u64]])] = &[
    (Sporadic::M11, &[&[2, 3], &[5], &[11]]),
    (Sporadic::HS, &[&[2, 3, 5], &[7], &[11]]),
    (Sporadic::J3, &[&[2, 3, 5], &[17], &[19]]),
    (Sporadic::Co2, &[&[2, 3, 5, 7], &[11], &[23]]),
    (Sporadic::M23, &[&[2, 3, 5, 7], &[11], &[23]]),
    (Sporadic::M24, &[&[2, 3, 5, 7], &[11], &[23]]),
    (Sporadic::Suz, &[&[2, 3, 5, 7], &[11], &[13]]),
    (Sporadic::Th, &[&[2, 3, 5, 7, 13], &[19], &[31]]),
    (Sporadic::Fi23, &[&[2, 3, 5, 7, 11, 13], &[17], &[23]]),
    (
        Sporadic::B,
        &[&[2, 3, 5, 7, 11, 13, 17, 19, 23], &[31], &[47]],
    ),
    (Sporadic::M22, &[&[2, 3], &[5], &[7], &[11]]),
    (Sporadic::J1, &[&[2, 3, 5], &[7], &[11], &[19]]),
    (Sporadic::ON, &[&[2, 3, 5, 7], &[11], &[19], &[31]]),
    (Sporadic::Ly, &[&[2, 3, 5, 7, 11], &[31], &[37], &[67]]),
    (
        Sporadic::Fi24,
        &[&[2, 3, 5, 7, 11, 13], &[17], &[23], &[29]],
    ),
    (
        Sporadic::M,
        &[
            &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 47],
            &[41],
            &[59],
            &[71],
        ],
    ),
    (
        Sporadic::J4,
        &[&[2, 3, 5, 7, 11], &[23], &[29], &[31], &[37], &[43]],
    ),
];

pub fn sporadic_table_row(s: Sporadic) -> Option<Vec<BTreeSet<u64>>> {
    SPORADIC_COMPONENT_TABLE
        .iter()
        .find(|(g, _)| *g == s)
        .map(|(_, rows)| rows.iter().map(|r| r.iter().copied().collect()).collect())
}

/// The table description of the components of Γ(S).
pub fn component_spec(id: GroupId) -> Result<ComponentSpec> {
    component_spec_in(Catalog::builtin(), id)
}

pub fn component_spec_in(catalog: &Catalog, id: GroupId) -> Result<ComponentSpec> {
    let id = id.validate()?;
    let q = field_size(id)?.unwrap_or(0);
    let q128 = q as u128;
    let entries = match id {
        GroupId::Sporadic(s) => match sporadic_table_row(s) {
            Some(rows) => rows
                .into_iter()
                .map(|primes| ComponentEntry::ExplicitPrimes { primes })
                .collect(),
            None => prime_graph_in(catalog, id)?
                .components()
                .into_iter()
                .map(|c| ComponentEntry::ExplicitPrimes {
                    primes: c.iter().filter_map(|v| v.prime()).collect(),
                })
                .collect(),
        },
        GroupId::Alt(n) => {
            let twin = n > 6 && is_prime(n as u128)? && is_prime(n as u128 - 2)?;
            if twin {
                vec![
                    divisors(format!("({}-3)!", n), factorial_factorization(n - 3)),
                    explicit(&[n as u64]),
                    explicit(&[n as u64 - 2]),
                ]
            } else {
                alt_prime_graph(n)?
                    .components()
                    .into_iter()
                    .map(|c| ComponentEntry::ExplicitPrimes {
                        primes: c.iter().filter_map(|v| v.prime()).collect(),
                    })
                    .collect()
            }
        }
        GroupId::Psl2(q) if q % 2 == 0 => {
            vec![
                explicit(&[2]),
                divisors_of("q-1", q128 - 1)?,
                divisors_of("q+1", q128 + 1)?,
            ]
        }
        GroupId::Psl2(q) => {
            if q % 4 == 1 {
                vec![
                    divisors_of("q-1", q128 - 1)?,
                    divisors_of("q", q128)?,
                    divisors_of("(q+1)/2", q128.div_ceil(2))?,
                ]
            } else {
                vec![
                    divisors_of("q+1", q128 + 1)?,
                    divisors_of("q", q128)?,
                    divisors_of("(q-1)/2", (q128 - 1) / 2)?,
                ]
            }
        }
        GroupId::Psl3_4 => vec![
            explicit(&[2]),
            explicit(&[3]),
            explicit(&[5]),
            explicit(&[7]),
        ],
        GroupId::Psu6_2 => vec![explicit(&[2, 3, 5]), explicit(&[7]), explicit(&[11])],
        GroupId::Psu4_3 => component_spec_in(catalog, GroupId::POmegaMinus(3))?.entries,
        GroupId::POmegaMinus(p) => {
            let mut parts = vec![fact(3)?, minus(3, p - 1)?];
            for i in 1..=p - 2 {
                parts.push(minus(3, 2 * i)?);
            }
            let three_p = 3u128
                .checked_pow(p)
                .ok_or_else(|| Error::Overflow(format!("3^{p}")))?;
            vec![
                divisors("3(3^(p-1)-1)prod_{i=1}^{p-2}(3^(2i)-1)", product(parts)),
                divisors_of("(3^(p-1)+1)/2", (three_p / 3).div_ceil(2))?,
                divisors_of("(3^p+1)/4", (three_p + 1) / 4)?,
            ]
        }
        GroupId::G2(_) => vec![
            divisors("q(q^2-1)", product(vec![fact(q128)?, minus(q, 2)?])),
            divisors_of("q^2-q+1", cyclotomic_value(q128, 6)?)?,
            divisors_of("q^2+q+1", cyclotomic_value(q128, 3)?)?,
        ],
        GroupId::TwoG2(m) => {
            let s = power(3, m + 1)? as u128;
            vec![
                divisors("q(q^2-1)", product(vec![fact(q128)?, minus(q, 2)?])),
                divisors_of("q-sqrt(3q)+1", q128 - s + 1)?,
                divisors_of("q+sqrt(3q)+1", q128 + s + 1)?,
            ]
        }
        GroupId::F4(_) => vec![
            divisors(
                "q(q^4-1)(q^6-1)",
                product(vec![fact(q128)?, minus(q, 4)?, minus(q, 6)?]),
            ),
            divisors_of("q^4-q^2+1", cyclotomic_value(q128, 12)?)?,
            divisors_of("q^4+1", cyclotomic_value(q128, 8)?)?,
        ],
        GroupId::TwoF4(m) => {
            let s1 = power(2, m + 1)? as u128;
            let s3 = power(2, 3 * m + 2)? as u128;
            let sq = q128
                .checked_mul(q128)
                .ok_or_else(|| Error::Overflow(format!("{q}^2")))?;
            vec![
                divisors(
                    "q(q^3+1)(q^4-1)",
                    product(vec![fact(q128)?, plus(q, 3)?, minus(q, 4)?]),
                ),
                divisors_of("q^2-sqrt(2q^3)+q-sqrt(2q)+1", sq - s3 + q128 - s1 + 1)?,
                divisors_of("q^2+sqrt(2q^3)+q+sqrt(2q)+1", sq + s3 + q128 + s1 + 1)?,
            ]
        }
        GroupId::TwoB2(m) => {
            let s = power(2, m + 1)? as u128;
            vec![
                explicit(&[2]),
                divisors_of("q-1", q128 - 1)?,
                divisors_of("q-sqrt(2q)+1", q128 - s + 1)?,
                divisors_of("q+sqrt(2q)+1", q128 + s + 1)?,
            ]
        }
        GroupId::E7_2 => vec![
            explicit(&[2, 3, 5, 7, 11, 13, 17, 19, 31, 43]),
            explicit(&[73]),
            explicit(&[127]),
        ],
        GroupId::E7_3 => vec![
            explicit(&[2, 3, 5, 7, 11, 13, 19, 37, 41, 61, 73, 547]),
            explicit(&[757]),
            explicit(&[1093]),
        ],
        GroupId::TwoE6_2 => vec![
            explicit(&[2, 3, 5, 7, 11]),
            explicit(&[13]),
            explicit(&[17]),
            explicit(&[19]),
        ],
        GroupId::E8(q) if matches!(q % 5, 2 | 3) => {
            let mut parts = vec![fact(q128)?];
            for d in [8, 12, 14, 18, 20] {
                parts.push(minus(q, d)?);
            }
            vec![
                divisors("q(q^8-1)(q^12-1)(q^14-1)(q^18-1)(q^20-1)", product(parts)),
                divisors_of("(q^10+q^5+1)/(q^2+q+1)", cyclotomic_value(q128, 15)?)?,
                divisors_of("q^8-q^4+1", cyclotomic_value(q128, 24)?)?,
                divisors_of("(q^10-q^5+1)/(q^2-q+1)", cyclotomic_value(q128, 30)?)?,
            ]
        }
        GroupId::E8(q) => {
            return Err(Error::UnsupportedFamily(format!(
            "E8({q}) with q = 0, 1 or 4 mod 5 has five components whose table row is not modelled"
        )))
        }
    };
    Ok(ComponentSpec { entries })
}

/// The components of Γ(S) as prime sets, in table order.
pub fn component_partition(id: GroupId) -> Result<Vec<BTreeSet<u64>>> {
    Ok(component_spec(id)?.expand())
}

pub fn component_partition_in(catalog: &Catalog, id: GroupId) -> Result<Vec<BTreeSet<u64>>> {
    Ok(component_spec_in(catalog, id)?.expand())
}

/// Γ(Alt_n): odd primes p, q are adjacent iff p + q ≤ n, and 2 ~ p iff p + 4 ≤ n.
pub fn alt_prime_graph(n: u32) -> Result<PrimeGraph> {
    if !(5..=100).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "alt_prime_graph({n}) needs 5 <= n <= 100"
        )));
    }
    let primes = primes_up_to(n);
    let mut edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &r in &primes[i + 1..] {
            let needed = if p == 2 { r + 4 } else { p + r };
            if needed <= n as u64 {
                edges.push((p, r));
            }
        }
    }
    PrimeGraph::from_primes(&primes, &edges)
}

fn clique_graph(id: GroupId, catalog: &Catalog) -> Result<PrimeGraph> {
    let parts = component_partition_in(catalog, id)?;
    PrimeGraph::from_cliques(parts.iter().map(|c| c.iter().map(|&p| Vertex::Prime(p))))
}

fn unknown(id: GroupId, bound: String) -> Error {
    Error::FullGraphUnknown {
        id: id.to_string(),
        bound,
    }
}

/// Γ(S) for the families with fully determined adjacency.
pub fn prime_graph(id: GroupId) -> Result<PrimeGraph> {
    prime_graph_in(Catalog::builtin(), id)
}

pub fn prime_graph_in(catalog: &Catalog, id: GroupId) -> Result<PrimeGraph> {
    let id = id.validate()?;
    match id {
        GroupId::Psl2(_) | GroupId::TwoB2(_) | GroupId::G2(_) => clique_graph(id, catalog),
        GroupId::Alt(n) => alt_prime_graph(n),
        GroupId::POmegaMinus(3) => prime_graph_in(catalog, GroupId::Psu4_3),
        GroupId::POmegaMinus(p) if p != 5 => Err(unknown(id, format!("|pi(S)| >= {}", p + 1))),
        GroupId::F4(k) if k > 1 => Err(unknown(
            id,
            format!(
                "|pi(S)| >= {}, at least three vertices of degree >= 5, at least 12 edges",
                if k == 2 { 8 } else { 11 }
            ),
        )),
        GroupId::TwoF4(m) if m > 1 => Err(unknown(
            id,
            "|pi(S)| >= 8, t(S) <= 5, contains the compact subgraph".into(),
        )),
        GroupId::TwoG2(m) if m > 1 => Err(unknown(id, "t(S) <= 5".into())),
        GroupId::E8(_) => Err(unknown(id, "|pi(S)| >= 16".into())),
        GroupId::E7_2 | GroupId::E7_3 => {
            let parts = component_partition_in(catalog, id)?;
            Err(unknown(
                id,
                format!("components only: {}", render_partition(&parts)),
            ))
        }
        _ => Ok(catalog.entry(id)?.graph.clone()),
    }
}

pub fn render_partition(parts: &[BTreeSet<u64>]) -> String {
    parts
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// |Out(S)| and whether Out(S) is cyclic, where known.
pub fn out_group(id: GroupId) -> Result<Option<(Factorization, bool)>> {
    let id = id.validate()?;
    let f = |n: u64| -> Result<Factorization> { fact(n as u128) };
    Ok(Some(match id {
        GroupId::Sporadic(s) => (f(s.out_order() as u64)?, true),
        GroupId::Alt(6) => (f(4)?, false),
        GroupId::Alt(_) => (f(2)?, true),
        GroupId::Psl2(q) => {
            let (_, e) = prime_power_parts(q)?;
            let d = gcd(2, q - 1);
            (f(d * e as u64)?, gcd(d, e as u64) == 1)
        }
        GroupId::Psl3_4 => (f(12)?, false),
        GroupId::Psu4_3 | GroupId::POmegaMinus(3) => (f(8)?, false),
        GroupId::Psu6_2 => (f(6)?, false),
        GroupId::POmegaMinus(5) => (f(4)?, false),
        GroupId::POmegaMinus(_) => return Ok(None),
        GroupId::G2(k) => (f(2 * k as u64)?, true),
        GroupId::F4(k) => (f(2 * k as u64)?, true),
        GroupId::TwoG2(m) | GroupId::TwoF4(m) | GroupId::TwoB2(m) => (f(2 * m as u64 + 1)?, true),
        GroupId::E7_2 => (Factorization::one(), true),
        GroupId::E7_3 => (f(2)?, true),
        GroupId::TwoE6_2 => (f(6)?, false),
        GroupId::E8(q) => (f(prime_power_parts(q)?.1 as u64)?, true),
    }))
}

/// Infinite or partially known parameter ranges handled at family level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySlice {
    /// PSL2(q), q ≥ 4.
    Psl2,
    /// G2(3^k), k ≥ 1.
    G2,
    /// 2B2(2^(2m+1)), m ≥ 1.
    TwoB2,
    /// 2G2(3^(2m+1)), m ≥ 2.
    TwoG2Large,
    /// 2F4(2^(2m+1)), m ≥ 2.
    TwoF4Large,
    /// F4(2^k), k ≥ 2.
    F4Large,
    /// POmega-_{2p}(3), p = 2^m + 1 ≥ 17.
    POmegaMinusLarge,
    /// E8(q).
    E8,
}

impl FamilySlice {
    pub const ALL: [FamilySlice; 8] = [
        FamilySlice::Psl2,
        FamilySlice::G2,
        FamilySlice::TwoB2,
        FamilySlice::TwoG2Large,
        FamilySlice::TwoF4Large,
        FamilySlice::F4Large,
        FamilySlice::POmegaMinusLarge,
        FamilySlice::E8,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilySlice::Psl2 => "psl2:*",
            FamilySlice::G2 => "g2:*",
            FamilySlice::TwoB2 => "sz:*",
            FamilySlice::TwoG2Large => "2g2:m>=2",
            FamilySlice::TwoF4Large => "2f4:m>=2",
            FamilySlice::F4Large => "f4:k>=2",
            FamilySlice::POmegaMinusLarge => "pomega_minus:p>=17",
            FamilySlice::E8 => "e8:*",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FamilySlice::Psl2 => "PSL2(q), q >= 4",
            FamilySlice::G2 => "G2(3^k), k >= 1",
            FamilySlice::TwoB2 => "2B2(2^(2m+1)), m >= 1",
            FamilySlice::TwoG2Large => "2G2(3^(2m+1)), m >= 2",
            FamilySlice::TwoF4Large => "2F4(2^(2m+1)), m >= 2",
            FamilySlice::F4Large => "F4(2^k), k >= 2",
            FamilySlice::POmegaMinusLarge => "POmega-_{2p}(3), p = 2^m+1 >= 17",
            FamilySlice::E8 => "E8(q)",
        }
    }

    /// Whether a group belongs to this slice.
    pub fn contains(self, id: GroupId) -> bool {
        match (self, id) {
            (FamilySlice::Psl2, GroupId::Psl2(_)) | (FamilySlice::G2, GroupId::G2(_)) => true,
            (FamilySlice::TwoB2, GroupId::TwoB2(_)) | (FamilySlice::E8, GroupId::E8(_)) => true,
            (FamilySlice::TwoG2Large, GroupId::TwoG2(m))
            | (FamilySlice::TwoF4Large, GroupId::TwoF4(m)) => m >= 2,
            (FamilySlice::F4Large, GroupId::F4(k)) => k >= 2,
            (FamilySlice::POmegaMinusLarge, GroupId::POmegaMinus(p)) => p >= 17,
            _ => false,
        }
    }
}

impl fmt::Display for FamilySlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How adjacency inside a family is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CliqueStructure {
    /// Every component is a clique.
    CliqueComponents,
    /// The full graph is tabulated.
    Explicit,
    /// Only components and bounds are known.
    ComponentsOnly,
}

/// "At least `vertices` vertices of degree at least `degree`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    pub vertices: usize,
    pub degree: usize,
}

/// "If Γ(S) has at least `isolated` isolated vertices then |π(S)| ≥ `pi_lower_bound`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsolatedRule {
    pub isolated: usize,
    pub pi_lower_bound: usize,
}

/// Reference to a single group or a family slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyRef {
    Group(GroupId),
    Slice(FamilySlice),
}

/// Bounds on Γ(S) consumed by the recogniser.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyProfile {
    pub subject: String,
    pub component_count: Option<usize>,
    pub pi_lower_bound: usize,
    pub t_lower_bound: Option<usize>,
    pub t_upper_bound: Option<usize>,
    pub edges_lower_bound: usize,
    pub high_degree: Option<DegreeBound>,
    pub required_pattern: Option<String>,
    pub isolated_rule: Option<IsolatedRule>,
    #[serde(serialize_with = "serialize_out")]
    pub out_order: Option<Factorization>,
    pub out_cyclic: Option<bool>,
    pub clique_structure: CliqueStructure,
    pub citation: &'static str,
}

fn serialize_out<S: serde::Serializer>(
    f: &Option<Factorization>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match f {
        Some(f) => s.collect_str(&f.value()),
        None => s.serialize_none(),
    }
}

impl FamilyProfile {
    /// The pattern named by `required_pattern`.
    pub fn pattern(&self) -> Option<Pattern> {
        self.required_pattern
            .as_ref()
            .map(|_| Pattern::two_f4_compact())
    }
}

/// Bounds for a group or a family slice.
pub fn family_profile(r: FamilyRef) -> Result<FamilyProfile> {
    match r {
        FamilyRef::Slice(slice) => Ok(slice_profile(slice)),
        FamilyRef::Group(id) => group_profile(id),
    }
}

fn slice_profile(slice: FamilySlice) -> FamilyProfile {
    let base = FamilyProfile {
        subject: slice.tag().to_string(),
        component_count: Some(3),
        pi_lower_bound: 3,
        t_lower_bound: None,
        t_upper_bound: None,
        edges_lower_bound: 0,
        high_degree: None,
        required_pattern: None,
        isolated_rule: None,
        out_order: None,
        out_cyclic: None,
        clique_structure: CliqueStructure::ComponentsOnly,
        citation: "",
    };
    match slice {
        FamilySlice::Psl2 => FamilyProfile {
            t_lower_bound: Some(3),
            t_upper_bound: Some(3),
            clique_structure: CliqueStructure::CliqueComponents,
            citation: "PSL2(q) has three components, each a clique, from cyclic tori of orders q±1 over gcd(2,q-1) and dihedral involution centralisers",
            ..base
        },
        FamilySlice::G2 => FamilyProfile {
            pi_lower_bound: 4,
            t_lower_bound: Some(3),
            t_upper_bound: Some(3),
            clique_structure: CliqueStructure::CliqueComponents,
            citation: "G2(3^k) prime graph is three cliques (exceptional groups of Lie type, element-order structure)",
            ..base
        },
        FamilySlice::TwoB2 => FamilyProfile {
            component_count: Some(4),
            pi_lower_bound: 4,
            t_lower_bound: Some(4),
            t_upper_bound: Some(4),
            out_cyclic: Some(true),
            clique_structure: CliqueStructure::CliqueComponents,
            citation: "Suzuki groups: order factors q^2, q-1, q±sqrt(2q)+1 are pairwise coprime and each odd factor is a cyclic maximal torus; Out cyclic of order 2m+1",
            ..base
        },
        FamilySlice::TwoG2Large => FamilyProfile {
            pi_lower_bound: 6,
            t_upper_bound: Some(5),
            isolated_rule: Some(IsolatedRule { isolated: 2, pi_lower_bound: 9 }),
            out_cyclic: Some(true),
            citation: "small Ree groups: compact form bounds cocliques by 5; two isolated vertices force q±sqrt(3q)+1 prime, hence m = 1 mod 3 and five odd primes in q^2-1",
            ..base
        },
        FamilySlice::TwoF4Large => FamilyProfile {
            pi_lower_bound: 8,
            t_upper_bound: Some(5),
            edges_lower_bound: 9,
            required_pattern: Some("2f4-compact".into()),
            out_cyclic: Some(true),
            citation: "large Ree groups: compact form with non-empty vertex classes for m >= 2 (Gerono: 2^(2m+1)+1 = 3^k only for m = 1)",
            ..base
        },
        FamilySlice::F4Large => FamilyProfile {
            pi_lower_bound: 8,
            edges_lower_bound: 12,
            high_degree: Some(DegreeBound { vertices: 3, degree: 5 }),
            out_cyclic: Some(true),
            citation: "F4(2^k): |pi| = 8 for q = 4 and >= 11 for k >= 7 by primitive prime divisors; at least three vertices of degree >= 5 for q >= 4",
            ..base
        },
        FamilySlice::POmegaMinusLarge => FamilyProfile {
            pi_lower_bound: 18,
            citation: "POmega-_{2p}(3): primitive prime divisors of 3^(2i)-1 give |pi| >= p+1",
            ..base
        },
        FamilySlice::E8 => FamilyProfile {
            component_count: None,
            pi_lower_bound: 16,
            citation: "E8(q): |pi(S)| >= 16 from primitive prime divisors of the cyclotomic factors of the order",
            out_cyclic: Some(true),
            ..base
        },
    }
}

/// |π(F4(2^k))| lower bound: exact for k ≤ 6 by factoring, 11 beyond.
pub fn f4_pi_lower_bound(k: u32) -> Result<usize> {
    if k <= 6 {
        Ok(order(GroupId::F4(k))?.factors().len())
    } else {
        Ok(11)
    }
}

fn group_profile(id: GroupId) -> Result<FamilyProfile> {
    let id = id.validate()?;
    let out = out_group(id)?;
    let parts = component_spec(id).map(|s| s.expand());
    let pi = match id {
        GroupId::E8(_) => 16,
        GroupId::F4(k) if k > 6 => 11,
        GroupId::POmegaMinus(p) if p > 5 => p as usize + 1,
        _ => order(id)?.factors().len(),
    };
    let mut profile = FamilyProfile {
        subject: id.to_string(),
        component_count: parts.as_ref().ok().map(Vec::len),
        pi_lower_bound: pi,
        t_lower_bound: None,
        t_upper_bound: None,
        edges_lower_bound: 0,
        high_degree: None,
        required_pattern: None,
        isolated_rule: None,
        out_order: out.as_ref().map(|(f, _)| f.clone()),
        out_cyclic: out.as_ref().map(|&(_, c)| c),
        clique_structure: CliqueStructure::ComponentsOnly,
        citation: "standard order formula and outer automorphism group",
    };
    match prime_graph(id) {
        Ok(g) => {
            let t = g.independence_number();
            profile.t_lower_bound = Some(t);
            profile.t_upper_bound = Some(t);
            profile.edges_lower_bound = g.edge_count();
            profile.pi_lower_bound = g.vertex_count();
            profile.clique_structure = match id {
                GroupId::Psl2(_) | GroupId::TwoB2(_) | GroupId::G2(_) => {
                    CliqueStructure::CliqueComponents
                }
                _ => CliqueStructure::Explicit,
            };
        }
        Err(Error::FullGraphUnknown { .. }) => {
            let slice = FamilySlice::ALL.into_iter().find(|s| s.contains(id));
            if let Some(s) = slice {
                let sp = slice_profile(s);
                profile.t_upper_bound = sp.t_upper_bound;
                profile.edges_lower_bound = sp.edges_lower_bound;
                profile.high_degree = sp.high_degree;
                profile.required_pattern = sp.required_pattern;
                profile.isolated_rule = sp.isolated_rule;
                profile.citation = sp.citation;
            }
        }
        Err(e) => return Err(e),
    }
    Ok(profile)
}
