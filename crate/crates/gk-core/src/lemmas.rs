//! Arithmetic and structural lemmas as range checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, GroupId};
use crate::graph::PrimeGraph;
use crate::numtheory;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    Zsigmondy,
    Lte,
    SuzPrimes,
    Suz,
    Ree,
    Gerono,
    POmegaMinus,
    F4,
    Psl2,
    G2,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::Zsigmondy,
        LemmaId::Lte,
        LemmaId::SuzPrimes,
        LemmaId::Suz,
        LemmaId::Ree,
        LemmaId::Gerono,
        LemmaId::POmegaMinus,
        LemmaId::F4,
        LemmaId::Psl2,
        LemmaId::G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Zsigmondy => "zsigmondy",
            LemmaId::Lte => "lte",
            LemmaId::SuzPrimes => "suz_primes",
            LemmaId::Suz => "suz",
            LemmaId::Ree => "2g2",
            LemmaId::Gerono => "2f4",
            LemmaId::POmegaMinus => "2dp",
            LemmaId::F4 => "f4",
            LemmaId::Psl2 => "a1",
            LemmaId::G2 => "g2",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            LemmaId::Zsigmondy => "q^n - 1 has a primitive prime divisor unless (q,n) is (2,1), (3,1) or (2,6), with e(2,q) = 2 for q = 3 mod 4",
            LemmaId::Lte => "v2(5^l - 1) = 2 + v2(l)",
            LemmaId::SuzPrimes => "for q = 2^(2m+1), q - sqrt(2q) + 1 and q + sqrt(2q) + 1 are both prime powers iff m in {1,2}",
            LemmaId::Suz => "Γ(2B2(q)) is four cliques, with four isolated vertices iff m in {1,2}",
            LemmaId::Ree => "for q = 3^(2m+1), a prime-power q ± sqrt(3q) + 1 is prime; both prime forces m = 1 mod 3",
            LemmaId::Gerono => "2^(2m+1) + 1 = 3^k only for (m,k) = (1,2)",
            LemmaId::POmegaMinus => "|pi(POmega-_2p(3))| >= p + 1",
            LemmaId::F4 => "for k >= 2, |pi(F4(2^k))| >= 8 and Γ(F4(2^k)) has at least three vertices of degree at least 5; F4(2) has fewer",
            LemmaId::Psl2 => "Γ(PSL2(q)) is a union of cliques, one per connected component",
            LemmaId::G2 => "Γ(G2(3^k)) consists of three cliques",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            LemmaId::Zsigmondy => "Zsigmondy, Zur Theorie der Potenzreste (1892)",
            LemmaId::Lte => "lifting the exponent lemma for p = 2",
            LemmaId::SuzPrimes | LemmaId::Suz => "Suzuki, On a class of doubly transitive groups (1962): order and maximal tori",
            LemmaId::Ree => "Ree groups of type G2: order factors and maximal tori; Fermat's little theorem modulo 7",
            LemmaId::Gerono => "Gerono, Note sur la resolution en nombres entiers de l'equation x^m = y^n + 1",
            LemmaId::POmegaMinus => "order formula of POmega-_2n(q) and primitive prime divisors of 3^i - 1",
            LemmaId::F4 => "Vasil'ev and Vdovin, criterion for adjacency in the prime graph of a finite simple group",
            LemmaId::Psl2 | LemmaId::G2 => "Williams, Prime graph components of finite groups; Kondrat'ev, prime graph components of finite simple groups",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "gerono" => "2f4",
            "ree" => "2g2",
            "pomega_minus" => "2dp",
            "psl2" => "a1",
            "sz" => "suz",
            other => other,
        };
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name() == alias)
            .ok_or_else(|| Error::Parse(format!("unknown lemma {s:?}")))
    }
}

impl Serialize for LemmaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Range flags; each lemma reads the bounds it needs and defaults the rest.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LemmaRange {
    pub max_m: Option<u32>,
    pub max_q: Option<u64>,
    pub max_n: Option<u32>,
    pub max_k: Option<u32>,
    pub max_l: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub statement: String,
    pub range: String,
    pub passed: bool,
    pub checked: usize,
    pub solutions: Option<Vec<String>>,
    pub failures: Vec<String>,
    pub citation: String,
}

impl LemmaReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "lemma: {}\nstatement: {}\nrange: {}\nresult: {}\nchecked: {}\n",
            self.lemma,
            self.statement,
            self.range,
            if self.passed { "pass" } else { "fail" },
            self.checked
        );
        if let Some(s) = &self.solutions {
            out.push_str(&format!("solutions: {{{}}}\n", s.join(",")));
        }
        for f in &self.failures {
            out.push_str(&format!("failure: {f}\n"));
        }
        out.push_str(&format!("source: {}\n", self.citation));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

struct Tally {
    checked: usize,
    failures: Vec<String>,
    solutions: Option<Vec<String>>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
            solutions: None,
        }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }
}

fn positive<T: PartialOrd + Default + fmt::Display + Copy>(name: &str, v: T) -> Result<T> {
    if v > T::default() {
        Ok(v)
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

fn cliques_per_component(g: &PrimeGraph) -> bool {
    g.components().iter().all(|c| g.is_clique(c))
}

/// Runs `lemma` over its range.
pub fn check_lemma(lemma: LemmaId, range: LemmaRange) -> Result<LemmaReport> {
    let mut t = Tally::new();
    let range_text = match lemma {
        LemmaId::Zsigmondy => {
            let max_q = positive("max-q", range.max_q.unwrap_or(20))?;
            let max_n = positive("max-n", range.max_n.unwrap_or(20))?;
            for q in 2..=max_q {
                for n in 1..=max_n {
                    let ppd = numtheory::primitive_prime_divisors(q as u128, n)?;
                    let exception = matches!((q, n), (2, 1) | (3, 1) | (2, 6));
                    t.check(ppd.is_empty() == exception, || {
                        format!("q = {q}, n = {n}: primitive prime divisors {ppd:?}")
                    });
                    for &r in &ppd {
                        let order = numtheory::e_order(r, q as u128)?;
                        t.check(order == n as u64, || {
                            format!("e({r},{q}) = {order}, not {n}")
                        });
                    }
                }
            }
            format!("2 <= q <= {max_q}, 1 <= n <= {max_n}")
        }
        LemmaId::Lte => {
            let max_l = positive("max-l", range.max_l.unwrap_or(30))?;
            for l in 1..=max_l {
                let v = numtheory::lte_two_adic_five(l)?;
                t.check(v == 2 + l.trailing_zeros(), || format!("l = {l}: v2 = {v}"));
            }
            format!("1 <= l <= {max_l}")
        }
        LemmaId::SuzPrimes => {
            let max_m = positive("max-m", range.max_m.unwrap_or(12))?;
            let mut found = Vec::new();
            for m in 1..=max_m {
                let both = numtheory::suzuki_both_prime_powers(m)?;
                t.check(both == (m <= 2), || {
                    format!("m = {m}: both prime powers = {both}")
                });
                if both {
                    found.push(m.to_string());
                }
            }
            t.solutions = Some(found);
            format!("1 <= m <= {max_m}")
        }
        LemmaId::Suz => {
            let max_m = positive("max-m", range.max_m.unwrap_or(8))?;
            for m in 1..=max_m {
                let g = families::prime_graph(GroupId::TwoB2(m))?;
                let iso = g.isolated_vertices().len();
                t.check(
                    g.component_count() == 4 && cliques_per_component(&g),
                    || format!("m = {m}: components are not four cliques"),
                );
                t.check((iso == 4) == (m <= 2), || {
                    format!("m = {m}: {iso} isolated vertices")
                });
            }
            format!("1 <= m <= {max_m}")
        }
        LemmaId::Ree => {
            let max_m = positive("max-m", range.max_m.unwrap_or(8))?;
            let mut found = Vec::new();
            for m in 1..=max_m {
                match numtheory::ree_prime_power_check(m) {
                    Ok(c) => {
                        t.check(true, String::new);
                        if c.both_prime {
                            found.push(m.to_string());
                        }
                    }
                    Err(Error::CheckFailed(msg)) => t.check(false, || msg),
                    Err(e) => return Err(e),
                }
            }
            t.solutions = Some(found);
            format!("1 <= m <= {max_m}")
        }
        LemmaId::Gerono => {
            let max_m = positive("max-m", range.max_m.unwrap_or(30))?;
            let sols = numtheory::gerono_solutions(max_m)?;
            t.check(sols == BTreeSet::from([(1, 2)]), || {
                format!("solutions {sols:?}")
            });
            t.solutions = Some(sols.iter().map(|(m, k)| format!("({m},{k})")).collect());
            format!("1 <= m <= {max_m}")
        }
        LemmaId::POmegaMinus => {
            let max_n = positive("max-n", range.max_n.unwrap_or(17))?;
            let ps: Vec<u32> = [3, 5, 17, 257]
                .into_iter()
                .filter(|&p| p <= max_n)
                .collect();
            for &p in &ps {
                let pi = families::order(GroupId::POmegaMinus(p))?.factors().len();
                t.check(pi > p as usize, || format!("p = {p}: |pi| = {pi}"));
            }
            format!("p prime, p = 2^a + 1, p <= {max_n}")
        }
        LemmaId::F4 => {
            let max_k = positive("max-k", range.max_k.unwrap_or(6))?;
            let g = families::prime_graph(GroupId::F4(1))?;
            let high = g.degree_sequence().iter().filter(|&&d| d >= 5).count();
            t.check(high < 3, || {
                format!("k = 1: {high} vertices of degree >= 5")
            });
            for k in 2..=max_k {
                let pi = families::f4_pi_lower_bound(k)?;
                t.check(pi >= 8, || format!("k = {k}: |pi| = {pi}"));
            }
            format!("2 <= k <= {max_k}, with F4(2) as the exception")
        }
        LemmaId::Psl2 => {
            let max_q = range.max_q.unwrap_or(1024);
            if max_q < 4 {
                return Err(Error::InvalidArgument(format!(
                    "max-q must be at least 4, got {max_q}"
                )));
            }
            for q in 4..=max_q {
                if numtheory::is_prime_power(q as u128)?.is_none() {
                    continue;
                }
                let g = families::prime_graph(GroupId::Psl2(q))?;
                let parts = families::component_partition(GroupId::Psl2(q))?;
                t.check(
                    cliques_per_component(&g) && g.independence_number() == parts.len(),
                    || format!("q = {q}: components are not cliques"),
                );
            }
            format!("4 <= q <= {max_q}, q a prime power")
        }
        LemmaId::G2 => {
            let max_k = positive("max-k", range.max_k.unwrap_or(5))?;
            for k in 1..=max_k {
                let g = families::prime_graph(GroupId::G2(k))?;
                t.check(
                    g.component_count() == 3 && cliques_per_component(&g),
                    || format!("k = {k}: not three cliques"),
                );
            }
            format!("1 <= k <= {max_k}")
        }
    };
    Ok(LemmaReport {
        lemma,
        statement: lemma.statement().to_string(),
        range: range_text,
        passed: t.failures.is_empty(),
        checked: t.checked,
        solutions: t.solutions,
        failures: t.failures,
        citation: lemma.citation().to_string(),
    })
}
