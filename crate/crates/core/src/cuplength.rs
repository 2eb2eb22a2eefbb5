//! Zero-divisor cup-length `zcl_s(RP^m)`.
//!
//! The zero-divisors form the ideal generated by `y_i = x_i + x_s`, so a
//! nonzero product of `k` zero-divisors exists iff some word
//! `y_1^{b_1} .. y_{s-1}^{b_{s-1}}` with `sum b = k` is nonzero. Expanding
//! such a word gives the monomials `x_1^{j_1} .. x_{s-1}^{j_{s-1}} x_s^{sum (b_i - j_i)}`
//! with coefficient `prod C(b_i, j_i)`, and distinct `j` give distinct
//! monomials, so there is no cancellation between them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parity::{binom_is_odd, trailing_ones, TwoAdicProfile};
use crate::ring::{Monomial, Poly, RingSpec, DEFAULT_BASIS_LIMIT};

/// Resource caps for the exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Cap on `(m+1)^s` for ring-level witness verification.
    pub basis_limit: u64,
    /// Cap on the number of generator words examined.
    pub max_candidates: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            basis_limit: DEFAULT_BASIS_LIMIT,
            max_candidates: 50_000_000,
        }
    }
}

/// Exponents `b` of a word `prod_i (x_i + x_s)^{b_i}`, `i = 1..s-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    spec: RingSpec,
    exponents: Vec<u32>,
}

impl GeneratorWord {
    pub fn new(spec: RingSpec, exponents: Vec<u32>) -> Result<Self> {
        let m = spec.m();
        let total: u64 = exponents.iter().map(|&b| b as u64).sum();
        if exponents.len() != spec.s() as usize - 1
            || exponents.iter().any(|&b| b > 2 * m)
            || total > spec.top_degree() as u64
        {
            return Err(Error::BadExponents {
                exponents,
                m,
                s: spec.s(),
            });
        }
        Ok(GeneratorWord { spec, exponents })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn length(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// The word as a pivot-form witness with the given certificate.
    pub fn to_witness(&self, certificate: Monomial) -> Witness {
        let s = self.spec.s();
        Witness {
            spec: self.spec,
            factors: self
                .exponents
                .iter()
                .enumerate()
                .filter(|(_, &b)| b > 0)
                .map(|(i, &b)| Factor {
                    i: i as u32 + 1,
                    j: s,
                    exponent: b,
                })
                .collect(),
            certificate,
        }
    }
}

/// Decides whether a generator word is nonzero from binomial parities alone.
///
/// Each coordinate takes the largest `j_i <= min(m, b_i)` with `C(b_i, j_i)`
/// odd, which minimises the leftover `x_s` exponent; the word is nonzero iff
/// that leftover is at most `m`. Returns the surviving monomial.
pub fn word_nonzero(word: &GeneratorWord) -> Option<Monomial> {
    let spec = word.spec;
    let m = spec.m();
    let mut exps = Vec::with_capacity(spec.s() as usize);
    let mut rest = 0u32;
    for &b in &word.exponents {
        let j = (0..=b.min(m)).rev().find(|&j| binom_is_odd(b as u64, j as u64))?;
        exps.push(j);
        rest += b - j;
    }
    if rest > m {
        return None;
    }
    exps.push(rest);
    Some(Monomial::new(spec, exps).expect("exponents bounded by m"))
}

/// One factor `(x_i + x_j)^exponent`, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factor {
    pub i: u32,
    pub j: u32,
    pub exponent: u32,
}

/// A product of linear zero-divisors with a basis monomial claimed to survive in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    spec: RingSpec,
    factors: Vec<Factor>,
    certificate: Monomial,
}

/// Serialized witness: `factors` as `[i, j, e]` triples, certificate in text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub factors: Vec<[u32; 3]>,
    pub certificate: String,
}

impl Witness {
    pub fn new(spec: RingSpec, factors: Vec<Factor>, certificate: Monomial) -> Result<Self> {
        for f in &factors {
            if f.i == 0 || f.i >= f.j || f.j > spec.s() {
                return Err(Error::IndexOutOfRange {
                    index: f.i,
                    detail: "witness factors need 1 <= i < j <= s",
                });
            }
        }
        spec.rank(&certificate)?;
        Ok(Witness {
            spec,
            factors,
            certificate,
        })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn certificate(&self) -> &Monomial {
        &self.certificate
    }

    /// Number of zero-divisor factors, counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|f| f.exponent).sum()
    }

    /// Expands the product in the ring.
    pub fn product(&self) -> Result<Poly> {
        let mut acc = Poly::one(self.spec);
        for f in &self.factors {
            let factor = Poly::binomial_pow(self.spec, f.i, f.j, f.exponent as u64)?;
            acc = acc.mul(&factor)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// Multiplies by `(x_1 + x_{s+1})^m` in the ring with one more variable.
    /// The certificate gains `x_{s+1}^m`.
    pub fn extend(&self) -> Result<Witness> {
        self.extend_with_limit(DEFAULT_BASIS_LIMIT)
    }

    pub fn extend_with_limit(&self, limit: u64) -> Result<Witness> {
        let m = self.spec.m();
        let s = self.spec.s() + 1;
        let spec = RingSpec::with_limit(m, s, limit)?;
        let mut factors = self.factors.clone();
        factors.push(Factor {
            i: 1,
            j: s,
            exponent: m,
        });
        let mut exps = self.certificate.exponents().to_vec();
        exps.push(m);
        Witness::new(spec, factors, Monomial::new(spec, exps)?)
    }

    pub fn to_record(&self) -> WitnessRecord {
        WitnessRecord {
            factors: self.factors.iter().map(|f| [f.i, f.j, f.exponent]).collect(),
            certificate: self.certificate.to_string(),
        }
    }

    pub fn from_record(spec: RingSpec, record: &WitnessRecord) -> Result<Witness> {
        let factors = record
            .factors
            .iter()
            .map(|&[i, j, exponent]| Factor { i, j, exponent })
            .collect();
        Witness::new(spec, factors, Monomial::parse(spec, &record.certificate)?)
    }
}

/// Ring-level check that the certificate monomial occurs in the expanded product.
///
/// Independent of [`word_nonzero`]: it multiplies actual elements.
pub fn verify_witness(w: &Witness) -> Result<bool> {
    let product = w.product()?;
    product.contains(&w.certificate)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Certified maximum from a completed search.
    Exact,
    /// Length of an explicit construction; a lower bound only.
    PaperLowerBound,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::PaperLowerBound => "paper-lower-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZclResult {
    pub m: u32,
    pub s: u32,
    pub value: u32,
    pub method: Method,
    pub witness: Witness,
    /// `s·m - value`.
    pub g: u32,
}

impl ZclResult {
    fn new(m: u32, s: u32, method: Method, witness: Witness) -> Self {
        let value = witness.length();
        ZclResult {
            m,
            s,
            value,
            method,
            witness,
            g: s * m - value,
        }
    }
}

/// Nondecreasing sequences of `len` parts in `[lo, hi]` summing to `total`, lexicographic.
struct SortedWords {
    len: usize,
    hi: u32,
    total: u32,
    stack: Vec<u32>,
    started: bool,
    done: bool,
}

impl SortedWords {
    fn new(len: usize, hi: u32, total: u32) -> Self {
        SortedWords {
            len,
            hi,
            total,
            stack: Vec::with_capacity(len),
            started: false,
            done: false,
        }
    }

    /// Fills positions `from..` with the smallest feasible completion.
    fn fill(&mut self, from: usize) -> bool {
        self.stack.truncate(from);
        let mut used: u32 = self.stack.iter().sum();
        let mut lo = self.stack.last().copied().unwrap_or(0);
        for pos in from..self.len {
            let left = (self.len - pos - 1) as u32;
            let need = self.total - used;
            // smallest v >= lo such that the rest can still absorb need - v
            let v = lo.max(need.saturating_sub(left * self.hi));
            if v > self.hi || v > need || v * (left + 1) > need {
                return false;
            }
            self.stack.push(v);
            used += v;
            lo = v;
        }
        used == self.total
    }
}

impl Iterator for SortedWords {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.fill(0) {
                return Some(self.stack.clone());
            }
            self.done = true;
            return None;
        }
        // bump the rightmost position that can grow, then refill after it
        for pos in (0..self.len.saturating_sub(1)).rev() {
            let candidate = self.stack[pos] + 1;
            self.stack.truncate(pos);
            let used: u32 = self.stack.iter().sum();
            if candidate > self.hi || used + candidate * (self.len - pos) as u32 > self.total {
                continue;
            }
            self.stack.push(candidate);
            if self.fill(pos + 1) {
                return Some(self.stack.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Exact `zcl_s(RP^m)` with default limits.
pub fn zcl_exact(m: u32, s: u32) -> Result<ZclResult> {
    zcl_exact_with(m, s, &SearchLimits::default())
}

/// Exact `zcl_s(RP^m)`: the longest nonzero generator word.
///
/// Lengths are tried from `s·m` downwards; within a length the sorted words are
/// visited in lexicographic order, so the returned witness is the
/// lexicographically smallest sorted word of maximal length.
pub fn zcl_exact_with(m: u32, s: u32, limits: &SearchLimits) -> Result<ZclResult> {
    let spec = RingSpec::with_limit(m, s, limits.basis_limit)?;
    let mut examined: u64 = 0;
    for length in (0..=spec.top_degree()).rev() {
        for b in SortedWords::new(s as usize - 1, 2 * m, length) {
            examined += 1;
            if examined > limits.max_candidates {
                return Err(Error::Undetermined(format!(
                    "search for m={m}, s={s} exceeded {} candidate words at length {length}",
                    limits.max_candidates
                )));
            }
            let word = GeneratorWord::new(spec, b)?;
            if let Some(cert) = word_nonzero(&word) {
                let witness = word.to_witness(cert);
                if !verify_witness(&witness)? {
                    return Err(Error::Defect(format!(
                        "parity criterion accepted {:?} for m={m}, s={s} but the ring product lacks {}",
                        word.exponents(),
                        witness.certificate()
                    )));
                }
                return Ok(ZclResult::new(m, s, Method::Exact, witness));
            }
        }
    }
    // the empty word is always nonzero
    unreachable!("length 0 always succeeds")
}

/// The explicit product of zero-divisors known to be nonzero, if one applies.
///
/// * `m = 2^e - 1`: `(x_i + x_s)^m` for `i < s`, length `m(s-1)`.
/// * otherwise, when `s >= sigma = (m+1)/2^e`: `(x_i + x_sigma)^{m+2^e}` for
///   `i < sigma`, then one `(x_1 + x_t)^m` for each `t = sigma+1..s`; length
///   `s·m - (2^e - 1)`.
/// * `None` when `s < sigma`.
pub fn paper_witness(m: u32, s: u32) -> Result<Option<Witness>> {
    paper_witness_with_limit(m, s, DEFAULT_BASIS_LIMIT)
}

pub fn paper_witness_with_limit(m: u32, s: u32, limit: u64) -> Result<Option<Witness>> {
    let spec = RingSpec::with_limit(m, s, limit)?;
    let profile = TwoAdicProfile::of(m as u64);
    let witness = match profile.sigma {
        None => {
            let factors = (1..s).map(|i| Factor { i, j: s, exponent: m }).collect();
            let mut exps = vec![m; s as usize - 1];
            exps.push(0);
            Witness::new(spec, factors, Monomial::new(spec, exps)?)?
        }
        Some(sigma) if (s as u64) < sigma => return Ok(None),
        Some(sigma) => {
            let sigma = sigma as u32;
            let two_e = 1u32 << trailing_ones(m as u64);
            let base_spec = RingSpec::with_limit(m, sigma, limit)?;
            let factors = (1..sigma)
                .map(|i| Factor {
                    i,
                    j: sigma,
                    exponent: m + two_e,
                })
                .collect();
            let mut exps = vec![m; sigma as usize - 1];
            exps.push((sigma - 1) * two_e);
            let mut w = Witness::new(base_spec, factors, Monomial::new(base_spec, exps)?)?;
            while w.spec.s() < s {
                w = w.extend_with_limit(limit)?;
            }
            w
        }
    };
    if !verify_witness(&witness)? {
        return Err(Error::Defect(format!(
            "explicit witness for m={m}, s={s} does not contain {}",
            witness.certificate()
        )));
    }
    Ok(Some(witness))
}

/// `zcl` lower bound from the explicit construction.
pub fn zcl_from_witness(m: u32, s: u32, limit: u64) -> Result<Option<ZclResult>> {
    Ok(paper_witness_with_limit(m, s, limit)?.map(|w| ZclResult::new(m, s, Method::PaperLowerBound, w)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GBound {
    Exact,
    /// From a `zcl` lower bound, so `G` can only be smaller.
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GValue {
    pub value: u32,
    pub bound: GBound,
}

/// The gap `G(m, s) = s·m - zcl_s(RP^m)`.
pub fn g_value(result: &ZclResult) -> GValue {
    GValue {
        value: result.s * result.m - result.value,
        bound: match result.method {
            Method::Exact => GBound::Exact,
            Method::PaperLowerBound => GBound::UpperBound,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbePoint {
    pub s: u32,
    pub zcl: u32,
    pub g: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GProbe {
    pub m: u32,
    pub e: u32,
    /// `2^e - 1`.
    pub stable_gap: u32,
    pub sequence: Vec<ProbePoint>,
    pub last_g: u32,
    pub reaches_stable_gap: bool,
}

/// Exact `G(m, s)` for `s = 2..=s_max`, checking that it never increases.
pub fn g_stabilization_probe(m: u32, s_max: u32, limits: &SearchLimits) -> Result<GProbe> {
    if s_max < 2 {
        return Err(Error::InvalidSpec { m, s: s_max });
    }
    let e = trailing_ones(m as u64);
    let stable_gap = (1u32 << e) - 1;
    let mut sequence: Vec<ProbePoint> = Vec::new();
    for s in 2..=s_max {
        let r = zcl_exact_with(m, s, limits)?;
        if let Some(prev) = sequence.last() {
            if r.g > prev.g {
                return Err(Error::Defect(format!(
                    "G({m},{s}) = {} exceeds G({m},{}) = {}",
                    r.g, prev.s, prev.g
                )));
            }
        }
        sequence.push(ProbePoint {
            s,
            zcl: r.value,
            g: r.g,
        });
    }
    let last_g = sequence.last().map(|p| p.g).unwrap_or_default();
    Ok(GProbe {
        m,
        e,
        stable_gap,
        sequence,
        last_g,
        reaches_stable_gap: last_g == stable_gap,
    })
}
