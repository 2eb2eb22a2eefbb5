//! The truncated algebra `A(m, s) = F2[x_1..x_s] / (x_1^{m+1}, .., x_s^{m+1})`.
//!
//! Elements are dense bit vectors over the standard monomial basis. A monomial
//! `x_1^{a_1} .. x_s^{a_s}` has rank `a_1 + a_2 (m+1) + .. + a_s (m+1)^{s-1}`,
//! so coordinate 1 is the least significant digit. Variables are numbered from
//! 1 in the public API, matching `x_1 .. x_s`.

use std::collections::HashMap;
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::parity::binom_is_odd;

/// Default cap on `(m+1)^s`: 2^24 basis monomials, i.e. 2 MiB per element.
pub const DEFAULT_BASIS_LIMIT: u64 = 1 << 24;

/// Parameters `(m, s)` of the ring `H*((RP^m)^s; F2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    m: u32,
    s: u32,
}

impl RingSpec {
    pub fn new(m: u32, s: u32) -> Result<Self> {
        Self::with_limit(m, s, DEFAULT_BASIS_LIMIT)
    }

    /// Like [`RingSpec::new`] but with an explicit cap on the basis size.
    pub fn with_limit(m: u32, s: u32, limit: u64) -> Result<Self> {
        if m < 1 || s < 2 {
            return Err(Error::InvalidSpec { m, s });
        }
        match basis_size(m, s) {
            Some(n) if n <= limit && n <= usize::MAX as u64 => Ok(RingSpec { m, s }),
            _ => Err(Error::SpecTooLarge { m, s, limit }),
        }
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Number of basis monomials, `(m+1)^s`.
    #[inline]
    pub fn basis_len(&self) -> usize {
        self.stride(self.s as usize)
    }

    /// Top degree `s·m`.
    #[inline]
    pub fn top_degree(&self) -> u32 {
        self.s * self.m
    }

    /// `(m+1)^i`: rank increment for raising the exponent of `x_{i+1}` by one.
    #[inline]
    pub(crate) fn stride(&self, i: usize) -> usize {
        (self.m as usize + 1).pow(i as u32)
    }

    fn check_var(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.s {
            Err(Error::IndexOutOfRange {
                index: i,
                detail: "variables are numbered 1..=s",
            })
        } else {
            Ok(())
        }
    }

    pub fn rank(&self, mono: &Monomial) -> Result<usize> {
        self.check_exponents(&mono.exponents)?;
        Ok(self.rank_unchecked(&mono.exponents))
    }

    pub fn unrank(&self, rank: usize) -> Result<Monomial> {
        let len = self.basis_len();
        if rank >= len {
            return Err(Error::RankOutOfRange { rank, len });
        }
        Ok(Monomial {
            exponents: self.digits(rank),
        })
    }

    fn check_exponents(&self, exps: &[u32]) -> Result<()> {
        if exps.len() != self.s as usize || exps.iter().any(|&a| a > self.m) {
            return Err(Error::BadExponents {
                exponents: exps.to_vec(),
                m: self.m,
                s: self.s,
            });
        }
        Ok(())
    }

    pub(crate) fn rank_unchecked(&self, exps: &[u32]) -> usize {
        let base = self.m as usize + 1;
        exps.iter().rev().fold(0, |acc, &a| acc * base + a as usize)
    }

    pub(crate) fn digits(&self, mut rank: usize) -> Vec<u32> {
        let base = self.m as usize + 1;
        (0..self.s)
            .map(|_| {
                let d = rank % base;
                rank /= base;
                d as u32
            })
            .collect()
    }

    pub(crate) fn degree_of_rank(&self, mut rank: usize) -> u32 {
        let base = self.m as usize + 1;
        let mut deg = 0;
        while rank > 0 {
            deg += (rank % base) as u32;
            rank /= base;
        }
        deg
    }
}

fn basis_size(m: u32, s: u32) -> Option<u64> {
    (m as u64 + 1).checked_pow(s)
}

/// A basis monomial `x_1^{a_1} .. x_s^{a_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(spec: RingSpec, exponents: Vec<u32>) -> Result<Self> {
        spec.check_exponents(&exponents)?;
        Ok(Monomial { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Parses the canonical text form, e.g. `x1^5*x2^5*x3^4` or `1`.
    pub fn parse(spec: RingSpec, text: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "monomial",
            input: text.to_string(),
        };
        let mut exps = vec![0u32; spec.s as usize];
        let text = text.trim();
        if text != "1" {
            for factor in text.split('*') {
                let factor = factor.trim();
                let rest = factor.strip_prefix('x').ok_or_else(err)?;
                let (var, exp) = match rest.split_once('^') {
                    Some((v, e)) => (v, e.parse::<u32>().map_err(|_| err())?),
                    None => (rest, 1),
                };
                let var: usize = var.parse().map_err(|_| err())?;
                if var == 0 || var > exps.len() || exps[var - 1] != 0 || exp == 0 {
                    return Err(err());
                }
                exps[var - 1] = exp;
            }
        }
        Monomial::new(spec, exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Element of `A(m, s)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    spec: RingSpec,
    bits: Bits,
}

impl Poly {
    pub fn zero(spec: RingSpec) -> Self {
        Poly {
            spec,
            bits: Bits::zeros(spec.basis_len()),
        }
    }

    pub fn one(spec: RingSpec) -> Self {
        let mut p = Self::zero(spec);
        p.bits.set(0, true);
        p
    }

    pub fn monomial(spec: RingSpec, mono: &Monomial) -> Result<Self> {
        let r = spec.rank(mono)?;
        let mut p = Self::zero(spec);
        p.bits.set(r, true);
        Ok(p)
    }

    /// The generator `x_i`, `1 <= i <= s`.
    pub fn var(spec: RingSpec, i: u32) -> Result<Self> {
        spec.check_var(i)?;
        let mut p = Self::zero(spec);
        p.bits.set(spec.stride(i as usize - 1), true);
        Ok(p)
    }

    /// Sum of the basis monomials with the given ranks (repeated ranks cancel).
    pub fn from_ranks(spec: RingSpec, ranks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut p = Self::zero(spec);
        let len = spec.basis_len();
        for r in ranks {
            if r >= len {
                return Err(Error::RankOutOfRange { rank: r, len });
            }
            p.bits.flip(r);
        }
        Ok(p)
    }

    pub(crate) fn from_bits(spec: RingSpec, bits: Bits) -> Self {
        debug_assert_eq!(bits.len(), spec.basis_len());
        Poly { spec, bits }
    }

    #[inline]
    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// Whether the basis monomial of rank `rank` occurs.
    pub fn contains_rank(&self, rank: usize) -> bool {
        rank < self.bits.len() && self.bits.get(rank)
    }

    pub fn contains(&self, mono: &Monomial) -> Result<bool> {
        Ok(self.bits.get(self.spec.rank(mono)?))
    }

    /// Ranks of the monomials present, increasing.
    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.ranks().map(|r| Monomial {
            exponents: self.spec.digits(r),
        })
    }

    pub fn term_count(&self) -> usize {
        self.bits.count_ones()
    }

    /// Common degree of all terms; `None` for non-homogeneous elements, `Some(None)` for zero.
    pub fn homogeneous_degree(&self) -> Option<Option<u32>> {
        let mut degs = self.ranks().map(|r| self.spec.degree_of_rank(r));
        match degs.next() {
            None => Some(None),
            Some(d) => degs.all(|e| e == d).then_some(Some(d)),
        }
    }

    fn same_spec(&self, other: &Poly) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_spec(other)?;
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Ok(Poly::from_bits(self.spec, bits))
    }

    pub fn add_assign(&mut self, other: &Poly) -> Result<()> {
        self.same_spec(other)?;
        self.bits.xor_assign(&other.bits);
        Ok(())
    }

    /// Product in `A(m, s)`.
    ///
    /// Walks the terms of the sparser operand. For a term `x^a` the denser
    /// operand is masked to the monomials whose exponents stay `<= m` after
    /// adding `a`, then shifted by `rank(a)`; in mixed radix the shift adds
    /// exponents digitwise because the mask rules out carries.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_spec(other)?;
        let (sparse, dense) = if self.term_count() <= other.term_count() {
            (self, other)
        } else {
            (other, self)
        };
        let spec = self.spec;
        let n_sparse = sparse.term_count();
        if n_sparse == 0 {
            return Ok(Poly::zero(spec));
        }
        // few pairs: adding exponents directly beats word-level passes
        if dense.term_count() <= 4 * dense.bits.words().len() {
            return Ok(Self::mul_pairwise(sparse, dense));
        }

        let mut masks = DigitMasks::new(spec);
        let mut out = Bits::zeros(spec.basis_len());
        let full = Bits::ones(spec.basis_len());
        for r in sparse.ranks() {
            let exps = spec.digits(r);
            let mut mask: Option<Bits> = None;
            for (i, &a) in exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let d = masks.get(i, spec.m - a);
                match mask.as_mut() {
                    Some(mk) => mk.and_assign(d),
                    None => mask = Some(d.clone()),
                }
            }
            out.xor_masked_shifted(&dense.bits, mask.as_ref().unwrap_or(&full), r);
        }
        Ok(Poly::from_bits(spec, out))
    }

    fn mul_pairwise(a: &Poly, b: &Poly) -> Poly {
        let spec = a.spec;
        let b_terms: Vec<(usize, Vec<u32>)> = b.ranks().map(|r| (r, spec.digits(r))).collect();
        let mut out = Bits::zeros(spec.basis_len());
        for ra in a.ranks() {
            let da = spec.digits(ra);
            for (rb, db) in &b_terms {
                if da.iter().zip(db).all(|(x, y)| x + y <= spec.m) {
                    out.flip(ra + rb);
                }
            }
        }
        Poly::from_bits(spec, out)
    }

    /// `p^2 = sum of squares of its monomials` in characteristic 2.
    pub fn square(&self) -> Poly {
        let spec = self.spec;
        let mut out = Bits::zeros(spec.basis_len());
        for r in self.ranks() {
            if spec.digits(r).iter().all(|&a| 2 * a <= spec.m) {
                out.set(2 * r, true);
            }
        }
        Poly::from_bits(spec, out)
    }

    /// `p^k` by square-and-multiply.
    pub fn pow(&self, mut k: u64) -> Poly {
        let mut result = Poly::one(self.spec);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
                if base.is_zero() {
                    return Poly::zero(self.spec);
                }
            }
        }
        result
    }

    /// Closed form of `(x_i + x_j)^k`: the terms `x_i^t x_j^{k-t}` with
    /// `C(k, t)` odd and both exponents at most `m`.
    pub fn binomial_pow(spec: RingSpec, i: u32, j: u32, k: u64) -> Result<Poly> {
        spec.check_var(i)?;
        spec.check_var(j)?;
        if i >= j {
            return Err(Error::IndexOutOfRange {
                index: i,
                detail: "binomial power needs i < j",
            });
        }
        let m = spec.m as u64;
        let (si, sj) = (spec.stride(i as usize - 1), spec.stride(j as usize - 1));
        let mut p = Poly::zero(spec);
        let lo = k.saturating_sub(m);
        for t in lo..=k.min(m) {
            if binom_is_odd(k, t) {
                p.bits.set(t as usize * si + (k - t) as usize * sj, true);
            }
        }
        Ok(p)
    }

    /// Image under every `x_i -> x`, the map induced by the diagonal.
    pub fn diagonal_restriction(&self) -> UniPoly {
        let m = self.spec.m;
        let mut out = Bits::zeros(m as usize + 1);
        for r in self.ranks() {
            let d = self.spec.degree_of_rank(r);
            if d <= m {
                out.flip(d as usize);
            }
        }
        UniPoly { m, bits: out }
    }

    /// Inclusion into `A(m, s_target)` along the first `s` coordinates.
    ///
    /// With coordinate 1 least significant the ranks do not change.
    pub fn embed(&self, s_target: u32) -> Result<Poly> {
        self.embed_with_limit(s_target, DEFAULT_BASIS_LIMIT)
    }

    pub fn embed_with_limit(&self, s_target: u32, limit: u64) -> Result<Poly> {
        if s_target < self.spec.s {
            return Err(Error::IndexOutOfRange {
                index: s_target,
                detail: "embedding target must have at least s variables",
            });
        }
        let target = RingSpec::with_limit(self.spec.m, s_target, limit)?;
        let mut bits = Bits::zeros(target.basis_len());
        for r in self.ranks() {
            bits.set(r, true);
        }
        Ok(Poly::from_bits(target, bits))
    }

    /// Raw coefficient bits, little-endian by rank, `ceil((m+1)^s / 8)` bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.bits.to_bytes()
    }

    pub fn from_bytes(spec: RingSpec, bytes: &[u8]) -> Result<Poly> {
        let bits = Bits::from_bytes(spec.basis_len(), bytes).ok_or_else(|| Error::Parse {
            what: "binary polynomial",
            input: format!("{} bytes", bytes.len()),
        })?;
        Ok(Poly::from_bits(spec, bits))
    }

    /// Parses a sum of monomials in canonical text form; `0` is the zero element.
    pub fn parse(spec: RingSpec, text: &str) -> Result<Poly> {
        let text = text.trim();
        if text == "0" {
            return Ok(Poly::zero(spec));
        }
        let mut p = Poly::zero(spec);
        for term in text.split('+') {
            let mono = Monomial::parse(spec, term)?;
            p.bits.flip(spec.rank_unchecked(&mono.exponents));
        }
        Ok(p)
    }
}

/// Canonical text: monomials in increasing rank order joined by ` + `, `0` for zero.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, mono) in self.monomials().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{mono}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly(m={}, s={}: {})", self.spec.m, self.spec.s, self)
    }
}

/// Lazily built masks `{ rank : digit_i(rank) <= cap }`.
struct DigitMasks {
    spec: RingSpec,
    cache: HashMap<(usize, u32), Bits>,
}

impl DigitMasks {
    fn new(spec: RingSpec) -> Self {
        DigitMasks {
            spec,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, i: usize, cap: u32) -> &Bits {
        let spec = self.spec;
        self.cache.entry((i, cap)).or_insert_with(|| {
            let len = spec.basis_len();
            let block = spec.stride(i + 1);
            let run = (cap as usize + 1) * spec.stride(i);
            let mut b = Bits::zeros(len);
            let mut start = 0;
            while start < len {
                b.set_range(start, start + run);
                start += block;
            }
            b
        })
    }
}

/// Element of `F2[x] / (x^{m+1})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    m: u32,
    bits: Bits,
}

impl UniPoly {
    pub fn zero(m: u32) -> Self {
        UniPoly {
            m,
            bits: Bits::zeros(m as usize + 1),
        }
    }

    pub fn from_exponents(m: u32, exps: impl IntoIterator<Item = u32>) -> Self {
        let mut p = Self::zero(m);
        for e in exps {
            if e <= m {
                p.bits.flip(e as usize);
            }
        }
        p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn coefficient(&self, exp: u32) -> bool {
        exp <= self.m && self.bits.get(exp as usize)
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter_ones().map(|e| e as u32)
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.m != other.m {
            return Err(Error::SpecMismatch);
        }
        let mut out = UniPoly::zero(self.m);
        for a in self.exponents() {
            for b in other.exponents() {
                if a + b <= self.m {
                    out.bits.flip((a + b) as usize);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, e) in self.exponents().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly(m={}: {})", self.m, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u32, s: u32) -> RingSpec {
        RingSpec::new(m, s).unwrap()
    }

    fn p(sp: RingSpec, text: &str) -> Poly {
        Poly::parse(sp, text).unwrap()
    }

    #[test]
    fn rank_examples() {
        let s22 = spec(2, 2);
        assert_eq!(s22.rank(&Monomial::new(s22, vec![0, 0]).unwrap()).unwrap(), 0);
        assert_eq!(s22.rank(&Monomial::new(s22, vec![2, 2]).unwrap()).unwrap(), 8);
        let s23 = spec(2, 3);
        assert_eq!(
            s23.rank(&Monomial::new(s23, vec![1, 2, 0]).unwrap()).unwrap(),
            1 + 2 * 3
        );
        assert_eq!(s23.unrank(7).unwrap().exponents(), &[1, 2, 0]);
    }

    #[test]
    fn rank_rejects_out_of_range() {
        let sp = spec(2, 2);
        assert!(Monomial::new(sp, vec![3, 0]).is_err());
        assert!(Monomial::new(sp, vec![1]).is_err());
        assert!(sp.unrank(9).is_err());
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for (m, s) in [(1, 5), (2, 3), (4, 3), (6, 2)] {
            let sp = spec(m, s);
            for r in 0..sp.basis_len() {
                assert_eq!(sp.rank(&sp.unrank(r).unwrap()).unwrap(), r);
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(RingSpec::new(0, 2), Err(Error::InvalidSpec { .. })));
        assert!(matches!(RingSpec::new(3, 1), Err(Error::InvalidSpec { .. })));
        assert!(matches!(RingSpec::new(1, 25), Err(Error::SpecTooLarge { .. })));
        assert!(RingSpec::new(1, 24).is_ok());
        assert!(matches!(
            RingSpec::with_limit(3, 4, 255),
            Err(Error::SpecTooLarge { .. })
        ));
        assert!(matches!(
            RingSpec::new(u32::MAX, 40),
            Err(Error::SpecTooLarge { .. })
        ));
    }

    #[test]
    fn add_examples() {
        let sp = spec(3, 2);
        let a = p(sp, "x1 + x1*x2^3 + x2^2");
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(a.add(&Poly::zero(sp)).unwrap(), a);
        assert_eq!(p(sp, "x1").add(&p(sp, "x1 + x2")).unwrap(), p(sp, "x2"));
        assert!(matches!(a.add(&Poly::zero(spec(3, 3))), Err(Error::SpecMismatch)));
    }

    #[test]
    fn mul_examples() {
        let s12 = spec(1, 2);
        let g = p(s12, "x1 + x2");
        assert!(g.mul(&g).unwrap().is_zero());

        let s22 = spec(2, 2);
        assert!(p(s22, "x1^2").mul(&p(s22, "x1")).unwrap().is_zero());

        let s23 = spec(2, 3);
        let a = p(s23, "x1^2*x3 + x1*x3^2");
        let b = p(s23, "x2^2*x3 + x2*x3^2");
        assert_eq!(a.mul(&b).unwrap(), p(s23, "x1^2*x2^2*x3^2"));
        assert!(matches!(a.mul(&Poly::zero(s12)), Err(Error::SpecMismatch)));
    }

    #[test]
    fn pow_examples() {
        let s23 = spec(2, 3);
        let g = p(s23, "x1 + x3");
        assert_eq!(g.pow(0), Poly::one(s23));
        assert_eq!(g.pow(3), p(s23, "x1^2*x3 + x1*x3^2"));
        let s12 = spec(1, 2);
        assert!(p(s12, "x1 + x2").pow(2).is_zero());
    }

    #[test]
    fn binomial_pow_examples() {
        let s53 = spec(5, 3);
        let w = Poly::binomial_pow(s53, 1, 3, 7).unwrap();
        assert!(w.contains(&Monomial::new(s53, vec![5, 0, 2]).unwrap()).unwrap());
        assert!(Poly::binomial_pow(s53, 1, 3, 11).unwrap().is_zero());
        let s23 = spec(2, 3);
        assert_eq!(
            Poly::binomial_pow(s23, 2, 3, 3).unwrap(),
            p(s23, "x2^2*x3 + x2*x3^2")
        );
        assert!(Poly::binomial_pow(s23, 3, 3, 1).is_err());
        assert!(Poly::binomial_pow(s23, 0, 3, 1).is_err());
        assert!(Poly::binomial_pow(s23, 1, 4, 1).is_err());
    }

    #[test]
    fn binomial_pow_matches_pow_everywhere() {
        for (m, s) in [
            (1, 2),
            (1, 4),
            (2, 2),
            (2, 3),
            (3, 3),
            (4, 2),
            (5, 3),
            (6, 2),
            (7, 2),
        ] {
            let sp = spec(m, s);
            for i in 1..=s {
                for j in i + 1..=s {
                    let g = Poly::var(sp, i).unwrap().add(&Poly::var(sp, j).unwrap()).unwrap();
                    for k in 0..=(2 * m as u64 + 1) {
                        assert_eq!(
                            Poly::binomial_pow(sp, i, j, k).unwrap(),
                            g.pow(k),
                            "m={m} s={s} i={i} j={j} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_restriction_examples() {
        let s12 = spec(1, 2);
        assert!(p(s12, "x1 + x2").diagonal_restriction().is_zero());
        assert!(p(s12, "x1*x2").diagonal_restriction().is_zero());
        let s32 = spec(3, 2);
        assert_eq!(
            p(s32, "x1*x2").diagonal_restriction(),
            UniPoly::from_exponents(3, [2])
        );
        assert_eq!(p(s32, "1 + x2").diagonal_restriction().to_string(), "1 + x");
    }

    #[test]
    fn embed_examples() {
        let s22 = spec(2, 2);
        assert!(Poly::zero(s22).embed(3).unwrap().is_zero());
        assert_eq!(p(s22, "x1").embed(3).unwrap(), p(spec(2, 3), "x1"));
        let a = p(s22, "x1*x2 + x2^2 + 1");
        assert_eq!(
            a.embed(4).unwrap().diagonal_restriction(),
            a.diagonal_restriction()
        );
        assert!(matches!(
            p(spec(1, 2), "x1").embed(30),
            Err(Error::SpecTooLarge { .. })
        ));
        assert!(a.embed(1).is_err());
    }

    #[test]
    fn text_and_binary_forms() {
        let sp = spec(2, 3);
        let a = p(sp, "x3 + x1^2*x2 + 1");
        assert_eq!(a.to_string(), "1 + x1^2*x2 + x3");
        assert_eq!(Poly::parse(sp, &a.to_string()).unwrap(), a);
        assert_eq!(Poly::zero(sp).to_string(), "0");
        let bytes = a.to_bytes();
        assert_eq!(bytes.len(), 27usize.div_ceil(8));
        // ranks 0, 5, 9
        assert_eq!(bytes[0], 0b0010_0001);
        assert_eq!(bytes[1], 0b0000_0010);
        assert_eq!(Poly::from_bytes(sp, &bytes).unwrap(), a);
        assert!(Poly::parse(sp, "x4").is_err());
        assert!(Poly::parse(sp, "x1^3").is_err());
        assert!(Poly::parse(sp, "x1*x1").is_err());
        assert!(Poly::parse(sp, "y1").is_err());
    }

    #[test]
    fn homogeneity() {
        let sp = spec(2, 3);
        assert_eq!(p(sp, "x1*x2 + x3^2").homogeneous_degree(), Some(Some(2)));
        assert_eq!(p(sp, "x1 + x3^2").homogeneous_degree(), None);
        assert_eq!(Poly::zero(sp).homogeneous_degree(), Some(None));
    }
}
