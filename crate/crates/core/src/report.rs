//! Bound tables `s·m >= TC_s(RP^m) >= secat >= zcl_s(RP^m)`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::cuplength::{zcl_exact_with, zcl_from_witness, Method, SearchLimits, ZclResult};
use crate::error::{Error, Result};

/// Where a quoted value of `TC_s(RP^m)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TcSource {
    /// `m in {1, 3, 7}`: `TC_s = m(s-1)`.
    Hopf,
    /// `m` even and `s > m`: the whole chain collapses to `s·m`.
    EvenLargeS,
}

impl TcSource {
    pub fn as_str(self) -> &'static str {
        match self {
            TcSource::Hopf => "hopf",
            TcSource::EvenLargeS => "even-large-s",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnownTc {
    pub value: u32,
    pub source: TcSource,
}

/// Published values of `TC_s(RP^m)`; `None` everywhere else.
pub fn known_tc(m: u32, s: u32) -> Option<KnownTc> {
    if s < 2 {
        return None;
    }
    if matches!(m, 1 | 3 | 7) {
        Some(KnownTc {
            value: m * (s - 1),
            source: TcSource::Hopf,
        })
    } else if m.is_multiple_of(2) && s > m {
        Some(KnownTc {
            value: s * m,
            source: TcSource::EvenLargeS,
        })
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Policy {
    Exact,
    WitnessOnly,
}

/// How the `zcl` entry of a row was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZclMethod {
    Exact,
    PaperLowerBound,
    /// `(s-1)·m`, from the `s = 2` value and the extension step.
    LinearLowerBound,
}

impl ZclMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ZclMethod::Exact => "exact",
            ZclMethod::PaperLowerBound => "paper-lower-bound",
            ZclMethod::LinearLowerBound => "linear-lower-bound",
        }
    }
}

impl From<Method> for ZclMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Exact => ZclMethod::Exact,
            Method::PaperLowerBound => ZclMethod::PaperLowerBound,
        }
    }
}

/// One `(m, s)` line of the bound chain. `secat` is only bracketed by `[zcl, upper]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub m: u32,
    pub s: u32,
    pub upper: u32,
    pub zcl: u32,
    pub zcl_method: ZclMethod,
    pub lower_secat: u32,
    pub known_tc: Option<u32>,
    pub tc_source: Option<TcSource>,
    pub equality: bool,
}

impl BoundsRow {
    fn from_zcl(m: u32, s: u32, zcl: u32, method: ZclMethod) -> Self {
        let known = known_tc(m, s);
        let upper = s * m;
        BoundsRow {
            m,
            s,
            upper,
            zcl,
            zcl_method: method,
            lower_secat: zcl,
            known_tc: known.map(|k| k.value),
            tc_source: known.map(|k| k.source),
            equality: zcl == upper,
        }
    }

    /// `zcl <= known_tc <= upper`, `lower_secat = zcl`, and the equality flag.
    pub fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Defect(format!("row m={}, s={}: {what}", self.m, self.s)));
        if self.upper != self.s * self.m {
            return fail(format!("upper bound {} is not s·m", self.upper));
        }
        if self.zcl > self.upper {
            return fail(format!("zcl {} exceeds s·m = {}", self.zcl, self.upper));
        }
        if self.lower_secat != self.zcl {
            return fail("secat lower bound differs from zcl".into());
        }
        if let Some(tc) = self.known_tc {
            if tc < self.zcl || tc > self.upper {
                return fail(format!("known TC {tc} outside [{}, {}]", self.zcl, self.upper));
            }
        }
        if self.equality != (self.zcl == self.upper) {
            return fail("equality flag inconsistent".into());
        }
        Ok(())
    }
}

/// Inputs shared by every row of a report.
#[derive(Debug, Clone, Default)]
pub struct RowContext {
    pub limits: SearchLimits,
    pub cache: Option<Cache>,
}

fn exact_result(m: u32, s: u32, ctx: &RowContext) -> Result<ZclResult> {
    if let Some(cache) = &ctx.cache {
        if let Some(hit) = cache.get(m, s)? {
            if hit.method == Method::Exact {
                return Ok(hit);
            }
        }
    }
    let r = zcl_exact_with(m, s, &ctx.limits)?;
    if let Some(cache) = &ctx.cache {
        cache.put(&r)?;
    }
    Ok(r)
}

pub fn build_row(m: u32, s: u32, policy: Policy, ctx: &RowContext) -> Result<BoundsRow> {
    let row = match policy {
        Policy::Exact => {
            let r = exact_result(m, s, ctx)?;
            BoundsRow::from_zcl(m, s, r.value, ZclMethod::Exact)
        }
        Policy::WitnessOnly => match zcl_from_witness(m, s, ctx.limits.basis_limit)? {
            Some(r) => BoundsRow::from_zcl(m, s, r.value, r.method.into()),
            None => BoundsRow::from_zcl(m, s, (s - 1) * m, ZclMethod::LinearLowerBound),
        },
    };
    row.check()?;
    Ok(row)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub const CSV_HEADER: &str = "m,s,upper,zcl,zcl_method,known_tc,tc_source,equality";

/// Writes rows sorted by `(m, s)`. JSON: one object per line, `null` for absent
/// values. CSV: header line, empty fields for absent values.
pub fn emit<W: Write>(rows: &[BoundsRow], format: Format, out: &mut W) -> Result<()> {
    let mut rows: Vec<&BoundsRow> = rows.iter().collect();
    rows.sort_by_key(|r| (r.m, r.s));
    for r in &rows {
        r.check()?;
    }
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.m,
                    r.s,
                    r.upper,
                    r.zcl,
                    r.zcl_method.as_str(),
                    r.known_tc.map(|v| v.to_string()).unwrap_or_default(),
                    r.tc_source.map(|t| t.as_str()).unwrap_or_default(),
                    r.equality
                )?;
            }
        }
    }
    Ok(())
}
