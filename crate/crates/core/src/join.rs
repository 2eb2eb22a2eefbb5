//! Finite model of the join `J_k(G_s)` of `k+1` copies of `G_s = (Z/2)^{s-1}`.
//!
//! A point is a barycentric expression `sum_l t_l g_l` with exact rational
//! weights. `U_j` is the open set where `t_j > 0`; its components are indexed
//! by the label `g_j`, and `G_s` acts on labels by translation.

use std::collections::BTreeSet;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Weight = Ratio<u64>;

/// Element of `(Z/2)^{s-1}`, stored as a bit mask over the generators `sigma_1..sigma_{s-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    s: u32,
    bits: u32,
}

impl GroupElem {
    pub fn identity(s: u32) -> Self {
        assert!((2..=32).contains(&s), "group rank s-1 must lie in 1..=31");
        GroupElem { s, bits: 0 }
    }

    pub fn from_bits(s: u32, bits: u32) -> Result<Self> {
        if !(2..=32).contains(&s) || bits >> (s - 1) != 0 {
            return Err(Error::IndexOutOfRange {
                index: bits,
                detail: "group element has more than s-1 coordinates",
            });
        }
        Ok(GroupElem { s, bits })
    }

    /// `sigma_i`, `1 <= i <= s-1`.
    pub fn generator(s: u32, i: u32) -> Result<Self> {
        if i == 0 || i >= s {
            return Err(Error::IndexOutOfRange {
                index: i,
                detail: "group generators are numbered 1..=s-1",
            });
        }
        Self::from_bits(s, 1 << (i - 1))
    }

    pub fn all(s: u32) -> impl Iterator<Item = GroupElem> {
        let _ = GroupElem::identity(s);
        (0..1u32 << (s - 1)).map(move |bits| GroupElem { s, bits })
    }

    pub fn order(s: u32) -> usize {
        1 << (s - 1)
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_identity(&self) -> bool {
        self.bits == 0
    }
}

impl std::ops::Add for GroupElem {
    type Output = GroupElem;

    fn add(self, other: GroupElem) -> GroupElem {
        debug_assert_eq!(self.s, other.s);
        GroupElem {
            s: self.s,
            bits: self.bits ^ other.bits,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coord {
    pub t: Weight,
    pub label: Option<GroupElem>,
}

/// A point of `J_k(G_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinPoint {
    s: u32,
    coords: Vec<Coord>,
}

impl JoinPoint {
    pub fn new(s: u32, coords: Vec<Coord>) -> Result<Self> {
        let invalid = |what: &str| Error::Defect(format!("invalid join point: {what}"));
        if coords.is_empty() {
            return Err(invalid("no coordinates"));
        }
        let mut total = Weight::from_integer(0);
        for c in &coords {
            let positive = c.t > Weight::from_integer(0);
            match c.label {
                Some(g) if g.s != s => return Err(invalid("label from another group")),
                Some(_) if !positive => return Err(invalid("label at a zero coordinate")),
                None if positive => return Err(invalid("missing label at a positive coordinate")),
                _ => {}
            }
            total += c.t;
        }
        if total != Weight::from_integer(1) {
            return Err(invalid("weights do not sum to 1"));
        }
        Ok(JoinPoint { s, coords })
    }

    /// The vertex `1·g` in coordinate `j` of `J_k`.
    pub fn vertex(k: usize, j: usize, g: GroupElem) -> Self {
        assert!(j <= k);
        let coords = (0..=k)
            .map(|l| {
                if l == j {
                    Coord {
                        t: Weight::from_integer(1),
                        label: Some(g),
                    }
                } else {
                    Coord {
                        t: Weight::from_integer(0),
                        label: None,
                    }
                }
            })
            .collect();
        JoinPoint { s: g.s, coords }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Join stage: the point has `k+1` coordinates.
    pub fn k(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j > self.k() {
            return Err(Error::IndexOutOfRange {
                index: j as u32,
                detail: "join coordinate beyond k",
            });
        }
        Ok(())
    }
}

/// Diagonal action: every label is translated by `g`, weights untouched.
pub fn act(g: GroupElem, p: &JoinPoint) -> JoinPoint {
    JoinPoint {
        s: p.s,
        coords: p
            .coords
            .iter()
            .map(|c| Coord {
                t: c.t,
                label: c.label.map(|h| g + h),
            })
            .collect(),
    }
}

pub fn in_u(p: &JoinPoint, j: usize) -> Result<bool> {
    p.check_index(j)?;
    Ok(p.coords[j].t > Weight::from_integer(0))
}

/// Label of the component of `U_j` containing `p`.
pub fn component_key(p: &JoinPoint, j: usize) -> Result<GroupElem> {
    if !in_u(p, j)? {
        return Err(Error::IndexOutOfRange {
            index: j as u32,
            detail: "point is not in U_j",
        });
    }
    Ok(p.coords[j].label.expect("positive coordinate carries a label"))
}

/// Point `(1-lambda)·a + lambda·b`; `None` if both ends carry different labels at
/// a coordinate that stays positive.
fn segment_point(a: &JoinPoint, b: &JoinPoint, lambda: Weight) -> Option<JoinPoint> {
    let one = Weight::from_integer(1);
    let zero = Weight::from_integer(0);
    let coords = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(ca, cb)| {
            let t = (one - lambda) * ca.t + lambda * cb.t;
            let label = match (ca.label, cb.label) {
                (Some(x), Some(y)) if x != y && lambda > zero && lambda < one => return None,
                (Some(x), _) if (one - lambda) * ca.t > zero => Some(x),
                (_, Some(y)) if lambda * cb.t > zero => Some(y),
                _ => None,
            };
            Some(Coord { t, label })
        })
        .collect::<Option<Vec<_>>>()?;
    JoinPoint::new(a.s, coords).ok()
}

fn leg_stays_in_component(a: &JoinPoint, b: &JoinPoint, j: usize, key: GroupElem) -> bool {
    // t_j is affine along the leg, so positive ends keep it positive; the
    // sampled parameters check labels and the point invariants.
    (0..=8u64).all(|i| {
        segment_point(a, b, Weight::new(i, 8))
            .is_some_and(|x| in_u(&x, j).unwrap_or(false) && component_key(&x, j).ok() == Some(key))
    })
}

/// Connects two points of the same component of `U_j` inside `U_j`.
///
/// Uses the straight segment when the labels agree wherever both weights are
/// positive, and otherwise the two legs `p -> vertex(g_j) -> q`.
pub fn segment_in_component(p: &JoinPoint, q: &JoinPoint, j: usize) -> Result<bool> {
    if p.s != q.s || p.k() != q.k() {
        return Err(Error::SpecMismatch);
    }
    let key = component_key(p, j)?;
    if component_key(q, j)? != key {
        return Err(Error::Defect(format!(
            "points lie in different components of U_{j}"
        )));
    }
    let conflict = p
        .coords
        .iter()
        .zip(&q.coords)
        .any(|(a, b)| matches!((a.label, b.label), (Some(x), Some(y)) if x != y));
    if !conflict {
        return Ok(leg_stays_in_component(p, q, j, key));
    }
    let v = JoinPoint::vertex(p.k(), j, key);
    Ok(leg_stays_in_component(p, &v, j, key) && leg_stays_in_component(&v, q, j, key))
}

/// Random point of `U_j` whose weights have denominators at most `(k+1)·max_weight`.
pub fn sample_point<R: Rng>(rng: &mut R, s: u32, k: usize, j: usize, max_weight: u64) -> JoinPoint {
    let order = 1u32 << (s - 1);
    let weights: Vec<u64> = (0..=k)
        .map(|l| {
            let lo = u64::from(l == j);
            rng.random_range(lo..=max_weight)
        })
        .collect();
    let total: u64 = weights.iter().sum();
    let coords = weights
        .iter()
        .map(|&w| Coord {
            t: Weight::new(w, total),
            label: (w > 0).then(|| GroupElem {
                s,
                bits: rng.random_range(0..order),
            }),
        })
        .collect();
    JoinPoint::new(s, coords).expect("sampled weights sum to one")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinReport {
    pub s: u32,
    pub k: usize,
    /// Smallest number of distinct component keys seen in any `U_j`.
    pub keys_found: usize,
    pub keys_expected: usize,
    pub transitive: bool,
    pub segment_checks: usize,
    pub segment_checks_passed: usize,
}

impl JoinReport {
    pub fn passed(&self) -> bool {
        self.keys_found == self.keys_expected
            && self.transitive
            && self.segment_checks_passed == self.segment_checks
    }
}

/// Samples `samples` pairs of points per `(s, k)` and checks the component
/// structure of every `U_j`.
pub fn verify_join(s: u32, k: usize, samples: usize, seed: u64) -> Result<JoinReport> {
    if !(2..=17).contains(&s) {
        return Err(Error::InvalidSpec { m: 0, s });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((s as u64) << 32) ^ k as u64);
    let expected = GroupElem::order(s);
    let group: Vec<GroupElem> = GroupElem::all(s).collect();
    let per_j = samples.div_ceil(k + 1).max(1);

    let mut keys_found = usize::MAX;
    let mut transitive = true;
    let mut checks = 0;
    let mut passed = 0;
    for j in 0..=k {
        let mut keys = BTreeSet::new();
        for _ in 0..per_j {
            let p = sample_point(&mut rng, s, k, j, 6);
            let key = component_key(&p, j)?;
            keys.insert(key);

            for &g in &group {
                let moved = act(g, &p);
                if !in_u(&moved, j)? || component_key(&moved, j)? != g + key {
                    transitive = false;
                }
            }

            let mut q = sample_point(&mut rng, s, k, j, 6);
            q.coords[j].label = Some(key);
            checks += 1;
            if segment_in_component(&p, &q, j)? {
                passed += 1;
            }
        }
        keys_found = keys_found.min(keys.len());

        // one orbit, trivial stabilisers
        if let Some(&base) = keys.iter().next() {
            let orbit: BTreeSet<_> = group.iter().map(|&g| g + base).collect();
            transitive &= orbit == keys;
            transitive &= group.iter().filter(|&&g| g + base == base).count() == 1;
        }
    }
    Ok(JoinReport {
        s,
        k,
        keys_found,
        keys_expected: expected,
        transitive,
        segment_checks: checks,
        segment_checks_passed: passed,
    })
}
