//! Reference computations that avoid the parity shortcut and the generator-word
//! reduction. Shared by the property tests and the acceptance suite.
#![allow(dead_code)]

use zcl_core::{kernel_basis, Poly, RingSpec};

/// `prod_i (x_i + x_s)^{b_i}` by repeated generic multiplication.
pub fn ring_word(spec: RingSpec, b: &[u32]) -> Poly {
    let s = spec.s();
    let top = Poly::var(spec, s).unwrap();
    let mut acc = Poly::one(spec);
    for (i, &e) in b.iter().enumerate() {
        let y = Poly::var(spec, i as u32 + 1).unwrap().add(&top).unwrap();
        for _ in 0..e {
            acc = acc.mul(&y).unwrap();
        }
    }
    acc
}

/// Every nondecreasing vector of `len` entries in `0..=hi` with sum at most `max_total`.
pub fn sorted_words(len: usize, hi: u32, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, lo: u32, hi: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi.min(budget) {
            cur.push(v);
            rec(len, v, hi, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 0, hi, max_total, &mut Vec::new(), &mut out);
    out
}

/// Largest `k` such that some `k` nonzero homogeneous zero-divisors (with
/// repetition) have a nonzero product, by exhaustive search over the kernel.
pub fn brute_force_zcl(spec: RingSpec) -> u32 {
    let mut elements = Vec::new();
    for d in 1..=spec.top_degree() {
        elements.extend(kernel_basis(spec, d).nonzero_elements());
    }

    fn best(elements: &[Poly], start: usize, acc: &Poly, depth: u32) -> u32 {
        let mut top = depth;
        for (n, z) in elements.iter().enumerate().skip(start) {
            let next = acc.mul(z).unwrap();
            if !next.is_zero() {
                top = top.max(best(elements, n, &next, depth + 1));
            }
        }
        top
    }
    best(&elements, 0, &Poly::one(spec), 0)
}
