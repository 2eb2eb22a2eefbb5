mod support;

use support::oracles::{brute_force_zcl, ring_word, sorted_words};
use zcl_core::{paper_witness, verify_witness, word_nonzero, z_of, zcl_exact, GeneratorWord, Poly, RingSpec};

fn spec(m: u32, s: u32) -> RingSpec {
    RingSpec::new(m, s).unwrap()
}

#[test]
fn criterion_agrees_with_ring_products() {
    for (m, s) in [
        (1, 2),
        (1, 4),
        (2, 2),
        (2, 3),
        (3, 2),
        (3, 3),
        (4, 3),
        (5, 3),
        (2, 4),
    ] {
        let sp = spec(m, s);
        for b in sorted_words(s as usize - 1, 2 * m, sp.top_degree()) {
            let word = GeneratorWord::new(sp, b.clone()).unwrap();
            let product = ring_word(sp, &b);
            match word_nonzero(&word) {
                Some(cert) => {
                    assert!(product.contains(&cert).unwrap(), "m={m} s={s} b={b:?}");
                }
                None => assert!(product.is_zero(), "m={m} s={s} b={b:?}: {product}"),
            }
        }
    }
}

/// Values frozen from an independent dictionary-based expansion of every
/// sorted word over the full ring.
#[test]
fn exact_values() {
    let expected = [
        ((1, 2), 1),
        ((2, 2), 3),
        ((3, 2), 3),
        ((4, 2), 7),
        ((5, 2), 7),
        ((6, 2), 7),
        ((7, 2), 7),
        ((8, 2), 15),
        ((2, 3), 6),
        ((5, 3), 14),
        ((3, 4), 9),
        ((2, 4), 8),
        ((1, 3), 2),
        ((3, 3), 6),
        ((4, 3), 12),
        ((6, 3), 14),
        ((5, 4), 19),
        ((4, 4), 16),
        ((6, 4), 21),
        ((1, 5), 4),
    ];
    for ((m, s), v) in expected {
        assert_eq!(zcl_exact(m, s).unwrap().value, v, "m={m} s={s}");
    }
}

#[test]
fn exact_witness_verifies_and_next_length_fails() {
    for (m, s) in [(2, 3), (3, 3), (4, 3), (5, 3), (6, 2)] {
        let r = zcl_exact(m, s).unwrap();
        assert!(verify_witness(&r.witness).unwrap());
        let sp = spec(m, s);
        for b in sorted_words(s as usize - 1, 2 * m, r.value + 1) {
            if b.iter().sum::<u32>() == r.value + 1 {
                assert!(ring_word(sp, &b).is_zero(), "m={m} s={s} b={b:?}");
            }
        }
    }
}

#[test]
fn closed_formula_at_two_factors() {
    for m in 1..=8 {
        assert_eq!(zcl_exact(m, 2).unwrap().value, (1 << z_of(m as u64)) - 1, "m={m}");
    }
}

#[test]
fn linear_lower_bound_and_strictness() {
    for m in 1..=6u32 {
        for s in 2..=4u32 {
            let v = zcl_exact(m, s).unwrap().value;
            assert!(v >= (s - 1) * m, "m={m} s={s}");
            if !(m + 1).is_power_of_two() {
                assert!(v > (s - 1) * m, "m={m} s={s}");
            }
        }
    }
}

#[test]
fn extension_step_keeps_products_nonzero() {
    for (m, s) in [(1, 2), (2, 2), (2, 3), (3, 3), (4, 2), (5, 3), (6, 2)] {
        let w = zcl_exact(m, s).unwrap().witness;
        let ext = w.extend().unwrap();
        assert_eq!(ext.length(), w.length() + m);
        assert!(verify_witness(&ext).unwrap());
        // same thing by hand: embed the product, multiply by (x_1 + x_{s+1})^m
        let big = spec(m, s + 1);
        let z = w.product().unwrap().embed(s + 1).unwrap();
        let f = Poly::var(big, 1)
            .unwrap()
            .add(&Poly::var(big, s + 1).unwrap())
            .unwrap()
            .pow(m as u64);
        assert!(!z.mul(&f).unwrap().is_zero());
        assert!(zcl_exact(m, s + 1).unwrap().value >= w.length() + m);
    }
}

#[test]
fn exact_dominates_explicit_witness() {
    for m in 1..=7u32 {
        for s in 2..=4u32 {
            if let Some(w) = paper_witness(m, s).unwrap() {
                assert!(zcl_exact(m, s).unwrap().value >= w.length(), "m={m} s={s}");
            }
        }
    }
}

/// For `m = 1 mod 4` and `s >= (m+1)/2` the chain `zcl <= TC_s <= sm` has a gap of at most one.
#[test]
fn gap_at_most_one_when_m_is_one_mod_four() {
    for (m, s_hi) in [(5u32, 5u32), (9, 6), (13, 6)] {
        for s in (m + 1) / 2..=s_hi {
            let w = paper_witness(m, s).unwrap().expect("witness exists");
            assert_eq!(w.length(), s * m - 1, "m={m} s={s}");
            if (m as u64 + 1).pow(s) <= 1 << 20 {
                assert_eq!(zcl_exact(m, s).unwrap().value, s * m - 1, "m={m} s={s}");
            }
        }
    }
}

#[test]
fn generator_words_realise_brute_force_maximum() {
    for (m, s) in [(1, 2), (2, 2), (1, 3)] {
        assert_eq!(
            brute_force_zcl(spec(m, s)),
            zcl_exact(m, s).unwrap().value,
            "m={m} s={s}"
        );
    }
}
