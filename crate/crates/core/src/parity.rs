//! 2-adic helpers: binomial parity, the trailing-ones length `e` of `m`,
//! `z(m) = floor(log2(2m))` and `sigma = (m+1) / 2^e`.
//!
//! Everything works on `u64`; arguments are expected to stay below `2^63`
//! so that `2m` and `m + 2^e` cannot overflow.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// Parity of `C(n, k)` via Lucas: odd iff the binary digits of `k` are dominated by those of `n`.
/// `k > n` counts as even since the coefficient is zero.
#[inline]
pub fn binom_parity(n: u64, k: u64) -> Parity {
    if k <= n && k & !n == 0 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

#[inline]
pub fn binom_is_odd(n: u64, k: u64) -> bool {
    binom_parity(n, k).is_odd()
}

/// Length `e` of the block of ones ending the binary expansion of `m`,
/// i.e. the largest `e` with `m ≡ 2^e - 1 (mod 2^{e+1})`.
#[inline]
pub fn trailing_ones(m: u64) -> u32 {
    m.trailing_ones()
}

/// `floor(log2(2m))`, computed from the bit length.
pub fn z_of(m: u64) -> u32 {
    assert!(m >= 1, "z(m) needs m >= 1");
    64 - m.leading_zeros()
}

/// `(m+1) / 2^e`, or `None` when `m = 2^e - 1`.
pub fn sigma_of(m: u64) -> Option<u64> {
    let e = trailing_ones(m);
    if m == (1u64 << e) - 1 {
        None
    } else {
        Some((m + 1) >> e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoAdicProfile {
    pub m: u64,
    pub e: u32,
    pub z: u32,
    pub sigma: Option<u64>,
}

impl TwoAdicProfile {
    pub fn of(m: u64) -> Self {
        TwoAdicProfile {
            m,
            e: trailing_ones(m),
            z: z_of(m),
            sigma: sigma_of(m),
        }
    }

    /// `2^e - 1`, the conjectured (and known) stable gap for this `m`.
    pub fn stable_gap(&self) -> u64 {
        (1u64 << self.e) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial_exact(n: u64, k: u64) -> u128 {
        let mut c: u128 = 1;
        for i in 0..k {
            c = c * (n - i) as u128 / (i + 1) as u128;
        }
        c
    }

    #[test]
    fn examples() {
        assert_eq!(binom_parity(7, 2), Parity::Odd);
        assert_eq!(binom_parity(13, 0), Parity::Odd);
        assert_eq!(binomial_exact(10, 5), 252);
        assert_eq!(binom_parity(10, 5), Parity::Even);
        assert_eq!(binom_parity(3, 5), Parity::Even);

        assert_eq!(trailing_ones(6), 0);
        assert_eq!(trailing_ones(7), 3);
        assert_eq!(11 % 8, 3);
        assert_eq!(trailing_ones(11), 2);

        assert_eq!(z_of(1), 1);
        assert_eq!(z_of(4), 3);
        assert_eq!(z_of(8), 4);

        assert_eq!(sigma_of(5), Some(3));
        assert_eq!(sigma_of(7), None);
        assert_eq!(sigma_of(10), Some(11));
    }

    #[test]
    fn lucas_matches_exact_binomials() {
        for n in 0..=64u64 {
            for k in 0..=n {
                let odd = binomial_exact(n, k) % 2 == 1;
                assert_eq!(binom_is_odd(n, k), odd, "C({n},{k})");
            }
        }
    }

    #[test]
    fn parity_step_of_witness_exponents() {
        for m in 1..2000u64 {
            let e = trailing_ones(m);
            if m > (1 << e) - 1 {
                assert!(binom_is_odd(m + (1 << e), 1 << e), "m={m}");
            }
        }
    }

    #[test]
    fn profile_invariants() {
        for m in 1..5000u64 {
            let p = TwoAdicProfile::of(m);
            let e = p.e;
            assert_eq!(m % (1 << (e + 1)), (1 << e) - 1);
            assert!(1u64 << p.z <= 2 * m && 2 * m < 1u64 << (p.z + 1));
            if let Some(sigma) = p.sigma {
                assert_eq!(sigma << e, m + 1);
                assert!(sigma >= 2);
            }
        }
        for t in 1..62 {
            assert_eq!(z_of(1 << t), t + 1);
            assert_eq!(z_of((1 << t) - 1), t);
        }
    }
}
