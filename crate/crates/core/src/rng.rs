//! Seeded generation of polynomials and curves.
//!
//! All randomness comes from SplitMix64 so corpora can be reproduced by any
//! implementation. With GAMMA = 0x9E3779B97F4A7C15 the generator is
//!
//! ```text
//! state <- state + GAMMA            (mod 2^64)
//! z     <- state
//! z     <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z     <- (z ^ (z >> 27)) * 0x94D049BB133111EB
//! out   <- z ^ (z >> 31)
//! ```
//!
//! A uniform draw below n is `(out * n) >> 64` on the 128-bit product.
//! Corpus entry j uses its own stream seeded with mix(seed + (j + 1) GAMMA),
//! the j-th output of the generator started at `seed`, so entries can be
//! produced in any order.

use crate::boolfn::{QuinticCurve, TracePoly};
use crate::field::{Fe, FieldCtx};

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Generator for stream `index` derived from `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64::new(mix(
            seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GAMMA))
        ))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Uniform-ish draw in [0, n) for n >= 1.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn element(&mut self, ctx: &FieldCtx) -> Fe {
        Fe(self.below(ctx.q()) as u32)
    }

    pub fn nonzero_element(&mut self, ctx: &FieldCtx) -> Fe {
        Fe(1 + self.below(ctx.q() - 1) as u32)
    }
}

/// Random G with nonzero a7 and arbitrary b_0..b_s. With `top_nonzero`,
/// b_s is drawn from the nonzero elements.
pub fn random_trace_poly(
    ctx: &FieldCtx,
    s: usize,
    top_nonzero: bool,
    rng: &mut SplitMix64,
) -> TracePoly {
    let a7 = rng.nonzero_element(ctx);
    let mut b: Vec<Fe> = (0..=s).map(|_| rng.element(ctx)).collect();
    if top_nonzero {
        b[s] = rng.nonzero_element(ctx);
    }
    TracePoly::new(a7, b).expect("a7 is nonzero")
}

/// `count` polynomials, entry j drawn from stream j of `seed`.
pub fn trace_poly_corpus(
    ctx: &FieldCtx,
    s: usize,
    count: usize,
    seed: u64,
    top_nonzero: bool,
) -> Vec<TracePoly> {
    (0..count)
        .map(|j| random_trace_poly(ctx, s, top_nonzero, &mut SplitMix64::stream(seed, j as u64)))
        .collect()
}

/// Random quintic curve with a != 0.
pub fn random_curve(ctx: &FieldCtx, rng: &mut SplitMix64) -> QuinticCurve {
    QuinticCurve::new(
        rng.nonzero_element(ctx),
        rng.element(ctx),
        rng.element(ctx),
        rng.element(ctx),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_outputs() {
        // First outputs for seed 0 from the published reference generator.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn stream_j_is_jth_output() {
        let mut base = SplitMix64::new(42);
        for j in 0..5 {
            let expected = base.next_u64();
            assert_eq!(SplitMix64::stream(42, j).state, expected);
        }
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = SplitMix64::new(7);
        for n in [1u64, 2, 3, 31, 1 << 20] {
            for _ in 0..100 {
                assert!(r.below(n) < n);
            }
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let ctx = FieldCtx::with_default_modulus(9).unwrap();
        let a = trace_poly_corpus(&ctx, 2, 10, 42, false);
        let b = trace_poly_corpus(&ctx, 2, 10, 42, false);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| !g.a7().is_zero() && g.s() == 2));
        let c = trace_poly_corpus(&ctx, 2, 10, 43, true);
        assert_ne!(a, c);
        assert!(c.iter().all(|g| !g.b()[2].is_zero()));
    }
}
