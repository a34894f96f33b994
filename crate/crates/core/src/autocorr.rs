//! Autocorrelation sums X_alpha = (sum_x (-1)^Tr(G(x) + G(x + alpha)))^2 and
//! the identity sigma_f = q^2 + sum_{alpha != 0} X_alpha.

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::{truth_table, TracePoly, TruthTable};
use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};

/// Signed character sum sum_x (-1)^Tr(G(x) + G(x + alpha)), evaluating G
/// directly in the field.
pub fn x_alpha_signed_sum(ctx: &FieldCtx, g: &TracePoly, alpha: Fe) -> Result<i64> {
    if alpha.is_zero() {
        return Err(Error::ZeroShift);
    }
    Ok(ctx
        .elements()
        .map(|x| {
            let t = ctx.trace(g.eval(ctx, x) + g.eval(ctx, x + alpha));
            1 - 2 * t as i64
        })
        .sum())
}

pub fn x_alpha(ctx: &FieldCtx, g: &TracePoly, alpha: Fe) -> Result<u64> {
    let s = x_alpha_signed_sum(ctx, g, alpha)?;
    Ok((s * s) as u64)
}

/// Masks selecting the bits whose in-word index has bit j clear.
const SWAP_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Moves bit i of `w` to bit i ^ lo, for lo < 64.
#[inline]
fn xor_permute(mut w: u64, lo: u32) -> u64 {
    for (j, &mask) in SWAP_MASKS.iter().enumerate() {
        if lo >> j & 1 == 1 {
            let sh = 1u32 << j;
            w = ((w & mask) << sh) | ((w >> sh) & mask);
        }
    }
    w
}

/// sum_x (-1)^(f(x) + f(x ^ alpha)) over a packed table with q >= 64.
fn packed_autocorrelation(words: &[u64], alpha: u32) -> i64 {
    let hi = (alpha >> 6) as usize;
    let lo = alpha & 63;
    let differ: u64 = words
        .iter()
        .enumerate()
        .map(|(i, &w)| (w ^ xor_permute(words[i ^ hi], lo)).count_ones() as u64)
        .sum();
    (words.len() as i64) * 64 - 2 * differ as i64
}

/// Autocorrelation of a truth table at shift `alpha`, one entry at a time.
pub fn autocorrelation_direct(table: &TruthTable, alpha: usize) -> i64 {
    let bits = table.bits();
    (0..bits.len())
        .map(|x| 1 - 2 * (bits[x] ^ bits[x ^ alpha]) as i64)
        .sum()
}

/// X_alpha for every nonzero alpha.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XAlphaTable {
    q: u64,
    /// Signed sums indexed by alpha; entry 0 is the trivial sum q.
    sums: Vec<i64>,
}

/// Counts of alpha by X_alpha class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// #{alpha : X_alpha = 2q}
    pub n0: u64,
    /// #{alpha : X_alpha = 8q}
    pub n: u64,
    /// #{alpha : X_alpha = 0}
    pub z: u64,
}

impl Decomposition {
    /// q^2 + 2q N0 + 8q N.
    pub fn sigma4(&self, q: u64) -> u64 {
        q * q + 2 * q * self.n0 + 8 * q * self.n
    }

    /// 3q^2 + 8q(N - q/8) + 2q(N0 - q/2), evaluated with signed centred terms.
    pub fn sigma4_centred(&self, q: u64) -> i128 {
        let q = q as i128;
        3 * q * q + q * (8 * self.n as i128 - q) + q * (2 * self.n0 as i128 - q)
    }
}

impl XAlphaTable {
    /// Builds the table from signed sums indexed by alpha (index 0 ignored).
    pub fn from_signed_sums(q: u64, mut sums: Vec<i64>) -> Self {
        assert_eq!(sums.len() as u64, q);
        sums[0] = q as i64;
        XAlphaTable { q, sums }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.sums.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn signed_sum(&self, alpha: Fe) -> i64 {
        self.sums[alpha.0 as usize]
    }

    pub fn get(&self, alpha: Fe) -> u64 {
        let s = self.signed_sum(alpha);
        (s * s) as u64
    }

    /// (alpha, X_alpha) in increasing alpha.
    pub fn entries(&self) -> impl Iterator<Item = (Fe, u64)> + '_ {
        (1..self.sums.len()).map(|a| (Fe(a as u32), self.get(Fe(a as u32))))
    }

    /// Every signed sum is even, so every X_alpha is the square of an even
    /// integer.
    pub fn all_even(&self) -> bool {
        self.sums[1..].iter().all(|s| s % 2 == 0)
    }

    pub fn sum_x_alpha(&self) -> u128 {
        self.entries().map(|(_, x)| x as u128).sum()
    }

    /// q^2 + sum_{alpha != 0} X_alpha.
    pub fn sigma4(&self) -> u128 {
        (self.q as u128).pow(2) + self.sum_x_alpha()
    }

    /// Histogram {X_alpha -> count}.
    pub fn histogram(&self) -> std::collections::BTreeMap<u64, u64> {
        let mut h = std::collections::BTreeMap::new();
        for (_, x) in self.entries() {
            *h.entry(x).or_insert(0) += 1;
        }
        h
    }

    /// Rows "alpha,x_alpha" under a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,x_alpha\n");
        for (alpha, x) in self.entries() {
            out.push_str(&format!("{},{x}\n", alpha.0));
        }
        out
    }
}

/// All X_alpha from a truth table of f = Tr o G (f(x + alpha) is f at the
/// xor index).
pub fn x_alpha_all_from_table(table: &TruthTable) -> XAlphaTable {
    let q = table.len() as u64;
    let sums: Vec<i64> = if q >= 64 {
        let words = table.packed();
        (0..q as u32)
            .into_par_iter()
            .with_min_len(16)
            .map(|alpha| packed_autocorrelation(&words, alpha))
            .collect()
    } else {
        (0..q as usize)
            .map(|alpha| autocorrelation_direct(table, alpha))
            .collect()
    };
    let out = XAlphaTable::from_signed_sums(q, sums);
    debug_assert!(out.all_even());
    out
}

pub fn x_alpha_all(ctx: &FieldCtx, g: &TracePoly) -> XAlphaTable {
    x_alpha_all_from_table(&truth_table(ctx, g))
}

/// Partitions alpha by X_alpha in {2q, 8q, 0}. Any other value is an error
/// naming the offending alpha.
pub fn sigma_decomposition(table: &XAlphaTable) -> Result<Decomposition> {
    let q = table.q();
    let mut d = Decomposition { n0: 0, n: 0, z: 0 };
    for (alpha, x) in table.entries() {
        match x {
            0 => d.z += 1,
            x if x == 2 * q => d.n0 += 1,
            x if x == 8 * q => d.n += 1,
            x_alpha => return Err(Error::OutsideTrichotomy { alpha, x_alpha }),
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::fwht;

    fn k(m: u32) -> FieldCtx {
        FieldCtx::with_default_modulus(m).unwrap()
    }

    #[test]
    fn x7_at_one_over_f32_is_2q() {
        let ctx = k(5);
        let g = TracePoly::monomial(Fe(1)).unwrap();
        assert_eq!(x_alpha(&ctx, &g, Fe::ONE).unwrap(), 64);
        assert_eq!(x_alpha(&ctx, &g, Fe::ZERO), Err(Error::ZeroShift));
    }

    #[test]
    fn x7_histogram_over_f32() {
        let ctx = k(5);
        let g = TracePoly::monomial(Fe(1)).unwrap();
        let table = x_alpha_all(&ctx, &g);
        assert_eq!(table.len(), 31);
        for (alpha, x) in table.entries() {
            assert!(matches!(x, 0 | 64 | 256));
            assert_eq!(x, x_alpha(&ctx, &g, alpha).unwrap());
        }
    }

    #[test]
    fn packed_path_matches_direct_sum() {
        for m in [6, 7, 9] {
            let ctx = k(m);
            let g = TracePoly::new(Fe(5), vec![Fe(1), Fe(0), Fe(3)]).unwrap();
            let t = truth_table(&ctx, &g);
            let table = x_alpha_all_from_table(&t);
            for alpha in ctx.nonzero_elements() {
                assert_eq!(
                    table.signed_sum(alpha),
                    autocorrelation_direct(&t, alpha.0 as usize)
                );
                assert_eq!(
                    table.signed_sum(alpha),
                    x_alpha_signed_sum(&ctx, &g, alpha).unwrap()
                );
            }
        }
    }

    #[test]
    fn xor_permute_moves_bits() {
        for lo in 0..64u32 {
            for i in [0u32, 1, 17, 63] {
                assert_eq!(xor_permute(1u64 << i, lo), 1u64 << (i ^ lo));
            }
        }
    }

    #[test]
    fn fourth_moment_identity() {
        for (m, g) in [
            (5, TracePoly::monomial(Fe(1)).unwrap()),
            (7, TracePoly::new(Fe(1), vec![Fe(0), Fe(1)]).unwrap()),
        ] {
            let ctx = k(m);
            let table = x_alpha_all(&ctx, &g);
            let spec = fwht(&truth_table(&ctx, &g));
            assert_eq!(table.sigma4(), spec.l4_fourth() as u128);
        }
    }

    #[test]
    fn decomposition_partitions_and_reproduces_sigma() {
        let ctx = k(5);
        let g = TracePoly::monomial(Fe(1)).unwrap();
        let table = x_alpha_all(&ctx, &g);
        let d = sigma_decomposition(&table).unwrap();
        let q = ctx.q();
        assert_eq!(d.n0 + d.n + d.z, q - 1);
        let sigma = fwht(&truth_table(&ctx, &g)).l4_fourth();
        assert_eq!(d.sigma4(q), sigma);
        assert_eq!(d.sigma4_centred(q), sigma as i128);
    }

    #[test]
    fn decomposition_reports_offending_alpha() {
        // f = x0 x1 x2 on 5 variables is invariant under shifts by e3, so
        // X_8 = q^2 = 1024 is outside {0, 64, 256}.
        let bits = (0..32u32).map(|x| (x & 0b111 == 0b111) as u8).collect();
        let table = x_alpha_all_from_table(&TruthTable::from_bits(bits).unwrap());
        assert_eq!(table.get(Fe(8)), 1024);
        match sigma_decomposition(&table) {
            Err(Error::OutsideTrichotomy { alpha, x_alpha }) => {
                assert_eq!(table.get(alpha), x_alpha);
                assert!(![0, 64, 256].contains(&x_alpha));
            }
            other => panic!("expected a trichotomy violation, got {other:?}"),
        }
    }

    #[test]
    fn every_signed_sum_is_even() {
        let ctx = k(8);
        let g = TracePoly::new(Fe(0x53), vec![Fe(0x11), Fe(0x7)]).unwrap();
        assert!(x_alpha_all(&ctx, &g).all_even());
    }

    #[test]
    fn csv_export() {
        let ctx = k(3);
        let table = x_alpha_all(&ctx, &TracePoly::monomial(Fe(1)).unwrap());
        let csv = table.to_csv();
        assert!(csv.starts_with("alpha,x_alpha\n1,"));
        assert_eq!(csv.lines().count(), 8);
    }
}
