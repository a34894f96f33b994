//! Walsh-Hadamard spectra and the norms derived from them.

use serde::Serialize;

use crate::boolfn::TruthTable;

/// f^(v) = sum_x (-1)^(f(x) + v.x), with v.x the parity of v & x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    m: u32,
    values: Vec<i32>,
}

/// In-place butterfly on a signed vector of power-of-two length.
pub fn fwht_in_place(data: &mut [i32]) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// Walsh spectrum of a truth table in O(q m).
pub fn fwht(table: &TruthTable) -> WalshSpectrum {
    let mut values: Vec<i32> = table.bits().iter().map(|&b| 1 - 2 * b as i32).collect();
    fwht_in_place(&mut values);
    WalshSpectrum {
        m: table.m(),
        values,
    }
}

/// Outcome of the 2-adic divisibility test on the spectral amplitude.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub binary_degree: u32,
    pub divisor: u64,
    pub linf: u64,
    /// The checked claim: divisor | linf.
    pub linf_divisible: bool,
    /// Informational: divisor | f^(v) for every v.
    pub all_values_divisible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumSummary {
    pub linf: u64,
    pub nl: u64,
    pub sigma4: u64,
    pub parseval_ok: bool,
    pub divisibility_ok: bool,
}

impl WalshSpectrum {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        1u64 << self.m
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Spectral amplitude max_v |f^(v)|.
    pub fn linf(&self) -> u64 {
        self.values
            .iter()
            .map(|v| v.unsigned_abs() as u64)
            .max()
            .unwrap_or(0)
    }

    /// sum_v f^(v)^2.
    pub fn sum_squares(&self) -> u128 {
        self.values
            .iter()
            .map(|&v| (v as i128 * v as i128) as u128)
            .sum()
    }

    /// Parseval: sum_v f^(v)^2 = q^2.
    pub fn parseval_ok(&self) -> bool {
        self.sum_squares() == (self.q() as u128).pow(2)
    }

    pub fn sum_fourth_powers(&self) -> u128 {
        self.values
            .iter()
            .map(|&v| {
                let s = (v as i128 * v as i128) as u128;
                s * s
            })
            .sum()
    }

    /// Sum-of-squares index (1/q) sum_v f^(v)^4; always an integer.
    pub fn l4_fourth(&self) -> u64 {
        let total = self.sum_fourth_powers();
        debug_assert_eq!(total % self.q() as u128, 0);
        (total / self.q() as u128) as u64
    }

    /// nl(f) = 2^(m-1) - linf / 2.
    pub fn nonlinearity(&self) -> u64 {
        self.q() / 2 - self.linf() / 2
    }

    /// Whether 2^ceil(m/d) divides the spectral amplitude.
    pub fn divisibility_check(&self, binary_degree: u32) -> DivisibilityReport {
        assert!(binary_degree >= 1, "binary degree must be positive");
        let exponent = self.m.div_ceil(binary_degree);
        let divisor = 1u64 << exponent;
        let linf = self.linf();
        DivisibilityReport {
            binary_degree,
            divisor,
            linf,
            linf_divisible: linf.is_multiple_of(divisor),
            all_values_divisible: self
                .values
                .iter()
                .all(|&v| (v.unsigned_abs() as u64).is_multiple_of(divisor)),
        }
    }

    pub fn summary(&self, binary_degree: u32) -> SpectrumSummary {
        SpectrumSummary {
            linf: self.linf(),
            nl: self.nonlinearity(),
            sigma4: self.l4_fourth(),
            parseval_ok: self.parseval_ok(),
            divisibility_ok: self.divisibility_check(binary_degree).linf_divisible,
        }
    }

    /// Multiset of |f^(v)| as a sorted vector.
    pub fn abs_multiset(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.values.iter().map(|v| v.unsigned_abs()).collect();
        out.sort_unstable();
        out
    }

    /// Rows "v,value" under a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 8 + 8);
        out.push_str("v,value\n");
        for (v, value) in self.values.iter().enumerate() {
            out.push_str(&format!("{v},{value}\n"));
        }
        out
    }
}
