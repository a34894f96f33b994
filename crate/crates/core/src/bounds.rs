//! Exact integer comparisons against bounds involving sqrt(q).
//!
//! Every inequality of the form D <= c + sqrt(K) is decided as
//! D <= c or (D - c)^2 <= K, so no floating point enters a verdict.

use serde::Serialize;

use crate::field::FieldCtx;

/// One checked inequality with both sides as exact integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub pass: bool,
    /// Hard checks decide the exit status; the rest are informational.
    pub hard: bool,
}

impl BoundCheck {
    pub fn new(name: &str, lhs: u128, relation: &str, rhs: u128, pass: bool, hard: bool) -> Self {
        BoundCheck {
            name: name.to_string(),
            lhs: lhs.to_string(),
            relation: relation.to_string(),
            rhs: rhs.to_string(),
            pass,
            hard,
        }
    }

    pub fn failed_hard(&self) -> bool {
        self.hard && !self.pass
    }
}

/// D <= c + sqrt(k).
pub fn le_offset_sqrt(d: u128, c: u128, k: u128) -> bool {
    d <= c || (d - c).saturating_mul(d - c) <= k
}

fn pow4(s: u32) -> u128 {
    4u128.checked_pow(s).unwrap_or(u128::MAX)
}

/// |sigma4 - 3q^2| <= 185 2^(s-1) q^(3/2), as 4|sigma4 - 3q^2|^2 <= 185^2 4^s q^3.
pub fn check_sigma4_deviation(ctx: &FieldCtx, s: usize, sigma4: u64) -> BoundCheck {
    let q = ctx.q() as u128;
    let d = (sigma4 as i128 - 3 * (q * q) as i128).unsigned_abs();
    let lhs = 4u128.saturating_mul(d.saturating_mul(d));
    let rhs = (185u128 * 185)
        .saturating_mul(pow4(s as u32))
        .saturating_mul(q * q * q);
    BoundCheck::new(
        "sigma4_deviation_from_3q2",
        lhs,
        "<=",
        rhs,
        lhs <= rhs,
        true,
    )
}

/// Lower bounds on the spectral amplitude for odd m.
///
/// The basic bound linf^2 >= 2q is hard for m <= 11 + 2s and reported as
/// informational beyond. For m >= 15 + 2s the strengthened bound
/// linf >= sqrt(2q) + 2^ceil(m/3) is checked as linf > 2^ceil(m/3) and
/// (linf - 2^ceil(m/3))^2 >= 2q.
pub fn check_linf_lower(ctx: &FieldCtx, s: usize, linf: u64) -> Vec<BoundCheck> {
    let m = ctx.m() as usize;
    let q = ctx.q() as u128;
    let l = linf as u128;
    let mut out = vec![BoundCheck::new(
        "linf_squared_at_least_2q",
        l * l,
        ">=",
        2 * q,
        l * l >= 2 * q,
        m <= 11 + 2 * s,
    )];
    if m >= 15 + 2 * s {
        let step = 1u128 << ctx.m().div_ceil(3);
        let excess = l.saturating_sub(step);
        out.push(BoundCheck::new(
            "linf_minus_2^ceil(m/3)_squared_at_least_2q",
            excess * excess,
            ">=",
            2 * q,
            l > step && excess * excess >= 2 * q,
            true,
        ));
    }
    out
}

/// linf <= 6 sqrt(q), as linf^2 <= 36q.
pub fn check_linf_upper(ctx: &FieldCtx, linf: u64) -> BoundCheck {
    let l = linf as u128;
    let rhs = 36 * ctx.q() as u128;
    BoundCheck::new(
        "linf_squared_at_most_36q",
        l * l,
        "<=",
        rhs,
        l * l <= rhs,
        true,
    )
}

/// 2^ceil(m/d) divides linf.
pub fn check_divisibility(ctx: &FieldCtx, binary_degree: u32, linf: u64) -> BoundCheck {
    let divisor = 1u64 << ctx.m().div_ceil(binary_degree);
    BoundCheck::new(
        "linf_mod_2^ceil(m/d)",
        (linf % divisor) as u128,
        "==",
        0,
        linf.is_multiple_of(divisor),
        true,
    )
}

/// |N0 - q/2| <= 3 sqrt(q) + 1 (hard) and |N0 - q/2| < 3 sqrt(q)
/// (informational), with D = |2 N0 - q|.
pub fn check_n0_deviation(q: u64, n0: u64) -> [BoundCheck; 2] {
    let d = (2 * n0 as i128 - q as i128).unsigned_abs();
    let k = 36 * q as u128;
    let weak = BoundCheck::new(
        "abs(2*N0-q)_le_6sqrt(q)+2",
        d,
        "<= 2 + sqrt",
        k,
        le_offset_sqrt(d, 2, k),
        true,
    );
    let strict = BoundCheck::new("abs(2*N0-q)^2_lt_36q", d * d, "<", k, d * d < k, false);
    [weak, strict]
}

/// |N - q/8| <= 23 2^(s-1) sqrt(q) for q >= 32, as |8N - q|^2 <= 23^2 4^(s+2) q.
pub fn check_n_deviation(q: u64, s: usize, n: u64) -> Option<BoundCheck> {
    if q < 32 {
        return None;
    }
    let d = (8 * n as i128 - q as i128).unsigned_abs();
    let rhs = (23u128 * 23)
        .saturating_mul(pow4(s as u32 + 2))
        .saturating_mul(q as u128);
    Some(BoundCheck::new(
        "abs(8*N-q)^2_le_23^2*4^(s+2)*q",
        d * d,
        "<=",
        rhs,
        d * d <= rhs,
        true,
    ))
}

/// |S|^2 <= 36q for an exponential sum of a degree-7 monomial.
pub fn check_weil_degree7(name: &str, q: u64, sum: i64) -> BoundCheck {
    let d = sum.unsigned_abs() as u128;
    let rhs = 36 * q as u128;
    BoundCheck::new(name, d * d, "<=", rhs, d * d <= rhs, true)
}

/// |2 N_i - #C| <= K sqrt(q) + 5, the curve-count deviation form.
pub fn check_curve_count_deviation(
    name: &str,
    q: u64,
    k_coeff: u64,
    n_i: u64,
    count_total: u64,
) -> BoundCheck {
    let d = (2 * n_i as i128 - count_total as i128).unsigned_abs();
    let k = (k_coeff as u128 * k_coeff as u128).saturating_mul(q as u128);
    BoundCheck::new(name, d, "<= 5 + sqrt", k, le_offset_sqrt(d, 5, k), true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32) -> FieldCtx {
        FieldCtx::with_default_modulus(m).unwrap()
    }

    /// Floating-point reference, only for cases far from equality.
    fn le_offset_sqrt_float(d: u128, c: u128, k: u128) -> bool {
        (d as f64) <= c as f64 + (k as f64).sqrt()
    }

    #[test]
    fn offset_sqrt_matches_float_away_from_ties() {
        for d in 0..200u128 {
            for c in [0u128, 2, 5] {
                for k in [0u128, 1, 50, 1152, 9000] {
                    let exact = le_offset_sqrt(d, c, k);
                    let gap = (d as f64 - c as f64 - (k as f64).sqrt()).abs();
                    if gap > 1e-9 {
                        assert_eq!(exact, le_offset_sqrt_float(d, c, k), "{d} {c} {k}");
                    }
                }
            }
        }
        // Ties: 7 <= 1 + sqrt(36).
        assert!(le_offset_sqrt(7, 1, 36));
        assert!(!le_offset_sqrt(8, 1, 36));
    }

    #[test]
    fn sigma4_deviation_m11_monomial_scale() {
        let ctx = k(11);
        let q = ctx.q();
        let c = check_sigma4_deviation(&ctx, 0, 3 * q * q);
        assert!(c.pass);
        assert_eq!(c.lhs, "0");
        assert_eq!(c.rhs, (185u128 * 185 * (q as u128).pow(3)).to_string());
    }

    #[test]
    fn bent_like_sigma_violates_at_m13() {
        let ctx = k(13);
        let q = ctx.q();
        // q^2 < 3q^2 - 92.5 q^(3/2) for q = 8192.
        assert!(!check_sigma4_deviation(&ctx, 0, q * q).pass);
        // With s = 1 the allowance doubles to 185 q^(3/2) and 16 q^4 <= 4 185^2 q^3.
        assert!(check_sigma4_deviation(&ctx, 1, q * q).pass);
    }

    #[test]
    fn linf_lower_windows() {
        let k7 = k(7);
        let checks = check_linf_lower(&k7, 0, 16);
        assert_eq!(checks.len(), 1);
        assert!(checks[0].pass && checks[0].hard);
        assert!(!check_linf_lower(&k7, 0, 8)[0].pass);
        let k5 = k(5);
        assert!(check_linf_lower(&k5, 0, 8)[0].pass);
        // m = 13, s = 0 lies outside m <= 11: informational only.
        let k13 = k(13);
        assert!(!check_linf_lower(&k13, 0, 128)[0].hard);
        assert!(check_linf_lower(&k13, 1, 128)[0].hard);
        let k15 = k(15);
        let c = check_linf_lower(&k15, 0, 288);
        assert_eq!(c.len(), 2);
        assert!(c[1].pass);
        assert!(!check_linf_lower(&k15, 0, 256)[1].pass);
        assert_eq!(check_linf_lower(&k15, 1, 256).len(), 1);
    }

    #[test]
    fn linf_upper_and_divisibility() {
        let k9 = k(9);
        // floor(6 sqrt(512)) = 135; the largest multiple of 8 below is 128.
        assert!(check_linf_upper(&k9, 135).pass);
        assert!(!check_linf_upper(&k9, 136).pass);
        assert!(check_divisibility(&k9, 3, 128).pass);
        assert!(!check_divisibility(&k9, 3, 132).pass);
        let k5 = k(5);
        assert!(check_linf_upper(&k5, 33).pass);
        assert!(!check_linf_upper(&k5, 34).pass);
    }

    #[test]
    fn n0_and_n_deviation() {
        let q = 512;
        let [weak, strict] = check_n0_deviation(q, 256);
        assert!(weak.pass && strict.pass);
        // 6 sqrt(512) + 2 = 137.76..: D = 137 passes, 138 fails.
        assert!(check_n0_deviation(q, 324)[0].pass);
        assert!(!check_n0_deviation(q, 325)[0].pass);
        assert!(check_n_deviation(16, 0, 0).is_none());
        let c = check_n_deviation(512, 0, 64).unwrap();
        assert!(c.pass && c.lhs == "0");
    }

    #[test]
    fn curve_count_deviation() {
        // D = 5 always passes; K = 0 requires D <= 5.
        assert!(check_curve_count_deviation("x", 128, 0, 10, 15).pass);
        assert!(!check_curve_count_deviation("x", 128, 0, 10, 26).pass);
        assert!(check_weil_degree7("s7", 32, 33).pass);
        assert!(!check_weil_degree7("s7", 32, 34).pass);
    }
}
