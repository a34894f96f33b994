//! Per-shift prediction of X_alpha in {0, 2q, 8q} for odd m, from trace
//! tests alone, and the counts N0 and N built from it.
//!
//! With e = a7 alpha^7: if e = 1 the x^3 coefficient of the reduced curve
//! vanishes and X_alpha = 2q. Otherwise l = e^(-1/3). Tr(l) = 1 gives
//! X_alpha = 2q. Tr(l) = 0 gives a three-dimensional radical and
//! X_alpha = 8q exactly when Tr(eta v^3) = Tr(eta (v^2 + v)) = 1, where
//! u^2 + u = l with Tr(u) = 0, v^2 + v = u, and
//! eta = 1 + (a7 alpha^7)^(1/4) + (a7 alpha^7)^(1/2)
//!       + sum_i ((b_i alpha^(1+2^i))^(2^-i) + b_i alpha^(1+2^i)).

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::TracePoly;
use crate::bounds::{check_n0_deviation, check_n_deviation, BoundCheck};
use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum XClass {
    Zero,
    TwoQ,
    EightQ,
}

impl XClass {
    pub fn value(self, q: u64) -> u64 {
        match self {
            XClass::Zero => 0,
            XClass::TwoQ => 2 * q,
            XClass::EightQ => 8 * q,
        }
    }

    pub fn from_value(x: u64, q: u64) -> Option<Self> {
        match x {
            0 => Some(XClass::Zero),
            x if x == 2 * q => Some(XClass::TwoQ),
            x if x == 8 * q => Some(XClass::EightQ),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaClassification {
    pub alpha: Fe,
    /// alpha^7 = a7^-1.
    pub lambda_zero: bool,
    pub ell: Fe,
    pub trace_ell: u8,
    pub eta: Fe,
    /// Trace-zero solution of u^2 + u = l, when Tr(l) = 0.
    pub u: Option<Fe>,
    /// Solution of v^2 + v = u, so that v + v^4 = l.
    pub v: Option<Fe>,
    pub predicted: XClass,
}

fn require_odd(ctx: &FieldCtx, what: &'static str) -> Result<()> {
    if ctx.is_odd_degree() {
        Ok(())
    } else {
        Err(Error::EvenDegree { m: ctx.m(), what })
    }
}

pub fn eta_of_alpha(ctx: &FieldCtx, g: &TracePoly, alpha: Fe) -> Result<Fe> {
    if alpha.is_zero() {
        return Err(Error::ZeroShift);
    }
    let e = ctx.mul(g.a7(), ctx.pow(alpha, 7));
    let mut eta = Fe::ONE + ctx.frobenius_inv(e, 2) + ctx.sqrt(e);
    // frob = alpha^(2^i)
    let mut frob = alpha;
    for (i, &bi) in g.b().iter().enumerate() {
        if !bi.is_zero() {
            let t = ctx.mul(bi, ctx.mul(alpha, frob));
            eta += ctx.frobenius_inv(t, i as u32) + t;
        }
        frob = ctx.square(frob);
    }
    Ok(eta)
}

/// Predicts X_alpha from the trace tests above.
pub fn classify_alpha(ctx: &FieldCtx, g: &TracePoly, alpha: Fe) -> Result<AlphaClassification> {
    require_odd(ctx, "the X_alpha trichotomy")?;
    let eta = eta_of_alpha(ctx, g, alpha)?;
    let e = ctx.mul(g.a7(), ctx.pow(alpha, 7));
    if e == Fe::ONE {
        return Ok(AlphaClassification {
            alpha,
            lambda_zero: true,
            ell: Fe::ONE,
            trace_ell: 1,
            eta,
            u: None,
            v: None,
            predicted: XClass::TwoQ,
        });
    }
    let ell = ctx.kth_root(ctx.inv(e)?, 3)?;
    let trace_ell = ctx.trace(ell);
    if trace_ell == 1 {
        return Ok(AlphaClassification {
            alpha,
            lambda_zero: false,
            ell,
            trace_ell,
            eta,
            u: None,
            v: None,
            predicted: XClass::TwoQ,
        });
    }
    let mut u = ctx
        .solve_artin_schreier(ell)
        .ok_or(Error::ArtinSchreierUnsolvable {
            what: "u^2 + u = l",
        })?;
    if ctx.trace(u) == 1 {
        u += Fe::ONE;
    }
    let v = ctx
        .solve_artin_schreier(u)
        .ok_or(Error::ArtinSchreierUnsolvable {
            what: "v^2 + v = u",
        })?;
    let predicted = if eight_q_condition(ctx, eta, v) {
        XClass::EightQ
    } else {
        XClass::Zero
    };
    Ok(AlphaClassification {
        alpha,
        lambda_zero: false,
        ell,
        trace_ell,
        eta,
        u: Some(u),
        v: Some(v),
        predicted,
    })
}

/// Tr(eta v^3) = 1 and Tr(eta (v^2 + v)) = 1.
pub fn eight_q_condition(ctx: &FieldCtx, eta: Fe, v: Fe) -> bool {
    let v2 = ctx.square(v);
    let v3 = ctx.mul(v2, v);
    ctx.trace(ctx.mul(eta, v3)) == 1 && ctx.trace(ctx.mul(eta, v2 + v)) == 1
}

/// For Tr(l) = 0: z = alpha / lambda with lambda = alpha + a7^(-1/4) alpha^(-3/4),
/// and the three nonzero radical generators z, z v^3, z (v^3 + v^2 + v + 1).
pub fn radical_generators(
    ctx: &FieldCtx,
    g: &TracePoly,
    c: &AlphaClassification,
) -> Result<Option<[Fe; 3]>> {
    let Some(v) = c.v else {
        return Ok(None);
    };
    let lambda = c.alpha + ctx.mul(ctx.frac_pow(g.a7(), -1, 4)?, ctx.frac_pow(c.alpha, -3, 4)?);
    let z = ctx.mul(ctx.inv(lambda)?, c.alpha);
    let v2 = ctx.square(v);
    let v3 = ctx.mul(v2, v);
    Ok(Some([z, ctx.mul(z, v3), ctx.mul(z, v3 + v2 + v + Fe::ONE)]))
}

pub fn classify_all(ctx: &FieldCtx, g: &TracePoly) -> Result<Vec<AlphaClassification>> {
    require_odd(ctx, "the X_alpha trichotomy")?;
    (1..ctx.q() as u32)
        .into_par_iter()
        .with_min_len(64)
        .map(|a| classify_alpha(ctx, g, Fe(a)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n0: u64,
    pub n: u64,
    pub z: u64,
    /// Number of alpha with alpha^7 = a7^-1.
    pub lambda_zero_count: u64,
    pub checks: Vec<BoundCheck>,
}

/// Counts over an existing classification of every nonzero alpha.
pub fn count_from_classifications(
    ctx: &FieldCtx,
    g: &TracePoly,
    all: &[AlphaClassification],
) -> CountReport {
    let mut r = CountReport {
        n0: 0,
        n: 0,
        z: 0,
        lambda_zero_count: 0,
        checks: Vec::new(),
    };
    for c in all {
        match c.predicted {
            XClass::TwoQ => r.n0 += 1,
            XClass::EightQ => r.n += 1,
            XClass::Zero => r.z += 1,
        }
        r.lambda_zero_count += c.lambda_zero as u64;
    }
    let q = ctx.q();
    r.checks.extend(check_n0_deviation(q, r.n0));
    r.checks.extend(check_n_deviation(q, g.s(), r.n));
    r
}

/// N0 = #{X_alpha = 2q}, N = #{X_alpha = 8q}, Z = #{X_alpha = 0} from the
/// predictor, with their deviation bounds.
pub fn count_n0_n(ctx: &FieldCtx, g: &TracePoly) -> Result<CountReport> {
    let all = classify_all(ctx, g)?;
    Ok(count_from_classifications(ctx, g, &all))
}

/// #{x : phi(x) = psi(x) = 0} = (N1 + N2 + N3 - N) / 2, where N1 = #{phi = 0},
/// N2 = #{psi = 0}, N3 = #{phi = psi} on a set of N elements.
pub fn common_zero_count(n1: u64, n2: u64, n3: u64, n: u64) -> Result<u64> {
    let t = n1 as i64 + n2 as i64 + n3 as i64 - n as i64;
    if t < 0 || t % 2 != 0 {
        return Err(Error::InconsistentLemmaCounts(t));
    }
    Ok((t / 2) as u64)
}
