//! Genus-2 curves y^2 + y = a x^5 + b x^3 + c x + d over GF(2^m).
//!
//! Q(x) = Tr(x R(x)) with R(x) = a x^4 + b x^2 + c^2 x is the quadratic form
//! whose zero count gives the number of points. Its radical W is the kernel
//! of the linearized polynomial E_{a,b} = a^4 x^16 + b^4 x^8 + b^2 x^2 + a x.
//! If Q is nonzero on W the curve has 1 + q points, otherwise
//! 1 + q +- sqrt(2^w q) with w = dim W.

use serde::Serialize;

use crate::boolfn::QuinticCurve;
use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};
use crate::gf2;

/// Radical of the symplectic form and the resulting point-count prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticData {
    pub w: u32,
    pub w_basis: Vec<Fe>,
    pub q_on_basis: Vec<u8>,
    /// Q vanishes on all of W.
    pub v_equals_w: bool,
    /// Possible values of #C(k), ascending.
    pub predicted_counts: Vec<u64>,
}

impl SymplecticData {
    pub fn predicts(&self, count: u64) -> bool {
        self.predicted_counts.contains(&count)
    }
}

/// Q(x) = Tr(x (a x^4 + b x^2 + c^2 x)).
pub fn q_form(ctx: &FieldCtx, curve: &QuinticCurve, x: Fe) -> u8 {
    let x2 = ctx.square(x);
    let x4 = ctx.square(x2);
    let r = ctx.mul(curve.a, x4) + ctx.mul(curve.b, x2) + ctx.mul(ctx.square(curve.c), x);
    ctx.trace(ctx.mul(x, r))
}

/// E_{a,b}(x) = a^4 x^16 + b^4 x^8 + b^2 x^2 + a x.
pub fn e_poly(ctx: &FieldCtx, a: Fe, b: Fe, x: Fe) -> Result<Fe> {
    if a.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    Ok(e_poly_unchecked(ctx, a, b, x))
}

fn e_poly_unchecked(ctx: &FieldCtx, a: Fe, b: Fe, x: Fe) -> Fe {
    let a2 = ctx.square(a);
    let b2 = ctx.square(b);
    let x2 = ctx.square(x);
    let x8 = ctx.square(ctx.square(x2));
    let x16 = ctx.square(x8);
    ctx.mul(ctx.square(a2), x16) + ctx.mul(ctx.square(b2), x8) + ctx.mul(b2, x2) + ctx.mul(a, x)
}

/// P(x) = a^2 x^5 + b^2 x + a, the quintic factor of E_{a,b}.
pub fn p_poly(ctx: &FieldCtx, a: Fe, b: Fe, x: Fe) -> Fe {
    let x5 = ctx.mul(ctx.square(ctx.square(x)), x);
    ctx.mul(ctx.square(a), x5) + ctx.mul(ctx.square(b), x) + a
}

/// Kernel of x -> E_{a,b}(x) on k, from the m x m bit matrix of the map in
/// the power basis.
pub fn radical(ctx: &FieldCtx, curve: &QuinticCurve) -> Result<SymplecticData> {
    if curve.a.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let columns: Vec<u32> = (0..ctx.m())
        .map(|j| e_poly_unchecked(ctx, curve.a, curve.b, Fe(1 << j)).0)
        .collect();
    let kernel = gf2::kernel_basis(&columns, ctx.m());
    let w_basis: Vec<Fe> = kernel.into_iter().map(Fe).collect();
    let q_on_basis: Vec<u8> = w_basis.iter().map(|&z| q_form(ctx, curve, z)).collect();
    let v_equals_w = q_on_basis.iter().all(|&b| b == 0);
    let w = w_basis.len() as u32;
    Ok(SymplecticData {
        w,
        predicted_counts: predicted_counts(ctx, w, v_equals_w),
        w_basis,
        q_on_basis,
        v_equals_w,
    })
}

fn predicted_counts(ctx: &FieldCtx, w: u32, v_equals_w: bool) -> Vec<u64> {
    let q = ctx.q();
    if !v_equals_w {
        return vec![q + 1];
    }
    // 2^w q is an even power of two whenever w = m mod 2.
    let e = w + ctx.m();
    if e % 2 == 1 {
        return Vec::new();
    }
    let r = 1u64 << (e / 2);
    vec![q + 1 - r, q + 1 + r]
}

/// Radical data with the predicted point counts.
pub fn classify(ctx: &FieldCtx, curve: &QuinticCurve) -> Result<SymplecticData> {
    radical(ctx, curve)
}

/// 2 #{x : Tr(a x^5 + b x^3 + c x + d) = 0}.
pub fn count_points_affine(ctx: &FieldCtx, curve: &QuinticCurve) -> u64 {
    2 * ctx
        .elements()
        .filter(|&x| ctx.trace(curve.rhs(ctx, x)) == 0)
        .count() as u64
}

/// Affine points plus the single point at infinity.
pub fn count_points(ctx: &FieldCtx, curve: &QuinticCurve) -> u64 {
    count_points_affine(ctx, curve) + 1
}

/// Roots of P in k. They lie in W, so the kernel is filtered through P.
pub fn p_roots(ctx: &FieldCtx, curve: &QuinticCurve) -> Result<Vec<Fe>> {
    let data = radical(ctx, curve)?;
    let basis: Vec<u32> = data.w_basis.iter().map(|z| z.0).collect();
    let mut roots: Vec<Fe> = gf2::span(&basis)
        .into_iter()
        .map(Fe)
        .filter(|&z| p_poly(ctx, curve.a, curve.b, z).is_zero())
        .collect();
    roots.sort_unstable();
    Ok(roots)
}

/// Rescales x -> mu x with mu^2 = b/a, giving an isomorphic curve whose x^5
/// and x^3 coefficients are equal. Returns `None` when b = 0.
pub fn normalize_equal_coefficients(
    ctx: &FieldCtx,
    curve: &QuinticCurve,
) -> Result<Option<(QuinticCurve, Fe)>> {
    if curve.a.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    if curve.b.is_zero() {
        return Ok(None);
    }
    let mu = ctx.sqrt(ctx.mul(curve.b, ctx.inv(curve.a)?));
    let mu2 = ctx.square(mu);
    let a = ctx.mul(curve.a, ctx.mul(ctx.square(mu2), mu));
    Ok(Some((
        QuinticCurve {
            a,
            b: a,
            c: ctx.mul(curve.c, mu),
            d: curve.d,
        },
        mu,
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaisnerNart {
    pub w: u32,
    pub ell: Fe,
}

/// Dimension of W from a root z of P, for curves with a = b (or b = 0).
///
/// With a = b, l is the cube root of 1 + z^-4 and w = 3 when Tr(l) = 0,
/// w = 1 otherwise. With b = 0, P = a^2 x^5 + a has the single root
/// a^(-1/5), l = 1 and w = 1.
pub fn maisner_nart_w(ctx: &FieldCtx, curve: &QuinticCurve, z: Fe) -> Result<MaisnerNart> {
    if !ctx.is_odd_degree() {
        return Err(Error::EvenDegree {
            m: ctx.m(),
            what: "the Maisner-Nart criterion",
        });
    }
    if curve.a.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    if curve.b != curve.a && !curve.b.is_zero() {
        return Err(Error::NotMaisnerNartForm);
    }
    if !p_poly(ctx, curve.a, curve.b, z).is_zero() {
        return Err(Error::NotARootOfP { z });
    }
    if curve.b.is_zero() {
        return Ok(MaisnerNart { w: 1, ell: Fe::ONE });
    }
    let z4 = ctx.square(ctx.square(z));
    let e = Fe::ONE + ctx.inv(z4)?;
    let ell = ctx.kth_root(e, 3)?;
    let w = if ctx.trace(ell) == 0 { 3 } else { 1 };
    Ok(MaisnerNart { w, ell })
}
