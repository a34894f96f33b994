//! The polynomial family G = a7 x^7 + sum_i b_i x^(2^i + 1), its trace
//! function, and the quintic Artin-Schreier curve attached to a shift.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_element, Fe, FieldCtx};

/// G = a7 x^7 + sum_{i=0}^{s} b_i x^(2^i + 1) with a7 != 0.
///
/// `b` always holds s + 1 coefficients; zero entries are absent monomials
/// but still count towards the declared s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePoly {
    a7: Fe,
    b: Vec<Fe>,
}

/// Number of ones in the binary expansion of `i`.
pub fn sigma_digits(i: u64) -> u32 {
    i.count_ones()
}

impl TracePoly {
    pub fn new(a7: Fe, b: Vec<Fe>) -> Result<Self> {
        if a7.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let b = if b.is_empty() { vec![Fe::ZERO] } else { b };
        Ok(TracePoly { a7, b })
    }

    /// The monomial a7 x^7 with s = 0 and b_0 = 0.
    pub fn monomial(a7: Fe) -> Result<Self> {
        Self::new(a7, vec![Fe::ZERO])
    }

    pub fn a7(&self) -> Fe {
        self.a7
    }

    pub fn b(&self) -> &[Fe] {
        &self.b
    }

    /// Declared quadratic-part length s (largest index of `b`).
    pub fn s(&self) -> usize {
        self.b.len() - 1
    }

    /// Checks that every coefficient lies in `ctx`.
    pub fn validate(&self, ctx: &FieldCtx) -> Result<()> {
        for c in std::iter::once(self.a7).chain(self.b.iter().copied()) {
            ctx.elem(c.0 as u64)?;
        }
        Ok(())
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn exponents(&self) -> Vec<u64> {
        let mut out = vec![7u64];
        for (i, bi) in self.b.iter().enumerate() {
            if !bi.is_zero() {
                out.push((1u64 << i) + 1);
            }
        }
        out
    }

    pub fn binary_degree(&self) -> u32 {
        self.exponents()
            .into_iter()
            .map(sigma_digits)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        if x.is_zero() {
            return Fe::ZERO;
        }
        let x2 = ctx.square(x);
        let x3 = ctx.mul(x2, x);
        let x7 = ctx.mul(ctx.square(x3), x);
        let mut acc = ctx.mul(self.a7, x7);
        // frob = x^(2^i)
        let mut frob = x;
        for &bi in &self.b {
            if !bi.is_zero() {
                acc += ctx.mul(bi, ctx.mul(x, frob));
            }
            frob = ctx.square(frob);
        }
        acc
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let json = TracePolyJson {
            a7: self.a7.to_string(),
            b: self
                .b
                .iter()
                .enumerate()
                .map(|(i, bi)| (i.to_string(), bi.to_string()))
                .collect(),
            s: Some(self.s()),
        };
        serde_json::to_value(json).expect("plain struct serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Parses `{"a7": "0x..", "b": {"0": "0x..", ...}, "s": n}`.
    ///
    /// Missing `b` indices are zero; `s` defaults to the largest index given.
    pub fn from_json(ctx: &FieldCtx, text: &str) -> Result<Self> {
        let json: TracePolyJson = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
        let a7 = parse_coefficient(ctx, "a7", &json.a7)?;
        let mut entries = BTreeMap::new();
        for (k, v) in &json.b {
            let i: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("b index {k:?} is not a nonnegative integer")))?;
            if i > 62 {
                return Err(Error::Parse(format!("b index {i} too large")));
            }
            entries.insert(i, parse_coefficient(ctx, "b", v)?);
        }
        let max_index = entries.keys().next_back().copied().unwrap_or(0);
        let s = json.s.unwrap_or(max_index);
        if s < max_index {
            return Err(Error::Parse(format!(
                "s = {s} is smaller than b index {max_index}"
            )));
        }
        if s > 62 {
            return Err(Error::Parse(format!("s = {s} too large")));
        }
        let mut b = vec![Fe::ZERO; s + 1];
        for (i, v) in entries {
            b[i] = v;
        }
        TracePoly::new(a7, b)
    }
}

fn parse_coefficient(ctx: &FieldCtx, name: &str, text: &str) -> Result<Fe> {
    let v =
        parse_element(text).ok_or_else(|| Error::Parse(format!("{name}: {text:?} is not hex")))?;
    Ok(ctx.elem(v)?)
}

#[derive(Serialize, Deserialize)]
struct TracePolyJson {
    a7: String,
    #[serde(default)]
    b: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
}

/// Values of a Boolean function on GF(2)^m, indexed by coordinate bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    m: u32,
    bits: Vec<u8>,
}

impl TruthTable {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        let n = bits.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::TableLength(n));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse("truth table entries must be 0 or 1".into()));
        }
        Ok(TruthTable {
            m: n.trailing_zeros(),
            bits,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    #[inline]
    pub fn get(&self, x: usize) -> u8 {
        self.bits[x]
    }

    /// Bits packed little-endian into 64-bit words (a partial last word for
    /// m < 6).
    pub fn packed(&self) -> Vec<u64> {
        self.bits
            .chunks(64)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u64, |w, (i, &b)| w | ((b as u64) << i))
            })
            .collect()
    }
}

/// Truth table of x -> Tr(G(x)).
pub fn truth_table(ctx: &FieldCtx, g: &TracePoly) -> TruthTable {
    use rayon::prelude::*;
    let bits: Vec<u8> = (0..ctx.q() as u32)
        .into_par_iter()
        .with_min_len(1 << 10)
        .map(|x| ctx.trace(g.eval(ctx, Fe(x))))
        .collect();
    TruthTable { m: ctx.m(), bits }
}

/// Coefficients of y^2 + y = a x^5 + b x^3 + c x + d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuinticCurve {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: Fe,
}

impl QuinticCurve {
    pub fn new(a: Fe, b: Fe, c: Fe, d: Fe) -> Self {
        QuinticCurve { a, b, c, d }
    }

    /// a x^5 + b x^3 + c x + d.
    pub fn rhs(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        let x2 = ctx.square(x);
        let x3 = ctx.mul(x2, x);
        let x5 = ctx.mul(x3, x2);
        ctx.mul(self.a, x5) + ctx.mul(self.b, x3) + ctx.mul(self.c, x) + self.d
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "c": self.c.to_string(),
            "d": self.d.to_string(),
        })
    }

    /// Parses `{"a": "0x..", "b": "0x..", "c": "0x..", "d": "0x.."}`.
    pub fn from_json(ctx: &FieldCtx, text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            a: String,
            b: String,
            c: String,
            d: String,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("curve JSON: {e}")))?;
        Ok(QuinticCurve {
            a: parse_coefficient(ctx, "a", &raw.a)?,
            b: parse_coefficient(ctx, "b", &raw.b)?,
            c: parse_coefficient(ctx, "c", &raw.c)?,
            d: parse_coefficient(ctx, "d", &raw.d)?,
        })
    }
}

/// The quintic curve whose trace function agrees pointwise with
/// x -> Tr(G(x + alpha) + G(x)).
///
/// a = a7 alpha^2, b = a7 alpha^4 + (a7 alpha)^(1/2),
/// c = a7 alpha^6 + a7^(1/4) alpha^(3/4) + a7^(1/2) alpha^(5/2)
///     + sum (b_i alpha)^(2^-i) + sum b_i alpha^(2^i),
/// d = G(alpha).
pub fn reduce_difference(ctx: &FieldCtx, g: &TracePoly, alpha: Fe) -> Result<QuinticCurve> {
    if alpha.is_zero() {
        return Err(Error::ZeroShift);
    }
    let a7 = g.a7();
    let al2 = ctx.square(alpha);
    let al4 = ctx.square(al2);
    let al6 = ctx.mul(al4, al2);
    let sqrt_a7 = ctx.sqrt(a7);
    let a = ctx.mul(a7, al2);
    let b = ctx.mul(a7, al4) + ctx.sqrt(ctx.mul(a7, alpha));
    let mut c = ctx.mul(a7, al6)
        + ctx.mul(ctx.sqrt(sqrt_a7), ctx.frac_pow(alpha, 3, 4)?)
        + ctx.mul(sqrt_a7, ctx.frac_pow(alpha, 5, 2)?);
    let mut frob = alpha;
    for (i, &bi) in g.b().iter().enumerate() {
        if !bi.is_zero() {
            c += ctx.frobenius_inv(ctx.mul(bi, alpha), i as u32) + ctx.mul(bi, frob);
        }
        frob = ctx.square(frob);
    }
    Ok(QuinticCurve {
        a,
        b,
        c,
        d: g.eval(ctx, alpha),
    })
}
