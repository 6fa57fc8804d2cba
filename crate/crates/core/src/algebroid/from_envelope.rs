//! The vertex algebroid read off the degree ≤ 1 part of the enveloping algebra,
//! given a splitting s of V_1 → T extended by s(aτ_i) = a_(−1)s(τ_i).

use super::{bracket, d, frame_add, frame_is_zero, frame_mul, frame_scale, AlgebroidData, Frame, V1};
use crate::envelope::{b_elem, key_degree, tau_state, EVec, Envelope, ONE};
use crate::error::{Error, Result};
use crate::regfun::RegFun;
use crate::scalar::Scalar;

/// Splits a degree-1 state into its T and Ω components.
pub fn split_v1(v: &EVec) -> Result<V1> {
    let mut out = V1::default();
    for ((mono, f, jet), c) in &v.terms {
        match (mono.as_slice(), jet.as_slice()) {
            ([(-1, i)], []) => out.t[*i as usize].add_term(*f, c.clone()),
            ([], [(0, r)]) => out.w[*r as usize].add_term(*f, c.clone()),
            _ => return Err(Error::Dimension("expected a degree-1 state".into())),
        }
    }
    Ok(out)
}

pub fn canonical_splitting() -> [EVec; 3] {
    [tau_state(0), tau_state(1), tau_state(2)]
}

/// A_{sl2,k} as seen inside the envelope.
pub struct EnvelopeAlgebroid<'a> {
    pub env: &'a Envelope,
    pub splitting: [EVec; 3],
}

/// Checks π∘s = Id on the frame and returns the induced algebroid.
pub fn truncate_from_envelope(env: &Envelope, s: [EVec; 3]) -> Result<EnvelopeAlgebroid<'_>> {
    for (i, v) in s.iter().enumerate() {
        if v.terms.keys().any(|k| key_degree(k) != 1) {
            return Err(Error::SplittingInvalid);
        }
        let p = split_v1(v)?;
        for j in 0..3 {
            let want = if i == j { RegFun::basis(ONE) } else { RegFun::new() };
            if !p.t[j].minus(&want).is_zero() {
                return Err(Error::SplittingInvalid);
            }
        }
    }
    Ok(EnvelopeAlgebroid { env, splitting: s })
}

impl EnvelopeAlgebroid<'_> {
    pub fn lift(&self, x: &Frame) -> Result<EVec> {
        let mut out = EVec::new();
        for (i, b) in x.iter().enumerate() {
            if !b.is_zero() {
                out.add_assign(&self.env.fun(b, -1, &self.splitting[i])?);
            }
        }
        Ok(out)
    }

    /// Ω part, insisting that the T part vanishes.
    fn omega_part(v: &EVec) -> Result<Frame> {
        let p = split_v1(v)?;
        if !frame_is_zero(&p.t) {
            return Err(Error::ExtensionInconsistent("nonzero T component".into()));
        }
        Ok(p.w)
    }

    /// γ(a, x) = s(ax) − a_(−1)s(x).
    pub fn try_gamma(&self, a: &RegFun, x: &Frame) -> Result<Frame> {
        let ax = frame_mul(a, x);
        let v = self.lift(&ax)?.minus(&self.env.fun(a, -1, &self.lift(x)?)?);
        Self::omega_part(&v)
    }

    /// ⟨x, y⟩ = s(x)_(1)s(y).
    pub fn try_pair(&self, x: &Frame, y: &Frame) -> Result<RegFun> {
        let v = self.env.state_mode(&self.lift(x)?, 1, &self.lift(y)?)?;
        if v.terms.keys().any(|k| key_degree(k) != 0) {
            return Err(Error::Dimension("pairing left degree 0".into()));
        }
        Ok(v.terms.iter().map(|(k, c)| (k.1, c.clone())).collect())
    }

    /// c(x, y) = s([x, y]) − s(x)_(0)s(y) + ½∂⟨x, y⟩.
    pub fn try_c(&self, x: &Frame, y: &Frame) -> Result<Frame> {
        let prod = self.env.state_mode(&self.lift(x)?, 0, &self.lift(y)?)?;
        let w = Self::omega_part(&self.lift(&bracket(x, y))?.minus(&prod))?;
        Ok(frame_add(&w, &frame_scale(&Scalar::frac(1, 2), &d(&self.try_pair(x, y)?))))
    }

    /// V_1 = T ⊕ Ω inside the envelope.
    pub fn embed(&self, v: &V1) -> Result<EVec> {
        let mut out = self.lift(&v.t)?;
        for (r, f) in v.w.iter().enumerate() {
            out.add_assign(&b_elem(f, &[(0, r as u8)]));
        }
        Ok(out)
    }
}

/// The trait has no error channel: the envelope must be built with enough
/// degree and block room for the arguments.
impl AlgebroidData for EnvelopeAlgebroid<'_> {
    fn level(&self) -> &Scalar {
        &self.env.level
    }
    fn gamma(&self, a: &RegFun, x: &Frame) -> Frame {
        self.try_gamma(a, x).expect("envelope cutoff too small for γ")
    }
    fn pair_tt(&self, x: &Frame, y: &Frame) -> RegFun {
        self.try_pair(x, y).expect("envelope cutoff too small for ⟨,⟩")
    }
    fn c(&self, x: &Frame, y: &Frame) -> Frame {
        self.try_c(x, y).expect("envelope cutoff too small for c")
    }
}
