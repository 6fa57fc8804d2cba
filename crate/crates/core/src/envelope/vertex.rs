//! Vertex operators u_(n) for arbitrary states u, via the iterate formula
//! (x_(p) w)_(n) = Σ_l (−1)^l C(p, l) [x_(p−l) w_(n+l) − (−1)^p w_(p+n−l) x_(l)].

use super::{degree_of, key_degree, EKey, EVec, Envelope, ONE};
use crate::error::Result;
use crate::regfun::RegFun;
use crate::scalar::{binom_s, Scalar};

#[derive(Clone, Copy)]
enum Gen {
    Tau(usize),
    Omega(usize),
}

impl Envelope {
    fn gen_mode(&self, g: Gen, n: i32, v: &EVec) -> Result<EVec> {
        match g {
            Gen::Tau(i) => self.tau(i, n, v),
            Gen::Omega(j) => self.omega(j, n, v),
        }
    }

    fn key_mode(&self, key: &EKey, n: i32, v: &EVec) -> Result<EVec> {
        let (mono, f, jet) = key;
        let (x, p, w): (Gen, i32, EKey) = if let Some(&(n1, j1)) = mono.first() {
            (Gen::Tau(j1 as usize), n1, (mono[1..].to_vec(), *f, jet.clone()))
        } else if let Some(&(p0, j)) = jet.last() {
            (Gen::Omega(j as usize), -1 - p0 as i32, (vec![], *f, jet[..jet.len() - 1].to_vec()))
        } else {
            if *f == ONE {
                return Ok(if n == -1 { v.clone() } else { EVec::new() });
            }
            return self.fun(&RegFun::basis(*f), n, v);
        };
        let Some(d) = degree_of(v) else { return Ok(EVec::new()) };
        let (d, dw) = (d as i32, key_degree(&w) as i32);
        let wv = EVec::basis(w.clone());
        let mut out = EVec::new();
        for l in 0..=(dw + d - n - 1).max(-1) {
            let c = binom_s(p as i64, l as i64);
            let c = if l % 2 == 0 { c } else { c.neg_ref() };
            let inner = self.key_mode(&w, n + l, v)?;
            out.add_scaled(&self.gen_mode(x, p - l, &inner)?, &c);
        }
        for l in 0..=d {
            let c = binom_s(p as i64, l as i64);
            let sign = if (l + p) % 2 == 0 { -1 } else { 1 };
            let c = c.mul_ref(&Scalar::int(sign));
            let inner = self.gen_mode(x, l, v)?;
            if inner.is_zero() {
                continue;
            }
            out.add_scaled(&self.state_mode(&wv, p + n - l, &inner)?, &c);
        }
        Ok(out)
    }

    /// u_(n) v.
    pub fn state_mode(&self, u: &EVec, n: i32, v: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for (k, c) in &u.terms {
            out.add_scaled(&self.key_mode(k, n, v)?, c);
        }
        Ok(out)
    }
}
