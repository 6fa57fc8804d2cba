//! Zhu's algebra of the enveloping algebra: the star product, reduction modulo O(V)
//! to A ⊗ U(g), and the comparison with differential operators on G.
//!
//! A class is written Σ a ⊗ w, meaning [a] * [w_1(−1)1] * ⋯ * [w_l(−1)1], with the
//! letters w in PBW order.

use crate::algebroid::{Acc, AxiomReport};
use crate::envelope::{b_elem, degree_of, fun_state, key_degree, omega_state, tau_state, vacuum, EVec, Envelope, DIM};
use crate::error::Result;
use crate::linalg::Lin;
use crate::regfun::{self, FKey, RegFun};
use crate::scalar::{binom_s, Scalar};

pub type Word = Vec<u8>;
pub type ZKey = (FKey, Word);
pub type ZhuElement = Lin<ZKey>;

/// PBW normal form of a word in U(g).
pub fn pbw(word: &[u8], g: &Envelope) -> Lin<Word> {
    let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] > word[i + 1]) else {
        return Lin::basis(word.to_vec());
    };
    let (x, y) = (word[i], word[i + 1]);
    let mut swapped = word.to_vec();
    swapped.swap(i, i + 1);
    let mut out = pbw(&swapped, g);
    for k in 0..DIM {
        let c = g.c(x as usize, y as usize, k);
        if c.is_zero() {
            continue;
        }
        let mut w = word[..i].to_vec();
        w.push(k as u8);
        w.extend_from_slice(&word[i + 2..]);
        out.add_scaled(&pbw(&w, g), c);
    }
    out
}

fn normalize(z: &[(RegFun, Word, Scalar)], g: &Envelope) -> ZhuElement {
    let mut out = ZhuElement::new();
    for (f, w, c) in z {
        for (w2, c2) in pbw(w, g).terms {
            let s = c.mul_ref(&c2);
            for (k, c3) in &f.terms {
                out.add_term((*k, w2.clone()), s.mul_ref(c3));
            }
        }
    }
    out
}

/// w · a = Σ a' ⊗ w' in the algebra of differential operators.
fn word_times_fun(word: &[u8], a: &RegFun) -> Vec<(RegFun, Word)> {
    let Some((&x, rest)) = word.split_last() else {
        return vec![(a.clone(), vec![])];
    };
    // (w x) a = (w a) x + w (x·a)
    let mut out: Vec<(RegFun, Word)> = word_times_fun(rest, a)
        .into_iter()
        .map(|(f, mut w)| {
            w.push(x);
            (f, w)
        })
        .collect();
    let da = regfun::tau(x as usize, a);
    if !da.is_zero() {
        out.extend(word_times_fun(rest, &da));
    }
    out
}

impl Envelope {
    /// u * v = Σ_j C(wt u, j) u_(j−1) v, extended over the homogeneous parts of u.
    pub fn star(&self, u: &EVec, v: &EVec) -> Result<EVec> {
        let mut parts: std::collections::BTreeMap<usize, EVec> = Default::default();
        for (k, c) in &u.terms {
            parts.entry(key_degree(k)).or_default().add_term(k.clone(), c.clone());
        }
        let mut out = EVec::new();
        for (wt, part) in parts {
            for j in 0..=wt {
                out.add_scaled(&self.state_mode(&part, j as i32 - 1, v)?, &binom_s(wt as i64, j as i64));
            }
        }
        Ok(out)
    }

    /// The class of v in A ⊗ U(g).
    pub fn reduce_o(&self, v: &EVec) -> ZhuElement {
        let mut out = ZhuElement::new();
        for ((mono, f, jet), c) in &v.terms {
            if !jet.is_empty() {
                continue;
            }
            let n: i32 = mono.iter().map(|&(m, _)| -m - 1).sum();
            let c = if n % 2 == 0 { c.clone() } else { c.neg_ref() };
            let word: Word = mono.iter().rev().map(|&(_, i)| i).collect();
            for (w, s) in pbw(&word, self).terms {
                out.add_term((*f, w), c.mul_ref(&s));
            }
        }
        out
    }

    /// A representative: w_l(−1) ⋯ w_1(−1) a for a ⊗ w.
    pub fn zhu_lift(&self, z: &ZhuElement) -> Result<EVec> {
        let mut out = EVec::new();
        for ((f, w), c) in &z.terms {
            let mut v = fun_state(&RegFun::basis(*f));
            for &x in w {
                v = self.tau(x as usize, -1, &v)?;
            }
            out.add_scaled(&v, c);
        }
        Ok(out)
    }

    /// Product in A ⊗ U(g) with letters acting on functions by the left-invariant fields.
    pub fn d_product(&self, x: &ZhuElement, y: &ZhuElement) -> ZhuElement {
        let mut raw = Vec::new();
        for ((a, w), c) in &x.terms {
            for ((a2, w2), c2) in &y.terms {
                for (f, mut w3) in word_times_fun(w, &RegFun::basis(*a2)) {
                    w3.extend_from_slice(w2);
                    raw.push((regfun::mul_uncapped(&RegFun::basis(*a), &f), w3, c.mul_ref(c2)));
                }
            }
        }
        normalize(&raw, self)
    }

    fn zhu_samples(&self) -> Vec<(String, EVec)> {
        let e = |l, r, c| RegFun::basis((l, r, c));
        let f = |l, r, c| fun_state(&e(l, r, c));
        let mut s =
            vec![("1".to_string(), vacuum()), ("E101".to_string(), f(1, 0, 1)), ("t1".to_string(), tau_state(1))];
        if let Ok(v) = self.tau(0, -1, &f(1, 1, 0)) {
            s.push(("t0(-1)E110".into(), v));
        }
        if let Ok(v) = self.tau(2, -2, &vacuum()) {
            s.push(("t2(-2)1".into(), v));
        }
        if let Ok(v) = self.tau(1, -1, &tau_state(0)).and_then(|v| Ok(v.plus(&f(2, 1, 2)))) {
            s.push(("t1t0+E212".into(), v));
        }
        s.push(("w1".into(), omega_state(1)));
        s
    }
}

/// Star product on classes, computed through representatives.
pub fn class_star(env: &Envelope, x: &ZhuElement, y: &ZhuElement) -> Result<ZhuElement> {
    Ok(env.reduce_o(&env.star(&env.zhu_lift(x)?, &env.zhu_lift(y)?)?))
}

pub fn zhu_checks(env: &Envelope, pairs: usize, triples: usize) -> Result<AxiomReport> {
    let samples = env.zhu_samples();
    let mut omega = Acc::new("omega-class");
    let mut unit = Acc::new("vacuum-unit");
    let mut a_star = Acc::new("a-star");
    let mut a_comm = Acc::new("a-commute");
    let mut x_comm = Acc::new("x-commutator");
    let mut assoc = Acc::new("associative");
    let mut well = Acc::new("well-defined");
    let mut dprod = Acc::new("d-product");
    let mut letters = Acc::new("sl2-letters");
    let mut idem = Acc::new("idempotent");
    for r in 0..DIM {
        omega.check(env.reduce_o(&omega_state(r)).is_zero(), || format!("[w{r}]"));
    }
    for (name, v) in &samples {
        if degree_of(v).unwrap_or(0) <= 1 {
            for r in 0..DIM {
                let z = env.reduce_o(&env.star(v, &omega_state(r))?);
                omega.check(z.is_zero(), || format!("[{name}]*[w{r}]"));
            }
        }
        unit.check(env.star(&vacuum(), v)? == *v, || format!("1*{name}"));
        let z = env.reduce_o(v);
        idem.check(env.reduce_o(&env.zhu_lift(&z)?) == z, || name.clone());
        let a = fun_state(&regfun::coord(1, 2));
        let lhs = env.reduce_o(&env.star(&a, v)?);
        a_star.check(lhs == env.reduce_o(&env.fun(&regfun::coord(1, 2), -1, v)?), || name.clone());
    }
    // commutativity of function classes
    let funs: Vec<FKey> = regfun::basis_upto(2);
    let mut count = 0;
    'outer: for (i, &k1) in funs.iter().enumerate() {
        for &k2 in funs.iter().skip(i) {
            if count == pairs {
                break 'outer;
            }
            count += 1;
            let (a, b) = (fun_state(&RegFun::basis(k1)), fun_state(&RegFun::basis(k2)));
            let ab = env.reduce_o(&env.star(&a, &b)?);
            let ba = env.reduce_o(&env.star(&b, &a)?);
            let prod = env.reduce_o(&fun_state(&regfun::mul_uncapped(&RegFun::basis(k1), &RegFun::basis(k2))));
            a_comm.check(ab == ba && ab == prod, || format!("{k1:?} {k2:?}"));
        }
    }
    // [x]*[a] − [a]*[x] = [x·a]
    for i in 0..DIM {
        for k in regfun::basis_upto(2) {
            let a = RegFun::basis(k);
            let (x, av) = (tau_state(i), fun_state(&a));
            let lhs = env.reduce_o(&env.star(&x, &av)?.minus(&env.star(&av, &x)?));
            x_comm.check(lhs == env.reduce_o(&fun_state(&regfun::tau(i, &a))), || format!("t{i} {k:?}"));
        }
    }
    // e, f, h letters
    let ehf = regfun::sl2().ehf_in_tau();
    let letter = |row: &[Scalar]| -> EVec {
        let mut v = EVec::new();
        for (i, c) in row.iter().enumerate() {
            v.add_scaled(&tau_state(i), c);
        }
        v
    };
    let (e, h, f) = (letter(&ehf[0]), letter(&ehf[1]), letter(&ehf[2]));
    let br = |x: &EVec, y: &EVec| -> Result<ZhuElement> { Ok(env.reduce_o(&env.star(x, y)?.minus(&env.star(y, x)?))) };
    letters.check(br(&e, &f)? == env.reduce_o(&h), || "[e,f] = h".into());
    letters.check(br(&h, &e)? == env.reduce_o(&e.scaled(&Scalar::int(2))), || "[h,e] = 2e".into());
    letters.check(br(&h, &f)? == env.reduce_o(&f.scaled(&Scalar::int(-2))), || "[h,f] = -2f".into());
    // products of classes, independence of representatives, associativity
    let small: Vec<&(String, EVec)> = samples.iter().filter(|(_, v)| degree_of(v).unwrap_or(0) <= 2).collect();
    let mut perturb: Vec<(String, EVec)> = Vec::new();
    for (nv, v) in &small {
        for x in 0..DIM {
            perturb.push((format!("(t{x}(-2)+t{x}(-1)){nv}"), env.tau(x, -2, v)?.plus(&env.tau(x, -1, v)?)));
        }
    }
    for r in 0..DIM {
        let b = b_elem(&regfun::coord(2, 1), &[(0, r as u8)]);
        perturb.push((format!("t{r}(-1)B"), env.tau(r, -1, &b)?));
        perturb.push((format!("B{r}"), b));
    }
    for (no, o) in &perturb {
        well.check(env.reduce_o(o).is_zero(), || no.clone());
    }
    for (i, (nu, u)) in small.iter().enumerate() {
        for (nv, v) in small.iter() {
            let zu = env.reduce_o(u);
            let zv = env.reduce_o(v);
            dprod.check(env.reduce_o(&env.star(u, v)?) == env.d_product(&zu, &zv), || format!("{nu}*{nv}"));
        }
        if i % 2 == 0 {
            for (no, o) in &perturb {
                let left = env.reduce_o(&env.star(o, u)?);
                let right = env.reduce_o(&env.star(u, o)?);
                well.check(left.is_zero() && right.is_zero(), || format!("{no} with {nu}"));
            }
        }
    }
    let mut t = 0;
    'tri: for (nu, u) in &small {
        for (nv, v) in &small {
            for (nw, w) in &small {
                if t == triples {
                    break 'tri;
                }
                let dsum = degree_of(u).unwrap_or(0) + degree_of(v).unwrap_or(0) + degree_of(w).unwrap_or(0);
                if dsum > 4 {
                    continue;
                }
                t += 1;
                let l = env.star(&env.star(u, v)?, w)?;
                let r = env.star(u, &env.star(v, w)?)?;
                assoc.check(env.reduce_o(&l) == env.reduce_o(&r), || format!("({nu}*{nv})*{nw}"));
            }
        }
    }
    Ok(AxiomReport {
        results: vec![
            omega.done(),
            unit.done(),
            a_star.done(),
            a_comm.done(),
            x_comm.done(),
            letters.done(),
            dprod.done(),
            well.done(),
            assoc.done(),
            idem.done(),
        ],
        notes: vec![],
    })
}
