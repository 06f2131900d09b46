//! Buchberger's algorithm with Gebauer–Möller pair elimination and the
//! normal selection strategy. Polynomials are handled as term vectors sorted
//! descending in the active monomial order.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

pub(crate) type Terms = Vec<(Monomial, Rational)>;

pub(crate) fn to_ordered(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| order.compare(&b.0, &a.0));
    t
}

pub(crate) fn from_ordered(nvars: usize, t: Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t)
}

fn make_monic(t: &mut Terms) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, a) in t.iter_mut() {
                *a *= &inv;
            }
        }
    }
}

/// `p - coef * q * g`, all sorted descending in `order`.
fn sub_scaled(p: &[(Monomial, Rational)], g: &Terms, q: &Monomial, coef: &Rational, order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut gi = g.iter().map(|(m, c)| (m.mul(q), c * coef)).peekable();
    let mut pi = p.iter().peekable();
    loop {
        match (pi.peek(), gi.peek()) {
            (Some(a), Some(b)) => match order.compare(&a.0, &b.0) {
                Ordering::Greater => out.push(pi.next().cloned().unwrap()),
                Ordering::Less => {
                    let (m, c) = gi.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, c) = gi.next().unwrap();
                    let a = pi.next().unwrap();
                    let d = &a.1 - c;
                    if !d.is_zero() {
                        out.push((m, d));
                    }
                }
            },
            (Some(_), None) => out.push(pi.next().cloned().unwrap()),
            (None, Some(_)) => {
                let (m, c) = gi.next().unwrap();
                out.push((m, -c));
            }
            (None, None) => break,
        }
    }
    out
}

/// Full reduction of `p` modulo `basis` (all monic and order-sorted).
pub(crate) fn reduce<'a, I>(p: Terms, basis: I, order: &MonomialOrder) -> Terms
where
    I: Iterator<Item = &'a Terms> + Clone,
{
    let mut rem: Terms = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        let divisor = basis.clone().find(|g| g[0].0.divides(m));
        match divisor {
            Some(g) => {
                let q = g[0].0.quotient_of(m).expect("divides");
                let coef = c / &g[0].1;
                cur = sub_scaled(&cur[start..], g, &q, &coef, order);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn s_polynomial(f: &Terms, g: &Terms, lcm: &Monomial, order: &MonomialOrder) -> Terms {
    let qf = f[0].0.quotient_of(lcm).expect("lcm");
    let qg = g[0].0.quotient_of(lcm).expect("lcm");
    let fq: Terms = f.iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
    // f and g are monic
    let mut out = sub_scaled(&fq, g, &qg, &Rational::one(), order);
    if let Some(first) = out.first() {
        if first.0 == *lcm {
            out.remove(0);
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<Terms>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn active_polys(&self) -> impl Iterator<Item = &Terms> + Clone {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
    }

    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn update(&mut self, h: Terms) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let h_lm = self.lm(hi).clone();

        let candidates: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, h_lm.lcm(self.lm(g))))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, lcm)) in candidates.iter().enumerate() {
            let coprime = h_lm.is_coprime(self.lm(*g));
            let dominated = candidates[k + 1..].iter().any(|(_, l2)| l2.divides(lcm))
                || kept.iter().any(|(_, l2)| l2.divides(lcm));
            if coprime || !dominated {
                kept.push((*g, lcm.clone()));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !h_lm.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: hi, lcm })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(h_lm.divides(&p.lcm)
                && polys[p.i][0].0.lcm(&h_lm) != p.lcm
                && polys[p.j][0].0.lcm(&h_lm) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && h_lm.divides(&self.polys[g][0].0) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    fn take_min_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            order
                .compare(&self.pairs[a].lcm, &self.pairs[b].lcm)
                .then_with(|| (self.pairs[a].j, self.pairs[a].i).cmp(&(self.pairs[b].j, self.pairs[b].i)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }
}

/// Reduced Gröbner basis, sorted ascending by leading monomial.
pub(crate) fn reduced_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Terms> {
    let mut st = State {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let t = to_ordered(g, order);
        let mut r = reduce(t, st.active_polys(), order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].0.is_one() {
            return vec![r];
        }
        st.update(r);
    }
    while let Some(pair) = st.take_min_pair() {
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j], &pair.lcm, order);
        let mut r = reduce(s, st.active_polys(), order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].0.is_one() {
            return vec![r];
        }
        st.update(r);
    }

    let minimal: Vec<Terms> = st.active_polys().cloned().collect();
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let head = g[0].clone();
        let tail = g[1..].to_vec();
        let others = minimal
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != k)
            .map(|(_, p)| p);
        let mut r = vec![head];
        r.extend(reduce(tail, others, order));
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.compare(&a[0].0, &b[0].0));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    #[test]
    fn sub_scaled_cancels_leading() {
        let r = Ring::numbered(2);
        let o = MonomialOrder::grevlex();
        let p = to_ordered(&parse_polynomial("x1^2 + x2^2", &r).unwrap(), &o);
        let g = to_ordered(&parse_polynomial("x1 - x2", &r).unwrap(), &o);
        let q = Monomial::new(vec![1, 0]);
        let out = sub_scaled(&p, &g, &q, &Rational::one(), &o);
        let got = from_ordered(2, out);
        assert_eq!(got, parse_polynomial("x1*x2 + x2^2", &r).unwrap());
    }
}
