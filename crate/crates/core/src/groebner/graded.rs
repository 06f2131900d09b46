use serde::Serialize;

use crate::poly::Monomial;

/// `dims[i]` is the dimension of the degree-`i` component of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: Vec<u64>,
}

impl GradedDims {
    pub(crate) fn from_leading_monomials(nvars: usize, leads: &[Monomial], max_degree: usize) -> Self {
        let dims = (0..=max_degree)
            .map(|d| {
                let mut standard = 0u64;
                for_each_monomial(nvars, d as u32, &mut |e| {
                    if !leads.iter().any(|l| l.exponents().iter().zip(e).all(|(a, b)| a <= b)) {
                        standard += 1;
                    }
                });
                monomial_count(nvars, d as u32) - standard
            })
            .collect();
        GradedDims { dims }
    }

    pub fn bound(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    // binomial(n + d - 1, d)
    let mut acc: u64 = 1;
    for i in 0..d as u64 {
        acc = acc * (n as u64 + i) / (i + 1);
    }
    acc
}

/// Calls `f` on every exponent vector of total degree `d`.
pub fn for_each_monomial(n: usize, d: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(pos: usize, left: u32, e: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        let n = e.len();
        if pos + 1 == n {
            e[pos] = left;
            f(e);
            e[pos] = 0;
            return;
        }
        for k in (0..=left).rev() {
            e[pos] = k;
            rec(pos + 1, left - k, e, f);
        }
        e[pos] = 0;
    }
    if n == 0 {
        if d == 0 {
            f(&[]);
        }
        return;
    }
    let mut e = vec![0; n];
    rec(0, d, &mut e, f);
}

/// All monomials of degree `d` in `n` variables, lexicographically descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_monomial(n, d, &mut |e| out.push(Monomial::new(e.to_vec())));
    out
}
