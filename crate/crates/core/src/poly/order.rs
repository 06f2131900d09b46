use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::monomial::Monomial;
use super::weight::WeightVector;

/// A multiplicative total order on monomials with the unit monomial minimal.
///
/// `Weighted` is the degree-refined weight order used for initial forms with
/// the min convention: total degree ascending, then `w`-degree *descending*,
/// then the tie-break order. On polynomials homogeneous in the standard
/// grading the leading term therefore has minimal `w`-degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder(Kind);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Lex,
    GrevLex,
    Weighted {
        weights: WeightVector,
        scaled: ScaledWeights,
        tiebreak: Box<MonomialOrder>,
    },
    Block {
        front: Vec<usize>,
        back: Vec<usize>,
        front_order: Box<MonomialOrder>,
        back_order: Box<MonomialOrder>,
    },
}

/// Positive integer multiple of the weight vector; same order, cheaper compare.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum ScaledWeights {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl ScaledWeights {
    fn new(w: &WeightVector) -> Self {
        let mut lcm = BigInt::one();
        for v in w.entries() {
            lcm = lcm.lcm(v.denom());
        }
        let ints: Vec<BigInt> = w
            .entries()
            .iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect();
        let small: Option<Vec<i64>> = ints
            .iter()
            .map(|v| v.to_i64().filter(|x| x.unsigned_abs() < (1u64 << 40)))
            .collect();
        match small {
            Some(s) => ScaledWeights::Small(s),
            None => ScaledWeights::Big(ints),
        }
    }

    fn cmp_degrees(&self, a: &View, b: &View) -> Ordering {
        match self {
            ScaledWeights::Small(w) => {
                let da: i128 = (0..a.len()).map(|k| w[k] as i128 * a.get(k) as i128).sum();
                let db: i128 = (0..b.len()).map(|k| w[k] as i128 * b.get(k) as i128).sum();
                da.cmp(&db)
            }
            ScaledWeights::Big(w) => {
                let da: BigInt = (0..a.len()).map(|k| &w[k] * BigInt::from(a.get(k))).sum();
                let db: BigInt = (0..b.len()).map(|k| &w[k] * BigInt::from(b.get(k))).sum();
                da.cmp(&db)
            }
        }
    }
}

/// Exponent vector restricted to a list of variable positions.
struct View<'a> {
    exps: &'a [u32],
    idx: Option<&'a [usize]>,
}

impl View<'_> {
    fn len(&self) -> usize {
        self.idx.map_or(self.exps.len(), <[usize]>::len)
    }

    fn get(&self, k: usize) -> u32 {
        match self.idx {
            Some(idx) => self.exps[idx[k]],
            None => self.exps[k],
        }
    }

    fn degree(&self) -> u64 {
        (0..self.len()).map(|k| self.get(k) as u64).sum()
    }

    fn materialize(&self) -> Vec<u32> {
        (0..self.len()).map(|k| self.get(k)).collect()
    }
}

impl fmt::Display for MonomialOrder {
    /// Descriptor such as `grevlex` or `weighted(0,1,2; grevlex)`; variables
    /// in block descriptors are 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Kind::Lex => write!(f, "lex"),
            Kind::GrevLex => write!(f, "grevlex"),
            Kind::Weighted { weights, tiebreak, .. } => write!(f, "weighted({weights}; {tiebreak})"),
            Kind::Block {
                front,
                front_order,
                back_order,
                ..
            } => {
                let vars: Vec<String> = front.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "block([{}]: {front_order}; {back_order})", vars.join(","))
            }
        }
    }
}

impl MonomialOrder {
    /// Lexicographic with `x1 > x2 > ...`.
    pub fn lex() -> Self {
        MonomialOrder(Kind::Lex)
    }

    /// Graded reverse lexicographic with `x1 > x2 > ...`.
    pub fn grevlex() -> Self {
        MonomialOrder(Kind::GrevLex)
    }

    pub fn weighted(weights: WeightVector, tiebreak: MonomialOrder) -> Self {
        let scaled = ScaledWeights::new(&weights);
        MonomialOrder(Kind::Weighted {
            weights,
            scaled,
            tiebreak: Box::new(tiebreak),
        })
    }

    /// Block order on `nvars` variables: the `front` variables are compared
    /// first with `front_order`, ties broken on the rest with `back_order`.
    pub fn block(
        nvars: usize,
        front: &[usize],
        front_order: MonomialOrder,
        back_order: MonomialOrder,
    ) -> Self {
        let mut front = front.to_vec();
        front.sort_unstable();
        front.dedup();
        let back = (0..nvars).filter(|i| front.binary_search(i).is_err()).collect();
        MonomialOrder(Kind::Block {
            front,
            back,
            front_order: Box::new(front_order),
            back_order: Box::new(back_order),
        })
    }

    /// Grevlex block order eliminating the `drop` variables.
    pub fn elimination(nvars: usize, drop: &[usize]) -> Self {
        Self::block(nvars, drop, Self::grevlex(), Self::grevlex())
    }

    /// True if the order compares total degree first.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self.0, Kind::GrevLex | Kind::Weighted { .. })
    }

    pub fn weights(&self) -> Option<&WeightVector> {
        match &self.0 {
            Kind::Weighted { weights, .. } => Some(weights),
            _ => None,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let va = View { exps: a.exponents(), idx: None };
        let vb = View { exps: b.exponents(), idx: None };
        self.cmp_view(&va, &vb)
    }

    fn cmp_view(&self, a: &View, b: &View) -> Ordering {
        match &self.0 {
            Kind::Lex => {
                for k in 0..a.len() {
                    match a.get(k).cmp(&b.get(k)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            Kind::GrevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for k in (0..a.len()).rev() {
                        match a.get(k).cmp(&b.get(k)) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            Kind::Weighted {
                scaled, tiebreak, ..
            } => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| scaled.cmp_degrees(a, b).reverse())
                .then_with(|| tiebreak.cmp_view(a, b)),
            Kind::Block {
                front,
                back,
                front_order,
                back_order,
            } => {
                let sub = |order: &MonomialOrder, idx: &[usize]| {
                    if a.idx.is_none() {
                        order.cmp_view(
                            &View { exps: a.exps, idx: Some(idx) },
                            &View { exps: b.exps, idx: Some(idx) },
                        )
                    } else {
                        let ea = a.materialize();
                        let eb = b.materialize();
                        order.cmp_view(
                            &View { exps: &ea, idx: Some(idx) },
                            &View { exps: &eb, idx: Some(idx) },
                        )
                    }
                };
                sub(front_order, front).then_with(|| sub(back_order, back))
            }
        }
    }
}
