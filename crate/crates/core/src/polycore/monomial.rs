//! Monomials and monomial orders.

use std::cmp::Ordering;

/// A power product of the ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }
}

/// A total order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; the default everywhere.
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Eliminates the first `split` variables: compares the leading block
    /// grevlex first, then the tail block grevlex.
    BlockElim { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::GrevLex => grevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::BlockElim { split } => {
                let k = *split;
                grevlex(&a.exps()[..k], &b.exps()[..k])
                    .then_with(|| grevlex(&a.exps()[k..], &b.exps()[k..]))
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // equal degree: the later a difference appears, the better; a is greater
    // when the last nonzero entry of a-b is negative
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_classic() {
        let o = MonomialOrder::GrevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in k[x,y,z]
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn lex_vs_degree() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn block_elimination_dominates() {
        let o = MonomialOrder::BlockElim { split: 1 };
        // t > x^9 when t is the eliminated block
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn divides_and_quotient() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.div_into(&b), m(&[1, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(a.gcd(&b), m(&[1, 2]));
    }
}
