//! Multivariate polynomials in canonical sorted form.

use super::{Monomial, PolyRing, Scalar};

/// An exact multivariate polynomial. Terms are strictly decreasing in the
/// ring order and never carry a zero coefficient; the zero polynomial is the
/// empty term list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Scalar, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Builds from a term list already sorted strictly descending.
    pub(crate) fn from_sorted(terms: Vec<(Scalar, Monomial)>) -> Self {
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Scalar, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    /// Total degree, or -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(_, m)| m.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(_, m)| m.total_degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

impl PolyRing {
    pub fn zero_poly(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one_poly(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(c, Monomial::one(self.nvars()))])
        }
    }

    pub fn int(&self, n: i64) -> Polynomial {
        self.constant(self.field().from_i64(n))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        Polynomial::from_sorted(vec![(self.field().one(), Monomial::var(self.nvars(), i))])
    }

    pub fn monomial(&self, c: Scalar, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars());
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(c, m)])
        }
    }

    /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn poly_from_terms(&self, mut terms: Vec<(Scalar, Monomial)>) -> Polynomial {
        terms.sort_by(|a, b| self.order().cmp(&b.1, &a.1));
        let mut out: Vec<(Scalar, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc = self.field().add(lc, &c);
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        out.push((c, m));
                    }
                }
            }
        }
        Polynomial::from_sorted(out)
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.order().cmp(&a.terms[i].1, &b.terms[j].1) {
                std::cmp::Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.field().add(&a.terms[i].0, &b.terms[j].0);
                    if !c.is_zero() {
                        out.push((c, a.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Polynomial::from_sorted(out)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(
            a.terms
                .iter()
                .map(|(c, m)| (self.field().neg(c), m.clone()))
                .collect(),
        )
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.neg(b))
    }

    /// a - c * m * b, the basic reduction step.
    pub fn sub_scaled(&self, a: &Polynomial, c: &Scalar, m: &Monomial, b: &Polynomial) -> Polynomial {
        let scaled = Polynomial::from_sorted(
            b.terms
                .iter()
                .map(|(bc, bm)| (self.field().mul(c, bc), m.mul(bm)))
                .collect(),
        );
        self.sub(a, &scaled)
    }

    pub fn mul_scalar(&self, a: &Polynomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            a.terms
                .iter()
                .map(|(ac, m)| (self.field().mul(ac, c), m.clone()))
                .collect(),
        )
    }

    pub fn mul_term(&self, a: &Polynomial, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            a.terms
                .iter()
                .map(|(ac, am)| (self.field().mul(ac, c), m.mul(am)))
                .collect(),
        )
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let mut acc = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ac, am) in &a.terms {
            for (bc, bm) in &b.terms {
                acc.push((self.field().mul(ac, bc), am.mul(bm)));
            }
        }
        self.poly_from_terms(acc)
    }

    pub fn pow(&self, a: &Polynomial, n: u32) -> Polynomial {
        let mut out = self.one_poly();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// Divides the leading coefficient through, making the polynomial monic.
    pub fn monic(&self, a: &Polynomial) -> Polynomial {
        match a.leading() {
            None => Polynomial::zero(),
            Some((c, _)) if c.is_one() => a.clone(),
            Some((c, _)) => {
                let inv = self.field().inv(c);
                self.mul_scalar(a, &inv)
            }
        }
    }

    /// Exact division by a single nonzero polynomial; `None` when the
    /// division leaves a remainder.
    pub fn div_exact(&self, a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
        assert!(!b.is_zero(), "division by zero polynomial");
        let (bc, bm) = b.leading().unwrap();
        let mut cur = a.clone();
        let mut quot: Vec<(Scalar, Monomial)> = Vec::new();
        while let Some((cc, cm)) = cur.leading() {
            if !bm.divides(cm) {
                return None;
            }
            let qc = self.field().div(cc, bc);
            let qm = bm.div_into(cm);
            cur = self.sub_scaled(&cur, &qc, &qm, b);
            quot.push((qc, qm));
        }
        Some(self.poly_from_terms(quot))
    }

    /// Renders in the canonical text form: terms in decreasing order, `^` for
    /// powers, explicit `*`.
    pub fn render(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, m)) in p.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = if neg { self.field().neg(c) } else { c.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (vi, e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars()[vi].clone()),
                    _ => factors.push(format!("{}^{}", self.vars()[vi], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_sum_and_difference() {
        let r = PolyRing::rationals(&["x", "y"]);
        let x = r.var(0);
        let y = r.var(1);
        let a = r.add(&x, &y);
        let b = r.sub(&x, &y);
        let prod = r.mul(&a, &b);
        let expect = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(prod, expect);
        assert_eq!(r.render(&prod), "x^2 - y^2");
    }

    #[test]
    fn additive_inverse_cancels() {
        let r = PolyRing::rationals(&["x"]);
        let x = r.var(0);
        assert!(r.add(&x, &r.neg(&x)).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_three() {
        let r = PolyRing::prime_field(3, &["x"]);
        let xp1 = r.add(&r.var(0), &r.one_poly());
        let cube = r.pow(&xp1, 3);
        let expect = r.add(&r.pow(&r.var(0), 3), &r.one_poly());
        assert_eq!(cube, expect);
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::rationals(&["x", "y"]);
        let a = r.parse("x^2 - y^2").unwrap();
        let b = r.parse("x - y").unwrap();
        let q = r.div_exact(&a, &b).unwrap();
        assert_eq!(r.render(&q), "x + y");
        assert!(r.div_exact(&r.parse("x^2 - y").unwrap(), &b).is_none());
    }
}
