//! Polynomial rings, possibly modulo an explicit ideal.

use super::{FieldSpec, Monomial, MonomialOrder, Polynomial};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    field: FieldSpec,
    vars: Vec<String>,
    order: MonomialOrder,
    /// When present, the ring is understood as the quotient by the ideal
    /// generated by these polynomials (which live in the plain ring).
    modulus: Vec<Polynomial>,
}

/// An ambient polynomial ring `k[vars]` under a fixed monomial order, with an
/// optional quotient modulus. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyRing(Arc<RingInner>);

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing({:?}, {:?}", self.0.field, self.0.vars)?;
        if !self.0.modulus.is_empty() {
            write!(f, ", modulus: {} gens", self.0.modulus.len())?;
        }
        write!(f, ")")
    }
}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: &[&str], order: MonomialOrder) -> Self {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!n.is_empty(), "variable names must be nonempty");
            assert!(
                !names[..i].contains(n),
                "duplicate variable name {n}"
            );
        }
        PolyRing(Arc::new(RingInner { field, vars: names, order, modulus: Vec::new() }))
    }

    /// Rationals, grevlex: the common case.
    pub fn rationals(vars: &[&str]) -> Self {
        PolyRing::new(FieldSpec::Rationals, vars, MonomialOrder::GrevLex)
    }

    /// GF(p), grevlex.
    pub fn prime_field(p: u64, vars: &[&str]) -> Self {
        PolyRing::new(FieldSpec::prime(p), vars, MonomialOrder::GrevLex)
    }

    /// The same ring with a (possibly extended) quotient modulus. Modulus
    /// polynomials must belong to the plain ring.
    pub fn with_modulus(&self, extra: Vec<Polynomial>) -> Self {
        let mut modulus = self.0.modulus.clone();
        modulus.extend(extra.into_iter().filter(|p| !p.is_zero()));
        PolyRing(Arc::new(RingInner {
            field: self.0.field.clone(),
            vars: self.0.vars.clone(),
            order: self.0.order.clone(),
            modulus,
        }))
    }

    /// The plain ring underneath a quotient.
    pub fn without_modulus(&self) -> Self {
        if self.0.modulus.is_empty() {
            return self.clone();
        }
        PolyRing(Arc::new(RingInner {
            field: self.0.field.clone(),
            vars: self.0.vars.clone(),
            order: self.0.order.clone(),
            modulus: Vec::new(),
        }))
    }

    /// Adjoins fresh variables in front (positions `0..names.len()`) and
    /// switches to the given order; existing variables shift right.
    /// Polynomials are transported with [`PolyRing::lift_front`].
    pub fn extend_front(&self, names: &[&str], order: MonomialOrder) -> Self {
        let mut vars: Vec<&str> = names.to_vec();
        for v in &self.0.vars {
            assert!(!names.contains(&v.as_str()), "fresh variable {v} already present");
            vars.push(v);
        }
        let ring = PolyRing::new(self.0.field.clone(), &vars, order);
        if self.0.modulus.is_empty() {
            ring
        } else {
            let lifted = self.0.modulus.iter().map(|q| self.lift_front_into(q, names.len())).collect();
            ring.with_modulus(lifted)
        }
    }

    pub(crate) fn lift_front_into(&self, p: &Polynomial, extra: usize) -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(c, m)| {
                let mut exps = vec![0u32; extra];
                exps.extend_from_slice(m.exps());
                (c.clone(), Monomial::new(exps))
            })
            .collect();
        Polynomial::from_sorted(terms)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn modulus(&self) -> &[Polynomial] {
        &self.0.modulus
    }

    pub fn has_modulus(&self) -> bool {
        !self.0.modulus.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// True when both handles denote the same ring (structural equality).
    pub fn same_ring(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identity() {
        let r1 = PolyRing::rationals(&["x", "y"]);
        let r2 = PolyRing::rationals(&["x", "y"]);
        let r3 = PolyRing::rationals(&["x", "z"]);
        assert!(r1.same_ring(&r2));
        assert!(!r1.same_ring(&r3));
    }

    #[test]
    #[should_panic]
    fn duplicate_vars_rejected() {
        PolyRing::rationals(&["x", "x"]);
    }

    #[test]
    fn extend_front_shifts() {
        let r = PolyRing::rationals(&["x", "y"]);
        let rt = r.extend_front(&["t"], MonomialOrder::BlockElim { split: 1 });
        assert_eq!(rt.vars(), &["t", "x", "y"]);
    }
}
