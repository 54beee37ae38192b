//! Exact arithmetic and total enumeration for finite commutative rings with
//! identity `1 != 0`.
//!
//! Every element is a canonical integer index in `[0, element_count)`; index 0
//! is always the additive zero and the identity's index is deterministic per
//! ring shape. All enumerations, ideals and graph vertex orders downstream use
//! this index order, which is what makes file outputs byte-stable.

mod quotient;

pub(crate) use quotient::divides as quotient_divides;
pub use quotient::QuotientRing;

use std::fmt;

/// Canonically encoded element of some finite ring.
///
/// The encoding is only meaningful relative to the ring that produced it;
/// mixing elements across rings is a logic error guarded by debug assertions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u32);

impl Element {
    pub const ZERO: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite commutative ring with identity, addressed by element index.
///
/// Implementations must be pure and immutable so that values can be shared
/// freely across threads.
pub trait FiniteRing: Sync {
    fn element_count(&self) -> usize;

    fn add(&self, a: Element, b: Element) -> Element;

    fn neg(&self, a: Element) -> Element;

    fn mul(&self, a: Element, b: Element) -> Element;

    /// The multiplicative identity. Always distinct from zero.
    fn one(&self) -> Element;

    /// Human-readable label for an element (residue, polynomial or tuple).
    ///
    /// Labels round-trip through the ideal-expression grammar.
    fn label(&self, a: Element) -> String;

    #[inline]
    fn zero(&self) -> Element {
        Element::ZERO
    }

    #[inline]
    fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// All elements exactly once, ascending by encoding.
    fn enumerate(&self) -> Vec<Element> {
        (0..self.element_count() as u32).map(Element).collect()
    }
}

/// Distinct powers of an element together with its nilpotency data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTrajectory {
    /// `x^1, x^2, ...` up to (excluding) the first zero or the first repeat.
    /// On the nilpotent branch these are exactly the nonzero powers, all
    /// distinct, so `powers[k-1] = x^k` for `1 <= k <= powers.len()`.
    pub powers: Vec<Element>,
    /// Least `n >= 1` with `x^n = 0`, when it exists. Zero gets index 1.
    pub nilpotency_index: Option<usize>,
}

impl PowerTrajectory {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index.is_some()
    }
}

/// Iterates `x^1, x^2, ...` until either zero is reached (nilpotent) or a
/// previously seen value repeats (not nilpotent). Terminates within
/// `element_count` iterations because values are distinct until then.
pub fn pow_trajectory<R: FiniteRing + ?Sized>(ring: &R, x: Element) -> PowerTrajectory {
    if x == ring.zero() {
        return PowerTrajectory {
            powers: Vec::new(),
            nilpotency_index: Some(1),
        };
    }
    let mut seen = vec![false; ring.element_count()];
    let mut powers = Vec::new();
    let mut current = x;
    let mut exponent = 1usize;
    loop {
        if current == ring.zero() {
            return PowerTrajectory {
                powers,
                nilpotency_index: Some(exponent),
            };
        }
        if seen[current.index()] {
            return PowerTrajectory {
                powers,
                nilpotency_index: None,
            };
        }
        seen[current.index()] = true;
        powers.push(current);
        current = ring.mul(current, x);
        exponent += 1;
    }
}

/// No nonzero zero-divisors. For a finite ring this means the ring is a field.
pub fn is_integral_domain<R: FiniteRing + ?Sized>(ring: &R) -> bool {
    let n = ring.element_count() as u32;
    for a in 1..n {
        for b in 1..n {
            if ring.mul(Element(a), Element(b)) == Element::ZERO {
                return false;
            }
        }
    }
    true
}

/// `Nil(R) = {0}`: no nonzero nilpotent elements.
pub fn is_reduced<R: FiniteRing + ?Sized>(ring: &R) -> bool {
    let n = ring.element_count() as u32;
    (1..n).all(|a| pow_trajectory(ring, Element(a)).nilpotency_index.is_none())
}

/// Recognizes the ring `Z2 x Z2` among 4-element unital rings: it is the only
/// one that is reduced yet has a nonzero zero-divisor (`Z4` and `Z2[X]/(X^2)`
/// are non-reduced, the 4-element field has no zero-divisors).
pub fn is_z2_x_z2<R: FiniteRing + ?Sized>(ring: &R) -> bool {
    ring.element_count() == 4 && is_reduced(ring) && !is_integral_domain(ring)
}

/// Symbolic description of a finite commutative ring; the single source of
/// truth for its arithmetic.
#[derive(Debug, Clone)]
pub struct RingDescriptor {
    shape: Shape,
    count: usize,
    text: String,
}

#[derive(Debug, Clone)]
enum Shape {
    Modular { modulus: u64 },
    Quotient(QuotientRing),
    Product(Vec<RingDescriptor>),
}

impl RingDescriptor {
    pub(crate) fn modular(modulus: u64, text: String) -> RingDescriptor {
        debug_assert!(modulus >= 2);
        RingDescriptor {
            count: modulus as usize,
            shape: Shape::Modular { modulus },
            text,
        }
    }

    pub(crate) fn quotient(q: QuotientRing, text: String) -> RingDescriptor {
        RingDescriptor {
            count: q.element_count(),
            shape: Shape::Quotient(q),
            text,
        }
    }

    pub(crate) fn product(factors: Vec<RingDescriptor>, text: String) -> RingDescriptor {
        debug_assert!(factors.len() >= 2);
        let count = factors.iter().map(|f| f.count).product();
        RingDescriptor {
            shape: Shape::Product(factors),
            count,
            text,
        }
    }

    /// Canonical spec text this descriptor was validated from.
    pub fn spec_text(&self) -> &str {
        &self.text
    }

    pub fn is_product(&self) -> bool {
        matches!(self.shape, Shape::Product(_))
    }

    pub(crate) fn product_factors(&self) -> Option<&[RingDescriptor]> {
        match &self.shape {
            Shape::Product(fs) => Some(fs),
            _ => None,
        }
    }

    pub(crate) fn quotient_ring(&self) -> Option<&QuotientRing> {
        match &self.shape {
            Shape::Quotient(q) => Some(q),
            _ => None,
        }
    }

    pub(crate) fn modular_modulus(&self) -> Option<u64> {
        match &self.shape {
            Shape::Modular { modulus } => Some(*modulus),
            _ => None,
        }
    }

    /// Encodes a componentwise tuple into a product-ring element.
    pub(crate) fn encode_tuple(&self, parts: &[Element]) -> Element {
        match &self.shape {
            Shape::Product(fs) => {
                debug_assert_eq!(fs.len(), parts.len());
                let mut idx = 0u64;
                for (f, p) in fs.iter().zip(parts) {
                    idx = idx * f.count as u64 + p.0 as u64;
                }
                Element(idx as u32)
            }
            _ => unreachable!("encode_tuple on non-product ring"),
        }
    }

    fn decode_product(&self, a: Element) -> Vec<Element> {
        match &self.shape {
            Shape::Product(fs) => {
                let mut idx = a.index();
                let mut parts = vec![Element::ZERO; fs.len()];
                for (slot, f) in parts.iter_mut().zip(fs).rev() {
                    *slot = Element((idx % f.count) as u32);
                    idx /= f.count;
                }
                parts
            }
            _ => unreachable!(),
        }
    }

    /// Embeds an integer as `k * 1` (componentwise in products).
    pub(crate) fn from_integer(&self, value: i64) -> Element {
        match &self.shape {
            Shape::Modular { modulus } => {
                Element(value.rem_euclid(*modulus as i64) as u32)
            }
            Shape::Quotient(q) => q.from_integer(value),
            Shape::Product(fs) => {
                let parts: Vec<Element> = fs.iter().map(|f| f.from_integer(value)).collect();
                self.encode_tuple(&parts)
            }
        }
    }
}

impl FiniteRing for RingDescriptor {
    fn element_count(&self) -> usize {
        self.count
    }

    fn add(&self, a: Element, b: Element) -> Element {
        debug_assert!(a.index() < self.count && b.index() < self.count);
        match &self.shape {
            Shape::Modular { modulus } => {
                Element(((a.0 as u64 + b.0 as u64) % modulus) as u32)
            }
            Shape::Quotient(q) => q.add(a, b),
            Shape::Product(fs) => {
                let pa = self.decode_product(a);
                let pb = self.decode_product(b);
                let parts: Vec<Element> = fs
                    .iter()
                    .zip(pa.iter().zip(&pb))
                    .map(|(f, (x, y))| f.add(*x, *y))
                    .collect();
                self.encode_tuple(&parts)
            }
        }
    }

    fn neg(&self, a: Element) -> Element {
        debug_assert!(a.index() < self.count);
        match &self.shape {
            Shape::Modular { modulus } => {
                Element(((modulus - a.0 as u64) % modulus) as u32)
            }
            Shape::Quotient(q) => q.neg(a),
            Shape::Product(fs) => {
                let pa = self.decode_product(a);
                let parts: Vec<Element> =
                    fs.iter().zip(&pa).map(|(f, x)| f.neg(*x)).collect();
                self.encode_tuple(&parts)
            }
        }
    }

    fn mul(&self, a: Element, b: Element) -> Element {
        debug_assert!(a.index() < self.count && b.index() < self.count);
        match &self.shape {
            Shape::Modular { modulus } => {
                Element(((a.0 as u64 * b.0 as u64) % modulus) as u32)
            }
            Shape::Quotient(q) => q.mul(a, b),
            Shape::Product(fs) => {
                let pa = self.decode_product(a);
                let pb = self.decode_product(b);
                let parts: Vec<Element> = fs
                    .iter()
                    .zip(pa.iter().zip(&pb))
                    .map(|(f, (x, y))| f.mul(*x, *y))
                    .collect();
                self.encode_tuple(&parts)
            }
        }
    }

    fn one(&self) -> Element {
        match &self.shape {
            Shape::Modular { .. } => Element(1),
            Shape::Quotient(_) => Element(1),
            Shape::Product(fs) => {
                let parts: Vec<Element> = fs.iter().map(|f| f.one()).collect();
                self.encode_tuple(&parts)
            }
        }
    }

    fn label(&self, a: Element) -> String {
        match &self.shape {
            Shape::Modular { .. } => a.0.to_string(),
            Shape::Quotient(q) => q.label(a),
            Shape::Product(fs) => {
                let parts = self.decode_product(a);
                let inner: Vec<String> = fs
                    .iter()
                    .zip(&parts)
                    .map(|(f, p)| f.label(*p))
                    .collect();
                format!("({})", inner.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringspec::{parse_ring_spec, validate_finiteness};

    fn ring(spec: &str) -> RingDescriptor {
        validate_finiteness(&parse_ring_spec(spec).unwrap()).unwrap()
    }

    #[test]
    fn enumerate_z8() {
        let r = ring("Z8");
        let elems = r.enumerate();
        assert_eq!(elems.len(), 8);
        assert_eq!(elems[0], r.zero());
        assert_eq!(elems[1], r.one());
    }

    #[test]
    fn enumerate_product_and_quotient() {
        assert_eq!(ring("Z3 x Z3").enumerate().len(), 9);
        // standard monomials {1, X, X^2, Y, XY} give 2^5 elements
        assert_eq!(ring("Z2[X,Y]/(X^3,X^2*Y,Y^2)").enumerate().len(), 32);
    }

    #[test]
    fn modular_arithmetic() {
        let r = ring("Z8");
        assert_eq!(r.mul(Element(2), Element(4)), Element(0));
        assert_eq!(r.add(Element(5), Element(6)), Element(3));
        assert_eq!(r.neg(Element(3)), Element(5));
        assert_eq!(r.neg(Element(0)), Element(0));
    }

    #[test]
    fn quotient_kills_ideal_monomials() {
        let r = ring("Z2[X,Y]/(X^3,X^2*Y,Y^2)");
        let x = crate::ringspec::parse_ideal_spec("X", &r).unwrap()[0];
        let xy = crate::ringspec::parse_ideal_spec("X*Y", &r).unwrap()[0];
        // X * XY = X^2 Y, which the ideal deletes
        assert_eq!(r.mul(x, xy), r.zero());
        assert_ne!(r.mul(x, x), r.zero());
    }

    #[test]
    fn identity_law_across_shapes() {
        for spec in ["Z8", "Z3 x Z4", "Z2[X,Y]/(X^3,X^2*Y,Y^2)"] {
            let r = ring(spec);
            for a in r.enumerate() {
                assert_eq!(r.mul(a, r.one()), a, "mul identity failed in {spec}");
                assert_eq!(r.add(a, r.zero()), a, "add identity failed in {spec}");
                assert_eq!(r.add(a, r.neg(a)), r.zero(), "neg failed in {spec}");
            }
        }
    }

    #[test]
    fn trajectory_z8() {
        let r = ring("Z8");
        let t = pow_trajectory(&r, Element(2));
        assert_eq!(t.nilpotency_index, Some(3));
        assert_eq!(t.powers, vec![Element(2), Element(4)]);

        // 6^2 = 36 = 4, 6^3 = 216 = 0 (mod 8)
        let t = pow_trajectory(&r, Element(6));
        assert_eq!(t.nilpotency_index, Some(3));
        assert_eq!(t.powers, vec![Element(6), Element(4)]);
    }

    #[test]
    fn trajectory_unit_is_not_nilpotent() {
        let r = ring("Z12");
        // 5^2 = 25 = 1 (mod 12), then the powers repeat
        let t = pow_trajectory(&r, Element(5));
        assert_eq!(t.nilpotency_index, None);
        assert_eq!(t.powers, vec![Element(5), Element(1)]);
    }

    #[test]
    fn trajectory_zero_convention() {
        let r = ring("Z4");
        let t = pow_trajectory(&r, Element(0));
        assert_eq!(t.nilpotency_index, Some(1));
        assert!(t.powers.is_empty());
    }

    #[test]
    fn domain_and_reduced_predicates() {
        assert!(is_integral_domain(&ring("Z3")));
        assert!(!is_integral_domain(&ring("Z4")));
        assert!(!is_reduced(&ring("Z4")));
        assert!(is_reduced(&ring("Z6")));
        assert!(is_z2_x_z2(&ring("Z2 x Z2")));
        assert!(!is_z2_x_z2(&ring("Z4")));
        assert!(!is_z2_x_z2(&ring("Z2[X]/(X^2)")));
        assert!(!is_z2_x_z2(&ring("Z5")));
    }

    #[test]
    fn product_nilpotency_factors_componentwise() {
        let r = ring("Z4 x Z2");
        for a in r.enumerate() {
            let parts = r.decode_product(a);
            let f = r.product_factors().unwrap();
            let componentwise = parts
                .iter()
                .zip(f)
                .all(|(p, fr)| pow_trajectory(fr, *p).is_nilpotent());
            assert_eq!(pow_trajectory(&r, a).is_nilpotent(), componentwise);
        }
    }

    #[test]
    fn labels_round_trip_shapes() {
        let r = ring("Z3 x Z3");
        assert_eq!(r.label(Element(0)), "(0,0)");
        assert_eq!(r.label(r.one()), "(1,1)");
        let q = ring("Z2[X,Y]/(X^2,Y^2)");
        assert_eq!(q.label(q.zero()), "0");
        assert_eq!(q.label(q.one()), "1");
    }
}
