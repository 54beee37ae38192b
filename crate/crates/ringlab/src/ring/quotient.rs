//! `Z_n[X_1..X_k]` modulo a monomial ideal.
//!
//! Elements are coefficient vectors over the standard-monomial basis (the
//! monomials divisible by no ideal generator), encoded in base `n` with basis
//! position 0 as the least significant digit. The basis is sorted by the
//! natural lexicographic order on exponent vectors, which puts the constant
//! monomial first, so zero encodes to 0 and the identity to 1.
//!
//! Multiplication is the monomial-ideal normal form: multiply the
//! polynomials, then delete every monomial divisible by a generator.

use std::collections::HashMap;

use super::Element;

#[derive(Debug, Clone)]
pub struct QuotientRing {
    modulus: u64,
    variables: Vec<String>,
    generators: Vec<Vec<u32>>,
    basis: Vec<Vec<u32>>,
    /// `basis_mul[i * basis.len() + j]`: index of the normal form of
    /// `basis[i] * basis[j]`, or `None` when the product falls in the ideal.
    basis_mul: Vec<Option<u32>>,
    count: usize,
}

pub(crate) fn divides(divisor: &[u32], monomial: &[u32]) -> bool {
    divisor.iter().zip(monomial).all(|(d, m)| d <= m)
}

impl QuotientRing {
    /// Builds the ring from an already-validated basis (every variable
    /// bounded by a pure power, `basis` lex-sorted with the constant first).
    pub(crate) fn new(
        modulus: u64,
        variables: Vec<String>,
        generators: Vec<Vec<u32>>,
        basis: Vec<Vec<u32>>,
    ) -> QuotientRing {
        debug_assert!(basis.first().is_some_and(|m| m.iter().all(|&e| e == 0)));
        let positions: HashMap<&[u32], u32> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i as u32))
            .collect();
        let b = basis.len();
        let mut basis_mul = vec![None; b * b];
        for i in 0..b {
            for j in 0..b {
                let product: Vec<u32> = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(x, y)| x + y)
                    .collect();
                if generators.iter().any(|g| divides(g, &product)) {
                    continue;
                }
                // outside the ideal it must be a standard monomial
                basis_mul[i * b + j] = Some(positions[product.as_slice()]);
            }
        }
        let count = (modulus as usize)
            .checked_pow(b as u32)
            .expect("element count checked during validation");
        QuotientRing {
            modulus,
            variables,
            generators,
            basis,
            basis_mul,
            count,
        }
    }

    pub fn element_count(&self) -> usize {
        self.count
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    fn decode(&self, a: Element) -> Vec<u64> {
        let mut idx = a.0 as u64;
        let mut coeffs = vec![0u64; self.basis.len()];
        for c in coeffs.iter_mut() {
            *c = idx % self.modulus;
            idx /= self.modulus;
        }
        coeffs
    }

    fn encode(&self, coeffs: &[u64]) -> Element {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.modulus + c;
        }
        Element(idx as u32)
    }

    /// Encodes a single monomial given by its exponent vector; monomials in
    /// the ideal collapse to zero.
    pub(crate) fn monomial_element(&self, exponents: &[u32]) -> Element {
        if self.generators.iter().any(|g| divides(g, exponents)) {
            return Element::ZERO;
        }
        let pos = self
            .basis
            .iter()
            .position(|m| m == exponents)
            .expect("monomial outside the ideal is standard");
        let mut coeffs = vec![0u64; self.basis.len()];
        coeffs[pos] = 1;
        self.encode(&coeffs)
    }

    /// Scales an element by an integer (coefficientwise mod n).
    pub(crate) fn scale(&self, value: i64, a: Element) -> Element {
        let factor = value.rem_euclid(self.modulus as i64) as u64;
        let mut coeffs = self.decode(a);
        for c in coeffs.iter_mut() {
            *c = *c * factor % self.modulus;
        }
        self.encode(&coeffs)
    }

    pub(crate) fn from_integer(&self, value: i64) -> Element {
        let mut coeffs = vec![0u64; self.basis.len()];
        coeffs[0] = value.rem_euclid(self.modulus as i64) as u64;
        self.encode(&coeffs)
    }

    pub(crate) fn add(&self, a: Element, b: Element) -> Element {
        let ca = self.decode(a);
        let cb = self.decode(b);
        let coeffs: Vec<u64> = ca
            .iter()
            .zip(&cb)
            .map(|(x, y)| (x + y) % self.modulus)
            .collect();
        self.encode(&coeffs)
    }

    pub(crate) fn neg(&self, a: Element) -> Element {
        let coeffs: Vec<u64> = self
            .decode(a)
            .iter()
            .map(|x| (self.modulus - x) % self.modulus)
            .collect();
        self.encode(&coeffs)
    }

    pub(crate) fn mul(&self, a: Element, b: Element) -> Element {
        let ca = self.decode(a);
        let cb = self.decode(b);
        let b_len = self.basis.len();
        let mut out = vec![0u64; b_len];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                if let Some(k) = self.basis_mul[i * b_len + j] {
                    let slot = &mut out[k as usize];
                    *slot = (*slot + x * y) % self.modulus;
                }
            }
        }
        self.encode(&out)
    }

    fn monomial_string(&self, exponents: &[u32]) -> String {
        let factors: Vec<String> = exponents
            .iter()
            .zip(&self.variables)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        factors.join("*")
    }

    pub(crate) fn label(&self, a: Element) -> String {
        let coeffs = self.decode(a);
        let mut terms = Vec::new();
        for (c, m) in coeffs.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            let mono = self.monomial_string(m);
            let term = if mono.is_empty() {
                c.to_string()
            } else if *c == 1 {
                mono
            } else {
                format!("{c}*{mono}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}
