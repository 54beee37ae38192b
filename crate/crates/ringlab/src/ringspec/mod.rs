//! Textual DSL for finite commutative rings and their ideals.
//!
//! Ring grammar (whitespace-insensitive, `x` binds looser than `/`):
//!
//! ```text
//! ring      := product
//! product   := atom ( "x" atom )*
//! atom      := "Z"<n>
//!            | "Z"<n> "[" var ("," var)* "]" "/" "(" monomial ("," monomial)* ")"
//!            | "(" product ")"
//! monomial  := factor ("*" factor)*
//! factor    := var ("^" exponent)?
//! ```
//!
//! Ideal generators are comma-separated element expressions: integer
//! literals (reduced mod n), polynomials in the quotient's variables, and
//! `(..,..)` tuples for product rings. Every syntax error carries a 0-based
//! byte offset and the set of tokens that would have been accepted.

mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::ring::{QuotientRing, RingDescriptor};

/// Parsed ring specification, prior to the finiteness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpecAst {
    Modular {
        modulus: u64,
    },
    Quotient {
        modulus: u64,
        variables: Vec<String>,
        /// Exponent vectors over `variables`, each nonzero.
        generators: Vec<Vec<u32>>,
    },
    Product(Vec<RingSpecAst>),
}

impl fmt::Display for RingSpecAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpecAst::Modular { modulus } => write!(f, "Z{modulus}"),
            RingSpecAst::Quotient {
                modulus,
                variables,
                generators,
            } => {
                write!(f, "Z{modulus}[{}]/(", variables.join(","))?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    let mut first = true;
                    for (e, v) in g.iter().zip(variables) {
                        if *e == 0 {
                            continue;
                        }
                        if !first {
                            write!(f, "*")?;
                        }
                        first = false;
                        if *e == 1 {
                            write!(f, "{v}")?;
                        } else {
                            write!(f, "{v}^{e}")?;
                        }
                    }
                    debug_assert!(!first, "generator exponent vectors are nonzero");
                }
                write!(f, ")")
            }
            RingSpecAst::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(factor, RingSpecAst::Product(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Errors from parsing or validating ring and ideal specifications.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", format_expected(expected))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("syntax error at byte {offset}: unexpected character `{ch}`")]
    UnexpectedChar { offset: usize, ch: char },
    #[error("invalid modulus at byte {offset}: Z{n} (modulus must be at least 2)")]
    ModulusTooSmall { offset: usize, n: u64 },
    #[error("number at byte {offset} is out of range")]
    NumberOverflow { offset: usize },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("duplicate variable `{name}` at byte {offset}")]
    DuplicateVariable { offset: usize, name: String },
    #[error("generator at byte {offset} is constant; generators must be nonconstant monomials")]
    ConstantGenerator { offset: usize },
    #[error("ring is infinite: variable {name} has no pure-power bound among the generators")]
    UnboundedVariable { name: String },
    #[error("ring is too large to enumerate: {detail}")]
    TooLarge { detail: String },
    #[error("expression at byte {offset} does not match the ring shape: {detail}")]
    ShapeMismatch { offset: usize, detail: String },
    #[error("tuple at byte {offset} has {got} components but the ring has {expected} factors")]
    ArityMismatch {
        offset: usize,
        expected: usize,
        got: usize,
    },
}

fn format_expected(expected: &[String]) -> String {
    match expected.len() {
        0 => "nothing".to_string(),
        1 => format!("`{}`", expected[0]),
        _ => {
            let quoted: Vec<String> = expected.iter().map(|e| format!("`{e}`")).collect();
            format!("one of {}", quoted.join(", "))
        }
    }
}

/// Parses the ring DSL. Parsing is total: every input yields either an AST or
/// a positioned error.
pub fn parse_ring_spec(text: &str) -> Result<RingSpecAst, SpecError> {
    parser::RingParser::new(text)?.parse()
}

/// Parses comma-separated ideal generator expressions against a validated
/// ring, returning generators in canonical encoding.
pub fn parse_ideal_spec(
    text: &str,
    ring: &RingDescriptor,
) -> Result<Vec<crate::ring::Element>, SpecError> {
    parser::IdealParser::new(text)?.parse(ring)
}

/// Checks that the AST denotes a finite ring and materializes its descriptor.
///
/// A quotient is finite exactly when every variable has a pure power among
/// the ideal generators; the standard-monomial basis is precomputed here.
pub fn validate_finiteness(ast: &RingSpecAst) -> Result<RingDescriptor, SpecError> {
    const MAX_BOX: u64 = 1 << 20;
    match ast {
        RingSpecAst::Modular { modulus } => {
            Ok(RingDescriptor::modular(*modulus, ast.to_string()))
        }
        RingSpecAst::Quotient {
            modulus,
            variables,
            generators,
        } => {
            let mut bounds = Vec::with_capacity(variables.len());
            for (v, name) in variables.iter().enumerate() {
                let bound = generators
                    .iter()
                    .filter(|g| g[v] > 0 && g.iter().enumerate().all(|(w, e)| w == v || *e == 0))
                    .map(|g| g[v])
                    .min();
                match bound {
                    Some(b) => bounds.push(b),
                    None => {
                        return Err(SpecError::UnboundedVariable { name: name.clone() })
                    }
                }
            }
            let box_size: u64 = bounds.iter().map(|b| *b as u64).product();
            if box_size > MAX_BOX {
                return Err(SpecError::TooLarge {
                    detail: format!("{box_size} candidate monomials"),
                });
            }
            let mut basis = Vec::new();
            let mut current = vec![0u32; variables.len()];
            // odometer with the last variable fastest produces lex order
            'enumerate: loop {
                if !generators
                    .iter()
                    .any(|g| crate::ring::quotient_divides(g, &current))
                {
                    basis.push(current.clone());
                }
                for v in (0..variables.len()).rev() {
                    current[v] += 1;
                    if current[v] < bounds[v] {
                        continue 'enumerate;
                    }
                    current[v] = 0;
                }
                break;
            }
            basis.sort();
            let count = (*modulus as u128).checked_pow(basis.len() as u32);
            match count {
                Some(c) if c <= u32::MAX as u128 => {}
                _ => {
                    return Err(SpecError::TooLarge {
                        detail: format!(
                            "{modulus}^{} elements exceed the encodable range",
                            basis.len()
                        ),
                    })
                }
            }
            Ok(RingDescriptor::quotient(
                QuotientRing::new(*modulus, variables.clone(), generators.clone(), basis),
                ast.to_string(),
            ))
        }
        RingSpecAst::Product(factors) => {
            let descriptors: Vec<RingDescriptor> = factors
                .iter()
                .map(validate_finiteness)
                .collect::<Result<_, _>>()?;
            let mut count: u128 = 1;
            for d in &descriptors {
                count *= crate::ring::FiniteRing::element_count(d) as u128;
            }
            if count > u32::MAX as u128 {
                return Err(SpecError::TooLarge {
                    detail: format!("{count} elements exceed the encodable range"),
                });
            }
            Ok(RingDescriptor::product(descriptors, ast.to_string()))
        }
    }
}

#[cfg(test)]
mod tests;
