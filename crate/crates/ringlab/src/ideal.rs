//! Ideals as explicit element sets, plus the annihilator / nilradical /
//! zero-divisor machinery the structural checkers quantify over.

use crate::par;
use crate::ring::{pow_trajectory, Element, FiniteRing};

/// An ideal of a finite ring, materialized as a sorted element set.
///
/// The generator list is kept for reporting only; membership queries go
/// through the bitmap. The set is tied to the ring it was built over via the
/// ring's element count, which guards against mixing rings of different
/// sizes (full descriptor identity is the caller's responsibility).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSet {
    ring_order: usize,
    generators: Vec<Element>,
    elements: Vec<Element>,
    member: Vec<bool>,
}

impl IdealSet {
    /// Wraps an element set as an ideal after verifying closure exhaustively:
    /// `0` is present, sums stay inside, and every ring multiple stays inside.
    ///
    /// Panics when closure fails; every constructor in this module produces
    /// closed sets, so a violation signals a kernel bug rather than bad input.
    fn verified<R: FiniteRing + ?Sized>(
        ring: &R,
        generators: Vec<Element>,
        mut elements: Vec<Element>,
    ) -> IdealSet {
        elements.sort_unstable();
        elements.dedup();
        let mut member = vec![false; ring.element_count()];
        for e in &elements {
            member[e.index()] = true;
        }
        assert!(member[0], "ideal must contain zero");
        for &a in &elements {
            for &b in &elements {
                assert!(
                    member[ring.add(a, b).index()],
                    "ideal not closed under addition"
                );
            }
        }
        for r in 0..ring.element_count() as u32 {
            for &a in &elements {
                assert!(
                    member[ring.mul(Element(r), a).index()],
                    "ideal not closed under ring multiplication"
                );
            }
        }
        IdealSet {
            ring_order: ring.element_count(),
            generators,
            elements,
            member,
        }
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Elements in ascending encoding order; the first is always zero.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains zero
    }

    /// True when this is the zero ideal `{0}`.
    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, e: Element) -> bool {
        self.member.get(e.index()).copied().unwrap_or(false)
    }

    pub fn ring_order(&self) -> usize {
        self.ring_order
    }

    /// Position of an element within the sorted element list.
    pub fn position(&self, e: Element) -> Option<usize> {
        if self.contains(e) {
            self.elements.binary_search(&e).ok()
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &IdealSet) -> bool {
        self.elements.iter().all(|e| other.contains(*e))
    }

    /// Containment in an arbitrary sorted element set.
    pub fn is_subset_of_set(&self, sorted: &[Element]) -> bool {
        self.elements
            .iter()
            .all(|e| sorted.binary_search(e).is_ok())
    }
}

/// Least ideal containing the generators: fixpoint closure of `{0} U gens`
/// under addition and multiplication by every ring element.
pub fn ideal_generate<R: FiniteRing + ?Sized>(ring: &R, gens: &[Element]) -> IdealSet {
    let mut member = vec![false; ring.element_count()];
    member[0] = true;
    let mut frontier: Vec<Element> = Vec::new();
    for &g in gens {
        if !member[g.index()] {
            member[g.index()] = true;
            frontier.push(g);
        }
    }
    let mut elements: Vec<Element> = vec![Element::ZERO];
    elements.extend(frontier.iter().copied());
    while let Some(a) = frontier.pop() {
        // multiples r*a cover b + r*a closure together with addition below
        for r in 0..ring.element_count() as u32 {
            let m = ring.mul(Element(r), a);
            if !member[m.index()] {
                member[m.index()] = true;
                elements.push(m);
                frontier.push(m);
            }
        }
        let snapshot = elements.clone();
        for b in snapshot {
            let s = ring.add(a, b);
            if !member[s.index()] {
                member[s.index()] = true;
                elements.push(s);
                frontier.push(s);
            }
        }
    }
    IdealSet::verified(ring, gens.to_vec(), elements)
}

/// `Z(R) = {x : exists y != 0 with xy = 0}`, ascending, always containing 0.
pub fn zero_divisor_set<R: FiniteRing + ?Sized>(ring: &R) -> Vec<Element> {
    let n = ring.element_count();
    let flags = par::map_indices(n, |x| {
        let x = Element(x as u32);
        if x == Element::ZERO {
            return true; // any nonzero y witnesses 0 (rings here have >= 2 elements)
        }
        (1..n as u32).any(|y| ring.mul(x, Element(y)) == Element::ZERO)
    });
    flags
        .iter()
        .enumerate()
        .filter(|(_, is_zd)| **is_zd)
        .map(|(i, _)| Element(i as u32))
        .collect()
}

/// Radical `sqrt(I) = {x : x^k in I for some k >= 1}` via power trajectories.
pub fn ideal_radical<R: FiniteRing + ?Sized>(ring: &R, ideal: &IdealSet) -> IdealSet {
    let elements: Vec<Element> = ring
        .enumerate()
        .into_iter()
        .filter(|&x| {
            let traj = pow_trajectory(ring, x);
            // nilpotent elements reach 0 which lies in every ideal
            traj.is_nilpotent() || traj.powers.iter().any(|p| ideal.contains(*p))
        })
        .collect();
    IdealSet::verified(ring, Vec::new(), elements)
}

/// `Nil(R)`: the radical of the zero ideal.
pub fn nilradical<R: FiniteRing + ?Sized>(ring: &R) -> IdealSet {
    let elements: Vec<Element> = ring
        .enumerate()
        .into_iter()
        .filter(|&x| pow_trajectory(ring, x).is_nilpotent())
        .collect();
    IdealSet::verified(ring, Vec::new(), elements)
}

/// `Ann(x) = {y : xy = 0}` by exhaustive scan.
pub fn annihilator<R: FiniteRing + ?Sized>(ring: &R, x: Element) -> IdealSet {
    let elements: Vec<Element> = ring
        .enumerate()
        .into_iter()
        .filter(|&y| ring.mul(x, y) == Element::ZERO)
        .collect();
    IdealSet::verified(ring, Vec::new(), elements)
}

/// `Ann(S)`: intersection of the annihilators of the members of `S`.
/// For `S` empty this is the whole ring (empty intersection convention).
pub fn annihilator_of_set<R: FiniteRing + ?Sized>(ring: &R, set: &[Element]) -> IdealSet {
    let elements: Vec<Element> = ring
        .enumerate()
        .into_iter()
        .filter(|&y| set.iter().all(|&s| ring.mul(s, y) == Element::ZERO))
        .collect();
    IdealSet::verified(ring, Vec::new(), elements)
}

/// Criterion for the extended and classic zero-divisor graphs of a ring to
/// coincide: every nonzero nilpotent has index 2 (when `Nil(R) != {0}`), and
/// `Ann(x) = Ann(x^2)` for every zero-divisor `x` outside `Nil(R)`.
///
/// The harness cross-validates this against direct graph equality; checkers
/// never use it as ground truth.
pub fn coincidence_criterion<R: FiniteRing + ?Sized>(ring: &R) -> bool {
    let nil = nilradical(ring);
    for &x in nil.elements() {
        if x != Element::ZERO && ring.mul(x, x) != Element::ZERO {
            return false;
        }
    }
    let zd = zero_divisor_set(ring);
    for &x in &zd {
        if x == Element::ZERO || nil.contains(x) {
            continue;
        }
        let sq = ring.mul(x, x);
        // Ann(x) is always contained in Ann(x^2); test the reverse inclusion
        for y in 0..ring.element_count() as u32 {
            let y = Element(y);
            if ring.mul(sq, y) == Element::ZERO && ring.mul(x, y) != Element::ZERO {
                return false;
            }
        }
    }
    true
}
