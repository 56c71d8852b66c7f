//! Finite groups with identity-indexed elements.
//!
//! Every group numbers its elements `0..order` and element `0` is always the
//! identity. Two backends exist: an explicit multiplication table (used for
//! everything up to the order cap) and permutation words for `S_n`, whose
//! elements are numbered by lexicographic (Lehmer) rank so that the identity
//! permutation is rank 0.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order for which a Cayley table is built.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Largest `n` for which `S_n` is constructible.
pub const MAX_SYMMETRIC_DEGREE: usize = 10;

/// Orders up to this size get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    pub fn new(index: usize) -> Self {
        Element(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
enum Backend {
    Table { mul: Vec<u32>, inv: Vec<u32> },
    Permutations { degree: usize, cache: Option<Vec<Vec<u8>>> },
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    backend: Backend,
    generators: Vec<Element>,
}

impl Group {
    /// Cyclic group `Z/m` with `i * j = (i + j) mod m`.
    pub fn cyclic(m: usize) -> Result<Group> {
        if m == 0 {
            return Err(Error::Invalid("cyclic group order must be positive".into()));
        }
        check_cap(m as u128, DEFAULT_ORDER_CAP)?;
        let mut mul = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                mul.push(((i + j) % m) as u32);
            }
        }
        let gens = if m > 1 { vec![Element(1)] } else { vec![] };
        Ok(Group::from_parts(m, mul, gens))
    }

    /// Direct product of cyclic groups, the first factor being the most
    /// significant digit of the element index.
    pub fn abelian(invariants: &[usize]) -> Result<Group> {
        if invariants.contains(&0) {
            return Err(Error::Invalid("abelian invariants must be positive".into()));
        }
        let order: u128 = invariants.iter().map(|&a| a as u128).product();
        check_cap(order, DEFAULT_ORDER_CAP)?;
        let order = order as usize;
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; invariants.len()];
            for (slot, &a) in d.iter_mut().zip(invariants).rev() {
                *slot = x % a;
                x /= a;
            }
            d
        };
        let undigits = |d: &[usize]| -> usize {
            d.iter().zip(invariants).fold(0, |acc, (&x, &a)| acc * a + x)
        };
        let all: Vec<Vec<usize>> = (0..order).map(digits).collect();
        let mut mul = Vec::with_capacity(order * order);
        let mut buf = vec![0; invariants.len()];
        for a in &all {
            for b in &all {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = (a[k] + b[k]) % invariants[k];
                }
                mul.push(undigits(&buf) as u32);
            }
        }
        let mut gens = Vec::new();
        for k in 0..invariants.len() {
            if invariants[k] > 1 {
                let mut unit = vec![0; invariants.len()];
                unit[k] = 1;
                gens.push(Element::new(undigits(&unit)));
            }
        }
        Ok(Group::from_parts(order, mul, gens))
    }

    /// Upper unitriangular `m x m` matrices over `F_p`.
    pub fn unitriangular(m: usize, p: u64) -> Result<Group> {
        Group::unitriangular_with_cap(m, p, DEFAULT_ORDER_CAP)
    }

    pub fn unitriangular_with_cap(m: usize, p: u64, cap: usize) -> Result<Group> {
        if m < 2 {
            return Err(Error::Invalid("unitriangular size must be at least 2".into()));
        }
        if !crate::linalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let slots: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .collect();
        let order = (p as u128).checked_pow(slots.len() as u32).unwrap_or(u128::MAX);
        check_cap(order, cap)?;
        let order = order as usize;
        let p = p as usize;
        let to_matrix = |mut x: usize| -> Vec<usize> {
            let mut mat = vec![0; m * m];
            for i in 0..m {
                mat[i * m + i] = 1;
            }
            for &(i, j) in slots.iter().rev() {
                mat[i * m + j] = x % p;
                x /= p;
            }
            mat
        };
        let to_index = |mat: &[usize]| -> usize {
            slots.iter().fold(0, |acc, &(i, j)| acc * p + mat[i * m + j])
        };
        let mats: Vec<Vec<usize>> = (0..order).map(to_matrix).collect();
        let mut mul = Vec::with_capacity(order * order);
        let mut prod = vec![0; m * m];
        for a in &mats {
            for b in &mats {
                for i in 0..m {
                    for j in 0..m {
                        let mut acc = 0;
                        for k in i..=j {
                            acc += a[i * m + k] * b[k * m + j];
                        }
                        prod[i * m + j] = acc % p;
                    }
                }
                mul.push(to_index(&prod) as u32);
            }
        }
        // elementary matrices on the superdiagonal generate
        let gens = (0..m - 1)
            .map(|i| {
                let mut mat = to_matrix(0);
                mat[i * m + i + 1] = 1;
                Element::new(to_index(&mat))
            })
            .collect();
        Ok(Group::from_parts(order, mul, gens))
    }

    /// Symmetric group `S_n` on permutation words.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::Invalid("symmetric degree must be positive".into()));
        }
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::OrderCap {
                order: factorial_u128(n),
                cap: factorial_u128(MAX_SYMMETRIC_DEGREE) as usize,
            });
        }
        let order = factorial_u128(n) as usize;
        let cache = (n <= 8).then(|| (0..order).map(|r| unrank_perm(n, r)).collect());
        let mut g = Group {
            order,
            backend: Backend::Permutations { degree: n, cache },
            generators: Vec::new(),
        };
        if n >= 2 {
            let mut swap: Vec<u8> = (0..n as u8).collect();
            swap.swap(0, 1);
            g.generators.push(Element::new(rank_perm(&swap)));
            if n >= 3 {
                let cycle: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
                g.generators.push(Element::new(rank_perm(&cycle)));
            }
        }
        Ok(g)
    }

    /// Direct product with componentwise multiplication; `(g, h)` has index
    /// `g * |H| + h`.
    pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
        let order = g.order as u128 * h.order as u128;
        check_cap(order, DEFAULT_ORDER_CAP)?;
        let order = order as usize;
        let ho = h.order;
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let x = g.mul(Element::new(a / ho), Element::new(b / ho));
                let y = h.mul(Element::new(a % ho), Element::new(b % ho));
                mul.push((x.index() * ho + y.index()) as u32);
            }
        }
        let gens = g
            .generators
            .iter()
            .map(|x| Element::new(x.index() * ho))
            .chain(h.generators.iter().copied())
            .collect();
        Ok(Group::from_parts(order, mul, gens))
    }

    /// Builds a group from a Cayley table, checking the group axioms.
    pub fn from_table(order: usize, mul: Vec<u32>) -> Result<Group> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::Invalid("table size does not match order".into()));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::Invalid("table entry out of range".into()));
        }
        for g in 0..order {
            if mul[g] as usize != g || mul[g * order] as usize != g {
                return Err(Error::Invalid("element 0 is not the identity".into()));
            }
        }
        let inv = inverses(order, &mul)?;
        let mut group = Group {
            order,
            backend: Backend::Table { mul, inv },
            generators: Vec::new(),
        };
        group.check_associativity()?;
        group.generators = group.greedy_generators();
        Ok(group)
    }

    fn from_parts(order: usize, mul: Vec<u32>, generators: Vec<Element>) -> Group {
        let inv = inverses(order, &mul).expect("constructor tables have inverses");
        Group {
            order,
            backend: Backend::Table { mul, inv },
            generators,
        }
    }

    /// The subgroup `sub` as a group in its own right, together with the
    /// embedding (index in `sub` -> element of `self`).
    pub fn induced(&self, sub: &Subgroup) -> (Group, Vec<Element>) {
        let elems = sub.elements().to_vec();
        let mut pos = vec![u32::MAX; self.order];
        for (i, e) in elems.iter().enumerate() {
            pos[e.index()] = i as u32;
        }
        let k = elems.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                mul.push(pos[self.mul(a, b).index()]);
            }
        }
        let inv = inverses(k, &mul).expect("subgroup is closed");
        let mut g = Group {
            order: k,
            backend: Backend::Table { mul, inv },
            generators: Vec::new(),
        };
        g.generators = g.greedy_generators();
        (g, elems)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element::new)
    }

    pub fn is_permutation_backend(&self) -> bool {
        matches!(self.backend, Backend::Permutations { .. })
    }

    /// Permutation degree, for `S_n`.
    pub fn degree(&self) -> Option<usize> {
        match &self.backend {
            Backend::Permutations { degree, .. } => Some(*degree),
            Backend::Table { .. } => None,
        }
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.backend {
            Backend::Table { mul, .. } => Element(mul[a.index() * self.order + b.index()]),
            Backend::Permutations { degree, cache } => {
                let n = *degree;
                let (pa, pb);
                let (ra, rb): (&[u8], &[u8]) = match cache {
                    Some(c) => (&c[a.index()], &c[b.index()]),
                    None => {
                        pa = unrank_perm(n, a.index());
                        pb = unrank_perm(n, b.index());
                        (&pa, &pb)
                    }
                };
                let prod: Vec<u8> = rb.iter().map(|&x| ra[x as usize]).collect();
                Element::new(rank_perm(&prod))
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        match &self.backend {
            Backend::Table { inv, .. } => Element(inv[a.index()]),
            Backend::Permutations { .. } => {
                let p = self.permutation(a).expect("permutation backend");
                let mut q = vec![0u8; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    q[x as usize] = i as u8;
                }
                Element::new(rank_perm(&q))
            }
        }
    }

    /// The permutation word of `a` (images of `0..n`), for `S_n`.
    pub fn permutation(&self, a: Element) -> Option<Vec<u8>> {
        match &self.backend {
            Backend::Permutations { degree, cache } => Some(match cache {
                Some(c) => c[a.index()].clone(),
                None => unrank_perm(*degree, a.index()),
            }),
            Backend::Table { .. } => None,
        }
    }

    /// Element index of a permutation word, for `S_n`.
    pub fn from_permutation(&self, word: &[u8]) -> Result<Element> {
        match self.degree() {
            Some(n) if word.len() == n && is_permutation(word) => Ok(Element::new(rank_perm(word))),
            Some(_) => Err(Error::Invalid("not a permutation of the right degree".into())),
            None => Err(Error::Unsupported("group is not a permutation group".into())),
        }
    }

    pub fn pow(&self, a: Element, k: u64) -> Element {
        let mut result = Element::IDENTITY;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: Element, b: Element) -> Element {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(ab, self.inv(ba))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn center(&self) -> Subgroup {
        let elems: Vec<Element> = self
            .elements()
            .filter(|&z| self.generators.iter().all(|&g| self.mul(g, z) == self.mul(z, g)))
            .collect();
        Subgroup::from_sorted(self.order, elems)
    }

    /// Checks identity and inverse laws for every element and associativity
    /// exhaustively up to order 256 (on a deterministic sample above).
    pub fn check_axioms(&self) -> Result<()> {
        for a in self.elements() {
            if self.mul(Element::IDENTITY, a) != a || self.mul(a, Element::IDENTITY) != a {
                return Err(Error::Invalid(format!("identity law fails at {a}")));
            }
            if !self.mul(a, self.inv(a)).is_identity() || self.inv(self.inv(a)) != a {
                return Err(Error::Invalid(format!("inverse law fails at {a}")));
            }
        }
        self.check_associativity()
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if n <= EXHAUSTIVE_ASSOC_LIMIT {
            Box::new((0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
        } else {
            // linear congruential walk; deterministic and cheap
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            Box::new((0..200_000).map(move |_| {
                let mut next = || {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) as usize) % n
                };
                (next(), next(), next())
            }))
        };
        for (a, b, c) in triples {
            let (a, b, c) = (Element::new(a), Element::new(b), Element::new(c));
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Invalid(format!("associativity fails at ({a}, {b}, {c})")));
            }
        }
        Ok(())
    }

    fn greedy_generators(&self) -> Vec<Element> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial(self);
        for a in self.elements() {
            if current.len() == self.order {
                break;
            }
            if !current.contains(a) {
                gens.push(a);
                current = subgroup_closure(self, &gens);
            }
        }
        gens
    }
}

fn check_cap(order: u128, cap: usize) -> Result<()> {
    if order > cap as u128 {
        Err(Error::OrderCap { order, cap })
    } else {
        Ok(())
    }
}

fn inverses(order: usize, mul: &[u32]) -> Result<Vec<u32>> {
    let mut inv = vec![u32::MAX; order];
    for a in 0..order {
        if let Some(b) = (0..order).find(|&b| mul[a * order + b] == 0) {
            inv[a] = b as u32;
        } else {
            return Err(Error::Invalid(format!("element {a} has no inverse")));
        }
    }
    Ok(inv)
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn is_permutation(word: &[u8]) -> bool {
    let mut seen = vec![false; word.len()];
    word.iter().all(|&x| {
        let x = x as usize;
        x < seen.len() && !std::mem::replace(&mut seen[x], true)
    })
}

/// Lexicographic rank of a permutation word (identity has rank 0).
fn rank_perm(word: &[u8]) -> usize {
    let n = word.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = word[i + 1..].iter().filter(|&&x| x < word[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn unrank_perm(n: usize, mut rank: usize) -> Vec<u8> {
    let mut digits = vec![0; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    digits.into_iter().map(|d| pool.remove(d)).collect()
}

/// A subgroup stored as a sorted element set with a membership mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<Element>,
    member: Vec<bool>,
}

impl Subgroup {
    fn from_sorted(parent_order: usize, elements: Vec<Element>) -> Subgroup {
        let mut member = vec![false; parent_order];
        for e in &elements {
            member[e.index()] = true;
        }
        Subgroup { elements, member }
    }

    fn from_mask(member: Vec<bool>) -> Subgroup {
        let elements = member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| Element::new(i))
            .collect();
        Subgroup { elements, member }
    }

    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup::from_sorted(g.order(), vec![Element::IDENTITY])
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup::from_sorted(g.order(), g.elements().collect())
    }

    /// Validates that `elements` form a subgroup of `g`.
    pub fn from_elements(g: &Group, elements: &[Element]) -> Result<Subgroup> {
        let mut member = vec![false; g.order()];
        for e in elements {
            if e.index() >= g.order() {
                return Err(Error::Invalid(format!("element {e} outside the group")));
            }
            member[e.index()] = true;
        }
        let sub = Subgroup::from_mask(member);
        if !sub.contains(Element::IDENTITY) {
            return Err(Error::Invalid("subgroup must contain the identity".into()));
        }
        for &a in &sub.elements {
            if !sub.contains(g.inv(a)) {
                return Err(Error::Invalid(format!("not closed under inverse at {a}")));
            }
            for &b in &sub.elements {
                if !sub.contains(g.mul(a, b)) {
                    return Err(Error::Invalid(format!("not closed at ({a}, {b})")));
                }
            }
        }
        Ok(sub)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, e: Element) -> bool {
        self.member.get(e.index()).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn parent_order(&self) -> usize {
        self.member.len()
    }
}

/// Smallest subgroup containing `generators`; the empty set gives `{1}`.
pub fn subgroup_closure(g: &Group, generators: &[Element]) -> Subgroup {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let gens: Vec<Element> = generators.iter().copied().filter(|e| !e.is_identity()).collect();
    let mut queue = VecDeque::from([Element::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !member[y.index()] {
                member[y.index()] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_mask(member)
}

/// Closure of `{a b a^-1 b^-1 : a in A, b in B}`.
pub fn commutator_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut gens = Vec::new();
    for &x in a.elements() {
        for &y in b.elements() {
            let c = g.commutator(x, y);
            if !std::mem::replace(&mut seen[c.index()], true) {
                gens.push(c);
            }
        }
    }
    subgroup_closure(g, &gens)
}

/// Closure of `{h^p : h in H}`.
pub fn pth_power_subgroup(g: &Group, h: &Subgroup, p: u64) -> Subgroup {
    let gens: Vec<Element> = h.elements().iter().map(|&x| g.pow(x, p)).collect();
    subgroup_closure(g, &gens)
}

/// Number of orbits of the conjugation action.
pub fn conjugacy_class_count(g: &Group) -> usize {
    let mut seen = vec![false; g.order()];
    let mut classes = 0;
    let conjugators: Vec<Element> = if g.generators().is_empty() && g.order() > 1 {
        g.elements().collect()
    } else {
        g.generators().to_vec()
    };
    for start in g.elements() {
        if seen[start.index()] {
            continue;
        }
        classes += 1;
        seen[start.index()] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &c in &conjugators {
                let y = g.conjugate(c, x);
                if !std::mem::replace(&mut seen[y.index()], true) {
                    stack.push(y);
                }
            }
        }
    }
    classes
}

/// Exhaustive normality check; returns the first witness `(g, n)` with
/// `g n g^-1` outside `N`.
pub fn normality_witness(g: &Group, n: &Subgroup) -> Option<(Element, Element)> {
    for x in g.elements() {
        for &y in n.elements() {
            if !n.contains(g.conjugate(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_normal(g: &Group, n: &Subgroup) -> bool {
    normality_witness(g, n).is_none()
}

/// A quotient `G/N` together with projection and lift maps.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub normal: Subgroup,
    pub quotient: Group,
    projection: Vec<u32>,
    reps: Vec<Element>,
}

impl QuotientData {
    pub fn project(&self, g: Element) -> Element {
        Element(self.projection[g.index()])
    }

    /// Coset representative (the smallest element of the coset).
    pub fn lift(&self, coset: Element) -> Element {
        self.reps[coset.index()]
    }

    pub fn coset_reps(&self) -> &[Element] {
        &self.reps
    }
}

pub fn quotient(g: &Group, n: &Subgroup) -> Result<QuotientData> {
    if n.parent_order() != g.order() {
        return Err(Error::Invalid("subgroup belongs to a different group".into()));
    }
    if let Some((x, y)) = normality_witness(g, n) {
        return Err(Error::NotNormal { g: x.index(), n: y.index() });
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if projection[x.index()] != u32::MAX {
            continue;
        }
        let idx = reps.len() as u32;
        reps.push(x);
        for &y in n.elements() {
            projection[g.mul(x, y).index()] = idx;
        }
    }
    let k = reps.len();
    let mut mul = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            mul.push(projection[g.mul(a, b).index()]);
        }
    }
    let mut gens: Vec<Element> = g
        .generators()
        .iter()
        .map(|&x| Element(projection[x.index()]))
        .filter(|e| !e.is_identity())
        .collect();
    gens.sort();
    gens.dedup();
    let quotient = Group::from_parts(k, mul, gens);
    Ok(QuotientData {
        normal: n.clone(),
        quotient,
        projection,
        reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &Group) -> Vec<usize> {
        let mut o: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
        o.sort();
        o.dedup();
        o
    }

    #[test]
    fn cyclic_examples() {
        let g = Group::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        let g = Group::cyclic(6).unwrap();
        assert!(g.is_abelian());
        assert_eq!(conjugacy_class_count(&g), 6);
        let g = Group::cyclic(4).unwrap();
        let x = g.generators()[0];
        assert!(g.pow(x, 4).is_identity());
        assert!(!g.pow(x, 2).is_identity());
        assert!(Group::cyclic(0).is_err());
    }

    #[test]
    fn abelian_examples() {
        let g = Group::abelian(&[2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.elements().skip(1).all(|a| g.element_order(a) == 2));
        let g = Group::abelian(&[3, 3]).unwrap();
        assert_eq!(g.exponent(), 3);
        let g = Group::abelian(&[4, 2]).unwrap();
        assert_eq!(orders(&g), vec![1, 2, 4]);
        assert_eq!(g.elements().filter(|&a| g.element_order(a) == 4).count(), 4);
    }

    #[test]
    fn unitriangular_examples() {
        assert_eq!(Group::unitriangular(3, 2).unwrap().order(), 8);
        assert_eq!(Group::unitriangular(4, 2).unwrap().order(), 64);
        let g = Group::unitriangular(2, 3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(orders(&g), vec![1, 3]);
        assert!(matches!(
            Group::unitriangular(6, 3),
            Err(Error::OrderCap { .. })
        ));
        // UT(3,2) is the dihedral group of order 8: orders {1,2,4}, non-abelian
        let d8 = Group::unitriangular(3, 2).unwrap();
        assert!(!d8.is_abelian());
        assert_eq!(orders(&d8), vec![1, 2, 4]);
    }

    #[test]
    fn symmetric_examples() {
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(conjugacy_class_count(&s3), 3);
        assert_eq!(Group::symmetric(1).unwrap().order(), 1);
        assert_eq!(conjugacy_class_count(&Group::symmetric(4).unwrap()), 5);
        assert_eq!(conjugacy_class_count(&Group::symmetric(5).unwrap()), 7);
        assert!(Group::symmetric(11).is_err());
        s3.check_axioms().unwrap();
        Group::symmetric(4).unwrap().check_axioms().unwrap();
    }

    #[test]
    fn permutation_rank_roundtrip() {
        for n in 1..=6 {
            let total: usize = (1..=n).product();
            for r in 0..total {
                assert_eq!(rank_perm(&unrank_perm(n, r)), r);
            }
        }
        assert_eq!(unrank_perm(4, 0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn uncached_permutations_agree_with_cached() {
        let s8 = Group::symmetric(8).unwrap();
        let s9 = Group::symmetric(9).unwrap();
        let a = s8.from_permutation(&[1, 2, 0, 3, 4, 5, 7, 6]).unwrap();
        let b = s8.from_permutation(&[3, 1, 2, 0, 4, 5, 6, 7]).unwrap();
        let ab = s8.permutation(s8.mul(a, b)).unwrap();
        let a9 = s9.from_permutation(&[1, 2, 0, 3, 4, 5, 7, 6, 8]).unwrap();
        let b9 = s9.from_permutation(&[3, 1, 2, 0, 4, 5, 6, 7, 8]).unwrap();
        let ab9 = s9.permutation(s9.mul(a9, b9)).unwrap();
        assert_eq!(&ab9[..8], &ab[..]);
        assert_eq!(s9.mul(a9, s9.inv(a9)), Element::IDENTITY);
    }

    #[test]
    fn products() {
        let t = Group::cyclic(1).unwrap();
        let z5 = Group::cyclic(5).unwrap();
        let p = Group::direct_product(&t, &z5).unwrap();
        for a in z5.elements() {
            for b in z5.elements() {
                assert_eq!(p.mul(a, b), z5.mul(a, b));
            }
        }
        let z2 = Group::cyclic(2).unwrap();
        let z3 = Group::cyclic(3).unwrap();
        let z6 = Group::direct_product(&z2, &z3).unwrap();
        assert_eq!(z6.order(), 6);
        assert!(z6.is_abelian());
        let v4 = Group::direct_product(&z2, &z2).unwrap();
        let v4b = Group::abelian(&[2, 2]).unwrap();
        for a in v4.elements() {
            for b in v4.elements() {
                assert_eq!(v4.mul(a, b), v4b.mul(a, b));
            }
        }
    }

    fn transposition(g: &Group, i: u8, j: u8) -> Element {
        let n = g.degree().unwrap();
        let mut w: Vec<u8> = (0..n as u8).collect();
        w.swap(i as usize, j as usize);
        g.from_permutation(&w).unwrap()
    }

    #[test]
    fn closures() {
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(subgroup_closure(&s3, &[]).len(), 1);
        let t12 = transposition(&s3, 0, 1);
        let t13 = transposition(&s3, 0, 2);
        assert_eq!(subgroup_closure(&s3, &[t12]).len(), 2);
        let all = subgroup_closure(&s3, &[t12, t13]);
        assert_eq!(all.len(), 6);
        let again = subgroup_closure(&s3, all.elements());
        assert_eq!(again, all);
    }

    #[test]
    fn commutators_and_powers() {
        let z6 = Group::cyclic(6).unwrap();
        let w = Subgroup::whole(&z6);
        assert!(commutator_subgroup(&z6, &w, &w).is_trivial());
        let s3 = Group::symmetric(3).unwrap();
        let w = Subgroup::whole(&s3);
        assert_eq!(commutator_subgroup(&s3, &w, &w).len(), 3);
        let d8 = Group::unitriangular(3, 2).unwrap();
        let w = Subgroup::whole(&d8);
        let c = commutator_subgroup(&d8, &w, &w);
        assert_eq!(c.len(), 2);
        assert_eq!(c, d8.center());

        let z4 = Group::cyclic(4).unwrap();
        let sq = pth_power_subgroup(&z4, &Subgroup::whole(&z4), 2);
        assert_eq!(sq.elements(), &[Element::new(0), Element::new(2)]);
        let e9 = Group::abelian(&[3, 3]).unwrap();
        assert!(pth_power_subgroup(&e9, &Subgroup::whole(&e9), 3).is_trivial());
        assert_eq!(pth_power_subgroup(&d8, &Subgroup::whole(&d8), 2).len(), 2);
    }

    #[test]
    fn quotients() {
        let z4 = Group::cyclic(4).unwrap();
        let n = Subgroup::from_elements(&z4, &[Element::new(0), Element::new(2)]).unwrap();
        let q = quotient(&z4, &n).unwrap();
        assert_eq!(q.quotient.order(), 2);
        assert_eq!(q.lift(Element::IDENTITY), Element::IDENTITY);

        let q = quotient(&z4, &Subgroup::whole(&z4)).unwrap();
        assert_eq!(q.quotient.order(), 1);

        let d8 = Group::unitriangular(3, 2).unwrap();
        let q = quotient(&d8, &d8.center()).unwrap();
        assert_eq!(q.quotient.order(), 4);
        assert!(q.quotient.is_abelian());
        for x in d8.elements() {
            for y in d8.elements() {
                assert_eq!(
                    q.project(d8.mul(x, y)),
                    q.quotient.mul(q.project(x), q.project(y))
                );
            }
        }
        for c in q.quotient.elements() {
            assert_eq!(q.project(q.lift(c)), c);
        }

        let s3 = Group::symmetric(3).unwrap();
        let t = subgroup_closure(&s3, &[transposition(&s3, 0, 1)]);
        assert!(matches!(quotient(&s3, &t), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn from_table_rejects_bad_tables() {
        assert!(Group::from_table(2, vec![0, 1, 1, 1]).is_err());
        let g = Group::from_table(2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(g.generators(), &[Element::new(1)]);
        // identity fine, inverses fine, associativity broken
        #[rustfmt::skip]
        let bad = vec![
            0, 1, 2, 3,
            1, 0, 3, 2,
            2, 3, 0, 1,
            3, 1, 2, 0,
        ];
        assert!(Group::from_table(4, bad).is_err());
    }
}
