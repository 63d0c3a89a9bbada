//! Finite-group kernel: dense Cayley tables over element indices, family
//! constructors, and the group-theoretic queries the classifier needs.
//!
//! Every group is stored as an `order x order` multiplication table with the
//! identity pinned at index 0. Construction validates the group laws
//! exhaustively (identity, Latin-square rows/columns, associativity), so the
//! rest of the crate can trust any `FiniteGroup` it is handed.

use crate::arith::{factorize, is_prime, lcm};
use crate::bits;
use crate::error::GroupError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Default ceiling on group order. Downstream pattern searches are O(n^6) in
/// the graph size, so desk-scale tables are all we ever build.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// Provenance tag describing how a group was built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// Z_n under addition.
    Cyclic(usize),
    /// Dihedral group with `n` rotations (order 2n, n >= 3).
    Dihedral(usize),
    /// Generalized quaternion group of order 2^n (n >= 3).
    Quaternion(usize),
    /// Heisenberg group mod p: order p^3, exponent p, p odd.
    Heisenberg(usize),
    /// Modular maximal-cyclic group of order p^3, p odd.
    Modular(usize),
    /// Direct product, in factor order.
    Product(Vec<Family>),
    /// Anything loaded from a raw Cayley table.
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic({n})"),
            Family::Dihedral(n) => write!(f, "dihedral({n})"),
            Family::Quaternion(n) => write!(f, "quaternion({n})"),
            Family::Heisenberg(p) => write!(f, "heisenberg({p})"),
            Family::Modular(p) => write!(f, "modular({p})"),
            Family::Product(parts) => {
                // All-cyclic products use the compact "a x b" spelling.
                if parts.iter().all(|p| matches!(p, Family::Cyclic(_))) {
                    let ns: Vec<String> = parts
                        .iter()
                        .map(|p| match p {
                            Family::Cyclic(n) => n.to_string(),
                            _ => unreachable!(),
                        })
                        .collect();
                    write!(f, "product({})", ns.join("x"))
                } else {
                    let ns: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    write!(f, "product({})", ns.join(","))
                }
            }
            Family::Custom => write!(f, "custom"),
        }
    }
}

/// A subgroup as a bitmask over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSet {
    mask: Vec<u64>,
    generator: Option<usize>,
    size: usize,
}

impl SubgroupSet {
    pub fn contains(&self, x: usize) -> bool {
        bits::test_bit(&self.mask, x)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// The element this subgroup was generated from, when it is cyclic by
    /// construction.
    pub fn generator(&self) -> Option<usize> {
        self.generator
    }

    pub fn members(&self) -> Vec<usize> {
        bits::iter_ones(&self.mask).collect()
    }

    pub fn mask(&self) -> &[u64] {
        &self.mask
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        bits::is_subset(&self.mask, &other.mask)
    }
}

/// Finite group as a dense Cayley table with cached element orders.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>, // row-major, order * order
    labels: Vec<String>,
    orders: Vec<usize>,
    family: Family,
}

impl FiniteGroup {
    /// Build and validate a group from a raw table. `cayley[a * order + b]`
    /// is the product `a * b`; the identity must sit at index 0.
    pub fn from_cayley(
        labels: Vec<String>,
        cayley: Vec<usize>,
        family: Family,
    ) -> Result<Self, GroupError> {
        Self::from_cayley_with_cap(labels, cayley, family, DEFAULT_ORDER_CAP)
    }

    pub fn from_cayley_with_cap(
        labels: Vec<String>,
        cayley: Vec<usize>,
        family: Family,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let order = labels.len();
        if order == 0 {
            return Err(GroupError::InvalidParameter("empty group".into()));
        }
        if order > cap {
            return Err(GroupError::OrderCapExceeded { order, cap });
        }
        if cayley.len() != order * order {
            return Err(GroupError::InvalidTable(format!(
                "table has {} entries, expected {}",
                cayley.len(),
                order * order
            )));
        }
        if cayley.iter().any(|&x| x >= order) {
            return Err(GroupError::InvalidTable("entry out of range".into()));
        }
        // Identity law at index 0.
        for g in 0..order {
            if cayley[g] != g || cayley[g * order] != g {
                return Err(GroupError::InvalidTable(
                    "identity is not at index 0".into(),
                ));
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; order];
        for r in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..order {
                let v = cayley[r * order + c];
                if seen[v] {
                    return Err(GroupError::InvalidTable(format!("row {r} repeats {v}")));
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..order {
                let v = cayley[c * order + r];
                if seen[v] {
                    return Err(GroupError::InvalidTable(format!("column {r} repeats {v}")));
                }
                seen[v] = true;
            }
        }
        // Exhaustive associativity check; orders stay small enough that the
        // cubic scan is cheap.
        if order <= cap {
            for a in 0..order {
                for b in 0..order {
                    let ab = cayley[a * order + b];
                    for c in 0..order {
                        let bc = cayley[b * order + c];
                        if cayley[ab * order + c] != cayley[a * order + bc] {
                            return Err(GroupError::InvalidTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        // Cache element orders; Lagrange is asserted as a sanity check on the
        // table itself.
        let mut orders = vec![0usize; order];
        for g in 0..order {
            let mut k = 1usize;
            let mut cur = g;
            while cur != 0 {
                cur = cayley[cur * order + g];
                k += 1;
            }
            assert!(
                order.is_multiple_of(k),
                "element order must divide group order"
            );
            orders[g] = k;
        }
        Ok(FiniteGroup {
            order,
            cayley,
            labels,
            orders,
            family,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Group operation.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.op(a, b) == 0).unwrap()
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.op(acc, g);
        }
        acc
    }

    /// Order of the element `x`: least k >= 1 with x^k = e.
    pub fn element_order(&self, x: usize) -> Result<usize, GroupError> {
        if x >= self.order {
            return Err(GroupError::IndexOutOfRange {
                index: x,
                order: self.order,
            });
        }
        Ok(self.orders[x])
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    /// The cyclic subgroup generated by `x`, as a bitmask.
    pub fn cyclic_subgroup(&self, x: usize) -> Result<SubgroupSet, GroupError> {
        if x >= self.order {
            return Err(GroupError::IndexOutOfRange {
                index: x,
                order: self.order,
            });
        }
        let mut mask = vec![0u64; bits::words_for(self.order)];
        let mut cur = 0usize;
        let mut size = 0usize;
        loop {
            if !bits::test_bit(&mask, cur) {
                bits::set_bit(&mut mask, cur);
                size += 1;
            }
            cur = self.op(cur, x);
            if cur == 0 {
                break;
            }
        }
        Ok(SubgroupSet {
            mask,
            generator: Some(x),
            size,
        })
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.orders.iter().copied().fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    /// The primes dividing the group order.
    pub fn prime_divisors(&self) -> Vec<usize> {
        factorize(self.order).into_iter().map(|(p, _)| p).collect()
    }

    /// `Some(p)` when the order is a power of a single prime `p` (order >= 2).
    pub fn p_group_prime(&self) -> Option<usize> {
        let f = factorize(self.order);
        if f.len() == 1 {
            Some(f[0].0)
        } else {
            None
        }
    }

    /// Trivial group or cyclic of prime-power order.
    pub fn is_cyclic_prime_power(&self) -> bool {
        self.order == 1 || (self.is_cyclic() && self.p_group_prime().is_some())
    }

    /// Nilpotency via closure of the p-element sets: for every prime p
    /// dividing the order, the elements of p-power order must be closed under
    /// the product. That makes each such set the unique (hence normal) Sylow
    /// p-subgroup, which is equivalent to nilpotency.
    pub fn is_nilpotent(&self) -> bool {
        for p in self.prime_divisors() {
            let members: Vec<usize> = (0..self.order)
                .filter(|&g| is_power_of(self.orders[g], p))
                .collect();
            for &a in &members {
                for &b in &members {
                    if !is_power_of(self.orders[self.op(a, b)], p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All cyclic subgroups not properly contained in another cyclic
    /// subgroup, deduplicated. Their union always covers the group.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<SubgroupSet> {
        let mut subs: Vec<SubgroupSet> = Vec::new();
        for x in 0..self.order {
            let s = self.cyclic_subgroup(x).unwrap();
            if !subs.iter().any(|t| t.mask == s.mask) {
                subs.push(s);
            }
        }
        let maximal: Vec<SubgroupSet> = subs
            .iter()
            .filter(|s| {
                !subs
                    .iter()
                    .any(|t| t.mask != s.mask && bits::is_subset(&s.mask, &t.mask))
            })
            .cloned()
            .collect();
        maximal
    }

    /// Count of elements per order, ascending by order.
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for &o in &self.orders {
            *census.entry(o).or_insert(0) += 1;
        }
        census
    }

    /// Structural test for the generalized quaternion groups: a non-cyclic
    /// 2-group of order >= 8 with a unique involution.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.order >= 8
            && self.p_group_prime() == Some(2)
            && !self.is_cyclic()
            && self.orders.iter().filter(|&&o| o == 2).count() == 1
    }

    /// Structural test for the dihedral groups: returns the rotation count
    /// `n` (so the order is `2n`, `n >= 3`) when the group has a cyclic
    /// subgroup of index 2 whose complement consists of involutions that
    /// invert it by conjugation.
    pub fn dihedral_rotation_count(&self) -> Option<usize> {
        if !self.order.is_multiple_of(2) || self.order < 6 {
            return None;
        }
        let n = self.order / 2;
        for r in 0..self.order {
            if self.orders[r] != n {
                continue;
            }
            let h = self.cyclic_subgroup(r).unwrap();
            let outside: Vec<usize> = (0..self.order).filter(|&g| !h.contains(g)).collect();
            let ok = outside.iter().all(|&s| {
                self.orders[s] == 2 && {
                    // s r s^{-1} = r^{-1}, and s^2 = e so s^{-1} = s
                    let conj = self.op(self.op(s, r), s);
                    conj == self.inverse(r)
                }
            });
            if ok {
                return Some(n);
            }
        }
        None
    }
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

// ---------------------------------------------------------------------------
// Family constructors
// ---------------------------------------------------------------------------

/// Z_n with element `i` labeled `"i"`, addition mod n.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(
            "cyclic group needs n >= 1".into(),
        ));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let mut cayley = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            cayley[a * n + b] = (a + b) % n;
        }
    }
    FiniteGroup::from_cayley(labels, cayley, Family::Cyclic(n))
}

/// Dihedral group with `n` rotations (order `2n`): elements `r^i` at indices
/// `0..n` and `r^i s` at indices `n..2n`, with `r^n = s^2 = e`, `rs = sr^-1`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter(
            "dihedral group needs n >= 3".into(),
        ));
    }
    let order = 2 * n;
    let mut labels = Vec::with_capacity(order);
    for i in 0..n {
        labels.push(rotation_label("r", i));
    }
    for i in 0..n {
        labels.push(if i == 0 {
            "s".to_string()
        } else {
            format!("{} s", rotation_label("r", i))
        });
    }
    let idx = |flip: bool, i: usize| if flip { n + i } else { i };
    let mut cayley = vec![0usize; order * order];
    for a in 0..order {
        for b in 0..order {
            let (fa, ia) = (a >= n, a % n);
            let (fb, ib) = (b >= n, b % n);
            // r^a * r^b = r^(a+b); r^a s * r^b = r^(a-b) s; flips compose mod 2
            let i = if fa {
                (ia + n - ib % n) % n
            } else {
                (ia + ib) % n
            };
            cayley[a * order + b] = idx(fa ^ fb, i);
        }
    }
    FiniteGroup::from_cayley(labels, cayley, Family::Dihedral(n))
}

/// Generalized quaternion group Q_{2^n} of order 2^n (n >= 3): elements
/// `x^a` and `x^a y` with `x` of order `2^(n-1)`, `y^2 = x^(2^(n-2))`, and
/// `y x y^-1 = x^-1`.
pub fn make_generalized_quaternion(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter(
            "generalized quaternion group needs n >= 3".into(),
        ));
    }
    let m = 1usize << (n - 1); // order of x
    let order = 2 * m;
    if order > DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let mut labels = Vec::with_capacity(order);
    for a in 0..m {
        labels.push(rotation_label("x", a));
    }
    for a in 0..m {
        labels.push(if a == 0 {
            "y".to_string()
        } else {
            format!("{} y", rotation_label("x", a))
        });
    }
    let idx = |flip: bool, a: usize| if flip { m + a } else { a };
    let mut cayley = vec![0usize; order * order];
    for u in 0..order {
        for v in 0..order {
            let (fu, au) = (u >= m, u % m);
            let (fv, av) = (v >= m, v % m);
            let a = match (fu, fv) {
                (false, false) => (au + av) % m,
                (false, true) => (au + av) % m,
                (true, false) => (au + m - av % m) % m,
                // (x^a y)(x^b y) = x^(a - b) y^2 = x^(a - b + m/2)
                (true, true) => (au + m - av % m + m / 2) % m,
            };
            cayley[u * order + v] = idx(fu ^ fv, a);
        }
    }
    FiniteGroup::from_cayley(labels, cayley, Family::Quaternion(n))
}

/// Heisenberg group mod p (p odd prime): triples over Z_p with
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`. Order p^3, exponent p.
pub fn make_heisenberg(p: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) || p == 2 {
        return Err(GroupError::InvalidParameter(
            "Heisenberg group needs an odd prime".into(),
        ));
    }
    let order = p * p * p;
    if order > DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut labels = vec![String::new(); order];
    let mut cayley = vec![0usize; order * order];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                labels[enc(a, b, c)] = format!("({a},{b},{c})");
            }
        }
    }
    for u in 0..order {
        let (a, b, c) = (u / (p * p), u / p % p, u % p);
        for v in 0..order {
            let (a2, b2, c2) = (v / (p * p), v / p % p, v % p);
            cayley[u * order + v] = enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
        }
    }
    FiniteGroup::from_cayley(labels, cayley, Family::Heisenberg(p))
}

/// Modular maximal-cyclic group of order p^3 (p odd prime): pairs in
/// Z_{p^2} x Z_p with `(i,j)(i',j') = (i + i'(1+p)^j mod p^2, j+j')`.
/// Non-abelian, with elements of order p^2.
pub fn make_modular_maximal_cyclic(p: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) || p == 2 {
        return Err(GroupError::InvalidParameter(
            "modular maximal-cyclic group needs an odd prime".into(),
        ));
    }
    let p2 = p * p;
    let order = p2 * p;
    if order > DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    // (1+p)^j mod p^2, precomputed for j in 0..p
    let mut pows = vec![1usize; p];
    for j in 1..p {
        pows[j] = pows[j - 1] * (1 + p) % p2;
    }
    let enc = |i: usize, j: usize| i * p + j;
    let mut labels = vec![String::new(); order];
    let mut cayley = vec![0usize; order * order];
    for i in 0..p2 {
        for j in 0..p {
            labels[enc(i, j)] = format!("({i},{j})");
        }
    }
    for u in 0..order {
        let (i, j) = (u / p, u % p);
        for v in 0..order {
            let (i2, j2) = (v / p, v % p);
            cayley[u * order + v] = enc((i + i2 * pows[j]) % p2, (j + j2) % p);
        }
    }
    FiniteGroup::from_cayley(labels, cayley, Family::Modular(p))
}

/// Direct product with element `(a, b)` at index `a * |h| + b` and
/// componentwise multiplication.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let order = g.order() * h.order();
    if order > DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let hn = h.order();
    let mut labels = Vec::with_capacity(order);
    for a in 0..g.order() {
        for b in 0..hn {
            labels.push(format!("({},{})", g.label(a), h.label(b)));
        }
    }
    let mut cayley = vec![0usize; order * order];
    for u in 0..order {
        let (a, b) = (u / hn, u % hn);
        for v in 0..order {
            let (a2, b2) = (v / hn, v % hn);
            cayley[u * order + v] = g.op(a, a2) * hn + h.op(b, b2);
        }
    }
    let family = Family::Product(vec![g.family().clone(), h.family().clone()]);
    FiniteGroup::from_cayley(labels, cayley, family)
}

/// Direct product of cyclic groups Z_{moduli[0]} x ... with flat tuple
/// labels like `"(0,1,2)"`.
pub fn make_abelian(moduli: &[usize]) -> Result<FiniteGroup, GroupError> {
    if moduli.is_empty() {
        return Err(GroupError::InvalidParameter(
            "abelian product needs at least one factor".into(),
        ));
    }
    if moduli.contains(&0) {
        return Err(GroupError::InvalidParameter(
            "factor Z_0 is not a group".into(),
        ));
    }
    let order: usize = moduli.iter().product();
    if order > DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let k = moduli.len();
    let decode = |mut x: usize| {
        let mut t = vec![0usize; k];
        for i in (0..k).rev() {
            t[i] = x % moduli[i];
            x /= moduli[i];
        }
        t
    };
    let encode = |t: &[usize]| t.iter().zip(moduli).fold(0, |acc, (&d, &m)| acc * m + d);
    let mut labels = Vec::with_capacity(order);
    for x in 0..order {
        let t = decode(x);
        if k == 1 {
            labels.push(t[0].to_string());
        } else {
            let parts: Vec<String> = t.iter().map(|d| d.to_string()).collect();
            labels.push(format!("({})", parts.join(",")));
        }
    }
    let mut cayley = vec![0usize; order * order];
    for u in 0..order {
        let tu = decode(u);
        for v in 0..order {
            let tv = decode(v);
            let sum: Vec<usize> = tu
                .iter()
                .zip(&tv)
                .zip(moduli)
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect();
            cayley[u * order + v] = encode(&sum);
        }
    }
    let family = if k == 1 {
        Family::Cyclic(moduli[0])
    } else {
        Family::Product(moduli.iter().map(|&m| Family::Cyclic(m)).collect())
    };
    FiniteGroup::from_cayley(labels, cayley, family)
}

fn rotation_label(sym: &str, i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => sym.to_string(),
        _ => format!("{sym}^{i}"),
    }
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

/// On-disk form of a group: `{order, labels, cayley (row-major), family}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupDocument {
    pub order: usize,
    pub labels: Vec<String>,
    pub cayley: Vec<usize>,
    pub family: String,
}

impl FiniteGroup {
    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            order: self.order,
            labels: self.labels.clone(),
            cayley: self.cayley.clone(),
            family: self.family.to_string(),
        }
    }

    /// Rebuild and re-validate a group from its document form. The family
    /// string is kept as provenance only; the table is what counts.
    pub fn from_document(doc: GroupDocument, cap: usize) -> Result<Self, GroupError> {
        if doc.labels.len() != doc.order {
            return Err(GroupError::InvalidTable(format!(
                "{} labels for order {}",
                doc.labels.len(),
                doc.order
            )));
        }
        FiniteGroup::from_cayley_with_cap(doc.labels, doc.cayley, Family::Custom, cap)
    }
}
