//! Finite loops given by Cayley tables.
//!
//! Covers validation (Latin square with a two-sided identity), the Moufang
//! and associativity checks, the doubling `M(G, 2) = G ∪ Gu`, element orders,
//! and finite certificates for the two reductions that make finite Moufang
//! loops and `M(G, 2)` behave well: blocks of one repeated element that
//! multiply to the identity, and subsequences or pairings that land in `G`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::octonion::SignedUnit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopError {
    MalformedTable(String),
    NotAGroup,
    NotMoufang,
    NotMG2Shaped,
    /// Two bracketings of `element^power` disagree.
    BracketingDisagreement {
        element: usize,
        power: usize,
    },
    MalformedSequence(String),
}

impl fmt::Display for LoopError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopError::MalformedTable(why) => write!(f, "malformed table: {why}"),
            LoopError::NotAGroup => f.write_str("table is not a group"),
            LoopError::NotMoufang => f.write_str("loop is not Moufang"),
            LoopError::NotMG2Shaped => f.write_str("table is not of the form M(G,2)"),
            LoopError::BracketingDisagreement { element, power } => {
                write!(f, "bracketings of power {power} of element {element} disagree")
            }
            LoopError::MalformedSequence(why) => write!(f, "malformed sequence: {why}"),
        }
    }
}

impl core::error::Error for LoopError {}

/// A finite binary system with a designated identity, elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopTable {
    order: usize,
    identity: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl LoopTable {
    /// Checks dimensions and ranges only; see [`validate_loop`].
    pub fn new(
        order: usize,
        identity: usize,
        rows: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<Self, LoopError> {
        let bad = |why: String| Err(LoopError::MalformedTable(why));
        if order == 0 {
            return bad("order must be positive".into());
        }
        if identity >= order {
            return bad(format!("identity {identity} out of range for order {order}"));
        }
        if rows.len() != order {
            return bad(format!("expected {order} rows, found {}", rows.len()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return bad(format!("row {i} has {} entries, expected {order}", row.len()));
            }
            if let Some(x) = row.iter().find(|&&x| x >= order) {
                return bad(format!("row {i} has entry {x} out of range"));
            }
            table.extend(row);
        }
        if let Some(names) = &names {
            if names.len() != order {
                return bad(format!("expected {order} names, found {}", names.len()));
            }
        }
        Ok(LoopTable { order, identity, table, names })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    /// Element by name, or by decimal index when unnamed or unmatched.
    pub fn lookup(&self, token: &str) -> Option<usize> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == token) {
                return Some(i);
            }
        }
        token.parse::<usize>().ok().filter(|&i| i < self.order)
    }

    /// Two-sided inverse; `None` if absent or not two-sided.
    pub fn inverse(&self, g: usize) -> Option<usize> {
        let h = (0..self.order).find(|&h| self.mul(g, h) == self.identity)?;
        (self.mul(h, g) == self.identity).then_some(h)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.order;
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
    }
}

/// Latin square with identity row and column.
pub fn validate_loop(l: &LoopTable) -> Result<(), LoopError> {
    let n = l.order;
    for i in 0..n {
        let mut row = alloc::vec![false; n];
        let mut col = alloc::vec![false; n];
        for j in 0..n {
            let (r, c) = (l.mul(i, j), l.mul(j, i));
            if core::mem::replace(&mut row[r], true) {
                return Err(LoopError::MalformedTable(format!("row {i} repeats entry {r}")));
            }
            if core::mem::replace(&mut col[c], true) {
                return Err(LoopError::MalformedTable(format!("column {i} repeats entry {c}")));
            }
        }
        if l.mul(l.identity, i) != i || l.mul(i, l.identity) != i {
            return Err(LoopError::MalformedTable(format!("element {} is not an identity at {i}", l.identity)));
        }
    }
    Ok(())
}

/// `z(x(zy)) = ((zx)z)y` for all triples.
pub fn is_moufang(l: &LoopTable) -> bool {
    l.triples().all(|(x, y, z)| moufang_left(l, x, y, z))
}

fn moufang_left(l: &LoopTable, x: usize, y: usize, z: usize) -> bool {
    l.mul(z, l.mul(x, l.mul(z, y))) == l.mul(l.mul(l.mul(z, x), z), y)
}

/// The four classical Moufang identities, each checked over all triples:
/// `z(x(zy)) = ((zx)z)y`, `x(z(yz)) = ((xz)y)z`, `(zx)(yz) = (z(xy))z`,
/// `(zx)(yz) = z((xy)z)`.
pub fn moufang_variants(l: &LoopTable) -> [bool; 4] {
    let m = |a, b| l.mul(a, b);
    let mut ok = [true; 4];
    for (x, y, z) in l.triples() {
        ok[0] &= moufang_left(l, x, y, z);
        ok[1] &= m(x, m(z, m(y, z))) == m(m(m(x, z), y), z);
        ok[2] &= m(m(z, x), m(y, z)) == m(m(z, m(x, y)), z);
        ok[3] &= m(m(z, x), m(y, z)) == m(z, m(m(x, y), z));
    }
    ok
}

pub fn is_associative(l: &LoopTable) -> bool {
    l.triples().all(|(a, b, c)| l.mul(a, l.mul(b, c)) == l.mul(l.mul(a, b), c))
}

/// First triple `(a, b, c)` with `a(bc) ≠ (ab)c`.
pub fn nonassociative_witness(l: &LoopTable) -> Option<(usize, usize, usize)> {
    l.triples().find(|&(a, b, c)| l.mul(a, l.mul(b, c)) != l.mul(l.mul(a, b), c))
}

/// The cyclic group `Z_n` on `0..n`.
pub fn cyclic(n: usize) -> LoopTable {
    let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    LoopTable::new(n, 0, rows, None).expect("cyclic table is well formed")
}

/// The symmetric group on three points; elements are permutations in
/// one-line notation, listed lexicographically, composed right to left.
pub fn s3() -> LoopTable {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
    let rows = perms.iter().map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect()).collect();
    let names = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
    LoopTable::new(6, 0, rows, Some(names)).expect("S3 table is well formed")
}

/// The sixteen signed unit octonions; element `j` is `e_j`, `j + 8` is `-e_j`.
pub fn octo16() -> LoopTable {
    let rows = (0..16)
        .map(|a| (0..16).map(|b| (SignedUnit::from_dense(a) * SignedUnit::from_dense(b)).dense()).collect())
        .collect();
    let names = (0..16).map(|d| SignedUnit::from_dense(d).to_string()).collect();
    LoopTable::new(16, 0, rows, Some(names)).expect("octonion table is well formed")
}

/// Doubles a group `G` to `G ∪ Gu` with
/// `(gu)h = (gh⁻¹)u`, `g(hu) = (hg)u`, `(gu)(hu) = h⁻¹g`.
///
/// Element `i < n` is `g_i`; element `i + n` is `g_i u`.
pub fn m_g2(g: &LoopTable) -> Result<LoopTable, LoopError> {
    validate_loop(g)?;
    if !is_associative(g) {
        return Err(LoopError::NotAGroup);
    }
    let n = g.order();
    let inv: Vec<usize> = (0..n).map(|a| g.inverse(a).ok_or(LoopError::NotAGroup)).collect::<Result<_, _>>()?;
    let rows = (0..2 * n)
        .map(|a| {
            (0..2 * n)
                .map(|b| match (a < n, b < n) {
                    (true, true) => g.mul(a, b),
                    (false, true) => g.mul(a - n, inv[b]) + n,
                    (true, false) => g.mul(b - n, a) + n,
                    (false, false) => g.mul(inv[b - n], a - n),
                })
                .collect()
        })
        .collect();
    let names = (0..2 * n).map(|a| if a < n { g.name(a) } else { format!("{}·u", g.name(a - n)) }).collect();
    LoopTable::new(2 * n, g.identity(), rows, Some(names))
}

/// A table known to be a valid Moufang loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoufangLoop(LoopTable);

impl MoufangLoop {
    pub fn new(table: LoopTable) -> Result<Self, LoopError> {
        validate_loop(&table)?;
        if !is_moufang(&table) {
            return Err(LoopError::NotMoufang);
        }
        Ok(MoufangLoop(table))
    }

    pub fn table(&self) -> &LoopTable {
        &self.0
    }

    /// Least `k ≥ 1` with left-nested `g^k` equal to the identity, checking
    /// along the way that every bracketing of `g^m` agrees for `m ≤ k`.
    pub fn element_order(&self, g: usize) -> Result<usize, LoopError> {
        let l = &self.0;
        if g >= l.order() {
            return Err(LoopError::MalformedSequence(format!("element {g} out of range")));
        }
        let mut powers = PowerSets::new(l, g);
        let mut left_nested = g;
        for k in 1..=l.order() {
            let all = powers.next_level();
            if all.len() != 1 {
                return Err(LoopError::BracketingDisagreement { element: g, power: k });
            }
            if k > 1 {
                left_nested = l.mul(left_nested, g);
            }
            debug_assert!(all.contains(&left_nested));
            if left_nested == l.identity() {
                return Ok(k);
            }
        }
        Err(LoopError::BracketingDisagreement { element: g, power: l.order() })
    }
}

/// `levels[m-1]` holds the set of values of all bracketings of `g^m`.
struct PowerSets<'a> {
    table: &'a LoopTable,
    g: usize,
    levels: Vec<BTreeSet<usize>>,
}

impl<'a> PowerSets<'a> {
    fn new(table: &'a LoopTable, g: usize) -> Self {
        PowerSets { table, g, levels: Vec::new() }
    }

    fn next_level(&mut self) -> &BTreeSet<usize> {
        let m = self.levels.len() + 1;
        let mut set = BTreeSet::new();
        if m == 1 {
            set.insert(self.g);
        } else {
            for i in 1..m {
                for &a in &self.levels[i - 1] {
                    for &b in &self.levels[m - i - 1] {
                        set.insert(self.table.mul(a, b));
                    }
                }
            }
        }
        self.levels.push(set);
        self.levels.last().expect("just pushed")
    }
}

/// Whether all bracketings of `g^m` agree for every `m ≤ max_power`.
pub fn powers_bracketing_independent(l: &LoopTable, g: usize, max_power: usize) -> bool {
    let mut powers = PowerSets::new(l, g);
    (1..=max_power).all(|_| powers.next_level().len() == 1)
}

/// [`MoufangLoop::element_order`] on an unchecked table.
pub fn element_order(l: &LoopTable, g: usize) -> Result<usize, LoopError> {
    MoufangLoop::new(l.clone())?.element_order(g)
}

/// An infinite sequence `prefix, cycle, cycle, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicSequence {
    prefix: Vec<usize>,
    cycle: Vec<usize>,
}

impl PeriodicSequence {
    pub fn new(prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self, LoopError> {
        if cycle.is_empty() {
            return Err(LoopError::MalformedSequence("cycle must be nonempty".into()));
        }
        Ok(PeriodicSequence { prefix, cycle })
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn at(&self, position: usize) -> usize {
        match position.checked_sub(self.prefix.len()) {
            None => self.prefix[position],
            Some(p) => self.cycle[p % self.cycle.len()],
        }
    }

    fn check_range(&self, order: usize) -> Result<(), LoopError> {
        match self.prefix.iter().chain(&self.cycle).find(|&&x| x >= order) {
            Some(x) => Err(LoopError::MalformedSequence(format!("element {x} out of range for order {order}"))),
            None => Ok(()),
        }
    }

    /// Positions of `g` in increasing order; infinite when `g` is in the cycle.
    pub fn occurrences(&self, g: usize) -> impl Iterator<Item = usize> + '_ {
        let in_cycle = self.cycle.contains(&g);
        let bound = if in_cycle { usize::MAX } else { self.prefix.len() };
        (0..bound).filter(move |&p| self.at(p) == g)
    }
}

/// Blocks of positions of one element, each multiplying to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyCertificate {
    pub element: usize,
    pub order: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl RamseyCertificate {
    /// Re-evaluates every block by left-nested table multiplication.
    pub fn verify(&self, l: &LoopTable, s: &PeriodicSequence) -> bool {
        let mut last = None;
        self.blocks.iter().all(|block| {
            let increasing = block.iter().all(|&p| {
                let ok = last.is_none_or(|q| p > q);
                last = Some(p);
                ok
            });
            let product = block.iter().map(|&p| s.at(p)).reduce(|acc, x| l.mul(acc, x));
            increasing && block.len() == self.order && product == Some(l.identity())
        })
    }
}

/// Picks the least element occurring in the cycle and groups its first
/// `block_count · k` occurrences into blocks of `k`, its order.
pub fn ramsey_reduce(
    l: &MoufangLoop,
    s: &PeriodicSequence,
    block_count: usize,
) -> Result<RamseyCertificate, LoopError> {
    s.check_range(l.table().order())?;
    let element = *s.cycle().iter().min().expect("nonempty cycle");
    let order = l.element_order(element)?;
    let positions: Vec<usize> = s.occurrences(element).take(block_count * order).collect();
    let blocks = positions.chunks(order).map(<[usize]>::to_vec).collect();
    Ok(RamseyCertificate { element, order, blocks })
}

/// `M(G, 2)` with the group half `0..group_order` identified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MG2Loop {
    table: LoopTable,
    group_order: usize,
}

impl MG2Loop {
    /// Recognizes a table as the doubling of its first half.
    pub fn recognize(table: &LoopTable) -> Result<Self, LoopError> {
        let order = table.order();
        if !order.is_multiple_of(2) || table.identity() >= order / 2 {
            return Err(LoopError::NotMG2Shaped);
        }
        let n = order / 2;
        let mut rows = Vec::with_capacity(n);
        for a in 0..n {
            let row: Vec<usize> = table.row(a)[..n].to_vec();
            if row.iter().any(|&x| x >= n) {
                return Err(LoopError::NotMG2Shaped);
            }
            rows.push(row);
        }
        let names = table.names().map(|ns| ns[..n].to_vec());
        let group = LoopTable::new(n, table.identity(), rows, names).map_err(|_| LoopError::NotMG2Shaped)?;
        let doubled = m_g2(&group).map_err(|_| LoopError::NotMG2Shaped)?;
        if doubled.table != table.table {
            return Err(LoopError::NotMG2Shaped);
        }
        Ok(MG2Loop { table: table.clone(), group_order: n })
    }

    pub fn table(&self) -> &LoopTable {
        &self.table
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn in_group(&self, a: usize) -> bool {
        a < self.group_order
    }
}

/// A reduction whose terms all lie in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupReduction {
    /// An element of `G` recurs; take those positions.
    Subsequence { element: usize, positions: Vec<usize> },
    /// Every element after the prefix is in `Gu`; pair consecutive ones,
    /// `(gu)(hu) = h⁻¹g ∈ G`.
    Pairing { pairs: Vec<(usize, usize)>, products: Vec<usize> },
}

impl GroupReduction {
    /// The produced reduction terms.
    pub fn terms(&self) -> Vec<usize> {
        match self {
            GroupReduction::Subsequence { element, positions } => alloc::vec![*element; positions.len()],
            GroupReduction::Pairing { products, .. } => products.clone(),
        }
    }

    /// Re-evaluates the certificate against the table.
    pub fn verify(&self, l: &MG2Loop, s: &PeriodicSequence) -> bool {
        let t = l.table();
        match self {
            GroupReduction::Subsequence { element, positions } => {
                l.in_group(*element)
                    && positions.windows(2).all(|w| w[0] < w[1])
                    && positions.iter().all(|&p| s.at(p) == *element)
            }
            GroupReduction::Pairing { pairs, products } => {
                pairs.len() == products.len()
                    && pairs.windows(2).all(|w| w[0].1 < w[1].0)
                    && pairs
                        .iter()
                        .zip(products)
                        .all(|(&(p, q), &prod)| p < q && t.mul(s.at(p), s.at(q)) == prod && l.in_group(prod))
            }
        }
    }
}

/// A reduction of `s` into `G`: a recurring group element if the cycle has
/// one, otherwise consecutive pairs of `Gu` elements after the prefix.
pub fn mg2_reduce_to_group(l: &MG2Loop, s: &PeriodicSequence, count: usize) -> Result<GroupReduction, LoopError> {
    s.check_range(l.table().order())?;
    if let Some(&element) = s.cycle().iter().filter(|&&a| l.in_group(a)).min() {
        let positions = s.occurrences(element).take(count).collect();
        return Ok(GroupReduction::Subsequence { element, positions });
    }
    let start = s.prefix().len();
    let pairs: Vec<(usize, usize)> = (0..count).map(|i| (start + 2 * i, start + 2 * i + 1)).collect();
    let products = pairs.iter().map(|&(p, q)| l.table().mul(s.at(p), s.at(q))).collect();
    Ok(GroupReduction::Pairing { pairs, products })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cyclic_group_is_everything() {
        let z4 = cyclic(4);
        assert_eq!(validate_loop(&z4), Ok(()));
        assert!(is_moufang(&z4));
        assert!(is_associative(&z4));
    }

    #[test]
    fn octonion_sign_loop() {
        let o = octo16();
        assert_eq!(validate_loop(&o), Ok(()));
        assert!(is_moufang(&o));
        assert!(!is_associative(&o));
        let (e5, e6, e7) = (5, 6, 7);
        assert_ne!(o.mul(e5, o.mul(e6, e7)), o.mul(o.mul(e5, e6), e7));
        assert_eq!(o.lookup("-e4"), Some(12));
    }

    #[test]
    fn repeated_row_entry_is_malformed() {
        let t = LoopTable::new(2, 0, vec![vec![0, 1], vec![1, 1]], None).unwrap();
        assert!(matches!(validate_loop(&t), Err(LoopError::MalformedTable(_))));
        assert!(matches!(LoopTable::new(2, 0, vec![vec![0, 1]], None), Err(LoopError::MalformedTable(_))));
        assert!(matches!(LoopTable::new(2, 0, vec![vec![0, 1], vec![1, 2]], None), Err(LoopError::MalformedTable(_))));
        assert!(matches!(LoopTable::new(2, 5, vec![vec![0, 1], vec![1, 0]], None), Err(LoopError::MalformedTable(_))));
    }

    #[test]
    fn doubling_examples() {
        let m2 = m_g2(&cyclic(2)).unwrap();
        assert_eq!(m2.order(), 4);
        assert!(is_associative(&m2));
        let ms3 = m_g2(&s3()).unwrap();
        assert_eq!(ms3.order(), 12);
        assert!(is_moufang(&ms3));
        assert!(!is_associative(&ms3));
        let m5 = m_g2(&cyclic(5)).unwrap();
        assert_eq!(m5.order(), 10);
        assert!(is_associative(&m5));
        assert_eq!(m_g2(&octo16()), Err(LoopError::NotAGroup));
        assert_eq!(ms3.name(7), "021·u");
    }

    #[test]
    fn orders() {
        let o = MoufangLoop::new(octo16()).unwrap();
        assert_eq!(o.element_order(0), Ok(1));
        assert_eq!(o.element_order(1), Ok(4));
        assert_eq!(o.element_order(8), Ok(2));
        let ms3 = MoufangLoop::new(m_g2(&s3()).unwrap()).unwrap();
        for g in 0..12 {
            assert_eq!(12 % ms3.element_order(g).unwrap(), 0);
        }
    }

    #[test]
    fn non_moufang_rejected() {
        // a loop of order 5 that is not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let t = LoopTable::new(5, 0, rows, None).unwrap();
        assert_eq!(validate_loop(&t), Ok(()));
        assert!(!is_moufang(&t));
        assert_eq!(element_order(&t, 1), Err(LoopError::NotMoufang));
    }

    #[test]
    fn reduce_constant_identity() {
        let l = MoufangLoop::new(cyclic(3)).unwrap();
        let s = PeriodicSequence::new(vec![], vec![0]).unwrap();
        let c = ramsey_reduce(&l, &s, 3).unwrap();
        assert_eq!((c.element, c.order), (0, 1));
        assert_eq!(c.blocks, vec![vec![0], vec![1], vec![2]]);
        assert!(c.verify(l.table(), &s));
    }

    #[test]
    fn reduce_e1_cycle() {
        let l = MoufangLoop::new(octo16()).unwrap();
        let s = PeriodicSequence::new(vec![3, 5], vec![1]).unwrap();
        let c = ramsey_reduce(&l, &s, 2).unwrap();
        assert_eq!((c.element, c.order), (1, 4));
        assert_eq!(c.blocks, vec![vec![2, 3, 4, 5], vec![6, 7, 8, 9]]);
        assert!(c.verify(l.table(), &s));
        // a tampered certificate fails
        let mut bad = c.clone();
        bad.blocks[0].pop();
        assert!(!bad.verify(l.table(), &s));
    }

    #[test]
    fn group_reduction_certificates() {
        let l = MG2Loop::recognize(&m_g2(&s3()).unwrap()).unwrap();
        let in_g = PeriodicSequence::new(vec![7], vec![2, 9]).unwrap();
        let r = mg2_reduce_to_group(&l, &in_g, 3).unwrap();
        assert_eq!(r, GroupReduction::Subsequence { element: 2, positions: vec![1, 3, 5] });
        assert!(r.verify(&l, &in_g));

        let in_gu = PeriodicSequence::new(vec![1], vec![6, 9, 11]).unwrap();
        let r = mg2_reduce_to_group(&l, &in_gu, 4).unwrap();
        assert!(matches!(r, GroupReduction::Pairing { .. }));
        assert!(r.verify(&l, &in_gu));
        assert!(r.terms().iter().all(|&x| x < 6));

        assert_eq!(MG2Loop::recognize(&octo16()), Err(LoopError::NotMG2Shaped));
        assert_eq!(MG2Loop::recognize(&cyclic(4)), Err(LoopError::NotMG2Shaped));
    }

    #[test]
    fn sequence_errors() {
        assert!(PeriodicSequence::new(vec![1], vec![]).is_err());
        let l = MoufangLoop::new(cyclic(3)).unwrap();
        let s = PeriodicSequence::new(vec![], vec![7]).unwrap();
        assert!(matches!(ramsey_reduce(&l, &s, 1), Err(LoopError::MalformedSequence(_))));
    }
}
