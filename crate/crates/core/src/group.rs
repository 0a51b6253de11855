//! Finite groups given by Cayley tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group on `0..order`; `table[a][b]` is the product `ab`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidGroup(
                "table is not square over 0..order".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup("not associative".into()));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            table,
            identity,
            inverse,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        Self::new(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
        .expect("cyclic group")
    }

    pub fn klein() -> Self {
        Self::cyclic(2).product(&Self::cyclic(2))
    }

    /// Permutations of three letters, composed right to left.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::new(table).expect("symmetric group")
    }

    /// Direct product; element `(a, b)` has index `a * other.order() + b`.
    pub fn product(&self, other: &Self) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::new(table).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// A conventional name when the isomorphism type is determined by order and element orders.
    pub fn name(&self) -> Option<String> {
        let n = self.order();
        if n == 1 {
            return Some("trivial".into());
        }
        if self.order_profile().last() == Some(&n) {
            return Some(format!("Z{n}"));
        }
        match (n, self.is_abelian()) {
            (4, _) => Some("Z2xZ2".into()),
            (6, false) => Some("S3".into()),
            _ => None,
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "trivial" | "e" | "Z1" => Ok(Self::trivial()),
            "Z2xZ2" | "V4" | "klein" => Ok(Self::klein()),
            "S3" => Ok(Self::symmetric3()),
            "Zinf" | "Z" => Err(Error::InfiniteGroupUnsupported),
            _ => name
                .strip_prefix('Z')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&n| n > 0)
                .map(Self::cyclic)
                .ok_or_else(|| Error::InvalidGroup(format!("unknown group name `{name}`"))),
        }
    }

    pub fn to_spec(&self) -> GroupSpec {
        match self.name() {
            Some(n) => GroupSpec::Named(n),
            None => GroupSpec::Table {
                order: self.order(),
                table: self.table.clone(),
            },
        }
    }
}

/// JSON form of a group: a known name or an explicit Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named(String),
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named(n) => FiniteGroup::from_name(n),
            GroupSpec::Table { order, table } => {
                if table.len() != *order {
                    return Err(Error::InvalidGroup("order does not match table".into()));
                }
                FiniteGroup::new(table.clone())
            }
        }
    }
}
