use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite binary operation on `0..order`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    order: usize,
    cells: Vec<usize>,
    labels: Vec<String>,
}

/// On-disk form: `{"order": m, "table": [[…],…], "labels": […], "connection": […]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<Vec<usize>>,
}

impl TableJson {
    /// Pretty JSON with each table row on its own line.
    pub fn to_pretty_string(&self) -> String {
        let rows: Vec<String> = self.table.iter().map(|r| format!("    {}", compact(r))).collect();
        let mut out = format!("{{\n  \"order\": {},\n  \"table\": [\n{}\n  ]", self.order, rows.join(",\n"));
        if !self.labels.is_empty() {
            out += &format!(",\n  \"labels\": {}", compact(&self.labels));
        }
        if let Some(c) = &self.connection {
            out += &format!(",\n  \"connection\": {}", compact(c));
        }
        out + "\n}\n"
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

impl OpTable {
    /// Builds a table from rows, checking shape and closure.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {row} has {} entries, expected {order}",
                    r.len()
                )));
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(Error::NotClosed { row, col, value, order });
                }
            }
            cells.extend(r);
        }
        Ok(Self {
            order,
            cells,
            labels: (0..order).map(|x| x.to_string()).collect(),
        })
    }

    /// Builds a table of the given order from a product function.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(
            (0..order)
                .map(|a| (0..order).map(|b| f(a, b)).collect())
                .collect(),
        )
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::MalformedTable(format!(
                "{} labels for order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn to_json(&self, connection: Option<&[usize]>) -> TableJson {
        TableJson {
            order: self.order,
            table: self.rows(),
            labels: self.labels.clone(),
            connection: connection.map(<[usize]>::to_vec),
        }
    }

    /// `x^e` for `e ≥ 1`.
    pub fn pow(&self, x: usize, e: usize) -> usize {
        (1..e).fold(x, |acc, _| self.mul(acc, x))
    }

    /// `(ab)c = a(bc)` for every triple; the scan is split over the first factor.
    pub fn is_associative(&self) -> bool {
        let m = self.order;
        (0..m).into_par_iter().all(|a| {
            (0..m).all(|b| {
                let ab = self.mul(a, b);
                (0..m).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Light's test: `(xg)y = x(gy)` for each `g` in `generators`.
    ///
    /// Elements passing the test form a closed subset, so passing on a set
    /// that generates the table implies associativity. When `generators`
    /// does not generate, this falls back to the full scan.
    pub fn is_associative_with_generators(&self, generators: &[usize]) -> bool {
        if generators.iter().any(|&g| g >= self.order)
            || self.subsemigroup_closure(generators).len() != self.order
        {
            return self.is_associative();
        }
        let m = self.order;
        generators.iter().all(|&g| {
            (0..m).all(|x| {
                let xg = self.mul(x, g);
                (0..m).all(|y| self.mul(xg, y) == self.mul(x, self.mul(g, y)))
            })
        })
    }

    /// The two-sided identity, if any.
    pub fn find_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Elements with a two-sided inverse; empty when there is no identity.
    pub fn invertibles(&self) -> Vec<usize> {
        let Some(e) = self.find_identity() else {
            return Vec::new();
        };
        (0..self.order)
            .filter(|&g| (0..self.order).any(|h| self.mul(g, h) == e && self.mul(h, g) == e))
            .collect()
    }

    /// Least `p ≥ 1` with `g^p = e`.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        let e = self
            .find_identity()
            .ok_or_else(|| Error::Domain("element order needs an identity".into()))?;
        if g >= self.order {
            return Err(Error::Domain(format!("element {g} outside 0..{}", self.order)));
        }
        let mut x = g;
        for p in 1..=self.order {
            if x == e {
                return Ok(p);
            }
            x = self.mul(x, g);
        }
        Err(Error::Domain(format!("element {g} is not invertible")))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn idempotents_closed(&self) -> bool {
        let idem = self.idempotents();
        idem.iter()
            .all(|&a| idem.iter().all(|&b| self.mul(a, b) == self.mul(self.mul(a, b), self.mul(a, b))))
    }

    /// Every `a` has some `x` with `axa = a`, `xax = x`, `ax = xa`.
    pub fn is_completely_regular(&self) -> bool {
        (0..self.order).all(|a| {
            (0..self.order).any(|x| {
                let ax = self.mul(a, x);
                ax == self.mul(x, a) && self.mul(ax, a) == a && self.mul(self.mul(x, a), x) == x
            })
        })
    }

    pub fn is_orthogroup(&self) -> bool {
        self.is_associative() && self.is_completely_regular() && self.idempotents_closed()
    }

    pub fn is_group(&self) -> bool {
        self.is_associative() && self.invertibles().len() == self.order
    }

    /// Smallest subset containing `gens` and closed under the operation.
    pub fn subsemigroup_closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = gens.iter().copied().filter(|&g| g < self.order).collect();
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            let current: Vec<usize> = set.iter().copied().collect();
            for y in current {
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if set.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        set
    }

    /// True iff `map` is a homomorphism from `self` to `target`.
    pub fn is_homomorphism_to(&self, target: &OpTable, map: &[usize]) -> bool {
        map.len() == self.order
            && map.iter().all(|&y| y < target.order)
            && (0..self.order).all(|a| {
                (0..self.order).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    pub fn report(&self) -> AlgebraReport {
        let associative = self.is_associative();
        let identity = self.find_identity();
        let is_monoid = associative && identity.is_some();
        let idempotents = self.idempotents();
        let idempotents_closed = self.idempotents_closed();
        let completely_regular = self.is_completely_regular();
        AlgebraReport {
            associative,
            identity,
            is_group: is_monoid && self.invertibles().len() == self.order,
            is_monoid,
            idempotents,
            idempotents_closed,
            completely_regular,
            is_orthogroup: associative && completely_regular && idempotents_closed,
        }
    }
}

impl TryFrom<&TableJson> for OpTable {
    type Error = Error;

    fn try_from(json: &TableJson) -> Result<Self> {
        if json.table.len() != json.order {
            return Err(Error::MalformedTable(format!(
                "order is {} but table has {} rows",
                json.order,
                json.table.len()
            )));
        }
        let t = OpTable::new(json.table.clone())?;
        if json.labels.is_empty() {
            Ok(t)
        } else {
            t.with_labels(json.labels.clone())
        }
    }
}

/// Structural summary of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub associative: bool,
    pub identity: Option<usize>,
    pub is_group: bool,
    pub is_monoid: bool,
    pub idempotents: Vec<usize>,
    pub idempotents_closed: bool,
    pub completely_regular: bool,
    pub is_orthogroup: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> OpTable {
        OpTable::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn rejects_open_and_ragged_tables() {
        assert!(matches!(OpTable::new(vec![vec![0, 2], vec![0, 0]]), Err(Error::NotClosed { .. })));
        assert!(matches!(OpTable::new(vec![vec![0], vec![0, 0]]), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn non_associative_order_two() {
        let t = OpTable::new(vec![vec![1, 0], vec![0, 0]]).unwrap();
        assert!(!t.is_associative());
        assert!(!t.is_associative_with_generators(&[0]));
    }

    #[test]
    fn cyclic_group_report() {
        let r = z(6).report();
        assert!(r.associative && r.is_group && r.is_orthogroup);
        assert_eq!(r.identity, Some(0));
        assert_eq!(z(6).element_order(2).unwrap(), 3);
        assert!(z(6).is_associative_with_generators(&[1]));
    }

    #[test]
    fn left_identity_is_not_identity() {
        // right-zero band: every element is a left identity
        let t = OpTable::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(t.is_associative());
        assert_eq!(t.find_identity(), None);
        assert!(t.element_order(1).is_err());
    }

    #[test]
    fn non_invertible_order_is_error() {
        let t = OpTable::new(vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(t.find_identity(), Some(0));
        assert!(t.element_order(1).is_err());
        assert_eq!(t.invertibles(), vec![0]);
    }

    #[test]
    fn pretty_json_parses_back() {
        let j = z(3).to_json(Some(&[1]));
        let text = j.to_pretty_string();
        assert!(text.contains("\n    [1,2,0],\n"));
        assert_eq!(serde_json::from_str::<TableJson>(&text).unwrap(), j);
    }

    #[test]
    fn json_round_trip() {
        let t = z(3);
        let text = serde_json::to_string(&t.to_json(Some(&[1]))).unwrap();
        let back: TableJson = serde_json::from_str(&text).unwrap();
        assert_eq!(OpTable::try_from(&back).unwrap(), t);
        assert_eq!(back.connection, Some(vec![1]));
    }

    #[test]
    fn closure_and_homomorphism() {
        assert_eq!(z(6).subsemigroup_closure(&[2]).len(), 3);
        let to_z2: Vec<usize> = (0..6).map(|x| x % 2).collect();
        assert!(z(6).is_homomorphism_to(&z(2), &to_z2));
        assert!(!z(6).is_homomorphism_to(&z(2), &[0, 1, 0, 1, 1, 1]));
    }
}
