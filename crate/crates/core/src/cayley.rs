//! Right Cayley digraphs of operation tables, their underlying graphs, and the
//! group/monoid-graph characterizations of generalized Petersen graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    cay1_connection, cay1_monoid, presented_group_alpha_gamma, BuiltinTable, Cay1Variant, OpTable,
    ALPHA, GAMMA,
};
use crate::cores::classify_core;
use crate::error::{Error, Result};
use crate::gp::{build_gp, gcd, GPParams};
use crate::graph::SimpleGraph;
use crate::hom::{find_isomorphism, SearchBudget, VertexMap};

/// Largest vertex count accepted by [`is_isomorphic`].
pub const MAX_ISO_VERTICES: usize = 128;

const ARC_COLORS: [&str; 6] = ["red", "blue", "darkgreen", "orange", "purple", "brown"];

/// `Cay(T, C)`: one arc `s → s·c` of colour `c` per element `s` and connection element `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyDigraph {
    connection: Vec<usize>,
    targets: Vec<usize>,
    labels: Vec<String>,
}

/// A single coloured arc; `color` indexes the connection list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

/// Loop and digon counts of a Cayley digraph.
///
/// `parallel` counts arcs that repeat an earlier arc with the same tail and
/// head; `antiparallel` counts unordered pairs `{s, t}` joined in both directions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcCensus {
    pub arcs: usize,
    pub loops: usize,
    pub parallel: usize,
    pub antiparallel: usize,
}

pub fn build_cayley(table: &OpTable, connection: &[usize]) -> Result<CayleyDigraph> {
    if let Some(&c) = connection.iter().find(|&&c| c >= table.order()) {
        return Err(Error::Domain(format!(
            "connection element {c} outside 0..{}",
            table.order()
        )));
    }
    let targets = (0..table.order())
        .flat_map(|s| connection.iter().map(move |&c| table.mul(s, c)))
        .collect();
    Ok(CayleyDigraph {
        connection: connection.to_vec(),
        targets,
        labels: table.labels().to_vec(),
    })
}

impl CayleyDigraph {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn connection(&self) -> &[usize] {
        &self.connection
    }

    /// Head of the arc leaving `s` with colour index `color`.
    pub fn target(&self, s: usize, color: usize) -> usize {
        self.targets[s * self.connection.len() + color]
    }

    pub fn arcs(&self) -> Vec<Arc> {
        let width = self.connection.len();
        (0..self.order())
            .flat_map(|from| (0..width).map(move |color| (from, color)))
            .map(|(from, color)| Arc { from, to: self.target(from, color), color })
            .collect()
    }

    pub fn loops(&self) -> Vec<Arc> {
        self.arcs().into_iter().filter(|a| a.from == a.to).collect()
    }

    pub fn census(&self) -> ArcCensus {
        let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut census = ArcCensus::default();
        for a in self.arcs() {
            census.arcs += 1;
            if a.from == a.to {
                census.loops += 1;
            } else {
                *multiplicity.entry((a.from, a.to)).or_default() += 1;
            }
        }
        for (&(s, t), &m) in &multiplicity {
            census.parallel += m - 1;
            if s < t && multiplicity.contains_key(&(t, s)) {
                census.antiparallel += 1;
            }
        }
        census
    }

    /// Loops suppressed, orientation forgotten, parallel edges merged.
    pub fn underlying_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::with_labels(self.labels.clone());
        for a in self.arcs() {
            if a.from != a.to {
                g.add_edge(a.from, a.to).expect("endpoints in range");
            }
        }
        g
    }

    /// Directed DOT with one colour per connection element; loops are kept.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        for label in &self.labels {
            let _ = writeln!(out, "  \"{label}\";");
        }
        for a in self.arcs() {
            let c = self.connection[a.color];
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [color={}, label=\"{}\"];",
                self.labels[a.from],
                self.labels[a.to],
                ARC_COLORS[a.color % ARC_COLORS.len()],
                self.labels[c]
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Elements reachable as products of connection elements, plus the identity when there is one.
pub fn generated_closure(table: &OpTable, connection: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = connection.iter().copied().collect();
    let mut frontier: Vec<usize> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for &c in connection {
            let y = table.mul(x, c);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    if let Some(e) = table.find_identity() {
        set.insert(e);
    }
    set
}

pub fn generates(table: &OpTable, connection: &[usize]) -> bool {
    generated_closure(table, connection).len() == table.order()
}

/// An isomorphism `g → h`, or `None`. Refuses graphs above [`MAX_ISO_VERTICES`].
pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph, budget: SearchBudget) -> Result<Option<VertexMap>> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    if g.order() > MAX_ISO_VERTICES {
        return Err(Error::BoundExceeded {
            what: "vertex count for isomorphism testing",
            size: g.order(),
            bound: MAX_ISO_VERTICES,
        });
    }
    find_isomorphism(g, h, budget)
}

fn square(params: GPParams) -> usize {
    (params.k() * params.k()) % params.n()
}

/// `k² ≡ 1 (mod n)`.
pub fn is_group_graph(params: GPParams) -> bool {
    square(params) == 1
}

/// `(n,k) = (5,2)`, `k² ≡ 1` or `k² ≡ ±k (mod n)`.
pub fn is_2gen_monoid_graph(params: GPParams) -> bool {
    let (n, k) = (params.n(), params.k());
    let sq = square(params);
    (n, k) == (5, 2) || sq == 1 || sq == k || sq == n - k
}

/// Whether `G(n,k)` is a monoid graph with two connection elements, decided only when
/// `gcd(n,k) = 1` or `n/gcd(n,k)` is odd.
pub fn is_2conn_monoid_graph_restricted(params: GPParams) -> Option<bool> {
    let (n, k) = (params.n(), params.k());
    if gcd(n, k) == 1 {
        Some((n, k) == (5, 2) || (n, k) == (10, 3) || square(params) == 1)
    } else if params.inner_len() % 2 == 1 {
        Some(is_2gen_monoid_graph(params))
    } else {
        None
    }
}

/// Every semigroup Cayley representation of `G(n,k)` must have loops: it is a core
/// without 4-cycles and not a group graph.
pub fn loopless_semigroup_obstruction(params: GPParams) -> bool {
    classify_core(params).is_core() && params.n() != 4 * params.k() && !is_group_graph(params)
}

/// A table with a connection set, named by how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub table: OpTable,
    pub connection: Vec<usize>,
}

/// Named table constructions accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Builtin(BuiltinTable),
    Cay1(Cay1Variant),
    Group,
}

impl Construction {
    pub const NAMES: [&'static str; 10] = [
        "petersen-s",
        "petersen-m",
        "petersen-sp",
        "petersen-mp",
        "dodecahedron",
        "desargues",
        "cay1",
        "cay1-rev",
        "cay1-loop",
        "group",
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        if let Some(b) = BuiltinTable::from_name(name) {
            return Ok(Self::Builtin(b));
        }
        match name {
            "cay1" => Ok(Self::Cay1(Cay1Variant::Standard)),
            "cay1-rev" => Ok(Self::Cay1(Cay1Variant::Reversed)),
            "cay1-loop" => Ok(Self::Cay1(Cay1Variant::Loop)),
            "group" => Ok(Self::Group),
            _ => Err(Error::Domain(format!(
                "unknown construction '{name}'; valid names: {}",
                Self::NAMES.join(", ")
            ))),
        }
    }

    /// Builds the table; `params` is required for the parametrised families and
    /// must match the target of the fixed tables when given.
    pub fn build(self, params: Option<GPParams>) -> Result<Representation> {
        let need = || params.ok_or_else(|| Error::Domain("this construction needs n and k".into()));
        match self {
            Self::Builtin(b) => {
                if let Some(p) = params {
                    if (p.n(), p.k()) != b.target() {
                        return Err(Error::Domain(format!(
                            "{} realizes G{:?}, not {p}",
                            b.name(),
                            b.target()
                        )));
                    }
                }
                Ok(Representation { name: b.name().into(), table: b.table(), connection: b.connection() })
            }
            Self::Cay1(v) => {
                let p = need()?;
                let name = match v {
                    Cay1Variant::Standard => "cay1",
                    Cay1Variant::Reversed => "cay1-rev",
                    Cay1Variant::Loop => "cay1-loop",
                };
                Ok(Representation {
                    name: name.into(),
                    table: cay1_monoid(p)?,
                    connection: cay1_connection(p, v),
                })
            }
            Self::Group => {
                let p = need()?;
                Ok(Representation {
                    name: "group".into(),
                    table: presented_group_alpha_gamma(p.n(), p.k())?,
                    connection: vec![ALPHA, GAMMA],
                })
            }
        }
    }

    /// Target graph parameters when fixed by the construction.
    pub fn fixed_target(self) -> Option<(usize, usize)> {
        match self {
            Self::Builtin(b) => Some(b.target()),
            _ => None,
        }
    }
}

/// The representation behind each branch of [`is_2gen_monoid_graph`], or `None` when it is false.
pub fn two_gen_representation(params: GPParams) -> Result<Option<Representation>> {
    if !is_2gen_monoid_graph(params) {
        return Ok(None);
    }
    let c = if (params.n(), params.k()) == (5, 2) {
        Construction::Builtin(BuiltinTable::PetersenM)
    } else if is_group_graph(params) {
        Construction::Group
    } else {
        Construction::Cay1(Cay1Variant::Standard)
    };
    c.build(Some(params)).map(Some)
}

/// Outcome of checking one table and connection set against `G(n,k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub associative: bool,
    pub identity: Option<usize>,
    pub generates: bool,
    pub loopless: bool,
    pub census: ArcCensus,
    pub iso_target: Option<(usize, usize)>,
    pub iso_witness: Option<VertexMap>,
}

impl RepresentationReport {
    /// Associative and isomorphic to the target.
    pub fn realizes_target(&self) -> bool {
        self.associative && self.iso_witness.is_some()
    }
}

pub fn verify_representation(
    table: &OpTable,
    connection: &[usize],
    params: GPParams,
    budget: SearchBudget,
) -> Result<RepresentationReport> {
    let digraph = build_cayley(table, connection)?;
    let census = digraph.census();
    let target = build_gp(params);
    let underlying = digraph.underlying_graph();
    let iso_witness = is_isomorphic(&underlying, &target, budget)?;
    if let Some(f) = &iso_witness {
        if !f.is_isomorphism(&underlying, &target) {
            return Err(Error::Domain("isomorphism witness failed verification".into()));
        }
    }
    Ok(RepresentationReport {
        associative: table.is_associative_with_generators(connection),
        identity: table.find_identity(),
        generates: generates(table, connection),
        loopless: census.loops == 0,
        census,
        iso_target: Some((params.n(), params.k())),
        iso_witness,
    })
}

/// An invertible connection element of order above 2 whose powers trace a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorWitness {
    pub element: usize,
    pub order: usize,
    pub cycle: Vec<usize>,
}

pub fn invertible_generator_witness(table: &OpTable, connection: &[usize]) -> Result<Option<GeneratorWitness>> {
    let Some(e) = table.find_identity() else {
        return Ok(None);
    };
    let underlying = build_cayley(table, connection)?.underlying_graph();
    let invertible: BTreeSet<usize> = table.invertibles().into_iter().collect();
    for &g in connection {
        if !invertible.contains(&g) {
            continue;
        }
        let order = table.element_order(g)?;
        if order <= 2 {
            continue;
        }
        let mut cycle = vec![e];
        for _ in 1..order {
            cycle.push(table.mul(*cycle.last().unwrap(), g));
        }
        let closed = (0..order).all(|i| underlying.has_edge(cycle[i], cycle[(i + 1) % order]));
        if closed {
            return Ok(Some(GeneratorWitness { element: g, order, cycle }));
        }
    }
    Ok(None)
}
