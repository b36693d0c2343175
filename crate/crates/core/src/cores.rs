//! Closed-form core classification of `G(n,k)` and explicit retractions.
//!
//! With `d = gcd(n,k)`, `g = n/d` and `a` the unique `0 < a < g` with
//! `a·k ≡ d (mod n)`, a non-bipartite `G(n,k)` is a core iff one of
//!
//! * `g` is even,
//! * `a + d` is even and `a >= d + 2`,
//! * `a + d` is odd and `a + d + 2 <= g`.
//!
//! Otherwise [`build_retraction`] folds the whole graph onto the inner cycle
//! through `v_0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gp::{build_gp, is_bipartite_gp, min_odd_cycle_witnesses, CycleWitness, GPParams};
use crate::graph::SimpleGraph;
use crate::hom::{verify_retraction, VertexMap};
use crate::symmetry::is_vertex_transitive;

/// Modular inverse of `x` modulo `m` (`gcd(x, m) = 1`, `m >= 2`) in `[0, m)`.
pub fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    let (mut old_r, mut r) = (x.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m))
}

/// The invariants `(d, a, g)` the classification is phrased in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreParams {
    pub d: usize,
    pub a: usize,
    pub g_inner: usize,
}

impl CoreParams {
    pub fn of(params: GPParams) -> Self {
        Self {
            d: params.d(),
            a: compute_a(params),
            g_inner: params.inner_len(),
        }
    }
}

/// The unique `0 < a < n/d` with `a·k ≡ d (mod n)`, i.e. the inverse of `k/d` modulo `n/d`.
pub fn compute_a(params: GPParams) -> usize {
    let d = params.d();
    let g = params.inner_len();
    let a = mod_inverse((params.k() / d) as i64, g as i64).expect("k/d is a unit mod n/d") as usize;
    debug_assert!(0 < a && a < g);
    debug_assert_eq!((a * params.k()) % params.n(), d % params.n());
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoreReason {
    /// `n/d` even.
    C1,
    /// `a + d` even and `a >= d + 2`.
    C2,
    /// `a + d` odd and `a + d + 2 <= n/d`.
    C3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotCoreCase {
    /// `a + d` even and `a <= d`.
    AEvenSmall,
    /// `a + d` odd and `a + d >= n/d`.
    AOddLarge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreStatus {
    Bipartite,
    Core(CoreReason),
    NotCore(NotCoreCase),
}

/// Classification result together with the invariants it was computed from.
///
/// Serializes as `{"status": "core"|"not_core"|"bipartite", "reason": "c1"|"c2"|"c3"|null, "d": …, "a": …}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoreVerdict {
    pub status: CoreStatus,
    pub d: usize,
    pub a: usize,
}

impl CoreVerdict {
    pub fn is_core(&self) -> bool {
        matches!(self.status, CoreStatus::Core(_))
    }

    pub fn is_not_core(&self) -> bool {
        matches!(self.status, CoreStatus::NotCore(_))
    }
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    status: String,
    reason: Option<String>,
    d: usize,
    a: usize,
}

impl Serialize for CoreVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (status, reason) = match self.status {
            CoreStatus::Bipartite => ("bipartite", None),
            CoreStatus::Core(r) => (
                "core",
                Some(match r {
                    CoreReason::C1 => "c1",
                    CoreReason::C2 => "c2",
                    CoreReason::C3 => "c3",
                }),
            ),
            CoreStatus::NotCore(_) => ("not_core", None),
        };
        VerdictJson {
            status: status.into(),
            reason: reason.map(Into::into),
            d: self.d,
            a: self.a,
        }
        .serialize(s)
    }
}

/// Closed-form core classification.
pub fn classify_core(params: GPParams) -> CoreVerdict {
    let CoreParams { d, a, g_inner: g } = CoreParams::of(params);
    let status = if is_bipartite_gp(params) {
        CoreStatus::Bipartite
    } else if g % 2 == 0 {
        CoreStatus::Core(CoreReason::C1)
    } else if (a + d) % 2 == 0 {
        if a >= d + 2 {
            CoreStatus::Core(CoreReason::C2)
        } else {
            CoreStatus::NotCore(NotCoreCase::AEvenSmall)
        }
    } else if a + d + 2 <= g {
        CoreStatus::Core(CoreReason::C3)
    } else {
        CoreStatus::NotCore(NotCoreCase::AOddLarge)
    };
    CoreVerdict { status, d, a }
}

/// Whether some minimum odd cycle of `G(n,k)` contains a spoke edge.
pub fn has_spoked_min_odd_cycle(params: GPParams) -> Result<bool> {
    Ok(min_odd_cycle_witnesses(params)?
        .iter()
        .any(|w| w.spoke_count >= 1))
}

/// Outer-rim rule of the fold onto the inner cycle through `v_0`, for step
/// `step` and witness `a <= d` with `a + d` even. Returns the inner index `l`
/// with `f(u_i) = v_l`.
fn fold_outer(n: usize, d: usize, a: usize, step: usize, i: usize) -> usize {
    let (q, r) = (i / d, i % d);
    let l = if r < a {
        q * d + (r + 1) * step
    } else if r % 2 == a % 2 {
        (q + 1) * d + step
    } else {
        (q + 1) * d
    };
    l % n
}

/// The explicit retraction of a non-core `G(n,k)` onto the inner cycle `(v_0, v_k, v_2k, …)`.
///
/// When `a + d` is odd the same formula is applied with step `k' = n - k`
/// (same edge set) and `a' = n/d - a`.
pub fn build_retraction(params: GPParams) -> Result<VertexMap> {
    let verdict = classify_core(params);
    let (n, d, g) = (params.n(), params.d(), params.inner_len());
    let (step, a) = match verdict.status {
        CoreStatus::NotCore(NotCoreCase::AEvenSmall) => (params.k(), verdict.a),
        CoreStatus::NotCore(NotCoreCase::AOddLarge) => {
            let step = n - params.k();
            let a_rev = g - verdict.a;
            if (a_rev * step) % n != d % n || a_rev == 0 || a_rev >= g {
                return Err(Error::Domain(format!(
                    "a' = {a_rev} fails a'·k' ≡ d for k' = {step}"
                )));
            }
            (step, a_rev)
        }
        _ => {
            return Err(Error::Domain(format!(
                "{params} is not a non-core; no retraction onto an inner cycle"
            )))
        }
    };
    debug_assert!(a <= d && (a + d) % 2 == 0);
    let mut images = vec![0; 2 * n];
    for i in 0..n {
        let l = fold_outer(n, d, a, step, i);
        images[i] = n + l;
        images[n + i] = n + (l + n - step) % n;
    }
    let f = VertexMap::new(images);
    let graph = build_gp(params);
    if !verify_retraction(&graph, &f, &retraction_target(params)) {
        return Err(Error::Domain(format!("fold of {params} failed verification")));
    }
    Ok(f)
}

/// Vertex ids of the inner cycle through `v_0`, sorted.
pub fn retraction_target(params: GPParams) -> Vec<usize> {
    (0..params.n())
        .step_by(params.d())
        .map(|i| params.n() + i)
        .collect()
}

/// Odd cycle of length `<= n/d` through both layers, realizing conditions C2 / C3.
///
/// C2: `(v_{ak}=v_d, v_{(a+1)k}, …, v_{gk}=v_0, u_0, u_1, …, u_d)`, length `g - a + d + 2`.
/// C3: `(v_0, v_k, …, v_{ak}=v_d, u_d, u_{d-1}, …, u_0)`, length `a + d + 2`.
pub fn explicit_spoked_cycle(params: GPParams) -> Result<Option<CycleWitness>> {
    let verdict = classify_core(params);
    let (n, k, d, g, a) = (params.n(), params.k(), params.d(), params.inner_len(), verdict.a);
    let inner = |j: usize| n + (j * k) % n;
    let vertices: Vec<usize> = match verdict.status {
        CoreStatus::Core(CoreReason::C2) => (a..=g).map(inner).chain(0..=d).collect(),
        CoreStatus::Core(CoreReason::C3) => (0..=a).map(inner).chain((0..=d).rev()).collect(),
        _ => return Ok(None),
    };
    CycleWitness::new(params, &build_gp(params), vertices).map(Some)
}

/// Graph of two `ell`-cycles `x_i`, `y_i` joined by `ell` disjoint paths of
/// length `m`. Vertex `z_{i,j}` (the `j`-th vertex on the path from `x_i`) has
/// id `j·ell + i`, so `m = 1` reproduces the layout of `G(ell, 1)`.
pub fn generalized_prism(ell: usize, m: usize) -> Result<SimpleGraph> {
    if ell < 3 || m == 0 {
        return Err(Error::Domain(format!(
            "generalized prism needs ell >= 3 and m >= 1 (got ell={ell}, m={m})"
        )));
    }
    let mut g = SimpleGraph::empty((m + 1) * ell);
    for i in 0..ell {
        g.add_edge(i, (i + 1) % ell)?;
        g.add_edge(m * ell + i, m * ell + (i + 1) % ell)?;
        for j in 0..m {
            g.add_edge(j * ell + i, (j + 1) * ell + i)?;
        }
    }
    Ok(g)
}

/// The non-injective endomorphism `z_{i,j} ↦ x_{(i+j) mod ell}` of [`generalized_prism`].
pub fn prism_endomorphism(ell: usize, m: usize) -> Result<VertexMap> {
    let g = generalized_prism(ell, m)?;
    let images = (0..g.order()).map(|id| (id % ell + id / ell) % ell).collect();
    let f = VertexMap::new(images);
    if !f.is_homomorphism(&g, &g) {
        return Err(Error::Domain("prism fold is not edge-preserving".into()));
    }
    Ok(f)
}

/// Endomorphism-transitive iff vertex-transitive or bipartite.
pub fn is_endomorphism_transitive(params: GPParams) -> bool {
    is_vertex_transitive(params) || is_bipartite_gp(params)
}
