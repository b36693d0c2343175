use crate::error::{Error, Result};
use crate::gp::GPParams;

use super::table::OpTable;

/// `Z_n` under addition.
pub fn cyclic_group(n: usize) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::Domain("cyclic group of order 0".into()));
    }
    OpTable::from_fn(n, |a, b| (a + b) % n)
}

/// Dihedral group of order `2n`: `r^i` has id `i`, `s r^i` has id `n + i`.
pub fn dihedral_group(n: usize) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::Domain("dihedral group with n = 0".into()));
    }
    let t = OpTable::from_fn(2 * n, |a, b| {
        let (fa, i) = (a >= n, a % n);
        let (fb, j) = (b >= n, b % n);
        match (fa, fb) {
            (false, false) => (i + j) % n,
            (false, true) => n + (j + n - i) % n,
            (true, false) => n + (i + j) % n,
            (true, true) => (j + n - i) % n,
        }
    })?;
    let labels = (0..2 * n)
        .map(|x| if x < n { format!("r{x}") } else { format!("sr{}", x - n) })
        .collect();
    t.with_labels(labels)
}

/// Every product equals `zero`.
pub fn null_semigroup(size: usize, zero: usize) -> Result<OpTable> {
    if zero >= size {
        return Err(Error::Domain(format!("zero {zero} outside 0..{size}")));
    }
    OpTable::from_fn(size, |_, _| zero)
}

/// `ℓ_i ℓ_j = ℓ_i`.
pub fn left_zero_band(size: usize) -> Result<OpTable> {
    if size == 0 {
        return Err(Error::Domain("empty band".into()));
    }
    let t = OpTable::from_fn(size, |a, _| a)?;
    let labels = (0..size).map(|i| format!("l{i}")).collect();
    t.with_labels(labels)
}

/// Componentwise product; `(x, y)` has id `x·|Y| + y`.
pub fn direct_product(x: &OpTable, y: &OpTable) -> Result<OpTable> {
    let m = y.order();
    let t = OpTable::from_fn(x.order() * m, |a, b| {
        x.mul(a / m, b / m) * m + y.mul(a % m, b % m)
    })?;
    t.with_labels(pair_labels(x, y))
}

fn pair_labels(x: &OpTable, y: &OpTable) -> Vec<String> {
    (0..x.order() * y.order())
        .map(|id| format!("({},{})", x.label(id / y.order()), y.label(id % y.order())))
        .collect()
}

/// The group `⟨α, γ | αⁿ = γ² = 1, γαγ = α^k⟩` of order `2n` on pairs `(i, ε)`,
/// with id `2i + ε`. So `α` is id 2 and `γ` is id 1.
pub fn presented_group_alpha_gamma(n: usize, k: usize) -> Result<OpTable> {
    if n < 2 || (k * k) % n != 1 {
        return Err(Error::Domain(format!("need k² ≡ 1 (mod n), got n={n}, k={k}")));
    }
    let t = OpTable::from_fn(2 * n, |a, b| {
        let (i, e) = (a / 2, a % 2);
        let (j, f) = (b / 2, b % 2);
        if e == 0 {
            2 * ((i + j) % n) + f
        } else {
            2 * ((i + k * j) % n) + (1 + f) % 2
        }
    })?;
    let labels = (0..2 * n)
        .map(|x| if x % 2 == 0 { format!("a{}", x / 2) } else { format!("a{}g", x / 2) })
        .collect();
    t.with_labels(labels)
}

pub const ALPHA: usize = 2;
pub const GAMMA: usize = 1;

/// Product on `R × R'` where `ideal` is a two-sided ideal `T` of `R` and `S = R \ T`:
/// `(s,i)(r,j) = (sr, ij)` and `(t,i)(r,j) = (tr, i)`. Pair `(x, y)` has id `x·|R'| + y`.
pub fn combinator_null_extension(r: &OpTable, ideal: &[usize], rp: &OpTable) -> Result<OpTable> {
    let mut in_t = vec![false; r.order()];
    for &t in ideal {
        if t >= r.order() {
            return Err(Error::Precondition(format!("ideal element {t} outside table")));
        }
        in_t[t] = true;
    }
    for a in 0..r.order() {
        for b in 0..r.order() {
            if (in_t[a] || in_t[b]) && !in_t[r.mul(a, b)] {
                return Err(Error::Precondition(format!(
                    "{a}·{b} = {} leaves the ideal",
                    r.mul(a, b)
                )));
            }
        }
    }
    if !r.is_associative() || !rp.is_associative() {
        return Err(Error::Precondition("both factors must be associative".into()));
    }
    let m = rp.order();
    let t = OpTable::from_fn(r.order() * m, |a, b| {
        let (x, i) = (a / m, a % m);
        let (y, j) = (b / m, b % m);
        let second = if in_t[x] { i } else { rp.mul(i, j) };
        r.mul(x, y) * m + second
    })?
    .with_labels(pair_labels(r, rp))?;
    if !t.is_associative() {
        return Err(Error::Domain("null extension is not associative".into()));
    }
    Ok(t)
}

/// `S ∪ (T × L_R)` with `s(t,ℓ_r) = (φ(s)t, ℓ_{ψ(s)r})`, `(t,ℓ_r)s = (tφ(s), ℓ_r)`,
/// `(t,ℓ_r)(t',ℓ_r') = (tt', ℓ_r)`. `S` keeps ids `0..|S|`; `(t,ℓ_r)` has id `|S| + t·|R| + r`.
pub fn combinator_left_band_extension(
    s: &OpTable,
    t: &OpTable,
    r: &OpTable,
    phi: &[usize],
    psi: &[usize],
) -> Result<OpTable> {
    if !s.is_homomorphism_to(t, phi) {
        return Err(Error::Precondition("φ is not a homomorphism S → T".into()));
    }
    if !s.is_homomorphism_to(r, psi) {
        return Err(Error::Precondition("ψ is not a homomorphism S → R".into()));
    }
    let (ns, nr) = (s.order(), r.order());
    let pair = |tt: usize, rr: usize| ns + tt * nr + rr;
    let table = OpTable::from_fn(ns + t.order() * nr, |a, b| match (a < ns, b < ns) {
        (true, true) => s.mul(a, b),
        (true, false) => {
            let (tt, rr) = ((b - ns) / nr, (b - ns) % nr);
            pair(t.mul(phi[a], tt), r.mul(psi[a], rr))
        }
        (false, true) => {
            let (tt, rr) = ((a - ns) / nr, (a - ns) % nr);
            pair(t.mul(tt, phi[b]), rr)
        }
        (false, false) => {
            let (ta, ra) = ((a - ns) / nr, (a - ns) % nr);
            pair(t.mul(ta, (b - ns) / nr), ra)
        }
    })?;
    let labels = (0..table.order())
        .map(|x| {
            if x < ns {
                s.label(x).to_string()
            } else {
                format!("({},l{})", t.label((x - ns) / nr), r.label((x - ns) % nr))
            }
        })
        .collect();
    let table = table.with_labels(labels)?;
    if !table.is_associative() {
        return Err(Error::Domain("left-band extension is not associative".into()));
    }
    Ok(table)
}

/// Connection sets for the loopless monoid family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cay1Variant {
    /// `{1, (1,ℓ_0)}`
    Standard,
    /// `{1, (-1,ℓ_0)}`
    Reversed,
    /// `{1, (0,ℓ_0)}`
    Loop,
}

/// `Z_n ∪ (Z_{n/d} × L_d)` built from the reductions `Z_n → Z_{n/d}` and `Z_n → Z_d`.
///
/// Requires `k² ≡ ±k (mod n)`; under that condition the Cayley digraph with
/// [`cay1_connection`] has underlying graph `G(n,k)`.
pub fn cay1_monoid(params: GPParams) -> Result<OpTable> {
    let (n, k) = (params.n(), params.k());
    let sq = (k * k) % n;
    if sq != k && sq != n - k {
        return Err(Error::Domain(format!("need k² ≡ ±k (mod n), got {params}")));
    }
    let (g, d) = (params.inner_len(), params.d());
    let phi: Vec<usize> = (0..n).map(|x| x % g).collect();
    let psi: Vec<usize> = (0..n).map(|x| x % d).collect();
    combinator_left_band_extension(&cyclic_group(n)?, &cyclic_group(g)?, &cyclic_group(d)?, &phi, &psi)
}

/// Element ids of the connection set for `variant` in [`cay1_monoid`].
pub fn cay1_connection(params: GPParams, variant: Cay1Variant) -> Vec<usize> {
    let (n, d, g) = (params.n(), params.d(), params.inner_len());
    let t = match variant {
        Cay1Variant::Standard => 1 % g,
        Cay1Variant::Reversed => g - 1,
        Cay1Variant::Loop => 0,
    };
    vec![1, n + t * d]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_is_group() {
        for n in 1..8 {
            let t = dihedral_group(n).unwrap();
            assert!(t.is_group(), "D{n}");
        }
        assert_eq!(dihedral_group(3).unwrap().element_order(1).unwrap(), 3);
    }

    #[test]
    fn band_and_null() {
        let b = left_zero_band(3).unwrap();
        assert_eq!(b.mul(1, 2), 1);
        let z = null_semigroup(4, 3).unwrap();
        assert_eq!(z.mul(1, 2), 3);
        assert!(b.is_associative() && z.is_associative());
    }

    #[test]
    fn presented_group() {
        let h = presented_group_alpha_gamma(8, 3).unwrap();
        assert_eq!(h.order(), 16);
        assert!(h.is_group());
        let gag = h.mul(h.mul(GAMMA, ALPHA), GAMMA);
        assert_eq!(gag, h.pow(ALPHA, 3));
        assert!(presented_group_alpha_gamma(7, 2).is_err());
    }

    #[test]
    fn product_ids_are_row_major() {
        let p = direct_product(&cyclic_group(2).unwrap(), &cyclic_group(3).unwrap()).unwrap();
        assert_eq!(p.mul(1 * 3 + 2, 1 * 3 + 2), 1);
        assert_eq!(p.label(5), "(1,2)");
    }

    #[test]
    fn null_extension_with_trivial_factor_copies() {
        let r = OpTable::new(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let one = cyclic_group(1).unwrap();
        let e = combinator_null_extension(&r, &[1], &one).unwrap();
        assert_eq!(e.rows(), r.rows());
    }

    #[test]
    fn null_extension_checks_ideal() {
        let z2 = cyclic_group(2).unwrap();
        assert!(matches!(
            combinator_null_extension(&z2, &[1], &z2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn left_band_rejects_non_homomorphism() {
        let z4 = cyclic_group(4).unwrap();
        let z3 = cyclic_group(3).unwrap();
        let phi: Vec<usize> = (0..4).map(|x| x % 3).collect();
        let ok = vec![0; 4];
        assert!(combinator_left_band_extension(&z4, &z3, &z3, &phi, &ok).is_err());
        assert!(combinator_left_band_extension(&z4, &z3, &z3, &ok, &ok).is_ok());
    }

    #[test]
    fn cay1_10_4() {
        let params = GPParams::new(10, 4).unwrap();
        let m = cay1_monoid(params).unwrap();
        assert_eq!(m.order(), 20);
        let r = m.report();
        assert_eq!(r.identity, Some(0));
        assert!(r.is_monoid && r.is_orthogroup && !r.is_group);
        assert_eq!(m.invertibles(), (0..10).collect::<Vec<_>>());
        assert_eq!(cay1_connection(params, Cay1Variant::Standard), vec![1, 12]);
        assert_eq!(cay1_connection(params, Cay1Variant::Reversed), vec![1, 18]);
        assert_eq!(cay1_connection(params, Cay1Variant::Loop), vec![1, 10]);
        assert!(cay1_monoid(GPParams::new(7, 2).unwrap()).is_err());
    }
}
