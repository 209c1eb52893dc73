//! Ordered bases `B_alpha(v_1, ..., v_m)`, alpha-splitting subspaces and
//! pointed splitting subspaces of the top field of a tower.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::exec;
use crate::error::{Error, Result};
use crate::gf::{linear, poly, Elem, FieldTower, GfPoly};
use crate::linalg::{char_poly, matrix_of_mult_in_basis, recognize_block_companion};
use crate::numtheory;

/// Exhaustive limit for the closure and pointed-count sweeps.
pub const SWEEP_LIMIT: u64 = 1 << 22;

/// Coordinates and splitting tests for a fixed `alpha` in the top field.
pub struct SplitContext<'a> {
    tower: &'a FieldTower,
    alpha: Elem,
    dim: usize,
    m: usize,
    n: usize,
    table: Vec<Elem>,
}

impl<'a> SplitContext<'a> {
    /// `alpha` must have degree `mn` over the base field.
    pub fn new(tower: &'a FieldTower, alpha: Elem) -> Result<Self> {
        let dim = tower.dim();
        if alpha >= tower.top().order() {
            return Err(Error::Parse(format!("{alpha} is not an element of {}", tower.top().tag())));
        }
        let degree = tower.degree_over_base(alpha);
        if degree != dim {
            return Err(Error::NotGenerator { degree, needed: dim });
        }
        let order = tower.top().order() as usize;
        let mut table = vec![0; order * dim];
        for (x, chunk) in table.chunks_mut(dim).enumerate() {
            tower.top_basis().coords_into(x as Elem, chunk);
        }
        Ok(SplitContext { tower, alpha, dim, m: tower.m() as usize, n: tower.n() as usize, table })
    }

    pub fn tower(&self) -> &FieldTower {
        self.tower
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn top_order(&self) -> u64 {
        self.tower.top().order() as u64
    }

    pub fn coords(&self, x: Elem) -> &[Elem] {
        &self.table[x as usize * self.dim..(x as usize + 1) * self.dim]
    }

    fn layered_rows(&self, vs: &[Elem]) -> Vec<Elem> {
        let top = self.tower.top();
        let mut rows = Vec::with_capacity(self.n * vs.len() * self.dim);
        let mut layer = vs.to_vec();
        for _ in 0..self.n {
            for &v in &layer {
                rows.extend_from_slice(self.coords(v));
            }
            for v in layer.iter_mut() {
                *v = top.mul(self.alpha, *v);
            }
        }
        rows
    }

    /// Whether `(v_j, alpha v_j, ..., alpha^(n-1) v_j)` spans the top field.
    pub fn spans(&self, vs: &[Elem]) -> bool {
        let mut rows = self.layered_rows(vs);
        let count = rows.len() / self.dim;
        linear::rank_in_place(self.tower.base(), &mut rows, count, self.dim) == self.dim
    }

    /// Canonical reduced echelon rows of the span of `vs`, or `None` if the
    /// vectors are dependent.
    pub fn canonical_span(&self, vs: &[Elem]) -> Option<Vec<Elem>> {
        let mut rows: Vec<Elem> = vs.iter().flat_map(|&v| self.coords(v).iter().copied()).collect();
        let pivots = linear::rref(self.tower.base(), &mut rows, vs.len(), self.dim);
        (pivots.len() == vs.len()).then_some(rows)
    }

    fn contains(&self, rref: &[Elem], pivots: &[usize], x: Elem) -> bool {
        let k = self.tower.base();
        let cx = self.coords(x);
        let mut acc = vec![0; self.dim];
        for (i, &p) in pivots.iter().enumerate() {
            let c = cx[p];
            if c != 0 {
                for (a, &r) in acc.iter_mut().zip(&rref[i * self.dim..(i + 1) * self.dim]) {
                    *a = k.add(*a, k.mul(c, r));
                }
            }
        }
        acc == cx
    }
}

/// An `m`-dimensional subspace by its reduced echelon rows and the
/// corresponding top-field basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    pub pivots: Vec<usize>,
    pub rref: Vec<Elem>,
    pub basis: Vec<Elem>,
}

/// Result of scanning every `m`-dimensional subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingEnumeration {
    pub scanned: u64,
    pub splitting: Vec<Subspace>,
}

/// Counts `m`-tuples of top elements whose block basis is an `F_q`-basis.
pub fn count_ordered_bases_n(ctx: &SplitContext, ceiling: u64) -> Result<u64> {
    let q_top = ctx.top_order();
    let m = ctx.m;
    let total = exec::check_ceiling("ordered m-tuples", exec::space_size(q_top, m as u32), ceiling)?;
    Ok(exec::count_indices(total, |idx| {
        let mut vs = vec![0; m];
        let mut i = idx;
        for v in vs.iter_mut() {
            *v = (i % q_top) as Elem;
            i /= q_top;
        }
        ctx.spans(&vs)
    }))
}

/// `|Theta^{-1}(f)|` as `N(alpha)/(q^(mn) - 1)` at the least root of `f`.
pub fn fiber_via_n(tower: &FieldTower, f: &GfPoly, ceiling: u64) -> Result<u64> {
    let d = tower.dim();
    if f.degree() != Some(d) {
        return Err(Error::WrongDegree(f.to_text(), d));
    }
    if !f.is_irreducible()? {
        return Err(Error::NotIrreducible(f.to_text()));
    }
    let alpha = *tower
        .roots_in_top(&f.monic())?
        .first()
        .ok_or_else(|| Error::Internal(format!("{} has no root in the top field", f.to_text())))?;
    let ctx = SplitContext::new(tower, alpha)?;
    let big_n = count_ordered_bases_n(&ctx, ceiling)?;
    let unit = ctx.top_order() - 1;
    if big_n % unit != 0 {
        return Err(Error::Internal(format!("N = {big_n} is not divisible by {unit}")));
    }
    Ok(big_n / unit)
}

/// Least root of the least irreducible of degree `mn` over the base.
pub fn default_alpha(tower: &FieldTower) -> Result<Elem> {
    let k = tower.base();
    let f = poly::least_irreducible(k, tower.dim())
        .ok_or_else(|| Error::Internal("no irreducible of the top degree".into()))?;
    let f = GfPoly::new(k.clone(), f)?;
    tower
        .roots_in_top(&f)?
        .first()
        .copied()
        .ok_or_else(|| Error::Internal("irreducible without a root in the top field".into()))
}

struct PivotBlock {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    start: u64,
}

fn pivot_blocks(dim: usize, m: usize, q: u64) -> Result<(Vec<PivotBlock>, u64)> {
    let mut blocks = Vec::new();
    let mut start = 0u64;
    let mut comb: Vec<usize> = (0..m).collect();
    loop {
        let free: Vec<(usize, usize)> = comb
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (p + 1..dim).filter(|j| !comb.contains(j)).map(move |j| (i, j)))
            .collect();
        let size = numtheory::checked_pow(q, free.len() as u32)?;
        blocks.push(PivotBlock { pivots: comb.clone(), free, start });
        start = start.checked_add(size).ok_or(Error::Overflow("subspace count"))?;
        // Next combination in lexicographic order.
        let Some(i) = (0..m).rev().find(|&i| comb[i] < dim - m + i) else {
            break;
        };
        comb[i] += 1;
        for j in i + 1..m {
            comb[j] = comb[j - 1] + 1;
        }
    }
    Ok((blocks, start))
}

/// Scans all `m`-dimensional subspaces of the top field (reduced echelon
/// representatives, lexicographic pivot order) and keeps the alpha-splitting ones.
pub fn enumerate_splitting_subspaces(ctx: &SplitContext, ceiling: u64) -> Result<SplittingEnumeration> {
    let (dim, m) = (ctx.dim, ctx.m);
    let q = ctx.tower.q();
    let expected = numtheory::gaussian_binomial(dim as u32, m as u32, q)?;
    exec::check_ceiling("m-dimensional subspaces", expected, ceiling)?;
    let (blocks, total) = pivot_blocks(dim, m, q)?;
    if total as u128 != expected {
        return Err(Error::Internal(format!("echelon scan produced {total} subspaces, expected {expected}")));
    }
    let basis = ctx.tower.top_basis();
    let splitting = exec::fold_indices(
        total,
        Vec::new,
        |acc: &mut Vec<Subspace>, idx| {
            let b = &blocks[blocks.partition_point(|b| b.start <= idx) - 1];
            let mut rref = vec![0; m * dim];
            for (i, &p) in b.pivots.iter().enumerate() {
                rref[i * dim + p] = 1;
            }
            let mut code = idx - b.start;
            for &(i, j) in &b.free {
                rref[i * dim + j] = (code % q) as Elem;
                code /= q;
            }
            let vs: Vec<Elem> = rref.chunks(dim).map(|row| basis.from_coords(row)).collect();
            if ctx.spans(&vs) {
                acc.push(Subspace { pivots: b.pivots.clone(), rref, basis: vs });
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    Ok(SplittingEnumeration { scanned: total, splitting })
}

/// `|S_alpha^x|` for each base point.
pub fn pointed_splitting_counts(
    ctx: &SplitContext,
    subspaces: &[Subspace],
    points: &[Elem],
) -> Result<BTreeMap<Elem, u64>> {
    if points.contains(&0) {
        return Err(Error::ZeroElement);
    }
    let counts = exec::fold_indices(
        points.len() as u64,
        BTreeMap::new,
        |acc, i| {
            let x = points[i as usize];
            let c = subspaces.iter().filter(|w| ctx.contains(&w.rref, &w.pivots, x)).count() as u64;
            acc.insert(x, c);
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    Ok(counts)
}

/// Outcome of one universally quantified check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartCheck {
    pub checked: u64,
    pub failures: u64,
    pub exhaustive: bool,
}

impl PartCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemSplitReport {
    /// The span of `alpha^(in)`, `0 <= i < m`, is alpha-splitting.
    pub u_splitting: bool,
    /// `beta U` lies in the splitting set for nonzero `beta`.
    pub beta_u: PartCheck,
    /// `beta W` lies in the splitting set for splitting `W` and nonzero `beta`.
    pub beta_w: PartCheck,
    /// `x U` is splitting and contains `x`.
    pub x_u: PartCheck,
    /// Distinct pointed counts observed.
    pub pointed_values: BTreeSet<u64>,
    pub pointed: PartCheck,
    /// `|S| (q^m - 1) = |S^x| (q^(mn) - 1)` per base point.
    pub counting: PartCheck,
}

impl ElemSplitReport {
    pub fn all_passed(&self) -> bool {
        self.u_splitting
            && self.beta_u.passed()
            && self.beta_w.passed()
            && self.x_u.passed()
            && self.pointed.passed()
            && self.counting.passed()
    }
}

fn sweep(total: u64, seed: u64, stream: u64, pred: impl Fn(u64) -> bool + Sync + Send) -> PartCheck {
    if total <= SWEEP_LIMIT {
        let ok = exec::count_indices(total, &pred);
        return PartCheck { checked: total, failures: total - ok, exhaustive: true };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let picks: Vec<u64> = (0..SWEEP_LIMIT).map(|_| rng.gen_range(0..total)).collect();
    let ok = exec::count_indices(SWEEP_LIMIT, |i| pred(picks[i as usize]));
    PartCheck { checked: SWEEP_LIMIT, failures: SWEEP_LIMIT - ok, exhaustive: false }
}

/// Checks the four parts of the elementary splitting proposition against
/// an enumerated splitting set. Sweeps above [`SWEEP_LIMIT`] are sampled.
pub fn verify_elemsplit(
    ctx: &SplitContext,
    enumeration: &SplittingEnumeration,
    pointed: &BTreeMap<Elem, u64>,
    seed: u64,
) -> Result<ElemSplitReport> {
    let top = ctx.tower.top();
    let (m, n) = (ctx.m, ctx.n);
    let q_top = ctx.top_order();
    let members: HashSet<&[Elem]> = enumeration.splitting.iter().map(|w| w.rref.as_slice()).collect();
    let is_member = |vs: &[Elem]| ctx.canonical_span(vs).is_some_and(|r| members.contains(r.as_slice()));

    let alpha_n = top.pow(ctx.alpha, n as u64);
    let u: Vec<Elem> = (0..m as u64).map(|i| top.pow(alpha_n, i)).collect();
    let u_splitting = ctx.canonical_span(&u).is_some() && ctx.spans(&u);
    let scaled = |beta: Elem, vs: &[Elem]| -> Vec<Elem> { vs.iter().map(|&v| top.mul(beta, v)).collect() };

    let beta_u = sweep(q_top - 1, seed, 1, |i| is_member(&scaled(i as Elem + 1, &u)));
    let s = enumeration.splitting.len() as u64;
    let beta_w = sweep(s * (q_top - 1), seed, 2, |i| {
        let w = &enumeration.splitting[(i / (q_top - 1)) as usize];
        is_member(&scaled((i % (q_top - 1)) as Elem + 1, &w.basis))
    });
    let x_u = sweep(q_top - 1, seed, 3, |i| {
        let x = i as Elem + 1;
        let xu = scaled(x, &u);
        match ctx.canonical_span(&xu) {
            Some(r) => {
                let pivots = pivots_of(&r, m, ctx.dim);
                members.contains(r.as_slice()) && ctx.contains(&r, &pivots, x)
            }
            None => false,
        }
    });

    let pointed_values: BTreeSet<u64> = pointed.values().copied().collect();
    let exhaustive_points = pointed.len() as u64 == q_top - 1;
    let pointed_check = PartCheck {
        checked: pointed.len() as u64,
        failures: if pointed_values.len() <= 1 { 0 } else { pointed.len() as u64 },
        exhaustive: exhaustive_points,
    };
    let qm1 = numtheory::checked_pow(ctx.tower.q(), m as u32)? as u128 - 1;
    let lhs = s as u128 * qm1;
    let counting = PartCheck {
        checked: pointed.len() as u64,
        failures: pointed.values().filter(|&&c| c as u128 * (q_top as u128 - 1) != lhs).count() as u64,
        exhaustive: exhaustive_points,
    };
    Ok(ElemSplitReport { u_splitting, beta_u, beta_w, x_u, pointed_values, pointed: pointed_check, counting })
}

fn pivots_of(rref: &[Elem], rows: usize, dim: usize) -> Vec<usize> {
    (0..rows).filter_map(|i| rref[i * dim..(i + 1) * dim].iter().position(|&c| c != 0)).collect()
}

/// Grouping of ordered block bases by the matrix of `x -> alpha x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisClasses {
    pub bases: u64,
    pub classes: u64,
    /// Class size -> number of classes of that size.
    pub size_histogram: BTreeMap<u64, u64>,
    /// Every class matrix is block companion with characteristic polynomial
    /// equal to the minimal polynomial of alpha.
    pub all_block_companion: bool,
}

/// Groups every ordered block basis by its multiplication matrix.
pub fn basis_classes(ctx: &SplitContext, ceiling: u64) -> Result<BasisClasses> {
    let q_top = ctx.top_order();
    let m = ctx.m;
    let total = exec::check_ceiling("ordered m-tuples", exec::space_size(q_top, m as u32), ceiling)?;
    let tower = ctx.tower;
    let classes = exec::try_fold_indices(
        total,
        HashMap::<Vec<Elem>, u64>::new,
        |acc, idx| {
            let mut vs = vec![0; m];
            let mut i = idx;
            for v in vs.iter_mut() {
                *v = (i % q_top) as Elem;
                i /= q_top;
            }
            if ctx.spans(&vs) {
                let b = crate::linalg::block_basis(tower, ctx.alpha, &vs);
                let t = matrix_of_mult_in_basis(tower, ctx.alpha, &b)?;
                *acc.entry(t.data().to_vec()).or_insert(0) += 1;
            }
            Ok(())
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )?;
    let min_poly = tower.min_poly_over_base(ctx.alpha)?;
    let d = tower.dim();
    let mut all_block_companion = true;
    let mut size_histogram = BTreeMap::new();
    let mut bases = 0;
    for (data, size) in &classes {
        bases += size;
        *size_histogram.entry(*size).or_insert(0) += 1;
        let t = crate::linalg::GfMatrix::from_vec(tower.base().clone(), d, d, data.clone())?;
        let shaped = recognize_block_companion(&t, m, ctx.n)?.is_some();
        all_block_companion &= shaped && char_poly(&t)? == min_poly;
    }
    Ok(BasisClasses { bases, classes: classes.len() as u64, size_histogram, all_block_companion })
}

/// Everything the bridge identities need for one `(tower, alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCensus {
    pub q: u64,
    pub m: u32,
    pub n: u32,
    pub alpha: Elem,
    pub n_enumerated: u64,
    pub s_enumerated: u64,
    pub subspaces_scanned: u64,
    pub pointed_counts: BTreeMap<Elem, u64>,
    pub enumeration: SplittingEnumeration,
}

/// Base points for pointed counts: all nonzero elements when the sweep is
/// small, otherwise a seeded sample.
pub fn base_points(ctx: &SplitContext, subspaces: usize, seed: u64) -> Vec<Elem> {
    let q_top = ctx.top_order();
    if (q_top - 1).saturating_mul(subspaces as u64) <= SWEEP_LIMIT {
        return (1..q_top as Elem).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(4);
    let picks: BTreeSet<Elem> = (0..64).map(|_| rng.gen_range(1..q_top as Elem)).collect();
    picks.into_iter().collect()
}

/// Runs N, S and pointed counts for one generator.
pub fn split_census(ctx: &SplitContext, ceiling: u64, seed: u64) -> Result<SplitCensus> {
    let tower = ctx.tower;
    let n_enumerated = count_ordered_bases_n(ctx, ceiling)?;
    let enumeration = enumerate_splitting_subspaces(ctx, ceiling)?;
    let points = base_points(ctx, enumeration.splitting.len(), seed);
    let pointed_counts = pointed_splitting_counts(ctx, &enumeration.splitting, &points)?;
    Ok(SplitCensus {
        q: tower.q(),
        m: tower.m(),
        n: tower.n(),
        alpha: ctx.alpha,
        n_enumerated,
        s_enumerated: enumeration.splitting.len() as u64,
        subspaces_scanned: enumeration.scanned,
        pointed_counts,
        enumeration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_for(tower: &FieldTower) -> SplitContext<'_> {
        SplitContext::new(tower, default_alpha(tower).unwrap()).unwrap()
    }

    #[test]
    fn bridge_222() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        let ctx = ctx_for(&t);
        assert_eq!(t.min_poly_over_base(ctx.alpha()).unwrap().to_text(), "1,1,0,0,1");
        let c = split_census(&ctx, 1 << 20, 0).unwrap();
        assert_eq!(c.n_enumerated, 120);
        assert_eq!(c.subspaces_scanned, 35);
        assert_eq!(c.s_enumerated, 20);
        assert_eq!(c.pointed_counts.len(), 15);
        assert!(c.pointed_counts.values().all(|&v| v == 4));
        let r = verify_elemsplit(&ctx, &c.enumeration, &c.pointed_counts, 0).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert!(r.beta_u.exhaustive && r.beta_u.checked == 15);
    }

    #[test]
    fn degenerate_shapes() {
        let t = FieldTower::new(2, 1, 1, 2).unwrap();
        let ctx = ctx_for(&t);
        assert_eq!(count_ordered_bases_n(&ctx, 1 << 20).unwrap(), 3);
        let t = FieldTower::new(2, 1, 1, 5).unwrap();
        let ctx = ctx_for(&t);
        assert_eq!(enumerate_splitting_subspaces(&ctx, 1 << 20).unwrap().splitting.len(), 31);
        let t = FieldTower::new(3, 1, 3, 1).unwrap();
        let ctx = ctx_for(&t);
        assert_eq!(enumerate_splitting_subspaces(&ctx, 1 << 20).unwrap().splitting.len(), 1);
        let t = FieldTower::new(2, 1, 1, 3).unwrap();
        let ctx = ctx_for(&t);
        let e = enumerate_splitting_subspaces(&ctx, 1 << 20).unwrap();
        let p = pointed_splitting_counts(&ctx, &e.splitting, &[1, 2, 5]).unwrap();
        assert!(p.values().all(|&v| v == 1));
        assert_eq!(pointed_splitting_counts(&ctx, &e.splitting, &[0]), Err(Error::ZeroElement));
    }

    #[test]
    fn non_generator_rejected() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        let one = 1;
        assert!(matches!(SplitContext::new(&t, one), Err(Error::NotGenerator { .. })));
    }

    #[test]
    fn fiber_via_n_examples() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        let k = t.base().clone();
        for f in [vec![1, 1, 0, 0, 1], vec![1, 1, 1, 1, 1]] {
            assert_eq!(fiber_via_n(&t, &GfPoly::new(k.clone(), f).unwrap(), 1 << 20).unwrap(), 8);
        }
        let t = FieldTower::new(2, 1, 1, 4).unwrap();
        let f = GfPoly::new(t.base().clone(), vec![1, 0, 0, 1, 1]).unwrap();
        assert_eq!(fiber_via_n(&t, &f, 1 << 20).unwrap(), 1);
    }

    #[test]
    fn subspace_scan_matches_gaussian_binomial() {
        for (q, m, n) in [(2u64, 2u32, 2u32), (3, 2, 2), (2, 3, 2), (2, 2, 3)] {
            let (p, e) = numtheory::prime_power(q).unwrap();
            let t = FieldTower::new(p, e, m, n).unwrap();
            let ctx = ctx_for(&t);
            let (_, total) = pivot_blocks(t.dim(), m as usize, q).unwrap();
            assert_eq!(total as u128, numtheory::gaussian_binomial(m * n, m, q).unwrap());
            // Representatives are pairwise distinct subspaces.
            let e = enumerate_splitting_subspaces(&ctx, 1 << 20).unwrap();
            let set: HashSet<Vec<Elem>> =
                e.splitting.iter().map(|w| ctx.canonical_span(&w.basis).unwrap()).collect();
            assert_eq!(set.len(), e.splitting.len());
        }
    }

    #[test]
    fn basis_classes_222() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        let ctx = ctx_for(&t);
        let c = basis_classes(&ctx, 1 << 20).unwrap();
        assert_eq!(c.bases, 120);
        assert_eq!(c.classes, 8);
        assert_eq!(c.size_histogram, BTreeMap::from([(15, 8)]));
        assert!(c.all_block_companion);
    }

    #[test]
    fn extension_base_field() {
        // q = 4: coordinates are over F_4, not F_2.
        let t = FieldTower::new(2, 2, 2, 1).unwrap();
        let ctx = ctx_for(&t);
        let n = count_ordered_bases_n(&ctx, 1 << 20).unwrap();
        assert_eq!(n as u128, numtheory::gl_order(4, 2).unwrap());
    }
}
