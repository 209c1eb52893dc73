//! Fibers of the characteristic map on block companion matrices.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::exec;
use super::formulas;
use crate::error::{Error, Result};
use crate::gf::{poly, Elem, Field};
use crate::linalg::companion::assemble_raw;
use crate::linalg::order::singer_check;
use crate::linalg::char_poly_in_place;
use crate::numtheory;

/// Irreducible-but-not-primitive versus primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyClass {
    Irreducible,
    Primitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRecord {
    pub class: PolyClass,
    pub fiber_size: u64,
    /// Fiber members that pass the order-based Singer test.
    pub singer_count: u64,
    /// Lowest assembly index in the fiber.
    pub first_assembly: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub q: u64,
    pub m: u32,
    pub n: u32,
    /// Keyed by coefficient text, constant term first.
    pub per_poly: BTreeMap<String, FiberRecord>,
    pub total_bci: u64,
    pub total_bcs: u64,
    /// Singer cycles found by the order criterion over all assemblies.
    pub singer_by_order: u64,
    pub assemblies: u64,
    pub formula_fiber: u128,
    pub formula_bcs: u128,
    pub formula_bci: u128,
    pub all_match: bool,
}

impl FiberReport {
    pub fn fiber_sizes(&self) -> impl Iterator<Item = u64> + '_ {
        self.per_poly.values().map(|r| r.fiber_size)
    }

    pub fn is_uniform(&self) -> bool {
        let mut sizes = self.fiber_sizes();
        match sizes.next() {
            Some(first) => sizes.all(|s| s == first),
            None => true,
        }
    }
}

/// Assembles the block companion matrix whose block entries are `digits`
/// (block-major, then row, then column).
pub(crate) fn assembly_from_digits(m: usize, n: usize, digits: &[Elem]) -> Vec<Elem> {
    assemble_raw(m, n, |b, r, c| digits[b * m * m + r * m + c])
}

/// The block companion matrix with assembly index `index` in a `(q, m, n)` scan.
pub fn assembly_matrix(q: u64, m: u32, n: u32, index: u64) -> Result<crate::linalg::GfMatrix> {
    let (k, d) = check_shape(q, m, n)?;
    let mut ds = vec![0; (m * m * n) as usize];
    digits_of(index, q, &mut ds);
    crate::linalg::GfMatrix::from_vec(k, d, d, assembly_from_digits(m as usize, n as usize, &ds))
}

fn digits_of(mut index: u64, q: u64, out: &mut [Elem]) {
    for d in out.iter_mut() {
        *d = (index % q) as Elem;
        index /= q;
    }
}

fn check_shape(q: u64, m: u32, n: u32) -> Result<(Arc<Field>, usize)> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroInput);
    }
    let (p, e) = numtheory::prime_power(q)?;
    Ok((Arc::new(Field::canonical(p, e)?), (m * n) as usize))
}

/// Monic irreducibles of degree `d` over `k` with their primitivity, in encoding order.
pub fn irreducibles_of_degree(k: &Field, d: usize) -> Result<Vec<(Vec<Elem>, bool)>> {
    let count = numtheory::checked_pow(k.order() as u64, d as u32)?;
    let mut out = Vec::new();
    for i in 0..count {
        let f = poly::monic_from_index(k, d, i);
        if poly::is_irreducible(k, &f) {
            let primitive = poly::is_primitive(k, &f)?;
            out.push((f, primitive));
        }
    }
    Ok(out)
}

#[derive(Default)]
struct Tally {
    by_poly: HashMap<Vec<Elem>, (u64, u64, u64)>,
    singer: u64,
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (f, (c, s, first)) in b.by_poly {
        let e = a.by_poly.entry(f).or_insert((0, 0, u64::MAX));
        e.0 += c;
        e.1 += s;
        e.2 = e.2.min(first);
    }
    a.singer += b.singer;
    a
}

/// Exhaustive census of all `q^(m^2 n)` block companion matrices.
///
/// Every nonsingular assembly is run through the Singer test, which
/// cross-checks the order criterion against primitivity.
pub fn enumerate_fibers(q: u64, m: u32, n: u32, ceiling: u64) -> Result<FiberReport> {
    let (k, d) = check_shape(q, m, n)?;
    let (mu, nu) = (m as usize, n as usize);
    let digits = mu * mu * nu;
    let total = exec::check_ceiling("block companion assemblies", exec::space_size(q, digits as u32), ceiling)?;
    let irreducibles = irreducibles_of_degree(&k, d)?;
    let primitive: HashMap<Vec<Elem>, bool> = irreducibles.iter().cloned().collect();

    let tally = exec::try_fold_indices(
        total,
        Tally::default,
        |acc, idx| {
            let mut ds = vec![0; digits];
            digits_of(idx, q, &mut ds);
            let t = assembly_from_digits(mu, nu, &ds);
            let chi = char_poly_in_place(&k, &mut t.clone(), d);
            let is_prim = primitive.get(&chi).copied().unwrap_or(false);
            let singer = singer_check(&k, &t, d, is_prim).map_err(|e| match e {
                Error::CriterionDisagreement(msg) => {
                    Error::CriterionDisagreement(format!("assembly {idx} ({}): {msg}", poly::to_text(&chi)))
                }
                other => other,
            })?;
            let e = acc.by_poly.entry(chi).or_insert((0, 0, u64::MAX));
            e.0 += 1;
            e.1 += singer as u64;
            e.2 = e.2.min(idx);
            acc.singer += singer as u64;
            Ok(())
        },
        merge,
    )?;

    let formula_fiber = formulas::conjectured_fiber_size(q, m, n)?;
    let mut per_poly = BTreeMap::new();
    let (mut total_bci, mut total_bcs) = (0u64, 0u64);
    for (f, is_prim) in &irreducibles {
        let (count, singer, first) = tally.by_poly.get(f).copied().unwrap_or((0, 0, u64::MAX));
        total_bci += count;
        if *is_prim {
            total_bcs += count;
        }
        let class = if *is_prim { PolyClass::Primitive } else { PolyClass::Irreducible };
        let first_assembly = (first != u64::MAX).then_some(first);
        per_poly.insert(poly::to_text(f), FiberRecord { class, fiber_size: count, singer_count: singer, first_assembly });
    }
    let formula_bcs = formulas::conjectured_singer_count(q, m, n)?;
    let formula_bci = formulas::conjectured_bci_count(q, m, n)?;
    let all_match = per_poly.values().all(|r| r.fiber_size as u128 == formula_fiber)
        && total_bcs as u128 == formula_bcs
        && total_bci as u128 == formula_bci;
    Ok(FiberReport {
        q,
        m,
        n,
        per_poly,
        total_bci,
        total_bcs,
        singer_by_order: tally.singer,
        assemblies: total,
        formula_fiber,
        formula_bcs,
        formula_bci,
        all_match,
    })
}

/// Point estimate with a 95% normal-approximation interval, rounded to integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Estimate {
    pub point: u128,
    pub lo: u128,
    pub hi: u128,
}

impl Estimate {
    pub fn from_hits(hits: u64, samples: u64, space: u128) -> Self {
        let s = samples as f64;
        let phat = hits as f64 / s;
        let half = 1.96 * (phat * (1.0 - phat) / s).sqrt();
        let scale = space as f64;
        let clamp = |x: f64| (x.max(0.0) * scale).round() as u128;
        Estimate { point: clamp(phat), lo: clamp(phat - half), hi: clamp((phat + half).min(1.0)) }
    }

    pub fn contains(&self, v: u128) -> bool {
        self.lo <= v && v <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledFiber {
    pub hits: u64,
    pub estimate: Estimate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSample {
    pub q: u64,
    pub m: u32,
    pub n: u32,
    pub samples: u64,
    pub seed: u64,
    pub space: u128,
    /// Irreducible characteristic polynomials that were hit.
    pub per_poly: BTreeMap<String, SampledFiber>,
    pub irreducible_hits: u64,
    pub formula_fiber: u128,
}

const SAMPLE_CHUNK: u64 = 4096;

/// Uniformly samples block companion matrices and estimates fiber sizes.
pub fn sample_fibers(q: u64, m: u32, n: u32, samples: u64, seed: u64) -> Result<FiberSample> {
    let (k, d) = check_shape(q, m, n)?;
    if samples == 0 {
        return Err(Error::InvalidConfig("sample size must be positive".into()));
    }
    let (mu, nu) = (m as usize, n as usize);
    let digits = mu * mu * nu;
    let space = exec::space_size(q, digits as u32);
    let chunks = samples.div_ceil(SAMPLE_CHUNK);
    let counts = exec::fold_indices(
        chunks,
        BTreeMap::<Vec<Elem>, u64>::new,
        |acc, c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let mut ds = vec![0; digits];
            for _ in c * SAMPLE_CHUNK..((c + 1) * SAMPLE_CHUNK).min(samples) {
                for x in ds.iter_mut() {
                    *x = rng.gen_range(0..q as Elem);
                }
                let mut t = assembly_from_digits(mu, nu, &ds);
                let chi = char_poly_in_place(&k, &mut t, d);
                *acc.entry(chi).or_insert(0) += 1;
            }
        },
        |mut a, b| {
            for (f, c) in b {
                *a.entry(f).or_insert(0) += c;
            }
            a
        },
    );
    let mut per_poly = BTreeMap::new();
    let mut irreducible_hits = 0;
    for (f, hits) in counts {
        if poly::is_irreducible(&k, &f) {
            irreducible_hits += hits;
            per_poly.insert(poly::to_text(&f), SampledFiber { hits, estimate: Estimate::from_hits(hits, samples, space) });
        }
    }
    Ok(FiberSample {
        q,
        m,
        n,
        samples,
        seed,
        space,
        per_poly,
        irreducible_hits,
        formula_fiber: formulas::conjectured_fiber_size(q, m, n)?,
    })
}
