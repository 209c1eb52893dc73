//! Nonsingular Toeplitz matrices, the trinomial counting route, and
//! irreducible binomials.

use serde::{Deserialize, Serialize};

use super::coprime::CountPair;
use super::exec;
use super::formulas;
use crate::error::{Error, Result};
use crate::gf::{linear, poly, Elem, Field, FieldTower, GfPoly, RelativeBasis};
use crate::numtheory;

fn field_of(q: u64) -> Result<Field> {
    let (p, e) = numtheory::prime_power(q)?;
    Field::canonical(p, e)
}

/// `T_c = (c_(n+i-j))` for `c = (c_1, ..., c_(2n-1))`, row-major.
pub fn toeplitz_matrix(c: &[Elem], n: usize) -> Vec<Elem> {
    let mut t = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            t[i * n + j] = c[n + i - j - 1];
        }
    }
    t
}

/// Brute-force count of nonsingular `n x n` Toeplitz matrices.
pub fn toeplitz_census(q: u64, n: u32, ceiling: u64) -> Result<CountPair> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let k = field_of(q)?;
    let nu = n as usize;
    let total = exec::check_ceiling("Toeplitz matrices", exec::space_size(q, 2 * n - 1), ceiling)?;
    let observed = exec::count_indices(total, |mut idx| {
        let c: Vec<Elem> = (0..2 * nu - 1)
            .map(|_| {
                let x = (idx % q) as Elem;
                idx /= q;
                x
            })
            .collect();
        linear::det_in_place(&k, &mut toeplitz_matrix(&c, nu), nu) != 0
    });
    Ok(CountPair { observed, formula: formulas::toeplitz_formula(q, n)? })
}

/// First irreducible `X^(2n) - aX - b`, scanning `a` then `b` in encoding order.
pub fn find_trinomial(k: &Field, n: u32) -> Option<(Elem, Elem, Vec<Elem>)> {
    let d = 2 * n as usize;
    for a in k.elements() {
        for b in k.elements().skip(1) {
            let mut f = vec![0; d + 1];
            f[0] = k.neg(b);
            f[1] = k.add(f[1], k.neg(a));
            f[d] = 1;
            if poly::is_irreducible(k, &f) {
                return Some((a, b, f));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrinomialRoute {
    pub q: u64,
    pub n: u32,
    pub a: Elem,
    pub b: Elem,
    pub trinomial: String,
    /// `beta` for which `(1, beta, alpha, alpha beta, ...)` is a basis.
    pub basis_count: u64,
    pub expected_basis_count: u128,
    /// `beta` where "basis" and "`T_c` nonsingular" disagree.
    pub equivalence_failures: u64,
    /// `beta` whose coordinate matrix is not `[[I, B], [0, T_c]]`.
    pub block_failures: u64,
    pub betas_checked: u64,
    /// `basis_count / q`.
    pub tgl: u64,
}

/// Counts nonsingular Toeplitz matrices through the top field of degree
/// `2n` and an irreducible trinomial.
pub fn toeplitz_via_trinomial(q: u64, n: u32, ceiling: u64) -> Result<TrinomialRoute> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let (p, e) = numtheory::prime_power(q)?;
    let nu = n as usize;
    let d = 2 * nu;
    let size = exec::space_size(q, 2 * n);
    exec::check_ceiling("top field elements", size, ceiling)?;
    let tower = FieldTower::new(p, e, 1, 2 * n)?;
    let k = tower.base().clone();
    let (a, b, f) = find_trinomial(&k, n).ok_or(Error::NoTrinomial { q, degree: d })?;
    let f = GfPoly::new(k.clone(), f)?;
    let alpha = tower.roots_in_top(&f)?[0];
    let basis = RelativeBasis::new(k.clone(), tower.top().clone(), tower.embedding_base_top().clone(), alpha)?;
    let top = tower.top().clone();

    let (basis_count, equivalence_failures, block_failures) = exec::fold_indices(
        size as u64,
        || (0u64, 0u64, 0u64),
        |acc, beta| {
            let beta = beta as Elem;
            let c = basis.coords(beta);
            // Columns: alpha^j for j < n, then beta alpha^j for j < n.
            let mut cols = vec![0; d * d];
            let mut x = 1;
            let mut bx = beta;
            for j in 0..nu {
                for (r, v) in basis.coords(x).into_iter().enumerate() {
                    cols[r * d + j] = v;
                }
                for (r, v) in basis.coords(bx).into_iter().enumerate() {
                    cols[r * d + nu + j] = v;
                }
                x = top.mul(x, alpha);
                bx = top.mul(bx, alpha);
            }
            let t_c = toeplitz_matrix(&c[1..], nu);
            let shaped = (0..d).all(|r| {
                (0..nu).all(|j| cols[r * d + j] == (r == j) as Elem)
                    && (r < nu || (0..nu).all(|j| cols[r * d + nu + j] == t_c[(r - nu) * nu + j]))
            });
            let is_basis = linear::rank_in_place(&k, &mut cols, d, d) == d;
            let nonsingular = linear::det_in_place(&k, &mut t_c.clone(), nu) != 0;
            acc.0 += is_basis as u64;
            acc.1 += (is_basis != nonsingular) as u64;
            acc.2 += (!shaped) as u64;
        },
        |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2),
    );
    if basis_count % q != 0 {
        return Err(Error::Internal(format!("basis count {basis_count} not divisible by {q}")));
    }
    Ok(TrinomialRoute {
        q,
        n,
        a,
        b,
        trinomial: poly::to_text(f.coeffs()),
        basis_count,
        expected_basis_count: formulas::m2_fiber_size(q, n)?,
        equivalence_failures,
        block_failures,
        betas_checked: size as u64,
        tgl: basis_count / q,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialVerdict {
    /// Order of `b` in the multiplicative group.
    pub order: u64,
    pub criterion: bool,
    pub direct: bool,
}

/// Criterion for irreducibility of `X^d - b`, evaluated next to a direct test.
pub fn binomial_irreducibility(q: u64, d: u32, b: Elem) -> Result<BinomialVerdict> {
    let k = field_of(q)?;
    if d < 2 {
        return Err(Error::InvalidConfig(format!("binomial degree {d} must be at least 2")));
    }
    if b == 0 {
        return Err(Error::ZeroElement);
    }
    if b >= k.order() {
        return Err(Error::Parse(format!("{b} is not an element of {}", k.tag())));
    }
    let e = k.element_order(b)?;
    let cofactor = (q - 1) / e;
    let criterion = numtheory::factorize(d as u64)?.primes().all(|r| e % r == 0 && !cofactor.is_multiple_of(r))
        && (!d.is_multiple_of(4) || q % 4 == 1);
    let mut f = vec![0; d as usize + 1];
    f[0] = k.neg(b);
    f[d as usize] = 1;
    Ok(BinomialVerdict { order: e, criterion, direct: poly::is_irreducible(&k, &f) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatWitness {
    pub n: u64,
    pub b: Elem,
    pub verdict: BinomialVerdict,
}

/// Pairs `(n, b)` with `X^(2n) - b` irreducible: `n` runs over powers of the
/// least odd prime factor of `q - 1`, `b` is the least primitive element.
pub fn fermat_condition_search(q: u64, count: u32) -> Result<Vec<FermatWitness>> {
    let k = field_of(q)?;
    if q.is_multiple_of(2) {
        return Err(Error::InvalidConfig(format!("q = {q} must be odd")));
    }
    let ell = numtheory::factorize(q - 1)?.primes().find(|&r| r != 2).ok_or(Error::FermatExclusion(q))?;
    let b = k.primitive_element();
    let mut out = Vec::new();
    let mut n = 1u64;
    for _ in 0..count {
        n = n.checked_mul(ell).ok_or(Error::Overflow("Fermat witness degree"))?;
        let d = u32::try_from(2 * n).map_err(|_| Error::Overflow("Fermat witness degree"))?;
        out.push(FermatWitness { n, b, verdict: binomial_irreducibility(q, d, b)? });
    }
    Ok(out)
}
