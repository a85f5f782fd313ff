//! Exact rational vectors and matrices, spans, orthogonal complements, and
//! strict linear feasibility.
//!
//! Every operation is pure and exact. Feasibility questions are decided by a
//! dense rational simplex with Bland's rule, so the answers are never
//! tolerance-dependent and every returned witness is verified against its
//! constraints before it leaves this module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used everywhere in the crate.
pub type Rat = BigRational;

/// The rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// The rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// A point or root vector with exact rational coordinates in a fixed ambient
/// space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    coords: Vec<Rat>,
}

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Rat::zero(); dim],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &Rat) -> Vector {
        Vector {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Sign of the first nonzero coordinate: `1`, `-1`, or `0` for the zero
    /// vector. This is the lexicographic positivity used for canonical wall
    /// representatives and the canonical positive system.
    pub fn lex_sign(&self) -> i8 {
        for c in &self.coords {
            if c.is_positive() {
                return 1;
            }
            if c.is_negative() {
                return -1;
            }
        }
        0
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact scalar product. Panics on dimension mismatch.
pub fn inner(a: &Vector, b: &Vector) -> Rat {
    assert_eq!(a.dim(), b.dim(), "vector dimension mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.coords.iter().zip(&b.coords) {
        acc += x * y;
    }
    acc
}

/// Dense rational matrix acting on column vectors (`rows` are the matrix rows).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Matrix {
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn new(rows: Vec<Vector>) -> Self {
        if let Some(first) = rows.first() {
            let d = first.dim();
            assert!(rows.iter().all(|r| r.dim() == d), "ragged matrix");
        }
        Matrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n).map(|i| Vector::unit(n, i)).collect(),
        }
    }

    /// Matrix of the reflection through the hyperplane perpendicular to
    /// `alpha`: `I - 2 alpha alpha^T / (alpha, alpha)`.
    pub fn reflection(alpha: &Vector) -> Self {
        assert!(!alpha.is_zero(), "reflection normal must be nonzero");
        let n = alpha.dim();
        let nn = inner(alpha, alpha);
        let rows = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(n);
                for j in 0..n {
                    let mut e = if i == j { Rat::one() } else { Rat::zero() };
                    e -= rat_int(2) * &alpha.coords[i] * &alpha.coords[j] / &nn;
                    row.push(e);
                }
                Vector::new(row)
            })
            .collect();
        Matrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector {
            coords: self.rows.iter().map(|r| inner(r, v)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let t = other.transpose();
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| Vector {
                    coords: t.rows.iter().map(|c| inner(r, c)).collect(),
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.rows.first().map_or(0, Vector::dim);
        Matrix {
            rows: (0..n)
                .map(|j| Vector {
                    coords: self.rows.iter().map(|r| r.coords[j].clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.coords
                .iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }
}

/// Reduced-row-echelon basis of the span of `vs`, deterministic in the input
/// order: rows have pivot 1, pivots are the leftmost nonzero columns, and the
/// rows are kept sorted by pivot column.
pub fn span_basis(vs: &[Vector]) -> Vec<Vector> {
    let mut rows: Vec<(usize, Vector)> = Vec::new(); // (pivot column, row)
    for v in vs {
        let mut v = v.clone();
        reduce_against(&mut v, &rows);
        if let Some(p) = first_nonzero(&v) {
            let inv = v.coords[p].clone();
            v = v.scaled(&(Rat::one() / inv));
            for (_, row) in rows.iter_mut() {
                let c = row.coords[p].clone();
                if !c.is_zero() {
                    *row = row.sub(&v.scaled(&c));
                }
            }
            let at = rows.partition_point(|(q, _)| *q < p);
            rows.insert(at, (p, v));
        }
    }
    rows.into_iter().map(|(_, r)| r).collect()
}

fn first_nonzero(v: &Vector) -> Option<usize> {
    v.coords.iter().position(|c| !c.is_zero())
}

fn reduce_against(v: &mut Vector, rows: &[(usize, Vector)]) {
    for (p, row) in rows {
        let c = v.coords[*p].clone();
        if !c.is_zero() {
            *v = v.sub(&row.scaled(&(c / &row.coords[*p])));
        }
    }
}

/// Whether `v` is a linear combination of `basis`.
pub fn in_span(v: &Vector, basis: &[Vector]) -> bool {
    let rows: Vec<(usize, Vector)> = span_basis(basis)
        .into_iter()
        .map(|r| (first_nonzero(&r).expect("basis rows are nonzero"), r))
        .collect();
    let mut v = v.clone();
    reduce_against(&mut v, &rows);
    v.is_zero()
}

/// Basis of the orthogonal complement of the span of `basis` inside the
/// ambient space of dimension `dim`. The output is a deterministic nullspace
/// basis: one vector per free column, in ascending column order, so the empty
/// input yields the standard basis.
pub fn orthogonal_complement(basis: &[Vector], dim: usize) -> Vec<Vector> {
    let rref = span_basis(basis);
    let pivots: Vec<usize> = rref
        .iter()
        .map(|r| first_nonzero(r).expect("basis rows are nonzero"))
        .collect();
    let mut out = Vec::new();
    for f in 0..dim {
        if pivots.contains(&f) {
            continue;
        }
        let mut x = Vector::unit(dim, f);
        for (row, &p) in rref.iter().zip(&pivots) {
            x.coords[p] = -row.coords[f].clone();
        }
        out.push(x);
    }
    out
}

/// A rational `x` with `(x, s) > 0` for every `s` in `strict` and `(x, z) = 0`
/// for every `z` in `zero`, or `None` if no such point exists. The decision is
/// exact, and a returned witness has been checked against every constraint.
pub fn strict_feasible(strict: &[Vector], zero: &[Vector]) -> Option<Vector> {
    let dim = strict
        .first()
        .or_else(|| zero.first())
        .map_or(0, Vector::dim);
    assert!(
        strict.iter().chain(zero).all(|v| v.dim() == dim),
        "vector dimension mismatch"
    );
    // Restrict to the orthogonal complement of the zero set; the equalities
    // then hold identically and only the strict cone remains.
    let complement = orthogonal_complement(&span_basis(zero), dim);
    let x = if strict.is_empty() {
        Some(Vector::zero(dim))
    } else if complement.is_empty() {
        None
    } else {
        let reduced: Vec<Vector> = strict
            .iter()
            .map(|s| Vector::new(complement.iter().map(|n| inner(s, n)).collect()))
            .collect();
        strict_cone_point(&reduced).map(|y| {
            let mut x = Vector::zero(dim);
            for (c, n) in y.coords().iter().zip(&complement) {
                x = x.add(&n.scaled(c));
            }
            x
        })
    };
    if let Some(x) = &x {
        for s in strict {
            assert!(inner(x, s).is_positive(), "witness fails strict constraint");
        }
        for z in zero {
            assert!(inner(x, z).is_zero(), "witness fails zero constraint");
        }
    }
    x
}

/// Point `y` with `(a, y) > 0` for all rows `a`, via the bounded homogeneous
/// program: maximize `t` subject to `(a_i, y) - t >= 0` and `t <= 1`. The
/// system is feasible exactly when the optimum is positive.
fn strict_cone_point(rows_in: &[Vector]) -> Option<Vector> {
    let q = rows_in[0].dim();
    let m = rows_in.len();
    // Columns: u_0..u_{q-1}, v_0..v_{q-1} (y = u - v), t, s_1..s_m, w.
    let ncols = 2 * q + 1 + m + 1;
    let t_col = 2 * q;
    let mut rows = Vec::with_capacity(m + 1);
    let mut rhs = Vec::with_capacity(m + 1);
    let mut basis = Vec::with_capacity(m + 1);
    for (i, a) in rows_in.iter().enumerate() {
        // -(a, u) + (a, v) + t + s_i = 0
        let mut row = vec![Rat::zero(); ncols];
        for j in 0..q {
            row[j] = -a.coords()[j].clone();
            row[q + j] = a.coords()[j].clone();
        }
        row[t_col] = Rat::one();
        row[t_col + 1 + i] = Rat::one();
        rows.push(row);
        rhs.push(Rat::zero());
        basis.push(t_col + 1 + i);
    }
    // t + w = 1
    let mut cap = vec![Rat::zero(); ncols];
    cap[t_col] = Rat::one();
    cap[ncols - 1] = Rat::one();
    rows.push(cap);
    rhs.push(Rat::one());
    basis.push(ncols - 1);

    let mut obj = vec![Rat::zero(); ncols];
    obj[t_col] = Rat::one();

    let (x, value) = simplex_max(rows, rhs, basis, obj).expect("bounded by construction");
    if value.is_positive() {
        Some(Vector::new(
            (0..q).map(|j| &x[j] - &x[q + j]).collect(),
        ))
    } else {
        None
    }
}

/// Nonnegative rational coefficients `c` with `sum c_j gens_j = target`, or
/// `None` if `target` lies outside the cone spanned by `gens`. Decided by a
/// phase-1 simplex; a returned combination has been verified exactly.
pub fn nonneg_combination(target: &Vector, gens: &[Vector]) -> Option<Vec<Rat>> {
    let dim = target.dim();
    assert!(
        gens.iter().all(|g| g.dim() == dim),
        "vector dimension mismatch"
    );
    let k = gens.len();
    let ncols = k + dim;
    let mut rows = Vec::with_capacity(dim);
    let mut rhs = Vec::with_capacity(dim);
    let mut basis = Vec::with_capacity(dim);
    let mut obj = vec![Rat::zero(); ncols];
    for r in 0..dim {
        let flip = target.coords()[r].is_negative();
        let mut row: Vec<Rat> = (0..ncols).map(|_| Rat::zero()).collect();
        for (j, g) in gens.iter().enumerate() {
            row[j] = if flip {
                -g.coords()[r].clone()
            } else {
                g.coords()[r].clone()
            };
        }
        row[k + r] = Rat::one();
        obj[k + r] = -Rat::one();
        rows.push(row);
        rhs.push(if flip {
            -target.coords()[r].clone()
        } else {
            target.coords()[r].clone()
        });
        basis.push(k + r);
    }
    let (x, value) = simplex_max(rows, rhs, basis, obj).expect("bounded by construction");
    if !value.is_zero() {
        return None;
    }
    let coeffs: Vec<Rat> = x[..k].to_vec();
    let mut check = Vector::zero(dim);
    for (c, g) in coeffs.iter().zip(gens) {
        assert!(!c.is_negative(), "negative coefficient from simplex");
        check = check.add(&g.scaled(c));
    }
    assert_eq!(&check, target, "combination fails to reproduce target");
    Some(coeffs)
}

/// Maximize `obj . x` over `rows . x = rhs`, `x >= 0`, starting from the basic
/// feasible solution given by `basis` (one basic column per row, unit in its
/// row, `rhs >= 0`). Bland's rule, so termination is guaranteed. Returns the
/// optimal point and value, or `None` if the program is unbounded.
fn simplex_max(
    mut rows: Vec<Vec<Rat>>,
    mut rhs: Vec<Rat>,
    mut basis: Vec<usize>,
    obj: Vec<Rat>,
) -> Option<(Vec<Rat>, Rat)> {
    let m = rows.len();
    let ncols = obj.len();
    debug_assert!(rhs.iter().all(|b| !b.is_negative()));
    // Price out the initial basis so reduced costs of basic columns are zero.
    let mut red = obj;
    let mut value = Rat::zero();
    for r in 0..m {
        let c = red[basis[r]].clone();
        if !c.is_zero() {
            for j in 0..ncols {
                let adj = &c * &rows[r][j];
                red[j] -= adj;
            }
            value += &c * &rhs[r];
        }
    }
    loop {
        // Bland: entering column = smallest index with positive reduced cost.
        let Some(enter) = (0..ncols).find(|&j| red[j].is_positive()) else {
            let mut x = vec![Rat::zero(); ncols];
            for r in 0..m {
                x[basis[r]] = rhs[r].clone();
            }
            return Some((x, value));
        };
        // Ratio test; ties broken by smallest basic variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for r in 0..m {
            if rows[r][enter].is_positive() {
                let ratio = &rhs[r] / &rows[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(lr) = leave else {
            return None; // unbounded
        };
        // Pivot on (lr, enter).
        let piv = rows[lr][enter].clone();
        for j in 0..ncols {
            rows[lr][j] /= &piv;
        }
        rhs[lr] /= &piv;
        for r in 0..m {
            if r != lr && !rows[r][enter].is_zero() {
                let f = rows[r][enter].clone();
                for j in 0..ncols {
                    let adj = &f * &rows[lr][j];
                    rows[r][j] -= adj;
                }
                let adj = &f * &rhs[lr];
                rhs[r] -= adj;
            }
        }
        let f = red[enter].clone();
        if !f.is_zero() {
            for j in 0..ncols {
                let adj = &f * &rows[lr][j];
                red[j] -= adj;
            }
            value += &f * &rhs[lr];
        }
        basis[lr] = enter;
    }
}

/// Gram-Schmidt orthogonalization without normalization; the output spans the
/// same flag of subspaces as the input, with exact rational entries.
pub fn gram_schmidt(basis: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(basis.len());
    for v in basis {
        let mut w = v.clone();
        for f in &out {
            let c = inner(v, f) / inner(f, f);
            w = w.sub(&f.scaled(&c));
        }
        assert!(!w.is_zero(), "gram_schmidt input not independent");
        out.push(w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(cs: &[i64]) -> Vector {
        Vector::from_ints(cs)
    }

    #[test]
    fn inner_products() {
        assert_eq!(inner(&v(&[1, 0]), &v(&[0, 1])), Rat::zero());
        // A-type root in standard coordinates has squared length 2.
        assert_eq!(inner(&v(&[1, -1, 0]), &v(&[1, -1, 0])), rat_int(2));
    }

    #[test]
    fn span_basis_examples() {
        assert!(span_basis(&[]).is_empty());
        assert_eq!(span_basis(&[v(&[1, 0]), v(&[2, 0])]), vec![v(&[1, 0])]);
        // The six A2 roots span a plane.
        let a2 = [
            v(&[1, -1, 0]),
            v(&[0, 1, -1]),
            v(&[1, 0, -1]),
            v(&[-1, 1, 0]),
            v(&[0, -1, 1]),
            v(&[-1, 0, 1]),
        ];
        assert_eq!(span_basis(&a2).len(), 2);
    }

    #[test]
    fn in_span_examples() {
        assert!(in_span(&v(&[0, 0]), &[]));
        assert!(in_span(&v(&[0, 0]), &[v(&[1, 1])]));
        // alpha1 is not in the span of alpha2 (A2 realization).
        assert!(!in_span(&v(&[1, -1, 0]), &[v(&[0, 1, -1])]));
        // alpha1+alpha2 lies in span{alpha1+alpha2, alpha3} (A3 realization).
        assert!(in_span(
            &v(&[1, 0, -1, 0]),
            &[v(&[1, 0, -1, 0]), v(&[0, 0, 1, -1])]
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            orthogonal_complement(&[], 2),
            vec![v(&[1, 0]), v(&[0, 1])]
        );
        assert!(orthogonal_complement(&[v(&[1, 0]), v(&[0, 1])], 2).is_empty());
        let basis = [v(&[1, 0, -1, 0]), v(&[0, 0, 1, -1])];
        let comp = orthogonal_complement(&basis, 4);
        assert_eq!(comp.len(), 2);
        for c in &comp {
            for b in &basis {
                assert_eq!(inner(c, b), Rat::zero());
            }
        }
    }

    #[test]
    fn feasibility_examples() {
        let x = strict_feasible(&[v(&[1, 0]), v(&[0, 1])], &[]).unwrap();
        assert!(x.coords()[0].is_positive() && x.coords()[1].is_positive());
        assert!(strict_feasible(&[v(&[1, 2]), v(&[-1, -2])], &[]).is_none());
        // Zero constraints restrict to a line.
        let y = strict_feasible(&[v(&[1, 0, 0])], &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(inner(&y, &v(&[0, 1, 0])).is_zero());
    }

    #[test]
    fn cone_membership() {
        // alpha1+alpha2 is the sum of alpha1 and alpha2.
        let a1 = v(&[1, -1, 0]);
        let a2 = v(&[0, 1, -1]);
        let s = v(&[1, 0, -1]);
        let c = nonneg_combination(&s, &[a1.clone(), a2.clone()]).unwrap();
        assert_eq!(c, vec![Rat::one(), Rat::one()]);
        // alpha1 is not a nonnegative combination of the other two positives.
        assert!(nonneg_combination(&a1, &[a2, s]).is_none());
    }

    #[test]
    fn gram_schmidt_orthogonalizes() {
        let g = gram_schmidt(&[v(&[1, 1, 0]), v(&[1, 0, 1])]);
        assert_eq!(inner(&g[0], &g[1]), Rat::zero());
    }

    #[test]
    fn reflection_matrix() {
        let m = Matrix::reflection(&v(&[1, -1, 0]));
        assert_eq!(m.apply(&v(&[1, -1, 0])), v(&[-1, 1, 0]));
        assert_eq!(m.apply(&v(&[1, 1, 0])), v(&[1, 1, 0]));
        assert!(m.mul(&m).is_identity());
    }
}
