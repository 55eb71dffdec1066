//! The Grassmann algebra on A (+) A* with its canonical graded Poisson
//! bracket (the big bracket), plus the conversions between superfunctions,
//! Gram matrices and bundle maps.
//!
//! Monomials are bitmasks over the 2n odd generators in the canonical order
//! e_1 < ... < e_n < xi^1 < ... < xi^n; bit i (i < n) is e_{i+1} and bit n+i
//! is xi^{i+1}. A superfunction is a sparse map mask -> coefficient with no
//! zero entries, so equality is map equality.
//!
//! Sign conventions are pinned operationally, not transcribed: the bracket is
//! the unique biderivation with {e_i, xi^j} = {xi^j, e_i} = delta_i^j that
//! satisfies the graded laws tested in `tests/bracket_laws.rs`, and the
//! encodings below are anchored by {id, mu} = mu, by the derived bracket
//! reducing to the Lie bracket, and by the deformed-bracket identity.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

pub type Mask = u32;

/// A bundle map A -> A (or A -> A*, A* -> A according to use) held as its
/// representing matrix. Vectors transform row-indexed, e_i -> sum_j R[i,j] b_j,
/// and formula compositions multiply representing matrices in the order the
/// maps are written (see `crate::hst`).
#[derive(Debug, Clone, PartialEq)]
pub struct EndoMatrix {
    pub mat: Matrix,
}

impl EndoMatrix {
    pub fn new(mat: Matrix) -> Self {
        assert!(mat.is_square());
        EndoMatrix { mat }
    }

    pub fn identity(n: usize) -> Self {
        EndoMatrix::new(Matrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.mat.rows()
    }

    pub fn square(&self) -> EndoMatrix {
        EndoMatrix::new(&self.mat * &self.mat)
    }

    /// Is this matrix c * identity for some scalar c?
    pub fn multiple_of_identity(&self) -> Option<Scalar> {
        let c = self.mat.get(0, 0).clone();
        for i in 0..self.n() {
            for j in 0..self.n() {
                let expect = if i == j { c.clone() } else { Scalar::from_int(0) };
                if *self.mat.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superfunction {
    n: usize,
    terms: BTreeMap<Mask, Scalar>,
}

fn mask_degree(mask: Mask) -> u32 {
    mask.count_ones()
}

/// Reordering sign for concatenating two disjoint ascending monomials.
fn wedge_sign(a: Mask, b: Mask) -> i32 {
    debug_assert_eq!(a & b, 0);
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// 1-based position of `bit` among the set bits of `mask`.
fn position(mask: Mask, bit: u32) -> u32 {
    (mask & ((1 << bit) - 1)).count_ones() + 1
}

impl Superfunction {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0 && n <= 16);
        Superfunction {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, mask: Mask, coeff: Scalar) -> Self {
        let mut f = Superfunction::zero(n);
        f.add_term(mask, coeff);
        f
    }

    /// The generator e_{i+1} (0-based index).
    pub fn e(n: usize, i: usize) -> Self {
        assert!(i < n);
        Superfunction::monomial(n, 1 << i, Scalar::from_int(1))
    }

    /// The generator xi^{i+1} (0-based index).
    pub fn xi(n: usize, i: usize) -> Self {
        assert!(i < n);
        Superfunction::monomial(n, 1 << (n + i), Scalar::from_int(1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: Mask) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(|| Scalar::from_int(0))
    }

    pub fn add_term(&mut self, mask: Mask, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    fn e_mask(&self) -> Mask {
        (1 << self.n) - 1
    }

    /// Bidegree (p, q) of a monomial: p counts A-type, q counts A*-type
    /// generators.
    pub fn mask_bidegree(&self, mask: Mask) -> (usize, usize) {
        let p = (mask & self.e_mask()).count_ones() as usize;
        let q = (mask >> self.n).count_ones() as usize;
        (p, q)
    }

    /// The common bidegree of all terms; `None` for 0 or mixed-degree input.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = self.mask_bidegree(*it.next()?);
        for m in it {
            if self.mask_bidegree(*m) != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn expect_bidegree(&self, p: usize, q: usize) -> Result<()> {
        if self.is_zero() {
            return Ok(());
        }
        match self.bidegree() {
            Some(b) if b == (p, q) => Ok(()),
            other => Err(Error::WrongBidegree {
                want_p: p,
                want_q: q,
                found: format!("{other:?}"),
            }),
        }
    }

    pub fn total_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = mask_degree(*it.next()?) as usize;
        for m in it {
            if mask_degree(*m) as usize != first {
                return None;
            }
        }
        Some(first)
    }

    fn check_same_n(&self, other: &Superfunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "superfunctions on {} and {} generators",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Superfunction) -> Superfunction {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Superfunction) -> Superfunction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Superfunction {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Superfunction {
        let mut out = Superfunction::zero(self.n);
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.terms() {
            out.add_term(m, c * s);
        }
        out
    }

    /// Graded-commutative product.
    pub fn wedge(&self, other: &Superfunction) -> Result<Superfunction> {
        self.check_same_n(other)?;
        let mut out = Superfunction::zero(self.n);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if ma & mb != 0 {
                    continue;
                }
                let sign = Scalar::from_int(wedge_sign(ma, mb) as i64);
                out.add_term(ma | mb, &(ca * cb) * &sign);
            }
        }
        Ok(out)
    }

    /// The big bracket, the degree (-1,-1) biderivation extending the duality
    /// pairing. For ascending monomials f = x_1...x_m, g = y_1...y_q the
    /// single-pair contraction at (s, t) carries the sign
    /// (-1)^((m-s)+(t-1)) times the reordering sign of the leftover wedge.
    pub fn big_bracket(&self, other: &Superfunction) -> Result<Superfunction> {
        self.check_same_n(other)?;
        let n = self.n as u32;
        let mut out = Superfunction::zero(self.n);
        for (ma, ca) in self.terms() {
            let m_deg = mask_degree(ma);
            for (mb, cb) in other.terms() {
                let coeff = ca * cb;
                let mut bits = ma;
                while bits != 0 {
                    let i = bits.trailing_zeros();
                    bits &= bits - 1;
                    let partner = if i < n { i + n } else { i - n };
                    if mb & (1 << partner) == 0 {
                        continue;
                    }
                    let ra = ma & !(1 << i);
                    let rb = mb & !(1 << partner);
                    if ra & rb != 0 {
                        continue;
                    }
                    let s = position(ma, i);
                    let t = position(mb, partner);
                    let mut sign = if (m_deg - s + t - 1) % 2 == 0 { 1 } else { -1 };
                    sign *= wedge_sign(ra, rb);
                    out.add_term(ra | rb, &coeff * &Scalar::from_int(sign as i64));
                }
            }
        }
        Ok(out)
    }

    /// Evaluation in the determinant convention, realized by iterated
    /// contraction: f(a_1, ..., a_k) = {a_k, {..., {a_1, f}...}}. Vector
    /// arguments pair with xi-content, covector arguments with e-content.
    pub fn evaluate(&self, args: &[Arg]) -> Result<Scalar> {
        let want = self
            .total_degree()
            .ok_or_else(|| Error::WrongBidegree {
                want_p: 0,
                want_q: 0,
                found: "inhomogeneous".into(),
            })?;
        if args.len() != want {
            return Err(Error::ArityMismatch {
                want,
                got: args.len(),
            });
        }
        let mut acc = self.clone();
        for arg in args {
            let gen = match arg {
                Arg::Vector(i) => Superfunction::e(self.n, *i),
                Arg::Covector(i) => Superfunction::xi(self.n, *i),
            };
            acc = gen.big_bracket(&acc)?;
        }
        Ok(acc.coeff(0))
    }

    /// Applies the linear generator substitution xi^j -> sum_a images[j][a],
    /// leaving the e generators alone. Used for pullbacks.
    fn substitute_xi(&self, images: &[Superfunction]) -> Result<Superfunction> {
        let n = self.n;
        let mut out = Superfunction::zero(n);
        for (mask, coeff) in self.terms() {
            let e_part = mask & self.e_mask();
            let mut acc = Superfunction::monomial(n, e_part, coeff.clone());
            let mut rest = mask >> n;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc = acc.wedge(&images[j])?;
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// e <-> xi exchange; an automorphism of the bracket used to re-read
    /// structures on A* as structures on a Lie algebra with dual basis.
    pub fn swap_duality(&self) -> Superfunction {
        let n = self.n;
        let mut out = Superfunction::zero(n);
        for (mask, coeff) in self.terms() {
            let (p, q) = self.mask_bidegree(mask);
            let swapped = ((mask & self.e_mask()) << n) | (mask >> n);
            let sign = if (p * q) % 2 == 0 { 1 } else { -1 };
            out.add_term(swapped, coeff * &Scalar::from_int(sign));
        }
        out
    }

    /// Human-readable and JSON form: sorted (generator names, coefficient)
    /// pairs. Labels name the e generators; xi generators are the lower-cased
    /// starred duals.
    pub fn serialize(&self, labels: &[String]) -> Vec<(Vec<String>, String)> {
        assert_eq!(labels.len(), self.n);
        self.terms()
            .map(|(mask, coeff)| {
                let mut gens = Vec::new();
                for i in 0..self.n {
                    if mask & (1 << i) != 0 {
                        gens.push(labels[i].clone());
                    }
                }
                for i in 0..self.n {
                    if mask & (1 << (self.n + i)) != 0 {
                        gens.push(format!("{}*", labels[i].to_lowercase()));
                    }
                }
                (gens, coeff.to_string())
            })
            .collect()
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.serialize(labels)
            .into_iter()
            .map(|(gens, c)| format!("({}) {}", c, gens.join("^")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// An evaluation argument: a basis vector or a basis covector (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arg {
    Vector(usize),
    Covector(usize),
}

impl fmt::Display for Superfunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.n).map(|i| format!("e{i}")).collect();
        write!(f, "{}", self.render(&labels))
    }
}

/// sum_{i<j} G_ij xi^i xi^j; evaluation satisfies omega(e_i, e_j) = G_ij.
pub fn from_gram_form(g: &Matrix) -> Result<Superfunction> {
    gram_to_superfunction(g, false)
}

/// sum_{i<j} G_ij e_i e_j.
pub fn from_gram_bivector(g: &Matrix) -> Result<Superfunction> {
    gram_to_superfunction(g, true)
}

fn gram_to_superfunction(g: &Matrix, vectors: bool) -> Result<Superfunction> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch("Gram matrix must be square".into()));
    }
    if !g.is_antisymmetric() {
        let bad = (0..g.rows())
            .flat_map(|i| (0..g.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| *g.get(i, j) != -g.get(j, i).clone())
            .unwrap();
        return Err(Error::NotAntisymmetric {
            row: bad.0 + 1,
            col: bad.1 + 1,
        });
    }
    let n = g.rows();
    let mut out = Superfunction::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let mask = if vectors {
                (1 << i) | (1 << j)
            } else {
                (1 << (n + i)) | (1 << (n + j))
            };
            out.add_term(mask as Mask, g.get(i, j).clone());
        }
    }
    Ok(out)
}

/// Gram matrix of a homogeneous (0,2) form (or (2,0) bivector).
pub fn to_gram(f: &Superfunction) -> Result<Matrix> {
    let n = f.n();
    let bid = f.bidegree();
    let vectors = match bid {
        Some((2, 0)) => true,
        Some((0, 2)) => false,
        None if f.is_zero() => false,
        other => {
            return Err(Error::WrongBidegree {
                want_p: 0,
                want_q: 2,
                found: format!("{other:?}"),
            })
        }
    };
    let mut g = Matrix::zero(n, n);
    for (mask, coeff) in f.terms() {
        let m = if vectors { mask } else { mask >> n };
        let i = m.trailing_zeros() as usize;
        let j = (m & (m - 1)).trailing_zeros() as usize;
        g.set(i, j, coeff.clone());
        g.set(j, i, -coeff.clone());
    }
    Ok(g)
}

/// The (1,1) encoding of a bundle map N with representing matrix R:
/// sum_ij R[i,j] xi^i e_j. Under u -> {u, enc(N)} sections of A (+) A*
/// transform by N on vectors and by -N* on covectors, and {enc(id), mu} = mu.
pub fn from_endomorphism(r: &EndoMatrix) -> Superfunction {
    let n = r.n();
    let mut out = Superfunction::zero(n);
    for i in 0..n {
        for j in 0..n {
            // xi^i e_j = -e_j xi^i in canonical order
            let mask = ((1 << j) | (1 << (n + i))) as Mask;
            out.add_term(mask, -r.mat.get(i, j).clone());
        }
    }
    out
}

pub fn to_endomorphism(f: &Superfunction) -> Result<EndoMatrix> {
    let n = f.n();
    if !f.is_zero() {
        f.expect_bidegree(1, 1)?;
    }
    let mut r = Matrix::zero(n, n);
    for (mask, coeff) in f.terms() {
        let j = (mask & ((1 << n) - 1)).trailing_zeros() as usize;
        let i = (mask >> n).trailing_zeros() as usize;
        r.set(i, j, -coeff.clone());
    }
    Ok(EndoMatrix::new(r))
}

/// Pullback of a (0,k) form along a bundle map, (R*phi)(X_1,...,X_k) =
/// phi(N X_1, ..., N X_k).
///
/// The stored representing matrices follow the printed convention, in which
/// N(e_a) reads off column a: N(e_a) = sum_b R[b,a] e_b. The su(3) and
/// S^3 x (S^1)^5 fixtures pin this choice; their transition matrices are not
/// antisymmetric, so row and column action give genuinely different 3-forms
/// and only the column action reproduces the torsion forms those structures
/// actually have.
pub fn pullback_form(phi: &Superfunction, r: &EndoMatrix) -> Result<Superfunction> {
    if !phi.is_zero() {
        let (p, _) = phi.bidegree().ok_or(Error::WrongBidegree {
            want_p: 0,
            want_q: 0,
            found: "inhomogeneous".into(),
        })?;
        if p != 0 {
            return Err(Error::WrongBidegree {
                want_p: 0,
                want_q: phi.total_degree().unwrap_or(0),
                found: "has A-type content".into(),
            });
        }
    }
    let n = phi.n();
    // xi^j -> sum_a R[j,a] xi^a reproduces phi(N., ..., N.)
    let images: Vec<Superfunction> = (0..n)
        .map(|j| {
            let mut img = Superfunction::zero(n);
            for a in 0..n {
                img.add_term((1 << (n + a)) as Mask, r.mat.get(j, a).clone());
            }
            img
        })
        .collect();
    phi.substitute_xi(&images)
}

/// The k-vector phi(pi# ., ..., pi# .) for a (0,k) form phi and a bivector
/// with Gram matrix P.
pub fn pullback_by_sharp(phi: &Superfunction, p: &Matrix) -> Result<Superfunction> {
    if !phi.is_zero() {
        let (pp, _) = phi.bidegree().ok_or(Error::WrongBidegree {
            want_p: 0,
            want_q: 0,
            found: "inhomogeneous".into(),
        })?;
        if pp != 0 {
            return Err(Error::WrongBidegree {
                want_p: 0,
                want_q: phi.total_degree().unwrap_or(0),
                found: "has A-type content".into(),
            });
        }
    }
    let n = phi.n();
    // xi^j -> sum_a P[a,j] e_a
    let images: Vec<Superfunction> = (0..n)
        .map(|j| {
            let mut img = Superfunction::zero(n);
            for a in 0..n {
                img.add_term((1 << a) as Mask, p.get(a, j).clone());
            }
            img
        })
        .collect();
    phi.substitute_xi(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn odd_generators_square_to_zero() {
        let e1 = Superfunction::e(2, 0);
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn odd_generators_anticommute() {
        let x1 = Superfunction::xi(2, 0);
        let x2 = Superfunction::xi(2, 1);
        let ab = x1.wedge(&x2).unwrap();
        let ba = x2.wedge(&x1).unwrap();
        assert_eq!(ab, ba.neg());
    }

    #[test]
    fn four_fold_wedge_sign() {
        // (a1 ^ b1) ^ (z ^ c1) in an 8-dim frame: all xi-type, coefficient +1
        let n = 8;
        let a1 = Superfunction::xi(n, 0);
        let b1 = Superfunction::xi(n, 2);
        let z = Superfunction::xi(n, 4);
        let c1 = Superfunction::xi(n, 5);
        let left = a1.wedge(&b1).unwrap();
        let right = z.wedge(&c1).unwrap();
        let prod = left.wedge(&right).unwrap();
        let mask = (1u32 << (n + 0)) | (1 << (n + 2)) | (1 << (n + 4)) | (1 << (n + 5));
        assert_eq!(prod, Superfunction::monomial(n, mask, s(1)));
        assert_eq!(prod.bidegree(), Some((0, 4)));
    }

    #[test]
    fn canonical_pairing() {
        let e1 = Superfunction::e(3, 0);
        let x1 = Superfunction::xi(3, 0);
        let x2 = Superfunction::xi(3, 1);
        assert_eq!(e1.big_bracket(&x1).unwrap(), Superfunction::monomial(3, 0, s(1)));
        assert_eq!(x1.big_bracket(&e1).unwrap(), Superfunction::monomial(3, 0, s(1)));
        assert!(e1.big_bracket(&x2).unwrap().is_zero());
        assert!(e1.big_bracket(&e1).unwrap().is_zero());
    }

    #[test]
    fn gram_form_round_trip() {
        let g = Matrix::from_rows(vec![
            vec![s(0), s(1)],
            vec![s(-1), s(0)],
        ])
        .unwrap();
        let f = from_gram_form(&g).unwrap();
        let mask = (1u32 << 2) | (1 << 3);
        assert_eq!(f, Superfunction::monomial(2, mask, s(1)));
        assert_eq!(to_gram(&f).unwrap(), g);
        assert_eq!(
            f.evaluate(&[Arg::Vector(0), Arg::Vector(1)]).unwrap(),
            s(1)
        );
        assert_eq!(
            f.evaluate(&[Arg::Vector(1), Arg::Vector(0)]).unwrap(),
            s(-1)
        );
    }

    #[test]
    fn zero_gram_is_zero() {
        let g = Matrix::zero(3, 3);
        assert!(from_gram_form(&g).unwrap().is_zero());
        assert!(from_gram_bivector(&g).unwrap().is_zero());
    }

    #[test]
    fn gram_rejects_non_antisymmetric() {
        let g = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]).unwrap();
        assert!(matches!(
            from_gram_form(&g),
            Err(Error::NotAntisymmetric { .. })
        ));
    }

    #[test]
    fn endomorphism_round_trip() {
        let r = EndoMatrix::new(
            Matrix::from_rows(vec![
                vec![s(2), s(-1), s(0)],
                vec![s(3), s(0), s(5)],
                vec![s(0), s(7), s(1)],
            ])
            .unwrap(),
        );
        let enc = from_endomorphism(&r);
        assert_eq!(enc.bidegree(), Some((1, 1)));
        assert_eq!(to_endomorphism(&enc).unwrap(), r);
    }

    #[test]
    fn endomorphism_acts_as_dn() {
        // u -> {u, enc(N)} is N on vectors and -N* on covectors
        let r = EndoMatrix::new(
            Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]).unwrap(),
        );
        let enc = from_endomorphism(&r);
        let e1 = Superfunction::e(2, 0);
        let image = e1.big_bracket(&enc).unwrap();
        let mut expect = Superfunction::zero(2);
        expect.add_term(1, s(1));
        expect.add_term(2, s(2));
        assert_eq!(image, expect);

        let x2 = Superfunction::xi(2, 1);
        let image = x2.big_bracket(&enc).unwrap();
        let mut expect = Superfunction::zero(2);
        expect.add_term(1 << 2, s(-2));
        expect.add_term(1 << 3, s(-4));
        assert_eq!(image, expect);
    }

    #[test]
    fn repeated_argument_evaluates_to_zero() {
        let n = 3;
        let f = Superfunction::xi(n, 0)
            .wedge(&Superfunction::xi(n, 1))
            .unwrap();
        assert_eq!(
            f.evaluate(&[Arg::Vector(0), Arg::Vector(0)]).unwrap(),
            s(0)
        );
    }

    #[test]
    fn pullback_by_identity_is_identity() {
        let n = 3;
        let f = Superfunction::xi(n, 0)
            .wedge(&Superfunction::xi(n, 2))
            .unwrap();
        let id = EndoMatrix::identity(n);
        assert_eq!(pullback_form(&f, &id).unwrap(), f);
    }

    #[test]
    fn pullback_by_sharp_of_zero() {
        let z = Superfunction::zero(4);
        assert!(pullback_by_sharp(&z, &Matrix::zero(4, 4)).unwrap().is_zero());
    }

    #[test]
    fn duality_swap_is_involutive_bracket_automorphism() {
        let n = 3;
        let f = Superfunction::e(n, 0)
            .wedge(&Superfunction::xi(n, 1))
            .unwrap();
        let g = Superfunction::e(n, 1)
            .wedge(&Superfunction::xi(n, 0))
            .unwrap()
            .wedge(&Superfunction::xi(n, 2))
            .unwrap();
        assert_eq!(f.swap_duality().swap_duality(), f);
        let lhs = f.big_bracket(&g).unwrap().swap_duality();
        let rhs = f.swap_duality().big_bracket(&g.swap_duality()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serialization_names() {
        let labels: Vec<String> = ["A1", "B1"].iter().map(|s| s.to_string()).collect();
        let f = Superfunction::e(2, 0)
            .wedge(&Superfunction::xi(2, 1))
            .unwrap();
        let ser = f.serialize(&labels);
        assert_eq!(ser, vec![(vec!["A1".to_string(), "b1*".to_string()], "1".to_string())]);
    }
}
