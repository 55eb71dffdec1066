//! Lie algebras as Lie algebroids over a point: structure constants, the
//! degree (1,2) superfunction mu, the Chevalley-Eilenberg differential, the
//! Schouten-Nijenhuis bracket, Nijenhuis torsion, the Frolicher-Nijenhuis
//! bracket, deformation by an endomorphism and the dual structure induced by
//! a non-degenerate twisted Poisson bivector.
//!
//! Operations with two natural routes (big bracket vs. direct combinatorics)
//! compute both and insist they agree; a verifier should not trust a single
//! transcription of a sign convention.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{QuadField, Scalar};
use crate::superalgebra::{
    from_endomorphism, EndoMatrix, Mask, Superfunction,
};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub field: QuadField,
    pub labels: Vec<String>,
    /// c_{ij}^k for i < j (0-based); the antisymmetric completion is implied.
    c: BTreeMap<(usize, usize, usize), Scalar>,
    pub mu: Superfunction,
    /// Whether {mu, mu} = 0; pre-Lie input is tolerated and flagged.
    pub jacobi_ok: bool,
}

/// One bracket entry c_{ij}^k, 0-based.
pub type BracketEntry = (usize, usize, usize, Scalar);

impl LieAlgebra {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Builds the algebra from bracket entries [e_i, e_j] = sum_k c_{ij}^k e_k.
    /// Entries may come in either index order; duplicates (in either order)
    /// are rejected rather than merged.
    pub fn new(field: QuadField, labels: Vec<String>, entries: &[BracketEntry]) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > 16 {
            return Err(Error::Invalid(format!("unsupported dimension {n}")));
        }
        let mut c: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(Error::Invalid(format!(
                    "bracket index out of range: ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric { row: i + 1, col: j + 1 });
                }
                continue;
            }
            let (key, value) = if i < j {
                ((i, j, k), v.clone())
            } else {
                ((j, i, k), -v.clone())
            };
            if c.contains_key(&key) {
                return Err(Error::DuplicateBracket(key.0 + 1, key.1 + 1, key.2 + 1));
            }
            if !value.is_zero() {
                c.insert(key, value);
            }
        }
        let mu = mu_from_constants(n, &c);
        let jacobi_ok = mu.big_bracket(&mu)?.is_zero();
        Ok(LieAlgebra {
            field,
            labels,
            c,
            mu,
            jacobi_ok,
        })
    }

    pub fn abelian(field: QuadField, n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("X{i}")).collect();
        LieAlgebra::new(field, labels, &[]).expect("abelian algebra")
    }

    /// Reads the structure constants off a bidegree (1,2) superfunction via
    /// the derived bracket [X, Y] = {{X, mu}, Y}.
    pub fn from_mu(field: QuadField, labels: Vec<String>, mu: &Superfunction) -> Result<Self> {
        let n = labels.len();
        if n != mu.n() {
            return Err(Error::DimensionMismatch("labels vs mu".into()));
        }
        if !mu.is_zero() {
            mu.expect_bidegree(1, 2)?;
        }
        let mut entries = Vec::new();
        for i in 0..n {
            let di = Superfunction::e(n, i).big_bracket(mu)?;
            for j in (i + 1)..n {
                let bij = di.big_bracket(&Superfunction::e(n, j))?;
                for k in 0..n {
                    let coeff = bij.coeff(1 << k);
                    if !coeff.is_zero() {
                        entries.push((i, j, k, coeff));
                    }
                }
            }
        }
        let algebra = LieAlgebra::new(field, labels, &entries)?;
        debug_assert_eq!(&algebra.mu, mu, "mu does not encode an antisymmetric bracket");
        Ok(algebra)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        if i == j {
            return Scalar::from_int(0);
        }
        if i < j {
            self.c.get(&(i, j, k)).cloned().unwrap_or_else(|| Scalar::from_int(0))
        } else {
            -self
                .c
                .get(&(j, i, k))
                .cloned()
                .unwrap_or_else(|| Scalar::from_int(0))
        }
    }

    pub fn bracket_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.c.iter()
    }

    /// [e_i, e_j] in basis coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.n()).map(|k| self.structure_constant(i, j, k)).collect()
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_sections(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.n();
        let mut out = vec![Scalar::from_int(0); n];
        for (&(i, j, k), c) in &self.c {
            // c_{ij}^k (x_i y_j - x_j y_i)
            let left = &x[i] * &y[j];
            let right = &x[j] * &y[i];
            out[k] += &(c * &(&left - &right));
        }
        out
    }

    /// {mu, mu}; zero exactly when the Jacobi identity holds.
    pub fn jacobi_defect(&self) -> Superfunction {
        self.mu.big_bracket(&self.mu).expect("same n")
    }

    /// Direct expansion of [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j];
    /// independent of the big bracket.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.n();
        let mut out = vec![Scalar::from_int(0); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket_basis(a, b);
            let mut unit = vec![Scalar::from_int(0); n];
            unit[c] = Scalar::from_int(1);
            let term = self.bracket_sections(&inner, &unit);
            for t in 0..n {
                out[t] += &term[t];
            }
        }
        out
    }

    /// First basis triple where the Jacobi identity fails, if any.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if self.jacobiator(i, j, k).iter().any(|s| !s.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Chevalley-Eilenberg differential of a (0,k) form, computed as {mu, phi}
    /// and cross-checked against the combinatorial sum. The sign convention is
    /// d alpha (X, Y) = -alpha([X, Y]).
    pub fn ce_differential(&self, phi: &Superfunction) -> Result<Superfunction> {
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
        let bracket_route = self.mu.big_bracket(phi)?;
        let combinatorial = self.ce_differential_combinatorial(phi)?;
        assert_eq!(
            bracket_route, combinatorial,
            "big-bracket and combinatorial CE differentials disagree"
        );
        Ok(bracket_route)
    }

    /// The combinatorial route: d phi(X_0..X_k) =
    /// sum_{s<t} (-1)^(s+t) phi([X_s, X_t], X_0, ..^s, ..^t, .., X_k).
    pub fn ce_differential_combinatorial(&self, phi: &Superfunction) -> Result<Superfunction> {
        let n = self.n();
        if phi.is_zero() {
            return Ok(Superfunction::zero(n));
        }
        let k = phi.total_degree().ok_or(Error::WrongBidegree {
            want_p: 0,
            want_q: 0,
            found: "inhomogeneous".into(),
        })?;
        let mut out = Superfunction::zero(n);
        for tuple in ascending_tuples(n, k + 1) {
            let mut value = Scalar::from_int(0);
            for s in 0..tuple.len() {
                for t in (s + 1)..tuple.len() {
                    let section = self.bracket_basis(tuple[s], tuple[t]);
                    let rest: Vec<usize> = tuple
                        .iter()
                        .enumerate()
                        .filter(|(idx, _)| *idx != s && *idx != t)
                        .map(|(_, &v)| v)
                        .collect();
                    let mut term = Scalar::from_int(0);
                    for (m, coeff) in section.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut args = Vec::with_capacity(k);
                        args.push(m);
                        args.extend_from_slice(&rest);
                        term += &(coeff * &eval_form_on_basis(phi, &args));
                    }
                    if (s + t) % 2 == 1 {
                        term = -term;
                    }
                    value += &term;
                }
            }
            if !value.is_zero() {
                let mut mask: Mask = 0;
                for &i in &tuple {
                    mask |= 1 << (n + i);
                }
                out.add_term(mask, value);
            }
        }
        Ok(out)
    }

    /// Schouten-Nijenhuis bracket of multivectors as the derived bracket
    /// {{P, mu}, Q}; the normalization is anchored by
    /// [pi, pi] = 2 d omega(pi# ., pi# ., pi# .) for inverse pairs.
    pub fn schouten(&self, p: &Superfunction, q: &Superfunction) -> Result<Superfunction> {
        for f in [p, q] {
            if !f.is_zero() {
                let (_, qq) = f.bidegree().ok_or(Error::WrongBidegree {
                    want_p: 0,
                    want_q: 0,
                    found: "inhomogeneous".into(),
                })?;
                if qq != 0 {
                    return Err(Error::WrongBidegree {
                        want_p: f.total_degree().unwrap_or(0),
                        want_q: 0,
                        found: "has A*-type content".into(),
                    });
                }
            }
        }
        p.big_bracket(&self.mu)?.big_bracket(q)
    }

    /// mu_N = {enc(N), mu}; realizes [X,Y]_N = [NX,Y] + [X,NY] - N[X,Y].
    pub fn deformed_mu(&self, n_endo: &EndoMatrix) -> Result<Superfunction> {
        from_endomorphism(n_endo).big_bracket(&self.mu)
    }

    /// The deformed algebra (A, mu_N). Jacobi status is recorded, not assumed.
    pub fn deform(&self, n_endo: &EndoMatrix) -> Result<LieAlgebra> {
        let mu_n = self.deformed_mu(n_endo)?;
        LieAlgebra::from_mu(self.field, self.labels.clone(), &mu_n)
    }

    /// Nijenhuis torsion of N through both routes: the section formula
    /// T(X,Y) = [NX,NY] - N([NX,Y] + [X,NY] - N[X,Y]) and the superfunction
    /// (mu_{N,N} - mu_{N^2}) / 2. Both must agree on every basis pair.
    pub fn nijenhuis_torsion(&self, n_endo: &EndoMatrix) -> Result<Torsion> {
        let n = self.n();
        let section = BilinearWitness::from_fn(n, |i, j| {
            let xi = basis_coords(n, i);
            let xj = basis_coords(n, j);
            let nxi = apply_endo(n_endo, &xi);
            let nxj = apply_endo(n_endo, &xj);
            let t1 = self.bracket_sections(&nxi, &nxj);
            let mut inner = self.bracket_sections(&nxi, &xj);
            let b2 = self.bracket_sections(&xi, &nxj);
            let nb = apply_endo(n_endo, &self.bracket_sections(&xi, &xj));
            for k in 0..n {
                inner[k] += &b2[k];
                inner[k] = &inner[k] - &nb[k];
            }
            let t2 = apply_endo(n_endo, &inner);
            (0..n).map(|k| &t1[k] - &t2[k]).collect()
        });

        let enc = from_endomorphism(n_endo);
        let mu_nn = enc.big_bracket(&enc.big_bracket(&self.mu)?)?;
        let mu_n2 = from_endomorphism(&n_endo.square()).big_bracket(&self.mu)?;
        let superfunction = mu_nn.sub(&mu_n2).scale(&Scalar::rational(1, 2));

        let from_sf = BilinearWitness::from_superfunction(&superfunction)?;
        assert_eq!(
            section, from_sf,
            "section and superfunction torsion routes disagree"
        );
        Ok(Torsion {
            witness: section,
            superfunction,
        })
    }

    /// Frolicher-Nijenhuis bracket [I,J]_FN = {{I, mu}, J} + {I o J, mu},
    /// with the composition encoded from the matrix product; for anticommuting
    /// pairs that encoding coincides with (1/2){J, I}, which is asserted.
    pub fn fn_bracket(&self, i_endo: &EndoMatrix, j_endo: &EndoMatrix) -> Result<FnBracket> {
        let i_enc = from_endomorphism(i_endo);
        let j_enc = from_endomorphism(j_endo);
        // I o J applied to a row vector is x R_J R_I
        let comp = EndoMatrix::new(&j_endo.mat * &i_endo.mat);
        let comp_enc = from_endomorphism(&comp);

        let anticommute = (&(&i_endo.mat * &j_endo.mat) + &(&j_endo.mat * &i_endo.mat)).is_zero();
        if anticommute {
            let half_jb = j_enc
                .big_bracket(&i_enc)?
                .scale(&Scalar::rational(1, 2));
            assert_eq!(
                half_jb, comp_enc,
                "composition anchor (1/2){{J, I}} failed for anticommuting pair"
            );
        }

        let superfunction = i_enc
            .big_bracket(&self.mu)?
            .big_bracket(&j_enc)?
            .add(&comp_enc.big_bracket(&self.mu)?);
        let witness = BilinearWitness::from_superfunction(&superfunction)?;
        Ok(FnBracket {
            witness,
            superfunction,
        })
    }

    /// gamma^pi = mu_pi + (1/2){omega, [pi, pi]}, the Lie structure induced on
    /// A* by a non-degenerate twisted Poisson bivector, together with the
    /// intermediate identities of its flatness proof.
    pub fn dual_structure(&self, omega_gram: &Matrix, pi_gram: &Matrix) -> Result<DualStructure> {
        let prod = pi_gram * omega_gram;
        if !prod.is_identity() {
            return Err(Error::NotInverse);
        }
        let omega = crate::superalgebra::from_gram_form(omega_gram)?;
        let pi = crate::superalgebra::from_gram_bivector(pi_gram)?;
        let mu_pi = pi.big_bracket(&self.mu)?;
        let pipi = self.schouten(&pi, &pi)?;
        let gamma = mu_pi.add(
            &omega
                .big_bracket(&pipi)?
                .scale(&Scalar::rational(1, 2)),
        );
        let gamma_bracket = gamma.big_bracket(&gamma)?;

        // intermediate identities from the flatness computation
        let lhs1 = omega.big_bracket(&pipi)?.big_bracket(&omega)?;
        let rhs1 = pi
            .big_bracket(&omega.big_bracket(&self.mu)?)?
            .scale(&Scalar::from_int(4));
        let id_bracket_omega = lhs1 == rhs1;

        let id_mu_pi_squared =
            mu_pi.big_bracket(&mu_pi)? == self.mu.big_bracket(&pipi)?;

        let id_mu_pi_pipi = mu_pi.big_bracket(&pipi)?.is_zero();

        Ok(DualStructure {
            gamma,
            gamma_bracket,
            id_bracket_omega,
            id_mu_pi_squared,
            id_mu_pi_pipi,
        })
    }
}

fn mu_from_constants(n: usize, c: &BTreeMap<(usize, usize, usize), Scalar>) -> Superfunction {
    // Stored as -sum_{i<j} c_{ij}^k e_k xi^i xi^j, the sign that makes the
    // derived bracket of mu reproduce [.,.] and d alpha (X,Y) = -alpha([X,Y]).
    let mut mu = Superfunction::zero(n);
    for (&(i, j, k), v) in c {
        let mask: Mask = (1 << k) | (1 << (n + i)) | (1 << (n + j));
        mu.add_term(mask, -v.clone());
    }
    mu
}

pub fn basis_coords(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::from_int(0); n];
    v[i] = Scalar::from_int(1);
    v
}

/// Row-indexed action: out_k = sum_a x_a R[a, k].
pub fn apply_endo(endo: &EndoMatrix, x: &[Scalar]) -> Vec<Scalar> {
    let n = endo.n();
    (0..n)
        .map(|k| {
            let mut acc = Scalar::from_int(0);
            for a in 0..n {
                if !x[a].is_zero() {
                    acc += &(&x[a] * endo.mat.get(a, k));
                }
            }
            acc
        })
        .collect()
}

/// Direct determinant-convention evaluation of a (0,k) form on basis vectors;
/// independent of the big bracket, used by oracles.
pub fn eval_form_on_basis(phi: &Superfunction, args: &[usize]) -> Scalar {
    let n = phi.n();
    let mut target: Mask = 0;
    for &a in args {
        let bit = 1 << (n + a);
        if target & bit != 0 {
            return Scalar::from_int(0); // repeated argument
        }
        target |= bit;
    }
    let coeff = phi.coeff(target);
    if coeff.is_zero() {
        return coeff;
    }
    // parity of the permutation sorting args ascending
    let mut inversions = 0usize;
    for s in 0..args.len() {
        for t in (s + 1)..args.len() {
            if args[s] > args[t] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        coeff
    } else {
        -coeff
    }
}

pub fn ascending_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// A vector-valued antisymmetric bilinear map on basis pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearWitness {
    n: usize,
    entries: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl BilinearWitness {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Vec<Scalar>) -> Self {
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = f(i, j);
                if v.iter().any(|s| !s.is_zero()) {
                    entries.insert((i, j), v);
                }
            }
        }
        BilinearWitness { n, entries }
    }

    /// Reads a bidegree (1,2) superfunction as a vector-valued 2-form through
    /// the derived-bracket pairing T(X_i, X_j) = {{X_i, T}, X_j}, the same
    /// pairing that turns mu into the Lie bracket.
    pub fn from_superfunction(t: &Superfunction) -> Result<Self> {
        if !t.is_zero() {
            t.expect_bidegree(1, 2)?;
        }
        let n = t.n();
        let mut entries = BTreeMap::new();
        for i in 0..n {
            let ti = Superfunction::e(n, i).big_bracket(t)?;
            for j in (i + 1)..n {
                let tij = ti.big_bracket(&Superfunction::e(n, j))?;
                let v: Vec<Scalar> = (0..n).map(|k| tij.coeff(1 << k)).collect();
                if v.iter().any(|s| !s.is_zero()) {
                    entries.insert((i, j), v);
                }
            }
        }
        Ok(BilinearWitness { n, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, i: usize, j: usize) -> Vec<Scalar> {
        assert!(i != j);
        if i < j {
            self.entries
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Scalar::from_int(0); self.n])
        } else {
            self.value(j, i).into_iter().map(|s| -s).collect()
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut entries = BTreeMap::new();
        for (k, v) in &self.entries {
            entries.insert(*k, v.iter().map(|x| x * s).collect());
        }
        BilinearWitness { n: self.n, entries }
    }

    pub fn first_nonzero_pair(&self) -> Option<(usize, usize)> {
        self.entries.keys().next().copied()
    }
}

#[derive(Debug, Clone)]
pub struct Torsion {
    pub witness: BilinearWitness,
    /// (mu_{N,N} - mu_{N^2}) / 2 as a bidegree (1,2) superfunction.
    pub superfunction: Superfunction,
}

#[derive(Debug, Clone)]
pub struct FnBracket {
    pub witness: BilinearWitness,
    pub superfunction: Superfunction,
}

#[derive(Debug, Clone)]
pub struct DualStructure {
    /// gamma^pi, bidegree (2,1).
    pub gamma: Superfunction,
    /// {gamma, gamma}; zero exactly when gamma is a Lie structure on A*.
    pub gamma_bracket: Superfunction,
    /// {{omega, [pi,pi]}, omega} = 4 {pi, {omega, mu}}
    pub id_bracket_omega: bool,
    /// {mu_pi, mu_pi} = {mu, [pi,pi]}
    pub id_mu_pi_squared: bool,
    /// {mu_pi, [pi,pi]} = 0
    pub id_mu_pi_pipi: bool,
}

impl DualStructure {
    pub fn flat(&self) -> bool {
        self.gamma_bracket.is_zero()
            && self.id_bracket_omega
            && self.id_mu_pi_squared
            && self.id_mu_pi_pipi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DEFAULT_D;

    fn field() -> QuadField {
        QuadField::new(DEFAULT_D).unwrap()
    }

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn heisenberg_like() -> LieAlgebra {
        // [A1,B1] = Z, [A2,B2] = -Z on basis (A1,A2,B1,B2,Z,C1,C2,C3)
        let labels = ["A1", "A2", "B1", "B2", "Z", "C1", "C2", "C3"]
            .iter()
            .map(|x| x.to_string())
            .collect();
        LieAlgebra::new(
            field(),
            labels,
            &[(0, 2, 4, s(1)), (1, 3, 4, s(-1))],
        )
        .unwrap()
    }

    #[test]
    fn r8_algebra_is_lie() {
        let l = heisenberg_like();
        assert!(l.jacobi_ok);
        assert!(l.jacobi_defect().is_zero());
        assert!(l.jacobi_witness().is_none());
    }

    #[test]
    fn sp1_plus_abelian_is_lie() {
        let labels = ["A2", "A3", "A4", "A1", "A5", "A6", "A7", "A8"]
            .iter()
            .map(|x| x.to_string())
            .collect();
        let l = LieAlgebra::new(
            field(),
            labels,
            &[(0, 1, 2, s(2)), (1, 2, 0, s(2)), (2, 0, 1, s(2))],
        )
        .unwrap();
        assert!(l.jacobi_ok);
    }

    #[test]
    fn non_antisymmetric_rejected() {
        let labels = vec!["X1".into(), "X2".into(), "X3".into()];
        let err = LieAlgebra::new(
            field(),
            labels,
            &[(0, 1, 2, s(1)), (1, 0, 2, s(1))],
        );
        assert!(matches!(err, Err(Error::DuplicateBracket(..))));
        let labels = vec!["X1".into(), "X2".into()];
        let err = LieAlgebra::new(field(), labels, &[(0, 0, 1, s(1))]);
        assert!(matches!(err, Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn jacobi_failure_detected_with_witness() {
        // [X1,X2] = X3, [X1,X3] = X1 fails Jacobi on (X1,X2,X3):
        // the Jacobiator there is [X3,X3] + 0 + [-X1,X2] = -X3
        let labels = vec!["X1".into(), "X2".into(), "X3".into()];
        let l = LieAlgebra::new(
            field(),
            labels,
            &[(0, 1, 2, s(1)), (0, 2, 0, s(1))],
        )
        .unwrap();
        assert!(!l.jacobi_ok);
        assert!(!l.jacobi_defect().is_zero());
        assert_eq!(l.jacobi_witness(), Some((0, 1, 2)));
        // direct expansion on the witness triple
        let jac = l.jacobiator(0, 1, 2);
        assert!(jac.iter().any(|v| !v.is_zero()));
    }

    #[test]
    fn abelian_defect_is_zero() {
        let l = LieAlgebra::abelian(field(), 4);
        assert!(l.jacobi_defect().is_zero());
        // any multivectors Schouten-commute
        let p = Superfunction::e(4, 0).wedge(&Superfunction::e(4, 1)).unwrap();
        assert!(l.schouten(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn derived_bracket_recovers_structure_constants() {
        let l = heisenberg_like();
        let e1 = Superfunction::e(8, 0);
        let e3 = Superfunction::e(8, 2);
        let result = e1.big_bracket(&l.mu).unwrap().big_bracket(&e3).unwrap();
        assert_eq!(result, Superfunction::e(8, 4)); // [A1, B1] = Z
    }

    #[test]
    fn anchor_id_deforms_trivially() {
        let l = heisenberg_like();
        let id = EndoMatrix::identity(8);
        // {id, mu} = mu
        assert_eq!(l.deformed_mu(&id).unwrap(), l.mu);
        let deformed = l.deform(&id).unwrap();
        assert_eq!(deformed.mu, l.mu);
    }

    #[test]
    fn ce_differential_of_dual_z() {
        // d z* = -a1^b1 + a2^b2 on the r8 algebra
        let l = heisenberg_like();
        let n = 8;
        let z_dual = Superfunction::xi(n, 4);
        let d = l.ce_differential(&z_dual).unwrap();
        let mut expect = Superfunction::zero(n);
        expect.add_term((1 << (n + 0)) | (1 << (n + 2)), s(-1));
        expect.add_term((1 << (n + 1)) | (1 << (n + 3)), s(1));
        assert_eq!(d, expect);
    }

    #[test]
    fn dd_is_zero_on_lie_input() {
        let l = heisenberg_like();
        let n = 8;
        let omega = Superfunction::xi(n, 0)
            .wedge(&Superfunction::xi(n, 2))
            .unwrap()
            .add(&Superfunction::xi(n, 4).wedge(&Superfunction::xi(n, 5)).unwrap());
        let dd = l.ce_differential(&l.ce_differential(&omega).unwrap()).unwrap();
        assert!(dd.is_zero());
    }

    #[test]
    fn torsion_of_identity_multiples_vanishes() {
        let l = heisenberg_like();
        let lambda = EndoMatrix::new(Matrix::identity(8).scale(&s(3)));
        let t = l.nijenhuis_torsion(&lambda).unwrap();
        assert!(t.witness.is_zero());
        assert!(t.superfunction.is_zero());
    }

    #[test]
    fn torsion_on_abelian_vanishes_for_any_endo() {
        let l = LieAlgebra::abelian(field(), 1);
        let n_endo = EndoMatrix::new(Matrix::identity(1).scale(&s(5)));
        // mu = 0 so mu_{N,N} - mu_{N^2} = 0
        let t = l.nijenhuis_torsion(&n_endo).unwrap();
        assert!(t.witness.is_zero());
    }

    #[test]
    fn fn_bracket_diagonal_is_minus_twice_torsion() {
        let l = heisenberg_like();
        let mut m = Matrix::zero(8, 8);
        // a not-Nijenhuis endomorphism
        m.set(0, 2, s(1));
        m.set(2, 0, s(1));
        m.set(4, 4, s(2));
        m.set(1, 1, s(1));
        let e = EndoMatrix::new(m);
        let t = l.nijenhuis_torsion(&e).unwrap();
        let f = l.fn_bracket(&e, &e).unwrap();
        assert_eq!(f.witness, t.witness.scale(&s(-2)));
    }

    #[test]
    fn fn_bracket_on_abelian_vanishes() {
        let l = LieAlgebra::abelian(field(), 3);
        let mut m = Matrix::zero(3, 3);
        m.set(0, 1, s(2));
        m.set(2, 0, s(-1));
        let i = EndoMatrix::new(m);
        let f = l.fn_bracket(&i, &EndoMatrix::identity(3)).unwrap();
        assert!(f.witness.is_zero());
    }

    #[test]
    fn dual_structure_symplectic_abelian() {
        // abelian algebra with omega = xi1 xi2 + xi3 xi4: gamma = mu_pi = 0
        let l = LieAlgebra::abelian(field(), 4);
        let mut g = Matrix::zero(4, 4);
        g.set(0, 1, s(1));
        g.set(1, 0, s(-1));
        g.set(2, 3, s(1));
        g.set(3, 2, s(-1));
        let p = g.inverse().unwrap();
        let d = l.dual_structure(&g, &p).unwrap();
        assert!(d.gamma.is_zero());
        assert!(d.flat());
    }

    #[test]
    fn dual_structure_requires_inverse_pair() {
        let l = LieAlgebra::abelian(field(), 2);
        let mut g = Matrix::zero(2, 2);
        g.set(0, 1, s(1));
        g.set(1, 0, s(-1));
        let err = l.dual_structure(&g, &g);
        assert!(matches!(err, Err(Error::NotInverse)));
    }
}
