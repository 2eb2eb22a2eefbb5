//! The ideal of s-th zero-divisors, i.e. the kernel of the diagonal restriction,
//! computed degree by degree with F2 linear algebra, and checked against the
//! ideal generated by the linear elements `x_i + x_s`.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, EchelonBasis};
use crate::ring::{Poly, RingSpec};

/// The monomials of one total degree, in increasing rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSlice {
    spec: RingSpec,
    degree: u32,
    basis: Vec<usize>,
}

impl DegreeSlice {
    pub fn new(spec: RingSpec, degree: u32) -> Self {
        let basis = if degree > spec.top_degree() {
            Vec::new()
        } else {
            (0..spec.basis_len())
                .filter(|&r| spec.degree_of_rank(r) == degree)
                .collect()
        };
        DegreeSlice { spec, degree, basis }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Ranks of the slice monomials.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    fn column_of(&self, rank: usize) -> Option<usize> {
        self.basis.binary_search(&rank).ok()
    }

    /// Coordinates of a homogeneous element of this degree.
    pub fn coordinates(&self, p: &Poly) -> Result<Bits> {
        if p.spec() != self.spec {
            return Err(Error::SpecMismatch);
        }
        let mut v = Bits::zeros(self.len());
        for r in p.ranks() {
            v.set(self.column_of(r).ok_or(Error::NotHomogeneous)?, true);
        }
        Ok(v)
    }

    pub fn to_poly(&self, v: &Bits) -> Poly {
        Poly::from_ranks(self.spec, v.iter_ones().map(|c| self.basis[c])).expect("slice ranks are valid")
    }
}

/// A subspace of one degree slice in reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    slice: DegreeSlice,
    echelon: EchelonBasis,
}

impl SubspaceBasis {
    pub fn slice(&self) -> &DegreeSlice {
        &self.slice
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.echelon
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn rows(&self) -> impl Iterator<Item = Poly> + '_ {
        self.echelon.rows().iter().map(|v| self.slice.to_poly(v))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.echelon.contains(&self.slice.coordinates(p)?))
    }

    /// Every element of the span except zero. Only sensible for small dimensions.
    pub fn nonzero_elements(&self) -> Vec<Poly> {
        let rows = self.echelon.rows();
        assert!(
            rows.len() < 24,
            "span of dimension {} is too large to list",
            rows.len()
        );
        (1u32..1 << rows.len())
            .map(|mask| {
                let mut v = Bits::zeros(self.slice.len());
                for (i, r) in rows.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v.xor_assign(r);
                    }
                }
                self.slice.to_poly(&v)
            })
            .collect()
    }
}

/// The zero-divisor `x_i + x_s`, `1 <= i <= s-1`.
pub fn generator(spec: RingSpec, i: u32) -> Result<Poly> {
    if i == 0 || i >= spec.s() {
        return Err(Error::IndexOutOfRange {
            index: i,
            detail: "generators are numbered 1..=s-1",
        });
    }
    Poly::var(spec, i)?.add(&Poly::var(spec, spec.s())?)
}

pub fn is_zero_divisor(p: &Poly) -> bool {
    p.diagonal_restriction().is_zero()
}

/// Kernel of the diagonal restriction in one degree, as the nullspace of the
/// substitution matrix from the slice to `F2[x]/(x^{m+1})`.
pub fn kernel_basis(spec: RingSpec, degree: u32) -> SubspaceBasis {
    let slice = DegreeSlice::new(spec, degree);
    let target = spec.m() as usize + 1;
    let columns: Vec<Bits> = slice
        .basis()
        .iter()
        .map(|&r| {
            let image = Poly::from_ranks(spec, [r])
                .expect("valid rank")
                .diagonal_restriction();
            let mut col = Bits::zeros(target);
            for e in image.exponents() {
                col.set(e as usize, true);
            }
            col
        })
        .collect();
    let echelon = nullspace(target, &columns);
    SubspaceBasis { slice, echelon }
}

/// Degree-`degree` part of the ideal generated by the `x_i + x_s`: the span of
/// `(x_i + x_s) · M` over monomials `M` of degree `degree - 1`.
pub fn ideal_degree_basis(spec: RingSpec, degree: u32) -> SubspaceBasis {
    let slice = DegreeSlice::new(spec, degree);
    let mut echelon = EchelonBasis::new(slice.len());
    if degree == 0 || slice.is_empty() {
        return SubspaceBasis { slice, echelon };
    }
    let lower = DegreeSlice::new(spec, degree - 1);
    let s = spec.s() as usize;
    let m = spec.m();
    let top_stride = spec.stride(s - 1);
    'outer: for &r in lower.basis() {
        let digits = spec.digits(r);
        for i in 0..s - 1 {
            let mut v = Bits::zeros(slice.len());
            if digits[i] < m {
                v.flip(slice.column_of(r + spec.stride(i)).expect("degree matches"));
            }
            if digits[s - 1] < m {
                v.flip(slice.column_of(r + top_stride).expect("degree matches"));
            }
            echelon.insert(v);
            if echelon.is_full() {
                break 'outer;
            }
        }
    }
    SubspaceBasis { slice, echelon }
}

/// Outcome of comparing kernel and ideal in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub dim_kernel: usize,
    pub dim_ideal: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

pub fn check_degree(spec: RingSpec, degree: u32) -> DegreeCheck {
    let kernel = kernel_basis(spec, degree);
    let ideal = ideal_degree_basis(spec, degree);
    let pass = kernel.echelon == ideal.echelon;
    let mismatch = (!pass)
        .then(|| kernel.echelon.difference_witness(&ideal.echelon))
        .flatten()
        .map(|v| kernel.slice.to_poly(&v).to_string());
    DegreeCheck {
        degree,
        dim_kernel: kernel.dim(),
        dim_ideal: ideal.dim(),
        pass,
        mismatch,
    }
}

/// Checks, for each degree `1..=max_degree`, that the zero-divisors coincide
/// with the ideal generated by the `x_i + x_s`.
pub fn verify_generators_lemma(spec: RingSpec, max_degree: u32) -> Result<Vec<DegreeCheck>> {
    let max_degree = max_degree.min(spec.top_degree());
    let mut out = Vec::with_capacity(max_degree as usize);
    for d in 1..=max_degree {
        let check = check_degree(spec, d);
        if !check.pass {
            return Err(Error::GeneratorsMismatch {
                degree: d,
                vector: check.mismatch.unwrap_or_default(),
            });
        }
        out.push(check);
    }
    Ok(out)
}

/// A homogeneous element of degree at most `m` is a zero-divisor only if it has
/// an even number of terms; this returns whether the term count is even.
pub fn even_summands_check(p: &Poly) -> Result<bool> {
    match p.homogeneous_degree() {
        Some(Some(d)) if d > p.spec().m() => Err(Error::NotHomogeneous),
        None => Err(Error::NotHomogeneous),
        _ => Ok(p.term_count().is_multiple_of(2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u32, s: u32) -> RingSpec {
        RingSpec::new(m, s).unwrap()
    }

    fn p(sp: RingSpec, text: &str) -> Poly {
        Poly::parse(sp, text).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(generator(spec(1, 2), 1).unwrap(), p(spec(1, 2), "x1 + x2"));
        assert_eq!(generator(spec(2, 3), 2).unwrap(), p(spec(2, 3), "x2 + x3"));
        assert!(generator(spec(2, 3), 3).is_err());
        assert!(generator(spec(2, 3), 0).is_err());
        for s in 2..6 {
            for i in 1..s {
                assert!(is_zero_divisor(&generator(spec(3, s), i).unwrap()));
            }
        }
    }

    #[test]
    fn zero_divisor_examples() {
        let sp = spec(2, 3);
        assert!(is_zero_divisor(&p(sp, "x1 + x3")));
        assert!(!is_zero_divisor(&p(sp, "x1")));
        for r in 0..sp.basis_len() {
            if sp.degree_of_rank(r) > sp.m() {
                assert!(is_zero_divisor(&Poly::from_ranks(sp, [r]).unwrap()));
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let s12 = spec(1, 2);
        let k1 = kernel_basis(s12, 1);
        assert_eq!(k1.dim(), 1);
        assert_eq!(k1.rows().next().unwrap(), p(s12, "x1 + x2"));
        assert_eq!(kernel_basis(s12, 0).dim(), 0);
        assert_eq!(kernel_basis(spec(4, 3), 0).dim(), 0);
        let k2 = kernel_basis(s12, 2);
        assert_eq!(k2.rows().collect::<Vec<_>>(), vec![p(s12, "x1*x2")]);
    }

    #[test]
    fn ideal_examples() {
        let s12 = spec(1, 2);
        let i2 = ideal_degree_basis(s12, 2);
        assert_eq!(i2.rows().collect::<Vec<_>>(), vec![p(s12, "x1*x2")]);
        for s in 2..6 {
            assert_eq!(ideal_degree_basis(spec(2, s), 1).dim(), s as usize - 1);
        }
        let s22 = spec(2, 2);
        let i4 = ideal_degree_basis(s22, 4);
        assert_eq!(i4.dim(), 1);
        assert!(i4.echelon().is_full());
        assert_eq!(i4.rows().next().unwrap(), p(s22, "x1^2*x2^2"));
    }

    #[test]
    fn generators_span_kernel_small() {
        let r = verify_generators_lemma(spec(1, 2), 2).unwrap();
        assert!(r.iter().all(|c| c.pass));
        let r = verify_generators_lemma(spec(2, 3), 6).unwrap();
        assert_eq!(r.len(), 6);
        let c0 = check_degree(spec(2, 3), 0);
        assert_eq!((c0.dim_kernel, c0.dim_ideal, c0.pass), (0, 0, true));
    }

    #[test]
    fn kernel_dimension_formula() {
        for (m, s) in [(1, 3), (2, 3), (3, 3), (4, 2), (2, 4)] {
            let sp = spec(m, s);
            for d in 0..=sp.top_degree() {
                let slice = DegreeSlice::new(sp, d).len();
                let image = usize::from(d <= m);
                let k = kernel_basis(sp, d);
                assert_eq!(k.dim(), slice - image, "m={m} s={s} d={d}");
                assert!(k.rows().all(|row| is_zero_divisor(&row)));
            }
        }
    }

    #[test]
    fn even_summands() {
        let sp = spec(3, 3);
        assert!(even_summands_check(&p(sp, "x1 + x2")).unwrap());
        assert!(!even_summands_check(&p(sp, "x1")).unwrap());
        assert!(even_summands_check(&p(sp, "x1 + x2^2")).is_err());
        assert!(even_summands_check(&p(sp, "x1^2*x2^2")).is_err());
        for d in 0..=sp.m() {
            for row in kernel_basis(sp, d).rows() {
                assert!(even_summands_check(&row).unwrap());
            }
        }
    }
}
