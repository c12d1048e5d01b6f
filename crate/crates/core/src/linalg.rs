//! Sparse exact elimination over `K`.
//!
//! Vectors are maps from an ordered key to a nonzero scalar. Each stored row
//! has its smallest key as pivot, normalized to 1, so one ascending pass
//! reduces any vector against the echelon.

use std::collections::BTreeMap;
use std::ops::Bound;

use crate::algebra::GradedElement;
use crate::scalars::{FieldElem, Scalar};

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Coordinate key of an element term: exponent vector and `x3` exponents.
pub type TermKey = (Vec<i64>, Vec<u32>);

/// The coordinate vector of an element in the monomial basis.
pub fn element_vector(e: &GradedElement) -> SparseVec<TermKey> {
    e.flat_terms().into_iter().map(|(b, x3, c)| ((b, x3), c)).collect()
}

/// `v += c * w`.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Scalar, w: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let t = c.f_mul(x);
        match v.get_mut(k) {
            Some(y) => {
                let s = y.f_add(&t);
                if s.is_zero() {
                    v.remove(k);
                } else {
                    *y = s;
                }
            }
            None => {
                v.insert(k.clone(), t);
            }
        }
    }
}

fn scaled<K: Ord + Clone>(m: &SparseVec<K>, c: &Scalar) -> SparseVec<K> {
    m.iter().map(|(k, x)| (k.clone(), x.f_mul(c))).collect()
}

struct Row<K> {
    v: SparseVec<K>,
    tag: SparseVec<usize>,
}

/// Row echelon form with optional bookkeeping of input combinations.
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut SparseVec<K>, tag: &mut SparseVec<usize>) {
        let mut cursor: Option<K> = None;
        loop {
            let next = {
                let lower = match &cursor {
                    None => Bound::Unbounded,
                    Some(c) => Bound::Excluded(c.clone()),
                };
                v.range((lower, Bound::Unbounded)).map(|(k, _)| k).find(|k| self.rows.contains_key(*k)).cloned()
            };
            let Some(k) = next else { break };
            let c = v[&k].f_neg();
            let row = &self.rows[&k];
            axpy(v, &c, &row.v);
            axpy(tag, &c, &row.tag);
            cursor = Some(k);
        }
    }

    /// Adds `v`, recorded as input number `index`. Returns the relation among
    /// inputs when `v` is dependent on the rows already present.
    pub fn insert_tagged(&mut self, mut v: SparseVec<K>, index: usize, one: &Scalar) -> Option<SparseVec<usize>> {
        let mut tag = SparseVec::from([(index, one.clone())]);
        self.reduce(&mut v, &mut tag);
        let Some((pivot, lead)) = v.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return Some(tag);
        };
        let inv = lead.f_inv().expect("pivot is nonzero");
        let row = Row { v: scaled(&v, &inv), tag: scaled(&tag, &inv) };
        self.rows.insert(pivot, row);
        None
    }

    /// Adds `v`; true when the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let Some(one) = v.values().next().map(|x| x.one_like()) else { return false };
        self.insert_tagged(v, 0, &one).is_none()
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v, &mut SparseVec::new());
        v.is_empty()
    }

    /// The stored rows, a basis of the span.
    pub fn basis(&self) -> Vec<SparseVec<K>> {
        self.rows.values().map(|r| r.v.clone()).collect()
    }
}

/// Dimension of the span of `vs`.
pub fn rank<K: Ord + Clone>(vs: &[SparseVec<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v.clone());
    }
    e.rank()
}

/// Whether two families span the same subspace.
pub fn same_span<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> bool {
    let mut e = Echelon::new();
    for v in a {
        e.insert(v.clone());
    }
    let ra = e.rank();
    b.iter().all(|v| e.contains(v)) && rank(b) == ra
}

/// Basis of the kernel of the linear map sending input `j` to `images[j]`,
/// as coefficient vectors over the inputs. `one` is the unit of `K`.
pub fn kernel<K: Ord + Clone>(images: impl IntoIterator<Item = SparseVec<K>>, one: &Scalar) -> Vec<SparseVec<usize>> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (j, v) in images.into_iter().enumerate() {
        if let Some(rel) = e.insert_tagged(v, j, one) {
            out.push(rel);
        }
    }
    out
}

/// Basis of `span(a) ∩ span(b)`.
pub fn intersect<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>], one: &Scalar) -> Vec<SparseVec<K>> {
    let images = a.iter().cloned().chain(b.iter().cloned());
    let mut out = Echelon::new();
    for rel in kernel(images, one) {
        let mut w = SparseVec::new();
        for (j, c) in &rel {
            if *j < a.len() {
                axpy(&mut w, c, &a[*j]);
            }
        }
        out.insert(w);
    }
    out.basis()
}
