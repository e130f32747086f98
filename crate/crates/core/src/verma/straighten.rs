//! Straightening `y · ∂^(I) ξ^K ⊗ v` into the PBW basis.
//!
//! Variables of `I` are peeled one at a time with
//! `y ∂_a^(m) = Σ_k ∂_a^(m−k) ad'^k(y) / k!`, `ad'(z) = [z, ∂_a]`, then the `ξ`s
//! with `y ξ_c = (−1)^{p(y)} ξ_c y + [y, ξ_c]`. On `1 ⊗ v`, `L_0` acts through
//! the representation matrices, `L_{>0}` by zero and `L_{<0}` by left
//! multiplication.

use std::collections::HashMap;
use std::rc::Rc;

use crate::exact::{Rational, SparseVector};
use crate::superalgebra::{linear_coefficients, super_bracket, GradedElement, NVARS, PAIRS};

use super::{d_times, xi_times, PBWIndex, VermaModule, VermaVector};

type Terms = Rc<Vec<((PBWIndex, usize), Rational)>>;

struct Node {
    elem: GradedElement,
    deg: i32,
}

pub(crate) struct Straightener<'a> {
    module: &'a VermaModule,
    nodes: Vec<Node>,
    index: HashMap<GradedElement, usize>,
    d_br: HashMap<(usize, usize), Option<usize>>,
    xi_br: HashMap<(usize, usize), Option<usize>>,
    columns: HashMap<(usize, usize), SparseVector>,
    memo: HashMap<(usize, [u32; NVARS], u16, usize), Terms>,
    root: Option<usize>,
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

impl<'a> Straightener<'a> {
    /// `y` must be ℤ-homogeneous of degree `deg`.
    pub(crate) fn new(module: &'a VermaModule, y: &GradedElement, deg: i32) -> Self {
        let mut s = Straightener {
            module,
            nodes: Vec::new(),
            index: HashMap::new(),
            d_br: HashMap::new(),
            xi_br: HashMap::new(),
            columns: HashMap::new(),
            memo: HashMap::new(),
            root: None,
        };
        s.root = s.intern(y.clone(), deg);
        s
    }

    fn intern(&mut self, elem: GradedElement, deg: i32) -> Option<usize> {
        if elem.is_zero() {
            return None;
        }
        if let Some(&n) = self.index.get(&elem) {
            return Some(n);
        }
        let n = self.nodes.len();
        self.index.insert(elem.clone(), n);
        self.nodes.push(Node { elem, deg });
        Some(n)
    }

    fn d_bracket(&mut self, n: usize, a: usize) -> Option<usize> {
        if let Some(&r) = self.d_br.get(&(n, a)) {
            return r;
        }
        let node = &self.nodes[n];
        let (b, deg) = (super_bracket(&node.elem, &GradedElement::d(a)), node.deg - 2);
        let r = self.intern(b, deg);
        self.d_br.insert((n, a), r);
        r
    }

    fn xi_bracket(&mut self, n: usize, p: usize) -> Option<usize> {
        if let Some(&r) = self.xi_br.get(&(n, p)) {
            return r;
        }
        let node = &self.nodes[n];
        let (i, j) = PAIRS[p];
        let (b, deg) = (super_bracket(&node.elem, &GradedElement::xi(i, j)), node.deg - 1);
        let r = self.intern(b, deg);
        self.xi_br.insert((n, p), r);
        r
    }

    fn column(&mut self, n: usize, b: usize) -> &SparseVector {
        let module = self.module;
        let elem = &self.nodes[n].elem;
        self.columns.entry((n, b)).or_insert_with(|| {
            let c = linear_coefficients(&elem.even).expect("degree 0 element is linear");
            let dim = module.dim_v();
            let mut e = SparseVector::zero(dim);
            e.set(b, Rational::one());
            module.rep().linear_field(&c).mul_vec(&e)
        })
    }

    fn base(&mut self, n: usize, b: usize) -> Vec<((PBWIndex, usize), Rational)> {
        let deg = self.nodes[n].deg;
        match deg {
            0 => self
                .column(n, b)
                .iter()
                .map(|(r, c)| ((PBWIndex::ONE, r), c.clone()))
                .collect(),
            -2 => {
                let elem = &self.nodes[n].elem;
                (0..NVARS)
                    .filter_map(|a| {
                        let c = elem.even.coeff(a).constant_term();
                        (!c.is_zero()).then(|| {
                            let mut i = [0; NVARS];
                            i[a] = 1;
                            ((PBWIndex { i, k: 0 }, b), c)
                        })
                    })
                    .collect()
            }
            -1 => {
                let elem = &self.nodes[n].elem;
                (0..PAIRS.len())
                    .filter_map(|p| {
                        let (i, j) = PAIRS[p];
                        let c = elem.odd.coeff(i, j).constant_term();
                        (!c.is_zero()).then_some(((PBWIndex { i: [0; NVARS], k: 1 << p }, b), c))
                    })
                    .collect()
            }
            _ => Vec::new(),
        }
    }

    fn rec(&mut self, n: usize, i: [u32; NVARS], k: u16, b: usize) -> Terms {
        let key = (n, i, k, b);
        if let Some(t) = self.memo.get(&key) {
            return t.clone();
        }
        let deg = self.nodes[n].deg;
        let target = 2 * i.iter().sum::<u32>() as i32 + k.count_ones() as i32 - deg;
        let mut acc: HashMap<(PBWIndex, usize), Rational> = HashMap::new();
        let push = |acc: &mut HashMap<_, Rational>, key: (PBWIndex, usize), c: Rational| {
            if c.is_zero() {
                return;
            }
            let slot = acc.entry(key).or_default();
            *slot += &c;
        };
        if target < 0 {
            // nothing survives below degree zero
        } else if let Some(a) = (0..NVARS).find(|&a| i[a] > 0) {
            let m = i[a];
            let mut rest = i;
            rest[a] = 0;
            let mut z = Some(n);
            for step in 0..=m {
                let Some(zn) = z else { break };
                let r = self.rec(zn, rest, k, b);
                let inv = Rational::new(1, factorial(step));
                for ((idx, vb), c) in r.iter() {
                    let (j, mult) = d_times(a, m - step, idx);
                    push(&mut acc, (j, *vb), &(c * &mult) * &inv);
                }
                if step < m {
                    z = self.d_bracket(zn, a);
                }
            }
        } else if k != 0 {
            let c = k.trailing_zeros() as usize;
            let rest = k & !(1 << c);
            let sign = Rational::from_int(if deg.rem_euclid(2) == 1 { -1 } else { 1 });
            let r = self.rec(n, [0; NVARS], rest, b);
            for ((idx, vb), x) in r.iter() {
                for (j, y) in xi_times(c, idx) {
                    push(&mut acc, (j, *vb), &(x * &y) * &sign);
                }
            }
            if let Some(z) = self.xi_bracket(n, c) {
                let r = self.rec(z, [0; NVARS], rest, b);
                for (key, x) in r.iter() {
                    push(&mut acc, *key, x.clone());
                }
            }
        } else {
            for (key, c) in self.base(n, b) {
                push(&mut acc, key, c);
            }
        }
        let mut out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        out
    }

    pub(crate) fn act_label(&mut self, idx: &PBWIndex, b: usize) -> VermaVector {
        let mut out = VermaVector::zero(self.module.lambda());
        if let Some(root) = self.root {
            for ((j, vb), c) in self.rec(root, idx.i, idx.k, b).iter() {
                out.add_term(*j, *vb, c);
            }
        }
        out
    }

    pub(crate) fn act(&mut self, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero(self.module.lambda());
        let Some(root) = self.root else { return out };
        for ((idx, b), x) in v.terms() {
            for ((j, vb), c) in self.rec(root, idx.i, idx.k, *b).iter() {
                out.add_term(*j, *vb, &(x * c));
            }
        }
        out
    }
}
