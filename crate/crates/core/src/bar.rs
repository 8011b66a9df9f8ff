//! Graded Betti numbers of the residue field over `R = S/J` at small
//! bidegrees, through the reduced bar complex.
//!
//! The chain space in homological degree `i` is spanned by tuples
//! `u_1 | ... | u_i` of standard monomials of positive degree; the
//! differential merges adjacent factors with alternating signs,
//!
//! `d(u_1|...|u_i) = sum_{k=1}^{i-1} (-1)^k u_1|...|u_k u_{k+1}|...|u_i`,
//!
//! with products taken in `R`. For monomial or pure-difference binomial
//! bases the product of two standard monomials is again a single standard
//! monomial (or zero), so the matrices have entries `+-1` with at most
//! `i - 1` of them per column, and ranks over GF(p) give the Betti numbers.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::error::BarError;
use crate::field::{Field, PrimeField};
use crate::gb::ReducedGB;
use crate::order::TermOrder;
use crate::poly::{Monomial, PolyRing};
use crate::sparse::SparseMatrix;

/// Cap on the dimension of any bar space touched by a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarLimits {
    pub dim_cap: usize,
}

impl Default for BarLimits {
    fn default() -> Self {
        BarLimits { dim_cap: 200_000 }
    }
}

/// Standard monomials of one degree, ordered descending under the term order.
struct BasisLevel {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

/// Column layout of a bar space: compositions of the internal degree in
/// lexicographic order, then a mixed-radix run over the factor bases with
/// the last factor fastest.
struct Layout {
    comps: Vec<Vec<u32>>,
    comp_index: HashMap<Vec<u32>, usize>,
    offsets: Vec<usize>,
    dims: Vec<Vec<usize>>,
}

impl Layout {
    fn flat_index(&self, comp_idx: usize, tuple: &[u32]) -> usize {
        let dims = &self.dims[comp_idx];
        let mut idx = 0usize;
        for (t, d) in tuple.iter().zip(dims) {
            idx = idx * d + *t as usize;
        }
        self.offsets[comp_idx] + idx
    }

    fn decode(&self, flat: usize) -> (usize, Vec<u32>) {
        let comp_idx = match self.offsets.binary_search(&flat) {
            Ok(c) => c,
            Err(c) => c - 1,
        };
        let mut rest = flat - self.offsets[comp_idx];
        let dims = &self.dims[comp_idx];
        let mut tuple = vec![0u32; dims.len()];
        for k in (0..dims.len()).rev() {
            tuple[k] = (rest % dims[k]) as u32;
            rest /= dims[k];
        }
        (comp_idx, tuple)
    }
}

fn compositions(parts: usize, total: usize) -> Vec<Vec<u32>> {
    fn rec(parts: usize, total: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if total >= 1 {
                cur.push(total as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=(total.saturating_sub(parts - 1)) {
            cur.push(first as u32);
            rec(parts - 1, total - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(parts, total, &mut Vec::new(), &mut out);
    out
}

/// Betti-number calculator for a fixed quotient ring over GF(p).
pub struct BettiEngine {
    ring: PolyRing<PrimeField>,
    order: TermOrder,
    /// Reduction rules: leading monomial and the monomial it rewrites to
    /// (`None` for monomial relations, which rewrite to zero).
    rules: Vec<(Monomial, Option<Monomial>)>,
    limits: BarLimits,
    bases: HashMap<usize, Arc<BasisLevel>>,
    mult_cache: HashMap<(u32, u32, u32, u32), Option<u32>>,
    rank_cache: HashMap<(usize, usize), usize>,
    layouts: HashMap<(usize, usize), Arc<Layout>>,
}

impl BettiEngine {
    /// Builds the engine from a reduced basis whose elements are monomials or
    /// pure-difference binomials; anything else is rejected.
    pub fn new(
        ring: PolyRing<PrimeField>,
        gb: &ReducedGB<PrimeField>,
        limits: BarLimits,
    ) -> Result<Self, BarError> {
        assert_eq!(gb.order().n_vars(), ring.n_vars());
        let fp = *ring.field();
        let mut rules = Vec::with_capacity(gb.elements().len());
        for (idx, g) in gb.elements().iter().enumerate() {
            let (lead, lead_c) = g.leading_term(gb.order()).expect("basis elements nonzero");
            match g.n_terms() {
                1 if fp.is_one(lead_c) => rules.push((lead.clone(), None)),
                2 if fp.is_one(lead_c) => {
                    let (tail, tail_c) = g
                        .terms()
                        .iter()
                        .find(|(m, _)| m != lead)
                        .map(|(m, c)| (m.clone(), c.clone()))
                        .unwrap();
                    if tail_c != fp.neg(&fp.one()) {
                        return Err(BarError::UnsupportedBasis(idx));
                    }
                    rules.push((lead.clone(), Some(tail)));
                }
                _ => return Err(BarError::UnsupportedBasis(idx)),
            }
        }
        Ok(BettiEngine {
            ring,
            order: gb.order().clone(),
            rules,
            limits,
            bases: HashMap::new(),
            mult_cache: HashMap::new(),
            rank_cache: HashMap::new(),
            layouts: HashMap::new(),
        })
    }

    pub fn prime(&self) -> u64 {
        self.ring.field().modulus()
    }

    /// Normal form of a monomial: a single standard monomial, or zero.
    pub fn reduce_monomial(&self, m: &Monomial) -> Option<Monomial> {
        let mut cur = m.clone();
        'outer: loop {
            for (lead, tail) in &self.rules {
                if lead.divides(&cur) {
                    match tail {
                        None => return None,
                        Some(t) => {
                            cur = cur.div(lead).mul(t);
                            continue 'outer;
                        }
                    }
                }
            }
            return Some(cur);
        }
    }

    fn basis_level(&mut self, d: usize) -> Arc<BasisLevel> {
        if let Some(level) = self.bases.get(&d) {
            return Arc::clone(level);
        }
        let mut monos = enumerate_degree(self.ring.n_vars(), d);
        monos.retain(|m| !self.rules.iter().any(|(lead, _)| lead.divides(m)));
        monos.sort_by(|a, b| self.order.cmp(b, a));
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        let level = Arc::new(BasisLevel { monos, index });
        self.bases.insert(d, Arc::clone(&level));
        level
    }

    /// The standard monomials of degree `d`, in descending term order.
    pub fn standard_monomials(&mut self, d: usize) -> Vec<Monomial> {
        self.basis_level(d).monos.clone()
    }

    pub fn quotient_dim(&mut self, d: usize) -> usize {
        self.basis_level(d).monos.len()
    }

    /// Structure constant: the product of two standard monomials expressed in
    /// the standard basis (a single monomial with coefficient one, or zero).
    pub fn multiply_standard(&mut self, u: &Monomial, v: &Monomial) -> Option<Monomial> {
        self.reduce_monomial(&u.mul(v))
    }

    fn mult_indexed(&mut self, d1: usize, i1: u32, d2: usize, i2: u32) -> Option<u32> {
        let key = (d1 as u32, i1, d2 as u32, i2);
        if let Some(&hit) = self.mult_cache.get(&key) {
            return hit;
        }
        let u = self.basis_level(d1).monos[i1 as usize].clone();
        let v = self.basis_level(d2).monos[i2 as usize].clone();
        let result = self.multiply_standard(&u, &v).map(|w| {
            *self
                .basis_level(d1 + d2)
                .index
                .get(&w)
                .expect("normal form of a monomial is standard")
        });
        self.mult_cache.insert(key, result);
        result
    }

    fn space_dim(&mut self, i: usize, j: usize) -> u128 {
        compositions(i, j)
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|&d| self.quotient_dim(d as usize) as u128)
                    .product::<u128>()
            })
            .sum()
    }

    fn check_dim(&mut self, i: usize, j: usize) -> Result<usize, BarError> {
        let dim = self.space_dim(i, j);
        if dim > self.limits.dim_cap as u128 {
            return Err(BarError::DimCapExceeded {
                i,
                j,
                dim: dim.min(usize::MAX as u128) as usize,
                cap: self.limits.dim_cap,
            });
        }
        Ok(dim as usize)
    }

    fn layout(&mut self, i: usize, j: usize) -> Arc<Layout> {
        if let Some(l) = self.layouts.get(&(i, j)) {
            return Arc::clone(l);
        }
        let comps = compositions(i, j);
        let mut offsets = Vec::with_capacity(comps.len());
        let mut dims = Vec::with_capacity(comps.len());
        let mut total = 0usize;
        for comp in &comps {
            offsets.push(total);
            let d: Vec<usize> = comp.iter().map(|&p| self.quotient_dim(p as usize)).collect();
            total += d.iter().product::<usize>();
            dims.push(d);
        }
        let comp_index = comps
            .iter()
            .enumerate()
            .map(|(idx, c)| (c.clone(), idx))
            .collect();
        let layout = Arc::new(Layout {
            comps,
            comp_index,
            offsets,
            dims,
        });
        self.layouts.insert((i, j), Arc::clone(&layout));
        layout
    }

    /// Rows hit by the differential of one basis tuple, with sign flags
    /// (`true` = negative).
    fn column_image(
        &mut self,
        source: &Layout,
        target: &Layout,
        comp_idx: usize,
        tuple: &[u32],
    ) -> Vec<(usize, bool)> {
        let comp = source.comps[comp_idx].clone();
        let i = comp.len();
        let mut out = Vec::with_capacity(i - 1);
        for k in 0..(i - 1) {
            let merged = self.mult_indexed(
                comp[k] as usize,
                tuple[k],
                comp[k + 1] as usize,
                tuple[k + 1],
            );
            let Some(w) = merged else { continue };
            let mut tcomp = Vec::with_capacity(i - 1);
            let mut ttuple = Vec::with_capacity(i - 1);
            for (pos, (&c, &t)) in comp.iter().zip(tuple).enumerate() {
                if pos == k {
                    tcomp.push(comp[k] + comp[k + 1]);
                    ttuple.push(w);
                } else if pos == k + 1 {
                    continue;
                } else {
                    tcomp.push(c);
                    ttuple.push(t);
                }
            }
            let tc = *target.comp_index.get(&tcomp).expect("merged composition");
            let row = target.flat_index(tc, &ttuple);
            // the k-th face (1-based) carries sign (-1)^k
            out.push((row, k % 2 == 0));
        }
        out
    }

    fn for_each_column(
        &mut self,
        layout: &Layout,
        mut f: impl FnMut(&mut Self, usize, usize, &[u32]),
    ) {
        for comp_idx in 0..layout.comps.len() {
            let dims = layout.dims[comp_idx].clone();
            if dims.iter().any(|&d| d == 0) {
                continue;
            }
            let mut tuple = vec![0u32; dims.len()];
            let mut col = layout.offsets[comp_idx];
            'tuples: loop {
                f(self, col, comp_idx, &tuple);
                col += 1;
                // odometer, last factor fastest
                let mut k = dims.len();
                while k > 0 {
                    k -= 1;
                    tuple[k] += 1;
                    if (tuple[k] as usize) < dims[k] {
                        continue 'tuples;
                    }
                    tuple[k] = 0;
                }
                break;
            }
        }
    }

    /// Rank of the differential `d_i` restricted to internal degree `j`.
    fn rank_d(&mut self, i: usize, j: usize) -> Result<usize, BarError> {
        if let Some(&r) = self.rank_cache.get(&(i, j)) {
            return Ok(r);
        }
        let rank = if i <= 1 || j < i {
            // the augmentation-level differential vanishes, and spaces with
            // j < i are empty
            0
        } else {
            let cols = self.check_dim(i, j)?;
            let rows = self.check_dim(i - 1, j)?;
            if cols == 0 || rows == 0 {
                0
            } else {
                let source = self.layout(i, j);
                let target = self.layout(i - 1, j);
                let fp = *self.ring.field();
                let minus_one = fp.neg(&fp.one());
                let mut matrix = SparseMatrix::new(rows, cols);
                self.for_each_column(&source, |eng, col, comp_idx, tuple| {
                    for (row, negative) in eng.column_image(&source, &target, comp_idx, tuple) {
                        matrix.add_entry(row, col, if negative { minus_one } else { 1 }, &fp);
                    }
                });
                matrix.rank(&fp)
            }
        };
        self.rank_cache.insert((i, j), rank);
        Ok(rank)
    }

    /// Asserts `d_i . d_{i+1} = 0` on the `(i+1, j)` slice, column by column.
    fn check_dd_zero(&mut self, i: usize, j: usize) -> Result<(), BarError> {
        if i < 1 || self.check_dim(i + 1, j)? == 0 {
            return Ok(());
        }
        if i == 1 {
            return Ok(()); // d_1 is the zero map
        }
        self.check_dim(i, j)?;
        self.check_dim(i - 1, j)?;
        let top = self.layout(i + 1, j);
        let mid = self.layout(i, j);
        let bottom = self.layout(i - 1, j);
        let fp = *self.ring.field();
        self.for_each_column(&top, |eng, col, comp_idx, tuple| {
            let mut acc: HashMap<usize, u64> = HashMap::new();
            for (mid_row, neg1) in eng.column_image(&top, &mid, comp_idx, tuple) {
                let (mc, mt) = mid.decode(mid_row);
                for (bot_row, neg2) in eng.column_image(&mid, &bottom, mc, &mt) {
                    let sign = if neg1 != neg2 { fp.neg(&1) } else { 1 };
                    let cell = acc.entry(bot_row).or_insert(0);
                    *cell = fp.add(cell, &sign);
                }
            }
            assert!(
                acc.values().all(|v| fp.is_zero(v)),
                "bar differential fails d.d = 0 at column {col} of ({}, {})",
                i + 1,
                j
            );
        });
        Ok(())
    }

    /// The graded Betti number at homological degree `i`, internal degree `j`.
    pub fn betti(&mut self, i: usize, j: usize) -> Result<usize, BarError> {
        if i == 0 {
            return Ok(usize::from(j == 0));
        }
        if j < i {
            return Ok(0);
        }
        let dim = self.check_dim(i, j)?;
        let r_here = self.rank_d(i, j)?;
        let r_above = self.rank_d(i + 1, j)?;
        self.check_dd_zero(i, j)?;
        Ok(dim - r_here - r_above)
    }

    /// Scans `i <= i_max`, `i < j <= j_max` in lexicographic order for the
    /// first nonzero off-diagonal Betti number.
    pub fn koszul_probe(
        &mut self,
        i_max: usize,
        j_max: usize,
    ) -> Result<Option<(usize, usize)>, BarError> {
        for i in 1..=i_max {
            for j in (i + 1)..=j_max {
                if self.betti(i, j)? != 0 {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Fills the rectangle `i <= i_max`, `j <= j_max`.
    pub fn betti_table(&mut self, i_max: usize, j_max: usize) -> Result<BettiTable, BarError> {
        let mut table = BettiTable::new();
        for i in 0..=i_max {
            for j in 0..=j_max {
                table.set(i, j, self.betti(i, j)?);
            }
        }
        Ok(table)
    }
}

fn enumerate_degree(n_vars: usize, d: usize) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, var: usize, left: usize, n: usize, out: &mut Vec<Monomial>) {
        if var == n - 1 {
            exps.push(left as u32);
            out.push(Monomial::new(exps.clone()));
            exps.pop();
            return;
        }
        for e in (0..=left).rev() {
            exps.push(e as u32);
            rec(exps, var + 1, left - e, n, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    if n_vars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::new(), 0, d, n_vars, &mut out);
    out
}

/// Map `(i, j) -> betti`, with the resolution-style text rendering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.entries.insert((i, j), value);
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.entries.get(&(i, j)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.entries.iter()
    }

    /// JSON object keyed by `"i,j"`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (&(i, j), &v) in &self.entries {
            map.insert(format!("{i},{j}"), serde_json::Value::from(v));
        }
        serde_json::Value::Object(map)
    }

    /// Text table: columns are homological degrees, rows are `j - i`.
    pub fn render_text(&self) -> String {
        let i_max = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let slope_max = self
            .entries
            .iter()
            .filter(|&(_, &v)| v > 0)
            .map(|(&(i, j), _)| j.saturating_sub(i))
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=i_max {
            out.push_str(&format!("{i:>7}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat(6 + 7 * (i_max + 1)));
        out.push('\n');
        for slope in 0..=slope_max {
            out.push_str(&format!("{slope:>4}: "));
            for i in 0..=i_max {
                match self.get(i, i + slope) {
                    Some(0) | None => out.push_str(&format!("{:>7}", "-")),
                    Some(v) => out.push_str(&format!("{v:>7}")),
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{buchberger_reduced, GbLimits};
    use crate::poly::parse_poly;

    fn engine_for(vars: &[&str], gens: &[&str], cap: usize) -> BettiEngine {
        let ring = PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            PrimeField::new(32003).unwrap(),
        );
        let order = TermOrder::lex(vars.len());
        let gens: Vec<_> = gens.iter().map(|s| parse_poly(&ring, s).unwrap()).collect();
        let gb = buchberger_reduced(&ring, &gens, &order, &GbLimits::default()).unwrap();
        BettiEngine::new(ring, &gb, BarLimits { dim_cap: cap }).unwrap()
    }

    #[test]
    fn polynomial_ring_is_koszul() {
        // no relations, two variables: the usual Koszul resolution
        let mut eng = engine_for(&["x", "y"], &[], 100_000);
        assert_eq!(eng.betti(0, 0).unwrap(), 1);
        assert_eq!(eng.betti(1, 1).unwrap(), 2);
        assert_eq!(eng.betti(2, 2).unwrap(), 1);
        assert_eq!(eng.betti(3, 3).unwrap(), 0);
        assert_eq!(eng.koszul_probe(3, 4).unwrap(), None);
    }

    #[test]
    fn one_variable_square() {
        // K[x]/(x^2) is a Koszul hypersurface: betti_{i,i} = 1 down the diagonal
        let mut eng = engine_for(&["x"], &["x^2"], 100_000);
        assert_eq!(eng.betti(1, 1).unwrap(), 1);
        assert_eq!(eng.betti(2, 2).unwrap(), 1);
        assert_eq!(eng.betti(3, 3).unwrap(), 1);
        assert_eq!(eng.koszul_probe(3, 4).unwrap(), None);
    }

    #[test]
    fn one_relation_grid() {
        // single 2x2 minor: 9 standard monomials in degree 2
        let mut eng = engine_for(
            &["x[1,1]", "x[1,2]", "x[2,1]", "x[2,2]"],
            &["x[1,1]*x[2,2] - x[1,2]*x[2,1]"],
            100_000,
        );
        assert_eq!(eng.quotient_dim(2), 9);
        assert_eq!(eng.betti(1, 1).unwrap(), 4);
        assert_eq!(eng.betti(2, 2).unwrap(), 7); // C(4,2) + 1 relation
        assert_eq!(eng.betti(1, 2).unwrap(), 0);
    }

    #[test]
    fn dim_cap_reports() {
        let mut eng = engine_for(&["x", "y", "z"], &[], 10);
        let err = eng.betti(3, 3).unwrap_err();
        assert!(matches!(err, BarError::DimCapExceeded { dim: 27, cap: 10, .. }));
    }

    #[test]
    fn rejects_general_bases() {
        let ring = PolyRing::new(
            vec!["x".into(), "y".into()],
            PrimeField::new(32003).unwrap(),
        );
        let order = TermOrder::lex(2);
        let gens = vec![parse_poly(&ring, "x^2 + x*y + y^2").unwrap()];
        let gb = buchberger_reduced(&ring, &gens, &order, &GbLimits::default()).unwrap();
        assert!(matches!(
            BettiEngine::new(ring, &gb, BarLimits::default()),
            Err(BarError::UnsupportedBasis(0))
        ));
    }
}
