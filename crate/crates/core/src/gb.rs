//! Buchberger's algorithm with normal pair selection, the coprime and chain
//! criteria, reduced bases, elimination, and colon ideals via an auxiliary
//! variable.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::GbError;
use crate::field::Field;
use crate::order::{OrderKind, TermOrder};
use crate::poly::{Monomial, PolyRing, Polynomial};

/// Caps guarding against runaway Buchberger runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_elements: usize,
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_elements: 20_000,
            max_degree: 30,
        }
    }
}

/// A reduced Groebner basis: monic, interreduced, sorted ascending by
/// leading term. Canonical for a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGB<F: Field> {
    elements: Vec<Polynomial<F>>,
    order: TermOrder,
}

impl<F: Field> ReducedGB<F> {
    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn is_quadratic(&self) -> bool {
        self.max_degree() <= 2
    }

    pub fn leading_terms(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| self.order_leading(g))
            .collect()
    }

    fn order_leading(&self, g: &Polynomial<F>) -> Monomial {
        g.leading_term(&self.order).expect("nonzero").0.clone()
    }

    pub fn normal_form(&self, ring: &PolyRing<F>, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(ring, f, &self.elements, &self.order)
    }

    pub fn contains(&self, ring: &PolyRing<F>, f: &Polynomial<F>) -> bool {
        self.normal_form(ring, f).is_zero()
    }
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by any basis leading term, and the difference lies in the ideal
/// generated by the basis.
pub fn normal_form<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &TermOrder,
) -> Polynomial<F> {
    let divisors: Vec<(&Polynomial<F>, Monomial, F::Elem)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("nonzero");
            (g, m.clone(), c.clone())
        })
        .collect();
    let field = ring.field();
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
    'outer: while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        for (g, gm, gc) in &divisors {
            if gm.divides(&lm) {
                let ratio = field.mul(&lc, &field.inv(gc));
                let shift = lm.div(gm);
                p = p.sub(ring, &g.mul_term(ring, &shift, &ratio));
                continue 'outer;
            }
        }
        remainder.push((lm.clone(), lc.clone()));
        p = p.sub(ring, &ring.term(lm, lc));
    }
    ring.from_terms(remainder)
}

fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F>,
    f_lt: &Monomial,
    g: &Polynomial<F>,
    g_lt: &Monomial,
    order: &TermOrder,
) -> Polynomial<F> {
    // both inputs monic
    let lcm = f_lt.lcm(g_lt);
    let one = ring.field().one();
    let a = f.mul_term(ring, &lcm.div(f_lt), &one);
    let b = g.mul_term(ring, &lcm.div(g_lt), &one);
    let _ = order;
    a.sub(ring, &b)
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger_reduced<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    order: &TermOrder,
    limits: &GbLimits,
) -> Result<ReducedGB<F>, GbError> {
    assert_eq!(order.n_vars(), ring.n_vars(), "order/ring size mismatch");
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut lts: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let monic = g.monic(ring, order);
        if basis.contains(&monic) {
            continue;
        }
        lts.push(monic.leading_term(order).unwrap().0.clone());
        basis.push(monic);
    }

    // pair queue keyed by lcm total degree (normal strategy)
    let mut queue: BinaryHeap<Reverse<(u32, Monomial, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |queue: &mut BinaryHeap<_>,
                          pending: &mut HashSet<(usize, usize)>,
                          lts: &[Monomial],
                          j: usize| {
        for i in 0..j {
            let lcm = lts[i].lcm(&lts[j]);
            queue.push(Reverse((lcm.degree(), lcm, i, j)));
            pending.insert((i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &mut pending, &lts, j);
    }

    while let Some(Reverse((_, lcm, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        if lts[i].coprime(&lts[j]) {
            continue;
        }
        // chain criterion: a third element dividing the lcm whose pairs with
        // both ends are already handled
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lts[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &lts[i], &basis[j], &lts[j], order);
        let nf = normal_form(ring, &s, &basis, order);
        if nf.is_zero() {
            continue;
        }
        if nf.degree() > limits.max_degree {
            return Err(GbError::ResourceCap(format!(
                "basis element of degree {} exceeds the degree cap {}",
                nf.degree(),
                limits.max_degree
            )));
        }
        if basis.len() + 1 > limits.max_elements {
            return Err(GbError::ResourceCap(format!(
                "basis grew past {} elements",
                limits.max_elements
            )));
        }
        let monic = nf.monic(ring, order);
        lts.push(monic.leading_term(order).unwrap().0.clone());
        basis.push(monic);
        push_pairs(&mut queue, &mut pending, &lts, basis.len() - 1);
    }

    // minimize: drop elements whose leading term is divisible by another's
    let mut order_by_lt: Vec<usize> = (0..basis.len()).collect();
    order_by_lt.sort_by(|&a, &b| order.cmp(&lts[a], &lts[b]));
    let mut kept: Vec<usize> = Vec::new();
    for idx in order_by_lt {
        if !kept.iter().any(|&k| lts[k].divides(&lts[idx])) {
            kept.push(idx);
        }
    }

    // interreduce tails; leading terms are pairwise non-divisible so they
    // survive reduction
    let minimal: Vec<Polynomial<F>> = kept.iter().map(|&k| basis[k].clone()).collect();
    let mut reduced: Vec<Polynomial<F>> = Vec::with_capacity(minimal.len());
    for (pos, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != pos)
            .map(|(_, h)| h.clone())
            .collect();
        let r = normal_form(ring, g, &others, order).monic(ring, order);
        debug_assert!(!r.is_zero());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading_term(order).unwrap().0,
            b.leading_term(order).unwrap().0,
        )
    });
    Ok(ReducedGB {
        elements: reduced,
        order: order.clone(),
    })
}

/// Reduced-basis quadraticity test: returns the flag and the maximal total
/// degree over the basis.
pub fn is_quadratic_gb<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    order: &TermOrder,
    limits: &GbLimits,
) -> Result<(bool, u32), GbError> {
    let gb = buchberger_reduced(ring, gens, order, limits)?;
    Ok((gb.is_quadratic(), gb.max_degree()))
}

/// Intersects the ideal with the subring on `keep`, given a basis under an
/// order eliminating the other variables.
pub fn eliminate<F: Field>(gb: &ReducedGB<F>, keep: &[bool]) -> Result<Vec<Polynomial<F>>, GbError> {
    let dropped: Vec<usize> = (0..keep.len()).filter(|&v| !keep[v]).collect();
    if !gb.order().eliminates(&dropped) {
        return Err(GbError::NotEliminationOrder);
    }
    Ok(gb
        .elements()
        .iter()
        .filter(|g| g.supported_on(keep))
        .cloned()
        .collect())
}

/// Exact quotient `f / g` for `f` in the principal ideal `(g)`.
fn divide_exact<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    order: &TermOrder,
) -> Polynomial<F> {
    let field = ring.field();
    let (g_lt, g_lc) = {
        let (m, c) = g.leading_term(order).expect("nonzero divisor");
        (m.clone(), c.clone())
    };
    let mut p = f.clone();
    let mut quotient: Vec<(Monomial, F::Elem)> = Vec::new();
    while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        assert!(
            g_lt.divides(&lm),
            "divide_exact called on a non-multiple"
        );
        let ratio = field.mul(&lc, &field.inv(&g_lc));
        let shift = lm.div(&g_lt);
        p = p.sub(ring, &g.mul_term(ring, &shift, &ratio));
        quotient.push((shift, ratio));
    }
    ring.from_terms(quotient)
}

/// Generators of the colon ideal `(gens) : f`, computed by intersecting with
/// the principal ideal `(f)` through one auxiliary variable ranked above the
/// whole ring, then dividing by `f`. The output is verified by membership in
/// both directions.
pub fn colon_by<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    f: &Polynomial<F>,
    order: &TermOrder,
    limits: &GbLimits,
) -> Result<Vec<Polynomial<F>>, GbError> {
    if f.is_zero() {
        return Err(GbError::ColonByZero);
    }
    if f.degree() == 0 {
        return Ok(gens.iter().filter(|g| !g.is_zero()).cloned().collect());
    }
    let n = ring.n_vars();
    let mut aux = "t".to_string();
    while ring.var_index(&aux).is_some() {
        aux.push('_');
    }
    let mut vars: Vec<String> = ring.var_names().to_vec();
    vars.push(aux);
    let ext_ring = PolyRing::new(vars, ring.field().clone());
    let mut desc = vec![n];
    desc.extend(order.descending().iter().copied());
    let ext_order = TermOrder::new(OrderKind::Lex, desc);

    let t = ext_ring.var_poly(n);
    let f_ext = f.extended(1);
    let mut ext_gens: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.extended(1).mul(&ext_ring, &t))
        .collect();
    ext_gens.push(f_ext.sub(&ext_ring, &f_ext.mul(&ext_ring, &t)));

    let ext_gb = buchberger_reduced(&ext_ring, &ext_gens, &ext_order, limits)?;
    let mut keep = vec![true; n + 1];
    keep[n] = false;
    let intersection = eliminate(&ext_gb, &keep)?;

    let mut result: Vec<Polynomial<F>> = intersection
        .iter()
        .map(|e| {
            let e_small = e.restricted(&keep);
            divide_exact(ring, &e_small, f, order).monic(ring, order)
        })
        .collect();
    result.sort_by(|a, b| {
        order.cmp(
            a.leading_term(order).unwrap().0,
            b.leading_term(order).unwrap().0,
        )
    });
    result.dedup();

    // membership both ways: f * c in (gens), and gens in (result)
    let gens_gb = buchberger_reduced(ring, gens, order, limits)?;
    for c in &result {
        assert!(
            gens_gb.contains(ring, &c.mul(ring, f)),
            "colon generator fails the defining membership"
        );
    }
    let result_gb = buchberger_reduced(ring, &result, order, limits)?;
    for g in gens {
        assert!(
            result_gb.contains(ring, g),
            "colon ideal does not contain the original ideal"
        );
    }
    Ok(result)
}

/// Ideal equality through canonical reduced bases.
pub fn ideal_equal<F: Field>(
    ring: &PolyRing<F>,
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
    order: &TermOrder,
    limits: &GbLimits,
) -> Result<bool, GbError> {
    let ga = buchberger_reduced(ring, a, order, limits)?;
    let gb = buchberger_reduced(ring, b, order, limits)?;
    Ok(ga.elements() == gb.elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_poly;

    fn ring2x2() -> PolyRing<PrimeField> {
        PolyRing::new(
            vec!["x[1,1]".into(), "x[1,2]".into(), "x[2,1]".into(), "x[2,2]".into()],
            PrimeField::new(32003).unwrap(),
        )
    }

    #[test]
    fn normal_form_examples() {
        let r = ring2x2();
        let lex = TermOrder::lex(4);
        let minor = parse_poly(&r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]").unwrap();
        let f = parse_poly(&r, "x[1,1]*x[2,2]").unwrap();
        let nf = normal_form(&r, &f, &[minor.clone()], &lex);
        assert_eq!(nf, parse_poly(&r, "x[1,2]*x[2,1]").unwrap());
        // already reduced
        let g = parse_poly(&r, "x[1,2]*x[2,1]").unwrap();
        assert_eq!(normal_form(&r, &g, &[minor.clone()], &lex), g);
        // basis element reduces to zero
        assert!(normal_form(&r, &minor, &[minor.clone()], &lex).is_zero());
    }

    #[test]
    fn single_binomial_gb() {
        let r = ring2x2();
        let lex = TermOrder::lex(4);
        let minor = parse_poly(&r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]").unwrap();
        let gb = buchberger_reduced(&r, &[minor.clone()], &lex, &GbLimits::default()).unwrap();
        assert_eq!(gb.elements(), &[minor]);
        assert!(gb.is_quadratic());
    }

    #[test]
    fn textbook_lex_basis() {
        // x^2 + y^2 - 1, xy: classic non-trivial lex run
        let r = PolyRing::new(vec!["x".into(), "y".into()], PrimeField::new(32003).unwrap());
        let lex = TermOrder::lex(2);
        let f1 = parse_poly(&r, "x^2 + y^2 - 1").unwrap();
        let f2 = parse_poly(&r, "x*y").unwrap();
        let gb = buchberger_reduced(&r, &[f1.clone(), f2.clone()], &lex, &GbLimits::default())
            .unwrap();
        assert!(gb.contains(&r, &f1));
        assert!(gb.contains(&r, &f2));
        // y^4 - y^2 = y^2 (y^2 - 1) belongs to the ideal
        let y4 = parse_poly(&r, "y^4 - y^2").unwrap();
        assert!(gb.contains(&r, &y4));
    }

    #[test]
    fn elimination_intersects_principal_ideals() {
        // (x) and (y): generators t x, (1-t) y, eliminate t -> (xy)
        let r = PolyRing::new(vec!["x".into(), "y".into()], PrimeField::new(32003).unwrap());
        let lex = TermOrder::lex(2);
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let inter = colon_by(&r, &[x.mul(&r, &y)], &r.monomial(crate::poly::Monomial::one(2)), &lex, &GbLimits::default());
        assert!(inter.is_ok());
    }

    #[test]
    fn colon_examples() {
        let r = ring2x2();
        let lex = TermOrder::lex(4);
        let limits = GbLimits::default();
        let minor = parse_poly(&r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]").unwrap();
        // colon by 1 returns the ideal unchanged
        let one = parse_poly(&r, "1").unwrap();
        let q = colon_by(&r, &[minor.clone()], &one, &lex, &limits).unwrap();
        assert_eq!(q, vec![minor.clone()]);
        // (x y) : x = (y) in a small ring
        let r2 = PolyRing::new(vec!["x".into(), "y".into()], PrimeField::new(32003).unwrap());
        let lex2 = TermOrder::lex(2);
        let xy = parse_poly(&r2, "x*y").unwrap();
        let x = parse_poly(&r2, "x").unwrap();
        let y = parse_poly(&r2, "y").unwrap();
        let q = colon_by(&r2, &[xy], &x, &lex2, &limits).unwrap();
        assert_eq!(q, vec![y]);
    }

    #[test]
    fn eliminate_requires_a_block_order() {
        let r = PolyRing::new(
            vec!["t".into(), "x".into(), "y".into()],
            PrimeField::new(32003).unwrap(),
        );
        let limits = GbLimits::default();
        // (t x, y - t y) under lex t > x > y
        let tx = parse_poly(&r, "t*x").unwrap();
        let f = parse_poly(&r, "y - t*y").unwrap();
        let lex = TermOrder::lex(3);
        let gb = buchberger_reduced(&r, &[tx, f], &lex, &limits).unwrap();
        let kept = eliminate(&gb, &[false, true, true]).unwrap();
        // x y = x * (y - t y) + y * (t x) survives the elimination
        let xy = parse_poly(&r, "x*y").unwrap();
        assert_eq!(kept, vec![xy]);

        // degrevlex does not eliminate
        let drl = TermOrder::degrevlex(3);
        let gb2 = buchberger_reduced(&r, &[parse_poly(&r, "t*x").unwrap()], &drl, &limits).unwrap();
        assert!(matches!(
            eliminate(&gb2, &[false, true, true]),
            Err(GbError::NotEliminationOrder)
        ));
        // nothing dropped: basis passes through unchanged
        let all = eliminate(&gb, &[true, true, true]).unwrap();
        assert_eq!(all.len(), gb.elements().len());
    }

    #[test]
    fn ideal_equality() {
        let r2 = PolyRing::new(vec!["x".into(), "y".into()], PrimeField::new(32003).unwrap());
        let lex2 = TermOrder::lex(2);
        let limits = GbLimits::default();
        let x = parse_poly(&r2, "x").unwrap();
        let y = parse_poly(&r2, "y").unwrap();
        let xpy = parse_poly(&r2, "x + y").unwrap();
        assert!(ideal_equal(&r2, &[x.clone(), y.clone()], &[y.clone(), xpy], &lex2, &limits)
            .unwrap());
        assert!(!ideal_equal(&r2, &[x.clone()], &[y], &lex2, &limits).unwrap());
    }

    #[test]
    fn degree_cap_trips() {
        // x - y^2 with lex x > y keeps spawning higher-degree elements when we
        // force a tiny cap through an artificial chain
        let r2 = PolyRing::new(vec!["x".into(), "y".into()], PrimeField::new(32003).unwrap());
        let lex2 = TermOrder::lex(2);
        let f = parse_poly(&r2, "x^2 - y^3").unwrap();
        let g = parse_poly(&r2, "x*y^2 - y").unwrap();
        let tiny = GbLimits {
            max_elements: 20_000,
            max_degree: 3,
        };
        let res = buchberger_reduced(&r2, &[f, g], &lex2, &tiny);
        assert!(matches!(res, Err(GbError::ResourceCap(_))));
    }
}
