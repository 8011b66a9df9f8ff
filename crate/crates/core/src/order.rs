//! Monomial orders: lexicographic and degree-reverse-lexicographic, over an
//! arbitrary permutation of the ring variables.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// A term order. `desc[0]` is the greatest variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    desc: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, desc: Vec<usize>) -> Self {
        let n = desc.len();
        let mut seen = vec![false; n];
        for &v in &desc {
            assert!(v < n && !seen[v], "descending list must be a permutation");
            seen[v] = true;
        }
        TermOrder { kind, desc }
    }

    /// Lex with the natural variable order `x_0 > x_1 > ...`.
    pub fn lex(n_vars: usize) -> Self {
        TermOrder::new(OrderKind::Lex, (0..n_vars).collect())
    }

    pub fn degrevlex(n_vars: usize) -> Self {
        TermOrder::new(OrderKind::DegRevLex, (0..n_vars).collect())
    }

    pub fn n_vars(&self) -> usize {
        self.desc.len()
    }

    /// Variables in descending order.
    pub fn descending(&self) -> &[usize] {
        &self.desc
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.desc {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // last variable where they differ: smaller exponent wins
                for &v in self.desc.iter().rev() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// True iff every variable of `dropped` ranks above every other variable,
    /// so that this order eliminates `dropped`.
    pub fn eliminates(&self, dropped: &[usize]) -> bool {
        if self.kind != OrderKind::Lex {
            return false;
        }
        let k = dropped.len();
        dropped.iter().all(|v| self.desc[..k].contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_and_degrevlex() {
        let lex = TermOrder::lex(3);
        assert_eq!(lex.cmp(&m(&[2, 1, 0]), &m(&[1, 2, 0])), Ordering::Greater);
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);

        let drl = TermOrder::degrevlex(3);
        // degree first
        assert_eq!(drl.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Less);
        // same degree: least trailing exponent wins
        assert_eq!(drl.cmp(&m(&[2, 1, 0]), &m(&[1, 2, 0])), Ordering::Greater);
        assert_eq!(drl.cmp(&m(&[0, 0, 3]), &m(&[2, 1, 0])), Ordering::Less);
    }

    #[test]
    fn custom_permutation() {
        // z > y > x
        let lex = TermOrder::new(OrderKind::Lex, vec![2, 1, 0]);
        assert_eq!(lex.cmp(&m(&[5, 0, 1]), &m(&[0, 1, 1])), Ordering::Less);
        assert!(lex.eliminates(&[2]));
        assert!(!lex.eliminates(&[0]));
    }
}
