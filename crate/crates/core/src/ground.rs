//! Enumeration of ground terms by weight.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ordering::OrderingSpec;
use crate::term::{Signature, SortId, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroundError {
    #[error("symbol `{0}` has weight 0, so weight-bounded enumeration does not terminate")]
    ZeroWeight(String),
}

/// Ground terms of every sort, indexed by exact weight.
#[derive(Clone, Debug)]
pub struct GroundTable {
    by_weight: BTreeMap<(SortId, u64), Vec<Term>>,
    bound: u64,
}

impl GroundTable {
    /// All ground terms up to `bound`.
    pub fn new(
        sig: &Signature,
        ord: &OrderingSpec,
        bound: u64,
    ) -> Result<GroundTable, GroundError> {
        GroundTable::build(sig, ord, bound, false)
    }

    /// Ground terms over the constructors only.
    pub fn constructor_terms(
        sig: &Signature,
        ord: &OrderingSpec,
        bound: u64,
    ) -> Result<GroundTable, GroundError> {
        GroundTable::build(sig, ord, bound, true)
    }

    fn build(
        sig: &Signature,
        ord: &OrderingSpec,
        bound: u64,
        constructors_only: bool,
    ) -> Result<GroundTable, GroundError> {
        for f in sig.symbols() {
            if ord.symbol_weight(f) == 0 {
                return Err(GroundError::ZeroWeight(sig.name(f).into()));
            }
        }
        let mut by_weight: BTreeMap<(SortId, u64), Vec<Term>> = BTreeMap::new();
        for w in 1..=bound {
            for f in sig
                .symbols()
                .filter(|&f| !(constructors_only && sig.is_defined(f)))
            {
                let d = sig.decl(f);
                let fw = ord.symbol_weight(f) as u64;
                if fw > w {
                    continue;
                }
                let mut out = Vec::new();
                combine(&by_weight, &d.args, w - fw, &mut Vec::new(), &mut |args| {
                    out.push(Term::app(f, args.to_vec()))
                });
                if !out.is_empty() {
                    by_weight.entry((d.result, w)).or_default().extend(out);
                }
            }
        }
        Ok(GroundTable { by_weight, bound })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn of_weight(&self, sort: SortId, w: u64) -> &[Term] {
        self.by_weight.get(&(sort, w)).map_or(&[], Vec::as_slice)
    }

    pub fn up_to(&self, sort: SortId, w: u64) -> Vec<Term> {
        (1..=w.min(self.bound))
            .flat_map(|k| self.of_weight(sort, k).iter().cloned())
            .collect()
    }
}

fn combine(
    table: &BTreeMap<(SortId, u64), Vec<Term>>,
    sorts: &[SortId],
    remaining: u64,
    acc: &mut Vec<Term>,
    emit: &mut impl FnMut(&[Term]),
) {
    match sorts.split_first() {
        None => {
            if remaining == 0 {
                emit(acc);
            }
        }
        Some((&s, rest)) => {
            for w in 1..=remaining {
                if let Some(ts) = table.get(&(s, w)) {
                    for t in ts {
                        acc.push(t.clone());
                        combine(table, rest, remaining - w, acc, emit);
                        acc.pop();
                    }
                }
            }
        }
    }
}

/// Ground terms of `sort` with weight at most `bound`, in strictly
/// increasing order.
pub fn enumerate_ground(
    sig: &Signature,
    ord: &OrderingSpec,
    sort: SortId,
    bound: u64,
) -> Result<Vec<Term>, GroundError> {
    let table = GroundTable::new(sig, ord, bound)?;
    let mut terms = table.up_to(sort, bound);
    terms.sort_by(|a, b| ord.ground_cmp(a, b));
    Ok(terms)
}
