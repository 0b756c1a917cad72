//! Exact-rational entropy oracles over a ground set of users.
//!
//! The multiple random source `Z_V = (Z_i : i in V)` enters the solvers only
//! through its entropy function `H : 2^V -> Q>=0`. Three source models are
//! supported behind a common trait, selected by name when an instance
//! document is loaded:
//!
//! * `bits` — each user observes a set of independent uniform bits;
//!   `H(X)` is the cardinality of the union of the users' bit-label sets.
//! * `linear` — each user observes rows of a matrix over GF(q); `H(X)` is
//!   the rank of the stacked matrices, in units of `log q` symbols.
//! * `table` — `H` given explicitly for every subset.
//!
//! Oracles are immutable after construction and safe to share across
//! threads; the memo cache is internally synchronized.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gf::{rank_of_rows, Field};
use crate::rational::{rat, Rational};
use crate::set::{Subset, Universe, UserId};

/// A source model resolves subset entropies; members are given as bitmask
/// over ground-set indices.
pub trait SourceModel: Send + Sync {
    fn kind(&self) -> &'static str;
    fn entropy_of(&self, members: Subset) -> Rational;
}

/// Independent uniform bits; per-user label sets packed as bitmasks over the
/// global label list.
pub struct BitsModel {
    label_names: Vec<String>,
    holdings: Vec<u128>,
}

impl BitsModel {
    pub fn new(per_user_labels: Vec<Vec<String>>) -> Result<BitsModel> {
        let mut label_names: Vec<String> = per_user_labels
            .iter()
            .flatten()
            .cloned()
            .collect();
        label_names.sort();
        label_names.dedup();
        if label_names.len() > 128 {
            return Err(Error::Instance(format!(
                "{} distinct bit labels exceed the 128-label cap",
                label_names.len()
            )));
        }
        let holdings = per_user_labels
            .iter()
            .map(|labels| {
                let mut mask = 0u128;
                for l in labels {
                    let idx = label_names.binary_search(l).expect("label was collected");
                    mask |= 1 << idx;
                }
                mask
            })
            .collect();
        Ok(BitsModel {
            label_names,
            holdings,
        })
    }

    pub fn label_names(&self) -> &[String] {
        &self.label_names
    }

    pub fn holding_mask(&self, user_index: usize) -> u128 {
        self.holdings[user_index]
    }
}

impl SourceModel for BitsModel {
    fn kind(&self) -> &'static str {
        "bits"
    }

    fn entropy_of(&self, members: Subset) -> Rational {
        let union = members
            .indices()
            .fold(0u128, |acc, i| acc | self.holdings[i]);
        rat(union.count_ones() as i64)
    }
}

/// Each user observes rows over GF(q); entropy is matroid rank.
pub struct LinearModel {
    field: Field,
    cols: usize,
    rows_per_user: Vec<Vec<Vec<u16>>>,
}

impl LinearModel {
    pub fn new(field: Field, cols: usize, rows_per_user: Vec<Vec<Vec<u16>>>) -> Result<LinearModel> {
        for rows in &rows_per_user {
            for row in rows {
                if row.len() != cols {
                    return Err(Error::Instance(format!(
                        "ragged linear model: row of width {} in a {}-column system",
                        row.len(),
                        cols
                    )));
                }
                for &v in row {
                    field.validate_elem(v)?;
                }
            }
        }
        Ok(LinearModel {
            field,
            cols,
            rows_per_user,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows_of(&self, user_index: usize) -> &[Vec<u16>] {
        &self.rows_per_user[user_index]
    }
}

impl SourceModel for LinearModel {
    fn kind(&self) -> &'static str {
        "linear"
    }

    fn entropy_of(&self, members: Subset) -> Rational {
        let rows = members.indices().flat_map(|i| self.rows_per_user[i].iter());
        rat(rank_of_rows(self.field, self.cols, rows) as i64)
    }
}

/// Entropies tabulated for every subset; partial tables are rejected at
/// construction rather than completed by inference.
pub struct TableModel {
    values: Vec<Rational>,
}

impl TableModel {
    pub fn new(n_users: usize, values: Vec<Rational>) -> Result<TableModel> {
        if values.len() != 1usize << n_users {
            return Err(Error::Instance(format!(
                "table covers {} of {} subsets",
                values.len(),
                1usize << n_users
            )));
        }
        Ok(TableModel { values })
    }
}

impl SourceModel for TableModel {
    fn kind(&self) -> &'static str {
        "table"
    }

    fn entropy_of(&self, members: Subset) -> Rational {
        self.values[members.0 as usize].clone()
    }
}

/// Ground set plus entropy function, with `H(V)` cached eagerly and per-subset
/// values memoized behind a lock.
pub struct EntropyOracle {
    universe: Universe,
    model: Box<dyn SourceModel>,
    h_total: Rational,
    memo: RwLock<HashMap<u32, Rational>>,
}

impl EntropyOracle {
    pub fn new(universe: Universe, model: Box<dyn SourceModel>) -> Result<EntropyOracle> {
        if universe.len() < 2 {
            return Err(Error::Instance(format!(
                "ground set must have more than one user, got {}",
                universe.len()
            )));
        }
        if !model.entropy_of(Subset::EMPTY).is_zero() {
            return Err(Error::Instance("H(empty set) must be 0".into()));
        }
        let h_total = model.entropy_of(universe.full());
        if h_total < rat(0) {
            return Err(Error::Instance("negative total entropy".into()));
        }
        Ok(EntropyOracle {
            universe,
            model,
            h_total,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn model_kind(&self) -> &'static str {
        self.model.kind()
    }

    pub fn model(&self) -> &dyn SourceModel {
        self.model.as_ref()
    }

    pub fn n(&self) -> usize {
        self.universe.len()
    }

    /// Cached `H(V)`.
    pub fn h_total(&self) -> &Rational {
        &self.h_total
    }

    /// `H(X)` for `X` given as an index mask.
    pub fn entropy(&self, x: Subset) -> Rational {
        debug_assert!(x.is_subset_of(self.universe.full()));
        if x.is_empty() {
            return rat(0);
        }
        if x == self.universe.full() {
            return self.h_total.clone();
        }
        if let Some(v) = self.memo.read().expect("memo lock").get(&x.0) {
            return v.clone();
        }
        let v = self.model.entropy_of(x);
        self.memo.write().expect("memo lock").insert(x.0, v.clone());
        v
    }

    /// `H(X)` for `X` given as user ids.
    pub fn entropy_of_ids(&self, ids: &[UserId]) -> Result<Rational> {
        Ok(self.entropy(self.universe.subset_of_ids(ids)?))
    }

    /// `H(C | Y) = H(C u Y) - H(Y)`, nonnegative for valid oracles.
    pub fn conditional_entropy(&self, c: Subset, y: Subset) -> Rational {
        self.entropy(c.union(y)) - self.entropy(y)
    }

    pub fn conditional_entropy_of_ids(&self, c: &[UserId], y: &[UserId]) -> Result<Rational> {
        let c = self.universe.subset_of_ids(c)?;
        let y = self.universe.subset_of_ids(y)?;
        Ok(self.conditional_entropy(c, y))
    }

    /// Exhaustively checks normalization, monotonicity and submodularity.
    /// Submodularity is verified in diminishing-returns form:
    /// `H(X+i) + H(X+j) >= H(X+i+j) + H(X)` for all `X` and `i, j` outside
    /// `X`, which is equivalent to the pairwise definition.
    pub fn validate(&self, limit: usize) -> Result<ValidationReport> {
        let n = self.n();
        if n > limit {
            return Err(Error::LimitExceeded(format!(
                "oracle validation over {n} users (limit {limit})"
            )));
        }
        let mut violations = Vec::new();
        if !self.entropy(Subset::EMPTY).is_zero() {
            violations.push(Violation::Normalization {
                value: self.entropy(Subset::EMPTY),
            });
        }
        let full = self.universe.full();
        for x in full.subsets() {
            let hx = self.entropy(x);
            if x.is_empty() && hx < rat(0) {
                violations.push(Violation::Normalization { value: hx.clone() });
            }
            for i in full.difference(x).indices() {
                let xi = x.union(Subset::singleton(i));
                let hxi = self.entropy(xi);
                if hxi < hx {
                    violations.push(Violation::Monotonicity {
                        x,
                        grown: xi,
                        h_x: hx.clone(),
                        h_grown: hxi.clone(),
                    });
                }
                for j in full.difference(xi).indices() {
                    if j < i {
                        continue;
                    }
                    let xj = x.union(Subset::singleton(j));
                    let xij = xi.union(Subset::singleton(j));
                    let lhs = hxi.clone() + self.entropy(xj);
                    let rhs = self.entropy(xij) + hx.clone();
                    if lhs < rhs {
                        violations.push(Violation::Submodularity {
                            x,
                            i,
                            j,
                            deficit: rhs - lhs,
                        });
                    }
                }
            }
        }
        Ok(ValidationReport { violations })
    }

    /// Restriction of `H` to subsets of `x`, materialized as a table-backed
    /// oracle that treats `x` as a self-contained system.
    pub fn restrict(&self, x: Subset) -> Result<EntropyOracle> {
        if !x.is_subset_of(self.universe.full()) {
            return Err(Error::NotASubset(format!("{x:?}")));
        }
        let member_indices: Vec<usize> = x.indices().collect();
        let k = member_indices.len();
        if k > 20 {
            return Err(Error::LimitExceeded(format!(
                "restriction to {k} users would tabulate 2^{k} entropies"
            )));
        }
        let ids: Vec<UserId> = member_indices
            .iter()
            .map(|&i| self.universe.id_at(i))
            .collect();
        let mut values = Vec::with_capacity(1 << k);
        for sub in 0..(1u32 << k) {
            let mut global = Subset::EMPTY;
            for (local, &gidx) in member_indices.iter().enumerate() {
                if sub >> local & 1 == 1 {
                    global = global.union(Subset::singleton(gidx));
                }
            }
            values.push(self.entropy(global));
        }
        EntropyOracle::new(
            Universe::new(ids)?,
            Box::new(TableModel { values }),
        )
    }
}

#[derive(Debug, Clone)]
pub enum Violation {
    Normalization {
        value: Rational,
    },
    Monotonicity {
        x: Subset,
        grown: Subset,
        h_x: Rational,
        h_grown: Rational,
    },
    Submodularity {
        x: Subset,
        i: usize,
        j: usize,
        deficit: Rational,
    },
}

#[derive(Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    /// The running 5-user bit-holding system used across the test suites.
    pub fn five_user_oracle() -> EntropyOracle {
        let users = vec![1, 2, 3, 4, 5];
        let labels = |s: &str| s.chars().map(|c| c.to_string()).collect::<Vec<_>>();
        let per_user = vec![
            labels("bcdhi"),
            labels("efhi"),
            labels("bcej"),
            labels("abcdfgij"),
            labels("abcfij"),
        ];
        EntropyOracle::new(
            Universe::new(users).unwrap(),
            Box::new(BitsModel::new(per_user).unwrap()),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_fixtures::five_user_oracle;
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn five_user_entropies() {
        let o = five_user_oracle();
        assert_eq!(o.h_total(), &rat(10));
        assert_eq!(o.entropy_of_ids(&[4]).unwrap(), rat(8));
        assert_eq!(o.entropy_of_ids(&[4, 5]).unwrap(), rat(8));
        assert_eq!(o.entropy_of_ids(&[1, 4, 5]).unwrap(), rat(9));
        assert_eq!(o.entropy_of_ids(&[]).unwrap(), rat(0));
    }

    #[test]
    fn conditional_entropy_chain_rule() {
        let o = five_user_oracle();
        // Users 2..5 jointly hold all ten bits, so nothing is left in user 1.
        assert_eq!(
            o.conditional_entropy_of_ids(&[1], &[2, 3, 4, 5]).unwrap(),
            rat(0)
        );
        assert_eq!(o.conditional_entropy_of_ids(&[], &[2]).unwrap(), rat(0));
        assert_eq!(o.conditional_entropy_of_ids(&[3], &[3]).unwrap(), rat(0));
    }

    #[test]
    fn coverage_oracle_validates_clean() {
        let o = five_user_oracle();
        assert!(o.validate(12).unwrap().is_clean());
    }

    #[test]
    fn all_zero_table_is_a_valid_oracle() {
        let o = EntropyOracle::new(
            Universe::new(vec![1, 2]).unwrap(),
            Box::new(TableModel::new(2, vec![rat(0); 4]).unwrap()),
        )
        .unwrap();
        assert!(o.validate(12).unwrap().is_clean());
        assert_eq!(o.h_total(), &rat(0));
    }

    #[test]
    fn monotonicity_violation_is_reported() {
        // H({1,2}) < H({1}).
        let o = EntropyOracle::new(
            Universe::new(vec![1, 2]).unwrap(),
            Box::new(TableModel::new(2, vec![rat(0), rat(2), rat(2), rat(1)]).unwrap()),
        )
        .unwrap();
        let report = o.validate(12).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Monotonicity { .. })));
    }

    #[test]
    fn submodularity_violation_is_reported() {
        // H({1}) + H({2}) < H({1,2}): supermodular "entropy".
        let o = EntropyOracle::new(
            Universe::new(vec![1, 2]).unwrap(),
            Box::new(TableModel::new(2, vec![rat(0), rat(1), rat(1), rat(3)]).unwrap()),
        )
        .unwrap();
        let report = o.validate(12).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Submodularity { .. })));
    }

    #[test]
    fn identical_linear_rows_have_unit_rank() {
        let row = vec![1u16, 0, 1];
        let model = LinearModel::new(
            Field::Prime(2),
            3,
            vec![vec![row.clone()], vec![row.clone()], vec![row]],
        )
        .unwrap();
        let o = EntropyOracle::new(Universe::new(vec![1, 2, 3]).unwrap(), Box::new(model)).unwrap();
        for ids in [vec![1], vec![2, 3], vec![1, 2, 3]] {
            assert_eq!(o.entropy_of_ids(&ids).unwrap(), rat(1));
        }
        assert!(o.validate(12).unwrap().is_clean());
    }

    #[test]
    fn bits_entropy_is_union_cardinality_exhaustively() {
        let o = five_user_oracle();
        let full = o.universe().full();
        for x in full.subsets() {
            let model = o.model();
            let direct = model.entropy_of(x);
            assert_eq!(o.entropy(x), direct);
            assert!(o.entropy(x) <= rat(10));
        }
    }

    #[test]
    fn restriction_is_a_self_contained_system() {
        let o = five_user_oracle();
        let x = o.universe().subset_of_ids(&[1, 4, 5]).unwrap();
        let r = o.restrict(x).unwrap();
        assert_eq!(r.universe().ids(), &[1, 4, 5]);
        assert_eq!(r.h_total(), &rat(9));
        assert_eq!(r.entropy_of_ids(&[4, 5]).unwrap(), rat(8));
        assert!(r.validate(12).unwrap().is_clean());
    }

    #[test]
    fn rejects_degenerate_instances() {
        assert!(EntropyOracle::new(
            Universe::new(vec![1]).unwrap(),
            Box::new(TableModel::new(1, vec![rat(0), rat(1)]).unwrap()),
        )
        .is_err());
        assert!(TableModel::new(2, vec![rat(0), rat(1)]).is_err());
        // H(empty) != 0.
        assert!(EntropyOracle::new(
            Universe::new(vec![1, 2]).unwrap(),
            Box::new(TableModel::new(2, vec![ratio(1, 2), rat(1), rat(1), rat(1)]).unwrap()),
        )
        .is_err());
    }
}
