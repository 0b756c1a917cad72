//! Exact piecewise-linear functions of the sum-rate estimate `alpha` and
//! segmented values over the same domain.
//!
//! Interval convention, shared by [`PwlFn`] and [`Segmented`]: the first
//! piece is closed `[lo, c_1]`, every later piece is half-open on the left
//! `(c_j, c_{j+1}]`. A [`Segmented`] may additionally carry a degenerate head
//! segment `[lo, lo]` — the finest-minimizer map needs one when a tie at the
//! left domain end makes the value at `lo` differ from the value just above.
//!
//! All breakpoint arithmetic is exact rational; there are no epsilon
//! comparisons anywhere.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// One affine piece `alpha -> slope * alpha + intercept`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Piece {
    pub fn eval(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }
}

/// Piecewise-linear function on a closed rational interval. Continuity is
/// not assumed; the parametric engine asserts it for its own outputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PwlFn {
    lo: Rational,
    hi: Rational,
    cuts: Vec<Rational>,
    pieces: Vec<Piece>,
}

impl PwlFn {
    pub fn affine(lo: Rational, hi: Rational, slope: Rational, intercept: Rational) -> Result<PwlFn> {
        if lo > hi {
            return Err(Error::DomainMismatch(format!(
                "empty domain [{}, {}]",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(PwlFn {
            lo,
            hi,
            cuts: Vec::new(),
            pieces: vec![Piece { slope, intercept }],
        })
    }

    pub fn constant(lo: Rational, hi: Rational, value: Rational) -> Result<PwlFn> {
        Self::affine(lo, hi, Rational::zero(), value)
    }

    pub fn from_parts(
        lo: Rational,
        hi: Rational,
        cuts: Vec<Rational>,
        pieces: Vec<Piece>,
    ) -> Result<PwlFn> {
        if lo > hi {
            return Err(Error::DomainMismatch("empty domain".into()));
        }
        if pieces.len() != cuts.len() + 1 {
            return Err(Error::DomainMismatch(
                "piece count must be cut count + 1".into(),
            ));
        }
        let mut prev = &lo;
        for c in &cuts {
            if !(prev < c && c < &hi) {
                return Err(Error::DomainMismatch(
                    "cuts must be strictly increasing inside the domain".into(),
                ));
            }
            prev = c;
        }
        Ok(PwlFn {
            lo,
            hi,
            cuts,
            pieces,
        }
        .canonical())
    }

    pub fn domain(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    fn piece_index(&self, x: &Rational) -> usize {
        self.cuts.partition_point(|c| c < x)
    }

    /// The affine piece in force at `x` (the piece owning `(prev, x]`).
    pub fn piece_at(&self, x: &Rational) -> &Piece {
        &self.pieces[self.piece_index(x)]
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if !self.contains(x) {
            return Err(Error::OutOfDomain(format!(
                "{} outside [{}, {}]",
                format_rational(x),
                format_rational(&self.lo),
                format_rational(&self.hi)
            )));
        }
        Ok(self.piece_at(x).eval(x))
    }

    /// Merges adjacent pieces with identical slope and intercept.
    pub fn canonical(mut self) -> PwlFn {
        let mut cuts = Vec::with_capacity(self.cuts.len());
        let mut pieces: Vec<Piece> = Vec::with_capacity(self.pieces.len());
        pieces.push(self.pieces.remove(0));
        for (cut, piece) in self.cuts.drain(..).zip(self.pieces.drain(..)) {
            if pieces.last() == Some(&piece) {
                continue;
            }
            cuts.push(cut);
            pieces.push(piece);
        }
        PwlFn {
            lo: self.lo,
            hi: self.hi,
            cuts,
            pieces,
        }
    }

    fn zip(&self, other: &PwlFn, op: impl Fn(&Piece, &Piece) -> Piece) -> Result<PwlFn> {
        if self.lo != other.lo || self.hi != other.hi {
            return Err(Error::DomainMismatch(format!(
                "[{}, {}] vs [{}, {}]",
                format_rational(&self.lo),
                format_rational(&self.hi),
                format_rational(&other.lo),
                format_rational(&other.hi)
            )));
        }
        let mut cuts: Vec<Rational> = self
            .cuts
            .iter()
            .chain(other.cuts.iter())
            .cloned()
            .collect();
        cuts.sort();
        cuts.dedup();
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        for k in 0..=cuts.len() {
            // Probe just right of the segment's left end: the right endpoint
            // works because pieces own their right endpoints.
            let probe = if k < cuts.len() { &cuts[k] } else { &self.hi };
            pieces.push(op(self.piece_at(probe), other.piece_at(probe)));
        }
        Ok(PwlFn {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            cuts,
            pieces,
        }
        .canonical())
    }

    pub fn add(&self, other: &PwlFn) -> Result<PwlFn> {
        self.zip(other, |a, b| Piece {
            slope: &a.slope + &b.slope,
            intercept: &a.intercept + &b.intercept,
        })
    }

    pub fn sub(&self, other: &PwlFn) -> Result<PwlFn> {
        self.zip(other, |a, b| Piece {
            slope: &a.slope - &b.slope,
            intercept: &a.intercept - &b.intercept,
        })
    }

    /// Restriction to `[a, b]` within the domain.
    pub fn restrict(&self, a: &Rational, b: &Rational) -> Result<PwlFn> {
        if !(self.contains(a) && self.contains(b) && a <= b) {
            return Err(Error::OutOfDomain(format!(
                "cannot restrict to [{}, {}]",
                format_rational(a),
                format_rational(b)
            )));
        }
        if a == b {
            let p = self.piece_at(a).clone();
            return Ok(PwlFn {
                lo: a.clone(),
                hi: b.clone(),
                cuts: Vec::new(),
                pieces: vec![p],
            });
        }
        let mut cuts = Vec::new();
        let mut pieces = vec![self.pieces[self.piece_index(a)].clone()];
        for (c, piece) in self.cuts.iter().zip(self.pieces.iter().skip(1)) {
            if a < c && c < b {
                cuts.push(c.clone());
                pieces.push(piece.clone());
            }
        }
        // The piece in force at the left edge is the one owning values just
        // above `a`; if `a` sits exactly on a cut the next piece starts the
        // restricted function.
        if self.cuts.iter().any(|c| c == a) {
            pieces[0] = self.pieces[self.piece_index(a) + 1].clone();
            // Drop a duplicated first piece if it equals the following one.
        }
        Ok(PwlFn {
            lo: a.clone(),
            hi: b.clone(),
            cuts,
            pieces,
        }
        .canonical())
    }

    /// True when every interior cut joins continuously.
    pub fn is_continuous(&self) -> bool {
        self.cuts
            .iter()
            .enumerate()
            .all(|(k, c)| self.pieces[k].eval(c) == self.pieces[k + 1].eval(c))
    }

    /// Debug serialization: one record per piece with its interval.
    pub fn describe(&self) -> Vec<serde_json::Value> {
        self.spans()
            .map(|(span, piece)| {
                serde_json::json!({
                    "interval": [format_rational(&span.lo), format_rational(&span.hi)],
                    "slope": format_rational(&piece.slope),
                    "intercept": format_rational(&piece.intercept),
                })
            })
            .collect()
    }

    pub fn spans(&self) -> impl Iterator<Item = (Span, &Piece)> {
        let bounds: Vec<Rational> = std::iter::once(self.lo.clone())
            .chain(self.cuts.iter().cloned())
            .chain(std::iter::once(self.hi.clone()))
            .collect();
        self.pieces.iter().enumerate().map(move |(k, p)| {
            (
                Span {
                    lo: bounds[k].clone(),
                    hi: bounds[k + 1].clone(),
                    closed_lo: k == 0,
                },
                p,
            )
        })
    }
}

/// Display-oriented span of one piece or segment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Span {
    pub lo: Rational,
    pub hi: Rational,
    pub closed_lo: bool,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}]",
            if self.closed_lo { "[" } else { "(" },
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

/// Piecewise-constant map from the domain to arbitrary values, same interval
/// convention as [`PwlFn`] plus the optional `[lo, lo]` head segment
/// (`cuts[0] == lo`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segmented<T> {
    lo: Rational,
    hi: Rational,
    cuts: Vec<Rational>,
    vals: Vec<T>,
}

impl<T: Clone + PartialEq> Segmented<T> {
    pub fn constant(lo: Rational, hi: Rational, value: T) -> Segmented<T> {
        Segmented {
            lo,
            hi,
            cuts: Vec::new(),
            vals: vec![value],
        }
    }

    pub fn from_parts(
        lo: Rational,
        hi: Rational,
        cuts: Vec<Rational>,
        vals: Vec<T>,
    ) -> Result<Segmented<T>> {
        if lo > hi || vals.len() != cuts.len() + 1 {
            return Err(Error::DomainMismatch("malformed segmentation".into()));
        }
        let mut prev: Option<&Rational> = None;
        for c in &cuts {
            let lower_ok = match prev {
                None => c >= &lo,
                Some(p) => c > p,
            };
            if !lower_ok || c >= &hi {
                return Err(Error::DomainMismatch(
                    "segment cuts must increase strictly inside the domain".into(),
                ));
            }
            prev = Some(c);
        }
        Ok(Segmented { lo, hi, cuts, vals }.merged())
    }

    pub fn domain(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn values(&self) -> &[T] {
        &self.vals
    }

    pub fn value_at(&self, x: &Rational) -> Result<&T> {
        if x < &self.lo || x > &self.hi {
            return Err(Error::OutOfDomain(format!(
                "{} outside [{}, {}]",
                format_rational(x),
                format_rational(&self.lo),
                format_rational(&self.hi)
            )));
        }
        Ok(&self.vals[self.cuts.partition_point(|c| c < x)])
    }

    /// Merges consecutive equal values.
    pub fn merged(mut self) -> Segmented<T> {
        let mut cuts = Vec::with_capacity(self.cuts.len());
        let mut vals: Vec<T> = Vec::with_capacity(self.vals.len());
        vals.push(self.vals.remove(0));
        for (cut, val) in self.cuts.drain(..).zip(self.vals.drain(..)) {
            if vals.last() == Some(&val) {
                continue;
            }
            cuts.push(cut);
            vals.push(val);
        }
        Segmented {
            lo: self.lo,
            hi: self.hi,
            cuts,
            vals,
        }
    }

    pub fn segments(&self) -> impl Iterator<Item = (Span, &T)> {
        let bounds: Vec<Rational> = std::iter::once(self.lo.clone())
            .chain(self.cuts.iter().cloned())
            .chain(std::iter::once(self.hi.clone()))
            .collect();
        self.vals.iter().enumerate().map(move |(k, v)| {
            (
                Span {
                    lo: bounds[k].clone(),
                    hi: bounds[k + 1].clone(),
                    closed_lo: k == 0,
                },
                v,
            )
        })
    }

    pub fn map<U: Clone + PartialEq>(&self, f: impl Fn(&T) -> U) -> Segmented<U> {
        Segmented {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            cuts: self.cuts.clone(),
            vals: self.vals.iter().map(f).collect(),
        }
        .merged()
    }
}

/// Incremental builder for stitched segmentations and envelopes.
pub struct SegmentedBuilder<T> {
    lo: Rational,
    hi: Rational,
    cuts: Vec<Rational>,
    vals: Vec<T>,
    cursor: Rational,
}

impl<T: Clone + PartialEq> SegmentedBuilder<T> {
    pub fn new(lo: Rational, hi: Rational) -> SegmentedBuilder<T> {
        let cursor = lo.clone();
        SegmentedBuilder {
            lo,
            hi,
            cuts: Vec::new(),
            vals: Vec::new(),
            cursor,
        }
    }

    /// Appends a segment reaching up to `upto` (inclusive). The first call
    /// with `upto == lo` creates the degenerate head segment.
    pub fn push(&mut self, upto: Rational, val: T) {
        debug_assert!(upto >= self.cursor && upto <= self.hi);
        if !self.vals.is_empty() {
            if upto == self.cursor {
                return;
            }
            self.cuts.push(self.cursor.clone());
        }
        self.vals.push(val);
        self.cursor = upto;
    }

    pub fn finish(self) -> Result<Segmented<T>> {
        if self.cursor != self.hi || self.vals.is_empty() {
            return Err(Error::Internal(
                "segmentation does not tile the domain".into(),
            ));
        }
        Segmented::from_parts(self.lo, self.hi, self.cuts, self.vals)
    }
}

/// Lower envelope of a nonempty candidate family on a common domain.
///
/// Returns the pointwise minimum and, per maximal segment, the index set of
/// candidates achieving it throughout the segment's interior. At a breakpoint
/// the displayed segments close on the left (finer) side; the exact tie set
/// at any single point is available from [`minimizers_at`].
pub fn lower_envelope_with_witnesses(
    candidates: &[PwlFn],
) -> Result<(PwlFn, Segmented<Vec<usize>>)> {
    let first = candidates
        .first()
        .ok_or_else(|| Error::Domain("lower envelope of an empty candidate list".into()))?;
    let (lo, hi) = (first.lo.clone(), first.hi.clone());
    for c in candidates {
        if c.lo != lo || c.hi != hi {
            return Err(Error::DomainMismatch(
                "envelope candidates on different domains".into(),
            ));
        }
    }

    if lo == hi {
        let vals: Vec<Rational> = candidates
            .iter()
            .map(|c| c.eval(&lo))
            .collect::<Result<_>>()?;
        let min = vals.iter().min().expect("nonempty").clone();
        let wits: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == min).collect();
        return Ok((
            PwlFn::constant(lo.clone(), hi.clone(), min)?,
            Segmented::constant(lo, hi, wits),
        ));
    }

    // Cell grid: between consecutive candidate cuts every candidate is one
    // affine piece.
    let mut grid: Vec<Rational> = vec![lo.clone(), hi.clone()];
    for c in candidates {
        grid.extend(c.cuts.iter().cloned());
    }
    grid.sort();
    grid.dedup();

    let mut env_cuts: Vec<Rational> = Vec::new();
    let mut env_pieces: Vec<Piece> = Vec::new();
    let mut push_piece = |upto_is_hi: bool, cut: Option<Rational>, piece: Piece| {
        env_pieces.push(piece);
        if !upto_is_hi {
            env_cuts.push(cut.expect("interior cut"));
        }
    };

    for w in grid.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mid = (a + b) / crate::rational::rat(2);
        let lines: Vec<&Piece> = candidates.iter().map(|c| c.piece_at(&mid)).collect();
        // March the cell left to right following the minimum.
        let mut x = a.clone();
        loop {
            let vals: Vec<Rational> = lines.iter().map(|l| l.eval(&x)).collect();
            let min = vals.iter().min().expect("nonempty").clone();
            let cur = (0..lines.len())
                .filter(|&i| vals[i] == min)
                .min_by(|&i, &j| lines[i].slope.cmp(&lines[j].slope))
                .expect("nonempty");
            let cur_line = lines[cur];
            // Earliest point in (x, b) where some line dips below `cur_line`.
            let mut next: Option<Rational> = None;
            for l in &lines {
                if l.slope < cur_line.slope {
                    let cross =
                        (&l.intercept - &cur_line.intercept) / (&cur_line.slope - &l.slope);
                    if cross > x && cross < *b && next.as_ref().is_none_or(|n| &cross < n) {
                        next = Some(cross);
                    }
                }
            }
            match next {
                Some(c) => {
                    push_piece(false, Some(c.clone()), cur_line.clone());
                    x = c;
                }
                None => {
                    push_piece(b == &hi, Some(b.clone()), cur_line.clone());
                    break;
                }
            }
        }
    }

    let env = PwlFn::from_parts(lo.clone(), hi.clone(), env_cuts, env_pieces)?;

    // Witness segmentation: the active set is constant strictly between
    // consecutive points of (cell grid + envelope cuts).
    let mut wgrid: Vec<Rational> = grid;
    wgrid.extend(env.cuts.iter().cloned());
    wgrid.sort();
    wgrid.dedup();
    let mut builder = SegmentedBuilder::new(lo.clone(), hi.clone());
    for w in wgrid.windows(2) {
        let mid = (&w[0] + &w[1]) / crate::rational::rat(2);
        let envval = env.eval(&mid)?;
        let wits: Vec<usize> = candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| c.piece_at(&mid).eval(&mid) == envval)
            .map(|(i, _)| i)
            .collect();
        builder.push(w[1].clone(), wits);
    }
    Ok((env, builder.finish()?))
}

/// Exact argmin set at a single point.
pub fn minimizers_at(candidates: &[PwlFn], x: &Rational) -> Result<Vec<usize>> {
    let vals: Vec<Rational> = candidates
        .iter()
        .map(|c| c.eval(x))
        .collect::<Result<_>>()?;
    let min = vals
        .iter()
        .min()
        .ok_or_else(|| Error::Domain("argmin of an empty candidate list".into()))?
        .clone();
    Ok((0..vals.len()).filter(|&i| vals[i] == min).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn aff(lo: i64, hi: i64, s: i64, c: i64) -> PwlFn {
        PwlFn::affine(rat(lo), rat(hi), rat(s), rat(c)).unwrap()
    }

    #[test]
    fn eval_affine() {
        let f = aff(0, 10, 1, -10);
        assert_eq!(f.eval(&ratio(13, 2)).unwrap(), ratio(-7, 2));
        assert!(f.eval(&rat(11)).is_err());
    }

    #[test]
    fn add_and_sub() {
        let f = aff(0, 10, 1, -2);
        let g = aff(0, 10, 1, -4);
        let sum = f.add(&g).unwrap();
        assert_eq!(sum, aff(0, 10, 2, -6));
        let zero = f.sub(&f).unwrap();
        assert_eq!(zero, aff(0, 10, 0, 0));
        assert!(f.add(&aff(0, 9, 1, 0)).is_err());
    }

    #[test]
    fn envelope_of_constant_and_line() {
        let a = aff(0, 10, 0, 6);
        let b = aff(0, 10, -1, 10);
        let (env, wits) = lower_envelope_with_witnesses(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(env.cuts(), &[rat(4)]);
        assert_eq!(env.eval(&rat(2)).unwrap(), rat(6));
        assert_eq!(env.eval(&rat(4)).unwrap(), rat(6));
        assert_eq!(env.eval(&rat(7)).unwrap(), rat(3));
        let segs: Vec<(Span, &Vec<usize>)> = wits.segments().collect();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].1, &vec![0]);
        assert_eq!(segs[0].0.hi, rat(4));
        assert_eq!(segs[1].1, &vec![1]);
        // The exact tie set at the breakpoint holds both witnesses.
        assert_eq!(minimizers_at(&[a, b], &rat(4)).unwrap(), vec![0, 1]);
    }

    #[test]
    fn envelope_single_and_identical_candidates() {
        let f = aff(0, 5, 2, 1);
        let (env, wits) = lower_envelope_with_witnesses(&[f.clone()]).unwrap();
        assert_eq!(env, f);
        assert!(wits.segments().all(|(_, w)| w == &vec![0]));
        let (env2, wits2) = lower_envelope_with_witnesses(&[f.clone(), f.clone()]).unwrap();
        assert_eq!(env2, f);
        assert!(wits2.segments().all(|(_, w)| w == &vec![0, 1]));
    }

    #[test]
    fn envelope_point_tangency_keeps_witness_segments_honest() {
        // Three lines through (2, 0): the middle-slope one touches the
        // envelope only at the crossing point.
        let steep = aff(0, 4, -2, 4);
        let mid = aff(0, 4, -1, 2);
        let flat = aff(0, 4, 0, 0);
        let cands = [steep, mid, flat];
        let (env, wits) = lower_envelope_with_witnesses(&cands).unwrap();
        assert_eq!(env.cuts(), &[rat(2)]);
        let segs: Vec<(Span, &Vec<usize>)> = wits.segments().collect();
        assert_eq!(segs[0].1, &vec![0]);
        assert_eq!(segs[1].1, &vec![2]);
        assert_eq!(minimizers_at(&cands, &rat(2)).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn envelope_on_degenerate_domain() {
        let a = PwlFn::affine(rat(3), rat(3), rat(1), rat(0)).unwrap();
        let b = PwlFn::affine(rat(3), rat(3), rat(0), rat(5)).unwrap();
        let (env, wits) = lower_envelope_with_witnesses(&[a, b]).unwrap();
        assert_eq!(env.eval(&rat(3)).unwrap(), rat(3));
        assert_eq!(wits.value_at(&rat(3)).unwrap(), &vec![0]);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let f = PwlFn::from_parts(
            rat(0),
            rat(4),
            vec![rat(1), rat(2)],
            vec![
                Piece { slope: rat(1), intercept: rat(0) },
                Piece { slope: rat(1), intercept: rat(0) },
                Piece { slope: rat(0), intercept: rat(2) },
            ],
        )
        .unwrap();
        assert_eq!(f.cuts(), &[rat(2)]);
        let again = f.clone().canonical();
        assert_eq!(f, again);
    }

    #[test]
    fn restrict_keeps_pointwise_values() {
        let f = PwlFn::from_parts(
            rat(0),
            rat(10),
            vec![rat(4)],
            vec![
                Piece { slope: rat(0), intercept: rat(6) },
                Piece { slope: rat(-1), intercept: rat(10) },
            ],
        )
        .unwrap();
        let g = f.restrict(&rat(4), &rat(8)).unwrap();
        // Values just above 4 come from the second piece.
        assert_eq!(g.eval(&rat(5)).unwrap(), rat(5));
        assert_eq!(g.eval(&rat(8)).unwrap(), rat(2));
        let h = f.restrict(&rat(1), &rat(4)).unwrap();
        assert_eq!(h.eval(&rat(4)).unwrap(), rat(6));
        let point = f.restrict(&rat(4), &rat(4)).unwrap();
        assert_eq!(point.eval(&rat(4)).unwrap(), rat(6));
    }

    #[test]
    fn segmented_head_point_segment() {
        let s = Segmented::from_parts(
            rat(0),
            rat(10),
            vec![rat(0), rat(4)],
            vec!["fine", "mid", "coarse"],
        )
        .unwrap();
        assert_eq!(s.value_at(&rat(0)).unwrap(), &"fine");
        assert_eq!(s.value_at(&ratio(1, 2)).unwrap(), &"mid");
        assert_eq!(s.value_at(&rat(4)).unwrap(), &"mid");
        assert_eq!(s.value_at(&rat(5)).unwrap(), &"coarse");
        let spans: Vec<Span> = s.segments().map(|(sp, _)| sp).collect();
        assert_eq!(spans[0].lo, spans[0].hi);
        assert!(spans[0].closed_lo);
    }

    #[test]
    fn segmented_merges_equal_neighbors() {
        let s = Segmented::from_parts(rat(0), rat(3), vec![rat(1), rat(2)], vec![1, 1, 2]).unwrap();
        assert_eq!(s.cuts(), &[rat(2)]);
        assert_eq!(s.values(), &[1, 2]);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn line_strategy() -> impl Strategy<Value = PwlFn> {
            (-20i64..=20, -50i64..=50)
                .prop_map(|(s, c)| PwlFn::affine(rat(0), rat(10), rat(s), rat(c)).unwrap())
        }

        proptest! {
            #[test]
            fn envelope_matches_pointwise_min(
                lines in proptest::collection::vec(line_strategy(), 1..8),
                num in 0i64..=1000,
            ) {
                let x = ratio(num, 100); // dense rational samples in [0, 10]
                let (env, _) = lower_envelope_with_witnesses(&lines).unwrap();
                let direct = lines.iter().map(|l| l.eval(&x).unwrap()).min().unwrap();
                prop_assert_eq!(env.eval(&x).unwrap(), direct);
            }

            #[test]
            fn envelope_of_k_lines_has_at_most_k_minus_1_breakpoints(
                lines in proptest::collection::vec(line_strategy(), 1..8),
            ) {
                let (env, _) = lower_envelope_with_witnesses(&lines).unwrap();
                prop_assert!(env.cuts().len() < lines.len());
                prop_assert!(env.is_continuous());
            }
        }
    }
}
