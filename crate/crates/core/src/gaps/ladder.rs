//! One-step North-East ladders of gap intervals.
//!
//! A ladder climbs from `G_{v,v}` towards the first row, alternating a step
//! up and a step right (`N`) or right and up (`E`). Its intersection is the
//! interval `[max(a, c), min(b, d)]`, where `a`/`b` bound the diagonal rungs
//! and `c`/`d` the off-diagonal ones. Any part in it is a non-hook-length.

use serde::Serialize;

use super::SelfConjugateShape;
use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    N,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LadderSpec {
    pub v: usize,
    pub direction: Direction,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub interval: Interval,
}

impl SelfConjugateShape {
    /// Largest legal step index in a direction.
    pub fn max_ladder(&self, direction: Direction) -> usize {
        match direction {
            Direction::N => self.m() / 2 + 1,
            Direction::E => self.m().div_ceil(2),
        }
    }

    pub fn ladder_interval(&self, v: usize, direction: Direction) -> Result<LadderSpec> {
        if v == 1 {
            let (lo, hi) = (2 * self.r(1), self.n());
            return Ok(LadderSpec {
                v,
                direction,
                a: lo,
                b: hi,
                c: lo,
                d: hi,
                interval: Interval::new(lo, hi),
            });
        }
        if v < 1 || v > self.max_ladder(direction) {
            return Err(Error::domain(format!(
                "ladder step {v} out of range 1..={} for direction {direction:?}",
                self.max_ladder(direction)
            )));
        }
        let steps = match direction {
            Direction::N => 0..v - 1,
            Direction::E => 0..v,
        };
        let mut a = i64::MIN;
        let mut b = i64::MAX;
        let mut c = i64::MIN;
        let mut d = i64::MAX;
        for i in steps {
            let (lo_diag, hi_diag) = (v - i, v + i);
            a = a.max(self.term([lo_diag, hi_diag], [lo_diag - 1, hi_diag - 1]));
            b = b.min(self.term([lo_diag - 1, hi_diag - 1], [lo_diag - 1, hi_diag - 1]));
            match direction {
                Direction::N => {
                    c = c.max(self.term([v - i - 1, v + i], [v - i - 2, v + i - 1]));
                    // v - i - 2 is never negative here: i ≤ v - 2
                    d = d.min(self.term([v - i - 2, v + i - 1], [v - i - 2, v + i - 1]));
                }
                Direction::E => {
                    c = c.max(self.term([v - i, v + i + 1], [v - i - 1, v + i]));
                    d = d.min(self.term([v - i - 1, v + i], [v - i - 1, v + i]));
                }
            }
        }
        Ok(LadderSpec {
            v,
            direction,
            a,
            b,
            c,
            d,
            interval: Interval::new(a.max(c), b.min(d)),
        })
    }

    /// Every legal ladder: `v = 1` once per direction, then `v ≥ 2`.
    pub fn ladders(&self) -> Vec<LadderSpec> {
        let mut out = Vec::new();
        for direction in [Direction::N, Direction::E] {
            for v in 1..=self.max_ladder(direction).max(1) {
                out.push(
                    self.ladder_interval(v, direction)
                        .expect("v within legal range"),
                );
            }
        }
        out
    }

    /// First ladder (in [`Self::ladders`] order) whose interval holds `x`.
    pub fn ladder_containing(&self, x: i64) -> Option<LadderSpec> {
        self.ladders().into_iter().find(|l| l.interval.contains(x))
    }
}
