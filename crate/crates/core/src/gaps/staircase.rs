//! Two explicit families of self-conjugate staircases whose rows vanish on
//! every class with a part `x + y` or `2(x + y)`.

use serde::Serialize;

use super::SelfConjugateShape;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StaircaseVariant {
    /// `((sx+sy)^x, …, (sx+y)^x, (sx)^y, …, x^y)`, `n = sx(s(x+y)+y)`.
    A,
    /// `((sx+(s-1)y)^x, …, (sx)^x, ((s-1)x)^y, …, x^y)`, `n = sx(s(x+y)-y)`.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StaircaseFamily {
    pub variant: StaircaseVariant,
    pub alpha: Partition,
    pub predicted: [usize; 2],
}

pub fn staircase_family(
    variant: StaircaseVariant,
    s: usize,
    x: usize,
    y: usize,
) -> Result<StaircaseFamily> {
    if x == 0 || y == 0 || x > y || s < 2 {
        return Err(Error::domain(format!(
            "staircase needs 0 < x ≤ y and s ≥ 2, got s={s} x={x} y={y}"
        )));
    }
    let mut parts = Vec::new();
    let (wide, expected_n) = match variant {
        StaircaseVariant::A => ((1..=s).rev().collect::<Vec<_>>(), s * x * (s * (x + y) + y)),
        StaircaseVariant::B => ((0..s).rev().collect(), s * x * (s * (x + y) - y)),
    };
    for t in wide {
        parts.extend(std::iter::repeat_n(s * x + t * y, x));
    }
    let narrow_top = match variant {
        StaircaseVariant::A => s,
        StaircaseVariant::B => s - 1,
    };
    for t in (1..=narrow_top).rev() {
        parts.extend(std::iter::repeat_n(t * x, y));
    }
    let alpha = Partition::new(parts)?;
    if alpha.size() != expected_n {
        return Err(Error::domain(format!(
            "staircase {variant:?} s={s} x={x} y={y} has size {} not {expected_n}",
            alpha.size()
        )));
    }
    let shape = SelfConjugateShape::new(&alpha)?;
    let predicted = [x + y, 2 * (x + y)];
    let gaps = shape.gap_set();
    if let Some(&miss) = predicted.iter().find(|&&p| !gaps.contains(p as i64)) {
        return Err(Error::domain(format!(
            "staircase {variant:?} s={s} x={x} y={y}: predicted part {miss} is a hook length of {alpha}"
        )));
    }
    Ok(StaircaseFamily {
        variant,
        alpha,
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    #[test]
    fn smallest_members() {
        let a = staircase_family(StaircaseVariant::A, 2, 1, 1).unwrap();
        assert_eq!(a.alpha, parse_partition("4,3,2,1").unwrap());
        assert_eq!(a.predicted, [2, 4]);
        let b = staircase_family(StaircaseVariant::B, 2, 1, 1).unwrap();
        assert_eq!(b.alpha, parse_partition("3,2,1").unwrap());
        assert_eq!(b.alpha.size(), 6);
    }

    #[test]
    fn preconditions() {
        assert!(staircase_family(StaircaseVariant::A, 2, 2, 1).is_err());
        assert!(staircase_family(StaircaseVariant::B, 1, 1, 1).is_err());
    }

    #[test]
    fn family_a_sweep() {
        for s in 2..=5 {
            for y in 1..=5 {
                for x in 1..=y {
                    let fam = staircase_family(StaircaseVariant::A, s, x, y)
                        .unwrap_or_else(|e| panic!("{e}"));
                    assert!(fam.alpha.is_self_conjugate());
                }
            }
        }
    }
}
