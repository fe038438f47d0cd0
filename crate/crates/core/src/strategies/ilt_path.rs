//! Strategies on ILT graphs: the clone sequence on `ILT_t(P_n)` and the
//! lift of a sequence from `ILT_t(G)` down to `ILT_2(G)`.

use crate::engine::{validate_sequence, CoolingTrace};
use crate::error::{Error, Result};
use crate::generators::gen_path;
use crate::ilt::{ilt_t, IltGraph};

use super::closed_form::{closed_form, ClosedForm, Family};

#[derive(Clone, Debug)]
pub struct IltPathPlan {
    pub ilt: IltGraph,
    pub sequence: Vec<usize>,
    pub trace: CoolingTrace,
    pub certified: ClosedForm,
}

/// Plays `w_i = p'_{i + floor((i - 1) / 2)}` for `i = 1..=ceil(2n/3)` on
/// `ILT_t(P_n)`, where `p'_j` is the last-iteration clone of path node `j`.
pub fn ilt_path_strategy(n: usize, t: usize) -> Result<IltPathPlan> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("ILT path strategy needs n >= 3, got {n}")));
    }
    let ilt = ilt_t(&gen_path(n)?, t)?;
    let k = (2 * n).div_ceil(3);
    let sequence = (1..=k)
        .map(|i| {
            let j = i + (i - 1) / 2;
            ilt.last_clone_of(j - 1).ok_or_else(|| Error::Internal(format!("no last-iteration clone of path node {j}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let trace = validate_sequence(&ilt.graph, &sequence)?;
    let certified = closed_form(Family::IltPath, &[("n", n), ("t", t)])?;
    Ok(IltPathPlan { ilt, sequence, trace, certified })
}

/// Maps a sequence in `from = ILT_t(G)` to one of the same length in
/// `to = ILT_2(G)`: each entry becomes the first last-iteration clone `x'`
/// of its base node `x`, or the second one `x''` when the previous entry
/// descends from the same `x`.
pub fn ilt_lift_sequence(seq: &[usize], from: &IltGraph, to: &IltGraph) -> Result<Vec<usize>> {
    if from.iterations < 2 || to.iterations != 2 {
        return Err(Error::InvalidParameter(format!(
            "lift needs t >= 2 into ILT_2, got t = {} into ILT_{}",
            from.iterations, to.iterations
        )));
    }
    if from.base_n != to.base_n {
        return Err(Error::InvalidParameter("lift graphs have different base graphs".into()));
    }
    let mut out = Vec::with_capacity(seq.len());
    let mut prev_origin = None;
    for (i, &u) in seq.iter().enumerate() {
        let x = *from.origin.get(u).ok_or(Error::SourceOutOfRange { round: i + 1, node: u })?;
        let which = usize::from(prev_origin == Some(x));
        let v = to
            .last_clones
            .get(x)
            .and_then(|c| c.get(which))
            .copied()
            .ok_or_else(|| Error::Internal(format!("base node {x} lacks clone #{}", which + 1)))?;
        out.push(v);
        prev_origin = Some(x);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_complete;

    #[test]
    fn figure_sized_examples() {
        for (n, t, rounds) in [(6, 1, 5), (5, 1, 4), (3, 2, 3)] {
            let plan = ilt_path_strategy(n, t).unwrap();
            assert_eq!(plan.trace.round_count(), rounds, "n={n} t={t}");
            assert_eq!(plan.certified.exact_value(), Some(rounds));
        }
        assert!(ilt_path_strategy(2, 1).is_err());
    }

    #[test]
    fn sequence_uses_clones() {
        let plan = ilt_path_strategy(6, 1).unwrap();
        // p1', p2', p4', p5'
        assert_eq!(plan.sequence, vec![6, 7, 9, 10]);
    }

    #[test]
    fn lift_rules() {
        let p2 = gen_path(2).unwrap();
        let from = ilt_t(&p2, 3).unwrap();
        let to = ilt_t(&p2, 2).unwrap();
        let one = ilt_lift_sequence(&[0], &from, &to).unwrap();
        assert_eq!(one, vec![to.last_clones[0][0]]);

        let same = from.last_clones[1].clone();
        let lifted = ilt_lift_sequence(&same[..2], &from, &to).unwrap();
        assert_eq!(lifted, vec![to.last_clones[1][0], to.last_clones[1][1]]);

        assert!(ilt_lift_sequence(&[0], &to, &from).is_err());
        let other = ilt_t(&gen_complete(3).unwrap(), 2).unwrap();
        assert!(ilt_lift_sequence(&[0], &from, &other).is_err());
    }
}
