use super::{FieldContext, NumericError, QuadExt};

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<QuadExt>),
    /// Solution set `particular + span(null_space)`.
    Parametric {
        particular: Vec<QuadExt>,
        rank: usize,
        null_space: Vec<Vec<QuadExt>>,
    },
    Inconsistent {
        rank: usize,
    },
}

impl LinearSolution {
    pub fn rank(&self) -> usize {
        match self {
            LinearSolution::Unique(x) => x.len(),
            LinearSolution::Parametric { rank, .. } | LinearSolution::Inconsistent { rank } => *rank,
        }
    }
}

fn common_context<'a>(entries: impl IntoIterator<Item = &'a QuadExt>) -> Result<FieldContext, NumericError> {
    let mut ctx = FieldContext::RATIONAL;
    for x in entries {
        if !x.is_rational() {
            ctx = ctx.join(x.context())?;
        }
    }
    Ok(ctx)
}

fn check_rect(matrix: &[Vec<QuadExt>]) -> Result<usize, NumericError> {
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|row| row.len() != cols) {
        return Err(NumericError::Shape("ragged matrix".into()));
    }
    Ok(cols)
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<QuadExt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].checked_inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for j in 0..m[i].len() {
                let delta = &factor * &m[r][j];
                m[i][j] = &m[i][j] - &delta;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Exact Gaussian elimination for `matrix · x = rhs`.
///
/// Every returned solution is re-checked against the original system.
pub fn solve_linear(matrix: &[Vec<QuadExt>], rhs: &[QuadExt]) -> Result<LinearSolution, NumericError> {
    if matrix.len() != rhs.len() {
        return Err(NumericError::Shape(format!(
            "{} rows but {} right-hand sides",
            matrix.len(),
            rhs.len()
        )));
    }
    let cols = check_rect(matrix)?;
    common_context(matrix.iter().flatten().chain(rhs))?;
    let mut aug: Vec<Vec<QuadExt>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let pivots = rref(&mut aug, cols);
    let rank = pivots.len();
    if aug[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(LinearSolution::Inconsistent { rank });
    }
    let mut particular = vec![QuadExt::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let residual = |x: &[QuadExt], target: Option<&[QuadExt]>| -> bool {
        matrix.iter().enumerate().all(|(i, row)| {
            let lhs = row
                .iter()
                .zip(x)
                .fold(QuadExt::zero(), |acc, (a, v)| acc + a * v);
            match target {
                Some(t) => lhs == t[i],
                None => lhs.is_zero(),
            }
        })
    };
    if !residual(&particular, Some(rhs)) {
        return Err(NumericError::SolveCheck);
    }
    if rank == cols {
        return Ok(LinearSolution::Unique(particular));
    }
    let mut null_space = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![QuadExt::zero(); cols];
        v[free] = QuadExt::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -&aug[r][free];
        }
        if !residual(&v, None) {
            return Err(NumericError::SolveCheck);
        }
        null_space.push(v);
    }
    Ok(LinearSolution::Parametric {
        particular,
        rank,
        null_space,
    })
}

pub fn rank(matrix: &[Vec<QuadExt>]) -> Result<usize, NumericError> {
    let cols = check_rect(matrix)?;
    common_context(matrix.iter().flatten())?;
    let mut m = matrix.to_vec();
    Ok(rref(&mut m, cols).len())
}

/// Determinant of a square matrix by elimination over the field.
pub fn determinant(matrix: &[Vec<QuadExt>]) -> Result<QuadExt, NumericError> {
    let n = matrix.len();
    if check_rect(matrix)? != n {
        return Err(NumericError::Shape("determinant of a non-square matrix".into()));
    }
    common_context(matrix.iter().flatten())?;
    let mut m = matrix.to_vec();
    let mut det = QuadExt::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Ok(QuadExt::zero());
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].checked_inv()?;
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..n {
                let delta = &factor * &m[col][j];
                m[i][j] = &m[i][j] - &delta;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;

    fn int(n: i64) -> QuadExt {
        QuadExt::from_int(n)
    }

    #[test]
    fn identity_system() {
        let c = FieldContext::new(2, 3).unwrap();
        let id: Vec<Vec<QuadExt>> = (0..3)
            .map(|i| (0..3).map(|j| int((i == j) as i64)).collect())
            .collect();
        let rhs = vec![int(1), c.sqrt_d1(), c.sqrt_d2()];
        assert_eq!(solve_linear(&id, &rhs).unwrap(), LinearSolution::Unique(rhs));
    }

    #[test]
    fn underdetermined_is_parametric() {
        let m = vec![vec![int(1), int(1)]];
        match solve_linear(&m, &[int(1)]).unwrap() {
            LinearSolution::Parametric { rank, null_space, .. } => {
                assert_eq!(rank, 1);
                assert_eq!(null_space, vec![vec![int(-1), int(1)]]);
            }
            other => panic!("expected parametric, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_is_reported() {
        let m = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert_eq!(
            solve_linear(&m, &[int(1), int(3)]).unwrap(),
            LinearSolution::Inconsistent { rank: 1 }
        );
    }

    #[test]
    fn segment_meets_plane_at_half() {
        // (t, t, t) with z = 1/2  →  t = 1/2, by direct substitution
        let m = vec![vec![int(1)]];
        let rhs = vec![QuadExt::from(rational(1, 2))];
        assert_eq!(
            solve_linear(&m, &rhs).unwrap(),
            LinearSolution::Unique(vec![QuadExt::from(rational(1, 2))])
        );
    }

    #[test]
    fn determinant_with_radicals() {
        let c = FieldContext::new(2, 3).unwrap();
        let m = vec![vec![c.sqrt_d1(), c.sqrt_d2()], vec![c.sqrt_d2(), c.sqrt_d1()]];
        // 2 - 3
        assert_eq!(determinant(&m).unwrap(), int(-1));
        assert_eq!(rank(&[vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap(), 1);
    }

    #[test]
    fn mixed_contexts_rejected() {
        let a = FieldContext::new(2, 3).unwrap().sqrt_d1();
        let b = FieldContext::quadratic(5).unwrap().sqrt_d1();
        assert!(matches!(
            solve_linear(&[vec![a, b]], &[int(0)]),
            Err(NumericError::ContextMismatch { .. })
        ));
    }
}
