//! Exact rank of small integer matrices.

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Row-echelon basis grown one row at a time, exact over the rationals.
#[derive(Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    /// Insert a row; returns whether it raised the rank.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
        for (pivot, basis) in &self.rows {
            let c = r[*pivot];
            if c != 0 {
                let b = basis[*pivot];
                for (x, y) in r.iter_mut().zip(basis) {
                    *x = *x * b - c * y;
                }
                normalize(&mut r);
            }
        }
        match r.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Dimension of the affine hull of the given points, -1 when there are none.
pub fn affine_dimension(points: &[Vec<i64>]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let mut e = Echelon::default();
    for p in &points[1..] {
        let diff: Vec<i64> = p.iter().zip(first).map(|(a, b)| a - b).collect();
        e.insert(&diff);
    }
    e.rank() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_and_segment() {
        assert_eq!(affine_dimension(&[]), -1);
        assert_eq!(affine_dimension(&[vec![1, 0]]), 0);
        assert_eq!(affine_dimension(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        assert_eq!(affine_dimension(&[vec![0, 0, 0], vec![1, 1, 0], vec![2, 2, 0]]), 1);
    }
}
