//! Block-grid view of a matrix whose dimensions are multiples of a fixed
//! block size.

use crate::matrix::Mat;
use crate::scalar::{CoreError, Ring};

/// An r-block grid view over a matrix: block (i,j) is the r×r submatrix
/// with top-left corner (i·r, j·r).
#[derive(Debug, Clone)]
pub struct BlockView<'a, T> {
    base: &'a Mat<T>,
    block_rows: usize,
    block_cols: usize,
    r: usize,
}

impl<'a, T: Ring> BlockView<'a, T> {
    pub fn new(base: &'a Mat<T>, r: usize) -> Result<Self, CoreError> {
        if r == 0 || !base.rows().is_multiple_of(r) || !base.cols().is_multiple_of(r) {
            return Err(CoreError::DimensionMismatch(format!(
                "{}x{} is not a multiple of block size {}",
                base.rows(),
                base.cols(),
                r
            )));
        }
        Ok(Self {
            base,
            block_rows: base.rows() / r,
            block_cols: base.cols() / r,
            r,
        })
    }

    pub fn block_rows(&self) -> usize {
        self.block_rows
    }

    pub fn block_cols(&self) -> usize {
        self.block_cols
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn block(&self, i: usize, j: usize) -> Mat<T> {
        self.base.block(i, j, self.r)
    }

    /// True when block (i,j) is zero.
    pub fn block_is_zero(&self, i: usize, j: usize) -> bool {
        self.block(i, j).is_zero()
    }

    /// True when every block is a scalar multiple of the identity; returns
    /// the scalar grid when so.
    pub fn scalar_grid(&self) -> Option<Mat<T>> {
        let mut grid = Mat::zeros(self.block_rows, self.block_cols);
        for i in 0..self.block_rows {
            for j in 0..self.block_cols {
                let b = self.block(i, j);
                let s = b[(0, 0)].clone();
                if b != Mat::scalar(self.r, &s) {
                    return None;
                }
                grid[(i, j)] = s;
            }
        }
        Some(grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    #[test]
    fn blocks_and_scalar_grid() {
        let mut m: Mat<Rat> = Mat::zeros(4, 4);
        m.set_block(0, 0, &Mat::scalar(2, &rat(3, 1)));
        m.set_block(2, 2, &Mat::scalar(2, &rat(1, 2)));
        let v = BlockView::new(&m, 2).unwrap();
        assert_eq!(v.block_rows(), 2);
        assert!(v.block_is_zero(0, 1));
        let grid = v.scalar_grid().unwrap();
        assert_eq!(grid[(0, 0)], rat(3, 1));
        assert_eq!(grid[(1, 1)], rat(1, 2));
    }

    #[test]
    fn rejects_bad_block_size() {
        let m: Mat<Rat> = Mat::zeros(4, 6);
        assert!(BlockView::new(&m, 4).is_err());
        assert!(BlockView::new(&m, 2).is_ok());
    }
}
