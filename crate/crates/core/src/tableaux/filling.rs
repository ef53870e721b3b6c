use crate::error::{Error, Result};

use super::Shape;

/// Increasing filling used as the working state of the insertion bijection.
///
/// Rows increase left to right and columns increase top to bottom; the
/// entries are the currently open left endpoints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InsertionFilling {
    rows: Vec<Vec<usize>>,
}

impl InsertionFilling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.rows.iter().map(Vec::len).collect()).expect("filling keeps a valid shape")
    }

    pub fn contains(&self, x: usize) -> bool {
        self.rows.iter().any(|r| r.binary_search(&x).is_ok())
    }

    /// Row insertion: `x` bumps the smallest entry strictly larger than it in
    /// each row in turn. Returns the (1-based) row of the new cell.
    pub fn row_insert(&mut self, x: usize) -> usize {
        let mut carry = x;
        for (idx, row) in self.rows.iter_mut().enumerate() {
            match row.binary_search(&carry) {
                Ok(_) => unreachable!("entries are distinct"),
                Err(pos) if pos == row.len() => {
                    row.push(carry);
                    return idx + 1;
                }
                Err(pos) => carry = std::mem::replace(&mut row[pos], carry),
            }
        }
        self.rows.push(vec![carry]);
        self.rows.len()
    }

    /// Appends `x` to row `h`. The new cell must be an outer corner and `x`
    /// must exceed its left and upper neighbours.
    pub fn place(&mut self, h: usize, x: usize) -> Result<()> {
        if h == 0 || h > self.rows.len() + 1 {
            return Err(Error::MalformedTableau(format!("no row {h} to extend")));
        }
        if h == self.rows.len() + 1 {
            self.rows.push(Vec::new());
        }
        let col = self.rows[h - 1].len();
        let left_ok = self.rows[h - 1].last().is_none_or(|&l| l < x);
        let up_ok = h == 1 || self.rows[h - 2].get(col).is_some_and(|&u| u < x);
        if !left_ok || !up_ok {
            if self.rows[h - 1].is_empty() {
                self.rows.pop();
            }
            return Err(Error::MalformedTableau(format!(
                "cannot place {x} at the end of row {h}"
            )));
        }
        self.rows[h - 1].push(x);
        Ok(())
    }

    /// Reverse bumping from the corner ending row `h`; returns the entry
    /// ejected from the first row. Exactly inverts [`row_insert`](Self::row_insert).
    pub fn reverse_bump(&mut self, h: usize) -> Result<usize> {
        let is_corner = h >= 1 && h <= self.rows.len() && self.rows.get(h).map_or(0, Vec::len) < self.rows[h - 1].len();
        if !is_corner {
            return Err(Error::MalformedTableau(format!("row {h} has no removable corner")));
        }
        let mut carry = self.rows[h - 1].pop().expect("corner row is nonempty");
        if self.rows[h - 1].is_empty() {
            self.rows.pop();
        }
        for row in self.rows[..h - 1].iter_mut().rev() {
            // largest entry smaller than carry
            let pos = row.partition_point(|&e| e < carry);
            debug_assert!(pos > 0, "column strictness guarantees a smaller entry");
            carry = std::mem::replace(&mut row[pos - 1], carry);
        }
        Ok(carry)
    }

    /// Deletes `x`, which must sit in a corner cell. Returns its row.
    pub fn remove_corner_entry(&mut self, x: usize) -> Result<usize> {
        let h = self
            .rows
            .iter()
            .position(|r| r.last() == Some(&x))
            .map(|i| i + 1)
            .ok_or_else(|| Error::MalformedTableau(format!("{x} is not at the end of a row")))?;
        if self.rows.get(h).map_or(0, Vec::len) >= self.rows[h - 1].len() {
            return Err(Error::MalformedTableau(format!("{x} is not in a corner")));
        }
        self.rows[h - 1].pop();
        if self.rows[h - 1].is_empty() {
            self.rows.pop();
        }
        Ok(h)
    }
}
