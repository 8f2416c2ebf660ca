//! Dense mixed-radix tables used for constraint definitions and payoffs.
//!
//! A tuple of coordinates `(i_0, …, i_{k-1})` over sizes `(n_0, …, n_{k-1})`
//! maps to the flat index `Σ i_j · strides_j` with the first coordinate most
//! significant, so iterating flat indices enumerates tuples in canonical
//! lexicographic order.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Shape {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl Shape {
    pub fn new(sizes: Vec<usize>) -> Shape {
        let mut strides = vec![1usize; sizes.len()];
        for j in (0..sizes.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * sizes[j + 1];
        }
        let len = sizes.iter().product();
        Shape { sizes, strides, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn flatten(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.sizes.len());
        coords.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    /// Decodes a flat index back into coordinates.
    pub fn coords(&self, mut flat: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sizes.len());
        for stride in &self.strides {
            out.push(flat / stride);
            flat %= stride;
        }
        out
    }

    /// All coordinate tuples in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len).map(|flat| self.coords(flat))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_and_coords_are_inverse() {
        let shape = Shape::new(vec![2, 3, 2]);
        assert_eq!(shape.len(), 12);
        for (flat, coords) in shape.iter().enumerate() {
            assert_eq!(shape.flatten(&coords), flat);
            assert_eq!(shape.coords(flat), coords);
        }
    }

    #[test]
    fn iteration_is_lexicographic() {
        let shape = Shape::new(vec![2, 2]);
        let all: Vec<Vec<usize>> = shape.iter().collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn empty_shape_has_one_tuple() {
        let shape = Shape::new(vec![]);
        assert_eq!(shape.len(), 1);
        assert_eq!(shape.iter().collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
