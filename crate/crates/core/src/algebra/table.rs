use std::fmt;

/// Index of an element of a finite algebra's carrier.
pub type Elem = usize;

/// A square operation table stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        Table { n, cells }
    }

    /// Builds a table from nested rows. Returns `None` when the rows are not
    /// `n x n` or an entry falls outside `0..n`.
    pub fn from_rows(n: usize, rows: &[Vec<Elem>]) -> Option<Self> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let cells: Vec<Elem> = rows.iter().flatten().copied().collect();
        if cells.iter().any(|&c| c >= n) {
            return None;
        }
        Some(Table { n, cells })
    }

    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.n + b]
    }

    #[inline]
    pub fn set(&mut self, a: Elem, b: Elem, v: Elem) {
        self.cells[a * self.n + b] = v;
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        &self.cells[a * self.n..(a + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.n).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    /// The table obtained by renaming every element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[Elem]) -> Table {
        let mut out = Table {
            n: self.n,
            cells: vec![0; self.n * self.n],
        };
        for a in 0..self.n {
            for b in 0..self.n {
                out.set(perm[a], perm[b], perm[self.get(a, b)]);
            }
        }
        out
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|a| self.row(a)))
            .finish()
    }
}

/// A subset of a carrier, stored as a membership mask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    mask: Vec<bool>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            mask: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        ElemSet {
            mask: vec![true; n],
        }
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = ElemSet::empty(n);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        ElemSet { mask }
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.mask[a]
    }

    /// Inserts `a`, returning true when it was not already present.
    pub fn insert(&mut self, a: Elem) -> bool {
        !std::mem::replace(&mut self.mask[a], true)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&m| m)
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn members(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
