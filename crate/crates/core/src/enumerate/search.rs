//! Backtracking search for residuated products on a fixed lattice.
//!
//! On a finite lattice a monoid operation is residuated iff it preserves
//! finite joins (including the empty one) in each argument. Left
//! multiplication by `a` is therefore one of the bottom- and
//! join-preserving self-maps of the lattice, and the row of a
//! join-reducible `a` is the pointwise join of the rows of the
//! join-irreducibles below it. The search only picks rows for
//! join-irreducibles, lowest first, and checks associativity and
//! commutativity on every pair of known rows as soon as it can.

use crate::algebra::{Elem, FinAlg, Table};

use super::lattice::Lattice;

/// Bottom-preserving, join-preserving maps `L → L`.
pub(crate) fn join_endomorphisms(lat: &Lattice) -> Vec<Vec<Elem>> {
    let n = lat.size;
    let mut out = Vec::new();
    let mut f = vec![0; n];
    fn go(lat: &Lattice, x: usize, f: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let n = lat.size;
        if x == n {
            let ok =
                (0..n).all(|a| (0..n).all(|b| f[lat.join.get(a, b)] == lat.join.get(f[a], f[b])));
            if ok {
                out.push(f.clone());
            }
            return;
        }
        // monotone prefix check: values of smaller-labelled elements are fixed
        for v in 0..n {
            if (0..x).all(|y| !lat.leq(y, x) || lat.leq(f[y], v)) {
                f[x] = v;
                go(lat, x + 1, f, out);
            }
        }
    }
    if n > 0 {
        f[0] = 0;
        go(lat, 1, &mut f, &mut out);
    }
    out
}

pub(crate) struct Problem<'a> {
    pub lat: &'a Lattice,
    pub unit: Elem,
    pub commutative: bool,
    pub endos: &'a [Vec<Elem>],
    /// Join-irreducibles in increasing label order (a linear extension).
    pub irreducibles: Vec<Elem>,
}

pub(crate) struct State {
    rows: Vec<Option<Vec<Elem>>>,
    assigned: usize,
}

impl<'a> Problem<'a> {
    pub fn new(lat: &'a Lattice, unit: Elem, commutative: bool, endos: &'a [Vec<Elem>]) -> Self {
        Problem {
            lat,
            unit,
            commutative,
            endos,
            irreducibles: lat.join_irreducibles(),
        }
    }

    pub fn initial(&self) -> State {
        let n = self.lat.size;
        let mut rows = vec![None; n];
        rows[0] = Some(vec![0; n]);
        State { rows, assigned: 0 }
    }

    /// Candidate rows for the next join-irreducible.
    pub fn candidates(&self, st: &State) -> Vec<Vec<Elem>> {
        let j = self.irreducibles[st.assigned];
        let lat = self.lat;
        let n = lat.size;
        if j == self.unit {
            return vec![(0..n).collect()];
        }
        self.endos
            .iter()
            .filter(|f| f[self.unit] == j)
            .filter(|f| {
                // left monotone against known lower rows
                self.irreducibles[..st.assigned].iter().all(|&i| {
                    !lat.leq(i, j) || {
                        let g = st.rows[i].as_ref().expect("assigned");
                        (0..n).all(|x| lat.leq(g[x], f[x]))
                    }
                })
            })
            .cloned()
            .collect()
    }

    /// Installs `row` for the next irreducible, fills every row that became
    /// determined, and checks the local constraints. On failure the state
    /// is left unchanged.
    pub fn push(&self, st: &mut State, row: Vec<Elem>) -> Option<Vec<Elem>> {
        let lat = self.lat;
        let n = lat.size;
        let j = self.irreducibles[st.assigned];
        st.rows[j] = Some(row);
        st.assigned += 1;
        let done = &self.irreducibles[..st.assigned];
        let mut filled = vec![j];
        for a in 0..n {
            if st.rows[a].is_some() || self.irreducibles.contains(&a) {
                continue;
            }
            let below: Vec<Elem> = self
                .irreducibles
                .iter()
                .copied()
                .filter(|&i| lat.leq(i, a))
                .collect();
            if below.iter().all(|i| done.contains(i)) {
                let mut r = vec![0; n];
                for i in below {
                    let g = st.rows[i].as_ref().expect("assigned");
                    for x in 0..n {
                        r[x] = lat.join.get(r[x], g[x]);
                    }
                }
                st.rows[a] = Some(r);
                filled.push(a);
            }
        }
        if self.consistent(st, &filled) {
            Some(filled)
        } else {
            self.pop(st, &filled);
            None
        }
    }

    pub fn pop(&self, st: &mut State, filled: &[Elem]) {
        for &a in filled {
            st.rows[a] = None;
        }
        st.assigned -= 1;
    }

    fn consistent(&self, st: &State, filled: &[Elem]) -> bool {
        let lat = self.lat;
        let n = lat.size;
        let known = |a: Elem| st.rows[a].as_ref();
        for &a in filled {
            let ra = known(a).expect("filled");
            // a·1 = a
            if ra[self.unit] != a {
                return false;
            }
            if a == self.unit && ra.iter().enumerate().any(|(x, &v)| v != x) {
                return false;
            }
        }
        for &a in filled {
            for b in 0..n {
                let Some(rb) = known(b) else { continue };
                let ra = known(a).expect("filled");
                if self.commutative && ra[b] != rb[a] {
                    return false;
                }
                // left join preservation: (a ∨ b)·x = a·x ∨ b·x
                if let Some(rj) = known(lat.join.get(a, b)) {
                    if (0..n).any(|x| rj[x] != lat.join.get(ra[x], rb[x])) {
                        return false;
                    }
                }
                // associativity (a·b)·x = a·(b·x) and (b·a)·x = b·(a·x)
                for (p, q, rp, rq) in [(a, b, ra, rb), (b, a, rb, ra)] {
                    if let Some(rpq) = known(rp[q]) {
                        if (0..n).any(|x| rpq[x] != rp[rq[x]]) {
                            return false;
                        }
                    }
                    // x·(p·q) = (x·p)·q for every known x
                    for x in 0..n {
                        let Some(rx) = known(x) else { continue };
                        if let Some(rxp) = known(rx[p]) {
                            if rx[rp[q]] != rxp[q] {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_complete(&self, st: &State) -> bool {
        st.assigned == self.irreducibles.len()
    }

    /// The finished algebra, or `None` if some global check fails.
    pub fn finish(&self, st: &State) -> Option<FinAlg> {
        let n = self.lat.size;
        let rows: Vec<&Vec<Elem>> = st.rows.iter().map(|r| r.as_ref()).collect::<Option<_>>()?;
        let prod = Table::from_fn(n, |a, b| rows[a][b]);
        FinAlg::from_parts(
            None,
            self.unit,
            None,
            self.lat.join.clone(),
            self.lat.meet.clone(),
            prod,
        )
        .ok()
    }

    /// Every algebra below `st`.
    pub fn solve(&self, st: &mut State, out: &mut Vec<FinAlg>) {
        if self.is_complete(st) {
            if let Some(a) = self.finish(st) {
                out.push(a);
            }
            return;
        }
        for row in self.candidates(st) {
            if let Some(filled) = self.push(st, row) {
                self.solve(st, out);
                self.pop(st, &filled);
            }
        }
    }
}
