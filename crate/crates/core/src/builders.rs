//! Named finite algebras and the two composition operators.
//!
//! Every builder returns a validated [`FinAlg`]. Chains are labelled bottom
//! to top, so for a chain built here `a ≤ b` iff `a <= b` as indices and the
//! unit is the last element.

use thiserror::Error;

use crate::algebra::{lattice_tables, AlgebraError, Elem, FinAlg, Table};

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("component {index} of an ordinal sum must be an integral chain")]
    NotIntegralChain { index: usize },
    #[error("rotation base must be commutative and integral")]
    BadRotationBase,
    #[error("rotation parameter n must be at least 2, got {0}")]
    BadRotationOrder(usize),
    #[error("parameter must be at least 1")]
    BadParameter,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `Łₙ`: carrier `0..=n`, unit `n`, zero `0`, `a·b = max(a+b−n, 0)` and
/// `a\b = min(n−a+b, n)`.
pub fn lukasiewicz(n: usize) -> Result<FinAlg, BuildError> {
    if n == 0 {
        return Err(BuildError::BadParameter);
    }
    let size = n + 1;
    let ldiv = Table::from_fn(size, |a, b| (n + b - a).min(n));
    let rdiv = Table::from_fn(size, |a, b| (n + a - b).min(n));
    Ok(FinAlg::from_all_parts(
        Some(format!("L{n}")),
        n,
        Some(0),
        Table::from_fn(size, |a, b| a.max(b)),
        Table::from_fn(size, |a, b| a.min(b)),
        Table::from_fn(size, |a, b| (a + b).saturating_sub(n)),
        ldiv,
        rdiv,
    )?)
}

/// The two-element algebra, named `2`.
pub fn two() -> FinAlg {
    lukasiewicz(1).expect("n = 1 is valid").with_name("2")
}

/// `Gₙ`: the `(n+1)`-element chain with product = meet, unit on top and
/// zero at the bottom. `godel(0)` is the trivial algebra.
pub fn godel(n: usize) -> FinAlg {
    let size = n + 1;
    let div = |a: Elem, b: Elem| if a <= b { n } else { b };
    FinAlg::from_all_parts(
        Some(format!("G{n}")),
        n,
        Some(0),
        Table::from_fn(size, |a, b| a.max(b)),
        Table::from_fn(size, |a, b| a.min(b)),
        Table::from_fn(size, |a, b| a.min(b)),
        Table::from_fn(size, div),
        Table::from_fn(size, |a, b| div(b, a)),
    )
    .expect("Gödel chains are residuated")
}

/// The one-element algebra (unit = zero).
pub fn trivial() -> FinAlg {
    godel(0).with_name("1")
}

#[derive(Clone, Copy)]
enum Slot {
    Unit,
    In { comp: usize, local: Elem },
}

/// Ordinal sum of integral chains, stacked with later components higher.
///
/// Components share the unit; trivial components are dropped. The result
/// inherits a zero when the lowest nontrivial component has one. If every
/// component is trivial, the first one decides.
pub fn ordinal_sum(components: &[FinAlg]) -> Result<FinAlg, BuildError> {
    for (index, c) in components.iter().enumerate() {
        if !c.is_integral() || !c.is_chain() {
            return Err(BuildError::NotIntegralChain { index });
        }
    }
    let parts: Vec<&FinAlg> = components.iter().filter(|c| c.size() > 1).collect();
    let name = components
        .iter()
        .map(|c| c.name().map(str::to_string))
        .collect::<Option<Vec<_>>>()
        .map(|names| names.join("+"));
    let Some(first) = parts.first() else {
        // all components trivial: keep the signature of the first
        let mut t = trivial();
        if components.first().is_some_and(|c| c.zero().is_none()) {
            t = t.without_zero();
        }
        return Ok(match name {
            Some(n) => t.with_name(n),
            None => t,
        });
    };
    let total = 1 + parts.iter().map(|c| c.size() - 1).sum::<usize>();
    let unit = total - 1;

    let mut slots = Vec::with_capacity(total);
    let mut index: Vec<Vec<Elem>> = Vec::with_capacity(parts.len());
    for (k, c) in parts.iter().enumerate() {
        let mut local_index = vec![unit; c.size()];
        for local in c.linear_extension() {
            if local != c.unit() {
                local_index[local] = slots.len();
                slots.push(Slot::In { comp: k, local });
            }
        }
        index.push(local_index);
    }
    slots.push(Slot::Unit);

    let local = |x: Elem, k: usize| match slots[x] {
        Slot::Unit => parts[k].unit(),
        Slot::In { local, .. } => local,
    };
    let comp = |x: Elem| match slots[x] {
        Slot::Unit => None,
        Slot::In { comp, .. } => Some(comp),
    };
    // divisions share one cross-component rule: dividing a lower element by
    // a higher one returns the lower element, the other way round gives 1
    type LocalOp = fn(&FinAlg, Elem, Elem) -> Elem;
    let within = |x: Elem, y: Elem, op: LocalOp| -> Option<Elem> {
        let k = match (comp(x), comp(y)) {
            (Some(i), Some(j)) if i == j => i,
            (Some(i), None) | (None, Some(i)) => i,
            (None, None) => return Some(unit),
            _ => return None,
        };
        Some(index[k][op(parts[k], local(x, k), local(y, k))])
    };

    let prod = Table::from_fn(total, |x, y| {
        within(x, y, FinAlg::prod).unwrap_or_else(|| x.min(y))
    });
    // ldiv(x, y) = x\y
    let ldiv = Table::from_fn(total, |x, y| {
        within(x, y, FinAlg::ldiv).unwrap_or(if comp(x) > comp(y) { y } else { unit })
    });
    // rdiv(y, x) = y/x
    let rdiv = Table::from_fn(total, |y, x| {
        within(y, x, FinAlg::rdiv).unwrap_or(if comp(x) > comp(y) { y } else { unit })
    });
    let zero = first.zero().map(|_| 0);
    Ok(FinAlg::from_all_parts(
        name,
        unit,
        zero,
        Table::from_fn(total, |a, b| a.max(b)),
        Table::from_fn(total, |a, b| a.min(b)),
        prod,
        ldiv,
        rdiv,
    )?)
}

/// The nucleus used by a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Delta {
    Identity,
    ConstantOne,
}

impl Delta {
    pub fn tag(self) -> &'static str {
        match self {
            Delta::Identity => "id",
            Delta::ConstantOne => "one",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RotationSpec<'a> {
    pub base: &'a FinAlg,
    pub n: usize,
    pub delta: Delta,
}

/// A generalized rotation together with the positions of its three layers.
#[derive(Clone, Debug)]
pub struct Rotation {
    pub algebra: FinAlg,
    /// `base[a]` is the image of base element `a`.
    pub base: Vec<Elem>,
    /// `dual[b]` is the index of `b'` for `b` in the image of δ.
    pub dual: Vec<Option<Elem>>,
    /// `l₀ = 0, l₁, …, l_{n−1} = 1`.
    pub skeleton: Vec<Elem>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Layer {
    Dual(Elem),
    Ladder(usize),
    Base(Elem),
}

/// Generalized `n`-rotation of a commutative integral algebra. The base's
/// own zero, if any, is ignored; the result has zero `1'`.
pub fn rotate(spec: &RotationSpec<'_>) -> Result<Rotation, BuildError> {
    let base = spec.base;
    let n = spec.n;
    if n < 2 {
        return Err(BuildError::BadRotationOrder(n));
    }
    if !base.is_commutative() || !base.is_integral() {
        return Err(BuildError::BadRotationBase);
    }
    let m = base.size();
    let lin = base.linear_extension();
    let mut pos = vec![0; m];
    for (p, &a) in lin.iter().enumerate() {
        pos[a] = p;
    }
    let image: Vec<Elem> = match spec.delta {
        Delta::Identity => base.elements().collect(),
        Delta::ConstantOne => vec![base.unit()],
    };
    let d = image.len();
    let total = d + (n - 2) + m;

    let mut dual = vec![None; m];
    let mut layers = vec![Layer::Ladder(0); total];
    for &b in &image {
        // the dual order reverses the base order
        let id = match spec.delta {
            Delta::Identity => m - 1 - pos[b],
            Delta::ConstantOne => 0,
        };
        dual[b] = Some(id);
        layers[id] = Layer::Dual(b);
    }
    for i in 1..=n.saturating_sub(2) {
        layers[d + i - 1] = Layer::Ladder(i);
    }
    let base_map: Vec<Elem> = base.elements().map(|a| d + (n - 2) + pos[a]).collect();
    for a in base.elements() {
        layers[base_map[a]] = Layer::Base(a);
    }
    let zero = dual[base.unit()].expect("1 is in the image of δ");
    let mut skeleton = vec![zero];
    skeleton.extend((1..=n.saturating_sub(2)).map(|i| d + i - 1));
    skeleton.push(base_map[base.unit()]);

    let leq = |x: Elem, y: Elem| match (layers[x], layers[y]) {
        (Layer::Dual(b), Layer::Dual(c)) => base.leq(c, b),
        (Layer::Dual(_), _) => true,
        (Layer::Ladder(i), Layer::Ladder(j)) => i <= j,
        (Layer::Ladder(_), Layer::Base(_)) => true,
        (Layer::Ladder(_), Layer::Dual(_)) => false,
        (Layer::Base(a), Layer::Base(b)) => base.leq(a, b),
        (Layer::Base(_), _) => false,
    };
    let (join, meet) = lattice_tables(total, leq).expect("rotation order is a lattice");
    let prod = Table::from_fn(total, |x, y| match (layers[x], layers[y]) {
        (Layer::Base(a), Layer::Base(b)) => base_map[base.prod(a, b)],
        (Layer::Base(a), Layer::Dual(b)) | (Layer::Dual(b), Layer::Base(a)) => {
            dual[base.ldiv(a, b)].expect("a → δ(b) stays in the image of δ")
        }
        (Layer::Dual(_), _) | (_, Layer::Dual(_)) => zero,
        (Layer::Base(_), Layer::Ladder(i)) | (Layer::Ladder(i), Layer::Base(_)) => skeleton[i],
        (Layer::Ladder(i), Layer::Ladder(j)) => skeleton[(i + j).saturating_sub(n - 1)],
    });
    let name = base.name().map(|b| format!("{b}^{}{n}", spec.delta.tag()));
    let algebra = FinAlg::from_parts(name, base_map[base.unit()], Some(zero), join, meet, prod)?;
    Ok(Rotation {
        algebra,
        base: base_map,
        dual,
        skeleton,
    })
}

/// Direct product `A × B` with componentwise operations; element `(a, b)`
/// has index `a·|B| + b`.
pub fn direct_product(a: &FinAlg, b: &FinAlg) -> FinAlg {
    let nb = b.size();
    let n = a.size() * nb;
    let lift = |f: fn(&FinAlg, Elem, Elem) -> Elem| {
        Table::from_fn(n, |x, y| f(a, x / nb, y / nb) * nb + f(b, x % nb, y % nb))
    };
    let zero = a.zero().zip(b.zero()).map(|(za, zb)| za * nb + zb);
    let name = a.name().zip(b.name()).map(|(x, y)| format!("{x}x{y}"));
    FinAlg::from_all_parts(
        name,
        a.unit() * nb + b.unit(),
        zero,
        lift(FinAlg::join),
        lift(FinAlg::meet),
        lift(FinAlg::prod),
        lift(FinAlg::ldiv),
        lift(FinAlg::rdiv),
    )
    .expect("products of residuated lattices are residuated")
}
