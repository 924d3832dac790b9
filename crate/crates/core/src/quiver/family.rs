use std::fmt;

use crate::error::{Error, Result};

use super::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

/// How the edges of an underlying graph are turned into arrows. Edges are
/// listed with the lower-numbered endpoint first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    #[default]
    TowardHigher,
    TowardLower,
    /// Edge `k` points toward the higher vertex iff `k` is even.
    Alternating,
    /// Oriented cycle `1 -> 2 -> ... -> r+1 -> 1`; affine type A only.
    Cyclic,
    /// `flips[k]` reverses edge `k` relative to `TowardHigher`.
    Flips(Vec<bool>),
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::TowardHigher => f.write_str("toward-higher"),
            Orientation::TowardLower => f.write_str("toward-lower"),
            Orientation::Alternating => f.write_str("alternating"),
            Orientation::Cyclic => f.write_str("cyclic"),
            Orientation::Flips(flips) => {
                f.write_str("flips:")?;
                flips
                    .iter()
                    .try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
            }
        }
    }
}

/// Named quiver families.
///
/// Vertex numbering: type A and affine A are paths/cycles `1..`; stars and
/// comets have center `1` and legs numbered outward one leg at a time, so
/// `TowardLower` points every leg at the center. `E6`, `E7`, `E8` are the
/// stars with legs `[1,2,2]`, `[1,2,3]`, `[1,2,4]`; their affine versions use
/// `[2,2,2]`, `[1,3,3]`, `[1,2,5]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ade {
        kind: DynkinType,
        rank: usize,
        orientation: Orientation,
    },
    AffineAde {
        kind: DynkinType,
        rank: usize,
        orientation: Orientation,
    },
    Star {
        legs: Vec<usize>,
        orientation: Orientation,
    },
    /// A star whose center carries one loop `z`.
    Comet {
        legs: Vec<usize>,
        orientation: Orientation,
    },
    /// One vertex with `k` loops.
    Jordan(usize),
    /// `r` arrows `1 -> 2 -> ... -> r+1`.
    EquiorientedA(usize),
}

impl Family {
    pub fn name(&self) -> String {
        let legs = |l: &[usize]| l.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            Family::Ade { kind, rank, .. } => format!("{kind:?}{rank}"),
            Family::AffineAde { kind, rank, .. } => format!("~{kind:?}{rank}"),
            Family::Star { legs: l, .. } => format!("Star[{}]", legs(l)),
            Family::Comet { legs: l, .. } => format!("Comet[{}]", legs(l)),
            Family::Jordan(k) => format!("J{k}"),
            Family::EquiorientedA(r) => format!("EqA{r}"),
        }
    }
}

fn star_edges(legs: &[usize]) -> Result<(usize, Vec<(usize, usize)>)> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(Error::InvalidFamily(format!(
            "leg lengths must be positive, got {legs:?}"
        )));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in legs {
        let mut prev = 1;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok((next - 1, edges))
}

fn path_edges(vertices: usize) -> Vec<(usize, usize)> {
    (1..vertices).map(|i| (i, i + 1)).collect()
}

fn ade_edges(kind: DynkinType, rank: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    match (kind, rank) {
        (DynkinType::A, r) if r >= 1 => Ok((r, path_edges(r))),
        (DynkinType::D, r) if r >= 4 => {
            let mut edges = path_edges(r - 1);
            edges.push((r - 2, r));
            Ok((r, edges))
        }
        (DynkinType::E, 6) => star_edges(&[1, 2, 2]),
        (DynkinType::E, 7) => star_edges(&[1, 2, 3]),
        (DynkinType::E, 8) => star_edges(&[1, 2, 4]),
        _ => Err(Error::InvalidFamily(format!(
            "no Dynkin diagram {kind:?}{rank}"
        ))),
    }
}

fn affine_edges(kind: DynkinType, rank: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    match (kind, rank) {
        (DynkinType::A, r) if r >= 1 => {
            let mut edges = path_edges(r + 1);
            edges.push((1, r + 1));
            Ok((r + 1, edges))
        }
        (DynkinType::D, r) if r >= 4 => {
            let mut edges = path_edges(r - 1);
            edges.push((2, r));
            edges.push((r - 2, r + 1));
            Ok((r + 1, edges))
        }
        (DynkinType::E, 6) => star_edges(&[2, 2, 2]),
        (DynkinType::E, 7) => star_edges(&[1, 3, 3]),
        (DynkinType::E, 8) => star_edges(&[1, 2, 5]),
        _ => Err(Error::InvalidFamily(format!(
            "no affine diagram ~{kind:?}{rank}"
        ))),
    }
}

fn orient(
    edges: &[(usize, usize)],
    orientation: &Orientation,
    cyclic_ok: bool,
) -> Result<Vec<(usize, usize)>> {
    let flip = |k: usize| -> Result<bool> {
        match orientation {
            Orientation::TowardHigher => Ok(false),
            Orientation::TowardLower => Ok(true),
            Orientation::Alternating => Ok(k % 2 == 1),
            Orientation::Cyclic => Ok(false),
            Orientation::Flips(flips) => {
                if flips.len() != edges.len() {
                    return Err(Error::InvalidFamily(format!(
                        "{} flips given for {} edges",
                        flips.len(),
                        edges.len()
                    )));
                }
                Ok(flips[k])
            }
        }
    };
    if *orientation == Orientation::Cyclic && !cyclic_ok {
        return Err(Error::InvalidFamily(
            "cyclic orientation needs affine type A".into(),
        ));
    }
    let last = edges.len().saturating_sub(1);
    edges
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| {
            if *orientation == Orientation::Cyclic && k == last {
                return Ok((v, u));
            }
            Ok(if flip(k)? { (v, u) } else { (u, v) })
        })
        .collect()
}

fn build(name: String, vertices: usize, loops: usize, arrows: &[(usize, usize)]) -> Result<Quiver> {
    let mut q = Quiver::new(name);
    for v in 1..=vertices {
        q.add_vertex(v.to_string())?;
    }
    if loops == 1 {
        q.add_arrow("z", 1, 1)?;
    }
    for (k, &(t, h)) in arrows.iter().enumerate() {
        q.add_arrow(format!("a{}", k + 1), t, h)?;
    }
    Ok(q)
}

/// Builds a member of a named family. Arrows are named `a1, a2, ...` in edge
/// order; a comet's loop is `z` and comes first.
pub fn make_family(family: &Family) -> Result<Quiver> {
    let name = family.name();
    match family {
        Family::Ade {
            kind,
            rank,
            orientation,
        } => {
            let (nv, edges) = ade_edges(*kind, *rank)?;
            build(name, nv, 0, &orient(&edges, orientation, false)?)
        }
        Family::AffineAde {
            kind,
            rank,
            orientation,
        } => {
            let (nv, edges) = affine_edges(*kind, *rank)?;
            build(
                name,
                nv,
                0,
                &orient(&edges, orientation, *kind == DynkinType::A)?,
            )
        }
        Family::Star { legs, orientation } => {
            let (nv, edges) = star_edges(legs)?;
            build(name, nv, 0, &orient(&edges, orientation, false)?)
        }
        Family::Comet { legs, orientation } => {
            let (nv, edges) = star_edges(legs)?;
            build(name, nv, 1, &orient(&edges, orientation, false)?)
        }
        Family::Jordan(k) => {
            let mut q = Quiver::new(name);
            q.add_vertex("1")?;
            for i in 1..=*k {
                q.add_arrow(format!("a{i}"), 1, 1)?;
            }
            Ok(q)
        }
        Family::EquiorientedA(r) => build(name, r + 1, 0, &path_edges(r + 1)),
    }
}
