//! The corner-separation law.
//!
//! For a unit k-cube `c` (2 <= k <= n) meeting the foreground `m`,
//! consider a foreground component `m'` of the cube's intersection with
//! `m` and a corner decomposition `(c*, tau1, tau2)` of `c` whose
//! subcube meets `m'` in as many points as any other. If both shifted
//! copies `tau1(c*)` and `tau2(c*)` contain background points and all of
//! those lie in one common background component, then the law requires
//!
//! ```text
//! (tau1 tau2)^-1(tau1(tau2(c*)) intersect m')
//!     is contained in
//! tau1^-1(tau1(c*) intersect m') intersect tau2^-1(tau2(c*) intersect m')
//! ```
//!
//! that is, pulled back to `c*`: wherever the diagonal translate hits
//! `m'`, both single translates must hit it too.

use std::collections::BTreeMap;

use crate::adjacency::{complement_components, components, PointSet};
use crate::error::Error;
use crate::lattice::{Cube, CubeDecomposition, Point, Translation, Window};

use super::{validate_window, AdjacencyPair};

/// A reproducible violation of the separation law.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationWitness {
    /// The cube whose corner decomposition misbehaves.
    pub cube: Cube,
    /// The maximal-overlap subcube of the decomposition.
    pub subcube: Cube,
    /// Unit translations of the decomposition, directed into the cube.
    pub tau1: Translation,
    pub tau2: Translation,
    /// The foreground component of the cube the law fails for.
    pub component: PointSet,
}

impl SeparationWitness {
    /// Re-derives every part of the violation from scratch: the witness
    /// component must be a foreground component of the cube, the
    /// decomposition must belong to the cube and have maximal overlap,
    /// the background hypothesis must hold and the conclusion must fail.
    pub fn reproduces(
        &self,
        m: &PointSet,
        pair: &AdjacencyPair,
        w: &Window,
    ) -> Result<bool, Error> {
        validate_window(m, w)?;
        if self.cube.points().iter().any(|p| !w.contains(p)) {
            return Ok(false);
        }
        let hits = PointSet::from_points(
            m.dim(),
            self.cube.points().into_iter().filter(|p| m.contains(p)),
        )?;
        let parts = components(pair.alpha(), &hits)?;
        if !parts.blocks().contains(&self.component) {
            return Ok(false);
        }
        let dec = CubeDecomposition {
            subcube: self.subcube,
            tau1: self.tau1,
            tau2: self.tau2,
        };
        let decs = self.cube.decompositions()?;
        if !decs.contains(&dec) {
            return Ok(false);
        }
        let best = decs
            .iter()
            .map(|d| overlap(&d.subcube, &self.component))
            .max()
            .expect("cubes of rank >= 2 have decompositions");
        if overlap(&self.subcube, &self.component) != best {
            return Ok(false);
        }
        let background = complement_components(pair.beta(), m, Some(w))?;
        let block_of = block_index(&background);
        Ok(violates(m, &self.component, &dec, &block_of))
    }
}

/// Outcome of the separation check; the witness is present exactly when
/// the law fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationVerdict {
    witness: Option<SeparationWitness>,
}

impl SeparationVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&SeparationWitness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<SeparationWitness> {
        self.witness
    }
}

fn overlap(subcube: &Cube, component: &PointSet) -> usize {
    subcube.points().iter().filter(|p| component.contains(p)).count()
}

fn block_index(
    partition: &crate::adjacency::ComponentPartition,
) -> BTreeMap<Point, usize> {
    let mut map = BTreeMap::new();
    for (i, block) in partition.blocks().iter().enumerate() {
        for &p in block.iter() {
            map.insert(p, i);
        }
    }
    map
}

/// The law's core test for one component and one decomposition, given
/// the background block of every complement point near the cube.
fn violates(
    m: &PointSet,
    component: &PointSet,
    dec: &CubeDecomposition,
    block_of: &BTreeMap<Point, usize>,
) -> bool {
    let base = dec.subcube.points();

    // Hypothesis: both translates reach into the background, and all of
    // that background lies in one common component.
    let mut common_block: Option<usize> = None;
    for tau in [&dec.tau1, &dec.tau2] {
        let mut any = false;
        for x in &base {
            let shifted = x.translated(tau);
            if m.contains(&shifted) {
                continue;
            }
            any = true;
            let block = *block_of
                .get(&shifted)
                .expect("cube points stay inside the dilated search window");
            match common_block {
                None => common_block = Some(block),
                Some(b) if b != block => return false,
                Some(_) => {}
            }
        }
        if !any {
            return false;
        }
    }

    // Conclusion: the diagonal translate may only hit the component
    // where both single translates hit it.
    let diagonal = dec.tau1.compose(&dec.tau2);
    base.iter().any(|x| {
        component.contains(&x.translated(&diagonal))
            && !(component.contains(&x.translated(&dec.tau1))
                && component.contains(&x.translated(&dec.tau2)))
    })
}

/// Exhaustively verifies the separation law for `m` over the window,
/// which must contain the bounding box of `m` dilated by 1. Background
/// components are computed globally (the search window is dilated
/// internally), so the verdict does not depend on the window choice.
pub fn check_separation_property(
    m: &PointSet,
    pair: &AdjacencyPair,
    w: &Window,
) -> Result<SeparationVerdict, Error> {
    let n = pair.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { dim: n, min: 2 });
    }
    if m.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.dim() });
    }
    validate_window(m, w)?;

    let background = complement_components(pair.beta(), m, Some(w))?;
    let block_of = block_index(&background);

    for k in 2..=n {
        for cube in w.cubes(k)? {
            let hits = PointSet::from_points(
                n,
                cube.points().into_iter().filter(|p| m.contains(p)),
            )?;
            if hits.is_empty() {
                continue;
            }
            let parts = components(pair.alpha(), &hits)?;
            let decs = cube.decompositions()?;
            for component in parts.blocks() {
                let best = decs
                    .iter()
                    .map(|d| overlap(&d.subcube, component))
                    .max()
                    .expect("cubes of rank >= 2 have decompositions");
                for dec in &decs {
                    if overlap(&dec.subcube, component) != best {
                        continue;
                    }
                    if violates(m, component, dec, &block_of) {
                        return Ok(SeparationVerdict {
                            witness: Some(SeparationWitness {
                                cube,
                                subcube: dec.subcube,
                                tau1: dec.tau1,
                                tau2: dec.tau2,
                                component: component.clone(),
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(SeparationVerdict { witness: None })
}
