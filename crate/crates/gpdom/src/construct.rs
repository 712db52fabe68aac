//! Explicit optimal dominating sets: the fault-free families of size
//! `ceil(3n/5)` for every residue of `n` mod 5, and the fault-tolerant sets
//! of size `ceil(3n/5) - 1` for `n = 5k+1` and `n = 5k+2`.
//!
//! Every constructed set is validated with [`is_dominating`] before being
//! returned; a failure is a `ConstructionBug`, never a silent bad set.

use crate::analysis::{is_dominating, DomSet};
use crate::error::Error;
use crate::formula;
use crate::graph::{petersen2, FaultSpec, GPGraph, Ring, Vertex};

fn validated(g: &GPGraph, s: DomSet, expect_size: usize, what: &str) -> Result<DomSet, Error> {
    if s.size() != expect_size {
        return Err(Error::ConstructionBug(format!(
            "{what}: built {} vertices, expected {expect_size}",
            s.size()
        )));
    }
    if !is_dominating(g, &s)? {
        return Err(Error::ConstructionBug(format!(
            "{what}: set does not dominate"
        )));
    }
    Ok(s)
}

/// One period-5 tile of the fault-free pattern: `{u_c, v_{c+2}, v_{c+3}}`.
fn tile(s: &mut DomSet, c: i64, n: usize) {
    s.insert(Vertex::reduced(Ring::Outer, c, n));
    s.insert(Vertex::reduced(Ring::Inner, c + 2, n));
    s.insert(Vertex::reduced(Ring::Inner, c + 3, n));
}

/// A dominating set of fault-free `P(n,2)` of size exactly `ceil(3n/5)`.
///
/// `n ≡ 0 (mod 5)` is tiled with `{u_{5j}, v_{5j+2}, v_{5j+3}}`. The other
/// residues reuse the tiling with a frozen residue-specific seam; `n ≡ 3`
/// needs a different period-5 motif entirely (no tiling-plus-patch set of
/// the right size exists there).
pub fn construct_fault_free(n: usize) -> Result<DomSet, Error> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
    }
    let g = petersen2(n, FaultSpec::none())?;
    let mut s = DomSet::new(n);
    let ni = n as i64;
    match n {
        3 => {
            s.insert(Vertex::outer(0));
            s.insert(Vertex::inner(1));
        }
        4 => {
            s.insert(Vertex::outer(0));
            s.insert(Vertex::inner(1));
            s.insert(Vertex::inner(2));
        }
        _ => match n % 5 {
            0 => {
                for c in (0..ni).step_by(5) {
                    tile(&mut s, c, n);
                }
            }
            1 => {
                // Tiles up to column n-6, then one extra outer vertex.
                for c in (0..ni - 5).step_by(5) {
                    tile(&mut s, c, n);
                }
                s.insert(Vertex::reduced(Ring::Outer, ni - 2, n));
            }
            2 => {
                for c in (0..ni - 6).step_by(5) {
                    tile(&mut s, c, n);
                }
                s.insert(Vertex::reduced(Ring::Outer, ni - 2, n));
                s.insert(Vertex::reduced(Ring::Inner, ni - 1, n));
            }
            3 => {
                // Head on columns 0..8, then the outer-heavy motif
                // {u_c, u_{c+2}, v_{c+1}} every 5 columns.
                for v in [
                    Vertex::outer(0),
                    Vertex::outer(2),
                    Vertex::outer(5),
                    Vertex::inner(1),
                    Vertex::inner(4),
                ] {
                    s.insert(v);
                }
                let mut c = 8;
                while c + 5 <= ni {
                    s.insert(Vertex::reduced(Ring::Outer, c, n));
                    s.insert(Vertex::reduced(Ring::Outer, c + 2, n));
                    s.insert(Vertex::reduced(Ring::Inner, c + 1, n));
                    c += 5;
                }
            }
            4 => {
                // Tiles up to column n-10, then a 9-column seam.
                for c in (0..ni - 9).step_by(5) {
                    tile(&mut s, c, n);
                }
                let b = ni - 9;
                for (ring, d) in [
                    (Ring::Outer, 0),
                    (Ring::Outer, 2),
                    (Ring::Outer, 4),
                    (Ring::Inner, 1),
                    (Ring::Inner, 6),
                    (Ring::Inner, 7),
                ] {
                    s.insert(Vertex::reduced(ring, b + d, n));
                }
            }
            _ => unreachable!(),
        },
    }
    validated(&g, s, formula::gamma(n), "fault-free pattern")
}

/// The Type II core `{u_{f-2}, v_{f+1}, v_{f+2}}` around the faulted column.
fn type2_core(s: &mut DomSet, f: i64, n: usize) {
    s.insert(Vertex::reduced(Ring::Outer, f - 2, n));
    s.insert(Vertex::reduced(Ring::Inner, f + 1, n));
    s.insert(Vertex::reduced(Ring::Inner, f + 2, n));
}

/// Self-contained blocks `{u_{i-2}, v_i, v_{i+1}}` tiling leftward from the
/// fault: centers `f - 5x` for `x = 1..=count`.
fn self_contained_run(s: &mut DomSet, f: i64, count: usize, n: usize) {
    for x in 1..=count as i64 {
        let i = f - 5 * x;
        s.insert(Vertex::reduced(Ring::Outer, i - 2, n));
        s.insert(Vertex::reduced(Ring::Inner, i, n));
        s.insert(Vertex::reduced(Ring::Inner, i + 1, n));
    }
}

/// Dominating set of `P(n,2) - u_f` for `n = 5k+1`, of size `3k`
/// (one below the fault-free optimum).
pub fn construct_fault_5k1(k: usize, f: usize) -> Result<DomSet, Error> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("k must be >= 1, got {k}")));
    }
    let n = 5 * k + 1;
    if f >= n {
        return Err(Error::InvalidFault(format!("f={f} out of range for n={n}")));
    }
    let g = petersen2(n, FaultSpec::outer(f))?;
    let mut s = DomSet::new(n);
    type2_core(&mut s, f as i64, n);
    self_contained_run(&mut s, f as i64, k - 1, n);
    validated(&g, s, 3 * k, "5k+1 fault pattern")
}

/// Dominating set of `P(n,2) - u_f` for `n = 5k+2`, of size `3k+1`:
/// the 5k+1 layout plus one extra inner vertex at the seam.
pub fn construct_fault_5k2(k: usize, f: usize) -> Result<DomSet, Error> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("k must be >= 1, got {k}")));
    }
    let n = 5 * k + 2;
    if f >= n {
        return Err(Error::InvalidFault(format!("f={f} out of range for n={n}")));
    }
    let g = petersen2(n, FaultSpec::outer(f))?;
    let mut s = DomSet::new(n);
    type2_core(&mut s, f as i64, n);
    self_contained_run(&mut s, f as i64, k - 1, n);
    s.insert(Vertex::reduced(Ring::Inner, f as i64 + 3, n));
    validated(&g, s, 3 * k + 1, "5k+2 fault pattern")
}
