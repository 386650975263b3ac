//! Cross-route verification sweeps. Each parameter point (n, t, d) runs
//! the closed-form classification against the orbit oracle, the
//! minimality and triangle characterizations, and the summand-count
//! bound; points with d = 0 inside the Hom budget additionally run the
//! Serre-duality grid in the matrix model. A clean sweep is the expected
//! steady state; any discrepancy is a bug in one of the routes.

use std::collections::BTreeSet;

use crate::algebra::{relative_order, Algebra, StableObject};
use crate::classify::{category_report, cy_dimension, cy_params, is_d_cy, minimal_cy_modules};
use crate::homspace::StableHomTable;
use crate::orbit::{
    ar_triangle_check, check_minimality, middle_term_cy_check, minimal_cy_from_orbits,
};
use crate::par;

/// One sweep coordinate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GridPoint {
    pub n: u32,
    pub t: u32,
    pub d: u64,
}

/// All points with 1 <= n <= n_max, 2 <= t <= t_max and d below the shift
/// order of Lambda(n, t).
pub fn grid_points(n_max: u32, t_max: u32) -> Vec<GridPoint> {
    let mut points = Vec::new();
    for n in 1..=n_max {
        for t in 2..=t_max {
            let alg = Algebra::new(n as i64, t as i64).expect("grid bounds are valid");
            for d in 0..alg.shift_order() {
                points.push(GridPoint { n, t, d });
            }
        }
    }
    points
}

/// Everything checked at one point, plus summary data worth caching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointOutcome {
    pub n: u32,
    pub t: u32,
    pub d: u64,
    pub shift_order: u64,
    /// CY dimension of the whole category, when it is Calabi-Yau.
    pub category_cydim: Option<u64>,
    pub orbit_count: usize,
    pub hom_checked: bool,
    pub discrepancies: Vec<String>,
}

impl PointOutcome {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Runs every check at one point. `with_hom` additionally verifies the
/// Serre-duality dimension grid (independent of d, so callers enable it
/// once per algebra).
pub fn check_point(alg: &Algebra, d: u64, with_hom: bool) -> PointOutcome {
    let mut discrepancies = Vec::new();
    let di = d as i64;

    let closed = minimal_cy_modules(alg, di);
    let from_orbits = minimal_cy_from_orbits(alg, di);
    let closed_set: BTreeSet<&StableObject> = closed.objects.iter().collect();
    let orbit_set: BTreeSet<&StableObject> = from_orbits.iter().collect();
    if closed_set != orbit_set {
        let missing = orbit_set.difference(&closed_set).next();
        let extra = closed_set.difference(&orbit_set).next();
        discrepancies.push(format!(
            "closed-form minimal objects disagree with orbit sums: missing {missing:?}, extra {extra:?}"
        ));
    }

    for obj in &from_orbits {
        if !check_minimality(alg, obj, di) {
            discrepancies.push(format!("orbit sum {obj} fails the minimality check"));
        }
        if !is_d_cy(alg, obj, di) {
            discrepancies.push(format!("orbit sum {obj} is not {d}-CY"));
        }
    }

    for x in alg.modules() {
        let singleton = StableObject::singleton(x);
        let cy = is_d_cy(alg, &singleton, di);
        if ar_triangle_check(alg, x, di) != cy {
            discrepancies.push(format!(
                "triangle characterization disagrees with the CY test at {x}"
            ));
        }
        if cy && middle_term_cy_check(alg, x, di) != Ok(true) {
            discrepancies.push(format!("middle term of the triangle at {x} is not {d}-CY"));
        }
    }

    // summand-count bound for every object emitted at this degree
    let order = alg.shift_order();
    let big_ns: Vec<u64> = (0..order).map(|e| cy_params(alg, e).big_n).collect();
    for obj in &closed.objects {
        let obj_order = relative_order(obj, |m| alg.shift(m, 1)).expect("finite order");
        let Some(dim) = cy_dimension(alg, obj) else {
            discrepancies.push(format!("minimal object {obj} is not Calabi-Yau at all"));
            continue;
        };
        if !(dim < obj_order && obj_order <= 2 * alg.n() as u64) {
            discrepancies.push(format!(
                "order bound fails for {obj}: dim {dim}, order {obj_order}"
            ));
        }
        // The summand-count lower bound applies to objects that are still
        // minimal at their own CY dimension; an orbit at degree d may
        // split into several orbits at the smaller degree dim.
        if check_minimality(alg, obj, dim as i64) {
            let count = obj.summand_count() as u64;
            let lower = (0..order).find(|&e| {
                let nn = big_ns[e as usize];
                nn == count || 2 * nn == count
            });
            match lower {
                Some(lower) if lower <= dim => {}
                _ => discrepancies.push(format!(
                    "summand-count bound fails for {obj}: lower {lower:?}, dim {dim}"
                )),
            }
        }
    }

    let hom_checked = if with_hom {
        let table = StableHomTable::compute_seq(alg);
        for (x, y) in table.serre_duality_failures() {
            discrepancies.push(format!("Serre duality dimensions fail at ({x}, {y})"));
        }
        true
    } else {
        false
    };

    PointOutcome {
        n: alg.n(),
        t: alg.t(),
        d,
        shift_order: order,
        category_cydim: category_report(alg).cydim,
        orbit_count: from_orbits.len(),
        hom_checked,
        discrepancies,
    }
}

fn outcome_for(point: GridPoint, hom_max: u32) -> PointOutcome {
    let alg = Algebra::new(point.n as i64, point.t as i64).expect("valid grid point");
    let with_hom = point.d == 0 && point.n <= hom_max && point.t <= hom_max;
    check_point(&alg, point.d, with_hom)
}

/// Sweeps a set of points through the parallel map. Hom checks run at
/// d = 0 for algebras with n, t within `hom_max`.
pub fn check_points(points: &[GridPoint], hom_max: u32) -> Vec<PointOutcome> {
    par::map(points.to_vec(), move |p| outcome_for(p, hom_max))
}

/// Sequential twin of [`check_points`].
pub fn check_points_seq(points: &[GridPoint], hom_max: u32) -> Vec<PointOutcome> {
    par::map_seq(points.to_vec(), move |p| outcome_for(p, hom_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_point_is_clean() {
        let alg = Algebra::new(2, 4).unwrap();
        let outcome = check_point(&alg, 3, true);
        assert!(outcome.ok(), "{:?}", outcome.discrepancies);
        assert_eq!(outcome.orbit_count, 3);
        assert_eq!(outcome.shift_order, 2);
        assert!(outcome.hom_checked);
        assert_eq!(outcome.category_cydim, None);
    }

    #[test]
    fn cached_summary_matches_category_report() {
        let alg = Algebra::new(3, 4).unwrap();
        let outcome = check_point(&alg, 0, false);
        assert_eq!(outcome.shift_order, 6);
        assert_eq!(outcome.category_cydim, Some(5));
    }

    #[test]
    fn small_grid_is_clean_and_routes_agree() {
        let points = grid_points(4, 4);
        let fanned = check_points(&points, 3);
        let sequential = check_points_seq(&points, 3);
        assert_eq!(fanned, sequential);
        for outcome in &fanned {
            assert!(outcome.ok(), "{:?}", outcome);
        }
    }
}
