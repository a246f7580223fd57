//! Systems of distinct representatives via augmenting paths, with a Hall
//! violator whenever no transversal exists.

use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::neighborhood::BunchStructure;

/// A family of finite subsets of `1..=universe`, each kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: usize,
    sets: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut sets = sets;
        for (i, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&e) = set.iter().find(|&&e| e == 0 || e > universe) {
                return Err(Error::InvalidParameter(format!(
                    "set {i} contains {e}, outside 1..={universe}"
                )));
            }
        }
        Ok(Self { universe, sets })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Size of the union of the sets at `indices`.
    pub fn union_size(&self, indices: &[usize]) -> usize {
        let mut seen = vec![false; self.universe + 1];
        for &i in indices {
            for &e in &self.sets[i] {
                seen[e] = true;
            }
        }
        seen.iter().filter(|&&s| s).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransversalResult {
    /// `assignment[i]` is the representative chosen from set `i`.
    Assignment(Vec<usize>),
    /// Sorted set indices whose union is smaller than their number.
    Violator(Vec<usize>),
}

impl TransversalResult {
    pub fn assignment(&self) -> Option<&[usize]> {
        match self {
            Self::Assignment(a) => Some(a),
            Self::Violator(_) => None,
        }
    }
}

/// Finds a transversal by repeated augmenting paths, scanning elements in
/// ascending order. When some set cannot be matched, the sets reached by
/// alternating paths from it form a Hall violator: every element they can
/// reach is already matched to another set among them.
pub fn find_transversal(fam: &SetFamily) -> TransversalResult {
    let mut owner: Vec<Option<usize>> = vec![None; fam.universe + 1];
    let mut chosen: Vec<Option<usize>> = vec![None; fam.len()];

    fn augment(
        fam: &SetFamily,
        i: usize,
        visited_sets: &mut [bool],
        visited_elems: &mut [bool],
        owner: &mut [Option<usize>],
        chosen: &mut [Option<usize>],
    ) -> bool {
        visited_sets[i] = true;
        for &e in &fam.sets[i] {
            if visited_elems[e] {
                continue;
            }
            visited_elems[e] = true;
            let free = match owner[e] {
                None => true,
                Some(j) => augment(fam, j, visited_sets, visited_elems, owner, chosen),
            };
            if free {
                owner[e] = Some(i);
                chosen[i] = Some(e);
                return true;
            }
        }
        false
    }

    for i in 0..fam.len() {
        let mut visited_sets = vec![false; fam.len()];
        let mut visited_elems = vec![false; fam.universe + 1];
        if !augment(
            fam,
            i,
            &mut visited_sets,
            &mut visited_elems,
            &mut owner,
            &mut chosen,
        ) {
            let violator: Vec<usize> = (0..fam.len()).filter(|&j| visited_sets[j]).collect();
            debug_assert!(fam.union_size(&violator) < violator.len());
            return TransversalResult::Violator(violator);
        }
    }
    TransversalResult::Assignment(chosen.into_iter().map(|c| c.unwrap_or(0)).collect())
}

/// Available-color lists for the vertices of bunch `t` (0-based, color `t + 1`)
/// in bunch order: colors of `1..=d` missing from the closed neighborhood.
/// Since the neighbor `x_t` carries color `t + 1`, that color is excluded too.
pub fn build_bunch_lists(
    c: &PartialColoring,
    g: &Graph,
    bs: &BunchStructure,
    t: usize,
) -> Result<SetFamily> {
    let d = bs.len();
    if t >= d {
        return Err(Error::InvalidParameter(format!("bunch {t} of {d}")));
    }
    let bunch = bs.bunch(t);
    if bunch.iter().any(|&v| c.is_colored(v)) {
        return Err(Error::BunchAlreadyColored(t));
    }
    let own = t + 1;
    let lists = bunch
        .iter()
        .map(|&v| {
            c.available_colors(g, v).map(|l| {
                l.into_iter()
                    .filter(|&col| col <= d && col != own)
                    .collect()
            })
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    SetFamily::new(d, lists)
}

/// Colors bunch `t` bijectively with `{1..=d} \ {t + 1}` through a transversal
/// of its lists, making `x_t` a b-vertex of class `t + 1`.
pub fn color_bunch(
    c: &mut PartialColoring,
    g: &Graph,
    bs: &BunchStructure,
    t: usize,
) -> Result<()> {
    let fam = build_bunch_lists(c, g, bs, t)?;
    let bunch = bs.bunch(t);
    if bunch.len() + 1 != bs.len() {
        return Err(Error::PreconditionViolated(format!(
            "bunch {t} has {} vertices, expected {}",
            bunch.len(),
            bs.len() - 1
        )));
    }
    match find_transversal(&fam) {
        TransversalResult::Assignment(colors) => {
            for (&v, color) in bunch.iter().zip(colors) {
                c.set(v, color)?;
            }
            Ok(())
        }
        TransversalResult::Violator(violator) => Err(Error::HallFailure {
            bunch: t,
            violator: violator.into_iter().map(|i| bunch[i]).collect(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(universe: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(universe, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_families() {
        assert_eq!(
            find_transversal(&fam(2, &[&[1], &[2]])),
            TransversalResult::Assignment(vec![1, 2])
        );
        let TransversalResult::Violator(v) = find_transversal(&fam(2, &[&[1], &[1]])) else {
            panic!("expected violator");
        };
        assert_eq!(v, vec![0, 1]);

        let f = fam(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let a = find_transversal(&f).assignment().unwrap().to_vec();
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
        assert!(a.iter().zip(f.sets()).all(|(e, s)| s.contains(e)));
    }

    #[test]
    fn violator_is_minimal_reachable_set() {
        let f = fam(4, &[&[1, 2, 3, 4], &[1], &[2], &[1, 2]]);
        let TransversalResult::Violator(v) = find_transversal(&f) else {
            panic!("expected violator");
        };
        assert!(f.union_size(&v) < v.len());
        assert!(!v.contains(&0));
    }

    #[test]
    fn empty_family_and_bad_elements() {
        assert_eq!(
            find_transversal(&fam(3, &[])),
            TransversalResult::Assignment(vec![])
        );
        assert!(SetFamily::new(2, vec![vec![3]]).is_err());
        assert!(SetFamily::new(2, vec![vec![0]]).is_err());
    }

    /// Star `x = 0` with neighbors 1, 2, 3 and bunches {4, 5}, {6, 7}, {8, 9};
    /// both vertices of the second bunch see vertex 5.
    fn forced_failure_graph() -> Graph {
        Graph::new(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (3, 9),
                (6, 5),
                (7, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn bunch_lists_and_hall_failure() {
        let g = forced_failure_graph();
        let bs = BunchStructure::new(&g, 0, None).unwrap();
        let mut c = PartialColoring::new(10, 4);
        c.set(0, 4).unwrap();
        for (i, &xi) in bs.neighbor_order().iter().enumerate() {
            c.set(xi, i + 1).unwrap();
        }
        let first = build_bunch_lists(&c, &g, &bs, 0).unwrap();
        assert_eq!(first.sets(), &[vec![2, 3], vec![2, 3]]);
        c.set(4, 2).unwrap();
        c.set(5, 3).unwrap();
        assert_eq!(
            build_bunch_lists(&c, &g, &bs, 0),
            Err(Error::BunchAlreadyColored(0))
        );

        let lists = build_bunch_lists(&c, &g, &bs, 1).unwrap();
        assert_eq!(lists.sets(), &[vec![1], vec![1]]);
        assert_eq!(
            color_bunch(&mut c, &g, &bs, 1),
            Err(Error::HallFailure {
                bunch: 1,
                violator: vec![6, 7]
            })
        );

        color_bunch(&mut c, &g, &bs, 2).unwrap();
        let got: Vec<_> = [8, 9].iter().map(|&v| c.get(v).unwrap()).collect();
        // Vertex 9 displaces vertex 8 from color 1 along an augmenting path.
        assert_eq!(got, vec![2, 1]);
    }
}
