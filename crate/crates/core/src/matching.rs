//! Augmenting-path maximum bipartite matching.

/// Left vertex `i` may be matched to any right vertex in `eligible[i]`.
#[derive(Clone, Debug)]
pub struct Matching {
    /// Right partner of each left vertex.
    pub left: Vec<Option<usize>>,
    /// Left partner of each right vertex.
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().filter(|m| m.is_some()).count()
    }

    pub fn is_perfect_on_left(&self) -> bool {
        self.left.iter().all(Option::is_some)
    }
}

/// Maximum matching. Left vertices are processed fewest-options first (ties
/// by index); within a left vertex the options are tried in the given order.
pub fn maximum_matching(eligible: &[Vec<usize>], right_count: usize) -> Matching {
    let mut m = Matching {
        left: vec![None; eligible.len()],
        right: vec![None; right_count],
    };
    let mut order: Vec<usize> = (0..eligible.len()).collect();
    order.sort_by_key(|&i| (eligible[i].len(), i));
    let mut visited = vec![false; right_count];
    for &l in &order {
        visited.iter_mut().for_each(|v| *v = false);
        augment(l, eligible, &mut m, &mut visited);
    }
    m
}

fn augment(l: usize, eligible: &[Vec<usize>], m: &mut Matching, visited: &mut [bool]) -> bool {
    for &r in &eligible[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match m.right[r] {
            None => true,
            Some(other) => augment(other, eligible, m, visited),
        };
        if free {
            m.left[l] = Some(r);
            m.right[r] = Some(l);
            return true;
        }
    }
    false
}

/// For a maximum matching that leaves `start` unmatched: the left vertices
/// reachable from `start` along alternating paths, and their joint
/// neighbourhood. The neighbourhood is one smaller than the left set.
pub fn hall_violator(eligible: &[Vec<usize>], m: &Matching, start: usize) -> (Vec<usize>, Vec<usize>) {
    debug_assert!(m.left[start].is_none());
    let mut seen_left = vec![false; eligible.len()];
    let mut seen_right = vec![false; m.right.len()];
    let mut stack = vec![start];
    seen_left[start] = true;
    while let Some(l) = stack.pop() {
        for &r in &eligible[l] {
            if seen_right[r] {
                continue;
            }
            seen_right[r] = true;
            let partner = m.right[r].expect("maximum matching: every reachable right vertex is matched");
            if !seen_left[partner] {
                seen_left[partner] = true;
                stack.push(partner);
            }
        }
    }
    let lefts = (0..eligible.len()).filter(|&i| seen_left[i]).collect();
    let rights = (0..m.right.len()).filter(|&i| seen_right[i]).collect();
    (lefts, rights)
}
