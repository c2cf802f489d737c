use super::SkewShape;

/// Every skew Ferrers board with `1..=max_cells` cells, one shape per distinct
/// board up to removal of empty rows and columns.
///
/// Each board is represented by its canonical shape: every row nonempty, the
/// last row starting in column 1 and every column in `1..=outer[0]` occupied.
/// Such a shape is determined by its cell set, so no two yielded shapes give
/// the same board. Shapes come out sorted by outer partition, then inner.
pub fn enumerate_skew_shapes(max_cells: usize) -> impl Iterator<Item = SkewShape> {
    let mut found = Vec::new();
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for top in 1..=max_cells {
        for top_inner in 0..top {
            extend_rows(
                top, top_inner, max_cells, &mut outer, &mut inner, &mut found,
            );
        }
    }
    found.sort();
    found.into_iter()
}

fn extend_rows(
    l: usize,
    m: usize,
    budget: usize,
    outer: &mut Vec<usize>,
    inner: &mut Vec<usize>,
    found: &mut Vec<SkewShape>,
) {
    let width = l - m;
    if width > budget {
        return;
    }
    outer.push(l);
    inner.push(m);
    let budget = budget - width;

    if m == 0 && columns_all_occupied(outer, inner) {
        found.push(SkewShape {
            outer: outer.clone(),
            inner: inner.clone(),
        });
    }
    for next_l in 1..=l {
        for next_m in 0..next_l.min(m + 1) {
            if next_l - next_m > budget {
                continue;
            }
            extend_rows(next_l, next_m, budget, outer, inner, found);
        }
    }

    outer.pop();
    inner.pop();
}

fn columns_all_occupied(outer: &[usize], inner: &[usize]) -> bool {
    (1..=outer[0]).all(|c| outer.iter().zip(inner).any(|(&l, &m)| m < c && c <= l))
}
