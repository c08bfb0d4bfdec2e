use super::FiniteQuandle;

/// `x ∗ z = y`, `z ∗ y = x` and `y ∗ x = z`: the three rotations of a
/// triangle of the tessellation carry its vertices around.
pub fn triangle_check(q: &FiniteQuandle, x: usize, y: usize, z: usize) -> bool {
    q.op(x, z) == y && q.op(z, y) == x && q.op(y, x) == z
}

/// Number of triangles through `x`, counted as oriented triangles of
/// distinct elements up to cyclic rotation.
///
/// For `{3,m}` with `m ≥ 3` at most one orientation of a face passes the
/// check; on the two-triangle dihedron `{3,2}` both orientations of the single
/// vertex triple pass and count separately.
pub fn triangles_around(q: &FiniteQuandle, x: usize) -> usize {
    let n = q.order();
    let mut count = 0;
    // Rotate each oriented triangle so that x comes first; (x, y, z) then
    // enumerates every cyclic class through x exactly once.
    for y in 0..n {
        for z in 0..n {
            if y != x && z != x && y != z && triangle_check(q, x, y, z) {
                count += 1;
            }
        }
    }
    count
}
