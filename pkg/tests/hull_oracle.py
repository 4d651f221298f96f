"""Independent brute-force oracle for the position of the origin in a 2D hull.

Pure Caratheodory enumeration: membership is tested over all sub-simplices
(points, segments, triangles); interiority by exhausting candidate
supporting lines.  Deliberately shares no code with the simplex path.
"""

from fractions import Fraction


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _on_segment(p, q):
    # 0 on [p, q]?
    if _cross(p, q) != 0:
        return False
    dot = p[0] * (p[0] - q[0]) + p[1] * (p[1] - q[1])
    lensq = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
    if lensq == 0:
        return p == (0, 0) or (p[0] == 0 and p[1] == 0)
    t = Fraction(dot, lensq)
    return 0 <= t <= 1


def _in_triangle(a, b, c):
    d1 = _cross((a[0] - 0, a[1] - 0), (b[0] - a[0], b[1] - a[1]))
    d2 = _cross((b[0] - 0, b[1] - 0), (c[0] - b[0], c[1] - b[1]))
    d3 = _cross((c[0] - 0, c[1] - 0), (a[0] - c[0], a[1] - c[1]))
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def oracle_member(points):
    pts = list(dict.fromkeys(tuple(p) for p in points))
    for p in pts:
        if p == (0, 0):
            return True
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if _on_segment(pts[i], pts[j]):
                return True
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _in_triangle(pts[i], pts[j], pts[k]):
                    return True
    return False


def oracle_position(points):
    """'interior' | 'boundary' | 'outside' for the origin vs conv(points)."""
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if not oracle_member(pts):
        return "outside"
    # candidate supporting line normals: rotations of point and edge directions
    candidates = []
    for p in pts:
        candidates.append((-p[1], p[0]))
        candidates.append((p[1], -p[0]))
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = (pts[i][0] - pts[j][0], pts[i][1] - pts[j][1])
            candidates.append((-d[1], d[0]))
            candidates.append((d[1], -d[0]))
    for ell in candidates:
        if ell == (0, 0):
            continue
        if all(ell[0] * p[0] + ell[1] * p[1] >= 0 for p in pts):
            return "boundary"
    if all(p == (0, 0) for p in pts):
        return "boundary"
    return "interior"
