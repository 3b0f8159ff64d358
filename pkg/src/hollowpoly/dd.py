"""Double description method for polyhedral cones, exact over the integers.

Computes the extreme rays and lineality space of {x : a.x <= 0 for all a}.
Inequalities are inserted one at a time; adjacency of rays is decided by the
exact rank test rank(common tight normals) = dim - lineality - 2, which is
valid because every cone fed in here is full-dimensional.
"""

from __future__ import annotations

from typing import Sequence

from .intlinalg import dot, primitive, rank_exact


class _Ray:
    __slots__ = ("v", "tight")

    def __init__(self, v, tight):
        self.v = v
        self.tight = tight  # bitmask over inserted inequality indices


def extreme_rays(normals: Sequence[Sequence[int]], dim: int) -> tuple[list[tuple], list[tuple]]:
    """Extreme rays and lineality basis of the cone cut out by the normals.

    Returns (rays, lineality); rays are primitive integer vectors, one per
    extreme ray, in a deterministic order.
    """
    lineality = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays: list[_Ray] = []
    inserted: list[tuple] = []
    for a in normals:
        a = tuple(a)
        k = len(inserted)
        lstar = next((l for l in lineality if dot(a, l) != 0), None)
        if lstar is not None:
            al = dot(a, lstar)
            lineality = [
                primitive(tuple(al * x - dot(a, l) * y for x, y in zip(l, lstar)))
                for l in lineality if l is not lstar and dot(a, l) != 0
            ] + [l for l in lineality if l is not lstar and dot(a, l) == 0]
            sign = 1 if al > 0 else -1
            for r in rays:
                ar = dot(a, r.v)
                if ar != 0:
                    r.v = primitive(tuple(sign * (al * x - ar * y) for x, y in zip(r.v, lstar)))
                r.tight |= 1 << k  # all rays land on the new hyperplane
            r0 = tuple(-sign * x for x in lstar)
            rays.append(_Ray(r0, (1 << k) - 1))
        else:
            neg, zero, pos = [], [], []
            for r in rays:
                ar = dot(a, r.v)
                (neg if ar < 0 else zero if ar == 0 else pos).append((r, ar))
            target = dim - len(lineality) - 2
            new = []
            for r1, a1 in neg:
                for r2, a2 in pos:
                    common = r1.tight & r2.tight
                    sel = [inserted[j] for j in range(k) if common >> j & 1]
                    if (target <= 0 and not sel) or (sel and rank_exact(sel) == target):
                        v = primitive(tuple(a2 * x - a1 * y for x, y in zip(r1.v, r2.v)))
                        new.append(_Ray(v, common | (1 << k)))
            for r, _ in zero:
                r.tight |= 1 << k
            rays = [r for r, _ in neg] + [r for r, _ in zero] + new
        inserted.append(a)
    return [r.v for r in rays], lineality
