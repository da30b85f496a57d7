"""Partition combinatorics and exact dimension counts for Schur modules.

Partitions are plain tuples of weakly decreasing nonnegative integers with
trailing zeros trimmed (row convention: parts are row lengths).  All
arithmetic is exact; no floats anywhere.
"""

from __future__ import annotations

from math import comb


def trim(parts) -> tuple[int, ...]:
    """Canonical form: drop trailing zeros."""
    parts = tuple(parts)
    n = len(parts)
    while n > 0 and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def check_partition(parts) -> tuple[int, ...]:
    """Validate and canonicalize a partition, raising ValueError if invalid."""
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if p < 0:
            raise ValueError(f"negative part {p} in {parts}")
        if i + 1 < len(parts) and parts[i + 1] > p:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    return trim(parts)


def size(p) -> int:
    return sum(p)


def part(p, i: int) -> int:
    """i-th part (0-based), 0 beyond the end."""
    return p[i] if i < len(p) else 0


def conjugate(p) -> tuple[int, ...]:
    """Transpose the Young diagram: result[j] = #{i : p[i] >= j+1}."""
    p = trim(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j + 1) for j in range(p[0]))


def contains(outer, inner) -> bool:
    """Containment of diagrams: inner[i] <= outer[i] for all i."""
    return all(part(outer, i) >= x for i, x in enumerate(inner))


def is_horizontal_strip(outer, inner) -> bool:
    """True iff inner <= outer and outer/inner has at most one box per column.

    Equivalent to inner contained in outer with outer[i+1] <= inner[i].
    """
    outer, inner = trim(outer), trim(inner)
    if not contains(outer, inner):
        return False
    return all(part(outer, i + 1) <= x for i, x in enumerate(inner)) and (
        len(outer) <= len(inner) + 1
    )


def pieri_expand(lam, e: int, max_rows: int) -> list[tuple[int, ...]]:
    """All mu with at most max_rows rows such that mu/lam is a horizontal
    strip of size e, in lexicographic descending order.

    This is the multiplicity-free Pieri decomposition of
    S_lam(E) (x) Sym_e(E) for dim E = max_rows.
    """
    lam = check_partition(lam)
    if len(lam) > max_rows:
        raise ValueError(f"{lam} has more than {max_rows} nonzero parts")
    if e < 0:
        return []
    out: list[tuple[int, ...]] = []

    def grow(i: int, prefix: list[int], remaining: int) -> None:
        if i == max_rows:
            if remaining == 0:
                out.append(trim(prefix))
            return
        lo = part(lam, i)
        hi = part(lam, 0) + e if i == 0 else min(part(lam, i - 1), prefix[-1])
        hi = min(hi, lo + remaining)
        for mu_i in range(hi, lo - 1, -1):
            grow(i + 1, prefix + [mu_i], remaining - (mu_i - lo))

    grow(0, [], e)
    return out


def dim_gl(lam, m: int) -> int:
    """dim S_lam(E) for dim E = m, by the Weyl dimension formula.

    Accepts any weakly decreasing integer sequence of length <= m (negative
    parts allowed, interpreted via determinant twists); a partition with more
    than m nonzero parts gives 0.
    """
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        if len(lam) > m:
            raise ValueError(f"weight {lam} longer than dimension {m}")
    else:
        lam = trim(lam)
        if len(lam) > m:
            return 0
    padded = lam + (0,) * (m - len(lam))
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= padded[i] - padded[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def _int_det(mat: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of a small integer matrix."""
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def dim_skew(outer, inner, n: int) -> int:
    """Number of semistandard skew tableaux of shape outer/inner with entries
    in {1..n}, via the Jacobi-Trudi determinant det h_{outer_i - inner_j - i + j}
    with h_k evaluated at n ones: h_k(1^n) = C(n+k-1, k).
    """
    outer = check_partition(outer)
    inner = check_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"{inner} not contained in {outer}")
    ell = len(outer)
    if ell == 0:
        return 1

    def h(k: int) -> int:
        if k < 0:
            return 0
        if k == 0:
            return 1
        return comb(n + k - 1, k)

    mat = [
        [h(outer[i] - part(inner, j) - i + j) for j in range(ell)]
        for i in range(ell)
    ]
    return _int_det(mat)


def _subpartitions(lam, max_rows: int):
    """All mu contained in lam with at most max_rows nonzero parts."""
    lam = trim(lam)

    def grow(i: int, prefix: list[int]):
        if i == min(len(lam), max_rows):
            yield trim(prefix)
            return
        hi = min(lam[i], prefix[-1]) if i > 0 else lam[0]
        for mu_i in range(hi, -1, -1):
            yield from grow(i + 1, prefix + [mu_i])

    yield from grow(0, [])


def dim_super(lam, m: int, n: int) -> int:
    """Dimension of the Z/2-graded Schur module of a (m, n)-dimensional
    graded space: sum over mu inside lam of
    dim S_mu(V0) * dim S_{lam'/mu'}(V1).

    Zero exactly when lam does not fit in the (m, n) hook.
    """
    lam = check_partition(lam)
    lam_c = conjugate(lam)
    total = 0
    for mu in _subpartitions(lam, m):
        d0 = dim_gl(mu, m)
        if d0 == 0:
            continue
        total += d0 * dim_skew(lam_c, conjugate(mu), n)
    return total


def complement_in_rectangle(lam, width: int, height: int) -> tuple[int, ...]:
    """180-degree rotation of the complement of lam in a width x height box."""
    lam = check_partition(lam)
    if len(lam) > height or (lam and lam[0] > width):
        raise ValueError(f"{lam} does not fit in {width}x{height} rectangle")
    padded = lam + (0,) * (height - len(lam))
    return trim(width - padded[height - 1 - i] for i in range(height))
