"""Independent brute-force oracles used by the tests: semistandard tableau
enumeration for (skew) Schur module dimensions, kept deliberately separate
from the library's formulas."""

from pureres.partitions import part, trim


def count_ssyt(outer, inner, n: int) -> int:
    """Number of semistandard skew tableaux of shape outer/inner with
    entries in {1..n}: rows weakly increase, columns strictly increase.
    Plain backtracking over cells in row-major order."""
    outer = trim(outer)
    inner = trim(inner)
    cells = [
        (r, c)
        for r in range(len(outer))
        for c in range(part(inner, r), outer[r])
    ]
    values: dict = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        left = values.get((r, c - 1))
        if left is not None:
            lo = max(lo, left)
        above = values.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        total = 0
        for v in range(lo, n + 1):
            values[(r, c)] = v
            total += fill(idx + 1)
        values.pop((r, c), None)
        return total

    return fill(0)


def random_partition(rng, max_part: int, max_len: int):
    parts = sorted(
        (rng.randint(0, max_part) for _ in range(rng.randint(0, max_len))),
        reverse=True,
    )
    return trim(parts)


def random_degrees(rng, max_m: int, d_max: int, min_m: int = 1):
    m = rng.randint(min_m, max_m)
    while True:
        vals = sorted(rng.sample(range(d_max + 1), m + 1))
        if len(set(vals)) == m + 1:
            return tuple(vals)
