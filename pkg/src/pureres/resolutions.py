"""Degree sequences, Betti tables of the pure complexes, and their
numerical invariants: Herzog-Kuhl primitive vectors, Hilbert functions of
the resolved module, socle data, and the self-duality check.

Conventions.  A degree sequence d = (d_0 < d_1 < ... < d_m) determines the
difference sequence e with e_0 = d_0 and e_i = d_i - d_{i-1}.  Tables of
kind "F" carry the absolute twists d_i; tables of kind "H" carry twists
d_i - d_0 (their terms are defined only up to that shift).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm, prod

from .partitions import (
    check_partition,
    conjugate,
    complement_in_rectangle,
    contains,
    dim_gl,
    dim_super,
    part,
    pieri_expand,
    trim,
)


class BettiRayError(Exception):
    """A Betti table violates the pure-ray structure it is guaranteed to have."""


class NotOnRayError(BettiRayError):
    pass


class NotIntegralError(BettiRayError):
    pass


class AmbiguousSocleError(Exception):
    """The top-degree strip set of M(d) is not a singleton."""


def check_degrees(d) -> tuple[int, ...]:
    d = tuple(d)
    if len(d) < 2:
        raise ValueError(f"degree sequence needs at least two entries: {d}")
    if any(d[i] >= d[i + 1] for i in range(len(d) - 1)):
        raise ValueError(f"degree sequence must be strictly increasing: {d}")
    return d


def diffs(d) -> tuple[int, ...]:
    """e with e_0 = d_0 and e_i = d_i - d_{i-1}."""
    d = check_degrees(d)
    return (d[0],) + tuple(d[i] - d[i - 1] for i in range(1, len(d)))


def degrees(e) -> tuple[int, ...]:
    """Inverse of diffs: partial sums starting at e_0."""
    out = []
    total = 0
    for x in e:
        total += x
        out.append(total)
    return check_degrees(out)


def base_weight(d) -> tuple[int, ...]:
    """The weight of the 0-th term: lambda_i = e_0 + sum_{j>i} (e_j - 1)."""
    e = diffs(d)
    m = len(d) - 1
    lam = [e[0] + sum(e[j] - 1 for j in range(i + 1, m + 1)) for i in range(1, m + 1)]
    return tuple(lam)


def alpha(d, i: int) -> tuple[int, ...]:
    """Weight of the i-th term: the first i parts of the base weight grow by
    e_1, ..., e_i respectively."""
    e = diffs(d)
    m = len(d) - 1
    if not 0 <= i <= m:
        raise ValueError(f"index {i} outside 0..{m}")
    lam = base_weight(d)
    return tuple(lam[j] + (e[j + 1] if j < i else 0) for j in range(m))


def gamma(d, i: int) -> tuple[int, ...]:
    """Weight on F of the i-th term of the determinantal complex:
    ((s-1)^{e_s - 1}, ..., i^{e_{i+1} - 1}, i^{e_i}, (i-1)^{e_{i-1} - 1},
    ..., 1^{e_1 - 1}), the conjugate of alpha(d, i)."""
    e = diffs(d)
    s = len(d) - 1
    if not 0 <= i <= s:
        raise ValueError(f"index {i} outside 0..{s}")
    parts: list[int] = []
    for j in range(s - 1, i - 1, -1):
        parts.extend([j] * (e[j + 1] - 1))
    if i >= 1:
        parts.extend([i] * e[i])
    for j in range(i - 1, 0, -1):
        parts.extend([j] * (e[j] - 1))
    return trim(parts)


@dataclass(frozen=True)
class DetSetup:
    """Ambient data of the determinantal construction for a length-s sequence."""

    s: int
    dim_f: int
    dim_g: int
    lambda_det: tuple[int, ...]


def det_setup(d) -> DetSetup:
    e = diffs(d)
    s = len(d) - 1
    dim_f = 1 + sum(e[i] - 1 for i in range(1, s + 1))
    return DetSetup(s=s, dim_f=dim_f, dim_g=dim_f + s - 1, lambda_det=gamma(d, 0))


@dataclass(frozen=True)
class BettiRow:
    i: int
    twist: int
    weight: tuple[int, ...]
    rank: int
    weight2: tuple[int, ...] | None = None
    vanishing: bool = False


@dataclass(frozen=True)
class BettiTable:
    kind: str  # "F" | "H" | "F_super" | "H_super"
    d: tuple[int, ...]
    rows: tuple[BettiRow, ...]
    params: dict = field(default_factory=dict, compare=False)
    truncated_at: int | None = None

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(r.rank for r in self.rows)

    @property
    def twists(self) -> tuple[int, ...]:
        return tuple(r.twist for r in self.rows)


def betti_F(d) -> BettiTable:
    """Betti table of the length-m equivariant pure complex over Sym(E),
    dim E = m: the i-th term is generated in degree d_i by the Schur module
    of weight alpha(d, i)."""
    d = check_degrees(d)
    m = len(d) - 1
    rows = tuple(
        BettiRow(i=i, twist=d[i], weight=trim(alpha(d, i)), rank=dim_gl(alpha(d, i), m))
        for i in range(m + 1)
    )
    return BettiTable(kind="F", d=d, rows=rows, params={"m": m})


def betti_H(d) -> BettiTable:
    """Betti table of the determinantal pure complex over Sym(F (x) G*):
    rank_i = dim S_{gamma(d,i)}(F) * C(dim G, d_i - d_0), twists relative
    to d_0."""
    d = check_degrees(d)
    setup = det_setup(d)
    rows = []
    for i in range(setup.s + 1):
        t = d[i] - d[0]
        g = gamma(d, i)
        rank = dim_gl(g, setup.dim_f) * comb(setup.dim_g, t) if t <= setup.dim_g else 0
        rows.append(
            BettiRow(
                i=i,
                twist=t,
                weight=g,
                weight2=(1,) * t,
                rank=rank,
                vanishing=rank == 0,
            )
        )
    return BettiTable(
        kind="H",
        d=d,
        rows=tuple(rows),
        params={"dim_f": setup.dim_f, "dim_g": setup.dim_g, "s": setup.s},
    )


class SuperDegreeData:
    """The degree data of the graded-commutative constructions: given the
    base weight lam and a first jump e1 >= 1, the difference rule is
    e_1 = e1, e_i = lam_{i-1} - lam_i + 1 for i >= 2 (so e_i = 1 beyond
    the nonzero parts of lam), with d_0 = 0."""

    def __init__(self, lam, e1: int):
        self.lam = check_partition(lam)
        if e1 < 1:
            raise ValueError(f"e1 must be >= 1, got {e1}")
        self.e1 = e1

    def e(self, i: int) -> int:
        if i < 1:
            raise ValueError("difference index starts at 1")
        if i == 1:
            return self.e1
        return part(self.lam, i - 2) - part(self.lam, i - 1) + 1

    def degree(self, i: int) -> int:
        return sum(self.e(j) for j in range(1, i + 1))

    def degree_prefix(self, n: int) -> tuple[int, ...]:
        """(d_0, ..., d_n)."""
        return tuple(self.degree(i) for i in range(n + 1))

    def alpha(self, i: int) -> tuple[int, ...]:
        parts = [part(self.lam, j) + (self.e(j + 1) if j < i else 0) for j in range(max(i, len(self.lam)))]
        return trim(parts)


def super_degree_data(lam, e1: int) -> SuperDegreeData:
    return SuperDegreeData(lam, e1)


def _default_truncation(lam, m: int, n: int) -> int:
    return len(trim(lam)) + m + n + 2


def betti_F_super(lam, e1: int, m: int, n: int, N: int | None = None) -> BettiTable:
    """Truncated Betti table of the Z/2-graded pure complex over
    Sym(V0) (x) Exterior(V1), dim vector (m, n)."""
    data = super_degree_data(lam, e1)
    if N is None:
        N = _default_truncation(lam, m, n)
    if N < 1:
        raise ValueError("truncation must be >= 1")
    rows = []
    for i in range(N + 1):
        a = data.alpha(i)
        rank = dim_super(a, m, n)
        rows.append(
            BettiRow(i=i, twist=data.degree(i), weight=a, rank=rank, vanishing=rank == 0)
        )
    return BettiTable(
        kind="F_super",
        d=data.degree_prefix(N),
        rows=tuple(rows),
        params={"lam": data.lam, "e1": e1, "m": m, "n": n},
        truncated_at=N,
    )


def betti_H_super(
    lam,
    e1: int,
    mv: tuple[int, int],
    uv: tuple[int, int],
    N: int | None = None,
) -> BettiTable:
    """Truncated Betti table of the Z/2-graded determinantal complex over
    Sym(V (x) U), with dim vectors mv for V and uv for U:
    rank_i = dim S_{alpha(d,i)}(V) * dim S_{(d_i)}(U)."""
    m0, m1 = mv
    u0, u1 = uv
    data = super_degree_data(lam, e1)
    if N is None:
        N = _default_truncation(lam, m0 + u0, m1 + u1)
    if N < 1:
        raise ValueError("truncation must be >= 1")
    rows = []
    for i in range(N + 1):
        a = data.alpha(i)
        di = data.degree(i)
        rank = dim_super(a, m0, m1) * dim_super((di,) if di else (), u0, u1)
        rows.append(
            BettiRow(
                i=i,
                twist=di,
                weight=a,
                weight2=(di,) if di else (),
                rank=rank,
                vanishing=rank == 0,
            )
        )
    return BettiTable(
        kind="H_super",
        d=data.degree_prefix(N),
        rows=tuple(rows),
        params={"lam": data.lam, "e1": e1, "m0": m0, "m1": m1, "u0": u0, "u1": u1},
        truncated_at=N,
    )


def herzog_kuhl_primitive(d) -> tuple[int, ...]:
    """The unique positive integer vector with gcd 1 proportional to
    (prod_{j != i} 1/|d_j - d_i|)_i.  These are the only Betti numbers a
    pure resolution of type d can have, up to an integer factor."""
    d = check_degrees(d)
    vals = [
        Fraction(1, prod(abs(d[j] - d[i]) for j in range(len(d)) if j != i))
        for i in range(len(d))
    ]
    scale = lcm(*(v.denominator for v in vals))
    ints = [int(v * scale) for v in vals]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def multiple_of_primitive(table: BettiTable) -> int:
    """The integer c with rank_i = c * primitive_i.  Raises NotOnRayError /
    NotIntegralError when the guarantee fails (an implementation bug)."""
    if table.kind not in ("F", "H"):
        raise ValueError("only finite pure tables (kinds F, H) lie on a ray")
    prim = herzog_kuhl_primitive(table.d)
    ratios = {Fraction(r.rank, p) for r, p in zip(table.rows, prim)}
    if len(ratios) != 1:
        raise NotOnRayError(f"ranks {table.ranks} not proportional to {prim}")
    c = ratios.pop()
    if c.denominator != 1:
        raise NotIntegralError(f"multiple {c} of {prim} is not an integer")
    return int(c)


def check_herzog_kuhl(table: BettiTable, codim: int) -> bool:
    """Exact check of sum_i (-1)^i rank_i twist_i^p = 0 for p < codim."""
    if codim < 1:
        raise ValueError("codimension must be positive")
    return all(
        sum((-1) ** r.i * r.rank * r.twist**p for r in table.rows) == 0
        for p in range(codim)
    )


def hilbert_M_euler(d, k: int) -> int:
    """Hilbert function of the module resolved by the F-complex, as the
    alternating sum of the slice dimensions of the free terms."""
    d = check_degrees(d)
    m = len(d) - 1
    t = betti_F(d)
    total = 0
    for r in t.rows:
        if k >= r.twist:
            total += (-1) ** r.i * r.rank * comb(k - r.twist + m - 1, m - 1)
    return total


def _strip_weights(d, k: int) -> list[tuple[int, ...]]:
    """Pieri constituents of the degree-k slice of the 0-th term that survive
    to the resolved module: strips over the base weight avoiding alpha(d,1)."""
    d = check_degrees(d)
    m = len(d) - 1
    if k < d[0]:
        return []
    lam = base_weight(d)
    avoid = alpha(d, 1)
    return [mu for mu in pieri_expand(lam, k - d[0], m) if not contains(mu, avoid)]


def hilbert_M_strips(d, k: int) -> int:
    """Hilbert function of the resolved module by direct representation
    bookkeeping: sum of dim S_mu(E) over the surviving Pieri strips."""
    m = len(d) - 1
    return sum(dim_gl(mu, m) for mu in _strip_weights(d, k))


@dataclass(frozen=True)
class ModuleProfile:
    d: tuple[int, ...]
    hf: dict
    top_degree: int
    socle_weight: tuple[int, ...]
    socle_dim: int


def module_profile(d) -> ModuleProfile:
    """Hilbert function, top degree and socle of the finite-length module
    resolved by the F-complex.  The socle weight is alpha(d, m) with one
    column of full height m removed; its dimension equals the last Betti
    number (Cohen-Macaulay type)."""
    d = check_degrees(d)
    m = len(d) - 1
    top = alpha(d, 1)[0] - 1
    hf = {k: hilbert_M_strips(d, k) for k in range(d[0], top + 1)}
    top_strips = _strip_weights(d, top)
    if len(top_strips) != 1:
        raise AmbiguousSocleError(f"top degree {top} carries strips {top_strips}")
    socle = top_strips[0]
    expected_c = list(conjugate(alpha(d, m)))
    try:
        expected_c.remove(m)
    except ValueError as exc:
        raise AmbiguousSocleError(
            f"conjugate of {alpha(d, m)} has no part equal to {m}"
        ) from exc
    if socle != conjugate(expected_c):
        raise AmbiguousSocleError(
            f"socle strip {socle} does not match predicted {conjugate(expected_c)}"
        )
    return ModuleProfile(
        d=d, hf=hf, top_degree=top, socle_weight=socle, socle_dim=dim_gl(socle, m)
    )


@dataclass(frozen=True)
class DualityReport:
    d: tuple[int, ...]
    is_symmetric: bool
    ranks_palindromic: bool | None = None
    complements_match: bool | None = None
    rectangle: tuple[int, int] | None = None
    witnesses: tuple = ()

    @property
    def passed(self) -> bool:
        return self.is_symmetric and bool(self.ranks_palindromic) and bool(
            self.complements_match
        )


def duality_check(d) -> DualityReport:
    """Self-duality of the F-complex when e is palindromic: ranks are
    palindromic and alpha(d, i), alpha(d, m-i) are complementary in the
    rectangle of width lambda_1 + e_1 and height m."""
    d = check_degrees(d)
    e = diffs(d)
    m = len(d) - 1
    symmetric = all(e[i] == e[m + 1 - i] for i in range(1, m + 1))
    if not symmetric:
        return DualityReport(d=d, is_symmetric=False)
    t = betti_F(d)
    ranks_ok = all(t.ranks[i] == t.ranks[m - i] for i in range(m + 1))
    lam = base_weight(d)
    # complementarity is a statement about the normalized weights: the
    # overall twist by d_0 is shared by every term and drops out
    width = lam[0] - d[0] + e[1]
    bad = []
    for i in range(m + 1):
        norm = tuple(a - d[0] for a in alpha(d, i))
        norm_dual = trim(a - d[0] for a in alpha(d, m - i))
        comp = complement_in_rectangle(norm, width, m)
        if comp != norm_dual:
            bad.append((i, norm, comp, norm_dual))
    return DualityReport(
        d=d,
        is_symmetric=True,
        ranks_palindromic=ranks_ok,
        complements_match=not bad,
        rectangle=(width, m),
        witnesses=tuple(bad),
    )
