"""Closed formulas, bounds, and characterizations for the corona dimension,
plus the seeded random-graph sampler used by the verification suites.

Every function here is a statement about graphs that the solver modules can
check computationally; the verification suites in :mod:`equidim.suites`
cross-check each one against the exact structured search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import covers, equalizers
from .bisectors import empty_bisector_graph
from .errors import BudgetError, GraphError
from .families import FamilySpec
from .graphs import Graph, degree_profile


@dataclass(frozen=True)
class BoundsReport:
    """All general bounds next to the exact value for one base graph and one
    copy order.  Fields are ``None`` when their computation was skipped for
    budget reasons; present values always satisfy
    ``floor <= exact`` and ``lower_weak <= lower <= exact <= upper <= upper_via_xi``.
    """

    n_h: int
    floor: int
    lower_weak: int
    lower: int | None
    upper: int
    upper_via_xi: int | None
    exact: int


@dataclass(frozen=True)
class FormulaValue:
    """Result of one closed-formula clause.

    The bistar clause is flagged: the expression ``r*n(H) + s`` would need
    partite sets of sizes r and s, but the order-(r+s+2) bistar has parts of
    sizes r+1 and s+1.  Both values are reported; ``alternate_value``
    carries the bipartite-rule value, which is the one the verification
    suites trust.
    """

    family: FamilySpec
    n_h: int
    value: int
    clause: str
    flagged: bool = False
    alternate_value: int | None = None


@dataclass(frozen=True)
class Ecc2Report:
    """Upper bound obtained from a vertex of eccentricity at most two, and
    the exact value when such a vertex has degree equal to the independence
    number of the empty bisector graph."""

    upper: int
    exact: int | None


def ghat_stats(g: Graph) -> tuple[Graph, int, int]:
    """The empty bisector graph with its cover and independence numbers."""
    ghat = empty_bisector_graph(g).graph
    beta = covers.vertex_cover_number(ghat).value
    return ghat, beta, g.n - beta


def bounds_report(g: Graph, n_h: int) -> BoundsReport:
    """Every general bound plus the exact structured value."""
    if n_h < 1:
        raise GraphError(f"copy order must be positive, got {n_h}")
    ghat, beta, alpha = ghat_stats(g)
    floor = g.n
    lower_weak = beta * n_h + alpha
    try:
        lower = lower_weak + equalizers.beta_star(g).value
    except BudgetError:
        lower = None
    upper = beta * n_h + g.n
    try:
        upper_via_xi = equalizers.xi_bruteforce(g).value * n_h + g.n
    except BudgetError:
        upper_via_xi = None
    exact = equalizers.xi_corona_structured(g, n_h).value
    report = BoundsReport(n_h, floor, lower_weak, lower, upper, upper_via_xi, exact)
    _assert_chain(report)
    return report


def _assert_chain(r: BoundsReport) -> None:
    ok = r.floor <= r.exact and r.lower_weak <= r.exact <= r.upper
    if r.lower is not None:
        ok = ok and r.lower_weak <= r.lower <= r.exact
    if r.upper_via_xi is not None:
        ok = ok and r.upper <= r.upper_via_xi
    if not ok:
        raise AssertionError(f"bound chain violated: {r}")


def _params(spec: FamilySpec, count: int) -> tuple[int, ...]:
    if len(spec.params) != count:
        raise GraphError(
            f"clause for {spec.name!r} takes {count} parameter(s), got {len(spec.params)}"
        )
    return spec.params


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise GraphError(message)


_FORMULA_FAMILIES = (
    "complete",
    "complete-bipartite",
    "bistar",
    "complete-multipartite",
    "wheel",
    "hypercube",
    "path",
    "cycle",
)


def closed_formula(spec: FamilySpec, n_h: int) -> FormulaValue:
    """Corona dimension of a named family by its closed-form clause."""
    if n_h < 1:
        raise GraphError(f"copy order must be positive, got {n_h}")
    name, params = spec.name, spec.params
    if name == "complete":
        (n,) = _params(spec, 1)
        _require(n >= 2, f"complete clause needs n >= 2, got {n}")
        value = n_h + 1 if n == 2 else n
        return FormulaValue(spec, n_h, value, "complete")
    if name == "complete-bipartite":
        r, s = _params(spec, 2)
        _require(1 <= r <= s, f"complete-bipartite clause needs 1 <= r <= s, got {params}")
        return FormulaValue(spec, n_h, r * n_h + s, "complete-bipartite")
    if name == "bistar":
        r, s = _params(spec, 2)
        _require(1 <= r <= s, f"bistar clause needs 1 <= r <= s, got {params}")
        return FormulaValue(
            spec,
            n_h,
            r * n_h + s,
            "bistar",
            flagged=True,
            alternate_value=(r + 1) * n_h + (s + 1),
        )
    if name == "complete-multipartite":
        _require(len(params) >= 3, f"multipartite clause needs p >= 3 parts, got {params}")
        _require(all(x >= 1 for x in params), f"part sizes must be >= 1, got {params}")
        return FormulaValue(spec, n_h, sum(params), "complete-multipartite")
    if name == "wheel":
        (n,) = _params(spec, 1)
        _require(n >= 4, f"wheel clause needs n >= 4, got {n}")
        return FormulaValue(spec, n_h, n, "wheel")
    if name == "hypercube":
        (d,) = _params(spec, 1)
        _require(d >= 1, f"hypercube clause needs dimension >= 1, got {d}")
        return FormulaValue(spec, n_h, (1 << (d - 1)) * (n_h + 1), "hypercube")
    if name == "path":
        (n,) = _params(spec, 1)
        _require(n >= 2, f"path clause needs n >= 2, got {n}")
        return FormulaValue(spec, n_h, (n // 2) * n_h + (n + 1) // 2, "path")
    if name == "cycle":
        (n,) = _params(spec, 1)
        _require(n >= 3, f"cycle clause needs n >= 3, got {n}")
        value = n if n % 2 == 1 else n * (n_h + 1) // 2
        return FormulaValue(spec, n_h, value, "cycle")
    raise GraphError(
        f"no closed formula for family {name!r}; covered: {', '.join(_FORMULA_FAMILIES)}"
    )


def xi_equals_order_characterization(g: Graph, n_h: int) -> tuple[bool, str]:
    """Whether the corona dimension collapses to the base order, decided
    from the empty bisector graph alone."""
    _, beta, _ = ghat_stats(g)
    if beta == 0:
        return True, "empty bisector graph has no edges"
    if n_h == 1 and equalizers.beta_star(g).value == 0:
        return True, "single-vertex copies and zero cover overlap"
    return False, "no clause applies"


def two_coloring(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """The unique bipartition of a connected bipartite graph (smaller side
    second); rejects non-bipartite input."""
    if not g.is_connected:
        raise GraphError("two-coloring requires a connected graph")
    side = [None] * g.n
    side[0] = 0
    order = [0]
    for v in order:
        for u in g.neighbors(v):
            if side[u] is None:
                side[u] = 1 - side[v]
                order.append(u)
            elif side[u] == side[v]:
                raise GraphError("graph is not bipartite")
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(range(g.n)) - a
    return (a, b) if len(a) >= len(b) else (b, a)


def bipartite_formula(g: Graph, n_h: int) -> int:
    """Corona dimension of a connected bipartite base graph: the smaller
    part buys full copies, the larger part is taken whole."""
    big, small = two_coloring(g)
    return len(small) * n_h + len(big)


def join_formula(g1: Graph, g2: Graph, n_h: int) -> int:
    """Corona dimension over a join base: simply the total order, provided
    at least one side has no isolated vertices."""
    if min(g1.degree(v) for v in range(g1.n)) == 0 and (
        min(g2.degree(v) for v in range(g2.n)) == 0
    ):
        raise GraphError("join formula needs one side without isolated vertices")
    return g1.n + g2.n


def eccentricity2_case(g: Graph, n_h: int) -> Ecc2Report | None:
    """Bound from a vertex seeing everything within distance two, if any."""
    profile = degree_profile(g)
    qualifying = [v for v in range(g.n) if profile.eccentricities[v] <= 2]
    if not qualifying:
        return None
    upper = min((g.n - profile.degrees[v]) * n_h + profile.degrees[v] for v in qualifying)
    _, _, alpha = ghat_stats(g)
    exact = None
    if any(profile.degrees[v] == alpha for v in qualifying):
        exact = (g.n - alpha) * n_h + alpha
    return Ecc2Report(upper, exact)


def universal_vertex_formula(g: Graph, n_h: int) -> int:
    """Corona dimension when the base graph has a universal vertex."""
    profile = degree_profile(g)
    if g.n < 2 or profile.max_degree != g.n - 1:
        raise GraphError("formula needs a universal vertex in a graph of order >= 2")
    if profile.min_degree >= 2:
        return g.n
    return n_h + g.n - 1


# -- seeded random corpus -------------------------------------------------------


def random_connected_graph(
    rng: random.Random, n: int, p: float, max_tries: int = 10000
) -> Graph:
    """One connected sample: edge probability ``p``, resampled on disconnect."""
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    for _ in range(max_tries):
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.is_connected:
            return g
    raise GraphError(f"no connected sample after {max_tries} tries (n={n}, p={p})")


def seeded_corpus(
    seed: int,
    count: int = 50,
    min_n: int = 4,
    max_n: int = 10,
    densities: tuple[float, ...] = (0.3, 0.5, 0.7),
) -> list[Graph]:
    """Deterministic list of connected random graphs at mixed densities."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice(densities)
        out.append(random_connected_graph(rng, n, p))
    return out


def random_connected_bipartite(
    rng: random.Random, n: int, p: float = 0.6, max_tries: int = 10000
) -> Graph:
    """One connected bipartite sample: cross edges only, resampled on
    disconnect.  For n = 1 this is the single vertex."""
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    if n == 1:
        return Graph(1)
    for _ in range(max_tries):
        r = rng.randint(1, n - 1)
        edges = [
            (u, v) for u in range(r) for v in range(r, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.is_connected:
            return g
    raise GraphError(f"no connected bipartite sample after {max_tries} tries (n={n})")


def all_connected_graphs(n: int) -> list[Graph]:
    """Every connected graph on the labeled vertex set 0..n-1."""
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = []
    for mask in range(1 << len(slots)):
        g = Graph(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])
        if g.is_connected:
            out.append(g)
    return out
