"""Certified constructors: each returns a vertex subset whose induced
subgraph provably belongs to the target class and whose size meets the
corresponding degree-sequence bound.

The constrained builders (abc_construct, ab_construct) run a reduction
engine: each rule removes at least one vertex, records its graph delta in a
trace, and prescribes how to lift a certificate of the reduced instance back
to the current one. Rule soundness is enforced with exact rational
comparisons at application time, and every constructor re-verifies its final
certificate before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import BoundMiss, InvalidSpec, IsolatedVertexPresent, NotCubic, ParseError
from .exact import DEFAULT_BUDGET, alpha_exact_partitioned
from .graph import (
    CATERPILLAR_FOREST,
    LINEAR_FOREST,
    STAR_FOREST,
    ForestCertificate,
    ForestClass,
    Graph,
)
from .partition import ABC_CAPS, Partition
from .weights import (
    BoundSpec,
    ab_star_gain,
    ab_star_weight,
    abc_weight,
    gain,
    star_epsilon_opt,
    star_f_eps,
    total_weight,
)

DEFAULT_EXACT_THRESHOLD = 16
_STUCK_BUDGET = 500_000

_DEMOTE = {"A": "B", "B": "C"}


@dataclass(frozen=True)
class ReductionStep:
    """One applied reduction: which rule, and the graph delta it caused."""

    rule: str
    removed: tuple[int, ...] = ()
    added_edges: tuple[tuple[int, int], ...] = ()
    relabeled: tuple[tuple[int, str], ...] = ()
    chosen: tuple[int, ...] = ()
    note: str = ""


@dataclass
class ReductionTrace:
    """Ordered log of reduction steps; replayable against the input graph."""

    steps: list[ReductionStep] = field(default_factory=list)

    def append(self, step: ReductionStep) -> None:
        self.steps.append(step)

    def replay(self, g: Graph) -> Graph:
        """Apply every recorded graph delta in order; returns the residual graph."""
        cur = g
        for step in self.steps:
            for u, v in step.added_edges:
                cur = cur.add_edge(u, v)
            if step.removed:
                cur = cur.delete_vertices(step.removed)
        return cur

    def summary(self) -> str:
        counts: dict[str, int] = {}
        for step in self.steps:
            counts[step.rule] = counts.get(step.rule, 0) + 1
        return " ".join(f"{rule}:{counts[rule]}" for rule in sorted(counts)) or "-"


# ---------------------------------------------------------------------------
# Unconstrained constructors


def greedy_linear_forest(g: Graph) -> ForestCertificate:
    """Induced linear forest of size at least the linear forest bound.

    Deletes a maximum-degree vertex while the maximum degree is at least 3
    (the bound never decreases under such a deletion), then takes every path
    component whole and every cycle component minus one vertex.
    """
    bound = total_weight(g, BoundSpec.flin())
    h = g
    while h.max_degree() >= 3:
        top = h.max_degree()
        v = min(u for u in h.vertices if h.degree(u) == top)
        h = h.delete_vertex(v)
    chosen: set[int] = set()
    for comp in h.components():
        if sum(len(h.neighbors(u) & comp) for u in comp) // 2 == len(comp):
            chosen |= comp - {min(comp)}
        else:
            chosen |= comp
    cert = ForestCertificate(frozenset(chosen), LINEAR_FOREST, bound)
    _check_certificate(g, cert)
    return cert


def caterpillar_forest(g: Graph) -> ForestCertificate:
    """Induced caterpillar forest of size at least sum of 2/(d(v)+1).

    Strips the degree-1 vertices, builds a linear forest of the remainder,
    and adds the stripped vertices back.
    """
    if any(g.degree(v) == 0 for v in g.vertices):
        raise IsolatedVertexPresent("caterpillar bound requires minimum degree >= 1")
    bound = sum((Fraction(2, g.degree(v) + 1) for v in g.vertices), Fraction(0))
    leaves = {v for v in g.vertices if g.degree(v) == 1}
    inner = greedy_linear_forest(g.delete_vertices(leaves))
    cert = ForestCertificate(
        frozenset(set(inner.vertex_set) | leaves), CATERPILLAR_FOREST, bound
    )
    _check_certificate(g, cert)
    return cert


def cubic_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Split a cubic graph so both sides induce maximum degree at most 1.

    Local search from the all-in-one-side assignment: moving a vertex with
    two or more same-side neighbors strictly increases the cut, so at most
    |E| moves happen.
    """
    if any(g.degree(v) != 3 for v in g.vertices):
        raise NotCubic("every vertex must have degree exactly 3")
    side = {v: 0 for v in g.vertices}
    moved = True
    while moved:
        moved = False
        for v in g.vertices:
            if sum(1 for w in g.neighbors(v) if side[w] == side[v]) >= 2:
                side[v] ^= 1
                moved = True
    part1 = frozenset(v for v in g.vertices if side[v] == 0)
    part2 = frozenset(v for v in g.vertices if side[v] == 1)
    return part1, part2


# ---------------------------------------------------------------------------
# ABC engine (constrained linear forests)


def abc_construct(
    g: Graph,
    p: Partition,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
) -> tuple[ForestCertificate, ReductionTrace]:
    """Linear forest respecting the ABC degree caps, of size at least the
    partition-weighted bound."""
    if p.mode != "ABC":
        raise ParseError("abc_construct needs an ABC partition")
    p.validate_for(g)
    bound = total_weight(g, BoundSpec.abc(), p)
    trace = ReductionTrace()
    chosen = _abc_reduce(g, dict(p.labels), trace, exact_threshold, budget, bound)
    cert = ForestCertificate(frozenset(chosen), LINEAR_FOREST, bound)
    if not verify_certificate(g, cert, p):
        raise BoundMiss("abc_construct produced an invalid certificate", cert)
    return cert, trace


def _abc_total(g: Graph, labels: dict[int, str]) -> Fraction:
    return sum((abc_weight(labels[v], g.degree(v)) for v in g.vertices), Fraction(0))


def _abc_reduce(
    g: Graph,
    labels: dict[int, str],
    trace: ReductionTrace,
    threshold: int,
    budget: int,
    full_bound: Fraction,
) -> set[int]:
    if g.n == 0:
        return set()

    # R1: delete a vertex whose weight is at most its neighbors' total gain.
    pick = None
    for v in g.vertices:
        fv = abc_weight(labels[v], g.degree(v))
        if fv <= sum((gain(labels[w], g.degree(w)) for w in g.neighbors(v)), Fraction(0)):
            if pick is None or (fv, v) < pick:
                pick = (fv, v)
    if pick is not None:
        v = pick[1]
        trace.append(ReductionStep("R1", removed=(v,)))
        rest = {u: part for u, part in labels.items() if u != v}
        return _abc_reduce(g.delete_vertex(v), rest, trace, threshold, budget, full_bound)

    # R2: max degree <= 2 means every component is a path or a cycle, solved
    # optimally by dynamic programming.
    if g.max_degree() <= 2:
        chosen: set[int] = set()
        for comp in g.components():
            sub = g.induced(comp)
            picks = _dp_component(sub, labels, "abc")
            need = _abc_total(sub, labels)
            if Fraction(len(picks)) < need:
                raise BoundMiss(
                    f"path/cycle optimum {len(picks)} below bound {need}",
                    ForestCertificate(frozenset(picks), LINEAR_FOREST, need),
                )
            trace.append(
                ReductionStep("R2", removed=tuple(sorted(comp)), chosen=tuple(sorted(picks)))
            )
            chosen |= picks
        return chosen

    # R3: strip a leaf whose weight survives re-adding it after demoting its
    # neighbor one rank.
    for v in g.vertices:
        if g.degree(v) != 1 or labels[v] == "C":
            continue
        (w,) = g.neighbors(v)
        if labels[w] == "C":
            continue
        demoted = _DEMOTE[labels[w]]
        drop = abc_weight(labels[v], 1) + (
            abc_weight(labels[w], g.degree(w)) - abc_weight(demoted, g.degree(w) - 1)
        )
        if drop > 1:
            continue
        trace.append(ReductionStep("R3", removed=(v,), relabeled=((w, demoted),)))
        rest = {u: part for u, part in labels.items() if u != v}
        rest[w] = demoted
        picks = _abc_reduce(g.delete_vertex(v), rest, trace, threshold, budget, full_bound)
        picks.add(v)
        return picks

    # R4: solve components independently.
    comps = g.components()
    if len(comps) > 1:
        trace.append(ReductionStep("R4", note=f"split into {len(comps)} components"))
        out: set[int] = set()
        for comp in comps:
            sub_labels = {v: labels[v] for v in comp}
            out |= _abc_reduce(g.induced(comp), sub_labels, trace, threshold, budget, full_bound)
        return out

    # R5: promote a degree-3 B vertex, delete its lightest neighbor, and tie
    # the two heavier ones together; apply only when the rewritten instance
    # keeps the full bound.
    base_total = _abc_total(g, labels)
    for v in g.vertices:
        if labels[v] != "B" or g.degree(v) != 3:
            continue
        nbrs = sorted(
            g.neighbors(v), key=lambda w: (-abc_weight(labels[w], g.degree(w)), w)
        )
        x, y, z = nbrs
        reduced = g.delete_vertex(z).add_edge(x, y)
        new_labels = {u: part for u, part in labels.items() if u != z}
        new_labels[v] = "A"
        if _abc_total(reduced, new_labels) < base_total:
            continue
        added = () if g.has_edge(x, y) else ((x, y),)
        trace.append(
            ReductionStep("R5", removed=(z,), added_edges=added, relabeled=((v, "A"),))
        )
        return _abc_reduce(reduced, new_labels, trace, threshold, budget, full_bound)

    # R6: constrained exact search.
    return _exact_fallback(
        g, Partition(labels, "ABC"), trace, threshold, budget, _abc_total(g, labels), "R6"
    )


# ---------------------------------------------------------------------------
# AB engine (constrained star forests)


def ab_construct(
    g: Graph,
    p: Partition,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
) -> tuple[ForestCertificate, ReductionTrace]:
    """Star forest respecting the AB edge condition, of size at least the
    partition-weighted bound."""
    if p.mode != "AB":
        raise ParseError("ab_construct needs an AB partition")
    p.validate_for(g)
    bound = total_weight(g, BoundSpec.abstar(), p)
    trace = ReductionTrace()
    chosen = _ab_reduce(g, dict(p.labels), trace, exact_threshold, budget)
    cert = ForestCertificate(frozenset(chosen), STAR_FOREST, bound)
    if not verify_certificate(g, cert, p):
        raise BoundMiss("ab_construct produced an invalid certificate", cert)
    return cert, trace


def _ab_total(g: Graph, labels: dict[int, str]) -> Fraction:
    return sum((ab_star_weight(labels[v], g.degree(v)) for v in g.vertices), Fraction(0))


def _ab_reduce(
    g: Graph,
    labels: dict[int, str],
    trace: ReductionTrace,
    threshold: int,
    budget: int,
) -> set[int]:
    if g.n == 0:
        return set()

    # S1: weight-vs-gain deletion.
    pick = None
    for v in g.vertices:
        fv = ab_star_weight(labels[v], g.degree(v))
        if fv <= sum(
            (ab_star_gain(labels[w], g.degree(w)) for w in g.neighbors(v)), Fraction(0)
        ):
            if pick is None or (fv, v) < pick:
                pick = (fv, v)
    if pick is not None:
        v = pick[1]
        trace.append(ReductionStep("S1", removed=(v,)))
        rest = {u: part for u, part in labels.items() if u != v}
        return _ab_reduce(g.delete_vertex(v), rest, trace, threshold, budget)

    # S2: paths and cycles solved optimally by dynamic programming.
    if g.max_degree() <= 2:
        chosen: set[int] = set()
        for comp in g.components():
            sub = g.induced(comp)
            picks = _dp_component(sub, labels, "ab")
            need = _ab_total(sub, labels)
            if Fraction(len(picks)) < need:
                raise BoundMiss(
                    f"path/cycle optimum {len(picks)} below bound {need}",
                    ForestCertificate(frozenset(picks), STAR_FOREST, need),
                )
            trace.append(
                ReductionStep("S2", removed=tuple(sorted(comp)), chosen=tuple(sorted(picks)))
            )
            chosen |= picks
        return chosen

    # S3: strip an A leaf; its neighbor moves to B so the leaf can always be
    # re-added.
    for v in g.vertices:
        if g.degree(v) != 1 or labels[v] != "A":
            continue
        (w,) = g.neighbors(v)
        drop = Fraction(5, 6) + (
            ab_star_weight(labels[w], g.degree(w)) - ab_star_weight("B", g.degree(w) - 1)
        )
        if drop > 1:
            continue
        trace.append(ReductionStep("S3", removed=(v,), relabeled=((w, "B"),)))
        rest = {u: part for u, part in labels.items() if u != v}
        rest[w] = "B"
        picks = _ab_reduce(g.delete_vertex(v), rest, trace, threshold, budget)
        picks.add(v)
        return picks

    # S4: solve components independently.
    comps = g.components()
    if len(comps) > 1:
        trace.append(ReductionStep("S4", note=f"split into {len(comps)} components"))
        out: set[int] = set()
        for comp in comps:
            sub_labels = {v: labels[v] for v in comp}
            out |= _ab_reduce(g.induced(comp), sub_labels, trace, threshold, budget)
        return out

    # S5: endgame. All vertices in A with degrees 2 and 3, the degree-2
    # vertices far apart: contract each degree-2 path into an edge, split the
    # resulting cubic graph, and keep the bigger side plus every degree-2
    # vertex.
    endgame = _ab_endgame(g, labels, trace)
    if endgame is not None:
        return endgame

    # S6: constrained exact search.
    return _exact_fallback(
        g, Partition(labels, "AB"), trace, threshold, budget, _ab_total(g, labels), "S6"
    )


def _ab_endgame(g: Graph, labels: dict[int, str], trace: ReductionTrace) -> Optional[set[int]]:
    if any(part != "A" for part in labels.values()):
        return None
    if any(g.degree(v) not in (2, 3) for v in g.vertices):
        return None
    low = [v for v in g.vertices if g.degree(v) == 2]
    for v in low:
        u, w = sorted(g.neighbors(v))
        if g.degree(u) != 3 or g.degree(w) != 3 or g.has_edge(u, w):
            return None
        if _within_distance(g, v, set(low) - {v}, 3):
            return None
    contracted = g.delete_vertices(low)
    for v in low:
        u, w = sorted(g.neighbors(v))
        contracted = contracted.add_edge(u, w)
    if any(contracted.degree(v) != 3 for v in contracted.vertices):
        return None
    part1, part2 = cubic_partition(contracted)
    keep = part1 if len(part1) >= len(part2) else part2
    chosen = set(keep) | set(low)
    need = _ab_total(g, labels)
    if Fraction(len(chosen)) < need:
        return None
    trace.append(
        ReductionStep(
            "S5",
            removed=tuple(sorted(g.vertices)),
            chosen=tuple(sorted(chosen)),
            note=f"contracted {len(low)} paths",
        )
    )
    return chosen


def _within_distance(g: Graph, start: int, targets: set[int], radius: int) -> bool:
    seen = {start}
    frontier = {start}
    for _ in range(radius):
        frontier = {w for u in frontier for w in g.neighbors(u)} - seen
        if frontier & targets:
            return True
        seen |= frontier
    return False


def _exact_fallback(
    g: Graph,
    p: Partition,
    trace: ReductionTrace,
    threshold: int,
    budget: int,
    need: Fraction,
    rule: str,
) -> set[int]:
    over = g.n > threshold
    result = alpha_exact_partitioned(g, p, budget=_STUCK_BUDGET if over else budget)
    forest_class = LINEAR_FOREST if p.mode == "ABC" else STAR_FOREST
    if Fraction(result.alpha) >= need:
        trace.append(
            ReductionStep(
                rule,
                removed=tuple(sorted(g.vertices)),
                chosen=tuple(sorted(result.witness)),
                note="over-threshold" if over else "",
            )
        )
        return set(result.witness)
    raise BoundMiss(
        f"residual graph on {g.n} vertices (threshold {threshold}) missed the bound: "
        f"best {result.alpha} < {need} (exact={result.exact})",
        ForestCertificate(frozenset(result.witness), forest_class, need),
    )


# ---------------------------------------------------------------------------
# Dynamic programs for paths and cycles


def _component_order(g: Graph) -> tuple[list[int], bool]:
    """Traversal order of a connected component with max degree <= 2."""
    if g.n == 1:
        return list(g.vertices), False
    ends = sorted(v for v in g.vertices if g.degree(v) <= 1)
    is_cycle = not ends
    start = min(g.vertices) if is_cycle else ends[0]
    order = [start]
    prev = None
    while len(order) < g.n:
        nxt = min(g.neighbors(order[-1]) - ({prev} if prev is not None else set()))
        prev = order[-1]
        order.append(nxt)
    return order, is_cycle


def _dp_component(g: Graph, labels: dict[int, str], mode: str) -> set[int]:
    order, is_cycle = _component_order(g)
    runner = _dp_path_abc if mode == "abc" else _dp_path_ab
    if not is_cycle:
        count, picks = runner(order, labels)
        return picks
    best: tuple[int, set[int]] | None = None
    for skip in range(len(order)):
        seq = order[skip + 1 :] + order[:skip]
        count, picks = runner(seq, labels)
        if best is None or count > best[0]:
            best = (count, picks)
    return best[1]


def _dp_path_abc(order: list[int], labels: dict[int, str]) -> tuple[int, set[int]]:
    """Best cap-respecting selection along a path.

    States: 0 vertex unchosen, 1 chosen with unchosen predecessor, 2 chosen
    with chosen predecessor.
    """
    neg = -1
    caps = [ABC_CAPS[labels[v]] for v in order]
    n = len(order)
    value = [[neg] * 3 for _ in range(n)]
    back = [[None] * 3 for _ in range(n)]
    value[0][0] = 0
    value[0][1] = 1
    for i in range(1, n):
        for prev_state in (0, 1, 2):
            base = value[i - 1][prev_state]
            if base < 0:
                continue
            if base > value[i][0]:
                value[i][0] = base
                back[i][0] = prev_state
            if prev_state == 0:
                if base + 1 > value[i][1]:
                    value[i][1] = base + 1
                    back[i][1] = prev_state
            else:
                need_prev = 1 if prev_state == 1 else 2
                if caps[i - 1] >= need_prev and caps[i] >= 1 and base + 1 > value[i][2]:
                    value[i][2] = base + 1
                    back[i][2] = prev_state
    end_state = max((0, 1, 2), key=lambda s: (value[n - 1][s], -s))
    picks: set[int] = set()
    state = end_state
    for i in range(n - 1, -1, -1):
        if state != 0:
            picks.add(order[i])
        state = back[i][state] if i > 0 else None
    return max(value[n - 1]), picks


_AB_START = {"A": 1, "B": 2}
# Star-forest runs along a path: singletons are free, a pair may not be B-B,
# a triple needs both ends in A, longer runs are never stars.
_AB_EXTEND = {
    (1, "A"): 3,
    (1, "B"): 4,
    (2, "A"): 5,
    (3, "A"): 6,
    (4, "A"): 6,
}


def _dp_path_ab(order: list[int], labels: dict[int, str]) -> tuple[int, set[int]]:
    neg = -1
    n = len(order)
    nstates = 7
    value = [[neg] * nstates for _ in range(n)]
    back = [[None] * nstates for _ in range(n)]
    value[0][0] = 0
    value[0][_AB_START[labels[order[0]]]] = 1
    for i in range(1, n):
        lab = labels[order[i]]
        for prev_state in range(nstates):
            base = value[i - 1][prev_state]
            if base < 0:
                continue
            if base > value[i][0]:
                value[i][0] = base
                back[i][0] = prev_state
            if prev_state == 0:
                st = _AB_START[lab]
            else:
                st = _AB_EXTEND.get((prev_state, lab))
            if st is not None and base + 1 > value[i][st]:
                value[i][st] = base + 1
                back[i][st] = prev_state
    end_state = max(range(nstates), key=lambda s: (value[n - 1][s], -s))
    picks: set[int] = set()
    state = end_state
    for i in range(n - 1, -1, -1):
        if state != 0:
            picks.add(order[i])
        state = back[i][state] if i > 0 else None
    return max(value[n - 1]), picks


# ---------------------------------------------------------------------------
# Bound-specific wrappers


def k_caterpillar_forest(
    g: Graph,
    k: int,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
) -> ForestCertificate:
    """Caterpillar forest of maximum degree at most k meeting the local bound.

    Recursion: drop any vertex with k+1 or more leaf neighbors, split into
    components, then strip the leaves, label the rest by how many leaves they
    carry, and hand the core to the ABC engine.
    """
    if k < 2:
        raise InvalidSpec(f"k must be >= 2, got {k}")
    bound = total_weight(g, BoundSpec.hkg(k))
    chosen = _kcat_reduce(g, k, exact_threshold, budget)
    cert = ForestCertificate(frozenset(chosen), ForestClass.caterpillar(k), bound)
    if not verify_certificate(g, cert):
        raise BoundMiss("k_caterpillar_forest produced an invalid certificate", cert)
    return cert


def _kcat_reduce(g: Graph, k: int, threshold: int, budget: int) -> set[int]:
    if g.n == 0:
        return set()
    for v in g.vertices:
        leaf_count = sum(1 for w in g.neighbors(v) if g.degree(w) == 1)
        if leaf_count >= k + 1:
            return _kcat_reduce(g.delete_vertex(v), k, threshold, budget)
    comps = g.components()
    if len(comps) > 1:
        out: set[int] = set()
        for comp in comps:
            out |= _kcat_reduce(g.induced(comp), k, threshold, budget)
        return out
    leaves = {v for v in g.vertices if g.degree(v) == 1}
    labels = {}
    for v in g.vertices:
        if v in leaves:
            continue
        carried = len(g.neighbors(v) & leaves)
        labels[v] = "A" if carried <= k - 2 else ("B" if carried == k - 1 else "C")
    inner, _ = abc_construct(
        g.delete_vertices(leaves), Partition(labels, "ABC"), threshold, budget
    )
    return set(inner.vertex_set) | leaves


def star_forest(
    g: Graph,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
) -> ForestCertificate:
    """Star forest meeting the best epsilon-family bound for g's degrees.

    Per component: strip the leaves, label the remaining vertices by whether
    they carried a leaf, and hand the core to the AB engine.
    """
    eps = star_epsilon_opt(g.degree_histogram())
    bound = sum((star_f_eps(eps, g.degree(v)) for v in g.vertices), Fraction(0))
    chosen = _star_reduce(g, exact_threshold, budget)
    cert = ForestCertificate(frozenset(chosen), STAR_FOREST, bound)
    if not verify_certificate(g, cert):
        raise BoundMiss("star_forest produced an invalid certificate", cert)
    return cert


def _star_reduce(g: Graph, threshold: int, budget: int) -> set[int]:
    if g.n == 0:
        return set()
    comps = g.components()
    if len(comps) > 1:
        out: set[int] = set()
        for comp in comps:
            out |= _star_reduce(g.induced(comp), threshold, budget)
        return out
    if g.n <= 2:
        return set(g.vertices)
    leaves = {v for v in g.vertices if g.degree(v) == 1}
    labels = {
        v: ("B" if g.neighbors(v) & leaves else "A")
        for v in g.vertices
        if v not in leaves
    }
    inner, _ = ab_construct(g.delete_vertices(leaves), Partition(labels, "AB"), threshold, budget)
    return set(inner.vertex_set) | leaves


# ---------------------------------------------------------------------------
# Verification and serialization


def verify_certificate(g: Graph, cert: ForestCertificate, labels: Optional[Partition] = None) -> bool:
    """Check class membership, optional per-part constraints, and the bound."""
    if not set(cert.vertex_set) <= set(g.vertices):
        return False
    sub = g.induced(cert.vertex_set)
    if not cert.forest_class.contains(sub):
        return False
    if labels is not None:
        if labels.mode == "ABC":
            for v in sub.vertices:
                if sub.degree(v) > ABC_CAPS[labels.part(v)]:
                    return False
        else:
            for u, v in sub.edges():
                for a, b in ((u, v), (v, u)):
                    if labels.part(b) == "B" and not (
                        labels.part(a) == "A" and sub.degree(a) == 1
                    ):
                        return False
    return Fraction(len(cert.vertex_set)) >= cert.claimed_bound


def _check_certificate(g: Graph, cert: ForestCertificate) -> None:
    if not verify_certificate(g, cert):
        raise BoundMiss("constructed certificate failed verification", cert)


def certificate_to_text(
    cert: ForestCertificate, graph_hash: str = "", trace: Optional[ReductionTrace] = None
) -> str:
    bound = cert.claimed_bound
    lines = [
        f"graph={graph_hash or '-'}",
        f"class={cert.forest_class.to_text()}",
        f"bound={bound.numerator}/{bound.denominator}",
        "vertices=" + " ".join(map(str, sorted(cert.vertex_set))),
        f"trace={trace.summary() if trace is not None else '-'}",
    ]
    return "\n".join(lines) + "\n"


def certificate_from_text(text: str) -> tuple[ForestCertificate, str]:
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise ParseError(f"bad certificate line {line!r}")
        fields[key.strip()] = value.strip()
    try:
        forest_class = ForestClass.from_text(fields["class"])
        bound = Fraction(fields["bound"])
        vertex_set = frozenset(int(tok) for tok in fields["vertices"].split())
    except KeyError as exc:
        raise ParseError(f"certificate missing field {exc}") from exc
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad certificate value: {exc}") from exc
    graph_hash = fields.get("graph", "-")
    return ForestCertificate(vertex_set, forest_class, bound), graph_hash
