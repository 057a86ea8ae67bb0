"""Deterministic witness-family generators and seeded random graph models.

Vertex numbering is fixed per family: core vertices first, then pendant
leaves grouped by the core vertex that owns them, so certificates on these
graphs read predictably.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import InfeasibleDegree, InvalidSpec, ParseError, RetryLimit
from .graph import Graph
from .partition import Partition

PAIRING_RETRY_CAP = 10_000

FIG1_GADGETS = ("P3AB", "K2AC", "K3ACC")


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated graph family."""

    family: str
    n: Optional[int] = None
    k: Optional[int] = None
    t: Optional[int] = None
    p: Optional[float] = None
    d: Optional[int] = None
    seed: Optional[int] = None
    gadget: Optional[str] = None

    def to_text(self) -> str:
        parts = []
        for key, value in (
            ("n", self.n),
            ("k", self.k),
            ("t", self.t),
            ("p", self.p),
            ("d", self.d),
            ("seed", self.seed),
            ("id", self.gadget),
        ):
            if value is not None:
                parts.append(f"{key}={value}")
        return self.family + (":" + ",".join(parts) if parts else "")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(t: int) -> Graph:
    """K_{1,t}: center 0 with t leaves."""
    if t < 0:
        raise InvalidSpec("star needs t >= 0")
    return Graph.from_edges(t + 1, ((0, i) for i in range(1, t + 1)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def hnk_graph(n: int, k: int) -> Graph:
    """Complete graph on n core vertices with k+1 pendant leaves each."""
    if n < 1 or k < 2:
        raise InvalidSpec("hnk needs n >= 1 and k >= 2")
    edges = list(combinations(range(n), 2))
    for core in range(n):
        for j in range(k + 1):
            edges.append((core, n + core * (k + 1) + j))
    return Graph.from_edges(n + n * (k + 1), edges)


def k_prime_graph(n: int) -> Graph:
    """Complete graph on n core vertices with one pendant leaf each."""
    if n < 1:
        raise InvalidSpec("kprime needs n >= 1")
    edges = list(combinations(range(n), 2))
    edges.extend((core, n + core) for core in range(n))
    return Graph.from_edges(2 * n, edges)


def fig1_gadget(gadget: str) -> tuple[Graph, Partition]:
    """The three tightness gadgets, with their drawn labelings."""
    if gadget == "P3AB":
        g = path_graph(3)
        return g, Partition.abc({0: "A", 1: "B", 2: "A"})
    if gadget == "K2AC":
        g = path_graph(2)
        return g, Partition.abc({0: "A", 1: "C"})
    if gadget == "K3ACC":
        g = cycle_graph(3)
        return g, Partition.abc({0: "A", 1: "C", 2: "C"})
    raise InvalidSpec(f"unknown gadget {gadget!r}; expected one of {FIG1_GADGETS}")


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise InvalidSpec("gnp needs n >= 1 and p in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Simple d-regular graph via the pairing model with rejection."""
    if d < 0 or d >= n or (n * d) % 2 != 0:
        raise InfeasibleDegree(f"no simple {d}-regular graph on {n} vertices")
    if d == 0:
        return Graph.from_edges(n, [])
    rng = random.Random(seed)
    for _ in range(PAIRING_RETRY_CAP):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[::2], stubs[1::2]):
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, edges)
    raise RetryLimit(f"pairing model failed {PAIRING_RETRY_CAP} times for n={n}, d={d}")


def generate(spec: GenSpec) -> tuple[Graph, Optional[Partition]]:
    """Materialize a GenSpec; Fig. 1 gadgets also return their labeling."""
    fam = spec.family
    if fam == "complete":
        return complete_graph(_need(spec, "n")), None
    if fam == "star":
        return star_graph(_need(spec, "t")), None
    if fam == "path":
        return path_graph(_need(spec, "n")), None
    if fam == "cycle":
        return cycle_graph(_need(spec, "n")), None
    if fam == "hnk":
        return hnk_graph(_need(spec, "n"), _need(spec, "k")), None
    if fam == "kprime":
        return k_prime_graph(_need(spec, "n")), None
    if fam == "fig1":
        g, labels = fig1_gadget(_need(spec, "gadget"))
        return g, labels
    if fam == "gnp":
        return gnp(_need(spec, "n"), _need(spec, "p"), _need(spec, "seed")), None
    if fam == "regular":
        return random_regular(_need(spec, "n"), _need(spec, "d"), _need(spec, "seed")), None
    raise InvalidSpec(f"unknown family {fam!r}")


def _need(spec: GenSpec, attr: str):
    value = getattr(spec, "gadget" if attr == "gadget" else attr)
    if value is None:
        raise InvalidSpec(f"family {spec.family!r} needs parameter {attr!r}")
    return value


_INT_KEYS = {"n", "k", "t", "d", "seed"}


def parse_gen_spec(text: str) -> GenSpec:
    """Parse the CLI encoding, e.g. `hnk:n=3,k=2` or `gnp:n=30,p=0.2,seed=42`."""
    text = text.strip()
    family, _, argstr = text.partition(":")
    kwargs: dict = {}
    if argstr:
        for piece in argstr.split(","):
            key, eq, value = piece.partition("=")
            key = key.strip()
            value = value.strip()
            if not eq or not value:
                raise ParseError(f"bad generator argument {piece!r} in {text!r}")
            try:
                if key in _INT_KEYS:
                    kwargs[key] = int(value)
                elif key == "p":
                    kwargs[key] = float(value)
                elif key == "id":
                    kwargs["gadget"] = value
                else:
                    raise ParseError(f"unknown generator argument {key!r}")
            except ValueError as exc:
                raise ParseError(f"bad value for {key!r}: {value!r}") from exc
    return GenSpec(family=family, **kwargs)
