"""Vertex partitions used by the constrained constructors.

ABC mode labels vertices for the constrained linear forest bound (degree
caps 2/1/0 inside the forest); AB mode labels vertices for the constrained
star forest bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import MissingPartition, ParseError, UnknownVertex
from .graph import Graph

ABC_CAPS = {"A": 2, "B": 1, "C": 0}


@dataclass(frozen=True)
class Partition:
    """Per-vertex tag in {A, B, C} (ABC mode) or {A, B} (AB mode)."""

    labels: Mapping[int, str]
    mode: str = "ABC"

    def __post_init__(self):
        if self.mode not in ("ABC", "AB"):
            raise ValueError(f"mode must be ABC or AB, got {self.mode!r}")
        allowed = set(self.mode)
        for v, part in self.labels.items():
            if part not in allowed:
                raise ParseError(f"label {part!r} on vertex {v} not allowed in {self.mode} mode")

    @classmethod
    def abc(cls, labels: Mapping[int, str]) -> "Partition":
        return cls(dict(labels), "ABC")

    @classmethod
    def ab(cls, labels: Mapping[int, str]) -> "Partition":
        return cls(dict(labels), "AB")

    @classmethod
    def uniform(cls, vertices: Iterable[int], part: str, mode: str = "ABC") -> "Partition":
        return cls({v: part for v in vertices}, mode)

    def part(self, v: int) -> str:
        try:
            return self.labels[v]
        except KeyError:
            raise MissingPartition(f"vertex {v} has no label") from None

    def validate_for(self, g: Graph) -> None:
        missing = [v for v in g.vertices if v not in self.labels]
        if missing:
            raise MissingPartition(f"unlabeled vertices: {missing[:8]}")
        extra = [v for v in self.labels if v not in g]
        if extra:
            raise UnknownVertex(f"labels for vertices not in graph: {extra[:8]}")

    def restrict(self, vertices: Iterable[int]) -> "Partition":
        keep = set(vertices)
        return Partition({v: p for v, p in self.labels.items() if v in keep}, self.mode)

    def class_set(self, part: str) -> frozenset[int]:
        return frozenset(v for v, p in self.labels.items() if p == part)


def parse_partition_file(text: str, mode: str = "ABC") -> Partition:
    """Parse the partition format: one `index label` pair per line."""
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected `index label`, got {line!r}")
        try:
            v = int(parts[0])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad vertex index {parts[0]!r}") from exc
        label = parts[1].upper()
        if v in labels:
            raise ParseError(f"line {lineno}: vertex {v} labeled twice")
        labels[v] = label
    return Partition(labels, mode)


def format_partition(p: Partition) -> str:
    return "\n".join(f"{v} {p.labels[v]}" for v in sorted(p.labels)) + "\n"
