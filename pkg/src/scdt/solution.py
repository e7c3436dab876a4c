"""Result type shared by the exact solvers and the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass, field

KINDS = ("VC", "FVS", "OCT", "CVD")


@dataclass(frozen=True)
class Solution:
    """An optimal deletion set for one of the supported problems.

    ``target`` echoes an optional size bound; ``meets_target`` is then the
    yes/no answer to "is there a solution of size at most target".
    """

    kind: str
    vertices: frozenset[int]
    target: int | None = None
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in KINDS:
            raise ValueError(f"unknown problem kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "vertices", frozenset(self.vertices))

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def meets_target(self) -> bool | None:
        return None if self.target is None else self.size <= self.target

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)
