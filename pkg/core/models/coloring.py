from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Vertex to color assignment; colors are 0..k-1 and every one of them is used."""

    colors: Mapping[int, int] = field(hash=False)

    def __post_init__(self):
        used = set(self.colors.values())
        if used != set(range(len(used))):
            raise ColoringError(f"Colors must be exactly 0..k-1, got {sorted(used)}")

    @classmethod
    def from_sequence(cls, colors: Sequence[int]) -> Coloring:
        return cls(dict(enumerate(colors)))

    @property
    def k(self) -> int:
        return len(set(self.colors.values()))

    def color_of(self, v: int) -> int:
        try:
            return self.colors[v]
        except KeyError:
            raise ColoringError(f"Vertex {v} has no color") from None

    def pairs(self) -> list[str]:
        return [f"{v}:{c}" for v, c in sorted(self.colors.items())]
