"""Pydantic models for vertex colorings, rainbow codes and verification reports."""
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator


class VertexColoring(BaseModel):
    """
    Total surjective assignment of colors 1..k, indexed by vertex id.

    The color classes R_1..R_k are a derived view (see ``classes``).
    """
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Number of colors")
    colors: tuple[int, ...] = Field(..., min_length=1, description="Color of each vertex id")

    @model_validator(mode="after")
    def _check_surjective(self) -> "VertexColoring":
        out_of_range = sorted({c for c in self.colors if not 1 <= c <= self.k})
        if out_of_range:
            raise ValueError(f"Colors {out_of_range} are outside 1..{self.k}")
        missing = sorted(set(range(1, self.k + 1)) - set(self.colors))
        if missing:
            raise ValueError(f"Colors {missing} are unused; colorings must be surjective")
        return self

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "VertexColoring":
        """
        Build a coloring from raw colors, canonicalizing to the used-color count.

        Colors that already form 1..k are kept as they are; gaps are closed by
        relabeling the used colors in increasing order.
        """
        used = sorted(set(colors))
        if used == list(range(1, len(used) + 1)):
            return cls(k=len(used), colors=tuple(colors))
        relabel = {color: rank for rank, color in enumerate(used, start=1)}
        return cls(k=len(used), colors=tuple(relabel[c] for c in colors))

    @classmethod
    def uniform(cls, vertex_count: int) -> "VertexColoring":
        """Every vertex gets color 1."""
        return cls(k=1, colors=(1,) * vertex_count)

    @classmethod
    def all_distinct(cls, vertex_count: int) -> "VertexColoring":
        """Vertex id v gets color v+1."""
        return cls(k=vertex_count, colors=tuple(range(1, vertex_count + 1)))

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    def color_of(self, vertex: int) -> int:
        return self.colors[vertex]

    def classes(self) -> list[list[int]]:
        """Color classes R_1..R_k as sorted vertex lists."""
        classes: list[list[int]] = [[] for _ in range(self.k)]
        for vertex, color in enumerate(self.colors):
            classes[color - 1].append(vertex)
        return classes

    def permuted(self, mapping: dict[int, int]) -> "VertexColoring":
        """Apply a permutation of color labels."""
        return VertexColoring(k=self.k, colors=tuple(mapping[c] for c in self.colors))


class RainbowCode(BaseModel):
    """Distances from one vertex to each color class."""
    model_config = ConfigDict(frozen=True)

    vertex: int
    entries: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.entries)


class LocatingCollision(BaseModel):
    """Two vertices sharing a rainbow code."""
    model_config = ConfigDict(frozen=True)

    pair: tuple[int, int]
    code: tuple[int, ...]


class VerificationReport(BaseModel):
    """
    Outcome of a rainbow and/or locating check.

    Fields of a check that was not run stay None.
    """
    rainbow_ok: Optional[bool] = None
    locating_ok: Optional[bool] = None
    failing_pair_rainbow: Optional[tuple[int, int]] = None
    failing_pair_locating: Optional[LocatingCollision] = None
    codes: Optional[list[list[int]]] = None

    @model_validator(mode="after")
    def _check_witnesses(self) -> "VerificationReport":
        if (self.rainbow_ok is False) != (self.failing_pair_rainbow is not None):
            raise ValueError("rainbow_ok is false exactly when a failing rainbow pair is given")
        if (self.locating_ok is False) != (self.failing_pair_locating is not None):
            raise ValueError("locating_ok is false exactly when a colliding pair is given")
        return self

    @property
    def passed(self) -> bool:
        """True when every check that ran succeeded."""
        return self.rainbow_ok is not False and self.locating_ok is not False

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        """Combine a rainbow-only report with a locating-only report."""
        return VerificationReport(
            rainbow_ok=self.rainbow_ok if self.rainbow_ok is not None else other.rainbow_ok,
            locating_ok=self.locating_ok if self.locating_ok is not None else other.locating_ok,
            failing_pair_rainbow=self.failing_pair_rainbow or other.failing_pair_rainbow,
            failing_pair_locating=self.failing_pair_locating or other.failing_pair_locating,
            codes=self.codes if self.codes is not None else other.codes,
        )
