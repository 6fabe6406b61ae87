from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from veds.graphs.exceptions import InputError


@dataclass(frozen=True)
class SetSystem:
    """
    A universe ``1..p`` and a family of ``q`` nonempty subsets, numbered from 1.
    """

    p: int
    sets: Tuple[FrozenSet[int], ...]

    @property
    def q(self) -> int:
        return len(self.sets)

    @property
    def within_reduction_bounds(self) -> bool:
        return self.q <= self.p

    @property
    def uncovered(self) -> Tuple[int, ...]:
        covered = frozenset().union(*self.sets)
        return tuple(
            element for element in range(1, self.p + 1) if element not in covered
        )

    @property
    def coverless(self) -> bool:
        return bool(self.uncovered)

    def members(self, j: int) -> FrozenSet[int]:
        return self.sets[j - 1]

    def sets_containing(self, element: int) -> Tuple[int, ...]:
        return tuple(
            j for j, members in enumerate(self.sets, start=1) if element in members
        )

    def is_cover(self, cover: Iterable[int]) -> bool:
        chosen = set(cover)
        if not all(1 <= j <= self.q for j in chosen):
            return False
        covered = frozenset().union(*(self.sets[j - 1] for j in chosen))
        return covered >= frozenset(range(1, self.p + 1))


def build_set_system(p: int, sets: Iterable[Iterable[int]]) -> SetSystem:
    if p < 1:
        raise InputError(f"universe size must be at least 1, got {p}")

    family = []
    for j, members in enumerate(sets, start=1):
        members = frozenset(members)
        if not members:
            raise InputError(f"set {j} is empty")
        stray = sorted(element for element in members if not 1 <= element <= p)
        if stray:
            raise InputError(f"set {j} has elements outside 1..{p}: {stray}")
        family.append(members)

    return SetSystem(p=p, sets=tuple(family))
