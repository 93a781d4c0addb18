"""
sieve.py

The generic sieve: scan a finite ordered universe, and for every element that is
not yet crossed out, build the subset it generates and cross that subset out.
"""
import logging
from typing import Callable, Generic, Hashable, Iterator, Optional, Sequence, TypeVar

from bitarray import bitarray

from .config import Settings, default_settings
from .enums import ClosureMode
from .exceptions import InfeasibleInstance, SieveException

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)

# Next_i(current, origin): origin is Next_i^0 of the chain being iterated.
# None means undefined.
Generator = Callable[[T, T], Optional[T]]


class UniverseSpec(Generic[T]):
    def __init__(
        self,
        cardinality: int,
        first: Callable[[], T],
        successor: Callable[[T], Optional[T]],
        position: Callable[[T], int],
        generators: Sequence[Generator],
        contains: Optional[Callable[[T], bool]] = None,
        name: str = "universe",
    ):
        if cardinality < 0:
            raise SieveException("cardinality must not be negative")
        if not generators:
            raise SieveException("a universe needs at least one generator")
        self.cardinality = cardinality
        self.first = first
        self.successor = successor
        self.position = position
        self.generators = list(generators)
        self.contains = contains or self._in_range
        self.name = name

    def __repr__(self) -> str:
        return f"UniverseSpec(name={self.name!r}, cardinality={self.cardinality}, k={self.k})"

    @property
    def k(self) -> int:
        return len(self.generators)

    def _in_range(self, x: T) -> bool:
        return 0 <= self.position(x) < self.cardinality

    def elements(self) -> Iterator[T]:
        if not self.cardinality:
            return
        x: Optional[T] = self.first()
        visited = 0
        while x is not None:
            visited += 1
            if visited > self.cardinality:
                raise SieveException(
                    f"successor visits more than {self.cardinality} elements"
                )
            yield x
            x = self.successor(x)

    def generator(self, generator_index: int) -> Generator:
        if not 1 <= generator_index <= self.k:
            raise SieveException(f"generator index {generator_index} is outside 1..{self.k}")
        return self.generators[generator_index - 1]


class ClosureResult(Generic[T]):
    def __init__(self, members: set[T], period_counts: list[tuple[int, T, int]]):
        self.members = members
        # (generator index, chain origin, r(i, origin))
        self.period_counts = period_counts

    def __repr__(self) -> str:
        return repr(self.__dict__)

    def __len__(self) -> int:
        return len(self.members)


class SieveOutcome(Generic[T]):
    def __init__(self, representatives: list[T], crossed_count: int, cardinality: int):
        self.representatives = representatives
        self.class_count = len(representatives)
        self.crossed_count = crossed_count
        self.cardinality = cardinality

    def __repr__(self) -> str:
        return f"SieveOutcome(class_count={self.class_count}, crossed_count={self.crossed_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SieveOutcome):
            return NotImplemented
        return (
            self.representatives == other.representatives
            and self.crossed_count == other.crossed_count
        )


def _chain(spec: UniverseSpec, generator_index: int, seed: T, seen: set[T]) -> tuple[list[T], int]:
    nxt = spec.generator(generator_index)
    chain = [seed]
    local = {seed}
    current = seed
    r = 0
    for _ in range(spec.cardinality):
        image = nxt(current, seed)
        if image is None or not spec.contains(image) or image in local:
            break
        chain.append(image)
        local.add(image)
        current = image
        r += 1
    seen.update(chain)
    return chain, r


def iterate_generator(spec: UniverseSpec, generator_index: int, seed: T) -> ClosureResult:
    members: set[T] = set()
    _, r = _chain(spec, generator_index, seed, members)
    return ClosureResult(members, [(generator_index, seed, r)])


def layered_closure(spec: UniverseSpec, seed: T) -> ClosureResult:
    members: set[T] = set()
    periods = []
    _, r = _chain(spec, 1, seed, members)
    periods.append((1, seed, r))
    for i in range(2, spec.k + 1):
        layer: set[T] = set()
        for y in sorted(members, key=spec.position):
            _, r = _chain(spec, i, y, layer)
            periods.append((i, y, r))
        members = layer
    return ClosureResult(members, periods)


def fixpoint_closure(spec: UniverseSpec, seed: T) -> ClosureResult:
    members = {seed}
    worklist = [seed]
    while worklist:
        y = worklist.pop()
        for nxt in spec.generators:
            image = nxt(y, seed)
            if image is not None and spec.contains(image) and image not in members:
                members.add(image)
                worklist.append(image)
    return ClosureResult(members, [])


_closures = {
    ClosureMode.LAYERED: layered_closure,
    ClosureMode.FIXPOINT: fixpoint_closure,
}


def run_sieve(
    spec: UniverseSpec,
    closure_mode: ClosureMode = ClosureMode.LAYERED,
    settings: Settings = default_settings,
) -> SieveOutcome:
    if spec.cardinality > settings.max_sieve_bits:
        raise InfeasibleInstance(spec.cardinality, settings.max_sieve_bits, "cardinality")
    closure = _closures[closure_mode]
    crossed = bitarray(spec.cardinality)
    crossed.setall(0)
    representatives = []
    # the element iterator is the monotone cursor w
    for x in spec.elements():
        w = spec.position(x)
        if crossed[w]:
            continue
        representatives.append(x)
        for y in closure(spec, x).members:
            p = spec.position(y)
            if p == w:
                continue
            # everything before w is crossed or a representative
            if p < w and not crossed[p]:
                raise SieveException(
                    f"the generators of {spec.name} do not partition it: "
                    f"the subset of {x!r} reaches the earlier representative {y!r}"
                )
            crossed[p] = 1
    outcome = SieveOutcome(representatives, crossed.count(1), spec.cardinality)
    logger.debug("sieve over %s found %d classes", spec.name, outcome.class_count)
    return outcome
