"""
Jagged-partition families: definitions, enumeration and the staircase maps.

A family is a set of constraints ``n_j >= n_{j+s} - d`` on a finite sequence of
non-negative parts together with a lower bound on the last part. Enumeration
builds sequences from the last part backward, since every constraint bounds a
part from below by a later one.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from app.core.errors import FamilyError
from app.schemas.families import FamilyInfo, MaxLengthResponse, PartitionsResponse


logger = logging.getLogger(__name__)

Parts = tuple[int, ...]
Condition = tuple[int, int]


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """
    Declarative family of jagged partitions.

    Parameters
    ----------
    name:
        Identifier used in reports and on the command line.
    constraints:
        Pairs ``(s, d)`` meaning ``n_j >= n_{j+s} - d`` wherever both parts exist.
    tail_min:
        Lower bound on the last part.
    stair_slope, stair_offset:
        The staircase added by the bijection onto ordinary partitions is
        ``step(m, i) = stair_slope * (m - i) + stair_offset`` for ``i = 1 .. m``.
    """

    name: str
    constraints: tuple[Condition, ...]
    tail_min: int
    stair_slope: int
    stair_offset: int
    zero_slack_distance: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.constraints:
            raise FamilyError(f"family {self.name!r} has no constraints")
        seen: set[int] = set()
        for s, d in self.constraints:
            if s < 1 or d < 0:
                raise FamilyError(f"family {self.name!r}: constraint (s={s}, d={d}) needs s >= 1 and d >= 0")
            if s in seen:
                raise FamilyError(f"family {self.name!r}: distance {s} is constrained twice")
            seen.add(s)
        zero_slack = [s for s, d in self.constraints if d == 0]
        if not zero_slack:
            raise FamilyError(f"family {self.name!r} needs a constraint with slack 0, otherwise parts grow without bound")
        if self.tail_min < 1:
            raise FamilyError(f"family {self.name!r}: tail_min must be >= 1, got {self.tail_min}")
        object.__setattr__(self, "constraints", tuple(sorted(self.constraints)))
        object.__setattr__(self, "zero_slack_distance", min(zero_slack))

    @property
    def reach(self) -> int:
        return max(s for s, _ in self.constraints)

    def step(self, m: int, i: int) -> int:
        """Staircase entry added to the i-th part (1-based) of a length-m partition."""
        return self.stair_slope * (m - i) + self.stair_offset

    def sigma(self, m: int) -> int:
        """Weight added by the staircase to a length-m partition."""
        return self.stair_slope * m * (m - 1) // 2 + self.stair_offset * m

    def restricted_conditions(self) -> tuple[Condition, ...]:
        """Difference conditions ``lambda_i >= lambda_{i+s} + g`` satisfied by staircase images."""
        conditions = {s: self.stair_slope * s - d for s, d in self.constraints}
        conditions.setdefault(1, 0)
        return tuple(sorted(conditions.items()))

    def describe(self) -> str:
        body = ",".join(f"d{s}:{d}" for s, d in self.constraints)
        return f"{body};tail={self.tail_min};stair={self.stair_slope}:{self.stair_offset}"


def make_family(
    name: str,
    constraints: list[Condition] | tuple[Condition, ...],
    tail_min: int,
    stair: tuple[int, int] | None = None,
) -> FamilySpec:
    """Build a family; the staircase defaults to the smallest one mapping it onto ordinary partitions."""
    constraints = tuple(constraints)
    if stair is None:
        slope = max((-(-d // s) for s, d in constraints if s >= 1), default=0)
        stair = (slope, 1 - tail_min)
    return FamilySpec(name, constraints, tail_min, stair[0], stair[1])


F01 = make_family("01", [(1, 1), (2, 0)], tail_min=1)
F02 = make_family("02", [(1, 2), (2, 0)], tail_min=2)
F012 = make_family("012", [(1, 1), (2, 2), (3, 0)], tail_min=2)


def f0p1(p: int, name: str | None = None) -> FamilySpec:
    """Family with slack 1 at distances 1..p and slack 0 at distance p + 1."""
    if p < 1:
        raise FamilyError(f"0p1 families need p >= 1, got {p}")
    constraints = [(s, 1) for s in range(1, p + 1)] + [(p + 1, 0)]
    return make_family(name or f"0p1:{p}", constraints, tail_min=1)


F001 = f0p1(2, name="001")

BUILTIN_FAMILIES: dict[str, FamilySpec] = {spec.name: spec for spec in (F01, F02, F012, F001)}

_CUSTOM_RE = re.compile(r"^d(\d+):(\d+)$")


def parse_family(text: str) -> FamilySpec:
    """
    Resolve a built-in name (``01``, ``02``, ``012``, ``001``, ``0p1:<p>``) or a compact
    spec such as ``d1:1,d2:0;tail=1`` with an optional ``;stair=<slope>:<offset>``.
    """
    text = text.strip()
    if text in BUILTIN_FAMILIES:
        return BUILTIN_FAMILIES[text]
    if text.startswith("0p1:"):
        try:
            return f0p1(int(text[4:]))
        except ValueError as exc:
            raise FamilyError(f"invalid 0p1 family {text!r}") from exc

    sections = [chunk.strip() for chunk in text.split(";") if chunk.strip()]
    if not sections:
        raise FamilyError("empty family spec")
    constraints: list[Condition] = []
    for item in sections[0].split(","):
        match = _CUSTOM_RE.match(item.strip())
        if not match:
            raise FamilyError(f"cannot parse constraint {item!r} in family spec {text!r}")
        constraints.append((int(match.group(1)), int(match.group(2))))

    tail_min = 1
    stair: tuple[int, int] | None = None
    for option in sections[1:]:
        key, _, value = option.partition("=")
        if key not in ("tail", "stair"):
            raise FamilyError(f"unknown option {key!r} in family spec {text!r}")
        try:
            if key == "tail":
                tail_min = int(value)
            else:
                slope, _, offset = value.partition(":")
                stair = (int(slope), int(offset))
        except ValueError as exc:
            raise FamilyError(f"invalid value in option {option!r}") from exc
    return make_family(text, constraints, tail_min, stair)


class _Search:
    """Backward depth-first enumeration of one (constraints, tail, length) shape."""

    def __init__(self, constraints: tuple[Condition, ...], tail_min: int, length: int) -> None:
        self.constraints = constraints
        self.tail_min = tail_min
        self.length = length
        self.reach = max(s for s, _ in constraints)
        self._fill_cache: dict[tuple[int, Parts], int] = {}

    def _bound(self, pos: int, window: Parts | list[int]) -> int:
        # window[k] holds the part at position pos + 1 + k
        lb = self.tail_min if pos == self.length - 1 else 0
        for s, d in self.constraints:
            if s <= len(window):
                lb = max(lb, window[s - 1] - d)
        return lb

    def min_fill(self, pos: int, window: Parts) -> int:
        """Least weight that positions 0..pos can carry given the parts after them."""
        key = (pos, window)
        cached = self._fill_cache.get(key)
        if cached is not None:
            return cached
        total = 0
        current = list(window)
        for p in range(pos, -1, -1):
            lb = self._bound(p, current)
            total += lb
            current = [lb] + current[: self.reach - 1]
        self._fill_cache[key] = total
        return total

    def min_weight(self) -> int:
        return self.min_fill(self.length - 1, ())

    def run(self, weight: int) -> list[Parts]:
        if self.length == 0:
            return [()] if weight == 0 else []
        parts = [0] * self.length
        found: list[Parts] = []

        def place(pos: int, remaining: int) -> None:
            window = parts[pos + 1 : pos + 1 + self.reach]
            lb = self._bound(pos, window)
            if pos == 0:
                if remaining >= lb:
                    parts[0] = remaining
                    found.append(tuple(parts))
                return
            value = lb
            while value <= remaining:
                parts[pos] = value
                if value + self.min_fill(pos - 1, tuple(parts[pos : pos + self.reach])) > remaining:
                    break
                place(pos - 1, remaining - value)
                value += 1

        place(self.length - 1, weight)
        found.sort()
        return found


def is_valid(spec: FamilySpec, parts: Parts) -> bool:
    if not parts:
        return False
    if any(p < 0 for p in parts) or parts[-1] < spec.tail_min:
        return False
    m = len(parts)
    return all(parts[j] >= parts[j + s] - d for s, d in spec.constraints for j in range(m - s))


def max_length(spec: FamilySpec, weight: int) -> int:
    """Largest length at which some partition of the family has the given weight."""
    if weight < 0:
        raise FamilyError(f"weight must be non-negative, got {weight}")
    best = 0
    # parts at positions m, m - s0, m - 2 s0, ... are all >= 1
    for length in range(1, spec.zero_slack_distance * weight + 1):
        if _Search(spec.constraints, spec.tail_min, length).min_weight() <= weight:
            best = length
    return best


def enumerate_partitions(spec: FamilySpec, weight: int, length: int | None = None) -> list[Parts]:
    """
    All partitions of the family with the given weight, in lexicographic order.

    Without ``length`` every length from 1 to ``max_length`` is included; weight 0
    then yields the empty partition alone.
    """
    if weight < 0:
        raise FamilyError(f"weight must be non-negative, got {weight}")
    if length is not None:
        if length < 0:
            raise FamilyError(f"length must be non-negative, got {length}")
        result = _Search(spec.constraints, spec.tail_min, length).run(weight)
    elif weight == 0:
        result = [()]
    else:
        result = []
        for m in range(1, max_length(spec, weight) + 1):
            result.extend(_Search(spec.constraints, spec.tail_min, m).run(weight))
        result.sort()
    logger.debug("family %s weight %d length %s: %d partitions", spec.name, weight, length, len(result))
    return result


def length_profile(spec: FamilySpec, weight: int) -> dict[int, int]:
    """Number of partitions of the given weight per length."""
    profile: dict[int, int] = {}
    for parts in enumerate_partitions(spec, weight):
        profile[len(parts)] = profile.get(len(parts), 0) + 1
    return dict(sorted(profile.items()))


def staircase_map(spec: FamilySpec, parts: Parts) -> Parts:
    """Add the family's staircase, turning a jagged partition into an ordinary one."""
    if not is_valid(spec, parts):
        raise FamilyError(f"{parts} is not a partition of family {spec.name!r}")
    m = len(parts)
    return tuple(n + spec.step(m, i) for i, n in enumerate(parts, start=1))


def enumerate_restricted(conditions: list[Condition] | tuple[Condition, ...], weight: int, length: int) -> list[Parts]:
    """
    Weakly decreasing sequences of positive parts with ``lambda_i >= lambda_{i+s} + g``
    for every ``(s, g)`` in ``conditions``.
    """
    if weight < 0 or length < 0:
        raise FamilyError("weight and length must be non-negative")
    gaps: dict[int, int] = {1: 0}
    for s, g in conditions:
        if s < 1:
            raise FamilyError(f"condition distance must be >= 1, got {s}")
        gaps[s] = max(gaps.get(s, g), g)
    constraints = tuple(sorted((s, -g) for s, g in gaps.items()))
    if length == 0:
        return [()] if weight == 0 else []
    return _Search(constraints, 1, length).run(weight)


def min_weight(spec: FamilySpec, length: int) -> int:
    """Weight of the lightest partition of the family with the given length."""
    if length < 1:
        raise FamilyError(f"length must be >= 1, got {length}")
    return _Search(spec.constraints, spec.tail_min, length).min_weight()


def count_partitions(spec: FamilySpec, weight: int, length: int) -> int:
    if weight < 0 or length < 0:
        raise FamilyError("weight and length must be non-negative")
    return len(_Search(spec.constraints, spec.tail_min, length).run(weight))


def partitions_report(spec: FamilySpec, weight: int, length: int | None = None, with_staircase: bool = False) -> PartitionsResponse:
    parts = enumerate_partitions(spec, weight, length)
    by_length: dict[int, int] = {}
    for p in parts:
        by_length[len(p)] = by_length.get(len(p), 0) + 1
    return PartitionsResponse(
        family=FamilyInfo(name=spec.name, spec=spec.describe()),
        weight=weight,
        length=length,
        count=len(parts),
        by_length=dict(sorted(by_length.items())),
        partitions=[list(p) for p in parts],
        staircase=[list(staircase_map(spec, p)) if p else [] for p in parts] if with_staircase else None,
    )


def max_length_report(spec: FamilySpec, weight: int) -> MaxLengthResponse:
    return MaxLengthResponse(
        family=FamilyInfo(name=spec.name, spec=spec.describe()),
        weight=weight,
        max_length=max_length(spec, weight),
    )
