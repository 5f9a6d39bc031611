"""Weighted lattice-path counting by dynamic programming.

This module knows nothing about generating functions; it is the
independent oracle that Riordan-array constructions are checked against.

Counts are finite because every step must strictly increase an integer
linear functional (a *potential*) alpha*n + beta*k.  All points on a path
to (n, k) then have potential between 0 and that of (n, k), which bounds
the part of the lattice the DP has to visit even when steps go down or
backwards.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import NoPotential, OrderExceeded
from .matrix import IntMatrix
from .series import Series

REGIONS = ("triangle", "quadrant", "halfplane", "plane")
LEVEL_RULES = ("end", "start")
POTENTIAL_BOX = 8
MAX_POINTS = 2_000_000


@dataclass(frozen=True)
class Step:
    dx: int
    dy: int
    weight: int = 1

    def __post_init__(self):
        if (self.dx, self.dy) == (0, 0):
            raise ValueError("(0,0) is not a valid step")


_STEP_RE = re.compile(r"(?:\(?\s*(-?\d+)\s*\)?\s*\*\s*)?\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_steps(text: str) -> tuple[Step, ...]:
    """Read step sets written like ``{(1,0), 2*(1,1), (-1)*(2,1)}``."""
    steps = []
    for m in _STEP_RE.finditer(text):
        w, dx, dy = m.groups()
        steps.append(Step(int(dx), int(dy), int(w) if w is not None else 1))
    if not steps:
        raise ValueError(f"no steps found in {text!r}")
    return tuple(steps)


def _as_steps(steps) -> tuple[Step, ...]:
    if isinstance(steps, str):
        return parse_steps(steps)
    out = []
    for s in steps:
        if isinstance(s, Step):
            out.append(s)
        else:
            out.append(Step(*s))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class StepSpec:
    """A weighted step multiset, a region, and optional per-level step sets.

    ``levels`` maps a y-level to the step list used there; unmapped levels
    use ``steps``.  ``level_rule`` says which level a step is charged to:
    ``"end"`` (the level it arrives at) or ``"start"`` (the level it leaves).
    """

    steps: tuple
    region: str = "triangle"
    levels: Mapping[int, tuple] = field(default_factory=dict)
    level_rule: str = "end"

    def __post_init__(self):
        object.__setattr__(self, "steps", _as_steps(self.steps))
        object.__setattr__(self, "levels", {int(k): _as_steps(v) for k, v in self.levels.items()})
        if not self.steps and not self.levels:
            raise ValueError("a step specification needs at least one step")
        if self.region not in REGIONS:
            raise ValueError(f"region must be one of {REGIONS}")
        if self.level_rule not in LEVEL_RULES:
            raise ValueError(f"level_rule must be one of {LEVEL_RULES}")

    def __eq__(self, other):
        if not isinstance(other, StepSpec):
            return NotImplemented
        return (self.steps, self.region, self.levels, self.level_rule) == (
            other.steps, other.region, other.levels, other.level_rule)

    def all_steps(self) -> list[Step]:
        out = list(self.steps)
        for v in self.levels.values():
            out.extend(v)
        return out

    def weights_at(self, level: int) -> dict[tuple[int, int], int]:
        table: dict[tuple[int, int], int] = defaultdict(int)
        for s in self.levels.get(level, self.steps):
            table[(s.dx, s.dy)] += s.weight
        return dict(table)

    def step_polynomial(self) -> dict[tuple[int, int], int]:
        """sum of weight * x^dx y^dy over the default step set, as {(dx, dy): weight}."""
        return self.weights_at(None)

    def to_json(self) -> str:
        def enc(steps):
            return [{"dx": s.dx, "dy": s.dy, "w": s.weight} for s in steps]

        data = {"steps": enc(self.steps), "region": self.region}
        if self.levels:
            data["levels"] = {str(k): enc(v) for k, v in sorted(self.levels.items())}
        if self.level_rule != "end":
            data["level_rule"] = self.level_rule
        return json.dumps(data)

    @classmethod
    def from_json(cls, text_or_obj) -> "StepSpec":
        data = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj

        def dec(items):
            return tuple(Step(int(d["dx"]), int(d["dy"]), int(d.get("w", 1))) for d in items)

        return cls(dec(data.get("steps", [])), data.get("region", "triangle"),
                   {int(k): dec(v) for k, v in data.get("levels", {}).items()},
                   data.get("level_rule", "end"))


@dataclass(frozen=True)
class Potential:
    alpha: int
    beta: int

    def __call__(self, n: int, k: int) -> int:
        return self.alpha * n + self.beta * k


def find_potential(spec: StepSpec | Iterable[Step]) -> Potential:
    """Smallest (|alpha|+|beta|, then alpha, then beta) pair positive on every step."""
    steps = spec.all_steps() if isinstance(spec, StepSpec) else _as_steps(spec)
    box = range(-POTENTIAL_BOX, POTENTIAL_BOX + 1)
    candidates = sorted(product(box, box), key=lambda ab: (abs(ab[0]) + abs(ab[1]), ab[0], ab[1]))
    for a, b in candidates:
        if all(a * s.dx + b * s.dy >= 1 for s in steps):
            return Potential(a, b)
    raise NoPotential("no integer functional in the search box increases along every step; "
                      "path counts may be infinite")


def _in_region(region: str, n: int, k: int) -> bool:
    if region == "triangle":
        return 0 <= k <= n
    if region == "quadrant":
        return n >= 0 and k >= 0
    if region == "halfplane":
        return k >= 0
    return True


def walk_counts(spec: StepSpec, targets: Iterable[tuple[int, int]],
                potential: Potential | None = None) -> dict[tuple[int, int], int]:
    """Weighted path counts from (0, 0) to every reachable point needed for ``targets``.

    The returned dict covers all region points reachable with potential at
    most the largest potential among the targets; points absent from it have
    count zero.
    """
    pot = potential or find_potential(spec)
    for s in spec.all_steps():
        if pot.alpha * s.dx + pot.beta * s.dy < 1:
            raise NoPotential(f"potential {pot} does not increase along {s}")
    targets = list(targets)
    if not targets:
        return {}
    limit = max(pot(n, k) for n, k in targets)
    region = spec.region
    start_rule = spec.level_rule == "start"
    cache: dict[int, dict] = {}

    def table(level):
        if level not in cache:
            cache[level] = spec.weights_at(level)
        return cache[level]

    all_moves = {(s.dx, s.dy) for s in spec.all_steps()}

    def moves_from(n, k):
        if start_rule:
            for (dx, dy), w in table(k).items():
                yield dx, dy, w
        else:
            for dx, dy in all_moves:
                w = table(k + dy).get((dx, dy), 0)
                if w:
                    yield dx, dy, w

    # forward sweep by increasing potential; every move raises it by >= 1
    buckets: dict[int, list] = defaultdict(list)
    counts: dict[tuple[int, int], int] = {(0, 0): 1}
    buckets[0].append((0, 0))
    for level in range(0, limit + 1):
        for p in buckets.pop(level, ()):
            c = counts[p]
            n, k = p
            for dx, dy, w in moves_from(n, k):
                q = (n + dx, k + dy)
                if not _in_region(region, *q):
                    continue
                phi = pot(*q)
                if phi > limit:
                    continue
                if q not in counts:
                    counts[q] = 0
                    buckets[phi].append(q)
                    if len(counts) > MAX_POINTS:
                        raise OrderExceeded("the DP grid grew past its size limit")
                counts[q] += w * c
    return counts


def count_paths(spec: StepSpec, N: int, potential: Potential | None = None) -> IntMatrix:
    """N x N matrix of weighted path counts t(n, k), 0 <= n, k < N."""
    if spec.region == "triangle":
        window = [(n, k) for n in range(N) for k in range(n + 1)]
    else:
        window = [(n, k) for n in range(N) for k in range(N)]
    counts = walk_counts(spec, window, potential)
    shape = "lower" if spec.region == "triangle" else None
    return IntMatrix([[counts.get((n, k), 0) if _in_region(spec.region, n, k) else 0 for k in range(N)]
                      for n in range(N)], shape)


def left_factors(spec: StepSpec, N: int) -> list[int]:
    return count_paths(spec, N).row_sums()


# Laurent expansion in y


def laurent_walks(spec: StepSpec, order_x: int, y_low: int, y_high: int) -> dict[int, Series]:
    """Coefficients L_k(x), y_low <= k <= y_high, of 1/(1 - sum w x^dx y^dy).

    Each L_k is the generating function (in x) of unrestricted walks ending
    at height k, truncated to ``order_x``.
    """
    plane = StepSpec(spec.steps, "plane")
    window = [(n, k) for n in range(order_x) for k in range(y_low, y_high + 1)]
    counts = walk_counts(plane, window)
    return {k: Series([counts.get((n, k), 0) for n in range(order_x)]) for k in range(y_low, y_high + 1)}


def verify_factorization(target_columns, spec: StepSpec, order_x: int, order_y: int,
                         prefactor: Mapping[int, Series] | None = None, y_low: int = -8) -> bool:
    """Check that prefactor * 1/(1 - P(x, y)) has no negative y-powers in
    [y_low, -1] and that its y^k coefficient equals column k of the array
    for 0 <= k <= order_y.

    ``target_columns`` is either a Riordan array (anything with ``g`` and
    ``f`` series) or a callable k -> Series.  ``prefactor`` maps y-powers to
    x-series; when omitted it is taken as 1 - h(x)/y with h = L_{-1}/L_0,
    the only choice that clears the y^-1 coefficient.
    """
    if spec.levels:
        raise ValueError("factorization checks need a level-independent step set")
    if hasattr(target_columns, "g"):
        g = target_columns.g.truncate(order_x)
        f = target_columns.f.truncate(order_x)
        cols = {}

        def column(k):
            if k not in cols:
                cols[k] = g if k == 0 else column(k - 1) * f
            return cols[k]
    else:
        column = target_columns

    if prefactor is None:
        lo = laurent_walks(spec, order_x, -1, 0)
        h = lo[-1] / lo[0]
        prefactor = {0: Series.one(order_x), -1: -h}
    pmin, pmax = min(prefactor), max(prefactor)
    L = laurent_walks(spec, order_x, y_low - pmax, order_y - pmin)
    for k in range(y_low, order_y + 1):
        acc = Series.zero(order_x)
        for j, pj in prefactor.items():
            acc = acc + pj.truncate(order_x) * L[k - j]
        expected = Series.zero(order_x) if k < 0 else column(k)
        if acc.truncate(order_x) != expected.truncate(order_x):
            return False
    return True


def steps_from_polynomial(alpha: Sequence[int], beta: Sequence[int], region: str = "triangle") -> StepSpec:
    """Step set sum_i alpha_i x^i + y x sum_j beta_j x^j, zero weights dropped."""
    steps = [Step(i + 1, 0, a) for i, a in enumerate(alpha) if a]
    steps += [Step(j + 1, 1, b) for j, b in enumerate(beta) if b]
    return StepSpec(tuple(steps), region)
