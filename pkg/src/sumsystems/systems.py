"""Sum systems, centred sum systems, and sum-and-distance systems.

An m-part sum system for N consists of finite sets A_1, ..., A_m of
non-negative integers whose Minkowski sum hits each of 0..N-1 exactly once.
Centring shifts each component to be symmetric about 0; the shifted values
are half-integers whenever max A_j is odd, so centred components are stored
as doubled integers (2a - max A_j), which keeps everything exact.

Construction from a joint ordered factorisation follows the factor-by-factor
blow-up: entry l with partial product F(l) contributes the progression
F(l) * {0, ..., f_l - 1} to its part's component.  Verification performs the
full Minkowski fold and never trusts construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .jof import infer_parts

Verdict = tuple[bool, "str | None"]


def _as_component_tuples(components) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(c) for c in components)


def _check_sorted_strict(comp: tuple[int, ...]) -> None:
    if not comp:
        raise ValueError("components must be non-empty")
    prev = comp[0]
    for v in comp[1:]:
        if v <= prev:
            raise ValueError("component values must be strictly ascending")
        prev = v


@dataclass(frozen=True)
class SumSystem:
    """Components of a (candidate) sum system, each sorted ascending."""

    components: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        comps = _as_component_tuples(self.components)
        if not comps:
            raise ValueError("a sum system needs at least one component")
        for comp in comps:
            _check_sorted_strict(comp)
            if comp[0] < 0:
                raise ValueError("sum system values must be non-negative")
        object.__setattr__(self, "components", comps)

    @property
    def N(self) -> int:
        return prod(len(c) for c in self.components)

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)


@dataclass(frozen=True)
class CentredSumSystem:
    """Centred components stored as doubled integers (2a - max A_j).

    Each stored component is symmetric about 0 and all of its values share
    one parity; odd stored values mean the true component is half-integral.
    """

    components: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        comps = _as_component_tuples(self.components)
        if not comps:
            raise ValueError("a centred sum system needs at least one component")
        for comp in comps:
            _check_sorted_strict(comp)
            k = len(comp)
            for i in range(k // 2 + 1):
                if comp[i] + comp[k - 1 - i] != 0:
                    raise ValueError("centred components must be symmetric about 0")
            parity = comp[0] & 1
            for v in comp:
                if (v & 1) != parity:
                    raise ValueError(
                        "values within a centred component must share parity"
                    )
        object.__setattr__(self, "components", comps)

    @property
    def N(self) -> int:
        return prod(len(c) for c in self.components)

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    @property
    def half_integer(self) -> tuple[bool, ...]:
        """Per component: True when the true values are half-integers."""
        return tuple(bool(c[0] & 1) for c in self.components)


@dataclass(frozen=True)
class SumAndDistanceSystem:
    """Positive halves of a centred system, doubled, with parity classes.

    Parts in even_parts have even cardinality in the originating system
    (n_j = 2|B_j|), parts in odd_parts have odd cardinality
    (n_j = 2|B_j| + 1).  Indices are 1-based.
    """

    N: int
    components: tuple[tuple[int, ...], ...]
    even_parts: tuple[int, ...]
    odd_parts: tuple[int, ...]

    def __post_init__(self) -> None:
        comps = _as_component_tuples(self.components)
        for comp in comps:
            _check_sorted_strict(comp)
            if comp[0] <= 0:
                raise ValueError("sum-and-distance values must be positive")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "even_parts", tuple(self.even_parts))
        object.__setattr__(self, "odd_parts", tuple(self.odd_parts))
        m = len(comps)
        if sorted(self.even_parts + self.odd_parts) != list(range(1, m + 1)):
            raise ValueError("parity classes must partition parts 1..m")
        n = 1
        for j, comp in enumerate(comps, start=1):
            n *= 2 * len(comp) + (1 if j in self.odd_parts else 0)
        if n != self.N:
            raise ValueError("cardinalities are inconsistent with N")


def build_sum_system(jof) -> SumSystem:
    """Sum system of a JOF: part j collects F(l) * {0..f_l - 1} over its
    entries, Minkowski-added.  Components come out sorted.
    """
    jof = tuple(tuple(entry) for entry in jof)
    parts = infer_parts(jof)
    comps: list[list[int]] = [[0] for _ in parts]
    partial = 1
    for part, factor in jof:
        base = comps[part - 1]
        # blocks for successive multiples of the partial product stay disjoint
        # because the values built so far all lie below it
        comps[part - 1] = [a + partial * k for k in range(factor) for a in base]
        partial *= factor
    return SumSystem(tuple(tuple(c) for c in comps))


def build_centred(jof) -> CentredSumSystem:
    """Centred system of a JOF, built directly on doubled values.

    Entry l contributes F(l) * (2k - (f_l - 1)) for k in 0..f_l - 1, the
    doubled centred progression.
    """
    jof = tuple(tuple(entry) for entry in jof)
    parts = infer_parts(jof)
    comps: list[list[int]] = [[0] for _ in parts]
    partial = 1
    for part, factor in jof:
        base = comps[part - 1]
        comps[part - 1] = [
            a + partial * (2 * k - (factor - 1)) for k in range(factor) for a in base
        ]
        partial *= factor
    return CentredSumSystem(tuple(tuple(c) for c in comps))


def centre(system: SumSystem) -> CentredSumSystem:
    """Shift every component to be symmetric about 0 (doubled storage)."""
    comps = []
    for comp in system.components:
        top = comp[-1]
        comps.append(tuple(2 * a - top for a in comp))
    return CentredSumSystem(tuple(comps))


def to_sum_and_distance(centred: CentredSumSystem) -> SumAndDistanceSystem:
    """Keep the positive values of each centred component (still doubled)."""
    comps = []
    even_parts = []
    odd_parts = []
    for j, comp in enumerate(centred.components, start=1):
        positives = tuple(v for v in comp if v > 0)
        if not positives:
            raise ValueError(f"component {j} has no positive values")
        comps.append(positives)
        if len(comp) % 2 == 0:
            even_parts.append(j)
        else:
            odd_parts.append(j)
    return SumAndDistanceSystem(
        N=centred.N,
        components=tuple(comps),
        even_parts=tuple(even_parts),
        odd_parts=tuple(odd_parts),
    )


def minkowski_sum(a, b) -> tuple[tuple[int, ...], bool]:
    """Set of pairwise sums and whether every sum was distinct."""
    a = tuple(a)
    b = tuple(b)
    sums = {x + y for x in a for y in b}
    return tuple(sorted(sums)), len(sums) == len(a) * len(b)


def verify_sum_system(system: SumSystem) -> Verdict:
    """Full check that the components form a sum system.

    Each component must contain 0, be palindromic (A = max A - A), and the
    Minkowski fold must reach 0..N-1 with no collision at any stage.
    """
    for j, comp in enumerate(system.components, start=1):
        if len(comp) < 2:
            return False, f"component {j} has fewer than 2 values"
        if comp[0] != 0:
            return False, f"component {j} does not contain 0"
        top = comp[-1]
        k = len(comp)
        if any(comp[i] + comp[k - 1 - i] != top for i in range(k // 2 + 1)):
            return False, f"component {j} is not palindromic"
    n = system.N
    acc = {0}
    for j, comp in enumerate(system.components, start=1):
        new = {x + y for x in acc for y in comp}
        if len(new) != len(acc) * len(comp):
            return False, f"sums collide when component {j} is added"
        acc = new
    if acc != set(range(n)):
        return False, f"sums do not cover 0..{n - 1}"
    return True, None


def verify_centred(centred: CentredSumSystem) -> Verdict:
    """Full check on doubled values: fold must hit 2k - (N - 1), k in 0..N-1."""
    for j, comp in enumerate(centred.components, start=1):
        if len(comp) < 2:
            return False, f"component {j} has fewer than 2 values"
        k = len(comp)
        if any(comp[i] + comp[k - 1 - i] != 0 for i in range(k // 2 + 1)):
            return False, f"component {j} is not symmetric about 0"
        parity = comp[0] & 1
        if any((v & 1) != parity for v in comp):
            return False, f"component {j} mixes parities"
    n = centred.N
    acc = {0}
    for j, comp in enumerate(centred.components, start=1):
        new = {x + y for x in acc for y in comp}
        if len(new) != len(acc) * len(comp):
            return False, f"sums collide when component {j} is added"
        acc = new
    if acc != set(range(-(n - 1), n, 2)):
        return False, "doubled sums do not cover -(N-1)..N-1 in steps of 2"
    return True, None


def sigma_a(system: SumSystem) -> int:
    """Sum of all N represented values, via components:
    sum over j of (N / n_j) * sum(A_j).  Equals N(N-1)/2 for genuine systems.
    """
    n = system.N
    return sum((n // len(comp)) * sum(comp) for comp in system.components)


def tau_c(centred: CentredSumSystem) -> Fraction:
    """Sum of squares of all represented centred values, exactly.

    Computed on doubled values then divided by 4; equals N(N^2 - 1)/12 for
    genuine systems (denominator 1 or 2 once reduced).
    """
    n = centred.N
    doubled = sum(
        (n // len(comp)) * sum(v * v for v in comp) for comp in centred.components
    )
    return Fraction(doubled, 4)


def system_to_json(system) -> dict:
    """JSON document for a system; centred variants set doubled = true."""
    if isinstance(system, SumSystem):
        return {
            "N": system.N,
            "components": [list(c) for c in system.components],
            "doubled": False,
        }
    if isinstance(system, CentredSumSystem):
        return {
            "N": system.N,
            "components": [list(c) for c in system.components],
            "doubled": True,
        }
    if isinstance(system, SumAndDistanceSystem):
        return {
            "N": system.N,
            "components": [list(c) for c in system.components],
            "doubled": True,
            "even_parts": list(system.even_parts),
            "odd_parts": list(system.odd_parts),
        }
    raise TypeError(f"cannot serialise {type(system).__name__}")


def system_from_json(doc) -> "SumSystem | CentredSumSystem":
    """Parse a system document, checking shape and the stated N.

    Sum-and-distance documents (those with parity-class keys) are not
    loadable; they describe half a system.
    """
    if not isinstance(doc, dict):
        raise ValueError("system document must be a JSON object")
    if "even_parts" in doc or "odd_parts" in doc:
        raise ValueError("sum-and-distance documents cannot be loaded back")
    for key in ("N", "components", "doubled"):
        if key not in doc:
            raise ValueError(f"system document lacks {key!r}")
    n, comps, doubled = doc["N"], doc["components"], doc["doubled"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("N must be an integer")
    if not isinstance(doubled, bool):
        raise ValueError("doubled must be a boolean")
    if not isinstance(comps, list) or not all(isinstance(c, list) for c in comps):
        raise ValueError("components must be a list of lists")
    for c in comps:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in c):
            raise ValueError("component values must be integers")
    system = (
        CentredSumSystem(_as_component_tuples(comps))
        if doubled
        else SumSystem(_as_component_tuples(comps))
    )
    if system.N != n:
        raise ValueError(
            f"stated N = {n} but component sizes multiply to {system.N}"
        )
    return system
