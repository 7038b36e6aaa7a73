"""Residue classes over Z and covering-function machinery.

A system is a finite ordered list of classes ``a(n)`` = {x : x ≡ a (mod n)},
optionally carrying one integer weight per class.  The covering function
w(x) counts the classes containing x; its minimum over one lcm period is
the covering multiplicity, the largest m for which the system is an m-cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import lcm_all


@dataclass(frozen=True)
class ResidueClass:
    """The arithmetic progression a + nZ, with a normalized into [0, n)."""

    a: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)

    def contains(self, x: int) -> bool:
        return (x - self.a) % self.n == 0

    def __str__(self) -> str:
        return f"{self.a}({self.n})"


@dataclass(frozen=True)
class CoverSystem:
    """Ordered residue classes with optional per-class integer weights."""

    classes: tuple[ResidueClass, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(self.classes))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            if len(self.weights) != len(self.classes):
                raise ValueError("weights length must match class count")

    @classmethod
    def from_pairs(
        cls, pairs: list[tuple[int, int]], weights: list[int] | None = None
    ) -> CoverSystem:
        return cls(
            tuple(ResidueClass(a, n) for a, n in pairs),
            tuple(weights) if weights is not None else None,
        )

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.n for c in self.classes)

    def effective_weights(self) -> tuple[int, ...]:
        """Weights with the all-ones default applied."""
        return self.weights if self.weights is not None else (1,) * self.k

    def period(self) -> int:
        """lcm of the moduli (1 for the empty system)."""
        return lcm_all(self.moduli)

    def __str__(self) -> str:
        return "{" + ", ".join(str(c) for c in self.classes) + "}"


def covering_function(sys: CoverSystem, x: int) -> int:
    """Number of classes of the system containing x."""
    return sum(1 for c in sys.classes if c.contains(x))


def covering_multiplicity(sys: CoverSystem) -> int:
    """min over one lcm period of the covering function; 0 for the empty system.

    The system is an m-cover exactly for m up to this value.
    """
    if sys.k == 0:
        return 0
    best = sys.k
    for x in range(sys.period()):
        w = covering_function(sys, x)
        if w < best:
            best = w
            if best == 0:
                break
    return best


def is_periodic_mod(sys: CoverSystem, q: int) -> bool:
    """True iff the covering function satisfies w(x) = w(x + q) for all x."""
    if q < 1:
        raise ValueError(f"period candidate must be positive, got {q}")
    period = sys.period()
    return all(
        covering_function(sys, x) == covering_function(sys, x + q) for x in range(period)
    )


def drop_class(sys: CoverSystem, t: int) -> CoverSystem:
    """System with class t removed (t is 1-based); the original is unchanged."""
    if not 1 <= t <= sys.k:
        raise IndexError(f"class index {t} out of range 1..{sys.k}")
    classes = sys.classes[: t - 1] + sys.classes[t:]
    weights = None
    if sys.weights is not None:
        weights = sys.weights[: t - 1] + sys.weights[t:]
    return CoverSystem(classes, weights)
