"""Builders for the two reference systems.

``build_example11`` assembles, from m and distinct primes p_1..p_r with
r >= 2m-1, the m-cover {0(p_1),...,0(p_r), a_1(N),...,a_n(N)} over
N = p_1...p_r that cannot be split into two covers.  The a_t list the
residues mod N missed by the auxiliary system A_* of classes
(Π_{s∈I} p_s)(N) over |I| >= m, each repeated m times.

``check_unsplittable`` certifies unsplittability by the witness argument:
for every bipartition of the prime indices, the product of the larger
side's primes is covered by A_* (so it avoids every a_t(N)) and is
divisible by no prime of the smaller side.  That defeats every extension
of the partition to the full class list, whichever side each a_t(N) joins.

``sharpness_example`` returns m copies of 0(1), whose spectrum meets the
2^m fiber bound with equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .covers import CoverSystem, ResidueClass, covering_multiplicity
from .errors import ConstructionError, InternalInvariantError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Example11Spec:
    """Parameters: multiplicity m and distinct primes p_1..p_r, r >= 2m-1."""

    m: int
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "primes", tuple(self.primes))
        if self.m < 1:
            raise ConstructionError(f"m must be at least 1, got {self.m}")
        if len(set(self.primes)) != len(self.primes):
            raise ConstructionError("primes must be pairwise distinct")
        for p in self.primes:
            if not _is_prime(p):
                raise ConstructionError(f"{p} is not prime")
        if len(self.primes) < 2 * self.m - 1:
            raise ConstructionError(
                f"need at least 2m-1 = {2 * self.m - 1} primes, got {len(self.primes)}"
            )

    @property
    def r(self) -> int:
        return len(self.primes)

    @property
    def modulus(self) -> int:
        return prod(self.primes)


@dataclass(frozen=True)
class Example11Output:
    """The built system, the repeated residue list, and the residues mod N
    covered by the auxiliary prime-product system."""

    params: Example11Spec
    system: CoverSystem
    a_list: tuple[int, ...]
    star_covered: frozenset[int]


def build_example11(spec: Example11Spec) -> Example11Output:
    """Build the unsplittable m-cover for the given parameters.

    The covering multiplicity of the result is asserted to be at least m
    before returning.
    """
    big_n = spec.modulus
    # Membership in the auxiliary system: x lies in (Π_{s∈I} p_s)(N) for some
    # I of size >= m iff some size-m prime product divides x.
    star: set[int] = set()
    for subset in combinations(spec.primes, spec.m):
        p = prod(subset)
        star.update(range(0, big_n, p))
    a_list = tuple(a for a in range(big_n) if a not in star for _ in range(spec.m))
    classes = tuple(ResidueClass(0, p) for p in spec.primes) + tuple(
        ResidueClass(a, big_n) for a in a_list
    )
    system = CoverSystem(classes)
    if covering_multiplicity(system) < spec.m:
        raise InternalInvariantError(
            f"constructed system has multiplicity below {spec.m}; construction bug"
        )
    return Example11Output(
        params=spec, system=system, a_list=a_list, star_covered=frozenset(star)
    )


@dataclass(frozen=True)
class PartitionWitness:
    """One certified prime-index bipartition (indices 1-based) and its witness."""

    side1: tuple[int, ...]
    side2: tuple[int, ...]
    witness: int
    certified: bool


@dataclass(frozen=True)
class UnsplittabilityCertificate:
    passed: bool
    entries: tuple[PartitionWitness, ...]

    def failures(self) -> tuple[PartitionWitness, ...]:
        return tuple(e for e in self.entries if not e.certified)


def check_unsplittable(out: Example11Output) -> UnsplittabilityCertificate:
    """Certify, over all 2^r prime-index bipartitions, the witness argument.

    Each subset of {1..r} is oriented so side1 is the smaller side (ties put
    index 1's side first); the witness w = product of side2's primes must
    land in the star-covered residues mod N and be divisible by no side1
    prime.  A certified entry rules out every split of the full system that
    puts side1's prime classes together, however the a_t(N) classes are
    divided, so PASS means no bipartition of the full class list yields two
    covers.
    """
    spec = out.params
    primes = spec.primes
    r = spec.r
    big_n = spec.modulus
    entries = []
    all_ok = True
    for mask in range(2**r):
        chosen = tuple(i + 1 for i in range(r) if mask >> i & 1)
        rest = tuple(i + 1 for i in range(r) if not mask >> i & 1)
        if len(chosen) < len(rest):
            side1, side2 = chosen, rest
        elif len(chosen) > len(rest):
            side1, side2 = rest, chosen
        elif 1 in chosen:
            side1, side2 = chosen, rest
        else:
            side1, side2 = rest, chosen
        witness = prod(primes[i - 1] for i in side2)
        ok = (
            len(side2) >= spec.m
            and witness % big_n in out.star_covered
            and all(witness % primes[i - 1] != 0 for i in side1)
        )
        entries.append(PartitionWitness(side1, side2, witness, ok))
        all_ok = all_ok and ok
    return UnsplittabilityCertificate(passed=all_ok, entries=tuple(entries))


def find_cover_split(sys: CoverSystem) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Exhaustively search the 2^k bipartitions of the full class list for a
    split into two covers; returns the two 1-based index sets, or None.

    Companion brute-force check for :func:`check_unsplittable`, feasible
    only for small k.
    """
    k = sys.k
    for mask in range(1, 2 ** (k - 1) if k else 0):
        side1 = tuple(i + 1 for i in range(k) if mask >> i & 1)
        side2 = tuple(i + 1 for i in range(k) if not mask >> i & 1)
        sub1 = CoverSystem(tuple(sys.classes[i - 1] for i in side1))
        sub2 = CoverSystem(tuple(sys.classes[i - 1] for i in side2))
        if covering_multiplicity(sub1) >= 1 and covering_multiplicity(sub2) >= 1:
            return side1, side2
    return None


def sharpness_example(m: int) -> CoverSystem:
    """m copies of 0(1) with unit weights; the spectrum is {0: 2^m} exactly."""
    if m < 1:
        raise ConstructionError(f"m must be at least 1, got {m}")
    return CoverSystem(tuple(ResidueClass(0, 1) for _ in range(m)))
