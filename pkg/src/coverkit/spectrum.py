"""Exact subset-sum fractional-part spectra and the bound checks built on them.

For a system of k classes with weights m_s, the spectrum counts, for every
fractional value θ = r/N over the common denominator N = lcm(moduli), the
subsets I of {1..k} whose weighted sum Σ_{s∈I} m_s/n_s has fractional part
θ.  All counts are exact integers; the fast path works entirely in integer
residues over Z/N, and an independent brute-force enumerator over exact
rationals serves as its oracle.

The verifiers check, against a system's exact covering multiplicity m:
  * theorem11   — every nonempty fiber has at least 2^m subsets;
  * corollary11 — the support has at most 2^(k-m) values;
  * corollary12 — with unit weights and the last class dropped, each value
    r/n_k is hit by at least 2^(m-1) subsets whose integer parts take at
    least m distinct values;
  * remark13    — for exact m-covers, the subsets of the first k-1 classes
    with exact sum n + r/n_k number at least C(m-1, n);
  * lemma21_witness — a class t whose removal keeps both θ and
    {θ - m_t/n_t} in the spectrum.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .covers import (
    CoverSystem,
    covering_function,
    covering_multiplicity,
    drop_class,
    is_periodic_mod,
)
from .errors import (
    BruteForceCapError,
    InternalInvariantError,
    NotInSpectrumError,
    ValidationError,
)
from .exact import Rational, frac_part
from .reports import FAIL, NOT_APPLICABLE, PASS, VerificationReport

#: Below this modulus the count vector is kept dense; above, as a map.
DENSE_LIMIT = 1 << 20

DEFAULT_BRUTE_CAP = 20


def brute_force_cap() -> int:
    """Subset-enumeration cap; override with COVERKIT_BRUTE_CAP."""
    raw = os.environ.get("COVERKIT_BRUTE_CAP")
    return int(raw) if raw else DEFAULT_BRUTE_CAP


@dataclass(frozen=True)
class SpectrumReport:
    """Counts of subsets per fractional-part residue over Z/denominator.

    ``counts`` holds only nonzero entries, keyed by residues in
    [0, denominator); the key set is exactly the spectrum support and the
    values sum to 2^k.
    """

    denominator: int
    k: int
    counts: dict[int, int]

    def count(self, r: int) -> int:
        return self.counts.get(r, 0)

    def residue_of(self, value: Rational) -> int | None:
        """Residue index of a fractional value, or None if not representable."""
        if not 0 <= value < 1:
            return None
        if self.denominator % value.denominator != 0:
            return None
        return value.numerator * (self.denominator // value.denominator)

    def count_value(self, value: Rational) -> int:
        r = self.residue_of(value)
        return 0 if r is None else self.count(r)

    def contains_value(self, value: Rational) -> bool:
        return self.count_value(value) > 0

    def support(self) -> list[int]:
        return sorted(self.counts)

    def support_values(self) -> list[Rational]:
        return [Fraction(r, self.denominator) for r in self.support()]

    def total(self) -> int:
        return sum(self.counts.values())

    def min_nonzero(self) -> tuple[int, int]:
        """(residue, count) with the smallest count, ties to smallest residue."""
        r = min(self.counts, key=lambda key: (self.counts[key], key))
        return r, self.counts[r]


@dataclass(frozen=True)
class ExtendedSpectrumReport:
    """Counts of subsets per exact scaled sum v = N * Σ_{s∈I} 1/n_s.

    Keys run over [0, k*N]; v // N is the integer part of the sum and
    v mod N its fractional residue, so marginalizing mod N recovers the
    plain spectrum of the included classes.
    """

    denominator: int
    k: int
    counts: dict[int, int]

    def count(self, v: int) -> int:
        return self.counts.get(v, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def marginal(self) -> dict[int, int]:
        """Counts per residue v mod N, summed over integer parts."""
        out: dict[int, int] = {}
        for v, c in self.counts.items():
            r = v % self.denominator
            out[r] = out.get(r, 0) + c
        return {r: out[r] for r in sorted(out)}

    def fiber(self, residue: int) -> dict[int, int]:
        """Counts per integer part among sums with v ≡ residue (mod N)."""
        out: dict[int, int] = {}
        for v, c in self.counts.items():
            if v % self.denominator == residue:
                out[v // self.denominator] = out.get(v // self.denominator, 0) + c
        return {f: out[f] for f in sorted(out)}


def _shifts(sys: CoverSystem, period: int) -> list[int]:
    weights = sys.effective_weights()
    return [(w * (period // c.n)) % period for w, c in zip(weights, sys.classes)]


def spectrum_dp(sys: CoverSystem) -> SpectrumReport:
    """Spectrum by iterated shift-add over residues mod N; O(kN) count-additions.

    Each class contributes the residue shift c_s = m_s * (N / n_s) mod N;
    negative weights reduce mod N.  Counts stay exact on every path: the
    dense vector uses machine integers only while the total mass 2^k
    provably fits, and arbitrary-precision integers otherwise.
    """
    period = sys.period()
    shifts = _shifts(sys, period)

    if period < DENSE_LIMIT:
        if sys.k <= 62:
            # Total mass 2^k <= 2^62, so every int64 addition is exact.
            arr = np.zeros(period, dtype=np.int64)
            arr[0] = 1
            for c in shifts:
                arr += np.roll(arr, c)
            counts = {r: int(arr[r]) for r in range(period) if arr[r]}
        else:
            vec: list[int] = [0] * period
            vec[0] = 1
            for c in shifts:
                if c == 0:
                    vec = [2 * x for x in vec]
                else:
                    rolled = vec[-c:] + vec[:-c]
                    vec = [x + y for x, y in zip(vec, rolled)]
            counts = {r: vec[r] for r in range(period) if vec[r]}
    else:
        dp: dict[int, int] = {0: 1}
        for c in shifts:
            new = dict(dp)
            for r, v in dp.items():
                r2 = (r + c) % period
                new[r2] = new.get(r2, 0) + v
            dp = new
        counts = {r: dp[r] for r in sorted(dp)}

    return SpectrumReport(denominator=period, k=sys.k, counts=counts)


def spectrum_bruteforce(sys: CoverSystem, cap: int | None = None) -> SpectrumReport:
    """Spectrum by explicit enumeration of all 2^k subsets with exact rational sums.

    Independent oracle for :func:`spectrum_dp`: sums are accumulated as
    reduced fractions and only mapped to residues at the leaves.  Refuses
    systems larger than the cap (default 20 classes).
    """
    if cap is None:
        cap = brute_force_cap()
    if sys.k > cap:
        raise BruteForceCapError(f"brute force over 2^{sys.k} subsets exceeds cap {cap}")
    period = sys.period()
    values = [Fraction(w, c.n) for w, c in zip(sys.effective_weights(), sys.classes)]
    counts: dict[int, int] = {}

    def walk(i: int, total: Fraction) -> None:
        if i == len(values):
            f = frac_part(total)
            r = f.numerator * (period // f.denominator)
            counts[r] = counts.get(r, 0) + 1
            return
        walk(i + 1, total)
        walk(i + 1, total + values[i])

    walk(0, Fraction(0))
    return SpectrumReport(
        denominator=period, k=sys.k, counts={r: counts[r] for r in sorted(counts)}
    )


def extended_spectrum(sys: CoverSystem, exclude: int | None = None) -> ExtendedSpectrumReport:
    """Counts over exact scaled sums v = N * Σ_{s∈I} 1/n_s, unit weights only.

    N is the lcm of all moduli of the system, including an excluded class's,
    so results line up with fractional values r/n_k of any member class.
    ``exclude`` (1-based) omits that class from the subsets.
    """
    if any(w != 1 for w in sys.effective_weights()):
        raise ValidationError("extended spectrum requires all weights equal to 1")
    if exclude is not None and not 1 <= exclude <= sys.k:
        raise IndexError(f"class index {exclude} out of range 1..{sys.k}")
    period = sys.period()
    included = [c for i, c in enumerate(sys.classes, start=1) if i != exclude]
    dp: dict[int, int] = {0: 1}
    for c in included:
        step = period // c.n
        new = dict(dp)
        for v, cnt in dp.items():
            new[v + step] = new.get(v + step, 0) + cnt
        dp = new
    return ExtendedSpectrumReport(
        denominator=period,
        k=len(included),
        counts={v: dp[v] for v in sorted(dp)},
    )


def verify_theorem11(sys: CoverSystem) -> VerificationReport:
    """Check that every nonzero fiber count is at least 2^m, m the multiplicity."""
    m = covering_multiplicity(sys)
    rep = spectrum_dp(sys)
    bound = 2**m
    min_r, min_c = rep.min_nonzero()
    details: dict = {
        "m": m,
        "k": sys.k,
        "denominator": rep.denominator,
        "bound": bound,
        "min_nonzero_count": min_c,
        "min_residue": min_r,
        "support_size": len(rep.counts),
    }
    if min_c >= bound:
        return VerificationReport(PASS, details)
    details["offending_residue"] = min_r
    return VerificationReport(FAIL, details)


def verify_corollary11(sys: CoverSystem) -> VerificationReport:
    """Check that the spectrum support has at most 2^(k-m) values."""
    m = covering_multiplicity(sys)
    rep = spectrum_dp(sys)
    bound = 2 ** (sys.k - m)
    support = len(rep.counts)
    details = {
        "m": m,
        "k": sys.k,
        "denominator": rep.denominator,
        "support_size": support,
        "bound": bound,
        "equality": support == bound,
    }
    return VerificationReport(PASS if support <= bound else FAIL, details)


def _corollary12_hypotheses(sys: CoverSystem) -> tuple[int, str | None]:
    """(multiplicity, failure reason or None) for the corollary12 hypotheses."""
    if sys.k == 0:
        return 0, "empty system"
    if any(w != 1 for w in sys.effective_weights()):
        return 0, "weights are not all 1"
    m = covering_multiplicity(sys)
    if m < 1:
        return m, "system is not a cover"
    if covering_multiplicity(drop_class(sys, sys.k)) >= m:
        return m, f"dropping the last class still leaves a {m}-cover"
    n_k = sys.classes[-1].n
    if not is_periodic_mod(sys, n_k):
        return m, f"covering function is not periodic mod {n_k}"
    return m, None


def verify_corollary12(sys: CoverSystem) -> VerificationReport:
    """Dropped-last-class fiber counts at r/n_k: at least 2^(m-1) subsets and
    at least m distinct integer parts, for every r.

    Hypotheses (exact m-cover multiplicity >= 1, last class essential,
    covering function periodic mod n_k, unit weights) are checked first;
    their failure yields NOT-APPLICABLE rather than FAIL.
    """
    m, reason = _corollary12_hypotheses(sys)
    if reason is not None:
        return VerificationReport(NOT_APPLICABLE, {"reason": reason, "m": m})
    n_k = sys.classes[-1].n
    ext = extended_spectrum(sys, exclude=sys.k)
    period = ext.denominator
    step = period // n_k
    count_bound = 2 ** (m - 1)
    per_r = []
    offending = []
    for r in range(n_k):
        fiber = ext.fiber((r * step) % period)
        cnt = sum(fiber.values())
        floor_count = len(fiber)
        ok = cnt >= count_bound and floor_count >= m
        per_r.append(
            {"r": r, "count": cnt, "floor_count": floor_count, "floors": sorted(fiber)}
        )
        if not ok:
            offending.append(r)
    details = {
        "m": m,
        "n_k": n_k,
        "k": sys.k,
        "count_bound": count_bound,
        "floor_bound": m,
        "per_residue": per_r,
    }
    if offending:
        details["offending_residues"] = offending
        return VerificationReport(FAIL, details)
    return VerificationReport(PASS, details)


def verify_remark13(sys: CoverSystem) -> VerificationReport:
    """Exact-cover refinement: subsets of the first k-1 classes with exact sum
    n + r/n_k number at least C(m-1, n) for every r in [0, n_k) and n in [0, m).

    Requires the covering function to be constantly m; otherwise
    NOT-APPLICABLE.
    """
    if sys.k == 0:
        return VerificationReport(NOT_APPLICABLE, {"reason": "empty system"})
    if any(w != 1 for w in sys.effective_weights()):
        return VerificationReport(NOT_APPLICABLE, {"reason": "weights are not all 1"})
    m = covering_multiplicity(sys)
    if m < 1:
        return VerificationReport(NOT_APPLICABLE, {"reason": "system is not a cover", "m": m})
    period = sys.period()
    exact = all(covering_function(sys, x) == m for x in range(period))
    if not exact:
        return VerificationReport(
            NOT_APPLICABLE, {"reason": f"covering function is not constantly {m}", "m": m}
        )
    n_k = sys.classes[-1].n
    ext = extended_spectrum(sys, exclude=sys.k)
    step = ext.denominator // n_k
    rows = []
    offending = []
    for r in range(n_k):
        for n in range(m):
            v = n * ext.denominator + r * step
            cnt = ext.count(v)
            bound = comb(m - 1, n)
            rows.append({"r": r, "n": n, "count": cnt, "bound": bound})
            if cnt < bound:
                offending.append({"r": r, "n": n})
    details = {"m": m, "n_k": n_k, "k": sys.k, "cells": rows}
    if offending:
        details["offending"] = offending
        return VerificationReport(FAIL, details)
    return VerificationReport(PASS, details)


@lru_cache(maxsize=64)
def _dropped_spectra(sys: CoverSystem) -> tuple[SpectrumReport, ...]:
    return tuple(spectrum_dp(drop_class(sys, t)) for t in range(1, sys.k + 1))


def lemma21_witness(sys: CoverSystem, theta: Rational) -> int:
    """Index t (1-based) such that dropping class t keeps both θ and
    {θ - m_t/n_t} in the spectrum.

    Such a t exists for every θ in the spectrum of any cover; failure to
    find one indicates a bug and raises InternalInvariantError.
    """
    theta = Fraction(theta)
    if covering_multiplicity(sys) < 1:
        raise ValidationError("witness search requires a cover")
    full = spectrum_dp(sys)
    if not full.contains_value(theta):
        raise NotInSpectrumError(f"{theta} is not a subset-sum fractional part")
    weights = sys.effective_weights()
    dropped = _dropped_spectra(sys)
    for t in range(1, sys.k + 1):
        rep_t = dropped[t - 1]
        shifted = frac_part(theta - Fraction(weights[t - 1], sys.classes[t - 1].n))
        if rep_t.contains_value(theta) and rep_t.contains_value(shifted):
            return t
    raise InternalInvariantError(
        f"no witness class for theta={theta}; this should be impossible on a cover"
    )
