"""Numerical semigroups and their basic invariants.

A numerical semigroup is an additively closed subset of the nonnegative
integers containing 0 whose complement is finite.  Values are kept in a
canonical form -- the sorted elements strictly below the conductor, plus the
conductor itself -- so two values represent the same semigroup exactly when
they compare equal.

The full set of naturals is represented by an empty element list and
conductor 0.  Its invariants follow the conventions ``frobenius == -1``,
``pseudo_frobenius == (-1,)``, ``type == 1``, class "symmetric"; these are a
choice (the usual definitions do not apply to a set with empty complement)
and are documented here once rather than per function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Iterable

from .errors import (
    EmptyGenerators,
    FrobeniusInSet,
    MissingZero,
    NonCoprimeGenerators,
    NotClosed,
)

SYMMETRIC = "symmetric"
PSEUDO_SYMMETRIC = "pseudo-symmetric"
ALMOST_SYMMETRIC_PROPER = "almost-symmetric-proper"
NOT_ALMOST_SYMMETRIC = "none"

#: Accepted values for the ``method`` argument of :func:`classify`.
CLASSIFY_METHODS = ("definition", "reflection", "pairing", "all")


@dataclass(frozen=True)
class NumericalSemigroup:
    """Canonical, immutable numerical semigroup.

    ``small_elements`` holds the members strictly below ``conductor``; every
    integer >= ``conductor`` is a member.  Direct construction performs cheap
    structural validation only; use :meth:`from_small_elements` to also check
    additive closure of untrusted input.
    """

    small_elements: tuple[int, ...]
    conductor: int

    def __post_init__(self):
        object.__setattr__(self, "small_elements", tuple(self.small_elements))
        elems, c = self.small_elements, self.conductor
        if c < 0:
            raise ValueError("conductor must be nonnegative")
        if c == 0:
            if elems:
                raise ValueError("the naturals are stored with an empty element list")
            return
        if elems and elems[0] < 0:
            raise ValueError("elements must be nonnegative")
        if not elems or elems[0] != 0:
            raise MissingZero("a numerical semigroup must contain 0")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("small elements must be strictly increasing")
        if elems[-1] == c - 1:
            raise FrobeniusInSet(
                f"{c - 1} is listed but equals conductor - 1; the conductor is not minimal"
            )
        if elems[-1] >= c:
            raise ValueError("small elements must lie strictly below the conductor")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """Smallest numerical semigroup containing ``gens``.

        Requires a nonempty list of positive integers with gcd 1 (otherwise
        the complement would be infinite).
        """
        gens = sorted(set(gens))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] < 1:
            raise ValueError("generators must be positive integers")
        if reduce(math.gcd, gens) != 1:
            raise NonCoprimeGenerators(f"gcd({', '.join(map(str, gens))}) > 1")
        m = gens[0]
        # least[r] = smallest element of the semigroup congruent to r mod m;
        # computed by Bellman-Ford relaxation over the residue classes.
        least: list[int | None] = [None] * m
        least[0] = 0
        changed = True
        while changed:
            changed = False
            for r in range(m):
                v = least[r]
                if v is None:
                    continue
                for g in gens:
                    w = v + g
                    rr = w % m
                    if least[rr] is None or w < least[rr]:
                        least[rr] = w
                        changed = True
        conductor = max(least) - m + 1  # type: ignore[type-var]
        small = tuple(x for x in range(conductor) if least[x % m] <= x)
        return cls(small, conductor)

    @classmethod
    def from_small_elements(cls, elems: Iterable[int], conductor: int) -> "NumericalSemigroup":
        """Validating constructor; rejects non-closed input with a witness pair."""
        s = cls(tuple(sorted(set(elems))), conductor)
        nonzero = [e for e in s.small_elements if e > 0]
        for i, a in enumerate(nonzero):
            for b in nonzero[i:]:
                t = a + b
                if t >= conductor:
                    break
                if t not in s:
                    raise NotClosed(f"{a} + {b} = {t} is missing", witness=(a, b))
        return s

    # -- membership and invariants ----------------------------------------

    @cached_property
    def _small_set(self) -> frozenset[int]:
        return frozenset(self.small_elements)

    def __contains__(self, x: int) -> bool:
        return x >= self.conductor or x in self._small_set

    def members_below(self, hi: int) -> list[int]:
        """Sorted members in [0, hi)."""
        out = [e for e in self.small_elements if e < hi]
        out.extend(range(self.conductor, hi))
        return out

    @property
    def is_naturals(self) -> bool:
        return self.conductor == 0

    @property
    def frobenius(self) -> int:
        """Largest integer not in the semigroup (-1 for the naturals)."""
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element."""
        if self.is_naturals:
            return 1
        if len(self.small_elements) > 1:
            return self.small_elements[1]
        return self.conductor

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        """Ascending complement within the naturals."""
        return tuple(x for x in range(self.conductor) if x not in self._small_set)

    @cached_property
    def second_type_gaps(self) -> tuple[int, ...]:
        """Gaps s whose reflection frobenius - s is also a gap."""
        f = self.frobenius
        return tuple(s for s in self.gaps if (f - s) not in self)

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Ascending list of x not in S with x + s in S for every nonzero s in S."""
        if self.is_naturals:
            return (-1,)
        nonzero = [s for s in self.small_elements if s > 0]
        # sums x + s with s >= conductor land above the Frobenius number, so
        # only the small nonzero elements need checking.
        return tuple(
            x for x in self.gaps if all((x + s) in self for s in nonzero)
        )

    @property
    def type(self) -> int:
        """Number of pseudo-Frobenius numbers."""
        return len(self.pseudo_frobenius)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        """Unique minimal generating set: nonzero elements not a sum of two."""
        c, m = self.conductor, self.multiplicity
        # any element > conductor + multiplicity splits off the multiplicity
        candidates = [x for x in self.small_elements if x > 0]
        candidates += [x for x in range(c, c + m + 1) if x > 0]
        gens = []
        for x in candidates:
            if any(a in self and (x - a) in self for a in range(m, x // 2 + 1)):
                continue
            gens.append(x)
        return tuple(gens)

    def __str__(self) -> str:
        inner = ", ".join(map(str, self.small_elements + (self.conductor,)))
        return "{" + inner + "->}"


#: The full set of nonnegative integers.
NATURALS = NumericalSemigroup((), 0)


def canonical_key(s: NumericalSemigroup) -> tuple:
    """Sort key for the canonical order: conductor, then small elements."""
    return (s.conductor, s.small_elements)


@dataclass(frozen=True)
class ClassificationReport:
    """Symmetry classification of one semigroup.

    ``symmetry_class`` is one of "symmetric", "pseudo-symmetric",
    "almost-symmetric-proper", or "none".  ``criteria_agreement`` records
    that every almost-symmetry criterion evaluated returned the same answer
    (always true for reports produced by :func:`classify`, which raises on
    disagreement).
    """

    frobenius: int
    gaps: tuple[int, ...]
    second_type_gaps: tuple[int, ...]
    pseudo_frobenius: tuple[int, ...]
    type: int
    symmetry_class: str
    criteria_agreement: bool

    @property
    def almost_symmetric(self) -> bool:
        return self.symmetry_class != NOT_ALMOST_SYMMETRIC

    @property
    def symmetric(self) -> bool:
        return self.symmetry_class == SYMMETRIC

    @property
    def pseudo_symmetric(self) -> bool:
        return self.symmetry_class == PSEUDO_SYMMETRIC


def _almost_symmetric_by_definition(s: NumericalSemigroup) -> bool:
    return set(s.second_type_gaps) <= set(s.pseudo_frobenius)


def _almost_symmetric_by_reflection(s: NumericalSemigroup) -> bool:
    # x in S  <=>  f - x not in S union PF(S), for every nonzero integer x.
    # Outside [-(c+1), c+1] both sides are constant, so the window suffices.
    f, c = s.frobenius, s.conductor
    pf = set(s.pseudo_frobenius)
    for x in range(-(c + 1), c + 2):
        if x == 0:
            continue
        r = f - x
        if (x in s) != (r not in s and r not in pf):
            return False
    return True


def _almost_symmetric_by_pairing(s: NumericalSemigroup) -> bool:
    # with PF = {f_1 < ... < f_{t-1} < f}: f_i + f_{t-i} == f for all i
    pf = s.pseudo_frobenius
    f, t = s.frobenius, len(pf)
    return all(pf[i] + pf[t - 2 - i] == f for i in range(t - 1))


_CRITERIA = {
    "definition": _almost_symmetric_by_definition,
    "reflection": _almost_symmetric_by_reflection,
    "pairing": _almost_symmetric_by_pairing,
}


@lru_cache(maxsize=None)
def classify(s: NumericalSemigroup, method: str = "all") -> ClassificationReport:
    """Full symmetry report for ``s``.

    ``method`` selects how almost symmetry is decided: "definition" (second
    type gaps contained in the pseudo-Frobenius set), "reflection" (the
    membership biconditional x in S <=> f - x outside S and PF), "pairing"
    (pseudo-Frobenius numbers pair up to f), or "all".  With "all", the three
    criteria are evaluated together and a disagreement raises RuntimeError:
    they are provably equivalent, so disagreement is an internal bug, never a
    property of the input.
    """
    if method not in CLASSIFY_METHODS:
        raise ValueError(f"method must be one of {CLASSIFY_METHODS}, got {method!r}")
    names = list(_CRITERIA) if method == "all" else [method]
    results = {name: _CRITERIA[name](s) for name in names}
    agree = len(set(results.values())) == 1
    if not agree:
        raise RuntimeError(f"almost-symmetry criteria disagree on {s}: {results}")
    almost = results[names[0]]

    f = s.frobenius
    ell = s.second_type_gaps
    if not ell:
        symmetry_class = SYMMETRIC
    elif f % 2 == 0 and ell == (f // 2,):
        symmetry_class = PSEUDO_SYMMETRIC
    elif almost:
        symmetry_class = ALMOST_SYMMETRIC_PROPER
    else:
        symmetry_class = NOT_ALMOST_SYMMETRIC

    return ClassificationReport(
        frobenius=f,
        gaps=s.gaps,
        second_type_gaps=ell,
        pseudo_frobenius=s.pseudo_frobenius,
        type=s.type,
        symmetry_class=symmetry_class,
        criteria_agreement=agree,
    )
