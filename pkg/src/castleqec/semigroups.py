"""Numerical semigroups and the Feng-Rao order bound.

A numerical semigroup is the set of nonnegative integers generated by a
finite set with gcd 1 (so the complement, the gap set, is finite).  These are
the pole-order semigroups of the curves in this package; their combinatorics
drive code dimensions and the order bound on dual minimum distances.
"""

from __future__ import annotations

import math

import numpy as np


class NumericalSemigroup:
    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise ValueError(f"generators {gens} have gcd > 1: not a numerical semigroup")
        self._gens = gens
        bound = (gens[0] - 1) * (gens[-1] - 1) + gens[-1] + 2
        self._member = self._sieve(bound)
        # every integer from the conductor on is a member; certify by finding a
        # full window of multiplicity-many consecutive members, extending if needed
        while not self._member[-gens[0]:].all():
            bound *= 2
            self._member = self._sieve(bound)

        gaps = np.nonzero(~self._member)[0]
        self.gaps = tuple(int(v) for v in gaps)
        self.genus = len(self.gaps)
        self.conductor = int(gaps[-1]) + 1 if self.genus else 0
        self.multiplicity = gens[0]
        self._cum_members = np.cumsum(self._member)

        # minimal generating system: nonzero members not expressible as a sum
        # of two nonzero members
        self.generators = tuple(
            s for s in self.elements_up_to(self.conductor + self.multiplicity)
            if s and not any(
                self.contains(s - t) for t in self.elements_up_to(s - 1) if 0 < t
            )
        )

    def _sieve(self, bound):
        member = np.zeros(bound + 1, dtype=bool)
        member[0] = True
        gens = self._gens
        for i in range(gens[0], bound + 1):
            for g in gens:
                if g <= i and member[i - g]:
                    member[i] = True
                    break
        return member

    # -- membership and counting ------------------------------------------------

    def contains(self, s):
        if s < 0:
            return False
        if s < len(self._member):
            return bool(self._member[s])
        return True  # beyond the certified window, everything is a member

    def elements_up_to(self, m):
        """Sorted members in [0, m]."""
        if m < 0:
            return []
        inside = min(m, len(self._member) - 1)
        out = [int(v) for v in np.nonzero(self._member[: inside + 1])[0]]
        out.extend(range(inside + 1, m + 1))
        return out

    def ell(self, m):
        """Number of members in [0, m] (the dimension of L(mQ) on a curve)."""
        if m < 0:
            return 0
        if m >= len(self._member):
            return int(self._cum_members[-1]) + m - (len(self._member) - 1)
        return int(self._cum_members[m])

    def rho(self, r):
        """The r-th member, 1-indexed: rho(1) = 0."""
        if r < 1:
            raise ValueError("rho is 1-indexed")
        below = self.conductor - self.genus  # members strictly below the conductor
        if r <= below:
            return self.elements_up_to(self.conductor - 1)[r - 1]
        return self.conductor + (r - below - 1)

    @property
    def is_symmetric(self):
        return self.conductor == 2 * self.genus

    def dimension_set(self, n):
        """The n pole orders where an n-point evaluation code grows: S minus (n + S)."""
        out = [s for s in self.elements_up_to(n + self.conductor) if not self.contains(s - n)]
        assert len(out) == n
        return out

    # -- Feng-Rao machinery -------------------------------------------------------

    def nu(self, s):
        """Number of ordered pairs of members summing to s."""
        if s < 0:
            return 0
        window = np.array([self.contains(a) for a in range(s + 1)])
        return int(np.count_nonzero(window & window[::-1]))

    def order_bound(self, m):
        """min nu(s) over members s > m: the Feng-Rao floor of d(C(mQ)^perp).

        nu(s) = s + 1 - 2*genus for s >= 2*conductor - 1 and is increasing
        there, so the scan below the threshold plus one tail value is exact.
        """
        c, g = self.conductor, self.genus
        vals = [self.nu(s) for s in range(m + 1, 2 * c) if self.contains(s)]
        if m + 1 > 2 * c - 1:
            vals.append(m + 2 - 2 * g)
        return max(1, min(vals))

    # -- serialization --------------------------------------------------------------

    def to_json(self):
        return {
            "generators": list(self.generators),
            "genus": self.genus,
            "gaps": list(self.gaps),
        }

    def __repr__(self):
        return f"<{', '.join(map(str, self.generators))}>"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and other.generators == self.generators

    def __hash__(self):
        return hash(self.generators)


def semigroup_from_json(obj):
    try:
        S = NumericalSemigroup(obj["generators"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed semigroup descriptor") from exc
    if "genus" in obj and int(obj["genus"]) != S.genus:
        raise ValueError(f"descriptor claims genus {obj['genus']}, computed {S.genus}")
    if "gaps" in obj and tuple(int(v) for v in obj["gaps"]) != S.gaps:
        raise ValueError("descriptor gap set does not match the generators")
    return S
