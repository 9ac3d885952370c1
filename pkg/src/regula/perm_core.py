"""Permutations and stabilizer-chain permutation groups.

Everything downstream (class enumeration, radicals, the verification
suites) sits on the two types defined here: an immutable ``Permutation``
and a ``PermGroup`` carrying a verified base and strong generating set.
The chain is built with a deterministic Schreier-Sims: base points are
the first moved points, orbits are explored in FIFO order, and every
Schreier generator is sifted, so orders and membership tests are exact.

Composition is left-to-right: ``(a * b)(x) == b(a(x))``.
"""

from __future__ import annotations

import random
import re
from array import array
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded, DegreeMismatch, NotInGroup, NotNormal, RegulaError

ELEMENT_CAP = 2_000_000
DEGREE_CAP = 2000

_identity_cache: dict[int, tuple] = {}


def _id_tuple(n):
    t = _identity_cache.get(n)
    if t is None:
        t = _identity_cache[n] = tuple(range(n))
    return t


def _mult(a, b):
    # apply a, then b
    return tuple(map(b.__getitem__, a))


def _inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _conj(x, g, ginv):
    # g^-1 * x * g, left-to-right convention
    return tuple(map(g.__getitem__, map(x.__getitem__, ginv)))


def _encode(t, degree):
    """Dense canonical encoding for duplicate detection (degree bytes each)."""
    if degree <= 256:
        return bytes(t)
    return array("H", t).tobytes()


def _order_of(t):
    n = len(t)
    seen = bytearray(n)
    o = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = t[j]
            length += 1
        if length > 1:
            o = lcm(o, length)
    return o


def _cycles_of(t):
    n = len(t)
    seen = bytearray(n)
    cycles = []
    for i in range(n):
        if seen[i] or t[i] == i:
            seen[i] = 1
            continue
        cyc = [i]
        seen[i] = 1
        j = t[i]
        while j != i:
            cyc.append(j)
            seen[j] = 1
            j = t[j]
        cycles.append(cyc)
    return cycles


class Permutation:
    """A bijection of {0, ..., degree-1}, stored as its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        t = tuple(images)
        if sorted(t) != list(range(len(t))):
            raise RegulaError(f"not a permutation: {images!r}")
        object.__setattr__(self, "images", t)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(_id_tuple(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                images[a] = b
            if cyc:
                images[cyc[-1]] = cyc[0]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Permutation":
        """Parse 1-based disjoint-cycle notation, e.g. "(1,2,3)(4,5)".

        The identity is written "()".  Points inside cycles may be
        separated by commas or spaces.  ``degree`` defaults to the largest
        point mentioned.
        """
        s = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s*[, ]\s*\d+)*)?\s*\)\s*)+", s):
            raise RegulaError(f"cannot parse permutation {text!r}")
        cycles = []
        for inner in re.findall(r"\(([^()]*)\)", s):
            pts = [int(p) for p in re.split(r"[,\s]+", inner.strip()) if p]
            if any(p < 1 for p in pts):
                raise RegulaError(f"points are 1-based in {text!r}")
            if len(set(pts)) != len(pts):
                raise RegulaError(f"repeated point inside a cycle in {text!r}")
            cycles.append([p - 1 for p in pts])
        need = max((max(c) + 1 for c in cycles if c), default=0)
        if degree is None:
            if need == 0:
                raise RegulaError("the identity needs an explicit degree")
            degree = need
        elif degree < need:
            raise RegulaError(f"degree {degree} too small for {text!r}")
        flat = [p for c in cycles for p in c]
        if len(set(flat)) != len(flat):
            raise RegulaError(f"cycles are not disjoint in {text!r}")
        return cls.from_cycles(degree, cycles)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return Permutation(_mult(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inv(self.images))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = _id_tuple(self.degree)
        base = self.images
        while n:
            if n & 1:
                result = _mult(result, base)
            base = _mult(base, base)
            n >>= 1
        return Permutation(result)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def conjugated_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        if self.degree != g.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {g.degree}")
        return Permutation(_conj(self.images, g.images, _inv(g.images)))

    @property
    def is_identity(self) -> bool:
        return self.images == _id_tuple(self.degree)

    def order(self) -> int:
        return _order_of(self.images)

    def cycles(self) -> list[list[int]]:
        return _cycles_of(self.images)

    def cycle_string(self) -> str:
        cycles = _cycles_of(self.images)
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    return a * b


@dataclass(frozen=True)
class StructureFlags:
    solvable: bool
    nilpotent: bool
    is_p_group: bool


class _Level:
    __slots__ = ("point", "ident", "gens", "transversal")

    def __init__(self, point, ident):
        self.point = point
        self.ident = ident
        self.gens = []            # [(g, ginv)] fixing all shallower base points
        self.transversal = {point: (ident, ident)}  # orbit pt -> (u, uinv), u[point] = pt

    def rebuild_orbit(self):
        b = self.point
        trans = {b: (self.ident, self.ident)}
        self.transversal = trans
        queue = [b]
        while queue:
            a = queue.pop(0)
            u, _ = trans[a]
            for g, _ginv in self.gens:
                c = g[a]
                if c not in trans:
                    v = _mult(u, g)
                    trans[c] = (v, _inv(v))
                    queue.append(c)


def _first_moved(t):
    for i, j in enumerate(t):
        if i != j:
            return i
    return None


def _schreier_sims(degree, gen_tuples, base_hint=()):
    """Deterministic Schreier-Sims. Returns the verified list of levels."""
    ident = _id_tuple(degree)
    levels = [_Level(pt, ident) for pt in base_hint]

    def strip(g, start=0):
        for i in range(start, len(levels)):
            lvl = levels[i]
            beta = g[lvl.point]
            entry = lvl.transversal.get(beta)
            if entry is None:
                return g, i
            g = _mult(g, entry[1])
        return g, len(levels)

    def add_strong_gen(h, upto):
        # h fixes base[0..upto-1]; it belongs to every level <= upto
        if upto == len(levels):
            levels.append(_Level(_first_moved(h), ident))
        hpair = (h, _inv(h))
        for j in range(upto + 1):
            levels[j].gens.append(hpair)
        for j in range(upto + 1):
            levels[j].rebuild_orbit()

    for g in gen_tuples:
        if g == ident:
            continue
        h, lev = strip(g)
        if h != ident:
            add_strong_gen(h, lev)

    # Bottom-up verification: sift every Schreier generator.
    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        failed_at = None
        for beta in sorted(lvl.transversal):
            u, _uinv = lvl.transversal[beta]
            for s, _sinv in lvl.gens:
                target = s[beta]
                sg = _mult(_mult(u, s), lvl.transversal[target][1])
                if sg == ident:
                    continue
                h, lev = strip(sg, i + 1)
                if h != ident:
                    add_strong_gen(h, lev)
                    failed_at = lev
                    break
            if failed_at is not None:
                break
        if failed_at is not None:
            i = failed_at
        else:
            i -= 1
    return levels


class PermGroup:
    """A permutation group with a verified base and strong generating set.

    Instances are immutable once constructed and safe to share between
    threads; every operation below is a pure function of its inputs.
    """

    def __init__(self, generators: Iterable[Permutation], degree: Optional[int] = None,
                 base_hint: Sequence[int] = ()):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise RegulaError("need generators or an explicit degree")
            degree = gens[0].degree
        if degree < 1 or degree > DEGREE_CAP:
            raise CapExceeded(f"degree {degree} outside [1, {DEGREE_CAP}]")
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity)
        self._gen_tuples = tuple(g.images for g in self.generators)
        self._gen_pairs = tuple((t, _inv(t)) for t in self._gen_tuples)
        self._levels = _schreier_sims(degree, self._gen_tuples, base_hint)
        o = 1
        for lvl in self._levels:
            o *= len(lvl.transversal)
        self.order = o
        self._cache = {}

    # -- basic data ------------------------------------------------------

    @property
    def base(self) -> tuple:
        return tuple(lvl.point for lvl in self._levels)

    @property
    def strong_generators(self) -> tuple:
        seen = {}
        for lvl in self._levels:
            for g, _ in lvl.gens:
                seen.setdefault(g, None)
        return tuple(Permutation(g) for g in seen)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def fundamental_orbit_lengths(self) -> tuple:
        return tuple(len(lvl.transversal) for lvl in self._levels)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self.order} gens={len(self.generators)}>"

    # -- membership ------------------------------------------------------

    def _sift(self, t):
        ident = _id_tuple(self.degree)
        for lvl in self._levels:
            entry = lvl.transversal.get(t[lvl.point])
            if entry is None:
                return t
            t = _mult(t, entry[1])
        return t

    def _contains_tuple(self, t):
        return self._sift(t) == _id_tuple(self.degree)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch(f"element degree {g.degree}, group degree {self.degree}")
        return self._contains_tuple(g.images)

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def contains_subgroup(self, other: "PermGroup") -> bool:
        return other.degree == self.degree and all(self._contains_tuple(t) for t in other._gen_tuples)

    # -- enumeration -----------------------------------------------------

    def _raw_elements(self, cap: Optional[int] = None) -> Iterator[tuple]:
        cap = ELEMENT_CAP if cap is None else cap
        if self.order > cap:
            raise CapExceeded(f"group order {self.order} exceeds enumeration cap {cap}")
        ident = _id_tuple(self.degree)
        if not self._levels:
            yield ident
            return
        # element = u_k * ... * u_1 * u_0 over transversal choices; the
        # level-0 choice varies fastest so each step costs one product.
        orbits = [sorted(lvl.transversal) for lvl in self._levels]
        trans = [lvl.transversal for lvl in self._levels]
        k = len(orbits)
        idx = [0] * k
        suffix = [ident] * (k + 1)  # suffix[j] = product of choices at levels > j-1 ... seeded below
        for j in range(k - 1, -1, -1):
            suffix[j] = _mult(suffix[j + 1], trans[j][orbits[j][0]][0])
        while True:
            yield suffix[0]
            j = 0
            while j < k:
                idx[j] += 1
                if idx[j] < len(orbits[j]):
                    break
                idx[j] = 0
                j += 1
            if j == k:
                return
            for m in range(j, -1, -1):
                suffix[m] = _mult(suffix[m + 1], trans[m][orbits[m][idx[m]]][0])

    def elements(self, cap: Optional[int] = None) -> Iterator[Permutation]:
        """Yield each element exactly once; raises CapExceeded if order > cap."""
        for t in self._raw_elements(cap):
            yield Permutation(t)

    def random_element(self, rng: Optional[random.Random] = None) -> Permutation:
        """Uniformly random element: one transversal representative per level."""
        rng = rng or random
        t = _id_tuple(self.degree)
        for lvl in reversed(self._levels):
            beta = rng.choice(sorted(lvl.transversal))
            t = _mult(t, lvl.transversal[beta][0])
        return Permutation(t)

    # -- subgroup constructions ------------------------------------------

    def _extended_with(self, extra_tuples):
        gens = [Permutation(t) for t in self._gen_tuples + tuple(extra_tuples)]
        return PermGroup(gens, degree=self.degree)

    def _grown_by(self, tuples):
        # add only non-members, so the generator list stays near-minimal
        # and the number of chain rebuilds is bounded by log2 of the order
        H = self
        for t in tuples:
            if not H._contains_tuple(t):
                H = H._extended_with([t])
        return H

    def subgroup(self, generators: Iterable[Permutation]) -> "PermGroup":
        H = PermGroup(tuple(generators), degree=self.degree)
        for t in H._gen_tuples:
            if not self._contains_tuple(t):
                raise NotInGroup("subgroup generator not in group")
        return H

    def point_stabilizer(self, point: int) -> "PermGroup":
        """Stabilizer of a point, read off a chain whose base starts there."""
        levels = _schreier_sims(self.degree, self._gen_tuples, base_hint=(point,))
        gens = {}
        for lvl in levels[1:]:
            for g, _ in lvl.gens:
                gens.setdefault(g, None)
        return PermGroup([Permutation(g) for g in gens] or [], degree=self.degree)

    def normal_closure(self, seeds: Iterable[Permutation]) -> "PermGroup":
        """Smallest normal subgroup of this group containing ``seeds``."""
        seed_perms = tuple(seeds)
        for s in seed_perms:
            if not self.contains(s):
                raise NotInGroup(f"seed {s} is not in the group")
        H = PermGroup([], degree=self.degree)
        H = H._grown_by(s.images for s in seed_perms if not s.is_identity)
        while True:
            before = H.order
            for h in list(H._gen_tuples):
                for g, ginv in self._gen_pairs:
                    c = _conj(h, g, ginv)
                    if not H._contains_tuple(c):
                        H = H._grown_by([c])
            if H.order == before:
                return H

    def commutator_subgroup(self) -> "PermGroup":
        """Normal closure of the pairwise generator commutators."""
        ident = _id_tuple(self.degree)
        comms = {}
        for a in self._gen_tuples:
            ainv = _inv(a)
            for b in self._gen_tuples:
                binv = _inv(b)
                c = _mult(_mult(ainv, binv), _mult(a, b))
                if c != ident:
                    comms.setdefault(c, None)
        return self.normal_closure([Permutation(c) for c in comms])

    def derived_series(self) -> list["PermGroup"]:
        """G >= G' >= G'' >= ... down to the trivial group, or with the
        stable term repeated once when the series stops above it."""
        if self.is_trivial:
            return [self]
        series = [self]
        while True:
            nxt = series[-1].commutator_subgroup()
            series.append(nxt)
            if nxt.is_trivial or nxt.order == series[-2].order:
                break
        return series

    def lower_central_series(self) -> list["PermGroup"]:
        """G >= [G,G] >= [G,[G,G]] >= ... down to the trivial group, or
        with the stable term repeated once."""
        if self.is_trivial:
            return [self]
        series = [self]
        ident = _id_tuple(self.degree)
        while True:
            cur = series[-1]
            comms = {}
            for a in self._gen_tuples:
                ainv = _inv(a)
                for b in cur._gen_tuples:
                    binv = _inv(b)
                    c = _mult(_mult(ainv, binv), _mult(a, b))
                    if c != ident:
                        comms.setdefault(c, None)
            nxt = self.normal_closure([Permutation(c) for c in comms])
            series.append(nxt)
            if nxt.is_trivial or nxt.order == cur.order:
                break
        return series

    def derived_length(self) -> Optional[int]:
        series = self.derived_series()
        if not series[-1].is_trivial:
            return None
        return len(series) - 1

    def structure_flags(self, p: int) -> StructureFlags:
        from .numtheory import is_prime

        if not is_prime(p):
            raise RegulaError(f"{p} is not prime")
        key = ("flags", p)
        if key not in self._cache:
            solvable = self.derived_series()[-1].is_trivial
            nilpotent = self.lower_central_series()[-1].is_trivial if solvable else False
            n = self.order
            while n % p == 0:
                n //= p
            self._cache[key] = StructureFlags(solvable, nilpotent, n == 1)
        return self._cache[key]

    # -- quotients ---------------------------------------------------------

    def is_normal_in(self, G: "PermGroup") -> bool:
        if self.degree != G.degree or not G.contains_subgroup(self):
            return False
        for h in self._gen_tuples:
            for g, ginv in G._gen_pairs:
                if not self._contains_tuple(_conj(h, g, ginv)):
                    return False
        return True

    def _coset_canonical(self, t):
        # Greedy lexicographic minimisation of base-point images over the
        # coset N*t; two elements reduce to the same tuple iff same coset.
        for lvl in self._levels:
            if len(lvl.transversal) > 1:
                o = min(lvl.transversal, key=t.__getitem__)
                t = _mult(lvl.transversal[o][0], t)
        return t

    def quotient(self, N: "PermGroup", index_cap: int = 100_000) -> "PermGroup":
        """Faithful image of G/N as the coset action, for normal N <= G."""
        if not N.is_normal_in(self):
            raise NotNormal("subgroup is not normal")
        if N.order == self.order:
            return PermGroup([], degree=1)
        index = self.order // N.order
        if index > index_cap:
            raise CapExceeded(f"index {index} exceeds cap {index_cap}")
        ident = _id_tuple(self.degree)
        start = N._coset_canonical(ident)
        reps = [start]
        number = {start: 0}
        images = [[] for _ in self._gen_tuples]
        i = 0
        while i < len(reps):
            r = reps[i]
            for gi, g in enumerate(self._gen_tuples):
                c = N._coset_canonical(_mult(r, g))
                j = number.get(c)
                if j is None:
                    j = len(reps)
                    number[c] = j
                    reps.append(c)
                images[gi].append(j)
            i += 1
        if len(reps) != index:
            raise RegulaError("coset enumeration disagrees with the index")
        Q = PermGroup([Permutation(img) for img in images] or [], degree=index)
        if Q.order * N.order != self.order:
            raise RegulaError("quotient order check failed")
        return Q

    def coset_representatives(self, N: "PermGroup", index_cap: int = 100_000):
        """Canonical coset representatives of normal N in G, identity coset first."""
        if not N.is_normal_in(self):
            raise NotNormal("subgroup is not normal")
        index = self.order // N.order
        if index > index_cap:
            raise CapExceeded(f"index {index} exceeds cap {index_cap}")
        start = N._coset_canonical(_id_tuple(self.degree))
        reps = [start]
        seen = {start}
        i = 0
        while i < len(reps):
            r = reps[i]
            for g in self._gen_tuples:
                c = N._coset_canonical(_mult(r, g))
                if c not in seen:
                    seen.add(c)
                    reps.append(c)
            i += 1
        return [Permutation(r) for r in reps]

    def intermediate_index2(self, N: "PermGroup") -> list["PermGroup"]:
        """All H with N <= H <= G and |H:N| = 2.

        Requires |G:N| = 2, or |G:N| = 4 with elementary abelian quotient.
        """
        if not N.is_normal_in(self):
            raise NotNormal("subgroup is not normal")
        index = self.order // N.order
        if index == 2:
            return [self]
        if index != 4:
            raise RegulaError(f"index is {index}, expected 2 or 4")
        reps = self.coset_representatives(N)
        ident_coset = reps[0].images
        nontrivial = [r for r in reps if r.images != ident_coset]
        for r in nontrivial:
            if N._coset_canonical(_mult(r.images, r.images)) != ident_coset:
                raise RegulaError("index-4 quotient is not elementary abelian")
        subs = []
        for r in nontrivial:
            H = self.subgroup(list(N.generators) + [r])
            if H.order != 2 * N.order:
                raise RegulaError("intermediate subgroup has wrong order")
            subs.append(H)
        subs.sort(key=lambda H: sorted(g.images for g in H.generators))
        return subs
