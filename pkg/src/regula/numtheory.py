"""Number-theoretic helpers and the closed-form class-count bounds.

Everything here is exact where the quantity is rational (Fractions over
arbitrary-precision integers) and double precision where a logarithm is
unavoidable.  Comparisons of real-valued bounds against exact counts are
made after lowering the bound by a slack of 1e-9, so an irrational bound
that is attained exactly never fails spuriously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import sympy

from .errors import CapExceeded, RegulaError

BOUND_SLACK = 1e-9


def is_prime(n: int) -> bool:
    return sympy.isprime(n)


def factorize(n: int) -> dict:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise RegulaError("factorize needs a positive integer")
    return {int(p): int(e) for p, e in sympy.factorint(n).items()}


def prime_factors(n: int) -> list:
    return sorted(factorize(n)) if n > 1 else []


def part_split(n: int, p: int) -> tuple[int, int]:
    """(n_p, n_p'): the p-part and p'-part of n."""
    if n < 1:
        raise RegulaError("n must be positive")
    if not is_prime(p):
        raise RegulaError(f"{p} is not prime")
    np_ = 1
    while n % p == 0:
        n //= p
        np_ *= p
    return np_, n


def landau_quantity(r: int, a: int, p: int) -> Fraction:
    """(r^a - 1)_{p'} / (a * a_p), exactly."""
    if r <= 1 or a < 1:
        raise RegulaError("need r > 1 and a >= 1")
    _, num = part_split(r ** a - 1, p)
    ap, _ = part_split(a, p)
    return Fraction(num, a * ap)


def lewis_riedl_p_part(r: int, c: int, p: int) -> int:
    """The p-part of r^(p^c) - 1 in closed form, valid when p divides r - 1
    and c >= 1.

    Equals p^c * (r-1)_p when p > 2 or (r-1)_2 > 2, and p^c * (r+1)_2
    otherwise.
    """
    if not is_prime(p):
        raise RegulaError(f"{p} is not prime")
    if c < 1 or r <= 1:
        raise RegulaError("need r > 1 and c >= 1")
    if (r - 1) % p != 0:
        raise RegulaError(f"{p} does not divide r - 1 = {r - 1}")
    rm1_p, _ = part_split(r - 1, p)
    if p > 2 or rm1_p > 2:
        return p ** c * rm1_p
    rp1_2, _ = part_split(r + 1, 2)
    return p ** c * rp1_2


def zsigmondy_primes(r: int, b: int, max_bits: int = 256) -> frozenset:
    """Primes dividing r^b - 1 but no r^j - 1 with 1 <= j < b."""
    if r <= 1 or b < 1:
        raise RegulaError("need r > 1 and b >= 1")
    if b * r.bit_length() > max_bits:
        raise CapExceeded(f"r^b needs more than {max_bits} bits")
    m = r ** b - 1
    if m == 1:
        return frozenset()
    # a prime q with ord_q(r) < b has its order dividing b/l for some prime l
    for ell in prime_factors(b):
        d = b // ell
        g = math.gcd(m, r ** d - 1)
        while g > 1:
            m //= g
            g = math.gcd(m, r ** d - 1)
    if m == 1:
        return frozenset()
    return frozenset(factorize(m))


_FAMILY_KINDS = ("fermat", "mersenne", "two_rn_plus1", "four_rn_plus1")


def prime_family(kind: str, bound: int, cap: int = 10 ** 9) -> list:
    """Enumerate a named family of primes (or prime powers) up to ``bound``."""
    if kind not in _FAMILY_KINDS:
        raise RegulaError(f"unknown family {kind!r}; one of {_FAMILY_KINDS}")
    if bound > cap:
        raise CapExceeded(f"bound {bound} exceeds cap {cap}")
    found = set()
    if kind == "fermat":
        m = 0
        while True:
            v = 2 ** (2 ** m) + 1
            if v > bound:
                break
            if is_prime(v):
                found.add(v)
            m += 1
    elif kind == "mersenne":
        n = 2
        while 2 ** n - 1 <= bound:
            v = 2 ** n - 1
            if is_prime(v):
                found.add(v)
            n += 1
    else:
        mult = 2 if kind == "two_rn_plus1" else 4
        r = 2
        while mult * r + 1 <= bound:
            v = mult * r
            while v + 1 <= bound:
                cand = v + 1
                if kind == "two_rn_plus1":
                    if is_prime(cand):
                        found.add(cand)
                else:
                    # prime powers of the form 4*r^n + 1
                    pp = sympy.perfect_power(cand)
                    if is_prime(cand) or (pp and is_prime(int(pp[0]))):
                        found.add(cand)
                v *= r
            r = int(sympy.nextprime(r))
    return sorted(found)


_COXETER = {
    "G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30,
}


def coxeter_number(family: str, rank: int = 0) -> int:
    """Coxeter number of the Weyl group of the given Lie family."""
    fam = family.upper()
    if fam in _COXETER:
        return _COXETER[fam]
    if rank < 1:
        raise RegulaError(f"family {family!r} needs a positive rank")
    if fam == "A":
        return rank + 1
    if fam in ("B", "C"):
        return 2 * rank
    if fam == "D":
        if rank < 2:
            raise RegulaError("D family needs rank >= 2")
        return 2 * rank - 2
    raise RegulaError(f"unknown family {family!r}")


# -- lower bounds for class counts, centralizers and proportions ----------

Number = Union[Fraction, float]


@dataclass
class BoundEvaluation:
    series: str
    params: dict
    bound_value: Number
    compared_quantity: Optional[object] = None
    satisfied: Optional[bool] = None

    def compare(self, exact) -> "BoundEvaluation":
        self.compared_quantity = exact
        self.satisfied = bool(exact > self.bound_value - BOUND_SLACK)
        return self

    def to_json_dict(self) -> dict:
        bv = self.bound_value
        return {
            "series": self.series,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "bound_value": str(bv) if isinstance(bv, Fraction) else bv,
            "compared_quantity": (None if self.compared_quantity is None
                                  else str(self.compared_quantity)),
            "satisfied": self.satisfied,
        }


def regular_class_lower_bound(series: str, params: dict) -> BoundEvaluation:
    """Lower bound for the number of p-regular classes of a simple group.

    series 'linear_unitary' (params n, q): q^(n-1) / (6 n^3).
    series 'symplectic_orthogonal' (params n, q): q^n / (120 n^2).
    series 'exceptional' (params r, q, A): q^r / (480 A).
    series 'psl2' (params q, f): q / (4 e f (1 + log_q 3) gcd(2, q-1)).
    """
    if series == "linear_unitary":
        n, q = params["n"], params["q"]
        value: Number = Fraction(q ** (n - 1), 6 * n ** 3)
    elif series == "symplectic_orthogonal":
        n, q = params["n"], params["q"]
        value = Fraction(q ** n, 120 * n ** 2)
    elif series == "exceptional":
        r, q = params["r"], params["q"]
        A = params.get("A", 1)
        value = Fraction(q ** r, 480) / Fraction(A)
        params = dict(params, A=A)
    elif series == "psl2":
        q = params["q"]
        f = params.get("f", 1)
        value = q / (4 * math.e * f * (1 + math.log(3, q)) * math.gcd(2, q - 1))
        params = dict(params, f=f)
    else:
        raise RegulaError(f"unknown series {series!r}")
    return BoundEvaluation(series=series, params=dict(params), bound_value=value)


def min_centralizer_lower_bound(series: str, params: dict) -> BoundEvaluation:
    """Lower bound for the smallest centralizer order.

    series 'linear_unitary' (n, q): q^(n-1) / (e (1 + log_q(n+1)) gcd(q-1, n)).
    series 'psl2' (q): q / (e (1 + log_q 3) gcd(2, q-1)).
    series 'gl2' (q): q (q-1) / (e (1 + log_q 3)).
    series 'exceptional' (r, q, A): q^r / (A min(q, r) (1 + log_q r)).
    """
    if series == "linear_unitary":
        n, q = params["n"], params["q"]
        value = q ** (n - 1) / (math.e * (1 + math.log(n + 1, q)) * math.gcd(q - 1, n))
    elif series == "psl2":
        q = params["q"]
        value = q / (math.e * (1 + math.log(3, q)) * math.gcd(2, q - 1))
    elif series == "gl2":
        q = params["q"]
        value = q * (q - 1) / (math.e * (1 + math.log(3, q)))
    elif series == "exceptional":
        r, q = params["r"], params["q"]
        A = params.get("A", 1)
        value = q ** r / (A * min(q, r) * (1 + math.log(r, q)))
        params = dict(params, A=A)
    else:
        raise RegulaError(f"unknown series {series!r}")
    return BoundEvaluation(series=series, params=dict(params), bound_value=value)


def singular_proportion_lower_bound(series: str, params: dict, p: int) -> BoundEvaluation:
    """Lower bound for the proportion of p-singular elements of a simple group.

    series 'cross' (params h): (1/h)(1 - 1/p), or 1/9 when the special
    3-part case applies (flag 'exceptional_third_part').
    series 'defining' (params q): 2/(5q), or 2/(5q^2) for Suzuki and Ree
    groups (flag 'suzuki_ree').
    """
    if series == "cross":
        h = params["h"]
        if params.get("exceptional_third_part"):
            value: Number = Fraction(1, 9)
        else:
            value = Fraction(1, h) * (1 - Fraction(1, p))
    elif series == "defining":
        q = params["q"]
        delta = 2 if params.get("suzuki_ree") else 1
        value = Fraction(2, 5 * q ** delta)
    else:
        raise RegulaError(f"unknown series {series!r}")
    return BoundEvaluation(series=series, params=dict(params, p=p), bound_value=value)


def regular_proportion_lower_bound(series: str, params: dict) -> BoundEvaluation:
    """Lower bound for the proportion of p-regular elements (any p).

    series 'classical' (params m, the natural projective dimension): 1/(2m).
    series 'exceptional': 1/15.  series 'psl2': 1/4.
    """
    if series == "classical":
        value: Number = Fraction(1, 2 * params["m"])
    elif series == "exceptional":
        value = Fraction(1, 15)
    elif series == "psl2":
        value = Fraction(1, 4)
    else:
        raise RegulaError(f"unknown series {series!r}")
    return BoundEvaluation(series=series, params=dict(params), bound_value=value)


# -- candidate scan for PSL2(q) with four-prime-divisor order --------------

def psl2_simple_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def psl2_candidate_scan(bound: int, cap: int = 10 ** 6) -> list:
    """Prime powers q <= bound such that |PSL2(q)| has exactly four distinct
    prime divisors and q / (4 e f (1 + log_q 3) gcd(2, q-1)^2) <= 5.
    """
    if bound < 97:
        raise RegulaError("bound must be at least 97")
    if bound > cap:
        raise CapExceeded(f"bound {bound} exceeds cap {cap}")
    # smallest-prime-factor sieve up to bound + 1 covers q - 1, q and q + 1
    top = bound + 2
    spf = list(range(top))
    for i in range(2, int(top ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, top, i):
                if spf[j] == j:
                    spf[j] = i

    def distinct(n):
        out = set()
        while n > 1:
            d = spf[n]
            out.add(d)
            while n % d == 0:
                n //= d
        return out

    found = []
    for p in range(2, bound + 1):
        if spf[p] != p:
            continue
        q, f = p, 1
        while q <= bound:
            if q >= 4:
                # for odd q the division by gcd(2, q-1) = 2 never removes
                # the prime 2 from q^2 - 1, so the divisor set is the union
                primes = {p} | distinct(q - 1) | distinct(q + 1)
                if len(primes) == 4:
                    lhs = q / (4 * math.e * f * (1 + math.log(3, q))
                               * math.gcd(2, q - 1) ** 2)
                    if lhs <= 5 + BOUND_SLACK:
                        found.append(q)
            q *= p
            f += 1
    return sorted(found)
