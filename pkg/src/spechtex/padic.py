"""Base-p digit arithmetic and binomial coefficients modulo a prime.

Everything downstream (James predicates, segment combinatorics, the
relation-system coefficients) reduces to the functions in this module.
Field elements are represented canonically as ints in ``[0, p-1]`` and
all arithmetic reduces eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class InvalidModulusError(ValueError):
    """The modulus is not a prime in the supported range."""


#: Primes up to this bound are accepted; larger moduli are rejected.
MAX_PRIME = 1 << 15


@lru_cache(maxsize=None)
def validate_prime(p: int) -> int:
    """Return ``p`` unchanged if it is a prime in [2, 2**15), else raise."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidModulusError(f"modulus must be an int, got {p!r}")
    if p < 2 or p >= MAX_PRIME:
        raise InvalidModulusError(f"modulus must be a prime in [2, {MAX_PRIME}), got {p}")
    if p in (2, 3):
        return p
    if p % 2 == 0:
        raise InvalidModulusError(f"modulus {p} is not prime")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise InvalidModulusError(f"modulus {p} is not prime")
        d += 2
    return p


@dataclass(frozen=True)
class PDigits:
    """Base-p expansion of a non-negative integer, little-endian.

    ``digits[i]`` is the coefficient of ``p**i``; the expansion of 0 is
    the empty tuple and positive values carry no trailing zeros.
    """

    digits: tuple[int, ...]
    p: int

    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def digit(self, i: int) -> int:
        """Coefficient of ``p**i``, 0 beyond the stored length."""
        if 0 <= i < len(self.digits):
            return self.digits[i]
        return 0


def digits_base_p(a: int, p: int) -> PDigits:
    """Base-p expansion of ``a >= 0``."""
    validate_prime(p)
    if a < 0:
        raise ValueError(f"cannot expand negative integer {a}")
    out = []
    while a:
        a, d = divmod(a, p)
        out.append(d)
    return PDigits(tuple(out), p)


def digit_p(a: int, i: int, p: int) -> int:
    """The ``i``-th base-p digit of ``a >= 0``."""
    validate_prime(p)
    if a < 0 or i < 0:
        raise ValueError("digit_p requires a >= 0 and i >= 0")
    return (a // p**i) % p


def len_p(a: int, p: int) -> int:
    """Index of the top nonzero base-p digit of ``a >= 1``."""
    validate_prime(p)
    if a < 1:
        raise ValueError(f"len_p undefined for {a}; argument must be positive")
    l = 0
    while a >= p:
        a //= p
        l += 1
    return l


def val_p(a: int, p: int) -> int:
    """Largest v with ``p**v`` dividing ``a >= 1``."""
    validate_prime(p)
    if a < 1:
        raise ValueError(f"val_p undefined for {a}; argument must be positive")
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def _factorial_tables(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # fact[i] = i! mod p and invfact[i] = (i!)^{-1} mod p for 0 <= i < p
    fact = [1] * p
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    invfact = [1] * p
    invfact[p - 1] = pow(fact[p - 1], p - 2, p)
    for i in range(p - 1, 0, -1):
        invfact[i - 1] = invfact[i] * i % p
    return tuple(fact), tuple(invfact)


def binom_mod_p(a: int, b: int, p: int) -> int:
    """C(a, b) mod p by the digit-wise product of small binomials.

    Returns 0 as soon as some digit of ``b`` exceeds the matching digit
    of ``a`` (this covers b > a), and 1 for b = 0.
    """
    validate_prime(p)
    if a < 0 or b < 0:
        raise ValueError("binom_mod_p requires non-negative arguments")
    fact, invfact = _factorial_tables(p)
    result = 1
    while b:
        ad = a % p
        bd = b % p
        if bd > ad:
            return 0
        result = result * fact[ad] % p * invfact[bd] % p * invfact[ad - bd] % p
        a //= p
        b //= p
    return result


def binom_nonzero(a: int, b: int, p: int) -> bool:
    """True iff C(a, b) is nonzero mod p, i.e. b digit-dominates into a."""
    validate_prime(p)
    if a < 0 or b < 0:
        raise ValueError("binom_nonzero requires non-negative arguments")
    while b:
        if b % p > a % p:
            return False
        a //= p
        b //= p
    return True
