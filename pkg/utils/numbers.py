# utils/numbers.py

from __future__ import annotations

from sympy import factorint, isprime, primefactors

from utils.errors import ArgumentError


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise ArgumentError(f"{p!r} is not a prime")
    return p


def prime_divisors(n: int) -> list[int]:
    """Primes dividing n, ascending. prime_divisors(1) == []."""
    return [int(q) for q in primefactors(n)]


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    return p ** int(factorint(n).get(p, 0))


def is_prime_power_of(n: int, p: int) -> bool:
    return n >= 1 and p_part(n, p) == n


def max_prime_multiplicity(n: int) -> int:
    """Highest exponent in the factorisation of n (0 for n == 1)."""
    return max((int(e) for e in factorint(n).values()), default=0)


def is_prime(n: int) -> bool:
    return bool(isprime(n))
