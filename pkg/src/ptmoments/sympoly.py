"""Integer partitions, elementary symmetric polynomials, cycle indices.

Three independent routes to the elementary symmetric polynomials live here:
direct subset expansion, the Newton recursion from power sums, and a
partition-indexed closed form. Their mutual agreement is the backbone of
the test suite. All partition coefficients are kept as exact rationals
until the final multiply.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence

# Full S_k enumeration is factorial; beyond this use the closed form.
MAX_ENUMERATION_K = 8


def partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (n_1, ..., n_k) with sum j*n_j = k.

    Yields each partition of k exactly once, in lexicographic order on the
    multiplicity tuple. k = 0 yields the single empty partition.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        yield ()
        return

    def rec(j: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if j > k:
            if remaining == 0:
                yield tuple(acc)
            return
        for nj in range(remaining // j + 1):
            acc.append(nj)
            yield from rec(j + 1, remaining - j * nj, acc)
            acc.pop()

    yield from rec(1, k, [])


def _partition_denominator(mult: Sequence[int]) -> int:
    """Exact denominator prod n_j! * j^n_j for one multiplicity vector."""
    denom = 1
    for j, nj in enumerate(mult, start=1):
        if nj:
            denom *= math.factorial(nj) * j**nj
    return denom


def elementary_direct(eigs: Sequence[float], k: int) -> float:
    """e_k by direct expansion: sum of products over all k-subsets.

    Returns 1 for k = 0 and 0 for k > len(eigs).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1.0
    if k > len(eigs):
        return 0.0
    return float(sum(math.prod(c) for c in itertools.combinations(eigs, k)))


def newton_elementary(p: Sequence[float], n: int) -> list[float]:
    """e_1..e_n from power sums via the recursion k*e_k = sum (-1)^(i-1) e_{k-i} p_i."""
    if len(p) < n:
        raise ValueError(f"need {n} power sums, got {len(p)}")
    e = [1.0]
    for k in range(1, n + 1):
        s = 0.0
        for i in range(1, k + 1):
            s += (-1) ** (i - 1) * e[k - i] * p[i - 1]
        e.append(s / k)
    return e[1:]


def elementary_closed_form(p: Sequence[float], k: int) -> float:
    """e_k as the partition sum (-1)^k sum prod (-p_j)^n_j / (n_j! j^n_j)."""
    if len(p) < k:
        raise ValueError(f"need {k} power sums, got {len(p)}")
    total = 0.0
    for mult in partitions(k):
        term = 1.0
        for j, nj in enumerate(mult, start=1):
            if nj:
                term *= (-p[j - 1]) ** nj
        total += term / _partition_denominator(mult)
    return (-1) ** k * total


def bell_polynomial(k: int, x: Sequence[float]) -> float:
    """Complete exponential Bell polynomial B_k(x_1, ..., x_k).

    B_k = sum over partitions of k! / (prod n_j! (j!)^n_j) * prod x_j^n_j;
    the coefficient counts set partitions of a k-set by block-size type.
    B_k(1, ..., 1) is the k-th Bell number.
    """
    if len(x) < k:
        raise ValueError(f"need {k} arguments, got {len(x)}")
    kfact = math.factorial(k)
    total = 0.0
    for mult in partitions(k):
        coeff = Fraction(kfact)
        term = 1.0
        for j, nj in enumerate(mult, start=1):
            if nj:
                coeff /= math.factorial(nj) * math.factorial(j) ** nj
                term *= x[j - 1] ** nj
        total += float(coeff) * term
    return total


def cycle_index_S(k: int, x: Sequence[float]) -> float:
    """Cycle index of the symmetric group S_k evaluated at x_1..x_k.

    Z(S_k)(x) = sum over partitions of prod x_j^n_j / (n_j! j^n_j);
    Z(S_0) = 1.
    """
    if len(x) < k:
        raise ValueError(f"need {k} arguments, got {len(x)}")
    total = 0.0
    for mult in partitions(k):
        term = 1.0
        for j, nj in enumerate(mult, start=1):
            if nj:
                term *= x[j - 1] ** nj
        total += term / _partition_denominator(mult)
    return total


def cycle_index_A(k: int, x: Sequence[float]) -> float:
    """Cycle index of the alternating group A_k evaluated at x_1..x_k.

    For k >= 2 the partition sum carries the parity factor
    1 + (-1)^(n_2 + n_4 + ...), which doubles even classes and kills odd
    ones; together with |A_k| = k!/2 this is the exact group average.
    A_1 is the trivial group, so Z(A_1) = x_1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(x) < k:
        raise ValueError(f"need {k} arguments, got {len(x)}")
    if k == 1:
        return float(x[0])
    total = 0.0
    for mult in partitions(k):
        even_cycles = sum(nj for j, nj in enumerate(mult, start=1) if j % 2 == 0)
        if even_cycles % 2:
            continue
        term = 2.0
        for j, nj in enumerate(mult, start=1):
            if nj:
                term *= x[j - 1] ** nj
        total += term / _partition_denominator(mult)
    return total


def descartes_bound(coeffs: Sequence[float]) -> int:
    """Sign-change bound on the number of positive roots.

    coeffs is a_0..a_n in ascending degree. Zero coefficients are skipped
    entirely, which also implements the divide-out-x reduction for a_0 = 0.
    """
    nonzero = [c for c in coeffs if c != 0]
    if not nonzero:
        raise ValueError("all-zero polynomial has no sign-change bound")
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def _cycle_counts(perm: Sequence[int]) -> dict[int, int]:
    """Cycle-type multiplicities {length: count} of a permutation of 0..k-1."""
    seen = [False] * len(perm)
    counts: dict[int, int] = {}
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return counts


def even_odd_split(k: int, p: Sequence[float]) -> tuple[float, float]:
    """Sum prod p_j^{c_j(sigma)} separately over even and odd permutations.

    The closed-form test value satisfies even - odd = k! * e_k, so the
    moment inequality at level k holds iff even_sum >= odd_sum.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > MAX_ENUMERATION_K:
        raise ValueError(
            f"k = {k} exceeds the enumeration limit {MAX_ENUMERATION_K}; "
            "use the f-sequence path instead"
        )
    if len(p) < k:
        raise ValueError(f"need {k} power sums, got {len(p)}")
    even = odd = 0.0
    for perm in itertools.permutations(range(k)):
        counts = _cycle_counts(perm)
        monomial = 1.0
        for length, c in counts.items():
            monomial *= p[length - 1] ** c
        even_cycles = sum(c for length, c in counts.items() if length % 2 == 0)
        if even_cycles % 2 == 0:
            even += monomial
        else:
            odd += monomial
    return even, odd
