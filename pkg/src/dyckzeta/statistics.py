"""area, bounce and dinv on Dyck paths, and the q,t-Catalan polynomials."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from .dyck import DyckWord, area_sequence
from .enumeration import catalan, check_semilength

AREA_BOUNCE = "area_bounce"
DINV_AREA = "dinv_area"
MODES = (AREA_BOUNCE, DINV_AREA)
QT_MAX_SEMILENGTH = 14


def area(w: DyckWord) -> int:
    return sum(area_sequence(w))


def bounce(w: DyckWord) -> int:
    """Haglund's bounce statistic.

    The bounce path leaves (0, 0) going north until it meets the start of an
    east step of ``w``, then runs east back to the diagonal, and repeats until
    it reaches (n, n). Each intermediate diagonal touch point ``(j, j)``
    contributes ``n - j``.
    """
    n = w.semilength
    ones_before_zero = []
    ones = 0
    for b in w.bits:
        if b:
            ones += 1
        else:
            ones_before_zero.append(ones)
    total = 0
    j = ones_before_zero[0]
    while j < n:
        total += n - j
        j = ones_before_zero[j]
    return total


def dinv(w: DyckWord) -> int:
    """Pairs ``i < j`` of rows with ``a_i = a_j`` or ``a_i = a_j + 1``."""
    a = area_sequence(w)
    count = 0
    for i, ai in enumerate(a):
        for aj in a[i + 1 :]:
            d = ai - aj
            if d == 0 or d == 1:
                count += 1
    return count


class QTPolynomial:
    """Sparse polynomial in q, t with nonnegative integer coefficients.

    Stored as ``{(q_exp, t_exp): coeff}`` without zero entries.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0 or c < 0:
                raise ValueError(f"negative exponent or coefficient in term {(i, j)}: {c}")
            acc[(int(i), int(j))] = acc.get((int(i), int(j)), 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> QTPolynomial:
        """Sum ``q^i t^j`` over the exponent pairs."""
        return cls(Counter(pairs))

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: QTPolynomial) -> QTPolynomial:
        return QTPolynomial(list(self._terms.items()) + list(other._terms.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def mass(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, q, t):
        return sum(c * q**i * t**j for (i, j), c in self._terms.items())

    def swap(self) -> QTPolynomial:
        return QTPolynomial({(j, i): c for (i, j), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def diff(self, other: QTPolynomial) -> list[tuple[int, int]]:
        """Exponent pairs whose coefficients differ."""
        keys = set(self._terms) | set(other._terms)
        return sorted(k for k in keys if self._terms.get(k, 0) != other._terms.get(k, 0))

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        # q-degree descending, then t-degree descending
        return [(i, j, c) for (i, j), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))]

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            factors = []
            if c != 1 or (i == 0 and j == 0):
                factors.append(str(c))
            if i:
                factors.append("q" if i == 1 else f"q^{i}")
            if j:
                factors.append("t" if j == 1 else f"t^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"QTPolynomial({self.to_text()!r})"

    def to_json(self) -> list[dict]:
        return [{"q": i, "t": j, "c": str(c)} for i, j, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> QTPolynomial:
        return cls([((d["q"], d["t"]), int(d["c"])) for d in data])


def qt_catalan(n: int, mode: str = AREA_BOUNCE, engine: str = "numpy") -> QTPolynomial:
    """C_n(q, t) by exhaustive summation over Dyck(n).

    ``engine="numpy"`` uses the vectorized statistics; ``"python"`` walks the
    words one at a time with the scalar functions above.
    """
    check_semilength(n, QT_MAX_SEMILENGTH)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if engine == "python":
        from .enumeration import enumerate_dyck

        if mode == AREA_BOUNCE:
            pairs = ((area(w), bounce(w)) for w in enumerate_dyck(n))
        else:
            pairs = ((dinv(w), area(w)) for w in enumerate_dyck(n))
        poly = QTPolynomial.from_pairs(pairs)
    elif engine == "numpy":
        from . import kernels
        from .enumeration import chunk_words, plan_chunks

        poly = QTPolynomial()
        for chunk in plan_chunks(n, max(1, catalan(n) // 200_000)):
            poly = poly + kernels.qt_partial(chunk_words(chunk), n, mode)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return poly
