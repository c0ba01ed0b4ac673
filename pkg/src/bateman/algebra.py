"""Exact two-mode ladder algebra over complex rationals.

Symbols b1, b2, b1+, b2+ obey [b_i, b_j+] = delta_ij with all other pairs
commuting.  Scalars are exact: complex rationals attached to unit tags
{1, hbar*omega, i*hbar*lambda}, optionally times the square root of a
squarefree integer (needed for the pi/4 rotation coefficients).  Nothing in
this module touches floating point except the explicit to_complex/to_matrix
evaluators, which exist to cross-validate against the truncated matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import DomainError, MixedUnitError, RadicalMismatch
from .params import PhysicalParams

__all__ = [
    "CQ",
    "ExactScalar",
    "LadderPoly",
    "U_ONE",
    "U_HW",
    "U_IHL",
    "B1_CRE",
    "B2_CRE",
    "B1_ANN",
    "B2_ANN",
    "cre",
    "ann",
    "normal_order",
    "vacuum_pairing",
    "apply_to_monomial_ket",
    "basis_matrix_element",
    "to_matrix",
    "matrix_vacuum_pairing",
    "random_poly",
]

# unit tags; products of two non-trivial tags are out of scope and rejected
U_ONE = "1"
U_HW = "hw"      # hbar*omega
U_IHL = "ihl"    # i*hbar*lambda

# symbol codes; the numeric order is the canonical word order
# (creators before annihilators, mode 1 before mode 2)
B1_CRE, B2_CRE, B1_ANN, B2_ANN = 0, 1, 2, 3

_SYMBOL_NAMES = {B1_CRE: "b1+", B2_CRE: "b2+", B1_ANN: "b1", B2_ANN: "b2"}
_CONJ_MAP = {B1_CRE: B1_ANN, B2_CRE: B2_ANN, B1_ANN: B1_CRE, B2_ANN: B2_CRE}


def cre(mode: int) -> int:
    if mode not in (1, 2):
        raise DomainError(f"mode must be 1 or 2, got {mode}")
    return B1_CRE if mode == 1 else B2_CRE


def ann(mode: int) -> int:
    if mode not in (1, 2):
        raise DomainError(f"mode must be 1 or 2, got {mode}")
    return B1_ANN if mode == 1 else B2_ANN


@dataclass(frozen=True)
class CQ:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value: "CQ | Fraction | int") -> "CQ":
        if isinstance(value, CQ):
            return value
        return CQ(Fraction(value))

    def __add__(self, other: "CQ") -> "CQ":
        return CQ(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CQ") -> "CQ":
        return CQ(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "CQ":
        return CQ(-self.re, -self.im)

    def __mul__(self, other: "CQ | Fraction | int") -> "CQ":
        other = CQ.of(other)
        return CQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "CQ":
        return CQ(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}j)"


def _square_split(n: int) -> tuple[int, int]:
    """n = s**2 * d with d squarefree; returns (s, d).  n must be >= 1."""
    s, d, f = 1, 1, 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            s *= f
        if n % f == 0:
            n //= f
            d *= f
        f += 1
    return s, d * n


class ExactScalar:
    """(c_1 + c_hw*hbar*omega + c_ihl*i*hbar*lambda) * sqrt(root).

    root is a squarefree positive integer; 1 in almost every in-scope value.
    Sums of scalars with different roots are rejected rather than widened.
    """

    __slots__ = ("_coeffs", "root")

    def __init__(self, coeffs: Mapping[str, CQ] | None = None, root: int = 1):
        clean = {u: c for u, c in (coeffs or {}).items() if not c.is_zero()}
        for u in clean:
            if u not in (U_ONE, U_HW, U_IHL):
                raise DomainError(f"unknown unit tag {u!r}")
        if root < 1:
            raise DomainError(f"root must be positive, got {root}")
        if not clean:
            root = 1
        self._coeffs: dict[str, CQ] = clean
        self.root = root

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "ExactScalar":
        return ExactScalar()

    @staticmethod
    def of(value: "ExactScalar | CQ | Fraction | int") -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        return ExactScalar({U_ONE: CQ.of(value)})

    @staticmethod
    def unit(tag: str, coeff: "CQ | Fraction | int" = 1) -> "ExactScalar":
        return ExactScalar({tag: CQ.of(coeff)})

    @staticmethod
    def surd(coeff: "CQ | Fraction | int", root: int) -> "ExactScalar":
        s, d = _square_split(root)
        return ExactScalar({U_ONE: CQ.of(coeff) * Fraction(s)}, d)

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, tag: str) -> CQ:
        return self._coeffs.get(tag, CQ())

    def key(self) -> tuple:
        return (tuple(sorted(self._coeffs.items())), self.root)

    def as_integer_pair(self) -> tuple[int, int]:
        """Interpret as p*hw + q*ihl with integer p, q; raises otherwise."""
        if self.root != 1 or not self.coeff(U_ONE).is_zero():
            raise DomainError(f"not an integer unit pair: {self!r}")
        pair = []
        for tag in (U_HW, U_IHL):
            c = self.coeff(tag)
            if c.im != 0 or c.re.denominator != 1:
                raise DomainError(f"not an integer unit pair: {self!r}")
            pair.append(int(c.re))
        return pair[0], pair[1]

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        other = ExactScalar.of(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.root != other.root:
            raise RadicalMismatch(f"cannot add sqrt({self.root}) and sqrt({other.root}) terms")
        merged = dict(self._coeffs)
        for u, c in other._coeffs.items():
            merged[u] = merged.get(u, CQ()) + c
        return ExactScalar(merged, self.root)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar({u: -c for u, c in self._coeffs.items()}, self.root)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-ExactScalar.of(other))

    def __mul__(self, other: "ExactScalar | CQ | Fraction | int") -> "ExactScalar":
        if isinstance(other, LadderPoly):
            return NotImplemented
        other = ExactScalar.of(other)
        if self.is_zero() or other.is_zero():
            return ExactScalar.zero()
        s, d = _square_split(self.root * other.root)
        scale = CQ(Fraction(s))
        out: dict[str, CQ] = {}
        for u1, c1 in self._coeffs.items():
            for u2, c2 in other._coeffs.items():
                if u1 != U_ONE and u2 != U_ONE:
                    raise MixedUnitError(f"product of unit tags {u1!r} and {u2!r}")
                tag = u2 if u1 == U_ONE else u1
                out[tag] = out.get(tag, CQ()) + c1 * c2 * scale
        return ExactScalar(out, d)

    __rmul__ = __mul__

    def conjugated(self) -> "ExactScalar":
        """i -> -i together with gamma -> -gamma; both unit tags are invariant."""
        return ExactScalar({u: c.conjugate() for u, c in self._coeffs.items()}, self.root)

    def to_complex(self, params: PhysicalParams | None = None) -> complex:
        total = self.coeff(U_ONE).to_complex()
        for tag in (U_HW, U_IHL):
            c = self.coeff(tag)
            if c.is_zero():
                continue
            if params is None:
                raise DomainError(f"unit tag {tag!r} needs params for numeric evaluation")
            factor = (
                params.hbar * params.omega
                if tag == U_HW
                else 1j * params.hbar * params.lam
            )
            total += c.to_complex() * factor
        return total * math.sqrt(self.root)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = [f"{c!r}*{u}" for u, c in sorted(self._coeffs.items())]
        body = " + ".join(parts)
        return body if self.root == 1 else f"({body})*sqrt({self.root})"


ScalarLike = "ExactScalar | CQ | Fraction | int"
Word = tuple[int, ...]


def _accumulate(target: dict[Word, ExactScalar], word: Word, coeff: ExactScalar) -> None:
    new = target.get(word, ExactScalar.zero()) + coeff
    if new.is_zero():
        target.pop(word, None)
    else:
        target[word] = new


class LadderPoly:
    """Finite linear combination of ladder words with exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, "ExactScalar"] | None = None):
        clean: dict[Word, ExactScalar] = {}
        for word, coeff in (terms or {}).items():
            coeff = ExactScalar.of(coeff)
            if coeff.is_zero():
                continue
            for sym in word:
                if sym not in _SYMBOL_NAMES:
                    raise DomainError(f"unknown symbol code {sym!r}")
            _accumulate(clean, tuple(word), coeff)
        self._terms = clean

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "LadderPoly":
        return LadderPoly()

    @staticmethod
    def one() -> "LadderPoly":
        return LadderPoly({(): ExactScalar.of(1)})

    @staticmethod
    def word(symbols: Iterable[int], coeff: "ScalarLike" = 1) -> "LadderPoly":
        return LadderPoly({tuple(symbols): ExactScalar.of(coeff)})

    @staticmethod
    def symbol(sym: int) -> "LadderPoly":
        return LadderPoly.word((sym,))

    # -- queries -----------------------------------------------------------
    @property
    def terms(self) -> dict[Word, ExactScalar]:
        return dict(self._terms)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def constant_term(self) -> ExactScalar:
        return self._terms.get((), ExactScalar.zero())

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "LadderPoly") -> "LadderPoly":
        merged = dict(self._terms)
        for word, coeff in other._terms.items():
            _accumulate(merged, word, coeff)
        return LadderPoly(merged)

    def __sub__(self, other: "LadderPoly") -> "LadderPoly":
        return self + (-other)

    def __neg__(self) -> "LadderPoly":
        return LadderPoly({w: -c for w, c in self._terms.items()})

    def __mul__(self, other: "LadderPoly | ScalarLike") -> "LadderPoly":
        if not isinstance(other, LadderPoly):
            scalar = ExactScalar.of(other)
            return LadderPoly({w: c * scalar for w, c in self._terms.items()})
        out: dict[Word, ExactScalar] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                _accumulate(out, w1 + w2, c1 * c2)
        return LadderPoly(out)

    def __rmul__(self, other: "ScalarLike") -> "LadderPoly":
        return self.__mul__(other)

    def conjugated(self) -> "LadderPoly":
        """Basis-adapted conjugation: reverse words, swap b <-> b+, flip i and gamma."""
        out: dict[Word, ExactScalar] = {}
        for word, coeff in self._terms.items():
            new_word = tuple(_CONJ_MAP[s] for s in reversed(word))
            _accumulate(out, new_word, coeff.conjugated())
        return LadderPoly(out)

    def normal_order(self) -> "LadderPoly":
        """Canonical form: creators left of annihilators, mode 1 left of mode 2.

        Fixed-point rewriting with per-generation merging, which keeps the
        intermediate term count polynomial for number-operator sandwiches.
        """
        done: dict[Word, ExactScalar] = {}
        pending = dict(self._terms)
        while pending:
            nxt: dict[Word, ExactScalar] = {}
            for word, coeff in pending.items():
                idx = -1
                for i in range(len(word) - 1):
                    if word[i] > word[i + 1]:
                        idx = i
                        break
                if idx < 0:
                    _accumulate(done, word, coeff)
                    continue
                a, b = word[idx], word[idx + 1]
                _accumulate(nxt, word[:idx] + (b, a) + word[idx + 2 :], coeff)
                if (a, b) in ((B1_ANN, B1_CRE), (B2_ANN, B2_CRE)):
                    _accumulate(nxt, word[:idx] + word[idx + 2 :], coeff)
            pending = nxt
        return LadderPoly(done)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LadderPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted((w, c.key()) for w, c in self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for word in sorted(self._terms, key=lambda w: (len(w), w)):
            name = " ".join(_SYMBOL_NAMES[s] for s in word) or "1"
            chunks.append(f"({self._terms[word]!r})*{name}")
        return " + ".join(chunks)


def normal_order(poly: LadderPoly) -> LadderPoly:
    return poly.normal_order()


def vacuum_pairing(bra: LadderPoly, ket: LadderPoly) -> ExactScalar:
    """<vac| bra * ket |vac>: the constant term of the normal-ordered product."""
    return (bra * ket).normal_order().constant_term()


def apply_to_monomial_ket(op: LadderPoly, n1: int, n2: int) -> dict[tuple[int, int], ExactScalar]:
    """Amplitudes of op b1+^n1 b2+^n2 |vac> on the monomial states b1+^k1 b2+^k2 |vac>.

    Monomial states keep all coefficients rational: b lowers with weight k,
    b+ raises with weight 1.
    """
    if n1 < 0 or n2 < 0:
        raise DomainError(f"occupation numbers must be >= 0, got ({n1}, {n2})")
    result: dict[tuple[int, int], ExactScalar] = {}
    for word, coeff in op.terms.items():
        states: dict[tuple[int, int], ExactScalar] = {(n1, n2): ExactScalar.of(1)}
        for sym in reversed(word):
            nxt: dict[tuple[int, int], ExactScalar] = {}
            for (k1, k2), amp in states.items():
                if sym == B1_ANN:
                    if k1 > 0:
                        _acc_state(nxt, (k1 - 1, k2), amp * Fraction(k1))
                elif sym == B2_ANN:
                    if k2 > 0:
                        _acc_state(nxt, (k1, k2 - 1), amp * Fraction(k2))
                elif sym == B1_CRE:
                    _acc_state(nxt, (k1 + 1, k2), amp)
                else:
                    _acc_state(nxt, (k1, k2 + 1), amp)
            states = nxt
        for occ, amp in states.items():
            _acc_state(result, occ, amp * coeff)
    return {occ: amp for occ, amp in result.items() if not amp.is_zero()}


def _acc_state(target: dict, occ: tuple[int, int], amp: ExactScalar) -> None:
    new = target.get(occ, ExactScalar.zero()) + amp
    if new.is_zero():
        target.pop(occ, None)
    else:
        target[occ] = new


def basis_matrix_element(m1: int, m2: int, op: LadderPoly, n1: int, n2: int) -> ExactScalar:
    """<<m1, m2| op |n1, n2>> for normalized creator-monomial basis vectors.

    The dual bra carries the same 1/sqrt(m1! m2!) normalization as the ket,
    not a complex conjugate.  The surd bookkeeping keeps results exact even
    when the factorial ratio is not a perfect square.
    """
    if min(m1, m2, n1, n2) < 0:
        raise DomainError("occupation numbers must be >= 0")
    amp = apply_to_monomial_ket(op, n1, n2).get((m1, m2))
    if amp is None:
        return ExactScalar.zero()
    ratio = Fraction(math.factorial(m1) * math.factorial(m2), math.factorial(n1) * math.factorial(n2))
    # sqrt(p/q) = sqrt(p*q)/q
    s, d = _square_split(ratio.numerator * ratio.denominator)
    return amp * ExactScalar.surd(Fraction(s, ratio.denominator), d)


def to_matrix(poly: LadderPoly, ladder, params: PhysicalParams | None = None) -> np.ndarray:
    """Evaluate the poly on truncated matrices; the float cross-validation route."""
    symbol_map = {
        B1_CRE: ladder.a1_dag,
        B2_CRE: ladder.a2_dag,
        B1_ANN: ladder.a1,
        B2_ANN: ladder.a2,
    }
    dim = ladder.space.dim
    total = np.zeros((dim, dim), dtype=complex)
    eye = np.eye(dim, dtype=complex)
    for word, coeff in poly.terms.items():
        acc = eye
        for sym in word:
            acc = acc @ symbol_map[sym]
        total += coeff.to_complex(params) * acc
    return total


def matrix_vacuum_pairing(poly: LadderPoly, ladder, params: PhysicalParams | None = None) -> complex:
    """<vac| poly |vac> evaluated by applying the word matrices to the vacuum vector."""
    symbol_map = {
        B1_CRE: ladder.a1_dag,
        B2_CRE: ladder.a2_dag,
        B1_ANN: ladder.a1,
        B2_ANN: ladder.a2,
    }
    vac = np.zeros(ladder.space.dim, dtype=complex)
    vac[ladder.space.index(0, 0)] = 1.0
    total = 0.0 + 0.0j
    for word, coeff in poly.terms.items():
        vec = vac
        for sym in reversed(word):
            vec = symbol_map[sym] @ vec
        total += coeff.to_complex(params) * vec[ladder.space.index(0, 0)]
    return total


def random_poly(rng, max_degree: int = 6, max_terms: int = 5) -> LadderPoly:
    """Random exact polynomial for the oracle-vs-matrix validation suite."""
    terms: dict[Word, ExactScalar] = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_degree)
        word = tuple(rng.randint(0, 3) for _ in range(length))
        coeff = CQ(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        )
        _accumulate(terms, word, ExactScalar.of(coeff))
    return LadderPoly(terms)
