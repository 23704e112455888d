"""Exact sparse polynomials over the integers in indexed generator families.

A generator is a pair ``(family, index)`` such as ``a[-1]`` or ``x[2]``.
Internally a monomial is packed into one Python int: every generator owns a
fixed-width bit field holding its exponent, so multiplying monomials is an
integer addition. Coefficients are Python ints and never overflow.
"""

from __future__ import annotations

import json
import re
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Union

FAMILIES = ("a", "b", "t", "u", "x")

_BITS = 32
_MASK = (1 << _BITS) - 1
_MAX_EXP = (1 << (_BITS - 1)) - 1


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class Generator(NamedTuple):
    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}[{self.index}]"

    def latex(self) -> str:
        return f"{self.family}_{{{self.index}}}"


def gen(family: str, index: int) -> Generator:
    if family not in FAMILIES:
        raise ValueError(f"unknown generator family {family!r}")
    return Generator(family, int(index))


# -- packed monomials ------------------------------------------------------------

_slots: dict[Generator, int] = {}
_slot_gens: list[Generator] = []
_slot_lock = threading.Lock()


def _slot(g: Generator) -> int:
    s = _slots.get(g)
    if s is None:
        with _slot_lock:
            s = _slots.get(g)
            if s is None:
                s = len(_slot_gens)
                _slot_gens.append(g)
                _slots[g] = s
    return s


def _encode(pairs: Iterable[tuple[Generator, int]]) -> int:
    key = 0
    for g, e in pairs:
        if e > _MAX_EXP:
            raise OverflowError(f"exponent {e} too large")
        key += e << (_BITS * _slot(g))
    return key


def _decode(key: int) -> tuple[tuple[Generator, int], ...]:
    out = []
    s = 0
    while key:
        e = key & _MASK
        if e:
            out.append((_slot_gens[s], e))
        key >>= _BITS
        s += 1
    out.sort()
    return tuple(out)


def _exponent(key: int, g: Generator) -> int:
    s = _slots.get(g)
    return 0 if s is None else (key >> (_BITS * s)) & _MASK


Monomial = tuple  # decoded form: tuple[tuple[Generator, int], ...] sorted by generator


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    # graded lex: higher degree first, then the larger exponent on the
    # earliest generator first
    return (-mono_degree(m), tuple((g, -e) for g, e in m))


PolyLike = Union["Polynomial", int, Generator]


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for m, c in items:
            if c:
                k = _encode(m)
                acc[k] = acc.get(k, 0) + int(c)
        self._t = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> Polynomial:
        # t must already be free of zero coefficients
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def generator(cls, family: str, index: int) -> Polynomial:
        return cls._raw({1 << (_BITS * _slot(gen(family, index))): 1})

    @classmethod
    def of(cls, value: PolyLike) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, Generator):
            return cls._raw({1 << (_BITS * _slot(value)): 1})
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Polynomial")

    # -- basic protocol -----------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        """Decoded ``{monomial: coefficient}`` view."""
        return {_decode(k): c for k, c in self._t.items()}

    def items(self) -> list[tuple[Monomial, int]]:
        return [(_decode(k), c) for k, c in self._t.items()]

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Generator)):
            other = Polynomial.of(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: PolyLike) -> Polynomial:
        other = Polynomial.of(other)
        if not other._t:
            return self
        if not self._t:
            return other
        acc = dict(self._t)
        for k, c in other._t.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                del acc[k]
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other: PolyLike) -> Polynomial:
        return self + (-Polynomial.of(other))

    def __rsub__(self, other: PolyLike) -> Polynomial:
        return Polynomial.of(other) - self

    def __mul__(self, other: PolyLike) -> Polynomial:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Polynomial._raw({k: c * other for k, c in self._t.items()})
        other = Polynomial.of(other)
        a, b = self._t, other._t
        if len(a) > len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        get = acc.get
        b_items = list(b.items())
        for k1, c1 in a.items():
            for k2, c2 in b_items:
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        return Polynomial._raw({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        if self._t and k * self.degree() > _MAX_EXP:
            raise OverflowError("exponent too large")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- inspection ---------------------------------------------------------
    def generators(self) -> set[Generator]:
        return {g for k in self._t for g, _ in _decode(k)}

    def families(self) -> set[str]:
        return {g.family for g in self.generators()}

    def degree(self, family: str | None = None) -> int:
        """Total degree, or the degree in one generator family; -1 for zero."""
        if not self._t:
            return -1
        return max(
            sum(e for g, e in _decode(k) if family is None or g.family == family) for k in self._t
        )

    def degree_in(self, g: Generator) -> int:
        """Highest exponent of ``g``; -1 for zero."""
        if not self._t:
            return -1
        return max(_exponent(k, g) for k in self._t)

    def is_homogeneous(self, degree: int | None = None, family: str | None = None) -> bool:
        degs = {sum(e for g, e in _decode(k) if family is None or g.family == family) for k in self._t}
        if len(degs) > 1:
            return False
        return degree is None or not degs or degs == {degree}

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._t)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.items(), key=lambda mc: _mono_key(mc[0]))

    def coefficient(self, monomial: Iterable[tuple[Generator, int]]) -> int:
        return self._t.get(_encode(monomial), 0)

    # -- substitution and division ------------------------------------------
    def substitute(self, mapping: Mapping[Generator, PolyLike] | Callable[[Generator], PolyLike | None]) -> Polynomial:
        """Simultaneous substitution; unmapped generators stay put.

        ``mapping`` is a dict or a callable returning ``None`` for generators
        it leaves alone.
        """
        if not self._t:
            return self
        lookup = mapping.get if isinstance(mapping, Mapping) else mapping
        seen = 0
        for k in self._t:
            seen |= k
        # generators mapped to a single term (renames, scalings, constants)
        simple: list[tuple[int, int, int]] = []
        general: list[tuple[int, Generator, Polynomial]] = []
        s = 0
        while seen:
            if seen & _MASK:
                g = _slot_gens[s]
                img = lookup(g)
                if img is not None:
                    img = Polynomial.of(img)
                    shift = _BITS * s
                    if len(img._t) <= 1:
                        ((ik, ic),) = img._t.items() if img._t else ((0, 0),)
                        simple.append((shift, ik, ic))
                    else:
                        general.append((shift, g, img))
            seen >>= _BITS
            s += 1
        if not simple and not general:
            return self
        smask = 0
        for shift, _, _ in simple:
            smask |= _MASK << shift
        # (key offset, coefficient multiplier) per distinct exponent pattern on the simple slots
        offsets: dict[int, tuple[int, int]] = {}
        acc: dict[int, int] = {}
        get = acc.get
        powers: dict[tuple[Generator, int], Polynomial] = {}
        for orig, c in self._t.items():
            part = orig & smask
            hit = offsets.get(part)
            if hit is None:
                delta, mult = 0, 1
                for shift, ik, ic in simple:
                    e = (part >> shift) & _MASK
                    if e:
                        delta += e * ik - (e << shift)
                        mult *= ic**e
                hit = offsets[part] = (delta, mult)
            if not hit[1]:
                continue
            key = orig + hit[0]
            c *= hit[1]
            if not general:
                acc[key] = get(key, 0) + c
                continue
            factor = Polynomial._raw({0: c})
            for shift, g, img in general:
                e = (orig >> shift) & _MASK
                if e:
                    key -= e << shift
                    if (g, e) not in powers:
                        powers[(g, e)] = img ** e
                    factor = factor * powers[(g, e)]
            for k2, c2 in factor._t.items():
                acc[k2 + key] = get(k2 + key, 0) + c2
        return Polynomial._raw({k: c for k, c in acc.items() if c})

    def divide_exact_linear(self, g: Polynomial) -> Polynomial:
        return divide_exact_linear(self, g)

    # -- serialization ------------------------------------------------------
    def to_text(self) -> str:
        return _format(self, _text_mono, "*")

    def to_latex(self) -> str:
        return _format(self, _latex_mono, " ")

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "coeff": str(c),
                "monomial": [{"family": g.family, "index": g.index, "exp": e} for g, e in m],
            }
            for m, c in self.sorted_terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> Polynomial:
        terms = []
        for term in obj:
            mono = []
            for f in term["monomial"]:
                if int(f["exp"]) < 1:
                    raise ValueError("exponents must be positive")
                mono.append((gen(f["family"], f["index"]), int(f["exp"])))
            terms.append((mono, int(term["coeff"])))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        return parse_polynomial(text)


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({0: 1})


def generator(family: str, index: int) -> Polynomial:
    return Polynomial.generator(family, index)


def difference(u: Generator, v: Generator) -> Polynomial:
    """The polynomial ``u - v``; zero when ``u == v``."""
    if u == v:
        return ZERO
    return Polynomial._raw({1 << (_BITS * _slot(u)): 1, 1 << (_BITS * _slot(v)): -1})


def add(p: PolyLike, q: PolyLike) -> Polynomial:
    return Polynomial.of(p) + q


def mul(p: PolyLike, q: PolyLike) -> Polynomial:
    return Polynomial.of(p) * q


def substitute(p: Polynomial, mapping) -> Polynomial:
    return Polynomial.of(p).substitute(mapping)


def as_difference(g: Polynomial) -> tuple[Generator, Generator]:
    """Split ``u - v`` into ``(u, v)``; raise ValueError for anything else."""
    if len(g) == 2:
        (m1, c1), (m2, c2) = g.items()
        if {c1, c2} == {1, -1} and len(m1) == len(m2) == 1 and m1[0][1] == m2[0][1] == 1:
            if c1 == 1:
                return m1[0][0], m2[0][0]
            return m2[0][0], m1[0][0]
    raise ValueError(f"{g} is not a difference of two generators")


def divide_exact_linear(p: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient of ``p`` by ``g = u - v``.

    Synthetic division with ``u`` as the main variable. Raises
    :class:`NotDivisibleError` when the remainder ``p(u := v)`` is nonzero.
    """
    u, v = as_difference(g)
    if not p:
        return ZERO
    shift = _BITS * _slot(u)
    unit_u = 1 << shift
    unit_v = 1 << (_BITS * _slot(v))
    by_power: dict[int, dict[int, int]] = {}
    for k, c in p._t.items():
        e = (k >> shift) & _MASK
        by_power.setdefault(e, {})[k - e * unit_u] = c
    top = max(by_power)
    quotient: dict[int, int] = {}
    carry: dict[int, int] = {}
    # Horner: carry_{k-1} = p_k + v * carry_k, quotient gets carry_{k-1} * u^(k-1)
    for e in range(top, 0, -1):
        nxt = dict(by_power.get(e, {}))
        for k, c in carry.items():
            kk = k + unit_v
            s = nxt.get(kk, 0) + c
            if s:
                nxt[kk] = s
            else:
                nxt.pop(kk, None)
        carry = nxt
        for k, c in carry.items():
            quotient[k + (e - 1) * unit_u] = c
    remainder = dict(by_power.get(0, {}))
    for k, c in carry.items():
        kk = k + unit_v
        s = remainder.get(kk, 0) + c
        if s:
            remainder[kk] = s
        else:
            remainder.pop(kk, None)
    if remainder:
        raise NotDivisibleError(f"not divisible by {g}: remainder {Polynomial._raw(remainder)}")
    return Polynomial._raw(quotient)


@dataclass(frozen=True)
class FactoredTerm:
    """An unexpanded product ``coeff * prod (u - v)`` of generator differences.

    ``provenance`` records where the term came from, e.g. the Yamanouchi
    symbol of a chain and the column word of a tableau.
    """

    factors: tuple[tuple[Generator, Generator], ...]
    coeff: int = 1
    provenance: tuple = ()

    def expand(self) -> Polynomial:
        result = Polynomial.constant(self.coeff)
        for u, v in self.factors:
            result = result * difference(u, v)
        return result

    def map_factors(self, fn: Callable[[Generator], Generator]) -> FactoredTerm:
        return FactoredTerm(tuple((fn(u), fn(v)) for u, v in self.factors), self.coeff, self.provenance)

    def to_text(self) -> str:
        body = "*".join(f"({u}-{v})" for u, v in self.factors)
        if not body:
            return str(self.coeff)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{self.coeff}*{body}"

    def to_latex(self) -> str:
        body = "".join(f"({u.latex()} - {v.latex()})" for u, v in self.factors)
        if not body:
            return str(self.coeff)
        return body if self.coeff == 1 else f"{self.coeff}{body}"


def is_positive_in_differences(term: FactoredTerm | Iterable[tuple[Generator, Generator]]) -> bool:
    """True iff every factor ``u - v`` has ``u``, ``v`` in one family and ``u.index < v.index``."""
    factors = term.factors if isinstance(term, FactoredTerm) else term
    return all(u.family == v.family and u.index < v.index for u, v in factors)


def factored_sum(terms: Iterable[FactoredTerm]) -> Polynomial:
    acc = ZERO
    for t in terms:
        acc = acc + t.expand()
    return acc


def common_factors(terms: list[FactoredTerm]) -> tuple[tuple[Generator, Generator], ...]:
    """Linear factors shared by every term, with multiplicity, sorted."""
    if not terms:
        return ()
    shared = Counter(terms[0].factors)
    for t in terms[1:]:
        shared &= Counter(t.factors)
    return tuple(sorted(shared.elements()))


def split_common(terms: list[FactoredTerm]) -> tuple[tuple[tuple[Generator, Generator], ...], Polynomial]:
    """Common linear factors of ``terms`` and the expanded sum of what remains."""
    shared = common_factors(terms)
    remaining = ZERO
    for t in terms:
        rest = Counter(t.factors)
        rest.subtract(shared)
        remaining = remaining + FactoredTerm(tuple(sorted(rest.elements())), t.coeff).expand()
    return shared, remaining


def format_factored(terms: list[FactoredTerm], latex: bool = False) -> str:
    """Common linear factors times the expanded remainder.

    For example ``(a[0]-a[3])*(a[-4]+a[-3]+a[0]-a[1]-a[2]-a[3])``.
    """
    shared, remaining = split_common(terms)
    if not remaining:
        return "0"
    if latex:
        pieces = [f"({u.latex()} - {v.latex()})" for u, v in shared]
        rest, sep, compact = remaining.to_latex(), "", False
    else:
        pieces = [f"({u}-{v})" for u, v in shared]
        rest, sep, compact = remaining.to_text(), "*", True
    if compact:
        rest = rest.replace(" ", "")
    if not pieces:
        return rest
    if remaining == -1:
        return "-" + sep.join(pieces)
    if remaining != ONE:
        pieces.append(f"({rest})" if len(remaining) > 1 else rest)
    return sep.join(pieces)


# -- text formatting -------------------------------------------------------------


def _text_mono(m: Monomial) -> str:
    return "*".join(f"{g}^{e}" if e > 1 else str(g) for g, e in m)


def _latex_mono(m: Monomial) -> str:
    return " ".join(f"{g.latex()}^{{{e}}}" if e > 1 else g.latex() for g, e in m)


def _format(p: Polynomial, mono_fmt, times: str) -> str:
    if not p:
        return "0"
    out = []
    for pos, (m, c) in enumerate(p.sorted_terms()):
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = mono_fmt(m)
        else:
            body = f"{mag}{times}{mono_fmt(m)}"
        if pos == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- text parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])\[\s*(-?\d+)\s*\]|([-+*^()]))")


def _tokenize(text: str) -> Iterator[tuple[str, object]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        if m.group(1) is not None:
            yield ("int", int(m.group(1)))
        elif m.group(2) is not None:
            yield ("gen", gen(m.group(2), int(m.group(3))))
        else:
            yield ("op", m.group(4))


def parse_polynomial(text: str) -> Polynomial:
    """Parse the text form, e.g. ``"a[-1]^2 - 3*a[0]*(x[1] - a[2])"``."""
    tokens = list(_tokenize(text))
    if not tokens:
        raise ValueError("empty polynomial text")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr() -> Polynomial:
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek() in (("op", "-"), ("op", "+")):
            op = take()[1]
            acc = acc + term() if op == "+" else acc - term()
        return acc

    def term() -> Polynomial:
        acc = power()
        while peek() == ("op", "*"):
            take()
            acc = acc * power()
        return acc

    def power() -> Polynomial:
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, value = take()
            if kind != "int":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** value
        return base

    def atom() -> Polynomial:
        kind, value = take()
        if kind == "int":
            return Polynomial.constant(value)
        if kind == "gen":
            return Polynomial.of(value)
        if (kind, value) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, value) == ("op", "-"):
            return -atom()
        raise ValueError(f"unexpected token {value!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result
