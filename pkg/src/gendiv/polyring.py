"""Exact scalars, monomial orders and sparse multivariate polynomials.

Polynomials are immutable mappings from exponent tuples to nonzero
coefficients. Coefficients are :class:`fractions.Fraction` over QQ and
plain ``int`` residues in ``[0, p)`` over GF(p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]


class RingMismatchError(ValueError):
    pass


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly`; ``pos`` is the 0-based offset of the error."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


# ---------------------------------------------------------------------------
# Fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Base field: either QQ (``modulus is None``) or GF(p)."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None) -> None:
        if modulus is not None:
            if not (2 <= modulus < 2**31) or not _is_prime(modulus):
                raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {modulus}")
        self.modulus = modulus

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text == "QQ":
            return cls(None)
        m = re.fullmatch(r"GF\(\s*(\d+)\s*\)", text)
        if not m:
            raise ValueError(f"unknown field {text!r}; expected 'QQ' or 'GF(p)'")
        return cls(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("Field", self.modulus))

    def __repr__(self) -> str:
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    __str__ = __repr__

    def __call__(self, value) -> Fraction | int:
        """Coerce an int, Fraction or numeric string into the field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.modulus is None:
            return Fraction(value)
        v = Fraction(value)
        return (v.numerator * pow(v.denominator, -1, self.modulus)) % self.modulus

    def add(self, a, b):
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a, b):
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a, b):
        return a * b if self.modulus is None else (a * b) % self.modulus

    def neg(self, a):
        return -a if self.modulus is None else (-a) % self.modulus

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.modulus is None else pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def signed(self, a) -> Fraction | int:
        """Representative used for printing: residues above p/2 shown negative."""
        if self.modulus is None:
            return a
        return a - self.modulus if a > self.modulus // 2 else a


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# Monomial orders


def grevlex_key(exps: Sequence[int]) -> tuple:
    return (sum(exps), *(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """A block order over variable-index blocks, grevlex inside every block.

    ``blocks`` partitions ``range(nvars)``; earlier blocks are compared first.
    A single block is plain grevlex; one variable per block is lex.
    """

    blocks: tuple[tuple[int, ...], ...]

    def key(self, m: Monomial) -> tuple:
        if len(self.blocks) == 1:
            return grevlex_key(m)
        return tuple(grevlex_key([m[i] for i in b]) for b in self.blocks)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def grevlex(nvars: int) -> MonomialOrder:
    return MonomialOrder((tuple(range(nvars)),))


# ---------------------------------------------------------------------------
# Rings and polynomials


class PolyRing:
    """k[v1, ..., vm] with a declared variable order (grevlex by default)."""

    def __init__(self, variables: Iterable[str], field: Field = QQ) -> None:
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError(f"invalid variable name {v!r}")
        self.variables = variables
        self.field = field
        self.nvars = len(variables)
        self.index = {v: i for i, v in enumerate(variables)}
        self.order = grevlex(self.nvars)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.field))

    def __repr__(self) -> str:
        return f"PolyRing({', '.join(self.variables)}; {self.field})"

    # constructors
    @cached_property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @cached_property
    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "Poly":
        try:
            i = self.index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} in {self}") from None
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field(1)})

    def gens(self) -> list["Poly"]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        c = self.field(coeff)
        return Poly(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms: Mapping[Monomial, object]) -> "Poly":
        out = {}
        for m, c in terms.items():
            c = self.field(c)
            if c:
                out[tuple(m)] = c
        return Poly(self, out)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def block_order(self, *blocks: Sequence[str]) -> MonomialOrder:
        """Block order from groups of variable names; the groups must partition the ring."""
        idx = tuple(tuple(self.index[v] for v in b) for b in blocks if b)
        seen = sorted(i for b in idx for i in b)
        if seen != list(range(self.nvars)):
            raise ValueError("blocks must partition the ring variables")
        return MonomialOrder(idx)

    def lex_order(self) -> MonomialOrder:
        return MonomialOrder(tuple((i,) for i in range(self.nvars)))

    def convert(self, p: "Poly") -> "Poly":
        """Move ``p`` into this ring, matching variables by name."""
        if p.ring == self:
            return p
        if p.ring.field != self.field:
            raise RingMismatchError(f"field mismatch: {p.ring.field} vs {self.field}")
        pos = []
        for i, v in enumerate(p.ring.variables):
            pos.append(self.index.get(v))
        out = {}
        for m, c in p.terms.items():
            e = [0] * self.nvars
            for i, k in enumerate(m):
                if k:
                    if pos[i] is None:
                        raise RingMismatchError(
                            f"variable {p.ring.variables[i]!r} not in {self}"
                        )
                    e[pos[i]] = k
            out[tuple(e)] = c
        return Poly(self, out)


class Poly:
    """Immutable sparse polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, object]) -> None:
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic protocol
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({print_poly(self)!r})"

    def __str__(self) -> str:
        return print_poly(self)

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        """Terms in strictly descending default (grevlex) order."""
        return iter(self.sorted_terms())

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Monomial, object]]:
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=(order or self.ring.order).key)

    def leading_coefficient(self, order: MonomialOrder | None = None):
        return self.terms[self.leading_monomial(order)]

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def support_variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.variables[i])
        return used

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field(0))

    # -- arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        K = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = K.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        K = self.ring.field
        return Poly(self.ring, {m: K.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        K = self.ring.field
        c = K(c)
        if not c:
            return self.ring.zero
        return Poly(self.ring, {m: K.mul(a, c) for m, a in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Poly":
        K = self.ring.field
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): K.mul(v, c) for m, v in self.terms.items()},
        )

    def monic(self, order: MonomialOrder | None = None) -> "Poly":
        if not self.terms:
            return self
        K = self.ring.field
        return self.scale(K.inv(self.leading_coefficient(order)))

    def subs(self, images: Mapping[str, "Poly"], ring: PolyRing) -> "Poly":
        """Substitute ``images[v]`` for each variable ``v`` (missing ones map to
        the same-named variable of ``ring``); result lives in ``ring``."""
        gens = []
        for v in self.ring.variables:
            if v in images:
                gens.append(ring.convert(images[v]))
            elif v in ring.index:
                gens.append(ring.var(v))
            else:
                gens.append(None)
        result = ring.zero
        powers: dict[tuple[int, int], Poly] = {}
        for m, c in self.terms.items():
            t = ring.const(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                if gens[i] is None:
                    raise RingMismatchError(f"no image for {self.ring.variables[i]!r}")
                if (i, e) not in powers:
                    powers[(i, e)] = gens[i] ** e
                t = t * powers[(i, e)]
            result = result + t
        return result

    def evaluate(self, point: Mapping[str, object]):
        K = self.ring.field
        vals = [K(point[v]) for v in self.ring.variables]
        total = K(0)
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = K.mul(t, v**e if K.modulus is None else pow(v, e, K.modulus))
            total = K.add(total, t)
        return total


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    K = a.ring.field
    out: dict[Monomial, object] = {}
    p = K.modulus
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    if p is None:
        return Poly(a.ring, {m: c for m, c in out.items() if c})
    return Poly(a.ring, {m: c % p for m, c in out.items() if c % p})


# ---------------------------------------------------------------------------
# Parsing and printing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing) -> None:
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind not in ("op",):
            raise PolySyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def expr(self) -> Poly:
        result = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> Poly:
        negate = False
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            negate = True
        result = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return -result if negate else result

    def factor(self) -> Poly:
        base = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be a non-negative integer", pos)
            return base ** int(val)
        return base

    def base(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "int":
            # rational literal a/b, emitted by print_poly over QQ
            if self.peek()[1] == "/":
                self.take()
                dkind, dval, dpos = self.take()
                if dkind != "int" or int(dval) == 0:
                    raise PolySyntaxError("expected a nonzero integer denominator", dpos)
                return self.ring.const(Fraction(int(val), int(dval)))
            return self.ring.const(int(val))
        if kind == "ident":
            if val not in self.ring.index:
                raise PolySyntaxError(f"unknown identifier {val!r}", pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse ``text`` under the grammar

    ``expr := term (('+'|'-') term)*``, ``term := ['-'] factor ('*' factor)*``,
    ``factor := base ('^' uint)?``, ``base := uint | ident | '(' expr ')'``,
    plus ``uint '/' uint`` rational literals so that printed output re-parses.

    >>> R = PolyRing("xy")
    >>> print(parse_poly("(y - x^2)*(y + x^2)", R))
    -x^4 + y^2
    """
    parser = _Parser(text, ring)
    result = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise PolySyntaxError(f"unexpected {val!r}", pos)
    return result


def _format_monomial(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _format_coeff(c: Fraction | int) -> tuple[bool, str]:
    neg = c < 0
    c = -c if neg else c
    if isinstance(c, Fraction) and c.denominator != 1:
        return neg, f"{c.numerator}/{c.denominator}"
    return neg, str(int(c))


def print_poly(p: Poly) -> str:
    """Canonical form: descending grevlex, integer-or-fraction coefficients.

    Fractional coefficients print as ``a/b*m`` and re-parse as rational literals.
    """
    if not p.terms:
        return "0"
    K = p.ring.field
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg, mag = _format_coeff(K.signed(c))
        mono = _format_monomial(p.ring, m)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
