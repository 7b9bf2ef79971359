"""Exact coefficient arithmetic: rationals, simple extensions, dual numbers.

Three scalar kinds live here.

* Rationals are plain ``fractions.Fraction`` (already normalized and hashable).
* ``ExtElem`` is an element of Q[a]/(p(a)) for a monic irreducible p of degree
  at least 2, stored as a reduced coefficient vector in the generator ``a``.
* ``DualNum`` is a + b*eps with eps^2 = 0 over a base field, used to carry
  first-order deformations through polynomial algebra.

Ring descriptors (``QQ``, ``NumberField``, ``DualRing``) provide the small
protocol the polynomial layer needs: ``zero``, ``one``, ``coerce``,
``invertible``, ``inv`` and an ``is_field`` flag. All scalars are immutable
with structural equality.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Union

from .errors import MixedFields, NotIrreducible, NotMonic, ParseError, WroncritError

Scalar = Union[Fraction, "ExtElem", "DualNum"]


# ---------------------------------------------------------------------------
# small exact polynomial helpers on Fraction lists (used for modular reduction
# and inverses inside NumberField; the full Poly type lives in polyring)

def _trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pdivmod(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    f = list(f)
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    inv_lead = 1 / g[-1]
    while len(f) >= len(g) and _trim(f):
        k = len(f) - len(g)
        c = f[-1] * inv_lead
        q[k] = c
        for i, gi in enumerate(g):
            f[k + i] -= c * gi
        _trim(f)
    return _trim(q), f


def _pmul(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def _pxgcd(f: list[Fraction], g: list[Fraction]):
    """Extended Euclid on Fraction coefficient lists, gcd made monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([a - b for a, b in itertools.zip_longest(s0, _pmul(q, s1), fillvalue=Fraction(0))])
        t0, t1 = t1, _trim([a - b for a, b in itertools.zip_longest(t0, _pmul(q, t1), fillvalue=Fraction(0))])
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


# ---------------------------------------------------------------------------
# rationals

class RationalField:
    """The field of rational numbers; elements are fractions.Fraction."""

    is_field = True

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise MixedFields(f"cannot coerce {v!r} into QQ")

    def invertible(self, a: Fraction) -> bool:
        return a != 0

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# simple extensions Q[a]/(p(a))

class ExtElem:
    """Element of a NumberField, reduced mod the minimal polynomial."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "NumberField", coeffs):
        cs = [Fraction(c) for c in coeffs]
        if len(cs) >= field.degree:
            cs = field._reduce(cs)
        cs += [Fraction(0)] * (field.degree - len(cs))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("ExtElem is immutable")

    def _lift(self, other) -> "ExtElem":
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise MixedFields("elements of different extension fields")
            return other
        if isinstance(other, (int, Fraction)):
            return ExtElem(self.field, [Fraction(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.field, _pmul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self.field.inv(o)

    def __rtruediv__(self, other):
        return self.field.inv(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return self.field.inv(self) ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        if isinstance(other, ExtElem):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __repr__(self):
        return format_scalar(self)


class NumberField:
    """Q[a]/(p(a)) for monic irreducible p of degree >= 2.

    Build through make_extension, which checks monicity and irreducibility.
    Named roots bind labels to elements for readable problem files.
    """

    is_field = True

    def __init__(self, minpoly, roots: dict | None = None):
        mp = tuple(Fraction(c) for c in minpoly)
        if len(mp) < 3:
            raise WroncritError("extension degree must be at least 2")
        if mp[-1] != 1:
            raise NotMonic("minimal polynomial must be monic")
        self.minpoly = mp
        self.roots: dict[str, ExtElem] = {}
        if roots:
            for name, val in roots.items():
                elem = val if isinstance(val, ExtElem) else ExtElem(self, val)
                if elem.field != self:
                    raise MixedFields("named root from a different field")
                if self.eval_minpoly(elem) != 0:
                    raise WroncritError(f"named root {name!r} does not satisfy the minimal polynomial")
                self.roots[name] = elem

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def gen(self) -> ExtElem:
        return ExtElem(self, [0, 1])

    def zero(self) -> ExtElem:
        return ExtElem(self, [0])

    def one(self) -> ExtElem:
        return ExtElem(self, [1])

    def coerce(self, v) -> ExtElem:
        if isinstance(v, ExtElem):
            if v.field != self:
                raise MixedFields("element of a different extension field")
            return v
        if isinstance(v, (int, Fraction)):
            return ExtElem(self, [Fraction(v)])
        raise MixedFields(f"cannot coerce {v!r} into {self!r}")

    def _reduce(self, coeffs: list[Fraction]) -> list[Fraction]:
        coeffs = list(coeffs)
        n = self.degree
        for k in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[k]
            if c:
                coeffs[k] = Fraction(0)
                for i in range(n):
                    coeffs[k - n + i] -= c * self.minpoly[i]
        return coeffs[:n]

    def eval_minpoly(self, x: ExtElem) -> ExtElem:
        out = self.zero()
        for c in reversed(self.minpoly):
            out = out * x + c
        return out

    def invertible(self, a: ExtElem) -> bool:
        return bool(self.coerce(a))

    def inv(self, a: ExtElem) -> ExtElem:
        a = self.coerce(a)
        if not a:
            raise ZeroDivisionError("inverse of zero in extension field")
        g, s, _ = _pxgcd(_trim(list(a.coeffs)), list(self.minpoly))
        if len(g) != 1:
            raise NotIrreducible("minimal polynomial is not irreducible (zero divisor found)")
        return ExtElem(self, s)

    def complex_gen(self) -> complex:
        """Deterministic complex embedding of the generator.

        Chooses the root of the minimal polynomial with the largest imaginary
        part, then the largest real part. x^2+x+1 maps a to exp(2*pi*i/3);
        x^2-2 maps a to +sqrt(2).
        """
        import numpy as np

        rts = np.roots([float(c) for c in reversed(self.minpoly)])
        key = sorted(rts, key=lambda r: (r.imag, r.real))
        return complex(key[-1])

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("NumberField", self.minpoly))

    def __repr__(self):
        return f"QQ[a]/({format_minpoly(self.minpoly)})"


def format_minpoly(mp) -> str:
    terms = []
    for i in range(len(mp) - 1, -1, -1):
        c = mp[i]
        if c == 0:
            continue
        if i == 0:
            body = str(c)
        elif i == 1:
            body = "a" if abs(c) == 1 else f"{abs(c)}*a"
            if c == -1:
                body = "a"
        else:
            body = f"a^{i}" if abs(c) == 1 else f"{abs(c)}*a^{i}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# irreducibility over Q by bounded integer trial factorization

_CANDIDATE_CAP = 2_000_000


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _to_monic_integer(mp: tuple[Fraction, ...]) -> list[int]:
    """Substitute x -> y/m and scale so the polynomial is monic with integer
    coefficients; irreducibility over Q is preserved."""
    n = len(mp) - 1
    m = 1
    for c in mp:
        m = m * c.denominator // math.gcd(m, c.denominator)
    return [int(mp[i] * m ** (n - i)) for i in range(n + 1)]


def _divides_int(g: list[int], h: list[int]) -> bool:
    """Exact division test of monic integer g by monic integer h."""
    f = [Fraction(c) for c in g]
    _, r = _pdivmod(f, [Fraction(c) for c in h])
    return not r


def is_irreducible(minpoly) -> bool:
    """Irreducibility over Q of a monic rational polynomial, by bounded trial
    factorization over candidate factor degrees. Desk scale: raises on inputs
    whose candidate enumeration would be enormous."""
    mp = tuple(Fraction(c) for c in minpoly)
    if mp[-1] != 1:
        raise NotMonic("irreducibility check expects a monic polynomial")
    n = len(mp) - 1
    if n == 1:
        return True
    g = _to_monic_integer(mp)
    if g[0] == 0:
        return False
    bound = 1 + max(abs(c) for c in g[:-1])
    for k in range(1, n // 2 + 1):
        const_choices = [d * s for d in _int_divisors(g[0]) for s in (1, -1)]
        if k == 1:
            if any(sum(c * r ** i for i, c in enumerate(g)) == 0 for r in const_choices):
                return False
            continue
        ranges = []
        total = len(const_choices)
        for j in range(1, k):
            b = math.comb(k, k - j) * bound ** (k - j)
            total *= 2 * b + 1
            if total > _CANDIDATE_CAP:
                raise WroncritError(
                    "minimal polynomial exceeds the desk-scale irreducibility check")
            ranges.append(range(-b, b + 1))
        for c0 in const_choices:
            for rest in itertools.product(*ranges):
                h = [c0, *rest, 1]
                if _divides_int(g, h):
                    return False
    return True


def _parse_minpoly_string(s: str) -> tuple:
    sym = next((ch for ch in s if ch.isalpha()), None)
    if sym is None:
        raise ParseError(f"no variable found in minimal polynomial {s!r}")
    return tuple(_parse_symbol_poly(s, sym, _parse_fraction))


def make_extension(minpoly, roots: dict | None = None) -> NumberField:
    """Build Q[a]/(p(a)). p must be monic of degree >= 2 and irreducible.

    minpoly is a coefficient sequence (ascending) or a string like
    "x^2+x+1" in any single symbol.
    """
    if isinstance(minpoly, str):
        minpoly = _parse_minpoly_string(minpoly)
    mp = tuple(Fraction(c) for c in minpoly)
    if len(mp) < 3:
        raise WroncritError("extension degree must be at least 2")
    if mp[-1] != 1:
        raise NotMonic("minimal polynomial must be monic")
    if not is_irreducible(mp):
        raise NotIrreducible(f"{format_minpoly(mp)} factors over the rationals")
    return NumberField(mp, roots)


# ---------------------------------------------------------------------------
# dual numbers F[eps]/(eps^2)

class DualRing:
    """Base field adjoined a square-zero eps. Not a field: a + b*eps is
    invertible exactly when a is."""

    is_field = False

    def __init__(self, base):
        if not getattr(base, "is_field", False):
            raise WroncritError("dual ring needs a field as base")
        self.base = base

    def zero(self) -> "DualNum":
        return DualNum(self, self.base.zero(), self.base.zero())

    def one(self) -> "DualNum":
        return DualNum(self, self.base.one(), self.base.zero())

    @property
    def eps(self) -> "DualNum":
        return DualNum(self, self.base.zero(), self.base.one())

    def coerce(self, v) -> "DualNum":
        if isinstance(v, DualNum):
            if v.ring != self:
                raise MixedFields("dual number over a different base")
            return v
        return DualNum(self, self.base.coerce(v), self.base.zero())

    def invertible(self, d: "DualNum") -> bool:
        d = self.coerce(d)
        return self.base.invertible(d.a)

    def inv(self, d: "DualNum") -> "DualNum":
        d = self.coerce(d)
        ia = self.base.inv(d.a)
        return DualNum(self, ia, -d.b * ia * ia)

    def __eq__(self, other):
        return isinstance(other, DualRing) and self.base == other.base

    def __hash__(self):
        return hash(("DualRing", self.base))

    def __repr__(self):
        return f"{self.base!r}[eps]"


class DualNum:
    """a + b*eps with eps^2 = 0; (a+b eps)(c+d eps) = ac + (ad+bc) eps."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: DualRing, a, b):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "a", ring.base.coerce(a))
        object.__setattr__(self, "b", ring.base.coerce(b))

    def __setattr__(self, *a):
        raise AttributeError("DualNum is immutable")

    def _lift(self, other):
        if isinstance(other, DualNum):
            if other.ring != self.ring:
                raise MixedFields("dual numbers over different bases")
            return other
        try:
            return self.ring.coerce(other)
        except (MixedFields, TypeError):
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return DualNum(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return DualNum(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return DualNum(self.ring, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return DualNum(self.ring, self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self.ring.inv(o)

    def __rtruediv__(self, other):
        return self.ring.inv(self) * other

    def __pow__(self, n: int):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, DualNum):
            return self.ring == other.ring and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction, ExtElem)):
            return self.a == other and not self.b
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return format_scalar(self)


def dual_lift(a, b) -> DualNum:
    """Pair two base-field scalars into a + b*eps, inferring the base."""
    base = None
    for v in (a, b):
        if isinstance(v, ExtElem):
            if base is not None and base != v.field:
                raise MixedFields("components live in different fields")
            base = v.field
        elif isinstance(v, DualNum):
            raise MixedFields("components of a dual number must come from the base field")
    if base is None:
        base = QQ
    ring = DualRing(base)
    return DualNum(ring, base.coerce(a), base.coerce(b))


# ---------------------------------------------------------------------------
# floating complex scalars
#
# Used by the numeric paths (root finding, certification of floating
# candidates).  Not exact: equality of elements is bitwise, so callers
# compare against tolerances themselves.

class ComplexField:
    """Machine-precision complex numbers wearing the ring protocol."""

    is_field = True

    def zero(self) -> complex:
        return 0j

    def one(self) -> complex:
        return 1 + 0j

    def coerce(self, v) -> complex:
        if isinstance(v, (complex, float, int, Fraction)):
            return complex(v)
        if isinstance(v, ExtElem):
            return embed_scalar(v)
        raise MixedFields(f"cannot coerce {v!r} into CC")

    def invertible(self, a: complex) -> bool:
        return a != 0

    def inv(self, a: complex) -> complex:
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, ComplexField)

    def __hash__(self):
        return hash("CC")

    def __repr__(self):
        return "CC"


CC = ComplexField()


# ---------------------------------------------------------------------------
# scalar parsing and formatting
#
# Serialization forms: rationals "p/q" (q omitted when 1); extension elements
# "c0 + c1*a + c2*a^2" in the generator a (named roots accepted as bare
# labels); dual numbers "u + v*eps".

_TERM_RE = re.compile(r"^([+-]?[0-9/]*)\s*\*?\s*([A-Za-z_][A-Za-z_0-9]*)?(?:\^([0-9]+))?$")


def _split_terms(s: str) -> list[str]:
    """Split on top-level + and - (keeping signs), respecting parentheses."""
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        if ch in "+-" and depth == 0 and cur.strip() and cur.strip()[-1] not in "+-*/^(":
            out.append(cur.strip())
            cur = ch
        else:
            cur += ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    if cur.strip():
        out.append(cur.strip())
    return out


def _parse_symbol_poly(s: str, symbol: str, coeff_parse) -> list:
    """Parse a sum of terms c*symbol^k into a coefficient list (index k)."""
    coeffs: dict[int, object] = {}
    terms = _split_terms(s)
    if not terms:
        raise ParseError(f"empty scalar string {s!r}")
    for term in terms:
        t = term.replace(" ", "")
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if not t:
            raise ParseError(f"dangling sign in {s!r}")
        if t.startswith("("):
            close = t.index(")")
            coeff_str = t[1:close]
            rest = t[close + 1:].lstrip("*")
        else:
            m = _TERM_RE.match(t)
            if not m or (m.group(2) not in (None, symbol)):
                raise ParseError(f"cannot parse term {term!r}")
            coeff_str = m.group(1) or "1"
            rest = ""
            if m.group(2) == symbol:
                rest = symbol + (f"^{m.group(3)}" if m.group(3) else "")
        if rest == "":
            power = 0
        elif rest == symbol:
            power = 1
        elif rest.startswith(symbol + "^"):
            power = int(rest[len(symbol) + 1:])
        else:
            raise ParseError(f"cannot parse term {term!r}")
        if coeff_str in ("", "+"):
            coeff_str = "1"
        coeff = coeff_parse(coeff_str)
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
    out = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return out


def _parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {s!r}") from e


def parse_scalar(s: str, ring) -> Scalar:
    """Parse a scalar string in the given ring (QQ, NumberField or DualRing)."""
    s = s.strip()
    if isinstance(ring, RationalField):
        return _parse_fraction(s)
    if isinstance(ring, NumberField):
        if s in ring.roots:
            return ring.roots[s]
        coeffs = _parse_symbol_poly(s, "a", lambda c: _parse_fraction(c))
        return ExtElem(ring, coeffs)
    if isinstance(ring, DualRing):
        coeffs = _parse_symbol_poly(s, "eps", lambda c: parse_scalar(c, ring.base))
        if len(coeffs) > 2:
            raise ParseError("eps^2 vanishes; dual numbers have only u + v*eps")
        a = coeffs[0] if coeffs else 0
        b = coeffs[1] if len(coeffs) > 1 else 0
        return DualNum(ring, a, b)
    raise ParseError(f"unknown ring {ring!r}")


def _fmt_fraction(q: Fraction) -> str:
    return str(q)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return _fmt_fraction(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return repr(x.real)
        return f"({x.real!r}{'+' if x.imag >= 0 else '-'}{abs(x.imag)!r}j)"
    if isinstance(x, ExtElem):
        parts = []
        for i, c in enumerate(x.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = _fmt_fraction(abs(c))
            else:
                sym = "a" if i == 1 else f"a^{i}"
                body = sym if abs(c) == 1 else f"{_fmt_fraction(abs(c))}*{sym}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"
    if isinstance(x, DualNum):
        a_str = format_scalar(x.a)
        if not x.b:
            return a_str
        b_str = format_scalar(x.b)
        sign = "+"
        if b_str.startswith("-") and not any(op in b_str[1:] for op in "+-"):
            sign, b_str = "-", b_str[1:]
        if any(op in b_str for op in "+-"):
            b_str = f"({b_str})"
        eps_part = "eps" if b_str == "1" else f"{b_str}*eps"
        return f"{a_str} {sign} {eps_part}"
    raise ParseError(f"cannot format {x!r}")


def ring_of(x: Scalar):
    """Ring descriptor a scalar belongs to."""
    if isinstance(x, (int, Fraction)):
        return QQ
    if isinstance(x, (float, complex)):
        return CC
    if isinstance(x, ExtElem):
        return x.field
    if isinstance(x, DualNum):
        return x.ring
    raise MixedFields(f"not a scalar: {x!r}")


def common_ring(*xs):
    """Smallest ring descriptor containing all given scalars."""
    ring = QQ
    for x in xs:
        r = ring_of(x)
        if r == ring or isinstance(r, RationalField):
            continue
        if isinstance(ring, RationalField):
            ring = r
        elif ring != r:
            raise MixedFields("scalars from incompatible rings")
    return ring


def embed_scalar(x: Scalar, gen: complex | None = None) -> complex:
    """Numeric value of an exact scalar under a field embedding."""
    if isinstance(x, (int, Fraction, float, complex)):
        return complex(x)
    if isinstance(x, ExtElem):
        if gen is None:
            gen = x.field.complex_gen()
        out = 0j
        for c in reversed(x.coeffs):
            out = out * gen + complex(c)
        return out
    raise MixedFields(f"no complex embedding for {x!r}")
