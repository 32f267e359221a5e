"""Exact fields: the rationals, prime fields GF(p) and cyclotomic fields Q(zeta_n).

Each field object owns the arithmetic on its raw canonical values:

* rationals: ``fractions.Fraction``
* GF(p): ``int`` in ``range(p)``
* Q(zeta_n): ``tuple`` of phi(n) ``Fraction`` coordinates in the power basis
  1, zeta, ..., zeta^(phi(n)-1)

Matrices and polynomials store raw values; :class:`FieldElement` wraps one
value together with its field and overloads the arithmetic operators.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, NamedTuple, Sequence

from .errors import FieldError, NotARootError, ParseError

MAX_CONDUCTOR = 64

_ZERO = Fraction(0)
_ONE = Fraction(1)
_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_INTEGER_RE = re.compile(r"^\s*[+-]?\d+\s*$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def parse_rational(obj: Any) -> Fraction:
    """Parse ``"a/b"``, ``"a"`` or a JSON integer into a Fraction."""
    if isinstance(obj, bool):
        raise ParseError(f"expected a rational, got {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, Fraction):
        return obj
    if not isinstance(obj, str):
        raise ParseError(f"expected a rational string, got {obj!r}")
    m = _RATIONAL_RE.match(obj)
    if m is None:
        raise ParseError(f"malformed rational {obj!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {obj!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# cyclotomic polynomials and power tables


def _int_poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; coefficients constant term first
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of t^k mod Phi_n for k = 0 .. max(n, 2 phi - 1) - 1."""
    phi_poly = cyclotomic_polynomial(n)
    phi = len(phi_poly) - 1
    size = max(n, 2 * phi - 1, 1)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(size):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * phi_poly[i]
    return tuple(rows)


# ---------------------------------------------------------------------------
# fields


class Field:
    """Common interface; concrete fields implement the raw operations."""

    kind: str = ""

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    # raw arithmetic -------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero in " + str(self))
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def conj(self, a):
        return a

    def from_int(self, k: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        raise NotImplementedError

    def parse(self, obj: Any):
        raise NotImplementedError

    def format(self, a) -> Any:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def random(self, rng, bound: int = 5):
        raise NotImplementedError

    def power(self, a, k: int):
        if k < 0:
            a = self.inv(a)
            k = -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def sum(self, values: Iterable):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    # coercion ---------------------------------------------------------------
    def coerce(self, x):
        """Turn ``x`` into a raw value of this field."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError(f"element of {x.field} used in {self}")
            return x.value
        if isinstance(x, bool):
            raise FieldError(f"cannot coerce {x!r} into {self}")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        return self._coerce_other(x)

    def _coerce_other(self, x):
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def __call__(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    def wrap(self, raw) -> "FieldElement":
        return FieldElement(self, raw)


@dataclass(frozen=True)
class RationalField(Field):
    kind = "rational"

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self):
        return _ZERO

    @property
    def one(self):
        return _ONE

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def is_zero(self, a) -> bool:
        return not a

    def from_int(self, k):
        return Fraction(k)

    def from_fraction(self, q):
        return Fraction(q)

    def parse(self, obj):
        return parse_rational(obj)

    def format(self, a):
        return format_rational(a)

    def descriptor(self):
        return {"kind": "rational"}

    def random(self, rng, bound=5):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    kind = "prime"

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, k):
        return k % self.p

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise FieldError(f"denominator of {q} is divisible by {self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def parse(self, obj):
        if isinstance(obj, bool):
            raise ParseError(f"expected a residue, got {obj!r}")
        if isinstance(obj, int):
            return obj % self.p
        if isinstance(obj, str) and _INTEGER_RE.match(obj):
            return int(obj) % self.p
        raise ParseError(f"malformed GF({self.p}) element {obj!r}")

    def format(self, a):
        return str(a)

    def descriptor(self):
        return {"kind": "prime", "p": self.p}

    def random(self, rng, bound=5):
        return rng.randrange(self.p)

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class CyclotomicField(Field):
    n: int
    kind = "cyclotomic"

    def __post_init__(self):
        if self.n < 1:
            raise FieldError("cyclotomic conductor must be >= 1")
        if self.n > MAX_CONDUCTOR:
            raise FieldError(f"conductor {self.n} exceeds the supported maximum {MAX_CONDUCTOR}")

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def degree(self) -> int:
        return euler_phi(self.n)

    @property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.n)

    @property
    def zero(self):
        return (_ZERO,) * self.degree

    @property
    def one(self):
        return (_ONE,) + (_ZERO,) * (self.degree - 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, q: Fraction):
        return tuple(q * x for x in a)

    def mul(self, a, b):
        phi = self.degree
        if phi == 1:
            return (a[0] * b[0],)
        prod = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        table = _power_table(self.n)
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                row = table[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def galois(self, a, k: int):
        """Apply the automorphism zeta -> zeta^k (k coprime to n)."""
        n = self.n
        table = _power_table(n)
        out = [_ZERO] * self.degree
        for i, c in enumerate(a):
            if c:
                row = table[(i * k) % n]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return tuple(out)

    def lift(self, a, step: int):
        """Image of an element of Q(zeta_m), m = n / step, under zeta_m -> zeta_n^step."""
        return self.galois(a, step)

    def galois_exponents(self) -> list[int]:
        return [k for k in range(1, self.n + 1) if math.gcd(k, self.n) == 1][: self.degree]

    def conj(self, a):
        return self.galois(a, -1)

    def norm(self, a) -> Fraction:
        prod = self.one
        for k in self.galois_exponents():
            prod = self.mul(prod, self.galois(a, k))
        return prod[0]

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self}")
        # a^-1 = (product of the other conjugates) / norm(a)
        cofactor = self.one
        for k in self.galois_exponents():
            if k % self.n != 1 % self.n:
                cofactor = self.mul(cofactor, self.galois(a, k))
        nrm = self.mul(a, cofactor)[0]
        return tuple(c / nrm for c in cofactor)

    def is_zero(self, a) -> bool:
        return not any(a)

    def from_int(self, k):
        return (Fraction(k),) + (_ZERO,) * (self.degree - 1)

    def from_fraction(self, q):
        return (Fraction(q),) + (_ZERO,) * (self.degree - 1)

    def root_of_unity(self, j: int):
        """Raw coordinates of zeta_n^j."""
        return tuple(Fraction(c) for c in _power_table(self.n)[j % self.n])

    def is_rational(self, a) -> bool:
        return not any(a[1:])

    def parse(self, obj):
        if isinstance(obj, (list, tuple)):
            if len(obj) != self.degree:
                raise ParseError(f"{self} element needs {self.degree} coordinates, got {len(obj)}")
            return tuple(parse_rational(c) for c in obj)
        return self.from_fraction(parse_rational(obj))

    def _coerce_other(self, x):
        if isinstance(x, (list, tuple)):
            return self.parse(x)
        return super()._coerce_other(x)

    def format(self, a):
        return [format_rational(c) for c in a]

    def descriptor(self):
        return {"kind": "cyclotomic", "n": self.n}

    def random(self, rng, bound=5):
        return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(self.degree))

    def __str__(self):
        return f"QQ(zeta{self.n})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def cyclotomic(n: int) -> CyclotomicField:
    return CyclotomicField(n)


def field_from_descriptor(desc: Any) -> Field:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ParseError(f"malformed field descriptor {desc!r}")
    kind = desc["kind"]
    try:
        if kind == "rational":
            return QQ
        if kind == "prime":
            return PrimeField(int(desc["p"]))
        if kind == "cyclotomic":
            return CyclotomicField(int(desc["n"]))
    except KeyError as exc:
        raise ParseError(f"field descriptor {desc!r} lacks {exc}") from None
    except (TypeError, ValueError):
        raise ParseError(f"malformed field descriptor {desc!r}") from None
    raise ParseError(f"unknown field kind {kind!r}")


def conductor(F: Field) -> int:
    """n for Q(zeta_n), 1 for the rationals; prime fields have none."""
    if isinstance(F, CyclotomicField):
        return F.n
    if isinstance(F, RationalField):
        return 1
    raise FieldError(f"{F} has no cyclotomic conductor")


def embedding(source: Field, target: Field):
    """Return the raw-value map for the natural inclusion ``source -> target``.

    Supported: identity, Q -> anything of characteristic 0, Q -> GF(p)
    (reduction, may fail per element), Q(zeta_m) -> Q(zeta_n) for m | n,
    and Q(zeta_m) -> Q when phi(m) = 1.
    """
    if source == target:
        return lambda a: a
    if isinstance(source, RationalField):
        return target.from_fraction
    if isinstance(source, CyclotomicField):
        if isinstance(target, CyclotomicField) and target.n % source.n == 0:
            step = target.n // source.n
            return lambda a: target.lift(a, step)
        if isinstance(target, RationalField) and source.degree == 1:
            return lambda a: a[0]
    raise FieldError(f"no natural embedding of {source} into {target}")




# ---------------------------------------------------------------------------
# elements


class FieldElement:
    """A value bound to its field, with the usual arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _raw(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields: {self.field} and {other.field}")
            return other.value
        try:
            return self.field.coerce(other)
        except FieldError:
            raise
        except ParseError as exc:
            raise FieldError(str(exc)) from None

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._raw(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._raw(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._raw(other), self.value))

    def __mul__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction, str)):
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, self._raw(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._raw(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._raw(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.power(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.field, self.field.conj(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (FieldError, ParseError, ZeroDivisionError):
            return False

    def __hash__(self):
        if isinstance(self.field, RationalField):
            return hash(self.value)
        return hash((self.field, self.value))

    def to_json(self):
        return self.field.format(self.value)

    def __str__(self):
        enc = self.field.format(self.value)
        if isinstance(enc, list):
            return "[" + ", ".join(enc) + "]"
        return enc

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field != b.field:
        raise FieldError(f"mixed fields: {a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def conjugate(a: FieldElement) -> FieldElement:
    return a.conjugate()


def root_of_unity(F: Field, j: int) -> FieldElement:
    if not isinstance(F, CyclotomicField):
        raise FieldError(f"{F} is not cyclotomic")
    return FieldElement(F, F.root_of_unity(j))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Univariate polynomial over an exact field, constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        raw = [field.coerce(c) for c in coeffs]
        while raw and field.is_zero(raw[-1]):
            raw.pop()
        self.field = field
        self.coeffs = tuple(raw)

    @classmethod
    def _from_raw(cls, field: Field, raw: Sequence) -> "Polynomial":
        raw = list(raw)
        while raw and field.is_zero(raw[-1]):
            raw.pop()
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = tuple(raw)
        return p

    @classmethod
    def variable(cls, field: Field) -> "Polynomial":
        return cls._from_raw(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field: Field, c) -> "Polynomial":
        return cls._from_raw(field, [field.coerce(c)])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> "Polynomial":
        p = cls.constant(field, 1)
        t = cls.variable(field)
        for r in roots:
            p = p * (t - cls.constant(field, r))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            return FieldElement(self.field, self.field.zero)
        return FieldElement(self.field, self.coeffs[-1])

    def __getitem__(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return FieldElement(self.field, self.coeffs[k])
        return FieldElement(self.field, self.field.zero)

    def __len__(self):
        return len(self.coeffs)

    def _other(self, q) -> "Polynomial":
        if isinstance(q, Polynomial):
            if q.field != self.field:
                raise FieldError(f"mixed fields: {self.field} and {q.field}")
            return q
        return Polynomial.constant(self.field, q)

    def __add__(self, q):
        q = self._other(q)
        F = self.field
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial._from_raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, q):
        return self + (-self._other(q))

    def __rsub__(self, q):
        return self._other(q) - self

    def __mul__(self, q):
        q = self._other(q)
        F = self.field
        if not self.coeffs or not q.coeffs:
            return Polynomial._from_raw(F, [])
        out = [F.zero] * (len(self.coeffs) + len(q.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(q.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial._from_raw(F, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.field, 1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, q):
        q = self._other(q)
        if q.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = q.degree
        lead_inv = F.inv(q.coeffs[-1])
        quot = [F.zero] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = F.mul(rem[k + dq], lead_inv)
            quot[k] = c
            if not F.is_zero(c):
                for i, b in enumerate(q.coeffs):
                    rem[k + i] = F.sub(rem[k + i], F.mul(c, b))
        return Polynomial._from_raw(F, quot), Polynomial._from_raw(F, rem[:dq])

    def __floordiv__(self, q):
        return divmod(self, q)[0]

    def __mod__(self, q):
        return divmod(self, q)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldElement)):
            try:
                return self == Polynomial.constant(self.field, other)
            except FieldError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def eval_raw(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __call__(self, x) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(self.field.coerce(x)))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return Polynomial._from_raw(F, [F.mul(c, inv) for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        F = self.field
        return Polynomial._from_raw(F, [F.mul(F.from_int(k), c) for k, c in enumerate(self.coeffs) if k])

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial._from_raw(self.field, [fn(c) for c in self.coeffs])

    def scale_variable(self, a) -> "Polynomial":
        """p(a t)."""
        F = self.field
        a = F.coerce(a)
        out, power = [], F.one
        for c in self.coeffs:
            out.append(F.mul(c, power))
            power = F.mul(power, a)
        return Polynomial._from_raw(F, out)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.field.is_zero(c):
                continue
            cs = str(FieldElement(self.field, c))
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(cs)
            elif c == self.field.one:
                terms.append(mono)
            elif c == self.field.neg(self.field.one):
                terms.append("-" + mono)
            else:
                terms.append(f"({cs})*{mono}" if cs.startswith("[") or "/" in cs else f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial._from_raw(p.field, [])
    return (p * q // poly_gcd(p, q)).monic()


def divide_by_root(p: Polynomial, a) -> Polynomial:
    """Return q with p = (t - a) q; raise NotARootError if p(a) != 0."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no quotient by (t - a)")
    F = p.field
    a = F.coerce(a)
    # synthetic division, highest coefficient first
    out = []
    acc = F.zero
    for c in reversed(p.coeffs):
        acc = F.add(F.mul(acc, a), c)
        out.append(acc)
    remainder = out.pop()
    if not F.is_zero(remainder):
        raise NotARootError(f"{FieldElement(F, a)} is not a root of {p}: value {FieldElement(F, remainder)}")
    return Polynomial._from_raw(F, list(reversed(out)))


# ---------------------------------------------------------------------------
# root search


class RootSearch(NamedTuple):
    roots: list
    complete: bool


def _divisors(m: int) -> list[int]:
    from sympy import divisors

    return divisors(abs(m))


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of a nonzero rational polynomial (rational root theorem).

    Ordered: 0 first, then by absolute value with positive before negative.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    found = []
    if coeffs[0] == 0:
        found.append(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
        if len(coeffs) == 1:
            return found
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    # Cauchy bound on root size prunes candidates before evaluation
    bound = 1 + Fraction(max(abs(c) for c in ints[:-1]), abs(ints[-1]))
    cands = set()
    for u in _divisors(ints[0]):
        for v in _divisors(ints[-1]):
            if Fraction(u, v) <= bound and math.gcd(u, v) == 1:
                cands.add((u, v))
                cands.add((-u, v))
    for u, v in sorted(cands, key=lambda uv: (Fraction(abs(uv[0]), uv[1]), uv[0] < 0)):
        # v^n p(u/v), by Horner in integers
        acc, vpow = 0, 1
        for c in reversed(ints):
            acc = acc * u + c * vpow
            vpow *= v
        if acc == 0:
            found.append(Fraction(u, v))
    return found


def _norm_polynomial(p: Polynomial) -> list[Fraction]:
    F = p.field
    prod = Polynomial.constant(F, 1)
    for k in F.galois_exponents():
        prod = prod * p.map_coefficients(lambda c, k=k: F.galois(c, k))
    if any(not F.is_rational(c) for c in prod.coeffs):
        raise ArithmeticError("norm polynomial is not rational")
    return [c[0] for c in prod.coeffs]


def candidate_roots(p: Polynomial) -> RootSearch:
    """Search for roots of ``p`` in its own field.

    Exhaustive over GF(p) and over Q (rational root theorem).  Over
    Q(zeta_n) only elements r * zeta_n^j with r rational are tried, so the
    result is sound but flagged incomplete.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    F = p.field
    if isinstance(F, PrimeField):
        roots = [x for x in range(F.p) if F.is_zero(p.eval_raw(x))]
        return RootSearch([FieldElement(F, x) for x in roots], True)
    if isinstance(F, RationalField):
        return RootSearch([FieldElement(F, x) for x in rational_roots(p.coeffs)], True)
    if isinstance(F, CyclotomicField):
        found = []
        seen = set()
        for j in range(F.n):
            zj = F.root_of_unity(j)
            q = p.scale_variable(FieldElement(F, zj))
            for r in rational_roots(_norm_polynomial(q)):
                cand = F.scale(zj, r)
                if cand not in seen and F.is_zero(p.eval_raw(cand)):
                    seen.add(cand)
                    found.append(cand)
        return RootSearch([FieldElement(F, x) for x in found], F.degree == 1)
    raise FieldError(f"unsupported field {F}")


# ---------------------------------------------------------------------------
# factorization (delegated to sympy)


def _to_sympy_poly(p: Polynomial):
    import sympy
    from sympy import QQ as SQQ

    t = sympy.Symbol("t")
    F = p.field
    if isinstance(F, PrimeField):
        return sympy.Poly([int(c) for c in reversed(p.coeffs)], t, modulus=F.p)
    if isinstance(F, RationalField):
        return sympy.Poly([SQQ(c.numerator, c.denominator) for c in reversed(p.coeffs)], t, domain=SQQ)
    if isinstance(F, CyclotomicField):
        K = SQQ.cyclotomic_field(F.n)
        cs = [K([SQQ(q.numerator, q.denominator) for q in reversed(c)]) for c in reversed(p.coeffs)]
        return sympy.Poly(cs, t, domain=K)
    raise FieldError(f"unsupported field {F}")


def _from_sympy_coeff(F: Field, c):
    if isinstance(F, PrimeField):
        return int(c) % F.p
    if isinstance(F, RationalField):
        return Fraction(int(c.numerator), int(c.denominator))
    coords = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(c.to_list())]
    return tuple(coords + [_ZERO] * (F.degree - len(coords)))


def factor(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic irreducible factors of ``p`` over its own field, with multiplicities.

    Sorted by degree; ties keep the order produced by the factorizer.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return []
    F = p.field
    _, parts = _to_sympy_poly(p).factor_list()
    out = []
    for g, e in parts:
        raw = [_from_sympy_coeff(F, c) for c in reversed(g.rep.to_list())]
        out.append((Polynomial._from_raw(F, raw).monic(), e))
    out.sort(key=lambda fe: fe[0].degree)
    return out
