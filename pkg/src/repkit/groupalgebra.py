"""The convolution algebra of k-valued functions on a finite group."""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import FieldError
from .exactfield import Field, FieldElement
from .group import FiniteGroup
from .linalg import Matrix
from .rep import Character, Representation


class GroupFunction:
    __slots__ = ("group", "field", "values")

    def __init__(self, group: FiniteGroup, field: Field, values: Sequence | Mapping):
        if isinstance(values, Mapping):
            raw = [field.zero] * group.order
            for key, v in values.items():
                x = group.index(key) if isinstance(key, str) else int(key)
                raw[x] = field.coerce(v)
        else:
            if len(values) != group.order:
                raise ValueError(f"need {group.order} values, got {len(values)}")
            raw = [field.coerce(v) for v in values]
        self.group = group
        self.field = field
        self.values = tuple(raw)

    @classmethod
    def _raw(cls, group: FiniteGroup, field: Field, values) -> "GroupFunction":
        f = cls.__new__(cls)
        f.group, f.field, f.values = group, field, tuple(values)
        return f

    @classmethod
    def delta(cls, group: FiniteGroup, field: Field, x: int) -> "GroupFunction":
        vals = [field.zero] * group.order
        vals[x] = field.one
        return cls._raw(group, field, vals)

    @classmethod
    def from_character(cls, chi: Character) -> "GroupFunction":
        return cls._raw(chi.group, chi.field, chi.values)

    def __getitem__(self, x: int) -> FieldElement:
        return FieldElement(self.field, self.values[x])

    def _same(self, other: "GroupFunction"):
        if self.group != other.group:
            raise FieldError("functions on different groups")
        if self.field != other.field:
            raise FieldError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        self._same(other)
        F = self.field
        return GroupFunction._raw(self.group, F, [F.add(a, b) for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "GroupFunction") -> "GroupFunction":
        self._same(other)
        F = self.field
        return GroupFunction._raw(self.group, F, [F.sub(a, b) for a, b in zip(self.values, other.values)])

    def __mul__(self, a) -> "GroupFunction":
        F = self.field
        a = F.coerce(a)
        return GroupFunction._raw(self.group, F, [F.mul(a, v) for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupFunction):
            return NotImplemented
        return self.group == other.group and self.field == other.field and self.values == other.values

    def __hash__(self):
        return hash((self.group, self.field, self.values))

    def __repr__(self):
        body = ", ".join(f"{lab}: {FieldElement(self.field, v)}" for lab, v in zip(self.group.labels, self.values))
        return f"GroupFunction({{{body}}})"


def convolve(f1: GroupFunction, f2: GroupFunction) -> GroupFunction:
    """(f1 * f2)(z) = sum over x y = z of f1(x) f2(y)."""
    f1._same(f2)
    G, F = f1.group, f1.field
    out = [F.zero] * G.order
    for x, a in enumerate(f1.values):
        if F.is_zero(a):
            continue
        row = G.table[x]
        for y, b in enumerate(f2.values):
            if not F.is_zero(b):
                z = row[y]
                out[z] = F.add(out[z], F.mul(a, b))
    return GroupFunction._raw(G, F, out)


def is_class_function(f: GroupFunction) -> bool:
    return all(len({f.values[x] for x in cls}) == 1 for cls in f.group.conjugacy_classes)


def central_witness(f: GroupFunction) -> int | None:
    """First x with delta_x * f != f * delta_x, or None if f is central."""
    G, F = f.group, f.field
    for x in range(G.order):
        d = GroupFunction.delta(G, F, x)
        if convolve(d, f) != convolve(f, d):
            return x
    return None


def central_test(f: GroupFunction) -> bool:
    return central_witness(f) is None


def class_function_space(G: FiniteGroup, F: Field) -> list[GroupFunction]:
    """Indicator functions of the conjugacy classes, in class order."""
    basis = []
    for cls in G.conjugacy_classes:
        vals = [F.zero] * G.order
        for x in cls:
            vals[x] = F.one
        basis.append(GroupFunction._raw(G, F, vals))
    return basis


def operator(f: GroupFunction, rho: Representation) -> Matrix:
    """T_f = sum over x of f(x) rho_x."""
    if f.group != rho.group:
        raise FieldError("function and representation live on different groups")
    if f.field != rho.field:
        raise FieldError(f"mixed fields: {f.field} and {rho.field}")
    F = f.field
    result = Matrix.zeros(F, rho.degree, rho.degree)
    for x, a in enumerate(f.values):
        if not F.is_zero(a):
            result = result + rho.matrices[x] * FieldElement(F, a)
    return result
