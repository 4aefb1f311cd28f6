"""Mode calculus for the handful of composite fields the coset embeddings use.

A field is anything with ``parity``, ``weight`` and two methods:
``mode(n, label)`` (the z^{-n-1} coefficient applied to a basis label,
returned as a sparse vector) and ``max_mode(label)`` (every mode above it
kills the label).  The catalog is closed: basic generator fields of a
module, lattice vertex operators, normal-ordered products a_{-1}b,
derivatives, super tensor products and linear combinations.

Tensor-space labels are pairs ``(left, right)``.  The super tensor product
follows the Koszul rule (A (x) B)(l (x) r) = (-1)^{|B||l|} A l (x) B r.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping

from .exact_linalg import vec_axpy

__all__ = [
    "Field", "ModuleField", "IdentityField", "LatticeVertexField",
    "HeisenbergField", "NormalOrdered", "Derivative", "TensorField",
    "Combination", "TensorSpace", "apply_mode", "state_of",
]


class Field:
    parity: int = 0
    weight: Fraction = Fraction(0)

    def __init__(self):
        self._cache: dict = {}

    def mode(self, n: int, label) -> dict:
        key = (n, label)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._mode(n, label) if n <= self.max_mode(label) else {}
            self._cache[key] = hit
        return hit

    def _mode(self, n: int, label) -> dict:
        raise NotImplementedError

    def max_mode(self, label) -> int:
        raise NotImplementedError

    def mode_vec(self, n: int, vec: Mapping) -> dict:
        out: dict = {}
        for lab, c in vec.items():
            vec_axpy(out, c, self.mode(n, lab))
        return out


def apply_mode(field: Field, n: int, vec: Mapping) -> dict:
    return field.mode_vec(n, vec)


def state_of(field: Field, vacuum) -> dict:
    """The state u = u_{-1}|0> of a field."""
    return field.mode(-1, vacuum)


class ModuleField(Field):
    """A generator field whose modes are algebra modes acting on a graded module.

    ``mode_of(n)`` names the algebra mode for the z^{-n-1} coefficient;
    ``space.weight`` must be bounded below by 0.
    """

    def __init__(self, space, mode_of: Callable[[int], object], parity: int, weight,
                 act: Callable | None = None):
        super().__init__()
        self.space = space
        self.mode_of = mode_of
        self.parity = parity
        self.weight = Fraction(weight)
        self._act = act or space.act

    def max_mode(self, label) -> int:
        return math.floor(self.space.weight(label) + self.weight - 1)

    def _mode(self, n, label):
        return self._act(self.mode_of(n), label)


class IdentityField(Field):
    parity = 0
    weight = Fraction(0)

    def max_mode(self, label) -> int:
        return -1

    def _mode(self, n, label):
        return {label: Fraction(1)} if n == -1 else {}


class LatticeVertexField(Field):
    """Y(iota(a^k), z) on a LatticeSpace."""

    def __init__(self, space, k: int):
        super().__init__()
        self.space = space
        self.k = k
        self.parity = (k * space.nu) % 2
        self.weight = Fraction(k * k * space.nu, 2)

    def max_mode(self, label) -> int:
        return self.space.max_vertex_mode(self.k, label)

    def _mode(self, n, label):
        return self.space.vertex_mode(self.k, n, label)


class HeisenbergField(Field):
    """alpha(z) = Y(alpha(-1)1, z) on a LatticeSpace."""

    parity = 0
    weight = Fraction(1)

    def __init__(self, space):
        super().__init__()
        self.space = space

    def max_mode(self, label) -> int:
        return self.space.depth(label)

    def _mode(self, n, label):
        return self.space.heisenberg(n, label)


class NormalOrdered(Field):
    """Y(a_{-1} b, z) = :Y(a, z) Y(b, z): on a space graded by weight >= 0."""

    def __init__(self, a: Field, b: Field, space):
        super().__init__()
        self.a, self.b, self.space = a, b, space
        self.parity = (a.parity + b.parity) % 2
        self.weight = a.weight + b.weight
        self._sign = -1 if (a.parity and b.parity) else 1

    def max_mode(self, label) -> int:
        return math.floor(self.space.weight(label) + self.weight - 1)

    def _mode(self, n, label):
        a, b = self.a, self.b
        out: dict = {}
        # sum_{k <= -1} a_k b_{n-k-1}
        for k in range(n - 1 - b.max_mode(label), 0):
            inner = b.mode(n - k - 1, label)
            if inner:
                vec_axpy(out, 1, a.mode_vec(k, inner))
        # (-1)^{|a||b|} sum_{k >= 0} b_{n-k-1} a_k
        for k in range(0, a.max_mode(label) + 1):
            inner = a.mode(k, label)
            if inner:
                vec_axpy(out, self._sign, b.mode_vec(n - k - 1, inner))
        return out


class Derivative(Field):
    """Y(a_{-2} 1, z) = d/dz Y(a, z); (da)_n = -n a_{n-1}."""

    def __init__(self, a: Field):
        super().__init__()
        self.a = a
        self.parity = a.parity
        self.weight = a.weight + 1

    def max_mode(self, label) -> int:
        return self.a.max_mode(label) + 1

    def _mode(self, n, label):
        if n == 0:
            return {}
        return {k: -n * c for k, c in self.a.mode(n - 1, label).items()}


class TensorSpace:
    def __init__(self, left, right):
        self.left, self.right = left, right
        self.vacuum = (left.vacuum, right.vacuum)

    def parity(self, label) -> int:
        return (self.left.parity(label[0]) + self.right.parity(label[1])) % 2

    def weight(self, label):
        return self.left.weight(label[0]) + self.right.weight(label[1])


class TensorField(Field):
    """Y(u (x) v, z) = Y(u, z) (x) Y(v, z) with Koszul signs."""

    def __init__(self, a: Field, b: Field, left_space):
        super().__init__()
        self.a, self.b = a, b
        self.left_space = left_space
        self.parity = (a.parity + b.parity) % 2
        self.weight = a.weight + b.weight

    def max_mode(self, label) -> int:
        l, r = label
        return self.a.max_mode(l) + self.b.max_mode(r) + 1

    def _mode(self, n, label):
        l, r = label
        a, b = self.a, self.b
        sign = -1 if (b.parity and self.left_space.parity(l)) else 1
        out: dict = {}
        kb = b.max_mode(r)
        for k in range(n - 1 - kb, a.max_mode(l) + 1):
            left = a.mode(k, l)
            if not left:
                continue
            right = b.mode(n - k - 1, r)
            if not right:
                continue
            for lx, cx in left.items():
                for rx, cy in right.items():
                    key = (lx, rx)
                    s = out.get(key, 0) + sign * cx * cy
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out


class Combination(Field):
    """A rational linear combination of fields of one parity."""

    def __init__(self, terms):
        super().__init__()
        self.terms = [(Fraction(c), f) for c, f in terms if c]
        pars = {f.parity for _, f in self.terms}
        if len(pars) > 1:
            raise ValueError("cannot combine fields of different parity")
        self.parity = pars.pop() if pars else 0
        self.weight = max((f.weight for _, f in self.terms), default=Fraction(0))

    def max_mode(self, label) -> int:
        return max((f.max_mode(label) for _, f in self.terms), default=-10 ** 9)

    def _mode(self, n, label):
        out: dict = {}
        for c, f in self.terms:
            vec_axpy(out, c, f.mode(n, label))
        return out
