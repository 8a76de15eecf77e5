"""Finite matrix groups: closure, conjugacy classes, determinants, V^g / V_g."""

from collections import deque
from dataclasses import dataclass

from gmpy2 import mpq

from .errors import NonInvertibleGenerator, OrderExceeded
from .linalg import (
    Matrix,
    block_diag,
    column_space,
    det,
    inverse,
    kernel_basis,
)

DEFAULT_MAX_ORDER = 10000


@dataclass(frozen=True)
class ConjClass:
    rep: int
    members: tuple
    centralizer: tuple

    @property
    def size(self):
        return len(self.members)


@dataclass(frozen=True)
class Subspace:
    """Column span of ``basis`` inside k^ambient."""

    ambient: int
    basis: Matrix

    @property
    def dim(self):
        return self.basis.cols


@dataclass(frozen=True)
class DeterminantCharacter:
    dets: tuple
    in_sl: bool
    sl_kernel: tuple


class MatrixGroup:
    """A finite subgroup of GL_d(Q(zeta_m)) listed element by element.

    ``elements[0]`` is the identity.  Products and inverses are resolved by
    looking up canonical forms, so every index refers to a unique element.
    """

    def __init__(self, elements, generators, order_m, name="group"):
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.order_m = order_m
        self.dim = self.elements[0].rows
        self.name = name
        self._index = {g.key(): i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        if self.elements[0] != Matrix.identity(self.dim, order_m):
            raise ValueError("element 0 must be the identity")
        self._mult = {}
        self._inv = None
        self._classes = None
        self._det = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return f"MatrixGroup({self.name!r}, order={self.order}, dim={self.dim}, m={self.order_m})"

    def index(self, g):
        try:
            return self._index[g.key()]
        except KeyError:
            raise KeyError("matrix is not an element of this group") from None

    def __contains__(self, g):
        return g.key() in self._index

    def mul(self, i, j):
        key = (i, j)
        r = self._mult.get(key)
        if r is None:
            r = self._mult[key] = self.index(self.elements[i] * self.elements[j])
        return r

    def inv(self, i):
        if self._inv is None:
            inv = [None] * len(self)
            for a in range(len(self)):
                if inv[a] is None:
                    b = self.index(inverse(self.elements[a]))
                    inv[a], inv[b] = b, a
            self._inv = tuple(inv)
        return self._inv[i]

    def conj(self, h, g):
        """Index of ``h g h^-1``."""
        return self.mul(self.mul(h, g), self.inv(h))

    def element_order(self, i):
        return element_order(self.elements[i], cap=len(self))

    def classes(self):
        if self._classes is None:
            self._classes = conjugacy_classes(self)
        return self._classes

    def determinant_character(self):
        if self._det is None:
            self._det = determinant_character(self)
        return self._det


def _generator_sort_key(g):
    return tuple(tuple(str(c) for c in e.coeffs) for e in g.entries)


def close_group(generators, max_order=DEFAULT_MAX_ORDER, name="group"):
    """Breadth-first closure of ``generators`` under multiplication."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    d, m = generators[0].rows, generators[0].order
    for g in generators:
        if g.rows != d or g.cols != d:
            raise ValueError("generators must be square matrices of equal size")
        if g.order != m:
            raise ValueError("generators must share one cyclotomic order")
        if not det(g):
            raise NonInvertibleGenerator(f"generator {g} is singular")
    gens = sorted(generators, key=_generator_sort_key)
    identity = Matrix.identity(d, m)
    elements = [identity]
    seen = {identity.key(): 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x * s
            k = y.key()
            if k not in seen:
                seen[k] = len(elements)
                elements.append(y)
                if len(elements) > max_order:
                    raise OrderExceeded(
                        f"closure exceeded {max_order} elements; group infinite or too large"
                    )
                queue.append(y)
    gen_idx = sorted({seen[g.key()] for g in generators})
    return MatrixGroup(elements, gen_idx, m, name=name)


def conjugacy_classes(G):
    """Conjugacy classes in element order (identity class first)."""
    n = len(G)
    assigned = [False] * n
    classes = []
    for g in range(n):
        if assigned[g]:
            continue
        members = sorted({G.conj(h, g) for h in range(n)})
        for x in members:
            assigned[x] = True
        gm = G.elements[g]
        centralizer = tuple(h for h in range(n) if G.elements[h] * gm == gm * G.elements[h])
        classes.append(ConjClass(rep=g, members=tuple(members), centralizer=centralizer))
    return classes


def determinant_character(G):
    dets = tuple(det(g) for g in G.elements)
    kernel = tuple(i for i, x in enumerate(dets) if x == 1)
    kset = set(kernel)
    for a in kernel:
        for b in kernel:
            assert G.mul(a, b) in kset, "determinant-one elements do not form a subgroup"
    return DeterminantCharacter(dets=dets, in_sl=len(kernel) == len(G), sl_kernel=kernel)


def element_order(g, cap=DEFAULT_MAX_ORDER):
    identity = Matrix.identity(g.rows, g.order)
    x = g
    for n in range(1, cap + 1):
        if x == identity:
            return n
        x = x * g
    raise OrderExceeded(f"element order exceeds {cap}")


def reynolds_projector(g, n=None):
    """``(1/n) sum_{k<n} g^k`` for ``g`` of order ``n``."""
    if n is None:
        n = element_order(g)
    acc = Matrix.zero(g.rows, g.cols, g.order)
    x = Matrix.identity(g.rows, g.order)
    for _ in range(n):
        acc = acc + x
        x = x * g
    assert x == Matrix.identity(g.rows, g.order), "g^n != I"
    return acc * mpq(1, n)


def fixed_space(g):
    """V^g = ker(g - I)."""
    return Subspace(g.rows, kernel_basis(g - Matrix.identity(g.rows, g.order)))


def moving_space(g):
    """V_g = im(I - pi_g), the canonical g-stable complement of V^g."""
    pi = reynolds_projector(g)
    return Subspace(g.rows, column_space(Matrix.identity(g.rows, g.order) - pi))


def double(G):
    """G acting on V + V* by ``g -> diag(g, g^-T)``; lands in SL(2d)."""
    elements = [block_diag(g, inverse(g).transpose()) for g in G.elements]
    return MatrixGroup(elements, G.generators, G.order_m, name=f"{G.name}-doubled")
