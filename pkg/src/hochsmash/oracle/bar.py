"""Hochschild homology of B = S(V)#G from the normalized bar complex.

``C_n = B (x) (B/k)^(x n)`` with the group in degree 0 and V in degree 1.
``B/k`` drops the unit ``1#e``; products landing in positions >= 1 have
their unit component discarded, which is exactly the normalized quotient.
"""

from itertools import product

from ..errors import SlotTooLarge
from ..exactmath import CyclotomicNumber
from ..linalg import sparse_rank
from .graded import GradedDims
from .koszul import monomials

DEFAULT_SLOT_CAP = 20000


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class _SmashAlgebra:
    """Graded basis and multiplication of S(V)#G up to a degree bound."""

    def __init__(self, G, max_degree):
        self.G = G
        self.d = G.dim
        self.zero = CyclotomicNumber.zero(G.order_m)
        self.one = CyclotomicNumber.one(G.order_m)
        self.basis = {D: [(mono, g) for mono in monomials(self.d, D) for g in range(len(G))]
                      for D in range(max_degree + 1)}
        self.unit = ((0,) * self.d, 0)
        self._act = {}

    def reduced_basis(self, D):
        return [b for b in self.basis[D] if b != self.unit]

    def act(self, g, mono):
        """g applied to a monomial as dict exponent -> coefficient."""
        key = (g, mono)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        if not any(mono):
            res = {mono: self.one}
        else:
            M = self.G.elements[g]
            i = next(k for k, e in enumerate(mono) if e)
            rest = list(mono)
            rest[i] -= 1
            res = {}
            for e, v in self.act(g, tuple(rest)).items():
                for l in range(self.d):
                    c = M[l, i]
                    if c:
                        k = list(e)
                        k[l] += 1
                        k = tuple(k)
                        y = res.get(k, self.zero) + c * v
                        if y:
                            res[k] = y
                        else:
                            res.pop(k, None)
        self._act[key] = res
        return res

    def mul(self, x, y):
        """(a#g)(b#h) = a g(b) # gh."""
        (a, g), (b, h) = x, y
        gh = self.G.mul(g, h)
        out = {}
        for e, c in self.act(g, b).items():
            out[(tuple(u + v for u, v in zip(a, e)), gh)] = c
        return out


def bar_dims(G, n_max, D_max, cap=DEFAULT_SLOT_CAP):
    """Hochschild homology dimensions of S(V)#G for n <= n_max, D <= D_max."""
    B = _SmashAlgebra(G, D_max)
    slots = {}

    def slot(n, D):
        key = (n, D)
        if key not in slots:
            size = 0
            for comp in _compositions(D, n + 1):
                k = len(B.basis[comp[0]])
                for c in comp[1:]:
                    k *= len(B.reduced_basis(c))
                size += k
            if size > cap:
                raise SlotTooLarge(n, D, size, cap)
            basis = []
            for comp in _compositions(D, n + 1):
                factors = [B.basis[comp[0]]] + [B.reduced_basis(c) for c in comp[1:]]
                basis.extend(product(*factors))
            slots[key] = (basis, {b: i for i, b in enumerate(basis)})
        return slots[key]

    def boundary_images(n, D):
        basis, _ = slot(n, D)
        _, tindex = slot(n - 1, D)
        images = []
        for t in basis:
            out = {}

            def add(pos_prod, prefix, suffix, sign, keep_unit):
                for elt, c in pos_prod.items():
                    if not keep_unit and elt == B.unit:
                        continue
                    k = tindex[prefix + (elt,) + suffix]
                    y = out.get(k, B.zero) + (c if sign > 0 else -c)
                    if y:
                        out[k] = y
                    else:
                        out.pop(k, None)

            for i in range(n):
                prod_ = B.mul(t[i], t[i + 1])
                add(prod_, t[:i], t[i + 2:], (-1) ** i, keep_unit=(i == 0))
            prod_ = B.mul(t[n], t[0])
            # the wrapped product lands in position 0
            for elt, c in prod_.items():
                k = tindex[(elt,) + t[1:n]]
                y = out.get(k, B.zero) + (c if n % 2 == 0 else -c)
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            images.append(out)
        return images

    ranks = {}

    def rank(n, D):
        if n == 0:
            return 0
        key = (n, D)
        if key not in ranks:
            ranks[key] = sparse_rank([r for r in boundary_images(n, D) if r])
        return ranks[key]

    dims = {}
    for D in range(D_max + 1):
        for n in range(n_max + 1):
            h = len(slot(n, D)[0]) - rank(n, D) - rank(n + 1, D)
            if h:
                dims[n, D] = h
    return GradedDims("homology", (0, n_max), (0, D_max), dims)
