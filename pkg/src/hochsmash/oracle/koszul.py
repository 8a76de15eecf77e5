"""Degree-truncated twisted Koszul complexes for H(S(V), S(V)g).

The bimodule S(V)g has right action ``(a g) x = a g(x) g``, so the Koszul
differential is built from the linear forms ``f_i = x_i - g(x_i)``:

* homology, ``S(V) (x) Lambda^p V``:
  ``a (x) x_I  ->  sum_j (-1)^j f_(I_j) a (x) x_(I minus I_j)``
* cohomology, ``S(V) (x) Lambda^p V*``:
  ``a (x) phi_I  ->  sum_(i not in I) f_i a (x) phi_i ^ phi_I``

Internal degree is polynomial degree plus p (homology) or minus p
(cohomology).  The centralizer acts diagonally by ``h(a) (x) Lambda h``
(homology) and ``h(a) (x) Lambda h^-T`` (cohomology).
"""

from itertools import combinations, combinations_with_replacement

from gmpy2 import mpq

from ..errors import NonIntegralInvariantDim, NotInCentralizer
from ..exactmath import CyclotomicNumber, as_rational
from ..linalg import Echelon, Matrix, det, inverse, sparse_kernel, sparse_rank
from .graded import GradedDims

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"


def monomials(d, degree):
    """Exponent tuples of total ``degree`` in ``d`` variables, lexicographically descending."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(d), degree):
        e = [0] * d
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _bump(mono, i):
    e = list(mono)
    e[i] += 1
    return tuple(e)


class _Slot:
    __slots__ = ("p", "degree", "basis", "index")

    def __init__(self, p, degree, basis):
        self.p = p
        self.degree = degree
        self.basis = basis
        self.index = {b: i for i, b in enumerate(basis)}

    def __len__(self):
        return len(self.basis)


class HomologySlot:
    """Representatives of H at one slot and a solver for their coordinates."""

    def __init__(self, reps, echelon, tags):
        self.reps = reps
        self._echelon = echelon
        self._tags = tags

    @property
    def dim(self):
        return len(self.reps)

    def coordinates(self, cycle, zero):
        """Coordinates of a cycle's class in the basis ``reps``."""
        coords = [zero] * len(self.reps)
        row = dict(cycle)
        basis = self._echelon.basis
        while row:
            lead = min(row)
            piv = basis.get(lead)
            if piv is None:
                raise ValueError("vector is not a cycle of this slot")
            f = row[lead]
            for j, c in self._tags[lead].items():
                coords[j] = coords[j] + f * c
            for j, v in piv.items():
                x = row.get(j)
                y = -(f * v) if x is None else x - f * v
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
        return coords


class TwistedKoszulComplex:
    """Koszul complex of S(V)g on the internal-degree window of a truncation."""

    def __init__(self, g, side, N):
        if side not in (HOMOLOGY, COHOMOLOGY):
            raise ValueError(f"unknown side {side!r}")
        if not g.is_square():
            raise ValueError("g must be square")
        self.g = g
        self.side = side
        self.N = N
        self.d = d = g.rows
        self.order = g.order
        self.zero = CyclotomicNumber.zero(g.order)
        self.one = CyclotomicNumber.one(g.order)
        # f_i = x_i - g(x_i), as coefficient lists over x_0..x_{d-1}
        self.forms = [
            [(self.one if l == i else self.zero) - g[l, i] for l in range(d)]
            for i in range(d)
        ]
        self.degree_range = (0, N) if side == HOMOLOGY else (-d, N)
        self.wedges = {p: list(combinations(range(d), p)) for p in range(d + 1)}
        self.slots = {}
        for D in range(self.degree_range[0], N + 1):
            for p in range(d + 1):
                poly_deg = D - p if side == HOMOLOGY else D + p
                basis = [(mono, I) for mono in monomials(d, poly_deg) for I in self.wedges[p]]
                self.slots[p, D] = _Slot(p, D, basis)
        self._images = {}
        self._ranks = {}
        self._homology = {}
        self._subst = {}
        self._minors = {}
        self._dual = {}
        self._check_square_zero()

    # -- differential ------------------------------------------------------

    def target(self, p):
        return p - 1 if self.side == HOMOLOGY else p + 1

    def _image(self, p, D, basis_elt):
        """d(basis_elt) as a sparse dict over the target slot's basis."""
        mono, I = basis_elt
        q = self.target(p)
        out = {}
        if not (0 <= q <= self.d):
            return out
        tslot = self.slots[q, D]
        if self.side == HOMOLOGY:
            terms = [((-1) ** j, I[j], I[:j] + I[j + 1:]) for j in range(len(I))]
        else:
            terms = []
            for i in range(self.d):
                if i in I:
                    continue
                pos = sum(1 for x in I if x < i)
                J = tuple(sorted(I + (i,)))
                terms.append(((-1) ** pos, i, J))
        for sign, i, J in terms:
            for l, c in enumerate(self.forms[i]):
                if not c:
                    continue
                k = tslot.index[(_bump(mono, l), J)]
                v = out.get(k, self.zero) + (c if sign > 0 else -c)
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def images(self, p, D):
        """Images of every basis vector of slot (p, D)."""
        key = (p, D)
        if key not in self._images:
            slot = self.slots[key]
            self._images[key] = [self._image(p, D, b) for b in slot.basis]
        return self._images[key]

    def differential(self, p, D):
        """Dense matrix of the differential leaving slot (p, D)."""
        q = self.target(p)
        rows = len(self.slots[q, D]) if 0 <= q <= self.d else 0
        cols = len(self.slots[p, D])
        out = [self.zero] * (rows * cols)
        for j, img in enumerate(self.images(p, D)):
            for i, v in img.items():
                out[i * cols + j] = v
        return Matrix._trusted(rows, cols, out, self.order)

    def _check_square_zero(self):
        for (p, D), slot in self.slots.items():
            q = self.target(p)
            if not (0 <= q <= self.d) or not (0 <= self.target(q) <= self.d):
                continue
            nxt = self.images(q, D)
            for img in self.images(p, D):
                acc = {}
                for k, c in img.items():
                    for k2, c2 in nxt[k].items():
                        acc[k2] = acc.get(k2, self.zero) + c * c2
                if any(acc.values()):
                    raise AssertionError(f"d o d != 0 at slot {(p, D)}")

    def rank_out(self, p, D):
        key = (p, D)
        if key not in self._ranks:
            self._ranks[key] = sparse_rank([r for r in self.images(p, D) if r])
        return self._ranks[key]

    def _incoming(self, p):
        """Source degree of the differential landing in degree p."""
        return p + 1 if self.side == HOMOLOGY else p - 1

    def homology_dim(self, p, D):
        src = self._incoming(p)
        rank_in = self.rank_out(src, D) if 0 <= src <= self.d else 0
        return len(self.slots[p, D]) - self.rank_out(p, D) - rank_in

    def homology_dims(self):
        dims = {}
        for (p, D) in self.slots:
            h = self.homology_dim(p, D)
            if h:
                dims[p, D] = h
        return GradedDims(self.side, (0, self.d), self.degree_range, dims)

    def chain_dims(self):
        return GradedDims(self.side, (0, self.d), self.degree_range,
                          {k: len(s) for k, s in self.slots.items() if len(s)})

    def homology(self, p, D):
        """Representatives of H at (p, D) with a coordinate solver."""
        key = (p, D)
        if key in self._homology:
            return self._homology[key]
        slot = self.slots[key]
        if self.homology_dim(p, D) == 0:
            hs = HomologySlot([], Echelon(), {})
            self._homology[key] = hs
            return hs
        # kernel of the outgoing differential: rows = target coordinates
        q = self.target(p)
        if 0 <= q <= self.d:
            nrows = len(self.slots[q, D])
            rows = [dict() for _ in range(nrows)]
            for j, img in enumerate(self.images(p, D)):
                for i, v in img.items():
                    rows[i][j] = v
            cycles = sparse_kernel(rows, len(slot), self.one)
        else:
            cycles = [{j: self.one} for j in range(len(slot))]
        ech = Echelon()
        tags = {}
        src = self._incoming(p)
        if 0 <= src <= self.d:
            for img in self.images(src, D):
                if img:
                    self._insert(ech, tags, img, {})
        reps = []
        for z in cycles:
            j = len(reps)
            if self._insert(ech, tags, z, {j: self.one}):
                reps.append(z)
        assert len(reps) == self.homology_dim(p, D)
        hs = HomologySlot(reps, ech, tags)
        self._homology[key] = hs
        return hs

    def _insert(self, ech, tags, vec, tag):
        row = dict(vec)
        tag = dict(tag)
        basis = ech.basis
        while row:
            lead = min(row)
            piv = basis.get(lead)
            if piv is None:
                inv = row[lead].inverse()
                basis[lead] = {j: v * inv for j, v in row.items()}
                tags[lead] = {j: v * inv for j, v in tag.items() if v}
                return True
            f = row[lead]
            for j, v in piv.items():
                x = row.get(j)
                y = -(f * v) if x is None else x - f * v
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
            for j, v in tags[lead].items():
                tag[j] = tag.get(j, self.zero) - f * v
        return False

    # -- group action ------------------------------------------------------

    def _linear_action(self, h):
        if self.side == HOMOLOGY:
            return h
        key = h.key()
        A = self._dual.get(key)
        if A is None:
            A = self._dual[key] = inverse(h).transpose()
        return A

    def _substitute(self, h, mono):
        """h applied to a monomial, as a dict exponent-tuple -> coefficient."""
        key = (h.key(), mono)
        hit = self._subst.get(key)
        if hit is not None:
            return hit
        if not any(mono):
            res = {mono: self.one}
        else:
            i = next(k for k, e in enumerate(mono) if e)
            rest = list(mono)
            rest[i] -= 1
            base = self._substitute(h, tuple(rest))
            res = {}
            for l in range(self.d):
                c = h[l, i]
                if not c:
                    continue
                for e, v in base.items():
                    k = _bump(e, l)
                    y = res.get(k, self.zero) + c * v
                    if y:
                        res[k] = y
                    else:
                        res.pop(k, None)
        self._subst[key] = res
        return res

    def _wedge(self, A, I):
        """Lambda^p A applied to e_I: dict J -> minor A[J, I]."""
        key = (A.key(), I)
        hit = self._minors.get(key)
        if hit is not None:
            return hit
        p = len(I)
        res = {}
        for J in self.wedges[p]:
            sub = Matrix._trusted(p, p, [A[r, c] for r in J for c in I], self.order)
            v = det(sub) if p else self.one
            if v:
                res[J] = v
        self._minors[key] = res
        return res

    def act(self, h, p, D, vec):
        """Apply the centralizer element h to a chain vector of slot (p, D)."""
        slot = self.slots[p, D]
        A = self._linear_action(h)
        out = {}
        for k, c in vec.items():
            mono, I = slot.basis[k]
            poly = self._substitute(h, mono)
            wedge = self._wedge(A, I)
            for e, a in poly.items():
                ca = c * a
                for J, w in wedge.items():
                    idx = slot.index[(e, J)]
                    y = out.get(idx, self.zero) + ca * w
                    if y:
                        out[idx] = y
                    else:
                        out.pop(idx, None)
        return out

    def induced_action(self, h, p, D):
        """Matrix of h on H at (p, D) in the representative basis."""
        if h * self.g != self.g * h:
            raise NotInCentralizer("h does not commute with g")
        hs = self.homology(p, D)
        cols = [hs.coordinates(self.act(h, p, D, r), self.zero) for r in hs.reps]
        n = hs.dim
        return Matrix._trusted(n, n, [cols[j][i] for i in range(n) for j in range(n)], self.order)


def build_twisted_complex(g, side, N):
    return TwistedKoszulComplex(g, side, N)


def koszul_invariant_dims(g, Zg, side, N, cross_check=False, complex_=None):
    """Dimensions of ``H(S(V), S(V)g)^{Z_g}`` by Reynolds trace averages.

    With ``cross_check`` the fixed subspace of the averaged action is also
    computed directly and the two dimensions must agree.
    """
    Zg = list(Zg)
    for h in Zg:
        if h * g != g * h:
            raise NotInCentralizer("centralizer element does not commute with g")
    C = complex_ or TwistedKoszulComplex(g, side, N)
    scale = mpq(1, len(Zg))
    dims = {}
    for (p, D) in C.slots:
        if C.homology_dim(p, D) == 0:
            continue
        actions = [C.induced_action(h, p, D) for h in Zg]
        total = C.zero
        for A in actions:
            total = total + A.trace()
        try:
            avg = as_rational(total) * scale
        except ArithmeticError:
            raise NonIntegralInvariantDim(f"trace average {total} is irrational at {(p, D)}") from None
        if avg.denominator != 1 or avg < 0:
            raise NonIntegralInvariantDim(f"trace average {avg} at slot {(p, D)}")
        if cross_check:
            n = actions[0].rows
            pi = actions[0]
            for A in actions[1:]:
                pi = pi + A
            fixed = n - sparse_rank(
                [r for r in _rows(pi * scale - Matrix.identity(n, C.order)) if r]
            )
            if fixed != int(avg):
                raise NonIntegralInvariantDim(
                    f"trace average {avg} disagrees with fixed-space dimension {fixed} at {(p, D)}"
                )
        if avg:
            dims[p, D] = int(avg)
    return GradedDims(side, (0, C.d), C.degree_range, dims)


def _rows(M):
    return [{j: x for j, x in enumerate(M.row(i)) if x} for i in range(M.rows)]


def _class_job(args):
    g, Zg, side, N, cross_check = args
    return koszul_invariant_dims(g, Zg, side, N, cross_check=cross_check)


def class_decomposition_dims(G, side, N, jobs=1, cross_check=False):
    """Sum of ``koszul_invariant_dims`` over one representative per class."""
    tasks = [
        (G.elements[c.rep], [G.elements[h] for h in c.centralizer], side, N, cross_check)
        for c in G.classes()
    ]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_class_job, tasks))
    else:
        parts = [_class_job(t) for t in tasks]
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    return total
