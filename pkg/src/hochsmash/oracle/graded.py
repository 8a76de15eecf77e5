"""Tables of graded dimensions indexed by (homological degree, internal degree)."""

from dataclasses import dataclass, field


@dataclass
class GradedDims:
    """``dims[(n, D)]`` is a dimension; absent keys inside the window are zero."""

    side: str
    n_range: tuple
    degree_range: tuple
    dims: dict = field(default_factory=dict)

    def __getitem__(self, key):
        n, D = key
        if not (self.n_range[0] <= n <= self.n_range[1]):
            return 0
        if not (self.degree_range[0] <= D <= self.degree_range[1]):
            raise KeyError(f"internal degree {D} outside window {self.degree_range}")
        return self.dims.get((n, D), 0)

    def __add__(self, other):
        if (self.side, self.n_range, self.degree_range) != (other.side, other.n_range, other.degree_range):
            raise ValueError("cannot add tables with different windows")
        out = dict(self.dims)
        for k, v in other.dims.items():
            out[k] = out.get(k, 0) + v
        return GradedDims(self.side, self.n_range, self.degree_range, out)

    def row(self, n):
        lo, hi = self.degree_range
        return [self[n, D] for D in range(lo, hi + 1)]

    def rows(self):
        return [self.row(n) for n in range(self.n_range[0], self.n_range[1] + 1)]

    def restrict(self, n_max=None, degree_range=None):
        n_range = (self.n_range[0], self.n_range[1] if n_max is None else n_max)
        degree_range = degree_range or self.degree_range
        dims = {
            (n, D): v for (n, D), v in self.dims.items()
            if n_range[0] <= n <= n_range[1] and degree_range[0] <= D <= degree_range[1]
        }
        return GradedDims(self.side, n_range, degree_range, dims)

    def nonzero(self):
        return {k: v for k, v in self.dims.items() if v}

    def total(self):
        return sum(self.dims.values())
