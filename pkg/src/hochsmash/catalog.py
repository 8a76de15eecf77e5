"""Built-in groups, each with the order and class count it must close to."""

from dataclasses import dataclass
from functools import lru_cache

from .groupfile import SCHEMA_VERSION, group_from_data, group_to_data, parse_generators
from .linalg import block_diag, inverse

CATALOG_PREFIX = "catalog:"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    data: dict
    order: int
    classes: int
    in_sl: bool


def _entry(name, m, gens, order, classes, in_sl, description):
    data = {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "cyclotomic_order": m,
        "dim": len(gens[0]),
        "generators": gens,
    }
    return CatalogEntry(name, description, data, order, classes, in_sl)


def _doubled(base):
    gens = [block_diag(g, inverse(g).transpose()) for g in parse_generators(base.data)]
    data = group_to_data(f"{base.name}-doubled", gens)
    return CatalogEntry(data["name"], f"{base.description}, acting on V + V*", data,
                        base.order, base.classes, True)


_BASE = [
    _entry("trivial-1", 1, [[["1"]]], 1, 1, True, "trivial group on k^1"),
    _entry("trivial-2", 1, [[["1", "0"], ["0", "1"]]], 1, 1, True, "trivial group on k^2"),
    _entry("c2-line", 1, [[["-1"]]], 2, 2, False, "C2 = {1, -1} on k[x]"),
    _entry("c3-line", 3, [[["z"]]], 3, 3, False, "C3 = <diag(zeta_3)> on k^1"),
    _entry("c4-line", 4, [[["z"]]], 4, 4, False, "C4 = <diag(zeta_4)> on k^1"),
    _entry("c3-sl2", 3, [[["z", "0"], ["0", "z^2"]]], 3, 3, True,
           "C3 = <diag(zeta_3, zeta_3^-1)> in SL(2)"),
    _entry("c4-sl2", 4, [[["z", "0"], ["0", "-z"]]], 4, 4, True,
           "C4 = <diag(zeta_4, zeta_4^-1)> in SL(2)"),
    _entry("q8", 4, [[["z", "0"], ["0", "-z"]], [["0", "1"], ["-1", "0"]]], 8, 5, True,
           "quaternion group Q8 in SL(2)"),
    _entry("bt24", 4, [
        [["z", "0"], ["0", "-z"]],
        [["0", "1"], ["-1", "0"]],
        [["1/2*z + 1/2", "1/2*z + 1/2"], ["1/2*z - 1/2", "-1/2*z + 1/2"]],
    ], 24, 7, True, "binary tetrahedral group in SL(2)"),
    _entry("klein", 1, [[["-1", "0"], ["0", "1"]], [["1", "0"], ["0", "-1"]]], 4, 4, False,
           "Klein four group diag(+-1, +-1)"),
    _entry("s3-perm", 1, [
        [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
        [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]],
    ], 6, 3, False, "S3 permuting the coordinates of k^3"),
    _entry("s3-sumzero", 1, [[["-1", "1"], ["0", "1"]], [["0", "-1"], ["1", "-1"]]], 6, 3, False,
           "S3 on the plane x1 + x2 + x3 = 0"),
    _entry("a3-sumzero", 1, [[["0", "-1"], ["1", "-1"]]], 3, 3, True,
           "A3 on the plane x1 + x2 + x3 = 0"),
]

_DOUBLED_BASES = ("c2-line", "q8", "s3-sumzero")


@lru_cache(maxsize=None)
def _entries():
    out = list(_BASE)
    by_name = {e.name: e for e in _BASE}
    out.extend(_doubled(by_name[n]) for n in _DOUBLED_BASES)
    return tuple(out)


def catalog():
    """All built-in entries in a fixed order."""
    return list(_entries())


def catalog_names():
    return [e.name for e in _entries()]


def catalog_entry(name):
    for e in _entries():
        if e.name == name:
            return e
    raise KeyError(f"unknown catalog group {name!r}; known: {', '.join(catalog_names())}")


@lru_cache(maxsize=None)
def catalog_group(name):
    return group_from_data(catalog_entry(name).data)
