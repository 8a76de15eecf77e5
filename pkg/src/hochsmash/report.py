"""Report dictionaries and their two renderings (aligned tables, JSON)."""

import json

from .closedform import COHOMOLOGY, GRADING_TAG, HOMOLOGY, TWISTED

REPORT_VERSION = 1

_LABELS = {HOMOLOGY: "H_{n}", TWISTED: "Htw_{n}", COHOMOLOGY: "H^{n}", "cohomology-duality": "H^{n}"}


def group_summary(G):
    dc = G.determinant_character()
    return {
        "name": G.name,
        "order": G.order,
        "classes": len(G.classes()),
        "dim": G.dim,
        "cyclotomic_order": G.order_m,
        "in_sl": dc.in_sl,
        "sl_kernel_order": len(dc.sl_kernel),
    }


def _series_rows(series_list, offset, trunc):
    return [
        {"n": n, "offset": offset, "coefficients": [int(c) for c in s.window(offset, trunc)]}
        for n, s in enumerate(series_list)
    ]


def table_dict(G, table):
    out = {
        "side": table.side,
        "trunc": table.trunc,
        "offset": table.offset,
        "rows": _series_rows(table.series, table.offset, table.trunc),
    }
    if table.per_class is not None:
        by_rep = {c.rep: c for c in G.classes()}
        out["per_class"] = [
            {
                "rep": rep,
                "class_size": by_rep[rep].size,
                "centralizer_order": len(by_rep[rep].centralizer),
                "det": str(G.determinant_character().dets[rep]),
                "rows": _series_rows(series, table.offset, table.trunc),
            }
            for rep, series in sorted(table.per_class.items())
        ]
    return out


def duality_dict(rep):
    def witness(w):
        if w is None:
            return None
        n, degree, lhs, rhs = w
        return {"n": n, "degree": degree, "cohomology": lhs, "shifted_homology": rhs}

    return {
        "dim": rep.dim,
        "trunc": rep.trunc,
        "window": [-rep.dim, rep.trunc - rep.dim],
        "in_sl": rep.in_sl,
        "twisted_match": list(rep.twisted_match),
        "untwisted_match": list(rep.untwisted_match),
        "twisted_ok": rep.twisted_ok,
        "untwisted_ok": rep.untwisted_ok,
        "first_twisted_mismatch": witness(rep.first_twisted_mismatch),
        "first_untwisted_mismatch": witness(rep.first_untwisted_mismatch),
    }


def compare_dims(expected, actual, n_range, degree_range):
    """First (n, D, expected, actual) where two dimension lookups differ, or None."""
    for n in range(n_range[0], n_range[1] + 1):
        for D in range(degree_range[0], degree_range[1] + 1):
            a, b = expected(n, D), actual(n, D)
            if a != b:
                return {"n": n, "degree": D, "expected": a, "actual": b}
    return None


def make_report(command, G, body, seconds, window=None):
    report = {
        "report_version": REPORT_VERSION,
        "command": command,
        "grading": GRADING_TAG,
        "group": group_summary(G) if G is not None else None,
        "window": window,
        "timing": {"seconds": round(seconds, 3)},
    }
    report.update(body)
    return report


def strip_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


# -- table rendering ---------------------------------------------------------

def _render_rows(rows, label, width):
    lines = []
    for r in rows:
        cells = " ".join(f"{c:>{width}}" for c in r["coefficients"])
        lines.append(f"  {label.format(n=r['n']):<8} {cells}")
    return lines


def _render_series(side, block):
    label = _LABELS.get(side, "n={n}")
    lo, trunc = block["offset"], block["trunc"]
    degrees = list(range(lo, trunc + 1))
    values = [c for r in block["rows"] for c in r["coefficients"]] + degrees
    width = max(len(str(v)) for v in values) if values else 1
    lines = [f"{side} series, internal degrees {lo}..{trunc} (offset {lo})"]
    lines.append("  " + f"{'t^':<8} " + " ".join(f"{D:>{width}}" for D in degrees))
    lines.extend(_render_rows(block["rows"], label, width))
    for cls in block.get("per_class", []):
        lines.append(
            f"  class rep {cls['rep']} (size {cls['class_size']}, |Z| {cls['centralizer_order']},"
            f" det {cls['det']}):"
        )
        lines.extend("  " + s for s in _render_rows(cls["rows"], label, width))
    return lines


def render_table(report):
    lines = []
    g = report.get("group")
    if g:
        lines.append(
            f"group {g['name']}: |G|={g['order']}, classes={g['classes']}, dim={g['dim']},"
            f" m={g['cyclotomic_order']}, in_SL={g['in_sl']}"
        )
    lines.append(f"grading: {report['grading']}")
    if "series" in report:
        lines.extend(_render_series(report["series"]["side"], report["series"]))
    if "duality" in report:
        du = report["duality"]
        lines.append(f"duality on degrees {du['window'][0]}..{du['window'][1]} (shift t^-{du['dim']})")
        lines.append("  n        " + " ".join(f"{n:>5}" for n in range(du["dim"] + 1)))
        lines.append("  twisted  " + " ".join(f"{str(x):>5}" for x in du["twisted_match"]))
        lines.append("  plain    " + " ".join(f"{str(x):>5}" for x in du["untwisted_match"]))
        for key in ("first_twisted_mismatch", "first_untwisted_mismatch"):
            w = du[key]
            if w:
                lines.append(
                    f"  {key.replace('_', ' ')}: n={w['n']} t^{w['degree']}:"
                    f" cohomology {w['cohomology']} vs shifted homology {w['shifted_homology']}"
                )
    for key in ("oracle", "bar"):
        if key in report:
            for name, res in report[key]["checks"].items():
                verdict = "match" if res["match"] else "MISMATCH"
                lines.append(f"{key} check {name}: {verdict}")
                if res["first_mismatch"]:
                    lines.append(f"  first mismatch: {res['first_mismatch']}")
    if "catalog" in report:
        for e in report["catalog"]:
            lines.append(
                f"  {e['name']:<20} |G|={e['order']:<4} classes={e['classes']:<3}"
                f" dim={e['dim']} m={e['cyclotomic_order']} in_SL={e['in_sl']}  {e['description']}"
            )
    if "verdict" in report:
        lines.append(f"verdict: {report['verdict']}")
    lines.append(f"elapsed: {report['timing']['seconds']} s")
    return "\n".join(lines) + "\n"
