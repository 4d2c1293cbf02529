"""python-flint backend for bulk minor computation.

Only the shared-subdeterminant sweep over all maximal minors runs here; the
rest of the library works on ``Polynomial``.  Rational input is handled by
factoring out the content of f: every matrix entry is linear in f, so each
maximal minor of f equals content**M times the minor of f / content.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

from .poly import Polynomial


def available() -> bool:
    return flint is not None


def _ctx(nvars: int):
    names = tuple(f"x{i + 1}" for i in range(nvars))
    return flint.fmpz_mpoly_ctx.get(names, "lex")


def to_flint(p: Polynomial, ctx):
    return ctx.from_dict({e: int(c) for e, c in p.items()})


def from_flint(g, nvars: int, scale=1) -> Polynomial:
    return Polynomial({tuple(e): int(c) * scale for e, c in g.to_dict().items()}, nvars)


def minors(J) -> tuple:
    """All nonzero maximal minors of ``J`` as flint polynomials.

    Returns ``(ctx, scale, layer)`` where ``layer`` maps the column bitmask
    to the minor of the primitive part of f; multiply by ``scale`` to get the
    minor of f itself.
    """
    f = J.source
    content = f.content()
    M = len(J.rows)
    ctx = _ctx(f.nvars)
    rows = []
    for row in J.entries:
        rows.append([to_flint(p.scale(1 / content), ctx) if p else None for p in row])
    layer: Dict[int, object] = {0: ctx.from_dict({(0,) * f.nvars: 1})}
    ncols = len(J.cols)
    for r in range(M - 1, -1, -1):
        row = rows[r]
        support = [j for j in range(ncols) if row[j] is not None]
        nxt: Dict[int, object] = {}
        for mask, sub in layer.items():
            for j in support:
                bit = 1 << j
                if mask & bit:
                    continue
                term = row[j] * sub
                if bin(mask & (bit - 1)).count("1") & 1:
                    term = -term
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        layer = {m: v for m, v in nxt.items() if v != 0}
    return ctx, Fraction(content) ** M, layer


def euler_defect(g, ctx, weights: Sequence[int], degree: int):
    """sum_i w_i x_i dg/dx_i - degree * g; zero iff g is homogeneous of that degree."""
    gens = ctx.gens()
    out = g * (-degree)
    for i, w in enumerate(weights):
        out += (gens[i] * g.derivative(i)) * w
    return out
