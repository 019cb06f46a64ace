"""
Independent closed-form structure constants used to cross-check the
general constructions.  Nothing here calls the rewriting engine or the
braided machinery.
"""
from __future__ import annotations

from .scalars import rationals


def quantum_double_of_group(G, field=None):
    """D(G) on the basis δ_h g, index h*|G| + g.

    (δ_h g)(δ_h' g') = [h = g h' g^-1] δ_h g g'.  Returns {(out, (x, y)): 1}.
    """
    field = field or rationals()
    n = G.order
    out = {}
    for h in range(n):
        for g in range(n):
            for h2 in range(n):
                if G.conj(g, h2) != h:
                    continue
                for g2 in range(n):
                    out[(h * n + G.mul(g, g2), (h * n + g, h2 * n + g2))] = field.one()
    return out


def quantum_double_conjugation(G, g, h):
    """g δ_h = δ_{g h g^-1} g, as (index of δ_{ghg^-1} g)."""
    n = G.order
    return G.conj(g, h) * n + g
