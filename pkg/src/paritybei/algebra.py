"""Emission of computer-algebra scripts for external verification.

The emitted script targets Macaulay2: it declares a rational polynomial
ring in x_1..x_n, y_1..y_n, the ideal generated by x_i*x_j - y_i*y_j over
the edges, and prints dimension and depth of the quotient (depth through
the Auslander-Buchsbaum formula).  Output is byte-stable: a fixed template
with variables indexed by normalized vertex order and edges sorted, so two
graphs that differ only in labeling emit identical bytes.  The test suite
never executes these scripts.
"""

from __future__ import annotations

from .graphs import Graph


def emit_m2_script(g: Graph) -> str:
    n = g.n
    lines = [
        "-- quotient by the parity binomial edge ideal of the input graph",
        f"-- vertices: {n}, edges: {g.edge_count}",
    ]
    if n == 0:
        lines += [
            "R = QQ;",
            "I = ideal 0_R;",
        ]
    else:
        lines.append(f"R = QQ[x_1..x_{n}, y_1..y_{n}];")
        gens = [
            f"x_{u + 1}*x_{v + 1}-y_{u + 1}*y_{v + 1}" for u, v in g.edges()
        ]
        if gens:
            lines.append("I = ideal(" + ", ".join(gens) + ");")
        else:
            lines.append("I = ideal 0_R;")
    lines += [
        "d = dim(R/I);",
        "p = pdim(R^1/I);",
        "dep = numgens(R) - p;",
        '<< "dim " << d << endl;',
        '<< "depth " << dep << endl;',
    ]
    return "\n".join(lines) + "\n"
