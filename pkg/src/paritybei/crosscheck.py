"""Cross-checking harness: classifier against the exhaustive oracle.

The classifier rests on the structure theorems, the oracle on a direct
subset scan; for chordal inputs every enumerated run of the staged tree
construction is additionally verified against its proved invariants.  A
disagreement yields a minimal counterexample bundle for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import spectrum
from .chordal import clique_sum_order, is_chordal
from .classify import ClassifyOutcome, classify
from .graphs import Graph, connected_components, is_connected
from .treealgo import enumerate_runs, verify_run


@dataclass(frozen=True)
class CrossCheckReport:
    graph: Graph
    classification: ClassifyOutcome
    oracle_unmixed: bool | None  # None when the size cap blocked the oracle
    oracle_witness: tuple[int, ...] | None  # original labels
    agree: bool | None
    runs_checked: int
    runs_truncated: bool
    violations: tuple[str, ...]
    counterexample: dict | None

    @property
    def ok(self) -> bool:
        return self.agree is not False and not self.violations

    def to_doc(self) -> dict:
        doc = self.classification.to_doc()
        doc["oracle_unmixed"] = self.oracle_unmixed
        doc["oracle_witness"] = (
            list(self.oracle_witness) if self.oracle_witness is not None else None
        )
        doc["agree"] = self.agree
        doc["runs_checked"] = self.runs_checked
        doc["runs_truncated"] = self.runs_truncated
        doc["violations"] = list(self.violations)
        doc["counterexample"] = self.counterexample
        return doc


def cross_check(
    g: Graph,
    max_n: int = spectrum.DEFAULT_MAX_N,
    run_limit: int = 64,
) -> CrossCheckReport:
    """Classify, run the oracle, and verify every enumerated construction
    run on chordal components.  Above the size cap the report carries the
    classification only."""
    outcome = classify(g, max_n=max_n)
    oracle_unmixed: bool | None = None
    oracle_witness: tuple[int, ...] | None = None
    if g.n <= max_n:
        verdict = spectrum.unmixedness_oracle(g, max_n=max_n)
        oracle_unmixed = verdict.unmixed
        if verdict.witness is not None:
            oracle_witness = g.labels_of(verdict.witness)
    agree: bool | None = None
    if oracle_unmixed is not None and outcome.combined.unmixed is not None:
        agree = oracle_unmixed == outcome.combined.unmixed

    violations: list[str] = []
    runs_checked = 0
    runs_truncated = False
    counterexample: dict | None = None
    for comp in connected_components(g):
        sub = g.induced(comp)
        if not is_chordal(sub).chordal or not is_connected(sub):
            continue
        decomp = clique_sum_order(sub)
        enum = enumerate_runs(sub, decomp, limit=run_limit)
        runs_truncated = runs_truncated or enum.truncated
        sub_unmixed = None
        if sub.n <= max_n:
            sub_unmixed = spectrum.unmixedness_oracle(sub, max_n=max_n).unmixed
        for res in enum.results:
            runs_checked += 1
            found = verify_run(sub, decomp, res, oracle_unmixed=sub_unmixed, max_n=max_n)
            if found and counterexample is None:
                counterexample = {
                    "vertices": sorted(sub.labels),
                    "edges": [
                        sorted((sub.labels[u], sub.labels[v])) for u, v in sub.edges()
                    ],
                    "violations": found,
                    "trace": res.to_doc(),
                }
            violations.extend(found)

    if agree is False and counterexample is None:
        counterexample = {
            "vertices": sorted(g.labels),
            "edges": [sorted((g.labels[u], g.labels[v])) for u, v in g.edges()],
            "classifier_unmixed": outcome.combined.unmixed,
            "oracle_unmixed": oracle_unmixed,
            "oracle_witness": (
                list(oracle_witness) if oracle_witness is not None else None
            ),
        }
    return CrossCheckReport(
        graph=g,
        classification=outcome,
        oracle_unmixed=oracle_unmixed,
        oracle_witness=oracle_witness,
        agree=agree,
        runs_checked=runs_checked,
        runs_truncated=runs_truncated,
        violations=tuple(violations),
        counterexample=counterexample,
    )
