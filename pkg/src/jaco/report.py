"""Per-graph invariant reports and the invariant-sequence export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import closed_forms as cf
from . import domination as dom
from . import oracles
from .graph import SimpleGraph, is_connected
from .jacograph import build_jaco, prime_jaconian

CLOSED_FORM = "closed-form"
THEOREM = "theorem"
ORACLE = "oracle"
SKIPPED = "skipped-budget"

COLUMNS = ("alpha", "beta", "chi", "gamma", "murtage", "gamma_minus", "bondage")
CSV_HEADER = ("n", "alpha", "beta", "chi", "gamma", "murtage", "bondage")


@dataclass(frozen=True)
class Value:
    value: int | None
    source: str


@dataclass
class InvariantReport:
    graph: str
    n: int
    values: dict[str, Value] = field(default_factory=dict)
    prime_jaconian: int | None = None
    compact_sets: list[dom.DomAnalysis] = field(default_factory=list)
    oracle_values: dict[str, int | None] = field(default_factory=dict)

    def mismatches(self) -> dict[str, tuple[int, int]]:
        """Columns whose formula value differs from the oracle's."""
        out = {}
        for key, oracle_value in self.oracle_values.items():
            v = self.values.get(key)
            if v is None or v.source == ORACLE or v.value is None or oracle_value is None:
                continue
            if v.value != oracle_value:
                out[key] = (v.value, oracle_value)
        return out

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "values": {k: {"value": v.value, "source": v.source} for k, v in self.values.items()},
            "prime_jaconian": self.prime_jaconian,
            "compact_sets": [a.to_dict() for a in self.compact_sets],
            "oracle_values": dict(self.oracle_values),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        return cls(
            graph=d["graph"],
            n=d["n"],
            values={k: Value(v["value"], v["source"]) for k, v in d["values"].items()},
            prime_jaconian=d["prime_jaconian"],
            compact_sets=[dom.DomAnalysis.from_dict(a) for a in d["compact_sets"]],
            oracle_values=dict(d["oracle_values"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def table(self) -> str:
        rows = [("invariant", "value", "source")]
        for key in COLUMNS:
            if key in self.values:
                v = self.values[key]
                rows.append((key, "" if v.value is None else str(v.value), v.source))
        width = [max(len(r[i]) for r in rows) for i in range(3)]
        lines = [f"graph: {self.graph}  (n = {self.n})"]
        if self.prime_jaconian is not None:
            lines.append(f"prime Jaconian vertex: v{self.prime_jaconian}")
        lines += ["  ".join(c.ljust(w) for c, w in zip(r, width)).rstrip() for r in rows]
        for a in self.compact_sets:
            cells = ", ".join("{" + ", ".join(f"v{v}" for v in c) + "}" for c in a.partition)
            lines.append(
                f"compact gamma-set {{{', '.join(f'v{v}' for v in a.gamma_set)}}}  "
                f"d_om-sequence {tuple(a.dom_sequence)}  partition {{{cells}}}"
            )
        if self.oracle_values:
            lines.append("oracle: " + ", ".join(
                f"{k}={'skipped' if v is None else v}" for k, v in self.oracle_values.items()))
            for key, (formula, oracle) in sorted(self.mismatches().items()):
                lines.append(f"MISMATCH {key}: formula {formula} vs oracle {oracle}")
        return "\n".join(lines)


def _try(fn, *args):
    try:
        return fn(*args)
    except oracles.BudgetExceeded:
        return None


def _oracle_value(fn, g: SimpleGraph, budget: oracles.OracleBudget) -> Value:
    v = _try(fn, g, budget)
    return Value(v, ORACLE) if v is not None else Value(None, SKIPPED)


def _murtage_columns(report: InvariantReport, g: SimpleGraph, with_oracles: bool,
                     with_bondage: bool, budget: oracles.OracleBudget) -> None:
    if is_connected(g):
        m = dom.murtage_via_theorem(g).value
        report.values["murtage"] = Value(m, THEOREM)
        report.compact_sets = dom.compact_gamma_sets(g)
    else:
        m = dom.murtage_exact(g).value
        report.values["murtage"] = Value(m, ORACLE)

    if with_oracles:
        gm = _try(oracles.gamma_minus_oracle, g, budget)
        report.values["gamma_minus"] = Value(None, SKIPPED) if gm is None else Value(gm.value, ORACLE)
    else:
        # m = gamma^- whenever m >= 1; gamma = 1 gives the conventional 0
        report.values["gamma_minus"] = Value(m, THEOREM)

    if with_bondage:
        if g.edges:
            b = _try(oracles.bondage_oracle, g, budget)
            report.values["bondage"] = Value(None, SKIPPED) if b is None else Value(b.value, ORACLE)
        else:
            report.values["bondage"] = Value(None, SKIPPED)


def jaco_report(n: int, *, with_oracles: bool = False, with_bondage: bool = False,
                budget: oracles.OracleBudget = oracles.DEFAULT_BUDGET) -> InvariantReport:
    jg = build_jaco(n)
    g = jg.underlying
    alpha = cf.independence_trace(jg).alpha
    rep = InvariantReport(graph=f"J_{n}", n=n, prime_jaconian=prime_jaconian(jg))
    rep.values["alpha"] = Value(alpha, CLOSED_FORM)
    rep.values["beta"] = Value(n - alpha, CLOSED_FORM)
    rep.values["chi"] = Value(cf.chromatic_closed_form(jg), CLOSED_FORM)
    rep.values["gamma"] = Value(cf.gamma_recursion(n), CLOSED_FORM)
    _murtage_columns(rep, g, with_oracles, with_bondage, budget)
    if with_oracles:
        rep.oracle_values = {
            "alpha": _try(oracles.alpha_oracle, g, budget),
            "chi": _try(oracles.chi_oracle, g, budget),
            "gamma": _try(oracles.gamma_oracle, g, budget),
            "murtage": getattr(_try(oracles.murtage_oracle, g, budget), "value", None),
        }
    return rep


def graph_report(g: SimpleGraph, name: str = "G", *, with_oracles: bool = False,
                 with_bondage: bool = False,
                 budget: oracles.OracleBudget = oracles.DEFAULT_BUDGET) -> InvariantReport:
    """Report for an arbitrary graph: no closed forms apply, so oracles fill the columns."""
    rep = InvariantReport(graph=name, n=g.n)
    rep.values["alpha"] = _oracle_value(oracles.alpha_oracle, g, budget)
    a = rep.values["alpha"].value
    rep.values["beta"] = Value(g.n - a, ORACLE) if a is not None else Value(None, SKIPPED)
    rep.values["chi"] = _oracle_value(oracles.chi_oracle, g, budget)
    rep.values["gamma"] = _oracle_value(oracles.gamma_oracle, g, budget)
    _murtage_columns(rep, g, with_oracles, with_bondage, budget)
    if with_oracles:
        rep.oracle_values = {
            "murtage": getattr(_try(oracles.murtage_oracle, g, budget), "value", None),
        }
    return rep


# --- sequences ------------------------------------------------------------


def sequence_rows(lo: int, hi: int, *, with_bondage: bool = False,
                  budget: oracles.OracleBudget = oracles.DEFAULT_BUDGET) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        rep = jaco_report(n, with_bondage=with_bondage and n >= 2, budget=budget)
        row = {k: rep.values[k].value for k in CSV_HEADER[1:-1]}
        row = {"n": n, **row, "bondage": rep.values["bondage"].value if "bondage" in rep.values else None}
        rows.append(row)
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(["" if r[k] is None else r[k] for k in CSV_HEADER])
    return buf.getvalue()


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps([{k: r[k] for k in CSV_HEADER} for r in rows], indent=1)
