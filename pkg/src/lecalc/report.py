"""Deterministic report assembly for the command line front end.

Every command builds a plain-text report and a JSON document from the same
computed objects; rendering never recomputes anything, so two runs with the
same RunConfig produce byte-identical output.  Exact rationals are printed
as "p/q" (never floats); integers stay integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .engine import DEFAULT_BUDGET
from .errors import (BudgetExceededError, DegenerateInputError,
                     ImproperIntersectionError, MathRefusal, NonIsolatedError,
                     NonIntegerResultError, NonReducedError,
                     NotLineSingularityError, PolarDimensionError,
                     UnluckySpecializationError)
from .families import FamilyAnalysis, IlmTable, TheoremVerdict
from .invariants import InvariantRecord, WeightSystem
from .poly import render

SCHEMA_VERSION = 1

TEXT = "text"
JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run; equal configs give equal bytes."""

    expression: str | None = None
    path: str | None = None
    variables: tuple[str, ...] = ("z1", "z2", "z3")
    parameter: str | None = None
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    fmt: str = TEXT
    assert_equisingular: bool = False
    assert_irreducible: bool = False
    permute: tuple[int, ...] | None = None
    j_values: tuple[int, ...] | None = None


_REFUSAL_TOKENS = {
    NonReducedError: "NON_REDUCED",
    NonIsolatedError: "NON_ISOLATED",
    NotLineSingularityError: "NOT_LINE_SINGULARITY",
    ImproperIntersectionError: "IMPROPER_INTERSECTION",
    PolarDimensionError: "POLAR_DIMENSION",
    NonIntegerResultError: "NON_INTEGER_RESULT",
    DegenerateInputError: "DEGENERATE_INPUT",
    UnluckySpecializationError: "UNLUCKY_SPECIALIZATION",
    BudgetExceededError: "BUDGET_EXCEEDED",
}


def refusal_token(exc: MathRefusal) -> str:
    for cls, token in _REFUSAL_TOKENS.items():
        if isinstance(exc, cls):
            return token
    return "REFUSED"


def fmt_rational(q) -> str:
    if q is None:
        return "undefined"
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def json_rational(q):
    """int for integers, "p/q" string otherwise, None passes through."""
    if q is None:
        return None
    q = Fraction(q)
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def weights_text(w: WeightSystem | None) -> str:
    if w is None:
        return "none (not weighted homogeneous)"
    body = "(" + ", ".join(str(x) for x in w.weights) + \
        f"), weighted degree {w.degree}"
    if w.free_variables:
        body += " [absent variables " + ", ".join(w.free_variables) + \
            " carry placeholder weights]"
    if not w.unique:
        body += " [weight system not unique; smallest representative shown]"
    return body


def weights_json(w: WeightSystem | None):
    if w is None:
        return None
    return {
        "variables": list(w.variables),
        "weights": list(w.weights),
        "degree": w.degree,
        "free_variables": list(w.free_variables),
        "unique": w.unique,
    }


def record_lines(rec: InvariantRecord, indent: str = "") -> list[str]:
    axis = rec.polar_ideal.context.variables[0]
    polar = "empty near the origin" if rec.polar_empty else \
        "; ".join(render(g) for g in rec.polar_ideal.generators)
    if rec.lambda_k_zero:
        ks = ", ".join(
            f"lambda{k + 2} = 0" for k in range(len(rec.lambda_k_zero)))
        higher = ks if all(rec.lambda_k_zero) else "NOT all zero (unexpected)"
    else:
        higher = "none to check (two variables)"
    if rec.weights is None and rec.polar_ideal.context.nparams:
        weights_line = "weights: skipped (coefficients involve " + \
            ", ".join(rec.polar_ideal.context.parameters) + ")"
    else:
        weights_line = f"weights: {weights_text(rec.weights)}"
    lines = [
        f"order at origin: {rec.order}",
        f"multiplicity at origin: {rec.multiplicity}",
        weights_line,
        f"lambda0: {rec.lambda0}",
        f"lambda1: {rec.lambda1}  (axis witnesses {axis} = "
        f"{fmt_rational(rec.axis_witnesses[0])}, "
        f"{fmt_rational(rec.axis_witnesses[1])})",
        f"gamma1: {rec.gamma1}",
        f"gamma1 + lambda0: {rec.gamma1 + rec.lambda0}"
        f"  (= polar curve . hypersurface = "
        f"{rec.intersection_with_hypersurface})",
        f"polar ratio: {fmt_rational(rec.polar_ratio)}" +
        ("" if rec.polar_ratio is not None else " (gamma1 = 0)"),
        f"reduced euler characteristic of the milnor fibre: "
        f"{rec.euler_reduced}",
        f"transverse slice milnor number: {rec.slice_milnor}",
        f"higher le numbers: {higher}",
        f"polar curve: {polar}",
    ]
    return [indent + line for line in lines]


def record_json(rec: InvariantRecord) -> dict:
    return {
        "order": rec.order,
        "multiplicity": rec.multiplicity,
        "lambda0": rec.lambda0,
        "lambda1": rec.lambda1,
        "gamma1": rec.gamma1,
        "polar_ratio": json_rational(rec.polar_ratio),
        "euler_reduced": rec.euler_reduced,
        "mu_slice": rec.slice_milnor,
    }


def record_json_extra(rec: InvariantRecord) -> dict:
    """Side information that does not belong to the fixed invariants shape."""
    return {
        "gamma1_plus_lambda0": rec.gamma1 + rec.lambda0,
        "polar_curve": [render(g) for g in rec.polar_ideal.generators],
        "polar_curve_empty": rec.polar_empty,
        "higher_le_numbers_zero": list(rec.lambda_k_zero),
        "axis_witnesses": [json_rational(w) for w in rec.axis_witnesses],
    }


def verdict_lines(v: TheoremVerdict) -> list[str]:
    lines = [f"rule {v.theorem}: {v.conclusion}"]
    for h in v.hypotheses:
        lines.append(f"  {h.name}: {h.status} -- {h.detail}")
    for note in v.notes:
        lines.append(f"  note: {note}")
    return lines


def verdict_json(v: TheoremVerdict) -> dict:
    return {
        "rule": v.theorem,
        "conclusion": v.conclusion,
        "hypotheses": [
            {"name": h.name, "status": h.status, "detail": h.detail}
            for h in v.hypotheses],
        "notes": list(v.notes),
    }


def ilm_lines(table: IlmTable, parameter: str = "t") -> list[str]:
    where = f"{parameter} = 0" if table.where == "ZERO" \
        else f"generic {parameter}"
    head = f"ILM table at {where} (mu_slice = {table.slice_milnor}"
    if table.t_witnesses:
        head += f"; {parameter} witnesses " + ", ".join(
            fmt_rational(w) for w in table.t_witnesses)
    head += "):"
    lines = [head, "  j    mu    predicted  residual  sum_residual"]
    for r in table.rows:
        if r.error is not None:
            lines.append(f"  {r.j:<4} ERROR {r.error}")
            continue
        lines.append(f"  {r.j:<4} {r.mu:<5} {r.predicted:<10} "
                     f"{r.residual:<9} {r.residual_sum}")
    inferred = "none (slopes disagree)" if table.inferred is None else \
        "(" + ", ".join(str(x) for x in table.inferred) + ")"
    expected = "(" + ", ".join(str(x) for x in table.expected) + ")"
    lines.append(f"  inferred (lambda0, lambda1, gamma1+lambda0) = {inferred}"
                 f"; direct = {expected}")
    lines.append(f"  result: {'PASS' if table.passed else 'FAIL'}")
    return lines


def ilm_json(table: IlmTable) -> dict:
    return {
        "where": table.where,
        "mu_slice": table.slice_milnor,
        "t_witnesses": [json_rational(w) for w in table.t_witnesses],
        "rows": [
            {"j": r.j, "mu": r.mu, "predicted": r.predicted,
             "residual": r.residual, "residual_sum": r.residual_sum,
             "error": r.error}
            for r in table.rows],
        "inferred": list(table.inferred) if table.inferred else None,
        "expected": list(table.expected),
        "passed": table.passed,
    }


def header_lines(command: str, cfg: RunConfig, input_text: str) -> list[str]:
    lines = [
        f"lecalc {command}",
        f"seed: {cfg.seed}",
        f"budget: {cfg.budget}",
        f"input: {input_text}",
        "variables: " + ", ".join(cfg.variables),
    ]
    if cfg.parameter:
        lines.append(f"parameter: {cfg.parameter}")
    if command == "family":
        asserted = [name for flag, name in
                    ((cfg.assert_equisingular, "topologically-equisingular"),
                     (cfg.assert_irreducible, "gamma1-irreducible")) if flag]
        lines.append("assertions: " + (", ".join(asserted) or "none"))
    return lines


def base_json(command: str, cfg: RunConfig, input_text: str) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "input": input_text,
        "variables": list(cfg.variables),
        "parameter": cfg.parameter,
        "seed": cfg.seed,
        "budget": cfg.budget,
        "weights": None,
        "invariants": None,
        "verdicts": [],
        "ilm": None,
        "warnings": [],
    }
    if command == "family":
        doc["assertions"] = {
            "topologically_equisingular": cfg.assert_equisingular,
            "gamma1_irreducible": cfg.assert_irreducible,
        }
    return doc


def family_json(an: FamilyAnalysis) -> dict:
    fam = an.family
    return {
        "parameter": fam.parameter,
        "base": render(fam.base),
        "deformation": [
            {"power": j, "term": render(g)} for j, g in fam.deformation],
        "upper": None if an.upper is None else {
            "upper": an.upper.upper,
            "degree": an.upper.degree,
            "offenders": [
                {"power": j, "monomial": list(expo), "weighted_degree": wd}
                for j, expo, wd in an.upper.offenders],
        },
        "order_zero": an.equimultiplicity.order_zero,
        "order_generic": an.equimultiplicity.order_generic,
        "equimultiplicity": an.equimultiplicity.verdict,
        "slice_errors": {"zero": an.zero_failure,
                         "generic": an.generic_failure},
    }


def finish(cfg: RunConfig, text_lines: list[str], doc: dict) -> str:
    if cfg.fmt == JSON:
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return "\n".join(text_lines) + "\n"
