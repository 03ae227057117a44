"""
Phase 6: Command Runner (Orchestrator)

Dispatches a parsed problem to one of the library operations and wraps the
outcome in a RunReport. Module errors never escape: input errors map to exit
code 1, internal arithmetic failures to exit code 2.

Commands:
    cad                  valuation-invariant CAD (cells, projections, probes)
    project              Lazard projection of the inputs
    valuation            Lazard valuation and order of each input at a point
    eval                 Lazard evaluation of each input on a point
    compare-projections  Lazard vs McCallum vs Brown-McCallum

Usage:
    from phase_6.runner import run_command

    report = run_command(problem, "cad", settings)
    print(report.exit_code, report.counts)
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from phase_1.basis import BasisSet, squarefree_basis
from phase_1.parser import format_polynomial
from phase_1.polynomial import Polynomial
from phase_3.projection import ProjectionSet, compare_projections, lazard_projection
from phase_4.evaluator import evaluator_for
from phase_4.valuation import lazard_evaluate, order_at, valuation_at
from phase_5.cad import project_to_level, split_contents, vcadl
from phase_5.delineability import check_delineability
from phase_6.config import Settings
from phase_6.problem import ProblemFile

logger = logging.getLogger(__name__)

REPORT_FORMAT = 1
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERNAL_ERROR = 2


@dataclass
class RunReport:
    """
    Outcome of one command.

    Attributes:
        command:   Command name as given.
        success:   True when the command completed.
        exit_code: 0 on success, 1 for input errors, 2 for internal failures.
        error:     Diagnostic when success is False.
        counts:    Headline sizes (cells, polynomials, ...).
        payload:   Command-specific structured result.
        timing:    Wall-clock seconds.
    """
    command: str
    success: bool = False
    exit_code: int = EXIT_OK
    error: Optional[str] = None
    counts: Dict[str, int] = field(default_factory=dict)
    payload: Dict[str, object] = field(default_factory=dict)
    timing: Optional[float] = None

    def to_dict(self, include_timing: bool = False) -> dict:
        data = {
            "format": REPORT_FORMAT,
            "command": self.command,
            "success": self.success,
            "exit_code": self.exit_code,
            "error": self.error,
            "counts": self.counts,
            "payload": self.payload,
        }
        if include_timing:
            data["timing"] = self.timing
        return data


# ── Shared helpers ──────────────────────────────────────────────────────────

def _names(problem: ProblemFile, nvars: int) -> List[str]:
    return problem.variables[:nvars]


def _projection_entries(projected: ProjectionSet, names: Sequence[str]) -> List[dict]:
    return [
        {
            "polynomial": format_polynomial(entry.polynomial, names),
            "provenance": [tag.to_dict() for tag in entry.provenance],
        }
        for entry in projected.entries
    ]


def _basis_with_contents(problem: ProblemFile) -> Tuple[BasisSet, List[Polynomial]]:
    var = problem.nvars - 1
    if var < 1:
        raise ValueError("projection needs at least 2 variables")
    contents, primitives = split_contents(problem.polynomials, var)
    return squarefree_basis(primitives, var), contents


def _require_point(point: Optional[Sequence], length: int, command: str) -> Tuple:
    if point is None:
        raise ValueError(f"{command} needs a point (--point or a 'point:' line)")
    if len(point) != length:
        raise ValueError(f"{command} needs a point with {length} coordinates, got {len(point)}")
    return tuple(point)


# ── Commands ────────────────────────────────────────────────────────────────

def _projection_levels(problem: ProblemFile, projections: Sequence[ProjectionSet], lowest: int) -> List[dict]:
    return [
        {
            "level": k,
            "variables": _names(problem, k),
            "polynomials": _projection_entries(projected, _names(problem, k)),
        }
        for k, projected in enumerate(projections, start=lowest)
    ]


def _run_truncated(problem: ProblemFile, max_level: int) -> Tuple[dict, dict]:
    chain = project_to_level(problem.polynomials, max_level, problem.nvars)
    levels = _projection_levels(problem, chain.projections, chain.lowest)
    payload = {
        "variables": problem.variables,
        "inputs": [format_polynomial(f, problem.variables) for f in chain.level_polynomials[-1]],
        "projected_to": chain.lowest,
        "lifted": 0,
        "projections": levels,
        "cells": [],
        "stack_sizes": [],
    }
    counts = {"cells": 0, **{f"projection_level_{level['level']}": len(level["polynomials"]) for level in levels}}
    return payload, counts


def _run_cad(problem: ProblemFile, settings: Settings, point, max_level) -> Tuple[dict, dict]:
    if max_level is not None:
        return _run_truncated(problem, max_level)
    decomposition = vcadl(problem.polynomials, problem.nvars, workers=settings.workers)
    payload = {
        "variables": problem.variables,
        "inputs": [format_polynomial(f, problem.variables) for f in decomposition.inputs],
        "projected_to": 1,
        "lifted": decomposition.lifted,
        "projections": _projection_levels(problem, decomposition.projections, 1),
        "cells": [cell.to_dict() for cell in decomposition.cells],
        "stack_sizes": decomposition.stack_sizes(),
    }
    if settings.probes and decomposition.lifted == problem.nvars and problem.nvars > 1:
        base = decomposition.base
        checks = []
        for position, f in enumerate(decomposition.inputs):
            verdicts = check_delineability(f, base, probes=settings.probes, seed=settings.seed)
            checks.append({
                "input": position,
                "cells_checked": len(verdicts),
                "failures": [v.index.to_list() for v in verdicts if not v.delineable],
            })
        payload["delineability"] = {"probes": settings.probes, "seed": settings.seed, "checks": checks}
    counts = {"cells": len(decomposition.cells), **decomposition.counts()}
    return payload, counts


def _run_project(problem: ProblemFile, settings: Settings, point, max_level) -> Tuple[dict, dict]:
    basis, contents = _basis_with_contents(problem)
    projected = lazard_projection(basis).with_contents(contents)
    lower = _names(problem, problem.nvars - 1)
    payload = {
        "basis": [format_polynomial(b, problem.variables) for b in basis],
        "projection": _projection_entries(projected, lower),
        "degree_stats": projected.degree_stats(),
    }
    return payload, {"basis": len(basis), "projection": len(projected)}


def _run_valuation(problem: ProblemFile, settings: Settings, point, max_level) -> Tuple[dict, dict]:
    point = _require_point(point, problem.nvars, "valuation")
    valuations = [valuation_at(f, point) for f in problem.polynomials]
    results = [
        {
            "polynomial": format_polynomial(f, problem.variables),
            "valuation": v.to_list(),
            "order": order_at(f, point),
        }
        for f, v in zip(problem.polynomials, valuations)
    ]
    payload = {
        "point": [str(v) for v in point],
        "results": results,
        "evaluator": list(evaluator_for(valuations).weights),
    }
    return payload, {"polynomials": len(results)}


def _run_eval(problem: ProblemFile, settings: Settings, point, max_level) -> Tuple[dict, dict]:
    point = _require_point(point, problem.nvars - 1, "eval")
    results = []
    for f in problem.polynomials:
        result = lazard_evaluate(f, point)
        results.append({
            "polynomial": format_polynomial(f, problem.variables),
            "residual": format_polynomial(result.residual, problem.variables),
            "valuation": result.valuation.to_list(),
        })
    payload = {"point": [str(v) for v in point], "results": results}
    return payload, {"polynomials": len(results)}


def _run_compare(problem: ProblemFile, settings: Settings, point, max_level) -> Tuple[dict, dict]:
    basis, _ = _basis_with_contents(problem)
    report = compare_projections(basis)
    lower = _names(problem, problem.nvars - 1)

    def render(polys):
        return [format_polynomial(p, lower) for p in polys]

    payload = {
        "lazard": render(report.lazard.polynomials),
        "mccallum": render(report.mccallum.polynomials),
        "brown_mccallum": render(report.brown_mccallum.polynomials),
        "bm_in_lazard": report.bm_in_lazard,
        "lazard_in_mccallum": report.lazard_in_mccallum,
        "lazard_only": render(report.lazard_only),
        "mccallum_only": render(report.mccallum_only),
    }
    return payload, report.sizes()


COMMANDS: Dict[str, Callable] = {
    "cad": _run_cad,
    "project": _run_project,
    "valuation": _run_valuation,
    "eval": _run_eval,
    "compare-projections": _run_compare,
}


def run_command(
    problem: ProblemFile,
    command: str,
    settings: Optional[Settings] = None,
    point: Optional[Sequence] = None,
    max_level: Optional[int] = None,
) -> RunReport:
    """Run one command; never raises for module errors."""
    settings = settings or Settings()
    point = point if point is not None else problem.point
    report = RunReport(command=command)
    started = time.perf_counter()
    try:
        handler = COMMANDS.get(command)
        if handler is None:
            raise ValueError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
        report.payload, report.counts = handler(problem, settings, point, max_level)
        report.success = True
    except ValueError as e:
        logger.warning(f"{command} rejected its input: {e}")
        report.error = str(e)
        report.exit_code = EXIT_INPUT_ERROR
    except (ArithmeticError, RuntimeError, AssertionError) as e:
        logger.error(f"{command} failed: {type(e).__name__}: {e}")
        report.error = f"{type(e).__name__}: {e}"
        report.exit_code = EXIT_INTERNAL_ERROR
    except Exception as e:
        logger.exception(f"{command} crashed")
        report.error = f"{type(e).__name__}: {e}"
        report.exit_code = EXIT_INTERNAL_ERROR
    report.timing = time.perf_counter() - started
    logger.info(f"{command} finished in {report.timing:.3f}s with exit code {report.exit_code}")
    return report
