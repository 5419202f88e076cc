"""Command-line driver and canonical report emitter.

Builds an algebra from a compact description, runs a chosen set of
verification and construction tasks, and emits a deterministic,
machine-readable report: JSON with sorted keys and every number
serialized as an exact integer or "p/q" string, so identical job
descriptions produce byte-identical output.  Timings are recorded but
kept out of the canonical serialization.

Exit codes: 0 all tasks pass, 1 some task failed (report still
emitted), 2 malformed job description, 3 precondition violation
(semantically invalid input), 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field

from .induction import (
    LambdaFunctional,
    VerificationError,
    _as_ss,
    build_M,
    build_W,
    classify,
    evaluation_obstruction,
    irreducible_quotient,
    is_evaluation,
)
from .laurent import CofiniteIdeal, EvaluationGrid, QuotientAlgebra, check_lemma22
from .realizations import build_C, build_sl, odd_bracket_center_witness
from .representations import evaluation_module
from .scalars import qq

SCHEMA_VERSION = "1"
TASKS = ("axioms", "grading", "roots", "lemma22", "evalmod", "induce", "classify")


class JobSpecError(ValueError):
    """Malformed job description; the message names the offending text."""


# ---------------------------------------------------------------------------
# flag grammar


def _parse_rational(text: str, where: str):
    s = text.strip()
    try:
        if "/" in s:
            p, q = s.split("/")
            return qq(int(p)) / qq(int(q))
        return qq(int(s))
    except (ValueError, ZeroDivisionError):
        raise JobSpecError(f"{where}: expected a rational like -3 or 5/2, got {text!r}")


def parse_algebra(text: str):
    """``sl:M,N`` or ``C:M`` -> (family, params)."""
    family, _, rest = text.partition(":")
    family = family.strip()
    try:
        parts = tuple(int(x) for x in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise JobSpecError(f"--algebra {text!r}: expected sl:M,N or C:M")
    if family == "sl" and len(parts) == 2:
        return family, parts
    if family == "C" and len(parts) == 1:
        return family, parts
    raise JobSpecError(f"--algebra {text!r}: expected sl:M,N or C:M")


_PAIR = re.compile(r"\(\s*(-?\d+(?:/\d+)?)\s*,\s*(\d+)\s*\)")


def parse_ideal(text: str) -> CofiniteIdeal:
    """``t1:(1,2)(2,1);t2:(-1,1)`` -> roots with multiplicities per variable."""
    groups = [b.strip() for b in text.split(";") if b.strip()]
    if not groups:
        raise JobSpecError("--ideal: empty description")
    per = [None] * len(groups)
    for block in groups:
        name, colon, body = block.partition(":")
        name = name.strip()
        if not colon or not re.fullmatch(r"t\d+", name):
            raise JobSpecError(f"--ideal: expected tJ:(root,mult)... at {block!r}")
        j = int(name[1:]) - 1
        if not 0 <= j < len(groups):
            raise JobSpecError(
                f"--ideal: variable {name} out of range for {len(groups)} variable(s)"
            )
        if per[j] is not None:
            raise JobSpecError(f"--ideal: variable {name} given twice")
        pairs = []
        body = body.strip()
        pos = 0
        while pos < len(body):
            m = _PAIR.match(body, pos)
            if not m:
                raise JobSpecError(f"--ideal: cannot read a (root,mult) pair at {body[pos:]!r}")
            pairs.append((_parse_rational(m.group(1), "--ideal root"), int(m.group(2))))
            pos = m.end()
        if not pairs:
            raise JobSpecError(f"--ideal: variable {name} has no (root,mult) pairs")
        per[j] = pairs
    try:
        return CofiniteIdeal(per)
    except ValueError as exc:
        raise JobSpecError(f"--ideal: {exc}")


def parse_weights(text: str):
    """``1,0;2,1`` -> one integer weight tuple per grid point."""
    out = []
    for block in text.split(";"):
        block = block.strip()
        if not block:
            continue
        try:
            out.append(tuple(int(x) for x in block.split(",")))
        except ValueError:
            raise JobSpecError(f"--weights: expected comma-separated integers, got {block!r}")
    if not out:
        raise JobSpecError("--weights: empty description")
    return out


def parse_lambda(text: str):
    """``1,0,3/2`` -> rational values on the box monomial basis."""
    vals = [v for v in (x.strip() for x in text.split(",")) if v]
    if not vals:
        raise JobSpecError("--lambda: empty description")
    return [_parse_rational(v, "--lambda") for v in vals]


# ---------------------------------------------------------------------------
# job description and report


@dataclass
class JobSpec:
    """Everything one invocation does: the algebra, optional loop data,
    and the tasks to run (executed in dependency order)."""

    family: str
    params: tuple
    ideal: CofiniteIdeal = None
    weights: list = None
    lam: list = None
    tasks: tuple = ()

    REQUIRES = {
        "axioms": (),
        "grading": (),
        "roots": (),
        "lemma22": ("ideal",),
        "evalmod": ("ideal", "weights"),
        "induce": ("ideal", "weights"),
        "classify": ("ideal", "weights"),
    }

    def validate(self) -> "JobSpec":
        if self.family == "sl":
            if len(self.params) != 2 or min(self.params) < 1:
                raise JobSpecError("--algebra sl:M,N needs integers M, N >= 1")
        elif self.family == "C":
            if len(self.params) != 1 or self.params[0] < 2:
                raise JobSpecError("--algebra C:M needs an integer M >= 2")
        else:
            raise JobSpecError(f"unknown algebra family {self.family!r}")
        if not self.tasks:
            raise JobSpecError("no tasks given (use --task)")
        for t in self.tasks:
            if t not in TASKS:
                raise JobSpecError(f"unknown task {t!r} (choose from {', '.join(TASKS)})")
            for req in self.REQUIRES[t]:
                if getattr(self, req) is None:
                    raise JobSpecError(f"task {t!r} requires --{req}")
        return self


@dataclass
class Report:
    """Per-task results plus timings; deterministic given the JobSpec
    (timings live outside the canonical serialization)."""

    schema: str = SCHEMA_VERSION
    job: dict = field(default_factory=dict)
    tasks: dict = field(default_factory=dict)
    ok: bool = True
    timings: dict = field(default_factory=dict)

    @classmethod
    def empty(cls) -> "Report":
        return cls()


# ---------------------------------------------------------------------------
# canonical serialization


def _ratstr(x) -> str:
    n, d = x.numerator, x.denominator
    return f"{n}/{d}" if d != 1 else f"{n}"


def _canon(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int) or hasattr(x, "numerator"):
        return _ratstr(x)
    if isinstance(x, dict):
        return {str(k): _canon(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_canon(v) for v in x]
    return str(x)


def emit(report: Report, format: str = "json", with_timings: bool = False) -> bytes:
    """Canonical byte serialization of a report.

    JSON: sorted keys, exact "p/q" number strings, newline-terminated;
    identical reports serialize byte-identically.  Timings are included
    only on request and are never part of the canonical content.
    """
    if format == "json":
        doc = {"schema": report.schema}
        if report.job or report.tasks:
            doc["job"] = _canon(report.job)
            doc["tasks"] = _canon(report.tasks)
            doc["pass"] = report.ok
        if with_timings:
            doc["timings"] = {k: f"{v:.6f}" for k, v in report.timings.items()}
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if format == "text":
        lines = [f"schema {report.schema}"]
        if report.job:
            lines.append("job " + json.dumps(_canon(report.job), sort_keys=True))
        for name, result in report.tasks.items():
            status = "PASS" if result.get("pass") else "FAIL"
            detail = {k: _canon(v) for k, v in result.items() if k != "pass"}
            lines.append(f"{name}: {status} " + json.dumps(detail, sort_keys=True))
            if with_timings and name in report.timings:
                lines.append(f"  time {report.timings[name]:.3f}s")
        if report.tasks:
            lines.append("overall: " + ("PASS" if report.ok else "FAIL"))
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {format!r} (choose json or text)")


def parse_report(data: bytes) -> Report:
    """Inverse of the JSON ``emit``; emit(parse_report(b)) == b."""
    doc = json.loads(data.decode())
    return Report(
        schema=doc.get("schema", SCHEMA_VERSION),
        job=doc.get("job", {}),
        tasks=doc.get("tasks", {}),
        ok=doc.get("pass", True),
    )


def _ideal_str(ideal: CofiniteIdeal) -> str:
    return ";".join(
        f"t{j + 1}:" + "".join(f"({_ratstr(a)},{b})" for a, b in zip(rts, ms))
        for j, (rts, ms) in enumerate(zip(ideal.roots, ideal.mults))
    )


def _job_dict(spec: JobSpec) -> dict:
    out = {
        "algebra": f"{spec.family}:{','.join(str(p) for p in spec.params)}",
        "tasks": [t for t in TASKS if t in spec.tasks],
    }
    if spec.ideal is not None:
        out["ideal"] = _ideal_str(spec.ideal)
    if spec.weights is not None:
        out["weights"] = [list(w) for w in spec.weights]
    if spec.lam is not None:
        out["lambda"] = list(spec.lam)
    return out


# ---------------------------------------------------------------------------
# tasks


def _task_axioms(ctx: dict) -> dict:
    g = ctx["g"]
    rep = g.check_axioms()
    return {
        "pass": rep.ok,
        "algebra": g.meta.get("name", "?"),
        "dim": g.dim,
        "even_dim": len(g.even_indices),
        "odd_dim": len(g.odd_indices),
        "triples_checked": rep.triples_checked,
        "violations": {
            "parity": rep.parity_violations[:5],
            "skew": rep.skew_violations[:5],
            "jacobi": rep.jacobi_violations[:5],
        },
    }


def _task_grading(ctx: dict) -> dict:
    g = ctx["g"]
    rep = g.check_z_grading()
    out = {
        "pass": rep.ok,
        "pairs_checked": rep.pairs_checked,
        "raising_square_zero": rep.plus_plus_zero,
        "lowering_square_zero": rep.minus_minus_zero,
        "layer_dims": {
            str(d): sum(1 for i in range(g.dim) if g.zdeg[i] == d) for d in (-1, 0, 1)
        },
        "violations": rep.violations[:5],
    }
    try:
        i, j, v = odd_bracket_center_witness(g)
        out["center_witness"] = {
            "left": i,
            "right": j,
            "center_coefficient": v[g.dim - 1],
        }
    except ValueError:
        out["center_witness"] = None
    return out


def _task_roots(ctx: dict) -> dict:
    g = ctx["g"]
    dec = g.root_decomposition()
    even = dec.root_multiset(parity=0)
    odd = dec.root_multiset(parity=1)
    total = dec.zero_root_space.dim + len(even) + len(odd)
    return {
        "pass": total == g.dim,
        "even_roots": [list(r) for r in even],
        "odd_roots": [list(r) for r in odd],
        "even_count": len(even),
        "odd_count": len(odd),
        "zero_space_dim": dec.zero_root_space.dim,
    }


def _task_lemma22(ctx: dict) -> dict:
    g = ctx["g"]
    grid = EvaluationGrid(ctx["spec"].ideal.squarefree())
    rep = check_lemma22(g, grid)
    return {
        "pass": rep.ok,
        "points": list(grid.points),
        "surjective": rep.surjective,
        "rank": rep.rank,
        "expected_rank": rep.expected_rank,
        "kernel_dim": rep.kernel_dim,
        "expected_kernel_dim": rep.expected_kernel_dim,
        "kernel_matches_ideal_model": rep.kernel_matches,
        "bracket_compatible": rep.bracket_compatible,
        "bracket_failures": rep.bracket_failures[:5],
    }


def _task_evalmod(ctx: dict) -> dict:
    spec = ctx["spec"]
    ss = _as_ss(ctx["real"])
    grid = EvaluationGrid(spec.ideal.squarefree())
    module = evaluation_module(ss, spec.weights, grid)
    failures = module.check_axiom()
    return {
        "pass": not failures,
        "dim": module.dim,
        "points": list(grid.points),
        "weights": [list(w) for w in spec.weights],
        "violations": failures[:3],
    }


def _built_module(ctx: dict):
    """Build (and cache) the irreducible induced module for this job."""
    if "V" not in ctx:
        spec = ctx["spec"]
        ss = _as_ss(ctx["real"])
        grid_p = EvaluationGrid(spec.ideal.squarefree())
        lam = (
            LambdaFunctional(QuotientAlgebra(spec.ideal), spec.lam)
            if spec.lam is not None
            else None
        )
        seed = build_W(ss, grid_p, spec.weights, lam, spec.ideal)
        induced = build_M(seed)
        ctx["M"] = induced
        ctx["V"] = irreducible_quotient(induced)
    return ctx["M"], ctx["V"]


def _task_induce(ctx: dict) -> dict:
    spec = ctx["spec"]
    induced, module = _built_module(ctx)
    sub = spec.ideal.squarefree()
    kills = module.meta["lam"].annihilates(sub)
    ev = is_evaluation(module, sub)
    witness = evaluation_obstruction(module, sub)
    return {
        "pass": ev == kills,
        "dims": {
            "seed": induced.W.dim,
            "induced": induced.dim,
            "irreducible": module.dim,
        },
        "wedge_rank": induced.r,
        "radical_dim": module.meta["radical_dim"],
        "is_evaluation": ev,
        "functional_kills_ideal_image": kills,
        "obstruction_witness": witness,
    }


def _task_classify(ctx: dict) -> dict:
    _, module = _built_module(ctx)
    try:
        result = classify(module, ctx["real"])
    except ValueError as exc:
        return {"pass": False, "error": str(exc)}
    same_psi = result.psi == module.meta["psi"]
    same_lam = result.lam == module.meta["lam"]
    t = result.intertwiner
    return {
        "pass": same_psi and same_lam,
        "weights_match": same_psi,
        "functional_matches": same_lam,
        "recovered_weights": [list(w) for w in result.psi.weight_list],
        "recovered_points": [list(p) for p in result.psi.grid.points],
        "recovered_lambda": list(result.lam.values),
        "dim": result.rebuilt.dim,
        "intertwiner": [[t[i, j] for j in range(t.ncols)] for i in range(t.nrows)],
    }


_TASK_FUNCS = {
    "axioms": _task_axioms,
    "grading": _task_grading,
    "roots": _task_roots,
    "lemma22": _task_lemma22,
    "evalmod": _task_evalmod,
    "induce": _task_induce,
    "classify": _task_classify,
}


def run(spec: JobSpec) -> Report:
    """Execute the job's tasks in dependency order.

    Task failures are recorded in the report (with witnesses), not
    raised; semantic input errors raise ValueError and broken internal
    invariants raise VerificationError.
    """
    spec.validate()
    report = Report()
    report.job = _job_dict(spec)
    g, real = (build_sl(*spec.params) if spec.family == "sl" else build_C(*spec.params))
    ctx = {"g": g, "real": real, "spec": spec}
    for name in (t for t in TASKS if t in spec.tasks):
        start = time.perf_counter()
        result = _TASK_FUNCS[name](ctx)
        report.timings[name] = time.perf_counter() - start
        report.tasks[name] = result
        report.ok = report.ok and bool(result.get("pass"))
    return report


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="superloop",
        description="Verify structure and build/classify modules for loop superalgebras.",
    )
    p.add_argument("--algebra", required=True, help="sl:M,N or C:M")
    p.add_argument(
        "--ideal",
        help='roots with multiplicities per variable, e.g. "t1:(1,2)(2,1);t2:(-1,1)"',
    )
    p.add_argument("--weights", help='one weight tuple per grid point, e.g. "1,0;2,1"')
    p.add_argument(
        "--lambda",
        dest="lam",
        help='rational values on the box monomial basis, e.g. "1,0,3/2"',
    )
    p.add_argument(
        "--task",
        action="append",
        required=True,
        choices=TASKS,
        help="task to run (repeatable); executed in dependency order",
    )
    p.add_argument("--format", default="json", choices=("json", "text"))
    p.add_argument("--with-timings", action="store_true", help="include wall-clock timings")
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        family, params = parse_algebra(args.algebra)
        spec = JobSpec(
            family,
            params,
            ideal=parse_ideal(args.ideal) if args.ideal else None,
            weights=parse_weights(args.weights) if args.weights else None,
            lam=parse_lambda(args.lam) if args.lam else None,
            tasks=tuple(dict.fromkeys(args.task)),
        ).validate()
    except JobSpecError as exc:
        print(f"superloop: {exc}", file=sys.stderr)
        return 2
    try:
        report = run(spec)
    except VerificationError as exc:
        print(f"superloop: internal invariant breach: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"superloop: {exc}", file=sys.stderr)
        return 3
    sys.stdout.buffer.write(emit(report, format=args.format, with_timings=args.with_timings))
    sys.stdout.buffer.flush()
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
