"""Command-line front door: file I/O and deterministic text/JSON reports."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, NoReturn

from pydantic import Field, ValidationError

from ._base import VerificationReport, Z2KitModel
from ._enums import ExitCode, OutputFormat
from ._exceptions import ConfigurationError, InputFormatError, Z2KitError
from .config import get_config
from .exactla import IntMatrix, f2_rank
from .resolve import (
    GradedPresentation,
    Presentation,
    certificate,
    graded_certificate,
    render_certificate,
    verify_certificate,
    verify_graded_certificate,
)
from .staralg import (
    BuiltinMap,
    GeneratorMap,
    Mutation,
    load_builtin,
    mutate,
    parse_lines,
    text_dimensions,
    verify_involutive,
    verify_relations,
)
from .z2mod import Involution, decompose, multiplicities, verify_decomposition

logger = logging.getLogger(__name__)


class RunConfig(Z2KitModel):
    """Settings of one CLI invocation: flags over ``get_config()`` defaults."""

    command: str = Field(..., description="Subcommand name")
    inputs: list[str] = Field(default_factory=list, description="Input paths or built-in names")
    seed: int = Field(0, ge=0, description="Seed of the decomposition repair search")
    output_format: OutputFormat = Field(OutputFormat.TEXT, description="Report rendering")
    term_cap: int = Field(1_000_000, gt=0, description="StarPoly normalization term cap")
    workers: int = Field(1, ge=1, description="Threads for independent verification items")
    repair_attempts: int = Field(2000, ge=0, description="Fallback search budget")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        config = get_config()

        def pick(flag: Any, default: Any) -> Any:
            return default if flag is None else flag

        try:
            return cls(
                command=args.command,
                inputs=[str(x) for x in getattr(args, "inputs", [])],
                seed=pick(args.seed, config.seed),
                output_format=pick(args.format, config.output_format),
                term_cap=pick(args.term_cap, config.term_cap),
                workers=pick(args.workers, config.workers),
                repair_attempts=config.repair_attempts,
            )
        except ValidationError as e:
            first = e.errors(include_url=False)[0]
            raise ConfigurationError(
                f"Invalid option {first['loc'][0]}: {first['msg']}",
                errors=e.errors(include_url=False),
            ) from e


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputFormatError(f"Cannot read {path}: {e}") from e


def _read_json(path: str) -> Any:
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path} is not valid JSON: {e}") from e


def _emit(run: RunConfig, payload: dict[str, Any], text: str) -> None:
    if run.output_format is OutputFormat.JSON:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _report_exit(*reports: VerificationReport) -> int:
    if all(report.passed for report in reports):
        return ExitCode.OK.value
    return ExitCode.VERIFICATION_FAILED.value


def cmd_multiplicities(args: argparse.Namespace) -> int:
    """Print ``(n1, n2, n3)`` of an involution and the counting identities."""
    run = RunConfig.from_args(args)
    inv = Involution.from_payload(_read_json(run.inputs[0]))
    mult = multiplicities(inv)
    n, trace = inv.n, inv.s.trace()
    n3_rank = f2_rank((IntMatrix.identity(n) + inv.s).mod(2))
    identities = [
        ("n = n1 + n2 + 2*n3", n, mult.n),
        ("trace(S) = n1 - n2", trace, mult.trace),
        ("n3 = rank_F2(I + S)", n3_rank, mult.n3),
    ]
    payload = {
        **mult.to_payload(),
        "n": n,
        "trace": trace,
        "identities": [{"identity": name, "holds": left == right} for name, left, right in identities],
    }
    lines = [str(mult)]
    lines += [f"{name}: {left} = {right}" for name, left, right in identities]
    _emit(run, payload, "\n".join(lines))
    return ExitCode.OK.value


def cmd_decompose(args: argparse.Namespace) -> int:
    """Print the multiplicities, the change of basis ``P`` and its verification."""
    run = RunConfig.from_args(args)
    inv = Involution.from_payload(_read_json(run.inputs[0]))
    dec = decompose(inv, seed=run.seed, repair_attempts=run.repair_attempts)
    verified = verify_decomposition(inv, dec)
    payload = {**dec.to_payload(), "verified": verified}
    text = f"{dec.mult}\nP =\n{dec.p}\nverified: {'yes' if verified else 'no'}"
    _emit(run, payload, text)
    return ExitCode.OK.value if verified else ExitCode.VERIFICATION_FAILED.value


def cmd_resolve(args: argparse.Namespace) -> int:
    """Resolve a presentation (or a graded pair) and verify the certificate."""
    run = RunConfig.from_args(args)
    raw = _read_json(run.inputs[0])
    if isinstance(raw, dict) and "even" in raw:
        graded = GradedPresentation.from_payload(raw)
        graded_cert = graded_certificate(graded, seed=run.seed, repair_attempts=run.repair_attempts)
        report = verify_graded_certificate(graded, graded_cert)
        cert_payload = graded_cert.to_payload()
        rendered = [f"even {line}" for line in render_certificate(graded_cert.even)]
        rendered += [f"odd {line}" for line in render_certificate(graded_cert.odd)]
        mult_lines = [
            f"even: {graded_cert.even.decomposition.mult}",
            f"odd: {graded_cert.odd.decomposition.mult}",
        ]
    else:
        presentation = Presentation.from_payload(raw)
        cert = certificate(presentation, seed=run.seed, repair_attempts=run.repair_attempts)
        report = verify_certificate(presentation, cert)
        cert_payload = cert.to_payload()
        rendered = render_certificate(cert)
        mult_lines = [str(cert.decomposition.mult)]
    payload = {"certificate": cert_payload, "verification": report.to_payload()}
    _emit(run, payload, "\n".join([*mult_lines, *rendered, report.render()]))
    return _report_exit(report)


def cmd_star_eval(args: argparse.Namespace) -> int:
    """Print the normal form of every expression line of a file."""
    run = RunConfig.from_args(args)
    text = _read_text(run.inputs[0])
    r, n = text_dimensions(text, args.matrix_size, args.cuntz_index)
    lines = parse_lines(text, r, n, run.term_cap)
    payload = {
        "matrix_size": r,
        "cuntz_index": n,
        "results": [
            {
                "line": item.line,
                "input": item.source,
                "normal_form": str(item.value),
                "terms": len(item.value),
            }
            for item in lines
        ]
    }
    text_lines = [f"# r={r} n={n}"] + [f"{item.source} = {item.value}" for item in lines]
    _emit(run, payload, "\n".join(text_lines))
    return ExitCode.OK.value


def cmd_verify_hom(args: argparse.Namespace) -> int:
    """Check the relations and involutivity of a generator map; exit 0 iff all pass."""
    run = RunConfig.from_args(args)
    target = run.inputs[0]
    if target in {m.value for m in BuiltinMap} and not Path(target).exists():
        phi = load_builtin(target, run.term_cap)
    else:
        phi = GeneratorMap.from_payload(_read_json(target), run.term_cap)
    if args.mutate is not None:
        phi = mutate(phi, args.mutate)
    relations = verify_relations(phi, run.workers)
    involutive = verify_involutive(phi, run.workers)
    payload = {
        "map": target,
        "mutation": args.mutate,
        "relations": relations.to_payload(),
        "involutive": involutive.to_payload(),
        "passed": relations.passed and involutive.passed,
    }
    _emit(run, payload, f"{relations.render()}\n{involutive.render()}")
    return _report_exit(relations, involutive)


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 1 instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _add_global_flags(ap: argparse.ArgumentParser, default: Any) -> None:
    ap.add_argument("--format", choices=[f.value for f in OutputFormat], default=default)
    ap.add_argument("--seed", type=int, default=default, help="Seed of the decomposition repair search")
    ap.add_argument("--term-cap", type=int, default=default, help="StarPoly normalization term cap")
    ap.add_argument("--workers", type=int, default=default, help="Threads for verification items")
    ap.add_argument("--log-level", default=default, help="Logging level (default from Z2KIT_LOG_LEVEL)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="z2kit", description="Z[Z/2]-module and M_r ⊗ O_n toolkit")
    _add_global_flags(ap, None)
    # the same flags after the subcommand; SUPPRESS keeps values given before it
    common = _Parser(add_help=False)
    _add_global_flags(common, argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    m = sub.add_parser("multiplicities", parents=[common], help="Multiplicities of an involution matrix")
    m.add_argument("inputs", nargs=1, metavar="FILE")
    m.set_defaults(func=cmd_multiplicities)

    d = sub.add_parser("decompose", parents=[common], help="Canonical decomposition of an involution matrix")
    d.add_argument("inputs", nargs=1, metavar="FILE")
    d.set_defaults(func=cmd_decompose)

    r = sub.add_parser("resolve", parents=[common], help="Resolution certificate of a presentation")
    r.add_argument("inputs", nargs=1, metavar="FILE")
    r.set_defaults(func=cmd_resolve)

    s = sub.add_parser("star-eval", parents=[common], help="Normal forms of expressions, one per line")
    s.add_argument("inputs", nargs=1, metavar="FILE")
    s.add_argument("-r", dest="matrix_size", type=int, default=None, help="Matrix size")
    s.add_argument("-n", dest="cuntz_index", type=int, default=None, help="Cuntz index")
    s.set_defaults(func=cmd_star_eval)

    v = sub.add_parser("verify-hom", parents=[common], help="Verify a generator map (file or built-in name)")
    v.add_argument("inputs", nargs=1, metavar="MAP")
    v.add_argument("--mutate", choices=[x.value for x in Mutation], default=None, help="Test hook")
    v.set_defaults(func=cmd_verify_hom)
    return ap


def _configure_logging(level: str | None) -> None:
    name = (level or get_config().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _configure_logging(args.log_level)
        return int(args.func(args))
    except Z2KitError as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
