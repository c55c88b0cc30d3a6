"""Command-line front end.

Each command is a thin wrapper over a library call; all output goes to
stdout, as text or (with ``--json``) as one JSON record. Exit codes: 0 on
success, 2 for invalid input or settings, 3 when an internal check
(integrality, route agreement, a failed verification) does not hold.

Settings precedence: defaults < ``--config FILE`` < ``LGSCHUBERT_*``
environment variables < command-line flags.
"""

import json
import logging
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional

import typer

from .combinat import format_partition, parse_partition
from .config_runtime import EngineSettings, load_settings
from .config_sources import EnvSource, source_for_path
from .constants import LOGGER
from .exceptions import AdmissibilityError, ConfigurationError, InvariantViolationError, PreconditionError, RankLimitError
from .idlab import (
    VerificationReport,
    verify_duality,
    verify_identity,
    verify_lemma1,
    verify_lemma2,
    verify_reduction,
    verify_relation,
    verify_routes,
)
from .integrate import Route, certify
from .lgcalc import degree_lg, degree_lg_via_integral, gw1, quantum_product, structure_constant
from .parser import parse_class_expr
from .polyring import as_rational, format_rational
from .symclasses import qtilde, qtilde_pfaffian

_logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Exact Schubert calculus on Lagrangian Grassmannians LG(n).",
    no_args_is_help=True,
    add_completion=False,
)


class VerifyTarget(str, Enum):
    IDENTITY = "identity"
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    REDUCTION = "reduction"
    RELATION = "relation"
    ROUTES = "routes"
    DUALITY = "duality"


@contextmanager
def _guarded() -> Iterator[None]:
    try:
        yield
    except (PreconditionError, ConfigurationError) as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=2)
    except InvariantViolationError as e:
        typer.echo(f"internal check failed: {e}", err=True)
        raise typer.Exit(code=3)


def _settings(ctx: typer.Context) -> EngineSettings:
    return ctx.obj if isinstance(ctx.obj, EngineSettings) else EngineSettings()


def _rank(ctx: typer.Context, n: int) -> int:
    limit = _settings(ctx).max_rank
    if not 1 <= n <= limit:
        raise RankLimitError(n, limit)
    return n


def _emit(record: dict, text: str, as_json: bool) -> None:
    typer.echo(json.dumps(record) if as_json else text)


_handler: logging.Handler | None = None


def _configure_logging(level: int | str) -> None:
    global _handler
    if _handler is not None:
        LOGGER.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    LOGGER.addHandler(_handler)
    LOGGER.setLevel(level)


def _parse_weights(text: str) -> tuple:
    try:
        return tuple(as_rational(w.strip()) for w in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise AdmissibilityError(f"malformed weights {text!r}", text) from None


@app.callback()
def main(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", help="Settings file (.json, .yaml, .yml)."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Thread pool size for fixed-point sums."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr."),
):
    """Exact Schubert calculus on Lagrangian Grassmannians LG(n)."""
    with _guarded():
        sources = [source_for_path(config)] if config else []
        sources.append(EnvSource())
        settings = load_settings(*sources)
        if workers is not None:
            settings = settings.override(workers=workers)
    _configure_logging(logging.DEBUG if verbose else settings.log_level)
    ctx.obj = settings


@app.command()
def degree(
    ctx: typer.Context,
    n: int = typer.Option(..., "-n", help="Rank."),
    check: bool = typer.Option(False, "--check", help="Also integrate s1^{n(n+1)/2} and compare."),
    route: Route = typer.Option(Route.MAIN, "--route", help="Integration route for --check."),
    as_json: bool = typer.Option(False, "--json"),
):
    """Degree of LG(n)."""
    with _guarded():
        n = _rank(ctx, n)
        value = degree_lg(n)
        record = {"n": n, "degree": value}
        if check:
            record["integral"] = degree_lg_via_integral(n, route, workers=_settings(ctx).workers)
            record["route"] = route.value
        _emit(record, str(value), as_json)


@app.command()
def integral(
    ctx: typer.Context,
    n: int = typer.Option(..., "-n", help="Rank."),
    expr: str = typer.Option(..., "--class", help='Class expression, e.g. "s1^2*s2^2".'),
    route: Route = typer.Option(Route.MAIN, "--route"),
    weights: Optional[str] = typer.Option(None, "--weights", help="Comma-separated torus weights for localization routes."),
    as_json: bool = typer.Option(False, "--json"),
):
    """Integral of a class over LG(n)."""
    with _guarded():
        n = _rank(ctx, n)
        c = parse_class_expr(expr, n)
        if weights and route in (Route.MAIN, Route.DP):
            raise PreconditionError(f"--weights only applies to the localization and grassmannian routes, not {route.value}")
        lambdas = _parse_weights(weights) if weights else None
        cert = certify(c, n, route, lambdas, workers=_settings(ctx).workers)
        _emit(cert.to_record(), format_rational(cert.integral), as_json)


@app.command("qtilde")
def qtilde_command(
    ctx: typer.Context,
    n: int = typer.Option(..., "-n", help="Rank."),
    a: str = typer.Option(..., "--a", help='Strict partition, e.g. "4,2,1".'),
    pfaffian: bool = typer.Option(False, "--pfaffian", help="Expand the Pfaffian directly over matchings."),
    as_json: bool = typer.Option(False, "--json"),
):
    """Schubert class Q_a as a polynomial in s1..sn."""
    with _guarded():
        n = _rank(ctx, n)
        alpha = parse_partition(a, n)
        c = qtilde_pfaffian(alpha, n) if pfaffian else qtilde(alpha, n)
        _emit({"n": n, "a": format_partition(alpha), "class": str(c)}, str(c), as_json)


@app.command()
def structure(
    ctx: typer.Context,
    n: int = typer.Option(..., "-n", help="Rank."),
    a: str = typer.Option(..., "--a"),
    b: str = typer.Option(..., "--b"),
    c: str = typer.Option(..., "--c", help="The partition g of e_{a,b}^g."),
    as_json: bool = typer.Option(False, "--json"),
):
    """Structure constant e_{a,b}^c of H*(LG(n))."""
    with _guarded():
        n = _rank(ctx, n)
        alpha, beta, gamma = (parse_partition(p, n) for p in (a, b, c))
        value = structure_constant(alpha, beta, gamma, n)
        record = {"n": n, "a": format_partition(alpha), "b": format_partition(beta), "c": format_partition(gamma), "coef": value}
        _emit(record, str(value), as_json)


@app.command("gw1")
def gw1_command(
    ctx: typer.Context,
    n: int = typer.Option(..., "-n", help="Rank."),
    a: str = typer.Option(..., "--a"),
    b: str = typer.Option(..., "--b"),
    c: str = typer.Option(..., "--c", help="Third class, passed as written (not dualized)."),
    as_json: bool = typer.Option(False, "--json"),
):
    """Degree-1 Gromov-Witten invariant <s_a, s_b, s_c>_1 of LG(n)."""
    with _guarded():
        n = _rank(ctx, n)
        if n + 1 > _settings(ctx).max_rank:
            raise RankLimitError(n + 1, _settings(ctx).max_rank)
        alpha, beta, delta = (parse_partition(p, n) for p in (a, b, c))
        value = gw1(alpha, beta, delta, n)
        record = {"n": n, "a": format_partition(alpha), "b": format_partition(beta), "c": format_partition(delta), "invariant": value}
        _emit(record, str(value), as_json)


@app.command()
def qprod(
    ctx: typer.Context,
    n: int = typer.Option(..., "-n", help="Rank."),
    a: str = typer.Option(..., "--a"),
    b: str = typer.Option(..., "--b"),
    as_json: bool = typer.Option(False, "--json"),
):
    """Quantum product s_a * s_b in qH*(LG(n))."""
    with _guarded():
        n = _rank(ctx, n)
        result = quantum_product(parse_partition(a, n), parse_partition(b, n), n, workers=_settings(ctx).workers)
        _emit(result.to_record(), str(result), as_json)


def _run_verification(target: VerifyTarget, n: int, seed: int, trials: int, workers: int) -> VerificationReport:
    if target is VerifyTarget.IDENTITY:
        return verify_identity(n, seed, trials)
    if target is VerifyTarget.LEMMA1:
        return verify_lemma1(seed, trials)
    if target is VerifyTarget.LEMMA2:
        return verify_lemma2(n, seed, trials)
    if target is VerifyTarget.REDUCTION:
        return verify_reduction(n, seed, trials)
    if target is VerifyTarget.RELATION:
        return verify_relation(n, seed, trials, workers=workers)
    if target is VerifyTarget.ROUTES:
        return verify_routes(n, seed, trials, workers=workers)
    return verify_duality(n, workers=workers)


@app.command()
def verify(
    ctx: typer.Context,
    target: VerifyTarget = typer.Argument(..., help="Statement to check."),
    n: int = typer.Option(2, "-n", help="Rank."),
    seed: Optional[int] = typer.Option(None, "--seed", min=0),
    trials: Optional[int] = typer.Option(None, "--trials", min=1),
    as_json: bool = typer.Option(False, "--json"),
):
    """Check an identity on seeded random instances; exit 3 if any instance fails."""
    with _guarded():
        settings = _settings(ctx)
        n = _rank(ctx, n)
        report = _run_verification(
            target,
            n,
            settings.seed if seed is None else seed,
            settings.trials if trials is None else trials,
            settings.workers,
        )
        status = "ok" if report.passed else "FAILED"
        rank = "" if report.n is None else f" n={report.n}"
        text = "\n".join([f"{report.target}{rank} seed={report.seed} trials={report.trials}: {status}", *report.failures])
        _emit(report.to_record(), text, as_json)
    if not report.passed:
        raise typer.Exit(code=3)


if __name__ == "__main__":
    app()
