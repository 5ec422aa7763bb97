"""One function per subcommand.

Every command takes the parsed arguments (already merged with the settings
defaults) and returns a :class:`CommandResult`; printing and exit codes are
left to ``run_fgl``.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from chern.classes import expand_product_h, multiplicativity_check
from chern.projective import ProjectiveClass, projective_ring_reduce
from core.document import dumps_canonical, polynomial_to_document, ring_to_document, series_to_document
from core.errors import DegreeTooSmall, UsageError
from core.loader import load_document
from core.plugins import get_fgl_type
from core.ring import INTEGERS, PLocalIntegers, make_ring
from core.scalars import require_prime
from core.series import TruncatedSeries
from fgl.law import FormalGroupLaw, check_fgl_axioms, fgl_exp, fgl_log, n_series
from fgl.orientation import roundtrip_report
from fgl.typification import idempotency_certificate, p_typify
from universal.hazewinkel import brown_peterson_fgl, hazewinkel_generators
from universal.lazard import universal_fgl

from .certificate import (
    AXIOMS,
    IDEMPOTENCY,
    MULTIPLICATIVITY,
    P_LOCALITY,
    ROUNDTRIP,
    STRICT_ISO,
    Certificate,
)

LOCALIZABLE_BUILTINS = ("additive", "multiplicative", "scaled")


@dataclass
class CommandResult:
    document: Dict[str, Any]
    text: str
    certificates: List[Certificate] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(c.verdict for c in self.certificates)

    def render(self, fmt: str) -> str:
        if fmt == "text":
            lines = [self.text] + [str(c) for c in self.certificates]
            return "\n".join(line for line in lines if line) + "\n"
        return dumps_canonical(self.document)


Command = Callable[[argparse.Namespace], CommandResult]
COMMANDS: Dict[str, Command] = {}


def command(name: str) -> Callable[[Command], Command]:
    def register(func: Command) -> Command:
        COMMANDS[name] = func
        return func

    return register


# ----------------------------------------------------------------------
# Inputs
# ----------------------------------------------------------------------
def _prime(args: argparse.Namespace) -> int:
    if args.prime is None:
        raise UsageError(f"{args.command} needs --prime")
    return require_prime(args.prime)


def _load_series(path: str, degree: Optional[int]) -> TruncatedSeries:
    series = load_document(path)
    if degree is not None and degree < series.truncation:
        series = series.truncate(degree)
    elif degree is not None and degree > series.truncation:
        raise DegreeTooSmall(f"{path} is only known to degree {series.truncation}, not {degree}")
    return series


def _input_series(args: argparse.Namespace) -> Tuple[TruncatedSeries, Dict[str, Any]]:
    """The series named by ``--input`` or ``--builtin`` and its description for the digest."""
    if args.input:
        series = _load_series(args.input, args.degree_given)
        return series, series_to_document(series)
    if args.builtin:
        if args.builtin == "universal" and args.degree_given is None:
            raise UsageError("--builtin universal needs --degree")
        factory = get_fgl_type(args.builtin)
        params: Dict[str, Any] = {}
        ring = None
        if args.builtin in LOCALIZABLE_BUILTINS and args.prime is not None:
            ring = make_ring(PLocalIntegers(require_prime(args.prime)))
        if args.builtin == "scaled":
            params["a"] = args.a
        law = factory(args.degree, ring, **params)
        return law.series, {"builtin": args.builtin, "degree": args.degree, **params}
    raise UsageError(f"{args.command} needs --input or --builtin")


def _input_law(args: argparse.Namespace) -> Tuple[FormalGroupLaw, Dict[str, Any]]:
    series, described = _input_series(args)
    return FormalGroupLaw(series), described


def _localized(law: FormalGroupLaw, p: int) -> FormalGroupLaw:
    """Integer laws are read over ``Z_(p)`` for p-typification."""
    if law.ring.base.kind == INTEGERS:
        return law.change_ring(law.ring.with_base(PLocalIntegers(p)))
    return law


def _inputs(args: argparse.Namespace, described: Dict[str, Any], **extra: Any) -> Dict[str, Any]:
    return {"command": args.command, "input": described, **extra}


# ----------------------------------------------------------------------
# Formal group laws
# ----------------------------------------------------------------------
@command("check")
def check_command(args: argparse.Namespace) -> CommandResult:
    series, described = _input_series(args)
    report = check_fgl_axioms(series)
    cert = Certificate.from_axioms(AXIOMS, report, _inputs(args, described))
    return CommandResult({"certificate": cert.to_document()}, str(series), [cert])


@command("log")
def log_command(args: argparse.Namespace) -> CommandResult:
    law, _ = _input_law(args)
    log = fgl_log(law)
    return CommandResult({"log": series_to_document(log)}, str(log))


@command("exp")
def exp_command(args: argparse.Namespace) -> CommandResult:
    law, _ = _input_law(args)
    exp = fgl_exp(law)
    return CommandResult({"exp": series_to_document(exp)}, str(exp))


@command("nseries")
def nseries_command(args: argparse.Namespace) -> CommandResult:
    law, _ = _input_law(args)
    series = n_series(law, args.n)
    return CommandResult({"n": args.n, "series": series_to_document(series)}, str(series))


@command("ptypify")
def ptypify_command(args: argparse.Namespace) -> CommandResult:
    p = _prime(args)
    law, described = _input_law(args)
    typical, epsilon = p_typify(_localized(law, p), p)
    inputs = _inputs(args, described, prime=p)
    strict = Certificate.from_axioms(STRICT_ISO, epsilon.violations(), inputs)
    local = Certificate.from_checks(
        P_LOCALITY,
        {"fgl": typical.series.is_p_local(p), "iso": epsilon.series.is_p_local(p)},
        inputs,
    )
    document = {
        "prime": p,
        "fgl": series_to_document(typical.series),
        "iso": series_to_document(epsilon.series),
        "certificates": [strict.to_document(), local.to_document()],
    }
    text = f"F_typ = {typical}\nepsilon = {epsilon.series}"
    return CommandResult(document, text, [strict, local])


@command("idempotent")
def idempotent_command(args: argparse.Namespace) -> CommandResult:
    p = _prime(args)
    law, described = _input_law(args)
    certificate = idempotency_certificate(_localized(law, p), p)
    _, epsilon = certificate.first_pass
    again, iso = certificate.second_pass
    cert = Certificate.from_checks(
        IDEMPOTENCY,
        {"same_law": again == certificate.first_pass[0], "identity_iso": iso.is_identity},
        _inputs(args, described, prime=p),
    )
    document = {"prime": p, "orientation": series_to_document(epsilon.series), "certificate": cert.to_document()}
    return CommandResult(document, f"epsilon = {epsilon.series}", [cert])


@command("orient-roundtrip")
def orient_roundtrip_command(args: argparse.Namespace) -> CommandResult:
    if not args.orientation:
        raise UsageError("orient-roundtrip needs --orientation")
    law, described = _input_law(args)
    f = _load_series(args.orientation, None)
    report = roundtrip_report(f, law)
    cert = Certificate.from_checks(
        ROUNDTRIP,
        {"forward": report.forward, "recovered": report.recovered, "backward": report.backward},
        _inputs(args, described, orientation=series_to_document(f)),
    )
    return CommandResult({"certificate": cert.to_document()}, f"f = {f}", [cert])


# ----------------------------------------------------------------------
# Universal laws
# ----------------------------------------------------------------------
@command("universal")
def universal_command(args: argparse.Namespace) -> CommandResult:
    ctx = universal_fgl(args.degree)
    document = {"fgl": series_to_document(ctx.law.series), "log": series_to_document(ctx.log)}
    return CommandResult(document, f"F = {ctx.law}\nlog = {ctx.log}")


@command("hazewinkel")
def hazewinkel_command(args: argparse.Namespace) -> CommandResult:
    p = _prime(args)
    data = hazewinkel_generators(p, args.count, args.degree)
    document = {
        "prime": p,
        "ring": ring_to_document(data.ring),
        "generators": [polynomial_to_document(v)["terms"] for v in data.generators],
        "log_coefficients": [polynomial_to_document(c)["terms"] for c in data.log_coefficients],
    }
    text = "\n".join(f"v{i} = {v}" for i, v in enumerate(data.generators, start=1))
    return CommandResult(document, text)


@command("bp")
def bp_command(args: argparse.Namespace) -> CommandResult:
    p = _prime(args)
    law = brown_peterson_fgl(p, args.degree)
    return CommandResult({"prime": p, "fgl": series_to_document(law.series)}, str(law))


# ----------------------------------------------------------------------
# Chern calculus
# ----------------------------------------------------------------------
def _multiplicative_sequence(args: argparse.Namespace) -> Tuple[TruncatedSeries, Dict[str, Any]]:
    """``h`` read directly, or ``epsilon(t)/t`` of the idempotent when a law and a prime are given."""
    series, described = _input_series(args)
    if series.arity == 1:
        return series, described
    p = _prime(args)
    _, epsilon = p_typify(_localized(FormalGroupLaw(series), p), p)
    return epsilon.series.shift_down(), {"idempotent_of": described, "prime": p}


@command("chern-expand")
def chern_expand_command(args: argparse.Namespace) -> CommandResult:
    h, described = _multiplicative_sequence(args)
    degree = min(args.degree, h.truncation)
    expansion = expand_product_h(h, args.n, degree)
    document: Dict[str, Any] = {"n": args.n, "degree": degree, "expansion": polynomial_to_document(expansion)}
    certificates = []
    if args.m is not None:
        verdict = multiplicativity_check(h, args.n, args.m, degree)
        cert = Certificate.from_checks(
            MULTIPLICATIVITY, {"whitney": verdict}, _inputs(args, described, n=args.n, m=args.m, degree=degree)
        )
        document["certificate"] = cert.to_document()
        certificates.append(cert)
    return CommandResult(document, str(expansion), certificates)


def _projective_document(cls: ProjectiveClass) -> Dict[str, Any]:
    return {
        "dimension": cls.dimension,
        "ring": ring_to_document(cls.ring),
        "coefficients": [polynomial_to_document(a)["terms"] for a in cls.coefficients],
    }


@command("projective-reduce")
def projective_reduce_command(args: argparse.Namespace) -> CommandResult:
    if not args.input:
        raise UsageError("projective-reduce needs --input")
    series = _load_series(args.input, None)
    reduced = projective_ring_reduce(series, args.n)
    return CommandResult(_projective_document(reduced), str(reduced))
