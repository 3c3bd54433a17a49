"""Python access to the ellip library.

Every operation takes and returns the JSON documents of the ``ellip``
command-line tool: exact numbers are ``"p/q"`` strings, complex numbers are
``["re", "im"]`` decimal strings.

    >>> import ellip
    >>> ellip.rank1([], q=2)["kind"]
    'Algebraic'
"""

from __future__ import annotations

import json
from typing import Any, Optional

from . import _core

__all__ = [
    "EllipError",
    "SchemaError",
    "DomainError",
    "CheckFailed",
    "run",
    "commands",
    "zeta_defect",
    "mult_by_n",
    "primitive",
    "solve_divisor",
    "is_principal",
    "rank1",
    "consistency",
    "integrability",
    "dual",
    "realize",
    "verify_monodromy",
    "solve_twisted",
    "s_member",
    "selftest",
]


class EllipError(Exception):
    """Base of the errors raised here; ``document`` is the full reply."""

    def __init__(self, message: str, document: dict):
        super().__init__(message)
        self.document = document


class SchemaError(EllipError, ValueError):
    """Malformed input document (exit code 2 of the tool)."""


class DomainError(EllipError, ArithmeticError):
    """Input outside an operation's domain (exit code 3); ``kind`` names it."""

    @property
    def kind(self) -> str:
        return self.document["error"]["kind"]


class CheckFailed(EllipError, AssertionError):
    """An embedded verification failed (exit code 1)."""


def commands() -> dict[str, str]:
    return dict(_core.commands())


def run(command: str, document: Optional[dict] = None, *, precision: int = 30, seed: int = 1,
        curve: Optional[dict] = None, lattice: Optional[dict] = None, level: str = "fast",
        fault: bool = False, check: bool = True) -> dict:
    """Runs one subcommand and returns its reply document.

    With ``check`` set, failed checks raise CheckFailed; otherwise the reply
    is returned and its ``"pass"`` field tells.
    """
    code, text = _core.run(command, json.dumps(document or {}), precision, seed,
                           json.dumps(curve) if curve is not None else "",
                           json.dumps(lattice) if lattice is not None else "", level, fault)
    reply = json.loads(text)
    if code == 2:
        raise SchemaError(reply["error"]["message"], reply)
    if code == 3:
        raise DomainError(reply["error"]["message"], reply)
    if code == 1 and check:
        failed = [c["name"] for c in reply["checks"] if not c["pass"]]
        raise CheckFailed(f"{command}: failed checks {failed}", reply)
    return reply


def _result(command: str, document: dict, **kw: Any) -> Any:
    return run(command, document, **kw)["result"]


def zeta_defect(curve: dict, n: Optional[int] = None, **kw: Any) -> dict:
    """zeta(nz) - n zeta(z) as {"a", "b"} with value a(X) + b(X) Y."""
    doc = {"curve": curve}
    if n is not None:
        doc["n"] = n
    return _result("fzeta", doc, **kw)


def mult_by_n(curve: dict, f: dict, n: int, **kw: Any) -> dict:
    return _result("multn", {"curve": curve, "f": f, "n": n}, **kw)


def primitive(curve: dict, h: dict, **kw: Any) -> dict:
    return _result("primitive", {"curve": curve, "h": h}, **kw)


def solve_divisor(E: list, q: int, **kw: Any) -> dict:
    return _result("divsolve", {"E": E, "q": q}, **kw)


def is_principal(D: list, **kw: Any) -> bool:
    return _result("principal", {"D": D}, **kw)["principal"]


def rank1(div_a: list, q: int, **kw: Any) -> dict:
    return _result("rank1", {"div_a": div_a, "q": q}, **kw)


def consistency(curve: dict, A: list, B: list, **kw: Any) -> dict:
    return run("consistency", {"curve": curve, "A": A, "B": B}, check=False, **kw)["result"]


def integrability(curve: dict, A: list, B: list, mode: str = "partial", **kw: Any) -> dict:
    return run("integrable", {"curve": curve, "A": A, "B": B, "mode": mode}, check=False, **kw)["result"]


def dual(curve: dict, A: list, B: list, **kw: Any) -> dict:
    return _result("dual", {"curve": curve, "A": A, "B": B}, **kw)


def realize(M1: list, M2: list, lattice: Optional[dict] = None, **kw: Any) -> dict:
    doc = {"M1": M1, "M2": M2}
    if lattice is not None:
        doc["lattice"] = lattice
    return _result("monodromy-realize", doc, **kw)


def verify_monodromy(M1: list, M2: list, Z: dict, lattice: dict, **kw: Any) -> dict:
    """Reply document of monodromy-verify; does not raise on a large residual."""
    return run("monodromy-verify", {"M1": M1, "M2": M2, "Z": Z, "lattice": lattice}, check=False, **kw)


def solve_twisted(curve: dict, g: dict, f: dict, a: str, c: str, p: Optional[list] = None,
                  **kw: Any) -> dict:
    """u and p~ with g = (phi - a)(u) + p~ from (delta - c)g = (phi - a)f + p."""
    doc = {"curve": curve, "g": g, "f": f, "a": a, "c": c}
    if p is not None:
        doc["p"] = p
    return _result("appxa-solve", doc, **kw)


def s_member(curve: dict, f: dict, bound: int = 4, **kw: Any) -> dict:
    return _result("s-member", {"curve": curve, "f": f, "bound": bound}, **kw)


def selftest(level: str = "fast", seed: int = 1, fault: bool = False) -> dict:
    """Acceptance suites; returns the reply without raising."""
    return run("selftest", level=level, seed=seed, fault=fault, check=False)
