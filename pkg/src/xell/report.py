"""Structured pass/fail records for identity checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .polycore import Poly, RatFunc

SCHEMA = "xell/1"


@dataclass
class VerificationReport:
    check: str
    identity: str
    params: dict
    passed: bool
    residual: Any = None
    detail: dict = field(default_factory=dict)
    runtime_ms: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "check": self.check,
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "residual": _residual_json(self.residual),
        }
        if self.detail:
            out["detail"] = self.detail
        if timing:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def _residual_json(r):
    if r is None:
        return None
    if isinstance(r, (Poly, RatFunc)):
        return r.to_json()
    if isinstance(r, (list, tuple)):
        return [_residual_json(x) for x in r]
    if isinstance(r, float):
        return r
    return str(r)


def exact_report(check: str, identity: str, params: dict, residuals: list, detail=None,
                 t0: float | None = None) -> VerificationReport:
    """Pass iff every residual rational function/polynomial is identically zero."""
    bad = [r for r in residuals if not r.is_zero()]
    ms = (time.perf_counter() - t0) * 1e3 if t0 is not None else 0.0
    return VerificationReport(
        check=check,
        identity=identity,
        params=params,
        passed=not bad,
        residual=[r.num if isinstance(r, RatFunc) else r for r in bad] or None,
        detail=detail or {},
        runtime_ms=ms,
    )
