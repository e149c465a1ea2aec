"""Structured pass/fail records for verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algebra import Poly, format_rational


def jsonable(value: Any) -> Any:
    """Convert payload values to JSON-ready data; rationals become ``"p/q"`` strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Poly):
        return value.to_text()
    if hasattr(value, "to_text"):
        return value.to_text()
    if hasattr(value, "to_json_data"):
        return value.to_json_data()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    if isinstance(value, VerificationReport):
        return value.to_dict()
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class VerificationReport:
    """Outcome of one check: its parameters, pass flag, payload and any counterexamples."""

    name: str
    params: dict
    passed: bool
    payload: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        payload = dict(self.payload)
        if self.failures:
            payload["failures"] = self.failures
        return {"name": self.name, "status": self.status, "params": jsonable(self.params), "payload": jsonable(payload)}

    def __bool__(self):
        return self.passed
