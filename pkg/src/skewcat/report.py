"""Budgets, witnesses and structured reports for law suites.

Every checker in this package produces a CheckReport: one record per law
family, with the instantiation handles and payload digests of anything
that failed.  Reports are deterministic given the same budget and seed,
and serialize to JSON with a versioned schema.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any, Iterable, Iterator, Sequence

SCHEMA_VERSION = 1
DEFAULT_CAP = 10_000


def stable_text(x: Any) -> str:
    """Canonical text for payloads; repr-stable across processes."""
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "T" if x else "F"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return "'" + x + "'"
    if isinstance(x, Fraction):
        return "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, (tuple, list)):
        return "(" + ",".join(stable_text(v) for v in x) + ")"
    text = getattr(x, "stable_text", None)
    if callable(text):
        return text()
    return repr(x)


def digest(x: Any) -> str:
    return hashlib.sha256(stable_text(x).encode()).hexdigest()[:12]


@dataclass(frozen=True)
class Budget:
    """Enumeration budget.

    A tuple space is swept exhaustively when its size is at most `cap`;
    otherwise `cap` tuples are drawn from a seeded generator, and the
    seed is recorded in the report.
    """

    cap: int = DEFAULT_CAP
    seed: int = 0

    def plan(self, salt: str, *spaces: Sequence) -> "SamplePlan":
        return SamplePlan(self, salt, tuple(tuple(s) for s in spaces))


class SamplePlan:
    """Deterministic iteration over a product of finite spaces."""

    def __init__(self, budget: Budget, salt: str, spaces: tuple):
        self.budget = budget
        self.salt = salt
        self.spaces = spaces
        self.total = prod(len(s) for s in spaces) if spaces else 1
        self.exhaustive = self.total <= budget.cap

    def __iter__(self) -> Iterator[tuple]:
        if not self.spaces:
            yield ()
            return
        if self.exhaustive:
            yield from itertools.product(*self.spaces)
            return
        rng = random.Random(self.budget.seed ^ zlib.crc32(self.salt.encode()))
        sizes = [len(s) for s in self.spaces]
        for _ in range(self.budget.cap):
            idx = rng.randrange(self.total)
            out = []
            for n in reversed(sizes):
                idx, r = divmod(idx, n)
                out.append(r)
            yield tuple(s[i] for s, i in zip(self.spaces, reversed(out)))

    def rng(self) -> random.Random:
        """Auxiliary generator for picking morphisms inside an instance."""
        return random.Random(~self.budget.seed ^ zlib.crc32(self.salt.encode()))


@dataclass
class Failure:
    law: str
    kind: str  # "law" | "shape" | "ill-typed" | "missing-witness" | ...
    instantiation: tuple
    lhs: str | None = None
    rhs: str | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "kind": self.kind,
            "instantiation": [str(h) for h in self.instantiation],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }


@dataclass
class LawRecord:
    law: str
    statement: str
    checked: int = 0
    exhaustive: bool = True
    seed: int = 0
    failures: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.errors

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "statement": self.statement,
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "status": "pass" if self.ok else "fail",
            "failures": [f.to_dict() for f in self.failures],
            "errors": [f.to_dict() for f in self.errors],
        }


class LawRun:
    """Accumulator for one law family inside a checker."""

    MAX_WITNESSES = 25

    def __init__(self, law: str, statement: str, plan: SamplePlan | None = None,
                 seed: int = 0):
        exhaustive = plan.exhaustive if plan is not None else True
        self.record = LawRecord(law, statement, exhaustive=exhaustive, seed=seed)

    def tick(self, n: int = 1) -> None:
        self.record.checked += n

    def fail(self, instantiation: tuple, lhs=None, rhs=None, detail: str = "") -> None:
        if len(self.record.failures) < self.MAX_WITNESSES:
            self.record.failures.append(Failure(
                self.record.law, "law", instantiation,
                None if lhs is None else digest(lhs),
                None if rhs is None else digest(rhs),
                detail,
            ))
        else:
            self.record.failures[-1].detail = "witness list truncated"

    def error(self, instantiation: tuple, kind: str, detail: str = "") -> None:
        if len(self.record.errors) < self.MAX_WITNESSES:
            self.record.errors.append(Failure(
                self.record.law, kind, instantiation, None, None, detail))

    def compare(self, eq, lhs, rhs, instantiation: tuple, detail: str = "") -> bool:
        """Count one instance; record a witness when eq(lhs, rhs) fails."""
        self.tick()
        if eq(lhs, rhs):
            return True
        self.fail(instantiation, lhs.payload, rhs.payload, detail)
        return False


@dataclass
class CheckReport:
    """Outcome of a law suite: per-family records plus summary counts."""

    name: str
    records: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.records)

    def record_for(self, law: str) -> LawRecord:
        for r in self.records:
            if r.law == law:
                return r
        raise KeyError(law)

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for r in other.records:
            if prefix:
                r = LawRecord(prefix + r.law, r.statement, r.checked,
                              r.exhaustive, r.seed, r.failures, r.errors)
            self.records.append(r)

    def to_dict(self) -> dict:
        n_fail = sum(len(r.failures) for r in self.records)
        n_err = sum(len(r.errors) for r in self.records)
        return {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "meta": self.meta,
            "summary": {
                "laws": len(self.records),
                "checked": sum(r.checked for r in self.records),
                "failures": n_fail,
                "errors": n_err,
            },
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def lines(self) -> list:
        out = []
        for r in self.records:
            tag = "PASS" if r.ok else "FAIL"
            scope = "exhaustive" if r.exhaustive else "sampled(seed=%d)" % r.seed
            out.append("[%s] %s: %d checked, %s" % (tag, r.law, r.checked, scope))
        return out
