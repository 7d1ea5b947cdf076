"""Serializable report for one Chevalley-Bass computation.

JSON shape (schema_version "1"), documented in ``report.schema.json``.
Integers above 2**53 are written as decimal strings so that consumers
using IEEE doubles do not lose precision; :func:`from_json` accepts both.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .cbalgo import CBReport

SCHEMA_VERSION = "1"
_SAFE = 1 << 53


def encode_int(x: int):
    return x if -_SAFE <= x <= _SAFE else str(x)


def decode_int(x) -> int:
    return int(x)


@dataclass(frozen=True)
class CheckEntry:
    j: int
    t: int
    n: int
    surjective: bool


@dataclass(frozen=True)
class PrimeEntry:
    p: int
    valuation: int
    shortcut: str
    checks: tuple[CheckEntry, ...] = ()


@dataclass(frozen=True)
class ReportDocument:
    modulus: int
    generators: tuple[int, ...]
    conductor: int
    lam: int
    f_prime: int
    lower_bound: int
    upper_bound: int
    lambda_cb: int
    per_prime: tuple[PrimeEntry, ...]
    timing_ms: int = 0
    schema_version: str = field(default=SCHEMA_VERSION)

    @classmethod
    def from_report(cls, rep: CBReport, timing_ms: int = 0) -> "ReportDocument":
        inv = rep.invariants
        per = tuple(
            PrimeEntry(r.p, r.valuation, r.shortcut.value,
                       tuple(CheckEntry(c.j, c.t, c.n, c.surjective) for c in r.checks))
            for r in rep.per_prime
        )
        return cls(rep.spec.modulus, rep.spec.galois_gens, inv.conductor, inv.lam,
                   inv.f_prime, inv.lower_bound, inv.upper_bound, rep.lambda_cb, per, timing_ms)

    @property
    def total_checks(self) -> int:
        return sum(len(p.checks) for p in self.per_prime)

    def numeric_content(self) -> dict:
        """Everything except timing, for comparisons across presentations."""
        d = asdict(self)
        for key in ("timing_ms", "modulus", "generators", "schema_version"):
            d.pop(key)
        return d

    def to_dict(self) -> dict:
        e = encode_int
        return {
            "schema_version": self.schema_version,
            "input": {"modulus": e(self.modulus), "generators": [e(g) for g in self.generators]},
            "invariants": {
                "conductor": e(self.conductor),
                "lambda": e(self.lam),
                "f_prime": e(self.f_prime),
                "lower_bound": e(self.lower_bound),
                "upper_bound": e(self.upper_bound),
            },
            "lambda_cb": e(self.lambda_cb),
            "per_prime": [
                {
                    "p": e(p.p),
                    "valuation": p.valuation,
                    "shortcut": p.shortcut,
                    "checks": [
                        {"j": c.j, "t": c.t, "n": e(c.n), "surjective": c.surjective}
                        for c in p.checks
                    ],
                }
                for p in self.per_prime
            ],
            "total_checks": self.total_checks,
            "timing_ms": self.timing_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        i = decode_int
        inv = d["invariants"]
        per = tuple(
            PrimeEntry(i(p["p"]), i(p["valuation"]), p["shortcut"],
                       tuple(CheckEntry(i(c["j"]), i(c["t"]), i(c["n"]), bool(c["surjective"]))
                             for c in p["checks"]))
            for p in d["per_prime"]
        )
        return cls(
            modulus=i(d["input"]["modulus"]),
            generators=tuple(i(g) for g in d["input"]["generators"]),
            conductor=i(inv["conductor"]),
            lam=i(inv["lambda"]),
            f_prime=i(inv["f_prime"]),
            lower_bound=i(inv["lower_bound"]),
            upper_bound=i(inv["upper_bound"]),
            lambda_cb=i(d["lambda_cb"]),
            per_prime=per,
            timing_ms=i(d.get("timing_ms", 0)),
            schema_version=d["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        gens = ",".join(str(g) for g in self.generators) or "-"
        rows = [
            ("modulus", str(self.modulus)),
            ("generators", gens),
            ("conductor", str(self.conductor)),
            ("lambda", str(self.lam)),
            ("f_prime", str(self.f_prime)),
            ("lower_bound", str(self.lower_bound)),
            ("upper_bound", str(self.upper_bound)),
            ("lambda_cb", str(self.lambda_cb)),
        ]
        width = len("total_checks")
        lines = [f"{k:<{width}}  {v}" for k, v in rows]
        for p in self.per_prime:
            lines.append(f"prime {p.p}: valuation {p.valuation} ({p.shortcut}), {len(p.checks)} checks")
            for c in p.checks:
                verdict = "surjective" if c.surjective else "NOT surjective"
                lines.append(f"  j={c.j} t={c.t} n={c.n} {verdict}")
        lines.append(f"{'total_checks':<{width}}  {self.total_checks}")
        lines.append(f"{'timing_ms':<{width}}  {self.timing_ms}")
        return "\n".join(lines)
