"""Batch certification of generated instances from a JSON sweep config.

Example config::

    {
      "oracle": false,
      "output": "sweep.csv",
      "specs": [
        {"kind": "perturbed_turan", "n": {"from": 10, "to": 12}, "p": [2, 3],
         "param": [0, 3], "seed_base": 100, "replicates": 2},
        {"kind": "sub_multipartite", "param": ["5,1@1/2"], "replicates": 3},
        {"kind": "clique_broken_gnp", "n": 9, "p": 2, "param": ["1/2"]}
      ]
    }

``n`` and ``p`` take an integer, a list, or an inclusive ``{"from", "to"}``
range; sub_multipartite derives both from its sizes. Replicate ``r`` uses seed
``seed_base + r``. Instances expand in the order spec, n, p, param, replicate.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import guards
from .errors import InputError
from .generators import GenSpec
from .oracle import oracle_report
from .report import CertificateRow
from .stability import corollary1_certificate


def _int_values(raw, name):
    if isinstance(raw, bool):
        raise InputError(f"{name} must be an integer, list or range")
    if isinstance(raw, int):
        return [raw]
    if isinstance(raw, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        return list(raw)
    if isinstance(raw, dict) and set(raw) == {"from", "to"}:
        return list(range(int(raw["from"]), int(raw["to"]) + 1))
    raise InputError(f"{name} must be an integer, list or {{'from', 'to'}} range, got {raw!r}")


@dataclass
class SweepConfig:
    genspecs: list[GenSpec]
    oracle_enabled: bool = False
    output: str | None = None

    @classmethod
    def from_dict(cls, data) -> SweepConfig:
        if not isinstance(data, dict):
            raise InputError("sweep config must be a JSON object")
        specs = data.get("specs", [])
        if not isinstance(specs, list):
            raise InputError("'specs' must be a list")
        genspecs = []
        for entry in specs:
            genspecs.extend(_expand(entry))
        return cls(genspecs, bool(data.get("oracle", False)), data.get("output"))

    @classmethod
    def load(cls, path) -> SweepConfig:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
        except OSError as exc:
            raise InputError(f"cannot read config: {exc}") from None
        return cls.from_dict(data)

    def check_guards(self) -> None:
        if not self.oracle_enabled:
            return
        for spec in self.genspecs:
            guards.require_oracle_guard(spec.n, spec.p)


def _expand(entry) -> list[GenSpec]:
    if not isinstance(entry, dict) or "kind" not in entry:
        raise InputError(f"spec entry needs a 'kind': {entry!r}")
    kind = entry["kind"]
    params = entry.get("param", [])
    if not isinstance(params, list):
        params = [params]
    replicates = int(entry.get("replicates", 1))
    seed_base = int(entry.get("seed_base", 0))
    out = []
    if kind == "sub_multipartite":
        for param in params:
            try:
                sizes = [int(a) for a in str(param).split("@")[0].split(",")]
            except ValueError:
                raise InputError(f"bad sub_multipartite param {param!r}") from None
            for r in range(replicates):
                out.append(GenSpec(kind, sum(sizes), len(sizes), str(param), seed_base + r))
        return out
    for n in _int_values(entry.get("n"), "n"):
        for p in _int_values(entry.get("p"), "p"):
            for param in params:
                for r in range(replicates):
                    out.append(GenSpec(kind, n, p, str(param), seed_base + r))
    return out


def certify_spec(spec: GenSpec, with_oracle: bool = False) -> CertificateRow:
    G = spec.build()
    cert, _ = corollary1_certificate(G, spec.p, seed=spec.seed)
    report = oracle_report(G, spec.p) if with_oracle else None
    return CertificateRow(cert, report, source=spec.format())


def _certify_args(args):
    return certify_spec(*args)


@dataclass
class SweepSummary:
    rows: int = 0
    theorem1: int = 0
    corollary1: int = 0
    oracle: int = 0
    imbalance: int = 0
    co2: int = 0
    not_applicable: int = 0

    @property
    def failures(self) -> int:
        """Failures of verdicts backed by a theorem (deletion, 3t, oracle sandwich)."""
        return self.theorem1 + self.corollary1 + self.oracle

    def add(self, row: CertificateRow) -> None:
        self.rows += 1
        v = row.verdicts()
        self.theorem1 += v["theorem1"] is False
        self.corollary1 += v["corollary1"] is False
        self.oracle += v["oracle"] is False
        self.imbalance += v["imbalance"] is False
        self.co2 += v["co2"] is False
        self.not_applicable += v["co2"] is None

    def line(self) -> str:
        return (
            f"# summary rows={self.rows} failures={self.failures} "
            f"theorem1_failures={self.theorem1} corollary1_failures={self.corollary1} "
            f"oracle_failures={self.oracle} imbalance_failures={self.imbalance} "
            f"co2_failures={self.co2} co2_not_applicable={self.not_applicable}"
        )


def run_sweep(config: SweepConfig, jobs: int = 1):
    """Certify every instance; rows come back in config order."""
    config.check_guards()
    work = [(spec, config.oracle_enabled) for spec in config.genspecs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_certify_args, work, chunksize=8))
    else:
        rows = [_certify_args(item) for item in work]
    summary = SweepSummary()
    for row in rows:
        summary.add(row)
    return rows, summary

