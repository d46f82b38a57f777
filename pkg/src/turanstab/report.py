"""Certificate rows (CSV) and the human-readable report."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .oracle import OracleReport
from .stability import StabilityCertificate

SCHEMA_TAG = "# schema: turanstab-certificate v1"

COLUMNS = (
    "n",
    "p",
    "t",
    "s",
    "internal_total",
    "h0_edges",
    "ed_G_K",
    "bound_3t_ok",
    "imbalance",
    "imbalance_ok",
    "ed_K_Tshape",
    "co2_ok",
    "seed",
    "oracle_max_p_partite_edges",
    "oracle_exact_ed",
    "oracle_ok",
    "source",
)


def _flag(value: bool | None) -> str:
    if value is None:
        return "na"
    return "true" if value else "false"


def oracle_sandwich(cert: StabilityCertificate, report: OracleReport) -> bool:
    """``e(G)-t <= max p-partite <= e(G)-internal`` style checks, all exact."""
    e_G = report.graph_edges
    return (
        e_G - cert.t <= report.max_p_partite_edges
        and report.max_p_partite_edges <= e_G
        and cert.internal_total >= report.min_deletion
        and report.exact_ed_to_p_partite <= cert.ed_G_K <= 3 * cert.t
    )


@dataclass(frozen=True)
class CertificateRow:
    cert: StabilityCertificate
    oracle: OracleReport | None = None
    source: str = ""

    @property
    def oracle_ok(self) -> bool | None:
        return None if self.oracle is None else oracle_sandwich(self.cert, self.oracle)

    def verdicts(self) -> dict[str, bool | None]:
        out = self.cert.verdicts()
        out["oracle"] = self.oracle_ok
        return out

    def all_applicable_hold(self) -> bool:
        return all(v is not False for v in self.verdicts().values())

    def values(self) -> list[str]:
        c = self.cert
        return [
            str(c.n),
            str(c.p),
            str(c.t),
            str(c.s),
            str(c.internal_total),
            str(c.h0_edges),
            str(c.ed_G_K),
            _flag(c.bound_3t_ok),
            str(c.imbalance),
            _flag(c.imbalance_ok),
            str(c.ed_K_Tshape),
            _flag(c.co2_ok),
            "" if c.seed is None else str(c.seed),
            "" if self.oracle is None else str(self.oracle.max_p_partite_edges),
            "" if self.oracle is None else str(self.oracle.exact_ed_to_p_partite),
            "" if self.oracle is None else _flag(self.oracle_ok),
            self.source,
        ]


def csv_lines(rows, header=True) -> str:
    buf = io.StringIO()
    if header:
        buf.write(SCHEMA_TAG + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.values())
    return buf.getvalue()


def _ratio(num: int, den: int) -> str:
    if den == 0:
        return "undefined (t = 0)" if num else "0 (t = 0)"
    frac = Fraction(num, den)
    return f"{frac.numerator}/{frac.denominator}"


def human_report(row: CertificateRow) -> str:
    c = row.cert
    status = lambda ok: {True: "holds", False: "FAILS", None: "n/a"}[ok]
    lines = [
        f"n={c.n} p={c.p} e(G)={c.h0_edges + c.internal_total} t={c.t} steps={c.s}",
        f"  partition sizes: {list(c.part_sizes)}",
        f"  deletion  internal_total={c.internal_total} <= t={c.t}: {status(c.bound_ok)}",
        f"  completion ed(G,K)={c.ed_G_K} <= 3t={3 * c.t}: {status(c.bound_3t_ok)}"
        f"  (ed/t = {_ratio(c.ed_G_K, c.t)})",
        f"  imbalance {c.imbalance} <= 4tp^2={4 * c.t * c.p * c.p}: {status(c.imbalance_ok)}",
        f"  balancing ed(K,T)={c.ed_K_Tshape}, ed^2*p={c.ed_K_Tshape ** 2 * c.p}"
        f" <= n^2*t={c.n * c.n * c.t}: {status(c.co2_ok)}",
    ]
    if row.oracle is not None:
        o = row.oracle
        lines.append(
            f"  oracle: max p-partite={o.max_p_partite_edges} (min deletion {o.min_deletion}),"
            f" exact ed={o.exact_ed_to_p_partite}, strings={o.enumerated}: {status(row.oracle_ok)}"
        )
    return "\n".join(lines) + "\n"
