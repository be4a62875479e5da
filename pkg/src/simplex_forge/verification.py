"""The full theorem-verification suite behind ``simplex-forge check``."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import curvature, energy, hodge, valuations
from .complex_core import SimplicialComplex, euler_characteristic
from .documents import rational

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    status: str
    detail: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None
    seconds: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status}
        if self.reason:
            out["reason"] = self.reason
        out.update(self.detail)
        out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class VerificationReport:
    n: int
    dim: int | None
    f_vector: tuple[int, ...]
    chi: int
    checks: dict[str, CheckResult] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(c.status == PASS for c in self.checks.values())

    @property
    def any_failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "complex": {"n": self.n, "dim": self.dim, "f_vector": list(self.f_vector), "chi": self.chi},
            "checks": {k: c.to_dict() for k, c in self.checks.items()},
            "values": self.values,
            "all_passed": self.all_passed,
        }

    def render(self) -> str:
        lines = [
            f"complex: n={self.n} dim={self.dim} f={list(self.f_vector)} chi={self.chi}",
        ]
        for name, c in self.checks.items():
            extra = f" ({c.reason})" if c.reason else ""
            lines.append(f"  {name:<18} {c.status.upper()}{extra}")
        for k, v in self.values.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _timed(fn: Callable[[], CheckResult]) -> CheckResult:
    t0 = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t0
    return res


def _verdict(ok: bool, **detail) -> CheckResult:
    return CheckResult(PASS if ok else FAIL, detail)


def verify_complex(
    G: SimplicialComplex, *, max_elements: int = energy.DEFAULT_MAX_ELEMENTS, m_max: int = 5
) -> VerificationReport:
    if not len(G):
        raise ValueError("cannot verify the empty complex")
    chi = euler_characteristic(G)
    rep = VerificationReport(len(G), G.dim, G.f_vector, chi)
    too_large = len(G) > max_elements
    skip = CheckResult(SKIPPED, reason=f"too large ({len(G)} > {max_elements} elements)")

    def energy_check() -> CheckResult:
        e = energy.energy_sum(G)
        return _verdict(e == chi, energy_sum=e)

    def sphere_check() -> CheckResult:
        s = energy.sphere_sum(G)
        return _verdict(s == 0, sphere_sum=s)

    rep.checks["energy"] = _timed(energy_check)
    rep.checks["sphere"] = _timed(sphere_check)
    rep.checks["unit_ball"] = _timed(
        lambda: _verdict(all(G.chi_mask(G.ball_mask(i)) == 1 for i in range(len(G))))
    )

    if too_large:
        rep.checks["unimodularity"] = skip
        rep.checks["sphere_trace"] = skip
    else:
        t0 = time.perf_counter()
        er = energy.verify_energy_and_sphere(G, max_elements=None)
        elapsed = time.perf_counter() - t0
        rep.values["det_g"] = er.det_g
        rep.values["nullity_s"] = er.nullity_s
        rep.checks["unimodularity"] = _verdict(bool(er.unimodular and er.inverse_ok), det_g=er.det_g,
                                               inverse_ok=er.inverse_ok)
        rep.checks["sphere_trace"] = _verdict(er.sphere_super_trace == 0,
                                              super_trace=er.sphere_super_trace)
        rep.checks["unimodularity"].seconds = elapsed

    def gauss_bonnet() -> CheckResult:
        prof = curvature.levitt_curvature(G)
        poly = curvature.gauss_bonnet_polynomial_check(G)
        rep.values["curvature"] = {str(v): rational(k) for v, k in prof.values.items()}
        return _verdict(poly and prof.total == chi, polynomial_identity=poly, total=rational(prof.total))

    rep.checks["gauss_bonnet"] = _timed(gauss_bonnet)

    if too_large:
        rep.checks["euler_poincare"] = skip
        rep.checks["mckean_singer"] = skip
    else:
        def euler_poincare() -> CheckResult:
            b = hodge.betti(G)
            rep.values["betti"] = list(b)
            return _verdict(sum((-1) ** k * x for k, x in enumerate(b)) == chi, betti=list(b))

        rep.checks["euler_poincare"] = _timed(euler_poincare)
        rep.checks["mckean_singer"] = _timed(
            lambda: _verdict(hodge.mckean_singer_check(G, m_max), m_max=m_max)
        )

    def dehn_sommerville() -> CheckResult:
        ds = valuations.is_dehn_sommerville(G)
        sym = valuations.ds_symmetry(G)
        rep.values["dehn_sommerville"] = ds
        rep.values["h_vector"] = list(valuations.h_vector(G))
        odd_ok = not (ds and G.dim % 2 == 1) or chi == 0
        return _verdict(ds == sym and odd_ok, is_dehn_sommerville=ds, symmetry_agrees=ds == sym)

    rep.checks["dehn_sommerville"] = _timed(dehn_sommerville)
    return rep
