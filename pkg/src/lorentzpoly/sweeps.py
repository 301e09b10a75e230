"""Family sweeps: enumerate instances, check each, report failures.

A sweep names a polynomial family, a mode, and size bounds.  Modes:

* ``certify``       - run the Lorentzian certifier on the family's
                      certification target (the normalized polynomial for
                      the Schur, skew, P-, Schubert, Grothendieck and key
                      families; the reflected-normalized polynomial for
                      ``schubert_dual``; the raw polynomial for ``degree``
                      and ``verma``, which are produced ready to check).
* ``support_only``  - check M-convexity of the raw support.
* ``inequality``    - check coefficient log-concavity along every root
                      direction e_i - e_j through the raw coefficients.

Bounds are capped (n <= 8, boxes <= 14) so every sweep terminates at desk
scale.  Reports are deterministic apart from the wall-time field; each
failure carries a self-contained reproduction command.
"""

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .certify import (
    is_m_convex,
    lorentzian_certify,
    m_convex_failure,
    root_direction_violations,
)
from .polynomials import Polynomial, normalize
from .schubert import (
    Permutation,
    all_permutations,
    degree_polynomial,
    grothendieck,
    homogeneous_grothendieck,
    key_polynomial,
    schubert,
    schubert_dual,
)
from .symmetric import (
    Partition,
    SkewShape,
    StrictPartition,
    schur,
    schur_p,
    skew_schur,
    verma_truncated_normalized,
)

FAMILIES = (
    "schur",
    "skew",
    "schur_p",
    "schubert",
    "schubert_dual",
    "grothendieck",
    "grothendieck_homog",
    "key",
    "degree",
    "verma",
)
MODES = ("certify", "support_only", "inequality")

CAP_N = 8
CAP_BOXES = 14
CAP_VARS = 8
CAP_DELTA = 6


class SweepCapError(ValueError):
    """A requested bound exceeds the hard desk-scale caps."""


@dataclass(frozen=True)
class SweepBounds:
    boxes: Optional[int] = None
    parts: Optional[int] = None
    vars: Optional[int] = None
    n: Optional[int] = None
    delta: Optional[int] = None
    max_part: Optional[int] = None

    def to_dict(self):
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class SweepSpec:
    family: str
    mode: str = "certify"
    bounds: SweepBounds = field(default_factory=SweepBounds)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")

    def to_dict(self):
        return {
            "family": self.family,
            "mode": self.mode,
            "bounds": self.bounds.to_dict(),
        }


@dataclass
class SweepReport:
    spec: SweepSpec
    instances_checked: int
    failures: list
    wall_time_s: float
    version: str = __version__

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {
            "spec": self.spec.to_dict(),
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "wall_time_s": self.wall_time_s,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"sweep family={self.spec.family} mode={self.spec.mode} "
            f"bounds={self.spec.bounds.to_dict()}",
            f"instances checked: {self.instances_checked}",
            f"failures: {len(self.failures)}",
        ]
        for failure in self.failures:
            lines.append(f"  FAIL {failure['instance']}: {failure['detail']}")
            lines.append(f"       repro: {failure['repro']}")
        lines.append(f"wall time: {self.wall_time_s:.3f}s  (version {self.version})")
        return "\n".join(lines)


# -- instance enumeration --------------------------------------------------


def partitions_within(boxes: int, parts: int):
    """All partitions with at most ``boxes`` boxes and ``parts`` parts."""

    def build(prefix, largest, budget):
        yield Partition(prefix)
        for part in range(min(largest, budget), 0, -1):
            if len(prefix) < parts:
                yield from build(prefix + [part], part, budget - part)

    yield from build([], boxes, boxes)


def subpartitions(lam: Partition):
    """All partitions contained in ``lam``."""
    rows = lam.parts

    def build(prefix, i):
        if i == len(rows):
            yield Partition(prefix)
            return
        cap = min(rows[i], prefix[-1] if prefix else rows[i])
        for part in range(cap, -1, -1):
            if part == 0:
                yield Partition(prefix)
                return
            yield from build(prefix + [part], i + 1)

    yield from build([], 0)


def strict_partitions_within(max_part: int, parts: int):
    """All strict partitions with parts <= max_part and at most ``parts`` parts."""

    def build(prefix, ceiling):
        yield StrictPartition(prefix)
        if len(prefix) < parts:
            for part in range(ceiling, 0, -1):
                yield from build(prefix + [part], part - 1)

    yield from build([], max_part)


def compositions_within(boxes: int, parts: int):
    """All vectors in N^parts with coordinate sum at most ``boxes``."""
    for total in range(boxes + 1):
        for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
            points = (0,) + cuts + (total,)
            yield tuple(points[i + 1] - points[i] for i in range(parts))


def _fmt(seq) -> str:
    return ",".join(str(x) for x in seq)


def _require(value, name, cap):
    if value is None:
        raise SweepCapError(f"bound {name!r} is required for this family")
    if value < 0 or value > cap:
        raise SweepCapError(f"bound {name}={value} outside 0..{cap}")
    return value


def _instances(spec: SweepSpec):
    """Yield (instance_id, payload) pairs; payloads are picklable primitives."""
    family = spec.family
    bounds = spec.bounds
    if family in ("schur", "skew"):
        boxes = _require(bounds.boxes, "boxes", CAP_BOXES)
        parts = _require(bounds.parts, "parts", CAP_BOXES)
        nvars = _require(bounds.vars, "vars", CAP_VARS)
        for lam in partitions_within(boxes, parts):
            inners = [Partition()] if family == "schur" else list(subpartitions(lam))
            for inner in inners:
                for m in range(1, nvars + 1):
                    if family == "schur":
                        yield f"lambda={_fmt(lam.parts)}|m={m}", (lam.parts, m)
                    else:
                        yield (
                            f"lambda={_fmt(lam.parts)}/nu={_fmt(inner.parts)}|m={m}",
                            (lam.parts, inner.parts, m),
                        )
    elif family == "schur_p":
        max_part = _require(bounds.max_part, "max_part", CAP_BOXES)
        parts = _require(bounds.parts, "parts", CAP_BOXES)
        nvars = _require(bounds.vars, "vars", CAP_VARS)
        for lam in strict_partitions_within(max_part, parts):
            for m in range(1, nvars + 1):
                yield f"lambda={_fmt(lam.parts)}|m={m}", (lam.parts, m)
    elif family == "key":
        boxes = _require(bounds.boxes, "boxes", CAP_BOXES)
        parts = _require(bounds.parts, "parts", CAP_VARS)
        for mu in compositions_within(boxes, parts):
            yield f"mu={_fmt(mu)}", (mu,)
    elif family in ("schubert", "schubert_dual", "grothendieck",
                    "grothendieck_homog", "degree"):
        n = _require(bounds.n, "n", CAP_N)
        for w in all_permutations(n):
            yield f"w={''.join(str(v) for v in w.one_line)}", (w.one_line,)
    elif family == "verma":
        nvars = _require(bounds.vars, "vars", CAP_VARS)
        delta_cap = _require(bounds.delta, "delta", CAP_DELTA)
        for m in range(1, nvars + 1):
            for delta in itertools.product(range(delta_cap + 1), repeat=m):
                yield f"delta={_fmt(delta)}", (delta,)
    else:  # pragma: no cover
        raise AssertionError(family)


def _raw_polynomial(family: str, payload) -> Polynomial:
    if family == "schur":
        lam, m = payload
        return schur(Partition(lam), m)
    if family == "skew":
        lam, inner, m = payload
        return skew_schur(SkewShape(Partition(lam), Partition(inner)), m)
    if family == "schur_p":
        lam, m = payload
        return schur_p(StrictPartition(lam), m)
    if family == "key":
        (mu,) = payload
        return key_polynomial(mu)
    if family == "schubert":
        return schubert(Permutation(payload[0]), _process_cache())
    if family == "schubert_dual":
        return schubert_dual(Permutation(payload[0]), _process_cache())
    if family == "grothendieck":
        return grothendieck(Permutation(payload[0]), _grothendieck_cache())
    if family == "grothendieck_homog":
        return homogeneous_grothendieck(Permutation(payload[0]), _grothendieck_cache())
    if family == "degree":
        return degree_polynomial(Permutation(payload[0]))
    if family == "verma":
        (delta,) = payload
        return verma_truncated_normalized(delta)
    raise AssertionError(family)


def _certify_targets(family: str, payload):
    """(label, polynomial) pairs the certify mode must pass."""
    if family in ("schur", "skew", "schur_p", "key", "grothendieck_homog"):
        return [("normalized", normalize(_raw_polynomial(family, payload)))]
    if family == "schubert":
        return [
            ("normalized", normalize(schubert(Permutation(payload[0]), _process_cache())))
        ]
    if family == "schubert_dual":
        return [("dual", schubert_dual(Permutation(payload[0]), _process_cache()))]
    if family == "grothendieck":
        w = Permutation(payload[0])
        g = grothendieck(w, _grothendieck_cache())
        ell = w.length()
        d = g.total_degree() if g else ell
        return [
            (
                f"component k={k}",
                normalize(g.homogeneous_component(ell + k)) * ((-1) ** k),
            )
            for k in range(0, d - ell + 1)
        ]
    if family in ("degree", "verma"):
        return [("raw", _raw_polynomial(family, payload))]
    raise AssertionError(family)


# Per-process memo tables for the divided-difference recursions; inserts
# are idempotent, so concurrent workers each filling their own copy agree.
_CACHES: dict = {}


def _process_cache() -> dict:
    return _CACHES.setdefault("schubert", {})


def _grothendieck_cache() -> dict:
    return _CACHES.setdefault("grothendieck", {})


def _repro_command(spec: SweepSpec, instance_id: str) -> str:
    parts = [f"lorentz sweep --family {spec.family}", f"--mode {spec.mode}"]
    bounds = spec.bounds
    for name in ("boxes", "parts", "vars", "n", "delta", "max_part"):
        value = getattr(bounds, name)
        if value is not None:
            flag = name.replace("_", "-")
            parts.append(f"--{flag} {value}")
    parts.append(f"--only '{instance_id}'")
    return " ".join(parts)


def _check_instance(spec: SweepSpec, instance_id: str, payload):
    """Return a failure dict or None."""
    if spec.mode == "certify":
        for label, target in _certify_targets(spec.family, payload):
            certificate = lorentzian_certify(target)
            if not certificate.is_lorentzian:
                return {
                    "instance": instance_id,
                    "target": label,
                    "detail": f"{label}: {certificate.failure.kind}",
                    "certificate": certificate.to_dict(),
                    "repro": _repro_command(spec, instance_id),
                }
        return None
    raw = _raw_polynomial(spec.family, payload)
    if spec.mode == "support_only":
        witness = m_convex_failure(raw.terms)
        if witness is not None:
            alpha, beta, index = witness
            return {
                "instance": instance_id,
                "target": "support",
                "detail": f"exchange fails at alpha={alpha} beta={beta} i={index}",
                "certificate": {
                    "kind": "support_not_m_convex",
                    "alpha": list(alpha),
                    "beta": list(beta),
                    "index": index,
                },
                "repro": _repro_command(spec, instance_id),
            }
        return None
    if spec.mode == "inequality":
        violations = root_direction_violations(raw)
        if violations:
            mu, i, j = violations[0]
            return {
                "instance": instance_id,
                "target": "coefficients",
                "detail": f"log-concavity fails at mu={mu} (i,j)=({i},{j})",
                "certificate": {
                    "kind": "root_direction_log_concavity",
                    "mu": list(mu),
                    "i": i,
                    "j": j,
                },
                "repro": _repro_command(spec, instance_id),
            }
        return None
    raise AssertionError(spec.mode)


def _worker(args):
    spec_dict, instance_id, payload = args
    spec = SweepSpec(
        spec_dict["family"], spec_dict["mode"], SweepBounds(**spec_dict["bounds"])
    )
    return _check_instance(spec, instance_id, payload)


def run_sweep(spec: SweepSpec, jobs: int = 1, only: Optional[str] = None) -> SweepReport:
    """Run a sweep; ``only`` restricts to instance ids containing the string."""
    start = time.monotonic()
    instances = [
        (instance_id, payload)
        for instance_id, payload in _instances(spec)
        if only is None or only in instance_id
    ]
    failures = []
    if jobs <= 1:
        for instance_id, payload in instances:
            failure = _check_instance(spec, instance_id, payload)
            if failure is not None:
                failures.append(failure)
    else:
        import multiprocessing

        spec_dict = spec.to_dict()
        tasks = [(spec_dict, instance_id, payload) for instance_id, payload in instances]
        with multiprocessing.Pool(jobs) as pool:
            for failure in pool.imap_unordered(_worker, tasks, chunksize=8):
                if failure is not None:
                    failures.append(failure)
    failures.sort(key=lambda f: (f["instance"], f.get("target", "")))
    return SweepReport(
        spec=spec,
        instances_checked=len(instances),
        failures=failures,
        wall_time_s=time.monotonic() - start,
    )
