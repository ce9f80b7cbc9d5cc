"""Randomized law suite: deterministic trial generation, replay, reports.

Every trial draws from its own SplitMix64 stream, seeded from
(suite seed, law id, trial index), so results are a pure function of the
configuration: independent of execution order, identical across runs, and
identical under the process-parallel path (which partitions work per law).
The serialized report is canonical JSON with timing excluded; elapsed times
live only on the in-memory objects.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .._kernel import IMPLEMENTATION, active
from ..degrees import format_degree
from ..errors import UniverseMismatchError
from ..sets import HFS, Family, Universe
from . import generators as g
from .algebra import EXACT, Algebra, grid_algebra, hfs_to_plain
from .fixtures import Fixture
from .registry import Law, LawStatus, get_law, law_registry

DEFAULT_SEED = 20250808
MAX_GRID = 10**9
MAX_CARDINALITY = 64
MAX_UNIVERSE = 16
MAX_FAMILY = 8
WITNESS_CAP = 3


@dataclass(frozen=True)
class GeneratorConfig:
    """Deterministic description of a suite run."""

    seed: int = DEFAULT_SEED
    universe_size: tuple[int, int] = (1, 4)
    cardinality: tuple[int, int] = (1, 6)
    degree_grid: int = 100
    trials: int = 10_000
    family_size: tuple[int, int] = (1, 5)
    max_attempts: int = 1000

    def __post_init__(self) -> None:
        lo, hi = self.universe_size
        if not 1 <= lo <= hi <= MAX_UNIVERSE:
            raise ValueError(f"universe_size must be within 1..{MAX_UNIVERSE}")
        lo, hi = self.cardinality
        if not 1 <= lo <= hi <= MAX_CARDINALITY:
            raise ValueError(f"cardinality must be within 1..{MAX_CARDINALITY}")
        lo, hi = self.family_size
        if not 1 <= lo <= hi <= MAX_FAMILY:
            raise ValueError(f"family_size must be within 1..{MAX_FAMILY}")
        if not 1 <= self.degree_grid <= MAX_GRID:
            raise ValueError(f"degree_grid must be within 1..{MAX_GRID}")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")


# --- deterministic stream derivation ---------------------------------------

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def _mix(seed: int, *parts) -> int:
    h = (_FNV_OFFSET ^ (seed & _MASK64)) * _FNV_PRIME & _MASK64
    for part in parts:
        data = part.encode() if isinstance(part, str) else int(part).to_bytes(8, "little")
        for byte in data:
            h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def _trial_stream(config: GeneratorConfig, law_id: str, index: int):
    return active.Stream(_mix(config.seed, law_id, index))


# --- bindings ----------------------------------------------------------------


def _random_binding(law: Law, alg: Algebra, stream, ctx: g.GenContext) -> dict:
    binding = {}
    for name, kind in law.params:
        if kind == "set":
            binding[name] = g.rand_hfs(alg, stream, ctx)
        else:
            binding[name] = g.rand_family(alg, stream, ctx)
    return binding


def _make_binding(law: Law, alg: Algebra, stream, ctx: g.GenContext, max_attempts: int):
    """A guard-satisfying binding, or None on starvation."""
    if law.gen is not None:
        binding = law.gen(alg, stream, ctx)
        if binding is None:
            return None
        if law.guard is not None and not law.guard(alg, binding):
            return None
        return binding
    if law.guard is None:
        return _random_binding(law, alg, stream, ctx)
    for _ in range(max_attempts):
        binding = _random_binding(law, alg, stream, ctx)
        if law.guard(alg, binding):
            return binding
    return None


def _serialize_value(value, den: int):
    """Plain grid value -> JSON-able structure with exact decimal degrees."""
    if value and isinstance(value[0], tuple) and value[0] and isinstance(value[0][0], tuple):
        return [_serialize_value(member, den) for member in value]
    return [[format_degree(Fraction(num, den)) for num in h] for h in value]


def _universe_names(size: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, size + 1))


@dataclass(frozen=True)
class Witness:
    """A guard-true, claim-false binding, serializable and replayable."""

    law_id: str
    trial: int
    universe: tuple[str, ...]
    binding: Mapping[str, object]  # var -> [[degrees]] or [[[degrees]]]
    guard: bool = True
    claim: bool = False

    def to_objects(self) -> dict:
        """Rebuild public HFS/Family objects from the serialized binding."""
        law = get_law(self.law_id)
        uni = Universe(self.universe)
        out = {}
        for name, kind in law.params:
            data = self.binding[name]
            if kind == "set":
                out[name] = HFS(uni, {e: data[i] for i, e in enumerate(uni)})
            else:
                members = [
                    (f"{name}{j + 1}", HFS(uni, {e: m[i] for i, e in enumerate(uni)}))
                    for j, m in enumerate(data)
                ]
                out[name] = Family(members)
        return out

    def as_dict(self) -> dict:
        return {
            "law": self.law_id,
            "trial": self.trial,
            "universe": list(self.universe),
            "binding": {k: v for k, v in sorted(self.binding.items())},
            "guard": self.guard,
            "claim": self.claim,
        }


@dataclass(frozen=True)
class FixtureResult:
    name: str
    guard: bool
    claim: bool
    confirmed: bool  # refuted: guard and not claim; proved: guard implies claim


@dataclass(frozen=True)
class LawResult:
    law_id: str
    status: str
    trials: int
    violations: int
    starved: int
    witnesses: tuple[Witness, ...]
    fixtures: tuple[FixtureResult, ...]
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        if self.status == LawStatus.PROVED.value:
            return self.violations == 0 and all(f.confirmed for f in self.fixtures)
        return bool(self.fixtures) and all(f.confirmed for f in self.fixtures)

    @property
    def starvation_warning(self) -> bool:
        return self.starved > 0

    def as_dict(self) -> dict:
        return {
            "id": self.law_id,
            "status": self.status,
            "trials": self.trials,
            "violations": self.violations,
            "starved": self.starved,
            "witnesses": [w.as_dict() for w in self.witnesses],
            "fixtures": [
                {"name": f.name, "guard": f.guard, "claim": f.claim, "confirmed": f.confirmed}
                for f in self.fixtures
            ],
            "ok": self.ok,
        }


@dataclass(frozen=True)
class SuiteReport:
    config: GeneratorConfig
    results: tuple[LawResult, ...]
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def starved_laws(self) -> tuple[str, ...]:
        return tuple(r.law_id for r in self.results if r.starvation_warning)

    def result(self, law_id: str) -> LawResult:
        law = get_law(law_id)
        for r in self.results:
            if r.law_id == law.id:
                return r
        raise KeyError(f"law {law_id!r} was not part of this run")

    def as_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "seed": cfg.seed,
                "universe_size": list(cfg.universe_size),
                "cardinality": list(cfg.cardinality),
                "degree_grid": cfg.degree_grid,
                "trials": cfg.trials,
                "family_size": list(cfg.family_size),
                "max_attempts": cfg.max_attempts,
            },
            "laws": len(self.results),
            "ok": self.ok,
            "results": [r.as_dict() for r in self.results],
        }

    def canonical_json(self) -> bytes:
        """Deterministic serialization: no timing, no kernel name."""
        return (
            json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
            + "\n"
        ).encode()


# --- fixtures and public evaluation -----------------------------------------


def fixture_binding(law: Law, fixture: Fixture) -> dict:
    """Fixture data -> public objects binding for evaluate_law."""
    uni = Universe(fixture.universe)
    return {
        name: HFS(uni, dict(fixture.binding[name]))
        for name, kind in law.params
        if kind == "set"
    }


def evaluate_law(law: Law | str, binding: Mapping[str, object]) -> dict:
    """Exact evaluation of one law on public HFS/Family objects.

    Returns {"guard": bool, "claim": bool}; a violation is guard true and
    claim false.
    """
    if isinstance(law, str):
        law = get_law(law)
    plain = {}
    universe = None
    for name, kind in law.params:
        try:
            value = binding[name]
        except KeyError:
            raise ValueError(f"law {law.id} needs a value for variable {name!r}") from None
        if kind == "set":
            if not isinstance(value, HFS):
                raise TypeError(f"variable {name!r} of law {law.id} must be an HFS")
            uni = value.universe
            plain[name] = hfs_to_plain(value)
        else:
            if not isinstance(value, Family):
                raise TypeError(f"variable {name!r} of law {law.id} must be a Family")
            uni = value.universe
            plain[name] = tuple(hfs_to_plain(s) for s in value.sets)
        if universe is None:
            universe = uni
        elif uni != universe:
            raise UniverseMismatchError(f"binding of law {law.id} mixes universes")
    guard = True if law.guard is None else bool(law.guard(EXACT, plain))
    claim = bool(law.claim(EXACT, plain))
    return {"guard": guard, "claim": claim}


def replay_fixtures(law: Law) -> tuple[FixtureResult, ...]:
    out = []
    for fixture in law.fixtures:
        verdict = evaluate_law(law, fixture_binding(law, fixture))
        if law.status is LawStatus.REFUTED:
            confirmed = verdict["guard"] and not verdict["claim"]
        else:
            confirmed = (not verdict["guard"]) or verdict["claim"]
        out.append(
            FixtureResult(
                name=fixture.name,
                guard=verdict["guard"],
                claim=verdict["claim"],
                confirmed=confirmed,
            )
        )
    return tuple(out)


# --- the randomized suite -----------------------------------------------------


def random_hfs(config: GeneratorConfig, stream_index: int) -> HFS:
    """Deterministic random HFS: a pure function of (seed, stream_index)."""
    stream = active.Stream(_mix(config.seed, "random_hfs", stream_index))
    size = stream.randint(*config.universe_size)
    plain = active.gen_hfs(
        stream, config.degree_grid, size, config.cardinality[0], config.cardinality[1]
    )
    uni = Universe(_universe_names(size))
    den = config.degree_grid
    return HFS(uni, {e: [Fraction(num, den) for num in plain[i]] for i, e in enumerate(uni)})


def run_law(law: Law | str, config: GeneratorConfig) -> LawResult:
    """Run one law: randomized trials for proved laws, fixture replay for
    both statuses."""
    if isinstance(law, str):
        law = get_law(law)
    started = time.perf_counter()
    alg = grid_algebra(config.degree_grid)
    violations = 0
    starved = 0
    witnesses: list[Witness] = []
    trials_run = 0
    if law.status is LawStatus.PROVED:
        for index in range(config.trials):
            stream = _trial_stream(config, law.id, index)
            size = stream.randint(*config.universe_size)
            ctx = g.GenContext(
                den=config.degree_grid,
                size=size,
                card_lo=config.cardinality[0],
                card_hi=config.cardinality[1],
                fam_lo=config.family_size[0],
                fam_hi=config.family_size[1],
            )
            binding = _make_binding(law, alg, stream, ctx, config.max_attempts)
            if binding is None:
                starved += 1
                continue
            trials_run += 1
            if not law.claim(alg, binding):
                violations += 1
                if len(witnesses) < WITNESS_CAP:
                    witnesses.append(
                        Witness(
                            law_id=law.id,
                            trial=index,
                            universe=_universe_names(size),
                            binding={
                                name: _serialize_value(binding[name], config.degree_grid)
                                for name, _ in law.params
                            },
                        )
                    )
    fixtures = replay_fixtures(law)
    return LawResult(
        law_id=law.id,
        status=law.status.value,
        trials=trials_run,
        violations=violations,
        starved=starved,
        witnesses=tuple(witnesses),
        fixtures=fixtures,
        elapsed=time.perf_counter() - started,
    )


def _run_law_worker(args: tuple[str, GeneratorConfig]) -> LawResult:
    law_id, config = args
    return run_law(law_id, config)


def run_suite(
    config: GeneratorConfig,
    law_ids: Optional[Iterable[str]] = None,
    workers: int = 1,
) -> SuiteReport:
    """Run the registry (or a selection) against one configuration.

    The report is identical for any `workers` value: per-law results depend
    only on (config, law id) and are assembled in registry order.
    """
    started = time.perf_counter()
    if law_ids is None:
        laws = list(law_registry())
    else:
        laws = [get_law(law_id) for law_id in law_ids]
    if workers > 1 and len(laws) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = tuple(pool.map(_run_law_worker, [(law.id, config) for law in laws]))
    else:
        results = tuple(run_law(law, config) for law in laws)
    return SuiteReport(config=config, results=results, elapsed=time.perf_counter() - started)


def hunt_counterexample(law_id: str, config: GeneratorConfig) -> Optional[Witness]:
    """Search for a guard-true, claim-false binding within config.trials.

    Deterministic given config; returns the first witness or None. Proved
    laws never yield one (that is exactly what the suite asserts).
    """
    law = get_law(law_id)
    alg = grid_algebra(config.degree_grid)
    for index in range(config.trials):
        stream = _trial_stream(config, law.id, index)
        size = stream.randint(*config.universe_size)
        ctx = g.GenContext(
            den=config.degree_grid,
            size=size,
            card_lo=config.cardinality[0],
            card_hi=config.cardinality[1],
            fam_lo=config.family_size[0],
            fam_hi=config.family_size[1],
        )
        binding = _make_binding(law, alg, stream, ctx, config.max_attempts)
        if binding is None:
            continue
        if not law.claim(alg, binding):
            return Witness(
                law_id=law.id,
                trial=index,
                universe=_universe_names(size),
                binding={
                    name: _serialize_value(binding[name], config.degree_grid)
                    for name, _ in law.params
                },
            )
    return None


def replay_witness(witness: Witness) -> dict:
    """Re-evaluate a witness through the exact path; must reproduce the
    stored verdicts bit-exactly."""
    return evaluate_law(witness.law_id, witness.to_objects())


__all__ = [
    "DEFAULT_SEED",
    "GeneratorConfig",
    "Witness",
    "FixtureResult",
    "LawResult",
    "SuiteReport",
    "evaluate_law",
    "fixture_binding",
    "hunt_counterexample",
    "random_hfs",
    "replay_fixtures",
    "replay_witness",
    "run_law",
    "run_suite",
    "IMPLEMENTATION",
]
