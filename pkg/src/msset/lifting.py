"""Anodyne extensions, lifting problems and the complicial-set checker."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import (
    Complicial,
    ComplicialDoublePrime,
    ComplicialPrime,
    Delta,
    Delta3Eq,
    Delta3Sharp,
    DeltaThin,
    Horn,
    join,
    standard,
)
from .core import (
    CapExceeded,
    ComplexError,
    ComplexMap,
    MarkedComplex,
    PointedComplex,
    Simplex,
    extend_maps,
    hom_enumerate,
)

FAMILIES = ("horn", "thinness", "triviality", "saturation")


@dataclass(frozen=True, order=True)
class AnodyneInstance:
    family_rank: int
    m: int
    k: int = -1

    @classmethod
    def horn(cls, k: int, m: int) -> AnodyneInstance:
        return cls(0, m, k)

    @classmethod
    def thinness(cls, k: int, m: int) -> AnodyneInstance:
        return cls(1, m, k)

    @classmethod
    def triviality(cls, m: int) -> AnodyneInstance:
        return cls(2, m)

    @classmethod
    def saturation(cls, m: int) -> AnodyneInstance:
        return cls(3, m)

    @property
    def family(self) -> str:
        return FAMILIES[self.family_rank]

    def __str__(self) -> str:
        if self.family in ("horn", "thinness"):
            return f"{self.family}(k={self.k}, m={self.m})"
        return f"{self.family}(m={self.m})"

    @property
    def dimension(self) -> int:
        """Dimension of the target object."""
        return self.m + 4 if self.family == "saturation" else self.m


def _by_name(A: MarkedComplex, B: MarkedComplex) -> ComplexMap:
    return ComplexMap(A, B, {c: Simplex.of(B.cell(A.name(c))) for c in A.cells()})


def anodyne(instance: AnodyneInstance, level: int | None = None) -> ComplexMap:
    """The inclusion realizing an elementary anodyne extension."""
    fam, m, k = instance.family, instance.m, instance.k
    if fam == "horn":
        if m < 1 or not 0 <= k <= m:
            raise ValueError(f"invalid horn extension {instance}")
        return _by_name(standard(Horn(k, m)), standard(Complicial(k, m)))
    if fam == "thinness":
        if m < 2 or not 0 <= k <= m:
            raise ValueError(f"invalid thinness extension {instance}")
        return _by_name(standard(ComplicialPrime(k, m)), standard(ComplicialDoublePrime(k, m)))
    if fam == "triviality":
        if level is not None and m < level + 1:
            raise ValueError(f"triviality extension needs m >= {level + 1}, got {m}")
        if m < 0:
            raise ValueError(f"invalid triviality extension {instance}")
        return _by_name(standard(Delta(m)), standard(DeltaThin(m)))
    if fam == "saturation":
        if m < -1:
            raise ValueError(f"invalid saturation extension {instance}")
        left = standard("empty") if m == -1 else standard(Delta(m))
        return _by_name(join(left, standard(Delta3Eq)), join(left, standard(Delta3Sharp)))
    raise ValueError(f"unknown family {fam}")


@dataclass
class LiftingProblem:
    inclusion: ComplexMap  # A -> B, injective on cells
    attachment: ComplexMap  # A -> X

    def __post_init__(self) -> None:
        if self.inclusion.source is not self.attachment.source and self.inclusion.source != self.attachment.source:
            raise ComplexError("inclusion and attachment must share their source")
        if not self.inclusion.is_injective():
            raise ComplexError("lifting problem needs an inclusion that is injective on cells")


def find_lift(
    p: LiftingProblem,
    X: MarkedComplex | None = None,
    all: bool = False,  # noqa: A002
    cap: int | None = 100_000,
) -> list[ComplexMap]:
    """Extensions ``h: B -> X`` with ``h o i = f``.

    With ``all=False`` the search stops at the first lift in canonical order.
    """
    X = X if X is not None else p.attachment.target
    i, f = p.inclusion, p.attachment
    fixed = {i.assignment[a].cell: f.assignment[a] for a in i.source.cells()}
    return extend_maps(i.target, X, fixed, cap=cap, first_only=not all)


def lift_diagnostics(p: LiftingProblem, h: ComplexMap) -> list[str]:
    """Re-verify a lift: valid marked map and ``h o i == f``."""
    problems = h.diagnostics()
    if problems:
        return problems
    composite = p.inclusion.then(h)
    for a, y in p.attachment.assignment.items():
        if composite.assignment[a] != y:
            problems.append(f"lift disagrees with the attachment on {p.attachment.source.name(a)}")
    return problems


@dataclass
class FamilyTally:
    enumerated: int = 0
    solved: int = 0
    failed: int = 0

    def merge(self, other: FamilyTally) -> None:
        self.enumerated += other.enumerated
        self.solved += other.solved
        self.failed += other.failed


@dataclass
class LiftReport:
    bound: int
    level: int | None
    tallies: dict[str, FamilyTally] = field(default_factory=lambda: {f: FamilyTally() for f in FAMILIES})
    instances: list[tuple[AnodyneInstance, FamilyTally]] = field(default_factory=list)
    witness: tuple[AnodyneInstance, ComplexMap] | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        return "pass-up-to-bound" if self.passed else "fail"

    def format(self) -> str:
        lines = [
            f"verdict: {self.verdict}",
            f"bound: {self.bound}",
            f"level: {'saturated (no triviality)' if self.level is None else self.level}",
        ]
        for fam in FAMILIES:
            t = self.tallies[fam]
            lines.append(f"{fam}: enumerated={t.enumerated} solved={t.solved} failed={t.failed}")
        if self.witness is not None:
            inst, f = self.witness
            lines.append(f"witness: {inst}")
            lines.append(f"attachment: {f.describe()}")
        return "\n".join(lines)


def complicial_instances(level: int | None, bound: int) -> list[AnodyneInstance]:
    out = []
    for m in range(1, bound + 1):
        out.extend(AnodyneInstance.horn(k, m) for k in range(m + 1))
    for m in range(2, bound + 1):
        out.extend(AnodyneInstance.thinness(k, m) for k in range(m + 1))
    if level is not None:
        out.extend(AnodyneInstance.triviality(m) for m in range(level + 1, bound + 1))
    out.extend(AnodyneInstance.saturation(m) for m in range(-1, bound - 3))
    return sorted(out)


def _check_instance(args) -> tuple[AnodyneInstance, FamilyTally, ComplexMap | None]:
    X, instance, level, cap = args
    inc = anodyne(instance, level)
    tally = FamilyTally()
    witness = None
    try:
        attachments = hom_enumerate(inc.source, X, cap=cap)
    except CapExceeded as exc:
        raise CapExceeded(f"{instance}: {exc}") from None
    for f in attachments:
        tally.enumerated += 1
        if find_lift(LiftingProblem(inc, f), X, cap=cap):
            tally.solved += 1
        else:
            tally.failed += 1
            if witness is None:
                witness = f
    return instance, tally, witness


def check_complicial(
    X: MarkedComplex | PointedComplex,
    level: int | None = None,
    bound: int = 2,
    cap: int | None = 100_000,
    workers: int = 1,
) -> LiftReport:
    """Check right lifting against every anodyne instance of dimension <= ``bound``.

    ``level`` selects n-trivial saturated complicial sets; ``None`` checks the
    saturated family without triviality extensions.  Passing only certifies
    the bounded instances.
    """
    if isinstance(X, PointedComplex):
        X = X.complex
    if bound > X.dim_bound:
        raise ValueError(f"bound {bound} exceeds dim_bound {X.dim_bound}")
    instances = complicial_instances(level, bound)
    jobs = [(X, inst, level, cap) for inst in instances]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_instance, jobs))
    else:
        results = [_check_instance(job) for job in jobs]
    report = LiftReport(bound=bound, level=level)
    for instance, tally, witness in results:
        report.tallies[instance.family].merge(tally)
        report.instances.append((instance, tally))
        if witness is not None and report.witness is None:
            report.witness = (instance, witness)
    return report
