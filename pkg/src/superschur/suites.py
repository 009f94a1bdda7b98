"""Seeded property suites producing :class:`~superschur.calculus.CheckResult` lists.

Results are ordered by suite, then by corpus index, and contain no timing or
other run-dependent data, so a suite's JSON is a function of its config.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import (
    CheckResult,
    _verdict,
    check_p4_inequality,
    check_property_S,
    check_property_S_op,
    check_schur_of_sum,
    check_theorem_p2b,
    dim_exact_report,
    l4_suite,
    minimal_vanishing_partition,
    schur_vanishes,
    superdim_from_vanishing,
    vanishing_set,
)
from .corpus import (
    composable_pairs,
    map_corpus,
    maps_from_lines,
    parallel_pairs,
    right_exact_sequences,
    zero_sequences,
)
from .partitions import contains, count_standard_tableaux, partitions_of, partitions_up_to
from .schur import (
    graded_dimension,
    idempotent_rank,
    rectangle_orientation,
    schur_apply_map,
    schur_apply_space,
    vanishing_rectangle,
)
from .supervec import SuperDim, SuperMap, SuperSpace, is_mono, name
from .symgroup import young_symmetrizer

__all__ = ["RunConfig", "SUITES", "run_suite", "superdims_up_to"]


@dataclass(frozen=True)
class RunConfig:
    max_partition_size: int = 6
    max_space_dim: int = 3
    seed: int = 0
    output: str = "table"
    map_corpus_size: int = 300
    sequence_corpus_size: int = 100
    pair_corpus_size: int = 100
    functoriality_pairs: int = 50

    def __post_init__(self):
        if self.max_partition_size < 1 or self.max_space_dim < 1:
            raise ValueError("caps must be positive")
        if self.output not in ("json", "table"):
            raise ValueError(f"unknown output mode {self.output!r}")


def superdims_up_to(total: int) -> list[SuperDim]:
    return [SuperDim(m, t - m) for t in range(total + 1) for m in range(t, -1, -1)]


# -- individual suites ----------------------------------------------------------------


def rectangle_suite(cfg: RunConfig) -> list[CheckResult]:
    out = [
        CheckResult(
            "schur.rectangle_orientation",
            "pass",
            details={"orientation": rectangle_orientation(), "rectangle_for_1|0": str(vanishing_rectangle(SuperDim(1, 0)))},
        )
    ]
    for d in superdims_up_to(cfg.max_space_dim):
        space = SuperSpace(d.even, d.odd)
        mismatches = []
        for lam in partitions_up_to(cfg.max_partition_size, max_size=cfg.max_partition_size):
            zero = schur_apply_space(lam, space).dim.total == 0
            if zero != contains(lam, vanishing_rectangle(d)):
                mismatches.append(str(lam))
        out.append(
            CheckResult(
                "schur.rectangle_criterion",
                _verdict(not mismatches),
                {"dim": str(d), "max_size": cfg.max_partition_size},
                details={"rectangle": str(vanishing_rectangle(d)), "mismatches": mismatches},
            )
        )
    return out


def oracle_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for d in superdims_up_to(cfg.max_space_dim):
        space = SuperSpace(d.even, d.odd)
        bad = []
        for lam in partitions_up_to(cfg.max_partition_size, max_size=cfg.max_partition_size):
            rank = schur_apply_space(lam, space).dim
            if not (rank == graded_dimension(lam, d) == idempotent_rank(lam, d)):
                bad.append(str(lam))
        out.append(CheckResult("schur.oracle_equivalence", _verdict(not bad), {"dim": str(d)}, details={"mismatches": bad}))
        for n in range(1, cfg.max_partition_size + 1):
            total = sum(count_standard_tableaux(lam) * graded_dimension(lam, d).total for lam in partitions_of(n))
            out.append(
                CheckResult(
                    "schur.tensor_power_decomposition",
                    _verdict(total == d.total**n),
                    {"dim": str(d), "n": n},
                    details={"sum": total, "expected": d.total**n},
                )
            )
    bad = []
    for lam in partitions_up_to(cfg.max_partition_size, max_size=cfg.max_partition_size):
        e = young_symmetrizer(lam)
        if e * e != e:
            bad.append(str(lam))
    out.append(CheckResult("schur.idempotency", _verdict(not bad), {"max_size": cfg.max_partition_size}, details={"failures": bad}))
    return out


def functoriality_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    lams = partitions_up_to(min(4, cfg.max_partition_size), max_size=cfg.max_partition_size)
    for idx, (f, g) in enumerate(composable_pairs(cfg.seed, cfg.functoriality_pairs)):
        bad = []
        for lam in lams:
            if schur_apply_map(lam, g @ f) != schur_apply_map(lam, g) @ schur_apply_map(lam, f):
                bad.append(str(lam))
            if schur_apply_map(lam, SuperMap.identity(f.domain)) != SuperMap.identity(schur_apply_space(lam, f.domain).space):
                bad.append(f"id:{lam}")
        out.append(
            CheckResult(
                "schur.functoriality",
                _verdict(not bad),
                {"corpus_index": idx, "seed": cfg.seed, "spaces": [str(f.domain), str(f.codomain), str(g.codomain)]},
                details={"failures": bad},
            )
        )
    return out


def vanishing_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    by_dim = {}
    for d in superdims_up_to(cfg.max_space_dim):
        space = SuperSpace(d.even, d.odd)
        vs = vanishing_set(space, cfg.max_partition_size, max_degree=cfg.max_partition_size)
        by_dim[d] = vs
        rect = vanishing_rectangle(d)
        cap = max(rect.size, 1)
        recovered = superdim_from_vanishing(lambda lam: schur_vanishes(lam, space, "auto"), cap)
        minimal = minimal_vanishing_partition(space)
        out.append(
            CheckResult(
                "calculus.vanishing",
                _verdict(vs.is_sieve() and recovered == d and minimal == rect),
                {"dim": str(d), "bound": cfg.max_partition_size},
                details={
                    "members": len(vs),
                    "recovered": str(recovered),
                    "minimal_partition": str(minimal),
                },
            )
        )
    # Σ read through the trace route (which only sees the dimension) agrees
    for d, vs in by_dim.items():
        space = SuperSpace(d.even, d.odd)
        lams = partitions_up_to(cfg.max_partition_size, max_size=cfg.max_partition_size)
        same = all((lam in vs) == schur_vanishes(lam, space, "trace") for lam in lams)
        out.append(CheckResult("calculus.vanishing_routes_agree", _verdict(same), {"dim": str(d)}))
    return out


def property_s_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for idx, f in enumerate(map_corpus(cfg.seed, cfg.map_corpus_size)):
        for check in (check_property_S, check_property_S_op):
            v = check(f)
            ok = v.consistent and v.status == "verified" and (v.is_mono or v.witness is not None)
            out.append(
                CheckResult(
                    f"calculus.property_{v.property}",
                    _verdict(ok) if v.status == "verified" else "inconclusive",
                    {"corpus_index": idx, "seed": cfg.seed},
                    witness=str(v.witness) if v.witness is not None else None,
                    details={"mono": v.is_mono, "bound": v.bound, **v.details},
                )
            )
    return out


def sequence_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for idx, seq in enumerate(zero_sequences(cfg.seed, cfg.sequence_corpus_size)):
        rep = dim_exact_report(seq)
        ok = rep.inequality_holds and rep.dim_exact == rep.exact
        iso = check_theorem_p2b(seq) if rep.dim_exact else None
        out.append(
            CheckResult(
                "calculus.dim_exactness",
                _verdict(ok and iso is not False),
                {"corpus_index": idx, "seed": cfg.seed},
                details={
                    "middle": str(rep.middle),
                    "outer_sum": str(rep.outer_sum),
                    "dim_exact": rep.dim_exact,
                    "exact": rep.exact,
                    "coker_to_right_mono_epi": iso,
                },
            )
        )
    for idx, seq in enumerate(right_exact_sequences(cfg.seed, cfg.sequence_corpus_size)):
        ok = check_p4_inequality(seq)
        out.append(
            CheckResult(
                "calculus.right_exact_inequality",
                _verdict(ok),
                {"corpus_index": idx, "seed": cfg.seed},
                details={"dims": [str(seq.left.dim), str(seq.middle.dim), str(seq.right.dim)]},
            )
        )
    size = min(5, cfg.max_partition_size)
    dims = superdims_up_to(2)
    bad = []
    for lam in partitions_up_to(size, max_size=size):
        for v in dims:
            for w in dims:
                if not check_schur_of_sum(lam, SuperSpace(v.even, v.odd), SuperSpace(w.even, w.odd)):
                    bad.append(f"{lam}@{v}+{w}")
    out.append(CheckResult("calculus.schur_of_sum", _verdict(not bad), {"max_size": size, "max_dim": 2}, details={"failures": bad}))
    return out


def separation_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    pairs = parallel_pairs(cfg.seed, cfg.pair_corpus_size)
    bad = [i for i, (f, g) in enumerate(pairs) if name(f) == name(g)]
    out.append(CheckResult("supervec.name_separates", _verdict(not bad), {"pairs": len(pairs), "seed": cfg.seed}, details={"failures": bad}))
    lines = maps_from_lines(cfg.seed, cfg.pair_corpus_size)
    bad = [i for i, f in enumerate(lines) if not is_mono(f)]
    out.append(CheckResult("supervec.nonzero_from_line_is_mono", _verdict(not bad), {"maps": len(lines), "seed": cfg.seed}, details={"failures": bad}))
    return out


def l4(cfg: RunConfig) -> list[CheckResult]:
    return l4_suite(map_corpus(cfg.seed, cfg.map_corpus_size))


def props(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for suite in (rectangle_suite, oracle_suite, functoriality_suite, vanishing_suite, property_s_suite, sequence_suite, separation_suite):
        out.extend(suite(cfg))
    return out


SUITES = {
    "l4": l4,
    "props": props,
    "all": lambda cfg: l4(cfg) + props(cfg),
}


def run_suite(which: str, cfg: RunConfig) -> list[CheckResult]:
    if which not in SUITES:
        raise ValueError(f"unknown suite {which!r}; choose from {sorted(SUITES)}")
    return SUITES[which](cfg)
