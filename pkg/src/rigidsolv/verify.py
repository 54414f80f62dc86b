"""Randomized and fixed-example checks of the library's structural laws.

Each check exercises one mathematical statement the implementation is
built on (the product rule for coordinate rows, the sigma identity,
module torsion-freeness, the two membership criteria, the lexicographic
drop of principal dimension under a proper epimorphism, the generator
rank bounds, and retraction compatibility with the derived series).
Every statement is a theorem, so any failure is an implementation
defect; reports carry the seed and a reproduction record per failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .free_solvable import (
    SolvableElement,
    free_solvable_group,
    normalize,
    series_member_commutator,
    series_member_projection,
    standard_witnesses,
)
from .group_ring import RingElement
from .linalg import (
    closed_form_dimension,
    lex_compare,
    principal_dimension_metabelian,
)
from .magnus import eval_word, sigma
from .words import Word, commutator, conjugate, word_to_str
from .wreath import iterated_wreath


@dataclass
class CheckReport:
    """Outcome of one check: PASS iff the failure list is empty."""

    name: str
    statement: str
    seed: int
    samples: int
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "statement": self.statement,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 6),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.samples} samples, "
            f"{len(self.failures)} failures, {self.elapsed:.2f}s"
        )


def random_word(rng: random.Random, m: int, max_len: int = 10) -> Word:
    """Uniform letters, length uniform in [1, max_len]."""
    length = rng.randint(1, max_len)
    letters = []
    for _ in range(length):
        index = rng.randint(1, m)
        letters.append(index if rng.random() < 0.5 else -index)
    return tuple(letters)


def _timed(check: Callable[[CheckReport], None], report: CheckReport) -> CheckReport:
    start = time.perf_counter()
    check(report)
    report.elapsed = time.perf_counter() - start
    return report


def check_product_rule(seed: int = 0, samples: int = 500) -> CheckReport:
    """d(uv) = d(u)*v-bar + d(v): evaluating a concatenation equals the
    split-matrix product of the factors' evaluations."""
    report = CheckReport(
        "product_rule",
        "coordinate row of a product: d(uv) = d(u)*v-bar + d(v)",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        rng = random.Random(seed)
        groups = [free_solvable_group(2, 1), free_solvable_group(2, 2)]
        for index in range(samples):
            base = groups[index % len(groups)]
            u = random_word(rng, 2)
            v = random_word(rng, 2)
            whole = eval_word(u + v, base)
            parts = eval_word(u, base) * eval_word(v, base)
            if whole != parts:
                report.failures.append(
                    {"u": word_to_str(u), "v": word_to_str(v), "base": base.label}
                )
            back = eval_word(u, base) * eval_word(u, base).inv()
            if not back.is_identity():
                report.failures.append({"u": word_to_str(u), "base": base.label,
                                        "kind": "inverse"})

    return _timed(run, report)


def check_sigma(seed: int = 0, samples: int = 500) -> CheckReport:
    """sigma(d(w)) = w-bar - 1 in the base group ring."""
    report = CheckReport(
        "sigma",
        "fundamental identity sigma(d(w)) = w-bar - 1",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        rng = random.Random(seed)
        groups = [free_solvable_group(2, 1), free_solvable_group(2, 2)]
        for index in range(samples):
            base = groups[index % len(groups)]
            w = random_word(rng, 2)
            image = eval_word(w, base)
            expected = RingElement.monomial(base, image.top) - RingElement.one(base)
            if sigma(image) != expected:
                report.failures.append({"w": word_to_str(w), "base": base.label})

    return _timed(run, report)


def module_action(
    c: SolvableElement, u: RingElement, lifts: dict[str, SolvableElement]
) -> SolvableElement:
    """c^u for c in the bottom series term: the conjugation action of the
    quotient's group ring, c^u = product of (c^h_j)^m_j."""
    group = free_solvable_group(c.m, c.n)
    result = group.identity()
    for element, coeff in u.terms():
        lift = lifts[u.group.key(element)]
        result = group.mul(result, group.pow(group.conjugate(c, lift), coeff))
    return result


def check_no_torsion(seed: int = 0, samples: int = 200) -> CheckReport:
    """For nontrivial c in the bottom series term and nonzero u over the
    quotient's group ring, c^u is never trivial."""
    report = CheckReport(
        "no_torsion",
        "bottom series factor has no group-ring torsion: c^u != 1",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        rng = random.Random(seed)
        cases = [(2, 2), (2, 3)]
        for index in range(samples):
            m, n = cases[index % len(cases)]
            group = free_solvable_group(m, n)
            c = _random_bottom_element(rng, m, n)
            u, lifts = _random_ring_element(rng, m, n)
            if module_action(c, u, lifts).is_trivial():
                report.failures.append(
                    {"m": m, "n": n, "c": c.key(), "u": str(u)}
                )

    return _timed(run, report)


def _random_bottom_element(
    rng: random.Random, m: int, n: int
) -> SolvableElement:
    """Random nontrivial element of the last derived-series term of S(m, n)."""
    while True:
        u = random_word(rng, m, 6)
        v = random_word(rng, m, 6)
        word = commutator(u, v)
        for _ in range(n - 2):
            left = conjugate(word, random_word(rng, m, 3))
            word = commutator(word, left)
        candidate = normalize(m, n, word)
        if not candidate.is_trivial():
            return candidate


def _random_ring_element(
    rng: random.Random, m: int, n: int
) -> tuple[RingElement, dict[str, SolvableElement]]:
    """Random nonzero element of Z[S(m, n-1)] plus lifts of its support
    into S(m, n)."""
    base = free_solvable_group(m, n - 1)
    while True:
        terms = []
        lifts = {}
        for _ in range(rng.randint(1, 3)):
            word = random_word(rng, m, 4)
            coeff = rng.choice([-2, -1, 1, 2])
            element = normalize(m, n - 1, word)
            terms.append((element, coeff))
            lifts[base.key(element)] = normalize(m, n, word)
        u = RingElement.from_terms(base, terms)
        if not u.is_zero():
            return u, lifts


def check_series_criteria(seed: int = 0, samples: int = 100) -> CheckReport:
    """Projection and iterated-commutator membership agree on S(2, 3)."""
    report = CheckReport(
        "series_criteria",
        "derived-series membership: projection == iterated commutator",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        rng = random.Random(seed)
        witnesses = standard_witnesses(2, 3)
        for _ in range(samples):
            w = random_word(rng, 2)
            e = normalize(2, 3, w)
            for i in (1, 2, 3):
                via_projection = series_member_projection(e, i)
                via_commutator = series_member_commutator(
                    e, i, witnesses[i - 1 :]
                )
                if via_projection != via_commutator:
                    report.failures.append(
                        {
                            "w": word_to_str(w),
                            "i": i,
                            "projection": via_projection,
                            "commutator": via_commutator,
                        }
                    )

    return _timed(run, report)


def check_lex_drop(seed: int = 0, samples: int = 1) -> CheckReport:
    """Principal dimension drops lexicographically along the concrete
    proper epimorphism from S(2, 2) onto Z wr Z."""
    report = CheckReport(
        "lex_drop",
        "principal dimension drops under a proper epimorphism",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        computed = principal_dimension_metabelian([(1,), (2,)], 2)
        closed = closed_form_dimension("free_solvable", 2, 2)
        if computed.values != (2, 1) or closed.values != (2, 1):
            report.failures.append(
                {"kind": "source dimension", "computed": str(computed),
                 "closed_form": str(closed)}
            )
        target = closed_form_dimension("wreath", 1, 1)
        if target.values != (1, 1):
            report.failures.append({"kind": "target dimension", "got": str(target)})

        wr = iterated_wreath(1, 1)
        images = [wr.generator(1), wr.generator(2)]
        # Surjective: the generator images are the standard generating set.
        if images != wr.generators():
            report.failures.append({"kind": "not surjective on generators"})
        # Proper: a word nontrivial in S(2, 2) dies in Z wr Z.
        kernel_word = commutator((1,), conjugate((1,), (2,)))
        if normalize(2, 2, kernel_word).is_trivial():
            report.failures.append({"kind": "kernel witness trivial in source"})
        if not wr.is_identity(wr.evaluate_word(kernel_word, images)):
            report.failures.append({"kind": "kernel witness survives in target"})
        if lex_compare(computed, target) != 1:
            report.failures.append(
                {"kind": "no lexicographic drop", "source": str(computed),
                 "target": str(target)}
            )

    return _timed(run, report)


def check_rank_bounds(seed: int = 0, samples: int = 50) -> CheckReport:
    """Random non-abelian subgroups of S(m, 2) satisfy r_1 <= #generators
    and r_2 <= #generators - 1."""
    report = CheckReport(
        "rank_bounds",
        "generator bounds on principal dimension: r_1 <= k, r_2 <= k - 1",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        rng = random.Random(seed)
        tested = 0
        skipped = 0
        while tested < samples:
            m = rng.choice([2, 3])
            k = rng.randint(2, 3)
            generators = [random_word(rng, m, 6) for _ in range(k)]
            try:
                dimension = principal_dimension_metabelian(generators, m)
            except ValueError:
                skipped += 1
                continue
            if dimension.length == 1:
                skipped += 1
                continue
            tested += 1
            r1, r2 = dimension.values
            if r1 > k or r2 > k - 1:
                report.failures.append(
                    {
                        "m": m,
                        "generators": [word_to_str(w) for w in generators],
                        "dimension": str(dimension),
                    }
                )
        report.samples = tested
        if skipped:
            report.statement += f" [{skipped} abelian/degenerate samples skipped]"

    return _timed(run, report)


def check_retraction(seed: int = 0, samples: int = 50) -> CheckReport:
    """Retractions onto coordinate subgroups respect the derived series:
    the image of G_i is the subgroup's own i-th series term."""
    report = CheckReport(
        "retraction",
        "coordinate retraction maps each series term onto the subgroup's term",
        seed,
        samples,
    )

    def run(report: CheckReport) -> None:
        rng = random.Random(seed)
        m, k, n = 3, 2, 2
        for _ in range(samples):
            # Coordinate retraction x_j -> x_j (j <= k), x_j -> 1 (j > k),
            # onto the subgroup generated by the first k generators.
            w = random_word(rng, m, 8)
            retracted = tuple(letter for letter in w if abs(letter) <= k)
            e = normalize(m, n, w)
            image = normalize(k, n, retracted)
            for i in (1, 2, 3):
                if series_member_projection(e, i) and not series_member_projection(
                    image, i
                ):
                    report.failures.append(
                        {"w": word_to_str(w), "i": i, "kind": "image left series"}
                    )
            # The retraction fixes the subgroup pointwise, so on words over
            # the first k generators the ambient series must restrict to the
            # subgroup's own series, both directions.
            a = random_word(rng, k, 8)
            ambient = normalize(m, n, a)
            inner = normalize(k, n, a)
            for i in (1, 2, 3):
                if series_member_projection(ambient, i) != series_member_projection(
                    inner, i
                ):
                    report.failures.append(
                        {"a": word_to_str(a), "i": i, "kind": "series restriction"}
                    )

    return _timed(run, report)


ALL_CHECKS: dict[str, Callable[..., CheckReport]] = {
    "product_rule": check_product_rule,
    "sigma": check_sigma,
    "no_torsion": check_no_torsion,
    "series_criteria": check_series_criteria,
    "lex_drop": check_lex_drop,
    "rank_bounds": check_rank_bounds,
    "retraction": check_retraction,
}

DEFAULT_SAMPLES: dict[str, int] = {
    "product_rule": 500,
    "sigma": 500,
    "no_torsion": 200,
    "series_criteria": 100,
    "lex_drop": 1,
    "rank_bounds": 50,
    "retraction": 50,
}


def run_all(
    seed: int = 0, samples: int | None = None, only: str | None = None
) -> list[CheckReport]:
    """Run the selected checks; samples overrides every default when set."""
    names = [only] if only else list(ALL_CHECKS)
    if only and only not in ALL_CHECKS:
        raise ValueError(
            f"unknown check {only!r}; available: {', '.join(ALL_CHECKS)}"
        )
    reports = []
    for name in names:
        count = samples if samples is not None else DEFAULT_SAMPLES[name]
        reports.append(ALL_CHECKS[name](seed=seed, samples=count))
    return reports
