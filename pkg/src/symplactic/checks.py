"""Verification campaigns cross-checking the three faces of the monoid.

Words are equivalent when their tableaux agree, when their column-generator
normal forms agree, and when they occupy the same position of isomorphic
crystal components; each suite partitions a bounded universe of words by
one or more of these labels and requires the partitions to coincide, or
audits a structural claim over every instance in a bounded family.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence

from .alphabet import Word, all_letters, format_word
from .columns import Column, enumerate_admissible
from .crystal import canonical_label
from .insertion import tableau_of_word
from .rewriting import (
    acol_rules,
    normal_form,
    reverse_deglex_greater,
    sp_rules,
    word_to_generators,
)
from .tableaux import column_preceq


class BudgetExceededError(RuntimeError):
    """A check universe is larger than its configured budget."""


@dataclass(frozen=True)
class CheckReport:
    suite: str
    universe: str
    cases: int
    passes: int
    failures: int
    first_failure: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "universe": self.universe,
            "cases": self.cases,
            "passes": self.passes,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "details": self.details,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CheckReport":
        return cls(
            suite=data["suite"],
            universe=data["universe"],
            cases=data["cases"],
            passes=data["passes"],
            failures=data["failures"],
            first_failure=data["first_failure"],
            details=data["details"],
        )


def iter_words(n: int, max_len: int, min_len: int = 1) -> Iterator[Word]:
    letters = all_letters(n)
    for length in range(min_len, max_len + 1):
        for combo in product(letters, repeat=length):
            yield Word(combo, n)


def universe_size(n: int, max_len: int, min_len: int = 1) -> int:
    return sum((2 * n) ** length for length in range(min_len, max_len + 1))


def _require_budget(n: int, max_len: int, budget: int) -> int:
    size = universe_size(n, max_len)
    if size > budget:
        raise BudgetExceededError(
            f"universe of {size} words (n={n}, max_len={max_len}) exceeds the "
            f"budget of {budget}; raise the budget explicitly to run this"
        )
    return size


def run_cross_section_check(n: int, max_len: int, budget: int = 200_000) -> CheckReport:
    """Partition all words three ways and demand identical partitions.

    Labels: the tableau, the column normal form, and the crystal position
    invariant.  The first word of each tableau class fixes the expected
    pair of other labels; any mismatch, or any collision of a normal-form
    or crystal label across two tableau classes, is a failure.
    """
    size = _require_budget(n, max_len, budget)
    by_tableau: dict = {}
    nf_owner: dict = {}
    crystal_owner: dict = {}
    cases = failures = 0
    first_failure = None

    for w in iter_words(n, max_len):
        cases += 1
        t_key = tuple(col.letters for col in tableau_of_word(w).columns)
        nf_key = normal_form(word_to_generators(w), n)
        c_key = canonical_label(w)
        ok = True
        if t_key not in by_tableau:
            by_tableau[t_key] = (nf_key, c_key)
            if nf_key in nf_owner or c_key in crystal_owner:
                ok = False
            nf_owner.setdefault(nf_key, t_key)
            crystal_owner.setdefault(c_key, t_key)
        else:
            ok = by_tableau[t_key] == (nf_key, c_key)
        if not ok and first_failure is None:
            first_failure = {
                "word": format_word(w),
                "tableau": [format_word(Word(c, n)) for c in t_key],
                "normal_form": [format_word(g) for g in nf_key],
                "crystal_label": repr(c_key),
            }
        failures += not ok

    return CheckReport(
        suite="cross-section",
        universe=f"n={n}, 1 <= |w| <= {max_len}",
        cases=cases,
        passes=cases - failures,
        failures=failures,
        first_failure=first_failure,
        details={"words": size, "classes": len(by_tableau)},
    )


def run_lemma_checks(n: int) -> CheckReport:
    """Audit the two-column structure of every reducible column pair.

    For admissible columns U, V whose pair (reading of U then V) is not
    already a tableau: its tableau has at most two columns, and a second
    column is strictly shorter than U.
    """
    if n > 4:
        raise BudgetExceededError(f"column pairs grow too fast beyond n=4, got n={n}")
    columns = enumerate_admissible(n)
    cases = failures = skipped = 0
    first_failure = None
    for u_col in columns:
        for v_col in columns:
            if column_preceq(v_col, u_col):
                skipped += 1
                continue
            cases += 1
            u = Word(u_col.letters, n)
            v = Word(v_col.letters, n)
            t = tableau_of_word(u + v)
            ok = len(t.columns) <= 2
            if ok and len(t.columns) == 2:
                ok = t.columns[1].height < u_col.height
            if not ok and first_failure is None:
                first_failure = {
                    "left": format_word(u),
                    "right": format_word(v),
                    "tableau": [format_word(c) for c in t.columns],
                }
            failures += not ok
    return CheckReport(
        suite="column-pair-lemmas",
        universe=f"n={n}, all {len(columns)}^2 admissible column pairs",
        cases=cases,
        passes=cases - failures,
        failures=failures,
        first_failure=first_failure,
        details={"skipped_irreducible": skipped},
    )


def run_confluence_check(
    n: int,
    max_len: int,
    seeds: Sequence[int] = (1, 2, 3, 4, 5),
    sample: Optional[int] = None,
    sample_seed: int = 0,
    budget: int = 200_000,
) -> CheckReport:
    """Normal forms must not depend on the rewriting strategy.

    Exhaustive over the word universe unless a sample count is given; each
    word is normalized leftmost, rightmost, and once per seeded random
    strategy.  Order monotonicity of every step is asserted inside the
    rewriting engine itself.
    """
    size = universe_size(n, max_len)
    if sample is None or sample >= size:
        _require_budget(n, max_len, budget)
        words: Iterator[Word] = iter_words(n, max_len)
        universe = f"n={n}, 1 <= |w| <= {max_len}, exhaustive"
    else:
        rng = random.Random(sample_seed)
        letters = all_letters(n)
        lengths = [length for length in range(1, max_len + 1)]
        weights = [(2 * n) ** length for length in lengths]
        words = (
            Word(rng.choices(letters, k=rng.choices(lengths, weights)[0]), n)
            for _ in range(sample)
        )
        universe = f"n={n}, 1 <= |w| <= {max_len}, {sample} sampled (seed {sample_seed})"

    cases = failures = 0
    first_failure = None
    for w in words:
        cases += 1
        seq = word_to_generators(w)
        reference = normal_form(seq, n, strategy="leftmost")
        ok = normal_form(seq, n, strategy="rightmost") == reference and all(
            normal_form(seq, n, strategy="random", seed=s) == reference for s in seeds
        )
        if not ok and first_failure is None:
            first_failure = {"word": format_word(w)}
        failures += not ok
    return CheckReport(
        suite="confluence",
        universe=universe,
        cases=cases,
        passes=cases - failures,
        failures=failures,
        first_failure=first_failure,
        details={"seeds": list(seeds)},
    )


def run_orientation_check(n: int) -> CheckReport:
    """Every letter-level rule decreases reverse deglex; every column rule
    has an irreducible right-hand side."""
    cases = failures = 0
    first_failure = None
    for rule in sp_rules(n):
        cases += 1
        if not reverse_deglex_greater(rule.lhs, rule.rhs):
            failures += 1
            if first_failure is None:
                first_failure = {"rule": str(rule)}
    reducible = {rule.lhs for rule in acol_rules(n)}
    for rule in acol_rules(n):
        cases += 1
        ok = all(pair not in reducible for pair in zip(rule.rhs, rule.rhs[1:]))
        if not ok and first_failure is None:
            first_failure = {"rule": str(rule)}
        failures += not ok
    return CheckReport(
        suite="orientation",
        universe=f"n={n}, all letter-level and column rules",
        cases=cases,
        passes=cases - failures,
        failures=failures,
        first_failure=first_failure,
    )


def run_tietze_check(n: int) -> CheckReport:
    """Both sides of every defining relation collapse to one normal form.

    Letter-level relation instances embed letterwise; the column-merge
    relations relate each admissible column word to the sequence of its
    letters.  Equal normal forms certify that the column system proves all
    defining relations.
    """
    cases = failures = 0
    first_failure = None

    def check(lhs_seq, rhs_seq, label: str) -> None:
        nonlocal cases, failures, first_failure
        cases += 1
        ok = normal_form(lhs_seq, n) == normal_form(rhs_seq, n)
        if not ok and first_failure is None:
            first_failure = {"relation": label}
        failures += not ok

    for rule in sp_rules(n):
        check(
            word_to_generators(rule.lhs),
            word_to_generators(rule.rhs),
            str(rule),
        )
    for col in enumerate_admissible(n):
        if col.height < 2:
            continue
        whole = Word(col.letters, n)
        check(
            word_to_generators(whole),
            (whole,),
            f"glue {format_word(whole)}",
        )
    return CheckReport(
        suite="tietze-soundness",
        universe=f"n={n}, all relation instances and column gluings",
        cases=cases,
        passes=cases - failures,
        failures=failures,
        first_failure=first_failure,
    )


def run_all_checks(
    n: int = 2,
    max_len: int = 6,
    seeds: Sequence[int] = (1, 2, 3, 4, 5),
    budget: int = 200_000,
) -> list[CheckReport]:
    """The default verification campaign used by the command line."""
    reports = [
        run_cross_section_check(n, max_len, budget=budget),
        run_lemma_checks(min(n, 4)),
        run_confluence_check(n, max_len, seeds=seeds, budget=budget),
        run_orientation_check(n),
        run_tietze_check(n),
    ]
    return reports


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)
