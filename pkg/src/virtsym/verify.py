"""Built-in verification suites.

Each suite runs a fixed list of checks with pinned expected values and time
budgets and reports one pass/fail line per check.  The same functions back
the ``verify-paper`` CLI command and the acceptance test module.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from . import crysto, raag
from .intlinalg import abelianization, class2_quotient
from .permutations import Permutation
from .presentations import (Presentation, family, rename_generators,
                            same_relator_set, tietze_eliminate)
from .quotients import hom_count, parse_target
from .schreier import (pure_to_kappa, pvl_subgroup_presentation,
                       subgroup_presentation, transversal_m2, transversal_mn)
from .words import GenSym, Word


@dataclass
class CheckResult:
    check_id: str
    tag: str
    passed: bool
    elapsed: float
    detail: str = ""

    def line(self, with_time: bool = False) -> str:
        mark = "PASS" if self.passed else "FAIL"
        timing = f"  [{self.elapsed:.2f}s]" if with_time else ""
        detail = f"  ({self.detail})" if self.detail else ""
        return f"{mark}  {self.check_id}  {self.tag}{detail}{timing}"


@dataclass
class SuiteReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        # elapsed stays out of the JSON so identical runs print identically
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [{"id": c.check_id, "tag": c.tag, "passed": c.passed,
                        "detail": c.detail} for c in self.checks],
        }


def _run(check_id: str, tag: str, budget: float,
         fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashed check is a failed check
        elapsed = time.perf_counter() - start
        return CheckResult(check_id, tag, False, elapsed, f"error: {exc}")
    elapsed = time.perf_counter() - start
    if ok and elapsed > budget:
        ok = False
        detail = f"time budget {budget}s exceeded ({elapsed:.1f}s)"
    return CheckResult(check_id, tag, ok, elapsed, detail)


# ---------------------------------------------------------------------------
# Commutator-subgroup pipelines


def commutator_pipeline(kind: str, n: int) -> Presentation:
    """Reduced presentation -> parity transversal -> rewriting -> elimination."""
    p = family(kind, n)
    return subgroup_presentation(p, transversal_m2(p), aliases="paper", tietze=True)


def _comm_check(kind: str, target_kind: str, n: int, jobs: int) -> Tuple[bool, str]:
    p = family(kind, n)
    before = subgroup_presentation(p, transversal_m2(p), aliases="paper")
    if len(before.generators) != 2 * (n - 2) + 1:
        return False, f"{len(before.generators)} generators before elimination"
    derived = tietze_eliminate(before, "auto")
    target = family(target_kind, n)
    if target_kind == "vt_commutator":
        expected_gens = [GenSym("x", i) for i in range(2, n)] \
            + [GenSym("z", 2), GenSym("w")]
        rename = {g: g for g in expected_gens}
        rename[GenSym("z", 2)] = GenSym("z")
    else:
        expected_gens = [GenSym("alpha", i) for i in range(2, n)] \
            + [GenSym("beta", 2), GenSym("delta")]
        rename = {g: g for g in expected_gens}
        rename[GenSym("beta", 2)] = GenSym("beta")
    if list(derived.generators) != expected_gens:
        return False, f"generators {[str(g) for g in derived.generators]}"
    if same_relator_set(derived, target, rename):
        return True, "exact relator multiset match"
    mine = rename_generators(derived, rename).relator_multiset()
    theirs = target.relator_multiset()
    differing = len(mine.keys() ^ theirs.keys())
    if abelianization(derived) != abelianization(target):
        return False, "abelianization mismatch"
    for tname in ("S3", "Z2xZ2xZ2"):
        t = parse_target(tname)
        if hom_count(derived, t, jobs=jobs) != hom_count(target, t, jobs=jobs):
            return False, f"hom count into {tname} differs"
    return True, f"fingerprint fallback ({differing} relators differ)"


def suite_comm_vt(jobs: int = 1) -> List[CheckResult]:
    out = []
    for n in (4, 5, 6):
        out.append(_run(
            f"comm-vt-{n}", "vt-commutator-presentation", 10.0,
            lambda n=n: _comm_check("virtual_twin_reduced", "vt_commutator", n, jobs)))
    return out


def _vl3_check() -> Tuple[bool, str]:
    derived = commutator_pipeline("virtual_triplet_reduced", 3)
    gens_ok = len(derived.generators) == 3
    cubes = [r for r in derived.relators
             if len(r) % 3 == 0 and r.letters == (r.letters[:len(r) // 3] * 3)]
    detail = (f"{len(derived.generators)} generators, "
              f"{len(derived.relators)} relators ({len(cubes)} cubes)")
    ok = gens_ok and len(derived.relators) == 2 and len(cubes) == 2
    return ok, detail


def suite_comm_vl(jobs: int = 1) -> List[CheckResult]:
    out = []
    for n in (4, 5, 6):
        out.append(_run(
            f"comm-vl-{n}", "vl-commutator-presentation", 10.0,
            lambda n=n: _comm_check("virtual_triplet_reduced", "vl_commutator", n, jobs)))
    out.append(_run("comm-vl-3", "vl3-free-product-presentation", 10.0, _vl3_check))
    return out


def suite_pvl(jobs: int = 1) -> List[CheckResult]:
    def check(n):
        def fn():
            derived = pvl_subgroup_presentation(n)
            target = family("pvl", n)
            if len(derived.generators) != n * (n - 1) // 2:
                return False, f"{len(derived.generators)} generators"
            if len(derived.relators) != math.comb(n, 3):
                return False, f"{len(derived.relators)} relators"
            ok = same_relator_set(derived, target,
                                  {g: g for g in derived.generators})
            return ok, "relator multiset matches" if ok else "relators differ"
        return fn
    return [_run(f"pvl-{n}", "pure-subgroup-presentation", 60.0, check(n))
            for n in (3, 4)]


# ---------------------------------------------------------------------------
# Abelianizations and class-2 quotients


_ABELIAN_CASES = [
    ("virtual_twin", (3, 4, 5), ((2, 2), 0)),
    ("virtual_triplet", (3, 4, 5), ((2, 2), 0)),
    ("pvl", (3, 4, 5), (None, None)),       # free of rank n(n-1)/2
    ("vt_commutator", (3,), ((3, 3), 1)),
    ("vl_commutator", (3,), ((3, 3), 1)),
    ("vt_commutator", (2,), ((), 1)),
]


def suite_abelian() -> List[CheckResult]:
    out = []
    for kind, ns, (torsion, rank) in _ABELIAN_CASES:
        for n in ns:
            def fn(kind=kind, n=n, torsion=torsion, rank=rank):
                inv = abelianization(family(kind, n))
                if torsion is None:
                    want = ((), n * (n - 1) // 2)
                else:
                    want = (torsion, rank)
                ok = (inv.torsion, inv.free_rank) == want
                return ok, str(inv)
            out.append(_run(f"abelian-{kind}-{n}", "abelianization", 1.0, fn))
    return out


_CLASS2_CASES = [("triplet", 2), ("virtual_twin", 4), ("virtual_triplet", 4)]


def suite_class2() -> List[CheckResult]:
    out = []
    for kind, want in _CLASS2_CASES:
        for n in (3, 4, 5):
            def fn(kind=kind, n=n, want=want):
                q = class2_quotient(family(kind, n))
                detail = (f"order {q.order}, commutator step {q.commutator_step}")
                return q.order == want, detail
            out.append(_run(f"class2-{kind}-{n}", "class2-quotient-order", 5.0, fn))
    return out


def suite_nilpotent() -> List[CheckResult]:
    return suite_abelian() + suite_class2()


# ---------------------------------------------------------------------------
# Chordality


def suite_chordal() -> List[CheckResult]:
    out = []
    for n in range(2, 8):
        def fn(n=n):
            g = raag.pvt_graph(n)
            chordal, witness = raag.is_chordal(g)
            if chordal:
                wit_ok = raag.verify_peo(g, witness)
                detail = "perfect elimination ordering verified"
            else:
                wit_ok = raag.verify_chordless_cycle(g, witness)
                detail = f"chordless {len(witness)}-cycle verified"
            want = n <= 4
            return chordal == want and wit_ok, detail
        out.append(_run(f"chordal-{n}", "pure-twin-commutator-freeness", 1.0, fn))
    return out


# ---------------------------------------------------------------------------
# Crystallographic quotient


def suite_crysto() -> List[CheckResult]:
    out = []

    def faithful():
        bad = [n for n in range(2, 7) if not crysto.holonomy_faithful(n)]
        return not bad, f"n in 2..6 exhaustive over S_n"
    out.append(_run("crysto-faithful", "holonomy-faithfulness", 30.0, faithful))

    def axioms():
        bad = [n for n in range(2, 8)
               if not crysto.coxeter_check(crysto.pair_action_spec(n))]
        return not bad, "signed pair action satisfies S_n relations, n <= 7"
    out.append(_run("crysto-action-axioms", "action-consistency", 30.0, axioms))

    def cycle_orders():
        for n in range(2, 7):
            for t in range(2, n + 1):
                perm = Permutation.from_cycles(n, [tuple(range(1, t + 1))])
                el = crysto.CrystoElement(n, crysto.zero_vector(n), perm)
                if el.order() != t:
                    return False, f"(0, t_1..t_{t-1}) at n={n} has order {el.order()}"
        return True, "order of (0, consecutive cycle) equals cycle length"
    out.append(_run("crysto-cycle-orders", "order-criterion", 30.0, cycle_orders))

    def torsion_all_types():
        rng = random.Random(11)
        count = 0
        for ct in _cycle_types(6):
            for _ in range(5):
                params = [rng.randrange(-5, 6)
                          for _ in range(crysto.free_parameter_count(ct))]
                el = crysto.torsion_element(6, ct, params)
                if el.order() != math.lcm(*ct):
                    return False, f"cycle type {ct} gave order {el.order()}"
                count += 1
        return True, f"{count} constructed elements, orders all lcm(cycle type)"
    out.append(_run("crysto-torsion", "torsion-construction", 30.0, torsion_all_types))

    def random_orders():
        rng = random.Random(5)
        for n in (3, 4, 5):
            cap = math.lcm(*range(1, n + 1)) + 1
            for _ in range(200):
                v = tuple(rng.randrange(-3, 4) for _ in range(n * (n - 1) // 2))
                perm = Permutation(rng.sample(range(1, n + 1), n))
                el = crysto.CrystoElement(n, v, perm)
                claimed = el.order()
                naive = None
                power = el
                for k in range(1, cap + 1):
                    if power.is_identity():
                        naive = k
                        break
                    power = power * el
                if claimed != naive:
                    return False, f"criterion {claimed} vs naive {naive} at n={n}"
        return True, "600 random elements agree with naive power iteration"
    out.append(_run("crysto-random-orders", "order-criterion", 30.0, random_orders))
    return out


def _cycle_types(total: int) -> List[Tuple[int, ...]]:
    """Multisets of integers >= 2 with sum <= total, e.g. (2,2) or (3,)."""
    out = []

    def rec(prefix, smallest, left):
        if prefix:
            out.append(tuple(prefix))
        for m in range(smallest, left + 1):
            rec(prefix + [m], m, left - m)
    rec([], 2, total)
    return sorted(out)


# ---------------------------------------------------------------------------
# Reduced-presentation fingerprints


def suite_reduced(kind: str, jobs: int = 1) -> List[CheckResult]:
    reduced = kind + "_reduced"
    short = {"virtual_twin": "vt", "virtual_triplet": "vl"}[kind]
    out = []
    for n in (3, 4):
        targets = ["S3", "Z2xZ2"] + (["S4"] if n == 3 else [])
        def fn(n=n, targets=targets):
            counts = []
            for tname in targets:
                t = parse_target(tname)
                a = hom_count(family(kind, n), t, jobs=jobs)
                b = hom_count(family(reduced, n), t, jobs=jobs)
                if a != b:
                    return False, f"{tname}: {a} != {b}"
                counts.append(f"{tname}={a}")
            return True, " ".join(counts)
        tag = "reduced-presentation-fingerprint"
        out.append(_run(f"reduced-{short}-{n}", tag, 120.0, fn))
    return out


# ---------------------------------------------------------------------------
# Rewriting soundness properties


def _random_kernel_words(p: Presentation, T, count: int, seed: int):
    rng = random.Random(seed)
    gens = list(p.generators)
    for _ in range(count):
        letters = [(rng.choice(gens), rng.choice((1, -1)))
                   for _ in range(rng.randrange(0, 16))]
        w = Word(letters)
        w = w * ~T.representative(w)
        yield w


def suite_property() -> List[CheckResult]:
    out = []

    def soundness():
        cases = []
        for kind in ("virtual_twin_reduced", "virtual_triplet_reduced"):
            p = family(kind, 4)
            cases.append((p, transversal_m2(p), 500))
        p3 = family("virtual_triplet", 3)
        cases.append((p3, transversal_mn(3), 500))
        total = 0
        for p, T, count in cases:
            rw = T.rewriter()
            for w in _random_kernel_words(p, T, count, seed=23):
                back = rw.substitute_raw(rw.rewrite_raw(w.letters))
                if back != w:
                    return False, f"substitution mismatch on {w}"
                total += 1
        return True, f"{total} kernel words recovered exactly"
    out.append(_run("property-soundness", "rewriting-soundness", 30.0, soundness))

    def kappa_fold():
        n = 4
        T = transversal_mn(n)
        p = family("virtual_triplet", n)
        checked = 0
        for w in _random_kernel_words(p, T, 300, seed=29):
            folded = crysto.letter_fold(n, w)
            vec = crysto.kappa_exponent_vector(n, pure_to_kappa(n, w))
            if not folded.perm.is_identity() or folded.v != vec:
                return False, f"fold mismatch on {w}"
            checked += 1
        return True, f"{checked} pure words fold consistently"
    out.append(_run("property-kappa-fold", "pair-rewriting-abelianized", 30.0,
                    kappa_fold))
    return out


# ---------------------------------------------------------------------------
# Suite registry


SUITES: Dict[str, Callable[..., List[CheckResult]]] = {
    "reduced-vt": lambda jobs=1: suite_reduced("virtual_twin", jobs),
    "reduced-vl": lambda jobs=1: suite_reduced("virtual_triplet", jobs),
    "comm-vt": lambda jobs=1: suite_comm_vt(jobs),
    "comm-vl": lambda jobs=1: suite_comm_vl(jobs),
    "pvl": lambda jobs=1: suite_pvl(jobs),
    "nilpotent": lambda jobs=1: suite_nilpotent(),
    "chordal": lambda jobs=1: suite_chordal(),
    "crysto": lambda jobs=1: suite_crysto(),
    "property": lambda jobs=1: suite_property(),
}


def verify_paper(suite: str, jobs: int = 1) -> List[SuiteReport]:
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; "
                         f"choose from {', '.join(list(SUITES) + ['all'])}")
    return [SuiteReport(name, SUITES[name](jobs=jobs)) for name in names]
