"""Verification suites tying hypotheses to solver-checked conclusions.

The checkers in conditions.py only evaluate hypotheses; this module owns the
other half: for digraphs where a hypothesis holds, the promised conclusion
is established with an exact solver, and any violation is logged as a
counterexample that re-verifies from its serialized form.

Suites are pure functions of their parameters and an integer seed.  Sampled
suites derive the seed of instance i as seed * 1000003 + i, so results do
not depend on chunking or on the --jobs level.
"""

import json
import random
import time
from dataclasses import dataclass
from multiprocessing import get_context

from . import conditions
from .conditions import DegreeProfile, cond_main
from .connectivity import is_k_strong, is_strong
from .constructions import (build_d8, build_d9, build_d9_prime,
                            random_digraph, random_satisfying_main)
from .digraph import Digraph, add_arc, bits, degrees, parse, serialize, validate_cycle, validate_path
from .solver import CapacityError, has_cycle_of_length, hamiltonian_cycle, insert_vertex, longest_cycle

SEED_STRIDE = 1_000_003

ENUMERABLE_CONDITIONS = ("nash-williams", "ghouila-houri", "woodall",
                         "meyniel", "one-light", "main", "long-cycle")


@dataclass(frozen=True)
class Counterexample:
    dgf: str
    assertion: str
    data: dict


@dataclass
class SearchOutcome:
    suite: str
    parameters: dict
    seed: int | None
    checked: int
    counterexamples: list[Counterexample]
    elapsed: float


def _outcome(suite, parameters, seed, checked, failures, start) -> SearchOutcome:
    ces = [Counterexample(dgf, assertion, data) for dgf, assertion, data in failures]
    ces.sort(key=lambda c: (c.assertion, c.dgf, json.dumps(c.data, sort_keys=True)))
    return SearchOutcome(suite, parameters, seed, checked, ces,
                         time.perf_counter() - start)


def _run_chunked(worker, tasks, jobs: int):
    """Run worker over the task list, forking when jobs > 1.

    Each worker returns (checked, stats_dict, failures); the merge is
    order-independent because failures get sorted canonically afterwards.
    """
    if jobs <= 1 or len(tasks) <= 1:
        results = [worker(t) for t in tasks]
    else:
        with get_context("fork").Pool(min(jobs, len(tasks))) as pool:
            results = pool.map(worker, tasks)
    checked = sum(r[0] for r in results)
    stats: dict = {}
    failures = []
    for _, st, fs in results:
        for key, val in st.items():
            stats[key] = stats.get(key, 0) + val
        failures.extend(fs)
    return checked, stats, failures


def _split(total: int, jobs: int):
    parts = max(1, min(total, jobs))
    step = (total + parts - 1) // parts
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


# ---------------------------------------------------------------- tightness

_TIGHTNESS_ORDER = {"d8": 8, "d9": 9, "d9prime": 9, "d9+x3x1": 9, "d9+x5x2": 9}


def _tightness_instances():
    d8 = build_d8()
    d9 = build_d9()
    lm = d9.label_map
    aug1, _ = add_arc(d9.digraph, lm["x3"], lm["x1"])
    aug2, _ = add_arc(d9.digraph, lm["x5"], lm["x2"])
    yield "d8", d8.digraph, d8.label_map["z"]
    yield "d9", d9.digraph, lm["z"]
    yield "d9prime", build_d9_prime().digraph, lm["z"]
    yield "d9+x3x1", aug1, lm["z"]
    yield "d9+x5x2", aug2, lm["z"]


def verify_tightness() -> SearchOutcome:
    """Exact assertions on the bundled tightness witnesses.

    Each of d8, d9, d9prime and both single-arc extensions of d9 must have
    the stated order, z of degree 4, every other vertex of degree >= order,
    be 2-strong, and have no Hamiltonian cycle.
    """
    start = time.perf_counter()
    failures = []
    checked = 0
    for name, d, z in _tightness_instances():
        checked += 1
        expected = _TIGHTNESS_ORDER[name]
        text = serialize(d)

        def fail(check):
            failures.append((text, f"tightness:{name}:{check}",
                             {"construction": name, "check": check,
                              "z": z, "expected_order": expected}))

        if d.n != expected:
            fail("order")
        if d.degree(z) != 4:
            fail("z-degree")
        if any(d.degree(v) < d.n for v in range(d.n) if v != z):
            fail("heavy-degrees")
        if not is_k_strong(d, 2):
            fail("two-strong")
        if hamiltonian_cycle(d).found:
            fail("non-hamiltonian")
    return _outcome("tightness", {}, None, checked, failures, start)


# -------------------------------------------------------------- enumeration

def enum_positions(n: int) -> list[tuple[int, int]]:
    """Off-diagonal adjacency positions in row-major order; bit i of an
    enumeration code switches arc enum_positions(n)[i]."""
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def digraph_from_code(n: int, code: int) -> Digraph:
    rows = [0] * n
    for i, (u, v) in enumerate(enum_positions(n)):
        if code >> i & 1:
            rows[u] |= 1 << v
    return Digraph(n, rows)


def _enum_hypothesis(d: Digraph, condition: str, k: int) -> bool:
    if condition == "long-cycle":
        return is_strong(d) and DegreeProfile.of(d).ranked[1][0] >= d.n
    return conditions.check(d, condition, k=k).holds


def _enum_conclusion(d: Digraph, condition: str) -> bool:
    if condition == "long-cycle":
        return longest_cycle(d).length >= d.n - 1
    return hamiltonian_cycle(d).found


def _enum_chunk(task):
    n, condition, k, lo, hi = task
    hyp = 0
    failures = []
    for code in range(lo, hi):
        d = digraph_from_code(n, code)
        if not _enum_hypothesis(d, condition, k):
            continue
        hyp += 1
        if not _enum_conclusion(d, condition):
            failures.append((serialize(d), f"enumerate:{condition}",
                             {"code": code, "n": n, "k": k, "condition": condition}))
    return hi - lo, {"hypothesis_true": hyp}, failures


def enumerate_and_check(n: int, condition: str, k: int = 0, jobs: int = 1) -> SearchOutcome:
    """Check a condition against every labeled digraph of order n (2..5).

    For each of the 2^(n(n-1)) digraphs where the hypothesis holds, the
    conclusion is verified exactly: a Hamiltonian cycle, except for
    long-cycle whose conclusion is a cycle of length at least n-1.
    Isomorphic duplicates are deliberately not filtered.
    """
    if condition not in ENUMERABLE_CONDITIONS:
        raise ValueError(f"condition {condition!r} is not enumerable; "
                         f"choose one of {', '.join(ENUMERABLE_CONDITIONS)}")
    if not isinstance(n, int) or n < 2:
        raise ValueError("enumeration needs order >= 2")
    if n > 5:
        raise CapacityError("exhaustive enumeration is capped at order 5; sample instead")
    start = time.perf_counter()
    total = 1 << (n * (n - 1))
    tasks = [(n, condition, k, lo, hi) for lo, hi in _split(total, jobs)]
    checked, stats, failures = _run_chunked(_enum_chunk, tasks, jobs)
    params = {"n": n, "condition": condition, "k": k, **stats}
    return _outcome("enumerate", params, None, checked, failures, start)


# ----------------------------------------------------------------- sampling

_SAMPLE_AUDIT = "audit order: generator profile, two-strong check, solver"


def _sample_chunk(task):
    n, k, seed, lo, hi = task
    failures = []
    for i in range(lo, hi):
        iseed = seed * SEED_STRIDE + i
        d = random_satisfying_main(n, k, iseed)
        base = {"i": i, "seed": iseed, "n": n, "k": k}
        if not cond_main(d, k).holds:
            failures.append((serialize(d), f"sample-main:generator ({_SAMPLE_AUDIT})", base))
        elif not hamiltonian_cycle(d).found:
            failures.append((serialize(d), f"sample-main:hamiltonian ({_SAMPLE_AUDIT})", base))
    return hi - lo, {}, failures


def sample_and_check(n: int, k: int, samples: int, seed: int, jobs: int = 1) -> SearchOutcome:
    """Generate instances satisfying the main condition and verify each one
    is Hamiltonian.  Instance i is a pure function of seed * 1000003 + i."""
    if not isinstance(n, int) or n < 9:
        raise ValueError("the main condition needs order >= 9")
    if n > 24:
        raise CapacityError("sampling is capped at the solver order 24")
    if samples < 1:
        raise ValueError("samples must be positive")
    start = time.perf_counter()
    tasks = [(n, k, seed, lo, hi) for lo, hi in _split(samples, jobs)]
    checked, _, failures = _run_chunked(_sample_chunk, tasks, jobs)
    params = {"n": n, "k": k, "samples": samples}
    return _outcome("sample-main", params, seed, checked, failures, start)


# ------------------------------------------------------------ lemma drivers

def _spectrum_trial(rng, failures):
    """Cycle plus an outside vertex of degree >= m+1 into the cycle forces
    cycles of every length in [2, m+1].  Returns True when the hypothesis
    held and was checked."""
    n = rng.randrange(4, 11)
    p = 0.45 + 0.5 * rng.random()
    d = random_digraph(n, p, rng.getrandbits(48))
    m = rng.randrange(2, n)
    seq = rng.sample(range(n), m)
    ok = all(d.has_arc(seq[i], seq[(i + 1) % m]) for i in range(m))
    if not ok:
        return False
    outside = [v for v in range(n) if v not in seq]
    x = outside[rng.randrange(len(outside))]
    if degrees(d, x, seq)[2] < m + 1:
        return False
    for want in range(2, m + 2):
        if not has_cycle_of_length(d, want):
            failures.append((serialize(d), "lemmas:cycle-spectrum",
                             {"cycle": seq, "x": x, "missing_length": want}))
    return True


def _insertion_trial(rng, failures):
    """Path plus an outside vertex meeting any of the three degree cases
    must be insertable between consecutive path vertices.  Returns the tuple
    of case flags, or None when no case applied (the trial is skipped)."""
    n = rng.randrange(4, 11)
    p = 0.45 + 0.5 * rng.random()
    d = random_digraph(n, p, rng.getrandbits(48))
    m = rng.randrange(2, n)
    seq = rng.sample(range(n), m)
    if not all(d.has_arc(seq[i], seq[i + 1]) for i in range(m - 1)):
        return None
    outside = [v for v in range(n) if v not in seq]
    x = outside[rng.randrange(len(outside))]
    dd = degrees(d, x, seq)[2]
    no_head = not d.has_arc(x, seq[0])
    no_tail = not d.has_arc(seq[-1], x)
    case_i = dd >= m + 2
    case_ii = dd >= m + 1 and (no_head or no_tail)
    case_iii = dd >= m and no_head and no_tail
    if not (case_i or case_ii or case_iii):
        return None
    if insert_vertex(d, seq, x) is None:
        for label, flag in (("case_i", case_i), ("case_ii", case_ii), ("case_iii", case_iii)):
            if flag:
                failures.append((serialize(d), f"lemmas:insertion:{label}",
                                 {"path": seq, "x": x, "case": label}))
    return case_i, case_ii, case_iii


def _lemma_chunk(task):
    seed, lo, hi = task
    stats = {"spectrum_checked": 0, "spectrum_skipped": 0,
             "insertion_checked": 0, "insertion_skipped": 0,
             "case_i": 0, "case_ii": 0, "case_iii": 0}
    failures = []
    for i in range(lo, hi):
        rng = random.Random(seed * SEED_STRIDE + 2 * i)
        if _spectrum_trial(rng, failures):
            stats["spectrum_checked"] += 1
        else:
            stats["spectrum_skipped"] += 1
        rng = random.Random(seed * SEED_STRIDE + 2 * i + 1)
        flags = _insertion_trial(rng, failures)
        if flags is None:
            stats["insertion_skipped"] += 1
        else:
            stats["insertion_checked"] += 1
            for label, flag in zip(("case_i", "case_ii", "case_iii"), flags):
                stats[label] += int(flag)
    return stats["spectrum_checked"] + stats["insertion_checked"], stats, failures


def verify_lemma_drivers(trials: int, seed: int, jobs: int = 1) -> SearchOutcome:
    """Randomized drivers for the two structural facts the degree conditions
    rest on: the cycle-length spectrum fact and the path-insertion fact.

    Runs `trials` independent trials per driver; trials whose hypothesis
    does not hold are skipped and counted, so skip rates land in the
    outcome parameters."""
    if trials < 1:
        raise ValueError("trials must be positive")
    start = time.perf_counter()
    tasks = [(seed, lo, hi) for lo, hi in _split(trials, jobs)]
    checked, stats, failures = _run_chunked(_lemma_chunk, tasks, jobs)
    params = {"trials": trials, **stats}
    return _outcome("lemmas", params, seed, checked, failures, start)


# ---------------------------------------------------------- problem probes

def _bipartition_sides(a: int):
    return tuple(0 if v < a else 1 for v in range(2 * a))


def bip_positions(a: int) -> list[tuple[int, int]]:
    n = 2 * a
    sides = _bipartition_sides(a)
    return [(u, v) for u in range(n) for v in range(n)
            if u != v and sides[u] != sides[v]]


def bipartite_from_code(a: int, code: int) -> Digraph:
    n = 2 * a
    rows = [0] * n
    for i, (u, v) in enumerate(bip_positions(a)):
        if code >> i & 1:
            rows[u] |= 1 << v
    return Digraph(n, rows, _bipartition_sides(a))


def _p1_pair_applies(d: Digraph, variant: str, x: int, y: int) -> bool:
    if variant == "i":
        return not d.has_arc(x, y) and not d.has_arc(y, x)
    return bool(d.out_mask(x) & d.out_mask(y))


def _p1_hypothesis(d: Digraph, a: int, k: int, l: int, variant: str) -> bool:
    # designated pair is (0, 1), both on side 0
    if not _p1_pair_applies(d, variant, 0, 1):
        return False
    if d.degree(0) + d.degree(1) < 3 * a - l:
        return False
    n = 2 * a
    for x in range(n):
        for y in range(x + 1, n):
            if (x, y) == (0, 1) or not _p1_pair_applies(d, variant, x, y):
                continue
            if d.degree(x) + d.degree(y) < 3 * a:
                return False
    return is_k_strong(d, k)


def _p2_hypothesis(d: Digraph, a: int, k: int, l: int) -> bool:
    # designated ordered pair is (0, a), opposite sides, arc absent
    if d.has_arc(0, a):
        return False
    if d.out_degree(0) + d.in_degree(a) < a + 2 - l:
        return False
    sides = d.bipartition
    n = 2 * a
    for x in range(n):
        for y in range(n):
            if x == y or sides[x] == sides[y] or (x, y) == (0, a) or d.has_arc(x, y):
                continue
            if d.out_degree(x) + d.in_degree(y) < a + 2:
                return False
    return is_k_strong(d, k)


def _random_bipartite_rows(rng, a: int, p: float):
    n = 2 * a
    sides = _bipartition_sides(a)
    rows = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and sides[u] != sides[v] and rng.random() < p:
                rows[u] |= 1 << v
    return rows


def _p1_generate(rng, a: int, k: int, l: int, variant: str) -> Digraph | None:
    """Random balanced bipartite instance pushed toward the degree boundary:
    the designated pair is trimmed down toward 3a - l while every other
    quantified pair is repaired up to 3a, then arcs are added until k-strong."""
    n = 2 * a
    sides = _bipartition_sides(a)
    rows = _random_bipartite_rows(rng, a, 0.55 + 0.4 * rng.random())

    def deg(v):
        row_in = sum(1 for u in range(n) if rows[u] >> v & 1)
        return rows[v].bit_count() + row_in

    if variant == "ii" and not rows[0] & rows[1]:
        rows[0] |= 1 << a
        rows[1] |= 1 << a
    protected = {(0, a), (1, a)} if variant == "ii" else set()
    target = 3 * a - l
    for _ in range(4 * n):
        if deg(0) + deg(1) <= target:
            break
        side_arcs = [(x, y) for x in (0, 1) for y in bits(rows[x]) if (x, y) not in protected]
        side_arcs += [(u, x) for x in (0, 1) for u in range(n) if rows[u] >> x & 1]
        if not side_arcs:
            break
        x, y = side_arcs[rng.randrange(len(side_arcs))]
        rows[x] &= ~(1 << y)
    while deg(0) + deg(1) < target:
        slots = [(x, y) for x in (0, 1) for y in range(a, n) if not rows[x] >> y & 1]
        slots += [(y, x) for x in (0, 1) for y in range(a, n) if not rows[y] >> x & 1]
        if not slots:
            return None
        x, y = slots[rng.randrange(len(slots))]
        rows[x] |= 1 << y
    d = Digraph(n, rows, sides)
    for _ in range(6 * n * n):
        bad = None
        for x in range(n):
            for y in range(x + 1, n):
                if (x, y) == (0, 1) or not _p1_pair_applies(d, variant, x, y):
                    continue
                if d.degree(x) + d.degree(y) < 3 * a:
                    bad = (x, y)
                    break
            if bad:
                break
        if bad is None and is_k_strong(d, k):
            break
        if bad is None:
            slots = [(u, v) for u in range(n) for v in range(n)
                     if u != v and sides[u] != sides[v] and not d.has_arc(u, v)]
            # strengthen connectivity away from the designated pair when possible
            slots = [s for s in slots if 0 not in s and 1 not in s] or slots
        else:
            x, y = bad
            t = x if d.degree(x) <= d.degree(y) else y
            slots = [(t, w) for w in range(n) if sides[w] != sides[t] and not d.has_arc(t, w)]
            slots += [(w, t) for w in range(n) if sides[w] != sides[t] and not d.has_arc(w, t)]
            slots = [s for s in slots if 0 not in s and 1 not in s] or slots
        if not slots:
            return None
        u, v = slots[rng.randrange(len(slots))]
        d, _ = add_arc(d, u, v)
    return d if _p1_hypothesis(d, a, k, l, variant) else None


def _p2_generate(rng, a: int, k: int, l: int) -> Digraph | None:
    n = 2 * a
    sides = _bipartition_sides(a)
    rows = _random_bipartite_rows(rng, a, 0.55 + 0.4 * rng.random())
    rows[0] &= ~(1 << a)
    target = a + 2 - l

    def pair_sum():
        dp = rows[0].bit_count()
        dm = sum(1 for u in range(n) if rows[u] >> a & 1)
        return dp + dm

    for _ in range(4 * n):
        if pair_sum() <= target:
            break
        slots = [(0, y) for y in bits(rows[0])]
        slots += [(u, a) for u in range(n) if rows[u] >> a & 1]
        if not slots:
            break
        x, y = slots[rng.randrange(len(slots))]
        rows[x] &= ~(1 << y)
    while pair_sum() < target:
        slots = [(0, y) for y in range(a + 1, n) if not rows[0] >> y & 1]
        slots += [(u, a) for u in range(1, a) if not rows[u] >> a & 1]
        if not slots:
            return None
        x, y = slots[rng.randrange(len(slots))]
        rows[x] |= 1 << y
    d = Digraph(n, rows, sides)
    for _ in range(6 * n * n):
        bad = None
        for x in range(n):
            for y in range(n):
                if x == y or sides[x] == sides[y] or (x, y) == (0, a) or d.has_arc(x, y):
                    continue
                if d.out_degree(x) + d.in_degree(y) < a + 2:
                    bad = (x, y)
                    break
            if bad:
                break
        if bad is None and is_k_strong(d, k):
            break
        if bad is not None:
            u, v = bad
        else:
            slots = [(u, v) for u in range(n) for v in range(n)
                     if u != v and sides[u] != sides[v]
                     and not d.has_arc(u, v) and (u, v) != (0, a)]
            if not slots:
                return None
            u, v = slots[rng.randrange(len(slots))]
        d, _ = add_arc(d, u, v)
    return d if _p2_hypothesis(d, a, k, l) else None


def _p1_chunk(task):
    a, k, l, variant, seed, lo, hi = task
    stats = {"hypothesis_true": 0, "skipped": 0}
    failures = []
    for i in range(lo, hi):
        rng = random.Random(seed * SEED_STRIDE + i)
        d = _p1_generate(rng, a, k, l, variant)
        if d is None:
            stats["skipped"] += 1
            continue
        stats["hypothesis_true"] += 1
        if not hamiltonian_cycle(d).found:
            s = d.degree(0) + d.degree(1)
            failures.append((serialize(d), "problem1:non-hamiltonian",
                             {"a": a, "k": k, "l": l, "variant": variant,
                              "pair": [0, 1], "pair_sum": s}))
    return hi - lo, stats, failures


def _p2_chunk(task):
    a, k, l, seed, lo, hi = task
    stats = {"hypothesis_true": 0, "skipped": 0}
    failures = []
    for i in range(lo, hi):
        rng = random.Random(seed * SEED_STRIDE + i)
        d = _p2_generate(rng, a, k, l)
        if d is None:
            stats["skipped"] += 1
            continue
        stats["hypothesis_true"] += 1
        if not hamiltonian_cycle(d).found:
            s = d.out_degree(0) + d.in_degree(a)
            failures.append((serialize(d), "problem2:non-hamiltonian",
                             {"a": a, "k": k, "l": l, "pair": [0, a], "pair_sum": s}))
    return hi - lo, stats, failures


def _p1_exhaustive_chunk(task):
    a, k, l, variant, lo, hi = task
    stats = {"hypothesis_true": 0}
    failures = []
    for code in range(lo, hi):
        d = bipartite_from_code(a, code)
        if not _p1_hypothesis(d, a, k, l, variant):
            continue
        stats["hypothesis_true"] += 1
        if not hamiltonian_cycle(d).found:
            s = d.degree(0) + d.degree(1)
            failures.append((serialize(d), "problem1:non-hamiltonian",
                             {"a": a, "k": k, "l": l, "variant": variant, "code": code,
                              "pair": [0, 1], "pair_sum": s}))
    return hi - lo, stats, failures


def _p2_exhaustive_chunk(task):
    a, k, l, lo, hi = task
    stats = {"hypothesis_true": 0}
    failures = []
    for code in range(lo, hi):
        d = bipartite_from_code(a, code)
        if not _p2_hypothesis(d, a, k, l):
            continue
        stats["hypothesis_true"] += 1
        if not hamiltonian_cycle(d).found:
            s = d.out_degree(0) + d.in_degree(a)
            failures.append((serialize(d), "problem2:non-hamiltonian",
                             {"a": a, "k": k, "l": l, "code": code,
                              "pair": [0, a], "pair_sum": s}))
    return hi - lo, stats, failures


def _check_problem_params(a: int, k: int, l: int) -> None:
    if a < 3:
        raise ValueError("balanced bipartite probes need order 2a >= 6")
    if 2 * a > 24:
        raise CapacityError("probes are capped at the solver order 24")
    if k < 1:
        raise ValueError("k must be >= 1")
    if l < 0:
        raise ValueError("l must be >= 0")


def search_problem1(a: int, k: int, l: int, variant: str,
                    samples: int | None = None, seed: int | None = None,
                    exhaustive: bool = False, jobs: int = 1) -> SearchOutcome:
    """Probe for non-Hamiltonian k-strong balanced bipartite digraphs where
    one designated pair may fall l below the 3a degree-sum bound.

    variant i exempts a non-adjacent pair, variant ii a pair with a common
    out-neighbor; the designated pair is (0, 1) on the same side.  Finds are
    data points, not failures (l >= 1 is the open range; l = 0 degenerates
    to a proven condition and must produce no finds)."""
    if variant not in ("i", "ii"):
        raise ValueError(f"variant must be 'i' or 'ii', got {variant!r}")
    _check_problem_params(a, k, l)
    start = time.perf_counter()
    if exhaustive:
        if a != 3:
            raise CapacityError("exhaustive bipartite enumeration is only feasible at a=3")
        total = 1 << len(bip_positions(a))
        tasks = [(a, k, l, variant, lo, hi) for lo, hi in _split(total, jobs)]
        checked, stats, failures = _run_chunked(_p1_exhaustive_chunk, tasks, jobs)
        params = {"a": a, "k": k, "l": l, "variant": variant, "mode": "exhaustive", **stats}
        return _outcome("problem1", params, None, checked, failures, start)
    if samples is None or seed is None:
        raise ValueError("sampled probes need samples and seed")
    tasks = [(a, k, l, variant, seed, lo, hi) for lo, hi in _split(samples, jobs)]
    checked, stats, failures = _run_chunked(_p1_chunk, tasks, jobs)
    params = {"a": a, "k": k, "l": l, "variant": variant, "mode": "sampled",
              "samples": samples, **stats}
    return _outcome("problem1", params, seed, checked, failures, start)


def search_problem2(a: int, k: int, l: int,
                    samples: int | None = None, seed: int | None = None,
                    exhaustive: bool = False, jobs: int = 1) -> SearchOutcome:
    """Probe the cross-pair variant: one designated ordered non-arc pair
    (0, a) may fall l below the a+2 out/in degree-sum bound, all other cross
    non-arc pairs meet it.  Finds are data points, not failures."""
    _check_problem_params(a, k, l)
    start = time.perf_counter()
    if exhaustive:
        if a != 3:
            raise CapacityError("exhaustive bipartite enumeration is only feasible at a=3")
        total = 1 << len(bip_positions(a))
        tasks = [(a, k, l, lo, hi) for lo, hi in _split(total, jobs)]
        checked, stats, failures = _run_chunked(_p2_exhaustive_chunk, tasks, jobs)
        params = {"a": a, "k": k, "l": l, "mode": "exhaustive", **stats}
        return _outcome("problem2", params, None, checked, failures, start)
    if samples is None or seed is None:
        raise ValueError("sampled probes need samples and seed")
    tasks = [(a, k, l, seed, lo, hi) for lo, hi in _split(samples, jobs)]
    checked, stats, failures = _run_chunked(_p2_chunk, tasks, jobs)
    params = {"a": a, "k": k, "l": l, "mode": "sampled", "samples": samples, **stats}
    return _outcome("problem2", params, seed, checked, failures, start)


# ------------------------------------------------------------- re-checking

def recheck_counterexample(ce: Counterexample) -> bool:
    """Re-run a logged counterexample's assertion from its serialized form.

    True means the failure reproduces (the counterexample is genuine)."""
    d = parse(ce.dgf)
    tag = ce.assertion.split(" ")[0]
    data = ce.data
    if tag.startswith("tightness:"):
        check = data["check"]
        z = data["z"]
        if check == "order":
            return d.n != data["expected_order"]
        if check == "z-degree":
            return d.degree(z) != 4
        if check == "heavy-degrees":
            return any(d.degree(v) < d.n for v in range(d.n) if v != z)
        if check == "two-strong":
            return not is_k_strong(d, 2)
        return hamiltonian_cycle(d).found
    if tag.startswith("enumerate:"):
        cond = data["condition"]
        return _enum_hypothesis(d, cond, data["k"]) and not _enum_conclusion(d, cond)
    if tag == "sample-main:generator":
        return not cond_main(d, data["k"]).holds
    if tag == "sample-main:hamiltonian":
        return cond_main(d, data["k"]).holds and not hamiltonian_cycle(d).found
    if tag == "lemmas:cycle-spectrum":
        seq = data["cycle"]
        validate_cycle(d, seq)
        m = len(seq)
        return (degrees(d, data["x"], seq)[2] >= m + 1
                and not has_cycle_of_length(d, data["missing_length"]))
    if tag.startswith("lemmas:insertion:"):
        seq = data["path"]
        validate_path(d, seq)
        x = data["x"]
        m = len(seq)
        dd = degrees(d, x, seq)[2]
        no_head = not d.has_arc(x, seq[0])
        no_tail = not d.has_arc(seq[-1], x)
        applies = {"case_i": dd >= m + 2,
                   "case_ii": dd >= m + 1 and (no_head or no_tail),
                   "case_iii": dd >= m and no_head and no_tail}[data["case"]]
        return applies and insert_vertex(d, seq, x) is None
    if tag == "problem1:non-hamiltonian":
        return (_p1_hypothesis(d, data["a"], data["k"], data["l"], data["variant"])
                and not hamiltonian_cycle(d).found)
    if tag == "problem2:non-hamiltonian":
        return (_p2_hypothesis(d, data["a"], data["k"], data["l"])
                and not hamiltonian_cycle(d).found)
    raise ValueError(f"unknown assertion tag {ce.assertion!r}")


# ---------------------------------------------------------------- reporting

def _fmt_param(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def format_report(outcome: SearchOutcome, out_dir=None) -> str:
    """Line-oriented report: a header, one line per counterexample, and a
    checked/counterexamples/elapsed summary.  With out_dir set, every
    counterexample digraph is written there as a .dgf file and referenced by
    path; otherwise the DGF text is inlined as a JSON string."""
    head = [f"suite={outcome.suite}",
            f"seed={outcome.seed if outcome.seed is not None else '-'}"]
    head += [f"{key}={_fmt_param(outcome.parameters[key])}"
             for key in sorted(outcome.parameters)]
    lines = [" ".join(head)]
    if out_dir is not None:
        from pathlib import Path as _Path
        base = _Path(out_dir)
        base.mkdir(parents=True, exist_ok=True)
    for idx, ce in enumerate(outcome.counterexamples):
        if out_dir is not None:
            path = base / f"{outcome.suite}-ce-{idx:04d}.dgf"
            path.write_text(ce.dgf)
            ref = f"file={path}"
        else:
            ref = f"dgf={json.dumps(ce.dgf)}"
        lines.append(f"counterexample {ref} assertion={ce.assertion}")
    lines.append(f"checked={outcome.checked} "
                 f"counterexamples={len(outcome.counterexamples)} "
                 f"elapsed={outcome.elapsed:.3f}")
    return "\n".join(lines) + "\n"


def outcome_to_json(outcome: SearchOutcome) -> dict:
    """JSON payload for an outcome.  elapsed is deliberately left out so
    identical runs serialize to identical bytes."""
    return {
        "suite": outcome.suite,
        "parameters": outcome.parameters,
        "seed": outcome.seed,
        "checked": outcome.checked,
        "counterexamples": [
            {"dgf": ce.dgf, "assertion": ce.assertion, "data": ce.data}
            for ce in outcome.counterexamples
        ],
    }
