"""Acceptance criteria, one test each.

Every criterion prints a single ``ACCEPTANCE <k> PASS|FAIL`` line with its
wall time against the budget; the lines are repeated in the pytest terminal
summary.  Run directly (``python3 tests/test_acceptance.py``) to get just
the nine lines.
"""

import functools
import random
import sys
import time
from itertools import combinations, permutations, product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from lemmas import check_ears, ear_configurations  # noqa: E402
from oracles import all_sequences_tpaths, pruned_sequences_tpaths  # noqa: E402
from weakfrieze import (  # noqa: E402
    TROPICAL, DiagonalMap, Polygon, cc_frieze, cells, check_unimodular, crosses,
    dissections, emit_text, enumerate_tpaths, glue_many, is_frieze, is_weak_frieze,
    propagate, render_pattern, reverse, satisfies_tpath_formula, tpath_sum,
    triangulations, trivial_map, validate_dissection, verify_theorem_a,
)
from weakfrieze.generate import (  # noqa: E402
    VALUE_SET, interior_diagonals, perturb_value, random_dissection, random_instance,
    random_rational,
)

GOLDEN = Path(__file__).parent / "golden"
RESULTS = []


def criterion(number, title, budget):
    """Time the wrapped check, print its PASS/FAIL line, and enforce the budget."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            error = None
            try:
                detail = fn(*args, **kwargs)
            except Exception as exc:  # reported, then re-raised
                error = exc
                detail = f"{type(exc).__name__}: {exc}"
            elapsed = time.perf_counter() - start
            ok = error is None and elapsed < budget
            line = (f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {title}: "
                    f"{detail or ''} [{elapsed:.2f}s, budget {budget}s]")
            RESULTS.append(line)
            print(line)
            if error is not None:
                raise error
            assert elapsed < budget, line
        return run
    return wrap


def fig1():
    p = Polygon(9)
    d = validate_dissection(p, [(1, 6), (2, 5)])
    pieces = [{e: 1 for e in combinations(c, 2)} for c in cells(p, d)]
    return p, d, glue_many(p, d, pieces)


def crossing_diagonals(p, d):
    return [e for e in p.diagonals() if any(crosses(p, e, x) for x in d.diagonals)]


@functools.lru_cache(maxsize=None)
def theorem_a_instances():
    """Criterion 3 corpus as ``(p, d, pieces, f, perturbed)`` tuples.

    Positive instances are gluings (weak friezes by construction); each
    perturbed twin changes one value on a diagonal crossing ``d``.
    """
    out = []

    def add(p, d, pieces, f, rng):
        out.append((p, d, pieces, f, False))
        cross = crossing_diagonals(p, d)
        if cross:
            e = rng.choice(cross)
            out.append((p, d, pieces, f.replace({e: perturb_value(f[e])}), True))

    rng = random.Random(2024)
    for n in range(3, 8):
        p = Polygon(n)
        for d in dissections(p):
            cell_list = cells(p, d)
            slots = sorted({e for c in cell_list for e in combinations(c, 2)})
            # every assignment from the value set where that stays small
            if len(VALUE_SET) ** len(slots) <= 3 ** 8 and d:
                for choice in product(VALUE_SET, repeat=len(slots)):
                    vals = dict(zip(slots, choice))
                    pieces = [{e: vals[e] for e in combinations(c, 2)} for c in cell_list]
                    add(p, d, pieces, glue_many(p, d, pieces), rng)
            else:
                for _ in range(4):
                    pieces, f = random_instance(p, d, rng, values=VALUE_SET)
                    add(p, d, pieces, f, rng)
    rng = random.Random(8010)
    for k in range(200):
        p = Polygon(rng.randint(8, 10))
        d = random_dissection(p, rng, size=rng.randint(1, p.n - 3))
        pieces, f = random_instance(p, d, rng)
        if k % 2:
            e = rng.choice(crossing_diagonals(p, d))
            out.append((p, d, pieces, f.replace({e: perturb_value(f[e])}), True))
        else:
            out.append((p, d, pieces, f, False))
    return tuple(out)


@criterion(1, "Fig. 2 T-paths 4->0 and sum", 1)
def test_criterion_1_fig2():
    p, d, f = fig1()
    paths = enumerate_tpaths(p, d, 4, 0)
    assert set(paths) == {(4, 2, 5, 1, 6, 0), (4, 2, 5, 6, 1, 0),
                          (4, 5, 2, 1, 6, 0), (4, 5, 2, 6, 1, 0)}
    assert len(paths) == 4
    assert str(tpath_sum(f, d, 4, 0)) == "4" and f(4, 0) == tpath_sum(f, d, 4, 0)
    return "4 paths, sum 4"


@criterion(2, "Fig. 6 pattern golden", 1)
def test_criterion_2_fig6():
    p, d, f = fig1()
    grid = render_pattern(f)
    assert set(grid.rows[0]) == {f(0, 1)} and set(grid.rows[-1]) == {f(0, 1)}
    assert str(f(0, 1)) == "1"
    assert str(grid.entry(4, 5)) == "4"
    text = emit_text(grid, window=(5, 21))
    golden = (GOLDEN / "fig6.txt").read_text()
    assert [r.split() for r in text.splitlines()] == [r.split() for r in golden.splitlines()]
    assert text == golden
    return "token-exact"


@criterion(3, "Theorem A both directions", 120)
def test_criterion_3_theorem_a():
    instances = theorem_a_instances()
    positives = negatives = 0
    for p, d, _, f, perturbed in instances:
        report = verify_theorem_a(f, d)
        assert report.agree, (p.n, d.sorted(), report)
        assert report.weak is not perturbed
        positives += report.weak
        negatives += not report.weak
    return f"{len(instances)} instances, {positives} weak friezes, {negatives} not, all agree"


@criterion(4, "Theorem B restriction, propagation, fold orders", 60)
def test_criterion_4_theorem_b():
    checked = orders = 0
    for p, d, pieces, f, perturbed in theorem_a_instances():
        if perturbed:
            continue
        for piece in pieces:
            assert all(f[e] == x for e, x in piece.items())
        known = {e: x for piece in pieces for e, x in piece.items()}
        assert propagate(p, d, known) == f
        if p.n <= 8 and len(d) <= 3:
            for order in permutations(d.sorted()):
                assert glue_many(p, d, pieces, order=order) == f
                orders += 1
        checked += 1
    return f"{checked} gluings, {orders} fold orders"


@criterion(5, "Theorem C closure and converse", 60)
def test_criterion_5_theorem_c():
    rng = random.Random(55)
    good = bad = 0
    while bad < 100:
        p = Polygon(rng.randint(5, 10))
        # leave room for at least one cell with four or more vertices
        d = random_dissection(p, rng, size=rng.randint(0, p.n - 4))
        pieces, f = random_instance(p, d, rng, frieze_pieces=True)
        if good < 100:
            assert is_frieze(f)
            good += 1
        vertex_sets = [sorted({v for e in piece for v in e}) for piece in pieces]
        k = rng.choice([i for i, vs in enumerate(vertex_sets) if len(vs) >= 4])
        e = rng.choice(interior_diagonals(p, d, tuple(vertex_sets[k])))
        pieces[k] = dict(pieces[k])
        pieces[k][e] = perturb_value(pieces[k][e])
        assert not is_frieze(glue_many(p, d, pieces))
        bad += 1
    _, d, f = fig1()
    assert is_weak_frieze(f, d) and not is_frieze(f)
    return f"{good} friezes, {bad} perturbed non-friezes, Fig. 1 weak but not a frieze"


@criterion(6, "Conway-Coxeter friezes", 120)
def test_criterion_6_conway_coxeter():
    rng = random.Random(66)
    count = 0
    for n in range(3, 11):
        p = Polygon(n)
        if n <= 8:
            batch = list(triangulations(p))
        else:
            batch = [random_dissection(p, rng, size=n - 3) for _ in range(50)]
        for t in batch:
            assert len(t) == n - 3
            f = cc_frieze(p, t)
            for (a, b), x in f.items():
                q = x.as_fraction()
                assert q.denominator == 1 and q > 0
                assert q == len(enumerate_tpaths(p, t, a, b))
            assert check_unimodular(f)
            count += 1
    p = Polygon(5)
    fan = validate_dissection(p, [(0, 2), (0, 3)])
    f = cc_frieze(p, fan)
    assert [str(f(a, b)) for a, b in ((1, 3), (2, 4), (1, 4))] == ["2", "2", "3"]
    assert propagate(p, fan, {e: 1 for c in cells(p, fan) for e in combinations(c, 2)}) == f
    return f"{count} triangulations"


@criterion(7, "enumerator equals brute-force filter", 180)
def test_criterion_7_oracle():
    literal = pruned = 0
    for n in range(3, 9):
        p = Polygon(n)
        for d in dissections(p, max_size=3):
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    got = enumerate_tpaths(p, d, a, b)
                    if n <= 6:
                        assert got == all_sequences_tpaths(p, d, a, b)
                        literal += 1
                    assert got == pruned_sequences_tpaths(p, d, a, b)
                    pruned += 1
    return f"{pruned} pairs (literal filter on {literal} of them)"


@criterion(8, "lemma suite", 60)
def test_criterion_8_lemmas():
    rng = random.Random(88)
    pairs = ears_checked = 0
    for n in range(3, 10):
        p = Polygon(n)
        pool = list(dissections(p)) if n <= 7 else [
            random_dissection(p, rng) for _ in range(30)]
        for d in pool:
            f = DiagonalMap(p, {e: random_rational(rng) for e in p.diagonals()})
            for a, b in combinations(range(n), 2):
                there = enumerate_tpaths(p, d, a, b)
                back = enumerate_tpaths(p, d, b, a)
                assert sorted(reverse(pi) for pi in there) == back
                assert tpath_sum(f, d, a, b) == tpath_sum(f, d, b, a)
                if not any(crosses(p, (a, b), e) for e in d.diagonals):
                    assert there == [(a, b)] and back == [(b, a)]
                pairs += 1
    for p, d in ear_configurations(max_n=9, seed=88, exhaustive_up_to=7, samples=15):
        ears_checked += check_ears(p, d, rng)
    return f"{pairs} pairs, {ears_checked} ear configurations"


@criterion(9, "tropical semifield", 30)
def test_criterion_9_tropical():
    for n in range(3, 11):
        assert is_frieze(trivial_map(n, TROPICAL))
    rng = random.Random(99)
    for _ in range(50):
        p = Polygon(rng.randint(4, 8))
        d = random_dissection(p, rng, size=rng.randint(1, p.n - 3))
        _, f = random_instance(p, d, rng, semifield=TROPICAL)
        assert f.semifield is TROPICAL
        assert satisfies_tpath_formula(f, d) and is_weak_frieze(f, d)
    return "zero map is a frieze, 50 glued instances satisfy the max-plus formula"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
