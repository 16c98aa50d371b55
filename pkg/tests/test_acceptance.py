"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``.  Under pytest every check is its own
test and its PASS/FAIL line is collected into the terminal summary; run
this file directly to print just those lines.
"""

import json
import random
import sys
from fractions import Fraction as F
from math import comb
from pathlib import Path

import pytest

from symdefect import cli, load_bundled
from symdefect.covers import brute_count, combined_counts, enumerate_min_covers
from symdefect.edge_ideal import (
    cycle_product,
    edge_factorizations,
    gamma_oracle,
    hilbert_oracle_table,
    ordinary_power,
    script_g_oracle,
    sdefect_oracle,
    symbolic_power_formula,
    symbolic_power_oracle,
)
from symdefect.graph import closed_nbhd_condition, cycle_params, serialize_graph
from symdefect.hilbert import gamma_closed, hilbert_closed
from symdefect.monomials import contains, intersect, principal, product
from symdefect.quasipoly import fit
from symdefect.sdefect import script_g, sdefect_closed

sys.path.insert(0, str(Path(__file__).parent))
from strategies import random_unicyclic  # noqa: E402

G = {name: load_bundled(name) for name in ("c3", "c5", "fig2", "w5", "fig3_g1", "fig3_g2", "fig4_g1", "fig4_g2")}


def _table(g):
    return combined_counts(cycle_params(g))


def _sdefect(g, s):
    p = cycle_params(g)
    return sdefect_closed(p, combined_counts(p), s).sdefect


def check_1():
    g = G["c5"]
    closed = tuple(_table(g).d[k] for k in (3, 4, 5))
    brute = tuple(brute_count(g, k) for k in (3, 4, 5))
    return closed == brute == (5, 5, 1), f"closed={closed} brute={brute}"


def check_2():
    g = G["fig2"]
    closed = tuple(_table(g).d[k] for k in (2, 3, 4))
    brute = tuple(brute_count(g, k) for k in (2, 3, 4))
    return closed == brute == (4, 4, 1), f"closed={closed} brute={brute}"


def check_3():
    g = G["w5"]
    listed = [
        "e1 e2 e4", "e2 e3 e5", "e3 e4 e1", "e4 e5 e2", "e5 e1 e3",
        "e2 e4 f1", "e3 e5 f2", "e4 e1 f3", "e5 e2 f4", "e1 e3 f5",
    ]
    expected = {frozenset(row.split()) for row in listed}
    got = [frozenset(g.edge_label(e) for e in c.edges) for c in enumerate_min_covers(g)]
    return len(got) == 10 and set(got) == expected, f"{len(got)} covers, equal={set(got) == expected}"


def check_4():
    bad = []
    for name in ("c5", "fig2", "w5"):
        g = G[name]
        l = cycle_params(g).l
        for s in range(1, 5):
            got = len(ordinary_power(g, s))
            want = comb(2 * g.n + l + s, s)
            if got != want:
                bad.append((name, s, got, want))
    return not bad, f"mismatches={bad}"


def check_5():
    bad = []
    total = 0
    for name in ("c5", "fig2", "w5"):
        g = G[name]
        for s in range(1, 5):
            for u in ordinary_power(g, s).gens:
                total += 1
                if len(edge_factorizations(g, u, s)) != 1:
                    bad.append((name, s, tuple(u)))
    return not bad, f"{total} generators checked, non-unique={bad[:3]}"


def check_6():
    bad = [
        (name, s)
        for name in ("c3", "c5", "fig2", "w5")
        for s in range(1, 5)
        if symbolic_power_formula(G[name], s).total != symbolic_power_oracle(G[name], s)
    ]
    return not bad, f"mismatches={bad}"


def check_7():
    c5, fig2 = G["c5"], G["fig2"]
    p5, p2 = cycle_params(c5), cycle_params(fig2)
    closed5 = [script_g(p5, _table(c5), j + 3) for j in range(5)]
    oracle5 = [script_g_oracle(c5, j) for j in range(5)]
    closed2 = [script_g(p2, _table(fig2), j + 2) for j in (2, 3)]
    oracle2 = [script_g_oracle(fig2, j) for j in (2, 3)]
    ok = closed5 == oracle5 == [1, 5, 15, 30, 50] and closed2 == oracle2 == [6, 8]
    return ok, f"C5 {closed5} / {oracle5}; fig2 {closed2} / {oracle2}"


def check_8():
    want5 = [(3, 1), (4, 5), (5, 15), (6, 31), (7, 55), (8, 90)]
    want2 = [(2, 1), (3, 4), (4, 7), (5, 12)]
    got5 = [(s, _sdefect(G["c5"], s)) for s, _ in want5]
    got2 = [(s, _sdefect(G["fig2"], s)) for s, _ in want2]
    orc5 = [(s, sdefect_oracle(G["c5"], s)) for s, _ in want5]
    orc2 = [(s, sdefect_oracle(G["fig2"], s)) for s, _ in want2]
    ok = got5 == orc5 == want5 and got2 == orc2 == want2
    return ok, f"C5 {got5}; fig2 {got2}; oracles agree={got5 == orc5 and got2 == orc2}"


def check_9():
    q5 = fit([(s, _sdefect(G["c5"], s)) for s in range(1, 31)], 3)
    q2 = fit([(s, _sdefect(G["fig2"], s)) for s in range(1, 21)], 2)
    want5 = (
        (F(15, 2), F(-15, 2), F(0), F(1)),
        (F(15, 2), F(0), F(-5, 2), F(0)),
        (F(15, 2), F(15, 2), F(0), F(0)),
    )
    want2 = ((F(2), F(0), F(-1)), (F(2), F(2), F(0)))
    shown = "; ".join(q5.pretty(r) for r in range(3)) + " | " + "; ".join(q2.pretty(r) for r in range(2))
    return q5.polys == want5 and q2.polys == want2, shown


def check_10():
    bad = []
    for name, svals in (("fig2", (2, 3, 4)), ("c5", (3, 4, 5))):
        g = G[name]
        p = cycle_params(g)
        for s in svals:
            t = hilbert_closed(p, s, closed_nbhd_condition(g))
            oracle = hilbert_oracle_table(g, s)
            lo, hi = 2 * s - t.k, 2 * s - 1
            if any(t(d) != oracle[d] for d in range(2 * s + 1)):
                bad.append((name, s, "values"))
            if any(v and not lo <= d <= hi for d, v in oracle.items()):
                bad.append((name, s, "support"))
            if oracle[2 * s] != 0:
                bad.append((name, s, "h(2s)"))
    return not bad, f"failures={bad}"


def check_11():
    bad = []
    for name, svals in (("c3", (2, 3, 4)), ("c5", (3, 4, 5, 6)), ("fig2", (2, 3, 4, 5))):
        g = G[name]
        p = cycle_params(g)
        for s in svals:
            k = s // (g.n + 1)
            closed = gamma_closed(p, s, closed_nbhd_condition(g))
            oracle = gamma_oracle(g, s, 2 * k + 2)
            if not closed == oracle == k:
                bad.append((name, s, closed, oracle))
    g = G["fig3_g1"]
    for s in (2, 3, 4):
        k = s // (g.n + 1)
        if gamma_oracle(g, s, 2 * k + 3) is not None or gamma_closed(cycle_params(g), s, closed_nbhd_condition(g)) is not None:
            bad.append(("fig3_g1", s))
    return not bad, f"failures={bad}"


def check_12():
    a, b = G["fig3_g1"], G["fig3_g2"]
    seq_a = [sdefect_oracle(a, s) for s in range(1, 7)]
    seq_b = [sdefect_oracle(b, s) for s in range(1, 7)]
    closed_a = [_sdefect(a, s) for s in range(1, 7)]
    closed_b = [_sdefect(b, s) for s in range(1, 7)]
    fig3_ok = seq_a == seq_b == closed_a == closed_b
    c, d = G["fig4_g1"], G["fig4_g2"]
    diffs = []
    for s in (2, 3, 4):
        if closed_nbhd_condition(c) and closed_nbhd_condition(d):
            tc = hilbert_closed(cycle_params(c), s, True)
            td = hilbert_closed(cycle_params(d), s, True)
            hc = {k: tc(k) for k in range(2 * s + 1)}
            hd = {k: td(k) for k in range(2 * s + 1)}
        else:
            hc, hd = hilbert_oracle_table(c, s), hilbert_oracle_table(d, s)
        diffs += [(s, k, hc[k], hd[k]) for k in hc if hc[k] != hd[k]]
    detail = f"fig3 sdefect {seq_a} vs {seq_b}; fig4 Hilbert (s, d, G1, G2) differences {diffs}"
    return fig3_ok and not diffs, detail


def _cycle_multiple_containments(g, s):
    n = g.n
    c = principal(cycle_product(g))
    problems = []
    if s >= 2 * n + 2:
        lhs = intersect(ordinary_power(g, s - n - 1), product(ordinary_power(g, s - 2 * n - 2), c))
        rhs = product(ordinary_power(g, s - 2 * n - 2), intersect(ordinary_power(g, n + 1), c))
        if lhs != rhs:
            problems.append(("intersection identity", s))
    k = s // (n + 1)
    if k >= 3:
        target = product(ordinary_power(g, s - 2 * n - 2), c)
        cpow = [principal(tuple(t * e for e in cycle_product(g))) for t in range(k)]
        for u in ordinary_power(g, s - n - 1).gens:
            hit = any(
                contains(product(ordinary_power(g, s - (n + 1) - t * (n + 1)), cpow[t]), u) for t in range(2, k)
            )
            if hit and not contains(target, u):
                problems.append(("generator containment", s, tuple(u)))
    return problems


def check_13():
    bad = []
    for name in ("c3", "c5", "fig2", "w5"):
        g = G[name]
        for s in range(1, 5):
            sym = symbolic_power_oracle(g, s)
            ordinary = ordinary_power(g, s)
            if not all(contains(sym, u) for u in ordinary.gens):
                bad.append((name, s, "I^s not inside I^(s)"))
            if s <= g.n and sym != ordinary:
                bad.append((name, s, "I^(s) != I^s"))
    for name in ("c5", "fig2"):
        g = G[name]
        for s in range(1, 3 * (g.n + 1) + 2):
            bad += [(name,) + p for p in _cycle_multiple_containments(g, s)]
    return not bad, f"failures={bad[:5]}"


def check_14(tmp_dir=None):
    import tempfile

    rng = random.Random(20261016)
    failures = []
    with tempfile.TemporaryDirectory(dir=tmp_dir) as work:
        for i in range(50):
            g = random_unicyclic(rng, n_choices=(1, 2), max_tree_edges=4)
            path = Path(work) / f"g{i}.json"
            path.write_text(serialize_graph(g))
            out = Path(work) / f"g{i}.out.json"
            smax = 2 * (g.n + 1) + 1
            code = cli.main(["crosscheck", "--graph", str(path), "--smax", str(smax), "--out", str(out)])
            if code != 0:
                failures.append((i, serialize_graph(g), code, json.loads(out.read_text()).get("counterexample") if out.exists() else None))
    return not failures, f"50 graphs, failures={failures[:2]}"


CRITERIA = {
    1: ("cover counts C5 (5,5,1), closed = brute", check_1),
    2: ("cover counts fig2 (4,4,1), closed = brute", check_2),
    3: ("W(C5) minimum covers are the 10 listed sets", check_3),
    4: ("|G(I^s)| = C(2n+l+s, s) for C5, fig2, W(C5), s <= 4", check_4),
    5: ("unique edge factorization of every generator, s <= 4", check_5),
    6: ("symbolic power formula = vertex-cover oracle, s <= 4", check_6),
    7: ("script-G values C5 (1,5,15,30,50), fig2 (6,8)", check_7),
    8: ("symbolic defects C5 and fig2, closed = oracle", check_8),
    9: ("quasi-polynomials for C5 and fig2", check_9),
    10: ("Hilbert function closed = oracle, support, h(2s) = 0", check_10),
    11: ("annihilator exponent closed = oracle = k; absent on fig3 G1", check_11),
    12: ("invariance: fig3 sdefect pair, fig4 Hilbert pair", check_12),
    13: ("containments I^s in I^(s), small-s equality, cycle-multiple identities", check_13),
    14: ("randomized crosscheck, 50 graphs, s <= 2(n+1)+1", check_14),
}


def line(num, ok, desc, detail):
    return f"criterion {num}: {'PASS' if ok else 'FAIL'}  {desc}  [{detail}]"


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    from conftest import ACCEPTANCE_LINES

    desc, check = CRITERIA[num]
    ok, detail = check()
    text = line(num, ok, desc, detail)
    ACCEPTANCE_LINES.append(text)
    print(text)
    assert ok, text


if __name__ == "__main__":
    failed = 0
    for num in sorted(CRITERIA):
        desc, check = CRITERIA[num]
        ok, detail = check()
        failed += not ok
        print(line(num, ok, desc, detail), flush=True)
    sys.exit(1 if failed else 0)
