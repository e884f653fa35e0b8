"""Instance checks and corpus sweeps for the circuit-generation theorems."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from . import circuits as circ
from . import fibers, graphs
from .config import Configuration, graph_incidence, normalize_rows, root_config, squarefree_veronese, veronese
from .errors import NoIntegerHomogenizingRow
from .ideal import Binomial, MonomialOrder, buchberger, quadratic_binomials, toric_groebner

CONSISTENT = "consistent"
VIOLATION = "violation"
NOT_APPLICABLE = "not_applicable"


@dataclass
class TheoremReport:
    """Named boolean conditions for one instance plus the resulting verdict.

    ``expectations`` lists the relations that must hold (as human-readable
    names); ``failures`` lists those that did not. The verdict is consistent
    exactly when nothing failed.
    """

    instance: str
    conditions: dict[str, bool] = field(default_factory=dict)
    expectations: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    witness: dict[str, str] = field(default_factory=dict)
    applicable: bool = True
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return NOT_APPLICABLE
        return VIOLATION if self.failures else CONSISTENT

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, name: str, holds: bool):
        self.expectations.append(name)
        if not holds:
            self.failures.append(name)

    def format(self) -> str:
        lines = [f"instance: {self.instance}"]
        for k, v in self.conditions.items():
            lines.append(f"{k}: {str(v).lower()}")
        for k, v in self.stats.items():
            lines.append(f"{k}: {v}")
        for k, v in self.witness.items():
            lines.append(f"witness {k}: {v}")
        for f in self.failures:
            lines.append(f"FAILED: {f}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


# ---------------------------------------------------------------- entry windows


def _window(matrix, width: int) -> bool:
    return all(max(row) - min(row) <= width for row in matrix)


def check_prop_zeroone(c: Configuration) -> TheoremReport:
    """Quadratic binomials of configurations with narrow row ranges are circuits.

    Rows within a window {z-1, z, z+1} force every quadratic binomial of the
    toric ideal into C^sf; rows within {z, z+1} force C^sf-sf. The window is
    tested on the matrix as given and, failing that, on its row
    normalization (same toric ideal).
    """
    rep = TheoremReport("configuration")
    mats = [c.matrix]
    try:
        mats.append(normalize_rows(c).matrix)
    except NoIntegerHomogenizingRow:
        pass
    weak = any(_window(m, 2) for m in mats)
    strong = any(_window(m, 1) for m in mats)
    rep.conditions["window_pm1"] = weak
    rep.conditions["window_01"] = strong
    if not weak:
        rep.applicable = False
        return rep
    quads = quadratic_binomials(c)
    rep.stats["quadratics"] = len(quads)
    bad_circuit = [q for q in quads if not circ.is_circuit(q, c)]
    bad_sf = [q for q in quads if not circ.in_filter(q, "sf")]
    bad_sfsf = [q for q in quads if not circ.in_filter(q, "sfsf")]
    rep.conditions["all_circuits"] = not bad_circuit
    rep.conditions["all_sf"] = not bad_sf
    rep.conditions["all_sfsf"] = not bad_sfsf
    rep.expect("quadratics are circuits", not bad_circuit)
    rep.expect("quadratics lie in C^sf", not bad_sf)
    if strong:
        rep.expect("quadratics lie in C^sf-sf", not bad_sfsf)
    for name, bad in (("not_circuit", bad_circuit), ("not_sf", bad_sf)):
        if bad:
            rep.witness[name] = str(bad[0])
    return rep


# ---------------------------------------------------------------- generation


def _relevant_circuits(c: Configuration, gens: list[Binomial]) -> list[circ.Circuit]:
    # A circuit can only act as a move inside fibers of degree >= its own,
    # and a circuit of degree k has support at most 2k.
    top = max((g.degree for g in gens), default=0)
    return [x for x in circ.enumerate_circuits(c, max_support=2 * top) if x.degree <= top]


def generated_by_circuits(
    c: Configuration, which: str, gens: list[Binomial] | None = None
) -> Binomial | None:
    """None if the selected circuits generate I_A, else a generator they miss."""
    if gens is None:
        gens = fibers.minimal_generators(c)
    family = [x.binomial for x in _relevant_circuits(c, gens) if circ.in_filter(x.binomial, which)]
    return fibers.generates(family, gens)


def check_generated_by_circuits(c: Configuration, which: str = "all") -> TheoremReport:
    rep = TheoremReport(f"configuration, filter={which}")
    missing = generated_by_circuits(c, which)
    rep.conditions["generated"] = missing is None
    if missing is not None:
        rep.witness["missing_generator"] = str(missing)
    return rep


def check_veronese(d: int, r: int) -> TheoremReport:
    """V_d^(r): generated by C^sf iff r = 2; for d = 2, r >= 3 not even by C_A."""
    c = veronese(d, r)
    gens = fibers.minimal_generators(c)
    rep = TheoremReport(f"veronese({d},{r})")
    sf = generated_by_circuits(c, "sf", gens)
    every = generated_by_circuits(c, "all", gens)
    rep.conditions["generated_by_sf"] = sf is None
    rep.conditions["generated_by_circuits"] = every is None
    rep.expect("C^sf generates iff r = 2", (sf is None) == (r == 2))
    if r >= 3:
        rep.expect("circuits do not generate for r >= 3", every is not None)
    if every is not None:
        rep.witness["missing_generator"] = str(every)
    if d == 2 and r >= 3:
        # x1*x4 - x2*x3 is alone in its fiber with x2*x3 and is not a circuit,
        # so it sits in every generating set and no circuit set generates.
        z = (0,) * (c.n - 4)
        b = Binomial((1, 0, 0, 1) + z, (0, 1, 1, 0) + z)
        not_circuit = not circ.is_circuit(b, c)
        indisp = fibers.is_indispensable(b, c, gens)
        rep.conditions["x1*x4 - x2*x3 circuit"] = not not_circuit
        rep.conditions["x1*x4 - x2*x3 indispensable"] = indisp
        rep.expect("x1*x4 - x2*x3 is not a circuit", not_circuit)
        rep.expect("x1*x4 - x2*x3 is indispensable", indisp)
        rep.witness["non_circuit_generator"] = str(b)
    return rep


def check_squarefree_veronese(d: int, r: int) -> TheoremReport:
    c = squarefree_veronese(d, r)
    rep = TheoremReport(f"squarefree_veronese({d},{r})")
    missing = generated_by_circuits(c, "sfsf")
    rep.conditions["generated_by_sfsf"] = missing is None
    rep.expect("C^sf-sf generates", missing is None)
    if missing is not None:
        rep.witness["missing_generator"] = str(missing)
    return rep


def check_root(family: str, d: int) -> TheoremReport:
    """Root configurations: quadratic minimal generators, all circuits in C^sf."""
    c = root_config(family, d)
    rep = TheoremReport(f"root({family},{d})")
    gens = fibers.minimal_generators(c)
    quads = quadratic_binomials(c)
    rep.stats["minimal_generators"] = len(gens)
    rep.conditions["generators_quadratic"] = all(g.degree == 2 for g in gens)
    rep.conditions["generators_sf_circuits"] = all(
        circ.is_circuit(g, c) and circ.in_filter(g, "sf") for g in gens
    )
    missing = fibers.generates(quads, gens)
    rep.conditions["quadratics_generate"] = missing is None
    for k in ("generators_quadratic", "generators_sf_circuits", "quadratics_generate"):
        rep.expect(k, rep.conditions[k])
    if missing is not None:
        rep.witness["missing_generator"] = str(missing)
    return rep


# ---------------------------------------------------------------- graphs


@dataclass
class _CircuitFlags:
    redundant: bool
    indispensable: bool
    fundamental: bool


def _circuit_flags(b: Binomial, c: Configuration, gens: list[Binomial], cache: dict) -> _CircuitFlags:
    moves = cache.get(b.degree)
    if moves is None:
        moves = cache[b.degree] = fibers.lower_moves(gens, b.degree)
    redundant = fibers.connected(b.plus, b.minus, moves)
    if redundant:
        indisp = False
    else:
        fiber = fibers.enumerate_fiber(c, c.degree_of(b.plus), limit=3)
        indisp = set(fiber.monomials) == {b.plus, b.minus}
    return _CircuitFlags(redundant, indisp, circ.is_fundamental(b, c))


def check_graph_theorems(g: graphs.Graph, name: str = "graph") -> TheoremReport:
    """Evaluate conditions (i)-(v) for both circuit filters and compare them.

    Unprimed conditions use C^sf and induced patterns with path length >= 2;
    primed ones use C^sf-sf and path length >= 1. (ii)-(iv) quantify over the
    circuits outside the filtered set: all redundant, none indispensable,
    none fundamental.
    """
    rep = TheoremReport(name)
    c = g.incidence
    gb = toric_groebner(c)
    gens = fibers.minimal_generators(c, gb)
    all_circuits = graphs.enumerate_graph_circuits(g)
    rep.stats["circuits"] = len(all_circuits)
    rep.stats["minimal_generators"] = len(gens)
    occ = graphs.odd_cycle_condition(g)
    gap = graphs.normality_gap_witness(g)
    rep.conditions["OCC"] = occ
    if gap is not None:
        rep.witness["normality_gap"] = ",".join(map(str, gap))
    rep.expect("OCC iff no normality gap witness", occ == (gap is None))

    top = max((x.degree for x in gens), default=0)
    cache: dict = {}
    flags: dict[tuple, _CircuitFlags] = {}
    for which, min_len, mark in (("sf", 2, ""), ("sfsf", 1, "'")):
        inside = [x.binomial for x in all_circuits if circ.in_filter(x.binomial, which)]
        outside = [x.binomial for x in all_circuits if not circ.in_filter(x.binomial, which)]
        missing = fibers.generates([b for b in inside if b.degree <= top], gens)
        pattern = graphs.find_pattern(g, min_len)
        for b in outside:
            if b.vector not in flags:
                flags[b.vector] = _circuit_flags(b, c, gens, cache)
        fl = [flags[b.vector] for b in outside]
        cond = {
            "i": missing is None,
            "ii": all(f.redundant for f in fl),
            "iii": not any(f.indispensable for f in fl),
            "iv": not any(f.fundamental for f in fl),
            "v": pattern is None,
        }
        for k, v in cond.items():
            rep.conditions[f"({k}{mark})"] = v
        for k in ("ii", "iii", "iv", "v"):
            rep.expect(f"(i{mark}) iff ({k}{mark})", cond["i"] == cond[k])
        if missing is not None:
            rep.witness[f"missing_generator{mark}"] = str(missing)
        if pattern is not None:
            rep.witness[f"pattern{mark}"] = _format_pattern(pattern)
        rep.expect(f"pattern{mark} witness is valid", pattern is None or graphs.is_pattern(g, pattern, min_len))
    rep.expect("OCC implies (v)", not occ or rep.conditions["(v)"])
    chain_ok = all(
        (not f.fundamental or f.indispensable) and (not f.indispensable or not f.redundant)
        for f in flags.values()
    )
    for b in gens:
        f = _circuit_flags(b, c, gens, cache)
        if f.fundamental and not circ.is_circuit(b, c):
            chain_ok = False
        if f.indispensable and f.redundant:
            chain_ok = False
        if f.redundant:
            rep.failures.append(f"minimal generator {b} reported redundant")
    rep.expect("fundamental => indispensable => not redundant", chain_ok)
    walk_total = all(graphs.classify_walk_type(b, g) is not graphs.WalkType.OTHER for b in gens)
    rep.conditions["generators_walk_shaped"] = walk_total
    rep.expect("every minimal generator has a walk shape", walk_total)
    return rep


def _format_pattern(w: graphs.PatternWitness) -> str:
    def f(vs):
        return "-".join(map(str, vs))

    return f"cycles ({f(w.cycle1)}) ({f(w.cycle2)}), path {f(w.path)}"


def cross_check_graph(g: graphs.Graph, name: str = "graph") -> TheoremReport:
    """Oracle comparisons: walk circuits vs matroid circuits, pattern finder vs oracle."""
    rep = TheoremReport(name)
    walk = {x.binomial for x in graphs.enumerate_graph_circuits(g)}
    matroid = {x.binomial for x in circ.enumerate_circuits(g.incidence)}
    rep.expect("walk circuits equal matroid circuits", walk == matroid)
    if walk != matroid:
        diff = sorted(map(str, walk ^ matroid))
        rep.witness["circuit_difference"] = "; ".join(diff[:5])
    for min_len in (1, 2):
        fast = graphs.find_pattern(g, min_len)
        slow = graphs.pattern_oracle(g, min_len)
        rep.expect(f"find_pattern({min_len}) agrees with oracle", (fast is None) == (slow is None))
        if slow is not None:
            rep.expect(f"oracle witness({min_len}) is valid", graphs.is_pattern(g, slow, min_len))
    return rep


# ---------------------------------------------------------------- two-binomial proposition


def _squarefree(m) -> bool:
    return all(x <= 1 for x in m)


def check_two_binomial_groebner(c: Configuration) -> TheoremReport:
    """Two squarefree minimal generators form a Groebner basis under a lex order.

    Orients the pair so that supp(u+) misses f2 entirely, then uses lex with
    supp(u+) above supp(v+) above everything else. The pair must come out as
    the reduced Groebner basis of its own ideal and of I_A, with coprime
    squarefree leading terms.
    """
    rep = TheoremReport("configuration")
    gens = fibers.minimal_generators(c)
    two = len(gens) == 2 and all(_squarefree(g.plus) and _squarefree(g.minus) for g in gens)
    rep.conditions["two_squarefree_generators"] = two
    if not two:
        rep.applicable = False
        return rep
    candidates = []
    for a, b in ((gens[0], gens[1]), (gens[1], gens[0])):
        for f1 in (a, a.negate()):
            for f2 in (b, b.negate()):
                if not (set(i for i, x in enumerate(f1.plus) if x) & f2.support):
                    candidates.append((f1, f2))
    rep.conditions["orientation_found"] = bool(candidates)
    rep.expect("an orientation with supp(u+) disjoint from f2 exists", bool(candidates))
    if not candidates:
        return rep
    n = c.n
    results = []
    for f1, f2 in candidates:
        top = [i for i in range(n) if f1.plus[i]]
        mid = [i for i in range(n) if f2.plus[i]]
        rest = [i for i in range(n) if i not in top and i not in mid]
        order = MonomialOrder.lex_from(top + mid + rest, n)
        pair = {f1.oriented(order), f2.oriented(order)}
        reduced = set(buchberger([f1, f2], order, n).elements) == pair
        results.append((not reduced, f1, f2, order, top + mid + rest, pair, reduced))
        if reduced:
            break
    # prefer an orientation whose pair is already reduced
    results.sort(key=lambda t: t[0])
    _, f1, f2, order, ranking, pair, reduced = results[0]
    leads = [f1.oriented(order).plus, f2.oriented(order).plus]
    rep.conditions["leads_are_plus_sides"] = leads == [f1.plus, f2.plus]
    rep.conditions["leads_coprime"] = not any(x and y for x, y in zip(*leads))
    rep.conditions["leads_squarefree"] = all(_squarefree(m) for m in leads)
    rep.conditions["pair_is_reduced_gb"] = reduced
    rep.conditions["pair_is_gb_of_toric_ideal"] = set(toric_groebner(c, order).elements) == pair
    for k in ("leads_are_plus_sides", "leads_coprime", "leads_squarefree", "pair_is_reduced_gb", "pair_is_gb_of_toric_ideal"):
        rep.expect(k, rep.conditions[k])
    rep.witness["order"] = ">".join(f"x{i + 1}" for i in ranking)
    rep.witness["f1"] = str(f1)
    rep.witness["f2"] = str(f2)
    return rep


# ---------------------------------------------------------------- corpus


def labeled_connected_graphs(n: int) -> Iterator[graphs.Graph]:
    """Every connected simple graph on vertices 1..n (labeled, n >= 2)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1, 1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        if not _connected(n, edges):
            continue
        yield graphs.Graph(n, tuple(edges))


def _connected(n: int, edges) -> bool:
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, stack = {1}, [1]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def random_connected_graphs(n: int, sample: int, seed: int) -> Iterator[graphs.Graph]:
    """Seeded Erdos-Renyi draws with p from {0.3, 0.5, 0.7}; disconnected draws are skipped."""
    rng = random.Random(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    made = 0
    while made < sample:
        p = rng.choice((0.3, 0.5, 0.7))
        edges = [e for e in pairs if rng.random() < p]
        if not _connected(n, edges):
            continue
        made += 1
        yield graphs.Graph(n, tuple(edges))


def corpus_graphs(max_vertices: int, mode: str, sample: int = 0, seed: int = 0) -> Iterator[graphs.Graph]:
    if mode == "exhaustive":
        if max_vertices > 6:
            raise ValueError("exhaustive corpus supports at most 6 vertices")
        for n in range(2, max_vertices + 1):
            yield from labeled_connected_graphs(n)
    elif mode == "random":
        yield from random_connected_graphs(max_vertices, sample, seed)
    else:
        raise ValueError(f"unknown corpus mode {mode!r}")


def corpus_run(
    max_vertices: int,
    mode: str = "exhaustive",
    sample: int = 0,
    seed: int = 0,
    progress: Callable[[int, graphs.Graph], None] | None = None,
) -> TheoremReport:
    """Run the theorem and oracle checks over a graph corpus; aggregate violations."""
    rep = TheoremReport(f"corpus {mode} max_vertices={max_vertices}" + (f" sample={sample} seed={seed}" if mode == "random" else ""))
    count = 0
    failures: dict[str, int] = {}
    for g in corpus_graphs(max_vertices, mode, sample, seed):
        count += 1
        label = graphs.format_graph(g).strip().replace("\n", "; ")
        for sub in (check_graph_theorems(g, label), cross_check_graph(g, label)):
            for f in sub.failures:
                failures[f] = failures.get(f, 0) + 1
                if len(rep.witness) < 5:
                    rep.witness[f"{len(rep.witness) + 1}"] = f"{f} on {label}"
        if progress is not None:
            progress(count, g)
    rep.stats["graphs"] = count
    rep.stats["violations"] = sum(failures.values())
    for f in sorted(failures):
        rep.failures.append(f"{f} ({failures[f]} graphs)")
    return rep

