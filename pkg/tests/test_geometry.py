import itertools
import random
from collections import Counter

import networkx as nx
import pytest

from spingeom.geometry import (
    ANTICOMMUTING,
    COMMUTING,
    IncidenceStructure,
    SearchLimitExceeded,
    are_isomorphic,
    desargues_configuration,
    design_params,
    dual,
    find_configuration,
    find_isomorphism,
    gq22_check,
    is_projective_plane,
    operator_lines,
    operator_structure,
    structure_from_lines,
    symplectic_polar_space,
)
from spingeom.hypercomplex import fano_from_table
from spingeom.pauli import BoundExceeded, PauliString, all_points, commutes, multiply, parse_string

P = parse_string


def levi_graph(s):
    g = nx.Graph()
    g.add_nodes_from((("p", p) for p in s.points), side=0)
    for i, line in enumerate(s.lines):
        g.add_node(("l", i), side=1)
        g.add_edges_from((("p", p), ("l", i)) for p in line)
    return g


def levi_isomorphic(s1, s2):
    """Independent oracle: side-preserving isomorphism of Levi graphs."""
    return nx.is_isomorphic(
        levi_graph(s1), levi_graph(s2), node_match=lambda a, b: a["side"] == b["side"]
    )


def relabel(s, seed):
    rng = random.Random(seed)
    names = list(s.points)
    shuffled = names[:]
    rng.shuffle(shuffled)
    m = dict(zip(names, (f"q{i}" for i in range(len(names)))))
    m = {p: m[q] for p, q in zip(names, shuffled)}
    lines = [frozenset(m[p] for p in line) for line in s.lines]
    rng.shuffle(lines)
    return IncidenceStructure(points=tuple(sorted(m.values())), lines=tuple(lines))


def brute_force_lines(points):
    pts = set(points)
    out = set()
    for a, b, c in itertools.combinations(sorted(pts), 3):
        if a * b == c:
            out.add(frozenset((a, b, c)))
    return out


class TestOperatorLines:
    def test_two_qubit_census(self):
        lines = operator_lines(all_points(2))
        assert len(lines) == 35
        assert Counter(line.kind for line in lines) == {COMMUTING: 15, ANTICOMMUTING: 20}

    def test_matches_brute_force_triples(self):
        lines = operator_lines(all_points(2))
        assert {frozenset(line.points) for line in lines} == brute_force_lines(all_points(2))

    def test_simple_commuting_line(self):
        lines = operator_lines([P("XI"), P("IX"), P("XX")])
        assert len(lines) == 1 and lines[0].kind == COMMUTING

    def test_homogeneous_and_pairs_partitioned(self):
        pts = all_points(2)
        s = operator_structure(pts)
        assert None not in s.line_kinds
        pc = s.pair_counts()
        assert all(pc[frozenset(pq)] == 1 for pq in itertools.combinations(s.points, 2))
        assert 35 * 3 == len(list(itertools.combinations(pts, 2)))

    def test_homogeneous_three_qubit_sample(self):
        rng = random.Random(3)
        pts = all_points(3)
        for _ in range(500):
            a, b = rng.sample(pts, 2)
            c = a * b
            flags = {commutes(a, b), commutes(b, c), commutes(a, c)}
            assert len(flags) == 1

    def test_orientation_is_positive_cycle(self):
        for line in operator_lines(all_points(2)):
            if line.kind == ANTICOMMUTING:
                a, b, c = line.orientation
                assert multiply(a, b).phase_exp == 1 and multiply(a, b).string == c
                assert multiply(b, c).phase_exp == 1 and multiply(c, a).phase_exp == 1
            else:
                assert line.orientation is None

    def test_rejects_identity(self):
        with pytest.raises(ValueError):
            operator_lines([PauliString.identity(2), P("XX")])


class TestDesign:
    def test_desargues(self):
        d = design_params(desargues_configuration())
        assert (d.v, d.b, d.r, d.k, d.lam) == (10, 10, 3, 3, None)
        assert d.is_configuration and not d.is_2_design and not d.is_projective_plane

    def test_single_line(self):
        s = IncidenceStructure(points=("a", "b", "c"), lines=(frozenset("abc"),))
        d = design_params(s)
        assert (d.v, d.b, d.k) == (3, 1, 3)

    def test_design_identities(self):
        for s in (fano_from_table(), operator_structure(all_points(2)), symplectic_polar_space(2)):
            d = design_params(s)
            if d.is_2_design:
                assert d.lam * (d.v - 1) == d.r * (d.k - 1)
                assert d.b * d.k == d.v * d.r

    def test_counting_identity(self):
        for s in (fano_from_table(), desargues_configuration(), operator_structure(all_points(3))):
            assert sum(len(line) for line in s.lines) == sum(s.point_degrees().values())

    def test_two_qubit_structure_is_steiner_triple_system(self):
        d = design_params(operator_structure(all_points(2)))
        assert (d.v, d.b, d.r, d.k, d.lam) == (15, 35, 7, 3, 1)
        assert d.is_2_design


class TestProjectivePlane:
    def test_fano(self):
        assert is_projective_plane(fano_from_table())

    def test_desargues(self):
        assert not is_projective_plane(desargues_configuration())

    def test_two_qubit_lines(self):
        s = operator_structure(all_points(2))
        assert any(not (l1 & l2) for l1, l2 in itertools.combinations(s.lines, 2))
        assert not is_projective_plane(s)

    def test_degenerate_pencil_fails_quadrangle(self):
        # every pair on one line and lines meet once, but all lines share a point
        s = IncidenceStructure(points=("o", "a", "b"), lines=(frozenset("oa"), frozenset("ob"), frozenset("ab")))
        assert not is_projective_plane(s)


class TestDualAndIsomorphism:
    def test_fano_self_dual(self):
        f = fano_from_table()
        assert are_isomorphic(f, dual(f))
        assert levi_isomorphic(f, dual(f))

    def test_double_dual(self):
        for s in (fano_from_table(), desargues_configuration(), symplectic_polar_space(2)):
            assert are_isomorphic(dual(dual(s)), s)

    def test_degenerate_dual(self):
        s = IncidenceStructure(points=("a", "b", "c"), lines=(frozenset("abc"),))
        d = dual(s)
        assert d.v == 1 and d.b == 3 and all(len(line) == 1 for line in d.lines)
        assert are_isomorphic(dual(d), s)

    def test_fano_minus_line(self):
        f = fano_from_table()
        g = IncidenceStructure(points=f.points, lines=f.lines[:-1])
        assert not are_isomorphic(f, g)

    @pytest.mark.parametrize("seed", range(4))
    def test_relabelled_desargues(self, seed):
        d = desargues_configuration()
        r = relabel(d, seed)
        m = find_isomorphism(d, r)
        assert m is not None
        assert {frozenset(m[p] for p in line) for line in d.lines} == set(r.lines)

    def test_agrees_with_levi_graph_oracle(self):
        # the ten 10_3 configurations are not all isomorphic; mix in non-isomorphic pairs
        structures = [
            fano_from_table(),
            desargues_configuration(),
            symplectic_polar_space(2),
            dual(symplectic_polar_space(2)),
            relabel(desargues_configuration(), 9),
        ]
        pts = all_points(2)
        for seed in range(3):
            rng = random.Random(seed)
            lines = rng.sample(operator_lines(pts), 10)
            structures.append(structure_from_lines(pts, lines))
        for s1, s2 in itertools.combinations(structures, 2):
            assert are_isomorphic(s1, s2) == levi_isomorphic(s1, s2)

    def test_bound(self):
        w = symplectic_polar_space(3)
        with pytest.raises(BoundExceeded):
            are_isomorphic(w, w)


class TestGQ:
    def test_doily(self):
        w = symplectic_polar_space(2)
        assert (w.v, w.b) == (15, 15)
        assert gq22_check(w)
        assert set(w.point_degrees().values()) == {3}
        assert are_isomorphic(w, dual(w))

    def test_fano_is_not_gq(self):
        assert not gq22_check(fano_from_table())

    def test_empty(self):
        assert not gq22_check(IncidenceStructure(points=(), lines=()))

    def test_polar_space_small_cases(self):
        w1 = symplectic_polar_space(1)
        assert (w1.v, w1.b) == (3, 0)
        # totally isotropic lines of W(5,2): 63 points, each on 15 lines
        w3 = symplectic_polar_space(3)
        assert (w3.v, w3.b) == (63, 315)
        assert set(w3.point_degrees().values()) == {15}

    def test_polar_space_bound(self):
        with pytest.raises(BoundExceeded):
            symplectic_polar_space(5)


def brute_force_configurations(pts, lines, census):
    """Enumerate line subsets kind by kind and test point degrees directly."""
    index = {p: i for i, p in enumerate(pts)}
    # 4 bits per point: degrees never exceed 15
    code = {id(l): sum(1 << (4 * index[p]) for p in l.points) for l in lines}
    target = sum(3 << (4 * i) for i in range(len(pts)))
    by_kind = {k: [l for l in lines if l.kind == k] for k in census}
    found = []
    kinds = sorted(census)
    for combo in itertools.product(*(itertools.combinations(by_kind[k], census[k]) for k in kinds)):
        chosen = [l for part in combo for l in part]
        if sum(code[id(l)] for l in chosen) == target:
            found.append(frozenset(l.points for l in chosen))
    return found


class TestFindConfiguration:
    def setup_method(self):
        self.pts = all_points(2)
        self.lines = operator_lines(self.pts)

    def test_rediscovers_doily(self):
        sols = find_configuration(self.pts, self.lines, 15, 3, {COMMUTING: 15, ANTICOMMUTING: 0})
        assert len(sols) == 1
        assert {frozenset(l.labels) for l in sols[0]} == set(symplectic_polar_space(2).lines)

    def test_one_commuting_fourteen_anticommuting(self):
        sols = find_configuration(self.pts, self.lines, 15, 3, {COMMUTING: 1, ANTICOMMUTING: 14})
        assert sols
        for sol in sols:
            s = structure_from_lines(self.pts, sol)
            d = design_params(s)
            assert (d.b, d.r, d.k) == (15, 3, 3)
            assert s.kind_census() == {ANTICOMMUTING: 14, COMMUTING: 1}

    def test_count_matches_brute_force(self):
        census = {COMMUTING: 1, ANTICOMMUTING: 14}
        sols = find_configuration(self.pts, self.lines, 15, 3, census)
        brute = brute_force_configurations(self.pts, self.lines, census)
        assert len(brute) == len(sols) == 30
        assert {frozenset(l.points for l in sol) for sol in sols} == set(brute)

    def test_doily_count_matches_brute_force(self):
        census = {COMMUTING: 15, ANTICOMMUTING: 0}
        assert len(brute_force_configurations(self.pts, self.lines, census)) == 1

    def test_infeasible(self):
        assert find_configuration(self.pts, self.lines, 1, 3, {COMMUTING: 1}) == []
        assert find_configuration(self.pts, self.lines, 15, 3, {COMMUTING: 13, ANTICOMMUTING: 2}) == []
        assert find_configuration(self.pts, self.lines, 15, 3, {COMMUTING: 1}) == []

    def test_first_only_and_determinism(self):
        census = {COMMUTING: 1, ANTICOMMUTING: 14}
        first = find_configuration(self.pts, self.lines, 15, 3, census, first_only=True)
        full = find_configuration(self.pts, self.lines, 15, 3, census)
        assert len(first) == 1 and first[0] in full
        assert full == find_configuration(self.pts, self.lines, 15, 3, census)

    def test_node_limit(self):
        with pytest.raises(SearchLimitExceeded):
            find_configuration(self.pts, self.lines, 15, 3, {COMMUTING: 7, ANTICOMMUTING: 8}, max_nodes=10)


class TestStructureValidation:
    def test_unknown_point(self):
        with pytest.raises(ValueError):
            IncidenceStructure(points=("a", "b"), lines=(frozenset("ac"),))

    def test_duplicate_line(self):
        with pytest.raises(ValueError):
            IncidenceStructure(points=("a", "b"), lines=(frozenset("ab"), frozenset("ab")))

    def test_short_line(self):
        with pytest.raises(ValueError):
            IncidenceStructure(points=("a", "b"), lines=(frozenset("a"),))
