"""Adjacency/precedence conversions and move-graph realization."""

import math
import os
import random
import statistics
import time
from itertools import permutations

import pytest

from cdslab import convert, f2, formats, perms
from cdslab.errors import ContractError

DATA = os.path.join(os.path.dirname(__file__), "data")
EXAMPLE_8 = perms.Permutation([4, 5, 2, 6, 1, 7, 3, 8])


def golden(name: str) -> f2.F2Matrix:
    with open(os.path.join(DATA, name), encoding="utf-8") as fh:
        return formats.parse_matrix(fh.read())


class TestPrimitives:
    def test_bidiagonal_ones(self):
        assert convert.bidiagonal_ones(3) == f2.F2Matrix(
            [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
        )
        with pytest.raises(ContractError):
            convert.bidiagonal_ones(0)

    def test_corner_embed(self):
        grown = convert.corner_embed(f2.F2Matrix([[0, 1], [1, 0]]))
        assert grown == f2.F2Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])

    def test_prefix_window_inverse(self):
        rng = random.Random(3)
        for n in (1, 2, 5, 9):
            m = f2.F2Matrix.from_row_bits(
                [rng.getrandbits(n) for _ in range(n)], n
            )
            s = convert.prefix_xor(m)
            # the 2x2 window XOR of the padded prefix sums recovers m
            padded = convert.corner_embed(s)
            # strip the planted corner one before comparing
            recovered = convert.window_xor(padded)
            assert recovered + f2.F2Matrix.from_row_bits(
                [1] + [0] * (n - 1), n
            ) == m


class TestRoundtrip:
    def test_golden_example(self):
        adjacency = golden("overlap_9.txt")
        precedence = golden("precedence_10.txt")
        assert perms.overlap_graph(EXAMPLE_8).adjacency == adjacency
        assert perms.precedence_matrix(EXAMPLE_8) == precedence
        assert convert.adjacency_to_precedence(adjacency) == precedence
        assert convert.precedence_to_adjacency(precedence) == adjacency

    def test_all_small_permutations(self):
        for n in range(1, 6):
            for tup in permutations(range(1, n + 1)):
                pi = perms.Permutation(tup)
                a = perms.overlap_graph(pi).adjacency
                p = convert.adjacency_to_precedence(a)
                assert p == perms.precedence_matrix(pi)
                assert convert.precedence_to_adjacency(p) == a
                assert convert.permutation_from_precedence(p) == pi

    def test_rejects_non_adjacency(self):
        with pytest.raises(ContractError):
            convert.adjacency_to_precedence(f2.F2Matrix([[0, 1], [0, 0]]))
        with pytest.raises(ContractError):
            convert.precedence_to_adjacency(f2.F2Matrix([[0]]))


class TestPrecedencePredicate:
    def test_accepts_permutation_matrices(self):
        for tup in permutations(range(1, 5)):
            p = perms.precedence_matrix(perms.Permutation(tup))
            assert convert.is_precedence_matrix(p)

    def test_rejects_broken_matrices(self):
        good = perms.precedence_matrix(EXAMPLE_8)
        assert convert.is_precedence_matrix(good)
        # symmetric pair both set
        bad = good + f2.F2Matrix.from_row_bits([0] * 9 + [1], 10)
        assert not convert.is_precedence_matrix(bad)
        assert not convert.is_precedence_matrix(f2.F2Matrix([[0, 1]]))
        # a cyclic "order": pairwise antisymmetric but not a total order
        cyc = f2.F2Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert not convert.is_precedence_matrix(cyc)

    def test_unframed_order_rejected(self):
        # a genuine total order that does not start at 0: row sums say the
        # framed walk begins elsewhere
        p = perms.precedence_matrix(perms.Permutation([2, 1]))
        flipped = p.transpose()
        assert convert.is_precedence_matrix(flipped)
        with pytest.raises(ContractError):
            convert.permutation_from_precedence(flipped)


class TestRealize:
    def test_roundtrip_on_derived_graphs(self):
        for tup in permutations(range(1, 6)):
            pi = perms.Permutation(tup)
            m = perms.move_graph(pi)
            witness = convert.realize_move_graph(m)
            assert witness is not None
            assert perms.move_graph(witness) == m

    def test_unrealizable(self):
        # a path centered on the first vertex admits no witness
        m = f2.F2Matrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
        assert convert.realize_move_graph(m) is None

    def test_witness_for_the_edgeless_instance(self):
        m = f2.F2Matrix.zeros(3, 3)
        witness = convert.realize_move_graph(m)
        assert witness == perms.Permutation([2, 3, 4, 1])

    def test_runtime_grows_polynomially(self):
        rng = random.Random(11)
        sizes = (8, 16, 32, 64)
        medians = []
        for k in sizes:
            repeats = []
            for _ in range(5):
                elements = list(range(1, k))
                rng.shuffle(elements)
                m = perms.move_graph(perms.Permutation(elements))
                t0 = time.perf_counter()
                witness = convert.realize_move_graph(m)
                repeats.append(time.perf_counter() - t0)
                assert witness is not None
                assert perms.move_graph(witness) == m
            medians.append(statistics.median(repeats))
        xs = [math.log2(k) for k in sizes]
        ys = [math.log2(t) for t in medians]
        xbar = sum(xs) / len(xs)
        ybar = sum(ys) / len(ys)
        slope = sum(
            (x - xbar) * (y - ybar) for x, y in zip(xs, ys)
        ) / sum((x - xbar) ** 2 for x in xs)
        assert slope < 6.0, f"runtime exponent {slope:.2f} looks superpolynomial"
