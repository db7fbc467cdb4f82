import itertools
import math

import pytest

from quiversat.grids import a2, kronecker, small_quivers
from quiversat.oracle import (
    FiniteField,
    all_representations,
    brute_is_sub,
    gaussian_binomial,
    grassmannian_nonempty,
    lr_coefficient,
    subspaces,
)
from quiversat.quiver import Quiver, reverse
from quiversat.semiinvariant import GroupElement, Representation, act


def partitions(total, max_part=None):
    max_part = total if max_part is None else max_part
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def hook_count(shape):
    """Standard tableaux of a shape, by the hook length formula."""
    size = sum(shape)
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(size) // hooks


# -- fields ------------------------------------------------------------------------

@pytest.mark.parametrize("p, e, modulus", [(2, 2, (1, 1)), (3, 2, (0, 1)), (5, 2, (0, 2)), (3, 1, None)])
def test_modulus_choice(p, e, modulus):
    assert FiniteField(p, e).modulus == modulus


@pytest.mark.parametrize("p, e", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 2)])
def test_field_axioms(p, e):
    F = FiniteField(p, e)
    add, mul = F.add, F.mul
    q = F.q
    for x in range(q):
        assert add[x][0] == x and mul[x][1] == x
        assert add[x][F.neg[x]] == 0
        if x:
            assert sum(mul[x][y] == 1 for y in range(q)) == 1
    for x, y, z in itertools.product(range(q), repeat=3):
        assert mul[x][add[y][z]] == add[mul[x][y]][mul[x][z]]
        assert mul[mul[x][y]][z] == mul[x][mul[y][z]]


def test_field_rejects_bad_parameters():
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(3, 3)


@pytest.mark.parametrize("p, e", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_subspace_counts(p, e):
    F = FiniteField(p, e)
    for n in range(4):
        for k in range(n + 1):
            subs = subspaces(F, n, k)
            assert len(subs) == len(set(subs)) == gaussian_binomial(n, k, F.q)


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(4, 2, 2) == 35


# -- quiver Grassmannians -----------------------------------------------------------------

def companion_kronecker():
    # t^2 + t + 1 has no root in F_2, so its companion has no eigenline there
    return Representation(kronecker(), (2, 2), ([[1, 0], [0, 1]], [[0, 1], [1, 1]]), 2)


def test_companion_eigenline_needs_extension():
    r = companion_kronecker()
    assert not grassmannian_nonempty(kronecker(), r, (1, 1), FiniteField(2, 1))
    assert grassmannian_nonempty(kronecker(), r, (1, 1), FiniteField(2, 2))


def test_grassmannian_trivial_dims():
    r = companion_kronecker()
    F = FiniteField(2, 1)
    assert grassmannian_nonempty(kronecker(), r, (0, 0), F)
    assert grassmannian_nonempty(kronecker(), r, (2, 2), F)


def test_grassmannian_field_mismatch():
    with pytest.raises(ValueError):
        grassmannian_nonempty(kronecker(), companion_kronecker(), (1, 1), FiniteField(3, 1))


def test_monotone_in_search_field():
    Q = kronecker()
    for r in all_representations(Q, (2, 2), 2):
        for a in [(1, 1), (1, 2), (2, 1), (1, 0)]:
            if grassmannian_nonempty(Q, r, a, FiniteField(2, 1)):
                assert grassmannian_nonempty(Q, r, a, FiniteField(2, 2))


def test_invariant_under_group_action():
    Q = Quiver(("u", "v", "w"), (("u", "v"), ("v", "w"), ("u", "w")))
    F = FiniteField(2, 1)
    g = GroupElement(([[1, 1], [0, 1]], [[1]], [[0, 1], [1, 1]]), field=2)
    for k, r in enumerate(all_representations(Q, (2, 1, 2), 2)):
        if k % 7:
            continue
        moved = act(g, r)
        for a in [(1, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 0)]:
            assert grassmannian_nonempty(Q, r, a, F) == grassmannian_nonempty(Q, moved, a, F)


# -- brute force ------------------------------------------------------------------------------

def test_brute_examples():
    assert not brute_is_sub(a2(), (1, 0), (1, 1), p=3)
    assert brute_is_sub(a2(), (0, 1), (1, 1), p=3)
    assert brute_is_sub(kronecker(), (1, 1), (2, 2), p=3, extension=2)
    assert not brute_is_sub(kronecker(), (1, 1), (2, 2), p=3, extension=1)


def test_feasibility_guard():
    with pytest.raises(ValueError):
        brute_is_sub(kronecker(3), (1, 1), (3, 3), p=3)


TINY = [Q for _, Q in small_quivers(3, 2)]


@pytest.mark.parametrize("Q", TINY)
def test_boxes_match_enumeration(Q):
    for n in itertools.product(range(2), repeat=len(Q)):
        for a in itertools.product(*(range(d + 1) for d in n)):
            boxes = brute_is_sub(Q, a, n, p=2, extension=2)
            assert boxes == brute_is_sub(Q, a, n, p=2, extension=2, method="enumerate")


def test_boxes_match_enumeration_kronecker():
    Q = kronecker()
    for a in itertools.product(range(3), repeat=2):
        assert brute_is_sub(Q, a, (2, 2), p=2) == brute_is_sub(Q, a, (2, 2), p=2, method="enumerate")


@pytest.mark.parametrize("Q", TINY)
def test_oracle_duality(Q):
    R = reverse(Q)
    for n in itertools.product(range(3), repeat=len(Q)):
        for a in itertools.product(*(range(d + 1) for d in n)):
            b = tuple(x - y for x, y in zip(n, a))
            assert brute_is_sub(Q, a, n, p=2) == brute_is_sub(R, b, n, p=2)


# -- Littlewood-Richardson --------------------------------------------------------------------

@pytest.mark.parametrize(
    "lam, mu, nu, c",
    [
        ((1,), (1,), (2,), 1),
        ((1,), (1,), (1, 1), 1),
        ((2, 1), (2, 1), (3, 2, 1), 2),
        ((2,), (2,), (1, 1, 1, 1), 0),
        ((1,), (1,), (2, 1), 0),
        ((2, 1), (), (2, 1), 1),
    ],
)
def test_lr_examples(lam, mu, nu, c):
    assert lr_coefficient(lam, mu, nu) == c


def test_lr_symmetry():
    for a, b in itertools.product(range(5), repeat=2):
        for lam in partitions(a):
            for mu in partitions(b):
                for nu in partitions(a + b):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_lr_standard_tableaux_identity():
    # sum_nu c * f^nu counts shuffles of a lam-tableau with a mu-tableau
    for a, b in itertools.product(range(1, 5), repeat=2):
        for lam in partitions(a):
            for mu in partitions(b):
                total = sum(lr_coefficient(lam, mu, nu) * hook_count(nu) for nu in partitions(a + b))
                assert total == math.comb(a + b, a) * hook_count(lam) * hook_count(mu)
