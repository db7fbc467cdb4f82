import pytest

from quiversat.cone import in_cone
from quiversat.lr import flag_quiver, lr_instance, lr_positive, lr_saturation_table
from quiversat.oracle import lr_coefficient
from quiversat.quiver import pairing, topological_order
from quiversat.schofield import SchofieldSession


def test_flag_quiver_shape():
    inst = flag_quiver(3)
    Q = inst.quiver
    assert len(Q) == 7 and len(Q.arrows) == 6
    assert topological_order(Q)[-1] == "c"
    assert inst.n == (1, 2, 1, 2, 1, 2, 3)


def test_instance_m1():
    for k in range(4):
        inst, sigma = lr_instance((k,), (k,), (2 * k,), 1)
        assert inst.quiver.vertices == ("c",)
        assert sigma == (0,)
        assert in_cone(SchofieldSession(inst.quiver), inst.n, sigma).member


def test_instance_m2_member():
    inst, sigma = lr_instance((1,), (1,), (2,), 2)
    assert pairing(sigma, inst.n) == 0
    assert in_cone(SchofieldSession(inst.quiver), inst.n, sigma).member


def test_instance_rejections():
    with pytest.raises(ValueError):
        lr_instance((1,), (1,), (2, 1), 2)
    with pytest.raises(ValueError):
        lr_instance((1, 1, 1), (), (1, 1, 1), 2)
    with pytest.raises(ValueError):
        lr_instance((1, 2), (), (1, 2), 2)


@pytest.mark.parametrize(
    "lam, mu, nu, expected",
    [
        ((2, 1), (2, 1), (3, 2, 1), True),
        ((2,), (2,), (1, 1, 1, 1), False),
        ((1,), (1,), (2, 1), False),
        ((1,), (1,), (1, 1), True),
    ],
)
def test_lr_positive_examples(lam, mu, nu, expected):
    assert lr_positive(lam, mu, nu) is expected


@pytest.mark.parametrize("lam", [(), (1,), (3, 1), (2, 2, 1), (4, 2, 1, 1)])
def test_trivial_factor(lam):
    assert lr_positive(lam, (), lam)
    assert lr_positive((), lam, lam)


def test_saturation_tables():
    assert lr_saturation_table((2, 1), (2, 1), (3, 2, 1), 3) == [(1, True), (2, True), (3, True)]
    assert lr_saturation_table((2,), (2,), (1, 1, 1, 1), 3) == [(1, False), (2, False), (3, False)]
    assert lr_saturation_table((1,), (1,), (3,), 2) == [(1, False), (2, False)]
    with pytest.raises(ValueError):
        lr_saturation_table((1,), (1,), (2,), 0)


def test_symmetry_and_oracle_two_rows():
    for lam in [(2, 1), (3,), (1, 1), (2, 2)]:
        for mu in [(1,), (2,), (1, 1), (2, 1)]:
            for nu in [(3, 1), (2, 2), (4, 1), (3, 2), (2, 2, 1), (4, 2), (3, 3), (3, 2, 1)]:
                if sum(nu) != sum(lam) + sum(mu):
                    continue
                assert lr_positive(lam, mu, nu) == lr_positive(mu, lam, nu)
                assert lr_positive(lam, mu, nu) == (lr_coefficient(lam, mu, nu) > 0)
