import pytest

from src.galoiscover.core import CosetOverflowError, ExitCode, InvalidArgumentError
from src.galoiscover.cosets import CosetTable, Strategy, todd_coxeter
from src.galoiscover.free_groups import FreeWord
from src.galoiscover.monodromy import full_factorization
from src.galoiscover.van_kampen import GroupPresentation, presentation_G, presentation_G1


def presentation(generators, relators):
    return GroupPresentation(range(1, generators + 1), [FreeWord(letters) for letters in relators])


def coxeter_A(rank):
    """
    Coxeter presentation of the symmetric group on rank + 1 points
    """
    relators = []
    for s in range(1, rank + 1):
        relators.append((s, s))
        for t in range(s + 1, rank + 1):
            relators.append((s, t) * (3 if t == s + 1 else 2))
    return presentation(rank, relators)


def test_cyclic_group_of_order_two():
    assert todd_coxeter(presentation(1, [(1, 1)])).order == 2


def test_trivial_group():
    for strategy in Strategy:
        assert todd_coxeter(presentation(1, [(1,)]), strategy=strategy).order == 1


def test_symmetric_group_S4():
    for strategy in Strategy:
        result = todd_coxeter(coxeter_A(3), strategy=strategy)
        assert result.order == 24
        assert result.strategy is strategy
        assert result.max_cosets_used >= 24


def test_symmetric_group_S5():
    assert todd_coxeter(coxeter_A(4)).order == 120


def test_dihedral_group():
    # <r, s | r^4, s^2, (s r)^2>
    p = presentation(2, [(1, 1, 1, 1), (3, 3), (3, 1, 3, 1)])
    for strategy in Strategy:
        assert todd_coxeter(p, strategy=strategy).order == 8


def test_free_group_overflows():
    p = presentation(2, [])
    for strategy in Strategy:
        with pytest.raises(CosetOverflowError) as err:
            todd_coxeter(p, max_cosets=10, strategy=strategy)
        assert err.value.exit_code == ExitCode.OVERFLOW
        assert err.value.max_cosets == 10


def test_table_is_closed_after_enumeration():
    table = CosetTable(coxeter_A(3))
    table.enumerate(Strategy.HLT)
    assert table.is_complete()
    assert table.is_closed()
    assert len(table.omega) == 24


def test_strategy_from_value():
    assert todd_coxeter(coxeter_A(2), strategy='felsch').order == 6


def test_invalid_budget():
    with pytest.raises(InvalidArgumentError):
        CosetTable(coxeter_A(2), max_cosets=0)


def test_relator_outside_generators():
    with pytest.raises(InvalidArgumentError):
        CosetTable(presentation(1, [(3, 3)]))


def test_raw_G1_for_four_planes():
    p = presentation_G1(presentation_G(full_factorization(4)))
    for strategy in Strategy:
        assert todd_coxeter(p, strategy=strategy).order == 24
