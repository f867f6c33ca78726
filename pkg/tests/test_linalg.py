from fractions import Fraction

from braidpbw.linalg import CONSTANT, Eliminator, solve_linear


def test_one_equation_two_unknowns():
    sol = solve_linear([{"x": 1, "y": 1}], ["x", "y"])
    assert sol.consistent and sol.dimension == 1
    (b,) = sol.basis
    assert b["x"] + b["y"] == 0 and b


def test_inconsistent():
    sol = solve_linear([{"x": 1, CONSTANT: -1}, {"x": 1, CONSTANT: -2}], ["x"])
    assert not sol.consistent
    assert sol.dimension == -1


def test_particular_solution():
    sol = solve_linear([{"x": 2, CONSTANT: -1}], ["x", "y"])
    assert sol.particular["x"] == Fraction(1, 2)
    assert sol.dimension == 1


def test_free_variables_are_earliest():
    sol = solve_linear([{"a": 1, "b": 1, "c": 1}], ["a", "b", "c"])
    assert sol.dimension == 2
    for b in sol.basis:
        assert sol.evaluate({"a": 1, "b": 1, "c": 1}, b) == 0


def test_eliminator_rank_and_membership():
    e = Eliminator()
    e.insert({0: 1, 1: 1})
    e.insert({1: 1, 2: 1})
    assert e.rank == 2
    assert e.contains({0: 1, 2: -1})
    assert not e.contains({0: 1})
