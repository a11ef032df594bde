from fractions import Fraction

import numpy as np
import pytest

from twisted_phase_space.algebra.closed_form import ClosedForm, recognize_closed_form
from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import (
    GALILEAN_PHASE, POINCARE, M, P, label, make_generator, p, parse_label, pi, t, x)
from twisted_phase_space.algebra.rewrite import (
    RewriteBudgetExceeded, RewriteRuleset, commutator, multiply, normal_order)
from twisted_phase_space.algebra.scalar import I, ONE, Scalar, i_power
from twisted_phase_space.algebra.series import DeformSeries, min_order
from twisted_phase_space.algebra.substitute import substitute
from twisted_phase_space.algebra.tensor import TensorExpr, tensor_mul
from twisted_phase_space.poincare.classical import classical_rules


def test_scalar_arithmetic():
    assert I * I == -ONE
    assert (Scalar(1, 2) * Scalar(1, -2)) == Scalar(5)
    assert Scalar(1, 1) / Scalar(0, 1) == Scalar(1, -1)
    assert [i_power(n) for n in range(5)] == [ONE, I, -ONE, -I, ONE]
    assert str(I) == 'i' and str(-I) == '-i' and str(Scalar(0, 2)) == '2i'
    assert str(Scalar(1, 1)) == '(1+i)'
    assert Scalar.from_json(Scalar(Fraction(1, 3), -2).to_json()) == Scalar(Fraction(1, 3), -2)
    with pytest.raises(ZeroDivisionError):
        ONE / Scalar(0)


def test_scalar_rejects_inexact_values():
    with pytest.raises(TypeError):
        Scalar.coerce(1 + 2j)
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        ONE + 0.25
    with pytest.raises(TypeError):
        DeformSeries([0.25])
    assert Scalar.coerce(Fraction(1, 4)) == Scalar(Fraction(1, 4))


def test_series_truncation():
    a = DeformSeries([1, 1], order=3)
    fourth = a * a * a * a
    assert fourth.coeffs == (1, 4, 6, 4)
    assert (a * DeformSeries([1, 1], order=1)).order == 1
    assert DeformSeries([1, 2, 3]).reflect() == DeformSeries([1, -2, 3])
    assert DeformSeries([1]).shift(2) == DeformSeries.monomial(1, 2)
    assert min_order(None, 4, 2) == 2 and min_order(None, None) is None
    with pytest.raises(ValueError):
        DeformSeries([1], order=-1)


def test_series_text():
    assert DeformSeries([0, 1, -1]).to_str() == 's - s^2'
    assert DeformSeries([0, Scalar(0, 2)]).to_str('sbar') == '2i*sbar'


def test_generator_labels():
    sign, g = make_generator('M', 2, 1)
    assert sign == -1 and g == M(1, 2)
    assert make_generator('M', 1, 1) == (0, None)
    for g in POINCARE + GALILEAN_PHASE:
        assert parse_label(label(g)) == g
    assert label(parse_label('L^1_2')) == 'L^1_2'
    with pytest.raises(ValueError):
        parse_label('M_21')
    with pytest.raises(ValueError):
        make_generator('P', 4)


def test_antisymmetric_named_generator():
    assert NCExpr.named('M', 2, 1) == -NCExpr.generator(M(1, 2))
    assert NCExpr.named('M', 3, 3).is_zero()


def test_normal_order_heisenberg():
    # [x, p] = i on one axis, so p x = x p - i
    rules = RewriteRuleset({(p(1), x(1)): NCExpr.scalar(-I)})
    expr = NCExpr.word((p(1), x(1)))
    assert normal_order(expr, rules) == NCExpr.word((x(1), p(1))) + NCExpr.scalar(-I)
    assert commutator(NCExpr.generator(x(1)), NCExpr.generator(p(1)), rules) == NCExpr.scalar(I)
    # p p x -> x p p - 2i p
    expected = NCExpr.word((x(1), p(1), p(1))) + NCExpr.generator(p(1)).scale(Scalar(0, -2))
    assert normal_order(NCExpr.word((p(1), p(1), x(1))), rules) == expected


def test_rewrite_rule_orientation():
    rules = RewriteRuleset()
    rules.add(x(1), p(1), NCExpr.scalar(I))
    assert rules.bracket(x(1), p(1)) == NCExpr.scalar(I)
    assert rules.bracket(p(1), x(1)) == NCExpr.scalar(-I)
    assert rules.bracket(x(1), p(2)) is None


def test_rewrite_budget():
    looping = RewriteRuleset({(p(1), x(1)): NCExpr.word((p(1), x(1)))})
    with pytest.raises(RewriteBudgetExceeded, match='rewrite budget exceeded'):
        looping.normal_word((p(1), x(1)))

    tight = RewriteRuleset({(p(1), x(1)): NCExpr.scalar(-I)}, budget=2)
    with pytest.raises(RewriteBudgetExceeded):
        tight.normal_word((p(1),) * 3 + (x(1),) * 3)


def test_tensor_product_legs():
    rules = RewriteRuleset({(p(1), x(1)): NCExpr.scalar(-I)})
    lhs = TensorExpr.product(NCExpr.generator(p(1)), NCExpr.unit())
    rhs = TensorExpr.product(NCExpr.generator(x(1)), NCExpr.generator(p(1)))
    product = tensor_mul(lhs, rhs, rules)
    expected = (TensorExpr.product(NCExpr.word((x(1), p(1))), NCExpr.generator(p(1)))
                + TensorExpr.product(NCExpr.scalar(-I), NCExpr.generator(p(1))))
    assert product == expected
    assert TensorExpr.wedge(NCExpr.generator(P(1)), NCExpr.generator(P(1))).is_zero()
    assert product.append_unit(0).arity == 3


def test_recognize_linear_and_constant():
    expr = NCExpr.word((x(2),), DeformSeries.monomial(Scalar(0, 2), 1, 4), 4)
    form = recognize_closed_form(expr)
    assert form.shape == 'linear' and str(form) == '2i*s*x_2'
    assert form.to_latex() == r'(i/\xi) x_2'
    assert recognize_closed_form(NCExpr.scalar(I, 4)).shape == 'constant'


def test_recognize_trigonometric():
    for shape, multiple in (('cos', 1), ('sin', 1), ('cosh', 1), ('sinh', 2)):
        form = ClosedForm(shape, Scalar(0, -1), p(3), Fraction(multiple))
        recognized = recognize_closed_form(form.expand(6))
        assert recognized == form
    cosh = ClosedForm('cosh', -I, p(2))
    assert str(cosh) == '-i*cosh(s*p_2)'
    assert cosh.to_latex() == r'-i\cosh\left(\frac{p_2}{2\xi}\right)'


def test_recognize_rejects_mixed_series():
    expr = NCExpr.generator(p(1), 4) + NCExpr.word((p(2), p(2)), DeformSeries.monomial(1, 2, 4), 4)
    assert recognize_closed_form(expr) is None


def test_closed_form_derivative():
    form = ClosedForm('sin', I, p(3))
    derivative = form.derivative(p(3))
    assert derivative.shape == 'cos' and derivative.s_power == 1 and derivative.prefactor == I
    assert form.derivative(p(1)).is_zero()
    assert ClosedForm.from_json(form.to_json()) == form


def test_substitute_grades_by_c():
    # x_0 = c t, p_0 = pi_0 / c
    mapping = {x(0): (1, t()), p(0): (-1, pi(0))}
    expr = NCExpr.word((x(0), p(0))) + NCExpr.generator(x(0))
    graded = substitute(expr, mapping)
    assert graded.component(0) == NCExpr.word((t(), pi(0)))
    assert graded.component(1) == NCExpr.generator(t())
    assert graded.leading_power() == 1


def test_substitute_with_constant_factors():
    # x_0 = -2 c t, p_0 = (i/2) pi_0 / c
    mapping = {x(0): (1, t(), Scalar(-2)), p(0): (-1, pi(0), Scalar(0, Fraction(1, 2)))}
    expr = NCExpr.word((x(0), p(0))) + NCExpr.generator(x(0))
    graded = substitute(expr, mapping)
    assert graded.component(0) == NCExpr.word((t(), pi(0))).scale(Scalar(0, -1))
    assert graded.component(1) == NCExpr.generator(t()).scale(Scalar(-2))
    with pytest.raises(TypeError):
        substitute(expr, {x(0): (1, t(), 0.5)})


CANONICAL = (x(1), p(1), x(2), p(2))


def canonical_rules(**kwargs):
    return RewriteRuleset({(p(1), x(1)): NCExpr.scalar(-I), (p(2), x(2)): NCExpr.scalar(-I)}, **kwargs)


def random_expr(rng, alphabet, order=3):
    """At most three terms, words of one to three letters, small Gaussian-integer series."""
    expr = NCExpr.zero(order)
    for _ in range(rng.integers(1, 4)):
        word = tuple(alphabet[int(i)] for i in rng.integers(0, len(alphabet), rng.integers(1, 4)))
        coeffs = [Scalar(int(rng.integers(-3, 4)), int(rng.integers(-3, 4))) for _ in range(2)]
        expr = expr + NCExpr.word(word, DeformSeries(coeffs, order), order)
    return expr


def test_free_product_is_associative():
    rng = np.random.default_rng(0)
    for _ in range(200):
        a, b, c = (random_expr(rng, CANONICAL) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_addition_is_commutative_and_associative():
    rng = np.random.default_rng(1)
    for _ in range(200):
        a, b, c = (random_expr(rng, CANONICAL) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert (a - a).is_zero()


def test_normal_ordered_product_is_associative():
    rng = np.random.default_rng(2)
    rules = canonical_rules()
    for _ in range(200):
        a, b, c = (random_expr(rng, CANONICAL) for _ in range(3))
        left = normal_order(multiply(a, b, rules) * c, rules)
        right = normal_order(a * multiply(b, c, rules), rules)
        assert left == right


@pytest.mark.slow
def test_normal_ordered_poincare_product_is_associative():
    rng = np.random.default_rng(3)
    rules = classical_rules()
    for _ in range(200):
        a, b, c = (random_expr(rng, POINCARE) for _ in range(3))
        assert multiply(multiply(a, b, rules), c, rules) == multiply(a, multiply(b, c, rules), rules)


@pytest.mark.parametrize('alphabet, rules', [
    (CANONICAL, canonical_rules()),
    (POINCARE, classical_rules()),
])
def test_normal_order_is_idempotent(alphabet, rules):
    rng = np.random.default_rng(4)
    for _ in range(100):
        once = normal_order(random_expr(rng, alphabet) * random_expr(rng, alphabet), rules)
        assert normal_order(once, rules) == once


def test_normal_order_truncation_coherence():
    rng = np.random.default_rng(5)
    rules = canonical_rules()
    for _ in range(50):
        expr = random_expr(rng, CANONICAL, order=4) * random_expr(rng, CANONICAL, order=4)
        assert normal_order(expr, rules).truncate(2) == normal_order(expr.truncate(2), rules)


def test_rewrite_memo_is_bounded():
    bounded = canonical_rules(memo_limit=3)
    unbounded = canonical_rules()
    for n in range(1, 6):
        word = NCExpr.word((p(1),) * n + (x(1),) * 2)
        assert normal_order(word, bounded) == normal_order(word, unbounded)
        assert len(bounded._memo) <= 3


def test_frozen_ruleset_rejects_rules():
    rules = canonical_rules().freeze()
    with pytest.raises(RuntimeError, match='frozen'):
        rules.add(x(1), x(2), NCExpr.scalar(I))
    with pytest.raises(RuntimeError):
        classical_rules().add(M(1, 2), P(3), NCExpr.scalar(I))
    merged = rules.union(RewriteRuleset())
    merged.add(x(1), x(2), NCExpr.scalar(I))
    assert merged.bracket(x(1), x(2)) == NCExpr.scalar(I)
