"""End-to-end smoke tests for the python module."""

import pytest

import vfl


@pytest.fixture(scope="module")
def sig():
    return vfl.std_signature()


@pytest.fixture(scope="module")
def model():
    return vfl.std_model()


def test_parse_print_roundtrip(sig):
    t = vfl.parse_term("S(x(0) ...x x(5))", sig)
    assert str(t) == "S(x(0) ...x x(5))"
    assert vfl.parse_term(str(t), sig) == t
    assert vfl.complexity(t) == 3
    assert vfl.free_vars(t) == set()


def test_headline_sums(sig, model):
    big = vfl.parse_term("S{x=0..100}(x)", sig)
    assert vfl.interp_syntactic(big, model) == 5050
    squares = vfl.parse_term("S{x=0..10}(*(x,x))", sig)
    assert vfl.interp_semantic(squares, model) == 385


def test_both_interpretations_agree(sig, model):
    t = vfl.parse_term("S(S(y(0) ...y y(x))(0) ...x S(y(0) ...y y(x))(3))", sig)
    s = vfl.Assignment({"x": 2})
    assert vfl.interp_syntactic(t, model, s) == vfl.interp_semantic(t, model, s)


def test_substitution_and_capture(sig):
    r = vfl.parse_term("S(*(x,y)(0) ...y *(x,y)(10))", sig)
    assert not vfl.substitutable(vfl.Term.var("y"), "x", r)
    assert vfl.substitutable(vfl.Term.numeral(3), "x", r)
    out = vfl.substitute(r, "x", vfl.Term.numeral(2))
    assert str(out) == "S(*(2,y)(0) ...y *(2,y)(10))"


def test_satisfaction_three_valued(sig, model):
    f = vfl.parse_formula("exists x. (x <= y & =( +(x,x), y))", sig)
    assert vfl.satisfies(f, model, vfl.Assignment({"y": 4})) is True
    assert vfl.satisfies(f, model, vfl.Assignment({"y": 3})) is False
    open_ended = vfl.parse_formula("forall x. =(x,x)", sig)
    assert vfl.satisfies(open_ended, model) is None


def test_qelim(sig, model):
    f = vfl.parse_formula("exists k. (k <= x & =( +(k,k), x))", sig)
    uqf = vfl.classify(f, sig)
    t = vfl.eliminate(uqf)
    for n in range(12):
        value = vfl.interp_syntactic(t, model, vfl.Assignment({"x": n}))
        assert value == (1 if n % 2 == 0 else 0)
    with pytest.raises(vfl.NotUqfError):
        vfl.classify(vfl.parse_formula("exists x. =(x,y)", sig), sig)


def test_borel_membership():
    iota = vfl.IotaTable(1, {}, [1, 2])
    sentence = vfl.build_sentence(iota, 1, "sigma")
    assert vfl.check_membership([1, 2, 7], iota, sentence) is True
    assert vfl.check_membership([3, 1], iota, sentence) is None
    assert vfl.check_membership([1], iota, sentence) is None


def test_budget_is_enforced(sig, model):
    wide = vfl.parse_term("S{x=0..100000}(x)", sig)
    with pytest.raises(vfl.BudgetExceededError):
        vfl.interp_syntactic(wide, model)


def test_custom_model(sig):
    m = vfl.Model(sig)
    m.interpret_fixed("+", lambda args: args[0] + args[1])
    m.interpret_fixed("*", lambda args: args[0] * args[1])
    m.interpret_fixed("d", lambda args: 1 if args[0] == args[1] else 0)
    m.interpret_fixed("<=", lambda args: 1 if args[0] <= args[1] else 0)
    m.interpret_variadic("S", lambda args: max(args))
    m.interpret_variadic("G", lambda args: 1 if any(args) else 0)
    t = vfl.parse_term("S{x=0..5}(*(x,x))", sig)
    assert vfl.interp_semantic(t, m) == 25  # S reinterpreted as max


def test_generator_determinism(sig):
    cfg = vfl.GeneratorConfig()
    cfg.seed = 11
    a = vfl.gen_term(cfg, sig)
    b = vfl.gen_term(cfg, sig)
    assert a == b
    assert vfl.parse_term(str(a), sig) == a


def test_props_runner():
    passed, report = vfl.run_props("interp-equiv", 200, seed=42)
    assert passed
    assert "result: PASS" in report
