import pytest

from unitsep import groups
from unitsep.errors import (
    CosetOverflow,
    EmptyPresentation,
    GroupTooLarge,
    PresentationFormatError,
    SpecSyntaxError,
)
from unitsep.presentations import (
    Atom,
    Power,
    Product,
    Semidirect,
    commutator,
    h_presentation,
    parse_presentation,
    parse_presentation_file,
    parse_spec,
    predicted_order,
    print_spec,
    print_word,
    reduce_word,
    resolve,
    todd_coxeter,
)

ORDER_18 = "<a, b, x | a^3 = b^3 = x^2 = 1, a b = b a, x a = b x>"


@pytest.mark.parametrize(
    "text",
    ["Q8 x C7", "sdp(3,8,2)", "D16+", "D16-", "DD+", "D8YQ8", "Q8 x C2^10", "Hn(1)", "C4 x Q8 x C3"],
)
def test_print_spec_round_trips(text):
    node = parse_spec(text)
    assert print_spec(node) == text
    assert parse_spec(print_spec(node)) == node


def test_parse_tree_shapes():
    assert parse_spec("Q8 x C7") == Product(Atom("Q", 8), Atom("C", 7))
    assert parse_spec("C2^3") == Power(Atom("C", 2), 3)
    assert parse_spec("sdp(4, 4, 3)") == Semidirect(4, 4, 3)
    assert parse_spec("q8 × c3") == Product(Atom("Q", 8), Atom("C", 3))


def test_syntax_error_reports_offset_and_expectations():
    with pytest.raises(SpecSyntaxError) as excinfo:
        parse_spec("Q8 x")
    assert excinfo.value.offset == 4
    assert "C<n>" in excinfo.value.expected
    assert excinfo.value.hint


def test_unknown_letter_is_a_syntax_error():
    with pytest.raises(SpecSyntaxError):
        parse_spec("Z5")


def test_words():
    assert reduce_word((("a", 1), ("a", -1), ("b", 2))) == (("b", 2),)
    assert commutator((("a", 1),), (("b", 1),)) == (("a", -1), ("b", -1), ("a", 1), ("b", 1))
    assert print_word(()) == "1"


def test_relation_chains():
    p = parse_presentation("<a, b | a^2 = b^2 = 1, a b = b a>")
    assert p.generators == ("a", "b")
    assert todd_coxeter(p).order == 4


def test_superscripts_and_commutators():
    p = parse_presentation("<x, y | x⁴ = 1, x² = y², [x, y] = x²>")
    assert groups.is_isomorphic(todd_coxeter(p), groups.dicyclic(8)) is not None


@pytest.mark.parametrize(("spec", "order"), [("DD", 16), ("DD+", 32), ("D8YQ8", 32), (ORDER_18, 18)])
def test_bundled_orders(spec, order):
    assert resolve(spec).order == order


def test_h1_is_generalized_quaternion():
    H1 = todd_coxeter(h_presentation(1))
    assert groups.is_isomorphic(H1, groups.dicyclic(16)) is not None


def test_quotient_of_c4_by_c4():
    G = resolve("sdp(4,4,3) / <a^2 b^2>")
    assert groups.is_isomorphic(G, groups.dicyclic(8)) is not None


def test_d16_variants():
    plus, minus = resolve("D16+"), resolve("D16-")
    assert plus.order == minus.order == 16
    assert groups.is_isomorphic(plus, minus) is None
    assert groups.is_isomorphic(minus, groups.dihedral(16)) is None


def test_predicted_order_guards_materialisation():
    assert predicted_order(parse_spec("Q8 x C2^10")) == 8192
    with pytest.raises(GroupTooLarge):
        resolve("Q8 x C2^10")


def test_coset_overflow():
    p = parse_presentation("<a, b | a b = b a>")
    with pytest.raises(CosetOverflow):
        todd_coxeter(p, max_cosets=50)


def test_presentation_file():
    text = """
    # the quaternion group
    gens: x, y
    x^4 = 1
    x^2 = y^2   # center
    y^-1 x y = x^-1
    """
    G = todd_coxeter(parse_presentation_file(text))
    assert groups.is_isomorphic(G, groups.dicyclic(8)) is not None


def test_presentation_file_errors():
    with pytest.raises(PresentationFormatError):
        parse_presentation_file("x^2 = 1\n")
    with pytest.raises(EmptyPresentation):
        parse_presentation_file("gens:\n")
