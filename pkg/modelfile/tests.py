from django.test import SimpleTestCase

from algebras.factories import TmsAlgebraFactory
from algebras.samples import HAND_LISTED
from duality.constructions import complex_algebra, dual_space
from duality.factories import TmsSpaceFactory
from enumeration.corpus import build_corpus
from modelfile.parser import parse_document, parse_model, tokenize
from modelfile.render import export_model, render_dot, render_model
from modelfile.serializers import ModelExportSerializer
from tensym.exceptions import CycleError, NotALattice, ParseError, SemanticError

B2_TEXT = "algebra { m:1 elements: 0 1 leq: (0,1) N: 0->1 1->0 G: 0->0 1->1 H: 0->0 1->1 }"

B2_RENDERED = """algebra {
  m: 1
  elements: 0 1
  leq: (0,1)
  N: 0->1 1->0
  G: 0->0 1->1
  H: 0->0 1->1
}
"""

B2_DOT = """digraph algebra {
  rankdir=BT;
  node [shape=circle];
  n0 [label="0"];
  n1 [label="1"];
  n0 -> n1 [arrowhead=none];
  n0 -> n1 [style=dashed, label="N"];
  n1 -> n0 [style=dashed, label="N"];
}
"""

K3_DUAL_DOT = """digraph space {
  rankdir=BT;
  node [shape=circle];
  n0 [label="p0"];
  n1 [label="p1"];
  n0 -> n1 [arrowhead=none];
  n0 -> n1 [style=dashed, label="g"];
  n1 -> n0 [style=dashed, label="g"];
  n0 -> n0 [color=purple, label="RG,RH"];
  n1 -> n0 [color=purple, label="RG,RH"];
  n1 -> n1 [color=purple, label="RG,RH"];
}
"""


class TokenizeTests(SimpleTestCase):
    def test_positions_and_comments(self):
        tokens = list(tokenize("space {  # one point\n  g: p->p\n}"))
        self.assertEqual([t.kind for t in tokens], ["name", "{", "name", ":", "name", "arrow", "name", "}", "eof"])
        g = tokens[2]
        self.assertEqual((g.value, g.line, g.column), ("g", 2, 3))

    def test_empty_marker(self):
        self.assertEqual([t.kind for t in tokenize("leq: N/A")][:3], ["name", ":", "none"])


class ParseModelTests(SimpleTestCase):
    def test_two_element_algebra(self):
        self.assertEqual(parse_model(B2_TEXT), TmsAlgebraFactory())

    def test_partial_table(self):
        text = "algebra { m:1 elements: 0 1 leq: (0,1) N: 0->1 G: 0->0 1->1 H: 0->0 1->1 }"
        with self.assertRaisesMessage(SemanticError, "N not total"):
            parse_model(text)

    def test_missing_table(self):
        with self.assertRaisesMessage(SemanticError, "H not total"):
            parse_model("algebra { m:1 elements: 0 1 leq: (0,1) N: 0->1 1->0 G: 0->0 1->1 }")

    def test_one_point_space(self):
        space = parse_model("space { m:1 points: p leq: N/A g: p->p RG: (p,p) RH: (p,p) }")
        self.assertEqual(space, TmsSpaceFactory(labels=("p",)))

    def test_multiline_with_comments(self):
        text = "# the Kleene chain\nalgebra {\n  m: 1  # involutive\n  elements: 0 c 1\n  leq: (0,c) (c,1)\n" \
               "  N: 0->1 c->c 1->0\n  G: 0->0 c->c 1->1\n  H: 0->0 c->c 1->1\n}\n"
        self.assertEqual(parse_model(text), TmsAlgebraFactory(kleene=True))

    def test_unexpected_character_position(self):
        with self.assertRaises(ParseError) as caught:
            parse_model("algebra {\n  m: 1\n  elements: 0 1 $\n}")
        self.assertEqual((caught.exception.line, caught.exception.column), (3, 17))

    def test_unknown_kind(self):
        with self.assertRaises(ParseError) as caught:
            parse_model("lattice { m: 1 }")
        self.assertEqual((caught.exception.line, caught.exception.column), (1, 1))

    def test_unclosed_block(self):
        with self.assertRaises(ParseError):
            parse_model("space { m: 1 points: p")

    def test_unknown_key(self):
        with self.assertRaisesMessage(ParseError, "unknown key 'order'"):
            parse_model("space { m: 1 order: N/A }")

    def test_key_of_the_other_kind(self):
        with self.assertRaisesMessage(SemanticError, "is not a key of algebra models"):
            parse_model("algebra { m: 1 elements: 0 g: 0->0 }")

    def test_unknown_element(self):
        with self.assertRaisesMessage(SemanticError, "unknown element '2' in leq"):
            parse_model(B2_TEXT.replace("(0,1)", "(0,2)"))

    def test_duplicates(self):
        with self.assertRaisesMessage(SemanticError, "listed twice"):
            parse_model(B2_TEXT.replace("elements: 0 1", "elements: 0 1 1"))
        with self.assertRaisesMessage(SemanticError, "given twice"):
            parse_model(B2_TEXT.replace("m:1", "m:1 m:1"))
        with self.assertRaisesMessage(SemanticError, "maps '0' twice"):
            parse_model(B2_TEXT.replace("N: 0->1", "N: 0->1 0->0"))

    def test_bad_degree(self):
        with self.assertRaisesMessage(SemanticError, "m must be one positive integer"):
            parse_model(B2_TEXT.replace("m:1", "m:0"))

    def test_order_errors_pass_through(self):
        with self.assertRaises(CycleError):
            parse_model(B2_TEXT.replace("leq: (0,1)", "leq: (0,1) (1,0)"))
        with self.assertRaises(NotALattice):
            parse_model("algebra { m:1 elements: 0 a b c d 1 leq: (0,a) (0,b) (a,c) (a,d) (b,c) (b,d) (c,1) (d,1) }")

    def test_document_keeps_entries_in_order(self):
        document = parse_document(B2_TEXT)
        self.assertEqual(document.kind, "algebra")
        self.assertEqual(list(document.entries), ["m", "elements", "leq", "N", "G", "H"])


class RenderTests(SimpleTestCase):
    def test_render_two_element(self):
        self.assertEqual(render_model(TmsAlgebraFactory()), B2_RENDERED)

    def test_empty_carrier(self):
        text = render_model(dual_space(TmsAlgebraFactory(trivial=True)))
        self.assertIn("points: N/A", text)
        self.assertEqual(parse_model(text).size, 0)

    def test_round_trip_over_corpus(self):
        structures = [build() for build in HAND_LISTED.values()]
        structures.append(complex_algebra(TmsSpaceFactory(four_cycle=True)))
        for entry in build_corpus(2, {1, 2}):
            structures.extend([entry.space, entry.algebra])
        structures.extend(dual_space(TmsAlgebraFactory(**{trait: True})) for trait in ("kleene", "square", "trivial"))
        for structure in structures:
            self.assertEqual(parse_model(render_model(structure)), structure)

    def test_dot_two_element(self):
        self.assertEqual(render_dot(TmsAlgebraFactory()), B2_DOT)

    def test_dot_kleene_dual(self):
        dot = render_dot(dual_space(TmsAlgebraFactory(kleene=True)))
        self.assertEqual(dot, K3_DUAL_DOT)
        self.assertEqual(dot, render_dot(dual_space(TmsAlgebraFactory(kleene=True))))

    def test_dot_relations_kept_apart(self):
        space = TmsSpaceFactory(swap=True, rel_g=frozenset({(0, 1)}), rel_h=frozenset({(0, 1), (1, 0)}))
        dot = render_dot(space)
        self.assertIn('n0 -> n1 [color=purple, label="RG,RH"];', dot)
        self.assertIn('n1 -> n0 [color=blue, label="RH"];', dot)

    def test_dot_empty_relation(self):
        dot = render_dot(TmsSpaceFactory(swap=True, rel_g=frozenset(), rel_h=frozenset()))
        self.assertNotIn("color=", dot)

    def test_dot_moving_future_operator(self):
        dot = render_dot(TmsAlgebraFactory(future=(1, 1)))
        self.assertIn('n0 -> n1 [style=dotted, color=red, label="G"];', dot)
        self.assertNotIn('label="H"', dot)

    def test_export(self):
        data = ModelExportSerializer(export_model(TmsAlgebraFactory())).data
        self.assertEqual(dict(data), {
            "kind": "algebra",
            "m": 1,
            "elements": ["0", "1"],
            "leq": [["0", "1"]],
            "N": {"0": "1", "1": "0"},
            "G": {"0": "0", "1": "1"},
            "H": {"0": "0", "1": "1"},
        })

    def test_export_space(self):
        data = export_model(TmsSpaceFactory())
        self.assertEqual(data["points"], ["0"])
        self.assertEqual(data["RG"], [["0", "0"]])
        self.assertEqual(data["g"], {"0": "0"})
