"""Tests for rendering presentations and expressions back to text."""
from django.test import SimpleTestCase

from presentation.services.elaborate import parse_expression
from presentation.services.parser import parse_expression_ast, parse_presentation
from presentation.services.render import (
    element_to_ast,
    render_expression,
    render_presentation,
    tensor_to_ast,
)
from presentation.tests.helpers import nullplane, preset_source


class RenderExpressionTests(SimpleTestCase):
    def test_minimal_parentheses(self):
        samples = [
            '-(1/z)*(exp(-2*z*Pp) - 1)',
            'K (x) 1 + exp(-2*z*Pp) (x) K',
            '-x - t*v',
            '(a + b)^2',
            'a - (b - c)',
            'a - -b',
        ]
        for text in samples:
            self.assertEqual(render_expression(parse_expression_ast(text)), text)

    def test_redundant_parentheses_dropped(self):
        self.assertEqual(render_expression(parse_expression_ast('((K))*(Pm)')), 'K*Pm')
        self.assertEqual(render_expression(parse_expression_ast('(w/2)*P^2')), 'w/2*P^2')


class RoundTripTests(SimpleTestCase):
    def test_parse_render_parse_is_fixed_point(self):
        for name in ('nullplane', 'kgalilei'):
            ast = parse_presentation(preset_source(name))
            text = render_presentation(ast)
            self.assertEqual(parse_presentation(text), ast)
            self.assertEqual(render_presentation(parse_presentation(text)), text)


class RenderElaboratedTests(SimpleTestCase):
    def setUp(self):
        self.triplet = nullplane(degree=3, zorder=2)
        self.algebra = self.triplet.algebra

    def test_keeps_relation_orientation(self):
        text = render_presentation(self.triplet)
        self.assertIn('[K, Pm] = -2*Pm;', text)
        self.assertIn('[K, Pp] = 2*Pp - 2*z*Pp^2 + 4*z^2*Pp^3/3;', text)
        self.assertIn('pairing U F { K ~ phi, Pm ~ am, Pp ~ ap }', text)

    def test_elaborated_text_parses(self):
        ast = parse_presentation(render_presentation(self.triplet))
        self.assertEqual(ast.algebra('F').generators, ('phi', 'am', 'ap'))

    def test_element_round_trip(self):
        element = parse_expression('Pp*K + (1/3)*z*Pm^2', self.algebra)
        again = parse_expression(render_expression(element_to_ast(element)), self.algebra)
        self.assertEqual(again, element)

    def test_tensor_rendering(self):
        delta = self.algebra.coproduct_of('Pp')
        self.assertEqual(render_expression(tensor_to_ast(delta)), '1 (x) Pp + Pp (x) 1')

    def test_leading_minus_sits_on_first_factor(self):
        text = render_presentation(self.triplet)
        self.assertIn('[ap, am] = -2*z*am;', text)
        for source, expected in (('-2*Pm', '-2*Pm'), ('-z*Pm/3', '-z*Pm/3'), ('-Pp^2', '-Pp^2')):
            element = parse_expression(source, self.algebra)
            tree = element_to_ast(element)
            self.assertEqual(render_expression(tree), expected)
            self.assertEqual(tree, parse_expression_ast(expected))

    def test_negative_tensor_term(self):
        tree = tensor_to_ast(-self.algebra.coproduct_of('Pp'))
        self.assertEqual(render_expression(tree), '-1 (x) Pp - Pp (x) 1')
        self.assertEqual(tree, parse_expression_ast('-1 (x) Pp - Pp (x) 1'))
