from cli.services.base import PresentationCommand
from hopf.services.structure import pair
from presentation.services.elaborate import parse_expression


class Command(PresentationCommand):
    help = 'Evaluate the dual pairing <H, F>'

    def add_command_arguments(self, parser):
        parser.add_argument('h', help='Element of the first algebra')
        parser.add_argument('f', help='Element of the second algebra')

    def run(self, triplet, config, **options):
        h = parse_expression(options['h'], triplet)
        f = parse_expression(options['f'], triplet)
        self.stdout.write(pair(h, f).render(triplet.algebra.parameter))
